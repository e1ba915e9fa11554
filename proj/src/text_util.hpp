#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace masip::detail {

bool is_valid_utf8(std::string_view text);
// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split_ws(std::string_view line);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace masip::detail
