#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "masip/error.hpp"
#include "masip/isa_catalog.hpp"

namespace masip {

enum class ParseMode { Strict, Lenient };

ParseMode parse_mode_from_string(std::string_view s);
std::string_view to_string(ParseMode mode);

/// Strict-mode rejection of an unknown mnemonic.
class UnknownMnemonicError : public InputError {
 public:
  UnknownMnemonicError(std::string file, std::size_t line, std::string token);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string token_;
};

using MnemonicCounts = std::map<std::string, std::size_t>;

struct ParseResult {
  MnemonicSet used;
  MnemonicCounts counts;
  std::set<std::string> unknown;
  // Instruction lines whose mnemonic resolved against the catalog.
  std::size_t accepted_lines = 0;
};

/// Extracts static mnemonic usage from one assembly listing.
///
/// Comments (the catalog's line markers plus /* */ blocks), blank lines,
/// directives and bare labels are skipped. On a label-prefixed line the token
/// after the label is the mnemonic. `source` only labels diagnostics.
ParseResult parse_assembly(std::string_view text, const IsaCatalog& catalog, ParseMode mode,
                           std::string_view source = "<input>");

/// Static instruction usage of one application.
struct InstructionProfile {
  std::string application;
  std::string domain;
  MnemonicSet used;
  MnemonicCounts counts;
  std::set<std::string> unknown;

  bool operator==(const InstructionProfile&) const = default;
};

/// Parses every file of one application and merges the results.
InstructionProfile build_profile(std::string application, std::string domain,
                                 std::span<const std::filesystem::path> files,
                                 const IsaCatalog& catalog, ParseMode mode);

nlohmann::ordered_json to_json(const InstructionProfile& profile);
InstructionProfile profile_from_json(const nlohmann::json& j);

}  // namespace masip
