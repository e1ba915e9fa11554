#include "masip/isa_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "masip/error.hpp"
#include "text_util.hpp"

namespace masip {
namespace {

bool valid_mnemonic(std::string_view m) {
  return !m.empty() && std::none_of(m.begin(), m.end(), [](unsigned char c) {
    return std::isspace(c) || std::isupper(c);
  });
}

[[noreturn]] void fail_at(std::string_view source, std::size_t line, const std::string& what) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

const std::vector<std::string>& IsaCatalog::default_line_comments() {
  static const std::vector<std::string> markers{"@", "#", ";"};
  return markers;
}

IsaCatalog::IsaCatalog(std::string name, const std::vector<std::string>& mnemonics,
                       std::map<std::string, std::string> aliases,
                       std::vector<std::string> line_comments)
    : name_(std::move(name)), aliases_(std::move(aliases)), line_comments_(std::move(line_comments)) {
  if (name_.empty()) throw InputError("catalog has no name");
  if (mnemonics.empty()) throw InputError("catalog '" + name_ + "' is empty");
  for (const auto& m : mnemonics) {
    if (!valid_mnemonic(m)) throw InputError("invalid mnemonic '" + m + "'");
    if (!mnemonics_.insert(m).second) throw InputError("duplicate mnemonic '" + m + "'");
  }
  for (const auto& [alias, target] : aliases_) {
    if (!valid_mnemonic(alias)) throw InputError("invalid alias '" + alias + "'");
    if (mnemonics_.contains(alias))
      throw InputError("alias '" + alias + "' collides with a mnemonic");
    if (!mnemonics_.contains(target))
      throw InputError("alias '" + alias + "' targets unknown mnemonic '" + target + "'");
  }
  for (const auto& marker : line_comments_)
    if (marker.empty()) throw InputError("empty comment marker");
}

bool IsaCatalog::contains(std::string_view mnemonic) const {
  return mnemonics_.contains(std::string(mnemonic));
}

Lookup IsaCatalog::canonicalize(std::string_view raw) const {
  std::string lower = to_lower(raw);
  if (mnemonics_.contains(lower)) return {std::move(lower), true};
  if (auto it = aliases_.find(lower); it != aliases_.end()) return {it->second, true};
  return {std::move(lower), false};
}

std::string IsaCatalog::serialize() const {
  std::ostringstream out;
  out << "name " << name_ << '\n';
  if (line_comments_ != default_line_comments()) {
    out << "comment";
    for (const auto& m : line_comments_) out << ' ' << m;
    out << '\n';
  }
  for (const auto& m : mnemonics_) out << m << '\n';
  for (const auto& [alias, target] : aliases_) out << "alias " << alias << ' ' << target << '\n';
  return out.str();
}

IsaCatalog parse_catalog(std::string_view text, std::string_view source) {
  if (!detail::is_valid_utf8(text)) throw InputError(std::string(source) + ": not valid UTF-8");

  std::optional<std::string> name;
  std::vector<std::string> mnemonics;
  MnemonicSet seen;
  std::map<std::string, std::string> aliases;
  std::optional<std::vector<std::string>> comments;

  std::size_t lineno = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++lineno;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const std::string keyword = to_lower(tokens.front());
    if (!name) {
      if (keyword != "name" || tokens.size() != 2)
        fail_at(source, lineno, "expected 'name <identifier>' as the first entry");
      name = std::string(tokens[1]);
      continue;
    }
    if (tokens.size() == 1) {
      std::string m = to_lower(tokens[0]);
      if (!seen.insert(m).second) fail_at(source, lineno, "duplicate mnemonic '" + m + "'");
      mnemonics.push_back(std::move(m));
    } else if (keyword == "alias") {
      if (tokens.size() != 3) fail_at(source, lineno, "expected 'alias <alias> <canonical>'");
      std::string key = to_lower(tokens[1]);
      if (aliases.contains(key)) fail_at(source, lineno, "duplicate alias '" + key + "'");
      aliases.emplace(std::move(key), to_lower(tokens[2]));
    } else if (keyword == "comment") {
      if (comments) fail_at(source, lineno, "comment markers declared twice");
      comments.emplace(tokens.begin() + 1, tokens.end());
    } else if (keyword == "name") {
      fail_at(source, lineno, "'name' declared more than once");
    } else {
      fail_at(source, lineno, "unrecognised entry '" + std::string(line) + "'");
    }
  }
  if (!name) throw InputError(std::string(source) + ": missing 'name' line");
  if (mnemonics.empty()) throw InputError(std::string(source) + ": catalog declares no mnemonics");

  // Report alias problems with the source prefix; the constructor re-checks.
  for (const auto& [alias, target] : aliases) {
    if (seen.contains(alias))
      throw InputError(std::string(source) + ": alias '" + alias + "' collides with a mnemonic");
    if (!seen.contains(target))
      throw InputError(std::string(source) + ": alias '" + alias + "' targets unknown mnemonic '" +
                       target + "'");
  }
  try {
    return IsaCatalog(std::move(*name), mnemonics, std::move(aliases),
                      comments ? std::move(*comments) : IsaCatalog::default_line_comments());
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

IsaCatalog load_catalog(const std::filesystem::path& path) {
  return parse_catalog(detail::read_file(path), path.string());
}

}  // namespace masip
