#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace masip {

using MnemonicSet = std::set<std::string>;

/// Result of looking a raw token up in a catalog. Unknown tokens are a
/// value, not an error; callers decide how strict to be.
struct Lookup {
  std::string mnemonic;  // canonical mnemonic, or the lowercased raw token
  bool known = false;

  bool operator==(const Lookup&) const = default;
};

/// The complete instruction set of one target architecture.
///
/// Immutable once constructed. Every alias resolves to a member of
/// `mnemonics()` and no alias key shadows a member.
class IsaCatalog {
 public:
  static const std::vector<std::string>& default_line_comments();

  /// Validates and builds a catalog. Throws InputError on invariant violations.
  IsaCatalog(std::string name, const std::vector<std::string>& mnemonics,
             std::map<std::string, std::string> aliases = {},
             std::vector<std::string> line_comments = default_line_comments());

  const std::string& name() const noexcept { return name_; }
  const MnemonicSet& mnemonics() const noexcept { return mnemonics_; }
  const std::map<std::string, std::string>& aliases() const noexcept { return aliases_; }
  const std::vector<std::string>& line_comments() const noexcept { return line_comments_; }
  std::size_t size() const noexcept { return mnemonics_.size(); }

  bool contains(std::string_view mnemonic) const;
  Lookup canonicalize(std::string_view raw) const;

  /// Catalog file text in canonical order: name, sorted mnemonics, sorted aliases.
  std::string serialize() const;

  bool operator==(const IsaCatalog&) const = default;

 private:
  std::string name_;
  MnemonicSet mnemonics_;
  std::map<std::string, std::string> aliases_;
  std::vector<std::string> line_comments_;
};

IsaCatalog parse_catalog(std::string_view text, std::string_view source = "<catalog>");
IsaCatalog load_catalog(const std::filesystem::path& path);

std::string to_lower(std::string_view s);

}  // namespace masip
