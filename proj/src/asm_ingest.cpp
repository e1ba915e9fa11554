#include "masip/asm_ingest.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace masip {

ParseMode parse_mode_from_string(std::string_view s) {
  if (s == "strict") return ParseMode::Strict;
  if (s == "lenient") return ParseMode::Lenient;
  throw UsageError("unknown mode '" + std::string(s) + "' (expected strict or lenient)");
}

std::string_view to_string(ParseMode mode) { return mode == ParseMode::Strict ? "strict" : "lenient"; }

UnknownMnemonicError::UnknownMnemonicError(std::string file, std::size_t line, std::string token)
    : InputError(file + ":" + std::to_string(line) + ": unknown mnemonic '" + token + "'"),
      file_(std::move(file)),
      line_(line),
      token_(std::move(token)) {}

namespace {

// Removes comments from one line. `in_block` carries /* */ state across lines.
std::string strip_comments(std::string_view line, const std::vector<std::string>& markers,
                           bool& in_block) {
  std::string out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (in_block) {
      const std::size_t close = line.find("*/", i);
      if (close == std::string_view::npos) return out;
      in_block = false;
      i = close + 2;
      out.push_back(' ');
      continue;
    }
    if (line.compare(i, 2, "/*") == 0) {
      in_block = true;
      i += 2;
      continue;
    }
    const bool is_marker = std::any_of(markers.begin(), markers.end(), [&](const std::string& m) {
      return line.compare(i, m.size(), m) == 0;
    });
    if (is_marker) return out;
    out.push_back(line[i++]);
  }
  return out;
}

}  // namespace

ParseResult parse_assembly(std::string_view text, const IsaCatalog& catalog, ParseMode mode,
                           std::string_view source) {
  if (!detail::is_valid_utf8(text)) throw InputError(std::string(source) + ": not valid UTF-8");

  ParseResult result;
  bool in_block = false;
  std::size_t lineno = 0;
  for (std::string_view raw : detail::split_lines(text)) {
    ++lineno;
    const std::string line = strip_comments(raw, catalog.line_comments(), in_block);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    std::size_t pos = 0;
    if (tokens[0].back() == ':') {
      if (tokens.size() == 1) continue;  // bare label
      pos = 1;
    }
    const std::string_view candidate = tokens[pos];
    if (candidate.front() == '.') continue;  // directive

    Lookup hit = catalog.canonicalize(candidate);
    if (!hit.known) {
      if (mode == ParseMode::Strict)
        throw UnknownMnemonicError(std::string(source), lineno, std::move(hit.mnemonic));
      result.unknown.insert(std::move(hit.mnemonic));
      continue;
    }
    ++result.counts[hit.mnemonic];
    result.used.insert(std::move(hit.mnemonic));
    ++result.accepted_lines;
  }
  return result;
}

InstructionProfile build_profile(std::string application, std::string domain,
                                 std::span<const std::filesystem::path> files,
                                 const IsaCatalog& catalog, ParseMode mode) {
  if (files.empty())
    throw InputError("application '" + application + "' has no assembly files");

  InstructionProfile profile{std::move(application), std::move(domain), {}, {}, {}};
  for (const auto& file : files) {
    ParseResult part = parse_assembly(detail::read_file(file), catalog, mode, file.string());
    profile.used.merge(part.used);
    for (const auto& [m, n] : part.counts) profile.counts[m] += n;
    profile.unknown.merge(part.unknown);
  }
  return profile;
}

nlohmann::ordered_json to_json(const InstructionProfile& profile) {
  nlohmann::ordered_json j;
  j["application"] = profile.application;
  j["domain"] = profile.domain;
  j["used"] = profile.used;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [m, n] : profile.counts) counts[m] = n;
  j["counts"] = std::move(counts);
  j["unknown"] = profile.unknown;
  return j;
}

InstructionProfile profile_from_json(const nlohmann::json& j) {
  try {
    InstructionProfile p;
    p.application = j.at("application").get<std::string>();
    p.domain = j.at("domain").get<std::string>();
    p.used = j.at("used").get<MnemonicSet>();
    p.counts = j.at("counts").get<MnemonicCounts>();
    p.unknown = j.at("unknown").get<std::set<std::string>>();
    for (const auto& [m, n] : p.counts)
      if (n == 0 || !p.used.contains(m)) throw InputError("profile counts disagree with 'used'");
    if (p.counts.size() != p.used.size()) throw InputError("profile counts disagree with 'used'");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed profile JSON: ") + e.what());
  }
}

}  // namespace masip
