#include "masip/fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "masip/experiment.hpp"
#include "text_util.hpp"

namespace masip::fixtures {
namespace {

std::string sizes_str(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Column demands for the non-base symbols, as even as possible.
std::vector<std::size_t> even_split(std::size_t total, std::size_t columns) {
  std::vector<std::size_t> c(columns, columns ? total / columns : 0);
  for (std::size_t j = 0; j < (columns ? total % columns : 0); ++j) ++c[j];
  return c;
}

std::uint32_t mix_seed(std::uint32_t seed, std::string_view text) {
  std::uint32_t h = 2166136261u ^ seed;  // FNV-1a
  for (unsigned char c : text) h = (h ^ c) * 16777619u;
  return h;
}

}  // namespace

void check_feasible(const GroupTarget& t) {
  const auto& m = t.member_sizes;
  const std::string what = "target " + sizes_str(m) + " base " + std::to_string(t.base) +
                           " union " + std::to_string(t.union_size) + ": ";
  if (m.empty()) throw InfeasibleTarget(what + "no members");
  if (t.union_size == 0) throw InfeasibleTarget(what + "empty union");
  const auto [lo, hi] = std::minmax_element(m.begin(), m.end());
  if (t.base > *lo) throw InfeasibleTarget(what + "base exceeds the smallest member");
  if (*hi > t.union_size) throw InfeasibleTarget(what + "a member exceeds the union");
  const std::size_t k = t.union_size - t.base;
  if (k == 0) {
    if (*hi != t.base) throw InfeasibleTarget(what + "members larger than base == union");
    return;
  }
  const std::size_t extras = std::accumulate(m.begin(), m.end(), std::size_t{0}) - m.size() * t.base;
  if (extras < k) throw InfeasibleTarget(what + "members cannot cover the union");
  if (extras > (m.size() - 1) * k)
    throw InfeasibleTarget(what + "intersection would exceed base (sum of union-member gaps < union-base)");
}

std::vector<SymbolSet> synthesize_group(const GroupTarget& t) {
  check_feasible(t);
  const std::size_t n = t.member_sizes.size();
  const std::size_t k = t.union_size - t.base;
  std::size_t extras = 0;
  for (auto s : t.member_sizes) extras += s - t.base;
  std::vector<std::size_t> remaining = even_split(extras, k);

  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(),
                   [&](auto a, auto b) { return t.member_sizes[a] > t.member_sizes[b]; });

  std::vector<SymbolSet> members(n);
  std::vector<std::size_t> cols(k);
  for (std::size_t row : rows) {
    // Fill the row into the columns with the largest remaining demand.
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(),
                     [&](auto a, auto b) { return remaining[a] > remaining[b]; });
    SymbolSet& set = members[row];
    for (std::size_t s = 0; s < t.base; ++s) set.push_back(s);
    for (std::size_t i = 0; i < t.member_sizes[row] - t.base; ++i) {
      if (remaining[cols[i]] == 0) throw InfeasibleTarget("target " + sizes_str(t.member_sizes) + ": no realization");
      --remaining[cols[i]];
      set.push_back(t.base + cols[i]);
    }
    std::sort(set.begin(), set.end());
  }
  if (!group_matches(members, t)) throw ConsistencyError("synthesized group failed verification");
  return members;
}

bool group_matches(const std::vector<SymbolSet>& members, const GroupTarget& t) {
  if (members.size() != t.member_sizes.size()) return false;
  std::size_t universe = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() != t.member_sizes[i]) return false;
    for (auto s : members[i]) universe = std::max(universe, s + 1);
  }
  std::size_t in_all = 0, in_any = 0;
  for (std::size_t s = 0; s < universe; ++s) {
    std::size_t hits = 0;
    for (const auto& m : members)
      hits += std::count(m.begin(), m.end(), s) > 0 ? 1 : 0;
    in_all += hits == members.size();
    in_any += hits > 0;
  }
  return in_all == t.base && in_any == t.union_size;
}

std::vector<SynthDomain> synthesize_corpus(const CorpusTarget& t) {
  const std::size_t nd = t.domain_sizes.size();
  const auto combos = enumerate_combinations(nd, t.group_size);
  if (combos.size() != t.combinations.size())
    throw InfeasibleTarget("expected " + std::to_string(combos.size()) + " combination targets, got " +
                           std::to_string(t.combinations.size()));
  if (t.apps_per_domain == 0) throw InfeasibleTarget("domains need at least one application");

  for (std::size_t i = 0; i < combos.size(); ++i) {
    std::size_t largest = 0;
    for (auto d : combos[i]) largest = std::max(largest, t.domain_sizes[d]);
    if (t.combinations[i].union_size != largest)
      throw InfeasibleTarget(set_name(i, combos.size()) +
                             ": union target is not realizable as nested domain sets");
  }

  // Base symbols: a block shared by every domain plus one block per
  // combination, owned by exactly that combination's domains.
  std::size_t common = t.combinations.front().base;
  for (const auto& c : t.combinations) common = std::min(common, c.base);
  std::vector<SymbolSet> domain_base(nd);
  std::size_t next = 0;
  for (; next < common; ++next)
    for (auto& b : domain_base) b.push_back(next);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    for (std::size_t z = 0; z < t.combinations[i].base - common; ++z, ++next)
      for (auto d : combos[i]) domain_base[d].push_back(next);
  }

  // Domain unions form a chain ordered by size; smaller domains' base symbols come first.
  std::vector<std::size_t> chain(nd);
  std::iota(chain.begin(), chain.end(), 0);
  std::stable_sort(chain.begin(), chain.end(),
                   [&](auto a, auto b) { return t.domain_sizes[a] < t.domain_sizes[b]; });
  // Base symbols first, in the order domains need them, then fresh padding.
  std::vector<std::size_t> position(next, SIZE_MAX);
  std::vector<std::size_t> order;
  for (auto d : chain)
    for (auto s : domain_base[d])
      if (position[s] == SIZE_MAX) {
        position[s] = order.size();
        order.push_back(s);
      }
  for (auto d : chain) {
    std::size_t last = 0;
    for (auto s : domain_base[d]) last = std::max(last, position[s] + 1);
    if (last > t.domain_sizes[d])
      throw InfeasibleTarget("domain " + std::to_string(d) + " is too small for its base symbols");
  }
  std::size_t fresh = next;
  while (order.size() < t.domain_sizes[chain.back()]) order.push_back(fresh++);
  position.resize(fresh, SIZE_MAX);
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p;

  std::vector<SynthDomain> out(nd);
  const std::size_t n = t.apps_per_domain;
  for (std::size_t d = 0; d < nd; ++d) {
    SymbolSet base;
    for (auto s : domain_base[d]) base.push_back(position[s]);
    std::sort(base.begin(), base.end());
    SymbolSet extra;
    for (std::size_t p = 0; p < t.domain_sizes[d]; ++p)
      if (!std::binary_search(base.begin(), base.end(), p)) extra.push_back(p);
    const std::size_t k = extra.size();

    // Application extras shrink linearly, then are clamped into the feasible band.
    std::vector<std::size_t> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = (2 * k * (n - i) + (n + 1)) / (2 * (n + 1));
    std::size_t sum = std::accumulate(e.begin(), e.end(), std::size_t{0});
    for (std::size_t i = 0; sum < k && i < n; ++i) {
      const std::size_t add = std::min(k - e[i], k - sum);
      e[i] += add;
      sum += add;
    }
    for (std::size_t i = n; sum > (n - 1) * k && i-- > 0;) {
      const std::size_t cut = std::min(e[i], sum - (n - 1) * k);
      e[i] -= cut;
      sum -= cut;
    }

    GroupTarget g{{}, base.size(), t.domain_sizes[d]};
    for (auto x : e) g.member_sizes.push_back(base.size() + x);
    for (const auto& local : synthesize_group(g)) {
      SymbolSet app;
      for (auto s : local) app.push_back(s < base.size() ? base[s] : extra[s - base.size()]);
      std::sort(app.begin(), app.end());
      out[d].apps.push_back(std::move(app));
    }
  }
  if (!corpus_matches(out, t)) throw ConsistencyError("synthesized corpus failed verification");
  return out;
}

bool corpus_matches(const std::vector<SynthDomain>& domains, const CorpusTarget& t) {
  if (domains.size() != t.domain_sizes.size()) return false;
  std::size_t universe = 0;
  for (const auto& d : domains)
    for (const auto& a : d.apps)
      for (auto s : a) universe = std::max(universe, s + 1);
  auto has = [](const SymbolSet& a, std::size_t s) { return std::count(a.begin(), a.end(), s) > 0; };

  for (std::size_t d = 0; d < domains.size(); ++d) {
    std::size_t in_any = 0;
    for (std::size_t s = 0; s < universe; ++s)
      in_any += std::any_of(domains[d].apps.begin(), domains[d].apps.end(),
                            [&](const SymbolSet& a) { return has(a, s); });
    if (in_any != t.domain_sizes[d]) return false;
  }
  const auto combos = enumerate_combinations(domains.size(), t.group_size);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    std::size_t in_all = 0, in_any = 0;
    for (std::size_t s = 0; s < universe; ++s) {
      bool all = true, any = false;
      for (auto d : combos[i])
        for (const auto& a : domains[d].apps) {
          const bool h = has(a, s);
          all = all && h;
          any = any || h;
        }
      in_all += all;
      in_any += any;
    }
    if (in_all != t.combinations[i].base || in_any != t.combinations[i].union_size) return false;
  }
  return true;
}

std::vector<std::string> symbol_order(const IsaCatalog& catalog, std::uint32_t seed) {
  std::vector<std::string> order(catalog.mnemonics().begin(), catalog.mnemonics().end());
  std::mt19937 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  return order;
}

Dialect dialect_for(const IsaCatalog& catalog) {
  const std::string& n = catalog.name();
  const bool mips_like = n.rfind("pisa", 0) == 0 || n.rfind("mips", 0) == 0;
  Dialect d;
  if (mips_like) d.registers = {"$2", "$3", "$4", "$5", "$16", "$17", "$sp", "$31"};
  const std::string preferred = mips_like ? "#" : "@";
  const auto& markers = catalog.line_comments();
  d.comment = std::find(markers.begin(), markers.end(), preferred) != markers.end()
                  ? preferred
                  : markers.front();
  return d;
}

std::vector<std::string> render_application(const std::string& application,
                                            const MnemonicSet& mnemonics,
                                            const IsaCatalog& catalog, const Dialect& dialect,
                                            std::uint32_t seed, std::size_t files) {
  if (files == 0) throw UsageError("render_application needs at least one file");
  std::mt19937 rng(mix_seed(seed, application));
  std::map<std::string, std::vector<std::string>> spellings;
  for (const auto& [alias, target] : catalog.aliases()) spellings[target].push_back(alias);

  auto operands = [&] {
    std::string ops;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) ops += ", ";
      ops += dialect.registers[rng() % dialect.registers.size()];
    }
    if (rng() % 4 == 0) ops += dialect.comment == "#" ? ", 4" : ", #4";
    return ops;
  };

  std::vector<std::vector<std::string>> bodies(files);
  std::vector<std::string> all;
  for (const auto& m : mnemonics) {
    const std::size_t occurrences = 1 + rng() % 3;
    for (std::size_t i = 0; i < occurrences; ++i) {
      std::string spelled = m;
      const auto roll = rng() % 10;
      if (roll == 0 && spellings.contains(m)) {
        const auto& options = spellings[m];
        spelled = options[rng() % options.size()];
      } else if (roll == 1) {
        std::transform(spelled.begin(), spelled.end(), spelled.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      }
      std::string line = spelled + " " + operands();
      if (rng() % 7 == 0) line += "  " + dialect.comment + " spill slot";
      all.push_back(std::move(line));
    }
  }
  for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng() % i]);
  for (auto& line : all) bodies[rng() % files].push_back(std::move(line));

  std::vector<std::string> out;
  std::size_t label = 2;
  for (std::size_t f = 0; f < files; ++f) {
    const std::string fn = application + "_part" + std::to_string(f);
    std::string text;
    text += dialect.comment + " " + application + " listing " + std::to_string(f + 1) + " of " +
            std::to_string(files) + "\n";
    text += "\t.text\n\t.align\t2\n\t.global\t" + fn + "\n";
    text += "/* synthetic listing:\n   mnemonic coverage fixture */\n";
    text += fn + ":\n";
    for (std::size_t i = 0; i < bodies[f].size(); ++i) {
      const auto roll = rng() % 8;
      if (roll == 0) {
        text += ".L" + std::to_string(label++) + ":\n";
      } else if (roll == 1) {
        text += ".L" + std::to_string(label++) + ":\t" + bodies[f][i] + "\n";
        continue;
      } else if (roll == 2) {
        text += "\t/* block " + std::to_string(i) + " */\n";
      }
      text += "\t" + bodies[f][i] + "\n";
    }
    text += "\t.size\t" + fn + ", .-" + fn + "\n\t.word\t0\n";
    out.push_back(std::move(text));
  }
  return out;
}

namespace {

std::string rel(const std::filesystem::path& p, const std::filesystem::path& dir) {
  return std::filesystem::absolute(p).lexically_normal()
      .lexically_relative(std::filesystem::absolute(dir).lexically_normal())
      .generic_string();
}

MnemonicSet to_mnemonics(const SymbolSet& s, const std::vector<std::string>& order) {
  MnemonicSet out;
  for (auto id : s) {
    if (id >= order.size()) throw InfeasibleTarget("corpus needs more symbols than the catalog has");
    out.insert(order[id]);
  }
  return out;
}

struct AppOutput {
  std::string domain, app;
  std::vector<std::string> files;
};

void write_config(const std::vector<AppOutput>& apps, const std::filesystem::path& catalog_path,
                  const std::filesystem::path& config_path, std::size_t group_size) {
  const auto dir = config_path.parent_path();
  nlohmann::ordered_json j;
  j["catalog"] = rel(catalog_path, dir);
  j["mode"] = "strict";
  j["group_size"] = group_size;
  nlohmann::ordered_json domains = nlohmann::ordered_json::object();
  for (const auto& a : apps) {
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& f : a.files) files.push_back(f);
    domains[a.domain][a.app] = std::move(files);
  }
  j["domains"] = std::move(domains);
  detail::write_file(config_path, j.dump(2) + "\n");
}

AppOutput write_app(const std::string& domain, const std::string& app, const MnemonicSet& used,
                    const IsaCatalog& catalog, const std::filesystem::path& corpus_dir,
                    const std::filesystem::path& config_dir, std::uint32_t seed) {
  AppOutput out{domain, app, {}};
  const auto texts = render_application(app, used, catalog, dialect_for(catalog), seed);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const auto path = corpus_dir / domain / (app + "_" + std::to_string(i) + ".s");
    detail::write_file(path, texts[i]);
    out.files.push_back(rel(path, config_dir));
  }
  return out;
}

}  // namespace

void write_intra_corpus(const std::vector<IntraDomainTarget>& targets, const IsaCatalog& catalog,
                        const std::filesystem::path& catalog_path,
                        const std::filesystem::path& corpus_dir,
                        const std::filesystem::path& config_path, std::uint32_t seed) {
  const auto order = symbol_order(catalog, seed);
  std::vector<AppOutput> apps;
  for (const auto& dt : targets) {
    GroupTarget g{{}, dt.base, dt.union_size};
    for (const auto& a : dt.apps) g.member_sizes.push_back(a.size);
    const auto sets = synthesize_group(g);
    for (std::size_t i = 0; i < sets.size(); ++i)
      apps.push_back(write_app(dt.domain, dt.apps[i].name, to_mnemonics(sets[i], order), catalog,
                               corpus_dir, config_path.parent_path(), seed));
  }
  write_config(apps, catalog_path, config_path, std::min<std::size_t>(4, targets.size()));
}

void write_inter_corpus(const InterCorpusTarget& targets, const IsaCatalog& catalog,
                        const std::filesystem::path& catalog_path,
                        const std::filesystem::path& corpus_dir,
                        const std::filesystem::path& config_path, std::uint32_t seed) {
  const auto order = symbol_order(catalog, seed);
  const auto domains = synthesize_corpus(targets.target);
  std::vector<AppOutput> apps;
  for (std::size_t d = 0; d < domains.size(); ++d)
    for (std::size_t i = 0; i < domains[d].apps.size(); ++i)
      apps.push_back(write_app(targets.domains[d], targets.app_names[d].at(i),
                               to_mnemonics(domains[d].apps[i], order), catalog, corpus_dir,
                               config_path.parent_path(), seed));
  write_config(apps, catalog_path, config_path, targets.target.group_size);
}

std::vector<IntraDomainTarget> arm_intra_targets() {
  return {
      {"AM", {{"basicmath", 33}, {"bitcount", 46}, {"qsort", 25}, {"susan", 45}}, 23, 49},
      {"OF", {{"ghostscript", 52}, {"ispell", 29}, {"rsynth", 52}, {"stringsearch", 40}}, 27, 55},
      {"SE", {{"blowfish", 49}, {"pgp", 57}, {"rijndael", 36}, {"sha", 40}}, 30, 57},
      {"TC", {{"adpcm", 39}, {"crc32", 36}, {"fft", 41}, {"gsm", 54}}, 25, 55},
      {"MB", {{"epic", 56}, {"g721", 49}, {"mpeg2", 51}, {"rasta", 53}}, 45, 56},
      {"SP", {{"bzip2", 57}, {"hmmer", 45}, {"sjeng", 55}, {"h264", 54}}, 45, 58},
  };
}

std::vector<IntraDomainTarget> pisa_intra_targets() {
  return {
      {"AM", {{"basicmath", 25}, {"bitcount", 31}, {"qsort", 19}, {"susan", 34}}, 16, 40},
      {"OF", {{"ghostscript", 44}, {"ispell", 50}, {"rsynth", 40}, {"stringsearch", 27}}, 27, 51},
      {"SE", {{"blowfish", 30}, {"pgp", 52}, {"rijndael", 30}, {"sha", 29}}, 22, 52},
      {"TC", {{"adpcm", 32}, {"crc32", 22}, {"fft", 30}, {"gsm", 41}}, 16, 45},
      {"MB", {{"epic", 44}, {"g721", 41}, {"mpeg2", 43}, {"rasta", 44}}, 35, 50},
      {"SP", {{"bzip2", 50}, {"hmmer", 29}, {"sjeng", 46}, {"h264", 47}}, 29, 52},
  };
}

namespace {

InterCorpusTarget inter_common(std::vector<std::size_t> sizes, std::vector<std::size_t> bases,
                               std::vector<std::size_t> unions) {
  InterCorpusTarget t;
  t.domains = {"AM", "OF", "MB", "SE", "SP", "TC"};
  t.app_names = {{"basicmath", "bitcount", "qsort", "susan"},
                 {"ghostscript", "ispell", "rsynth", "stringsearch"},
                 {"epic", "g721", "h263enc", "mpeg2enc"},
                 {"blowfish", "pgp", "rijndael", "sha"},
                 {"bzip2", "mcf", "hmmer", "sjeng"},
                 {"adpcm", "crc32", "fft", "gsm"}};
  t.target.domain_sizes = std::move(sizes);
  for (std::size_t i = 0; i < bases.size(); ++i) t.target.combinations.push_back({bases[i], unions[i]});
  return t;
}

}  // namespace

InterCorpusTarget arm_inter_targets() {
  return inter_common({45, 51, 53, 54, 55, 52},
                      {14, 15, 14, 14, 13, 14, 16, 14, 17, 14, 18, 16, 17, 16, 19},
                      {54, 55, 53, 55, 54, 55, 55, 54, 55, 55, 55, 54, 55, 55, 55});
}

InterCorpusTarget pisa_inter_targets() {
  return inter_common({37, 48, 46, 48, 48, 42},
                      {12, 13, 11, 12, 11, 11, 12, 11, 11, 11, 15, 13, 12, 12, 13},
                      std::vector<std::size_t>(15, 48));
}

}  // namespace masip::fixtures
