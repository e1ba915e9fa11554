// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "masip/asm_ingest.hpp"
#include "masip/cli.hpp"
#include "masip/experiment.hpp"
#include "masip/isa_catalog.hpp"
#include "masip/set_analysis.hpp"

namespace fs = std::filesystem;
using namespace masip;

namespace {

const fs::path kRoot = MASIP_SOURCE_DIR;
const fs::path kFixtures = kRoot / "tests" / "fixtures";
const fs::path kGolden = kRoot / "tests" / "acceptance" / "golden";

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long rounded(const Rational& r) { return static_cast<long>(r.round_int()); }

bool within(long value, long expected, long tol) { return std::abs(value - expected) <= tol; }

std::string fmt_time(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

const MemberResult* find_member(const ExperimentResult& r, const std::string& label) {
  for (const auto& m : r.per_member)
    if (m.label == label) return &m;
  return nullptr;
}

Outcome criterion_1() {
  Outcome o;
  auto start = Clock::now();
  auto suite = run_intra(load_config(kFixtures / "arm_intra.json"));
  const ExperimentResult* am = nullptr;
  for (const auto& r : suite.results)
    if (r.group_name == "AM") am = &r;
  o.require(am != nullptr, "AM group missing");
  if (!am) return o;
  o.require(am->base.size() == 23, "base " + std::to_string(am->base.size()) + " != 23");
  o.require(am->union_set.size() == 49, "union " + std::to_string(am->union_set.size()) + " != 49");
  const std::map<std::string, std::size_t> ext{{"basicmath", 10}, {"bitcount", 23}, {"qsort", 2}, {"susan", 22}};
  for (const auto& [label, n] : ext) {
    const auto* m = find_member(*am, label);
    o.require(m && m->extension.size() == n, "extension of " + label);
  }
  double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + fmt_time(t));
  if (o.pass) o.detail = "base 23, union 49, extensions 10/23/2/22 in " + fmt_time(t);
  return o;
}

Outcome criterion_2() {
  Outcome o;
  auto start = Clock::now();
  auto suite = run_inter(load_config(kFixtures / "arm_inter.json"));
  o.require(!suite.results.empty() && suite.results.front().group_name == "SET-01", "SET-01 missing");
  if (!o.pass) return o;
  const auto& set = suite.results.front();
  o.require(set.base.size() == 14, "base " + std::to_string(set.base.size()) + " != 14");
  o.require(set.union_set.size() == 54, "union " + std::to_string(set.union_set.size()) + " != 54");
  const std::map<std::string, std::size_t> ext{{"AM", 31}, {"OF", 37}, {"MB", 39}, {"SE", 40}};
  o.require(set.per_member.size() == ext.size(), "SET-01 should have four domains");
  for (const auto& [label, n] : ext) {
    const auto* m = find_member(set, label);
    o.require(m && m->extension.size() == n, "extension of " + label);
  }
  double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + fmt_time(t));
  if (o.pass) o.detail = "base 14, union 54, extensions 31/37/39/40 in " + fmt_time(t);
  return o;
}

Outcome criterion_3() {
  Outcome o;
  auto start = Clock::now();
  struct Case {
    std::string config;
    SuiteKind kind;
    long reuse, extra;
  };
  const std::vector<Case> cases{{"arm_intra.json", SuiteKind::Intra, 59, 24},
                                {"pisa_intra.json", SuiteKind::Intra, 49, 26},
                                {"arm_inter.json", SuiteKind::Inter, 28, 67},
                                {"pisa_inter.json", SuiteKind::Inter, 25, 68}};
  std::ostringstream got;
  for (const auto& c : cases) {
    auto config = load_config(kFixtures / c.config);
    auto suite = c.kind == SuiteKind::Intra ? run_intra(config) : run_inter(config);
    long r = rounded(suite.mean_reusability), e = rounded(suite.mean_extra_cost);
    got << c.config << " " << r << "/" << e << "; ";
    o.require(within(r, c.reuse, 1), c.config + " reusability " + std::to_string(r));
    o.require(within(e, c.extra, 1), c.config + " extra cost " + std::to_string(e));
    std::size_t expected_groups = c.kind == SuiteKind::Intra ? 6 : 15;
    o.require(suite.results.size() == expected_groups, c.config + " group count");
  }
  double t = seconds_since(start);
  o.require(t < 5.0, "runtime " + fmt_time(t));
  if (o.pass) o.detail = got.str() + "in " + fmt_time(t);
  return o;
}

Outcome criterion_4() {
  Outcome o;
  auto suite = run_intra(load_config(kFixtures / "arm_intra.json"));
  const std::vector<long> expected{47, 49, 53, 45, 80, 78};
  o.require(suite.results.size() == expected.size(), "expected six domains");
  if (!o.pass) return o;
  std::ostringstream got;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    long r = rounded(suite.results[i].reusability);
    got << suite.results[i].group_name << "=" << r << " ";
    o.require(within(r, expected[i], 1), suite.results[i].group_name + " reusability " + std::to_string(r));
  }
  if (o.pass) o.detail = got.str();
  return o;
}

using Mask = std::uint32_t;

MnemonicSet to_set(Mask m) {
  MnemonicSet s;
  for (int i = 0; i < 16; ++i)
    if (m & (1u << i)) s.insert("s" + std::to_string(i));
  return s;
}

Outcome criterion_5() {
  Outcome o;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    std::size_t universe = 1 + rng() % 16;
    std::size_t n = 2 + rng() % 4;
    std::vector<Mask> masks(n);
    for (auto& m : masks) {
      m = rng() & ((1u << universe) - 1);
      if (m == 0) m = 1u << (rng() % universe);
    }
    // Oracle: decide each symbol independently.
    Mask base = 0, uni = 0;
    for (std::size_t s = 0; s < universe; ++s) {
      std::size_t hits = 0;
      for (Mask m : masks) hits += (m >> s) & 1u;
      if (hits == n) base |= 1u << s;
      if (hits > 0) uni |= 1u << s;
    }
    ApplicationGroup group{"G", {}};
    for (std::size_t i = 0; i < n; ++i) {
      auto set = to_set(masks[i]);
      group.members.push_back({"m" + std::to_string(i), set, set});
    }
    auto result = analyze_group(group);
    std::string tag = "trial " + std::to_string(trial);
    o.require(result.base == to_set(base), tag + ": base");
    o.require(result.union_set == to_set(uni), tag + ": union");
    Rational reuse(100 * std::popcount(base), std::popcount(uni));
    o.require(result.reusability == reuse, tag + ": reusability");
    Rational sum(0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& m = result.per_member[i];
      o.require(m.extension == to_set(masks[i] & ~base), tag + ": extension");
      Rational extra(100 * (std::popcount(masks[i]) - std::popcount(base)), std::popcount(uni));
      o.require(m.extra_cost == extra, tag + ": extra cost");
      o.require(result.reusability + m.extra_cost == Rational(100 * std::popcount(masks[i]), std::popcount(uni)),
                tag + ": decomposition identity");
      sum = sum + extra;
    }
    o.require(result.mean_extra_cost == sum / Rational(static_cast<std::int64_t>(n)), tag + ": mean extra cost");
  }
  if (o.pass) o.detail = "1000 instances match the per-symbol oracle; identity exact";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::mt19937 rng(6);
  std::vector<std::string> universe;
  for (int i = 0; i < 24; ++i) universe.push_back("i" + std::to_string(i));
  auto random_member = [&](const std::string& label) {
    MnemonicSet s;
    for (const auto& u : universe)
      if (rng() % 3 == 0) s.insert(u);
    if (s.empty()) s.insert(universe[rng() % universe.size()]);
    return GroupMember{label, s, s};
  };
  for (int seq = 0; seq < 1000 && o.pass; ++seq) {
    ApplicationGroup group{"G", {random_member("a")}};
    auto prev = analyze_group(group);
    std::size_t steps = 1 + rng() % 6;
    for (std::size_t k = 0; k < steps; ++k) {
      group.members.push_back(random_member("m" + std::to_string(k)));
      auto next = analyze_group(group);
      o.require(next.base.size() <= prev.base.size(), "base grew under member addition");
      o.require(next.union_set.size() >= prev.union_set.size(), "union shrank under member addition");
      prev = next;
    }
    auto shuffled = group;
    std::shuffle(shuffled.members.begin(), shuffled.members.end(), rng);
    auto permuted = analyze_group(shuffled);
    o.require(permuted.base == prev.base && permuted.union_set == prev.union_set &&
                  permuted.reusability == prev.reusability && permuted.mean_extra_cost == prev.mean_extra_cost,
              "permutation changed group outputs");
    for (const auto& m : permuted.per_member) {
      const auto* orig = find_member(prev, m.label);
      o.require(orig && orig->extension == m.extension && orig->extra_cost == m.extra_cost,
                "permutation changed member " + m.label);
    }
  }
  auto factorial = [](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      auto combos = enumerate_combinations(n, k);
      o.require(combos.size() == factorial(n) / (factorial(k) * factorial(n - k)),
                "C(" + std::to_string(n) + "," + std::to_string(k) + ")");
      o.require(std::is_sorted(combos.begin(), combos.end()), "combinations not lexicographic");
    }
  if (o.pass) o.detail = "permutation, 1000 growth sequences, C(n,k) for n<=10";
  return o;
}

struct Golden {
  MnemonicCounts counts;
  std::set<std::string> unknown;
  std::size_t strict_line = 0;
  std::string strict_token;
};

Golden load_golden(const fs::path& path) {
  Golden g;
  std::ifstream in(path);
  std::string head;
  while (in >> head) {
    if (head == "?") {
      std::string tok;
      in >> tok;
      g.unknown.insert(tok);
    } else if (head == "!") {
      in >> g.strict_line >> g.strict_token;
    } else {
      std::size_t n;
      in >> n;
      g.counts[head] = n;
    }
  }
  return g;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome criterion_7() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> cases{{"arm_mixed", "arm-thumb"},
                                                               {"pisa_unknown", "pisa"}};
  for (const auto& [name, catalog_name] : cases) {
    auto catalog = load_catalog(kRoot / "data" / "catalogs" / (catalog_name + ".isa"));
    auto golden = load_golden(kGolden / (name + ".expected"));
    auto source = kGolden / (name + ".s");
    auto text = slurp(source);
    auto lenient = parse_assembly(text, catalog, ParseMode::Lenient, source.string());
    MnemonicSet used;
    for (const auto& [m, n] : golden.counts) used.insert(m);
    o.require(lenient.used == used, name + ": used set");
    o.require(lenient.counts == golden.counts, name + ": counts");
    o.require(lenient.unknown == golden.unknown, name + ": unknown");
    try {
      auto strict = parse_assembly(text, catalog, ParseMode::Strict, source.string());
      o.require(golden.strict_line == 0 && strict.counts == golden.counts, name + ": strict result");
    } catch (const UnknownMnemonicError& e) {
      o.require(golden.strict_line != 0, name + ": unexpected strict failure");
      o.require(e.line() == golden.strict_line && e.token() == golden.strict_token,
                name + ": strict stopped at line " + std::to_string(e.line()));
    }
  }
  if (o.pass) o.detail = "2 golden listings; strict stops at line 7 'frobnicate'";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  auto scratch = fs::temp_directory_path() / ("masip-accept-" + std::to_string(std::random_device{}()));
  std::size_t compared = 0;
  for (const char* config : {"arm_intra.json", "arm_inter.json", "pisa_inter.json"}) {
    std::vector<fs::path> dirs{scratch / "a", scratch / "b"};
    for (const auto& dir : dirs) {
      std::ostringstream out, err;
      int rc = run_cli({"analyze", "--config", (kFixtures / config).string(), "--out-dir", dir.string(), "--svg"},
                       out, err);
      o.require(rc == 0, std::string("analyze failed on ") + config + ": " + err.str());
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dirs[0])) files.push_back(entry.path().filename().string());
    std::size_t second = std::distance(fs::directory_iterator(dirs[1]), fs::directory_iterator{});
    o.require(files.size() == second, "output file sets differ");
    for (const auto& f : files) {
      o.require(slurp(dirs[0] / f) == slurp(dirs[1] / f), std::string(config) + ": " + f + " differs");
      ++compared;
    }
    for (const char* needed : {"intra_suite.json", "inter_suite.json", "intra_table.csv", "inter_table.csv",
                               "intra_plot.csv", "inter_plot.csv"})
      o.require(std::find(files.begin(), files.end(), needed) != files.end(), std::string("missing ") + needed);
    fs::remove_all(scratch);
  }
  if (o.pass) o.detail = std::to_string(compared) + " output files byte-identical across runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 worked example, intra AM (ARM)", criterion_1},
      {"2 worked example, inter SET-01 (ARM)", criterion_2},
      {"3 suite means (+/-1)", criterion_3},
      {"4 per-domain intra reusability, ARM (+/-1)", criterion_4},
      {"5 oracle equivalence", criterion_5},
      {"6 property suites", criterion_6},
      {"7 parser goldens", criterion_7},
      {"8 determinism", criterion_8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
