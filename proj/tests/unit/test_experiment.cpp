#include <doctest.h>

#include <set>

#include "masip/error.hpp"
#include "masip/experiment.hpp"
#include "test_support.hpp"

using namespace masip;
using masip::testing::TempDir;

namespace {

InstructionProfile prof(std::string app, std::string domain, MnemonicSet used) {
  return {std::move(app), std::move(domain), std::move(used), {}, {}};
}

Corpus small_corpus() {
  return {"toy",
          {{"AM", {prof("a1", "AM", {"add", "mov", "b"}), prof("a2", "AM", {"add", "mov", "ldr"})}},
           {"OF", {prof("o1", "OF", {"add", "str"}), prof("o2", "OF", {"add", "mov"})}},
           {"SE", {prof("s1", "SE", {"sub", "add", "mov"})}}}};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("enumerate_combinations") {
  CHECK(enumerate_combinations(6, 4).size() == 15);
  CHECK(enumerate_combinations(3, 3) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(enumerate_combinations(4, 2) ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(enumerate_combinations(6, 7), UsageError);
  CHECK_THROWS_AS(enumerate_combinations(3, 0), UsageError);

  // (5,2) against brute force over all 2^5 subsets.
  std::vector<std::vector<std::size_t>> brute;
  for (unsigned mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) != 2) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < 5; ++i)
      if (mask & (1u << i)) s.push_back(i);
    brute.push_back(s);
  }
  std::sort(brute.begin(), brute.end());
  CHECK(brute.size() == 10);
  CHECK(enumerate_combinations(5, 2) == brute);
}

TEST_CASE("property: combination counts follow the factorial formula") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto c = enumerate_combinations(n, k);
      CHECK(c.size() == binomial(n, k));
      CHECK(std::is_sorted(c.begin(), c.end()));
      CHECK(std::set<std::vector<std::size_t>>(c.begin(), c.end()).size() == c.size());
    }
}

TEST_CASE("SET names") {
  CHECK(set_name(0, 15) == "SET-01");
  CHECK(set_name(14, 15) == "SET-15");
  CHECK(set_name(4, 120) == "SET-005");
}

TEST_CASE("run_intra over a small corpus") {
  const auto s = run_intra(small_corpus());
  REQUIRE(s.results.size() == 3);
  CHECK(s.kind == SuiteKind::Intra);
  CHECK(s.results[0].group_name == "AM");
  CHECK(s.results[0].base == MnemonicSet{"add", "mov"});
  CHECK(s.results[0].reusability == Rational(50));
  CHECK(s.results[2].reusability == Rational(100));
  CHECK(s.results[2].mean_extra_cost == Rational(0));
  CHECK(s.mean_reusability == (Rational(50) + Rational(100, 3) + Rational(100)) / Rational(3));
}

TEST_CASE("run_inter over a small corpus") {
  const Corpus c = small_corpus();
  const auto s = run_inter(c, 2);
  REQUIRE(s.results.size() == 3);
  CHECK(s.results[0].group_name == "SET-01");
  CHECK(s.results[0].per_member[0].label == "AM");
  CHECK(s.results[0].per_member[1].label == "OF");
  CHECK(s.results[2].per_member[0].label == "OF");
  // AM ∪ OF apps intersect to {add}
  CHECK(s.results[0].base == MnemonicSet{"add"});

  const auto all = run_inter(c, 3);
  CHECK(all.results.size() == 1);
  CHECK_THROWS_AS(run_inter(c, 4), UsageError);

  // Every inter member equals the union of that domain's intra profiles.
  const auto intra = run_intra(c);
  for (const auto& r : s.results)
    for (const auto& m : r.per_member) {
      const auto d = std::find_if(intra.results.begin(), intra.results.end(),
                                  [&](const ExperimentResult& x) { return x.group_name == m.label; });
      REQUIRE(d != intra.results.end());
      CHECK(m.indiv == d->union_set.size());
    }
}

TEST_CASE("single domain, single application") {
  Corpus c{"toy", {{"AM", {prof("only", "AM", {"add", "sub"})}}}};
  const auto intra = run_intra(c);
  CHECK(intra.mean_reusability == Rational(100));
  CHECK(intra.mean_extra_cost == Rational(0));
  CHECK(run_inter(c, 1).results.size() == 1);
}

TEST_CASE("config loading") {
  TempDir dir("cfg");
  dir.write("cat.isa", "name toy\nadd\nsub\nmov\n");
  dir.write("asm/z.s", "add r0\n");
  dir.write("asm/a.s", "sub r0\nadd r1\n");
  const auto cfg_path = dir.write("cfg.json", R"({
    "catalog": "cat.isa", "mode": "strict", "group_size": 2,
    "domains": { "ZZ": { "zed": ["asm/z.s"] }, "AA": { "ay": ["asm/a.s"] } } })");
  const ExperimentConfig cfg = load_config(cfg_path);
  CHECK(cfg.mode == ParseMode::Strict);
  CHECK(cfg.group_size == 2);
  REQUIRE(cfg.domains.size() == 2);
  CHECK(cfg.domains[0].name == "ZZ");  // declaration order, not sorted
  CHECK(cfg.domains[0].applications[0].files[0] == (dir.path() / "asm/z.s").lexically_normal());
  CHECK(cfg.catalog_path == (dir.path() / "cat.isa").lexically_normal());

  const auto inter = run_inter(cfg);
  CHECK(inter.results[0].per_member[0].label == "ZZ");
  CHECK(inter.results[0].base == MnemonicSet{"add"});
  CHECK(to_json(inter).dump() == to_json(run_inter(cfg)).dump());

  auto load = [&](const std::string& text) { return load_config(dir.write("bad.json", text)); };
  CHECK_THROWS_AS(load(R"({"catalog": "cat.isa", "group_size": 3, "domains": {"A": {"a": ["asm/a.s"]}}})"), UsageError);
  CHECK_THROWS_AS(load(R"({"catalog": "cat.isa", "group_size": 0, "domains": {"A": {"a": ["asm/a.s"]}}})"), UsageError);
  CHECK_THROWS_AS(load(R"({"catalog": "cat.isa", "domains": {}})"), InputError);
  CHECK_THROWS_AS(load(R"({"catalog": "cat.isa", "domains": {"A": {}}})"), InputError);
  CHECK_THROWS_AS(load(R"({"catalog": "cat.isa", "domains": {"A": {"a": []}}})"), InputError);
  CHECK_THROWS_AS(load(R"({"catalog": "cat.isa", "mode": "loose", "domains": {"A": {"a": ["x"]}}})"), UsageError);
  CHECK_THROWS_AS(load(R"({"domains": {"A": {"a": ["x"]}}})"), InputError);
  CHECK_THROWS_AS(load("{not json"), InputError);
  CHECK_THROWS_AS(load_config(dir.path() / "missing.json"), InputError);

  const auto strict_fail = load(R"({"catalog": "cat.isa", "mode": "strict", "group_size": 1,
      "domains": {"A": {"a": ["unknown.s"]}}})");
  dir.write("unknown.s", "frob\n");
  CHECK_THROWS_AS(run_intra(strict_fail), UnknownMnemonicError);
}

TEST_CASE("suite JSON is deterministic and carries means") {
  const auto s = run_intra(small_corpus());
  const auto j = to_json(s);
  CHECK(j["kind"] == "intra");
  CHECK(j["catalog"] == "toy");
  CHECK(j["results"].size() == 3);
  CHECK(j["mean_reusability"]["percent"] == s.mean_reusability.to_fixed(1));
  CHECK(j.dump() == to_json(run_intra(small_corpus())).dump());
}
