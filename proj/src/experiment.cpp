#include "masip/experiment.hpp"

#include <algorithm>

#include "masip/error.hpp"
#include "text_util.hpp"

namespace masip {

void ExperimentConfig::validate() const {
  if (domains.empty()) throw InputError("config declares no domains");
  MnemonicSet names;
  for (const auto& d : domains) {
    if (!names.insert(d.name).second) throw InputError("duplicate domain '" + d.name + "'");
    if (d.applications.empty()) throw InputError("domain '" + d.name + "' has no applications");
    MnemonicSet apps;
    for (const auto& a : d.applications) {
      if (!apps.insert(a.name).second)
        throw InputError("domain '" + d.name + "' repeats application '" + a.name + "'");
      if (a.files.empty())
        throw InputError("application '" + a.name + "' lists no assembly files");
    }
  }
  if (group_size == 0) throw UsageError("group_size must be positive");
  if (group_size > domains.size())
    throw UsageError("group_size " + std::to_string(group_size) + " exceeds the " +
                     std::to_string(domains.size()) + " configured domains");
}

ExperimentConfig config_from_json(const nlohmann::ordered_json& j,
                                  const std::filesystem::path& base_dir) {
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : (base_dir / path).lexically_normal();
  };
  ExperimentConfig cfg;
  try {
    cfg.catalog_path = resolve(j.at("catalog").get<std::string>());
    if (j.contains("mode")) cfg.mode = parse_mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("group_size")) {
      const auto k = j.at("group_size").get<std::int64_t>();
      if (k <= 0) throw UsageError("group_size must be positive");
      cfg.group_size = static_cast<std::size_t>(k);
    }
    for (const auto& [dname, apps] : j.at("domains").items()) {
      DomainSpec d{dname, {}};
      for (const auto& [aname, files] : apps.items()) {
        ApplicationSpec a{aname, {}};
        for (const auto& f : files) a.files.push_back(resolve(f.get<std::string>()));
        d.applications.push_back(std::move(a));
      }
      cfg.domains.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  const std::string text = detail::read_file(path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  // ordered_json keeps the declared domain order.
  return config_from_json(j, path.parent_path());
}

Corpus load_corpus(const ExperimentConfig& config, const IsaCatalog& catalog) {
  config.validate();
  Corpus corpus{catalog.name(), {}};
  for (const auto& d : config.domains) {
    DomainProfiles dp{d.name, {}};
    for (const auto& a : d.applications)
      dp.profiles.push_back(build_profile(a.name, d.name, a.files, catalog, config.mode));
    corpus.domains.push_back(std::move(dp));
  }
  return corpus;
}

Corpus load_corpus(const ExperimentConfig& config) {
  return load_corpus(config, load_catalog(config.catalog_path));
}

std::string_view to_string(SuiteKind kind) { return kind == SuiteKind::Intra ? "intra" : "inter"; }

SuiteKind suite_kind_from_string(std::string_view s) {
  if (s == "intra") return SuiteKind::Intra;
  if (s == "inter") return SuiteKind::Inter;
  throw UsageError("unknown suite kind '" + std::string(s) + "' (expected intra or inter)");
}

std::vector<std::vector<std::size_t>> enumerate_combinations(std::size_t n, std::size_t k) {
  if (k == 0 || k > n)
    throw UsageError("cannot choose " + std::to_string(k) + " of " + std::to_string(n));
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    // Rightmost position that can still advance.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::string set_name(std::size_t index, std::size_t total) {
  const std::size_t width = std::max<std::size_t>(2, std::to_string(total).size());
  std::string num = std::to_string(index + 1);
  return "SET-" + std::string(width - std::min(width, num.size()), '0') + num;
}

void compute_means(ExperimentSuite& suite) {
  if (suite.results.empty()) throw ConsistencyError("suite has no results");
  Rational reuse, cost;
  for (const auto& r : suite.results) {
    reuse += r.reusability;
    cost += r.mean_extra_cost;
  }
  const Rational n(static_cast<std::int64_t>(suite.results.size()));
  suite.mean_reusability = reuse / n;
  suite.mean_extra_cost = cost / n;
}

ExperimentSuite run_intra(const Corpus& corpus) {
  ExperimentSuite suite{SuiteKind::Intra, corpus.catalog_name, {}, {}, {}};
  for (const auto& d : corpus.domains) {
    ApplicationGroup group{d.name, {}};
    for (const auto& p : d.profiles) group.members.push_back(member_from_profile(p));
    suite.results.push_back(analyze_group(group));
  }
  compute_means(suite);
  return suite;
}

ExperimentSuite run_inter(const Corpus& corpus, std::size_t group_size) {
  const auto combos = enumerate_combinations(corpus.domains.size(), group_size);
  std::vector<GroupMember> per_domain;
  for (const auto& d : corpus.domains) per_domain.push_back(member_from_profiles(d.name, d.profiles));

  ExperimentSuite suite{SuiteKind::Inter, corpus.catalog_name, {}, {}, {}};
  for (std::size_t i = 0; i < combos.size(); ++i) {
    ApplicationGroup group{set_name(i, combos.size()), {}};
    for (std::size_t d : combos[i]) group.members.push_back(per_domain[d]);
    suite.results.push_back(analyze_group(group));
  }
  compute_means(suite);
  return suite;
}

ExperimentSuite run_intra(const ExperimentConfig& config) { return run_intra(load_corpus(config)); }

ExperimentSuite run_inter(const ExperimentConfig& config) {
  return run_inter(load_corpus(config), config.group_size);
}

nlohmann::ordered_json to_json(const ExperimentSuite& suite) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(suite.kind);
  j["catalog"] = suite.catalog_name;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& r : suite.results) results.push_back(to_json(r));
  j["results"] = std::move(results);
  j["mean_reusability"] = to_json(suite.mean_reusability);
  j["mean_extra_cost"] = to_json(suite.mean_extra_cost);
  return j;
}

}  // namespace masip
