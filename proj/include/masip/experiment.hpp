#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "masip/asm_ingest.hpp"
#include "masip/isa_catalog.hpp"
#include "masip/set_analysis.hpp"

namespace masip {

struct ApplicationSpec {
  std::string name;
  std::vector<std::filesystem::path> files;
};

struct DomainSpec {
  std::string name;
  std::vector<ApplicationSpec> applications;
};

/// Declarative description of a corpus. Domains keep their declaration
/// order, which fixes the inter-domain combination numbering.
struct ExperimentConfig {
  std::filesystem::path catalog_path;
  ParseMode mode = ParseMode::Lenient;
  std::size_t group_size = 4;
  std::vector<DomainSpec> domains;

  /// Throws InputError for structural problems and UsageError when
  /// group_size is zero or exceeds the number of domains.
  void validate() const;
};

/// Reads a JSON config. Relative paths resolve against the config's directory.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig config_from_json(const nlohmann::ordered_json& j,
                                  const std::filesystem::path& base_dir);

struct DomainProfiles {
  std::string name;
  std::vector<InstructionProfile> profiles;
};

/// Every application of a config parsed against one catalog.
struct Corpus {
  std::string catalog_name;
  std::vector<DomainProfiles> domains;
};

Corpus load_corpus(const ExperimentConfig& config);
Corpus load_corpus(const ExperimentConfig& config, const IsaCatalog& catalog);

enum class SuiteKind { Intra, Inter };
std::string_view to_string(SuiteKind kind);
SuiteKind suite_kind_from_string(std::string_view s);

struct ExperimentSuite {
  SuiteKind kind = SuiteKind::Intra;
  std::string catalog_name;
  std::vector<ExperimentResult> results;
  Rational mean_reusability;
  Rational mean_extra_cost;
};

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> enumerate_combinations(std::size_t n, std::size_t k);

/// "SET-01", "SET-02", ... (wider when more than 99 combinations exist).
std::string set_name(std::size_t index, std::size_t total);

ExperimentSuite run_intra(const Corpus& corpus);
ExperimentSuite run_inter(const Corpus& corpus, std::size_t group_size);
ExperimentSuite run_intra(const ExperimentConfig& config);
ExperimentSuite run_inter(const ExperimentConfig& config);

/// Arithmetic means over the results; fills the suite's mean fields.
void compute_means(ExperimentSuite& suite);

nlohmann::ordered_json to_json(const ExperimentSuite& suite);

}  // namespace masip
