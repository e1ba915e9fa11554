#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "masip/error.hpp"
#include "masip/isa_catalog.hpp"

namespace masip::fixtures {

/// Sorted abstract symbol ids.
using SymbolSet = std::vector<std::size_t>;

class InfeasibleTarget : public InputError {
 public:
  using InputError::InputError;
};

/// Cardinalities one group must reproduce.
struct GroupTarget {
  std::vector<std::size_t> member_sizes;
  std::size_t base = 0;
  std::size_t union_size = 0;
};

/// Throws InfeasibleTarget with a diagnostic when no member sets can match.
void check_feasible(const GroupTarget& target);

/// Member sets over symbols 0..union_size-1 whose intersection is exactly
/// {0..base-1} and whose union is every symbol. Verified before returning.
std::vector<SymbolSet> synthesize_group(const GroupTarget& target);

/// Brute-force, per-symbol check of sizes, intersection and union.
bool group_matches(const std::vector<SymbolSet>& members, const GroupTarget& target);

struct CombinationTarget {
  std::size_t base = 0;
  std::size_t union_size = 0;
};

/// Joint targets for an inter-domain corpus: every domain's unioned size and,
/// for each k-combination of domains (lexicographic order), the size of the
/// intersection over all constituent applications and of the union.
struct CorpusTarget {
  std::vector<std::size_t> domain_sizes;
  std::size_t group_size = 4;
  std::size_t apps_per_domain = 4;
  std::vector<CombinationTarget> combinations;
};

struct SynthDomain {
  std::vector<SymbolSet> apps;
};

std::vector<SynthDomain> synthesize_corpus(const CorpusTarget& target);
bool corpus_matches(const std::vector<SynthDomain>& domains, const CorpusTarget& target);

/// Catalog mnemonics in a seeded order; symbol i is rendered as element i.
std::vector<std::string> symbol_order(const IsaCatalog& catalog, std::uint32_t seed);

struct Dialect {
  std::string comment = "@";
  std::vector<std::string> registers{"r0", "r1", "r2", "r3", "r4", "r5", "r6", "r7"};
};

Dialect dialect_for(const IsaCatalog& catalog);

/// Assembly text for one application split across `files` listings. Every
/// mnemonic occurs at least once; decorations exercise the parser's rules.
std::vector<std::string> render_application(const std::string& application,
                                            const MnemonicSet& mnemonics,
                                            const IsaCatalog& catalog, const Dialect& dialect,
                                            std::uint32_t seed, std::size_t files = 2);

// Published cardinalities for the reference corpora.

struct AppTarget {
  std::string name;
  std::size_t size = 0;
};

struct IntraDomainTarget {
  std::string domain;
  std::vector<AppTarget> apps;
  std::size_t base = 0;
  std::size_t union_size = 0;
};

struct InterCorpusTarget {
  std::vector<std::string> domains;
  std::vector<std::vector<std::string>> app_names;
  CorpusTarget target;
};

std::vector<IntraDomainTarget> arm_intra_targets();
std::vector<IntraDomainTarget> pisa_intra_targets();
InterCorpusTarget arm_inter_targets();
InterCorpusTarget pisa_inter_targets();

/// Synthesizes, renders and writes a corpus plus its JSON config.
/// `catalog_path` is recorded relative to `config_path`'s directory.
void write_intra_corpus(const std::vector<IntraDomainTarget>& targets, const IsaCatalog& catalog,
                        const std::filesystem::path& catalog_path,
                        const std::filesystem::path& corpus_dir,
                        const std::filesystem::path& config_path, std::uint32_t seed);
void write_inter_corpus(const InterCorpusTarget& targets, const IsaCatalog& catalog,
                        const std::filesystem::path& catalog_path,
                        const std::filesystem::path& corpus_dir,
                        const std::filesystem::path& config_path, std::uint32_t seed);

}  // namespace masip::fixtures
