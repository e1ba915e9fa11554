// Regenerates the reference fixture corpora under tests/fixtures from the
// published per-group cardinalities. Output is deterministic.
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "masip/fixtures.hpp"
#include "masip/isa_catalog.hpp"

namespace fs = std::filesystem;
using namespace masip;

int main(int argc, char** argv) {
  CLI::App app{"Generate reference assembly corpora"};
  std::string root = ".";
  std::uint32_t seed = 2011;
  app.add_option("--root", root, "Repository root");
  app.add_option("--seed", seed, "Generator seed");
  CLI11_PARSE(app, argc, argv);

  try {
    const fs::path base(root);
    const fs::path fixtures = base / "tests" / "fixtures";
    const fs::path arm_path = base / "data" / "catalogs" / "arm-thumb.isa";
    const fs::path pisa_path = base / "data" / "catalogs" / "pisa.isa";
    const IsaCatalog arm = load_catalog(arm_path);
    const IsaCatalog pisa = load_catalog(pisa_path);

    fixtures::write_intra_corpus(fixtures::arm_intra_targets(), arm, arm_path,
                                 fixtures / "arm-intra", fixtures / "arm_intra.json", seed);
    fixtures::write_intra_corpus(fixtures::pisa_intra_targets(), pisa, pisa_path,
                                 fixtures / "pisa-intra", fixtures / "pisa_intra.json", seed);
    fixtures::write_inter_corpus(fixtures::arm_inter_targets(), arm, arm_path,
                                 fixtures / "arm-inter", fixtures / "arm_inter.json", seed);
    fixtures::write_inter_corpus(fixtures::pisa_inter_targets(), pisa, pisa_path,
                                 fixtures / "pisa-inter", fixtures / "pisa_inter.json", seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cout << "fixtures written under " << (fs::path(root) / "tests" / "fixtures").string() << '\n';
  return 0;
}
