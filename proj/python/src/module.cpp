#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "masip/asm_ingest.hpp"
#include "masip/cli.hpp"
#include "masip/error.hpp"
#include "masip/experiment.hpp"
#include "masip/isa_catalog.hpp"
#include "masip/set_analysis.hpp"

namespace py = pybind11;
using namespace masip;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.num(), r.den());
}

ApplicationGroup group_from(const std::string& name, const std::vector<std::pair<std::string, MnemonicSet>>& members) {
  ApplicationGroup group{name, {}};
  for (const auto& [label, used] : members) group.members.push_back({label, used, used});
  return group;
}

}  // namespace

PYBIND11_MODULE(_masip, m) {
  m.doc() = "Instruction-set reuse analysis for multi-application processors";

  static py::exception<Error> error(m, "MasipError");
  static py::exception<UsageError> usage_error(m, "UsageError", error.ptr());
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<ConsistencyError> consistency_error(m, "ConsistencyError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UsageError& e) {
      py::set_error(usage_error, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const ConsistencyError& e) {
      py::set_error(consistency_error, e.what());
    }
  });

  py::class_<IsaCatalog>(m, "IsaCatalog")
      .def(py::init<std::string, const std::vector<std::string>&, std::map<std::string, std::string>>(),
           py::arg("name"), py::arg("mnemonics"), py::arg("aliases") = std::map<std::string, std::string>{})
      .def_property_readonly("name", &IsaCatalog::name)
      .def_property_readonly("mnemonics", &IsaCatalog::mnemonics)
      .def_property_readonly("aliases", &IsaCatalog::aliases)
      .def_property_readonly("line_comments", &IsaCatalog::line_comments)
      .def("__len__", &IsaCatalog::size)
      .def("__contains__", &IsaCatalog::contains)
      .def("canonicalize",
           [](const IsaCatalog& c, std::string_view raw) {
             auto r = c.canonicalize(raw);
             return py::make_tuple(r.mnemonic, r.known);
           })
      .def("serialize", &IsaCatalog::serialize)
      .def("__eq__", [](const IsaCatalog& a, const IsaCatalog& b) { return a == b; })
      .def("__repr__", [](const IsaCatalog& c) {
        return "<IsaCatalog " + c.name() + ": " + std::to_string(c.size()) + " mnemonics>";
      });

  m.def("load_catalog", &load_catalog, py::arg("path"));
  m.def("parse_catalog", &parse_catalog, py::arg("text"), py::arg("source") = "<catalog>");

  m.def(
      "parse_assembly",
      [](std::string_view text, const IsaCatalog& catalog, std::string_view mode, std::string_view source) {
        auto r = parse_assembly(text, catalog, parse_mode_from_string(mode), source);
        py::dict d;
        d["used"] = r.used;
        d["counts"] = r.counts;
        d["unknown"] = r.unknown;
        d["accepted_lines"] = r.accepted_lines;
        return d;
      },
      py::arg("text"), py::arg("catalog"), py::arg("mode") = "lenient", py::arg("source") = "<input>");

  m.def(
      "build_profile",
      [](const std::string& app, const std::string& domain, const std::vector<std::filesystem::path>& files,
         const IsaCatalog& catalog, std::string_view mode) {
        return to_python(to_json(build_profile(app, domain, files, catalog, parse_mode_from_string(mode))));
      },
      py::arg("application"), py::arg("domain"), py::arg("files"), py::arg("catalog"), py::arg("mode") = "lenient");

  m.def("base_instruction_set", [](const std::vector<MnemonicSet>& sets) { return base_instruction_set(sets); });
  m.def("masip_union", [](const std::vector<MnemonicSet>& sets) { return masip_union(sets); });
  m.def("extension_set", &extension_set, py::arg("member"), py::arg("base"));
  m.def(
      "reusability_factor", [](std::size_t b, std::size_t u) { return to_fraction(reusability_factor(b, u)); },
      py::arg("base_size"), py::arg("union_size"));
  m.def(
      "extra_cost_factor",
      [](std::size_t mem, std::size_t b, std::size_t u) { return to_fraction(extra_cost_factor(mem, b, u)); },
      py::arg("member_size"), py::arg("base_size"), py::arg("union_size"));
  m.def(
      "analyze_group",
      [](const std::string& name, const std::vector<std::pair<std::string, MnemonicSet>>& members) {
        return to_python(to_json(analyze_group(group_from(name, members))));
      },
      py::arg("name"), py::arg("members"));

  m.def("enumerate_combinations", &enumerate_combinations, py::arg("n"), py::arg("k"));
  m.def("set_name", &set_name, py::arg("index"), py::arg("total"));

  m.def(
      "run_suite",
      [](const std::filesystem::path& config_path, std::string_view kind, std::optional<std::size_t> group_size) {
        auto config = load_config(config_path);
        if (group_size) config.group_size = *group_size;
        config.validate();
        auto suite = suite_kind_from_string(kind) == SuiteKind::Intra ? run_intra(config) : run_inter(config);
        return to_python(to_json(suite));
      },
      py::arg("config"), py::arg("kind") = "intra", py::arg("group_size") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
