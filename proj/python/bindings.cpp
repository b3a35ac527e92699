#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "branchkit/acceptance.hpp"
#include "branchkit/ansatz.hpp"
#include "branchkit/branching.hpp"
#include "branchkit/char_engine.hpp"
#include "branchkit/cli.hpp"
#include "branchkit/errors.hpp"
#include "branchkit/json_io.hpp"

namespace py = pybind11;
using namespace branchkit;

namespace {

py::object to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(to_py(x));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return out;
        }
    }
}

KWeight weight(const std::string& family, const std::string& literal) {
    return parse_weight(GroupFamily::parse(family), literal);
}

VirtualChar target(const std::string& family, const std::string& literal) {
    return parse_virtual_char(GroupFamily::parse(family), literal);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Branching laws, Weyl terms and good-weight classification";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<family_error>(m, "FamilyError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

    m.def("branch", [](const std::string& f, const std::string& w) { return to_py(to_json(branch(weight(f, w)))); },
          py::arg("family"), py::arg("weight"));
    m.def("oracle_restrict",
          [](const std::string& f, const std::string& w) { return to_py(to_json(oracle_restrict(weight(f, w)))); },
          py::arg("family"), py::arg("weight"));
    m.def("weyl_terms",
          [](const std::string& f, const std::string& w) {
              const auto g = GroupFamily::parse(f);
              Json arr = Json::array();
              for (const auto& t : weyl_terms(weight(f, w))) arr.push_back(to_json(g, t));
              return to_py(arr);
          },
          py::arg("family"), py::arg("weight"));
    m.def("star_groups",
          [](const std::string& f, const std::string& w) {
              Json arr = Json::array();
              for (const auto& g : star_groups(weight(f, w))) arr.push_back(to_json(g));
              return to_py(arr);
          },
          py::arg("family"), py::arg("weight"));
    m.def("is_good",
          [](const std::string& f, const std::string& w, int radius, bool witnesses) {
              const auto kw = weight(f, w);
              py::gil_scoped_release release;
              const auto v = is_good(kw, AnsatzOptions{radius, witnesses});
              py::gil_scoped_acquire acquire;
              return to_py(to_json(kw, v));
          },
          py::arg("family"), py::arg("weight"), py::arg("radius") = 1, py::arg("witnesses") = false);
    m.def("member_soe",
          [](const std::string& f, const std::string& t) { return to_py(to_json(member_soe(target(f, t)))); },
          py::arg("family"), py::arg("target"));
    m.def("lattice_member",
          [](const std::string& f, const std::string& t, int radius) {
              return to_py(to_json(lattice_member(target(f, t), radius)));
          },
          py::arg("family"), py::arg("target"), py::arg("radius") = 1);
    m.def("preimage",
          [](const std::string& f, const std::string& t) { return to_py(to_json(preimage_su1n(target(f, t)))); },
          py::arg("family"), py::arg("target"));
    m.def("invariant_I",
          [](const std::string& f, const std::string& t) { return to_py(to_json(invariant_I(target(f, t)))); },
          py::arg("family"), py::arg("target"));
    m.def("verify_telescoping", &verify_telescoping, py::arg("m"));
    m.def("explore_sostar",
          [](int n, int bound, int radius, int jobs) {
              std::vector<ExploreRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = explore_sostar(n, bound, radius, jobs);
              }
              Json arr = Json::array();
              for (const auto& r : rows) arr.push_back(to_json(r));
              return to_py(arr);
          },
          py::arg("n"), py::arg("bound"), py::arg("radius"), py::arg("jobs") = 1);
    m.def("run_criterion",
          [](int id, int jobs) {
              CriterionResult r;
              {
                  py::gil_scoped_release release;
                  r = run_criterion(id, jobs);
              }
              py::dict d;
              d["id"] = r.id;
              d["title"] = r.title;
              d["passed"] = r.passed;
              d["detail"] = r.detail;
              d["seconds"] = r.seconds;
              return d;
          },
          py::arg("id"), py::arg("jobs") = 1);
    m.def("run",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = run_command(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
