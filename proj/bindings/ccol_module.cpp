#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ccol/gadgets.hpp"
#include "ccol/generate.hpp"
#include "ccol/io.hpp"
#include "ccol/oracle.hpp"
#include "ccol/solver.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> to_letters(const ccol::VertexColouring& phi) {
  std::vector<std::string> out;
  out.reserve(phi.size());
  for (ccol::Colour c : phi) out.emplace_back(1, ccol::colour_char(c));
  return out;
}

ccol::VertexColouring from_letters(const std::vector<std::string>& letters) {
  ccol::VertexColouring out;
  out.reserve(letters.size());
  for (const std::string& s : letters) {
    if (s.size() != 1) throw ccol::contract_error("colour must be one of R, G, B");
    auto c = ccol::colour_from_char(s[0]);
    if (!c) throw ccol::contract_error("colour must be one of R, G, B");
    out.push_back(*c);
  }
  return out;
}

py::dict stats_dict(const ccol::StatsCounter& st) {
  py::dict d;
  d["shifts"] = st.shifts;
  d["boring_resolves"] = st.boring_resolves;
  d["branch_nodes"] = st.branch_nodes;
  d["leaves"] = st.leaves;
  d["max_ops_per_path"] = st.max_ops_per_path;
  d["root_potential"] = st.root_potential;
  d["root_mass"] = st.root_mass;
  d["potential_violations"] = st.potential_violations;
  d["mass_violations"] = st.mass_violations;
  d["disjointness_violations"] = st.disjointness_violations;
  d["path_bound_violations"] = st.path_bound_violations;
  d["leaf_bound_violations"] = st.leaf_bound_violations;
  d["invariant_violations"] = st.invariant_violations;
  d["max_leaves_per_branch"] = st.max_leaves_per_branch;
  return d;
}

py::dict verdict_dict(const ccol::Verdict& v) {
  py::dict d;
  d["sat"] = v.sat();
  d["colouring"] = v.sat() ? py::cast(to_letters(*v.colouring)) : py::none();
  d["stats"] = stats_dict(v.stats);
  return d;
}

}  // namespace

PYBIND11_MODULE(ccol, m) {
  m.doc() = "3-compatible colouring and stubborn list-partition solver";

  py::register_exception<ccol::parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ccol::contract_error>(m, "ContractError", PyExc_ValueError);

  py::class_<ccol::EdgeColouring>(m, "EdgeColouring")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &ccol::EdgeColouring::vertex_count)
      .def("colour",
           [](const ccol::EdgeColouring& g, int u, int v) {
             return std::string(1, ccol::colour_char(g.colour(u, v)));
           })
      .def("set_colour", [](ccol::EdgeColouring& g, int u, int v, const std::string& c) {
        if (c.size() != 1 || !ccol::colour_from_char(c[0]))
          throw ccol::contract_error("colour must be one of R, G, B");
        g.set_colour(u, v, *ccol::colour_from_char(c[0]));
      });

  py::class_<ccol::StubbornInstance>(m, "StubbornInstance")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &ccol::StubbornInstance::vertex_count)
      .def("add_edge", &ccol::StubbornInstance::add_edge)
      .def("edges", [](const ccol::StubbornInstance& g) { return g.edges(); })
      .def("set_list",
           [](ccol::StubbornInstance& g, int v, const std::vector<int>& values) {
             std::uint8_t mask = 0;
             for (int value : values) {
               if (value < 1 || value > 4) throw ccol::contract_error("value outside 1..4");
               mask |= std::uint8_t(1u << (value - 1));
             }
             g.set_list(v, mask);
           })
      .def("list", [](const ccol::StubbornInstance& g, int v) {
        std::vector<int> out;
        for (int value = 1; value <= 4; ++value)
          if (g.list_allows(v, value)) out.push_back(value);
        return out;
      });

  m.def("parse_3cc", [](const std::string& text) { return ccol::parse_3cc(text).graph; },
        "Parse a 3CC instance file (list lines included but not returned; "
        "use parse_3cc_lists for them)");
  m.def("parse_3cc_lists", [](const std::string& text) {
    const ccol::Instance3cc inst = ccol::parse_3cc(text);
    std::vector<std::vector<std::string>> lists;
    lists.reserve(inst.lists.size());
    for (const ccol::ColourSet& s : inst.lists) {
      std::vector<std::string> one;
      for (ccol::Colour c : ccol::kColours)
        if (s.contains(c)) one.emplace_back(1, ccol::colour_char(c));
      lists.push_back(std::move(one));
    }
    return lists;
  });
  m.def("serialize_3cc",
        [](const ccol::EdgeColouring& g) { return ccol::serialize_3cc(g); });
  m.def("parse_stubborn",
        [](const std::string& text) { return ccol::parse_stubborn(text); });
  m.def("serialize_stubborn",
        [](const ccol::StubbornInstance& g) { return ccol::serialize_stubborn(g); });

  m.def("feasible_3cc",
        [](const ccol::EdgeColouring& g, const std::vector<std::string>& phi) {
          return ccol::feasible_3cc(g, from_letters(phi));
        });
  m.def("feasible_stubborn",
        [](const ccol::StubbornInstance& g, const std::vector<int>& phi) {
          ccol::StubbornColouring p(phi.begin(), phi.end());
          return ccol::feasible_stubborn(g, p);
        });

  m.def(
      "solve",
      [](const ccol::EdgeColouring& g, bool check_invariants) {
        return verdict_dict(ccol::solve(g, ccol::SolveOptions{check_invariants}));
      },
      py::arg("instance"), py::arg("check_invariants") = false);
  m.def(
      "solve_with_witness",
      [](const ccol::EdgeColouring& g, const std::vector<std::string>& phi0, int v0,
         bool check_invariants) {
        return verdict_dict(ccol::solve_with_witness(g, from_letters(phi0), v0,
                                                     ccol::SolveOptions{check_invariants}));
      },
      py::arg("instance"), py::arg("phi0"), py::arg("v0"), py::arg("check_invariants") = false);
  m.def(
      "solve_stubborn",
      [](const ccol::StubbornInstance& g, bool check_invariants) {
        const ccol::StubbornVerdict v =
            ccol::solve_stubborn(g, ccol::SolveOptions{check_invariants});
        py::dict d;
        d["sat"] = v.sat();
        if (v.sat()) {
          std::vector<int> phi(v.colouring->begin(), v.colouring->end());
          d["colouring"] = phi;
        } else {
          d["colouring"] = py::none();
        }
        d["reduced_n"] = v.reduced_n;
        d["stats"] = stats_dict(v.stats);
        return d;
      },
      py::arg("instance"), py::arg("check_invariants") = false);

  m.def("brute_force_3cc", [](const ccol::EdgeColouring& g) -> py::object {
    const auto phi = ccol::brute_force_3cc(g);
    if (!phi) return py::none();
    return py::cast(to_letters(*phi));
  });
  m.def("brute_force_stubborn", [](const ccol::StubbornInstance& g) -> py::object {
    const auto phi = ccol::brute_force_stubborn(g);
    if (!phi) return py::none();
    std::vector<int> out(phi->begin(), phi->end());
    return py::cast(out);
  });

  m.def("reduce_stubborn", [](const ccol::StubbornInstance& g) {
    const auto [reduced, map] = ccol::reduce_stubborn(g);
    return py::make_tuple(reduced, ccol::reduction_map_json(map));
  });

  m.def(
      "gen_uniform3cc",
      [](int n, std::uint64_t seed) { return ccol::gen_uniform3cc(n, seed); },
      py::arg("n"), py::arg("seed"));
  m.def(
      "gen_planted3cc",
      [](int n, std::uint64_t seed) {
        const ccol::Planted planted = ccol::gen_planted3cc(n, seed);
        return py::make_tuple(planted.graph, to_letters(planted.hidden));
      },
      py::arg("n"), py::arg("seed"));
  m.def(
      "gen_stubborn",
      [](int n, double p, std::uint64_t seed) { return ccol::gen_stubborn(n, p, seed); },
      py::arg("n"), py::arg("p"), py::arg("seed"));
}
