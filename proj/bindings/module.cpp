// Python bindings for the main operations. Big integers and exact rationals
// cross the boundary as decimal strings ("P" / "P/Q") so nothing is ever
// silently truncated.

#include <pybind11/pybind11.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "roughdist/counting.hpp"
#include "roughdist/feasibility.hpp"
#include "roughdist/granular.hpp"
#include "roughdist/indices.hpp"
#include "roughdist/io.hpp"
#include "roughdist/poset.hpp"

namespace py = pybind11;
using namespace roughdist;

namespace {

Integer to_int(const std::string& s) { return Integer(s); }
Rational to_rat(const std::string& s) { return parse_rational(s); }

py::dict entry_dict(const FeasibilityEntry& e) {
  py::dict d;
  d["k"] = e.k.str();
  d["pi"] = e.pi ? py::object(py::str(render_rational(*e.pi))) : py::none();
  d["rough"] = e.rough_count.str();
  return d;
}

FinitePoset poset_from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

GranularOperatorSpace gos_from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_gos(in);
}

}  // namespace

PYBIND11_MODULE(roughdist_core, m) {
  m.doc() = "feasibility, counting, and distribution indices for crisp/rough populations";

  // feasibility ------------------------------------------------------------
  m.def("case0_k", [](const std::string& n) -> std::optional<std::string> {
    auto k = case0_k(to_int(n));
    if (!k) return std::nullopt;
    return k->str();
  });
  m.def("case1_k", [](const std::string& n) -> std::optional<std::string> {
    auto k = case1_k(to_int(n));
    if (!k) return std::nullopt;
    return k->str();
  });
  m.def("powerset_models", [](const std::string& n_bound) {
    py::list out;
    for (const auto& mm : case1_powerset_models(to_int(n_bound))) {
      py::dict d;
      d["x"] = mm.x;
      d["k"] = mm.k.str();
      d["n"] = mm.n.str();
      out.append(d);
    }
    return out;
  });
  m.def(
      "case2_admissible",
      [](const std::string& n, const std::string& alpha) {
        auto r = case2_admissible_ks(to_int(n), to_rat(alpha));
        py::dict d;
        d["candidates"] = r.candidate_count.str();
        d["k_min"] = r.k_min.str();
        d["k_max"] = r.k_max.str();
        py::list adm, trimmed;
        for (const auto& e : r.admissible) adm.append(entry_dict(e));
        for (const auto& e : r.admissible_trimmed) trimmed.append(entry_dict(e));
        d["admissible"] = adm;
        d["admissible_trimmed"] = trimmed;
        return d;
      },
      py::arg("n"), py::arg("alpha"));
  m.def(
      "case2_count_values",
      [](const std::string& n, const std::string& pi, bool trimmed, bool strict) {
        return case2_count_values(to_int(n), to_rat(pi), trimmed, strict).str();
      },
      py::arg("n"), py::arg("pi"), py::arg("trimmed") = false, py::arg("strict") = false);

  // counting -----------------------------------------------------------------
  m.def(
      "bounded_model_count",
      [](const std::string& r, std::size_t g, const std::string& a, const std::string& b) {
        auto rep = bounded_model_count({to_int(r), g, to_int(a), to_int(b)});
        py::dict d;
        d["B"] = rep.B.str();
        d["n_o"] = rep.n_o.str();
        d["lower"] = rep.lower.str();
        d["upper"] = rep.upper.str();
        return d;
      },
      py::arg("r"), py::arg("g"), py::arg("a"), py::arg("b"));
  m.def("chain_distribution_count", [](const std::string& pi, const std::string& alpha) {
    return chain_distribution_count(to_int(pi), to_int(alpha)).str();
  });
  m.def("chain_cover_model_count", [](const std::string& poset_text, const std::string& r) {
    auto rep = chain_cover_model_count(poset_from_text(poset_text), to_int(r));
    py::dict d;
    d["B"] = rep.B.str();
    d["n_o"] = rep.n_o.str();
    return d;
  });
  m.def("placement_oracle_count", [](const std::string& poset_text, std::size_t r) {
    return placement_oracle_count(poset_from_text(poset_text), r).str();
  });

  // posets ------------------------------------------------------------------
  m.def("poset_width", [](const std::string& poset_text) {
    auto p = poset_from_text(poset_text);
    auto w = width(p);
    py::list antichain;
    for (auto i : w.antichain) antichain.append(p.label(i));
    return py::make_tuple(w.width, antichain);
  });
  m.def("poset_chain_cover", [](const std::string& poset_text) {
    auto p = poset_from_text(poset_text);
    py::list out;
    for (const auto& c : disjoint_chain_cover(p).chains) {
      py::list chain;
      for (auto i : c.members) chain.append(p.label(i));
      out.append(chain);
    }
    return out;
  });
  m.def("hasse_index", [](const std::string& poset_text) {
    return render_rational(hasse_index(poset_from_text(poset_text)));
  });
  m.def("find_sdr",
        [](std::size_t ground_size, const std::vector<std::vector<std::size_t>>& members)
            -> std::optional<std::vector<std::size_t>> {
          SetFamily f;
          f.ground_size = ground_size;
          f.members = members;
          return find_sdr(f);
        });

  // granular spaces -----------------------------------------------------------
  m.def("classify_space", [](const std::string& gos_text) {
    auto g = gos_from_text(gos_text);
    auto v = validate_space(g);
    auto inst = build_framework(g);
    py::dict d;
    d["axioms_ok"] = v.ok();
    d["n"] = inst.n;
    d["k"] = inst.k;
    d["rough"] = inst.rough.size();
    auto adm = check_admissible_granulation(g);
    d["wra"] = adm.wra;
    d["ls"] = adm.ls;
    d["fu"] = adm.fu;
    return d;
  });
  m.def("iota_index", [](const std::string& gos_text) {
    auto g = gos_from_text(gos_text);
    auto inst = build_framework(g);
    std::vector<ApproximationPair> pairs;
    for (Subset x : inst.rough) pairs.push_back(inst.phi.at(x));
    auto idx = iota(pairs);
    py::dict d;
    d["c0"] = idx.c0.str();
    d["c1"] = idx.c1.str();
    d["c_pi"] = idx.c_pi.str();
    d["c_e"] = idx.c_e.str();
    d["value"] = idx.numeric();
    d["rendered"] = idx.render();
    return d;
  });

  // alpha refinement ----------------------------------------------------------
  m.def(
      "alpha_refine",
      [](const std::function<bool(const std::string&, const std::string&)>& contains,
         unsigned grid_n, const std::string& epsilon,
         unsigned max_rounds) -> std::optional<std::string> {
        AlphaSearchConfig cfg;
        cfg.grid_n = grid_n;
        cfg.epsilon = to_rat(epsilon);
        cfg.max_rounds = max_rounds;
        auto got = alpha_refine(
            [&](const Rational& lo, const Rational& hi) {
              return contains(render_rational(lo), render_rational(hi));
            },
            cfg);
        if (!got) return std::nullopt;
        return render_rational(*got);
      },
      py::arg("contains"), py::arg("grid_n") = 10, py::arg("epsilon") = "1/1000000",
      py::arg("max_rounds") = 32);
}
