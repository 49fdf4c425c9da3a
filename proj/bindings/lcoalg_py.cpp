// Python bindings for the main operations: catalog and axiom checks, walk
// expansions, Ito map classification, forms-dialgebra reports, graph-driven
// CP iterates, pointer polynomial products, and mutation trajectories.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "lcoalg/coassoc.hpp"
#include "lcoalg/cp.hpp"
#include "lcoalg/forms.hpp"
#include "lcoalg/ito.hpp"
#include "lcoalg/poly.hpp"

namespace py = pybind11;
using namespace lcoalg;

namespace {

std::vector<std::tuple<std::string, bool, std::string>> report_rows(
    const AxiomReport& rep) {
  std::vector<std::tuple<std::string, bool, std::string>> rows;
  for (const auto& c : rep.checks) rows.push_back({c.name, c.ok, c.witness});
  return rows;
}

std::vector<Form> sample_forms(const StructAlgebra& alg, std::uint64_t seed,
                               int count) {
  std::mt19937_64 rng(seed);
  std::vector<Form> out;
  while (static_cast<int>(out.size()) < count) {
    Form f(alg.kind);
    int deg = 1 + static_cast<int>(rng() % 2);
    for (int t = 0; t < 2; ++t) {
      FormWord w(2 * deg + 2);
      for (auto& letter : w) letter = static_cast<int>(rng() % alg.dim());
      long c = static_cast<long>(rng() % 4) - 2;
      if (c == 0) c = 1;
      f = f + form_word(alg, w, Scalar::integer(c, alg.kind));
    }
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

Vect invertible_unit_shift(const StructAlgebra& alg) {
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.basis.unit && i == *alg.basis.unit) continue;
    Vect u = alg.unit() + alg.elem(i);
    if (invert(alg, u)) return u;
  }
  throw std::invalid_argument("no invertible 1 + e_i element found");
}

}  // namespace

PYBIND11_MODULE(lcoalg_py, m) {
  m.doc() = "coproduct structures on graphs: axioms, walks, Ito maps, forms, "
            "CP iterates, pointer products and mutations";

  m.def("catalog_names", &catalog_names, "names of the built-in coalgebras");

  m.def(
      "axioms",
      [](const std::string& name) {
        return report_rows(check_axioms(builtin_catalog(name).lc));
      },
      py::arg("catalog"),
      "structural checks of a built-in coalgebra as (name, ok, witness) rows");

  m.def(
      "walk",
      [](const std::string& name, const std::string& start, int steps) {
        LCoalgebra c = builtin_catalog(name).lc;
        int v = c.basis.index_of(start);
        return walk_expansion(c, Vect::word({v}, Scalar::one(c.kind)), steps - 1)
            .str(c.basis);
      },
      py::arg("catalog"), py::arg("start"), py::arg("steps"),
      "the iterated right-coproduct expansion of a start symbol");

  m.def(
      "classify_conjugation",
      [](const std::string& algebra) {
        StructAlgebra alg = algebra_catalog(algebra);
        LinMap rho = conjugation_ito(alg, invertible_unit_shift(alg));
        return map_class_name(classify_map(rho, alg).cls);
      },
      py::arg("algebra"),
      "classification of the conjugation map u^-1 a u - a");

  m.def(
      "forms_report",
      [](const std::string& algebra, std::uint64_t seed, int samples) {
        StructAlgebra alg = algebra_catalog(algebra);
        return report_rows(form_laws_report(alg, sample_forms(alg, seed, samples)));
      },
      py::arg("algebra"), py::arg("seed") = 0, py::arg("samples") = 6,
      "star/differential laws on random formal forms");

  m.def(
      "cp_power_gap",
      [](int steps) {
        CMat id2 = CMat::Identity(2, 2), X(2, 2), g(2, 2);
        X << 0, 1, 0, 0;
        g << 1, 0, 0, -1;
        WeightedDigraph gr;
        gr.vertices = {"a", "b"};
        gr.arrows = {{"aa", 0, 0}, {"ab", 0, 1}, {"ba", 1, 0}, {"bb", 1, 1}};
        KrausFamily fam = kraus_family(gr, {X, g});
        CMat pow = CMat::Identity(4, 4);
        CMat one = CPMap{2, fam.ops}.superoperator();
        for (int i = 0; i < steps; ++i) pow = one * pow;
        return (iterate_circle_g(fam, steps).superoperator() - pow)
            .cwiseAbs()
            .maxCoeff();
      },
      py::arg("steps"),
      "superoperator gap between the complete-graph iterate and the usual "
      "composition power");

  m.def(
      "matrix_product_report",
      [](std::uint64_t seed) {
        return report_rows(matrix_iso_check(pointer_space(1), {2}, 40, seed));
      },
      py::arg("seed") = 0,
      "the static pointer product over a 2x2 matrix coproduct against the "
      "matrix oracle");

  m.def(
      "cross_product_report",
      [](std::uint64_t seed) { return report_rows(cross_product_check(100, seed)); },
      py::arg("seed") = 0,
      "the shifted-triangle commutator against the cross product");

  m.def(
      "mutate_squares",
      [](int steps, std::uint64_t seed) {
        StructAlgebra A = pointer_space(1);
        MutationProcess proc{{builtin_mutation_state("H2"),
                              builtin_mutation_state("diamond_a"),
                              builtin_mutation_state("triangle")},
                             {Scalar::rational(4, 5), Scalar::rational(1, 10),
                              Scalar::rational(1, 10)},
                             seed};
        PointerPoly z = PointerPoly::zero(4, A.kind);
        for (int i = 0; i < 4; ++i)
          z.coeffs[i] = Vect::word({0}, Scalar::rational(1));
        MutationTrajectory traj = mutation_simulate(A, proc, z, steps);
        std::vector<std::pair<std::string, std::vector<std::string>>> rows;
        for (int s = 0; s <= steps; ++s) {
          std::vector<std::string> vals;
          for (int i = 0; i < 4; ++i)
            vals.push_back(traj.values[s].coeffs[i].is_zero()
                               ? "0"
                               : traj.values[s].coeffs[i].terms().begin()->second.str());
          rows.push_back({s == 0 ? "start" : proc.states[traj.states[s - 1]].name,
                          vals});
        }
        return rows;
      },
      py::arg("steps") = 4, py::arg("seed") = 0,
      "an iterated-squaring trajectory under randomly drawn products");
}
