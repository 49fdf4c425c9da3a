// Acceptance gate: one pass/fail line per criterion, each with a wall-clock
// bound.  Exits nonzero if any criterion fails or overruns its bound.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lcoalg/algebra_ops.hpp"
#include "lcoalg/coassoc.hpp"
#include "lcoalg/cp.hpp"
#include "lcoalg/forms.hpp"
#include "lcoalg/graph.hpp"
#include "lcoalg/ito.hpp"
#include "lcoalg/poly.hpp"

using namespace lcoalg;

namespace {

std::mt19937_64 g_rng(20260826);

WeightedDigraph random_stochastic_graph(std::mt19937_64& rng, int nv) {
  WeightedDigraph g;
  for (int v = 0; v < nv; ++v) g.vertices.push_back("v" + std::to_string(v));
  for (int v = 0; v < nv; ++v) {
    int k = 1 + static_cast<int>(rng() % 3);
    for (int a = 0; a < k; ++a)
      g.arrows.push_back({"a" + std::to_string(v) + "_" + std::to_string(a), v,
                          static_cast<int>(rng() % nv), Scalar::rational(1, k)});
  }
  return g;
}

Vect rand_invertible(std::mt19937_64& rng, const StructAlgebra& alg) {
  for (;;) {
    Vect u(1);
    for (int i = 0; i < alg.dim(); ++i)
      u = u + Vect::word({i}, Scalar::integer(static_cast<long>(rng() % 5) - 2,
                                              alg.kind));
    if (invert(alg, u)) return u;
  }
}

Vect invertible_unit_shift(const StructAlgebra& alg) {
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.basis.unit && i == *alg.basis.unit) continue;
    Vect u = alg.unit() + alg.elem(i);
    if (invert(alg, u)) return u;
  }
  throw std::runtime_error("no invertible 1 + e_i");
}

std::vector<Form> all_degree1_forms(const StructAlgebra& alg) {
  std::vector<Form> out;
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b)
      for (int c = 0; c < alg.dim(); ++c)
        for (int d = 0; d < alg.dim(); ++d) {
          Form f = form_word(alg, {a, b, c, d});
          if (f.is_zero()) continue;
          bool seen = false;
          for (const auto& g : out)
            if (g == f) seen = true;
          if (!seen) out.push_back(f);
        }
  return out;
}

std::vector<Form> rand_forms(std::mt19937_64& rng, const StructAlgebra& alg,
                             int count) {
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

bool require_all(const AxiomReport& rep) { return rep.all_ok(); }

// --- the ten criteria ----------------------------------------------------------

// Breaking + applicable counit equations across the catalog and 100 random
// stochastic digraphs; the T4 two-point structure admits no left counit.
bool criterion_axioms() {
  for (const auto& name : catalog_names()) {
    AxiomReport rep = check_axioms(builtin_catalog(name).lc);
    if (!rep.find("breaking-equation")->ok) return false;
    if (const auto* rc = rep.find("right-counit"); rc && !rc->ok) return false;
    if (name != "two_point_T4")
      if (const auto* lc2 = rep.find("left-counit"); lc2 && !lc2->ok) return false;
  }
  // Every candidate left counit on T4 fails the counit equation.
  LCoalgebra t4 = builtin_catalog("two_point_T4").lc;
  for (long p = -2; p <= 2; ++p)
    for (long q = -2; q <= 2; ++q) {
      LCoalgebra d = t4;
      std::map<TensorWord, Vect> t;
      t[{0}] = Vect::word({}, Scalar::rational(p));
      t[{1}] = Vect::word({}, Scalar::rational(q));
      d.left_counit = LinMap::from_table(1, 0, t);
      if (check_axioms(d).find("left-counit")->ok) return false;
    }
  for (int trial = 0; trial < 100; ++trial) {
    WeightedDigraph g =
        random_stochastic_graph(g_rng, 2 + static_cast<int>(g_rng() % 7));
    AxiomReport rep = check_axioms(
        to_markov_lcoalgebra(g, ProbabilityConvention::given_weights));
    if (!rep.find("breaking-equation")->ok) return false;
    if (const auto* rc = rep.find("right-counit"); rc && !rc->ok) return false;
    if (const auto* lc2 = rep.find("left-counit"); lc2 && !lc2->ok) return false;
  }
  return true;
}

// Reading an orbit pattern equals the Hochschild boundaries, exhaustively for
// periods 2-3 and on 200 random tuples for periods 4-5 over the quaternions.
bool criterion_reading_map() {
  StructAlgebra q = quaternions();
  auto matches = [&](const OrbitPattern& p) {
    Vect word = Vect::basis_word(p.entries, q.kind);
    return reading_map(q, p, false) == hochschild_bprime(q, word) &&
           reading_map(q, p, true) == hochschild_b(q, word);
  };
  for (int n : {2, 3}) {
    std::vector<int> idx(n, 0);
    for (;;) {
      if (!matches({idx})) return false;
      int pos = n - 1;
      while (pos >= 0 && ++idx[pos] == q.dim()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  for (int n : {4, 5})
    for (int t = 0; t < 100; ++t) {
      OrbitPattern p;
      for (int s = 0; s < n; ++s)
        p.entries.push_back(static_cast<int>(g_rng() % q.dim()));
      if (!matches(p)) return false;
    }
  return true;
}

// The four 2-cochains annihilated by the star square, and the converse
// classification of 1-cochains from their value at the unit.
bool criterion_star_square() {
  for (StructAlgebra alg : {quaternions(), m2_pauli()}) {
    Vect u = invertible_unit_shift(alg);
    LinMap hom = conjugation_map(alg, u);
    LinMap ito = conjugation_ito(alg, u);
    Vect h = alg.elem(alg.dim() - 1);
    LinMap der(1, 1, [&alg, h](const TensorWord& w) {
      Vect x = Vect::basis_word(w, alg.kind);
      return alg.mul(h, x) - alg.mul(x, h);
    });
    Cochain der_m(alg, 2, [&alg, der](const TensorWord& w) {
      return der.apply(alg.mul(alg.elem(w[0]), alg.elem(w[1])));
    });
    if (!require_all(carre_star_check(cochain_product_m(alg), alg))) return false;
    if (!require_all(carre_star_check(curvature(alg, hom), alg))) return false;
    if (!require_all(carre_star_check(curvature(alg, ito), alg))) return false;
    if (!require_all(carre_star_check(der_m, alg))) return false;
    if (carre_star_classify(hom, alg) != MapClass::Homomorphism) return false;
    if (carre_star_classify(ito, alg) != MapClass::ItoDerivative) return false;
    if (classify_map(der, alg).cls != MapClass::LeibnitzDerivative) return false;
  }
  return true;
}

// Fifty random invertible conjugations per algebra roundtrip through the
// Ito <-> homomorphism bijection exactly.
bool criterion_bijection() {
  for (StructAlgebra alg : {quaternions(), m2_pauli()}) {
    for (int t = 0; t < 50; ++t) {
      Vect u = rand_invertible(g_rng, alg);
      LinMap ito = conjugation_ito(alg, u);
      LinMap hom = ito_hom_bijection(ito, alg, BijectionDirection::ToHom);
      LinMap back = ito_hom_bijection(hom, alg, BijectionDirection::ToIto);
      for (int i = 0; i < alg.dim(); ++i) {
        if (back.on_word({i}) != ito.on_word({i})) return false;
        if (hom.on_word({i}) != conjugation_map(alg, u).on_word({i})) return false;
      }
    }
  }
  return true;
}

// The f_n cochain complex up to n = 4 on a commutative group algebra (with a
// non-conjugation Ito map) and on the 2x2 matrix algebra.
bool criterion_fn_complex() {
  StructAlgebra z3 = group_algebra_zn(3);
  std::map<TensorWord, Vect> phi;
  for (int i = 0; i < 3; ++i)
    phi[{i}] = Vect::word({(2 * i) % 3}, Scalar::rational(1));
  LinMap rho_z3 = LinMap::from_table(1, 1, phi) - LinMap::identity(1);
  if (!require_all(cochain_complex_fn(rho_z3, z3, 4, 101))) return false;

  StructAlgebra m2 = m2_pauli();
  LinMap rho_m2 = conjugation_ito(m2, invertible_unit_shift(m2));
  if (!require_all(cochain_complex_fn(rho_m2, m2, 4, 102))) return false;
  return true;
}

// The forms dialgebra battery: star/differential laws, dialgebra axioms,
// dendriform conversions in both directions, the Leibnitz identity, and the
// trace laws.
bool criterion_forms() {
  auto laws_profile = [](const AxiomReport& rep) {
    for (const auto& c : rep.checks) {
      bool expected = c.name != "differential-product-rule-opposite-sign";
      if (c.ok != expected) return false;
    }
    return true;
  };
  StructAlgebra z2 = group_algebra_zn(2);
  std::vector<Form> exhaustive = all_degree1_forms(z2);
  if (!laws_profile(form_laws_report(z2, exhaustive))) return false;
  if (!require_all(dialgebra_report(z2, exhaustive))) return false;
  if (!require_all(leibnitz_report(z2, exhaustive))) return false;
  if (!require_all(dendriform_forms_report(z2, exhaustive, ConvertKind::TypeI)))
    return false;
  if (!require_all(dendriform_forms_report(z2, exhaustive, ConvertKind::TypeIII)))
    return false;

  StructAlgebra m2 = m2_pauli();
  std::vector<Form> sampled = rand_forms(g_rng, m2, 30);
  if (!laws_profile(form_laws_report(m2, sampled))) return false;
  // The dialgebra and Leibnitz checks run over triples, so they get a
  // smaller slice of the sampled forms to stay within the time bound.
  std::vector<Form> triples(sampled.begin(), sampled.begin() + 12);
  if (!require_all(dialgebra_report(m2, triples))) return false;
  if (!require_all(leibnitz_report(m2, triples))) return false;

  // Table-level dendriform conversions roundtrip in both directions.
  for (StructAlgebra alg : {quaternions(), group_algebra_zn(3)}) {
    auto [ld, rd] = trivial_dialgebra(alg);
    for (auto kind : {ConvertKind::TypeI, ConvertKind::TypeIII}) {
      ConvertResult fwd = dendriform_convert(ld, rd, kind);
      ConvertResult back = dendriform_convert(
          fwd.first, fwd.second, kind == ConvertKind::TypeI
                                     ? ConvertKind::FromDendriformAssocLeft
                                     : ConvertKind::FromDendriformAssocRight);
      if (!tables_equal(back.first, ld) || !tables_equal(back.second, rd))
        return false;
    }
  }

  // Trace laws over the matrix algebra with a conjugation Ito map.
  LinMap rho = conjugation_ito(m2, invertible_unit_shift(m2));
  std::vector<Scalar> sigma = {Scalar::integer(2, m2.kind),
                               Scalar::zero(m2.kind), Scalar::zero(m2.kind),
                               Scalar::zero(m2.kind)};
  std::vector<Form> deg1;
  while (static_cast<int>(deg1.size()) < 10) {
    FormWord w(4);
    for (auto& letter : w) letter = static_cast<int>(g_rng() % m2.dim());
    Form f = form_word(m2, w);
    if (!f.is_zero()) deg1.push_back(f);
  }
  return require_all(trace_report(m2, rho, sigma, deg1));
}

// Graph-driven CP iterates: complete graphs match ordinary powers, the
// (1, X, g) family collapses to {1, X + gX, g^2}, and composition is a
// semigroup law.
bool criterion_cp() {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  auto rand_mat = [&](int d) {
    CMat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m(i, j) = std::complex<double>(u(g_rng), u(g_rng));
    return m;
  };
  for (int n : {2, 3})
    for (int d : {2, 3}) {
      WeightedDigraph g;
      for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) g.arrows.push_back({"", v, w});
      std::vector<CMat> ops;
      for (int v = 0; v < n; ++v) ops.push_back(rand_mat(d));
      KrausFamily fam = kraus_family(g, ops);
      CMat one = CPMap{d, ops}.superoperator();
      CMat pow = CMat::Identity(d * d, d * d);
      for (int k = 1; k <= 4; ++k) {
        pow = one * pow;
        if ((iterate_circle_g(fam, k).superoperator() - pow).cwiseAbs().maxCoeff() >
            1e-10)
          return false;
      }
    }

  LCoalgebra xg = builtin_catalog("xg").lc;
  auto wx = circle_g_words(xg, 1, 2);
  if (wx.size() != 2 || wx[0].second != TensorWord{1, 0} ||
      wx[1].second != TensorWord{2, 1})
    return false;
  CMat id2 = CMat::Identity(2, 2), X(2, 2), gm(2, 2);
  X << 0, 1, 0, 0;
  gm << 1, 0, 0, -1;
  KrausFamily fam = kraus_family(xg, {id2, X, gm});
  auto collapsed = collapsed_kraus(fam, 2);
  if ((collapsed[0] - id2).cwiseAbs().maxCoeff() != 0) return false;
  if ((collapsed[1] - (X + gm * X)).cwiseAbs().maxCoeff() != 0) return false;
  if ((collapsed[2] - gm * gm).cwiseAbs().maxCoeff() != 0) return false;

  WeightedDigraph k2;
  k2.vertices = {"a", "b"};
  k2.arrows = {{"", 0, 0}, {"", 0, 1}, {"", 1, 0}, {"", 1, 1}};
  KrausFamily f2 = kraus_family(k2, {rand_mat(2), rand_mat(2)});
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; k + l <= 5; ++l)
      if (superop_distance(compose_circle_g(k, l, f2),
                           iterate_circle_g(f2, k + l)) > 1e-10)
        return false;
  return true;
}

// Pointer products: the matrix oracle, the cross product, and the symbolic
// path-convention formula.
bool criterion_poly() {
  StructAlgebra A = pointer_space(1);
  LCoalgebra sl2 = builtin_catalog("sl2q").lc;
  auto rand4 = [&] {
    PointerPoly p = PointerPoly::zero(4, A.kind);
    for (int i = 0; i < 4; ++i)
      p.coeffs[i] =
          Vect::word({0}, Scalar::rational(static_cast<long>(g_rng() % 9) - 4));
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    PointerPoly p = rand4(), q = rand4();
    if (pointer_product(A, sl2, PlacementConvention::at_source(), p, q) !=
        matrix_oracle(A, {2}, p, q))
      return false;
  }
  if (!require_all(cross_product_check(100, 20260826))) return false;

  // (aX + bg + c1)[Delta](a'X + b'g + c'1) = (ab'+bb') g + (ac'+cc') 1.
  WeightedDigraph g;
  g.vertices = {"1", "X", "g"};
  g.arrows = {{"", 0, 0}, {"", 1, 0}, {"", 1, 2}, {"", 2, 2}};
  LCoalgebra xg = to_markov_lcoalgebra(g, ProbabilityConvention::unit_weights);
  for (int t = 0; t < 20; ++t) {
    long a = static_cast<long>(g_rng() % 9) - 4, b = static_cast<long>(g_rng() % 9) - 4,
         c = static_cast<long>(g_rng() % 9) - 4, a2 = static_cast<long>(g_rng() % 9) - 4,
         b2 = static_cast<long>(g_rng() % 9) - 4, c2 = static_cast<long>(g_rng() % 9) - 4;
    PointerPoly p = PointerPoly::zero(3, A.kind), q = PointerPoly::zero(3, A.kind),
                want = PointerPoly::zero(3, A.kind);
    p.coeffs[0] = Vect::word({0}, Scalar::rational(c));
    p.coeffs[1] = Vect::word({0}, Scalar::rational(a));
    p.coeffs[2] = Vect::word({0}, Scalar::rational(b));
    q.coeffs[0] = Vect::word({0}, Scalar::rational(c2));
    q.coeffs[1] = Vect::word({0}, Scalar::rational(a2));
    q.coeffs[2] = Vect::word({0}, Scalar::rational(b2));
    want.coeffs[0] = Vect::word({0}, Scalar::rational(a * c2 + c * c2));
    want.coeffs[2] = Vect::word({0}, Scalar::rational(a * b2 + b * b2));
    if (pointer_product(A, xg, PlacementConvention::path(), p, q) != want)
      return false;
  }
  return true;
}

// Mutation: the worked squaring trajectory and the first-mutation law.
bool criterion_mutation() {
  StructAlgebra A = pointer_space(1);
  MutationState h2 = builtin_mutation_state("H2");
  MutationState dia = builtin_mutation_state("diamond_a");
  auto all = [&](long v) {
    PointerPoly p = PointerPoly::zero(4, A.kind);
    for (int i = 0; i < 4; ++i) p.coeffs[i] = Vect::word({0}, Scalar::rational(v));
    return p;
  };
  auto diag_a = [&](long v) {
    PointerPoly p = PointerPoly::zero(4, A.kind);
    p.coeffs[0] = Vect::word({0}, Scalar::rational(v));
    return p;
  };
  MutationProcess pure{{h2}, {Scalar::rational(1)}, 0};
  MutationTrajectory t = mutation_simulate(A, pure, all(1), 3);
  if (t.values[1] != all(2) || t.values[2] != all(8) || t.values[3] != all(128))
    return false;
  PointerPoly u = pointer_product(A, dia.lc, dia.conv, t.values[3], t.values[3]);
  if (u != diag_a(128L * 128)) return false;
  if (pointer_product(A, h2.lc, h2.conv, u, u) != diag_a(128L * 128 * 128 * 128))
    return false;

  MutationProcess trio{{h2, dia, builtin_mutation_state("triangle")},
                       {Scalar::rational(4, 5), Scalar::rational(1, 10),
                        Scalar::rational(1, 10)},
                       0};
  int count3 = 0;
  const int runs = 100000;
  PointerPoly z = all(1);
  for (int r = 0; r < runs; ++r) {
    MutationProcess prc = trio;
    prc.seed = 1000003ULL * r + 17;
    MutationTrajectory tr = mutation_simulate(A, prc, z, 60, false);
    if (first_occurrence(tr, 2) == 3) ++count3;
  }
  double p3 = static_cast<double>(count3) / runs;
  return std::abs(p3 - 0.081) <= 0.005;
}

// The degree-2 triangle Hopf structures on the quaternions and the Pauli
// presentation of the 2x2 matrices.
bool criterion_hopf() {
  return require_all(triangle_degree2_hopf(quaternions()).report) &&
         require_all(triangle_degree2_hopf(m2_pauli()).report);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double bound_s;
    std::function<bool()> run;
  };
  std::vector<Criterion> criteria = {
      {"axiom suite over catalog and random digraphs", 10, criterion_axioms},
      {"reading map equals Hochschild boundaries", 30, criterion_reading_map},
      {"four-class star-square annihilation", 5, criterion_star_square},
      {"Ito/homomorphism bijection roundtrips", 5, criterion_bijection},
      {"f_n cochain complex up to n=4", 120, criterion_fn_complex},
      {"forms dialgebra, dendriform, Leibnitz and trace laws", 60, criterion_forms},
      {"graph-driven CP iterates and semigroup law", 30, criterion_cp},
      {"pointer products: matrix, cross, path formula", 10, criterion_poly},
      {"mutation trajectory and first-mutation law", 60, criterion_mutation},
      {"degree-2 triangle Hopf structures", 10, criterion_hopf},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool in_time = secs <= criteria[i].bound_s;
    bool pass = ok && in_time;
    if (!pass) ++failures;
    std::printf("criterion %zu: %s — %s (%.2fs, bound %.0fs)%s\n", i + 1,
                criteria[i].name, pass ? "PASS" : "FAIL", secs,
                criteria[i].bound_s, note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
