// Pointer polynomial products induced by coproducts: the defining coefficient
// carries, matrix products from matrix coproducts (with direct sums and the
// associativity/coassociativity equivalence), the shifted-triangle cross
// product, random products on weighted graphs, and the mutation engine with
// its squaring trajectories and first-mutation statistics.
#include <random>

#include "doctest.h"
#include "lcoalg/poly.hpp"

using namespace lcoalg;

static Vect sc(long v) { return Vect::word({0}, Scalar::rational(v)); }

static PointerPoly poly_of(const std::vector<long>& vals) {
  PointerPoly p = PointerPoly::zero(static_cast<int>(vals.size()),
                                    ScalarKind::Rational);
  for (size_t i = 0; i < vals.size(); ++i)
    if (vals[i] != 0) p.coeffs[i] = sc(vals[i]);
  return p;
}

TEST_CASE("pointer product carries coefficients along the coproduct") {
  StructAlgebra A = pointer_space(1);

  // Delta(X1) = X2 (x) X3, Delta(X2) = X2 (x) X2, Delta(X3) = X3 (x) X1,
  // statically placed: c1 = a2 b3, c2 = a2 b2, c3 = a3 b1.
  LCoalgebra c;
  c.basis = Basis{{"X1", "X2", "X3"}, std::nullopt};
  c.degree = 1;
  std::map<TensorWord, Vect> delta;
  delta[{0}] = Vect::word({1, 2}, Scalar::rational(1));
  delta[{1}] = Vect::word({1, 1}, Scalar::rational(1));
  delta[{2}] = Vect::word({2, 0}, Scalar::rational(1));
  c.right = LinMap::from_table(1, 2, delta);
  c.left = c.right;

  PointerPoly a = poly_of({2, 3, 5});
  PointerPoly b = poly_of({7, 11, 13});
  PointerPoly r =
      pointer_product(A, c, PlacementConvention::at_source(), a, b);
  CHECK(r == poly_of({3 * 13, 3 * 11, 5 * 7}));

  // Zero times anything is zero.
  PointerPoly z = PointerPoly::zero(3, ScalarKind::Rational);
  CHECK(pointer_product(A, c, PlacementConvention::at_source(), z, b).is_zero());
  CHECK(pointer_product(A, c, PlacementConvention::at_source(), a, z).is_zero());

  // Loops at 1 and g plus two arrows out of X, placed at the terminus:
  // (aX + bg + c1)[Delta](a'X + b'g + c'1) = (ab'+bb') g + (ac'+cc') 1.
  WeightedDigraph g;
  g.vertices = {"1", "X", "g"};
  g.arrows = {{"e0", 0, 0}, {"e1", 1, 0}, {"e2", 1, 2}, {"e3", 2, 2}};
  LCoalgebra xg = to_markov_lcoalgebra(g, ProbabilityConvention::unit_weights);
  PointerPoly p = poly_of({4, 2, 3});   // c=4 at 1, a=2 at X, b=3 at g
  PointerPoly q = poly_of({11, 5, 7});  // c'=11, a'=5, b'=7
  PointerPoly pr = pointer_product(A, xg, PlacementConvention::path(), p, q);
  CHECK(pr == poly_of({2 * 11 + 4 * 11, 0, 2 * 7 + 3 * 7}));

  // A shifted convention with a missing target is rejected.
  CHECK_THROWS_AS(pointer_product(A, c, PlacementConvention::shifted({0}), a, b),
                  std::invalid_argument);
}

TEST_CASE("matrix coproducts induce matrix products") {
  // Scalar coefficients, 2x2 and 3x3, and a 2+1 direct sum.
  for (const auto& blocks :
       std::vector<std::vector<int>>{{2}, {3}, {2, 1}}) {
    AxiomReport rep = matrix_iso_check(pointer_space(1), blocks, 40, 99);
    for (const auto& ch : rep.checks) CHECK_MESSAGE(ch.ok, ch.name);
  }

  // Algebra coefficients: the corollary over a four-dimensional algebra.
  AxiomReport mrep = matrix_iso_check(m2_pauli(), {2}, 25, 7);
  for (const auto& ch : mrep.checks) CHECK_MESSAGE(ch.ok, ch.name);

  // The catalog matrix coalgebra on a, b, c, d matches the row-major oracle.
  StructAlgebra A = pointer_space(1);
  LCoalgebra sl2 = builtin_catalog("sl2q").lc;
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    PointerPoly p = poly_of({long(rng() % 9) - 4, long(rng() % 9) - 4,
                             long(rng() % 9) - 4, long(rng() % 9) - 4});
    PointerPoly q = poly_of({long(rng() % 9) - 4, long(rng() % 9) - 4,
                             long(rng() % 9) - 4, long(rng() % 9) - 4});
    CHECK(pointer_product(A, sl2, PlacementConvention::at_source(), p, q) ==
          matrix_oracle(A, {2}, p, q));
  }

  // Associativity of the induced product tracks coassociativity: positively
  // on the matrix coalgebra, negatively on the 3-cycle Markov structure.
  AxiomReport pos = associativity_equivalence_report(A, sl2, 30, 5);
  CHECK(pos.all_ok());
  AxiomReport neg =
      associativity_equivalence_report(A, builtin_catalog("triangle").lc, 30, 5);
  CHECK_FALSE(neg.find("coassociative")->ok);
  CHECK_FALSE(neg.find("induced-product-associative")->ok);
  CHECK(neg.find("equivalence")->ok);
}

TEST_CASE("the shifted triangle commutator is the cross product") {
  AxiomReport rep = cross_product_check(100, 2026);
  for (const auto& ch : rep.checks) CHECK_MESSAGE(ch.ok, ch.name);
  CHECK(rep.find("basis-commutators-match"));
  CHECK(rep.find("alternating"));
  CHECK(rep.find("matches-cross-formula"));
  CHECK(rep.find("unit-pointer-fixed"));
}

TEST_CASE("random products on weighted graphs") {
  StructAlgebra A = pointer_space(1);

  // On a deterministic graph the random product is the product.
  LCoalgebra tri = builtin_catalog("triangle").lc;
  PointerPoly a = poly_of({2, 3, 5}), b = poly_of({7, 11, 13});
  for (unsigned long long seed : {1ULL, 17ULL, 999ULL})
    CHECK(random_pointer_product(A, tri, PlacementConvention::path(), a, b,
                                 seed) ==
          pointer_product(A, tri, PlacementConvention::path(), a, b));

  // Loops at 1 and g with probability 1, two half-weight arrows out of X.
  WeightedDigraph g;
  g.vertices = {"1", "X", "g"};
  g.arrows = {{"e0", 0, 0, Scalar::rational(1)},
              {"e1", 1, 0, Scalar::rational(1, 2)},
              {"e2", 1, 2, Scalar::rational(1, 2)},
              {"e3", 2, 2, Scalar::rational(1)}};
  LCoalgebra xg = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);

  PointerPoly ones = poly_of({1, 1, 1});
  PointerPoly walk1 = poly_of({2, 0, 1});  // X routed to the 1 loop
  PointerPoly walk2 = poly_of({1, 0, 2});  // X routed to the g loop
  int hits1 = 0;
  for (int seed = 0; seed < 10000; ++seed) {
    PointerPoly r = random_pointer_product(A, xg, PlacementConvention::path(),
                                           ones, ones, seed);
    REQUIRE((r == walk1 || r == walk2));
    if (r == walk1) ++hits1;
    // Determinism per seed.
    if (seed < 20)
      CHECK(r == random_pointer_product(A, xg, PlacementConvention::path(),
                                        ones, ones, seed));
  }
  double freq = hits1 / 10000.0;
  CHECK(freq > 0.48);
  CHECK(freq < 0.52);

  // Every squared product avoids the X pointer: the loops at 1 and g are the
  // coassociative attractors and the image sits in the diagonal pair.
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 200; ++t) {
    PointerPoly p = poly_of({long(rng() % 9) - 4, long(rng() % 9) - 4,
                             long(rng() % 9) - 4});
    PointerPoly q = poly_of({long(rng() % 9) - 4, long(rng() % 9) - 4,
                             long(rng() % 9) - 4});
    PointerPoly r =
        random_pointer_product(A, xg, PlacementConvention::path(), p, q, t);
    CHECK(r.coeffs[1].is_zero());
  }
}

TEST_CASE("mutation of products: trajectories, projections, statistics") {
  StructAlgebra A = pointer_space(1);
  MutationState h2 = builtin_mutation_state("H2");
  MutationState dia = builtin_mutation_state("diamond_a");
  MutationState tri = builtin_mutation_state("triangle");

  // Three matrix-product squarings of the all-ones matrix: 1 -> 2 -> 8 -> 128.
  MutationProcess pure{{h2}, {Scalar::rational(1)}, 0};
  PointerPoly z = poly_of({1, 1, 1, 1});
  MutationTrajectory t3 = mutation_simulate(A, pure, z, 3);
  REQUIRE(t3.values.size() == 4);
  CHECK(t3.values[1] == poly_of({2, 2, 2, 2}));
  CHECK(t3.values[2] == poly_of({8, 8, 8, 8}));
  CHECK(t3.values[3] == poly_of({128, 128, 128, 128}));

  // The loop at a projects: the 128-matrix mutates to diag(128^2, 0), and a
  // further matrix step squares it to diag(128^4, 0).
  PointerPoly u = pointer_product(A, dia.lc, dia.conv, t3.values[3], t3.values[3]);
  CHECK(u == poly_of({128L * 128, 0, 0, 0}));
  PointerPoly u2 = pointer_product(A, h2.lc, h2.conv, u, u);
  CHECK(u2 == poly_of({128L * 128 * 128 * 128, 0, 0, 0}));

  // Once a diamond step happens the value stays supported on the a pointer.
  MutationProcess drift{{h2, dia},
                        {Scalar::rational(4, 5), Scalar::rational(1, 5)},
                        42};
  MutationTrajectory run = mutation_simulate(A, drift, z, 8);
  bool projected = false;
  for (size_t s = 0; s < run.states.size(); ++s) {
    if (run.states[s] == 1) projected = true;
    if (projected)
      for (int i = 1; i < 4; ++i) CHECK(run.values[s + 1].coeffs[i].is_zero());
  }
  // Same seed, same draws.
  CHECK(mutation_simulate(A, drift, z, 8, false).states == run.states);

  // The coproduct complexes: coassociative states close, the triangle breaks.
  MutationProcess trio{{h2, dia, tri},
                       {Scalar::rational(4, 5), Scalar::rational(1, 10),
                        Scalar::rational(1, 10)},
                       7};
  AxiomReport comp = mutation_complex_report(trio);
  CHECK(comp.find("H2-is-complex")->ok);
  CHECK(comp.find("diamond_a-is-complex")->ok);
  CHECK_FALSE(comp.find("triangle-is-complex")->ok);

  // First-triangle time: P(T = t) = (1 - eps/2)^{t-1} (eps/2) with eps = 1/5.
  int count3 = 0;
  const int runs = 100000;
  for (int r = 0; r < runs; ++r) {
    MutationProcess prc = trio;
    prc.seed = 1000003ULL * r + 17;
    MutationTrajectory tr = mutation_simulate(A, prc, z, 60, false);
    if (first_occurrence(tr, 2) == 3) ++count3;
  }
  double p3 = double(count3) / runs;
  CHECK(p3 > 0.081 - 0.005);
  CHECK(p3 < 0.081 + 0.005);

  // Invalid probability data is rejected.
  MutationProcess bad{{h2}, {Scalar::rational(1, 2)}, 0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  MutationProcess mism{{h2, dia}, {Scalar::rational(1)}, 0};
  CHECK_THROWS_AS(mism.validate(), std::invalid_argument);
}
