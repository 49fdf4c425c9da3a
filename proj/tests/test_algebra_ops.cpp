// Flower structure of a unital algebra, Hochschild boundaries and the reading
// map, the nonlocal complex, and the degree-2 triangle Hopf structure.
#include <random>

#include "doctest.h"
#include "lcoalg/algebra_ops.hpp"
#include "lcoalg/coassoc.hpp"

using namespace lcoalg;

static Vect rand_word(std::mt19937_64& rng, int dim, int degree, ScalarKind kind) {
  Vect v(degree);
  TensorWord w(degree);
  for (int s = 0; s < degree; ++s) w[s] = int(rng() % dim);
  v.add_term(w, Scalar::one(kind));
  return v;
}

TEST_CASE("flower coalgebra of a unital algebra") {
  StructAlgebra q = quaternions();
  LCoalgebra f = flower_lcoalgebra(q);
  auto rep = check_axioms(f);
  CHECK(rep.find("breaking-equation")->ok);
  CHECK(rep.find("right-counit") == nullptr);

  // (delta~ (x) 1) delta a = 1 (x) a (x) 1 = (1 (x) delta) delta~ a
  for (int a = 0; a < 4; ++a) {
    Vect both = tensor_of_maps(f.left, LinMap::identity(1)).compose(f.right).on_word({a});
    CHECK(both == Vect::basis_word({0, a, 0}));
    CHECK(both ==
          tensor_of_maps(LinMap::identity(1), f.right).compose(f.left).on_word({a}));
  }

  // bialgebra: both coproducts multiply, unit is group-like
  auto brep = check_bialgebra_hopf(f, q);
  CHECK(brep.find("right-coproduct-multiplicative")->ok);
  CHECK(brep.find("left-coproduct-multiplicative")->ok);
  CHECK(brep.find("unit-grouplike-right")->ok);

  // with a character supplied (trivial character of Q[Z_3]) counits attach
  StructAlgebra z3 = group_algebra_zn(3);
  std::map<TensorWord, Vect> t;
  for (int i = 0; i < 3; ++i) t[{i}] = Vect::word({}, Scalar::rational(1));
  LCoalgebra fz = flower_lcoalgebra(z3, LinMap::from_table(1, 0, t));
  auto zrep = check_axioms(fz);
  CHECK(zrep.find("right-counit")->ok);
  CHECK(zrep.find("left-counit")->ok);

  WeightedDigraph g;
  g.vertices = {"u", "v"};
  CHECK_THROWS_AS(flower_lcoalgebra(ck_shadow(g)), std::invalid_argument);
}

TEST_CASE("differential and tensor commutator from the flower") {
  StructAlgebra q = quaternions();
  LinMap d = flower_right(q) - flower_left(q);
  for (int a = 0; a < 4; ++a)
    CHECK(d.on_word({a}) ==
          Vect::basis_word({a, 0}) - Vect::basis_word({0, a}));
  // square' = d (x) d annihilates the image of d
  LinMap square = tensor_of_maps(d, d);
  std::string wit;
  CHECK(map_is_zero(square.compose(d), all_words(4, 1), q.basis, &wit));

  // [a,b] = delta(a) delta~(b) - delta(b) delta~(a) = a (x) b - b (x) a
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Vect lhs = q.mul_tensor(flower_right(q).on_word({a}),
                              flower_left(q).on_word({b})) -
                 q.mul_tensor(flower_right(q).on_word({b}),
                              flower_left(q).on_word({a}));
      CHECK(lhs == Vect::basis_word({a, b}) - Vect::basis_word({b, a}));
    }
}

TEST_CASE("hochschild boundaries") {
  StructAlgebra q = quaternions();
  // b'(a1,a2) = a1 a2; b(a1,a2) = a1 a2 - a2 a1
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto [bp, bb] = hochschild_boundaries(q, Vect::basis_word({a, b}));
      CHECK(bp == q.product(a, b));
      CHECK(bb == q.product(a, b) - q.product(b, a));
    }
  // b(a1,a2,a3) = a1a2 (x) a3 - a1 (x) a2a3 + a3a1 (x) a2
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int a = int(rng() % 4), b = int(rng() % 4), c = int(rng() % 4);
    Vect expect = tensor_product(q.product(a, b), Vect::basis_word({c})) -
                  tensor_product(Vect::basis_word({a}), q.product(b, c)) +
                  tensor_product(q.product(c, a), Vect::basis_word({b}));
    CHECK(hochschild_b(q, Vect::basis_word({a, b, c})) == expect);
  }
  // b b = 0 and b' b' = 0 on random degree-4 elements
  for (const StructAlgebra& alg : {quaternions(), group_algebra_zn(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Vect v = rand_word(rng, alg.dim(), 4, alg.kind) +
               rand_word(rng, alg.dim(), 4, alg.kind).scaled(Scalar::integer(-2, alg.kind));
      CHECK(hochschild_b(alg, hochschild_b(alg, v)).is_zero());
      CHECK(hochschild_bprime(alg, hochschild_bprime(alg, v)).is_zero());
    }
  }
  CHECK_THROWS_AS(hochschild_bprime(q, Vect::basis_word({1})), std::invalid_argument);
}

TEST_CASE("reading map reproduces the boundaries") {
  StructAlgebra q = quaternions();
  // period 2: pattern alone gives a1 a2, with the border a1 a2 - a2 a1
  CHECK(reading_map(q, {{1, 2}}, false) == q.product(1, 2));
  CHECK(reading_map(q, {{1, 2}}, true) == q.product(1, 2) - q.product(2, 1));

  CHECK_THROWS_AS(reading_map(q, {{1}}, false), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (const StructAlgebra& alg : {quaternions(), group_algebra_zn(3)}) {
    const int dim = alg.dim();
    // exhaustive for periods 2 and 3
    for (int n = 2; n <= 3; ++n) {
      std::vector<int> idx(n, 0);
      bool done = false;
      while (!done) {
        Vect word = Vect::basis_word(TensorWord(idx.begin(), idx.end()), alg.kind);
        CHECK(reading_map(alg, {idx}, false) == hochschild_bprime(alg, word));
        CHECK(reading_map(alg, {idx}, true) == hochschild_b(alg, word));
        int p = n - 1;
        while (p >= 0 && ++idx[p] == dim) idx[p--] = 0;
        done = p < 0;
      }
    }
    // randomized for periods 4 and 5
    for (int n = 4; n <= 5; ++n)
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> idx(n);
        for (auto& s : idx) s = int(rng() % dim);
        Vect word = Vect::basis_word(TensorWord(idx.begin(), idx.end()), alg.kind);
        CHECK(reading_map(alg, {idx}, false) == hochschild_bprime(alg, word));
        CHECK(reading_map(alg, {idx}, true) == hochschild_b(alg, word));
      }
  }
}

TEST_CASE("nonlocal complex over group algebras") {
  for (int m : {2, 3}) {
    StructAlgebra zn = group_algebra_zn(m);
    LCoalgebra c = group_like_coalgebra(zn);
    NonlocalReport rep = nonlocal_complex(c, zn, 3);
    CHECK(rep.checks.find("coproduct-multiplicative")->ok);
    CHECK(rep.checks.find("first-boundary-annihilates-difference")->ok);
    CHECK(rep.checks.find("boundary-squares-to-zero")->ok);
    CHECK(rep.checks.find("boundary-forms-agree")->ok);
    CHECK(rep.checks.find("projection-section-identity")->ok);
    // group-likes are never primitive
    CHECK(rep.primitives.empty());
  }

  // partial_1 is exactly d<- (x) id - id (x) d->
  StructAlgebra z3 = group_algebra_zn(3);
  LCoalgebra c = group_like_coalgebra(z3);
  LinMap d_left = c.right - flower_left(z3);
  LinMap d_right = c.right - flower_right(z3);
  LinMap expect = tensor_of_maps(d_left, LinMap::identity(1)) -
                  tensor_of_maps(LinMap::identity(1), d_right);
  CHECK(maps_equal(nonlocal_boundary(c, z3, 1), expect, 3));

  // the fiber-vs-petal difference of a group-like is nonzero
  LinMap diff = c.right - flower_sum(z3);
  CHECK(diff.on_word({1}) ==
        Vect::basis_word({1, 1}) - Vect::basis_word({1, 0}) -
            Vect::basis_word({0, 1}));

  // corrupted coproduct fails the multiplicativity gate
  StructAlgebra z2 = group_algebra_zn(2);
  LCoalgebra bad = group_like_coalgebra(z2);
  std::map<TensorWord, Vect> t;
  t[{0}] = Vect::basis_word({0, 0});
  t[{1}] = Vect::basis_word({1, 1}) + Vect::basis_word({0, 0});
  bad.right = LinMap::from_table(1, 2, t);
  bad.left = bad.right;
  NonlocalReport brep = nonlocal_complex(bad, z2, 2);
  CHECK_FALSE(brep.checks.find("coproduct-multiplicative")->ok);
  CHECK(brep.checks.find("boundary-squares-to-zero") == nullptr);
}

TEST_CASE("degree-2 triangle Hopf structure") {
  for (const StructAlgebra& alg : {quaternions(), m2_pauli()}) {
    TriangleHopf2 h = triangle_degree2_hopf(alg);
    INFO(alg.basis.names[1]);
    for (const auto& ch : h.report.checks) {
      INFO(ch.name << " " << ch.witness);
      CHECK(ch.ok);
    }
    // x_0 = index 1 etc.; the generators rotate forward under Delta_2
    CHECK(h.delta2.on_word({1, 2}) == Vect::basis_word({1, 2, 3}, alg.kind));
    CHECK(h.delta2_tilde.on_word({1, 2}) == Vect::basis_word({3, 1, 2}, alg.kind));
    CHECK(h.eps2.on_word({1, 2}) == Vect::basis_word({1}, alg.kind));
    CHECK(h.eps2_tilde.on_word({1, 2}) == Vect::basis_word({2}, alg.kind));
    // S(x_i) = -x_{i-1}, S~(x_{i-1}) = -x_i
    CHECK(h.S.on_word({1}) == Vect::word({3}, -Scalar::one(alg.kind)));
    CHECK(h.S_tilde.on_word({3}) == Vect::word({1}, -Scalar::one(alg.kind)));
    CHECK(h.S.on_word({0}) == Vect::basis_word({0}, alg.kind));
  }

  // the worked product identity: Delta_2(x0 (x) x1) Delta_2(x1 (x) x2)
  // equals x0x1 (x) x1x2 (x) rot(x1x2) = k (x) i (x) j over the quaternions
  StructAlgebra q = quaternions();
  TriangleHopf2 h = triangle_degree2_hopf(q);
  Vect lhs = q.mul_tensor(h.delta2.on_word({1, 2}), h.delta2.on_word({2, 3}));
  CHECK(lhs == Vect::basis_word({3, 1, 2}));

  // wrong structure constants are reported, not silently accepted
  TriangleHopf2 bad = triangle_degree2_hopf(group_algebra_zn(4));
  CHECK_FALSE(bad.report.find("structure-constants")->ok);
  CHECK(bad.report.find("right-antipode-equation") == nullptr);

  CHECK_THROWS_AS(triangle_degree2_hopf(group_algebra_zn(3)), std::invalid_argument);
}
