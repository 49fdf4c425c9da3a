// Graphs, the Markov construction, axiom checkers, walks, lifts, products.
#include <random>

#include "doctest.h"
#include "lcoalg/lcoalgebra.hpp"

using namespace lcoalg;
using nlohmann::json;

namespace {

json triangle_doc() {
  return json{{"vertices", {"x0", "x1", "x2"}},
              {"arrows",
               {{{"id", "e0"}, {"src", "x0"}, {"dst", "x1"}, {"weight", "1"}},
                {{"id", "e1"}, {"src", "x1"}, {"dst", "x2"}, {"weight", "1"}},
                {{"id", "e2"}, {"src", "x2"}, {"dst", "x0"}, {"weight", "1"}}}},
              {"identity", nullptr}};
}

// A random digraph where every vertex has 1..3 out-arrows with equal
// rational weights (so the probability convention holds by construction).
WeightedDigraph random_stochastic_graph(std::mt19937_64& rng, int nv) {
  WeightedDigraph g;
  for (int i = 0; i < nv; ++i) g.vertices.push_back("v" + std::to_string(i));
  int id = 0;
  for (int v = 0; v < nv; ++v) {
    int deg = 1 + int(rng() % 3);
    for (int a = 0; a < deg; ++a)
      g.arrows.push_back({"a" + std::to_string(id++), v, int(rng() % nv),
                          Scalar::rational(1, deg)});
  }
  return g;
}

}  // namespace

TEST_CASE("graph JSON round-trips exactly") {
  std::mt19937_64 rng(3);
  WeightedDigraph g = random_stochastic_graph(rng, 5);
  json doc = save_graph(g);
  WeightedDigraph h = load_graph(doc);
  CHECK(save_graph(h) == doc);
  CHECK(h.vertices == g.vertices);
  CHECK(h.arrows.size() == g.arrows.size());
}

TEST_CASE("graph validation errors") {
  json bad = triangle_doc();
  bad["arrows"][0]["dst"] = "nope";
  CHECK_THROWS_AS(load_graph(bad), GraphValidationError);
  json neg = triangle_doc();
  neg["arrows"][0]["weight"] = "-1/2";
  CHECK_THROWS_AS(load_graph(neg), GraphValidationError);
  json empty = json{{"vertices", {"a", "b"}}};
  WeightedDigraph g = load_graph(empty);
  CHECK(g.arrows.empty());
  CHECK(g.is_sink(0));
  CHECK(g.is_source(1));
}

TEST_CASE("triangle Markov coproducts rotate the cycle") {
  WeightedDigraph g = load_graph(triangle_doc());
  LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);
  for (int a = 0; a < 3; ++a) {
    CHECK(c.right.on_word({a}) == Vect::basis_word({a, (a + 1) % 3}));
    CHECK(c.left.on_word({a}) == Vect::basis_word({(a + 2) % 3, a}));
  }
  CHECK(check_axioms(c).all_ok() == false);  // cocommutativity fails, rest holds
  auto rep = check_axioms(c);
  CHECK(rep.find("breaking-equation")->ok);
  CHECK(rep.find("right-counit")->ok);
  CHECK(rep.find("left-counit")->ok);
  CHECK_FALSE(rep.find("cocommutativity")->ok);
}

TEST_CASE("single loop vertex is degenerate and coassociative") {
  WeightedDigraph g;
  g.vertices = {"v"};
  g.arrows = {{"l", 0, 0, Scalar::rational(1)}};
  LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);
  CHECK(c.right.on_word({0}) == Vect::basis_word({0, 0}));
  auto rep = check_axioms(c);
  CHECK(rep.find("degenerate-coassociativity")->ok);
  CHECK(rep.find("cocommutativity")->ok);
}

TEST_CASE("random stochastic graphs satisfy breaking + counit equations") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    WeightedDigraph g = random_stochastic_graph(rng, 2 + int(rng() % 5));
    LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);
    auto rep = check_axioms(c);
    CHECK(rep.find("breaking-equation")->ok);
    if (c.right_counit) CHECK(rep.find("right-counit")->ok);
    if (c.left_counit) CHECK(rep.find("left-counit")->ok);

    // Independent term-by-term oracle for the breaking equation: both sides
    // enumerate in-arrow/out-arrow pairs of the middle vertex.
    for (int v = 0; v < int(g.vertices.size()); ++v) {
      Vect lhs(3), rhs(3);
      for (const Arrow* o : g.out_arrows(v)) {
        auto in = g.in_arrows(v);
        for (const Arrow* i : in)
          lhs.add_term({i->src, v, o->dst},
                       g.step_weight(*o, ProbabilityConvention::given_weights) *
                           Scalar::rational(1, long(in.size())));
      }
      LinMap side = tensor_of_maps(c.left, LinMap::identity(1)).compose(c.right);
      CHECK(side.on_word({v}) == lhs);
    }
  }
}

TEST_CASE("unit weights break the right counit on branching vertices") {
  WeightedDigraph g;
  g.vertices = {"u", "v", "w"};
  g.arrows = {{"a", 0, 1, Scalar::rational(1)},
              {"b", 0, 2, Scalar::rational(1)},
              {"c", 1, 0, Scalar::rational(1)},
              {"d", 2, 0, Scalar::rational(1)}};
  LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::unit_weights);
  CHECK_FALSE(c.right_counit.has_value());
  // Attach the constant-1 counit by hand: the equation must fail at u.
  c.right_counit = LinMap(1, 0, [](const TensorWord&) {
    return Vect::word({}, Scalar::rational(1));
  });
  auto rep = check_axioms(c);
  CHECK(rep.find("breaking-equation")->ok);
  CHECK_FALSE(rep.find("right-counit")->ok);
}

TEST_CASE("reversal swaps coproducts through the transposition") {
  std::mt19937_64 rng(5);
  WeightedDigraph g = random_stochastic_graph(rng, 4);
  WeightedDigraph r = reverse(g);
  CHECK(save_graph(reverse(r)) == save_graph(g));

  // Under unit weights (no normalization asymmetry) the reversed right
  // coproduct is tau . left and vice versa.
  LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::unit_weights);
  LCoalgebra cr = to_markov_lcoalgebra(r, ProbabilityConvention::unit_weights);
  LinMap tau = tau_cyclic(2);
  for (int v = 0; v < int(g.vertices.size()); ++v) {
    CHECK(cr.right.on_word({v}) == tau.apply(c.left.on_word({v})));
    CHECK(cr.left.on_word({v}) == tau.apply(c.right.on_word({v})));
  }
  CHECK(check_axioms(cr).find("breaking-equation")->ok);
}

TEST_CASE("reversed triangle walks backwards") {
  WeightedDigraph g = load_graph(triangle_doc());
  LCoalgebra cr = to_markov_lcoalgebra(reverse(g), ProbabilityConvention::given_weights);
  for (int a = 0; a < 3; ++a)
    CHECK(cr.right.on_word({a}) == Vect::basis_word({a, (a + 2) % 3}));
}

TEST_CASE("sample_walk follows the declared distribution") {
  WeightedDigraph g = load_graph(triangle_doc());
  auto walk = sample_walk(g, 0, 3, 99);
  CHECK(walk == std::vector<int>{0, 1, 2, 0});

  // Two equally weighted arrows: first-step frequencies near 1/2.
  WeightedDigraph h;
  h.vertices = {"X", "g", "1"};
  h.arrows = {{"a", 0, 1, Scalar::rational(1, 2)},
              {"b", 0, 2, Scalar::rational(1, 2)},
              {"lg", 1, 1, Scalar::rational(1)},
              {"l1", 2, 2, Scalar::rational(1)}};
  int hits = 0;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s)
    if (sample_walk(h, 0, 1, 1000 + s)[1] == 1) ++hits;
  double freq = double(hits) / trials;
  CHECK(freq > 0.48);
  CHECK(freq < 0.52);

  WeightedDigraph sink;
  sink.vertices = {"s"};
  CHECK_THROWS_AS(sample_walk(sink, 0, 1, 1), GraphValidationError);
}

TEST_CASE("empirical transition matrix matches weights") {
  std::mt19937_64 rng(8);
  WeightedDigraph g = random_stochastic_graph(rng, 4);
  std::map<std::pair<int, int>, int> counts;
  std::vector<int> visits(4, 0);
  auto walk = sample_walk(g, 0, 100000, 7);
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    ++visits[walk[i]];
    ++counts[{walk[i], walk[i + 1]}];
  }
  for (int v = 0; v < 4; ++v) {
    if (visits[v] < 1000) continue;
    for (int w = 0; w < 4; ++w) {
      Scalar want = Scalar::rational(0);
      for (const Arrow* a : g.out_arrows(v))
        if (a->dst == w) want += a->weight;
      double got = double(counts[{v, w}]) / visits[v];
      CHECK(std::abs(got - want.to_cplx().real()) < 0.02);
    }
  }
}

TEST_CASE("cocommutator kernel") {
  // Symmetric 2-cycle u <-> v with unit weights: both vertices in the kernel.
  WeightedDigraph g;
  g.vertices = {"u", "v"};
  g.arrows = {{"a", 0, 1, Scalar::rational(1)}, {"b", 1, 0, Scalar::rational(1)}};
  LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::unit_weights);
  LinMap f = c.right - tau_cyclic(2).compose(c.left);
  CHECK(f.apply(Vect::basis_word({0})).is_zero());
  CHECK(f.apply(Vect::basis_word({1})).is_zero());
  CHECK(cocommutator_kernel(c).size() == 2);

  // Oriented triangle: kernel dimension equals 3 - rank(right - tau.left),
  // computed by an independent double-precision row reduction.
  LCoalgebra t = to_markov_lcoalgebra(load_graph(triangle_doc()),
                                      ProbabilityConvention::unit_weights);
  LinMap ft = t.right - tau_cyclic(2).compose(t.left);
  std::map<TensorWord, int> rows;
  std::vector<std::vector<double>> mat;
  for (int v = 0; v < 3; ++v) {
    Vect img = ft.on_word({v});
    for (const auto& [w, coef] : img.terms()) {
      if (!rows.count(w)) {
        rows[w] = int(rows.size());
        mat.push_back(std::vector<double>(3, 0.0));
      }
      mat[rows[w]][v] = coef.to_cplx().real();
    }
  }
  int rank = 0;
  for (int col = 0; col < 3; ++col) {
    int sel = -1;
    for (size_t r = rank; r < mat.size(); ++r)
      if (std::abs(mat[r][col]) > 1e-9) { sel = int(r); break; }
    if (sel < 0) continue;
    std::swap(mat[sel], mat[rank]);
    for (size_t r = 0; r < mat.size(); ++r) {
      if (int(r) == rank) continue;
      double f2 = mat[r][col] / mat[rank][col];
      for (int c2 = 0; c2 < 3; ++c2) mat[r][c2] -= f2 * mat[rank][c2];
    }
    ++rank;
  }
  CHECK(int(cocommutator_kernel(t).size()) == 3 - rank);

  // Fully degenerate cocommutative structure: kernel is everything.
  WeightedDigraph loop;
  loop.vertices = {"p", "q"};
  loop.arrows = {{"a", 0, 0, Scalar::rational(1)}, {"b", 1, 1, Scalar::rational(1)}};
  LCoalgebra lc = to_markov_lcoalgebra(loop, ProbabilityConvention::given_weights);
  CHECK(cocommutator_kernel(lc).size() == 2);
}

TEST_CASE("graph_of inverts the Markov construction") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedDigraph g = random_stochastic_graph(rng, 3 + int(rng() % 3));
    LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);
    WeightedDigraph h = graph_of(c);
    // Same weighted arrow multiset (weights may merge parallel arrows with
    // identical endpoints, so compare aggregated weights).
    auto agg = [](const WeightedDigraph& x) {
      std::map<std::pair<int, int>, Scalar> m;
      for (const auto& a : x.arrows) {
        auto key = std::make_pair(a.src, a.dst);
        auto it = m.find(key);
        if (it == m.end())
          m.emplace(key, a.weight);
        else
          it->second += a.weight;
      }
      return m;
    };
    CHECK(agg(g) == agg(h));
  }
}

TEST_CASE("walk_expansion enumerates weighted walks") {
  LCoalgebra t = to_markov_lcoalgebra(load_graph(triangle_doc()),
                                      ProbabilityConvention::given_weights);
  CHECK(walk_expansion(t, Vect::basis_word({0}), 2) == Vect::basis_word({0, 1, 2}));
  CHECK(walk_expansion(t, Vect::basis_word({0}), 1) == t.right.on_word({0}));

  // Complete graph on 3 vertices: 27 walks of length 3 from each start.
  WeightedDigraph k3;
  k3.vertices = {"a", "b", "c"};
  int id = 0;
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      k3.arrows.push_back({"e" + std::to_string(id++), u, v, Scalar::rational(1, 3)});
  LCoalgebra ck = to_markov_lcoalgebra(k3, ProbabilityConvention::given_weights);
  Vect w = walk_expansion(ck, Vect::basis_word({0}), 3);
  CHECK(w.terms().size() == 27);
  for (const auto& [word, coef] : w.terms()) CHECK(coef == Scalar::rational(1, 27));
}

TEST_CASE("star composition of walk powers") {
  LCoalgebra t = to_markov_lcoalgebra(load_graph(triangle_doc()),
                                      ProbabilityConvention::given_weights);
  CHECK(star_compose(t, 1, 1));
  CHECK(star_compose(t, 2, 1));
  std::mt19937_64 rng(21);
  LCoalgebra r = to_markov_lcoalgebra(random_stochastic_graph(rng, 4),
                                      ProbabilityConvention::given_weights);
  CHECK(star_compose(r, 1, 2));
}

TEST_CASE("tensor product of structures") {
  LCoalgebra t = to_markov_lcoalgebra(load_graph(triangle_doc()),
                                      ProbabilityConvention::given_weights);
  LCoalgebra tt = tensor_product_lc(t, t);
  auto rep = check_axioms(tt);
  CHECK(rep.find("breaking-equation")->ok);
  CHECK(rep.find("right-counit")->ok);
  CHECK(rep.find("left-counit")->ok);

  // loop (x) loop stays a loop on the pair vertex
  WeightedDigraph loop;
  loop.vertices = {"p"};
  loop.arrows = {{"l", 0, 0, Scalar::rational(1)}};
  LCoalgebra lc = to_markov_lcoalgebra(loop, ProbabilityConvention::given_weights);
  LCoalgebra ll = tensor_product_lc(lc, lc);
  CHECK(ll.right.on_word({0}) == Vect::basis_word({0, 0}));
}

TEST_CASE("degree-n lift") {
  LCoalgebra t = to_markov_lcoalgebra(load_graph(triangle_doc()),
                                      ProbabilityConvention::given_weights);
  LCoalgebra t2 = lift_degree_n(t, 2);
  // right_2(x_a (x) x_b) = x_a (x) x_b (x) x_{b+1}
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(t2.right.on_word({a, b}) == Vect::basis_word({a, b, (b + 1) % 3}));
  auto rep = check_axioms(t2);
  CHECK(rep.find("breaking-equation")->ok);
  CHECK(rep.find("right-counit")->ok);
  CHECK(rep.find("left-counit")->ok);

  std::mt19937_64 rng(31);
  LCoalgebra r = to_markov_lcoalgebra(random_stochastic_graph(rng, 3),
                                      ProbabilityConvention::given_weights);
  CHECK(check_axioms(lift_degree_n(r, 3)).find("breaking-equation")->ok);
  CHECK(lift_degree_n(t, 1).degree == 1);
}

TEST_CASE("adjoined identity wires sinks") {
  WeightedDigraph g;
  g.vertices = {"X", "1"};
  g.arrows = {{"a", 0, 1, Scalar::rational(1)}};  // X -> 1, 1 is a sink
  LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights, true);
  CHECK(c.basis.size() == 3);
  CHECK(c.right_counit.has_value());
  CHECK(check_axioms(c).find("right-counit")->ok);
}

TEST_CASE("group algebra bialgebra with group-like coproduct") {
  StructAlgebra z3 = group_algebra_zn(3);
  LCoalgebra c;
  c.basis = z3.basis;
  c.kind = z3.kind;
  c.right = LinMap(1, 2, [](const TensorWord& w) {
    return Vect::basis_word({w[0], w[0]});
  });
  c.left = c.right;
  c.right_counit = LinMap(1, 0, [](const TensorWord&) {
    return Vect::word({}, Scalar::rational(1));
  });
  c.left_counit = c.right_counit;
  auto rep = check_bialgebra_hopf(c, z3);
  CHECK(rep.all_ok());

  // Degenerate Hopf axioms with S(g) = g^{-1}.
  LinMap S(1, 1, [](const TensorWord& w) {
    return Vect::basis_word({(3 - w[0]) % 3});
  });
  auto hopf = check_bialgebra_hopf(c, z3, S, S);
  CHECK(hopf.all_ok());
}

TEST_CASE("projection shadow algebra is a bialgebra for the Markov coproducts") {
  WeightedDigraph g = load_graph(triangle_doc());
  StructAlgebra ck = ck_shadow(g);
  LCoalgebra c = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);
  c.basis = ck.basis;  // rename vertices to projection symbols
  auto rep = check_bialgebra_hopf(c, ck);
  CHECK(rep.find("right-coproduct-multiplicative")->ok);
  CHECK(rep.find("left-coproduct-multiplicative")->ok);
}
