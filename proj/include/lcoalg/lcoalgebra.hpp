#pragma once
// The two-coproduct coalgebra structure, its axiom checkers, walk powers,
// tensor products, degree-n lifts, and the construction from weighted graphs.

#include <optional>
#include <string>
#include <vector>

#include "lcoalg/algebra.hpp"
#include "lcoalg/graph.hpp"
#include "lcoalg/tensor.hpp"

namespace lcoalg {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string witness;  // failing word and residual, empty when ok
};

struct AxiomReport {
  std::vector<CheckResult> checks;
  void add(std::string name, bool ok, std::string witness = "") {
    checks.push_back({std::move(name), ok, std::move(witness)});
  }
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// A basis with a right coproduct ("future"), a left coproduct ("past"), and
// optional counits.  degree-n structures have maps n -> n+1, counits n -> n-1.
struct LCoalgebra {
  Basis basis;
  ScalarKind kind = ScalarKind::Rational;
  int degree = 1;
  LinMap right;                    // degree -> degree+1
  LinMap left;                     // degree -> degree+1
  std::optional<LinMap> right_counit;  // degree -> degree-1
  std::optional<LinMap> left_counit;   // degree -> degree-1

  std::vector<TensorWord> domain_words() const {
    return all_words(basis.size(), degree);
  }
};

// Does f vanish on every degree-appropriate word?  Returns a witness when not.
inline bool map_is_zero(const LinMap& f, const std::vector<TensorWord>& words,
                        const Basis& b, std::string* witness) {
  for (const auto& w : words) {
    Vect r = f.on_word(w);
    if (!r.is_zero()) {
      if (witness) *witness = "at " + word_str(w, b) + ": " + r.str(b);
      return false;
    }
  }
  return true;
}

// The five structural checks: breaking equation, degenerate coassociativity,
// both counit equations, cocommutativity.  Failures are data, not errors.
inline AxiomReport check_axioms(const LCoalgebra& c) {
  AxiomReport rep;
  const int n = c.degree;
  auto words = c.domain_words();
  std::string w;

  // (left (x) id) right = (id (x) right) left: on degree-n structures the
  // coproducts eat n of the n+1 output slots, one identity slot remains.
  LinMap breaking = tensor_of_maps(c.left, LinMap::identity(1))
                        .compose(c.right) -
                    tensor_of_maps(LinMap::identity(1), c.right)
                        .compose(c.left);
  rep.add("breaking-equation", map_is_zero(breaking, words, c.basis, &w), w);

  bool degenerate = true;
  for (const auto& word : words)
    if (c.right.on_word(word) != c.left.on_word(word)) {
      degenerate = false;
      break;
    }
  if (degenerate) {
    LinMap coassoc = tensor_of_maps(c.right, LinMap::identity(1)).compose(c.right) -
                     tensor_of_maps(LinMap::identity(1), c.right).compose(c.right);
    rep.add("degenerate-coassociativity",
            map_is_zero(coassoc, words, c.basis, &w), w);
  } else {
    rep.add("degenerate-coassociativity", false, "left and right coproducts differ");
  }

  // Counit equations: (id (x) counit) right = id keeps the first slot and
  // feeds the trailing n slots of the coproduct into the n -> n-1 counit
  // (and the mirror on the left side).
  if (c.right_counit) {
    LinMap eq = tensor_of_maps(LinMap::identity(1), *c.right_counit).compose(c.right) -
                LinMap::identity(n);
    rep.add("right-counit", map_is_zero(eq, words, c.basis, &w), w);
  }
  if (c.left_counit) {
    LinMap eq = tensor_of_maps(*c.left_counit, LinMap::identity(1)).compose(c.left) -
                LinMap::identity(n);
    rep.add("left-counit", map_is_zero(eq, words, c.basis, &w), w);
  }

  LinMap cocomm = c.right - tau_cyclic(n + 1).compose(c.right);
  rep.add("cocommutativity", map_is_zero(cocomm, words, c.basis, &w), w);
  return rep;
}

// Basis of ker(right - tau . left), the subspace on which the structure looks
// locally non-oriented.
inline std::vector<Vect> cocommutator_kernel(const LCoalgebra& c) {
  LinMap f = c.right - tau_cyclic(c.degree + 1).compose(c.left);
  return kernel_basis(f, c.domain_words(), c.kind);
}

// --- the Markov construction -----------------------------------------------

// Right coproduct v -> sum over out-arrows of weight * v (x) target; left
// coproduct v -> (1/#in) sum over in-arrows of source (x) v (normalization
// dropped under unit weights).
inline LCoalgebra to_markov_lcoalgebra(const WeightedDigraph& graph,
                                       ProbabilityConvention conv,
                                       bool adjoin_identity = false) {
  WeightedDigraph g = adjoin_identity ? adjoin_identity_vertex(graph) : graph;
  if (conv == ProbabilityConvention::given_weights) validate_probabilities(g);

  LCoalgebra c;
  c.basis = g.basis();
  c.kind = ScalarKind::Rational;
  c.degree = 1;

  std::map<TensorWord, Vect> right, left;
  for (int v = 0; v < g.basis().size(); ++v) {
    Vect rv(2), lv(2);
    for (const Arrow* a : g.out_arrows(v))
      rv.add_term({v, a->dst}, g.step_weight(*a, conv));
    auto in = g.in_arrows(v);
    Scalar norm = (conv == ProbabilityConvention::unit_weights || in.empty())
                      ? Scalar::rational(1)
                      : Scalar::rational(1, long(in.size()));
    for (const Arrow* a : in) lv.add_term({a->src, v}, norm);
    right[{v}] = rv;
    left[{v}] = lv;
  }
  c.right = LinMap::from_table(1, 2, right);
  c.left = LinMap::from_table(1, 2, left);

  // Counits (both constantly 1) are attached only when the convention makes
  // the counit equations hold: probability weights, no sinks, no sources.
  bool valid = conv != ProbabilityConvention::unit_weights;
  for (int v = 0; valid && v < g.basis().size(); ++v)
    if (g.is_sink(v) || g.is_source(v)) valid = false;
  if (valid) {
    auto eps = LinMap(1, 0, [](const TensorWord&) {
      return Vect::word({}, Scalar::rational(1));
    });
    c.right_counit = eps;
    c.left_counit = eps;
  }
  return c;
}

// Arrow extraction: one arrow u->v of weight c per term c * u(x)v of right(u);
// with from_both also the arrows read off the left coproduct.
inline WeightedDigraph graph_of(const LCoalgebra& c, bool from_both = false) {
  if (c.degree != 1) throw std::invalid_argument("graph_of needs a degree-1 structure");
  WeightedDigraph g;
  g.vertices = c.basis.names;
  g.identity = c.basis.unit;
  int n = 0;
  auto harvest = [&](const LinMap& m) {
    for (int v = 0; v < c.basis.size(); ++v) {
      Vect img = m.on_word({v});
      for (const auto& [w, coeff] : img.terms())
        g.arrows.push_back({"a" + std::to_string(n++), w[0], w[1], coeff});
    }
  };
  harvest(c.right);
  if (from_both) harvest(c.left);
  return g;
}

// (id^{(k-1)} (x) right) ... (id (x) right) right applied to v: the degree
// k+1 generator of the weighted length-k walks out of v.
inline Vect walk_expansion(const LCoalgebra& c, const Vect& v, int k) {
  if (k < 1) throw std::invalid_argument("walk_expansion needs k >= 1");
  if (v.degree() != c.degree)
    throw std::invalid_argument("walk_expansion expects a degree-matching input");
  Vect cur = c.right.apply(v);
  for (int step = 2; step <= k; ++step)
    cur = tensor_of_maps(LinMap::identity(step - 1), c.right).apply(cur);
  return cur;
}

// Extending a k-step expansion by l more steps matches the (k+l)-step
// expansion on every basis word.
inline bool star_compose(const LCoalgebra& c, int k, int l) {
  for (const auto& w : c.domain_words()) {
    Vect base = walk_expansion(c, Vect::basis_word(w, c.kind), k);
    for (int step = 1; step <= l; ++step)
      base = tensor_of_maps(LinMap::identity(k + step - 1), c.right).apply(base);
    if (base != walk_expansion(c, Vect::basis_word(w, c.kind), k + l)) return false;
  }
  return true;
}

// Product structure: basis of pairs, coproducts (1 (x) tau (x) 1)(d_C (x) d_D).
inline LCoalgebra tensor_product_lc(const LCoalgebra& c, const LCoalgebra& d) {
  if (c.degree != 1 || d.degree != 1)
    throw std::invalid_argument("tensor_product_lc expects degree-1 factors");
  if (c.kind != d.kind) throw std::invalid_argument("scalar kind mismatch");
  LCoalgebra r;
  const int nd = d.basis.size();
  for (const auto& a : c.basis.names)
    for (const auto& b : d.basis.names) r.basis.names.push_back(a + "." + b);
  r.kind = c.kind;
  r.degree = 1;

  // pair index p = i*nd + j  <->  (i, j)
  auto mk = [&](const LinMap& fc, const LinMap& fd) {
    return LinMap(1, 2, [fc, fd, nd](const TensorWord& w) {
      int i = w[0] / nd, j = w[0] % nd;
      Vect out(2);
      Vect vc = fc.on_word({i}), vd = fd.on_word({j});
      for (const auto& [wc, cc] : vc.terms())
        for (const auto& [wd, cd] : vd.terms())
          // middle transposition: (i1, i2) (x) (j1, j2) -> (i1 j1, i2 j2)
          out.add_term({wc[0] * nd + wd[0], wc[1] * nd + wd[1]}, cc * cd);
      return out;
    });
  };
  r.right = mk(c.right, d.right);
  r.left = mk(c.left, d.left);
  if (c.right_counit && d.right_counit) {
    LinMap ec = *c.right_counit, ed = *d.right_counit;
    r.right_counit = LinMap(1, 0, [ec, ed, nd](const TensorWord& w) {
      Vect a = ec.on_word({w[0] / nd}), b = ed.on_word({w[0] % nd});
      return Vect::word({}, a.coeff({}) * b.coeff({}));
    });
  }
  if (c.left_counit && d.left_counit) {
    LinMap ec = *c.left_counit, ed = *d.left_counit;
    r.left_counit = LinMap(1, 0, [ec, ed, nd](const TensorWord& w) {
      Vect a = ec.on_word({w[0] / nd}), b = ed.on_word({w[0] % nd});
      return Vect::word({}, a.coeff({}) * b.coeff({}));
    });
  }
  return r;
}

// Degree-n lift: right_n = id^{(n-1)} (x) right, left_n = left (x) id^{(n-1)},
// counits analogously with the opposite slot kept.
inline LCoalgebra lift_degree_n(const LCoalgebra& c, int n) {
  if (c.degree != 1) throw std::invalid_argument("lift expects a degree-1 input");
  if (n < 1) throw std::invalid_argument("lift needs n >= 1");
  LCoalgebra r = c;
  if (n == 1) return r;
  r.degree = n;
  r.right = tensor_of_maps(LinMap::identity(n - 1), c.right);
  r.left = tensor_of_maps(c.left, LinMap::identity(n - 1));
  r.right_counit.reset();
  r.left_counit.reset();
  if (c.right_counit)
    r.right_counit = tensor_of_maps(LinMap::identity(n - 1), *c.right_counit);
  if (c.left_counit)
    r.left_counit = tensor_of_maps(*c.left_counit, LinMap::identity(n - 1));
  return r;
}

// --- bialgebra / Hopf checks ------------------------------------------------

// Coproduct multiplicativity for the slotwise tensor product, unit grouplikeness,
// counit multiplicativity, and (when antipodes are supplied) the antipode
// equations m(id (x) S) right = unit . right_counit and the left mirror.
inline AxiomReport check_bialgebra_hopf(const LCoalgebra& c, const StructAlgebra& alg,
                                        const std::optional<LinMap>& S = std::nullopt,
                                        const std::optional<LinMap>& S_tilde = std::nullopt) {
  AxiomReport rep;
  const int n = alg.dim();
  bool right_ok = true, left_ok = true;
  std::string wit_r, wit_l;
  for (int i = 0; i < n && (right_ok || left_ok); ++i)
    for (int j = 0; j < n; ++j) {
      Vect xy = alg.mul(alg.elem(i), alg.elem(j));
      if (right_ok &&
          c.right.apply(xy) != alg.mul_tensor(c.right.on_word({i}), c.right.on_word({j}))) {
        right_ok = false;
        wit_r = "at (" + alg.basis.names[i] + "," + alg.basis.names[j] + ")";
      }
      if (left_ok &&
          c.left.apply(xy) != alg.mul_tensor(c.left.on_word({i}), c.left.on_word({j}))) {
        left_ok = false;
        wit_l = "at (" + alg.basis.names[i] + "," + alg.basis.names[j] + ")";
      }
    }
  rep.add("right-coproduct-multiplicative", right_ok, wit_r);
  rep.add("left-coproduct-multiplicative", left_ok, wit_l);

  if (alg.has_unit()) {
    int u = alg.unit_index();
    Vect uu = tensor_product(alg.unit(), alg.unit());
    rep.add("unit-grouplike-right", c.right.on_word({u}) == uu);
    rep.add("unit-grouplike-left", c.left.on_word({u}) == uu);
  }

  auto counit_mult = [&](const LinMap& eps, const char* label) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar lhs = eps.apply(alg.mul(alg.elem(i), alg.elem(j))).coeff({}, alg.kind);
        Scalar rhs = eps.on_word({i}).coeff({}, alg.kind) *
                     eps.on_word({j}).coeff({}, alg.kind);
        if (lhs != rhs) {
          ok = false;
          wit = "at (" + alg.basis.names[i] + "," + alg.basis.names[j] + ")";
          break;
        }
      }
    rep.add(label, ok, wit);
  };
  if (c.right_counit) counit_mult(*c.right_counit, "right-counit-multiplicative");
  if (c.left_counit) counit_mult(*c.left_counit, "left-counit-multiplicative");

  // m : degree-2 words -> degree-1 by multiplying the two slots.
  LinMap m(2, 1, [&alg](const TensorWord& w) {
    return alg.mul(alg.elem(w[0]), alg.elem(w[1]));
  });
  if (S && c.right_counit) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n; ++i) {
      Vect lhs = m.apply(tensor_of_maps(LinMap::identity(1), *S).apply(c.right.on_word({i})));
      Vect rhs = alg.unit().scaled(c.right_counit->on_word({i}).coeff({}, alg.kind));
      if (lhs != rhs) {
        ok = false;
        wit = "at " + alg.basis.names[i];
        break;
      }
    }
    rep.add("right-antipode-equation", ok, wit);
  }
  if (S_tilde && c.left_counit) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n; ++i) {
      Vect lhs = m.apply(tensor_of_maps(*S_tilde, LinMap::identity(1)).apply(c.left.on_word({i})));
      Vect rhs = alg.unit().scaled(c.left_counit->on_word({i}).coeff({}, alg.kind));
      if (lhs != rhs) {
        ok = false;
        wit = "at " + alg.basis.names[i];
        break;
      }
    }
    rep.add("left-antipode-equation", ok, wit);
  }
  return rep;
}

}  // namespace lcoalg
