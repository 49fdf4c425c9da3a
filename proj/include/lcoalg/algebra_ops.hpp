#pragma once
// Operations built from a unital algebra and its flower structure:
// the flower L-coalgebra, Hochschild boundaries b/b', the reading map on
// periodic orbits, the nonlocal complex driven by Delta - Delta_f, and the
// degree-2 triangle Hopf structure on quaternion-like algebras.

#include <optional>
#include <string>
#include <vector>

#include "lcoalg/algebra.hpp"
#include "lcoalg/lcoalgebra.hpp"

namespace lcoalg {

// id^(i-1) (x) op (x) id^(total-i-op_dom+1): op acting on slots starting at
// position i (1-based) of a degree-`total` word.
inline LinMap at_slot(const LinMap& op, int i, int total) {
  if (i < 1 || i - 1 + op.dom_degree() > total)
    throw std::invalid_argument("at_slot: position out of range");
  LinMap res = op;
  if (i > 1) res = tensor_of_maps(LinMap::identity(i - 1), res);
  int trailing = total - (i - 1) - op.dom_degree();
  if (trailing > 0) res = tensor_of_maps(res, LinMap::identity(trailing));
  return res;
}

// --- flower structure ---------------------------------------------------------

// delta(a) = a (x) 1 as a linear map over the algebra's basis.
inline LinMap flower_right(const StructAlgebra& alg) {
  const int u = alg.unit_index();
  ScalarKind kind = alg.kind;
  return LinMap(1, 2, [u, kind](const TensorWord& w) {
    return Vect::word({w[0], u}, Scalar::one(kind));
  });
}

// delta~(a) = 1 (x) a.
inline LinMap flower_left(const StructAlgebra& alg) {
  const int u = alg.unit_index();
  ScalarKind kind = alg.kind;
  return LinMap(1, 2, [u, kind](const TensorWord& w) {
    return Vect::word({u, w[0]}, Scalar::one(kind));
  });
}

// The flower coalgebra of a unital algebra.  Counits are attached only when a
// unital character (an algebra map to the base field) is supplied, since none
// need exist over the base field.
inline LCoalgebra flower_lcoalgebra(const StructAlgebra& alg,
                                    std::optional<LinMap> character = std::nullopt) {
  if (!alg.has_unit()) throw std::invalid_argument("flower needs a unital algebra");
  LCoalgebra c;
  c.basis = alg.basis;
  c.kind = alg.kind;
  c.degree = 1;
  c.right = flower_right(alg);
  c.left = flower_left(alg);
  if (character) {
    if (character->dom_degree() != 1 || character->cod_degree() != 0)
      throw std::invalid_argument("character must map degree 1 to degree 0");
    c.right_counit = character;
    c.left_counit = character;
  }
  return c;
}

// --- Hochschild boundaries -----------------------------------------------------

// b'(a_1,...,a_n) = sum_{i=1}^{n-1} (-1)^{i-1} (a_1,...,a_i a_{i+1},...,a_n).
inline Vect hochschild_bprime(const StructAlgebra& alg, const Vect& v) {
  const int n = v.degree();
  if (n < 2) throw std::invalid_argument("hochschild boundaries need degree >= 2");
  Vect out(n - 1);
  for (const auto& [w, coef] : v.terms()) {
    Scalar sign = Scalar::one(alg.kind);
    for (int i = 0; i + 1 < n; ++i) {
      Vect prod = alg.product(w[i], w[i + 1]);
      for (const auto& [pw, pc] : prod.terms()) {
        TensorWord r;
        for (int s = 0; s < i; ++s) r.push_back(w[s]);
        r.push_back(pw[0]);
        for (int s = i + 2; s < n; ++s) r.push_back(w[s]);
        out.add_term(r, coef * sign * pc);
      }
      sign = -sign;
    }
  }
  return out;
}

// b = b' + (-1)^{n-1} (a_n a_1, a_2, ..., a_{n-1}).
inline Vect hochschild_b(const StructAlgebra& alg, const Vect& v) {
  const int n = v.degree();
  Vect out = hochschild_bprime(alg, v);
  Scalar sign = (n % 2 == 1) ? Scalar::one(alg.kind) : -Scalar::one(alg.kind);
  for (const auto& [w, coef] : v.terms()) {
    Vect prod = alg.product(w[n - 1], w[0]);
    for (const auto& [pw, pc] : prod.terms()) {
      TensorWord r;
      r.push_back(pw[0]);
      for (int s = 1; s < n - 1; ++s) r.push_back(w[s]);
      out.add_term(r, coef * sign * pc);
    }
  }
  return out;
}

inline std::pair<Vect, Vect> hochschild_boundaries(const StructAlgebra& alg,
                                                   const Vect& v) {
  return {hochschild_bprime(alg, v), hochschild_b(alg, v)};
}

// --- the reading map -----------------------------------------------------------

// The periodic orbit generated by (a_1,...,a_n) on the flower, written as the
// pattern [I,a_1,I,a_2,...,I,a_n] with left border a_n and right border I.
struct OrbitPattern {
  std::vector<int> entries;  // basis indices a_1..a_n
  int period() const { return static_cast<int>(entries.size()); }
};

// Reads the pattern three by three with the map m(m (x) id) = m(id (x) m),
// starting after a unit symbol; each shift of the reading window contributes a
// minus sign.  Reading the pattern alone yields b', reading the border too
// (which forces one extra shift, behind the pattern) yields b.
inline Vect reading_map(const StructAlgebra& alg, const OrbitPattern& p,
                        bool with_border) {
  const int n = p.period();
  if (n < 2)
    throw std::invalid_argument(
        "reading map: not enough information on a period-1 orbit");
  const auto& a = p.entries;
  Vect out(n - 1);
  Scalar sign = Scalar::one(alg.kind);
  // window at step i covers (a_i, I, a_{i+1}); L gives a_i a_{i+1}, the rest
  // of the pattern is copied untouched.
  for (int i = 0; i + 1 < n; ++i) {
    Vect prod = alg.mul(alg.elem(a[i]), alg.elem(a[i + 1]));
    for (const auto& [pw, pc] : prod.terms()) {
      TensorWord r;
      for (int s = 0; s < i; ++s) r.push_back(a[s]);
      r.push_back(pw[0]);
      for (int s = i + 2; s < n; ++s) r.push_back(a[s]);
      out.add_term(r, sign * pc);
    }
    sign = -sign;
  }
  if (with_border) {
    // the final window must shift behind the pattern: (a_n, I, a_1), with one
    // more minus sign relative to the last pattern window.
    Vect prod = alg.mul(alg.elem(a[n - 1]), alg.elem(a[0]));
    for (const auto& [pw, pc] : prod.terms()) {
      TensorWord r;
      r.push_back(pw[0]);
      for (int s = 1; s + 1 < n; ++s) r.push_back(a[s]);
      out.add_term(r, sign * pc);
    }
  }
  return out;
}

// --- nonlocal complex -----------------------------------------------------------

// Delta_f = delta + delta~ as a linear map: x |-> x (x) 1 + 1 (x) x on every
// basis element (so the unit maps to twice 1 (x) 1).
inline LinMap flower_sum(const StructAlgebra& alg) {
  return flower_right(alg) + flower_left(alg);
}

// partial_n on n+1 slots, first form: the leading slot carries
// d<- = Delta - delta~, interior slots carry (-1)^{i+1} Delta, and the last
// slot carries (-1)^n d-> = (-1)^n (Delta - delta).  The trailing sign is
// fixed so that partial_1 = d<- (x) id - id (x) d->.
inline LinMap nonlocal_boundary(const LCoalgebra& c, const StructAlgebra& alg, int n) {
  if (n < 1) throw std::invalid_argument("nonlocal boundary needs n >= 1");
  const int slots = n + 1;
  LinMap d_left = c.right - flower_left(alg);
  LinMap d_right = c.right - flower_right(alg);
  LinMap res = at_slot(d_left, 1, slots);
  for (int i = 2; i <= n; ++i) {
    LinMap t = at_slot(c.right, i, slots);
    res = (i % 2 == 1) ? res + t : res - t;
  }
  LinMap last = at_slot(d_right, slots, slots);
  res = (n % 2 == 0) ? res + last : res - last;
  return res;
}

// Second form: sum_{i=1}^{n+1} (-1)^{i+1} of Delta - Delta_f at slot i.
inline LinMap nonlocal_boundary_alt(const LCoalgebra& c, const StructAlgebra& alg,
                                    int n) {
  if (n < 1) throw std::invalid_argument("nonlocal boundary needs n >= 1");
  const int slots = n + 1;
  LinMap diff = c.right - flower_sum(alg);
  LinMap res = at_slot(diff, 1, slots);
  for (int i = 2; i <= slots; ++i) {
    LinMap t = at_slot(diff, i, slots);
    res = (i % 2 == 1) ? res + t : res - t;
  }
  return res;
}

struct NonlocalReport {
  AxiomReport checks;
  std::vector<std::string> primitives;  // basis elements with Delta x = Delta_f x
};

// Verifies the complex built from Delta - Delta_f over a coassociative
// bialgebra: the boundaries square to zero, the two displayed forms agree,
// the bundle projection splits the section, and primitives are listed.
inline NonlocalReport nonlocal_complex(const LCoalgebra& c, const StructAlgebra& alg,
                                       int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  NonlocalReport out;
  AxiomReport& rep = out.checks;
  const int dim = alg.dim();

  bool mult = true;
  std::string wit;
  for (int i = 0; i < dim && mult; ++i)
    for (int j = 0; j < dim; ++j) {
      Vect xy = alg.mul(alg.elem(i), alg.elem(j));
      if (c.right.apply(xy) !=
          alg.mul_tensor(c.right.on_word({i}), c.right.on_word({j}))) {
        mult = false;
        wit = "at (" + alg.basis.names[i] + "," + alg.basis.names[j] + ")";
        break;
      }
    }
  rep.add("coproduct-multiplicative", mult, wit);
  if (!mult) return out;

  LinMap diff = c.right - flower_sum(alg);
  std::string wit1;
  rep.add("first-boundary-annihilates-difference",
          map_is_zero(nonlocal_boundary(c, alg, 1).compose(diff),
                      all_words(dim, 1), alg.basis, &wit1),
          wit1);
  bool square_zero = true;
  std::string wit2;
  for (int n = 1; n + 1 <= n_max && square_zero; ++n)
    if (!map_is_zero(nonlocal_boundary(c, alg, n + 1)
                         .compose(nonlocal_boundary(c, alg, n)),
                     all_words(dim, n + 1), alg.basis, nullptr)) {
      square_zero = false;
      wit2 = "at n = " + std::to_string(n);
    }
  rep.add("boundary-squares-to-zero", square_zero, wit2);

  bool agree = true;
  std::string wit3;
  for (int n = 1; n <= n_max && agree; ++n)
    if (!maps_equal(nonlocal_boundary(c, alg, n), nonlocal_boundary_alt(c, alg, n),
                    dim)) {
      agree = false;
      wit3 = "at n = " + std::to_string(n);
    }
  rep.add("boundary-forms-agree", agree, wit3);

  if (c.right_counit) {
    LinMap proj_r = tensor_of_maps(LinMap::identity(1), *c.right_counit);
    LinMap proj_l = tensor_of_maps(*c.right_counit, LinMap::identity(1));
    rep.add("projection-section-identity",
            maps_equal(proj_r.compose(c.right), LinMap::identity(1), dim) &&
                maps_equal(proj_l.compose(c.right), LinMap::identity(1), dim));
  }

  const int u = alg.unit_index();
  for (int i = 0; i < dim; ++i) {
    Vect want(2);
    want.add_term({i, u}, Scalar::one(alg.kind));
    want.add_term({u, i}, Scalar::one(alg.kind));
    if (c.right.on_word({i}) == want) out.primitives.push_back(alg.basis.names[i]);
  }
  return out;
}

// --- degree-2 triangle Hopf structure -------------------------------------------

// The data attached to an algebra on {1, x0, x1, x2} with x_a x_{a+1} = x_{a+2}
// and x_a x_a = -1 (indices mod 3): degree-2 coproducts and counits plus
// antipodes S(x_i) = -x_{i-1}, S~(x_{i-1}) = -x_i.
struct TriangleHopf2 {
  StructAlgebra alg;
  std::vector<int> gen;  // indices of x_0, x_1, x_2
  LinMap delta2{2, 3, nullptr}, delta2_tilde{2, 3, nullptr};
  LinMap eps2{2, 1, nullptr}, eps2_tilde{2, 1, nullptr};
  LinMap S{1, 1, nullptr}, S_tilde{1, 1, nullptr};
  AxiomReport report;
};

inline TriangleHopf2 triangle_degree2_hopf(const StructAlgebra& alg) {
  TriangleHopf2 h;
  h.alg = alg;
  AxiomReport& rep = h.report;
  if (alg.dim() != 4 || !alg.has_unit())
    throw std::invalid_argument("triangle structure needs a unital 4-dim algebra");
  const int u = alg.unit_index();
  for (int i = 0; i < 4; ++i)
    if (i != u) h.gen.push_back(i);
  const auto& g = h.gen;
  ScalarKind kind = alg.kind;

  // precondition: x_a x_{a+1} = x_{a+2} and x_a x_a = -1
  bool structure = true;
  for (int a = 0; a < 3 && structure; ++a) {
    Vect sq(1);
    sq.add_term({u}, -Scalar::one(kind));
    structure = alg.product(g[a], g[(a + 1) % 3]) ==
                    Vect::basis_word({g[(a + 2) % 3]}, kind) &&
                alg.product(g[a], g[a]) == sq;
  }
  rep.add("structure-constants", structure);
  if (!structure) return h;

  // degree-1 graph coproducts: Delta x_a = x_a (x) x_{a+1}, Delta 1 = 1 (x) 1
  std::map<TensorWord, Vect> dr, dl, sf, sb;
  dr[{u}] = Vect::word({u, u}, Scalar::one(kind));
  dl[{u}] = Vect::word({u, u}, Scalar::one(kind));
  sf[{u}] = Vect::word({u}, Scalar::one(kind));
  sb[{u}] = Vect::word({u}, Scalar::one(kind));
  for (int a = 0; a < 3; ++a) {
    dr[{g[a]}] = Vect::word({g[a], g[(a + 1) % 3]}, Scalar::one(kind));
    dl[{g[a]}] = Vect::word({g[(a + 2) % 3], g[a]}, Scalar::one(kind));
    sf[{g[a]}] = Vect::word({g[(a + 2) % 3]}, -Scalar::one(kind));  // S
    sb[{g[a]}] = Vect::word({g[(a + 1) % 3]}, -Scalar::one(kind));  // S~
  }
  LinMap delta1 = LinMap::from_table(1, 2, dr);
  LinMap delta1_tilde = LinMap::from_table(1, 2, dl);
  h.S = LinMap::from_table(1, 1, sf);
  h.S_tilde = LinMap::from_table(1, 1, sb);

  h.delta2 = tensor_of_maps(LinMap::identity(1), delta1);
  h.delta2_tilde = tensor_of_maps(delta1_tilde, LinMap::identity(1));
  // eps2(a (x) b) = a, eps2~(a (x) b) = b
  LinMap drop(1, 0, [kind](const TensorWord&) {
    return Vect::word({}, Scalar::one(kind));
  });
  h.eps2 = tensor_of_maps(LinMap::identity(1), drop);
  h.eps2_tilde = tensor_of_maps(drop, LinMap::identity(1));

  // Multiplicativity on all degree-2 basis pairs under the componentwise
  // product.  The coproducts append a rotated copy of a slot, and the
  // rotation x_a |-> x_{a+1} is an algebra automorphism; on a signed product
  // the appended slot therefore carries the sign of the slot it copies, so
  // the product side is compared against the slotwise form
  // (u1 v1) (x) (u2 v2) (x) rot(u2 v2), not against the linear map applied to
  // the merged signed word.
  std::map<TensorWord, Vect> rot_t, rot_inv_t;
  rot_t[{u}] = Vect::word({u}, Scalar::one(kind));
  rot_inv_t[{u}] = Vect::word({u}, Scalar::one(kind));
  for (int a = 0; a < 3; ++a) {
    rot_t[{g[a]}] = Vect::word({g[(a + 1) % 3]}, Scalar::one(kind));
    rot_inv_t[{g[a]}] = Vect::word({g[(a + 2) % 3]}, Scalar::one(kind));
  }
  LinMap rot = LinMap::from_table(1, 1, rot_t);
  LinMap rot_inv = LinMap::from_table(1, 1, rot_inv_t);

  bool mr = true, ml = true;
  std::string wr, wl;
  auto words = all_words(4, 2);
  for (const auto& x : words)
    for (const auto& y : words) {
      Vect xv = Vect::basis_word(x, kind), yv = Vect::basis_word(y, kind);
      Vect p1 = alg.product(x[0], y[0]);
      Vect p2 = alg.product(x[1], y[1]);
      Vect want_r = tensor_product(tensor_product(p1, p2), rot.apply(p2));
      if (mr && alg.mul_tensor(h.delta2.apply(xv), h.delta2.apply(yv)) != want_r) {
        mr = false;
        wr = "at (" + word_str(x, alg.basis) + "," + word_str(y, alg.basis) + ")";
      }
      Vect want_l = tensor_product(tensor_product(rot_inv.apply(p1), p1), p2);
      if (ml &&
          alg.mul_tensor(h.delta2_tilde.apply(xv), h.delta2_tilde.apply(yv)) !=
              want_l) {
        ml = false;
        wl = "at (" + word_str(x, alg.basis) + "," + word_str(y, alg.basis) + ")";
      }
    }
  rep.add("right-coproduct-multiplicative", mr, wr);
  rep.add("left-coproduct-multiplicative", ml, wl);

  // degree-2 coalgebra axioms
  LCoalgebra c2;
  c2.basis = alg.basis;
  c2.kind = kind;
  c2.degree = 2;
  c2.right = h.delta2;
  c2.left = h.delta2_tilde;
  c2.right_counit = h.eps2;
  c2.left_counit = h.eps2_tilde;
  AxiomReport ax = check_axioms(c2);
  for (const char* name : {"breaking-equation", "right-counit", "left-counit"})
    if (const CheckResult* ch = ax.find(name)) rep.add(ch->name, ch->ok, ch->witness);

  // right antipode: (id (x) m)(id (x) id (x) S) Delta_2 = eps2 (x) 1,
  // left antipode: (m (x) id)(S~ (x) id (x) id) Delta_2~ = 1 (x) eps2~.
  LinMap mul_map(2, 1, [&alg](const TensorWord& w) {
    return alg.product(w[0], w[1]);
  });
  LinMap right_side =
      tensor_of_maps(LinMap::identity(1), mul_map)
          .compose(tensor_of_maps(LinMap::identity(2), h.S))
          .compose(h.delta2);
  LinMap left_side =
      tensor_of_maps(mul_map, LinMap::identity(1))
          .compose(tensor_of_maps(h.S_tilde, LinMap::identity(2)))
          .compose(h.delta2_tilde);
  bool ra = true, la = true;
  std::string war, wal;
  for (const auto& w : words) {
    Vect want_r = tensor_product(h.eps2.on_word(w), Vect::basis_word({u}, kind));
    if (ra && right_side.on_word(w) != want_r) {
      ra = false;
      war = "at " + word_str(w, alg.basis);
    }
    Vect want_l = tensor_product(Vect::basis_word({u}, kind), h.eps2_tilde.on_word(w));
    if (la && left_side.on_word(w) != want_l) {
      la = false;
      wal = "at " + word_str(w, alg.basis);
    }
  }
  rep.add("right-antipode-equation", ra, war);
  rep.add("left-antipode-equation", la, wal);

  // S is a unital anti-homomorphism, and S~ inverts it
  bool anti = h.S.on_word({u}) == Vect::basis_word({u}, kind);
  for (int i = 0; i < 4 && anti; ++i)
    for (int j = 0; j < 4; ++j) {
      Vect lhs = h.S.apply(alg.product(i, j));
      Vect rhs = alg.mul(h.S.on_word({j}), h.S.on_word({i}));
      if (lhs != rhs) {
        anti = false;
        break;
      }
    }
  rep.add("antipode-anti-homomorphism", anti);
  bool inv_pair = true;
  for (int i = 0; i < 4; ++i)
    inv_pair = inv_pair &&
               h.S.apply(h.S_tilde.on_word({i})) == Vect::basis_word({i}, kind) &&
               h.S_tilde.apply(h.S.on_word({i})) == Vect::basis_word({i}, kind);
  rep.add("antipode-inverse-pair", inv_pair);

  // uniqueness: x_i S'(x_{i+1}) = 1 forces S'(x_{i+1}) = x_i^{-1} = S(x_{i+1})
  bool unique = true;
  for (int a = 0; a < 3 && unique; ++a) {
    auto inv = invert(alg, Vect::basis_word({g[a]}, kind));
    unique = inv && *inv == h.S.on_word({g[(a + 1) % 3]});
  }
  rep.add("antipode-uniqueness", unique);
  return h;
}

}  // namespace lcoalg
