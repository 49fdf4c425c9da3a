#pragma once
// Pointer polynomial spaces: a coproduct on a graph induces a product on
// polynomials whose coefficients sit under pointers, by carrying each tensor
// term X_j (x) X_l of Delta(X_i) onto the coefficient product a_j * b_l and
// placing the result under a convention-chosen pointer.  Static placement
// over a matrix coproduct recovers matrix multiplication; shifting the
// triangle placement gives the wedge product; weighted graphs give random
// products; and swapping the coalgebra mid-stream mutates the product.

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcoalg/coassoc.hpp"
#include "lcoalg/lcoalgebra.hpp"

namespace lcoalg {

// A polynomial sum_i a_i X_i with coefficients a_i in a based algebra (a
// one-dimensional algebra models plain scalars).  Missing entries are zero.
struct PointerPoly {
  int n = 0;  // number of pointers
  ScalarKind kind = ScalarKind::Rational;
  std::vector<Vect> coeffs;  // degree-1 elements of the coefficient algebra

  static PointerPoly zero(int n, ScalarKind k) {
    PointerPoly p;
    p.n = n;
    p.kind = k;
    p.coeffs.assign(n, Vect(1));
    return p;
  }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  PointerPoly operator+(const PointerPoly& o) const {
    check_shape(o);
    PointerPoly r = *this;
    for (int i = 0; i < n; ++i) r.coeffs[i] = r.coeffs[i] + o.coeffs[i];
    return r;
  }
  PointerPoly operator-(const PointerPoly& o) const {
    check_shape(o);
    PointerPoly r = *this;
    for (int i = 0; i < n; ++i) r.coeffs[i] = r.coeffs[i] - o.coeffs[i];
    return r;
  }
  PointerPoly scaled(const Scalar& s) const {
    PointerPoly r = *this;
    for (auto& c : r.coeffs) c = c.scaled(s);
    return r;
  }
  bool operator==(const PointerPoly& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (!(coeffs[i] == o.coeffs[i])) return false;
    return true;
  }
  bool operator!=(const PointerPoly& o) const { return !(*this == o); }

  std::string str(const Basis& pointers, const Basis& coeff_basis) const {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (coeffs[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs[i].str(coeff_basis) + ") " + pointers.names[i];
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_shape(const PointerPoly& o) const {
    if (n != o.n || kind != o.kind)
      throw std::invalid_argument("pointer polynomial shape mismatch");
  }
};

// Where the result of Delta(X_i) = ... (x) X_l is placed: under X_i itself
// (the static view), under a permuted pointer, or under the terminus X_l of
// each walk term (the path view).
struct PlacementConvention {
  enum class Kind { fixed, shifted, path };
  Kind kind = Kind::fixed;
  std::vector<int> perm;  // for shifted placement

  static PlacementConvention at_source() { return {Kind::fixed, {}}; }
  static PlacementConvention shifted(std::vector<int> p) {
    return {Kind::shifted, std::move(p)};
  }
  static PlacementConvention path() { return {Kind::path, {}}; }

  int target(int pointer, int terminus) const {
    switch (kind) {
      case Kind::fixed:
        return pointer;
      case Kind::shifted:
        if (pointer >= static_cast<int>(perm.size()) || perm[pointer] < 0)
          throw std::invalid_argument(
              "placement target undefined for pointer " +
              std::to_string(pointer));
        return perm[pointer];
      case Kind::path:
        return terminus;
    }
    throw std::invalid_argument("bad placement kind");
  }
};

inline Scalar promote_scalar(const Scalar& s, ScalarKind k) {
  if (s.kind() == k) return s;
  if (s.kind() == ScalarKind::Rational && k == ScalarKind::GaussianRational)
    return Scalar::gauss(s.as_rational(), 0);
  if (k == ScalarKind::ComplexDouble) return Scalar::cplx(s.to_cplx());
  throw std::invalid_argument("cannot promote scalar kind");
}

// (sum a_i X_i) [Delta] (sum b_i X_i): every tensor term X_j (x) X_l of
// Delta(X_i) contributes the coefficient product a_j b_l under the placement
// target of X_i.
inline PointerPoly pointer_product(const StructAlgebra& A, const LCoalgebra& c,
                                   const PlacementConvention& conv,
                                   const PointerPoly& p, const PointerPoly& q) {
  const int n = c.basis.size();
  if (p.n != n || q.n != n)
    throw std::invalid_argument("pointer count does not match the coalgebra");
  if (p.kind != A.kind || q.kind != A.kind)
    throw std::invalid_argument("coefficient kind does not match the algebra");
  PointerPoly r = PointerPoly::zero(n, A.kind);
  for (int i = 0; i < n; ++i) {
    Vect d = c.right.on_word({i});
    for (const auto& [w, coeff] : d.terms()) {
      Vect v = A.mul(p.coeffs[w[0]], q.coeffs[w[1]])
                   .scaled(promote_scalar(coeff, A.kind));
      int t = conv.target(i, w[1]);
      r.coeffs[t] = r.coeffs[t] + v;
    }
  }
  return r;
}

// The coefficient "1" of the ambient algebra, for building unit polynomials.
inline Vect unit_coefficient(const StructAlgebra& A) {
  if (A.basis.unit) return Vect::word({*A.basis.unit}, Scalar::one(A.kind));
  if (A.dim() == 1) return Vect::word({0}, Scalar::one(A.kind));
  throw std::invalid_argument("coefficient algebra has no unit symbol");
}

inline PointerPoly basis_poly(const StructAlgebra& A, int n, int pointer) {
  PointerPoly p = PointerPoly::zero(n, A.kind);
  p.coeffs[pointer] = unit_coefficient(A);
  return p;
}

// --- matrix products from matrix coproducts ----------------------------------

// The block-diagonal symbol coalgebra: one symbol per matrix position inside
// each block, with Delta(X_ij) = sum_k X_ik (x) X_kj taken blockwise.
inline LCoalgebra matrix_coalgebra(const std::vector<int>& blocks) {
  int m = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
    m += b;
  }
  Basis basis;
  std::vector<std::vector<std::string>> rows(m, std::vector<std::string>(m, "0"));
  int off = 0, blk = 0;
  for (int b : blocks) {
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        std::string name = "X" + std::to_string(blk) + "_" +
                           std::to_string(i) + std::to_string(j);
        basis.names.push_back(name);
        rows[off + i][off + j] = name;
      }
    off += b;
    ++blk;
  }
  SymbolMatrix T = SymbolMatrix::from_names(basis, rows);
  return coproduct_from_matrices(T, T);
}

// Pointer index of block-entry (i, j) in the basis built above.
inline int matrix_pointer(const std::vector<int>& blocks, int blk, int i, int j) {
  int idx = 0;
  for (int b = 0; b < blk; ++b) idx += blocks[b] * blocks[b];
  return idx + i * blocks[blk] + j;
}

// Blockwise row-column product of the coefficient arrays: the oracle the
// induced static product must reproduce.
inline PointerPoly matrix_oracle(const StructAlgebra& A,
                                 const std::vector<int>& blocks,
                                 const PointerPoly& p, const PointerPoly& q) {
  PointerPoly r = PointerPoly::zero(p.n, A.kind);
  for (int blk = 0; blk < static_cast<int>(blocks.size()); ++blk) {
    const int b = blocks[blk];
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        Vect acc(1);
        for (int k = 0; k < b; ++k)
          acc = acc + A.mul(p.coeffs[matrix_pointer(blocks, blk, i, k)],
                            q.coeffs[matrix_pointer(blocks, blk, k, j)]);
        r.coeffs[matrix_pointer(blocks, blk, i, j)] = acc;
      }
  }
  return r;
}

inline PointerPoly identity_poly(const StructAlgebra& A,
                                 const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b * b;
  PointerPoly p = PointerPoly::zero(n, A.kind);
  for (int blk = 0; blk < static_cast<int>(blocks.size()); ++blk)
    for (int i = 0; i < blocks[blk]; ++i)
      p.coeffs[matrix_pointer(blocks, blk, i, i)] = unit_coefficient(A);
  return p;
}

namespace detail {

inline PointerPoly rand_poly(std::mt19937_64& rng, const StructAlgebra& A,
                             int n) {
  PointerPoly p = PointerPoly::zero(n, A.kind);
  for (int i = 0; i < n; ++i) {
    Vect v(1);
    for (int s = 0; s < A.dim(); ++s)
      v.add_term({s}, Scalar::integer(static_cast<long>(rng() % 7) - 3, A.kind));
    p.coeffs[i] = v;
  }
  return p;
}

inline bool is_coassociative(const LCoalgebra& c, std::string* witness) {
  LinMap defect =
      tensor_of_maps(c.right, LinMap::identity(1)).compose(c.right) -
      tensor_of_maps(LinMap::identity(1), c.right).compose(c.right);
  for (int i = 0; i < c.basis.size(); ++i)
    if (!defect.on_word({i}).is_zero()) {
      if (witness) *witness = "defect at " + c.basis.names[i];
      return false;
    }
  return true;
}

}  // namespace detail

// Does the induced product associate?  Checked on random coefficient triples.
inline bool induced_product_associative(const StructAlgebra& A,
                                        const LCoalgebra& c,
                                        const PlacementConvention& conv,
                                        int samples, unsigned long long seed,
                                        std::string* witness = nullptr) {
  std::mt19937_64 rng(seed);
  const int n = c.basis.size();
  for (int t = 0; t < samples; ++t) {
    PointerPoly x = detail::rand_poly(rng, A, n);
    PointerPoly y = detail::rand_poly(rng, A, n);
    PointerPoly z = detail::rand_poly(rng, A, n);
    PointerPoly lhs = pointer_product(A, c, conv, pointer_product(A, c, conv, x, y), z);
    PointerPoly rhs = pointer_product(A, c, conv, x, pointer_product(A, c, conv, y, z));
    if (lhs != rhs) {
      if (witness) *witness = "sample " + std::to_string(t);
      return false;
    }
  }
  return true;
}

// The static product over a blockwise matrix coproduct is the blockwise
// matrix product; the identity array is its unit; the product associates
// exactly when the coalgebra is coassociative.
inline AxiomReport matrix_iso_check(const StructAlgebra& A,
                                    const std::vector<int>& blocks, int samples,
                                    unsigned long long seed) {
  AxiomReport rep;
  LCoalgebra c = matrix_coalgebra(blocks);
  const auto conv = PlacementConvention::at_source();
  const int n = c.basis.size();
  std::mt19937_64 rng(seed);

  std::string w;
  bool oracle_ok = true, unit_ok = true;
  PointerPoly id = identity_poly(A, blocks);
  for (int t = 0; t < samples && (oracle_ok || unit_ok); ++t) {
    PointerPoly p = detail::rand_poly(rng, A, n);
    PointerPoly q = detail::rand_poly(rng, A, n);
    if (pointer_product(A, c, conv, p, q) != matrix_oracle(A, blocks, p, q)) {
      oracle_ok = false;
      w = "sample " + std::to_string(t);
    }
    if (pointer_product(A, c, conv, id, p) != p ||
        pointer_product(A, c, conv, p, id) != p)
      unit_ok = false;
  }
  rep.add("matches-matrix-oracle", oracle_ok, w);
  rep.add("identity-is-unit", unit_ok);

  std::string cw, aw;
  bool coassoc = detail::is_coassociative(c, &cw);
  bool assoc = induced_product_associative(A, c, conv, samples, seed + 1, &aw);
  rep.add("coassociative", coassoc, cw);
  rep.add("induced-product-associative", assoc, aw);
  return rep;
}

// Associativity of the induced static product against coassociativity of the
// coalgebra: the two verdicts must agree whether both hold or both fail.
inline AxiomReport associativity_equivalence_report(const StructAlgebra& A,
                                                    const LCoalgebra& c,
                                                    int samples,
                                                    unsigned long long seed) {
  AxiomReport rep;
  std::string cw, aw;
  bool coassoc = detail::is_coassociative(c, &cw);
  bool assoc = induced_product_associative(
      A, c, PlacementConvention::at_source(), samples, seed, &aw);
  rep.add("coassociative", coassoc, cw);
  rep.add("induced-product-associative", assoc, aw);
  rep.add("equivalence", coassoc == assoc);
  return rep;
}

// --- the shifted triangle and the wedge product -------------------------------

// Basis {1, X0, X1, X2} with a loop at 1 and the cycle X0 -> X1 -> X2 -> X0;
// the value of Delta(X_i) is shifted into position X_{i+2 mod 3} while 1
// stays put.
inline LCoalgebra triangle_with_unit() {
  WeightedDigraph g;
  g.vertices = {"1", "x0", "x1", "x2"};
  g.identity = 0;
  g.arrows.push_back({"e1", 0, 0, Scalar::rational(1)});
  for (int v = 0; v < 3; ++v)
    g.arrows.push_back(
        {"e" + std::to_string(v + 2), 1 + v, 1 + (v + 1) % 3, Scalar::rational(1)});
  return to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);
}

inline PlacementConvention triangle_shift() {
  return PlacementConvention::shifted({0, 3, 1, 2});
}

inline PointerPoly vector_poly(const StructAlgebra& A, const Vect& xyz) {
  PointerPoly p = PointerPoly::zero(4, A.kind);
  for (const auto& [w, c] : xyz.terms())
    p.coeffs[1 + w[0]] = Vect::word({0}, c);
  return p;
}

// The commutator of the shifted triangle product is the standard cross
// product of 3-vectors, exactly.
inline AxiomReport cross_product_check(int samples, unsigned long long seed) {
  AxiomReport rep;
  StructAlgebra A = pointer_space(1);  // plain scalars
  LCoalgebra c = triangle_with_unit();
  const auto conv = triangle_shift();
  auto prod = [&](const PointerPoly& p, const PointerPoly& q) {
    return pointer_product(A, c, conv, p, q);
  };
  auto bracket = [&](const PointerPoly& p, const PointerPoly& q) {
    return prod(p, q) - prod(q, p);
  };
  auto vec = [&](long x, long y, long z) {
    Vect v(1);
    v.add_term({0}, Scalar::rational(x));
    v.add_term({1}, Scalar::rational(y));
    v.add_term({2}, Scalar::rational(z));
    return vector_poly(A, v);
  };
  auto cross = [&](const std::array<long, 3>& a, const std::array<long, 3>& b) {
    return vec(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]);
  };

  bool basis_ok = bracket(vec(1, 0, 0), vec(0, 1, 0)) == vec(0, 0, 1) &&
                  bracket(vec(0, 1, 0), vec(0, 0, 1)) == vec(1, 0, 0) &&
                  bracket(vec(0, 0, 1), vec(1, 0, 0)) == vec(0, 1, 0);
  rep.add("basis-commutators-match", basis_ok);

  std::mt19937_64 rng(seed);
  auto rand3 = [&] {
    return std::array<long, 3>{static_cast<long>(rng() % 9) - 4,
                               static_cast<long>(rng() % 9) - 4,
                               static_cast<long>(rng() % 9) - 4};
  };
  bool alt_ok = true, formula_ok = true, bilin_ok = true;
  std::string w;
  for (int t = 0; t < samples; ++t) {
    auto a = rand3(), b = rand3(), d = rand3();
    PointerPoly pa = vec(a[0], a[1], a[2]), pb = vec(b[0], b[1], b[2]),
                pd = vec(d[0], d[1], d[2]);
    if (!bracket(pa, pa).is_zero()) alt_ok = false;
    if (bracket(pa, pb) != cross(a, b)) {
      formula_ok = false;
      w = "sample " + std::to_string(t);
    }
    if (bracket(pa + pb, pd) != bracket(pa, pd) + bracket(pb, pd))
      bilin_ok = false;
  }
  rep.add("alternating", alt_ok);
  rep.add("matches-cross-formula", formula_ok, w);
  rep.add("bilinear", bilin_ok);

  // The unit pointer is fixed: 1 [Delta] 1 lands back under 1.
  PointerPoly unit = basis_poly(A, 4, 0);
  rep.add("unit-pointer-fixed", prod(unit, unit) == unit);
  return rep;
}

// --- random products on weighted graphs --------------------------------------

// One tensor term of Delta(X_i) is drawn per pointer, with the arrow weights
// as probabilities, and applied with coefficient one.  Deterministic per
// seed; a single-arrow pointer always uses its unique term.
inline PointerPoly random_pointer_product(const StructAlgebra& A,
                                          const LCoalgebra& c,
                                          const PlacementConvention& conv,
                                          const PointerPoly& p,
                                          const PointerPoly& q,
                                          unsigned long long seed) {
  const int n = c.basis.size();
  if (p.n != n || q.n != n)
    throw std::invalid_argument("pointer count does not match the coalgebra");
  std::mt19937_64 rng(seed);
  PointerPoly r = PointerPoly::zero(n, A.kind);
  for (int i = 0; i < n; ++i) {
    Vect d = c.right.on_word({i});
    if (d.is_zero()) continue;
    std::vector<TensorWord> words;
    std::vector<double> weights;
    for (const auto& [w, coeff] : d.terms()) {
      words.push_back(w);
      weights.push_back(std::abs(coeff.to_cplx()));
    }
    size_t pick = 0;
    if (words.size() > 1) {
      std::discrete_distribution<size_t> dist(weights.begin(), weights.end());
      pick = dist(rng);
    }
    const TensorWord& w = words[pick];
    int t = conv.target(i, w[1]);
    r.coeffs[t] = r.coeffs[t] + A.mul(p.coeffs[w[0]], q.coeffs[w[1]]);
  }
  return r;
}

// --- mutation of products -----------------------------------------------------

struct MutationState {
  std::string name;
  LCoalgebra lc;
  PlacementConvention conv;
};

// The worked trio on the pointer set {a, b, c, d}: the matrix coproduct H2,
// the single loop at a (a projection), and the oriented triangle on a, b, c
// with the shifted placement (the wedge-type product, not coassociative).
inline MutationState builtin_mutation_state(const std::string& name) {
  Basis basis{{"a", "b", "c", "d"}, std::nullopt};
  auto W = [](std::initializer_list<std::pair<TensorWord, long>> terms) {
    Vect v(2);
    for (const auto& [w, c] : terms) v.add_term(w, Scalar::rational(c));
    return v;
  };
  auto make = [&](std::map<TensorWord, Vect> delta) {
    LCoalgebra c;
    c.basis = basis;
    c.degree = 1;
    for (int i = 0; i < 4; ++i)
      if (!delta.count({i})) delta[{i}] = Vect(2);
    c.right = LinMap::from_table(1, 2, delta);
    c.left = c.right;
    return c;
  };
  if (name == "H2") {
    return {name, builtin_catalog("sl2q").lc, PlacementConvention::at_source()};
  } else if (name == "diamond_a") {
    return {name, make({{{0}, W({{{0, 0}, 1}})}}),
            PlacementConvention::at_source()};
  } else if (name == "triangle") {
    return {name,
            make({{{0}, W({{{0, 1}, 1}})},
                  {{1}, W({{{1, 2}, 1}})},
                  {{2}, W({{{2, 0}, 1}})}}),
            PlacementConvention::shifted({2, 0, 1, 3})};
  }
  throw std::invalid_argument("unknown mutation state: " + name);
}

struct MutationProcess {
  std::vector<MutationState> states;
  std::vector<Scalar> probs;  // exact rationals summing to one
  unsigned long long seed = 0;

  void validate() const {
    if (states.empty() || states.size() != probs.size())
      throw std::invalid_argument("states and probabilities must pair up");
    Scalar sum = Scalar::rational(0);
    for (const auto& p : probs) {
      if (p.kind() != ScalarKind::Rational || p.as_rational() < 0)
        throw std::invalid_argument("probabilities must be nonnegative rationals");
      sum += p;
    }
    if (sum != Scalar::rational(1))
      throw std::invalid_argument("probabilities must sum to one");
  }
};

struct MutationTrajectory {
  std::vector<int> states;        // drawn state index per step
  std::vector<PointerPoly> values;  // start value, then one value per step
};

// At each step a state is drawn independently and the current value is
// multiplied by itself under that state's product.  The displayed power
// sequence 1 -> 2 -> 8 -> 128 forces this squaring semantics.
inline MutationTrajectory mutation_simulate(const StructAlgebra& A,
                                            const MutationProcess& proc,
                                            const PointerPoly& start, int steps,
                                            bool track_values = true) {
  proc.validate();
  if (steps < 1) throw std::invalid_argument("mutation needs steps >= 1");
  std::mt19937_64 rng(proc.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> cut;
  double acc = 0;
  for (const auto& p : proc.probs) {
    acc += p.to_cplx().real();
    cut.push_back(acc);
  }
  MutationTrajectory traj;
  if (track_values) traj.values.push_back(start);
  PointerPoly cur = start;
  for (int s = 0; s < steps; ++s) {
    double x = u(rng);
    int idx = 0;
    while (idx + 1 < static_cast<int>(cut.size()) && x >= cut[idx]) ++idx;
    traj.states.push_back(idx);
    if (track_values) {
      const MutationState& st = proc.states[idx];
      cur = pointer_product(A, st.lc, st.conv, cur, cur);
      traj.values.push_back(cur);
    }
  }
  return traj;
}

// First step (1-based) at which `target` is drawn, or 0 if it never is.
inline int first_occurrence(const MutationTrajectory& traj, int target) {
  for (size_t s = 0; s < traj.states.size(); ++s)
    if (traj.states[s] == target) return static_cast<int>(s) + 1;
  return 0;
}

// Each state's coproduct feeds the two-step sequence
//   G -> G (x) G -> G (x) G (x) G  via  Delta, then Delta (x) id - id (x) Delta;
// the composite vanishes exactly when the coproduct is coassociative, which
// is the complex property of the sequence.  Kernel/image sizes are reported
// as dimensions in the witness text.
inline AxiomReport mutation_complex_report(const MutationProcess& proc) {
  AxiomReport rep;
  for (const auto& st : proc.states) {
    std::string w;
    bool ok = detail::is_coassociative(st.lc, &w);
    rep.add(st.name + "-is-complex", ok, w);
  }
  return rep;
}

}  // namespace lcoalg
