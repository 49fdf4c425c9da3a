#pragma once
// Finite-dimensional (usually unital) algebras by structure constants, a
// small catalog of concrete instances, and slotwise products on tensor words.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcoalg/graph.hpp"
#include "lcoalg/tensor.hpp"

namespace lcoalg {

struct StructAlgebra {
  Basis basis;          // basis.unit flags the algebra unit, when present
  ScalarKind kind = ScalarKind::Rational;
  // table[i*dim+j] = product e_i * e_j as a degree-1 Vect.
  std::vector<Vect> table;

  int dim() const { return basis.size(); }

  const Vect& product(int i, int j) const { return table[i * dim() + j]; }

  bool has_unit() const { return basis.unit.has_value(); }
  int unit_index() const {
    if (!basis.unit) throw std::logic_error("algebra has no unit");
    return *basis.unit;
  }
  Vect unit() const {
    return Vect::word({unit_index()}, Scalar::one(kind));
  }
  Vect elem(int i) const { return Vect::word({i}, Scalar::one(kind)); }
  Vect zero() const { return Vect(1); }

  // Bilinear product of two degree-1 vectors.
  Vect mul(const Vect& x, const Vect& y) const {
    if (x.degree() != 1 || y.degree() != 1)
      throw std::invalid_argument("algebra mul expects degree-1 vectors");
    Vect r(1);
    for (const auto& [wx, cx] : x.terms())
      for (const auto& [wy, cy] : y.terms())
        r = r + product(wx[0], wy[0]).scaled(cx * cy);
    return r;
  }

  // Slotwise (componentwise) product of two degree-n vectors:
  // (x1...xn)(y1...yn) = (x1y1) (x) ... (x) (xnyn), extended bilinearly.
  Vect mul_tensor(const Vect& x, const Vect& y) const {
    if (x.degree() != y.degree())
      throw std::invalid_argument("tensor product degree mismatch");
    const int n = x.degree();
    Vect r(n);
    for (const auto& [wx, cx] : x.terms())
      for (const auto& [wy, cy] : y.terms()) {
        Vect acc = Vect::word({}, cx * cy);
        for (int s = 0; s < n; ++s) acc = tensor_product(acc, product(wx[s], wy[s]));
        r = r + acc;
      }
    return r;
  }

  // Throws if associativity or the unit axioms fail on some basis triple.
  void validate() const {
    const int n = dim();
    if (static_cast<int>(table.size()) != n * n)
      throw std::invalid_argument("structure-constant table has wrong size");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vect lhs = mul(product(i, j), elem(k));
          Vect rhs = mul(elem(i), product(j, k));
          if (lhs != rhs)
            throw std::logic_error("associativity fails at (" + basis.names[i] + "," +
                                   basis.names[j] + "," + basis.names[k] + ")");
        }
    if (has_unit()) {
      int u = unit_index();
      for (int i = 0; i < n; ++i)
        if (product(u, i) != elem(i) || product(i, u) != elem(i))
          throw std::logic_error("unit axiom fails at " + basis.names[i]);
    }
  }
};

// --- catalog ---------------------------------------------------------------

// Quaternions over the rationals: 1, i, j, k with ij=k, jk=i, ki=j, ii=-1.
inline StructAlgebra quaternions() {
  StructAlgebra a;
  a.basis = Basis{{"1", "i", "j", "k"}, 0};
  a.kind = ScalarKind::Rational;
  auto one = [](int s) { return Vect::word({s}, Scalar::rational(1)); };
  auto neg = [](int s) { return Vect::word({s}, Scalar::rational(-1)); };
  a.table = {
      one(0), one(1), one(2), one(3),   // 1*
      one(1), neg(0), one(3), neg(2),   // i*
      one(2), neg(3), neg(0), one(1),   // j*
      one(3), one(2), neg(1), neg(0),   // k*
  };
  a.validate();
  return a;
}

// M2 over the gaussian rationals in the basis {1, u0, u1, u2} with
// u0 = i*s2, u1 = i*s1, u2 = i*s3 (s* the standard self-adjoint involutions,
// ordered so that u_a u_{a+1} = u_{a+2} and u_a u_a = -1).  Same structure
// constants as the quaternions, but over Q(i), where it is isomorphic to the
// full 2x2 matrix algebra.
inline StructAlgebra m2_pauli() {
  StructAlgebra a = quaternions();
  a.basis = Basis{{"1", "u0", "u1", "u2"}, 0};
  a.kind = ScalarKind::GaussianRational;
  for (auto& v : a.table) {
    Vect g(1);
    for (const auto& [w, c] : v.terms())
      g.add_term(w, Scalar::gauss(c.as_rational(), 0));
    v = g;
  }
  a.validate();
  return a;
}

// Group algebra of Z_n over the rationals: g_i g_j = g_{i+j mod n}.
inline StructAlgebra group_algebra_zn(int n) {
  if (n < 1) throw std::invalid_argument("group algebra needs n >= 1");
  StructAlgebra a;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  a.basis = Basis{names, 0};
  a.kind = ScalarKind::Rational;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.table.push_back(Vect::word({(i + j) % n}, Scalar::rational(1)));
  a.validate();
  return a;
}

// The finite combinatorial shadow of a graph's vertex projections:
// P_u P_v = delta(u,v) P_u.  Non-unital as a based algebra (the unit would
// be the sum of all projections).
inline StructAlgebra ck_shadow(const WeightedDigraph& g) {
  StructAlgebra a;
  std::vector<std::string> names;
  for (const auto& v : g.vertices) names.push_back("P_" + v);
  a.basis = Basis{names, std::nullopt};
  a.kind = ScalarKind::Rational;
  const int n = a.basis.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.table.push_back(i == j ? Vect::word({i}, Scalar::rational(1)) : Vect(1));
  a.validate();
  return a;
}

// n mutually orthogonal idempotent pointers X_1..X_n (diagonal algebra).
inline StructAlgebra pointer_space(int n) {
  if (n < 1) throw std::invalid_argument("pointer space needs n >= 1");
  StructAlgebra a;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  a.basis = Basis{names, std::nullopt};
  a.kind = ScalarKind::Rational;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.table.push_back(i == j ? Vect::word({i}, Scalar::rational(1)) : Vect(1));
  a.validate();
  return a;
}

inline StructAlgebra algebra_catalog(const std::string& name) {
  if (name == "quaternions") return quaternions();
  if (name == "m2_pauli") return m2_pauli();
  if (name.rfind("group_algebra_z", 0) == 0)
    return group_algebra_zn(std::stoi(name.substr(15)));
  if (name.rfind("pointer_space_", 0) == 0)
    return pointer_space(std::stoi(name.substr(14)));
  throw std::invalid_argument("unknown algebra: " + name);
}

// Structure constants from JSON:
// { "basis": [...], "unit": "1"|null, "kind": "rational"|"gaussian-rational",
//   "table": [{"i": "a", "j": "b", "k": "c", "c": "p/q"}] }
inline StructAlgebra load_algebra(const nlohmann::json& doc) {
  StructAlgebra a;
  for (const auto& s : doc.at("basis")) a.basis.names.push_back(s.get<std::string>());
  if (doc.contains("unit") && !doc["unit"].is_null())
    a.basis.unit = a.basis.index_of(doc["unit"].get<std::string>());
  a.kind = doc.value("kind", std::string("rational")) == "gaussian-rational"
               ? ScalarKind::GaussianRational
               : ScalarKind::Rational;
  const int n = a.basis.size();
  a.table.assign(n * n, Vect(1));
  for (const auto& e : doc.at("table")) {
    int i = a.basis.index_of(e.at("i").get<std::string>());
    int j = a.basis.index_of(e.at("j").get<std::string>());
    int k = a.basis.index_of(e.at("k").get<std::string>());
    Scalar c = Scalar::rational(e.at("c").get<std::string>());
    if (a.kind == ScalarKind::GaussianRational)
      c = Scalar::gauss(c.as_rational(), 0);
    a.table[i * n + j].add_term({k}, c);
  }
  a.validate();
  return a;
}

// Solves u * x = 1 exactly; empty optional if u is not invertible.
inline std::optional<Vect> invert(const StructAlgebra& a, const Vect& u) {
  const int n = a.dim();
  // Left-multiplication matrix of u, columns indexed by x's coordinates.
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n + 1, Scalar::zero(a.kind)));
  for (int j = 0; j < n; ++j) {
    Vect col = a.mul(u, a.elem(j));
    for (const auto& [w, c] : col.terms()) m[w[0]][j] = c;
  }
  m[a.unit_index()][n] = Scalar::one(a.kind);
  // Gauss-Jordan on the augmented system.
  int row = 0;
  std::vector<int> pivot(n, -1);
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int r = row; r < n; ++r)
      if (!m[r][col].is_zero()) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(m[sel], m[row]);
    Scalar inv = Scalar::one(a.kind) / m[row][col];
    for (int c2 = 0; c2 <= n; ++c2) m[row][c2] = m[row][c2] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c2 = 0; c2 <= n; ++c2) m[r][c2] = m[r][c2] - f * m[row][c2];
    }
    pivot[col] = row;
    ++row;
  }
  Vect x(1);
  for (int col = 0; col < n; ++col)
    if (pivot[col] >= 0) x.add_term({col}, m[pivot[col]][n]);
  // Verify (handles singular systems uniformly).
  if (a.mul(u, x) != a.unit() || a.mul(x, u) != a.unit()) return std::nullopt;
  return x;
}

}  // namespace lcoalg
