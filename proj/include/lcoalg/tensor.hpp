#pragma once
// Free vector spaces over a symbolic basis, tensor words, and linear maps
// between tensor degrees.  Everything is exact unless a complex-double
// scalar kind is chosen explicitly.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcoalg/scalar.hpp"

namespace lcoalg {

// A finite ordered list of named basis symbols, optionally with a
// distinguished unit symbol.
struct Basis {
  std::vector<std::string> names;
  std::optional<int> unit;  // index of the unit symbol, if any

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    throw std::out_of_range("unknown basis symbol: " + name);
  }
  bool has(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
  }
};

// An ordered tuple of basis-symbol indices; degree 0 is the empty word,
// identified (explicitly, by callers) with the unit of the ground field.
using TensorWord = std::vector<int>;

inline std::string word_str(const TensorWord& w, const Basis& b) {
  if (w.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "(x)";
    s += b.names[w[i]];
  }
  return s;
}

// A finite linear combination of tensor words, all of one degree.
class Vect {
 public:
  explicit Vect(int degree = 0) : degree_(degree) {}

  static Vect word(TensorWord w, Scalar c) {
    Vect v(static_cast<int>(w.size()));
    v.add_term(std::move(w), std::move(c));
    return v;
  }
  static Vect basis_word(TensorWord w, ScalarKind k = ScalarKind::Rational) {
    return word(std::move(w), Scalar::one(k));
  }
  static Vect zero(int degree) { return Vect(degree); }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TensorWord, Scalar>& terms() const { return terms_; }

  void add_term(TensorWord w, Scalar c) {
    if (static_cast<int>(w.size()) != degree_)
      throw std::invalid_argument("tensor word degree mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coeff(const TensorWord& w, ScalarKind k = ScalarKind::Rational) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(k) : it->second;
  }

  Vect operator+(const Vect& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in +");
    Vect r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
  }
  Vect operator-(const Vect& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in -");
    Vect r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
  }
  Vect operator-() const {
    Vect r(degree_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  Vect scaled(const Scalar& s) const {
    Vect r(degree_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : terms_) {
      Scalar p = c * s;
      if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
    }
    return r;
  }
  bool operator==(const Vect& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const Vect& o) const { return !(*this == o); }

  std::string str(const Basis& b) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += c.str() + "*" + word_str(w, b);
    }
    return s;
  }

 private:
  int degree_;
  std::map<TensorWord, Scalar> terms_;
};

// Bilinear tensor product: degrees add, coefficients multiply.
inline Vect tensor_product(const Vect& v, const Vect& w) {
  Vect r(v.degree() + w.degree());
  for (const auto& [a, ca] : v.terms())
    for (const auto& [b, cb] : w.terms()) {
      TensorWord ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      r.add_term(std::move(ab), ca * cb);
    }
  return r;
}

// A linear map between tensor degrees, given by its action on basis words.
// Maps are represented functionally; table-backed maps throw "undefined on
// word" outside their declared action.
class LinMap {
 public:
  LinMap() : dom_(0), cod_(0) {}
  LinMap(int dom_degree, int cod_degree, std::function<Vect(const TensorWord&)> act)
      : dom_(dom_degree), cod_(cod_degree), act_(std::move(act)) {}

  static LinMap from_table(int dom_degree, int cod_degree,
                           std::map<TensorWord, Vect> table) {
    auto tbl = std::make_shared<std::map<TensorWord, Vect>>(std::move(table));
    for (const auto& [w, v] : *tbl) {
      if (static_cast<int>(w.size()) != dom_degree || v.degree() != cod_degree)
        throw std::invalid_argument("LinMap table degree mismatch");
    }
    return LinMap(dom_degree, cod_degree, [tbl, cod_degree](const TensorWord& w) {
      auto it = tbl->find(w);
      if (it == tbl->end())
        throw std::out_of_range("linear map undefined on word");
      return it->second;
    });
  }

  static LinMap identity(int degree) {
    return LinMap(degree, degree,
                  [](const TensorWord& w) { return Vect::basis_word(w); });
  }

  int dom_degree() const { return dom_; }
  int cod_degree() const { return cod_; }

  Vect on_word(const TensorWord& w) const {
    Vect out = act_(w);
    return out;
  }

  Vect apply(const Vect& v) const {
    if (v.degree() != dom_)
      throw std::invalid_argument("apply: vector degree != map domain degree");
    Vect r(cod_);
    for (const auto& [w, c] : v.terms()) {
      Vect img = act_(w);
      if (img.degree() != cod_)
        throw std::logic_error("LinMap action degree mismatch");
      r = r + img.scaled(c);
    }
    return r;
  }

  LinMap compose(const LinMap& inner) const {
    if (inner.cod_degree() != dom_)
      throw std::invalid_argument("compose: degrees do not chain");
    LinMap outer = *this;
    return LinMap(inner.dom_, cod_, [outer, inner](const TensorWord& w) {
      return outer.apply(inner.on_word(w));
    });
  }

  LinMap operator+(const LinMap& o) const {
    require_same_shape(o, "+");
    LinMap a = *this, b = o;
    return LinMap(dom_, cod_, [a, b](const TensorWord& w) {
      return a.on_word(w) + b.on_word(w);
    });
  }
  LinMap operator-(const LinMap& o) const {
    require_same_shape(o, "-");
    LinMap a = *this, b = o;
    return LinMap(dom_, cod_, [a, b](const TensorWord& w) {
      return a.on_word(w) - b.on_word(w);
    });
  }
  LinMap scaled(const Scalar& s) const {
    LinMap a = *this;
    return LinMap(dom_, cod_, [a, s](const TensorWord& w) {
      return a.on_word(w).scaled(s);
    });
  }

 private:
  void require_same_shape(const LinMap& o, const char* op) const {
    if (dom_ != o.dom_ || cod_ != o.cod_)
      throw std::invalid_argument(std::string("LinMap shape mismatch in ") + op);
  }
  int dom_, cod_;
  std::function<Vect(const TensorWord&)> act_;
};

// (f ⊗ g)(v ⊗ w) = f(v) ⊗ g(w); degrees add on both sides.
inline LinMap tensor_of_maps(const LinMap& f, const LinMap& g) {
  return LinMap(f.dom_degree() + g.dom_degree(), f.cod_degree() + g.cod_degree(),
                [f, g](const TensorWord& w) {
                  TensorWord left(w.begin(), w.begin() + f.dom_degree());
                  TensorWord right(w.begin() + f.dom_degree(), w.end());
                  return tensor_product(f.on_word(left), g.on_word(right));
                });
}

// The transposition map: (x1,...,xn) -> (xn,x1,...,x_{n-1}).
inline LinMap tau_cyclic(int n) {
  if (n < 2) throw std::invalid_argument("tau_cyclic requires degree >= 2");
  return LinMap(n, n, [](const TensorWord& w) {
    TensorWord r;
    r.reserve(w.size());
    r.push_back(w.back());
    r.insert(r.end(), w.begin(), w.end() - 1);
    return Vect::basis_word(r);
  });
}

// All degree-n words over a basis of the given size, in lexicographic
// index order.
inline std::vector<TensorWord> all_words(int basis_size, int degree) {
  std::vector<TensorWord> out;
  TensorWord w(degree, 0);
  if (degree == 0) {
    out.push_back({});
    return out;
  }
  for (;;) {
    out.push_back(w);
    int i = degree - 1;
    while (i >= 0 && w[i] == basis_size - 1) {
      w[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

// Exact kernel basis of f restricted to the span of the given domain words.
// Dense Gaussian elimination over the (exact) scalar field.
inline std::vector<Vect> kernel_basis(const LinMap& f,
                                      const std::vector<TensorWord>& domain_words,
                                      ScalarKind kind) {
  if (kind == ScalarKind::ComplexDouble)
    throw std::invalid_argument("kernel_basis requires an exact scalar kind");
  const int n = static_cast<int>(domain_words.size());

  // Collect the codomain words spanning the images.
  std::map<TensorWord, int> cod_index;
  std::vector<Vect> images;
  images.reserve(n);
  for (const auto& w : domain_words) {
    Vect img = f.on_word(w);
    for (const auto& [cw, c] : img.terms())
      cod_index.emplace(cw, static_cast<int>(cod_index.size()));
    images.push_back(std::move(img));
  }
  // Re-number codomain words densely (emplace above may have raced order).
  {
    int k = 0;
    for (auto& [w, idx] : cod_index) idx = k++;
  }
  const int m = static_cast<int>(cod_index.size());

  // Matrix rows = codomain words, columns = domain words.
  std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(n, Scalar::zero(kind)));
  for (int j = 0; j < n; ++j)
    for (const auto& [cw, c] : images[j].terms()) a[cod_index[cw]][j] = c;

  // Row-reduce; record pivot columns.
  std::vector<int> pivot_col_of_row;
  int row = 0;
  std::vector<bool> is_pivot(n, false);
  for (int col = 0; col < n && row < m; ++col) {
    int sel = -1;
    for (int r = row; r < m; ++r)
      if (!a[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[row]);
    Scalar inv = Scalar::one(kind) / a[row][col];
    for (int c = col; c < n; ++c) a[row][c] = a[row][c] * inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[row][c];
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }

  // Free columns give kernel vectors.
  std::vector<Vect> kernel;
  const int dom_degree = f.dom_degree();
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    Vect v(dom_degree);
    v.add_term(domain_words[col], Scalar::one(kind));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      const Scalar& entry = a[r][col];
      if (!entry.is_zero()) v.add_term(domain_words[pivot_col_of_row[r]], -entry);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Convenience overload: the full degree-dom word basis over basis_size symbols.
inline std::vector<Vect> kernel_basis(const LinMap& f, int basis_size,
                                      ScalarKind kind = ScalarKind::Rational) {
  return kernel_basis(f, all_words(basis_size, f.dom_degree()), kind);
}

// Do two maps agree on every degree-dom word over a basis of this size?
inline bool maps_equal(const LinMap& f, const LinMap& g, int basis_size) {
  if (f.dom_degree() != g.dom_degree() || f.cod_degree() != g.cod_degree())
    return false;
  for (const auto& w : all_words(basis_size, f.dom_degree()))
    if (f.on_word(w) != g.on_word(w)) return false;
  return true;
}

}  // namespace lcoalg
