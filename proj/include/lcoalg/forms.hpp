#pragma once
// Formal curvature forms over a unital algebra A: linear combinations of
// words  a0 w(a1,a2) ... w(a_{2k-1},a_{2k}) a_{2k+1}  with an uninterpreted
// binary slot symbol w, the concatenation product *, its differential d, the
// induced dialgebra (left/right products), dendriform conversions, the
// Leibnitz bracket, and a trace obtained by evaluating the slots with the
// curvature of an Ito map.

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcoalg/algebra.hpp"
#include "lcoalg/ito.hpp"

namespace lcoalg {

// --- words and forms ---------------------------------------------------------
//
// A form word is stored as its letter sequence:
//   degree 0       -> {a}                       (a plain algebra element)
//   degree k >= 1  -> {a0, a1, ..., a_{2k}, a_{2k+1}}   (2k+2 letters)
// so the slot pairs are (letters[1],letters[2]), ..., (letters[2k-1],letters[2k]).
// Words are normalized: a slot (a, unit) is rewritten to (unit, a), and any
// word containing a slot (unit, unit) is zero.  Both rewrites are forced by
// the defining relations w(a,I) = w(I,a) and w(I,I) = 0 of the slot symbol,
// which also make the product and differential below consistent.

using FormWord = std::vector<int>;

inline int form_word_degree(const FormWord& w) {
  if (w.size() == 1) return 0;
  return (static_cast<int>(w.size()) - 2) / 2;
}

inline std::string form_word_str(const FormWord& w, const Basis& b) {
  if (w.size() == 1) return b.names[w[0]];
  std::string s = b.names[w[0]];
  for (size_t i = 1; i + 1 < w.size(); i += 2)
    s += " w(" + b.names[w[i]] + "," + b.names[w[i + 1]] + ")";
  s += " " + b.names[w.back()];
  return s;
}

class Form {
 public:
  explicit Form(ScalarKind kind = ScalarKind::Rational) : kind_(kind) {}

  ScalarKind kind() const { return kind_; }
  const std::map<FormWord, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FormWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Form operator+(const Form& o) const {
    Form r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
  }
  Form operator-(const Form& o) const {
    Form r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, Scalar::zero(kind_) - c);
    return r;
  }
  Form scaled(const Scalar& s) const {
    Form r(kind_);
    for (const auto& [w, c] : terms_) r.add_term(w, c * s);
    return r;
  }
  bool operator==(const Form& o) const { return terms_ == o.terms_; }
  bool operator!=(const Form& o) const { return !(*this == o); }

  // True when every word has degree >= 1.
  bool min_degree_positive() const {
    for (const auto& [w, c] : terms_)
      if (form_word_degree(w) == 0) return false;
    return true;
  }
  // True when the form is a scalar multiple of the degree-0 unit word.
  bool is_unit_multiple(int unit_index) const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == FormWord{unit_index};
  }

  std::string str(const Basis& b) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*[" + form_word_str(w, b) + "]";
    }
    return s;
  }

 private:
  ScalarKind kind_;
  std::map<FormWord, Scalar> terms_;
};

// Normalizes a letter sequence; returns false when the word is zero because
// some slot degenerates to (unit, unit).
inline bool normalize_form_word(const StructAlgebra& alg, FormWord& w) {
  if (w.size() == 1) return true;
  if (w.size() < 4 || w.size() % 2 != 0)
    throw std::invalid_argument("malformed form word");
  const int u = alg.unit_index();
  for (size_t i = 1; i + 1 < w.size(); i += 2) {
    if (w[i] == u && w[i + 1] == u) return false;
    if (w[i + 1] == u) std::swap(w[i], w[i + 1]);
  }
  return true;
}

inline Form form_word(const StructAlgebra& alg, FormWord letters,
                      Scalar coeff) {
  Form r(alg.kind);
  if (normalize_form_word(alg, letters)) r.add_term(letters, coeff);
  return r;
}
inline Form form_word(const StructAlgebra& alg, FormWord letters) {
  return form_word(alg, std::move(letters), Scalar::one(alg.kind));
}
inline Form form_zero(const StructAlgebra& alg) { return Form(alg.kind); }
inline Form form_element(const StructAlgebra& alg, int i) {
  return form_word(alg, {i});
}
inline Form form_unit(const StructAlgebra& alg) {
  return form_element(alg, alg.unit_index());
}

// --- the concatenation product ----------------------------------------------

// Word-level product.  For words of degree >= 1 the product is letter
// concatenation: the old tail and the incoming head become a new slot pair,
// so the degree is deg x + deg y + 1.  The unit word acts through the letter
// pair (unit, unit); two degree-0 words multiply only when one of them is the
// unit, in which case the result is the single-slot word I w(I,a) I.
inline Form form_word_star(const StructAlgebra& alg, const FormWord& x,
                           const FormWord& y, const Scalar& coeff) {
  const int u = alg.unit_index();
  const bool x0 = x.size() == 1, y0 = y.size() == 1;
  if (x0 && x[0] != u && !(y0 && y[0] == u))
    throw std::invalid_argument(
        "undefined product: degree-0 non-unit left operand");
  if (y0 && y[0] != u && !(x0 && x[0] == u))
    throw std::invalid_argument(
        "undefined product: degree-0 non-unit right operand");
  FormWord letters;
  if (x0 && y0) {
    // One operand is the unit; the result is I w(I,a) I either way.
    const int a = x[0] == u ? y[0] : x[0];
    letters = {u, u, a, u};
  } else {
    if (x0)
      letters = {u, u};
    else
      letters = x;
    if (y0) {
      letters.push_back(u);
      letters.push_back(u);
    } else
      letters.insert(letters.end(), y.begin(), y.end());
  }
  return form_word(alg, std::move(letters), coeff);
}

inline Form form_star(const StructAlgebra& alg, const Form& x, const Form& y) {
  Form r(alg.kind);
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms())
      r = r + form_word_star(alg, wx, wy, cx * cy);
  return r;
}

// --- the differential ---------------------------------------------------------

// d(a) = I * a for plain elements (so d(I) = 0), and for degree-k words
// d(w) = I * w + (-1)^k w * I.
inline Form form_d(const StructAlgebra& alg, const Form& x) {
  const Scalar one = Scalar::one(alg.kind);
  const Scalar neg = Scalar::integer(-1, alg.kind);
  Form unit = form_unit(alg);
  Form r(alg.kind);
  for (const auto& [w, c] : x.terms()) {
    Form word(alg.kind);
    word.add_term(w, c);
    const int k = form_word_degree(w);
    r = r + form_star(alg, unit, word);
    if (k >= 1)
      r = r + form_star(alg, word, unit).scaled(k % 2 == 0 ? one : neg);
  }
  return r;
}

// --- dialgebra products --------------------------------------------------------

// x -| y := -x * d(y)
inline Form dialgebra_left(const StructAlgebra& alg, const Form& x,
                           const Form& y) {
  return form_star(alg, x, form_d(alg, y)).scaled(Scalar::integer(-1, alg.kind));
}

// x |- y := (-1)^{deg x + 1} d(x) * y, extended from homogeneous x.
inline Form dialgebra_right(const StructAlgebra& alg, const Form& x,
                            const Form& y) {
  Form r(alg.kind);
  for (const auto& [w, c] : x.terms()) {
    Form word(alg.kind);
    word.add_term(w, c);
    const int sign = (form_word_degree(w) + 1) % 2 == 0 ? 1 : -1;
    r = r + form_star(alg, form_d(alg, word), y)
                .scaled(Scalar::integer(sign, alg.kind));
  }
  return r;
}

// [x,y]_L = x -| y - y |- x
inline Form leibnitz_bracket(const StructAlgebra& alg, const Form& x,
                             const Form& y) {
  return dialgebra_left(alg, x, y) - dialgebra_right(alg, y, x);
}

// --- law reports on forms -------------------------------------------------------

// Product and differential laws on explicit sample triples (all words are
// expected to have degree >= 1, or be the unit).
inline AxiomReport form_laws_report(const StructAlgebra& alg,
                                    const std::vector<Form>& samples) {
  AxiomReport rep;
  auto check_pairs = [&](const std::string& name,
                         const std::function<bool(const Form&, const Form&,
                                                  std::string*)>& p) {
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < samples.size() && ok; ++i)
      for (size_t j = 0; j < samples.size() && ok; ++j)
        ok = p(samples[i], samples[j], &witness);
    rep.add(name, ok, witness);
  };

  {  // associativity of * on consecutive triples
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < samples.size() && ok; ++i)
      for (size_t j = 0; j < samples.size() && ok; ++j)
        for (size_t k = 0; k < samples.size() && ok; ++k) {
          const Form &x = samples[i], &y = samples[j], &z = samples[k];
          Form lhs = form_star(alg, form_star(alg, x, y), z);
          Form rhs = form_star(alg, x, form_star(alg, y, z));
          if (lhs != rhs) {
            ok = false;
            witness = "at triple (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")";
          }
        }
    rep.add("star-associative", ok, witness);
  }

  {  // d^2 = 0
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < samples.size() && ok; ++i) {
      Form dd = form_d(alg, form_d(alg, samples[i]));
      if (!dd.is_zero()) {
        ok = false;
        witness = "at sample " + std::to_string(i) + ": " + dd.str(alg.basis);
      }
    }
    rep.add("differential-squares-to-zero", ok, witness);
  }

  // Graded product rule, in the two sign conventions.  Only the first one
  // holds on the formal words; the second is recorded for reference.
  auto graded = [&](int sign_flip) {
    return [&, sign_flip](const Form& x, const Form& y,
                          std::string* witness) -> bool {
      Form lhs = form_d(alg, form_star(alg, x, y));
      Form rhs = form_star(alg, form_d(alg, x), y);
      for (const auto& [w, c] : x.terms()) {
        Form word(alg.kind);
        word.add_term(w, c);
        int s = (form_word_degree(w) + sign_flip) % 2 == 0 ? 1 : -1;
        rhs = rhs + form_star(alg, word, form_d(alg, y))
                        .scaled(Scalar::integer(s, alg.kind));
      }
      if (lhs != rhs) {
        *witness = "lhs " + lhs.str(alg.basis) + " vs rhs " + rhs.str(alg.basis);
        return false;
      }
      return true;
    };
  };
  check_pairs("differential-product-rule", graded(1));
  check_pairs("differential-product-rule-opposite-sign", graded(0));

  return rep;
}

// Dialgebra axioms, nilpotency, d-relations and grading on sample triples.
inline AxiomReport dialgebra_report(const StructAlgebra& alg,
                                    const std::vector<Form>& samples) {
  AxiomReport rep;
  auto ld = [&](const Form& a, const Form& b) { return dialgebra_left(alg, a, b); };
  auto rd = [&](const Form& a, const Form& b) { return dialgebra_right(alg, a, b); };

  struct Law {
    std::string name;
    std::function<bool(const Form&, const Form&, const Form&)> holds;
  };
  std::vector<Law> laws = {
      {"left-product-associative",
       [&](const Form& x, const Form& y, const Form& z) {
         return ld(ld(x, y), z) == ld(x, ld(y, z));
       }},
      {"right-product-associative",
       [&](const Form& x, const Form& y, const Form& z) {
         return rd(rd(x, y), z) == rd(x, rd(y, z));
       }},
      {"dialgebra-axiom-1",
       [&](const Form& x, const Form& y, const Form& z) {
         return ld(x, ld(y, z)) == ld(x, rd(y, z));
       }},
      {"dialgebra-axiom-2",
       [&](const Form& x, const Form& y, const Form& z) {
         return ld(rd(x, y), z) == rd(x, ld(y, z));
       }},
      {"dialgebra-axiom-3",
       [&](const Form& x, const Form& y, const Form& z) {
         return rd(ld(x, y), z) == rd(rd(x, y), z);
       }},
      {"dialgebra-nilpotency",
       [&](const Form& b, const Form& x, const Form& y) {
         return ld(b, rd(x, y) - ld(x, y)).is_zero();
       }},
  };
  for (const auto& law : laws) {
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < samples.size() && ok; ++i)
      for (size_t j = 0; j < samples.size() && ok; ++j)
        for (size_t k = 0; k < samples.size() && ok; ++k)
          if (!law.holds(samples[i], samples[j], samples[k])) {
            ok = false;
            witness = "at triple (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")";
            break;
          }
    rep.add(law.name, ok, witness);
  }

  {  // d(x -| y) = -dx * dy = d(x |- y), and the Z2 grading of both products
    bool ok_d = true, ok_g = true;
    std::string wd, wg;
    for (size_t i = 0; i < samples.size() && (ok_d || ok_g); ++i)
      for (size_t j = 0; j < samples.size(); ++j) {
        const Form &x = samples[i], &y = samples[j];
        Form mdd = form_star(alg, form_d(alg, x), form_d(alg, y))
                       .scaled(Scalar::integer(-1, alg.kind));
        if (ok_d && (form_d(alg, ld(x, y)) != mdd || form_d(alg, rd(x, y)) != mdd)) {
          ok_d = false;
          wd = "at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        if (ok_g) {
          Form p = ld(x, y);
          for (const auto& [w, c] : p.terms())
            for (const auto& [wx, cx] : x.terms())
              for (const auto& [wy, cy] : y.terms())
                if ((form_word_degree(w) - form_word_degree(wx) -
                     form_word_degree(wy)) %
                        2 !=
                    0) {
                  ok_g = false;
                  wg = "parity mismatch at pair (" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
                }
        }
      }
    rep.add("d-relations", ok_d, wd);
    rep.add("z2-grading-respected", ok_g, wg);
  }
  return rep;
}

// Leibnitz identity, the three product-bracket expansions, and the closed
// form of the bracket, on sample triples.
inline AxiomReport leibnitz_report(const StructAlgebra& alg,
                                   const std::vector<Form>& samples) {
  AxiomReport rep;
  auto br = [&](const Form& a, const Form& b) {
    return leibnitz_bracket(alg, a, b);
  };
  auto ld = [&](const Form& a, const Form& b) { return dialgebra_left(alg, a, b); };
  auto rd = [&](const Form& a, const Form& b) { return dialgebra_right(alg, a, b); };

  struct Law {
    std::string name;
    std::function<bool(const Form&, const Form&, const Form&)> holds;
  };
  std::vector<Law> laws = {
      {"leibnitz-identity",
       [&](const Form& x, const Form& y, const Form& z) {
         return br(br(x, y), z) == br(br(x, z), y) + br(x, br(y, z));
       }},
      {"bracket-of-left-product",
       [&](const Form& x, const Form& y, const Form& z) {
         Form lhs = br(x, ld(y, z));
         return lhs == rd(y, br(x, z)) + ld(br(x, y), z) &&
                lhs == br(x, rd(y, z));
       }},
      {"left-product-of-bracket",
       [&](const Form& x, const Form& y, const Form& z) {
         return br(ld(x, y), z) == ld(x, br(y, z)) + ld(br(x, z), y);
       }},
      {"right-product-of-bracket",
       [&](const Form& x, const Form& y, const Form& z) {
         return br(rd(x, y), z) == rd(x, br(y, z)) + rd(br(x, z), y);
       }},
  };
  for (const auto& law : laws) {
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < samples.size() && ok; ++i)
      for (size_t j = 0; j < samples.size() && ok; ++j)
        for (size_t k = 0; k < samples.size() && ok; ++k)
          if (!law.holds(samples[i], samples[j], samples[k])) {
            ok = false;
            witness = "at triple (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")";
            break;
          }
    rep.add(law.name, ok, witness);
  }

  {  // [x,y]_L = (-1)^{deg y} d(y) * x - x * d(y)
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < samples.size() && ok; ++i)
      for (size_t j = 0; j < samples.size() && ok; ++j) {
        const Form &x = samples[i], &y = samples[j];
        Form rhs = form_star(alg, x, form_d(alg, y))
                       .scaled(Scalar::integer(-1, alg.kind));
        for (const auto& [w, c] : y.terms()) {
          Form word(alg.kind);
          word.add_term(w, c);
          int s = form_word_degree(w) % 2 == 0 ? 1 : -1;
          rhs = rhs + form_star(alg, form_d(alg, word), x)
                          .scaled(Scalar::integer(s, alg.kind));
        }
        if (br(x, y) != rhs) {
          ok = false;
          witness = "at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    rep.add("bracket-closed-form", ok, witness);
  }
  return rep;
}

// --- bilinear operation tables and dendriform conversion ------------------------

// A bilinear binary operation on a finite-dimensional space, by structure
// constants: table[i*dim+j] = e_i op e_j as a degree-1 vector.
struct BilinearOpTable {
  std::string label;
  ScalarKind kind = ScalarKind::Rational;
  int dim = 0;
  std::vector<Vect> table;

  const Vect& on_basis(int i, int j) const { return table[i * dim + j]; }
  Vect apply(const Vect& x, const Vect& y) const {
    Vect r(1);
    for (const auto& [wx, cx] : x.terms())
      for (const auto& [wy, cy] : y.terms())
        r = r + on_basis(wx[0], wy[0]).scaled(cx * cy);
    return r;
  }
  BilinearOpTable renamed(std::string l) const {
    BilinearOpTable t = *this;
    t.label = std::move(l);
    return t;
  }
};

inline BilinearOpTable table_zero(std::string label, ScalarKind kind, int dim) {
  BilinearOpTable t{std::move(label), kind, dim, {}};
  t.table.assign(dim * dim, Vect(1));
  return t;
}
inline BilinearOpTable table_add(const BilinearOpTable& a,
                                 const BilinearOpTable& b, std::string label) {
  BilinearOpTable t = a;
  t.label = std::move(label);
  for (int i = 0; i < a.dim * a.dim; ++i) t.table[i] = a.table[i] + b.table[i];
  return t;
}
inline BilinearOpTable table_sub(const BilinearOpTable& a,
                                 const BilinearOpTable& b, std::string label) {
  BilinearOpTable t = a;
  t.label = std::move(label);
  for (int i = 0; i < a.dim * a.dim; ++i) t.table[i] = a.table[i] - b.table[i];
  return t;
}
inline bool tables_equal(const BilinearOpTable& a, const BilinearOpTable& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim * a.dim; ++i)
    if (a.table[i] != b.table[i]) return false;
  return true;
}

// The associative product of an algebra as both products of a dialgebra.
inline std::pair<BilinearOpTable, BilinearOpTable> trivial_dialgebra(
    const StructAlgebra& alg) {
  BilinearOpTable t{"left", alg.kind, alg.dim(), alg.table};
  return {t, t.renamed("right")};
}

namespace detail {
// Checks a trilinear identity on all basis triples; returns the offending
// triple in `witness`.
inline bool table_identity(
    int dim, const std::function<Vect(int, int, int)>& lhs,
    const std::function<Vect(int, int, int)>& rhs, std::string* witness) {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (lhs(i, j, k) != rhs(i, j, k)) {
          if (witness)
            *witness = "at basis triple (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")";
          return false;
        }
  return true;
}
inline Vect elem(ScalarKind kind, int i) {
  return Vect::word({i}, Scalar::one(kind));
}
}  // namespace detail

inline AxiomReport dialgebra_table_axioms(const BilinearOpTable& ld,
                                          const BilinearOpTable& rd,
                                          bool need_axiom1, bool need_axiom3) {
  AxiomReport rep;
  const int n = ld.dim;
  auto e = [&](int i) { return detail::elem(ld.kind, i); };
  std::string w;
  auto add = [&](const std::string& name, bool ok) { rep.add(name, ok, w); };
  add("left-associative",
      detail::table_identity(
          n, [&](int i, int j, int k) { return ld.apply(ld.on_basis(i, j), e(k)); },
          [&](int i, int j, int k) { return ld.apply(e(i), ld.on_basis(j, k)); },
          &w));
  add("right-associative",
      detail::table_identity(
          n, [&](int i, int j, int k) { return rd.apply(rd.on_basis(i, j), e(k)); },
          [&](int i, int j, int k) { return rd.apply(e(i), rd.on_basis(j, k)); },
          &w));
  if (need_axiom1)
    add("dialgebra-axiom-1",
        detail::table_identity(
            n,
            [&](int i, int j, int k) { return ld.apply(e(i), ld.on_basis(j, k)); },
            [&](int i, int j, int k) { return ld.apply(e(i), rd.on_basis(j, k)); },
            &w));
  add("dialgebra-axiom-2",
      detail::table_identity(
          n, [&](int i, int j, int k) { return ld.apply(rd.on_basis(i, j), e(k)); },
          [&](int i, int j, int k) { return rd.apply(e(i), ld.on_basis(j, k)); },
          &w));
  if (need_axiom3)
    add("dialgebra-axiom-3",
        detail::table_identity(
            n,
            [&](int i, int j, int k) { return rd.apply(ld.on_basis(i, j), e(k)); },
            [&](int i, int j, int k) { return rd.apply(rd.on_basis(i, j), e(k)); },
            &w));
  return rep;
}

inline AxiomReport dendriform_table_axioms(const BilinearOpTable& prec,
                                           const BilinearOpTable& succ) {
  AxiomReport rep;
  const int n = prec.dim;
  auto e = [&](int i) { return detail::elem(prec.kind, i); };
  std::string w;
  rep.add("dendriform-axiom-1",
          detail::table_identity(
              n,
              [&](int i, int j, int k) {
                return prec.apply(prec.on_basis(i, j), e(k));
              },
              [&](int i, int j, int k) {
                return prec.apply(e(i), prec.on_basis(j, k)) +
                       prec.apply(e(i), succ.on_basis(j, k));
              },
              &w),
          w);
  rep.add("dendriform-axiom-2",
          detail::table_identity(
              n,
              [&](int i, int j, int k) {
                return prec.apply(succ.on_basis(i, j), e(k));
              },
              [&](int i, int j, int k) {
                return succ.apply(e(i), prec.on_basis(j, k));
              },
              &w),
          w);
  rep.add("dendriform-axiom-3",
          detail::table_identity(
              n,
              [&](int i, int j, int k) {
                return succ.apply(prec.on_basis(i, j), e(k)) +
                       succ.apply(succ.on_basis(i, j), e(k));
              },
              [&](int i, int j, int k) {
                return succ.apply(e(i), succ.on_basis(j, k));
              },
              &w),
          w);
  {  // a*b := a<b + a>b is associative
    BilinearOpTable star = table_add(prec, succ, "star");
    rep.add("sum-product-associative",
            detail::table_identity(
                n,
                [&](int i, int j, int k) {
                  return star.apply(star.on_basis(i, j), e(k));
                },
                [&](int i, int j, int k) {
                  return star.apply(e(i), star.on_basis(j, k));
                },
                &w),
            w);
  }
  return rep;
}

enum class ConvertKind {
  TypeI,                      // pre-dialgebra of type I  -> dendriform
  TypeIII,                    // pre-dialgebra of type III -> dendriform
  FromDendriformAssocLeft,    // dendriform with < associative -> type I
  FromDendriformAssocRight,   // dendriform with > associative -> type III
};

struct ConvertResult {
  BilinearOpTable first;   // < (or -|)
  BilinearOpTable second;  // > (or |-)
  AxiomReport input_axioms;
  AxiomReport output_axioms;
};

// Converts between pre-dialgebra and dendriform presentations of a bilinear
// operation pair.  Input axioms for the claimed kind are verified first; a
// failure throws with the axiom name and the offending basis triple.
inline ConvertResult dendriform_convert(const BilinearOpTable& a,
                                        const BilinearOpTable& b,
                                        ConvertKind kind) {
  ConvertResult out;
  switch (kind) {
    case ConvertKind::TypeI:
      out.input_axioms = dialgebra_table_axioms(a, b, true, false);
      break;
    case ConvertKind::TypeIII:
      out.input_axioms = dialgebra_table_axioms(a, b, false, true);
      break;
    case ConvertKind::FromDendriformAssocLeft:
    case ConvertKind::FromDendriformAssocRight:
      out.input_axioms = dendriform_table_axioms(a, b);
      break;
  }
  for (const auto& c : out.input_axioms.checks)
    if (!c.ok)
      throw std::invalid_argument("input axiom failed: " + c.name + " " +
                                  c.witness);
  switch (kind) {
    case ConvertKind::TypeI:
      // < := -|,  > := |- minus -|
      out.first = a.renamed("prec");
      out.second = table_sub(b, a, "succ");
      out.output_axioms = dendriform_table_axioms(out.first, out.second);
      break;
    case ConvertKind::TypeIII:
      // > := |-,  < := -| minus |-
      out.first = table_sub(a, b, "prec");
      out.second = b.renamed("succ");
      out.output_axioms = dendriform_table_axioms(out.first, out.second);
      break;
    case ConvertKind::FromDendriformAssocLeft:
      // -| := <,  |- := < + >
      out.first = a.renamed("left");
      out.second = table_add(a, b, "right");
      out.output_axioms =
          dialgebra_table_axioms(out.first, out.second, true, false);
      break;
    case ConvertKind::FromDendriformAssocRight:
      // |- := >,  -| := < + >
      out.first = table_add(a, b, "left");
      out.second = b.renamed("right");
      out.output_axioms =
          dialgebra_table_axioms(out.first, out.second, false, true);
      break;
  }
  return out;
}

// Dendriform operations carried by the forms dialgebra itself.
inline Form form_dendriform_prec(const StructAlgebra& alg, const Form& x,
                                 const Form& y, ConvertKind kind) {
  if (kind == ConvertKind::TypeI) return dialgebra_left(alg, x, y);
  if (kind == ConvertKind::TypeIII)
    return dialgebra_left(alg, x, y) - dialgebra_right(alg, x, y);
  throw std::invalid_argument("forms conversion expects TypeI or TypeIII");
}
inline Form form_dendriform_succ(const StructAlgebra& alg, const Form& x,
                                 const Form& y, ConvertKind kind) {
  if (kind == ConvertKind::TypeI)
    return dialgebra_right(alg, x, y) - dialgebra_left(alg, x, y);
  if (kind == ConvertKind::TypeIII) return dialgebra_right(alg, x, y);
  throw std::invalid_argument("forms conversion expects TypeI or TypeIII");
}

inline AxiomReport dendriform_forms_report(const StructAlgebra& alg,
                                           const std::vector<Form>& samples,
                                           ConvertKind kind) {
  AxiomReport rep;
  auto pr = [&](const Form& a, const Form& b) {
    return form_dendriform_prec(alg, a, b, kind);
  };
  auto su = [&](const Form& a, const Form& b) {
    return form_dendriform_succ(alg, a, b, kind);
  };
  struct Law {
    std::string name;
    std::function<bool(const Form&, const Form&, const Form&)> holds;
  };
  std::vector<Law> laws = {
      {"dendriform-axiom-1",
       [&](const Form& x, const Form& y, const Form& z) {
         return pr(pr(x, y), z) == pr(x, pr(y, z)) + pr(x, su(y, z));
       }},
      {"dendriform-axiom-2",
       [&](const Form& x, const Form& y, const Form& z) {
         return pr(su(x, y), z) == su(x, pr(y, z));
       }},
      {"dendriform-axiom-3",
       [&](const Form& x, const Form& y, const Form& z) {
         return su(pr(x, y), z) + su(su(x, y), z) == su(x, su(y, z));
       }},
      {"sum-product-associative",
       [&](const Form& x, const Form& y, const Form& z) {
         auto s = [&](const Form& a, const Form& b) {
           return pr(a, b) + su(a, b);
         };
         return s(s(x, y), z) == s(x, s(y, z));
       }},
  };
  for (const auto& law : laws) {
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < samples.size() && ok; ++i)
      for (size_t j = 0; j < samples.size() && ok; ++j)
        for (size_t k = 0; k < samples.size() && ok; ++k)
          if (!law.holds(samples[i], samples[j], samples[k])) {
            ok = false;
            witness = "at triple (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")";
            break;
          }
    rep.add(law.name, ok, witness);
  }
  return rep;
}

// --- evaluation and the trace ----------------------------------------------------

// Evaluates a form in A by interpreting every slot with the given arity-2
// cochain (normally the curvature of an Ito map).
inline Vect form_eval(const StructAlgebra& alg, const Cochain& omega,
                      const Form& x) {
  Vect r(1);
  for (const auto& [w, c] : x.terms()) {
    Vect acc = alg.elem(w[0]);
    for (size_t i = 1; i + 1 < w.size(); i += 2)
      acc = alg.mul(acc, omega.on_basis({w[i], w[i + 1]}));
    if (w.size() > 1) acc = alg.mul(acc, alg.elem(w.back()));
    r = r + acc.scaled(c);
  }
  return r;
}

// A linear functional on A given by its values on the basis.
inline Scalar sigma_apply(const std::vector<Scalar>& sigma, const Vect& v,
                          ScalarKind kind) {
  Scalar r = Scalar::zero(kind);
  for (const auto& [w, c] : v.terms()) r = r + sigma[w[0]] * c;
  return r;
}

// sigma vanishes on all commutators of A.
inline bool sigma_is_trace(const StructAlgebra& alg,
                           const std::vector<Scalar>& sigma,
                           std::string* witness = nullptr) {
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      Scalar s = sigma_apply(sigma, alg.product(i, j) - alg.product(j, i),
                             alg.kind);
      if (!s.is_zero()) {
        if (witness)
          *witness = "sigma([" + alg.basis.names[i] + "," +
                     alg.basis.names[j] + "]) = " + s.str();
        return false;
      }
    }
  return true;
}

// The cyclic functional on a pure slot word I w(l1,l2)...w(l_{2n-1},l_{2n}) I:
// n * sigma(eval(word) - eval(word with letters rotated by one)).
inline Scalar sigma_natural_word(const StructAlgebra& alg, const Cochain& omega,
                                 const std::vector<Scalar>& sigma,
                                 const FormWord& w) {
  const int u = alg.unit_index();
  if (w.size() == 1 || w.front() != u || w.back() != u)
    throw std::invalid_argument(
        "cyclic functional expects a slot word with unit head and tail");
  std::vector<int> letters(w.begin() + 1, w.end() - 1);
  const int n = static_cast<int>(letters.size()) / 2;
  auto eval_slots = [&](const std::vector<int>& ls) {
    Vect acc = alg.unit();
    for (int i = 0; i < n; ++i)
      acc = alg.mul(acc, omega.on_basis({ls[2 * i], ls[2 * i + 1]}));
    return acc;
  };
  std::vector<int> rotated(letters.size());
  rotated[0] = letters.back();
  for (size_t i = 1; i < letters.size(); ++i) rotated[i] = letters[i - 1];
  Scalar diff = sigma_apply(sigma, eval_slots(letters) - eval_slots(rotated),
                            alg.kind);
  return Scalar::integer(n, alg.kind) * diff;
}

// Tr(x) = sigma_natural(d(x) * I), slots evaluated with the curvature of rho.
inline Scalar trace_Tr(const StructAlgebra& alg, const LinMap& rho,
                       const std::vector<Scalar>& sigma, const Form& x) {
  std::string witness;
  if (!sigma_is_trace(alg, sigma, &witness))
    throw std::invalid_argument("sigma is not a trace: " + witness);
  Classification cls = classify_map(rho, alg);
  if (cls.cls != MapClass::ItoDerivative)
    throw std::invalid_argument("trace requires an Ito map, got " +
                                map_class_name(cls.cls));
  Cochain omega = curvature(alg, rho);
  Form dxi = form_star(alg, form_d(alg, x), form_unit(alg));
  Scalar r = Scalar::zero(alg.kind);
  for (const auto& [w, c] : dxi.terms())
    r = r + c * sigma_natural_word(alg, omega, sigma, w);
  return r;
}

// Trace laws on sample pairs: Tr(dx) = 0, Tr(x -| y) = Tr(y -| x), and
// Tr([x,y]_L) = 0.
inline AxiomReport trace_report(const StructAlgebra& alg, const LinMap& rho,
                                const std::vector<Scalar>& sigma,
                                const std::vector<Form>& samples) {
  AxiomReport rep;
  std::string witness;
  bool trace_ok = sigma_is_trace(alg, sigma, &witness);
  rep.add("sigma-is-trace", trace_ok, witness);
  Classification cls = classify_map(rho, alg);
  rep.add("map-is-ito", cls.cls == MapClass::ItoDerivative,
          map_class_name(cls.cls));
  if (!trace_ok || cls.cls != MapClass::ItoDerivative) return rep;

  auto tr = [&](const Form& f) { return trace_Tr(alg, rho, sigma, f); };
  bool ok_d = true, ok_sym = true, ok_br = true;
  std::string wd, wsym, wbr;
  for (size_t i = 0; i < samples.size(); ++i) {
    Scalar t = tr(form_d(alg, samples[i]));
    if (ok_d && !t.is_zero()) {
      ok_d = false;
      wd = "Tr(d sample" + std::to_string(i) + ") = " + t.str();
    }
    for (size_t j = 0; j < samples.size(); ++j) {
      const Form &x = samples[i], &y = samples[j];
      Scalar s = tr(dialgebra_left(alg, x, y)) - tr(dialgebra_left(alg, y, x));
      if (ok_sym && !s.is_zero()) {
        ok_sym = false;
        wsym = "at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      Scalar b = tr(leibnitz_bracket(alg, x, y));
      if (ok_br && !b.is_zero()) {
        ok_br = false;
        wbr = "at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  }
  rep.add("trace-of-differential-vanishes", ok_d, wd);
  rep.add("trace-left-product-symmetric", ok_sym, wsym);
  rep.add("trace-kills-leibnitz-bracket", ok_br, wbr);
  return rep;
}

}  // namespace lcoalg
