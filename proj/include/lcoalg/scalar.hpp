#pragma once
// Exact and floating scalar arithmetic for the coalgebra kernels.
//
// A Scalar is one of three kinds:
//   - Rational          : exact rational number (GMP mpq)
//   - GaussianRational  : a + b*i with a, b exact rationals
//   - ComplexDouble     : IEEE double complex, only used by the CP-map code
//
// Arithmetic stays within one kind; mixing two kinds is a programming error
// and throws.  Exact kinds compare structurally; ComplexDouble comparisons
// are left to callers (use tolerances there).

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace lcoalg {

struct ScalarKindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScalarKind { Rational, GaussianRational, ComplexDouble };

inline const char* kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::Rational: return "rational";
    case ScalarKind::GaussianRational: return "gaussian-rational";
    case ScalarKind::ComplexDouble: return "complex-double";
  }
  return "?";
}

// a + b*i with exact rational parts.
struct GaussQ {
  mpq_class re, im;
  GaussQ() : re(0), im(0) {}
  GaussQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
  GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
  GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
  GaussQ operator-() const { return {-re, -im}; }
  GaussQ operator*(const GaussQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussQ operator/(const GaussQ& o) const {
    mpq_class n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero gaussian rational");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(mpq_class q) {
    Scalar s;
    s.v_ = std::move(q);
    return s;
  }
  static Scalar rational(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return rational(q);
  }
  // Parses "p/q" or "p".
  static Scalar rational(const std::string& text) {
    mpq_class q(text);
    q.canonicalize();
    return rational(q);
  }
  static Scalar gauss(GaussQ g) {
    Scalar s;
    s.v_ = std::move(g);
    return s;
  }
  static Scalar gauss(mpq_class re, mpq_class im) { return gauss(GaussQ{std::move(re), std::move(im)}); }
  static Scalar gauss_i() { return gauss(0, 1); }
  static Scalar cplx(std::complex<double> z) {
    Scalar s;
    s.v_ = z;
    return s;
  }
  static Scalar one(ScalarKind k) {
    switch (k) {
      case ScalarKind::Rational: return rational(1);
      case ScalarKind::GaussianRational: return gauss(1, 0);
      case ScalarKind::ComplexDouble: return cplx({1.0, 0.0});
    }
    throw ScalarKindError("bad kind");
  }
  static Scalar zero(ScalarKind k) {
    switch (k) {
      case ScalarKind::Rational: return rational(0);
      case ScalarKind::GaussianRational: return gauss(0, 0);
      case ScalarKind::ComplexDouble: return cplx({0.0, 0.0});
    }
    throw ScalarKindError("bad kind");
  }
  static Scalar integer(long n, ScalarKind k) {
    switch (k) {
      case ScalarKind::Rational: return rational(n);
      case ScalarKind::GaussianRational: return gauss(n, 0);
      case ScalarKind::ComplexDouble: return cplx({double(n), 0.0});
    }
    throw ScalarKindError("bad kind");
  }

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }

  const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
  const GaussQ& as_gauss() const { return std::get<GaussQ>(v_); }
  std::complex<double> as_cplx() const { return std::get<std::complex<double>>(v_); }

  bool is_zero() const {
    switch (kind()) {
      case ScalarKind::Rational: return as_rational() == 0;
      case ScalarKind::GaussianRational: return as_gauss().is_zero();
      case ScalarKind::ComplexDouble: return as_cplx() == std::complex<double>(0, 0);
    }
    return false;
  }

  // Numeric value; exact kinds are converted (gaussian keeps both parts).
  std::complex<double> to_cplx() const {
    switch (kind()) {
      case ScalarKind::Rational: return {as_rational().get_d(), 0.0};
      case ScalarKind::GaussianRational:
        return {as_gauss().re.get_d(), as_gauss().im.get_d()};
      case ScalarKind::ComplexDouble: return as_cplx();
    }
    return {};
  }

  Scalar operator+(const Scalar& o) const { return bin(o, '+'); }
  Scalar operator-(const Scalar& o) const { return bin(o, '-'); }
  Scalar operator*(const Scalar& o) const { return bin(o, '*'); }
  Scalar operator/(const Scalar& o) const { return bin(o, '/'); }
  Scalar operator-() const {
    switch (kind()) {
      case ScalarKind::Rational: return rational(mpq_class(-as_rational()));
      case ScalarKind::GaussianRational: return gauss(-as_gauss());
      case ScalarKind::ComplexDouble: return cplx(-as_cplx());
    }
    throw ScalarKindError("bad kind");
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    // the rational embedding into Q(i) is canonical and exact
    if (kind() == ScalarKind::Rational && o.kind() == ScalarKind::GaussianRational)
      return GaussQ{as_rational(), 0} == o.as_gauss();
    if (kind() == ScalarKind::GaussianRational && o.kind() == ScalarKind::Rational)
      return as_gauss() == GaussQ{o.as_rational(), 0};
    if (kind() != o.kind()) return false;
    switch (kind()) {
      case ScalarKind::Rational: return as_rational() == o.as_rational();
      case ScalarKind::GaussianRational: return as_gauss() == o.as_gauss();
      case ScalarKind::ComplexDouble: return as_cplx() == o.as_cplx();
    }
    return false;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    switch (kind()) {
      case ScalarKind::Rational: return as_rational().get_str();
      case ScalarKind::GaussianRational: {
        const GaussQ& g = as_gauss();
        if (g.im == 0) return g.re.get_str();
        if (g.re == 0) return g.im.get_str() + "*i";
        std::string s = g.re.get_str();
        if (g.im > 0) s += "+";
        return s + g.im.get_str() + "*i";
      }
      case ScalarKind::ComplexDouble: {
        auto z = as_cplx();
        return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
      }
    }
    return "?";
  }

 private:
  Scalar bin(const Scalar& o, char op) const {
    // promote rationals into Q(i) exactly; mixing with floating complex
    // scalars stays an error, since it crosses the exact/inexact boundary
    if (kind() == ScalarKind::Rational && o.kind() == ScalarKind::GaussianRational)
      return gauss(GaussQ{as_rational(), 0}).bin(o, op);
    if (kind() == ScalarKind::GaussianRational && o.kind() == ScalarKind::Rational)
      return bin(gauss(GaussQ{o.as_rational(), 0}), op);
    if (kind() != o.kind())
      throw ScalarKindError(std::string("scalar kind mismatch: ") + kind_name(kind()) +
                            " vs " + kind_name(o.kind()));
    switch (kind()) {
      case ScalarKind::Rational: {
        const mpq_class &a = as_rational(), &b = o.as_rational();
        switch (op) {
          case '+': return rational(mpq_class(a + b));
          case '-': return rational(mpq_class(a - b));
          case '*': return rational(mpq_class(a * b));
          case '/':
            if (b == 0) throw std::domain_error("division by zero rational");
            return rational(mpq_class(a / b));
        }
        break;
      }
      case ScalarKind::GaussianRational: {
        const GaussQ &a = as_gauss(), &b = o.as_gauss();
        switch (op) {
          case '+': return gauss(a + b);
          case '-': return gauss(a - b);
          case '*': return gauss(a * b);
          case '/': return gauss(a / b);
        }
        break;
      }
      case ScalarKind::ComplexDouble: {
        auto a = as_cplx(), b = o.as_cplx();
        switch (op) {
          case '+': return cplx(a + b);
          case '-': return cplx(a - b);
          case '*': return cplx(a * b);
          case '/': return cplx(a / b);
        }
        break;
      }
    }
    throw ScalarKindError("bad op");
  }

  std::variant<mpq_class, GaussQ, std::complex<double>> v_;
};

}  // namespace lcoalg
