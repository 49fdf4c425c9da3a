#pragma once
// Completely positive maps from vertex-labelled Kraus operators, and the
// graph-driven iterates: the k-th circle-G power of Psi takes one Kraus term
// per weighted coproduct walk word, multiplying the vertex operators along
// the word.  Superoperators are compared through their d^2 x d^2 matrices.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcoalg/coassoc.hpp"
#include "lcoalg/lcoalgebra.hpp"

namespace lcoalg {

using CMat = Eigen::MatrixXcd;

// Vertex operators tied to the basis of a degree-1 coalgebra (usually the
// Markov structure of a weighted digraph).
struct KrausFamily {
  int dim = 0;
  std::vector<CMat> ops;  // one operator per coalgebra basis symbol
  LCoalgebra coalgebra;

  void validate() const {
    if (static_cast<int>(ops.size()) != coalgebra.basis.size())
      throw std::invalid_argument("operator count does not match vertex set");
    for (const auto& m : ops)
      if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("Kraus operator has wrong dimension");
  }
};

inline KrausFamily kraus_family(const WeightedDigraph& g, std::vector<CMat> ops,
                                ProbabilityConvention conv =
                                    ProbabilityConvention::unit_weights,
                                bool adjoin_identity = false) {
  KrausFamily f;
  f.dim = ops.empty() ? 0 : static_cast<int>(ops.front().rows());
  f.ops = std::move(ops);
  f.coalgebra = to_markov_lcoalgebra(g, conv, adjoin_identity);
  if (adjoin_identity)
    f.ops.push_back(CMat::Identity(f.dim, f.dim));  // the adjoined vertex
  f.validate();
  return f;
}

// Operators attached directly to a coalgebra basis (for non-Markov right
// coproducts such as the (1, X, g) structure).
inline KrausFamily kraus_family(const LCoalgebra& c, std::vector<CMat> ops) {
  KrausFamily f;
  f.dim = ops.empty() ? 0 : static_cast<int>(ops.front().rows());
  f.ops = std::move(ops);
  f.coalgebra = c;
  f.validate();
  return f;
}

// A completely positive map in Stinespring form: rho -> sum K rho K^dagger.
struct CPMap {
  int dim = 0;
  std::vector<CMat> terms;

  CMat apply(const CMat& rho) const {
    if (rho.rows() != dim || rho.cols() != dim)
      throw std::invalid_argument("cp_apply: dimension mismatch");
    CMat r = CMat::Zero(dim, dim);
    for (const auto& k : terms) r += k * rho * k.adjoint();
    return r;
  }

  // Column-major vectorization: K rho K^dagger -> (conj(K) (x) K) vec(rho).
  CMat superoperator() const {
    CMat s = CMat::Zero(dim * dim, dim * dim);
    for (const auto& k : terms)
      s += Eigen::kroneckerProduct(k.conjugate(), k).eval();
    return s;
  }
};

inline CMat cp_apply(const CPMap& m, const CMat& rho) { return m.apply(rho); }

inline double superop_distance(const CPMap& a, const CPMap& b) {
  return (a.superoperator() - b.superoperator()).cwiseAbs().maxCoeff();
}

// The weighted walk words of the k-step iterate out of one start vertex:
// steps = number of vertices in a word, so steps = 1 is the vertex itself and
// steps = 2 applies the right coproduct once.
inline std::vector<std::pair<Scalar, TensorWord>> circle_g_words(
    const LCoalgebra& c, int start, int steps) {
  if (steps < 1) throw std::invalid_argument("circle_g needs steps >= 1");
  std::vector<std::pair<Scalar, TensorWord>> out;
  if (steps == 1) {
    out.push_back({Scalar::one(c.kind), {start}});
    return out;
  }
  Vect v = walk_expansion(c, Vect::word({start}, Scalar::one(c.kind)), steps - 1);
  for (const auto& [w, coeff] : v.terms()) out.push_back({coeff, w});
  return out;
}

inline CMat word_operator(const KrausFamily& f, const Scalar& coeff,
                          const TensorWord& w) {
  CMat m = CMat::Identity(f.dim, f.dim) * coeff.to_cplx();
  for (int letter : w) m = m * f.ops[letter];
  return m;
}

// One Kraus term per weighted walk word; for a complete graph with unit
// weights this reproduces the usual k-fold composition of Psi.
inline CPMap iterate_circle_g(const KrausFamily& f, int steps) {
  f.validate();
  CPMap m;
  m.dim = f.dim;
  for (int v = 0; v < f.coalgebra.basis.size(); ++v)
    for (const auto& [coeff, w] : circle_g_words(f.coalgebra, v, steps))
      m.terms.push_back(word_operator(f, coeff, w));
  return m;
}

// The collapsed operator of a start vertex: the image of the iterated right
// coproduct under the product map, one operator per vertex.  This is the
// shape of the worked (1, X, g) display, where the start-X operator at two
// steps is X + gX.
inline std::vector<CMat> collapsed_kraus(const KrausFamily& f, int steps) {
  f.validate();
  std::vector<CMat> out;
  for (int v = 0; v < f.coalgebra.basis.size(); ++v) {
    CMat b = CMat::Zero(f.dim, f.dim);
    for (const auto& [coeff, w] : circle_g_words(f.coalgebra, v, steps))
      b += word_operator(f, coeff, w);
    out.push_back(b);
  }
  return out;
}

// The (k, l) composite: the k-step expansion extended by l further coproduct
// steps (the star product of the two iterated coproducts), one Kraus term per
// resulting word.  Equal to iterate_circle_g(k + l) as a superoperator.
inline CPMap compose_circle_g(int k_steps, int l_steps, const KrausFamily& f) {
  if (k_steps < 1 || l_steps < 1)
    throw std::invalid_argument("compose_circle_g needs steps >= 1");
  f.validate();
  const LCoalgebra& c = f.coalgebra;
  CPMap m;
  m.dim = f.dim;
  for (int v = 0; v < c.basis.size(); ++v) {
    Vect cur = k_steps == 1 ? Vect::word({v}, Scalar::one(c.kind))
                            : walk_expansion(c, Vect::word({v}, Scalar::one(c.kind)),
                                             k_steps - 1);
    for (int step = 0; step < l_steps; ++step)
      cur = cur.degree() == 1
                ? c.right.apply(cur)
                : tensor_of_maps(LinMap::identity(cur.degree() - 1), c.right)
                      .apply(cur);
    for (const auto& [w, coeff] : cur.terms())
      m.terms.push_back(word_operator(f, coeff, w));
  }
  return m;
}

// --- diagnostics ----------------------------------------------------------------

struct CPDiagnostics {
  double contractivity_min_eig = 0;  // min eigenvalue of I - sum K K^dagger
  bool contractive = false;
  double unitality_gap_norm = 0;     // || I - Psi^{o_G steps}(I) ||_max
  double unitality_gap_min_eig = 0;  // min eigenvalue of the gap (>= 0 expected)
  double trace_gap = 0;              // || sum K^dagger K - I ||_max at `steps`
  // Weight-mass fraction of walk words ending in the declared attractor set,
  // for 1..steps; empty when no attractor is declared.
  std::vector<double> attractor_fraction;
};

inline double min_eigenvalue(const CMat& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMat> es(
      ((hermitian + hermitian.adjoint()) / 2.0).eval());
  return es.eigenvalues().minCoeff();
}

inline CPDiagnostics cp_diagnostics(const KrausFamily& f, int steps,
                                    const std::vector<int>& attractor = {}) {
  f.validate();
  CPDiagnostics d;
  const CMat id = CMat::Identity(f.dim, f.dim);

  CMat one_step = CMat::Zero(f.dim, f.dim);
  for (const auto& k : f.ops) one_step += k * k.adjoint();
  d.contractivity_min_eig = min_eigenvalue(id - one_step);
  d.contractive = d.contractivity_min_eig >= -1e-10;

  CPMap it = iterate_circle_g(f, steps);
  CMat gap = id - it.apply(id);
  d.unitality_gap_norm = gap.cwiseAbs().maxCoeff();
  d.unitality_gap_min_eig = min_eigenvalue(gap);

  CMat dual = CMat::Zero(f.dim, f.dim);
  for (const auto& k : it.terms) dual += k.adjoint() * k;
  d.trace_gap = (dual - id).cwiseAbs().maxCoeff();

  if (!attractor.empty()) {
    for (int s = 1; s <= steps; ++s) {
      double total = 0, inside = 0;
      for (int v = 0; v < f.coalgebra.basis.size(); ++v)
        for (const auto& [coeff, w] : circle_g_words(f.coalgebra, v, s)) {
          double mass = std::abs(coeff.to_cplx());
          total += mass;
          if (std::find(attractor.begin(), attractor.end(), w.back()) !=
              attractor.end())
            inside += mass;
        }
      d.attractor_fraction.push_back(total == 0 ? 0 : inside / total);
    }
  }
  return d;
}

// --- JSON loading ------------------------------------------------------------------
//
// { "dim": 2,
//   "operators": { "v": [[[re,im], ...row...], ...] , ... },
//   "graph": { ... as in load_graph ... },
//   "convention": "unit" | "probability",
//   "adjoin_identity": false }
inline KrausFamily load_kraus(const nlohmann::json& doc) {
  WeightedDigraph g = load_graph(doc.at("graph"));
  const int dim = doc.at("dim").get<int>();
  std::vector<CMat> ops;
  for (const auto& name : g.vertices) {
    const auto& rows = doc.at("operators").at(name);
    CMat m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const auto& e = rows.at(i).at(j);
        m(i, j) = std::complex<double>(e.at(0).get<double>(),
                                       e.at(1).get<double>());
      }
    ops.push_back(m);
  }
  auto conv = doc.value("convention", std::string("unit")) == "probability"
                  ? ProbabilityConvention::given_weights
                  : ProbabilityConvention::unit_weights;
  return kraus_family(g, std::move(ops), conv,
                      doc.value("adjoin_identity", false));
}

}  // namespace lcoalg
