#pragma once
// Coassociative coproduct factories: matrix coproducts T (x-bar) U, the
// built-in example catalog, path deconcatenation and convolution, and the
// embedding of a coassociative coalgebra into a two-coproduct structure.

#include <optional>
#include <string>
#include <vector>

#include "lcoalg/algebra.hpp"
#include "lcoalg/lcoalgebra.hpp"

namespace lcoalg {

// A square matrix whose entries are 0 or a single basis symbol.
struct SymbolMatrix {
  int m = 0;
  Basis basis;
  std::vector<std::optional<int>> entries;  // row-major, nullopt = 0

  static SymbolMatrix from_names(const Basis& b,
                                 const std::vector<std::vector<std::string>>& rows) {
    SymbolMatrix s;
    s.m = static_cast<int>(rows.size());
    s.basis = b;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != s.m)
        throw std::invalid_argument("symbol matrix must be square");
      for (const auto& name : row)
        s.entries.push_back(name == "0" ? std::optional<int>{}
                                        : std::optional<int>{b.index_of(name)});
    }
    return s;
  }
  std::optional<int> at(int i, int j) const { return entries[i * m + j]; }
};

// Delta(symbol at T_ij) = sum_k T_ik (x) U_kj, summed over the positions of
// each symbol; the left coproduct is set equal (degenerate structure).
// Coassociativity is for the caller to check, not assumed.
inline LCoalgebra coproduct_from_matrices(const SymbolMatrix& T, const SymbolMatrix& U) {
  if (T.m != U.m) throw std::invalid_argument("matrix dimension mismatch");
  const int n = T.basis.size();
  std::vector<Vect> delta(n, Vect(2));
  std::vector<bool> placed(n, false);
  for (int i = 0; i < T.m; ++i)
    for (int j = 0; j < T.m; ++j) {
      auto s = T.at(i, j);
      if (!s) continue;
      placed[*s] = true;
      for (int k = 0; k < T.m; ++k) {
        auto a = T.at(i, k);
        auto b = U.at(k, j);
        if (a && b) delta[*s].add_term({*a, *b}, Scalar::rational(1));
      }
    }
  for (int s = 0; s < n; ++s)
    if (!placed[s])
      throw std::invalid_argument("symbol " + T.basis.names[s] + " absent from T");
  LCoalgebra c;
  c.basis = T.basis;
  c.degree = 1;
  std::map<TensorWord, Vect> table;
  for (int s = 0; s < n; ++s) table[{s}] = delta[s];
  c.right = LinMap::from_table(1, 2, table);
  c.left = c.right;
  return c;
}

// --- built-in catalog --------------------------------------------------------

struct CatalogEntry {
  LCoalgebra lc;
  std::optional<StructAlgebra> algebra;
  std::optional<LinMap> S, S_tilde;  // antipodes, when the example has them
  std::string notes;
};

namespace detail {

inline LinMap counit_table(const std::vector<long>& values) {
  std::map<TensorWord, Vect> t;
  for (size_t i = 0; i < values.size(); ++i)
    t[{static_cast<int>(i)}] = Vect::word({}, Scalar::rational(values[i]));
  return LinMap::from_table(1, 0, t);
}

inline LCoalgebra degenerate(Basis basis, std::map<TensorWord, Vect> delta,
                             std::optional<std::vector<long>> counit) {
  LCoalgebra c;
  c.basis = std::move(basis);
  c.degree = 1;
  c.right = LinMap::from_table(1, 2, std::move(delta));
  c.left = c.right;
  if (counit) {
    c.right_counit = counit_table(*counit);
    c.left_counit = c.right_counit;
  }
  return c;
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  return {"sl2q",         "xg",           "xg_hopf_coalgebra", "two_point_T1",
          "two_point_T2", "two_point_T3", "two_point_T4",      "two_point_T5",
          "triangle"};
}

inline CatalogEntry builtin_catalog(const std::string& name) {
  using detail::degenerate;
  CatalogEntry e;
  auto W = [](std::initializer_list<std::pair<TensorWord, long>> terms) {
    Vect v(2);
    for (const auto& [w, c] : terms) v.add_term(w, Scalar::rational(c));
    return v;
  };
  if (name == "sl2q") {
    // basis a=0, b=1, c=2, d=3
    e.lc = degenerate(Basis{{"a", "b", "c", "d"}, std::nullopt},
                      {{{0}, W({{{0, 0}, 1}, {{1, 2}, 1}})},
                       {{1}, W({{{0, 1}, 1}, {{1, 3}, 1}})},
                       {{2}, W({{{3, 2}, 1}, {{2, 0}, 1}})},
                       {{3}, W({{{3, 3}, 1}, {{2, 1}, 1}})}},
                      std::vector<long>{1, 0, 0, 1});
    e.notes = "matrix coalgebra on four generators";
  } else if (name == "xg") {
    // basis 1=0, X=1, g=2
    e.lc = degenerate(Basis{{"1", "X", "g"}, 0},
                      {{{0}, W({{{0, 0}, 1}})},
                       {{1}, W({{{1, 0}, 1}, {{2, 1}, 1}})},
                       {{2}, W({{{2, 2}, 1}})}},
                      std::vector<long>{1, 0, 1});
    e.notes = "one primitive-like generator over two group-likes";
  } else if (name == "xg_hopf_coalgebra") {
    // basis 1=0, X=1, g=2, g^-1=3, S(X)=4; S(g) = g^-1
    e.lc = degenerate(Basis{{"1", "X", "g", "g^-1", "S(X)"}, 0},
                      {{{0}, W({{{0, 0}, 1}})},
                       {{1}, W({{{1, 0}, 1}, {{2, 1}, 1}})},
                       {{2}, W({{{2, 2}, 1}})},
                       {{3}, W({{{3, 3}, 1}})},
                       {{4}, W({{{0, 4}, 1}, {{4, 3}, 1}})}},
                      std::vector<long>{1, 0, 1, 1, 0});
    e.notes = "coalgebra part of the quantum-plane example; "
              "the algebra relation Xg = qgX is metadata only";
  } else if (name == "two_point_T1") {
    e.lc = degenerate(Basis{{"a", "b"}, std::nullopt},
                      {{{0}, W({{{0, 0}, 1}})}, {{1}, W({{{1, 0}, 1}})}},
                      std::nullopt);
    // Right counit only: eps(a)=1 makes (id (x) eps) Delta = id.
    e.lc.right_counit = detail::counit_table({1, 0});
  } else if (name == "two_point_T2") {
    e.lc = degenerate(Basis{{"a", "b"}, std::nullopt},
                      {{{0}, W({{{0, 0}, 1}})}, {{1}, W({{{1, 1}, 1}})}},
                      std::vector<long>{1, 1});
  } else if (name == "two_point_T3") {
    e.lc = degenerate(Basis{{"a", "b"}, std::nullopt},
                      {{{0}, W({{{0, 1}, 1}, {{1, 0}, 1}})}, {{1}, W({{{1, 1}, 1}})}},
                      std::vector<long>{0, 1});
  } else if (name == "two_point_T4") {
    e.lc = degenerate(Basis{{"a", "b"}, std::nullopt},
                      {{{0}, W({{{0, 1}, 1}, {{0, 0}, 1}})},
                       {{1}, W({{{1, 1}, 1}, {{1, 0}, 1}})}},
                      std::nullopt);
    // Only a right counit exists; the left equation provably fails.
    e.lc.right_counit = detail::counit_table({1, 0});
    e.notes = "no left counit exists";
  } else if (name == "two_point_T5") {
    e.lc = degenerate(Basis{{"a", "b"}, std::nullopt},
                      {{{0}, W({{{0, 0}, 1}, {{1, 1}, 1}})},
                       {{1}, W({{{0, 1}, 1}, {{1, 0}, 1}})}},
                      std::vector<long>{1, 0});
  } else if (name == "triangle") {
    WeightedDigraph g;
    g.vertices = {"x0", "x1", "x2"};
    for (int v = 0; v < 3; ++v)
      g.arrows.push_back({"e" + std::to_string(v), v, (v + 1) % 3, Scalar::rational(1)});
    e.lc = to_markov_lcoalgebra(g, ProbabilityConvention::given_weights);
    e.notes = "oriented 3-cycle Markov structure (not coassociative)";
  } else {
    throw std::invalid_argument("unknown catalog name: " + name);
  }
  return e;
}

// --- paths and deconcatenation ----------------------------------------------

// A directed path: a start vertex plus the arrows traversed, first to last.
struct Path {
  int start = 0;
  std::vector<int> arrows;  // indices into the graph's arrow list
  int length() const { return static_cast<int>(arrows.size()); }
  bool operator<(const Path& o) const {
    return std::tie(start, arrows) < std::tie(o.start, o.arrows);
  }
  bool operator==(const Path& o) const {
    return start == o.start && arrows == o.arrows;
  }
};

struct PathSpace {
  WeightedDigraph graph;
  int max_length = 1;
  std::vector<Path> paths;  // all paths of length 0..max_length

  static PathSpace build(const WeightedDigraph& g, int max_length) {
    if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
    PathSpace p;
    p.graph = g;
    p.max_length = max_length;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
      p.paths.push_back({v, {}});
    std::vector<Path> frontier = p.paths;
    for (int len = 1; len <= max_length; ++len) {
      std::vector<Path> next;
      for (const auto& path : frontier) {
        int tip = p.target(path);
        for (int a = 0; a < static_cast<int>(g.arrows.size()); ++a)
          if (g.arrows[a].src == tip) {
            Path ext = path;
            ext.arrows.push_back(a);
            next.push_back(ext);
          }
      }
      p.paths.insert(p.paths.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return p;
  }

  int source(const Path& p) const { return p.start; }
  int target(const Path& p) const {
    return p.arrows.empty() ? p.start : graph.arrows[p.arrows.back()].dst;
  }
  int index_of(const Path& p) const {
    for (size_t i = 0; i < paths.size(); ++i)
      if (paths[i] == p) return static_cast<int>(i);
    throw std::out_of_range("path not in space");
  }
  std::string name(const Path& p) const {
    if (p.arrows.empty()) return graph.vertices[p.start];
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
      if (i) s += ".";
      s += graph.arrows[p.arrows[i]].id;
    }
    return s;
  }
  Basis basis() const {
    Basis b;
    for (const auto& p : paths) b.names.push_back(name(p));
    return b;
  }

  // All ordered pairs (late, early) with late o early = p.
  std::vector<std::pair<Path, Path>> splits(const Path& p) const {
    std::vector<std::pair<Path, Path>> out;
    const int k = p.length();
    for (int cut = 0; cut <= k; ++cut) {
      Path early{p.start, {p.arrows.begin(), p.arrows.begin() + cut}};
      Path late{target(early), {p.arrows.begin() + cut, p.arrows.end()}};
      out.push_back({late, early});
    }
    return out;
  }
};

// Deconcatenation coproduct on the truncated path space (degenerate structure;
// all splits stay within the truncation, so the laws are exact everywhere).
inline LCoalgebra path_deconcatenation_coalgebra(const PathSpace& p) {
  LCoalgebra c;
  c.basis = p.basis();
  c.degree = 1;
  std::map<TensorWord, Vect> delta;
  std::map<TensorWord, Vect> counit;
  for (size_t i = 0; i < p.paths.size(); ++i) {
    Vect v(2);
    for (const auto& [late, early] : p.splits(p.paths[i]))
      v.add_term({p.index_of(late), p.index_of(early)}, Scalar::rational(1));
    delta[{static_cast<int>(i)}] = v;
    counit[{static_cast<int>(i)}] =
        Vect::word({}, Scalar::rational(p.paths[i].length() == 0 ? 1 : 0));
  }
  c.right = LinMap::from_table(1, 2, delta);
  c.left = c.right;
  c.right_counit = LinMap::from_table(1, 0, counit);
  c.left_counit = c.right_counit;
  return c;
}

// (f * g)(path) = sum over splits of f(late) g(early).
inline std::map<int, Scalar> convolution_product(const std::map<int, Scalar>& f,
                                                 const std::map<int, Scalar>& g,
                                                 const PathSpace& p) {
  std::map<int, Scalar> out;
  auto val = [](const std::map<int, Scalar>& m, int i) {
    auto it = m.find(i);
    return it == m.end() ? Scalar::rational(0) : it->second;
  };
  for (size_t i = 0; i < p.paths.size(); ++i) {
    Scalar acc = Scalar::rational(0);
    for (const auto& [late, early] : p.splits(p.paths[i]))
      acc += val(f, p.index_of(late)) * val(g, p.index_of(early));
    if (!acc.is_zero()) out[static_cast<int>(i)] = acc;
  }
  return out;
}

// --- Ito embedding and the chiral rule --------------------------------------

// Extends a degenerate coalgebra with a fresh group-like unit symbol.
inline LCoalgebra adjoin_group_like_unit(const LCoalgebra& c, const std::string& name = "1") {
  LCoalgebra r = c;
  const int u = c.basis.size();
  r.basis.names.push_back(name);
  r.basis.unit = u;
  ScalarKind kind = c.kind;
  auto wrap = [u, kind](const LinMap& f) {
    return LinMap(1, 2, [f, u, kind](const TensorWord& w) {
      if (w[0] == u) return Vect::word({u, u}, Scalar::one(kind));
      return f.on_word(w);
    });
  };
  r.right = wrap(c.right);
  r.left = wrap(c.left);
  if (c.right_counit) {
    LinMap e = *c.right_counit;
    r.right_counit = LinMap(1, 0, [e, u, kind](const TensorWord& w) {
      if (w[0] == u) return Vect::word({}, Scalar::one(kind));
      return e.on_word(w);
    });
  }
  if (c.left_counit) {
    LinMap e = *c.left_counit;
    r.left_counit = LinMap(1, 0, [e, u, kind](const TensorWord& w) {
      if (w[0] == u) return Vect::word({}, Scalar::one(kind));
      return e.on_word(w);
    });
  }
  return r;
}

// The degenerate coalgebra in which every basis element is group-like
// (multiplicative for group algebras and idempotent bases).
inline LCoalgebra group_like_coalgebra(const StructAlgebra& alg) {
  LCoalgebra c;
  c.basis = alg.basis;
  c.kind = alg.kind;
  c.degree = 1;
  ScalarKind kind = alg.kind;
  c.right = LinMap(1, 2, [kind](const TensorWord& w) {
    return Vect::word({w[0], w[0]}, Scalar::one(kind));
  });
  c.left = c.right;
  c.right_counit = LinMap(1, 0, [kind](const TensorWord&) {
    return Vect::word({}, Scalar::one(kind));
  });
  c.left_counit = c.right_counit;
  return c;
}

// From a coassociative coalgebra with a group-like unit, build the
// two-coproduct structure right = Delta x - x (x) 1, left = Delta x - 1 (x) x.
inline LCoalgebra ito_embedding(const LCoalgebra& c) {
  if (!c.basis.unit) throw std::invalid_argument("ito_embedding needs a unit symbol");
  const int u = *c.basis.unit;
  if (c.right.on_word({u}) != Vect::basis_word({u, u}, c.kind))
    throw std::invalid_argument("unit symbol is not group-like");
  LCoalgebra r;
  r.basis = c.basis;
  r.kind = c.kind;
  r.degree = 1;
  LinMap delta = c.right;
  ScalarKind kind = c.kind;
  r.right = LinMap(1, 2, [delta, u, kind](const TensorWord& w) {
    Vect v = delta.on_word(w);
    v.add_term({w[0], u}, -Scalar::one(kind));
    return v;
  });
  r.left = LinMap(1, 2, [delta, u, kind](const TensorWord& w) {
    Vect v = delta.on_word(w);
    v.add_term({u, w[0]}, -Scalar::one(kind));
    return v;
  });
  return r;
}

// Ito rule for the embedded differentials in the chiral bimodule where
// x . m = delta(x) m and m . y = m delta(y) (flower actions).
inline AxiomReport check_chiral_ito(const LCoalgebra& c, const StructAlgebra& alg) {
  AxiomReport rep;
  const int n = alg.dim();
  const int u = alg.unit_index();
  // Precondition: the coproduct is multiplicative.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vect xy = alg.mul(alg.elem(i), alg.elem(j));
      if (c.right.apply(xy) !=
          alg.mul_tensor(c.right.on_word({i}), c.right.on_word({j}))) {
        rep.add("coproduct-multiplicative", false,
                "at (" + alg.basis.names[i] + "," + alg.basis.names[j] + ")");
        return rep;
      }
    }
  rep.add("coproduct-multiplicative", true);

  LCoalgebra emb = ito_embedding(c);
  auto fl_r = [&](int x) { return tensor_product(alg.elem(x), alg.unit()); };   // delta
  auto fl_l = [&](int x) { return tensor_product(alg.unit(), alg.elem(x)); };   // delta~
  bool right_ok = true, left_ok = true, units_ok = true;
  std::string wr, wl;
  units_ok = emb.right.on_word({u}).is_zero() && emb.left.on_word({u}).is_zero();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vect dx = emb.right.on_word({x}), dy = emb.right.on_word({y});
      Vect lhs = emb.right.apply(alg.mul(alg.elem(x), alg.elem(y)));
      Vect rhs = alg.mul_tensor(dx, dy) + alg.mul_tensor(dx, fl_r(y)) +
                 alg.mul_tensor(fl_r(x), dy);
      if (lhs != rhs && right_ok) {
        right_ok = false;
        wr = "at (" + alg.basis.names[x] + "," + alg.basis.names[y] + ")";
      }
      Vect ex = emb.left.on_word({x}), ey = emb.left.on_word({y});
      Vect lhs2 = emb.left.apply(alg.mul(alg.elem(x), alg.elem(y)));
      Vect rhs2 = alg.mul_tensor(ex, ey) + alg.mul_tensor(ex, fl_l(y)) +
                  alg.mul_tensor(fl_l(x), ey);
      if (lhs2 != rhs2 && left_ok) {
        left_ok = false;
        wl = "at (" + alg.basis.names[x] + "," + alg.basis.names[y] + ")";
      }
    }
  rep.add("right-ito-rule", right_ok, wr);
  rep.add("left-ito-rule", left_ok, wl);
  rep.add("differentials-vanish-on-unit", units_ok);
  return rep;
}

}  // namespace lcoalg
