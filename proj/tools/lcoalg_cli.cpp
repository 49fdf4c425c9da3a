// Batch front door for the library: load coalgebras, algebras, Kraus data and
// mutation configs, run the checkers and simulations, and emit text or JSON
// reports.  Exit 0 when every gating check passes, 1 on a check failure, 2 on
// input or validation errors.  Informational observations (for instance
// cocommutativity, which many structures legitimately lack) are reported as
// observed-true / observed-false and never gate the exit code.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcoalg/coassoc.hpp"
#include "lcoalg/cp.hpp"
#include "lcoalg/forms.hpp"
#include "lcoalg/graph.hpp"
#include "lcoalg/ito.hpp"
#include "lcoalg/lcoalgebra.hpp"
#include "lcoalg/poly.hpp"

using namespace lcoalg;
using ojson = nlohmann::ordered_json;

static const char* kVersion = "1.0.0";

namespace {

struct CliCheck {
  std::string name, anchor, verdict, witness;
};

struct CliReport {
  std::vector<CliCheck> checks;
  std::vector<std::string> info_lines;  // extra human-readable output
  unsigned long long seed = 0;

  void add(const std::string& anchor_prefix, const std::string& name, bool ok,
           const std::string& witness = "", bool gating = true) {
    std::string verdict =
        gating ? (ok ? "pass" : "fail") : (ok ? "observed-true" : "observed-false");
    checks.push_back({name, anchor_prefix + "." + name, verdict, witness});
  }

  // Merge a library report; names listed in `informational` never gate.
  void add_report(const std::string& anchor_prefix, const AxiomReport& rep,
                  const std::set<std::string>& informational = {}) {
    for (const auto& c : rep.checks)
      add(anchor_prefix, c.name, c.ok, c.witness, !informational.count(c.name));
  }

  void line(std::string s) { info_lines.push_back(std::move(s)); }

  bool failed() const {
    for (const auto& c : checks)
      if (c.verdict == "fail") return true;
    return false;
  }

  int emit(bool json_out) const {
    if (json_out) {
      ojson doc;
      doc["checks"] = ojson::array();
      for (const auto& c : checks) {
        ojson e;
        e["name"] = c.name;
        e["anchor"] = c.anchor;
        e["verdict"] = c.verdict;
        if (!c.witness.empty()) e["witness"] = c.witness;
        doc["checks"].push_back(e);
      }
      doc["seed"] = seed;
      doc["version"] = kVersion;
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& s : info_lines) std::cout << s << "\n";
      for (const auto& c : checks) {
        std::string tag = c.verdict == "pass"            ? "PASS"
                          : c.verdict == "fail"          ? "FAIL"
                          : c.verdict == "observed-true" ? "obs+"
                                                         : "obs-";
        std::cout << "[" << tag << "] " << c.anchor
                  << (c.witness.empty() ? "" : "  (" + c.witness + ")") << "\n";
      }
    }
    return failed() ? 1 : 0;
  }
};

ojson read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  ojson doc;
  in >> doc;
  return doc;
}

ProbabilityConvention parse_convention(const std::string& name) {
  if (name == "unit") return ProbabilityConvention::unit_weights;
  if (name == "probability") return ProbabilityConvention::given_weights;
  if (name == "equiprobable") return ProbabilityConvention::equiprobable;
  throw std::invalid_argument("unknown convention: " + name);
}

LCoalgebra resolve_coalgebra(const std::string& catalog_name,
                             const std::string& graph_path,
                             const std::string& convention) {
  if (!catalog_name.empty()) return builtin_catalog(catalog_name).lc;
  if (!graph_path.empty()) {
    WeightedDigraph g = load_graph(read_json_file(graph_path));
    return to_markov_lcoalgebra(g, parse_convention(convention));
  }
  throw std::invalid_argument("need --catalog NAME or --graph PATH");
}

// Random formal forms of degree 1 or 2 for the forms reports (the star
// product is undefined between two non-unit 0-forms, so samples stay in
// positive degree).
std::vector<Form> sample_forms(const StructAlgebra& alg, std::mt19937_64& rng,
                               int count) {
  std::vector<Form> out;
  while (static_cast<int>(out.size()) < count) {
    Form f(alg.kind);
    int deg = 1 + static_cast<int>(rng() % 2);  // homogeneous per sample
    for (int t = 0; t < 2; ++t) {
      FormWord w(2 * deg + 2);
      for (auto& letter : w) letter = static_cast<int>(rng() % alg.dim());
      long c = static_cast<long>(rng() % 4) - 2;
      if (c == 0) c = 1;
      f = f + form_word(alg, w, Scalar::integer(c, alg.kind));
    }
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

// The (1, X, g) walk family used as the built-in demo for `cp`.
KrausFamily builtin_xg_family() {
  CMat id2 = CMat::Identity(2, 2), X(2, 2), g(2, 2);
  X << 0, 1, 0, 0;
  g << 1, 0, 0, -1;
  return kraus_family(builtin_catalog("xg").lc, {id2, X, g});
}

Vect invertible_unit_shift(const StructAlgebra& alg) {
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.basis.unit && i == *alg.basis.unit) continue;
    Vect u = alg.unit() + alg.elem(i);
    if (invert(alg, u)) return u;
  }
  throw std::invalid_argument("no invertible 1 + e_i element found");
}

std::string scalar_coeff_str(const Vect& v) {
  if (v.is_zero()) return "0";
  return v.terms().begin()->second.str();
}

// --- subcommand bodies -----------------------------------------------------

int run_catalog(const std::string& name, bool json_out) {
  CliReport rep;
  if (name.empty()) {
    for (const auto& n : catalog_names()) {
      CatalogEntry e = builtin_catalog(n);
      rep.line(n + ": " + std::to_string(e.lc.basis.size()) + " symbols. " +
               e.notes);
      rep.add("catalog", n + "-loads", true, e.notes, false);
    }
  } else {
    CatalogEntry e = builtin_catalog(name);
    rep.line("basis:");
    for (int i = 0; i < e.lc.basis.size(); ++i)
      rep.line("  " + e.lc.basis.names[i] + "  ->  " +
               e.lc.right.on_word({i}).str(e.lc.basis));
    rep.add("catalog", name + "-loads", true, e.notes, false);
  }
  return rep.emit(json_out);
}

int run_axioms(const LCoalgebra& c, bool json_out) {
  CliReport rep;
  // The breaking equation is the defining law; the other findings (counits,
  // cocommutativity, degenerate coassociativity) describe the structure and
  // legitimately differ between examples.
  rep.add_report("axioms", check_axioms(c),
                 {"cocommutativity", "degenerate-coassociativity",
                  "right-counit", "left-counit"});
  return rep.emit(json_out);
}

int run_walks(const LCoalgebra& c, int steps, const std::string& start,
              bool json_out) {
  if (steps < 2) throw std::invalid_argument("walks need --steps >= 2");
  CliReport rep;
  int v = start.empty() ? 0 : c.basis.index_of(start);
  Vect exp = walk_expansion(c, Vect::word({v}, Scalar::one(c.kind)), steps - 1);
  rep.line("expansion of " + c.basis.names[v] + " over " +
           std::to_string(steps) + " symbols: " + exp.str(c.basis));
  bool ok = true;
  for (int k = 1; k < steps; ++k)
    if (!star_compose(c, k, steps - k)) ok = false;
  rep.add("walks", "expansion-composition", ok);
  return rep.emit(json_out);
}

int run_ito(const std::string& algebra_name, unsigned long long seed,
            bool json_out) {
  CliReport rep;
  rep.seed = seed;
  StructAlgebra alg = algebra_catalog(algebra_name);
  Vect u = invertible_unit_shift(alg);
  LinMap rho = conjugation_ito(alg, u);
  Classification cls = classify_map(rho, alg);
  rep.add("ito", "conjugation-classifies-ito",
          cls.cls == MapClass::ItoDerivative, map_class_name(cls.cls));
  rep.add_report("ito", carre_star_gauge(rho, alg));
  rep.add_report("ito", cochain_complex_fn(rho, alg, 3, seed));
  return rep.emit(json_out);
}

int run_forms(const std::string& algebra_name, unsigned long long seed,
              bool json_out) {
  CliReport rep;
  rep.seed = seed;
  StructAlgebra alg = algebra_catalog(algebra_name);
  std::mt19937_64 rng(seed);
  std::vector<Form> samples = sample_forms(alg, rng, 8);
  // The opposite-sign product rule is recorded as a deliberate negative: the
  // differential satisfies exactly one of the two graded sign conventions.
  rep.add_report("forms", form_laws_report(alg, samples),
                 {"differential-product-rule-opposite-sign"});
  rep.add_report("forms", dialgebra_report(alg, samples));
  rep.add_report("forms.dendriform-first",
                 dendriform_forms_report(alg, samples, ConvertKind::TypeI));
  rep.add_report("forms.leibnitz", leibnitz_report(alg, samples));
  return rep.emit(json_out);
}

int run_cp(const std::string& kraus_path, int steps, double tol,
           bool compare_usual, bool json_out) {
  if (steps < 1) throw std::invalid_argument("cp needs --steps >= 1");
  CliReport rep;
  KrausFamily fam =
      kraus_path.empty() ? builtin_xg_family() : load_kraus(read_json_file(kraus_path));
  rep.add("cp", "family-valid", true,
          std::to_string(fam.ops.size()) + " operators of dimension " +
              std::to_string(fam.dim),
          false);
  CPMap it = iterate_circle_g(fam, steps);
  if (steps >= 2) {
    double gap = superop_distance(compose_circle_g(1, steps - 1, fam), it);
    rep.add("cp", "semigroup-law", gap <= tol, "gap " + std::to_string(gap));
  }
  if (compare_usual) {
    CMat pow = CMat::Identity(fam.dim * fam.dim, fam.dim * fam.dim);
    CMat one = CPMap{fam.dim, fam.ops}.superoperator();
    for (int i = 0; i < steps; ++i) pow = one * pow;
    double gap = (it.superoperator() - pow).cwiseAbs().maxCoeff();
    rep.add("cp", "matches-usual-power", gap <= tol, "gap " + std::to_string(gap));
  }
  CPDiagnostics d = cp_diagnostics(fam, steps);
  rep.add("cp", "one-step-contractive", d.contractive,
          "min eigenvalue " + std::to_string(d.contractivity_min_eig), false);
  rep.line("unitality gap " + std::to_string(d.unitality_gap_norm) +
           ", trace gap " + std::to_string(d.trace_gap));
  return rep.emit(json_out);
}

int run_poly(unsigned long long seed, bool json_out) {
  CliReport rep;
  rep.seed = seed;
  rep.add_report("poly.matrix-2", matrix_iso_check(pointer_space(1), {2}, 40, seed));
  rep.add_report("poly.matrix-sum-2-1",
                 matrix_iso_check(pointer_space(1), {2, 1}, 40, seed + 1));
  rep.add_report("poly.cross", cross_product_check(100, seed + 2));
  // The 3-cycle is not coassociative, so its product must not associate;
  // the equivalence check is the gating verdict.
  rep.add_report("poly.triangle",
                 associativity_equivalence_report(
                     pointer_space(1), builtin_catalog("triangle").lc, 30, seed + 3),
                 {"coassociative", "induced-product-associative"});
  return rep.emit(json_out);
}

int run_mutate(const std::string& config_path, bool json_out) {
  if (config_path.empty()) throw std::invalid_argument("mutate needs --config PATH");
  ojson doc = read_json_file(config_path);
  MutationProcess proc;
  for (const auto& s : doc.at("states"))
    proc.states.push_back(builtin_mutation_state(s.get<std::string>()));
  for (const auto& p : doc.at("probs"))
    proc.probs.push_back(Scalar::rational(p.get<std::string>()));
  proc.seed = doc.value("seed", 0ULL);
  int steps = doc.value("steps", 4);
  proc.validate();

  StructAlgebra A = pointer_space(1);
  const int n = proc.states.front().lc.basis.size();
  PointerPoly start = PointerPoly::zero(n, A.kind);
  if (doc.contains("start")) {
    auto vals = doc["start"];
    for (int i = 0; i < n && i < static_cast<int>(vals.size()); ++i)
      start.coeffs[i] = Vect::word({0}, Scalar::rational(vals[i].get<std::string>()));
  } else {
    for (int i = 0; i < n; ++i)
      start.coeffs[i] = Vect::word({0}, Scalar::rational(1));
  }

  CliReport rep;
  rep.seed = proc.seed;
  rep.add("mutate", "config-valid", true, "", true);
  MutationTrajectory traj = mutation_simulate(A, proc, start, steps);
  for (int s = 0; s <= steps; ++s) {
    std::string vals;
    for (int i = 0; i < n; ++i)
      vals += (i ? " " : "") + scalar_coeff_str(traj.values[s].coeffs[i]);
    std::string label =
        s == 0 ? "start" : "step " + std::to_string(s) + " [" +
                               proc.states[traj.states[s - 1]].name + "]";
    rep.line(label + ": " + vals);
    rep.add("mutate.trajectory", "value-" + std::to_string(s), true, vals, false);
  }
  rep.add_report("mutate", mutation_complex_report(proc),
                 {"triangle-is-complex"});
  return rep.emit(json_out);
}

int run_report(unsigned long long seed, bool json_out) {
  CliReport rep;
  rep.seed = seed;
  const std::set<std::string> axiom_info = {
      "cocommutativity", "degenerate-coassociativity", "right-counit",
      "left-counit"};
  for (const auto& name : catalog_names())
    rep.add_report("report.axioms." + name, check_axioms(builtin_catalog(name).lc),
                   axiom_info);

  StructAlgebra quat = algebra_catalog("quaternions");
  LinMap rho = conjugation_ito(quat, invertible_unit_shift(quat));
  rep.add("report.ito", "conjugation-classifies-ito",
          classify_map(rho, quat).cls == MapClass::ItoDerivative);

  std::mt19937_64 rng(seed);
  rep.add_report("report.forms", form_laws_report(quat, sample_forms(quat, rng, 6)),
                 {"differential-product-rule-opposite-sign"});

  // The two-symbol-step collapsed operators of the (1, X, g) family.
  KrausFamily fam = builtin_xg_family();
  auto collapsed = collapsed_kraus(fam, 2);
  CMat X = fam.ops[1], g = fam.ops[2];
  bool coll_ok =
      (collapsed[0] - fam.ops[0]).cwiseAbs().maxCoeff() == 0 &&
      (collapsed[1] - (X + g * X)).cwiseAbs().maxCoeff() == 0 &&
      (collapsed[2] - g * g).cwiseAbs().maxCoeff() == 0;
  rep.add("report.cp", "collapsed-kraus-display", coll_ok);
  rep.add("report.cp", "semigroup-law",
          superop_distance(compose_circle_g(1, 2, fam),
                           iterate_circle_g(fam, 3)) <= 1e-10);

  rep.add_report("report.poly", matrix_iso_check(pointer_space(1), {2}, 25, seed));
  rep.add_report("report.poly.cross", cross_product_check(50, seed + 1));

  // The worked squaring trajectory 1 -> 2 -> 8 -> 128.
  StructAlgebra A = pointer_space(1);
  MutationState h2 = builtin_mutation_state("H2");
  MutationProcess pure{{h2}, {Scalar::rational(1)}, seed};
  PointerPoly z = PointerPoly::zero(4, A.kind);
  for (int i = 0; i < 4; ++i) z.coeffs[i] = Vect::word({0}, Scalar::rational(1));
  MutationTrajectory traj = mutation_simulate(A, pure, z, 3);
  bool mut_ok = true;
  const long expected[3] = {2, 8, 128};
  for (int s = 1; s <= 3; ++s)
    for (int i = 0; i < 4; ++i)
      if (scalar_coeff_str(traj.values[s].coeffs[i]) !=
          std::to_string(expected[s - 1]))
        mut_ok = false;
  rep.add("report.mutate", "worked-squaring-trajectory", mut_ok);
  return rep.emit(json_out);
}

// Audits that the front door covers the library: every subcommand is
// registered and one operation from each module actually runs.
int run_selftest(const std::vector<std::string>& registered, bool json_out) {
  CliReport rep;
  const std::vector<std::string> required = {"catalog", "axioms", "walks",
                                             "ito",     "forms",  "cp",
                                             "poly",    "mutate", "report"};
  for (const auto& r : required) {
    bool found = false;
    for (const auto& n : registered)
      if (n == r) found = true;
    rep.add("self-test", "subcommand-" + r, found);
  }
  // One smoke call per module behind the subcommands.
  bool smoke = true;
  try {
    builtin_catalog("sl2q");
    check_axioms(builtin_catalog("xg").lc);
    walk_expansion(builtin_catalog("xg").lc, Vect::word({1}, Scalar::rational(1)), 1);
    StructAlgebra quat = algebra_catalog("quaternions");
    classify_map(conjugation_ito(quat, invertible_unit_shift(quat)), quat);
    form_d(quat, form_element(quat, 1));
    iterate_circle_g(builtin_xg_family(), 2);
    pointer_product(pointer_space(1), builtin_catalog("sl2q").lc,
                    PlacementConvention::at_source(),
                    basis_poly(pointer_space(1), 4, 0),
                    basis_poly(pointer_space(1), 4, 0));
    mutation_simulate(pointer_space(1),
                      {{builtin_mutation_state("H2")}, {Scalar::rational(1)}, 1},
                      basis_poly(pointer_space(1), 4, 0), 1);
  } catch (const std::exception& e) {
    smoke = false;
    rep.line(std::string("smoke failure: ") + e.what());
  }
  rep.add("self-test", "module-smoke", smoke);
  return rep.emit(json_out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-coalgebra toolkit: coproducts, walks, Ito maps, forms, "
               "CP iterates, pointer products and mutations"};
  app.require_subcommand(1);

  std::string catalog_name, graph_path, algebra_name = "quaternions";
  std::string kraus_path, config_path, start_vertex, convention = "unit";
  unsigned long long seed = 0;
  double tol = 1e-10;
  bool json_out = false, compare_usual = false;
  int steps = 2;
  std::vector<std::string> registered;
  std::function<int()> action;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json_out, "emit the JSON report");
    registered.push_back(sub->get_name());
    return sub;
  };
  auto coalgebra_opts = [&](CLI::App* sub) {
    sub->add_option("--catalog", catalog_name, "built-in coalgebra name");
    sub->add_option("--graph", graph_path, "weighted digraph JSON file");
    sub->add_option("--convention", convention,
                    "unit | probability | equiprobable");
    return sub;
  };

  CLI::App* c_catalog = common(app.add_subcommand("catalog", "list or show built-ins"));
  c_catalog->add_option("--catalog", catalog_name, "entry to display");
  c_catalog->callback([&] { action = [&] { return run_catalog(catalog_name, json_out); }; });

  CLI::App* c_axioms = coalgebra_opts(common(
      app.add_subcommand("axioms", "structural axiom checks")));
  c_axioms->callback([&] {
    action = [&] {
      return run_axioms(resolve_coalgebra(catalog_name, graph_path, convention),
                        json_out);
    };
  });

  CLI::App* c_walks = coalgebra_opts(common(
      app.add_subcommand("walks", "iterated coproduct expansions")));
  c_walks->add_option("--steps", steps, "symbols per walk word");
  c_walks->add_option("--start", start_vertex, "start symbol name");
  c_walks->callback([&] {
    action = [&] {
      return run_walks(resolve_coalgebra(catalog_name, graph_path, convention),
                       steps, start_vertex, json_out);
    };
  });

  CLI::App* c_ito = common(app.add_subcommand("ito", "Ito map classification and complexes"));
  c_ito->add_option("--algebra", algebra_name, "built-in algebra name");
  c_ito->add_option("--seed", seed, "sampling seed");
  c_ito->callback([&] { action = [&] { return run_ito(algebra_name, seed, json_out); }; });

  CLI::App* c_forms = common(app.add_subcommand("forms", "forms dialgebra reports"));
  c_forms->add_option("--algebra", algebra_name, "built-in algebra name");
  c_forms->add_option("--seed", seed, "sampling seed");
  c_forms->callback([&] { action = [&] { return run_forms(algebra_name, seed, json_out); }; });

  CLI::App* c_cp = common(app.add_subcommand("cp", "graph-driven CP iterates"));
  c_cp->add_option("--kraus", kraus_path, "Kraus family JSON file");
  c_cp->add_option("--steps", steps, "symbols per walk word");
  c_cp->add_option("--tol", tol, "superoperator gap tolerance");
  c_cp->add_flag("--compare-usual", compare_usual,
                 "compare against the ordinary composition power");
  c_cp->callback([&] {
    action = [&] { return run_cp(kraus_path, steps, tol, compare_usual, json_out); };
  });

  CLI::App* c_poly = common(app.add_subcommand("poly", "pointer polynomial products"));
  c_poly->add_option("--seed", seed, "sampling seed");
  c_poly->callback([&] { action = [&] { return run_poly(seed, json_out); }; });

  CLI::App* c_mutate = common(app.add_subcommand("mutate", "mutation trajectories"));
  c_mutate->add_option("--config", config_path, "mutation process JSON file");
  c_mutate->callback([&] { action = [&] { return run_mutate(config_path, json_out); }; });

  CLI::App* c_report = common(app.add_subcommand("report", "run the whole battery"));
  c_report->add_option("--seed", seed, "sampling seed");
  c_report->callback([&] { action = [&] { return run_report(seed, json_out); }; });

  CLI::App* c_self = common(app.add_subcommand("self-test", "audit subcommand coverage"));
  c_self->callback([&] {
    action = [&] { return run_selftest(registered, json_out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
