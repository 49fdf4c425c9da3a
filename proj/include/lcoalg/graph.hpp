#pragma once
// Weighted oriented graphs, JSON (de)serialization, and seeded random walks.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcoalg/tensor.hpp"

namespace lcoalg {

struct GraphValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string id;
  int src = 0, dst = 0;
  Scalar weight = Scalar::rational(1);
};

enum class ProbabilityConvention { given_weights, equiprobable, unit_weights };

struct WeightedDigraph {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::optional<int> identity;  // index of a distinguished identity vertex

  int vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return static_cast<int>(i);
    throw GraphValidationError("unknown vertex: " + name);
  }

  std::vector<const Arrow*> out_arrows(int v) const {
    std::vector<const Arrow*> r;
    for (const auto& a : arrows)
      if (a.src == v) r.push_back(&a);
    return r;
  }
  std::vector<const Arrow*> in_arrows(int v) const {
    std::vector<const Arrow*> r;
    for (const auto& a : arrows)
      if (a.dst == v) r.push_back(&a);
    return r;
  }
  bool is_sink(int v) const { return out_arrows(v).empty(); }
  bool is_source(int v) const { return in_arrows(v).empty(); }

  Basis basis() const { return Basis{vertices, identity}; }

  // The effective arrow weight under a probability convention.
  Scalar step_weight(const Arrow& a, ProbabilityConvention conv) const {
    switch (conv) {
      case ProbabilityConvention::given_weights:
        return a.weight;
      case ProbabilityConvention::equiprobable:
        return Scalar::rational(1, long(out_arrows(a.src).size()));
      case ProbabilityConvention::unit_weights:
        return Scalar::rational(1);
    }
    throw GraphValidationError("bad convention");
  }
};

inline WeightedDigraph load_graph(const nlohmann::json& doc) {
  WeightedDigraph g;
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw GraphValidationError("graph document needs a \"vertices\" array");
  std::set<std::string> seen;
  for (const auto& v : doc["vertices"]) {
    std::string name = v.get<std::string>();
    if (!seen.insert(name).second)
      throw GraphValidationError("duplicate vertex: " + name);
    g.vertices.push_back(name);
  }
  for (const auto& a : doc.value("arrows", nlohmann::json::array())) {
    Arrow arrow;
    arrow.id = a.value("id", "a" + std::to_string(g.arrows.size()));
    arrow.src = g.vertex_index(a.at("src").get<std::string>());
    arrow.dst = g.vertex_index(a.at("dst").get<std::string>());
    arrow.weight = Scalar::rational(a.value("weight", std::string("1")));
    if (arrow.weight.as_rational() < 0)
      throw GraphValidationError("negative weight on arrow " + arrow.id);
    g.arrows.push_back(arrow);
  }
  if (doc.contains("identity") && !doc["identity"].is_null())
    g.identity = g.vertex_index(doc["identity"].get<std::string>());
  return g;
}

inline nlohmann::json save_graph(const WeightedDigraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertices;
  doc["arrows"] = nlohmann::json::array();
  for (const auto& a : g.arrows)
    doc["arrows"].push_back({{"id", a.id},
                             {"src", g.vertices[a.src]},
                             {"dst", g.vertices[a.dst]},
                             {"weight", a.weight.as_rational().get_str()}});
  if (g.identity)
    doc["identity"] = g.vertices[*g.identity];
  else
    doc["identity"] = nullptr;
  return doc;
}

// Out-weights must sum to 1 on every non-sink vertex.
inline void validate_probabilities(const WeightedDigraph& g) {
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    auto out = g.out_arrows(static_cast<int>(v));
    if (out.empty()) continue;
    Scalar sum = Scalar::rational(0);
    for (const Arrow* a : out) sum += a->weight;
    if (sum != Scalar::rational(1))
      throw GraphValidationError("out-weights at vertex " + g.vertices[v] +
                                 " sum to " + sum.str() + ", not 1");
  }
}

// Flip every arrow.
inline WeightedDigraph reverse(const WeightedDigraph& g) {
  WeightedDigraph r = g;
  for (auto& a : r.arrows) std::swap(a.src, a.dst);
  return r;
}

// Adds a fresh identity vertex with a loop and wires sinks -> I and
// I -> sources.  When there are no sources the identity stays group-like.
inline WeightedDigraph adjoin_identity_vertex(const WeightedDigraph& g,
                                              const std::string& name = "I") {
  WeightedDigraph r = g;
  if (r.identity) return r;
  int iv = static_cast<int>(r.vertices.size());
  r.vertices.push_back(name);
  r.identity = iv;
  std::vector<int> sinks, sources;
  for (int v = 0; v < iv; ++v) {
    if (g.is_sink(v)) sinks.push_back(v);
    if (g.is_source(v)) sources.push_back(v);
  }
  for (int v : sinks)
    r.arrows.push_back({"to_id_" + g.vertices[v], v, iv, Scalar::rational(1)});
  long fanout = 1 + long(sources.size());
  r.arrows.push_back({"id_loop", iv, iv, Scalar::rational(1, fanout)});
  for (int v : sources)
    r.arrows.push_back({"from_id_" + g.vertices[v], iv, v, Scalar::rational(1, fanout)});
  return r;
}

// One seeded random step sequence; returns length+1 vertices.
inline std::vector<int> sample_walk(const WeightedDigraph& g, int start, int length,
                                    uint64_t seed,
                                    ProbabilityConvention conv = ProbabilityConvention::given_weights) {
  if (conv == ProbabilityConvention::unit_weights)
    throw GraphValidationError("sampling requires a probability convention");
  std::mt19937_64 rng(seed);
  std::vector<int> walk{start};
  int cur = start;
  for (int s = 0; s < length; ++s) {
    auto out = g.out_arrows(cur);
    if (out.empty())
      throw GraphValidationError("walk stuck at sink " + g.vertices[cur]);
    std::vector<double> w;
    w.reserve(out.size());
    for (const Arrow* a : out)
      w.push_back(conv == ProbabilityConvention::equiprobable
                      ? 1.0
                      : g.step_weight(*a, conv).to_cplx().real());
    std::discrete_distribution<int> dist(w.begin(), w.end());
    cur = out[dist(rng)]->dst;
    walk.push_back(cur);
  }
  return walk;
}

}  // namespace lcoalg
