#include "qalpha/dynamics.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qalpha/conway.hpp"
#include "qalpha/factorize.hpp"

namespace qalpha {

namespace {

using Vertex = DynamicsGraph::Vertex;

Vertex theta_raw(const FieldSpec& f, Bits alpha, Vertex v, Vertex inf) {
  if (v == 0 || v == inf) return inf;
  return v ^ f.mul(alpha, f.inv(v));
}

}  // namespace

DynamicsGraph build_graph(const FieldSpec& spec, const FieldElement& alpha) {
  require_same_field(spec, alpha.spec());
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidParameter, "build_graph needs alpha != 0");
  if (spec.degree() > kGraphDegreeCap) {
    throw Error(ErrorCode::UnsupportedScale, "graph of s=" + std::to_string(spec.degree()) + " exceeds the cap s <= " +
                                                 std::to_string(kGraphDegreeCap));
  }
  DynamicsGraph g(spec, alpha);
  const Vertex inf = spec.size();
  const std::size_t n = inf + 1;
  g.successor_.resize(n);
  for (Vertex v = 0; v < n; ++v) g.successor_[v] = theta_raw(spec, alpha.bits(), v, inf);

  constexpr std::uint32_t kNone = UINT32_MAX;
  enum : std::uint8_t { kUnseen, kOnPath, kDone };
  std::vector<std::uint8_t> state(n, kUnseen);
  std::vector<Vertex> root(n);  // cycle vertex each tree vertex drains into
  g.component_.assign(n, kNone);
  g.distance_.assign(n, 0);

  std::vector<Vertex> path;
  for (Vertex start = 0; start < n; ++start) {
    if (state[start] != kUnseen) continue;
    path.clear();
    Vertex v = start;
    while (state[v] == kUnseen) {
      state[v] = kOnPath;
      path.push_back(v);
      v = g.successor_[v];
    }
    std::size_t tail = path.size();
    if (state[v] == kOnPath) {
      // New cycle: path[pos..] are its vertices.
      auto pos = static_cast<std::size_t>(std::find(path.begin(), path.end(), v) - path.begin());
      auto id = static_cast<std::uint32_t>(g.components_.size());
      ComponentSignature sig;
      sig.cycle_length = path.size() - pos;
      g.components_.push_back(sig);
      for (std::size_t i = pos; i < path.size(); ++i) {
        Vertex c = path[i];
        g.component_[c] = id;
        root[c] = c;
        state[c] = kDone;
      }
      tail = pos;
    }
    for (std::size_t i = tail; i-- > 0;) {
      Vertex u = path[i], next = g.successor_[u];
      g.component_[u] = g.component_[next];
      g.distance_[u] = g.distance_[next] + 1;
      root[u] = g.distance_[next] == 0 ? next : root[next];
      state[u] = kDone;
    }
  }

  std::vector<unsigned> tree_depth(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto& sig = g.components_[g.component_[v]];
    ++sig.vertex_count;
    if (v == inf) sig.contains_infinity = true;
    if (g.distance_[v] > 0) tree_depth[root[v]] = std::max(tree_depth[root[v]], g.distance_[v]);
  }
  std::vector<bool> seen(g.components_.size(), false);
  for (Vertex v = 0; v < n; ++v) {
    if (g.distance_[v] != 0) continue;
    auto id = g.component_[v];
    auto& sig = g.components_[id];
    if (!seen[id]) {
      seen[id] = true;
      sig.tree_depth = sig.min_tree_depth = tree_depth[v];
    } else {
      sig.tree_depth = std::max(sig.tree_depth, tree_depth[v]);
      sig.min_tree_depth = std::min(sig.min_tree_depth, tree_depth[v]);
    }
  }
  return g;
}

std::vector<Vertex> DynamicsGraph::predecessors(Vertex v) const {
  std::vector<Vertex> out;
  if (v == infinity()) {
    out = {0, infinity()};
    return out;
  }
  if (v >= infinity()) throw Error(ErrorCode::InvalidInput, "vertex out of range");
  // theta(x) = v  <=>  x^2 + v x + alpha = 0: 0 or 2 points, exactly one for
  // v = 0. Scan rather than solve, graphs are desk-sized.
  for (Vertex x = 1; x < infinity(); ++x) {
    if (successor_[x] == v) out.push_back(x);
  }
  return out;
}

std::vector<ComponentSignature> DynamicsGraph::signature_multiset() const {
  auto out = components_;
  std::sort(out.begin(), out.end());
  return out;
}

ProjectivePoint DynamicsGraph::point(Vertex v) const {
  if (v == infinity()) return ProjectivePoint::infinity();
  return ProjectivePoint(FieldElement(spec_, v));
}

Vertex DynamicsGraph::index(const ProjectivePoint& p) const {
  if (p.is_infinity()) return infinity();
  require_same_field(spec_, p.value().spec());
  return p.value().bits();
}

std::string DynamicsGraph::label(Vertex v) const {
  if (v == infinity()) return "inf";
  if (v == 0) return "zero";
  if (spec_.has_generator()) return std::to_string(spec_.dlog(v));
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

bool is_periodic(const ProjectivePoint& p, const DynamicsGraph& g) { return g.on_cycle(g.index(p)); }

namespace {

// Realization of GF(2^(s n)) containing GF(2^s): big field plus the image of
// the small field's canonical root x.
struct Embedding {
  FieldSpec big;
  Bits image_of_root;

  Bits map(const FieldSpec& small, Bits a) const {
    Bits acc = 0, power = 1;
    for (unsigned i = 0; i < small.degree(); ++i) {
      if ((a >> i) & 1) acc ^= power;
      power = big.mul(power, image_of_root);
    }
    return acc;
  }
};

Embedding embed(const FieldSpec& small, unsigned extension) {
  const unsigned d = small.degree() * extension;
  FieldSpec big = conway_modulus(d) ? FieldSpec::conway(d) : [&] {
    // Smallest irreducible modulus of degree d over GF(2).
    for (Bits m = (Bits{1} << d) | 1;; m += 2) {
      if (gf2x::is_irreducible(m)) return FieldSpec::with_modulus(d, m);
    }
  }();
  const Polynomial small_modulus = Polynomial::from_gf2(big, small.modulus());
  for (Bits e = 1; e < big.size(); ++e) {
    if (eval_raw(small_modulus, e) == 0) return {big, e};
  }
  throw Error(ErrorCode::InternalContract, "no root of " + small.to_string() + " in " + big.to_string());
}

}  // namespace

bool has_periodic_roots(const Polynomial& f, const FieldElement& alpha) {
  require_same_field(f.spec(), alpha.spec());
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidParameter, "has_periodic_roots needs alpha != 0");
  if (f.degree() < 1) throw Error(ErrorCode::InvalidInput, "has_periodic_roots needs a non-constant polynomial");
  const unsigned n = static_cast<unsigned>(f.degree());
  if (f.spec().degree() * n > kPeriodicRootScaleCap) {
    throw Error(ErrorCode::UnsupportedScale, "has_periodic_roots: s*deg = " + std::to_string(f.spec().degree() * n) +
                                                 " exceeds " + std::to_string(kPeriodicRootScaleCap));
  }
  if (!is_irreducible(f)) throw Error(ErrorCode::Reducible, f.to_string() + " is reducible");

  const Embedding emb = embed(f.spec(), n);
  const FieldSpec& big = emb.big;
  std::vector<Bits> lifted;
  for (Bits c : f.raw()) lifted.push_back(emb.map(f.spec(), c));
  const Polynomial f_big(big, std::move(lifted));
  const Bits a = emb.map(f.spec(), alpha.bits());

  Bits root = 0;
  bool found = false;
  for (Bits x = 0; x < big.size() && !found; ++x) {
    if (eval_raw(f_big, x) == 0) {
      root = x;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InternalContract, "no root of " + f.to_string() + " in " + big.to_string());

  const Vertex inf = big.size();
  Vertex v = root;
  for (std::uint64_t step = 0; step <= big.size(); ++step) {
    v = theta_raw(big, a, v, inf);
    if (v == root) return true;
    if (v == inf) return false;
  }
  return false;
}

namespace {

// zero, then generator powers by exponent, then infinity.
std::uint64_t label_rank(const DynamicsGraph& g, Vertex v) {
  if (v == 0) return 0;
  if (v == g.infinity()) return g.infinity() + 1;
  return 1 + (g.spec().has_generator() ? g.spec().dlog(v) : v);
}

std::string dot_id(const std::string& label) {
  bool plain = std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
               std::all_of(label.begin(), label.end(), [](char c) { return c >= 'a' && c <= 'z'; });
  return plain ? label : "\"" + label + "\"";
}

}  // namespace

std::string export_dot(const DynamicsGraph& g) {
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return label_rank(g, a) < label_rank(g, b); });

  std::ostringstream os;
  os << "digraph theta {\n";
  os << "  // field " << g.spec().to_string() << ", alpha " << g.alpha().to_string() << "\n";
  for (Vertex v : order) os << "  " << dot_id(g.label(v)) << ";\n";
  for (Vertex v : order) os << "  " << dot_id(g.label(v)) << " -> " << dot_id(g.label(g.successor(v))) << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const DynamicsGraph& g, int indent) {
  auto comps = g.components();
  std::sort(comps.begin(), comps.end(), [](const ComponentSignature& a, const ComponentSignature& b) {
    return std::tie(b.cycle_length, b.tree_depth, b.vertex_count) < std::tie(a.cycle_length, a.tree_depth, a.vertex_count);
  });
  nlohmann::ordered_json out;
  out["s"] = g.spec().degree();
  out["alpha"] = g.alpha().to_string();
  out["components"] = nlohmann::ordered_json::array();
  for (const auto& c : comps) {
    nlohmann::ordered_json item;
    item["cycle"] = c.cycle_length;
    item["depth"] = c.tree_depth;
    item["vertices"] = c.vertex_count;
    item["infinity"] = c.contains_infinity;
    out["components"].push_back(std::move(item));
  }
  return out.dump(indent);
}

std::vector<std::string> check_structure(const DynamicsGraph& g) {
  std::vector<std::string> issues;
  const unsigned s = g.spec().degree();
  const unsigned deep = nu2(s) + 2;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    const auto& c = g.components()[i];
    total += c.vertex_count;
    if (c.min_tree_depth != c.tree_depth) {
      issues.push_back("component " + std::to_string(i) + ": tree depths range " + std::to_string(c.min_tree_depth) +
                       ".." + std::to_string(c.tree_depth));
    }
    if (!c.contains_infinity && c.tree_depth != 1 && c.tree_depth != deep) {
      issues.push_back("component " + std::to_string(i) + ": depth " + std::to_string(c.tree_depth) + " not in {1, " +
                       std::to_string(deep) + "}");
    }
  }
  if (total != g.spec().size() + 1) issues.push_back("vertex census " + std::to_string(total) + " != 2^s + 1");

  std::vector<unsigned> in_tree(g.vertex_count(), 0), in_cycle(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Vertex w = g.successor(v);
    (g.on_cycle(v) ? in_cycle : in_tree)[w] += 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.on_cycle(v)) {
      if (in_cycle[v] != 1 || in_tree[v] > 1) issues.push_back("cycle vertex " + g.label(v) + " has bad fiber");
    } else if (v == 0) {
      // x^2 = alpha has exactly one root, so zero has the single preimage sqrt(alpha).
      if (in_tree[v] != 1) issues.push_back("zero has " + std::to_string(in_tree[v]) + " predecessors");
    } else if (in_tree[v] != 0 && in_tree[v] != 2) {
      issues.push_back("tree vertex " + g.label(v) + " has " + std::to_string(in_tree[v]) + " predecessors");
    }
    if (g.distance_to_cycle(v) > g.vertex_count()) issues.push_back("vertex " + g.label(v) + " never reaches a cycle");
  }
  return issues;
}

std::uint64_t conjugation_mismatches(const DynamicsGraph& base, const DynamicsGraph& target) {
  require_same_field(base.spec(), target.spec());
  if (!base.alpha().is_one()) throw Error(ErrorCode::InvalidParameter, "base graph must be theta_1");
  const FieldElement gamma = sqrt(target.alpha());
  std::uint64_t bad = 0;
  for (Vertex v = 0; v < base.vertex_count(); ++v) {
    ProjectivePoint p = base.point(v);
    ProjectivePoint lhs = psi(base.point(base.successor(v)), gamma);
    ProjectivePoint rhs = target.successor(psi(p, gamma));
    if (!(lhs == rhs)) ++bad;
  }
  return bad;
}

}  // namespace qalpha
