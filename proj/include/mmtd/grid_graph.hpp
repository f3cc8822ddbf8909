#pragma once

// Oriented multigraph of a grid, bridges (single-line cuts), spanning
// forests, and the fundamental cycle / cut bases they induce.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mmtd/case_io.hpp"
#include "mmtd/errors.hpp"

namespace mmtd {

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
};

/// Buses are vertices 0..N-1 in ascending bus-id order; edges keep the case's
/// branch order and from->to orientation.
class Topology {
 public:
  Topology() = default;

  Topology(std::size_t bus_count, std::vector<Edge> edges, std::size_t reference = 0, std::vector<int> bus_ids = {})
      : bus_count_(bus_count), reference_(reference), edges_(std::move(edges)), bus_ids_(std::move(bus_ids)) {
    if (bus_ids_.empty()) {
      bus_ids_.resize(bus_count_);
      std::iota(bus_ids_.begin(), bus_ids_.end(), 1);
    }
    if (bus_ids_.size() != bus_count_) throw std::invalid_argument("bus id list does not match bus count");
    if (bus_count_ > 0 && reference_ >= bus_count_) throw std::invalid_argument("reference vertex out of range");
    for (const auto& e : edges_)
      if (e.from >= bus_count_ || e.to >= bus_count_) throw std::invalid_argument("edge endpoint out of range");
    label_components();
  }

  static Topology from_case(const GridCase& gc) {
    std::vector<int> ids;
    for (const auto& b : gc.buses) ids.push_back(b.id);
    std::sort(ids.begin(), ids.end());
    auto vertex = [&](int id) {
      const auto it = std::lower_bound(ids.begin(), ids.end(), id);
      if (it == ids.end() || *it != id) throw ValidationError("undeclared bus " + std::to_string(id));
      return static_cast<std::size_t>(it - ids.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(gc.branches.size());
    for (const auto& br : gc.branches) edges.push_back({vertex(br.from), vertex(br.to)});
    const auto ref = vertex(gc.reference_bus());
    const auto count = ids.size();
    return Topology(count, std::move(edges), ref, std::move(ids));
  }

  std::size_t bus_count() const noexcept { return bus_count_; }
  std::size_t branch_count() const noexcept { return edges_.size(); }
  std::size_t reference() const noexcept { return reference_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t l) const { return edges_.at(l); }
  const std::vector<int>& bus_ids() const noexcept { return bus_ids_; }

  std::size_t component_count() const noexcept { return component_count_; }
  std::size_t component_of(std::size_t v) const { return component_.at(v); }
  bool connected() const noexcept { return component_count_ <= 1; }

  /// Dimension of the cut space: buses minus connected components. Equals the
  /// state count n for a connected system.
  std::size_t cut_space_dimension() const noexcept { return bus_count_ - component_count_; }

  /// Same graph with every branch reversed.
  Topology reversed() const {
    std::vector<Edge> rev;
    rev.reserve(edges_.size());
    for (const auto& e : edges_) rev.push_back({e.to, e.from});
    return Topology(bus_count_, std::move(rev), reference_, bus_ids_);
  }

 private:
  void label_components() {
    component_.assign(bus_count_, std::numeric_limits<std::size_t>::max());
    std::vector<std::vector<std::size_t>> adj(bus_count_);
    for (const auto& e : edges_) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    component_count_ = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < bus_count_; ++s) {
      if (component_[s] != std::numeric_limits<std::size_t>::max()) continue;
      component_[s] = component_count_;
      stack.push_back(s);
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
          if (component_[w] == std::numeric_limits<std::size_t>::max()) {
            component_[w] = component_count_;
            stack.push_back(w);
          }
      }
      ++component_count_;
    }
  }

  std::size_t bus_count_ = 0;
  std::size_t reference_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> bus_ids_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

/// Branches whose removal disconnects their component, ascending. One DFS
/// with lowpoints; the parent is tracked by edge id so parallel branches are
/// never reported.
inline std::vector<std::size_t> find_bridges(const Topology& t) {
  const std::size_t nv = t.bus_count();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);  // (neighbour, edge)
  for (std::size_t l = 0; l < t.branch_count(); ++l) {
    adj[t.edge(l).from].push_back({t.edge(l).to, l});
    adj[t.edge(l).to].push_back({t.edge(l).from, l});
  }
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(nv, unseen), low(nv, 0);
  std::vector<std::size_t> bridges;
  std::size_t clock = 0;

  struct Frame {
    std::size_t v;
    std::size_t via;  // edge used to enter v
    std::size_t next;  // position in adj[v]
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < nv; ++root) {
    if (order[root] != unseen) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, unseen, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const auto [w, l] = adj[f.v][f.next++];
        if (l == f.via) continue;
        if (order[w] == unseen) {
          order[w] = low[w] = clock++;
          stack.push_back({w, l, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        auto& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > order[parent.v]) bridges.push_back(done.via);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

inline std::vector<bool> bridge_mask(const Topology& t) {
  std::vector<bool> mask(t.branch_count(), false);
  for (auto l : find_bridges(t)) mask[l] = true;
  return mask;
}

struct SpanningForest {
  std::vector<std::size_t> tree;  ///< ascending branch indices
  std::vector<std::size_t> cotree;  ///< ascending complement
  std::vector<bool> in_tree;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline SpanningForest forest_from_mask(std::vector<bool> in_tree) {
  SpanningForest f;
  for (std::size_t l = 0; l < in_tree.size(); ++l) (in_tree[l] ? f.tree : f.cotree).push_back(l);
  f.in_tree = std::move(in_tree);
  return f;
}

// Forest rooted per component (the reference vertex roots its own component),
// with DFS entry/exit times for subtree membership tests.
struct RootedForest {
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent, parent_edge, depth, root, tin, tout;

  RootedForest(const Topology& t, const SpanningForest& f) {
    const std::size_t nv = t.bus_count();
    if (f.in_tree.size() != t.branch_count()) throw std::invalid_argument("forest does not match topology");
    parent.assign(nv, none);
    parent_edge.assign(nv, none);
    depth.assign(nv, 0);
    root.assign(nv, none);
    tin.assign(nv, 0);
    tout.assign(nv, 0);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
    for (auto l : f.tree) {
      adj[t.edge(l).from].push_back({t.edge(l).to, l});
      adj[t.edge(l).to].push_back({t.edge(l).from, l});
    }
    std::size_t clock = 0;
    auto grow = [&](std::size_t r) {
      root[r] = r;
      tin[r] = clock++;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{r, 0}};
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < adj[v].size()) {
          const auto [w, l] = adj[v][next++];
          if (l == parent_edge[v]) continue;
          if (root[w] != none) throw GraphError("spanning forest contains a cycle");
          root[w] = r;
          parent[w] = v;
          parent_edge[w] = l;
          depth[w] = depth[v] + 1;
          tin[w] = clock++;
          stack.push_back({w, 0});
        } else {
          tout[v] = clock++;
          stack.pop_back();
        }
      }
    };
    if (nv > 0) grow(t.reference());
    for (std::size_t v = 0; v < nv; ++v)
      if (root[v] == none) grow(v);
  }

  bool in_subtree(std::size_t v, std::size_t top) const { return tin[top] <= tin[v] && tout[v] <= tout[top]; }
};

}  // namespace detail

/// Minimum-weight spanning forest (Kruskal). Ties go to the lowest branch
/// index; an empty weight list means uniform weights.
inline SpanningForest spanning_forest(const Topology& t, std::span<const double> weights = {}) {
  const std::size_t m = t.branch_count();
  if (!weights.empty() && weights.size() != m) throw std::invalid_argument("one weight per branch required");
  for (double w : weights)
    if (!std::isfinite(w)) throw std::invalid_argument("branch weights must be finite");
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (!weights.empty())
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
  detail::DisjointSets sets(t.bus_count());
  std::vector<bool> in_tree(m, false);
  for (auto l : order)
    if (sets.unite(t.edge(l).from, t.edge(l).to)) in_tree[l] = true;
  return detail::forest_from_mask(std::move(in_tree));
}

/// Rows are fundamental cycles, one per cotree branch (ascending).
struct LoopMatrix {
  Eigen::MatrixXd G;
  std::vector<std::size_t> cotree;
};

/// Each cycle starts along its cotree branch in that branch's from->to
/// direction and returns through the forest. Entry +1 when the cycle walks a
/// branch from->to, -1 when it walks it backwards.
inline LoopMatrix fundamental_cycles(const Topology& t, const SpanningForest& f) {
  const detail::RootedForest rf(t, f);
  LoopMatrix loops;
  loops.cotree = f.cotree;
  loops.G = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(f.cotree.size()),
                                  static_cast<Eigen::Index>(t.branch_count()));
  for (std::size_t i = 0; i < f.cotree.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const auto e = f.cotree[i];
    const auto u = t.edge(e).from;
    const auto v = t.edge(e).to;
    if (rf.root[u] != rf.root[v]) throw GraphError("cotree branch endpoints are not connected by the forest");
    loops.G(row, static_cast<Eigen::Index>(e)) += 1.0;
    // Walk v -> lca upward, and u -> lca upward (that segment is traversed downward).
    auto a = v;
    auto b = u;
    while (a != b) {
      if (rf.depth[a] >= rf.depth[b]) {
        const auto l = rf.parent_edge[a];
        loops.G(row, static_cast<Eigen::Index>(l)) += (t.edge(l).from == a) ? 1.0 : -1.0;
        a = rf.parent[a];
      } else {
        const auto l = rf.parent_edge[b];
        loops.G(row, static_cast<Eigen::Index>(l)) += (t.edge(l).from == rf.parent[b]) ? 1.0 : -1.0;
        b = rf.parent[b];
      }
    }
  }
  return loops;
}

/// Rows are fundamental cuts, one per tree branch (ascending).
struct CutBasis {
  Eigen::MatrixXd S;
  std::vector<std::size_t> tree;
  /// side[j][v]: vertex v is on the from-side of tree branch tree[j] once that
  /// branch is removed from the forest.
  std::vector<std::vector<bool>> side;
};

/// S(j, l) = +1 when branch l leaves the side of cut j, -1 when it enters it.
inline CutBasis fundamental_cuts(const Topology& t, const SpanningForest& f) {
  const detail::RootedForest rf(t, f);
  CutBasis cuts;
  cuts.tree = f.tree;
  cuts.S = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(f.tree.size()),
                                 static_cast<Eigen::Index>(t.branch_count()));
  cuts.side.reserve(f.tree.size());
  for (std::size_t j = 0; j < f.tree.size(); ++j) {
    const auto l = f.tree[j];
    const auto p = t.edge(l).from;
    const auto q = t.edge(l).to;
    std::vector<bool> side(t.bus_count(), false);
    if (rf.parent_edge[p] == l) {
      for (std::size_t v = 0; v < t.bus_count(); ++v) side[v] = rf.in_subtree(v, p);
    } else {
      for (std::size_t v = 0; v < t.bus_count(); ++v) side[v] = rf.root[v] == rf.root[p] && !rf.in_subtree(v, q);
    }
    for (std::size_t k = 0; k < t.branch_count(); ++k) {
      const bool from_in = side[t.edge(k).from];
      const bool to_in = side[t.edge(k).to];
      if (from_in != to_in) cuts.S(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = from_in ? 1.0 : -1.0;
    }
    cuts.side.push_back(std::move(side));
  }
  return cuts;
}

struct DeploymentPlan {
  std::vector<std::size_t> deployed;  ///< K_D, ascending
  std::vector<std::size_t> single_line_cuts;  ///< every bridge of the topology
  std::vector<std::size_t> forest;  ///< a maximal forest inside K_D
  std::size_t m_d = 0;  ///< |forest|
  std::size_t m_sc_d = 0;  ///< bridges inside that forest
  std::size_t supremum = 0;  ///< L_D = m - n + m_D - m_sc_D
};

/// Highest rank the composite cycle matrix can reach when only the branches in
/// `deployed` can be perturbed.
inline DeploymentPlan analyze_deployment(const Topology& t, std::vector<std::size_t> deployed) {
  std::sort(deployed.begin(), deployed.end());
  deployed.erase(std::unique(deployed.begin(), deployed.end()), deployed.end());
  for (auto l : deployed)
    if (l >= t.branch_count()) throw std::invalid_argument("deployed branch " + std::to_string(l) + " out of range");
  DeploymentPlan plan;
  plan.single_line_cuts = find_bridges(t);
  const auto is_bridge = bridge_mask(t);
  detail::DisjointSets sets(t.bus_count());
  for (auto l : deployed)
    if (sets.unite(t.edge(l).from, t.edge(l).to)) {
      plan.forest.push_back(l);
      if (is_bridge[l]) ++plan.m_sc_d;
    }
  plan.m_d = plan.forest.size();
  plan.deployed = std::move(deployed);
  plan.supremum = t.branch_count() - t.cut_space_dimension() + plan.m_d - plan.m_sc_d;
  return plan;
}

/// Smallest deployment that reaches the topology supremum m - m_sc: a
/// spanning forest minus its bridges.
inline DeploymentPlan deployment_plan(const Topology& t, std::span<const double> weights = {}) {
  const auto forest = spanning_forest(t, weights);
  const auto is_bridge = bridge_mask(t);
  std::vector<std::size_t> deployed;
  for (auto l : forest.tree)
    if (!is_bridge[l]) deployed.push_back(l);
  return analyze_deployment(t, std::move(deployed));
}

}  // namespace mmtd
