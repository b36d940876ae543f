#include "sidi/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sidi {

SignedDigraph::SignedDigraph(int n_vertices, std::vector<Arc> arcs)
    : n_vertices_(n_vertices), arcs_(std::move(arcs)) {
  if (n_vertices_ < 1) throw std::invalid_argument("SignedDigraph: need at least one vertex");
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n_vertices_ || a.head < 0 || a.head >= n_vertices_)
      throw std::invalid_argument("SignedDigraph: arc endpoint out of range");
    if (a.tail == a.head) throw std::invalid_argument("SignedDigraph: self-loops are not allowed");
  }
  std::ranges::sort(arcs_, {}, [](const Arc& a) { return std::pair(a.tail, a.head); });
  auto dup = std::ranges::adjacent_find(arcs_, [](const Arc& a, const Arc& b) {
    return a.tail == b.tail && a.head == b.head;
  });
  if (dup != arcs_.end()) throw std::invalid_argument("SignedDigraph: duplicate arc");

  row_start_.assign(static_cast<std::size_t>(n_vertices_) + 1, 0);
  for (const Arc& a : arcs_) ++row_start_[static_cast<std::size_t>(a.tail) + 1];
  for (std::size_t v = 0; v < static_cast<std::size_t>(n_vertices_); ++v)
    row_start_[v + 1] += row_start_[v];
}

std::span<const Arc> SignedDigraph::out_arcs(int v) const {
  const auto b = row_start_[static_cast<std::size_t>(v)];
  const auto e = row_start_[static_cast<std::size_t>(v) + 1];
  return std::span<const Arc>(arcs_).subspan(b, e - b);
}

CyclePair::CyclePair(SignedCycle a, SignedCycle b, int budget_n) : budget_n_(budget_n) {
  if (budget_n < 4) throw std::invalid_argument("CyclePair: budget must be at least 4");
  for (const SignedCycle& c : {a, b}) {
    if (c.length < 2 || c.length % 2 != 0 || c.length > budget_n - 2)
      throw std::invalid_argument("CyclePair: cycle lengths must be even and in [2, n-2]");
  }
  if (a.length + b.length > budget_n)
    throw std::invalid_argument("CyclePair: cycle lengths exceed the vertex budget");
  if (b < a) std::swap(a, b);
  c1_ = a;
  c2_ = b;
}

std::string CyclePair::label() const {
  auto one = [](const SignedCycle& c) { return "C" + std::to_string(c.length) + sign_char(c.sign); };
  return "(" + one(c1_) + "," + one(c2_) + ")";
}

SignedDigraph make_cycle(int length, Sign sign) {
  if (length < 2) throw std::invalid_argument("make_cycle: length must be at least 2");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(length));
  for (int v = 0; v + 1 < length; ++v) arcs.push_back({v, v + 1, Sign::Positive});
  // the closing arc carries the cycle's sign
  arcs.push_back({length - 1, 0, sign});
  return {length, std::move(arcs)};
}

SignedDigraph make_path(int length) {
  if (length < 1) throw std::invalid_argument("make_path: length must be at least 1");
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < length; ++v) arcs.push_back({v, v + 1, Sign::Positive});
  return {length, std::move(arcs)};
}

SignedDigraph join_with_arc(const SignedDigraph& g1, const SignedDigraph& g2, int from_vertex,
                            int to_vertex, Sign sign) {
  if (from_vertex < 0 || from_vertex >= g1.n_vertices())
    throw std::invalid_argument("join_with_arc: from_vertex out of range");
  if (to_vertex < 0 || to_vertex >= g2.n_vertices())
    throw std::invalid_argument("join_with_arc: to_vertex out of range");
  const int shift = g1.n_vertices();
  std::vector<Arc> arcs(g1.arcs().begin(), g1.arcs().end());
  arcs.reserve(g1.n_arcs() + g2.n_arcs() + 1);
  for (const Arc& a : g2.arcs()) arcs.push_back({a.tail + shift, a.head + shift, a.sign});
  arcs.push_back({from_vertex, to_vertex + shift, sign});
  return {shift + g2.n_vertices(), std::move(arcs)};
}

SignedDigraph witness_graph(const CyclePair& pair) {
  return join_with_arc(make_cycle(pair.c1().length, pair.c1().sign),
                       make_cycle(pair.c2().length, pair.c2().sign), 0, 0, Sign::Positive);
}

std::vector<std::vector<int>> strong_component_vertices(const SignedDigraph& g) {
  // Iterative Tarjan.
  const int n = g.n_vertices();
  constexpr int kUnvisited = -1;
  std::vector<int> index(static_cast<std::size_t>(n), kUnvisited);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // (vertex, next out-arc)
  std::vector<std::vector<int>> components;
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == kUnvisited) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto out = g.out_arcs(v);
      if (next < out.size()) {
        const int w = out[next++].head;
        if (index[w] == kUnvisited) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::ranges::sort(comp);
        components.push_back(std::move(comp));
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  std::ranges::sort(components, {}, [](const std::vector<int>& c) { return c.front(); });
  return components;
}

SignedDigraph induced_subgraph(const SignedDigraph& g, std::span<const int> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.n_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (int v : vertices) {
    for (const Arc& a : g.out_arcs(v)) {
      if (local[a.head] >= 0) arcs.push_back({local[v], local[a.head], a.sign});
    }
  }
  return {static_cast<int>(vertices.size()), std::move(arcs)};
}

std::vector<SignedDigraph> strong_components(const SignedDigraph& g) {
  std::vector<SignedDigraph> out;
  for (const auto& comp : strong_component_vertices(g)) out.push_back(induced_subgraph(g, comp));
  return out;
}

std::optional<SignedCycle> as_signed_cycle(const SignedDigraph& g) {
  const int n = g.n_vertices();
  if (n < 2 || g.n_arcs() != static_cast<std::size_t>(n)) return std::nullopt;
  std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (g.out_arcs(v).size() != 1) return std::nullopt;
  }
  for (const Arc& a : g.arcs()) ++in_degree[a.head];
  if (std::ranges::any_of(in_degree, [](int d) { return d != 1; })) return std::nullopt;

  // Functional graph with in/out degree 1: a single cycle iff the walk from 0
  // returns after visiting every vertex.
  Sign sign = Sign::Positive;
  int v = 0;
  int steps = 0;
  do {
    const Arc& a = g.out_arcs(v).front();
    sign = sign * a.sign;
    v = a.head;
    ++steps;
  } while (v != 0);
  if (steps != n) return std::nullopt;
  return SignedCycle{n, sign};
}

Sign cycle_sign(const SignedDigraph& g) {
  auto c = as_signed_cycle(g);
  if (!c) throw std::invalid_argument("cycle_sign: input is not a single directed cycle");
  return c->sign;
}

}  // namespace sidi
