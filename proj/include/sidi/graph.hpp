#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sidi {

enum class Sign : int { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
  return to_int(a) * to_int(b) > 0 ? Sign::Positive : Sign::Negative;
}
constexpr char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

// Orders Negative before Positive.
constexpr std::strong_ordering operator<=>(Sign a, Sign b) {
  return to_int(a) <=> to_int(b);
}

struct Arc {
  int tail = 0;
  int head = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Signed digraph on dense vertex ids [0, n). Arcs are kept sorted by
/// (tail, head); duplicates and self-loops are rejected at construction.
class SignedDigraph {
 public:
  SignedDigraph() = default;
  SignedDigraph(int n_vertices, std::vector<Arc> arcs);

  int n_vertices() const { return n_vertices_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t n_arcs() const { return arcs_.size(); }

  // Arcs leaving v, in head order.
  std::span<const Arc> out_arcs(int v) const;

  friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

 private:
  int n_vertices_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> row_start_;  // CSR offsets into arcs_
};

struct SignedCycle {
  int length = 2;
  Sign sign = Sign::Positive;

  friend auto operator<=>(const SignedCycle&, const SignedCycle&) = default;
};

/// Element of the bicyclic family: two vertex-disjoint signed even cycles
/// whose lengths fit in a vertex budget. Always stored in canonical order
/// (length ascending, then Negative before Positive).
class CyclePair {
 public:
  CyclePair(SignedCycle a, SignedCycle b, int budget_n);

  const SignedCycle& c1() const { return c1_; }
  const SignedCycle& c2() const { return c2_; }
  int budget_n() const { return budget_n_; }
  int total_length() const { return c1_.length + c2_.length; }
  bool same_sign() const { return c1_.sign == c2_.sign; }

  // "(C2-,C24-)"
  std::string label() const;

  friend bool operator==(const CyclePair&, const CyclePair&) = default;
  friend auto operator<=>(const CyclePair&, const CyclePair&) = default;

 private:
  SignedCycle c1_;
  SignedCycle c2_;
  int budget_n_ = 4;
};

SignedDigraph make_cycle(int length, Sign sign);
SignedDigraph make_path(int length);

/// Disjoint union of g1 and g2 (g2's ids shifted by g1.n_vertices()) plus one
/// arc from g1's `from_vertex` to g2's `to_vertex`.
SignedDigraph join_with_arc(const SignedDigraph& g1, const SignedDigraph& g2,
                            int from_vertex, int to_vertex, Sign sign);

/// Two cycles of the pair joined by a single arc; a connected witness graph.
SignedDigraph witness_graph(const CyclePair& pair);

template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const SignedDigraph& g) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(g.n_vertices(), g.n_vertices());
  for (const Arc& arc : g.arcs()) a(arc.tail, arc.head) = static_cast<Scalar>(to_int(arc.sign));
  return a;
}

/// Vertex sets of the strong components, each sorted ascending; components
/// ordered by their smallest vertex id.
std::vector<std::vector<int>> strong_component_vertices(const SignedDigraph& g);

/// Induced signed subdigraph on `vertices` (relabelled in the given order).
SignedDigraph induced_subgraph(const SignedDigraph& g, std::span<const int> vertices);

std::vector<SignedDigraph> strong_components(const SignedDigraph& g);

/// Returns the cycle if g is exactly one directed cycle through all its vertices.
std::optional<SignedCycle> as_signed_cycle(const SignedDigraph& g);

/// Product of arc signs. Throws std::invalid_argument unless g is a single cycle.
Sign cycle_sign(const SignedDigraph& g);

}  // namespace sidi
