#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bcast {

enum class GraphFamily { Path, Cycle, MynhardtRoux, Custom };

/// Simple connected undirected graph with eagerly computed metric data
/// (all-pairs distances, eccentricities, diameter, radius, minimum degree).
/// Immutable after construction; cheap to share by const reference and safe
/// to read concurrently. Intended scale is a few hundred vertices.
class Graph {
 public:
  /// Path on vertices 0..n-1, numbered left to right. Requires n >= 2.
  static Graph path(int n);

  /// Cycle on vertices 0..n-1, indices mod n. Requires n >= 3.
  static Graph cycle(int n);

  /// Two K_{r+1} blocks joined by r independent edges, one unmatched vertex
  /// per block. Order 2(r+1). Block A is 0..r, block B is r+1..2r+1, and
  /// vertex i of A is matched with vertex r+1+i of B for i < r.
  /// Requires r >= 3.
  static Graph mynhardt_roux(int r);

  /// Arbitrary simple connected graph. Throws FormatError on loops or
  /// duplicate edges, DomainError on out-of-range endpoints, and
  /// ConnectivityError when the result is disconnected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Edge-list text: first line "n", then one "u v" pair per line, 0-based.
  /// '#' starts a comment; blank lines are ignored.
  static Graph parse_edge_list(std::istream& in);
  static Graph load_edge_list(const std::string& path);

  int order() const { return n_; }
  int size() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int dist(int u, int v) const { return dist_[u * n_ + v]; }
  int ecc(int v) const { return ecc_[v]; }
  int diameter() const { return diameter_; }
  int radius() const { return radius_; }
  int min_degree() const { return min_degree_; }
  GraphFamily family() const { return family_; }

  /// r for MynhardtRoux, otherwise the order.
  int family_param() const { return family_param_; }

 private:
  Graph(int n, std::vector<std::vector<int>> adj, GraphFamily family,
        int family_param);

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;  // row-major n x n
  std::vector<int> ecc_;
  int diameter_ = 0;
  int radius_ = 0;
  int min_degree_ = 0;
  GraphFamily family_ = GraphFamily::Custom;
  int family_param_ = 0;
};

}  // namespace bcast
