#include "bcast/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "bcast/errors.hpp"

namespace bcast {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

}  // namespace

Graph::Graph(int n, std::vector<std::vector<int>> adj, GraphFamily family,
             int family_param)
    : n_(n),
      adj_(std::move(adj)),
      family_(family),
      family_param_(family_param) {
  m_ = 0;
  min_degree_ = n_ > 0 ? n_ : 0;
  for (int v = 0; v < n_; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    m_ += static_cast<int>(adj_[v].size());
    min_degree_ = std::min(min_degree_, static_cast<int>(adj_[v].size()));
  }
  m_ /= 2;

  dist_.assign(static_cast<std::size_t>(n_) * n_, kUnreached);
  ecc_.assign(n_, 0);
  std::deque<int> queue;
  for (int s = 0; s < n_; ++s) {
    int* row = dist_.data() + static_cast<std::size_t>(s) * n_;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj_[u]) {
        if (row[w] == kUnreached) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (row[v] == kUnreached) {
        throw ConnectivityError("graph is not connected");
      }
      ecc_[s] = std::max(ecc_[s], row[v]);
    }
  }

  diameter_ = 0;
  radius_ = n_ > 0 ? ecc_[0] : 0;
  for (int v = 0; v < n_; ++v) {
    diameter_ = std::max(diameter_, ecc_[v]);
    radius_ = std::min(radius_, ecc_[v]);
  }
}

Graph Graph::path(int n) {
  if (n < 2) throw DomainError("path requires order >= 2");
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v + 1 < n; ++v) {
    adj[v].push_back(v + 1);
    adj[v + 1].push_back(v);
  }
  return Graph(n, std::move(adj), GraphFamily::Path, n);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw DomainError("cycle requires order >= 3");
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    int w = (v + 1) % n;
    adj[v].push_back(w);
    adj[w].push_back(v);
  }
  return Graph(n, std::move(adj), GraphFamily::Cycle, n);
}

Graph Graph::mynhardt_roux(int r) {
  if (r < 3) throw DomainError("mynhardt_roux requires r >= 3");
  int block = r + 1;
  int n = 2 * block;
  std::vector<std::vector<int>> adj(n);
  auto add = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (int u = 0; u < block; ++u)
    for (int v = u + 1; v < block; ++v) add(u, v);
  for (int u = block; u < n; ++u)
    for (int v = u + 1; v < n; ++v) add(u, v);
  // r independent edges; vertices r and 2r+1 stay unmatched.
  for (int i = 0; i < r; ++i) add(i, block + i);
  return Graph(n, std::move(adj), GraphFamily::MynhardtRoux, r);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw DomainError("graph order must be positive");
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge endpoint out of range");
    if (u == v) throw FormatError("loop edge");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw FormatError("duplicate edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return Graph(n, std::move(adj), GraphFamily::Custom, n);
}

Graph Graph::parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n)) continue;  // blank or comment-only line
      if (n < 1) throw FormatError("edge list: order must be positive");
    } else {
      int u, v;
      if (!(fields >> u)) continue;
      if (!(fields >> v))
        throw FormatError("edge list: missing second endpoint on line " +
                          std::to_string(lineno));
      edges.emplace_back(u, v);
    }
    std::string rest;
    if (fields >> rest)
      throw FormatError("edge list: trailing tokens on line " +
                        std::to_string(lineno));
  }
  if (n < 0) throw FormatError("edge list: missing order line");
  return from_edges(n, edges);
}

Graph Graph::load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open edge list: " + path);
  return parse_edge_list(in);
}

}  // namespace bcast
