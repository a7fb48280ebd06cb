#pragma once

#include <vector>

#include "bcast/graph.hpp"

namespace bcast::detail {

// Incremental |H_f(u)| bookkeeping for a partial value assignment, plus the
// counters the search cuts read. Assignments are strictly LIFO.
//
// The cuts are sound because a prefix violation persists under any extension:
// extending an assignment only adds hearers, so hear counts never drop and
// private neighborhoods never grow.
class HearState {
 public:
  explicit HearState(const Graph& g) : g_(&g), n_(g.order()) {
    value_.assign(n_, 0);
    assigned_.assign(n_, 0);
    cnt_.assign(n_, 0);
    uncovered_ = n_;
    ball_.resize(n_);
    ball_off_.resize(n_);
    std::vector<int> ring_count;
    for (int v = 0; v < n_; ++v) {
      ring_count.assign(g.ecc(v) + 1, 0);
      for (int u = 0; u < n_; ++u) ++ring_count[g.dist(v, u)];
      ball_off_[v].assign(g.ecc(v) + 1, 0);
      int total = 0;
      for (int r = 0; r <= g.ecc(v); ++r) {
        total += ring_count[r];
        ball_off_[v][r] = total;
      }
      ball_[v].resize(n_);
      std::vector<int> cursor(g.ecc(v) + 1, 0);
      for (int r = 1; r <= g.ecc(v); ++r) cursor[r] = ball_off_[v][r - 1];
      for (int u = 0; u < n_; ++u) ball_[v][cursor[g.dist(v, u)]++] = u;
    }
  }

  void assign(int v, int k) {
    assigned_[v] = 1;
    value_[v] = k;
    cost_ += k;
    if (k >= 1) {
      if (cnt_[v] >= 2) ++broadcast_overheard_;
      bcast_stack_.push_back(v);
      const int* ball = ball_[v].data();
      int lim = ball_off_[v][k];
      for (int idx = 0; idx < lim; ++idx) {
        int u = ball[idx];
        int c = ++cnt_[u];
        if (c == 1) {
          --uncovered_;
        } else if (c == 2) {
          ++overheard_;
          if (assigned_[u] && value_[u] >= 1) ++broadcast_overheard_;
        }
      }
    }
  }

  void unassign(int v) {
    int k = value_[v];
    if (k >= 1) {
      const int* ball = ball_[v].data();
      int lim = ball_off_[v][k];
      for (int idx = lim - 1; idx >= 0; --idx) {
        int u = ball[idx];
        int c = cnt_[u]--;
        if (c == 1) {
          ++uncovered_;
        } else if (c == 2) {
          --overheard_;
          if (assigned_[u] && value_[u] >= 1) --broadcast_overheard_;
        }
      }
      bcast_stack_.pop_back();
      if (cnt_[v] >= 2) --broadcast_overheard_;
    }
    assigned_[v] = 0;
    value_[v] = 0;
    cost_ -= k;
  }

  int cost() const { return cost_; }
  int hear_count(int u) const { return cnt_[u]; }
  int value(int v) const { return value_[v]; }
  const std::vector<int>& values() const { return value_; }

  bool dominating() const { return uncovered_ == 0; }
  bool packing_ok() const { return overheard_ == 0; }
  bool independent_ok() const { return broadcast_overheard_ == 0; }

  // Every assigned broadcast vertex still has a nonempty private border,
  // counting hearers among assigned vertices only.
  bool irredundant_ok() const {
    for (int v : bcast_stack_)
      if (!pb_nonempty(v)) return false;
    return true;
  }

 private:
  bool pb_nonempty(int v) const {
    int k = value_[v];
    const int* ball = ball_[v].data();
    if (k == 1) {
      // For power 1 the border is nonempty iff some vertex within distance 1
      // hears only v (the self-border branch folds into this test).
      int lim = ball_off_[v][1];
      for (int idx = 0; idx < lim; ++idx)
        if (cnt_[ball[idx]] == 1) return true;
      return false;
    }
    int lo = ball_off_[v][k - 1];
    int hi = ball_off_[v][k];
    for (int idx = lo; idx < hi; ++idx)
      if (cnt_[ball[idx]] == 1) return true;
    return false;
  }

  const Graph* g_;
  int n_;
  std::vector<int> value_;
  std::vector<char> assigned_;
  std::vector<int> cnt_;
  std::vector<int> bcast_stack_;
  std::vector<std::vector<int>> ball_;      // vertices by distance from v
  std::vector<std::vector<int>> ball_off_;  // prefix sizes per radius
  int overheard_ = 0;
  int broadcast_overheard_ = 0;
  int uncovered_ = 0;
  int cost_ = 0;
};

}  // namespace bcast::detail
