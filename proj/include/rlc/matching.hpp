#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace rlc {

/// Maximum bipartite matching (Hopcroft-Karp). Left vertices 0..L-1, right
/// vertices 0..R-1; adjacency is given from the left side.
class BipartiteMatching {
 public:
  static constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

  BipartiteMatching(std::uint32_t right_count, std::vector<std::vector<std::uint32_t>> adjacency)
      : adj_(std::move(adjacency)),
        match_left_(adj_.size(), kFree),
        match_right_(right_count, kFree),
        dist_(adj_.size()) {
    while (bfs()) {
      for (std::uint32_t u = 0; u < left_count(); ++u)
        if (match_left_[u] == kFree && dfs(u)) ++size_;
    }
  }

  std::uint32_t left_count() const noexcept { return static_cast<std::uint32_t>(adj_.size()); }
  std::uint32_t size() const noexcept { return size_; }
  bool saturates_left() const noexcept { return size_ == left_count(); }

  /// Right partner of left vertex u, or kFree.
  std::uint32_t partner(std::uint32_t u) const noexcept { return match_left_[u]; }

  /// König: left vertices reachable from unmatched left vertices by
  /// alternating paths. The set X satisfies |N(X)| = |X| - (L - size()),
  /// so it is a Hall violator whenever the matching is not left-saturating.
  std::vector<std::uint32_t> hall_violator() const {
    std::vector<char> seen_left(left_count(), 0);
    std::vector<char> seen_right(match_right_.size(), 0);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t u = 0; u < left_count(); ++u) {
      if (match_left_[u] == kFree) {
        seen_left[u] = 1;
        stack.push_back(u);
      }
    }
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      for (std::uint32_t r : adj_[u]) {
        if (seen_right[r]) continue;
        seen_right[r] = 1;
        const std::uint32_t w = match_right_[r];
        if (w != kFree && !seen_left[w]) {
          seen_left[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < left_count(); ++u)
      if (seen_left[u]) out.push_back(u);
    return out;
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool bfs() {
    std::queue<std::uint32_t> q;
    bool found_free = false;
    for (std::uint32_t u = 0; u < left_count(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t r : adj_[u]) {
        const std::uint32_t w = match_right_[r];
        if (w == kFree) {
          found_free = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found_free;
  }

  bool dfs(std::uint32_t u) {
    for (std::uint32_t r : adj_[u]) {
      const std::uint32_t w = match_right_[r];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = r;
        match_right_[r] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> match_left_;
  std::vector<std::uint32_t> match_right_;
  std::vector<std::uint32_t> dist_;
  std::uint32_t size_ = 0;
};

}  // namespace rlc
