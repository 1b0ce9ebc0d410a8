#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/random.hpp"

namespace rlc {

using Colour = std::uint32_t;  // colours are 1..m; 0 means "uncoloured"

/// A k-list-assignment: every vertex owns a sorted k-subset of {1..m}.
class ListAssignment {
 public:
  ListAssignment() = default;

  /// Takes ownership of n*k colours laid out vertex by vertex. Each row is
  /// sorted in place and validated.
  ListAssignment(std::uint32_t k, std::uint32_t m, std::vector<Colour> flat) : k_(k), m_(m), flat_(std::move(flat)) {
    detail::require(k_ >= 1, "list size k must be >= 1");
    detail::require(k_ <= m_, "list size k must not exceed palette size m");
    detail::require(flat_.size() % k_ == 0, "flat list storage is not a multiple of k");
    for (std::size_t v = 0; v < order(); ++v) {
      auto row = mutable_row(v);
      std::sort(row.begin(), row.end());
      for (std::size_t i = 0; i < row.size(); ++i) {
        detail::require(row[i] >= 1 && row[i] <= m_, "colour outside 1..m");
        detail::require(i == 0 || row[i] != row[i - 1], "repeated colour in a list");
      }
    }
  }

  /// From explicit lists, all of the same size. m == 0 means "largest colour used".
  static ListAssignment from_lists(const std::vector<std::vector<Colour>>& lists, std::uint32_t m = 0) {
    detail::require(!lists.empty(), "need at least one list");
    const auto k = static_cast<std::uint32_t>(lists.front().size());
    std::vector<Colour> flat;
    Colour largest = 0;
    for (const auto& l : lists) {
      detail::require(l.size() == k, "all lists must have the same size");
      for (Colour c : l) largest = std::max(largest, c);
      flat.insert(flat.end(), l.begin(), l.end());
    }
    return ListAssignment(k, m == 0 ? std::max<Colour>(largest, k) : m, std::move(flat));
  }

  /// Every vertex gets {1..k}.
  static ListAssignment uniform(std::uint32_t n, std::uint32_t k, std::uint32_t m = 0) {
    std::vector<Colour> flat(std::size_t{n} * k);
    for (std::size_t v = 0; v < n; ++v) std::iota(flat.begin() + static_cast<std::ptrdiff_t>(v * k),
                                                  flat.begin() + static_cast<std::ptrdiff_t>((v + 1) * k), Colour{1});
    return ListAssignment(k, m == 0 ? k : m, std::move(flat));
  }

  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return k_ == 0 ? 0 : static_cast<std::uint32_t>(flat_.size() / k_); }

  std::span<const Colour> list(Vertex v) const noexcept {
    return {flat_.data() + std::size_t{v} * k_, k_};
  }

  bool contains(Vertex v, Colour c) const noexcept {
    auto l = list(v);
    return std::binary_search(l.begin(), l.end(), c);
  }

  const std::vector<Colour>& flat() const noexcept { return flat_; }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::span<Colour> mutable_row(std::size_t v) { return {flat_.data() + v * k_, k_}; }

  std::uint32_t k_ = 0;
  std::uint32_t m_ = 0;
  std::vector<Colour> flat_;
};

/// Linear merge of two sorted lists.
inline bool lists_intersect(std::span<const Colour> a, std::span<const Colour> b) noexcept {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

/// Uniform k-subsets of {1..m} by partial Fisher-Yates over a reusable
/// palette array. The k swaps are undone after each draw, so the array is
/// back in identity order and a draw costs O(k) beyond the initial fill.
class SubsetSampler {
 public:
  explicit SubsetSampler(std::uint32_t m) : palette_(m), swaps_() {
    detail::require(m >= 1, "palette size must be >= 1");
    std::iota(palette_.begin(), palette_.end(), Colour{1});
  }

  std::uint32_t palette_size() const noexcept { return static_cast<std::uint32_t>(palette_.size()); }

  /// Writes a sorted uniform k-subset into `out` (out.size() == k).
  void draw(std::span<Colour> out, SplitMix64& rng) {
    const std::size_t k = out.size();
    const std::size_t m = palette_.size();
    detail::require(k >= 1 && k <= m, "need 1 <= k <= m");
    swaps_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
      swaps_[i] = j;
      std::swap(palette_[i], palette_[j]);
      out[i] = palette_[i];
    }
    for (std::size_t i = k; i-- > 0;) std::swap(palette_[i], palette_[swaps_[i]]);
    std::sort(out.begin(), out.end());
  }

 private:
  std::vector<Colour> palette_;
  std::vector<std::size_t> swaps_;
};

inline std::vector<Colour> sample_k_subset(std::uint32_t k, std::uint32_t m, SplitMix64& rng) {
  detail::require(k >= 1, "need k >= 1");
  detail::require(k <= m, "k-subset of a smaller palette requested (k > m)");
  SubsetSampler sampler(m);
  std::vector<Colour> out(k);
  sampler.draw(out, rng);
  return out;
}

/// n independent uniform k-subsets of {1..m}, drawn in vertex order from the
/// generator of `seed`.
inline ListAssignment sample_assignment(std::uint32_t n, std::uint32_t k, std::uint32_t m, Seed seed) {
  detail::require(n >= 1, "need n >= 1");
  detail::require(k >= 1, "need k >= 1");
  detail::require(k <= m, "need k <= m");
  SplitMix64 rng = seed.generator();
  SubsetSampler sampler(m);
  std::vector<Colour> flat(std::size_t{n} * k);
  for (std::size_t v = 0; v < n; ++v) sampler.draw(std::span<Colour>(flat.data() + v * k, k), rng);
  return ListAssignment(k, m, std::move(flat));
}

/// Fixture format: one line per vertex, `v: c1 c2 ... ck`.
inline void write_assignment(std::ostream& out, const ListAssignment& l) {
  for (Vertex v = 0; v < l.order(); ++v) {
    out << v << ':';
    for (Colour c : l.list(v)) out << ' ' << c;
    out << '\n';
  }
}

inline std::string dump_assignment(const ListAssignment& l) {
  std::ostringstream os;
  write_assignment(os, l);
  return os.str();
}

/// Parses the fixture format. Vertices must appear as 0, 1, 2, ... in order.
inline ListAssignment read_assignment(std::istream& in, std::uint32_t m = 0) {
  std::vector<std::vector<Colour>> lists;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("assignment line " + std::to_string(line_no) + ": missing ':'");
    std::istringstream head(line.substr(0, colon));
    long long v = -1;
    if (!(head >> v) || v != static_cast<long long>(lists.size()))
      throw ParseError("assignment line " + std::to_string(line_no) + ": expected vertex " +
                       std::to_string(lists.size()));
    std::istringstream body(line.substr(colon + 1));
    std::vector<Colour> l;
    long long c = 0;
    while (body >> c) {
      if (c < 1 || c > std::numeric_limits<std::int32_t>::max())
        throw ParseError("assignment line " + std::to_string(line_no) + ": bad colour");
      l.push_back(static_cast<Colour>(c));
    }
    if (!body.eof()) throw ParseError("assignment line " + std::to_string(line_no) + ": bad token");
    lists.push_back(std::move(l));
  }
  if (lists.empty()) throw ParseError("assignment: no lists");
  try {
    return ListAssignment::from_lists(lists, m);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("assignment: ") + e.what());
  }
}

}  // namespace rlc
