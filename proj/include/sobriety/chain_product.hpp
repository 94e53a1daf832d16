#pragma once

// N × N with the product of two Alexandroff chain topologies.
//
// Basic opens ↑m × ↑n = ↑(m,n), so the product topology is the Alexandroff
// topology of the product order and the closed sets are the down-sets.  A
// down-set is a non-increasing column-height sequence h(1) ≥ h(2) ≥ ... with
// values in {0, 1, ..., ∞}; it is eventually constant, so a finite prefix
// and a tail value describe it.  Sets handled by this space are always
// down-sets, which loses nothing here: closure and cut closure of a set only
// depend on its down-closure.

#include "sobriety/topology.hpp"

namespace sobriety {

struct GridPoint {
  std::size_t col = 1;
  std::size_t row = 1;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

class Staircase {
 public:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  Staircase() = default;
  Staircase(std::vector<std::size_t> heights, std::size_t tail) : heights_(std::move(heights)), tail_(tail) {
    for (std::size_t i = 1; i < heights_.size(); ++i)
      if (heights_[i] > heights_[i - 1]) throw std::invalid_argument("column heights must not increase");
    if (!heights_.empty() && tail_ > heights_.back()) throw std::invalid_argument("tail above last column");
    while (!heights_.empty() && heights_.back() == tail_) heights_.pop_back();
  }

  static Staircase rectangle(std::size_t cols, std::size_t rows) {
    return Staircase(std::vector<std::size_t>(cols, rows), 0);
  }
  static Staircase all() { return Staircase({}, kInf); }

  std::size_t height(std::size_t col) const { return col <= heights_.size() ? heights_[col - 1] : tail_; }
  std::size_t tail() const { return tail_; }
  std::size_t prefix() const { return heights_.size(); }
  bool contains(const GridPoint& p) const { return p.row <= height(p.col); }
  bool empty() const { return height(1) == 0; }
  bool is_finite() const { return tail_ == 0 && height(1) != kInf; }
  std::size_t width() const {
    std::size_t w = 0;
    while (w < heights_.size() && heights_[w] > 0) ++w;
    return w;
  }

  friend Staircase operator|(const Staircase& a, const Staircase& b) {
    const std::size_t n = std::max(a.prefix(), b.prefix());
    std::vector<std::size_t> h(n);
    for (std::size_t c = 1; c <= n; ++c) h[c - 1] = std::max(a.height(c), b.height(c));
    return Staircase(std::move(h), std::max(a.tail_, b.tail_));
  }
  friend bool subset_of(const Staircase& a, const Staircase& b) {
    const std::size_t n = std::max(a.prefix(), b.prefix()) + 1;
    for (std::size_t c = 1; c <= n; ++c)
      if (a.height(c) > b.height(c)) return false;
    return true;
  }
  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase&, const Staircase&) = default;

  std::string describe() const {
    auto v = [](std::size_t h) { return h == kInf ? std::string("inf") : std::to_string(h); };
    std::string out = "heights(";
    for (std::size_t i = 0; i < heights_.size(); ++i) out += (i ? "," : "") + v(heights_[i]);
    return out + (heights_.empty() ? "" : ",") + "then " + v(tail_) + ")";
  }

 private:
  std::vector<std::size_t> heights_;
  std::size_t tail_ = 0;
};

class ChainProductSpace {
 public:
  using set_type = Staircase;
  using point_type = GridPoint;

  explicit ChainProductSpace(std::string name = "NxN") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  bool is_finite() const { return false; }
  bool is_t0() const { return true; }
  std::string describe(const Staircase& s) const { return s.describe(); }
  std::string describe(const GridPoint& p) const {
    return "(" + std::to_string(p.col) + "," + std::to_string(p.row) + ")";
  }

  Staircase closure(const Staircase& s) const { return s; }
  Staircase point_closure(const GridPoint& p) const { return Staircase::rectangle(p.col, p.row); }

  /// Upper bounds exist only for finite sets, and then form ↑(width, height(1)).
  Staircase cut_closure(const Staircase& s) const {
    if (s.empty()) return {};
    if (!s.is_finite()) return Staircase::all();
    return Staircase::rectangle(s.width(), s.height(1));
  }

  std::optional<GridPoint> least_upper_bound(const Staircase& s) const {
    if (s.empty() || !s.is_finite()) return std::nullopt;
    return GridPoint{s.width(), s.height(1)};
  }

  /// Down-sets whose prefix has at most `kBound` columns and finite heights
  /// at most kBound.
  BasicClosedFamily<Staircase> closed_sets() const {
    BasicClosedFamily<Staircase> fam;
    fam.exhaustive = false;
    fam.index_bound = kBound;
    std::vector<std::size_t> values;
    for (std::size_t v = 0; v <= kBound; ++v) values.push_back(v);
    values.push_back(Staircase::kInf);
    std::set<Staircase> seen;
    std::vector<std::size_t> h(kBound + 1);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t col, std::size_t cap_pos) {
      if (col == h.size()) {
        seen.insert(Staircase(std::vector<std::size_t>(h.begin(), h.end() - 1), h.back()));
        return;
      }
      for (std::size_t k = 0; k <= cap_pos; ++k) {
        h[col] = values[k];
        fill(col + 1, k);
      }
    };
    fill(0, values.size() - 1);
    fam.members.assign(seen.begin(), seen.end());
    return fam;
  }

  /// Principal ideals, full rows N × ↓n, full columns ↓m × N, and N × N.
  std::vector<Staircase> directed_representatives(std::size_t bound) const {
    const std::size_t b = std::max(bound, kBound) + 1;
    std::vector<Staircase> reps;
    for (std::size_t m = 1; m <= b; ++m)
      for (std::size_t n = 1; n <= b; ++n) reps.push_back(Staircase::rectangle(m, n));
    for (std::size_t n = 1; n <= b; ++n) reps.push_back(Staircase({}, n));
    for (std::size_t m = 1; m <= b; ++m) reps.push_back(Staircase::rectangle(m, Staircase::kInf));
    reps.push_back(Staircase::all());
    return reps;
  }

  std::vector<GridPoint> points(std::size_t bound) const {
    const std::size_t b = std::max(bound, kBound) + 1;
    std::vector<GridPoint> pts;
    for (std::size_t m = 1; m <= b; ++m)
      for (std::size_t n = 1; n <= b; ++n) pts.push_back({m, n});
    return pts;
  }

  std::vector<GridPoint> members(const Staircase& s) const {
    std::vector<GridPoint> pts;
    for (const auto& p : points(s.prefix() + kBound))
      if (s.contains(p)) pts.push_back(p);
    return pts;
  }

 private:
  static constexpr std::size_t kBound = 3;
  std::string name_;
};

}  // namespace sobriety
