#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affint {

// Multiset of positive integers kept as (part, multiplicity) pairs sorted by part.
class Partition {
 public:
  using Entry = std::pair<int, int>;

  Partition() = default;

  static Partition from_entries(std::vector<Entry> e) {
    std::sort(e.begin(), e.end());
    Partition p;
    for (auto [part, mult] : e) {
      if (part < 1 || mult < 0) throw std::invalid_argument("bad partition entry");
      if (mult == 0) continue;
      if (!p.e_.empty() && p.e_.back().first == part)
        p.e_.back().second += mult;
      else
        p.e_.push_back({part, mult});
    }
    return p;
  }

  static Partition single(int part, int mult = 1) { return from_entries({{part, mult}}); }

  static Partition from_parts(const std::vector<int>& parts) {
    std::vector<Entry> e;
    for (int x : parts) e.push_back({x, 1});
    return from_entries(std::move(e));
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }

  long degree() const {
    long d = 0;
    for (auto [p, m] : e_) d += static_cast<long>(p) * m;
    return d;
  }

  int length() const {
    int n = 0;
    for (auto [p, m] : e_) n += m;
    return n;
  }

  int multiplicity(int part) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), Entry{part, 0});
    return (it != e_.end() && it->first == part) ? it->second : 0;
  }

  // Parts in decreasing order, e.g. {3,1,1}.
  std::vector<int> parts_desc() const {
    std::vector<int> v;
    for (auto it = e_.rbegin(); it != e_.rend(); ++it)
      for (int i = 0; i < it->second; ++i) v.push_back(it->first);
    return v;
  }

  Partition operator*(const Partition& o) const {
    Partition r;
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
      if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
        r.e_.push_back(e_[i++]);
      } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
        r.e_.push_back(o.e_[j++]);
      } else {
        r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Partition scaled(int m) const {
    Partition r = *this;
    for (auto& x : r.e_) x.first *= m;
    return r;
  }

  // Graded order: by degree, then reverse lexicographic on the sorted entries.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.e_ <=> b.e_;
  }
  friend bool operator==(const Partition&, const Partition&) = default;

  std::string monomial_str(const std::string& sym = "h") const {
    std::string s;
    for (auto it = e_.rbegin(); it != e_.rend(); ++it) {
      if (!s.empty()) s += "*";
      s += sym + std::to_string(it->first);
      if (it->second > 1) s += "^" + std::to_string(it->second);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<Entry> e_;
};

// All partitions of n, parts in decreasing order, generated recursively.
inline void for_each_partition(int n, int max_part, std::vector<int>& cur,
                               const auto& fn) {
  if (n == 0) {
    fn(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    for_each_partition(n - k, k, cur, fn);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  for_each_partition(n, n, cur, [&](const std::vector<int>& v) {
    out.push_back(Partition::from_parts(v));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affint
