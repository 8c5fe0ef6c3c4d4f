#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "toricdiag/rational.hpp"

namespace toricdiag {

// Cylinder-set calculus over {-1,+1}^Keys for an arbitrary ordered key type.
// The toric diagonal instantiates Key = Site, the standard diagonal Key = Edge;
// both run through this code unchanged.

inline constexpr std::size_t kMaxCylinderKeys = 20;

namespace cyl_detail {

template <typename Key>
void require_sorted_unique(const std::vector<Key>& keys) {
  if (!std::is_sorted(keys.begin(), keys.end()) ||
      std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("cylinder keys must be sorted and distinct");
  }
  if (keys.size() > kMaxCylinderKeys) {
    throw std::invalid_argument("cylinder key set too large");
  }
}

}  // namespace cyl_detail

// The set of configurations agreeing with a fixed sign pattern on a finite
// key set. Bit i of `negatives` set means keys[i] is pinned to -1. An empty
// key set denotes the whole space.
template <typename Key>
class CylinderSet {
 public:
  CylinderSet() = default;
  CylinderSet(std::vector<Key> keys, std::uint32_t negatives)
      : keys_(std::move(keys)), negatives_(negatives) {
    cyl_detail::require_sorted_unique(keys_);
    if (keys_.size() < 32 && (negatives_ >> keys_.size()) != 0) {
      throw std::invalid_argument("CylinderSet: pattern bits beyond the key set");
    }
  }
  static CylinderSet whole_space() { return CylinderSet(); }

  const std::vector<Key>& keys() const { return keys_; }
  std::uint32_t negatives() const { return negatives_; }
  std::size_t rank() const { return keys_.size(); }

  int sign_at(const Key& k) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || *it != k) {
      throw std::invalid_argument("CylinderSet: key not constrained");
    }
    std::size_t i = static_cast<std::size_t>(it - keys_.begin());
    return (negatives_ >> i) & 1 ? -1 : 1;
  }

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;

 private:
  std::vector<Key> keys_;
  std::uint32_t negatives_ = 0;
};

// Integer-valued function depending on finitely many coordinates, stored as a
// full table over {-1,+1}^K. Canonical form: K is minimal (coordinates the
// table does not depend on are dropped), so equality is structural.
template <typename Key>
class CylinderFunction {
 public:
  CylinderFunction() : table_(1, 0) {}  // zero

  CylinderFunction(std::vector<Key> keys, std::vector<long long> table)
      : keys_(std::move(keys)), table_(std::move(table)) {
    cyl_detail::require_sorted_unique(keys_);
    if (table_.size() != (std::size_t{1} << keys_.size())) {
      throw std::invalid_argument("CylinderFunction: table size must be 2^|K|");
    }
    canonicalize();
  }

  static CylinderFunction constant(long long c) {
    CylinderFunction q;
    q.table_[0] = c;
    return q;
  }

  static CylinderFunction indicator(const CylinderSet<Key>& c) {
    std::vector<long long> table(std::size_t{1} << c.rank(), 0);
    table[c.negatives()] = 1;
    return CylinderFunction(c.keys(), std::move(table));
  }

  const std::vector<Key>& keys() const { return keys_; }
  const std::vector<long long>& table() const { return table_; }
  bool is_zero() const { return keys_.empty() && table_[0] == 0; }

  long long evaluate(const std::function<int(const Key&)>& sign_of) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      int s = sign_of(keys_[i]);
      if (s != 1 && s != -1) throw std::invalid_argument("evaluate: signs must be +/-1");
      if (s == -1) idx |= std::size_t{1} << i;
    }
    return table_[idx];
  }

  friend CylinderFunction operator+(const CylinderFunction& a, const CylinderFunction& b) {
    return combine(a, b, true);
  }
  friend CylinderFunction operator-(const CylinderFunction& a, const CylinderFunction& b) {
    return combine(a, b, false);
  }
  CylinderFunction scaled(long long c) const {
    CylinderFunction q = *this;
    for (long long& v : q.table_) v *= c;
    q.canonicalize();
    return q;
  }

  // Integral against the product of uniform measures on {-1,+1}: exact dyadic.
  Dyadic measure() const {
    long long total = 0;
    for (long long v : table_) total += v;
    return Dyadic(total, static_cast<unsigned>(keys_.size()));
  }

  // Collapse to a single-cylinder representative: all same-rank cylinders lie
  // in one orbit class, so only the table sum and the key set survive.
  struct Reduced {
    long long coefficient = 0;
    CylinderSet<Key> representative;
  };
  Reduced class_reduce() const {
    long long total = 0;
    for (long long v : table_) total += v;
    return Reduced{total, CylinderSet<Key>(keys_, 0)};
  }

  friend bool operator==(const CylinderFunction&, const CylinderFunction&) = default;

 private:
  static CylinderFunction combine(const CylinderFunction& a, const CylinderFunction& b,
                                  bool add) {
    std::vector<Key> keys;
    std::set_union(a.keys_.begin(), a.keys_.end(), b.keys_.begin(), b.keys_.end(),
                   std::back_inserter(keys));
    if (keys.size() > kMaxCylinderKeys) {
      throw std::invalid_argument("cylinder key set too large");
    }
    CylinderFunction ra = a.refined(keys);
    CylinderFunction rb = b.refined(keys);
    for (std::size_t i = 0; i < ra.table_.size(); ++i) {
      ra.table_[i] = add ? ra.table_[i] + rb.table_[i] : ra.table_[i] - rb.table_[i];
    }
    ra.canonicalize();
    return ra;
  }

  // Same function on a larger key set; not canonical, internal only.
  CylinderFunction refined(const std::vector<Key>& superset) const {
    std::vector<std::size_t> pos(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      auto it = std::lower_bound(superset.begin(), superset.end(), keys_[i]);
      if (it == superset.end() || *it != keys_[i]) {
        throw std::invalid_argument("refined: superset does not contain the key set");
      }
      pos[i] = static_cast<std::size_t>(it - superset.begin());
    }
    CylinderFunction out;
    out.keys_ = superset;
    out.table_.assign(std::size_t{1} << superset.size(), 0);
    for (std::size_t idx = 0; idx < out.table_.size(); ++idx) {
      std::size_t old_idx = 0;
      for (std::size_t i = 0; i < keys_.size(); ++i) {
        if ((idx >> pos[i]) & 1) old_idx |= std::size_t{1} << i;
      }
      out.table_[idx] = table_[old_idx];
    }
    return out;
  }

  void canonicalize() {
    for (std::size_t i = keys_.size(); i-- > 0;) {
      const std::size_t bit = std::size_t{1} << i;
      bool depends = false;
      for (std::size_t idx = 0; idx < table_.size(); ++idx) {
        if ((idx & bit) == 0 && table_[idx] != table_[idx | bit]) {
          depends = true;
          break;
        }
      }
      if (depends) continue;
      std::vector<long long> smaller(table_.size() / 2);
      for (std::size_t idx = 0; idx < smaller.size(); ++idx) {
        std::size_t low = idx & (bit - 1);
        std::size_t high = (idx & ~(bit - 1)) << 1;
        smaller[idx] = table_[high | low];
      }
      table_ = std::move(smaller);
      keys_.erase(keys_.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  template <typename K>
  friend CylinderFunction<K> flip_keys(const std::vector<K>& flips,
                                       const CylinderFunction<K>& q);

  std::vector<Key> keys_;
  std::vector<long long> table_;
};

// Partition of a cylinder set over a larger key set: 2^{|K' \ K|} disjoint
// pieces whose union is the input.
template <typename Key>
std::vector<CylinderSet<Key>> refine(const CylinderSet<Key>& c, std::vector<Key> superset) {
  std::sort(superset.begin(), superset.end());
  superset.erase(std::unique(superset.begin(), superset.end()), superset.end());
  cyl_detail::require_sorted_unique(superset);
  std::vector<std::size_t> pos(c.rank());
  for (std::size_t i = 0; i < c.rank(); ++i) {
    auto it = std::lower_bound(superset.begin(), superset.end(), c.keys()[i]);
    if (it == superset.end() || *it != c.keys()[i]) {
      throw std::invalid_argument("refine: superset does not contain the key set");
    }
    pos[i] = static_cast<std::size_t>(it - superset.begin());
  }
  std::vector<bool> fixed(superset.size(), false);
  std::uint32_t base = 0;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    fixed[pos[i]] = true;
    if ((c.negatives() >> i) & 1) base |= 1u << pos[i];
  }
  std::vector<std::size_t> free_positions;
  for (std::size_t j = 0; j < superset.size(); ++j) {
    if (!fixed[j]) free_positions.push_back(j);
  }
  std::vector<CylinderSet<Key>> pieces;
  pieces.reserve(std::size_t{1} << free_positions.size());
  for (std::size_t m = 0; m < (std::size_t{1} << free_positions.size()); ++m) {
    std::uint32_t mask = base;
    for (std::size_t i = 0; i < free_positions.size(); ++i) {
      if ((m >> i) & 1) mask |= 1u << free_positions[i];
    }
    pieces.emplace_back(superset, mask);
  }
  return pieces;
}

// The action of a sign flip pattern: keys outside the flip set are untouched.
template <typename Key>
CylinderSet<Key> flip_keys(const std::vector<Key>& flips, const CylinderSet<Key>& c) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (std::binary_search(flips.begin(), flips.end(), c.keys()[i])) mask |= 1u << i;
  }
  return CylinderSet<Key>(c.keys(), c.negatives() ^ mask);
}

template <typename Key>
CylinderFunction<Key> flip_keys(const std::vector<Key>& flips, const CylinderFunction<Key>& q) {
  std::size_t mask = 0;
  for (std::size_t i = 0; i < q.keys().size(); ++i) {
    if (std::binary_search(flips.begin(), flips.end(), q.keys()[i])) mask |= std::size_t{1} << i;
  }
  CylinderFunction<Key> out = q;
  for (std::size_t idx = 0; idx < out.table_.size(); ++idx) {
    out.table_[idx] = q.table_[idx ^ mask];
  }
  return out;
}

}  // namespace toricdiag
