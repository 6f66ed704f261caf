// element_set.hpp -- dense bitset over monoid element indices

#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace monoidlab {

/// Set of element indices [0, size), stored as a packed bit vector.
/// Used for subsets of a monoid (units, atoms, irreducibles, ...) and as
/// rows of preorder matrices.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(std::uint32_t universe_size)
      : size_(universe_size), bits_((universe_size + 63) / 64, 0) {}

  std::uint32_t universe_size() const { return size_; }

  bool test(std::uint32_t i) const {
    check_index(i);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::uint32_t i) {
    check_index(i);
    bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::uint32_t i) {
    check_index(i);
    bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto w : bits_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  ElementSet& operator|=(const ElementSet& other) {
    check_same_universe(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& other) {
    check_same_universe(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= other.bits_[k];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Complement within the universe.
  ElementSet complement() const {
    ElementSet r(size_);
    for (std::size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = ~bits_[k];
    r.trim();
    return r;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same_universe(other);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & ~other.bits_[k]) return false;
    return true;
  }

  bool operator==(const ElementSet& other) const {
    return size_ == other.size_ && bits_ == other.bits_;
  }
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

  /// Invoke fn(i) for every member i, in increasing order.
  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      std::uint64_t w = bits_[k];
      while (w) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(w));
        fn(static_cast<std::uint32_t>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  static ElementSet from_indices(std::uint32_t universe_size,
                                 const std::vector<std::uint32_t>& indices) {
    ElementSet s(universe_size);
    for (auto i : indices) s.set(i);
    return s;
  }

 private:
  void check_index(std::uint32_t i) const {
    if (i >= size_) throw std::out_of_range("ElementSet: index out of range");
  }
  void check_same_universe(const ElementSet& other) const {
    if (size_ != other.size_)
      throw std::invalid_argument("ElementSet: universe size mismatch");
  }
  void trim() {
    if (size_ % 64 != 0 && !bits_.empty())
      bits_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::uint32_t size_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace monoidlab
