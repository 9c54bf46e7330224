#ifndef WELLCOVER_VERTEX_SET_HPP
#define WELLCOVER_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace wellcover {

// Set of vertex (or variable) indices in 0..63, backed by a single word.
// Comparison order is the numeric order of the underlying bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  static constexpr VertexSet universe(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1; }

  void add(int v) {
    check(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void remove(int v) {
    check(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }
  VertexSet with(int v) const {
    VertexSet s = *this;
    s.add(v);
    return s;
  }
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.remove(v);
    return s;
  }

  // Smallest element; the set must be non-empty.
  int lowest() const {
    if (empty()) throw std::logic_error("lowest() on empty vertex set");
    return std::countr_zero(bits_);
  }

  constexpr bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  // Forward iteration over elements in ascending order.
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t bits) : bits_(bits) {}
    int operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  static void check(int v) {
    if (v < 0 || v > 63) throw std::out_of_range("vertex index out of range 0..63");
  }
  std::uint64_t bits_ = 0;
};

}  // namespace wellcover

#endif
