#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace branchpack {

class CardUnderflow : public std::logic_error {
 public:
  explicit CardUnderflow(const std::string& what) : std::logic_error(what) {}
};

/// A cardinal in {0, 1, 2, ...} u {aleph0}. aleph0 is the top element and
/// absorbs addition and finite subtraction.
class Card {
 public:
  constexpr Card() = default;
  constexpr Card(std::uint64_t n) : value_(n) {}  // NOLINT: implicit from counts

  static constexpr Card aleph0() {
    Card c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_aleph0() const { return infinite_; }

  /// Throws std::logic_error on aleph0.
  std::uint64_t finite_value() const;

  std::string to_string() const;

  friend constexpr bool operator==(const Card& a, const Card& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Card& a, const Card& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Card operator+(const Card& a, const Card& b) {
    if (a.infinite_ || b.infinite_) return aleph0();
    return Card(a.value_ + b.value_);
  }
  Card& operator+=(const Card& other) { return *this = *this + other; }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// a - n with aleph0 - n = aleph0. Finite a < n throws CardUnderflow.
Card card_sub(Card a, std::uint64_t n);

/// min(a, cap) as a plain integer; aleph0 maps to cap.
std::uint64_t card_min_with(Card a, std::uint64_t cap);

}  // namespace branchpack
