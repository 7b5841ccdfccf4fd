#include "branchpack/cardinal.hpp"

#include <algorithm>

namespace branchpack {

std::uint64_t Card::finite_value() const {
  if (infinite_) throw std::logic_error("finite_value() called on aleph0");
  return value_;
}

std::string Card::to_string() const {
  return infinite_ ? std::string("aleph0") : std::to_string(value_);
}

Card card_sub(Card a, std::uint64_t n) {
  if (a.is_aleph0()) return a;
  const auto v = a.finite_value();
  if (v < n) {
    throw CardUnderflow("card_sub underflow: " + std::to_string(v) + " - " + std::to_string(n));
  }
  return Card(v - n);
}

std::uint64_t card_min_with(Card a, std::uint64_t cap) {
  if (a.is_aleph0()) return cap;
  return std::min(a.finite_value(), cap);
}

}  // namespace branchpack
