#include <algorithm>

#include "branchpack/cardinal.hpp"
#include "doctest.h"

using branchpack::Card;
using branchpack::card_min_with;
using branchpack::card_sub;
using branchpack::CardUnderflow;

TEST_CASE("card_sub examples") {
  CHECK(card_sub(Card(5), 3) == Card(2));
  CHECK(card_sub(Card::aleph0(), 7) == Card::aleph0());
  CHECK(card_sub(Card(0), 0) == Card(0));
}

TEST_CASE("card_sub underflow is an error") {
  CHECK_THROWS_AS(card_sub(Card(2), 3), CardUnderflow);
  CHECK_THROWS_AS(card_sub(Card(0), 1), CardUnderflow);
}

TEST_CASE("card_min_with examples") {
  CHECK(card_min_with(Card::aleph0(), 3) == 3);
  CHECK(card_min_with(Card(2), 3) == 2);
  CHECK(card_min_with(Card(0), 5) == 0);
}

TEST_CASE("aleph0 is the top element") {
  const Card inf = Card::aleph0();
  for (std::uint64_t f : {0ull, 1ull, 17ull, ~0ull}) {
    CHECK(Card(f) < inf);
    CHECK_FALSE(inf < Card(f));
  }
  CHECK(inf <= inf);
  CHECK(inf == inf);
  CHECK_THROWS(inf.finite_value());
  CHECK(inf.to_string() == "aleph0");
  CHECK(Card(12).to_string() == "12");
}

TEST_CASE("addition absorbs aleph0") {
  CHECK(Card::aleph0() + Card(4) == Card::aleph0());
  CHECK(Card(4) + Card::aleph0() == Card::aleph0());
  CHECK(Card(4) + Card(5) == Card(9));
  Card c(1);
  c += Card(2);
  CHECK(c == Card(3));
  c += Card::aleph0();
  CHECK(c.is_aleph0());
}

TEST_CASE("cap is monotone in the cap") {
  for (std::uint64_t a = 0; a <= 8; ++a) {
    for (std::uint64_t c1 = 0; c1 <= 8; ++c1) {
      for (std::uint64_t c2 = c1; c2 <= 8; ++c2) {
        CHECK(card_min_with(Card(a), c1) <= card_min_with(Card(a), c2));
        CHECK(card_min_with(Card::aleph0(), c1) <= card_min_with(Card::aleph0(), c2));
      }
    }
  }
}

TEST_CASE("sub and cap commute on finite values") {
  for (std::int64_t a = 0; a <= 8; ++a) {
    for (std::int64_t n = 0; n <= a; ++n) {
      for (std::int64_t c = 0; c <= 8; ++c) {
        const auto lhs = card_min_with(card_sub(Card(a), n), c);
        const auto rhs = std::max<std::int64_t>(0, std::min(a, c + n) - n);
        CHECK(static_cast<std::int64_t>(lhs) == rhs);
      }
    }
  }
}
