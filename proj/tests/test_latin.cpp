#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "remoteness/latin.hpp"
#include "remoteness/metric.hpp"
#include "remoteness/spaces.hpp"

using namespace rem;

TEST_CASE("latin square validation") {
  CHECK_THROWS_AS(LatinSquare(2, {0, 1, 0, 1}), std::invalid_argument);  // repeated column entry
  CHECK_THROWS_AS(LatinSquare(2, {0, 0, 1, 1}), std::invalid_argument);  // repeated row entry
  CHECK_THROWS_AS(LatinSquare(2, {0, 1, 1}), std::invalid_argument);     // wrong cell count
  CHECK(LatinSquare(2, {0, 1, 1, 0}).order() == 2);
}

TEST_CASE("cyclic square") {
  const auto L3 = cyclic_latin(3);
  CHECK(L3.row(0) == Perm({0, 1, 2}));
  CHECK(L3.row(1) == Perm({1, 2, 0}));
  CHECK(L3.row(2) == Perm({2, 0, 1}));
  CHECK(L3.is_cyclic());

  // rows are exactly the powers of the standard cycle
  const auto L5 = cyclic_latin(5);
  for (int i = 0; i < 5; ++i) CHECK(L5.row(i) == Perm::standard_cycle(5).power(i));

  // shifting structure holds at any order
  const auto L7 = cyclic_latin(7);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) CHECK((L7.at(r, c) - r - c) % 7 == 0);

  CHECK_FALSE(LatinSquare(3, {0, 1, 2, 2, 0, 1, 1, 2, 0}).is_cyclic());
}

TEST_CASE("serialization round trip") {
  const auto L = cyclic_latin(4);
  CHECK(LatinSquare::parse(L.str()) == L);
  CHECK_THROWS_AS(LatinSquare::parse("0,1\n1"), std::invalid_argument);
}

TEST_CASE("transversals of cyclic squares") {
  CHECK_FALSE(find_transversal(cyclic_latin(4)).has_value());
  CHECK(count_transversals(cyclic_latin(4)) == 0);
  CHECK_FALSE(find_transversal(cyclic_latin(6)).has_value());

  const auto t3 = find_transversal(cyclic_latin(3));
  REQUIRE(t3.has_value());
  const auto t5 = find_transversal(cyclic_latin(5));
  REQUIRE(t5.has_value());
  CHECK(count_transversals(cyclic_latin(5)) == 15);

  // the doubling diagonal is a transversal when the order is odd
  CHECK(has_transversal_through(cyclic_latin(5), 0, 0));
}

TEST_CASE("a transversal reads as a permutation at distance n-1 from every row") {
  for (const auto& L : {cyclic_latin(3), cyclic_latin(5), cyclic_latin(7)}) {
    const auto t = find_transversal(L);
    REQUIRE(t.has_value());
    const Perm p = transversal_permutation(L, *t);
    for (int r = 0; r < L.order(); ++r) CHECK(hamming_distance(p, L.row(r)) == L.order() - 1);
  }
  // and over an assorted set of order-5 squares
  const auto squares = reduced_latin_squares(5);
  for (std::size_t i = 0; i < squares.size(); i += 7) {
    const auto t = find_transversal(squares[i]);
    if (!t) continue;
    const Perm p = transversal_permutation(squares[i], *t);
    for (int r = 0; r < 5; ++r) CHECK(hamming_distance(p, squares[i].row(r)) == 4);
  }
}

TEST_CASE("row averaging: every permutation is far from some row") {
  std::mt19937 rng(17);
  for (int n : {5, 6, 7}) {
    const auto L = cyclic_latin(n);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(img.begin(), img.end(), rng);
      const Perm p{img};
      int total = 0, best = 0;
      for (int r = 0; r < n; ++r) {
        const int d = hamming_distance(p, L.row(r));
        total += d;
        best = std::max(best, d);
      }
      CHECK(total >= n * (n - 1));
      CHECK(best >= n - 1);
    }
  }
}

TEST_CASE("first-rows bound") {
  const auto L4 = cyclic_latin(4);
  const auto b42 = first_rows_remoteness(L4, 2);
  CHECK(b42.improved);
  CHECK(b42.lower_bound == 3);
  REQUIRE(b42.exact.has_value());
  CHECK(*b42.exact >= 3);

  const auto b44 = first_rows_remoteness(L4, 4);
  CHECK(b44.lower_bound == 4);  // k even, k | n: improved to n - n/k + 1
  CHECK(*b44.exact == 4);

  // k = n on a non-cyclic square: plain bound n - 1
  const auto squares = reduced_latin_squares(5);
  const auto& L5 = squares.front();
  const auto b55 = first_rows_remoteness(L5, 5);
  CHECK(b55.lower_bound == 4);
  CHECK(*b55.exact >= 4);

  const auto L6 = cyclic_latin(6);
  const auto b63 = first_rows_remoteness(L6, 3);
  CHECK_FALSE(b63.improved);  // k odd
  CHECK(b63.lower_bound == 4);
  REQUIRE(b63.exact.has_value());
  CHECK(*b63.exact >= 4);
  const auto b62 = first_rows_remoteness(L6, 2);
  CHECK(b62.lower_bound == 4);  // improved: 6 - 3 + 1
  CHECK(*b62.exact >= 4);

  // order 7: averaging bound against the exhaustive value
  const auto L7 = cyclic_latin(7);
  for (int k : {2, 3, 7}) {
    const auto b = first_rows_remoteness(L7, k);
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact >= b.lower_bound);
  }

  CHECK_THROWS_AS(first_rows_remoteness(L4, 0), std::invalid_argument);
  CHECK_THROWS_AS(first_rows_remoteness(L4, 5), std::invalid_argument);
}

TEST_CASE("reduced square enumeration") {
  CHECK(reduced_latin_squares(4).size() == 4);
  CHECK(reduced_latin_squares(5).size() == 56);
  CHECK_THROWS_AS(reduced_latin_squares(6), std::invalid_argument);
}

TEST_CASE("bachelor search") {
  CHECK_THROWS_AS(find_bachelor_square(4), std::invalid_argument);
  CHECK_THROWS_AS(find_bachelor_square(1), std::invalid_argument);

  // order 3: every cell of every square lies on a transversal; the search
  // reports exhaustion, not nonexistence
  const auto r3 = find_bachelor_square(3);
  CHECK(r3.outcome == BachelorSearchResult::Outcome::exhausted);

  const auto r5 = find_bachelor_square(5);
  REQUIRE(r5.outcome == BachelorSearchResult::Outcome::found);
  const auto& b = *r5.found;
  CHECK_FALSE(has_transversal_through(b.square, b.row, b.col));
  // but the square itself does have transversals elsewhere
  CHECK(find_transversal(b.square).has_value());
}

TEST_CASE("bachelor normalization keeps the blocked cell blocked") {
  const auto r5 = find_bachelor_square(5);
  REQUIRE(r5.found.has_value());
  const auto norm = normalize_bachelor(*r5.found);
  CHECK(norm.square.row(0) == Perm::identity(5));
  CHECK_FALSE(has_transversal_through(norm.square, 0, 4));
  // recorded transforms really produce the normalized square
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      CHECK(norm.square.at(r, c) ==
            norm.relabel[static_cast<std::size_t>(r5.found->square.at(
                norm.row_order[static_cast<std::size_t>(r)],
                norm.col_order[static_cast<std::size_t>(c)]))]);
}

TEST_CASE("extended code reaches full remoteness") {
  const auto ext = extended_latin_code(5);
  CHECK(ext.code.size() == 7);  // n + (n-1)/2

  SymmetricGroupSpace s5(5);
  const Code idx = perm_code_indices(s5, ext.code);
  CHECK(idx.size() == 7);
  CHECK(remoteness(s5, idx).value == 5);

  CHECK_THROWS_AS(extended_latin_code(4), std::invalid_argument);
  CHECK_THROWS_AS(extended_latin_code(3), std::invalid_argument);
}

TEST_CASE("row codes witness the small minimum-size bounds") {
  // a square with a transversal has rows at remoteness exactly n-1, so a
  // code of n words reaches any target n-1; the cyclic square of even order
  // reaches n the same way
  const LatinSquare with_transversal = LatinSquare::parse(
      "3,1,2,4,0,5\n"
      "5,4,0,2,3,1\n"
      "4,3,5,0,1,2\n"
      "1,2,3,5,4,0\n"
      "2,0,1,3,5,4\n"
      "0,5,4,1,2,3\n");
  REQUIRE(find_transversal(with_transversal).has_value());
  SymmetricGroupSpace s6(6);
  CHECK(remoteness(s6, perm_code_indices(s6, with_transversal.rows()), 2).value == 5);
  CHECK(remoteness(s6, perm_code_indices(s6, cyclic_latin(6).rows()), 2).value == 6);

  SymmetricGroupSpace s7(7);
  CHECK(remoteness(s7, perm_code_indices(s7, cyclic_latin(7).rows()), 2).value == 6);
}
