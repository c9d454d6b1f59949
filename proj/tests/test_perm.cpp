#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "klcells/perm.hpp"
#include "klcells/shapes.hpp"

using namespace klcells;

namespace {

// Independent length count straight from the definition.
int inversions(const Permutation& w) {
  int n = w.degree(), count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation w({3, 1, 4, 5, 2, 6});
  CHECK(w.degree() == 6);
  CHECK(w(1) == 3);
  CHECK(w(5) == 2);
  CHECK(Permutation::identity(4).is_identity());
  CHECK_FALSE(w.is_identity());
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("composition applies left factor first") {
  Permutation x({2, 1, 3});
  Permutation y({1, 3, 2});
  // (xy)(1) = y(x(1))
  CHECK(compose(x, y) == Permutation({3, 1, 2}));
  CHECK(compose(y, x) == Permutation({2, 3, 1}));
  CHECK_THROWS_AS(compose(x, Permutation({1, 2})), std::invalid_argument);
}

TEST_CASE("inverse and length") {
  Permutation w({4, 6, 7, 1, 2, 3, 5, 8});
  CHECK(compose(w, inverse(w)).is_identity());
  CHECK(compose(inverse(w), w).is_identity());
  CHECK(length(w) == inversions(w));
  CHECK(length(inverse(w)) == length(w));
  CHECK(length(Permutation::identity(5)) == 0);
  CHECK(length(longest_element(5)) == 10);
}

TEST_CASE("words and generators") {
  CHECK(adjacent_transposition(4, 2) == Permutation({1, 3, 2, 4}));
  CHECK_THROWS_AS(adjacent_transposition(4, 4), std::invalid_argument);

  // s1 s2 sends 1 -> 2 -> 3
  CHECK(product_of_word(3, {1, 2}) == Permutation({3, 1, 2}));
  CHECK(product_of_word(3, {2, 1}) == Permutation({2, 3, 1}));
  CHECK(product_of_word(4, {}) == Permutation::identity(4));

  std::mt19937 rng(2718);
  std::vector<int> row(7);
  std::iota(row.begin(), row.end(), 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(row.begin(), row.end(), rng);
    Permutation w(row);
    GeneratorWord word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    CHECK(product_of_word(7, word) == w);
  }
}

TEST_CASE("prefix order") {
  Permutation d({3, 4, 7, 2, 6, 8, 1, 9, 5});
  CHECK(is_prefix(Permutation::identity(9), d));
  CHECK(is_prefix(d, d));
  CHECK(is_prefix(Permutation({2, 3, 4, 1, 6, 7, 5, 8, 9}), d));
  CHECK_FALSE(is_prefix(Permutation({2, 5, 6, 1, 4, 7, 3, 8, 9}), d));
  // prefix implies shorter or equal
  CHECK_FALSE(is_prefix(longest_element(9), d));
}

TEST_CASE("parabolic longest elements") {
  Composition lambda({3, 2, 1});
  Permutation wj = parabolic_longest(lambda);
  CHECK(wj == Permutation({3, 2, 1, 5, 4, 6}));
  CHECK(length(wj) == 3 + 1);
  CHECK(compose(wj, wj).is_identity());
  CHECK(parabolic_longest(Composition({1, 1, 1})).is_identity());
  CHECK(parabolic_longest(Composition({4})) == longest_element(4));
}

TEST_CASE("distinguished coset representatives") {
  Composition lambda({2, 2});
  CHECK(is_distinguished(Permutation({1, 3, 2, 4}), lambda));
  CHECK(is_distinguished(Permutation::identity(4), lambda));
  CHECK_FALSE(is_distinguished(Permutation({2, 1, 3, 4}), lambda));
  CHECK_THROWS_AS(is_distinguished(Permutation({1, 2, 3}), lambda), std::invalid_argument);
}

TEST_CASE("coset decomposition") {
  Composition lambda({3, 2});
  std::mt19937 rng(97);
  std::vector<int> row(5);
  std::iota(row.begin(), row.end(), 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(row.begin(), row.end(), rng);
    Permutation w(row);
    CosetDecomposition cd = coset_decompose(w, lambda);
    CHECK(compose(cd.parabolic, cd.distinguished) == w);
    CHECK(is_distinguished(cd.distinguished, lambda));
    // parabolic factor preserves the blocks {1,2,3}, {4,5}
    for (int i = 1; i <= 3; ++i) CHECK(cd.parabolic(i) <= 3);
    // lengths add along the decomposition
    CHECK(length(cd.parabolic) + length(cd.distinguished) == length(w));
  }
}

TEST_CASE("embedding and longest-element conjugation") {
  Permutation w({3, 1, 2});
  CHECK(embed(w, 5) == Permutation({3, 1, 2, 4, 5}));
  CHECK(embed(w, 3) == w);
  CHECK_THROWS_AS(embed(w, 2), std::invalid_argument);

  CHECK(w0_conjugate(Permutation({2, 1, 3})) == Permutation({1, 3, 2}));
  CHECK(length(w0_conjugate(w)) == length(w));
  CHECK(w0_conjugate(w0_conjugate(w)) == w);
}

TEST_CASE("permutation parsing") {
  CHECK(parse_permutation("[3,1,4,5,2,6]") == Permutation({3, 1, 4, 5, 2, 6}));
  CHECK(parse_permutation("[ 3, 1, 4, 5, 2, 6 ]") == Permutation({3, 1, 4, 5, 2, 6}));

  // cycle form: each entry maps to the next
  CHECK(parse_permutation("(1,4)(2,6,3,7,5)", 8) == Permutation({4, 6, 7, 1, 2, 3, 5, 8}));
  CHECK(parse_permutation("(1,2,3)") == Permutation({2, 3, 1}));
  CHECK(parse_permutation("(8,7,6,5,4,3)") == Permutation({1, 2, 8, 3, 4, 5, 6, 7}));
  CHECK_THROWS_AS(parse_permutation("(1,2,1)"), std::invalid_argument);

  // generator words multiply left to right; bare digits count as generators
  CHECK(parse_permutation("s8 s7", 9) == parse_permutation("(7,8,9)"));
  CHECK(parse_permutation("1 2") == Permutation({3, 1, 2}));
  CHECK(parse_permutation("e", 3) == Permutation::identity(3));
  CHECK_THROWS_AS(parse_permutation("e"), std::invalid_argument);

  CHECK_THROWS_AS(parse_permutation("[2,2,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[2,1]", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
  CHECK(to_string(Permutation({3, 1, 2})) == "[3,1,2]");
  CHECK(to_string(GeneratorWord{2, 1, 3}) == "s2 s1 s3");
  CHECK(to_string(GeneratorWord{}) == "e");
}
