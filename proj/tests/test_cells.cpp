#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "golden_data.hpp"
#include "klcells/cells.hpp"
#include "klcells/lifting.hpp"

using namespace klcells;

namespace {

std::set<Permutation> as_set(const std::vector<Permutation>& v) {
  return std::set<Permutation>(v.begin(), v.end());
}

std::set<Permutation> as_set(const golden::Rows& rows) {
  std::set<Permutation> out;
  for (const auto& r : rows) out.insert(Permutation(r));
  return out;
}

}  // namespace

TEST_CASE("Z membership for a partition") {
  // Z((2,1)) is the prefix set of w_D for the Young diagram: {e, s2}
  std::vector<Permutation> z = enumerate_Z(Composition({2, 1}));
  CHECK(z.size() == 2);
  CHECK(z[0] == Permutation::identity(3));
  CHECK(z[1] == Permutation({1, 3, 2}));
  CHECK(rim_Y(Composition({2, 1})) == std::vector<Permutation>{Permutation({1, 3, 2})});
}

TEST_CASE("the two membership tests agree") {
  for (const Composition& lambda :
       {Composition({2, 2}), Composition({1, 2, 1}), Composition({3, 1}), Composition({1, 1, 2})}) {
    for (const Permutation& e : distinguished_reps(lambda)) {
      INFO(to_string(lambda) << " " << to_string(e));
      CHECK(in_Z(lambda, e) == in_Z_recording(lambda, e));
    }
  }
}

TEST_CASE("enumerated cells match the recording-tableau scan") {
  for (const Composition& lambda :
       {Composition({2, 1}), Composition({1, 2, 1}), Composition({2, 2}), Composition({1, 3, 1})}) {
    INFO(to_string(lambda));
    CHECK(cell_elements(lambda) == brute_force_cell(lambda));
  }
}

TEST_CASE("rim order is length then lexicographic") {
  std::vector<Permutation> rim = rim_Y(Composition({1, 2, 1, 2}));
  REQUIRE(rim.size() == 2);
  CHECK(rim[0] == Permutation({1, 2, 5, 3, 4, 6}));
  CHECK(rim[1] == Permutation({3, 1, 4, 5, 2, 6}));
  CHECK(length(rim[0]) < length(rim[1]));
}

TEST_CASE("worked rims") {
  CHECK(as_set(rim_Y(Composition({1, 2, 1, 2}))) == as_set(golden::rim_1212));
  CHECK(as_set(rim_Y(Composition({1, 2, 2, 1}))) == as_set(golden::rim_1221));
  CHECK(as_set(special_rim(Composition({1, 2, 2, 1}))) == as_set(golden::special_1221));
  CHECK(as_set(rim_Y(Composition({2, 1, 1, 2}))) == as_set(golden::rim_2112));
}

TEST_CASE("rim diagrams are canonical and admissible") {
  Composition lambda({1, 2, 2, 1});
  std::vector<Permutation> rim = rim_Y(lambda);
  std::vector<Diagram> diagrams = rim_diagrams(lambda);
  REQUIRE(rim.size() == diagrams.size());
  for (std::size_t i = 0; i < rim.size(); ++i) {
    CHECK(w_of(diagrams[i]) == rim[i]);
    CHECK(row_composition(diagrams[i]) == lambda);
    CHECK(is_admissible(diagrams[i]));
  }
}

TEST_CASE("distinguished representatives") {
  CHECK(distinguished_reps(Composition({2, 2})).size() == 6);
  CHECK(distinguished_reps(Composition({1, 1, 1})).size() == 6);
  CHECK(distinguished_reps(Composition({3})).size() == 1);
  for (const Permutation& e : distinguished_reps(Composition({2, 2})))
    CHECK(is_distinguished(e, Composition({2, 2})));
}

TEST_CASE("x representatives") {
  CHECK(x_rep(3, 8) == Permutation({1, 2, 4, 5, 6, 7, 8, 3}));
  CHECK(x_rep(8, 8) == Permutation::identity(8));
  CHECK(x_rep(1, 3) == Permutation({2, 3, 1}));
  // x_i = s_{m-1} s_{m-2} ... s_i
  CHECK(x_rep(2, 5) == product_of_word(5, {4, 3, 2}));
  CHECK(length(x_rep(2, 5)) == 3);
  CHECK_THROWS_AS(x_rep(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(x_rep(5, 4), std::invalid_argument);
}

TEST_CASE("oracle guard reacts to the environment override") {
  StandardTableau row7({{1, 2, 3, 4, 5, 6, 7}});
  setenv("KLCELLS_ORACLE_LIMIT", "6", 1);
  CHECK(oracle_limit() == 6);
  CHECK_THROWS_AS(cell_of_recording(row7), std::invalid_argument);
  unsetenv("KLCELLS_ORACLE_LIMIT");
  CHECK(oracle_limit() == 8);
  CHECK(cell_of_recording(row7) == std::vector<Permutation>{Permutation::identity(7)});
}

TEST_CASE("induction splits into one child per addable corner") {
  // cell of w_J((2,1)) in S_3
  CellId cell{rs_pair(parabolic_longest(Composition({2, 1}))).q};
  std::vector<CellId> children = induce_cell(cell);
  REQUIRE(children.size() == 3);
  CHECK(children[0].recording == StandardTableau({{1, 3, 4}, {2}}));
  CHECK(children[1].recording == StandardTableau({{1, 3}, {2, 4}}));
  CHECK(children[2].recording == StandardTableau({{1, 3}, {2}, {4}}));

  // the translated copies of the cell partition the union of the children
  std::set<Permutation> lhs;
  for (const Permutation& c : cell_of_recording(cell.recording))
    for (int i = 1; i <= 4; ++i) lhs.insert(compose(embed(c, 4), x_rep(i, 4)));
  std::set<Permutation> rhs;
  std::size_t total = 0;
  for (const CellId& child : children) {
    std::vector<Permutation> members = cell_of_recording(child.recording);
    total += members.size();
    rhs.insert(members.begin(), members.end());
  }
  CHECK(lhs == rhs);
  CHECK(total == rhs.size());  // disjoint

  // children shapes strictly fall in dominance order
  for (std::size_t i = 0; i + 1 < children.size(); ++i)
    CHECK(dominates_lt(children[i + 1].recording.shape(), children[i].recording.shape()));
}

TEST_CASE("restriction splits into one part per removable corner") {
  CellId cell{rs_pair(parabolic_longest(Composition({2, 1}))).q};
  std::vector<RestrictionPair> parts = restrict_cell(cell);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].corner == Node{1, 2});
  CHECK(parts[0].expelled == 3);
  CHECK(parts[0].child.recording == StandardTableau({{1}, {2}}));
  CHECK(parts[1].corner == Node{2, 1});
  CHECK(parts[1].expelled == 1);
  CHECK(parts[1].child.recording == StandardTableau({{1, 2}}));

  // shapes strictly rise in dominance order and expelled values weakly fall
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    CHECK(dominates_lt(parts[i].child.recording.shape(), parts[i + 1].child.recording.shape()));
    CHECK(parts[i].expelled >= parts[i + 1].expelled);
  }

  // the d-translates of the children partition the cell
  std::set<Permutation> whole = as_set(cell_of_recording(cell.recording));
  std::set<Permutation> rebuilt;
  std::size_t total = 0;
  for (const RestrictionPair& part : parts) {
    CHECK(part.d == inverse(x_rep(part.expelled, 3)));
    for (const Permutation& c : cell_of_recording(part.child.recording)) {
      rebuilt.insert(compose(part.d, embed(c, 3)));
      ++total;
    }
  }
  CHECK(rebuilt == whole);
  CHECK(total == whole.size());

  CHECK_THROWS_AS(restrict_cell(CellId{StandardTableau(std::vector<std::vector<int>>{{1}})}),
                  std::invalid_argument);
}

TEST_CASE("cell report") {
  CellReport r = cell_report(Composition({1, 2, 1}));
  CHECK(r.lambda == Composition({1, 2, 1}));
  CHECK(as_set(r.rim) == as_set(rim_Y(r.lambda)));
  CHECK(r.cell == cell_elements(r.lambda));
  CHECK(r.diagrams.size() == r.rim.size());
  CHECK(r.reduced_words.size() == r.z.size() + r.cell.size());

  // every stored word replays to its key and is reduced
  for (const auto& [key, word] : r.reduced_words) {
    Permutation w = parse_permutation(key);
    CHECK(product_of_word(4, word) == w);
    CHECK(static_cast<int>(word.size()) == length(w));
  }
}
