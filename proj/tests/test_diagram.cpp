#include <catch2/catch_amalgamated.hpp>

#include "golden_data.hpp"
#include "klcells/diagram.hpp"
#include "klcells/perm.hpp"
#include "klcells/shapes.hpp"

using namespace klcells;

namespace {

Diagram from_list(const golden::NodeList& list) {
  std::vector<Node> nodes;
  for (auto [r, c] : list) nodes.push_back(Node{r, c});
  return Diagram(std::move(nodes));
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(Diagram({}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({Node{1, 1}, Node{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({Node{0, 1}}), std::invalid_argument);
  // principality: no empty row or column inside the bounding box
  CHECK_THROWS_AS(Diagram({Node{1, 1}, Node{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({Node{1, 1}, Node{1, 3}}), std::invalid_argument);

  CHECK(normalize_principal({Node{2, 2}, Node{5, 7}}) == Diagram({Node{1, 1}, Node{2, 2}}));
}

TEST_CASE("row and column compositions") {
  Diagram d = from_list(golden::walkthrough_D);
  CHECK(row_composition(d) == Composition({3, 3, 2, 1}));
  CHECK(column_composition(d) == Composition({1, 1, 1, 2, 1, 3}));
  CHECK(d.row_count() == 4);
  CHECK(d.col_count() == 6);
  CHECK(d.size() == 9);
}

TEST_CASE("special diagrams") {
  // Young diagram of a partition is special
  CHECK(is_special(young_diagram(Partition({3, 2, 1}))));
  // one node per row and column in antidiagonal position: not special
  CHECK_FALSE(is_special(Diagram({Node{1, 2}, Node{2, 1}})));
  CHECK(is_special(Diagram({Node{1, 1}, Node{1, 2}, Node{2, 1}})));

  Composition lambda({1, 2, 2, 1});
  std::vector<Diagram> all = special_diagrams(lambda);
  CHECK(all.size() == 2);  // conjugate (4,2) has two rearrangements: (4,2), (2,4)
  for (const Diagram& d : all) {
    CHECK(is_special(d));
    CHECK(row_composition(d) == lambda);
  }

  CHECK(special_diagram(Composition({2, 1, 2}), Composition({2, 3})) ==
        Diagram({Node{1, 1}, Node{1, 2}, Node{2, 2}, Node{3, 1}, Node{3, 2}}));
  CHECK_THROWS_AS(special_diagram(Composition({2, 1}), Composition({1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("fillings and w_D") {
  Diagram d = from_list(golden::walkthrough_D);

  DTableau td = column_fill(d);
  CHECK(td.entries == golden::walkthrough_tD_entries);
  CHECK(is_standard(td));

  Permutation wd = w_of(d);
  CHECK(wd == Permutation(golden::walkthrough_d));
  // t^D w_D = t_D
  CHECK(act(row_fill(d), wd) == td);

  // the wider diagram carries the same w
  CHECK(w_of(from_list(golden::walkthrough_E)) == wd);
}

TEST_CASE("standard tableaux detect prefixes") {
  Diagram d = from_list(golden::walkthrough_D);
  Permutation e1(golden::walkthrough_e1);
  Permutation e2(golden::walkthrough_e2);

  DTableau t1 = act(row_fill(d), e1);
  CHECK(t1.entries == golden::walkthrough_tD_e1);
  CHECK(is_standard(t1));
  CHECK(is_prefix(e1, w_of(d)));

  DTableau t2 = act(row_fill(d), e2);
  CHECK(t2.entries == golden::walkthrough_tD_e2);
  CHECK_FALSE(is_standard(t2));
  CHECK_FALSE(is_prefix(e2, w_of(d)));

  // entry lookup by node
  CHECK(t1.entry_at(Node{3, 1}) == 5);
  CHECK_THROWS_AS(t1.entry_at(Node{1, 1}), std::invalid_argument);
}

TEST_CASE("prefix set matches the standard tableau criterion") {
  Diagram d = Diagram({Node{1, 1}, Node{1, 2}, Node{2, 1}, Node{3, 2}});
  std::set<Permutation> prefixes = prefixes_of_w(d);
  Permutation wd = w_of(d);
  // every member passes both tests, every non-member fails both
  std::vector<int> row(4);
  std::iota(row.begin(), row.end(), 1);
  std::vector<int> base = row;
  do {
    Permutation u(base);
    bool member = prefixes.count(u) > 0;
    CHECK(member == is_prefix(u, wd));
    CHECK(member == is_standard(act(row_fill(d), u)));
  } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("canonical diagram") {
  Permutation d(golden::walkthrough_d);
  Composition lambda({3, 3, 2, 1});
  Diagram canon = canonical_diagram(d, lambda);
  CHECK(canon == from_list(golden::walkthrough_D));
  CHECK(row_composition(canon) == lambda);

  // the Young diagram of a partition is canonical for its own word
  Diagram young = young_diagram(Partition({3, 2, 1}));
  CHECK(canonical_diagram(w_of(young), Composition({3, 2, 1})) == young);

  // the identity's canonical diagram reuses columns across blocks instead
  Diagram flat = canonical_diagram(Permutation::identity(6), Composition({3, 2, 1}));
  CHECK(w_of(flat) == Permutation::identity(6));
  CHECK(column_composition(flat) == Composition({1, 1, 2, 2}));

  // the wider diagram from the same class is not canonical: more columns
  Diagram wide = from_list(golden::walkthrough_E);
  CHECK(wide.col_count() > canon.col_count());

  CHECK_THROWS_AS(canonical_diagram(Permutation({2, 1, 3}), Composition({2, 1})),
                  std::invalid_argument);
}

TEST_CASE("rotate180") {
  Diagram d = from_list(golden::interior_D);
  Diagram dd = rotate180(d);
  CHECK(rotate180(dd) == d);
  CHECK(row_composition(dd) == reversed_composition(row_composition(d)));

  CHECK(rotate180(Diagram({Node{1, 1}, Node{1, 2}})) == Diagram({Node{1, 1}, Node{1, 2}}));
  CHECK(rotate180(Diagram({Node{1, 1}, Node{2, 1}, Node{2, 2}})) ==
        Diagram({Node{1, 1}, Node{1, 2}, Node{2, 2}}));
}

TEST_CASE("diagrams with a fixed row composition") {
  Composition lambda({2, 1});
  std::vector<Diagram> all = diagrams_with_row_composition(lambda, 3);
  for (const Diagram& d : all) {
    CHECK(row_composition(d) == lambda);
    CHECK(d.col_count() <= 3);
  }
  // count by hand: choose 2 of c columns for row 1 and 1 for row 2,
  // then discard non-principal ones; enumeration must agree
  std::set<Diagram> seen(all.begin(), all.end());
  CHECK(seen.size() == all.size());
  CHECK(seen.count(Diagram({Node{1, 1}, Node{1, 2}, Node{2, 1}})) == 1);
  CHECK(seen.count(Diagram({Node{1, 1}, Node{1, 3}, Node{2, 2}})) == 1);
}

TEST_CASE("ascii rendering round trip") {
  Diagram d = from_list(golden::walkthrough_D);
  std::string art = render_ascii(d);
  CHECK(parse_diagram_ascii(art) == d);
  CHECK(art.find('x') != std::string::npos);

  CHECK(parse_diagram_ascii("x x .\n. . x") == Diagram({Node{1, 1}, Node{1, 2}, Node{2, 3}}));
  CHECK_THROWS_AS(parse_diagram_ascii(". .\n. ."), std::invalid_argument);
}
