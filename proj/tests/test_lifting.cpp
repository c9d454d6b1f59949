#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "golden_data.hpp"
#include "klcells/cells.hpp"
#include "klcells/lifting.hpp"

using namespace klcells;

namespace {

std::set<Permutation> as_set(const golden::Rows& rows) {
  std::set<Permutation> out;
  for (const auto& r : rows) out.insert(Permutation(r));
  return out;
}

}  // namespace

TEST_CASE("one-node extensions") {
  // a 2x2 block: column extension of the first column
  Diagram d({Node{1, 1}, Node{1, 2}, Node{2, 1}, Node{2, 2}});

  Diagram zero = star_extend_zero(d);
  CHECK(zero == Diagram({Node{1, 2}, Node{1, 3}, Node{2, 2}, Node{2, 3}, Node{3, 1}}));
  CHECK_FALSE(is_admissible(zero));

  // entry 2 = (2,1) is the last node of column 1: nothing slides
  CHECK(star_extend_node(d, 2) ==
        Diagram({Node{1, 1}, Node{1, 2}, Node{2, 1}, Node{2, 2}, Node{3, 1}}));
  // entry 1 = (1,1) is not last: later entries slide one column right
  CHECK(star_extend_node(d, 1) ==
        Diagram({Node{1, 1}, Node{1, 3}, Node{2, 2}, Node{2, 3}, Node{3, 1}}));
  CHECK_FALSE(is_admissible(star_extend_node(d, 1)));
  CHECK_THROWS_AS(star_extend_node(d, 5), std::invalid_argument);

  // extension at entry 1 fails, at entry 2 (rest of column 1) it works
  CHECK(p_of(d) == 2);
  CHECK(q_of(d) == 1);
}

TEST_CASE("theta star on the (2,1,5) rim") {
  Composition lambda({2, 1, 5});
  Permutation y1(golden::rim_215[0]);
  Permutation y2(golden::rim_215[1]);

  CHECK(theta_star(lambda, y1) == Permutation(golden::rim_2151[0]));
  CHECK(theta_star(lambda, y2) == Permutation(golden::rim_2151[1]));

  // connectors: trivial for y1, s8 s7 for y2
  CHECK(theta_star(lambda, y1) == embed(y1, 9));
  CHECK(theta_star(lambda, y2) == compose(embed(y2, 9), x_rep(7, 9)));
  CHECK(p_of(canonical_diagram(y1, lambda)) == 8);
  CHECK(p_of(canonical_diagram(y2, lambda)) == 6);

  CHECK_THROWS_AS(theta_star(lambda, Permutation({2, 1, 3, 4, 5, 6, 7, 8})),
                  std::invalid_argument);
}

TEST_CASE("theta star report") {
  LiftReport r = lift_star_report(Composition({1, 2, 1}));
  CHECK(r.kind == "star");
  CHECK(r.target == Composition({1, 2, 1, 1}));
  CHECK(r.pairs.size() == enumerate_Z(Composition({1, 2, 1})).size());
  for (const auto& [name, ok] : r.checks) {
    INFO(name);
    CHECK(ok);
  }
  for (const LiftPair& p : r.pairs) {
    CHECK(p.image == compose(embed(p.z, 5), p.connector));
    CHECK(in_Z(r.target, p.image));
  }
}

TEST_CASE("theta upper star mirrors theta star") {
  Composition lambda({2, 1});
  for (const Permutation& z : enumerate_Z(lambda)) {
    Permutation image = theta_upper_star(lambda, z);
    CHECK(in_Z(Composition({1, 2, 1}), image));
    CHECK(image == w0_conjugate(theta_star(reversed_composition(lambda), w0_conjugate(z))));
  }
}

TEST_CASE("bump extension of a diagram") {
  Diagram d = young_diagram(Partition({2, 1}));
  CHECK(bump_extend(d, 1) == Diagram({Node{1, 1}, Node{1, 2}, Node{1, 3}, Node{2, 1}}));
  CHECK_THROWS_AS(bump_extend(d, 2), std::invalid_argument);
  CHECK_THROWS_AS(bump_extend(d, 7), std::invalid_argument);
}

TEST_CASE("theta k conditions") {
  CHECK(theta_k_condition(Composition({2, 1, 2, 2}), 1) == ThetaCondition::A);
  CHECK(theta_k_condition(Composition({2, 1, 2, 2}), 3) == ThetaCondition::B);
  CHECK(theta_k_condition(Composition({2, 1, 2, 2}), 4) == ThetaCondition::None);
  // unique maximum with the second-largest part recurring later
  CHECK(theta_k_condition(Composition({1, 3, 1, 2, 1}), 2) == ThetaCondition::C);
  CHECK(theta_k_condition(Composition({1, 3, 2, 1}), 2) == ThetaCondition::C);
  CHECK(theta_k_condition(Composition({1, 2, 3}), 3) == ThetaCondition::None);
  CHECK_THROWS_AS(theta_k_condition(Composition({2, 1, 2, 2}), 2), std::invalid_argument);
  CHECK(to_string(ThetaCondition::A) == "A");
  CHECK(to_string(ThetaCondition::None) == "none");
}

TEST_CASE("theta k sends the rim onto the rim when the part comes first") {
  Composition lambda({2, 1});
  std::set<Permutation> images;
  for (const Permutation& y : rim_Y(lambda)) images.insert(theta_k(lambda, 1, y));
  std::vector<Permutation> target_rim = rim_Y(Composition({3, 1}));
  CHECK(images == std::set<Permutation>(target_rim.begin(), target_rim.end()));
}

TEST_CASE("theta k on (2,1,2,2)") {
  Composition lambda({2, 1, 2, 2});
  std::vector<Permutation> rim = rim_Y(lambda);
  REQUIRE(as_set(golden::rim_2122) == std::set<Permutation>(rim.begin(), rim.end()));

  SECTION("growing part 1 carries the rim onto the rim") {
    Permutation d = inverse(x_rep(3, 8));
    CHECK(d == parse_permutation("(8,7,6,5,4,3)"));
    std::set<Permutation> images;
    for (const Permutation& y : rim) {
      Permutation image = theta_k(lambda, 1, y);
      CHECK(image == compose(d, embed(y, 8)));
      CHECK(is_prefix(d, image));
      images.insert(image);
    }
    CHECK(images == as_set(golden::rim_3122));
  }

  SECTION("growing part 3 lands on two of the six rim elements") {
    Permutation d = inverse(x_rep(6, 8));
    CHECK(d == parse_permutation("(8,7,6)"));
    std::vector<Permutation> target = rim_Y(Composition({2, 1, 3, 2}));
    CHECK(as_set(golden::rim_2132) == std::set<Permutation>(target.begin(), target.end()));
    std::set<Permutation> images;
    for (const Permutation& y : rim) images.insert(theta_k(lambda, 3, y));
    CHECK(images == as_set({golden::rim_2132[3], golden::rim_2132[4]}));
  }

  SECTION("growing part 4 misses the rim") {
    std::set<Permutation> target_rim = as_set(golden::rim_2123);
    for (const Permutation& y : rim) {
      Permutation image = theta_k(lambda, 4, y);
      CHECK(in_Z(Composition({2, 1, 2, 3}), image));
      CHECK(target_rim.count(image) == 0);
    }
  }

  SECTION("the dual lift through the reversal reaches the rim instead") {
    std::set<Permutation> images;
    for (const Permutation& y : rim) images.insert(theta_k_dual(lambda, y));
    CHECK(images == as_set(golden::rim_2123));
  }
}

TEST_CASE("restriction bridge") {
  BridgeReport r = restriction_bridge(Composition({2, 1, 2, 2}), 3);
  CHECK(r.target == Composition({2, 1, 3, 2}));
  CHECK(r.d_bar == inverse(x_rep(4, 8)));
  CHECK(r.d == inverse(x_rep(6, 8)));
  CHECK(r.identity_holds);
  CHECK(r.containment_holds);

  BridgeReport s = restriction_bridge(Composition({2, 1}), 1);
  CHECK(s.d_bar == inverse(x_rep(1, 4)));
  CHECK(s.identity_holds);
  CHECK(s.containment_holds);
}

TEST_CASE("theta k report") {
  LiftReport r = lift_k_report(Composition({2, 1}), 1);
  CHECK(r.kind == "k");
  CHECK(r.k == 1);
  CHECK(r.condition == "A");
  CHECK(r.target == Composition({3, 1}));
  for (const auto& [name, ok] : r.checks) {
    INFO(name);
    CHECK(ok);
  }
}
