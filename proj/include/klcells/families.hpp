#pragma once

// Closed-form rims for the composition families with known answers:
// partitions, reversed partitions, hook rearrangements, and (2,1,...,1,2).
// Every builder recomputes the rim by enumeration and refuses to return a
// formula value that disagrees.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcells/cells.hpp"
#include "klcells/diagram.hpp"
#include "klcells/perm.hpp"
#include "klcells/shapes.hpp"

namespace klcells {

enum class Family { partition, reversed_partition, hook_rearrangement, two_ones_two, general };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::partition: return "partition";
    case Family::reversed_partition: return "reversed_partition";
    case Family::hook_rearrangement: return "hook_rearrangement";
    case Family::two_ones_two: return "two_ones_two";
    default: return "general";
  }
}

struct FamilyRim {
  Composition lambda;
  Family family = Family::general;
  std::vector<Permutation> rim;  // length-then-lex order
  int predicted_size = 0;
};

namespace detail {

inline bool weakly_decreasing(const Composition& lambda) {
  for (int i = 2; i <= lambda.size(); ++i)
    if (lambda.part(i - 1) < lambda.part(i)) return false;
  return true;
}

// Confirms the formula against the enumerated rim.
inline FamilyRim checked(Composition lambda, Family family, std::vector<Permutation> rim,
                         int predicted) {
  sort_length_lex(rim);
  std::vector<Permutation> expect = rim_Y(lambda);
  if (rim != expect) throw std::logic_error("family rim disagrees with the enumerated rim");
  if (predicted != static_cast<int>(rim.size()))
    throw std::logic_error("family rim size disagrees with its predicted size");
  return FamilyRim{std::move(lambda), family, std::move(rim), predicted};
}

}  // namespace detail

inline bool is_hook_rearrangement(const Composition& lambda) {
  int r = lambda.size();
  if (r < 3) return false;
  int big_pos = 0;
  for (int i = 1; i <= r; ++i) {
    if (lambda.part(i) == 1) continue;
    if (big_pos != 0) return false;
    big_pos = i;
  }
  return big_pos > 1 && big_pos < r;
}

inline bool is_two_ones_two(const Composition& lambda) {
  int r = lambda.size();
  if (r < 3 || lambda.part(1) != 2 || lambda.part(r) != 2) return false;
  for (int i = 2; i < r; ++i)
    if (lambda.part(i) != 1) return false;
  return true;
}

// Partition: the rim is the single element w_D of the Young diagram.
inline FamilyRim rim_partition(const Composition& lambda) {
  if (!detail::weakly_decreasing(lambda))
    throw std::invalid_argument("rim_partition: parts must decrease weakly");
  std::vector<int> parts;
  for (int i = 1; i <= lambda.size(); ++i) parts.push_back(lambda.part(i));
  Permutation w = w_of(young_diagram(Partition(parts)));
  return detail::checked(lambda, Family::partition, {w}, 1);
}

// Reversed partition: conjugating by the longest element reverses the
// composition, so the rim is w0 w_E w0 for the Young diagram E of the
// reversal.
inline FamilyRim rim_reversed_partition(const Composition& lambda) {
  Composition rev = reversed_composition(lambda);
  if (!detail::weakly_decreasing(rev))
    throw std::invalid_argument("rim_reversed_partition: parts must increase weakly");
  std::vector<int> parts;
  for (int i = 1; i <= rev.size(); ++i) parts.push_back(rev.part(i));
  Permutation w = w0_conjugate(w_of(young_diagram(Partition(parts))));
  return detail::checked(lambda, Family::reversed_partition, {w}, 1);
}

// Hook rearrangement (single part m > 1 strictly inside a run of ones):
// the rim is exactly the w_D of the m special diagrams, one per
// rearrangement of the conjugate (r, 1^{m-1}).
inline FamilyRim rim_hook(const Composition& lambda) {
  if (!is_hook_rearrangement(lambda)) throw std::invalid_argument("rim_hook: not a hook rearrangement");
  int m = max_part(lambda);
  std::vector<Permutation> rim;
  for (const Diagram& d : special_diagrams(lambda)) rim.push_back(w_of(d));
  return detail::checked(lambda, Family::hook_rearrangement, std::move(rim), m);
}

// D(a) for lambda = (2,1^{r-2},2): a column of ones split at row a between
// columns 1 and 2, plus the corner nodes (r,1) and (1,2).
inline Diagram two_ones_two_diagram(int r, int a) {
  if (r < 3 || a < 2 || a > r) throw std::invalid_argument("two_ones_two_diagram: bad indices");
  std::vector<Node> nodes;
  for (int i = 1; i < a; ++i) nodes.push_back(Node{i, 1});
  for (int i = a; i <= r; ++i) nodes.push_back(Node{i, 2});
  nodes.push_back(Node{r, 1});
  nodes.push_back(Node{1, 2});
  return Diagram(std::move(nodes));
}

inline FamilyRim rim_two_ones_two(int r) {
  if (r < 3) throw std::invalid_argument("rim_two_ones_two: need at least three parts");
  std::vector<int> parts{2};
  for (int i = 0; i < r - 2; ++i) parts.push_back(1);
  parts.push_back(2);
  Composition lambda(parts);
  std::vector<Permutation> rim;
  for (int a = 2; a <= r; ++a) rim.push_back(w_of(two_ones_two_diagram(r, a)));
  return detail::checked(lambda, Family::two_ones_two, std::move(rim), r - 1);
}

// Tries each family in turn; outside all of them, falls back to the
// enumerated rim with no size prediction beyond the observed one.
inline FamilyRim family_rim(const Composition& lambda) {
  if (detail::weakly_decreasing(lambda)) return rim_partition(lambda);
  if (detail::weakly_decreasing(reversed_composition(lambda))) return rim_reversed_partition(lambda);
  if (is_hook_rearrangement(lambda)) return rim_hook(lambda);
  if (is_two_ones_two(lambda)) return rim_two_ones_two(lambda.size());
  std::vector<Permutation> rim = rim_Y(lambda);
  int size = static_cast<int>(rim.size());
  return FamilyRim{lambda, Family::general, std::move(rim), size};
}

}  // namespace klcells
