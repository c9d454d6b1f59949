#pragma once

// Lifting maps between distinguished sets: theta_* into Z(lambda with a
// trailing 1), its mirror theta^* for a leading 1, and theta_k into
// Z(lambda with a maximal part grown by one). All are built from one-node
// extensions of canonical diagrams; each image is cross-checked against its
// closed coset form.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcells/cells.hpp"
#include "klcells/diagram.hpp"
#include "klcells/perm.hpp"
#include "klcells/rs.hpp"
#include "klcells/shapes.hpp"

namespace klcells {

// D'_0: shift every node one column right and start a new last row in
// column 1. Never admissible for admissible D.
inline Diagram star_extend_zero(const Diagram& d) {
  std::vector<Node> nodes;
  for (const Node& u : d.nodes()) nodes.push_back(Node{u.row, u.col + 1});
  nodes.push_back(Node{d.row_count() + 1, 1});
  return Diagram(std::move(nodes));
}

// D'(u_i) for the node u_i with column-fill entry i: nodes after u_i in the
// column order slide one column right, and a new bottom-row node lands in
// u_i's column. For the last node of a column nothing slides.
inline Diagram star_extend_node(const Diagram& d, int i) {
  int n = d.size();
  if (i < 1 || i > n) throw std::invalid_argument("star_extend_node: index out of range");
  std::vector<int> ranks = column_ranks(d);
  std::vector<Node> by_rank(n + 1);
  for (int t = 0; t < n; ++t) by_rank[ranks[t]] = d.nodes()[t];
  const Node u = by_rank[i];
  bool last_in_column = (i == n) || (by_rank[i + 1].col != u.col);
  std::vector<Node> nodes;
  for (int t = 0; t < n; ++t) {
    Node v = d.nodes()[t];
    if (!last_in_column && ranks[t] > i) v.col += 1;
    nodes.push_back(v);
  }
  nodes.push_back(Node{d.row_count() + 1, u.col});
  return Diagram(std::move(nodes));
}

// Smallest i whose one-node extension stays admissible. Admissibility is
// monotone in i, so scan downward from n.
inline int p_of(const Diagram& d) {
  if (!is_admissible(d)) throw std::invalid_argument("p_of: diagram is not admissible");
  int n = d.size();
  if (!is_admissible(star_extend_node(d, n)))
    throw std::logic_error("p_of: extension at the last node must stay admissible");
  for (int i = n - 1; i >= 1; --i)
    if (!is_admissible(star_extend_node(d, i))) return i + 1;
  return 1;
}

// Smallest column j with D + {(r+1, j)} admissible. Coincides with the
// column of u_p, whose extension is the same diagram; both facts are
// rechecked here.
inline int q_of(const Diagram& d) {
  if (!is_admissible(d)) throw std::invalid_argument("q_of: diagram is not admissible");
  int q = 0;
  for (int j = 1; j <= d.col_count(); ++j) {
    std::vector<Node> nodes = d.nodes();
    nodes.push_back(Node{d.row_count() + 1, j});
    if (is_admissible(Diagram(std::move(nodes)))) {
      q = j;
      break;
    }
  }
  if (q == 0) throw std::logic_error("q_of: no admissible column extension exists");
  int p = p_of(d);
  std::vector<int> ranks = column_ranks(d);
  Node up{};
  for (int t = 0; t < d.size(); ++t)
    if (ranks[t] == p) up = d.nodes()[t];
  std::vector<Node> nodes = d.nodes();
  nodes.push_back(Node{d.row_count() + 1, q});
  if (up.col != q || star_extend_node(d, p) != Diagram(std::move(nodes)))
    throw std::logic_error("q_of: column extension disagrees with the node extension at p");
  return q;
}

// theta_*: Z(lambda) -> Z(lambda_*). The image is w of the extended
// canonical diagram; it factors as z x_{p+1} with x as in the coset
// decomposition of S_{n+1}.
inline Permutation theta_star(const Composition& lambda, const Permutation& z) {
  if (!in_Z(lambda, z)) throw std::invalid_argument("theta_star: element is not in Z(lambda)");
  int n = lambda.n();
  Diagram d = canonical_diagram(z, lambda);
  int p = p_of(d);
  int q = q_of(d);
  std::vector<Node> nodes = d.nodes();
  nodes.push_back(Node{d.row_count() + 1, q});
  Permutation image = w_of(Diagram(std::move(nodes)));
  if (image != compose(embed(z, n + 1), x_rep(p + 1, n + 1)))
    throw std::logic_error("theta_star: image disagrees with its coset form");
  if (!in_Z(lower_star(lambda), image))
    throw std::logic_error("theta_star: image left Z(lambda_*)");
  return image;
}

// theta^*: Z(lambda) -> Z(lambda^*), the longest-element mirror of
// theta_* applied to the reversed composition.
inline Permutation theta_upper_star(const Composition& lambda, const Permutation& z) {
  if (!in_Z(lambda, z)) throw std::invalid_argument("theta_upper_star: element is not in Z(lambda)");
  int n = lambda.n();
  Permutation mirrored = w0_conjugate(z);
  Permutation lifted = theta_star(reversed_composition(lambda), mirrored);
  Permutation image = w0_conjugate(lifted);
  if (!in_Z(upper_star(lambda), image))
    throw std::logic_error("theta_upper_star: image left Z(lambda^*)");
  (void)n;
  return image;
}

// D^(k): lengthen row k by a node in a fresh last column; row k must be a
// maximal row.
inline Diagram bump_extend(const Diagram& d, int k) {
  Composition rows = row_composition(d);
  if (k < 1 || k > rows.size() || rows.part(k) != max_part(rows))
    throw std::invalid_argument("bump_extend: row is not maximal");
  std::vector<Node> nodes = d.nodes();
  nodes.push_back(Node{k, d.col_count() + 1});
  return Diagram(std::move(nodes));
}

// theta_k: Z(lambda) -> Z(lambda^(k)) for a maximal part k; z maps to d z
// with d = s_{p+1} ... s_n, p the partial sum through part k. Equals w of
// the bumped canonical diagram.
inline Permutation theta_k(const Composition& lambda, int k, const Permutation& z) {
  if (!in_Z(lambda, z)) throw std::invalid_argument("theta_k: element is not in Z(lambda)");
  Composition target = bump(lambda, k);  // validates k
  int n = lambda.n();
  int p = 0;
  for (int i = 1; i <= k; ++i) p += lambda.part(i);
  Permutation d = inverse(x_rep(p + 1, n + 1));
  Permutation image = compose(d, embed(z, n + 1));
  if (image != w_of(bump_extend(canonical_diagram(z, lambda), k)))
    throw std::logic_error("theta_k: coset form disagrees with the bumped diagram");
  if (!in_Z(target, image)) throw std::logic_error("theta_k: image left Z(lambda^(k))");
  return image;
}

enum class ThetaCondition { A, B, C, None };

inline std::string to_string(ThetaCondition c) {
  switch (c) {
    case ThetaCondition::A: return "A";
    case ThetaCondition::B: return "B";
    case ThetaCondition::C: return "C";
    default: return "none";
  }
}

// A: k is the first part. B: a later part is also maximal. C: k is the
// unique maximal part and the largest among the remaining parts recurs
// after position k. Under any of these the rim maps into the rim.
inline ThetaCondition theta_k_condition(const Composition& lambda, int k) {
  std::vector<int> m = max_positions(lambda);
  if (std::find(m.begin(), m.end(), k) == m.end())
    throw std::invalid_argument("theta_k_condition: part is not maximal");
  if (k == 1) return ThetaCondition::A;
  if (k != m.back()) return ThetaCondition::B;
  if (m.size() == 1 && lambda.size() >= 2) {
    int second = 0, last_pos = 0;
    for (int i = 1; i <= lambda.size(); ++i)
      if (i != k) second = std::max(second, lambda.part(i));
    for (int i = 1; i <= lambda.size(); ++i)
      if (lambda.part(i) == second) last_pos = i;
    if (last_pos > k) return ThetaCondition::C;
  }
  return ThetaCondition::None;
}

// Bump of the last part, reached through reversal: conjugate by the longest
// elements around theta_1 of the reversed composition.
inline Permutation theta_k_dual(const Composition& lambda, const Permutation& z) {
  int r = lambda.size();
  std::vector<int> m = max_positions(lambda);
  if (std::find(m.begin(), m.end(), r) == m.end())
    throw std::invalid_argument("theta_k_dual: last part is not maximal");
  if (!in_Z(lambda, z)) throw std::invalid_argument("theta_k_dual: element is not in Z(lambda)");
  Permutation lifted = theta_k(reversed_composition(lambda), 1, w0_conjugate(z));
  Permutation image = w0_conjugate(lifted);
  if (!in_Z(bump(lambda, r), image))
    throw std::logic_error("theta_k_dual: image left Z(lambda^(r))");
  return image;
}

// d-bar = s_{q+1} ... s_n with q the partial sum before part k. It
// intertwines the parabolic longest elements: d-bar w_J(lambda) =
// w_J(lambda^(k)) d, and translates the whole cell into the target cell.
struct BridgeReport {
  Composition lambda;
  Composition target;
  int k = 0;
  Permutation d_bar;
  Permutation d;
  bool identity_holds = false;
  bool containment_holds = false;
};

inline BridgeReport restriction_bridge(const Composition& lambda, int k) {
  Composition target = bump(lambda, k);  // validates k
  int n = lambda.n();
  int q = 0;
  for (int i = 1; i < k; ++i) q += lambda.part(i);
  int p = q + lambda.part(k);
  BridgeReport r{lambda, target, k, inverse(x_rep(q + 1, n + 1)), inverse(x_rep(p + 1, n + 1))};
  r.identity_holds = compose(r.d_bar, embed(parabolic_longest(lambda), n + 1)) ==
                     compose(parabolic_longest(target), r.d);
  std::vector<Permutation> big = cell_elements(target);
  std::set<Permutation> big_set(big.begin(), big.end());
  r.containment_holds = true;
  for (const Permutation& c : cell_elements(lambda))
    if (!big_set.count(compose(r.d_bar, embed(c, n + 1)))) {
      r.containment_holds = false;
      break;
    }
  return r;
}

struct LiftPair {
  Permutation z;
  Permutation image;
  Permutation connector;  // z^{-1} image
};

struct LiftReport {
  Composition lambda;
  Composition target;
  std::string kind;  // "star" or "k"
  int k = 0;
  std::string condition;  // theta_k condition, empty for star
  std::vector<LiftPair> pairs;
  std::map<std::string, bool> checks;
};

inline LiftReport lift_star_report(const Composition& lambda) {
  LiftReport r{lambda, lower_star(lambda), "star", 0, ""};
  std::vector<Permutation> z = enumerate_Z(lambda);
  std::vector<Permutation> rim = rim_Y(lambda);
  std::set<Permutation> rim_set(rim.begin(), rim.end());
  std::vector<Permutation> target_rim = rim_Y(r.target);
  std::set<Permutation> target_rim_set(target_rim.begin(), target_rim.end());
  std::set<Permutation> target_z;
  for (const Permutation& e : enumerate_Z(r.target)) target_z.insert(e);

  int n = lambda.n();
  std::set<Permutation> images;
  bool rim_to_rim = true, connector_maximal = true;
  for (const Permutation& e : z) {
    Permutation image = theta_star(lambda, e);
    Permutation connector = compose(inverse(embed(e, n + 1)), image);
    r.pairs.push_back(LiftPair{e, image, connector});
    images.insert(image);
    if (rim_set.count(e) && !target_rim_set.count(image)) rim_to_rim = false;
    for (int i = 1; i <= n + 1; ++i) {
      Permutation x = x_rep(i, n + 1);
      if (target_z.count(compose(embed(e, n + 1), x)) && !is_prefix(x, connector))
        connector_maximal = false;
    }
  }
  bool rim_covered = true;
  for (const Permutation& y : target_rim)
    if (!images.count(y)) rim_covered = false;
  r.checks["injective"] = images.size() == z.size();
  r.checks["Y_in_Ystar"] = rim_to_rim;
  r.checks["Ystar_in_thetaZ"] = rim_covered;
  r.checks["connector_maximal"] = connector_maximal;
  return r;
}

inline LiftReport lift_k_report(const Composition& lambda, int k) {
  LiftReport r{lambda, bump(lambda, k), "k", k, to_string(theta_k_condition(lambda, k))};
  std::vector<Permutation> z = enumerate_Z(lambda);
  std::vector<Permutation> rim = rim_Y(lambda);
  std::set<Permutation> rim_set(rim.begin(), rim.end());
  std::vector<Permutation> target_rim = rim_Y(r.target);
  std::set<Permutation> target_rim_set(target_rim.begin(), target_rim.end());

  std::set<Permutation> images, rim_images;
  for (const Permutation& e : z) {
    Permutation image = theta_k(lambda, k, e);
    r.pairs.push_back(LiftPair{e, image, compose(inverse(embed(e, lambda.n() + 1)), image)});
    images.insert(image);
    if (rim_set.count(e)) rim_images.insert(image);
  }
  bool rim_to_rim = true;
  for (const Permutation& y : rim_images)
    if (!target_rim_set.count(y)) rim_to_rim = false;
  r.checks["injective"] = images.size() == z.size();
  r.checks["Y_in_Ybar"] = rim_to_rim;
  r.checks["Ytheta_equals_Ybar"] = rim_to_rim && rim_images.size() == target_rim_set.size();
  BridgeReport bridge = restriction_bridge(lambda, k);
  r.checks["bridge_identity"] = bridge.identity_holds;
  r.checks["bridge_containment"] = bridge.containment_holds;
  return r;
}

}  // namespace klcells
