#pragma once

// Exhaustive verification over every proper composition of every m <= max_n.
// Each named check either re-derives a computed value through an independent
// route (brute-force scans, subset oracles) or tests an identity the rest of
// the library takes for granted. Failures carry the smallest failing
// composition and a witness.

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "klcells/cells.hpp"
#include "klcells/diagram.hpp"
#include "klcells/families.hpp"
#include "klcells/lifting.hpp"
#include "klcells/perm.hpp"
#include "klcells/rs.hpp"
#include "klcells/shapes.hpp"

namespace klcells {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

namespace detail {

// Cells of S_m keyed by recording tableau, one scan per degree.
struct QCellTables {
  int max_degree = 0;
  std::vector<std::map<StandardTableau, std::vector<Permutation>>> by_degree;

  const std::vector<Permutation>& cell_of(const StandardTableau& q) const {
    int m = q.size();
    if (m < 1 || m > max_degree) throw std::logic_error("cell table: degree not built");
    auto it = by_degree[m].find(q);
    if (it == by_degree[m].end()) throw std::logic_error("cell table: unknown recording tableau");
    return it->second;
  }
};

inline QCellTables build_qcell_tables(int max_degree) {
  QCellTables t;
  t.max_degree = max_degree;
  t.by_degree.resize(max_degree + 1);
  for (int m = 1; m <= max_degree; ++m) {
    std::vector<int> row(m);
    std::iota(row.begin(), row.end(), 1);
    do {
      Permutation w{row};
      t.by_degree[m][rs_pair(w).q].push_back(w);
    } while (std::next_permutation(row.begin(), row.end()));
  }
  return t;
}

struct LambdaReport {
  std::map<std::string, std::string> failures;  // first failure per check
  std::set<std::string> ran;
};

inline bool valid_path(const std::vector<Node>& path) {
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!(path[i - 1].row < path[i].row && path[i - 1].col <= path[i].col)) return false;
  return true;
}

inline void verify_lambda(const Composition& lambda, const QCellTables& tables,
                          LambdaReport& report) {
  const int n = lambda.n();
  const std::string lam = to_string(lambda);
  auto fail = [&](const std::string& check, const std::string& detail) {
    report.failures.emplace(check, lam + ": " + detail);
  };
  auto section = [&](const char* name, auto&& fn) {
    report.ran.insert(name);
    try {
      fn();
    } catch (const std::exception& ex) {
      fail(name, std::string("exception: ") + ex.what());
    }
  };

  section("cell_oracle", [&] {
    std::vector<Permutation> fast = cell_elements(lambda);
    std::vector<Permutation> slow = brute_force_cell(lambda);
    if (fast != slow)
      fail("cell_oracle", "cell has " + std::to_string(fast.size()) + " elements, scan found " +
                              std::to_string(slow.size()));
  });

  // One pass over all distinguished representatives: the canonical diagram
  // round trip, the path invariant against the subset oracle, its dominance
  // bounds, and agreement of the two membership routes.
  section("membership_oracle", [&] {
    report.ran.insert("canonical_roundtrip");
    report.ran.insert("greene_canonical");
    report.ran.insert("type_dominance_bounds");
    Partition lam_conj = conjugate(lambda);
    for (const Permutation& e : distinguished_reps(lambda)) {
      Diagram d = canonical_diagram(e, lambda);
      if (w_of(d) != e || row_composition(d) != lambda) {
        fail("canonical_roundtrip", "w_of(D(d,lambda)) mismatch at " + to_string(e));
        continue;
      }
      Partition nu = subsequence_type(d);
      if (nu != subsequence_type_oracle(d))
        fail("greene_canonical", "path invariant disagrees with the oracle at " + to_string(e));
      Partition mu = sorted_partition(column_composition(d));
      if (!dominates_leq(mu, nu) || !dominates_leq(nu, lam_conj))
        fail("type_dominance_bounds", "bounds fail at " + to_string(e));
      if (in_Z(lambda, e) != in_Z_recording(lambda, e))
        fail("membership_oracle", "membership routes disagree at " + to_string(e));
    }
  });

  std::vector<Permutation> z = enumerate_Z(lambda);
  std::set<Permutation> zset(z.begin(), z.end());
  std::vector<Permutation> rim = rim_Y(lambda);
  std::set<Permutation> rimset(rim.begin(), rim.end());

  section("z_prefix_closed", [&] {
    for (const Permutation& e : z)
      for (int j = 1; j < n; ++j) {
        Permutation shorter = compose(e, adjacent_transposition(n, j));
        if (length(shorter) < length(e) && !zset.count(shorter)) {
          fail("z_prefix_closed", "lower cover of " + to_string(e) + " escapes Z");
          return;
        }
      }
  });

  section("path_row_counts", [&] {
    for (const Permutation& e : z) {
      Diagram d = canonical_diagram(e, lambda);
      for (int u = 1; u <= d.col_count() + 1; ++u) {
        std::vector<std::vector<Node>> paths = kpath_witness(d, u);
        int expect = 0;
        for (int i = 1; i <= lambda.size(); ++i) expect += std::min(u, lambda.part(i));
        int total = 0;
        std::set<Node> seen;
        bool shape_ok = static_cast<int>(paths.size()) <= u;
        std::vector<int> per_row(d.row_count() + 1, 0);
        for (const auto& p : paths) {
          if (!valid_path(p)) shape_ok = false;
          for (const Node& v : p) {
            total += 1;
            per_row[v.row] += 1;
            if (!seen.insert(v).second) shape_ok = false;
          }
        }
        bool rows_ok = true;
        for (int i = 1; i <= lambda.size(); ++i)
          if (per_row[i] != std::min(u, lambda.part(i))) rows_ok = false;
        if (!shape_ok || total != expect || !rows_ok) {
          fail("path_row_counts", "witness for u=" + std::to_string(u) + " at " + to_string(e));
          return;
        }
      }
    }
  });

  // Non-rim elements of Z are exactly the strict prefixes of w_E for the
  // admissible diagrams E with row composition lambda; enumeration is capped
  // at n columns, which the canonical diagrams never exceed.
  if (n <= 6)
    section("rim_via_diagrams", [&] {
      std::vector<std::pair<Permutation, DTableau>> admissible;
      for (const Diagram& d : diagrams_with_row_composition(lambda, n))
        if (is_admissible(d)) admissible.emplace_back(w_of(d), row_fill(d));
      for (const Permutation& e : z) {
        bool extendable = false;
        for (const auto& [w, fill] : admissible)
          if (w != e && is_standard(act(fill, e))) {
            extendable = true;
            break;
          }
        if (extendable == (rimset.count(e) > 0)) {
          fail("rim_via_diagrams", "rim characterization fails at " + to_string(e));
          return;
        }
      }
    });

  section("reverse_conjugation", [&] {
    Composition rev = reversed_composition(lambda);
    std::vector<Permutation> mirrored;
    for (const Permutation& y : rim) mirrored.push_back(w0_conjugate(y));
    sort_length_lex(mirrored);
    if (mirrored != rim_Y(rev)) {
      fail("reverse_conjugation", "rim of the reversal is not the conjugated rim");
      return;
    }
    std::vector<Permutation> cells;
    for (const Permutation& c : cell_elements(lambda)) cells.push_back(w0_conjugate(c));
    sort_length_lex(cells);
    if (cells != cell_elements(rev))
      fail("reverse_conjugation", "cell of the reversal is not the conjugated cell");
  });

  section("special_admissible", [&] {
    std::vector<Permutation> from_diagrams;
    for (const Diagram& d : special_diagrams(lambda)) {
      if (!is_admissible(d)) {
        fail("special_admissible", "special diagram is not admissible");
        return;
      }
      Permutation w = w_of(d);
      if (rimset.count(w)) from_diagrams.push_back(w);
    }
    sort_length_lex(from_diagrams);
    from_diagrams.erase(std::unique(from_diagrams.begin(), from_diagrams.end()),
                        from_diagrams.end());
    if (from_diagrams != special_rim(lambda))
      fail("special_admissible", "special rim disagrees with the diagram enumeration");
  });

  section("theta_star", [&] {
    for (const Permutation& e : z)
      if (is_admissible(star_extend_zero(canonical_diagram(e, lambda)))) {
        fail("theta_star", "zero extension became admissible at " + to_string(e));
        return;
      }
    LiftReport r = lift_star_report(lambda);
    for (const auto& [name, ok] : r.checks)
      if (!ok) {
        fail("theta_star", "check '" + name + "' failed");
        return;
      }
  });

  section("theta_upper_star", [&] {
    Composition target = upper_star(lambda);
    std::vector<Permutation> target_rim = rim_Y(target);
    std::set<Permutation> target_rim_set(target_rim.begin(), target_rim.end());
    std::set<Permutation> images;
    for (const Permutation& e : z) {
      Permutation image = theta_upper_star(lambda, e);
      images.insert(image);
      if (rimset.count(e) && !target_rim_set.count(image)) {
        fail("theta_upper_star", "rim image escapes the target rim at " + to_string(e));
        return;
      }
    }
    if (images.size() != z.size()) {
      fail("theta_upper_star", "not injective");
      return;
    }
    for (const Permutation& y : target_rim)
      if (!images.count(y)) {
        fail("theta_upper_star", "target rim element " + to_string(y) + " missed");
        return;
      }
  });

  section("theta_k", [&] {
    for (int k : max_positions(lambda)) {
      LiftReport r = lift_k_report(lambda, k);
      ThetaCondition cond = theta_k_condition(lambda, k);
      for (const auto& [name, ok] : r.checks) {
        bool required = name == "injective" || name == "bridge_identity" ||
                        name == "bridge_containment" ||
                        (name == "Y_in_Ybar" && cond != ThetaCondition::None) ||
                        (name == "Ytheta_equals_Ybar" && cond == ThetaCondition::A);
        if (required && !ok) {
          fail("theta_k", "k=" + std::to_string(k) + " check '" + name + "' failed");
          return;
        }
      }
      // z outside the rim never lands on the target rim
      std::vector<Permutation> target_rim = rim_Y(bump(lambda, k));
      std::set<Permutation> target_rim_set(target_rim.begin(), target_rim.end());
      for (const LiftPair& p : r.pairs)
        if (!rimset.count(p.z) && target_rim_set.count(p.image)) {
          fail("theta_k", "k=" + std::to_string(k) + ": non-rim " + to_string(p.z) +
                              " landed on the target rim");
          return;
        }
      if (cond == ThetaCondition::A) {
        std::set<Diagram> bumped;
        for (const Diagram& d : rim_diagrams(lambda)) bumped.insert(bump_extend(d, k));
        std::vector<Diagram> target = rim_diagrams(bump(lambda, k));
        if (bumped != std::set<Diagram>(target.begin(), target.end())) {
          fail("theta_k", "k=" + std::to_string(k) + ": bumped rim diagrams miss the target");
          return;
        }
      }
    }
  });

  if (lambda.part(lambda.size()) == max_part(lambda))
    section("theta_k_dual", [&] {
      int r = lambda.size();
      std::vector<Permutation> target_rim = rim_Y(bump(lambda, r));
      std::set<Permutation> images, rim_images;
      for (const Permutation& e : z) {
        Permutation image = theta_k_dual(lambda, e);
        images.insert(image);
        if (rimset.count(e)) rim_images.insert(image);
      }
      if (images.size() != z.size()) {
        fail("theta_k_dual", "not injective");
        return;
      }
      if (rim_images != std::set<Permutation>(target_rim.begin(), target_rim.end()))
        fail("theta_k_dual", "rim does not map onto the target rim");
    });

  if (n + 1 <= tables.max_degree)
    section("induction_union", [&] {
      CellId a{rs_pair(parabolic_longest(lambda)).q};
      std::vector<CellId> children = induce_cell(a);
      for (std::size_t i = 1; i < children.size(); ++i)
        if (!dominates_lt(children[i].recording.shape(), children[i - 1].recording.shape())) {
          fail("induction_union", "child shapes are not strictly falling in dominance");
          return;
        }
      std::set<Permutation> lhs;
      for (const Permutation& c : cell_elements(lambda))
        for (int i = 1; i <= n + 1; ++i) lhs.insert(compose(embed(c, n + 1), x_rep(i, n + 1)));
      std::set<Permutation> rhs;
      std::size_t total = 0;
      for (const CellId& child : children) {
        const std::vector<Permutation>& cell = tables.cell_of(child.recording);
        total += cell.size();
        rhs.insert(cell.begin(), cell.end());
      }
      if (lhs != rhs || total != rhs.size())
        fail("induction_union", "translated cell does not match the union of children");
    });

  if (n >= 2 && n <= tables.max_degree)
    section("restriction_union", [&] {
      CellId a{rs_pair(parabolic_longest(lambda)).q};
      std::vector<RestrictionPair> parts = restrict_cell(a);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!dominates_lt(parts[i - 1].child.recording.shape(), parts[i].child.recording.shape())) {
          fail("restriction_union", "child shapes are not strictly rising in dominance");
          return;
        }
        if (parts[i - 1].expelled < parts[i].expelled) {
          fail("restriction_union", "expelled entries increase");
          return;
        }
      }
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          if (!is_prefix(inverse(parts[i].d), inverse(parts[j].d))) {
            fail("restriction_union", "translating elements fail the prefix chain");
            return;
          }
      const std::vector<Permutation>& whole = tables.cell_of(a.recording);
      std::set<Permutation> whole_set(whole.begin(), whole.end());
      std::set<Permutation> unioned;
      std::size_t total = 0;
      for (const RestrictionPair& p : parts) {
        for (const Permutation& c : tables.cell_of(p.child.recording)) {
          unioned.insert(compose(p.d, embed(c, n)));
          total += 1;
        }
      }
      if (unioned != whole_set || total != whole_set.size())
        fail("restriction_union", "translated children are not a disjoint cover of the cell");
    });

  section("families", [&] {
    FamilyRim f = family_rim(lambda);  // self-checks against the enumerated rim
    if (f.family == Family::hook_rearrangement) {
      for (const Permutation& a : f.rim)
        for (const Permutation& b : f.rim)
          if (a != b && is_prefix(a, b)) {
            fail("families", "hook rim elements are prefix-comparable");
            return;
          }
    }
    if (f.family == Family::two_ones_two) {
      for (const Permutation& e : z) {
        bool covered = false;
        for (const Permutation& y : f.rim)
          if (is_prefix(e, y)) covered = true;
        if (!covered) {
          fail("families", "Z element " + to_string(e) + " is no prefix of the listed rim");
          return;
        }
      }
    }
  });
}

inline Diagram random_diagram(std::mt19937& rng) {
  std::uniform_int_distribution<int> node_count(1, 10);
  int m = node_count(rng);
  std::vector<Node> grid;
  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c) grid.push_back(Node{r, c});
  std::shuffle(grid.begin(), grid.end(), rng);
  grid.resize(m);
  return normalize_principal(std::move(grid));
}

}  // namespace detail

// All checks over every proper composition of every m <= max_n, plus the
// randomized global checks. Order of results is fixed; parallel mode shards
// the compositions and changes nothing observable.
inline std::vector<CheckResult> run_verification(int max_n, bool parallel = false) {
  if (max_n < 1) throw std::invalid_argument("run_verification: bound must be positive");
  std::vector<Composition> lams;
  for (int m = 1; m <= max_n; ++m)
    for (const Composition& c : compositions_of(m)) lams.push_back(c);

  detail::QCellTables tables = detail::build_qcell_tables(std::min(max_n + 1, oracle_limit()));
  std::vector<detail::LambdaReport> reports(lams.size());
  if (parallel) {
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < lams.size(); i = next.fetch_add(1))
          detail::verify_lambda(lams[i], tables, reports[i]);
      });
    for (std::thread& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < lams.size(); ++i)
      detail::verify_lambda(lams[i], tables, reports[i]);
  }

  static const std::vector<std::string> order = {
      "cell_oracle",        "membership_oracle", "canonical_roundtrip",
      "greene_canonical",   "type_dominance_bounds", "z_prefix_closed",
      "path_row_counts",    "rim_via_diagrams",  "reverse_conjugation",
      "special_admissible", "theta_star",        "theta_upper_star",
      "theta_k",            "theta_k_dual",      "induction_union",
      "restriction_union",  "families"};

  std::vector<CheckResult> results;
  for (const std::string& name : order) {
    CheckResult r{name, true, ""};
    int ran = 0;
    for (const detail::LambdaReport& rep : reports) {
      if (rep.ran.count(name)) ++ran;
      auto it = rep.failures.find(name);
      if (it != rep.failures.end() && r.passed) {
        r.passed = false;
        r.detail = it->second;
      }
    }
    if (r.passed) r.detail = "ok over " + std::to_string(ran) + " compositions";
    results.push_back(std::move(r));
  }

  {
    CheckResult r{"greene_random", true, "ok over 500 diagrams"};
    std::mt19937 rng(20240817u);
    for (int trial = 0; trial < 500 && r.passed; ++trial) {
      Diagram d = detail::random_diagram(rng);
      if (subsequence_type(d) != subsequence_type_oracle(d)) {
        r.passed = false;
        r.detail = "path invariant disagrees with the oracle on\n" + render_ascii(d);
      }
    }
    results.push_back(std::move(r));
  }

  {
    CheckResult r{"rs_roundtrip", true, "ok over 1000 permutations"};
    std::mt19937 rng(424243u);
    std::vector<int> row(8);
    std::iota(row.begin(), row.end(), 1);
    for (int trial = 0; trial < 1000 && r.passed; ++trial) {
      std::shuffle(row.begin(), row.end(), rng);
      Permutation w{row};
      RSPair pq = rs_pair(w);
      if (rs_inverse(pq.p, pq.q) != w || rs_pair(inverse(w)).p != pq.q) {
        r.passed = false;
        r.detail = "round trip failed at " + to_string(w);
      }
    }
    results.push_back(std::move(r));
  }

  {
    CheckResult r{"reduced_word_replay", true, "ok over S_1..S_5 and 200 samples of S_8"};
    auto try_word = [&](const Permutation& w) {
      GeneratorWord word = reduced_word(w);
      if (static_cast<int>(word.size()) != length(w) ||
          product_of_word(w.degree(), word) != w) {
        r.passed = false;
        r.detail = "replay failed at " + to_string(w);
      }
    };
    for (int m = 1; m <= 5 && r.passed; ++m) {
      std::vector<int> row(m);
      std::iota(row.begin(), row.end(), 1);
      do {
        try_word(Permutation{row});
      } while (r.passed && std::next_permutation(row.begin(), row.end()));
    }
    std::mt19937 rng(77011u);
    std::vector<int> row(8);
    std::iota(row.begin(), row.end(), 1);
    for (int trial = 0; trial < 200 && r.passed; ++trial) {
      std::shuffle(row.begin(), row.end(), rng);
      try_word(Permutation{row});
    }
    results.push_back(std::move(r));
  }

  return results;
}

}  // namespace klcells
