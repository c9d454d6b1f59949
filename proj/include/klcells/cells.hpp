#pragma once

// The right cell attached to a composition lambda: membership in the
// distinguished set Z(lambda), its enumeration, the rim Y(lambda) of
// maximal elements, canonical and special rim diagrams, the full cell
// w_J(lambda) Z(lambda), and cell induction/restriction on recording
// tableaux. Brute-force scans over S_n act as oracles.

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcells/diagram.hpp"
#include "klcells/perm.hpp"
#include "klcells/rs.hpp"
#include "klcells/shapes.hpp"

namespace klcells {

// Membership via the path invariant: e distinguished and the shape of
// w_J(lambda) e equal to conjugate(lambda).
inline bool in_Z(const Composition& lambda, const Permutation& e) {
  if (!is_distinguished(e, lambda)) return false;
  return shape_of(compose(parabolic_longest(lambda), e)) == conjugate(lambda);
}

// Membership via recording tableaux: w_J(lambda) e lies in the cell of
// w_J(lambda). Independent of in_Z; the two must agree.
inline bool in_Z_recording(const Composition& lambda, const Permutation& e) {
  if (!is_distinguished(e, lambda)) return false;
  Permutation wj = parabolic_longest(lambda);
  return rs_pair(compose(wj, e)).q == rs_pair(wj).q;
}

inline void sort_length_lex(std::vector<Permutation>& v) {
  std::vector<std::pair<int, Permutation>> keyed;
  keyed.reserve(v.size());
  for (auto& w : v) keyed.emplace_back(length(w), w);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

// Z(lambda) is closed under prefixes, so a breadth-first walk over
// length-increasing right extensions from the identity reaches all of it.
inline std::vector<Permutation> enumerate_Z(const Composition& lambda) {
  int n = lambda.n();
  std::set<Permutation> z;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  z.insert(frontier.front());
  while (!frontier.empty()) {
    std::set<Permutation> next;
    for (const Permutation& e : frontier) {
      std::vector<int> pos(n + 1);
      for (int i = 1; i <= n; ++i) pos[e(i)] = i;
      for (int j = 1; j < n; ++j) {
        if (pos[j] > pos[j + 1]) continue;  // e s_j would be shorter
        std::vector<int> row = e.row();
        std::swap(row[pos[j] - 1], row[pos[j + 1] - 1]);
        Permutation c(std::move(row));
        if (z.count(c) || next.count(c)) continue;
        if (in_Z(lambda, c)) next.insert(c);
      }
    }
    z.insert(next.begin(), next.end());
    frontier.assign(next.begin(), next.end());
  }
  std::vector<Permutation> out(z.begin(), z.end());
  sort_length_lex(out);
  return out;
}

// Y(lambda): elements of Z(lambda) with no length-increasing extension
// inside Z(lambda).
inline std::vector<Permutation> rim_Y(const Composition& lambda) {
  std::vector<Permutation> z = enumerate_Z(lambda);
  std::set<Permutation> zset(z.begin(), z.end());
  int n = lambda.n();
  std::vector<Permutation> out;
  for (const Permutation& e : z) {
    std::vector<int> pos(n + 1);
    for (int i = 1; i <= n; ++i) pos[e(i)] = i;
    bool maximal = true;
    for (int j = 1; j < n && maximal; ++j) {
      if (pos[j] > pos[j + 1]) continue;
      std::vector<int> row = e.row();
      std::swap(row[pos[j] - 1], row[pos[j + 1] - 1]);
      if (zset.count(Permutation(std::move(row)))) maximal = false;
    }
    if (maximal) out.push_back(e);
  }
  return out;  // inherits length-then-lex order from z
}

// E^(lambda): canonical diagrams of the rim elements, in rim order.
inline std::vector<Diagram> rim_diagrams(const Composition& lambda) {
  std::vector<Diagram> out;
  for (const Permutation& y : rim_Y(lambda)) out.push_back(canonical_diagram(y, lambda));
  return out;
}

// Y_s(lambda): rim elements whose canonical diagram is special.
inline std::vector<Permutation> special_rim(const Composition& lambda) {
  std::vector<Permutation> out;
  for (const Permutation& y : rim_Y(lambda))
    if (is_special(canonical_diagram(y, lambda))) out.push_back(y);
  return out;
}

inline std::vector<Permutation> cell_elements(const Composition& lambda) {
  Permutation wj = parabolic_longest(lambda);
  std::vector<Permutation> out;
  for (const Permutation& e : enumerate_Z(lambda)) out.push_back(compose(wj, e));
  sort_length_lex(out);
  return out;
}

// Size guard for the n! scans; KLCELLS_ORACLE_LIMIT overrides.
inline int oracle_limit() {
  if (const char* env = std::getenv("KLCELLS_ORACLE_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

// All w in S_n with recording tableau q, by exhaustive scan in
// lexicographic order.
inline std::vector<Permutation> cell_of_recording(const StandardTableau& q) {
  int n = q.size();
  if (n > oracle_limit())
    throw std::invalid_argument("cell_of_recording: degree exceeds the brute-force guard (" +
                                std::to_string(oracle_limit()) + ")");
  if (!q.has_full_content()) throw std::invalid_argument("cell_of_recording: tableau must contain 1..n");
  std::vector<int> row(n);
  for (int i = 0; i < n; ++i) row[i] = i + 1;
  std::vector<Permutation> out;
  do {
    Permutation w{row};
    if (rs_pair(w).q == q) out.push_back(w);
  } while (std::next_permutation(row.begin(), row.end()));
  sort_length_lex(out);
  return out;
}

inline std::vector<Permutation> brute_force_cell(const Composition& lambda) {
  return cell_of_recording(rs_pair(parabolic_longest(lambda)).q);
}

// All distinguished coset representatives for lambda: strictly increasing
// values within each block of positions.
inline std::vector<Permutation> distinguished_reps(const Composition& lambda) {
  int n = lambda.n();
  std::vector<Permutation> out;
  std::vector<int> row;
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self, int block) -> void {
    if (block == lambda.size()) {
      out.push_back(Permutation(row));
      return;
    }
    int k = lambda.part(block + 1);
    std::vector<int> pick(k);
    auto choose = [&](auto&& chooseself, int from, int got) -> void {
      if (got == k) {
        for (int v : pick) row.push_back(v);
        self(self, block + 1);
        for (int i = 0; i < k; ++i) row.pop_back();
        return;
      }
      for (int v = from; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        pick[got] = v;
        chooseself(chooseself, v + 1, got + 1);
        used[v] = 0;
      }
    };
    choose(choose, 1, 0);
  };
  rec(rec, 0);
  return out;
}

// x_i = s_n s_{n-1} ... s_i in S_m (m = n+1): the cycle (i, i+1, ..., m).
// x_m is the identity. These are the minimal coset representatives used by
// induction and restriction.
inline Permutation x_rep(int i, int m) {
  if (i < 1 || i > m) throw std::invalid_argument("x_rep: index out of range");
  std::vector<int> row(m);
  for (int j = 1; j < i; ++j) row[j - 1] = j;
  for (int j = i; j < m; ++j) row[j - 1] = j + 1;
  row[m - 1] = i;
  return Permutation(std::move(row));
}

// A cell is named by its recording tableau.
struct CellId {
  StandardTableau recording;

  friend bool operator==(const CellId& a, const CellId& b) { return a.recording == b.recording; }
  friend bool operator<(const CellId& a, const CellId& b) { return a.recording < b.recording; }
};

// Children under induction to S_{n+1}: add the new letter at each addable
// corner, ordered by corner. Earlier corners give dominance-larger shapes.
inline std::vector<CellId> induce_cell(const CellId& a) {
  if (!a.recording.has_full_content())
    throw std::invalid_argument("induce_cell: tableau must contain 1..n");
  int n = a.recording.size();
  std::vector<CellId> out;
  for (const Node& corner : corners(a.recording.shape()).outer) {
    std::vector<std::vector<int>> rows = a.recording.rows();
    if (corner.row > static_cast<int>(rows.size())) rows.push_back({});
    rows[corner.row - 1].push_back(n + 1);
    out.push_back(CellId{StandardTableau(rows)});
  }
  return out;
}

struct RestrictionPair {
  Node corner;
  int expelled;    // i(k): the value pushed out of the first row
  Permutation d;   // x_{i(k)}^{-1} in S_{n+1}
  CellId child;    // cell of S_n
};

// Restriction to S_n: reverse-insert at each removable corner of the
// recording tableau. The cell is the disjoint union of the d-translates of
// its children's cells.
inline std::vector<RestrictionPair> restrict_cell(const CellId& a) {
  if (!a.recording.has_full_content())
    throw std::invalid_argument("restrict_cell: tableau must contain 1..n");
  int m = a.recording.size();  // n+1
  if (m < 2) throw std::invalid_argument("restrict_cell: nothing to restrict");
  std::vector<RestrictionPair> out;
  for (const Node& corner : corners(a.recording.shape()).inner) {
    auto [reduced, i] = reverse_insert(a.recording, corner);
    std::vector<std::vector<int>> rows = reduced.rows();
    for (auto& row : rows)
      for (int& e : row)
        if (e > i) --e;  // apply x_i^{-1} entrywise
    out.push_back(RestrictionPair{corner, i, inverse(x_rep(i, m)), CellId{StandardTableau(rows)}});
  }
  return out;
}

struct CellReport {
  Composition lambda;
  std::vector<Permutation> z;
  std::vector<Permutation> rim;
  std::vector<Permutation> special;
  std::vector<Diagram> diagrams;  // canonical diagrams of the rim
  std::vector<Permutation> cell;
  std::map<std::string, GeneratorWord> reduced_words;
};

// Reduced words: prefixes carry their own canonical word; cell elements get
// the concatenation word(w_J) ++ word(e), reduced because the lengths add.
inline CellReport cell_report(const Composition& lambda) {
  CellReport r{lambda, enumerate_Z(lambda), {}, {}, {}, {}, {}};
  std::set<Permutation> zset(r.z.begin(), r.z.end());
  Permutation wj = parabolic_longest(lambda);
  GeneratorWord wj_word = reduced_word(wj);
  r.rim = rim_Y(lambda);
  for (const Permutation& y : r.rim) r.diagrams.push_back(canonical_diagram(y, lambda));
  for (const Permutation& y : r.rim)
    if (is_special(canonical_diagram(y, lambda))) r.special.push_back(y);
  for (const Permutation& e : r.z) {
    r.reduced_words[to_string(e)] = reduced_word(e);
    Permutation c = compose(wj, e);
    r.cell.push_back(c);
    GeneratorWord word = wj_word;
    GeneratorWord tail = reduced_word(e);
    word.insert(word.end(), tail.begin(), tail.end());
    r.reduced_words[to_string(c)] = word;
  }
  sort_length_lex(r.cell);
  return r;
}

}  // namespace klcells
