#pragma once

// Row insertion and recording tableaux, plus the path invariants of a
// diagram. subsequence_type goes through the symmetric group; the oracle
// recomputes it by exhaustive subset scan with an antichain bound, and
// witnesses come from a minimum chain cover, so the two routes are
// independent.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcells/diagram.hpp"
#include "klcells/perm.hpp"
#include "klcells/shapes.hpp"

namespace klcells {

// Rows and columns strictly increase; entries are distinct positive
// integers. Entries are exactly 1..n for the tableaux produced by the
// correspondence, but intermediate restrictions may skip values.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) throw std::invalid_argument("tableau: empty row");
      if (r > 0 && rows_[r].size() > rows_[r - 1].size())
        throw std::invalid_argument("tableau: shape is not weakly decreasing");
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (rows_[r][c] < 1) throw std::invalid_argument("tableau: entries must be positive");
        if (c > 0 && rows_[r][c] <= rows_[r][c - 1])
          throw std::invalid_argument("tableau: rows must strictly increase");
        if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
          throw std::invalid_argument("tableau: columns must strictly increase");
      }
    }
    std::vector<int> all;
    for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw std::invalid_argument("tableau: duplicate entry");
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
  }
  Partition shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(parts);
  }
  bool empty() const { return rows_.empty(); }

  // Entries are exactly 1..n.
  bool has_full_content() const {
    std::vector<int> all;
    for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const StandardTableau& a, const StandardTableau& b) { return !(a == b); }
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

struct Corners {
  std::vector<Node> inner;  // removable boxes
  std::vector<Node> outer;  // addable boxes
};

inline Corners corners(const Partition& shape) {
  Corners c;
  int r = shape.size();
  if (r == 0) {
    c.outer.push_back(Node{1, 1});
    return c;
  }
  for (int i = 1; i < r; ++i)
    if (shape.part(i) > shape.part(i + 1)) c.inner.push_back(Node{i, shape.part(i)});
  c.inner.push_back(Node{r, shape.part(r)});
  c.outer.push_back(Node{1, shape.part(1) + 1});
  for (int i = 2; i <= r; ++i)
    if (shape.part(i - 1) > shape.part(i)) c.outer.push_back(Node{i, shape.part(i) + 1});
  c.outer.push_back(Node{r + 1, 1});
  return c;
}

namespace detail {

// Bump v into the rows; returns the box where the new entry settled.
inline Node bump_into(std::vector<std::vector<int>>& rows, int v) {
  std::size_t r = 0;
  while (true) {
    if (r == rows.size()) {
      rows.push_back({v});
      return Node{static_cast<int>(r) + 1, 1};
    }
    auto it = std::upper_bound(rows[r].begin(), rows[r].end(), v);
    if (it == rows[r].end()) {
      rows[r].push_back(v);
      return Node{static_cast<int>(r) + 1, static_cast<int>(rows[r].size())};
    }
    std::swap(*it, v);
    ++r;
  }
}

}  // namespace detail

struct RSPair {
  StandardTableau p;  // insertion tableau
  StandardTableau q;  // recording tableau
};

inline RSPair rs_pair(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int k = 1; k <= w.degree(); ++k) {
    Node box = detail::bump_into(p, w(k));
    if (box.row > static_cast<int>(q.size())) q.push_back({});
    q[box.row - 1].push_back(k);
  }
  return RSPair{StandardTableau(p), StandardTableau(q)};
}

inline Partition shape_of(const Permutation& w) { return rs_pair(w).p.shape(); }

inline StandardTableau row_insert(const StandardTableau& t, int v, Node* box = nullptr) {
  std::vector<std::vector<int>> rows = t.rows();
  Node b = detail::bump_into(rows, v);
  if (box) *box = b;
  return StandardTableau(rows);
}

// Remove the inner corner and unbump upwards; returns the expelled value.
inline std::pair<StandardTableau, int> reverse_insert(const StandardTableau& t, const Node& corner) {
  const auto& rows = t.rows();
  int r = corner.row, c = corner.col;
  if (r < 1 || r > static_cast<int>(rows.size()) || c != static_cast<int>(rows[r - 1].size()) ||
      (r < static_cast<int>(rows.size()) && rows[r].size() >= rows[r - 1].size()))
    throw std::invalid_argument("reverse_insert: not an inner corner");
  std::vector<std::vector<int>> out = rows;
  int carry = out[r - 1].back();
  out[r - 1].pop_back();
  if (out[r - 1].empty()) out.pop_back();
  for (int i = r - 1; i >= 1; --i) {
    auto& row = out[i - 1];
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    if (it == row.begin()) throw std::logic_error("reverse_insert: no entry below the carry");
    --it;
    std::swap(*it, carry);
  }
  return {StandardTableau(out), carry};
}

inline Permutation rs_inverse(const StandardTableau& p, const StandardTableau& q) {
  if (p.shape() != q.shape()) throw std::invalid_argument("rs_inverse: shapes differ");
  if (!p.has_full_content() || !q.has_full_content())
    throw std::invalid_argument("rs_inverse: tableaux must contain 1..n");
  int n = p.size();
  std::vector<std::vector<int>> qrows = q.rows();
  StandardTableau cur = p;
  std::vector<int> row(n);
  for (int v = n; v >= 1; --v) {
    int r = -1;
    for (std::size_t i = 0; i < qrows.size(); ++i)
      if (!qrows[i].empty() && qrows[i].back() == v) {
        r = static_cast<int>(i);
        break;
      }
    if (r < 0) throw std::logic_error("rs_inverse: recording tableau is not standard");
    Node corner{r + 1, static_cast<int>(qrows[r].size())};
    auto [next, expelled] = reverse_insert(cur, corner);
    cur = next;
    row[v - 1] = expelled;
    qrows[r].pop_back();
    if (qrows[r].empty()) qrows.pop_back();
  }
  return Permutation(row);
}

inline std::string render_ascii(const StandardTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += '\n';
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(t.rows()[r][c]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Path invariants

// nu_1 >= nu_2 >= ... where nu_1 + .. + nu_k is the largest total size of k
// disjoint paths in the diagram. Computed through the symmetric group.
inline Partition subsequence_type(const Diagram& d) {
  return shape_of(compose(parabolic_longest(row_composition(d)), w_of(d)));
}

inline constexpr int kPathOracleNodeLimit = 14;

namespace detail {

// Largest antichain inside the masked node subset. Antichains consist of
// blocks of same-row nodes whose columns strictly decrease as the row
// increases; scan rows bottom-up, g[t] = best count with all columns <= t.
inline int max_antichain(const Diagram& d, unsigned mask) {
  int cmax = d.col_count();
  std::vector<std::vector<int>> cols_by_row(d.row_count() + 1);
  for (int i = 0; i < d.size(); ++i)
    if (mask & (1u << i)) cols_by_row[d.nodes()[i].row].push_back(d.nodes()[i].col);
  std::vector<int> g(cmax + 1, 0);
  for (int row = d.row_count(); row >= 1; --row) {
    auto& cs = cols_by_row[row];
    if (cs.empty()) continue;
    std::sort(cs.begin(), cs.end());
    std::vector<int> next = g;
    for (int t = 1; t <= cmax; ++t) {
      for (int m = 0; m < t; ++m) {
        int cnt = static_cast<int>(std::upper_bound(cs.begin(), cs.end(), t) -
                                   std::upper_bound(cs.begin(), cs.end(), m));
        if (cnt > 0) next[t] = std::max(next[t], g[m] + cnt);
      }
      next[t] = std::max(next[t], next[t - 1]);
    }
    g = std::move(next);
  }
  return g[cmax];
}

inline void require_oracle_size(const Diagram& d) {
  if (d.size() > kPathOracleNodeLimit)
    throw std::invalid_argument("path oracle: diagram exceeds " +
                                std::to_string(kPathOracleNodeLimit) + " nodes");
}

}  // namespace detail

// a_k = size of the largest node subset whose antichains have at most k
// elements (equivalently, coverable by k paths); returned for k = 1.. until
// a_k reaches the diagram size.
inline std::vector<int> oracle_path_sizes(const Diagram& d) {
  detail::require_oracle_size(d);
  int m = d.size();
  std::vector<int> best(m + 1, 0);  // best[a] = largest subset with antichain number a
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    int a = detail::max_antichain(d, mask);
    best[a] = std::max(best[a], __builtin_popcount(mask));
  }
  std::vector<int> ans;
  int cum = 0;
  for (int k = 1; k <= m; ++k) {
    cum = std::max(cum, best[k]);
    ans.push_back(cum);
    if (cum == m) break;
  }
  return ans;
}

inline Partition subsequence_type_oracle(const Diagram& d) {
  std::vector<int> a = oracle_path_sizes(d);
  std::vector<int> diffs;
  int prev = 0;
  for (int v : a) {
    diffs.push_back(v - prev);
    prev = v;
  }
  return Partition(diffs);  // weak decrease is part of the invariant
}

// Largest subset with antichain number at most k, as node indices; the
// lexicographically first mask of maximal size, so deterministic.
inline std::vector<int> oracle_best_subset(const Diagram& d, int k) {
  detail::require_oracle_size(d);
  int m = d.size();
  unsigned best_mask = 0;
  int best_size = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz <= best_size) continue;
    if (detail::max_antichain(d, mask) <= k) {
      best_mask = mask;
      best_size = sz;
    }
  }
  std::vector<int> idx;
  for (int i = 0; i < m; ++i)
    if (best_mask & (1u << i)) idx.push_back(i);
  return idx;
}

// Witness paths: a minimum chain cover of the best subset, via bipartite
// matching. At most k paths, pairwise disjoint, total size a_k.
inline std::vector<std::vector<Node>> kpath_witness(const Diagram& d, int k) {
  std::vector<int> idx = oracle_best_subset(d, k);
  int m = static_cast<int>(idx.size());
  std::vector<Node> sub;
  for (int i : idx) sub.push_back(d.nodes()[i]);

  // strict order: a precedes b iff a.row < b.row and a.col <= b.col
  auto precedes = [&](int a, int b) {
    return sub[a].row < sub[b].row && sub[a].col <= sub[b].col;
  };
  std::vector<int> match_right(m, -1), match_left(m, -1);
  std::vector<char> visited(m);
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v = 0; v < m; ++v) {
      if (!precedes(u, v) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || self(self, match_right[v])) {
        match_right[v] = u;
        match_left[u] = v;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < m; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, u);
  }

  std::vector<std::vector<Node>> paths;
  for (int v = 0; v < m; ++v) {
    if (match_right[v] >= 0) continue;  // not a chain head
    std::vector<Node> path;
    int cur = v;
    while (cur >= 0) {
      path.push_back(sub[cur]);
      cur = match_left[cur];
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end(),
            [](const std::vector<Node>& a, const std::vector<Node>& b) { return a.front() < b.front(); });
  return paths;
}

// Admissible: the path invariant equals the conjugate of the row
// composition, the largest value the bounds allow.
inline bool is_admissible(const Diagram& d) {
  return subsequence_type(d) == conjugate(row_composition(d));
}

}  // namespace klcells
