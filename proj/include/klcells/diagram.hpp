#pragma once

// Generalized diagrams: finite sets of nodes (row, col) kept in principal
// form (rows 1..r and columns 1..c all occupied). Provides the row fill t^D,
// the column fill t_D, the permutation w_D with t^D w_D = t_D, standard
// D-tableaux, and the canonical diagram D(d, lambda) of a distinguished d.

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcells/perm.hpp"
#include "klcells/shapes.hpp"

namespace klcells {

struct Node {
  int row = 0;
  int col = 0;

  friend bool operator==(const Node& a, const Node& b) { return a.row == b.row && a.col == b.col; }
  friend bool operator!=(const Node& a, const Node& b) { return !(a == b); }
  friend bool operator<(const Node& a, const Node& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

// Componentwise partial order on nodes; chains under it are the paths.
inline bool node_leq(const Node& a, const Node& b) { return a.row <= b.row && a.col <= b.col; }

class Diagram {
 public:
  explicit Diagram(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("diagram: empty node set");
    std::sort(nodes_.begin(), nodes_.end());
    for (std::size_t i = 1; i < nodes_.size(); ++i)
      if (nodes_[i] == nodes_[i - 1]) throw std::invalid_argument("diagram: duplicate node");
    int r = 0, c = 0;
    for (const Node& u : nodes_) {
      if (u.row < 1 || u.col < 1) throw std::invalid_argument("diagram: node coordinates must be positive");
      r = std::max(r, u.row);
      c = std::max(c, u.col);
    }
    std::vector<char> row_used(r + 1, 0), col_used(c + 1, 0);
    for (const Node& u : nodes_) {
      row_used[u.row] = 1;
      col_used[u.col] = 1;
    }
    for (int i = 1; i <= r; ++i)
      if (!row_used[i]) throw std::invalid_argument("diagram: empty row " + std::to_string(i));
    for (int j = 1; j <= c; ++j)
      if (!col_used[j]) throw std::invalid_argument("diagram: empty column " + std::to_string(j));
    rows_ = r;
    cols_ = c;
  }

  const std::vector<Node>& nodes() const { return nodes_; }  // row-major order
  int size() const { return static_cast<int>(nodes_.size()); }
  int row_count() const { return rows_; }
  int col_count() const { return cols_; }

  bool contains(const Node& u) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), u);
  }

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.nodes_ == b.nodes_; }
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.nodes_ < b.nodes_; }

 private:
  std::vector<Node> nodes_;
  int rows_ = 0;
  int cols_ = 0;
};

// Compress row and column indices to 1..r and 1..c, preserving order.
inline Diagram normalize_principal(std::vector<Node> nodes) {
  if (nodes.empty()) throw std::invalid_argument("normalize_principal: empty node set");
  std::vector<int> rows, cols;
  for (const Node& u : nodes) {
    rows.push_back(u.row);
    cols.push_back(u.col);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  for (Node& u : nodes) {
    u.row = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), u.row) - rows.begin()) + 1;
    u.col = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), u.col) - cols.begin()) + 1;
  }
  return Diagram(std::move(nodes));
}

inline Composition row_composition(const Diagram& d) {
  std::vector<int> counts(d.row_count(), 0);
  for (const Node& u : d.nodes()) counts[u.row - 1] += 1;
  return Composition(counts);
}

inline Composition column_composition(const Diagram& d) {
  std::vector<int> counts(d.col_count(), 0);
  for (const Node& u : d.nodes()) counts[u.col - 1] += 1;
  return Composition(counts);
}

// Special diagrams: the sorted row composition equals the conjugate of the
// column composition; equivalently, for any two nodes in distinct rows and
// distinct columns one of the two crossing positions is also a node. Both
// tests run; they agree on every diagram.
inline bool is_special(const Diagram& d) {
  bool by_shape = sorted_partition(row_composition(d)) == conjugate(column_composition(d));
  bool by_nodes = true;
  const auto& nodes = d.nodes();
  for (std::size_t a = 0; a < nodes.size() && by_nodes; ++a)
    for (std::size_t b = a + 1; b < nodes.size() && by_nodes; ++b) {
      if (nodes[a].row == nodes[b].row || nodes[a].col == nodes[b].col) continue;
      if (!d.contains(Node{nodes[a].row, nodes[b].col}) &&
          !d.contains(Node{nodes[b].row, nodes[a].col}))
        by_nodes = false;
    }
  if (by_shape != by_nodes)
    throw std::logic_error("is_special: shape route and node route disagree");
  return by_shape;
}

// A filling of a diagram; entries are parallel to base.nodes().
struct DTableau {
  Diagram base;
  std::vector<int> entries;

  int entry_at(const Node& u) const {
    auto it = std::lower_bound(base.nodes().begin(), base.nodes().end(), u);
    if (it == base.nodes().end() || *it != u)
      throw std::invalid_argument("tableau: no such node");
    return entries[it - base.nodes().begin()];
  }

  friend bool operator==(const DTableau& a, const DTableau& b) {
    return a.base == b.base && a.entries == b.entries;
  }
};

// t^D: 1..n along rows, top to bottom.
inline DTableau row_fill(const Diagram& d) {
  std::vector<int> entries(d.size());
  std::iota(entries.begin(), entries.end(), 1);
  return DTableau{d, std::move(entries)};
}

// Ranks of the nodes in column-major order; rank of node i is t_D(node i).
inline std::vector<int> column_ranks(const Diagram& d) {
  std::vector<int> idx(d.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const Node& u = d.nodes()[a];
    const Node& v = d.nodes()[b];
    return u.col != v.col ? u.col < v.col : u.row < v.row;
  });
  std::vector<int> rank(d.size());
  for (int k = 0; k < d.size(); ++k) rank[idx[k]] = k + 1;
  return rank;
}

// t_D: 1..n along columns, left to right.
inline DTableau column_fill(const Diagram& d) {
  return DTableau{d, column_ranks(d)};
}

// w_D is defined by t^D w_D = t_D.
inline Permutation w_of(const Diagram& d) {
  return Permutation(column_ranks(d));
}

// Entries weakly increase along the componentwise node order.
inline bool is_standard(const DTableau& t) {
  const auto& nodes = t.base.nodes();
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (a == b) continue;
      if (node_leq(nodes[a], nodes[b]) && t.entries[a] > t.entries[b]) return false;
    }
  return true;
}

inline DTableau act(const DTableau& t, const Permutation& w) {
  if (w.degree() != t.base.size())
    throw std::invalid_argument("act: degree does not match diagram size");
  std::vector<int> entries(t.entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = w(t.entries[i]);
  return DTableau{t.base, std::move(entries)};
}

// Standard D-tableaux are exactly t^D u for prefixes u of w_D; the entry
// vector of such a tableau, read in row-major node order, is the row form
// of u. Enumerated as linear extensions of the node order.
inline std::set<Permutation> prefixes_of_w(const Diagram& d) {
  int m = d.size();
  const auto& nodes = d.nodes();
  std::vector<std::vector<int>> preds(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && node_leq(nodes[b], nodes[a])) preds[a].push_back(b);

  std::set<Permutation> out;
  std::vector<int> entries(m, 0);
  std::vector<char> placed(m, 0);
  auto rec = [&](auto&& self, int next) -> void {
    if (next > m) {
      out.insert(Permutation(entries));
      return;
    }
    for (int a = 0; a < m; ++a) {
      if (placed[a]) continue;
      bool ready = true;
      for (int b : preds[a])
        if (!placed[b]) {
          ready = false;
          break;
        }
      if (!ready) continue;
      placed[a] = 1;
      entries[a] = next;
      self(self, next + 1);
      placed[a] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

// Canonical diagram D(d, lambda) for distinguished d: value v sits in the
// row of the lambda-block holding position d^{-1}(v); columns are the
// maximal runs of 1..n along which that row index strictly increases.
// Minimal column count among diagrams with row composition lambda and
// w_D = d.
inline Diagram canonical_diagram(const Permutation& d, const Composition& lambda) {
  if (!is_distinguished(d, lambda))
    throw std::invalid_argument("canonical_diagram: permutation is not distinguished for the composition");
  int n = d.degree();
  std::vector<int> block_of_position(n + 1, 0);
  int start = 0, blk = 0;
  for (int p : lambda.parts()) {
    ++blk;
    for (int i = 1; i <= p; ++i) block_of_position[start + i] = blk;
    start += p;
  }
  Permutation dinv = inverse(d);
  std::vector<int> row_of_value(n + 1);
  for (int v = 1; v <= n; ++v) row_of_value[v] = block_of_position[dinv(v)];

  std::vector<Node> nodes;
  int col = 1;
  nodes.push_back(Node{row_of_value[1], 1});
  for (int v = 2; v <= n; ++v) {
    if (row_of_value[v] <= row_of_value[v - 1]) ++col;
    nodes.push_back(Node{row_of_value[v], col});
  }
  Diagram out(std::move(nodes));
  if (w_of(out) != d || row_composition(out) != lambda)
    throw std::logic_error("canonical_diagram: construction failed its defining identities");
  return out;
}

inline Diagram rotate180(const Diagram& d) {
  std::vector<Node> nodes;
  nodes.reserve(d.size());
  for (const Node& u : d.nodes())
    nodes.push_back(Node{d.row_count() + 1 - u.row, d.col_count() + 1 - u.col});
  return Diagram(std::move(nodes));
}

inline Diagram young_diagram(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("young_diagram: empty partition");
  std::vector<Node> nodes;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = 1; j <= p.part(i); ++j) nodes.push_back(Node{i, j});
  return Diagram(std::move(nodes));
}

// The unique special diagram with row composition lambda and column
// composition mu; mu must be a rearrangement of conjugate(lambda). Row i
// occupies the columns j with mu_j at least the rank of lambda_i among all
// parts (larger parts first, ties to the earlier index).
inline Diagram special_diagram(const Composition& lambda, const Composition& mu) {
  if (sorted_partition(mu) != conjugate(lambda))
    throw std::invalid_argument("special_diagram: column composition must rearrange the conjugate");
  int r = lambda.size();
  std::vector<int> rrank(r + 1, 0);
  for (int i = 1; i <= r; ++i) {
    int rank = 1;
    for (int t = 1; t <= r; ++t) {
      if (lambda.part(t) > lambda.part(i)) ++rank;
      else if (lambda.part(t) == lambda.part(i) && t < i) ++rank;
    }
    rrank[i] = rank;
  }
  std::vector<Node> nodes;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= mu.size(); ++j)
      if (mu.part(j) >= rrank[i]) nodes.push_back(Node{i, j});
  Diagram out(std::move(nodes));
  if (row_composition(out) != lambda || column_composition(out) != mu || !is_special(out))
    throw std::logic_error("special_diagram: construction failed its defining identities");
  return out;
}

// All special diagrams with row composition lambda, ordered by their column
// composition (lexicographically).
inline std::vector<Diagram> special_diagrams(const Composition& lambda) {
  std::vector<int> parts = conjugate(lambda).parts();
  std::sort(parts.begin(), parts.end());
  std::vector<Diagram> out;
  do {
    out.push_back(special_diagram(lambda, Composition(parts)));
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

// Exhaustive enumeration of principal diagrams with the given row
// composition and at most max_col columns. Verification-scale only.
inline std::vector<Diagram> diagrams_with_row_composition(const Composition& lambda, int max_col) {
  std::vector<Diagram> out;
  int r = lambda.size();
  std::vector<std::vector<int>> chosen(r);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      std::vector<char> used(max_col + 1, 0);
      int maxc = 0;
      for (const auto& cols : chosen)
        for (int c : cols) {
          used[c] = 1;
          maxc = std::max(maxc, c);
        }
      for (int c = 1; c <= maxc; ++c)
        if (!used[c]) return;
      std::vector<Node> nodes;
      for (int row = 1; row <= r; ++row)
        for (int c : chosen[row - 1]) nodes.push_back(Node{row, c});
      out.push_back(Diagram(std::move(nodes)));
      return;
    }
    int k = lambda.part(i + 1);
    std::vector<int> cols(k);
    auto pick = [&](auto&& pickself, int from, int got) -> void {
      if (got == k) {
        chosen[i] = cols;
        self(self, i + 1);
        return;
      }
      for (int c = from; c <= max_col - (k - got - 1); ++c) {
        cols[got] = c;
        pickself(pickself, c + 1, got + 1);
      }
    };
    pick(pick, 1, 0);
  };
  rec(rec, 0);
  return out;
}

inline std::string render_ascii(const Diagram& d) {
  std::string out;
  for (int i = 1; i <= d.row_count(); ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= d.col_count(); ++j) {
      if (j > 1) out += ' ';
      out += d.contains(Node{i, j}) ? 'x' : '.';
    }
  }
  return out;
}

// One line per row, "x" for a node and "." otherwise; ";" also separates
// rows so a diagram fits on a command line.
inline Diagram parse_diagram_ascii(const std::string& text) {
  std::vector<Node> nodes;
  int row = 0, col = 0;
  bool row_has_content = false;
  auto end_row = [&]() {
    col = 0;
    row_has_content = false;
  };
  ++row;
  for (char ch : text) {
    if (ch == '\n' || ch == ';') {
      if (row_has_content) {
        ++row;
        end_row();
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    ++col;
    row_has_content = true;
    if (ch == 'x' || ch == 'X') nodes.push_back(Node{row, col});
    else if (ch != '.') throw std::invalid_argument("diagram: unexpected character '" + std::string(1, ch) + "'");
  }
  return Diagram(std::move(nodes));
}

}  // namespace klcells
