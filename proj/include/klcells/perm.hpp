#pragma once

// Permutations of {1..n} in row form: w maps i to row[i]. The product xy
// acts as "x then y", i.e. (xy)(i) = y(x(i)). Consequently left
// multiplication by the adjacent transposition s_j swaps the entries at
// positions j, j+1 and right multiplication swaps the values j, j+1.
// Words in the generators multiply left to right: s_a s_b means s_a first.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klcells/shapes.hpp"

namespace klcells {

using GeneratorWord = std::vector<int>;  // letters j stand for s_j

class Permutation {
 public:
  explicit Permutation(std::vector<int> row) : row_(std::move(row)) {
    int n = static_cast<int>(row_.size());
    if (n < 1) throw std::invalid_argument("permutation: degree must be at least 1");
    std::vector<char> seen(n + 1, 0);
    for (int v : row_) {
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("permutation: row form is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> row(n);
    std::iota(row.begin(), row.end(), 1);
    return Permutation(std::move(row));
  }

  int degree() const { return static_cast<int>(row_.size()); }
  int operator()(int i) const { return row_.at(i - 1); }  // image of i, 1-based
  const std::vector<int>& row() const { return row_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (row_[i] != i + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.row_ == b.row_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.row_ < b.row_; }

 private:
  std::vector<int> row_;
};

inline void require_same_degree(const Permutation& x, const Permutation& y, const char* op) {
  if (x.degree() != y.degree())
    throw std::invalid_argument(std::string(op) + ": degree mismatch");
}

// (xy)(i) = y(x(i)).
inline Permutation compose(const Permutation& x, const Permutation& y) {
  require_same_degree(x, y, "compose");
  std::vector<int> row(x.degree());
  for (int i = 0; i < x.degree(); ++i) row[i] = y.row()[x.row()[i] - 1];
  return Permutation(std::move(row));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> row(w.degree());
  for (int i = 0; i < w.degree(); ++i) row[w.row()[i] - 1] = i + 1;
  return Permutation(std::move(row));
}

// Coxeter length = inversion count.
inline int length(const Permutation& w) {
  int n = w.degree(), count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.row()[i] > w.row()[j]) ++count;
  return count;
}

inline Permutation adjacent_transposition(int n, int j) {
  if (j < 1 || j >= n) throw std::invalid_argument("adjacent_transposition: index out of range");
  std::vector<int> row(n);
  std::iota(row.begin(), row.end(), 1);
  std::swap(row[j - 1], row[j]);
  return Permutation(std::move(row));
}

// Product of the word, letters applied left to right.
inline Permutation product_of_word(int n, const GeneratorWord& word) {
  std::vector<int> row(n);
  std::iota(row.begin(), row.end(), 1);
  std::vector<int> pos(n + 1);  // pos[v] = current position of value v, 1-based
  for (int i = 0; i < n; ++i) pos[i + 1] = i + 1;
  for (int j : word) {
    if (j < 1 || j >= n) throw std::invalid_argument("word: letter out of range");
    // right multiplication by s_j swaps the values j and j+1
    int pj = pos[j], pk = pos[j + 1];
    std::swap(row[pj - 1], row[pk - 1]);
    std::swap(pos[j], pos[j + 1]);
  }
  return Permutation(std::move(row));
}

// Canonical reduced word: repeatedly strip the smallest left descent. The
// recorded letters multiply, left to right, back to w.
inline GeneratorWord reduced_word(const Permutation& w) {
  std::vector<int> row = w.row();
  int n = static_cast<int>(row.size());
  GeneratorWord letters;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j = 1; j < n; ++j) {
      if (row[j - 1] > row[j]) {
        std::swap(row[j - 1], row[j]);  // left multiply by s_j
        letters.push_back(j);
        progress = true;
        break;
      }
    }
  }
  return letters;
}

// x is a prefix of y in the weak order iff some reduced word of y begins
// with a reduced word of x; equivalently the lengths add up.
inline bool is_prefix(const Permutation& x, const Permutation& y) {
  require_same_degree(x, y, "is_prefix");
  return length(x) + length(compose(inverse(x), y)) == length(y);
}

inline Permutation longest_element(int n) {
  std::vector<int> row(n);
  for (int i = 0; i < n; ++i) row[i] = n - i;
  return Permutation(std::move(row));
}

// Longest element of the parabolic subgroup W_J(lambda): reverses each
// lambda-block of positions.
inline Permutation parabolic_longest(const Composition& lambda) {
  std::vector<int> row(lambda.n());
  int start = 0;
  for (int p : lambda.parts()) {
    for (int i = 0; i < p; ++i) row[start + i] = start + p - i;
    start += p;
  }
  return Permutation(std::move(row));
}

// Minimum-length representative of W_J(lambda)·e: row is strictly increasing
// within each lambda-block of positions.
inline bool is_distinguished(const Permutation& e, const Composition& lambda) {
  if (e.degree() != lambda.n()) throw std::invalid_argument("is_distinguished: degree mismatch");
  int start = 0;
  for (int p : lambda.parts()) {
    for (int i = 1; i < p; ++i)
      if (e.row()[start + i - 1] > e.row()[start + i]) return false;
    start += p;
  }
  return true;
}

struct CosetDecomposition {
  Permutation parabolic;      // u in W_J(lambda)
  Permutation distinguished;  // e with strictly increasing blocks; w = u e
};

inline CosetDecomposition coset_decompose(const Permutation& w, const Composition& lambda) {
  if (w.degree() != lambda.n()) throw std::invalid_argument("coset_decompose: degree mismatch");
  std::vector<int> e = w.row();
  int start = 0;
  for (int p : lambda.parts()) {
    std::sort(e.begin() + start, e.begin() + start + p);
    start += p;
  }
  Permutation dist(std::move(e));
  return CosetDecomposition{compose(w, inverse(dist)), dist};
}

// Extend w with fixed points n+1..m.
inline Permutation embed(const Permutation& w, int m) {
  if (m < w.degree()) throw std::invalid_argument("embed: target degree too small");
  std::vector<int> row = w.row();
  for (int v = w.degree() + 1; v <= m; ++v) row.push_back(v);
  return Permutation(std::move(row));
}

// w0 w w0 with w0 the longest element; conjugation reverses the row pattern.
inline Permutation w0_conjugate(const Permutation& w) {
  Permutation w0 = longest_element(w.degree());
  return compose(compose(w0, w), w0);
}

inline std::string to_string(const Permutation& w) {
  std::string s = "[";
  for (int i = 0; i < w.degree(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.row()[i]);
  }
  return s + "]";
}

inline std::string to_string(const GeneratorWord& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(word[i]);
  }
  return s;
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, char open, char close) {
  std::vector<int> out;
  std::size_t pos = 1;  // caller guarantees s.front() == open
  (void)open;
  while (pos < s.size() && s[pos] != close) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("permutation: expected a number");
    out.push_back(std::stoi(s.substr(start, pos - start)));
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  if (pos >= s.size() || s[pos] != close) throw std::invalid_argument("permutation: unbalanced brackets");
  return out;
}

}  // namespace detail

// Accepted forms: row "[4,6,7,1,2,3,5,8]"; cycles "(1,4)(2,6,3,7,5)" where
// each listed element maps to the next, wrapping around; generator words
// "s3 s4 s5" multiplying left to right; "e" for the identity. Cycle and word
// forms take their degree from the largest index mentioned unless a larger
// degree is supplied.
inline Permutation parse_permutation(const std::string& text, int degree = 0) {
  std::string s = text;  // spaces are significant inside generator words
  std::size_t b = s.find_first_not_of(" \t\n\r");
  std::size_t e = s.find_last_not_of(" \t\n\r");
  if (b == std::string::npos) throw std::invalid_argument("permutation: empty input");
  s = s.substr(b, e - b + 1);

  if (s == "e" || s == "()") {
    if (degree < 1) throw std::invalid_argument("permutation: identity needs an explicit degree");
    return Permutation::identity(degree);
  }

  if (s.front() == '[') {
    std::string t;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    std::vector<int> row = detail::parse_int_list(t, '[', ']');
    if (t.back() != ']') throw std::invalid_argument("permutation: trailing characters after row form");
    Permutation w{std::move(row)};
    if (degree != 0 && degree != w.degree())
      throw std::invalid_argument("permutation: row form degree disagrees with requested degree");
    return w;
  }

  if (s.front() == '(') {
    std::string t;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    int maxv = 0;
    while (pos < t.size()) {
      if (t[pos] != '(') throw std::invalid_argument("permutation: expected '('");
      std::size_t close = t.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("permutation: unbalanced parentheses");
      std::vector<int> cyc = detail::parse_int_list(t.substr(pos, close - pos + 1), '(', ')');
      for (int v : cyc) {
        if (v < 1) throw std::invalid_argument("permutation: cycle entries must be positive");
        maxv = std::max(maxv, v);
      }
      cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    int n = std::max(degree, maxv);
    if (n < 1) throw std::invalid_argument("permutation: empty cycle form");
    Permutation acc = Permutation::identity(n);
    for (const auto& cyc : cycles) {
      std::vector<int> row(n);
      std::iota(row.begin(), row.end(), 1);
      std::vector<char> seen(n + 1, 0);
      for (int v : cyc) {
        if (seen[v]) throw std::invalid_argument("permutation: repeated entry inside a cycle");
        seen[v] = 1;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) row[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
      acc = compose(acc, Permutation(std::move(row)));
    }
    return acc;
  }

  if (s.front() == 's' || std::isdigit(static_cast<unsigned char>(s.front()))) {
    GeneratorWord word;
    std::size_t pos = 0;
    int maxj = 0;
    while (pos < s.size()) {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == s.size()) break;
      if (s[pos] == 's') ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("permutation: malformed generator word");
      int j = std::stoi(s.substr(start, pos - start));
      maxj = std::max(maxj, j);
      word.push_back(j);
    }
    if (word.empty()) throw std::invalid_argument("permutation: empty generator word");
    int n = std::max(degree, maxj + 1);
    return product_of_word(n, word);
  }

  throw std::invalid_argument("permutation: unrecognized format '" + text + "'");
}

}  // namespace klcells
