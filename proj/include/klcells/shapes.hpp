#pragma once

// Integer compositions and partitions: conjugation, dominance order, the
// parabolic generator set J(lambda), and the derived shapes (reversal,
// one-box extensions) used by the lifting maps.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace klcells {

// Proper composition: a nonempty sequence of positive parts.
class Composition {
 public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition: empty part list");
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("composition: parts must be positive");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_.at(i - 1); }  // 1-based

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
  friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Partition: weakly decreasing parts. The empty partition (of 0) is allowed;
// it arises as the shape of an empty tableau.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_.at(i - 1); }  // 1-based
  bool empty() const { return parts_.empty(); }

  Composition to_composition() const {
    if (parts_.empty()) throw std::invalid_argument("partition: empty, no composition form");
    return Composition(parts_);
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

inline Partition conjugate(const Composition& c) {
  int m = *std::max_element(c.parts().begin(), c.parts().end());
  std::vector<int> out(m);
  for (int j = 1; j <= m; ++j)
    out[j - 1] = static_cast<int>(
        std::count_if(c.parts().begin(), c.parts().end(), [j](int p) { return p >= j; }));
  return Partition(out);
}

inline Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition();
  return conjugate(p.to_composition());
}

// The parts sorted into weakly decreasing order; equals the double conjugate.
inline Partition sorted_partition(const Composition& c) {
  std::vector<int> parts = c.parts();
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(parts);
}

// Dominance: a <= b iff every prefix sum of a is <= the matching prefix sum
// of b. Defined only for partitions of the same number.
inline bool dominates_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominance: partitions of different n");
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.parts().size() ? a.parts()[i] : 0;
    sb += i < b.parts().size() ? b.parts()[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

inline bool dominates_lt(const Partition& a, const Partition& b) {
  return a != b && dominates_leq(a, b);
}

// Indices of simple generators for the parabolic subgroup fixing the
// lambda-blocks: {1..n-1} minus the proper partial sums of lambda.
struct ParabolicSet {
  int n = 0;
  std::set<int> members;
};

inline ParabolicSet generator_set(const Composition& lambda) {
  ParabolicSet j;
  j.n = lambda.n();
  int sum = 0;
  std::set<int> cuts;
  for (int i = 0; i + 1 < lambda.size(); ++i) {
    sum += lambda.parts()[i];
    cuts.insert(sum);
  }
  for (int k = 1; k < j.n; ++k)
    if (!cuts.count(k)) j.members.insert(k);
  return j;
}

inline Composition reversed_composition(const Composition& c) {
  std::vector<int> parts(c.parts().rbegin(), c.parts().rend());
  return Composition(parts);
}

// lambda_* : append a trailing part 1.
inline Composition lower_star(const Composition& c) {
  std::vector<int> parts = c.parts();
  parts.push_back(1);
  return Composition(parts);
}

// lambda^* : prepend a leading part 1.
inline Composition upper_star(const Composition& c) {
  std::vector<int> parts;
  parts.reserve(c.parts().size() + 1);
  parts.push_back(1);
  parts.insert(parts.end(), c.parts().begin(), c.parts().end());
  return Composition(parts);
}

inline int max_part(const Composition& c) {
  return *std::max_element(c.parts().begin(), c.parts().end());
}

// 1-based positions of the maximal parts.
inline std::vector<int> max_positions(const Composition& c) {
  int m = max_part(c);
  std::vector<int> out;
  for (int i = 1; i <= c.size(); ++i)
    if (c.part(i) == m) out.push_back(i);
  return out;
}

// lambda^(k): add one to part k; defined only when part k is maximal.
inline Composition bump(const Composition& c, int k) {
  if (k < 1 || k > c.size()) throw std::invalid_argument("bump: part index out of range");
  if (c.part(k) != max_part(c)) throw std::invalid_argument("bump: part is not maximal");
  std::vector<int> parts = c.parts();
  parts[k - 1] += 1;
  return Composition(parts);
}

struct DerivedShapes {
  Composition base;
  Composition reverse;
  Composition lower;  // lambda_*
  Composition upper;  // lambda^*
  int max = 0;
  std::vector<int> m_set;

  Composition bump(int k) const { return klcells::bump(base, k); }
};

inline DerivedShapes derived(const Composition& c) {
  return DerivedShapes{c, reversed_composition(c), lower_star(c), upper_star(c),
                       max_part(c), max_positions(c)};
}

inline std::string to_string(const Composition& c) {
  std::string s = "(";
  for (int i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.parts()[i]);
  }
  return s + ")";
}

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

// Accepts "(3,3,2,1)", "3,3,2,1", and the exponent shorthand "2,1^3,2".
inline Composition parse_composition(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("composition: empty input");
  std::vector<int> parts;
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("composition: expected a number in '" + text + "'");
    return std::stoi(s.substr(start, pos - start));
  };
  while (true) {
    int value = read_int();
    int repeat = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      repeat = read_int();
      if (repeat < 1) throw std::invalid_argument("composition: exponent must be positive");
    }
    for (int r = 0; r < repeat; ++r) parts.push_back(value);
    if (pos == s.size()) break;
    if (s[pos] != ',') throw std::invalid_argument("composition: unexpected '" + std::string(1, s[pos]) + "'");
    ++pos;
  }
  return Composition(parts);
}

// All 2^(n-1) proper compositions of n, in lexicographic part order.
inline std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("compositions_of: n must be positive");
  std::vector<Composition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(Composition(current));
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      current.push_back(p);
      self(self, rest - p);
      current.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// All partitions of n, in lexicographic part order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(Partition(current));
      return;
    }
    for (int p = 1; p <= std::min(rest, cap); ++p) {
      current.push_back(p);
      self(self, rest - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace klcells
