// Test-only oracle: the abstract presented group, obtained by Todd-Coxeter
// coset enumeration over the trivial subgroup (HLT strategy with
// coincidence processing).  Nothing here uses the collected normal form;
// elements are labelled by the coset reached by the word a^i b^j [a,b]^k.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {

// Generator letters: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1.
using Word = std::vector<int>;

inline int inverse_letter(int x) { return x ^ 1; }

inline Word inverse(Word const& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Word power(Word const& w, std::int64_t m) {
  Word out;
  Word const base = m >= 0 ? w : inverse(w);
  for (std::int64_t t = 0; t < (m >= 0 ? m : -m); ++t) out.insert(out.end(), base.begin(), base.end());
  return out;
}

inline Word const kA{0};
inline Word const kB{2};
// [a,b] = a^-1 b^-1 a b
inline Word const kC{1, 3, 0, 2};

class CosetTable {
 public:
  explicit CosetTable(std::vector<Word> relators, std::size_t max_cosets = 4'000'000)
      : relators_(std::move(relators)), max_cosets_(max_cosets) {
    new_coset();
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (auto const& rel : relators_) {
        scan_and_fill(static_cast<int>(c), rel);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (int x = 0; x < 4; ++x)
        if (table_[c][x] < 0) define(static_cast<int>(c), x);
    }
    compact();
  }

  std::size_t index() const { return table_.size(); }
  int act(int coset, int letter) const { return table_[coset][letter]; }
  int trace(int coset, Word const& w) const {
    for (int x : w) coset = table_[coset][x];
    return coset;
  }

 private:
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    if (table_.size() >= max_cosets_) throw std::runtime_error("coset enumeration overflow");
    table_.push_back({-1, -1, -1, -1});
    parent_.push_back(static_cast<int>(table_.size() - 1));
    return static_cast<int>(table_.size() - 1);
  }

  void define(int c, int x) {
    int const d = new_coset();
    table_[c][x] = d;
    table_[d][inverse_letter(x)] = c;
  }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      int const next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int const e = queue[i];
      for (int x = 0; x < 4; ++x) {
        int const f = table_[e][x];
        if (f < 0) continue;
        int const xi = inverse_letter(x);
        if (table_[f][xi] == e) table_[f][xi] = -1;
        int const e1 = rep(e);
        int const f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][xi] >= 0) {
          merge(e1, table_[f1][xi], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][xi] = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, Word const& w) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inverse_letter(w[j])] >= 0) b = table_[b][inverse_letter(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inverse_letter(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void compact() {
    std::vector<int> renum(table_.size(), -1);
    int live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) renum[c] = live++;
    std::vector<std::array<int, 4>> out;
    out.reserve(live);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      std::array<int, 4> row{};
      for (int x = 0; x < 4; ++x) row[x] = renum[rep(table_[c][x])];
      out.push_back(row);
    }
    table_ = std::move(out);
    parent_.resize(table_.size());
    for (std::size_t c = 0; c < parent_.size(); ++c) parent_[c] = static_cast<int>(c);
  }

  std::vector<Word> relators_;
  std::size_t max_cosets_;
  std::vector<std::array<int, 4>> table_;
  std::vector<int> parent_;
};

enum class Kind { Q1, Q2, R3 };

// Relators of the three presentations, written independently of the engine.
inline std::vector<Word> relators(Kind kind, int n, int r) {
  auto p2 = [](int e) { return std::int64_t{1} << e; };
  auto comm_with = [](Word const& x, Word const& y) {
    return concat({inverse(x), inverse(y), x, y});
  };
  switch (kind) {
    case Kind::Q1:
      return {power(kA, p2(n)), power(kB, p2(r)), concat({power(kA, p2(n - r)), inverse(kC)})};
    case Kind::Q2:
      return {power(kA, p2(n)), power(kB, p2(r)),
              concat({power(kA, p2(r)), inverse(power(kC, p2(2 * r - n)))}),
              comm_with(kC, kA), comm_with(kC, kB)};
    case Kind::R3:
      return {power(kA, p2(n + 1)), power(kB, p2(n + 1)),
              concat({power(kA, p2(n)), inverse(power(kC, p2(n - 1)))}),
              concat({power(kC, p2(n - 1)), inverse(power(kB, p2(n)))}),
              comm_with(kC, kA), comm_with(kC, kB)};
  }
  return {};
}

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

// The presented group as a regular permutation representation, with every
// element labelled by a triple (i, j, k) meaning a^i b^j [a,b]^k.
class PresentedGroup {
 public:
  // ranges (Ma, Mb, Mc) bound the labels; every element must receive one.
  PresentedGroup(Kind kind, int n, int r, std::int64_t Ma, std::int64_t Mb, std::int64_t Mc)
      : table_(relators(kind, n, r)) {
    for (std::int64_t i = 0; i < Ma; ++i)
      for (std::int64_t j = 0; j < Mb; ++j)
        for (std::int64_t k = 0; k < Mc; ++k) {
          int const coset = table_.trace(0, word({i, j, k}));
          if (label_.count(coset)) continue;
          label_[coset] = {i, j, k};
          coset_[{i, j, k}] = coset;
        }
    if (label_.size() != table_.index())
      throw std::runtime_error("oracle: triples do not label every element");
  }

  static Word word(Triple const& t) {
    auto [i, j, k] = t;
    return concat({power(kA, i), power(kB, j), power(kC, k)});
  }

  std::size_t order() const { return table_.index(); }
  // Labels in ascending order.
  std::vector<Triple> elements() const {
    std::vector<Triple> out;
    for (auto const& [t, c] : coset_) out.push_back(t);
    return out;
  }
  bool has_label(Triple const& t) const { return coset_.count(t) > 0; }
  // Label of the element represented by an arbitrary word.
  Triple eval(Word const& w) const { return label_.at(table_.trace(0, w)); }
  Triple mul(Triple const& x, Triple const& y) const {
    auto const& t = cayley();
    return label_.at(t[coset_.at(y)][coset_.at(x)]);
  }
  Triple inv(Triple const& x) const { return eval(inverse(word(x))); }
  Triple identity() const { return eval({}); }
  std::int64_t element_order(Triple const& x) const {
    Triple cur = x;
    std::int64_t m = 1;
    while (cur != identity()) {
      cur = mul(cur, x);
      ++m;
    }
    return m;
  }
  CosetTable const& table() const { return table_; }

  // cayley()[y][x] = coset of x*y, grown from right multiplication by the
  // generators along a spanning tree rooted at the identity.
  std::vector<std::vector<int>> const& cayley() const {
    if (!cayley_.empty()) return cayley_;
    auto const n = table_.index();
    cayley_.assign(n, {});
    std::vector<int> ident(n);
    for (std::size_t x = 0; x < n; ++x) ident[x] = static_cast<int>(x);
    cayley_[0] = ident;
    std::vector<int> frontier{0};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      int const y = frontier[head];
      for (int letter : {0, 2}) {
        int const ys = table_.act(y, letter);
        if (!cayley_[ys].empty()) continue;
        std::vector<int> perm(n);
        for (std::size_t x = 0; x < n; ++x) perm[x] = table_.act(cayley_[y][x], letter);
        cayley_[ys] = std::move(perm);
        frontier.push_back(ys);
      }
    }
    return cayley_;
  }
  int coset_of(Triple const& t) const { return coset_.at(t); }

 private:
  CosetTable table_;
  std::map<int, Triple> label_;
  std::map<Triple, int> coset_;
  mutable std::vector<std::vector<int>> cayley_;
};

}  // namespace oracle
