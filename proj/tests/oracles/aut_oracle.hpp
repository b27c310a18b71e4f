// Test-only oracle: automorphisms of a presented group found by brute force
// over all generator-image pairs, working purely on its Cayley table.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "oracles/presented_group.hpp"

namespace oracle {

struct OracleAut {
  Triple image_a;
  Triple image_b;
  bool inner = false;
  int order = 0;

  friend bool operator==(OracleAut const&, OracleAut const&) = default;
};

class AutOracle {
 public:
  explicit AutOracle(PresentedGroup const& P) : P_(P), cay_(P.cayley()), n_(P.order()) {
    ca_ = P.coset_of(P.eval(kA));
    cb_ = P.coset_of(P.eval(kB));
    // coset 0 is the identity
    inv_.assign(n_, -1);
    for (int x = 0; x < int(n_); ++x)
      for (int y = 0; y < int(n_); ++y)
        if (mul(x, y) == 0) inv_[x] = y;
    std::vector<int> gens;
    for (int x = 0; x < int(n_); ++x) {
      gens.push_back(mul(x, x));
      for (int y = 0; y < int(n_); ++y) gens.push_back(comm(x, y));
    }
    phi_ = closure(gens);
  }

  int mul(int x, int y) const { return cay_[y][x]; }
  int comm(int x, int y) const { return mul(mul(inv_[x], inv_[y]), mul(x, y)); }

  std::vector<int> closure(std::vector<int> const& gens) const {
    std::vector<char> seen(n_, 0);
    std::vector<int> found{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < found.size(); ++h)
      for (int s : gens) {
        int const y = mul(found[h], s);
        if (!seen[y]) {
          seen[y] = 1;
          found.push_back(y);
        }
      }
    return found;
  }

  // Homomorphism a -> X, b -> Y extended along words; empty if ill-defined
  // or not bijective.
  std::optional<std::vector<int>> extend(int X, int Y) const {
    std::vector<int> img(n_, -1);
    img[0] = 0;
    std::vector<int> frontier{0};
    for (std::size_t h = 0; h < frontier.size(); ++h) {
      int const g = frontier[h];
      for (auto [s, t] : {std::pair{ca_, X}, std::pair{cb_, Y}}) {
        int const gs = mul(g, s);
        int const v = mul(img[g], t);
        if (img[gs] < 0) {
          img[gs] = v;
          frontier.push_back(gs);
        } else if (img[gs] != v) {
          return std::nullopt;
        }
      }
    }
    // BFS visits each edge, so consistency on every edge g -> g s makes the
    // map a homomorphism; then check it is onto.
    std::vector<char> hit(n_, 0);
    for (int v : img) {
      if (hit[v]) return std::nullopt;
      hit[v] = 1;
    }
    return img;
  }

  std::vector<OracleAut> phi_fixing_involutions() const {
    std::vector<OracleAut> out;
    for (int X = 0; X < int(n_); ++X)
      for (int Y = 0; Y < int(n_); ++Y) {
        auto img = extend(X, Y);
        if (!img) continue;
        if (!std::all_of(phi_.begin(), phi_.end(), [&](int p) { return (*img)[p] == p; })) continue;
        bool identity = (X == ca_ && Y == cb_);
        bool square_id = (*img)[X] == ca_ && (*img)[Y] == cb_;
        if (identity || !square_id) continue;
        bool inner = false;
        for (int x = 0; x < int(n_) && !inner; ++x)
          inner = mul(mul(inv_[x], ca_), x) == X && mul(mul(inv_[x], cb_), x) == Y;
        out.push_back({P_.eval(PresentedGroup::word(label(X))), P_.eval(PresentedGroup::word(label(Y))),
                       inner, 2});
      }
    std::sort(out.begin(), out.end(), [](OracleAut const& u, OracleAut const& v) {
      return std::tie(u.image_a, u.image_b) < std::tie(v.image_a, v.image_b);
    });
    return out;
  }

  Triple label(int coset) const {
    for (auto const& t : P_.elements())
      if (P_.coset_of(t) == coset) return t;
    throw std::logic_error("unlabelled coset");
  }

 private:
  PresentedGroup const& P_;
  std::vector<std::vector<int>> const& cay_;
  std::size_t n_;
  int ca_ = 0;
  int cb_ = 0;
  std::vector<int> inv_;
  std::vector<int> phi_;
};

}  // namespace oracle
