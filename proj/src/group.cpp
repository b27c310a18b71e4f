#include "twogroups/group.hpp"

#include <algorithm>
#include <bit>
#include <fmt/format.h>

namespace twogroups {

namespace {

using wide = __int128;

constexpr std::uint64_t kMaxOrderCap = std::uint64_t{1} << 30;

wide shifted(wide q, int log) { return q * (wide{1} << log); }

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Q1:
      return "Q1";
    case Family::Q2:
      return "Q2";
    case Family::R3:
      return "R3";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "Q1") return Family::Q1;
  if (s == "Q2") return Family::Q2;
  if (s == "R3") return Family::R3;
  return std::nullopt;
}

std::string_view to_string(Convention c) {
  return c == Convention::InverseFirst ? "x^-1 y^-1 x y" : "x y x^-1 y^-1";
}

Elem commutator_as(Convention conv, Elem const& x, Elem const& y, FamilyGroup const& G) {
  if (conv == Convention::InverseFirst) return G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
  return G.mul(G.mul(x, y), G.mul(G.inv(x), G.inv(y)));
}

std::string to_string(Elem const& e) {
  return fmt::format("({},{},{})", e.i, e.j, e.k);
}

std::string FamilyGroup::name() const {
  if (r_) return fmt::format("{}({},{})", to_string(family_), n_, *r_);
  return fmt::format("{}({})", to_string(family_), n_);
}

Elem FamilyGroup::normalize_wide(wide i, wide j, wide k) const {
  // j first: b-wraps may feed c.
  wide q = j >> log_b_;
  j -= shifted(q, log_b_);
  if (b_carry_log_) k += shifted(q, *b_carry_log_);
  // then k: c-wraps feed a.
  q = k >> log_c_;
  k -= shifted(q, log_c_);
  i += shifted(q, c_carry_log_);
  // a-wraps terminate.
  q = i >> log_a_;
  i -= shifted(q, log_a_);
  return {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
          static_cast<std::int64_t>(k)};
}

Elem FamilyGroup::normalize(Elem raw) const { return normalize_wide(raw.i, raw.j, raw.k); }

Elem FamilyGroup::mul(Elem const& x, Elem const& y) const {
  return normalize_wide(wide{x.i} + y.i, wide{x.j} + y.j,
                        wide{x.k} + y.k - wide{x.j} * y.i);
}

Elem FamilyGroup::inv(Elem const& g) const {
  return normalize_wide(-wide{g.i}, -wide{g.j}, -wide{g.k} - wide{g.i} * g.j);
}

Elem FamilyGroup::pow(Elem const& g, std::int64_t m) const {
  // g^|G| = e, so m can be reduced into [0, |G|).
  auto const ord = static_cast<std::int64_t>(order());
  wide mm = m % ord;
  if (mm < 0) mm += ord;
  wide const binom = mm * (mm - 1) / 2;
  return normalize_wide(mm * g.i, mm * g.j, mm * g.k - binom * g.i * g.j);
}

Elem FamilyGroup::commutator(Elem const& x, Elem const& y) const {
  return normalize_wide(0, 0, wide{x.i} * y.j - wide{x.j} * y.i);
}

std::uint64_t FamilyGroup::element_order(Elem const& g) const {
  // Element orders are powers of two dividing |G|.
  std::uint64_t m = 1;
  while (pow(g, static_cast<std::int64_t>(m)) != identity()) m <<= 1;
  return m;
}

std::vector<Elem> FamilyGroup::all_elements() const {
  std::vector<Elem> out;
  out.reserve(order());
  for (std::int64_t i = 0; i < Ma(); ++i)
    for (std::int64_t j = 0; j < Mb(); ++j)
      for (std::int64_t k = 0; k < Mc(); ++k) out.push_back({i, j, k});
  return out;
}

Elem FamilyGroup::element_at(std::size_t idx) const {
  auto const x = static_cast<std::int64_t>(idx);
  return {x >> (log_b_ + log_c_), (x >> log_c_) & (Mb() - 1), x & (Mc() - 1)};
}

bool FamilyGroup::is_canonical(Elem const& g) const {
  return g.i >= 0 && g.i < Ma() && g.j >= 0 && g.j < Mb() && g.k >= 0 && g.k < Mc();
}

void FamilyGroup::verify_relations() const {
  auto const e = identity();
  auto const ga = a();
  auto const gb = b();
  auto const gc = c();
  auto require = [&](bool ok, std::string_view what) {
    if (!ok)
      throw std::logic_error(fmt::format("{}: defining relation {} fails in realization",
                                         name(), what));
  };
  auto p2 = [&](Elem const& g, int log) { return pow(g, std::int64_t{1} << log); };

  require(gc == commutator(ga, gb), "c = [a,b]");
  require(gc == mul(mul(inv(ga), inv(gb)), mul(ga, gb)), "c = a^-1 b^-1 a b");
  require(p2(ga, log_a_) == e, "a^Ma = 1");
  switch (family_) {
    case Family::Q1:
      require(p2(gb, *r_) == e, "b^(2^r) = 1");
      require(p2(ga, n_ - *r_) == gc, "a^(2^(n-r)) = [a,b]");
      break;
    case Family::Q2:
      require(p2(gb, *r_) == e, "b^(2^r) = 1");
      require(p2(ga, *r_) == p2(gc, 2 * *r_ - n_), "a^(2^r) = [a,b]^(2^(2r-n))");
      break;
    case Family::R3:
      require(p2(gb, n_ + 1) == e, "b^(2^(n+1)) = 1");
      require(p2(ga, n_) == p2(gc, n_ - 1), "a^(2^n) = [a,b]^(2^(n-1))");
      require(p2(gb, n_) == p2(gc, n_ - 1), "b^(2^n) = [a,b]^(2^(n-1))");
      break;
  }
  require(mul(gc, ga) == mul(ga, gc), "[[a,b],a] = 1");
  require(mul(gc, gb) == mul(gb, gc), "[[a,b],b] = 1");
  require(gc != e, "[a,b] != 1 (class exactly 2)");
}

FamilyGroup make_group(Family family, int n, std::optional<int> r, std::uint64_t order_cap) {
  if (order_cap > kMaxOrderCap)
    throw ParameterError(fmt::format("order cap {} exceeds the engine maximum 2^30", order_cap));
  FamilyGroup g;
  g.family_ = family;
  g.n_ = n;
  g.r_ = r;
  switch (family) {
    case Family::Q1:
      if (!r) throw ParameterError("Q1 requires parameter r");
      if (*r < 1) throw ParameterError("Q1: constraint r >= 1 violated");
      if (2 * *r > n) throw ParameterError("Q1: constraint 2r <= n violated");
      g.log_a_ = n;
      g.log_b_ = *r;
      g.log_c_ = 0;
      g.c_carry_log_ = n - *r;
      break;
    case Family::Q2:
      if (!r) throw ParameterError("Q2 requires parameter r");
      if (*r < 1) throw ParameterError("Q2: constraint r >= 1 violated");
      if (n < *r) throw ParameterError("Q2: constraint r <= n violated");
      if (n >= 2 * *r) throw ParameterError("Q2: constraint n < 2r violated");
      g.log_a_ = n;
      g.log_b_ = *r;
      g.log_c_ = 2 * *r - n;
      g.c_carry_log_ = *r;
      break;
    case Family::R3:
      if (r) throw ParameterError("R3 takes no parameter r");
      if (n < 1) throw ParameterError("R3: constraint n >= 1 violated");
      g.log_a_ = n + 1;
      g.log_b_ = n;
      g.log_c_ = n - 1;
      g.b_carry_log_ = n - 1;
      g.c_carry_log_ = n;
      break;
  }
  int const log_order = g.log_a_ + g.log_b_ + g.log_c_;
  if (log_order > 62 || (std::uint64_t{1} << log_order) > order_cap)
    throw ParameterError(fmt::format("{}: order 2^{} exceeds cap {}", g.name(), log_order,
                                     order_cap));
  g.verify_relations();
  return g;
}

std::vector<FamilyGroup> family_members(Family family, std::uint64_t max_order) {
  if (max_order == 0) return {};
  int const max_log = std::bit_width(max_order) - 1;
  std::vector<FamilyGroup> out;
  auto const cap = std::min(max_order, kMaxOrderCap);
  switch (family) {
    case Family::Q1:
      for (int n = 2; n <= max_log; ++n)
        for (int r = 1; 2 * r <= n && n + r <= max_log; ++r)
          out.push_back(make_group(family, n, r, cap));
      break;
    case Family::Q2:
      for (int n = 1; n <= max_log; ++n)
        for (int r = n / 2 + 1; r <= n && 3 * r <= max_log; ++r)
          out.push_back(make_group(family, n, r, cap));
      break;
    case Family::R3:
      for (int n = 1; 3 * n <= max_log; ++n) out.push_back(make_group(family, n, std::nullopt, cap));
      break;
  }
  return out;
}

}  // namespace twogroups
