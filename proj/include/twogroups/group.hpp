// Collected normal forms for the 2-generator class-2 2-groups with cyclic
// center: Q(n,r) with 2r <= n, Q(n,r) with r <= n < 2r, and R(n).
//
// Every element is stored as a^i b^j c^k with c = [a,b] = a^-1 b^-1 a b,
// 0 <= i < Ma, 0 <= j < Mb, 0 <= k < Mc.  Products are collected with the
// class-2 identity b^j a^i' = a^i' b^j c^(-i'j) and then reduced by the
// family's carry rules (b-wraps feed c, c-wraps feed a).
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twogroups {

enum class Family { Q1, Q2, R3 };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

struct Elem {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;

  friend constexpr auto operator<=>(Elem const&, Elem const&) = default;
};

std::string to_string(Elem const& e);

// Thrown by make_group when the parameters do not describe a family member
// or the realized order would exceed the cap.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 21;

class FamilyGroup {
 public:
  Family family() const { return family_; }
  int n() const { return n_; }
  // Absent for R3.
  std::optional<int> r() const { return r_; }

  std::int64_t Ma() const { return std::int64_t{1} << log_a_; }
  std::int64_t Mb() const { return std::int64_t{1} << log_b_; }
  std::int64_t Mc() const { return std::int64_t{1} << log_c_; }
  std::uint64_t order() const { return std::uint64_t{1} << (log_a_ + log_b_ + log_c_); }
  int log2_order() const { return log_a_ + log_b_ + log_c_; }

  // e.g. "Q1(4,2)" or "R3(2)"
  std::string name() const;

  Elem identity() const { return {}; }
  Elem a() const { return normalize({1, 0, 0}); }
  Elem b() const { return normalize({0, 1, 0}); }
  Elem c() const { return normalize({0, 0, 1}); }

  Elem normalize(Elem raw) const;
  Elem mul(Elem const& x, Elem const& y) const;
  Elem inv(Elem const& g) const;
  Elem pow(Elem const& g, std::int64_t m) const;
  Elem commutator(Elem const& x, Elem const& y) const;
  std::uint64_t element_order(Elem const& g) const;

  // Canonical elements in lexicographic (i, j, k) order.
  std::vector<Elem> all_elements() const;

  // Position of a canonical element in all_elements().
  std::size_t index(Elem const& g) const {
    return static_cast<std::size_t>((g.i * Mb() + g.j) * Mc() + g.k);
  }
  Elem element_at(std::size_t idx) const;

  bool is_canonical(Elem const& g) const;

  friend bool operator==(FamilyGroup const& x, FamilyGroup const& y) {
    return x.family_ == y.family_ && x.n_ == y.n_ && x.r_ == y.r_;
  }

 private:
  friend FamilyGroup make_group(Family, int, std::optional<int>, std::uint64_t);
  FamilyGroup() = default;

  Elem normalize_wide(__int128 i, __int128 j, __int128 k) const;
  void verify_relations() const;

  Family family_ = Family::Q1;
  int n_ = 0;
  std::optional<int> r_;
  int log_a_ = 0;
  int log_b_ = 0;
  int log_c_ = 0;
  // log2 of the amount added to k per wrap of j (R3 only).
  std::optional<int> b_carry_log_;
  // log2 of the amount added to i per wrap of k.
  int c_carry_log_ = 0;
};

// Commutator conventions: InverseFirst is x^-1 y^-1 x y (the one c follows),
// InverseLast is x y x^-1 y^-1.
enum class Convention { InverseFirst, InverseLast };

std::string_view to_string(Convention c);

// Commutator under the given convention, expanded through mul/inv rather
// than the closed form.
Elem commutator_as(Convention conv, Elem const& x, Elem const& y, FamilyGroup const& G);

// Builds and verifies one family member.  r must be given for Q1/Q2 and
// omitted for R3.  Throws ParameterError naming the violated constraint.
FamilyGroup make_group(Family family, int n, std::optional<int> r = std::nullopt,
                       std::uint64_t order_cap = kDefaultOrderCap);

// Parameter tuples of one family with order <= max_order, sorted by (n, r).
std::vector<FamilyGroup> family_members(Family family, std::uint64_t max_order);

}  // namespace twogroups
