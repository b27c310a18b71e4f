// Automorphisms given by generator images, their validation, and the
// enumeration of order-2 automorphisms fixing Phi(G) elementwise.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twogroups/group.hpp"
#include "twogroups/structure.hpp"

namespace twogroups {

struct GenMap {
  FamilyGroup group;
  Elem image_a;
  Elem image_b;

  friend bool operator==(GenMap const&, GenMap const&) = default;
};

std::string to_string(GenMap const& m);

// A validated automorphism.  table[index(g)] = index(alpha(g)).
class Aut {
 public:
  GenMap const& map() const { return map_; }
  FamilyGroup const& group() const { return map_.group; }
  std::vector<std::uint32_t> const& table() const { return table_; }

  Elem apply(Elem const& g) const;

  friend bool operator==(Aut const& x, Aut const& y) { return x.map_ == y.map_; }

 private:
  friend struct AutAccess;
  Aut(GenMap map, std::vector<std::uint32_t> table)
      : map_(std::move(map)), table_(std::move(table)) {}

  GenMap map_;
  std::vector<std::uint32_t> table_;
};

enum class ValidationFailure { None, NotCanonical, RelationViolated, NotHomomorphism, NotSurjective };

std::string_view to_string(ValidationFailure f);

struct Validation {
  std::optional<Aut> aut;
  ValidationFailure failure = ValidationFailure::None;
  std::string detail;

  explicit operator bool() const { return aut.has_value(); }
};

// Name of the first defining relation the images violate, if any.
std::optional<std::string> violated_relation(FamilyGroup const& G, Elem const& x, Elem const& y);

Validation validate(GenMap const& map);
// validate() that throws std::logic_error on failure.
Aut require_valid(GenMap const& map);

Aut identity_aut(FamilyGroup const& G);
Elem apply(Aut const& alpha, Elem const& g);
// g -> second(first(g)).
Aut compose(Aut const& first, Aut const& second);
std::uint64_t aut_order(Aut const& alpha);
bool fixes_pointwise(Aut const& alpha, SubgroupSet const& S);

// g -> x^-1 g x.
Aut inner_from(Elem const& x, FamilyGroup const& G);
// Lexicographically least x with inner_from(x) == alpha.
std::optional<Elem> is_inner_direct(Aut const& alpha);
// Closure of { g^-1 alpha(g) : g in G }.
SubgroupSet commutator_with(Aut const& alpha);
// alpha is inner iff [G, alpha] <= G'.
bool is_inner_criterion(Aut const& alpha);

enum class EnumerationMode { Pruned, Brute };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::Pruned;
  std::uint64_t pruned_cap = std::uint64_t{1} << 12;
  std::uint64_t brute_cap = std::uint64_t{1} << 10;
  unsigned jobs = 1;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Automorphisms of any order fixing Phi(G) pointwise, sorted by
// (image_a, image_b).
std::vector<Aut> enumerate_phi_fixing(FamilyGroup const& G, EnumerationOptions const& opts = {});

// The order-2 members of enumerate_phi_fixing.
std::vector<Aut> enumerate_phi_fixing_involutions(FamilyGroup const& G,
                                                  EnumerationOptions const& opts = {});

struct StarReport {
  FamilyGroup group;
  std::uint64_t total = 0;
  std::uint64_t inner_count = 0;
  std::vector<GenMap> noninner_witnesses;
  bool star_holds = true;
};

// Thrown when the criterion and the direct search disagree on inner-ness.
class InnerDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

StarReport star_condition(FamilyGroup const& G, EnumerationOptions const& opts = {});

}  // namespace twogroups
