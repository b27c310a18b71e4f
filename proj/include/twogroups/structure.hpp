// Subgroup computations on family groups.  Subgroups are explicit sorted
// element lists; membership is a binary search.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "twogroups/group.hpp"

namespace twogroups {

class SubgroupSet {
 public:
  SubgroupSet(FamilyGroup group, std::vector<Elem> elements, std::vector<Elem> generators);

  FamilyGroup const& parent() const { return group_; }
  std::vector<Elem> const& elements() const { return elements_; }
  std::vector<Elem> const& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(Elem const& g) const;
  // Every element of this subgroup lies in `other`.
  bool is_subgroup_of(SubgroupSet const& other) const;
  bool is_abelian() const;

  friend bool operator==(SubgroupSet const& x, SubgroupSet const& y) {
    return x.group_ == y.group_ && x.elements_ == y.elements_;
  }

 private:
  FamilyGroup group_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

// Thrown by omega1 on a non-abelian argument.
class NotAbelianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SubgroupSet closure(std::span<Elem const> gens, FamilyGroup const& G);
SubgroupSet whole_group(FamilyGroup const& G);

SubgroupSet center(FamilyGroup const& G);
SubgroupSet derived_subgroup(FamilyGroup const& G);
// Closure of all squares together with c.
SubgroupSet frattini(FamilyGroup const& G);
SubgroupSet omega1(SubgroupSet const& H);
// Elements of G commuting with every generator of S.
SubgroupSet centralizer(SubgroupSet const& S);
SubgroupSet intersection(SubgroupSet const& A, SubgroupSet const& B);
// Center of H viewed as a group in its own right.
SubgroupSet center_of(SubgroupSet const& H);

bool is_cyclic(SubgroupSet const& H);
// H normal in its parent: conjugates of generators by a, b stay in H.
bool is_normal(SubgroupSet const& H);

// Minimum number of generators of H, log2 |H| / |H^2 H'|.
int d_of(SubgroupSet const& H);
int d_of_group(FamilyGroup const& G);

// Coordinates of gPhi(G) in the basis {a Phi, b Phi} of G/Phi(G).
class FrattiniBasis {
 public:
  explicit FrattiniBasis(FamilyGroup const& G);

  std::pair<int, int> decompose(Elem const& g) const;
  SubgroupSet const& phi() const { return phi_; }

 private:
  FamilyGroup group_;
  SubgroupSet phi_;
};

std::pair<int, int> frattini_quotient_decompose(Elem const& g, FamilyGroup const& G);

}  // namespace twogroups
