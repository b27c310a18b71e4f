#include "twogroups/structure.hpp"

#include <algorithm>
#include <bit>
#include <fmt/format.h>

namespace twogroups {

SubgroupSet::SubgroupSet(FamilyGroup group, std::vector<Elem> elements,
                         std::vector<Elem> generators)
    : group_(std::move(group)),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
}

bool SubgroupSet::contains(Elem const& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SubgroupSet::is_subgroup_of(SubgroupSet const& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool SubgroupSet::is_abelian() const {
  for (auto const& x : generators_)
    for (auto const& y : generators_)
      if (group_.commutator(x, y) != group_.identity()) return false;
  return true;
}

SubgroupSet closure(std::span<Elem const> gens, FamilyGroup const& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> found{G.identity()};
  std::vector<Elem> kept;
  seen[G.index(G.identity())] = 1;
  for (auto const& s : gens) {
    if (seen[G.index(s)]) continue;
    kept.push_back(s);
    // Right-multiplying by the kept generators reaches every product of
    // them; in a finite group that is the whole subgroup.
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (auto const& t : kept) {
        auto const next = G.mul(found[head], t);
        auto& mark = seen[G.index(next)];
        if (!mark) {
          mark = 1;
          found.push_back(next);
        }
      }
    }
  }
  return SubgroupSet(G, std::move(found), std::move(kept));
}

SubgroupSet whole_group(FamilyGroup const& G) {
  return SubgroupSet(G, G.all_elements(), {G.a(), G.b()});
}

SubgroupSet center(FamilyGroup const& G) {
  std::vector<Elem> z;
  for (auto const& g : G.all_elements())
    if (G.commutator(g, G.a()) == G.identity() && G.commutator(g, G.b()) == G.identity())
      z.push_back(g);
  return closure(z, G);
}

SubgroupSet derived_subgroup(FamilyGroup const& G) {
  // Class 2: G' is generated by the commutators of the generators.
  std::vector<Elem> const gens{G.commutator(G.a(), G.b())};
  return closure(gens, G);
}

SubgroupSet frattini(FamilyGroup const& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> gens;
  for (auto const& g : G.all_elements()) {
    auto const sq = G.mul(g, g);
    if (!seen[G.index(sq)]) {
      seen[G.index(sq)] = 1;
      gens.push_back(sq);
    }
  }
  gens.push_back(G.c());
  return closure(gens, G);
}

SubgroupSet omega1(SubgroupSet const& H) {
  if (!H.is_abelian())
    throw NotAbelianError(
        fmt::format("omega1: subgroup of order {} in {} is not abelian", H.order(),
                    H.parent().name()));
  auto const& G = H.parent();
  std::vector<Elem> out;
  for (auto const& h : H.elements())
    if (G.mul(h, h) == G.identity()) out.push_back(h);
  return closure(out, G);
}

SubgroupSet centralizer(SubgroupSet const& S) {
  auto const& G = S.parent();
  std::vector<Elem> out;
  for (auto const& g : G.all_elements()) {
    bool const ok = std::all_of(S.generators().begin(), S.generators().end(), [&](Elem const& s) {
      return G.commutator(g, s) == G.identity();
    });
    if (ok) out.push_back(g);
  }
  return closure(out, G);
}

SubgroupSet intersection(SubgroupSet const& A, SubgroupSet const& B) {
  std::vector<Elem> out;
  std::set_intersection(A.elements().begin(), A.elements().end(), B.elements().begin(),
                        B.elements().end(), std::back_inserter(out));
  return closure(out, A.parent());
}

SubgroupSet center_of(SubgroupSet const& H) {
  auto const& G = H.parent();
  std::vector<Elem> out;
  for (auto const& h : H.elements()) {
    bool const ok = std::all_of(H.generators().begin(), H.generators().end(), [&](Elem const& s) {
      return G.commutator(h, s) == G.identity();
    });
    if (ok) out.push_back(h);
  }
  return closure(out, G);
}

bool is_cyclic(SubgroupSet const& H) {
  auto const& G = H.parent();
  return std::any_of(H.elements().begin(), H.elements().end(),
                     [&](Elem const& h) { return G.element_order(h) == H.order(); });
}

bool is_normal(SubgroupSet const& H) {
  auto const& G = H.parent();
  for (auto const& x : {G.a(), G.b()})
    for (auto const& h : H.generators())
      if (!H.contains(G.mul(G.mul(G.inv(x), h), x))) return false;
  return true;
}

int d_of(SubgroupSet const& H) {
  auto const& G = H.parent();
  std::vector<Elem> gens;
  for (auto const& h : H.elements()) gens.push_back(G.mul(h, h));
  // Commutators are central here, so those of a generating set suffice.
  for (auto const& x : H.generators())
    for (auto const& y : H.generators()) gens.push_back(G.commutator(x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto const phi = closure(gens, G);
  return std::bit_width(H.order() / phi.order()) - 1;
}

int d_of_group(FamilyGroup const& G) {
  return std::bit_width(G.order() / frattini(G).order()) - 1;
}

FrattiniBasis::FrattiniBasis(FamilyGroup const& G) : group_(G), phi_(frattini(G)) {
  if (G.order() / phi_.order() != 4)
    throw std::logic_error(fmt::format("{}: G/Phi(G) does not have order 4", G.name()));
  // a, b, ab must lie in three distinct non-trivial cosets.
  for (auto const& g : {G.a(), G.b(), G.mul(G.a(), G.b())})
    if (phi_.contains(g))
      throw std::logic_error(fmt::format("{}: {{aPhi, bPhi}} is not a basis", G.name()));
}

std::pair<int, int> FrattiniBasis::decompose(Elem const& g) const {
  auto const& G = group_;
  for (int ea = 0; ea < 2; ++ea)
    for (int eb = 0; eb < 2; ++eb) {
      auto const rep = G.mul(G.pow(G.a(), ea), G.pow(G.b(), eb));
      if (phi_.contains(G.mul(G.inv(rep), g))) return {ea, eb};
    }
  throw std::logic_error(fmt::format("{}: element {} lies in no coset of Phi(G)", G.name(),
                                     to_string(g)));
}

std::pair<int, int> frattini_quotient_decompose(Elem const& g, FamilyGroup const& G) {
  return FrattiniBasis(G).decompose(g);
}

}  // namespace twogroups
