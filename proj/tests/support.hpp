#pragma once

#include <random>
#include <vector>

#include "oracles/presented_group.hpp"
#include "twogroups/group.hpp"

namespace testsupport {

inline std::vector<twogroups::FamilyGroup> all_groups(std::uint64_t max_order) {
  std::vector<twogroups::FamilyGroup> out;
  for (auto f : {twogroups::Family::Q1, twogroups::Family::Q2, twogroups::Family::R3})
    for (auto& g : twogroups::family_members(f, max_order)) out.push_back(g);
  return out;
}

inline oracle::Kind kind_of(twogroups::Family f) {
  switch (f) {
    case twogroups::Family::Q1:
      return oracle::Kind::Q1;
    case twogroups::Family::Q2:
      return oracle::Kind::Q2;
    case twogroups::Family::R3:
      return oracle::Kind::R3;
  }
  return oracle::Kind::Q1;
}

inline oracle::PresentedGroup presented(twogroups::FamilyGroup const& G) {
  return oracle::PresentedGroup(kind_of(G.family()), G.n(), G.r().value_or(0), G.Ma(), G.Mb(),
                                G.Mc());
}

inline oracle::Triple triple(twogroups::Elem const& e) { return {e.i, e.j, e.k}; }

inline twogroups::Elem elem(oracle::Triple const& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

inline twogroups::Elem random_elem(twogroups::FamilyGroup const& G, std::mt19937_64& rng) {
  return G.element_at(std::uniform_int_distribution<std::uint64_t>(0, G.order() - 1)(rng));
}

}  // namespace testsupport
