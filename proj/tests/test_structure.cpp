#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"
#include "twogroups/structure.hpp"

using namespace twogroups;
using testsupport::triple;

namespace {

std::vector<Elem> elems(std::initializer_list<Elem> xs) { return xs; }

// Brute-force subgroup closure inside the presented group.
std::set<oracle::Triple> oracle_closure(oracle::PresentedGroup const& P,
                                        std::vector<oracle::Triple> const& gens) {
  std::set<oracle::Triple> found{P.identity()};
  std::vector<oracle::Triple> frontier{P.identity()};
  while (!frontier.empty()) {
    auto const x = frontier.back();
    frontier.pop_back();
    for (auto const& s : gens) {
      auto const y = P.mul(x, s);
      if (found.insert(y).second) frontier.push_back(y);
    }
  }
  return found;
}

std::set<oracle::Triple> labels(SubgroupSet const& H) {
  std::set<oracle::Triple> out;
  for (auto const& h : H.elements()) out.insert(triple(h));
  return out;
}

}  // namespace

TEST_CASE("closure", "[structure]") {
  auto const d8 = make_group(Family::Q1, 2, 1);
  REQUIRE(closure({}, d8).elements() == elems({{0, 0, 0}}));
  REQUIRE(closure(elems({{2, 0, 0}}), d8).elements() == elems({{0, 0, 0}, {2, 0, 0}}));
  auto const g = make_group(Family::Q1, 4, 2);
  auto const all = closure(elems({g.a(), g.b()}), g);
  REQUIRE(all.order() == 64);
  REQUIRE(all.elements() == g.all_elements());
  // redundant generators are dropped
  REQUIRE(closure(elems({g.a(), g.pow(g.a(), 2), g.b()}), g).generators().size() == 2);
}

TEST_CASE("center, derived subgroup and Frattini subgroup", "[structure]") {
  auto const d8 = make_group(Family::Q1, 2, 1);
  auto const central = elems({{0, 0, 0}, {2, 0, 0}});
  REQUIRE(center(d8).elements() == central);
  REQUIRE(derived_subgroup(d8).elements() == central);
  REQUIRE(frattini(d8).elements() == central);
  REQUIRE(center(make_group(Family::R3, 1)).elements() == central);

  auto const g = make_group(Family::Q1, 4, 2);
  auto const a4 = g.pow(g.a(), 4);
  REQUIRE(center(g) == closure(elems({a4}), g));
  REQUIRE(center(g).order() == 4);
  REQUIRE(derived_subgroup(g) == closure(elems({a4}), g));
  REQUIRE(frattini(g).order() == 16);

  REQUIRE(derived_subgroup(make_group(Family::Q2, 1, 1)).order() == 2);
  REQUIRE(frattini(make_group(Family::R3, 2)).order() == 16);
}

TEST_CASE("subgroups agree with brute force in the presented group", "[structure][oracle]") {
  for (auto const& G : testsupport::all_groups(256)) {
    INFO(G.name());
    auto const P = testsupport::presented(G);
    auto const els = P.elements();
    std::set<oracle::Triple> z;
    std::vector<oracle::Triple> squares_and_comms;
    std::vector<oracle::Triple> comms;
    for (auto const& x : els) {
      bool central = true;
      for (auto const& y : els) {
        auto const cxy = P.mul(P.mul(P.inv(x), P.inv(y)), P.mul(x, y));
        comms.push_back(cxy);
        if (cxy != P.identity()) central = false;
      }
      if (central) z.insert(x);
      squares_and_comms.push_back(P.mul(x, x));
    }
    squares_and_comms.insert(squares_and_comms.end(), comms.begin(), comms.end());
    REQUIRE(labels(center(G)) == z);
    REQUIRE(labels(derived_subgroup(G)) == oracle_closure(P, comms));
    REQUIRE(labels(frattini(G)) == oracle_closure(P, squares_and_comms));
  }
}

TEST_CASE("omega1", "[structure]") {
  auto const g42 = make_group(Family::Q1, 4, 2);
  REQUIRE(omega1(closure({}, g42)).order() == 1);
  REQUIRE(omega1(center(g42)).elements() == elems({{0, 0, 0}, {8, 0, 0}}));
  REQUIRE(omega1(center(make_group(Family::Q1, 3, 1))).elements() ==
          elems({{0, 0, 0}, {4, 0, 0}}));
  REQUIRE_THROWS_AS(omega1(whole_group(g42)), NotAbelianError);
}

TEST_CASE("centralizer", "[structure]") {
  auto const d8 = make_group(Family::Q1, 2, 1);
  REQUIRE(centralizer(closure({}, d8)).elements() == d8.all_elements());
  REQUIRE(centralizer(frattini(d8)).elements() == d8.all_elements());
  auto const g63 = make_group(Family::Q1, 6, 3);
  REQUIRE(centralizer(center_of(frattini(g63))) == frattini(g63));
}

TEST_CASE("is_cyclic", "[structure]") {
  auto const g = make_group(Family::Q1, 4, 2);
  REQUIRE(is_cyclic(closure({}, g)));
  REQUIRE(is_cyclic(center(g)));
  auto const phi = frattini(g);
  REQUIRE(phi.contains(g.pow(g.a(), 2)));
  REQUIRE(phi.contains(g.pow(g.b(), 2)));
  REQUIRE_FALSE(is_cyclic(phi));
}

TEST_CASE("minimum number of generators", "[structure]") {
  REQUIRE(d_of_group(make_group(Family::Q1, 2, 1)) == 2);
  REQUIRE(d_of_group(make_group(Family::Q2, 3, 2)) == 2);
  REQUIRE(d_of_group(make_group(Family::R3, 3)) == 2);
  auto const g = make_group(Family::Q1, 4, 2);
  REQUIRE(d_of(center(g)) == 1);
  REQUIRE(d_of(frattini(g)) == 2);
  REQUIRE(d_of(whole_group(g)) == 2);
  REQUIRE(d_of(closure({}, g)) == 0);
}

TEST_CASE("Frattini quotient coordinates", "[structure]") {
  auto const d8 = make_group(Family::Q1, 2, 1);
  REQUIRE(frattini_quotient_decompose(d8.identity(), d8) == std::pair{0, 0});
  REQUIRE(frattini_quotient_decompose(d8.mul(d8.a(), d8.b()), d8) == std::pair{1, 1});
  REQUIRE(frattini_quotient_decompose(d8.mul(d8.pow(d8.a(), 3), d8.b()), d8) == std::pair{1, 1});
  // coordinates are the parities of the a- and b-exponents
  for (auto const& G : testsupport::all_groups(1 << 10)) {
    FrattiniBasis const basis(G);
    for (auto const& g : G.all_elements())
      REQUIRE(basis.decompose(g) == std::pair{int(g.i & 1), int(g.j & 1)});
  }
}

TEST_CASE("structural invariants of every family group", "[structure][property]") {
  for (auto const& G : testsupport::all_groups(1 << 12)) {
    INFO(G.name());
    auto const z = center(G);
    auto const phi = frattini(G);
    auto const der = derived_subgroup(G);
    auto const om = omega1(z);
    REQUIRE(is_cyclic(z));
    REQUIRE(z.is_subgroup_of(phi));
    REQUIRE(der == closure(std::vector{G.c()}, G));
    REQUIRE(der.is_subgroup_of(z));
    REQUIRE(d_of_group(G) == 2);
    REQUIRE(G.order() == phi.order() * 4);
    REQUIRE(om.is_subgroup_of(phi));
    REQUIRE(phi == closure(elems({G.pow(G.a(), 2), G.pow(G.b(), 2), G.c()}), G));
    for (auto const* H : {&z, &phi, &der, &om}) REQUIRE(G.order() % H->order() == 0);
    auto const zphi = center_of(phi);
    REQUIRE(G.order() % zphi.order() == 0);
    REQUIRE(G.order() % centralizer(zphi).order() == 0);
  }
}

TEST_CASE("generator-based computations match exhaustive ones", "[structure][property]") {
  for (auto const& G : testsupport::all_groups(512)) {
    INFO(G.name());
    auto const els = G.all_elements();
    std::vector<Elem> z_full;
    std::vector<Elem> all_comms;
    for (auto const& x : els) {
      bool central = true;
      for (auto const& y : els) {
        auto const c = G.commutator(x, y);
        if (c != G.identity()) central = false;
        all_comms.push_back(c);
      }
      if (central) z_full.push_back(x);
    }
    REQUIRE(center(G).elements() == z_full);
    REQUIRE(derived_subgroup(G) == closure(all_comms, G));

    auto const zphi = center_of(frattini(G));
    std::vector<Elem> cent;
    for (auto const& g : els)
      if (std::all_of(zphi.elements().begin(), zphi.elements().end(),
                      [&](Elem const& s) { return G.commutator(g, s) == G.identity(); }))
        cent.push_back(g);
    REQUIRE(centralizer(zphi).elements() == cent);
  }
}
