#include "twogroups/automorphism.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <thread>

namespace twogroups {

struct AutAccess {
  static Aut make(GenMap map, std::vector<std::uint32_t> table) {
    return Aut(std::move(map), std::move(table));
  }
};

std::string to_string(GenMap const& m) {
  return fmt::format("a->{} b->{}", to_string(m.image_a), to_string(m.image_b));
}

Elem Aut::apply(Elem const& g) const {
  return group().element_at(table_[group().index(g)]);
}

std::string_view to_string(ValidationFailure f) {
  switch (f) {
    case ValidationFailure::None:
      return "none";
    case ValidationFailure::NotCanonical:
      return "not-canonical";
    case ValidationFailure::RelationViolated:
      return "relation-violated";
    case ValidationFailure::NotHomomorphism:
      return "not-homomorphism";
    case ValidationFailure::NotSurjective:
      return "not-surjective";
  }
  return "?";
}

std::optional<std::string> violated_relation(FamilyGroup const& G, Elem const& x,
                                             Elem const& y) {
  auto const e = G.identity();
  auto const z = G.commutator(x, y);
  auto p2 = [&](Elem const& g, int log) { return G.pow(g, std::int64_t{1} << log); };
  int const n = G.n();
  switch (G.family()) {
    case Family::Q1: {
      int const r = *G.r();
      if (p2(x, n) != e) return "a^(2^n) = 1";
      if (p2(y, r) != e) return "b^(2^r) = 1";
      if (p2(x, n - r) != z) return "a^(2^(n-r)) = [a,b]";
      break;
    }
    case Family::Q2: {
      int const r = *G.r();
      if (p2(x, n) != e) return "a^(2^n) = 1";
      if (p2(y, r) != e) return "b^(2^r) = 1";
      if (p2(x, r) != p2(z, 2 * r - n)) return "a^(2^r) = [a,b]^(2^(2r-n))";
      break;
    }
    case Family::R3:
      if (p2(x, n + 1) != e) return "a^(2^(n+1)) = 1";
      if (p2(y, n + 1) != e) return "b^(2^(n+1)) = 1";
      if (p2(x, n) != p2(z, n - 1)) return "a^(2^n) = [a,b]^(2^(n-1))";
      if (p2(z, n - 1) != p2(y, n)) return "[a,b]^(2^(n-1)) = b^(2^n)";
      break;
  }
  if (G.family() != Family::Q1) {
    if (G.commutator(z, x) != e) return "[[a,b],a] = 1";
    if (G.commutator(z, y) != e) return "[[a,b],b] = 1";
  }
  return std::nullopt;
}

namespace {

// Frattini coordinates of a canonical element.  Phi(G) = <a^2, b^2, c>
// and every carry adds an even amount to i, so the parities of (i, j) are
// the coordinates.
std::pair<int, int> parity(Elem const& g) { return {int(g.i & 1), int(g.j & 1)}; }

std::vector<Elem> powers(FamilyGroup const& G, Elem const& g, std::int64_t count) {
  std::vector<Elem> out;
  out.reserve(count);
  Elem cur = G.identity();
  for (std::int64_t t = 0; t < count; ++t) {
    out.push_back(cur);
    cur = G.mul(cur, g);
  }
  return out;
}

Validation fail(ValidationFailure f, std::string detail) {
  Validation v;
  v.failure = f;
  v.detail = std::move(detail);
  return v;
}

}  // namespace

Validation validate(GenMap const& map) {
  auto const& G = map.group;
  auto const& X = map.image_a;
  auto const& Y = map.image_b;
  if (!G.is_canonical(X) || !G.is_canonical(Y))
    return fail(ValidationFailure::NotCanonical, "generator image not in canonical range");
  if (auto rel = violated_relation(G, X, Y))
    return fail(ValidationFailure::RelationViolated, *rel);

  auto const [xa, xb] = parity(X);
  auto const [ya, yb] = parity(Y);
  if (((xa * yb) ^ (xb * ya)) == 0)
    return fail(ValidationFailure::NotSurjective, "images do not span G/Phi(G)");

  // alpha(a^i b^j c^k) = X^i Y^j [X,Y]^k
  auto const xp = powers(G, X, G.Ma());
  auto const yp = powers(G, Y, G.Mb());
  auto const zp = powers(G, G.commutator(X, Y), G.Mc());
  std::vector<std::uint32_t> table(G.order());
  for (std::int64_t i = 0; i < G.Ma(); ++i)
    for (std::int64_t j = 0; j < G.Mb(); ++j) {
      auto const xy = G.mul(xp[i], yp[j]);
      for (std::int64_t k = 0; k < G.Mc(); ++k)
        table[G.index({i, j, k})] = static_cast<std::uint32_t>(G.index(G.mul(xy, zp[k])));
    }

  // One-step homomorphism check: alpha(g s) = alpha(g) alpha(s), s in {a, b}.
  auto const ga = G.a();
  auto const gb = G.b();
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    auto const g = G.element_at(idx);
    auto const img = G.element_at(table[idx]);
    if (table[G.index(G.mul(g, ga))] != G.index(G.mul(img, X)))
      return fail(ValidationFailure::NotHomomorphism,
                  fmt::format("alpha({} a) != alpha({}) alpha(a)", to_string(g), to_string(g)));
    if (table[G.index(G.mul(g, gb))] != G.index(G.mul(img, Y)))
      return fail(ValidationFailure::NotHomomorphism,
                  fmt::format("alpha({} b) != alpha({}) alpha(b)", to_string(g), to_string(g)));
  }

  std::vector<char> hit(table.size(), 0);
  for (auto t : table) {
    if (hit[t]) return fail(ValidationFailure::NotSurjective, "induced map is not injective");
    hit[t] = 1;
  }
  Validation v;
  v.aut = AutAccess::make(map, std::move(table));
  return v;
}

Aut require_valid(GenMap const& map) {
  auto v = validate(map);
  if (!v)
    throw std::logic_error(fmt::format("{} on {}: {} ({})", to_string(map), map.group.name(),
                                       to_string(v.failure), v.detail));
  return std::move(*v.aut);
}

Aut identity_aut(FamilyGroup const& G) { return require_valid({G, G.a(), G.b()}); }

Elem apply(Aut const& alpha, Elem const& g) { return alpha.apply(g); }

Aut compose(Aut const& first, Aut const& second) {
  if (!(first.group() == second.group()))
    throw std::invalid_argument("compose: automorphisms of different groups");
  auto const& G = first.group();
  std::vector<std::uint32_t> table(first.table().size());
  for (std::size_t idx = 0; idx < table.size(); ++idx)
    table[idx] = second.table()[first.table()[idx]];
  GenMap map{G, G.element_at(table[G.index(G.a())]), G.element_at(table[G.index(G.b())])};
  return AutAccess::make(std::move(map), std::move(table));
}

std::uint64_t aut_order(Aut const& alpha) {
  auto const& G = alpha.group();
  auto const ia = static_cast<std::uint32_t>(G.index(G.a()));
  auto const ib = static_cast<std::uint32_t>(G.index(G.b()));
  auto const& t = alpha.table();
  std::uint32_t xa = t[ia];
  std::uint32_t xb = t[ib];
  std::uint64_t m = 1;
  while (xa != ia || xb != ib) {
    xa = t[xa];
    xb = t[xb];
    ++m;
  }
  return m;
}

bool fixes_pointwise(Aut const& alpha, SubgroupSet const& S) {
  auto const& G = alpha.group();
  return std::all_of(S.elements().begin(), S.elements().end(), [&](Elem const& s) {
    return alpha.table()[G.index(s)] == G.index(s);
  });
}

namespace {

Elem conjugate(FamilyGroup const& G, Elem const& g, Elem const& x) {
  // x^-1 g x = g [g, x]
  return G.mul(g, G.commutator(g, x));
}

}  // namespace

Aut inner_from(Elem const& x, FamilyGroup const& G) {
  return require_valid({G, conjugate(G, G.a(), x), conjugate(G, G.b(), x)});
}

std::optional<Elem> is_inner_direct(Aut const& alpha) {
  auto const& G = alpha.group();
  auto const& m = alpha.map();
  for (auto const& x : G.all_elements())
    if (conjugate(G, G.a(), x) == m.image_a && conjugate(G, G.b(), x) == m.image_b) return x;
  return std::nullopt;
}

SubgroupSet commutator_with(Aut const& alpha) {
  auto const& G = alpha.group();
  std::vector<Elem> gens;
  for (std::size_t idx = 0; idx < alpha.table().size(); ++idx)
    gens.push_back(G.mul(G.inv(G.element_at(idx)), G.element_at(alpha.table()[idx])));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(gens, G);
}

bool is_inner_criterion(Aut const& alpha) {
  auto const derived = derived_subgroup(alpha.group());
  return commutator_with(alpha).is_subgroup_of(derived);
}

namespace {

template <typename Work>
std::vector<Aut> run_partitioned(std::vector<Elem> const& xs, unsigned jobs, Work work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(xs.size())));
  std::vector<std::vector<Aut>> parts(jobs);
  auto run = [&](unsigned w) {
    for (std::size_t t = w; t < xs.size(); t += jobs) work(xs[t], parts[w]);
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(run, w);
  }
  std::vector<Aut> out;
  for (auto& p : parts)
    for (auto& a : p) out.push_back(std::move(a));
  std::sort(out.begin(), out.end(), [](Aut const& x, Aut const& y) {
    return std::tie(x.map().image_a, x.map().image_b) < std::tie(y.map().image_a, y.map().image_b);
  });
  return out;
}

bool is_involution(Aut const& alpha) { return aut_order(alpha) == 2; }

}  // namespace

namespace {

template <typename Keep>
std::vector<Aut> enumerate_filtered(FamilyGroup const& G, EnumerationOptions const& opts,
                                    Keep keep) {
  auto const all = G.all_elements();
  if (opts.mode == EnumerationMode::Brute) {
    if (G.order() > opts.brute_cap)
      throw CapExceeded(fmt::format("{}: order {} exceeds brute-force cap {}", G.name(),
                                    G.order(), opts.brute_cap));
    auto const phi = frattini(G);
    return run_partitioned(all, opts.jobs, [&](Elem const& X, std::vector<Aut>& out) {
      for (auto const& Y : all) {
        auto v = validate({G, X, Y});
        if (v && fixes_pointwise(*v.aut, phi) && keep(*v.aut))
          out.push_back(std::move(*v.aut));
      }
    });
  }

  if (G.order() > opts.pruned_cap)
    throw CapExceeded(fmt::format("{}: order {} exceeds enumeration cap {}", G.name(), G.order(),
                                  opts.pruned_cap));
  // Phi(G) = <a^2, b^2, c>: alpha fixes Phi pointwise iff it fixes those three.
  auto const a2 = G.mul(G.a(), G.a());
  auto const b2 = G.mul(G.b(), G.b());
  auto const c = G.c();
  std::vector<Elem> xs;
  std::vector<Elem> ys;
  for (auto const& g : all) {
    auto const sq = G.mul(g, g);
    if (sq == a2) xs.push_back(g);
    if (sq == b2) ys.push_back(g);
  }
  return run_partitioned(xs, opts.jobs, [&](Elem const& X, std::vector<Aut>& out) {
    for (auto const& Y : ys) {
      if (G.commutator(X, Y) != c) continue;
      auto v = validate({G, X, Y});
      if (v && keep(*v.aut)) out.push_back(std::move(*v.aut));
    }
  });
}

}  // namespace

std::vector<Aut> enumerate_phi_fixing(FamilyGroup const& G, EnumerationOptions const& opts) {
  return enumerate_filtered(G, opts, [](Aut const&) { return true; });
}

std::vector<Aut> enumerate_phi_fixing_involutions(FamilyGroup const& G,
                                                  EnumerationOptions const& opts) {
  return enumerate_filtered(G, opts, is_involution);
}

StarReport star_condition(FamilyGroup const& G, EnumerationOptions const& opts) {
  StarReport rep{G, 0, 0, {}, true};
  for (auto const& alpha : enumerate_phi_fixing_involutions(G, opts)) {
    bool const direct = is_inner_direct(alpha).has_value();
    if (direct != is_inner_criterion(alpha))
      throw InnerDisagreement(fmt::format("{}: inner-ness criterion disagrees with direct search on {}",
                                          G.name(), to_string(alpha.map())));
    ++rep.total;
    if (direct)
      ++rep.inner_count;
    else
      rep.noninner_witnesses.push_back(alpha.map());
  }
  rep.star_holds = rep.noninner_witnesses.empty();
  return rep;
}

}  // namespace twogroups
