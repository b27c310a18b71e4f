#include "twogroups/constructions.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>

namespace twogroups {

namespace {

constexpr std::array<std::pair<CaseId, std::string_view>, 9> kCaseNames{{
    {CaseId::C1i, "1i"},
    {CaseId::C1ii, "1ii"},
    {CaseId::C1iii_a1, "1iii-a1"},
    {CaseId::C1iii_a2, "1iii-a2"},
    {CaseId::C2i, "2i"},
    {CaseId::C2ii, "2ii"},
    {CaseId::C2iii, "2iii"},
    {CaseId::C3i, "3i"},
    {CaseId::C3ii, "3ii"},
}};

std::int64_t p2(int e) { return std::int64_t{1} << e; }

bool uses_m(CaseId id) {
  return id == CaseId::C1ii || id == CaseId::C1iii_a1 || id == CaseId::C1iii_a2;
}
bool uses_s(CaseId id) { return id == CaseId::C1iii_a1 || id == CaseId::C1iii_a2; }

}  // namespace

std::string_view to_string(CaseId id) {
  for (auto const& [k, v] : kCaseNames)
    if (k == id) return v;
  return "?";
}

std::optional<CaseId> parse_case(std::string_view s) {
  for (auto const& [k, v] : kCaseNames)
    if (v == s) return k;
  return std::nullopt;
}

bool case_applies(CaseId id, FamilyGroup const& G) {
  int const n = G.n();
  int const r = G.r().value_or(0);
  switch (id) {
    case CaseId::C1i:
      return G.family() == Family::Q1 && n == 2 && r == 1;
    case CaseId::C1ii:
      return G.family() == Family::Q1 && r == 1 && n >= 3;
    case CaseId::C1iii_a1:
    case CaseId::C1iii_a2:
      return G.family() == Family::Q1 && n > 2 && r >= 2;
    case CaseId::C2i:
      return G.family() == Family::Q2 && n == 1 && r == 1;
    case CaseId::C2ii:
      return G.family() == Family::Q2 && n == r && n > 1;
    case CaseId::C2iii:
      return G.family() == Family::Q2 && r + 1 <= n && n < 2 * r && r > 1;
    case CaseId::C3i:
      return G.family() == Family::R3 && n == 1;
    case CaseId::C3ii:
      return G.family() == Family::R3 && n >= 2;
  }
  return false;
}

std::vector<CaseId> applicable_cases(FamilyGroup const& G) {
  std::vector<CaseId> out;
  for (auto const& [id, name] : kCaseNames)
    if (case_applies(id, G)) out.push_back(id);
  return out;
}

GenMap witness_map(WitnessCase const& wc, FamilyGroup const& G, Convention conv) {
  if (!case_applies(wc.id, G))
    throw InapplicableCase(
        fmt::format("case {} does not apply to {}", to_string(wc.id), G.name()));
  if (wc.m < 0 || wc.m > 1 || wc.s < 0 || wc.s > 1)
    throw InapplicableCase(fmt::format("m, s must lie in {{0, 1}} (got m={}, s={})", wc.m, wc.s));

  int const n = G.n();
  int const r = G.r().value_or(0);
  auto const a = G.a();
  auto const b = G.b();
  auto const c = commutator_as(conv, a, b, G);
  // a^x b^y [a,b]^z
  auto word = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    return G.mul(G.mul(G.pow(a, x), G.pow(b, y)), G.pow(c, z));
  };
  auto const m = wc.m;
  auto const s = wc.s;

  switch (wc.id) {
    case CaseId::C1i:
      return {G, word(3, 0, 0), G.mul(a, b)};
    case CaseId::C1ii:
      return {G, word(1 + p2(n - 2) + m * p2(n - 1), 1, 0), word(p2(n - 1), 1, 0)};
    case CaseId::C1iii_a1:
      return {G, word(1 + m * p2(n - 1), 0, 0), word(s * p2(n - 1), 1, 0)};
    case CaseId::C1iii_a2:
      return {G, word(1 + p2(n - 2) + m * p2(n - 1), p2(r - 1), 0), word(s * p2(n - 1), 1, 0)};
    case CaseId::C2i:
      return {G, b, a};
    case CaseId::C2ii:
      return {G, word(p2(r - 1) + 1, 0, 0), word(0, p2(r - 1) + 1, 0)};
    case CaseId::C2iii:
      return {G, word(p2(n - 1) - p2(r - 1) + 1, 0, p2(2 * r - n - 1)),
              word(p2(n - 1), p2(r - 1) + 1, 0)};
    case CaseId::C3i:
      return {G, G.mul(a, b), word(0, 3, 0)};
    case CaseId::C3ii: {
      auto const e = p2(n) + p2(n - 1) + 1;
      return {G, word(e, 0, p2(n - 2)), word(0, e, p2(n - 2))};
    }
  }
  throw InapplicableCase("unknown case");
}

std::vector<WitnessCase> matching_cases(GenMap const& map) {
  std::vector<WitnessCase> out;
  for (auto id : applicable_cases(map.group))
    for (int m = 0; m <= (uses_m(id) ? 1 : 0); ++m)
      for (int s = 0; s <= (uses_s(id) ? 1 : 0); ++s) {
        WitnessCase wc{id, m, s};
        if (witness_map(wc, map.group) == map) out.push_back(wc);
      }
  return out;
}

bool WitnessVerdict::passed() const {
  return convention.has_value() &&
         std::all_of(claims.begin(), claims.end(), [](Claim const& c) { return c.passed; });
}

namespace {

std::vector<Claim> check_claims(WitnessCase const& wc, GenMap const& map) {
  std::vector<Claim> claims;
  auto v = validate(map);
  claims.push_back({"valid-automorphism", bool(v),
                    v ? std::string("valid")
                      : fmt::format("{}: {}", to_string(v.failure), v.detail)});
  bool const expect_inner = wc.id == CaseId::C1iii_a1;
  bool const expect_not_order2 = wc.id == CaseId::C1iii_a2;
  bool const order_claim = wc.id != CaseId::C1iii_a1;
  if (!v) {
    claims.push_back({"fixes-frattini", false, "not an automorphism"});
    if (order_claim) claims.push_back({expect_not_order2 ? "order-not-2" : "order-2", false, "not an automorphism"});
    claims.push_back({expect_inner ? "inner" : "non-inner", false, "not an automorphism"});
    return claims;
  }
  auto const& alpha = *v.aut;
  claims.push_back({"fixes-frattini", fixes_pointwise(alpha, frattini(map.group)), ""});
  auto const ord = aut_order(alpha);
  if (order_claim) {
    bool const ok = expect_not_order2 ? ord != 2 : ord == 2;
    claims.push_back({expect_not_order2 ? "order-not-2" : "order-2", ok,
                      fmt::format("order {}", ord)});
  }
  auto const witness = is_inner_direct(alpha);
  bool const inner = witness.has_value();
  claims.push_back({expect_inner ? "inner" : "non-inner", inner == expect_inner,
                    inner ? fmt::format("conjugation by {}", to_string(*witness))
                          : std::string("no conjugating element")});
  claims.push_back({"criterion-agrees", is_inner_criterion(alpha) == inner, ""});
  return claims;
}

}  // namespace

WitnessVerdict verify_witness(WitnessCase const& wc, FamilyGroup const& G) {
  auto const map = witness_map(wc, G, Convention::InverseFirst);
  WitnessVerdict verdict{wc, G, map, check_claims(wc, map), std::nullopt, std::nullopt};
  if (auto v = validate(map)) verdict.order = aut_order(*v.aut);
  auto all_pass = [](std::vector<Claim> const& cs) {
    return std::all_of(cs.begin(), cs.end(), [](Claim const& c) { return c.passed; });
  };
  if (all_pass(verdict.claims)) {
    verdict.convention = Convention::InverseFirst;
    return verdict;
  }
  // Re-run with [a,b] = a b a^-1 b^-1 in the formulas.
  auto const alt_map = witness_map(wc, G, Convention::InverseLast);
  auto alt_claims = check_claims(wc, alt_map);
  if (all_pass(alt_claims)) {
    verdict.map = alt_map;
    verdict.claims = std::move(alt_claims);
    verdict.convention = Convention::InverseLast;
    if (auto v = validate(alt_map)) verdict.order = aut_order(*v.aut);
  }
  return verdict;
}

SubgroupSet omega1_center_frattini(FamilyGroup const& G) {
  return omega1(center_of(frattini(G)));
}

Aut phi_f(HomGF2 const& f, FamilyGroup const& G) {
  auto const basis = FrattiniBasis(G);
  auto const om = omega1(center(G));
  if (!om.is_subgroup_of(basis.phi()))
    throw std::invalid_argument(fmt::format("{}: Omega_1(Z(G)) is not inside Phi(G)", G.name()));
  if (!om.contains(f.image_a) || !om.contains(f.image_b))
    throw std::invalid_argument("phi_f: images must lie in Omega_1(Z(G))");

  auto alpha = require_valid({G, G.mul(G.a(), f.image_a), G.mul(G.b(), f.image_b)});
  // Agreement with g -> g f(gPhi) on every element.
  for (auto const& g : G.all_elements()) {
    auto const [ea, eb] = basis.decompose(g);
    auto const fg = G.mul(G.pow(f.image_a, ea), G.pow(f.image_b, eb));
    if (alpha.apply(g) != G.mul(g, fg))
      throw std::logic_error(fmt::format("{}: phi_f disagrees with its generator extension at {}",
                                         G.name(), to_string(g)));
  }
  return alpha;
}

ExtensionResult extend_by_central(FamilyGroup const& G, Elem const& b1, Elem const& b2) {
  auto const om = omega1_center_frattini(G);
  auto const e = G.identity();
  if (!om.contains(b1)) return {std::nullopt, "b1 not in Omega_1(Z(Phi(G)))"};
  if (!om.contains(b2)) return {std::nullopt, "b2 not in Omega_1(Z(Phi(G)))"};
  if (G.commutator(G.a(), b1) != e) return {std::nullopt, "[x1,b1] != 1"};
  if (G.commutator(G.b(), b2) != e) return {std::nullopt, "[x2,b2] != 1"};
  if (G.commutator(G.a(), b2) != G.commutator(G.b(), b1))
    return {std::nullopt, "[x1,b2] != [x2,b1]"};
  GenMap const map{G, G.mul(G.a(), b1), G.mul(G.b(), b2)};
  auto v = validate(map);
  if (!v)
    throw std::logic_error(fmt::format("{}: hypotheses hold but {} is not an automorphism ({})",
                                       G.name(), to_string(map), v.detail));
  return {std::move(v.aut), ""};
}

SubgroupMap::SubgroupMap(SubgroupSet domain, std::vector<Elem> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (images_.size() != domain_.order())
    throw std::invalid_argument("SubgroupMap: one image per domain element required");
}

Elem SubgroupMap::operator()(Elem const& x) const {
  auto const& el = domain_.elements();
  auto it = std::lower_bound(el.begin(), el.end(), x);
  if (it == el.end() || *it != x)
    throw std::out_of_range(fmt::format("SubgroupMap: {} outside domain", to_string(x)));
  return images_[static_cast<std::size_t>(it - el.begin())];
}

bool SubgroupMap::is_automorphism() const {
  auto const& G = domain_.parent();
  auto sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != domain_.elements()) return false;
  for (auto const& x : domain_.elements())
    for (auto const& y : domain_.elements())
      if ((*this)(G.mul(x, y)) != G.mul((*this)(x), (*this)(y))) return false;
  return true;
}

SubgroupMap map_from_generator_images(SubgroupSet const& H,
                                      std::vector<std::pair<Elem, Elem>> const& gen_images) {
  auto const& G = H.parent();
  std::vector<std::optional<Elem>> image(G.order());
  std::vector<Elem> frontier{G.identity()};
  image[G.index(G.identity())] = G.identity();
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    auto const x = frontier[head];
    for (auto const& [s, t] : gen_images) {
      auto const y = G.mul(x, s);
      auto const img = G.mul(*image[G.index(x)], t);
      auto& slot = image[G.index(y)];
      if (!slot) {
        slot = img;
        frontier.push_back(y);
      } else if (*slot != img) {
        throw std::invalid_argument(fmt::format(
            "generator images do not define a homomorphism (conflict at {})", to_string(y)));
      }
    }
  }
  std::vector<Elem> images;
  for (auto const& h : H.elements()) {
    if (!image[G.index(h)])
      throw std::invalid_argument("generator images do not generate the domain");
    images.push_back(*image[G.index(h)]);
  }
  return SubgroupMap(H, std::move(images));
}

SubgroupMap restrict_to(Aut const& alpha, SubgroupSet const& H) {
  std::vector<Elem> images;
  for (auto const& h : H.elements()) images.push_back(alpha.apply(h));
  return SubgroupMap(H, std::move(images));
}

CommonExtension common_extension(SubgroupMap const& alpha, SubgroupMap const& beta) {
  auto const& A = alpha.domain();
  auto const& B = beta.domain();
  auto const& G = A.parent();
  if (!(B.parent() == G)) throw std::invalid_argument("common_extension: different groups");
  if (!is_normal(A)) throw std::invalid_argument("common_extension: A is not normal in G");
  auto const AB = intersection(A, B);
  if (A.order() * B.order() / AB.order() != G.order())
    throw std::invalid_argument("common_extension: G != AB");
  if (!alpha.is_automorphism())
    throw std::invalid_argument("common_extension: alpha is not an automorphism of A");
  if (!beta.is_automorphism())
    throw std::invalid_argument("common_extension: beta is not an automorphism of B");

  CommonExtension out;
  for (auto const& x : AB.elements())
    if (alpha(x) != beta(x)) {
      out.failure = "alpha and beta differ on A ∩ B";
      out.violating = std::pair{x, x};
      return out;
    }
  for (auto const& x : A.elements())
    for (auto const& y : B.elements())
      if (alpha(G.commutator(x, y)) != G.commutator(alpha(x), beta(y))) {
        out.failure = "[a,b]^alpha != [a^alpha, b^beta]";
        out.violating = std::pair{x, y};
        return out;
      }

  // x y -> alpha(x) beta(y), checked for consistency over every factorization.
  std::vector<std::optional<Elem>> ext(G.order());
  for (auto const& x : A.elements())
    for (auto const& y : B.elements()) {
      auto const img = G.mul(alpha(x), beta(y));
      auto& slot = ext[G.index(G.mul(x, y))];
      if (slot && *slot != img) {
        out.failure = "extension is not well defined";
        out.violating = std::pair{x, y};
        return out;
      }
      slot = img;
    }
  auto v = validate({G, *ext[G.index(G.a())], *ext[G.index(G.b())]});
  if (!v) {
    out.failure = fmt::format("extension is not an automorphism ({})", v.detail);
    return out;
  }
  for (auto const& g : G.all_elements())
    if (v.aut->apply(g) != *ext[G.index(g)]) {
      out.failure = fmt::format("extension is not multiplicative at {}", to_string(g));
      return out;
    }
  out.aut = std::move(v.aut);
  return out;
}

std::vector<std::pair<Elem, Elem>> varphi_kernel(FamilyGroup const& G) {
  if (d_of_group(G) != 2) throw std::invalid_argument("varphi_kernel: requires d(G) = 2");
  auto const om = omega1_center_frattini(G);
  auto const e = G.identity();
  std::vector<std::pair<Elem, Elem>> out;
  for (auto const& b1 : om.elements())
    for (auto const& b2 : om.elements()) {
      if (G.commutator(G.a(), b1) != e || G.commutator(G.b(), b2) != e) continue;
      if (G.mul(G.commutator(G.a(), b2), G.commutator(b1, G.b())) != e) continue;
      out.emplace_back(b1, b2);
    }
  return out;
}

}  // namespace twogroups
