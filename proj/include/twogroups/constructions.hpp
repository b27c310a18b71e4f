// Explicit automorphism constructions: the witness catalog for each family,
// the maps g -> g f(g Phi), extensions x_i -> x_i b_i, and common
// extensions over a product G = AB.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twogroups/automorphism.hpp"

namespace twogroups {

enum class CaseId { C1i, C1ii, C1iii_a1, C1iii_a2, C2i, C2ii, C2iii, C3i, C3ii };

std::string_view to_string(CaseId id);
std::optional<CaseId> parse_case(std::string_view s);

struct WitnessCase {
  CaseId id;
  int m = 0;
  int s = 0;
};

bool case_applies(CaseId id, FamilyGroup const& G);
std::vector<CaseId> applicable_cases(FamilyGroup const& G);

class InapplicableCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Generator images exactly as the case formula prints them, with n, r, m, s
// substituted.  [a,b] is expanded under `conv`.
GenMap witness_map(WitnessCase const& wc, FamilyGroup const& G,
                     Convention conv = Convention::InverseFirst);

// Every (case, m, s) whose witness equals `map`.
std::vector<WitnessCase> matching_cases(GenMap const& map);

struct Claim {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct WitnessVerdict {
  WitnessCase wc;
  FamilyGroup group;
  GenMap map;
  std::vector<Claim> claims;
  std::optional<std::uint64_t> order;
  // Convention under which every claim passed; empty if none did.
  std::optional<Convention> convention;

  bool passed() const;
};

WitnessVerdict verify_witness(WitnessCase const& wc, FamilyGroup const& G);

// f : G/Phi(G) -> Omega_1(Z(G)), given by the images of aPhi and bPhi.
struct HomGF2 {
  Elem image_a;
  Elem image_b;
};

// g -> g f(g Phi).  Throws std::invalid_argument if Omega_1(Z(G)) is not
// inside Phi(G) or an image is not in Omega_1(Z(G)).
Aut phi_f(HomGF2 const& f, FamilyGroup const& G);

struct ExtensionResult {
  std::optional<Aut> aut;
  std::string failure;

  explicit operator bool() const { return aut.has_value(); }
};

// a -> a b1, b -> b b2 for b1, b2 in Omega_1(Z(Phi(G))) with [a,b1] = 1,
// [b,b2] = 1 and [a,b2] = [b,b1].
ExtensionResult extend_by_central(FamilyGroup const& G, Elem const& b1, Elem const& b2);

// A map defined on the elements of a subgroup.
class SubgroupMap {
 public:
  SubgroupMap(SubgroupSet domain, std::vector<Elem> images);

  SubgroupSet const& domain() const { return domain_; }
  Elem operator()(Elem const& x) const;
  // Bijective onto the domain and multiplicative on all pairs.
  bool is_automorphism() const;

 private:
  SubgroupSet domain_;
  std::vector<Elem> images_;
};

// Extends generator images to all of H.  Throws std::invalid_argument if the
// assignment is inconsistent.
SubgroupMap map_from_generator_images(SubgroupSet const& H,
                                      std::vector<std::pair<Elem, Elem>> const& gen_images);
SubgroupMap restrict_to(Aut const& alpha, SubgroupSet const& H);

struct CommonExtension {
  std::optional<Aut> aut;
  std::string failure;
  std::optional<std::pair<Elem, Elem>> violating;

  explicit operator bool() const { return aut.has_value(); }
};

// Throws std::invalid_argument when A is not normal, G != AB, or alpha/beta
// are not automorphisms of A/B.
CommonExtension common_extension(SubgroupMap const& alpha, SubgroupMap const& beta);

// Pairs (b1, b2) in Omega_1(Z(Phi(G)))^2 with [a,b1] = [b,b2] = [a,b2][b1,b] = 1.
std::vector<std::pair<Elem, Elem>> varphi_kernel(FamilyGroup const& G);

// Omega_1(Z(Phi(G))).
SubgroupSet omega1_center_frattini(FamilyGroup const& G);

}  // namespace twogroups
