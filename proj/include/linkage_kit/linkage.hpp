#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linkage_kit/parabolic.hpp"
#include "linkage_kit/weights.hpp"

namespace linkage_kit {

inline constexpr std::size_t kDefaultOrbitGuard = 1'000'000;

struct LinkageOptions {
  // Maximum number of distinct characters the search may visit.
  std::size_t orbit_guard = kDefaultOrbitGuard;
  // When false, members carry empty witness chains.
  bool record_witnesses = true;
};

struct LinkStep {
  GlobalRoot root;
  LocAnChar result;

  bool operator==(const LinkStep&) const = default;
};

// chi = chi_0, chi_1 = s_{r_1} . chi_0, ..., each link gated by dominance of
// its predecessor. Empty for the origin itself.
struct LinkageChain {
  std::vector<LinkStep> steps;

  bool operator==(const LinkageChain&) const = default;
};

struct LinkageMember {
  LocAnChar character;
  LinkageChain witness;  // first chain discovered, not necessarily shortest
};

struct LinkageResult {
  LocAnChar origin;
  std::vector<LinkageMember> members;  // sorted by algebraic coordinates
  Convention convention = Convention::paper;
  // True when the set only bounds the true factor set from above.
  bool upper_bound = false;

  bool contains(const LocAnChar& chi) const;
  std::set<WeightL> algebraic_set() const;
};

// Every one-step link chi' = s_r . chi with chi locally r-dominant.
std::vector<std::pair<GlobalRoot, LocAnChar>> up_link_candidates(const EmbeddingContext& ctx, const LocAnChar& chi,
                                                                 Convention convention);

// All characters strongly linked to chi (chi included), by breadth-first search
// over up-links. Throws Error{OrbitGuardExceeded} past options.orbit_guard.
LinkageResult strongly_linked_set(const EmbeddingContext& ctx, const LocAnChar& chi, Convention convention,
                                  const LinkageOptions& options = {});

// Exact set of simple factors L(chi') of the Borel Verma module M(chi);
// multiplicities are not computed.
LinkageResult verma_factors_borel(const EmbeddingContext& ctx, const LocAnChar& chi, Convention convention,
                                  const LinkageOptions& options = {});

// Possible factors of the generalized Verma module with highest weight chi:
// strongly linked characters whose weight lies in Lambda_p^+. Exact for the
// Borel, an upper bound otherwise. Throws Error{NotParabolicDominant} unless
// chi itself lies in Lambda_p^+.
LinkageResult verma_factor_candidates(const EmbeddingContext& ctx, const LocAnChar& chi, const ParabolicSubset& p,
                                      Convention convention, const LinkageOptions& options = {});

struct Obstruction {
  LocAnChar character;
  CentralKey key;
  LinkageChain witness;
};

// The characters chi' != chi, strongly linked to chi with dchi' in Lambda_p^+,
// each with the central character at which the Jacquet module eigenspace has
// to vanish. Sorted by key, then by algebraic coordinates. Empty means the
// pair is non-critical with respect to every representation.
std::vector<Obstruction> noncritical_obstruction_set(const EmbeddingContext& ctx, const LocAnChar& chi,
                                                     const ParabolicSubset& p, const std::string& pi_tag,
                                                     Convention convention, const LinkageOptions& options = {});

// Replays a witness chain from origin, checking every dominance gate and
// every intermediate character, and that the chain ends at expected_end.
bool replay_chain(const EmbeddingContext& ctx, const LocAnChar& origin, const LinkageChain& chain,
                  Convention convention, const LocAnChar& expected_end);

}  // namespace linkage_kit
