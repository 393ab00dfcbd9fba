#pragma once

#include <cstddef>
#include <set>

#include "linkage_kit/weights.hpp"

namespace linkage_kit {

// Brute-force references for the linkage search. They are built only on the
// EmbeddingContext primitives (pairing, dominance gate, dot reflection) and
// never call into linkage.hpp.

struct OracleConfig {
  std::size_t max_chain_length = 1;
  Convention convention = Convention::paper;
};

// Endpoints of every dominance-gated chain of length <= max_chain_length,
// plus chi itself, by depth-first search over root sequences. Throws
// Error{InvalidJob} when max_chain_length is zero.
std::set<LocAnChar> linkage_by_chains(const EmbeddingContext& ctx, const LocAnChar& chi, const OracleConfig& cfg);

struct StabilizedChains {
  std::set<LocAnChar> members;
  // Smallest depth d with linkage_by_chains(d) == linkage_by_chains(d + 1).
  std::size_t depth = 0;
};

// Runs linkage_by_chains at increasing depth until two consecutive depths
// agree.
StabilizedChains linkage_by_chains_stabilized(const EmbeddingContext& ctx, const LocAnChar& chi,
                                              Convention convention, std::size_t depth_cap = 4096);

// {w . lambda : w in W^|S|}, per embedding through the Weyl group and then as
// a Cartesian product. Throws Error{GroupTooLarge} when |W|^|S| exceeds
// size_guard.
std::set<WeightL> dot_orbit(const EmbeddingContext& ctx, const WeightL& weight, std::size_t size_guard);

}  // namespace linkage_kit
