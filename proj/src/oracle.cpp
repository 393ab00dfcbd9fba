#include "linkage_kit/oracle.hpp"

#include <map>

#include "linkage_kit/error.hpp"

namespace linkage_kit {

namespace {

// Depth-first over every gated root sequence. A character already expanded
// with at least as many remaining steps has no new endpoints to offer, so that
// branch is cut; the endpoint set is the same as for the unpruned walk.
void extend(const EmbeddingContext& ctx, const std::vector<GlobalRoot>& roots, const LocAnChar& current,
            std::size_t remaining, Convention convention, std::map<LocAnChar, std::size_t>& expanded) {
  const auto [it, fresh] = expanded.emplace(current, remaining);
  if (!fresh) {
    if (it->second >= remaining) return;
    it->second = remaining;
  }
  if (remaining == 0) return;
  for (const auto& r : roots) {
    if (!ctx.is_alpha_dominant(current, r, convention)) continue;
    extend(ctx, roots, ctx.dot_reflect_char(current, r), remaining - 1, convention, expanded);
  }
}

}  // namespace

std::set<LocAnChar> linkage_by_chains(const EmbeddingContext& ctx, const LocAnChar& chi, const OracleConfig& cfg) {
  if (cfg.max_chain_length == 0) throw Error(ErrorKind::InvalidJob, "oracle chain length must be at least 1");
  ctx.check(chi.algebraic);
  std::map<LocAnChar, std::size_t> expanded;
  extend(ctx, ctx.global_roots(), chi, cfg.max_chain_length, cfg.convention, expanded);
  std::set<LocAnChar> out;
  for (const auto& [c, depth] : expanded) out.insert(c);
  return out;
}

StabilizedChains linkage_by_chains_stabilized(const EmbeddingContext& ctx, const LocAnChar& chi,
                                              Convention convention, std::size_t depth_cap) {
  std::size_t depth = 1;
  auto current = linkage_by_chains(ctx, chi, {depth, convention});
  while (depth < depth_cap) {
    auto next = linkage_by_chains(ctx, chi, {depth + 1, convention});
    if (next == current) return {std::move(current), depth};
    current = std::move(next);
    ++depth;
  }
  throw Error(ErrorKind::OrbitGuardExceeded,
              "chain enumeration did not stabilize below depth " + std::to_string(depth_cap));
}

std::set<WeightL> dot_orbit(const EmbeddingContext& ctx, const WeightL& weight, std::size_t size_guard) {
  ctx.check(weight);
  const RootSystem& rs = ctx.base();
  const auto group = weyl_generate(rs, size_guard);
  std::size_t total = 1;
  for (std::size_t s = 0; s < ctx.num_embeddings(); ++s) {
    if (total > size_guard / group.size())
      throw Error(ErrorKind::GroupTooLarge, "|W|^|S| exceeds size guard " + std::to_string(size_guard));
    total *= group.size();
  }

  std::vector<std::set<RationalVector>> per_embedding(ctx.num_embeddings());
  for (std::size_t s = 0; s < ctx.num_embeddings(); ++s)
    for (const auto& w : group) per_embedding[s].insert(w.dot_act(rs, weight.components[s]));

  std::set<WeightL> out{WeightL{}};
  for (const auto& orbit : per_embedding) {
    std::set<WeightL> next;
    for (const auto& prefix : out) {
      for (const auto& component : orbit) {
        WeightL w = prefix;
        w.components.push_back(component);
        next.insert(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace linkage_kit
