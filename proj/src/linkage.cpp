#include "linkage_kit/linkage.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "linkage_kit/error.hpp"

namespace linkage_kit {

bool LinkageResult::contains(const LocAnChar& chi) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const LinkageMember& m) { return m.character == chi; });
}

std::set<WeightL> LinkageResult::algebraic_set() const {
  std::set<WeightL> out;
  for (const auto& m : members) out.insert(m.character.algebraic);
  return out;
}

std::vector<std::pair<GlobalRoot, LocAnChar>> up_link_candidates(const EmbeddingContext& ctx, const LocAnChar& chi,
                                                                 Convention convention) {
  ctx.check(chi.algebraic);
  std::vector<std::pair<GlobalRoot, LocAnChar>> out;
  for (const auto& root : ctx.global_roots()) {
    if (!ctx.is_alpha_dominant(chi, root, convention)) continue;
    LocAnChar next = ctx.dot_reflect_char(chi, root);
    if (next == chi) continue;
    out.emplace_back(root, std::move(next));
  }
  return out;
}

namespace {

struct Overflow {};

// Exact coordinate arithmetic for the search: rationals in general, checked
// 64-bit integers when every coordinate is integral.
struct RationalOps {
  using Coord = Rational;
  static Coord from(const Rational& q) { return q; }
  static Rational to_rational(const Coord& c) { return c; }
  static bool integral(const Coord& c) { return c.get_den() == 1; }
  static void add_product(Coord& acc, int coeff, const Coord& x) { acc += coeff * x; }
  static void sub_product(Coord& acc, const Coord& e, int coeff) { acc -= e * coeff; }
};

struct IntegerOps {
  using Coord = long long;
  static Coord from(const Rational& q) {
    if (!q.get_num().fits_slong_p()) throw Overflow{};
    return q.get_num().get_si();
  }
  static Rational to_rational(Coord c) { return Rational(static_cast<long>(c)); }
  static bool integral(Coord) { return true; }
  static void add_product(Coord& acc, int coeff, Coord x) {
    Coord term;
    if (__builtin_mul_overflow(x, static_cast<Coord>(coeff), &term) || __builtin_add_overflow(acc, term, &acc))
      throw Overflow{};
  }
  static void sub_product(Coord& acc, Coord e, int coeff) {
    Coord term;
    if (__builtin_mul_overflow(e, static_cast<Coord>(coeff), &term) || __builtin_sub_overflow(acc, term, &acc))
      throw Overflow{};
  }
};

bool all_integral(const WeightL& weight) {
  for (const auto& c : weight.components)
    for (const auto& x : c)
      if (x.get_den() != 1) return false;
  return true;
}

// Breadth-first closure over single dominant links. Weights are flattened to
// one coordinate array; roots are visited in global_roots() order so both
// arithmetic back ends discover members, and hence witnesses, identically.
template <class Ops>
LinkageResult linkage_bfs(const EmbeddingContext& ctx, const LocAnChar& chi, Convention convention,
                          const LinkageOptions& options) {
  using Coord = typename Ops::Coord;
  using Flat = std::vector<Coord>;
  const RootSystem& rs = ctx.base();
  const std::size_t dim = rs.dim();
  const std::size_t embeddings = ctx.num_embeddings();
  const auto& coroots = rs.coroot_coeffs();

  std::vector<IntVector> betas;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    IntVector beta;
    for (std::size_t i = 0; i < rs.rank(); ++i) beta.push_back(static_cast<int>(rs.root_weight(k)[i].get_num().get_si()));
    betas.push_back(std::move(beta));
  }

  struct Node {
    Flat weight;
    std::size_t parent;
    GlobalRoot via;
  };
  constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  Flat origin;
  origin.reserve(embeddings * dim);
  for (const auto& c : chi.algebraic.components)
    for (const auto& x : c) origin.push_back(Ops::from(x));

  std::vector<Node> nodes{{origin, kNoParent, {}}};
  std::map<Flat, std::size_t> visited{{origin, 0}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t s = 0; s < embeddings; ++s) {
      const std::size_t offset = s * dim;
      for (std::size_t k = 0; k < coroots.size(); ++k) {
        const Flat& current = nodes[head].weight;
        Coord p = 0;
        for (std::size_t i = 0; i < rs.rank(); ++i)
          if (coroots[k][i] != 0) Ops::add_product(p, coroots[k][i], current[offset + i]);
        if (!Ops::integral(p)) continue;
        const int rho = rs.rho_pairing(k);
        if (convention == Convention::paper ? p < 0 : p + rho <= 0) continue;
        Coord exponent = p;
        Ops::add_product(exponent, 1, Coord(rho));
        if (exponent == 0) continue;
        Flat next = current;
        for (std::size_t i = 0; i < rs.rank(); ++i)
          if (betas[k][i] != 0) Ops::sub_product(next[offset + i], exponent, betas[k][i]);
        if (!visited.try_emplace(next, nodes.size()).second) continue;
        nodes.push_back({std::move(next), head, GlobalRoot{s, k}});
        if (nodes.size() > options.orbit_guard)
          throw Error(ErrorKind::OrbitGuardExceeded,
                      "linkage search visited more than " + std::to_string(options.orbit_guard) + " characters");
      }
    }
  }

  auto character = [&](const Flat& flat) {
    LocAnChar c{WeightL{std::vector<RationalVector>(embeddings, RationalVector(dim))}, chi.smooth_tag};
    for (std::size_t s = 0; s < embeddings; ++s)
      for (std::size_t i = 0; i < dim; ++i) c.algebraic.components[s][i] = Ops::to_rational(flat[s * dim + i]);
    return c;
  };
  LinkageResult result{chi, {}, convention, false};
  result.members.reserve(nodes.size());
  if (!options.record_witnesses) {
    for (const auto& [weight, index] : visited) result.members.push_back({character(weight), {}});
    return result;
  }

  std::vector<LocAnChar> characters;
  characters.reserve(nodes.size());
  for (const auto& node : nodes) characters.push_back(character(node.weight));
  for (const auto& [weight, index] : visited) {
    LinkageChain chain;
    for (std::size_t i = index; nodes[i].parent != kNoParent; i = nodes[i].parent)
      chain.steps.push_back({nodes[i].via, characters[i]});
    std::reverse(chain.steps.begin(), chain.steps.end());
    result.members.push_back({characters[index], std::move(chain)});
  }
  return result;
}

}  // namespace

LinkageResult strongly_linked_set(const EmbeddingContext& ctx, const LocAnChar& chi, Convention convention,
                                  const LinkageOptions& options) {
  ctx.check(chi.algebraic);
  if (all_integral(chi.algebraic)) {
    try {
      return linkage_bfs<IntegerOps>(ctx, chi, convention, options);
    } catch (const Overflow&) {
    }
  }
  return linkage_bfs<RationalOps>(ctx, chi, convention, options);
}

LinkageResult verma_factors_borel(const EmbeddingContext& ctx, const LocAnChar& chi, Convention convention,
                                  const LinkageOptions& options) {
  return strongly_linked_set(ctx, chi, convention, options);
}

LinkageResult verma_factor_candidates(const EmbeddingContext& ctx, const LocAnChar& chi, const ParabolicSubset& p,
                                      Convention convention, const LinkageOptions& options) {
  if (!in_lambda_p_plus(ctx, chi.algebraic, p))
    throw Error(ErrorKind::NotParabolicDominant,
                "highest weight " + format_weight(chi.algebraic) + " is not in Lambda_p^+");
  LinkageResult result = strongly_linked_set(ctx, chi, convention, options);
  std::erase_if(result.members,
                [&](const LinkageMember& m) { return !in_lambda_p_plus(ctx, m.character.algebraic, p); });
  result.upper_bound = !p.is_borel();
  return result;
}

std::vector<Obstruction> noncritical_obstruction_set(const EmbeddingContext& ctx, const LocAnChar& chi,
                                                     const ParabolicSubset& p, const std::string& pi_tag,
                                                     Convention convention, const LinkageOptions& options) {
  LinkageResult candidates = verma_factor_candidates(ctx, chi, p, convention, options);
  std::vector<Obstruction> out;
  for (auto& m : candidates.members) {
    if (m.character == chi) continue;
    CentralKey key = central_class_key(ctx, m.character, p, pi_tag);
    out.push_back({std::move(m.character), std::move(key), std::move(m.witness)});
  }
  std::sort(out.begin(), out.end(), [](const Obstruction& a, const Obstruction& b) {
    if (const auto c = a.key <=> b.key; c != 0) return c < 0;
    return a.character.algebraic < b.character.algebraic;
  });
  return out;
}

bool replay_chain(const EmbeddingContext& ctx, const LocAnChar& origin, const LinkageChain& chain,
                  Convention convention, const LocAnChar& expected_end) {
  LocAnChar current = origin;
  for (const auto& step : chain.steps) {
    if (!ctx.is_alpha_dominant(current, step.root, convention)) return false;
    LocAnChar next = ctx.dot_reflect_char(current, step.root);
    if (next != step.result || next == current) return false;
    current = std::move(next);
  }
  return current == expected_end;
}

}  // namespace linkage_kit
