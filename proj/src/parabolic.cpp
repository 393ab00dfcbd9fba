#include "linkage_kit/parabolic.hpp"

#include <numeric>

#include "linkage_kit/error.hpp"

namespace linkage_kit {

namespace {

void check_parabolic(const EmbeddingContext& ctx, const ParabolicSubset& p) {
  if (p.dim() != ctx.base().dim())
    throw Error(ErrorKind::ContextMismatch, "parabolic subset belongs to a different root system");
}

}  // namespace

ParabolicSubset::ParabolicSubset(const RootSystem& rs, std::set<std::size_t> simple_indices)
    : indices_(std::move(simple_indices)) {
  RationalMatrix rows;
  for (const auto i : indices_) {
    if (i >= rs.rank())
      throw Error(ErrorKind::IndexOutOfRange, "simple root index " + std::to_string(i + 1) +
                                                  " out of range for rank " + std::to_string(rs.rank()));
    rows.push_back(rs.root_weight(i));
  }
  levi_span_ = row_echelon(std::move(rows), rs.dim());
}

ParabolicSubset ParabolicSubset::full(const RootSystem& rs) {
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < rs.rank(); ++i) all.insert(i);
  return {rs, std::move(all)};
}

std::strong_ordering CentralKey::operator<=>(const CentralKey& other) const {
  if (const auto c = smooth_tag <=> other.smooth_tag; c != 0) return c;
  if (const auto c = pi_tag <=> other.pi_tag; c != 0) return c;
  return WeightL{reduced} <=> WeightL{other.reduced};
}

std::string CentralKey::to_string() const {
  return smooth_tag + "|" + pi_tag + "|" + format_weight(WeightL{reduced});
}

bool in_lambda_p_plus(const EmbeddingContext& ctx, const WeightL& weight, const ParabolicSubset& p) {
  ctx.check(weight);
  check_parabolic(ctx, p);
  for (std::size_t s = 0; s < ctx.num_embeddings(); ++s) {
    for (const auto i : p.indices()) {
      const Rational shifted = weight.components[s][i] + 1;
      if (!is_integer(shifted) || shifted <= 0) return false;
    }
  }
  return true;
}

bool equal_on_center(const EmbeddingContext& ctx, const WeightL& lambda, const WeightL& mu,
                     const ParabolicSubset& p) {
  ctx.check(lambda);
  ctx.check(mu);
  check_parabolic(ctx, p);
  for (std::size_t s = 0; s < ctx.num_embeddings(); ++s) {
    RationalVector diff = lambda.components[s];
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu.components[s][i];
    if (!in_span(p.levi_span(), diff)) return false;
  }
  return true;
}

CentralKey central_class_key(const EmbeddingContext& ctx, const LocAnChar& chi, const ParabolicSubset& p,
                             const std::string& pi_tag) {
  ctx.check(chi.algebraic);
  check_parabolic(ctx, p);
  CentralKey key{chi.smooth_tag, pi_tag, {}};
  for (const auto& component : chi.algebraic.components)
    key.reduced.push_back(reduce_modulo(p.levi_span(), component));
  return key;
}

}  // namespace linkage_kit
