#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "linkage_kit/linalg.hpp"
#include "linkage_kit/weights.hpp"

namespace linkage_kit {

// A standard parabolic given by a subset I of the simple roots (0-based),
// applied identically in every embedding. I = {} is the Borel, I = all simple
// roots is the whole group.
class ParabolicSubset {
 public:
  ParabolicSubset(const RootSystem& rs, std::set<std::size_t> simple_indices);

  static ParabolicSubset borel(const RootSystem& rs) { return {rs, {}}; }
  static ParabolicSubset full(const RootSystem& rs);

  const std::set<std::size_t>& indices() const { return indices_; }
  bool is_borel() const { return indices_.empty(); }
  std::size_t dim() const { return levi_span_.columns; }

  // Echelon basis of span{alpha_i : i in I} in fundamental-weight coordinates
  // (central block included, always zero there).
  const RowEchelon& levi_span() const { return levi_span_; }

 private:
  std::set<std::size_t> indices_;
  RowEchelon levi_span_;
};

// Restriction of a character to the centre of the Levi, in canonical form:
// per embedding, the algebraic part reduced modulo the Levi roots.
struct CentralKey {
  std::string smooth_tag;
  std::string pi_tag;
  std::vector<RationalVector> reduced;

  bool operator==(const CentralKey&) const = default;
  std::strong_ordering operator<=>(const CentralKey& other) const;

  std::string to_string() const;
};

// <lambda[sigma] + rho0, alpha_i^vee> in Z_{>0} for every sigma and i in I.
bool in_lambda_p_plus(const EmbeddingContext& ctx, const WeightL& weight, const ParabolicSubset& p);

// lambda and mu agree on Z(L_P): per embedding the difference lies in the
// span of the Levi roots (which forces the central blocks to agree).
bool equal_on_center(const EmbeddingContext& ctx, const WeightL& lambda, const WeightL& mu,
                     const ParabolicSubset& p);

CentralKey central_class_key(const EmbeddingContext& ctx, const LocAnChar& chi, const ParabolicSubset& p,
                             const std::string& pi_tag);

}  // namespace linkage_kit
