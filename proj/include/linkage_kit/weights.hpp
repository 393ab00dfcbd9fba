#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "linkage_kit/rational.hpp"
#include "linkage_kit/root_system.hpp"

namespace linkage_kit {

// An element of t_L^*: one weight vector per embedding of the base field.
struct WeightL {
  std::vector<RationalVector> components;

  bool operator==(const WeightL&) const = default;
  std::strong_ordering operator<=>(const WeightL& other) const;
};

// A locally analytic character of the torus up to what linkage sees: its
// derivative (the algebraic part) and an opaque label for the smooth part.
struct LocAnChar {
  WeightL algebraic;
  std::string smooth_tag;

  bool operator==(const LocAnChar&) const = default;
  std::strong_ordering operator<=>(const LocAnChar& other) const;
};

// A root of the split torus over L: a base positive root in one embedding.
struct GlobalRoot {
  std::size_t sigma = 0;
  std::size_t root_index = 0;

  bool operator==(const GlobalRoot&) const = default;
  auto operator<=>(const GlobalRoot&) const = default;
};

enum class Convention {
  paper,    // <dchi, beta^vee> in Z_{>=0}
  shifted,  // <dchi + rho0, beta^vee> in Z_{>0}
};

std::string to_string(Convention c);
Convention parse_convention(std::string_view text);

// |S| copies of one base root system.
class EmbeddingContext {
 public:
  EmbeddingContext(std::shared_ptr<const RootSystem> base, std::size_t num_embeddings);

  const RootSystem& base() const { return *base_; }
  std::shared_ptr<const RootSystem> base_ptr() const { return base_; }
  std::size_t num_embeddings() const { return num_embeddings_; }

  // All global roots, embedding-major.
  std::vector<GlobalRoot> global_roots() const;

  WeightL zero() const;
  WeightL rho0() const;
  WeightL uniform(const RationalVector& component) const;

  // Throws Error{ContextMismatch} unless the weight has |S| components of the
  // base dimension.
  void check(const WeightL& weight) const;
  void check(const GlobalRoot& root) const;

  Rational global_pairing(const WeightL& weight, const GlobalRoot& root) const;

  // s_beta . lambda in embedding sigma; other components untouched.
  WeightL dot_reflect(const WeightL& weight, const GlobalRoot& root) const;

  // w . lambda for w = s_{r_1} ... s_{r_k}; the rightmost reflection acts first.
  WeightL dot_action(const WeightL& weight, const std::vector<GlobalRoot>& word) const;

  bool is_alpha_integral(const LocAnChar& chi, const GlobalRoot& root) const;
  bool is_alpha_dominant(const LocAnChar& chi, const GlobalRoot& root, Convention convention) const;

  // s_beta . chi = chi * eta with eta the algebraic character
  // beta^{-<dchi + rho0, beta^vee>}; the smooth tag is unchanged. Throws
  // Error{NotIntegral} when the pairing is not an integer.
  LocAnChar dot_reflect_char(const LocAnChar& chi, const GlobalRoot& root) const;

  bool operator==(const EmbeddingContext& other) const;

 private:
  std::shared_ptr<const RootSystem> base_;
  std::size_t num_embeddings_;
};

std::string format_weight(const WeightL& weight);

}  // namespace linkage_kit
