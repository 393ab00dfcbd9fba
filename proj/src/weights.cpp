#include "linkage_kit/weights.hpp"

#include "linkage_kit/error.hpp"

namespace linkage_kit {

std::strong_ordering WeightL::operator<=>(const WeightL& other) const {
  const std::size_t n = std::min(components.size(), other.components.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const auto c = compare(components[i], other.components[i]); c != 0) return c;
  }
  return components.size() <=> other.components.size();
}

std::strong_ordering LocAnChar::operator<=>(const LocAnChar& other) const {
  if (const auto c = algebraic <=> other.algebraic; c != 0) return c;
  return smooth_tag <=> other.smooth_tag;
}

std::string to_string(Convention c) { return c == Convention::paper ? "paper" : "shifted"; }

Convention parse_convention(std::string_view text) {
  if (text == "paper") return Convention::paper;
  if (text == "shifted") return Convention::shifted;
  throw Error(ErrorKind::InvalidJob,
              "convention must be \"paper\" or \"shifted\", got \"" + std::string(text) + "\"");
}

EmbeddingContext::EmbeddingContext(std::shared_ptr<const RootSystem> base, std::size_t num_embeddings)
    : base_(std::move(base)), num_embeddings_(num_embeddings) {
  if (!base_) throw Error(ErrorKind::ContextMismatch, "embedding context without a root system");
  if (num_embeddings_ == 0) throw Error(ErrorKind::ContextMismatch, "at least one embedding is required");
}

bool EmbeddingContext::operator==(const EmbeddingContext& other) const {
  return num_embeddings_ == other.num_embeddings_ &&
         (base_ == other.base_ || (base_->cartan() == other.base_->cartan() &&
                                   base_->central_dim() == other.base_->central_dim()));
}

std::vector<GlobalRoot> EmbeddingContext::global_roots() const {
  std::vector<GlobalRoot> roots;
  roots.reserve(num_embeddings_ * base_->num_positive_roots());
  for (std::size_t s = 0; s < num_embeddings_; ++s)
    for (std::size_t k = 0; k < base_->num_positive_roots(); ++k) roots.push_back({s, k});
  return roots;
}

WeightL EmbeddingContext::uniform(const RationalVector& component) const {
  return WeightL{std::vector<RationalVector>(num_embeddings_, component)};
}

WeightL EmbeddingContext::zero() const { return uniform(RationalVector(base_->dim(), 0)); }

WeightL EmbeddingContext::rho0() const { return uniform(base_->rho0()); }

void EmbeddingContext::check(const WeightL& weight) const {
  if (weight.components.size() != num_embeddings_)
    throw Error(ErrorKind::ContextMismatch,
                "weight has " + std::to_string(weight.components.size()) + " embedding components, expected " +
                    std::to_string(num_embeddings_));
  for (const auto& c : weight.components) {
    if (c.size() != base_->dim())
      throw Error(ErrorKind::ContextMismatch, "weight component has " + std::to_string(c.size()) +
                                                  " coordinates, expected " + std::to_string(base_->dim()));
  }
}

void EmbeddingContext::check(const GlobalRoot& root) const {
  if (root.sigma >= num_embeddings_)
    throw Error(ErrorKind::ContextMismatch, "embedding index " + std::to_string(root.sigma) + " out of range");
  if (root.root_index >= base_->num_positive_roots())
    throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(root.root_index) + " out of range");
}

Rational EmbeddingContext::global_pairing(const WeightL& weight, const GlobalRoot& root) const {
  check(weight);
  check(root);
  return base_->pairing(weight.components[root.sigma], root.root_index);
}

WeightL EmbeddingContext::dot_reflect(const WeightL& weight, const GlobalRoot& root) const {
  const Rational exponent = global_pairing(weight, root) + base_->rho_pairing(root.root_index);
  WeightL out = weight;
  if (exponent == 0) return out;
  auto& component = out.components[root.sigma];
  const auto& beta = base_->root_weight(root.root_index);
  for (std::size_t i = 0; i < base_->rank(); ++i) component[i] -= exponent * beta[i];
  return out;
}

WeightL EmbeddingContext::dot_action(const WeightL& weight, const std::vector<GlobalRoot>& word) const {
  check(weight);
  WeightL out = weight;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = dot_reflect(out, *it);
  return out;
}

bool EmbeddingContext::is_alpha_integral(const LocAnChar& chi, const GlobalRoot& root) const {
  return is_integer(global_pairing(chi.algebraic, root));
}

bool EmbeddingContext::is_alpha_dominant(const LocAnChar& chi, const GlobalRoot& root,
                                         Convention convention) const {
  const Rational p = global_pairing(chi.algebraic, root);
  if (!is_integer(p)) return false;
  if (convention == Convention::paper) return p >= 0;
  return p + base_->rho_pairing(root.root_index) > 0;
}

LocAnChar EmbeddingContext::dot_reflect_char(const LocAnChar& chi, const GlobalRoot& root) const {
  if (!is_alpha_integral(chi, root))
    throw Error(ErrorKind::NotIntegral, "character is not integral at root (sigma=" + std::to_string(root.sigma) +
                                            ", index=" + std::to_string(root.root_index) + ")");
  return LocAnChar{dot_reflect(chi.algebraic, root), chi.smooth_tag};
}

std::string format_weight(const WeightL& weight) {
  std::string out;
  for (std::size_t s = 0; s < weight.components.size(); ++s) {
    if (s > 0) out += ';';
    out += format_vector(weight.components[s]);
  }
  return out;
}

}  // namespace linkage_kit
