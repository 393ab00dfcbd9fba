#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linkage_kit/rational.hpp"

namespace linkage_kit {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;

// Source of a root system: a named type such as "A_2", "B_3xA_1" or
// "A_2xT_1" (T_k adds a k-dimensional central torus), or an explicit Cartan
// matrix. An explicit matrix may carry a declared rank that must agree with
// its size.
struct CartanSpec {
  std::variant<std::string, IntMatrix> kind;
  std::optional<std::size_t> rank;

  static CartanSpec named(std::string name) { return {std::move(name), std::nullopt}; }
  static CartanSpec matrix(IntMatrix m, std::optional<std::size_t> rank = std::nullopt) {
    return {std::move(m), rank};
  }

  bool operator==(const CartanSpec&) const = default;
};

// Canonical spelling of a named type: factors "X_n" joined by "x".
// Throws Error{InvalidCartan} on unknown or out-of-range factors.
std::string canonical_type_name(std::string_view name);

class WeylElement;

// Split root-system data for one copy of the group. Weights are vectors in
// fundamental-weight coordinates (coordinate i is the pairing with the i-th
// simple coroot) followed by central_dim() coordinates that no reflection
// touches. Roots and coroots are stored as integer coefficient vectors over
// the simple roots / simple coroots. Positive roots are ordered by height, so
// index i < rank() is the i-th simple root.
class RootSystem {
 public:
  static RootSystem build(const CartanSpec& spec);

  const std::string& type_name() const { return type_name_; }
  std::size_t rank() const { return cartan_.size(); }
  std::size_t central_dim() const { return central_dim_; }
  std::size_t dim() const { return rank() + central_dim_; }

  // a_ij = <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan() const { return cartan_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  const std::vector<IntVector>& positive_roots() const { return roots_; }
  const std::vector<IntVector>& coroot_coeffs() const { return coroots_; }

  // The root in fundamental-weight coordinates (central block zero).
  const RationalVector& root_weight(std::size_t root_index) const;

  // (1,...,1 | 0,...,0).
  const RationalVector& rho0() const { return rho0_; }

  // <weight, beta^vee> for the positive root at root_index.
  Rational pairing(const RationalVector& weight, std::size_t root_index) const;

  // <rho0, beta^vee>, the height of the coroot.
  int rho_pairing(std::size_t root_index) const;

  // Linear reflection s_beta(weight) = weight - <weight, beta^vee> beta.
  RationalVector reflect(const RationalVector& weight, std::size_t root_index) const;

  // Expresses the semisimple part of a weight over the simple roots.
  RationalVector to_root_coordinates(const RationalVector& weight) const;

  // Image of a positive root under a simple reflection, as a signed index:
  // +(k+1) for beta_k, -(k+1) for -beta_k.
  int simple_reflection_image(std::size_t simple, std::size_t root_index) const;

  std::optional<std::size_t> find_root(const IntVector& coeffs) const;

 private:
  void check_weight(const RationalVector& weight) const;
  void check_root(std::size_t root_index) const;

  std::string type_name_;
  IntMatrix cartan_;
  std::size_t central_dim_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<RationalVector> root_weights_;
  std::vector<int> rho_pairings_;
  std::vector<std::vector<int>> simple_images_;
  RationalVector rho0_;
};

RootSystem build_root_system(const CartanSpec& spec);

// An element of the Weyl group. It remembers the word it was built from, but
// identity is decided by the signed permutation it induces on the positive
// roots.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement from_word(const RootSystem& rs, const std::vector<std::size_t>& word);

  const std::vector<std::size_t>& word() const { return word_; }
  // image()[k] is the signed index of w(beta_k).
  const std::vector<int>& image() const { return image_; }

  // Positive roots moved by w; empty exactly for the identity.
  std::vector<std::size_t> moved_roots() const;
  // Number of positive roots sent to negative roots.
  std::size_t length() const;

  WeylElement times_simple(const RootSystem& rs, std::size_t simple) const;

  // Linear action, rightmost letter first.
  RationalVector act(const RootSystem& rs, RationalVector weight) const;
  // w(weight + rho0) - rho0.
  RationalVector dot_act(const RootSystem& rs, const RationalVector& weight) const;

  bool operator==(const WeylElement& other) const { return image_ == other.image_; }

 private:
  std::vector<std::size_t> word_;
  std::vector<int> image_;
};

// Breadth-first enumeration of W by right multiplication with simple
// reflections; words are reduced. Throws Error{GroupTooLarge} once more than
// size_guard elements are found.
std::vector<WeylElement> weyl_generate(const RootSystem& rs, std::size_t size_guard);

}  // namespace linkage_kit
