#include "linkage_kit/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "linkage_kit/error.hpp"
#include "linkage_kit/linalg.hpp"

namespace linkage_kit {

namespace {

struct Factor {
  char letter;
  std::size_t n;
};

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::InvalidCartan, why); }

Factor parse_factor(std::string_view token) {
  auto trimmed = token;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.size() < 2) invalid("malformed type factor \"" + std::string(token) + "\"");

  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(trimmed.front())));
  std::string_view digits = trimmed.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
    invalid("malformed type factor \"" + std::string(token) + "\"");
  const std::size_t n = std::stoul(std::string(digits));

  bool ok = false;
  switch (letter) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    case 'T': ok = n >= 1; break;
    default: break;
  }
  if (!ok) invalid("unknown or out-of-range type factor \"" + std::string(token) + "\"");
  return {letter, n};
}

std::vector<Factor> parse_type(std::string_view name) {
  std::vector<Factor> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x' || name[i] == 'X' || name[i] == '*') {
      factors.push_back(parse_factor(name.substr(start, i - start)));
      start = i + 1;
    }
  }
  return factors;
}

void link(IntMatrix& a, std::size_t i, std::size_t j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

// Bourbaki numbering; a_ij = <alpha_j, alpha_i^vee>.
IntMatrix factor_cartan(const Factor& f) {
  const std::size_t n = f.n;
  IntMatrix a(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  switch (f.letter) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default:
      break;
  }
  return a;
}

// Finite type test: the matrix must be symmetrizable, D*A, with D positive
// diagonal, must be positive definite (all leading principal minors > 0).
void check_finite_type(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::RankMismatch, "Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) invalid("Cartan matrix diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) invalid("Cartan matrix off-diagonal entries must be non-positive");
      if ((a[i][j] == 0) != (a[j][i] == 0)) invalid("Cartan matrix zero pattern is not symmetric");
    }
  }

  std::vector<Rational> d(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        // d_i a_ij = d_j a_ji
        const Rational dj = d[i] * a[i][j] / Rational(a[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          invalid("Cartan matrix is not symmetrizable, hence not of finite type");
        }
      }
    }
  }

  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix minor(k, RationalVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = d[i] * a[i][j];
    if (determinant(std::move(minor)) <= 0) invalid("Cartan matrix is not of finite type");
  }
}

int dot(const IntVector& coeffs, const IntMatrix& a, std::size_t row) {
  int s = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) s += a[row][j] * coeffs[j];
  return s;
}

int dot_transposed(const IntVector& coeffs, const IntMatrix& a, std::size_t col) {
  int s = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) s += a[j][col] * coeffs[j];
  return s;
}

}  // namespace

std::string canonical_type_name(std::string_view name) {
  std::string out;
  for (const auto& f : parse_type(name)) {
    if (!out.empty()) out += 'x';
    out += f.letter;
    out += '_';
    out += std::to_string(f.n);
  }
  return out;
}

RootSystem RootSystem::build(const CartanSpec& spec) {
  RootSystem rs;
  if (const auto* name = std::get_if<std::string>(&spec.kind)) {
    const auto factors = parse_type(*name);
    rs.type_name_ = canonical_type_name(*name);
    std::size_t total = 0;
    for (const auto& f : factors)
      if (f.letter != 'T') total += f.n;
    rs.cartan_.assign(total, IntVector(total, 0));
    std::size_t offset = 0;
    for (const auto& f : factors) {
      if (f.letter == 'T') {
        rs.central_dim_ += f.n;
        continue;
      }
      const IntMatrix block = factor_cartan(f);
      for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = 0; j < f.n; ++j) rs.cartan_[offset + i][offset + j] = block[i][j];
      offset += f.n;
    }
    if (spec.rank && *spec.rank != total)
      throw Error(ErrorKind::RankMismatch, "declared rank " + std::to_string(*spec.rank) +
                                               " does not match type " + rs.type_name_);
  } else {
    rs.type_name_ = "custom";
    rs.cartan_ = std::get<IntMatrix>(spec.kind);
    if (rs.cartan_.empty()) throw Error(ErrorKind::RankMismatch, "Cartan matrix is empty");
    if (spec.rank && *spec.rank != rs.cartan_.size())
      throw Error(ErrorKind::RankMismatch, "declared rank " + std::to_string(*spec.rank) +
                                               " does not match matrix size " +
                                               std::to_string(rs.cartan_.size()));
  }
  if (rs.dim() == 0) throw Error(ErrorKind::InvalidCartan, "root system has dimension zero");
  check_finite_type(rs.cartan_);

  const std::size_t n = rs.rank();
  const IntMatrix& a = rs.cartan_;

  // Reflection closure from the simple roots, carrying coroots along.
  std::map<IntVector, IntVector> found;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector beta = queue.front();
    queue.pop_front();
    const IntVector coroot = found.at(beta);
    for (std::size_t i = 0; i < n; ++i) {
      const int p = dot(beta, a, i);
      if (p == 0) continue;
      IntVector image = beta;
      image[i] -= p;
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; })) continue;
      if (found.contains(image)) continue;
      IntVector image_coroot = coroot;
      image_coroot[i] -= dot_transposed(coroot, a, i);
      found.emplace(image, image_coroot);
      queue.push_back(image);
    }
  }

  std::vector<std::pair<IntVector, IntVector>> ordered(found.begin(), found.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.first.begin(), x.first.end(), 0);
    const int hy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (hx != hy) return hx < hy;
    return x.first > y.first;
  });
  for (auto& [root, coroot] : ordered) {
    RationalVector w(rs.dim(), 0);
    for (std::size_t i = 0; i < n; ++i) w[i] = dot(root, a, i);
    rs.root_weights_.push_back(std::move(w));
    rs.rho_pairings_.push_back(std::accumulate(coroot.begin(), coroot.end(), 0));
    rs.roots_.push_back(std::move(root));
    rs.coroots_.push_back(std::move(coroot));
  }

  rs.rho0_.assign(rs.dim(), 0);
  for (std::size_t i = 0; i < n; ++i) rs.rho0_[i] = 1;

  rs.simple_images_.assign(n, std::vector<int>(rs.roots_.size(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
      if (k == i) {
        rs.simple_images_[i][k] = -static_cast<int>(k + 1);
        continue;
      }
      IntVector image = rs.roots_[k];
      image[i] -= dot(image, a, i);
      const auto m = rs.find_root(image);
      if (!m) invalid("reflection closure is not closed; matrix is not of finite type");
      rs.simple_images_[i][k] = static_cast<int>(*m + 1);
    }
  }
  return rs;
}

RootSystem build_root_system(const CartanSpec& spec) { return RootSystem::build(spec); }

std::optional<std::size_t> RootSystem::find_root(const IntVector& coeffs) const {
  const int h = std::accumulate(coeffs.begin(), coeffs.end(), 0);
  // roots_ is sorted by height; scan the matching band only.
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    const int hk = std::accumulate(roots_[k].begin(), roots_[k].end(), 0);
    if (hk > h) break;
    if (hk == h && roots_[k] == coeffs) return k;
  }
  return std::nullopt;
}

void RootSystem::check_weight(const RationalVector& weight) const {
  if (weight.size() != dim())
    throw Error(ErrorKind::ContextMismatch, "weight has " + std::to_string(weight.size()) +
                                                " coordinates, expected " + std::to_string(dim()));
}

void RootSystem::check_root(std::size_t root_index) const {
  if (root_index >= roots_.size())
    throw Error(ErrorKind::IndexOutOfRange, "root index " + std::to_string(root_index) +
                                                " out of range (" + std::to_string(roots_.size()) +
                                                " positive roots)");
}

const RationalVector& RootSystem::root_weight(std::size_t root_index) const {
  check_root(root_index);
  return root_weights_[root_index];
}

Rational RootSystem::pairing(const RationalVector& weight, std::size_t root_index) const {
  check_weight(weight);
  check_root(root_index);
  Rational s = 0;
  const auto& c = coroots_[root_index];
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s += c[i] * weight[i];
  return s;
}

int RootSystem::rho_pairing(std::size_t root_index) const {
  check_root(root_index);
  return rho_pairings_[root_index];
}

RationalVector RootSystem::reflect(const RationalVector& weight, std::size_t root_index) const {
  const Rational p = pairing(weight, root_index);
  RationalVector out = weight;
  if (p == 0) return out;
  const auto& beta = root_weights_[root_index];
  for (std::size_t i = 0; i < rank(); ++i) out[i] -= p * beta[i];
  return out;
}

RationalVector RootSystem::to_root_coordinates(const RationalVector& weight) const {
  check_weight(weight);
  const std::size_t n = rank();
  if (n == 0) return {};
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
  return solve(std::move(m), RationalVector(weight.begin(), weight.begin() + n));
}

int RootSystem::simple_reflection_image(std::size_t simple, std::size_t root_index) const {
  if (simple >= rank())
    throw Error(ErrorKind::IndexOutOfRange, "simple index " + std::to_string(simple) + " out of range");
  check_root(root_index);
  return simple_images_[simple][root_index];
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  w.image_.resize(rs.num_positive_roots());
  std::iota(w.image_.begin(), w.image_.end(), 1);
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<std::size_t>& word) {
  WeylElement w = identity(rs);
  for (const auto s : word) w = w.times_simple(rs, s);
  return w;
}

WeylElement WeylElement::times_simple(const RootSystem& rs, std::size_t simple) const {
  WeylElement out;
  out.word_ = word_;
  out.word_.push_back(simple);
  out.image_.resize(image_.size());
  // (w s)(beta_k) = w(s beta_k)
  for (std::size_t k = 0; k < image_.size(); ++k) {
    const int s = rs.simple_reflection_image(simple, k);
    const int m = std::abs(s) - 1;
    out.image_[k] = s > 0 ? image_[m] : -image_[m];
  }
  return out;
}

std::vector<std::size_t> WeylElement::moved_roots() const {
  std::vector<std::size_t> moved;
  for (std::size_t k = 0; k < image_.size(); ++k)
    if (image_[k] != static_cast<int>(k + 1)) moved.push_back(k);
  return moved;
}

std::size_t WeylElement::length() const {
  return static_cast<std::size_t>(std::count_if(image_.begin(), image_.end(), [](int v) { return v < 0; }));
}

RationalVector WeylElement::act(const RootSystem& rs, RationalVector weight) const {
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) weight = rs.reflect(weight, *it);
  return weight;
}

RationalVector WeylElement::dot_act(const RootSystem& rs, const RationalVector& weight) const {
  RationalVector shifted = weight;
  const auto& rho = rs.rho0();
  for (std::size_t i = 0; i < shifted.size() && i < rho.size(); ++i) shifted[i] += rho[i];
  shifted = act(rs, std::move(shifted));
  for (std::size_t i = 0; i < shifted.size() && i < rho.size(); ++i) shifted[i] -= rho[i];
  return shifted;
}

std::vector<WeylElement> weyl_generate(const RootSystem& rs, std::size_t size_guard) {
  std::vector<WeylElement> elements{WeylElement::identity(rs)};
  std::set<std::vector<int>> seen{elements.front().image()};
  if (elements.size() > size_guard)
    throw Error(ErrorKind::GroupTooLarge, "Weyl group exceeds size guard " + std::to_string(size_guard));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t s = 0; s < rs.rank(); ++s) {
      WeylElement next = elements[head].times_simple(rs, s);
      if (!seen.insert(next.image()).second) continue;
      elements.push_back(std::move(next));
      if (elements.size() > size_guard)
        throw Error(ErrorKind::GroupTooLarge,
                    "Weyl group exceeds size guard " + std::to_string(size_guard));
    }
  }
  return elements;
}

}  // namespace linkage_kit
