#include "linkage_kit/rational.hpp"

#include <algorithm>
#include <cctype>

#include "linkage_kit/error.hpp"

namespace linkage_kit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCartan: return "InvalidCartan";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotParabolicDominant: return "NotParabolicDominant";
    case ErrorKind::OrbitGuardExceeded: return "OrbitGuardExceeded";
    case ErrorKind::InvalidRational: return "InvalidRational";
    case ErrorKind::InvalidJob: return "InvalidJob";
  }
  return "Unknown";
}

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  auto fail = [&](const char* why) {
    throw Error(ErrorKind::InvalidRational,
                "invalid rational \"" + std::string(text) + "\": " + why);
  };

  std::string_view num = s;
  std::string_view den = "1";
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits)) fail("numerator must be an integer");
  if (!is_digits(den)) fail("denominator must be a positive integer");

  mpz_class p(std::string(digits), 10);
  if (num.front() == '-') p = -p;
  const mpz_class q(std::string(den), 10);
  if (q == 0) fail("zero denominator");

  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::strong_ordering compare(const RationalVector& lhs, const RationalVector& rhs) {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(lhs[i], rhs[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return lhs.size() <=> rhs.size();
}

std::string format_vector(const RationalVector& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_rational(values[i]);
  }
  out += ')';
  return out;
}

}  // namespace linkage_kit
