#include "flatinc/scalar.hpp"

#include <cctype>

namespace flatinc {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// No leading zeros except for "0" itself, so every rational has exactly one
// accepted spelling.
bool is_canonical_digits(std::string_view s) {
  return is_digits(s) && (s.size() == 1 || s.front() != '0');
}

}  // namespace

std::optional<Scalar> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  if (!is_canonical_digits(num_text)) return std::nullopt;
  BigInt num(std::string(num_text), 10);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_text = text.substr(slash + 1);
    if (!is_canonical_digits(den_text)) return std::nullopt;
    den = BigInt(std::string(den_text), 10);
    if (den == 0 || den == 1) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
  }
  if (negative && num == 0) return std::nullopt;
  if (negative) num = -num;
  return Scalar(num, den);
}

std::string format_rational(const Scalar& value) { return value.get_str(); }

std::optional<Scalar> exact_sqrt(const Scalar& value) {
  if (value < 0) return std::nullopt;
  const BigInt& num = value.get_num();
  const BigInt& den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Scalar(rn, rd);
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace flatinc
