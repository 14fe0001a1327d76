#include "kmk/rational.hpp"

#include <stdexcept>

namespace kmk {

BigRational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& r) { return r.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

BigRational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  const auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') {
      s.remove_prefix(1);
    }
    if (s.empty()) {
      return false;
    }
    for (char ch : s) {
      if (ch < '0' || ch > '9') {
        return false;
      }
    }
    return true;
  };

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_int(num, true)) {
    throw bad();
  }
  BigInt p(std::string(num), 10);
  if (slash == std::string_view::npos) {
    return BigRational(p);
  }
  const std::string_view den = text.substr(slash + 1);
  if (!valid_int(den, false)) {
    throw bad();
  }
  BigInt q(std::string(den), 10);
  if (q == 0) {
    throw bad();
  }
  return make_rational(p, q);
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace kmk
