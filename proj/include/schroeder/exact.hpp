#pragma once

// Exact scalar types used throughout the library. Counts are ExactInt;
// intermediate sums carrying 1/j, k!/n!, 1/(an+1) factors live in
// ExactRational until integrality is asserted. A division that leaves a
// remainder where an integer is promised is a bug, never a rounding case,
// so require_integer() throws instead of truncating.

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schroeder {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

class integrality_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::atomic<std::uint64_t>& integrality_check_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

inline std::atomic<std::uint64_t>& integrality_failure_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

}  // namespace detail

/// Number of integrality assertions performed so far (process-wide).
inline std::uint64_t integrality_checks() {
  return detail::integrality_check_counter().load();
}

/// Number of integrality assertions that failed (each one also threw).
inline std::uint64_t integrality_failures() {
  return detail::integrality_failure_counter().load();
}

/// num/den in canonical form: den > 0, gcd(num, den) = 1.
inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

/// Asserts that q is an integer and returns it. `what` names the operation
/// for the error message.
inline ExactInt require_integer(const ExactRational& q, const std::string& what) {
  detail::integrality_check_counter().fetch_add(1, std::memory_order_relaxed);
  if (q.get_den() != 1) {
    detail::integrality_failure_counter().fetch_add(1, std::memory_order_relaxed);
    throw integrality_error(what + ": non-integral value " + q.get_str());
  }
  return q.get_num();
}

inline ExactInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// C(n, k), zero when k < 0 or k > n.
inline ExactInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline ExactInt pow2(int e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

}  // namespace schroeder
