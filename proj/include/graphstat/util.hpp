#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphstat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Execution policy for kernels that exist in both a parallel and a serial
// reference form.  Both must produce bit-identical results.
enum class ExecPolicy { Serial, Parallel };

// Error raised for malformed user input (bad files, bad flags, bad graphs).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Error raised when an internal invariant fails.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

inline void check_input(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

// Exact binomial coefficient; zero for k < 0 or k > n.
inline Int binom(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline long long binom_ll(long long n, long long k) {
  Int b = binom(n, k);
  check_internal(b <= Int(std::numeric_limits<long long>::max()),
                 "binomial overflows long long");
  return static_cast<long long>(b);
}

// FNV-1a 64-bit hash of a byte string, rendered as fixed-width hex.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

// Deterministic RNG used wherever seeded randomness is called for.
using Rng = std::mt19937_64;

}  // namespace graphstat
