#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace soblocks {

// Exact rational scalar used wherever the answer must be an exact number
// (trace anomalies, Fock-space coefficients, energies).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Bad input: weight above level, malformed label, parity mismatch, ...
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A floating computation did not reach the requested certainty
// (integer rounding residual too large, singular denominator, non-finite value).
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation would exceed a configured size bound.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 64-bit splittable PRNG (splitmix64).  Every randomized harness takes an
// explicit seed and reports it, so runs are reproducible bit for bit.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Independent child stream; used to give parallel trials stable seeds.
  SplitMix64 split() { return SplitMix64(next()); }
};

inline std::string rational_string(const Rational& q) {
  return q.str();
}

}  // namespace soblocks
