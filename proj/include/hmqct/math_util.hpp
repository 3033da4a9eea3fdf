#pragma once

#include <cstdint>
#include <stdexcept>

namespace hmqct {

// Binary Shannon entropy, log base 2, with 0*log(0) := 0.
double binary_entropy(double p);

// ceil(log2(n)) for n >= 1; 0 for n = 1.
int ceil_log2(std::uint64_t n);

// log of n! (natural log), memoized per thread.
double log_factorial(std::uint64_t n);

// log C(n, k) (natural log); requires 0 <= k <= n.
double log_choose(std::uint64_t n, std::uint64_t k);

// Exact C(n,k) as double for small arguments (used by enumeration oracles).
double choose(std::uint64_t n, std::uint64_t k);

}  // namespace hmqct
