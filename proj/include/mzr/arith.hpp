#pragma once

#include <cstdint>

#include <mzr/rational.hpp>

namespace mzr {

// B_n with B_1 = -1/2 (generating function t/(e^t - 1)).
//
// Values come from a process-wide monotone table filled by the recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0. The table is guarded by a mutex and only
// ever grows, so a returned value never changes.
Rational bernoulli(std::uint32_t n);

// zeta(-n) for n >= 0: -1/2 at n = 0, -B_{n+1}/(n+1) otherwise.
Rational zeta_nonpositive(std::uint32_t n);

// C(n,k). Throws std::invalid_argument when k > n.
Rational binomial(std::uint32_t n, std::uint32_t k);

} // namespace mzr
