#pragma once

#include <cstdint>

namespace drinfeld {

/// binom(top, bottom) mod p by Lucas' theorem: the product of the digitwise
/// binomials in base p.  Exact for all sizes since only digits matter.
unsigned lucas_binom(unsigned long long top, unsigned long long bottom, unsigned p);

/// Exact integer binomial with the combinatorial convention: 0 unless
/// 0 <= bottom <= top.  Throws std::overflow_error if the value does not
/// fit in 64 bits.
std::uint64_t binom_exact(long long top, long long bottom);

/// Exact binomial with the polynomial convention in the upper index:
/// binom(M, N) = M(M-1)...(M-N+1)/N! for N >= 0 (so binom(M, 0) = 1 for
/// every M and binom(M, N) = (-1)^N binom(N-M-1, N) for M < 0), and 0 for
/// N < 0.  This is the convention under which Pascal's identity holds for
/// all integers, which the binomial-sum lemmas here rely on.
long long binom_gen(long long top, long long bottom);

/// Largest e with p^e dividing x (x > 0).
unsigned val_p(unsigned long long x, unsigned p);

/// p^e with overflow check.
unsigned long long ipow(unsigned long long base, unsigned e);

} // namespace drinfeld
