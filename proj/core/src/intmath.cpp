#include "drinfeld/intmath.hpp"

#include <stdexcept>

namespace drinfeld {

namespace {

// binom(a, b) mod p for digits 0 <= a, b < p
unsigned digit_binom(unsigned a, unsigned b, unsigned p) {
  if (b > a) return 0;
  if (b == 0 || b == a) return 1;
  // multiplicative formula with inverses mod p
  unsigned long long num = 1, den = 1;
  if (b > a - b) b = a - b;
  for (unsigned i = 1; i <= b; ++i) {
    num = num * ((a + 1 - i) % p) % p;
    den = den * i % p;
  }
  // den^(p-2) mod p
  unsigned long long inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<unsigned>(num * inv % p);
}

} // namespace

unsigned lucas_binom(unsigned long long top, unsigned long long bottom, unsigned p) {
  if (p < 2) throw std::invalid_argument("p must be prime");
  unsigned long long r = 1;
  while (bottom > 0 || top > 0) {
    const unsigned a = static_cast<unsigned>(top % p);
    const unsigned b = static_cast<unsigned>(bottom % p);
    r = r * digit_binom(a, b, p) % p;
    if (r == 0) return 0;
    top /= p;
    bottom /= p;
  }
  return static_cast<unsigned>(r);
}

std::uint64_t binom_exact(long long top, long long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  unsigned long long b = static_cast<unsigned long long>(bottom);
  const unsigned long long a = static_cast<unsigned long long>(top);
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (unsigned long long i = 1; i <= b; ++i) {
    r = r * (a + 1 - i);
    r /= i; // exact at every step: r holds binom(a, i) * leading factor pattern
    if (r > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("binomial does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

long long binom_gen(long long top, long long bottom) {
  if (bottom < 0) return 0;
  if (top >= 0)
    return static_cast<long long>(binom_exact(top, bottom));
  const std::uint64_t v = binom_exact(bottom - top - 1, bottom);
  const long long s = (bottom % 2 == 0) ? 1 : -1;
  if (v > static_cast<std::uint64_t>(INT64_MAX))
    throw std::overflow_error("binomial does not fit in 64 bits");
  return s * static_cast<long long>(v);
}

unsigned val_p(unsigned long long x, unsigned p) {
  if (x == 0) throw std::invalid_argument("val_p of zero");
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

unsigned long long ipow(unsigned long long base, unsigned e) {
  unsigned long long r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) throw std::overflow_error("integer power overflow");
    r *= base;
  }
  return r;
}

} // namespace drinfeld
