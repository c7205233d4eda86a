#include "drinfeld/fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

namespace {

constexpr unsigned kMaxQ = 65535;

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- small helpers on F_p polynomials (dense, ascending degree) used only
// --- for the modulus search; element arithmetic proper goes through Fq.

using FpPoly = std::vector<unsigned>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned fp_inv(unsigned a, unsigned p) {
  // Fermat; p is prime and a != 0
  unsigned long long r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

// a mod b, b nonzero
FpPoly fp_mod(FpPoly a, const FpPoly& b, unsigned p) {
  fp_trim(a);
  const unsigned db = static_cast<unsigned>(b.size()) - 1;
  const unsigned long long lcinv = fp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned long long c = a.back() * lcinv % p;
    const std::size_t shift = a.size() - b.size();
    if (c != 0)
      for (std::size_t i = 0; i <= db; ++i) {
        unsigned long long v = a[shift + i] + (p - c * b[i] % p);
        a[shift + i] = static_cast<unsigned>(v % p);
      }
    a.pop_back();
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool fp_is_irreducible(const FpPoly& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long long t = 0; t < count; ++t) {
      FpPoly g(d + 1, 0);
      unsigned long long v = t;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (fp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FpPoly smallest_irreducible(unsigned p, unsigned l) {
  unsigned long long count = 1;
  for (unsigned i = 0; i < l; ++i) count *= p;
  for (unsigned long long t = 0; t < count; ++t) {
    FpPoly f(l + 1, 0);
    unsigned long long v = t;
    for (unsigned i = 0; i < l; ++i) {
      f[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    f[l] = 1;
    if (fp_is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found"); // unreachable
}

} // namespace

FqPtr Fq::make(unsigned q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  unsigned p = 0;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q; // q itself prime
  unsigned l = 0;
  unsigned long long v = q;
  while (v % p == 0) {
    v /= p;
    ++l;
  }
  if (v != 1) throw std::invalid_argument("q must be a prime power");
  return make(p, l);
}

FqPtr Fq::make(unsigned p, unsigned l) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (l < 1) throw std::invalid_argument("l must be positive");
  unsigned long long q = 1;
  for (unsigned i = 0; i < l; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("field order too large (q <= 65535)");
  }
  return FqPtr(new Fq(p, l));
}

Fq::Fq(unsigned p, unsigned l) : p_(p), l_(l) {
  unsigned long long q = 1;
  for (unsigned i = 0; i < l; ++i) q *= p;
  q_ = static_cast<unsigned>(q);

  if (l_ == 1) {
    modulus_ = {0, 1}; // w
  } else {
    FpPoly m = smallest_irreducible(p_, l_);
    modulus_.assign(m.begin(), m.end());
  }

  if (l_ > 1 && q_ <= 256) {
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b)
        mul_table_[static_cast<std::size_t>(a) * q_ + b] =
            mul_slow(static_cast<FqElem>(a), static_cast<FqElem>(b));
  }
  if (q_ <= 4096) {
    inv_table_.resize(q_, 0);
    for (unsigned a = 1; a < q_; ++a)
      inv_table_[a] = pow(static_cast<FqElem>(a), q_ - 2);
  }
}

void Fq::decode(FqElem a, unsigned* digits) const {
  unsigned v = a;
  for (unsigned i = 0; i < l_; ++i) {
    digits[i] = v % p_;
    v /= p_;
  }
}

FqElem Fq::encode(const unsigned* digits) const {
  unsigned v = 0;
  for (unsigned i = l_; i-- > 0;) v = v * p_ + digits[i];
  return static_cast<FqElem>(v);
}

FqElem Fq::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<FqElem>(r);
}

FqElem Fq::add(FqElem a, FqElem b) const {
  if (l_ == 1) {
    unsigned s = static_cast<unsigned>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<FqElem>(s);
  }
  unsigned da[16], db[16], dr[16];
  decode(a, da);
  decode(b, db);
  for (unsigned i = 0; i < l_; ++i) {
    unsigned s = da[i] + db[i];
    dr[i] = s >= p_ ? s - p_ : s;
  }
  return encode(dr);
}

FqElem Fq::neg(FqElem a) const {
  if (l_ == 1) return a == 0 ? 0 : static_cast<FqElem>(p_ - a);
  unsigned da[16], dr[16];
  decode(a, da);
  for (unsigned i = 0; i < l_; ++i) dr[i] = da[i] == 0 ? 0 : p_ - da[i];
  return encode(dr);
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::mul_slow(FqElem a, FqElem b) const {
  unsigned da[16], db[16];
  decode(a, da);
  decode(b, db);
  unsigned prod[31] = {0};
  for (unsigned i = 0; i < l_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < l_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // reduce by the monic modulus
  for (unsigned d = 2 * l_ - 2; d >= l_; --d) {
    const unsigned c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned j = 0; j < l_; ++j) {
      unsigned long long v = prod[d - l_ + j] + static_cast<unsigned long long>(p_ - 1) * c % p_ * modulus_[j];
      prod[d - l_ + j] = static_cast<unsigned>(v % p_);
    }
  }
  return encode(prod);
}

FqElem Fq::mul(FqElem a, FqElem b) const {
  if (l_ == 1)
    return static_cast<FqElem>(static_cast<unsigned long long>(a) * b % p_);
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

FqElem Fq::pow(FqElem a, unsigned long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  e %= (q_ - 1);
  if (e == 0) return 1;
  FqElem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FqElem Fq::inv(FqElem a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero field element");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::string Fq::to_string(FqElem a) const {
  if (l_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  unsigned d[16];
  decode(a, d);
  std::string out;
  for (unsigned j = l_; j-- > 0;) {
    if (d[j] == 0) continue;
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += std::to_string(d[j]);
    } else {
      if (d[j] != 1) out += std::to_string(d[j]) + "*";
      out += "w";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out;
}

} // namespace drinfeld
