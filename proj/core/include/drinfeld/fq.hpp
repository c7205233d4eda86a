#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace drinfeld {

/// Element of F_q in the polynomial-basis encoding: the code packs the
/// coordinates (c_0, ..., c_{l-1}), 0 <= c_i < p, as sum c_i p^i.  For a
/// prime field the code is just the residue.
using FqElem = std::uint16_t;

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// Arithmetic context for the finite field F_q, q = p^l.  For l > 1 the
/// field is realized as F_p[w]/(m(w)) where m is the lexicographically
/// smallest monic irreducible of degree l over F_p, so a given q always
/// denotes the same concrete field.  Instances are immutable and shared
/// through FqPtr; all operations are pure.
class Fq {
public:
  /// Build from the field order; throws std::invalid_argument unless q is
  /// a prime power (q <= 65535).
  static FqPtr make(unsigned q);
  static FqPtr make(unsigned p, unsigned l);

  unsigned p() const { return p_; }
  unsigned l() const { return l_; }
  unsigned q() const { return q_; }

  /// Coefficients of the defining modulus m(w) over F_p, ascending degree,
  /// length l+1, monic.  For l = 1 this is w itself.
  const std::vector<FqElem>& modulus() const { return modulus_; }

  FqElem zero() const { return 0; }
  FqElem one() const { return 1; }
  /// The class of w for l > 1; the identity for prime fields.
  FqElem gen() const { return l_ > 1 ? static_cast<FqElem>(p_) : 1; }
  /// Prime-field embedding of an integer (reduced mod p, sign handled).
  FqElem from_int(long long v) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, unsigned long long e) const;

  std::string to_string(FqElem a) const;

  bool same(const Fq& other) const { return p_ == other.p_ && l_ == other.l_; }

private:
  Fq(unsigned p, unsigned l);

  FqElem mul_slow(FqElem a, FqElem b) const;
  void decode(FqElem a, unsigned* digits) const;
  FqElem encode(const unsigned* digits) const;

  unsigned p_ = 0;
  unsigned l_ = 0;
  unsigned q_ = 0;
  std::vector<FqElem> modulus_;
  std::vector<FqElem> mul_table_; // q*q entries when l > 1 and q <= 256
  std::vector<FqElem> inv_table_; // q entries when q <= 4096
};

} // namespace drinfeld
