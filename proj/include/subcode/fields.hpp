#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace subcode {

/// Element of GF(q), encoded as the base-p digits of its polynomial
/// coefficients (so 0..q-1, with 0 and 1 the usual constants).
using Fq = std::uint8_t;

/// Element of GF(q^3), encoded as c0 + c1*q + c2*q^2 where c0 + c1*a + c2*a^2
/// is its representative modulo the defining cubic and each ci is an Fq code.
using Fq3 = std::uint16_t;

/// Arithmetic tables for GF(q), q a prime power in {2,3,4,5,7,8,9}.
///
/// Instances are immutable and owned by a process-wide cache; obtain one with
/// GaloisField::get(). Multiplication goes through log/antilog tables.
class GaloisField {
 public:
  /// Throws std::invalid_argument for an unsupported order.
  static const GaloisField& get(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  /// Monic modulus over GF(p), low coefficient first (just {0,1} when e = 1).
  std::span<const int> modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
  Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq mul(Fq a, Fq b) const {
    if (a == 0 || b == 0) return 0;
    int s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  /// Precondition: a != 0.
  Fq inv(Fq a) const { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  int log(Fq a) const { return log_[a]; }
  Fq exp(int i) const { return exp_[((i % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }

  /// Product by polynomial multiplication modulo the modulus, bypassing the
  /// log tables. Used to validate them.
  Fq schoolbook_mul(Fq a, Fq b) const;

 private:
  explicit GaloisField(int q);

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> modulus_;
  std::vector<Fq> add_;
  std::vector<Fq> neg_;
  std::vector<int> log_;
  std::vector<Fq> exp_;
};

/// GF(q^3) as a cubic extension of GaloisField::get(q), with a fixed
/// GF(q)-basis used for all coordinate maps.
///
/// q = 2 uses the modulus x^3 + x^2 + 1 and the normal basis (b, b^2, b^4),
/// b a root. Other q use the first monic irreducible cubic x^3 + c2 x^2 +
/// c1 x + c0 in increasing order of c0 + c1 q + c2 q^2, and the polynomial
/// basis (1, a, a^2).
class CubicExtension {
 public:
  static const CubicExtension& get(int q);

  const GaloisField& base() const { return *base_; }
  int q() const { return q_; }
  int order() const { return n_; }
  /// Monic cubic over GF(q), low coefficient first.
  const std::array<Fq, 4>& modulus() const { return modulus_; }
  const std::array<Fq3, 3>& basis() const { return basis_; }
  /// The class of the indeterminate (the root of the modulus).
  Fq3 generator_root() const { return static_cast<Fq3>(q_); }

  Fq3 add(Fq3 a, Fq3 b) const { return add_[a * n_ + b]; }
  Fq3 neg(Fq3 a) const { return neg_[a]; }
  Fq3 sub(Fq3 a, Fq3 b) const { return add_[a * n_ + neg_[b]]; }
  Fq3 mul(Fq3 a, Fq3 b) const {
    if (a == 0 || b == 0) return 0;
    int s = log_[a] + log_[b];
    if (s >= n_ - 1) s -= n_ - 1;
    return exp_[s];
  }
  /// Precondition: a != 0.
  Fq3 inv(Fq3 a) const { return exp_[(n_ - 1 - log_[a]) % (n_ - 1)]; }
  Fq3 div(Fq3 a, Fq3 b) const { return mul(a, inv(b)); }
  Fq3 pow(Fq3 a, std::uint64_t k) const;
  int log(Fq3 a) const { return log_[a]; }
  Fq3 exp(long long i) const;

  Fq3 frobenius(Fq3 a) const { return frob_[a]; }
  /// a + a^q + a^(q^2), which lies in GF(q).
  Fq trace(Fq3 a) const { return trace_[a]; }
  /// a^(q^2+q+1), which lies in GF(q).
  Fq norm(Fq3 a) const;

  /// Scalar multiple s*a with s in GF(q).
  Fq3 scale(Fq s, Fq3 a) const;
  /// GF(q) viewed inside GF(q^3).
  Fq3 embed(Fq s) const { return s; }
  bool in_base_field(Fq3 a) const { return a < q_; }

  /// Coordinates relative to basis(); from_coords is the inverse.
  std::array<Fq, 3> coords(Fq3 a) const { return coords_[a]; }
  Fq3 from_coords(std::span<const Fq> c) const;

  /// Raw polynomial coefficients (c0, c1, c2) of an element code.
  std::array<Fq, 3> digits(Fq3 a) const;
  Fq3 from_digits(std::span<const Fq> d) const;

  /// Product by polynomial multiplication modulo the cubic.
  Fq3 schoolbook_mul(Fq3 a, Fq3 b) const;

 private:
  explicit CubicExtension(int q);

  const GaloisField* base_ = nullptr;
  int q_ = 0;
  int n_ = 0;
  std::array<Fq, 4> modulus_{};
  std::array<Fq3, 3> basis_{};
  std::vector<Fq3> add_;
  std::vector<Fq3> neg_;
  std::vector<int> log_;
  std::vector<Fq3> exp_;
  std::vector<Fq3> frob_;
  std::vector<Fq> trace_;
  std::vector<std::array<Fq, 3>> coords_;
};

/// True iff the monic polynomial (low coefficient first) over GF(q) has no
/// root in GF(q). For degree <= 3 this is equivalent to irreducibility.
bool has_no_root(const GaloisField& f, std::span<const Fq> poly);

/// Orders make_field accepts.
inline constexpr std::array<int, 7> kSupportedOrders{2, 3, 4, 5, 7, 8, 9};

}  // namespace subcode
