#include "subcode/fields.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace subcode {

namespace {

struct PrimePower {
  int p = 0;
  int e = 0;
};

PrimePower factor_prime_power(int q) {
  if (std::find(kSupportedOrders.begin(), kSupportedOrders.end(), q) == kSupportedOrders.end()) {
    throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                " (expected one of 2,3,4,5,7,8,9)");
  }
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int e = 0;
    int r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    return {p, e};
  }
  return {};
}

// Monic moduli over GF(p), low coefficient first.
std::vector<int> modulus_for(int q, int p) {
  switch (q) {
    case 4:
      return {1, 1, 1};  // x^2 + x + 1
    case 8:
      return {1, 1, 0, 1};  // x^3 + x + 1
    case 9:
      return {2, 2, 1};  // x^2 + 2x + 2
    default:
      (void)p;
      return {0, 1};  // prime field
  }
}

template <typename T>
T find_primitive(int group_order, const std::vector<T>& mul_table, int n) {
  for (int a = 1; a < n; ++a) {
    int x = a;
    int order = 1;
    while (x != 1) {
      x = mul_table[x * n + a];
      ++order;
    }
    if (order == group_order) return static_cast<T>(a);
  }
  throw std::logic_error("no primitive element found");
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  const PrimePower pp = factor_prime_power(q);
  p_ = pp.p;
  e_ = pp.e;
  modulus_ = modulus_for(q, p_);

  add_.resize(q * q);
  neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      int ra = a, rb = b, s = 0, w = 1;
      for (int i = 0; i < e_; ++i) {
        s += ((ra % p_ + rb % p_) % p_) * w;
        ra /= p_;
        rb /= p_;
        w *= p_;
      }
      add_[a * q + b] = static_cast<Fq>(s);
      if (s == 0) neg_[a] = static_cast<Fq>(b);
    }
  }

  std::vector<Fq> mul(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) mul[a * q + b] = schoolbook_mul(static_cast<Fq>(a), static_cast<Fq>(b));

  log_.assign(q, 0);
  exp_.assign(q - 1, 0);
  if (q == 2) {
    exp_[0] = 1;
    return;
  }
  const Fq g = find_primitive<Fq>(q - 1, mul, q);
  Fq x = 1;
  for (int i = 0; i < q - 1; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul[x * q + g];
  }
}

Fq GaloisField::schoolbook_mul(Fq a, Fq b) const {
  std::vector<int> pa(e_), pb(e_), prod(2 * e_, 0);
  int ra = a, rb = b;
  for (int i = 0; i < e_; ++i) {
    pa[i] = ra % p_;
    pb[i] = rb % p_;
    ra /= p_;
    rb /= p_;
  }
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
  for (int k = 2 * e_ - 1; k >= e_; --k) {
    const int t = prod[k];
    if (t == 0) continue;
    for (int i = 0; i <= e_; ++i) {
      prod[k - e_ + i] = ((prod[k - e_ + i] - t * modulus_[i]) % p_ + p_) % p_;
    }
  }
  int s = 0, w = 1;
  for (int i = 0; i < e_; ++i) {
    s += prod[i] * w;
    w *= p_;
  }
  return static_cast<Fq>(s);
}

const GaloisField& GaloisField::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<GaloisField>(new GaloisField(q))).first;
  return *it->second;
}

bool has_no_root(const GaloisField& f, std::span<const Fq> poly) {
  for (int x = 0; x < f.order(); ++x) {
    Fq acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = f.add(f.mul(acc, static_cast<Fq>(x)), *it);
    if (acc == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

CubicExtension::CubicExtension(int q) : base_(&GaloisField::get(q)), q_(q), n_(q * q * q) {
  const GaloisField& f = *base_;
  if (q == 2) {
    modulus_ = {1, 0, 1, 1};  // x^3 + x^2 + 1
  } else {
    bool found = false;
    for (int code = 0; code < q * q * q && !found; ++code) {
      std::array<Fq, 4> m{static_cast<Fq>(code % q), static_cast<Fq>((code / q) % q),
                          static_cast<Fq>(code / (q * q)), 1};
      if (m[0] == 0) continue;
      if (has_no_root(f, m)) {
        modulus_ = m;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible cubic");
  }

  add_.resize(static_cast<std::size_t>(n_) * n_);
  neg_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    const auto da = digits(static_cast<Fq3>(a));
    for (int b = 0; b < n_; ++b) {
      const auto db = digits(static_cast<Fq3>(b));
      const std::array<Fq, 3> s{f.add(da[0], db[0]), f.add(da[1], db[1]), f.add(da[2], db[2])};
      const Fq3 r = from_digits(s);
      add_[static_cast<std::size_t>(a) * n_ + b] = r;
      if (r == 0) neg_[a] = static_cast<Fq3>(b);
    }
  }

  std::vector<Fq3> mul(static_cast<std::size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      mul[static_cast<std::size_t>(a) * n_ + b] = schoolbook_mul(static_cast<Fq3>(a), static_cast<Fq3>(b));
  const Fq3 g = find_primitive<Fq3>(n_ - 1, mul, n_);
  log_.assign(n_, 0);
  exp_.assign(n_ - 1, 0);
  Fq3 x = 1;
  for (int i = 0; i < n_ - 1; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul[static_cast<std::size_t>(x) * n_ + g];
  }

  frob_.resize(n_);
  trace_.resize(n_);
  for (int a = 0; a < n_; ++a) frob_[a] = pow(static_cast<Fq3>(a), static_cast<std::uint64_t>(q));
  for (int a = 0; a < n_; ++a) {
    const Fq3 t = add(add(static_cast<Fq3>(a), frob_[a]), frob_[frob_[a]]);
    if (!in_base_field(t)) throw std::logic_error("trace outside base field");
    trace_[a] = static_cast<Fq>(t);
  }

  const Fq3 root = generator_root();
  if (q == 2) {
    basis_ = {root, mul[root * n_ + root], 0};
    basis_[2] = mul[static_cast<std::size_t>(basis_[1]) * n_ + basis_[1]];
  } else {
    basis_ = {1, root, mul[root * n_ + root]};
  }

  // Invert from_coords by tabulating it; injective because basis_ is a basis.
  coords_.resize(n_);
  for (int code = 0; code < n_; ++code) {
    const std::array<Fq, 3> c{static_cast<Fq>(code % q), static_cast<Fq>((code / q) % q),
                              static_cast<Fq>(code / (q * q))};
    const Fq3 a = from_coords(c);
    coords_[a] = c;
  }
}

std::array<Fq, 3> CubicExtension::digits(Fq3 a) const {
  return {static_cast<Fq>(a % q_), static_cast<Fq>((a / q_) % q_), static_cast<Fq>(a / (q_ * q_))};
}

Fq3 CubicExtension::from_digits(std::span<const Fq> d) const {
  return static_cast<Fq3>(d[0] + d[1] * q_ + d[2] * q_ * q_);
}

Fq3 CubicExtension::from_coords(std::span<const Fq> c) const {
  const GaloisField& f = *base_;
  std::array<Fq, 3> acc{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    const auto d = digits(basis_[i]);
    for (int j = 0; j < 3; ++j) acc[j] = f.add(acc[j], f.mul(c[i], d[j]));
  }
  return from_digits(acc);
}

Fq3 CubicExtension::schoolbook_mul(Fq3 a, Fq3 b) const {
  const GaloisField& f = *base_;
  const auto da = digits(a);
  const auto db = digits(b);
  std::array<Fq, 5> prod{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[i + j] = f.add(prod[i + j], f.mul(da[i], db[j]));
  for (int k = 4; k >= 3; --k) {
    const Fq t = prod[k];
    if (t == 0) continue;
    for (int i = 0; i <= 3; ++i) prod[k - 3 + i] = f.sub(prod[k - 3 + i], f.mul(t, modulus_[i]));
  }
  const std::array<Fq, 3> r{prod[0], prod[1], prod[2]};
  return from_digits(r);
}

Fq3 CubicExtension::pow(Fq3 a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t m = static_cast<std::uint64_t>(n_ - 1);
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % m)) % m];
}

Fq3 CubicExtension::exp(long long i) const {
  const long long m = n_ - 1;
  return exp_[((i % m) + m) % m];
}

Fq CubicExtension::norm(Fq3 a) const {
  const Fq3 r = pow(a, static_cast<std::uint64_t>(q_ * q_ + q_ + 1));
  if (!in_base_field(r)) throw std::logic_error("norm outside base field");
  return static_cast<Fq>(r);
}

Fq3 CubicExtension::scale(Fq s, Fq3 a) const { return mul(embed(s), a); }

const CubicExtension& CubicExtension::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CubicExtension>> cache;
  GaloisField::get(q);  // validates q before taking the lock
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<CubicExtension>(new CubicExtension(q))).first;
  return *it->second;
}

}  // namespace subcode
