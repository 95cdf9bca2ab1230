#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace piwtilt {

// Exact rational scalar. mpq_class keeps values canonicalized.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline std::string scalar_str(const Rational& x) { return x.get_str(); }
inline Rational scalar_from_long(long v) { return Rational(v); }

// Prime field F_p with a process-wide modulus (set once, from the CLI).
class Fp {
public:
  Fp() : v_(0) {}
  Fp(long x) {
    long p = static_cast<long>(modulus_);
    long r = x % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("field modulus must be >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("field modulus must be prime");
    modulus_ = p;
  }
  static std::uint64_t modulus() { return modulus_; }

  std::uint64_t raw() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % modulus_); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + modulus_ - b.v_) % modulus_); }
  friend Fp operator-(Fp a) { return from_raw(a.v_ == 0 ? 0 : modulus_ - a.v_); }
  friend Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % modulus_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inv() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus_), newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(modulus_);
    return from_raw(static_cast<std::uint64_t>(t));
  }

private:
  static Fp from_raw(std::uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  std::uint64_t v_;
  static inline std::uint64_t modulus_ = 32003;
};

inline bool is_zero(const Fp& x) { return x.raw() == 0; }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.raw()); }
inline Fp scalar_from_long_fp(long v) { return Fp(v); }

template <class S>
S scalar_one() {
  return S(1);
}

}  // namespace piwtilt
