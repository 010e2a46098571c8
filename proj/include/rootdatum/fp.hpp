#pragma once

#include <string>

#include "rootdatum/numeric.hpp"

namespace rootdatum {

// Element of a prime field F_p, p an odd prime. A modulus of zero marks a
// plain integer constant, the shape generic code produces through T(0) and
// T(1); it adopts the modulus of the first moduled operand it meets, so
// matrix templates work unchanged over this type.
struct FpElt {
  long long p = 0, v = 0;

  FpElt() = default;
  FpElt(int x) : v(x) {}
  FpElt(long long modulus, long long value) : p(modulus) {
    if (p < 3 || (p & 1) == 0) throw Error("invalid_prime", "modulus must be an odd prime");
    v = reduce(value, p);
  }

  static long long reduce(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
  }

  long long common(const FpElt& o) const {
    if (p && o.p && p != o.p) throw Error("field_mismatch", "elements of different prime fields");
    return p ? p : o.p;
  }
  long long value_at(long long m) const { return m ? reduce(v, m) : v; }

  bool is_zero() const { return p ? v % p == 0 : v == 0; }

  FpElt operator+(const FpElt& o) const {
    long long m = common(o);
    if (!m) return plain(v + o.v);
    return FpElt(m, value_at(m) + o.value_at(m));
  }
  FpElt operator-(const FpElt& o) const { return *this + (-o); }
  FpElt operator-() const { return p ? FpElt(p, p - v) : plain(-v); }
  FpElt operator*(const FpElt& o) const {
    long long m = common(o);
    if (!m) return plain(v * o.v);
    return FpElt(m, (long long)((__int128)value_at(m) * o.value_at(m) % m));
  }
  FpElt& operator+=(const FpElt& o) { return *this = *this + o; }
  FpElt& operator-=(const FpElt& o) { return *this = *this - o; }
  FpElt& operator*=(const FpElt& o) { return *this = *this * o; }

  FpElt inv() const {
    if (!p) {
      if (v == 1 || v == -1) return *this;
      throw Error("not_invertible", "plain constant has no modular inverse");
    }
    if (v == 0) throw Error("division_by_zero", "inverse of zero field element");
    long long r = 1, b = v, e = p - 2;
    while (e) {
      if (e & 1) r = (long long)((__int128)r * b % p);
      b = (long long)((__int128)b * b % p);
      e >>= 1;
    }
    return FpElt(p, r);
  }
  FpElt operator/(const FpElt& o) const { return *this * o.inv(); }

  bool operator==(const FpElt& o) const {
    long long m = common(o);
    return value_at(m) == o.value_at(m);
  }
  bool operator!=(const FpElt& o) const { return !(*this == o); }

  // total order used only for canonical representatives
  bool operator<(const FpElt& o) const {
    long long m = common(o);
    return value_at(m) < o.value_at(m);
  }

 private:
  static FpElt plain(long long x) {
    FpElt r;
    r.v = x;
    return r;
  }
};

// Entry point that insists on primality (cheap guards only on the hot path).
struct FpField {
  long long p;

  explicit FpField(long long prime) : p(prime) {
    if (prime < 3 || !is_prime(prime))
      throw Error("invalid_prime", "coefficient field needs an odd prime");
  }
  FpElt operator()(long long x) const { return FpElt(p, x); }
};

inline std::string to_string(const FpElt& x) { return std::to_string(x.value_at(x.p)); }

}  // namespace rootdatum
