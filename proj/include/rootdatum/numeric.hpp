#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootdatum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return den(r) == 1; }

inline bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

inline IVec to_ivec(const QVec& v) {
  if (!is_integral(v)) throw Error("not_integral", "vector has non-integer entries");
  IVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(num(x));
  return out;
}

inline QVec to_qvec(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Canonical form: lowest terms, "a" when the denominator is 1, else "a/b".
inline std::string rat_str(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(long long n);

inline Rat parse_rat(const std::string& s) {
  auto bad = [&] { return Error("bad_rational", "cannot parse rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw bad();
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dimension_mismatch", "vector sizes differ");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dimension_mismatch", "vector sizes differ");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IVec operator+(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dimension_mismatch", "vector sizes differ");
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IVec operator-(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dimension_mismatch", "vector sizes differ");
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IVec operator-(const IVec& a) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dimension_mismatch", "vector sizes differ");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw Error("dimension_mismatch", "vector sizes differ");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const IVec& b) { return dot(a, to_qvec(b)); }
inline Rat dot(const IVec& a, const QVec& b) { return dot(to_qvec(a), b); }

inline IVec scale(const Int& c, const IVec& v) {
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline QVec scale(const Rat& c, const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline bool is_zero(const IVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace rootdatum
