#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "warptf/common.hpp"

namespace warptf {

// Exact rational scalar. Keeps the exponent algebra (reciprocals, conjugates,
// t-exponents) free of floating-point boundary artifacts.
struct Rat {
  long long n = 0;
  long long d = 1;

  Rat() = default;
  Rat(long long num) : n(num), d(1) {}
  Rat(long long num, long long den) : n(num), d(den) { normalize(); }

  void normalize() {
    if (d == 0) throw invalid_parameter("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  double value() const { return double(n) / double(d); }
  bool is_zero() const { return n == 0; }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Rat operator-(Rat a) { return Rat(-a.n, a.d); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.n * b.n, a.d * b.d); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.n == 0) throw invalid_parameter("Rat: division by zero");
    return Rat(a.n * b.d, a.d * b.n);
  }
  friend bool operator==(Rat a, Rat b) { return a.n == b.n && a.d == b.d; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) { return a.n * b.d < b.n * a.d; }
  friend bool operator<=(Rat a, Rat b) { return a.n * b.d <= b.n * a.d; }
  friend bool operator>(Rat a, Rat b) { return b < a; }
  friend bool operator>=(Rat a, Rat b) { return b <= a; }

  std::string str() const {
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
  }
};

inline Rat rat_min(Rat a, Rat b) { return a < b ? a : b; }
inline Rat rat_max(Rat a, Rat b) { return a < b ? b : a; }

// Value in Q union {+infinity}; used for Lebesgue/sequence exponents.
struct XR {
  bool inf = false;
  Rat r;

  XR() = default;
  XR(Rat v) : inf(false), r(v) {}
  XR(long long v) : inf(false), r(v) {}
  static XR infinity() {
    XR x;
    x.inf = true;
    return x;
  }

  bool finite() const { return !inf; }
  double value() const { return inf ? std::numeric_limits<double>::infinity() : r.value(); }
  std::string str() const { return inf ? "inf" : r.str(); }

  friend bool operator==(const XR& a, const XR& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.r == b.r;
  }
  friend bool operator<(const XR& a, const XR& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.r < b.r;
  }
  friend bool operator<=(const XR& a, const XR& b) { return a == b || a < b; }
};

// 1/p with 1/inf = 0. Requires p >= 1 (Lebesgue exponent range used here).
inline Rat reciprocal(const XR& p) {
  if (p.inf) return Rat(0);
  if (p.r.n <= 0) throw invalid_parameter("exponent must be positive or inf");
  return Rat(p.r.d, p.r.n);
}

// Exponent whose reciprocal is the given rational; r <= 0 means infinity.
inline XR from_reciprocal(Rat r) {
  if (r.n <= 0) return XR::infinity();
  return XR(Rat(r.d, r.n));
}

// Conjugate exponent, with the convention p' = inf for p in (0, 1].
inline XR conjugate(const XR& p) {
  if (p.inf) return XR(Rat(1));
  if (p.r <= Rat(1)) return XR::infinity();
  return from_reciprocal(Rat(1) - reciprocal(p));
}

// The exponent q2*(q1/q2)' of the embedding sequence criteria. Its reciprocal
// is max(0, 1/q2 - 1/q1); in particular it is inf whenever q1 <= q2.
inline XR sequence_exponent(const XR& q1, const XR& q2) {
  return from_reciprocal(reciprocal(q2) - reciprocal(q1));
}

// Parse "inf", integer, or "a/b".
inline XR parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF" || s == "oo") return XR::infinity();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return XR(Rat(std::stoll(s)));
    return XR(Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))));
  } catch (const std::exception&) {
    throw invalid_parameter("cannot parse exponent: " + s);
  }
}

}  // namespace warptf
