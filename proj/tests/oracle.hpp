#pragma once

// Reduction type at p >= 5 read off (ν(c4), ν(c6), ν(Δ)) alone, with c_p from
// Legendre symbols and root counts. Shares nothing with Tate's algorithm.

#include "genus1/genus1.hpp"

#include <string>
#include <vector>

namespace oracle {

using namespace genus1;

struct Expected {
  std::string kodaira;
  int cp;
  int vmin;
};

inline long v(const BigRat &q, long p) { return q == 0 ? 1000 : detail::val(q, p).value(); }

inline int leg(const BigRat &q, long p) { return legendre(rat_mod(q, p), BigInt(p)); }

inline int cubic_roots(const BigRat &b, const BigRat &c, long p) {
  int n = 0;
  for (long x = 0; x < p; ++x)
    if (mod(x * x * x + rat_mod(b, p) * x + rat_mod(c, p), BigInt(p)) == 0)
      ++n;
  return n;
}

inline Expected classify(const GenusOneEquation &E, long p) {
  Invariants inv = invariants(E);
  BigRat c4 = inv.c4, c6 = inv.c6, d = inv.delta;
  BigRat P = p;
  // Scale to a minimal model at p.
  while (v(d, p) < 0 || v(c4, p) < 0 || v(c6, p) < 0) {
    c4 *= rpow(P, 4);
    c6 *= rpow(P, 6);
    d *= rpow(P, 12);
  }
  while (v(c4, p) >= 4 && v(c6, p) >= 6 && v(d, p) >= 12) {
    c4 /= rpow(P, 4);
    c6 /= rpow(P, 6);
    d /= rpow(P, 12);
  }
  const long a = v(c4, p), b = v(c6, p), n = v(d, p);
  if (n == 0)
    return {"I0", 1, 0};
  if (a == 0) {
    bool split = leg(-c6, p) == 1;
    return {"I" + std::to_string(n), split ? int(n) : (n % 2 == 0 ? 2 : 1), int(n)};
  }
  if (a == 2 && b == 3 && n >= 7) {
    // I_m*, m = n - 6
    const long m = n - 6;
    int s = m % 2 ? leg(d * c6 / rpow(P, 9 + m), p) : leg(d / rpow(P, 6 + m), p);
    return {"I" + std::to_string(m) + "*", 3 + s, int(n)};
  }
  switch (n) {
  case 2:
    return {"II", 1, 2};
  case 3:
    return {"III", 2, 3};
  case 4:
    return {"IV", 2 + leg(-6 * c6 / rpow(P, 2), p), 4};
  case 6:
    return {"I0*", 1 + cubic_roots(-3 * c4 / rpow(P, 2), -2 * c6 / rpow(P, 3), p), 6};
  case 9:
    return {"III*", 2, 9};
  case 10:
    return {"II*", 1, 10};
  default:
    break;
  }
  if (n == 8)
    return {"IV*", 2 + leg(-6 * c6 / rpow(P, 4), p), 8};
  throw Error("valuations (" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(n) + ") match no type",
              "oracle");
}

struct BatteryCurve {
  GenusOneEquation E;
  long p;
  std::string note;
};

// At least one curve per Kodaira type and per c_p variant, plus non-minimal scalings.
inline std::vector<BatteryCurve> battery() {
  auto W = [](BigRat a1, BigRat a2, BigRat a3, BigRat a4, BigRat a6) {
    return GenusOneEquation::weierstrass(a1, a2, a3, a4, a6);
  };
  std::vector<BatteryCurve> out;
  auto add = [&](GenusOneEquation E, long p, std::string note) {
    out.push_back({std::move(E), p, std::move(note)});
  };
  // y^2 = x^3 + a x^2 + p^k: I_k, split iff a is a square mod p.
  add(W(0, 1, 0, 0, 5), 5, "I1 split");
  add(W(0, 2, 0, 0, 5), 5, "I1 non-split");
  add(W(0, 1, 0, 0, 25), 5, "I2 split");
  add(W(0, 2, 0, 0, 25), 5, "I2 non-split");
  add(W(0, 1, 0, 0, 343), 7, "I3 split");
  add(W(0, 3, 0, 0, 343), 7, "I3 non-split");
  add(W(0, 4, 0, 0, 7 * 7 * 7 * 7 * 7 * 7), 7, "I6 split");
  add(W(0, 3, 0, 0, 7 * 7 * 7 * 7 * 7 * 7), 7, "I6 non-split");
  add(W(0, 0, 0, 0, 5), 5, "II");
  add(W(0, 0, 0, 7, 0), 7, "III");
  add(W(0, 0, 0, 0, 25), 5, "IV split");
  add(W(0, 0, 0, 0, 50), 5, "IV non-split");
  add(W(0, 0, 0, -49, 0), 7, "I0* three roots");
  add(W(0, 0, 0, 0, 125), 5, "I0* one root");
  add(W(0, 0, 0, 0, 2 * 343), 7, "I0* no root");
  add(W(0, 5, 0, 0, 625), 5, "I1* (a = 1)");
  add(W(0, 10, 0, 0, 625), 5, "I1* (a = 2)");
  add(W(0, 5, 0, 0, 1250), 5, "I1* (non-square constant)");
  add(W(0, 5, 0, 0, 3125), 5, "I2* (a = 1)");
  add(W(0, 10, 0, 0, 3125), 5, "I2* (a = 2)");
  add(W(0, 7, 0, 0, 7 * 7 * 7 * 7 * 7 * 7), 7, "I3* (a = 1)");
  add(W(0, 21, 0, 0, 7 * 7 * 7 * 7 * 7 * 7), 7, "I3* (a = 3)");
  add(W(0, 7, 0, 0, 3 * 7 * 7 * 7 * 7 * 7 * 7), 7, "I3* (non-square constant)");
  add(W(0, 7, 0, 0, 7 * 7 * 7 * 7 * 7 * 7 * 7), 7, "I4* (a = 1)");
  add(W(0, 21, 0, 0, 7 * 7 * 7 * 7 * 7 * 7 * 7), 7, "I4* (a = 3)");
  add(W(0, 0, 0, 0, 625), 5, "IV* split");
  add(W(0, 0, 0, 0, 1250), 5, "IV* non-split");
  add(W(0, 0, 0, 125, 0), 5, "III*");
  add(W(0, 0, 0, 0, 3125), 5, "II*");
  add(W(1, -1, 0, -617, 5916), 5, "III* (first worked example)");
  add(W(1, -1, 0, -617, 5916), 19, "I2 (first worked example)");
  add(W(1, 0, 1, -4, -3), 5, "I1 (second worked example)");
  add(W(1, 0, 1, -4, -3), 37, "I1 (second worked example)");
  add(W(1, 0, 1, -4, -3), 7, "good");
  add(W(0, 0, 0, 0, BigRat(5) * 15625 * 15625), 5, "II scaled by 5^6 (non-minimal)");
  add(W(0, 0, 0, BigRat(7) * 2401 * 2401, 0), 7, "III scaled by 7^4 (non-minimal)");
  add(W(0, 0, 0, 0, BigRat(625) / 15625), 5, "IV* with denominators");
  add(W(0, 1, 0, 0, BigRat(1, 5)), 5, "non-integral model");
  return out;
}

} // namespace oracle
