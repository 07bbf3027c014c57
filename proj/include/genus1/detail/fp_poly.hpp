#pragma once

// Dense polynomials over F_p, just enough for root finding in Tate's algorithm.

#include "genus1/arith.hpp"

#include <map>
#include <vector>

namespace genus1::detail {

// Coefficients low degree first, always reduced and trimmed.
class FpPoly {
public:
  FpPoly(std::vector<BigInt> c, BigInt p) : c_(std::move(c)), p_(std::move(p)) {
    for (auto &x : c_)
      x = mod(x, p_);
    trim();
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt &operator[](std::size_t i) const { return c_[i]; }
  const BigInt &lead() const { return c_.back(); }

  BigInt eval(const BigInt &x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      r = (r * x + *it) % p_;
    return r;
  }

  FpPoly derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * i);
    return FpPoly(d, p_);
  }

  friend FpPoly operator-(const FpPoly &a, const FpPoly &b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = (i < a.c_.size() ? a.c_[i] : BigInt(0)) -
             (i < b.c_.size() ? b.c_[i] : BigInt(0));
    return FpPoly(r, a.p_);
  }

  friend FpPoly operator*(const FpPoly &a, const FpPoly &b) {
    if (a.is_zero() || b.is_zero())
      return FpPoly({}, a.p_);
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return FpPoly(r, a.p_);
  }

  // Euclidean division; returns {quotient, remainder}.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly &b) const {
    if (b.is_zero())
      throw Error("division by zero polynomial", "FpPoly::divmod");
    std::vector<BigInt> r = c_;
    std::vector<BigInt> q(c_.size() >= b.c_.size() ? c_.size() - b.c_.size() + 1 : 0);
    BigInt inv = inverse_mod(b.lead(), p_);
    for (int i = static_cast<int>(r.size()) - 1; i >= b.degree(); --i) {
      BigInt coef = mod(r[i] * inv, p_);
      if (coef == 0)
        continue;
      q[i - b.degree()] = coef;
      for (int j = 0; j <= b.degree(); ++j)
        r[i - b.degree() + j] = mod(r[i - b.degree() + j] - coef * b.c_[j], p_);
    }
    return {FpPoly(q, p_), FpPoly(r, p_)};
  }

  FpPoly monic() const {
    if (is_zero())
      return *this;
    BigInt inv = inverse_mod(lead(), p_);
    std::vector<BigInt> r = c_;
    for (auto &x : r)
      x *= inv;
    return FpPoly(r, p_);
  }

  friend FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // base^e mod this.
  FpPoly powmod(FpPoly base, BigInt e) const {
    FpPoly r({1}, p_);
    base = base.divmod(*this).second;
    while (e > 0) {
      if (e % 2 == 1)
        r = (r * base).divmod(*this).second;
      base = (base * base).divmod(*this).second;
      e /= 2;
    }
    return r;
  }

  const BigInt &prime() const { return p_; }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }
  std::vector<BigInt> c_;
  BigInt p_;
};

// Distinct roots of a nonzero polynomial over F_p, sorted ascending.
inline std::vector<BigInt> roots_mod_p(const FpPoly &f) {
  const BigInt &p = f.prime();
  std::vector<BigInt> out;
  if (f.is_zero())
    throw Error("zero polynomial has every root", "roots_mod_p");
  if (f.degree() <= 0)
    return out;
  if (p < 1000) {
    for (BigInt x = 0; x < p; ++x)
      if (f.eval(x) == 0)
        out.push_back(x);
    return out;
  }
  // Split the product of the linear factors by random shifts (Cantor-Zassenhaus).
  FpPoly X({0, 1}, p);
  FpPoly g = gcd(f, f.powmod(X, p) - X);
  std::vector<FpPoly> work{g}, linear;
  std::mt19937_64 gen(0xc2);
  std::uniform_int_distribution<std::uint64_t> dist;
  while (!work.empty()) {
    FpPoly h = work.back();
    work.pop_back();
    if (h.degree() <= 0)
      continue;
    if (h.degree() == 1) {
      linear.push_back(h);
      continue;
    }
    for (;;) {
      FpPoly shift({BigInt(dist(gen)) % p, 1}, p);
      FpPoly w = h.powmod(shift, (p - 1) / 2) - FpPoly({1}, p);
      FpPoly d = gcd(h, w);
      if (d.degree() > 0 && d.degree() < h.degree()) {
        work.push_back(d);
        work.push_back(h.divmod(d).first.monic());
        break;
      }
    }
  }
  for (const auto &l : linear)
    out.push_back(mod(-l[0] * inverse_mod(l[1], p), p));
  std::sort(out.begin(), out.end());
  return out;
}

// Roots with multiplicity, sorted by root.
inline std::vector<std::pair<BigInt, int>> roots_with_multiplicity(const FpPoly &f) {
  std::vector<std::pair<BigInt, int>> out;
  for (const auto &r : roots_mod_p(f)) {
    FpPoly g = f;
    FpPoly lin({BigInt(-r), 1}, f.prime());
    int m = 0;
    for (;;) {
      auto [q, rem] = g.divmod(lin);
      if (!rem.is_zero())
        break;
      g = q;
      ++m;
    }
    out.emplace_back(r, m);
  }
  return out;
}

} // namespace genus1::detail
