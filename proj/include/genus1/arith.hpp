#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genus1 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// All module errors carry the operation that raised them.
class Error : public std::runtime_error {
public:
  Error(const std::string &what, std::string where)
      : std::runtime_error(what), where_(std::move(where)) {}
  const std::string &where() const noexcept { return where_; }

private:
  std::string where_;
};

// Integer or the distinguished value Infinity (valuation of zero).
class Valuation {
public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(long v) : v_(v) {}
  static constexpr Valuation infinity() {
    Valuation r;
    r.inf_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return inf_; }
  long value() const {
    if (inf_)
      throw Error("valuation is infinite", "Valuation::value");
    return v_;
  }

  friend constexpr bool operator==(const Valuation &a, const Valuation &b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation &a,
                                                    const Valuation &b) {
    if (a.inf_ || b.inf_)
      return a.inf_ <=> b.inf_;
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(const Valuation &a, long b) {
    return !a.inf_ && a.v_ == b;
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation &a, long b) {
    if (a.inf_)
      return std::strong_ordering::greater;
    return a.v_ <=> b;
  }
  friend constexpr Valuation operator+(const Valuation &a, const Valuation &b) {
    if (a.inf_ || b.inf_)
      return infinity();
    return Valuation(a.v_ + b.v_);
  }

  std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }

private:
  long v_ = 0;
  bool inf_ = false;
};

inline BigInt numer(const BigRat &q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const BigRat &q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const BigRat &q) { return denom(q) == 1; }

inline BigInt abs(const BigInt &a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(const BigInt &a, const BigInt &b) {
  return boost::multiprecision::gcd(a, b);
}

// Least non-negative residue.
inline BigInt mod(const BigInt &a, const BigInt &m) {
  BigInt r = a % m;
  if (r < 0)
    r += m;
  return r;
}

inline BigInt ipow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1u)
      r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

inline BigRat rpow(const BigRat &base, int e) {
  BigRat r = 1;
  BigRat b = e < 0 ? BigRat(1) / base : base;
  for (int i = 0; i < (e < 0 ? -e : e); ++i)
    r *= b;
  return r;
}

inline BigInt powmod(const BigInt &b, const BigInt &e, const BigInt &m) {
  return boost::multiprecision::powm(mod(b, m), e, m);
}

// Extended Euclid: returns g and sets x, y with a x + b y = g.
inline BigInt xgcd(const BigInt &a, const BigInt &b, BigInt &x, BigInt &y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline BigInt inverse_mod(const BigInt &a, const BigInt &m) {
  BigInt x, y;
  if (xgcd(mod(a, m), m, x, y) != 1)
    throw Error("element not invertible modulo " + m.str(), "inverse_mod");
  return mod(x, m);
}

// Residue of a rational with denominator prime to m.
inline BigInt rat_mod(const BigRat &q, const BigInt &m) {
  if (m == 1)
    return 0;
  return mod(numer(q) * inverse_mod(denom(q), m), m);
}

inline bool is_prime(const BigInt &n) {
  if (n < 2)
    return false;
  static constexpr unsigned small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                       23, 29, 31, 37, 41, 43, 47};
  for (unsigned q : small) {
    if (n == q)
      return true;
    if (n % q == 0)
      return false;
  }
  if (n < 53 * 53)
    return true;
  static thread_local std::mt19937_64 gen(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

inline void require_prime(const BigInt &p, const char *where) {
  if (!is_prime(p))
    throw Error("not a prime: " + p.str(), where);
}

namespace detail {

// ν_p(n) for n != 0; p is trusted to be prime.
inline long vint(BigInt n, const BigInt &p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// ν_p(q) with q = 0 mapped to Infinity; p is trusted to be prime.
inline Valuation val(const BigRat &q, const BigInt &p) {
  if (q == 0)
    return Valuation::infinity();
  return Valuation(vint(numer(q), p) - vint(denom(q), p));
}

// Valuation as an integer, with zero mapped to `cap`.
inline long val_or(const BigRat &q, const BigInt &p, long cap) {
  return q == 0 ? cap : detail::val(q, p).value();
}

inline bool divisible(const BigRat &q, const BigInt &p, long k) {
  return q == 0 || val(q, p).value() >= k;
}

} // namespace detail

inline Valuation padic_valuation(const BigRat &q, const BigInt &p) {
  require_prime(p, "padic_valuation");
  return detail::val(q, p);
}

namespace detail {

inline BigInt pollard_brent(const BigInt &n, std::mt19937_64 &gen) {
  if (n % 2 == 0)
    return 2;
  std::uniform_int_distribution<std::uint64_t> dist(1, UINT64_MAX);
  for (;;) {
    BigInt y = mod(BigInt(dist(gen)), n), c = mod(BigInt(dist(gen)), n);
    const unsigned m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    do {
      x = y;
      for (unsigned i = 0; i < r; ++i)
        y = (y * y + c) % n;
      unsigned k = 0;
      do {
        ys = y;
        for (unsigned i = 0; i < m && i < r - k; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(BigInt(x - y))) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

inline void split_into(const BigInt &n, std::vector<BigInt> &out,
                       std::mt19937_64 &gen) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n, gen);
  split_into(d, out, gen);
  split_into(n / d, out, gen);
}

} // namespace detail

// Prime factorisation of |n| as sorted (prime, exponent) pairs.
inline std::vector<std::pair<BigInt, int>>
factor(const BigInt &n, std::uint64_t trial_bound = 1'000'000) {
  if (n == 0)
    throw Error("cannot factor zero", "factor");
  BigInt m = abs(n);
  std::vector<std::pair<BigInt, int>> out;
  auto take = [&](std::uint64_t d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e)
      out.emplace_back(BigInt(d), e);
  };
  take(2);
  for (std::uint64_t d = 3; d <= trial_bound; d += 2) {
    if (BigInt(d) * d > m)
      break;
    take(d);
  }
  if (m > 1) {
    std::vector<BigInt> primes;
    std::mt19937_64 gen(0xfac7);
    if (BigInt(trial_bound) * trial_bound >= m)
      primes.push_back(m);
    else
      detail::split_into(m, primes, gen);
    std::sort(primes.begin(), primes.end());
    for (const auto &q : primes) {
      if (!out.empty() && out.back().first == q)
        ++out.back().second;
      else
        out.emplace_back(q, 1);
    }
  }
  return out;
}

// Legendre symbol (a/p) for an odd prime p.
inline int legendre(const BigInt &a, const BigInt &p) {
  BigInt r = mod(a, p);
  if (r == 0)
    return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Some square root of a modulo the prime p, if one exists (Tonelli-Shanks).
inline std::optional<BigInt> sqrt_mod(const BigInt &a, const BigInt &p) {
  BigInt r = mod(a, p);
  if (r == 0 || p == 2)
    return r;
  if (legendre(r, p) != 1)
    return std::nullopt;
  BigInt q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (legendre(z, p) != -1)
    ++z;
  BigInt c = powmod(z, q, p), x = powmod(r, (q + 1) / 2, p), t = powmod(r, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    BigInt b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j)
      b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

// ---- text I/O ----

inline BigInt parse_int(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t'))
      v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t'))
      v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error("malformed integer '" + std::string(s) + "'", "parse_int");
  BigInt v{std::string(digits)};
  return s.front() == '-' ? BigInt(-v) : v;
}

inline BigRat parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return BigRat(parse_int(s));
  BigInt n = parse_int(s.substr(0, slash));
  BigInt d = parse_int(s.substr(slash + 1));
  if (d == 0)
    throw Error("zero denominator in '" + std::string(s) + "'", "parse_rational");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return BigRat(n, d);
}

inline std::string to_string(const BigInt &a) { return a.str(); }
inline std::string to_string(const BigRat &q) {
  return is_integer(q) ? numer(q).str() : numer(q).str() + "/" + denom(q).str();
}

} // namespace genus1
