#pragma once

#include "genus1/counting.hpp"
#include "genus1/matrix.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace genus1 {

// Primes p with ν_p(Δ_min) >= 2.
inline std::vector<BigInt> bad_primes(const GenusOneEquation &E) {
  if (E.degree() != 1)
    throw Error("bad_primes needs a Weierstrass equation", "bad_primes");
  BigRat delta = invariants(E).delta;
  if (delta == 0)
    throw Error("singular equation", "bad_primes");
  std::set<BigInt> candidates;
  for (auto &[q, e] : factor(numer(delta)))
    candidates.insert(q);
  for (const auto &a : E.coeffs())
    if (denom(a) != 1)
      for (auto &[q, e] : factor(denom(a)))
        candidates.insert(q);
  std::vector<BigInt> out;
  for (const auto &p : candidates)
    if (tate(E, p).vDeltaMin >= 2)
      out.push_back(p);
  return out;
}

struct GlobalFactor {
  BigInt p;
  ReductionData reduction;
  PhiElement psi;
  CountBreakdown count;
};

struct GlobalCount {
  std::vector<GlobalFactor> factors;
  BigInt N = 1;
};

inline GlobalCount global_count(const GenusOneEquation &E, int n,
                                const std::map<BigInt, PsiInput> &psi = {}) {
  GlobalCount out;
  for (const auto &p : bad_primes(E)) {
    auto it = psi.find(p);
    PsiInput in = it == psi.end() ? PsiInput{} : it->second;
    try {
      GlobalFactor f{p, tate(E, p), {}, {}};
      f.psi = f.reduction.phi.zero();
      if (auto *e = std::get_if<PhiElement>(&in))
        f.psi = *e;
      else if (auto *P = std::get_if<Point>(&in))
        f.psi = component_of_point(E, p, *P);
      f.count = local_count(E, p, n, f.psi);
      out.N *= f.count.total;
      out.factors.push_back(std::move(f));
    } catch (const Error &e) {
      throw Error(std::string(e.what()) + " at p=" + p.str(), "global_count");
    }
  }
  return out;
}

namespace detail {

inline void swap_rows(IntMatrix &a, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < a.cols(); ++k)
    std::swap(a(i, k), a(j, k));
}
inline void swap_cols(IntMatrix &a, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < a.rows(); ++k)
    std::swap(a(k, i), a(k, j));
}
// row_i += f row_j
inline void add_row(IntMatrix &a, std::size_t i, std::size_t j, const BigInt &f) {
  if (f == 0)
    return;
  for (std::size_t k = 0; k < a.cols(); ++k)
    a(i, k) += f * a(j, k);
}
inline void add_col(IntMatrix &a, std::size_t i, std::size_t j, const BigInt &f) {
  if (f == 0)
    return;
  for (std::size_t k = 0; k < a.rows(); ++k)
    a(k, i) += f * a(k, j);
}

inline IntMatrix to_int(const RatMatrix &m, const char *where) {
  return m.map([&](const BigRat &x) {
    if (!is_integer(x))
      throw Error("matrix is not integral", where);
    return numer(x);
  });
}

inline IntMatrix unimodular_inverse(const IntMatrix &m) {
  return to_int(inverse(to_rat(m)), "unimodular_inverse");
}

// Smith form: L A R = S with L, R unimodular and s_1 | s_2 | ... >= 0.
struct Smith {
  IntMatrix L, S, R;
};

inline Smith smith(const IntMatrix &A) {
  const std::size_t n = A.rows();
  IntMatrix S = A, L = IntMatrix::identity(n), R = IntMatrix::identity(A.cols());
  for (std::size_t t = 0; t < std::min(n, A.cols()); ++t) {
    for (;;) {
      std::size_t pi = n, pj = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < A.cols(); ++j)
          if (S(i, j) != 0 && (pi == n || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n)
        return {L, S, R};
      swap_rows(S, t, pi);
      swap_rows(L, t, pi);
      swap_cols(S, t, pj);
      swap_cols(R, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        BigInt q = S(i, t) / S(t, t);
        add_row(S, i, t, -q);
        add_row(L, i, t, -q);
        clean = clean && S(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < A.cols(); ++j) {
        BigInt q = S(t, j) / S(t, t);
        add_col(S, j, t, -q);
        add_col(R, j, t, -q);
        clean = clean && S(t, j) == 0;
      }
      if (!clean)
        continue;
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < A.cols(); ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == n)
        break;
      add_row(S, t, bad, 1);
      add_row(L, t, bad, 1);
    }
    if (S(t, t) < 0) {
      for (std::size_t k = 0; k < A.cols(); ++k)
        S(t, k) = -S(t, k);
      for (std::size_t k = 0; k < n; ++k)
        L(t, k) = -L(t, k);
    }
  }
  return {L, S, R};
}

} // namespace detail

struct LocalSmith {
  IntMatrix V, D, U;
};

// A = V D U with U unimodular, D = diag(p^r1, ..., p^r_{n-1}, 1) descending and
// V integral with det prime to p.
inline LocalSmith snf_local(const IntMatrix &A, const BigInt &p) {
  const char *where = "snf_local";
  require_prime(p, where);
  if (!A.square() || A.rows() == 0)
    throw Error("matrix must be square", where);
  if (det(A) == 0)
    throw Error("zero determinant", where);
  BigInt g = 0;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      g = gcd(g, A(i, j));
  if (g != 1)
    throw Error("entries are not coprime", where);

  const std::size_t n = A.rows();
  auto [L, S, R] = detail::smith(A);
  // A = L^-1 S R^-1 and S = W E with W a p-unit diagonal, E = diag(p^r).
  IntMatrix W = IntMatrix::identity(n), E = IntMatrix::identity(n), Rev(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt s = S(i, i), pe = 1;
    while (s % p == 0) {
      s /= p;
      pe *= p;
    }
    W(i, i) = s;
    E(i, i) = pe;
    Rev(i, n - 1 - i) = 1;
  }
  return {detail::unimodular_inverse(L) * W * Rev, Rev * E * Rev,
          Rev * detail::unimodular_inverse(R)};
}

struct LiftTarget {
  IntMatrix U;
  BigInt p;
  int m = 1;
};

// U in SL_n(Z) congruent to every target modulo its prime power.
inline IntMatrix crt_sl_lift(const std::vector<LiftTarget> &targets) {
  const char *where = "crt_sl_lift";
  if (targets.empty())
    throw Error("no targets", where);
  const std::size_t n = targets[0].U.rows();
  std::set<BigInt> primes;
  BigInt Q = 1;
  for (const auto &t : targets) {
    require_prime(t.p, where);
    if (!primes.insert(t.p).second)
      throw Error("repeated prime " + t.p.str(), where);
    if (t.m < 1)
      throw Error("exponent must be at least 1", where);
    if (!t.U.square() || t.U.rows() != n)
      throw Error("targets must be square of equal size", where);
    if (det(t.U) != 1)
      throw Error("target is not unimodular", where);
    Q *= ipow(t.p, static_cast<unsigned>(t.m));
  }

  // Entrywise CRT.
  IntMatrix A(n, n);
  for (const auto &t : targets) {
    BigInt q = ipow(t.p, static_cast<unsigned>(t.m)), rest = Q / q;
    BigInt e = rest * inverse_mod(rest, q); // 1 mod q, 0 mod rest
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        A(i, j) = mod(A(i, j) + e * t.U(i, j), Q);
  }

  // Transvections L with L A = I mod Q; then U = L^-1.
  IntMatrix L = IntMatrix::identity(n);
  auto op = [&](std::size_t i, std::size_t j, const BigInt &f) {
    detail::add_row(A, i, j, f);
    detail::add_row(L, i, j, f);
  };
  for (std::size_t c = 0; c + 1 < n; ++c) {
    BigInt h = 0;
    for (std::size_t i = c + 1; i < n; ++i)
      h = gcd(h, A(i, c));
    if (h == 0) {
      op(c + 1, c, 1);
      h = abs(A(c + 1, c));
    }
    // Largest divisor of h prime to the pivot; shifting the pivot by k Q makes the column coprime.
    BigInt k = h;
    for (BigInt g = gcd(k, A(c, c)); g > 1; g = gcd(k, A(c, c)))
      k /= g;
    if (A(c, c) == 0)
      k = 1;
    A(c, c) += k * Q;
    // Euclid down the column until one entry is ±1.
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = c; i < n; ++i)
        if (A(i, c) != 0 && (best == n || abs(A(i, c)) < abs(A(best, c))))
          best = i;
      bool done = true;
      for (std::size_t i = c; i < n; ++i)
        if (i != best && A(i, c) != 0) {
          op(i, best, -(A(i, c) / A(best, c)));
          done = done && A(i, c) == 0;
        }
      if (done)
        break;
    }
    std::size_t r = c;
    while (A(r, c) == 0)
      ++r;
    if (r != c) {
      op(c, r, 1);
      op(r, c, -(A(r, c) / A(c, c)));
    }
    if (A(c, c) == -1) {
      std::size_t d = c + 1;
      op(d, c, -1);
      op(c, d, 2);
      op(d, c, -1);
    }
    if (A(c, c) != 1)
      throw Error("column is not coprime to the modulus", where);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c)
        op(i, c, -A(i, c));
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    op(i, n - 1, -A(i, n - 1));

  IntMatrix U = detail::unimodular_inverse(L);
  if (det(U) != 1)
    throw Error("internal: lift is not in SL_n", where);
  for (const auto &t : targets) {
    BigInt q = ipow(t.p, static_cast<unsigned>(t.m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mod(U(i, j) - t.U(i, j), q) != 0)
          throw Error("internal: lift misses a congruence", where);
  }
  return U;
}

struct ModelCheck {
  GenusOneEquation image;
  bool integral = false;
  BigRat det;
  std::vector<std::tuple<BigInt, long, long>> valuations; // (p, before, after)
  bool ok = false;
};

struct ModelListReport {
  std::vector<BigInt> badPrimes;
  std::vector<ModelCheck> entries;
  bool allOk = true;
  static constexpr const char *inequivalence = "not verified";
  static constexpr const char *localSolubility = "not verified";
};

inline ModelListReport verify_model_list(const GenusOneEquation &phi,
                                         const std::vector<Transformation> &gs) {
  ModelListReport rep;
  Invariants inv = invariants(phi);
  rep.badPrimes = bad_primes(jacobian(phi));
  for (const auto &g : gs) {
    ModelCheck mc;
    mc.image = apply(g, phi);
    mc.integral = is_integral(mc.image);
    mc.det = det_transformation(g);
    mc.ok = mc.integral;
    BigRat d2 = invariants(mc.image).delta;
    for (const auto &p : rep.badPrimes) {
      long before = detail::val(inv.delta, p).value(), after = detail::val(d2, p).value();
      mc.valuations.emplace_back(p, before, after);
      mc.ok = mc.ok && before == after;
    }
    rep.allOk = rep.allOk && mc.ok;
    rep.entries.push_back(std::move(mc));
  }
  return rep;
}

} // namespace genus1
