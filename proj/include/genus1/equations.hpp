#pragma once

#include "genus1/arith.hpp"
#include "genus1/detail/cubic_invariant_tables.hpp"
#include "genus1/matrix.hpp"

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace genus1 {

// Coefficient layouts:
//   deg 1: a1 a2 a3 a4 a6                     y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6
//   deg 2: α0 α1 α2 a b c d e                 y^2 + (α0x^2+α1xz+α2z^2)y = ax^4 + ... + ez^4
//   deg 3: a b c a2 a3 b1 b3 c1 c2 m          ax^3+by^3+cz^3+a2x^2y+a3x^2z+b1xy^2+b3y^2z+c1xz^2+c2yz^2+mxyz
//   deg 4: two quadrics, each over x1^2 x1x2 x1x3 x1x4 x2^2 x2x3 x2x4 x3^2 x3x4 x4^2
class GenusOneEquation {
public:
  GenusOneEquation() = default;
  GenusOneEquation(int degree, std::vector<BigRat> coeffs)
      : deg_(degree), c_(std::move(coeffs)) {
    if (deg_ < 1 || deg_ > 4)
      throw Error("degree must be 1..4", "GenusOneEquation");
    if (c_.size() != coeff_count(deg_))
      throw Error("degree " + std::to_string(deg_) + " needs " +
                      std::to_string(coeff_count(deg_)) + " coefficients, got " +
                      std::to_string(c_.size()),
                  "GenusOneEquation");
  }

  static constexpr std::size_t coeff_count(int degree) {
    constexpr std::size_t n[] = {0, 5, 8, 10, 20};
    return degree >= 1 && degree <= 4 ? n[degree] : 0;
  }

  static GenusOneEquation weierstrass(BigRat a1, BigRat a2, BigRat a3, BigRat a4,
                                      BigRat a6) {
    return {1, {a1, a2, a3, a4, a6}};
  }

  int degree() const { return deg_; }
  const std::vector<BigRat> &coeffs() const { return c_; }
  const BigRat &operator[](std::size_t i) const { return c_.at(i); }

  friend bool operator==(const GenusOneEquation &, const GenusOneEquation &) = default;

private:
  int deg_ = 1;
  std::vector<BigRat> c_ = std::vector<BigRat>(5);
};

// Element of G_n(Q). Unused fields stay at their identity values.
struct Transformation {
  int degree = 1;
  BigRat u = 1, r = 0, s = 0, t = 0;   // deg 1
  BigRat mu = 1;                       // deg 2, 3
  std::array<BigRat, 3> rq{0, 0, 0};   // deg 2: r0 x^2 + r1 xz + r2 z^2
  RatMatrix M, N;                      // deg 2, 3: M; deg 4: M (2x2), N (4x4)

  static Transformation identity(int degree) {
    switch (degree) {
    case 1:
      return weierstrass(1, 0, 0, 0);
    case 2:
      return quartic(1, {0, 0, 0}, RatMatrix::identity(2));
    case 3:
      return cubic(1, RatMatrix::identity(3));
    case 4:
      return quadric_pair(RatMatrix::identity(2), RatMatrix::identity(4));
    }
    throw Error("degree must be 1..4", "Transformation::identity");
  }
  static Transformation weierstrass(BigRat u, BigRat r, BigRat s, BigRat t) {
    if (u == 0)
      throw Error("u must be nonzero", "Transformation");
    Transformation g;
    g.degree = 1;
    g.u = u;
    g.r = r;
    g.s = s;
    g.t = t;
    return g;
  }
  static Transformation quartic(BigRat mu, std::array<BigRat, 3> r, RatMatrix M) {
    check_matrix(M, 2);
    if (mu == 0)
      throw Error("mu must be nonzero", "Transformation");
    Transformation g;
    g.degree = 2;
    g.mu = mu;
    g.rq = r;
    g.M = std::move(M);
    return g;
  }
  static Transformation cubic(BigRat mu, RatMatrix M) {
    check_matrix(M, 3);
    if (mu == 0)
      throw Error("mu must be nonzero", "Transformation");
    Transformation g;
    g.degree = 3;
    g.mu = mu;
    g.M = std::move(M);
    return g;
  }
  static Transformation quadric_pair(RatMatrix M, RatMatrix N) {
    check_matrix(M, 2);
    check_matrix(N, 4);
    Transformation g;
    g.degree = 4;
    g.M = std::move(M);
    g.N = std::move(N);
    return g;
  }

  friend bool operator==(const Transformation &, const Transformation &) = default;

private:
  static void check_matrix(const RatMatrix &m, std::size_t n) {
    if (m.rows() != n || m.cols() != n)
      throw Error("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix",
                  "Transformation");
    if (det(m) == 0)
      throw Error("matrix is singular", "Transformation");
  }
};

struct Invariants {
  BigRat c4, c6, delta;
  friend bool operator==(const Invariants &, const Invariants &) = default;
};

inline BigRat det_transformation(const Transformation &g) {
  switch (g.degree) {
  case 1:
    return 1 / g.u;
  case 2:
  case 3:
    return g.mu * det(g.M);
  case 4:
    return det(g.M) * det(g.N);
  }
  throw Error("bad degree", "det_transformation");
}

namespace detail {

// Sparse polynomial in a fixed number of variables.
using Mono = std::array<int, 4>;
using Poly = std::map<Mono, BigRat>;

inline Poly poly_mul(const Poly &a, const Poly &b) {
  Poly r;
  for (const auto &[ma, ca] : a)
    for (const auto &[mb, cb] : b) {
      Mono m;
      for (int i = 0; i < 4; ++i)
        m[i] = ma[i] + mb[i];
      r[m] += ca * cb;
    }
  std::erase_if(r, [](const auto &kv) { return kv.second == 0; });
  return r;
}

// Substitute old variable j by sum_i lin(i, j) * new_i in a form over `vars` variables.
inline Poly substitute(const Poly &f, const RatMatrix &lin, int vars) {
  std::vector<Poly> L(vars);
  for (int j = 0; j < vars; ++j)
    for (int i = 0; i < vars; ++i)
      if (lin(i, j) != 0) {
        Mono m{};
        m[i] = 1;
        L[j][m] = lin(i, j);
      }
  Poly out;
  for (const auto &[mono, c] : f) {
    Poly term{{Mono{}, c}};
    for (int j = 0; j < vars; ++j)
      for (int e = 0; e < mono[j]; ++e)
        term = poly_mul(term, L[j]);
    for (const auto &[m, v] : term)
      out[m] += v;
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

inline BigRat coeff(const Poly &f, const Mono &m) {
  auto it = f.find(m);
  return it == f.end() ? BigRat(0) : it->second;
}

// Binary form sum_k c_k x^{d-k} z^k.
inline Poly binary_form(const std::vector<BigRat> &c) {
  Poly f;
  int d = static_cast<int>(c.size()) - 1;
  for (int k = 0; k <= d; ++k)
    if (c[k] != 0)
      f[Mono{d - k, k, 0, 0}] = c[k];
  return f;
}
inline std::vector<BigRat> binary_coeffs(const Poly &f, int d) {
  std::vector<BigRat> c(d + 1);
  for (int k = 0; k <= d; ++k)
    c[k] = coeff(f, Mono{d - k, k, 0, 0});
  return c;
}

inline const std::array<Mono, 10> &cubic_monos() {
  static const std::array<Mono, 10> m{{{3, 0, 0, 0},
                                       {0, 3, 0, 0},
                                       {0, 0, 3, 0},
                                       {2, 1, 0, 0},
                                       {2, 0, 1, 0},
                                       {1, 2, 0, 0},
                                       {0, 2, 1, 0},
                                       {1, 0, 2, 0},
                                       {0, 1, 2, 0},
                                       {1, 1, 1, 0}}};
  return m;
}

// Index pairs for x1^2 x1x2 x1x3 x1x4 x2^2 x2x3 x2x4 x3^2 x3x4 x4^2.
inline const std::array<std::pair<int, int>, 10> &quadric_pairs() {
  static const std::array<std::pair<int, int>, 10> p{
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};
  return p;
}

inline RatMatrix gram(const std::vector<BigRat> &c, std::size_t offset) {
  RatMatrix A(4, 4);
  for (std::size_t k = 0; k < 10; ++k) {
    auto [i, j] = quadric_pairs()[k];
    if (i == j)
      A(i, i) = c[offset + k];
    else
      A(i, j) = A(j, i) = c[offset + k] / 2;
  }
  return A;
}

inline void ungram(const RatMatrix &A, std::vector<BigRat> &c, std::size_t offset) {
  for (std::size_t k = 0; k < 10; ++k) {
    auto [i, j] = quadric_pairs()[k];
    c[offset + k] = i == j ? A(i, i) : BigRat(2 * A(i, j));
  }
}

inline std::pair<BigRat, BigRat> quartic_IJ(const std::vector<BigRat> &f) {
  const BigRat &a = f[0], &b = f[1], &c = f[2], &d = f[3], &e = f[4];
  BigRat I = 12 * a * e - 3 * b * d + c * c;
  BigRat J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  return {I, J};
}

template <std::size_t K>
BigRat eval_cubic_table(const std::array<CubicTerm, K> &tab, const std::vector<BigRat> &c) {
  BigRat sum = 0;
  for (const auto &term : tab) {
    BigRat v = BigRat(term.coeff);
    for (int i = 0; i < 10; ++i)
      for (int e = 0; e < term.exps[i]; ++e)
        v *= c[i];
    sum += v;
  }
  return sum;
}

// Binary quartic det(x A + z B) by interpolation at z/x = 0..4.
inline std::vector<BigRat> pencil_quartic(const RatMatrix &A, const RatMatrix &B) {
  std::array<BigRat, 5> val;
  for (int k = 0; k < 5; ++k) {
    RatMatrix C(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        C(i, j) = A(i, j) + k * B(i, j);
    val[k] = det(C);
  }
  RatMatrix V(5, 5);
  for (int k = 0; k < 5; ++k)
    for (int j = 0; j < 5; ++j)
      V(k, j) = rpow(BigRat(k), j);
  RatMatrix Vi = inverse(V);
  std::vector<BigRat> g(5);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k)
      g[j] += Vi(j, k) * val[k];
  return g;
}

} // namespace detail

// Scaling constants that match each degree to the Weierstrass c4, c6
// (see tests/fixtures/calibration.json and tools/derive_invariants.py).
namespace calibration {
inline const BigRat deg2_c4_per_I{1}, deg2_c6_per_J{1, 2};
inline const BigRat deg3_c4_per_S{1}, deg3_c6_per_T{-1};
inline const BigRat deg4_c4_per_I{256}, deg4_c6_per_J{2048};
} // namespace calibration

inline Invariants invariants(const GenusOneEquation &phi) {
  const auto &c = phi.coeffs();
  BigRat c4, c6;
  switch (phi.degree()) {
  case 1: {
    const BigRat &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a6 = c[4];
    BigRat b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
    c4 = b2 * b2 - 24 * b4;
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    break;
  }
  case 2: {
    const BigRat &g0 = c[0], &g1 = c[1], &g2 = c[2];
    std::vector<BigRat> F{4 * c[3] + g0 * g0, 4 * c[4] + 2 * g0 * g1,
                          4 * c[5] + g1 * g1 + 2 * g0 * g2, 4 * c[6] + 2 * g1 * g2,
                          4 * c[7] + g2 * g2};
    auto [I, J] = detail::quartic_IJ(F);
    c4 = calibration::deg2_c4_per_I * I;
    c6 = calibration::deg2_c6_per_J * J;
    break;
  }
  case 3:
    c4 = calibration::deg3_c4_per_S * detail::eval_cubic_table(detail::kCubicS, c);
    c6 = calibration::deg3_c6_per_T * detail::eval_cubic_table(detail::kCubicT, c);
    break;
  case 4: {
    auto G = detail::pencil_quartic(detail::gram(c, 0), detail::gram(c, 10));
    auto [I, J] = detail::quartic_IJ(G);
    c4 = calibration::deg4_c4_per_I * I;
    c6 = calibration::deg4_c6_per_J * J;
    break;
  }
  }
  return {c4, c6, (c4 * c4 * c4 - c6 * c6) / 1728};
}

inline bool is_integral(const GenusOneEquation &phi) {
  for (const auto &x : phi.coeffs())
    if (!is_integer(x))
      return false;
  return true;
}

inline bool is_integral_at(const GenusOneEquation &phi, const BigInt &p) {
  for (const auto &x : phi.coeffs())
    if (denom(x) % p == 0)
      return false;
  return true;
}

inline GenusOneEquation apply(const Transformation &g, const GenusOneEquation &phi) {
  if (g.degree != phi.degree())
    throw Error("degree mismatch: transformation of degree " + std::to_string(g.degree) +
                    " applied to equation of degree " + std::to_string(phi.degree()),
                "apply");
  const auto &c = phi.coeffs();
  switch (g.degree) {
  case 1: {
    const BigRat &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a6 = c[4];
    const BigRat &u = g.u, &r = g.r, &s = g.s, &t = g.t;
    BigRat u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    return GenusOneEquation::weierstrass(
        (a1 + 2 * s) / u, (a2 - s * a1 + 3 * r - s * s) / u2,
        (a3 + r * a1 + 2 * t) / u3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4,
        (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6);
  }
  case 2: {
    detail::Poly gq = detail::substitute(detail::binary_form({c[0], c[1], c[2]}), g.M, 2);
    detail::Poly fq =
        detail::substitute(detail::binary_form({c[3], c[4], c[5], c[6], c[7]}), g.M, 2);
    detail::Poly rq = detail::binary_form({g.rq[0], g.rq[1], g.rq[2]});
    auto gv = detail::binary_coeffs(gq, 2);
    auto fv = detail::binary_coeffs(fq, 4);
    auto rg = detail::binary_coeffs(detail::poly_mul(rq, gq), 4);
    auto rr = detail::binary_coeffs(detail::poly_mul(rq, rq), 4);
    std::vector<BigRat> out(8);
    for (int k = 0; k < 3; ++k)
      out[k] = g.mu * (gv[k] + 2 * g.rq[k]);
    for (int k = 0; k < 5; ++k)
      out[3 + k] = g.mu * g.mu * (fv[k] - rg[k] - rr[k]);
    return {2, out};
  }
  case 3: {
    detail::Poly f;
    for (int k = 0; k < 10; ++k)
      if (c[k] != 0)
        f[detail::cubic_monos()[k]] = c[k];
    detail::Poly h = detail::substitute(f, g.M, 3);
    std::vector<BigRat> out(10);
    for (int k = 0; k < 10; ++k)
      out[k] = g.mu * detail::coeff(h, detail::cubic_monos()[k]);
    return {3, out};
  }
  case 4: {
    std::array<RatMatrix, 2> A{detail::gram(c, 0), detail::gram(c, 10)};
    RatMatrix Nt = g.N.transpose();
    std::vector<BigRat> out(20);
    for (int i = 0; i < 2; ++i) {
      RatMatrix sum(4, 4);
      for (int k = 0; k < 2; ++k) {
        if (g.M(i, k) == 0)
          continue;
        RatMatrix term = g.N * A[k] * Nt;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            sum(a, b) += g.M(i, k) * term(a, b);
      }
      detail::ungram(sum, out, 10 * i);
    }
    return {4, out};
  }
  }
  throw Error("bad degree", "apply");
}

// The transformation equal to applying g1 and then g2.
inline Transformation compose(const Transformation &g1, const Transformation &g2) {
  if (g1.degree != g2.degree)
    throw Error("degree mismatch", "compose");
  switch (g1.degree) {
  case 1:
    return Transformation::weierstrass(
        g1.u * g2.u, g1.r + g1.u * g1.u * g2.r, g1.s + g1.u * g2.s,
        g1.t + g1.u * g1.u * g1.s * g2.r + g1.u * g1.u * g1.u * g2.t);
  case 2: {
    auto r1 = detail::binary_coeffs(
        detail::substitute(detail::binary_form({g1.rq[0], g1.rq[1], g1.rq[2]}), g2.M, 2), 2);
    std::array<BigRat, 3> r;
    for (int k = 0; k < 3; ++k)
      r[k] = g2.rq[k] / g1.mu + r1[k];
    return Transformation::quartic(g1.mu * g2.mu, r, g2.M * g1.M);
  }
  case 3:
    return Transformation::cubic(g1.mu * g2.mu, g2.M * g1.M);
  case 4:
    return Transformation::quadric_pair(g2.M * g1.M, g2.N * g1.N);
  }
  throw Error("bad degree", "compose");
}

inline GenusOneEquation jacobian(const GenusOneEquation &phi) {
  Invariants inv = invariants(phi);
  if (inv.delta == 0)
    throw Error("singular equation", "jacobian");
  return GenusOneEquation::weierstrass(0, 0, 0, -27 * inv.c4, -54 * inv.c6);
}

// ---- text format ----

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits "k1=v1; k2=v2" into an ordered key map.
inline std::map<std::string, std::string> parse_fields(std::string_view text,
                                                       const char *where) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string_view part =
        trim(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos
                                                             : semi - pos));
    if (!part.empty()) {
      auto eq = part.find('=');
      if (eq == std::string_view::npos)
        throw Error("expected key=value, got '" + std::string(part) + "'", where);
      std::string key(trim(part.substr(0, eq)));
      if (out.count(key))
        throw Error("duplicate key '" + key + "'", where);
      out[key] = std::string(trim(part.substr(eq + 1)));
    }
    if (semi == std::string_view::npos)
      break;
    pos = semi + 1;
  }
  return out;
}

inline std::vector<BigRat> parse_list(std::string_view s, const char *where) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error("expected [..] list, got '" + std::string(s) + "'", where);
  s = trim(s.substr(1, s.size() - 2));
  std::vector<BigRat> out;
  if (s.empty())
    return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = s.find(',', pos);
    out.push_back(parse_rational(trim(s.substr(pos, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - pos))));
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

// [[..],[..]], diag(..), or id (needs n).
inline RatMatrix parse_matrix(std::string_view s, std::optional<std::size_t> n,
                              const char *where) {
  s = trim(s);
  if (s == "id" || s == "I") {
    if (!n)
      throw Error("identity matrix size unknown", where);
    return RatMatrix::identity(*n);
  }
  if (s.starts_with("diag(") && s.ends_with(")")) {
    std::string inner = "[" + std::string(s.substr(5, s.size() - 6)) + "]";
    return RatMatrix::diag(parse_list(inner, where));
  }
  if (s.size() < 4 || s.front() != '[' || s.back() != ']')
    throw Error("malformed matrix '" + std::string(s) + "'", where);
  std::string_view inner = trim(s.substr(1, s.size() - 2));
  std::vector<std::vector<BigRat>> rows;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    std::size_t open = inner.find('[', pos);
    if (open == std::string_view::npos)
      break;
    std::size_t close = inner.find(']', open);
    if (close == std::string_view::npos)
      throw Error("unbalanced brackets in matrix", where);
    rows.push_back(parse_list(inner.substr(open, close - open + 1), where));
    pos = close + 1;
  }
  if (rows.empty())
    throw Error("empty matrix", where);
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw Error("ragged matrix", where);
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

inline std::string join(const std::vector<BigRat> &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += to_string(v[i]);
  }
  return s + "]";
}

} // namespace detail

// "deg=<n>; coeffs=[...]"
inline GenusOneEquation parse_equation(std::string_view text) {
  auto f = detail::parse_fields(text, "parse_equation");
  if (!f.count("deg") || !f.count("coeffs") || f.size() != 2)
    throw Error("expected exactly the keys deg and coeffs", "parse_equation");
  BigInt d = parse_int(f["deg"]);
  if (d < 1 || d > 4)
    throw Error("degree must be 1..4", "parse_equation");
  return {static_cast<int>(d), detail::parse_list(f["coeffs"], "parse_equation")};
}

inline std::string format_equation(const GenusOneEquation &phi) {
  return "deg=" + std::to_string(phi.degree()) + "; coeffs=" + detail::join(phi.coeffs());
}

// Mini-language, keys separated by ';':
//   deg 1: u=<rat>; r=<rat>; s=<rat>; t=<rat>
//   deg 2: mu=<rat>; r=[r0,r1,r2]; M=[[m11,m12],[m21,m22]]
//   deg 3: mu=<rat>; M=[[..],[..],[..]] | diag(..) | id
//   deg 4: M=<2x2>; N=<4x4>
// Omitted keys take identity values; deg=<n> may be given explicitly.
inline Transformation parse_transformation(std::string_view text,
                                           std::optional<int> degree_hint = std::nullopt) {
  const char *where = "parse_transformation";
  auto f = detail::parse_fields(text, where);
  std::optional<int> deg = degree_hint;
  if (f.count("deg")) {
    int d = static_cast<int>(parse_int(f["deg"]));
    if (deg && *deg != d)
      throw Error("deg disagrees with the equation degree", where);
    deg = d;
    f.erase("deg");
  }
  if (!deg) {
    if (f.count("u") || f.count("s") || f.count("t"))
      deg = 1;
    else if (f.count("N"))
      deg = 4;
    else if (f.count("r") && detail::trim(f["r"]).starts_with("["))
      deg = 2;
    else if (f.count("M")) {
      auto m = detail::parse_matrix(f["M"], std::nullopt, where);
      deg = m.rows() == 3 ? 3 : 2;
    } else
      throw Error("cannot infer the degree; add deg=<n>", where);
  }
  auto rat = [&](const char *key, BigRat dflt) {
    return f.count(key) ? parse_rational(f[key]) : dflt;
  };
  auto mat = [&](const char *key, std::size_t n) {
    return f.count(key) ? detail::parse_matrix(f[key], n, where) : RatMatrix::identity(n);
  };
  auto allow = [&](std::initializer_list<const char *> keys) {
    for (const auto &[k, v] : f) {
      bool ok = false;
      for (const char *a : keys)
        ok = ok || k == a;
      if (!ok)
        throw Error("unexpected key '" + k + "' for degree " + std::to_string(*deg), where);
    }
  };
  switch (*deg) {
  case 1:
    allow({"u", "r", "s", "t"});
    return Transformation::weierstrass(rat("u", 1), rat("r", 0), rat("s", 0), rat("t", 0));
  case 2: {
    allow({"mu", "r", "M"});
    std::array<BigRat, 3> r{0, 0, 0};
    if (f.count("r")) {
      auto v = detail::parse_list(f["r"], where);
      if (v.size() != 3)
        throw Error("r needs three entries", where);
      r = {v[0], v[1], v[2]};
    }
    return Transformation::quartic(rat("mu", 1), r, mat("M", 2));
  }
  case 3:
    allow({"mu", "M"});
    return Transformation::cubic(rat("mu", 1), mat("M", 3));
  case 4:
    allow({"M", "N"});
    return Transformation::quadric_pair(mat("M", 2), mat("N", 4));
  }
  throw Error("degree must be 1..4", where);
}

inline std::string format_transformation(const Transformation &g) {
  switch (g.degree) {
  case 1:
    return "u=" + to_string(g.u) + "; r=" + to_string(g.r) + "; s=" + to_string(g.s) +
           "; t=" + to_string(g.t);
  case 2:
    return "mu=" + to_string(g.mu) + "; r=" + detail::join({g.rq[0], g.rq[1], g.rq[2]}) +
           "; M=" + g.M.to_string();
  case 3:
    return "mu=" + to_string(g.mu) + "; M=" + g.M.to_string();
  case 4:
    return "M=" + g.M.to_string() + "; N=" + g.N.to_string();
  }
  throw Error("bad degree", "format_transformation");
}

} // namespace genus1
