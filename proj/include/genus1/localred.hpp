#pragma once

#include "genus1/arith.hpp"
#include "genus1/detail/fp_poly.hpp"
#include "genus1/equations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace genus1 {

struct KodairaType {
  enum class Kind { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };
  Kind kind = Kind::I;
  int n = 0; // only for I and Istar

  static KodairaType I(int n) { return {Kind::I, n}; }
  static KodairaType Istar(int n) { return {Kind::Istar, n}; }
  static KodairaType II() { return {Kind::II, 0}; }
  static KodairaType III() { return {Kind::III, 0}; }
  static KodairaType IV() { return {Kind::IV, 0}; }
  static KodairaType IVstar() { return {Kind::IVstar, 0}; }
  static KodairaType IIIstar() { return {Kind::IIIstar, 0}; }
  static KodairaType IIstar() { return {Kind::IIstar, 0}; }

  bool multiplicative() const { return kind == Kind::I && n > 0; }
  bool additive() const { return kind != Kind::I; }

  // Standard ν(Δ_min) at p >= 5.
  int standard_valuation() const {
    switch (kind) {
    case Kind::I:
      return n;
    case Kind::Istar:
      return 6 + n;
    case Kind::II:
      return 2;
    case Kind::III:
      return 3;
    case Kind::IV:
      return 4;
    case Kind::IVstar:
      return 8;
    case Kind::IIIstar:
      return 9;
    case Kind::IIstar:
      return 10;
    }
    return -1;
  }

  std::string to_string() const {
    switch (kind) {
    case Kind::I:
      return "I" + std::to_string(n);
    case Kind::Istar:
      return "I" + std::to_string(n) + "*";
    case Kind::II:
      return "II";
    case Kind::III:
      return "III";
    case Kind::IV:
      return "IV";
    case Kind::IVstar:
      return "IV*";
    case Kind::IIIstar:
      return "III*";
    case Kind::IIstar:
      return "II*";
    }
    return "?";
  }

  static KodairaType parse(std::string_view s) {
    const char *where = "KodairaType::parse";
    std::string t(detail::trim(s));
    if (t == "II")
      return II();
    if (t == "III")
      return III();
    if (t == "IV")
      return IV();
    if (t == "IV*")
      return IVstar();
    if (t == "III*")
      return IIIstar();
    if (t == "II*")
      return IIstar();
    bool star = !t.empty() && t.back() == '*';
    if (star)
      t.pop_back();
    if (t.size() >= 2 && t[0] == 'I' &&
        std::all_of(t.begin() + 1, t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int n = std::stoi(t.substr(1));
      return star ? Istar(n) : I(n);
    }
    throw Error("unknown Kodaira symbol '" + std::string(s) + "'", where);
  }

  friend bool operator==(const KodairaType &, const KodairaType &) = default;
};

enum class PhiKind { Cyclic, Klein };

struct PhiElement {
  PhiKind kind = PhiKind::Cyclic;
  int a = 0; // cyclic residue, or first Klein coordinate
  int b = 0; // second Klein coordinate

  static PhiElement cyclic(int i) { return {PhiKind::Cyclic, i, 0}; }
  static PhiElement klein(int a, int b) { return {PhiKind::Klein, a, b}; }

  std::string to_string() const {
    return kind == PhiKind::Cyclic ? std::to_string(a)
                                   : std::to_string(a) + "," + std::to_string(b);
  }
  friend bool operator==(const PhiElement &, const PhiElement &) = default;
  friend auto operator<=>(const PhiElement &, const PhiElement &) = default;
};

struct PhiGroup {
  PhiKind kind = PhiKind::Cyclic;
  int order = 1;

  static PhiGroup cyclic(int n) {
    if (n < 1)
      throw Error("cyclic order must be positive", "PhiGroup");
    return {PhiKind::Cyclic, n};
  }
  static PhiGroup klein() { return {PhiKind::Klein, 4}; }

  PhiElement zero() const {
    return kind == PhiKind::Cyclic ? PhiElement::cyclic(0) : PhiElement::klein(0, 0);
  }
  bool contains(const PhiElement &e) const {
    if (e.kind != kind)
      return false;
    if (kind == PhiKind::Cyclic)
      return e.a >= 0 && e.a < order && e.b == 0;
    return (e.a == 0 || e.a == 1) && (e.b == 0 || e.b == 1);
  }
  PhiElement add(const PhiElement &x, const PhiElement &y) const {
    if (kind == PhiKind::Cyclic)
      return PhiElement::cyclic((x.a + y.a) % order);
    return PhiElement::klein((x.a + y.a) % 2, (x.b + y.b) % 2);
  }
  PhiElement neg(const PhiElement &x) const {
    if (kind == PhiKind::Cyclic)
      return PhiElement::cyclic((order - x.a) % order);
    return x;
  }
  // Index in 0..order-1; Klein (a,b) -> a + 2b.
  int index(const PhiElement &e) const { return kind == PhiKind::Cyclic ? e.a : e.a + 2 * e.b; }
  PhiElement element(int i) const {
    return kind == PhiKind::Cyclic ? PhiElement::cyclic(i) : PhiElement::klein(i % 2, i / 2);
  }
  std::vector<PhiElement> elements() const {
    std::vector<PhiElement> v;
    for (int i = 0; i < order; ++i)
      v.push_back(element(i));
    return v;
  }
  // "i" or "a,b"
  PhiElement parse(std::string_view s) const {
    const char *where = "PhiGroup::parse";
    auto comma = s.find(',');
    PhiElement e;
    if (kind == PhiKind::Cyclic) {
      if (comma != std::string_view::npos)
        throw Error("expected a cyclic element, got '" + std::string(s) + "'", where);
      BigInt v = parse_int(s);
      e = PhiElement::cyclic(static_cast<int>(mod(v, BigInt(order))));
    } else {
      if (comma == std::string_view::npos)
        throw Error("expected a Klein element a,b, got '" + std::string(s) + "'", where);
      e = PhiElement::klein(static_cast<int>(mod(parse_int(s.substr(0, comma)), 2)),
                            static_cast<int>(mod(parse_int(s.substr(comma + 1)), 2)));
    }
    return e;
  }

  friend bool operator==(const PhiGroup &, const PhiGroup &) = default;
};

inline PhiGroup phi_group_of(const KodairaType &k) {
  using K = KodairaType::Kind;
  switch (k.kind) {
  case K::I:
    return PhiGroup::cyclic(std::max(k.n, 1));
  case K::Istar:
    return k.n % 2 == 0 ? PhiGroup::klein() : PhiGroup::cyclic(4);
  case K::II:
  case K::IIstar:
    return PhiGroup::cyclic(1);
  case K::III:
  case K::IIIstar:
    return PhiGroup::cyclic(2);
  case K::IV:
  case K::IVstar:
    return PhiGroup::cyclic(3);
  }
  return PhiGroup::cyclic(1);
}

struct ReductionData {
  KodairaType kodaira;
  int vDeltaMin = 0;
  int cp = 1;
  PhiGroup phi;
  bool split = true; // Frobenius acts trivially on the components
  GenusOneEquation minimalModel;
  Transformation toMinimal;
};

// Affine point or the point at infinity.
struct Point {
  bool inf = true;
  BigRat x, y;
  static Point infinity() { return {}; }
  static Point affine(BigRat x, BigRat y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const Point &, const Point &) = default;
};

inline bool on_curve(const GenusOneEquation &E, const Point &P) {
  if (P.inf)
    return true;
  const auto &a = E.coeffs();
  return P.y * P.y + a[0] * P.x * P.y + a[2] * P.y ==
         P.x * P.x * P.x + a[1] * P.x * P.x + a[3] * P.x + a[4];
}

inline Point negate(const GenusOneEquation &E, const Point &P) {
  if (P.inf)
    return P;
  const auto &a = E.coeffs();
  return Point::affine(P.x, -P.y - a[0] * P.x - a[2]);
}

inline Point add(const GenusOneEquation &E, const Point &P, const Point &Q) {
  if (P.inf)
    return Q;
  if (Q.inf)
    return P;
  const auto &a = E.coeffs();
  BigRat lambda, mu;
  if (P.x != Q.x) {
    lambda = (Q.y - P.y) / (Q.x - P.x);
    mu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
  } else {
    if (P.y + Q.y + a[0] * Q.x + a[2] == 0)
      return Point::infinity();
    lambda = (3 * P.x * P.x + 2 * a[1] * P.x + a[3] - a[0] * P.y) / (2 * P.y + a[0] * P.x + a[2]);
    mu = P.y - lambda * P.x;
  }
  BigRat x3 = lambda * lambda + a[0] * lambda - a[1] - P.x - Q.x;
  return Point::affine(x3, -(lambda + a[0]) * x3 - mu - a[2]);
}

inline Point multiply(const GenusOneEquation &E, long k, Point P) {
  if (k < 0) {
    k = -k;
    P = negate(E, P);
  }
  Point R = Point::infinity();
  while (k) {
    if (k & 1)
      R = add(E, R, P);
    P = add(E, P, P);
    k >>= 1;
  }
  return R;
}

// Coordinates of P on apply(g, E).
inline Point transform_point(const Transformation &g, const Point &P) {
  if (P.inf)
    return P;
  BigRat x = (P.x - g.r) / (g.u * g.u);
  BigRat y = (P.y - g.s * g.u * g.u * x - g.t) / (g.u * g.u * g.u);
  return Point::affine(x, y);
}

namespace detail {

// How the component group is read off the minimal model.
struct TateTrace {
  // Roots of the level polynomial whose residues label components.
  std::vector<BigInt> labelRoots;
  // I_n*: scale of the final level and whether it was in y (odd n) or x (even n).
  BigInt mx = 0, my = 0;
  bool yLevel = false;
  BigInt nearRoot = 0; // I_n*, n >= 1: residue of x/p on the near component
};

struct TateResult {
  ReductionData data;
  TateTrace trace;
};

inline FpPoly fp(std::vector<BigRat> c, const BigInt &p) {
  std::vector<BigInt> v;
  for (const auto &x : c)
    v.push_back(rat_mod(x, p));
  return FpPoly(v, p);
}

// a / p^k reduced mod p (a must be divisible by p^k at p).
inline BigInt scaled(const BigRat &a, const BigInt &pk, const BigInt &p) {
  return rat_mod(a / pk, p);
}

// Roots mod p of Y^2 + b Y - c; second = true when the roots are distinct.
inline std::pair<std::vector<BigInt>, bool> quadratic(const BigInt &b, const BigInt &c,
                                                      const BigInt &p) {
  FpPoly q({BigInt(-c), b, 1}, p);
  auto rm = roots_with_multiplicity(q);
  bool distinct = !(rm.size() == 1 && rm[0].second == 2);
  std::vector<BigInt> roots;
  for (auto &[r, m] : rm)
    roots.push_back(r);
  return {roots, distinct};
}

inline TateResult tate_run(const GenusOneEquation &E, const BigInt &p) {
  const char *where = "tate";
  require_prime(p, where);
  if (E.degree() != 1)
    throw Error("tate needs a Weierstrass equation", where);
  if (invariants(E).delta == 0)
    throw Error("singular equation", where);

  GenusOneEquation cur = E;
  Transformation total = Transformation::identity(1);
  auto change = [&](const BigRat &u, const BigRat &r, const BigRat &s, const BigRat &t) {
    Transformation g = Transformation::weierstrass(u, r, s, t);
    cur = apply(g, cur);
    total = compose(total, g);
  };
  auto a = [&](int i) -> const BigRat & { return cur[i]; }; // 0:a1 1:a2 2:a3 3:a4 4:a6
  auto v = [&](const BigRat &q) { return val_or(q, p, 1L << 20); };

  // Clear denominators at p.
  {
    static constexpr int w[] = {1, 2, 3, 4, 6};
    long k = 0;
    for (int i = 0; i < 5; ++i) {
      long vi = v(a(i));
      if (vi < 0)
        k = std::max(k, (-vi + w[i] - 1) / w[i]);
    }
    if (k > 0)
      change(BigRat(1, ipow(p, static_cast<unsigned>(k))), 0, 0, 0);
  }

  TateResult res;
  auto finish = [&](KodairaType k, int cp, bool split) {
    res.data.kodaira = k;
    res.data.vDeltaMin = static_cast<int>(v(invariants(cur).delta));
    res.data.cp = cp;
    res.data.phi = phi_group_of(k);
    res.data.split = split;
    res.data.minimalModel = cur;
    res.data.toMinimal = total;
    return res;
  };

  const BigInt p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  for (;;) {
    long n = v(invariants(cur).delta);
    if (n == 0)
      return finish(KodairaType::I(0), 1, true);

    // Move the singular point of the reduction to (0,0).
    {
      BigInt x0 = -1, y0 = -1;
      if (p == 2) {
        for (int x = 0; x < 2 && x0 < 0; ++x)
          for (int y = 0; y < 2 && x0 < 0; ++y) {
            BigRat X = x, Y = y;
            BigRat F = Y * Y + a(0) * X * Y + a(2) * Y - X * X * X - a(1) * X * X - a(3) * X - a(4);
            BigRat Fx = a(0) * Y - 3 * X * X - 2 * a(1) * X - a(3);
            BigRat Fy = 2 * Y + a(0) * X + a(2);
            if (rat_mod(F, 2) == 0 && rat_mod(Fx, 2) == 0 && rat_mod(Fy, 2) == 0) {
              x0 = x;
              y0 = y;
            }
          }
      } else {
        // y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 after completing the square.
        BigRat b2 = a(0) * a(0) + 4 * a(1), b4 = 2 * a(3) + a(0) * a(2),
               b6 = a(2) * a(2) + 4 * a(4);
        for (auto &[r, m] : roots_with_multiplicity(fp({b6, 2 * b4, b2, 4}, p)))
          if (m >= 2)
            x0 = r;
        if (x0 >= 0)
          y0 = rat_mod(-(a(0) * BigRat(x0) + a(2)) / 2, p);
      }
      if (x0 < 0)
        throw Error("no singular point found on the reduction", where);
      change(1, BigRat(x0), 0, BigRat(y0));
    }

    BigRat b2 = a(0) * a(0) + 4 * a(1);
    if (v(b2) == 0) {
      auto [roots, distinct] = quadratic(rat_mod(a(0), p), rat_mod(a(1), p), p);
      (void)distinct;
      bool split = !roots.empty();
      res.trace.labelRoots = roots;
      int cp = split ? static_cast<int>(n) : (n % 2 == 0 ? 2 : 1);
      return finish(KodairaType::I(static_cast<int>(n)), cp, split);
    }
    if (v(a(4)) < 2)
      return finish(KodairaType::II(), 1, true);
    {
      BigRat b8 = a(0) * a(0) * a(4) + 4 * a(1) * a(4) - a(0) * a(2) * a(3) +
                  a(1) * a(2) * a(2) - a(3) * a(3);
      if (v(b8) < 3)
        return finish(KodairaType::III(), 2, true);
    }
    {
      BigRat b6 = a(2) * a(2) + 4 * a(4);
      if (v(b6) < 3) {
        // Make p | a1, a2 so that y/p lands on the level quadratic.
        BigInt s = p == 2 ? rat_mod(a(1), 2) : rat_mod(-a(0) / 2, p);
        change(1, 0, BigRat(s), 0);
        auto [roots, distinct] = quadratic(scaled(a(2), p, p), scaled(a(4), p2, p), p);
        res.trace.labelRoots = roots;
        return finish(KodairaType::IV(), roots.empty() ? 1 : 3, !roots.empty());
      }
    }

    // p | a1, a2; p^2 | a3, a4; p^3 | a6.
    if (p == 2)
      change(1, 0, BigRat(rat_mod(a(1), 2)), BigRat(2 * rat_mod(a(4) / 4, 2)));
    else
      change(1, 0, BigRat(rat_mod(-a(0) / 2, p)), BigRat(rat_mod(-a(2) / 2, p2)));

    BigInt b = scaled(a(1), p, p), c = scaled(a(3), p2, p), d = scaled(a(4), p3, p);
    FpPoly P = FpPoly({d, c, b, 1}, p);
    BigInt disc = mod(b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d +
                          18 * b * c * d,
                      p);
    auto rm = roots_with_multiplicity(P);
    if (disc != 0) {
      for (auto &[r, m] : rm)
        res.trace.labelRoots.push_back(r);
      int cp = 1 + static_cast<int>(rm.size());
      return finish(KodairaType::Istar(0), cp, cp == 4);
    }
    BigInt dbl = -1, tpl = -1;
    for (auto &[r, m] : rm) {
      if (m == 2)
        dbl = r;
      if (m == 3)
        tpl = r;
    }
    if (dbl >= 0) {
      change(1, BigRat(p * dbl), 0, 0);
      res.trace.nearRoot = mod(-scaled(a(1), p, p), p);
      int m = 1;
      BigInt mx = p2, my = p2;
      for (;;) {
        auto [yr, ydistinct] = quadratic(scaled(a(2), my, p), scaled(a(4), mx * my, p), p);
        if (ydistinct) {
          res.trace.labelRoots = yr;
          res.trace.mx = mx;
          res.trace.my = my;
          res.trace.yLevel = true;
          return finish(KodairaType::Istar(m), yr.empty() ? 2 : 4, !yr.empty());
        }
        change(1, 0, 0, BigRat(my * yr[0]));
        my *= p;
        ++m;
        FpPoly R = FpPoly({scaled(a(4), mx * my, p), scaled(a(3), p * mx, p),
                           scaled(a(1), p, p)},
                          p);
        auto xr = roots_with_multiplicity(R);
        if (!(xr.size() == 1 && xr[0].second == 2)) {
          for (auto &[r, mult] : xr)
            res.trace.labelRoots.push_back(r);
          res.trace.mx = mx;
          res.trace.my = my;
          res.trace.yLevel = false;
          return finish(KodairaType::Istar(m), xr.empty() ? 2 : 4, !xr.empty());
        }
        change(1, BigRat(mx * xr[0].first), 0, 0);
        mx *= p;
        ++m;
      }
    }
    if (tpl < 0)
      throw Error("unexpected root structure", where);
    change(1, BigRat(p * tpl), 0, 0);
    {
      auto [roots, distinct] = quadratic(scaled(a(2), p2, p), scaled(a(4), p4, p), p);
      if (distinct) {
        res.trace.labelRoots = roots;
        return finish(KodairaType::IVstar(), roots.empty() ? 1 : 3, !roots.empty());
      }
      change(1, 0, 0, BigRat(p2 * roots[0]));
    }
    if (v(a(3)) < 4)
      return finish(KodairaType::IIIstar(), 2, true);
    if (v(a(4)) < 6)
      return finish(KodairaType::IIstar(), 1, true);
    change(BigRat(p), 0, 0, 0);
  }
}

// Integer translation (r, t) with a3 and a4 vanishing mod p^K, found by Newton
// iteration on the gradient of the Weierstrass polynomial (multiplicative models).
inline std::pair<BigInt, BigInt> lift_node(const GenusOneEquation &E, const BigInt &p,
                                           unsigned K) {
  BigInt q = ipow(p, K);
  std::array<BigInt, 5> a;
  for (int i = 0; i < 5; ++i)
    a[i] = rat_mod(E[i], q);
  BigInt x = 0, y = 0;
  for (int it = 0; it < 4 * static_cast<int>(K) + 8; ++it) {
    BigInt Fx = mod(a[0] * y - 3 * x * x - 2 * a[1] * x - a[3], q);
    BigInt Fy = mod(2 * y + a[0] * x + a[2], q);
    if (Fx == 0 && Fy == 0)
      return {x, y};
    // J = [[-6x - 2a2, a1], [a1, 2]]
    BigInt j11 = -6 * x - 2 * a[1], j12 = a[0], j21 = a[0], j22 = 2;
    BigInt dinv = inverse_mod(mod(j11 * j22 - j12 * j21, q), q);
    BigInt dx = mod((j22 * Fx - j12 * Fy) * dinv, q);
    BigInt dy = mod((-j21 * Fx + j11 * Fy) * dinv, q);
    x = mod(x - dx, q);
    y = mod(y - dy, q);
  }
  throw Error("node refinement did not converge", "component_of_point");
}

} // namespace detail

namespace detail {

// Independent reading for I_n: min(i, n - i) = min(ν(2y + a1 x + a3), n/2) for a
// point (x, y) of the minimal model that does not lie on the identity component.
inline long multiplicative_distance(const GenusOneEquation &Emin, const BigInt &p,
                                    const Point &Q, long n) {
  BigRat w = 2 * Q.y + Emin[0] * Q.x + Emin[2];
  return std::min(val_or(w, p, n), n / 2);
}

} // namespace detail

inline ReductionData tate(const GenusOneEquation &E, const BigInt &p) {
  return detail::tate_run(E, p).data;
}

inline PhiElement component_of_point(const GenusOneEquation &E, const BigInt &p,
                                     const Point &P) {
  const char *where = "component_of_point";
  if (E.degree() != 1)
    throw Error("component_of_point needs a Weierstrass equation", where);
  if (!on_curve(E, P))
    throw Error("point is not on the curve", where);
  auto [rd, tr] = detail::tate_run(E, p);
  const PhiGroup &G = rd.phi;
  if (P.inf || G.order == 1)
    return G.zero();
  Point Q = transform_point(rd.toMinimal, P);
  auto v = [&](const BigRat &q) { return detail::val_or(q, p, 1L << 20); };
  if (v(Q.x) < 1 || v(Q.y) < 1)
    return G.zero();

  using K = KodairaType::Kind;
  auto label = [&](const BigInt &residue) -> int {
    for (std::size_t i = 0; i < tr.labelRoots.size(); ++i)
      if (tr.labelRoots[i] == residue)
        return static_cast<int>(i);
    throw Error("point does not reduce onto a labelled component", where);
  };
  switch (rd.kodaira.kind) {
  case K::I: {
    const long n = rd.kodaira.n;
    auto [r, t] = detail::lift_node(rd.minimalModel, p, static_cast<unsigned>(n + 2));
    BigRat x = Q.x - BigRat(r), y = Q.y - BigRat(t);
    long vx = v(x);
    if (2 * vx >= n) {
      if (n % 2)
        throw Error("inconsistent point valuation", where);
      return PhiElement::cyclic(static_cast<int>(n / 2));
    }
    if (tr.labelRoots.empty())
      throw Error("non-split node with a point off the middle component", where);
    BigRat alpha = BigRat(tr.labelRoots[0]);
    bool nearAlpha = v(y - alpha * x) > vx;
    return PhiElement::cyclic(static_cast<int>(nearAlpha ? vx : n - vx));
  }
  case K::III:
  case K::IIIstar:
    return PhiElement::cyclic(1);
  case K::IV:
    return PhiElement::cyclic(1 + label(detail::scaled(Q.y, p, p)));
  case K::IVstar:
    if (v(Q.x) < 2 || v(Q.y) < 2)
      throw Error("unexpected point valuation on IV*", where);
    return PhiElement::cyclic(1 + label(detail::scaled(Q.y, p * p, p)));
  case K::Istar: {
    BigInt x1 = detail::scaled(Q.x, p, p);
    if (rd.kodaira.n == 0) {
      static const PhiElement order3[] = {PhiElement::klein(1, 0), PhiElement::klein(0, 1),
                                          PhiElement::klein(1, 1)};
      if (tr.labelRoots.size() == 1)
        return PhiElement::klein(1, 1);
      return order3[label(x1)];
    }
    bool odd = rd.kodaira.n % 2 == 1;
    if (x1 == tr.nearRoot)
      return odd ? PhiElement::cyclic(2) : PhiElement::klein(1, 1);
    BigInt residue = tr.yLevel ? detail::scaled(Q.y, tr.my, p) : detail::scaled(Q.x, tr.mx, p);
    int i = label(residue);
    if (odd)
      return PhiElement::cyclic(i == 0 ? 1 : 3);
    return i == 0 ? PhiElement::klein(1, 0) : PhiElement::klein(0, 1);
  }
  default:
    return G.zero();
  }
}

inline bool is_minimal_at(const GenusOneEquation &phi, const BigInt &p) {
  require_prime(p, "is_minimal_at");
  if (!is_integral_at(phi, p))
    throw Error("not integral at p", "is_minimal_at");
  Invariants inv = invariants(phi);
  if (inv.delta == 0)
    throw Error("singular equation", "is_minimal_at");
  return detail::val(inv.delta, p).value() == tate(jacobian(phi), p).vDeltaMin;
}

} // namespace genus1
