#pragma once

#include "genus1/fiberdata.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace genus1 {

struct CountingProblem {
  SpecialFiber fiber;
  int n = 2;
  PhiElement psi;
};

struct CountBreakdown {
  long total = 0;
  std::map<std::string, long> perShape; // every partition of n, zeros included
};

namespace detail {

inline std::vector<std::string> partitions(int n) {
  std::vector<std::string> out;
  std::function<void(int, int, std::string)> go = [&](int left, int maxPart, std::string s) {
    if (left == 0) {
      out.push_back(s);
      return;
    }
    for (int part = std::min(left, maxPart); part >= 1; --part)
      go(left - part, part, s.empty() ? std::to_string(part) : s + "+" + std::to_string(part));
  };
  go(n, n, "");
  return out;
}

inline void check_degree(int n, const char *where) {
  if (n < 2 || n > 4)
    throw Error("degree must be 2, 3 or 4", where);
}

// Counting for additive reduction needs char k != 2 (n = 2) and != 2, 3 (n = 3, 4).
inline void check_residue_characteristic(const KodairaType &k, const BigInt &p, int n,
                                         const char *where) {
  if (!k.additive())
    return;
  if (p == 2 || (n >= 3 && p == 3))
    throw Error("residue characteristic out of scope", where);
}

} // namespace detail

inline CountBreakdown enumerate(const CountingProblem &pr) {
  const char *where = "enumerate";
  detail::check_degree(pr.n, where);
  const SpecialFiber &f = pr.fiber;
  if (!f.phi.contains(pr.psi))
    throw Error("psi is not an element of the component group", where);
  if (!f.fixed(pr.psi))
    throw Error("psi is not Galois-fixed", where);

  CountBreakdown out;
  for (const auto &s : detail::partitions(pr.n))
    out.perShape[s] = 0;

  std::vector<int> usable;
  for (std::size_t i = 0; i < f.components.size(); ++i)
    if (f.components[i].multiplicity <= pr.n)
      usable.push_back(static_cast<int>(i));

  // Unordered tuples as non-decreasing index sequences.
  std::vector<int> tuple;
  std::function<void(std::size_t, int, PhiElement)> go = [&](std::size_t from, int mult,
                                                             PhiElement sum) {
    if (mult == pr.n) {
      if (sum != pr.psi)
        return;
      std::vector<int> image;
      for (int c : tuple)
        image.push_back(f.galois[c]);
      std::sort(image.begin(), image.end());
      if (image != tuple)
        return;
      std::vector<int> parts;
      for (int c : tuple)
        parts.push_back(f.components[c].multiplicity);
      std::sort(parts.rbegin(), parts.rend());
      std::string key;
      for (int m : parts)
        key += (key.empty() ? "" : "+") + std::to_string(m);
      out.perShape[key]++;
      out.total++;
      return;
    }
    for (std::size_t i = from; i < usable.size(); ++i) {
      const Component &c = f.components[usable[i]];
      if (mult + c.multiplicity > pr.n)
        continue;
      tuple.push_back(usable[i]);
      go(i, mult + c.multiplicity, f.phi.add(sum, c.delta));
      tuple.pop_back();
    }
  };
  go(0, 0, f.phi.zero());
  return out;
}

// ---- closed forms ----

enum class Table1Row {
  I2m_2,       // I_{2m}, c_p = 2
  I2m_split,   // I_{2m}, c_p = 2m
  I2m1_1,      // I_{2m+1}, c_p = 1
  I2m1_split,  // I_{2m+1}, c_p = 2m+1
  II,
  III,
  IV_1,
  IV_3,
  I0s,
  I2ms_2,
  I2ms_4,
  I2m1s_2,
  I2m1s_4,
  IVs_1,
  IVs_3,
  IIIs,
  IIs,
};

struct Table1RowInfo {
  Table1Row row;
  const char *name;
  bool family; // parametrised by m
  int minM;
};

inline const std::vector<Table1RowInfo> &table1_rows() {
  static const std::vector<Table1RowInfo> rows = {
      {Table1Row::I2m_2, "I2m", true, 1},      {Table1Row::I2m_split, "I2m", true, 1},
      {Table1Row::I2m1_1, "I2m+1", true, 0},   {Table1Row::I2m1_split, "I2m+1", true, 0},
      {Table1Row::II, "II", false, 0},         {Table1Row::III, "III", false, 0},
      {Table1Row::IV_1, "IV", false, 0},       {Table1Row::IV_3, "IV", false, 0},
      {Table1Row::I0s, "I0*", false, 0},       {Table1Row::I2ms_2, "I2m*", true, 1},
      {Table1Row::I2ms_4, "I2m*", true, 1},    {Table1Row::I2m1s_2, "I2m+1*", true, 0},
      {Table1Row::I2m1s_4, "I2m+1*", true, 0}, {Table1Row::IVs_1, "IV*", false, 0},
      {Table1Row::IVs_3, "IV*", false, 0},     {Table1Row::IIIs, "III*", false, 0},
      {Table1Row::IIs, "II*", false, 0},
  };
  return rows;
}

// Kodaira type, printed c_p, and the c_p of the fiber the row describes.
struct Table1RowInstance {
  KodairaType kodaira;
  int printedCp;
  int fiberCp;
};

inline Table1RowInstance table1_instance(Table1Row row, int m) {
  using R = Table1Row;
  switch (row) {
  case R::I2m_2:
    return {KodairaType::I(2 * m), 2, 2};
  case R::I2m_split:
    return {KodairaType::I(2 * m), 2 * m, 2 * m};
  case R::I2m1_1:
    return {KodairaType::I(2 * m + 1), 1, 1};
  case R::I2m1_split:
    return {KodairaType::I(2 * m + 1), 2 * m + 1, 2 * m + 1};
  case R::II:
    return {KodairaType::II(), 1, 1};
  case R::III:
    // Printed with c_p = 1; the only consistent fiber has both components fixed.
    return {KodairaType::III(), 1, 2};
  case R::IV_1:
    return {KodairaType::IV(), 1, 1};
  case R::IV_3:
    return {KodairaType::IV(), 3, 3};
  case R::I0s:
    return {KodairaType::Istar(0), 1, 1};
  case R::I2ms_2:
    return {KodairaType::Istar(2 * m), 2, 2};
  case R::I2ms_4:
    return {KodairaType::Istar(2 * m), 4, 4};
  case R::I2m1s_2:
    return {KodairaType::Istar(2 * m + 1), 2, 2};
  case R::I2m1s_4:
    return {KodairaType::Istar(2 * m + 1), 4, 4};
  case R::IVs_1:
    return {KodairaType::IVstar(), 1, 1};
  case R::IVs_3:
    return {KodairaType::IVstar(), 3, 3};
  case R::IIIs:
    return {KodairaType::IIIstar(), 2, 2};
  case R::IIs:
    return {KodairaType::IIstar(), 1, 1};
  }
  throw Error("unknown row", "table1");
}

namespace detail {

// d | psi in Z/N, i.e. psi lies in d(Z/N).
inline bool divides_in(long d, long psi, long N) { return psi % std::gcd(d, N) == 0; }

} // namespace detail

inline long table1_eval(Table1Row row, long m, int n, const PhiElement &psi) {
  const char *where = "table1";
  detail::check_degree(n, where);
  using R = Table1Row;
  const long a = psi.a;
  const bool zero = psi.a == 0 && psi.b == 0;
  auto pick = [&](long n2, long n3, long n4) { return n == 2 ? n2 : n == 3 ? n3 : n4; };
  switch (row) {
  case R::I2m_2:
    return pick(zero ? m + 1 : 1, m + 1, zero ? (m + 1) * (m + 2) / 2 : m + 1);
  case R::I2m_split: {
    const long N = 2 * m;
    if (n == 2)
      return detail::divides_in(2, a, N) ? m + 1 : m;
    if (n == 3) {
      if (m % 3 != 0)
        return (m + 1) * (2 * m + 1) / 3;
      return a % 3 == 0 ? m * (2 * m + 3) / 3 + 1 : m * (2 * m + 3) / 3;
    }
    const long base = m * (m + 1) * (m + 2) / 3;
    if (detail::divides_in(4, a, N))
      return base + 2;
    if (detail::divides_in(2, a, N))
      return base + 1;
    return base;
  }
  case R::I2m1_1:
    return pick(m + 1, m + 1, (m + 1) * (m + 2) / 2);
  case R::I2m1_split: {
    const long N = 2 * m + 1;
    if (n == 2)
      return m + 1;
    if (n == 3) {
      if (N % 3 != 0)
        return (m + 1) * (2 * m + 3) / 3;
      return a % 3 == 0 ? (m + 2) * (2 * m + 1) / 3 + 1 : (m + 2) * (2 * m + 1) / 3;
    }
    return (m + 1) * (m + 2) * (2 * m + 3) / 6;
  }
  case R::II:
    return 1;
  case R::III:
    return pick(a == 1 ? 1 : 2, 2, a == 1 ? 2 : 3);
  case R::IV_1:
    return pick(2, 2, 3);
  case R::IV_3:
    return pick(2, zero ? 4 : 3, 5);
  case R::I0s:
    return pick(2, 3, 4);
  case R::I2ms_2:
    return pick(zero ? m + 3 : m + 2, 2 * m + 4, zero ? (m + 2) * (m + 4) : (m + 2) * (m + 3));
  case R::I2ms_4: {
    const bool near = psi == PhiElement::klein(1, 1);
    if (n == 2)
      return zero ? m + 5 : near ? m + 2 : 2;
    if (n == 3)
      return 2 * m + 6;
    return zero ? (m + 4) * (m + 4) : near ? (m + 2) * (m + 5) : 4 * m + 10;
  }
  case R::I2m1s_2:
    return pick(zero ? m + 4 : m + 2, 2 * m + 5, zero ? (m + 3) * (m + 4) : (m + 2) * (m + 4));
  case R::I2m1s_4:
    if (n == 2)
      return a % 2 == 0 ? m + 4 : 2;
    if (n == 3)
      return 2 * m + 7;
    return zero ? (m + 3) * (m + 6) : a == 2 ? (m + 4) * (m + 4) : 4 * m + 12;
  case R::IVs_1:
    return pick(3, 4, 8);
  case R::IVs_3:
    return pick(3, zero ? 8 : 6, 14);
  case R::IIIs:
    return pick(zero ? 4 : 2, 6, zero ? 15 : 10);
  case R::IIs:
    return pick(3, 5, 10);
  }
  throw Error("unknown row", where);
}

// The Table 1 row for (type, c_p) together with its parameter m.
inline std::pair<Table1Row, long> table1_row(const KodairaType &k, int cp) {
  using K = KodairaType::Kind;
  using R = Table1Row;
  auto absent = [&]() -> std::pair<R, long> {
    throw Error("not tabulated: (" + k.to_string() + ", " + std::to_string(cp) + ")", "table1");
  };
  const long n = k.n;
  switch (k.kind) {
  case K::I:
    if (n == 0)
      return absent();
    if (n % 2 == 0) {
      if (cp == 2)
        return {R::I2m_2, n / 2};
      if (cp == n)
        return {R::I2m_split, n / 2};
      return absent();
    }
    if (cp == 1)
      return {R::I2m1_1, (n - 1) / 2};
    if (cp == n)
      return {R::I2m1_split, (n - 1) / 2};
    return absent();
  case K::Istar:
    if (n == 0)
      return cp == 1 ? std::pair{R::I0s, 0L} : absent();
    if (cp != 2 && cp != 4)
      return absent();
    if (n % 2 == 0)
      return {cp == 2 ? R::I2ms_2 : R::I2ms_4, n / 2};
    return {cp == 2 ? R::I2m1s_2 : R::I2m1s_4, (n - 1) / 2};
  case K::II:
    return cp == 1 ? std::pair{R::II, 0L} : absent();
  case K::III:
    return cp == 1 || cp == 2 ? std::pair{R::III, 0L} : absent();
  case K::IV:
    return cp == 1 ? std::pair{R::IV_1, 0L} : cp == 3 ? std::pair{R::IV_3, 0L} : absent();
  case K::IVstar:
    return cp == 1 ? std::pair{R::IVs_1, 0L} : cp == 3 ? std::pair{R::IVs_3, 0L} : absent();
  case K::IIIstar:
    return cp == 2 ? std::pair{R::IIIs, 0L} : absent();
  case K::IIstar:
    return cp == 1 ? std::pair{R::IIs, 0L} : absent();
  }
  return absent();
}

inline long table1(const KodairaType &k, int cp, int n, const PhiElement &psi,
                   std::optional<BigInt> p = std::nullopt) {
  const char *where = "table1";
  detail::check_degree(n, where);
  if (p)
    detail::check_residue_characteristic(k, *p, n, where);
  auto [row, m] = table1_row(k, cp);
  if (!phi_group_of(k).contains(psi))
    throw Error("psi is not an element of the component group", where);
  return table1_eval(row, m, n, psi);
}

// ---- local counts ----

// ψ given directly, through a rational point, or defaulted to the identity.
using PsiInput = std::variant<std::monostate, PhiElement, Point>;

inline CountBreakdown local_count(const GenusOneEquation &E, const BigInt &p, int n,
                                  const PsiInput &psiIn = {}) {
  const char *where = "local_count";
  detail::check_degree(n, where);
  ReductionData rd = tate(E, p);
  detail::check_residue_characteristic(rd.kodaira, p, n, where);

  PhiElement psi = rd.phi.zero();
  if (auto *e = std::get_if<PhiElement>(&psiIn))
    psi = *e;
  else if (auto *P = std::get_if<Point>(&psiIn))
    psi = component_of_point(E, p, *P);
  if (!rd.phi.contains(psi))
    throw Error("psi is not an element of the component group", where);

  if (rd.kodaira == KodairaType::I(0) || rd.kodaira == KodairaType::I(1)) {
    CountBreakdown out;
    for (const auto &s : detail::partitions(n))
      out.perShape[s] = 0;
    out.perShape[detail::partitions(n).back()] = 1;
    out.total = 1;
    return out;
  }
  return enumerate({fiber(rd.kodaira, rd.cp), n, psi});
}

// ---- Table 1 sweep ----

struct SweepCell {
  Table1Row row;
  KodairaType kodaira;
  int cp = 0; // as printed
  int n = 0;
  long m = 0;
  PhiElement psi;
  long enumerated = 0;
  long tabulated = 0;
  bool match() const { return enumerated == tabulated; }
};

inline std::vector<SweepCell> sweep_table1(long maxM) {
  std::vector<SweepCell> out;
  for (const auto &info : table1_rows()) {
    const long lo = info.family ? info.minM : 0;
    const long hi = info.family ? maxM : 0;
    for (long m = lo; m <= hi; ++m) {
      auto inst = table1_instance(info.row, static_cast<int>(m));
      SpecialFiber f = fiber(inst.kodaira, inst.fiberCp);
      for (int n = 2; n <= 4; ++n)
        for (const auto &psi : f.fixed_elements()) {
          SweepCell c{info.row, inst.kodaira, inst.printedCp, n, m, psi};
          c.enumerated = enumerate({f, n, psi}).total;
          c.tabulated = table1_eval(info.row, m, n, psi);
          out.push_back(c);
        }
    }
  }
  return out;
}

} // namespace genus1
