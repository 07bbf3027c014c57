#pragma once

#include "genus1/localred.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace genus1 {

struct Component {
  std::string id;
  int multiplicity = 1;
  PhiElement delta; // δ_1 for multiplicity 1, δ_m otherwise
};

struct SpecialFiber {
  KodairaType kodaira;
  PhiGroup phi;
  std::vector<Component> components;
  std::vector<std::pair<int, int>> edges; // indices into components
  std::vector<int> galois;                // component index -> image index
  std::vector<PhiElement> phiAut;         // indexed by phi.index(e)

  int index_of(const std::string &id) const {
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].id == id)
        return static_cast<int>(i);
    throw Error("no component '" + id + "'", "SpecialFiber");
  }
  PhiElement act(const PhiElement &e) const { return phiAut[phi.index(e)]; }
  bool fixed(const PhiElement &e) const { return act(e) == e; }
  std::vector<PhiElement> fixed_elements() const {
    std::vector<PhiElement> out;
    for (const auto &e : phi.elements())
      if (fixed(e))
        out.push_back(e);
    return out;
  }
  int tamagawa() const {
    int c = 0;
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].multiplicity == 1 && galois[i] == static_cast<int>(i))
        ++c;
    return c;
  }
};

namespace detail {

class FiberBuilder {
public:
  FiberBuilder(KodairaType k, PhiGroup g) {
    f_.kodaira = k;
    f_.phi = g;
  }
  int add(std::string id, int mult, PhiElement delta) {
    f_.components.push_back({std::move(id), mult, delta});
    return static_cast<int>(f_.components.size()) - 1;
  }
  void edge(const std::string &a, const std::string &b) {
    f_.edges.emplace_back(f_.index_of(a), f_.index_of(b));
  }
  void chain(const std::vector<std::string> &ids) {
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
      edge(ids[i], ids[i + 1]);
  }
  // Frobenius as a set of component swaps/cycles plus its action on Φ.
  SpecialFiber finish(const std::vector<std::vector<std::string>> &cycles,
                      const std::vector<PhiElement> &phiAut) {
    f_.galois.resize(f_.components.size());
    for (std::size_t i = 0; i < f_.galois.size(); ++i)
      f_.galois[i] = static_cast<int>(i);
    for (const auto &c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i)
        f_.galois[f_.index_of(c[i])] = f_.index_of(c[(i + 1) % c.size()]);
    f_.phiAut = phiAut.empty() ? f_.phi.elements() : phiAut;
    return f_;
  }
  const PhiGroup &phi() const { return f_.phi; }

private:
  SpecialFiber f_;
};

inline std::vector<PhiElement> negation(const PhiGroup &g) {
  std::vector<PhiElement> v;
  for (const auto &e : g.elements())
    v.push_back(g.neg(e));
  return v;
}

[[noreturn]] inline void inconsistent(const KodairaType &k, int cp) {
  throw Error("inconsistent (type, c_p): (" + k.to_string() + ", " + std::to_string(cp) + ")",
              "fiber");
}

} // namespace detail

// Special fiber of the given type. `reversed` numbers the n-gon of I(n) the
// other way round (component i gets δ_1 = -i).
inline SpecialFiber fiber(const KodairaType &k, int cp, bool reversed = false) {
  using K = KodairaType::Kind;
  const PhiGroup G = phi_group_of(k);
  detail::FiberBuilder b(k, G);
  auto C = PhiElement::cyclic;
  auto name = [](const char *s, int i) { return std::string(s) + std::to_string(i); };

  switch (k.kind) {
  case K::I: {
    const int n = std::max(k.n, 1);
    for (int i = 0; i < n; ++i)
      b.add(name("G", i), 1, reversed ? G.neg(C(i)) : C(i));
    for (int i = 0; i + 1 < n; ++i)
      b.edge(name("G", i), name("G", i + 1));
    b.edge(name("G", n - 1), "G0");
    if (cp == n)
      return b.finish({}, {});
    if ((k.n % 2 == 0 && cp == 2) || (k.n % 2 == 1 && cp == 1)) {
      std::vector<std::vector<std::string>> swaps;
      for (int i = 1; i < n - i; ++i)
        swaps.push_back({name("G", i), name("G", n - i)});
      return b.finish(swaps, detail::negation(G));
    }
    detail::inconsistent(k, cp);
  }
  case K::Istar: {
    const int n = k.n;
    const bool klein = n % 2 == 0;
    PhiElement g0 = G.zero();
    PhiElement near = klein ? PhiElement::klein(1, 1) : C(2);
    PhiElement f1 = klein ? PhiElement::klein(1, 0) : C(1);
    PhiElement f2 = klein ? PhiElement::klein(0, 1) : C(3);
    b.add("G0", 1, g0);
    b.add("Gamma", 1, near);
    b.add("F1", 1, f1);
    b.add("F2", 1, f2);
    std::vector<std::string> chain;
    for (int l = -1; l < n; ++l) {
      chain.push_back(name("V", l));
      b.add(chain.back(), 2, (l % 2 != 0) ? g0 : near);
    }
    b.chain(chain);
    b.edge("G0", chain.front());
    b.edge("Gamma", chain.front());
    b.edge("F1", chain.back());
    b.edge("F2", chain.back());
    if (cp == 4)
      return b.finish({}, {});
    if (cp == 2) {
      std::vector<PhiElement> aut =
          klein ? std::vector<PhiElement>{g0, f2, f1, near} : detail::negation(G);
      return b.finish({{"F1", "F2"}}, aut);
    }
    if (cp == 1 && n == 0) {
      // (0,0),(1,0),(0,1),(1,1) -> (0,0),(0,1),(1,1),(1,0)
      return b.finish({{"Gamma", "F1", "F2"}}, {g0, f2, near, f1});
    }
    detail::inconsistent(k, cp);
  }
  case K::II:
    if (cp != 1)
      detail::inconsistent(k, cp);
    b.add("G0", 1, C(0));
    return b.finish({}, {});
  case K::III:
    if (cp != 2)
      detail::inconsistent(k, cp);
    b.add("G0", 1, C(0));
    b.add("G1", 1, C(1));
    b.edge("G0", "G1");
    return b.finish({}, {});
  case K::IV: {
    if (cp != 1 && cp != 3)
      detail::inconsistent(k, cp);
    for (int i = 0; i < 3; ++i)
      b.add(name("G", i), 1, C(i));
    b.chain({"G0", "G1", "G2", "G0"});
    if (cp == 3)
      return b.finish({}, {});
    return b.finish({{"G1", "G2"}}, detail::negation(G));
  }
  case K::IVstar: {
    if (cp != 1 && cp != 3)
      detail::inconsistent(k, cp);
    for (int i = 0; i < 3; ++i)
      b.add(name("G", i), 1, C(i));
    b.add("Theta0", 2, C(0));
    b.add("Theta1", 2, C(2));
    b.add("Theta2", 2, C(1));
    b.add("Lambda0", 3, C(0));
    for (int i = 0; i < 3; ++i)
      b.chain({name("G", i), name("Theta", i), "Lambda0"});
    if (cp == 3)
      return b.finish({}, {});
    return b.finish({{"G1", "G2"}, {"Theta1", "Theta2"}}, detail::negation(G));
  }
  case K::IIIstar:
    if (cp != 2)
      detail::inconsistent(k, cp);
    b.add("G0", 1, C(0));
    b.add("G1", 1, C(1));
    b.add("Theta0", 2, C(0));
    b.add("Theta1", 2, C(0));
    b.add("Theta2", 2, C(1));
    b.add("Lambda0", 3, C(0));
    b.add("Lambda1", 3, C(1));
    b.add("Psi", 4, C(0));
    b.chain({"G0", "Theta0", "Lambda0", "Psi", "Lambda1", "Theta1", "G1"});
    b.edge("Psi", "Theta2");
    return b.finish({}, {});
  case K::IIstar:
    if (cp != 1)
      detail::inconsistent(k, cp);
    b.add("G0", 1, C(0));
    b.add("A2", 2, C(0));
    b.add("B2", 2, C(0));
    b.add("A3", 3, C(0));
    b.add("B3", 3, C(0));
    b.add("A4", 4, C(0));
    b.add("B4", 4, C(0));
    b.add("C5", 5, C(0));
    b.add("C6", 6, C(0));
    b.chain({"G0", "A2", "A3", "A4", "C5", "C6", "B4", "B2"});
    b.edge("B3", "C6");
    return b.finish({}, {});
  }
  detail::inconsistent(k, cp);
}

// Structural problems with a fiber; empty when every invariant holds.
inline std::vector<std::string> check_fiber(const SpecialFiber &f) {
  std::vector<std::string> issues;
  const PhiGroup &G = f.phi;
  const auto &cs = f.components;

  std::map<int, int> seen;
  for (const auto &c : cs) {
    if (!G.contains(c.delta))
      issues.push_back(c.id + ": delta outside Phi");
    if (c.multiplicity == 1)
      seen[G.index(c.delta)]++;
  }
  if (static_cast<int>(seen.size()) != G.order ||
      std::any_of(seen.begin(), seen.end(), [](auto &kv) { return kv.second != 1; }))
    issues.push_back("delta_1 is not a bijection onto Phi");

  // Frobenius: a permutation of components preserving multiplicity, adjacency and δ.
  std::vector<int> hits(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    int j = f.galois[i];
    hits[j]++;
    if (cs[j].multiplicity != cs[i].multiplicity)
      issues.push_back(cs[i].id + ": Galois changes multiplicity");
    if (cs[j].delta != f.act(cs[i].delta))
      issues.push_back(cs[i].id + ": Galois does not commute with delta");
  }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
    issues.push_back("Galois map is not a permutation");
  auto key = [](int a, int b) { return std::minmax(a, b); };
  std::map<std::pair<int, int>, int> ecount, imgcount;
  for (auto [a, b] : f.edges) {
    ecount[key(a, b)]++;
    imgcount[key(f.galois[a], f.galois[b])]++;
  }
  if (ecount != imgcount)
    issues.push_back("Galois does not preserve adjacency");
  for (const auto &x : G.elements())
    for (const auto &y : G.elements())
      if (f.act(G.add(x, y)) != G.add(f.act(x), f.act(y)))
        issues.push_back("action on Phi is not a homomorphism");
  if (f.act(G.zero()) != G.zero())
    issues.push_back("action on Phi moves zero");

  for (std::size_t i = 0; i < cs.size(); ++i)
    if (f.galois[i] == static_cast<int>(i) && !f.fixed(cs[i].delta))
      issues.push_back(cs[i].id + ": fixed component with non-fixed delta");

  std::map<int, int> mult;
  for (const auto &c : cs)
    mult[c.multiplicity]++;
  using K = KodairaType::Kind;
  std::map<int, int> want;
  switch (f.kodaira.kind) {
  case K::I:
    want = {{1, std::max(f.kodaira.n, 1)}};
    break;
  case K::Istar:
    want = {{1, 4}, {2, f.kodaira.n + 1}};
    break;
  case K::II:
    want = {{1, 1}};
    break;
  case K::III:
    want = {{1, 2}};
    break;
  case K::IV:
    want = {{1, 3}};
    break;
  case K::IVstar:
    want = {{1, 3}, {2, 3}, {3, 1}};
    break;
  case K::IIIstar:
    want = {{1, 2}, {2, 3}, {3, 2}, {4, 1}};
    break;
  case K::IIstar:
    want = {{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}};
    break;
  }
  if (mult != want)
    issues.push_back("multiplicities do not match the Kodaira fiber");
  return issues;
}

} // namespace genus1
