#include "genus1/fiberdata.hpp"
#include "genus1/serialize.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <fstream>

using namespace genus1;

namespace {

nlohmann::json golden() {
  std::ifstream in(std::string(GENUS1_FIXTURES) + "/delta_tables.json");
  return nlohmann::json::parse(in);
}

const Component &component(const SpecialFiber &f, const std::string &id) {
  return f.components[f.index_of(id)];
}

std::vector<std::pair<KodairaType, int>> valid_pairs() {
  std::vector<std::pair<KodairaType, int>> out;
  for (int n = 1; n <= 12; ++n) {
    out.push_back({KodairaType::I(n), n});
    out.push_back({KodairaType::I(n), n % 2 ? 1 : 2});
  }
  out.push_back({KodairaType::I(0), 1});
  for (int cp : {1, 2, 4})
    out.push_back({KodairaType::Istar(0), cp});
  for (int n = 1; n <= 10; ++n)
    for (int cp : {2, 4})
      out.push_back({KodairaType::Istar(n), cp});
  out.push_back({KodairaType::II(), 1});
  out.push_back({KodairaType::III(), 2});
  out.push_back({KodairaType::IIIstar(), 2});
  out.push_back({KodairaType::IIstar(), 1});
  for (int cp : {1, 3}) {
    out.push_back({KodairaType::IV(), cp});
    out.push_back({KodairaType::IVstar(), cp});
  }
  return out;
}

std::vector<int> neighbours(const SpecialFiber &f, int i) {
  std::vector<int> out;
  for (auto [a, b] : f.edges) {
    if (a == i)
      out.push_back(b);
    if (b == i)
      out.push_back(a);
  }
  return out;
}

} // namespace

TEST(Golden, IstarChain) {
  auto g = golden();
  for (int n = 0; n <= 10; ++n)
    for (int cp : {2, 4}) {
      SpecialFiber f = fiber(KodairaType::Istar(n), cp);
      const auto &t = g[n % 2 ? "Istar_odd" : "Istar_even"];
      for (int l = -1; l < n; ++l) {
        const Component &c = component(f, "V" + std::to_string(l));
        EXPECT_EQ(c.multiplicity, 2);
        std::string want = t[l % 2 ? "V_odd_l" : "V_even_l"];
        EXPECT_EQ(c.delta.to_string(), want) << "n=" << n << " l=" << l;
      }
    }
}

TEST(Golden, Exceptional) {
  auto g = golden();
  struct Case {
    KodairaType k;
    int cp;
    const char *key;
  };
  for (const auto &c : {Case{KodairaType::IVstar(), 3, "IVstar"}, Case{KodairaType::IVstar(), 1, "IVstar"},
                        Case{KodairaType::IIIstar(), 2, "IIIstar"}, Case{KodairaType::IIstar(), 1, "IIstar"}}) {
    SpecialFiber f = fiber(c.k, c.cp);
    int higher = 0;
    for (const auto &comp : f.components)
      higher += comp.multiplicity > 1;
    EXPECT_EQ(higher, static_cast<int>(g[c.key].size())) << c.key;
    for (const auto &[id, want] : g[c.key].items())
      EXPECT_EQ(component(f, id).delta.to_string(), want.get<std::string>()) << c.key << " " << id;
  }
}

TEST(Fiber, AllValidPairsPassChecks) {
  for (const auto &[k, cp] : valid_pairs()) {
    SpecialFiber f = fiber(k, cp);
    EXPECT_EQ(check_fiber(f), std::vector<std::string>{}) << k.to_string() << " c=" << cp;
    EXPECT_EQ(f.tamagawa(), cp) << k.to_string();
    EXPECT_EQ(f.phi, phi_group_of(k));
    if (k.kind == KodairaType::Kind::I)
      EXPECT_EQ(check_fiber(fiber(k, cp, true)), std::vector<std::string>{});
  }
}

TEST(Fiber, ImpossiblePairsThrow) {
  std::vector<std::pair<KodairaType, int>> bad{
      {KodairaType::I(4), 1},      {KodairaType::I(5), 2},     {KodairaType::Istar(0), 3},
      {KodairaType::Istar(3), 1},  {KodairaType::II(), 2},     {KodairaType::III(), 1},
      {KodairaType::IIIstar(), 1}, {KodairaType::IV(), 2},     {KodairaType::IVstar(), 2},
      {KodairaType::IIstar(), 2}};
  for (const auto &[k, cp] : bad) {
    try {
      fiber(k, cp);
      ADD_FAILURE() << k.to_string() << " " << cp;
    } catch (const Error &e) {
      EXPECT_EQ(std::string(e.what()),
                "inconsistent (type, c_p): (" + k.to_string() + ", " + std::to_string(cp) + ")");
      EXPECT_EQ(e.where(), "fiber");
    }
  }
}

TEST(Fiber, NonSplitGonFixesOppositeComponents) {
  SpecialFiber f = fiber(KodairaType::I(4), 2);
  EXPECT_EQ(f.phi, PhiGroup::cyclic(4));
  for (int i = 0; i < 4; ++i)
    EXPECT_EQ(f.act(PhiElement::cyclic(i)), PhiElement::cyclic((4 - i) % 4));
  std::vector<std::string> fixed;
  for (std::size_t i = 0; i < f.components.size(); ++i)
    if (f.galois[i] == static_cast<int>(i))
      fixed.push_back(f.components[i].id);
  EXPECT_EQ(fixed, (std::vector<std::string>{"G0", "G2"}));
}

TEST(Fiber, IIstarAndI1Star) {
  SpecialFiber f = fiber(KodairaType::IIstar(), 1);
  EXPECT_EQ(f.components.size(), 9u);
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    EXPECT_EQ(f.components[i].delta, PhiElement::cyclic(0));
    EXPECT_EQ(f.galois[i], static_cast<int>(i));
  }
  SpecialFiber s = fiber(KodairaType::Istar(1), 4);
  EXPECT_EQ(s.phi, PhiGroup::cyclic(4));
  EXPECT_EQ(component(s, "V-1").delta, PhiElement::cyclic(0));
  EXPECT_EQ(component(s, "V0").delta, PhiElement::cyclic(2));
  int ones = 0;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    ones += s.components[i].multiplicity == 1;
    EXPECT_EQ(s.galois[i], static_cast<int>(i));
  }
  EXPECT_EQ(ones, 4);
}

// Dual graphs are trees (or a cycle for I_n, a triangle for IV), and the I_n* chain ends carry
// the multiplicity-one components in pairs.
TEST(Fiber, Adjacency) {
  for (const auto &[k, cp] : valid_pairs()) {
    SpecialFiber f = fiber(k, cp);
    std::size_t v = f.components.size(), e = f.edges.size();
    if (k.kind == KodairaType::Kind::I)
      EXPECT_EQ(e, k.n <= 1 ? 1u : v) << k.to_string(); // I1 carries a self-loop
    else if (k.kind == KodairaType::Kind::IV)
      EXPECT_EQ(e, 3u); // three lines through one point
    else
      EXPECT_EQ(e + 1, v) << k.to_string();
    // Sum over neighbours of multiplicities is twice the multiplicity (self-intersection -2).
    using K = KodairaType::Kind;
    if (k.kind == K::I || k.kind == K::II || k.kind == K::III || k.kind == K::IV)
      continue;
    for (std::size_t i = 0; i < v; ++i) {
      int s = 0;
      for (int j : neighbours(f, static_cast<int>(i)))
        s += f.components[j].multiplicity;
      EXPECT_EQ(s, 2 * f.components[i].multiplicity) << k.to_string() << " " << f.components[i].id;
    }
  }
  for (int n = 0; n <= 6; ++n) {
    SpecialFiber f = fiber(KodairaType::Istar(n), 4);
    std::vector<std::string> hubs;
    for (std::size_t i = 0; i < f.components.size(); ++i) {
      if (f.components[i].multiplicity != 2)
        continue;
      int ones = 0;
      for (int j : neighbours(f, static_cast<int>(i)))
        ones += f.components[j].multiplicity == 1;
      if (ones >= 2)
        hubs.push_back(f.components[i].id);
    }
    std::vector<std::string> want{"V-1"};
    if (n > 0)
      want.push_back("V" + std::to_string(n - 1));
    EXPECT_EQ(hubs, want) << n;
  }
}

TEST(Fiber, GaloisFixedPsi) {
  EXPECT_EQ(fiber(KodairaType::Istar(0), 1).fixed_elements(),
            std::vector<PhiElement>{PhiElement::klein(0, 0)});
  EXPECT_EQ(fiber(KodairaType::Istar(2), 2).fixed_elements(),
            (std::vector<PhiElement>{PhiElement::klein(0, 0), PhiElement::klein(1, 1)}));
  EXPECT_EQ(fiber(KodairaType::I(5), 1).fixed_elements(), std::vector<PhiElement>{PhiElement::cyclic(0)});
  EXPECT_EQ(fiber(KodairaType::IVstar(), 1).fixed_elements(),
            std::vector<PhiElement>{PhiElement::cyclic(0)});
}

TEST(Fiber, JsonDump) {
  json::Json j = json::fiber(fiber(KodairaType::IVstar(), 1));
  EXPECT_EQ(j["kodaira"], "IV*");
  EXPECT_EQ(j["cp"], 1);
  EXPECT_EQ(j["components"].size(), 7u);
  EXPECT_EQ(j["components"][3]["id"], "Theta0");
  EXPECT_EQ(j["components"][3]["multiplicity"], 2);
  EXPECT_EQ(j["components"][3]["delta"], "0");
}
