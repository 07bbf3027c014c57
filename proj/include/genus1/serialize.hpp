#pragma once

// JSON views of the library types (insertion-ordered keys).

#include "genus1/global.hpp"

#include <json.hpp>

namespace genus1::json {

using Json = nlohmann::ordered_json;

inline Json number_or_string(const BigInt &v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Json equation(const GenusOneEquation &phi) {
  Json c = Json::array();
  for (const auto &a : phi.coeffs())
    c.push_back(to_string(a));
  return {{"degree", phi.degree()}, {"coeffs", c}};
}

inline Json invariants(const Invariants &inv) {
  return {{"c4", to_string(inv.c4)}, {"c6", to_string(inv.c6)}, {"delta", to_string(inv.delta)}};
}

inline Json phi_group(const PhiGroup &g) {
  if (g.kind == PhiKind::Klein)
    return {{"klein", true}};
  return {{"cyclic", g.order}};
}

inline Json reduction(const ReductionData &rd) {
  return {{"kodaira", rd.kodaira.to_string()},
          {"cp", rd.cp},
          {"vDeltaMin", rd.vDeltaMin},
          {"phi", phi_group(rd.phi)},
          {"split", rd.split},
          {"minimalModel", equation(rd.minimalModel)},
          {"toMinimal", format_transformation(rd.toMinimal)}};
}

inline Json breakdown(const CountBreakdown &b) {
  Json shapes = Json::object();
  for (const auto &[k, v] : b.perShape)
    shapes[k] = v;
  return {{"total", b.total}, {"perShape", shapes}};
}

inline Json global(const GlobalCount &g) {
  Json factors = Json::array();
  for (const auto &f : g.factors)
    factors.push_back({{"p", number_or_string(f.p)},
                       {"kodaira", f.reduction.kodaira.to_string()},
                       {"cp", f.reduction.cp},
                       {"vDeltaMin", f.reduction.vDeltaMin},
                       {"psi", f.psi.to_string()},
                       {"Np", f.count.total},
                       {"perShape", breakdown(f.count)["perShape"]}});
  return {{"N", number_or_string(g.N)}, {"factors", factors}};
}

inline Json fiber(const SpecialFiber &f) {
  Json comps = Json::array(), edges = Json::array(), galois = Json::object(),
       action = Json::object();
  for (const auto &c : f.components)
    comps.push_back({{"id", c.id}, {"multiplicity", c.multiplicity}, {"delta", c.delta.to_string()}});
  for (auto [a, b] : f.edges)
    edges.push_back({f.components[a].id, f.components[b].id});
  for (std::size_t i = 0; i < f.components.size(); ++i)
    galois[f.components[i].id] = f.components[f.galois[i]].id;
  for (const auto &e : f.phi.elements())
    action[e.to_string()] = f.act(e).to_string();
  return {{"kodaira", f.kodaira.to_string()},
          {"cp", f.tamagawa()},
          {"phi", phi_group(f.phi)},
          {"components", comps},
          {"edges", edges},
          {"galois", galois},
          {"phiAction", action}};
}

inline Json model_list(const ModelListReport &r) {
  Json primes = Json::array(), entries = Json::array();
  for (const auto &p : r.badPrimes)
    primes.push_back(number_or_string(p));
  for (const auto &e : r.entries) {
    Json vals = Json::array();
    for (const auto &[p, before, after] : e.valuations)
      vals.push_back({{"p", number_or_string(p)}, {"before", before}, {"after", after}});
    entries.push_back({{"integral", e.integral},
                       {"det", to_string(e.det)},
                       {"valuations", vals},
                       {"ok", e.ok},
                       {"equation", equation(e.image)}});
  }
  return {{"badPrimes", primes},
          {"entries", entries},
          {"allOk", r.allOk},
          {"pairwiseInequivalence", ModelListReport::inequivalence},
          {"localSolubility", ModelListReport::localSolubility}};
}

inline Json error(const Error &e) { return {{"error", e.what()}, {"where", e.where()}}; }

} // namespace genus1::json
