#include "genus1/genus1.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace genus1;
using Json = json::Json;

namespace {

GenusOneEquation read_equation(const std::string &file, const std::string &inline_text) {
  if (!inline_text.empty())
    return parse_equation(inline_text);
  if (file.empty())
    throw Error("an equation is required (--eq or --eq-inline)", "cli");
  std::ifstream in(file);
  if (!in)
    return parse_equation(file); // not a file: treat as inline text
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_equation(ss.str());
}

// Comma lists may be given with or without brackets.
std::vector<BigRat> read_list(const std::string &s) {
  auto t = detail::trim(s);
  return detail::parse_list(t.starts_with("[") ? std::string(t) : "[" + std::string(t) + "]", "cli");
}

GenusOneEquation read_curve(const std::string &s) {
  auto a = read_list(s);
  if (a.size() != 5)
    throw Error("--curve needs five coefficients a1,a2,a3,a4,a6", "cli");
  return GenusOneEquation::weierstrass(a[0], a[1], a[2], a[3], a[4]);
}

Point read_point(const std::string &s) {
  if (detail::trim(s) == "inf")
    return Point::infinity();
  auto c = read_list(s);
  if (c.size() != 2)
    throw Error("a point is written x,y or inf", "cli");
  return Point::affine(c[0], c[1]);
}

// "5=1,1,19=0" -> {5: "1,1", 19: "0"}
std::map<BigInt, std::string> read_psi_map(const std::string &s) {
  std::map<BigInt, std::string> out;
  std::map<BigInt, std::string>::iterator last = out.end();
  std::string token;
  std::stringstream ss(s);
  while (std::getline(ss, token, ',')) {
    auto eq = token.find('=');
    if (eq != std::string::npos)
      last = out.insert_or_assign(parse_int(token.substr(0, eq)), token.substr(eq + 1)).first;
    else if (last != out.end())
      last->second += "," + token;
    else
      throw Error("malformed --psi map '" + s + "'", "cli");
  }
  return out;
}

KodairaType family_member(const std::string &t, long m) {
  if (t == "I2m")
    return KodairaType::I(static_cast<int>(2 * m));
  if (t == "I2m+1")
    return KodairaType::I(static_cast<int>(2 * m + 1));
  if (t == "I2m*")
    return KodairaType::Istar(static_cast<int>(2 * m));
  if (t == "I2m+1*")
    return KodairaType::Istar(static_cast<int>(2 * m + 1));
  throw Error("--m needs a family symbol I2m, I2m+1, I2m* or I2m+1*", "cli");
}

std::string row_type(const SweepCell &c) {
  for (const auto &r : table1_rows())
    if (r.row == c.row)
      return r.name;
  return c.kodaira.to_string();
}

void print(const Json &j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Genus one models: invariants, local reduction and counts of minimal models"};
  app.require_subcommand(1);

  std::string eqFile, eqInline, curve, prime, psi, point, gspec, type, psiMap;
  int degree = 0, cp = 0;
  long maxM = 10;
  std::optional<long> mParam;

  auto *inv = app.add_subcommand("invariants", "c4, c6 and discriminant of a genus one equation");
  inv->add_option("--eq", eqFile, "equation file, or inline text");
  inv->add_option("--eq-inline", eqInline, "equation text, e.g. \"deg=1; coeffs=[1,-1,0,-617,5916]\"");

  auto *tat = app.add_subcommand("tate", "Tate's algorithm at a prime");
  tat->add_option("--curve", curve, "a1,a2,a3,a4,a6")->required();
  tat->add_option("--prime", prime, "prime p")->required();

  auto *lc = app.add_subcommand("localcount", "number of minimal degree-n models at p");
  lc->add_option("--curve", curve, "a1,a2,a3,a4,a6")->required();
  lc->add_option("--prime", prime, "prime p")->required();
  lc->add_option("--degree", degree, "n in {2,3,4}")->required();
  auto *lcPsi = lc->add_option("--psi", psi, "component group element: i or a,b");
  lc->add_option("--point", point, "rational point x,y or inf")->excludes(lcPsi);

  auto *gc = app.add_subcommand("globalcount", "number of minimal global degree-n models");
  gc->add_option("--curve", curve, "a1,a2,a3,a4,a6")->required();
  gc->add_option("--degree", degree, "n in {2,3,4}")->required();
  auto *gcPsi = gc->add_option("--psi", psiMap, "per-prime elements, e.g. 5=1,19=0 or 3=1,1");
  gc->add_option("--point", point, "rational point x,y used at every bad prime")->excludes(gcPsi);

  auto *t1 = app.add_subcommand("table1", "closed-form count from the table");
  t1->add_option("--type", type, "Kodaira symbol (I4, III*, ...) or family (I2m, I2m+1*, ...)")
      ->required();
  t1->add_option("--cp", cp, "Tamagawa number")->required();
  t1->add_option("--degree", degree, "n in {2,3,4}")->required();
  t1->add_option("--psi", psi, "component group element: i or a,b")->required();
  t1->add_option("--m", mParam, "family parameter m");
  t1->add_option("--prime", prime, "residue characteristic, checked against the restrictions");

  auto *sw = app.add_subcommand("sweep-table1", "compare enumeration and table over all rows");
  sw->add_option("--max-m", maxM, "largest family parameter")->capture_default_str();

  auto *tr = app.add_subcommand(
      "transform",
      "apply a transformation; spec by degree: \"u=..; r=..; s=..; t=..\" (1), "
      "\"mu=..; r=[r0,r1,r2]; M=[[..],[..]]\" (2), \"mu=..; M=[[..],..]\" (3), "
      "\"M=[[..],[..]]; N=[[..],..]\" (4); matrices also as diag(..) or id");
  tr->add_option("--eq", eqFile, "equation file, or inline text");
  tr->add_option("--eq-inline", eqInline, "equation text");
  tr->add_option("--g", gspec, "transformation spec")->required();

  auto *mn = app.add_subcommand("minimal", "minimality at each prime dividing the discriminant");
  mn->add_option("--eq", eqFile, "equation file, or inline text");
  mn->add_option("--eq-inline", eqInline, "equation text");
  mn->add_option("--prime", prime, "only this prime");

  auto *ex1 = app.add_subcommand("verify-example1", "cubic model list over the III*/I2 curve");
  auto *ex2 = app.add_subcommand("verify-example2", "quadric intersection over the curve of discriminant 185");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      print(json::invariants(invariants(read_equation(eqFile, eqInline))));
    } else if (*tat) {
      print(json::reduction(tate(read_curve(curve), parse_int(prime))));
    } else if (*lc) {
      GenusOneEquation E = read_curve(curve);
      BigInt p = parse_int(prime);
      PsiInput in;
      if (!psi.empty())
        in = tate(E, p).phi.parse(psi);
      else if (!point.empty())
        in = read_point(point);
      print(json::breakdown(local_count(E, p, degree, in)));
    } else if (*gc) {
      GenusOneEquation E = read_curve(curve);
      std::map<BigInt, PsiInput> in;
      if (!point.empty()) {
        Point P = read_point(point);
        for (const auto &p : bad_primes(E))
          in[p] = P;
      }
      for (const auto &[p, s] : read_psi_map(psiMap))
        in[p] = tate(E, p).phi.parse(s);
      print(json::global(global_count(E, degree, in)));
    } else if (*t1) {
      KodairaType k = mParam ? family_member(type, *mParam) : KodairaType::parse(type);
      std::optional<BigInt> p;
      if (!prime.empty())
        p = parse_int(prime);
      std::cout << table1(k, cp, degree, phi_group_of(k).parse(psi), p) << "\n";
    } else if (*sw) {
      std::cout << "type,cp,n,m,psi,enumerate,table1,match\n";
      for (const auto &c : sweep_table1(maxM))
        std::cout << row_type(c) << "," << c.cp << "," << c.n << "," << c.m << ",\""
                  << c.psi.to_string() << "\"," << c.enumerated << "," << c.tabulated << ","
                  << (c.match() ? "true" : "false") << "\n";
    } else if (*tr) {
      GenusOneEquation phi = read_equation(eqFile, eqInline);
      GenusOneEquation out = apply(parse_transformation(gspec, phi.degree()), phi);
      Json j = json::equation(out);
      j["text"] = format_equation(out);
      print(j);
    } else if (*mn) {
      GenusOneEquation phi = read_equation(eqFile, eqInline);
      std::vector<BigInt> primes;
      if (!prime.empty()) {
        primes.push_back(parse_int(prime));
      } else {
        BigRat d = invariants(phi).delta;
        if (d == 0)
          throw Error("singular equation", "minimal");
        for (auto &[q, e] : factor(numer(d)))
          primes.push_back(q);
      }
      Json j = Json::object();
      for (const auto &p : primes)
        j[p.str()] = is_minimal_at(phi, p);
      print(j);
    } else if (*ex1) {
      GenusOneEquation E = fixtures::E1();
      Json j;
      j["tate"] = {{"5", json::reduction(tate(E, 5))}, {"19", json::reduction(tate(E, 19))}};
      j["globalcount"] = json::global(global_count(E, 3));
      j["phi3"] = {{"invariants", json::invariants(invariants(fixtures::phi3()))},
                   {"minimalAt5", is_minimal_at(fixtures::phi3(), 5)},
                   {"minimalAt19", is_minimal_at(fixtures::phi3(), 19)}};
      Json models = json::model_list(verify_model_list(fixtures::phi3(), fixtures::phi3_models()));
      for (auto &e : models["entries"])
        e.erase("equation");
      j["models"] = models;
      j["allOk"] = models["allOk"];
      print(j);
    } else if (*ex2) {
      GenusOneEquation E = fixtures::E2(), phi4 = fixtures::phi4();
      Json bad = Json::array();
      for (const auto &p : bad_primes(E))
        bad.push_back(json::number_or_string(p));
      Invariants i4 = invariants(phi4);
      Json j;
      j["E"] = json::invariants(invariants(E));
      j["badPrimes"] = bad;
      j["globalcount"] = json::global(global_count(E, 4));
      j["phi4"] = {{"invariants", json::invariants(i4)},
                   {"integral", is_integral(phi4)},
                   {"v5", detail::val(i4.delta, 5).value()},
                   {"v37", detail::val(i4.delta, 37).value()}};
      j["quartic"] = {{"invariants", json::invariants(invariants(fixtures::quartic2()))}};
      print(j);
    }
  } catch (const Error &e) {
    print(json::error(e));
    return 1;
  } catch (const std::exception &e) {
    print({{"error", e.what()}, {"where", "cli"}});
    return 1;
  }
  return 0;
}
