#pragma once

// Worked examples used by the tests and the CLI.

#include "genus1/equations.hpp"

#include <vector>

namespace genus1::fixtures {

// y^2 + xy = x^3 - x^2 - 617x + 5916
inline GenusOneEquation E1() { return GenusOneEquation::weierstrass(1, -1, 0, -617, 5916); }

// Ternary cubic for an element of the 3-Selmer group of E1.
inline GenusOneEquation phi3() {
  return parse_equation("deg=3; coeffs=[21686353648850,1010096983050575,64131409475,"
                        "234081254700017,9338329782950,842219868972245,120889031707155,"
                        "1340388284750,4822691362750,67198263238095]");
}

// The twelve transformations producing the minimal degree-3 models of phi3.
inline std::vector<Transformation> phi3_models() {
  static const char *specs[] = {
      "mu=1; M=id",          "mu=1/5; M=diag(5,1,1)",    "mu=1/5; M=diag(1,5,1)",
      "mu=1/25; M=diag(5,5,1)", "mu=1/25; M=diag(5,1,5)", "mu=1/25; M=diag(1,25,1)",
      "mu=1/19; M=diag(1,1,19)", "mu=1/95; M=diag(5,1,19)", "mu=1/95; M=diag(1,5,19)",
      "mu=1/475; M=diag(5,5,19)", "mu=1/475; M=diag(5,1,95)", "mu=1/475; M=diag(1,25,19)",
  };
  std::vector<Transformation> out;
  for (const char *s : specs)
    out.push_back(parse_transformation(s, 3));
  return out;
}

// y^2 + xy + y = x^3 - 4x - 3
inline GenusOneEquation E2() { return GenusOneEquation::weierstrass(1, 0, 1, -4, -3); }

// y^2 = -3x^4 + 2x^3 + 7x^2 - 2x - 3
inline GenusOneEquation quartic2() { return parse_equation("deg=2; coeffs=[0,0,0,-3,2,7,-2,-3]"); }

// Quadric intersection from a second 2-descent on quartic2.
inline GenusOneEquation phi4() {
  return parse_equation("deg=4; coeffs=[1,0,-1,0,-1,0,1,1,0,0,0,0,0,1,1,1,-1,1,-1,0]");
}

} // namespace genus1::fixtures
