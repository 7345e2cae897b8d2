// Small tour of the library: arithmetic, forms, valuation, and the zero-sum solver.

#include <iostream>

#include "psym/psym.hpp"

int main() {
  using namespace psym;
  const std::uint32_t p = 3;

  auto z0 = parse_element("x^2*y", p);
  auto z1 = parse_element("x^2*y^2", p);
  std::cout << "(x^2 y)(x^2 y^2) = " << render_element(z0 * z1) << "\n";
  std::cout << "(x + y)^3 = " << render_element(alg_pow(parse_element("x + y", p), p)) << "\n";
  std::cout << "trace(x^2) = " << trace(parse_element("x^2", p)).to_string() << "\n";
  std::cout << "norm(x + 1) = " << norm_fx(parse_element("x + 1", p)).to_string() << "\n";

  auto z = parse_element("a^-1*x^2 + b*y", p);
  std::cout << "v(" << render_element(z) << ") = " << to_string(value(z), p)
            << ", leading monomial " << to_string(leading_monomial(z)) << "\n";

  ZeroSumInstance inst{p, {{1, 0}, {2, 0}, {0, 1}, {0, 2}}, {1, 1}};
  auto sol = solve(inst);
  std::cout << "zero-sum: branch " << to_string(sol.branch) << ", weight " << sol.weight()
            << ", verified " << std::boolalpha << verify(inst, sol) << "\n";
}
