#include <iostream>

#include "tff/realize.hpp"

int main() {
  tff::realize_options opt;
  opt.seed = 7;
  const auto frame = tff::realize_tff(tff::partition{4, 2, 2, 2, 1}, 6, opt);
  const auto report = tff::verify_tff(frame, frame.alpha, opt.tol);
  std::cout << "alpha " << tff::to_string(frame.alpha) << ", residual " << report.sum_residual
            << (report.pass ? " (pass)\n" : " (fail)\n");
  std::cout << tff::to_csv(frame);
  return report.pass ? 0 : 1;
}
