// Decides a rank sequence, prints its certificate and tableaux, then maps
// the certificate through both dualities.
#include <iostream>

#include "tff/dualities.hpp"
#include "tff/tff.hpp"

int main() {
  const tff::partition ranks{2, 2, 2, 1};
  const int dim = 4;

  auto d = tff::decide(ranks, dim, true);
  std::cout << tff::to_string(ranks) << " in dimension " << dim << ": " << (d ? "yes" : "no") << "\n";
  if (!d) return 1;

  const auto& a = *d.certificate;
  std::cout << tff::render_tableaux(a) << "\n";

  const auto spatial = tff::config_spatial_dual(a);
  std::cout << "spatial dual, ranks";
  for (int r : spatial.ranks()) std::cout << ' ' << r;
  std::cout << "\n" << tff::render_tableaux(spatial) << "\n";

  const auto naimark = tff::config_naimark_dual(a);
  std::cout << "Naimark dual in dimension " << naimark.dim() << "\n" << tff::render_tableaux(naimark);
  return 0;
}
