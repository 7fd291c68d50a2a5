// Samples the unit circle and prints the Vietoris-Rips betti numbers at a few
// closed scales.
#include <cmath>
#include <iostream>
#include <numbers>

#include "vrhom/vrhom.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 12;
  std::vector<std::vector<double>> coords;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    coords.push_back({std::cos(t), std::sin(t)});
  }
  const auto d = vrhom::SemiPseudometric::euclidean(vrhom::make_space(n), coords);

  for (double q : {0.3, 0.6, 1.2, 2.0}) {
    const auto k = vrhom::clique_complex(vrhom::metric_relation(d, q, vrhom::ScaleMode::closed), 3);
    const auto h = vrhom::homology(k, vrhom::Coefficients::integers());
    std::cout << "q=" << q << "  betti";
    for (std::size_t dim = 0; dim < 3; ++dim) std::cout << ' ' << h.groups[dim].betti;
    std::cout << '\n';
  }
}
