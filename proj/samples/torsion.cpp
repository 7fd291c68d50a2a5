// Integer and mod-2 homology of the six-vertex projective plane.
#include <iostream>

#include "vrhom/vrhom.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : VRHOM_SAMPLE_DIR "/data/rp2.json";
  const auto doc = std::get<vrhom::ComplexDocument>(vrhom::parse_space_file(path, vrhom::SpaceFormat::json));
  const auto k = vrhom::to_complex(doc);
  for (const auto& coeffs : {vrhom::Coefficients::integers(), vrhom::Coefficients::prime_field(2)}) {
    const auto h = vrhom::homology(k, coeffs);
    std::cout << coeffs.to_string() << ':';
    for (const auto& g : h.groups) {
      std::cout << "  " << g.betti;
      for (const auto& t : g.torsion) std::cout << "+Z/" << t;
    }
    std::cout << '\n';
  }
}
