// Starts from f, forgets it, and recovers some g with T(g) = T(f).

#include <iostream>

#include "tjurina.hpp"

int main(int argc, char** argv) {
  using namespace tjurina;
  RingPtr ring = RingContext::local({"x", "y", "z", "w"});
  Poly f = parse_poly(argc > 1 ? argv[1] : "x*w^2 - y*z^2", ring);
  Ideal I = tjurina_of_poly(f);
  std::cout << "I = T(f) = " << minimal_generators(I).to_string() << "\n";

  for (std::uint64_t seed : {0, 1, 2}) {
    WitnessSearch ws = find_witness(I, seed);
    if (!ws.witness) {
      std::cout << "seed " << seed << ": no witness after " << ws.tries << " tries\n";
      continue;
    }
    std::cout << "seed " << seed << ": g = " << ws.witness->to_string() << " after " << ws.tries << " tries\n";
  }
}
