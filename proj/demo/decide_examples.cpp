// Runs the decision procedure on a handful of classical ideals.

#include <iostream>

#include "tjurina.hpp"

int main() {
  using namespace tjurina;
  struct Case {
    const char* ring;
    const char* ideal;
  };
  const Case cases[] = {
      {"x,y", "x^2, x*y, y^2"},
      {"x,y", "x*y, x^4+y^3"},
      {"x,y,z", "y*z, x*z, x*y"},
      {"x,y,z,w", "y*z, z^2, x*w, w^2"},
      {"x,y,z,w", "y*z, z^2, x*w, z*w, w^2"},
      {"x,y", "x^2, y"},
  };
  for (const auto& c : cases) {
    RingPtr ring = RingContext::local(parse_name_list(c.ring));
    Ideal I(ring, parse_poly_list(c.ideal, ring));
    DecisionReport r = is_tjurina_ideal(I);
    std::cout << I.to_string() << "\n  Delta(I) = " << r.delta.to_string() << "\n  T-full: " << r.t_full
              << ", verdict: " << (r.verdict ? "Tjurina" : "not Tjurina") << " (" << r.reason << ")\n";
    if (r.witness) std::cout << "  T(" << r.witness->to_string() << ") = I\n";
  }
}
