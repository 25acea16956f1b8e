// Acceptance gate: runs every verification criterion with the default seed and
// tolerances, printing one pass/fail line per criterion.
#include "spaceform/scene.hpp"

#include <iostream>

int main() {
  return spaceform::verify_all(0, 1.0, "acceptance_out", std::cout);
}
