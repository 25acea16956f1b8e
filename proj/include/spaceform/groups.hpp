#pragma once

#include "spaceform/forms.hpp"

#include <string>
#include <vector>

namespace spaceform {

// A linear map preserving the ambient quadratic form, carrying its generator
// word for provenance. Words read left to right: "ab" maps p to g_a(g_b(p)).
// Lowercase letters are generators, uppercase their inverses.
struct Isometry {
  Mat matrix;
  FormSpace space;
  std::string label;
};

Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& g);

// max |g^T G g - G| over entries, G the diagonal form matrix.
double form_preservation_residual(const Isometry& g);
// True when the image of an upper-sheet test point stays on the upper sheet.
bool preserves_upper_sheet(const Isometry& g);

struct GroupSpec {
  std::vector<Isometry> generators;  // inverses are derived
  std::string kind;                  // "fuchsian" | "parabolic" | "trivial"
  std::string umbilic_surface;
};

// Four hyperbolic translations of R^{2,1} pairing opposite sides of the
// regular octagon with vertex angle pi/4 centered at (0,0,1): generator k is
// R(k pi/4) T(l) R(k pi/4)^-1 with translation length l = 2 arcosh(cot pi/8),
// so cosh l = 5 + 4 sqrt(2).
GroupSpec octagon_fuchsian_generators();

// Word over {a..d, A..D} that multiplies to the identity: the genus-2 surface
// relation traced around the octagon vertex cycle.
std::string octagon_relation_word();

// Two commuting parabolic isometries of H^3 (hyperboloid coordinates in
// R^{3,1}) matching the unit translations (u,v,h) -> (u+1,v,h) and
// (u,v,h) -> (u,v+1,h) of the upper half-space model under
// halfspace_to_hyperboloid. Both fix the ideal point (0,0,1,1) (Klein
// tangency point (0,0,1)) and preserve every horosphere centered there.
GroupSpec parabolic_square_generators();

GroupSpec trivial_group(const FormSpace& space);

std::string invert_word(const std::string& word);
Isometry word_isometry(const GroupSpec& spec, const std::string& word);

struct OrbitPoint {
  Vec coords;
  std::string word;  // shortest producing word (ties: first in a,b,...,A,B,... order)
};

// All distinct images of p under reduced words of length <= depth, including
// p itself (empty word). Deduplication identifies points within
// kEpsGeom * max(1, |q|). Output is sorted by word length, then by word with
// generators ordered a < b < ... < A < B < ...
std::vector<OrbitPoint> orbit(const GroupSpec& spec, const Vec& p, int depth);

}  // namespace spaceform
