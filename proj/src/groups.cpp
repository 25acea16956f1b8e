#include "spaceform/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace spaceform {

namespace {

Mat form_matrix(const FormSpace& s) {
  Mat G = Mat::Zero(s.dim, s.dim);
  for (int i = 0; i < s.dim; ++i) G(i, i) = s.signature[i];
  return G;
}

Mat rot_xy(double t) {
  Mat3 R;
  R << std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1;
  return R;
}

Mat boost_x(double l) {
  Mat3 B;
  B << std::cosh(l), 0, std::sinh(l), 0, 1, 0, std::sinh(l), 0, std::cosh(l);
  return B;
}

// Parabolic isometry of R^{3,1} translating each horosphere centered at the
// ideal direction (0,0,1,1); parameter a is the translation amount.
Mat parabolic_along(int axis, double a) {
  Mat4 M = Mat4::Identity();
  const double a2 = a * a;
  M(axis, 2) = -a;
  M(axis, 3) = a;
  M(2, axis) = a;
  M(2, 2) = 1.0 - a2 / 2.0;
  M(2, 3) = a2 / 2.0;
  M(3, axis) = a;
  M(3, 2) = -a2 / 2.0;
  M(3, 3) = 1.0 + a2 / 2.0;
  return M;
}

int letter_rank(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a';
  if (c >= 'A' && c <= 'Z') return 26 + (c - 'A');
  throw std::invalid_argument("word letters must be in a..z / A..Z");
}

bool word_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  return false;
}

char inverse_letter(char c) {
  return std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c))
                                                     : static_cast<char>(std::toupper(c));
}

struct CellKey {
  std::array<long long, 4> c{0, 0, 0, 0};
  bool operator==(const CellKey& o) const { return c == o.c; }
};

struct CellHash {
  size_t operator()(const CellKey& k) const {
    size_t h = 1469598103934665603ull;
    for (long long v : k.c) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Isometry compose(const Isometry& a, const Isometry& b) {
  if (a.space.dim != b.space.dim) throw std::invalid_argument("compose: dimension mismatch");
  return Isometry{a.matrix * b.matrix, a.space, a.label + b.label};
}

Isometry inverse(const Isometry& g) {
  // For form-preserving M, M^-1 = G M^T G with G the diagonal form matrix.
  const Mat G = form_matrix(g.space);
  return Isometry{G * g.matrix.transpose() * G, g.space, invert_word(g.label)};
}

double form_preservation_residual(const Isometry& g) {
  const Mat G = form_matrix(g.space);
  return (g.matrix.transpose() * G * g.matrix - G).cwiseAbs().maxCoeff();
}

bool preserves_upper_sheet(const Isometry& g) {
  Vec p = Vec::Zero(g.space.dim);
  p[g.space.dim - 1] = 1.0;
  return (g.matrix * p)[g.space.dim - 1] > 0;
}

GroupSpec octagon_fuchsian_generators() {
  const double ell = 2.0 * std::acosh(1.0 / std::tan(M_PI / 8.0));
  const FormSpace space = minkowski21();
  GroupSpec spec;
  spec.kind = "fuchsian";
  spec.umbilic_surface = "upper hyperboloid sheet (H^2) in R^{2,1}";
  for (int k = 0; k < 4; ++k) {
    const Mat R = rot_xy(k * M_PI / 4.0);
    spec.generators.push_back(
        Isometry{R * boost_x(ell) * R.transpose(), space, std::string(1, char('a' + k))});
  }
  return spec;
}

std::string octagon_relation_word() { return "ADcBadCb"; }

GroupSpec parabolic_square_generators() {
  const double a = std::sqrt(3.0);
  const FormSpace space = hyperbolic3();
  GroupSpec spec;
  spec.kind = "parabolic";
  spec.umbilic_surface = "horosphere centered at the ideal point (0,0,1,1)";
  spec.generators.push_back(Isometry{parabolic_along(0, a), space, "a"});
  spec.generators.push_back(Isometry{parabolic_along(1, a), space, "b"});
  return spec;
}

GroupSpec trivial_group(const FormSpace& space) {
  GroupSpec spec;
  spec.kind = "trivial";
  spec.umbilic_surface = "none";
  (void)space;
  return spec;
}

std::string invert_word(const std::string& word) {
  std::string out(word.rbegin(), word.rend());
  for (char& c : out) c = inverse_letter(c);
  return out;
}

Isometry word_isometry(const GroupSpec& spec, const std::string& word) {
  if (spec.generators.empty()) throw std::invalid_argument("word_isometry: group has no generators");
  const FormSpace& space = spec.generators.front().space;
  Isometry acc{Mat::Identity(space.dim, space.dim), space, ""};
  for (char c : word) {
    const bool inv = std::isupper(static_cast<unsigned char>(c));
    const size_t idx = static_cast<size_t>(std::tolower(static_cast<unsigned char>(c)) - 'a');
    if (idx >= spec.generators.size())
      throw std::invalid_argument("word_isometry: unknown generator letter");
    acc = compose(acc, inv ? inverse(spec.generators[idx]) : spec.generators[idx]);
  }
  acc.label = word;
  return acc;
}

std::vector<OrbitPoint> orbit(const GroupSpec& spec, const Vec& p, int depth) {
  if (depth < 0 || depth > 8) throw std::invalid_argument("orbit: depth out of range [0, 8]");

  std::vector<Mat> step;  // letters in order a,b,...,A,B,...
  std::vector<char> letters;
  for (size_t i = 0; i < spec.generators.size(); ++i) {
    step.push_back(spec.generators[i].matrix);
    letters.push_back(static_cast<char>('a' + i));
  }
  for (size_t i = 0; i < spec.generators.size(); ++i) {
    step.push_back(inverse(spec.generators[i]).matrix);
    letters.push_back(static_cast<char>('A' + i));
  }

  const double cell = 1e-3;
  std::unordered_map<CellKey, std::vector<int>, CellHash> grid;
  std::vector<OrbitPoint> points;

  auto key_of = [&](const Vec& q) {
    CellKey k;
    for (int i = 0; i < q.size(); ++i) k.c[i] = llround(q[i] / cell);
    return k;
  };
  auto find = [&](const Vec& q) -> int {
    const CellKey base = key_of(q);
    const double tol = kEpsGeom * std::max(1.0, q.norm());
    const int dim = static_cast<int>(q.size());
    std::array<long long, 4> off{0, 0, 0, 0};
    const int span = (dim >= 4) ? 81 : 27;
    for (int code = 0; code < span; ++code) {
      int c = code;
      CellKey k = base;
      for (int i = 0; i < dim; ++i, c /= 3) k.c[i] += (c % 3) - 1;
      (void)off;
      auto it = grid.find(k);
      if (it == grid.end()) continue;
      for (int idx : it->second)
        if ((points[idx].coords - q).cwiseAbs().maxCoeff() < tol) return idx;
    }
    return -1;
  };
  auto insert = [&](const Vec& q, const std::string& word) {
    const int idx = static_cast<int>(points.size());
    points.push_back(OrbitPoint{q, word});
    grid[key_of(q)].push_back(idx);
    return idx;
  };

  insert(p, "");
  // Frontier carries the accumulated matrix so each word costs one multiply.
  struct Node {
    Mat m;
    std::string word;
  };
  std::vector<Node> frontier;
  if (!step.empty())
    frontier.push_back(Node{Mat::Identity(p.size(), p.size()), ""});
  for (int w = 0; w < depth && !frontier.empty(); ++w) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (size_t s = 0; s < step.size(); ++s) {
        if (!node.word.empty() && node.word.back() == inverse_letter(letters[s])) continue;
        Mat m = node.m * step[s];
        Vec q = m * p;
        if (find(q) >= 0) continue;
        insert(q, node.word + letters[s]);
        next.push_back(Node{std::move(m), node.word + letters[s]});
      }
    }
    frontier = std::move(next);
  }

  std::sort(points.begin(), points.end(),
            [](const OrbitPoint& a, const OrbitPoint& b) { return word_less(a.word, b.word); });
  return points;
}

}  // namespace spaceform
