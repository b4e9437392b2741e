#include "ltireach/preprocess/system.hpp"

#include "ltireach/linalg/matrix.hpp"

#include <stdexcept>

namespace ltireach {

void LtiSystem::validate() const {
  const auto d = a.rows();
  if (a.cols() != d) throw std::invalid_argument("matrix is not square");
  if (source.size() != d) throw std::invalid_argument("source dimension does not match the matrix");
  if (target.dim != d) throw std::invalid_argument("target dimension does not match the matrix");
  if (!target.is_polytope()) throw std::invalid_argument("target must be a polytope");
  if (controls.components.empty()) throw std::invalid_argument("no control components");
  for (const auto& c : controls.components) {
    if (c.dim != d) throw std::invalid_argument("control dimension does not match the matrix");
    if (c.is_empty()) throw std::invalid_argument("control component without vertices");
  }
}

RatVector replay(const RatMatrix& a, const RatVector& source, const std::vector<RatVector>& controls) {
  RatVector x = source;
  for (const auto& u : controls) x = a * x + u;
  return x;
}

GenPolyhedron power_sum(const RatMatrix& a, const GenPolyhedron& p, int k) {
  if (k <= 0) return GenPolyhedron::point(RatVector::Constant(p.dim, Rat(0)));
  GenPolyhedron sum = p, term = p;
  for (int i = 1; i < k; ++i) {
    term = linear_image(a, term);
    sum = minkowski_sum(sum, term);
  }
  return sum;
}

GenPolyhedron to_coordinates(const GenPolyhedron& p, const RatMatrix& basis) {
  if (!p.is_polytope()) throw std::invalid_argument("to_coordinates needs a polytope");
  GenPolyhedron r(static_cast<int>(basis.cols()));
  for (const auto& v : p.vertices) {
    auto c = coordinates(basis, v);
    if (!c) throw std::invalid_argument("vertex outside the subspace");
    r.vertices.push_back(*c);
  }
  r.canonicalize();
  return r;
}

}  // namespace ltireach
