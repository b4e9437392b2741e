// Small hand-built systems shared by several test binaries.

#pragma once

#include "ltireach/linalg/matrix.hpp"
#include "ltireach/preprocess/system.hpp"

#include <initializer_list>

namespace ltireach::testing {

inline RatVector vec(std::initializer_list<Rat> xs) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline GenPolyhedron fig2_controls() {
  return GenPolyhedron::polytope({vec({-2, -1}), vec({0, -1}), vec({0, 1}), vec({2, 1})});
}

inline GenPolyhedron box(const RatVector& center, const Rat& radius) {
  const int d = static_cast<int>(center.size());
  std::vector<RatVector> vs;
  for (int mask = 0; mask < (1 << d); ++mask) {
    RatVector v = center;
    for (int i = 0; i < d; ++i) v(i) += (mask >> i & 1) ? radius : -radius;
    vs.push_back(v);
  }
  return GenPolyhedron::polytope(vs);
}

inline LtiSystem fig2_system(GenPolyhedron target) {
  LtiSystem s;
  s.a = parse_matrix("1/3 0; 0 2/3");
  s.controls = ControlSet(fig2_controls());
  s.source = RatVector::Zero(2);
  s.target = std::move(target);
  return s;
}

}  // namespace ltireach::testing
