// Generator-form polyhedra and finite unions of them.

#pragma once

#include "ltireach/linalg/dense.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ltireach {

/// conv(vertices) + cone(rays) + span(lines). Empty iff there are no vertices.
struct GenPolyhedron {
  int dim = 0;
  std::vector<RatVector> vertices;
  std::vector<RatVector> rays;
  std::vector<RatVector> lines;

  GenPolyhedron() = default;
  explicit GenPolyhedron(int d) : dim(d) {}

  static GenPolyhedron polytope(std::vector<RatVector> vertices);
  static GenPolyhedron point(const RatVector& p);
  /// p + span(lines)
  static GenPolyhedron affine(const RatVector& p, std::vector<RatVector> lines);

  bool is_polytope() const { return rays.empty() && lines.empty(); }
  bool is_empty() const { return vertices.empty(); }

  /// Drops zero and duplicate generators, scales rays and lines to primitive
  /// integer vectors and sorts everything lexicographically.
  void canonicalize();

  friend bool operator==(const GenPolyhedron& a, const GenPolyhedron& b) {
    return a.dim == b.dim && a.vertices == b.vertices && a.rays == b.rays && a.lines == b.lines;
  }
};

struct ControlSet {
  std::vector<GenPolyhedron> components;

  ControlSet() = default;
  ControlSet(GenPolyhedron p) { components.push_back(std::move(p)); }  // NOLINT(google-explicit-constructor)
  explicit ControlSet(std::vector<GenPolyhedron> cs);

  int dim() const { return components.empty() ? 0 : components.front().dim; }
  bool is_single_polytope() const { return components.size() == 1 && components.front().is_polytope(); }
};

class FacetCeilingExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

int facet_dimension_ceiling();
void set_facet_dimension_ceiling(int d);

/// Lexicographic order on vectors of equal length.
bool lex_less(const RatVector& a, const RatVector& b);

/// Scales a nonzero vector to the primitive integer vector with the same direction.
RatVector primitive_direction(const RatVector& v);

/// Coefficients writing a point in terms of the generators.
struct Decomposition {
  std::vector<Rat> vertex;  // nonnegative, summing to one
  std::vector<Rat> ray;     // nonnegative
  std::vector<Rat> line;    // free
};

std::optional<Decomposition> decompose(const GenPolyhedron& p, const RatVector& x);
bool contains(const GenPolyhedron& p, const RatVector& x);
bool contains(const ControlSet& u, const RatVector& x);

/// Point described by a decomposition.
RatVector recompose(const GenPolyhedron& p, const Decomposition& d);

/// Removes every vertex that lies in the polyhedron generated by the rest,
/// and every ray that lies in the cone of the others plus the lines.
GenPolyhedron remove_redundant(GenPolyhedron p);

GenPolyhedron minkowski_sum(const GenPolyhedron& p, const GenPolyhedron& q);
GenPolyhedron linear_image(const RatMatrix& a, const GenPolyhedron& p);
GenPolyhedron negate(const GenPolyhedron& p);
GenPolyhedron translate(const GenPolyhedron& p, const RatVector& t);
/// conv of the union of all components.
GenPolyhedron convex_hull(const ControlSet& u);

/// Max of <v, dir> over the vertices of a polytope, with an attaining vertex index.
std::pair<Rat, int> support(const GenPolyhedron& p, const RatVector& dir);

/// One summand M p with p ranging over a polyhedron.
struct LinearTerm {
  RatMatrix map;
  const GenPolyhedron* set;
};

/// Finds points p_k in the term sets with sum_k M_k p_k = rhs (one LP).
std::optional<std::vector<Decomposition>> solve_combination(const std::vector<LinearTerm>& terms, const RatVector& rhs);

struct CombinationMax {
  Rat value;
  std::vector<Decomposition> parts;
};

/// Maximizes <dir, sum_k M_k p_k>; nullopt if unbounded or some set is empty.
std::optional<CombinationMax> maximize_combination(const std::vector<LinearTerm>& terms, const RatVector& dir);

struct HalfSpace {
  RatVector normal;
  Rat offset;  // normal . x <= offset (or = offset for equalities)
};

struct HRep {
  int dim = 0;
  std::vector<HalfSpace> equalities;
  std::vector<HalfSpace> inequalities;
};

/// Affine hull equalities plus one inequality per facet, normals primitive integer.
HRep h_representation(const GenPolyhedron& p);

/// Outward facet normals of a polytope. For a polytope that is not full
/// dimensional, the facet normals inside its affine hull together with both
/// orientations of each affine-hull equality normal.
std::vector<RatVector> facet_normals(const GenPolyhedron& p);

bool relative_interior_contains_origin(const GenPolyhedron& p);

/// Vertices of a bounded H-polyhedron; empty if infeasible.
std::vector<RatVector> enumerate_vertices(const HRep& h);

/// P intersected with the column span of basis, in basis coordinates.
GenPolyhedron intersect_with_subspace(const GenPolyhedron& p, const RatMatrix& basis);

}  // namespace ltireach
