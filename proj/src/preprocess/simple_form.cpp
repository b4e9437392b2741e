#include "ltireach/preprocess/simple_form.hpp"

#include "ltireach/linalg/matrix.hpp"

namespace ltireach {

std::string SimplicityReport::failure() const {
  if (!is_polytope) return "controls are not a single bounded polytope";
  if (!origin_in_rel_interior) return "origin is not in the relative interior of the controls";
  if (!schur) return "spectral radius is not below one";
  if (!real_power) return "no power of the matrix has a real nonnegative spectrum";
  if (!source_zero) return "source is not the origin";
  return {};
}

SimplicityReport check_simple(const LtiSystem& sys) {
  sys.validate();
  SimplicityReport r;
  r.is_polytope = sys.controls.is_single_polytope();
  r.origin_in_rel_interior = r.is_polytope && relative_interior_contains_origin(sys.controls.components.front());
  r.schur = schur_stable(sys.a);
  r.real_power = real_spectrum_power(sys.a);
  r.source_zero = sys.source.isZero();
  r.simple = r.is_polytope && r.origin_in_rel_interior && r.schur && r.real_power.has_value() && r.source_zero;
  return r;
}

long SimpleForm::reduced_horizon(long original) const {
  const long steps = (original + power - 1) / power;
  return std::max(0L, steps - fitting_steps);
}

SimpleForm to_simple_form(const LtiSystem& sys) {
  const SimplicityReport rep = check_simple(sys);
  if (!rep.simple) throw NotSimpleError("system is not simple: " + rep.failure());
  SimpleForm f;
  f.original = sys;
  const int d = sys.dim();
  const GenPolyhedron& u = sys.controls.components.front();

  // power step
  f.power = *rep.real_power;
  f.a_power = matrix_power(sys.a, f.power);
  f.u_power = power_sum(sys.a, u, static_cast<int>(f.power));

  // Fitting step
  const FittingSplit split = fitting_split(f.a_power);
  if (split.v0.cols() > 0) {
    f.fitting_steps = d;
    f.v1_basis = split.v1;
    f.a_fit = restrict_to_subspace(f.a_power, split.v1);
    f.u_fit = to_coordinates(linear_image(matrix_power(f.a_power, d), f.u_power), split.v1);
    const GenPolyhedron absorbed = power_sum(f.a_power, f.u_power, d);
    f.q_fit = intersect_with_subspace(minkowski_sum(sys.target, negate(absorbed)), split.v1);
  } else {
    f.v1_basis = RatMatrix::Identity(d, d);
    f.a_fit = f.a_power;
    f.u_fit = f.u_power;
    f.q_fit = sys.target;
  }

  // span step
  const int d1 = static_cast<int>(f.a_fit.rows());
  const RatMatrix span = krylov_invariant_span(f.a_fit, f.u_fit.vertices);
  if (span.cols() < d1) {
    f.span_basis = span;
    f.a = restrict_to_subspace(f.a_fit, span);
    f.u = to_coordinates(f.u_fit, span);
    f.q = f.q_fit.is_empty() ? GenPolyhedron(static_cast<int>(span.cols())) : intersect_with_subspace(f.q_fit, span);
  } else {
    f.span_basis = RatMatrix::Identity(d1, d1);
    f.a = f.a_fit;
    f.u = f.u_fit;
    f.q = f.q_fit;
  }
  return f;
}

namespace {

// Points u_0..u_{k-1} of P with sum_i B^i u_i = x, or with q - sum_i B^i u_i = x for some q in Q.
std::vector<RatVector> split_power_sum(const RatMatrix& b, const GenPolyhedron& p, int k, const RatVector& x,
                                       const GenPolyhedron* q = nullptr) {
  std::vector<LinearTerm> terms;
  RatMatrix bi = RatMatrix::Identity(b.rows(), b.cols());
  for (int i = 0; i < k; ++i) {
    terms.push_back({q ? RatMatrix(-bi) : bi, &p});
    bi = b * bi;
  }
  if (q) terms.push_back({RatMatrix::Identity(b.rows(), b.cols()), q});
  const auto sol = solve_combination(terms, x);
  if (!sol) throw std::logic_error("witness lifting: no decomposition of a reduced point");
  std::vector<RatVector> out;
  for (int i = 0; i < k; ++i) out.push_back(recompose(p, (*sol)[static_cast<std::size_t>(i)]));
  return out;
}

}  // namespace

std::vector<RatVector> lift_witness(const SimpleForm& f, const std::vector<RatVector>& reduced) {
  const int d = f.original.dim();
  // span stage
  std::vector<RatVector> c1;
  for (const auto& r : reduced) c1.push_back(f.span_basis * r);

  // Fitting stage
  std::vector<RatVector> cp;
  if (f.fitting_steps > 0) {
    const RatMatrix ad = matrix_power(f.a_power, f.fitting_steps);
    for (const auto& c : c1) cp.push_back(split_power_sum(ad, f.u_power, 1, f.v1_basis * c).front());
    const RatVector y1 = replay(f.a_fit, RatVector::Constant(f.a_fit.rows(), Rat(0)), c1);
    const auto tail = split_power_sum(f.a_power, f.u_power, f.fitting_steps, f.v1_basis * y1, &f.original.target);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) cp.push_back(*it);
  } else {
    cp = std::move(c1);
  }

  // power stage
  std::vector<RatVector> out;
  const GenPolyhedron& u = f.original.controls.components.front();
  for (const auto& c : cp) {
    if (f.power == 1) {
      out.push_back(c);
      continue;
    }
    const auto parts = split_power_sum(f.original.a, u, static_cast<int>(f.power), c);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back(*it);
  }

  if (!contains(f.original.target, replay(f.original.a, RatVector::Constant(d, Rat(0)), out)))
    throw std::logic_error("lifted witness does not replay into the target");
  return out;
}

}  // namespace ltireach
