// Non-reachability certificates for simple systems: sign classification of
// exponential polynomials, eventual maximizers, exact suprema of linear
// functionals over the closure of the reachable set, and candidate directions.

#pragma once

#include "ltireach/geometry/polyhedron.hpp"
#include "ltireach/linalg/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ltireach {

using AlgVector = std::vector<RealAlg>;

AlgVector to_alg(const RatVector& v);
bool is_rational(const AlgVector& v);
/// Throws if some entry is irrational.
RatVector to_rat(const AlgVector& v);

/// Exact <r, tau>.
RealAlg dot(const RatVector& r, const AlgVector& tau);
/// Sign of <r, tau>; interval refinement first, exact arithmetic only if needed.
int sign_of_dot(const RatVector& r, const AlgVector& tau);

/// Scales by the inverse absolute value of the first nonzero entry.
AlgVector normalize_direction(const AlgVector& v);

enum class SeqKind { IdenticallyZero, UltimatelyPositive, UltimatelyNegative };
std::string to_string(SeqKind k);

/// Classification of s_n = <A^n (v - w), tau>.
struct SeqClass {
  SeqKind kind = SeqKind::IdenticallyZero;
  /// Least index from which every s_n has the sign of `kind` (0 when identically zero).
  long threshold = 0;
  /// Index from which the dominant term exceeds the sum of all others in absolute value.
  long tail_threshold = 0;
  int dominant_eigen = -1;  // i0
  int dominant_power = -1;  // j0
};

/// A = S + N recovered from the spectral data.
RatMatrix system_matrix(const SpectralData& s);

SeqClass classify_sequence(const SpectralData& s, const RatVector& v, const RatVector& w, const AlgVector& tau);

struct EventualMax {
  RatVector vertex;
  long threshold = 0;
};

/// Vertex u of U with <A^n u, tau> >= <A^n v, tau> for every vertex v and n >= threshold.
/// Among equivalent vertices the lexicographically smallest is returned.
EventualMax eventual_maximizer(const SpectralData& s, const GenPolyhedron& u, const AlgVector& tau);

/// sup <x, tau> over the closure of the reachable set from the origin.
RealAlg sup_in_direction(const SpectralData& s, const GenPolyhedron& u, const AlgVector& tau);

/// Rational point X with <X, tau> equal to the supremum for the given maximizer and threshold:
/// sum_{i<N} A^i u_i + A^N (I - A)^{-1} u with u_i maximizing <A^i v, tau> over the vertices.
RatVector sup_point(const RatMatrix& a, const GenPolyhedron& u, const AlgVector& tau, const RatVector& maximizer,
                    long threshold);

struct SeparatorCertificate {
  AlgVector tau;
  RealAlg bound;
  RatVector maximizer;
  long threshold = 0;
  RealAlg sup_value;
  RealAlg min_over_q;
};

/// A certificate iff sup over the closure <= min over Q (nonstrict).
std::optional<SeparatorCertificate> verify_separator(const SpectralData& s, const GenPolyhedron& u,
                                                     const GenPolyhedron& q, const AlgVector& tau);

/// Rechecks a certificate from tau, maximizer and threshold alone.
bool audit_certificate(const SpectralData& s, const GenPolyhedron& u, const GenPolyhedron& q,
                       const SeparatorCertificate& c);

struct DomSpace {
  std::vector<AlgVector> basis;
};

DomSpace dom_space(const SpectralData& s, const GenPolyhedron& u, const AlgVector& tau);

/// Lazily produced candidate separators built from the geometry of U, A and Q.
class CandidateStream {
public:
  CandidateStream(const SpectralData& s, GenPolyhedron u, GenPolyhedron q, int budget);

  std::optional<AlgVector> next();
  long produced() const { return produced_; }

private:
  void fill();
  bool push(const AlgVector& v);

  const SpectralData* spectral_;
  RatMatrix a_;
  GenPolyhedron u_, q_;
  int budget_;
  int phase_ = 0;
  int step_ = 0;
  long produced_ = 0;
  std::vector<AlgVector> queue_;
  std::size_t head_ = 0;
  std::vector<AlgVector> seen_;
  std::vector<AlgVector> rows_;
  std::vector<int> comb_;
};

std::vector<AlgVector> extremal_candidates(const SpectralData& s, const GenPolyhedron& u, const GenPolyhedron& q,
                                           int budget);

/// Distinct real roots of integer polynomials of degree <= d with coefficients bounded by h.
std::vector<RealAlg> bounded_roots(int degree, int height);

/// Fair enumeration of algebraic vectors: batches (degree, height) in order of
/// increasing degree + height, up to the given maxima.
class AlgebraicVectorStream {
public:
  AlgebraicVectorStream(int dim, int max_degree, int max_height);

  std::optional<AlgVector> next();
  int degree() const { return degree_; }
  int height() const { return height_; }

private:
  bool advance_batch();

  int dim_, max_degree_, max_height_;
  int degree_ = 0, height_ = 0;
  std::vector<RealAlg> roots_;
  std::vector<std::size_t> odometer_;
  bool started_ = false;
};

std::vector<AlgVector> enumerate_algebraic_vectors(int dim, int max_degree, int max_height);

}  // namespace ltireach
