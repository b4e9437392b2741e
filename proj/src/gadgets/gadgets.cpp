#include "ltireach/gadgets/gadgets.hpp"

#include "ltireach/linalg/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltireach {

namespace {

RatMatrix identity(Eigen::Index d) { return RatMatrix::Identity(d, d); }

RatMatrix unipotent(Eigen::Index d, Eigen::Index r, Eigen::Index c, const Rat& v) {
  RatMatrix m = identity(d);
  m(r, c) = v;
  return m;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  RatMatrix out = RatMatrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

void require_invertible(const RatMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + " is not square");
  if (determinant(m).is_zero()) throw std::invalid_argument(std::string(what) + " is not invertible");
}

}  // namespace

RatMatrix signed_power(const RatMatrix& m, long n) {
  if (n >= 0) return matrix_power(m, n);
  const auto inv = inverse(m);
  if (!inv) throw std::invalid_argument("negative power of a singular matrix");
  return matrix_power(*inv, -n);
}

void PoweringInstance::validate() const {
  require_invertible(target, "target");
  for (const auto& f : factors) {
    if (f.rows() != target.rows()) throw std::invalid_argument("factor dimension differs from the target");
    require_invertible(f, "factor");
  }
}

bool PoweringInstance::holds(const std::vector<long>& exponents) const {
  if (exponents.size() != factors.size()) throw std::invalid_argument("one exponent per factor expected");
  RatMatrix p = identity(target.rows());
  for (std::size_t i = 0; i < factors.size(); ++i) p = p * signed_power(factors[i], exponents[i]);
  return p == target;
}

PoweringInstance gadget_constant(long k) {
  return {{unipotent(2, 0, 1, Rat(1))}, unipotent(2, 0, 1, Rat(k))};
}

PoweringInstance gadget_add() {
  return {{unipotent(2, 0, 1, Rat(1)), unipotent(2, 0, 1, Rat(1)), unipotent(2, 0, 1, Rat(-1))}, identity(2)};
}

PoweringInstance gadget_mul() {
  return {{unipotent(3, 0, 2, Rat(-1)), unipotent(3, 1, 2, Rat(-1)), unipotent(3, 0, 1, Rat(1)),
           unipotent(3, 1, 2, Rat(1)), unipotent(3, 0, 1, Rat(-1))},
          identity(3)};
}

PoweringInstance pad_factors(const PoweringInstance& p, int k) {
  if (static_cast<int>(p.factors.size()) > k) throw std::invalid_argument("instance already has more factors");
  PoweringInstance out = p;
  while (static_cast<int>(out.factors.size()) < k) out.factors.push_back(identity(p.target.rows()));
  return out;
}

PoweringInstance conjoin(const std::vector<PoweringInstance>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to conjoin");
  const std::size_t k = parts.front().factors.size();
  PoweringInstance out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<RatMatrix> blocks;
    for (const auto& p : parts) {
      if (p.factors.size() != k) throw std::invalid_argument("instances have different numbers of factors");
      blocks.push_back(p.factors[i]);
    }
    out.factors.push_back(block_diag(blocks));
  }
  std::vector<RatMatrix> targets;
  for (const auto& p : parts) targets.push_back(p.target);
  out.target = block_diag(targets);
  return out;
}

void VectorReachInstance::validate() const {
  if (x.isZero() || y.isZero()) throw std::invalid_argument("x and y must be nonzero");
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in dimension");
  for (const auto& f : factors) {
    if (f.rows() != x.size()) throw std::invalid_argument("factor dimension differs from the vectors");
    require_invertible(f, "factor");
  }
}

bool VectorReachInstance::holds(const std::vector<long>& exponents) const {
  if (exponents.size() != factors.size()) throw std::invalid_argument("one exponent per factor expected");
  RatVector z = x;
  for (std::size_t i = 0; i < factors.size(); ++i) z = signed_power(factors[i], exponents[i]) * z;
  return z == y;
}

VectorReachInstance powering_to_vector_reach(const PoweringInstance& p) {
  p.validate();
  const Eigen::Index d = p.target.rows();
  VectorReachInstance v;
  for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it)
    v.factors.push_back(block_diag(std::vector<RatMatrix>(static_cast<std::size_t>(d), *it)));
  v.x = RatVector::Zero(d * d);
  v.y = RatVector::Zero(d * d);
  for (Eigen::Index j = 0; j < d; ++j) {
    v.x(j * d + j) = Rat(1);
    v.y.segment(j * d, d) = p.target.col(j);
  }
  return v;
}

AppendixSchedule appendix_schedule(const std::vector<long>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("at least one exponent expected");
  AppendixSchedule s;
  s.times.push_back(0);
  for (long n : exponents) {
    if (n == 0) throw std::invalid_argument("exponents must be nonzero");
    s.times.push_back(s.times.back() + n);
  }
  const long low = *std::min_element(s.times.begin(), s.times.end());
  for (auto& t : s.times) t -= low;
  s.realizable = *std::max_element(s.times.begin(), s.times.end()) == s.times.back();
  return s;
}

VectorReachLti vector_reach_to_lti(const VectorReachInstance& v) {
  v.validate();
  const int d = v.dim();
  const int k = static_cast<int>(v.factors.size());
  const int big = (k + 1) * d + k;
  std::vector<RatMatrix> blocks = {identity(d)};
  for (const auto& f : v.factors) blocks.push_back(f);
  blocks.push_back(identity(k));

  // atomic control of V_i moves z from block i to block i + 1 and adds e_i
  const int flag = (k + 1) * d;
  std::vector<GenPolyhedron> comps;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    RatVector offset = RatVector::Zero(big);
    std::vector<RatVector> lines;
    for (int i = 0; i < k; ++i) {
      if (!(mask & (1u << i))) continue;
      offset(flag + i) = Rat(1);
      for (int c = 0; c < d; ++c) {
        RatVector l = RatVector::Zero(big);
        l(i * d + c) = Rat(-1);
        l((i + 1) * d + c) = Rat(1);
        lines.push_back(l);
      }
    }
    comps.push_back(GenPolyhedron::affine(offset, lines));
  }

  VectorReachLti out;
  out.k = k;
  out.block = d;
  out.system.a = block_diag(blocks);
  out.system.controls = ControlSet(std::move(comps));
  out.system.source = RatVector::Zero(big);
  out.system.source.head(d) = v.x;
  RatVector t = RatVector::Zero(big);
  t.segment(k * d, d) = v.y;
  for (int i = 0; i < k; ++i) t(flag + i) = Rat(1);
  out.system.target = GenPolyhedron::point(t);
  return out;
}

std::optional<std::vector<RatVector>> VectorReachLti::witness_controls(const VectorReachInstance& v,
                                                                       const std::vector<long>& exponents) const {
  const AppendixSchedule s = appendix_schedule(exponents);
  if (!s.realizable || !v.holds(exponents)) return std::nullopt;
  const int d = block;
  const int big = system.dim();
  std::vector<RatVector> controls(static_cast<std::size_t>(s.horizon()), RatVector::Zero(big));
  RatVector z = v.x;
  for (int i = 0; i < k; ++i) {
    RatVector& u = controls[static_cast<std::size_t>(s.times[static_cast<std::size_t>(i)])];
    u.segment(i * d, d) -= z;
    u.segment((i + 1) * d, d) += z;
    u((k + 1) * d + i) += Rat(1);
    z = signed_power(v.factors[static_cast<std::size_t>(i)], exponents[static_cast<std::size_t>(i)]) * z;
  }
  return controls;
}

LtiSystem skolem_to_lti(const RatMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 2) throw std::invalid_argument("Skolem matrix must be square of size >= 2");
  const Eigen::Index d = m.rows();
  LtiSystem sys;
  sys.a = block_diag({m, RatMatrix::Constant(1, 1, Rat(2))});
  RatVector offset = RatVector::Zero(d + 1);
  offset(d) = Rat(1);
  std::vector<RatVector> lines;
  for (Eigen::Index i = 1; i < d; ++i) lines.push_back(RatVector::Unit(d + 1, i));
  sys.controls = ControlSet({GenPolyhedron::point(RatVector::Zero(d + 1)), GenPolyhedron::affine(offset, lines)});
  sys.source = RatVector::Unit(d + 1, 1);
  sys.target = GenPolyhedron::point(RatVector::Unit(d + 1, d));
  return sys;
}

bool skolem_zero_at(const RatMatrix& m, long n) { return matrix_power(m, n)(0, 1).is_zero(); }

SkolemTruth skolem_truth(const RatMatrix& m, long bound) {
  SkolemTruth t;
  RatMatrix p = identity(m.rows());
  for (long n = 1; n <= bound; ++n) {
    p = p * m;
    if (p(0, 1).is_zero()) {
      t.least_positive = n;
      break;
    }
  }
  return t;
}

std::vector<RatVector> skolem_witness_controls(const RatMatrix& m, long n) {
  if (n < 1) throw std::invalid_argument("the reduction needs at least one step");
  const Eigen::Index d = m.rows();
  std::vector<RatVector> controls(static_cast<std::size_t>(n - 1), RatVector::Zero(d + 1));
  const RatMatrix p = matrix_power(m, n);
  RatVector last = RatVector::Zero(d + 1);
  for (Eigen::Index i = 1; i < d; ++i) last(i) = -p(i, 1);
  last(d) = Rat(1);
  controls.push_back(last);
  return controls;
}

LtiSystem markov_to_lti(const RatMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 2) throw std::invalid_argument("Markov matrix must be square of size >= 2");
  const int d = static_cast<int>(m.rows());
  for (int c = 0; c < d; ++c) {
    Rat sum(0);
    for (int r = 0; r < d; ++r) {
      if (m(r, c).sign() < 0) throw std::invalid_argument("matrix has a negative entry");
      sum += m(r, c);
    }
    if (sum != Rat(1)) throw std::invalid_argument("matrix is not column-stochastic");
  }
  const int n = d + 3;
  const int y = d, z1 = d + 1, z2 = d + 2;
  // coordinates (w, y, z1, z2) with w = -x
  HRep h;
  h.dim = n;
  auto row = [&](std::initializer_list<std::pair<int, int>> entries) {
    RatVector r = RatVector::Zero(n);
    for (auto [i, v] : entries) r(i) = Rat(v);
    return r;
  };
  for (int i = 0; i < d; ++i) h.inequalities.push_back({row({{i, 1}}), Rat(0)});  // x_i >= 0
  h.inequalities.push_back({row({{y, -1}}), Rat(0)});                            // y >= 0
  h.inequalities.push_back({row({{y, 1}, {0, 1}}), Rat(0)});                     // y <= x_1
  h.inequalities.push_back({row({{z1, 1}}), Rat(1)});                            // z <= 1
  RatVector sum = row({{z1, -1}});
  for (int i = 0; i < d; ++i) sum(i) = Rat(-1);
  h.equalities.push_back({sum, Rat(0)});                  // sum x = z
  h.equalities.push_back({row({{z1, 1}, {z2, -1}}), Rat(0)});  // both copies of z agree

  LtiSystem sys;
  sys.a = block_diag({m, RatMatrix::Zero(2, 2), identity(1)});
  sys.controls = GenPolyhedron::polytope(enumerate_vertices(h));
  sys.source = RatVector::Unit(n, 1);
  RatVector t = RatVector::Zero(n);
  t(y) = Rat(1, 2);
  t(z1) = Rat(1);
  t(z2) = Rat(1);
  sys.target = GenPolyhedron::point(t);
  return sys;
}

std::optional<long> markov_truth(const RatMatrix& m, long bound) {
  RatMatrix p = identity(m.rows());
  for (long n = 1; n <= bound; ++n) {
    p = p * m;
    if (p(0, 1) >= Rat(1, 2)) return n;
  }
  return std::nullopt;
}

std::vector<RatVector> markov_witness_controls(const RatMatrix& m, long n) {
  if (n < 1) throw std::invalid_argument("the reduction needs at least one step");
  const Eigen::Index d = m.rows();
  std::vector<RatVector> controls(static_cast<std::size_t>(n - 1), RatVector::Zero(d + 3));
  RatVector last = RatVector::Zero(d + 3);
  last.head(d) = -(matrix_power(m, n).col(1));
  last(d) = Rat(1, 2);
  last(d + 1) = Rat(1);
  last(d + 2) = Rat(1);
  controls.push_back(last);
  return controls;
}

}  // namespace ltireach
