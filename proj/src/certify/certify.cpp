#include "ltireach/certify/certify.hpp"

#include "ltireach/linalg/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ltireach {

AlgVector to_alg(const RatVector& v) {
  AlgVector out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.emplace_back(v(i));
  return out;
}

bool is_rational(const AlgVector& v) {
  return std::all_of(v.begin(), v.end(), [](const RealAlg& x) { return x.is_rational(); });
}

RatVector to_rat(const AlgVector& v) {
  RatVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_rat();
  return out;
}

RealAlg dot(const RatVector& r, const AlgVector& tau) {
  if (static_cast<std::size_t>(r.size()) != tau.size()) throw std::invalid_argument("dot: size mismatch");
  Rat rational(0);
  RealAlg acc(0);
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const Rat& c = r(static_cast<Eigen::Index>(k));
    if (c.is_zero() || tau[k].is_zero()) continue;
    if (tau[k].is_rational()) rational += c * tau[k].to_rat();
    else acc += RealAlg(c) * tau[k];
  }
  return acc + RealAlg(rational);
}

int sign_of_dot(const RatVector& r, const AlgVector& tau) {
  if (static_cast<std::size_t>(r.size()) != tau.size()) throw std::invalid_argument("sign_of_dot: size mismatch");
  if (is_rational(tau)) return to_rat(tau).dot(r).sign();
  AlgVector t = tau;
  Rat width(BigInt(1), BigInt(16));
  for (int round = 0; round < 6; ++round) {
    Interval sum{Rat(0), Rat(0)};
    for (std::size_t k = 0; k < t.size(); ++k) {
      const Rat& c = r(static_cast<Eigen::Index>(k));
      if (c.is_zero()) continue;
      t[k] = t[k].refined(width);
      sum = sum + c * t[k].interval();
    }
    if (sum.lo.sign() > 0) return 1;
    if (sum.hi.sign() < 0) return -1;
    if (sum.lo.is_zero() && sum.hi.is_zero()) return 0;
    width = width * Rat(BigInt(1), BigInt(256));
  }
  return dot(r, tau).sign();
}

AlgVector normalize_direction(const AlgVector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const RealAlg& x) { return !x.is_zero(); });
  if (it == v.end()) return v;
  const RealAlg scale = abs(*it);
  if (scale == RealAlg(1)) return v;
  AlgVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.is_zero() ? x : x / scale);
  return out;
}

std::string to_string(SeqKind k) {
  switch (k) {
    case SeqKind::IdenticallyZero: return "identically zero";
    case SeqKind::UltimatelyPositive: return "ultimately positive";
    case SeqKind::UltimatelyNegative: return "ultimately negative";
  }
  return "?";
}

RatMatrix system_matrix(const SpectralData& s) { return s.semisimple + s.nilpotent; }

namespace {

struct Term {
  int i;
  int j;
  RealAlg c;
};

Rat abs_lower(RealAlg c) {
  if (c.is_rational()) return abs(c.to_rat());
  while (c.lo().sign() <= 0 && c.hi().sign() >= 0) c = c.bisected();
  return std::min(abs(c.lo()), abs(c.hi()));
}

Rat abs_upper(const RealAlg& c) {
  if (c.is_rational()) return abs(c.to_rat());
  return std::max(abs(c.lo()), abs(c.hi()));
}

// Rational rho' with lambda_k / lambda_0 <= rho' < 1.
Rat ratio_bound(RealAlg small, RealAlg big) {
  if (small.is_rational() && big.is_rational()) {
    const Rat r = small.to_rat() / big.to_rat();
    if (r.den() <= BigInt(1) << 32) return r;
  }
  while (!(small.hi() < big.lo())) {
    small = small.bisected();
    big = big.bisected();
  }
  const Rat gap = big.lo() - small.hi();
  small = small.refined(gap / Rat(4));
  big = big.refined(gap / Rat(4));
  const Rat rho = small.hi() / big.lo();
  const Rat slack = (Rat(1) - rho) / Rat(2);
  BigInt scale(2);
  while (Rat(BigInt(1), scale) > slack) scale *= 2;
  return Rat((rho * Rat(scale)).ceil(), scale);
}

// Least n >= start with amp * C(n, jk) * rho^n < C(n, j0), assuming the
// left side over the right decreases from `start` on.
long crossover(const Rat& amp, const Rat& rho, long jk, long j0, long start) {
  auto ok = [&](long n) { return amp * Rat(binomial(n, jk)) * pow(rho, n) < Rat(binomial(n, j0)); };
  if (ok(start)) return start;
  long lo = start, hi = std::max(2 * start, start + 1);
  while (!ok(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (1L << 24)) throw std::runtime_error("tail threshold search did not terminate");
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

long ceil_rat(const Rat& r) { return r.ceil().get_si(); }

}  // namespace

SeqClass classify_sequence(const SpectralData& s, const RatVector& v, const RatVector& w, const AlgVector& tau) {
  const RatVector x = v - w;
  const auto c = expand_inner_product(s, x, tau);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      if (!c[i][j].is_zero()) terms.push_back({static_cast<int>(i), static_cast<int>(j), c[i][j]});
  SeqClass out;
  if (terms.empty()) return out;

  const auto dom_it = std::max_element(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  const Term dom = *dom_it;
  out.kind = dom.c.sign() > 0 ? SeqKind::UltimatelyPositive : SeqKind::UltimatelyNegative;
  out.dominant_eigen = dom.i;
  out.dominant_power = dom.j;

  const long others = static_cast<long>(terms.size()) - 1;
  long tail = dom.j;
  if (others > 0) {
    const Rat lead = abs_lower(dom.c);
    for (const auto& t : terms) {
      if (t.i == dom.i && t.j == dom.j) continue;
      const Rat amp = Rat(others) * abs_upper(t.c) / lead;
      long start = std::max<long>(dom.j, t.j);
      Rat rho(1);
      if (t.i != dom.i) {
        rho = ratio_bound(s.eigenvalues[static_cast<std::size_t>(t.i)], s.eigenvalues[static_cast<std::size_t>(dom.i)]);
        // ratio of consecutive bounds is (n+1-j0) rho / (n+1-jk)
        const Rat turn = (Rat(t.j) - Rat(dom.j) * rho) / (Rat(1) - rho);
        start = std::max(start, ceil_rat(turn));
      }
      tail = std::max(tail, crossover(amp, rho, t.j, dom.j, std::max<long>(start, 0)));
    }
  }
  out.tail_threshold = tail;

  const int want = out.kind == SeqKind::UltimatelyPositive ? 1 : -1;
  const RatMatrix a = system_matrix(s);
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(tail));
  RatVector y = x;
  for (long n = 0; n < tail; ++n) {
    signs.push_back(sign_of_dot(y, tau));
    y = a * y;
  }
  long n0 = tail;
  while (n0 > 0 && signs[static_cast<std::size_t>(n0 - 1)] == want) --n0;
  out.threshold = n0;
  return out;
}

namespace {

std::vector<RatVector> sorted_vertices(const GenPolyhedron& u) {
  if (!u.is_polytope() || u.is_empty()) throw std::invalid_argument("expected a nonempty polytope");
  std::vector<RatVector> vs = u.vertices;
  std::sort(vs.begin(), vs.end(), lex_less);
  return vs;
}

RatMatrix resolvent(const RatMatrix& a) {
  const auto inv = inverse(RatMatrix(RatMatrix::Identity(a.rows(), a.cols()) - a));
  if (!inv) throw std::domain_error("I - A is singular");
  return *inv;
}

// Index of a vertex maximizing <A^i v, tau> given the images A^i v.
std::size_t argmax_images(const std::vector<RatVector>& images, const AlgVector& tau) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < images.size(); ++k)
    if (sign_of_dot(images[k] - images[best], tau) > 0) best = k;
  return best;
}

}  // namespace

EventualMax eventual_maximizer(const SpectralData& s, const GenPolyhedron& u, const AlgVector& tau) {
  const auto vs = sorted_vertices(u);
  std::size_t best = 0;
  for (std::size_t k = 1; k < vs.size(); ++k)
    if (classify_sequence(s, vs[k], vs[best], tau).kind == SeqKind::UltimatelyPositive) best = k;
  EventualMax out{vs[best], 0};
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k == best) continue;
    const SeqClass c = classify_sequence(s, vs[best], vs[k], tau);
    if (c.kind == SeqKind::UltimatelyNegative) throw std::logic_error("eventual maximizer is not maximal");
    out.threshold = std::max(out.threshold, c.threshold);
  }
  return out;
}

RatVector sup_point(const RatMatrix& a, const GenPolyhedron& u, const AlgVector& tau, const RatVector& maximizer,
                    long threshold) {
  std::vector<RatVector> images = sorted_vertices(u);
  RatVector x = RatVector::Constant(a.rows(), Rat(0));
  RatVector tail = maximizer;
  for (long i = 0; i < threshold; ++i) {
    x += images[argmax_images(images, tau)];
    for (auto& im : images) im = a * im;
    tail = a * tail;
  }
  return x + resolvent(a) * tail;
}

RealAlg sup_in_direction(const SpectralData& s, const GenPolyhedron& u, const AlgVector& tau) {
  const EventualMax em = eventual_maximizer(s, u, tau);
  return dot(sup_point(system_matrix(s), u, tau, em.vertex, em.threshold), tau);
}

namespace {

const RatVector& argmin_vertex(const GenPolyhedron& q, const AlgVector& tau) {
  if (!q.is_polytope() || q.is_empty()) throw std::invalid_argument("target must be a nonempty polytope");
  std::size_t best = 0;
  for (std::size_t k = 1; k < q.vertices.size(); ++k)
    if (sign_of_dot(q.vertices[k] - q.vertices[best], tau) < 0) best = k;
  return q.vertices[best];
}

}  // namespace

std::optional<SeparatorCertificate> verify_separator(const SpectralData& s, const GenPolyhedron& u,
                                                     const GenPolyhedron& q, const AlgVector& tau) {
  const EventualMax em = eventual_maximizer(s, u, tau);
  const RatVector x = sup_point(system_matrix(s), u, tau, em.vertex, em.threshold);
  const RatVector& low = argmin_vertex(q, tau);
  if (sign_of_dot(low - x, tau) < 0) return std::nullopt;
  SeparatorCertificate c;
  c.tau = tau;
  c.maximizer = em.vertex;
  c.threshold = em.threshold;
  c.sup_value = dot(x, tau);
  c.min_over_q = dot(low, tau);
  c.bound = c.min_over_q;
  return c;
}

bool audit_certificate(const SpectralData& s, const GenPolyhedron& u, const GenPolyhedron& q,
                       const SeparatorCertificate& c) {
  if (static_cast<int>(c.tau.size()) != s.dim || c.maximizer.size() != s.dim || c.threshold < 0) return false;
  if (!u.is_polytope() || u.is_empty() || !q.is_polytope() || q.is_empty()) return false;
  if (std::find(u.vertices.begin(), u.vertices.end(), c.maximizer) == u.vertices.end()) return false;
  for (const auto& v : u.vertices) {
    const SeqClass k = classify_sequence(s, c.maximizer, v, c.tau);
    if (k.kind == SeqKind::UltimatelyNegative) return false;
    if (k.kind == SeqKind::UltimatelyPositive && k.threshold > c.threshold) return false;
  }
  // prefix maxima plus the tail sum_{n >= N} A^n u written as (I - A)^{-1} u - sum_{n < N} A^n u
  const RatMatrix a = system_matrix(s);
  RatVector y = resolvent(a) * c.maximizer;
  std::vector<RatVector> images = u.vertices;
  RatVector power = c.maximizer;
  for (long i = 0; i < c.threshold; ++i) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < images.size(); ++k)
      if (dot(images[k], c.tau) > dot(images[best], c.tau)) best = k;
    y += images[best] - power;
    for (auto& im : images) im = a * im;
    power = a * power;
  }
  if (dot(y, c.tau) != c.sup_value) return false;
  RealAlg low = dot(q.vertices.front(), c.tau);
  for (const auto& v : q.vertices) low = std::min(low, dot(v, c.tau));
  if (low != c.min_over_q) return false;
  return c.sup_value <= c.bound && c.bound <= c.min_over_q;
}

namespace {

bool all_rational(const Mat<RealAlg>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (!m(r, k).is_rational()) return false;
  return true;
}

// Kernel of the rows, as algebraic vectors.
std::vector<AlgVector> alg_kernel(const std::vector<AlgVector>& rows, int dim) {
  std::vector<AlgVector> out;
  if (rows.empty()) {
    for (int k = 0; k < dim; ++k) out.push_back(to_alg(RatVector::Unit(dim, k)));
    return out;
  }
  Mat<RealAlg> m(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int k = 0; k < dim; ++k) m(static_cast<Eigen::Index>(r), k) = rows[r][static_cast<std::size_t>(k)];
  if (all_rational(m)) {
    RatMatrix mr(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index k = 0; k < m.cols(); ++k) mr(r, k) = m(r, k).to_rat();
    const RatMatrix ker = kernel(mr);
    for (Eigen::Index j = 0; j < ker.cols(); ++j) out.push_back(to_alg(ker.col(j)));
    return out;
  }
  const Mat<RealAlg> ker = kernel(m);
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    AlgVector v;
    for (Eigen::Index k = 0; k < ker.rows(); ++k) v.push_back(ker(k, j));
    out.push_back(std::move(v));
  }
  return out;
}

AlgVector to_alg(const Vec<NFElem>& v) {
  AlgVector out;
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k).to_real_alg());
  return out;
}

std::vector<RatVector> vertex_differences(const GenPolyhedron& u) {
  std::vector<RatVector> out;
  for (std::size_t a = 0; a < u.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < u.vertices.size(); ++b) out.push_back(u.vertices[a] - u.vertices[b]);
  return out;
}

bool is_zero_vector(const AlgVector& v) {
  return std::all_of(v.begin(), v.end(), [](const RealAlg& x) { return x.is_zero(); });
}

}  // namespace

DomSpace dom_space(const SpectralData& s, const GenPolyhedron& u, const AlgVector& tau) {
  const int d = s.dim;
  const auto diffs = vertex_differences(u);
  // firing[i][j]: differences x with L_ij(x, tau) = 0
  std::vector<std::vector<std::vector<RatVector>>> firing(s.size(), std::vector<std::vector<RatVector>>(static_cast<std::size_t>(d)));
  for (const auto& x : diffs) {
    const auto c = expand_inner_product(s, x, tau);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j)
        if (c[i][j].is_zero()) firing[i][j].push_back(x);
  }
  std::vector<AlgVector> rows;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < firing[i].size(); ++j) {
      if (firing[i][j].empty() || is_zero_matrix(s.bilinear[i][j])) continue;
      RatMatrix xs(d, static_cast<Eigen::Index>(firing[i][j].size()));
      for (std::size_t k = 0; k < firing[i][j].size(); ++k) xs.col(static_cast<Eigen::Index>(k)) = firing[i][j][k];
      const RatMatrix span = column_basis(xs);
      for (Eigen::Index k = 0; k < span.cols(); ++k) {
        const Vec<NFElem> row = s.bilinear[i][j] * convert<NFElem>(RatVector(span.col(k)));
        if (!is_zero_matrix(Mat<NFElem>(row))) rows.push_back(to_alg(row));
      }
    }
  return DomSpace{alg_kernel(rows, d)};
}

CandidateStream::CandidateStream(const SpectralData& s, GenPolyhedron u, GenPolyhedron q, int budget)
    : spectral_(&s), a_(system_matrix(s)), u_(std::move(u)), q_(std::move(q)), budget_(budget) {}

bool CandidateStream::push(const AlgVector& v) {
  if (is_zero_vector(v)) return false;
  AlgVector n = normalize_direction(v);
  if (std::find(seen_.begin(), seen_.end(), n) != seen_.end()) return false;
  seen_.push_back(n);
  queue_.push_back(std::move(n));
  return true;
}

std::optional<AlgVector> CandidateStream::next() {
  while (head_ == queue_.size()) {
    if (phase_ > 3) return std::nullopt;
    fill();
  }
  ++produced_;
  return queue_[head_++];
}

namespace {

std::vector<AlgVector> left_eigenvectors(const SpectralData& s) {
  std::vector<AlgVector> out;
  const RatMatrix at = system_matrix(s).transpose();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Mat<NFElem> m = convert<NFElem>(at);
    for (Eigen::Index k = 0; k < m.rows(); ++k) m(k, k) = m(k, k) - s.lambda(i);
    const Mat<NFElem> ker = kernel(m);
    for (Eigen::Index j = 0; j < ker.cols(); ++j) out.push_back(to_alg(Vec<NFElem>(ker.col(j))));
  }
  return out;
}

std::vector<AlgVector> pattern_rows(const SpectralData& s, const RatMatrix& a, const GenPolyhedron& u,
                                    const GenPolyhedron& q) {
  std::vector<AlgVector> rows;
  auto add = [&](const AlgVector& r, std::size_t cap) {
    if (rows.size() >= cap || is_zero_vector(r)) return;
    const AlgVector n = normalize_direction(r);
    if (std::find(rows.begin(), rows.end(), n) == rows.end()) rows.push_back(n);
  };
  const RatMatrix res = resolvent(a);
  std::vector<RatVector> limits;
  for (const auto& v : u.vertices) limits.push_back(res * v);
  for (const auto& x : vertex_differences(q)) add(to_alg(x), 20);
  for (const auto& p : limits)
    for (const auto& w : q.vertices) add(to_alg(RatVector(p - w)), 20);
  for (std::size_t k = 0; k < limits.size(); ++k)
    for (std::size_t l = k + 1; l < limits.size(); ++l) add(to_alg(RatVector(limits[k] - limits[l])), 20);
  const std::size_t cap = rows.size() + 20;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& b : s.bilinear[i]) {
      if (is_zero_matrix(b)) continue;
      for (const auto& x : vertex_differences(u)) add(to_alg(Vec<NFElem>(b * convert<NFElem>(x))), cap);
    }
  return rows;
}

void next_subset(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) {
    comb.assign(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 0; j <= k; ++j) comb[static_cast<std::size_t>(j)] = j;
    return;
  }
  ++comb[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
}

}  // namespace

void CandidateStream::fill() {
  auto both = [&](const AlgVector& v) {
    push(v);
    AlgVector m;
    for (const auto& x : v) m.push_back(-x);
    push(m);
  };
  switch (phase_) {
    case 0: {
      try {
        for (const auto& n : facet_normals(q_)) push(to_alg(RatVector(-n)));
      } catch (const FacetCeilingExceeded&) {
      }
      phase_ = budget_ > 0 ? 1 : 4;
      return;
    }
    case 1: {
      if (step_ >= budget_) {
        phase_ = 2, step_ = 0;
        return;
      }
      GenPolyhedron sum = u_;
      RatMatrix power = a_;
      for (int k = 1; k <= step_; ++k, power = a_ * power) sum = minkowski_sum(sum, linear_image(power, u_));
      try {
        for (const auto& n : facet_normals(sum)) push(to_alg(n));
      } catch (const FacetCeilingExceeded&) {
        step_ = budget_;
        return;
      }
      ++step_;
      return;
    }
    case 2: {
      for (const auto& v : left_eigenvectors(*spectral_)) both(v);
      phase_ = 3;
      return;
    }
    case 3: {
      // support patterns: subsets of vanishing conditions with a one-dimensional solution space
      if (step_ == 0) {
        rows_ = pattern_rows(*spectral_, a_, u_, q_);
        comb_ = {0};
      }
      const int max_size = std::min(spectral_->dim - 1, budget_);
      const long cap = 64L * budget_;
      for (int batch = 0; batch < 16; ++batch, ++step_) {
        if (step_ >= cap || rows_.empty() || static_cast<int>(comb_.size()) > max_size ||
            static_cast<int>(comb_.size()) > static_cast<int>(rows_.size())) {
          phase_ = 4;
          return;
        }
        std::vector<AlgVector> chosen;
        for (int k : comb_) chosen.push_back(rows_[static_cast<std::size_t>(k)]);
        const auto ker = alg_kernel(chosen, spectral_->dim);
        if (ker.size() == 1) both(ker.front());
        next_subset(comb_, static_cast<int>(rows_.size()));
      }
      return;
    }
    default:
      phase_ = 4;
  }
}

std::vector<AlgVector> extremal_candidates(const SpectralData& s, const GenPolyhedron& u, const GenPolyhedron& q,
                                           int budget) {
  CandidateStream stream(s, u, q, budget);
  std::vector<AlgVector> out;
  while (auto v = stream.next()) out.push_back(std::move(*v));
  return out;
}

std::vector<RealAlg> bounded_roots(int degree, int height) {
  std::vector<RealAlg> roots;
  std::vector<int> c(static_cast<std::size_t>(degree) + 1, -height);
  while (true) {
    int top = degree;
    while (top >= 0 && c[static_cast<std::size_t>(top)] == 0) --top;
    if (top >= 1 && c[static_cast<std::size_t>(top)] > 0) {
      std::vector<Rat> coeffs(c.begin(), c.begin() + top + 1);
      for (auto& r : real_roots(RatPoly(coeffs))) roots.push_back(std::move(r));
    }
    std::size_t k = 0;
    while (k < c.size() && c[k] == height) c[k++] = -height;
    if (k == c.size()) break;
    ++c[k];
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

AlgebraicVectorStream::AlgebraicVectorStream(int dim, int max_degree, int max_height)
    : dim_(dim), max_degree_(max_degree), max_height_(max_height) {}

bool AlgebraicVectorStream::advance_batch() {
  int total = started_ ? degree_ + height_ : 2;
  int d = started_ ? degree_ + 1 : 1;
  for (; total <= max_degree_ + max_height_; ++total, d = 1)
    for (; d <= max_degree_; ++d) {
      const int h = total - d;
      if (h < 1 || h > max_height_) continue;
      degree_ = d;
      height_ = h;
      started_ = true;
      roots_ = bounded_roots(d, h);
      odometer_.assign(static_cast<std::size_t>(dim_), 0);
      return true;
    }
  return false;
}

std::optional<AlgVector> AlgebraicVectorStream::next() {
  if (dim_ <= 0) return std::nullopt;
  if (!started_ && !advance_batch()) return std::nullopt;
  while (true) {
    if (odometer_.empty()) {
      if (!advance_batch()) return std::nullopt;
    }
    AlgVector v;
    for (std::size_t k : odometer_) v.push_back(roots_[k]);
    // advance
    std::size_t k = 0;
    while (k < odometer_.size() && odometer_[k] + 1 == roots_.size()) odometer_[k++] = 0;
    if (k == odometer_.size()) odometer_.clear();
    else ++odometer_[k];
    // first nonzero entry +-1: one representative per direction
    auto first = std::find_if(v.begin(), v.end(), [](const RealAlg& x) { return !x.is_zero(); });
    if (first == v.end() || abs(*first) != RealAlg(1)) continue;
    return v;
  }
}

std::vector<AlgVector> enumerate_algebraic_vectors(int dim, int max_degree, int max_height) {
  AlgebraicVectorStream s(dim, max_degree, max_height);
  std::vector<AlgVector> out;
  while (auto v = s.next()) out.push_back(std::move(*v));
  return out;
}

}  // namespace ltireach
