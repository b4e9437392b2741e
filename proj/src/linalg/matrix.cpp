#include "ltireach/linalg/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ltireach {

std::vector<std::vector<Rat>> to_rows(const RatMatrix& a) {
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(a(i, j));
  return rows;
}

RatPoly charpoly(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
  return charpoly_berkowitz(to_rows(a));
}

Rat determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Rat(1);
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n));
  Rat scale(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).raw().get_den_mpz_t());
    scale *= Rat(l);
    for (Eigen::Index j = 0; j < n; ++j) m[static_cast<std::size_t>(i)].push_back(a(i, j).num() * (l / a(i, j).den()));
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < static_cast<std::size_t>(n) && m[piv][k] == 0) ++piv;
      if (piv == static_cast<std::size_t>(n)) return Rat(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < static_cast<std::size_t>(n); ++i) {
      for (std::size_t j = k + 1; j < static_cast<std::size_t>(n); ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return Rat(BigInt(m.back().back() * sign)) / scale;
}

RatMatrix matrix_power(const RatMatrix& a, long e) {
  if (e < 0) {
    auto inv = inverse(a);
    if (!inv) throw std::domain_error("negative power of a singular matrix");
    return matrix_power(*inv, -e);
  }
  RatMatrix result = RatMatrix::Identity(a.rows(), a.cols());
  RatMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool schur_stable(const RatPoly& p_in) {
  RatPoly p = p_in;
  while (p.degree() > 0) {
    const Rat a0 = p.coeff(0), an = p.lc();
    if (!(a0.abs() < an.abs())) return false;
    // Schur transform: p is stable iff |a_0| < |a_n| and (a_n p - a_0 p*) / x is.
    RatPoly t = p * an - p.reversed() * a0;
    std::vector<Rat> c(t.coeffs().begin() + 1, t.coeffs().end());
    p = RatPoly(std::move(c));
  }
  return true;
}

bool schur_stable(const RatMatrix& a) { return schur_stable(charpoly(a)); }

bool all_roots_real_nonnegative(const RatPoly& p) {
  const RatPoly sq = squarefree_part(p);
  if (sq.degree() <= 0) return true;
  const SturmSequence s(sq);
  const Rat b = root_bound(sq);
  int count = s.count_roots(Rat(0), b);
  if (sq.sign_at(Rat(0)) == 0) ++count;
  return count == sq.degree();
}

namespace {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

long root_of_unity_order_bound(int d) {
  long l = 1;
  // phi(r) >= sqrt(r / 2), so r <= 2 d^2 covers every r with phi(r) <= d.
  for (long r = 1; r <= 2L * d * d + 2; ++r)
    if (euler_phi(r) <= d) l = std::lcm(l, r);
  return l;
}

std::optional<long> real_spectrum_power(const RatMatrix& a) {
  const int d = static_cast<int>(a.rows());
  if (d == 0) return 1L;
  const long bound = root_of_unity_order_bound(d);
  for (long m = 1; m <= bound; ++m) {
    if (bound % m) continue;
    if (all_roots_real_nonnegative(charpoly(matrix_power(a, m)))) return m;
  }
  return std::nullopt;
}

FittingSplit fitting_split(const RatMatrix& a) {
  const RatMatrix ad = matrix_power(a, a.rows());
  return {kernel(ad), column_basis(ad)};
}

RatMatrix krylov_invariant_span(const RatMatrix& a, const std::vector<RatVector>& generators) {
  const Eigen::Index d = a.rows();
  if (generators.empty()) return RatMatrix(d, 0);
  RatMatrix all(d, static_cast<Eigen::Index>(generators.size()) * d);
  Eigen::Index c = 0;
  for (const auto& g : generators) {
    RatVector v = g;
    for (Eigen::Index i = 0; i < d; ++i) {
      all.col(c++) = v;
      v = a * v;
    }
  }
  return column_basis(all);
}

RatMatrix restrict_to_subspace(const RatMatrix& a, const RatMatrix& basis) {
  const Eigen::Index k = basis.cols();
  RatMatrix r(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    auto c = coordinates(basis, a * basis.col(j));
    if (!c) throw std::invalid_argument("subspace is not invariant");
    r.col(j) = *c;
  }
  return r;
}

std::optional<RatVector> coordinates(const RatMatrix& basis, const RatVector& v) {
  return solve<Rat>(basis, v);
}

RatMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::istringstream rs(row);
    std::vector<Rat> r;
    std::string tok;
    while (rs >> tok) r.push_back(Rat::parse(tok));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw std::invalid_argument("ragged matrix rows");
  RatMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

std::string format_matrix(const RatMatrix& a) {
  std::string s;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (i) s += "; ";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) s += " ";
      s += a(i, j).str();
    }
  }
  return s;
}

}  // namespace ltireach
