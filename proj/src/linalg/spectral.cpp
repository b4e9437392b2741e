#include "ltireach/linalg/spectral.hpp"

#include "ltireach/exactnum/factor.hpp"
#include "ltireach/linalg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ltireach {

RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& m) {
  const Eigen::Index n = m.rows();
  RatMatrix acc = RatMatrix::Zero(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    for (Eigen::Index k = 0; k < n; ++k) acc(k, k) += p.coeff(i);
  }
  return acc;
}

namespace {

// Semisimple part by Newton iteration S <- S - p(S) p'(S)^{-1} on the
// squarefree part p of the characteristic polynomial.
RatMatrix semisimple_part(const RatMatrix& a) {
  const RatPoly p = squarefree_part(charpoly(a));
  const RatPoly dp = p.derivative();
  RatMatrix s = a;
  for (int iter = 0; iter < 64; ++iter) {
    const RatMatrix ps = eval_poly_at_matrix(p, s);
    if (is_zero_matrix(ps)) return s;
    auto inv = inverse(eval_poly_at_matrix(dp, s));
    if (!inv) throw std::logic_error("Newton step for the semisimple part is singular");
    s = s - ps * *inv;
  }
  throw std::logic_error("semisimple part did not converge");
}

Mat<NFElem> to_nf(const RatMatrix& m) { return convert<NFElem>(m); }

}  // namespace

SpectralData spectral_decompose(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spectral decomposition of a non-square matrix");
  SpectralData s;
  s.dim = static_cast<int>(a.rows());
  const Eigen::Index d = a.rows();
  const RatPoly chi = charpoly(a);

  struct Entry {
    RealAlg lambda;
    int mult;
  };
  std::vector<Entry> entries;
  for (const auto& [f, mult] : factor(chi)) {
    const auto roots = sturm_isolate_real_roots(f);
    if (static_cast<int>(roots.size()) != f.degree())
      throw std::domain_error("matrix has a non-real eigenvalue");
    for (const auto& r : roots) {
      if (r.sign() <= 0) throw std::domain_error("matrix has a non-positive eigenvalue");
      entries.push_back({r, mult});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.lambda < y.lambda; });

  s.semisimple = semisimple_part(a);
  s.nilpotent = a - s.semisimple;
  const Mat<NFElem> a_nf = to_nf(a);
  std::vector<Mat<NFElem>> npow;  // N^j over NF
  {
    RatMatrix nj = RatMatrix::Identity(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      npow.push_back(to_nf(nj));
      nj = nj * s.nilpotent;
    }
  }

  for (const auto& e : entries) {
    auto field = std::make_shared<const NumberField>(e.lambda);
    const NFElem lam = NFElem::generator(field);
    Mat<NFElem> shifted = a_nf;
    for (Eigen::Index k = 0; k < d; ++k) shifted(k, k) = shifted(k, k) - lam;
    Mat<NFElem> m = Mat<NFElem>::Identity(d, d);
    for (int k = 0; k < e.mult; ++k) m = m * shifted;
    const Mat<NFElem> ker = kernel(m);
    const Mat<NFElem> img = column_basis(m);
    if (ker.cols() != e.mult || ker.cols() + img.cols() != d)
      throw std::logic_error("generalized eigenspace has unexpected dimension");
    Mat<NFElem> p(d, d);
    p.leftCols(ker.cols()) = ker;
    p.rightCols(img.cols()) = img;
    auto pinv = inverse(p);
    if (!pinv) throw std::logic_error("generalized eigenspaces are not complementary");
    const Mat<NFElem> proj = ker * pinv->topRows(ker.cols());

    std::vector<Mat<NFElem>> forms;
    NFElem inv_pow(1);
    const NFElem lam_inv = lam.inverse();
    for (Eigen::Index j = 0; j < d; ++j) {
      Mat<NFElem> b = proj * npow[static_cast<std::size_t>(j)];
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) b(r, c) = b(r, c) * inv_pow;
      forms.push_back(std::move(b));
      inv_pow = inv_pow * lam_inv;
    }

    s.eigenvalues.push_back(e.lambda);
    s.multiplicities.push_back(e.mult);
    s.fields.push_back(field);
    s.projectors.push_back(proj);
    s.bilinear.push_back(std::move(forms));
  }
  return s;
}

std::vector<std::vector<NFElem>> expand_inner_product(const SpectralData& s, const RatVector& u,
                                                      const RatVector& tau) {
  const Vec<NFElem> un = convert<NFElem>(u), tn = convert<NFElem>(tau);
  std::vector<std::vector<NFElem>> c(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& b : s.bilinear[i]) {
      const Vec<NFElem> bu = b * un;
      NFElem acc(0);
      for (Eigen::Index k = 0; k < bu.size(); ++k) acc += tn(k) * bu(k);
      c[i].push_back(acc);
    }
  return c;
}

std::vector<std::vector<RealAlg>> expand_inner_product(const SpectralData& s, const RatVector& u,
                                                       const std::vector<RealAlg>& tau) {
  bool rational = std::all_of(tau.begin(), tau.end(), [](const RealAlg& t) { return t.is_rational(); });
  std::vector<std::vector<RealAlg>> out(s.size());
  if (rational) {
    RatVector tr(static_cast<Eigen::Index>(tau.size()));
    for (std::size_t k = 0; k < tau.size(); ++k) tr(static_cast<Eigen::Index>(k)) = tau[k].to_rat();
    const auto c = expand_inner_product(s, u, tr);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (const auto& x : c[i]) out[i].push_back(x.to_real_alg());
    return out;
  }
  const Vec<NFElem> un = convert<NFElem>(u);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& b : s.bilinear[i]) {
      const Vec<NFElem> bu = b * un;
      RealAlg acc(0);
      for (Eigen::Index k = 0; k < bu.size(); ++k) {
        if (bu(k).is_zero() || tau[static_cast<std::size_t>(k)].is_zero()) continue;
        acc += tau[static_cast<std::size_t>(k)] * bu(k).to_real_alg();
      }
      out[i].push_back(acc);
    }
  return out;
}

RealAlg evaluate_expansion(const SpectralData& s, const std::vector<std::vector<NFElem>>& c, long n) {
  RealAlg total(0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    NFElem acc(0);
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      if (c[i][j].is_zero()) continue;
      acc += c[i][j] * NFElem(Rat(binomial(n, static_cast<long>(j))));
    }
    if (acc.is_zero()) continue;
    NFElem lp(1);
    const NFElem lam = s.lambda(i);
    for (long k = 0; k < n; ++k) lp = lp * lam;
    total += (acc * lp).to_real_alg();
  }
  return total;
}

RealAlg evaluate_expansion(const SpectralData& s, const std::vector<std::vector<RealAlg>>& c, long n) {
  RealAlg total(0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    RealAlg acc(0);
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      if (c[i][j].is_zero()) continue;
      acc += c[i][j] * RealAlg(Rat(binomial(n, static_cast<long>(j))));
    }
    if (acc.is_zero()) continue;
    total += acc * pow(s.eigenvalues[i], static_cast<int>(n));
  }
  return total;
}

}  // namespace ltireach
