#include "ltireach/geometry/polyhedron.hpp"

#include "ltireach/geometry/lp.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>

namespace ltireach {

namespace {

std::atomic<int> g_facet_ceiling{5};

void dedupe_sorted(std::vector<RatVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

void check_dim(const GenPolyhedron& p, const RatVector& v) {
  if (v.size() != p.dim) throw std::invalid_argument("generator dimension does not match ambient dimension");
}

RatVector lines_sign_normalized(RatVector v) {
  v = primitive_direction(v);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) {
      if (v(i).sign() < 0) v = -v;
      break;
    }
  return v;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

RatMatrix as_columns(const std::vector<RatVector>& vs, int dim) {
  RatMatrix m(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
  return m;
}

const std::vector<RatVector>& probe_directions(int dim) {
  static thread_local std::vector<std::vector<RatVector>> cache;
  if (static_cast<int>(cache.size()) <= dim) cache.resize(static_cast<std::size_t>(dim) + 1);
  auto& dirs = cache[static_cast<std::size_t>(dim)];
  if (dirs.empty() && dim > 0) {
    std::minstd_rand g(12345);
    std::uniform_int_distribution<int> e(-9, 9);
    for (int i = 0; i < dim; ++i) {
      dirs.push_back(RatVector::Unit(dim, i));
      dirs.push_back(-RatVector::Unit(dim, i));
    }
    for (int k = 0; k < 16 * dim; ++k) {
      RatVector v(dim);
      for (int i = 0; i < dim; ++i) v(i) = Rat(e(g));
      dirs.push_back(v);
    }
  }
  return dirs;
}

void require_ceiling(int dim) {
  if (dim > facet_dimension_ceiling())
    throw FacetCeilingExceeded("facet enumeration in dimension " + std::to_string(dim) + " exceeds the ceiling " +
                               std::to_string(facet_dimension_ceiling()));
}

}  // namespace

int facet_dimension_ceiling() { return g_facet_ceiling.load(); }
void set_facet_dimension_ceiling(int d) { g_facet_ceiling.store(d); }

bool lex_less(const RatVector& a, const RatVector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

RatVector primitive_direction(const RatVector& v) {
  BigInt l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, v(i).den());
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, BigInt(v(i).num() * (l / v(i).den())));
  if (g == 0) return v;
  RatVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(BigInt(v(i).num() * (l / v(i).den()) / g));
  return r;
}

GenPolyhedron GenPolyhedron::polytope(std::vector<RatVector> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  GenPolyhedron p(static_cast<int>(vertices.front().size()));
  p.vertices = std::move(vertices);
  p.canonicalize();
  return p;
}

GenPolyhedron GenPolyhedron::point(const RatVector& x) { return polytope({x}); }

GenPolyhedron GenPolyhedron::affine(const RatVector& x, std::vector<RatVector> lines) {
  GenPolyhedron p = point(x);
  p.lines = std::move(lines);
  p.canonicalize();
  return p;
}

void GenPolyhedron::canonicalize() {
  for (const auto& v : vertices) check_dim(*this, v);
  for (const auto& v : rays) check_dim(*this, v);
  for (const auto& v : lines) check_dim(*this, v);
  dedupe_sorted(vertices);
  auto nonzero = [](const RatVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return true;
    return false;
  };
  std::vector<RatVector> r, l;
  for (const auto& v : rays)
    if (nonzero(v)) r.push_back(primitive_direction(v));
  for (const auto& v : lines)
    if (nonzero(v)) l.push_back(lines_sign_normalized(v));
  dedupe_sorted(r);
  dedupe_sorted(l);
  rays = std::move(r);
  lines = std::move(l);
}

ControlSet::ControlSet(std::vector<GenPolyhedron> cs) : components(std::move(cs)) {
  if (components.empty()) throw std::invalid_argument("control set needs at least one component");
  for (const auto& c : components)
    if (c.dim != components.front().dim) throw std::invalid_argument("control components differ in dimension");
}

std::optional<Decomposition> decompose(const GenPolyhedron& p, const RatVector& x) {
  if (p.is_empty()) return std::nullopt;
  check_dim(p, x);
  const int nv = static_cast<int>(p.vertices.size()), nr = static_cast<int>(p.rays.size()),
            nl = static_cast<int>(p.lines.size());
  LinearProgram lp(nv + nr + nl);
  for (int j = 0; j < nl; ++j) lp.free_var[static_cast<std::size_t>(nv + nr + j)] = true;
  for (int i = 0; i < p.dim; ++i) {
    RatVector row(nv + nr + nl);
    for (int j = 0; j < nv; ++j) row(j) = p.vertices[static_cast<std::size_t>(j)](i);
    for (int j = 0; j < nr; ++j) row(nv + j) = p.rays[static_cast<std::size_t>(j)](i);
    for (int j = 0; j < nl; ++j) row(nv + nr + j) = p.lines[static_cast<std::size_t>(j)](i);
    lp.add(std::move(row), Relation::Equal, x(i));
  }
  RatVector ones = RatVector::Constant(nv + nr + nl, Rat(0));
  for (int j = 0; j < nv; ++j) ones(j) = Rat(1);
  lp.add(std::move(ones), Relation::Equal, Rat(1));
  const LpResult r = lp_solve(lp);
  if (!r.feasible()) return std::nullopt;
  Decomposition d;
  for (int j = 0; j < nv; ++j) d.vertex.push_back(r.point(j));
  for (int j = 0; j < nr; ++j) d.ray.push_back(r.point(nv + j));
  for (int j = 0; j < nl; ++j) d.line.push_back(r.point(nv + nr + j));
  return d;
}

bool contains(const GenPolyhedron& p, const RatVector& x) { return decompose(p, x).has_value(); }

bool contains(const ControlSet& u, const RatVector& x) {
  return std::any_of(u.components.begin(), u.components.end(), [&](const GenPolyhedron& c) { return contains(c, x); });
}

RatVector recompose(const GenPolyhedron& p, const Decomposition& d) {
  RatVector x = RatVector::Constant(p.dim, Rat(0));
  for (std::size_t j = 0; j < p.vertices.size(); ++j) x += p.vertices[j] * d.vertex.at(j);
  for (std::size_t j = 0; j < p.rays.size(); ++j) x += p.rays[j] * d.ray.at(j);
  for (std::size_t j = 0; j < p.lines.size(); ++j) x += p.lines[j] * d.line.at(j);
  return x;
}

namespace {
std::vector<int> hull_cover(const std::vector<RatVector>& pts);
}  // namespace

GenPolyhedron remove_redundant(GenPolyhedron p) {
  p.canonicalize();
  if (!p.lines.empty()) {
    const RatMatrix b = column_basis(as_columns(p.lines, p.dim));
    p.lines.clear();
    for (Eigen::Index j = 0; j < b.cols(); ++j) p.lines.push_back(b.col(j));
    p.canonicalize();
  }
  // rays: drop those in cone(other rays) + span(lines)
  for (std::size_t i = 0; i < p.rays.size();) {
    GenPolyhedron rest(p.dim);
    rest.vertices.push_back(RatVector::Constant(p.dim, Rat(0)));
    for (std::size_t j = 0; j < p.rays.size(); ++j)
      if (j != i) rest.rays.push_back(p.rays[j]);
    rest.lines = p.lines;
    if (contains(rest, p.rays[i])) p.rays.erase(p.rays.begin() + static_cast<std::ptrdiff_t>(i));
    else ++i;
  }
  if (p.is_polytope() && p.dim <= 3 && p.vertices.size() > 16) {
    std::vector<RatVector> cover;
    for (int i : hull_cover(p.vertices)) cover.push_back(p.vertices[static_cast<std::size_t>(i)]);
    p.vertices = std::move(cover);
  }
  const std::size_t n = p.vertices.size();
  if (n <= 1) return p;
  // Unique maximizers of probe directions are vertices; testing the others
  // against those first keeps most membership LPs small.
  std::vector<char> sure(n, 0), gone(n, 0);
  if (p.is_polytope())
    for (const auto& dir : probe_directions(p.dim)) {
      std::size_t arg = 0;
      int ties = 0;
      Rat best = p.vertices[0].dot(dir);
      for (std::size_t i = 1; i < n; ++i) {
        const Rat x = p.vertices[i].dot(dir);
        if (x > best) best = x, arg = i, ties = 0;
        else if (x == best) ++ties;
      }
      if (ties == 0) sure[arg] = 1;
    }
  auto hull_of = [&](bool only_sure, std::size_t skip) {
    GenPolyhedron rest(p.dim);
    for (std::size_t j = 0; j < n; ++j)
      if (j != skip && !gone[j] && (!only_sure || sure[j])) rest.vertices.push_back(p.vertices[j]);
    rest.rays = p.rays;
    rest.lines = p.lines;
    return rest;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (sure[i]) continue;
    const GenPolyhedron small = hull_of(true, i);
    if (!small.is_empty() && contains(small, p.vertices[i])) {
      gone[i] = 1;
      continue;
    }
    const GenPolyhedron rest = hull_of(false, i);
    if (!rest.is_empty() && contains(rest, p.vertices[i])) gone[i] = 1;
    else sure[i] = 1;
  }
  std::vector<RatVector> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!gone[i]) kept.push_back(p.vertices[i]);
  p.vertices = std::move(kept);
  return p;
}

GenPolyhedron minkowski_sum(const GenPolyhedron& p, const GenPolyhedron& q) {
  if (p.dim != q.dim) throw std::invalid_argument("minkowski_sum of different dimensions");
  GenPolyhedron s(p.dim);
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) s.vertices.push_back(a + b);
  s.rays = p.rays;
  s.rays.insert(s.rays.end(), q.rays.begin(), q.rays.end());
  s.lines = p.lines;
  s.lines.insert(s.lines.end(), q.lines.begin(), q.lines.end());
  return remove_redundant(std::move(s));
}

GenPolyhedron linear_image(const RatMatrix& a, const GenPolyhedron& p) {
  if (a.cols() != p.dim) throw std::invalid_argument("linear_image dimension mismatch");
  GenPolyhedron r(static_cast<int>(a.rows()));
  for (const auto& v : p.vertices) r.vertices.push_back(a * v);
  for (const auto& v : p.rays) r.rays.push_back(a * v);
  for (const auto& v : p.lines) r.lines.push_back(a * v);
  return remove_redundant(std::move(r));
}

GenPolyhedron negate(const GenPolyhedron& p) {
  GenPolyhedron r(p.dim);
  for (const auto& v : p.vertices) r.vertices.push_back(-v);
  for (const auto& v : p.rays) r.rays.push_back(-v);
  r.lines = p.lines;
  r.canonicalize();
  return r;
}

GenPolyhedron translate(const GenPolyhedron& p, const RatVector& t) {
  GenPolyhedron r = p;
  for (auto& v : r.vertices) v += t;
  r.canonicalize();
  return r;
}

GenPolyhedron convex_hull(const ControlSet& u) {
  GenPolyhedron r(u.dim());
  for (const auto& c : u.components) {
    r.vertices.insert(r.vertices.end(), c.vertices.begin(), c.vertices.end());
    r.rays.insert(r.rays.end(), c.rays.begin(), c.rays.end());
    r.lines.insert(r.lines.end(), c.lines.begin(), c.lines.end());
  }
  return remove_redundant(std::move(r));
}

std::pair<Rat, int> support(const GenPolyhedron& p, const RatVector& dir) {
  if (p.is_empty()) throw std::invalid_argument("support of an empty polytope");
  int best = 0;
  Rat val = p.vertices[0].dot(dir);
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    const Rat v = p.vertices[i].dot(dir);
    if (v > val) val = v, best = static_cast<int>(i);
  }
  return {val, best};
}

namespace {

struct CombinationLp {
  LinearProgram lp;
  std::vector<int> offset;
};

// Variables per term: vertex, ray, line coefficients of its set, in that order.
CombinationLp build_combination(const std::vector<LinearTerm>& terms, int rows) {
  CombinationLp c;
  int n = 0;
  for (const auto& t : terms) {
    c.offset.push_back(n);
    n += static_cast<int>(t.set->vertices.size() + t.set->rays.size() + t.set->lines.size());
  }
  c.lp = LinearProgram(n);
  RatMatrix big = RatMatrix::Zero(rows, n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    if (t.map.rows() != rows || t.map.cols() != t.set->dim) throw std::invalid_argument("combination term dimension mismatch");
    int col = c.offset[k];
    for (const auto& v : t.set->vertices) big.col(col++) = t.map * v;
    for (const auto& v : t.set->rays) big.col(col++) = t.map * v;
    for (const auto& v : t.set->lines) {
      c.lp.free_var[static_cast<std::size_t>(col)] = true;
      big.col(col++) = t.map * v;
    }
  }
  for (int i = 0; i < rows; ++i) c.lp.add(big.row(i).transpose(), Relation::Equal, Rat(0));
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::vector<std::pair<int, Rat>> ones;
    for (std::size_t j = 0; j < terms[k].set->vertices.size(); ++j) ones.emplace_back(c.offset[k] + static_cast<int>(j), Rat(1));
    c.lp.add_sparse(ones, Relation::Equal, Rat(1));
  }
  return c;
}

std::vector<Decomposition> split_solution(const std::vector<LinearTerm>& terms, const CombinationLp& c, const RatVector& x) {
  std::vector<Decomposition> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    Decomposition d;
    int col = c.offset[k];
    for (std::size_t j = 0; j < terms[k].set->vertices.size(); ++j) d.vertex.push_back(x(col++));
    for (std::size_t j = 0; j < terms[k].set->rays.size(); ++j) d.ray.push_back(x(col++));
    for (std::size_t j = 0; j < terms[k].set->lines.size(); ++j) d.line.push_back(x(col++));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Decomposition>> solve_combination(const std::vector<LinearTerm>& terms, const RatVector& rhs) {
  for (const auto& t : terms)
    if (t.set->is_empty()) return std::nullopt;
  const int rows = static_cast<int>(rhs.size());
  CombinationLp c = build_combination(terms, rows);
  for (int i = 0; i < rows; ++i) c.lp.constraints[static_cast<std::size_t>(i)].rhs = rhs(i);
  const LpResult r = lp_solve(c.lp);
  if (!r.feasible()) return std::nullopt;
  return split_solution(terms, c, r.point);
}

std::optional<CombinationMax> maximize_combination(const std::vector<LinearTerm>& terms, const RatVector& dir) {
  for (const auto& t : terms)
    if (t.set->is_empty()) return std::nullopt;
  const int rows = static_cast<int>(dir.size());
  CombinationLp c = build_combination(terms, rows);
  // the image point is a free variable block y with y = sum M_k p_k
  std::vector<int> y;
  for (int i = 0; i < rows; ++i) y.push_back(c.lp.add_var(true));
  for (int i = 0; i < rows; ++i) c.lp.constraints[static_cast<std::size_t>(i)].coeffs(y[static_cast<std::size_t>(i)]) = Rat(-1);
  RatVector obj = RatVector::Constant(c.lp.num_vars, Rat(0));
  for (int i = 0; i < rows; ++i) obj(y[static_cast<std::size_t>(i)]) = dir(i);
  c.lp.objective = obj;
  const LpResult r = lp_solve(c.lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return CombinationMax{r.value, split_solution(terms, c, r.point)};
}

namespace {

struct Facet {
  RatVector normal;
  Rat offset;
  std::vector<int> on;  // indices of the points on the facet, ascending
};

struct Hull {
  RatMatrix lin;                  // basis of the direction space, as columns
  std::vector<RatVector> normals;  // affine hull equality normals
  std::vector<Facet> facets;
};

std::vector<int> points_on(const std::vector<RatVector>& pts, const std::vector<int>& idx, const RatVector& n, const Rat& b) {
  std::vector<int> on;
  for (int i : idx)
    if (n.dot(pts[static_cast<std::size_t>(i)]) == b) on.push_back(i);
  return on;
}

// Facets of conv{pts[i] : i in idx} inside its affine hull, by gift wrapping:
// start from one facet and rotate around each ridge to the neighbouring facet.
// Ridges come from the same computation one dimension lower.
Hull hull_facets(const std::vector<RatVector>& pts, const std::vector<int>& idx) {
  Hull h;
  const int dim = static_cast<int>(pts[static_cast<std::size_t>(idx.front())].size());
  const RatVector& v0 = pts[static_cast<std::size_t>(idx.front())];
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(pts[static_cast<std::size_t>(idx[i])] - v0);
  h.lin = diffs.empty() ? RatMatrix(dim, 0) : column_basis(as_columns(diffs, dim));
  const int r = static_cast<int>(h.lin.cols());
  const RatMatrix eqs = kernel(RatMatrix(h.lin.transpose()));
  for (Eigen::Index j = 0; j < eqs.cols(); ++j) h.normals.push_back(primitive_direction(eqs.col(j)));
  if (r == 0) return h;

  auto make_facet = [&](RatVector n) {
    n = primitive_direction(n);
    const Rat b = n.dot(pts[static_cast<std::size_t>(idx.front())]);
    Rat top = b;
    for (int i : idx) top = std::max(top, n.dot(pts[static_cast<std::size_t>(i)]));
    return Facet{n, top, points_on(pts, idx, n, top)};
  };

  if (r == 1) {
    const RatVector l = h.lin.col(0);
    h.facets.push_back(make_facet(l));
    h.facets.push_back(make_facet(RatVector(-l)));
    return h;
  }

  // initial facet: r affinely independent points including the first one
  std::optional<Facet> first;
  std::vector<int> rest(idx.begin() + 1, idx.end());
  for_each_subset(static_cast<int>(rest.size()), r - 1, [&](const std::vector<int>& s) {
    if (first) return;
    RatMatrix m(r - 1, r);
    for (int j = 0; j < r - 1; ++j) m.row(j) = (pts[static_cast<std::size_t>(rest[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])])] - v0).transpose() * h.lin;
    const RatMatrix k = kernel(m);
    if (k.cols() != 1) return;
    const RatVector n = h.lin * k.col(0);
    const Rat level = n.dot(v0);
    bool below = true, above = true;
    for (int i : idx) {
      const Rat x = n.dot(pts[static_cast<std::size_t>(i)]);
      if (x > level) below = false;
      if (x < level) above = false;
    }
    if (below) first = make_facet(n);
    else if (above) first = make_facet(RatVector(-n));
  });
  if (!first) throw std::logic_error("no initial facet found");

  auto known = [&](const RatVector& n) {
    return std::any_of(h.facets.begin(), h.facets.end(), [&](const Facet& f) { return f.normal == n; });
  };
  h.facets.push_back(std::move(*first));
  for (std::size_t q = 0; q < h.facets.size(); ++q) {
    const Facet f = h.facets[q];
    const Hull ridges = hull_facets(pts, f.on);
    for (const auto& ridge : ridges.facets) {
      // hyperplanes through the ridge: rho (m.x - b) + (n.x - c) = 0; take the largest rho
      std::optional<Rat> best;
      for (int i : idx) {
        const RatVector& w = pts[static_cast<std::size_t>(i)];
        const Rat gap = f.offset - f.normal.dot(w);
        if (gap.sign() == 0) continue;
        const Rat rho = (ridge.normal.dot(w) - ridge.offset) / gap;
        if (!best || rho > *best) best = rho;
      }
      const RatVector n = primitive_direction(RatVector(f.normal * *best + ridge.normal));
      if (known(n)) continue;
      h.facets.push_back(make_facet(n));
    }
  }
  return h;
}

}  // namespace

namespace {

// Indices of a subset whose hull contains every point: start from probe
// maximizers, then add the farthest point beyond each violated facet.
std::vector<int> hull_cover(const std::vector<RatVector>& pts) {
  std::vector<char> in(pts.size(), 0);
  auto take_max = [&](const RatVector& dir, const std::optional<Rat>& above) {
    std::size_t arg = 0;
    Rat best = pts[0].dot(dir);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const Rat x = pts[i].dot(dir);
      if (x > best) best = x, arg = i;
    }
    if ((above && best <= *above) || in[arg]) return false;
    in[arg] = 1;
    return true;
  };
  for (const auto& dir : probe_directions(static_cast<int>(pts[0].size()))) take_max(dir, std::nullopt);
  for (;;) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (in[i]) idx.push_back(static_cast<int>(i));
    const Hull h = hull_facets(pts, idx);
    const RatVector& v0 = pts[static_cast<std::size_t>(idx.front())];
    bool grew = false;
    for (const auto& e : h.normals) {
      const Rat level = e.dot(v0);
      grew = take_max(e, level) || grew;
      grew = take_max(RatVector(-e), Rat(-level)) || grew;
    }
    for (const auto& f : h.facets) grew = take_max(f.normal, f.offset) || grew;
    if (!grew) return idx;
  }
}

}  // namespace

HRep h_representation(const GenPolyhedron& p) {
  if (!p.is_polytope() || p.is_empty()) throw std::invalid_argument("h_representation needs a nonempty polytope");
  require_ceiling(p.dim);
  HRep h;
  h.dim = p.dim;
  std::vector<int> idx(p.vertices.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  const Hull hull = hull_facets(p.vertices, idx);
  for (const auto& n : hull.normals) h.equalities.push_back({n, n.dot(p.vertices.front())});
  for (const auto& f : hull.facets) h.inequalities.push_back({f.normal, f.offset});
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const HalfSpace& a, const HalfSpace& b) { return lex_less(a.normal, b.normal); });
  return h;
}

std::vector<RatVector> facet_normals(const GenPolyhedron& p) {
  const HRep h = h_representation(p);
  std::vector<RatVector> out;
  for (const auto& f : h.inequalities) out.push_back(f.normal);
  for (const auto& e : h.equalities) {
    out.push_back(e.normal);
    out.push_back(-e.normal);
  }
  dedupe_sorted(out);
  return out;
}

bool relative_interior_contains_origin(const GenPolyhedron& p) {
  if (p.is_empty()) return false;
  if (!p.is_polytope()) throw std::invalid_argument("relative_interior_contains_origin needs a polytope");
  const int nv = static_cast<int>(p.vertices.size());
  LinearProgram lp(nv);
  const int t = lp.add_var(true);
  for (int i = 0; i < p.dim; ++i) {
    RatVector row = RatVector::Constant(nv + 1, Rat(0));
    for (int j = 0; j < nv; ++j) row(j) = p.vertices[static_cast<std::size_t>(j)](i);
    lp.add(std::move(row), Relation::Equal, Rat(0));
  }
  RatVector ones = RatVector::Constant(nv + 1, Rat(1));
  ones(t) = Rat(0);
  lp.add(std::move(ones), Relation::Equal, Rat(1));
  for (int j = 0; j < nv; ++j) lp.add_sparse({{j, Rat(1)}, {t, Rat(-1)}}, Relation::GreaterEq, Rat(0));
  RatVector obj = RatVector::Constant(nv + 1, Rat(0));
  obj(t) = Rat(1);
  lp.objective = obj;
  const LpResult r = lp_solve(lp);
  return r.status == LpStatus::Optimal && r.value.sign() > 0;
}

std::vector<RatVector> enumerate_vertices(const HRep& h) {
  const int d = h.dim;
  RatVector y0 = RatVector::Constant(d, Rat(0));
  RatMatrix k = RatMatrix::Identity(d, d);
  if (!h.equalities.empty()) {
    RatMatrix e(static_cast<Eigen::Index>(h.equalities.size()), d);
    RatVector rhs(static_cast<Eigen::Index>(h.equalities.size()));
    for (std::size_t i = 0; i < h.equalities.size(); ++i) {
      e.row(static_cast<Eigen::Index>(i)) = h.equalities[i].normal.transpose();
      rhs(static_cast<Eigen::Index>(i)) = h.equalities[i].offset;
    }
    auto sol = solve(e, rhs);
    if (!sol) return {};
    y0 = *sol;
    k = kernel(e);
  }
  const int m = static_cast<int>(k.cols());
  std::vector<RatVector> rows;
  std::vector<Rat> rhs;
  for (const auto& f : h.inequalities) {
    RatVector a = k.transpose() * f.normal;
    Rat b = f.offset - f.normal.dot(y0);
    if (a.isZero()) {
      if (b.sign() < 0) return {};
      continue;
    }
    rows.push_back(std::move(a));
    rhs.push_back(std::move(b));
  }
  auto feasible = [&](const RatVector& z) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].dot(z) > rhs[i]) return false;
    return true;
  };
  std::vector<RatVector> out;
  if (m == 0) {
    out.push_back(y0);
    return out;
  }
  for_each_subset(static_cast<int>(rows.size()), m, [&](const std::vector<int>& s) {
    RatMatrix a(m, m);
    RatVector b(m);
    for (int i = 0; i < m; ++i) {
      a.row(i) = rows[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])].transpose();
      b(i) = rhs[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
    }
    if (rank(a) < m) return;
    const RatVector z = *solve(a, b);
    if (feasible(z)) out.push_back(y0 + k * z);
  });
  dedupe_sorted(out);
  return out;
}

GenPolyhedron intersect_with_subspace(const GenPolyhedron& p, const RatMatrix& basis) {
  if (basis.rows() != p.dim) throw std::invalid_argument("subspace basis dimension mismatch");
  const HRep h = h_representation(p);
  HRep sub;
  sub.dim = static_cast<int>(basis.cols());
  for (const auto& e : h.equalities) sub.equalities.push_back({basis.transpose() * e.normal, e.offset});
  for (const auto& f : h.inequalities) sub.inequalities.push_back({basis.transpose() * f.normal, f.offset});
  GenPolyhedron r(sub.dim);
  r.vertices = enumerate_vertices(sub);
  r.canonicalize();
  return r;
}

}  // namespace ltireach
