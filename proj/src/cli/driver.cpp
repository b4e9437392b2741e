#include "ltireach/cli/driver.hpp"

#include "ltireach/cli/instance.hpp"
#include "ltireach/linalg/matrix.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

namespace ltireach {

using nlohmann::json;

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Reachable: return "reachable";
    case VerdictKind::Unreachable: return "unreachable";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

std::string forward_only_warning(const SimplicityReport& r) {
  return "system is not simple (" + r.failure() + "); running forward search only";
}

namespace {

// Everything the separator search needs, built once and then only read.
struct CertSetup {
  SimpleForm form;
  SpectralData spectral;
  bool empty_target = false;
  bool searchable = false;
};

std::optional<CertSetup> prepare(const LtiSystem& sys, std::string& warning) {
  const SimplicityReport r = check_simple(sys);
  if (!r.simple) {
    warning = forward_only_warning(r);
    return std::nullopt;
  }
  CertSetup c;
  try {
    c.form = to_simple_form(sys);
  } catch (const std::exception& e) {
    warning = std::string("reduction failed (") + e.what() + "); running forward search only";
    return std::nullopt;
  }
  if (c.form.q.is_empty()) {
    c.empty_target = true;
    return c;
  }
  if (!c.form.q.is_polytope()) {
    warning = "target is unbounded; running forward search only";
    return c;
  }
  if (c.form.dim() == 0) return c;
  c.spectral = spectral_decompose(c.form.a);
  c.searchable = true;
  return c;
}

class SeparatorSearch {
public:
  SeparatorSearch(const CertSetup& c, const Budgets& b)
      : setup_(c),
        budgets_(b),
        stream_(c.spectral, c.form.u, c.form.q, std::clamp(b.max_steps, 1, 8)),
        enumeration_(c.form.dim(), b.max_degree, b.max_height) {}

  bool exhausted() const { return done_; }

  std::optional<SeparatorCertificate> batch(int size, SearchProgress& p) {
    for (int i = 0; i < size && !done_; ++i) {
      if (p.candidates >= budgets_.max_candidates) {
        done_ = true;
        break;
      }
      std::optional<AlgVector> tau;
      if (!geometric_done_) {
        tau = stream_.next();
        if (!tau) geometric_done_ = true;
      }
      if (!tau) {
        tau = enumeration_.next();
        p.degree = enumeration_.degree();
        p.height = enumeration_.height();
        if (!tau) {
          done_ = true;
          break;
        }
      }
      ++p.candidates;
      auto c = verify_separator(setup_.spectral, setup_.form.u, setup_.form.q, *tau);
      if (c && audit_certificate(setup_.spectral, setup_.form.u, setup_.form.q, *c)) return c;
    }
    if (done_) p.candidates_exhausted = true;
    return std::nullopt;
  }

private:
  const CertSetup& setup_;
  const Budgets& budgets_;
  CandidateStream stream_;
  AlgebraicVectorStream enumeration_;
  bool geometric_done_ = false;
  bool done_ = false;
};

constexpr int kBatch = 16;

std::optional<ReachWitness> forward_step(const LtiSystem& sys, int n) {
  auto w = reach_exactly(sys, n);
  if (w && !verify_witness(sys, *w)) throw std::logic_error("forward search produced an invalid witness");
  return w;
}

Verdict reachable(ReachWitness w, SearchProgress p) {
  Verdict v;
  v.kind = VerdictKind::Reachable;
  v.witness = std::move(w);
  v.progress = p;
  return v;
}

Verdict unreachable(const CertSetup& c, std::optional<SeparatorCertificate> cert, SearchProgress p) {
  Verdict v;
  v.kind = VerdictKind::Unreachable;
  v.empty_target = !cert;
  v.certificate = std::move(cert);
  v.form = c.form;
  v.progress = p;
  return v;
}

Verdict run_single(const LtiSystem& sys, const Budgets& b, const CertSetup* setup, bool forward) {
  SearchProgress p;
  p.forward_exhausted = !forward;
  std::optional<SeparatorSearch> search;
  if (setup && setup->searchable) search.emplace(*setup, b);
  p.candidates_exhausted = !search;
  while (!p.forward_exhausted || !p.candidates_exhausted) {
    if (!p.forward_exhausted) {
      if (p.horizon + 1 > b.max_steps) {
        p.forward_exhausted = true;
      } else {
        if (auto w = forward_step(sys, p.horizon + 1)) {
          ++p.horizon;
          return reachable(std::move(*w), p);
        }
        ++p.horizon;
      }
    }
    if (search && !p.candidates_exhausted)
      if (auto c = search->batch(kBatch, p)) return unreachable(*setup, std::move(c), p);
  }
  Verdict v;
  v.progress = p;
  return v;
}

Verdict run_parallel(const LtiSystem& sys, const Budgets& b, const CertSetup& setup) {
  std::atomic<bool> stop{false};
  std::mutex m;
  std::optional<Verdict> result;
  SearchProgress fp, cp;
  std::exception_ptr error;
  auto finish = [&](Verdict v) {
    std::lock_guard<std::mutex> lock(m);
    if (!result) result = std::move(v);
    stop = true;
  };
  auto guarded = [&](auto body) {
    try {
      body();
    } catch (...) {
      std::lock_guard<std::mutex> lock(m);
      if (!error) error = std::current_exception();
      stop = true;
    }
  };
  std::thread forward([&] {
    guarded([&] {
      while (!stop && fp.horizon + 1 <= b.max_steps) {
        auto w = forward_step(sys, fp.horizon + 1);
        ++fp.horizon;
        if (w) return finish(reachable(std::move(*w), fp));
      }
      fp.forward_exhausted = fp.horizon >= b.max_steps;
    });
  });
  std::thread certify([&] {
    guarded([&] {
      SeparatorSearch search(setup, b);
      while (!stop && !search.exhausted())
        if (auto c = search.batch(kBatch, cp)) return finish(unreachable(setup, std::move(c), cp));
    });
  });
  forward.join();
  certify.join();
  if (error) std::rethrow_exception(error);
  SearchProgress p = cp;
  p.horizon = fp.horizon;
  p.forward_exhausted = fp.forward_exhausted;
  if (result) {
    result->progress = p;
    return *result;
  }
  Verdict v;
  v.progress = p;
  return v;
}

}  // namespace

Verdict decide(const LtiSystem& sys, const Budgets& b) {
  sys.validate();
  std::string warning;
  const auto setup = prepare(sys, warning);
  Verdict v;
  if (setup && setup->empty_target) {
    v = unreachable(*setup, std::nullopt, {});
  } else if (setup && setup->searchable && b.workers > 1) {
    v = run_parallel(sys, b, *setup);
  } else {
    v = run_single(sys, b, setup ? &*setup : nullptr, true);
  }
  v.warning = warning;
  return v;
}

Verdict decide_forward(const LtiSystem& sys, const Budgets& b) {
  sys.validate();
  return run_single(sys, b, nullptr, true);
}

Verdict decide_certify(const LtiSystem& sys, const Budgets& b) {
  sys.validate();
  std::string warning;
  const auto setup = prepare(sys, warning);
  Verdict v;
  if (setup && setup->empty_target)
    v = unreachable(*setup, std::nullopt, {});
  else
    v = run_single(sys, b, setup ? &*setup : nullptr, false);
  const std::string tail = "running forward search only";
  if (const auto at = warning.find(tail); at != std::string::npos) warning.replace(at, tail.size(), "no certificate search");
  v.warning = warning;
  return v;
}

json to_json(const RealAlg& x) {
  if (x.is_rational()) return x.to_rat().str();
  json coeffs = json::array();
  for (const auto& c : x.minpoly().coeffs()) coeffs.push_back(c.get_str());
  return {{"minpoly", coeffs}, {"lo", x.lo().str()}, {"hi", x.hi().str()}};
}

RealAlg real_alg_from_json(const json& j) {
  if (j.is_string()) return RealAlg(Rat::parse(j.get<std::string>()));
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("minpoly")) coeffs.emplace_back(c.get<std::string>());
  return RealAlg::from_parts(IntPoly(coeffs), Rat::parse(j.at("lo").get<std::string>()),
                             Rat::parse(j.at("hi").get<std::string>()));
}

namespace {

json rats_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json vec_to_json(const RatVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

std::vector<Rat> rats_from_json(const json& j) {
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(Rat::parse(x.get<std::string>()));
  return out;
}

RatVector vec_from_json(const json& j) {
  const auto xs = rats_from_json(j);
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

json budgets_json(const Budgets& b) {
  return {{"max_steps", b.max_steps},
          {"max_candidates", b.max_candidates},
          {"max_degree", b.max_degree},
          {"max_height", b.max_height},
          {"workers", b.workers}};
}

}  // namespace

json verdict_to_json(const LtiSystem& sys, const Verdict& v, const Budgets& b) {
  json j;
  j["format"] = "ltireach-verdict";
  j["version"] = 1;
  j["instance_hash"] = instance_hash(sys);
  j["verdict"] = to_string(v.kind);
  j["budgets"] = budgets_json(b);
  const auto& p = v.progress;
  j["searched"] = {{"horizon", p.horizon},
                   {"candidates", p.candidates},
                   {"degree", p.degree},
                   {"height", p.height},
                   {"forward_exhausted", p.forward_exhausted},
                   {"candidates_exhausted", p.candidates_exhausted}};
  if (!v.warning.empty()) j["warning"] = v.warning;
  if (v.witness) {
    json steps = json::array(), controls = json::array();
    for (const auto& s : v.witness->steps)
      steps.push_back({{"component", s.component},
                       {"vertex", rats_to_json(s.coeffs.vertex)},
                       {"ray", rats_to_json(s.coeffs.ray)},
                       {"line", rats_to_json(s.coeffs.line)}});
    for (const auto& u : controls_of(sys, *v.witness)) controls.push_back(vec_to_json(u));
    j["witness"] = {{"horizon", v.witness->horizon()}, {"steps", steps}, {"controls", controls}};
  }
  if (v.kind == VerdictKind::Unreachable) {
    json c;
    if (v.form) c["reduction"] = {{"power", v.form->power}, {"fitting_steps", v.form->fitting_steps}, {"dim", v.form->dim()}};
    if (v.empty_target) {
      c["kind"] = "empty_target";
    } else {
      const auto& s = *v.certificate;
      c["kind"] = "separator";
      json tau = json::array();
      for (const auto& x : s.tau) tau.push_back(to_json(x));
      c["tau"] = tau;
      c["bound"] = to_json(s.bound);
      c["maximizer"] = vec_to_json(s.maximizer);
      c["threshold"] = s.threshold;
      c["sup_value"] = to_json(s.sup_value);
      c["min_over_q"] = to_json(s.min_over_q);
    }
    j["certificate"] = c;
  }
  return j;
}

AuditResult audit_verdict(const LtiSystem& sys, const json& j) {
  try {
    if (j.value("format", "") != "ltireach-verdict") return {false, "not a verdict file"};
    if (j.at("instance_hash").get<std::string>() != instance_hash(sys))
      return {false, "instance hash mismatch: verdict was produced for a different instance"};
    const std::string kind = j.at("verdict").get<std::string>();
    if (kind == "unknown") return {true, "unknown verdict makes no claim"};
    if (kind == "reachable") {
      if (j.contains("certificate")) return {false, "reachable verdict also carries a certificate"};
      ReachWitness w;
      for (const auto& s : j.at("witness").at("steps")) {
        WitnessStep step;
        step.component = s.at("component").get<int>();
        step.coeffs.vertex = rats_from_json(s.at("vertex"));
        step.coeffs.ray = rats_from_json(s.at("ray"));
        step.coeffs.line = rats_from_json(s.at("line"));
        w.steps.push_back(std::move(step));
      }
      const WitnessStatus st = check_witness(sys, w);
      if (st != WitnessStatus::Valid) return {false, "witness rejected: " + to_string(st)};
      if (const auto it = j.at("witness").find("controls"); it != j.at("witness").end()) {
        const auto cs = controls_of(sys, w);
        if (it->size() != cs.size()) return {false, "witness controls do not match its steps"};
        for (std::size_t i = 0; i < cs.size(); ++i)
          if (vec_from_json((*it)[i]) != cs[i]) return {false, "witness controls do not match its steps"};
      }
      return {true, "witness replays into the target at horizon " + std::to_string(w.horizon())};
    }
    if (kind != "unreachable") return {false, "unrecognized verdict '" + kind + "'"};
    if (j.contains("witness")) return {false, "unreachable verdict also carries a witness"};
    const SimplicityReport r = check_simple(sys);
    if (!r.simple) return {false, "instance is not simple (" + r.failure() + ")"};
    const SimpleForm form = to_simple_form(sys);
    const json& c = j.at("certificate");
    const std::string ckind = c.at("kind").get<std::string>();
    if (ckind == "empty_target") {
      if (!form.q.is_empty()) return {false, "reduced target is not empty"};
      return {true, "reduced target is empty"};
    }
    if (ckind != "separator") return {false, "unrecognized certificate kind '" + ckind + "'"};
    if (!form.q.is_polytope() || form.q.is_empty() || form.dim() == 0) return {false, "reduced target admits no separator"};
    SeparatorCertificate s;
    for (const auto& x : c.at("tau")) s.tau.push_back(real_alg_from_json(x));
    s.bound = real_alg_from_json(c.at("bound"));
    s.maximizer = vec_from_json(c.at("maximizer"));
    s.threshold = c.at("threshold").get<long>();
    s.sup_value = real_alg_from_json(c.at("sup_value"));
    s.min_over_q = real_alg_from_json(c.at("min_over_q"));
    if (static_cast<int>(s.tau.size()) != form.dim()) return {false, "certificate dimension does not match the reduced system"};
    const SpectralData spectral = spectral_decompose(form.a);
    if (!audit_certificate(spectral, form.u, form.q, s)) return {false, "separator certificate rejected"};
    return {true, "separator certificate verified: sup = " + s.sup_value.str() + " <= min = " + s.min_over_q.str()};
  } catch (const std::exception& e) {
    return {false, std::string("malformed verdict: ") + e.what()};
  }
}

namespace {

// Counterclockwise order around an interior point, with exact comparisons.
std::vector<RatVector> order_polygon(std::vector<RatVector> pts) {
  if (pts.size() < 3) return pts;
  RatVector c = RatVector::Zero(2);
  for (const auto& p : pts) c += p;
  c /= Rat(static_cast<long>(pts.size()));
  auto half = [&](const RatVector& p) {
    const Rat x = p(0) - c(0), y = p(1) - c(1);
    return y.sign() < 0 || (y.is_zero() && x.sign() < 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVector& p, const RatVector& q) {
    const bool hp = half(p), hq = half(q);
    if (hp != hq) return !hp;
    const Rat cross = (p(0) - c(0)) * (q(1) - c(1)) - (p(1) - c(1)) * (q(0) - c(0));
    return cross.sign() > 0;
  });
  return pts;
}

std::vector<RatVector> polygon_of(const GenPolyhedron& p) { return order_polygon(remove_redundant(p).vertices); }

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  void add(double x, double y) {
    x0 = std::min(x0, x), y0 = std::min(y0, y), x1 = std::max(x1, x), y1 = std::max(y1, y);
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string points(const std::vector<RatVector>& pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s += ' ';
    s += fmt(p(0).to_double()) + "," + fmt(p(1).to_double());
  }
  return s;
}

}  // namespace

std::vector<RatVector> partial_reach_polygon(const LtiSystem& sys, int n) {
  if (sys.dim() != 2) throw std::invalid_argument("rendering needs a 2-dimensional system");
  if (!sys.controls.is_single_polytope()) throw std::invalid_argument("rendering needs a single polytope of controls");
  if (n < 0) throw std::invalid_argument("negative step count");
  return polygon_of(power_sum(sys.a, sys.controls.components.front(), n + 1));
}

std::string render_partial_reach(const LtiSystem& sys, int n, const std::optional<RenderLine>& line) {
  const auto reach = partial_reach_polygon(sys, n);
  const auto controls = polygon_of(sys.controls.components.front());
  std::vector<RatVector> target;
  if (sys.target.is_polytope() && !sys.target.is_empty()) target = polygon_of(sys.target);

  Box box{reach.front()(0).to_double(), reach.front()(1).to_double(), reach.front()(0).to_double(),
          reach.front()(1).to_double()};
  for (const auto* set : std::array<const std::vector<RatVector>*, 3>{&reach, &controls, &target})
    for (const auto& p : *set) box.add(p(0).to_double(), p(1).to_double());
  const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1.0});
  const double pad = 0.1 * span;
  box.x0 -= pad, box.y0 -= pad, box.x1 += pad, box.y1 += pad;
  const double stroke = span / 250;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\""
     << fmt(480 * (box.y1 - box.y0) / (box.x1 - box.x0)) << "\" viewBox=\"" << fmt(box.x0) << ' ' << fmt(-box.y1) << ' '
     << fmt(box.x1 - box.x0) << ' ' << fmt(box.y1 - box.y0) << "\">\n"
     << "<title>partial reachable set, n = " << n << "</title>\n"
     << "<g transform=\"scale(1,-1)\" stroke-width=\"" << fmt(stroke) << "\">\n";
  os << "<polygon id=\"reach\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" points=\"" << points(reach)
     << "\"/>\n";
  os << "<polygon id=\"controls\" fill=\"#fdae6b\" fill-opacity=\"0.6\" stroke=\"#e6550d\" points=\"" << points(controls)
     << "\"/>\n";
  if (!target.empty())
    os << "<polygon id=\"target\" fill=\"#a1d99b\" fill-opacity=\"0.6\" stroke=\"#31a354\" points=\"" << points(target)
       << "\"/>\n";
  if (line) {
    if (line->tau.size() != 2) throw std::invalid_argument("certificate line needs a 2-dimensional direction");
    const double a = line->tau[0].to_double(), b = line->tau[1].to_double(), c = line->level.to_double();
    double x0, y0, x1, y1;
    if (std::abs(b) >= std::abs(a)) {
      x0 = box.x0, x1 = box.x1;
      y0 = (c - a * x0) / b, y1 = (c - a * x1) / b;
    } else {
      y0 = box.y0, y1 = box.y1;
      x0 = (c - b * y0) / a, x1 = (c - b * y1) / a;
    }
    os << "<line id=\"certificate\" stroke=\"#de2d26\" x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
       << "\" y2=\"" << fmt(y1) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ltireach
