// ltireach: decide point/polytope reachability for discrete-time LTI systems.
//
// Exit codes: 0 reachable (or audit passed), 1 unreachable (or audit failed),
// 2 unknown, 3 bad input, 4 internal error.

#include "ltireach/cli/driver.hpp"
#include "ltireach/cli/instance.hpp"
#include "ltireach/gadgets/gadgets.hpp"
#include "ltireach/linalg/matrix.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace ltireach;

namespace {

constexpr int kBadInput = 3;
constexpr int kInternal = 4;

int exit_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::Reachable: return 0;
    case VerdictKind::Unreachable: return 1;
    case VerdictKind::Unknown: return 2;
  }
  return kInternal;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

RatVector parse_vector(const std::string& text) {
  const RatMatrix m = parse_matrix(text);
  if (m.rows() != 1) throw std::invalid_argument("expected a single row: '" + text + "'");
  return m.row(0).transpose();
}

void add_budget_options(CLI::App* cmd, Budgets& b, bool& single) {
  cmd->add_option("--max-steps", b.max_steps, "forward horizon")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-candidates", b.max_candidates, "separator candidates to try")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-degree", b.max_degree, "enumeration degree bound")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-height", b.max_height, "enumeration height bound")->check(CLI::NonNegativeNumber);
  cmd->add_option("--workers", b.workers, "worker threads (1 is deterministic)")->check(CLI::PositiveNumber);
  cmd->add_flag("--single-worker", single, "run deterministically on one thread");
}

int report(const LtiSystem& sys, const Verdict& v, const Budgets& b, const std::string& out) {
  if (!v.warning.empty()) std::cerr << "warning: " << v.warning << '\n';
  const auto j = verdict_to_json(sys, v, b);
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_text_file(out, j.dump(2) + "\n");
    std::cout << to_string(v.kind) << '\n';
  }
  return exit_code(v.kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reachability for discrete-time linear time-invariant systems"};
  app.require_subcommand(1);

  std::string input, out, verdict_file;
  Budgets budgets;
  bool single = false;
  int steps = 0;

  auto* decide_cmd = app.add_subcommand("decide", "interleave forward and separator search");
  decide_cmd->add_option("--input", input, "instance file")->required();
  decide_cmd->add_option("--out", out, "write the verdict file here");
  add_budget_options(decide_cmd, budgets, single);

  auto* forward_cmd = app.add_subcommand("forward", "bounded forward search only");
  forward_cmd->add_option("--input", input, "instance file")->required();
  forward_cmd->add_option("--out", out, "write the verdict file here");
  add_budget_options(forward_cmd, budgets, single);

  auto* certify_cmd = app.add_subcommand("certify", "separator search only");
  certify_cmd->add_option("--input", input, "instance file")->required();
  certify_cmd->add_option("--out", out, "write the verdict file here");
  add_budget_options(certify_cmd, budgets, single);

  auto* audit_cmd = app.add_subcommand("audit", "recheck a verdict file against an instance");
  audit_cmd->add_option("--input", input, "instance file")->required();
  audit_cmd->add_option("--verdict", verdict_file, "verdict file")->required();

  auto* render_cmd = app.add_subcommand("render", "SVG of the partial reachable set of a 2-D instance");
  render_cmd->add_option("--input", input, "instance file")->required();
  render_cmd->add_option("--steps", steps, "draw sum_{i<=n} A^i(U)")->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--out", out, "SVG file")->required();
  render_cmd->add_option("--verdict", verdict_file, "draw the separator of this verdict file");

  auto* gadget_cmd = app.add_subcommand("gadget", "emit instances from the hardness reductions");
  gadget_cmd->require_subcommand(1);
  std::vector<std::string> matrices;
  std::string x_text, y_text, relation = "add";
  long constant = 0;
  auto* skolem = gadget_cmd->add_subcommand("skolem", "is (M^n)_{1,2} = 0 for some n >= 1");
  skolem->add_option("--matrix", matrices, "M as \"a b; c d\"")->required()->expected(1);
  auto* markov = gadget_cmd->add_subcommand("markov", "is (M^n)_{1,2} >= 1/2 for some n >= 1");
  markov->add_option("--matrix", matrices, "column-stochastic M")->required()->expected(1);
  auto* vecreach = gadget_cmd->add_subcommand("vecreach", "A_k^{n_k} ... A_1^{n_1} x = y with integer n_i");
  vecreach->add_option("--matrix", matrices, "A_1, A_2, ... in order")->required();
  vecreach->add_option("--x", x_text, "start vector")->required();
  vecreach->add_option("--y", y_text, "goal vector")->required();
  auto* powering = gadget_cmd->add_subcommand("powering", "arithmetic gadgets lifted to an LTI system");
  powering->add_option("--relation", relation, "constant, add or mul")
      ->check(CLI::IsMember({"constant", "add", "mul"}));
  powering->add_option("--k", constant, "the constant for --relation constant");
  for (auto* g : {skolem, markov, vecreach, powering}) g->add_option("--out", out, "instance file (stdout if absent)");

  CLI11_PARSE(app, argc, argv);
  if (single) budgets.workers = 1;

  try {
    if (*decide_cmd || *forward_cmd || *certify_cmd) {
      const LtiSystem sys = read_instance_file(input);
      const Verdict v = *decide_cmd ? decide(sys, budgets) : *forward_cmd ? decide_forward(sys, budgets)
                                                                          : decide_certify(sys, budgets);
      return report(sys, v, budgets, out);
    }
    if (*audit_cmd) {
      const LtiSystem sys = read_instance_file(input);
      const auto j = nlohmann::json::parse(read_text_file(verdict_file));
      const AuditResult r = audit_verdict(sys, j);
      std::cout << (r.ok ? "valid: " : "rejected: ") << r.message << '\n';
      return r.ok ? 0 : 1;
    }
    if (*render_cmd) {
      const LtiSystem sys = read_instance_file(input);
      std::optional<RenderLine> line;
      if (!verdict_file.empty()) {
        const auto j = nlohmann::json::parse(read_text_file(verdict_file));
        const AuditResult r = audit_verdict(sys, j);
        if (!r.ok) throw std::invalid_argument("verdict does not audit: " + r.message);
        if (j.contains("certificate") && j["certificate"].value("kind", "") == "separator") {
          const auto& red = j["certificate"]["reduction"];
          if (red.at("power").get<long>() != 1 || red.at("fitting_steps").get<int>() != 0 || red.at("dim").get<int>() != 2) {
            std::cerr << "warning: separator lives in reduced coordinates; not drawn\n";
          } else {
            RenderLine l;
            for (const auto& t : j["certificate"]["tau"]) l.tau.push_back(real_alg_from_json(t));
            l.level = real_alg_from_json(j["certificate"]["bound"]);
            line = l;
          }
        }
      }
      write_text_file(out, render_partial_reach(sys, steps, line));
      return 0;
    }
    if (*gadget_cmd) {
      LtiSystem sys;
      if (*skolem) {
        sys = skolem_to_lti(parse_matrix(matrices.front()));
      } else if (*markov) {
        sys = markov_to_lti(parse_matrix(matrices.front()));
      } else if (*vecreach) {
        VectorReachInstance v;
        for (const auto& m : matrices) v.factors.push_back(parse_matrix(m));
        v.x = parse_vector(x_text);
        v.y = parse_vector(y_text);
        sys = vector_reach_to_lti(v).system;
      } else {
        const PoweringInstance p = relation == "constant" ? gadget_constant(constant)
                                   : relation == "add"    ? gadget_add()
                                                          : gadget_mul();
        sys = vector_reach_to_lti(powering_to_vector_reach(p)).system;
      }
      emit(out, emit_instance(sys));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << input << ": " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
