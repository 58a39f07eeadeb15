#include "dform/commands.hpp"

#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "dform/dynamics.hpp"
#include "dform/error.hpp"
#include "dform/examples.hpp"
#include "dform/expression.hpp"
#include "dform/partitions.hpp"
#include "dform/poincare.hpp"
#include "dform/report.hpp"

namespace dform {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t dim = 3;
};

std::vector<std::string> split_components(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

/// Prints claim reports and returns the aggregated exit code.
int emit_reports(const Globals& g, const std::vector<Report>& reports, std::ostream& out) {
  bool all = true;
  for (const auto& r : reports) all = all && r.equal;
  if (g.json) {
    Json j;
    j["seed"] = g.seed;
    j["all_equal"] = all;
    auto arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r);
    out << (all ? "all claims hold" : "some claims fail") << " (seed " << g.seed << ")\n";
  }
  return all ? kAllClaimsHold : kSomeClaimFails;
}

int emit_result(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.json) {
    Json j;
    j["result"] = text;
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return kAllClaimsHold;
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

int emit_partitions(const Globals& g, unsigned k, bool dot, std::ostream& out) {
  const PartitionDag dag = build_dag(k);
  if (dot) {
    out << to_dot(dag);
    return kAllClaimsHold;
  }
  const auto chains = maximal_chains(dag);
  const auto cmp = compare_with_reference(dag);
  if (g.json) {
    Json j;
    j["k"] = k;
    auto nodes = Json::array();
    for (const auto& p : dag.nodes) nodes.push_back(partition_json(p));
    j["nodes"] = std::move(nodes);
    auto edges = Json::array();
    for (const auto& [from, to] : dag.edges) {
      edges.push_back(Json::array({partition_json(dag.nodes[from]), partition_json(dag.nodes[to])}));
    }
    j["edges"] = std::move(edges);
    j["maximal_chains"] = chains.size();
    if (cmp) {
      Json ref;
      auto absent = Json::array();
      for (const auto& [a, b] : cmp->absent_from_reference) {
        absent.push_back(Json::array({partition_json(a), partition_json(b)}));
      }
      auto extra = Json::array();
      for (const auto& [a, b] : cmp->not_merges) {
        extra.push_back(Json::array({partition_json(a), partition_json(b)}));
      }
      ref["absent_from_reference"] = std::move(absent);
      ref["not_merges"] = std::move(extra);
      j["reference_diagram"] = std::move(ref);
    } else {
      j["reference_diagram"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return kAllClaimsHold;
  }
  out << "partitions of " << k << ": " << dag.nodes.size() << "\n";
  for (const auto& p : dag.nodes) out << "  {" << p.to_string() << "}\n";
  out << "covers: " << dag.edges.size() << "\n";
  for (const auto& [from, to] : dag.edges) {
    out << "  {" << dag.nodes[from].to_string() << "} -> {" << dag.nodes[to].to_string()
        << "}\n";
  }
  out << "maximal chains: " << chains.size() << "\n";
  if (cmp) {
    out << "reference diagram: " << cmp->absent_from_reference.size()
        << " cover(s) not drawn, " << cmp->not_merges.size() << " drawn arrow(s) not covers\n";
    for (const auto& [a, b] : cmp->absent_from_reference) {
      out << "  not drawn: {" << a.to_string() << "} -> {" << b.to_string() << "}\n";
    }
  }
  return kAllClaimsHold;
}

/// Option tokens are `--name`, `--name=value`, `-n`, `-nN` and `-h`.
bool looks_like_option(const std::string& a) {
  static const std::regex re(R"(--[A-Za-z][A-Za-z0-9-]*(=.*)?|-[nh]|-n[0-9]+)");
  return a == "--" || std::regex_match(a, re);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Exact exterior calculus: forms, splittings, Nambu structures"};
  app.name("dform");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Emit machine-readable JSON");
  app.add_option("--seed", g.seed, "Seed for random corroboration points");
  app.add_option("-n", g.dim, "Ambient dimension")->check(CLI::Range(1, 64));

  std::function<int()> action;

  // forms ---------------------------------------------------------------
  auto* forms = app.add_subcommand("forms", "Exterior calculus on a single expression");
  forms->require_subcommand(1);
  std::vector<std::string> exprs;

  auto* fd = forms->add_subcommand("d", "Exterior derivative");
  fd->add_option("form", exprs, "Form")->required()->expected(1);
  fd->callback([&] {
    action = [&] { return emit_result(g, to_string(exterior_d(parse_form(exprs[0], g.dim))), out); };
  });

  auto* fw = forms->add_subcommand("wedge", "Wedge product of two or more forms");
  fw->add_option("forms", exprs, "Forms")->required()->expected(2, -1);
  fw->callback([&] {
    action = [&] {
      std::vector<DifferentialForm> fs;
      for (const auto& e : exprs) fs.push_back(parse_form(e, g.dim));
      return emit_result(g, to_string(wedge_all(fs)), out);
    };
  });

  auto* fi = forms->add_subcommand("interior", "Contract a vector field (comma-separated components) with a form");
  fi->add_option("args", exprs, "Vector field, then form")->required()->expected(2);
  fi->callback([&] {
    action = [&] {
      std::vector<RationalFunction> comps;
      for (const auto& c : split_components(exprs[0])) comps.push_back(parse_scalar(c, g.dim));
      if (comps.size() != g.dim) throw Error("vector field needs " + std::to_string(g.dim) + " components");
      const auto v = MultiVector::from_components(comps);
      return emit_result(g, to_string(interior(v, parse_form(exprs[1], g.dim))), out);
    };
  });

  auto* fh = forms->add_subcommand("homotopy", "Radial homotopy operator (polynomial forms)");
  fh->add_option("form", exprs, "Form")->required()->expected(1);
  fh->callback([&] {
    action = [&] { return emit_result(g, to_string(homotopy(parse_form(exprs[0], g.dim))), out); };
  });

  auto* fc = forms->add_subcommand("closed", "Check d(form) = 0");
  fc->add_option("form", exprs, "Form")->required()->expected(1);
  fc->callback([&] {
    action = [&] {
      PointSampler sampler(g.seed);
      const auto w = parse_form(exprs[0], g.dim);
      const auto dw = exterior_d(w);
      return emit_reports(g, {compare_quantities("closed", ClaimKind::Closedness, dw,
                                                 DifferentialForm::zero(g.dim, dw.degree()), sampler)},
                          out);
    };
  });

  // verify --------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Verify identities");
  verify->require_subcommand(1);

  std::string omega;
  std::vector<std::string> mus;
  auto* vs = verify->add_subcommand("split", "omega = d(mu_1) /\\ ... /\\ d(mu_r)");
  vs->add_option("--omega", omega, "Form to split")->required();
  vs->add_option("--mu", mus, "Potentials, in wedge order")->required()->expected(1, -1);
  vs->callback([&] {
    action = [&] {
      PointSampler sampler(g.seed);
      std::vector<DifferentialForm> ws;
      for (const auto& m : mus) ws.push_back(parse_form(m, g.dim));
      const auto w = parse_form(omega, g.dim);
      const auto cert = verify_splitting(w, ws);
      return emit_reports(g, {report_from_certificate("split", ClaimKind::Splitting, cert, sampler)}, out);
    };
  });

  std::string lhs;
  std::vector<std::string> factors;
  auto* vw = verify->add_subcommand("wedge", "lhs = f_1 /\\ ... /\\ f_r");
  vw->add_option("--lhs", lhs, "Left-hand side")->required();
  vw->add_option("--factor", factors, "Factors, in wedge order")->required()->expected(1, -1);
  vw->callback([&] {
    action = [&] {
      PointSampler sampler(g.seed);
      std::vector<DifferentialForm> fs;
      for (const auto& f : factors) fs.push_back(parse_form(f, g.dim));
      const auto cert = verify_wedge_identity(parse_form(lhs, g.dim), fs);
      return emit_reports(g, {report_from_certificate("wedge", ClaimKind::Identity, cert, sampler)}, out);
    };
  });

  int example_id = 0;
  auto* ve = verify->add_subcommand("example", "Run a built-in example suite");
  ve->add_option("id", example_id, "Example number")->required()->check(CLI::Range(1, 3));
  ve->callback([&] {
    action = [&] {
      PointSampler sampler(g.seed);
      return emit_reports(g, run_example_suite(example_id, sampler), out);
    };
  });

  // nambu ---------------------------------------------------------------
  auto* nambu = app.add_subcommand("nambu", "Nambu brackets and flows in R^3");
  nambu->require_subcommand(1);
  std::string H, F, G, flow_text;

  auto* nb = nambu->add_subcommand("bracket", "{H, F, G}");
  nb->add_option("--H", H)->required();
  nb->add_option("--F", F)->required();
  nb->add_option("--G", G)->required();
  nb->callback([&] {
    action = [&] {
      return emit_result(g, to_string(nambu_bracket(parse_polynomial(H, 3), parse_polynomial(F, 3),
                                                    parse_polynomial(G, 3))),
                         out);
    };
  });

  auto* nf = nambu->add_subcommand("flow", "x_i' = {H, F, x_i}");
  nf->add_option("--H", H)->required();
  nf->add_option("--F", F)->required();
  nf->callback([&] {
    action = [&] {
      const auto flow = flow_from_hamiltonians({parse_polynomial(H, 3), parse_polynomial(F, 3)});
      std::vector<RationalFunction> comps(flow.components().begin(), flow.components().end());
      return emit_result(g, to_string(std::span<const RationalFunction>(comps)), out);
    };
  });

  auto* nc = nambu->add_subcommand("conserve", "Check that G is a first integral of a flow");
  nc->add_option("--flow", flow_text, "Comma-separated components")->required();
  nc->add_option("--G", G)->required();
  nc->callback([&] {
    action = [&] {
      std::vector<Polynomial> comps;
      for (const auto& c : split_components(flow_text)) comps.push_back(parse_polynomial(c, g.dim));
      if (comps.size() != g.dim) throw Error("flow needs " + std::to_string(g.dim) + " components");
      PhaseFlow flow(std::move(comps));
      PointSampler sampler(g.seed);
      return emit_reports(g,
                          {compare_quantities("conserve", ClaimKind::Conservation,
                                              RationalFunction(lie_derivative(flow, parse_polynomial(G, g.dim))),
                                              RationalFunction(g.dim), sampler)},
                          out);
    };
  });

  // pfaff ---------------------------------------------------------------
  std::string theta_text, factor_text;
  auto* pf = app.add_subcommand("pfaff", "Frobenius condition and integrating factor for a 1-form");
  pf->add_option("form", theta_text, "1-form")->required();
  pf->add_option("--factor", factor_text, "Candidate integrating factor");
  pf->callback([&] {
    action = [&] {
      PointSampler sampler(g.seed);
      const auto theta = parse_form(theta_text, g.dim);
      if (theta.degree() != 1) throw DegreeMismatch("pfaff expects a 1-form");
      std::vector<Report> reports;
      reports.push_back(compare_quantities("pfaff", ClaimKind::Pfaff, wedge(exterior_d(theta), theta),
                                           DifferentialForm::zero(g.dim, 3), sampler));
      if (!factor_text.empty()) {
        const auto factor = parse_scalar(factor_text, g.dim);
        reports.push_back(compare_quantities("integrating_factor", ClaimKind::Pfaff,
                                             exterior_d(theta * factor), DifferentialForm::zero(g.dim, 2),
                                             sampler));
      }
      return emit_reports(g, reports, out);
    };
  });

  // partitions ----------------------------------------------------------
  unsigned k = 0;
  bool dot = false;
  auto* parts = app.add_subcommand("partitions", "Merge diagram of the partitions of k");
  parts->add_option("k", k, "Weight")->required()->check(CLI::Range(1, 60));
  parts->add_flag("--dot", dot, "Graphviz output");
  parts->callback([&] { action = [&] { return emit_partitions(g, k, dot, out); }; });

  std::vector<const char*> argv{"dform"};
  // a leading space keeps expressions such as "-x*z" out of option parsing
  std::vector<std::string> shielded;
  shielded.reserve(args.size());
  for (const auto& a : args) {
    shielded.push_back(!a.empty() && a[0] == '-' && !looks_like_option(a) ? " " + a : a);
  }
  for (const auto& a : shielded) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllClaimsHold;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAllClaimsHold;
  } catch (const CLI::ParseError& e) {
    err << "dform: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const ParseError& e) {
    err << "dform: parse error at " << e.what() << "\n";
  } catch (const Error& e) {
    err << "dform: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace dform
