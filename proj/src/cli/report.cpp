#include "dform/report.hpp"

#include <algorithm>
#include <sstream>

#include "dform/error.hpp"
#include "dform/examples.hpp"
#include "dform/expression.hpp"

namespace dform {

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::Identity: return "identity";
    case ClaimKind::Closedness: return "closedness";
    case ClaimKind::Splitting: return "splitting";
    case ClaimKind::Pfaff: return "pfaff";
    case ClaimKind::Conservation: return "conservation";
    case ClaimKind::PartitionDag: return "partition-dag";
  }
  return "identity";
}

std::string to_string(const Quantity& q) {
  struct {
    std::string operator()(const RationalFunction& f) const { return to_string(f); }
    std::string operator()(const DifferentialForm& w) const { return to_string(w); }
    std::string operator()(const std::vector<RationalFunction>& v) const {
      return to_string(std::span<const RationalFunction>(v));
    }
  } visitor;
  return std::visit(visitor, q);
}

bool Report::numerically_equal() const {
  return std::all_of(point_checks.begin(), point_checks.end(),
                     [](const PointCheck& p) { return p.agrees(); });
}

bool Report::corroborated() const {
  return !point_checks.empty() && numerically_equal() == equal;
}

std::vector<Rational> PointSampler::draw(std::size_t dim) {
  std::vector<Rational> point;
  point.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const long num = static_cast<long>(engine_() % 61) - 30;
    const long den = static_cast<long>(engine_() % 12) + 1;
    Rational q(num, den);
    q.canonicalize();
    point.push_back(q);
  }
  return point;
}

namespace {

std::size_t quantity_dim(const Quantity& q) {
  struct {
    std::size_t operator()(const RationalFunction& f) const { return f.dim(); }
    std::size_t operator()(const DifferentialForm& w) const { return w.dim(); }
    std::size_t operator()(const std::vector<RationalFunction>& v) const {
      return v.empty() ? 0 : v.front().dim();
    }
  } visitor;
  return std::visit(visitor, q);
}

bool has_pole(const Quantity& q, std::span<const Rational> point) {
  struct {
    std::span<const Rational> pt;
    bool operator()(const RationalFunction& f) const { return f.has_pole_at(pt); }
    bool operator()(const DifferentialForm& w) const { return w.has_pole_at(pt); }
    bool operator()(const std::vector<RationalFunction>& v) const {
      return std::any_of(v.begin(), v.end(), [&](const auto& f) { return f.has_pole_at(pt); });
    }
  } visitor{point};
  return std::visit(visitor, q);
}

std::string value_at(const Quantity& q, std::span<const Rational> point) {
  struct {
    std::span<const Rational> pt;
    std::string operator()(const RationalFunction& f) const { return to_string(f.eval(pt)); }
    std::string operator()(const DifferentialForm& w) const { return to_string(w.eval(pt)); }
    std::string operator()(const std::vector<RationalFunction>& v) const {
      std::vector<RationalFunction> values;
      for (const auto& f : v) values.push_back(RationalFunction::constant(f.dim(), f.eval(pt)));
      return to_string(std::span<const RationalFunction>(values));
    }
  } visitor{point};
  return std::visit(visitor, q);
}

Quantity subtract(const Quantity& lhs, const Quantity& rhs) {
  if (lhs.index() != rhs.index()) throw Error("claim compares values of different kinds");
  if (const auto* a = std::get_if<RationalFunction>(&lhs)) {
    return *a - std::get<RationalFunction>(rhs);
  }
  if (const auto* a = std::get_if<DifferentialForm>(&lhs)) {
    return *a - std::get<DifferentialForm>(rhs);
  }
  const auto& a = std::get<std::vector<RationalFunction>>(lhs);
  const auto& b = std::get<std::vector<RationalFunction>>(rhs);
  if (a.size() != b.size()) throw DegreeMismatch("component counts differ");
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

bool is_zero(const Quantity& q) {
  struct {
    bool operator()(const RationalFunction& f) const { return f.is_zero(); }
    bool operator()(const DifferentialForm& w) const { return w.is_zero(); }
    bool operator()(const std::vector<RationalFunction>& v) const {
      return std::all_of(v.begin(), v.end(), [](const auto& f) { return f.is_zero(); });
    }
  } visitor;
  return std::visit(visitor, q);
}

}  // namespace

Report compare_quantities(std::string claim_id, ClaimKind kind, const Quantity& lhs,
                          const Quantity& rhs, PointSampler& sampler,
                          std::optional<Partition> partition) {
  Report r;
  r.claim_id = std::move(claim_id);
  r.kind = kind;
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  const Quantity diff = subtract(lhs, rhs);
  r.equal = is_zero(diff);
  r.difference = to_string(diff);
  r.partition = std::move(partition);

  const std::size_t dim = quantity_dim(lhs);
  std::vector<std::vector<Rational>> seen;
  std::size_t attempts = 0;
  while (r.point_checks.size() < kPointChecks) {
    if (++attempts > 100 * kPointChecks) throw Error("could not find points away from poles");
    auto point = sampler.draw(dim);
    if (std::find(seen.begin(), seen.end(), point) != seen.end()) continue;
    if (has_pole(lhs, point) || has_pole(rhs, point)) continue;
    seen.push_back(point);
    r.point_checks.push_back({point, value_at(lhs, point), value_at(rhs, point)});
  }
  return r;
}

Report report_from_certificate(std::string claim_id, ClaimKind kind,
                               const SplittingCertificate& cert, PointSampler& sampler) {
  return compare_quantities(std::move(claim_id), kind, cert.omega, cert.product, sampler,
                            cert.partition);
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["kind"] = std::string(to_string(r.kind));
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equal"] = r.equal;
  j["difference"] = r.difference;
  if (r.partition) {
    j["partition"] = r.partition->parts();
  } else {
    j["partition"] = nullptr;
  }
  auto checks = nlohmann::ordered_json::array();
  for (const auto& pc : r.point_checks) {
    nlohmann::ordered_json c;
    auto coords = nlohmann::ordered_json::array();
    for (const auto& q : pc.point) coords.push_back(to_string(q));
    c["point"] = std::move(coords);
    c["lhs_value"] = pc.lhs_value;
    c["rhs_value"] = pc.rhs_value;
    checks.push_back(std::move(c));
  }
  j["point_checks"] = std::move(checks);
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << (r.equal ? "[holds] " : "[fails] ") << r.claim_id << " (" << to_string(r.kind);
  if (r.partition) os << ", partition {" << r.partition->to_string() << "}";
  os << ")\n";
  os << "    lhs: " << r.lhs << "\n";
  os << "    rhs: " << r.rhs << "\n";
  if (!r.equal) os << "    difference: " << r.difference << "\n";
  const auto agreeing = std::count_if(r.point_checks.begin(), r.point_checks.end(),
                                      [](const PointCheck& p) { return p.agrees(); });
  os << "    point checks: " << agreeing << "/" << r.point_checks.size() << " agree\n";
  return os.str();
}

// ----------------------------------------------------------- example suites

namespace {

using Flow = std::vector<RationalFunction>;

Flow as_components(const PhaseFlow& f) {
  return Flow(f.components().begin(), f.components().end());
}

DifferentialForm d_of(const Polynomial& p) {
  return exterior_d(DifferentialForm::scalar(RationalFunction(p)));
}

DifferentialForm form_of(const Polynomial& p) {
  return DifferentialForm::scalar(RationalFunction(p));
}

Flow contract_coordinates(const MultiVector& v) {
  Flow out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out.push_back(interior(v, DifferentialForm::coordinate(v.dim(), i)).scalar_part());
  }
  return out;
}

}  // namespace

std::vector<Report> run_example_suite(int id, PointSampler& sampler) {
  const ExampleSystem ex = builtin_example(id);
  const std::string p = "ex" + std::to_string(id) + ".";
  const std::size_t n = ex.flow.dim();
  const DifferentialForm dh = exterior_d(ex.h);
  const Flow flow = as_components(ex.flow);
  const RationalFunction zero(n);
  std::vector<Report> out;

  if (ex.F) {
    const DifferentialForm potentials[] = {form_of(ex.H), form_of(*ex.F)};
    out.push_back(report_from_certificate(p + "dh_eq_dH_wedge_dF", ClaimKind::Splitting,
                                          verify_splitting(dh, potentials), sampler));
  }
  out.push_back(compare_quantities(p + "dh_eq_flow_form", ClaimKind::Identity, dh,
                                   flow_to_form(ex.flow), sampler));
  out.push_back(compare_quantities(p + "divergence_free", ClaimKind::Identity,
                                   RationalFunction(divergence(ex.flow)), zero, sampler));
  if (ex.F) {
    out.push_back(compare_quantities(p + "nambu_flow", ClaimKind::Identity,
                                     as_components(flow_from_hamiltonians({ex.H, *ex.F})),
                                     flow, sampler));
  }
  out.push_back(compare_quantities(p + "Xh_contract_dx", ClaimKind::Identity,
                                   contract_coordinates(ex.X_h), flow, sampler));
  if (ex.F) {
    out.push_back(compare_quantities(p + "XH_contract_dF_dx", ClaimKind::Identity,
                                     as_components(bivector_flow(ex.X_H, *ex.F)), flow,
                                     sampler));
  }
  if (ex.X_F) {
    out.push_back(compare_quantities(p + "minus_XF_contract_dH_dx", ClaimKind::Identity,
                                     as_components(-bivector_flow(*ex.X_F, ex.H)), flow,
                                     sampler));
  }
  out.push_back(compare_quantities(p + "H_first_integral", ClaimKind::Conservation,
                                   RationalFunction(lie_derivative(ex.flow, ex.H)), zero,
                                   sampler));
  if (ex.F) {
    out.push_back(compare_quantities(p + "F_first_integral", ClaimKind::Conservation,
                                     RationalFunction(lie_derivative(ex.flow, *ex.F)), zero,
                                     sampler));
  }
  if (ex.polynomial_integral) {
    out.push_back(compare_quantities(
        p + "polynomial_first_integral", ClaimKind::Conservation,
        RationalFunction(lie_derivative(ex.flow, *ex.polynomial_integral)), zero, sampler));
  }
  if (ex.theta) {
    const DifferentialForm& theta = *ex.theta;
    out.push_back(compare_quantities(p + "theta_pfaff", ClaimKind::Pfaff,
                                     wedge(exterior_d(theta), theta),
                                     DifferentialForm::zero(n, 3), sampler));
    if (ex.integrating_factor) {
      out.push_back(compare_quantities(p + "theta_integrating_factor", ClaimKind::Pfaff,
                                       exterior_d(theta * *ex.integrating_factor),
                                       DifferentialForm::zero(n, 2), sampler));
    }
    const DifferentialForm factors[] = {d_of(ex.H), theta};
    out.push_back(report_from_certificate(p + "dh_eq_dH_wedge_theta", ClaimKind::Identity,
                                          verify_wedge_identity(dh, factors), sampler));
    out.push_back(compare_quantities(p + "XH_contract_theta_dx", ClaimKind::Identity,
                                     bivector_flow(ex.X_H, theta), flow, sampler));
  }
  if (ex.theta_sign_variant) {
    const DifferentialForm& variant = *ex.theta_sign_variant;
    out.push_back(compare_quantities(p + "theta_variant_closed", ClaimKind::Closedness,
                                     exterior_d(variant), DifferentialForm::zero(n, 2),
                                     sampler));
    out.push_back(compare_quantities(p + "XH_contract_theta_variant_dx", ClaimKind::Identity,
                                     bivector_flow(ex.X_H, variant), flow, sampler));
  }
  if (ex.polynomial_integral) {
    const DifferentialForm potentials[] = {form_of(ex.H), form_of(*ex.polynomial_integral)};
    out.push_back(report_from_certificate(p + "dh_eq_dH_wedge_dG", ClaimKind::Splitting,
                                          verify_splitting(dh, potentials), sampler));
  }
  // the homotopy potential and the stated h differ by a closed form
  const DifferentialForm nu = vectorial_hamiltonian(ex.flow);
  out.push_back(compare_quantities(p + "homotopy_potential_gap_closed", ClaimKind::Closedness,
                                   exterior_d(nu - ex.h), DifferentialForm::zero(n, 2),
                                   sampler));
  return out;
}

}  // namespace dform
