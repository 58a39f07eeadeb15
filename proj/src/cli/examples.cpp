#include "dform/examples.hpp"

#include "dform/error.hpp"
#include "dform/expression.hpp"

namespace dform {

const std::vector<ExampleSource>& example_sources() {
  static const std::vector<ExampleSource> sources = {
      {
          .id = 1,
          .title = "x' = -xz, y' = yz, z' = x^2 - y^2",
          .flow = {"-x*z", "y*z", "x^2 - y^2"},
          .h = "1/4 ((-x^2*y + y^3 + y*z^2) dx + (x^3 - y^2*x + x*z^2) dy - 2 x*y*z dz)",
          .H = "1/2 (x^2 + y^2 + z^2)",
          .F = "x*y",
          .X_H = {"z", "x", "y"},
          .X_F = std::vector<std::string>{"0", "y", "x"},
          .theta = std::nullopt,
          .theta_sign_variant = std::nullopt,
          .integrating_factor = std::nullopt,
          .polynomial_integral = std::nullopt,
      },
      {
          .id = 2,
          .title = "divergence-free Lorenz system x' = y - z, y' = -x + xz, z' = x - xy",
          .flow = {"y - z", "-x + x*z", "x - x*y"},
          .h = "(x/4 (z^2 + y^2) - x/3 (z + y)) dx"
               " + (1/3 (x^2 - y*z + z^2) - 1/4 x^2*y) dy"
               " + (1/3 (y^2 - z*y + x^2) - 1/4 x^2*z) dz",
          .H = "1/2 (x^2 + y^2 + z^2)",
          .F = "(y - y^2/2) + (z - z^2/2)",
          .X_H = {"z", "x", "y"},
          .X_F = std::vector<std::string>{"1 - z", "0", "1 - y"},
          .theta = std::nullopt,
          .theta_sign_variant = std::nullopt,
          .integrating_factor = std::nullopt,
          .polynomial_integral = std::nullopt,
      },
      {
          .id = 3,
          .title = "x' = xy, y' = x - z, z' = -zy",
          .flow = {"x*y", "x - z", "-z*y"},
          // 3 y^2 in the dx and dz coefficients is the reading under which
          // dh = i_X vol holds
          .h = "1/12 (z (3 y^2 + 4 x - 4 z) dx - 6 x*y*z dy + x (3 y^2 + 4 z - 4 x) dz)",
          .H = "x - y^2/2 + z",
          .F = std::nullopt,
          .X_H = {"1", "1", "-y"},
          .X_F = std::nullopt,
          .theta = "-z dx + x dz",
          .theta_sign_variant = "-z dx - x dz",
          .integrating_factor = "1/(x^2 + z^2)",
          .polynomial_integral = "-x*z",
      },
  };
  return sources;
}

namespace {

constexpr std::size_t kDim = 3;

MultiVector parse_bivector(const std::vector<std::string>& c) {
  return bivector_r3(parse_polynomial(c[0], kDim), parse_polynomial(c[1], kDim),
                     parse_polynomial(c[2], kDim));
}

}  // namespace

ExampleSystem builtin_example(int id) {
  const auto& all = example_sources();
  if (id < 1 || id > static_cast<int>(all.size())) {
    throw Error("unknown example " + std::to_string(id) + " (expected 1, 2 or 3)");
  }
  const ExampleSource& src = all[static_cast<std::size_t>(id - 1)];

  std::vector<Polynomial> comps;
  for (const auto& c : src.flow) comps.push_back(parse_polynomial(c, kDim));
  PhaseFlow flow(std::move(comps));

  auto opt_poly = [](const std::optional<std::string>& s) -> std::optional<Polynomial> {
    if (!s) return std::nullopt;
    return parse_polynomial(*s, kDim);
  };
  auto opt_form = [](const std::optional<std::string>& s) -> std::optional<DifferentialForm> {
    if (!s) return std::nullopt;
    return parse_form(*s, kDim);
  };

  MultiVector X_h = flow.as_vector_field();
  return ExampleSystem{
      .id = src.id,
      .title = src.title,
      .flow = std::move(flow),
      .h = parse_form(src.h, kDim),
      .H = parse_polynomial(src.H, kDim),
      .F = opt_poly(src.F),
      .X_h = std::move(X_h),
      .X_H = parse_bivector(src.X_H),
      .X_F = src.X_F ? std::optional<MultiVector>(parse_bivector(*src.X_F)) : std::nullopt,
      .theta = opt_form(src.theta),
      .theta_sign_variant = opt_form(src.theta_sign_variant),
      .integrating_factor = src.integrating_factor
                                ? std::optional<RationalFunction>(
                                      parse_scalar(*src.integrating_factor, kDim))
                                : std::nullopt,
      .polynomial_integral = opt_poly(src.polynomial_integral),
  };
}

std::vector<std::string> example_expression_texts() {
  std::vector<std::string> out;
  auto add = [&](const std::optional<std::string>& s) {
    if (s) out.push_back(*s);
  };
  for (const auto& src : example_sources()) {
    out.insert(out.end(), src.flow.begin(), src.flow.end());
    out.push_back(src.h);
    out.push_back(src.H);
    add(src.F);
    out.insert(out.end(), src.X_H.begin(), src.X_H.end());
    if (src.X_F) out.insert(out.end(), src.X_F->begin(), src.X_F->end());
    add(src.theta);
    add(src.theta_sign_variant);
    add(src.integrating_factor);
    add(src.polynomial_integral);
  }
  return out;
}

}  // namespace dform
