#include <gtest/gtest.h>

#include <vector>

#include "dform/dynamics.hpp"
#include "dform/error.hpp"
#include "dform/examples.hpp"
#include "dform/poincare.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dform {
namespace {

using testing::Gen;

constexpr std::size_t kDim = 3;

Polynomial x() { return Polynomial::variable(kDim, 0); }
Polynomial y() { return Polynomial::variable(kDim, 1); }
Polynomial z() { return Polynomial::variable(kDim, 2); }
Polynomial c(long v) { return Polynomial::constant(kDim, v); }

DifferentialForm dx(std::size_t axis) { return DifferentialForm::coordinate(kDim, axis); }
DifferentialForm scalar(const Polynomial& p) { return DifferentialForm::scalar(RationalFunction(p)); }

DifferentialForm from_flux(const Polynomial& yz, const Polynomial& zx, const Polynomial& xy) {
  return wedge(dx(1), dx(2)) * RationalFunction(yz) + wedge(dx(2), dx(0)) * RationalFunction(zx) +
         wedge(dx(0), dx(1)) * RationalFunction(xy);
}

PhaseFlow flow(const Polynomial& a, const Polynomial& b, const Polynomial& d) { return PhaseFlow({a, b, d}); }

TEST(FlowToForm, Examples) {
  EXPECT_EQ(flow_to_form(builtin_example(1).flow),
            from_flux(-(x() * z()), y() * z(), x().pow(2) - y().pow(2)));
  EXPECT_EQ(flow_to_form(builtin_example(3).flow), from_flux(x() * y(), x() - z(), -(y() * z())));
  EXPECT_TRUE(flow_to_form(PhaseFlow::zero(kDim)).is_zero());
}

TEST(Divergence, Examples) {
  EXPECT_TRUE(divergence(builtin_example(2).flow).is_zero());
  EXPECT_TRUE(divergence(builtin_example(1).flow).is_zero());
  EXPECT_EQ(divergence(flow(x(), y(), z())), c(3));
}

TEST(VectorialHamiltonian, Examples) {
  for (int id : {1, 2}) {
    const ExampleSystem ex = builtin_example(id);
    const DifferentialForm nu = vectorial_hamiltonian(ex.flow);
    EXPECT_EQ(exterior_d(nu), flow_to_form(ex.flow)) << "example " << id;
    EXPECT_TRUE(is_closed(nu - ex.h)) << "example " << id;
  }
  EXPECT_THROW(vectorial_hamiltonian(flow(x(), y(), z())), NotDivergenceFree);
}

TEST(NambuBracket, Examples) {
  const ExampleSystem ex = builtin_example(1);
  EXPECT_EQ(nambu_bracket(ex.H, *ex.F, x()), -(x() * z()));
  EXPECT_EQ(nambu_bracket(x(), y(), z()), c(1));
  EXPECT_TRUE(nambu_bracket(ex.H, *ex.F, *ex.F).is_zero());
  const Polynomial p2 = Polynomial::variable(2, 0);
  EXPECT_THROW(nambu_bracket(p2, p2, p2), Error);
}

TEST(FlowFromHamiltonians, Examples) {
  const ExampleSystem e1 = builtin_example(1);
  EXPECT_EQ(flow_from_hamiltonians({e1.H, *e1.F}), flow(-(x() * z()), y() * z(), x().pow(2) - y().pow(2)));
  const ExampleSystem e2 = builtin_example(2);
  EXPECT_EQ(flow_from_hamiltonians({e2.H, *e2.F}), flow(y() - z(), x() * z() - x(), x() - x() * y()));
  EXPECT_EQ(flow_from_hamiltonians({e1.H, e1.H}), PhaseFlow::zero(kDim));
}

TEST(FirstIntegral, Examples) {
  EXPECT_TRUE(is_first_integral(builtin_example(2).flow, builtin_example(2).H));
  EXPECT_TRUE(is_first_integral(builtin_example(3).flow, -(x() * z())));
  EXPECT_FALSE(is_first_integral(builtin_example(1).flow, x()));
}

TEST(BivectorFlow, Examples) {
  const ExampleSystem e1 = builtin_example(1);
  EXPECT_EQ(bivector_flow(e1.X_H, *e1.F), e1.flow);
  EXPECT_EQ(-bivector_flow(*e1.X_F, e1.H), e1.flow);
  EXPECT_EQ(bivector_flow(MultiVector::zero(kDim, 2), *e1.F), PhaseFlow::zero(kDim));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(interior(e1.X_h, dx(i)).scalar_part(), RationalFunction(e1.flow[i]));
  }
}

TEST(BivectorFlow, Example2) {
  const ExampleSystem e2 = builtin_example(2);
  EXPECT_EQ(bivector_flow(e2.X_H, *e2.F), e2.flow);
  EXPECT_EQ(-bivector_flow(*e2.X_F, e2.H), e2.flow);
}

TEST(Pfaff, Examples) {
  const DifferentialForm theta = dx(0) * RationalFunction(-z()) + dx(2) * RationalFunction(x());
  EXPECT_TRUE(pfaff_integrable(theta));
  EXPECT_TRUE(pfaff_integrable(dx(0) * RationalFunction(y())));
  const DifferentialForm twisted = dx(1) * RationalFunction(x()) + dx(2);
  EXPECT_FALSE(pfaff_integrable(twisted));
  EXPECT_EQ(wedge(exterior_d(twisted), twisted), volume_form(kDim));
}

TEST(IntegratingFactor, Examples) {
  const DifferentialForm theta = dx(0) * RationalFunction(-z()) + dx(2) * RationalFunction(x());
  EXPECT_TRUE(check_integrating_factor(theta, RationalFunction(c(1), x().pow(2) + z().pow(2))));
  EXPECT_FALSE(check_integrating_factor(theta, RationalFunction(c(1))));
  EXPECT_TRUE(check_integrating_factor(dx(0), RationalFunction(c(1))));
}

// Properties ------------------------------------------------------------

TEST(DynamicsProperties, DivergenceOfFlowForm) {
  Gen gen(12000);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Polynomial> comps;
      for (std::size_t i = 0; i < n; ++i) comps.push_back(gen.polynomial(n));
      const PhaseFlow X(comps);
      EXPECT_EQ(exterior_d(flow_to_form(X)), volume_form(n) * RationalFunction(divergence(X)));
    }
  }
}

TEST(DynamicsProperties, NambuAlternatingAndLeibniz) {
  Gen gen(13000);
  for (int t = 0; t < 40; ++t) {
    const Polynomial H = gen.polynomial(kDim), F = gen.polynomial(kDim), G = gen.polynomial(kDim);
    const Polynomial G2 = gen.polynomial(kDim);
    const Polynomial b = nambu_bracket(H, F, G);
    EXPECT_EQ(nambu_bracket(F, H, G), -b);
    EXPECT_EQ(nambu_bracket(H, G, F), -b);
    EXPECT_EQ(nambu_bracket(G, F, H), -b);
    EXPECT_TRUE(nambu_bracket(H, H, G).is_zero());
    EXPECT_TRUE(nambu_bracket(H, F, H).is_zero());
    EXPECT_EQ(nambu_bracket(H, F, G * G2), G * nambu_bracket(H, F, G2) + nambu_bracket(H, F, G) * G2);
    // oracle: scalar triple product of the gradients
    const auto gH = testing::gradient(H), gF = testing::gradient(F), gG = testing::gradient(G);
    const auto cr = testing::cross(gF, gG);
    EXPECT_EQ(b, gH[0] * cr[0] + gH[1] * cr[1] + gH[2] * cr[2]);
  }
}

TEST(DynamicsProperties, HamiltoniansAreFirstIntegrals) {
  Gen gen(14000);
  for (int t = 0; t < 40; ++t) {
    const Polynomial H = gen.polynomial(kDim), F = gen.polynomial(kDim);
    const PhaseFlow X = flow_from_hamiltonians({H, F});
    EXPECT_TRUE(is_first_integral(X, H));
    EXPECT_TRUE(is_first_integral(X, F));
    EXPECT_TRUE(divergence(X).is_zero());
  }
}

TEST(DynamicsProperties, IntegratingFactorImpliesPfaff) {
  Gen gen(15000);
  int hits = 0;
  for (int t = 0; t < 60; ++t) {
    // g * theta = dF, so theta = dF / g has integrating factor g
    const Polynomial F = gen.polynomial(kDim);
    const Polynomial g = gen.positive_polynomial(kDim);
    const DifferentialForm theta = exterior_d(scalar(F)) * RationalFunction(c(1), g);
    const RationalFunction factor(g);
    if (check_integrating_factor(theta, factor)) {
      ++hits;
      EXPECT_TRUE(pfaff_integrable(theta));
    }
    // random 1-forms and factors: the implication must hold whenever the premise does
    const DifferentialForm w = gen.polynomial_form(kDim, 1, 1);
    const RationalFunction h(gen.positive_polynomial(kDim));
    if (check_integrating_factor(w, h)) EXPECT_TRUE(pfaff_integrable(w));
  }
  EXPECT_GE(hits, 50);
}

}  // namespace
}  // namespace dform
