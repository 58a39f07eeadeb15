#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dform/dynamics.hpp"

namespace dform {

/// Source text of one built-in example, in the expression grammar. All
/// values live in R^3.
struct ExampleSource {
  int id;
  std::string title;
  std::vector<std::string> flow;    // x', y', z'
  std::string h;                    // vectorial Hamiltonian (1-form)
  std::string H;
  std::optional<std::string> F;
  std::vector<std::string> X_H;     // coefficients of Dx/\Dy, Dy/\Dz, Dz/\Dx
  std::optional<std::vector<std::string>> X_F;
  std::optional<std::string> theta;               // prehamiltonian 1-form
  std::optional<std::string> theta_sign_variant;  // closed alternative to theta
  std::optional<std::string> integrating_factor;
  std::optional<std::string> polynomial_integral; // second first integral
};

/// The parsed example system.
struct ExampleSystem {
  int id;
  std::string title;
  PhaseFlow flow;
  DifferentialForm h;
  Polynomial H;
  std::optional<Polynomial> F;
  MultiVector X_h;
  MultiVector X_H;
  std::optional<MultiVector> X_F;
  std::optional<DifferentialForm> theta;
  std::optional<DifferentialForm> theta_sign_variant;
  std::optional<RationalFunction> integrating_factor;
  std::optional<Polynomial> polynomial_integral;
};

const std::vector<ExampleSource>& example_sources();

/// Throws dform::Error for ids other than 1, 2, 3.
ExampleSystem builtin_example(int id);

/// Every expression string embedded in the registry.
std::vector<std::string> example_expression_texts();

}  // namespace dform
