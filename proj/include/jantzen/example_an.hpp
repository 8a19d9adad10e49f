#pragma once

#include "jantzen/formulas.hpp"

namespace jantzen {

struct ExampleAnRow {
  int i = 0;
  IntVec weight;               // x_i . lambda
  bool weight_ok = false;      // x_i . lambda = omega_i + (p-n-1+i) omega_n
  bool lambda_i_ok = false;    // s_1...s_{i-1} . lambda = lambda + omega_i - i omega_1
  bool reflection_ok = false;  // x_i x_{i-1}^{-1} = s_{beta_i,1}, beta_i = alpha_i+...+alpha_n
  bool jsf_ok = false;         // all three routes give the alternating sum
  Int chain_bound = 0;         // doubling bound at x_i s_n, seeded with chain value 1
  bool bound_ok = false;       // chain_bound == 3

  bool ok() const { return weight_ok && lambda_i_ok && reflection_ok && jsf_ok && bound_ok; }
};

struct ExampleAnReport {
  int n = 0;
  Int p = 0;
  IntVec lambda;  // (p-n-1) omega_n
  std::vector<ExampleAnRow> rows;
  bool pass = false;
};

/// Works through the chain x_i = s_0 s_1 ... s_{i-1} in type A_n starting
/// from lambda = (p-n-1) omega_n: the closed-form weights x_i . lambda, the
/// level-one walls x_i x_{i-1}^{-1}, the alternating-sum JSF by all three
/// routes, and the doubling filtration bound at the step x_i s_n.
/// Requires an A_n session with n >= 2.
ExampleAnReport run_example_an(const Session& sess);

}  // namespace jantzen
