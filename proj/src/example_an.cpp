#include "jantzen/example_an.hpp"

#include <stdexcept>

#include "jantzen/asph.hpp"

namespace jantzen {

ExampleAnReport run_example_an(const Session& sess) {
  const RootSystem& rs = sess.rs();
  if (rs.cartan_type().family != 'A' || rs.rank() < 2)
    throw std::invalid_argument("the chain example requires type A_n with n >= 2");

  const int n = rs.rank();
  ExampleAnReport report;
  report.n = n;
  report.p = sess.p();

  auto omega = [&](int i) {  // 1-indexed fundamental weight
    Weight w = Weight::zero(n);
    w.fw[i - 1] = 1;
    return w;
  };
  const Weight lambda = (sess.p() - n - 1) * omega(n);
  report.lambda = lambda.fw;

  // x_i = s_0 s_1 ... s_{i-1}
  std::vector<AffineElement> x(n + 1);
  x[0] = sess.identity();
  for (int i = 1; i <= n; ++i) x[i] = x[i - 1] * sess.generator(i - 1);

  bool all_ok = true;
  for (int i = 1; i <= n; ++i) {
    ExampleAnRow row;
    row.i = i;

    const Weight xi_lambda = p_dot(sess, x[i], lambda);
    row.weight = xi_lambda.fw;
    row.weight_ok = xi_lambda == omega(i) + (sess.p() - n - 1 + i) * omega(n);

    // s_1 ... s_{i-1} . lambda = lambda + omega_i - i*omega_1
    AffineElement finite_part = sess.identity();
    for (int j = 1; j <= i - 1; ++j) finite_part = finite_part * sess.generator(j);
    row.lambda_i_ok =
        p_dot(sess, finite_part, lambda) == lambda + omega(i) - Int(i) * omega(1);

    // x_i x_{i-1}^{-1} = s_{beta_i,1} with beta_i = alpha_i + ... + alpha_n
    Root beta_i{IntVec(n, 0)};
    for (int j = i; j <= n; ++j) beta_i.sr[j - 1] = 1;
    auto refl = as_reflection(sess, x[i] * x[i - 1].inverse());
    row.reflection_ok = refl && *refl == Reflection{beta_i, 1};

    // JSF_{x_i} = sum_{j=1}^{i} (-1)^{j+1} N_{x_{i-j}} along all three routes
    AsphElement expected;
    for (int j = 1; j <= i; ++j)
      expected.add(p_dot(sess, x[i - j], Weight::zero(n)), (j % 2 == 1) ? 1 : -1, x[i - j]);
    const AsphElement recursive = jsf_recursive(sess, x[i]);
    const AsphElement direct = jsf_direct(sess, x[i]);
    const AsphElement classical = psi(sess, lambda, jsf_classical(sess, xi_lambda));
    row.jsf_ok = recursive == expected && direct == expected && classical == expected;

    // filtration length of the x_i alcove is 1; crossing the wall to
    // x_i s_n doubles and adds nu_p(m p)
    AffineElement y = x[i] * sess.generator(n);
    if (length(sess, y) == length(sess, x[i]) + 1 && is_min_rep(sess, y)) {
      Reflection t = reflection_from_element(sess, y * x[i].inverse());
      row.chain_bound = chained_bound(1, nu_p(sess.p(), checked_mul(t.m, sess.p())));
      row.bound_ok = row.chain_bound == 3;
    }

    all_ok = all_ok && row.ok();
    report.rows.push_back(std::move(row));
  }
  report.pass = all_ok;
  return report;
}

}  // namespace jantzen
