#include "jantzen/formulas.hpp"

#include <cassert>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace jantzen {

Int nu_p(Int p, Int m) {
  if (m == 0) throw std::invalid_argument("nu_p(0) is undefined");
  if (m < 0) m = -m;
  Int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

CharacterVector jsf_classical_with(const Session& sess, const Weight& lam, const NuFn& nu) {
  if (!lam.is_dominant()) throw std::invalid_argument("jsf_classical: weight is not dominant");
  const RootSystem& rs = sess.rs();
  const Weight shifted = lam + rs.rho();
  CharacterVector out;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const Int upper = vec_dot(shifted.fw, rs.coroot_row(static_cast<int>(k)));
    const Weight alpha_w = rs.to_weight(rs.positive_roots()[k]);
    for (Int m = 1; m < upper; ++m) {
      const Int v = nu(sess.p(), m);
      if (v == 0) continue;
      SignedDominant sdc = rs.signed_dominant_conjugate(lam - m * alpha_w);
      if (sdc.is_zero()) continue;
      out.add(*sdc.dominant, checked_mul(-v, sdc.sign));
    }
  }
  return out;
}

CharacterVector jsf_classical(const Session& sess, const Weight& lam) {
  return jsf_classical_with(sess, lam, [](Int p, Int m) { return nu_p(p, m); });
}

AsphElement jsf_direct(const Session& sess, const AffineElement& x) {
  if (!is_min_rep(sess, x)) throw std::invalid_argument("jsf_direct: x is not in W_aff^+");
  AsphElement out;
  for (const Reflection& s : rl_via_hyperplanes(sess, x)) {
    assert(s.m >= 1);
    AsphElement term = n_of(sess, reflection_element(sess, s) * x);
    out += term * nu_p(sess.p(), checked_mul(s.m, sess.p()));
  }
  return out;
}

AsphElement jsf_from_word(const Session& sess, std::span<const int> word) {
  AsphElement jsf;
  AffineElement y = sess.identity();
  Int len = 0;
  for (int idx : word) {
    AffineElement ys = y * sess.generator(idx);
    if (length(sess, ys) != len + 1)
      throw std::invalid_argument("jsf_from_word: word is not reduced");
    if (!is_min_rep(sess, ys))
      throw std::logic_error("jsf_from_word: prefix left W_aff^+");
    Reflection t = reflection_from_element(sess, ys * y.inverse());
    if (t.m <= 0) throw std::logic_error("jsf_from_word: wall level must be positive");
    AsphElement next = act_generator(sess, jsf, idx);
    next += n_of(sess, y) * nu_p(sess.p(), checked_mul(t.m, sess.p()));
    jsf = std::move(next);
    y = ys;
    ++len;
  }
  return jsf;
}

AsphElement jsf_recursive(const Session& sess, const AffineElement& x) {
  if (!is_min_rep(sess, x)) throw std::invalid_argument("jsf_recursive: x is not in W_aff^+");
  return jsf_from_word(sess, reduced_word(sess, x));
}

Int asf_pair_regular(const Session& sess, const AffineElement& x, const AffineElement& y) {
  if (!is_min_rep(sess, x) || !is_min_rep(sess, y))
    throw std::invalid_argument("asf_pair_regular: arguments must be in W_aff^+");
  const Int len_x = length(sess, x);
  const AffineElement x_inv = x.inverse();
  Int total = 0;
  int contributors = 0;
  for (const FinWeylElement& w : sess.wfin()) {
    AffineElement wy = embed(sess, w) * y;
    auto r = as_reflection(sess, wy * x_inv);
    if (!r || r->m == 0) continue;
    if (length(sess, wy) <= len_x) continue;  // need sx > x, and sx = wy
    total = checked_add(total, checked_mul(w.det(), nu_p(sess.p(), checked_mul(r->m, sess.p()))));
    ++contributors;
  }
  if (contributors > 1)
    throw std::logic_error("asf_pair_regular: more than one finite conjugator contributed");
  return total;
}

Int asf_pair_singular(const Session& sess, const Weight& lam, const Weight& mu) {
  if (!lam.is_dominant() || !mu.is_dominant())
    throw std::invalid_argument("asf_pair_singular: weights must be dominant");
  const RootSystem& rs = sess.rs();
  const Weight shifted = lam + rs.rho();

  // The finite dot orbit of mu; mu + rho is strictly dominant, so the orbit
  // map is injective and each orbit weight has a well-defined sign.
  std::vector<std::pair<Weight, int>> orbit;
  for (const FinWeylElement& w : sess.wfin())
    orbit.push_back({rs.dot_apply(w, mu), w.det()});

  Int total = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const Int upper = vec_dot(shifted.fw, rs.coroot_row(static_cast<int>(k)));
    const Weight alpha_w = rs.to_weight(rs.positive_roots()[k]);
    std::map<Int, int> by_m;  // wall level -> sign, deduplicated
    for (const auto& [nu_w, det] : orbit) {
      // solve lam - m alpha = nu_w for an integer m
      IntVec delta = vec_sub(lam.fw, nu_w.fw);
      int j0 = -1;
      for (std::size_t j = 0; j < alpha_w.fw.size(); ++j)
        if (alpha_w.fw[j] != 0) {
          j0 = static_cast<int>(j);
          break;
        }
      if (delta[j0] % alpha_w.fw[j0] != 0) continue;
      Int m = delta[j0] / alpha_w.fw[j0];
      if (delta != vec_scale(alpha_w.fw, m)) continue;
      if (m >= 0 && m <= upper) continue;  // m in I(lam, alpha)
      auto [it, inserted] = by_m.try_emplace(m, det);
      if (!inserted && it->second != det)
        throw std::logic_error("asf_pair_singular: conflicting duplicate wall level");
    }
    for (const auto& [m, det] : by_m)
      total = checked_add(total, checked_mul(-nu_p(sess.p(), m), det));
  }
  return total;
}

Int chained_bound(Int previous, Int contribution) {
  return checked_add(checked_mul(2, previous), contribution);
}

BoundReport bounds(const Session& sess, const AffineElement& x) {
  if (!is_min_rep(sess, x)) throw std::invalid_argument("bounds: x is not in W_aff^+");
  BoundReport report;
  for (const Reflection& s : rl_via_hyperplanes(sess, x))
    report.length_bound_sum =
        checked_add(report.length_bound_sum, nu_p(sess.p(), checked_mul(s.m, sess.p())));

  const std::vector<int> word = reduced_word(sess, x);
  if (word.size() >= 63) throw std::overflow_error("2^l(x) - 1 exceeds machine width");
  report.length_bound_exp = (Int(1) << word.size()) - 1;

  AffineElement y = sess.identity();
  Int running = 0;
  std::vector<int> prefix;
  for (int idx : word) {
    AffineElement ys = y * sess.generator(idx);
    Reflection t = reflection_from_element(sess, ys * y.inverse());
    Int c = nu_p(sess.p(), checked_mul(t.m, sess.p()));
    running = chained_bound(running, c);
    prefix.push_back(idx);
    report.per_step.push_back(BoundStep{prefix, c, running});
    y = ys;
  }
  return report;
}

bool is_p_regular(const Session& sess, const Weight& lam) {
  const RootSystem& rs = sess.rs();
  const Weight shifted = lam + rs.rho();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (vec_dot(shifted.fw, rs.coroot_row(static_cast<int>(k))) % sess.p() == 0) return false;
  return true;
}

std::pair<Weight, AffineElement> to_fundamental(const Session& sess, const Weight& lam) {
  AffineElement x = alcove_of(sess, lam);
  Weight lam0 = p_dot(sess, x.inverse(), lam);
  if (!in_fundamental_alcove(sess, lam0))
    throw std::logic_error("to_fundamental: walk did not land in the fundamental alcove");
  if (!is_min_rep(sess, x))
    throw std::logic_error("to_fundamental: dominant weight with non-minimal alcove element");
  return {lam0, x};
}

JsfResult compute_jsf(const Session& sess, const Weight& lam) {
  if (!lam.is_dominant()) throw std::invalid_argument("jsf: weight is not dominant");
  JsfResult res;
  res.lambda = lam.fw;
  res.p = sess.p();
  res.method = "classical";
  res.character = jsf_classical(sess, lam);
  if (is_p_regular(sess, lam)) {
    auto [lam0, x] = to_fundamental(sess, lam);
    AsphElement via_psi = psi(sess, lam0, res.character);
    AsphElement direct = jsf_direct(sess, x);
    AsphElement recursive = jsf_recursive(sess, x);
    res.asph = recursive;
    res.verdict = (via_psi == direct && direct == recursive) ? "AGREE" : "MISMATCH";
  }
  return res;
}

}  // namespace jantzen
