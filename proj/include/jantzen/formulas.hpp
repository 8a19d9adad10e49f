#pragma once

#include <functional>
#include <optional>
#include <string>

#include "jantzen/asph.hpp"

namespace jantzen {

/// p-adic valuation of a nonzero integer (sign ignored).
Int nu_p(Int p, Int m);

/// Valuation hook; the verification sweeps accept a corrupted one as a
/// negative control.
using NuFn = std::function<Int(Int, Int)>;

/// Jantzen sum formula as a character vector, from the literal double sum
///   - sum_{alpha > 0} sum_{0 < m < <lam + rho, alpha^vee>} nu_p(m) chi_{lam - m alpha},
/// chi-normalizing every term and dropping wall hits.
CharacterVector jsf_classical(const Session& sess, const Weight& lam);
CharacterVector jsf_classical_with(const Session& sess, const Weight& lam, const NuFn& nu);

/// JSF_x = sum over s in R_L(x) of nu_p(m(s) p) N_{sx}, for x in W_aff^+.
AsphElement jsf_direct(const Session& sess, const AffineElement& x);

/// JSF via the recursion JSF_{xs} = nu_p(m(xsx^{-1}) p) N_x + JSF_x . s,
/// walking the given reduced word left to right. Every prefix must stay in
/// W_aff^+ with strictly increasing length.
AsphElement jsf_from_word(const Session& sess, std::span<const int> word);
AsphElement jsf_recursive(const Session& sess, const AffineElement& x);

/// <ASF_x, N_y> by direct enumeration: the unique finite w (if any) with
/// w y x^{-1} an affine reflection outside W_fin that lengthens x
/// contributes det(w) nu_p(m p).
Int asf_pair_regular(const Session& sess, const AffineElement& x, const AffineElement& y);

/// <ASF_lambda, chi_mu> for arbitrary dominant lambda, mu (p-regularity not
/// required): the Andersen sum formula specialized to ch T = chi_mu.
Int asf_pair_singular(const Session& sess, const Weight& lam, const Weight& mu);

struct BoundStep {
  std::vector<int> prefix;  // word of the element whose bound is `running`
  Int contribution = 0;     // nu_p(m p) for the wall crossed by the last letter
  Int running = 0;          // 2 * previous + contribution
};

/// Upper bounds on the length of the Jantzen filtration of a Weyl module
/// with highest weight in the alcove of x.
struct BoundReport {
  Int length_bound_sum = 0;  // sum of nu_p(m(s) p) over R_L(x)
  Int length_bound_exp = 0;  // 2^l(x) - 1
  std::vector<BoundStep> per_step;
};

BoundReport bounds(const Session& sess, const AffineElement& x);

/// One step of the doubling bound with an externally known starting value.
Int chained_bound(Int previous, Int contribution);

/// Everything the `jsf` command reports for one weight.
struct JsfResult {
  IntVec lambda;
  Int p = 0;
  std::string method;               // classical | direct | recursive
  CharacterVector character;
  std::optional<AsphElement> asph;  // engaged iff lambda is p-regular
  std::optional<std::string> verdict;
};

bool is_p_regular(const Session& sess, const Weight& lam);

/// Decomposes a p-regular dominant weight as x . lam0 with lam0 interior to
/// the fundamental alcove and x in W_aff^+.
std::pair<Weight, AffineElement> to_fundamental(const Session& sess, const Weight& lam);

/// Classical JSF, plus the three-way anti-spherical comparison when lam is
/// p-regular (verdict AGREE/MISMATCH).
JsfResult compute_jsf(const Session& sess, const Weight& lam);

}  // namespace jantzen
