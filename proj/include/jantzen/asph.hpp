#pragma once

#include <map>

#include "jantzen/affine.hpp"

namespace jantzen {

/// Finitely supported integer combination of Weyl characters chi_lambda,
/// keyed by dominant weights. Zero coefficients are never stored.
class CharacterVector {
 public:
  using TermMap = std::map<IntVec, Int>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Weight& lam, Int c);
  Int coeff(const Weight& lam) const;

  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;

 private:
  TermMap terms_;
};

/// Element of the anti-spherical module in the standard basis
/// {N_x : x in W_aff^+}. Basis vectors are keyed by the dominant weight
/// x . 0, which determines x uniquely; a representative group element is
/// carried alongside each coefficient so the right action stays cheap.
/// Equality and serialization only consult keys and coefficients.
class AsphElement {
 public:
  struct Term {
    Int coeff = 0;
    AffineElement rep;
  };
  using TermMap = std::map<IntVec, Term>;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Weight& key, Int c, const AffineElement& rep);
  Int coeff_at(const Weight& key) const;

  AsphElement& operator+=(const AsphElement& o);
  AsphElement operator*(Int c) const;

  friend bool operator==(const AsphElement& a, const AsphElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
    return true;
  }

 private:
  TermMap terms_;
};

/// N_y for arbitrary y: det(w) N_x under the factorization y = w x.
AsphElement n_of(const Session& sess, const AffineElement& y);

/// <N_y^*, v> for arbitrary y, normalizing non-minimal representatives
/// through the sign rule N_{wx}^* = det(w) N_x^*.
Int n_star_pairing(const Session& sess, const AffineElement& y, const AsphElement& v);

/// Right action of the generator with the given index, extended linearly:
/// N_x . s = N_{xs} re-normalized through the canonical factorization.
AsphElement act_generator(const Session& sess, const AsphElement& v, int gen_index);

/// Recovers the minimal representative x with x . lam0 = key by an alcove
/// walk. Throws when key is not in the linkage class of lam0.
AffineElement min_rep_from_weight(const Session& sess, const Weight& lam0, const Weight& key);

/// Basis-wise isomorphism chi_{x . lam0} -> N_x for lam0 interior to the
/// fundamental alcove. Throws when a key is outside the linkage class.
AsphElement psi(const Session& sess, const Weight& lam0, const CharacterVector& chi);

/// Inverse of psi: N_x -> chi_{x . lam0}.
CharacterVector psi_inv(const Session& sess, const Weight& lam0, const AsphElement& v);

/// Checks 0 < <lam0 + rho, alpha^vee> < p for every positive root.
bool in_fundamental_alcove(const Session& sess, const Weight& lam0);

}  // namespace jantzen
