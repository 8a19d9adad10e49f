#include "jantzen/asph.hpp"

#include <cassert>
#include <stdexcept>

namespace jantzen {

void CharacterVector::add(const Weight& lam, Int c) {
  if (c == 0) return;
  if (!lam.is_dominant()) throw std::invalid_argument("CharacterVector keys must be dominant");
  auto [it, inserted] = terms_.try_emplace(lam.fw, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Int CharacterVector::coeff(const Weight& lam) const {
  auto it = terms_.find(lam.fw);
  return it == terms_.end() ? 0 : it->second;
}

void AsphElement::add(const Weight& key, Int c, const AffineElement& rep) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key.fw, Term{c, rep});
  if (!inserted) {
    it->second.coeff = checked_add(it->second.coeff, c);
    if (it->second.coeff == 0) terms_.erase(it);
  }
}

Int AsphElement::coeff_at(const Weight& key) const {
  auto it = terms_.find(key.fw);
  return it == terms_.end() ? 0 : it->second.coeff;
}

AsphElement& AsphElement::operator+=(const AsphElement& o) {
  for (const auto& [key, term] : o.terms_) add(Weight{key}, term.coeff, term.rep);
  return *this;
}

AsphElement AsphElement::operator*(Int c) const {
  AsphElement out;
  if (c == 0) return out;
  for (const auto& [key, term] : terms_)
    out.add(Weight{key}, checked_mul(term.coeff, c), term.rep);
  return out;
}

AsphElement n_of(const Session& sess, const AffineElement& y) {
  auto [w, x] = canonical_decompose(sess, y);
  AsphElement out;
  out.add(p_dot(sess, x, Weight::zero(sess.rank())), w.det(), x);
  return out;
}

Int n_star_pairing(const Session& sess, const AffineElement& y, const AsphElement& v) {
  auto [w, x] = canonical_decompose(sess, y);
  return checked_mul(w.det(), v.coeff_at(p_dot(sess, x, Weight::zero(sess.rank()))));
}

AsphElement act_generator(const Session& sess, const AsphElement& v, int gen_index) {
  AsphElement out;
  for (const auto& [key, term] : v.terms()) {
    AffineElement moved = term.rep * sess.generator(gen_index);
    auto [w, x] = canonical_decompose(sess, moved);
    out.add(p_dot(sess, x, Weight::zero(sess.rank())), checked_mul(term.coeff, w.det()), x);
  }
  return out;
}

bool in_fundamental_alcove(const Session& sess, const Weight& lam0) {
  const RootSystem& rs = sess.rs();
  const Weight shifted = lam0 + rs.rho();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    Int v = vec_dot(shifted.fw, rs.coroot_row(static_cast<int>(k)));
    if (v <= 0 || v >= sess.p()) return false;
  }
  return true;
}

AffineElement min_rep_from_weight(const Session& sess, const Weight& lam0, const Weight& key) {
  AffineElement x = alcove_of(sess, key);
  if (!(p_dot(sess, x, lam0) == key))
    throw std::invalid_argument("weight is not in the linkage class of the base weight");
  assert(is_min_rep(sess, x));
  return x;
}

AsphElement psi(const Session& sess, const Weight& lam0, const CharacterVector& chi) {
  if (!in_fundamental_alcove(sess, lam0))
    throw std::invalid_argument("psi: base weight is not interior to the fundamental alcove");
  AsphElement out;
  for (const auto& [mu, c] : chi.terms()) {
    AffineElement x = min_rep_from_weight(sess, lam0, Weight{mu});
    out.add(p_dot(sess, x, Weight::zero(sess.rank())), c, x);
  }
  return out;
}

CharacterVector psi_inv(const Session& sess, const Weight& lam0, const AsphElement& v) {
  if (!in_fundamental_alcove(sess, lam0))
    throw std::invalid_argument("psi_inv: base weight is not interior to the fundamental alcove");
  CharacterVector out;
  for (const auto& [key, term] : v.terms())
    out.add(p_dot(sess, term.rep, lam0), term.coeff);
  return out;
}

}  // namespace jantzen
