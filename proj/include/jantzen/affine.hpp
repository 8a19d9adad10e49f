#pragma once

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "jantzen/root_system.hpp"

namespace jantzen {

/// Element t_gamma . w of the affine Weyl group Z Phi x| W_fin.
/// Multiplication: (t_g w)(t_d v) = t_{g + w(d)} (w v).
struct AffineElement {
  IntVec translation;   // gamma in simple-root coordinates
  FinWeylElement finite;

  AffineElement() = default;
  AffineElement(IntVec tr, FinWeylElement fin)
      : translation(std::move(tr)), finite(std::move(fin)) {}

  static AffineElement identity(int rank) {
    return AffineElement(IntVec(rank, 0), FinWeylElement::identity(rank));
  }

  AffineElement operator*(const AffineElement& o) const {
    return AffineElement(vec_add(translation, finite.apply_root_coords(o.translation)),
                         finite * o.finite);
  }

  AffineElement inverse() const {
    FinWeylElement winv = finite.inverse();
    return AffineElement(vec_scale(winv.apply_root_coords(translation), -1), winv);
  }

  bool is_identity() const { return vec_is_zero(translation) && finite.is_identity(); }

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.translation == b.translation && a.finite == b.finite;
  }
};

/// Affine reflection s_{beta,m} = t_{m beta} s_beta, stored with beta
/// positive (s_{-beta,-m} is the same reflection and gets re-expressed).
struct Reflection {
  Root beta;
  Int m = 0;

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

/// A root system together with a prime p >= h. Pins the p-dilated dot
/// action, the alcove geometry and the affine generators
/// S = {s_{alpha_h,1}} u {s_alpha : alpha simple} (index 0 is s_{alpha_h,1}).
/// Immutable after construction.
class Session {
 public:
  static Session create(const CartanType& ct, Int p, int wfin_cap = 4);

  const RootSystem& rs() const { return rs_; }
  Int p() const { return p_; }
  int rank() const { return rs_.rank(); }
  int generator_count() const { return rs_.rank() + 1; }

  const std::vector<Reflection>& simple_generators() const { return gen_refl_; }
  const AffineElement& generator(int i) const { return gen_elem_[i]; }
  const AffineElement& identity() const { return identity_; }

  /// The full finite Weyl group; only available when the rank is within the
  /// enumeration cap given at creation.
  const std::vector<FinWeylElement>& wfin() const;
  bool wfin_available() const { return wfin_available_; }

 private:
  Session() = default;
  RootSystem rs_;
  Int p_ = 0;
  std::vector<Reflection> gen_refl_;
  std::vector<AffineElement> gen_elem_;
  AffineElement identity_;
  std::vector<FinWeylElement> wfin_;
  bool wfin_available_ = false;
};

/// t_gamma w . x = w(x + rho) + p gamma - rho.
Weight p_dot(const Session& sess, const AffineElement& x, const Weight& lam);

/// Coxeter length, computed as the number of reflection hyperplanes
/// separating the fundamental alcove from x applied to it.
Int length(const Session& sess, const AffineElement& x);

/// Membership in W_aff^+ (minimal coset representatives): x . 0 dominant.
bool is_min_rep(const Session& sess, const AffineElement& x);

/// Unique factorization y = w x with w finite and x in W_aff^+.
std::pair<FinWeylElement, AffineElement> canonical_decompose(const Session& sess,
                                                             const AffineElement& y);

enum class DescentRule { lowest_index, highest_index };

/// Deterministic reduced word (generator indices, 0 = s_{alpha_h,1}),
/// stripping letters from the right by descent.
std::vector<int> reduced_word(const Session& sess, const AffineElement& x,
                              DescentRule rule = DescentRule::lowest_index);

AffineElement element_from_word(const Session& sess, std::span<const int> word);

/// Embeds a finite element as an affine one (zero translation).
AffineElement embed(const Session& sess, const FinWeylElement& w);

AffineElement reflection_element(const Session& sess, const Reflection& r);

/// Recognizes t as an affine reflection (canonical positive form), or
/// nullopt when it is not one.
std::optional<Reflection> as_reflection(const Session& sess, const AffineElement& t);

/// Throwing form of as_reflection.
Reflection reflection_from_element(const Session& sess, const AffineElement& t);

/// R_L(x) = {reflections t : tx < x}, from a reduced word via the prefix
/// conjugates s_1...s_i...s_1.
std::set<Reflection> rl_via_word(const Session& sess, const AffineElement& x);

/// R_L(x) computed independently as the set of hyperplanes separating the
/// fundamental alcove from x applied to it.
std::set<Reflection> rl_via_hyperplanes(const Session& sess, const AffineElement& x);

/// Walks from the fundamental alcove to the alcove containing `target`,
/// crossing one separating wall per step. Throws when the target lies on a
/// reflection hyperplane.
AffineElement alcove_of(const Session& sess, const Weight& target);

/// Breadth-first enumeration of W_aff up to the given length, paired with
/// lengths, deduplicated by (x . 0, finite matrix).
std::vector<std::pair<AffineElement, int>> enumerate_waff(const Session& sess, int max_length);

}  // namespace jantzen
