#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jantzen/intmat.hpp"

namespace jantzen {

struct CartanType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  /// Parses names like "A2", "C2", "G2", "E8". Throws std::invalid_argument
  /// on unknown families or ranks outside the classical bounds (D3 is
  /// rejected with a pointer to A3).
  static CartanType parse(std::string_view s);

  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Weight in fundamental-weight coordinates: fw[i] = <lambda, alpha_i^vee>.
struct Weight {
  IntVec fw;

  static Weight zero(int rank) { return Weight{IntVec(rank, 0)}; }
  bool is_dominant() const {
    for (Int c : fw)
      if (c < 0) return false;
    return true;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight operator+(const Weight& a, const Weight& b) { return Weight{vec_add(a.fw, b.fw)}; }
inline Weight operator-(const Weight& a, const Weight& b) { return Weight{vec_sub(a.fw, b.fw)}; }
inline Weight operator*(Int c, const Weight& a) { return Weight{vec_scale(a.fw, c)}; }

/// Root in simple-root coordinates.
struct Root {
  IntVec sr;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

inline Root operator-(const Root& a) { return Root{vec_scale(a.sr, -1)}; }

/// Element of the finite Weyl group, stored as its linear action on both
/// coordinate systems together with the inverse matrices and determinant.
class FinWeylElement {
 public:
  FinWeylElement() = default;
  FinWeylElement(IntMat wt, IntMat rt, IntMat wt_inv, IntMat rt_inv, int det)
      : wt_(std::move(wt)), rt_(std::move(rt)), wt_inv_(std::move(wt_inv)),
        rt_inv_(std::move(rt_inv)), det_(det) {}

  static FinWeylElement identity(int rank) {
    IntMat id = IntMat::identity(rank);
    return FinWeylElement(id, id, id, id, 1);
  }

  bool is_identity() const { return wt_ == IntMat::identity(wt_.dim()); }
  int det() const { return det_; }
  const IntMat& weight_matrix() const { return wt_; }
  const IntMat& root_matrix() const { return rt_; }

  FinWeylElement operator*(const FinWeylElement& o) const {
    return FinWeylElement(wt_ * o.wt_, rt_ * o.rt_, o.wt_inv_ * wt_inv_,
                          o.rt_inv_ * rt_inv_, det_ * o.det_);
  }

  FinWeylElement inverse() const {
    return FinWeylElement(wt_inv_, rt_inv_, wt_, rt_, det_);
  }

  /// Ordinary linear action (not the dot action).
  Weight operator()(const Weight& lam) const { return Weight{wt_.apply(lam.fw)}; }
  Root operator()(const Root& beta) const { return Root{rt_.apply(beta.sr)}; }
  IntVec apply_root_coords(const IntVec& v) const { return rt_.apply(v); }

  friend bool operator==(const FinWeylElement& a, const FinWeylElement& b) {
    return a.wt_ == b.wt_;
  }
  friend auto operator<=>(const FinWeylElement& a, const FinWeylElement& b) {
    return a.wt_ <=> b.wt_;
  }

 private:
  IntMat wt_;      // action on fundamental-weight coordinates
  IntMat rt_;      // action on simple-root coordinates
  IntMat wt_inv_;
  IntMat rt_inv_;
  int det_ = 1;
};

/// Result of conjugating a weight into the dominant chamber under the dot
/// action. `dominant` is disengaged when the orbit meets a reflection wall,
/// in which case the associated chi-normalized character is zero.
struct SignedDominant {
  std::optional<Weight> dominant;
  int sign = 0;                           // det(witness); 0 in the wall case
  std::optional<FinWeylElement> witness;  // input = witness . dominant

  bool is_zero() const { return !dominant.has_value(); }
};

/// Immutable Cartan datum: roots, coroots, the pairing, rho, the highest
/// short root and the finite Weyl group generators. Safe to share freely.
class RootSystem {
 public:
  RootSystem() = default;  // empty; assign from build_root_system

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return rank_; }

  /// cartan(i, j) = <alpha_j, alpha_i^vee>.
  const IntMat& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  /// d_i = (alpha_i, alpha_i)/2 for the invariant inner product normalized
  /// so that short roots have squared length 2. Coroots only depend on the
  /// ratios, so any positive rescaling would give the same pairings.
  const std::vector<Int>& symmetrizer() const { return symmetrizer_; }

  const Root& alpha_h() const { return positive_roots_[alpha_h_index_]; }
  int alpha_h_index() const { return alpha_h_index_; }
  Int coxeter_number() const { return coxeter_number_; }
  Weight rho() const { return Weight{IntVec(rank_, 1)}; }

  /// Coordinates of beta^vee in the simple-coroot basis, for the k-th
  /// positive root; pairing against a weight is a dot product with this row.
  const IntVec& coroot_row(int k) const { return coroot_rows_[k]; }

  /// Half squared length (1 for short roots, 2 or 3 for long ones).
  Int root_length2_half(int k) const { return root_d_[k]; }

  /// Converts simple-root coordinates to fundamental-weight coordinates.
  Weight to_weight(const IntVec& simple_coords) const;
  Weight to_weight(const Root& beta) const { return to_weight(beta.sr); }

  /// Index into positive_roots() for beta or -beta; sign = +-1 accordingly.
  /// Returns nullopt when the vector is not a root.
  std::optional<std::pair<int, int>> signed_root_index(const Root& beta) const;

  /// <lam, beta^vee> for beta in Phi (either sign). Throws when beta is not
  /// a root.
  Int pairing(const Weight& lam, const Root& beta) const;

  /// w . lam = w(lam + rho) - rho.
  Weight dot_apply(const FinWeylElement& w, const Weight& lam) const;

  /// Deterministic lowest-index simple-reflection descent; see SignedDominant.
  SignedDominant signed_dominant_conjugate(const Weight& lam) const;

  const FinWeylElement& identity_element() const { return identity_; }
  const FinWeylElement& simple_reflection(int i) const { return simple_refl_[i]; }

  /// s_beta for the k-th positive root.
  const FinWeylElement& root_reflection(int k) const { return root_refl_[k]; }

  /// Recognizes w as s_beta for a positive root beta; index into
  /// positive_roots(), or nullopt when w is not a reflection.
  std::optional<int> reflection_root_index(const FinWeylElement& w) const;

  friend RootSystem build_root_system(const CartanType& ct);

 private:
  CartanType type_;
  int rank_ = 0;
  IntMat cartan_;
  std::vector<Int> symmetrizer_;
  std::vector<Root> positive_roots_;
  std::vector<IntVec> coroot_rows_;
  std::vector<Int> root_d_;
  std::vector<Weight> root_weights_;   // positive roots in weight coordinates
  int alpha_h_index_ = -1;
  Int coxeter_number_ = 0;
  FinWeylElement identity_;
  std::vector<FinWeylElement> simple_refl_;
  std::vector<FinWeylElement> root_refl_;
  std::map<IntVec, int> root_lookup_;       // simple coords -> index (positive roots)
  std::map<IntMat, int> reflection_lookup_; // weight matrix -> root index
};

/// Builds the full Cartan datum for a valid type. Positive roots are
/// generated by reflection closure from the simple roots and checked against
/// the classical counts.
RootSystem build_root_system(const CartanType& ct);

/// Every element of the finite Weyl group, identity first, in breadth-first
/// order over the simple generators. Guarded by a rank cap (default 4,
/// |W(F4)| = 1152) since callers only need this at desk scale.
std::vector<FinWeylElement> enumerate_wfin(const RootSystem& rs, int rank_cap = 4);

}  // namespace jantzen
