#include "jantzen/affine.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace jantzen {

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int pairing_with_row(const Weight& lam_plus_rho, const IntVec& coroot_row) {
  return vec_dot(lam_plus_rho.fw, coroot_row);
}

}  // namespace

Session Session::create(const CartanType& ct, Int p, int wfin_cap) {
  Session sess;
  sess.rs_ = build_root_system(ct);
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p < sess.rs_.coxeter_number())
    throw std::invalid_argument("p = " + std::to_string(p) + " is below the Coxeter number " +
                                std::to_string(sess.rs_.coxeter_number()));
  sess.p_ = p;
  const int n = sess.rs_.rank();
  sess.identity_ = AffineElement::identity(n);

  sess.gen_refl_.push_back(Reflection{sess.rs_.alpha_h(), 1});
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    sess.gen_refl_.push_back(Reflection{Root{e}, 0});
  }
  for (const Reflection& r : sess.gen_refl_) {
    auto idx = sess.rs_.signed_root_index(r.beta);
    sess.gen_elem_.push_back(
        AffineElement(vec_scale(r.beta.sr, r.m), sess.rs_.root_reflection(idx->first)));
  }
  if (n <= wfin_cap) {
    sess.wfin_ = enumerate_wfin(sess.rs_, wfin_cap);
    sess.wfin_available_ = true;
  }
  return sess;
}

const std::vector<FinWeylElement>& Session::wfin() const {
  if (!wfin_available_)
    throw std::invalid_argument("finite Weyl group enumeration unavailable: rank above cap");
  return wfin_;
}

Weight p_dot(const Session& sess, const AffineElement& x, const Weight& lam) {
  Weight moved = x.finite(lam + sess.rs().rho());
  Weight shift = sess.rs().to_weight(x.translation);
  return moved + Int(sess.p()) * shift - sess.rs().rho();
}

Int length(const Session& sess, const AffineElement& x) {
  const RootSystem& rs = sess.rs();
  const Weight base = sess.rs().rho();                       // 0 + rho
  const Weight moved = p_dot(sess, x, Weight::zero(rs.rank())) + rs.rho();
  Int total = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const IntVec& row = rs.coroot_row(static_cast<int>(k));
    Int a = pairing_with_row(base, row);
    Int b = pairing_with_row(moved, row);
    if (b % sess.p() == 0) throw std::logic_error("alcove point on a wall");
    Int lo = std::min(a, b), hi = std::max(a, b);
    total += floor_div(hi - 1, sess.p()) - floor_div(lo, sess.p());
  }
  return total;
}

bool is_min_rep(const Session& sess, const AffineElement& x) {
  return p_dot(sess, x, Weight::zero(sess.rank())).is_dominant();
}

std::pair<FinWeylElement, AffineElement> canonical_decompose(const Session& sess,
                                                             const AffineElement& y) {
  Weight mu = p_dot(sess, y, Weight::zero(sess.rank()));
  SignedDominant sdc = sess.rs().signed_dominant_conjugate(mu);
  if (sdc.is_zero())
    throw std::logic_error("canonical_decompose: orbit of a p-regular point met a wall");
  AffineElement x = embed(sess, sdc.witness->inverse()) * y;
  assert(p_dot(sess, x, Weight::zero(sess.rank())) == *sdc.dominant);
  return {*sdc.witness, x};
}

std::vector<int> reduced_word(const Session& sess, const AffineElement& x, DescentRule rule) {
  std::vector<int> word;
  AffineElement cur = x;
  Int len = length(sess, cur);
  while (len > 0) {
    int chosen = -1;
    AffineElement next;
    const int gens = sess.generator_count();
    for (int step = 0; step < gens; ++step) {
      int i = (rule == DescentRule::lowest_index) ? step : gens - 1 - step;
      AffineElement cand = cur * sess.generator(i);
      if (length(sess, cand) < len) {
        chosen = i;
        next = cand;
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("non-identity element without right descent");
    word.push_back(chosen);
    cur = next;
    --len;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

AffineElement element_from_word(const Session& sess, std::span<const int> word) {
  AffineElement x = sess.identity();
  for (int i : word) {
    if (i < 0 || i >= sess.generator_count())
      throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
    x = x * sess.generator(i);
  }
  return x;
}

AffineElement embed(const Session& sess, const FinWeylElement& w) {
  return AffineElement(IntVec(sess.rank(), 0), w);
}

AffineElement reflection_element(const Session& sess, const Reflection& r) {
  auto idx = sess.rs().signed_root_index(r.beta);
  if (!idx || idx->second != 1)
    throw std::invalid_argument("reflection_element: beta is not a positive root");
  return AffineElement(vec_scale(r.beta.sr, r.m), sess.rs().root_reflection(idx->first));
}

std::optional<Reflection> as_reflection(const Session& sess, const AffineElement& t) {
  auto k = sess.rs().reflection_root_index(t.finite);
  if (!k) return std::nullopt;
  const Root& beta = sess.rs().positive_roots()[*k];
  // translation must be an integer multiple of beta
  int j0 = -1;
  for (std::size_t j = 0; j < beta.sr.size(); ++j)
    if (beta.sr[j] != 0) {
      j0 = static_cast<int>(j);
      break;
    }
  if (t.translation[j0] % beta.sr[j0] != 0) return std::nullopt;
  Int m = t.translation[j0] / beta.sr[j0];
  if (t.translation != vec_scale(beta.sr, m)) return std::nullopt;
  return Reflection{beta, m};
}

Reflection reflection_from_element(const Session& sess, const AffineElement& t) {
  auto r = as_reflection(sess, t);
  if (!r) throw std::invalid_argument("element is not an affine reflection");
  return *r;
}

std::set<Reflection> rl_via_word(const Session& sess, const AffineElement& x) {
  std::vector<int> word = reduced_word(sess, x);
  std::set<Reflection> out;
  AffineElement prefix = sess.identity();
  for (int idx : word) {
    AffineElement next = prefix * sess.generator(idx);
    AffineElement conj = next * prefix.inverse();
    auto r = as_reflection(sess, conj);
    if (!r) throw std::logic_error("prefix conjugate is not a reflection");
    out.insert(*r);
    prefix = next;
  }
  if (out.size() != word.size())
    throw std::logic_error("|R_L(x)| disagrees with the word length");
  return out;
}

std::set<Reflection> rl_via_hyperplanes(const Session& sess, const AffineElement& x) {
  const RootSystem& rs = sess.rs();
  const Weight base = rs.rho();
  const Weight moved = p_dot(sess, x, Weight::zero(rs.rank())) + rs.rho();
  std::set<Reflection> out;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const IntVec& row = rs.coroot_row(static_cast<int>(k));
    Int a = pairing_with_row(base, row);
    Int b = pairing_with_row(moved, row);
    Int lo = std::min(a, b), hi = std::max(a, b);
    for (Int m = floor_div(lo, sess.p()) + 1; checked_mul(m, sess.p()) < hi; ++m)
      out.insert(Reflection{rs.positive_roots()[k], m});
  }
  return out;
}

AffineElement alcove_of(const Session& sess, const Weight& target) {
  const RootSystem& rs = sess.rs();
  const Weight target_rho = target + rs.rho();

  // Crossing a separating wall reduces the number of separating hyperplanes
  // by exactly one, which bounds the walk length.
  Int budget = 1;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    Int t = pairing_with_row(target_rho, rs.coroot_row(static_cast<int>(k)));
    budget += (std::abs(t) + rs.coxeter_number()) / sess.p() + 2;
  }

  AffineElement x = sess.identity();
  Weight point_rho = rs.rho();  // x . 0 + rho
  for (Int step = 0; step <= budget; ++step) {
    int cross = -1;
    for (int i = 0; i < sess.generator_count(); ++i) {
      AffineElement conj = x * sess.generator(i) * x.inverse();
      Reflection wall = reflection_from_element(sess, conj);
      auto idx = rs.signed_root_index(wall.beta);
      const IntVec& row = rs.coroot_row(idx->first);
      Int offset = checked_mul(wall.m, sess.p());
      Int here = pairing_with_row(point_rho, row) - offset;
      Int there = pairing_with_row(target_rho, row) - offset;
      if (there == 0)
        throw std::invalid_argument("weight lies on a reflection hyperplane");
      if ((here > 0) != (there > 0)) {
        cross = i;
        break;
      }
    }
    if (cross < 0) return x;  // same alcove as the target
    x = x * sess.generator(cross);
    point_rho = p_dot(sess, x, Weight::zero(rs.rank())) + rs.rho();
  }
  throw std::logic_error("alcove walk failed to terminate");
}

std::vector<std::pair<AffineElement, int>> enumerate_waff(const Session& sess, int max_length) {
  std::vector<std::pair<AffineElement, int>> out;
  std::set<std::pair<IntVec, IntMat>> seen;
  std::deque<std::pair<AffineElement, int>> queue;
  auto key = [&](const AffineElement& x) {
    return std::make_pair(p_dot(sess, x, Weight::zero(sess.rank())).fw,
                          x.finite.weight_matrix());
  };
  queue.push_back({sess.identity(), 0});
  seen.insert(key(sess.identity()));
  while (!queue.empty()) {
    auto [x, len] = queue.front();
    queue.pop_front();
    out.push_back({x, len});
    if (len == max_length) continue;
    for (int i = 0; i < sess.generator_count(); ++i) {
      AffineElement next = x * sess.generator(i);
      if (seen.insert(key(next)).second) queue.push_back({next, len + 1});
    }
  }
  return out;
}

}  // namespace jantzen
