#include "jantzen/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jantzen {

namespace {

Int classical_positive_root_count(const CartanType& ct) {
  const Int n = ct.rank;
  switch (ct.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return ct.rank == 6 ? 36 : (ct.rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  throw std::logic_error("unreachable family");
}

// cartan(i, j) = <alpha_j, alpha_i^vee> together with the symmetrizer
// d_i = (alpha_i, alpha_i)/2 normalized so that short roots have d = 1.
void fill_cartan(const CartanType& ct, IntMat& cartan, std::vector<Int>& d) {
  const int n = ct.rank;
  cartan = IntMat(n);
  for (int i = 0; i < n; ++i) cartan.at(i, i) = 2;
  d.assign(n, 1);

  auto bond = [&](int i, int j) {  // single edge between nodes of equal length
    cartan.at(i, j) = -1;
    cartan.at(j, i) = -1;
  };

  switch (ct.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_0..alpha_{n-2} long, alpha_{n-1} short
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      cartan.at(n - 2, n - 1) = -1;
      cartan.at(n - 1, n - 2) = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':  // alpha_0..alpha_{n-2} short, alpha_{n-1} long
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      cartan.at(n - 2, n - 1) = -2;
      cartan.at(n - 1, n - 2) = -1;
      d[n - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 2);
      bond(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki numbering: chain 1-3-4-5-6(-7-8), branch node 2 attached to 4.
      bond(0, 2);
      bond(2, 3);
      bond(1, 3);
      for (int i = 3; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':  // alpha_0, alpha_1 long; alpha_2, alpha_3 short
      bond(0, 1);
      cartan.at(1, 2) = -1;
      cartan.at(2, 1) = -2;
      bond(2, 3);
      d[0] = d[1] = 2;
      break;
    case 'G':  // alpha_0 short, alpha_1 long
      cartan.at(0, 1) = -3;
      cartan.at(1, 0) = -1;
      d[1] = 3;
      break;
  }
}

Int root_height(const IntVec& sr) {
  Int h = 0;
  for (Int c : sr) h = checked_add(h, c);
  return h;
}

}  // namespace

CartanType CartanType::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("Cartan type must look like 'A2'");
  const char fam = s[0];
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("invalid rank in Cartan type '" + std::string(s) + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw std::invalid_argument("rank out of range");
  }
  CartanType ct{fam, rank};
  switch (fam) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw std::invalid_argument(std::string(1, fam) + " requires rank >= 2");
      break;
    case 'D':
      if (rank == 3)
        throw std::invalid_argument("D3 is isomorphic to A3; use A3 instead");
      if (rank < 4) throw std::invalid_argument("D requires rank >= 4");
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("E requires rank 6, 7 or 8");
      break;
    case 'F':
      if (rank != 4) throw std::invalid_argument("F requires rank 4");
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G requires rank 2");
      break;
    default:
      throw std::invalid_argument("unknown family '" + std::string(1, fam) + "'");
  }
  return ct;
}

std::string CartanType::name() const {
  return std::string(1, family) + std::to_string(rank);
}

Weight RootSystem::to_weight(const IntVec& simple_coords) const {
  return Weight{cartan_.apply(simple_coords)};
}

std::optional<std::pair<int, int>> RootSystem::signed_root_index(const Root& beta) const {
  auto it = root_lookup_.find(beta.sr);
  if (it != root_lookup_.end()) return std::make_pair(it->second, 1);
  it = root_lookup_.find(vec_scale(beta.sr, -1));
  if (it != root_lookup_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

Int RootSystem::pairing(const Weight& lam, const Root& beta) const {
  auto idx = signed_root_index(beta);
  if (!idx) throw std::invalid_argument("pairing: not a root");
  return checked_mul(idx->second, vec_dot(lam.fw, coroot_rows_[idx->first]));
}

Weight RootSystem::dot_apply(const FinWeylElement& w, const Weight& lam) const {
  return w(lam + rho()) - rho();
}

SignedDominant RootSystem::signed_dominant_conjugate(const Weight& lam) const {
  Weight mu = lam + rho();
  FinWeylElement w = identity_;
  int sign = 1;
  for (;;) {
    int desc = -1;
    for (int i = 0; i < rank_; ++i)
      if (mu.fw[i] < 0) {
        desc = i;
        break;
      }
    if (desc < 0) break;
    mu = simple_refl_[desc](mu);
    w = w * simple_refl_[desc];
    sign = -sign;
  }
  for (int i = 0; i < rank_; ++i)
    if (mu.fw[i] == 0) return SignedDominant{};
  return SignedDominant{mu - rho(), sign, w};
}

RootSystem build_root_system(const CartanType& ct) {
  // re-validate in case the caller built the struct by hand
  CartanType checked = CartanType::parse(ct.name());
  (void)checked;

  RootSystem rs;
  rs.type_ = ct;
  rs.rank_ = ct.rank;
  fill_cartan(ct, rs.cartan_, rs.symmetrizer_);
  const int n = rs.rank_;

  // Reflection closure from the simple roots: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
  std::set<IntVec> all;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec c = queue.front();
    queue.pop_front();
    IntVec wcoords = rs.cartan_.apply(c);
    for (int i = 0; i < n; ++i) {
      IntVec img = c;
      img[i] = checked_sub(img[i], wcoords[i]);
      if (all.insert(img).second) queue.push_back(img);
    }
  }

  std::vector<IntVec> positive;
  for (const IntVec& c : all) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
    if (nonneg && !vec_is_zero(c)) positive.push_back(c);
  }
  std::sort(positive.begin(), positive.end(), [](const IntVec& a, const IntVec& b) {
    Int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  if (static_cast<Int>(positive.size()) != classical_positive_root_count(ct))
    throw std::logic_error("positive root count does not match the classical value");

  for (std::size_t k = 0; k < positive.size(); ++k) {
    const IntVec& c = positive[k];
    rs.positive_roots_.push_back(Root{c});
    rs.root_lookup_[c] = static_cast<int>(k);
    rs.root_weights_.push_back(rs.to_weight(c));

    // (beta, beta) = sum_{ij} c_i c_j d_i cartan(i, j); half of it is d_beta.
    Int norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm2 = checked_add(norm2, checked_mul(checked_mul(c[i], c[j]),
                                               checked_mul(rs.symmetrizer_[i], rs.cartan_.at(i, j))));
    if (norm2 <= 0 || norm2 % 2 != 0) throw std::logic_error("bad root norm");
    const Int d_beta = norm2 / 2;
    rs.root_d_.push_back(d_beta);

    // beta^vee = sum_i (c_i d_i / d_beta) alpha_i^vee, always integral.
    IntVec row(n);
    for (int i = 0; i < n; ++i) {
      Int num = checked_mul(c[i], rs.symmetrizer_[i]);
      if (num % d_beta != 0) throw std::logic_error("non-integral coroot coordinate");
      row[i] = num / d_beta;
    }
    rs.coroot_rows_.push_back(std::move(row));
  }

  // Highest short root: the unique dominant root of minimal length.
  const Int d_min = *std::min_element(rs.root_d_.begin(), rs.root_d_.end());
  int found = -1;
  for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k) {
    if (rs.root_d_[k] != d_min) continue;
    if (!rs.root_weights_[k].is_dominant()) continue;
    if (found >= 0) throw std::logic_error("highest short root is not unique");
    found = static_cast<int>(k);
  }
  if (found < 0) throw std::logic_error("no dominant short root");
  rs.alpha_h_index_ = found;
  rs.coxeter_number_ = checked_add(vec_dot(rs.rho().fw, rs.coroot_rows_[found]), 1);

  rs.identity_ = FinWeylElement::identity(n);

  // s_beta as matrices: on weights, I - (beta in weight coords) x (coroot row);
  // on roots, I - (beta in root coords) x (<alpha_j, beta^vee>)_j.
  for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k) {
    const IntVec& beta_w = rs.root_weights_[k].fw;
    const IntVec& beta_r = rs.positive_roots_[k].sr;
    const IntVec& row = rs.coroot_rows_[k];
    IntMat wt(n), rt(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        wt.at(i, j) = checked_sub(i == j ? 1 : 0, checked_mul(beta_w[i], row[j]));
        Int q_j = 0;  // <alpha_j, beta^vee>
        for (int l = 0; l < n; ++l)
          q_j = checked_add(q_j, checked_mul(rs.cartan_.at(l, j), row[l]));
        rt.at(i, j) = checked_sub(i == j ? 1 : 0, checked_mul(beta_r[i], q_j));
      }
    FinWeylElement refl(wt, rt, wt, rt, -1);  // involution
    rs.reflection_lookup_[refl.weight_matrix()] = static_cast<int>(k);
    rs.root_refl_.push_back(std::move(refl));
  }
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rs.simple_refl_.push_back(rs.root_refl_[rs.root_lookup_.at(e)]);
  }

  return rs;
}

std::optional<int> RootSystem::reflection_root_index(const FinWeylElement& w) const {
  auto it = reflection_lookup_.find(w.weight_matrix());
  if (it == reflection_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<FinWeylElement> enumerate_wfin(const RootSystem& rs, int rank_cap) {
  if (rs.rank() > rank_cap)
    throw std::invalid_argument("enumerate_wfin: rank " + std::to_string(rs.rank()) +
                                " above cap " + std::to_string(rank_cap));
  std::vector<FinWeylElement> out;
  std::set<IntMat> seen;
  std::deque<FinWeylElement> queue;
  queue.push_back(rs.identity_element());
  seen.insert(rs.identity_element().weight_matrix());
  while (!queue.empty()) {
    FinWeylElement w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (int i = 0; i < rs.rank(); ++i) {
      FinWeylElement next = w * rs.simple_reflection(i);
      if (seen.insert(next.weight_matrix()).second) queue.push_back(next);
    }
  }
  return out;
}

}  // namespace jantzen
