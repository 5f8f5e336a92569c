#include "fusion.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lch {

FusionTable::FusionTable(const WeylGroup& w, const Subsystem& sub,
                         const Automorphism& delta)
    : w_(&w), sub_(&sub), delta_(delta), sub_group_(w, sub) {
  // require delta(Phi') = Phi'
  for (int k : sub.root_indices())
    if (!sub.contains(delta.apply_root(k)))
      throw std::invalid_argument("twist does not stabilize the subsystem");
  enumerate();
}

void FusionTable::enumerate() {
  const WeylGroup& w = *w_;
  const RootSystem& rs = w.root_system();

  // 1. minimal coset representatives of W(Phi')\W by BFS on the coset graph
  std::unordered_map<uint64_t, int> seen;  // hash of minrep -> index
  std::vector<WeylElt> minreps{w.identity()};
  seen[minreps[0].hash()] = 0;
  for (size_t head = 0; head < minreps.size(); ++head) {
    WeylElt c = minreps[head];
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElt n = sub_group_.min_coset_rep(w.mul(c, w.simple_reflection(i)));
      if (!seen.count(n.hash())) {
        seen[n.hash()] = static_cast<int>(minreps.size());
        minreps.push_back(std::move(n));
      }
    }
  }

  // 2. keep representatives whose coset consists of Xi-pairs: d(Phi') = Phi'
  std::vector<WeylElt> stab;
  for (const auto& d : minreps) {
    bool ok = true;
    for (int k : sub_->simple_system())
      if (!sub_->contains(d.apply(k))) {
        ok = false;
        break;
      }
    if (ok) stab.push_back(d);
  }
  orbit_minreps_ = stab;

  // 3. orbits of the twisted action c -> minrep(x c sigma(x)^{-1}) for x
  //    drawn from a generating set of N = W(Phi') . stabilizing minreps
  std::unordered_map<uint64_t, int> rep_index;
  for (size_t i = 0; i < stab.size(); ++i) rep_index[stab[i].hash()] = static_cast<int>(i);
  std::vector<WeylElt> action_gens = sub_group_.generators();
  for (const auto& d : stab) action_gens.push_back(d);

  orbit_of_.assign(stab.size(), -1);
  int norbit = 0;
  for (size_t i0 = 0; i0 < stab.size(); ++i0) {
    if (orbit_of_[i0] >= 0) continue;
    int id = norbit++;
    std::vector<int> frontier{static_cast<int>(i0)};
    orbit_of_[i0] = id;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int ci : frontier)
        for (const auto& x : action_gens) {
          WeylElt y = sub_group_.min_coset_rep(
              w.mul(w.mul(x, stab[ci]), w.inverse(delta_.apply(x))));
          auto it = rep_index.find(y.hash());
          if (it == rep_index.end()) throw std::logic_error("fusion orbit left Xi");
          if (orbit_of_[it->second] < 0) {
            orbit_of_[it->second] = id;
            next.push_back(it->second);
          }
        }
      frontier = std::move(next);
    }
  }

  // 4. build XiClass data per orbit
  std::vector<int> best(norbit, -1);
  std::vector<std::vector<int>> best_word(norbit);
  for (size_t i = 0; i < stab.size(); ++i) {
    int o = orbit_of_[i];
    std::vector<int> word = w.reduced_word(stab[i]);
    if (best[o] < 0 || word.size() < best_word[o].size() ||
        (word.size() == best_word[o].size() && word < best_word[o])) {
      best[o] = static_cast<int>(i);
      best_word[o] = std::move(word);
    }
  }
  for (int o = 0; o < norbit; ++o) {
    XiClass xc;
    xc.d = stab[best[o]];
    xc.d_word = best_word[o];
    xc.sigma_prime = delta_.compose_perm_left(xc.d);
    xc.diagram_perm = diagram_permutation(*sub_, xc.sigma_prime);
    auto cls = classify_twisted(w, sub_group_.elements(), sub_group_.generators(),
                                xc.sigma_prime);
    xc.sub_classes = cls.classes;
    for (const auto& c : cls.classes) {
      auto cent = sigma_centralizer(w, sub_group_.elements(), xc.sigma_prime, c.rep);
      if (cent.size() * c.size != sub_group_.order())
        throw std::logic_error("orbit-stabilizer mismatch in subgroup");
      xc.sub_centralizers.push_back(cent.size());
    }
    xi_.push_back(std::move(xc));
  }
  // deterministic order: by d length then word
  std::vector<int> perm(norbit);
  for (int i = 0; i < norbit; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (xi_[a].d_word.size() != xi_[b].d_word.size())
      return xi_[a].d_word.size() < xi_[b].d_word.size();
    return xi_[a].d_word < xi_[b].d_word;
  });
  std::vector<XiClass> sorted;
  std::vector<int> inv(norbit);
  for (int i = 0; i < norbit; ++i) {
    sorted.push_back(std::move(xi_[perm[i]]));
    inv[perm[i]] = i;
  }
  xi_ = std::move(sorted);
  for (auto& o : orbit_of_) o = inv[o];
}

int FusionTable::xi_class_of(const WeylElt& w) const {
  // reduce to the minimal coset rep and locate its orbit
  WeylElt d = sub_group_.min_coset_rep(w);
  for (size_t i = 0; i < orbit_minreps_.size(); ++i)
    if (orbit_minreps_[i] == d) return orbit_of_[i];
  return -1;
}

int FusionTable::fuse(const WClassIdentifier& ident, int xi_index,
                      int sub_class_index) const {
  const XiClass& xc = xi_[xi_index];
  WeylElt wd = w_->mul(xc.sub_classes[sub_class_index].rep, xc.d);
  return ident.identify(wd);
}

std::vector<int> FusionTable::fibers_over(const WClassIdentifier& ident, int xi_index,
                                          int ambient_class) const {
  std::vector<int> out;
  const XiClass& xc = xi_[xi_index];
  for (size_t i = 0; i < xc.sub_classes.size(); ++i)
    if (fuse(ident, xi_index, static_cast<int>(i)) == ambient_class)
      out.push_back(static_cast<int>(i));
  return out;
}

std::optional<TorusElt> FusionTable::xi_circle_witness(int xi_index, long q) const {
  const RootSystem& rs = w_->root_system();
  const XiClass& xc = xi_[xi_index];
  int r = rs.rank();
  const auto& simples = sub_->simple_system();
  int m = static_cast<int>(simples.size());
  // rows: alpha(t) = 0 for alpha in Delta'; then q P - M_{d^{-1}}
  IMat k(m + r, r);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < r; ++j)
      k.at(i, j) = rs.pairing_with_simple_coroot(simples[i], j);
  IMat p(r, r);
  for (int i = 0; i < r; ++i) {
    int img = delta_.apply_root(i);
    const RootVec& cv = rs.coroot(img);
    for (int j = 0; j < r; ++j) p.at(j, i) = cv[j];
  }
  IMat mm = w_->matrix_on_coroots(w_->inverse(xc.d));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) k.at(m + i, j) = q * p.at(i, j) - mm.at(i, j);
  TorusSubgroup sol = TorusSubgroup::kernel(rs, k);
  if (!sol.is_finite()) throw std::logic_error("unexpected free part in Xi-circle solve");
  for (const auto& t : sol.elements()) {
    // exactness: the vanishing set must be exactly Phi'
    bool exact = true;
    for (int kk = 0; kk < rs.num_roots() && exact; ++kk) {
      bool vanish = root_value(rs, kk, t) == 0;
      if (vanish != sub_->contains(kk)) exact = false;
    }
    if (exact) return t;
  }
  return std::nullopt;
}

}  // namespace lch
