#include "grigq/perm.hpp"

#include <algorithm>
#include <stdexcept>

#include "grigq/tree.hpp"
#include "grigq/word.hpp"

namespace grigq {

Perm::Perm(size_t degree) {
  img.resize(degree);
  for (size_t i = 0; i < degree; ++i) img[i] = static_cast<uint32_t>(i);
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("perm degree mismatch");
  Perm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[rhs.img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<uint32_t>(i);
  return r;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img[i]);
  }
  return s + "]";
}

namespace {

uint32_t min_moved_point(const Perm &p) {
  for (uint32_t i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  throw std::logic_error("identity has no moved point");
}

}  // namespace

PermGroup::PermGroup(std::vector<Perm> generators, std::vector<uint32_t> base_prefix)
    : degree_(0), input_gens_(std::move(generators)) {
  if (input_gens_.empty()) throw std::invalid_argument("PermGroup needs >= 1 generator");
  degree_ = input_gens_[0].degree();
  for (const Perm &g : input_gens_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");

  for (uint32_t b : base_prefix) {
    levels_.push_back({});
    levels_.back().beta = b;
  }
  // every nontrivial generator must move some base point
  for (const Perm &g : input_gens_) {
    if (g.is_identity()) continue;
    bool moves = false;
    for (const Level &lv : levels_)
      if (g[lv.beta] != lv.beta) {
        moves = true;
        break;
      }
    if (!moves) {
      levels_.push_back({});
      levels_.back().beta = min_moved_point(g);
    }
  }
  // S_i = generators fixing base points before level i
  for (size_t i = 0; i < levels_.size(); ++i) {
    for (const Perm &g : input_gens_) {
      if (g.is_identity()) continue;
      bool fixes = true;
      for (size_t j = 0; j < i; ++j)
        if (g[levels_[j].beta] != levels_[j].beta) {
          fixes = false;
          break;
        }
      if (fixes) levels_[i].gens.push_back(g);
    }
  }
  for (size_t i = levels_.size(); i-- > 0;) schreier_sims(i);
  recompute_order();
}

void PermGroup::recompute_orbit(Level &lv) {
  lv.orbit.clear();
  lv.orbit_pos.assign(degree_, 0);
  lv.transversal.clear();
  lv.transversal_inv.clear();
  lv.orbit.push_back(lv.beta);
  lv.orbit_pos[lv.beta] = 1;
  lv.transversal.push_back(Perm(degree_));
  lv.transversal_inv.push_back(Perm(degree_));
  for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
    uint32_t pt = lv.orbit[idx];
    for (const Perm &x : lv.gens) {
      uint32_t np = x[pt];
      if (!lv.orbit_pos[np]) {
        lv.orbit_pos[np] = static_cast<int32_t>(lv.orbit.size()) + 1;
        lv.orbit.push_back(np);
        Perm u = x * lv.transversal[idx];
        lv.transversal_inv.push_back(u.inverse());
        lv.transversal.push_back(std::move(u));
      }
    }
  }
}

Perm PermGroup::strip(Perm p, size_t from, size_t *stop) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level &lv = levels_[i];
    uint32_t gamma = p[lv.beta];
    if (gamma == lv.beta) continue;
    int32_t pos = lv.orbit_pos.empty() ? 0 : lv.orbit_pos[gamma];
    if (!pos) {
      if (stop) *stop = i;
      return p;
    }
    p = lv.transversal_inv[pos - 1] * p;
  }
  if (stop) *stop = levels_.size();
  return p;
}

void PermGroup::schreier_sims(size_t i) {
  Level &lv = levels_[i];
  recompute_orbit(lv);
  for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
    for (size_t xi = 0; xi < lv.gens.size(); ++xi) {
      const Perm &x = lv.gens[xi];
      uint32_t pt = lv.orbit[idx];
      int32_t tpos = lv.orbit_pos[x[pt]];
      Perm g = lv.transversal_inv[tpos - 1] * (x * lv.transversal[idx]);
      if (g.is_identity()) continue;
      size_t j = 0;
      Perm h = strip(std::move(g), i + 1, &j);
      if (h.is_identity()) continue;
      if (j == levels_.size()) {
        levels_.push_back({});
        levels_.back().beta = min_moved_point(h);
        recompute_orbit(levels_.back());
      }
      for (size_t k = i + 1; k <= j; ++k) levels_[k].gens.push_back(h);
      for (size_t k = j + 1; k-- > i + 1;) schreier_sims(k);
    }
  }
}

void PermGroup::recompute_order() {
  order_ = BigInt(1);
  for (const Level &lv : levels_)
    order_.mul_u32(static_cast<uint32_t>(lv.orbit.empty() ? 1 : lv.orbit.size()));
}

Perm PermGroup::sift(const Perm &p) const {
  if (p.degree() != degree_) throw std::invalid_argument("sift: degree mismatch");
  return strip(p, 0, nullptr);
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_) throw std::invalid_argument("membership: degree mismatch");
  return sift(p).is_identity();
}

bool PermGroup::add_generator(const Perm &p) {
  if (p.degree() != degree_) throw std::invalid_argument("add_generator: degree mismatch");
  size_t j = 0;
  Perm h = strip(p, 0, &j);
  if (h.is_identity()) return false;
  input_gens_.push_back(p);
  if (j == levels_.size()) {
    levels_.push_back({});
    levels_.back().beta = min_moved_point(h);
  }
  for (size_t k = 0; k <= j && k < levels_.size(); ++k) levels_[k].gens.push_back(h);
  for (size_t k = std::min(j + 1, levels_.size()); k-- > 0;) schreier_sims(k);
  recompute_order();
  return true;
}

BigInt PermGroup::stabilizer_order_from(uint32_t split) const {
  BigInt r(1);
  for (const Level &lv : levels_) {
    if (lv.beta < split) continue;
    r.mul_u32(static_cast<uint32_t>(lv.orbit.empty() ? 1 : lv.orbit.size()));
  }
  return r;
}

std::vector<Perm> PermGroup::stabilizer_generators_from(uint32_t split) const {
  // levels are only split-clean when the base prefix listed {0..split-1} first
  for (size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].beta >= split)
      return levels_[i].gens;
  return {};
}

PermGroup quotient_group(int n, bool allow_large) {
  if (n < 1) throw std::out_of_range("quotient_group: need n >= 1");
  if (n > (allow_large ? kMaxLevel : 12))
    throw std::out_of_range("quotient_group: degree cap exceeded");
  std::vector<Perm> gens;
  for (const char *g : {"a", "b", "c", "d"})
    gens.push_back(level_perm(parse_word(g, Alphabet::abcd), n));
  return PermGroup(std::move(gens));
}

namespace {

// generators of G_n on the disjoint union of level m and level n leaves
std::vector<Perm> combined_generators(int n, int m) {
  size_t dm = size_t{1} << m;
  size_t dn = size_t{1} << n;
  std::vector<Perm> gens;
  for (const char *g : {"a", "b", "c", "d"}) {
    FreeWord w = parse_word(g, Alphabet::abcd);
    std::vector<uint32_t> img(dm + dn);
    auto top = level_perm_images(w, m);
    auto bot = level_perm_images(w, n);
    for (size_t i = 0; i < dm; ++i) img[i] = top[i];
    for (size_t i = 0; i < dn; ++i) img[dm + i] = static_cast<uint32_t>(dm) + bot[i];
    gens.push_back(Perm(std::move(img)));
  }
  return gens;
}

Perm restrict_to_tail(const Perm &p, size_t offset) {
  std::vector<uint32_t> img(p.degree() - offset);
  for (size_t i = offset; i < p.degree(); ++i)
    img[i - offset] = p[static_cast<uint32_t>(i)] - static_cast<uint32_t>(offset);
  return Perm(std::move(img));
}

}  // namespace

KernelData level_kernel(int n, int m, bool allow_large) {
  if (m < 1 || m >= n) throw std::invalid_argument("level_kernel: need 1 <= m < n");
  if (!allow_large && n > 12) throw std::out_of_range("level_kernel: degree cap");
  size_t dm = size_t{1} << m;
  std::vector<uint32_t> prefix(dm);
  for (size_t i = 0; i < dm; ++i) prefix[i] = static_cast<uint32_t>(i);
  PermGroup g(combined_generators(n, m), prefix);

  KernelData kd;
  kd.order = g.stabilizer_order_from(static_cast<uint32_t>(dm));
  for (const Perm &p : g.stabilizer_generators_from(static_cast<uint32_t>(dm)))
    kd.generators.push_back(restrict_to_tail(p, dm));

  kd.elementary_abelian = true;
  for (size_t i = 0; i < kd.generators.size() && kd.elementary_abelian; ++i) {
    if (!(kd.generators[i] * kd.generators[i]).is_identity())
      kd.elementary_abelian = false;
    for (size_t j = i + 1; j < kd.generators.size(); ++j)
      if (kd.generators[i] * kd.generators[j] != kd.generators[j] * kd.generators[i]) {
        kd.elementary_abelian = false;
        break;
      }
  }
  return kd;
}

KernelData kernel_data(int n, bool allow_large) {
  if (n < 2) throw std::invalid_argument("kernel_data: need n >= 2");
  return level_kernel(n, n - 1, allow_large);
}

PermGroup normal_closure(const std::vector<Perm> &ambient, const std::vector<Perm> &seeds) {
  if (seeds.empty()) throw std::invalid_argument("normal_closure: no seeds");
  PermGroup h(seeds);
  std::vector<Perm> queue;
  for (const Perm &s : seeds)
    for (const Perm &g : ambient) queue.push_back(g.inverse() * (s * g));
  while (!queue.empty()) {
    Perm e = queue.back();
    queue.pop_back();
    if (h.contains(e)) continue;
    h.add_generator(e);
    for (const Perm &g : ambient) queue.push_back(g.inverse() * (e * g));
  }
  return h;
}

BranchSubgroupChecks branch_subgroup_checks(int n, bool allow_large) {
  if (n < 3) throw std::invalid_argument("branch_subgroup_checks: need n >= 3");
  PermGroup gn = quotient_group(n, allow_large);
  Perm seed = level_perm(parse_word("(ab)^2", Alphabet::abcd), n);
  PermGroup k = normal_closure(gn.generators(), {seed});

  BranchSubgroupChecks out;
  out.k_index = gn.order() / k.order();

  out.st3_in_k = true;
  if (n > 3) {
    KernelData st3 = level_kernel(n, 3, allow_large);
    for (const Perm &p : st3.generators)
      if (!k.contains(p)) {
        out.st3_in_k = false;
        break;
      }
  }
  return out;
}

}  // namespace grigq
