#include "grigq/pcp.hpp"

#include <algorithm>
#include <stdexcept>

#include "grigq/perm.hpp"
#include "grigq/report.hpp"

namespace grigq {

int F2Vec::highest_bit() const {
  for (size_t l = limbs.size(); l-- > 0;)
    if (limbs[l]) return static_cast<int>(l * 64 + 63 - __builtin_clzll(limbs[l]));
  return -1;
}

F2Vec PcPresentation::gen(int i) const {
  F2Vec v(static_cast<size_t>(ngens));
  v.set(static_cast<size_t>(i), true);
  return v;
}

F2Vec PcPresentation::multiply_gen(F2Vec u, int i) const {
  int top = u.highest_bit();
  if (top <= i) {
    if (!u.get(static_cast<size_t>(i))) {
      u.set(static_cast<size_t>(i), true);
      return u;
    }
    u.set(static_cast<size_t>(i), false);
    if (power[i].is_zero()) return u;
    return multiply(u, power[i]);
  }
  // u = A * B with B the generators above i; push g_i through B:
  // B g_i = g_i * prod_j (g_j * [g_j, g_i])
  F2Vec a = u;
  std::vector<int> high;
  for (int j = i + 1; j <= top; ++j)
    if (u.get(static_cast<size_t>(j))) {
      high.push_back(j);
      a.set(static_cast<size_t>(j), false);
    }
  F2Vec r = multiply_gen(std::move(a), i);
  for (int j : high) {
    r = multiply_gen(std::move(r), j);
    const F2Vec &c = comm[j][i];
    if (!c.is_zero()) r = multiply(r, c);
  }
  return r;
}

F2Vec PcPresentation::multiply(const F2Vec &u, const F2Vec &v) const {
  F2Vec r = u;
  int top = v.highest_bit();
  for (int i = 0; i <= top; ++i)
    if (v.get(static_cast<size_t>(i))) r = multiply_gen(std::move(r), i);
  return r;
}

F2Vec PcPresentation::inverse(const F2Vec &u) const {
  // u^(2^k) = 1 for some k <= class+1; u^-1 = u^(2^k - 1)
  std::vector<F2Vec> powers{u};
  while (!powers.back().is_zero()) {
    if (powers.size() > 64) throw std::logic_error("pcp inverse: order out of range");
    powers.push_back(multiply(powers.back(), powers.back()));
  }
  F2Vec r = identity();
  for (size_t j = 0; j + 1 < powers.size(); ++j) r = multiply(r, powers[j]);
  return r;
}

F2Vec PcPresentation::evaluate(const std::vector<int16_t> &word) const {
  F2Vec r = identity();
  for (int16_t l : word) {
    const F2Vec &img = epi[static_cast<size_t>(std::abs(l)) - 1];
    r = l > 0 ? multiply(r, img) : multiply(r, inverse(img));
  }
  return r;
}

namespace {

F2Vec resized(const F2Vec &v, size_t nbits) {
  F2Vec r(nbits);
  for (size_t i = 0; i < v.limbs.size() && i < r.limbs.size(); ++i)
    r.limbs[i] = v.limbs[i];
  return r;
}

// the exponent-2 class-1 quotient (elementary abelian), with the
// redundant abstract generators eliminated by rightmost-pivot reduction
PcPresentation class1_quotient(const PresentationFP &p) {
  size_t t = p.ngens();
  F2Matrix m(p.relators.size(), t);
  for (size_t i = 0; i < p.relators.size(); ++i)
    for (int16_t l : p.relators[i]) {
      size_t j = static_cast<size_t>(std::abs(l)) - 1;
      m.set(i, j, m.get(i, j) ^ true);
    }
  // rightmost-pivot RREF so that later generators are the eliminated ones
  std::vector<size_t> pivots;
  {
    size_t r = 0;
    for (size_t cc = t; cc-- > 0 && r < m.rows();) {
      size_t pr = r;
      while (pr < m.rows() && !m.get(pr, cc)) ++pr;
      if (pr == m.rows()) continue;
      if (pr != r)
        for (size_t j = 0; j < t; ++j) {
          bool tmp = m.get(r, j);
          m.set(r, j, m.get(pr, j));
          m.set(pr, j, tmp);
        }
      for (size_t i = 0; i < m.rows(); ++i)
        if (i != r && m.get(i, cc)) m.xor_row(i, r);
      pivots.push_back(cc);
      ++r;
    }
  }
  std::vector<bool> is_pivot(t, false);
  for (size_t c : pivots) is_pivot[c] = true;

  PcPresentation pc;
  std::vector<int> gen_of_col(t, -1);
  for (size_t c = 0; c < t; ++c)
    if (!is_pivot[c]) {
      gen_of_col[c] = pc.ngens++;
      pc.defs.push_back({PcPresentation::kEpi, static_cast<int>(c), 0});
    }
  pc.weight.assign(pc.ngens, 1);
  pc.power.assign(pc.ngens, F2Vec(pc.ngens));
  pc.comm.resize(pc.ngens);
  for (int j = 0; j < pc.ngens; ++j) pc.comm[j].assign(j, F2Vec(pc.ngens));
  pc.epi.assign(t, F2Vec(pc.ngens));
  for (size_t c = 0; c < t; ++c)
    if (!is_pivot[c]) pc.epi[c].set(static_cast<size_t>(gen_of_col[c]), true);
  for (size_t r = 0; r < pivots.size(); ++r) {
    size_t c = pivots[r];
    for (size_t j = 0; j < t; ++j)
      if (j != c && m.get(r, j)) {
        if (is_pivot[j]) throw std::logic_error("class1: non-reduced row");
        pc.epi[c].toggle(static_cast<size_t>(gen_of_col[j]));
      }
  }
  pc.group_class = pc.ngens > 0 ? 1 : 0;
  return pc;
}

struct TailInfo {
  PcPresentation::Definition from;
  int weight;
};

// adds a central order-2 tail to every non-definition relation
PcPresentation extend_with_tails(const PcPresentation &in, std::vector<TailInfo> &tails) {
  int k = in.ngens;
  std::vector<bool> def_power(k, false);
  std::vector<std::vector<bool>> def_comm(k);
  for (int j = 0; j < k; ++j) def_comm[j].assign(j, false);
  for (int g = 0; g < k; ++g) {
    const auto &d = in.defs[g];
    if (d.kind == PcPresentation::kPower) def_power[d.a] = true;
    if (d.kind == PcPresentation::kComm) def_comm[d.a][d.b] = true;
  }
  tails.clear();
  for (int i = 0; i < k; ++i)
    if (!def_power[i])
      tails.push_back({{PcPresentation::kPower, i, 0}, in.weight[i] + 1});
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if (!def_comm[j][i])
        tails.push_back({{PcPresentation::kComm, j, i}, in.weight[j] + in.weight[i]});

  int total = k + static_cast<int>(tails.size());
  PcPresentation ext;
  ext.ngens = total;
  ext.weight = in.weight;
  ext.defs = in.defs;
  ext.group_class = in.group_class;
  for (const auto &ti : tails) {
    ext.weight.push_back(ti.weight);
    ext.defs.push_back(ti.from);
  }
  ext.power.resize(total, F2Vec(static_cast<size_t>(total)));
  ext.comm.resize(total);
  for (int j = 0; j < total; ++j) ext.comm[j].assign(j, F2Vec(static_cast<size_t>(total)));
  for (int i = 0; i < k; ++i) ext.power[i] = resized(in.power[i], total);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < j; ++i) ext.comm[j][i] = resized(in.comm[j][i], total);
  for (size_t ti = 0; ti < tails.size(); ++ti) {
    const auto &d = tails[ti].from;
    int bit = k + static_cast<int>(ti);
    if (d.kind == PcPresentation::kPower)
      ext.power[d.a].toggle(static_cast<size_t>(bit));
    else
      ext.comm[d.a][d.b].toggle(static_cast<size_t>(bit));
  }
  for (const F2Vec &e : in.epi) ext.epi.push_back(resized(e, total));
  return ext;
}

// associativity test words over the base generators; every failure is an
// F2 relation among the tails
std::vector<F2Vec> consistency_rows(const PcPresentation &ext, int base) {
  std::vector<F2Vec> rows;
  auto push_diff = [&](F2Vec lhs, const F2Vec &rhs) {
    lhs ^= rhs;
    if (lhs.is_zero()) return;
    for (int g = 0; g < base; ++g)
      if (lhs.get(static_cast<size_t>(g)))
        throw std::logic_error("consistency: difference hits base generators");
    rows.push_back(std::move(lhs));
  };
  for (int kk = 0; kk < base; ++kk)
    for (int j = 0; j < kk; ++j)
      for (int i = 0; i < j; ++i) {
        F2Vec lhs = ext.multiply_gen(ext.multiply_gen(ext.gen(kk), j), i);
        F2Vec rhs = ext.multiply(ext.gen(kk), ext.multiply_gen(ext.gen(j), i));
        push_diff(std::move(lhs), rhs);
      }
  for (int j = 0; j < base; ++j)
    for (int i = 0; i < j; ++i) {
      // (g_j g_j) g_i vs g_j (g_j g_i)
      F2Vec lhs = ext.multiply_gen(ext.power[j], i);
      F2Vec rhs = ext.multiply(ext.gen(j), ext.multiply_gen(ext.gen(j), i));
      push_diff(std::move(lhs), rhs);
      // (g_j g_i) g_i vs g_j (g_i g_i)
      F2Vec lhs2 = ext.multiply_gen(ext.multiply_gen(ext.gen(j), i), i);
      F2Vec rhs2 = ext.multiply(ext.gen(j), ext.power[i]);
      push_diff(std::move(lhs2), rhs2);
    }
  for (int i = 0; i < base; ++i) {
    F2Vec lhs = ext.multiply_gen(ext.power[i], i);
    F2Vec rhs = ext.multiply(ext.gen(i), ext.power[i]);
    push_diff(std::move(lhs), rhs);
  }
  return rows;
}

// F2 elimination over the tail coordinates
struct TailElimination {
  int base = 0, ntails = 0;
  std::vector<int> pivot_of_row;          // tail index per elimination row
  std::vector<F2Vec> subst;               // substitution pattern per row (tail coords)
  std::vector<bool> eliminated;

  TailElimination(int base_, int ntails_, std::vector<F2Vec> rows)
      : base(base_), ntails(ntails_), eliminated(ntails_, false) {
    // extract tail parts and run RREF
    F2Matrix m(rows.size(), static_cast<size_t>(ntails));
    for (size_t r = 0; r < rows.size(); ++r)
      for (int tb = 0; tb < ntails; ++tb)
        if (rows[r].get(static_cast<size_t>(base + tb))) m.set(r, tb, true);
    std::vector<size_t> pivots = m.rref();
    for (size_t r = 0; r < pivots.size(); ++r) {
      int p = static_cast<int>(pivots[r]);
      eliminated[p] = true;
      pivot_of_row.push_back(p);
      F2Vec pat(static_cast<size_t>(ntails));
      for (int tb = 0; tb < ntails; ++tb)
        if (tb != p && m.get(r, static_cast<size_t>(tb))) pat.set(static_cast<size_t>(tb), true);
      subst.push_back(std::move(pat));
    }
  }

  // rewrites eliminated tail bits in place (vector over base+ntails bits)
  void apply(F2Vec &v) const {
    for (size_t r = 0; r < pivot_of_row.size(); ++r) {
      size_t bit = static_cast<size_t>(base + pivot_of_row[r]);
      if (!v.get(bit)) continue;
      v.set(bit, false);
      for (int tb = 0; tb < ntails; ++tb)
        if (subst[r].get(static_cast<size_t>(tb))) v.toggle(static_cast<size_t>(base + tb));
    }
  }

  int survivors() const {
    int s = 0;
    for (bool e : eliminated)
      if (!e) ++s;
    return s;
  }
};

// rewrites the extended presentation modulo the elimination and renumbers
PcPresentation compress(const PcPresentation &ext, int base,
                        const std::vector<TailInfo> &tails, const TailElimination &elim) {
  int ntails = static_cast<int>(tails.size());
  std::vector<int> new_index(ext.ngens, -1);
  for (int g = 0; g < base; ++g) new_index[g] = g;
  int next = base;
  for (int tb = 0; tb < ntails; ++tb)
    if (!elim.eliminated[tb]) new_index[base + tb] = next++;

  auto remap = [&](F2Vec v) {
    elim.apply(v);
    F2Vec r(static_cast<size_t>(next));
    for (int g = 0; g < ext.ngens; ++g)
      if (v.get(static_cast<size_t>(g))) {
        if (new_index[g] < 0) throw std::logic_error("compress: eliminated bit survived");
        r.set(static_cast<size_t>(new_index[g]), true);
      }
    return r;
  };

  PcPresentation out;
  out.ngens = next;
  out.group_class = ext.group_class + 1;
  out.weight.assign(next, 0);
  out.defs.assign(next, {});
  for (int g = 0; g < ext.ngens; ++g)
    if (new_index[g] >= 0) {
      out.weight[new_index[g]] = ext.weight[g];
      out.defs[new_index[g]] = ext.defs[g];
    }
  out.power.resize(next, F2Vec(static_cast<size_t>(next)));
  out.comm.resize(next);
  for (int j = 0; j < next; ++j) out.comm[j].assign(j, F2Vec(static_cast<size_t>(next)));
  for (int i = 0; i < base; ++i) out.power[i] = remap(ext.power[i]);
  for (int j = 0; j < base; ++j)
    for (int i = 0; i < j; ++i) out.comm[j][i] = remap(ext.comm[j][i]);
  for (const F2Vec &e : ext.epi) out.epi.push_back(remap(e));
  return out;
}

}  // namespace

PcPresentation pquotient(const PresentationFP &p, int max_class) {
  if (max_class < 1) throw std::invalid_argument("pquotient: max_class >= 1");
  PcPresentation pc = class1_quotient(p);
  pc.stabilized = (pc.ngens == 0);
  while (!pc.stabilized && pc.group_class < max_class) {
    std::vector<TailInfo> tails;
    PcPresentation ext = extend_with_tails(pc, tails);
    std::vector<F2Vec> rows = consistency_rows(ext, pc.ngens);
    for (const auto &rel : p.relators) {
      F2Vec v = ext.evaluate(rel);
      for (int g = 0; g < pc.ngens; ++g)
        if (v.get(static_cast<size_t>(g)))
          throw std::logic_error("pquotient: relator image outside the tail space");
      if (!v.is_zero()) rows.push_back(std::move(v));
    }
    TailElimination elim(pc.ngens, static_cast<int>(tails.size()), std::move(rows));
    if (elim.survivors() == 0) {
      pc.stabilized = true;
      break;
    }
    pc = compress(ext, pc.ngens, tails, elim);
  }
  return pc;
}

PCover p_cover(const PcPresentation &pc) {
  if (!pc.stabilized) throw std::invalid_argument("p_cover needs a stabilized quotient");
  std::vector<TailInfo> tails;
  PcPresentation ext = extend_with_tails(pc, tails);
  std::vector<F2Vec> rows = consistency_rows(ext, pc.ngens);
  TailElimination elim(pc.ngens, static_cast<int>(tails.size()), std::move(rows));
  PCover cover;
  cover.cover = compress(ext, pc.ngens, tails, elim);
  cover.cover.stabilized = true;
  cover.base_gens = pc.ngens;
  cover.multiplicator_dim = cover.cover.ngens - pc.ngens;
  return cover;
}

F2Matrix relator_images(const PresentationFP &p, const PCover &cover) {
  const PcPresentation &cc = cover.cover;
  F2Matrix rows(p.relators.size(), static_cast<size_t>(cover.multiplicator_dim));
  for (size_t r = 0; r < p.relators.size(); ++r) {
    F2Vec v = cc.evaluate(p.relators[r]);
    for (int g = 0; g < cover.base_gens; ++g)
      if (v.get(static_cast<size_t>(g)))
        throw std::invalid_argument("relator image lands outside the multiplicator");
    for (int t = 0; t < cover.multiplicator_dim; ++t)
      rows.set(r, static_cast<size_t>(t), v.get(static_cast<size_t>(cover.base_gens + t)));
  }
  return rows;
}

MultiplierReport multiplier_report(int n, int max_class) {
  MultiplierReport rep;
  rep.level = n;
  PresentationFP p = presentation_from_family(relator_family(FamilyKind::thm4, n));
  PcPresentation pc = pquotient(p, max_class);
  if (!pc.stabilized)
    throw ResourceLimitError("multiplier_report: class cap reached before stabilization");
  rep.group_order = pc.order();
  PCover cover = p_cover(pc);
  rep.h2_dim = cover.multiplicator_dim;
  rep.schur_mod2_rank = rep.h2_dim - 3;
  rep.def_lower = rep.schur_mod2_rank;
  rep.def_upper = static_cast<int>(p.relators.size()) - static_cast<int>(p.ngens());
  F2Matrix imgs = relator_images(p, cover);
  rep.relator_rank = static_cast<int>(imgs.rank());
  rep.relator_count = static_cast<int>(p.relators.size());
  rep.relators_independent = rep.relator_rank == rep.relator_count;
  return rep;
}

IndependenceData independence_certificate(const PresentationFP &p, int max_class) {
  IndependenceData out;
  out.relator_count = static_cast<int>(p.relators.size());
  PcPresentation base = pquotient(p, max_class);
  if (!base.stabilized)
    throw ResourceLimitError("independence_certificate: base quotient did not stabilize");

  // covering presentation < X | [r, x] for all r, x; r^2 for all r >
  PresentationFP cp;
  cp.gens = p.gens;
  for (const auto &r : p.relators) {
    for (size_t x = 1; x <= p.ngens(); ++x) {
      std::vector<int16_t> w;
      for (size_t i = r.size(); i-- > 0;) w.push_back(static_cast<int16_t>(-r[i]));
      w.push_back(static_cast<int16_t>(-static_cast<int>(x)));
      w.insert(w.end(), r.begin(), r.end());
      w.push_back(static_cast<int16_t>(x));
      cp.relators.push_back(std::move(w));
    }
    std::vector<int16_t> sq = r;
    sq.insert(sq.end(), r.begin(), r.end());
    cp.relators.push_back(std::move(sq));
  }
  PcPresentation cover = pquotient(cp, max_class + 1);
  if (!cover.stabilized)
    throw ResourceLimitError("independence_certificate: cover did not stabilize");
  out.multiplicator_dim = cover.ngens - base.ngens;
  out.relator_rank = out.multiplicator_dim;  // the images span the multiplicator
  out.independent = out.multiplicator_dim == out.relator_count;
  return out;
}

}  // namespace grigq
