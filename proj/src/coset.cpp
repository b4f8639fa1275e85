#include "grigq/coset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "grigq/perm.hpp"
#include "grigq/tree.hpp"

namespace grigq {

namespace {

// Coset table with union-find coincidence handling. Cosets are 1-based;
// 0 marks an undefined entry. Column 2g is generator g+1, column 2g+1 its
// inverse.
class CosetTable {
 public:
  CosetTable(const PresentationFP &p, uint64_t max_cosets)
      : ngens_(p.ngens()), ncols_(2 * p.ngens()), max_cosets_(max_cosets) {
    for (const auto &r : p.relators) {
      std::vector<int32_t> rel(r.begin(), r.end());
      if (!rel.empty()) relators_.push_back(std::move(rel));
    }
    table_.assign(ncols_, 0);  // row for coset 0 (unused)
    parent_.push_back(0);
    new_coset();  // coset 1
  }

  static int col(int32_t letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int inv_col(int32_t letter) {
    return letter > 0 ? 2 * (letter - 1) + 1 : 2 * (-letter - 1);
  }

  bool overflowed() const { return overflow_; }
  uint64_t defined() const { return parent_.size() - 1; }

  uint64_t live_count() const {
    uint64_t n = 0;
    for (uint32_t i = 1; i < parent_.size(); ++i)
      if (parent_[i] == i) ++n;
    return n;
  }

  uint32_t get(uint32_t coset, int c) const { return table_[size_t{coset} * ncols_ + c]; }
  void set(uint32_t coset, int c, uint32_t v) { table_[size_t{coset} * ncols_ + c] = v; }

  uint32_t rep(uint32_t c) {
    uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  bool is_live(uint32_t c) { return rep(c) == c; }

  // defines delta = gamma * letter with a fresh coset; false on overflow
  bool define(uint32_t gamma, int32_t letter) {
    if (defined() >= max_cosets_) {
      overflow_ = true;
      return false;
    }
    uint32_t delta = new_coset();
    set(gamma, col(letter), delta);
    set(delta, inv_col(letter), gamma);
    deductions_.push_back({gamma, letter});
    return true;
  }

  // records gamma * letter = delta (both live); queues coincidence on clash
  void deduce(uint32_t gamma, int32_t letter, uint32_t delta) {
    uint32_t cur = get(gamma, col(letter));
    if (cur) {
      if (rep(cur) != rep(delta)) coincidence(cur, delta);
      return;
    }
    set(gamma, col(letter), delta);
    uint32_t back = get(delta, inv_col(letter));
    if (back) {
      if (rep(back) != rep(gamma)) coincidence(back, gamma);
    } else {
      set(delta, inv_col(letter), gamma);
    }
    deductions_.push_back({gamma, letter});
  }

  // scans relator w from coset alpha; fills undefined entries when fill=true
  void scan(uint32_t alpha, const std::vector<int32_t> &w, bool fill) {
    while (true) {
      alpha = rep(alpha);
      size_t f = 0, b = w.size();
      uint32_t fc = alpha, bc = alpha;
      while (f < b) {
        uint32_t next = get(fc, col(w[f]));
        if (!next) break;
        fc = rep(next);
        ++f;
      }
      if (f == b) {
        if (fc != bc) coincidence(fc, bc);
        return;
      }
      while (b > f + 1) {
        uint32_t next = get(bc, inv_col(w[b - 1]));
        if (!next) break;
        bc = rep(next);
        --b;
      }
      if (b == f + 1) {
        // one gap: a deduction closes the cycle
        deduce(fc, w[f], bc);
        return;
      }
      if (!fill) return;
      if (!define(fc, w[f])) return;
      // keep scanning the same relator after the new definition
    }
  }

  // standard coincidence processing: merge classes, migrate table rows
  void coincidence(uint32_t a, uint32_t b) {
    std::deque<uint32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      uint32_t gamma = queue.front();
      queue.pop_front();
      for (int c = 0; c < ncols_; ++c) {
        uint32_t delta = get(gamma, c);
        if (!delta) continue;
        int ic = c ^ 1;
        if (get(delta, ic) == gamma) set(delta, ic, 0);
        uint32_t mu = rep(gamma), nu = rep(delta);
        uint32_t cur = get(mu, c);
        if (cur) {
          if (rep(cur) != nu) merge(cur, nu, queue);
        } else {
          uint32_t back = get(nu, ic);
          if (back && rep(back) != mu) {
            merge(back, mu, queue);
            // re-read after merge; classes may have moved
            mu = rep(gamma);
            nu = rep(delta);
          }
          if (!get(mu, c)) {
            set(mu, c, nu);
            if (!get(nu, ic)) set(nu, ic, mu);
            deductions_.push_back({mu, c % 2 == 0 ? c / 2 + 1 : -(c / 2 + 1)});
          }
        }
      }
    }
  }

  // Felsch-style deduction closure over the rotated relator lists
  void process_deductions(const std::vector<std::vector<std::vector<int32_t>>> &by_first) {
    while (!deductions_.empty()) {
      auto [gamma, letter] = deductions_.back();
      deductions_.pop_back();
      if (!is_live(gamma)) continue;
      uint32_t delta = get(rep(gamma), col(letter));
      for (const auto &w : by_first[col(letter)]) scan(rep(gamma), w, false);
      if (delta && is_live(delta))
        for (const auto &w : by_first[inv_col(letter)]) scan(rep(delta), w, false);
    }
  }

  void clear_deductions() { deductions_.clear(); }

  const std::vector<std::vector<int32_t>> &relators() const { return relators_; }
  int ncols() const { return ncols_; }

 private:
  uint32_t new_coset() {
    parent_.push_back(static_cast<uint32_t>(parent_.size()));
    table_.insert(table_.end(), ncols_, 0);
    return parent_.back();
  }

  void merge(uint32_t a, uint32_t b, std::deque<uint32_t> &queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  size_t ngens_;
  int ncols_;
  uint64_t max_cosets_;
  bool overflow_ = false;
  std::vector<uint32_t> table_;
  std::vector<uint32_t> parent_;
  std::vector<std::pair<uint32_t, int32_t>> deductions_;
  std::vector<std::vector<int32_t>> relators_;
};

std::vector<std::vector<std::vector<int32_t>>> rotations_by_first(
    const CosetTable &t) {
  std::vector<std::vector<std::vector<int32_t>>> by_first(t.ncols());
  std::vector<std::vector<int32_t>> seen;
  auto add = [&](std::vector<int32_t> w) {
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) return;
    seen.push_back(w);
    by_first[CosetTable::col(w[0])].push_back(std::move(w));
  };
  for (const auto &r : t.relators()) {
    std::vector<int32_t> inv;
    for (size_t i = r.size(); i-- > 0;) inv.push_back(-r[i]);
    for (size_t s = 0; s < r.size(); ++s) {
      std::vector<int32_t> rot(r.begin() + s, r.end());
      rot.insert(rot.end(), r.begin(), r.begin() + s);
      add(std::move(rot));
      std::vector<int32_t> irot(inv.begin() + s, inv.end());
      irot.insert(irot.end(), inv.begin(), inv.begin() + s);
      add(std::move(irot));
    }
  }
  return by_first;
}

}  // namespace

EnumResult enumerate_cosets(const PresentationFP &p, uint64_t max_cosets,
                            TcStrategy strategy) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets >= 1");
  CosetTable t(p, max_cosets);
  EnumResult res;

  if (strategy == TcStrategy::hlt) {
    t.clear_deductions();
    for (uint32_t alpha = 1; alpha <= t.defined(); ++alpha) {
      if (!t.is_live(alpha)) continue;
      for (const auto &r : t.relators()) {
        t.scan(alpha, r, true);
        t.clear_deductions();
        if (t.overflowed()) break;
        if (!t.is_live(alpha)) break;
      }
      if (t.overflowed()) break;
      if (!t.is_live(alpha)) continue;
      for (int c = 0; c < t.ncols() && !t.overflowed(); ++c) {
        if (!t.get(alpha, c)) {
          int32_t letter = c % 2 == 0 ? c / 2 + 1 : -(c / 2 + 1);
          t.define(alpha, letter);
          t.clear_deductions();
        }
      }
      if (t.overflowed()) break;
    }
  } else {
    auto by_first = rotations_by_first(t);
    t.process_deductions(by_first);
    for (uint32_t alpha = 1; alpha <= t.defined(); ++alpha) {
      if (!t.is_live(alpha)) continue;
      for (int c = 0; c < t.ncols(); ++c) {
        if (!t.is_live(alpha)) break;
        if (t.get(alpha, c)) continue;
        int32_t letter = c % 2 == 0 ? c / 2 + 1 : -(c / 2 + 1);
        if (!t.define(alpha, letter)) break;
        t.process_deductions(by_first);
      }
      if (t.overflowed()) break;
    }
  }

  res.cosets_defined = t.defined();
  if (t.overflowed()) {
    res.complete = false;
    return res;
  }
  res.complete = true;
  res.order = t.live_count();
  return res;
}

CertResult presentation_certificate(CertKind kind, int n, uint64_t max_cosets,
                                    TcStrategy strategy) {
  PresentationFP p;
  std::vector<FreeWord> images;
  switch (kind) {
    case CertKind::thm1:
      p = presentation_from_family(relator_family(FamilyKind::thm1, n));
      images = {parse_word("a", Alphabet::abcd), parse_word("b", Alphabet::abcd),
                parse_word("c", Alphabet::abcd), parse_word("d", Alphabet::abcd)};
      break;
    case CertKind::thm4:
      p = presentation_from_family(relator_family(FamilyKind::thm4, n));
      images = {parse_word("a", Alphabet::abcd), parse_word("b", Alphabet::abcd),
                parse_word("c", Alphabet::abcd)};
      break;
    case CertKind::lemma1_wreath:
      if (n != 3) throw std::invalid_argument("the wreath presentation is for n = 3");
      p = wreath_presentation_g3();
      images = wreath_generator_words();
      break;
  }

  CertResult out;
  out.surjects = true;
  for (const auto &rel : p.relators) {
    FreeWord w(Alphabet::abcd);
    for (int16_t l : rel) {
      const FreeWord &im = images[std::abs(l) - 1];
      FreeWord piece = l > 0 ? im : im.inverse();
      w.letters.insert(w.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    if (!level_perm(w, n).is_identity()) {
      out.surjects = false;
      break;
    }
  }

  EnumResult e = enumerate_cosets(p, max_cosets, strategy);
  out.overflowed = !e.complete;
  out.enumerated_order = e.order;
  if (e.complete) {
    BigInt expect = quotient_group(n).order();
    out.order_matches = expect == BigInt(static_cast<int64_t>(e.order));
  }
  return out;
}

}  // namespace grigq
