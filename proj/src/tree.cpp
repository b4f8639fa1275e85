#include "grigq/tree.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "grigq/perm.hpp"

namespace grigq {

namespace {

// wreath table, generator ids 1..4 = a,b,c,d; 0 = identity
// section_of[g][bit] and root_swap[g]
constexpr int8_t kSection[5][2] = {
    {0, 0},  // identity
    {0, 0},  // a = (1,1) swap
    {1, 3},  // b = (a,c)
    {1, 4},  // c = (a,d)
    {0, 2},  // d = (1,b)
};
constexpr bool kRootSwap[5] = {false, true, false, false, false};

}  // namespace

Vertex Vertex::parse(const std::string &s) {
  Vertex v;
  for (char c : s) {
    if (c == '0')
      v.bits.push_back(0);
    else if (c == '1')
      v.bits.push_back(1);
    else
      throw std::invalid_argument("vertex strings are over {0,1}");
  }
  return v;
}

std::string Vertex::to_string() const {
  std::string s;
  for (uint8_t b : bits) s += b ? '1' : '0';
  return s;
}

namespace {

void check_tree_alphabet(const FreeWord &w) {
  if (w.alphabet != Alphabet::abcd)
    throw std::invalid_argument("tree action requires the abcd alphabet");
}

// One generator applied to a vertex, in place. Generators are involutions
// as tree maps, so inverse letters act the same way.
void act_letter(int gen, Vertex &v) {
  int cur = gen;
  for (size_t i = 0; i < v.bits.size() && cur != 0; ++i) {
    if (kRootSwap[cur]) {
      v.bits[i] ^= 1;
      cur = 0;  // sections of a are trivial
    } else {
      cur = kSection[cur][v.bits[i]];
    }
  }
}

// Section of a single signed letter at v: a single signed letter or empty.
int8_t section_letter(int8_t letter, const Vertex &v) {
  int cur = std::abs(letter);
  for (uint8_t b : v.bits) {
    if (cur == 0) break;
    cur = kRootSwap[cur] ? 0 : kSection[cur][b];
  }
  if (cur == 0) return 0;
  return letter > 0 ? static_cast<int8_t>(cur) : static_cast<int8_t>(-cur);
}

}  // namespace

Vertex act(const FreeWord &w, const Vertex &v) {
  check_tree_alphabet(w);
  Vertex u = v;
  for (size_t i = w.letters.size(); i-- > 0;) act_letter(std::abs(w.letters[i]), u);
  return u;
}

FreeWord section(const FreeWord &w, const Vertex &v) {
  check_tree_alphabet(w);
  std::vector<int8_t> out(w.letters.size(), 0);
  Vertex u = v;
  for (size_t i = w.letters.size(); i-- > 0;) {
    out[i] = section_letter(w.letters[i], u);
    act_letter(std::abs(w.letters[i]), u);
  }
  FreeWord s(Alphabet::abcd);
  for (int8_t l : out)
    if (l != 0) s.letters.push_back(l);
  return free_reduce(s);
}

namespace {

// cached permutation tables of the four generators per level, built
// bottom-up so lower levels are always present
const std::vector<uint32_t> &gen_table(int gen, int n) {
  static std::mutex mu;
  static std::vector<uint32_t> cache[kMaxLevel + 1][5];
  std::lock_guard<std::mutex> lock(mu);
  for (int lvl = 1; lvl <= n; ++lvl) {
    size_t deg = size_t{1} << lvl;
    size_t half = deg >> 1;
    for (int g = 1; g <= 4; ++g) {
      auto &t = cache[lvl][g];
      if (!t.empty()) continue;
      t.resize(deg);
      if (kRootSwap[g]) {
        for (size_t i = 0; i < deg; ++i) t[i] = static_cast<uint32_t>(i ^ half);
        continue;
      }
      for (int bit = 0; bit < 2; ++bit) {
        int sub = kSection[g][bit];
        size_t base = bit ? half : 0;
        if (lvl == 1 || sub == 0) {
          for (size_t i = 0; i < half; ++i)
            t[base + i] = static_cast<uint32_t>(base + i);
        } else {
          const auto &st = cache[lvl - 1][sub];
          for (size_t i = 0; i < half; ++i)
            t[base + i] = static_cast<uint32_t>(base) + st[i];
        }
      }
    }
  }
  return cache[n][gen];
}

}  // namespace

std::vector<uint32_t> level_perm_images(const FreeWord &w, int n) {
  check_tree_alphabet(w);
  if (n < 1 || n > kMaxLevel) throw std::out_of_range("level out of range");
  size_t deg = size_t{1} << n;
  const std::vector<uint32_t> *tables[4];
  for (int g = 1; g <= 4; ++g) tables[g - 1] = &gen_table(g, n);
  std::vector<uint32_t> img(deg);
  for (size_t x = 0; x < deg; ++x) {
    uint32_t p = static_cast<uint32_t>(x);
    for (size_t i = w.letters.size(); i-- > 0;)
      p = (*tables[std::abs(w.letters[i]) - 1])[p];
    img[x] = p;
  }
  return img;
}

Perm level_perm(const FreeWord &w, int n) { return Perm(level_perm_images(w, n)); }

namespace {

std::unique_ptr<BranchNode> branch_rec(const FreeWord &w, int depth, int &max_depth,
                                       bool &verdict) {
  auto node = std::make_unique<BranchNode>();
  FreeWord r = reduce_involutive(w);
  node->word = to_text(r);
  max_depth = std::max(max_depth, depth);
  if (r.size() <= 1) {
    node->level1_trivial = r.empty();
    if (!r.empty()) verdict = false;
    return node;
  }
  size_t a_count = 0;
  for (int8_t l : r.letters)
    if (std::abs(l) == 1) ++a_count;
  node->level1_trivial = (a_count % 2 == 0);
  if (!node->level1_trivial) {
    verdict = false;
    return node;
  }
  node->child0 = branch_rec(section(r, Vertex::parse("0")), depth + 1, max_depth, verdict);
  node->child1 = branch_rec(section(r, Vertex::parse("1")), depth + 1, max_depth, verdict);
  return node;
}

}  // namespace

BranchCertificate is_trivial_g(const FreeWord &w) {
  BranchCertificate cert;
  cert.verdict = true;
  cert.depth = 0;
  cert.trace = branch_rec(w, 0, cert.depth, cert.verdict);
  return cert;
}

int nucleus_depth(const FreeWord &w) {
  std::set<std::string> cur{to_text(reduce_involutive(w))};
  for (int depth = 0; depth <= 64; ++depth) {
    bool all_nucleus = true;
    for (const auto &s : cur)
      if (s.size() > 1) {
        all_nucleus = false;
        break;
      }
    if (all_nucleus) return depth;
    std::set<std::string> next;
    for (const auto &s : cur) {
      if (s.size() <= 1) {
        next.insert(s);
        continue;
      }
      FreeWord x = parse_word(s, Alphabet::abcd);
      next.insert(to_text(reduce_involutive(section(x, Vertex::parse("0")))));
      next.insert(to_text(reduce_involutive(section(x, Vertex::parse("1")))));
    }
    cur = std::move(next);
  }
  throw std::runtime_error("nucleus_depth: contraction did not terminate");
}

}  // namespace grigq
