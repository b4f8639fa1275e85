#ifndef GRIGQ_TREE_HPP
#define GRIGQ_TREE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grigq/word.hpp"

namespace grigq {

// A vertex of the binary rooted tree, as its bit string from the root.
struct Vertex {
  std::vector<uint8_t> bits;

  Vertex() = default;
  explicit Vertex(std::vector<uint8_t> b) : bits(std::move(b)) {}
  static Vertex parse(const std::string &s);
  std::string to_string() const;
  size_t level() const { return bits.size(); }
  bool operator==(const Vertex &rhs) const { return bits == rhs.bits; }
};

// Left action of the wreath recursion a=(1,1)s, b=(a,c), c=(a,d), d=(1,b).
// In a product the rightmost letter acts first: (fg)(v) = f(g(v)).
Vertex act(const FreeWord &w, const Vertex &v);

// Section of w at v: the automorphism induced on the subtree below v,
// composed by the cocycle rule (fg)_v = f_{g(v)} g_v. Freely reduced.
FreeWord section(const FreeWord &w, const Vertex &v);

struct Perm;  // perm.hpp

// Permutation induced on level n (leaves indexed with the first tree letter
// as the most significant bit). Levels are capped to keep tables sane.
inline constexpr int kMaxLevel = 20;
Perm level_perm(const FreeWord &w, int n);
// image array only, avoids including perm.hpp users
std::vector<uint32_t> level_perm_images(const FreeWord &w, int n);

// Recursion trace of the branch word-problem algorithm.
struct BranchNode {
  std::string word;  // involutively reduced form at this node
  bool level1_trivial = false;
  std::unique_ptr<BranchNode> child0, child1;  // sections, when recursing
};

struct BranchCertificate {
  bool verdict = false;
  std::unique_ptr<BranchNode> trace;
  int depth = 0;  // recursion depth of the trace
};

// Decides w = 1 in the Grigorchuk group: reduce involutively, reject on odd
// a-count, otherwise recurse into the two level-1 sections. Words of length
// <= 1 are decided directly.
BranchCertificate is_trivial_g(const FreeWord &w);

// Least k such that every level-k section of w reduces into {1,a,b,c,d}.
int nucleus_depth(const FreeWord &w);

}  // namespace grigq

#endif
