#ifndef GRIGQ_COSET_HPP
#define GRIGQ_COSET_HPP

#include <cstdint>
#include <optional>

#include "grigq/bigint.hpp"
#include "grigq/presentation.hpp"

namespace grigq {

enum class TcStrategy : uint8_t { hlt, felsch };

struct EnumResult {
  bool complete = false;   // false = overflow (resource bound, not a verdict)
  uint64_t order = 0;      // live cosets when complete
  uint64_t cosets_defined = 0;
};

// Coset enumeration over the trivial subgroup. Deterministic given the
// strategy. Overflow is reported, never thrown.
EnumResult enumerate_cosets(const PresentationFP &p, uint64_t max_cosets,
                            TcStrategy strategy = TcStrategy::hlt);

enum class CertKind : uint8_t { thm1, thm4, lemma1_wreath };

struct CertResult {
  bool surjects = false;      // every relator is trivial in the level-n quotient
  bool order_matches = false; // enumerated order equals |G_n|
  bool overflowed = false;
  uint64_t enumerated_order = 0;
  bool ok() const { return surjects && order_matches && !overflowed; }
};

// Certifies that the named presentation presents exactly G_n: relators die
// in the permutation quotient and the enumeration returns its order.
CertResult presentation_certificate(CertKind kind, int n, uint64_t max_cosets,
                                    TcStrategy strategy = TcStrategy::hlt);

}  // namespace grigq

#endif
