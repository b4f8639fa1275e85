#ifndef GRIGQ_PRESENTATION_HPP
#define GRIGQ_PRESENTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grigq/word.hpp"

namespace grigq {

// Finite presentation on named generators. Relators are signed 1-based
// generator ids. Involution flags are derived metadata: a generator is
// flagged when its square appears literally among the relators.
struct PresentationFP {
  std::vector<std::string> gens;  // single-character names
  std::vector<std::vector<int16_t>> relators;

  size_t ngens() const { return gens.size(); }
  std::vector<bool> involution_flags() const;
};

PresentationFP presentation_from_family(const RelatorFamily &fam);

// G_3 as (C2 wr C2) wr C2 on x,y,z with the wreath commutator relators.
PresentationFP wreath_presentation_g3();
// the tree words x=ada, y=c, z=a realizing it inside the level-3 quotient
std::vector<FreeWord> wreath_generator_words();

// Text format: a "gens: a b c d" line, then one relator per line in the
// word text format; '#' starts a comment line.
PresentationFP parse_presentation(const std::string &text);
std::string serialize_presentation(const PresentationFP &p);

// relator as an abcd/abc word when the generator names allow it
FreeWord relator_as_word(const PresentationFP &p, size_t index);

}  // namespace grigq

#endif
