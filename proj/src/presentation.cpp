#include "grigq/presentation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace grigq {

std::vector<bool> PresentationFP::involution_flags() const {
  std::vector<bool> flags(gens.size(), false);
  for (const auto &r : relators)
    if (r.size() == 2 && r[0] == r[1] && r[0] > 0) flags[r[0] - 1] = true;
  return flags;
}

namespace {

int gen_id(const PresentationFP &p, char c) {
  char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (size_t i = 0; i < p.gens.size(); ++i)
    if (p.gens[i].size() == 1 && p.gens[i][0] == low) return static_cast<int>(i) + 1;
  throw std::invalid_argument(std::string("unknown generator '") + c + "'");
}

size_t parse_item(const PresentationFP &p, const std::string &s, size_t pos,
                  std::vector<int16_t> &out);

std::vector<int16_t> parse_rel(const PresentationFP &p, const std::string &s) {
  std::vector<int16_t> out;
  size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    pos = parse_item(p, s, pos, out);
  }
  return out;
}

size_t parse_item(const PresentationFP &p, const std::string &s, size_t pos,
                  std::vector<int16_t> &out) {
  auto read_exp = [&](size_t next, int &e) {
    e = 1;
    if (next < s.size() && s[next] == '^') {
      size_t eaten = 0;
      e = std::stoi(s.substr(next + 1), &eaten);
      next = next + 1 + eaten;
    }
    return next;
  };
  if (s[pos] == '(') {
    size_t depth = 1, j = pos + 1;
    while (j < s.size() && depth > 0) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parenthesis");
    std::vector<int16_t> inner = parse_rel(p, s.substr(pos + 1, j - pos - 2));
    int e = 1;
    size_t next = read_exp(j, e);
    std::vector<int16_t> block = inner;
    if (e < 0) {
      block.clear();
      for (size_t k = inner.size(); k-- > 0;) block.push_back(static_cast<int16_t>(-inner[k]));
      e = -e;
    }
    for (int i = 0; i < e; ++i) out.insert(out.end(), block.begin(), block.end());
    return next;
  }
  char c = s[pos];
  if (!std::isalpha(static_cast<unsigned char>(c)))
    throw std::invalid_argument(std::string("unexpected character '") + c + "'");
  int16_t l = static_cast<int16_t>(gen_id(p, c));
  if (std::isupper(static_cast<unsigned char>(c))) l = static_cast<int16_t>(-l);
  int e = 1;
  size_t next = read_exp(pos + 1, e);
  if (e < 0) {
    l = static_cast<int16_t>(-l);
    e = -e;
  }
  for (int i = 0; i < e; ++i) out.push_back(l);
  return next;
}

}  // namespace

PresentationFP presentation_from_family(const RelatorFamily &fam) {
  PresentationFP p;
  Alphabet a = fam.words.empty() ? Alphabet::abcd : fam.words[0].word.alphabet;
  for (int g = 0; g < alphabet_size(a); ++g) {
    static const char *kNames[2][4] = {{"a", "b", "c", "d"}, {"a", "b", "c", nullptr}};
    if (a == Alphabet::abcd)
      p.gens.push_back(kNames[0][g]);
    else if (a == Alphabet::abc)
      p.gens.push_back(kNames[1][g]);
    else
      throw std::invalid_argument("presentation families live on abcd or abc");
  }
  for (const auto &lw : fam.words) {
    std::vector<int16_t> rel;
    for (int8_t l : lw.word.letters) rel.push_back(l);
    p.relators.push_back(std::move(rel));
  }
  return p;
}

PresentationFP wreath_presentation_g3() {
  PresentationFP p;
  p.gens = {"x", "y", "z"};
  const char *rels[] = {
      "x^2", "y^2", "z^2",
      "XYXyxYxy",  // [x, x^y]
      "YZYzyZyz",  // [y, y^z]
      "XZXzxZxz",  // [x, x^z]
      "XZYzxZyz",  // [x, y^z]
      "YZXzyZxz",  // [y, x^z]
  };
  for (const char *r : rels) p.relators.push_back(parse_rel(p, r));
  return p;
}

std::vector<FreeWord> wreath_generator_words() {
  return {parse_word("ada", Alphabet::abcd), parse_word("c", Alphabet::abcd),
          parse_word("a", Alphabet::abcd)};
}

PresentationFP parse_presentation(const std::string &text) {
  PresentationFP p;
  std::istringstream in(text);
  std::string line;
  bool have_gens = false;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    if (!have_gens) {
      if (line.compare(first, 5, "gens:") != 0)
        throw std::invalid_argument("presentation must start with a 'gens:' line");
      std::istringstream gl(line.substr(first + 5));
      std::string name;
      while (gl >> name) {
        if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0])))
          throw std::invalid_argument("generator names are single lowercase letters");
        p.gens.push_back(name);
      }
      if (p.gens.empty()) throw std::invalid_argument("no generators declared");
      have_gens = true;
      continue;
    }
    p.relators.push_back(parse_rel(p, line.substr(first)));
  }
  if (!have_gens) throw std::invalid_argument("empty presentation");
  return p;
}

std::string serialize_presentation(const PresentationFP &p) {
  std::string out = "gens:";
  for (const auto &g : p.gens) out += " " + g;
  out += "\n";
  for (const auto &r : p.relators) {
    for (int16_t l : r) {
      char c = p.gens[std::abs(l) - 1][0];
      out += l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    out += "\n";
  }
  return out;
}

FreeWord relator_as_word(const PresentationFP &p, size_t index) {
  Alphabet a;
  if (p.gens == std::vector<std::string>{"a", "b", "c", "d"})
    a = Alphabet::abcd;
  else if (p.gens == std::vector<std::string>{"a", "b", "c"})
    a = Alphabet::abc;
  else
    throw std::invalid_argument("relator_as_word needs abcd or abc generators");
  FreeWord w(a);
  for (int16_t l : p.relators[index]) w.letters.push_back(static_cast<int8_t>(l));
  return w;
}

}  // namespace grigq
