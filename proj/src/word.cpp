#include "grigq/word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace grigq {

namespace {

const char *kSymbols[4][6] = {
    {"a", "b", "c", "d", nullptr, nullptr},
    {"a", "b", "c", nullptr, nullptr, nullptr},
    {"a", "d", nullptr, nullptr, nullptr, nullptr},
    {"b", "c", "d", "b^a", "c^a", "d^a"},
};

int idx(Alphabet a) { return static_cast<int>(a); }

}  // namespace

int alphabet_size(Alphabet a) {
  switch (a) {
    case Alphabet::abcd: return 4;
    case Alphabet::abc: return 3;
    case Alphabet::ad: return 2;
    case Alphabet::stab6: return 6;
  }
  return 0;
}

const char *alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::abcd: return "abcd";
    case Alphabet::abc: return "abc";
    case Alphabet::ad: return "ad";
    case Alphabet::stab6: return "stab6";
  }
  return "?";
}

FreeWord FreeWord::inverse() const {
  FreeWord r(alphabet);
  r.letters.reserve(letters.size());
  for (size_t i = letters.size(); i-- > 0;) r.letters.push_back(-letters[i]);
  return r;
}

FreeWord FreeWord::operator*(const FreeWord &rhs) const {
  if (alphabet != rhs.alphabet)
    throw std::invalid_argument("word product: alphabet mismatch");
  FreeWord r(alphabet);
  r.letters = letters;
  r.letters.insert(r.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return r;
}

FreeWord FreeWord::pow(int e) const {
  FreeWord base = e >= 0 ? *this : inverse();
  int n = e >= 0 ? e : -e;
  FreeWord r(alphabet);
  for (int i = 0; i < n; ++i)
    r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
  return r;
}

bool FreeWord::operator==(const FreeWord &rhs) const {
  if (alphabet != rhs.alphabet) return false;
  return free_reduce(*this).letters == free_reduce(rhs).letters;
}

namespace {

int gen_from_char(char c, Alphabet a) {
  if (a == Alphabet::stab6)
    throw std::invalid_argument("stab6 words have no single-letter text format");
  char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (int g = 0; g < alphabet_size(a); ++g)
    if (kSymbols[idx(a)][g][0] == low) return g;
  throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet " +
                              alphabet_name(a));
}

// parses one item (letter or parenthesized group), appends to out
size_t parse_item(const std::string &s, size_t pos, Alphabet a,
                  std::vector<int8_t> &out) {
  if (s[pos] == '(') {
    size_t depth = 1, j = pos + 1;
    while (j < s.size() && depth > 0) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      ++j;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parenthesis");
    FreeWord inner = parse_word(s.substr(pos + 1, j - pos - 2), a);
    size_t next = j;
    int e = 1;
    if (next < s.size() && s[next] == '^') {
      size_t k = next + 1;
      size_t eaten = 0;
      e = std::stoi(s.substr(k), &eaten);
      next = k + eaten;
    }
    FreeWord p = inner.pow(e);
    out.insert(out.end(), p.letters.begin(), p.letters.end());
    return next;
  }
  char c = s[pos];
  if (!std::isalpha(static_cast<unsigned char>(c)))
    throw std::invalid_argument(std::string("unexpected character '") + c + "'");
  int g = gen_from_char(c, a);
  int8_t letter = std::isupper(static_cast<unsigned char>(c))
                      ? static_cast<int8_t>(-(g + 1))
                      : static_cast<int8_t>(g + 1);
  size_t next = pos + 1;
  int e = 1;
  if (next < s.size() && s[next] == '^') {
    size_t k = next + 1;
    size_t eaten = 0;
    e = std::stoi(s.substr(k), &eaten);
    next = k + eaten;
  }
  if (e < 0) {
    letter = static_cast<int8_t>(-letter);
    e = -e;
  }
  for (int i = 0; i < e; ++i) out.push_back(letter);
  return next;
}

}  // namespace

FreeWord parse_word(const std::string &text, Alphabet a) {
  FreeWord w(a);
  size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    pos = parse_item(text, pos, a, w.letters);
  }
  return w;
}

std::string to_text(const FreeWord &w) {
  std::string s;
  if (w.alphabet == Alphabet::stab6) {
    for (int8_t l : w.letters) {
      if (!s.empty()) s += '.';
      int g = std::abs(l) - 1;
      s += kSymbols[idx(w.alphabet)][g];
      if (l < 0) s += "^-1";
    }
    return s;
  }
  for (int8_t l : w.letters) {
    char c = kSymbols[idx(w.alphabet)][std::abs(l) - 1][0];
    s += l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return s;
}

FreeWord free_reduce(const FreeWord &w) {
  FreeWord r(w.alphabet);
  for (int8_t l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

FreeWord reduce_involutive(const FreeWord &w) {
  if (w.alphabet != Alphabet::abcd)
    throw std::invalid_argument("reduce_involutive requires the abcd alphabet");
  // ids: a=1, b=2, c=3, d=4 (unsigned; every generator is an involution)
  std::vector<int8_t> st;
  for (int8_t raw : w.letters) {
    int8_t l = static_cast<int8_t>(std::abs(raw));
    st.push_back(l);
    while (st.size() >= 2) {
      int8_t y = st[st.size() - 1], x = st[st.size() - 2];
      if (x == y) {
        st.pop_back();
        st.pop_back();
      } else if (x >= 2 && y >= 2) {
        // bc=d, bd=c, cd=b (and symmetrically): the missing K4 letter
        int8_t z = static_cast<int8_t>(2 + 3 + 4 - x - y);
        st.pop_back();
        st.pop_back();
        st.push_back(z);
      } else {
        break;
      }
    }
  }
  return FreeWord(Alphabet::abcd, std::move(st));
}

FreeWord Substitution::apply(const FreeWord &w) const {
  if (w.alphabet != alphabet)
    throw std::invalid_argument("substitution: alphabet mismatch");
  FreeWord r(alphabet);
  for (int8_t l : w.letters) {
    const FreeWord &im = images[std::abs(l) - 1];
    if (l > 0)
      r.letters.insert(r.letters.end(), im.letters.begin(), im.letters.end());
    else {
      FreeWord inv = im.inverse();
      r.letters.insert(r.letters.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return free_reduce(r);
}

const Substitution &sigma_lysenok() {
  static const Substitution s{Alphabet::abcd,
                              {parse_word("aca", Alphabet::abcd),
                               parse_word("d", Alphabet::abcd),
                               parse_word("b", Alphabet::abcd),
                               parse_word("c", Alphabet::abcd)}};
  return s;
}

const Substitution &sigma_minimal() {
  static const Substitution s{Alphabet::abc,
                              {parse_word("aca", Alphabet::abc),
                               parse_word("bc", Alphabet::abc),
                               parse_word("b", Alphabet::abc)}};
  return s;
}

FreeWord substitute(const Substitution &s, const FreeWord &w, int k) {
  if (k < 0) throw std::invalid_argument("substitute: negative iteration count");
  FreeWord r = free_reduce(w);
  for (int i = 0; i < k; ++i) r = s.apply(r);
  return r;
}

FreeWord lowercase_seed(char family) {
  switch (family) {
    case 'u': return parse_word("(ad)^4", Alphabet::abcd);
    case 'v': return parse_word("(adacac)^4", Alphabet::abcd);
    case 'w': return parse_word("(ac)^4", Alphabet::abcd);
    case 't': return parse_word("(abac)^4", Alphabet::abcd);
  }
  throw std::invalid_argument("unknown lowercase family");
}

FreeWord capital_seed(char family) {
  switch (family) {
    case 'U': return parse_word("(ad)^4a^-4d^-4", Alphabet::abcd);
    case 'V': return parse_word("(adacac)^4a^-12c^-8d^-4", Alphabet::abcd);
    case 'W': return parse_word("(ac)^4a^-4c^-4", Alphabet::abcd);
    case 'T': return parse_word("(abac)^4a^-8b^-4c^-4", Alphabet::abcd);
  }
  throw std::invalid_argument("unknown capital family");
}

FreeWord hopf_L() { return parse_word("b^2c^2d^2(bcd)^-2", Alphabet::abcd); }

std::vector<long> exponent_sums(const FreeWord &w) {
  std::vector<long> sums(alphabet_size(w.alphabet), 0);
  for (int8_t l : w.letters) sums[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return sums;
}

namespace {

void push(std::vector<LabeledWord> &out, const std::string &role, FreeWord w) {
  out.push_back({role, std::move(w)});
}

std::vector<LabeledWord> involution_rows(Alphabet a) {
  std::vector<LabeledWord> out;
  push(out, "a^2", parse_word("a^2", a));
  push(out, "b^2", parse_word("b^2", a));
  push(out, "c^2", parse_word("c^2", a));
  if (a == Alphabet::abcd) push(out, "d^2", parse_word("d^2", a));
  return out;
}

}  // namespace

RelatorFamily relator_family(FamilyKind kind, int n) {
  RelatorFamily fam{kind, n, {}};
  auto &ws = fam.words;
  const Substitution &sig = sigma_lysenok();
  switch (kind) {
    case FamilyKind::gamma: {
      ws = involution_rows(Alphabet::abcd);
      push(ws, "bcd", parse_word("bcd", Alphabet::abcd));
      push(ws, "(ad)^4", parse_word("(ad)^4", Alphabet::abcd));
      break;
    }
    case FamilyKind::thm1: {
      if (n < 3) throw std::out_of_range("thm1 needs n >= 3");
      ws = involution_rows(Alphabet::abcd);
      push(ws, "bcd", parse_word("bcd", Alphabet::abcd));
      for (int i = 0; i <= n - 3; ++i)
        push(ws, "u_" + std::to_string(i), substitute(sig, lowercase_seed('u'), i));
      for (int i = 0; i <= n - 4; ++i)
        push(ws, "v_" + std::to_string(i), substitute(sig, lowercase_seed('v'), i));
      push(ws, "w_" + std::to_string(n), substitute(sig, lowercase_seed('w'), n - 3));
      push(ws, "t_" + std::to_string(n), substitute(sig, lowercase_seed('t'), n - 3));
      break;
    }
    case FamilyKind::thm4: {
      if (n < 3) throw std::out_of_range("thm4 needs n >= 3");
      const Substitution &sm = sigma_minimal();
      ws = involution_rows(Alphabet::abc);
      push(ws, "(bc)^2", parse_word("(bc)^2", Alphabet::abc));
      for (int i = 0; i <= n - 3; ++i)
        push(ws, "u_" + std::to_string(i),
             substitute(sm, parse_word("(abc)^4", Alphabet::abc), i));
      for (int i = 0; i <= n - 4; ++i)
        push(ws, "v_" + std::to_string(i),
             substitute(sm, parse_word("(abcacac)^4", Alphabet::abc), i));
      push(ws, "w_" + std::to_string(n),
           substitute(sm, parse_word("(ac)^4", Alphabet::abc), n - 3));
      push(ws, "t_" + std::to_string(n),
           substitute(sm, parse_word("(abac)^4", Alphabet::abc), n - 3));
      break;
    }
    case FamilyKind::lysenok: {
      if (n < 0) throw std::out_of_range("lysenok needs cutoff >= 0");
      ws = involution_rows(Alphabet::abcd);
      push(ws, "bcd", parse_word("bcd", Alphabet::abcd));
      for (int i = 0; i <= n; ++i)
        push(ws, "u_" + std::to_string(i), substitute(sig, lowercase_seed('u'), i));
      for (int i = 0; i <= n; ++i)
        push(ws, "v_" + std::to_string(i), substitute(sig, lowercase_seed('v'), i));
      break;
    }
    case FamilyKind::hopf: {
      if (n < 3) throw std::out_of_range("hopf needs n >= 3");
      push(ws, "B_1", parse_word("a^2", Alphabet::abcd));
      push(ws, "B_2", parse_word("b^2", Alphabet::abcd));
      push(ws, "B_3", parse_word("c^2", Alphabet::abcd));
      push(ws, "B_4", parse_word("bcd", Alphabet::abcd));
      push(ws, "L", hopf_L());
      for (int i = 0; i <= n - 3; ++i)
        push(ws, "U_" + std::to_string(i), substitute(sig, capital_seed('U'), i));
      for (int i = 0; i <= n - 4; ++i)
        push(ws, "V_" + std::to_string(i), substitute(sig, capital_seed('V'), i));
      push(ws, "W_" + std::to_string(n), substitute(sig, capital_seed('W'), n - 3));
      push(ws, "T_" + std::to_string(n), substitute(sig, capital_seed('T'), n - 3));
      break;
    }
    case FamilyKind::omega: {
      if (n < 1) throw std::out_of_range("omega needs n >= 1");
      for (int i = 1; i <= n; ++i)
        push(ws, "u_" + std::to_string(i), substitute(sig, lowercase_seed('u'), i));
      for (int i = 0; i <= n - 1; ++i)
        push(ws, "v_" + std::to_string(i), substitute(sig, lowercase_seed('v'), i));
      break;
    }
    case FamilyKind::upsilon: {
      if (n < 3) throw std::out_of_range("upsilon needs n >= 3");
      for (int i = 1; i <= n - 3; ++i)
        push(ws, "u_" + std::to_string(i), substitute(sig, lowercase_seed('u'), i));
      for (int i = 0; i <= n - 4; ++i)
        push(ws, "v_" + std::to_string(i), substitute(sig, lowercase_seed('v'), i));
      push(ws, "w_" + std::to_string(n), substitute(sig, lowercase_seed('w'), n - 3));
      push(ws, "t_" + std::to_string(n), substitute(sig, lowercase_seed('t'), n - 3));
      break;
    }
  }
  return fam;
}

}  // namespace grigq
