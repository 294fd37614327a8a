#include "gline/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace gline {

namespace {

void push_reduced(std::vector<Syllable>& out, int gen, long long exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back({gen, exp});
}

}  // namespace

ReducedWord ReducedWord::from_letters(int rank, const std::vector<Letter>& letters) {
  ReducedWord w(rank);
  for (Letter l : letters) {
    int g = letter_gen(l);
    if (g < 0 || g >= rank) throw std::invalid_argument("letter out of rank");
    long long step = letter_is_inverse(l) ? -1 : 1;
    // cancellation may cascade through earlier syllables
    if (!w.syls_.empty() && w.syls_.back().gen == g) {
      w.syls_.back().exp += step;
      if (w.syls_.back().exp == 0) w.syls_.pop_back();
    } else {
      w.syls_.push_back({g, step});
    }
  }
  return w;
}

ReducedWord ReducedWord::from_syllables(int rank, const std::vector<Syllable>& syls) {
  ReducedWord w(rank);
  for (const Syllable& s : syls) {
    if (s.gen < 0 || s.gen >= rank) throw std::invalid_argument("generator out of rank");
    if (!w.syls_.empty() && w.syls_.back().gen == s.gen) {
      w.syls_.back().exp += s.exp;
      if (w.syls_.back().exp == 0) w.syls_.pop_back();
    } else if (s.exp != 0) {
      w.syls_.push_back(s);
    }
  }
  return w;
}

long long ReducedWord::length() const {
  long long n = 0;
  for (const Syllable& s : syls_) n += std::llabs(s.exp);
  return n;
}

std::vector<Letter> ReducedWord::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const Syllable& s : syls_) {
    Letter l = make_letter(s.gen, s.exp < 0);
    for (long long i = 0; i < std::llabs(s.exp); ++i) out.push_back(l);
  }
  return out;
}

bool ReducedWord::operator<(const ReducedWord& other) const {
  long long la = length(), lb = other.length();
  if (la != lb) return la < lb;
  return letters() < other.letters();
}

ReducedWord reduce(int rank, const std::vector<Letter>& letters) {
  return ReducedWord::from_letters(rank, letters);
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<Syllable> out = u.syllables();
  for (const Syllable& s : v.syllables()) push_reduced(out, s.gen, s.exp);
  return ReducedWord::from_syllables(u.rank(), out);
}

ReducedWord invert(const ReducedWord& u) {
  std::vector<Syllable> rev(u.syllables().rbegin(), u.syllables().rend());
  for (Syllable& s : rev) s.exp = -s.exp;
  return ReducedWord::from_syllables(u.rank(), rev);
}

std::vector<ReducedWord> ball(int rank, int radius, std::size_t max_size) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  std::vector<ReducedWord> out;
  out.push_back(ReducedWord(rank));
  std::vector<std::vector<Letter>> layer = {{}};
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (Letter l = 0; l < 2 * rank; ++l) {
        if (!w.empty() && letter_inverse(w.back()) == l) continue;
        std::vector<Letter> nw = w;
        nw.push_back(l);
        if (out.size() + next.size() + 1 > max_size)
          throw std::length_error("ball enumeration cap exceeded");
        next.push_back(std::move(nw));
      }
    }
    for (const auto& w : next) out.push_back(ReducedWord::from_letters(rank, w));
    layer = std::move(next);
  }
  return out;
}

unsigned long long ball_size_formula(int rank, int radius) {
  if (radius == 0) return 1;
  if (rank == 1) return 2ull * radius + 1;
  unsigned long long k = static_cast<unsigned long long>(rank);
  unsigned long long q = 2 * k - 1;
  unsigned long long pw = 1;
  for (int i = 0; i < radius; ++i) pw *= q;
  return 1 + 2 * k * (pw - 1) / (2 * k - 2);
}

ReducedWord parse_word(const std::string& text, int rank) {
  std::vector<Syllable> syls;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      ++i;
      continue;
    }
    int gen;
    bool inv;
    if (ch >= 'a' && ch <= 'z') {
      gen = ch - 'a';
      inv = false;
    } else if (ch >= 'A' && ch <= 'Z') {
      gen = ch - 'A';
      inv = true;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch +
                                  "' in word literal");
    }
    if (gen >= rank) rank = gen + 1;
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed exponent in word literal");
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      exp = neg ? -v : v;
    }
    if (inv) exp = -exp;
    if (exp != 0) syls.push_back({gen, exp});
  }
  return ReducedWord::from_syllables(rank, syls);
}

std::string word_to_string(const ReducedWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>('a' + s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

Quasimorphism Quasimorphism::hom_count(int rank, int gen) {
  if (gen < 0 || gen >= rank) throw std::invalid_argument("generator out of rank");
  Quasimorphism q;
  q.kind_ = Kind::HomCount;
  q.rank_ = rank;
  q.gen_ = gen;
  return q;
}

Quasimorphism Quasimorphism::brooks(const ReducedWord& pattern) {
  if (pattern.is_identity())
    throw std::invalid_argument("Brooks pattern must be nontrivial");
  Quasimorphism q;
  q.kind_ = Kind::Brooks;
  q.rank_ = pattern.rank();
  q.pattern_ = pattern;
  return q;
}

std::string Quasimorphism::name() const {
  if (kind_ == Kind::HomCount)
    return std::string("hom:") + static_cast<char>('a' + gen_);
  return "brooks:" + word_to_string(pattern_);
}

long long greedy_disjoint_count(const std::vector<Letter>& text,
                                const std::vector<Letter>& pattern) {
  if (pattern.empty() || pattern.size() > text.size()) return 0;
  long long n = 0;
  std::size_t i = 0;
  while (i + pattern.size() <= text.size()) {
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + i)) {
      ++n;
      i += pattern.size();
    } else {
      ++i;
    }
  }
  return n;
}

long long eval_quasimorphism(const Quasimorphism& phi, const ReducedWord& x) {
  if (phi.rank() != x.rank()) throw std::invalid_argument("rank mismatch");
  if (phi.kind() == Quasimorphism::Kind::HomCount) {
    long long sum = 0;
    for (const Syllable& s : x.syllables())
      if (s.gen == phi.generator()) sum += s.exp;
    return sum;
  }
  std::vector<Letter> text = x.letters();
  std::vector<Letter> w = phi.pattern().letters();
  std::vector<Letter> winv = invert(phi.pattern()).letters();
  return greedy_disjoint_count(text, w) - greedy_disjoint_count(text, winv);
}

PairSamples PairSamples::exhaustive_ball(int rank, int radius) {
  PairSamples s;
  std::vector<ReducedWord> b = ball(rank, radius);
  s.pairs.reserve(b.size() * b.size());
  for (const ReducedWord& x : b)
    for (const ReducedWord& y : b) s.pairs.emplace_back(x, y);
  return s;
}

ReducedWord random_reduced_word(int rank, int len, std::uint64_t& state) {
  // xorshift-style splitmix step; explicit so results are platform-stable
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::vector<Letter> letters;
  letters.reserve(len);
  for (int i = 0; i < len; ++i) {
    Letter l;
    if (letters.empty()) {
      l = static_cast<Letter>(next() % (2 * rank));
    } else {
      Letter banned = letter_inverse(letters.back());
      l = static_cast<Letter>(next() % (2 * rank - 1));
      if (l >= banned) ++l;
    }
    letters.push_back(l);
  }
  return ReducedWord::from_letters(rank, letters);
}

PairSamples PairSamples::random(int rank, int max_len, int count,
                                std::uint64_t seed) {
  PairSamples s;
  std::uint64_t state = seed;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (int i = 0; i < count; ++i) {
    int lx = static_cast<int>(next() % (max_len + 1));
    int ly = static_cast<int>(next() % (max_len + 1));
    ReducedWord x = random_reduced_word(rank, lx, state);
    ReducedWord y = random_reduced_word(rank, ly, state);
    s.pairs.emplace_back(std::move(x), std::move(y));
  }
  return s;
}

DefectReport defect_scan(const Quasimorphism& phi, const PairSamples& samples) {
  DefectReport rep;
  for (const auto& [x, y] : samples.pairs) {
    long long d = eval_quasimorphism(phi, multiply(x, y)) -
                  eval_quasimorphism(phi, x) - eval_quasimorphism(phi, y);
    if (d < 0) d = -d;
    if (d > rep.max_defect) {
      rep.max_defect = d;
      rep.witness_x = x;
      rep.witness_y = y;
    }
    ++rep.pairs_checked;
  }
  return rep;
}

CommutatorBoundReport commutator_bound_check(const Quasimorphism& phi,
                                             long long C,
                                             const PairSamples& samples) {
  CommutatorBoundReport rep;
  long long phi_e = eval_quasimorphism(phi, ReducedWord(phi.rank()));
  rep.bound = 2 * std::llabs(phi_e) + 5 * C;
  for (const auto& [x, y] : samples.pairs) {
    ReducedWord comm = multiply(multiply(invert(x), invert(y)), multiply(x, y));
    long long v = std::llabs(eval_quasimorphism(phi, comm));
    if (v > rep.worst_value) {
      rep.worst_value = v;
      rep.witness_x = x;
      rep.witness_y = y;
    }
    if (v > rep.bound) rep.ok = false;
  }
  return rep;
}

SeparationWitness separation_witness(int k, int n, int extra) {
  if (k < 2) throw std::invalid_argument("separation witness needs k >= 2");
  if (n < 0) throw std::invalid_argument("separation witness needs n >= 0");
  // x = (a^k b a b^-1)^n (a^-(k-1) b^2 a^-1 b^-1 a^-1 b^-1)^n
  std::vector<Syllable> block1 = {{0, k}, {1, 1}, {0, 1}, {1, -1}};
  std::vector<Syllable> block2 = {{0, -(k - 1)}, {1, 2}, {0, -1},
                                  {1, -1},       {0, -1}, {1, -1}};
  std::vector<Syllable> syls;
  for (int i = 0; i < n; ++i) syls.insert(syls.end(), block1.begin(), block1.end());
  for (int i = 0; i < n; ++i) syls.insert(syls.end(), block2.begin(), block2.end());
  SeparationWitness w;
  w.word = ReducedWord::from_syllables(2, syls);
  for (int j = 0; j <= extra; ++j) {
    ReducedWord pat = ReducedWord::from_syllables(2, {{0, k + j}});
    w.brooks_values.push_back(
        eval_quasimorphism(Quasimorphism::brooks(pat), w.word));
  }
  w.hom_a = eval_quasimorphism(Quasimorphism::hom_count(2, 0), w.word);
  w.hom_b = eval_quasimorphism(Quasimorphism::hom_count(2, 1), w.word);
  return w;
}

}  // namespace gline
