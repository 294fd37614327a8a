#ifndef GLINE_FREEGROUP_HPP_
#define GLINE_FREEGROUP_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gline {

// A single letter of F_k: code 2*g for the generator g, 2*g+1 for its inverse.
using Letter = int;

constexpr Letter make_letter(int gen, bool inverse) {
  return 2 * gen + (inverse ? 1 : 0);
}
constexpr int letter_gen(Letter l) { return l >> 1; }
constexpr bool letter_is_inverse(Letter l) { return (l & 1) != 0; }
constexpr Letter letter_inverse(Letter l) { return l ^ 1; }

struct Syllable {
  int gen;            // 0..rank-1
  long long exp;      // nonzero
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in F_k, stored run-length encoded by syllable.
// Adjacent syllables have distinct generators and no syllable has exponent 0;
// the empty sequence is the identity.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(int rank) : rank_(rank) {}

  static ReducedWord from_letters(int rank, const std::vector<Letter>& letters);
  // Reduces the given syllable sequence (merging and cancelling as needed).
  static ReducedWord from_syllables(int rank, const std::vector<Syllable>& syls);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syls_; }
  bool is_identity() const { return syls_.empty(); }
  long long length() const;                 // number of letters
  std::vector<Letter> letters() const;      // expanded letter string

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  // length-lexicographic order on letter strings (a < a^-1 < b < b^-1 < ...)
  bool operator<(const ReducedWord& other) const;

 private:
  int rank_ = 2;
  std::vector<Syllable> syls_;
};

ReducedWord reduce(int rank, const std::vector<Letter>& letters);
ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord invert(const ReducedWord& u);

// All reduced words of length <= radius, enumerated in length-lexicographic
// order. Throws std::length_error if the ball exceeds max_size.
std::vector<ReducedWord> ball(int rank, int radius,
                              std::size_t max_size = 1000000);

// 1 + 2k((2k-1)^R - 1)/(2k-2) for k >= 2; 2R+1 for k = 1.
unsigned long long ball_size_formula(int rank, int radius);

// Word literal syntax: letters a b c..., inverses A B C... or a^-1, powers a^3.
ReducedWord parse_word(const std::string& text, int rank = 2);
std::string word_to_string(const ReducedWord& w);

// Quasimorphisms on F_k: exact homomorphisms counting a generator's signed
// exponent sum, and Brooks counting quasimorphisms for a reduced pattern.
class Quasimorphism {
 public:
  enum class Kind { HomCount, Brooks };

  static Quasimorphism hom_count(int rank, int gen);
  static Quasimorphism brooks(const ReducedWord& pattern);  // pattern nontrivial

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  int generator() const { return gen_; }
  const ReducedWord& pattern() const { return pattern_; }
  std::string name() const;  // "hom:a", "brooks:ab", ...

 private:
  Quasimorphism() = default;
  Kind kind_ = Kind::HomCount;
  int rank_ = 2;
  int gen_ = 0;
  ReducedWord pattern_;
};

// HomCount(g): signed exponent sum of g.  Brooks(w): greedy left-to-right
// count of disjoint occurrences of w in the reduced letter string, minus the
// same count for w^-1.
long long eval_quasimorphism(const Quasimorphism& phi, const ReducedWord& x);

// Greedy left-to-right maximal disjoint matching of pattern in text.
long long greedy_disjoint_count(const std::vector<Letter>& text,
                                const std::vector<Letter>& pattern);

// Finite pair sample: either the full cartesian square of a ball, or seeded
// pseudorandom reduced words. Enumeration order is deterministic.
struct PairSamples {
  static PairSamples exhaustive_ball(int rank, int radius);
  static PairSamples random(int rank, int max_len, int count,
                            std::uint64_t seed);
  std::vector<std::pair<ReducedWord, ReducedWord>> pairs;
};

ReducedWord random_reduced_word(int rank, int len, std::uint64_t& state);

struct DefectReport {
  long long max_defect = 0;
  ReducedWord witness_x, witness_y;
  std::size_t pairs_checked = 0;
};

// max |phi(xy) - phi(x) - phi(y)| over the sample, with the first witness
// attaining it in enumeration order.
DefectReport defect_scan(const Quasimorphism& phi, const PairSamples& samples);

struct CommutatorBoundReport {
  bool ok = true;
  long long bound = 0;          // 2|phi(e)| + 5C
  long long worst_value = 0;    // max |phi([x,y])| over the sample
  ReducedWord witness_x, witness_y;
};

// Checks |phi([x,y])| <= 2|phi(e)| + 5C over all sampled pairs.
CommutatorBoundReport commutator_bound_check(const Quasimorphism& phi,
                                             long long C,
                                             const PairSamples& samples);

struct SeparationWitness {
  ReducedWord word;                      // (a^k b a b^-1)^n (a^-(k-1) b^2 a^-1 b^-1 a^-1 b^-1)^n
  std::vector<long long> brooks_values;  // phi_{a^k}, ..., phi_{a^{k+extra}}
  long long hom_a = 0;
  long long hom_b = 0;
};

// Witness that phi_{a^k} is independent of higher Brooks functions and of
// homomorphisms: brooks_values[0] = n while the other entries vanish.
SeparationWitness separation_witness(int k, int n, int extra = 3);

}  // namespace gline

#endif  // GLINE_FREEGROUP_HPP_
