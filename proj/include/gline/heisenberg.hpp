#ifndef GLINE_HEISENBERG_HPP_
#define GLINE_HEISENBERG_HPP_

#include <array>
#include <string>
#include <vector>

namespace gline {

// 3x3 integer matrix.
struct Mat3 {
  std::array<std::array<long long, 3>, 3> m{};

  static Mat3 identity();
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

// Element of the discrete Heisenberg group in the unique normal form
// y^b x^a z^c.  Multiplication rewrites with x^k y^l = y^l x^k z^{kl}:
//   (a1,b1,c1) * (a2,b2,c2) = (a1+a2, b1+b2, c1+c2 + a1*b2).
struct HeisElement {
  long long a = 0;  // x-exponent
  long long b = 0;  // y-exponent
  long long c = 0;  // z-exponent
  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

inline HeisElement heis_x() { return {1, 0, 0}; }
inline HeisElement heis_y() { return {0, 1, 0}; }
inline HeisElement heis_z() { return {0, 0, 1}; }

HeisElement mul(const HeisElement& g, const HeisElement& h);
HeisElement inv(const HeisElement& g);
HeisElement commutator(const HeisElement& g, const HeisElement& h);  // g^-1 h^-1 g h
HeisElement power(const HeisElement& g, long long n);

// y^n x^n y^-n x^-n, computed by explicit multiplication; equals (0,0,-n^2).
HeisElement power_word(long long n);

// (a,b,c) <-> [[1,a,c],[0,1,b],[0,0,1]]; an injective homomorphism onto the
// upper unitriangular integer matrices.
Mat3 to_matrix(const HeisElement& g);
HeisElement from_matrix(const Mat3& m);  // rejects non-unitriangular input

std::string heis_to_string(const HeisElement& g);   // "y^b x^a z^c"
HeisElement parse_heis(const std::string& text);    // string form or "(a,b,c)"

// Left-invariant orders on H: lexicographic refinements of the chains
// {e} < <z> < <z,x> < H  ("zxy") or  {e} < <z> < <z,y> < H  ("zyx"),
// with a sign choice at each level.
struct HeisOrder {
  enum class Chain { ZXY, ZYX };
  Chain chain = Chain::ZXY;
  int sign_z = 1, sign_x = 1, sign_y = 1;  // +1 or -1

  std::string name() const;  // e.g. "zxy:+++"
  static HeisOrder parse(const std::string& name);
};

// All 16 constructible variants (2 chains x 8 sign choices).
std::vector<HeisOrder> all_heis_orders();

enum class Ordering { Less, Equal, Greater };

// Positivity of g^-1 h under the order's lexicographic rule; exactly
// left-invariant by construction.
Ordering compare(const HeisOrder& ord, const HeisElement& g, const HeisElement& h);
bool positive(const HeisOrder& ord, const HeisElement& g);  // e < g

// g << h  iff  g^n < |h| for all n (decided structurally via chain depth).
bool archimedean_lt(const HeisOrder& ord, const HeisElement& g, const HeisElement& h);
// The definition sampled at n in -N..N; must agree with the structural rule
// whenever it returns false, and is implied by it when true.
bool archimedean_lt_sampled(const HeisOrder& ord, const HeisElement& g,
                            const HeisElement& h, long long N);

enum class LemmaVerdict { ZLessX, ZLessY, Both, Neither };

// Which disjunct of "z << x or z << y" holds; Neither signals a violation.
LemmaVerdict verify_lemma_loheis(const HeisOrder& ord);

}  // namespace gline

#endif  // GLINE_HEISENBERG_HPP_
