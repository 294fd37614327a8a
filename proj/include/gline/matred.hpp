#ifndef GLINE_MATRED_HPP_
#define GLINE_MATRED_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gline/pinv.hpp"

namespace gline {

using Rational = boost::multiprecision::cpp_rational;

// ----- Euclidean reduction over Z (unbounded op count) -----

struct IntMat2 {
  BigInt a, c, b, d;  // [[a, c], [b, d]]
  static IntMat2 identity() { return {1, 0, 0, 1}; }
  BigInt det() const { return a * d - c * b; }
  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
  friend bool operator==(const IntMat2&, const IntMat2&) = default;
  std::string str() const;
};

struct IntRowOp {
  int src = 0, dst = 1;
  BigInt coeff;
  void apply(IntMat2& m) const;
  IntRowOp inverted() const { return {src, dst, -coeff}; }
};

// The smallest-entry Euclidean procedure: repeatedly subtract a multiple of
// the smaller first-column entry from the larger, then clean up the unit
// diagonal. Applying the ops in order yields the identity; the inverted ops
// in reverse order express m as a product of elementary matrices.
struct EuclidReduction {
  std::vector<IntRowOp> ops;
  std::vector<IntMat2> intermediates;  // after each op
};

EuclidReduction euclid_reduce(const IntMat2& m);
IntMat2 apply_ops_int(IntMat2 m, const std::vector<IntRowOp>& ops);

// ----- primitive roots and the Artin-progression search -----

bool is_prime(const BigInt& q);

// multiplicative order of r mod q equals q - 1 (q prime, q not dividing r)
bool primitive_root_check(const BigInt& r, const BigInt& q);

// the powers r, r^2, ..., r^{q-1} mod q (the paper's displayed list)
std::vector<BigInt> primitive_root_powers(const BigInt& r, const BigInt& q);

// r is a perfect m-th power for some m > 1 (negative r: odd m only)
bool is_perfect_power(const BigInt& r);

struct ArtinResult {
  bool found = false;
  BigInt q;            // the prime a + k*b (or a - k*b, see scan rule)
  long long k = 0;     // progression index
  BigInt coefficient;  // signed multiplier: q = a + coefficient*b
};

// Smallest k in 0..cap such that q = a + k*b is a positive prime with r a
// primitive root mod q; when a + k*b <= 1 the negative-progression value
// a - k*b is tried instead. NotFound is reported, never treated as disproof.
ArtinResult artin_instance(const BigInt& a, const BigInt& b, const BigInt& r,
                           long long cap);

// ----- the five-step bounded reduction over Z[1/p] -----

struct BoundedReduction {
  bool found = true;           // false: Artin search hit the cap
  bool degenerate = false;     // fast path taken (b = 0 input)
  std::vector<RowOp> ops;      // at most 5 (plus flagged degenerate pre-steps)
  std::vector<PInvMat2> intermediates;
  BigInt artin_prime;          // the step-1 prime q (when the main path ran)
  long long discrete_log = 0;  // the step-2 exponent l with p^l = b mod q
};

BoundedReduction bounded_reduce(const PInvMat2& m, long long cap = 10000);

// ----- commutation relation p^n u p^-n (exact form) -----

// upper: diag(p,1/p)^n [[1,u],[0,1]] diag(p,1/p)^-n = [[1, p^{2n} u],[0,1]]
// lower: the transpose analogue [[1,0],[p^{-2n} v,1]]
PInvMat2 diag_conjugation(const PInvScalar& u, long long n, bool upper = true);
// the explicit triple product, as an independent route to the same matrix
PInvMat2 diag_conjugation_product(const PInvScalar& u, long long n, bool upper = true);

// ----- word-length statistics and the Carter-Keller constant -----

struct WordLengthStats {
  std::vector<std::size_t> euclid_counts;  // per sampled matrix
  std::size_t bounded_constant = 5;
  long long carter_keller_n3 = 0;  // (3n^2-n)/2 + 36 at n = 3
};

long long carter_keller_bound(int n);

// Euclid op counts for [[2,1],[1,1]]^1..^nmax plus the bounded-reduction
// constant; demonstrates unbounded growth next to the Z[1/p] bound.
WordLengthStats elementary_word_length_stats(int nmax);

// ----- bounded orbits under isometric actions (exact rational model) -----

using QVec = std::vector<Rational>;

struct OrbitBoundReport {
  bool ok = true;
  Rational bound = 0;  // r_1 + ... + r_n
  Rational worst = 0;  // largest sampled displacement
  QVec witness;        // translation attaining it
  std::size_t products_checked = 0;
};

// Each subgroup sample H_i is a finite set of translations of Q^d acting on
// the L1 metric space Q^d; r_i = max displacement within H_i. Checks that
// every sampled product h_1...h_n moves the basepoint by at most sum r_i.
OrbitBoundReport orbit_bound_check(const std::vector<std::vector<QVec>>& subgroup_samples,
                                   const QVec& basepoint,
                                   std::size_t max_products = 100000);

}  // namespace gline

#endif  // GLINE_MATRED_HPP_
