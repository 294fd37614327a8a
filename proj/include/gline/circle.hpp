#ifndef GLINE_CIRCLE_HPP_
#define GLINE_CIRCLE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gline/freegroup.hpp"

namespace gline {

using Rational = boost::multiprecision::cpp_rational;

boost::multiprecision::cpp_int rfloor(const Rational& x);
Rational rfrac(const Rational& x);  // x - floor(x), in [0, 1)

// Monotone piecewise-linear degree-one lift R -> R of an orientation-
// preserving circle homeomorphism: exact rational breakpoints t_0 < ... <
// t_{m-1} in [0,1), values f(t_i), linear in between, f(t+1) = f(t)+1.
class PLCircleLift {
 public:
  PLCircleLift();  // identity
  PLCircleLift(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static PLCircleLift identity();
  static PLCircleLift rotation(const Rational& alpha);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& values() const { return vals_; }

  Rational operator()(const Rational& t) const;
  Rational inverse_at(const Rational& s) const;  // f^{-1}(s), exact

  PLCircleLift shifted(long long n) const;  // f + n
  bool is_rotation() const;                 // slope 1 everywhere

  // removes collinear breakpoints; pure rotations get the breakpoint {0}
  PLCircleLift canonical() const;
  friend bool operator==(const PLCircleLift& f, const PLCircleLift& g);

  std::string str() const;

 private:
  std::vector<Rational> breaks_;  // sorted, in [0,1), nonempty
  std::vector<Rational> vals_;
  void validate() const;
};

PLCircleLift compose(const PLCircleLift& f, const PLCircleLift& g);  // f o g
PLCircleLift inverse(const PLCircleLift& f);
PLCircleLift normalize(const PLCircleLift& f);  // shift so 0 <= f(0) < 1

// c(g, h) = g(h(0)) - normalize(g o h)(0) for normalized lifts; always 0 or 1.
// Constancy in t is asserted at sample points.
long long euler_cocycle(const PLCircleLift& g, const PLCircleLift& h);

// c(h,k) - c(gh,k) + c(g,hk) - c(g,h) == 0 (exact)
bool cocycle_identity_check(const PLCircleLift& g, const PLCircleLift& h,
                            const PLCircleLift& k);

struct FixedPointReport {
  enum class Status { FixedPoint, Candidate, BoundViolation };
  Status status = Status::Candidate;
  Rational point;          // sup of the sampled adjusted orbit, mod 1
  Rational orbit_sup = 0;  // before reduction
  Rational bound = 0;      // 1 + max |phi| over the sample
  std::string witness_word;  // word violating the bound, when status says so
  std::size_t words_checked = 0;
};

// Adjusted lifts g_hat = (normalized lift) + phi(g) over all reduced words of
// length <= radius in the generators. If the orbit of 0 stays within
// 1 + max|phi| the sup is returned; it is a certified fixed point only when
// every adjusted generator fixes it exactly. Bounded-radius certificate.
FixedPointReport fixed_point_from_primitive(
    const std::vector<PLCircleLift>& generators,
    const std::function<long long(const ReducedWord&)>& phi, int radius = 8);

struct RotationNumberResult {
  bool exact = false;
  Rational value;              // when exact
  Rational lo, hi;             // enclosing interval otherwise (width <= 1/N)
  long long period = 0;        // q for a q-periodic orbit
  long long translation = 0;   // p with f^q(t) = t + p
  std::vector<Rational> orbit; // the finite orbit mod 1, when exact
};

// Exact rotation number via periodic-orbit detection (f^q(t) = t + p solved
// segment-wise), falling back to the displacement interval of f^N.
RotationNumberResult rotation_number(const PLCircleLift& f, int iterations);

}  // namespace gline

#endif  // GLINE_CIRCLE_HPP_
