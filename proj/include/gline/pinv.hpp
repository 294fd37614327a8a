#ifndef GLINE_PINV_HPP_
#define GLINE_PINV_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gline {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[1/p]: num / p^pexp with p prime, pexp >= 0.  Canonical form:
// if num = 0 then pexp = 0; p divides num only when pexp = 0.
class PInvScalar {
 public:
  PInvScalar() = default;
  PInvScalar(int p, BigInt num, long long pexp = 0);

  static PInvScalar integer(int p, BigInt n) { return PInvScalar(p, std::move(n)); }
  // p^e for e of either sign
  static PInvScalar p_power(int p, long long e);

  int prime() const { return p_; }
  const BigInt& num() const { return num_; }
  long long pexp() const { return pexp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return pexp_ == 0; }
  bool is_one() const { return num_ == 1 && pexp_ == 0; }

  PInvScalar operator-() const;
  friend PInvScalar operator+(const PInvScalar& a, const PInvScalar& b);
  friend PInvScalar operator-(const PInvScalar& a, const PInvScalar& b);
  friend PInvScalar operator*(const PInvScalar& a, const PInvScalar& b);
  friend bool operator==(const PInvScalar&, const PInvScalar&) = default;

  // value * p^e
  PInvScalar times_p_power(long long e) const;

  std::string str() const;                       // "n" or "n/p^k"
  static PInvScalar parse(int p, const std::string& text);

 private:
  int p_ = 2;
  BigInt num_ = 0;
  long long pexp_ = 0;
  void canonicalize();
};

// 2x2 matrix over Z[1/p], laid out [[a, c], [b, d]] so the first column is
// (a, b), matching the row-reduction displays. Determinant ad - cb must be 1.
struct PInvMat2 {
  PInvScalar a, c, b, d;

  PInvMat2() = default;
  PInvMat2(PInvScalar a_, PInvScalar c_, PInvScalar b_, PInvScalar d_,
           bool require_det_one = true);

  static PInvMat2 identity(int p);
  static PInvMat2 from_integers(int p, long long a, long long c, long long b,
                                long long d);

  int prime() const { return a.prime(); }
  PInvScalar det() const { return a * d - c * b; }
  bool is_identity() const;
  bool integer_entries() const;

  friend PInvMat2 operator*(const PInvMat2& x, const PInvMat2& y);
  friend bool operator==(const PInvMat2&, const PInvMat2&) = default;

  std::string str() const;  // [[a, c], [b, d]]
};

// Row operation: add coeff times row src to row dst (rows are 0 and 1).
// Determinant-preserving; inverted by negating coeff.
struct RowOp {
  int src = 0;
  int dst = 1;
  PInvScalar coeff;

  RowOp() = default;
  RowOp(int src_, int dst_, PInvScalar c) : src(src_), dst(dst_), coeff(std::move(c)) {}
  RowOp inverted() const { return RowOp(src, dst, -coeff); }
  void apply(PInvMat2& m) const;
  std::string str() const;
};

PInvMat2 apply_ops(PInvMat2 m, const std::vector<RowOp>& ops);

}  // namespace gline

#endif  // GLINE_PINV_HPP_
