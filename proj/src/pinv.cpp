#include "gline/pinv.hpp"

#include <stdexcept>
#include <vector>

namespace gline {

namespace {

BigInt p_pow(int p, long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

PInvScalar::PInvScalar(int p, BigInt num, long long pexp)
    : p_(p), num_(std::move(num)), pexp_(pexp) {
  if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
  if (pexp < 0) throw std::invalid_argument("pexp must be nonnegative");
  canonicalize();
}

void PInvScalar::canonicalize() {
  if (num_ == 0) {
    pexp_ = 0;
    return;
  }
  while (pexp_ > 0 && num_ % p_ == 0) {
    num_ /= p_;
    --pexp_;
  }
}

PInvScalar PInvScalar::p_power(int p, long long e) {
  if (e >= 0) return PInvScalar(p, p_pow(p, e));
  return PInvScalar(p, 1, -e);
}

PInvScalar PInvScalar::operator-() const {
  PInvScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

PInvScalar operator+(const PInvScalar& a, const PInvScalar& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("mixed Z[1/p] primes");
  long long e = std::max(a.pexp_, b.pexp_);
  BigInt num = a.num_ * p_pow(a.p_, e - a.pexp_) + b.num_ * p_pow(b.p_, e - b.pexp_);
  return PInvScalar(a.p_, std::move(num), e);
}

PInvScalar operator-(const PInvScalar& a, const PInvScalar& b) { return a + (-b); }

PInvScalar operator*(const PInvScalar& a, const PInvScalar& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("mixed Z[1/p] primes");
  return PInvScalar(a.p_, a.num_ * b.num_, a.pexp_ + b.pexp_);
}

PInvScalar PInvScalar::times_p_power(long long e) const {
  if (e >= 0) return PInvScalar(p_, num_ * p_pow(p_, e), pexp_);
  return PInvScalar(p_, num_, pexp_ - e);
}

std::string PInvScalar::str() const {
  std::string n = num_.str();
  if (pexp_ == 0) return n;
  if (pexp_ == 1) return n + "/" + std::to_string(p_);
  return n + "/" + std::to_string(p_) + "^" + std::to_string(pexp_);
}

PInvScalar PInvScalar::parse(int p, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return PInvScalar(p, BigInt(text));
  BigInt num(text.substr(0, slash));
  std::string den = text.substr(slash + 1);
  auto caret = den.find('^');
  int base;
  long long e = 1;
  if (caret == std::string::npos) {
    base = std::stoi(den);
  } else {
    base = std::stoi(den.substr(0, caret));
    e = std::stoll(den.substr(caret + 1));
  }
  if (base != p) throw std::invalid_argument("denominator prime mismatch");
  return PInvScalar(p, std::move(num), e);
}

PInvMat2::PInvMat2(PInvScalar a_, PInvScalar c_, PInvScalar b_, PInvScalar d_,
                   bool require_det_one)
    : a(std::move(a_)), c(std::move(c_)), b(std::move(b_)), d(std::move(d_)) {
  if (require_det_one && !det().is_one())
    throw std::invalid_argument("determinant must be 1, got " + det().str());
}

PInvMat2 PInvMat2::identity(int p) {
  return from_integers(p, 1, 0, 0, 1);
}

PInvMat2 PInvMat2::from_integers(int p, long long a, long long c, long long b,
                                 long long d) {
  return PInvMat2(PInvScalar(p, a), PInvScalar(p, c), PInvScalar(p, b),
                  PInvScalar(p, d));
}

bool PInvMat2::is_identity() const {
  return a.is_one() && d.is_one() && b.is_zero() && c.is_zero();
}

bool PInvMat2::integer_entries() const {
  return a.is_integer() && b.is_integer() && c.is_integer() && d.is_integer();
}

PInvMat2 operator*(const PInvMat2& x, const PInvMat2& y) {
  // rows of x times columns of y; layout [[a, c], [b, d]]
  PInvMat2 r;
  r.a = x.a * y.a + x.c * y.b;
  r.c = x.a * y.c + x.c * y.d;
  r.b = x.b * y.a + x.d * y.b;
  r.d = x.b * y.c + x.d * y.d;
  return r;
}

std::string PInvMat2::str() const {
  return "[[" + a.str() + ", " + c.str() + "], [" + b.str() + ", " + d.str() + "]]";
}

void RowOp::apply(PInvMat2& m) const {
  PInvScalar* rows[2][2] = {{&m.a, &m.c}, {&m.b, &m.d}};
  for (int j = 0; j < 2; ++j)
    *rows[dst][j] = *rows[dst][j] + coeff * *rows[src][j];
}

std::string RowOp::str() const {
  return "R" + std::to_string(dst + 1) + " += (" + coeff.str() + ")*R" +
         std::to_string(src + 1);
}

PInvMat2 apply_ops(PInvMat2 m, const std::vector<RowOp>& ops) {
  for (const RowOp& op : ops) op.apply(m);
  return m;
}

}  // namespace gline
