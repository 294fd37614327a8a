#include "gline/matred.hpp"

#include <algorithm>
#include <stdexcept>

namespace gline {

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
  IntMat2 r;
  r.a = x.a * y.a + x.c * y.b;
  r.c = x.a * y.c + x.c * y.d;
  r.b = x.b * y.a + x.d * y.b;
  r.d = x.b * y.c + x.d * y.d;
  return r;
}

std::string IntMat2::str() const {
  return "[[" + a.str() + ", " + c.str() + "], [" + b.str() + ", " + d.str() + "]]";
}

void IntRowOp::apply(IntMat2& m) const {
  BigInt* rows[2][2] = {{&m.a, &m.c}, {&m.b, &m.d}};
  for (int j = 0; j < 2; ++j) *rows[dst][j] += coeff * *rows[src][j];
}

IntMat2 apply_ops_int(IntMat2 m, const std::vector<IntRowOp>& ops) {
  for (const IntRowOp& op : ops) op.apply(m);
  return m;
}

EuclidReduction euclid_reduce(const IntMat2& m) {
  if (m.det() != 1)
    throw std::invalid_argument("determinant must be 1, got " + m.det().str());
  EuclidReduction red;
  IntMat2 cur = m;
  auto emit = [&](int src, int dst, BigInt coeff) {
    IntRowOp op{src, dst, std::move(coeff)};
    op.apply(cur);
    red.ops.push_back(op);
    red.intermediates.push_back(cur);
  };
  while (!(cur == IntMat2::identity())) {
    const BigInt u = cur.a;
    const BigInt v = cur.b;
    if (u != 0 && v != 0) {
      // subtract a multiple of the smaller first-column entry from the other;
      // on a tie the second row is reduced, so progress is strict
      if (abs(u) > abs(v)) {
        emit(1, 0, -(u / v));  // truncated quotient: |remainder| < |v|
      } else {
        emit(0, 1, -(v / u));
      }
    } else if (v == 0) {
      // first column (u, 0); det forces u = d = +-1
      if (u == 1) {
        emit(1, 0, -cur.c);  // clear the top-right entry
      } else {
        // u = -1: three operations flip the corner sign
        emit(0, 1, 1);   // (-1, -1)
        emit(1, 0, -2);  // ( 1, -1)
        emit(0, 1, 1);   // ( 1,  0)
      }
    } else {
      // first column (0, v), v = +-1
      emit(1, 0, v > 0 ? 1 : -1);  // make the corner entry 1
    }
  }
  return red;
}

bool is_prime(const BigInt& q) {
  if (q < 2) return false;
  if (q < 4) return true;
  if (q % 2 == 0) return false;
  for (BigInt d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

std::vector<BigInt> primitive_root_powers(const BigInt& r, const BigInt& q) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  BigInt rm = r % q;
  if (rm < 0) rm += q;
  if (rm == 0) throw std::invalid_argument("q must not divide r");
  std::vector<BigInt> powers;
  BigInt acc = 1;
  do {
    acc = acc * rm % q;
    powers.push_back(acc);
  } while (acc != 1);
  return powers;
}

bool primitive_root_check(const BigInt& r, const BigInt& q) {
  return BigInt(primitive_root_powers(r, q).size()) == q - 1;
}

bool is_perfect_power(const BigInt& r) {
  if (r == 0 || r == 1 || r == -1) return r != -1;  // 0 = 0^2, 1 = 1^2
  BigInt ar = abs(r);
  for (unsigned m = 2; (BigInt(1) << m) <= ar; ++m) {
    if (r < 0 && m % 2 == 0) continue;
    // integer m-th root by binary search
    BigInt lo = 1, hi = ar;
    while (lo <= hi) {
      BigInt mid = (lo + hi) / 2;
      BigInt pw = 1;
      bool over = false;
      for (unsigned i = 0; i < m; ++i) {
        pw *= mid;
        if (pw > ar) {
          over = true;
          break;
        }
      }
      if (!over && pw == ar) return true;
      if (over || pw > ar)
        hi = mid - 1;
      else
        lo = mid + 1;
    }
  }
  return false;
}

ArtinResult artin_instance(const BigInt& a, const BigInt& b, const BigInt& r,
                           long long cap) {
  if (gcd(a, b) != 1)
    throw std::invalid_argument("need gcd(a, b) = 1");
  if (r == -1 || is_perfect_power(r))
    throw std::invalid_argument("r must not be -1 or a perfect power");
  ArtinResult res;
  for (long long k = 0; k <= cap; ++k) {
    BigInt q = a + k * b;
    BigInt coeff = k;
    if (q <= 1) {
      q = a - k * b;
      coeff = -k;
      if (q <= 1) continue;
    }
    if (!is_prime(q)) continue;
    BigInt rm = r % q;
    if (rm < 0) rm += q;
    if (rm == 0) continue;
    if (primitive_root_check(r, q)) {
      res.found = true;
      res.q = q;
      res.k = k;
      res.coefficient = coeff;
      return res;
    }
  }
  return res;  // NotFoundWithinCap
}

namespace {

long long discrete_log_p(int p, const BigInt& target, const BigInt& q) {
  // p is a primitive root mod q, so the powers p^1..p^{q-1} reach every
  // nonzero residue; brute-force scan (q is desk-scale)
  BigInt t = target % q;
  if (t < 0) t += q;
  if (t == 0) throw std::invalid_argument("target divisible by q");
  BigInt acc = 1;
  for (BigInt l = 1; l < q; ++l) {
    acc = acc * p % q;
    if (acc == t) return static_cast<long long>(l);
  }
  throw std::logic_error("discrete log not found; p is not primitive mod q");
}

}  // namespace

BoundedReduction bounded_reduce(const PInvMat2& m, long long cap) {
  BoundedReduction red;
  const int p = m.prime();
  if (!m.integer_entries())
    throw std::invalid_argument(
        "bounded_reduce expects integer entries; scale rows first");
  PInvMat2 cur = m;
  auto emit = [&](int src, int dst, PInvScalar coeff) {
    RowOp op(src, dst, std::move(coeff));
    op.apply(cur);
    red.ops.push_back(op);
    red.intermediates.push_back(cur);
    if (!cur.det().is_one())
      throw std::logic_error("row operation broke the determinant");
  };

  if (cur.is_identity()) return red;

  if (cur.b.is_zero()) {
    // det forces a = d = +-1
    red.degenerate = true;
    if (cur.a.is_one()) {
      emit(1, 0, -cur.c);  // [[1,c],[0,1]]: one op
      return red;
    }
    emit(0, 1, PInvScalar(p, 1));  // a = -1: make b nonzero, then run the 5 steps
  }

  // step 1: make the (1,1) entry a prime q with p a primitive root mod q
  ArtinResult art = artin_instance(cur.a.num(), cur.b.num(), p, cap);
  if (!art.found) {
    red.found = false;
    return red;
  }
  red.artin_prime = art.q;
  emit(1, 0, PInvScalar(p, art.coefficient));

  // step 2: p^l = b (mod q); add (p^l - b)/q times row 1 to row 2
  long long l = discrete_log_p(p, cur.b.num(), art.q);
  red.discrete_log = l;
  BigInt pl = 1;
  for (long long i = 0; i < l; ++i) pl *= p;
  BigInt kprime = (pl - cur.b.num()) / art.q;
  emit(0, 1, PInvScalar(p, kprime));

  // step 3: q - (q-1) p^{-l} p^l = 1
  emit(1, 0, PInvScalar(p, -(art.q - 1), l));

  // step 4: clear the bottom-left entry p^l
  emit(0, 1, PInvScalar(p, -pl));

  // step 5: det = 1 forces d = 1; clear the top-right entry
  emit(1, 0, -cur.c);
  if (!cur.is_identity())
    throw std::logic_error("bounded reduction did not reach the identity");
  return red;
}

PInvMat2 diag_conjugation(const PInvScalar& u, long long n, bool upper) {
  const int p = u.prime();
  PInvScalar one(p, 1), zero(p, 0);
  if (upper)
    return PInvMat2(one, u.times_p_power(2 * n), zero, one);
  return PInvMat2(one, zero, u.times_p_power(-2 * n), one);
}

PInvMat2 diag_conjugation_product(const PInvScalar& u, long long n, bool upper) {
  const int p = u.prime();
  PInvScalar one(p, 1), zero(p, 0);
  PInvMat2 diag(PInvScalar::p_power(p, n), zero, zero, PInvScalar::p_power(p, -n));
  PInvMat2 diag_inv(PInvScalar::p_power(p, -n), zero, zero, PInvScalar::p_power(p, n));
  PInvMat2 elem = upper ? PInvMat2(one, u, zero, one) : PInvMat2(one, zero, u, one);
  return diag * elem * diag_inv;
}

long long carter_keller_bound(int n) {
  return (3LL * n * n - n) / 2 + 36;
}

WordLengthStats elementary_word_length_stats(int nmax) {
  WordLengthStats stats;
  stats.carter_keller_n3 = carter_keller_bound(3);
  IntMat2 base{2, 1, 1, 1};
  IntMat2 acc = IntMat2::identity();
  for (int n = 1; n <= nmax; ++n) {
    acc = acc * base;
    stats.euclid_counts.push_back(euclid_reduce(acc).ops.size());
  }
  return stats;
}

OrbitBoundReport orbit_bound_check(const std::vector<std::vector<QVec>>& subgroup_samples,
                                   const QVec& basepoint,
                                   std::size_t max_products) {
  OrbitBoundReport rep;
  if (subgroup_samples.empty()) return rep;
  const std::size_t d = basepoint.size();
  auto l1 = [&](const QVec& v) {
    Rational s = 0;
    for (const Rational& x : v) s += x < 0 ? Rational(-x) : x;
    return s;
  };
  std::size_t total = 1;
  for (const auto& h : subgroup_samples) {
    if (h.empty()) throw std::invalid_argument("empty subgroup sample");
    Rational r = 0;
    for (const QVec& v : h) {
      if (v.size() != d) throw std::invalid_argument("dimension mismatch");
      r = std::max(r, l1(v));
    }
    rep.bound += r;
    if (total > max_products / h.size() + 1) total = max_products;
    else total *= h.size();
  }
  if (total > max_products)
    throw std::length_error("too many products; reduce the sample");

  // exhaustive products, one factor from each sampled subgroup
  std::vector<std::size_t> idx(subgroup_samples.size(), 0);
  while (true) {
    QVec t(d, 0);
    for (std::size_t i = 0; i < subgroup_samples.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) t[j] += subgroup_samples[i][idx[i]][j];
    Rational disp = l1(t);  // translation displacement is basepoint-free
    if (disp > rep.worst) {
      rep.worst = disp;
      rep.witness = t;
    }
    if (disp > rep.bound) rep.ok = false;
    ++rep.products_checked;
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < subgroup_samples[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return rep;
}

}  // namespace gline
