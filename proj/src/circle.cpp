#include "gline/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gline {

using boost::multiprecision::cpp_int;

cpp_int rfloor(const Rational& x) {
  cpp_int q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

Rational rfrac(const Rational& x) { return x - Rational(rfloor(x)); }

PLCircleLift::PLCircleLift() : breaks_{Rational(0)}, vals_{Rational(0)} {}

PLCircleLift::PLCircleLift(std::vector<Rational> breakpoints,
                           std::vector<Rational> values)
    : breaks_(std::move(breakpoints)), vals_(std::move(values)) {
  validate();
}

void PLCircleLift::validate() const {
  if (breaks_.empty() || breaks_.size() != vals_.size())
    throw std::invalid_argument("breakpoints and values must match and be nonempty");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (breaks_[i] < 0 || breaks_[i] >= 1)
      throw std::invalid_argument("breakpoints must lie in [0,1)");
    if (i > 0 && !(breaks_[i] > breaks_[i - 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
    if (i > 0 && !(vals_[i] > vals_[i - 1]))
      throw std::invalid_argument("map must be strictly increasing");
  }
  // wrap segment from t_{m-1} to t_0 + 1 must also increase
  if (!(vals_.front() + 1 > vals_.back()))
    throw std::invalid_argument("map must be strictly increasing across the wrap");
}

PLCircleLift PLCircleLift::identity() { return PLCircleLift(); }

PLCircleLift PLCircleLift::rotation(const Rational& alpha) {
  return PLCircleLift({Rational(0)}, {alpha});
}

Rational PLCircleLift::operator()(const Rational& t) const {
  // reduce to [breaks_[0], breaks_[0] + 1) by the degree-one rule
  Rational shift = Rational(rfloor(t - breaks_.front()));
  Rational u = t - shift;
  // find the segment [breaks_[i], breaks_[i+1]) containing u (wrapping)
  std::size_t i = breaks_.size() - 1;
  for (std::size_t j = 0; j + 1 < breaks_.size(); ++j) {
    if (u >= breaks_[j] && u < breaks_[j + 1]) {
      i = j;
      break;
    }
  }
  Rational t0 = breaks_[i], v0 = vals_[i];
  Rational t1, v1;
  if (i + 1 < breaks_.size()) {
    t1 = breaks_[i + 1];
    v1 = vals_[i + 1];
  } else {
    t1 = breaks_.front() + 1;
    v1 = vals_.front() + 1;
  }
  Rational val = v0 + (u - t0) * (v1 - v0) / (t1 - t0);
  return val + shift;
}

Rational PLCircleLift::inverse_at(const Rational& s) const {
  // values over one period run from vals_[0] to vals_[0] + 1
  Rational shift = Rational(rfloor(s - vals_.front()));
  Rational u = s - shift;  // in [v0, v0 + 1)
  std::size_t i = breaks_.size() - 1;
  for (std::size_t j = 0; j + 1 < breaks_.size(); ++j) {
    if (u >= vals_[j] && u < vals_[j + 1]) {
      i = j;
      break;
    }
  }
  Rational t0 = breaks_[i], v0 = vals_[i];
  Rational t1, v1;
  if (i + 1 < breaks_.size()) {
    t1 = breaks_[i + 1];
    v1 = vals_[i + 1];
  } else {
    t1 = breaks_.front() + 1;
    v1 = vals_.front() + 1;
  }
  Rational t = t0 + (u - v0) * (t1 - t0) / (v1 - v0);
  return t + shift;
}

PLCircleLift PLCircleLift::shifted(long long n) const {
  std::vector<Rational> vals = vals_;
  for (Rational& v : vals) v += n;
  return PLCircleLift(breaks_, vals);
}

bool PLCircleLift::is_rotation() const {
  return canonical().breaks_.size() == 1;
}

PLCircleLift PLCircleLift::canonical() const {
  if (breaks_.size() == 1) {
    // lone breakpoint: slope is 1 everywhere; anchor the representation at 0
    Rational alpha = vals_.front() - breaks_.front();
    return PLCircleLift({Rational(0)}, {alpha});
  }
  std::vector<Rational> bs, vs;
  std::size_t m = breaks_.size();
  for (std::size_t i = 0; i < m; ++i) {
    // neighbours with wrap
    Rational tp = i == 0 ? breaks_[m - 1] - 1 : breaks_[i - 1];
    Rational vp = i == 0 ? vals_[m - 1] - 1 : vals_[i - 1];
    Rational tn = i + 1 == m ? breaks_[0] + 1 : breaks_[i + 1];
    Rational vn = i + 1 == m ? vals_[0] + 1 : vals_[i + 1];
    Rational left_slope = (vals_[i] - vp) / (breaks_[i] - tp);
    Rational right_slope = (vn - vals_[i]) / (tn - breaks_[i]);
    if (left_slope != right_slope) {
      bs.push_back(breaks_[i]);
      vs.push_back(vals_[i]);
    }
  }
  if (bs.empty()) {
    Rational alpha = vals_.front() - breaks_.front();
    return PLCircleLift({Rational(0)}, {alpha});
  }
  return PLCircleLift(std::move(bs), std::move(vs));
}

bool operator==(const PLCircleLift& f, const PLCircleLift& g) {
  PLCircleLift cf = f.canonical(), cg = g.canonical();
  return cf.breaks_ == cg.breaks_ && cf.vals_ == cg.vals_;
}

std::string PLCircleLift::str() const {
  std::string out = "{breakpoints: [";
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (i) out += ", ";
    out += breaks_[i].str();
  }
  out += "], values: [";
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (i) out += ", ";
    out += vals_[i].str();
  }
  return out + "]}";
}

PLCircleLift compose(const PLCircleLift& f, const PLCircleLift& g) {
  // slope changes of f o g at: breakpoints of g, and preimages under g of
  // breakpoints of f (each shifted into [0,1))
  std::vector<Rational> cand = g.breakpoints();
  for (const Rational& fb : f.breakpoints()) {
    // s with g(s) = fb + j for the unique j putting s in [0,1)
    Rational s = g.inverse_at(fb);
    s = rfrac(s);
    cand.push_back(s);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rational> vals;
  vals.reserve(cand.size());
  for (const Rational& t : cand) vals.push_back(f(g(t)));
  return PLCircleLift(std::move(cand), std::move(vals)).canonical();
}

PLCircleLift inverse(const PLCircleLift& f) {
  const auto& bs = f.breakpoints();
  const auto& vs = f.values();
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    Rational k = Rational(rfloor(vs[i]));
    pts.emplace_back(vs[i] - k, bs[i] - k);  // inverse graph point, reduced
  }
  std::sort(pts.begin(), pts.end());
  std::vector<Rational> nb, nv;
  for (auto& [b, v] : pts) {
    nb.push_back(b);
    nv.push_back(v);
  }
  return PLCircleLift(std::move(nb), std::move(nv)).canonical();
}

PLCircleLift normalize(const PLCircleLift& f) {
  long long n = -static_cast<long long>(rfloor(f(Rational(0))));
  return f.shifted(n);
}

long long euler_cocycle(const PLCircleLift& g, const PLCircleLift& h) {
  Rational g0 = g(Rational(0)), h0 = h(Rational(0));
  if (g0 < 0 || g0 >= 1 || h0 < 0 || h0 >= 1)
    throw std::invalid_argument("euler_cocycle expects normalized lifts");
  PLCircleLift comp = compose(g, h);
  PLCircleLift norm = normalize(comp);
  long long c = static_cast<long long>(rfloor(comp(Rational(0)) - norm(Rational(0))));
  // the discrepancy between two lifts of the same map is a constant integer
  for (int i = 1; i <= 10; ++i) {
    Rational t(i, 11);
    if (comp(t) - norm(t) != Rational(c))
      throw std::logic_error("cocycle value is not constant in t");
  }
  return c;
}

bool cocycle_identity_check(const PLCircleLift& g, const PLCircleLift& h,
                            const PLCircleLift& k) {
  PLCircleLift gh = normalize(compose(g, h));
  PLCircleLift hk = normalize(compose(h, k));
  long long lhs = euler_cocycle(h, k) - euler_cocycle(gh, k) +
                  euler_cocycle(g, hk) - euler_cocycle(g, h);
  return lhs == 0;
}

FixedPointReport fixed_point_from_primitive(
    const std::vector<PLCircleLift>& generators,
    const std::function<long long(const ReducedWord&)>& phi, int radius) {
  FixedPointReport rep;
  const int k = static_cast<int>(generators.size());
  if (k == 0) throw std::invalid_argument("need at least one generator");

  std::vector<PLCircleLift> adjusted, adjusted_inv;
  for (int i = 0; i < k; ++i) {
    PLCircleLift norm = normalize(generators[i]);
    ReducedWord gen_word = ReducedWord::from_syllables(k, {{i, 1}});
    adjusted.push_back(norm.shifted(phi(gen_word)));
    adjusted_inv.push_back(inverse(adjusted.back()));
  }

  std::vector<ReducedWord> words = ball(k, radius);
  long long max_phi = 0;
  for (const ReducedWord& w : words)
    max_phi = std::max(max_phi, std::llabs(phi(w)));
  rep.bound = Rational(1 + max_phi);

  bool first = true;
  for (const ReducedWord& w : words) {
    Rational p = 0;
    // apply letters right-to-left: the word acts as a composition of lifts
    std::vector<Letter> ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      const PLCircleLift& step = letter_is_inverse(*it)
                                     ? adjusted_inv[letter_gen(*it)]
                                     : adjusted[letter_gen(*it)];
      p = step(p);
    }
    Rational ap = p < 0 ? Rational(-p) : p;
    if (ap > rep.bound) {
      rep.status = FixedPointReport::Status::BoundViolation;
      rep.witness_word = word_to_string(w);
      rep.words_checked++;
      return rep;
    }
    if (first || p > rep.orbit_sup) {
      rep.orbit_sup = p;
      first = false;
    }
    rep.words_checked++;
  }

  // certificate: the sup must be exactly invariant under every adjusted lift
  bool fixed = true;
  for (int i = 0; i < k; ++i)
    if (adjusted[i](rep.orbit_sup) != rep.orbit_sup) fixed = false;
  rep.point = rfrac(rep.orbit_sup);
  rep.status = fixed ? FixedPointReport::Status::FixedPoint
                     : FixedPointReport::Status::Candidate;
  return rep;
}

RotationNumberResult rotation_number(const PLCircleLift& f, int iterations) {
  if (iterations < 1) throw std::invalid_argument("need at least one iteration");
  RotationNumberResult res;
  PLCircleLift g = f;
  for (int q = 1; q <= iterations; ++q) {
    // solve g(t) = t + p segment-wise
    const auto& bs = g.breakpoints();
    const auto& vs = g.values();
    std::size_t m = bs.size();
    for (std::size_t i = 0; i < m && !res.exact; ++i) {
      Rational t0 = bs[i], v0 = vs[i];
      Rational t1 = i + 1 < m ? bs[i + 1] : bs[0] + 1;
      Rational v1 = i + 1 < m ? vs[i + 1] : vs[0] + 1;
      Rational d0 = v0 - t0, d1 = v1 - t1;
      Rational lo = std::min(d0, d1), hi = std::max(d0, d1);
      for (cpp_int p = rfloor(lo); Rational(p) <= hi; ++p) {
        Rational pr(p);
        if (pr < lo || pr > hi) continue;
        Rational t;
        if (d0 == d1) {
          if (d0 != pr) continue;
          t = t0;  // the whole segment is periodic
        } else {
          // d is linear on [t0, t1]: d(t) = d0 + (t - t0)(d1 - d0)/(t1 - t0)
          t = t0 + (pr - d0) * (t1 - t0) / (d1 - d0);
          if (t < t0 || t > t1) continue;
        }
        res.exact = true;
        res.period = q;
        res.translation = static_cast<long long>(p);
        res.value = Rational(p) / q;
        Rational x = rfrac(t);
        for (int j = 0; j < q; ++j) {
          res.orbit.push_back(x);
          x = rfrac(f(x));
        }
        std::sort(res.orbit.begin(), res.orbit.end());
        break;
      }
    }
    if (res.exact) {
      res.lo = res.hi = res.value;
      return res;
    }
    if (q < iterations) g = compose(f, g);
  }
  // no periodic orbit up to N: displacement interval of f^N
  const auto& bs = g.breakpoints();
  const auto& vs = g.values();
  Rational dmin, dmax;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    Rational d = vs[i] - bs[i];
    if (i == 0) {
      dmin = dmax = d;
    } else {
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
  }
  res.lo = dmin / iterations;
  res.hi = dmax / iterations;
  return res;
}

}  // namespace gline
