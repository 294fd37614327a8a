#include "gline/heisenberg.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace gline {

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

HeisElement mul(const HeisElement& g, const HeisElement& h) {
  return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
}

HeisElement inv(const HeisElement& g) {
  return {-g.a, -g.b, -g.c + g.a * g.b};
}

HeisElement commutator(const HeisElement& g, const HeisElement& h) {
  return mul(mul(inv(g), inv(h)), mul(g, h));
}

HeisElement power(const HeisElement& g, long long n) {
  HeisElement base = n < 0 ? inv(g) : g;
  long long cnt = std::llabs(n);
  HeisElement r;
  for (long long i = 0; i < cnt; ++i) r = mul(r, base);
  return r;
}

HeisElement power_word(long long n) {
  HeisElement r = power(heis_y(), n);
  r = mul(r, power(heis_x(), n));
  r = mul(r, power(heis_y(), -n));
  r = mul(r, power(heis_x(), -n));
  return r;
}

Mat3 to_matrix(const HeisElement& g) {
  Mat3 r = Mat3::identity();
  r.m[0][1] = g.a;
  r.m[0][2] = g.c;
  r.m[1][2] = g.b;
  return r;
}

HeisElement from_matrix(const Mat3& m) {
  bool unitri = m.m[0][0] == 1 && m.m[1][1] == 1 && m.m[2][2] == 1 &&
                m.m[1][0] == 0 && m.m[2][0] == 0 && m.m[2][1] == 0;
  if (!unitri)
    throw std::invalid_argument("matrix is not upper unitriangular");
  return {m.m[0][1], m.m[1][2], m.m[0][2]};
}

std::string heis_to_string(const HeisElement& g) {
  if (g == HeisElement{}) return "e";
  std::string out;
  auto part = [&out](char sym, long long e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += sym;
    if (e != 1) out += "^" + std::to_string(e);
  };
  part('y', g.b);
  part('x', g.a);
  part('z', g.c);
  return out;
}

HeisElement parse_heis(const std::string& text) {
  HeisElement g;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
      ++i;
  };
  auto parse_int = [&]() -> long long {
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed integer in Heisenberg literal");
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  skip_ws();
  if (i < text.size() && (text[i] == '(' || text[i] == '[')) {
    // "(a,b,c)" triple form
    ++i;
    g.a = (skip_ws(), parse_int());
    skip_ws();
    if (i >= text.size() || text[i] != ',') throw std::invalid_argument("expected ','");
    ++i;
    g.b = (skip_ws(), parse_int());
    skip_ws();
    if (i >= text.size() || text[i] != ',') throw std::invalid_argument("expected ','");
    ++i;
    g.c = (skip_ws(), parse_int());
    skip_ws();
    if (i >= text.size() || (text[i] != ')' && text[i] != ']'))
      throw std::invalid_argument("expected ')'");
    return g;
  }
  // "y^b x^a z^c" form, factors in any order, combined by multiplication
  HeisElement acc;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char sym = text[i];
    if (sym == 'e') {
      ++i;
      continue;
    }
    if (sym != 'x' && sym != 'y' && sym != 'z')
      throw std::invalid_argument("expected x, y or z in Heisenberg literal");
    ++i;
    long long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = parse_int();
    }
    HeisElement base = sym == 'x' ? heis_x() : sym == 'y' ? heis_y() : heis_z();
    acc = mul(acc, power(base, e));
  }
  return acc;
}

std::string HeisOrder::name() const {
  std::string out = chain == Chain::ZXY ? "zxy" : "zyx";
  out += ':';
  // signs listed in chain order (deepest level first)
  out += sign_z > 0 ? '+' : '-';
  if (chain == Chain::ZXY) {
    out += sign_x > 0 ? '+' : '-';
    out += sign_y > 0 ? '+' : '-';
  } else {
    out += sign_y > 0 ? '+' : '-';
    out += sign_x > 0 ? '+' : '-';
  }
  return out;
}

HeisOrder HeisOrder::parse(const std::string& name) {
  if (name.size() != 7 || name[3] != ':')
    throw std::invalid_argument("order variant must look like zxy:+++");
  HeisOrder o;
  std::string chain = name.substr(0, 3);
  if (chain == "zxy")
    o.chain = Chain::ZXY;
  else if (chain == "zyx")
    o.chain = Chain::ZYX;
  else
    throw std::invalid_argument("unknown chain (want zxy or zyx)");
  auto sgn = [&](char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw std::invalid_argument("sign must be + or -");
  };
  o.sign_z = sgn(name[4]);
  if (o.chain == Chain::ZXY) {
    o.sign_x = sgn(name[5]);
    o.sign_y = sgn(name[6]);
  } else {
    o.sign_y = sgn(name[5]);
    o.sign_x = sgn(name[6]);
  }
  return o;
}

std::vector<HeisOrder> all_heis_orders() {
  std::vector<HeisOrder> out;
  for (int chain = 0; chain < 2; ++chain)
    for (int sz : {1, -1})
      for (int sx : {1, -1})
        for (int sy : {1, -1}) {
          HeisOrder o;
          o.chain = chain == 0 ? HeisOrder::Chain::ZXY : HeisOrder::Chain::ZYX;
          o.sign_z = sz;
          o.sign_x = sx;
          o.sign_y = sy;
          out.push_back(o);
        }
  return out;
}

namespace {

// sign of g under the order's lexicographic rule: most significant nonzero
// coordinate level decides, weighted by the level's sign choice.
int element_sign(const HeisOrder& ord, const HeisElement& g) {
  auto s = [](long long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
  if (ord.chain == HeisOrder::Chain::ZXY) {
    if (g.b != 0) return s(g.b) * ord.sign_y;
    if (g.a != 0) return s(g.a) * ord.sign_x;
    return s(g.c) * ord.sign_z;
  }
  if (g.a != 0) return s(g.a) * ord.sign_x;
  if (g.b != 0) return s(g.b) * ord.sign_y;
  return s(g.c) * ord.sign_z;
}

// chain depth: 0 = identity, 1 = <z> \ {e}, 2 = next level, 3 = top.
int chain_depth(const HeisOrder& ord, const HeisElement& g) {
  if (ord.chain == HeisOrder::Chain::ZXY) {
    if (g.b != 0) return 3;
    if (g.a != 0) return 2;
  } else {
    if (g.a != 0) return 3;
    if (g.b != 0) return 2;
  }
  return g.c != 0 ? 1 : 0;
}

}  // namespace

Ordering compare(const HeisOrder& ord, const HeisElement& g, const HeisElement& h) {
  int s = element_sign(ord, mul(inv(g), h));
  return s > 0 ? Ordering::Less : s < 0 ? Ordering::Greater : Ordering::Equal;
}

bool positive(const HeisOrder& ord, const HeisElement& g) {
  return element_sign(ord, g) > 0;
}

bool archimedean_lt(const HeisOrder& ord, const HeisElement& g, const HeisElement& h) {
  return chain_depth(ord, g) < chain_depth(ord, h);
}

bool archimedean_lt_sampled(const HeisOrder& ord, const HeisElement& g,
                            const HeisElement& h, long long N) {
  HeisElement habs = positive(ord, h) || h == HeisElement{} ? h : inv(h);
  for (long long n = -N; n <= N; ++n) {
    if (compare(ord, power(g, n), habs) != Ordering::Less) return false;
  }
  return true;
}

LemmaVerdict verify_lemma_loheis(const HeisOrder& ord) {
  bool zx = archimedean_lt(ord, heis_z(), heis_x());
  bool zy = archimedean_lt(ord, heis_z(), heis_y());
  if (zx && zy) return LemmaVerdict::Both;
  if (zx) return LemmaVerdict::ZLessX;
  if (zy) return LemmaVerdict::ZLessY;
  return LemmaVerdict::Neither;
}

}  // namespace gline
