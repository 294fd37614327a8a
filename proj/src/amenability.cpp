#include "gline/amenability.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gline {

FolnerReport check_folner(const FolnerCandidate& c) {
  if (c.elements.empty()) throw std::invalid_argument("F must be nonempty");
  FolnerReport rep;
  std::unordered_set<std::string> fset;
  for (const GroupElement& g : c.elements) fset.insert(c.ambient.key(g));
  const Rational threshold = (1 - c.eps) * Rational(c.elements.size());
  bool first = true;
  for (const GroupElement& a : c.test_set) {
    long long inter = 0;
    for (const GroupElement& f : c.elements)
      if (fset.count(c.ambient.key(c.ambient.multiply(a, f)))) ++inter;
    Rational ratio(inter, c.elements.size());
    if (first || ratio < rep.worst_ratio) {
      rep.worst_ratio = ratio;
      first = false;
    }
    // the eps >= 1 threshold is vacuous: any nonempty F qualifies
    if (c.eps < 1 && !(Rational(inter) > threshold)) {
      rep.pass = false;
      rep.witness = c.ambient.describe(a);
    }
  }
  return rep;
}

namespace {

std::vector<GroupElement> box_elements(int dim, int n) {
  std::vector<GroupElement> out;
  std::vector<long long> v(dim, 0);
  while (true) {
    out.push_back(AbelVec(v));
    int i = 0;
    for (; i < dim; ++i) {
      if (++v[i] < n) break;
      v[i] = 0;
    }
    if (i == dim) break;
  }
  return out;
}

}  // namespace

FolnerCandidate folner_box(int dim, const std::vector<AbelVec>& test_set,
                           const Rational& eps, int* n_out) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  FolnerCandidate c{GroupBackend::free_abelian(dim), {}, {}, eps};
  for (const AbelVec& a : test_set) c.test_set.push_back(a);
  for (int n = 1;; ++n) {
    c.elements = box_elements(dim, n);
    if (check_folner(c).pass) {
      if (n_out) *n_out = n;
      return c;
    }
    if (n > 1000000)
      throw std::length_error("folner_box search cap exceeded");
  }
}

PonziReport build_ponzi_free(int rank, int radius) {
  if (rank < 2) throw std::invalid_argument("need rank >= 2");
  if (radius < 1) throw std::invalid_argument("need radius >= 1");
  PonziReport rep;
  rep.scheme.rank = rank;
  rep.scheme.radius = radius;
  rep.scheme.displacement_set.push_back(ReducedWord(rank));
  for (Letter l = 0; l < 2 * rank; ++l)
    rep.scheme.displacement_set.push_back(
        ReducedWord::from_letters(rank, {l}));

  std::vector<ReducedWord> b = ball(rank, radius);
  GroupBackend fg = GroupBackend::free_group(rank);
  auto drop_last = [&](const ReducedWord& w) {
    if (w.is_identity()) return w;
    std::vector<Letter> ls = w.letters();
    ls.pop_back();
    return ReducedWord::from_letters(rank, ls);
  };

  std::unordered_map<std::string, long long> wealth;
  std::unordered_map<std::string, std::string> word_by_key;
  for (const ReducedWord& w : b) {
    wealth[fg.key(w)] = 0;
    word_by_key[fg.key(w)] = word_to_string(w);
  }
  for (const ReducedWord& w : b) {
    ReducedWord m = drop_last(w);
    rep.scheme.map_keys[fg.key(w)] = fg.key(m);
    wealth[fg.key(m)] += 1;
    // money moves only a bounded distance: M(g) = g * (last letter)^-1 in gS
    ReducedWord disp = multiply(invert(w), m);
    bool in_s = false;
    for (const ReducedWord& s : rep.scheme.displacement_set)
      if (disp == s) in_s = true;
    if (!in_s) rep.displacement_ok = false;
  }

  rep.ball_count = static_cast<long long>(b.size());
  long long total = 0;
  bool first_interior = true;
  for (const ReducedWord& w : b) {
    long long f1 = wealth[fg.key(w)];
    total += f1;
    rep.wealth_table.emplace_back(word_to_string(w), f1);
    if (w.is_identity()) {
      rep.identity_wealth = f1;
    } else if (w.length() <= radius - 1) {
      if (first_interior || f1 < rep.min_interior_preimages) {
        rep.min_interior_preimages = f1;
        first_interior = false;
      }
      rep.interior_wealth = f1;
    }
  }
  rep.conservation_ok = total == rep.ball_count;
  return rep;
}

unsigned long long zd_ball_size(int dim, int radius) {
  // L1 ball count by the lattice-path recurrence
  std::vector<unsigned long long> cur(radius + 1, 1);  // d = 0: only the origin
  for (int d = 1; d <= dim; ++d) {
    std::vector<unsigned long long> next(radius + 1, 0);
    for (int r = 0; r <= radius; ++r) {
      // last coordinate ranges over -r..r
      unsigned long long total = 0;
      for (int t = -r; t <= r; ++t) total += cur[r - std::abs(t)];
      next[r] = total;
    }
    cur = std::move(next);
  }
  return cur[radius];
}

GrowthReport growth_obstruction_zd(int dim, int radius) {
  GrowthReport rep;
  rep.space = "Z^" + std::to_string(dim);
  for (int r = 0; r <= 2 * radius; ++r) rep.ball_sizes.push_back(zd_ball_size(dim, r));
  Rational lhs(rep.ball_sizes[2 * radius], rep.ball_sizes[radius]);
  rep.doubling_ratio = lhs;
  Rational bound = 1;
  Rational factor = Rational(2) * (Rational(1) + Rational(1, radius));
  for (int i = 0; i < dim; ++i) bound *= factor;
  rep.polynomial_certificate = lhs <= bound;
  return rep;
}

GrowthReport growth_obstruction_free(int rank, int radius) {
  GrowthReport rep;
  rep.space = "F_" + std::to_string(rank);
  for (int r = 0; r <= radius; ++r)
    rep.ball_sizes.push_back(ball_size_formula(rank, r));
  rep.exponential_certificate = true;
  for (int r = 1; r + 1 <= radius; ++r)
    if (rep.ball_sizes[r + 1] < 2 * rep.ball_sizes[r])
      rep.exponential_certificate = false;
  if (radius >= 1)
    rep.doubling_ratio = Rational(rep.ball_sizes[radius], rep.ball_sizes[radius / 2]);
  return rep;
}

ParadoxPiece paradox_piece(const ReducedWord& w) {
  if (w.is_identity()) return ParadoxPiece::A1;  // the soln adds e to A1
  Letter first = w.letters().front();
  switch (first) {
    case 0: return ParadoxPiece::A1;  // starts with a
    case 1: return ParadoxPiece::A2;  // starts with a^-1
    case 2: return ParadoxPiece::B1;  // starts with b
    default: return ParadoxPiece::B2;
  }
}

ParadoxReport build_paradoxical_f2(int radius, bool include_identity) {
  ParadoxReport rep;
  std::vector<ReducedWord> b = ball(2, radius);
  ReducedWord a = parse_word("a"), ainv = parse_word("A");
  ReducedWord bb = parse_word("b"), binv = parse_word("B");

  auto in_piece = [&](const ReducedWord& w, ParadoxPiece p) {
    if (w.is_identity()) return include_identity && p == ParadoxPiece::A1;
    return paradox_piece(w) == p;
  };

  // pieces partition the ball: every word in exactly one piece
  for (const ReducedWord& w : b) {
    int count = 0;
    for (ParadoxPiece p : {ParadoxPiece::A1, ParadoxPiece::A2, ParadoxPiece::B1,
                           ParadoxPiece::B2})
      if (in_piece(w, p)) ++count;
    if (count != 1) {
      rep.partition_ok = false;
      rep.witness = word_to_string(w);
    }
    ++rep.checked;
  }

  // F2 = a^-1 A1 u a A2 = b^-1 B1 u b B2, checked where translates stay in range
  for (const ReducedWord& w : b) {
    if (w.length() > radius - 1) continue;
    bool acov = in_piece(multiply(a, w), ParadoxPiece::A1) ||
                in_piece(multiply(ainv, w), ParadoxPiece::A2);
    bool bcov = in_piece(multiply(bb, w), ParadoxPiece::B1) ||
                in_piece(multiply(binv, w), ParadoxPiece::B2);
    if (!acov) {
      rep.a_cover_ok = false;
      rep.witness = word_to_string(w);
    }
    if (!bcov) {
      rep.b_cover_ok = false;
      rep.witness = word_to_string(w);
    }
  }
  return rep;
}

F2FolnerFailure folner_failure_f2(int radius, const Rational& eps,
                                  std::size_t random_subsets, std::uint64_t seed) {
  F2FolnerFailure rep;
  GroupBackend fg = GroupBackend::free_group(2);
  ReducedWord a = parse_word("a"), bgen = parse_word("b");

  auto consider = [&](const std::vector<ReducedWord>& f) {
    if (f.empty()) return;
    ++rep.candidates;
    FolnerCandidate c{fg, {}, {GroupElement(a), GroupElement(bgen)}, eps};
    for (const ReducedWord& w : f) c.elements.push_back(w);
    FolnerReport r = check_folner(c);
    if (r.pass) {
      rep.all_failed = false;
      rep.witness = "candidate of size " + std::to_string(f.size()) + " passed";
    }
    // structural bound: #(aF n F) + #(bF n F) <= #F
    std::unordered_set<std::string> fset;
    for (const ReducedWord& w : f) fset.insert(fg.key(w));
    long long inter_sum = 0;
    for (const ReducedWord& t : {a, bgen})
      for (const ReducedWord& w : f)
        if (fset.count(fg.key(multiply(t, w)))) ++inter_sum;
    if (inter_sum > static_cast<long long>(f.size())) {
      rep.structural_bound_ok = false;
      rep.witness = "structural bound violated at size " + std::to_string(f.size());
    }
  };

  for (int r = 0; r <= radius; ++r) consider(ball(2, r));

  std::uint64_t state = seed;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::vector<ReducedWord> pool = ball(2, radius);
  for (std::size_t i = 0; i < random_subsets; ++i) {
    std::vector<ReducedWord> f;
    std::unordered_set<std::string> used;
    std::size_t size = 5 + next() % pool.size();
    for (std::size_t j = 0; j < size; ++j) {
      const ReducedWord& w = pool[next() % pool.size()];
      if (used.insert(fg.key(w)).second) f.push_back(w);
    }
    consider(f);
  }
  return rep;
}

}  // namespace gline
