#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gline/amenability.hpp"

using namespace gline;

namespace {

FolnerCandidate zd_box(int dim, int n, std::vector<AbelVec> s, Rational eps) {
  FolnerCandidate c{GroupBackend::free_abelian(dim), {}, {}, eps};
  for (const AbelVec& a : s) c.test_set.push_back(a);
  std::vector<long long> v(dim, 0);
  while (true) {
    c.elements.push_back(AbelVec(v));
    int i = 0;
    for (; i < dim; ++i) {
      if (++v[i] < n) break;
      v[i] = 0;
    }
    if (i == dim) break;
  }
  return c;
}

const std::vector<AbelVec> kUnitGens2 = {{1, 0}, {0, 1}};

}  // namespace

TEST_CASE("check_folner exact ratios") {
  SUBCASE("11x11 box passes at eps = 1/10") {
    FolnerCandidate c = zd_box(2, 11, kUnitGens2, Rational(1, 10));
    FolnerReport rep = check_folner(c);
    CHECK(rep.pass);
    CHECK(rep.worst_ratio == Rational(110, 121));  // 11*10 / 11^2
    CHECK(rep.worst_ratio > Rational(9, 10));
  }
  SUBCASE("2x2 box fails with ratio 1/2") {
    FolnerCandidate c = zd_box(2, 2, kUnitGens2, Rational(1, 10));
    FolnerReport rep = check_folner(c);
    CHECK(!rep.pass);
    CHECK(rep.worst_ratio == Rational(1, 2));
  }
  SUBCASE("singleton fails for any eps < 1") {
    FolnerCandidate c = zd_box(1, 1, {{1}}, Rational(99, 100));
    FolnerReport rep = check_folner(c);
    CHECK(!rep.pass);
    CHECK(rep.worst_ratio == 0);
  }
  SUBCASE("monotone in eps") {
    for (int n : {2, 5, 8, 11}) {
      FolnerCandidate c = zd_box(2, n, kUnitGens2, Rational(1, 10));
      bool pass10 = check_folner(c).pass;
      c.eps = Rational(1, 5);
      bool pass5 = check_folner(c).pass;
      if (pass10) CHECK(pass5);  // larger eps is weaker
    }
  }
}

TEST_CASE("folner_box minimality") {
  SUBCASE("d=2, unit generators, eps=1/10 gives n = 11") {
    int n = 0;
    FolnerCandidate c = folner_box(2, kUnitGens2, Rational(1, 10), &n);
    CHECK(n == 11);
    CHECK(check_folner(c).pass);
    FolnerCandidate prev = zd_box(2, 10, kUnitGens2, Rational(1, 10));
    CHECK(!check_folner(prev).pass);
  }
  SUBCASE("eps = 1 is vacuous: n = 1") {
    int n = 0;
    folner_box(2, kUnitGens2, Rational(1), &n);
    CHECK(n == 1);
  }
  SUBCASE("d=1, S = {+-1}, eps = 1/100 gives n = 101") {
    int n = 0;
    FolnerCandidate c = folner_box(1, {{1}, {-1}}, Rational(1, 100), &n);
    CHECK(n == 101);
    CHECK(check_folner(c).pass);
  }
}

TEST_CASE("Ponzi scheme on the free group") {
  SUBCASE("k=2: interior wealth 3, identity wealth 5") {
    PonziReport rep = build_ponzi_free(2, 6);
    CHECK(rep.interior_wealth == 3);
    CHECK(rep.identity_wealth == 5);
    CHECK(rep.min_interior_preimages == 3);  // 2k - 1
    CHECK(rep.displacement_ok);
    CHECK(rep.conservation_ok);
    CHECK(rep.ball_count == static_cast<long long>(ball_size_formula(2, 6)));
  }
  SUBCASE("R=1: only e is interior, wealth 5") {
    PonziReport rep = build_ponzi_free(2, 1);
    CHECK(rep.identity_wealth == 5);  // 4 one-letter words plus its own dollar
    CHECK(rep.conservation_ok);
  }
  SUBCASE("k=3: interior 5 = 2k-1, identity 7 = 2k+1") {
    PonziReport rep = build_ponzi_free(3, 4);
    CHECK(rep.interior_wealth == 5);
    CHECK(rep.identity_wealth == 7);
    CHECK(rep.conservation_ok);
  }
  SUBCASE("boundary words hold 0 after passing inward") {
    PonziReport rep = build_ponzi_free(2, 3);
    for (const auto& [word, wealth] : rep.wealth_table) {
      ReducedWord w = parse_word(word == "e" ? "" : word);
      if (w.length() == 3) CHECK(wealth == 0);
    }
  }
}

TEST_CASE("growth functions") {
  SUBCASE("Z^2 L1 balls: #B(10) = 221 = 2R^2 + 2R + 1") {
    CHECK(zd_ball_size(2, 10) == 221);
    for (int r = 0; r <= 12; ++r)
      CHECK(zd_ball_size(2, r) ==
            static_cast<unsigned long long>(2 * r * r + 2 * r + 1));
    // cross-check against the backend's BFS ball
    GroupBackend fa = GroupBackend::free_abelian(2);
    for (int r = 0; r <= 5; ++r)
      CHECK(zd_ball_size(2, r) == fa.ball(fa.generators(), r).size());
  }
  SUBCASE("Z^d polynomial growth certificate") {
    for (int d : {1, 2, 3}) {
      GrowthReport rep = growth_obstruction_zd(d, 10);
      CHECK(rep.polynomial_certificate);
    }
    // Z^1 doubling ratio approaches 2 (sub-doubling per fixed displacement)
    GrowthReport z1 = growth_obstruction_zd(1, 50);
    CHECK(z1.doubling_ratio == Rational(201, 101));
    CHECK(z1.doubling_ratio < 2);
  }
  SUBCASE("F_2 exponential growth, #B(3) = 53") {
    GrowthReport rep = growth_obstruction_free(2, 6);
    CHECK(rep.ball_sizes[3] == 53);
    CHECK(rep.exponential_certificate);
  }
}

TEST_CASE("paradoxical decomposition of F_2") {
  SUBCASE("checks pass exhaustively on ball(2,4)") {
    ParadoxReport rep = build_paradoxical_f2(4);
    CHECK(rep.partition_ok);
    CHECK(rep.a_cover_ok);
    CHECK(rep.b_cover_ok);
    CHECK(rep.checked == 161);
  }
  SUBCASE("R=3 passes over all 53 words") {
    ParadoxReport rep = build_paradoxical_f2(3);
    CHECK(rep.partition_ok);
    CHECK(rep.a_cover_ok);
    CHECK(rep.b_cover_ok);
    CHECK(rep.checked == 53);
  }
  SUBCASE("membership chase: e lands in a^-1 A1 via a") {
    CHECK(paradox_piece(parse_word("a")) == ParadoxPiece::A1);
    CHECK(paradox_piece(parse_word("a b")) == ParadoxPiece::A1);
    CHECK(paradox_piece(parse_word("A b")) == ParadoxPiece::A2);
    CHECK(paradox_piece(parse_word("b A")) == ParadoxPiece::B1);
    CHECK(paradox_piece(parse_word("B")) == ParadoxPiece::B2);
  }
  SUBCASE("negative control: omitting e breaks the cover") {
    ParadoxReport rep = build_paradoxical_f2(3, false);
    CHECK(!rep.partition_ok);
  }
}

TEST_CASE("F_2 fails every Folner test at eps <= 1/4") {
  F2FolnerFailure rep = folner_failure_f2(4, Rational(1, 4), 200, 31);
  CHECK(rep.all_failed);
  CHECK(rep.structural_bound_ok);
  CHECK(rep.candidates >= 200);
  // the same machinery at a weaker threshold on Z^2 boxes does pass, so the
  // failure above is about F_2, not about the checker
  FolnerCandidate ok = zd_box(2, 11, kUnitGens2, Rational(1, 10));
  CHECK(check_folner(ok).pass);
}
