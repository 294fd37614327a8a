#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gline/matred.hpp"

using namespace gline;

namespace {

// brute-force multiplicative order, as an independent oracle
long long order_mod(long long r, long long q) {
  long long acc = 1 % q;
  for (long long k = 1; k <= q; ++k) {
    acc = acc * (r % q + q) % q;
    if (acc == 1) return k;
  }
  return -1;
}

// seeded random SL(2,Z) matrices as words in the elementary generators
IntMat2 random_sl2(std::uint64_t& state, int word_len) {
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  IntMat2 m = IntMat2::identity();
  for (int i = 0; i < word_len; ++i) {
    long long c = static_cast<long long>(next() % 5) - 2;  // -2..2
    if (next() % 2) {
      IntMat2 u{1, c, 0, 1};
      m = m * u;
    } else {
      IntMat2 v{1, 0, c, 1};
      m = m * v;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("euclid_reduce reproduces the worked 5-op chain") {
  IntMat2 m{13, 31, 5, 12};
  REQUIRE(m.det() == 1);
  EuclidReduction red = euclid_reduce(m);
  REQUIRE(red.ops.size() == 5);
  CHECK(red.intermediates[0] == IntMat2{3, 7, 5, 12});
  CHECK(red.intermediates[1] == IntMat2{3, 7, 2, 5});
  CHECK(red.intermediates[2] == IntMat2{1, 2, 2, 5});
  CHECK(red.intermediates[3] == IntMat2{1, 2, 0, 1});
  CHECK(red.intermediates[4] == IntMat2::identity());
  // replaying inverted ops in reverse order reconstructs the input
  IntMat2 back = IntMat2::identity();
  for (auto it = red.ops.rbegin(); it != red.ops.rend(); ++it)
    it->inverted().apply(back);
  CHECK(back == m);
}

TEST_CASE("euclid_reduce basics") {
  CHECK(euclid_reduce(IntMat2::identity()).ops.empty());
  CHECK_THROWS_AS(euclid_reduce(IntMat2{2, 0, 0, 1}), std::invalid_argument);

  SUBCASE("random matrices reduce to the identity with det 1 throughout") {
    std::uint64_t st = 2024;
    for (int i = 0; i < 100; ++i) {
      IntMat2 m = random_sl2(st, 8);
      EuclidReduction red = euclid_reduce(m);
      IntMat2 cur = m;
      for (std::size_t j = 0; j < red.ops.size(); ++j) {
        red.ops[j].apply(cur);
        CHECK(cur.det() == 1);
        CHECK(cur == red.intermediates[j]);
      }
      CHECK(cur == IntMat2::identity());
    }
  }
  SUBCASE("negative-unit corners terminate") {
    IntMat2 m{-1, 3, 0, -1};
    REQUIRE(m.det() == 1);
    EuclidReduction red = euclid_reduce(m);
    CHECK(apply_ops_int(m, red.ops) == IntMat2::identity());
  }
}

TEST_CASE("euclid op count grows without bound on [[2,1],[1,1]]^n") {
  IntMat2 base{2, 1, 1, 1};
  IntMat2 acc = IntMat2::identity();
  std::size_t prev = 0;
  for (int n = 1; n <= 12; ++n) {
    acc = acc * base;
    std::size_t count = euclid_reduce(acc).ops.size();
    CHECK(count > prev);
    prev = count;
  }
  CHECK(prev >= 12);
}

TEST_CASE("primality and primitive roots") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7 * 13

  SUBCASE("3 mod 7: the paper's power list") {
    std::vector<BigInt> powers = primitive_root_powers(3, 7);
    std::vector<BigInt> expected = {3, 2, 6, 4, 5, 1};
    CHECK(powers == expected);
    CHECK(primitive_root_check(3, 7));
  }
  SUBCASE("1 is never a primitive root for q > 2") {
    CHECK(!primitive_root_check(1, 7));
    CHECK(!primitive_root_check(1, 5));
  }
  SUBCASE("2 mod 13, against the brute-force order oracle") {
    CHECK(order_mod(2, 13) == 12);
    CHECK(primitive_root_check(2, 13));
    CHECK(order_mod(3, 13) == 3);
    CHECK(!primitive_root_check(3, 13));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(primitive_root_check(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(primitive_root_check(7, 7), std::invalid_argument);
  }
}

TEST_CASE("perfect power detection") {
  CHECK(is_perfect_power(4));
  CHECK(is_perfect_power(8));
  CHECK(is_perfect_power(27));
  CHECK(is_perfect_power(-8));   // (-2)^3
  CHECK(is_perfect_power(1));
  CHECK(is_perfect_power(0));
  CHECK(!is_perfect_power(2));
  CHECK(!is_perfect_power(-4));  // no integer square is negative
  CHECK(!is_perfect_power(12));
  CHECK(!is_perfect_power(-1));  // excluded separately in artin_instance
}

TEST_CASE("artin_instance") {
  SUBCASE("(13, 5, 2) hits q = 13 at k = 0") {
    ArtinResult res = artin_instance(13, 5, 2, 100);
    REQUIRE(res.found);
    CHECK(res.q == 13);
    CHECK(res.k == 0);
  }
  SUBCASE("perfect-power r is rejected") {
    CHECK_THROWS_AS(artin_instance(13, 5, 4, 100), std::invalid_argument);
    CHECK_THROWS_AS(artin_instance(13, 5, -1, 100), std::invalid_argument);
  }
  SUBCASE("(1, 4, 3): smallest qualifying prime in 1 + 4k") {
    // oracle: scan 1, 5, 9, 13, ... for a prime with ord(3) = q - 1
    BigInt expected = 0;
    for (long long k = 0; k <= 100 && expected == 0; ++k) {
      long long q = 1 + 4 * k;
      if (q > 1 && is_prime(q) && q % 3 != 0 &&
          order_mod(3, q) == q - 1)
        expected = q;
    }
    ArtinResult res = artin_instance(1, 4, 3, 100);
    REQUIRE(res.found);
    CHECK(res.q == expected);
    CHECK(res.q == 5);  // 3, 9 = 4, 27 = 2, 81 = 1 mod 5: order 4
  }
  SUBCASE("gcd precondition") {
    CHECK_THROWS_AS(artin_instance(6, 4, 2, 100), std::invalid_argument);
  }
  SUBCASE("cap exhaustion reports NotFound") {
    // the progression 1 + 0*k never exceeds 1
    ArtinResult res = artin_instance(1, 0, 2, 50);
    CHECK(!res.found);
  }
  SUBCASE("residue obstruction: 2 is a QR mod every prime = 7 mod 8") {
    // every prime in {7 + 16k} is 7 mod 8, where 2 is a quadratic residue and
    // hence never primitive; the search honestly reports NotFound
    ArtinResult res = artin_instance(7, 16, 2, 2000);
    CHECK(!res.found);
  }
}

TEST_CASE("bounded_reduce") {
  SUBCASE("the worked matrix over Z[1/2]: 5 ops, artin prime 13") {
    PInvMat2 m = PInvMat2::from_integers(2, 13, 31, 5, 12);
    BoundedReduction red = bounded_reduce(m, 100);
    REQUIRE(red.found);
    CHECK(red.ops.size() == 5);
    CHECK(red.artin_prime == 13);
    CHECK(!red.degenerate);
    for (const PInvMat2& inter : red.intermediates)
      CHECK(inter.det().is_one());
    CHECK(red.intermediates.back().is_identity());
    CHECK(apply_ops(m, red.ops).is_identity());
    // inverted ops in reverse order reconstruct the input from the identity
    PInvMat2 back = PInvMat2::identity(2);
    for (auto it = red.ops.rbegin(); it != red.ops.rend(); ++it)
      it->inverted().apply(back);
    CHECK(back == m);
  }
  SUBCASE("identity is a 0-op fast path") {
    CHECK(bounded_reduce(PInvMat2::identity(2), 100).ops.empty());
  }
  SUBCASE("upper-triangular unit fast path") {
    PInvMat2 m = PInvMat2::from_integers(2, 1, 9, 0, 1);
    BoundedReduction red = bounded_reduce(m, 100);
    CHECK(red.degenerate);
    CHECK(red.ops.size() == 1);
    CHECK(apply_ops(m, red.ops).is_identity());
  }
  SUBCASE("negative-unit diagonal takes the flagged pre-step") {
    PInvMat2 m = PInvMat2::from_integers(2, -1, 4, 0, -1);
    BoundedReduction red = bounded_reduce(m, 1000);
    REQUIRE(red.found);
    CHECK(red.degenerate);
    CHECK(red.ops.size() <= 7);  // <= 2 extra beyond the 5-step chain
    CHECK(apply_ops(m, red.ops).is_identity());
  }
  SUBCASE("100 seeded matrices over Z[1/2] reduce in <= 5 ops") {
    // odd b keeps the progression a + kb covering every residue mod 8, so the
    // step-1 prime search is not blocked by the quadratic-residue obstruction
    std::uint64_t st = 77;
    int done = 0;
    while (done < 100) {
      IntMat2 m = random_sl2(st, 7);
      if (m.b == 0 || m.b % 2 == 0) continue;
      PInvMat2 pm(PInvScalar(2, m.a), PInvScalar(2, m.c), PInvScalar(2, m.b),
                  PInvScalar(2, m.d));
      BoundedReduction red = bounded_reduce(pm, 10000);
      REQUIRE(red.found);
      CHECK(red.ops.size() <= 5);
      for (const PInvMat2& inter : red.intermediates)
        CHECK(inter.det().is_one());
      CHECK(red.intermediates.back().is_identity());
      ++done;
    }
  }
  SUBCASE("even-b matrices can hit the residue obstruction and report NotFound") {
    PInvMat2 pm = PInvMat2::from_integers(2, 7, -3, -16, 7);
    BoundedReduction red = bounded_reduce(pm, 2000);
    CHECK(!red.found);  // logged as an Artin-search statistic, not a failure
  }
  SUBCASE("non-integer entries are rejected") {
    PInvMat2 m(PInvScalar(2, 1, 1), PInvScalar(2, 0), PInvScalar(2, 0),
               PInvScalar(2, 2));
    CHECK_THROWS_AS(bounded_reduce(m, 100), std::invalid_argument);
  }
}

TEST_CASE("PInvScalar ring arithmetic") {
  SUBCASE("canonical form strips p from the numerator") {
    PInvScalar s(2, 12, 2);  // 12/4 = 3
    CHECK(s.num() == 3);
    CHECK(s.pexp() == 0);
    PInvScalar z(2, 0, 3);
    CHECK(z.num() == 0);
    CHECK(z.pexp() == 0);
    PInvScalar t(3, 6, 1);  // 6/3 = 2
    CHECK(t.num() == 2);
    CHECK(t.pexp() == 0);
  }
  SUBCASE("ring laws on 10^4 random triples") {
    std::uint64_t st = 5;
    auto next = [&st]() {
      st += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = st;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
    };
    auto rand_scalar = [&]() {
      long long num = static_cast<long long>(next() % 41) - 20;
      long long pe = static_cast<long long>(next() % 4);
      return PInvScalar(3, num, pe);
    };
    for (int i = 0; i < 10000; ++i) {
      PInvScalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == PInvScalar(3, 0));
    }
  }
  SUBCASE("string forms") {
    CHECK(PInvScalar(2, 3, 2).str() == "3/2^2");
    CHECK(PInvScalar(2, 3, 1).str() == "3/2");
    CHECK(PInvScalar(2, -7).str() == "-7");
    CHECK(PInvScalar::parse(2, "3/2^2") == PInvScalar(2, 3, 2));
    CHECK(PInvScalar::parse(2, "-7") == PInvScalar(2, -7));
    CHECK(PInvScalar::parse(5, "2/5") == PInvScalar(5, 2, 1));
  }
}

TEST_CASE("diag conjugation identities") {
  SUBCASE("u = 1, n = 1, p = 2 gives [[1,4],[0,1]]") {
    PInvMat2 m = diag_conjugation(PInvScalar(2, 1), 1, true);
    CHECK(m.a.is_one());
    CHECK(m.c == PInvScalar(2, 4));
    CHECK(m.b.is_zero());
  }
  SUBCASE("n = 0 leaves the input unchanged") {
    PInvMat2 m = diag_conjugation(PInvScalar(3, 5), 0, true);
    CHECK(m.c == PInvScalar(3, 5));
  }
  SUBCASE("lower v = 1, n = 2, p = 3 gives [[1,0],[1/81,1]]") {
    PInvMat2 m = diag_conjugation(PInvScalar(3, 1), 2, false);
    CHECK(m.b == PInvScalar(3, 1, 4));
    CHECK(m.b.str() == "1/3^4");
  }
  SUBCASE("exact match with the triple-product oracle") {
    for (int p : {2, 3, 5})
      for (long long n = 0; n <= 6; ++n)
        for (long long uval : {1, -1, 3, -3})
          for (bool upper : {true, false}) {
            PInvScalar u(p, uval);
            CHECK(diag_conjugation(u, n, upper) ==
                  diag_conjugation_product(u, n, upper));
          }
  }
}

TEST_CASE("word length stats and the Carter-Keller constant") {
  CHECK(carter_keller_bound(3) == 48);
  WordLengthStats stats = elementary_word_length_stats(10);
  CHECK(stats.carter_keller_n3 == 48);
  CHECK(stats.bounded_constant == 5);
  REQUIRE(stats.euclid_counts.size() == 10);
  CHECK(stats.euclid_counts[9] >= 10);
  for (std::size_t i = 1; i < stats.euclid_counts.size(); ++i)
    CHECK(stats.euclid_counts[i] > stats.euclid_counts[i - 1]);
}

TEST_CASE("orbit bound check") {
  SUBCASE("Z^2 translations with generator norms") {
    std::vector<std::vector<QVec>> samples = {
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(-1), Rational(0)}},
        {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(0), Rational(-1)}}};
    OrbitBoundReport rep = orbit_bound_check(samples, {Rational(0), Rational(0)});
    CHECK(rep.ok);
    CHECK(rep.bound == 2);
    CHECK(rep.worst == 2);  // tight witness
  }
  SUBCASE("single cyclic group, sampled powers") {
    std::vector<QVec> powers;
    for (int k = -5; k <= 5; ++k) powers.push_back({Rational(k, 3)});
    OrbitBoundReport rep = orbit_bound_check({powers}, {Rational(0)});
    CHECK(rep.ok);
    CHECK(rep.bound == Rational(5, 3));
  }
  SUBCASE("two commuting rational translations on R^2, 10^3 products") {
    std::vector<QVec> h1, h2;
    for (int k = -16; k <= 16; ++k) {
      h1.push_back({Rational(k, 2), Rational(k, 3)});
      h2.push_back({Rational(-k, 5), Rational(k, 7)});
    }
    OrbitBoundReport rep = orbit_bound_check({h1, h2}, {Rational(0), Rational(0)});
    CHECK(rep.ok);
    CHECK(rep.products_checked == 1089);
    CHECK(rep.worst <= rep.bound);
    CHECK(!rep.witness.empty());  // the extremal product is reported
  }
}
