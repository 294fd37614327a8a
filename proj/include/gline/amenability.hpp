#ifndef GLINE_AMENABILITY_HPP_
#define GLINE_AMENABILITY_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gline/backend.hpp"

namespace gline {

using Rational = boost::multiprecision::cpp_rational;

// ----- Folner ((S, eps)-invariant) sets -----

struct FolnerCandidate {
  GroupBackend ambient;            // FreeAbelian(d) or FreeGroup(k)
  std::vector<GroupElement> elements;  // finite, nonempty
  std::vector<GroupElement> test_set;  // S
  Rational eps;
};

struct FolnerReport {
  bool pass = true;
  std::string witness;     // failing a in S
  Rational worst_ratio = 1;  // min over S of #(F n aF)/#F
};

// Exact comparison #(F n aF) > (1 - eps) #F for every a in S.  The threshold
// is vacuous when eps >= 1.
FolnerReport check_folner(const FolnerCandidate& c);

// The cube [0,n)^d with n minimal such that check_folner passes.
FolnerCandidate folner_box(int dim, const std::vector<AbelVec>& test_set,
                           const Rational& eps, int* n_out = nullptr);

// ----- the Ponzi scheme on F_k -----

struct PonziScheme {
  int rank = 2;
  int radius = 1;  // domain = ball(rank, radius)
  // M maps each g to the word with its last letter dropped (e is fixed)
  std::unordered_map<std::string, std::string> map_keys;
  std::vector<ReducedWord> displacement_set;  // S: e and the 2k letters
};

struct PonziReport {
  PonziScheme scheme;
  long long interior_wealth = 0;              // f_1 on interior g != e
  long long identity_wealth = 0;              // f_1(e)
  long long min_interior_preimages = 0;
  bool displacement_ok = true;                // M(g) in gS on the whole ball
  bool conservation_ok = true;                // sum of f_1 = #ball
  long long ball_count = 0;
  std::vector<std::pair<std::string, long long>> wealth_table;  // by word
};

// Everyone passes their dollar one step toward the identity; on the interior
// of the ball every vertex collects 2k-1 dollars (2k+1 at e).
PonziReport build_ponzi_free(int rank, int radius);

// ----- growth functions -----

struct GrowthReport {
  std::string space;
  std::vector<unsigned long long> ball_sizes;  // radii 0..R
  bool polynomial_certificate = false;  // Z^d: #B(2R) <= 2^d (1+1/R)^d #B(R)
  bool exponential_certificate = false; // F_k: #B(r+1) >= 2 #B(r) for r >= 1
  Rational doubling_ratio = 0;          // #B(2R)/#B(R) at the top radius
};

unsigned long long zd_ball_size(int dim, int radius);  // L1 ball in Z^d
GrowthReport growth_obstruction_zd(int dim, int radius);
GrowthReport growth_obstruction_free(int rank, int radius);

// ----- the paradoxical decomposition of F_2 -----

// A1 = words starting with a, plus e; A2: a^-1; B1: b; B2: b^-1.
enum class ParadoxPiece { A1, A2, B1, B2 };
ParadoxPiece paradox_piece(const ReducedWord& w);

struct ParadoxReport {
  bool partition_ok = true;      // pieces are disjoint and cover the ball
  bool a_cover_ok = true;        // ball(R-1) inside a^-1 A1 u a A2
  bool b_cover_ok = true;        // ball(R-1) inside b^-1 B1 u b B2
  long long checked = 0;
  std::string witness;
};

// Verifies the two covering identities on ball(2, R), with e assigned to A1;
// include_identity = false is the negative control (cover must fail).
ParadoxReport build_paradoxical_f2(int radius, bool include_identity = true);

// ----- F_2 fails every Folner test with small eps -----

struct F2FolnerFailure {
  bool all_failed = true;          // every sampled candidate fails
  bool structural_bound_ok = true; // #(aF n F) + #(bF n F) <= #F throughout
  std::size_t candidates = 0;
  std::string witness;
};

// Candidates: the balls of radius <= R and seeded pseudorandom subsets.  The
// structural counting bound makes passing impossible for eps <= 1/2, so this
// checks samples, not the full subset lattice.
F2FolnerFailure folner_failure_f2(int radius, const Rational& eps,
                                  std::size_t random_subsets, std::uint64_t seed);

}  // namespace gline

#endif  // GLINE_AMENABILITY_HPP_
