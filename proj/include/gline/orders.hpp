#ifndef GLINE_ORDERS_HPP_
#define GLINE_ORDERS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gline/backend.hpp"

namespace gline {

// ----- positive-cone search (semigroup criterion, bounded radius) -----

// one closure step: x * y = product, all three inside the search ball
struct ConeDerivationStep {
  std::string x, y, product;  // element keys; product == "" means identity
};

// a refuted sign assignment: the DFS trail plus the product steps that
// derive the identity (or a positive/negative clash) from the positives
struct RefutedBranch {
  std::vector<std::pair<std::string, int>> assignment;  // (element key, +-1)
  std::vector<ConeDerivationStep> derivation;
  std::string clash;  // "identity" or the key of the element assigned both signs
};

struct ConeSearchResult {
  enum class Verdict { OrderableUpToR, NotLeftOrderable, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  // for OrderableUpToR: the closed positive cone (element descriptions)
  std::vector<GroupElement> cone;
  // for NotLeftOrderable: one refutation per explored branch, exhaustive
  std::vector<RefutedBranch> refutations;
  std::size_t ball_size = 0;
  std::size_t branches_explored = 0;
};

// Explores sign assignments on the nontrivial elements of the radius-R ball,
// closing each candidate cone under in-ball products. NotLeftOrderable is
// returned only when every branch of the assignment tree derives e.
// "OrderableUpToR" is a bounded certificate, not a proof of orderability.
ConeSearchResult cone_search(const GroupBackend& backend,
                             const std::vector<GroupElement>& generators,
                             int radius, std::size_t step_cap = 2000000);

// replays every refutation of a NotLeftOrderable certificate
bool verify_refutation(const GroupBackend& backend,
                       const std::vector<GroupElement>& generators, int radius,
                       const ConeSearchResult& result);

// ----- order-axiom checking over a comparison oracle -----

using CompareFn = std::function<Ordering(const GroupElement&, const GroupElement&)>;

struct AxiomCheckReport {
  bool ok = true;
  std::string failed_axiom;  // "totality", "antisymmetry", "transitivity", "left-invariance"
  std::string witness;
  std::size_t triples_checked = 0;
};

// Verifies totality, antisymmetry, transitivity and left-invariance of cmp on
// pseudorandom triples drawn from the radius-`radius` ball.
AxiomCheckReport order_axiom_check(const GroupBackend& backend,
                                   const std::vector<GroupElement>& generators,
                                   const CompareFn& cmp, int radius,
                                   std::size_t samples, std::uint64_t seed);

// ----- extension of orders along N -> Gamma -> Gamma/N -----

// g < h  iff  gN <* hN, or gN = hN and h^-1 g <_N e.  projection maps into the
// quotient backend; order_n compares elements of N inside Gamma.
CompareFn extension_order(const CompareFn& order_n,
                          const CompareFn& quotient_order,
                          const GroupBackend& gamma,
                          const std::function<GroupElement(const GroupElement&)>& projection);

// ----- the SL(3,Z) six-Heisenberg-copies contradiction, symbolically -----

struct LLChainFact {
  int lhs = 0, rhs = 0;  // 1..6, meaning <lhs> << <rhs>
  friend bool operator==(const LLChainFact&, const LLChainFact&) = default;
  std::string str() const;
  static LLChainFact parse(const std::string& text);  // "2<<3"
};

struct TraceStep {
  std::string rule;                   // lemma | branch | prune | transitivity | contradiction
  std::vector<std::string> premises;  // earlier conclusions (or the triple, for lemma)
  std::string conclusion;
};

struct DerivationTrace {
  std::vector<TraceStep> steps;
  bool closed = false;
  int lemma_applications = 0;
  LLChainFact final_fact;  // i << i when closed
};

// Derives a contradiction from either initial branch of Lemma LOHeis on the
// triple (1,2,3): initial must be 2<<1 or 2<<3. Every step is one of three
// rules: lemma-disjunction, asymmetry-pruning, transitivity.
DerivationTrace sl3_contradiction(const LLChainFact& initial);

// Independent replay: accepts a trace iff every step is justified by the three
// rules alone and the final step closes with i << i.  Shares no state with the
// engine above.
bool replay_sl3_trace(const DerivationTrace& trace, std::string* error = nullptr);

// ----- exact verification of the six Heisenberg copies in SL(3,Z) -----

struct HeisTripleReport {
  bool ok = true;
  // per k = 1..6: +1 if [pos(k-1), pos(k+1)] = pos(k), -1 if it equals
  // pos(k)^-1, 0 on mismatch
  std::vector<int> commutator_signs;
  std::string detail;
};

// elementary matrix at the paper's position index 1..6
MatN sl3_position_matrix(int index);

HeisTripleReport verify_heis_triples();
// same check for an arbitrary triple of position indices (negative controls)
bool heis_triple_ok(int i, int j, int k, int* sign = nullptr);

}  // namespace gline

#endif  // GLINE_ORDERS_HPP_
