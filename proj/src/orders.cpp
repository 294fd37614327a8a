#include "gline/orders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gline {

namespace {

struct ConeSearcher {
  const GroupBackend& backend;
  std::vector<GroupElement> elems;           // ball, BFS order, [0] = identity
  std::vector<int> inv;                      // inverse index
  std::vector<std::vector<int>> prod;        // product index or -1 (outside ball)
  std::size_t step_cap;
  std::size_t steps_used = 0;
  std::size_t branches = 0;
  bool cap_hit = false;

  std::vector<RefutedBranch> refutations;
  std::vector<int> surviving_sign;  // nonempty when a branch survives

  // per-node state is copied down the DFS; balls are small at search scale
  struct State {
    std::vector<int> sign;                      // 0 unassigned, +-1
    std::vector<std::pair<int, int>> reason;    // for positives: product (x,y), or (-1,-1) decision
    std::vector<std::pair<int, int>> decisions; // (index, sign)
    std::vector<int> positives;
  };

  explicit ConeSearcher(const GroupBackend& b, std::size_t cap)
      : backend(b), step_cap(cap) {}

  void build(const std::vector<GroupElement>& generators, int radius) {
    elems = backend.ball(generators, radius);
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
      index[backend.key(elems[i])] = static_cast<int>(i);
    inv.assign(elems.size(), -1);
    prod.assign(elems.size(), std::vector<int>(elems.size(), -1));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto it = index.find(backend.key(backend.invert(elems[i])));
      inv[i] = it == index.end() ? -1 : it->second;
      for (std::size_t j = 0; j < elems.size(); ++j) {
        auto pt = index.find(backend.key(backend.multiply(elems[i], elems[j])));
        prod[i][j] = pt == index.end() ? -1 : pt->second;
      }
    }
  }

  // emits the product steps deriving the positivity of idx (post-order)
  void emit_reason(const State& st, int idx, std::set<int>& done,
                   std::vector<ConeDerivationStep>& out) const {
    if (done.count(idx)) return;
    done.insert(idx);
    auto [x, y] = st.reason[idx];
    if (x < 0) return;  // decision
    emit_reason(st, x, done, out);
    emit_reason(st, y, done, out);
    out.push_back({backend.key(elems[x]), backend.key(elems[y]),
                   backend.key(elems[idx])});
  }

  RefutedBranch make_refutation(const State& st, int px, int py, int clash_idx) const {
    RefutedBranch rb;
    for (auto [i, s] : st.decisions)
      rb.assignment.emplace_back(backend.key(elems[i]), s);
    std::set<int> done;
    emit_reason(st, px, done, rb.derivation);
    emit_reason(st, py, done, rb.derivation);
    int r = prod[px][py];
    if (r == 0) {
      rb.derivation.push_back({backend.key(elems[px]), backend.key(elems[py]), ""});
      rb.clash = "identity";
    } else {
      // r is forced positive but its inverse is already positive
      rb.derivation.push_back({backend.key(elems[px]), backend.key(elems[py]),
                               backend.key(elems[r])});
      emit_reason(st, inv[r], done, rb.derivation);
      rb.derivation.push_back({backend.key(elems[r]), backend.key(elems[inv[r]]), ""});
      rb.clash = backend.key(elems[r]);
    }
    return rb;
  }

  // marks idx positive and closes under in-ball products; returns false on
  // contradiction (refutation recorded)
  bool assign_positive(State& st, int idx, std::pair<int, int> why) {
    std::vector<int> queue = {idx};
    st.sign[idx] = 1;
    st.reason[idx] = why;
    if (inv[idx] == idx) {
      // involution: g = g^-1, so g*g = e
      st.positives.push_back(idx);
      refutations.push_back(make_refutation(st, idx, idx, prod[idx][idx]));
      ++branches;
      return false;
    }
    st.sign[inv[idx]] = -1;
    while (!queue.empty()) {
      int p = queue.back();
      queue.pop_back();
      st.positives.push_back(p);
      for (std::size_t qi = 0; qi < st.positives.size(); ++qi) {
        int q = st.positives[qi];
        for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
          if (++steps_used > step_cap) {
            cap_hit = true;
            return false;
          }
          int r = prod[x][y];
          if (r < 0) continue;
          if (r == 0 || st.sign[r] == -1) {
            refutations.push_back(make_refutation(st, x, y, r));
            ++branches;
            return false;
          }
          if (st.sign[r] == 0) {
            st.reason[r] = {x, y};
            st.sign[r] = 1;
            if (inv[r] == r) {
              // propagated involution: r*r = e
              refutations.push_back(make_refutation(st, r, r, prod[r][r]));
              ++branches;
              return false;
            }
            st.sign[inv[r]] = -1;
            queue.push_back(r);
          }
        }
      }
    }
    return true;
  }

  // returns true if some branch below survives (full consistent assignment)
  bool dfs(State st) {
    if (cap_hit) return false;
    int next = -1;
    for (std::size_t i = 1; i < elems.size(); ++i)
      if (st.sign[i] == 0) {
        next = static_cast<int>(i);
        break;
      }
    if (next < 0) {
      surviving_sign = st.sign;
      ++branches;
      return true;
    }
    for (int s : {1, -1}) {
      State child = st;
      int pos_elem = s > 0 ? next : inv[next];
      child.decisions.emplace_back(next, s);
      if (assign_positive(child, pos_elem, {-1, -1})) {
        if (dfs(std::move(child))) return true;
      }
      if (cap_hit) return false;
    }
    return false;
  }
};

}  // namespace

ConeSearchResult cone_search(const GroupBackend& backend,
                             const std::vector<GroupElement>& generators,
                             int radius, std::size_t step_cap) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  for (const GroupElement& g : generators)
    if (backend.is_identity(g))
      throw std::invalid_argument("identity is not allowed as a generator");

  ConeSearcher s(backend, step_cap);
  s.build(generators, radius);

  ConeSearchResult res;
  res.ball_size = s.elems.size();

  ConeSearcher::State root;
  root.sign.assign(s.elems.size(), 0);
  root.reason.assign(s.elems.size(), {-1, -1});
  bool survived = s.dfs(std::move(root));
  res.branches_explored = s.branches;

  if (s.cap_hit) {
    res.verdict = ConeSearchResult::Verdict::Inconclusive;
    return res;
  }
  if (survived) {
    res.verdict = ConeSearchResult::Verdict::OrderableUpToR;
    for (std::size_t i = 1; i < s.elems.size(); ++i)
      if (s.surviving_sign[i] == 1) res.cone.push_back(s.elems[i]);
    return res;
  }
  res.verdict = ConeSearchResult::Verdict::NotLeftOrderable;
  res.refutations = std::move(s.refutations);
  return res;
}

bool verify_refutation(const GroupBackend& backend,
                       const std::vector<GroupElement>& generators, int radius,
                       const ConeSearchResult& result) {
  if (result.verdict != ConeSearchResult::Verdict::NotLeftOrderable) return false;
  if (result.refutations.empty()) return false;
  std::vector<GroupElement> ball = backend.ball(generators, radius);
  std::unordered_map<std::string, GroupElement> by_key;
  for (const GroupElement& g : ball) by_key[backend.key(g)] = g;
  for (const RefutedBranch& rb : result.refutations) {
    std::set<std::string> positive;
    for (const auto& [k, s] : rb.assignment) {
      auto it = by_key.find(k);
      if (it == by_key.end()) return false;
      positive.insert(s > 0 ? k : backend.key(backend.invert(it->second)));
    }
    if (rb.derivation.empty()) return false;
    for (const ConeDerivationStep& step : rb.derivation) {
      if (!positive.count(step.x) || !positive.count(step.y)) return false;
      auto ix = by_key.find(step.x), iy = by_key.find(step.y);
      if (ix == by_key.end() || iy == by_key.end()) return false;
      GroupElement p = backend.multiply(ix->second, iy->second);
      std::string pk = backend.is_identity(p) ? "" : backend.key(p);
      if (pk != step.product) return false;
      if (!pk.empty()) positive.insert(pk);
    }
    if (!rb.derivation.back().product.empty()) return false;  // must end in e
  }
  return true;
}

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

AxiomCheckReport order_axiom_check(const GroupBackend& backend,
                                   const std::vector<GroupElement>& generators,
                                   const CompareFn& cmp, int radius,
                                   std::size_t samples, std::uint64_t seed) {
  AxiomCheckReport rep;
  std::vector<GroupElement> ball = backend.ball(generators, radius);
  std::uint64_t state = seed;
  auto pick = [&]() -> const GroupElement& {
    return ball[splitmix(state) % ball.size()];
  };
  auto fail = [&](const std::string& axiom, const GroupElement& a,
                  const GroupElement& b) {
    rep.ok = false;
    rep.failed_axiom = axiom;
    rep.witness = backend.describe(a) + " vs " + backend.describe(b);
  };
  for (std::size_t i = 0; i < samples && rep.ok; ++i) {
    const GroupElement& g = pick();
    const GroupElement& h = pick();
    const GroupElement& k = pick();
    Ordering gh = cmp(g, h);
    // totality: equal iff the elements coincide
    if ((gh == Ordering::Equal) != backend.equal(g, h)) {
      fail("totality", g, h);
      break;
    }
    // antisymmetry
    Ordering hg = cmp(h, g);
    bool anti = (gh == Ordering::Equal && hg == Ordering::Equal) ||
                (gh == Ordering::Less && hg == Ordering::Greater) ||
                (gh == Ordering::Greater && hg == Ordering::Less);
    if (!anti) {
      fail("antisymmetry", g, h);
      break;
    }
    // transitivity
    Ordering hk = cmp(h, k);
    if (gh == Ordering::Less && hk == Ordering::Less &&
        cmp(g, k) != Ordering::Less) {
      fail("transitivity", g, k);
      break;
    }
    // left-invariance: cmp(g, h) == cmp(kg, kh)
    if (cmp(backend.multiply(k, g), backend.multiply(k, h)) != gh) {
      fail("left-invariance", g, h);
      break;
    }
    ++rep.triples_checked;
  }
  return rep;
}

CompareFn extension_order(const CompareFn& order_n,
                          const CompareFn& quotient_order,
                          const GroupBackend& gamma,
                          const std::function<GroupElement(const GroupElement&)>& projection) {
  return [=](const GroupElement& g, const GroupElement& h) -> Ordering {
    Ordering q = quotient_order(projection(g), projection(h));
    if (q != Ordering::Equal) return q;
    // gN = hN: compare h^-1 g with e inside N
    GroupElement d = gamma.multiply(gamma.invert(h), g);
    return order_n(d, gamma.identity());
  };
}

std::string LLChainFact::str() const {
  return std::to_string(lhs) + "<<" + std::to_string(rhs);
}

LLChainFact LLChainFact::parse(const std::string& text) {
  auto pos = text.find("<<");
  if (pos == std::string::npos)
    throw std::invalid_argument("fact must look like 2<<3");
  LLChainFact f;
  f.lhs = std::stoi(text.substr(0, pos));
  f.rhs = std::stoi(text.substr(pos + 2));
  if (f.lhs < 1 || f.lhs > 6 || f.rhs < 1 || f.rhs > 6)
    throw std::invalid_argument("fact symbols must be 1..6");
  return f;
}

namespace {

int wrap6(int k) { return (k - 1 + 6) % 6 + 1; }

std::string disjunction_for(int center) {
  LLChainFact left{center, wrap6(center - 1)};
  LLChainFact right{center, wrap6(center + 1)};
  return left.str() + " | " + right.str();
}

}  // namespace

DerivationTrace sl3_contradiction(const LLChainFact& initial) {
  bool forward;
  if (initial == LLChainFact{2, 3})
    forward = true;
  else if (initial == LLChainFact{2, 1})
    forward = false;
  else
    throw std::invalid_argument("initial fact must be 2<<3 or 2<<1");

  DerivationTrace tr;
  std::vector<LLChainFact> facts;
  auto add_fact = [&facts](const LLChainFact& f) { facts.push_back(f); };

  // lemma application 1 on the triple (1,2,3), then the branch assumption
  tr.steps.push_back({"lemma", {"triple(1,2,3)"}, disjunction_for(2)});
  ++tr.lemma_applications;
  tr.steps.push_back({"branch", {disjunction_for(2)}, initial.str()});
  add_fact(initial);

  // five more lemma applications around the cycle, each pruned by asymmetry
  for (int i = 0; i < 5; ++i) {
    int center = forward ? wrap6(3 + i) : wrap6(1 - i);
    std::string disj = disjunction_for(center);
    tr.steps.push_back({"lemma", {"triple(" + std::to_string(wrap6(center - 1)) +
                                  "," + std::to_string(center) + "," +
                                  std::to_string(wrap6(center + 1)) + ")"},
                        disj});
    ++tr.lemma_applications;
    // the known fact into `center` contradicts one disjunct
    LLChainFact known = facts.back();
    LLChainFact pruned{center, known.lhs};      // swap of known
    LLChainFact concluded{center,
                          forward ? wrap6(center + 1) : wrap6(center - 1)};
    (void)pruned;
    tr.steps.push_back({"prune", {disj, known.str()}, concluded.str()});
    add_fact(concluded);
  }

  // chain by transitivity from 2 around to 2 itself
  LLChainFact chained = facts[0];
  for (std::size_t i = 1; i < facts.size(); ++i) {
    LLChainFact next{chained.lhs, facts[i].rhs};
    tr.steps.push_back(
        {"transitivity", {chained.str(), facts[i].str()}, next.str()});
    chained = next;
  }
  tr.steps.push_back({"contradiction", {chained.str()}, "contradiction"});
  tr.closed = chained.lhs == chained.rhs;
  tr.final_fact = chained;
  return tr;
}

bool replay_sl3_trace(const DerivationTrace& trace, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  std::set<std::string> facts;
  std::set<std::string> disjunctions;
  bool closed = false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& st = trace.steps[i];
    if (closed) return fail("step after contradiction");
    if (st.rule == "lemma") {
      if (st.premises.size() != 1) return fail("lemma needs one triple premise");
      const std::string& p = st.premises[0];
      if (p.size() < 9 || p.substr(0, 7) != "triple(" || p.back() != ')')
        return fail("malformed triple premise");
      std::string body = p.substr(7, p.size() - 8);
      int a, b, c;
      if (sscanf(body.c_str(), "%d,%d,%d", &a, &b, &c) != 3)
        return fail("malformed triple premise");
      if (a != wrap6(b - 1) || c != wrap6(b + 1))
        return fail("triple is not (k-1,k,k+1) mod 6");
      if (st.conclusion != disjunction_for(b))
        return fail("lemma conclusion is not the LOHeis disjunction");
      disjunctions.insert(st.conclusion);
    } else if (st.rule == "branch") {
      if (st.premises.size() != 1 || !disjunctions.count(st.premises[0]))
        return fail("branch premise is not an established disjunction");
      std::string disj = st.premises[0];
      auto bar = disj.find(" | ");
      std::string left = disj.substr(0, bar), right = disj.substr(bar + 3);
      if (st.conclusion != left && st.conclusion != right)
        return fail("branch conclusion is not a disjunct");
      facts.insert(st.conclusion);
    } else if (st.rule == "prune") {
      if (st.premises.size() != 2) return fail("prune needs two premises");
      const std::string& disj = st.premises[0];
      const std::string& known = st.premises[1];
      if (!disjunctions.count(disj)) return fail("prune premise 1 not established");
      if (!facts.count(known)) return fail("prune premise 2 not derived");
      auto bar = disj.find(" | ");
      if (bar == std::string::npos) return fail("malformed disjunction");
      std::string left = disj.substr(0, bar), right = disj.substr(bar + 3);
      LLChainFact kf = LLChainFact::parse(known);
      // asymmetry: a << b forbids b << a
      std::string forbidden = LLChainFact{kf.rhs, kf.lhs}.str();
      std::string concluded;
      if (left == forbidden)
        concluded = right;
      else if (right == forbidden)
        concluded = left;
      else
        return fail("known fact does not contradict either disjunct");
      if (st.conclusion != concluded) return fail("prune conclusion mismatch");
      facts.insert(concluded);
    } else if (st.rule == "transitivity") {
      if (st.premises.size() != 2) return fail("transitivity needs two premises");
      if (!facts.count(st.premises[0]) || !facts.count(st.premises[1]))
        return fail("transitivity premise not derived");
      LLChainFact f1 = LLChainFact::parse(st.premises[0]);
      LLChainFact f2 = LLChainFact::parse(st.premises[1]);
      if (f1.rhs != f2.lhs) return fail("transitivity premises do not chain");
      if (st.conclusion != LLChainFact{f1.lhs, f2.rhs}.str())
        return fail("transitivity conclusion mismatch");
      facts.insert(st.conclusion);
    } else if (st.rule == "contradiction") {
      if (st.premises.size() != 1 || !facts.count(st.premises[0]))
        return fail("contradiction premise not derived");
      LLChainFact f = LLChainFact::parse(st.premises[0]);
      if (f.lhs != f.rhs) return fail("contradiction premise is not i<<i");
      if (st.conclusion != "contradiction") return fail("bad conclusion");
      closed = true;
    } else {
      return fail("unknown rule: " + st.rule);
    }
  }
  if (!closed) return fail("trace does not close with a contradiction");
  return true;
}

MatN sl3_position_matrix(int index) {
  static const int pos[6][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}};
  if (index < 1 || index > 6) throw std::invalid_argument("position must be 1..6");
  MatN m = MatN::identity(3);
  m.at(pos[index - 1][0], pos[index - 1][1]) = 1;
  return m;
}

bool heis_triple_ok(int i, int j, int k, int* sign) {
  MatN X = sl3_position_matrix(i);
  MatN Z = sl3_position_matrix(j);
  MatN Y = sl3_position_matrix(k);
  MatN comm = matn_inverse(X) * matn_inverse(Y) * X * Y;
  int s = 0;
  if (comm == Z)
    s = 1;
  else if (comm == matn_inverse(Z))
    s = -1;
  if (sign) *sign = s;
  if (s == 0) return false;
  // z must be central in the copy
  return Z * X == X * Z && Z * Y == Y * Z;
}

HeisTripleReport verify_heis_triples() {
  HeisTripleReport rep;
  for (int k = 1; k <= 6; ++k) {
    int i = wrap6(k - 1), j = wrap6(k + 1);
    int sign = 0;
    bool ok = heis_triple_ok(i, k, j, &sign);
    rep.commutator_signs.push_back(sign);
    if (!ok) {
      rep.ok = false;
      rep.detail += "triple (" + std::to_string(i) + "," + std::to_string(k) +
                    "," + std::to_string(j) + ") failed; ";
    }
  }
  return rep;
}

}  // namespace gline
