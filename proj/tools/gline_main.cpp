// gline: exact verifiers and constructors for orders, bounded generation,
// amenability witnesses and circle dynamics.
//
// Exit codes: 0 pass/success, 1 verified negative, 2 inconclusive or
// resource cap, 3 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gline/json_io.hpp"

using namespace gline;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Options {
  bool json = false;
  std::uint64_t seed = 12345;
  long long cap = 10000;
  int radius = 4;
};

// values may come from files via @path
std::string arg_or_file(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::invalid_argument("cannot read file: " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(const Options& opt, const Json& doc, const std::string& text) {
  if (opt.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

Quasimorphism parse_phi(const std::string& spec) {
  if (spec.rfind("hom:", 0) == 0) {
    std::string g = spec.substr(4);
    if (g.size() != 1 || g[0] < 'a' || g[0] > 'z')
      throw std::invalid_argument("hom generator must be a single letter");
    int gen = g[0] - 'a';
    return Quasimorphism::hom_count(std::max(2, gen + 1), gen);
  }
  if (spec.rfind("brooks:", 0) == 0) {
    ReducedWord w = parse_word(spec.substr(7));
    return Quasimorphism::brooks(w);
  }
  throw std::invalid_argument("phi must be hom:<letter> or brooks:<word>");
}

GroupBackend parse_backend(const std::string& spec,
                           std::vector<GroupElement>* gens) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  if (kind == "heisenberg") {
    GroupBackend b = GroupBackend::heisenberg();
    *gens = b.generators();
    return b;
  }
  if (colon == std::string::npos)
    throw std::invalid_argument("backend must be kind:param");
  std::string param = spec.substr(colon + 1);
  if (kind == "freegroup") {
    GroupBackend b = GroupBackend::free_group(std::stoi(param));
    *gens = b.generators();
    return b;
  }
  if (kind == "freeabelian") {
    GroupBackend b = GroupBackend::free_abelian(std::stoi(param));
    *gens = b.generators();
    return b;
  }
  if (kind == "matrix") {
    Json j = Json::parse(arg_or_file(param));
    std::vector<MatN> mats;
    for (const Json& jm : j) {
      MatN m;
      m.n = static_cast<int>(jm.size());
      for (const Json& row : jm)
        for (const Json& v : row) m.a.push_back(v.get<long long>());
      mats.push_back(std::move(m));
    }
    if (mats.empty()) throw std::invalid_argument("need at least one generator");
    GroupBackend b = GroupBackend::int_matrix_group(mats[0].n, mats);
    *gens = b.generators();
    return b;
  }
  throw std::invalid_argument("unknown backend kind: " + kind);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact computational witnesses for group orders, bounded "
               "generation, amenability and circle dynamics"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "emit a JSON report");
  app.add_option("--seed", opt.seed, "PRNG seed");
  app.add_option("--cap", opt.cap, "resource cap");

  int exit_code = kExitPass;

  // ---------- reduce ----------
  auto* reduce_cmd = app.add_subcommand("reduce", "row-reduce SL(2) matrices");
  reduce_cmd->require_subcommand(1);
  std::string reduce_matrix;
  int reduce_p = 2;

  auto* reduce_euclid = reduce_cmd->add_subcommand(
      "euclid", "Euclidean reduction over Z (unbounded op count)");
  reduce_euclid->add_option("--matrix", reduce_matrix, "[[a,c],[b,d]]")->required();
  reduce_euclid->callback([&] {
    IntMat2 m = parse_int_mat2(arg_or_file(reduce_matrix));
    EuclidReduction red = euclid_reduce(m);
    Json doc{{"schema", 1},
             {"command", "reduce euclid"},
             {"input", int_mat2_to_json(m)},
             {"op_count", red.ops.size()},
             {"trace", euclid_to_json(red)}};
    std::ostringstream text;
    text << "reduced to identity in " << red.ops.size() << " row operations\n";
    for (std::size_t i = 0; i < red.ops.size(); ++i)
      text << "  " << i + 1 << ". R" << red.ops[i].dst + 1 << " += ("
           << red.ops[i].coeff.str() << ")*R" << red.ops[i].src + 1 << "  ~> "
           << red.intermediates[i].str() << "\n";
    print_report(opt, doc, text.str());
  });

  auto* reduce_bounded = reduce_cmd->add_subcommand(
      "bounded", "five-step reduction over Z[1/p]");
  reduce_bounded->add_option("--matrix", reduce_matrix, "[[a,c],[b,d]]")->required();
  reduce_bounded->add_option("--p", reduce_p, "the inverted prime")->required();
  reduce_bounded->callback([&] {
    PInvMat2 m = parse_pinv_mat2(arg_or_file(reduce_matrix), reduce_p);
    BoundedReduction red = bounded_reduce(m, opt.cap);
    Json doc{{"schema", 1},
             {"command", "reduce bounded"},
             {"p", reduce_p},
             {"input", pinv_mat2_to_json(m)},
             {"result", bounded_to_json(red)}};
    std::ostringstream text;
    if (!red.found) {
      text << "Artin search found no prime within cap " << opt.cap
           << " (NotFoundWithinCap)\n";
      exit_code = kExitInconclusive;
    } else {
      text << "reduced to identity in " << red.ops.size()
           << " row operations over Z[1/" << reduce_p << "]\n";
      for (std::size_t i = 0; i < red.ops.size(); ++i)
        text << "  " << i + 1 << ". R" << red.ops[i].dst + 1 << " += ("
             << red.ops[i].coeff.str() << ")*R" << red.ops[i].src + 1
             << "  ~> " << red.intermediates[i].str() << "\n";
    }
    print_report(opt, doc, text.str());
  });

  // ---------- artin ----------
  auto* artin_cmd =
      app.add_subcommand("artin", "prime search in an arithmetic progression");
  long long artin_a = 0, artin_b = 0, artin_r = 0;
  artin_cmd->add_option("--a", artin_a, "progression start")->required();
  artin_cmd->add_option("--b", artin_b, "progression step")->required();
  artin_cmd->add_option("--r", artin_r, "primitive-root candidate")->required();
  artin_cmd->callback([&] {
    ArtinResult res = artin_instance(artin_a, artin_b, artin_r, opt.cap);
    Json doc{{"schema", 1},
             {"command", "artin"},
             {"a", artin_a},
             {"b", artin_b},
             {"r", artin_r},
             {"cap", opt.cap},
             {"found", res.found}};
    std::ostringstream text;
    if (res.found) {
      doc["q"] = res.q.str();
      doc["k"] = res.k;
      std::vector<BigInt> powers = primitive_root_powers(artin_r, res.q);
      Json jp = Json::array();
      for (const BigInt& p : powers) jp.push_back(p.str());
      doc["powers"] = jp;
      text << "q = " << res.q.str() << " (k = " << res.k << "); " << artin_r
           << " is a primitive root mod q\n";
    } else {
      text << "no qualifying prime within cap " << opt.cap
           << " (NotFoundWithinCap)\n";
      exit_code = kExitInconclusive;
    }
    print_report(opt, doc, text.str());
  });

  // ---------- quasi ----------
  auto* quasi_cmd = app.add_subcommand("quasi", "quasimorphisms on free groups");
  quasi_cmd->require_subcommand(1);
  std::string quasi_phi, quasi_word;
  int quasi_radius = 4, quasi_maxlen = 6, quasi_k = 2, quasi_n = 1, quasi_extra = 3;
  int quasi_random = 0;
  long long quasi_bound = -1;

  auto* quasi_eval = quasi_cmd->add_subcommand("eval", "evaluate phi on a word");
  quasi_eval->add_option("--phi", quasi_phi, "hom:<g> or brooks:<word>")->required();
  quasi_eval->add_option("--word", quasi_word, "word literal")->required();
  quasi_eval->callback([&] {
    Quasimorphism phi = parse_phi(arg_or_file(quasi_phi));
    ReducedWord x = parse_word(arg_or_file(quasi_word), phi.rank());
    long long v = eval_quasimorphism(phi, x);
    Json doc{{"schema", 1},
             {"command", "quasi eval"},
             {"word", word_to_string(x)},
             {"phi", phi.name()},
             {"value", v}};
    print_report(opt, doc, phi.name() + "(" + word_to_string(x) + ") = " +
                               std::to_string(v) + "\n");
  });

  auto* quasi_defect = quasi_cmd->add_subcommand("defect", "max defect over samples");
  quasi_defect->add_option("--phi", quasi_phi)->required();
  quasi_defect->add_option("--radius", quasi_radius, "exhaustive ball radius");
  quasi_defect->add_option("--random", quasi_random, "random pair count instead");
  quasi_defect->add_option("--maxlen", quasi_maxlen, "max random word length");
  quasi_defect->add_option("--bound", quasi_bound,
                           "fail (exit 1) if the defect exceeds this");
  quasi_defect->callback([&] {
    Quasimorphism phi = parse_phi(arg_or_file(quasi_phi));
    PairSamples samples =
        quasi_random > 0
            ? PairSamples::random(phi.rank(), quasi_maxlen, quasi_random, opt.seed)
            : PairSamples::exhaustive_ball(phi.rank(), quasi_radius);
    DefectReport rep = defect_scan(phi, samples);
    Json doc{{"schema", 1},
             {"command", "quasi defect"},
             {"phi", phi.name()},
             {"pairs", rep.pairs_checked},
             {"defect_max", rep.max_defect},
             {"witness",
              {{"x", word_to_string(rep.witness_x)},
               {"y", word_to_string(rep.witness_y)}}}};
    std::ostringstream text;
    text << "max defect " << rep.max_defect << " over " << rep.pairs_checked
         << " pairs (witness x = " << word_to_string(rep.witness_x)
         << ", y = " << word_to_string(rep.witness_y) << ")\n";
    if (quasi_bound >= 0 && rep.max_defect > quasi_bound) {
      text << "defect exceeds the requested bound " << quasi_bound << "\n";
      exit_code = kExitNegative;
    }
    print_report(opt, doc, text.str());
  });

  auto* quasi_sep =
      quasi_cmd->add_subcommand("separate", "separation witness for phi_{a^k}");
  quasi_sep->add_option("--k", quasi_k)->required();
  quasi_sep->add_option("--n", quasi_n)->required();
  quasi_sep->add_option("--extra", quasi_extra, "higher powers to tabulate");
  quasi_sep->callback([&] {
    SeparationWitness w = separation_witness(quasi_k, quasi_n, quasi_extra);
    Json brooks = Json::array();
    for (std::size_t j = 0; j < w.brooks_values.size(); ++j)
      brooks.push_back(Json{
          {"pattern", "a^" + std::to_string(quasi_k + static_cast<int>(j))},
          {"value", w.brooks_values[j]}});
    Json doc{{"schema", 1},
             {"command", "quasi separate"},
             {"word", word_to_string(w.word)},
             {"brooks", brooks},
             {"hom_a", w.hom_a},
             {"hom_b", w.hom_b}};
    std::ostringstream text;
    text << "x = " << word_to_string(w.word) << "\n";
    for (std::size_t j = 0; j < w.brooks_values.size(); ++j)
      text << "  brooks(a^" << quasi_k + j << ") = " << w.brooks_values[j] << "\n";
    text << "  hom(a) = " << w.hom_a << ", hom(b) = " << w.hom_b << "\n";
    print_report(opt, doc, text.str());
  });

  // ---------- heis ----------
  auto* heis_cmd = app.add_subcommand("heis", "discrete Heisenberg group");
  heis_cmd->require_subcommand(1);
  std::string heis_g, heis_h, heis_order = "all";
  int heis_kmax = 10, heis_nmax = 20;

  auto* heis_mul = heis_cmd->add_subcommand("mul", "multiply two elements");
  heis_mul->add_option("--lhs", heis_g, "y^b x^a z^c or (a,b,c)")->required();
  heis_mul->add_option("--rhs", heis_h)->required();
  heis_mul->callback([&] {
    HeisElement g = parse_heis(arg_or_file(heis_g));
    HeisElement h = parse_heis(arg_or_file(heis_h));
    HeisElement p = mul(g, h);
    Json doc{{"schema", 1},
             {"command", "heis mul"},
             {"g", {g.a, g.b, g.c}},
             {"h", {h.a, h.b, h.c}},
             {"product", {p.a, p.b, p.c}},
             {"product_str", heis_to_string(p)}};
    print_report(opt, doc, heis_to_string(g) + " * " + heis_to_string(h) +
                               " = " + heis_to_string(p) + "\n");
  });

  auto* heis_lemma = heis_cmd->add_subcommand(
      "lemma", "z << x or z << y for constructible orders");
  heis_lemma->add_option("--order", heis_order, "variant like zxy:+++ or 'all'");
  heis_lemma->callback([&] {
    std::vector<HeisOrder> orders = heis_order == "all"
                                        ? all_heis_orders()
                                        : std::vector<HeisOrder>{
                                              HeisOrder::parse(heis_order)};
    Json results = Json::array();
    std::ostringstream text;
    bool violated = false;
    for (const HeisOrder& ord : orders) {
      LemmaVerdict v = verify_lemma_loheis(ord);
      std::string vs = v == LemmaVerdict::Both     ? "both"
                       : v == LemmaVerdict::ZLessX ? "z<<x"
                       : v == LemmaVerdict::ZLessY ? "z<<y"
                                                   : "neither";
      if (v == LemmaVerdict::Neither) violated = true;
      results.push_back(Json{{"order", ord.name()}, {"verdict", vs}});
      text << ord.name() << ": " << vs << "\n";
    }
    Json doc{{"schema", 1}, {"command", "heis lemma"}, {"results", results}};
    if (violated) {
      text << "lemma violated\n";
      exit_code = kExitNegative;
    }
    print_report(opt, doc, text.str());
  });

  auto* heis_identity =
      heis_cmd->add_subcommand("identity", "verify the commutation identities");
  heis_identity->add_option("--kmax", heis_kmax, "range for x^k y^l = y^l x^k z^{kl}");
  heis_identity->add_option("--nmax", heis_nmax, "range for y^n x^n y^-n x^-n");
  heis_identity->callback([&] {
    bool ok = commutator(heis_x(), heis_y()) == heis_z();
    for (long long k = -heis_kmax; k <= heis_kmax && ok; ++k)
      for (long long l = -heis_kmax; l <= heis_kmax && ok; ++l)
        ok = mul(power(heis_x(), k), power(heis_y(), l)) ==
             mul(mul(power(heis_y(), l), power(heis_x(), k)),
                 power(heis_z(), k * l));
    for (long long n = 0; n <= heis_nmax && ok; ++n)
      ok = power_word(n) == HeisElement{0, 0, -n * n};
    for (long long k = -heis_kmax; k <= heis_kmax && ok; ++k)
      ok = commutator(power(heis_x(), k), heis_y()) == power(heis_z(), k);
    Json doc{{"schema", 1},
             {"command", "heis identity"},
             {"kmax", heis_kmax},
             {"nmax", heis_nmax},
             {"verified", ok}};
    if (!ok) exit_code = kExitNegative;
    print_report(opt, doc,
                 ok ? "all identities verified exactly\n" : "IDENTITY FAILED\n");
  });

  // ---------- order ----------
  auto* order_cmd = app.add_subcommand("order", "left-order machinery");
  order_cmd->require_subcommand(1);
  std::string order_backend = "freeabelian:2", order_branch = "2<<3",
              order_trace;
  int order_radius = 3;
  std::size_t order_samples = 10000;
  bool order_both = false, order_corrupt = false;

  auto* order_search =
      order_cmd->add_subcommand("search", "positive-cone search");
  order_search->add_option("--backend", order_backend,
                           "freegroup:k | freeabelian:d | heisenberg | matrix:@file");
  order_search->add_option("--radius", order_radius);
  order_search->callback([&] {
    std::vector<GroupElement> gens;
    GroupBackend backend = parse_backend(order_backend, &gens);
    ConeSearchResult res = cone_search(backend, gens, order_radius,
                                       static_cast<std::size_t>(opt.cap) * 1000);
    Json doc = cone_result_to_json(backend, res);
    doc["command"] = "order search";
    std::ostringstream text;
    switch (res.verdict) {
      case ConeSearchResult::Verdict::OrderableUpToR:
        text << "orderable up to radius " << order_radius << " (cone of "
             << res.cone.size() << " positives over a ball of "
             << res.ball_size << ")\n";
        break;
      case ConeSearchResult::Verdict::NotLeftOrderable:
        text << "NOT left-orderable: every sign assignment derives e ("
             << res.refutations.size() << " refuted branches)\n";
        exit_code = kExitNegative;
        break;
      case ConeSearchResult::Verdict::Inconclusive:
        text << "inconclusive: resource cap exceeded\n";
        exit_code = kExitInconclusive;
        break;
    }
    print_report(opt, doc, text.str());
  });

  auto* order_sl3 = order_cmd->add_subcommand(
      "sl3", "six-Heisenberg-copies contradiction for SL(3,Z)");
  order_sl3->add_option("--branch", order_branch, "initial fact: 2<<3 or 2<<1");
  order_sl3->add_flag("--both", order_both, "run both branches");
  order_sl3->callback([&] {
    HeisTripleReport triples = verify_heis_triples();
    if (!triples.ok) {
      std::cerr << "Heisenberg triple verification failed: " << triples.detail
                << "\n";
      exit_code = kExitInconclusive;
      return;
    }
    std::vector<std::string> branches;
    if (order_both)
      branches = {"2<<3", "2<<1"};
    else
      branches = {order_branch};
    Json jb = Json::array();
    std::ostringstream text;
    bool all_closed = true;
    for (const std::string& b : branches) {
      DerivationTrace tr = sl3_contradiction(LLChainFact::parse(b));
      std::string err;
      bool replay_ok = replay_sl3_trace(tr, &err);
      all_closed = all_closed && tr.closed && replay_ok;
      jb.push_back(Json{{"branch", b},
                        {"trace", trace_to_json(tr)},
                        {"replay_accepted", replay_ok}});
      text << "branch " << b << ": ";
      for (const TraceStep& s : tr.steps)
        if (s.rule == "branch" || s.rule == "prune") text << s.conclusion << " ";
      text << "=> contradiction in " << tr.lemma_applications
           << " lemma applications (replay "
           << (replay_ok ? "accepted" : "REJECTED") << ")\n";
    }
    Json doc{{"schema", 1},
             {"command", "order sl3"},
             {"heis_triples_ok", triples.ok},
             {"branches", jb}};
    if (all_closed) {
      text << "left-invariant order on SL(3,Z) refuted\n";
      exit_code = kExitNegative;  // a verified negative, not an error
    } else {
      text << "trace failed to close (engine bug)\n";
      exit_code = kExitInconclusive;
    }
    print_report(opt, doc, text.str());
  });

  auto* order_check =
      order_cmd->add_subcommand("check", "replay a derivation trace");
  order_check->add_option("--trace", order_trace, "trace JSON (or @file)")
      ->required();
  order_check->callback([&] {
    Json j = Json::parse(arg_or_file(order_trace));
    if (j.contains("trace")) j = j["trace"];  // accept wrapped traces too
    DerivationTrace tr = trace_from_json(j);
    std::string err;
    bool ok = replay_sl3_trace(tr, &err);
    Json doc{{"schema", 1},
             {"command", "order check"},
             {"accepted", ok},
             {"error", err}};
    if (!ok) exit_code = kExitNegative;
    print_report(opt, doc,
                 ok ? "trace accepted\n" : "trace REJECTED: " + err + "\n");
  });

  auto* order_axioms =
      order_cmd->add_subcommand("axioms", "order-axiom sampling check");
  order_axioms->add_option("--backend", order_backend);
  order_axioms->add_option("--samples", order_samples);
  order_axioms->add_option("--radius", order_radius);
  order_axioms->add_flag("--corrupt", order_corrupt,
                         "inject a fault (negative control)");
  order_axioms->callback([&] {
    std::vector<GroupElement> gens;
    GroupBackend backend = parse_backend(order_backend, &gens);
    CompareFn cmp;
    if (backend.kind() == GroupBackend::Kind::Heisenberg) {
      cmp = [](const GroupElement& a, const GroupElement& b) {
        HeisOrder ord;
        return compare(ord, std::get<HeisElement>(a), std::get<HeisElement>(b));
      };
    } else if (backend.kind() == GroupBackend::Kind::FreeAbelian) {
      cmp = [](const GroupElement& a, const GroupElement& b) {
        const auto& x = std::get<AbelVec>(a);
        const auto& y = std::get<AbelVec>(b);
        if (x == y) return Ordering::Equal;
        return x < y ? Ordering::Less : Ordering::Greater;
      };
    } else {
      throw std::invalid_argument(
          "axioms check supports heisenberg and freeabelian backends");
    }
    if (order_corrupt) {
      CompareFn base = cmp;
      GroupElement g1 = gens.at(0), g2 = gens.at(1);
      auto is = [&backend](const GroupElement& a, const GroupElement& b) {
        return backend.equal(a, b);
      };
      cmp = [base, g1, g2, is](const GroupElement& a, const GroupElement& b) {
        if (is(a, g1) && is(b, g2)) return Ordering::Greater;  // swapped
        return base(a, b);
      };
    }
    AxiomCheckReport rep = order_axiom_check(backend, gens, cmp, order_radius,
                                             order_samples, opt.seed);
    Json doc{{"schema", 1},
             {"command", "order axioms"},
             {"ok", rep.ok},
             {"failed_axiom", rep.failed_axiom},
             {"witness", rep.witness},
             {"triples_checked", rep.triples_checked}};
    std::ostringstream text;
    if (rep.ok)
      text << "all axioms hold on " << rep.triples_checked << " samples\n";
    else {
      text << rep.failed_axiom << " violated: " << rep.witness << "\n";
      exit_code = kExitNegative;
    }
    print_report(opt, doc, text.str());
  });

  // ---------- amen ----------
  auto* amen_cmd = app.add_subcommand("amen", "amenability witnesses");
  amen_cmd->require_subcommand(1);
  int amen_d = 2, amen_k = 2, amen_radius = 4, amen_box = 0;
  std::string amen_eps = "1/10", amen_space = "z:2";
  bool amen_omit_identity = false;

  auto* amen_folner = amen_cmd->add_subcommand("folner", "(S,eps)-invariant boxes");
  amen_folner->add_option("--d", amen_d, "dimension");
  amen_folner->add_option("--eps", amen_eps, "exact rational eps");
  amen_folner->add_option("--box", amen_box, "check this box instead of searching");
  amen_folner->callback([&] {
    Rational eps = parse_rational(amen_eps);
    std::vector<AbelVec> gens;
    for (int i = 0; i < amen_d; ++i) {
      AbelVec v(amen_d, 0);
      v[i] = 1;
      gens.push_back(v);
    }
    Json doc{{"schema", 1},
             {"command", "amen folner"},
             {"d", amen_d},
             {"eps", rational_str(eps)}};
    std::ostringstream text;
    if (amen_box > 0) {
      FolnerCandidate c{GroupBackend::free_abelian(amen_d), {}, {}, eps};
      for (const AbelVec& g : gens) c.test_set.push_back(g);
      std::vector<long long> v(amen_d, 0);
      while (true) {
        c.elements.push_back(AbelVec(v));
        int i = 0;
        for (; i < amen_d; ++i) {
          if (++v[i] < amen_box) break;
          v[i] = 0;
        }
        if (i == amen_d) break;
      }
      FolnerReport rep = check_folner(c);
      doc["box"] = amen_box;
      doc["verdict"] = rep.pass ? "pass" : "fail";
      doc["worst_ratio"] = rational_str(rep.worst_ratio);
      doc["witness"] = rep.witness;
      text << "box [0," << amen_box << ")^" << amen_d << ": "
           << (rep.pass ? "pass" : "fail") << " (worst ratio "
           << rational_str(rep.worst_ratio) << ")\n";
      if (!rep.pass) exit_code = kExitNegative;
    } else {
      int n = 0;
      folner_box(amen_d, gens, eps, &n);
      doc["minimal_n"] = n;
      text << "minimal box: n = " << n << "\n";
    }
    print_report(opt, doc, text.str());
  });

  auto* amen_ponzi = amen_cmd->add_subcommand("ponzi", "Ponzi scheme on F_k");
  amen_ponzi->add_option("--k", amen_k, "rank >= 2");
  amen_ponzi->add_option("--radius", amen_radius);
  amen_ponzi->callback([&] {
    PonziReport rep = build_ponzi_free(amen_k, amen_radius);
    bool ok = rep.displacement_ok && rep.conservation_ok &&
              rep.min_interior_preimages >= 2 * amen_k - 1;
    Json doc{{"schema", 1},
             {"command", "amen ponzi"},
             {"k", amen_k},
             {"radius", amen_radius},
             {"interior_wealth", rep.interior_wealth},
             {"identity_wealth", rep.identity_wealth},
             {"conservation_ok", rep.conservation_ok},
             {"displacement_ok", rep.displacement_ok},
             {"ball", rep.ball_count},
             {"verified", ok}};
    std::ostringstream text;
    text << "f1 = " << rep.interior_wealth << " on the interior, f1(e) = "
         << rep.identity_wealth << "; wealth conserved over " << rep.ball_count
         << " words: " << (rep.conservation_ok ? "yes" : "NO") << "\n";
    if (!opt.json) {
      text << "  wealth table (radius <= 2 shown):\n";
      for (const auto& [w, f1] : rep.wealth_table)
        if (w.size() <= 7) text << "    " << w << ": " << f1 << "\n";
    }
    if (!ok) exit_code = kExitNegative;
    print_report(opt, doc, text.str());
  });

  auto* amen_paradox =
      amen_cmd->add_subcommand("paradox", "paradoxical decomposition of F_2");
  amen_paradox->add_option("--radius", amen_radius);
  amen_paradox->add_flag("--omit-identity", amen_omit_identity,
                         "negative control: leave e out of every piece");
  amen_paradox->callback([&] {
    ParadoxReport rep = build_paradoxical_f2(amen_radius, !amen_omit_identity);
    bool ok = rep.partition_ok && rep.a_cover_ok && rep.b_cover_ok;
    Json doc{{"schema", 1},
             {"command", "amen paradox"},
             {"radius", amen_radius},
             {"partition_ok", rep.partition_ok},
             {"a_cover_ok", rep.a_cover_ok},
             {"b_cover_ok", rep.b_cover_ok},
             {"checked", rep.checked},
             {"witness", rep.witness}};
    std::ostringstream text;
    text << "pieces " << (rep.partition_ok ? "partition" : "FAIL to partition")
         << " the ball; covers " << (rep.a_cover_ok && rep.b_cover_ok ? "hold" : "FAIL")
         << " on " << rep.checked << " words\n";
    if (!ok) exit_code = kExitNegative;
    print_report(opt, doc, text.str());
  });

  auto* amen_growth = amen_cmd->add_subcommand("growth", "ball growth reports");
  amen_growth->add_option("--space", amen_space, "z:<d> or f:<k>");
  amen_growth->add_option("--radius", amen_radius);
  amen_growth->callback([&] {
    auto colon = amen_space.find(':');
    if (colon == std::string::npos || (amen_space[0] != 'z' && amen_space[0] != 'f'))
      throw std::invalid_argument("space must be z:<d> or f:<k>");
    int param = std::stoi(amen_space.substr(colon + 1));
    GrowthReport rep = amen_space[0] == 'z'
                           ? growth_obstruction_zd(param, amen_radius)
                           : growth_obstruction_free(param, amen_radius);
    bool ok = rep.polynomial_certificate || rep.exponential_certificate;
    Json sizes = Json::array();
    for (unsigned long long s : rep.ball_sizes) sizes.push_back(s);
    Json doc{{"schema", 1},
             {"command", "amen growth"},
             {"space", rep.space},
             {"ball_sizes", sizes},
             {"polynomial_certificate", rep.polynomial_certificate},
             {"exponential_certificate", rep.exponential_certificate},
             {"doubling_ratio", rational_str(rep.doubling_ratio)}};
    std::ostringstream text;
    text << rep.space << " ball sizes:";
    for (unsigned long long s : rep.ball_sizes) text << " " << s;
    text << "\n"
         << (rep.polynomial_certificate
                 ? "polynomial growth certificate holds\n"
                 : rep.exponential_certificate ? "exponential growth certificate holds\n"
                                               : "no certificate\n");
    if (!ok) exit_code = kExitNegative;
    print_report(opt, doc, text.str());
  });

  // ---------- circle ----------
  auto* circle_cmd = app.add_subcommand("circle", "exact PL circle dynamics");
  circle_cmd->require_subcommand(1);
  std::string circle_f, circle_g, circle_preset = "shared";
  int circle_count = 100, circle_radius = 8, circle_iters = 24;
  long long circle_expect = -2;

  auto* circle_cocycle =
      circle_cmd->add_subcommand("cocycle", "normalized Euler cocycle value");
  circle_cocycle->add_option("--f", circle_f, "PL literal or {\"rot\":\"p/q\"}")
      ->required();
  circle_cocycle->add_option("--g", circle_g)->required();
  circle_cocycle->add_option("--expect", circle_expect,
                             "fail (exit 1) unless the value matches");
  circle_cocycle->callback([&] {
    PLCircleLift f = normalize(pl_from_json(Json::parse(arg_or_file(circle_f))));
    PLCircleLift g = normalize(pl_from_json(Json::parse(arg_or_file(circle_g))));
    long long c = euler_cocycle(f, g);
    Json doc{{"schema", 1},
             {"command", "circle cocycle"},
             {"f", pl_to_json(f)},
             {"g", pl_to_json(g)},
             {"value", c}};
    std::ostringstream text;
    text << "c(f, g) = " << c << "\n";
    if (circle_expect != -2 && c != circle_expect) {
      text << "expected " << circle_expect << "\n";
      exit_code = kExitNegative;
    }
    print_report(opt, doc, text.str());
  });

  auto* circle_identity = circle_cmd->add_subcommand(
      "identity", "4-term cocycle identity on seeded triples");
  circle_identity->add_option("--count", circle_count);
  circle_identity->callback([&] {
    std::uint64_t state = opt.seed;
    auto next = [&state]() {
      state += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
    };
    auto random_lift = [&]() {
      long long den = 6 + static_cast<long long>(next() % 18);
      long long num = static_cast<long long>(next() % (2 * den));
      PLCircleLift rot = PLCircleLift::rotation(Rational(num, den));
      if (next() % 2) return normalize(rot);
      // a 2-breakpoint map
      long long b2 = 1 + static_cast<long long>(next() % (den - 1));
      long long v1 = static_cast<long long>(next() % den);
      long long v2 = v1 + 1 + static_cast<long long>(next() % den);
      return normalize(PLCircleLift({Rational(0), Rational(b2, den)},
                                    {Rational(v1, 2 * den), Rational(v2, 2 * den)}));
    };
    int failures = 0;
    for (int i = 0; i < circle_count; ++i) {
      PLCircleLift g = random_lift(), h = random_lift(), k = random_lift();
      if (!cocycle_identity_check(g, h, k)) ++failures;
    }
    Json doc{{"schema", 1},
             {"command", "circle identity"},
             {"count", circle_count},
             {"failures", failures}};
    if (failures > 0) exit_code = kExitNegative;
    print_report(opt, doc,
                 "cocycle identity checked on " + std::to_string(circle_count) +
                     " seeded triples, failures: " + std::to_string(failures) +
                     "\n");
  });

  auto* circle_fix = circle_cmd->add_subcommand(
      "fixpoint", "fixed point from a bounded primitive");
  circle_fix->add_option("--preset", circle_preset,
                         "shared (family with a common fixed point) or rot:p/q");
  circle_fix->add_option("--radius", circle_radius, "word sample radius");
  circle_fix->callback([&] {
    std::vector<PLCircleLift> gens;
    if (circle_preset == "shared") {
      gens.push_back(PLCircleLift(
          {Rational(0), Rational(1, 8), Rational(1, 2), Rational(7, 8)},
          {Rational(0), Rational(1, 8), Rational(5, 8), Rational(7, 8)}));
      gens.push_back(PLCircleLift(
          {Rational(0), Rational(1, 8), Rational(1, 4), Rational(7, 8)},
          {Rational(0), Rational(1, 8), Rational(1, 3), Rational(7, 8)}));
    } else if (circle_preset.rfind("rot:", 0) == 0) {
      gens.push_back(
          PLCircleLift::rotation(parse_rational(circle_preset.substr(4))));
    } else {
      throw std::invalid_argument("preset must be shared or rot:p/q");
    }
    auto zero = [](const ReducedWord&) { return 0LL; };
    FixedPointReport rep = fixed_point_from_primitive(gens, zero, circle_radius);
    std::string status =
        rep.status == FixedPointReport::Status::FixedPoint   ? "fixed_point"
        : rep.status == FixedPointReport::Status::Candidate ? "candidate"
                                                             : "bound_violation";
    Json doc{{"schema", 1},
             {"command", "circle fixpoint"},
             {"preset", circle_preset},
             {"radius", circle_radius},
             {"status", status},
             {"point", rational_str(rep.point)},
             {"bound", rational_str(rep.bound)},
             {"witness_word", rep.witness_word},
             {"words_checked", rep.words_checked}};
    std::ostringstream text;
    if (rep.status == FixedPointReport::Status::FixedPoint)
      text << "exactly invariant point " << rational_str(rep.point) << " (mod 1)\n";
    else if (rep.status == FixedPointReport::Status::Candidate) {
      text << "no exactly invariant point; sup candidate "
           << rational_str(rep.point) << " (bounded-radius certificate)\n";
      exit_code = kExitNegative;
    } else {
      text << "orbit bound violated at word " << rep.witness_word
           << ": phi is not a valid primitive\n";
      exit_code = kExitNegative;
    }
    print_report(opt, doc, text.str());
  });

  auto* circle_rotnum = circle_cmd->add_subcommand("rotnum", "rotation number");
  circle_rotnum->add_option("--f", circle_f)->required();
  circle_rotnum->add_option("--iters", circle_iters);
  circle_rotnum->callback([&] {
    PLCircleLift f = normalize(pl_from_json(Json::parse(arg_or_file(circle_f))));
    RotationNumberResult res = rotation_number(f, circle_iters);
    Json doc{{"schema", 1},
             {"command", "circle rotnum"},
             {"f", pl_to_json(f)},
             {"exact", res.exact}};
    std::ostringstream text;
    if (res.exact) {
      Json orbit = Json::array();
      for (const Rational& t : res.orbit) orbit.push_back(rational_str(t));
      doc["value"] = rational_str(res.value);
      doc["period"] = res.period;
      doc["orbit"] = orbit;
      text << "rotation number " << rational_str(res.value)
           << " with a finite orbit of size " << res.period << "\n";
    } else {
      doc["lo"] = rational_str(res.lo);
      doc["hi"] = rational_str(res.hi);
      text << "rotation number in [" << rational_str(res.lo) << ", "
           << rational_str(res.hi) << "]\n";
    }
    print_report(opt, doc, text.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::length_error& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
