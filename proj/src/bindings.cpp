#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gline/json_io.hpp"

namespace py = pybind11;
using namespace gline;

namespace {

std::string json_str(const Json& j) { return j.dump(); }

PLCircleLift pl_from_arg(const py::object& obj) {
  if (py::isinstance<PLCircleLift>(obj)) return obj.cast<PLCircleLift>();
  return pl_from_json(Json::parse(obj.cast<std::string>()));
}

}  // namespace

PYBIND11_MODULE(_gline, m) {
  m.doc() = "exact computational witnesses for group orders, bounded "
            "generation, amenability and circle dynamics";

  // ----- free group words and quasimorphisms -----
  py::class_<ReducedWord>(m, "ReducedWord")
      .def(py::init([](const std::string& text, int rank) {
             return parse_word(text, rank);
           }),
           py::arg("text"), py::arg("rank") = 2)
      .def_property_readonly("rank", &ReducedWord::rank)
      .def("__len__", [](const ReducedWord& w) { return w.length(); })
      .def("__str__", &word_to_string)
      .def("__repr__",
           [](const ReducedWord& w) { return "word('" + word_to_string(w) + "')"; })
      .def("__eq__", [](const ReducedWord& a, const ReducedWord& b) { return a == b; })
      .def("__hash__",
           [](const ReducedWord& w) { return py::hash(py::str(word_to_string(w))); })
      .def("is_identity", &ReducedWord::is_identity);

  m.def("word", [](const std::string& text, int rank) { return parse_word(text, rank); },
        py::arg("text"), py::arg("rank") = 2, "parse a word literal like 'a^2 b A'");
  m.def("multiply", &multiply);
  m.def("invert", &invert);
  m.def("ball", &ball, py::arg("rank"), py::arg("radius"),
        py::arg("max_size") = 1000000,
        "all reduced words of length <= radius, length-lex order");
  m.def("ball_size", &ball_size_formula);

  m.def("hom_count",
        [](const std::string& gen, const ReducedWord& x) {
          int g = gen.at(0) - 'a';
          return eval_quasimorphism(
              Quasimorphism::hom_count(std::max(x.rank(), g + 1), g), x);
        },
        py::arg("generator"), py::arg("word"),
        "signed exponent sum of a generator");
  m.def("brooks",
        [](const ReducedWord& pattern, const ReducedWord& x) {
          return eval_quasimorphism(Quasimorphism::brooks(pattern), x);
        },
        py::arg("pattern"), py::arg("word"),
        "signed greedy count of disjoint occurrences");
  m.def("defect_scan",
        [](const ReducedWord& pattern, int radius) {
          DefectReport rep = defect_scan(Quasimorphism::brooks(pattern),
                                         PairSamples::exhaustive_ball(pattern.rank(), radius));
          return py::make_tuple(rep.max_defect, word_to_string(rep.witness_x),
                                word_to_string(rep.witness_y));
        },
        py::arg("pattern"), py::arg("radius") = 3,
        "(max defect, witness x, witness y) over the ball's pair square");
  m.def("separation_witness",
        [](int k, int n, int extra) {
          SeparationWitness w = separation_witness(k, n, extra);
          return py::make_tuple(word_to_string(w.word), w.brooks_values, w.hom_a,
                                w.hom_b);
        },
        py::arg("k"), py::arg("n"), py::arg("extra") = 3);

  // ----- Heisenberg -----
  py::class_<HeisElement>(m, "HeisElement")
      .def(py::init([](long long a, long long b, long long c) {
             return HeisElement{a, b, c};
           }),
           py::arg("a") = 0, py::arg("b") = 0, py::arg("c") = 0)
      .def(py::init([](const std::string& text) { return parse_heis(text); }))
      .def_readwrite("a", &HeisElement::a)
      .def_readwrite("b", &HeisElement::b)
      .def_readwrite("c", &HeisElement::c)
      .def("__mul__", &mul)
      .def("inv", &inv)
      .def("__eq__", [](const HeisElement& x, const HeisElement& y) { return x == y; })
      .def("__str__", &heis_to_string)
      .def("__repr__",
           [](const HeisElement& g) { return "heis('" + heis_to_string(g) + "')"; })
      .def("matrix", [](const HeisElement& g) {
        Mat3 m = to_matrix(g);
        std::vector<std::vector<long long>> rows;
        for (int i = 0; i < 3; ++i)
          rows.emplace_back(m.m[i].begin(), m.m[i].end());
        return rows;
      });

  m.def("heis_x", &heis_x);
  m.def("heis_y", &heis_y);
  m.def("heis_z", &heis_z);
  m.def("heis_mul", &mul);
  m.def("heis_inv", &inv);
  m.def("heis_commutator", &commutator);
  m.def("heis_power", &power);
  m.def("power_word", &power_word, py::arg("n"),
        "y^n x^n y^-n x^-n, equal to z^(-n^2)");
  m.def("heis_compare",
        [](const std::string& order, const HeisElement& g, const HeisElement& h) {
          Ordering o = compare(HeisOrder::parse(order), g, h);
          return o == Ordering::Less ? -1 : o == Ordering::Greater ? 1 : 0;
        },
        py::arg("order"), py::arg("g"), py::arg("h"),
        "-1, 0 or 1 under a variant like 'zxy:+++'");
  m.def("archimedean_lt",
        [](const std::string& order, const HeisElement& g, const HeisElement& h) {
          return archimedean_lt(HeisOrder::parse(order), g, h);
        });
  m.def("lemma_loheis_sweep", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const HeisOrder& ord : all_heis_orders()) {
      LemmaVerdict v = verify_lemma_loheis(ord);
      std::string vs = v == LemmaVerdict::Both     ? "both"
                       : v == LemmaVerdict::ZLessX ? "z<<x"
                       : v == LemmaVerdict::ZLessY ? "z<<y"
                                                   : "neither";
      out.emplace_back(ord.name(), vs);
    }
    return out;
  });

  // ----- orders: cone search and the sl3 engine -----
  m.def("cone_search",
        [](const std::string& backend_kind, int param, int radius) {
          GroupBackend b = backend_kind == "freegroup"
                               ? GroupBackend::free_group(param)
                           : backend_kind == "freeabelian"
                               ? GroupBackend::free_abelian(param)
                               : GroupBackend::heisenberg();
          ConeSearchResult res = cone_search(b, b.generators(), radius);
          return json_str(cone_result_to_json(b, res));
        },
        py::arg("backend"), py::arg("param") = 2, py::arg("radius") = 3,
        "JSON report; backend is freegroup, freeabelian or heisenberg");
  m.def("sl3_contradiction",
        [](const std::string& branch) {
          DerivationTrace tr = sl3_contradiction(LLChainFact::parse(branch));
          return json_str(trace_to_json(tr));
        },
        py::arg("branch") = "2<<3", "derivation trace as JSON");
  m.def("replay_sl3_trace",
        [](const std::string& trace_json) {
          DerivationTrace tr = trace_from_json(Json::parse(trace_json));
          std::string err;
          bool ok = replay_sl3_trace(tr, &err);
          return py::make_tuple(ok, err);
        },
        "(accepted, error) for a serialized trace");
  m.def("verify_heis_triples", [] {
    HeisTripleReport rep = verify_heis_triples();
    return py::make_tuple(rep.ok, rep.commutator_signs);
  });

  // ----- matrix reduction -----
  m.def("euclid_reduce",
        [](const std::string& matrix) {
          EuclidReduction red = euclid_reduce(parse_int_mat2(matrix));
          Json doc{{"op_count", red.ops.size()}, {"trace", euclid_to_json(red)}};
          return json_str(doc);
        },
        py::arg("matrix"), "JSON trace for '[[a,c],[b,d]]'");
  m.def("bounded_reduce",
        [](const std::string& matrix, int p, long long cap) {
          BoundedReduction red = bounded_reduce(parse_pinv_mat2(matrix, p), cap);
          return json_str(bounded_to_json(red));
        },
        py::arg("matrix"), py::arg("p") = 2, py::arg("cap") = 10000);
  m.def("primitive_root_check",
        [](long long r, long long q) { return primitive_root_check(r, q); });
  m.def("primitive_root_powers", [](long long r, long long q) {
    std::vector<long long> out;
    for (const BigInt& p : primitive_root_powers(r, q))
      out.push_back(static_cast<long long>(p));
    return out;
  });
  m.def("artin_instance",
        [](long long a, long long b, long long r, long long cap) {
          ArtinResult res = artin_instance(a, b, r, cap);
          return py::make_tuple(res.found,
                                res.found ? static_cast<long long>(res.q) : 0,
                                res.k);
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("cap") = 10000,
        "(found, q, k)");
  m.def("carter_keller_bound", &carter_keller_bound, py::arg("n"),
        "(3n^2 - n)/2 + 36");
  m.def("diag_conjugation",
        [](long long u, long long n, int p, bool upper) {
          PInvMat2 m = diag_conjugation(PInvScalar(p, u), n, upper);
          return json_str(pinv_mat2_to_json(m));
        },
        py::arg("u"), py::arg("n"), py::arg("p") = 2, py::arg("upper") = true);

  // ----- amenability -----
  m.def("folner_box",
        [](int d, const std::string& eps) {
          std::vector<AbelVec> gens;
          for (int i = 0; i < d; ++i) {
            AbelVec v(d, 0);
            v[i] = 1;
            gens.push_back(v);
          }
          int n = 0;
          folner_box(d, gens, parse_rational(eps), &n);
          return n;
        },
        py::arg("d") = 2, py::arg("eps") = "1/10",
        "minimal n with [0,n)^d almost invariant");
  m.def("ponzi",
        [](int k, int radius) {
          PonziReport rep = build_ponzi_free(k, radius);
          return py::make_tuple(rep.interior_wealth, rep.identity_wealth,
                                rep.conservation_ok);
        },
        py::arg("k") = 2, py::arg("radius") = 4,
        "(interior wealth, identity wealth, conservation)");
  m.def("paradoxical_checks",
        [](int radius) {
          ParadoxReport rep = build_paradoxical_f2(radius);
          return py::make_tuple(rep.partition_ok, rep.a_cover_ok, rep.b_cover_ok);
        },
        py::arg("radius") = 4);
  m.def("zd_ball_size", &zd_ball_size);

  // ----- circle dynamics -----
  py::class_<PLCircleLift>(m, "PLCircleLift")
      .def(py::init([](const std::vector<std::string>& breaks,
                       const std::vector<std::string>& vals) {
             std::vector<Rational> bs, vs;
             for (const std::string& b : breaks) bs.push_back(parse_rational(b));
             for (const std::string& v : vals) vs.push_back(parse_rational(v));
             return PLCircleLift(bs, vs);
           }),
           py::arg("breakpoints"), py::arg("values"))
      .def_static("rotation",
                  [](const std::string& alpha) {
                    return PLCircleLift::rotation(parse_rational(alpha));
                  })
      .def_static("identity", &PLCircleLift::identity)
      .def("__call__",
           [](const PLCircleLift& f, const std::string& t) {
             return rational_str(f(parse_rational(t)));
           })
      .def("__eq__",
           [](const PLCircleLift& f, const PLCircleLift& g) { return f == g; })
      .def("__str__", &PLCircleLift::str);

  m.def("compose", [](const py::object& f, const py::object& g) {
    return compose(pl_from_arg(f), pl_from_arg(g));
  });
  m.def("pl_inverse",
        [](const py::object& f) { return inverse(pl_from_arg(f)); });
  m.def("normalize", [](const py::object& f) { return normalize(pl_from_arg(f)); });
  m.def("euler_cocycle", [](const py::object& f, const py::object& g) {
    return euler_cocycle(normalize(pl_from_arg(f)), normalize(pl_from_arg(g)));
  });
  m.def("cocycle_identity_check",
        [](const py::object& f, const py::object& g, const py::object& h) {
          return cocycle_identity_check(normalize(pl_from_arg(f)),
                                        normalize(pl_from_arg(g)),
                                        normalize(pl_from_arg(h)));
        });
  m.def("rotation_number",
        [](const py::object& f, int iterations) {
          RotationNumberResult res = rotation_number(pl_from_arg(f), iterations);
          std::vector<std::string> orbit;
          for (const Rational& t : res.orbit) orbit.push_back(rational_str(t));
          if (res.exact)
            return py::make_tuple(true, rational_str(res.value), res.period, orbit);
          return py::make_tuple(false,
                                rational_str(res.lo) + ".." + rational_str(res.hi),
                                static_cast<long long>(0), orbit);
        },
        py::arg("f"), py::arg("iterations") = 24,
        "(exact, value-or-interval, period, orbit)");
  m.def("fixed_point_from_primitive",
        [](const std::vector<PLCircleLift>& gens,
           const std::function<long long(const std::string&)>& phi, int radius) {
          FixedPointReport rep = fixed_point_from_primitive(
              gens,
              [&phi](const ReducedWord& w) { return phi(word_to_string(w)); },
              radius);
          std::string status =
              rep.status == FixedPointReport::Status::FixedPoint   ? "fixed_point"
              : rep.status == FixedPointReport::Status::Candidate ? "candidate"
                                                                   : "bound_violation";
          return py::make_tuple(status, rational_str(rep.point), rep.witness_word);
        },
        py::arg("generators"), py::arg("phi"), py::arg("radius") = 8,
        "(status, point, witness word)");
}
