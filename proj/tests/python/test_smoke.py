"""Smoke tests for the python bindings: the worked examples end to end."""

import json

import gline


def test_word_arithmetic():
    w = gline.word("a^2 b a^3 b^2 a b^-3 a^-7 b^2")
    assert str(w) == "a^2 b a^3 b^2 a b^-3 a^-7 b^2"
    assert gline.multiply(gline.word("a b"), gline.word("B a")) == gline.word("a^2")
    assert gline.invert(gline.word("a^2 b")) == gline.word("B a^-2")
    assert len(gline.ball(2, 3)) == 53
    assert gline.ball_size(2, 3) == 53


def test_quasimorphism_worked_values():
    w = gline.word("a^2 b a^3 b^2 a b^-3 a^-7 b^2")
    assert gline.hom_count("a", w) == -1  # 2 + 3 + 1 - 7
    assert gline.brooks(gline.word("a b"), w) == 1  # 1 + 1 - 1
    defect, _, _ = gline.defect_scan(gline.word("a b"), 3)
    assert defect <= 1


def test_separation_witness():
    word, brooks_vals, hom_a, hom_b = gline.separation_witness(2, 1)
    assert brooks_vals[0] >= 1
    assert all(v == 0 for v in brooks_vals[1:])
    assert hom_a == 0 and hom_b == 0


def test_heisenberg():
    x, y, z = gline.heis_x(), gline.heis_y(), gline.heis_z()
    assert gline.heis_commutator(x, y) == z
    assert gline.heis_mul(gline.heis_power(x, 2), gline.heis_power(y, 3)) == \
        gline.HeisElement(2, 3, 6)
    assert gline.power_word(3) == gline.HeisElement(0, 0, -9)
    assert gline.HeisElement(1, 2, 3).matrix() == [[1, 1, 3], [0, 1, 2], [0, 0, 1]]
    assert gline.heis_compare("zxy:+++", x, y) == -1
    assert gline.archimedean_lt("zxy:+++", z, x)
    sweep = gline.lemma_loheis_sweep()
    assert len(sweep) == 16
    assert all(verdict != "neither" for _, verdict in sweep)


def test_orders():
    report = json.loads(gline.cone_search("freeabelian", 2, 3))
    assert report["verdict"] == "orderable_up_to_radius"
    trace = json.loads(gline.sl3_contradiction("2<<3"))
    assert trace["closed"] and trace["lemma_applications"] == 6
    accepted, err = gline.replay_sl3_trace(json.dumps(trace))
    assert accepted, err
    ok, signs = gline.verify_heis_triples()
    assert ok and len(signs) == 6


def test_matrix_reduction():
    trace = json.loads(gline.euclid_reduce("[[13,31],[5,12]]"))
    assert trace["op_count"] == 5
    assert trace["trace"][0]["intermediate"] == [[3, 7], [5, 12]]
    bounded = json.loads(gline.bounded_reduce("[[13,31],[5,12]]", 2))
    assert bounded["found"] and len(bounded["ops"]) == 5
    assert bounded["artin_prime"] == "13"
    assert gline.primitive_root_powers(3, 7) == [3, 2, 6, 4, 5, 1]
    found, q, k = gline.artin_instance(13, 5, 2)
    assert found and q == 13 and k == 0
    assert gline.carter_keller_bound(3) == 48
    m = json.loads(gline.diag_conjugation(1, 1, 2, True))
    assert m == [["1", "4"], ["0", "1"]]


def test_amenability():
    assert gline.folner_box(2, "1/10") == 11
    interior, identity, conserved = gline.ponzi(2, 6)
    assert (interior, identity, conserved) == (3, 5, True)
    assert gline.paradoxical_checks(4) == (True, True, True)
    assert gline.zd_ball_size(2, 10) == 221


def test_circle():
    r = gline.PLCircleLift.rotation("2/3")
    assert gline.euler_cocycle(r, r) == 1
    assert gline.cocycle_identity_check(r, r, gline.PLCircleLift.rotation("1/5"))
    exact, value, period, orbit = gline.rotation_number(
        gline.PLCircleLift.rotation("1/3"), 10)
    assert exact and value == "1/3" and period == 3
    assert orbit == ["0", "1/3", "2/3"]
    f = gline.PLCircleLift(["0", "1/2"], ["0", "3/4"])
    assert gline.compose(f, gline.pl_inverse(f)) == gline.PLCircleLift.identity()
    status, point, _ = gline.fixed_point_from_primitive(
        [gline.PLCircleLift.rotation("1/3")], lambda w: 0, 6)
    assert status == "bound_violation"
