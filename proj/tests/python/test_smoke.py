"""Smoke tests for the python bindings."""

import pytest

tamecomb = pytest.importorskip("_tamecomb")


def test_eval_and_length():
    rec = tamecomb.f_eval("x0^-1")
    assert rec["negative"] == "((* *) *)"
    assert rec["positive"] == "(* (* *))"
    assert rec["carets"] == 2
    assert tamecomb.f_len("x0") == 1
    assert tamecomb.f_len("x5^-1 x3^-2") == 9


def test_normal_and_traversal_forms():
    assert tamecomb.f_nf("x0^-2 x1 x0^2") == "x3 ."
    assert tamecomb.f_eta("x3^-1") == "x0^-2 x1^-1 x0^2"
    assert tamecomb.f_eta("x1 x1^-1") == ""


def test_edge_classification():
    rec = tamecomb.f_classify("x5^-1 x3^-2", 1)
    assert rec["good"] is False
    assert rec["bad_case"] in {"C1", "C2", "C3"}
    assert tamecomb.f_classify("x5^-1 x3^-2", 0)["good"] is True


def test_cell_fixture():
    rec = tamecomb.f_cell("x5^-1 x3^-2")
    assert rec["cell"] == "Rr1^-1"
    assert rec["z_b"] == "x5^-1 x3^-1"
    assert rec["verified"] is True


def test_ball_sizes():
    assert tamecomb.f_ball_sizes(2) == [1, 4, 12]
    assert tamecomb.bs_ball_sizes(3, 1) == [1, 4]


def test_tame_scans():
    assert tamecomb.f_tame_scan(3, 4, 45)["pass"] is True
    assert tamecomb.bs_tame_scan(3, 3)["pass"] is True


def test_bs_geodesic_and_witness():
    rec = tamecomb.bs_geodesic(8, "a^18")
    assert rec["length"] == 6
    assert rec["geodesic"] == "a^2 t a^2 t^-1"
    wit = tamecomb.bs_coeff1(8, 2)
    assert wit["len_v"] == 6
    assert wit["loop_trivial"] and wit["v_represents_g"]
    wit5 = tamecomb.bs_coeff1(8, 5)
    assert wit5["len_v"] == 18 and wit5["bound"] == 17 and wit5["exceeds_bound"]
