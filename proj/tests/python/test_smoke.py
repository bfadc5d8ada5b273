import comppoly


def test_exact_scalars():
    assert comppoly.gen_binom("-2", 2) == "3"
    assert comppoly.gen_binom("5/2", 2) == "15/8"
    assert comppoly.pochhammer("1/2", 2) == "3/4"
    assert comppoly.double_fact(6) == "48"


def test_polynomials():
    assert comppoly.cp("legendre", {}, 2, 2) == ["-4", "0", "12"]
    assert comppoly.cp("confluent", {"c": "1"}, 2, 2) == ["2", "-4", "1"]
    assert comppoly.cp("prelaguerre", {"N": "2"}, 2, 1, route="recursion") == ["2"]
    assert comppoly.cp_eval("legendre", {}, 2, 2, "0") == "-4"
    assert comppoly.cp_eval("prelaguerre", {"N": "2"}, 2, 2, "-2") == "6"


def test_routes_agree():
    for route in ("rodrigues", "genfunc", "recursion", "explicit"):
        assert comppoly.cp("confluent", {"c": "1/2"}, 3, 3, route=route) == comppoly.cp(
            "confluent", {"c": "1/2"}, 3, 3
        )


def test_norms_and_series():
    assert comppoly.legendre_norm(2, 0) == "8"
    assert comppoly.legendre_norm(2, 1) == "4/3"
    assert comppoly.legendre_norm(1, 1) == "-1"
    assert comppoly.kummer_poly(2, "1") == ["1", "-2", "1/2"]
    assert comppoly.gauss_poly(2, "2", "1/2") == ["1", "-8", "8"]


def test_limit_drift():
    table = comppoly.classical_limit_drift("relhermite", 2, ["10", "100"])
    assert table == [("10", "1/5"), ("100", "1/50")]


def test_suite_small_grid():
    ok, report = comppoly.run_suite(grid="small")
    assert ok
    assert report["version"] == 1
    ids = {entry["id"] for entry in report["checks"]}
    assert ids.issuperset({"L1", "C4", "H6", "G1"})
    h6 = [e for e in report["checks"] if e["id"] == "H6" and e["point"].endswith("l=2")]
    assert any(e["status"] == "residual" for e in h6)


def test_probe():
    probe = comppoly.probe_translation(0, "1/10", "1/2", 40)
    assert probe["lhs"] == "1"
    num, den = map(int, probe["residual"].split("/"))
    assert 0.1015 < num / den < 0.1025
