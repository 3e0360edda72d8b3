"""Smoke tests for the jmult python module."""

import pytest

jmult = pytest.importorskip("jmult")


def fixture_ideal():
    return jmult.Ideal(["x", "y", "z"], [[5, 0, 0], [0, 3, 0], [1, 1, 2]])


def test_ideal_construction_and_arithmetic():
    I = jmult.Ideal(["x", "y"], [[2, 0], [0, 2]])
    m = jmult.Ideal(["x", "y"], [[1, 0], [0, 1]])
    assert I.vars == ["x", "y"]
    assert not I.is_zero and not I.is_unit
    assert I.contains([3, 1])
    assert not I.contains([1, 1])
    assert m.product(m) == jmult.Ideal(["x", "y"], [[2, 0], [1, 1], [0, 2]])
    assert m.power(2) == m.product(m)
    assert I.sum(m) == m
    assert I.colon([1, 1]) == m
    assert m.contains_ideal(I)


def test_parse_and_to_text():
    I = jmult.Ideal.parse("vars: x y\nx^2\ny^2\n")
    assert I == jmult.Ideal(["x", "y"], [[2, 0], [0, 2]])
    assert jmult.Ideal.parse(I.to_text()) == I


def test_coefficients_principal():
    r = jmult.coefficients(jmult.Ideal.parse("vars: x y\nx\n"))
    assert r["d"] == 2
    assert r["j"] == [[0], [1, 0], [0, 0, 0]]
    assert r["c"] == [0, 1, 0]
    assert r["jmult"] == 0
    assert r["ell"] == 1


def test_coefficients_fixture_ideal():
    r = jmult.coefficients(fixture_ideal())
    assert r["j"] == [[30], [8, -32], [0, -1, 5], [0, 0, 0, 0]]
    assert r["ell"] == 3


def test_classical_coefficients():
    r = jmult.classical_coefficients(jmult.Ideal.parse("vars: x y\nx^2\nx y\ny^2\n"))
    assert r["e"] == [4, 1, 0]
    with pytest.raises(jmult.JmultError):
        jmult.classical_coefficients(jmult.Ideal.parse("vars: x y\nx\n"))


def test_primes_and_localization():
    I = fixture_ideal()
    assert jmult.minimal_primes(I) == [["x", "y"]]
    assert jmult.height(I) == 2
    L = jmult.localize(I, ["x", "y"])
    assert L == jmult.Ideal(["x", "y"], [[5, 0], [0, 3], [1, 1]])
    assert jmult.localize(jmult.Ideal.parse("vars: x y\nx^2\n"), ["y"]).is_unit


def test_integral_closure():
    I = jmult.Ideal(["x", "y"], [[2, 0], [0, 2]])
    assert jmult.integral_closure(I) == jmult.Ideal(["x", "y"], [[2, 0], [1, 1], [0, 2]])


def test_fci_and_containment():
    I = jmult.Ideal(["x", "y"], [[2, 0], [0, 2]])
    J = jmult.Ideal(["x", "y"], [[2, 0], [1, 1], [0, 2]])
    assert jmult.fci_contains(I, I)
    assert not jmult.fci_contains(I, J)
    r = jmult.first_coefficient_ideal(I)
    assert r["complete"] is True
    assert r["ideal"] == I
    assert r["assumption"] == "monomial-fci"


def test_fci_fixture_ideal():
    r = jmult.first_coefficient_ideal(fixture_ideal())
    assert r["fci"] == ["y^3", "x y z^2", "x^4 y^2", "x^5"]
    assert r["complete"] is True


def test_is_reduction():
    J = jmult.Ideal(["x", "y"], [[2, 0], [0, 2]])
    I = jmult.Ideal(["x", "y"], [[2, 0], [1, 1], [0, 2]])
    r = jmult.is_reduction(J, I)
    assert r["reduction"] is True and r["witness"] == 1
    r2 = jmult.is_reduction(jmult.Ideal(["x", "y"], [[2, 0]]), J)
    assert r2["reduction"] is False and r2["status"] == "inconclusive-negative"


def test_compare_localized():
    I = jmult.Ideal(["x", "y"], [[2, 0], [0, 2]])
    J = jmult.Ideal(["x", "y"], [[2, 0], [1, 1], [0, 2]])
    r = jmult.compare_localized(I, J)
    assert r["verdict"] is False
    assert r["per_prime"][0]["j1"] == [[0, 0], [0, -1]]


def test_cq_cross_check():
    r = jmult.cq_cross_check(fixture_ideal())
    assert r["q"] == 1
    assert r["from_table"] == 8 == r["from_formula"]


def test_dimension_of_n():
    I = fixture_ideal()
    assert jmult.dimension_of_n(I, I) == {"dim": 0, "n_zero": True}


def test_table():
    t = jmult.table(jmult.Ideal.parse("vars: x y\nx\n"), imax=2, jmax=2, kind="h11")
    assert t["kind"] == "H11"
    assert t["values"] == [1, 2, 3, 2, 4, 6, 3, 6, 9]


def test_power_cache_keeps_rings_apart():
    a = jmult.Ideal(["x", "y"], [[2, 0]])
    b = jmult.Ideal(["a", "b"], [[2, 0]])
    assert a.power(2).vars == ["x", "y"]
    assert b.power(2).vars == ["a", "b"]
    assert a != b
    with pytest.raises(jmult.JmultError):
        a.sum(b)


def test_cache_stats():
    jmult.clear_cache()
    jmult.Ideal.parse("vars: x y\nx\ny\n").power(3)
    stats = jmult.cache_stats()
    assert stats["entries"] >= 1
    assert stats["bytes"] > 0


def test_errors_are_typed():
    with pytest.raises(jmult.JmultError):
        jmult.Ideal.parse("no header")
    with pytest.raises(jmult.JmultError):
        jmult.coefficients(jmult.Ideal(["x"], [[0]]))  # unit ideal
