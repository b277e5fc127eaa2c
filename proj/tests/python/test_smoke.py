import pytest

import qschubert as qs


def test_schubert_polynomials():
    assert str(qs.schubert_poly([3, 2, 1])) == "x1^2·x2"
    assert str(qs.quantum_schubert([3, 1, 2])) == "x1^2 − q1"
    assert str(qs.universal_schubert([3, 1, 2])) == "g1[0]^2 − g1[1]"
    assert qs.specialize_quantum(qs.universal_schubert([2, 4, 1, 3])) == qs.quantum_schubert([2, 4, 1, 3])


def test_products():
    c = qs.quantum_product([2, 1, 3], [2, 1, 3])
    assert str(c) == "σ[3,1,2] + q1·σ[1,2,3]"
    assert c.terms() == {((0, 0), (3, 1, 2)): 1, ((1, 0), (1, 2, 3)): 1}
    assert c.coefficient([1, 0], [1, 2, 3]) == 1
    assert str(qs.quantum_product([2, 1], [2, 1])) == "q1·σ[1,2]"
    assert qs.classical_product([2, 1, 3], [2, 1, 3]).terms() == {((0, 0), (3, 1, 2)): 1}
    triple = qs.quantum_product_multi([[2, 1, 3]] * 3)
    assert triple == qs.quantum_product_multi([[2, 1, 3], [2, 1, 3], [2, 1, 3]])


def test_gromov_witten():
    assert qs.gromov_witten([[2, 1, 3], [2, 1, 3]], [3, 2, 1], [1, 0]) == 1
    assert qs.gromov_witten([[2, 1, 3]], [1, 3, 2], [0, 0]) == 0


def test_expand_relations_vanish():
    for n in (2, 3, 4):
        for rel in qs.relations(n):
            assert qs.expand(n, rel).is_zero()
    x1, q1 = qs.Polynomial.x(1), qs.Polynomial.q(1)
    assert str(qs.expand(2, x1 * x1)) == "q1·σ[1,2]"
    assert str(qs.expand(3, x1 * x1 - q1)) == "σ[3,1,2]"


def test_partial():
    assert qs.partial_basis("1:3") == [[1, 2, 3], [2, 1, 3], [3, 1, 2]]
    assert str(qs.partial_quantum_product([2, 1], [2, 1], "1:2")) == "q1·σ[1,2]"
    assert str(qs.partial_quantum_product([2, 1, 3], [3, 1, 2], "1:3")) == "q1·σ[1,2,3]"
    assert str(qs.partial_quantum_schubert([2, 1], "1:2")) == "s1^1"
    assert qs.partial_gw([[2, 1, 3], [3, 1, 2]], [3, 1, 2], [1], "1:3") == 1


def test_json_round_trip():
    p = qs.quantum_schubert([3, 2, 1])
    assert qs.Polynomial.from_json(p.to_json()) == p
    doc = qs.quantum_product([2, 1, 3], [2, 1, 3]).to_json()
    assert doc["n"] == 3 and len(doc["terms"]) == 2


def test_verify_and_errors():
    results = qs.verify("associativity", n=3)
    assert all(r["passed"] for r in results)
    assert sum(r["cases"] for r in results) >= 216
    assert "kernel-chern-partial" in qs.suite_names()
    with pytest.raises(ValueError):
        qs.quantum_product([1, 1, 2], [1, 2, 3])
    with pytest.raises(ValueError):
        qs.verify("no-such-suite", n=3)
    with pytest.raises(ValueError):
        qs.expand(2, qs.Polynomial.g(1, 0))
    assert issubclass(qs.ExpansionError, ArithmeticError)
