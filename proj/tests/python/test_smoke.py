from fractions import Fraction

import pytest

import qpiseries


def test_registry():
    q_main = qpiseries.list_identities("q-main")
    assert sorted(r["id"] for r in q_main) == [
        "q-ramanujan-a", "q-ramanujan-b", "sun", "thm-b", "thm-c", "thm-d", "thm-e"]
    assert all(r["params"] == ["q"] for r in q_main)
    assert len(qpiseries.list_identities()) > len(q_main)
    with pytest.raises(ValueError):
        qpiseries.list_identities("nosuch")


def test_eval_side_matches_direct_summation():
    value, bound, terms = qpiseries.eval_side("sun", "lhs", {"q": "1/2"}, 60)
    expected = "11.63810069118188321508898725205935755003050987433346080975"
    assert float(value) == pytest.approx(float(expected), rel=1e-15)
    assert value.startswith("1.16381006911818832150889872520593575500305098743334608")
    assert float(bound) < 1e-55
    assert terms > 0


def test_verify_report():
    doc = qpiseries.verify("sun", q="1/2")
    assert doc["schema_version"] == 1
    (res,) = doc["results"]
    assert res["pass"] is True
    assert res["point_exact"] == {"q": "1/2"}
    assert float(res["residual"]) < 1e-50


def test_domain_errors():
    with pytest.raises(qpiseries.DomainError):
        qpiseries.verify("sun", q="2")
    with pytest.raises(ValueError):
        qpiseries.eval_side("sun", "lhs", {"q": "3/2"}, 30)
    with pytest.raises(ValueError):
        qpiseries.eval_side("sun", "middle", {"q": "1/2"}, 30)


def test_exact_telescoping_against_fractions():
    xs, ys, q, n = ["1/2", "1/3"], ["1/5", "1/7"], "2/5", 6
    lhs, rhs, residual = qpiseries.finite_sum_identity(xs, ys, q, n)
    assert residual == "0"
    assert lhs == rhs

    # Independent evaluation of the closed form with Python fractions.
    fx = [Fraction(x) for x in xs]
    fy = [Fraction(y) for y in ys]
    fq = Fraction(q)

    def poch(a, m):
        out = Fraction(1)
        for i in range(m):
            out *= 1 - a * fq**i
        return out

    closed = Fraction(1)
    for x in fx:
        closed *= poch(x, n + 1)
    for y in fy:
        closed /= poch(fq * y, n)
    tail = Fraction(1)
    for y in fy:
        tail *= 1 - y
    assert Fraction(rhs) == closed - tail


def test_limit():
    res = qpiseries.limit("thm-c")
    assert res["status"] == "ok"
    assert float(res["error"]) < 1e-6
    assert qpiseries.limit("thm-c", exponent=3)["status"] == "zero"
