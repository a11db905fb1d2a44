import math

import pytest

import niaschema as nia


def test_generate_sizes():
    assert len(nia.generate(0)) == 3
    assert [len(nia.generate(n)) for n in range(1, 6)] == [n + 5 for n in range(1, 6)]
    ids = [cid for cid, _ in nia.generate(1)]
    assert set(ids) == {"C1", "C2", "C3", "C4_0", "C4_1", "C5"}


def test_extraction_agrees():
    assert all(nia.extraction_agrees(n) for n in range(4))


def test_clause_utilities():
    assert nia.canonicalize("eq(f(Q),n0), eq(f(P),n0), le(s(P),Q) |-") == (
        "eq(f(v0),n0), eq(f(v1),n0), le(s(v0),v1) |-"
    )
    assert nia.is_tautology("eq(f(A),n0) |- eq(f(A),n0)")
    assert nia.subsumes("|- le(A,A)", "|- le(s(x_1),s(x_1))")
    assert nia.unify("f(Y)", "f(s(x_1))") == {"Y": "s(x_1)"}
    assert nia.unify("f(X)", "s(X)") is None
    assert nia.unfold("m(2,x,T)") == "max(s(x_1),max(s(x_2),T))"
    with pytest.raises(ValueError):
        nia.canonicalize("le(A, |-")


def test_refute_and_growth():
    proof = nia.refute(3)
    assert proof.root == "|-"
    assert proof.verify()["ok"]
    assert proof.occ("C5") == 65 == nia.recurrence_a(4)
    again = nia.Proof.from_json(proof.to_json())
    assert again.verify()["ok"] and again.size == proof.size


def test_recurrence_closed_form():
    for m in range(21):
        assert nia.recurrence_a(m) == nia.closed_form_a(m)
        assert nia.closed_form_a(m) == sum(math.factorial(m) // math.factorial(i) for i in range(m + 1))


def test_saturate():
    result = nia.saturate(1, max_seconds=10)
    assert result["status"] == "refuted"
    assert result["proof"].verify(relaxed=True)["ok"]


def test_tptp_round_trip():
    text = nia.to_tptp(3)
    assert "cnf(c4_0, axiom, ( ~eq(f(X),n0) | ~eq(f(Y),n0) | ~le(s(X),Y) ))." in text
    back = nia.parse_tptp(text)
    assert sorted(nia.canonicalize(c) for _, c in back) == sorted(
        nia.canonicalize(c) for _, c in nia.generate(3)
    )


def test_ordering_report():
    report = nia.ordering_report(3)
    assert report["anti_reflexive"]["holds"] and report["anti_symmetric"]["holds"]
    assert not report["transitive"]["holds"]
