"""Tests for the free inverse monoid on one generator and its finite quotients."""

import json
import random

import pytest

from monogenic.freeinv import (
    ChainCycleMonoid,
    FreeElement,
    NormalForm,
    free_eval,
)
from monogenic.oracle import closure
from monogenic.pperm import canonical_generator


def triple(e):
    return (e.lo, e.hi, e.end)


def test_free_eval_known_values():
    assert triple(free_eval("")) == (0, 0, 0)
    assert triple(free_eval("xX")) == (0, 1, 0)
    assert triple(free_eval("Xxxx")) == (-1, 2, 2)
    assert triple(free_eval("xxx")) == (0, 3, 3)
    with pytest.raises(ValueError) as err:
        free_eval("xyx")
    assert "character 2" in str(err.value)


def test_interval_validation():
    with pytest.raises(ValueError):
        FreeElement(1, 2, 1)
    with pytest.raises(ValueError):
        FreeElement(-1, 0, 1)


def test_free_eval_is_a_homomorphism():
    rng = random.Random(40927)
    for _ in range(300):
        u = "".join(rng.choice("xX") for _ in range(rng.randint(0, 12)))
        v = "".join(rng.choice("xX") for _ in range(rng.randint(0, 12)))
        assert free_eval(u + v) == free_eval(u) * free_eval(v)


def test_inverse_axioms():
    rng = random.Random(18453)
    words = ["", "x", "X", "xX", "Xx", "xxXX"]
    words += ["".join(rng.choice("xX") for _ in range(rng.randint(1, 10))) for _ in range(50)]
    for w in words:
        u = free_eval(w)
        assert u * u.inverse() * u == u
        assert u.inverse() * u * u.inverse() == u.inverse()
        assert (u * u.inverse()).is_idempotent()
    # idempotents commute
    for w1 in words[:20]:
        for w2 in words[:20]:
            e1 = free_eval(w1) * free_eval(w1).inverse()
            e2 = free_eval(w2) * free_eval(w2).inverse()
            assert e1 * e2 == e2 * e1


def test_normal_form_word_roundtrip():
    rng = random.Random(90210)
    for _ in range(200):
        w = "".join(rng.choice("xX") for _ in range(rng.randint(0, 14)))
        u = free_eval(w)
        nf = NormalForm(*u.normal_triple())
        assert free_eval(nf.word()) == u


def test_normal_form_str():
    assert str(NormalForm(0, 2, 1)) == "x^-0 x^2 x^-2 x^1"
    assert NormalForm(1, 2, 2).word() == "XxxXXxx"


def test_reduce_known_value():
    q = ChainCycleMonoid(2, 3)
    assert q.reduce(free_eval("xxxx")) == NormalForm(0, 2, 1)
    # below the chain bound nothing changes
    assert q.reduce(free_eval("xX")) == NormalForm(0, 1, 0)


def test_size_formula():
    assert ChainCycleMonoid(1, 1).size() == 2
    assert ChainCycleMonoid(2, 3).size() == 8
    assert ChainCycleMonoid(0, 4).size() == 4
    for n in range(0, 4):
        for k in range(1, 4):
            q = ChainCycleMonoid(n, k)
            assert len(q.elements()) == q.size()


def test_representative_count():
    q = ChainCycleMonoid(2, 3)
    assert q.representative_count() == 14
    assert len(q.representatives()) == 14
    # the representative census collapses onto the elements
    canon = {q.canonical(r) for r in q.representatives()}
    assert canon == set(q.elements())
    assert len(canon) == q.size() == 8


def test_representatives_collapse_only_at_full_chain():
    q = ChainCycleMonoid(2, 3)
    # x^-0 x^2 x^-2 x^1 and x^-1 x^2 x^-2 x^2 name the same element
    assert q.same_element(NormalForm(0, 2, 1), NormalForm(1, 2, 2))
    assert not q.same_element(NormalForm(0, 1, 0), NormalForm(0, 1, 1))


def test_multiplication_matches_concrete_model():
    for n in range(0, 4):
        for k in range(1, 4):
            q = ChainCycleMonoid(n, k)
            to_pperm = {e: q.to_partial_perm(e) for e in q.elements()}
            assert len(set(to_pperm.values())) == q.size()
            for u in q.elements():
                for v in q.elements():
                    assert to_pperm[q.multiply(u, v)] == to_pperm[u] * to_pperm[v]


def test_concrete_model_is_the_generated_monoid():
    for n in range(0, 4):
        for k in range(1, 4):
            q = ChainCycleMonoid(n, k)
            g = canonical_generator(n, k)
            model = closure([g, g.inverse()])
            assert set(q.to_partial_perm(e) for e in q.elements()) == set(model.elements)


def test_generator_and_identity():
    q = ChainCycleMonoid(2, 3)
    x = q.generator()
    assert q.to_partial_perm(x) == canonical_generator(2, 3)
    e = q.reduce(free_eval(""))
    assert q.multiply(e, x) == x
    assert q.multiply(x, e) == x


def test_cayley_csv_shape():
    q = ChainCycleMonoid(1, 1)
    lines = q.cayley_csv().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith(',"')
    assert lines[1].split(",")[0] == '"x^-0 x^0 x^-0 x^0"'


def test_cayley_json_is_closed():
    q = ChainCycleMonoid(2, 2)
    data = json.loads(q.cayley_json())
    assert data["chain"] == 2 and data["cycle"] == 2
    labels = data["elements"]
    assert len(labels) == q.size()
    for row in data["table"]:
        assert set(row) <= set(labels)


def test_cayley_table_size_guard():
    with pytest.raises(ValueError):
        ChainCycleMonoid(8, 5).cayley_csv()
