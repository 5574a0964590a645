import pytest

from qschubert.errors import IndexOutOfRange, NotBelow, SizeMismatch
from qschubert.qmatrix import (KAPPA, all_u, build_model, contraction_report, minor_subsets,
                               normal_sequence_commutation, quantum_minor_image, relations_hold,
                               restoration, verify_theorem_main, verify_theorem_main2, verify_vanishing)
from qschubert.subexpr import lp, rp
from qschubert.weyl import from_word, identity


@pytest.fixture(scope="module")
def m22():
    return build_model(2, 2)


def test_model_shapes():
    one = build_model(1, 1)
    assert one.word == (1,) and one.N == 1
    assert build_model(2, 3).N == 6
    with pytest.raises(IndexOutOfRange):
        build_model(0, 2)


def test_model_2x2(m22):
    assert m22.N == 4 and m22.cartan.rank == 3
    assert m22.positions == ((1, 1), (1, 2), (2, 1), (2, 2))
    assert m22.w.word and len(m22.w) == 4
    assert len(all_u(m22)) == 14


def test_restoration_relations(m22):
    for pres in ("direct", "reverse"):
        emb = restoration(m22, frozenset(), pres)
        assert relations_hold(emb) == []
        assert not any(x.is_zero() for x in emb.images.values())


def test_full_diagram_is_zero(m22):
    emb = restoration(m22, range(1, 5), "direct")
    assert all(x.is_zero() for x in emb.images.values())


def test_t11_image_shape(m22):
    emb = restoration(m22, frozenset(), "direct")
    t11 = emb.t(1, 1)
    assert len(t11.terms) == 2
    y11 = emb.generator(1).scalar_mul(KAPPA)
    rest = t11 - y11
    (e, c), = rest.terms.items()
    assert e == (0, 1, 1, -1)
    assert (c / KAPPA).is_monomial()


def test_quantum_determinant_is_monomial(m22):
    emb = restoration(m22, frozenset(), "direct")
    det = quantum_minor_image(emb, [1, 2], [1, 2])
    assert det.is_monomial()
    assert quantum_minor_image(emb, [1], [1]) == emb.t(1, 1)
    with pytest.raises(SizeMismatch):
        quantum_minor_image(emb, [1, 1], [1, 2])
    with pytest.raises(SizeMismatch):
        quantum_minor_image(emb, [1], [1, 2])


def test_minor_dictionary(m22):
    c = m22.cartan
    e = identity(c)
    assert minor_subsets(m22, e, m22.w, 2) == ([1, 2], [1, 2])
    for k in range(1, 5):
        prev, cur = from_word(c, m22.word[:k - 1]), from_word(c, m22.word[:k])
        rows, cols = minor_subsets(m22, prev, cur, m22.word[k - 1])
        assert (rows[0], cols[0]) == m22.positions[k - 1] and len(rows) == 1
    assert minor_subsets(m22, e, e, 1) == ([], [])


def test_theorems_on_2x2(m22):
    for u in all_u(m22):
        for k in range(1, 5):
            assert verify_theorem_main(m22, u, k).equal
            assert verify_theorem_main2(m22, u, k).equal


def test_top_element_gives_scalars(m22):
    w = m22.w
    for k in range(1, 5):
        rep = verify_theorem_main(m22, w, k)
        assert all(not any(e) for e in rep.computed.terms)


def test_vanishing(m22):
    assert verify_vanishing(m22, m22.w) == {"u": list(m22.w.word), "case": "zero", "ok": True}
    assert verify_vanishing(m22, identity(m22.cartan))["case"] == "equal"
    for u in all_u(m22):
        rep = verify_vanishing(m22, u)
        assert rep["ok"]
        assert (rep["case"] == "zero") == (4 in rp(m22.cartan, m22.word, u))


def test_contraction(m22):
    for u in all_u(m22):
        for k in range(1, 5):
            assert contraction_report(m22, u, k)["ok"]


def test_cauchon_diagram_case1_generators(m22):
    # with D = LP in the direct presentation exactly the diagram positions vanish
    for u in all_u(m22):
        L = lp(m22.cartan, m22.word, u)
        emb = restoration(m22, L, "direct")
        assert {k for k, x in emb.images.items() if x.is_zero()} <= set(L)
        assert relations_hold(emb) == []


def test_determinantal_ideal(m22):
    # u = s_2: the diagram is a single corner and the kernel contains the quantum determinant
    u = from_word(m22.cartan, [2])
    for pres, D in (("direct", lp(m22.cartan, m22.word, u)), ("reverse", rp(m22.cartan, m22.word, u))):
        assert len(D) == 1
        emb = restoration(m22, D, pres)
        assert not any(x.is_zero() for x in emb.images.values())
        assert quantum_minor_image(emb, [1, 2], [1, 2]).is_zero()


def test_commutation_signs(m22):
    for u in all_u(m22):
        rep = normal_sequence_commutation(m22, u)
        assert rep["direct_bad"] == 0 and rep["reverse_bad"] == 0


def test_not_below(m22):
    # s_4 does not exist in A3; take an element outside the interval instead
    outside = from_word(m22.cartan, [1, 3])
    if outside in all_u(m22):
        outside = from_word(m22.cartan, [2, 1, 3, 2, 1])
    with pytest.raises(NotBelow):
        verify_theorem_main(m22, outside, 1)
