import pytest

from qschubert.errors import BadShape, LengthMismatch, MixedTori, NotMonomial
from qschubert.qtorus import CommutationMatrix, invert_monomial, transport_commutation
from qschubert.scalars import ONE, S, ScalarQ


@pytest.fixture
def T2():
    # Y_2 Y_1 = s^3 Y_1 Y_2
    return CommutationMatrix.from_lower(2, {(1, 0): 3})


def test_cocycle_definition(T2):
    assert T2.mono_mul_cocycle((0, 1), (1, 0)) == 3
    assert T2.mono_mul_cocycle((1, 0), (0, 1)) == 0
    assert T2.mono_mul_cocycle((2, -1), (0, 0)) == 0


def test_defining_relation(T2):
    y1, y2 = T2.generator(0), T2.generator(1)
    assert y2 * y1 == (y1 * y2).scalar_mul(S ** 3)


def test_ordered_monomial(T2):
    desc = T2.ordered_monomial({0: 1, 1: 1})
    asc = T2.ordered_monomial({0: 1, 1: 1}, descending=False)
    assert desc == T2.generator(1) * T2.generator(0)
    assert desc == asc.scalar_mul(S ** 3)
    assert T2.ordered_monomial({1: 4}) == T2.generator(1) ** 4


def test_invert_monomial(T2):
    x = T2.monomial((1, -2), S ** 3)
    inv = invert_monomial(x)
    assert x * inv == T2.one() == inv * x
    assert invert_monomial(T2.generator(0)) == T2.monomial((-1, 0))
    with pytest.raises(NotMonomial):
        invert_monomial(T2.generator(0) + T2.generator(1))


def test_negative_power(T2):
    y = T2.generator(1) * T2.generator(0)
    assert y ** -2 * y ** 2 == T2.one()


def test_mixed_tori(T2):
    other = CommutationMatrix.from_lower(2, {(1, 0): 1})
    with pytest.raises(MixedTori):
        T2.generator(0) * other.generator(0)


def test_validation():
    with pytest.raises(BadShape):
        CommutationMatrix(((0, 1), (1, 0)))
    with pytest.raises(LengthMismatch):
        CommutationMatrix(((0, 1),))


def test_transport_identity_and_doubling(T2):
    assert transport_commutation(T2, [[1, 0], [0, 1]]) == T2
    doubled = transport_commutation(T2, [[2, 0], [0, 1]])
    assert doubled.skew[1][0] == 6


def test_transport_realized_by_monomials():
    cm = CommutationMatrix.from_lower(3, {(1, 0): 2, (2, 0): -4, (2, 1): 6})
    M = [[1, 0], [2, -1], [0, 3]]
    new = transport_commutation(cm, M)
    a = cm.monomial([row[0] for row in M])
    b = cm.monomial([row[1] for row in M])
    assert a * b == (b * a).scalar_mul(S ** new.skew[0][1])


def test_transport_length_mismatch(T2):
    with pytest.raises(LengthMismatch):
        transport_commutation(T2, [[1, 0, 0]])


def test_centrality():
    cm = CommutationMatrix.from_lower(3, {(1, 0): 2, (2, 1): 2, (2, 0): 0})
    # skew . (1, 0, 1) = 0, so Y_1 Y_3 is central
    assert cm.monomial((1, 0, 1)).is_central()
    assert not cm.generator(0).is_central()
    y = cm.monomial((1, 0, 1))
    for i in range(3):
        g = cm.generator(i)
        assert y * g == g * y


def test_json_is_sorted(T2):
    x = T2.monomial((0, 1), ScalarQ.laurent({-2: 1, 2: -1})) + T2.monomial((1, 0), ONE)
    js = x.to_json()
    assert [t["e"] for t in js] == [[0, 1], [1, 0]]
    assert js[0]["num"] and js[0]["den"] == "1*s^0"
