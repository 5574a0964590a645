import pytest

from qschubert.cartan import CartanData, builtin_cartan, cartan_from_json, symmetrizer
from qschubert.errors import BadShape, NotSymmetrizable, RankMismatch, UnknownType


def test_symmetric_matrix_has_unit_symmetrizer():
    assert symmetrizer([[2, -1], [-1, 2]]) == (1, 1)


def test_b2_short_root_gets_one():
    # the second simple root of [[2,-1],[-2,2]] is short
    assert symmetrizer([[2, -1], [-2, 2]]) == (2, 1)
    assert symmetrizer([[2, -2], [-1, 2]]) == (1, 2)


def test_g2_symmetrizer():
    assert symmetrizer([[2, -1], [-3, 2]]) == (3, 1)
    assert symmetrizer([[2, -3], [-1, 2]]) == (1, 3)


def test_symmetrizer_is_minimal_per_component():
    # A1 x B2: components are normalized independently
    gcm = [[2, 0, 0], [0, 2, -1], [0, -2, 2]]
    assert symmetrizer(gcm) == (1, 2, 1)


def test_affine_a1_is_symmetrizable():
    assert symmetrizer([[2, -2], [-2, 2]]) == (1, 1)


@pytest.mark.parametrize("gcm", [
    [[2, -1, -1], [-1, 2, -1], [-2, -1, 2]],  # cycle with inconsistent product
])
def test_not_symmetrizable(gcm):
    with pytest.raises(NotSymmetrizable):
        symmetrizer(gcm)


@pytest.mark.parametrize("gcm", [
    [],
    [[2, -1], [-1]],
    [[2, -1], [0, 2]],  # zero pattern not symmetric
    [[1, 0], [0, 2]],  # diagonal must be 2
    [[2, 1], [1, 2]],  # positive off-diagonal
])
def test_bad_shape(gcm):
    with pytest.raises(BadShape):
        CartanData(gcm)


def test_pairings_a2(A2):
    assert A2.form_weight_root(A2.fundamental_weight(1), A2.simple_root(1)) == 1
    assert A2.form_weight_root(A2.fundamental_weight(2), A2.simple_root(1)) == 0


def test_pairings_b2():
    # orientation with d = (1, 2)
    c = CartanData([[2, -2], [-1, 2]])
    assert c.sym == (1, 2)
    assert c.form_weight_root(c.fundamental_weight(2), c.simple_root(2)) == 2
    assert c.form_root_root(c.simple_root(2), c.simple_root(2)) == 4
    assert c.form_root_root(c.simple_root(1), c.simple_root(2)) == -2


def test_form_root_root_symmetric(G2):
    a, b = (1, 2), (3, -1)
    assert G2.form_root_root(a, b) == G2.form_root_root(b, a)


def test_root_to_weight_matches_form(A3):
    beta = (1, 1, 0)
    lam = A3.root_to_weight_coords(beta)
    assert lam == (1, 1, -1)
    for j in range(1, 4):
        assert A3.form_root_root(beta, A3.simple_root(j)) == \
            A3.form_weight_root(lam, A3.simple_root(j))


def test_rank_mismatch(A2):
    with pytest.raises(RankMismatch):
        A2.form_weight_root((1, 0, 0), (1, 0))


@pytest.mark.parametrize("letter,rank,order", [
    ("A", 3, 24), ("B", 3, 48), ("C", 3, 48), ("D", 4, 192), ("G", 2, 12), ("F", 4, 1152)])
def test_builtin_types_generate_right_group(letter, rank, order):
    from qschubert.weyl import elements_up_to_length
    c = builtin_cartan(letter, rank)
    assert len(elements_up_to_length(c, 100)) == order


def test_unknown_type():
    with pytest.raises(UnknownType):
        builtin_cartan("Z", 2)


def test_json_roundtrip():
    c = cartan_from_json('{"gcm": [[2, -1], [-3, 2]]}')
    assert c.sym == (3, 1)
    assert cartan_from_json({"type": "B", "rank": 2}).to_json()["d"] == [2, 1]
