import pytest

from nicholsys import presets
from nicholsys.cyclotomic import zeta
from nicholsys.dynkin import (DiagramError, DynkinDiagram, NotFiniteError, bichar, cartan_matrix,
                              ext_finite_check, extended_diagram, identity_matrix, indchar_pair,
                              indchar_vec, is_i_finite,
                              m_compatible, m_vector, mat_mul, pullback_diagram,
                              reflect, s_matrix)


def test_from_exponents():
    D = presets.diagram("rank2")
    assert D.theta == 2
    assert [v.pretty() for v in D.vertex] == ["z6^2", "z6^3"]
    assert D.D(0, 1) == zeta(6, 5)
    assert D.D(1, 0) == D.D(0, 1)


def test_exponent_count_checked():
    with pytest.raises(DiagramError):
        DynkinDiagram.from_exponents(6, [1], [3])
    with pytest.raises(DiagramError):
        DynkinDiagram.from_exponents(6, [1, 2, 3], [1])


def test_rank_two_cartan():
    D = presets.diagram("rank2")
    assert cartan_matrix(D) == ((2, -2), (-1, 2))
    assert m_vector(D) == (2, 1)


def test_reflections_rank_two():
    D = presets.diagram("rank2")
    assert reflect(D, 0) == D
    E = reflect(D, 1)
    assert [v.pretty() for v in E.vertex] == ["z6^4", "z6^3"]
    assert E.D(0, 1) == zeta(6, 1)
    assert reflect(E, 1) == D


@pytest.mark.parametrize("name", ["rank2", "rank3_a3", "rank3_a6"])
def test_reflection_is_involutive(name):
    D = presets.diagram(name)
    for i in range(D.theta):
        assert reflect(reflect(D, i), i) == D


def test_vertex_one_is_not_finite():
    D = DynkinDiagram.from_exponents(6, [0, 2], [5])
    assert not is_i_finite(D, 0)
    assert is_i_finite(D, 1)
    with pytest.raises(NotFiniteError):
        reflect(D, 0)


def test_s_matrix_is_involution():
    D = presets.diagram("rank3_a3")
    for i in range(3):
        s = s_matrix(D, i)
        assert mat_mul(s, s) == identity_matrix(3)


def test_pullback_equals_reflection():
    D = presets.diagram("rank2")
    assert pullback_diagram(D, s_matrix(D, 1)) == reflect(D, 1)


def test_characters():
    D = presets.diagram("rank2")
    assert bichar(D, (1, 0), (0, 1)) == zeta(6, 5)
    assert bichar(D, (1, 0), (1, 0)) == zeta(6, 4)
    assert indchar_vec(D, (1, 1)) == zeta(6, 5)
    # q_11 q_22 D_12 on the diagonal of the pairing
    assert indchar_pair(D, (1, 1), (1, 1)) == zeta(6, 4)
    assert indchar_pair(D, (0, 1), (1, 0)).is_one()


def test_extended_diagram():
    D = presets.diagram("rank2")
    X = extended_diagram(D)
    assert X.theta == 3
    assert m_compatible(D, 0, 1)
    assert all(ext_finite_check(D, i) for i in range(2))
