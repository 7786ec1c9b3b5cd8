import pytest

from nicholsys import presets
from nicholsys.cyclotomic import CycNum, zeta
from nicholsys.dynkin import DynkinDiagram, NotFiniteError
from nicholsys.groupoid import (BoundExceeded, GroupoidError, LinearFactor, beta_cross_check,
                                dedup_sound, hull_lattice_points, is_induced_irreducible,
                                negation_closed, r_consistency, roots, run_algorithm,
                                shapo_determinant, state_consistency, support_vertices)
from reference_data import HULL_RANK2, ROOTS_RANK2, SUPPORT_RANK2


@pytest.fixture(scope="module")
def rank2():
    D = presets.diagram("rank2")
    return D, run_algorithm(D)


def test_rank2_outputs(rank2):
    D, st = rank2
    assert st.roots_sorted() == sorted(ROOTS_RANK2)
    assert st.support_sorted() == sorted(SUPPORT_RANK2)
    assert [str(f) for f in st.factors_sorted()] == [
        "t_2 - 1", "t_1 - 1", "t_1 - z6^4", "t_1 t_2 - z6", "t_1 t_2 - z6^3", "t_1^2 t_2 - z6^4"]


def test_positive_roots(rank2):
    D, st = rank2
    allr, pos = roots(D, state=st)
    assert sorted(pos) == [(0, 1), (1, 0), (1, 1), (2, 1)]
    assert len(allr) == 2 * len(pos)


def test_state_invariants(rank2):
    _, st = rank2
    assert negation_closed(st)
    assert dedup_sound(st)
    assert state_consistency(st)
    assert r_consistency(st)
    assert beta_cross_check(st)


def test_hull_lattice_points(rank2):
    D, st = rank2
    assert hull_lattice_points(state=st) == sorted(HULL_RANK2)
    assert hull_lattice_points(points=[(0, 0), (2, 0), (0, 2)]) == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


def test_support_vertices_sorted(rank2):
    D, st = rank2
    assert support_vertices(D, state=st) == sorted(SUPPORT_RANK2)


def test_irreducibility(rank2):
    D, st = rank2
    ok, witness = is_induced_irreducible(D, [zeta(6, 1), zeta(6, 1)], state=st)
    assert ok and witness is None
    ok, witness = is_induced_irreducible(D, [zeta(6, 0), zeta(6, 0)], state=st)
    assert not ok and str(witness) == "t_1 - 1"
    with pytest.raises(GroupoidError):
        is_induced_irreducible(D, [zeta(6, 0)], state=st)


def test_determinant_factors_cover_p(rank2):
    D, st = rank2
    factors = shapo_determinant(D, state=st)
    # each positive root gamma contributes m_gamma factors
    assert len(factors) == 6
    assert set(factors) == set(st.P)


def test_linear_factor():
    f = LinearFactor((1, 1), zeta(6, 1))
    assert str(f) == "t_1 t_2 - z6"
    assert f.partner() == LinearFactor((-1, -1), zeta(6, 5))
    assert f.evaluate([zeta(6, 0), zeta(6, 1)]).is_zero()
    assert str(LinearFactor((1, 0), CycNum.one(6) + zeta(6, 1))) == "t_1 - (1 + z6)"
    assert str(LinearFactor((1, 0), zeta(6, 3))) == "t_1 - z6^3"
    with pytest.raises(GroupoidError):
        LinearFactor((0, 0), zeta(6, 1))


def test_bound_and_finiteness():
    with pytest.raises(BoundExceeded):
        run_algorithm(presets.diagram("rank2"), bound=2)
    with pytest.raises(NotFiniteError):
        run_algorithm(DynkinDiagram.from_exponents(6, [0, 2], [5]))


@pytest.mark.parametrize("name,npos,nfactors", [("rank3_a3", 13, 31), ("rank3_a6", 13, 40)])
def test_rank3_counts(name, npos, nfactors):
    D = presets.diagram(name)
    st = run_algorithm(D)
    assert len(roots(D, state=st)[1]) == npos
    assert len(st.P) == nfactors
    assert len(st.S) == 96
