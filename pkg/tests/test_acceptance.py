"""Acceptance suite: one check per criterion, each reporting a PASS/FAIL line.

Run directly (python3 tests/test_acceptance.py) for the ten lines alone; under
pytest the same lines appear in the terminal summary.
"""

import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from reference_data import (FACTORS_A3, FACTORS_A6, FACTORS_RANK2, HULL_RANK2,  # noqa: E402
                            ROOTS_RANK2, ROOTS_RANK3, SUPPORT_A3, SUPPORT_A6,
                            SUPPORT_RANK2, parse_factors)

from nicholsys import presets  # noqa: E402
from nicholsys.braid import BraidSum, gnk_def, gnk_factored, reverse_antimorphism  # noqa: E402
from nicholsys.bvs import (eval_sum, nichols_component, nichols_ranks,  # noqa: E402
                           project_to_component, symmetrizer_map)
from nicholsys.cli import _cli_checks  # noqa: E402
from nicholsys.cyclotomic import zeta  # noqa: E402
from nicholsys.dynkin import cartan_matrix, is_i_finite, m_vector, reflect  # noqa: E402
from nicholsys.groupoid import hull_lattice_points, roots, run_algorithm  # noqa: E402
from nicholsys.properties import run_suite  # noqa: E402
from nicholsys.shapovalov_morphism import (ShapoConfig, kernel_in_degree,  # noqa: E402
                                           same_span, shapo_kernel)

RESULTS = {}


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _groupoid_matches(name, w, want_roots, want_support, want_factors):
    D = presets.diagram(name)
    st, secs = _timed(lambda: run_algorithm(D))
    allr, _ = roots(D, state=st)
    factors = parse_factors(want_factors, w, D.theta)
    problems = []
    if set(allr) != set(want_roots) or len(allr) != len(want_roots):
        problems.append("R differs")
    if set(st.B) != set(want_support):
        problems.append("B differs")
    if set(st.P) != set(factors) or len(st.P) != len(set(factors)):
        problems.append("P differs")
    return st, secs, problems


def criterion_1():
    st, secs, problems = _groupoid_matches("rank2", zeta(6, 2), ROOTS_RANK2, SUPPORT_RANK2,
                                           FACTORS_RANK2)
    ok = not problems and secs < 1 and len(st.R) == 8 and len(st.P) == 6
    return ok, "R %d, B %d, P %d, %.2fs %s" % (len(st.R), len(set(st.B)), len(st.P), secs,
                                                "; ".join(problems))


def criterion_2():
    parts, ok = [], True
    for name, w, support, factors in [("rank3_a3", zeta(6, 2), SUPPORT_A3, FACTORS_A3),
                                      ("rank3_a6", zeta(6, 1), SUPPORT_A6, FACTORS_A6)]:
        st, secs, problems = _groupoid_matches(name, w, ROOTS_RANK3, support, factors)
        good = not problems and len(st.S) == 96 and len(st.R) == 26 and secs < 30
        ok = ok and good
        parts.append("%s: #S %d, R %d, P %d, %.2fs%s" % (name, len(st.S), len(st.R), len(st.P), secs,
                                                          "" if good else " " + "; ".join(problems)))
    return ok, " | ".join(parts)


def _walk_diagram(D, walk):
    for i in walk:
        D = reflect(D, i)
    return D


def criterion_3():
    problems = []
    # rank two: R_1 D = D, R_2 D has vertices w^-1, -1 and edge -w^-1; R_1 R_2 D = R_2 D
    D = presets.diagram("rank2")
    D2 = reflect(D, 1)
    if reflect(D, 0) != D:
        problems.append("R_1 D != D")
    if [v.pretty() for v in D2.vertex] != ["z6^4", "z6^3"] or D2.D(0, 1) != zeta(6, 1):
        problems.append("R_2 D = %r" % D2)
    if reflect(D2, 0) != D2:
        problems.append("R_1 R_2 D != R_2 D")
    st = run_algorithm(D)
    for X in st.X:
        if cartan_matrix(X) != ((2, -2), (-1, 2)) or m_vector(X) != (2, 1):
            problems.append("rank two Cartan data at %r" % X)
    # rank three: a single edge labelled 3, then Cartan data by parity of reflections at node 3
    for name, a, a2 in [("rank3_a3", 3, 6), ("rank3_a6", 6, 3)]:
        D = presets.diagram(name)
        w = zeta(6, 6 // a)
        E = reflect(D, 2)
        if reflect(D, 0) != D or reflect(D, 1) != D or reflect(E, 0) != E or reflect(E, 1) != E:
            problems.append("%s: reflections at nodes 1, 2 are not loops" % name)
        want = [w, -w.inverse(), zeta(6, 3)]
        if list(E.vertex) != want or E.D(0, 1) != w.inverse() or not E.D(0, 2).is_one() \
                or E.D(1, 2) != w ** 2 or reflect(E, 2) != D:
            problems.append("%s: R_3 D = %r" % (name, E))
        even = ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
        odd = ((2, -1, 0), (-2, 2, -2), (0, -1, 2))
        st = run_algorithm(D)
        for X, walk in zip(st.X, st.W):
            parity = sum(1 for i in walk if i == 2) % 2
            cm, mv = (even, (a - 1, a - 1, 1)) if parity == 0 else (odd, (a - 1, a2 - 1, 1))
            if cartan_matrix(X) != cm or m_vector(X) != mv:
                problems.append("%s: walk %r" % (name, walk))
                break
            if not all(is_i_finite(X, i) for i in range(3)):
                problems.append("%s: not finite along %r" % (name, walk))
                break
    return not problems, "; ".join(problems) or "rank two and both rank three graphs match"


def criterion_4():
    pts = hull_lattice_points(presets.diagram("rank2"))
    ok = pts == sorted(HULL_RANK2)
    return ok, "%d lattice points%s" % (len(pts), "" if ok else ", expected %d" % len(HULL_RANK2))


GOLDEN_GNK = {
    (1, 1): BraidSum({(1,): 1}, 2),
    (2, 1): BraidSum({(2,): 1, (2, 1): 1}, 3),
    (2, 2): BraidSum({(2, 1, 2): 1}, 3),
    (3, 1): BraidSum({(3,): 1, (3, 2): 1, (3, 2, 1): 1}, 4),
    (3, 2): BraidSum({(3, 2, 3): 1, (3, 2, 3, 1): 1, (3, 2, 3, 1, 2): 1}, 4),
    (3, 3): BraidSum({(3, 2, 3, 1, 2, 3): 1}, 4),
}


def criterion_5():
    t0 = time.perf_counter()
    problems = []
    spaces = [("fk3", presets.fk3()), ("diag", presets.random_diagonal_space())]
    for label, space in spaces:
        for (n, k), g in GOLDEN_GNK.items():
            op = eval_sum(space, g, n + 1)
            if op != eval_sum(space, gnk_def(n, k), n + 1) or op != eval_sum(space, gnk_factored(n, k), n + 1):
                problems.append("%s: g_{%d,%d}" % (label, n, k))
        for n in range(5):
            S = symmetrizer_map(space, n + 1)
            for k in range(n + 1):
                g = gnk_def(n, k)
                lhs = S.compose(eval_sum(space, g, n + 1))
                rhs = eval_sum(space, reverse_antimorphism(g), n + 1).compose(S)
                if lhs != rhs:
                    problems.append("%s: commuting fails at n=%d, k=%d" % (label, n, k))
    secs = time.perf_counter() - t0
    ok = not problems and secs < 60
    return ok, "6 golden values, 15 (n, k) pairs on 2 spaces, %.2fs %s" % (secs, "; ".join(problems))


def criterion_6():
    ranks, secs = _timed(lambda: nichols_ranks(presets.fk3(), 5))
    ok = ranks == [1, 3, 4, 3, 1, 0] and sum(ranks) == 12 and secs < 10
    return ok, "ranks %s, total %d, %.2fs" % (ranks, sum(ranks), secs)


def _fk3_foki_elements(space, lam):
    """x_(ik) x_(ij) + (lam - 1) q((ik),(ij)) x_(jk) x_(ik) for the two 3-cycles (ijk)."""
    idx = {lab: n for n, lab in enumerate(space.labels)}

    def t(i, j):
        return idx["(%d%d)" % (min(i, j), max(i, j))]

    one = space.one()
    out = []
    for i, j, k in [(1, 2, 3), (1, 3, 2)]:
        a, b, c = t(i, k), t(i, j), t(j, k)
        q = space.cocycle[a][b]
        out.append({(a, b): one, (c, a): (lam - one) * q})
    return out


def criterion_7():
    t0 = time.perf_counter()
    problems, notes = [], []
    space = presets.fk3(12)
    # the vanishing condition 1 - lam + lam^2 = 0 holds exactly for lam = -z3 and lam = z6
    for label, e in [("-1", 6), ("z3", 4), ("z4", 3), ("-z4", 9), ("z12", 1), ("-z3", 10), ("z6", 2)]:
        lam = zeta(12, e)
        one = space.one()
        vanishing = (one - lam + lam * lam).is_zero()
        dims = shapo_kernel(ShapoConfig(space, lam, max_degree=4)).dims
        if vanishing:
            if dims != [0, 2, 3, 1]:
                problems.append("lambda %s: dims %s" % (label, dims))
        elif any(dims):
            problems.append("lambda %s: nonzero kernel %s" % (label, dims))
        notes.append("%s:%s" % (label, "".join(map(str, dims))))
    lam = zeta(12, 10)
    comp = nichols_component(space, 2)
    basis, _ = kernel_in_degree(ShapoConfig(space, lam, max_degree=2), 2, comp)
    listed = [project_to_component(space, comp, v) for v in _fk3_foki_elements(space, lam)]
    if not same_span(basis, listed, space.zero()):
        problems.append("degree-2 kernel is not spanned by the two listed elements")
    secs = time.perf_counter() - t0
    ok = not problems and secs < 30
    return ok, "dims %s, %.2fs %s" % (" ".join(notes), secs, "; ".join(problems))


def _z5_lines(space, lam):
    one = space.one()
    out = []
    for i in range(5):
        out.append({((i + 2) % 5, i): one, ((i + 3) % 5, (i + 2) % 5): one - lam,
                    ((i + 1) % 5, (i + 3) % 5): one - lam + lam * lam})
    return out


def criterion_8():
    t0 = time.perf_counter()
    problems = []
    space = presets.z5(4)
    lam = zeta(4, 1)
    comp = nichols_component(space, 2)
    basis, _ = kernel_in_degree(ShapoConfig(space, lam, max_degree=2), 2, comp)
    lines = [project_to_component(space, comp, v) for v in _z5_lines(space, lam)]
    if len(basis) != 5 or not same_span(basis, lines, space.zero()):
        problems.append("lambda z4: dim %d or lines differ" % len(basis))
    d_minus = len(kernel_in_degree(ShapoConfig(space, -space.one(), max_degree=2), 2)[0])
    if d_minus:
        problems.append("lambda -1: dim %d" % d_minus)
    space10 = presets.z5(10)
    lam5 = -zeta(10, 2)
    d4 = len(kernel_in_degree(ShapoConfig(space10, lam5, max_degree=4), 4)[0])
    if d4 != 4:
        problems.append("lambda -z5: degree-4 dim %d" % d4)
    secs = time.perf_counter() - t0
    ok = not problems and secs < 300
    return ok, "z4: %d lines, -1: %d, -z5 degree 4: %d, %.2fs %s" % (
        len(basis), d_minus, d4, secs, "; ".join(problems))


def criterion_9():
    t0 = time.perf_counter()
    d2 = len(kernel_in_degree(ShapoConfig(presets.fk4(6), zeta(6, 1), max_degree=2), 2)[0])
    d3 = len(kernel_in_degree(ShapoConfig(presets.fk4(4), zeta(4, 1), max_degree=3), 3)[0])
    secs = time.perf_counter() - t0
    ok = d2 == 8 and d3 == 6 and secs < 600
    return ok, "degree 2 at z6: %d, degree 3 at z4: %d, %.2fs" % (d2, d3, secs)


def criterion_10():
    results = run_suite(extra=_cli_checks())
    failed = [r for r in results if not r.passed]
    detail = "%d/%d invariants hold" % (len(results) - len(failed), len(results))
    if failed:
        detail += "; failing: " + ", ".join("%s.%s" % (r.module, r.name) for r in failed)
    return not failed, detail


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(n, ok, detail):
    return "criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail.strip())


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n):
    ok, detail = CRITERIA[n - 1]()
    RESULTS[n] = _line(n, ok, detail)
    print(RESULTS[n])
    assert ok, detail


if __name__ == "__main__":
    bad = 0
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        bad += not ok
        print(_line(n, ok, detail), flush=True)
    sys.exit(1 if bad else 0)
