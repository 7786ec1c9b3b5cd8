"""Weyl groupoid exploration of a diagonal Dynkin diagram.

run_algorithm walks reflections breadth-first, collecting the automorphisms
s, reflected diagrams, support vertices beta, real roots and the linear
factors t_gamma - c whose product decides irreducibility of induced modules.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cyclotomic import CycNum, label_bound
from .dynkin import (NotFiniteError, bichar, column, identity_matrix, indchar_pair,
                     indchar_vec, is_i_finite, mat_mul, pullback_diagram, reflect,
                     s_matrix, vec_add, vec_neg, vec_scale)

DEFAULT_BOUND = 100000


class BoundExceeded(RuntimeError):
    pass


class GroupoidError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearFactor:
    """t_gamma - constant."""
    exponent: tuple
    constant: CycNum

    def __post_init__(self):
        if not any(self.exponent):
            raise GroupoidError("a linear factor needs a nonzero exponent")

    def partner(self):
        return LinearFactor(vec_neg(self.exponent), self.constant.inverse())

    def evaluate(self, r):
        """prod r_j^gamma_j - c."""
        acc = CycNum.one(self.constant.order)
        for rj, g in zip(r, self.exponent):
            if g:
                acc = acc * rj ** g
        return acc - self.constant

    def sort_key(self):
        return (self.exponent, self.constant.sort_key())

    def monomial_str(self):
        parts = []
        for j, g in enumerate(self.exponent, 1):
            if g == 1:
                parts.append("t_%d" % j)
            elif g:
                parts.append("t_%d^%d" % (j, g))
        return " ".join(parts)

    def __str__(self):
        c = self.constant.pretty()
        if c.startswith("-") and " " not in c:
            return "%s + %s" % (self.monomial_str(), c[1:])
        if " " in c:
            return "%s - (%s)" % (self.monomial_str(), c)
        return "%s - %s" % (self.monomial_str(), c)


@dataclass
class GroupoidState:
    D: object
    S: list = field(default_factory=list)
    X: list = field(default_factory=list)
    B: list = field(default_factory=list)
    W: list = field(default_factory=list)   # walk leading to S[n]
    R: list = field(default_factory=list)
    P: list = field(default_factory=list)
    steps: list = field(default_factory=list)  # (n, j, gamma, r) per processed pair

    def roots_sorted(self):
        return sorted(self.R)

    def support_sorted(self):
        return sorted(self.B)

    def factors_sorted(self):
        return sorted(self.P, key=LinearFactor.sort_key)


def _check_node(X, j, walk):
    if not is_i_finite(X, j):
        raise NotFiniteError("diagram reached by walk %s is not %d-finite"
                             % (_walk_str(walk), j + 1))
    if X.m(j) is None:
        raise NotFiniteError("m_%d is infinite on the diagram reached by walk %s"
                             % (j + 1, _walk_str(walk)))


def _walk_str(walk):
    return "(" + ",".join(str(i + 1) for i in walk) + ")"


def run_algorithm(D, bound=DEFAULT_BOUND):
    theta = D.theta
    st = GroupoidState(D)
    st.S.append(identity_matrix(theta))
    st.X.append(D)
    st.B.append((0,) * theta)
    st.W.append(())
    seen_s = {st.S[0]}
    seen_r = set()
    seen_p = set()
    n = 0
    while n < len(st.S):
        s, X, beta, walk = st.S[n], st.X[n], st.B[n], st.W[n]
        for j in range(theta):
            _check_node(X, j, walk)
            gamma = column(s, j)
            r = bichar(D, beta, gamma)
            st.steps.append((n, j, gamma, r))
            rinv = r.inverse()
            Xj = X.vertex[j]
            mj = X.m(j)
            for m in range(1, mj + 1):
                f = LinearFactor(gamma, rinv * Xj ** (1 - m))
                if f not in seen_p and f.partner() not in seen_p:
                    seen_p.add(f)
                    st.P.append(f)
            if gamma not in seen_r:
                seen_r.add(gamma)
                st.R.append(gamma)
            s2 = mat_mul(s, s_matrix(X, j))
            if s2 not in seen_s:
                seen_s.add(s2)
                st.S.append(s2)
                st.X.append(reflect(X, j))
                # beta - m_j s'(alpha_j) with s'(alpha_j) = -s(alpha_j)
                st.B.append(vec_add(beta, vec_scale(gamma, mj)))
                st.W.append(walk + (j,))
                if len(st.S) > bound:
                    raise BoundExceeded("more than %d automorphisms (bound)" % bound)
        n += 1
    return st


def roots(D, bound=DEFAULT_BOUND, state=None):
    st = state or run_algorithm(D, bound)
    allr = st.roots_sorted()
    pos = [g for g in allr if all(x >= 0 for x in g)]
    return allr, pos


def shapo_factor_for_root(D, gamma):
    p = indchar_pair(D, gamma, gamma)
    m = label_bound(p)
    if m is None:
        raise NotFiniteError("m_gamma is infinite for gamma = %s" % (gamma,))
    base = indchar_vec(D, gamma)
    return [LinearFactor(tuple(gamma), base * p ** (-k)) for k in range(1, m + 1)]


def shapo_determinant(D, bound=DEFAULT_BOUND, state=None):
    _, pos = roots(D, bound, state)
    out = []
    for g in pos:
        out.extend(shapo_factor_for_root(D, g))
    return out


def normalize_factor(f):
    """Representative of {f, partner(f)} with lexicographically positive exponent."""
    for x in f.exponent:
        if x > 0:
            return f
        if x < 0:
            return f.partner()
    return f


def is_induced_irreducible(D, r, bound=DEFAULT_BOUND, state=None):
    """(True, None) if no factor of P vanishes at r, else (False, first vanishing factor)."""
    st = state or run_algorithm(D, bound)
    if len(r) != D.theta:
        raise GroupoidError("need %d values, got %d" % (D.theta, len(r)))
    for f in st.P:
        if f.evaluate(r).is_zero():
            return False, f
    return True, None


def support_vertices(D, bound=DEFAULT_BOUND, state=None):
    st = state or run_algorithm(D, bound)
    return st.support_sorted()


# support hull

def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull2(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _affine_rank(points):
    base = points[0]
    rows = [[Fraction(x) for x in _sub(p, base)] for p in points[1:]]
    rank = 0
    ncol = len(base)
    for c in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _halfspaces(points):
    """Exact inequalities n.x <= b describing the convex hull (theta <= 3).

    Equalities for a lower-dimensional hull are returned as two inequalities.
    """
    theta = len(points[0])
    pts = sorted(set(points))
    if theta == 1:
        lo, hi = pts[0][0], pts[-1][0]
        return [((1,), hi), ((-1,), -lo)]
    dim = _affine_rank(pts)
    if theta == 2:
        if dim == 2:
            hull = _hull2(pts)
            out = []
            for a, b in zip(hull, hull[1:] + hull[:1]):
                nrm = (b[1] - a[1], a[0] - b[0])  # outward for counter-clockwise order
                out.append((nrm, _dot(nrm, a)))
            return out
        return _degenerate(pts, dim)
    if theta == 3:
        if dim == 3:
            return _facets3(pts)
        return _degenerate(pts, dim)
    raise GroupoidError("lattice enumeration supports theta <= 3 only")


def _facets3(pts):
    from scipy.spatial import ConvexHull
    hull = ConvexHull(pts)
    out = set()
    for simplex in hull.simplices:
        a, b, c = (pts[i] for i in simplex)
        nrm = _cross3(_sub(b, a), _sub(c, a))
        if not any(nrm):
            continue
        off = _dot(nrm, a)
        vals = [_dot(nrm, p) for p in pts]
        if all(v <= off for v in vals):
            out.add((nrm, off))
        elif all(v >= off for v in vals):
            out.add((vec_neg(nrm), -off))
        else:
            raise GroupoidError("hull facet failed exact verification")
    return sorted(out)


def _degenerate(pts, dim):
    """Hull inequalities for points spanning a lower-dimensional affine space."""
    theta = len(pts[0])
    base = pts[0]
    diffs = [_sub(p, base) for p in pts[1:]]
    out = []
    if dim == 0:
        for j in range(theta):
            e = tuple(int(k == j) for k in range(theta))
            out.append((e, base[j]))
            out.append((vec_neg(e), -base[j]))
        return out
    # normals of the affine span (integer vectors orthogonal to all diffs)
    normals = _integer_kernel(diffs, theta)
    for nrm in normals:
        off = _dot(nrm, base)
        out.append((nrm, off))
        out.append((vec_neg(nrm), -off))
    if dim == 1:
        d = next(x for x in diffs if any(x))
        vals = [_dot(d, p) for p in pts]
        out.append((d, max(vals)))
        out.append((vec_neg(d), -min(vals)))
        return out
    # dim == 2 inside Z^3: hull edges inside the plane
    n0 = normals[0]
    hull = _planar_hull(pts, n0)
    for a, b in zip(hull, hull[1:] + hull[:1]):
        edge = _sub(b, a)
        nrm = _cross3(edge, n0)
        off = _dot(nrm, a)
        vals = [_dot(nrm, p) for p in pts]
        if all(v <= off for v in vals):
            out.append((nrm, off))
        else:
            out.append((vec_neg(nrm), -off))
    return out


def _integer_kernel(rows, theta):
    # rational nullspace, scaled to integers
    mat = [[Fraction(x) for x in r] for r in rows if any(r)]
    piv_cols = []
    rank = 0
    for c in range(theta):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][c]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        piv_cols.append(c)
        rank += 1
    out = []
    for free in range(theta):
        if free in piv_cols:
            continue
        v = [Fraction(0)] * theta
        v[free] = Fraction(1)
        for i, c in enumerate(piv_cols):
            v[c] = -mat[i][free]
        den = 1
        for x in v:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append(tuple(int(x * den) for x in v))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _planar_hull(pts, normal):
    # drop the coordinate where the normal is largest and hull in 2D
    drop = max(range(3), key=lambda k: abs(normal[k]))
    keep = [k for k in range(3) if k != drop]
    proj = {(p[keep[0]], p[keep[1]]): p for p in pts}
    return [proj[q] for q in _hull2(list(proj))]


def hull_lattice_points(D=None, bound=DEFAULT_BOUND, state=None, points=None):
    """Integer points in the convex hull of the support vertices B (theta <= 3)."""
    if points is None:
        points = support_vertices(D, bound, state)
    points = [tuple(p) for p in points]
    theta = len(points[0])
    if theta > 3:
        raise GroupoidError("lattice enumeration supports theta <= 3 only (theta = %d)" % theta)
    ineqs = _halfspaces(points)
    lo = [min(p[k] for p in points) for k in range(theta)]
    hi = [max(p[k] for p in points) for k in range(theta)]
    out = []
    for x in product(*[range(lo[k], hi[k] + 1) for k in range(theta)]):
        if all(_dot(nrm, x) <= off for nrm, off in ineqs):
            out.append(tuple(x))
    return sorted(out)


# cross-checks

def beta_explicit(D, walk):
    """beta_i from the path-sum formula over Cartan integers along the walk."""
    theta = D.theta
    k = len(walk)
    diagrams = [D]
    for i in walk:
        diagrams.append(reflect(diagrams[-1], i))
    # A[b][j] = a^{R_(i_1..i_{b-1})(D)}_{i_b, j}, b one-based
    m = [diagrams[b - 1].m(walk[b - 1]) for b in range(1, k + 1)]

    def A(b, j):
        return diagrams[b - 1].a(walk[b - 1], j)

    # P[r][l] = sum over chains r = b_1 < ... < b_a = l of prod -A(b_c, i_{b_{c+1}})
    P = [[0] * (k + 1) for _ in range(k + 1)]
    for r in range(1, k + 1):
        P[r][r] = 1
        for l in range(r + 1, k + 1):
            P[r][l] = sum(P[r][b] * -A(b, walk[l - 1]) for b in range(r, l))
    beta = [0] * theta
    for r in range(1, k + 1):
        coeff = m[r - 1] + sum(m[l - 1] * P[r][l] for l in range(r + 1, k + 1))
        beta[walk[r - 1]] += coeff
    return tuple(beta)


def beta_cross_check(state, max_len=6):
    for beta, walk in zip(state.B, state.W):
        if len(walk) > max_len:
            continue
        if beta_explicit(state.D, walk) != beta:
            return False
    return True


def r_consistency(state):
    """r == indchar(-gamma) * pair(gamma, gamma) at every processed step."""
    D = state.D
    for _, _, gamma, r in state.steps:
        alt = indchar_vec(D, vec_neg(gamma)) * indchar_pair(D, gamma, gamma)
        if alt != r:
            return False
    return True


def state_consistency(state):
    """Every X[n] equals the pullback of D along S[n]."""
    return all(pullback_diagram(state.D, s) == X for s, X in zip(state.S, state.X))


def dedup_sound(state):
    keys = set(state.P)
    return all(f.partner() not in keys for f in state.P)


def negation_closed(state):
    allr, pos = roots(state.D, state=state)
    neg = {vec_neg(g) for g in pos}
    return set(allr) == set(pos) | neg and not (set(pos) & neg)
