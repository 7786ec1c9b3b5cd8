"""Dynkin diagrams of diagonal type over Q(zeta_N).

Vectors in Z^theta are plain tuples; index j is zero-based in code and
one-based in printed output.  Integer matrices are tuples of rows, and the
j-th column of an s-matrix is the image of alpha_j.
"""

from dataclasses import dataclass

from .cyclotomic import CycNum, label_bound, q_int

# a_ij search limit when D_i is not a root of unity (only reachable from
# library callers; exponent-encoded input always gives roots of unity)
NON_ROOT_SEARCH = 256


class NotFiniteError(ArithmeticError):
    pass


class DiagramError(ValueError):
    pass


class DynkinDiagram:
    """Complete graph on theta vertices with labels D_j and edge labels D_jk."""

    __slots__ = ("theta", "order", "vertex", "_edge", "_cache")

    def __init__(self, vertex, edge):
        vertex = tuple(vertex)
        if not vertex:
            raise DiagramError("a diagram needs at least one vertex")
        order = vertex[0].order
        theta = len(vertex)
        full = {}
        for key, v in dict(edge).items():
            j, k = key
            if j == k:
                raise DiagramError("diagonal edge labels are derived from vertices")
            a, b = min(j, k), max(j, k)
            if (a, b) in full and full[(a, b)] != v:
                raise DiagramError("edge (%d,%d) given twice with different labels" % (a + 1, b + 1))
            full[(a, b)] = v
        for j in range(theta):
            for k in range(j + 1, theta):
                if (j, k) not in full:
                    raise DiagramError("missing edge label for (%d,%d)" % (j + 1, k + 1))
        for v in list(vertex) + list(full.values()):
            if not isinstance(v, CycNum) or v.order != order:
                raise DiagramError("labels must lie in one field Q(zeta_%d)" % order)
            if v.is_zero():
                raise DiagramError("labels must be nonzero")
        self.theta = theta
        self.order = order
        self.vertex = vertex
        self._edge = full
        self._cache = {}

    @classmethod
    def from_exponents(cls, order, vertex_exponents, edge_exponents):
        """edge_exponents: upper-triangular rows (1,2),(1,3),...,(2,3),..."""
        from .cyclotomic import zeta
        theta = len(vertex_exponents)
        flat = list(edge_exponents)
        if flat and isinstance(flat[0], (list, tuple)):
            flat = [e for row in flat for e in row]
        if len(flat) != theta * (theta - 1) // 2:
            raise DiagramError("expected %d edge exponents for theta=%d, got %d"
                               % (theta * (theta - 1) // 2, theta, len(flat)))
        it = iter(flat)
        edge = {(j, k): zeta(order, next(it)) for j in range(theta) for k in range(j + 1, theta)}
        return cls([zeta(order, e) for e in vertex_exponents], edge)

    def D(self, j, k=None):
        if k is None or j == k:
            v = self.vertex[j]
            return v if k is None else v * v
        return self._edge[(min(j, k), max(j, k))]

    def edge(self, j, k):
        return self.D(j, k)

    def edges(self):
        return dict(self._edge)

    def __eq__(self, other):
        if not isinstance(other, DynkinDiagram):
            return NotImplemented
        return self.vertex == other.vertex and self._edge == other._edge

    def __hash__(self):
        return hash((self.vertex, tuple(sorted(self._edge.items()))))

    def __repr__(self):
        vs = ", ".join(v.pretty() for v in self.vertex)
        es = ", ".join("%d%d:%s" % (j + 1, k + 1, v.pretty()) for (j, k), v in sorted(self._edge.items()))
        return "DynkinDiagram([%s], {%s})" % (vs, es)

    # cached integers

    def m(self, i):
        key = ("m", i)
        if key not in self._cache:
            self._cache[key] = label_bound(self.vertex[i])
        return self._cache[key]

    def a(self, i, j):
        key = ("a", i, j)
        if key not in self._cache:
            self._cache[key] = _cartan_entry(self, i, j)
        return self._cache[key]


def _cartan_entry(D, i, j):
    if i == j:
        return 2
    q = D.vertex[i]
    e = D.D(i, j)
    mb = label_bound(q)
    limit = mb if mb is not None else NON_ROOT_SEARCH
    if q.is_one():
        limit = 0
    p = e
    for m in range(limit + 1):
        # (m+1)_q (q^m D_ij - 1) = 0
        if (p - 1).is_zero() or q_int(m + 1, q).is_zero():
            return -m
        p = p * q
    return None


def m_i(D, i):
    return D.m(i)


def a_ij(D, i, j):
    return D.a(i, j)


def is_i_finite(D, i):
    return all(D.a(i, j) is not None for j in range(D.theta))


def cartan_matrix(D):
    return tuple(tuple(D.a(i, j) for j in range(D.theta)) for i in range(D.theta))


def m_vector(D):
    return tuple(D.m(i) for i in range(D.theta))


def _require_finite(D, i):
    if not is_i_finite(D, i):
        bad = [j + 1 for j in range(D.theta) if D.a(i, j) is None]
        raise NotFiniteError("diagram is not %d-finite (a_%d,j undefined for j in %s)"
                             % (i + 1, i + 1, bad))


def reflect(D, i):
    """R_i(D)."""
    _require_finite(D, i)
    a = [D.a(i, j) for j in range(D.theta)]
    Di = D.vertex[i]
    vertex = [D.vertex[j] * D.D(i, j) ** (-a[j]) * Di ** (a[j] * a[j]) for j in range(D.theta)]
    edge = {}
    for j in range(D.theta):
        for k in range(j + 1, D.theta):
            edge[(j, k)] = (D.D(j, k) * D.D(i, k) ** (-a[j]) * D.D(i, j) ** (-a[k])
                            * Di ** (2 * a[j] * a[k]))
    return DynkinDiagram(vertex, edge)


# integer linear algebra on Z^theta

def unit(theta, j):
    return tuple(int(k == j) for k in range(theta))


def identity_matrix(theta):
    return tuple(unit(theta, j) for j in range(theta))


def mat_apply(M, v):
    return tuple(sum(M[r][c] * v[c] for c in range(len(v))) for r in range(len(M)))


def mat_mul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[r][k] * B[k][c] for k in range(n)) for c in range(n)) for r in range(n))


def vec_add(v, w):
    return tuple(a + b for a, b in zip(v, w))


def vec_scale(v, c):
    return tuple(c * a for a in v)


def vec_neg(v):
    return tuple(-a for a in v)


def s_matrix(D, i):
    """s_i^D with s_i(alpha_j) = alpha_j - a_ij alpha_i (columns are images)."""
    _require_finite(D, i)
    theta = D.theta
    cols = [vec_add(unit(theta, j), vec_scale(unit(theta, i), -D.a(i, j))) for j in range(theta)]
    return tuple(tuple(cols[c][r] for c in range(theta)) for r in range(theta))


def column(M, j):
    return tuple(row[j] for row in M)


# characters

def bichar(D, v, w):
    """chi(v, w) = prod_{j,k} D_jk^(v_j w_k) with D_jj = D_j^2."""
    acc = CycNum.one(D.order)
    for j in range(D.theta):
        if not v[j]:
            continue
        for k in range(D.theta):
            e = v[j] * w[k]
            if e:
                acc = acc * D.D(j, k) ** e
    return acc


def indchar_vec(D, v):
    acc = CycNum.one(D.order)
    for j in range(D.theta):
        if v[j]:
            acc = acc * D.vertex[j] ** v[j]
    return acc


def indchar_pair(D, v, w):
    """The bicharacter with (alpha_j, alpha_j) -> D_j, (alpha_j, alpha_k) -> D_jk for
    j < k and 1 for j > k."""
    acc = CycNum.one(D.order)
    for j in range(D.theta):
        if v[j] and w[j]:
            acc = acc * D.vertex[j] ** (v[j] * w[j])
        for k in range(j + 1, D.theta):
            e = v[j] * w[k]
            if e:
                acc = acc * D.D(j, k) ** e
    return acc


def pullback_diagram(D, s):
    """Diagram with vertices pair(s a_j, s a_j) and edges chi(s a_j, s a_k)."""
    cols = [column(s, j) for j in range(D.theta)]
    vertex = [indchar_pair(D, c, c) for c in cols]
    edge = {(j, k): bichar(D, cols[j], cols[k])
            for j in range(D.theta) for k in range(j + 1, D.theta)}
    return DynkinDiagram(vertex, edge)


@dataclass(frozen=True)
class MonomialEntry:
    """The monomial t_gamma * constant."""
    exponent: tuple
    constant: CycNum


def ext_reflect_entry(D, s, beta, j):
    """Entry of the reflected extended diagram for node j along a walk (s, beta)."""
    gamma = column(s, j)
    return MonomialEntry(gamma, bichar(D, beta, gamma))


def ext_reflect_entry_alt(D, s, j):
    gamma = column(s, j)
    return MonomialEntry(gamma, indchar_vec(D, vec_neg(gamma)) * indchar_pair(D, gamma, gamma))


def m_compatible(D, i, j):
    """D_ij^(m_i + a_ij) D_i^(-a_ij (1 + 2 m_i + a_ij)) == 1 (True if m_i is infinite)."""
    m = D.m(i)
    a = D.a(i, j)
    if m is None or a is None:
        return True
    val = D.D(i, j) ** (m + a) * D.vertex[i] ** (-a * (1 + 2 * m + a))
    return val.is_one()


def _generic_order(order):
    # a prime p > 2N not dividing N: z_{Np}^k never meets the roots of unity of Q(z_N)
    p = 2 * order + 1
    while any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)) or order % p == 0:
        p += 1
    return order * p


def extended_diagram(D, t_exponents=None):
    """ext D with D_{j,theta+1} = t_j, modelled by roots of unity of an order
    coprime to everything in the original field (so no relation
    D_j^m t_j = 1 can hold)."""
    from .cyclotomic import embed, zeta
    M = _generic_order(D.order)
    theta = D.theta
    if t_exponents is None:
        t_exponents = [D.order * (j + 1) + 1 for j in range(theta)]
    vertex = [embed(v, M) for v in D.vertex] + [CycNum.one(M) * -1]
    edge = {k: embed(v, M) for k, v in D.edges().items()}
    for j in range(theta):
        edge[(j, theta)] = zeta(M, t_exponents[j])
    return DynkinDiagram(vertex, edge)


def ext_finite_check(D, i):
    """Compare i-finiteness of ext D with (D i-finite and m_i finite), and
    -a_{i,theta+1} with m_i.  Returns True when both agree."""
    E = extended_diagram(D)
    lhs = is_i_finite(E, i)
    rhs = is_i_finite(D, i) and D.m(i) is not None
    if lhs != rhs:
        return False
    if D.m(i) is not None:
        return E.a(i, D.theta) == -D.m(i)
    return True
