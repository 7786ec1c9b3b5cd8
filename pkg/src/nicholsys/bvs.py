"""Braided vector spaces of diagonal and rack type, and their Nichols components.

Tensor basis elements of V^{(x)n} are index tuples (i_1, ..., i_n), ordered
lexicographically.  The generator c_j acts on tensor positions j, j+1
(one-based); a braid word acts right-to-left.
"""

from dataclasses import dataclass, field
from itertools import product

from .braid import BraidSum, BraidWord, symmetrizer
from .cyclotomic import CycNum, CyclotomicError
from .linalg import Echelon, InconsistentSolve, vec_axpy

DEFAULT_CAP = 10 ** 6


class SpaceError(ValueError):
    pass


class ResourceError(RuntimeError):
    pass


class BraidedSpace:
    """A finite-dimensional braided vector space over Q(zeta_N).

    kind "diagonal": c(x_i (x) x_j) = q[i][j] x_j (x) x_i.
    kind "rack":     c(x_i (x) x_j) = q[i][j] x_{i |> j} (x) x_i.
    """

    def __init__(self, kind, dim, order, qmatrix=None, quandle=None, cocycle=None,
                 labels=None):
        self.kind = kind
        self.dim = dim
        self.order = order
        self.labels = list(labels) if labels is not None else [str(i) for i in range(dim)]
        if kind == "diagonal":
            self.qmatrix = _check_table(qmatrix, dim, order, "qmatrix")
            self.quandle = None
            self.cocycle = None
        elif kind == "rack":
            self.quandle = [list(row) for row in quandle]
            self.cocycle = _check_table(cocycle, dim, order, "cocycle")
            self.qmatrix = None
            _check_quandle(self.quandle, dim)
        else:
            raise SpaceError("unknown kind %r" % (kind,))
        self._act = {}
        for i in range(dim):
            for j in range(dim):
                if kind == "diagonal":
                    self._act[(i, j)] = (j, i, self.qmatrix[i][j])
                else:
                    self._act[(i, j)] = (self.quandle[i][j], i, self.cocycle[i][j])
        if kind == "rack":
            bad = braid_relation_failure(self)
            if bad is not None:
                raise SpaceError("braid equation fails on basis tuple %r" % (bad,))

    def act(self, i, j):
        """c(x_i (x) x_j) = s * x_a (x) x_b, returned as (a, b, s)."""
        return self._act[(i, j)]

    def one(self):
        return CycNum.one(self.order)

    def zero(self):
        return CycNum.zero(self.order)

    def __repr__(self):
        return "BraidedSpace(%s, dim=%d, N=%d)" % (self.kind, self.dim, self.order)


def _check_table(table, dim, order, name):
    if table is None or len(table) != dim or any(len(r) != dim for r in table):
        raise SpaceError("%s must be a %dx%d table" % (name, dim, dim))
    out = []
    for i, row in enumerate(table):
        new = []
        for j, v in enumerate(row):
            if not isinstance(v, CycNum) or v.order != order:
                raise SpaceError("%s[%d][%d] is not an element of Q(zeta_%d)" % (name, i, j, order))
            if v.is_zero():
                raise SpaceError("%s[%d][%d] is zero" % (name, i, j))
            new.append(v)
        out.append(new)
    return out


def quandle_failure(table, dim):
    """Return a description of the first violated quandle axiom, or None."""
    if len(table) != dim or any(len(r) != dim for r in table):
        return "quandle table must be %dx%d" % (dim, dim)
    for i, row in enumerate(table):
        if sorted(row) != list(range(dim)):
            return "row %d is not a permutation of 0..%d" % (i, dim - 1)
        if row[i] != i:
            return "idempotence fails: %d |> %d = %d" % (i, i, row[i])
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                if table[i][table[j][k]] != table[table[i][j]][table[i][k]]:
                    return "self-distributivity fails at (%d, %d, %d)" % (i, j, k)
    return None


def _check_quandle(table, dim):
    msg = quandle_failure(table, dim)
    if msg is not None:
        raise SpaceError(msg)


def braid_relation_failure(space):
    """First basis triple where c1 c2 c1 != c2 c1 c2, or None."""
    left = eval_word(space, BraidWord((1, 2, 1), 3), 3)
    right = eval_word(space, BraidWord((2, 1, 2), 3), 3)
    for t in left.basis():
        if left.column(t) != right.column(t):
            return t
    return None


# constructors for the spaces used throughout

def _table_order(table, order):
    if order:
        return order
    try:
        return table[0][0].order
    except (AttributeError, IndexError, TypeError):
        raise SpaceError("pass order=N or give the table as Q(zeta_N) elements") from None


def diagonal_space(qmatrix, order=None):
    order = _table_order(qmatrix, order)
    return BraidedSpace("diagonal", len(qmatrix), order, qmatrix=qmatrix)


def rack_space(quandle, cocycle, order=None, labels=None):
    order = _table_order(cocycle, order)
    return BraidedSpace("rack", len(quandle), order, quandle=quandle, cocycle=cocycle,
                        labels=labels)


def transpositions(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def fomin_kirillov(n, order=2):
    """Transposition quandle of S_n with the sign cocycle q(pi, (ij)) = +-1."""
    if order % 2:
        raise CyclotomicError("the cocycle takes the value -1, so N must be even")
    ts = transpositions(n)
    index = {t: k for k, t in enumerate(ts)}

    def apply(t, x):
        a, b = t
        return b if x == a else a if x == b else x

    quandle = []
    cocycle = []
    one = CycNum.one(order)
    for p in ts:
        qrow, crow = [], []
        for (i, j) in ts:
            a, b = sorted((apply(p, i), apply(p, j)))
            qrow.append(index[(a, b)])
            crow.append(one if apply(p, i) < apply(p, j) else -one)
        quandle.append(qrow)
        cocycle.append(crow)
    labels = ["(%d%d)" % t for t in ts]
    return rack_space(quandle, cocycle, order, labels=labels)


def affine_quandle_space(p, order=2, sign=-1):
    """Z/p with i |> j = 2j - i and constant cocycle `sign`."""
    if sign == -1 and order % 2:
        raise CyclotomicError("the cocycle takes the value -1, so N must be even")
    quandle = [[(2 * j - i) % p for j in range(p)] for i in range(p)]
    c = CycNum.rational(order, sign)
    cocycle = [[c] * p for _ in range(p)]
    return rack_space(quandle, cocycle, order)


# operators on tensor powers

class TensorMap:
    """Sparse exact linear map on V^{(x)n}: source tuple -> {target tuple: scalar}."""

    def __init__(self, space, degree, data):
        self.space = space
        self.degree = degree
        self.data = {s: {t: c for t, c in col.items() if not c.is_zero()}
                     for s, col in data.items()}
        self.data = {s: col for s, col in self.data.items() if col}

    def basis(self):
        return list(product(range(self.space.dim), repeat=self.degree))

    def column(self, src):
        return self.data.get(src, {})

    def apply(self, vec):
        out = {}
        for s, c in vec.items():
            col = self.data.get(s)
            if col:
                vec_axpy(out, c, col)
        return out

    def compose(self, other):
        """self after other."""
        return TensorMap(self.space, self.degree,
                         {s: self.apply(col) for s, col in other.data.items()})

    def __add__(self, other):
        data = {s: dict(col) for s, col in self.data.items()}
        for s, col in other.data.items():
            vec_axpy(data.setdefault(s, {}), self.space.one(), col)
        return TensorMap(self.space, self.degree, data)

    def scale(self, a):
        return TensorMap(self.space, self.degree,
                         {s: {t: a * c for t, c in col.items()} for s, col in self.data.items()})

    def __sub__(self, other):
        return self + other.scale(-self.space.one())

    def __eq__(self, other):
        if not isinstance(other, TensorMap):
            return NotImplemented
        return self.degree == other.degree and self.data == other.data

    def is_zero(self):
        return not self.data


def _word_on_tuple(space, letters, t):
    t = list(t)
    s = space.one()
    for j in reversed(letters):
        a, b, q = space.act(t[j - 1], t[j])
        t[j - 1], t[j] = a, b
        s = s * q
    return tuple(t), s


def _check_cap(space, n, cap):
    size = space.dim ** n
    if size > cap:
        raise ResourceError("V^(x)%d has %d basis tuples, above the cap of %d" % (n, size, cap))


def eval_word(space, w, degree, cap=DEFAULT_CAP):
    letters = w.letters if isinstance(w, BraidWord) else tuple(w)
    for j in letters:
        if not 1 <= j < degree:
            raise SpaceError("letter c_%d out of range for degree %d" % (j, degree))
    _check_cap(space, degree, cap)
    data = {}
    for t in product(range(space.dim), repeat=degree):
        u, s = _word_on_tuple(space, letters, t)
        data[t] = {u: s}
    return TensorMap(space, degree, data)


def eval_linear(space, terms, degree, cap=DEFAULT_CAP):
    """Evaluate a combination {word: scalar} (scalars int or CycNum)."""
    for w in terms:
        for j in w:
            if not 1 <= j < degree:
                raise SpaceError("letter c_%d out of range for degree %d" % (j, degree))
    _check_cap(space, degree, cap)
    one = space.one()
    coeffs = [(tuple(w), c if isinstance(c, CycNum) else one * c) for w, c in terms.items()]
    data = {}
    for t in product(range(space.dim), repeat=degree):
        col = {}
        for w, c in coeffs:
            u, s = _word_on_tuple(space, w, t)
            v = s * c
            cur = col.get(u)
            col[u] = v if cur is None else cur + v
        data[t] = col
    return TensorMap(space, degree, data)


def eval_sum(space, s, degree, cap=DEFAULT_CAP):
    if isinstance(s, BraidWord):
        return eval_word(space, s, degree, cap)
    return eval_linear(space, s.terms, degree, cap)


def symmetrizer_map_direct(space, n, cap=DEFAULT_CAP):
    """S_n evaluated term by term (n! words)."""
    return eval_sum(space, symmetrizer(n), n, cap)


def symmetrizer_map(space, n, cap=DEFAULT_CAP):
    """S_n via S_{k+1} = (S_k (x) id) S_{k,1}, S_{k,1} = 1 + c_k + c_k c_{k-1} + ... + c_k...c_1."""
    _check_cap(space, n, cap)
    if n <= 1:
        return eval_word(space, (), n, cap)
    one = space.one()
    cur = eval_word(space, (), 1, cap)
    for k in range(1, n):
        shuffles = {tuple(range(k, k - j, -1)): one for j in range(k + 1)}
        step = eval_linear(space, shuffles, k + 1, cap)
        widened = TensorMap(space, k + 1, {
            src + (i,): {t + (i,): c for t, c in col.items()}
            for src, col in cur.data.items() for i in range(space.dim)})
        cur = widened.compose(step)
    return cur


# Nichols components

@dataclass
class NicholsComponent:
    degree: int
    basis: list            # reduced echelon vectors spanning im S_n
    lifts: list            # lifts[i] is a tensor with S_n(lifts[i]) = basis[i]
    smap: TensorMap = field(repr=False)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def pivots(self):
        return [min(b) for b in self.basis]


def nichols_component(space, n, cap=DEFAULT_CAP):
    if n < 0:
        raise SpaceError("degree must be nonnegative")
    smap = symmetrizer_map(space, n, cap)
    ech = Echelon()
    one = space.one()
    for t in smap.basis():
        ech.insert(smap.column(t), {t: one})
    return NicholsComponent(n, ech.basis(), ech.tags(), smap)


def nichols_ranks(space, max_degree, cap=DEFAULT_CAP):
    return [nichols_component(space, n, cap).rank for n in range(max_degree + 1)]


def project_to_component(space, comp, v):
    """Coordinates of the class of tensor v in N^n (via v -> S_n v)."""
    w = comp.smap.apply(v)
    if not comp.basis:
        if w:
            raise InconsistentSolve("nonzero image in a zero component")
        return []
    ech = _echelon_of(comp)
    try:
        coords = ech.coordinates(w)
    except InconsistentSolve:
        raise InconsistentSolve("class of the vector is not representable in degree %d"
                                % comp.degree)
    zero = space.zero()
    return [zero if c is None else c for c in coords]


def _echelon_of(comp):
    ech = getattr(comp, "_ech", None)
    if ech is None:
        ech = Echelon()
        for b in comp.basis:
            ech.rows[min(b)] = (b, None)
        comp._ech = ech
    return ech


def component_vector(comp, coords):
    """The element sum_i coords[i] * basis[i] of im S_n."""
    out = {}
    for c, b in zip(coords, comp.basis):
        if not c.is_zero():
            vec_axpy(out, c, b)
    return out


def kernel_of_map(tmap):
    """Basis of ker of a TensorMap, as tensor vectors."""
    from .linalg import nullspace
    basis = tmap.basis()
    cols = [tmap.column(t) for t in basis]
    zero = tmap.space.zero()
    out = []
    for coords in nullspace(cols, len(basis), zero):
        out.append({t: c for t, c in zip(basis, coords) if not c.is_zero()})
    return out


def tensor_vector(space, tuples_and_scalars):
    out = {}
    one = space.one()
    for t, c in tuples_and_scalars:
        c = c if isinstance(c, CycNum) else one * c
        vec_axpy(out, c, {tuple(t): one})
    return out


def braid_sum_to_terms(s):
    return dict(s.terms) if isinstance(s, BraidSum) else {tuple(s.letters): 1}
