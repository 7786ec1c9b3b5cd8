"""The Shapovalov morphism on the subalgebra generated by one node.

On the degree n+1 component it acts as x -> (1-lam) sum_k (-lam)^k g_{n,k}(x).
Since the generating component is one-dimensional the map is modelled as a
self-map of N^{n+1}, in the coordinates of the component basis.
"""

from dataclasses import dataclass, field

from .braid import descending_word, gnk_def
from .bvs import (DEFAULT_CAP, BraidedSpace, TensorMap, eval_linear, eval_word,
                  nichols_component, project_to_component, component_vector)
from .cyclotomic import CycNum
from .linalg import Echelon, nullspace, rank


class OrbitError(RuntimeError):
    pass


@dataclass
class ShapoConfig:
    space: BraidedSpace
    lam: CycNum
    max_degree: int = 4
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.lam.is_zero():
            raise ValueError("lambda must be nonzero")
        if self.lam.order != self.space.order:
            raise ValueError("lambda lives in Q(zeta_%d) but the space in Q(zeta_%d)"
                             % (self.lam.order, self.space.order))


def shapo_terms(lam, n):
    """{word: scalar} for (1-lam) sum_k (-lam)^k g_{n,k} in k B_{n+1}."""
    one = CycNum.one(lam.order)
    out = {}
    pref = one - lam
    for k in range(n + 1):
        c = pref * (-lam) ** k
        for w, m in gnk_def(n, k).terms.items():
            v = c * m
            out[w] = out[w] + v if w in out else v
    return {w: c for w, c in out.items() if not c.is_zero()}


def shapo_operator(cfg, degree):
    """The operator on V^{(x)degree} (not yet passed to the quotient)."""
    if degree < 1:
        raise ValueError("degree 0 is rejected: the morphism is the identity scalar there")
    return eval_linear(cfg.space, shapo_terms(cfg.lam, degree - 1), degree, cfg.cap)


def shapo_operator_recursive(cfg, degree):
    """Build the same operator from F_1 = (1-lam) id by
    F_{n+1} = (id (x) F_n) - lam (F_n (x) id) c_n ... c_1."""
    space = cfg.space
    one = space.one()
    F = _identity(space, 1).scale(one - cfg.lam)
    for n in range(1, degree):
        left = _tensor_left(space, F, n)     # id (x) F on n+1 factors
        right = _tensor_right(space, F, n)   # F (x) id
        down = eval_word(space, descending_word(n), n + 1, cfg.cap)
        F = left - right.compose(down).scale(cfg.lam)
    return F


def _identity(space, n):
    from itertools import product
    one = space.one()
    return TensorMap(space, n, {t: {t: one} for t in product(range(space.dim), repeat=n)})


def _tensor_left(space, F, n):
    data = {}
    for src, col in F.data.items():
        for i in range(space.dim):
            data[(i,) + src] = {(i,) + t: c for t, c in col.items()}
    return TensorMap(space, n + 1, data)


def _tensor_right(space, F, n):
    data = {}
    for src, col in F.data.items():
        for i in range(space.dim):
            data[src + (i,)] = {t + (i,): c for t, c in col.items()}
    return TensorMap(space, n + 1, data)


@dataclass
class ShapoMap:
    degree: int
    component: object
    columns: list = field(repr=False)   # columns[i] = coordinates of f(basis_i)

    def matrix(self):
        """Dense matrix, rows = output coordinates."""
        r = self.component.rank
        return [[self.columns[c][i] for c in range(r)] for i in range(r)]


def shapo_map(cfg, degree, component=None):
    if degree < 1:
        raise ValueError("degree 0 is rejected: the morphism is the identity scalar there")
    if degree > cfg.max_degree:
        raise ValueError("degree %d above max_degree %d" % (degree, cfg.max_degree))
    comp = component or nichols_component(cfg.space, degree, cfg.cap)
    op = shapo_operator(cfg, degree)
    cols = []
    for lift in comp.lifts:
        cols.append(project_to_component(cfg.space, comp, op.apply(lift)))
    return ShapoMap(degree, comp, cols)


@dataclass
class KernelResult:
    dims: list          # dims[d-1] for degree d = 1..max_degree
    bases: dict         # degree -> list of coordinate vectors (reduced echelon)
    components: dict    # degree -> NicholsComponent

    @property
    def total(self):
        return sum(self.dims)


def kernel_in_degree(cfg, degree, component=None):
    sm = shapo_map(cfg, degree, component)
    r = sm.component.rank
    zero = cfg.space.zero()
    cols = [{i: c for i, c in enumerate(col) if not c.is_zero()} for col in sm.columns]
    ker = nullspace(cols, r, zero)
    return _canonical_basis(ker, zero), sm.component


def _canonical_basis(vectors, zero):
    e = Echelon()
    for v in vectors:
        e.insert({i: c for i, c in enumerate(v) if not c.is_zero()})
    n = len(vectors[0]) if vectors else 0
    return [[b.get(i, zero) for i in range(n)] for b in e.basis()]


def shapo_kernel(cfg):
    dims, bases, comps = [], {}, {}
    for d in range(1, cfg.max_degree + 1):
        basis, comp = kernel_in_degree(cfg, d)
        dims.append(len(basis))
        bases[d] = basis
        comps[d] = comp
    return KernelResult(dims, bases, comps)


def kernel_tensors(comp, basis):
    """Kernel vectors as elements of im S_n inside the tensor power."""
    return [component_vector(comp, v) for v in basis]


# degree two orbits

@dataclass
class OrbitData:
    seed: tuple
    m: int
    q: CycNum
    orbit_vectors: list = field(repr=False)

    def tuples(self):
        return [t for v in self.orbit_vectors for t in v]


def _c1(space, vec):
    out = {}
    for (i, j), c in vec.items():
        a, b, s = space.act(i, j)
        key = (a, b)
        v = c * s
        if key in out:
            v = out[key] + v
            if v.is_zero():
                del out[key]
                continue
        out[key] = v
    return out


def orbit_classify(space, i, j):
    one = space.one()
    start = {(i, j): one}
    vectors = [start]
    ech = Echelon()
    ech.insert(start)
    cur = start
    for _ in range(space.dim ** 2 + 1):
        nxt = _c1(space, cur)
        # is nxt a multiple of x (x) y ?
        if set(nxt) <= {(i, j)} and nxt:
            return OrbitData((i, j), len(vectors) - 1, nxt[(i, j)], vectors)
        if not ech.insert(nxt):
            break
        vectors.append(nxt)
        cur = nxt
    raise OrbitError("orbit of (%d, %d) does not close on a multiple of the seed" % (i, j))


def all_orbits(space):
    """Orbits of basis pairs under c_1, seeded at the smallest uncovered pair."""
    covered = set()
    out = []
    for i in range(space.dim):
        for j in range(space.dim):
            if (i, j) in covered:
                continue
            od = orbit_classify(space, i, j)
            covered.update(od.tuples())
            out.append(od)
    return out


def predicted_element(od, lam):
    """The kernel candidate of an orbit (tensor vector) or None."""
    one = CycNum.one(lam.order)
    m, q = od.m, od.q
    sign = one if (m + 1) % 2 == 0 else -one
    out = {}
    if q != sign:
        if not (q * lam ** (m + 1) - 1).is_zero():
            return None
        for k in range(m + 1):
            _axpy(out, lam ** k, od.orbit_vectors[k])
        return out
    if not sum(((-lam) ** l for l in range(m + 1)), CycNum.zero(lam.order)).is_zero():
        return None
    for k in range(1, m + 1):
        coeff = sum(((-one) ** (k - 1 - l) * lam ** l for l in range(k)), CycNum.zero(lam.order))
        _axpy(out, coeff, od.orbit_vectors[k])
    return out


def _axpy(y, a, x):
    for key, v in x.items():
        nv = y[key] + a * v if key in y else a * v
        if nv.is_zero():
            y.pop(key, None)
        else:
            y[key] = nv


def degree2_kernel_predicted(cfg, component=None):
    comp = component or nichols_component(cfg.space, 2, cfg.cap)
    out = []
    for od in all_orbits(cfg.space):
        el = predicted_element(od, cfg.lam)
        coords = None if el is None else project_to_component(cfg.space, comp, el)
        out.append((od, coords))
    return out


def same_span(vs, ws, zero):
    def sparse(v):
        return {i: c for i, c in enumerate(v) if not c.is_zero()}
    a = rank([sparse(v) for v in vs])
    b = rank([sparse(w) for w in ws])
    return a == b == rank([sparse(v) for v in list(vs) + list(ws)])
