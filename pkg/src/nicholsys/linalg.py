"""Sparse exact linear algebra over Q(zeta_N).

Vectors are dicts mapping a sortable key (a basis tuple, an index) to a
nonzero CycNum.  Row reduction keeps pivots at the smallest key.
"""


class InconsistentSolve(ArithmeticError):
    pass


def vec_axpy(y, a, x):
    """y += a*x in place; drops entries that cancel."""
    for k, v in x.items():
        cur = y.get(k)
        nv = a * v if cur is None else cur + a * v
        if nv.is_zero():
            y.pop(k, None)
        else:
            y[k] = nv
    return y


def vec_scale(x, a):
    return {k: a * v for k, v in x.items()}


def vec_add(x, y):
    out = dict(x)
    for k, v in y.items():
        cur = out.get(k)
        nv = v if cur is None else cur + v
        if nv.is_zero():
            out.pop(k, None)
        else:
            out[k] = nv
    return out


class Echelon:
    """Incremental reduced row echelon form with optional tracking.

    Each inserted vector may carry a tag vector (e.g. the preimage it came
    from); row operations are mirrored on the tags.
    """

    def __init__(self):
        self.rows = {}  # pivot -> (vec, tag)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec, tag=None):
        vec = dict(vec)
        tag = dict(tag) if tag is not None else None
        # rows are reduced, so clearing one pivot never touches another
        for p in [k for k in vec if k in self.rows]:
            c = vec[p]
            rvec, rtag = self.rows[p]
            vec_axpy(vec, -c, rvec)
            if tag is not None and rtag is not None:
                vec_axpy(tag, -c, rtag)
        return vec, tag

    def insert(self, vec, tag=None, reduced=False):
        """Add vec; returns True if it enlarged the span."""
        if not reduced:
            vec, tag = self.reduce(vec, tag)
        if not vec:
            return False
        p = min(vec)
        inv = vec[p].inverse()
        vec = vec_scale(vec, inv)
        if tag is not None:
            tag = vec_scale(tag, inv)
        for q, (rvec, rtag) in list(self.rows.items()):
            c = rvec.get(p)
            if c is not None:
                rvec = vec_axpy(dict(rvec), -c, vec)
                if rtag is not None and tag is not None:
                    rtag = vec_axpy(dict(rtag), -c, tag)
                self.rows[q] = (rvec, rtag)
        self.rows[p] = (vec, tag)
        return True

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [self.rows[p][0] for p in self.pivots()]

    def tags(self):
        return [self.rows[p][1] for p in self.pivots()]

    def coordinates(self, vec):
        """Coordinates of vec in basis order; raises if vec is outside the span."""
        piv = self.pivots()
        coords = [vec.get(p) for p in piv]
        rest = dict(vec)
        for p, c in zip(piv, coords):
            if c is not None:
                vec_axpy(rest, -c, self.rows[p][0])
        if rest:
            raise InconsistentSolve("vector is not in the span")
        return coords


def rank(vectors):
    e = Echelon()
    for v in vectors:
        e.insert(v)
    return len(e)


def nullspace(columns, ncols, zero):
    """Basis of {x : sum_j x_j columns[j] = 0}.

    columns: list of sparse vectors (any keys); ncols = len(columns);
    returns a list of dense coordinate lists.
    """
    e = Echelon()
    kernel = []
    one = zero + 1
    for j in range(ncols):
        vec, tag = e.reduce(columns[j], {j: one})
        if vec:
            e.insert(vec, tag, reduced=True)
        else:
            kernel.append([tag.get(i, zero) for i in range(ncols)])
    return kernel
