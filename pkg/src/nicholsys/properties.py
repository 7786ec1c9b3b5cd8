"""Property suite: the structural invariants of every module, checked on concrete data.

Each check returns (passed, detail).  run_suite collects them in a fixed order
so the `verify` command and the tests report identical results.
"""

import random
import time
from dataclasses import dataclass
from itertools import product

from . import presets
from .braid import (BraidSum, all_perms, all_reduced_words, descending_word, flip,
                    gnk_def, gnk_factored, longest_word, reverse_antimorphism, shift,
                    shuffle_sum, symmetrizer)
from .bvs import (_word_on_tuple, eval_sum, kernel_of_map, nichols_component, project_to_component,
                  symmetrizer_map, symmetrizer_map_direct)
from .cyclotomic import (CycNum, embed, label_bound, multiplicative_order, q_binom,
                         q_factorial, q_int, zeta)
from .dynkin import (DynkinDiagram, ext_finite_check, m_compatible,
                     mat_mul, pullback_diagram, reflect, s_matrix, identity_matrix)
from .groupoid import (beta_cross_check, dedup_sound, negation_closed, r_consistency,
                       run_algorithm, shapo_determinant, state_consistency)
from .shapovalov_morphism import (ShapoConfig, _c1, all_orbits, degree2_kernel_predicted,
                                  kernel_in_degree, same_span, shapo_operator,
                                  shapo_operator_recursive)

SAMPLE_SEED = 7
SAMPLES = 200


@dataclass
class CheckResult:
    module: str
    name: str
    passed: bool
    detail: str
    seconds: float

    def as_dict(self):
        return {"module": self.module, "name": self.name, "passed": self.passed,
                "detail": self.detail}


def _ok(n, what):
    return True, "%d %s checked" % (n, what)


# cyclotomic

def check_q_int_zero_set(max_order=12, max_m=12):
    n = 0
    for N in range(1, max_order + 1):
        for e in range(1, N):
            q = zeta(N, e)
            for m in range(1, max_m + 1):
                if q_int(m, q).is_zero() != (q ** m).is_one():
                    return False, "q = z%d^%d, m = %d" % (N, e, m)
                n += 1
    return _ok(n, "(q, m) pairs")


def check_q_binom(max_n=8, max_order=12):
    n = 0
    for N in range(1, max_order + 1):
        for e in range(N):
            q = zeta(N, e)
            fact = [q_factorial(k, q) for k in range(max_n + 1)]
            for a in range(max_n + 1):
                for k in range(a + 1):
                    den = fact[k] * fact[a - k]
                    if den.is_zero():
                        continue
                    if q_binom(a, k, q) * den != fact[a]:
                        return False, "binom(%d,%d) at z%d^%d" % (a, k, N, e)
                    n += 1
    return _ok(n, "binomials")


def check_label_bound(max_order=12):
    for N in range(1, max_order + 1):
        for e in range(N):
            q = zeta(N, e)
            m = label_bound(q)
            if q.is_one():
                if m is not None:
                    return False, "label bound of 1 should be infinite"
                continue
            if m != multiplicative_order(q) - 1:
                return False, "z%d^%d" % (N, e)
            if not q_int(m + 1, q).is_zero() or any(q_int(k, q).is_zero() for k in range(1, m + 1)):
                return False, "z%d^%d: (m+1)_q is not the first vanishing q-integer" % (N, e)
    return True, "labels up to order %d" % max_order


def check_embed(seed=SAMPLE_SEED):
    rng = random.Random(seed)
    n = 0
    for N, M in [(1, 4), (2, 6), (3, 6), (4, 12), (6, 12), (5, 10), (3, 15)]:
        for _ in range(10):
            x = sum((zeta(N, rng.randrange(N)) * rng.randint(-3, 3) for _ in range(3)),
                    CycNum.zero(N))
            y = sum((zeta(N, rng.randrange(N)) * rng.randint(-3, 3) for _ in range(3)),
                    CycNum.zero(N))
            if embed(x + y, M) != embed(x, M) + embed(y, M):
                return False, "sum, %d -> %d" % (N, M)
            if embed(x * y, M) != embed(x, M) * embed(y, M):
                return False, "product, %d -> %d" % (N, M)
            n += 1
    return _ok(n, "pairs")


# braid

def _test_spaces():
    return [("fk3", presets.fk3()), ("diag", presets.random_diagonal_space())]


def _same_on_tuples(space, w1, w2, degree):
    for t in product(range(space.dim), repeat=degree):
        if _word_on_tuple(space, w1, t) != _word_on_tuple(space, w2, t):
            return False
    return True


def _cached_action(space, cache, w, t):
    """Action of word w on basis tuple t, memoized on (word, tuple) pairs."""
    key = (w, t)
    hit = cache.get(key)
    if hit is None:
        if not w:
            hit = (t, space.one())
        else:
            j = w[-1]
            a, b, q = space.act(t[j - 1], t[j])
            u, s = _cached_action(space, cache, w[:-1], t[:j - 1] + (a, b) + t[j + 1:])
            hit = (u, s * q)
        cache[key] = hit
    return hit


def check_matsumoto(max_n=5):
    n = 0
    for label, space in _test_spaces():
        for size in range(1, max_n + 1):
            cache = {}
            tuples = list(product(range(space.dim), repeat=size))
            for p in all_perms(size):
                words = all_reduced_words(p)
                first = words[0]
                for w in words[1:]:
                    for t in tuples:
                        if _cached_action(space, cache, first, t) != _cached_action(space, cache, w, t):
                            return False, "%s: %r vs %r" % (label, first, w)
                n += len(words)
    return _ok(n, "reduced words")


def _op(space, s, degree):
    return eval_sum(space, s, degree)


def check_gnk_factored(max_n=5):
    n = 0
    for label, space in _test_spaces():
        for a in range(max_n + 1):
            for k in range(a + 1):
                if _op(space, gnk_def(a, k), a + 1) != _op(space, gnk_factored(a, k), a + 1):
                    return False, "%s: g_{%d,%d}" % (label, a, k)
                n += 1
    return _ok(n, "(n, k) pairs")


def check_gnk_recursion(max_n=5):
    n = 0
    for label, space in _test_spaces():
        for a in range(1, max_n + 1):
            for k in range(a + 1):
                lhs = _op(space, gnk_def(a, k), a + 1)
                rhs = BraidSum.zero(a + 1)
                if k >= 1:
                    rhs = rhs + gnk_def(a - 1, k - 1).with_strands(a + 1) * descending_word(a)
                if k <= a - 1:
                    rhs = rhs + shift(gnk_def(a - 1, k), 1)
                if lhs != _op(space, rhs, a + 1):
                    return False, "%s: g_{%d,%d}" % (label, a, k)
                n += 1
    return _ok(n, "(n, k) pairs")


def check_symmetrizer_factorization(max_n=4):
    n = 0
    for label, space in _test_spaces():
        for a in range(max_n + 1):
            full = symmetrizer_map_direct(space, a + 1)
            if full != symmetrizer_map(space, a + 1):
                return False, "%s: recursive S_%d" % (label, a + 1)
            for k in range(a + 1):
                prod = symmetrizer(a - k + 1).with_strands(a + 1)
                if k:
                    prod = prod * shift(symmetrizer(k), a - k + 1)
                prod = prod * shuffle_sum(a - k + 1, k)
                if _op(space, prod, a + 1) != full:
                    return False, "%s: n = %d, k = %d" % (label, a, k)
                n += 1
    return _ok(n, "(n, k) pairs")


def check_commuting(max_n=4):
    n = 0
    for label, space in _test_spaces():
        for a in range(max_n + 1):
            S = symmetrizer_map(space, a + 1)
            for k in range(a + 1):
                g = gnk_def(a, k)
                lhs = S.compose(_op(space, g, a + 1))
                rhs = _op(space, reverse_antimorphism(g), a + 1).compose(S)
                if lhs != rhs:
                    return False, "%s: n = %d, k = %d" % (label, a, k)
                n += 1
    return _ok(n, "(n, k) pairs")


def check_phi_symmetrizer(max_n=5):
    for label, space in _test_spaces():
        for a in range(1, max_n + 1):
            s = symmetrizer(a)
            if _op(space, reverse_antimorphism(s), a) != _op(space, s, a):
                return False, "%s: n = %d" % (label, a)
    return True, "n <= %d" % max_n


def check_omega_conjugation(max_n=5):
    n = 0
    for label, space in _test_spaces():
        for a in range(2, max_n + 1):
            om = longest_word(a)
            for j in range(1, a):
                c = BraidSum({(j,): 1}, a)
                lhs = _op(space, om.to_sum() * c, a)
                rhs = _op(space, flip(c, a) * om, a)
                if lhs != rhs:
                    return False, "%s: n = %d, j = %d" % (label, a, j)
                n += 1
    return _ok(n, "generators")


# bvs

def check_braid_relations(max_degree=5):
    spaces = _test_spaces() + [("fk4", presets.fk4()), ("z5", presets.z5())]
    n = 0
    for label, space in spaces:
        for d in range(3, max_degree + 1):
            for i in range(1, d - 1):
                if not _same_on_tuples(space, (i, i + 1, i), (i + 1, i, i + 1), d):
                    return False, "%s: degree %d, i = %d" % (label, d, i)
                n += 1
            for i in range(1, d):
                for j in range(i + 2, d):
                    if not _same_on_tuples(space, (i, j), (j, i), d):
                        return False, "%s: degree %d, c_%d c_%d" % (label, d, i, j)
                    n += 1
    return _ok(n, "relations")


def check_gnk_preserves_kernel(max_n=3):
    n = 0
    for label, space in _test_spaces():
        for a in range(max_n + 1):
            S = symmetrizer_map(space, a + 1)
            ker = kernel_of_map(S)
            for k in range(a + 1):
                g = _op(space, gnk_def(a, k), a + 1)
                for v in ker:
                    if S.apply(g.apply(v)):
                        return False, "%s: g_{%d,%d}" % (label, a, k)
                n += 1
    return _ok(n, "(n, k) pairs")


def check_rank_one_dimensional(max_n=8, max_order=12):
    from .bvs import diagonal_space
    n = 0
    for N in range(1, max_order + 1):
        for e in range(N):
            q = zeta(N, e)
            space = diagonal_space([[q]], N)
            for a in range(max_n + 1):
                r = nichols_component(space, a).rank
                if (r == 1) != (not q_factorial(a, q).is_zero()):
                    return False, "q = z%d^%d, n = %d" % (N, e, a)
                n += 1
    return _ok(n, "(q, n) pairs")


# dynkin

def _states():
    return {name: run_algorithm(D) for name, D in presets.reference_diagrams().items()}


def _all_diagrams(states):
    out = []
    seen = set()
    for st in states.values():
        for X in st.X:
            if X not in seen:
                seen.add(X)
                out.append(X)
    return out


def check_reflection_involutive(states):
    n = 0
    for X in _all_diagrams(states):
        for i in range(X.theta):
            if reflect(reflect(X, i), i) != X:
                return False, "%r at node %d" % (X, i + 1)
            n += 1
    return _ok(n, "reflections")


def check_cartan_invariance(states):
    n = 0
    for X in _all_diagrams(states):
        for i in range(X.theta):
            Y = reflect(X, i)
            if Y.m(i) != X.m(i) or any(Y.a(i, j) != X.a(i, j) for j in range(X.theta)):
                return False, "%r at node %d" % (X, i + 1)
            n += 1
    return _ok(n, "reflections")


def check_pullback_walks(max_len=6):
    n = 0
    for name, D in presets.reference_diagrams().items():
        stack = [((), identity_matrix(D.theta), D)]
        while stack:
            walk, s, X = stack.pop()
            if pullback_diagram(D, s) != X:
                return False, "%s: walk %r" % (name, walk)
            n += 1
            if len(walk) < max_len:
                for i in range(D.theta):
                    stack.append((walk + (i,), mat_mul(s, s_matrix(X, i)), reflect(X, i)))
    return _ok(n, "walks")


def check_m_compatible(states):
    n = 0
    for X in _all_diagrams(states):
        for i in range(X.theta):
            for j in range(X.theta):
                if i != j:
                    if not m_compatible(X, i, j):
                        return False, "%r at (%d, %d)" % (X, i + 1, j + 1)
                    n += 1
    return _ok(n, "pairs")


def check_extended_finite(states):
    # a vertex labelled 1 has infinite m, so the extended diagram loses finiteness
    extra = [DynkinDiagram.from_exponents(6, [0, 3], [3]), DynkinDiagram.from_exponents(4, [1, 2], [0])]
    n = 0
    for X in _all_diagrams(states) + extra:
        for i in range(X.theta):
            if not ext_finite_check(X, i):
                return False, "%r at node %d" % (X, i + 1)
            n += 1
    return _ok(n, "nodes")


# groupoid

def _state_check(states, fn, what):
    for name, st in states.items():
        if not fn(st):
            return False, "%s fails on %s" % (what, name)
    return True, "%d diagrams" % len(states)


def check_negation_closed(states):
    return _state_check(states, negation_closed, "negation closure")


def check_beta(states):
    return _state_check(states, lambda st: beta_cross_check(st, 6), "beta path sum")


def check_r_consistency(states):
    return _state_check(states, r_consistency, "r formula")


def check_dedup(states):
    return _state_check(states, dedup_sound, "dedup")


def check_state_consistency(states):
    return _state_check(states, state_consistency, "pullback of S[n]")


def check_zero_sets(states, samples=SAMPLES, seed=SAMPLE_SEED):
    rng = random.Random(seed)
    names = sorted(states)
    hits = 0
    for k in range(samples):
        name = names[k % len(names)]
        st = states[name]
        D = st.D
        r = [zeta(D.order, rng.randrange(D.order)) for _ in range(D.theta)]
        via_p = any(f.evaluate(r).is_zero() for f in st.P)
        via_det = any(f.evaluate(r).is_zero() for f in shapo_determinant(D, state=st))
        if via_p != via_det:
            return False, "%s at r = %s" % (name, [x.pretty() for x in r])
        hits += via_p
    return True, "%d samples, %d on the zero set" % (samples, hits)


# shapovalov

LAMBDAS = [("-z3", 6, 5), ("z4", 4, 1), ("-1", 2, 1), ("z6", 6, 1), ("-z5", 10, 7)]


def _lam(order, e):
    return zeta(order, e)


def check_degree2_prediction():
    n = 0
    for label, build in [("fk3", presets.fk3), ("fk4", presets.fk4), ("z5", presets.z5)]:
        for lname, order, e in LAMBDAS:
            space = build(order)
            cfg = ShapoConfig(space, _lam(order, e), max_degree=2)
            comp = nichols_component(space, 2)
            basis, _ = kernel_in_degree(cfg, 2, comp)
            pred = [c for _, c in degree2_kernel_predicted(cfg, comp) if c is not None]
            if not same_span(basis, pred, space.zero()):
                return False, "%s at lambda = %s" % (label, lname)
            n += 1
    return _ok(n, "(space, lambda) pairs")


def _orbit_vectors(space, od):
    return od.orbit_vectors + [_c1(space, od.orbit_vectors[-1])]


def check_orbit_identities():
    """Telescoping and single-step identities of f on degree-two orbits."""
    n = 0
    for label, build in [("fk3", presets.fk3), ("fk4", presets.fk4), ("z5", presets.z5)]:
        for lname, order, e in LAMBDAS:
            space = build(order)
            lam = _lam(order, e)
            one = space.one()
            cfg = ShapoConfig(space, lam, max_degree=2)
            comp = nichols_component(space, 2)
            op = shapo_operator(cfg, 2)

            def f(v):
                return project_to_component(space, comp, op.apply(v))

            def cls(v):
                return project_to_component(space, comp, v)

            for od in all_orbits(space):
                vecs = _orbit_vectors(space, od)
                for k in range(od.m + 1):
                    want = [(one - lam) * (a - lam * b) for a, b in zip(cls(vecs[k]), cls(vecs[k + 1]))]
                    if f(vecs[k]) != want:
                        return False, "single step, %s, lambda = %s, orbit %r, k = %d" % (label, lname, od.seed, k)
                    n += 1
                sign = one if (od.m + 1) % 2 == 0 else -one
                if od.q == sign:
                    continue
                a = {}
                for k in range(od.m + 1):
                    for t, c in vecs[k].items():
                        a[t] = a.get(t, space.zero()) + lam ** k * c
                scalar = (one - lam) * (one - od.q * lam ** (od.m + 1))
                got = f(a)
                xy = cls(vecs[0])
                if got != [scalar * c for c in xy]:
                    return False, "telescoping, %s, lambda = %s, orbit %r" % (label, lname, od.seed)
                if not scalar.is_zero() and not any(not c.is_zero() for c in got):
                    return False, "telescoping image vanishes, %s, orbit %r" % (label, od.seed)
                n += 1
    return _ok(n, "identities")


def check_product_recursion(max_degree=4):
    space = presets.fk3(6)
    for e in (5, 1, 3):
        cfg = ShapoConfig(space, zeta(6, e), max_degree=max_degree)
        for d in range(1, max_degree + 1):
            if shapo_operator_recursive(cfg, d) != shapo_operator(cfg, d):
                return False, "lambda = z6^%d, degree %d" % (e, d)
    return True, "fk3, degrees <= %d" % max_degree


def _suite():
    states = {}

    def st():
        if not states:
            states.update(_states())
        return states

    return [
        ("cyclotomic", "q_int_zero_set", check_q_int_zero_set),
        ("cyclotomic", "q_binom_factorials", check_q_binom),
        ("cyclotomic", "label_bound", check_label_bound),
        ("cyclotomic", "embed_homomorphism", check_embed),
        ("braid", "matsumoto_well_defined", check_matsumoto),
        ("braid", "gnk_def_equals_factored", check_gnk_factored),
        ("braid", "gnk_recursion", check_gnk_recursion),
        ("braid", "symmetrizer_factorization", check_symmetrizer_factorization),
        ("braid", "symmetrizer_commutes_gnk", check_commuting),
        ("braid", "phi_fixes_symmetrizer", check_phi_symmetrizer),
        ("braid", "omega_conjugation", check_omega_conjugation),
        ("bvs", "braid_relations", check_braid_relations),
        ("bvs", "gnk_preserves_kernel", check_gnk_preserves_kernel),
        ("bvs", "rank_one_dimensional", check_rank_one_dimensional),
        ("dynkin", "reflection_involutive", lambda: check_reflection_involutive(st())),
        ("dynkin", "cartan_m_invariance", lambda: check_cartan_invariance(st())),
        ("dynkin", "pullback_walks", check_pullback_walks),
        ("dynkin", "m_compatibility", lambda: check_m_compatible(st())),
        ("dynkin", "extended_finiteness", lambda: check_extended_finite(st())),
        ("groupoid", "root_negation_closure", lambda: check_negation_closed(st())),
        ("groupoid", "factor_zero_sets", lambda: check_zero_sets(st())),
        ("groupoid", "beta_cross_check", lambda: check_beta(st())),
        ("groupoid", "r_consistency", lambda: check_r_consistency(st())),
        ("groupoid", "dedup_soundness", lambda: check_dedup(st())),
        ("groupoid", "state_consistency", lambda: check_state_consistency(st())),
        ("shapovalov_morphism", "degree2_prediction", check_degree2_prediction),
        ("shapovalov_morphism", "orbit_identities", check_orbit_identities),
        ("shapovalov_morphism", "product_recursion", check_product_recursion),
    ]


def check_names():
    return ["%s.%s" % (m, n) for m, n, _ in _suite()]


def run_suite(only=None, extra=()):
    """Run the checks (optionally only those whose name contains `only`)."""
    out = []
    for module, name, fn in list(_suite()) + list(extra):
        full = "%s.%s" % (module, name)
        if only and only not in full:
            continue
        t0 = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash counts as a failure, not an abort
            passed, detail = False, "%s: %s" % (type(exc).__name__, exc)
        out.append(CheckResult(module, name, bool(passed), detail, time.perf_counter() - t0))
    return out
