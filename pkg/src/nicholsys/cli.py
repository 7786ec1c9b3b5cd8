"""Batch front end.

    nicholsys <command> --spec job.yaml [--max-degree K] [--bound M] [--r e1,e2] [--out FILE]

The job file is YAML.  Every label is an exponent e meaning zeta_N^e, with N
taken from `field.N`.  Results are canonical JSON (sorted keys, two-space
indent) so identical jobs give identical bytes.

Exit codes: 0 ok, 1 input error, 2 not finite, 3 bound or resource limit,
4 internal inconsistency (including a failed `verify`).
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

import yaml

from . import __version__
from .braid import gnk_def, gnk_factored, reverse_antimorphism
from .bvs import (DEFAULT_CAP, ResourceError, SpaceError, _check_cap, diagonal_space,
                  eval_sum, nichols_component, quandle_failure, rack_space, symmetrizer_map,
                  transpositions)
from .cyclotomic import CyclotomicError, zeta
from .dynkin import (DiagramError, DynkinDiagram, NotFiniteError, cartan_matrix,
                     is_i_finite, m_vector, reflect)
from .groupoid import (DEFAULT_BOUND, BoundExceeded, GroupoidError, hull_lattice_points,
                       is_induced_irreducible, roots, run_algorithm, shapo_determinant)
from .linalg import InconsistentSolve
from .shapovalov_morphism import (OrbitError, ShapoConfig, all_orbits, predicted_element,
                                  shapo_kernel)

COMMANDS = ("reflect", "cartan", "roots", "shapovalov", "irreducible", "support", "gnk",
            "symmetrizer-rank", "shapo-kernel", "orbit", "verify")

EXIT_INPUT, EXIT_NOT_FINITE, EXIT_BOUND, EXIT_INTERNAL = 1, 2, 3, 4


class SpecError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = "line %d, column %d: " % (line, column) if line is not None else ""
        super().__init__(where + message)


# job specification

@dataclass
class DiagramSpec:
    theta: int
    vertex_exponents: list
    edge_exponents: list   # upper-triangular rows, row j has theta-1-j entries


@dataclass
class RackSpec:
    dim: int
    quandle: list
    cocycle_exponents: list
    lambda_exponent: int = None
    labels: list = None


@dataclass
class NodeSpec:
    q_exponent: int
    lambda_exponent: int = None


@dataclass
class Params:
    max_degree: int = None
    bound: int = None
    r_exponents: list = None


@dataclass
class JobSpec:
    order: int
    diagram: DiagramSpec = None
    rack: RackSpec = None
    diagonal_node: NodeSpec = None
    params: Params = field(default_factory=Params)
    name: str = None


class _Positions:
    """Line/column of every node of the YAML document, keyed by path."""

    def __init__(self):
        self.marks = {}

    def build(self, node, path=()):
        self.marks[path] = node.start_mark
        if isinstance(node, yaml.MappingNode):
            out = {}
            for k, v in node.value:
                key = k.value
                if key in out:
                    raise self.error("duplicate key %r" % key, path + (key,), k.start_mark)
                out[key] = self.build(v, path + (key,))
            return out
        if isinstance(node, yaml.SequenceNode):
            return [self.build(v, path + (i,)) for i, v in enumerate(node.value)]
        return yaml.safe_load(yaml.serialize(node))

    def error(self, message, path, mark=None):
        mark = mark or self._nearest(path)
        dotted = ".".join(str(p) for p in path)
        msg = "%s: %s" % (dotted, message) if dotted else message
        if mark is None:
            return SpecError(msg)
        return SpecError(msg, mark.line + 1, mark.column + 1)

    def _nearest(self, path):
        path = tuple(path)
        while path not in self.marks and path:
            path = path[:-1]
        return self.marks.get(path)


def _int(pos, value, path, low=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise pos.error("expected an integer, got %r" % (value,), path)
    if low is not None and value < low:
        raise pos.error("must be >= %d" % low, path)
    return value


def _int_list(pos, value, path):
    if not isinstance(value, list):
        raise pos.error("expected a list of integers", path)
    return [_int(pos, v, path + (i,)) for i, v in enumerate(value)]


def _table(pos, value, path, dim):
    if not isinstance(value, list) or len(value) != dim:
        raise pos.error("expected a %dx%d table" % (dim, dim), path)
    rows = []
    for i, row in enumerate(value):
        row = _int_list(pos, row, path + (i,))
        if len(row) != dim:
            raise pos.error("row has %d entries, expected %d" % (len(row), dim), path + (i,))
        rows.append(row)
    return rows


def _keys(pos, mapping, path, allowed, required=()):
    if not isinstance(mapping, dict):
        raise pos.error("expected a mapping", path)
    for k in mapping:
        if k not in allowed:
            raise pos.error("unknown key %r (allowed: %s)" % (k, ", ".join(allowed)), path + (k,))
    for k in required:
        if k not in mapping:
            raise pos.error("missing key %r" % k, path)


def parse_spec(text):
    """Parse and validate a YAML job document."""
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise SpecError("syntax error: %s" % exc.problem,
                        mark.line + 1 if mark else None, mark.column + 1 if mark else None)
    if node is None:
        raise SpecError("empty job document")
    pos = _Positions()
    doc = pos.build(node)
    _keys(pos, doc, (), ("name", "field", "diagram", "rack", "diagonal_node", "params"),
          required=("field",))
    _keys(pos, doc["field"], ("field",), ("N",), required=("N",))
    N = _int(pos, doc["field"]["N"], ("field", "N"), low=1)
    kinds = [k for k in ("diagram", "rack", "diagonal_node") if k in doc]
    if len(kinds) > 1:
        raise pos.error("give only one of diagram, rack, diagonal_node", (kinds[1],))
    spec = JobSpec(order=N)
    if "name" in doc:
        if not isinstance(doc["name"], str):
            raise pos.error("name must be a string", ("name",))
        spec.name = doc["name"]
    if "diagram" in doc:
        spec.diagram = _parse_diagram(pos, doc["diagram"], N)
    if "rack" in doc:
        spec.rack = _parse_rack(pos, doc["rack"], N)
    if "diagonal_node" in doc:
        d = doc["diagonal_node"]
        _keys(pos, d, ("diagonal_node",), ("q_exponent", "lambda_exponent"),
              required=("q_exponent",))
        lam = d.get("lambda_exponent")
        spec.diagonal_node = NodeSpec(
            _int(pos, d["q_exponent"], ("diagonal_node", "q_exponent")) % N,
            None if lam is None else _int(pos, lam, ("diagonal_node", "lambda_exponent")) % N)
    if "params" in doc:
        p = doc["params"]
        _keys(pos, p, ("params",), ("max_degree", "bound", "r_exponents"))
        spec.params = Params(
            None if p.get("max_degree") is None else _int(pos, p["max_degree"], ("params", "max_degree"), 0),
            None if p.get("bound") is None else _int(pos, p["bound"], ("params", "bound"), 1),
            None if p.get("r_exponents") is None
            else [e % N for e in _int_list(pos, p["r_exponents"], ("params", "r_exponents"))])
        if spec.params.r_exponents is not None and spec.diagram is not None \
                and len(spec.params.r_exponents) != spec.diagram.theta:
            raise pos.error("need %d exponents, got %d" % (spec.diagram.theta, len(spec.params.r_exponents)),
                            ("params", "r_exponents"))
    return spec


def _parse_diagram(pos, d, N):
    path = ("diagram",)
    _keys(pos, d, path, ("theta", "vertex_exponents", "edge_exponents"),
          required=("vertex_exponents", "edge_exponents"))
    vexp = [e % N for e in _int_list(pos, d["vertex_exponents"], path + ("vertex_exponents",))]
    theta = len(vexp)
    if not theta:
        raise pos.error("a diagram needs at least one vertex", path + ("vertex_exponents",))
    if "theta" in d and _int(pos, d["theta"], path + ("theta",), 1) != theta:
        raise pos.error("theta = %d but %d vertex exponents given" % (d["theta"], theta), path + ("theta",))
    raw = d["edge_exponents"]
    epath = path + ("edge_exponents",)
    if not isinstance(raw, list):
        raise pos.error("expected a list", epath)
    want = theta * (theta - 1) // 2
    if len(raw) == theta and all(isinstance(r, list) and len(r) == theta for r in raw) and theta > 1:
        # full symmetric matrix with D_jj = D_j^2 on the diagonal
        full = _table(pos, raw, epath, theta)
        for j in range(theta):
            if full[j][j] % N != (2 * vexp[j]) % N:
                raise pos.error("diagonal entry %d must be 2*vertex exponent = %d mod %d"
                                % (full[j][j], 2 * vexp[j], N), epath + (j, j))
            for k in range(j + 1, theta):
                if (full[j][k] - full[k][j]) % N:
                    raise pos.error("matrix is not symmetric at (%d,%d)" % (j + 1, k + 1), epath + (k, j))
        rows = [[full[j][k] % N for k in range(j + 1, theta)] for j in range(theta - 1)]
    elif raw and all(isinstance(r, list) for r in raw):
        if len(raw) != max(theta - 1, 0):
            raise pos.error("expected %d upper-triangular rows, got %d" % (theta - 1, len(raw)), epath)
        rows = []
        for j, r in enumerate(raw):
            r = _int_list(pos, r, epath + (j,))
            if len(r) != theta - 1 - j:
                raise pos.error("row %d needs %d entries, got %d" % (j + 1, theta - 1 - j, len(r)),
                                epath + (j,))
            rows.append([e % N for e in r])
    else:
        flat = _int_list(pos, raw, epath)
        if len(flat) != want:
            raise pos.error("expected %d edge exponents for theta = %d, got %d" % (want, theta, len(flat)),
                            epath)
        it = iter(flat)
        rows = [[next(it) % N for _ in range(theta - 1 - j)] for j in range(theta - 1)]
    return DiagramSpec(theta, vexp, rows)


def _parse_rack(pos, d, N):
    path = ("rack",)
    if isinstance(d, dict) and "preset" in d:
        d = _expand_preset(pos, d, N)
    _keys(pos, d, path, ("dim", "quandle", "cocycle_exponents", "lambda_exponent", "labels"),
          required=("quandle", "cocycle_exponents"))
    quandle = d["quandle"]
    dim = len(quandle) if isinstance(quandle, list) else 0
    if "dim" in d and _int(pos, d["dim"], path + ("dim",), 1) != dim:
        raise pos.error("dim = %d but the quandle table has %d rows" % (d["dim"], dim), path + ("dim",))
    quandle = _table(pos, quandle, path + ("quandle",), dim)
    msg = quandle_failure(quandle, dim)
    if msg is not None:
        raise pos.error("not a quandle: " + msg, path + ("quandle",))
    coc = [[e % N for e in row] for row in _table(pos, d["cocycle_exponents"], path + ("cocycle_exponents",), dim)]
    lam = d.get("lambda_exponent")
    lam = None if lam is None else _int(pos, lam, path + ("lambda_exponent",)) % N
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != dim
                               or not all(isinstance(x, str) for x in labels)):
        raise pos.error("labels must be %d strings" % dim, path + ("labels",))
    spec = RackSpec(dim, quandle, coc, lam, labels)
    try:
        rack_to_space(spec, N)
    except SpaceError as exc:
        raise pos.error(str(exc), path + ("cocycle_exponents",))
    return spec


def _expand_preset(pos, d, N):
    from .bvs import affine_quandle_space, fomin_kirillov
    path = ("rack",)
    kind = d["preset"]
    out = {"lambda_exponent": d.get("lambda_exponent")}
    if kind == "fomin_kirillov":
        _keys(pos, d, path, ("preset", "n", "lambda_exponent"), required=("n",))
        n = _int(pos, d["n"], path + ("n",), 2)
        if N % 2:
            raise pos.error("the sign cocycle takes the value -1, so N must be even", ("field", "N"))
        space = fomin_kirillov(n, 2)
        labels = ["(%d%d)" % t for t in transpositions(n)]
    elif kind == "affine":
        _keys(pos, d, path, ("preset", "p", "lambda_exponent"), required=("p",))
        p = _int(pos, d["p"], path + ("p",), 3)
        if N % 2:
            raise pos.error("the cocycle takes the value -1, so N must be even", ("field", "N"))
        space = affine_quandle_space(p, 2)
        labels = [str(i) for i in range(p)]
    else:
        raise pos.error("unknown preset %r (fomin_kirillov, affine)" % (kind,), path + ("preset",))
    out["quandle"] = space.quandle
    out["cocycle_exponents"] = [[0 if c.is_one() else N // 2 for c in row] for row in space.cocycle]
    out["labels"] = labels
    out["dim"] = space.dim
    return out


def serialize_spec(spec):
    """YAML text that parse_spec maps back to an equal JobSpec."""
    doc = {}
    if spec.name is not None:
        doc["name"] = spec.name
    doc["field"] = {"N": spec.order}
    for key in ("diagram", "rack", "diagonal_node"):
        part = getattr(spec, key)
        if part is not None:
            doc[key] = {k: v for k, v in asdict(part).items() if v is not None}
    params = {k: v for k, v in asdict(spec.params).items() if v is not None}
    if params:
        doc["params"] = params
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)


# building mathematical objects from a spec

def spec_diagram(spec):
    if spec.diagram is None:
        raise SpecError("this command needs a `diagram` section")
    d = spec.diagram
    return DynkinDiagram.from_exponents(spec.order, d.vertex_exponents, d.edge_exponents)


def rack_to_space(r, N):
    cocycle = [[zeta(N, e) for e in row] for row in r.cocycle_exponents]
    return rack_space(r.quandle, cocycle, N, labels=r.labels)


def spec_space(spec):
    """The braided space of the job.  A diagram becomes the diagonal braiding
    q_jj = D_j, q_jk = D_jk (j < k), q_kj = 1."""
    N = spec.order
    if spec.rack is not None:
        return rack_to_space(spec.rack, N)
    if spec.diagonal_node is not None:
        return diagonal_space([[zeta(N, spec.diagonal_node.q_exponent)]], N)
    if spec.diagram is not None:
        D = spec_diagram(spec)
        q = [[D.vertex[j] if j == k else D.D(j, k) if j < k else zeta(N, 0)
              for k in range(D.theta)] for j in range(D.theta)]
        return diagonal_space(q, N)
    raise SpecError("this command needs a braided space (rack, diagonal_node or diagram)")


def spec_lambda(spec):
    part = spec.rack or spec.diagonal_node
    if part is None or part.lambda_exponent is None:
        raise SpecError("this command needs lambda_exponent")
    return zeta(spec.order, part.lambda_exponent)


# JSON encoding

def const_json(x):
    return {"N": x.order, "coeffs": [str(c) for c in x.coeffs], "pretty": x.pretty()}


def diagram_json(D):
    return {"vertices": [const_json(v) for v in D.vertex],
            "edges": [{"pair": [j + 1, k + 1], "label": const_json(v)}
                      for (j, k), v in sorted(D.edges().items())]}


def factor_json(f):
    return {"exponent": list(f.exponent), "constant": const_json(f.constant), "text": str(f)}


def _vec(v):
    return list(v)


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# commands

def _bound(spec, args):
    if args.bound is not None:
        return args.bound
    return spec.params.bound or DEFAULT_BOUND


def _max_degree(spec, args, default):
    if args.max_degree is not None:
        return args.max_degree
    if spec is not None and spec.params.max_degree is not None:
        return spec.params.max_degree
    return default


def cmd_reflect(spec, args):
    D = spec_diagram(spec)
    out = []
    for i in range(D.theta):
        entry = {"node": i + 1, "finite": is_i_finite(D, i)}
        if entry["finite"]:
            entry["diagram"] = diagram_json(reflect(D, i))
        out.append(entry)
    return {"diagram": diagram_json(D), "reflections": out,
            "summary": "%d of %d nodes reflect" % (sum(e["finite"] for e in out), D.theta)}


def cmd_cartan(spec, args):
    D = spec_diagram(spec)
    return {"cartan": [list(r) for r in cartan_matrix(D)], "m": list(m_vector(D)),
            "summary": "Cartan matrix of a rank %d diagram" % D.theta}


def cmd_roots(spec, args):
    D = spec_diagram(spec)
    st = run_algorithm(D, _bound(spec, args))
    allr, pos = roots(D, state=st)
    return {"roots": [_vec(g) for g in allr], "positive_roots": [_vec(g) for g in pos],
            "automorphisms": len(st.S),
            "summary": "%d roots (%d positive), %d automorphisms" % (len(allr), len(pos), len(st.S))}


def cmd_shapovalov(spec, args):
    D = spec_diagram(spec)
    st = run_algorithm(D, _bound(spec, args))
    det = sorted(shapo_determinant(D, state=st), key=lambda f: f.sort_key())
    return {"algorithm_factors": [factor_json(f) for f in st.factors_sorted()],
            "determinant_factors": [factor_json(f) for f in det],
            "summary": "%d factors from the walk, %d in the determinant" % (len(st.P), len(det))}


def cmd_irreducible(spec, args):
    D = spec_diagram(spec)
    exps = args.r if args.r is not None else spec.params.r_exponents
    if exps is None:
        raise SpecError("irreducible needs --r or params.r_exponents")
    if len(exps) != D.theta:
        raise SpecError("need %d exponents for --r, got %d" % (D.theta, len(exps)))
    r = [zeta(D.order, e) for e in exps]
    ok, witness = is_induced_irreducible(D, r, _bound(spec, args))
    return {"r": [const_json(x) for x in r], "irreducible": ok,
            "witness": None if witness is None else factor_json(witness),
            "summary": "irreducible" if ok else "reducible: %s vanishes" % witness}


def cmd_support(spec, args):
    D = spec_diagram(spec)
    st = run_algorithm(D, _bound(spec, args))
    verts = st.support_sorted()
    pts = hull_lattice_points(points=verts)
    out = {"vertices": [_vec(v) for v in verts], "lattice_points": [_vec(p) for p in pts],
           "summary": "%d support vertices, %d lattice points in the hull" % (len(set(verts)), len(pts))}
    if args.figure:
        from .plotting import plot_support
        plot_support(pts, verts, args.figure)
        out["figure"] = args.figure
    return out


def _terms_json(s):
    return [{"word": list(w), "coeff": c} for w, c in s.canonical().items()]


def cmd_gnk(spec, args):
    n_max = _max_degree(spec, args, 3)
    space = spec_space(spec) if spec is not None else None
    out = []
    for n in range(n_max + 1):
        for k in range(n + 1):
            g = gnk_def(n, k)
            entry = {"n": n, "k": k, "terms": _terms_json(g)}
            if space is not None:
                opg = eval_sum(space, g, n + 1)
                S = symmetrizer_map(space, n + 1)
                entry["factored_matches"] = opg == eval_sum(space, gnk_factored(n, k), n + 1)
                entry["commutes_with_symmetrizer"] = (
                    S.compose(opg) == eval_sum(space, reverse_antimorphism(g), n + 1).compose(S))
            out.append(entry)
    return {"gnk": out, "summary": "g_{n,k} for n <= %d" % n_max}


def cmd_symmetrizer_rank(spec, args):
    space = spec_space(spec)
    n_max = _max_degree(spec, args, 4)
    _check_cap(space, n_max, DEFAULT_CAP)  # fail before any work
    ranks = [nichols_component(space, n).rank for n in range(n_max + 1)]
    return {"ranks": ranks, "total": sum(ranks), "dim": space.dim,
            "summary": "ranks %s for degrees 0..%d" % (ranks, n_max)}


def cmd_shapo_kernel(spec, args):
    space = spec_space(spec)
    lam = spec_lambda(spec)
    cfg = ShapoConfig(space, lam, max_degree=_max_degree(spec, args, 4))
    _check_cap(space, cfg.max_degree, cfg.cap)
    res = shapo_kernel(cfg)
    degrees = []
    for d in range(1, cfg.max_degree + 1):
        degrees.append({"degree": d, "component_rank": res.components[d].rank,
                        "kernel_dim": res.dims[d - 1],
                        "kernel_basis": [[const_json(c) for c in v] for v in res.bases[d]]})
    return {"lambda": const_json(lam), "dims": res.dims, "total": res.total, "degrees": degrees,
            "summary": "kernel dims %s, total %d" % (res.dims, res.total)}


def cmd_orbit(spec, args):
    space = spec_space(spec)
    lam = spec_lambda(spec) if (spec.rack or spec.diagonal_node) and \
        (spec.rack or spec.diagonal_node).lambda_exponent is not None else None
    out = []
    for od in all_orbits(space):
        entry = {"seed": [space.labels[i] for i in od.seed], "m": od.m, "q": const_json(od.q),
                 "size": len(od.orbit_vectors)}
        if lam is not None:
            el = predicted_element(od, lam)
            entry["kernel_element"] = None if el is None else [
                {"tensor": [space.labels[i] for i in t], "coeff": const_json(c)}
                for t, c in sorted(el.items())]
        out.append(entry)
    return {"orbits": out, "summary": "%d orbits of c_1 on degree two" % len(out)}


def _golden_specs():
    from .presets import DIAGRAM_DATA
    out = []
    for name, (order, vexp, eexp) in sorted(DIAGRAM_DATA.items()):
        text = "field: {N: %d}\ndiagram:\n  vertex_exponents: %s\n  edge_exponents: %s\n" % (
            order, vexp, eexp)
        out.append(text)
    out.append("field: {N: 6}\nrack: {preset: fomin_kirillov, n: 3, lambda_exponent: 5}\n")
    out.append("field: {N: 4}\nrack: {preset: affine, p: 5, lambda_exponent: 1}\n")
    out.append("field: {N: 5}\ndiagonal_node: {q_exponent: 1}\nparams: {max_degree: 5}\n")
    return out


def _cli_checks():
    def round_trip():
        for text in _golden_specs():
            spec = parse_spec(text)
            if parse_spec(serialize_spec(spec)) != spec:
                return False, "round trip fails on %r" % text
        return True, "%d golden specs" % len(_golden_specs())

    def determinism():
        spec = parse_spec(_golden_specs()[0])
        ns = argparse.Namespace(bound=None, max_degree=None, r=[0, 0], figure=None)
        for name in ("roots", "shapovalov", "support", "irreducible"):
            a = canonical_json(HANDLERS[name](spec, ns))
            b = canonical_json(HANDLERS[name](parse_spec(serialize_spec(spec)), ns))
            if a != b:
                return False, "%s output differs between runs" % name
        return True, "4 commands"

    return [("cli", "round_trip", round_trip), ("cli", "determinism", determinism)]


def cmd_verify(spec, args):
    from .properties import run_suite
    results = run_suite(extra=_cli_checks())
    failed = [r for r in results if not r.passed]
    return {"checks": [r.as_dict() for r in results], "passed": len(results) - len(failed),
            "failed": len(failed),
            "summary": "%d/%d invariants hold" % (len(results) - len(failed), len(results))}


HANDLERS = {
    "reflect": cmd_reflect, "cartan": cmd_cartan, "roots": cmd_roots,
    "shapovalov": cmd_shapovalov, "irreducible": cmd_irreducible, "support": cmd_support,
    "gnk": cmd_gnk, "symmetrizer-rank": cmd_symmetrizer_rank,
    "shapo-kernel": cmd_shapo_kernel, "orbit": cmd_orbit, "verify": cmd_verify,
}


def _exponent_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers, got %r" % text)


def build_parser():
    p = argparse.ArgumentParser(prog="nicholsys", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--spec", help="YAML job file (optional for gnk and verify)")
    p.add_argument("--max-degree", type=int, dest="max_degree")
    p.add_argument("--bound", type=int, help="cap on the number of automorphisms explored")
    p.add_argument("--r", type=_exponent_list, help="exponents e_j with r_j = zeta_N^e_j")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("--figure", help="support only: also write a plot of the hull (png, pdf, svg)")
    return p


def _exit_code(exc):
    if isinstance(exc, (SpecError, DiagramError, SpaceError, CyclotomicError, OSError)):
        return EXIT_INPUT
    if isinstance(exc, NotFiniteError):
        return EXIT_NOT_FINITE
    if isinstance(exc, (BoundExceeded, ResourceError)):
        return EXIT_BOUND
    if isinstance(exc, (GroupoidError, InconsistentSolve, OrbitError)):
        return EXIT_INTERNAL
    if isinstance(exc, ValueError):
        return EXIT_INPUT
    return EXIT_INTERNAL


def run(command, spec, args):
    return HANDLERS[command](spec, args)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        spec = None
        if args.spec is not None:
            with open(args.spec, encoding="utf-8") as fh:
                spec = parse_spec(fh.read())
        elif args.command not in ("gnk", "verify"):
            raise SpecError("--spec is required for %s" % args.command)
        if args.figure and args.command != "support":
            raise SpecError("--figure only applies to the support command")
        doc = run(args.command, spec, args)
        doc["command"] = args.command
        text = canonical_json(doc)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except Exception as exc:
        code = _exit_code(exc)
        kind = {1: "input error", 2: "not finite", 3: "bound exceeded", 4: "internal error"}[code]
        sys.stderr.write("nicholsys: %s: %s\n" % (kind, exc))
        return code
    if args.command == "verify" and doc["failed"]:
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
