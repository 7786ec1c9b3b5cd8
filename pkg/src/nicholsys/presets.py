"""Named diagrams and braided spaces shared by the property suite, the CLI and the tests."""

import random

from .bvs import affine_quandle_space, diagonal_space, fomin_kirillov
from .cyclotomic import zeta
from .dynkin import DynkinDiagram

# (N, vertex exponents, upper-triangular edge exponents)
DIAGRAM_DATA = {
    "rank2": (6, [2, 3], [5]),
    "rank3_a3": (6, [2, 2, 3], [[-2, 0], [-4]]),
    "rank3_a6": (6, [1, 1, 3], [[-1, 0], [-2]]),
}


def diagram(name):
    order, vexp, eexp = DIAGRAM_DATA[name]
    return DynkinDiagram.from_exponents(order, vexp, eexp)


def reference_diagrams():
    return {name: diagram(name) for name in DIAGRAM_DATA}


def random_diagonal_space(seed=20240517, dim=2, order=12):
    rng = random.Random(seed)
    q = [[zeta(order, rng.randrange(order)) for _ in range(dim)] for _ in range(dim)]
    return diagonal_space(q, order)


def fk3(order=2):
    return fomin_kirillov(3, order)


def fk4(order=2):
    return fomin_kirillov(4, order)


def z5(order=2):
    return affine_quandle_space(5, order)
