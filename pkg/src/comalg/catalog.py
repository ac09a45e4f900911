"""The small algebras used throughout tests and random instance generation."""

from __future__ import annotations

from .algebra import Algebra, endomorphism_algebra, field


def group_algebra_z2() -> Algebra:
    # basis e (identity), g
    e, g = (1, 0), (0, 1)
    return Algebra(2, [[e, g], [g, e]], e, "Z2")


def dual_numbers() -> Algebra:
    # basis 1, x with x^2 = 0
    one, x, z = (1, 0), (0, 1), (0, 0)
    return Algebra(2, [[one, x], [x, z]], one, "dual")


def matrix_algebra_m2() -> Algebra:
    m = endomorphism_algebra(2)
    return Algebra(4, m.mul, m.unit, "M2")


def upper_triangular() -> Algebra:
    # basis E11, E12, E22
    z = (0, 0, 0)
    e11, e12, e22 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    mul = [
        [e11, e12, z],
        [z, z, e12],
        [z, z, e22],
    ]
    return Algebra(3, mul, (1, 0, 1), "T2")


CATALOG = {
    "K": field,
    "Z2": group_algebra_z2,
    "dual": dual_numbers,
    "M2": matrix_algebra_m2,
    "T2": upper_triangular,
}

COMMUTATIVE = ("K", "Z2", "dual")

# algebra homomorphisms to K, as row vectors on the basis
CHARACTERS = {
    "K": ((1,),),
    "Z2": ((1, 1), (1, -1)),
    "dual": ((1, 0),),
}

# smallest dimension of a nonzero left module
MIN_MODULE_DIM = {"K": 1, "Z2": 1, "dual": 1, "T2": 1, "M2": 2}


def catalog_algebra(name: str) -> Algebra:
    return CATALOG[name]()


def all_catalog() -> list[Algebra]:
    return [f() for f in CATALOG.values()]
