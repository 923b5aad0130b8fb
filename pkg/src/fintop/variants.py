"""Generalized open sets: membership, families, closures and interiors.

Two evaluation routes exist on purpose.  :func:`is_variant_open` answers a
single subset by composing the scalar operators of :mod:`fintop.core`;
:func:`variant_open_family` filters all ``2**n`` subsets at once through the
precomputed operator tables.  The test suite checks that they agree.
"""

from __future__ import annotations

import enum

import numpy as np

from fintop import kernels
from fintop.core import (
    FiniteSpace,
    PointSubset,
    SetFamily,
    closure,
    delta_closure,
    delta_interior,
    interior,
)


class Variant(enum.Enum):
    """Openness notions; the value is the family symbol used on the CLI."""

    OPEN = "O"
    DELTA = "deltaO"
    REGULAR_OPEN = "RO"
    SEMI = "SO"
    ALPHA = "alphaO"
    A_OPEN = "aO"
    B_OPEN = "BO"
    E_OPEN = "eO"
    FEEBLY = "FO"

    @property
    def closed_symbol(self) -> str:
        return self.value[:-1] + "C"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        """Accept a family symbol (``aO``), its closed form (``aC``) or a member name."""
        key = text.strip().lower().replace("_", "").replace("-", "")
        for v in cls:
            names = {v.value.lower(), v.closed_symbol.lower(), v.name.lower().replace("_", "")}
            if key in names:
                return v
        raise ValueError(f"unknown variant {text!r}")


# variants whose open family is closed under arbitrary unions, so the
# smallest closed superset / largest open subset is well defined
CLOSURE_VARIANTS = frozenset(Variant) - {Variant.B_OPEN, Variant.REGULAR_OPEN}


class ClosureStabilityError(RuntimeError):
    """The intersection of closed supersets was not itself closed."""


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


def is_variant_open(space: FiniteSpace, v: Variant, a: PointSubset) -> bool:
    """Decide membership of ``a`` in the ``v``-open family from the definition."""
    space.check_subset(a)
    if v is Variant.OPEN:
        return a in space.opens
    if v is Variant.DELTA:
        return delta_interior(space, a) == a
    if v is Variant.REGULAR_OPEN:
        return interior(space, closure(space, a)) == a
    if v is Variant.SEMI:
        return _subset(a, closure(space, interior(space, a)))
    if v is Variant.ALPHA:
        return _subset(a, interior(space, closure(space, interior(space, a))))
    if v is Variant.A_OPEN:
        return _subset(a, interior(space, closure(space, delta_interior(space, a))))
    if v is Variant.B_OPEN:
        return _subset(a, closure(space, interior(space, a)) | interior(space, closure(space, a)))
    if v is Variant.E_OPEN:
        return _subset(
            a,
            closure(space, delta_interior(space, a)) | interior(space, delta_closure(space, a)),
        )
    if v is Variant.FEEBLY:
        # witness scan: an open U inside a whose semi-closure covers a
        for u in space.opens:
            if _subset(u, a) and _subset(a, variant_closure(space, Variant.SEMI, u)):
                return True
        return False
    raise ValueError(f"unhandled variant {v!r}")  # pragma: no cover


def is_variant_closed(space: FiniteSpace, v: Variant, a: PointSubset) -> bool:
    return is_variant_open(space, v, space.full & ~a)


def variant_open_mask(space: FiniteSpace, v: Variant) -> np.ndarray:
    """Boolean array over all subsets marking the ``v``-open ones (memoized)."""
    key = ("open_mask", v)
    mask = space.memo.get(key)
    if mask is None:
        mask = _compute_open_mask(space, v)
        mask.flags.writeable = False
        mask = space.memo.setdefault(key, mask)
    return mask


def _compute_open_mask(space: FiniteSpace, v: Variant) -> np.ndarray:
    subsets = np.arange(1 << space.n, dtype=np.int64)
    it = space.interior_table
    ct = space.closure_table
    dit = space.delta_interior_table
    dct = space.delta_closure_table

    def inside(bound):
        return (subsets & ~bound) == 0

    if v is Variant.OPEN:
        return space.opens.mask()
    if v is Variant.DELTA:
        return dit == subsets
    if v is Variant.REGULAR_OPEN:
        return space.regular_open_mask.copy()
    if v is Variant.SEMI:
        return inside(ct[it])
    if v is Variant.ALPHA:
        return inside(it[ct[it]])
    if v is Variant.A_OPEN:
        return inside(it[ct[dit]])
    if v is Variant.B_OPEN:
        return inside(ct[it] | it[ct])
    if v is Variant.E_OPEN:
        return inside(ct[dit] | it[dct])
    if v is Variant.FEEBLY:
        opens = space.opens.array()
        scl = closure_table(space, Variant.SEMI)[opens]
        return kernels.sandwich_mask(opens, scl, space.n)
    raise ValueError(f"unhandled variant {v!r}")  # pragma: no cover


def variant_closed_mask(space: FiniteSpace, v: Variant) -> np.ndarray:
    key = ("closed_mask", v)
    mask = space.memo.get(key)
    if mask is None:
        open_mask = variant_open_mask(space, v)
        full = space.full
        mask = open_mask[full & ~np.arange(1 << space.n, dtype=np.int64)]
        mask.flags.writeable = False
        mask = space.memo.setdefault(key, mask)
    return mask


def variant_open_family(space: FiniteSpace, v: Variant) -> SetFamily:
    key = ("open_family", v)
    fam = space.memo.get(key)
    if fam is None:
        fam = space.memo.setdefault(key, SetFamily.from_mask(variant_open_mask(space, v), space.n))
    return fam


def variant_closed_family(space: FiniteSpace, v: Variant) -> SetFamily:
    key = ("closed_family", v)
    fam = space.memo.get(key)
    if fam is None:
        fam = space.memo.setdefault(key, SetFamily.from_mask(variant_closed_mask(space, v), space.n))
    return fam


def _require_closure_variant(v: Variant) -> None:
    if v not in CLOSURE_VARIANTS:
        raise ValueError(f"{v.value}: the closed family is not intersection-stable in general")


def closure_table(space: FiniteSpace, v: Variant) -> np.ndarray:
    """``table[A]`` = intersection of all ``v``-closed supersets of ``A``."""
    _require_closure_variant(v)
    key = ("closure_table", v)
    table = space.memo.get(key)
    if table is None:
        closed = variant_closed_mask(space, v)
        table = kernels.superset_intersection_table(closed, space.n)
        if not closed[table].all():
            bad = int(np.flatnonzero(~closed[table])[0])
            raise ClosureStabilityError(
                f"{v.value}: intersection of closed supersets of "
                f"{space.format_subset(bad)} is not {v.closed_symbol}"
            )
        table.flags.writeable = False
        table = space.memo.setdefault(key, table)
    return table


def interior_table(space: FiniteSpace, v: Variant) -> np.ndarray:
    """``table[A]`` = union of all ``v``-open subsets of ``A``."""
    _require_closure_variant(v)
    key = ("interior_table", v)
    table = space.memo.get(key)
    if table is None:
        opened = variant_open_mask(space, v)
        table = kernels.subset_union_table(opened, space.n)
        if not opened[table].all():
            bad = int(np.flatnonzero(~opened[table])[0])
            raise ClosureStabilityError(
                f"{v.value}: union of open subsets of {space.format_subset(bad)} is not {v.value}"
            )
        table.flags.writeable = False
        table = space.memo.setdefault(key, table)
    return table


def variant_closure(space: FiniteSpace, v: Variant, a: PointSubset) -> PointSubset:
    """Smallest ``v``-closed set containing ``a``."""
    return int(closure_table(space, v)[space.check_subset(a)])


def variant_interior(space: FiniteSpace, v: Variant, a: PointSubset) -> PointSubset:
    """Largest ``v``-open set contained in ``a``."""
    return int(interior_table(space, v)[space.check_subset(a)])


def semi_closure(space: FiniteSpace, a: PointSubset) -> PointSubset:
    return variant_closure(space, Variant.SEMI, a)


def a_closure(space: FiniteSpace, a: PointSubset) -> PointSubset:
    return variant_closure(space, Variant.A_OPEN, a)


def a_interior(space: FiniteSpace, a: PointSubset) -> PointSubset:
    return variant_interior(space, Variant.A_OPEN, a)


def e_closure(space: FiniteSpace, a: PointSubset) -> PointSubset:
    return variant_closure(space, Variant.E_OPEN, a)
