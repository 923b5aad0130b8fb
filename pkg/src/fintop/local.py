"""Locally closed sets and the constructions built on a-locally closed sets.

A set is ``v``-locally closed when it is ``U & V`` for a ``v``-open ``U`` and
a ``v``-closed ``V``.  Witness searches run over families in canonical
order, so the witness returned is always the canonically least one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fintop import kernels
from fintop.core import (
    FiniteSpace,
    PointSubset,
    SetFamily,
    closure,
    product_space,
    product_subset,
)
from fintop.variants import (
    Variant,
    a_closure,
    a_interior,
    closure_table,
    variant_closed_family,
    variant_closed_mask,
    variant_closure,
    variant_open_family,
    variant_open_mask,
)


class LCVariant(enum.Enum):
    LC = "LC"
    ALPHA_LC = "alphaLC"
    A_LC = "aLC"
    B_LC = "BLC"
    E_LC = "eLC"
    F_LC = "FLC"

    @property
    def open_variant(self) -> Variant:
        return _PAIRS[self]

    @classmethod
    def parse(cls, text: str) -> "LCVariant":
        key = text.strip().lower().replace("_", "").replace("-", "")
        for v in cls:
            if key in (v.value.lower(), v.name.lower().replace("_", "")):
                return v
        raise ValueError(f"unknown locally-closed variant {text!r}")


_PAIRS = {
    LCVariant.LC: Variant.OPEN,
    LCVariant.ALPHA_LC: Variant.ALPHA,
    LCVariant.A_LC: Variant.A_OPEN,
    LCVariant.B_LC: Variant.B_OPEN,
    LCVariant.E_LC: Variant.E_OPEN,
    LCVariant.F_LC: Variant.FEEBLY,
}

# implications between locally-closed notions (source family is contained in target)
DIAGRAM_ARROWS: tuple[tuple[LCVariant, LCVariant], ...] = (
    (LCVariant.LC, LCVariant.F_LC),
    (LCVariant.LC, LCVariant.ALPHA_LC),
    (LCVariant.F_LC, LCVariant.B_LC),
    (LCVariant.F_LC, LCVariant.E_LC),
    (LCVariant.A_LC, LCVariant.F_LC),
    (LCVariant.A_LC, LCVariant.E_LC),
    (LCVariant.A_LC, LCVariant.ALPHA_LC),
    (LCVariant.ALPHA_LC, LCVariant.E_LC),
    (LCVariant.ALPHA_LC, LCVariant.B_LC),
)


class PreconditionError(ValueError):
    """An argument does not belong to the family the operation requires."""


class ConstructionError(RuntimeError):
    """An explicit witness construction did not produce a valid witness."""


@dataclass(frozen=True)
class LCWitness:
    u: PointSubset
    v: PointSubset
    variant: LCVariant

    @property
    def witnessed(self) -> PointSubset:
        return self.u & self.v

    def is_valid(self, space: FiniteSpace) -> bool:
        ov = self.variant.open_variant
        return bool(variant_open_mask(space, ov)[self.u] and variant_closed_mask(space, ov)[self.v])


@dataclass(frozen=True)
class CharacterizationRecord:
    """Outcome of the five equivalent forms; ``p`` is the form-(b) witness."""

    a_lc: bool
    b_form: bool
    p: Optional[PointSubset]
    c_form: bool
    d_form: bool
    e_form: bool

    @property
    def forms(self) -> tuple[bool, bool, bool, bool, bool]:
        return (self.a_lc, self.b_form, self.c_form, self.d_form, self.e_form)

    @property
    def consistent(self) -> bool:
        return len(set(self.forms)) == 1

    def format(self, space: FiniteSpace) -> str:
        p = space.format_subset(self.p) if self.p is not None else "-"
        return "\n".join(
            [
                f"a: {str(self.a_lc).lower()}",
                f"b: {str(self.b_form).lower()} P={p}",
                f"c: {str(self.c_form).lower()}",
                f"d: {str(self.d_form).lower()}",
                f"e: {str(self.e_form).lower()}",
            ]
        )


# families


def lc_mask(space: FiniteSpace, lcv: LCVariant) -> np.ndarray:
    key = ("lc_mask", lcv)
    mask = space.memo.get(key)
    if mask is None:
        ov = lcv.open_variant
        mask = kernels.pair_intersection_mask(
            variant_open_family(space, ov).array(),
            variant_closed_family(space, ov).array(),
            space.n,
        )
        mask.flags.writeable = False
        mask = space.memo.setdefault(key, mask)
    return mask


def lc_family(space: FiniteSpace, lcv: LCVariant) -> SetFamily:
    key = ("lc_family", lcv)
    fam = space.memo.get(key)
    if fam is None:
        fam = space.memo.setdefault(key, SetFamily.from_mask(lc_mask(space, lcv), space.n))
    return fam


def lc_witness(space: FiniteSpace, lcv: LCVariant, a: PointSubset) -> Optional[LCWitness]:
    """Canonically least ``(U, V)`` with ``U & V == a``, or ``None``."""
    space.check_subset(a)
    ov = lcv.open_variant
    closed = [v for v in variant_closed_family(space, ov) if a & ~v == 0]
    for u in variant_open_family(space, ov):
        if a & ~u:
            continue
        for v in closed:
            if u & v == a:
                return LCWitness(u, v, lcv)
    return None


# characterizations of a-locally closed / a-locally open sets


def characterize_alc(space: FiniteSpace, a: PointSubset) -> CharacterizationRecord:
    """Evaluate each equivalent form of a-local closedness on its own terms."""
    full = space.full
    a_open = variant_open_mask(space, Variant.A_OPEN)
    a_closed = variant_closed_mask(space, Variant.A_OPEN)
    acl = a_closure(space, a)

    form_a = lc_witness(space, LCVariant.A_LC, a) is not None
    p = next((u for u in variant_open_family(space, Variant.A_OPEN) if u & acl == a), None)
    form_c = bool(a_closed[acl & ~a])
    opened = a | (full & ~acl)
    form_d = bool(a_open[opened])
    form_e = a & ~a_interior(space, opened) == 0
    return CharacterizationRecord(form_a, p is not None, p, form_c, form_d, form_e)


def characterize_alo(space: FiniteSpace, a: PointSubset) -> CharacterizationRecord:
    """Complement-dual forms for a-locally open sets; ``p`` holds the closed ``Q``."""
    full = space.full
    a_open = variant_open_mask(space, Variant.A_OPEN)
    a_closed = variant_closed_mask(space, Variant.A_OPEN)
    aint = a_interior(space, a)

    form_a = lc_witness(space, LCVariant.A_LC, full & ~a) is not None
    q = next((v for v in variant_closed_family(space, Variant.A_OPEN) if v | aint == a), None)
    form_c = bool(a_open[(full & ~a) | aint])
    rest = a & ~aint
    form_d = bool(a_closed[rest])
    form_e = a_closure(space, rest) & ~a == 0
    return CharacterizationRecord(form_a, q is not None, q, form_c, form_d, form_e)


# witness constructions


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _in_alc(space: FiniteSpace, a: PointSubset) -> bool:
    return bool(lc_mask(space, LCVariant.A_LC)[a])


def disjoint_aclosed_witness(space: FiniteSpace, witness: LCWitness) -> PointSubset:
    """An a-closed set ``F = V \\ U`` that misses ``U & V``."""
    _require(
        witness.variant is LCVariant.A_LC and witness.is_valid(space),
        "witness must be an a-open / a-closed pair",
    )
    return witness.v & ~witness.u


def converse_fails_check(space: FiniteSpace, a: PointSubset) -> bool:
    """True iff ``a`` is not a-locally closed yet misses some nonempty a-closed set."""
    if _in_alc(space, space.check_subset(a)):
        return False
    return any(f and not f & a for f in variant_closed_family(space, Variant.A_OPEN))


def interpolation_witness(space: FiniteSpace, p: PointSubset, q: PointSubset) -> tuple[PointSubset, PointSubset]:
    """``(E, F) = (P | a-int(Q), Q & a-cl(P))`` for a-open ``P`` and a-closed ``Q``."""
    _require(bool(variant_open_mask(space, Variant.A_OPEN)[p]), f"P={space.format_subset(p)} is not a-open")
    _require(bool(variant_closed_mask(space, Variant.A_OPEN)[q]), f"Q={space.format_subset(q)} is not a-closed")
    return p | a_interior(space, q), q & a_closure(space, p)


def sandwich_witness(space: FiniteSpace, w: PointSubset, h: PointSubset) -> PointSubset:
    """An a-locally closed ``K`` with ``W <= K <= H``, namely ``P & a-cl(W)``."""
    _require(w & ~h == 0, "W must be contained in H")
    record = characterize_alc(space, h)
    _require(record.b_form, f"H={space.format_subset(h)} is not a-locally closed")
    return record.p & a_closure(space, w)


def separated_union_witness(space: FiniteSpace, a: PointSubset, b: PointSubset) -> LCWitness:
    """Witness that the union of two a-separated a-locally closed sets is a-locally closed."""
    _require(_in_alc(space, a) and _in_alc(space, b), "A and B must be a-locally closed")
    _require(are_a_separated(space, a, b), "A and B must be a-separated")
    full = space.full
    acl_a, acl_b = a_closure(space, a), a_closure(space, b)
    p = characterize_alc(space, a).p
    q = characterize_alc(space, b).p
    u = (p & (full & ~acl_b)) | (q & (full & ~acl_a))
    v = a_closure(space, a | b)
    witness = LCWitness(u, v, LCVariant.A_LC)
    if witness.witnessed != a | b or not witness.is_valid(space):
        raise ConstructionError(
            f"construction gives ({space.format_subset(u)}, {space.format_subset(v)}) "
            f"for A∪B={space.format_subset(a | b)}"
        )
    return witness


def product_lc_witness(
    left: FiniteSpace,
    right: FiniteSpace,
    a: PointSubset,
    b: PointSubset,
    product: Optional[FiniteSpace] = None,
) -> LCWitness:
    """Witness ``(U1 x U2, V1 x V2)`` for ``A x B`` in the product space."""
    wa = lc_witness(left, LCVariant.A_LC, a)
    wb = lc_witness(right, LCVariant.A_LC, b)
    _require(wa is not None, f"A={left.format_subset(a)} is not a-locally closed")
    _require(wb is not None, f"B={right.format_subset(b)} is not a-locally closed")
    if product is None:
        product = product_space(left, right)
    u = product_subset(left, right, wa.u, wb.u)
    v = product_subset(left, right, wa.v, wb.v)
    witness = LCWitness(u, v, LCVariant.A_LC)
    if not witness.is_valid(product):
        raise ConstructionError("product of a-open (a-closed) sets is not a-open (a-closed)")
    if witness.witnessed != product_subset(left, right, a, b):
        raise ConstructionError("box witness does not cut out A x B")  # pragma: no cover
    return witness


# predicates on subsets and spaces

DENSE_VARIANTS = (Variant.OPEN, Variant.A_OPEN, Variant.E_OPEN)


def _dense_mask(space: FiniteSpace, v: Variant) -> np.ndarray:
    if v not in DENSE_VARIANTS:
        raise ValueError(f"density is defined for {[d.value for d in DENSE_VARIANTS]}")
    table = space.closure_table if v is Variant.OPEN else closure_table(space, v)
    return table == space.full


def is_variant_dense(space: FiniteSpace, v: Variant, a: PointSubset) -> bool:
    space.check_subset(a)
    if v is Variant.OPEN:
        return closure(space, a) == space.full
    if v not in DENSE_VARIANTS:
        raise ValueError(f"density is defined for {[d.value for d in DENSE_VARIANTS]}")
    return variant_closure(space, v, a) == space.full


def is_variant_submaximal(space: FiniteSpace, v: Variant) -> bool:
    """Every ``v``-dense subset is ``v``-open."""
    dense = _dense_mask(space, v)
    return bool(variant_open_mask(space, v)[dense].all())


def is_variant_space(space: FiniteSpace, v: Variant) -> bool:
    """The ``v``-open family coincides with the topology."""
    if v not in (Variant.A_OPEN, Variant.E_OPEN):
        raise ValueError("only a-spaces and e-spaces are defined")
    return variant_open_family(space, v) == space.opens


def is_regular(space: FiniteSpace) -> bool:
    """Closed sets and outside points have disjoint open neighbourhoods."""
    full = space.full
    for u in space.opens:
        closed = full & ~u
        around = 0  # smallest open set containing the closed set
        for x, nb in enumerate(space.nbhd):
            if closed >> x & 1:
                around |= nb
        for x, nb in enumerate(space.nbhd):
            if not closed >> x & 1 and nb & around:
                return False
    return True


def are_a_separated(space: FiniteSpace, a: PointSubset, b: PointSubset) -> bool:
    return not (a & a_closure(space, b)) and not (b & a_closure(space, a))
