"""Worked examples with their expected families, checked by ``fintop verify-paper``.

Expected values are stored as literal canonical serializations, so a match
is a byte-for-byte comparison of the recomputed output.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass

from fintop.core import FiniteSpace, parse_space
from fintop.local import LCVariant, converse_fails_check, is_variant_space, lc_family, lc_mask
from fintop.variants import Variant, variant_closed_family, variant_closed_mask, variant_open_family

EX_3_7 = """\
points: a b c d
open: a
open: b
open: a b
open: a c d
"""

EX_3_8 = """\
points: a b c d
open: a
open: b
open: a b
open: a c
open: a b c
open: a b d
"""

EX_3_9 = """\
points: a b c d
open: a
open: b
open: a b
"""

A_SPACE = """\
points: a b c d
open: a
open: b c d
"""

SPACES = {"ex37": EX_3_7, "ex38": EX_3_8, "ex39": EX_3_9, "aspace": A_SPACE}

POWERSET_ABCD = """\
{}
{a}
{b}
{c}
{d}
{a,b}
{a,c}
{a,d}
{b,c}
{b,d}
{c,d}
{a,b,c}
{a,b,d}
{a,c,d}
{b,c,d}
{a,b,c,d}"""

EX37_A = """\
{}
{b}
{a,c,d}
{a,b,c,d}"""

# (space, kind, family symbol, expected canonical serialization)
GOLDEN_FAMILIES: list[tuple[str, str, str, str]] = [
    ("ex37", "lc", "aLC", EX37_A),
    ("ex37", "lc", "eLC", POWERSET_ABCD),
    ("ex37", "lc", "alphaLC", POWERSET_ABCD),
    ("ex37", "lc", "FLC", POWERSET_ABCD),
    ("ex37", "open", "aO", EX37_A),
    ("ex37", "closed", "aC", EX37_A),
    ("ex38", "lc", "LC", POWERSET_ABCD),
    (
        "ex38",
        "lc",
        "aLC",
        "{}\n{b}\n{d}\n{a,c}\n{b,d}\n{a,b,c}\n{a,c,d}\n{a,b,c,d}",
    ),
    (
        "ex39",
        "lc",
        "LC",
        "{}\n{a}\n{b}\n{a,b}\n{c,d}\n{a,c,d}\n{b,c,d}\n{a,b,c,d}",
    ),
    ("ex39", "lc", "aLC", POWERSET_ABCD),
    ("aspace", "open", "aO", "{}\n{a}\n{b,c,d}\n{a,b,c,d}"),
]


@dataclass(frozen=True)
class GoldenResult:
    name: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def diff(self) -> str:
        return "\n".join(
            difflib.unified_diff(
                self.expected.splitlines(), self.actual.splitlines(), "expected", "actual", lineterm=""
            )
        )


def load(name: str) -> FiniteSpace:
    return parse_space(SPACES[name])


def _family_text(space: FiniteSpace, kind: str, symbol: str) -> str:
    if kind == "lc":
        fam = lc_family(space, LCVariant.parse(symbol))
    elif kind == "open":
        fam = variant_open_family(space, Variant.parse(symbol))
    else:
        fam = variant_closed_family(space, Variant.parse(symbol))
    return space.format_family(fam)


def run_golden() -> list[GoldenResult]:
    """Recompute every stored example; the result order is fixed."""
    spaces = {name: load(name) for name in SPACES}
    results = [
        GoldenResult(f"{name} {symbol}", expected, _family_text(spaces[name], kind, symbol))
        for name, kind, symbol, expected in GOLDEN_FAMILIES
    ]

    ex39 = spaces["ex39"]
    c = ex39.parse_subset("{c}")
    flags = f"aLC={bool(lc_mask(ex39, LCVariant.A_LC)[c])} LC={bool(lc_mask(ex39, LCVariant.LC)[c])}"
    results.append(GoldenResult("ex39 {c} membership", "aLC=True LC=False", flags))

    aspace = spaces["aspace"]
    results.append(GoldenResult("aspace is a-space", "True", str(is_variant_space(aspace, Variant.A_OPEN))))

    ex37 = spaces["ex37"]
    a, f = ex37.parse_subset("{a}"), ex37.parse_subset("{b}")
    facts = (
        f"F in aC={bool(variant_closed_mask(ex37, Variant.A_OPEN)[f])} "
        f"A&F={ex37.format_subset(a & f)} "
        f"A in aLC={bool(lc_mask(ex37, LCVariant.A_LC)[a])} "
        f"converse fails={converse_fails_check(ex37, a)}"
    )
    expected = "F in aC=True A&F={} A in aLC=False converse fails=True"
    results.append(GoldenResult("ex37 converse failure", expected, facts))
    return results
