"""Exhaustive enumeration of small spaces, model checking and counterexample search.

Topologies on ``n`` labeled points correspond to preorders: the open sets
are the up-sets, i.e. ``x <= y`` and ``x in U`` imply ``y in U``, so the
smallest neighbourhood of ``x`` is ``{y : x <= y}``.  Preorders are grown one
point at a time, which visits every labeled preorder exactly once.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice, permutations, product
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from fintop import kernels
from fintop.core import (
    FiniteSpace,
    PointSubset,
    canonical_order,
    canonical_rank,
    format_space,
    members_of,
    point_names,
    popcount,
    space_from_nbhd,
)
from fintop.local import (
    DIAGRAM_ARROWS,
    ConstructionError,
    LCVariant,
    characterize_alc,
    characterize_alo,
    is_regular,
    is_variant_space,
    is_variant_submaximal,
    lc_mask,
    lc_witness,
    product_lc_witness,
    separated_union_witness,
)
from fintop.variants import (
    Variant,
    closure_table,
    interior_table,
    is_variant_open,
    variant_closed_mask,
    variant_open_mask,
)

MAX_LABELED = 6
MAX_UNLABELED = 7
MAX_SUITE = 5
MAX_CANONICAL = 9


class BoundExceededError(ValueError):
    pass


# enumeration


def _closed_sets(nbhd: Sequence[int], n: int) -> list[int]:
    full = (1 << n) - 1
    return sorted(full & ~u for u in _open_sets(nbhd, n))


def _open_sets(nbhd: Sequence[int], n: int) -> list[int]:
    unions = {0}
    for x in range(n):
        unions |= {u | nbhd[x] for u in unions}
    return sorted(unions)


def _extensions(nbhd: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Every preorder on ``n + 1`` points restricting to ``nbhd`` on the first ``n``.

    The new point gets an up-set ``above`` (open in the old space) and a
    down-set ``below`` (closed in the old space) with ``below <= above``
    pointwise, as transitivity requires.
    """
    n = len(nbhd)
    new = 1 << n
    opens = _open_sets(nbhd, n)
    for below in _closed_sets(nbhd, n):
        common = (1 << n) - 1
        for d in members_of(below):
            common &= nbhd[d]
        for above in opens:
            if above & ~common:
                continue
            grown = tuple(nb | new if below >> x & 1 else nb for x, nb in enumerate(nbhd))
            yield grown + (above | new,)


def labeled_preorders(n: int) -> Iterator[tuple[int, ...]]:
    """Smallest-neighbourhood tuples of every topology on ``n`` labeled points."""
    if n == 0:
        yield ()
        return
    for base in labeled_preorders(n - 1):
        yield from _extensions(base)


def _check_bound(n: int, limit: int, what: str) -> None:
    if not 1 <= n <= limit:
        raise BoundExceededError(f"{what} supports 1 <= n <= {limit}, got {n}")


def enumerate_topologies(n: int, up_to_iso: bool = False) -> Iterator[FiniteSpace]:
    """Stream every topology on ``n`` points, or one per homeomorphism class."""
    names = point_names(n)
    if up_to_iso:
        _check_bound(n, MAX_UNLABELED, "unlabeled enumeration")
        for nbhd in _iso_representatives(n):
            yield canonical_form(space_from_nbhd(names, nbhd))
        return
    _check_bound(n, MAX_LABELED, "labeled enumeration")
    for nbhd in labeled_preorders(n):
        yield space_from_nbhd(names, nbhd)


def count_topologies(n: int, up_to_iso: bool = False) -> int:
    if up_to_iso:
        _check_bound(n, MAX_UNLABELED, "unlabeled enumeration")
        return len(_iso_representatives(n))
    _check_bound(n, MAX_LABELED, "labeled enumeration")
    return sum(1 for _ in labeled_preorders(n))


def _relation_key(nbhd: tuple[int, ...]) -> tuple:
    """An isomorphism-invariant key of a preorder.

    Points are grouped by (up-set size, down-set size, sorted neighbour
    signatures); the key is the least relation matrix over orderings that
    respect the groups.  Isomorphic preorders get equal keys.
    """
    n = len(nbhd)
    down = [sum(1 << y for y in range(n) if nbhd[y] >> x & 1) for x in range(n)]
    sig = [(popcount(nbhd[x]), popcount(down[x])) for x in range(n)]
    refined = [
        (sig[x], tuple(sorted(sig[y] for y in members_of(nbhd[x]))), tuple(sorted(sig[y] for y in members_of(down[x]))))
        for x in range(n)
    ]
    classes: dict = {}
    for x in range(n):
        classes.setdefault(refined[x], []).append(x)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    for parts in product(*(permutations(g) for g in groups)):
        order = [x for part in parts for x in part]
        pos = {x: i for i, x in enumerate(order)}
        bits = 0
        for x in order:
            row = 0
            for y in members_of(nbhd[x]):
                row |= 1 << pos[y]
            bits = (bits << n) | row
        if best is None or bits < best:
            best = bits
    return (tuple(sorted(refined)), best)


@lru_cache(maxsize=None)
def _iso_representatives(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((1,),)
    seen: dict = {}
    for base in _iso_representatives(n - 1):
        for grown in _extensions(base):
            seen.setdefault(_relation_key(grown), grown)
    reps = [canonical_form(space_from_nbhd(point_names(n), nb)) for nb in seen.values()]
    rank = canonical_rank(n)
    reps.sort(key=lambda s: (len(s.opens), [int(rank[u]) for u in s.opens]))
    return tuple(s.nbhd for s in reps)


def family_enumeration_oracle(n: int) -> list[frozenset]:
    """Slow cross-check: every family of subsets closed under union and intersection.

    Works directly on subset families without preorders; practical up to
    ``n = 4`` (``2**14`` candidate families).
    """
    full = (1 << n) - 1
    inner = list(range(1, full))
    found = []
    for choice in range(1 << len(inner)):
        fam = {0, full}
        fam.update(inner[i] for i in range(len(inner)) if choice >> i & 1)
        if all((u | v) in fam and (u & v) in fam for u in fam for v in fam):
            found.append(frozenset(fam))
    return found


# canonical form


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


def _relabel(a: int, perm: Sequence[int]) -> int:
    r = 0
    for i in members_of(a):
        r |= 1 << int(perm[i])
    return r


def canonical_form(space: FiniteSpace) -> FiniteSpace:
    """The relabeling whose open family is least in canonical serialization order.

    Point names keep their positions; only the open sets move.
    """
    n = space.n
    if n > MAX_CANONICAL:
        raise BoundExceededError(f"canonical form is limited to {MAX_CANONICAL} points")
    best, _ = kernels.least_relabeling(space.opens.array(), canonical_rank(n), _permutation_table(n))
    perm = _permutation_table(n)[best]
    nbhd = [0] * n
    for x in range(n):
        nbhd[int(perm[x])] = _relabel(space.nbhd[x], perm)
    return space_from_nbhd(space.point_names, nbhd)


# theorem suite


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: Optional[str] = None


@dataclass
class SuiteReport:
    space: FiniteSpace
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            tail = f"  {c.detail}" if c.detail else ""
            lines.append(f"{mark} {c.name} ({c.cases} cases){tail}")
        return "\n".join(lines)


class _Suite:
    def __init__(self, space: FiniteSpace):
        self.space = space
        self.report = SuiteReport(space)

    def fmt(self, *subsets: int) -> str:
        return ", ".join(self.space.format_subset(int(a)) for a in subsets)

    def check(self, name: str, cases: int, failure: Optional[str]) -> None:
        self.report.checks.append(CheckResult(name, failure is None, cases, failure))

    def inclusion(self, name: str, small: np.ndarray, big: np.ndarray) -> None:
        bad = np.flatnonzero(small & ~big)
        self.check(name, int(small.sum()), None if bad.size == 0 else f"first failure {self.fmt(bad[0])}")

    def pairwise(self, name: str, left: np.ndarray, right: np.ndarray, target: np.ndarray, op: Callable) -> None:
        """Check ``op(A, B)`` lands in ``target`` for every ``A`` in ``left``, ``B`` in ``right``."""
        lm, rm = np.flatnonzero(left), np.flatnonzero(right)
        joined = op(lm[:, None], rm[None, :])
        ok = target[joined]
        if ok.all():
            self.check(name, ok.size, None)
        else:
            i, j = np.argwhere(~ok)[0]
            self.check(name, ok.size, f"first failure A={self.fmt(lm[i])} B={self.fmt(rm[j])}")


def verify_theorem_suite(space: FiniteSpace) -> SuiteReport:
    """Model-check every stated inclusion, closure property and construction on ``space``."""
    if space.n > MAX_SUITE:
        raise BoundExceededError(f"theorem suite is limited to {MAX_SUITE} points")
    s = _Suite(space)
    n, full = space.n, space.full
    subsets = np.arange(1 << n, dtype=np.int64)
    comp = full & ~subsets
    it, ct = space.interior_table, space.closure_table
    dit, dct = space.delta_interior_table, space.delta_closure_table

    def is_sub(x, y):
        return (x & ~y) == 0

    # primitive operators
    ok = is_sub(it, subsets) & is_sub(subsets, ct) & (it[it] == it) & (ct[ct] == ct) & (ct == full & ~it[comp])
    s.check("interior and closure bracket every set", subsets.size, None if ok.all() else f"first failure {s.fmt(np.flatnonzero(~ok)[0])}")
    ok = is_sub(dit, it) & is_sub(ct, dct)
    s.check("delta operators bracket interior and closure", subsets.size, None if ok.all() else f"first failure {s.fmt(np.flatnonzero(~ok)[0])}")

    opened = {v: variant_open_mask(space, v) for v in Variant}
    closed = {v: variant_closed_mask(space, v) for v in Variant}
    lcm = {lv: lc_mask(space, lv) for lv in LCVariant}

    # table route against the definition-by-definition route
    bad = next(
        ((v, int(a)) for v in Variant for a in subsets if is_variant_open(space, v, int(a)) != bool(opened[v][a])),
        None,
    )
    s.check("scalar membership matches family tables", len(Variant) * subsets.size, None if bad is None else f"{bad[0].value} {s.fmt(bad[1])}")

    # generalized open families
    O, A, E = Variant.OPEN, Variant.A_OPEN, Variant.E_OPEN
    for small, big in [
        (O, Variant.ALPHA), (Variant.ALPHA, Variant.SEMI), (Variant.SEMI, Variant.B_OPEN),
        (Variant.DELTA, A), (A, Variant.ALPHA), (A, E), (A, Variant.FEEBLY),
    ]:
        s.inclusion(f"{small.value} within {big.value}", opened[small], opened[big])
    s.inclusion("aC within FC", closed[A], closed[Variant.FEEBLY])
    same = np.array_equal(opened[Variant.FEEBLY], opened[Variant.ALPHA])
    s.check("FO equals alphaO", subsets.size, None if same else "families differ")

    s.pairwise("aO closed under intersection", opened[A], opened[A], opened[A], np.bitwise_and)
    s.pairwise("aO closed under union", opened[A], opened[A], opened[A], np.bitwise_or)
    s.pairwise("aC closed under union", closed[A], closed[A], closed[A], np.bitwise_or)
    s.pairwise("aC closed under intersection", closed[A], closed[A], closed[A], np.bitwise_and)

    opens = space.opens.array()
    scl = closure_table(space, Variant.SEMI)
    ok = scl[opens] == opens | it[ct[opens]]
    s.check("semi-closure of an open set", opens.size, None if ok.all() else f"U={s.fmt(opens[~ok][0])}")

    for v in (Variant.SEMI, A, E):
        ok = interior_table(space, v) == full & ~closure_table(space, v)[comp]
        s.check(f"{v.value} interior dual to closure", subsets.size, None if ok.all() else f"first failure {s.fmt(np.flatnonzero(~ok)[0])}")

    s.pairwise("aO meet eO is e-open", opened[A], opened[E], opened[E], np.bitwise_and)
    s.pairwise("aC join eC is e-closed", closed[A], closed[E], closed[E], np.bitwise_or)

    # locally closed families
    s.inclusion("aO within aLC", opened[A], lcm[LCVariant.A_LC])
    s.inclusion("aC within aLC", closed[A], lcm[LCVariant.A_LC])
    s.inclusion("aLC within eLC", lcm[LCVariant.A_LC], lcm[LCVariant.E_LC])
    s.inclusion("aLC within FLC", lcm[LCVariant.A_LC], lcm[LCVariant.F_LC])
    s.inclusion("aLC within alphaLC", lcm[LCVariant.A_LC], lcm[LCVariant.ALPHA_LC])
    for src, dst in DIAGRAM_ARROWS:
        s.inclusion(f"arrow {src.value} => {dst.value}", lcm[src], lcm[dst])
    same = np.array_equal(lcm[LCVariant.F_LC], lcm[LCVariant.ALPHA_LC])
    s.check("FLC equals alphaLC", subsets.size, None if same else "families differ")

    alc = lcm[LCVariant.A_LC]
    s.pairwise("aLC closed under intersection", alc, alc, alc, np.bitwise_and)
    s.pairwise("aLC meet eLC is e-locally closed", alc, lcm[LCVariant.E_LC], lcm[LCVariant.E_LC], np.bitwise_and)

    _check_witness_constructions(s, alc, opened[A], closed[A])

    a_sub = is_variant_submaximal(space, A)
    s.check("a-submaximal iff aLC is everything", 1, None if a_sub == bool(alc.all()) else f"a-submaximal={a_sub}")

    if is_regular(space) and is_variant_space(space, E):
        flags = [is_variant_submaximal(space, v) for v in (O, A, E)]
        s.check("regular e-space submaximality agrees", 1, None if len(set(flags)) == 1 else f"flags={flags}")
    else:
        s.check("regular e-space submaximality agrees", 0, None)
    return s.report


def _check_witness_constructions(s: _Suite, alc: np.ndarray, a_open: np.ndarray, a_closed: np.ndarray) -> None:
    space = s.space
    full = space.full
    acl = closure_table(space, Variant.A_OPEN)
    aint = interior_table(space, Variant.A_OPEN)
    alc_sets = np.flatnonzero(alc)

    failure = None
    for a in alc_sets:
        w = lc_witness(space, LCVariant.A_LC, int(a))
        f = w.v & ~w.u
        if not a_closed[f] or f & int(a):
            failure = f"A={s.fmt(a)} F={s.fmt(f)}"
            break
    s.check("a-locally closed set misses an a-closed set", alc_sets.size, failure)

    failure, cases = None, 0
    for p in np.flatnonzero(a_open):
        for q in np.flatnonzero(a_closed):
            cases += 1
            e, f = int(p | aint[q]), int(q & acl[p])
            if not (a_open[e] and a_closed[f] and (p & q) & ~f == 0 and e & ~(p | q) == 0):
                failure = f"P={s.fmt(p)} Q={s.fmt(q)}"
                break
        if failure:
            break
    s.check("interpolation between a-open and a-closed", cases, failure)

    failure, cases = None, 0
    for h in alc_sets:
        h = int(h)
        p = characterize_alc(space, h).p
        w = h
        while True:  # every submask of h
            cases += 1
            k = p & int(acl[w])
            if not (alc[k] and w & ~k == 0 and k & ~h == 0):
                failure = f"W={s.fmt(w)} H={s.fmt(h)} K={s.fmt(k)}"
                break
            if w == 0:
                break
            w = (w - 1) & h
        if failure:
            break
    s.check("sandwich between W and a-locally closed H", cases, failure)

    alc_records = [characterize_alc(space, a) for a in range(full + 1)]
    bad = next((a for a, r in enumerate(alc_records) if not r.consistent or r.a_lc != bool(alc[a])), None)
    s.check("a-locally closed characterization forms agree", full + 1, None if bad is None else f"A={s.fmt(bad)}")
    bad = next(
        (a for a in range(full + 1) if not characterize_alo(space, a).consistent or characterize_alo(space, a).a_lc != bool(alc[full & ~a])),
        None,
    )
    s.check("a-locally open characterization forms agree", full + 1, None if bad is None else f"A={s.fmt(bad)}")

    failure, cases = None, 0
    for a in alc_sets:
        for b in alc_sets:
            a_, b_ = int(a), int(b)
            if a_ & int(acl[b_]) or b_ & int(acl[a_]):
                continue
            cases += 1
            if not alc[a_ | b_]:
                failure = f"A={s.fmt(a_)} B={s.fmt(b_)} union not a-locally closed"
                break
            try:
                separated_union_witness(space, a_, b_)
            except ConstructionError as exc:
                failure = f"A={s.fmt(a_)} B={s.fmt(b_)} {exc}"
                break
        if failure:
            break
    s.check("a-separated union is a-locally closed", cases, failure)


def _suite_chunk(nbhds: Sequence[tuple[int, ...]]) -> list[tuple[int, list[CheckResult]]]:
    out = []
    for nbhd in nbhds:
        n = len(nbhd)
        report = verify_theorem_suite(space_from_nbhd(point_names(n), nbhd))
        out.append((len(report.checks), report.failures))
    return out


@dataclass
class SuiteSummary:
    n: int
    spaces: int
    checks: int
    failures: list[tuple[str, CheckResult]]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_all(n: int, workers: int = 1, chunk_size: int = 256) -> SuiteSummary:
    """Run :func:`verify_theorem_suite` on every labeled topology with ``n`` points."""
    _check_bound(n, MAX_SUITE, "theorem suite")
    nbhds = list(labeled_preorders(n))
    chunks = [nbhds[i:i + chunk_size] for i in range(0, len(nbhds), chunk_size)]
    results = _ordered_map(_suite_chunk, chunks, workers)
    checks, failures = 0, []
    flat = [r for chunk in results for r in chunk]
    for nbhd, (count, fails) in zip(nbhds, flat):
        checks += count
        text = format_space(space_from_nbhd(point_names(n), nbhd))
        failures.extend((text, f) for f in fails)
    return SuiteSummary(n, len(nbhds), checks, failures)


def _ordered_map(fn: Callable, items: list, workers: int, pool: Optional[ProcessPoolExecutor] = None) -> list:
    """``map`` whose output order is the input order whatever the worker count."""
    if pool is not None:
        return list(pool.map(fn, items))
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as own:
        return list(own.map(fn, items))


# product theorem


@dataclass
class ProductSummary:
    pairs: int
    cases: int
    failures: list[str]


def verify_product_theorem(left: FiniteSpace, right: FiniteSpace) -> tuple[int, list[str]]:
    """Check ``A x B`` is a-locally closed for every a-locally closed ``A``, ``B``.

    Returns the number of ``(A, B)`` pairs checked and a list of failures.
    """
    from fintop.core import product_space, product_subset

    prod = product_space(left, right)
    prod_alc = lc_mask(prod, LCVariant.A_LC)
    failures = []
    cases = 0
    for a in np.flatnonzero(lc_mask(left, LCVariant.A_LC)):
        for b in np.flatnonzero(lc_mask(right, LCVariant.A_LC)):
            cases += 1
            a_, b_ = int(a), int(b)
            target = product_subset(left, right, a_, b_)
            try:
                w = product_lc_witness(left, right, a_, b_, product=prod)
            except ConstructionError as exc:
                failures.append(f"{format_space(left)}x{format_space(right)}A={a_} B={b_}: {exc}")
                continue
            if w.witnessed != target or not prod_alc[target]:
                failures.append(f"{format_space(left)}x{format_space(right)}A={a_} B={b_}: not in aLC")
    return cases, failures


def _product_chunk(pairs: Sequence[tuple[tuple[int, ...], tuple[int, ...]]]) -> list[tuple[int, list[str]]]:
    out = []
    for ln, rn in pairs:
        left = space_from_nbhd(point_names(len(ln)), ln)
        right = space_from_nbhd(point_names(len(rn)), rn)
        out.append(verify_product_theorem(left, right))
    return out


def verify_all_products(n: int, workers: int = 1) -> ProductSummary:
    """Product theorem over all ordered pairs of labeled ``n``-point spaces."""
    _check_bound(n, 4, "product check")
    nbhds = list(labeled_preorders(n))
    pairs = [(l, r) for l in nbhds for r in nbhds]
    chunks = [pairs[i:i + 64] for i in range(0, len(pairs), 64)]
    results = [r for chunk in _ordered_map(_product_chunk, chunks, workers) for r in chunk]
    return ProductSummary(len(pairs), sum(c for c, _ in results), [f for _, fs in results for f in fs])


# counterexample search

Family = Union[Variant, LCVariant]


def parse_family(text: str) -> Family:
    try:
        return LCVariant.parse(text)
    except ValueError:
        pass
    try:
        return Variant.parse(text)
    except ValueError:
        raise ValueError(f"unknown family {text!r}") from None


def membership_mask(space: FiniteSpace, fam: Family) -> np.ndarray:
    if isinstance(fam, LCVariant):
        return lc_mask(space, fam)
    return variant_open_mask(space, fam)


@dataclass(frozen=True)
class ClaimSpec:
    """Per-subset implication: membership in ``antecedent`` implies membership in ``consequent``."""

    antecedent: Family
    consequent: Family

    @classmethod
    def parse(cls, text: str) -> "ClaimSpec":
        src, sep, dst = text.partition("=>")
        if not sep:
            raise ValueError(f"claim must look like SRC=>DST: {text!r}")
        return cls(parse_family(src), parse_family(dst))

    def __str__(self) -> str:
        return f"{self.antecedent.value}=>{self.consequent.value}"

    def violations(self, space: FiniteSpace) -> np.ndarray:
        return membership_mask(space, self.antecedent) & ~membership_mask(space, self.consequent)

    def first_violation(self, space: FiniteSpace) -> Optional[PointSubset]:
        bad = self.violations(space)
        order = canonical_order(space.n)
        hits = order[bad[order]]
        return int(hits[0]) if hits.size else None


@dataclass(frozen=True)
class CounterexampleRecord:
    claim: ClaimSpec
    status: str
    space: Optional[FiniteSpace]
    subset: Optional[PointSubset]
    checked_spaces: int
    max_n: int
    elapsed_ms: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == "Found"

    def recheck(self) -> bool:
        """Re-evaluate the claim on the stored space and subset."""
        if not self.found:
            return False
        return bool(self.claim.violations(self.space)[self.subset])

    def to_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "claim": str(self.claim),
            "status": self.status,
            "space": format_space(self.space) if self.space is not None else None,
            "subset": self.space.format_subset(self.subset) if self.space is not None else None,
            "checked_spaces": self.checked_spaces,
            "max_n": self.max_n,
        }
        if include_elapsed:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def to_json(self, include_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(include_elapsed), ensure_ascii=False)


def _search_chunk(args: tuple[ClaimSpec, Sequence[tuple[int, ...]]]) -> Optional[tuple[int, PointSubset]]:
    claim, nbhds = args
    for i, nbhd in enumerate(nbhds):
        space = space_from_nbhd(point_names(len(nbhd)), nbhd)
        hit = claim.first_violation(space)
        if hit is not None:
            return i, hit
    return None


def find_counterexample(claim: ClaimSpec, max_n: int, workers: int = 1, chunk_size: int = 512) -> CounterexampleRecord:
    """First (space, subset) violating ``claim`` in enumeration order, up to ``max_n`` points."""
    _check_bound(max_n, MAX_LABELED, "counterexample search")
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        return _search(claim, max_n, workers, chunk_size, pool)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def _search(claim: ClaimSpec, max_n: int, workers: int, chunk_size: int, pool) -> CounterexampleRecord:
    start = time.perf_counter()
    checked = 0
    for n in range(1, max_n + 1):
        stream = labeled_preorders(n)
        while True:
            batch = []
            for _ in range(max(workers, 1)):
                chunk = list(islice(stream, chunk_size))
                if chunk:
                    batch.append((claim, chunk))
            if not batch:
                break
            for (_, chunk), hit in zip(batch, _ordered_map(_search_chunk, batch, workers, pool)):
                if hit is not None:
                    i, subset = hit
                    space = space_from_nbhd(point_names(n), chunk[i])
                    elapsed = (time.perf_counter() - start) * 1000
                    return CounterexampleRecord(claim, "Found", space, subset, checked + i + 1, max_n, elapsed)
                checked += len(chunk)
    elapsed = (time.perf_counter() - start) * 1000
    return CounterexampleRecord(claim, f"ExhaustedUpTo({max_n})", None, None, checked, max_n, elapsed)


def blc_elc_independence(max_n: int, workers: int = 1) -> tuple[CounterexampleRecord, CounterexampleRecord]:
    """Search both directions between b-local and e-local closedness.

    The notions are independent up to ``max_n`` points iff both records are
    ``Found``.
    """
    _check_bound(max_n, MAX_LABELED, "counterexample search")
    return (
        find_counterexample(ClaimSpec(LCVariant.B_LC, LCVariant.E_LC), max_n, workers),
        find_counterexample(ClaimSpec(LCVariant.E_LC, LCVariant.B_LC), max_n, workers),
    )
