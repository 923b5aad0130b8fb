"""Finite topological spaces over bitmask subsets.

A subset of an ``n``-point space is a plain ``int`` whose bit ``i`` marks
point ``i``.  Spaces are finite, hence Alexandrov: each point ``x`` has a
smallest open neighbourhood ``nbhd[x]`` and every open set is a union of
these.  Interior and closure are answered through the neighbourhoods;
whole-space tables (one entry per subset) come from :mod:`fintop.kernels`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from fintop import kernels

MAX_POINTS = 16

PointSubset = int

TOKEN_RE = re.compile(r"[A-Za-z0-9_]+")


class InvalidSpaceError(ValueError):
    """Raised when a space or subset violates the topology axioms or format."""


class SpaceSizeError(InvalidSpaceError):
    """Raised when a space would exceed :data:`MAX_POINTS` points."""


def popcount(a: int) -> int:
    return a.bit_count()


def members_of(a: PointSubset) -> list[int]:
    """Point indices of ``a`` in ascending order."""
    out = []
    i = 0
    while a:
        if a & 1:
            out.append(i)
        a >>= 1
        i += 1
    return out


@lru_cache(maxsize=None)
def canonical_order(n: int) -> np.ndarray:
    """All ``2**n`` subsets sorted by (cardinality, ascending index tuple)."""
    subsets = list(range(1 << n))
    subsets.sort(key=lambda a: (popcount(a), members_of(a)))
    out = np.array(subsets, dtype=np.int64)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def canonical_rank(n: int) -> np.ndarray:
    """Inverse of :func:`canonical_order`: ``rank[subset]`` is its position."""
    order = canonical_order(n)
    rank = np.empty(1 << n, dtype=np.int64)
    rank[order] = np.arange(1 << n, dtype=np.int64)
    rank.flags.writeable = False
    return rank


class SetFamily:
    """An immutable, duplicate-free family of subsets in canonical order."""

    __slots__ = ("n", "members", "_index")

    def __init__(self, n: int, members: Iterable[PointSubset] = ()):
        rank = canonical_rank(n)
        unique = set(members)
        full = (1 << n) - 1
        for a in unique:
            if a < 0 or a & ~full:
                raise InvalidSpaceError(f"subset {a:#x} has bits outside {n} points")
        self.n = n
        self.members: tuple[PointSubset, ...] = tuple(sorted(unique, key=rank.__getitem__))
        self._index = frozenset(unique)

    @classmethod
    def from_mask(cls, mask: np.ndarray, n: int) -> "SetFamily":
        """Build from a boolean array indexed by subset."""
        order = canonical_order(n)
        fam = cls.__new__(cls)
        fam.n = n
        fam.members = tuple(int(a) for a in order[np.asarray(mask, dtype=bool)[order]])
        fam._index = frozenset(fam.members)
        return fam

    @classmethod
    def powerset(cls, n: int) -> "SetFamily":
        return cls.from_mask(np.ones(1 << n, dtype=bool), n)

    def mask(self) -> np.ndarray:
        out = np.zeros(1 << self.n, dtype=bool)
        out[list(self.members)] = True
        return out

    def array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def complements(self) -> "SetFamily":
        full = (1 << self.n) - 1
        return SetFamily(self.n, (full & ~a for a in self.members))

    def issubset(self, other: "SetFamily") -> bool:
        return self._index <= other._index

    def __contains__(self, a: object) -> bool:
        return a in self._index

    def __iter__(self) -> Iterator[PointSubset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    def __repr__(self) -> str:
        return f"SetFamily(n={self.n}, members={list(self.members)})"


def format_subset(a: PointSubset, names: Sequence[str]) -> str:
    """``{t1,t2,...}`` with tokens in declaration order; ``{}`` for the empty set."""
    return "{" + ",".join(names[i] for i in members_of(a)) + "}"


def format_family(family: Iterable[PointSubset], names: Sequence[str]) -> str:
    """One set per line, in the family's (canonical) order."""
    return "\n".join(format_subset(a, names) for a in family)


def parse_subset(text: str, names: Sequence[str]) -> PointSubset:
    """Parse a set literal such as ``{a,c}`` against the given point names."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise InvalidSpaceError(f"set literal must look like {{a,b}}: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return 0
    index = {name: i for i, name in enumerate(names)}
    a = 0
    for token in body.split(","):
        token = token.strip()
        if token not in index:
            raise InvalidSpaceError(f"unknown point {token!r} in {text!r}")
        a |= 1 << index[token]
    return a


def _opens_from_nbhd(nbhd: Sequence[int], n: int) -> np.ndarray:
    """Boolean mask of every union of the given neighbourhoods."""
    unions = np.zeros(1, dtype=np.int64)
    for x in range(n):
        unions = np.concatenate([unions, unions | nbhd[x]])
    mask = np.zeros(1 << n, dtype=bool)
    mask[unions] = True
    return mask


@dataclass(frozen=True, eq=True)
class FiniteSpace:
    """A finite topological space; build with :func:`validate_space`."""

    point_names: tuple[str, ...]
    opens: SetFamily

    @property
    def n(self) -> int:
        return len(self.point_names)

    @property
    def full(self) -> PointSubset:
        return (1 << self.n) - 1

    @cached_property
    def nbhd(self) -> tuple[int, ...]:
        """Smallest open set containing each point."""
        out = []
        for x in range(self.n):
            r = self.full
            for u in self.opens:
                if u >> x & 1:
                    r &= u
            out.append(r)
        return tuple(out)

    @cached_property
    def nbhd_array(self) -> np.ndarray:
        return np.array(self.nbhd, dtype=np.int64)

    @cached_property
    def memo(self) -> dict:
        """Per-space cache for derived families, filled by other modules."""
        return {}

    # whole-space tables, indexed by subset

    @cached_property
    def interior_table(self) -> np.ndarray:
        return kernels.interior_table(self.nbhd_array, self.n)

    @cached_property
    def closure_table(self) -> np.ndarray:
        return kernels.closure_table(self.nbhd_array, self.n)

    @cached_property
    def regular_open_mask(self) -> np.ndarray:
        subsets = np.arange(1 << self.n, dtype=np.int64)
        return self.interior_table[self.closure_table] == subsets

    @cached_property
    def delta_interior_table(self) -> np.ndarray:
        return kernels.subset_union_table(self.regular_open_mask, self.n)

    @cached_property
    def delta_closure_table(self) -> np.ndarray:
        full = self.full
        return full & ~self.delta_interior_table[full & ~np.arange(1 << self.n, dtype=np.int64)]

    # convenience

    def subset(self, names: Iterable[str]) -> PointSubset:
        index = {name: i for i, name in enumerate(self.point_names)}
        a = 0
        for name in names:
            if name not in index:
                raise InvalidSpaceError(f"unknown point {name!r}")
            a |= 1 << index[name]
        return a

    def parse_subset(self, text: str) -> PointSubset:
        return parse_subset(text, self.point_names)

    def format_subset(self, a: PointSubset) -> str:
        return format_subset(a, self.point_names)

    def format_family(self, family: Iterable[PointSubset]) -> str:
        return format_family(family, self.point_names)

    def check_subset(self, a: PointSubset) -> PointSubset:
        if a < 0 or a & ~self.full:
            raise InvalidSpaceError(f"subset {a:#x} is not a subset of a {self.n}-point space")
        return a

    def __repr__(self) -> str:
        opens = ", ".join(self.format_subset(u) for u in self.opens)
        return f"FiniteSpace(points={list(self.point_names)}, opens=[{opens}])"


def space_from_masks(point_names: Sequence[str], masks: Iterable[PointSubset]) -> FiniteSpace:
    """Fast constructor for families already known to be topologies."""
    names = tuple(point_names)
    n = len(names)
    return FiniteSpace(names, SetFamily(n, [*masks, 0, (1 << n) - 1]))


def space_from_nbhd(point_names: Sequence[str], nbhd: Sequence[int]) -> FiniteSpace:
    """The topology whose smallest neighbourhoods are ``nbhd``.

    ``nbhd`` must come from a preorder (``x in nbhd[x]`` and
    ``y in nbhd[x]`` implies ``nbhd[y] <= nbhd[x]``).
    """
    names = tuple(point_names)
    n = len(names)
    space = FiniteSpace(names, SetFamily.from_mask(_opens_from_nbhd(nbhd, n), n))
    space.__dict__["nbhd"] = tuple(int(v) for v in nbhd)
    return space


def validate_space(point_names: Sequence[str], opens: Iterable[Iterable[str] | PointSubset]) -> FiniteSpace:
    """Check the topology axioms and return the canonical space.

    Each raw open is either an iterable of point names or a bitmask.  The
    empty set and the whole set are added when missing.
    """
    names = tuple(point_names)
    n = len(names)
    if n < 1:
        raise InvalidSpaceError("a space needs at least one point")
    if n > MAX_POINTS:
        raise SpaceSizeError(f"{n} points exceeds the limit of {MAX_POINTS}")
    seen_names = set()
    for name in names:
        if name in seen_names:
            raise InvalidSpaceError(f"duplicate point name {name!r}")
        seen_names.add(name)
    index = {name: i for i, name in enumerate(names)}
    full = (1 << n) - 1

    raw: list[int] = []
    for item in opens:
        if isinstance(item, int):
            a = item
            if a < 0 or a & ~full:
                raise InvalidSpaceError(f"open set {a:#x} references undeclared points")
        else:
            a = 0
            for name in item:
                if name not in index:
                    raise InvalidSpaceError(f"open set references undeclared point {name!r}")
                a |= 1 << index[name]
        if a in raw:
            raise InvalidSpaceError(f"duplicate open set {format_subset(a, names)}")
        raw.append(a)

    family = SetFamily(n, [*raw, 0, full])
    space = FiniteSpace(names, family)
    if not np.array_equal(_opens_from_nbhd(space.nbhd, n), family.mask()):
        _raise_closure_violation(family, names)
    return space


def _raise_closure_violation(family: SetFamily, names: Sequence[str]) -> None:
    for u, v in combinations(family.members, 2):
        for op, joined in (("union", u | v), ("intersection", u & v)):
            if joined not in family:
                raise InvalidSpaceError(
                    f"{op} of {format_subset(u, names)} and {format_subset(v, names)} is not open"
                )
    raise AssertionError("closure check disagreed with pairwise scan")  # pragma: no cover


# text format


def parse_space(text: str) -> FiniteSpace:
    """Parse the line-oriented ``points:`` / ``open:`` space format."""
    names: list[str] | None = None
    opens: list[list[str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("points", "open"):
            raise InvalidSpaceError(f"line {lineno}: expected 'points:' or 'open:', got {line!r}")
        tokens = rest.split()
        for token in tokens:
            if not TOKEN_RE.fullmatch(token):
                raise InvalidSpaceError(f"line {lineno}: bad point token {token!r}")
        if key == "points":
            if names is not None:
                raise InvalidSpaceError(f"line {lineno}: second 'points:' line")
            if opens:
                raise InvalidSpaceError(f"line {lineno}: 'points:' must come first")
            names = tokens
        else:
            if names is None:
                raise InvalidSpaceError(f"line {lineno}: 'open:' before 'points:'")
            unknown = [t for t in tokens if t not in names]
            if unknown:
                raise InvalidSpaceError(f"line {lineno}: undeclared point {unknown[0]!r}")
            opens.append(tokens)
    if names is None:
        raise InvalidSpaceError("missing 'points:' line")
    try:
        return validate_space(names, opens)
    except InvalidSpaceError as exc:
        raise InvalidSpaceError(f"invalid space: {exc}") from None


def format_space(space: FiniteSpace) -> str:
    """Serialize a space; every open set is listed in canonical order."""
    lines = ["points: " + " ".join(space.point_names)]
    for u in space.opens:
        tokens = " ".join(space.point_names[i] for i in members_of(u))
        lines.append(("open: " + tokens).rstrip())
    return "\n".join(lines) + "\n"


# primitive operators


def interior(space: FiniteSpace, a: PointSubset) -> PointSubset:
    """Largest open subset of ``a``."""
    r = 0
    for x, nb in enumerate(space.nbhd):
        if nb & ~a == 0:
            r |= 1 << x
    return r


def closure(space: FiniteSpace, a: PointSubset) -> PointSubset:
    """Smallest closed superset of ``a``."""
    r = 0
    for x, nb in enumerate(space.nbhd):
        if nb & a:
            r |= 1 << x
    return r


def regular_open_family(space: FiniteSpace) -> SetFamily:
    fam = space.memo.get("regular_open")
    if fam is None:
        fam = space.memo.setdefault("regular_open", SetFamily.from_mask(space.regular_open_mask, space.n))
    return fam


def delta_interior(space: FiniteSpace, a: PointSubset) -> PointSubset:
    """Union of the regular open subsets of ``a``."""
    r = 0
    for u in regular_open_family(space):
        if u & ~a == 0:
            r |= u
    return r


def delta_closure(space: FiniteSpace, a: PointSubset) -> PointSubset:
    full = space.full
    return full & ~delta_interior(space, full & ~a)


# products


def product_subset(left: FiniteSpace, right: FiniteSpace, a: PointSubset, b: PointSubset) -> PointSubset:
    """``a x b`` as a subset of ``product_space(left, right)`` (row-major points)."""
    m = right.n
    r = 0
    for i in members_of(a):
        r |= b << (i * m)
    return r


def product_space(left: FiniteSpace, right: FiniteSpace) -> FiniteSpace:
    """Product topology; point ``(p, q)`` is named ``p×q`` at index ``i*m + j``.

    The smallest neighbourhood of ``(p, q)`` is the box ``nbhd(p) x nbhd(q)``,
    so the opens (unions of open boxes) are the unions of these boxes.
    """
    size = left.n * right.n
    if size > MAX_POINTS:
        raise SpaceSizeError(f"product has {size} points, limit is {MAX_POINTS}")
    names = [f"{p}×{q}" for p in left.point_names for q in right.point_names]
    nbhd = [
        product_subset(left, right, left.nbhd[i], right.nbhd[j])
        for i in range(left.n)
        for j in range(right.n)
    ]
    return space_from_nbhd(names, nbhd)


# small named spaces used across tests and the CLI


def discrete_space(names: Sequence[str]) -> FiniteSpace:
    n = len(names)
    return space_from_nbhd(names, [1 << x for x in range(n)])


def indiscrete_space(names: Sequence[str]) -> FiniteSpace:
    n = len(names)
    return space_from_nbhd(names, [(1 << n) - 1] * n)


def point_names(n: int) -> tuple[str, ...]:
    """Default labels ``a, b, c, ...`` (then ``p16``-style past ``z``)."""
    return tuple(chr(ord("a") + i) if i < 26 else f"p{i}" for i in range(n))
