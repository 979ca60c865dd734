"""Instance types, structural promises, and the JSON instance document format.

All coordinates are exact :class:`fractions.Fraction` values and bins have
capacity 1 in every dimension.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

ItemVector = tuple[Fraction, ...]


class InstanceError(ValueError):
    """Malformed or invalid instance.  ``location`` points into the document."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class PromiseError(InstanceError):
    """The large-item set breaks the 3-incompatible / 3-covering promise."""

    def __init__(self, message: str, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(message)


def as_rational(value, location: str | None = None) -> Fraction:
    if isinstance(value, bool):
        raise InstanceError(f"expected a rational, got {value!r}", location)
    if isinstance(value, float):
        raise InstanceError("floating point coordinates are not exact; use 'p/q' strings", location)
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InstanceError(f"not a rational number: {value!r}", location) from exc


def make_item(coords: Iterable) -> ItemVector:
    return tuple(as_rational(c) for c in coords)


def _dimension_of(items: Sequence[ItemVector]) -> int:
    dims = {len(v) for v in items}
    if len(dims) > 1:
        raise InstanceError(f"items have mixed dimensions {sorted(dims)}")
    return dims.pop() if dims else 0


def fits(vectors: Iterable[ItemVector], d: int) -> bool:
    """True iff the coordinate-wise sum is at most 1 in every dimension."""
    total = [Fraction(0)] * d
    for v in vectors:
        for i, c in enumerate(v):
            total[i] += c
    return all(s <= 1 for s in total)


def find_fitting_triple(items: Sequence[ItemVector]) -> Optional[tuple[int, int, int]]:
    """Return the first triple (by index) that fits into one bin, or None."""
    d = _dimension_of(items)
    for a, b, c in itertools.combinations(range(len(items)), 3):
        if fits((items[a], items[b], items[c]), d):
            return (a, b, c)
    return None


def check_3_incompatible(items: Sequence[ItemVector]) -> bool:
    return find_fitting_triple(items) is None


class CoveringMode(enum.Enum):
    ANY = "any"
    ALL = "all"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CoveringPredicate:
    """When does a bin count as covered.

    ``ANY``: some coordinate of the load exceeds 1.  ``ALL``: every coordinate
    exceeds 1.  ``CUSTOM`` calls ``custom`` on the load, which must be
    monotone (adding a non-negative vector never uncovers a bin).
    """

    mode: CoveringMode = CoveringMode.ANY
    custom: Optional[Callable[[tuple[Fraction, ...]], bool]] = None

    def __post_init__(self):
        if (self.mode is CoveringMode.CUSTOM) != (self.custom is not None):
            raise ValueError("a custom predicate is required exactly for CUSTOM mode")

    def __call__(self, load: Sequence[Fraction]) -> bool:
        if self.mode is CoveringMode.ANY:
            return any(c > 1 for c in load)
        if self.mode is CoveringMode.ALL:
            return all(c > 1 for c in load)
        return bool(self.custom(tuple(load)))

    @classmethod
    def parse(cls, name: str) -> "CoveringPredicate":
        try:
            mode = CoveringMode(name)
        except ValueError:
            raise InstanceError(f"unknown covering predicate {name!r} (expected 'any' or 'all')") from None
        if mode is CoveringMode.CUSTOM:
            raise InstanceError("custom predicates cannot be read from a document")
        return cls(mode)


def vector_sum(vectors: Iterable[ItemVector], d: int) -> tuple[Fraction, ...]:
    total = [Fraction(0)] * d
    for v in vectors:
        for i, c in enumerate(v):
            total[i] += c
    return tuple(total)


def find_uncovering_triple(items: Sequence[ItemVector], pred: CoveringPredicate) -> Optional[tuple[int, int, int]]:
    d = _dimension_of(items)
    for a, b, c in itertools.combinations(range(len(items)), 3):
        if not pred(vector_sum((items[a], items[b], items[c]), d)):
            return (a, b, c)
    return None


def check_3_covering(items: Sequence[ItemVector], pred: CoveringPredicate) -> bool:
    return find_uncovering_triple(items, pred) is None


@dataclass(frozen=True)
class PackingInstance:
    items: tuple[ItemVector, ...]
    small: frozenset[int]
    bins: int
    dimension: int = -1

    def __post_init__(self):
        items = tuple(tuple(v) for v in self.items)
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "small", frozenset(self.small))
        d = _dimension_of(items) if items else max(self.dimension, 0)
        if self.dimension >= 0 and items and d != self.dimension:
            raise InstanceError(f"items have dimension {d}, instance declares {self.dimension}")
        object.__setattr__(self, "dimension", d)
        for i, v in enumerate(items):
            for j, c in enumerate(v):
                if not isinstance(c, Fraction):
                    raise InstanceError("coordinates must be Fractions", f"items[{i}][{j}]")
                if c < 0:
                    raise InstanceError("negative coordinate", f"items[{i}][{j}]")
        for s in self.small:
            if not 0 <= s < len(items):
                raise InstanceError(f"small index {s} out of range", "small")
        if self.bins < 1:
            raise InstanceError("bin count must be positive", "bins")

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def k(self) -> int:
        return len(self.small)

    @property
    def small_indices(self) -> list[int]:
        """Small items in increasing index order; position i is small item i+1."""
        return sorted(self.small)

    @property
    def large_indices(self) -> list[int]:
        return [i for i in range(self.n) if i not in self.small]

    def small_items(self) -> list[ItemVector]:
        return [self.items[i] for i in self.small_indices]

    def large_items(self) -> list[ItemVector]:
        return [self.items[i] for i in self.large_indices]

    def with_bins(self, bins: int) -> "PackingInstance":
        return PackingInstance(self.items, self.small, bins, self.dimension)


@dataclass(frozen=True)
class KnapsackInstance:
    base: PackingInstance
    profits: tuple[int, ...]
    goal_profit: int

    def __post_init__(self):
        object.__setattr__(self, "profits", tuple(self.profits))
        if len(self.profits) != self.base.n:
            raise InstanceError(f"{len(self.profits)} profits for {self.base.n} items", "profits")
        for i, p in enumerate(self.profits):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise InstanceError("profits must be positive integers", f"profits[{i}]")
        if not isinstance(self.goal_profit, int) or self.goal_profit < 1:
            raise InstanceError("goal profit must be a positive integer", "goal_profit")


@dataclass(frozen=True)
class CoveringInstance:
    items: tuple[ItemVector, ...]
    small: frozenset[int]
    bins: int
    predicate: CoveringPredicate = field(default_factory=CoveringPredicate)
    dimension: int = -1

    def __post_init__(self):
        # reuse the structural checks of PackingInstance
        base = PackingInstance(self.items, self.small, self.bins, self.dimension)
        object.__setattr__(self, "items", base.items)
        object.__setattr__(self, "small", base.small)
        object.__setattr__(self, "dimension", base.dimension)

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def k(self) -> int:
        return len(self.small)

    @property
    def small_indices(self) -> list[int]:
        return sorted(self.small)

    @property
    def large_indices(self) -> list[int]:
        return [i for i in range(self.n) if i not in self.small]


@dataclass(frozen=True)
class HittingInstance:
    """Simple graph on ``nodes`` vertices plus k edge subsets given as edge indices."""

    nodes: int
    edges: tuple[tuple[int, int], ...]
    constraints: tuple[frozenset[int], ...]

    def __post_init__(self):
        edges = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "constraints", tuple(frozenset(c) for c in self.constraints))
        if self.nodes < 0:
            raise InstanceError("node count must be non-negative", "nodes")
        seen = set()
        for i, (u, v) in enumerate(edges):
            if u == v or not (0 <= u < self.nodes and 0 <= v < self.nodes):
                raise InstanceError(f"bad edge {u}-{v}", f"edges[{i}]")
            if (u, v) in seen:
                raise InstanceError(f"parallel edge {u}-{v} in a simple graph", f"edges[{i}]")
            seen.add((u, v))
        for i, c in enumerate(self.constraints):
            if not c:
                raise InstanceError("constraint sets must be nonempty", f"constraints[{i}]")
            if any(not 0 <= e < len(edges) for e in c):
                raise InstanceError("constraint refers to a missing edge", f"constraints[{i}]")

    @property
    def k(self) -> int:
        return len(self.constraints)


Instance = Union[PackingInstance, KnapsackInstance, CoveringInstance]


def validate(inst: Instance, *, distinct: bool = True) -> None:
    """Check distinctness and the large-set promise; raise on the first violation."""
    if isinstance(inst, KnapsackInstance):
        validate(inst.base, distinct=distinct)
        return
    items = inst.items
    if distinct:
        first: dict[ItemVector, int] = {}
        for i, v in enumerate(items):
            if v in first:
                raise InstanceError(
                    f"items {first[v]} and {i} are equal; rerun with duplicate breaking "
                    "to add a tie-breaking dimension", f"items[{i}]")
            first[v] = i
    large = inst.large_indices
    large_items = [items[i] for i in large]
    if isinstance(inst, CoveringInstance):
        triple = find_uncovering_triple(large_items, inst.predicate)
        if triple is not None:
            names = tuple(large[i] for i in triple)
            raise PromiseError(f"large items {names[0]}, {names[1]}, {names[2]} do not cover a bin", names)
    else:
        triple = find_fitting_triple(large_items)
        if triple is not None:
            names = tuple(large[i] for i in triple)
            raise PromiseError(f"large items {names[0]}, {names[1]}, {names[2]} fit together in one bin", names)


def break_duplicates(items: Sequence[ItemVector]) -> tuple[ItemVector, ...]:
    """Append one dimension holding i/(n(n+1)) for item i.

    The extra coordinates sum to at most 1/2, so no packing changes.
    """
    n = len(items)
    return tuple(tuple(v) + (Fraction(i, n * (n + 1)),) for i, v in enumerate(items))


# ---------------------------------------------------------------------------
# document format

def _fmt(c: Fraction) -> str:
    return str(c)


def to_document(inst: Instance, **extra) -> dict:
    if isinstance(inst, KnapsackInstance):
        doc = to_document(inst.base)
        doc["profits"] = list(inst.profits)
        doc["goal_profit"] = inst.goal_profit
    elif isinstance(inst, (PackingInstance, CoveringInstance)):
        doc = {
            "dimension": inst.dimension,
            "items": [[_fmt(c) for c in v] for v in inst.items],
            "small": sorted(inst.small),
            "bins": inst.bins,
        }
        if isinstance(inst, CoveringInstance):
            if inst.predicate.mode is CoveringMode.CUSTOM:
                raise InstanceError("custom covering predicates cannot be serialized")
            doc["covering"] = inst.predicate.mode.value
    else:
        raise TypeError(f"cannot serialize {type(inst).__name__}")
    doc.update(extra)
    return doc


def serialize_instance(inst: Instance, **extra) -> bytes:
    return (json.dumps(to_document(inst, **extra), indent=1) + "\n").encode()


def load_document(data: bytes | str) -> dict:
    if isinstance(data, bytes):
        data = data.decode()
    try:
        doc = json.loads(data, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed document: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(doc, dict):
        raise InstanceError("document must be an object")
    return doc


def _require(doc: dict, key: str, kind):
    if key not in doc:
        raise InstanceError("missing field", key)
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InstanceError(f"expected {getattr(kind, '__name__', kind)}", key)
    return value


def from_document(doc: dict, *, validate_promise: bool = True, dedupe: bool = False) -> Instance:
    dimension = _require(doc, "dimension", int)
    raw = _require(doc, "items", list)
    items = []
    for i, row in enumerate(raw):
        if not isinstance(row, list):
            raise InstanceError("item must be an array", f"items[{i}]")
        if len(row) != dimension:
            raise InstanceError(f"item has {len(row)} coordinates, expected {dimension}", f"items[{i}]")
        items.append(tuple(as_rational(c, f"items[{i}][{j}]") for j, c in enumerate(row)))
    if "capacity" in doc:
        caps = doc["capacity"]
        if not isinstance(caps, list) or len(caps) != dimension:
            raise InstanceError(f"capacity must list {dimension} values", "capacity")
        caps = [as_rational(c, f"capacity[{j}]") for j, c in enumerate(caps)]
        if any(c <= 0 for c in caps):
            raise InstanceError("capacities must be positive", "capacity")
        items = [tuple(c / cap for c, cap in zip(v, caps)) for v in items]
    small = _require(doc, "small", list)
    for j, s in enumerate(small):
        if not isinstance(s, int) or isinstance(s, bool):
            raise InstanceError("small indices must be integers", f"small[{j}]")
        if not 0 <= s < len(items):
            raise InstanceError(f"index {s} out of range for {len(items)} items", f"small[{j}]")
    if len(set(small)) != len(small):
        raise InstanceError("repeated small index", "small")
    bins = _require(doc, "bins", int)
    if dedupe and len(set(items)) != len(items):
        items = list(break_duplicates(items))
        dimension += 1

    promise = doc.get("promise", "three")
    check = validate_promise and promise != "none"

    if "covering" in doc:
        pred = CoveringPredicate.parse(str(doc["covering"]))
        inst: Instance = CoveringInstance(tuple(items), frozenset(small), bins, pred, dimension)
    else:
        inst = PackingInstance(tuple(items), frozenset(small), bins, dimension)
        if "profits" in doc or "goal_profit" in doc:
            profits = _require(doc, "profits", list)
            goal = _require(doc, "goal_profit", int)
            inst = KnapsackInstance(inst, tuple(profits), goal)
    if check:
        validate(inst)
    elif promise != "none":
        validate_distinct_only(inst)
    return inst


def validate_distinct_only(inst: Instance) -> None:
    items = inst.base.items if isinstance(inst, KnapsackInstance) else inst.items
    seen: dict[ItemVector, int] = {}
    for i, v in enumerate(items):
        if v in seen:
            raise InstanceError(f"items {seen[v]} and {i} are equal", f"items[{i}]")
        seen[v] = i


def parse_instance(data: bytes | str, *, validate_promise: bool = True, dedupe: bool = False) -> Instance:
    return from_document(load_document(data), validate_promise=validate_promise, dedupe=dedupe)


def parse_hitting(data: bytes | str) -> HittingInstance:
    """Hitting documents: ``{"nodes": N, "edges": [[u, v], ...], "constraints": [[edge index, ...], ...]}``."""
    doc = load_document(data)
    nodes = _require(doc, "nodes", int)
    edges = _require(doc, "edges", list)
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise InstanceError("edge must be a pair of node indices", f"edges[{i}]")
    constraints = _require(doc, "constraints", list)
    for i, c in enumerate(constraints):
        if not isinstance(c, list) or not all(isinstance(x, int) for x in c):
            raise InstanceError("constraint must be a list of edge indices", f"constraints[{i}]")
    return HittingInstance(nodes, tuple(tuple(e) for e in edges), tuple(frozenset(c) for c in constraints))


def serialize_hitting(inst: HittingInstance) -> bytes:
    doc = {
        "nodes": inst.nodes,
        "edges": [list(e) for e in inst.edges],
        "constraints": [sorted(c) for c in inst.constraints],
    }
    return (json.dumps(doc, indent=1) + "\n").encode()
