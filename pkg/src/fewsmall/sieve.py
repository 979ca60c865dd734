"""Characteristic-2 sieve for perfect matchings whose edge masks cover [k].

Give each edge e a fresh variable z_e and let the entry for pair {i, j} be
sum(z_e * prod(x_a for a in mask(e))).  Over GF(2^q) the Pfaffian of that
symmetric, zero-diagonal matrix is the sum over perfect matchings of distinct
z-monomials, so nothing cancels.  Summing the Pfaffian over all ways of zeroing
a subset I of the x-variables keeps exactly the terms that use every x_a.  Each
such Pfaffian is sqrt(det(B_I)), with B_I read off zeta-transformed per-pair
tables, and a random evaluation point makes the whole sum nonzero with
probability at least 1/2 whenever such a matching exists.

On graphs built from packing instances the fitting masks are closed under
taking subsets, so a covering matching can always be trimmed to one whose masks
partition [k]; the two questions coincide there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gf2 import GF2Field, determinant, field
from .graph import WeightedMultigraph
from .matching import EngineConfig
from .rng import SIEVE, repeat_rng


class SieveError(ValueError):
    pass


def field_degree(k: int, node_count: int) -> int:
    """q with 2^q >= 2(k+1)N, so one repeat fails with probability <= 1/2."""
    q = max(2, math.ceil(math.log2(max(2 * (k + 1) * node_count, 1))))
    if q > 32:
        raise SieveError(f"field degree {q} exceeds the supported 32")
    return q


def zeta_transform(f) -> list[int]:
    """out[I] = sum of f[J] over J subset of I, with field addition (XOR)."""
    n = len(f)
    if n == 0 or n & (n - 1):
        raise SieveError(f"table length {n} is not a power of two")
    g = np.array(f, dtype=np.uint64).reshape(1, n)
    return [int(x) for x in _zeta_rows(g)[0]]


def _zeta_rows(tables: np.ndarray) -> np.ndarray:
    """Yates passes over the last axis of a (rows, 2^k) array, in place."""
    rows, n = tables.shape
    k = n.bit_length() - 1
    for bit in range(k):
        view = tables.reshape(rows, -1, 2, 1 << bit)
        view[:, :, 1, :] ^= view[:, :, 0, :]
    return tables


def determinant_field(F: GF2Field, M) -> int:
    return determinant(F, [list(row) for row in M])


@dataclass(frozen=True)
class RandomPoint:
    r: tuple[int, ...]   # one value per x-variable (small item)
    s: tuple[int, ...]   # one value per edge
    seed: int
    index: int

    @classmethod
    def draw(cls, F: GF2Field, k: int, m: int, seed: int, index: int) -> "RandomPoint":
        rng = repeat_rng(seed, index, SIEVE)
        vals = rng.integers(0, F.size, size=k + m, dtype=np.uint64) if k + m else []
        vals = [int(v) for v in vals]
        return cls(tuple(vals[:k]), tuple(vals[k:]), seed, index)


def _check_tags(graph: WeightedMultigraph, k: int) -> None:
    for idx, e in enumerate(graph.edges):
        if e.tag is None:
            raise SieveError(f"edge {idx} ({e.u},{e.v}) carries no subset tag")
        if not 0 <= e.tag < 1 << k:
            raise SieveError(f"edge {idx} tag {e.tag} is not a subset of {k} items")


def pair_tables(graph: WeightedMultigraph, k: int, F: GF2Field, point: RandomPoint) -> dict[tuple[int, int], list[int]]:
    """f[J] for every pair with at least one edge, before the zeta transform."""
    full = 1 << k
    rprod = [1] * full
    for mask in range(1, full):
        low = (mask & -mask).bit_length() - 1
        rprod[mask] = F.mul(rprod[mask & (mask - 1)], point.r[low])
    tables: dict[tuple[int, int], list[int]] = {}
    for e, s in zip(graph.edges, point.s):
        key = (e.u, e.v) if e.u < e.v else (e.v, e.u)
        row = tables.setdefault(key, [0] * full)
        row[e.tag] ^= F.mul(s, rprod[e.tag])
    return tables


def sieve_value(graph: WeightedMultigraph, k: int, F: GF2Field, point: RandomPoint) -> int:
    """The sieved Pfaffian evaluated at ``point``."""
    _check_tags(graph, k)
    n = graph.node_count
    if n % 2:
        return 0
    full = 1 << k
    tables = pair_tables(graph, k, F, point)
    keys = sorted(tables)
    if keys:
        g = _zeta_rows(np.array([tables[key] for key in keys], dtype=np.uint64))
    total = 0
    for I in range(full):
        rest = (full - 1) & ~I
        B = [[0] * n for _ in range(n)]
        for row, (i, j) in enumerate(keys):
            val = int(g[row, rest])
            B[i][j] = val
            B[j][i] = val
        total ^= F.sqrt(determinant(F, B))
    return total


def sieve_decide(graph: WeightedMultigraph, k: int, cfg: EngineConfig = EngineConfig()) -> bool:
    """Is there a perfect matching whose edge masks together cover all k bits?

    YES answers are always right; a NO is wrong with probability at most
    2^-repeats.
    """
    _check_tags(graph, k)
    n = graph.node_count
    if n % 2:
        return False
    F = field(field_degree(k, n))
    for index in range(cfg.repeats_for(n)):
        point = RandomPoint.draw(F, k, graph.m, cfg.seed, index)
        if sieve_value(graph, k, F, point):
            return True
    return False
