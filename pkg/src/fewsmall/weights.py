"""Integer encoding of small-item subsets whose sums certify partitions.

A subset X of [k] (bit i-1 of the mask stands for small item i) is mapped to
``|X| * 2**k + mask``.  A family of subsets sums to ``k * 2**k + 2**k - 1``
exactly when it partitions [k]; the cardinality counter in the high bits is
what rules out families that only cover the low bits by carrying.
"""

from __future__ import annotations

from typing import Iterable


def encode_subset(mask: int, k: int) -> int:
    if k < 0:
        raise ValueError("universe size must be non-negative")
    if not 0 <= mask < (1 << k) or (k == 0 and mask):
        raise ValueError(f"mask {mask:#b} out of range for k={k}")
    return mask.bit_count() * (1 << k) + mask


def target_weight(k: int) -> int:
    if k < 0:
        raise ValueError("universe size must be non-negative")
    return k * (1 << k) + (1 << k) - 1


def is_partition_by_weights(masks: Iterable[int], k: int) -> bool:
    return sum(encode_subset(m, k) for m in masks) == target_weight(k)


def is_partition(masks: Iterable[int], k: int) -> bool:
    """Direct set-theoretic check: pairwise disjoint with union [k]."""
    seen = 0
    for m in masks:
        if m & seen:
            return False
        seen |= m
    return seen == (1 << k) - 1


def weight_bits(k: int) -> int:
    """Bit budget k + ceil(log2(k+1)) of any single encoded subset."""
    return k + (k).bit_length() if k else 0
