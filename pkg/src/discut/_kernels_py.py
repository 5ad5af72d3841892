"""Pure-Python brute-force enumeration kernels.

Twin of the compiled extension in ``_kernels_ext``; both walk the subset
space in Gray-code order with incremental cut updates and break value ties
by the numerically smallest subset mask, so their outputs are identical.
"""

from __future__ import annotations

from typing import List, Tuple

BACKEND = "python"


def maxcut_bruteforce(adj_masks: List[int], n: int) -> Tuple[int, int, int]:
    """Exact Max-Cut over neighbor bitmasks.

    Fixes vertex 0 outside S (the cut function is symmetric) and walks the
    2^(n-1) remaining subsets.  Returns (best_value, best_mask, enumerated).
    """
    if n == 0:
        return 0, 0, 1
    degs = [m.bit_count() for m in adj_masks]
    total = 1 << (n - 1)
    best_val = 0
    best_mask = 0
    cur = 0
    s = 0
    for i in range(1, total):
        v = (i & -i).bit_length()  # trailing zeros of i, plus the offset of 1
        bit = 1 << v
        if s & bit:
            s ^= bit
            cur += 2 * (adj_masks[v] & s).bit_count() - degs[v]
        else:
            cur += degs[v] - 2 * (adj_masks[v] & s).bit_count()
            s ^= bit
        if cur > best_val or (cur == best_val and s < best_mask):
            best_val = cur
            best_mask = s
    return best_val, best_mask, total


def maxdicut_bruteforce(out_masks: List[int], in_masks: List[int], n: int
                        ) -> Tuple[int, int, int]:
    """Exact Max-Dicut over out-/in-neighbor bitmasks.

    Walks all 2^n subsets.  Returns (best_value, best_mask, enumerated).
    """
    if n == 0:
        return 0, 0, 1
    outdegs = [m.bit_count() for m in out_masks]
    total = 1 << n
    best_val = 0
    best_mask = 0
    cur = 0
    s = 0
    for i in range(1, total):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        if s & bit:
            s ^= bit
            cur += ((out_masks[v] & s).bit_count()
                    + (in_masks[v] & s).bit_count() - outdegs[v])
        else:
            cur += (outdegs[v] - (out_masks[v] & s).bit_count()
                    - (in_masks[v] & s).bit_count())
            s ^= bit
        if cur > best_val or (cur == best_val and s < best_mask):
            best_val = cur
            best_mask = s
    return best_val, best_mask, total
