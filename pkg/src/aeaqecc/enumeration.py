"""Blockwise exhaustive enumeration of linear-code codewords.

The message space GF(q)^k is split in two: the low digits are expanded
once into a table holding every codeword of the low sub-space, and the
high digits are walked in lexicographic order.  Each step combines one
high-part codeword against the whole low table, so nearly all work is
vectorized.  In characteristic 2 coordinates are packed into 64-bit words
(addition is XOR); in odd characteristic codewords are kept as per-digit
planes reduced mod p.

Weights are computed for every enumerated word; a caller-supplied
membership predicate can exclude words (checked only for words that would
improve the running minimum, cheapest-first).  The returned minimum is a
plain set minimum, so it does not depend on the block split or on the
order checks happen to run in.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import BudgetExceededError
from .fields import FiniteField

DEFAULT_BUDGET = 1 << 26
_BLOCK_TARGET = 1 << 16
_BLOCK_BYTES = 1 << 20  # keep the low table cache-resident
_BIG = np.int32(1 << 20)

if hasattr(np, "bitwise_count"):
    _popcount = np.bitwise_count
else:  # pragma: no cover
    _POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _popcount(a):
        return _POP8[a.view(np.uint8)].reshape(a.shape + (8,)).sum(axis=-1)


def minimum_weight_scan(
    gen: np.ndarray,
    field: FiniteField,
    *,
    is_member: Callable[[np.ndarray], bool] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int | None, int]:
    """Minimum Hamming weight over the row space of gen, zero word excluded.

    Args:
        gen: (k, n) array of encoded entries with linearly independent rows.
        field: the entries' field.
        is_member: optional predicate on an encoded coordinate vector;
            words where it returns True are excluded from the minimum.
        budget: cap on q^k, the number of codewords visited.

    Returns:
        (minimum or None if every nonzero word was excluded, words visited).
    """
    gen = np.asarray(gen, dtype=np.int64)
    if gen.ndim != 2:
        raise ValueError("generator must be 2-d")
    k, n = gen.shape
    q = field.order
    total = q**k
    if total > budget:
        raise BudgetExceededError(total, budget)
    if k == 0 or n == 0:
        return None, max(total - 1, 0)
    if field.p == 2:
        return _scan_packed(gen, field, is_member, total)
    return _scan_digit_planes(gen, field, is_member, total)


def _pick_k_lo(q: int, k: int, bytes_per_row: int) -> int:
    k_lo = 1
    while (
        k_lo < k
        and q ** (k_lo + 1) <= _BLOCK_TARGET
        and q ** (k_lo + 1) * bytes_per_row <= _BLOCK_BYTES
    ):
        k_lo += 1
    return k_lo


def _scan_packed(gen, field, is_member, total):
    q = field.order
    k, n = gen.shape
    r = field.degree
    w = 1 if r == 1 else (2 if r == 2 else 4)
    per_word = 64 // w
    nwords = (n + per_word - 1) // per_word
    mul = field.mul_table

    def pack(mat):
        out = np.zeros((mat.shape[0], nwords), dtype=np.uint64)
        for j in range(n):
            word, off = divmod(j, per_word)
            out[:, word] |= mat[:, j].astype(np.uint64) << np.uint64(off * w)
        return out

    rowmul = [pack(mul[:, gen[i]].astype(np.int64)) for i in range(k)]
    mask = pack(np.ones((1, n), dtype=np.int64))[0]
    shifts = [np.uint64(s) for s in range(1, r)]

    k_lo = _pick_k_lo(q, k, nwords * 8)
    table = np.zeros((1, nwords), dtype=np.uint64)
    for i in range(k_lo):
        table = (rowmul[i][:, None, :] ^ table[None, :, :]).reshape(-1, nwords)
    n_hi = q ** (k - k_lo)

    def unpack(words):
        vec = np.empty(n, dtype=np.int64)
        full = (1 << w) - 1
        for j in range(n):
            word, off = divmod(j, per_word)
            vec[j] = (int(words[word]) >> (off * w)) & full
        return vec

    best = None
    for h in range(n_hi):
        hi = np.zeros(nwords, dtype=np.uint64)
        hh = h
        for i in range(k_lo, k):
            digit = hh % q
            hh //= q
            if digit:
                hi ^= rowmul[i][digit]
        block = table ^ hi[None, :]
        occ = block
        for s in shifts:
            occ = occ | (block >> s)
        wts = _popcount(occ & mask[None, :]).sum(axis=1, dtype=np.int32)
        if h == 0:
            wts[0] = _BIG  # the zero word
        best = _fold_block(block, wts, best, is_member, unpack)
        if best == 1:
            break
    return best, total - 1


def _scan_digit_planes(gen, field, is_member, total):
    q = field.order
    k, n = gen.shape
    p = field.p
    r = field.degree
    mul = field.mul_table
    powers = p ** np.arange(r, dtype=np.int64)

    def planes(mat):
        return ((mat[:, None, :] // powers[None, :, None]) % p).astype(np.uint8)

    rowmul = [planes(mul[:, gen[i]].astype(np.int64)) for i in range(k)]

    k_lo = _pick_k_lo(q, k, r * n)
    table = np.zeros((1, r, n), dtype=np.uint8)
    for i in range(k_lo):
        table = rowmul[i][:, None, :, :] + table[None, :, :, :]
        table[table >= p] -= p
        table = table.reshape(-1, r, n)
    n_hi = q ** (k - k_lo)

    def unpack(planes_vec):
        return (planes_vec.astype(np.int64) * powers[:, None]).sum(axis=0)

    # reused per-block buffers; the loop body must stay allocation-free.
    # Sums stay below p so mod p is min(x, x - p) with uint8 wraparound.
    block = np.empty_like(table)
    wrap = np.empty_like(table)
    occ = np.empty((table.shape[0], n), dtype=bool)
    wts = np.empty(table.shape[0], dtype=np.int32)
    pb = np.uint8(p)

    best = None
    for h in range(n_hi):
        hi = np.zeros((r, n), dtype=np.uint8)
        hh = h
        for i in range(k_lo, k):
            digit = hh % q
            hh //= q
            if digit:
                hi += rowmul[i][digit]
                hi[hi >= p] -= p
        np.add(table, hi[None, :, :], out=block)
        np.subtract(block, pb, out=wrap)
        np.minimum(block, wrap, out=block)
        np.any(block, axis=1, out=occ)
        occ.sum(axis=1, dtype=np.int32, out=wts)
        if h == 0:
            wts[0] = _BIG
        best = _fold_block(block, wts, best, is_member, unpack)
        if best == 1:
            break
    return best, total - 1


def _fold_block(block, wts, best, is_member, unpack):
    """Lower `best` using one block of codewords and their weights."""
    ceiling = _BIG if best is None else best
    bmin = int(wts.min())
    while bmin < ceiling:
        if is_member is None:
            return bmin
        idxs = np.nonzero(wts == bmin)[0]
        for i in idxs:
            if not is_member(unpack(block[i])):
                return bmin
        wts[idxs] = _BIG
        bmin = int(wts.min())
    return best
