"""Batch kernels for the congruence checker.

Two engines live here:

* a vectorized Pascal-row sweep producing, for every shift d at once, the
  weighted sums  S[d] = sum_{k<p} w_k C(2k, k+d)  (mod p^K), and
* a packed big-integer self-convolution used for the double sums (one
  multiplication instead of an O(p^2) loop).

Both are exact; the test suite pins them against the direct evaluators.
"""

from __future__ import annotations

import numpy as np


def central_shift_sweep(
    p: int, kexp: int, weights: dict[str, list[int]]
) -> dict[str, list[int]]:
    """S[name][d] = sum_{k=0}^{p-1} weights[name][k] * C(2k, k+d) mod p^kexp.

    The row r_k[d] = C(2k, k+d) for d = 0..p-1 advances two Pascal steps at a
    time through the 1-2-1 stencil

        C(2k+2, k+1+d) = C(2k, k+d-1) + 2 C(2k, k+d) + C(2k, k+d+1),

    where the d = 0 case uses the reflection C(2k, k-1) = C(2k, k+1).  Weight
    lists must already be reduced mod p^kexp.
    """
    pk = p**kexp
    # int64 is safe while stride accumulations of (pk-1)^2 stay under 2^63
    if pk * pk * 4 <= 2**62:
        dtype = np.int64
        stride = max(1, (2**62) // (pk * pk))
    else:
        dtype = object
        stride = 4096
    row = np.zeros(1, dtype=dtype)  # support of C(2k, k+d) is d <= k
    row[0] = 1
    sums = {}
    warr = {}
    for name, w in weights.items():
        if len(w) != p:
            raise ValueError("weight list must have one entry per k < p")
        sums[name] = np.zeros(p, dtype=dtype)
        warr[name] = [int(v) % pk for v in w]
    pending = 0
    for k in range(p):
        s = row.shape[0]
        for name, w in warr.items():
            t = w[k]
            if t:
                sums[name][:s] += t * row
        pending += 1
        if pending >= stride:
            for acc in sums.values():
                acc %= pk
            pending = 0
        if k + 1 < p:
            s2 = min(k + 2, p)
            new = np.zeros(s2, dtype=dtype)
            new[:s] = 2 * row
            new[: s - 1] += row[1:]
            new[1:s2] += row[: s2 - 1]
            if s > 1:
                new[0] += row[1]
            new %= pk
            row = new
    return {name: [int(v) % pk for v in s] for name, s in sums.items()}


def self_convolution_mod(values: list[int], modulus: int) -> list[int]:
    """c_n = sum_{i+j=n} v_i v_j mod modulus for n < len(values).

    Values are packed into fixed-width little-endian slots of one big integer;
    squaring it performs every convolution at once.  The slot width is sized
    so no coefficient can overflow into its neighbour.
    """
    n = len(values)
    if n == 0:
        return []
    bound = n * (modulus - 1) ** 2
    width = max(1, (bound.bit_length() + 7) // 8)
    packed = b"".join((v % modulus).to_bytes(width, "little") for v in values)
    big = int.from_bytes(packed, "little")
    sq = big * big
    raw = sq.to_bytes(2 * n * width, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") % modulus
        for i in range(n)
    ]
