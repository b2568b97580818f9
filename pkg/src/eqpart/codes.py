"""Classic binary codes as vertex sets of the corresponding Hamming graphs.

Codewords are returned as vertex indices under the standard encoding of
:func:`eqpart.graphs.hamming_graph` (coordinate 0 most significant).
"""
from __future__ import annotations

import itertools


def hamming_code_vertices(r: int = 3) -> list[int]:
    """The single-error-correcting code of length 2**r - 1.

    Parity-check columns are the binary expansions of 1..2**r-1 in order, so
    coordinate i of a word checks against the number i+1.
    """
    n = 2**r - 1
    columns = list(range(1, n + 1))
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        syndrome = 0
        for x, col in zip(bits, columns):
            if x:
                syndrome ^= col
        if syndrome == 0:
            out.append(int("".join(map(str, bits)), 2) if n else 0)
    return out


def extended_hamming_code_vertices(r: int = 3) -> list[int]:
    """The length-2**r extension by an overall parity coordinate."""
    n = 2**r - 1
    out = []
    for v in hamming_code_vertices(r):
        parity = bin(v).count("1") & 1
        out.append(v * 2 + parity)
    return out
