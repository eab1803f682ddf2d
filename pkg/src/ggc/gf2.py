"""Bit-packed linear algebra over F_2.

A matrix is a list of int rows; bit j of a row is the entry in column j.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple


def rref(rows: Sequence[int], n_cols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [r for r in rows if r]
    pivots: List[int] = []
    top = 0
    for col in range(n_cols):
        bit = 1 << col
        for i in range(top, len(work)):
            if work[i] & bit:
                work[top], work[i] = work[i], work[top]
                break
        else:
            continue
        p = work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= p
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(rows: Sequence[int], n_cols: int) -> int:
    return len(rref(rows, n_cols)[0])


def nullspace(rows: Sequence[int], n_cols: int) -> List[int]:
    """Basis of {c : rows . c = 0}, one int per basis vector."""
    red, pivots = rref(rows, n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, p in zip(red, pivots):
            if (r >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def mat_vec(rows: Sequence[int], v: int) -> int:
    """H . v^T packed as an int (bit i = parity of row i against v)."""
    out = 0
    for i, r in enumerate(rows):
        if (r & v).bit_count() & 1:
            out |= 1 << i
    return out


def in_rowspan(v: int, rows: Sequence[int], n_cols: int) -> bool:
    red, pivots = rref(rows, n_cols)
    for r, p in zip(red, pivots):
        if (v >> p) & 1:
            v ^= r
    return v == 0


def same_rowspan(a: Sequence[int], b: Sequence[int], n_cols: int) -> bool:
    return rank(a, n_cols) == rank(b, n_cols) and all(in_rowspan(v, a, n_cols) for v in b)


def combine(rows: Sequence[int], coeffs: int) -> int:
    """XOR of rows selected by the bits of coeffs."""
    out = 0
    i = 0
    while coeffs:
        if coeffs & 1:
            out ^= rows[i]
        coeffs >>= 1
        i += 1
    return out


def transpose(rows: Sequence[int], n_cols: int) -> List[int]:
    out = [0] * n_cols
    for i, r in enumerate(rows):
        j = 0
        while r:
            if r & 1:
                out[j] |= 1 << i
            r >>= 1
            j += 1
    return out


def bits(v: int) -> Iterable[int]:
    """Indices of set bits, ascending."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def row_to_hex(v: int, n_cols: int) -> str:
    return v.to_bytes((n_cols + 7) // 8, "little").hex()


def row_from_hex(s: str, n_cols: int) -> int:
    raw = bytes.fromhex(s.strip())
    if len(raw) != (n_cols + 7) // 8:
        raise ValueError(f"expected {(n_cols + 7) // 8} bytes for {n_cols} columns, got {len(raw)}")
    v = int.from_bytes(raw, "little")
    if v >> n_cols:
        raise ValueError("padding bits set beyond the row length")
    return v


def dump_matrix(rows: Sequence[int], n_cols: int) -> str:
    lines = [f"{len(rows)} {n_cols}"]
    lines.extend(row_to_hex(r, n_cols) for r in rows)
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> Tuple[List[int], int]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n_rows, n_cols = map(int, lines[0].split())
    if len(lines) - 1 != n_rows:
        raise ValueError(f"header says {n_rows} rows, found {len(lines) - 1}")
    return [row_from_hex(ln, n_cols) for ln in lines[1:]], n_cols
