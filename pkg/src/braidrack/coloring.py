"""Rack colorings of braid diagrams and the rack counting matrix.

Crossing rules, with ``(a, b)`` the colors on positions ``i-1, i`` above the
crossing of letter ``+-i``::

    s_i^-1 :  (a, b) -> (b, a |> b)
    s_i    :  (a, b) -> (b |>^-1 a, a)

Color tuples are indexed lexicographically with the leftmost strand most
significant, so for ``m = 3, n = 2`` the order is ``(0,0), (0,1), ..., (2,2)``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .braids import BraidWord
from .errors import DimensionMismatch, IndexOutOfRange, SizeCapExceeded
from .racks import FiniteRack

DEFAULT_CAP = 10**6
# streaming trace never stores the matrix, so it gets a looser bound
CLOSURE_CAP_FACTOR = 10
CHUNK = 1 << 16


def apply_letter(rack: FiniteRack, colors: Sequence[int], letter: int) -> tuple[int, ...]:
    n = len(colors)
    i = abs(letter)
    if letter == 0 or i > n - 1:
        raise IndexOutOfRange(letter, n)
    out = list(colors)
    a, b = out[i - 1], out[i]
    if letter < 0:
        out[i - 1], out[i] = b, rack.op(a, b)
    else:
        out[i - 1], out[i] = rack.inv(b, a), a
    return tuple(out)


def apply_braid(rack: FiniteRack, colors: Sequence[int], word: BraidWord) -> tuple[int, ...]:
    if len(colors) != word.strands:
        raise DimensionMismatch(f"{len(colors)} colors for a {word.strands}-strand braid")
    m = rack.order
    for c in colors:
        if not 0 <= c < m:
            raise ValueError(f"color {c} not in rack of order {m}")
    out = tuple(int(c) for c in colors)
    for e in word.letters:
        out = apply_letter(rack, out, e)
    return out


def tuple_index(colors: Sequence[int], m: int) -> int:
    idx = 0
    for c in colors:
        if not 0 <= c < m:
            raise ValueError(f"color {c} out of range for m={m}")
        idx = idx * m + int(c)
    return idx


def index_tuple(i: int, m: int, n: int) -> tuple[int, ...]:
    if not 0 <= i < m**n:
        raise ValueError(f"index {i} out of range for {m}^{n} tuples")
    out = [0] * n
    for k in range(n - 1, -1, -1):
        i, out[k] = divmod(i, m)
    return tuple(out)


def _bottom_indices(rack: FiniteRack, word: BraidWord, start: int, stop: int) -> np.ndarray:
    """Bottom tuple index for every top index in ``[start, stop)``."""
    m, n = rack.order, word.strands
    idx = np.arange(start, stop, dtype=np.int64)
    cols = []
    rest = idx
    for _ in range(n):
        rest, c = np.divmod(rest, m)
        cols.append(c)
    cols.reverse()
    T, Tinv = rack.table, rack.inv_table
    for e in word.letters:
        i = abs(e)
        a, b = cols[i - 1], cols[i]
        if e < 0:
            cols[i - 1], cols[i] = b, T[a, b]
        else:
            cols[i - 1], cols[i] = Tinv[b, a], a
    out = np.zeros_like(idx)
    for c in cols:
        out = out * m + c
    return out


def _chunks(total: int, chunk: int):
    return [(s, min(s + chunk, total)) for s in range(0, total, chunk)]


def _check_cap(size: int, cap: int | None):
    if cap is not None and size > cap:
        raise SizeCapExceeded(size, cap)


@dataclass(frozen=True, eq=False)
class CountingMatrix:
    """Permutation form of the rack counting matrix: ``perm[i] = j`` means top
    tuple ``i`` extends to bottom tuple ``j``."""

    m: int
    n: int
    perm: np.ndarray

    @property
    def size(self) -> int:
        return len(self.perm)

    def entry(self, i: int, j: int) -> int:
        return int(self.perm[i] == j)

    def is_permutation(self) -> bool:
        return len(self.perm) == self.m**self.n and np.array_equal(
            np.sort(self.perm), np.arange(len(self.perm)))

    def to_dense(self) -> np.ndarray:
        d = np.zeros((self.size, self.size), dtype=np.int8)
        d[np.arange(self.size), self.perm] = 1
        return d

    def trace(self) -> int:
        return trace(self)

    def __matmul__(self, other: "CountingMatrix") -> "CountingMatrix":
        return matrix_multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, CountingMatrix) and self.m == other.m and self.n == other.n
                and np.array_equal(self.perm, other.perm))

    def __hash__(self):
        return hash((self.m, self.n, self.perm.tobytes()))

    def __repr__(self):
        return f"CountingMatrix(m={self.m}, n={self.n}, trace={self.trace()})"


def _freeze(perm: np.ndarray) -> np.ndarray:
    perm = np.asarray(perm, dtype=np.int64)
    perm.setflags(write=False)
    return perm


def counting_matrix(rack: FiniteRack, word: BraidWord, cap: int | None = DEFAULT_CAP,
                    workers: int = 1) -> CountingMatrix:
    m, n = rack.order, word.strands
    size = m**n
    _check_cap(size, cap)
    perm = np.empty(size, dtype=np.int64)

    def fill(span):
        s, e = span
        perm[s:e] = _bottom_indices(rack, word, s, e)

    spans = _chunks(size, CHUNK)
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(workers) as pool:
            list(pool.map(fill, spans))
    else:
        for span in spans:
            fill(span)
    return CountingMatrix(m, n, _freeze(perm))


def identity_matrix(m: int, n: int) -> CountingMatrix:
    return CountingMatrix(m, n, _freeze(np.arange(m**n)))


def matrix_multiply(a: CountingMatrix, b: CountingMatrix) -> CountingMatrix:
    """Matrix product ``a @ b``; as maps, ``a`` first then ``b``."""
    if (a.m, a.n) != (b.m, b.n):
        raise DimensionMismatch(f"({a.m},{a.n}) vs ({b.m},{b.n})")
    return CountingMatrix(a.m, a.n, _freeze(b.perm[a.perm]))


def trace(mat: CountingMatrix) -> int:
    return int(np.count_nonzero(mat.perm == np.arange(mat.size)))


def closure_colorings(rack: FiniteRack, word: BraidWord,
                      cap: int | None = DEFAULT_CAP * CLOSURE_CAP_FACTOR,
                      workers: int = 1) -> int:
    """Colorings of the braid closure, counted chunk by chunk without
    materializing the matrix."""
    size = rack.order**word.strands
    _check_cap(size, cap)

    def count(span):
        s, e = span
        return int(np.count_nonzero(_bottom_indices(rack, word, s, e) == np.arange(s, e)))

    spans = _chunks(size, CHUNK)
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(workers) as pool:
            return sum(pool.map(count, spans))
    return sum(count(span) for span in spans)


# -- export -----------------------------------------------------------------

def format_perm(mat: CountingMatrix) -> str:
    return " ".join(str(int(j)) for j in mat.perm)


def format_dense(mat: CountingMatrix) -> str:
    lines = []
    for j in mat.perm:
        row = ["0"] * mat.size
        row[int(j)] = "1"
        lines.append(" ".join(row))
    return "\n".join(lines)


def format_coo(mat: CountingMatrix) -> str:
    return "\n".join(f"{i} {int(j)}" for i, j in enumerate(mat.perm))


def legend(m: int, n: int) -> str:
    return "\n".join(f"# {i} = ({','.join(map(str, index_tuple(i, m, n)))})" for i in range(m**n))
