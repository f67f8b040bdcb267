"""Finite racks and quandles stored as operation tables.

Elements are the integers ``0 .. m-1`` and ``table[x][y] = x |> y`` (row is
the left operand).  Tables are kept as read-only numpy arrays so the coloring
code can index them in bulk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    AxiomOneViolation,
    AxiomTwoViolation,
    InvalidParameters,
    MalformedTable,
    NotAGroup,
    ParseError,
    SizeCapExceeded,
)

DEFAULT_ISO_CAP = 8


def _frozen(arr):
    arr = np.array(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteRack:
    table: np.ndarray
    inv_table: np.ndarray
    is_quandle: bool
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int, y: int) -> int:
        """``x |>^-1 y``, the unique z with ``z |> y = x``."""
        return int(self.inv_table[x, y])

    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteRack) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        label = self.name or ("quandle" if self.is_quandle else "rack")
        return f"FiniteRack({label}, order={self.order})"


@dataclass(frozen=True)
class RackHom:
    source: FiniteRack
    target: FiniteRack
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_bijective(self) -> bool:
        return len(set(self.map)) == len(self.map) == self.target.order


def _as_square(table) -> list[list[int]]:
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise MalformedTable("table must be a sequence of rows") from exc
    m = len(rows)
    if m == 0:
        raise MalformedTable("table is empty")
    for x, row in enumerate(rows):
        if len(row) != m:
            raise MalformedTable(f"row {x} has {len(row)} entries, expected {m}")
        for y, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise MalformedTable(f"entry ({x},{y}) is not an integer: {v!r}")
            if not 0 <= v < m:
                raise MalformedTable(f"entry ({x},{y}) = {v} out of range 0..{m - 1}")
    return rows


def validate_rack(table, name: str = "") -> FiniteRack:
    """Check both rack axioms exhaustively and build a :class:`FiniteRack`.

    Raises the first violation found: :class:`AxiomOneViolation` for a column
    that is not a bijection, :class:`AxiomTwoViolation` for the first failing
    triple in lexicographic order.
    """
    rows = _as_square(table)
    m = len(rows)
    t = np.array(rows, dtype=np.int64)

    inv = np.empty((m, m), dtype=np.int64)
    for y in range(m):
        seen = [-1] * m
        for x in range(m):
            z = rows[x][y]
            if seen[z] >= 0:
                raise AxiomOneViolation(y, seen[z], x)
            seen[z] = x
            inv[z, y] = x

    # (x |> y) |> z == (x |> z) |> (y |> z); vectorized over x for each (y, z)
    for y in range(m):
        for z in range(m):
            lhs = t[t[:, y], z]
            rhs = t[t[:, z], t[y, z]]
            if not np.array_equal(lhs, rhs):
                raise AxiomTwoViolation(*_first_axiom_two(t))

    is_quandle = bool(np.all(t[np.arange(m), np.arange(m)] == np.arange(m)))
    return FiniteRack(_frozen(t), _frozen(inv), is_quandle, name)


def _first_axiom_two(t):
    m = t.shape[0]
    for x in range(m):
        for y in range(m):
            for z in range(m):
                if t[t[x, y], z] != t[t[x, z], t[y, z]]:
                    return int(x), int(y), int(z)
    raise AssertionError("no axiom 2 failure found")


# -- builtin families -------------------------------------------------------

def dihedral_quandle(n: int) -> FiniteRack:
    """The dihedral quandle ``R_n``: ``x |> y = 2y - x (mod n)``."""
    if n < 1:
        raise InvalidParameters(f"dihedral quandle needs n >= 1, got {n}")
    table = [[(2 * y - x) % n for y in range(n)] for x in range(n)]
    return validate_rack(table, name=f"dihedral:{n}")


def trivial_rack(n: int) -> FiniteRack:
    """``x |> y = x``; a quandle of order ``n``."""
    if n < 1:
        raise InvalidParameters(f"trivial rack needs n >= 1, got {n}")
    return validate_rack([[x] * n for x in range(n)], name=f"trivial:{n}")


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def check_group(cayley) -> tuple[int, list[int]]:
    """Validate a Cayley table; return ``(identity, inverses)``."""
    try:
        g = _as_square(cayley)
    except MalformedTable as exc:
        raise NotAGroup("closure", str(exc)) from exc
    m = len(g)
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if g[g[a][b]][c] != g[a][g[b][c]]:
                    raise NotAGroup("associativity", f"a={a}, b={b}, c={c}")
    identity = next((e for e in range(m)
                     if all(g[e][a] == a and g[a][e] == a for a in range(m))), None)
    if identity is None:
        raise NotAGroup("identity")
    inverses = []
    for a in range(m):
        b = next((b for b in range(m) if g[a][b] == identity and g[b][a] == identity), None)
        if b is None:
            raise NotAGroup("inverses", f"element {a}")
        inverses.append(b)
    return identity, inverses


def core_quandle(cayley, name: str = "core") -> FiniteRack:
    """Core quandle of a finite group given by its Cayley table: ``x |> y = y x^-1 y``."""
    _, inverses = check_group(cayley)
    g = [list(r) for r in cayley]
    m = len(g)
    table = [[g[g[y][inverses[x]]][y] for y in range(m)] for x in range(m)]
    return validate_rack(table, name=name)


def ts_rack(m: int, t: int, s: int) -> FiniteRack:
    """The ``(t,s)``-rack on ``Z_m``: ``x |> y = t x + s y (mod m)``.

    Requires ``t`` to be a unit mod ``m`` and ``s^2 = (1-t)s (mod m)``.
    """
    if m < 1:
        raise InvalidParameters(f"modulus must be >= 1, got {m}")
    if math.gcd(t % m, m) != 1:
        raise InvalidParameters(f"t={t} is not a unit mod {m}")
    if (s * s - (1 - t) * s) % m != 0:
        raise InvalidParameters(f"s^2 != (1-t)s mod {m} for t={t}, s={s}")
    table = [[(t * x + s * y) % m for y in range(m)] for x in range(m)]
    return validate_rack(table, name=f"ts:{m}:{t}:{s}")


# -- homomorphisms ----------------------------------------------------------

def is_homomorphism(source: FiniteRack, target: FiniteRack, phi: Sequence[int]) -> bool:
    phi = np.asarray(phi, dtype=np.int64)
    return bool(np.array_equal(phi[source.table], target.table[np.ix_(phi, phi)]))


def orbits(rack: FiniteRack) -> list[int]:
    """Orbit label of each element under the inner action ``x -> x |>^{+-1} y``."""
    m = rack.order
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(m):
        for y in range(m):
            ra, rb = find(x), find(rack.op(x, y))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(x) for x in range(m)]


def _search(source, target, partial, injective, order=None, first_only=False):
    m, k = source.order, target.order
    S, T = source.table.tolist(), target.table.tolist()
    phi = [-1] * m
    used = [0] * k
    found = []

    # propagate forced values; returns the list of newly assigned elements or None on conflict
    def assign(x, v, trail):
        stack = [(x, v)]
        while stack:
            a, va = stack.pop()
            if phi[a] >= 0:
                if phi[a] != va:
                    return False
                continue
            if injective and used[va]:
                return False
            phi[a] = va
            used[va] += 1
            trail.append(a)
            for b in range(m):
                vb = phi[b]
                if vb < 0:
                    continue
                for (p, q, vp, vq) in ((a, b, va, vb), (b, a, vb, va)):
                    r = S[p][q]
                    want = T[vp][vq]
                    if phi[r] >= 0:
                        if phi[r] != want:
                            return False
                    else:
                        stack.append((r, want))
        return True

    def undo(trail):
        for a in trail:
            used[phi[a]] -= 1
            phi[a] = -1

    base_trail = []
    for x, v in sorted(partial.items()):
        if not 0 <= v < k or not 0 <= x < m:
            raise InvalidParameters(f"partial assignment {x} -> {v} out of range")
        if not assign(x, v, base_trail):
            return []

    order = list(order) if order is not None else list(range(m))

    def rec(pos):
        while pos < m and phi[order[pos]] >= 0:
            pos += 1
        if pos == m:
            found.append(tuple(phi))
            return first_only
        x = order[pos]
        for v in range(k):
            trail = []
            ok = assign(x, v, trail)
            if ok and rec(pos + 1):
                return True
            undo(trail)
        return False

    rec(0)
    return found


def hom_search(source: FiniteRack, target: FiniteRack,
               partial: Mapping[int, int] | None = None) -> list[RackHom]:
    """All rack homomorphisms ``source -> target`` extending ``partial``.

    Backtracking over source elements in index order; every time two source
    elements have images, the image of their product is forced, so most
    branches are decided by propagation rather than enumeration.  Results come
    out in lexicographic order of the map.
    """
    maps = _search(source, target, dict(partial or {}), injective=False)
    return [RackHom(source, target, phi) for phi in maps]


def is_isomorphic(a: FiniteRack, b: FiniteRack, cap: int = DEFAULT_ISO_CAP,
                  partial: Mapping[int, int] | None = None):
    """Return ``(True, witness)`` or ``(False, None)``."""
    if a.order > cap:
        raise SizeCapExceeded(a.order, cap)
    if a.order != b.order or a.is_quandle != b.is_quandle:
        return False, None
    orb = orbits(a)
    sizes = {r: orb.count(r) for r in set(orb)}
    order = sorted(range(a.order), key=lambda x: (-sizes[orb[x]], x))
    maps = _search(a, b, dict(partial or {}), injective=True, order=order, first_only=True)
    if not maps:
        return False, None
    return True, RackHom(a, b, maps[0])


def relabel(rack: FiniteRack, perm: Sequence[int]) -> FiniteRack:
    """Transport the rack structure along the bijection ``x -> perm[x]``."""
    m = rack.order
    inv = [0] * m
    for x, px in enumerate(perm):
        inv[px] = x
    table = [[perm[rack.op(inv[u], inv[v])] for v in range(m)] for u in range(m)]
    return validate_rack(table)


# -- text format ------------------------------------------------------------

def parse_rack_file(text: str, validate: bool = True):
    """Parse the table format: order on the first line, then ``m`` rows.

    ``#`` comment lines and blank lines are skipped.  With ``validate=False``
    the raw rows are returned (used for group tables).
    """
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines())
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty rack file", 1, 1)
    lineno, first = lines[0]
    try:
        m = int(first.strip())
    except ValueError:
        raise ParseError(f"expected order, got {first.strip()!r}", lineno, 1) from None
    if m < 1:
        raise ParseError(f"order must be positive, got {m}", lineno, 1)
    if len(lines) - 1 != m:
        ln = lines[-1][0] if len(lines) > 1 else lineno
        raise ParseError(f"expected {m} rows, found {len(lines) - 1}", ln, 1)
    rows = []
    for lineno, ln in lines[1:]:
        row = []
        col = 0
        for tok in ln.split():
            col = ln.index(tok, col) + 1
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno, col) from None
            col += len(tok) - 1
        if len(row) != m:
            raise ParseError(f"expected {m} entries, found {len(row)}", lineno, 1)
        rows.append(row)
    if not validate:
        return rows
    return validate_rack(rows)


def serialize_rack(rack: FiniteRack) -> str:
    lines = [str(rack.order)]
    lines += [" ".join(str(v) for v in row) for row in rack.rows()]
    return "\n".join(lines) + "\n"
