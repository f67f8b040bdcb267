"""Braid words on ``n`` strands.

A word is a tuple of nonzero signed integers: ``+i`` is the Artin generator
sigma_i (strand i over strand i+1), ``-i`` its inverse.  Letters keep the
1-based generator numbering, while strand positions are 0-based, so sigma_1
acts on positions 0 and 1.  Words read top to bottom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import IndexOutOfRange, InvalidParameters, ParseError, RelationNotApplicable, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise InvalidParameters(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(e) for e in self.letters))
        for e in self.letters:
            if e == 0 or abs(e) > self.strands - 1:
                raise IndexOutOfRange(e, self.strands)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __str__(self):
        return " ".join(str(e) for e in self.letters)

    @property
    def writhe(self) -> int:
        """Exponent sum."""
        return sum(1 if e > 0 else -1 for e in self.letters)

    def pretty(self) -> str:
        if not self.letters:
            return "e"
        return "".join(f"s{abs(e)}" + ("^-1" if e < 0 else "") for e in self.letters)


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


_COMPACT = re.compile(r"^[sS](\d+)('?)$")
_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``"1 -2 1"`` or the compact form ``"s1 s2' s1"``.

    An optional first line ``n=<strands>`` supplies the strand count; if both
    the header and ``strands`` are given they must agree.
    """
    lines = text.splitlines()
    body_start = 0
    header_n = None
    for i, ln in enumerate(lines):
        if not ln.strip() or ln.lstrip().startswith("#"):
            continue
        match = _HEADER.match(ln)
        if match:
            header_n = int(match.group(1))
            body_start = i + 1
        break
    if header_n is not None:
        if strands is not None and strands != header_n:
            raise ParseError(f"header says n={header_n} but {strands} strands requested", body_start, 1)
        strands = header_n
    if strands is None:
        raise ParseError("strand count not given")

    letters = []
    for lineno, ln in enumerate(lines[body_start:], start=body_start + 1):
        if ln.lstrip().startswith("#"):
            continue
        col = 0
        for tok in ln.split():
            col = ln.index(tok, col)
            m = _COMPACT.match(tok)
            if m:
                e = int(m.group(1)) * (-1 if m.group(2) else 1)
            else:
                try:
                    e = int(tok)
                except ValueError:
                    raise ParseError(f"bad braid letter {tok!r}", lineno, col + 1) from None
            if e == 0:
                raise ParseError("generator index 0 is not a letter", lineno, col + 1)
            if abs(e) > strands - 1:
                raise IndexOutOfRange(e, strands)
            letters.append(e)
            col += len(tok)
    return BraidWord(strands, tuple(letters))


def serialize_braid(w: BraidWord, header: bool = False) -> str:
    body = " ".join(str(e) for e in w.letters)
    return f"n={w.strands}\n{body}\n" if header else body


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a`` on top, then ``b``."""
    if a.strands != b.strands:
        raise StrandMismatch(f"cannot compose {a.strands}-braid with {b.strands}-braid")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-e for e in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for e in w.letters:
        if out and out[-1] == -e:
            out.pop()
        else:
            out.append(e)
    return BraidWord(w.strands, tuple(out))


COMMUTE = "commute"
BRAID = "braid"


def relation_sites(w: BraidWord, kind: str) -> list[int]:
    """Positions at which :func:`apply_relation` with ``kind`` would succeed."""
    sites = []
    for pos in range(len(w.letters)):
        try:
            apply_relation(w, pos, kind)
        except RelationNotApplicable:
            continue
        sites.append(pos)
    return sites


def apply_relation(w: BraidWord, position: int, kind: str) -> BraidWord:
    """Rewrite one occurrence of a defining relation of the braid group.

    ``kind="commute"``: ``s_i^a s_j^b -> s_j^b s_i^a`` when ``|i-j| >= 2``.
    ``kind="braid"``: ``s_i^e s_j^e s_i^e -> s_j^e s_i^e s_j^e`` when
    ``|i-j| = 1``, for either sign ``e`` (both directions are the same pattern).
    """
    L = w.letters
    if kind == COMMUTE:
        if not 0 <= position <= len(L) - 2:
            raise RelationNotApplicable(f"no two letters at position {position}")
        a, b = L[position], L[position + 1]
        if abs(abs(a) - abs(b)) < 2:
            raise RelationNotApplicable(f"letters {a}, {b} are not far apart")
        new = (b, a)
        span = 2
    elif kind == BRAID:
        if not 0 <= position <= len(L) - 3:
            raise RelationNotApplicable(f"no three letters at position {position}")
        a, b, c = L[position:position + 3]
        if a != c or abs(abs(a) - abs(b)) != 1 or (a > 0) != (b > 0):
            raise RelationNotApplicable(f"letters {a}, {b}, {c} do not match s_i s_j s_i")
        new = (b, a, b)
        span = 3
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    return BraidWord(w.strands, L[:position] + new + L[position + span:])


def underlying_permutation(w: BraidWord) -> tuple[int, ...]:
    """``perm[top] = bottom`` position of each strand, ignoring crossing signs."""
    where = list(range(w.strands))  # where[p] = top position of the strand now at p
    for e in w.letters:
        i = abs(e)
        where[i - 1], where[i] = where[i], where[i - 1]
    perm = [0] * w.strands
    for bottom, top in enumerate(where):
        perm[top] = bottom
    return tuple(perm)


def closure_components(w: BraidWord) -> int:
    """Number of components of the closure (cycles of the strand permutation)."""
    perm = underlying_permutation(w)
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if not seen[start]:
            count += 1
            p = start
            while not seen[p]:
                seen[p] = True
                p = perm[p]
    return count


def random_word(rng, strands: int, length: int) -> BraidWord:
    if strands < 2:
        return identity(strands)
    letters = [rng.randint(1, strands - 1) * rng.choice((1, -1)) for _ in range(length)]
    return BraidWord(strands, tuple(letters))

