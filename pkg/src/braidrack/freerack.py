"""Symbolic free racks and the fundamental pointed rack of a braid.

An element of the free rack on generators ``1..n`` is a pair ``(a, w)`` with
``a`` a generator and ``w`` a reduced word in the free group on the same
generators, read as "``a`` acted on by ``w``".  The operation is

    (a, w) |>^{+-1} (b, s) = (a, w s^-1 b^{+-1} s)

which gives every element a unique normal form, so equality is decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braids import BraidWord
from .errors import AssignmentLengthMismatch, StrandMismatch
from .racks import FiniteRack


def reduce_word(letters: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for g in letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def invert_word(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-g for g in reversed(letters))


@dataclass(frozen=True, order=True)
class FreeRackElement:
    base: int
    conjugator: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "conjugator", reduce_word(self.conjugator))

    def __rshift__(self, other: "FreeRackElement") -> "FreeRackElement":
        return free_op(self, other, 1)

    def format(self, style: str = "x") -> str:
        head = f"{style}{self.base}"
        if not self.conjugator:
            return head
        letters = ", ".join(f"{style}{abs(g)}" + ("^-1" if g < 0 else "") for g in self.conjugator)
        return f"{head} ^ [{letters}]"

    def __str__(self):
        return self.format()


def generator(i: int) -> FreeRackElement:
    return FreeRackElement(i, ())


def free_op(u: FreeRackElement, v: FreeRackElement, sign: int = 1) -> FreeRackElement:
    """``u |> v`` for ``sign=1``, ``u |>^-1 v`` for ``sign=-1``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s = v.conjugator
    tail = invert_word(s) + (sign * v.base,) + s
    return FreeRackElement(u.base, reduce_word(u.conjugator + tail))


@dataclass(frozen=True)
class FundamentalPointedRack:
    strands: int
    top: tuple[FreeRackElement, ...]
    bottom: tuple[FreeRackElement, ...]

    @property
    def basepoints(self) -> tuple[FreeRackElement, ...]:
        return self.top + self.bottom

    def lines(self, style: str = "x") -> list[str]:
        out = [f"t{i} = {el.format(style)}" for i, el in enumerate(self.top, 1)]
        out += [f"b{i} = {el.format(style)}" for i, el in enumerate(self.bottom, 1)]
        return out


def propagate_symbolic(labels: Sequence[FreeRackElement], word: BraidWord) -> tuple[FreeRackElement, ...]:
    """Run the crossing rules on free-rack labels."""
    out = list(labels)
    for e in word.letters:
        i = abs(e)
        a, b = out[i - 1], out[i]
        if e < 0:
            out[i - 1], out[i] = b, free_op(a, b, 1)
        else:
            out[i - 1], out[i] = free_op(b, a, -1), a
    return tuple(out)


def fundamental_pointed_rack(word: BraidWord) -> FundamentalPointedRack:
    top = tuple(generator(i) for i in range(1, word.strands + 1))
    return FundamentalPointedRack(word.strands, top, propagate_symbolic(top, word))


def evaluate(el: FreeRackElement, rack: FiniteRack, assignment: Sequence[int]) -> int:
    """Image of ``el`` under the rack homomorphism sending generator ``i`` to
    ``assignment[i-1]``.

    The conjugator letters act one at a time from the left: each ``g^{+-1}``
    applies ``|>^{+-1} assignment[g]``.
    """
    n = len(assignment)
    for g in (el.base,) + el.conjugator:
        if not 1 <= abs(g) <= n:
            raise AssignmentLengthMismatch(
                f"element uses generator {abs(g)} but only {n} colors were assigned")
    c = assignment[el.base - 1]
    for g in el.conjugator:
        y = assignment[abs(g) - 1]
        c = rack.op(c, y) if g > 0 else rack.inv(c, y)
    return c


def evaluate_bottom(fpr: FundamentalPointedRack, rack: FiniteRack, assignment: Sequence[int]) -> tuple[int, ...]:
    if len(assignment) != fpr.strands:
        raise AssignmentLengthMismatch(f"{len(assignment)} colors for {fpr.strands} generators")
    return tuple(evaluate(b, rack, assignment) for b in fpr.bottom)


def same_bottom_presentation(a: BraidWord, b: BraidWord) -> bool:
    """One-sided equivalence test: ``True`` means the two words act identically
    on colorings by every rack; ``False`` proves nothing about the braids."""
    if a.strands != b.strands:
        raise StrandMismatch(f"{a.strands} vs {b.strands} strands")
    return fundamental_pointed_rack(a).bottom == fundamental_pointed_rack(b).bottom

