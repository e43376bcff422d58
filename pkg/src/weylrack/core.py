"""Signed permutations: the groups W(B_n) = Z_2^n x| S_n and W(D_n) = K_n x| S_n.

Elements are pairs ``(sign, perm)``.  ``perm`` is stored 0-based in one-line
notation (``perm[i]`` is the image of ``i``); everything facing the user is
1-based.  Sign vectors live in Z_2, so every ``-`` in the usual semidirect
product formulas becomes ``+`` (xor).
"""

from __future__ import annotations

import enum
import os
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

Perm = tuple  # tuple[int, ...], 0-based one-line notation
SignVec = tuple  # tuple[int, ...], entries in {0, 1}
SignedCycleType = tuple  # tuple[tuple[int, int], ...], descending


class WeylError(ValueError):
    """Base class for invalid input to the group routines."""


class DimensionError(WeylError):
    pass


class NotInGroupError(WeylError):
    pass


class ParseError(WeylError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class SignedElem(NamedTuple):
    sign: SignVec
    perm: Perm

    @property
    def n(self) -> int:
        return len(self.perm)

    def __str__(self) -> str:
        return format_element(self)


@dataclass(frozen=True)
class GroupKind:
    """Which group we work in: ``kind`` is ``"B"`` (all sign vectors) or ``"D"`` (even ones)."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("B", "D"):
            raise WeylError(f"unknown group kind {self.kind!r}")
        if self.n < 2:
            raise WeylError("rank must be at least 2")

    @property
    def order(self) -> int:
        fact = 1
        for i in range(2, self.n + 1):
            fact *= i
        return fact * 2 ** (self.n if self.kind == "B" else self.n - 1)

    @property
    def small_rank_warning(self) -> bool:
        # K_n x| S_n is only the Weyl group of type D for n > 3.
        return self.kind == "D" and self.n <= 3

    def contains(self, x: SignedElem) -> bool:
        if x.n != self.n:
            return False
        return self.kind == "B" or sum(x.sign) % 2 == 0

    def check(self, x: SignedElem) -> None:
        if x.n != self.n:
            raise DimensionError(f"element of rank {x.n} is not in {self}")
        if not self.contains(x):
            raise NotInGroupError(f"{format_element(x)} has odd sign sum, not in {self}")

    def __str__(self) -> str:
        return f"W({self.kind}{self.n})"


# -- permutations ------------------------------------------------------------


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(s: Perm, t: Perm) -> Perm:
    """``s * t``: apply ``t`` first."""
    if len(s) != len(t):
        raise DimensionError("permutations of different degree")
    return tuple(s[j] for j in t)


def perm_inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for i, si in enumerate(s):
        inv[si] = i
    return tuple(inv)


def perm_cycles(s: Perm) -> list[tuple[int, ...]]:
    """All cycles of ``s`` including fixed points, 0-based, each starting at its least point."""
    seen = [False] * len(s)
    cycles = []
    for i in range(len(s)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = s[j]
        cycles.append(tuple(cyc))
    return cycles


def perm_parity(s: Perm) -> int:
    return sum(len(c) - 1 for c in perm_cycles(s)) % 2


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    """Build a permutation of degree ``n`` from 1-based disjoint cycles."""
    images = list(range(n))
    used = set()
    for cyc in cycles:
        for k, p in enumerate(cyc):
            if not 1 <= p <= n:
                raise WeylError(f"point {p} out of range 1..{n}")
            if p in used:
                raise WeylError(f"point {p} appears twice")
            used.add(p)
            images[p - 1] = cyc[(k + 1) % len(cyc)] - 1
    return tuple(images)


def check_perm(s: Sequence[int]) -> None:
    if sorted(s) != list(range(len(s))):
        raise WeylError(f"not a permutation: {tuple(s)}")


# -- group law ---------------------------------------------------------------


def act(s: Perm, a: SignVec) -> SignVec:
    """Permute coordinates: ``act(s, a)[i] == a[s^-1(i)]``."""
    if len(s) != len(a):
        raise DimensionError("permutation and sign vector differ in dimension")
    out = [0] * len(a)
    for i, si in enumerate(s):
        out[si] = a[i]
    return tuple(out)


def add(*vecs: SignVec) -> SignVec:
    return tuple(sum(col) & 1 for col in zip(*vecs, strict=True))


def identity(n: int) -> SignedElem:
    return SignedElem((0,) * n, tuple(range(n)))


def is_identity(x: SignedElem) -> bool:
    return not any(x.sign) and x.perm == tuple(range(x.n))


def multiply(x: SignedElem, y: SignedElem) -> SignedElem:
    """``(a, s)(b, t) = (a + s(b), s t)``."""
    a, s = x
    b, t = y
    if len(s) != len(t):
        raise DimensionError("elements of different rank")
    sb = [0] * len(s)
    for i, si in enumerate(s):
        sb[si] = b[i]
    return SignedElem(tuple(p ^ q for p, q in zip(a, sb)), tuple(s[j] for j in t))


def inverse(x: SignedElem) -> SignedElem:
    """``(a, s)^-1 = (s^-1(a), s^-1)``; the sign in front of it vanishes mod 2."""
    a, s = x
    si = perm_inverse(s)
    return SignedElem(act(si, a), si)


def conjugate(g: SignedElem, x: SignedElem) -> SignedElem:
    """``g |> x = g x g^-1`` evaluated by the closed formula.

    For ``g = (b, t)`` and ``x = (a, s)`` this is ``(b + t(a) + tst^-1(b), tst^-1)``.
    """
    b, t = g
    a, s = x
    if len(s) != len(t):
        raise DimensionError("elements of different rank")
    # tst^-1 maps t(i) -> t(s(i))
    c = [0] * len(s)
    for i, si in enumerate(s):
        c[t[i]] = t[si]
    c = tuple(c)
    ta = act(t, a)
    cb = act(c, b)
    return SignedElem(tuple(p ^ q ^ r for p, q, r in zip(b, ta, cb)), c)


def power(x: SignedElem, k: int) -> SignedElem:
    out = identity(x.n)
    if k < 0:
        x, k = inverse(x), -k
    for _ in range(k):
        out = multiply(out, x)
    return out


# -- conjugacy invariants ----------------------------------------------------


def sign_cycle_decompose(x: SignedElem) -> SignedCycleType:
    """Multiset of (cycle length, sign parity over the cycle), descending."""
    return tuple(
        sorted(((len(c), sum(x.sign[i] for i in c) & 1) for c in perm_cycles(x.perm)), reverse=True)
    )


def format_cycle_type(t: SignedCycleType) -> str:
    return "{" + ",".join(f"({length},{parity})" for length, parity in t) + "}"


def splits_in_type_d(t: SignedCycleType) -> bool:
    """True when the type has only even, positive cycles (the only types whose class may split)."""
    return all(length % 2 == 0 and parity == 0 for length, parity in t)


class ClassVerdict(enum.Enum):
    YES = "yes"
    NO = "no"
    NEEDS_ORACLE = "needs-oracle"


def same_class_fast(x: SignedElem, y: SignedElem, kind: GroupKind) -> ClassVerdict:
    kind.check(x)
    kind.check(y)
    tx, ty = sign_cycle_decompose(x), sign_cycle_decompose(y)
    if tx != ty:
        return ClassVerdict.NO
    if x == y or kind.kind == "B" or not splits_in_type_d(tx):
        return ClassVerdict.YES
    return ClassVerdict.NEEDS_ORACLE


# -- element grammar ---------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def format_perm(s: Perm) -> str:
    cycles = [c for c in perm_cycles(s) if len(c) > 1]
    if not cycles:
        return "id"
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)


def format_element(x: SignedElem) -> str:
    return "".join(map(str, x.sign)) + ";" + format_perm(x.perm)


def parse_perm(text: str, n: int, offset: int = 0) -> Perm:
    stripped = text.strip()
    if stripped == "id":
        return tuple(range(n))
    pos = 0
    cycles = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(text, pos)
        if not m:
            raise ParseError("expected '(' starting a cycle", text, offset + pos)
        body = m.group(1).split()
        if not body:
            raise ParseError("empty cycle", text, offset + pos)
        try:
            cycles.append([int(tok) for tok in body])
        except ValueError:
            raise ParseError("non-integer point in cycle", text, offset + pos) from None
        pos = m.end()
    if not cycles:
        raise ParseError("missing permutation", text, offset)
    try:
        return perm_from_cycles(cycles, n)
    except WeylError as exc:
        raise ParseError(str(exc), text, offset) from None


def parse_element(text: str) -> SignedElem:
    """Parse ``<bits>;<cycles>``, e.g. ``10001;(1 2 3)(4 5)``."""
    if ";" not in text:
        raise ParseError("missing ';' between sign bits and permutation", text, len(text))
    bits, _, cycles = text.partition(";")
    for i, ch in enumerate(bits):
        if ch not in "01":
            raise ParseError("sign bits must be 0 or 1", text, i)
    if len(bits) < 2:
        raise ParseError("rank must be at least 2", text, 0)
    n = len(bits)
    return SignedElem(tuple(int(ch) for ch in bits), parse_perm(cycles, n, len(bits) + 1))


def element(bits: str | Sequence[int], *cycles: Sequence[int]) -> SignedElem:
    """Convenience constructor: ``element("10000", (1, 2, 3), (4, 5))``."""
    sign = tuple(int(c) for c in bits)
    return SignedElem(sign, perm_from_cycles(cycles, len(sign)))


def sort_key(x: SignedElem) -> str:
    """Deterministic element order: lexicographic on the grammar string."""
    return format_element(x)


def default_cap() -> int:
    return int(os.environ.get("WEYLRACK_CAP", "7"))
