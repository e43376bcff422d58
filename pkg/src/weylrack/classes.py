"""Conjugacy classes by brute force: orbit BFS, centralizers, coset sections."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    GroupKind,
    SignedElem,
    WeylError,
    conjugate,
    default_cap,
    format_cycle_type,
    format_element,
    identity,
    inverse,
    multiply,
    sign_cycle_decompose,
    sort_key,
    splits_in_type_d,
)


class CapExceeded(WeylError):
    pass


def _check_cap(kind: GroupKind, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if kind.n > cap:
        raise CapExceeded(f"rank {kind.n} exceeds the enumeration cap {cap}")


def generators(kind: GroupKind) -> tuple[SignedElem, ...]:
    """Fixed generating set: adjacent transpositions, then one sign generator.

    The order is part of the contract; BFS discovery order and coset
    sections depend on it.
    """
    n = kind.n
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(SignedElem((0,) * n, tuple(p)))
    flip = (1,) + (0,) * (n - 1) if kind.kind == "B" else (1, 1) + (0,) * (n - 2)
    gens.append(SignedElem(flip, tuple(range(n))))
    return tuple(gens)


@lru_cache(maxsize=16)
def _group_elements(kind: GroupKind) -> tuple[SignedElem, ...]:
    n = kind.n
    elems = []
    for sign in itertools.product((0, 1), repeat=n):
        if kind.kind == "D" and sum(sign) % 2:
            continue
        for perm in itertools.permutations(range(n)):
            elems.append(SignedElem(sign, perm))
    elems.sort(key=sort_key)
    return tuple(elems)


def enumerate_group(kind: GroupKind, cap: int | None = None) -> Iterator[SignedElem]:
    """Every element once, in grammar-string order."""
    _check_cap(kind, cap)
    yield from _group_elements(kind)


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class with its BFS numbering and coset section.

    ``elements[0]`` is ``rep`` and ``section[i]`` conjugates ``rep`` onto
    ``elements[i]``.
    """

    kind: GroupKind
    rep: SignedElem
    elements: tuple[SignedElem, ...]
    section: tuple[SignedElem, ...]
    split_tag: str = ""
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.elements)})

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def cycle_type(self):
        return sign_cycle_decompose(self.rep)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x: SignedElem) -> int:
        return self._index[x]

    def coset_rep(self, x: SignedElem) -> SignedElem:
        return self.section[self._index[x]]

    @property
    def label(self) -> str:
        tag = f"[{self.split_tag}]" if self.split_tag else ""
        return f"{self.kind}:{format_element(self.rep)}{tag}"

    def to_json(self) -> dict:
        return {
            "rep": format_element(self.rep),
            "size": self.size,
            "signed_cycle_type": format_cycle_type(self.cycle_type),
            "split_tag": self.split_tag,
        }


def orbit_bfs(x: SignedElem, gens) -> tuple[list[SignedElem], list[SignedElem]]:
    """Orbit of ``x`` under conjugation by ``gens``; returns (orbit, section)."""
    orbit = [x]
    section = [identity(x.n)]
    seen = {x: 0}
    head = 0
    while head < len(orbit):
        y, gy = orbit[head], section[head]
        head += 1
        for g in gens:
            z = conjugate(g, y)
            if z not in seen:
                seen[z] = len(orbit)
                orbit.append(z)
                section.append(multiply(g, gy))
    return orbit, section


def _split_tag(rep: SignedElem, kind: GroupKind, size: int) -> str:
    if kind.kind == "B" or not splits_in_type_d(sign_cycle_decompose(rep)):
        return ""
    bkind = GroupKind("B", kind.n)
    b_orbit, _ = orbit_bfs(rep, generators(bkind))
    if len(b_orbit) == size:
        return ""
    return "a" if rep == min(b_orbit, key=sort_key) else "b"


def class_of(x: SignedElem, kind: GroupKind, cap: int | None = None) -> ConjClass:
    """The class of ``x``, numbered by BFS from its least element."""
    kind.check(x)
    _check_cap(kind, cap)
    gens = generators(kind)
    orbit, _ = orbit_bfs(x, gens)
    rep = min(orbit, key=sort_key)
    orbit, section = orbit_bfs(rep, gens)
    return ConjClass(kind, rep, tuple(orbit), tuple(section), _split_tag(rep, kind, len(orbit)))


def same_class_oracle(x: SignedElem, y: SignedElem, kind: GroupKind) -> bool:
    kind.check(y)
    return y in class_of(x, kind)


def centralizer(x: SignedElem, kind: GroupKind, cap: int | None = None) -> tuple[SignedElem, ...]:
    kind.check(x)
    return tuple(g for g in enumerate_group(kind, cap) if conjugate(g, x) == x)


def all_classes(kind: GroupKind, cap: int | None = None) -> list[ConjClass]:
    """Partition of the group into classes, ordered by representative."""
    _check_cap(kind, cap)
    seen: set[SignedElem] = set()
    out = []
    for x in _group_elements(kind):
        if x in seen:
            continue
        c = class_of(x, kind, cap)
        seen.update(c.elements)
        out.append(c)
    return out


def class_listing(kind: GroupKind, cap: int | None = None) -> dict:
    return {
        "kind": kind.kind,
        "n": kind.n,
        "classes": [c.to_json() for c in all_classes(kind, cap)],
    }


def verify_section(c: ConjClass) -> bool:
    return all(conjugate(g, c.rep) == t for g, t in zip(c.section, c.elements)) and c.section[0] == identity(
        c.kind.n
    )


def conjugator(x: SignedElem, y: SignedElem, kind: GroupKind) -> SignedElem | None:
    """Some ``g`` with ``g |> x == y``, or None."""
    c = class_of(x, kind)
    if y not in c:
        return None
    gx, gy = c.coset_rep(x), c.coset_rep(y)
    return multiply(gy, inverse(gx))
