"""Finite racks, subrack decompositions and type D witnesses."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .classes import ConjClass, class_of
from .core import (
    DimensionError,
    GroupKind,
    SignedElem,
    WeylError,
    act,
    add,
    conjugate,
    format_element,
    perm_compose,
    perm_inverse,
    perm_parity,
    sort_key,
)

TABLE_LIMIT = 4096
SEARCH_BOUND = 20000


class FiniteRack:
    """A finite set with a binary operation ``op(x, y) = x |> y``.

    Below ``table_limit`` points the operation and the inverse translations
    are tabulated by index; above it ``op`` is evaluated on demand.
    """

    def __init__(self, elements: Sequence[Hashable], op: Callable, table_limit: int = TABLE_LIMIT):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise WeylError("rack elements must be distinct")
        self._op = op
        self.table = None
        self.inv_table = None
        if len(self.elements) <= table_limit:
            self.table = [[self.index.get(op(x, y), -1) for y in self.elements] for x in self.elements]
            self.inv_table = []
            for row in self.table:
                inv = [-1] * len(row)
                for j, k in enumerate(row):
                    if k >= 0:
                        inv[k] = j
                self.inv_table.append(inv)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def op(self, x, y):
        if self.table is not None:
            i, j = self.index.get(x), self.index.get(y)
            if i is not None and j is not None and self.table[i][j] >= 0:
                return self.elements[self.table[i][j]]
        return self._op(x, y)

    def op_index(self, i: int, j: int) -> int:
        if self.table is not None:
            return self.table[i][j]
        return self.index.get(self._op(self.elements[i], self.elements[j]), -1)

    def sq(self, x, y):
        return self.op(x, self.op(y, self.op(x, y)))

    def is_closed(self) -> bool:
        d = len(self)
        return all(self.op_index(i, j) >= 0 for i in range(d) for j in range(d))

    def translations_bijective(self) -> bool:
        d = len(self)
        return all(len({self.op_index(i, j) for j in range(d)}) == d for i in range(d))

    def self_distributive(self) -> bool:
        d = len(self)
        op = self.op_index
        for x in range(d):
            for y in range(d):
                xy = op(x, y)
                for z in range(d):
                    if op(x, op(y, z)) != op(xy, op(x, z)):
                        return False
        return True

    def is_rack(self) -> bool:
        return self.is_closed() and self.translations_bijective() and self.self_distributive()


def conj_rack(c: ConjClass, table_limit: int = TABLE_LIMIT) -> FiniteRack:
    return FiniteRack(c.elements, conjugate, table_limit)


def sq(x: SignedElem, y: SignedElem) -> SignedElem:
    """``x |> (y |> (x |> y))`` through three conjugations."""
    return conjugate(x, conjugate(y, conjugate(x, y)))


def sq_closed_form(x: SignedElem, y: SignedElem) -> SignedElem:
    """sq written out in sign/permutation components.

    With ``x = (a, s)``, ``y = (b, t)`` the permutation part is
    ``s t s t s^-1 t^-1 s^-1`` and the sign part is
    ``a + s(b) + st(a) + sts(b) + ststs^-1(a) + ststs^-1t^-1(b) + ststs^-1t^-1s^-1(a)``.
    """
    a, s = x
    b, t = y
    if len(s) != len(t):
        raise DimensionError("elements of different rank")
    si, ti = perm_inverse(s), perm_inverse(t)
    st = perm_compose(s, t)
    sts = perm_compose(st, s)
    stst = perm_compose(sts, t)
    p1 = perm_compose(stst, si)
    p2 = perm_compose(p1, ti)
    p3 = perm_compose(p2, si)
    sign = add(a, act(s, b), act(st, a), act(sts, b), act(p1, a), act(p2, b), act(p3, a))
    return SignedElem(sign, p3)


def is_subrack(subset: Iterable, rack: FiniteRack) -> bool:
    xs = set(subset)
    return all(rack.op(x, y) in xs for x in xs for y in xs)


@dataclass(frozen=True)
class DecompositionVerdict:
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def check_decomposition(R: Iterable, S: Iterable, rack: FiniteRack) -> DecompositionVerdict:
    """Check that ``R`` and ``S`` are disjoint nonempty subracks with the cross rule.

    ``R | S`` is closed whenever both parts are and the cross rule holds, so the
    union is not checked separately.
    """
    R, S = set(R), set(S)
    failures = []
    if not R or not S:
        failures.append("nonempty")
    if R & S:
        failures.append("disjoint")
    if not is_subrack(R, rack):
        failures.append("subrack_R")
    if not is_subrack(S, rack):
        failures.append("subrack_S")
    if not all(rack.op(x, y) in S and rack.op(y, x) in R for x in R for y in S):
        failures.append("cross")
    return DecompositionVerdict(tuple(failures))


@dataclass(frozen=True)
class DecompWitness:
    """Sets R, S and a pair (sigma, tau) certifying type D for the class of ``class_rep``."""

    kind: GroupKind
    class_rep: SignedElem
    R: tuple[SignedElem, ...]
    S: tuple[SignedElem, ...]
    sigma: SignedElem
    tau: SignedElem
    source: str = "search"

    def __post_init__(self):
        object.__setattr__(self, "R", tuple(sorted(set(self.R), key=sort_key)))
        object.__setattr__(self, "S", tuple(sorted(set(self.S), key=sort_key)))

    def conjugated(self, g: SignedElem, class_rep: SignedElem | None = None) -> DecompWitness:
        """Transport every element along ``x -> g |> x``."""
        return DecompWitness(
            self.kind,
            class_rep if class_rep is not None else conjugate(g, self.class_rep),
            tuple(conjugate(g, x) for x in self.R),
            tuple(conjugate(g, x) for x in self.S),
            conjugate(g, self.sigma),
            conjugate(g, self.tau),
            self.source,
        )

    def to_json(self, checks: dict | None = None) -> dict:
        out = {
            "kind": self.kind.kind,
            "n": self.kind.n,
            "class_rep": format_element(self.class_rep),
            "R": [format_element(x) for x in self.R],
            "S": [format_element(x) for x in self.S],
            "sigma": format_element(self.sigma),
            "tau": format_element(self.tau),
            "sq_value": format_element(sq(self.sigma, self.tau)),
            "source": self.source,
        }
        if checks is not None:
            out["checks"] = checks
        return out


@dataclass(frozen=True)
class TypeDVerdict:
    clauses: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.clauses.items() if not v]

    def __bool__(self):
        return self.ok


def check_type_d(w: DecompWitness, rack: FiniteRack | None = None) -> TypeDVerdict:
    """Re-verify a witness from scratch.

    Clauses: ``placement`` (sigma in R, tau in S), the decomposition clauses,
    ``sq`` (sq(sigma, tau) != tau) and ``membership`` (every point of R | S is
    in the class of ``class_rep``, recomputed by orbit BFS, not read from
    ``rack``).
    """
    if rack is None:
        rack = FiniteRack((), conjugate)
    klass = class_of(w.class_rep, w.kind)
    decomp = check_decomposition(w.R, w.S, rack)
    outside = [x for x in w.R + w.S if x not in klass]
    clauses = {
        "placement": w.sigma in w.R and w.tau in w.S,
        "nonempty": "nonempty" not in decomp.failures,
        "disjoint": "disjoint" not in decomp.failures,
        "subrack_R": "subrack_R" not in decomp.failures,
        "subrack_S": "subrack_S" not in decomp.failures,
        "cross": "cross" not in decomp.failures,
        "sq": rack.sq(w.sigma, w.tau) != w.tau,
        "membership": not outside,
    }
    details = {}
    if outside:
        details["outside_class"] = [format_element(x) for x in outside]
    return TypeDVerdict(clauses, details)


# -- search ------------------------------------------------------------------


def _characters(kind: GroupKind):
    sign_sum = lambda x: sum(x.sign) & 1
    perm_par = lambda x: perm_parity(x.perm)
    chars = [("perm_parity", perm_par)]
    if kind.kind == "B":
        chars.insert(0, ("sign_sum", sign_sum))
        chars.append(("product", lambda x: sign_sum(x) ^ perm_par(x)))
    return chars


def generated_subrack(seeds: Sequence[SignedElem]) -> tuple[list[SignedElem], list[set]]:
    """Closure of ``seeds`` under conjugation, split into orbits of the generated group.

    Orbits are returned in seed order; a seed already covered by an earlier
    orbit does not start a new one.
    """
    orbits: list[set] = []
    for s in seeds:
        if any(s in o for o in orbits):
            continue
        seen = {s}
        frontier = [s]
        while frontier:
            y = frontier.pop()
            for g in seeds:
                z = conjugate(g, y)
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
        orbits.append(seen)
    points = sorted(set().union(*orbits), key=sort_key)
    return points, orbits


def _character_split(c: ConjClass, rack: FiniteRack) -> DecompWitness | None:
    for _name, chi in _characters(c.kind):
        R = [x for x in c.elements if chi(x) == 0]
        S = [x for x in c.elements if chi(x) == 1]
        if not R or not S:
            # characters are class functions, so this is the usual outcome
            continue
        for x in sorted(R, key=sort_key):
            for y in sorted(S, key=sort_key):
                if rack.sq(x, y) != y:
                    return DecompWitness(c.kind, c.rep, R, S, x, y, "search:character")
    return None


def _subrack_growth(c: ConjClass, rack: FiniteRack) -> DecompWitness | None:
    # Any witness pair can be conjugated so that sigma is the representative,
    # so scanning tau over the class with sigma = rep finds the least pair.
    r = c.rep
    for s in sorted(c.elements, key=sort_key):
        if rack.sq(r, s) == s:
            continue
        _points, orbits = generated_subrack((r, s))
        if len(orbits) == 2:
            return DecompWitness(c.kind, c.rep, orbits[0], orbits[1], r, s, "search:subrack")
    return None


def search_type_d(c: ConjClass, bound: int = SEARCH_BOUND) -> DecompWitness | None:
    """Look for a type D witness inside the class ``c``.

    First the class is split by the Z_2-valued characters of the group; then
    for each tau the subrack generated by (rep, tau) is grown and tested for a
    second orbit.  The second stage is exhaustive: None means the class is not
    of type D.
    """
    if c.size > bound:
        raise WeylError(f"class of size {c.size} exceeds the search bound {bound}")
    if c.size < 2:
        return None
    rack = conj_rack(c)
    return _character_split(c, rack) or _subrack_growth(c, rack)
