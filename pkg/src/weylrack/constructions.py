"""Explicit R/S families, sq fixed-point criteria and the class classifier."""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass

from .classes import ConjClass, conjugator
from .core import (
    GroupKind,
    SignedElem,
    WeylError,
    act,
    add,
    element,
    perm_compose,
    perm_cycles,
)
from .rack import DecompWitness, check_type_d, conj_rack, search_type_d

# -- cycle types of permutations ---------------------------------------------


@dataclass(frozen=True)
class PermType:
    """Cycle type as multiplicities: ``mult[k-1]`` cycles of length ``k``."""

    mult: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum((k + 1) * m for k, m in enumerate(self.mult))

    @classmethod
    def of(cls, perm) -> PermType:
        mult = [0] * len(perm)
        for c in perm_cycles(perm):
            mult[len(c) - 1] += 1
        return cls(tuple(mult))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> PermType:
        """Parse ``(1^2,3)``-style notation, padding to degree ``n``."""
        body = text.strip().strip("()")
        parts = {}
        for tok in body.split(","):
            m = re.fullmatch(r"\s*(\d+)(?:\^\{?(\d+)\}?)?\s*", tok)
            if not m:
                raise WeylError(f"bad cycle type {text!r}")
            k, e = int(m.group(1)), int(m.group(2) or 1)
            parts[k] = parts.get(k, 0) + e
        total = sum(k * e for k, e in parts.items())
        n = total if n is None else n
        if total != n:
            raise WeylError(f"cycle type {text!r} has weight {total}, expected {n}")
        return cls(tuple(parts.get(k, 0) for k in range(1, n + 1)))

    def __str__(self) -> str:
        parts = []
        for k, m in enumerate(self.mult, start=1):
            if m == 1:
                parts.append(str(k))
            elif m > 1:
                parts.append(f"{k}^{m}")
        return "(" + ",".join(parts) + ")"


@dataclass(frozen=True)
class ExceptionEntry:
    item: str
    pattern: str
    condition: str = ""
    min_n: int = 5

    def matches(self, ptype: PermType) -> bool:
        n = ptype.n
        if n < self.min_n:
            return False
        pattern = self.pattern.replace("n-2", str(n - 2)).replace("n-3", str(n - 3))
        try:
            return PermType.parse(pattern, n) == ptype
        except WeylError:
            return False


# Types left open (possibly finite-dimensional) by the two published
# classifications for n >= 5.  Conditions are stored verbatim, never evaluated.
EXCEPTIONS_BN = (
    ExceptionEntry("i", "(2,3)"),
    ExceptionEntry("i", "(2^3)"),
    ExceptionEntry("ii", "(2^4)"),
    ExceptionEntry("ii", "(1,2^2)"),
    ExceptionEntry("ii", "(1^2,3)"),
    ExceptionEntry("ii", "(1^2,2^2)"),
    ExceptionEntry("iii", "(1^{n-2},2)", "(n > 5) with a_i = a_j when tau(i) = i and tau(j) = j"),
    ExceptionEntry("iii", "(1^{n-3},3)", "(n > 5) with a_i = a_j when tau(i) = i and tau(j) = j"),
)

EXCEPTIONS_REFINED = (
    ExceptionEntry("i", "(2,3)"),
    ExceptionEntry("ii", "(1^2,3)"),
    ExceptionEntry("iii", "(1^{n-2},2)", "for n > 5 with a_i = a_j when sigma(i) = i and sigma(j) = j", 6),
)


def listed_exception(ptype: PermType, table=EXCEPTIONS_REFINED) -> ExceptionEntry | None:
    return next((e for e in table if e.matches(ptype)), None)


# -- sq fixed-point criteria -------------------------------------------------


def fixes_sq_3cycle(a: Sequence[int], b: Sequence[int], s) -> bool:
    """For ``s`` a single 3-cycle: ``s(a) + s^2(a) == s(b) + s^2(b)``.

    Equivalent to ``sq(as, bs) == bs``.
    """
    if sorted(len(c) for c in perm_cycles(s) if len(c) > 1) != [3]:
        raise WeylError("permutation is not a single 3-cycle")
    s2 = perm_compose(s, s)
    return add(act(s, a), act(s2, a)) == add(act(s, b), act(s2, b))


def three_cycle_sums(a: Sequence[int]) -> tuple[int, int, int]:
    """Coordinates 1-3 of ``s(a) + s^2(a)`` for ``s = (1 2 3)``: ``(a2+a3, a1+a3, a1+a2)``."""
    return ((a[1] + a[2]) % 2, (a[0] + a[2]) % 2, (a[0] + a[1]) % 2)


def fixes_sq_2_3(a: Sequence[int], b: Sequence[int], t, m) -> bool:
    """For ``s = t m`` with ``t`` a transposition and ``m`` a disjoint 3-cycle in S_5:
    ``a + t(a) + tm(a) + m^2(a) == b + t(b) + tm(b) + m^2(b)``.

    Equivalent to ``sq(as, bs) == bs``.
    """
    if len(t) != 5 or len(m) != 5:
        raise WeylError("criterion is stated for S_5")
    tc = [c for c in perm_cycles(t) if len(c) > 1]
    mc = [c for c in perm_cycles(m) if len(c) > 1]
    if [len(c) for c in tc] != [2] or [len(c) for c in mc] != [3] or set(tc[0]) & set(mc[0]):
        raise WeylError("need a transposition and a disjoint 3-cycle")
    tm = perm_compose(t, m)
    m2 = perm_compose(m, m)

    def lhs(v):
        return add(v, act(t, v), act(tm, v), act(m2, v))

    return lhs(a) == lhs(b)


# -- the printed families ----------------------------------------------------

S3_TRANSPOSITIONS = ((1, 2), (1, 3), (2, 3))
S4_FOUR_CYCLES = ((1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 2, 4), (1, 3, 4, 2), (1, 4, 2, 3), (1, 4, 3, 2))

CITE_TRANSPOSITION = "type D: sigma of type (1^{n-2},2), n > 3"
CITE_3CYCLE_N5 = "type D: sigma of type (1^2,3) in W_5"
CITE_3CYCLE_N4 = "type D: sigma of type (1,3) in W_4"
CITE_4CYCLE = "type D: sigma of type (4) in W(D_4)"
CITE_2_3 = "type D: sigma of type (2,3) in W_5"
CITE_SWEEP = "type D for every class with sigma != 1, n >= 5"
CITE_NICHOLS = "dim B(O, rho) = infinity for every rho (type D criterion, cited)"


def _family(signs: Sequence[str], cycles) -> tuple[SignedElem, ...]:
    return tuple(element(bits, *cyc) for bits in signs for cyc in cycles)


def _require_feasible(kind: GroupKind, parity: int) -> None:
    if parity not in (0, 1):
        raise WeylError("parity must be 0 or 1")
    if kind.kind == "D" and parity:
        raise WeylError("odd sign sum is impossible in type D")


def build_witness_1n2_2(kind: GroupKind, n: int | None = None, parity: int = 0) -> DecompWitness:
    """R, S over the three transpositions of {1,2,3}, with near-constant sign vectors."""
    n = kind.n if n is None else n
    if n <= 3:
        raise WeylError("family needs n > 3")
    kind = GroupKind(kind.kind, n)
    _require_feasible(kind, parity)
    zeros, ones = "0" * n, "1" * n
    if parity == 0:
        vr, vs = zeros, ones if n % 2 == 0 else ones[:-1] + "0"
    else:
        vr = zeros[:-1] + "1"
        vs = ones[:-1] + "0" if n % 2 == 0 else ones
    R = _family([vr], [[c] for c in S3_TRANSPOSITIONS])
    S = _family([vs], [[c] for c in S3_TRANSPOSITIONS])
    sigma, tau = element(vr, (1, 2)), element(vs, (1, 3))
    return DecompWitness(kind, sigma, R, S, sigma, tau, CITE_TRANSPOSITION)


_R_12_3 = ("00000", "11000", "10100", "01100")
_S_12_3 = ("10001", "01001", "00101", "11101")
_R_12_3_ODD = ("00001", "11001", "10101", "01101")
_S_12_3_ODD = ("10000", "01000", "00100", "11100")


def build_witness_12_3(kind: GroupKind, parity: int = 0) -> DecompWitness:
    """The 4 + 4 family for sigma = (1 2 3) in W_5."""
    kind = GroupKind(kind.kind, 5)
    _require_feasible(kind, parity)
    rs, ss = (_R_12_3, _S_12_3) if parity == 0 else (_R_12_3_ODD, _S_12_3_ODD)
    a, b = ("11000", "10001") if parity == 0 else ("11001", "10000")
    R = _family(rs, [[(1, 2, 3)]])
    S = _family(ss, [[(1, 2, 3)]])
    sigma, tau = element(a, (1, 2, 3)), element(b, (1, 2, 3))
    return DecompWitness(kind, sigma, R, S, sigma, tau, CITE_3CYCLE_N5)


def build_witness_1_3(parity: int = 0, kind: GroupKind | None = None) -> DecompWitness:
    """The 4 + 4 family for sigma = (1 2 3) in W_4."""
    kind = GroupKind("B" if kind is None else kind.kind, 4)
    _require_feasible(kind, parity)
    if parity == 0:
        rs, ss = ("0000", "1100", "1010", "0110"), ("1001", "0101", "0011", "1111")
        a, b = "1100", "1001"
    else:
        rs, ss = ("0001", "1101", "1011", "0111"), ("1000", "0100", "0010", "1110")
        a, b = "1101", "1000"
    R = _family(rs, [[(1, 2, 3)]])
    S = _family(ss, [[(1, 2, 3)]])
    sigma, tau = element(a, (1, 2, 3)), element(b, (1, 2, 3))
    return DecompWitness(kind, sigma, R, S, sigma, tau, CITE_3CYCLE_N4)


def build_witness_4_cycle() -> DecompWitness:
    """All six 4-cycles of S_4 with signs all 0 (R) and all 1 (S), in W(D_4)."""
    kind = GroupKind("D", 4)
    R = _family(["0000"], [[c] for c in S4_FOUR_CYCLES])
    S = _family(["1111"], [[c] for c in S4_FOUR_CYCLES])
    sigma, tau = element("0000", (1, 2, 3, 4)), element("1111", (1, 2, 4, 3))
    return DecompWitness(kind, sigma, R, S, sigma, tau, CITE_4CYCLE)


_R_2_3 = ("00000", "11000", "10100", "01100", "00011", "11011", "10111", "01111")
_S_2_3 = ("10001", "01001", "00101", "11101", "10010", "01010", "00110", "11110")
_R_2_3_ODD = ("00001", "11001", "10101", "01101", "00010", "11010", "10110", "01110")
_S_2_3_ODD = ("10000", "01000", "00100", "11100", "10011", "01011", "00111", "11111")


def build_witness_2_3(kind: GroupKind, parity: int = 0) -> DecompWitness:
    """The 8 + 8 family for sigma = (1 2 3)(4 5) in W_5."""
    kind = GroupKind(kind.kind, 5)
    _require_feasible(kind, parity)
    rs, ss = (_R_2_3, _S_2_3) if parity == 0 else (_R_2_3_ODD, _S_2_3_ODD)
    a, b = ("11000", "10001") if parity == 0 else ("11001", "10000")
    cyc = [[(1, 2, 3), (4, 5)]]
    R = _family(rs, cyc)
    S = _family(ss, cyc)
    sigma, tau = element(a, (1, 2, 3), (4, 5)), element(b, (1, 2, 3), (4, 5))
    return DecompWitness(kind, sigma, R, S, sigma, tau, CITE_2_3)


def conjugation_components_12_3(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Sign part of ``(a, (1 2 3)) |> (b, (1 2 3))`` written out coordinate by coordinate."""
    return (
        (a[0] + a[2] + b[2]) % 2,
        (a[0] + a[1] + b[0]) % 2,
        (a[1] + a[2] + b[1]) % 2,
        b[3],
        b[4],
    )


def conjugation_components_2_3(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Sign part of ``(a, s) |> (b, s)`` for ``s = (1 2 3)(4 5)``."""
    return (
        (a[0] + a[2] + b[2]) % 2,
        (a[0] + a[1] + b[0]) % 2,
        (a[1] + a[2] + b[1]) % 2,
        (a[3] + a[4] + b[4]) % 2,
        (a[3] + a[4] + b[3]) % 2,
    )


# -- classification ----------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    klass: ConjClass
    verdict: str  # type-D-certified | sigma-trivial | out-of-paper-scope | not-type-D
    witness: DecompWitness | None = None
    citation: str = ""
    constructor: str = ""
    constructor_failures: tuple[str, ...] = ()

    @property
    def certified(self) -> bool:
        return self.verdict == "type-D-certified"

    def to_json(self) -> dict:
        out = {
            "class": self.klass.to_json() | {"kind": self.klass.kind.kind, "n": self.klass.kind.n},
            "verdict": self.verdict,
            "citation": self.citation,
        }
        if self.constructor:
            out["constructor"] = {"name": self.constructor, "failed_clauses": list(self.constructor_failures)}
        if self.witness is not None:
            out["witness"] = self.witness.to_json(check_type_d(self.witness, conj_rack(self.klass)).clauses)
        if self.certified:
            out["nichols"] = CITE_NICHOLS
        return out


def _constructor_for(c: ConjClass):
    n = c.kind.n
    ptype = PermType.of(c.rep.perm)
    parity = sum(c.rep.sign) % 2
    if ptype == PermType.parse(f"(1^{n - 2},2)", n):
        return "build_witness_1n2_2", lambda: build_witness_1n2_2(c.kind, n, parity)
    if n == 5 and ptype == PermType.parse("(1^2,3)", 5):
        return "build_witness_12_3", lambda: build_witness_12_3(c.kind, parity)
    if n == 5 and ptype == PermType.parse("(2,3)", 5):
        return "build_witness_2_3", lambda: build_witness_2_3(c.kind, parity)
    if n == 4 and ptype == PermType.parse("(1,3)", 4):
        return "build_witness_1_3", lambda: build_witness_1_3(parity, c.kind)
    if n == 4 and c.kind.kind == "D" and ptype == PermType.parse("(4)", 4):
        return "build_witness_4_cycle", build_witness_4_cycle
    return None, None


def transport(w: DecompWitness, c: ConjClass) -> DecompWitness:
    """Move a witness onto the class ``c``.

    If the witness' sigma lies in ``c`` it is conjugated onto ``c.rep``;
    otherwise only the permutation is relabelled, which keeps the signs of
    the printed family and lets the membership check report the mismatch.
    """
    g = conjugator(w.sigma, c.rep, c.kind)
    if g is None:
        g = _relabel(w.sigma.perm, c.rep.perm)
    moved = w.conjugated(g, class_rep=c.rep)
    return DecompWitness(c.kind, c.rep, moved.R, moved.S, moved.sigma, moved.tau, w.source)


def _relabel(src, dst) -> SignedElem:
    """A sign-free permutation carrying the cycles of ``src`` onto those of ``dst``."""
    cs = sorted(perm_cycles(src), key=len, reverse=True)
    cd = sorted(perm_cycles(dst), key=len, reverse=True)
    pi = [0] * len(src)
    for x, y in zip(cs, cd):
        for i, j in zip(x, y):
            pi[i] = j
    return SignedElem((0,) * len(src), tuple(pi))


def classify_class(c: ConjClass, bound: int | None = None) -> Classification:
    n = c.kind.n
    if n < 4:
        raise WeylError("classification needs n >= 4")
    if c.rep.perm == tuple(range(n)):
        return Classification(c, "sigma-trivial", citation="sigma = 1 is excluded")
    name, build = _constructor_for(c)
    failures: tuple[str, ...] = ()
    if build is not None:
        w = transport(build(), c)
        verdict = check_type_d(w, conj_rack(c))
        if verdict.ok:
            return Classification(c, "type-D-certified", w, w.source, name)
        failures = tuple(verdict.failed)
    elif n < 5:
        return Classification(c, "out-of-paper-scope", citation="no statement for this type at n = 4")
    w = search_type_d(c) if bound is None else search_type_d(c, bound)
    citation = CITE_SWEEP if n >= 5 else "exhaustive search"
    if w is not None:
        return Classification(c, "type-D-certified", w, citation, name, failures)
    return Classification(c, "not-type-D", None, citation, name, failures)


def classify_all(kind: GroupKind, classes=None) -> list[Classification]:
    from .classes import all_classes

    return [classify_class(c) for c in (classes if classes is not None else all_classes(kind))]
