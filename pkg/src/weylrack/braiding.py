"""Monomial braidings: racks with cocycle and Yetter-Drinfeld modules over a class.

Scalars are roots of unity stored as exponents modulo ``order``, so every
comparison is exact.  A braiding on a basis of size ``d`` sends each basis
pair ``(i, j)`` to a multiple of a single basis pair, and is stored as two
arrays indexed by ``i * d + j``: the target pair index and the exponent.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Mapping
from dataclasses import dataclass

import numpy as np

from .classes import ConjClass, centralizer
from .core import SignedElem, WeylError, conjugate, identity, inverse, multiply
from .rack import FiniteRack


@dataclass(frozen=True)
class Cocycle:
    """``q(i, j) = exp(2 pi i * exponents[i, j] / order)`` on rack indices."""

    exponents: np.ndarray
    order: int

    @classmethod
    def constant(cls, d: int, exponent: int = 0, order: int = 2) -> Cocycle:
        return cls(np.full((d, d), exponent % order, dtype=np.int64), order)

    @classmethod
    def from_function(cls, rack: FiniteRack, q: Callable, order: int) -> Cocycle:
        d = len(rack)
        exps = np.array([[q(x, y) for y in rack.elements] for x in rack.elements], dtype=np.int64).reshape(d, d)
        return cls(exps % order, order)

    def satisfies_cocycle_condition(self, rack: FiniteRack) -> bool:
        """``q(x, y|>z) q(y, z) == q(x|>y, x|>z) q(x, z)`` on every triple."""
        d = len(rack)
        q = self.exponents
        op = np.array([[rack.op_index(i, j) for j in range(d)] for i in range(d)])
        x, y, z = np.meshgrid(np.arange(d), np.arange(d), np.arange(d), indexing="ij")
        lhs = q[x, op[y, z]] + q[y, z]
        rhs = q[op[x, y], op[x, z]] + q[x, z]
        return bool(np.all((lhs - rhs) % self.order == 0))


@dataclass
class BraidingMatrix:
    d: int
    target: np.ndarray  # (d*d,) pair index hit by each basis pair
    exponent: np.ndarray  # (d*d,) exponent of the scalar on that pair
    order: int

    def is_invertible(self) -> bool:
        return len(np.unique(self.target)) == self.d * self.d

    def to_dense(self) -> np.ndarray:
        """Complex ``d^2 x d^2`` matrix; only for small ``d``."""
        m = np.zeros((self.d * self.d, self.d * self.d), dtype=complex)
        root = np.exp(2j * np.pi / self.order)
        m[self.target, np.arange(self.d * self.d)] = root ** self.exponent
        return m

    def coordinate_lines(self) -> list[str]:
        """One line ``i j value_exponent order`` per nonzero entry (row i, column j)."""
        return [
            f"{int(t)} {col} {int(e) % self.order} {self.order}"
            for col, (t, e) in enumerate(zip(self.target, self.exponent))
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidingMatrix) or self.d != other.d:
            return NotImplemented
        order = np.lcm(self.order, other.order)
        a = self.exponent * (order // self.order)
        b = other.exponent * (order // other.order)
        return bool(np.array_equal(self.target, other.target) and np.all((a - b) % order == 0))


def rack_braiding(rack: FiniteRack, q: Cocycle) -> BraidingMatrix:
    """``c(x (x) y) = q(x, y) (x|>y) (x) x``."""
    d = len(rack)
    if q.exponents.shape != (d, d):
        raise WeylError(f"cocycle has shape {q.exponents.shape}, rack has {d} points")
    target = np.empty(d * d, dtype=np.int64)
    exponent = np.empty(d * d, dtype=np.int64)
    for i in range(d):
        for j in range(d):
            k = rack.op_index(i, j)
            if k < 0:
                raise WeylError("rack is not closed")
            target[i * d + j] = k * d + i
            exponent[i * d + j] = q.exponents[i, j]
    return BraidingMatrix(d, target, exponent % q.order, q.order)


def _apply_left(c: BraidingMatrix, idx, exp):
    d = c.d
    pair, z = np.divmod(idx, d)
    return c.target[pair] * d + z, exp + c.exponent[pair]


def _apply_right(c: BraidingMatrix, idx, exp):
    d2 = c.d * c.d
    x, pair = np.divmod(idx, d2)
    return x * d2 + c.target[pair], exp + c.exponent[pair]


def check_braid_equation(c: BraidingMatrix, chunk: int = 1 << 20) -> bool:
    """``(C(x)I)(I(x)C)(C(x)I) == (I(x)C)(C(x)I)(I(x)C)`` on all basis triples.

    Each side is tracked per basis triple as (image triple, exponent), so no
    ``d^3 x d^3`` matrix is ever built.
    """
    total = c.d**3
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        zero = np.zeros_like(idx)
        l_idx, l_exp = _apply_left(c, *_apply_right(c, *_apply_left(c, idx, zero)))
        r_idx, r_exp = _apply_right(c, *_apply_left(c, *_apply_right(c, idx, zero)))
        if not (np.array_equal(l_idx, r_idx) and np.all((l_exp - r_exp) % c.order == 0)):
            return False
    return True


# -- characters of centralizers ----------------------------------------------


@dataclass(frozen=True)
class Character:
    """A one-dimensional representation of a finite group, as exponents mod ``order``."""

    values: Mapping[SignedElem, int]
    order: int

    def __call__(self, g: SignedElem) -> int:
        try:
            return self.values[g]
        except KeyError:
            raise WeylError("element outside the character's domain") from None

    def is_multiplicative(self) -> bool:
        return all(
            (self.values[multiply(g, h)] - self.values[g] - self.values[h]) % self.order == 0
            for g in self.values
            for h in self.values
        )

    @property
    def is_trivial(self) -> bool:
        return all(v % self.order == 0 for v in self.values.values())


def _generating_set(group: tuple[SignedElem, ...]) -> list[SignedElem]:
    gens: list[SignedElem] = []
    span = {identity(group[0].n)}
    for g in group:
        if g in span:
            continue
        gens.append(g)
        span = _closure(gens, group[0].n)
    return gens


def _closure(gens, n) -> set:
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = multiply(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def z2_characters(group: tuple[SignedElem, ...]) -> list[Character]:
    """Every homomorphism ``group -> Z_2``, trivial one first."""
    gens = _generating_set(group)
    out = []
    for assignment in itertools.product((0, 1), repeat=len(gens)):
        values = {identity(group[0].n): 0}
        frontier = [identity(group[0].n)]
        consistent = True
        while frontier and consistent:
            x = frontier.pop()
            for g, v in zip(gens, assignment):
                y = multiply(x, g)
                val = values[x] ^ v
                if y not in values:
                    values[y] = val
                    frontier.append(y)
                elif values[y] != val:
                    consistent = False
                    break
        if consistent:
            chi = Character(values, 2)
            if chi.is_multiplicative():
                out.append(chi)
    return out


# -- Yetter-Drinfeld braiding ------------------------------------------------


def yd_braiding(c: ConjClass, chi: Character, section=None) -> BraidingMatrix:
    """Braiding of ``M(O, rho)`` for a one-dimensional ``rho = chi`` of the centralizer.

    Basis ``g_i (x) v`` is identified with the class element ``t_i``.  Then
    ``C(t_i, t_j) = chi(nu) (t_j', t_i)`` where ``t_i g_j = g_j' nu`` and
    ``nu = g_j'^-1 t_i g_j`` must centralize the representative.
    """
    section = c.section if section is None else tuple(section)
    d = c.size
    if len(section) != d or any(conjugate(g, c.rep) != t for g, t in zip(section, c.elements)):
        raise WeylError("coset section does not match the class")
    target = np.empty(d * d, dtype=np.int64)
    exponent = np.empty(d * d, dtype=np.int64)
    inv_section = [inverse(g) for g in section]
    for i, ti in enumerate(c.elements):
        for j, tj in enumerate(c.elements):
            jp = c.index(conjugate(ti, tj))
            nu = multiply(inv_section[jp], multiply(ti, section[j]))
            if conjugate(nu, c.rep) != c.rep:
                raise WeylError("nu is not in the centralizer; section inconsistent")
            target[i * d + j] = jp * d + i
            exponent[i * d + j] = chi(nu)
    return BraidingMatrix(d, target, exponent % chi.order, chi.order)


def centralizer_characters(c: ConjClass) -> list[Character]:
    return z2_characters(centralizer(c.rep, c.kind))
