"""Brute-force oracles, deliberately independent of the code paths they check."""

import itertools

import numpy as np

from weylrack.core import SignedElem


def signed_matrix(x: SignedElem) -> np.ndarray:
    """(a, s) as the signed permutation matrix diag((-1)^a) P(s), with P(s) e_i = e_s(i)."""
    n = len(x.perm)
    m = np.zeros((n, n), dtype=int)
    for i, si in enumerate(x.perm):
        m[si, i] = 1
    return np.diag([(-1) ** a for a in x.sign]) @ m


def from_matrix(m: np.ndarray) -> SignedElem:
    n = m.shape[0]
    perm = [0] * n
    sign = [0] * n
    for i in range(n):
        row = int(np.flatnonzero(m[:, i])[0])
        perm[i] = row
        sign[row] = 0 if m[row, i] == 1 else 1
    return SignedElem(tuple(sign), tuple(perm))


def act_by_matrix(perm, a) -> tuple:
    """Permuted sign vector read off P(s) diag(a) P(s)^-1."""
    x = SignedElem(tuple(a), tuple(range(len(a))))
    p = SignedElem((0,) * len(a), tuple(perm))
    m = signed_matrix(p) @ signed_matrix(x) @ signed_matrix(p).T
    return from_matrix(m).sign


def all_elements(n, kind="B"):
    for sign in itertools.product((0, 1), repeat=n):
        if kind == "D" and sum(sign) % 2:
            continue
        for perm in itertools.permutations(range(n)):
            yield SignedElem(sign, perm)


def mat_mul(x, y):
    return from_matrix(signed_matrix(x) @ signed_matrix(y))


def mat_conj(g, x):
    mg = signed_matrix(g)
    return from_matrix(mg @ signed_matrix(x) @ mg.T)


def brute_orbit(x, n, kind="B"):
    """Conjugacy class by conjugating with every group element (matrix arithmetic)."""
    mx = signed_matrix(x)
    out = set()
    for g in all_elements(n, kind):
        mg = signed_matrix(g)
        out.add(from_matrix(mg @ mx @ mg.T))
    return out


def partitions(k):
    """Number of integer partitions of k by explicit enumeration."""

    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, largest), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail

    return sum(1 for _ in gen(k, k))


def bipartition_count(n):
    return sum(partitions(k) * partitions(n - k) for k in range(n + 1))


def dense_braid_ok(c) -> bool:
    """Braid equation with explicit Kronecker products; only for tiny d."""
    m = c.to_dense()
    eye = np.eye(c.d)
    left = np.kron(m, eye)
    right = np.kron(eye, m)
    return np.allclose(left @ right @ left, right @ left @ right)


def subgroup_closure(gens):
    """Subgroup generated by ``gens`` using matrix products."""
    mats = [signed_matrix(g) for g in gens]
    n = mats[0].shape[0]
    seen = {np.eye(n, dtype=int).tobytes(): np.eye(n, dtype=int)}
    frontier = list(seen.values())
    while frontier:
        m = frontier.pop()
        for g in mats:
            p = m @ g
            key = p.tobytes()
            if key not in seen:
                seen[key] = p
                frontier.append(p)
    return [from_matrix(m) for m in seen.values()]


def is_type_d_by_subgroups(class_elements) -> bool:
    """Type D iff some pair r, s has sq(r, s) != s and s not conjugate to r inside <r, s>.

    sq(r, s) != s is tested as (rs)^2 != (sr)^2 on matrices.
    """
    r = min(class_elements, key=lambda x: (x.sign, x.perm))
    mr = signed_matrix(r)
    for s in class_elements:
        ms = signed_matrix(s)
        if np.array_equal((mr @ ms) @ (mr @ ms), (ms @ mr) @ (ms @ mr)):
            continue
        h = subgroup_closure([r, s])
        if all(mat_conj(g, r) != s for g in h):
            return True
    return False


def type_d_by_subsets(class_elements, op, sq) -> bool:
    """Definition-level search: try every assignment of points to R, S or neither."""
    pts = list(class_elements)
    for labels in itertools.product((0, 1, 2), repeat=len(pts)):
        R = {p for p, lab in zip(pts, labels) if lab == 1}
        S = {p for p, lab in zip(pts, labels) if lab == 2}
        if not R or not S:
            continue
        if not all(op(x, y) in R for x in R for y in R):
            continue
        if not all(op(x, y) in S for x in S for y in S):
            continue
        if not all(op(x, y) in S and op(y, x) in R for x in R for y in S):
            continue
        if any(sq(x, y) != y for x in R for y in S):
            return True
    return False
