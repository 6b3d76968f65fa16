"""Fully enumerated finite groups: classes, characters, blocks and weights.

A :class:`GroupTable` stores the complete multiplication table of a group
given by matrix or permutation generators.  Everything else is derived from
that table, so the engine is only meant for groups of a few thousand
elements.

Character tables are computed with the Dixon-Schneider method over a prime
field ``F_P`` with ``P = 1 (mod e)``, ``e`` the exponent of the group, and the
values are lifted to exact elements of ``Z[zeta_e]``, stored as integer
coefficient vectors in the power basis ``1, zeta_e, ..., zeta_e^{phi(e)-1}``.
Blocks come from reducing central characters along a ring map
``Z[zeta_e] -> F_{ell^m}``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, isqrt
from typing import Callable, Iterable, Sequence

import numpy as np

from .gf import FieldCtx, field as gf_field, is_prime, prime_factors


class GroupError(ValueError):
    """A request that does not make sense for the given group or subgroup."""


class GroupOverflow(RuntimeError):
    """Enumeration exceeded its element budget."""

    def __init__(self, cap: int, partial: int):
        super().__init__(f"group enumeration exceeded the cap of {cap} elements ({partial} found so far)")
        self.cap = cap
        self.partial = partial


def nu(n: int, ell: int) -> int:
    """ell-adic valuation of a nonzero integer."""
    n = abs(n)
    k = 0
    while n % ell == 0:
        n //= ell
        k += 1
    return k


# ----------------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------------

class GroupTable:
    """A finite group as a complete multiplication table on ``0..n-1``.

    Element 0 is the identity.  ``gens`` lists generator indices and
    ``tree[j] = (parent, s)`` records ``e_j = e_parent * gens[s]`` along the
    breadth-first enumeration, which is what lets maps given on generators
    be extended to the whole group.
    """

    def __init__(self, mult: np.ndarray, gens: Sequence[int], data: np.ndarray | None = None,
                 keys: Sequence[bytes] | None = None, name: str = ""):
        self.mult = np.ascontiguousarray(mult, dtype=np.int32)
        self.n = int(self.mult.shape[0])
        self.gens = tuple(int(g) for g in gens)
        self.data = data
        self.keys = list(keys) if keys is not None else None
        self.name = name
        if self.n and not np.array_equal(self.mult[0], np.arange(self.n)):
            raise GroupError("element 0 must be the identity")

    # -- construction -----------------------------------------------------------
    @classmethod
    def from_mult(cls, mult: np.ndarray, gens: Sequence[int] | None = None, name: str = "") -> "GroupTable":
        g = cls(mult, (), name=name)
        if gens is None:
            gens = generating_set(g, np.arange(g.n))
        g.gens = tuple(int(x) for x in gens)
        return g

    @cached_property
    def index(self) -> dict[bytes, int]:
        if self.keys is None:
            raise GroupError("this table carries no element encodings")
        return {k: i for i, k in enumerate(self.keys)}

    @cached_property
    def tree(self) -> list[tuple[int, int]]:
        parent = [(-1, -1)] * self.n
        seen = np.zeros(self.n, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for si, s in enumerate(self.gens):
                    y = int(self.mult[x, s])
                    if not seen[y]:
                        seen[y] = True
                        parent[y] = (x, si)
                        nxt.append(y)
            frontier = nxt
        if not seen.all():
            raise GroupError("the stored generators do not generate the table")
        return parent

    @cached_property
    def bfs_order(self) -> list[int]:
        depth = {0: 0}
        order = [0]
        for x in order:
            for s in self.gens:
                y = int(self.mult[x, s])
                if y not in depth:
                    depth[y] = depth[x] + 1
                    order.append(y)
        return order

    # -- basic invariants -------------------------------------------------------
    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.mult == 0, axis=1).astype(np.int32)

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.n
        idx = np.arange(n)
        out = np.zeros(n, dtype=np.int64)
        pw = idx.copy()
        k = 1
        while (out == 0).any():
            hit = (pw == 0) & (out == 0)
            out[hit] = k
            pw = self.mult[pw, idx]
            k += 1
            if k > n + 1:
                raise GroupError("element order computation did not terminate")
        return out

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders))

    def power(self, x: int, k: int) -> int:
        k %= int(self.orders[x])
        r, b = 0, int(x)
        while k:
            if k & 1:
                r = int(self.mult[r, b])
            b = int(self.mult[b, b])
            k >>= 1
        return r

    def powers(self, k: int) -> np.ndarray:
        """Vector of ``x^k`` for all x."""
        idx = np.arange(self.n)
        k %= self.exponent
        r = np.zeros(self.n, dtype=np.int64)
        b = idx.copy()
        while k:
            if k & 1:
                r = self.mult[r, b]
            b = self.mult[b, b]
            k >>= 1
        return r

    def conjugates(self, x: int) -> np.ndarray:
        """``g^{-1} x g`` for every g."""
        return self.mult[self.mult[self.inv, x], np.arange(self.n)]

    @cached_property
    def _classes(self) -> tuple[np.ndarray, list[int], list[int]]:
        class_of = np.full(self.n, -1, dtype=np.int64)
        reps, sizes = [], []
        for x in range(self.n):
            if class_of[x] >= 0:
                continue
            members = np.unique(self.conjugates(x))
            class_of[members] = len(reps)
            reps.append(x)
            sizes.append(len(members))
        return class_of, reps, sizes

    @property
    def class_of(self) -> np.ndarray:
        return self._classes[0]

    @property
    def class_reps(self) -> list[int]:
        return self._classes[1]

    @property
    def class_sizes(self) -> list[int]:
        return self._classes[2]

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def class_members(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == c)

    def power_map(self, k: int) -> list[int]:
        pw = self.powers(k)
        return [int(self.class_of[pw[r]]) for r in self.class_reps]

    @cached_property
    def inverse_classes(self) -> list[int]:
        return [int(self.class_of[self.inv[r]]) for r in self.class_reps]

    def ell_regular_classes(self, ell: int) -> list[int]:
        return [c for c, r in enumerate(self.class_reps) if self.orders[r] % ell]

    def verify(self) -> None:
        """Latin-square, identity, inverse and associativity checks."""
        n = self.n
        ar = np.arange(n)
        if not all(np.array_equal(np.sort(self.mult[i]), ar) for i in range(n)):
            raise GroupError("multiplication rows are not permutations")
        if not np.array_equal(self.mult[:, 0], ar):
            raise GroupError("0 is not a right identity")
        if not np.array_equal(self.mult[ar, self.inv], np.zeros(n, dtype=self.mult.dtype)):
            raise GroupError("inverse table is inconsistent")
        for s in self.gens:
            # (x y) s = x (y s) for all x, y: associativity against generators suffices
            if not np.array_equal(self.mult[self.mult, s], self.mult[:, self.mult[:, s]]):
                raise GroupError("multiplication is not associative")


def _enumerate(gens: Sequence[np.ndarray], mul: Callable[[np.ndarray, np.ndarray], np.ndarray],
               identity: np.ndarray, cap: int, name: str) -> GroupTable:
    keyf = lambda a: np.ascontiguousarray(a).tobytes()
    data = [identity]
    keys = [keyf(identity)]
    index = {keys[0]: 0}
    gens_arr = [np.asarray(g) for g in gens]
    gen_idx = []
    right = [[] for _ in gens_arr]  # right[s][i] = index of e_i * s
    frontier = np.asarray([identity])
    frontier_idx = [0]
    while frontier_idx:
        new_data, new_idx = [], []
        for si, g in enumerate(gens_arr):
            prods = mul(frontier, g)
            out = []
            for row in prods:
                k = keyf(row)
                j = index.get(k)
                if j is None:
                    j = len(data)
                    if j >= cap:
                        raise GroupOverflow(cap, j)
                    index[k] = j
                    data.append(row)
                    keys.append(k)
                    new_data.append(row)
                    new_idx.append(j)
                out.append(j)
            right[si].append(np.asarray(out))
        frontier_idx = new_idx
        frontier = np.asarray(new_data) if new_data else frontier[:0]
    n = len(data)
    order_seen = [0]
    # right tables in element order
    R = []
    for si in range(len(gens_arr)):
        R.append(np.concatenate(right[si]) if right[si] else np.zeros(0, dtype=np.int64))
    # the concatenation follows the frontier order, which is the element order
    for si in range(len(gens_arr)):
        if len(R[si]) != n:
            raise AssertionError("right-multiplication table is incomplete")
    gen_idx = [int(R[si][0]) for si in range(len(gens_arr))]
    # BFS tree and multiplication table by columns: e_i e_j = (e_i e_p) s
    parent = [(-1, -1)] * n
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    order = [0]
    for x in order:
        for si in range(len(gens_arr)):
            y = int(R[si][x])
            if not seen[y]:
                seen[y] = True
                parent[y] = (x, si)
                order.append(y)
    mult = np.empty((n, n), dtype=np.int32)
    mult[:, 0] = np.arange(n)
    for j in order[1:]:
        p, si = parent[j]
        mult[:, j] = R[si][mult[:, p]]
    del order_seen
    return GroupTable(mult, gen_idx, data=np.asarray(data), keys=keys, name=name)


def from_permutations(gens: Sequence[Sequence[int]], cap: int = 20000, name: str = "") -> GroupTable:
    """Group generated by permutations given as 0-based image lists.

    Products act on the right: ``x^(g h) = (x^g)^h``.
    """
    if not gens:
        raise GroupError("at least one generator is required")
    deg = len(gens[0])
    perms = [np.asarray(g, dtype=np.int64) for g in gens]
    for p in perms:
        if len(p) != deg or sorted(p.tolist()) != list(range(deg)):
            raise GroupError(f"not a permutation of 0..{deg - 1}: {p.tolist()}")
    return _enumerate(perms, lambda batch, g: g[batch], np.arange(deg, dtype=np.int64), cap, name)


def perm_from_cycles(degree: int, *cycles: Sequence[int]) -> list[int]:
    """Image list of a product of disjoint 1-based cycles."""
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b - 1
    return img


def from_matrices(ctx: FieldCtx, gens: Sequence[np.ndarray], cap: int = 20000, name: str = "") -> GroupTable:
    """Group generated by invertible matrices of field codes over ``ctx``."""
    if not gens:
        raise GroupError("at least one generator is required")
    mats = [np.asarray(g, dtype=np.int64) for g in gens]
    n = mats[0].shape[0]
    return _enumerate(mats, lambda batch, g: ctx.matmul(batch, g), np.eye(n, dtype=np.int64), cap, name)


# ----------------------------------------------------------------------------
# subgroups
# ----------------------------------------------------------------------------

def _as_idx(G: GroupTable, H) -> np.ndarray:
    if isinstance(H, np.ndarray) and H.dtype == bool:
        return np.flatnonzero(H)
    return np.unique(np.asarray(list(H) if not isinstance(H, np.ndarray) else H, dtype=np.int64))


def mask_of(G: GroupTable, H) -> np.ndarray:
    m = np.zeros(G.n, dtype=bool)
    m[_as_idx(G, H)] = True
    return m


def closure(G: GroupTable, gens: Iterable[int]) -> np.ndarray:
    """Sorted indices of the subgroup generated by ``gens``."""
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    seen = np.zeros(G.n, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    if len(gens) == 0:
        return frontier
    while len(frontier):
        prods = np.unique(G.mult[np.ix_(frontier, gens)].ravel())
        new = prods[~seen[prods]]
        seen[new] = True
        frontier = new
    return np.flatnonzero(seen)


def generating_set(G: GroupTable, H) -> list[int]:
    """A small generating set of the subgroup ``H``, chosen greedily by element order."""
    H = _as_idx(G, H)
    target = len(H)
    chosen: list[int] = []
    span = np.zeros(G.n, dtype=bool)
    span[0] = True
    cand = sorted(H.tolist(), key=lambda x: (-int(G.orders[x]), x))
    for x in cand:
        if span[x]:
            continue
        chosen.append(int(x))
        span = mask_of(G, closure(G, chosen))
        if span.sum() == target:
            break
    return chosen


def is_subgroup(G: GroupTable, H) -> bool:
    H = _as_idx(G, H)
    m = mask_of(G, H)
    return bool(m[0] and m[G.mult[np.ix_(H, H)]].all() and m[G.inv[H]].all())


def conjugate_subgroup(G: GroupTable, H, g: int) -> np.ndarray:
    """``g^{-1} H g``."""
    H = _as_idx(G, H)
    return np.sort(G.mult[G.mult[G.inv[g], H], g])


def normalizer(G: GroupTable, H, within=None) -> np.ndarray:
    H = _as_idx(G, H)
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    m = mask_of(G, H)
    out = []
    chunk = max(1, 2_000_000 // max(1, len(H)))
    for start in range(0, len(K), chunk):
        g = K[start:start + chunk]
        conj = G.mult[G.mult[G.inv[g][:, None], H[None, :]], g[:, None]]
        out.append(g[m[conj].all(axis=1)])
    return np.concatenate(out)


def centralizer(G: GroupTable, X, within=None) -> np.ndarray:
    X = _as_idx(G, X)
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    ok = np.ones(len(K), dtype=bool)
    for x in X:
        ok &= G.mult[K, x] == G.mult[x, K]
    return K[ok]


def center(G: GroupTable, within=None) -> np.ndarray:
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    return centralizer(G, K, within=K)


def derived_subgroup(G: GroupTable, within=None) -> np.ndarray:
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    comms = np.zeros(G.n, dtype=bool)
    for x in K:
        c = G.mult[G.mult[G.inv[x], G.inv[K]], G.mult[x, K]]
        comms[c] = True
    return closure(G, np.flatnonzero(comms))


def is_normal(G: GroupTable, N, within=None) -> bool:
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    return len(normalizer(G, N, within=K)) == len(K)


def is_ell_group(G: GroupTable, H, ell: int) -> bool:
    n = len(_as_idx(G, H))
    return n == ell ** nu(n, ell)


def sylow(G: GroupTable, ell: int, within=None) -> np.ndarray:
    """A Sylow ell-subgroup of ``within`` (default G), grown one cyclic extension at a time."""
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    target = ell ** nu(len(K), ell)
    P = np.array([0])
    ell_elems = K[np.array([int(o) == ell ** nu(int(o), ell) for o in G.orders[K]])]
    while len(P) < target:
        N = mask_of(G, normalizer(G, P, within=K))
        inP = mask_of(G, P)
        for x in ell_elems:
            if N[x] and not inP[x]:
                P = closure(G, np.concatenate([P, [x]]))
                break
        else:
            raise AssertionError("no ell-element normalises a non-Sylow ell-subgroup")
    return P


def core(G: GroupTable, H, within=None) -> np.ndarray:
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    m = mask_of(G, H)
    for g in K:
        m &= mask_of(G, conjugate_subgroup(G, np.flatnonzero(m), g))
    return np.flatnonzero(m)


def o_ell(G: GroupTable, ell: int, within=None) -> np.ndarray:
    """The largest normal ell-subgroup of ``within``: the core of a Sylow ell-subgroup."""
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    return core(G, sylow(G, ell, within=K), within=K)


def is_radical(G: GroupTable, R, ell: int, within=None) -> bool:
    """``R = O_ell(N_K(R))`` with ``K = within`` (default G)."""
    R = _as_idx(G, R)
    if not is_ell_group(G, R, ell):
        raise GroupError(f"subgroup of order {len(R)} is not an {ell}-group")
    N = normalizer(G, R, within=within)
    return np.array_equal(o_ell(G, ell, within=N), R)


@dataclass
class Quotient:
    table: GroupTable
    project: dict[int, int]      # element of K -> quotient element
    reps: list[int]              # coset representatives in G


def quotient(G: GroupTable, N, within=None) -> Quotient:
    """``K / N`` for ``N`` normal in ``K = within`` (default G)."""
    K = np.arange(G.n) if within is None else _as_idx(G, within)
    N = _as_idx(G, N)
    if not is_normal(G, N, within=K):
        raise GroupError("quotient requested by a subgroup that is not normal")
    label = {}
    reps = []
    for k in K:  # K is sorted, so 0 (identity) comes first
        if int(k) in label:
            continue
        coset = G.mult[k, N]
        for c in coset:
            label[int(c)] = len(reps)
        reps.append(int(k))
    m = len(reps)
    reps_arr = np.asarray(reps)
    qmult = np.empty((m, m), dtype=np.int32)
    lab = np.full(G.n, -1, dtype=np.int64)
    for k, v in label.items():
        lab[k] = v
    for a in range(m):
        qmult[a] = lab[G.mult[reps_arr[a], reps_arr]]
    Q = GroupTable.from_mult(qmult, name=f"{G.name}/N" if G.name else "")
    return Quotient(Q, label, reps)


@dataclass
class SubTable:
    table: GroupTable
    members: np.ndarray   # G-index of each sub-element

    def to_sub(self) -> dict[int, int]:
        return {int(g): i for i, g in enumerate(self.members)}


def subgroup_table(G: GroupTable, H) -> SubTable:
    """The subgroup ``H`` as a group table of its own (identity first)."""
    H = _as_idx(G, H)
    if not is_subgroup(G, H):
        raise GroupError("not a subgroup")
    pos = np.full(G.n, -1, dtype=np.int64)
    pos[H] = np.arange(len(H))
    sub = pos[G.mult[np.ix_(H, H)]]
    gens = [int(pos[x]) for x in generating_set(G, H)]
    T = GroupTable(sub, gens, name=G.name)
    return SubTable(T, H)


# ----------------------------------------------------------------------------
# cyclotomic integers
# ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of ``Phi_n`` from the constant term upwards."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    if any(a):
        raise AssertionError("inexact polynomial division")
    return q


def phi_reduce(v: np.ndarray, e: int) -> np.ndarray:
    """Reduce coefficient vectors (last axis, any length) modulo ``Phi_e``."""
    f = np.asarray(cyclotomic_poly(e), dtype=np.int64)
    d = len(f) - 1
    v = np.array(v, dtype=np.int64, copy=True)
    for i in range(v.shape[-1] - 1, d - 1, -1):
        c = v[..., i].copy()
        if np.any(c):
            v[..., i - d:i + 1] -= c[..., None] * f
    return v[..., :d]


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@dataclass(frozen=True)
class CycloCtx:
    """Shared choice of ``e``, the splitting prime ``P`` and ``z`` of order e in F_P."""

    e: int
    P: int
    z: int

    @classmethod
    def for_group(cls, e: int, order: int) -> "CycloCtx":
        P = e + 1
        while not (P > 2 * order and is_prime(P)):
            P += e
        g = _primitive_root(P)
        return cls(e, P, pow(g, (P - 1) // e, P))

    def powers_mod(self) -> np.ndarray:
        return np.array([pow(self.z, k, self.P) for k in range(self.e)], dtype=np.int64)


def _primitive_root(P: int) -> int:
    fs = prime_factors(P - 1)
    for g in range(2, P):
        if all(pow(g, (P - 1) // f, P) != 1 for f in fs):
            return g
    raise AssertionError("no primitive root")


# ----------------------------------------------------------------------------
# linear algebra mod P
# ----------------------------------------------------------------------------

def _mm(a: np.ndarray, b: np.ndarray, P: int) -> np.ndarray:
    if a.shape[-1] * (P - 1) ** 2 < (1 << 62):
        return (a @ b) % P
    return np.array((a.astype(object) @ b.astype(object)) % P, dtype=np.int64)


def _rref(A: np.ndarray, P: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(A, dtype=np.int64) % P
    rows, cols = A.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if not len(nz):
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), P - 2, P) % P
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - A[others, c][:, None] * A[r][None, :]) % P
        piv.append(c)
        r += 1
    return A, piv


def _nullspace(A: np.ndarray, P: int) -> np.ndarray:
    R, piv = _rref(A, P)
    n = A.shape[1]
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, p in enumerate(piv):
            basis[p, k] = (-R[i, f]) % P
    return basis


def _solve_columns(B: np.ndarray, Y: np.ndarray, P: int) -> np.ndarray:
    """X with ``B X = Y`` for a full-column-rank B."""
    d = B.shape[1]
    R, piv = _rref(np.concatenate([B, Y], axis=1), P)
    if piv[:d] != list(range(d)) or (len(piv) > d and piv[d] >= d):
        raise AssertionError("columns are not in the span")
    return R[:d, d:]


def _charpoly(A: np.ndarray, P: int) -> list[int]:
    """Characteristic polynomial (constant term first) by Faddeev-LeVerrier."""
    d = A.shape[0]
    c = [0] * (d + 1)
    c[d] = 1
    M = np.zeros_like(A)
    I = np.eye(d, dtype=np.int64)
    for k in range(1, d + 1):
        M = (_mm(A, M, P) + c[d - k + 1] * I) % P
        tr = int(np.trace(_mm(A, M, P)) % P)
        c[d - k] = (-tr * pow(k, P - 2, P)) % P
    return c


def _roots(poly: list[int], P: int) -> list[int]:
    xs = np.arange(P, dtype=np.int64)
    acc = np.zeros(P, dtype=np.int64)
    for coef in reversed(poly):
        acc = (acc * xs + coef) % P
    return np.flatnonzero(acc == 0).tolist()


# ----------------------------------------------------------------------------
# character tables
# ----------------------------------------------------------------------------

@dataclass
class CharTable:
    group: GroupTable
    ctx: CycloCtx
    degrees: list[int]
    raw: np.ndarray        # (chars, classes, e): eigenvalue multiplicities per root of unity
    values: np.ndarray     # (chars, classes, phi(e)): reduced power-basis coefficients
    mod_p: np.ndarray      # (chars, classes) values in F_P

    @property
    def k(self) -> int:
        return len(self.degrees)

    def complex_values(self) -> np.ndarray:
        zeta = np.exp(2j * np.pi * np.arange(self.ctx.e) / self.ctx.e)
        return self.raw @ zeta

    def integer_values(self) -> np.ndarray | None:
        """The table as integers, or ``None`` if some value is irrational."""
        if self.values.shape[-1] > 1 and np.any(self.values[..., 1:]):
            return None
        return self.values[..., 0].copy()

    def value(self, chi: int, cls: int) -> np.ndarray:
        return self.values[chi, cls]

    def check_orthogonality(self) -> None:
        """Exact row and column orthogonality in ``Z[zeta_e]``."""
        e = self.ctx.e
        G = self.group
        h = np.asarray(G.class_sizes, dtype=np.int64)
        X = self.raw
        conj = X[..., (-np.arange(e)) % e]
        shift = np.array([[(c - u) % e for u in range(e)] for c in range(e)])
        Yshift = conj[:, :, shift]  # (b, j, c, u)
        rows = np.einsum("aju,bjcu,j->abc", X, Yshift, h)
        rows = phi_reduce(rows, e)
        expect = np.zeros_like(rows)
        for a in range(self.k):
            expect[a, a, 0] = G.n
        if not np.array_equal(rows, expect):
            raise AssertionError("row orthogonality fails")
        cols = np.einsum("aiu,ajcu->ijc", X, Yshift)
        cols = phi_reduce(cols, e)
        expect = np.zeros_like(cols)
        for i in range(self.k):
            expect[i, i, 0] = G.n // G.class_sizes[i]
        if not np.array_equal(cols, expect):
            raise AssertionError("column orthogonality fails")
        if sum(d * d for d in self.degrees) != G.n:
            raise AssertionError("sum of squared degrees differs from the group order")
        if not (np.all(self.values[0, :, 0] == 1) and not np.any(self.values[0, :, 1:])):
            raise AssertionError("first row is not the trivial character")


def class_matrices(G: GroupTable) -> np.ndarray:
    """``A[j, r, s]``: the coefficient of ``C_s`` in ``C_j C_r``."""
    k = G.num_classes
    A = np.zeros((k, k, k), dtype=np.int64)
    co = G.class_of
    for s, gs in enumerate(G.class_reps):
        cy = co[G.mult[G.inv, gs]]
        np.add.at(A, (co, cy, np.full(G.n, s)), 1)
    return A


def char_table(G: GroupTable, ctx: CycloCtx | None = None, budget: int = 10000) -> CharTable:
    """Irreducible characters by Dixon-Schneider over ``F_P`` with exact lifting."""
    if G.n > budget:
        raise GroupError(f"character table budget exceeded: |G| = {G.n} > {budget}")
    if ctx is None:
        ctx = CycloCtx.for_group(G.exponent, G.n)
    if ctx.e % G.exponent or ctx.P <= 2 * G.n:
        raise GroupError("cyclotomic context does not fit this group")
    P, k = ctx.P, G.num_classes
    A = class_matrices(G) % P
    spaces = [np.eye(k, dtype=np.int64)]
    for j in range(1, k):
        if all(V.shape[1] == 1 for V in spaces):
            break
        new = []
        for V in spaces:
            d = V.shape[1]
            if d == 1:
                new.append(V)
                continue
            X = _solve_columns(V, _mm(A[j], V, P), P)
            roots = _roots(_charpoly(X, P), P)
            if len(roots) == 1:
                new.append(V)
                continue
            total = 0
            for lam in roots:
                N = _nullspace((X - lam * np.eye(d, dtype=np.int64)) % P, P)
                total += N.shape[1]
                new.append(_mm(V, N, P))
            if total != d:
                raise AssertionError("class matrix is not diagonalisable over the splitting field")
        spaces = new
    if any(V.shape[1] != 1 for V in spaces) or len(spaces) != k:
        raise AssertionError("class matrices failed to split the centre")
    h = np.asarray(G.class_sizes, dtype=np.int64)
    hinv = np.array([pow(int(x), P - 2, P) for x in h], dtype=np.int64)
    istar = G.inverse_classes
    degrees, modp = [], []
    for V in spaces:
        w = V[:, 0] % P
        w = w * pow(int(w[0]), P - 2, P) % P
        S = int(np.sum(w * w[istar] % P * hinv % P) % P)
        d2 = G.n * pow(S, P - 2, P) % P
        dg = isqrt(d2)
        if dg * dg != d2 or G.n % dg:
            raise AssertionError(f"degree recovery failed (chi(1)^2 = {d2} mod {P})")
        degrees.append(dg)
        modp.append(w * dg % P * hinv % P)
    modp = np.asarray(modp)
    # lift: multiplicities of eigenvalues via power maps
    e = ctx.e
    zp = ctx.powers_mod()
    raw = np.zeros((k, k, e), dtype=np.int64)
    maps = {t: G.power_map(t) for t in range(e)}
    for c, r in enumerate(G.class_reps):
        o = int(G.orders[r])
        step = e // o
        cols = [maps[t][c] for t in range(o)]
        vals = modp[:, cols]  # chi(g^t), t < o
        oinv = pow(o, P - 2, P)
        for u in range(o):
            twist = np.array([zp[(-u * t * step) % e] for t in range(o)], dtype=np.int64)
            m = (vals * twist % P).sum(axis=1) % P * oinv % P
            if np.any(m > np.asarray(degrees)):
                raise AssertionError(f"eigenvalue multiplicity lift failed on class {c}")
            raw[:, c, u * step] = m
    values = phi_reduce(raw, e)
    check = (values @ zp[: values.shape[-1]]) % P
    if not np.array_equal(check, modp):
        raise AssertionError("lifted values disagree with the modular table")
    order = sorted(range(k), key=lambda a: (degrees[a], [tuple(v) for v in values[a]]))
    # trivial character first
    triv = next(a for a in order if degrees[a] == 1 and np.all(values[a, :, 0] == 1)
                and not np.any(values[a, :, 1:]))
    order.remove(triv)
    order.insert(0, triv)
    return CharTable(G, ctx, [degrees[a] for a in order], raw[order], values[order], modp[order])


# ----------------------------------------------------------------------------
# blocks
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class EllRingMap:
    """``Z[zeta_e] -> F_{ell^m}`` sending ``zeta_e`` to ``beta`` of order ``e_{ell'}``."""

    ell: int
    e: int
    F: FieldCtx
    beta: int
    which: int

    @classmethod
    def make(cls, ell: int, e: int, which: int = 1) -> "EllRingMap":
        ep = e // ell ** nu(e, ell)
        m = 1
        while pow(ell, m, ep) != 1 % ep:
            m += 1
        F = gf_field(ell, m)
        if gcd(which, ep) != 1:
            raise GroupError("the second root choice must be a primitive root as well")
        base = F.pow(F.generator, (F.q - 1) // ep)
        return cls(ell, e, F, F.pow(base, which), which)

    @cached_property
    def zeta_images(self) -> np.ndarray:
        return np.array([self.F.pow(self.beta, u) for u in range(self.e)], dtype=np.int64)

    def image(self, coeffs: np.ndarray) -> np.ndarray:
        """Images of power-basis coefficient vectors (last axis)."""
        F = self.F
        c = np.asarray(coeffs, dtype=np.int64) % self.ell
        shape = c.shape[:-1]
        flat = c.reshape(-1, c.shape[-1])
        out = np.zeros(flat.shape[0], dtype=np.int64)
        for u in range(flat.shape[1]):
            if not flat[:, u].any():
                continue
            term = F.vmul(np.asarray([F.from_int(int(x)) for x in flat[:, u]], dtype=np.int64),
                          np.full(flat.shape[0], self.zeta_images[u], dtype=np.int64))
            out = F.vadd(out, term)
        return out.reshape(shape)


def central_characters(T: CharTable) -> np.ndarray:
    """Exact ``omega_chi(K) = |K| chi(g_K) / chi(1)`` as power-basis vectors."""
    h = np.asarray(T.group.class_sizes, dtype=np.int64)
    num = T.values * h[None, :, None]
    d = np.asarray(T.degrees, dtype=np.int64)[:, None, None]
    if np.any(num % d):
        raise AssertionError("central character is not integral in the power basis")
    return num // d


@dataclass
class BlockPartition:
    ell: int
    blocks: list[tuple[int, ...]]
    defects: list[int]
    block_of: list[int]
    images: np.ndarray          # (blocks, classes) central characters mod the prime
    ring: EllRingMap

    def principal(self) -> int:
        return self.block_of[0]


def block_partition(T: CharTable, ell: int, which: int = 1) -> BlockPartition:
    G = T.group
    ring = EllRingMap.make(ell, T.ctx.e, which)
    imgs = ring.image(central_characters(T))  # (chars, classes)
    groups: dict[bytes, list[int]] = {}
    for a in range(T.k):
        groups.setdefault(imgs[a].tobytes(), []).append(a)
    blocks = sorted((tuple(v) for v in groups.values()), key=lambda b: b[0])
    block_of = [0] * T.k
    for bi, b in enumerate(blocks):
        for a in b:
            block_of[a] = bi
    va = nu(G.n, ell)
    defects = [va - min(nu(T.degrees[a], ell) for a in b) for b in blocks]
    images = np.asarray([imgs[b[0]] for b in blocks])
    return BlockPartition(ell, blocks, defects, block_of, images, ring)


def induce_central(G: GroupTable, sub_members: np.ndarray, sub: GroupTable, ring: EllRingMap,
                   sub_images: np.ndarray) -> np.ndarray:
    """``lambda^G(K) = sum of lambda(L)`` over the sub-classes ``L`` contained in ``K``."""
    F = ring.F
    out = np.zeros(G.num_classes, dtype=np.int64)
    co = G.class_of
    for c, r in enumerate(sub.class_reps):
        K = int(co[sub_members[r]])
        out[K] = F.add(int(out[K]), int(sub_images[c]))
    return out


def block_induce(H: SubTable, TH: CharTable, bH: BlockPartition, b: int,
                 TG: CharTable, bG: BlockPartition) -> int | None:
    """The block ``b^G``, or ``None`` when the induced central function is no central character."""
    if TH.ctx != TG.ctx or bH.ring != bG.ring:
        raise GroupError("subgroup and group tables must share the cyclotomic context and ring map")
    lam = induce_central(TG.group, H.members, H.table, bG.ring, bH.images[b])
    hits = [B for B in range(len(bG.blocks)) if np.array_equal(bG.images[B], lam)]
    if len(hits) > 1:
        raise AssertionError("induced central function matches several blocks")
    return hits[0] if hits else None


def block_of_images(bG: BlockPartition, lam: np.ndarray) -> int | None:
    hits = [B for B in range(len(bG.blocks)) if np.array_equal(bG.images[B], lam)]
    if len(hits) > 1:
        raise AssertionError("induced central function matches several blocks")
    return hits[0] if hits else None


def brauer_count(T: CharTable, bp: BlockPartition, block: int) -> int:
    """``l(B)``: rank of the block's characters restricted to ell-regular classes."""
    reg = T.group.ell_regular_classes(bp.ell)
    M = T.complex_values()[np.ix_(list(bp.blocks[block]), reg)]
    return int(np.linalg.matrix_rank(M, tol=1e-8))


# ----------------------------------------------------------------------------
# radical subgroups and weights
# ----------------------------------------------------------------------------

def subgroup_class_key(G: GroupTable, H) -> bytes:
    """Conjugacy-invariant key: the smallest sorted conjugate."""
    H = _as_idx(G, H)
    conj = np.sort(G.mult[G.mult[G.inv[:, None], H[None, :]], np.arange(G.n)[:, None]], axis=1)
    best = min(row.tobytes() for row in np.unique(conj, axis=0))
    return best


def ell_subgroup_classes(G: GroupTable, ell: int, budget: int = 5000) -> list[np.ndarray]:
    """Representatives of the conjugacy classes of ell-subgroups, by cyclic extension."""
    ell_elems = [x for x in range(G.n) if int(G.orders[x]) == ell ** nu(int(G.orders[x]), ell)]
    reps: dict[bytes, np.ndarray] = {}
    trivial = np.array([0])
    reps[subgroup_class_key(G, trivial)] = trivial
    frontier = [trivial]
    while frontier:
        nxt = []
        seen_sets: set[bytes] = set()
        for P in frontier:
            N = mask_of(G, normalizer(G, P))
            inP = mask_of(G, P)
            for x in ell_elems:
                if not N[x] or inP[x]:
                    continue
                Q = closure(G, np.concatenate([P, [x]]))
                raw = Q.tobytes()
                if raw in seen_sets:
                    continue
                seen_sets.add(raw)
                key = subgroup_class_key(G, Q)
                if key not in reps:
                    reps[key] = Q
                    nxt.append(Q)
                    if len(reps) > budget:
                        raise GroupOverflow(budget, len(reps))
        frontier = nxt
    return sorted(reps.values(), key=lambda R: (len(R), R.tolist()))


def radical_subgroups(G: GroupTable, ell: int) -> list[np.ndarray]:
    return [R for R in ell_subgroup_classes(G, ell) if is_radical(G, R, ell)]


@dataclass(frozen=True)
class WeightRecord:
    radical_class: int
    radical_order: int
    character: int
    degree: int
    block: int | None


@dataclass
class WeightReport:
    ell: int
    radicals: list[np.ndarray]
    records: list[WeightRecord]
    blocks: BlockPartition
    table: CharTable
    regular_classes: int

    @property
    def total(self) -> int:
        return len(self.records)

    def per_block(self) -> dict[int, int]:
        c = Counter(r.block for r in self.records)
        return {b: c.get(b, 0) for b in range(len(self.blocks.blocks))}

    def brauer_counts(self) -> dict[int, int]:
        return {b: brauer_count(self.table, self.blocks, b) for b in range(len(self.blocks.blocks))}


def enumerate_weights(G: GroupTable, ell: int, table: CharTable | None = None) -> WeightReport:
    """All B-weights of G, each tagged with the G-block it belongs to."""
    T = table if table is not None else char_table(G)
    bG = block_partition(T, ell)
    ring = bG.ring
    F = ring.F
    radicals = radical_subgroups(G, ell)
    records = []
    for ri, R in enumerate(radicals):
        N = normalizer(G, R)
        Nt = subgroup_table(G, N)
        to_sub = Nt.to_sub()
        Rs = np.array([to_sub[int(x)] for x in R])
        Q = quotient(Nt.table, Rs)
        TQ = char_table(Q.table, ctx=T.ctx)
        vq = nu(Q.table.n, ell)
        # classes of N and where they land in N/R
        Ntab = Nt.table
        qclass = [int(Q.table.class_of[Q.project[int(r)]]) for r in Ntab.class_reps]
        hN = np.asarray(Ntab.class_sizes, dtype=np.int64)
        for a in range(TQ.k):
            dg = TQ.degrees[a]
            if nu(dg, ell) != vq:
                continue
            num = TQ.values[a, qclass] * hN[:, None]
            if np.any(num % dg):
                raise AssertionError("inflated central character is not integral")
            imgs = ring.image(num // dg)
            lam = np.zeros(G.num_classes, dtype=np.int64)
            co = G.class_of
            for c, r in enumerate(Ntab.class_reps):
                K = int(co[Nt.members[r]])
                lam[K] = F.add(int(lam[K]), int(imgs[c]))
            records.append(WeightRecord(ri, len(R), a, dg, block_of_images(bG, lam)))
    return WeightReport(ell, radicals, records, bG, T, len(G.ell_regular_classes(ell)))


# ----------------------------------------------------------------------------
# fingerprints
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    order: int
    exponent: int
    center: int
    derived: int
    class_sizes: tuple[int, ...]
    degrees: tuple[int, ...]
    element_orders: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return {"order": self.order, "exponent": self.exponent, "center": self.center,
                "derived": self.derived, "class_sizes": list(self.class_sizes),
                "degrees": list(self.degrees), "element_orders": [list(x) for x in self.element_orders]}


def fingerprint_of(G: GroupTable, table: CharTable | None = None) -> Fingerprint:
    T = table if table is not None else char_table(G)
    return Fingerprint(
        order=G.n,
        exponent=G.exponent,
        center=len(center(G)),
        derived=len(derived_subgroup(G)),
        class_sizes=tuple(sorted(G.class_sizes)),
        degrees=tuple(sorted(T.degrees)),
        element_orders=tuple(sorted(Counter(int(o) for o in G.orders).items())),
    )


def _fp(order, exponent, center_, derived, sizes, degrees, orders) -> Fingerprint:
    return Fingerprint(order, exponent, center_, derived, tuple(sorted(sizes)), tuple(sorted(degrees)),
                       tuple(sorted(orders.items())))


# Certificates of the structures that occur in the audits.  Each one is
# re-derived from an independent model in the test suite.
NAMED_FINGERPRINTS: dict[str, Fingerprint] = {
    "S3": _fp(6, 6, 1, 3, [1, 2, 3], [1, 1, 2], {1: 1, 2: 3, 3: 2}),
    "D8": _fp(8, 4, 2, 2, [1, 1, 2, 2, 2], [1, 1, 1, 1, 2], {1: 1, 2: 5, 4: 2}),
    "Q8": _fp(8, 4, 2, 2, [1, 1, 2, 2, 2], [1, 1, 1, 1, 2], {1: 1, 2: 1, 4: 6}),
    "A4": _fp(12, 6, 1, 4, [1, 3, 4, 4], [1, 1, 1, 3], {1: 1, 2: 3, 3: 8}),
    "C3:C4": _fp(12, 12, 2, 3, [1, 1, 2, 2, 3, 3], [1, 1, 1, 1, 2, 2], {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}),
    "(C3xC3):C2": _fp(18, 6, 1, 9, [1, 2, 2, 2, 2, 9], [1, 1, 2, 2, 2, 2], {1: 1, 2: 9, 3: 8}),
    "S4": _fp(24, 12, 1, 12, [1, 3, 6, 6, 8], [1, 1, 2, 3, 3], {1: 1, 2: 9, 3: 8, 4: 6}),
    "SL2(3)": _fp(24, 12, 2, 8, [1, 1, 4, 4, 4, 4, 6], [1, 1, 1, 2, 2, 2, 3], {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}),
    "3^{1+2}_+": _fp(27, 3, 3, 3, [1, 1, 1] + [3] * 8, [1] * 9 + [3, 3], {1: 1, 3: 26}),
    "S3xS3": _fp(36, 6, 1, 9, [1, 2, 2, 3, 3, 4, 6, 6, 9], [1, 1, 1, 1, 2, 2, 2, 2, 4],
                 {1: 1, 2: 15, 3: 8, 6: 12}),
    "2^{1+4}_+": _fp(32, 4, 2, 2, [1, 1] + [2] * 15, [1] * 16 + [4], {1: 1, 2: 19, 4: 12}),
    "2^{1+2}_+oD16": _fp(64, 8, 2, 4, [1, 1] + [2] * 9 + [4] * 11, [1] * 16 + [2] * 4 + [4] * 2,
                         {1: 1, 2: 31, 4: 16, 8: 16}),
}


def identify(fp: Fingerprint) -> str:
    """Name of a stored certificate equal to ``fp``; not a general isomorphism test."""
    for name, cert in NAMED_FINGERPRINTS.items():
        if cert == fp:
            return name
    return "unrecognized"


def fingerprint(G: GroupTable, table: CharTable | None = None) -> str:
    return identify(fingerprint_of(G, table))


# ----------------------------------------------------------------------------
# automorphisms
# ----------------------------------------------------------------------------

class NotAnAutomorphism(GroupError):
    def __init__(self, msg: str, witness: tuple[int, int] | None = None):
        super().__init__(msg if witness is None else f"{msg}; witness pair {witness}")
        self.witness = witness


@dataclass
class Automorphism:
    perm: np.ndarray
    class_perm: list[int]
    char_perm: list[int] | None

    def moved_characters(self) -> list[int]:
        if self.char_perm is None:
            return []
        return [a for a, b in enumerate(self.char_perm) if a != b]

    def character_cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles of the induced permutation of Irr."""
        if self.char_perm is None:
            return []
        seen, out = set(), []
        for a in range(len(self.char_perm)):
            if a in seen:
                continue
            cyc = [a]
            seen.add(a)
            b = self.char_perm[a]
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = self.char_perm[b]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


def extend_on_generators(G: GroupTable, images: Sequence[int]) -> np.ndarray:
    """Extend a map given on ``G.gens`` along the enumeration tree (no checking)."""
    if len(images) != len(G.gens):
        raise GroupError("one image per generator is required")
    phi = np.full(G.n, -1, dtype=np.int64)
    phi[0] = 0
    for j in G.bfs_order[1:]:
        p, si = G.tree[j]
        phi[j] = G.mult[phi[p], images[si]]
    return phi


def apply_automorphism(G: GroupTable, images: Sequence[int], table: CharTable | None = None) -> Automorphism:
    """Induced permutations of a generator map, after checking it is an automorphism."""
    phi = extend_on_generators(G, images)
    if len(np.unique(phi)) != G.n:
        raise NotAnAutomorphism("the map is not bijective")
    for s, img in zip(G.gens, images):
        if phi[s] != img:
            raise NotAnAutomorphism("the generator images are inconsistent with the enumeration", (s, s))
    bad = np.argwhere(phi[G.mult] != G.mult[np.ix_(phi, phi)])
    if len(bad):
        i, j = map(int, bad[0])
        raise NotAnAutomorphism("the map is not multiplicative", (i, j))
    cp = [int(G.class_of[phi[r]]) for r in G.class_reps]
    chp = None
    if table is not None:
        chp = []
        for a in range(table.k):
            moved = table.values[a][cp]
            hits = [b for b in range(table.k) if np.array_equal(table.values[b], moved)]
            if len(hits) != 1:
                raise AssertionError("character transport failed")
            chp.append(hits[0])
    return Automorphism(phi, cp, chp)
