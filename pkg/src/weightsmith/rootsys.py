"""Root systems of types G2 and D4.

G2 roots are integer pairs ``(c1, c2)`` meaning ``c1*a + c2*b`` for the base
``{a, b}`` with ``a`` short; D4 roots are vectors ``±e_i ± e_j`` in the
orthonormal basis of R^4 with base ``r1 = e1-e2, r2 = e2-e3, r3 = e3-e4,
r4 = e3+e4``.

Besides pairings and reflections the module carries the data that pins down
the G2 Chevalley group used in :mod:`weightsmith.chevalley`: the 6x6 seed
table of the signs ``eta_{r,s}`` with its three closure rules, and the sign
orbits of the structure constants ``N_{r,s}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator

G2 = "G2"
D4 = "D4"

_G2_GRAM = ((2, -3), (-3, 6))


class RootError(ValueError):
    """Raised for malformed roots or roots mixed across systems."""


@dataclass(frozen=True, order=True)
class Root:
    kind: str
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind == G2:
            if len(self.coords) != 2 or _g2_norm(self.coords) not in (2, 6) or not _is_g2_root(self.coords):
                raise RootError(f"{self.coords} is not a G2 root")
        elif self.kind == D4:
            nz = [c for c in self.coords if c]
            if len(self.coords) != 4 or len(nz) != 2 or any(abs(c) != 1 for c in nz):
                raise RootError(f"{self.coords} is not a D4 root")
        else:
            raise RootError(f"unknown root system {self.kind!r}")

    def __neg__(self) -> "Root":
        return Root(self.kind, tuple(-c for c in self.coords))

    def __add__(self, other: "Root") -> "Root":
        _same(self, other)
        return Root(self.kind, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "Root") -> "Root":
        return self + (-other)

    @property
    def is_long(self) -> bool:
        if self.kind == G2:
            return _g2_norm(self.coords) == 6
        return True

    @property
    def is_positive(self) -> bool:
        if self.kind == G2:
            return min(self.coords) >= 0
        return all(c >= 0 for c in d4_base_coeffs(self))

    def __str__(self) -> str:
        if self.kind == G2:
            return g2_name(self)
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Root({self.kind}, {self})"


def _same(r: Root, s: Root) -> None:
    if r.kind != s.kind:
        raise RootError("roots from different root systems")


def _g2_norm(c: tuple[int, ...]) -> int:
    return _g2_inner(c, c)


def _g2_inner(c: tuple[int, ...], d: tuple[int, ...]) -> int:
    return sum(c[i] * _G2_GRAM[i][j] * d[j] for i in range(2) for j in range(2))


_G2_POSITIVE = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))


def _is_g2_root(c: tuple[int, ...]) -> bool:
    return tuple(c) in _G2_POSITIVE or tuple(-x for x in c) in _G2_POSITIVE


def inner(r: Root, s: Root) -> int:
    """Invariant inner product, normalised so short G2 roots and all D4 roots have norm 2."""
    _same(r, s)
    if r.kind == G2:
        return _g2_inner(r.coords, s.coords)
    return sum(x * y for x, y in zip(r.coords, s.coords))


def cartan(r: Root, s: Root) -> int:
    """The Cartan integer ``<r,s> = 2(r,s)/(r,r)``."""
    num = 2 * inner(r, s)
    den = inner(r, r)
    assert num % den == 0
    return num // den


def reflect(r: Root, s: Root) -> Root:
    """``omega_r(s) = s - <r,s> r``."""
    c = cartan(r, s)
    return Root(s.kind, tuple(x - c * y for x, y in zip(s.coords, r.coords)))


def is_root(kind: str, coords: tuple[int, ...]) -> bool:
    try:
        Root(kind, tuple(coords))
    except RootError:
        return False
    return True


def root_string(r: Root, s: Root) -> tuple[int, int]:
    """``(p, q)``: the r-string through s is ``s - p r, ..., s + q r``."""
    _same(r, s)
    if r == s or r == -s:
        raise RootError("root string through a proportional root")
    p = 0
    while is_root(s.kind, tuple(x - (p + 1) * y for x, y in zip(s.coords, r.coords))):
        p += 1
    q = 0
    while is_root(s.kind, tuple(x + (q + 1) * y for x, y in zip(s.coords, r.coords))):
        q += 1
    return p, q


def sum_is_root(r: Root, s: Root) -> bool:
    return is_root(r.kind, tuple(x + y for x, y in zip(r.coords, s.coords)))


# ----------------------------------------------------------------------------
# naming of G2 roots
# ----------------------------------------------------------------------------

_G2_NAMES = {(1, 0): "a", (0, 1): "b", (1, 1): "a+b", (2, 1): "2a+b", (3, 1): "3a+b", (3, 2): "3a+2b"}
_G2_BY_NAME = {v: k for k, v in _G2_NAMES.items()}


def g2_name(r: Root) -> str:
    c = r.coords
    if c in _G2_NAMES:
        return _G2_NAMES[c]
    name = _G2_NAMES[(-c[0], -c[1])]
    return "-" + name if len(name) == 1 else f"-({name})"


def g2(name_or_c1: str | int, c2: int | None = None) -> Root:
    """A G2 root from a name such as ``"3a+b"``, ``"-(2a+b)"`` or from ``(c1, c2)``."""
    if c2 is not None:
        return Root(G2, (int(name_or_c1), c2))
    text = str(name_or_c1).replace(" ", "")
    m = re.fullmatch(r"-\((.+)\)|-(.+)|(.+)", text)
    assert m is not None
    if m.group(3) is not None:
        body, sign = m.group(3), 1
    else:
        body, sign = m.group(1) or m.group(2), -1
    if body not in _G2_BY_NAME:
        raise RootError(f"unknown G2 root name {name_or_c1!r}")
    c = _G2_BY_NAME[body]
    return Root(G2, (sign * c[0], sign * c[1]))


# ----------------------------------------------------------------------------
# root systems
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSystem:
    kind: str
    roots: tuple[Root, ...]
    base: tuple[Root, ...]

    @property
    def positive(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_positive)

    def index(self, r: Root) -> int:
        return self.roots.index(r)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


@lru_cache(maxsize=None)
def g2_system() -> RootSystem:
    roots = sorted(Root(G2, s) for c in _G2_POSITIVE for s in (c, (-c[0], -c[1])))
    return RootSystem(G2, tuple(roots), (g2("a"), g2("b")))


@lru_cache(maxsize=None)
def d4_system() -> RootSystem:
    roots = set()
    for i in range(4):
        for j in range(i + 1, 4):
            for si, sj in product((1, -1), repeat=2):
                v = [0, 0, 0, 0]
                v[i], v[j] = si, sj
                roots.add(Root(D4, tuple(v)))
    base = (Root(D4, (1, -1, 0, 0)), Root(D4, (0, 1, -1, 0)), Root(D4, (0, 0, 1, -1)), Root(D4, (0, 0, 1, 1)))
    return RootSystem(D4, tuple(sorted(roots)), base)


def d4_root(*base_coeffs: int) -> Root:
    """D4 root from its coefficients in the base r1..r4."""
    base = d4_system().base
    v = [sum(c * b.coords[i] for c, b in zip(base_coeffs, base)) for i in range(4)]
    return Root(D4, tuple(v))


def d4_base_coeffs(r: Root) -> tuple[int, ...]:
    """Coefficients of a D4 root (or any integer vector of the root lattice) in r1..r4."""
    x1, x2, x3, x4 = (Fraction(c) for c in r.coords)
    # r1 = e1-e2, r2 = e2-e3, r3 = e3-e4, r4 = e3+e4
    c1 = x1
    c2 = x1 + x2
    c3 = (x1 + x2 + x3 - x4) / 2
    c4 = (x1 + x2 + x3 + x4) / 2
    out = (c1, c2, c3, c4)
    if any(c.denominator != 1 for c in out):
        raise RootError(f"{r.coords} is not in the root lattice")
    return tuple(int(c) for c in out)


_TRIALITY_BASE = (2, 1, 3, 0)  # r1 -> r3, r2 -> r2, r3 -> r4, r4 -> r1


def triality(r: Root) -> Root:
    """The diagram symmetry ``r1 -> r3 -> r4 -> r1``, ``r2`` fixed, extended linearly."""
    if r.kind != D4:
        raise RootError("triality is only defined on D4")
    c = d4_base_coeffs(r)
    image = [0, 0, 0, 0]
    for i, ci in enumerate(c):
        image[_TRIALITY_BASE[i]] += ci
    return d4_root(*image)


@dataclass(frozen=True)
class FoldedClass:
    projection: tuple[Fraction, ...]
    members: tuple[Root, ...]

    @property
    def type(self) -> str:
        return "A1" if len(self.members) == 1 else "A1^3"

    @property
    def norm(self) -> Fraction:
        return sum(x * x for x in self.projection)


def fold(system: RootSystem | None = None) -> list[FoldedClass]:
    """Classes of D4 roots with equal projection ``(r + rho r + rho^2 r)/3``."""
    system = system or d4_system()
    if system.kind != D4:
        raise RootError("folding needs the D4 system")
    classes: dict[tuple[Fraction, ...], list[Root]] = {}
    for r in system.roots:
        r1, r2 = triality(r), triality(triality(r))
        proj = tuple(Fraction(a + b + c, 3) for a, b, c in zip(r.coords, r1.coords, r2.coords))
        classes.setdefault(proj, []).append(r)
    return [FoldedClass(k, tuple(sorted(v))) for k, v in sorted(classes.items())]


# ----------------------------------------------------------------------------
# the G2 sign table eta_{r,s}
# ----------------------------------------------------------------------------

XI1, XI2, XI3 = g2("a+b"), g2("a"), g2("-(2a+b)")

ETA_ORDER = ("a+b", "a", "-(2a+b)", "b", "3a+b", "-(3a+2b)")
ETA_SEED = (
    (-1, -1, 1, -1, 1, 1),
    (1, -1, -1, 1, -1, 1),
    (-1, 1, -1, 1, 1, -1),
    (-1, 1, 1, -1, 1, -1),
    (1, -1, 1, -1, -1, 1),
    (1, 1, -1, 1, -1, -1),
)

CARTAN_ORDER = ("a", "b", "a+b", "2a+b", "3a+b", "3a+2b")


@lru_cache(maxsize=None)
def _seed_roots() -> tuple[Root, ...]:
    return tuple(g2(n) for n in ETA_ORDER)


def eta(r: Root, s: Root) -> int:
    """The sign ``eta_{r,s}`` from the seed table and its closure rules.

    Evaluation order: seed lookup, then ``eta_{r,-s} = eta_{r,s}`` to bring
    ``s`` into the seed columns, then ``eta_{-r,s} = eta_{r,omega_r(s)}`` to
    bring ``r`` into the seed rows.  Each rule lands in the seed rows or
    columns in one step, so the recursion depth is at most two.  For
    ``eta_{-r,-s}`` with ``r, s`` seeded this composes to
    ``eta_{r, omega_r(s)}``.
    """
    if r.kind != G2 or s.kind != G2:
        raise RootError("signs eta are only fixed for G2")
    seed = _seed_roots()
    if r not in seed:
        # r = -r0 with r0 seeded: eta_{-r0, s} = eta_{r0, omega_{r0}(s)}
        r0 = -r
        return eta(r0, reflect(r0, s))
    if s not in seed:
        return eta(r, -s)
    return ETA_SEED[seed.index(r)][seed.index(s)]


def cartan_table() -> list[list[int]]:
    roots = [g2(n) for n in CARTAN_ORDER]
    return [[cartan(r, s) for s in roots] for r in roots]


def tables_json() -> str:
    """Cartan and eta tables over the lexicographically ordered 12 G2 roots."""
    roots = g2_system().roots
    data = {
        "roots": [str(r) for r in roots],
        "cartan": [[cartan(r, s) for s in roots] for r in roots],
        "eta": [[eta(r, s) for s in roots] for r in roots],
    }
    return json.dumps(data, sort_keys=True)


# ----------------------------------------------------------------------------
# structure constants: magnitudes and sign orbits
# ----------------------------------------------------------------------------

def n_magnitude(r: Root, s: Root) -> int:
    """``|N_{r,s}| = p + 1`` where ``s - p r`` starts the r-string through s."""
    if not sum_is_root(r, s):
        return 0
    return root_string(r, s)[0] + 1


@dataclass(frozen=True)
class SignOrbits:
    """Ordered pairs ``(r, s)`` with ``r + s`` a root, grouped into classes.

    Within a class the signs of ``N`` are tied by ``N_{s,r} = -N_{r,s}``,
    ``N_{-r,-s} = -N_{r,s}`` and the cyclic rule for ``r + s + t = 0``
    (which relates signs without change), so a single sign per class fixes
    every constant.  ``relative[(r, s)]`` is the sign of ``N_{r,s}`` relative
    to the class representative.
    """

    pairs: tuple[tuple[Root, Root], ...]
    orbit_of: dict
    relative: dict
    reps: tuple[tuple[Root, Root], ...]


@lru_cache(maxsize=None)
def sign_orbits(kind: str = G2) -> SignOrbits:
    system = g2_system() if kind == G2 else d4_system()
    pairs = tuple((r, s) for r in system.roots for s in system.roots if r != -s and r != s and sum_is_root(r, s))
    orbit_of: dict = {}
    relative: dict = {}
    reps: list = []
    for start in pairs:
        if start in orbit_of:
            continue
        idx = len(reps)
        reps.append(start)
        orbit_of[start] = idx
        relative[start] = 1
        stack = [start]
        while stack:
            r, s = stack.pop()
            sg = relative[(r, s)]
            t = -(r + s)
            for nxt, rel in (((s, r), -1), ((-r, -s), -1), ((s, t), 1), ((t, r), 1)):
                if nxt not in orbit_of:
                    orbit_of[nxt] = idx
                    relative[nxt] = sg * rel
                    stack.append(nxt)
                elif relative[nxt] != sg * rel:  # pragma: no cover - would signal an inconsistent rule set
                    raise RootError("sign rules are contradictory")
    return SignOrbits(pairs, orbit_of, relative, tuple(reps))


def structure_constants(signs: tuple[int, ...], kind: str = G2) -> dict[tuple[Root, Root], int]:
    """``N_{r,s}`` for one sign per orbit (``signs[i]`` for ``reps[i]``)."""
    orb = sign_orbits(kind)
    if len(signs) != len(orb.reps):
        raise RootError(f"expected {len(orb.reps)} orbit signs")
    return {pr: signs[orb.orbit_of[pr]] * orb.relative[pr] * n_magnitude(*pr) for pr in orb.pairs}
