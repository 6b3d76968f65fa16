"""Linear characters of the tori ``T_eps`` and their Weyl-group stabilisers.

Characters are exponent tuples: for G2 a character of
``T_eps ~= C_{q-eps} x C_{q-eps}`` is ``(i, j)`` and for 3D4 a character of
``T_eps ~= C_{q^3-eps} x C_{q-eps}`` is ``(i, j)``.  All equalities are
congruences of integers.

The D4-side action on characters is obtained from the torus action.  Write
``T = {h(t1, t2, t1^{eps q}, t1^{q^2})}`` as ``Z/M x Z/m`` (``M = q^3 - eps``,
``m = q - eps``) through ``(a, b) -> t1 = z^a, t2 = z^{b M/m}``.  If a Weyl
element sends the generators ``(1, 0)`` and ``(0, 1)`` to ``(a1, b1)`` and
``(a2, b2)``, then ``theta^w(x) = theta(w x w^{-1})`` sends ``(i, j)`` to

    i' = i a1 + j b1 M/m  (mod M),      j' = i a2 m/M + j b2  (mod m).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .gf import prime_power
from .torusalg import S_D4, IntMat, d4_frobenius_matrix, identity, mat_mul, mat_vec, scale


class CharError(ValueError):
    """A character is outside the domain of an operation."""


def ell_part(n: int, ell: int) -> int:
    n = abs(n)
    out = 1
    while n and n % ell == 0:
        out *= ell
        n //= ell
    return out


def eps_for(q: int, modulus: int = 3) -> int:
    """The sign with ``q = eps (mod modulus)``; raises when q is 0 mod modulus."""
    r = q % modulus
    if r == 1:
        return 1
    if r == modulus - 1:
        return -1
    raise CharError(f"q = {q} is not congruent to +-1 modulo {modulus}")


# ----------------------------------------------------------------------------
# finite dihedral groups given by integer matrices acting on exponents
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylElem:
    """A Weyl element acting on character exponents by ``(i, j) -> (i, j) @ mat``."""

    mat: IntMat
    word: tuple[str, ...]

    def order(self, reduce) -> int:
        cur, k = reduce(self.mat), 1
        one = reduce(identity(len(self.mat)))
        while cur != one:
            cur = reduce(mat_mul(cur, self.mat))
            k += 1
        return k


def _closure(gens: dict[str, IntMat], reduce) -> list[WeylElem]:
    """All products of ``gens`` (shortest words first, generators in given order)."""
    n = len(next(iter(gens.values())))
    one = reduce(identity(n))
    found = {one: WeylElem(one, ())}
    frontier = [found[one]]
    while frontier:
        nxt = []
        for e in frontier:
            for name, g in gens.items():
                m = reduce(mat_mul(e.mat, g))
                if m not in found:
                    found[m] = WeylElem(m, e.word + (name,))
                    nxt.append(found[m])
        frontier = nxt
    return list(found.values())


@dataclass(frozen=True)
class StabClass:
    order: int
    label: str
    words: tuple[tuple[str, ...], ...]
    generators: tuple[tuple[str, ...], ...]

    def as_dict(self) -> dict:
        return {"label": self.label, "order": self.order,
                "generators": [".".join(w) or "1" for w in self.generators]}


def _label(elems: Sequence[WeylElem], reduce) -> str:
    n = len(elems)
    orders = Counter(e.order(reduce) for e in elems)
    if n == 1:
        return "Trivial"
    if n == 2:
        return "C2"
    if n == 3:
        return "C3"
    if n == 4:
        return "C4" if orders.get(4) else "C2xC2"
    if n == 6:
        return "C6" if orders.get(6) else "S3"
    if n == 12:
        return "C12" if orders.get(12) else "D12"
    return f"order{n}"


def _minimal_generators(elems: Sequence[WeylElem], reduce) -> tuple[tuple[str, ...], ...]:
    """A short generating set: greedily add elements until the closure is everything."""
    target = {e.mat for e in elems}
    chosen: list[WeylElem] = []
    span = {reduce(identity(len(elems[0].mat)))}
    for e in sorted(elems, key=lambda x: (len(x.word), x.word)):
        if e.mat in span:
            continue
        chosen.append(e)
        span = {w.mat for w in _closure({str(k): c.mat for k, c in enumerate(chosen)}, reduce)}
        if span == target:
            break
    return tuple(c.word for c in chosen)


def _stab_class(elems: Sequence[WeylElem], reduce) -> StabClass:
    return StabClass(
        order=len(elems),
        label=_label(elems, reduce),
        words=tuple(sorted(e.word for e in elems)),
        generators=_minimal_generators(elems, reduce) if len(elems) > 1 else (),
    )


# ----------------------------------------------------------------------------
# G2
# ----------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TorusCharG2:
    i: int
    j: int
    m: int  # q - eps

    def __post_init__(self) -> None:
        if self.m <= 0:
            raise CharError("modulus must be positive")
        object.__setattr__(self, "i", self.i % self.m)
        object.__setattr__(self, "j", self.j % self.m)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)


# row-vector matrices: (i, j) -> (i, j) @ M
G2_CHAR_GENS: dict[str, IntMat] = {
    "n_a": ((1, 1), (0, -1)),   # (i, j) -> (i, i - j)
    "n_b": ((0, 1), (1, 0)),    # (i, j) -> (j, i)
}
G2_CHAR_NAMED: dict[str, IntMat] = {
    **G2_CHAR_GENS,
    "v2": ((-1, 0), (0, -1)),   # (i, j) -> (-i, -j)
    "v3": ((-1, -1), (1, 0)),   # (i, j) -> (j - i, -i)
}


def _act_row(pair: Sequence[int], mat: IntMat) -> tuple[int, ...]:
    return tuple(sum(pair[k] * mat[k][c] for k in range(len(pair))) for c in range(len(mat[0])))


def weyl_act_char(gen: str, theta: TorusCharG2) -> TorusCharG2:
    """``theta^{n}`` for ``n`` in {n_a, n_b, v2, v3}."""
    try:
        mat = G2_CHAR_NAMED[gen]
    except KeyError:
        raise CharError(f"unknown generator {gen!r}") from None
    i, j = _act_row(theta.pair, mat)
    return TorusCharG2(i, j, theta.m)


def _reduce_g2(mat: IntMat) -> IntMat:
    return mat


@lru_cache(maxsize=None)
def g2_weyl() -> tuple[WeylElem, ...]:
    """The dihedral group of order 12 generated by n_a and n_b, as exact integer matrices."""
    return tuple(_closure(G2_CHAR_GENS, _reduce_g2))


def _act_g2(e: WeylElem, theta: TorusCharG2) -> TorusCharG2:
    i, j = _act_row(theta.pair, e.mat)
    return TorusCharG2(i, j, theta.m)


def orbit_g2(theta: TorusCharG2) -> list[TorusCharG2]:
    return sorted({_act_g2(e, theta) for e in g2_weyl()})


def stabilizer(theta: TorusCharG2) -> StabClass:
    elems = [e for e in g2_weyl() if _act_g2(e, theta) == theta]
    return _stab_class(elems, _reduce_g2)


def has_corollary_shape(theta: TorusCharG2) -> bool:
    """``theta = (i, i)`` or ``theta = (i, -i)``."""
    return theta.i == theta.j or (theta.i + theta.j) % theta.m == 0


def canonical_for_block(ell: int, theta: "TorusCharG2 | TorusCharD4") -> bool:
    """Whether the ell-part of the torus lies in the kernel of ``theta``."""
    if isinstance(theta, TorusCharG2):
        mods = (theta.m, theta.m)
    else:
        mods = (theta.M, theta.m)
    return all(x % ell_part(n, ell) == 0 for x, n in zip(theta.pair, mods))


def count_weights_abelian(theta, stab: StabClass, ell: int = 3) -> int:
    """Weights contributed by the N(T)-orbit of a canonical ``theta``.

    The stabiliser here is abelian of order prime to ell and ``theta``
    extends to it, so the count is the number of extensions, ``|N_theta/T|``.
    """
    if stab.order % ell == 0:
        raise CharError(f"{ell} divides the stabiliser order {stab.order}; the block is not of this shape")
    if not canonical_for_block(ell, theta):
        raise CharError("theta is not the canonical character of an ell-block")
    return stab.order


def block_type_g2(theta: TorusCharG2, stab: StabClass) -> str:
    if stab.label == "C2xC2" and all((2 * x) % theta.m == 0 for x in theta.pair) and theta.pair != (0, 0):
        return "B2"
    if stab.label == "C2":
        return "Ba/Bb"
    if stab.label == "Trivial":
        return "cyclic-defect torus"
    return "non-abelian stabilizer"


@dataclass(frozen=True)
class OrbitRow:
    representative: tuple[int, int]
    orbit_size: int
    stabilizer: StabClass
    canonical: bool
    block_type: str | None
    weight_count: int | None

    def as_dict(self) -> dict:
        return {"theta": list(self.representative), "orbit_size": self.orbit_size,
                "stabilizer": self.stabilizer.as_dict(), "canonical": self.canonical,
                "block_type": self.block_type, "weight_count": self.weight_count}


def census_g2(q: int, eps: int, ell: int = 3) -> list[OrbitRow]:
    """Orbit census of ``Irr(T_eps)`` under the Weyl group (one row per orbit)."""
    prime_power(q)
    m = q - eps
    seen: set[tuple[int, int]] = set()
    rows = []
    for i in range(m):
        for j in range(m):
            if (i, j) in seen:
                continue
            th = TorusCharG2(i, j, m)
            orb = orbit_g2(th)
            seen.update(o.pair for o in orb)
            st = stabilizer(th)
            canon = canonical_for_block(ell, th)
            btype = count = None
            if canon and st.order % ell:
                btype = block_type_g2(th, st)
                count = count_weights_abelian(th, st, ell)
            rows.append(OrbitRow(th.pair, len(orb), st, canon, btype, count))
    return rows


def orbit_stabilizer_holds_g2(m: int) -> bool:
    return all(len(orbit_g2(TorusCharG2(i, j, m))) * stabilizer(TorusCharG2(i, j, m)).order == 12
               for i in range(m) for j in range(m))


def corollary_shapes_hold(m: int) -> bool:
    """Every orbit with a stabiliser of order 2 contains a ``(i, i)`` or ``(i, -i)``."""
    for row in _orbits(m):
        st = stabilizer(row[0])
        if st.order == 2 and not any(has_corollary_shape(t) for t in row):
            return False
    return True


def _orbits(m: int) -> list[list[TorusCharG2]]:
    seen: set[tuple[int, int]] = set()
    out = []
    for i in range(m):
        for j in range(m):
            if (i, j) not in seen:
                orb = orbit_g2(TorusCharG2(i, j, m))
                seen.update(o.pair for o in orb)
                out.append(orb)
    return out


# ----------------------------------------------------------------------------
# 3D4
# ----------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TorusCharD4:
    i: int
    j: int
    q: int
    eps: int

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise CharError("eps must be +1 or -1")
        object.__setattr__(self, "i", self.i % self.M)
        object.__setattr__(self, "j", self.j % self.m)

    @property
    def M(self) -> int:
        return self.q ** 3 - self.eps

    @property
    def m(self) -> int:
        return self.q - self.eps

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)


def _param_vector(q: int, eps: int, a: int, b: int) -> tuple[int, ...]:
    """Exponents (over Z/M) of ``h(t1, t2, t1^{eps q}, t1^{q^2})`` at the point (a, b)."""
    M, m = q ** 3 - eps, q - eps
    return tuple(x % M for x in (a, b * (M // m), eps * q * a, q * q * a))


def _param_coords(q: int, eps: int, v: Sequence[int]) -> tuple[int, int]:
    """Inverse of ``_param_vector``; raises when ``v`` is not a torus point."""
    M, m = q ** 3 - eps, q - eps
    a = v[0] % M
    if v[1] % (M // m):
        raise CharError("image is outside the torus")
    b = (v[1] // (M // m)) % m
    if tuple(x % M for x in v) != _param_vector(q, eps, a, b):
        raise CharError("image is outside the torus")
    return a, b


@dataclass(frozen=True)
class D4CharAction:
    """Action of one Weyl element on ``Irr(T_eps)`` as ``(a1, b1, a2, b2)``."""

    word: tuple[str, ...]
    images: tuple[int, int, int, int]


D4_TORUS_GENS: dict[str, IntMat] = {
    "w_r2": S_D4[1],
    "w_r1r3r4": mat_mul(mat_mul(S_D4[0], S_D4[2]), S_D4[3]),
}


@lru_cache(maxsize=None)
def d4_weyl(q: int, eps: int) -> tuple[tuple[WeylElem, D4CharAction], ...]:
    """``W(T) = N(T)/T`` for ``T = T_eps``: the 12 Weyl elements with their action on characters."""
    P = d4_frobenius_matrix(q)
    A = P if eps == 1 else mat_mul(scale(-1, identity(4)), P)
    for name, g in D4_TORUS_GENS.items():
        if mat_mul(g, A) != mat_mul(A, g):
            raise AssertionError(f"{name} does not commute with the twisted Frobenius")

    def reduce(mat: IntMat) -> IntMat:
        return mat

    elems = _closure(D4_TORUS_GENS, reduce)
    out = []
    for e in elems:
        a1, b1 = _param_coords(q, eps, mat_vec(e.mat, _param_vector(q, eps, 1, 0)))
        a2, b2 = _param_coords(q, eps, mat_vec(e.mat, _param_vector(q, eps, 0, 1)))
        out.append((e, D4CharAction(e.word, (a1, b1, a2, b2))))
    if len(out) != 12:
        raise AssertionError(f"W(T) has order {len(out)}, expected 12")
    return tuple(out)


def act_d4(action: D4CharAction, theta: TorusCharD4) -> TorusCharD4:
    a1, b1, a2, b2 = action.images
    M, m = theta.M, theta.m
    f = M // m
    if a2 % f:
        raise AssertionError("image of the second generator does not have order dividing q - eps")
    i = theta.i * a1 + theta.j * b1 * f
    j = theta.i * (a2 // f) + theta.j * b2
    return TorusCharD4(i, j, theta.q, theta.eps)


def d4_gen_action(q: int, eps: int, word: tuple[str, ...]) -> D4CharAction:
    for e, act in d4_weyl(q, eps):
        if e.word == word:
            return act
    # words outside the BFS tree: compose
    mat = identity(4)
    for w in word:
        mat = mat_mul(mat, D4_TORUS_GENS[w])
    for e, act in d4_weyl(q, eps):
        if e.mat == mat:
            return act
    raise CharError(f"word {word!r} is not in W(T)")


OMEGA_BAR_WORD = ("w_r1r3r4", "w_r2")


def omega(q: int, eps: int) -> D4CharAction:
    """``omega = omegabar^2`` with ``omegabar = omega_{r1} omega_{r3} omega_{r4} omega_{r2}``."""
    return d4_gen_action(q, eps, OMEGA_BAR_WORD * 2)


def d4_stabilizer(theta: TorusCharD4) -> StabClass:
    elems = [e for e, act in d4_weyl(theta.q, theta.eps) if act_d4(act, theta) == theta]
    return _stab_class(elems, lambda x: x)


def restrict_to_g2(theta: TorusCharD4) -> TorusCharG2:
    """Restriction to ``T~ = {h(t1, t2, t1, t1) : t1, t2 in mu_{q-eps}}``."""
    return TorusCharG2(theta.i, theta.j, theta.m)


def restriction_stabilizer(theta: TorusCharD4) -> StabClass:
    """Stabiliser in W(T) of the restriction of ``theta`` to ``T~``."""
    res = restrict_to_g2(theta)
    elems = [e for e, act in d4_weyl(theta.q, theta.eps) if restrict_to_g2(act_d4(act, theta)) == res]
    return _stab_class(elems, lambda x: x)


def kernel_contains_subtorus(theta: TorusCharD4) -> bool:
    return restrict_to_g2(theta).pair == (0, 0)


def kernel_criterion_holds(theta: TorusCharD4) -> bool:
    """``T~ <= ker theta``  iff  ``3 | |N(T)_theta : T|``."""
    return kernel_contains_subtorus(theta) == (d4_stabilizer(theta).order % 3 == 0)


STAB_IS_TORUS = "StabIsTorus"
STAB_EQUALS_RESTRICTION = "StabEqualsRestrictionStab"
INDEX_TWO = "IndexTwo"
EXCLUDED_BY_DEFECT = "ExcludedByDefect"


@dataclass(frozen=True)
class TrichotomyResult:
    theta: TorusCharD4
    case: str
    stab: StabClass
    restriction_stab: StabClass
    cases_holding: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"theta": list(self.theta.pair), "case": self.case, "stabilizer": self.stab.as_dict(),
                "restriction_stabilizer": self.restriction_stab.as_dict(),
                "cases_holding": list(self.cases_holding)}


def trichotomy(theta: TorusCharD4) -> TrichotomyResult:
    """Which of the three stabiliser situations occurs for a canonical 3-block character.

    Cases are tested in the order listed and the first one that holds is the
    reported ``case``; ``cases_holding`` lists all of them.  When 3 divides
    ``|N(T)_theta : T|`` the block has a larger defect group and the dichotomy
    does not apply, which is reported as ``ExcludedByDefect``.
    """
    if not canonical_for_block(3, theta):
        raise CharError("theta is not the canonical character of a 3-block of T")
    st = d4_stabilizer(theta)
    rst = restriction_stabilizer(theta)
    holding = []
    if st.order == 1:
        holding.append(STAB_IS_TORUS)
    if set(st.words) == set(rst.words):
        holding.append(STAB_EQUALS_RESTRICTION)
    if st.order == 2 and rst.order == 2 * st.order:
        holding.append(INDEX_TWO)
    if st.order % 3 == 0:
        return TrichotomyResult(theta, EXCLUDED_BY_DEFECT, st, rst, tuple(holding))
    if not holding:
        raise AssertionError(f"no case of the trichotomy holds for {theta}")
    if STAB_IS_TORUS not in holding and STAB_EQUALS_RESTRICTION not in holding and 4 % rst.order:
        raise AssertionError(f"|N_theta~ : T| = {rst.order} does not divide 4 for {theta}")
    return TrichotomyResult(theta, holding[0], st, rst, tuple(holding))


def d4_characters(q: int, eps: int) -> Iterable[TorusCharD4]:
    M, m = q ** 3 - eps, q - eps
    for i in range(M):
        for j in range(m):
            yield TorusCharD4(i, j, q, eps)


@dataclass
class D4Census:
    q: int
    eps: int
    characters: int
    kernel_criterion_failures: list[tuple[int, int]] = field(default_factory=list)
    canonical: int = 0
    cases: Counter = field(default_factory=Counter)
    case_weight_counts: Counter = field(default_factory=Counter)
    examples: dict = field(default_factory=dict)

    @property
    def kernel_criterion_ok(self) -> bool:
        return not self.kernel_criterion_failures

    def as_dict(self) -> dict:
        return {"q": self.q, "eps": self.eps, "characters": self.characters,
                "kernel_criterion": "pass" if self.kernel_criterion_ok else "fail",
                "kernel_criterion_failures": [list(x) for x in self.kernel_criterion_failures[:10]],
                "canonical_characters": self.canonical,
                "cases": dict(sorted(self.cases.items())),
                "weight_counts_by_case": {k: v for k, v in sorted(self.case_weight_counts.items())},
                "examples": {k: list(v) for k, v in sorted(self.examples.items())}}


def census_d4(q: int, eps: int | None = None) -> D4Census:
    """Exhaustive kernel-criterion and trichotomy census over ``Irr(T_eps)``."""
    prime_power(q)
    eps = eps_for(q) if eps is None else eps
    out = D4Census(q, eps, (q ** 3 - eps) * (q - eps))
    for th in d4_characters(q, eps):
        if not kernel_criterion_holds(th):
            out.kernel_criterion_failures.append(th.pair)
        if canonical_for_block(3, th):
            out.canonical += 1
            res = trichotomy(th)
            out.cases[res.case] += 1
            out.examples.setdefault(res.case, th.pair)
            if res.case == STAB_IS_TORUS:
                out.case_weight_counts[str(count_weights_abelian(th, res.stab))] += 1
    return out
