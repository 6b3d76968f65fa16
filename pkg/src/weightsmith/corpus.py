"""Small reference groups given by explicit generators, and a JSON fixture format.

Fixture format::

    {"kind": "perm", "generators": [[image list], ...]}
    {"kind": "matrix", "field": {"p": 3, "k": 1}, "generators": [[[row], ...], ...]}

Matrix entries are field codes of ``gf.field(p, k)``.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .gf import field
from .grouplab import GroupError, GroupTable, from_matrices, from_permutations, perm_from_cycles


def symmetric(n: int) -> GroupTable:
    return from_permutations([perm_from_cycles(n, (1, 2)), perm_from_cycles(n, tuple(range(1, n + 1)))],
                             name=f"S{n}")


def alternating4() -> GroupTable:
    return from_permutations([perm_from_cycles(4, (1, 2, 3)), perm_from_cycles(4, (1, 2), (3, 4))], name="A4")


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given order acting on ``order // 2`` points."""
    m = order // 2
    rot = [(i + 1) % m for i in range(m)]
    ref = [(-i) % m for i in range(m)]
    return from_permutations([rot, ref], name=f"D{order}")


def quaternion8() -> GroupTable:
    """Q8 in its regular representation on {1, i, j, k, -1, -i, -j, -k}."""
    i = perm_from_cycles(8, (1, 2, 5, 6), (3, 8, 7, 4))
    j = perm_from_cycles(8, (1, 3, 5, 7), (2, 4, 6, 8))
    return from_permutations([i, j], name="Q8")


def sl2(p: int) -> GroupTable:
    ctx = field(p)
    a = np.array([[1, 1], [0, 1]])
    b = np.array([[0, p - 1], [1, 0]])
    return from_matrices(ctx, [a, b], name=f"SL2({p})")


def c3xc3_c2() -> GroupTable:
    """``(C3 x C3) : C2`` with the C2 inverting, on 6 points."""
    x = perm_from_cycles(6, (1, 2, 3))
    y = perm_from_cycles(6, (4, 5, 6))
    t = perm_from_cycles(6, (2, 3), (5, 6))
    return from_permutations([x, y, t], name="(C3xC3):C2")


def s3xs3() -> GroupTable:
    return from_permutations([perm_from_cycles(6, (1, 2)), perm_from_cycles(6, (1, 2, 3)),
                              perm_from_cycles(6, (4, 5)), perm_from_cycles(6, (4, 5, 6))], name="S3xS3")


def c3_c4() -> GroupTable:
    """``C3 : C4`` with the generator of C4 inverting C3, on 7 points."""
    x = perm_from_cycles(7, (1, 2, 3))
    y = perm_from_cycles(7, (2, 3), (4, 5, 6, 7))
    return from_permutations([x, y], name="C3:C4")


def extraspecial27() -> GroupTable:
    """``3^{1+2}_+`` from ``diag(w, w^{-1}, 1)`` and a cyclic permutation matrix over F_7."""
    ctx = field(7)
    w = 2  # order 3 in F_7
    d = np.diag([w, pow(w, -1, 7), 1])
    c = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    return from_matrices(ctx, [d, c], name="3^{1+2}_+")


def pauli_2_1_4() -> GroupTable:
    """``2^{1+4}_+`` as real two-qubit Pauli matrices ``{I, X, Z, XZ}^{(x)2}`` over F_5."""
    ctx = field(5)
    X = np.array([[0, 1], [1, 0]])
    Z = np.array([[1, 0], [0, 4]])
    I = np.eye(2, dtype=np.int64)
    gens = [np.kron(X, I) % 5, np.kron(Z, I) % 5, np.kron(I, X) % 5, np.kron(I, Z) % 5]
    return from_matrices(ctx, gens, name="2^{1+4}_+")


def d8_central_dihedral(order: int) -> GroupTable:
    """``D8 o D_order`` realised as Kronecker products of 2x2 matrices over F_17."""
    ctx = field(17)
    m = order // 2
    if 16 % m:
        raise GroupError("F_17 only has roots of unity of order dividing 16")
    zeta = pow(3, 16 // m, 17)  # 3 is a primitive root mod 17
    r = np.array([[zeta, 0], [0, pow(zeta, -1, 17)]])
    s = np.array([[0, 1], [1, 0]])
    X = np.array([[0, 1], [1, 0]])
    Z = np.array([[1, 0], [0, 16]])
    I = np.eye(2, dtype=np.int64)
    gens = [np.kron(X, I) % 17, np.kron(Z, I) % 17, np.kron(I, r) % 17, np.kron(I, s) % 17]
    return from_matrices(ctx, gens, name=f"2^{{1+2}}_+oD{order}")


CORPUS = {
    "S3": lambda: symmetric(3),
    "S4": lambda: symmetric(4),
    "A4": alternating4,
    "D8": lambda: dihedral(8),
    "Q8": quaternion8,
    "SL2(3)": lambda: sl2(3),
    "(C3xC3):C2": c3xc3_c2,
    "C3:C4": c3_c4,
    "S3xS3": s3xs3,
}

AWC_CORPUS = ("S3", "S4", "A4", "D8", "Q8", "SL2(3)", "(C3xC3):C2")


def load_fixture(spec: dict | str | Path, cap: int = 20000) -> GroupTable:
    """A group from a fixture dict, a JSON file path, or a corpus name."""
    if isinstance(spec, str) and spec in CORPUS:
        return CORPUS[spec]()
    if isinstance(spec, (str, Path)):
        spec = json.loads(Path(spec).read_text())
    kind = spec.get("kind")
    if kind == "perm":
        return from_permutations(spec["generators"], cap=cap, name=spec.get("name", ""))
    if kind == "matrix":
        f = spec["field"]
        ctx = field(int(f["p"]), int(f.get("k", 1)))
        if "modulus" in f and tuple(f["modulus"]) != tuple(ctx.modulus):
            raise GroupError(f"fixture modulus {f['modulus']} differs from the field's {list(ctx.modulus)}")
        return from_matrices(ctx, [np.asarray(g) for g in spec["generators"]], cap=cap, name=spec.get("name", ""))
    raise GroupError(f"unknown fixture kind {kind!r}")
