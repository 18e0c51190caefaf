"""Slow reference computations used only by the tests.

Nothing here imports the engine's rank or homology code.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def rank_fraction(matrix) -> int:
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows or not rows[0]:
        return 0
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def reduced_betti(faces: set[frozenset]) -> dict[int, int]:
    """Reduced homology ranks over Q of a simplicial complex given by all its faces."""
    if not faces:
        return {}
    by_dim: dict[int, list[tuple]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for v in by_dim.values():
        v.sort()
    top = max(by_dim)

    def boundary(dim):
        cols, rows = by_dim.get(dim, []), by_dim.get(dim - 1, [])
        idx = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for c, f in enumerate(cols):
            for pos in range(len(f)):
                mat[idx[f[:pos] + f[pos + 1:]]][c] = (-1) ** pos
        return mat

    ranks = {d: rank_fraction(boundary(d)) for d in range(0, top + 1)}
    out = {}
    for d in range(-1, top + 1):
        out[d] = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return out


def hochster_depth(n: int, gens_j: list[set[int]]) -> int:
    """depth S/J for square-free J from local cohomology of links.

    depth = min over faces F of |F| + 1 + min{i : reduced H_i(lk F) != 0}.
    """
    verts = range(1, n + 1)
    faces = {frozenset(c) for k in range(n + 1) for c in combinations(verts, k)
             if not any(g <= set(c) for g in gens_j)}
    best = None
    for f in faces:
        link = {g for g in faces if not g & f and (g | f) in faces}
        betti = reduced_betti(link)
        nonzero = [i for i, b in betti.items() if b]
        if nonzero:
            value = len(f) + 1 + min(nonzero)
            best = value if best is None else min(best, value)
    return best


def koszul_homology_at(n: int, in_module, exponent: tuple[int, ...]) -> list[int]:
    """Koszul homology ranks of a monomial module at an arbitrary multidegree.

    ``in_module(b)`` says whether the monomial with exponent vector b is
    nonzero in the module.
    """
    bases = []
    for p in range(n + 1):
        basis = []
        for tau in combinations(range(n), p):
            b = list(exponent)
            ok = True
            for j in tau:
                b[j] -= 1
                ok &= b[j] >= 0
            if ok and in_module(tuple(b)):
                basis.append(tau)
        bases.append(basis)
    ranks = [0] * (n + 2)
    for p in range(1, n + 1):
        idx = {t: i for i, t in enumerate(bases[p - 1])}
        mat = [[0] * len(bases[p]) for _ in bases[p - 1]]
        for c, tau in enumerate(bases[p]):
            for pos, j in enumerate(tau):
                rest = tau[:pos] + tau[pos + 1:]
                if rest in idx:
                    mat[idx[rest]][c] = (-1) ** pos
        ranks[p] = rank_fraction(mat)
    return [len(bases[p]) - ranks[p] - ranks[p + 1] for p in range(n + 1)]


def exponent_vectors(n: int, top: int):
    return product(range(top + 1), repeat=n)
