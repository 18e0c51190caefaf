"""Exact matrix rank over Q (fraction-free) and over prime fields."""

from __future__ import annotations

from typing import Sequence


def rank_rational(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by Bareiss fraction-free elimination."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, m):
            f = rows[i][col]
            row_i = rows[i]
            row_r = rows[rank]
            for j in range(col + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in matrix]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, m) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        row_r = [(x * inv) % p for x in rows[rank]]
        rows[rank] = row_r
        for i in range(m):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                row_i = rows[i]
                for j in range(col, n):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        rank += 1
        if rank == m:
            break
    return rank


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    if not a or not b:
        return []
    inner = len(b)
    cols = len(b[0])
    return [[sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)] for row in a]
