"""Shared helpers for exact-matrix tests."""

import random


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def transpose(m):
    return [[m[j][i] for j in range(len(m))] for i in range(len(m[0]))] if m else []


def int_det(m):
    # Plain cofactor expansion; fine for the small transform matrices.
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * int_det(minor)
    return total


def random_unimodular(n: int, rng: random.Random, steps: int = 25):
    """Product of integer shears and swaps; determinant is always +-1."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        for t in range(n):
            m[i][t] += c * m[j][t]
    return m


def conjugate(gram, p):
    """p . gram . p^T, the Gram matrix after the basis change p."""
    return matmul(matmul(p, [list(row) for row in gram]), transpose(p))
