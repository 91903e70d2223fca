"""Random fibre matrices: positive weights, non-negative off-diagonal entries, F.F_i = 0."""
import random

import numpy as np


def random_connected_fibre(rng: random.Random, n: int):
    w = [rng.randint(1, 3) for _ in range(n)]
    c = [[0] * n for _ in range(n)]
    # random spanning tree keeps the dual graph connected, then extra edges
    for i in range(1, n):
        j = rng.randrange(i)
        c[i][j] = c[j][i] = rng.randint(1, 2)
    for i in range(n):
        for j in range(i + 1, n):
            if not c[i][j] and rng.random() < 0.3:
                c[i][j] = c[j][i] = rng.randint(1, 2)
    # scaling by w_i w_j makes the forced diagonal integral
    gram = [[c[i][j] * w[i] * w[j] if i != j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        gram[i][i] = -sum(gram[i][j] * w[j] for j in range(n) if j != i) // w[i]
    return gram, w


def block_diagonal(blocks):
    size = sum(len(g) for g, _ in blocks)
    gram = [[0] * size for _ in range(size)]
    weights, at = [], 0
    for g, w in blocks:
        for i in range(len(g)):
            for j in range(len(g)):
                gram[at + i][at + j] = g[i][j]
        weights += w
        at += len(g)
    return gram, weights


def numpy_inertia(gram, tol=1e-7):
    """Oracle: eigenvalue signs in floating point."""
    if len(gram) == 0:
        return 0, 0, 0
    ev = np.linalg.eigvalsh(np.array(gram, dtype=float))
    scale = max(1.0, float(np.abs(ev).max()))
    pos = int((ev > tol * scale).sum())
    neg = int((ev < -tol * scale).sum())
    return pos, neg, len(ev) - pos - neg
