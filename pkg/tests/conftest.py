"""Shared helpers for the test suite (no fixtures; plain builders)."""

import random

from heckebasis.basicsets import DecompRow, LabeledDecompMatrix


def make_factorization_instance(rng: random.Random):
    """Random (full, root, prime) triple satisfying every hypothesis of
    the factorization check.

    Construction: pick pivot rows p_1..p_C with column k of the root
    matrix having a 1 at p_k and other nonzero entries only on rows of
    strictly larger a-invariant; make prime unitriangular with
    prime[k][j] != 0 off the diagonal only when a(p_k) > a(p_j); set
    full = root * prime. Then both matrices admit canonical basic sets
    with assignment column k -> p_k, and the induced column
    correspondence is the identity."""
    n_rows = rng.randrange(3, 9)
    n_cols = rng.randrange(1, n_rows + 1)
    a_vals = [rng.randrange(0, 11) for _ in range(n_rows)]
    rows = [DecompRow(f"r{i+1}", a_vals[i]) for i in range(n_rows)]
    pivots = rng.sample(range(n_rows), n_cols)

    root_entries = [[0] * n_cols for _ in range(n_rows)]
    for k, p in enumerate(pivots):
        root_entries[p][k] = 1
        for i in range(n_rows):
            if i != p and a_vals[i] > a_vals[p] and rng.random() < 0.4:
                root_entries[i][k] = rng.randrange(1, 4)

    prime = [[0] * n_cols for _ in range(n_cols)]
    for k in range(n_cols):
        prime[k][k] = 1
        for j in range(n_cols):
            if (
                j != k
                and a_vals[pivots[k]] > a_vals[pivots[j]]
                and rng.random() < 0.4
            ):
                prime[k][j] = rng.randrange(1, 4)

    full_entries = [
        [
            sum(root_entries[i][k] * prime[k][j] for k in range(n_cols))
            for j in range(n_cols)
        ]
        for i in range(n_rows)
    ]
    cols = [f"c{j+1}" for j in range(n_cols)]
    full = LabeledDecompMatrix(rows, cols, full_entries)
    root = LabeledDecompMatrix(rows, cols, root_entries)
    return full, root, prime
