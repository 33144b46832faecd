"""Dense linear algebra over GF(p) for small primes.

Everything is numpy: elimination runs on int64 arrays reduced mod p after
each pivot, and matrix products ride BLAS by casting to float32/float64 when
the accumulator provably stays exact (inner * (p-1)^2 below the mantissa),
chunking the inner dimension otherwise.  Matrices are plain ndarrays; the
helpers never mutate their arguments.
"""

from __future__ import annotations

import numpy as np


def _as_mod(a: np.ndarray, p: int) -> np.ndarray:
    arr = np.asarray(a, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d array")
    return np.mod(arr, p)


def mm(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product of two mod-p matrices, reduced mod p, as int64."""
    a = _as_mod(a, p)
    b = _as_mod(b, p)
    inner = a.shape[1]
    worst = inner * (p - 1) ** 2
    if worst < 2**24:
        c = np.dot(a.astype(np.float32), b.astype(np.float32))
        return np.mod(c, p).astype(np.int64)
    if worst < 2**53:
        c = np.dot(a.astype(np.float64), b.astype(np.float64))
        return np.mod(c, p).astype(np.int64)
    # enormous inner dimension: accumulate in exact integer chunks
    step = max(1, (2**53 - 1) // max(1, (p - 1) ** 2))
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for lo in range(0, inner, step):
        hi = min(inner, lo + step)
        c = np.dot(a[:, lo:hi].astype(np.float64), b[lo:hi].astype(np.float64))
        acc = np.mod(acc + c.astype(np.int64), p)
    return acc


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    r = _as_mod(a, p)
    rows, cols = r.shape
    pivots: list[int] = []
    lead = 0
    for c in range(cols):
        if lead == rows:
            break
        sub = r[lead:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        i = lead + int(nz[0])
        if i != lead:
            r[[lead, i]] = r[[i, lead]]
        inv = pow(int(r[lead, c]), p - 2, p)
        if inv != 1:
            r[lead] = np.mod(r[lead] * inv, p)
        col = r[:, c].copy()
        col[lead] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            r[hit] = np.mod(r[hit] - np.outer(col[hit], r[lead]), p)
        pivots.append(c)
        lead += 1
    return r, pivots


def rref_with_transform(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """rref plus the invertible T with T @ a == rref mod p."""
    arr = _as_mod(a, p)
    rows = arr.shape[0]
    aug = np.hstack([arr, np.eye(rows, dtype=np.int64)])
    red, piv = rref(aug, p)
    pivots = [c for c in piv if c < arr.shape[1]]
    return red[:, : arr.shape[1]], red[:, arr.shape[1] :], pivots


def rank(a: np.ndarray, p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {x : a @ x == 0 mod p}."""
    arr = _as_mod(a, p)
    cols = arr.shape[1]
    red, piv = rref(arr, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-int(red[i, f])) % p
    return basis


def solve_right(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """One solution x of a @ x == b mod p, or raise if inconsistent."""
    arr = _as_mod(a, p)
    rhs = _as_mod(b, p)
    aug = np.hstack([arr, rhs])
    red, piv = rref(aug, p)
    n = arr.shape[1]
    if any(c >= n for c in piv):
        raise np.linalg.LinAlgError("inconsistent system")
    x = np.zeros((n, rhs.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = red[i, n:]
    return x


class Echelon:
    """Incremental row space over GF(p), fed in batches.

    Keeps a fully reduced echelon basis so each new batch is cleaned with a
    single matrix product before the small leftover elimination.  Useful when
    the row count dwarfs the column count (stacked equivariance conditions).
    """

    def __init__(self, p: int, cols: int):
        self.p = p
        self.cols = cols
        self.basis = np.zeros((0, cols), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, batch: np.ndarray) -> np.ndarray:
        """Return the batch with the current row space projected away."""
        w = _as_mod(batch, self.p)
        if self.pivots:
            coeff = w[:, self.pivots]
            w = np.mod(w - mm(coeff, self.basis, self.p), self.p)
        return w

    def add(self, batch: np.ndarray) -> int:
        """Absorb new rows; returns how many were independent."""
        added = 0
        w = self.reduce(batch)
        w = w[np.any(w, axis=1)]
        while w.shape[0]:
            # eliminate a small head exactly, then BLAS-clean the rest
            head, w = w[:128], w[128:]
            red, piv = rref(head, self.p)
            added += self._absorb(red[: len(piv)], piv)
            if w.shape[0]:
                w = self.reduce(w)
                w = w[np.any(w, axis=1)]
        return added

    def _absorb(self, red: np.ndarray, piv: list[int]) -> int:
        if not piv:
            return 0
        if self.pivots:
            coeff = self.basis[:, piv]
            if np.any(coeff):
                self.basis = np.mod(self.basis - mm(coeff, red, self.p), self.p)
        merged = np.vstack([self.basis, red])
        order = np.argsort(self.pivots + piv, kind="stable")
        self.basis = merged[order]
        self.pivots = sorted(self.pivots + piv)
        return len(piv)

    def kernel(self) -> np.ndarray:
        """Rows spanning {x : x has zero product with every stored row}.

        The stored rows are constraints c with x @ c^T == 0; equivalently the
        nullspace of the basis matrix acting on column vectors.
        """
        free = [c for c in range(self.cols) if c not in set(self.pivots)]
        out = np.zeros((len(free), self.cols), dtype=np.int64)
        for k, f in enumerate(free):
            out[k, f] = 1
            for i, c in enumerate(self.pivots):
                out[k, c] = (-int(self.basis[i, f])) % self.p
        return out
