"""Smith normal forms used by the cohomology linear-algebra path.

``local_snf`` works over Z/p^K with numpy int64 arithmetic and tracks both
transforms.  ``integer_snf_columns`` is a small exact integer SNF that only
tracks column operations; it decomposes finite abelian groups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LocalSNF:
    p: int
    K: int
    valuations: tuple  # one per pivot, K for a zero pivot
    U: np.ndarray
    V: np.ndarray
    shape: tuple

    @property
    def modulus(self) -> int:
        return self.p**self.K

    def image_order(self) -> int:
        out = 1
        for v in self.valuations:
            out *= self.p ** (self.K - v)
        return out

    def kernel_order(self) -> int:
        out = 1
        for v in self.valuations:
            out *= self.p**v
        return out * self.modulus ** (self.shape[1] - len(self.valuations))

    def kernel_generators(self) -> list:
        """Columns spanning {x : A x = 0 mod p^K}."""
        N = self.modulus
        gens = []
        for j in range(self.shape[1]):
            if j < len(self.valuations):
                scale = self.p ** (self.K - self.valuations[j])
                if scale == N:
                    continue
                gens.append((self.V[:, j] * scale) % N)
            else:
                gens.append(self.V[:, j] % N)
        return gens

    def in_image(self, y) -> bool:
        z = (self.U @ (np.asarray(y, dtype=np.int64) % self.modulus)) % self.modulus
        r = len(self.valuations)
        for i, v in enumerate(self.valuations):
            if z[i] % (self.p**v):
                return False
        return not z[r:].any()


def _valuations(arr: np.ndarray, p: int, K: int) -> np.ndarray:
    val = np.full(arr.shape, K, dtype=np.int64)
    nz = arr != 0
    val[nz] = 0
    cur = arr.copy()
    for k in range(1, K):
        cur_div = nz & (cur % p == 0)
        if not cur_div.any():
            break
        val[cur_div] = k
        cur = np.where(cur_div, cur // p, cur)
        nz = cur_div
    return val


def local_snf(A, p: int, K: int) -> LocalSNF:
    """U A V = diag(p^v_i) mod p^K with U, V invertible; pivots chosen by least valuation."""
    N = p**K
    if N >= 2**31:
        raise OverflowError("modulus too large for int64 elimination")
    A = np.array(A, dtype=np.int64) % N
    m, n = A.shape
    U = np.eye(m, dtype=np.int64)
    V = np.eye(n, dtype=np.int64)
    vals = []
    r = 0
    while r < min(m, n):
        sub = A[r:, r:]
        if not sub.any():
            break
        val = _valuations(sub, p, K)
        i, j = np.unravel_index(int(np.argmin(val)), val.shape)
        v = int(val[i, j])
        i += r
        j += r
        if i != r:
            A[[r, i]] = A[[i, r]]
            U[[r, i]] = U[[i, r]]
        if j != r:
            A[:, [r, j]] = A[:, [j, r]]
            V[:, [r, j]] = V[:, [j, r]]
        pv = p**v
        unit = int(A[r, r]) // pv
        uinv = pow(unit, -1, N)
        A[r] = (A[r] * uinv) % N
        U[r] = (U[r] * uinv) % N
        factors = A[r + 1 :, r] // pv
        if factors.any():
            A[r + 1 :] = (A[r + 1 :] - np.outer(factors, A[r])) % N
            U[r + 1 :] = (U[r + 1 :] - np.outer(factors, U[r])) % N
        factors = A[r, r + 1 :] // pv
        if factors.any():
            A[:, r + 1 :] = (A[:, r + 1 :] - np.outer(A[:, r], factors)) % N
            V[:, r + 1 :] = (V[:, r + 1 :] - np.outer(V[:, r], factors)) % N
        vals.append(v)
        r += 1
    return LocalSNF(p, K, tuple(vals), U, V, (m, n))


def integer_snf_columns(rows: list, ncols: int):
    """Diagonal entries and column transform V (lists of ints) with A V row-equivalent to diag.

    Returns (diag, V) where diag has length ncols (0 for free directions).
    """
    A = [list(r) for r in rows if any(r)]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    diag = []
    t = 0
    while t < ncols:
        A = [r for r in A if any(r[t:])]
        if not A:
            break
        while True:
            best = None
            for i, row in enumerate(A):
                for j in range(t, ncols):
                    if row[j] and (best is None or abs(row[j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            i, j = best
            A[0], A[i] = A[i], A[0]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
                for row in V:
                    row[t], row[j] = row[j], row[t]
            piv = A[0][t]
            done = True
            for row in A[1:]:
                q = row[t] // piv
                if q:
                    for c in range(t, ncols):
                        row[c] -= q * A[0][c]
                if row[t]:
                    done = False
            for c in range(t + 1, ncols):
                q = A[0][c] // piv
                if q:
                    for row in A:
                        row[c] -= q * row[t]
                    for row in V:
                        row[c] -= q * row[t]
                if A[0][c]:
                    done = False
            if done:
                # divisibility of the remaining block is not needed for decomposition
                break
        diag.append(abs(A[0][t]))
        A = A[1:]
        t += 1
    diag += [0] * (ncols - len(diag))
    return diag, V
