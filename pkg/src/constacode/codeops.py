"""Generic linear-code computations over F_q, used as independent oracles.

Everything here is definitional: reduced row echelon form, nullspaces,
and exhaustive enumeration of codewords for minimum distance and weight
enumerators.  No structure of the two-dimensional constructions is
assumed, which is what makes these routines usable as cross-checks.

Matrices cross into numpy integer arrays internally (canonical element
indices); prime fields use direct modular arithmetic, extension fields
precomputed q x q operation tables.  Enumeration walks the message space
in contiguous blocks, optionally partitioned across worker processes and
merged by min / vector sum.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import BudgetExceeded
from .gf import FieldCtx, FieldElement, field_new

DEFAULT_BUDGET = 10**7

# Minimum distance of the zero code (k = 0): no nonzero codewords exist, so
# the distance is reported as an infinite marker, never the integer 0.
INFINITE_DISTANCE = math.inf

_CHUNK = 1 << 15


class _Kernel:
    """Vectorized field arithmetic on canonical element indices."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.q = ctx.q
        self.prime = ctx.m == 1
        if self.prime:
            self.p = ctx.p
            self._inv = [0] + [pow(a, ctx.p - 2, ctx.p) for a in range(1, ctx.p)]
        else:
            q = ctx.q
            elems = [ctx.nth(i) for i in range(q)]
            add = np.empty((q, q), dtype=np.int64)
            mul = np.empty((q, q), dtype=np.int64)
            for i, a in enumerate(elems):
                for j, b in enumerate(elems):
                    add[i, j] = ctx.index_of(a + b)
                    mul[i, j] = ctx.index_of(a * b)
            self.add_table = add
            self.mul_table = mul
            self.neg_table = np.array([ctx.index_of(-e) for e in elems], dtype=np.int64)
            self._inv = [0] + [ctx.index_of(elems[i].inverse()) for i in range(1, q)]

    def add(self, a, b):
        if self.prime:
            return (a + b) % self.p
        return self.add_table[a, b]

    def sub(self, a, b):
        if self.prime:
            return (a - b) % self.p
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        if self.prime:
            return (a * b) % self.p
        return self.mul_table[a, b]

    def neg(self, a):
        if self.prime:
            return (-a) % self.p
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if self.prime:
            return (A @ B) % self.p
        acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for j in range(A.shape[1]):
            acc = self.add_table[acc, self.mul_table[A[:, j][:, None], B[j][None, :]]]
        return acc


def _kernel(ctx: FieldCtx) -> _Kernel:
    if ctx._kernel is None:
        ctx._kernel = _Kernel(ctx)
    return ctx._kernel


def to_index_matrix(ctx: FieldCtx, rows: Iterable[Sequence[FieldElement]], ncols: int) -> np.ndarray:
    data = [[ctx.index_of(e) for e in row] for row in rows]
    for row in data:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)}, expected {ncols}")
    return np.array(data, dtype=np.int64).reshape(len(data), ncols)


def from_index_matrix(ctx: FieldCtx, M: np.ndarray) -> tuple[tuple[FieldElement, ...], ...]:
    return tuple(tuple(ctx.nth(int(v)) for v in row) for row in M)


def _rref_idx(kern: _Kernel, M: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    R = M.copy()
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = kern.mul(R[r], kern.inv(int(R[r, c])))
        col = R[:, c].copy()
        col[r] = 0
        if col.any():
            R = kern.sub(R, kern.mul(col[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R[:r], tuple(pivots)


def _nullspace_idx(kern: _Kernel, R: np.ndarray, pivots: tuple[int, ...], ncols: int) -> np.ndarray:
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    N = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        N[t, f] = 1
    if pivots and free:
        N[:, list(pivots)] = kern.neg(R[:, free].T)
    return N


def _reduce_against_idx(
    kern: _Kernel, R: np.ndarray, pivots: tuple[int, ...], V: np.ndarray
) -> np.ndarray:
    # R must be in *reduced* echelon form: its pivot submatrix is the
    # identity, so each vector's expansion coefficients are just its pivot
    # coordinates and one multiply-subtract reduces everything.
    if not pivots:
        return V
    return kern.sub(V, kern.matmul(V[:, list(pivots)], R))


class LinearCodeView:
    """A length-n linear code over F_q presented by a k x n basis matrix.

    The rows must be linearly independent; rank is verified at
    construction.  Minimum distance and the weight enumerator are computed
    on demand and cached.
    """

    def __init__(self, ctx: FieldCtx, rows: Iterable[Sequence[FieldElement]], n: int):
        idx = to_index_matrix(ctx, rows, n)
        self._init_from_idx(ctx, idx, n)

    @classmethod
    def from_index_matrix(cls, ctx: FieldCtx, M: np.ndarray, n: int) -> "LinearCodeView":
        self = object.__new__(cls)
        self._init_from_idx(ctx, np.asarray(M, dtype=np.int64).reshape(-1, n), n)
        return self

    def _init_from_idx(self, ctx: FieldCtx, idx: np.ndarray, n: int) -> None:
        self.ctx = ctx
        self.n = n
        self._idx = idx
        kern = _kernel(ctx)
        self._rref, self._pivots = _rref_idx(kern, idx)
        if len(self._pivots) != idx.shape[0]:
            raise ValueError(
                f"rows are not a basis: rank {len(self._pivots)} < {idx.shape[0]} rows"
            )
        self.k = idx.shape[0]
        self._rows: Optional[tuple] = None
        self._weights: Optional[tuple[int, ...]] = None

    @property
    def rows(self) -> tuple[tuple[FieldElement, ...], ...]:
        if self._rows is None:
            self._rows = from_index_matrix(self.ctx, self._idx)
        return self._rows

    def basis_index_matrix(self) -> np.ndarray:
        return self._idx.copy()

    def __repr__(self) -> str:
        return f"LinearCodeView[n={self.n}, k={self.k}] over {self.ctx}"


def rref(ctx: FieldCtx, rows: Iterable[Sequence[FieldElement]], ncols: int):
    """Reduced row echelon form; returns (rows, rank)."""
    M = to_index_matrix(ctx, rows, ncols)
    R, pivots = _rref_idx(_kernel(ctx), M)
    return from_index_matrix(ctx, R), len(pivots)


def nullspace(ctx: FieldCtx, rows: Iterable[Sequence[FieldElement]], ncols: int):
    """Basis of {v : M v^T = 0}; row count is ncols - rank(M)."""
    kern = _kernel(ctx)
    M = to_index_matrix(ctx, rows, ncols)
    R, pivots = _rref_idx(kern, M)
    return from_index_matrix(ctx, _nullspace_idx(kern, R, pivots, ncols))


def nullspace_view(view: LinearCodeView) -> LinearCodeView:
    """The dual (orthogonal complement) of a code, as a view."""
    kern = _kernel(view.ctx)
    N = _nullspace_idx(kern, view._rref, view._pivots, view.n)
    return LinearCodeView.from_index_matrix(view.ctx, N, view.n)


def row_space_equal(a: LinearCodeView, b: LinearCodeView) -> bool:
    return (
        a.n == b.n
        and a.k == b.k
        and a._pivots == b._pivots
        and np.array_equal(a._rref, b._rref)
    )


def in_row_space(view: LinearCodeView, vectors: Iterable[Sequence[FieldElement]]) -> bool:
    """Whether every given vector lies in the code."""
    V = to_index_matrix(view.ctx, vectors, view.n)
    if V.shape[0] == 0:
        return True
    kern = _kernel(view.ctx)
    return not _reduce_against_idx(kern, view._rref, view._pivots, V).any()


def block_twist_shift(
    vec: Sequence[FieldElement], parts: int, twist: FieldElement
) -> tuple[FieldElement, ...]:
    """Cyclic block shift with a twist: (t*B_{parts-1} | B_0 | ... | B_{parts-2}).

    The vector is split into ``parts`` equal blocks; the last block wraps to
    the front multiplied by ``twist``.  A code closed under this map is
    twist-quasi-twisted with respect to that block structure.
    """
    n = len(vec)
    if parts < 1 or n % parts:
        raise ValueError(f"cannot split length {n} into {parts} equal blocks")
    size = n // parts
    wrapped = tuple(twist * e for e in vec[n - size :])
    return wrapped + tuple(vec[: n - size])


# ---------------------------------------------------------------------------
# Exhaustive enumeration.


def _scan_counts(payload, start: int, stop: int) -> np.ndarray:
    """Weight histogram of codewords with message index in [start, stop)."""
    p, m, modulus, G_list, n = payload
    ctx = field_new(p, m, modulus)
    kern = _kernel(ctx)
    G = np.array(G_list, dtype=np.int64)
    k = G.shape[0]
    q = ctx.q
    counts = np.zeros(n + 1, dtype=np.int64)
    pos = start
    while pos < stop:
        hi = min(pos + _CHUNK, stop)
        idx = np.arange(pos, hi, dtype=np.int64)
        digits = np.empty((hi - pos, k), dtype=np.int64)
        for j in range(k):
            digits[:, j] = idx % q
            idx //= q
        cw = kern.matmul(digits, G)
        w = np.count_nonzero(cw, axis=1)
        counts += np.bincount(w, minlength=n + 1)
        pos = hi
    return counts


def _enumerate_weights(view: LinearCodeView, budget: int, workers: int) -> tuple[int, ...]:
    if view._weights is not None:
        return view._weights
    total = view.ctx.q**view.k
    if total > budget:
        raise BudgetExceeded(total, budget)
    if view.k == 0:
        counts = np.zeros(view.n + 1, dtype=np.int64)
        counts[0] = 1
    else:
        payload = (
            view.ctx.p,
            view.ctx.m,
            view.ctx.modulus,
            view._idx.tolist(),
            view.n,
        )
        if workers <= 1:
            counts = _scan_counts(payload, 0, total)
        else:
            bounds = [total * i // workers for i in range(workers + 1)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(_scan_counts, payload, bounds[i], bounds[i + 1])
                    for i in range(workers)
                ]
                counts = sum(f.result() for f in futures)
    view._weights = tuple(int(c) for c in counts)
    return view._weights


def weight_enumerator(
    view: LinearCodeView, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> tuple[int, ...]:
    """Counts W[w] of codewords of each Hamming weight w = 0..n.

    W[0] = 1 and sum(W) = q^k.  Raises :class:`BudgetExceeded` when q^k
    exceeds ``budget``.
    """
    return _enumerate_weights(view, budget, workers)


def min_distance(
    view: LinearCodeView, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> int | float:
    """Minimum Hamming weight over the q^k - 1 nonzero codewords.

    For the zero code (k = 0) returns :data:`INFINITE_DISTANCE`.
    """
    if view.k == 0:
        return INFINITE_DISTANCE
    weights = _enumerate_weights(view, budget, workers)
    for w in range(1, view.n + 1):
        if weights[w]:
            return w
    raise AssertionError("unreachable: a nonzero codeword must have positive weight")


def macwilliams_transform(weights: Sequence[int], q: int, k: int) -> tuple[int, ...]:
    """Weight enumerator of the dual code, derived exactly from the primal's.

    W_dual[j] = q^(-k) * sum_i W[i] * K_j(i), with the Krawtchouk values
    K_j(i) = sum_t (-1)^t (q-1)^(j-t) C(i,t) C(n-i,j-t).  All arithmetic is
    integer; the division by q^k must be exact and is asserted.
    """
    n = len(weights) - 1
    total = q**k
    out = []
    for j in range(n + 1):
        acc = 0
        for i, wi in enumerate(weights):
            if not wi:
                continue
            kraw = 0
            for t in range(min(i, j) + 1):
                if j - t > n - i:
                    continue
                kraw += (-1) ** t * (q - 1) ** (j - t) * math.comb(i, t) * math.comb(n - i, j - t)
            acc += wi * kraw
        if acc % total:
            raise AssertionError("MacWilliams transform did not divide exactly")
        out.append(acc // total)
    return tuple(out)


def classify(view: LinearCodeView, budget: int = DEFAULT_BUDGET, workers: int = 1) -> str:
    """Singleton-bound label: "MDS" (d = n-k+1), "near-MDS" (d = n-k), or "other"."""
    if view.k == 0:
        raise ValueError("the zero code has no minimum distance to classify")
    d = min_distance(view, budget, workers)
    if d == view.n - view.k + 1:
        return "MDS"
    if d == view.n - view.k:
        return "near-MDS"
    return "other"
