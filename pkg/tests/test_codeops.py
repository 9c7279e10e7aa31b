import math
import random
from itertools import product

import pytest

from constacode import codeops
from constacode.code2d import CodeSpec, dual_matrix, generator_matrix, validate_spec
from constacode.codeops import (
    INFINITE_DISTANCE,
    LinearCodeView,
    block_twist_shift,
    classify,
    in_row_space,
    macwilliams_transform,
    min_distance,
    nullspace,
    nullspace_view,
    row_space_equal,
    rref,
    weight_enumerator,
)
from constacode.errors import BudgetExceeded
from constacode.gf import field_new
from constacode.idempotent import build_system
from constacode.poly import Poly, parse_poly

F5 = field_new(5)
F7 = field_new(7)
F11 = field_new(11)


def M(ctx, rows):
    return [[ctx.element(v) for v in row] for row in rows]


def brute_weights(ctx, rows, n):
    """Independent oracle: enumerate all messages with plain field arithmetic."""
    counts = [0] * (n + 1)
    elems = list(ctx.elements())
    k = len(rows)
    for msg in product(elems, repeat=k):
        cw = [ctx.zero] * n
        for c, row in zip(msg, rows):
            if c:
                for t in range(n):
                    cw[t] = cw[t] + c * row[t]
        counts[sum(1 for v in cw if v)] += 1
    return tuple(counts)


def example1_views():
    ctx = F11
    sys_ = build_system(ctx, 5, ctx.element(-1))
    spec = validate_spec(
        CodeSpec(ctx=ctx, s=2, ell=5, alpha=ctx.one, beta=ctx.element(-1),
                 divisors=tuple(parse_poly(ctx, t, "x") for t in ("x+1", "x-1", "x-1", "x-1", "x+1")))
    )
    return generator_matrix(spec, sys_), dual_matrix(spec, sys_)


def example4_views():
    ctx = F7
    sys_ = build_system(ctx, 3, ctx.element(-1))
    spec = validate_spec(
        CodeSpec(ctx=ctx, s=3, ell=3, alpha=ctx.element(-1), beta=ctx.element(-1),
                 divisors=tuple(parse_poly(ctx, t, "x") for t in ("x^2-x+1", "x+1", "x^2-x+1")))
    )
    return generator_matrix(spec, sys_), dual_matrix(spec, sys_)


# -- rref / nullspace -----------------------------------------------------------


def test_rref_rank_example1():
    G, _ = example1_views()
    _, rank = rref(F11, G.rows, 10)
    assert rank == 5


def test_rref_zero_and_identity():
    _, rank = rref(F7, M(F7, [[0, 0], [0, 0]]), 2)
    assert rank == 0
    ident = M(F7, [[1, 0], [0, 1]])
    R, rank = rref(F7, ident, 2)
    assert rank == 2 and list(R) == [tuple(r) for r in ident]


def test_rref_is_canonical():
    A = M(F7, [[2, 4, 1], [1, 2, 5]])
    B = M(F7, [[3, 6, 6], [1, 2, 5]])  # row operations on A
    RA, ra = rref(F7, A, 3)
    RB, rb = rref(F7, B, 3)
    assert ra == rb == 2 and RA == RB


def test_nullspace_dimensions_and_orthogonality():
    A = M(F7, [[1, 2, 3, 4], [0, 1, 1, 6]])
    N = nullspace(F7, A, 4)
    assert len(N) == 2
    for v in N:
        for row in A:
            assert not sum((a * b for a, b in zip(row, v)), F7.zero)


def test_nullspace_trivial_cases():
    full = M(F7, [[1, 0], [0, 1]])
    assert nullspace(F7, full, 2) == ()
    empty = nullspace(F7, [], 3)
    assert len(empty) == 3  # identity basis of the whole space
    view = LinearCodeView(F7, empty, 3)
    assert view.k == 3


def test_double_nullspace_returns_row_space():
    rng = random.Random(42)
    for _ in range(25):
        n = rng.randrange(2, 7)
        k = rng.randrange(0, n + 1)
        rows = [[F7.nth(rng.randrange(7)) for _ in range(n)] for _ in range(k)]
        R, rank = rref(F7, rows, n)
        N = nullspace(F7, rows, n)
        NN = nullspace(F7, N, n)
        R2, rank2 = rref(F7, NN, n)
        assert rank == rank2 and R == R2


def test_view_rejects_dependent_rows():
    with pytest.raises(ValueError):
        LinearCodeView(F7, M(F7, [[1, 2], [2, 4]]), 2)


# -- enumeration -----------------------------------------------------------------


def test_min_distance_example1():
    G, H = example1_views()
    assert min_distance(G) == 6
    assert min_distance(H) == 6


def test_min_distance_example4():
    G, H = example4_views()
    assert min_distance(G) == 4
    assert min_distance(H) == 3


def test_min_distance_zero_code():
    view = LinearCodeView(F7, [], 4)
    assert min_distance(view) == INFINITE_DISTANCE
    assert min_distance(view) != 0
    assert weight_enumerator(view) == (1, 0, 0, 0, 0)


def test_budget_exceeded_reports_sizes():
    G, _ = example1_views()
    with pytest.raises(BudgetExceeded) as exc:
        min_distance(G, budget=1000)
    assert exc.value.required == 11**5
    assert exc.value.budget == 1000


def test_weights_match_brute_oracle():
    rng = random.Random(17)
    for ctx in (F5, F7, field_new(3, 2, [1, 0, 1])):
        for _ in range(6):
            n = rng.randrange(2, 6)
            kmax = 3 if ctx.q <= 7 else 2
            raw = [[ctx.nth(rng.randrange(ctx.q)) for _ in range(n)] for _ in range(rng.randrange(1, kmax + 1))]
            basis, rank = rref(ctx, raw, n)
            if rank == 0:
                continue
            view = LinearCodeView(ctx, basis, n)
            assert weight_enumerator(view) == brute_weights(ctx, view.rows, n)


def test_weight_enumerator_invariants():
    G, H = example1_views()
    W = weight_enumerator(G)
    assert W[0] == 1
    assert sum(W) == 11**5
    assert next(w for w in range(1, 11) if W[w]) == min_distance(G)
    assert W == weight_enumerator(H)


def test_worker_partitioning_agrees():
    G, _ = example1_views()
    seq = weight_enumerator(G)
    G2 = LinearCodeView(F11, G.rows, 10)
    par = weight_enumerator(G2, workers=4)
    assert seq == par


def test_classify_labels():
    G, H = example1_views()
    assert classify(G) == "MDS"
    ctx = F5
    sys_ = build_system(ctx, 2, ctx.element(-1))
    spec = validate_spec(
        CodeSpec(ctx=ctx, s=2, ell=2, alpha=ctx.one, beta=ctx.element(-1),
                 divisors=(parse_poly(ctx, "x-1", "x"), parse_poly(ctx, "x+1", "x")))
    )
    assert classify(generator_matrix(spec, sys_)) == "near-MDS"
    # [9,4,4] has Singleton defect 2: neither MDS nor near-MDS
    G4, _ = example4_views()
    assert classify(G4) == "other"
    with pytest.raises(ValueError):
        classify(LinearCodeView(F7, [], 3))


def test_macwilliams_matches_direct_enumeration():
    rng = random.Random(23)
    for _ in range(10):
        n = rng.randrange(2, 6)
        raw = [[F5.nth(rng.randrange(5)) for _ in range(n)] for _ in range(rng.randrange(1, 4))]
        basis, rank = rref(F5, raw, n)
        if rank == 0:
            continue
        view = LinearCodeView(F5, basis, n)
        dual = nullspace_view(view)
        got = macwilliams_transform(weight_enumerator(view), 5, view.k)
        assert got == weight_enumerator(dual)


def test_macwilliams_self_dual_fixed_point():
    ctx = F5
    sys_ = build_system(ctx, 2, ctx.element(-1))
    spec = validate_spec(
        CodeSpec(ctx=ctx, s=2, ell=2, alpha=ctx.one, beta=ctx.element(-1),
                 divisors=(parse_poly(ctx, "x-1", "x"), parse_poly(ctx, "x+1", "x")))
    )
    W = weight_enumerator(generator_matrix(spec, sys_))
    assert macwilliams_transform(W, 5, 2) == W


# -- row-space utilities -----------------------------------------------------------


def test_row_space_equal_and_membership():
    a = LinearCodeView(F7, M(F7, [[1, 1, 0], [0, 1, 1]]), 3)
    b = LinearCodeView(F7, M(F7, [[1, 2, 1], [0, 1, 1]]), 3)
    c = LinearCodeView(F7, M(F7, [[1, 0, 0], [0, 1, 1]]), 3)
    assert row_space_equal(a, b)
    assert not row_space_equal(a, c)
    assert in_row_space(a, M(F7, [[2, 3, 1]]))
    assert not in_row_space(a, M(F7, [[1, 0, 0]]))
    assert in_row_space(a, [])


def test_block_twist_shift():
    vec = [F7.element(v) for v in (1, 2, 3, 4, 5, 6)]
    out = block_twist_shift(vec, 3, F7.element(2))
    assert [e.val for e in out] == [3, 5, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        block_twist_shift(vec, 4, F7.one)


def test_extension_field_enumeration():
    F9 = field_new(3, 2, [1, 0, 1])
    t = F9.nth(3)  # the generator
    rows = [
        [F9.one, F9.zero, t],
        [F9.zero, F9.one, t * t],
    ]
    view = LinearCodeView(F9, rows, 3)
    assert weight_enumerator(view) == brute_weights(F9, view.rows, 3)
    d = min_distance(view)
    assert 1 <= d <= 3
