import random

import pytest

from constacode import codeops
from constacode.code2d import (
    CodeSpec,
    RingElement2D,
    c1_to_c2_permutation,
    dual_matrix,
    flatten_c1,
    flatten_c2,
    generator_matrix,
    generators,
    is_self_dual,
    orthogonality_criterion_check,
    parse_spec_text,
    ring_mul,
    sigma_shift,
    tau_shift,
    theorem5_screen,
    validate_spec,
)
from constacode.errors import (
    AlphaNotPlusMinusOne,
    BetaNotPlusMinusOne,
    DivisorCheckFailed,
    MismatchedSystem,
    PreconditionUnmet,
    SpecFileError,
    ZeroAlphaBeta,
)
from constacode.gf import field_new
from constacode.idempotent import build_system
from constacode.poly import Poly, parse_poly

F5 = field_new(5)
F7 = field_new(7)
F11 = field_new(11)


def P(ctx, text):
    return parse_poly(ctx, text, "x")


def spec_example1():
    return CodeSpec(
        ctx=F11,
        s=2,
        ell=5,
        alpha=F11.one,
        beta=F11.element(-1),
        divisors=tuple(P(F11, t) for t in ("x+1", "x-1", "x-1", "x-1", "x+1")),
    )


def spec_example3():
    return CodeSpec(
        ctx=F7,
        s=3,
        ell=2,
        alpha=F7.element(-1),
        beta=F7.element(2),
        divisors=(P(F7, "x^2-x+1"), P(F7, "x+1")),
    )


def spec_example5():
    return CodeSpec(
        ctx=F5,
        s=2,
        ell=2,
        alpha=F5.one,
        beta=F5.element(-1),
        divisors=(P(F5, "x-1"), P(F5, "x+1")),
    )


@pytest.fixture(scope="module")
def sys11():
    return build_system(F11, 5, F11.element(-1))


@pytest.fixture(scope="module")
def sys7b2():
    return build_system(F7, 2, F7.element(2))


@pytest.fixture(scope="module")
def sys5():
    return build_system(F5, 2, F5.element(-1))


# -- validation ---------------------------------------------------------------


def test_validate_accepts_example1():
    spec = validate_spec(spec_example1())
    assert spec.degrees == (1, 1, 1, 1, 1)
    assert spec.dimension == 5


def test_validate_rejects_non_divisor():
    spec = CodeSpec(
        ctx=F11, s=2, ell=2, alpha=F11.one, beta=F11.one,
        divisors=(P(F11, "x^2"), P(F11, "x+1")),
    )
    with pytest.raises(DivisorCheckFailed) as exc:
        validate_spec(spec)
    assert exc.value.index == 0


def test_validate_rejects_non_monic():
    spec = CodeSpec(
        ctx=F11, s=2, ell=2, alpha=F11.one, beta=F11.one,
        divisors=(P(F11, "2x+2"), P(F11, "x+1")),
    )
    with pytest.raises(DivisorCheckFailed):
        validate_spec(spec)


def test_validate_unit_divisors():
    spec = validate_spec(
        CodeSpec(
            ctx=F11, s=2, ell=2, alpha=F11.one, beta=F11.one,
            divisors=(Poly.one(F11), Poly.one(F11)),
        )
    )
    assert spec.degrees == (0, 0)


def test_validate_zero_twists():
    with pytest.raises(ZeroAlphaBeta):
        validate_spec(
            CodeSpec(ctx=F11, s=2, ell=1, alpha=F11.zero, beta=F11.one,
                     divisors=(Poly.one(F11),))
        )


# -- generators and matrices ---------------------------------------------------


def test_generators_example3(sys7b2):
    spec = validate_spec(spec_example3())
    gens = generators(spec, sys7b2)
    want0 = RingElement2D.from_xy_product(
        F7, 3, 2, spec.alpha, spec.beta, P(F7, "x^2-x+1"), parse_poly(F7, "6y+4", "y")
    )
    want1 = RingElement2D.from_xy_product(
        F7, 3, 2, spec.alpha, spec.beta, P(F7, "x+1"), parse_poly(F7, "y+4", "y")
    )
    assert gens == (want0, want1)


def test_generators_of_unit_divisors_sum_to_one(sys11):
    spec = validate_spec(
        CodeSpec(ctx=F11, s=2, ell=5, alpha=F11.one, beta=F11.element(-1),
                 divisors=tuple(Poly.one(F11) for _ in range(5)))
    )
    gens = generators(spec, sys11)
    total = RingElement2D.zero(F11, 2, 5)
    for g in gens:
        total = total + g
    assert total == RingElement2D.from_xy_product(
        F11, 2, 5, spec.alpha, spec.beta, Poly.one(F11), Poly.one(F11)
    )


def test_generator_matrix_shapes(sys11):
    spec = validate_spec(spec_example1())
    G = generator_matrix(spec, sys11)
    assert (G.n, G.k) == (10, 5)
    # whole-ring code
    full = validate_spec(
        CodeSpec(ctx=F11, s=2, ell=5, alpha=F11.one, beta=F11.element(-1),
                 divisors=tuple(Poly.one(F11) for _ in range(5)))
    )
    assert generator_matrix(full, sys11).k == 10
    # zero code
    shell = Poly.binomial(F11, 2, F11.one)
    zero = validate_spec(
        CodeSpec(ctx=F11, s=2, ell=5, alpha=F11.one, beta=F11.element(-1),
                 divisors=tuple(shell for _ in range(5)))
    )
    assert generator_matrix(zero, sys11).k == 0


def test_generator_matrix_mismatched_system(sys5):
    spec = validate_spec(spec_example1())
    with pytest.raises(MismatchedSystem):
        generator_matrix(spec, sys5)


def test_dual_matrix_example1(sys11):
    spec = validate_spec(spec_example1())
    G = generator_matrix(spec, sys11)
    H = dual_matrix(spec, sys11)
    assert H.k == 5
    # explicit dual rows carry the exact non-normalized reciprocals
    first = RingElement2D.from_xy_product(
        F11, 2, 5, spec.alpha, spec.beta,
        P(F11, "1-x"), parse_poly(F11, "9y^4+10y^3+5y^2+8y+4", "y"),
    )
    assert H.rows[0] == flatten_c1(first)
    # orthogonality G . H^T = 0
    for g in G.rows:
        for h in H.rows:
            assert not sum((a * b for a, b in zip(g, h)), F11.zero)
    assert codeops.row_space_equal(H, codeops.nullspace_view(G))


def test_dual_matrix_skips_unit_divisors(sys11):
    spec = validate_spec(
        CodeSpec(ctx=F11, s=2, ell=5, alpha=F11.one, beta=F11.element(-1),
                 divisors=tuple(P(F11, t) for t in ("x+1", "x-1", "1", "x-1", "x+1")))
    )
    H = dual_matrix(spec, sys11)
    assert H.k == 4  # the unit divisor contributes no rows
    full = validate_spec(
        CodeSpec(ctx=F11, s=2, ell=5, alpha=F11.one, beta=F11.element(-1),
                 divisors=tuple(Poly.one(F11) for _ in range(5)))
    )
    assert dual_matrix(full, sys11).k == 0


def test_dual_matrix_refuses_general_beta(sys7b2):
    spec = validate_spec(spec_example3())
    with pytest.raises(BetaNotPlusMinusOne):
        dual_matrix(spec, sys7b2)


def test_dual_matrix_refuses_general_alpha():
    F13 = field_new(13)
    sys_ = build_system(F13, 1, F13.one)
    spec = validate_spec(
        CodeSpec(ctx=F13, s=2, ell=1, alpha=F13.element(2), beta=F13.one,
                 divisors=(Poly.one(F13),))
    )
    with pytest.raises(AlphaNotPlusMinusOne):
        dual_matrix(spec, sys_)


# -- self-duality ----------------------------------------------------------------


def test_is_self_dual_example5(sys5):
    rep = is_self_dual(validate_spec(spec_example5()), sys5)
    assert rep.verdict and rep.dimension_ok
    assert sorted(rep.pair_witnesses) == [0, 1]
    # witnesses reconstruct the defining identities exactly
    spec = spec_example5()
    shell = Poly.binomial(F5, 2, F5.one)
    from constacode.poly import reciprocal

    for k, wit in rep.pair_witnesses.items():
        k2 = (spec.ell - 1 - k) % spec.ell
        assert reciprocal(shell // spec.divisors[k]) == wit.forward * spec.divisors[k2]
        assert spec.divisors[k] == wit.backward * reciprocal(shell // spec.divisors[k2])


def test_is_self_dual_example1_false(sys11):
    rep = is_self_dual(validate_spec(spec_example1()), sys11)
    assert rep.dimension_ok and not rep.verdict
    assert not rep.pair_witnesses


def test_is_self_dual_example6():
    F13 = field_new(13)
    sys_ = build_system(F13, 6, F13.element(-1))
    spec = validate_spec(
        CodeSpec(ctx=F13, s=2, ell=6, alpha=F13.one, beta=F13.element(-1),
                 divisors=tuple(P(F13, t) for t in ("x-1", "x-1", "x-1", "x+1", "x+1", "x+1")))
    )
    assert is_self_dual(spec, sys_).verdict


def test_is_self_dual_requires_pm_one(sys7b2):
    with pytest.raises(BetaNotPlusMinusOne):
        is_self_dual(validate_spec(spec_example3()), sys7b2)


def test_theorem5_screen():
    spec = CodeSpec(ctx=F11, s=2, ell=2, alpha=F11.one, beta=F11.one,
                    divisors=(Poly.one(F11), Poly.one(F11)))
    assert theorem5_screen(spec) is True
    spec_odd = CodeSpec(ctx=F7, s=3, ell=1, alpha=F7.element(-1), beta=F7.one,
                        divisors=(Poly.one(F7),))
    assert theorem5_screen(spec_odd) is True
    spec_gcd = CodeSpec(ctx=F5, s=5, ell=1, alpha=F5.one, beta=F5.one,
                        divisors=(Poly.one(F5),))
    assert theorem5_screen(spec_gcd) is False
    with pytest.raises(PreconditionUnmet):
        theorem5_screen(
            CodeSpec(ctx=F5, s=2, ell=2, alpha=F5.one, beta=F5.element(-1),
                     divisors=(Poly.one(F5), Poly.one(F5))))
    with pytest.raises(PreconditionUnmet):
        theorem5_screen(
            CodeSpec(ctx=F7, s=2, ell=1, alpha=F7.element(-1), beta=F7.one,
                     divisors=(Poly.one(F7),)))


# -- shifts, flattenings, products -------------------------------------------------


def _random_elem(rng, ctx, s, ell):
    return RingElement2D(
        ctx, [[ctx.nth(rng.randrange(ctx.q)) for _ in range(ell)] for _ in range(s)]
    )


def test_shift_orders_and_commutation():
    rng = random.Random(3)
    alpha, beta = F7.element(-1), F7.element(2)
    for _ in range(20):
        c = _random_elem(rng, F7, 3, 2)
        out = c
        for _ in range(3):
            out = sigma_shift(out, alpha)
        assert out == c.scaled(alpha)
        out = c
        for _ in range(2):
            out = tau_shift(out, beta)
        assert out == c.scaled(beta)
        assert sigma_shift(tau_shift(c, beta), alpha) == tau_shift(sigma_shift(c, alpha), beta)


def test_shifts_are_monomial_multiplications():
    rng = random.Random(4)
    alpha, beta = F7.element(-1), F7.element(2)
    x = RingElement2D.from_xy_product(F7, 3, 2, alpha, beta, P(F7, "x"), Poly.one(F7))
    y = RingElement2D.from_xy_product(F7, 3, 2, alpha, beta, Poly.one(F7), parse_poly(F7, "y", "y"))
    for _ in range(10):
        c = _random_elem(rng, F7, 3, 2)
        assert sigma_shift(c, alpha) == ring_mul(x, c, alpha, beta)
        assert tau_shift(c, beta) == ring_mul(y, c, alpha, beta)


def test_flatten_example1(sys11):
    spec = validate_spec(spec_example1())
    g0 = generators(spec, sys11)[0]
    assert [e.val for e in flatten_c1(g0)] == [9, 10, 5, 8, 4, 9, 10, 5, 8, 4]
    assert [e.val for e in flatten_c2(g0)] == [9, 9, 10, 10, 5, 5, 8, 8, 4, 4]
    zero = RingElement2D.zero(F11, 2, 5)
    assert all(not e for e in flatten_c1(zero))


def test_flatten_roundtrip_and_permutation():
    rng = random.Random(9)
    for s, ell in [(2, 5), (3, 2), (4, 4)]:
        c = _random_elem(rng, F7, s, ell)
        v1, v2 = flatten_c1(c), flatten_c2(c)
        assert RingElement2D.from_flat_c1(F7, s, ell, v1) == c
        assert RingElement2D.from_flat_c2(F7, s, ell, v2) == c
        perm = c1_to_c2_permutation(s, ell)
        assert tuple(v1[p] for p in perm) == v2


def test_ring_mul_identity_and_annihilators(sys11):
    spec = validate_spec(spec_example1())
    one = RingElement2D.from_xy_product(
        F11, 2, 5, spec.alpha, spec.beta, Poly.one(F11), Poly.one(F11)
    )
    rng = random.Random(12)
    c = _random_elem(rng, F11, 2, 5)
    assert ring_mul(c, one, spec.alpha, spec.beta) == c
    # p_j e_j annihilates its complement, and distinct idempotents annihilate
    shell = Poly.binomial(F11, 2, F11.one)
    gens = generators(spec, sys11)
    for j, pj in enumerate(spec.divisors):
        comp = RingElement2D.from_xy_product(
            F11, 2, 5, spec.alpha, spec.beta, shell // pj, sys11.idempotents[j]
        )
        assert not ring_mul(gens[j], comp, spec.alpha, spec.beta)
    e0 = RingElement2D.from_xy_product(
        F11, 2, 5, spec.alpha, spec.beta, Poly.one(F11), sys11.idempotents[0]
    )
    e1 = RingElement2D.from_xy_product(
        F11, 2, 5, spec.alpha, spec.beta, Poly.one(F11), sys11.idempotents[1]
    )
    assert not ring_mul(e0, e1, spec.alpha, spec.beta)


def test_orthogonality_criterion_matches_ring_mul():
    rng = random.Random(77)
    for _ in range(120):
        s = rng.randrange(1, 4)
        ell = rng.randrange(1, 4)
        alpha = F7.nth(rng.randrange(1, 7))
        beta = F7.nth(rng.randrange(1, 7))
        f = _random_elem(rng, F7, s, ell)
        g = _random_elem(rng, F7, s, ell)
        assert orthogonality_criterion_check(f, g, alpha, beta) == (
            not ring_mul(f, g, alpha, beta)
        )


# -- code description files ----------------------------------------------------


GOOD_SPEC = """
# comment
p = 7
s = 3
l = 2
alpha = -1
beta = 2
divisors = x^2-x+1, x+1
"""


def test_parse_spec_text_good():
    spec = validate_spec(parse_spec_text(GOOD_SPEC))
    assert (spec.s, spec.ell) == (3, 2)
    assert spec.alpha == F7.element(-1).val  # same residue, different ctx
    assert spec.divisors[0].degree == 2


def test_parse_spec_text_errors_carry_line_numbers():
    with pytest.raises(SpecFileError) as exc:
        parse_spec_text("p = 7\nwat\n")
    assert exc.value.line == 2
    with pytest.raises(SpecFileError) as exc:
        parse_spec_text("p = 7\nbogus_key = 3\n")
    assert exc.value.line == 2
    with pytest.raises(SpecFileError) as exc:
        parse_spec_text("p = 7\np = 11\n")
    assert exc.value.line == 2
    with pytest.raises(SpecFileError):
        parse_spec_text("p = 7\ns = 2\nl = 2\nalpha = 1\nbeta = 1\n")  # no divisors
    with pytest.raises(SpecFileError):
        parse_spec_text(GOOD_SPEC.replace("x^2-x+1, x+1", "x+1"))  # count != l


def test_parse_spec_text_extension_field():
    text = "p = 3\nm = 2\nmodulus = x^2+1\ns = 2\nl = 2\nalpha = 1\nbeta = -1\ndivisors = 1, 1\n"
    spec = parse_spec_text(text)
    assert spec.ctx.q == 9
    validate_spec(spec)
