"""Primitive central idempotents of F_q[y]/<y^l - beta>.

Writing r for the multiplicative order of beta and fixing a root of unity
w of order r*l with w^l = beta (this requires q = 1 mod r*l), the quotient
F_q[y]/<y^(rl) - 1> splits into r*l one-dimensional components with
idempotents indexed by the roots w^j, and F_q[y]/<y^l - beta> into l
components indexed by the roots w^(1 + r*k) of y^l - beta.

Each idempotent is computed twice, by Lagrange interpolation and by a
normalized geometric-sum closed form, and the two are required to agree;
the linking constants between the two families and the reciprocal pairing
(for beta = +-1) are recovered by exact coefficient comparison.  Any
mismatch aborts with :class:`InternalDisagreement`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    BetaNotPlusMinusOne,
    CongruenceFailed,
    IndexOutOfRange,
    InternalDisagreement,
)
from .gf import FieldCtx, FieldElement, find_omega, mul_order
from .poly import Poly, reciprocal


@dataclass(frozen=True)
class IdempotentSystem:
    """All idempotent data for one (field, l, beta) choice.

    ``unity_idempotents`` are the r*l idempotents of F_q[y]/<y^(rl) - 1>;
    ``idempotents`` the l idempotents of F_q[y]/<y^l - beta>, the k-th one
    attached to the root w^(1 + r*k).  ``cofactor`` is Q with
    (y^l - beta) * Q = y^(rl) - 1, and ``cofactor_constants[k]`` the scalar
    c_k with idempotents[k] * Q = c_k * unity_idempotents[1 + r*k].

    For beta = +-1, ``recip_index``/``recip_constants`` describe the exact
    identity reciprocal(idempotents[k]) = b_k * idempotents[recip_index[k]];
    both are None otherwise.
    """

    ctx: FieldCtx
    ell: int
    beta: FieldElement
    beta_order: int
    omega: FieldElement
    exponents: tuple[int, ...]
    cofactor: Poly
    unity_idempotents: tuple[Poly, ...]
    idempotents: tuple[Poly, ...]
    cofactor_constants: tuple[FieldElement, ...]
    recip_index: Optional[tuple[int, ...]]
    recip_constants: Optional[tuple[FieldElement, ...]]

    @property
    def modulus(self) -> Poly:
        """y^l - beta."""
        return Poly.binomial(self.ctx, self.ell, self.beta)


def _lagrange_idempotent(ctx: FieldCtx, roots: list[FieldElement], j: int) -> Poly:
    """prod_{k != j} (y - roots[k]) / (roots[j] - roots[k])."""
    num = Poly.one(ctx)
    den = ctx.one
    for k, rk in enumerate(roots):
        if k == j:
            continue
        num = num * Poly(ctx, [-rk, ctx.one])
        den = den * (roots[j] - rk)
    return num * den.inverse()


def unity_idempotent_closed_form(sys: IdempotentSystem, j: int) -> Poly:
    """Geometric-sum form of the j-th idempotent of F_q[y]/<y^(rl) - 1>:

        (1/(rl)) * sum_{i < rl} (w^(rl - j) y)^i
    """
    rl = sys.beta_order * sys.ell
    if not 0 <= j < rl:
        raise IndexOutOfRange(f"index {j} outside [0, {rl})")
    scale = sys.ctx.element(rl).inverse()
    ratio = sys.omega ** (rl - j)
    coeffs = []
    acc = sys.ctx.one
    for _ in range(rl):
        coeffs.append(acc * scale)
        acc = acc * ratio
    return Poly(sys.ctx, coeffs)


def build_system(ctx: FieldCtx, ell: int, beta: FieldElement) -> IdempotentSystem:
    """Construct and validate the full idempotent system for (ctx, ell, beta).

    Raises :class:`CongruenceFailed` unless q = 1 (mod r*l), and
    :class:`InternalDisagreement` if any of the internal cross-checks
    (closed form vs. interpolation, sum-to-one, linking constants,
    reciprocal pairing) fails.
    """
    if ell < 1:
        raise ValueError(f"l must be positive, got {ell}")
    r = mul_order(beta)  # raises ZeroElement for beta = 0
    rl = r * ell
    if (ctx.q - 1) % rl != 0:
        raise CongruenceFailed(f"q = {ctx.q} is not congruent to 1 mod r*l = {rl}")
    omega = find_omega(ctx, ell, beta)

    unity_roots = [omega**j for j in range(rl)]
    unity = tuple(_lagrange_idempotent(ctx, unity_roots, j) for j in range(rl))

    sys = IdempotentSystem(
        ctx=ctx,
        ell=ell,
        beta=beta,
        beta_order=r,
        omega=omega,
        exponents=tuple((1 + r * k) % rl for k in range(ell)),
        cofactor=Poly.one(ctx),  # placeholder, replaced below
        unity_idempotents=unity,
        idempotents=(),
        cofactor_constants=(),
        recip_index=None,
        recip_constants=None,
    )
    for j in range(rl):
        if unity_idempotent_closed_form(sys, j) != unity[j]:
            raise InternalDisagreement(
                f"unity idempotent {j}: closed form differs from interpolation"
            )
    if sum(unity, Poly.zero(ctx)) != Poly.one(ctx):
        raise InternalDisagreement("unity idempotents do not sum to 1")

    # y^(rl) - 1 = (y^l - beta) * cofactor, exactly
    cofactor, rem = divmod(Poly.binomial(ctx, rl, ctx.one), Poly.binomial(ctx, ell, beta))
    if rem:
        raise InternalDisagreement("y^l - beta does not divide y^(rl) - 1")

    quotient_roots = [omega**e for e in sys.exponents]
    idem = tuple(_lagrange_idempotent(ctx, quotient_roots, k) for k in range(ell))
    if sum(idem, Poly.zero(ctx)) != Poly.one(ctx):
        raise InternalDisagreement("idempotents do not sum to 1")

    # linking constants: idempotents[k] * cofactor = c_k * unity[1 + r*k]
    constants = []
    for k in range(ell):
        prod = idem[k] * cofactor
        zeta = unity[sys.exponents[k]]
        c = prod.leading() / zeta.leading()
        if zeta * c != prod:
            raise InternalDisagreement(f"no scalar links idempotent {k} to its unity form")
        constants.append(c)

    # reciprocal pairing, defined for beta = +-1 only
    recip_index = recip_constants = None
    if beta == ctx.one or beta == -ctx.one:
        target = (
            lambda k: (ell - 2 - k) % ell
            if beta == ctx.one
            else (ell - 1 - k) % ell
        )
        idx, consts = [], []
        for k in range(ell):
            k2 = target(k)
            rec = reciprocal(idem[k])
            b = rec.leading() / idem[k2].leading()
            if idem[k2] * b != rec:
                raise InternalDisagreement(
                    f"reciprocal of idempotent {k} is not a multiple of idempotent {k2}"
                )
            idx.append(k2)
            consts.append(b)
        recip_index = tuple(idx)
        recip_constants = tuple(consts)

    return IdempotentSystem(
        ctx=ctx,
        ell=ell,
        beta=beta,
        beta_order=r,
        omega=omega,
        exponents=sys.exponents,
        cofactor=cofactor,
        unity_idempotents=unity,
        idempotents=idem,
        cofactor_constants=tuple(constants),
        recip_index=recip_index,
        recip_constants=recip_constants,
    )


def shift_eigenvalue(sys: IdempotentSystem, k: int, j: int) -> FieldElement:
    """The scalar (w^(1 + r*k))^j by which y^j acts on the k-th idempotent."""
    if not 0 <= k < sys.ell:
        raise IndexOutOfRange(f"index {k} outside [0, {sys.ell})")
    return (sys.omega ** sys.exponents[k]) ** j


def shift_eigenvalue_holds(sys: IdempotentSystem, k: int, j: int) -> bool:
    """Check e_k(y) * y^j = shift_eigenvalue(k, j) * e_k(y) mod (y^l - beta)."""
    e = sys.idempotents[k]
    lhs = (e * Poly.monomial(sys.ctx, j)) % sys.modulus
    return lhs == e * shift_eigenvalue(sys, k, j)


def reciprocal_idempotent(sys: IdempotentSystem, k: int) -> tuple[int, FieldElement]:
    """Index and scalar with reciprocal(e_k) = b * e_index, for beta = +-1.

    The pairing index is (l-2-k) mod l when beta = 1 and (l-1-k) mod l when
    beta = -1 (in characteristic 2 the two coincide and the beta = 1 rule
    applies).
    """
    if sys.recip_index is None:
        raise BetaNotPlusMinusOne(
            "reciprocal pairing is defined only for beta in {1, -1}"
        )
    if not 0 <= k < sys.ell:
        raise IndexOutOfRange(f"index {k} outside [0, {sys.ell})")
    return sys.recip_index[k], sys.recip_constants[k]
