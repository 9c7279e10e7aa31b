"""Univariate polynomial ring over a finite field.

Dense ascending-coefficient representation with exact arithmetic, plus the
operations the code constructions need: reciprocals, complete factorization
of binomials x^n - c, and enumeration of monic divisors.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DivisionByZeroPoly,
    FieldMismatch,
    ZeroConstant,
    ZeroPolynomial,
)
from .gf import FieldCtx, FieldElement, find_omega, mul_order

# Fixed default seed for the randomized equal-degree splitting step, so
# factorizations are reproducible run to run.  Overridable per call.
DEFAULT_FACTOR_SEED = 1729


class Poly:
    """Polynomial over F_q; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are trimmed; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[FieldElement]):
        cs = list(coeffs)
        for c in cs:
            if c.ctx is not ctx:
                raise FieldMismatch("coefficient from a different field context")
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints: Sequence[int]) -> "Poly":
        return cls(ctx, [ctx.element(v) for v in ints])

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [ctx.one])

    @classmethod
    def constant(cls, c: FieldElement) -> "Poly":
        return cls(c.ctx, [c])

    @classmethod
    def monomial(cls, ctx: FieldCtx, degree: int, coeff: FieldElement | None = None) -> "Poly":
        coeff = ctx.one if coeff is None else coeff
        return cls(ctx, [ctx.zero] * degree + [coeff])

    @classmethod
    def binomial(cls, ctx: FieldCtx, n: int, c: FieldElement) -> "Poly":
        """x^n - c."""
        return cls(ctx, [-c] + [ctx.zero] * (n - 1) + [ctx.one])

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if i < len(self.coeffs) else self.ctx.zero

    # -- ring arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if other.ctx is not self.ctx:
            raise FieldMismatch("polynomials over different field contexts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Poly(self.ctx, [c * other for c in self.coeffs])
        self._check(other)
        if not self or not other:
            return Poly.zero(self.ctx)
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if not other:
            raise DivisionByZeroPoly("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = other.coeffs[-1].inverse()
        quot = [self.ctx.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            factor = rem[-1] * lead_inv
            shift = len(rem) - 1 - db
            quot[shift] = factor
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * b
            while rem and not rem[-1]:
                rem.pop()
        return Poly(self.ctx, quot), Poly(self.ctx, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        acc = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def pow_mod(self, e: int, mod: "Poly") -> "Poly":
        acc = Poly.one(self.ctx) % mod
        base = self % mod
        while e:
            if e & 1:
                acc = (acc * base) % mod
            base = (base * base) % mod
            e >>= 1
        return acc

    # -- other operations -----------------------------------------------------

    def eval(self, point: FieldElement) -> FieldElement:
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(
            self.ctx,
            [self.ctx.element(i) * c for i, c in enumerate(self.coeffs)][1:],
        )

    def monic(self) -> "Poly":
        if not self:
            return self
        return self * self.coeffs[-1].inverse()

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(f, 0) is monic(f)."""
    while b:
        a, b = b, a % b
    return a.monic()


def reciprocal(f: Poly) -> Poly:
    """x^(deg f) * f(1/x): the coefficient vector reversed, kept exact.

    The result is not normalized; its degree drops below deg(f) exactly
    when f(0) = 0.  Use ``.monic()`` where scale does not matter.
    """
    if not f:
        raise ZeroPolynomial("the zero polynomial has no reciprocal")
    return Poly(f.ctx, tuple(reversed(f.coeffs)))


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity), factors monic irreducible."""

    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def product(self) -> Poly:
        out = Poly.constant(self.unit)
        for f, mult in self.factors:
            out = out * f**mult
        return out


# ---------------------------------------------------------------------------
# Factorization of x^n - c.


def factor_binomial(ctx: FieldCtx, n: int, c: FieldElement, seed: int | None = None) -> Factorization:
    """Complete factorization of x^n - c into monic irreducibles over F_q.

    When q = 1 (mod n * ord(c)) the binomial splits into distinct linear
    factors (x - w^(1 + ord(c)*k)) for a root of unity w of order n*ord(c)
    with w^n = c; that closed form is used directly.  Otherwise a general
    routine runs: squarefree decomposition, then distinct-degree splitting,
    then randomized equal-degree splitting (seeded, reproducible).
    """
    if n < 1:
        raise ValueError("binomial exponent must be positive")
    if not c:
        raise ZeroConstant("x^n - c requires c != 0")
    if (ctx.q - 1) % (n * mul_order(c)) == 0:
        r = mul_order(c)
        omega = find_omega(ctx, n, c)
        factors = tuple(
            (Poly(ctx, [-(omega ** (1 + r * k)), ctx.one]), 1) for k in range(n)
        )
        return Factorization(ctx.one, factors)
    rng = random.Random(DEFAULT_FACTOR_SEED if seed is None else seed)
    parts = _factor_monic(Poly.binomial(ctx, n, c), rng)
    return Factorization(ctx.one, tuple(parts))


def _factor_monic(f: Poly, rng: random.Random) -> list[tuple[Poly, int]]:
    """General complete factorization of a monic polynomial."""
    parts: list[tuple[Poly, int]] = []
    for g, mult in _squarefree_parts(f):
        for h, d in _distinct_degree_parts(g):
            for irr in _equal_degree_split(h, d, rng):
                parts.append((irr, mult))
    parts.sort(key=lambda fm: _poly_sort_key(fm[0]))
    return parts


def _poly_sort_key(f: Poly):
    return (f.degree, tuple(f.ctx.index_of(c) for c in f.coeffs))


def _pth_root(f: Poly) -> Poly:
    """Inverse of the Frobenius on polynomials: g with g^p = f.

    Only called when f' = 0, i.e. f has nonzero coefficients solely at
    exponents divisible by p; each surviving coefficient a maps to
    a^(p^(m-1)), its p-th root in F_{p^m}.
    """
    ctx = f.ctx
    e = ctx.p ** (ctx.m - 1)
    return Poly(ctx, [f.coeff(i) ** e for i in range(0, f.degree + 1, ctx.p)])


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Yun-style decomposition in characteristic p: f = prod g_i^i, g_i squarefree."""
    ctx = f.ctx
    out: dict[int, Poly] = {}

    def put(g: Poly, mult: int) -> None:
        if g.degree >= 1:
            out[mult] = out[mult] * g if mult in out else g

    def recurse(g: Poly, scale: int) -> None:
        d = g.derivative()
        if not d:
            recurse(_pth_root(g), scale * ctx.p)
            return
        c = poly_gcd(g, d)
        w = g // c
        i = 1
        while w.degree >= 1:
            y = poly_gcd(w, c)
            put(w // y, i * scale)
            w = y
            c = c // y
            i += 1
        if c.degree >= 1:
            recurse(_pth_root(c), scale * ctx.p)

    recurse(f.monic(), 1)
    return [(g, m) for m, g in sorted(out.items())]


def _distinct_degree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree f into products of irreducibles of equal degree."""
    ctx = f.ctx
    out = []
    h = Poly.monomial(ctx, 1) % f
    d = 0
    rem = f
    while rem.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(ctx.q, rem)
        g = poly_gcd(h - Poly.monomial(ctx, 1), rem)
        if g.degree >= 1:
            out.append((g, d))
            rem = rem // g
            h = h % rem
    if rem.degree >= 1:
        out.append((rem, rem.degree))
    return out


def _equal_degree_split(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    ctx = f.ctx
    if f.degree == d:
        return [f.monic()]
    while True:
        a = Poly(ctx, [ctx.nth(rng.randrange(ctx.q)) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = poly_gcd(a, f)
        if g.degree < 1:
            if ctx.p == 2:
                # trace map onto GF(2) splits in even characteristic
                t = a % f
                acc = t
                for _ in range(d * ctx.m - 1):
                    t = (t * t) % f
                    acc = acc + t
                g = poly_gcd(acc, f)
            else:
                power = a.pow_mod((ctx.q**d - 1) // 2, f)
                g = poly_gcd(power - Poly.one(ctx), f)
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g.monic(), d, rng) + _equal_degree_split(
                (f // g).monic(), d, rng
            )


def monic_divisors(fact: Factorization) -> list[Poly]:
    """All monic divisors of the factored polynomial.

    Count is prod(multiplicity + 1); ordered by degree, then by the
    coefficient vector (ascending exponents, canonical element indices).
    """
    if not fact.factors:
        ctx = fact.unit.ctx
        return [Poly.one(ctx)]
    ctx = fact.factors[0][0].ctx
    divisors = [Poly.one(ctx)]
    for f, mult in fact.factors:
        powers = [f**e for e in range(mult + 1)]
        divisors = [d * fp for d in divisors for fp in powers]
    divisors.sort(key=_poly_sort_key)
    return divisors


# ---------------------------------------------------------------------------
# Text syntax: terms like ``4y^4+8y^3+5y^2+10y+9`` with canonical residues.

_TERM_RE = re.compile(r"^(\d+)?(?:([a-zA-Z])(?:\^(\d+))?)?$")


def format_poly(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    ctx = f.ctx
    pieces = []
    for i in range(f.degree, -1, -1):
        c = f.coeff(i)
        if not c:
            continue
        label = str(ctx.index_of(c))
        if i == 0:
            pieces.append(label)
        else:
            head = "" if c == ctx.one else label
            power = var if i == 1 else f"{var}^{i}"
            pieces.append(head + power)
    return "+".join(pieces)


def parse_poly(ctx: FieldCtx, text: str, var: str | None = None) -> Poly:
    """Parse the text syntax; accepts negative coefficients (reduced mod p).

    If ``var`` is given, any other variable letter is rejected; otherwise the
    letter is inferred from the text.
    """
    s = text.replace(" ", "").replace("−", "-")
    if not s:
        raise ValueError("empty polynomial text")
    # split into signed terms
    terms = []
    sign = 1
    buf = ""
    for ch in s:
        if ch in "+-" and buf:
            terms.append((sign, buf))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and not buf:
            if ch == "-":
                sign = -sign
        else:
            buf += ch
    if not buf:
        raise ValueError(f"dangling sign in polynomial text {text!r}")
    terms.append((sign, buf))

    coeffs: dict[int, int] = {}
    seen_var = var
    for sign, term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {term!r} in polynomial text {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        letter = m.group(2)
        if letter is not None:
            if seen_var is None:
                seen_var = letter
            elif letter != seen_var:
                raise ValueError(
                    f"unexpected variable {letter!r} (expected {seen_var!r}) in {text!r}"
                )
            exp = int(m.group(3)) if m.group(3) is not None else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff

    out = [0] * (max(coeffs) + 1)
    for e, v in coeffs.items():
        out[e] = v
    elems = []
    for v in out:
        e = ctx.nth(abs(v) % ctx.q)
        elems.append(-e if v < 0 else e)
    return Poly(ctx, elems)
