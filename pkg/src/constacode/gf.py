"""Exact arithmetic in finite fields F_{p^m}.

Prime fields store elements as integer residues in [0, p).  Extension
fields (m > 1) store coefficient vectors over F_p reduced modulo a
user-supplied monic irreducible modulus; no built-in modulus tables are
shipped.  Contexts compare by identity: elements created under two
separately constructed contexts never interoperate, even for equal
(p, m, modulus).
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    CongruenceFailed,
    FieldMismatch,
    MissingModulus,
    NotPrime,
    ReducibleModulus,
    ZeroElement,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Small polynomial helpers over F_p on plain int lists (ascending
# coefficients).  These bootstrap the extension-field representation and the
# modulus irreducibility check before FieldElement values exist.


def _ip_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _ip_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ip_trim(out)


def _ip_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    # mod is monic
    r = list(a)
    dm = len(mod) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        if lead:
            Shift = len(r) - 1 - dm
            for i, c in enumerate(mod):
                r[Shift + i] = (r[Shift + i] - lead * c) % p
        _ip_trim(r)
        if not r:
            break
    return r


def _ip_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = _ip_mod(base, mod, p)
    while e:
        if e & 1:
            result = _ip_mod(_ip_mul(result, b, p), mod, p)
        b = _ip_mod(_ip_mul(b, b, p), mod, p)
        e >>= 1
    return result


def _ip_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _ip_mod(a, _ip_monic(b, p), p)
        if b:
            b = _ip_monic(b, p)
    return _ip_monic(a, p) if a else []


def _ip_monic(a: Sequence[int], p: int) -> list[int]:
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _modulus_is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Rabin test: x^(p^m) = x mod f, and gcd(x^(p^(m/t)) - x, f) = 1."""
    m = len(mod) - 1
    x = [0, 1]
    xq = _ip_powmod(x, p**m, mod, p)
    if _ip_trim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)]):
        return False
    for t in _prime_factors(m):
        xe = _ip_powmod(x, p ** (m // t), mod, p)
        diff = _ip_trim([(a - b) % p for a, b in itertools.zip_longest(xe, x, fillvalue=0)])
        if _ip_gcd(diff, mod, p) != [1]:
            return False
    return True


# ---------------------------------------------------------------------------


class FieldCtx:
    """The finite field F_{p^m}.

    ``modulus`` (ascending coefficients over F_p, monic, degree m) is
    required exactly when m > 1.  Use :func:`field_new` rather than the
    constructor directly.
    """

    __slots__ = ("p", "m", "q", "modulus", "_kernel")

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not isinstance(p, int) or not _is_prime(p):
            raise NotPrime(f"characteristic {p!r} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be positive, got {m}")
        self.p = p
        self.m = m
        self.q = p**m
        self._kernel = None  # vectorized-arithmetic cache, set lazily by codeops
        if m == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                raise MissingModulus(f"F_{p}^{m} requires an irreducible modulus")
            mod = [int(c) % p for c in modulus]
            while mod and mod[-1] == 0:
                mod.pop()
            if len(mod) - 1 != m:
                raise ReducibleModulus(
                    f"modulus must have degree {m}, got degree {len(mod) - 1}"
                )
            if mod[-1] != 1:
                raise ReducibleModulus("modulus must be monic")
            if not _modulus_is_irreducible(mod, p):
                raise ReducibleModulus("modulus is reducible over F_p")
            self.modulus = tuple(mod)

    # -- element construction ------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        """Image of the integer ``value`` (reduced mod p) in this field."""
        v = int(value) % self.p
        if self.m == 1:
            return FieldElement(self, v)
        return FieldElement(self, (v,) + (0,) * (self.m - 1))

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        """Element with the given coefficient vector over F_p (length <= m)."""
        c = [int(v) % self.p for v in coeffs]
        if len(c) > self.m:
            raise ValueError(f"coefficient vector longer than degree {self.m}")
        c += [0] * (self.m - len(c))
        if self.m == 1:
            return FieldElement(self, c[0])
        return FieldElement(self, tuple(c))

    def nth(self, index: int) -> "FieldElement":
        """Element with integer label ``index``.

        Labels follow the usual base-p convention: the label's base-p
        digits, least significant first, are the coefficient vector.  In
        particular labels below p are the prime-subfield elements.
        """
        if not 0 <= index < self.q:
            raise ValueError(f"element index {index} out of range [0, {self.q})")
        if self.m == 1:
            return FieldElement(self, index)
        digits = []
        for _ in range(self.m):
            digits.append(index % self.p)
            index //= self.p
        return FieldElement(self, tuple(digits))

    def index_of(self, a: "FieldElement") -> int:
        """Inverse of :meth:`nth`."""
        if self.m == 1:
            return a.val
        idx = 0
        for c in reversed(a.val):
            idx = idx * self.p + c
        return idx

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements, ordered by integer residue (prime fields) or
        lexicographically by coefficient vector (extension fields)."""
        if self.m == 1:
            for v in range(self.p):
                yield FieldElement(self, v)
        else:
            for tup in itertools.product(range(self.p), repeat=self.m):
                yield FieldElement(self, tup)

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}"


class FieldElement:
    """An element of a :class:`FieldCtx`; immutable.

    Stored as an integer residue for prime fields or a coefficient tuple
    over F_p for extension fields.  Mixed-context arithmetic raises
    :class:`FieldMismatch`; plain ints are accepted and embedded via the
    canonical ring map Z -> F_q.
    """

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val: Union[int, tuple]):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise FieldMismatch(
                    f"elements of {self.ctx} and {other.ctx} do not mix "
                    f"(contexts compare by identity)"
                )
            return other
        if isinstance(other, int):
            return self.ctx.element(other)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.ctx.m == 1:
            return FieldElement(self.ctx, (self.val + o.val) % self.ctx.p)
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.val, o.val)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.ctx.m == 1:
            return FieldElement(self.ctx, (self.val - o.val) % self.ctx.p)
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a - b) % p for a, b in zip(self.val, o.val)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        ctx = self.ctx
        if ctx.m == 1:
            return FieldElement(ctx, (self.val * o.val) % ctx.p)
        prod = _ip_mod(_ip_mul(self.val, o.val, ctx.p), ctx.modulus, ctx.p)
        prod += [0] * (ctx.m - len(prod))
        return FieldElement(ctx, tuple(prod))

    __rmul__ = __mul__

    def __neg__(self):
        if self.ctx.m == 1:
            return FieldElement(self.ctx, (-self.val) % self.ctx.p)
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.val))

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroElement("zero has no multiplicative inverse")
        if self.ctx.m == 1:
            return FieldElement(self.ctx, pow(self.val, self.ctx.p - 2, self.ctx.p))
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.ctx.m == 1:
            return FieldElement(self.ctx, pow(self.val, e, self.ctx.p))
        acc = self.ctx.one
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.val == o.val

    def __hash__(self):
        return hash((id(self.ctx), self.val))

    def __bool__(self):
        if self.ctx.m == 1:
            return self.val != 0
        return any(self.val)

    def __repr__(self):
        return f"{self.val}:{self.ctx}"


def field_new(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Construct F_{p^m}; ``modulus`` required (monic, irreducible) iff m > 1."""
    return FieldCtx(p, m, modulus)


def mul_order(a: FieldElement) -> int:
    """Multiplicative order: the least t >= 1 with a^t = 1 (divides q - 1)."""
    if not a:
        raise ZeroElement("the zero element has no multiplicative order")
    order = a.ctx.q - 1
    for f in _prime_factors(order):
        while order % f == 0 and a ** (order // f) == a.ctx.one:
            order //= f
    return order


def find_omega(ctx: FieldCtx, ell: int, beta: FieldElement) -> FieldElement:
    """First element (canonical order) of order r*ell whose ell-th power is beta.

    Here r is the multiplicative order of beta; such an element exists in
    F_q* exactly when q = 1 (mod r*ell), which is enforced.  The canonical
    iteration order makes the choice reproducible.
    """
    if not beta:
        raise ZeroElement("beta must be nonzero")
    r = mul_order(beta)
    n = r * ell
    if (ctx.q - 1) % n != 0:
        raise CongruenceFailed(f"q = {ctx.q} is not congruent to 1 mod r*l = {n}")
    for cand in ctx.elements():
        if not cand:
            continue
        if mul_order(cand) == n and cand**ell == beta:
            return cand
    raise AssertionError("unreachable: a suitable root of unity must exist")
