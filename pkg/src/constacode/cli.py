"""Command-line interface.

Subcommands: ``examples`` (rebuild the six bundled example codes and check
every stated quantity), ``idempotents``, ``factor``, ``build`` (analyze a
code description file), ``search`` (sweep all divisor tuples for fixed
parameters).  Exit codes: 0 success, 1 internal/algebra failure, 2
user-input error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import code2d, codeops
from .code2d import CodeSpec, parse_spec_file, validate_spec
from .errors import (
    AlphaNotPlusMinusOne,
    BetaNotPlusMinusOne,
    BudgetExceeded,
    CongruenceFailed,
    ConstacodeError,
    DivisorCheckFailed,
    InternalDisagreement,
    MissingModulus,
    NotPrime,
    PreconditionUnmet,
    ReducibleModulus,
    SpecFileError,
    ZeroAlphaBeta,
    ZeroConstant,
    ZeroElement,
)
from .examples import EXAMPLES, run_example
from .gf import field_new, mul_order
from .idempotent import build_system
from .poly import Poly, factor_binomial, format_poly, monic_divisors, parse_poly

_USER_ERRORS = (
    SpecFileError,
    NotPrime,
    ReducibleModulus,
    MissingModulus,
    ZeroAlphaBeta,
    DivisorCheckFailed,
    CongruenceFailed,
    ZeroElement,
    ZeroConstant,
    BudgetExceeded,
    PreconditionUnmet,
    AlphaNotPlusMinusOne,
    BetaNotPlusMinusOne,
    ValueError,
    OSError,
)

RECORD_KEYS = (
    "q",
    "s",
    "l",
    "alpha",
    "beta",
    "divisors",
    "view",
    "n",
    "k",
    "d",
    "mds",
    "near_mds",
    "self_dual",
    "isodual_consistent",
    "theorem5_blocked",
)


@dataclass
class CodeRecord:
    """One analyzed code, as emitted by ``build`` and ``search``.

    ``alpha``/``beta`` and polynomial coefficients are canonical residues
    in [0, p).  ``d`` is None when the enumeration was skipped (over
    budget) or the code is zero-dimensional.  Flags are established facts:
    False means "not established", which for ``mds``/``near_mds`` can also
    mean the distance was never computed.
    """

    q: int
    s: int
    l: int
    alpha: int
    beta: int
    divisors: tuple[str, ...]
    view: str
    n: int
    k: int
    d: Optional[int]
    mds: bool
    near_mds: bool
    self_dual: bool
    isodual_consistent: bool
    theorem5_blocked: bool

    def to_dict(self) -> dict:
        out = {}
        for key in RECORD_KEYS:
            value = getattr(self, key)
            out[key] = list(value) if isinstance(value, tuple) else value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CodeRecord":
        kwargs = dict(data)
        kwargs["divisors"] = tuple(kwargs["divisors"])
        return cls(**kwargs)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def format_table(records: list[CodeRecord]) -> str:
    """Fixed-width table; one row per record, flags abbreviated."""
    header = f"{'divisors':<40} {'n':>3} {'k':>3} {'d':>4}  flags"
    lines = [header, "-" * len(header)]
    for r in records:
        flags = []
        if r.mds:
            flags.append("mds")
        if r.near_mds:
            flags.append("near-mds")
        if r.self_dual:
            flags.append("self-dual")
        if r.isodual_consistent:
            flags.append("isodual-consistent")
        if r.theorem5_blocked:
            flags.append("screened")
        d = "?" if r.d is None else str(r.d)
        lines.append(
            f"{', '.join(r.divisors):<40} {r.n:>3} {r.k:>3} {d:>4}  {' '.join(flags)}"
        )
    return "\n".join(lines)


def _analyze(
    spec: CodeSpec,
    sys_: "code2d.IdempotentSystem",
    view: str,
    budget: int,
    workers: int,
):
    """Build one record plus the matrices and enumerators behind it.

    Returns (record, G, H, weights, dual_weights); the enumerator entries
    are None when q^k exceeds the budget.  For beta outside {1, -1} the
    dual is the nullspace of G, verified to be closed under the inverse
    shifts before use.
    """
    ctx = spec.ctx
    one = ctx.one
    pm = spec.alpha in (one, -one) and spec.beta in (one, -one)
    G = code2d.generator_matrix(spec, sys_, view=view)
    if pm:
        H = code2d.dual_matrix(spec, sys_, view=view)
        self_dual = code2d.is_self_dual(spec, sys_).verdict
    else:
        H = codeops.nullspace_view(G)
        _verify_inverse_shift_closure(spec, H, view)
        self_dual = codeops.row_space_equal(G, H)

    try:
        blocked = code2d.theorem5_screen(spec)
    except PreconditionUnmet:
        blocked = False

    weights = dual_weights = None
    d = dual_d = None
    if 0 < ctx.q**G.k <= budget:
        weights = codeops.weight_enumerator(G, budget=budget, workers=workers)
        d = codeops.min_distance(G, budget=budget, workers=workers)
        dual_weights = codeops.macwilliams_transform(weights, ctx.q, G.k)
        dual_d = next((w for w in range(1, G.n + 1) if dual_weights[w]), None)

    mds = d is not None and d == G.n - G.k + 1
    near = d is not None and d == G.n - G.k
    if self_dual:
        iso = True
    elif weights is not None:
        iso = tuple(weights) == tuple(dual_weights)
    else:
        iso = False

    record = CodeRecord(
        q=ctx.q,
        s=spec.s,
        l=spec.ell,
        alpha=ctx.index_of(spec.alpha),
        beta=ctx.index_of(spec.beta),
        divisors=tuple(format_poly(p, "x") for p in spec.divisors),
        view=view,
        n=G.n,
        k=G.k,
        d=d,
        mds=mds,
        near_mds=near,
        self_dual=self_dual,
        isodual_consistent=iso,
        theorem5_blocked=blocked,
    )
    return record, G, H, weights, dual_weights, dual_d


def _verify_inverse_shift_closure(spec: CodeSpec, H: codeops.LinearCodeView, view: str) -> None:
    """The dual of a constacyclic code must be closed under the inverse shifts."""
    unflatten = (
        code2d.RingElement2D.from_flat_c1 if view == "c1" else code2d.RingElement2D.from_flat_c2
    )
    flatten = code2d.flatten_c1 if view == "c1" else code2d.flatten_c2
    ainv = spec.alpha.inverse()
    binv = spec.beta.inverse()
    shifted = []
    for row in H.rows:
        elem = unflatten(spec.ctx, spec.s, spec.ell, row)
        shifted.append(flatten(code2d.sigma_shift(elem, ainv)))
        shifted.append(flatten(code2d.tau_shift(elem, binv)))
    if not codeops.in_row_space(H, shifted):
        raise InternalDisagreement("nullspace dual is not closed under inverse shifts")


# ---------------------------------------------------------------------------
# Subcommands.


def _cmd_examples(args) -> int:
    failures = 0
    for ex in EXAMPLES:
        for claim in run_example(ex, budget=args.budget, workers=args.workers):
            status = "PASS" if claim.ok else "FAIL"
            detail = f"  ({claim.detail})" if (claim.detail and not claim.ok) else ""
            print(f"Example {claim.example}: {status}  {claim.label}{detail}")
            failures += 0 if claim.ok else 1
    total = "all claims reproduced" if not failures else f"{failures} claim(s) failed"
    print(f"examples: {total}")
    return 0 if not failures else 1


def _field_from_args(args) -> "code2d.FieldCtx":
    modulus = None
    if args.m > 1:
        if not args.modulus:
            raise MissingModulus("extension fields require --modulus")
        prime_ctx = field_new(args.p)
        modulus = [c.val for c in parse_poly(prime_ctx, args.modulus, "x").coeffs]
    elif args.modulus:
        raise ValueError("--modulus given but m = 1")
    return field_new(args.p, args.m, modulus)


def _cmd_idempotents(args) -> int:
    ctx = _field_from_args(args)
    beta = ctx.element(args.beta)
    sys_ = build_system(ctx, args.l, beta)
    print(
        f"field F_{ctx.q}, l={args.l}, beta={ctx.index_of(beta)}, "
        f"beta order r={sys_.beta_order}, omega={ctx.index_of(sys_.omega)}"
    )
    for k, e in enumerate(sys_.idempotents):
        print(f"idempotent {k}: {format_poly(e, 'y')}")
    return 0


def _cmd_factor(args) -> int:
    ctx = _field_from_args(args)
    c = ctx.element(args.c)
    fact = factor_binomial(ctx, args.n, c, seed=args.seed)
    var = args.var
    product = "".join(
        f"({format_poly(f, var)})" + (f"^{m}" if m > 1 else "")
        for f, m in fact.factors
    )
    print(f"{format_poly(Poly.binomial(ctx, args.n, c), var)} = {product}")
    return 0


def _figures_dir(args) -> Optional[Path]:
    if not getattr(args, "figures_dir", None):
        return None
    path = Path(args.figures_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _cmd_build(args) -> int:
    from .report import render_weight_distribution

    spec = validate_spec(parse_spec_file(args.spec_file))
    ctx = spec.ctx
    sys_ = build_system(ctx, spec.ell, spec.beta)
    if args.mindist and ctx.q**spec.dimension > args.budget:
        raise BudgetExceeded(ctx.q**spec.dimension, args.budget)
    record, G, H, weights, dual_weights, dual_d = _analyze(
        spec, sys_, args.view, args.budget, args.workers
    )
    if args.json:
        print(record.to_json())
    else:
        print(
            f"spec: q={record.q} s={record.s} l={record.l} "
            f"alpha={record.alpha} beta={record.beta} divisors={', '.join(record.divisors)}"
        )
        d = "?" if record.d is None else record.d
        line = f"code [{args.view}]: n={record.n} k={record.k} d={d}"
        if record.mds:
            line += " MDS"
        elif record.near_mds:
            line += " near-MDS"
        print(line)
        if args.dual:
            dd = "?" if dual_d is None else dual_d
            kind = "explicit" if record.self_dual or _has_explicit_dual(spec) else "nullspace"
            print(f"dual [{args.view}]: n={H.n} k={H.k} d={dd} ({kind} dual)")
        if args.selfdual:
            note = " (screened out: gcd(s,q)=1)" if record.theorem5_blocked else ""
            print(f"self-dual: {'yes' if record.self_dual else 'no'}{note}")
    fig_dir = _figures_dir(args)
    if fig_dir is not None and weights is not None:
        stem = Path(args.spec_file).stem or "code"
        out = fig_dir / f"{stem}_{args.view}_weights.png"
        render_weight_distribution(
            out,
            weights,
            dual_weights,
            title=f"[{record.n},{record.k}] over F_{record.q}",
        )
        print(f"figure: {out}", file=sys.stderr)
    return 0


def _has_explicit_dual(spec: CodeSpec) -> bool:
    one = spec.ctx.one
    return spec.alpha in (one, -one) and spec.beta in (one, -one)


def _cmd_search(args) -> int:
    from .report import render_search_summary

    ctx = _field_from_args(args)
    alpha = ctx.element(args.alpha)
    beta = ctx.element(args.beta)
    if not alpha or not beta:
        raise ZeroAlphaBeta("alpha and beta must be nonzero")
    r = mul_order(beta)
    if (ctx.q - 1) % (r * args.l) != 0:
        raise CongruenceFailed(
            f"q = {ctx.q} is not congruent to 1 mod r*l = {r * args.l}"
        )
    divisors = monic_divisors(factor_binomial(ctx, args.s, alpha, seed=args.seed))
    tuple_count = len(divisors) ** args.l
    if tuple_count > args.budget:
        raise BudgetExceeded(tuple_count, args.budget)
    sys_ = build_system(ctx, args.l, beta)

    records = []
    for combo in itertools.product(divisors, repeat=args.l):
        spec = validate_spec(
            CodeSpec(ctx=ctx, s=args.s, ell=args.l, alpha=alpha, beta=beta, divisors=combo)
        )
        record, *_ = _analyze(spec, sys_, args.view, args.budget, args.workers)
        if args.self_dual_only and not record.self_dual:
            continue
        if args.mds_only and not record.mds:
            continue
        records.append(record)

    records.sort(
        key=lambda rec: (
            rec.d is None,
            -(rec.d or 0),
            -rec.k,
            rec.divisors,
        )
    )
    if args.max_codes is not None:
        records = records[: args.max_codes]

    if args.json:
        for rec in records:
            print(rec.to_json())
    else:
        print(
            f"search: q={ctx.q} s={args.s} l={args.l} alpha={ctx.index_of(alpha)} "
            f"beta={ctx.index_of(beta)}  ({tuple_count} divisor tuples, {len(records)} shown)"
        )
        print(format_table(records))

    fig_dir = _figures_dir(args)
    if fig_dir is not None:
        out = fig_dir / f"search_q{ctx.q}_s{args.s}_l{args.l}.png"
        render_search_summary(
            out, records, title=f"q={ctx.q} s={args.s} l={args.l}"
        )
        print(f"figure: {out}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------


def _add_field_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("p", type=int, help="field characteristic (prime)")
    sub.add_argument("--m", type=int, default=1, help="extension degree (default 1)")
    sub.add_argument(
        "--modulus",
        type=str,
        default=None,
        help="monic irreducible modulus over F_p (required when m > 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="constacode",
        description="Two-dimensional constacyclic codes: construction, duals, classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ex = sub.add_parser("examples", help="rebuild the six bundled example codes and verify every stated quantity")
    p_ex.add_argument("--budget", type=int, default=codeops.DEFAULT_BUDGET)
    p_ex.add_argument("--workers", type=int, default=1)
    p_ex.set_defaults(func=_cmd_examples)

    p_id = sub.add_parser("idempotents", help="print the idempotent decomposition of F_q[y]/<y^l - beta>")
    _add_field_args(p_id)
    p_id.add_argument("l", type=int)
    p_id.add_argument("beta", type=int)
    p_id.set_defaults(func=_cmd_idempotents)

    p_fa = sub.add_parser("factor", help="factor x^n - c over F_q")
    _add_field_args(p_fa)
    p_fa.add_argument("n", type=int)
    p_fa.add_argument("c", type=int)
    p_fa.add_argument("--seed", type=int, default=None, help="equal-degree splitting seed")
    p_fa.add_argument("--var", type=str, default="x", help="variable letter for output")
    p_fa.set_defaults(func=_cmd_factor)

    p_bu = sub.add_parser("build", help="analyze the code described by a spec file")
    p_bu.add_argument("spec_file", type=str)
    p_bu.add_argument("--dual", action="store_true", help="also report the dual code")
    p_bu.add_argument("--mindist", action="store_true", help="require the minimum distance (error if over budget)")
    p_bu.add_argument("--selfdual", action="store_true", help="report the self-duality decision")
    p_bu.add_argument("--view", choices=("c1", "c2"), default="c1")
    p_bu.add_argument("--json", action="store_true", help="one structured record per line")
    p_bu.add_argument("--budget", type=int, default=codeops.DEFAULT_BUDGET)
    p_bu.add_argument("--workers", type=int, default=1)
    p_bu.add_argument("--figures-dir", type=str, default=None, help="render weight-distribution figures here")
    p_bu.set_defaults(func=_cmd_build)

    p_se = sub.add_parser("search", help="sweep all divisor tuples for fixed (q, s, l, alpha, beta)")
    _add_field_args(p_se)
    p_se.add_argument("s", type=int)
    p_se.add_argument("l", type=int)
    p_se.add_argument("alpha", type=int)
    p_se.add_argument("beta", type=int)
    p_se.add_argument("--self-dual-only", action="store_true")
    p_se.add_argument("--mds-only", action="store_true")
    p_se.add_argument("--max-codes", type=int, default=None)
    p_se.add_argument("--view", choices=("c1", "c2"), default="c1")
    p_se.add_argument("--json", action="store_true")
    p_se.add_argument("--budget", type=int, default=codeops.DEFAULT_BUDGET)
    p_se.add_argument("--workers", type=int, default=1)
    p_se.add_argument("--seed", type=int, default=None)
    p_se.add_argument("--figures-dir", type=str, default=None)
    p_se.set_defaults(func=_cmd_search)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USER_ERRORS as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 2
    except ConstacodeError as exc:
        print(f"internal error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
