"""Command line entry point: deterministic, machine-parseable reports.

Every run echoes a canonicalized config header, so equal inputs give
byte-identical output.  Exit codes: 0 success, 1 domain error (the error
class name is printed), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import groups as _groups
from . import invariants as _invariants
from .dunkl import DunklRep, verify_commutation_relations
from .errors import MalformedDescriptor, ReflabError
from .formats import FormatError, load_algebra, load_group, load_orbifold, parse_rational
from .hochschild import HochschildChain, fundamental_cycle, hochschild_boundary
from .series import (
    CurvatureData,
    LaurentQ,
    RootTerm,
    TraceFunctional,
    index_density,
    series_a_hat,
    series_a_hat_hbar,
)

SUBCOMMANDS = ("analyze-group", "invariants", "orbifold", "dunkl-check",
               "hochschild-check", "index-density")


class _Emitter:
    """Collects key=value pairs; renders the lines or table format."""

    def __init__(self, mode: str):
        self.mode = mode
        self.rows = []

    def emit(self, key, value):
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.rows.append((str(key), str(value)))

    def render(self) -> str:
        if self.mode == "table":
            width = max((len(k) for k, _ in self.rows), default=0)
            return "\n".join(f"{k.ljust(width)}  {v}" for k, v in self.rows)
        return "\n".join(f"{k}={v}" for k, v in self.rows)


def _header(sub: str, options: dict) -> str:
    canon = " ".join(f"{k}={options[k]}" for k in sorted(options))
    return f"# reflab {sub} {canon}".rstrip()


def _fmt_seq(values) -> str:
    return ",".join(str(v) for v in values)


# -- subcommand bodies --------------------------------------------------------

def _run_analyze_group(args, out: _Emitter):
    group = load_group(args.group, cap=args.cap)
    report = _groups.group_report(group)
    out.emit("order", report.order)
    out.emit("dim", report.dim)
    out.emit("conductor", group.conductor)
    out.emit("reflections", report.reflection_count)
    out.emit("hyperplanes", report.hyperplane_count)
    out.emit("rank", report.rank)
    out.emit("fixed_dim", report.fixed_dim)
    out.emit("irreducible", report.irreducible)
    out.emit("reflection_group", report.reflection_group)
    out.emit("degrees", _fmt_seq(report.degrees))
    out.emit("coxeter_number", report.coxeter_number
             if report.coxeter_number is not None else "none")
    out.emit("well_generated", report.well_generated)
    out.emit("witness", _fmt_seq(report.witness) if report.witness else "none")
    out.emit("coxeter_element", report.coxeter_element
             if report.coxeter_element is not None else "none")
    return 0


def _run_invariants(args, out: _Emitter):
    group = load_group(args.group, cap=args.cap)
    profile = _invariants.hochschild_profile(group)
    out.emit("order", group.order)
    out.emit("classes", len(profile.class_fixed_dims))
    out.emit("field", "C((hbar))" if args.laurent else "C")
    for j, a in enumerate(profile.a):
        if a:
            out.emit(f"a[{j}]", a)
    for j, a in enumerate(profile.a):
        if a:
            out.emit(f"hh[{j}]", a)
    bound = _invariants.trace_space_lower_bound(group)
    out.emit("hG_zero", bound.hG_zero)
    out.emit("well_generated", bound.well_generated)
    out.emit("a0", bound.a0)
    out.emit("witness", bound.witness if bound.witness is not None else "none")
    return 0


def _run_orbifold(args, out: _Emitter):
    group = load_group(args.group, cap=args.cap)
    if args.linear:
        descriptor = _invariants.linear_descriptor(group)
    else:
        descriptor = load_orbifold(args.descriptor, group)
    table = _invariants.orbifold_hypercohomology(descriptor)
    out.emit("ambient_dim", descriptor.ambient_dim)
    out.emit("convention", "paper (2n-2l-k reindexing)")
    for k, d in enumerate(table.dims):
        if d:
            out.emit(f"H^-{k}", d)
    for deg in sorted(table.chen_ruan, reverse=True):
        if table.chen_ruan[deg]:
            out.emit(f"CR^{deg}", table.chen_ruan[deg])
    euler = _invariants.euler_characteristics(descriptor)
    out.emit("chi_top", euler.chi_top)
    out.emit("chi_hh", euler.chi_hh)
    out.emit("identity_check", euler.identity_check)
    return 0


def _parse_c_option(text: str):
    if "=" not in text:
        return parse_rational(text)
    out = {}
    for piece in text.split(","):
        key, _, val = piece.partition("=")
        out[int(key)] = parse_rational(val)
    return out


def _run_dunkl_check(args, out: _Emitter):
    group = load_group(args.group, cap=args.cap)
    rep = DunklRep(group, parse_rational(args.t), _parse_c_option(args.c), args.degree)
    report = verify_commutation_relations(rep)
    out.emit("group_order", group.order)
    out.emit("degree_cap", args.degree)
    out.emit("t", args.t)
    for cl in rep.reflection_class_reps:
        out.emit(f"c[{cl}]", rep.c[cl])
    for entry in report.entries:
        out.emit(entry.key, "PASS" if entry.passed else "FAIL")
    if report.t_fit is not None:
        out.emit("t_fit", report.t_fit)
    for cl in sorted(report.kappa):
        out.emit(f"kappa[{cl}]", report.kappa[cl])
        ratio = report.kappa_ratio[cl]
        out.emit(f"kappa_ratio[{cl}]", ratio if ratio is not None else "undefined (c=0)")
    return 0 if report.passed else 1


def _run_hochschild_check(args, out: _Emitter):
    if args.algebra:
        algebra = load_algebra(args.algebra)
        out.emit("algebra_dim", algebra.dim)
        out.emit("algebra_unit", algebra.unit)
        out.emit("associativity", "verified")
    k = args.cycle
    from .hochschild import capped_weyl_algebra

    algebra = capped_weyl_algebra(k, max(2, args.cap)) if k else None
    cycle = fundamental_cycle(k, algebra)
    out.emit("cycle_half_degree", k)
    out.emit("cycle_terms", len(cycle.terms))
    boundary = hochschild_boundary(cycle)
    out.emit("signed_normalized_boundary_zero", boundary.is_zero)
    if k:
        raw = HochschildChain(cycle.algebra, cycle.degree, cycle.terms, normalized=False)
        out.emit("unnormalized_boundary", repr(hochschild_boundary(raw)))
        unsigned = fundamental_cycle(k, cycle.algebra, signed=False)
        unsigned_zero = hochschild_boundary(unsigned).is_zero
        out.emit("unsigned_variant_is_cycle", unsigned_zero)
        out.emit("note", "chain carries sgn(sigma); the unsigned spelling fails the cycle test")
    return 0 if boundary.is_zero else 1


def _parse_roots(text: str):
    roots = []
    if not text:
        return roots
    for piece in text.split(","):
        piece = piece.strip()
        try:
            roots.append(Fraction(piece))
        except ValueError:
            roots.append(piece)
    return roots


def _run_index_density(args, out: _Emitter):
    n, l = args.n, args.l
    if l > n or l < 0:
        raise MalformedDescriptor("need 0 <= l <= n")
    moments = [parse_rational(m) for m in args.moments.split(",")] if args.moments else [1]
    tf = TraceFunctional(moments)
    roots = _parse_roots(args.tangent_roots)
    try:
        theta = Fraction(args.theta)
    except ValueError:
        theta = args.theta
    cd = CurvatureData(tangent_roots=tuple(roots), theta=theta,
                       normal_symbol=args.normal_symbol, rank=args.rank)
    density = index_density(cd, n, l, tf)

    # both A-hat spellings must agree: plain A-hat(R_T) versus A-hat_hbar(R_T/hbar)
    k = n - l
    alt_roots = [RootTerm(r, LaurentQ.hbar(-1)) if isinstance(r, str)
                 else RootTerm(None, LaurentQ.hbar(-1, Fraction(r))) for r in roots]
    plain = series_a_hat(roots, k)
    alt = series_a_hat_hbar(alt_roots, k)
    out.emit("ahat_spellings_agree", plain == alt)

    out.emit("component_degree", k)
    symbols = density.symbols
    if not density.terms:
        out.emit("density", "0")
    for mono in sorted(density.terms):
        coeff = density.terms[mono]
        factors = [f"{s}^{e}" if e > 1 else s for s, e in zip(symbols, mono) if e]
        name = "*".join(factors) if factors else "1"
        for power in sorted(coeff.terms):
            if args.hbar_order is not None and power > args.hbar_order:
                continue
            out.emit("term", f"{coeff.terms[power]} * {name} * hbar^{power}")
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reflab",
        description="exact invariants of finite complex matrix groups")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("lines", "table"), default="lines")

    def add_cap(p):
        p.add_argument("--cap", type=int, default=None,
                       help="group-order cap for the closure (default 20000)")

    p = sub.add_parser("analyze-group", help="census, degrees, Coxeter data")
    p.add_argument("group", help="group descriptor file")
    add_cap(p)
    add_format(p)

    p = sub.add_parser("invariants", help="Hochschild dimension profile")
    p.add_argument("group")
    p.add_argument("--laurent", action="store_true",
                   help="display the table over the Laurent field")
    add_cap(p)
    add_format(p)

    p = sub.add_parser("orbifold", help="hypercohomology and Euler characteristics")
    p.add_argument("--group", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--descriptor", help="orbifold descriptor file")
    src.add_argument("--linear", action="store_true",
                     help="auto-generate the linear descriptor of the group")
    add_cap(p)
    add_format(p)

    p = sub.add_parser("dunkl-check", help="verify the Cherednik relations")
    p.add_argument("--group", required=True)
    p.add_argument("--t", default="1")
    p.add_argument("--c", default="0",
                   help="rational, or class=rat[,class=rat...] per reflection class")
    p.add_argument("--degree", type=int, default=5)
    add_cap(p)
    add_format(p)

    p = sub.add_parser("hochschild-check", help="fundamental cycle verification")
    p.add_argument("--cycle", type=int, required=True, help="half-degree k")
    p.add_argument("--cap", type=int, default=2)
    p.add_argument("--algebra", help="optional structure-constant algebra file")
    add_format(p)

    p = sub.add_parser("index-density", help="A-hat Ch Ch_phi density component")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--tangent-roots", default="", dest="tangent_roots",
                   help="comma-separated symbols or exact rationals")
    p.add_argument("--theta", default="0", help="central 2-form symbol or rational")
    p.add_argument("--moments", default="1", help="m_0,m_1,... exact rationals")
    p.add_argument("--normal-symbol", default=None, dest="normal_symbol",
                   help="symbol for the normal curvature argument")
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--hbar-order", type=int, default=None, dest="hbar_order",
                   help="print only terms with hbar exponent <= k")
    add_format(p)
    return parser


_RUNNERS = {
    "analyze-group": _run_analyze_group,
    "invariants": _run_invariants,
    "orbifold": _run_orbifold,
    "dunkl-check": _run_dunkl_check,
    "hochschild-check": _run_hochschild_check,
    "index-density": _run_index_density,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    options = {k: v for k, v in sorted(vars(args).items())
               if k != "subcommand" and v is not None}
    print(_header(args.subcommand, options))
    out = _Emitter(getattr(args, "format", "lines"))
    try:
        code = _RUNNERS[args.subcommand](args, out)
    except (FormatError, MalformedDescriptor, FileNotFoundError) as exc:
        print(out.render())
        print(f"error={type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ReflabError as exc:
        print(out.render())
        print(f"error={type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    rendered = out.render()
    if rendered:
        print(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
