"""Text formats: cyclotomic literals, group files, orbifold descriptors, algebras.

The cyclotomic literal grammar shared by all inputs: a rational is `a` or
`a/b`; a number is a sum of terms `<rat>*z^<k>` joined with `+` (a bare
rational is accepted as shorthand for `<rat>*z^0`); the conductor is declared
once per file.  Comment lines start with `#`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclo import CyclotomicNumber, CycloMatrix
from .errors import MalformedDescriptor
from .hochschild import StructureConstantAlgebra
from .invariants import FixedComponent, OrbifoldDescriptor

_TERM = re.compile(r"^(?P<rat>[+-]?\d+(?:/\d+)?)(?:\*z\^(?P<pow>\d+))?$")


class FormatError(ValueError):
    """Malformed input text."""


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {text!r}: {exc}") from None


def parse_cyclo(text: str, conductor: int) -> CyclotomicNumber:
    """Parse `1/2*z^0 + -1/2*z^3` style literals at the given conductor."""
    compact = "".join(text.split())
    if not compact:
        raise FormatError("empty cyclotomic literal")
    raw: dict[int, Fraction] = {}
    for term in compact.split("+"):
        if not term:
            raise FormatError(f"empty term in {text!r}")
        m = _TERM.match(term)
        if not m:
            raise FormatError(f"bad term {term!r} in {text!r}")
        k = int(m.group("pow") or 0)
        raw[k] = raw.get(k, Fraction(0)) + parse_rational(m.group("rat"))
    top = max(raw)
    seq = [raw.get(j, Fraction(0)) for j in range(top + 1)]
    return CyclotomicNumber.reduce(seq, conductor)


def format_cyclo(x: CyclotomicNumber) -> str:
    return str(x)


def _content_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def parse_group_text(text: str):
    """Parse a group descriptor: dim, conductor, then `gen` blocks of rows.

    Returns (generators, dim, conductor); each generator is a CycloMatrix.
    """
    lines = list(_content_lines(text))
    pos = 0

    def expect(keyword):
        nonlocal pos
        if pos >= len(lines):
            raise FormatError(f"unexpected end of file, expected {keyword!r}")
        lineno, body = lines[pos]
        parts = body.split()
        if parts[0] != keyword:
            raise FormatError(f"line {lineno}: expected {keyword!r}, got {parts[0]!r}")
        pos += 1
        return lineno, parts[1:]

    _, dim_args = expect("dim")
    _, e_args = expect("conductor")
    try:
        dim = int(dim_args[0])
        conductor = int(e_args[0])
    except (IndexError, ValueError):
        raise FormatError("dim and conductor need one integer argument") from None
    if dim < 1 or conductor < 1:
        raise FormatError("dim and conductor must be positive")

    generators = []
    while pos < len(lines):
        lineno, body = lines[pos]
        if body.split()[0] != "gen":
            raise FormatError(f"line {lineno}: expected 'gen', got {body!r}")
        pos += 1
        rows = []
        for _ in range(dim):
            if pos >= len(lines):
                raise FormatError(f"generator starting at line {lineno} is truncated")
            row_line, row_body = lines[pos]
            entries = row_body.split(";")
            if len(entries) != dim:
                raise FormatError(
                    f"line {row_line}: expected {dim} entries, got {len(entries)}")
            rows.append([parse_cyclo(e, conductor) for e in entries])
            pos += 1
        generators.append(CycloMatrix(rows, conductor))
    if not generators:
        raise FormatError("group file declares no generators")
    return generators, dim, conductor


def load_group(path, cap=None):
    """Build the group from a descriptor file."""
    from .groups import DEFAULT_CAP, generate_group

    with open(path, encoding="utf-8") as fh:
        generators, dim, conductor = parse_group_text(fh.read())
    return generate_group(generators, cap=cap or DEFAULT_CAP, conductor=conductor)


def parse_orbifold_text(text: str, group) -> OrbifoldDescriptor:
    """Parse an orbifold descriptor file against an already built group."""
    lines = list(_content_lines(text))
    if not lines or lines[0][1].split() != ["orbifold"]:
        raise FormatError("descriptor must start with the 'orbifold' keyword")
    if len(lines) < 2 or lines[1][1].split()[0] != "ambient_dim":
        raise FormatError("second line must declare ambient_dim")
    try:
        ambient = int(lines[1][1].split()[1])
    except (IndexError, ValueError):
        raise FormatError("ambient_dim needs one integer argument") from None

    entries = []
    current_rep = None
    current_components: list[FixedComponent] = []

    def flush():
        if current_rep is not None:
            entries.append((current_rep, tuple(current_components)))

    for lineno, body in lines[2:]:
        parts = body.split()
        if parts[0] == "class":
            flush()
            try:
                current_rep = int(parts[1])
            except (IndexError, ValueError):
                raise FormatError(f"line {lineno}: class needs an element index") from None
            current_components = []
        elif parts[0] == "component":
            if current_rep is None:
                raise FormatError(f"line {lineno}: component before any class")
            fields = dict(p.split("=", 1) for p in parts[1:] if "=" in p)
            if set(fields) != {"codim", "betti"}:
                raise FormatError(
                    f"line {lineno}: component needs codim=<l> betti=<b0,b1,...>")
            try:
                codim = int(fields["codim"])
                betti = tuple(int(b) for b in fields["betti"].split(","))
            except ValueError:
                raise FormatError(f"line {lineno}: bad component numbers") from None
            current_components.append(FixedComponent(codim, betti))
        else:
            raise FormatError(f"line {lineno}: unexpected keyword {parts[0]!r}")
    flush()
    descriptor = OrbifoldDescriptor(group, ambient, tuple(entries))
    try:
        descriptor.validate()
    except MalformedDescriptor as exc:
        raise FormatError(str(exc)) from None
    return descriptor


def load_orbifold(path, group) -> OrbifoldDescriptor:
    with open(path, encoding="utf-8") as fh:
        return parse_orbifold_text(fh.read(), group)


def parse_algebra_text(text: str) -> StructureConstantAlgebra:
    """Parse a structure-constant tensor: basis labels, unit, product triples.

    Lines: `basis <lab> <lab> ...`, `unit <index>`, then products
    `<i> <j> -> <coeff>*<k> [+ <coeff>*<k> ...]` (or `-> 0`); missing pairs
    multiply to zero.
    """
    labels = None
    unit = None
    table = {}
    for lineno, body in _content_lines(text):
        parts = body.split()
        if parts[0] == "basis":
            labels = tuple(parts[1:])
            if not labels:
                raise FormatError(f"line {lineno}: basis needs at least one label")
        elif parts[0] == "unit":
            try:
                unit = int(parts[1])
            except (IndexError, ValueError):
                raise FormatError(f"line {lineno}: unit needs one index") from None
        else:
            if "->" not in parts:
                raise FormatError(f"line {lineno}: expected `i j -> ...`")
            arrow = parts.index("->")
            if arrow != 2:
                raise FormatError(f"line {lineno}: products take two indices")
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad basis indices") from None
            rhs = "".join(parts[arrow + 1:])
            if rhs == "0":
                table[(i, j)] = ()
                continue
            terms = []
            for piece in rhs.split("+"):
                if "*" not in piece:
                    raise FormatError(f"line {lineno}: term {piece!r} needs coeff*index")
                coeff, target = piece.rsplit("*", 1)
                try:
                    terms.append((int(target), parse_rational(coeff)))
                except ValueError:
                    raise FormatError(f"line {lineno}: bad term {piece!r}") from None
            table[(i, j)] = tuple(terms)
    if labels is None or unit is None:
        raise FormatError("algebra file needs `basis` and `unit` lines")
    # the unit axiom determines unit products; fill in the ones not spelled out
    for i in range(len(labels)):
        table.setdefault((unit, i), ((i, Fraction(1)),))
        table.setdefault((i, unit), ((i, Fraction(1)),))
    for (i, j), terms in table.items():
        if not (0 <= i < len(labels) and 0 <= j < len(labels)):
            raise FormatError(f"product indices ({i},{j}) out of range")
        for k, _ in terms:
            if not 0 <= k < len(labels):
                raise FormatError(f"product target {k} out of range")
    try:
        return StructureConstantAlgebra(labels, unit, table)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def load_algebra(path) -> StructureConstantAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())
