"""Input grammars: cyclotomic literals, group files, descriptors, algebra tensors."""

from fractions import Fraction

import pytest

from reflab.cyclo import CyclotomicNumber, zeta
from reflab.formats import (
    FormatError,
    parse_algebra_text,
    parse_cyclo,
    parse_group_text,
    parse_orbifold_text,
)
from reflab.groups import generate_group
from reflab.hochschild import HochschildChain, hochschild_boundary
from reflab.invariants import orbifold_hypercohomology

from conftest import z2_group


class TestCycloLiterals:
    def test_basic_terms(self):
        x = parse_cyclo("1/2*z^0 + -1/2*z^3", 8)
        half = Fraction(1, 2)
        assert x == CyclotomicNumber.reduce([half, 0, 0, -half], 8)

    def test_bare_rational_shorthand(self):
        assert parse_cyclo("-3/4", 5) == Fraction(-3, 4)

    def test_whitespace_insensitive(self):
        assert parse_cyclo(" 1 * z^2 ", 5) == zeta(5) ** 2

    def test_exponent_reduction(self):
        assert parse_cyclo("1*z^7", 7) == 1

    @pytest.mark.parametrize("bad", ["", "z^2*3", "1**z^2", "1*z^-1", "one"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormatError):
            parse_cyclo(bad, 5)

    def test_roundtrip_through_str(self):
        x = zeta(12) ** 5 + Fraction(2, 3)
        assert parse_cyclo(str(x), 12) == x


class TestGroupFiles:
    def test_z3_file(self):
        text = "dim 1\nconductor 3\ngen\n1*z^1\n"
        gens, dim, conductor = parse_group_text(text)
        assert dim == 1 and conductor == 3
        g = generate_group(gens, conductor=conductor)
        assert g.order == 3

    def test_comments_and_blanks_ignored(self):
        text = "# header\n\ndim 1\nconductor 1  # inline\ngen\n-1\n"
        gens, _, _ = parse_group_text(text)
        assert generate_group(gens).order == 2

    def test_s3_file_builds(self):
        text = ("dim 2\nconductor 1\n"
                "gen\n0 ; -1\n1 ; -1\n"
                "gen\n0 ; 1\n1 ; 0\n")
        gens, _, conductor = parse_group_text(text)
        assert generate_group(gens, conductor=conductor).order == 6

    @pytest.mark.parametrize("bad", [
        "conductor 3\ndim 1\ngen\n1\n",      # wrong order
        "dim 1\nconductor 3\n",              # no generators
        "dim 2\nconductor 1\ngen\n1 ; 0\n",  # truncated generator
        "dim 2\nconductor 1\ngen\n1\n0 ; 1\n",  # wrong entry count
    ])
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormatError):
            parse_group_text(bad)


class TestOrbifoldFiles:
    def test_z2_line(self, z2):
        text = ("orbifold\nambient_dim 1\n"
                "class 0\ncomponent codim=0 betti=1,0,0\n"
                "class 1\ncomponent codim=1 betti=1\n")
        d = parse_orbifold_text(text, z2)
        assert orbifold_hypercohomology(d).dims == (1, 0, 1)

    def test_multiple_components_per_class(self, z2):
        text = ("orbifold\nambient_dim 1\n"
                "class 0\ncomponent codim=0 betti=1,0,1\n"
                "class 1\n"
                "component codim=1 betti=1\n"
                "component codim=1 betti=1\n")
        d = parse_orbifold_text(text, z2)
        assert d.components[1][0] == 1
        assert len(d.components[1][1]) == 2

    @pytest.mark.parametrize("bad", [
        "ambient_dim 1\nclass 0\n",                        # missing keyword
        "orbifold\nclass 0\n",                             # missing ambient_dim
        "orbifold\nambient_dim 1\ncomponent codim=0 betti=1,0,0\n",  # component first
        "orbifold\nambient_dim 1\nclass 0\ncomponent codim=2 betti=1\n",  # codim > n
        "orbifold\nambient_dim 1\nclass 1\ncomponent codim=1 betti=1\n",  # no identity
    ])
    def test_rejects_malformed(self, bad, z2):
        with pytest.raises(FormatError):
            parse_orbifold_text(bad, z2)


class TestAlgebraFiles:
    def test_nilpotent_example(self):
        text = "basis e a\nunit 0\n1 1 -> 0\n"
        algebra = parse_algebra_text(text)
        assert algebra.dim == 2
        ch = HochschildChain(algebra, 1, {(1, 1): 1}, normalized=False)
        assert hochschild_boundary(ch).is_zero  # a*a - a*a = 0

    def test_weighted_products(self):
        text = ("basis e u v\nunit 0\n"
                "1 1 -> 1/2*1 + 1/2*2\n"
                "1 2 -> 1/2*1 + 1/2*2\n"
                "2 1 -> 1/2*1 + 1/2*2\n"
                "2 2 -> 1/2*1 + 1/2*2\n")
        algebra = parse_algebra_text(text)
        assert dict(algebra.product(1, 2)) == {1: Fraction(1, 2), 2: Fraction(1, 2)}

    def test_rejects_nonassociative(self):
        text = ("basis e a b\nunit 0\n"
                "1 1 -> 1*2\n1 2 -> 1*0\n2 1 -> 0\n2 2 -> 0\n")
        with pytest.raises(FormatError):
            parse_algebra_text(text)

    @pytest.mark.parametrize("bad", [
        "unit 0\n1 1 -> 0\n",
        "basis e a\n1 1 -> 0\n",
        "basis e a\nunit 0\n1 -> 0\n",
        "basis e a\nunit 0\n1 1 -> 1*9\n",
    ])
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormatError):
            parse_algebra_text(bad)
