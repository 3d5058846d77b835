"""Dimension profiles and orbifold fixed-point bookkeeping.

The a-profile of a group counts conjugacy classes by the dimension of the
fixed space of a representative on h + h*; it doubles as the table of
Hochschild homology dimensions of the associated skew differential-operator
algebra, concentrated in even degrees.  Orbifold descriptors carry
user-supplied fixed-point data (codimensions and centralizer-invariant Betti
numbers per conjugacy class) from which hypercohomology tables and the two
Euler characteristics are computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloMatrix
from .errors import IdentityViolation, MalformedDescriptor
from .groups import (
    ConjugacyClass,
    FiniteMatrixGroup,
    ReflectionCensus,
    conjugacy_classes,
    decompose_reflection_group,
    find_regular_element,
    find_reflections,
    fixed_subspace,
    generated_subgroup,
    is_well_generated,
    support_and_rank,
)


@dataclass(frozen=True)
class HomologyProfile:
    """Counts a_j = #{classes with dim (h + h*)^g = j}, j = 0 .. 2n."""

    n: int
    a: tuple[int, ...]
    class_fixed_dims: tuple[int, ...]  # dim ker(g - 1) on h, one per class

    @property
    def hh_dimensions(self) -> dict[int, int]:
        """dim HH_j for j = 0..2n; echoes the a-profile."""
        return {j: self.a[j] for j in range(2 * self.n + 1)}

    def convolve(self, other: "HomologyProfile") -> "HomologyProfile":
        """Profile of a block-diagonal product group (Kuenneth convolution)."""
        n = self.n + other.n
        a = [0] * (2 * n + 1)
        for i, x in enumerate(self.a):
            for j, y in enumerate(other.a):
                a[i + j] += x * y
        return HomologyProfile(n, tuple(a), ())


def hochschild_profile(group: FiniteMatrixGroup,
                       classes: list[ConjugacyClass] | None = None) -> HomologyProfile:
    """The a-profile of the group: one count per even fixed-space dimension."""
    classes = classes or conjugacy_classes(group)
    n = group.dim
    ident = CycloMatrix.identity(group.dim, group.conductor)
    a = [0] * (2 * n + 1)
    dims = []
    for cl in classes:
        g = group.elements[cl.representative]
        m = len((g - ident).kernel_basis())
        dims.append(m)
        a[2 * m] += 1
    return HomologyProfile(n, tuple(a), tuple(dims))


def shifted_profile(subgroup: FiniteMatrixGroup, n: int, l: int) -> dict[int, int]:
    """Homology table of the slice algebra: dim at m equals a_{m - 2(n-l)}.

    The subgroup acts on C^l; the table is its profile shifted up by the
    doubled codimension 2(n - l), indexed m = 0 .. 2n.
    """
    if not 0 <= l <= n:
        raise ValueError("need 0 <= l <= n")
    if subgroup.dim != l:
        raise ValueError(f"subgroup acts on C^{subgroup.dim}, expected C^{l}")
    profile = hochschild_profile(subgroup)
    shift = 2 * (n - l)
    table = {}
    for m in range(2 * n + 1):
        j = m - shift
        table[m] = profile.a[j] if 0 <= j <= 2 * l else 0
    return table


@dataclass(frozen=True)
class TraceBoundReport:
    hG_zero: bool
    well_generated: bool
    witness: int | None  # element with no eigenvalue 1, when hypotheses hold
    a0: int
    bound_holds: bool  # a_0 >= 1


def trace_space_lower_bound(group: FiniteMatrixGroup,
                            census: ReflectionCensus | None = None) -> TraceBoundReport:
    """Witness a fixed-point-free class when h^G = 0 and G is well-generated.

    The witness is the product of one Coxeter element per irreducible
    reflection factor; its existence forces a_0 >= 1.  When a hypothesis
    fails the report says which one, along with the actual a_0.
    """
    census = census or find_reflections(group)
    support = support_and_rank(group, census)
    profile = hochschild_profile(group)
    a0 = profile.a[0]
    hg_zero = support.fixed_dim == 0
    wg, _ = is_well_generated(group, census)
    if not (hg_zero and wg):
        return TraceBoundReport(hg_zero, wg, None, a0, a0 >= 1)

    refl_by_element = {r.element: r for r in census.reflections}
    witness = 0
    for basis, refl_elements in decompose_reflection_group(group, census):
        block = [refl_by_element[e] for e in refl_elements]
        subgroup_indices = generated_subgroup(group, refl_elements)
        n_i = len(block)
        nstar_i = len({r.hyperplane for r in block})
        h_i = (n_i + nstar_i) // len(basis)
        assert (n_i + nstar_i) % len(basis) == 0
        assert group.conductor % h_i == 0
        from .cyclo import CyclotomicNumber
        zeta_h = CyclotomicNumber.zeta(group.conductor, group.conductor // h_i)
        found = find_regular_element(
            group, zeta_h, census,
            element_pool=subgroup_indices,
            hyperplane_forms=[r.coroot for r in block])
        assert found is not None, "factor Coxeter element must exist"
        witness = group.mul(witness, found[0])

    ident = CycloMatrix.identity(group.dim, group.conductor)
    assert not (group.elements[witness] - ident).kernel_basis(), \
        "witness unexpectedly has eigenvalue 1"
    assert a0 >= 1
    return TraceBoundReport(True, True, witness, a0, True)


# -- orbifold descriptors ----------------------------------------------------

@dataclass(frozen=True)
class FixedComponent:
    codim: int
    betti: tuple[int, ...]  # invariant Betti numbers b_0 .. b_{2(n-l)}

    def euler(self) -> int:
        return sum(b if k % 2 == 0 else -b for k, b in enumerate(self.betti))


@dataclass(frozen=True)
class OrbifoldDescriptor:
    """Per-class fixed-point data for a G-manifold of complex dimension n.

    Components of the fixed-point sets of one representative per conjugacy
    class, each with its complex codimension l and the centralizer-invariant
    Betti numbers b_0 .. b_{2(n-l)}.  The G-orbit of components is collapsed
    onto class representatives, so each class appears once.
    """
    group: FiniteMatrixGroup
    ambient_dim: int
    components: tuple[tuple[int, tuple[FixedComponent, ...]], ...]  # (class rep, comps)

    def validate(self) -> None:
        n = self.ambient_dim
        reps = {rep for rep, _ in self.components}
        if len(reps) != len(self.components):
            raise MalformedDescriptor("duplicate class entries")
        classes = conjugacy_classes(self.group)
        known = {c.representative for c in classes}
        if not reps <= known:
            raise MalformedDescriptor(
                f"unknown class representatives {sorted(reps - known)}")
        if not any(rep == 0 for rep, _ in self.components):
            raise MalformedDescriptor("identity class is missing")
        for rep, comps in self.components:
            if rep == 0 and not any(c.codim == 0 for c in comps):
                raise MalformedDescriptor(
                    "identity class needs at least one codimension-0 component")
            for comp in comps:
                if not 0 <= comp.codim <= n:
                    raise MalformedDescriptor(
                        f"codimension {comp.codim} out of range 0..{n}")
                if len(comp.betti) != 2 * (n - comp.codim) + 1:
                    raise MalformedDescriptor(
                        f"class {rep}: component of codim {comp.codim} needs "
                        f"{2 * (n - comp.codim) + 1} Betti numbers, got {len(comp.betti)}")
                if any(b < 0 for b in comp.betti):
                    raise MalformedDescriptor("Betti numbers must be nonnegative")


def linear_descriptor(group: FiniteMatrixGroup) -> OrbifoldDescriptor:
    """The descriptor of the linear action on C^n itself.

    Each fixed-point set is a linear subspace: one contractible component per
    class, of codimension n - dim ker(g - 1), with Betti data (1, 0, ..., 0).
    """
    classes = conjugacy_classes(group)
    n = group.dim
    ident = CycloMatrix.identity(group.dim, group.conductor)
    entries = []
    for cl in classes:
        g = group.elements[cl.representative]
        m = len((g - ident).kernel_basis())
        l = n - m
        betti = (1,) + (0,) * (2 * (n - l))
        entries.append((cl.representative, (FixedComponent(l, betti),)))
    d = OrbifoldDescriptor(group, n, tuple(entries))
    d.validate()
    return d


@dataclass(frozen=True)
class HypercohomologyTable:
    """dim H^{-k} per homological degree k, plus its Chen-Ruan relabeling.

    The Chen-Ruan table uses the paper convention: a component of codimension
    l contributes through the 2n - 2l - k reindexing, so the entry at
    cohomological degree 2n - k equals dim H^{-k}.
    """
    n: int
    dims: tuple[int, ...]  # index k = 0 .. 2n

    @property
    def chen_ruan(self) -> dict[int, int]:
        return {2 * self.n - k: self.dims[k] for k in range(2 * self.n + 1)}

    def euler(self) -> int:
        return sum(d if k % 2 == 0 else -d for k, d in enumerate(self.dims))


def orbifold_hypercohomology(descriptor: OrbifoldDescriptor) -> HypercohomologyTable:
    """dim H^{-k} = sum over classes and components of b_{2n - 2l - k}."""
    descriptor.validate()
    n = descriptor.ambient_dim
    dims = [0] * (2 * n + 1)
    for _, comps in descriptor.components:
        for comp in comps:
            top = 2 * (n - comp.codim)
            for j, b in enumerate(comp.betti):
                k = top - j
                if 0 <= k <= 2 * n:
                    dims[k] += b
    return HypercohomologyTable(n, tuple(dims))


@dataclass(frozen=True)
class EulerReport:
    chi_top: Fraction
    chi_hh: int
    identity_check: bool


def euler_characteristics(descriptor: OrbifoldDescriptor) -> EulerReport:
    """Both Euler characteristics of the descriptor, with the identity check.

    chi_top averages component Euler characteristics over group elements
    (classes weighted by their size); chi_hh is the Euler characteristic of
    the element-expanded hypercohomology table, computed independently via
    the degree-flipped alternating sum.  The check asserts
    chi_hh = |G| * chi_top and raises IdentityViolation on disagreement.
    """
    descriptor.validate()
    group = descriptor.group
    n = descriptor.ambient_dim
    class_size = {c.representative: c.size for c in conjugacy_classes(group)}

    chi_top = Fraction(0)
    for rep, comps in descriptor.components:
        chi_top += class_size[rep] * sum(c.euler() for c in comps)
    chi_top /= group.order

    # independent route: expand per element, reindex k = 2n - 2l - j, alternate
    dims = [0] * (2 * n + 1)
    for rep, comps in descriptor.components:
        w = class_size[rep]
        for comp in comps:
            top = 2 * (n - comp.codim)
            for j, b in enumerate(comp.betti):
                k = top - j
                if 0 <= k <= 2 * n:
                    dims[k] += w * b
    chi_hh = sum(d if k % 2 == 0 else -d for k, d in enumerate(dims))

    _check_euler_identity(chi_hh, chi_top, group.order)
    return EulerReport(chi_top, chi_hh, True)


def _check_euler_identity(chi_hh: int, chi_top: Fraction, order: int) -> None:
    if chi_hh != order * chi_top:
        raise IdentityViolation(
            f"chi_hh = {chi_hh} but |G| * chi_top = {order * chi_top}; "
            "the descriptor data is internally inconsistent")
