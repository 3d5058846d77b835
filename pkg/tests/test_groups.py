"""Group closure, reflection census, degrees and Coxeter machinery."""

import random
from fractions import Fraction
from itertools import permutations, product

import pytest

from reflab.cyclo import CycloMatrix, char_det, zeta
from reflab.errors import CapExceeded, HypothesisViolated, NotInvertible
from reflab.groups import (
    character_norm,
    conjugacy_classes,
    coxeter_number,
    decompose_reflection_group,
    find_coxeter_element,
    find_reflections,
    find_regular_element,
    fixed_subspace,
    generate_group,
    generated_order,
    group_report,
    is_irreducible,
    is_reflection_group,
    is_well_generated,
    molien_degrees,
    molien_series,
    restrict_to_subspace,
    support_and_rank,
    trivial_group,
)

from conftest import klein4_group, s3_2d_group, s3_3d_group, s4_3d_group, z2_group, z_m_group


def perm_compose_oracle():
    """Brute-force S_3 as permutation tuples, for cross-checking closure."""
    perms = {(0, 1, 2)}
    gens = [(1, 0, 2), (1, 2, 0)]
    changed = True
    while changed:
        changed = False
        for p in list(perms):
            for g in gens:
                q = tuple(p[g[i]] for i in range(3))
                if q not in perms:
                    perms.add(q)
                    changed = True
    return perms


class TestGenerateGroup:
    def test_z2_on_c1(self, z2):
        assert z2.order == 2

    def test_s3_by_permutation_matrices(self, s3_3d):
        assert s3_3d.order == len(perm_compose_oracle()) == 6

    def test_cyclic_diag_zeta5(self):
        g = generate_group([CycloMatrix([[zeta(5)]], 5)])
        assert g.order == 5

    def test_cap_exceeded(self):
        m = CycloMatrix([[2]], 1)  # infinite order
        with pytest.raises(CapExceeded):
            generate_group([m], cap=50)

    def test_singular_generator_rejected(self):
        with pytest.raises(NotInvertible):
            generate_group([CycloMatrix([[1, 0], [0, 0]], 1)])

    def test_closure_contains_inverses_and_identity(self, s4_3d):
        assert s4_3d.elements[0].is_identity
        for i in range(s4_3d.order):
            assert s4_3d.mul(i, s4_3d.inv(i)) == 0

    def test_elements_duplicate_free(self, s4_3d):
        assert len({m for m in s4_3d.elements}) == s4_3d.order

    def test_conductor_is_lifted_to_exponent(self, s3_2d):
        # rational input matrices, but 3-cycles force eigenvalues in Q(zeta_3)
        assert s3_2d.conductor == 6 == s3_2d.exponent


class TestConjugacyClasses:
    def test_z2(self, z2):
        assert [c.size for c in conjugacy_classes(z2)] == [1, 1]

    def test_s3_sizes_against_bruteforce(self, s3_3d):
        sizes = sorted(c.size for c in conjugacy_classes(s3_3d))
        # oracle: conjugation orbits computed on raw permutation tuples
        perms = sorted(perm_compose_oracle())
        compose = lambda p, q: tuple(p[q[i]] for i in range(3))
        invert = lambda p: tuple(p.index(i) for i in range(3))
        orbits = set()
        for p in perms:
            orbit = frozenset(compose(compose(g, p), invert(g)) for g in perms)
            orbits.add(orbit)
        assert sizes == sorted(len(o) for o in orbits) == [1, 2, 3]

    def test_z5_singletons(self):
        g = z_m_group(5)
        assert [c.size for c in conjugacy_classes(g)] == [1] * 5

    def test_class_times_centralizer(self, s4_3d):
        for c in conjugacy_classes(s4_3d):
            assert c.size * c.centralizer_order == s4_3d.order


class TestReflections:
    def test_z2_single_reflection(self, z2):
        census = find_reflections(z2)
        assert census.count == 1
        assert census.reflections[0].eigenvalue_on_root == -1
        assert census.reflections[0].eigenvalue == -1

    def test_s3_natural_three_transpositions(self, s3_3d):
        census = find_reflections(s3_3d)
        assert census.count == 3
        # oracle: rank check on each element directly
        ident = CycloMatrix.identity(3, s3_3d.conductor)
        expected = sum(1 for m in s3_3d.elements if (m - ident).rank() == 1)
        assert census.count == expected

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
    def test_z_m_census(self, m):
        census = find_reflections(z_m_group(m))
        assert census.count == m - 1
        assert census.hyperplane_count == 1

    def test_reflection_fixes_hyperplane_and_scales_root(self, s4_3d):
        census = find_reflections(s4_3d)
        zero = s4_3d.scalar(0)
        for r in census.reflections:
            g = s4_3d.elements[r.element]
            # s(root) = lambda_vee * root
            image = [sum((g.entries[i][j] * r.root[j] for j in range(3)), zero)
                     for i in range(3)]
            assert all(a == r.eigenvalue_on_root * b for a, b in zip(image, r.root))
            # s acts trivially on ker(coroot)
            kernel = CycloMatrix([list(r.coroot)], s4_3d.conductor).kernel_basis()
            for v in kernel:
                gv = [sum((g.entries[i][j] * v[j] for j in range(3)), zero)
                      for i in range(3)]
                assert tuple(gv) == tuple(v)

    def test_coroot_pairing_normalized(self, s3_2d):
        census = find_reflections(s3_2d)
        zero = s3_2d.scalar(0)
        for r in census.reflections:
            pairing = sum((a * b for a, b in zip(r.coroot, r.root)), zero)
            assert pairing == 2


class TestSupport:
    def test_z2(self, z2):
        support = support_and_rank(z2)
        assert support.rank == 1 and support.fixed_dim == 0 and support.splits

    def test_s3_natural(self, s3_3d):
        support = support_and_rank(s3_3d)
        assert support.rank == 2 and support.fixed_dim == 1 and support.splits
        # oracle: the fixed space is the diagonal line
        diag = fixed_subspace(s3_3d)
        assert len(diag) == 1
        assert diag[0][0] == diag[0][1] == diag[0][2]

    def test_trivial_group(self):
        g = trivial_group(2)
        support = support_and_rank(g)
        assert support.rank == 0 and support.fixed_dim == 2


class TestIrreducibility:
    def test_z2_irreducible(self, z2):
        assert is_irreducible(z2)

    def test_s3_natural_norm_2(self, s3_3d):
        assert character_norm(s3_3d) == 2
        assert not is_irreducible(s3_3d)

    def test_s3_2d_irreducible(self, s3_2d):
        assert character_norm(s3_2d) == 1


class TestMolien:
    @pytest.mark.parametrize("m", [2, 3, 5, 7])
    def test_z_m_degrees(self, m):
        # oracle: the Molien series of Z_m is 1/(1 - t^m) exactly
        g = z_m_group(m)
        series = molien_series(g, 2 * m + 1)
        expected = [Fraction(1) if k % m == 0 else Fraction(0)
                    for k in range(2 * m + 2)]
        assert series == expected
        assert molien_degrees(g) == [m]

    def test_s3_2d_degrees_with_series_oracle(self, s3_2d):
        # oracle: expand 1/((1-t^2)(1-t^3)) to order 6 by hand recurrence
        coeffs = [Fraction(0)] * 7
        for i in range(0, 7, 2):
            for j in range(0, 7 - i, 3):
                coeffs[i + j] += 1
        assert molien_series(s3_2d, 6) == coeffs
        assert molien_degrees(s3_2d) == [2, 3]

    def test_trivial_group_degree_one(self):
        assert molien_degrees(trivial_group(1)) == [1]

    def test_s4_degrees(self, s4_3d):
        assert molien_degrees(s4_3d) == [2, 3, 4]

    def test_shephard_todd_identities(self, s3_2d, s4_3d, klein4):
        for g in (s3_2d, s4_3d, klein4):
            degrees = molien_degrees(g)
            census = find_reflections(g)
            prod = 1
            for d in degrees:
                prod *= d
            assert prod == g.order
            assert sum(d - 1 for d in degrees) == census.count


class TestCoxeterNumber:
    def test_s3_2d(self, s3_2d):
        assert coxeter_number(s3_2d) == 3

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
    def test_z_m(self, m):
        assert coxeter_number(z_m_group(m)) == m

    def test_cross_check_against_top_degree(self, s4_3d):
        assert coxeter_number(s4_3d, degrees=[2, 3, 4]) == 4


class TestWellGenerated:
    def test_z_m_witness_generates(self):
        g = z_m_group(6)
        ok, witness = is_well_generated(g)
        assert ok and len(witness) == 1
        assert generated_order(g, witness) == g.order

    def test_s3_2d(self, s3_2d):
        ok, witness = is_well_generated(s3_2d)
        assert ok and len(witness) == 2

    def test_klein4(self, klein4):
        ok, witness = is_well_generated(klein4)
        assert ok and len(witness) == 2


class TestRegularAndCoxeterElements:
    def test_z_m_generator_is_regular(self):
        g = z_m_group(5)
        found = find_regular_element(g, zeta(5))
        assert found is not None
        idx, witness = found
        assert g.element_order(idx) == 5
        assert any(x for x in witness)

    def test_s3_zeta3_regular_is_three_cycle(self, s3_2d):
        z3 = zeta(6) ** 2
        idx, witness = find_regular_element(s3_2d, z3)
        assert s3_2d.element_order(idx) == 3
        census = find_reflections(s3_2d)
        zero = s3_2d.scalar(0)
        for r in census.reflections:
            assert not sum((a * b for a, b in zip(r.coroot, witness)), zero).is_zero

    def test_s3_no_order_five_element(self, s3_2d):
        # zeta_5 does not live at conductor 6; no element can have it
        lifted_elements = [m.lift(30) for m in s3_2d.elements]
        lifted = generate_group([lifted_elements[i] for i in s3_2d.generator_indices],
                                conductor=30)
        assert find_regular_element(lifted, zeta(5).lift(30)) is None

    def test_coxeter_s3(self, s3_2d):
        c = find_coxeter_element(s3_2d)
        assert s3_2d.element_order(c) == 3
        assert char_det(s3_2d.elements[c]) == [1, 1, 1]  # eigenvalues zeta_3, zeta_3^2
        ident = CycloMatrix.identity(2, s3_2d.conductor)
        assert (s3_2d.elements[c] - ident).kernel_basis() == []

    def test_coxeter_s4_is_four_cycle(self, s4_3d):
        c = find_coxeter_element(s4_3d)
        assert s4_3d.element_order(c) == 4
        ident = CycloMatrix.identity(3, s4_3d.conductor)
        assert (s4_3d.elements[c] - ident).kernel_basis() == []

    def test_coxeter_z_m(self):
        g = z_m_group(6)
        c = find_coxeter_element(g)
        assert g.element_order(c) == 6

    def test_coxeter_rejects_reducible(self, s3_3d):
        with pytest.raises(HypothesisViolated):
            find_coxeter_element(s3_3d)


class TestDecomposition:
    def test_klein4_two_lines(self, klein4):
        factors = decompose_reflection_group(klein4)
        assert len(factors) == 2
        assert sorted(len(b) for b, _ in factors) == [1, 1]

    def test_s3_natural_single_plane(self, s3_3d):
        factors = decompose_reflection_group(s3_3d)
        assert len(factors) == 1
        basis, elements = factors[0]
        assert len(basis) == 2 and len(elements) == 3

    def test_irreducible_single_piece(self, s4_3d):
        factors = decompose_reflection_group(s4_3d)
        assert len(factors) == 1

    def test_factors_are_g_stable_and_irreducible(self, s3_3d):
        factors = decompose_reflection_group(s3_3d)
        basis, elements = factors[0]
        sub = restrict_to_subspace(s3_3d, basis, elements)
        assert sub.order == 6
        assert is_irreducible(sub)

    def test_restriction_of_s3_natural_matches_2d_rep(self, s3_3d, s3_2d):
        support = support_and_rank(s3_3d)
        sub = restrict_to_subspace(s3_3d, support.basis)
        assert sub.order == 6
        assert molien_degrees(sub) == [2, 3]


class TestGroupReport:
    def test_s3_2d_report(self, s3_2d):
        r = group_report(s3_2d)
        assert (r.order, r.reflection_count, r.hyperplane_count) == (6, 3, 3)
        assert r.degrees == [2, 3] and r.coxeter_number == 3
        assert r.well_generated and r.irreducible and r.reflection_group
        assert r.coxeter_element is not None

    def test_s3_natural_report(self, s3_3d):
        r = group_report(s3_3d)
        assert r.rank == 2 and r.fixed_dim == 1 and not r.irreducible
        assert r.degrees == [1, 2, 3]

    def test_reflection_group_flag(self, s4_3d):
        assert is_reflection_group(s4_3d)
        g = generate_group([CycloMatrix([[zeta(4), 0], [0, zeta(4)]], 4)])
        assert not is_reflection_group(g)
