"""Shared corpus of small groups used across the test modules."""

import pytest

from reflab.cyclo import CycloMatrix, zeta
from reflab.groups import generate_group, trivial_group


def z_m_group(m):
    """Cyclic Z_m acting on C^1 by the primitive m-th root of unity."""
    return generate_group([CycloMatrix([[zeta(m)]], m)])


def z2_group():
    return generate_group([CycloMatrix([[-1]], 1)])


def s3_2d_group():
    """S_3 in its 2-dimensional reflection representation (rational matrices)."""
    rot = CycloMatrix([[0, -1], [1, -1]], 1)
    swap = CycloMatrix([[0, 1], [1, 0]], 1)
    return generate_group([rot, swap])


def s3_3d_group():
    """S_3 permuting coordinates of C^3 (reducible; fixes the diagonal)."""
    t12 = CycloMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], 1)
    c123 = CycloMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]], 1)
    return generate_group([t12, c123])


def s4_3d_group():
    """S_4 in its 3-dimensional reflection representation.

    The permutation action on the sum-zero subspace of C^4 in the basis
    f_i = e_i - e_4.
    """
    t12 = CycloMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], 1)
    c1234 = CycloMatrix([[-1, -1, -1], [1, 0, 0], [0, 1, 0]], 1)
    return generate_group([t12, c1234])


def klein4_group():
    return generate_group([
        CycloMatrix([[-1, 0], [0, 1]], 1),
        CycloMatrix([[1, 0], [0, -1]], 1),
    ])


@pytest.fixture(scope="session")
def z2():
    return z2_group()


@pytest.fixture(scope="session")
def s3_2d():
    return s3_2d_group()


@pytest.fixture(scope="session")
def s3_3d():
    return s3_3d_group()


@pytest.fixture(scope="session")
def s4_3d():
    return s4_3d_group()


@pytest.fixture(scope="session")
def klein4():
    return klein4_group()


@pytest.fixture(scope="session")
def trivial1():
    return trivial_group(1)
