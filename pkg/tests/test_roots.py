"""Affine roots: orbits, positivity, reflections, subsystem membership."""

from fractions import Fraction

import pytest

from koornwalk.roots import (
    AffineRoot,
    NotARoot,
    enumerate_positive,
    is_positive,
    orbit_of,
    reflect_root,
    simple_roots,
    subsystem_contains,
    subsystem_orbit,
)
from util import span_coefficients


def root(alpha, r2=0):
    return AffineRoot(tuple(alpha), r2)


def all_roots(n, max_r2):
    out = []
    for a in enumerate_positive(n, Fraction(max_r2, 2)):
        out.append(a)
        out.append(-a)
    return out


def test_basis_orbits():
    a = simple_roots(2)
    half_a0 = root((-1, 0), 1)
    assert orbit_of(half_a0) == "O3"
    assert orbit_of(a[2]) == "O2"          # a_n = 2 e_n
    assert orbit_of(a[1]) == "O5"          # a_1 = e_1 - e_2
    assert orbit_of(a[0]) == "O4"          # a_0 = -2 e_1 + c
    assert orbit_of(root((0, 1))) == "O1"  # e_n = a_n / 2


def test_invalid_roots_rejected():
    with pytest.raises(NotARoot):
        root((3, 0))
    with pytest.raises(NotARoot):
        root((1, 1), 1)   # e_i + e_j needs an integer constant part
    with pytest.raises(NotARoot):
        root((2, 0), 1)   # 2 e_i needs an integer constant part
    with pytest.raises(NotARoot):
        root((0, 0), 2)   # constants are not roots


def test_orbit_partition():
    displays = {
        "O1": lambda a: a.norm2() == 1 and a.r2 % 2 == 0,
        "O2": lambda a: a.norm2() == 4 and a.r2 % 4 == 0,
        "O3": lambda a: a.norm2() == 1 and a.r2 % 2 == 1,
        "O4": lambda a: a.norm2() == 4 and a.r2 % 4 == 2,
        "O5": lambda a: a.norm2() == 2,
    }
    for n in (2, 3):
        for a in all_roots(n, 6):
            hits = [name for name, pred in displays.items() if pred(a)]
            assert hits == [orbit_of(a)]


def test_positivity_examples():
    a = simple_roots(2)
    assert is_positive(a[0])
    assert not is_positive(-a[1])
    assert is_positive(root((-1, 0), 1))


def test_positivity_matches_span_oracle():
    # A root is positive iff it lies in the nonnegative cone on the simple
    # roots.  The roots of the divisible orbits O1/O3 sit at half-integer
    # coefficients (e_n = a_n/2), so the lattice test is run on 2a.
    for n in (2, 3):
        for a in all_roots(n, 6):
            in_cone = (
                span_coefficients(a.alpha, a.r2) is not None
                or span_coefficients(tuple(2 * x for x in a.alpha), 2 * a.r2) is not None
            )
            assert is_positive(a) == in_cone, a.text()
            coeffs = span_coefficients(a.alpha, a.r2)
            if coeffs is not None:
                # reassemble to double-check the oracle itself
                total = [0] * n
                r2 = 0
                for c, s in zip(coeffs, simple_roots(n)):
                    total = [t + c * x for t, x in zip(total, s.alpha)]
                    r2 += c * s.r2
                assert tuple(total) == a.alpha and r2 == a.r2


def test_reflection_action_table():
    n = 2
    a = simple_roots(n)
    e1 = root((1, 0))
    e2 = root((0, 1))
    assert reflect_root(a[0], e1) == root((-1, 0), 2)   # s_0(e_1) = c - e_1
    assert reflect_root(a[2], e2) == root((0, -1))      # s_n(e_n) = -e_n
    assert reflect_root(a[1], e2) == e1                 # s_1(e_2) = e_1


def test_reflections_permute_roots_preserving_orbits():
    for n in (2, 3):
        simples = simple_roots(n)
        for s in simples:
            for a in all_roots(n, 4):
                b = reflect_root(s, a)
                assert orbit_of(b) == orbit_of(a)


def test_exactly_one_positive_flip_per_generator():
    # {a in S^+ : s_i(a) in S^-} = {a_i} plus a_i/2 when that is a root
    for n in (2, 3):
        simples = simple_roots(n)
        for i, s in enumerate(simples):
            flipped = []
            for a in enumerate_positive(n, Fraction(3)):
                if not is_positive(reflect_root(s, a)):
                    flipped.append(a)
            expected = {s}
            if all(x % 2 == 0 for x in s.alpha) and s.r2 % 2 == 0:
                expected.add(AffineRoot(tuple(x // 2 for x in s.alpha), s.r2 // 2))
            assert set(flipped) == expected, (n, i)


SUBSYSTEM_DISPLAYS = {
    # finite-part shape ('e', '2e', 'ee') and constant-part condition on r2
    "B": lambda a: (a.norm2() == 1 and a.r2 % 2 == 0) or a.norm2() == 2,
    "Bv": lambda a: (a.norm2() == 4 and a.r2 % 4 == 0) or a.norm2() == 2,
    "C": lambda a: a.norm2() == 4 or a.norm2() == 2,
    "Cv": lambda a: a.norm2() == 1 or a.norm2() == 2,
    "BC": lambda a: (a.norm2() == 1 and a.r2 % 2 == 0) or (a.norm2() == 4 and a.r2 % 4 == 2) or a.norm2() == 2,
    "D": lambda a: a.norm2() == 2,
    "BC_C": lambda a: (a.norm2() == 1 and a.r2 % 2 == 0) or a.norm2() == 4 or a.norm2() == 2,
    "Cv_BC": lambda a: a.norm2() == 1 or (a.norm2() == 4 and a.r2 % 4 == 0) or a.norm2() == 2,
    "Bv_B": lambda a: (a.norm2() == 1 and a.r2 % 2 == 0) or (a.norm2() == 4 and a.r2 % 4 == 0) or a.norm2() == 2,
    "CvRY": lambda a: (a.norm2() == 1 and a.r2 % 2 == 0) or a.norm2() == 2,
    "BvRY": lambda a: a.norm2() == 4 or a.norm2() == 2,
    "DRY": lambda a: a.norm2() == 2,
}


def test_subsystem_membership_matches_displays():
    for n in (2, 3):
        for a in all_roots(n, 4):
            for tag, pred in SUBSYSTEM_DISPLAYS.items():
                assert subsystem_contains(tag, a) == pred(a), (tag, a.text())


def test_subsystem_orbit_examples():
    assert subsystem_contains("C", root((2, 0), 2))
    assert subsystem_orbit("C", root((2, 0), 2)) == "l"
    assert not subsystem_contains("C", root((1, 0)))
    assert subsystem_contains("Cv", root((1, 0), 1))
    assert subsystem_orbit("Cv", root((1, 0), 1)) == "s"
    with pytest.raises(NotARoot):
        subsystem_orbit("C", root((1, 0)))


def test_root_text_and_json():
    a = root((-1, 0), 3)
    assert a.text() == "-e1+3/2c"
    assert AffineRoot.from_json(a.to_json()) == a
    assert root((1, -1)).text() == "+e1-e2"
