"""The non-reduced affine root system of type (C_n^v, C_n) and its subsystems.

Roots are affine-linear functions on R^n, written a = alpha + r*c with
finite part alpha (an integer vector in the epsilon-basis) and constant part
r in (1/2)Z, stored doubled.  The full system splits into five orbits under
the extended affine Weyl group:

    O1: +-e_i + r c          (r integer)
    O2: +-2e_i + r c         (r even integer)     = 2*O1
    O3: +-e_i + r c          (r half-odd)         = O1 + c/2
    O4: +-2e_i + r c         (r odd integer)      = O2 + c
    O5: +-e_i +- e_j + r c   (i < j, r integer)

Simple roots: a_0 = -2e_1 + c, a_j = e_j - e_{j+1}, a_n = 2e_n.  A root is
positive iff r > 0, or r = 0 and the finite part is positive in the
epsilon-order; this matches N-span membership in the simple roots (kept as a
brute-force oracle in the test suite).

Each classical subsystem (the nine rows of the specialization table) and each
of the three root systems underlying the type B/C/D walk formulas is a union
of orbit slices; membership predicates and per-subsystem orbit labels live
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "AffineRoot",
    "NotARoot",
    "ORBITS",
    "SUBSYSTEMS",
    "orbit_of",
    "is_positive",
    "subsystem_contains",
    "subsystem_orbit",
    "reflect_root",
    "enumerate_positive",
]


class NotARoot(ValueError):
    """The (alpha, r) pair does not lie in the (C_n^v, C_n) system."""


def _shape(alpha: tuple[int, ...]) -> str:
    """'e', '2e' or 'ee' for the three admissible finite-part shapes."""
    nz = [(i, a) for i, a in enumerate(alpha) if a]
    if len(nz) == 1:
        a = abs(nz[0][1])
        if a == 1:
            return "e"
        if a == 2:
            return "2e"
    elif len(nz) == 2 and abs(nz[0][1]) == 1 and abs(nz[1][1]) == 1:
        return "ee"
    raise NotARoot(f"finite part {alpha} not of shape +-e_i, +-2e_i, +-e_i+-e_j")


@dataclass(frozen=True)
class AffineRoot:
    """alpha + (r2/2) c, validated at construction."""

    alpha: tuple[int, ...]
    r2: int

    def __post_init__(self):
        shape = _shape(self.alpha)
        if shape != "e" and self.r2 % 2:
            raise NotARoot(f"{self.alpha} requires an integer constant part")

    @property
    def n(self) -> int:
        return len(self.alpha)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-a for a in self.alpha), -self.r2)

    def double(self) -> "AffineRoot":
        return AffineRoot(tuple(2 * a for a in self.alpha), 2 * self.r2)

    def try_double(self) -> "AffineRoot | None":
        """2a when 2a is again a root, else None."""
        try:
            return self.double()
        except NotARoot:
            return None

    def norm2(self) -> int:
        return sum(a * a for a in self.alpha)

    def pairing2(self, v2: tuple[int, ...]) -> int:
        """Doubled inner product of the finite part with a doubled vector v2."""
        return sum(a * x for a, x in zip(self.alpha, v2))

    def finite_positive(self) -> bool:
        """Is the finite part in the positive half of the epsilon-order?"""
        for a in self.alpha:
            if a:
                return a > 0
        raise NotARoot("constant function is not a root")

    def text(self) -> str:
        parts = []
        for i, a in enumerate(self.alpha):
            if a == 0:
                continue
            sign = "+" if a > 0 else "-"
            mag = abs(a)
            parts.append(f"{sign}{'' if mag == 1 else mag}e{i + 1}")
        if self.r2:
            r = Fraction(self.r2, 2)
            sign = "+" if r > 0 else "-"
            mag = abs(r)
            parts.append(f"{sign}{'' if mag == 1 else mag}c")
        return "".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "r2": self.r2}

    @classmethod
    def from_json(cls, data: dict) -> "AffineRoot":
        return cls(tuple(data["alpha"]), data["r2"])


def simple_roots(n: int) -> list[AffineRoot]:
    """a_0, ..., a_n for the (C_n^v, C_n) presentation."""
    e = lambda i, k=1: tuple(k if j == i else 0 for j in range(n))
    out = [AffineRoot(e(0, -2), 2)]
    for j in range(n - 1):
        out.append(AffineRoot(tuple((1 if i == j else -1 if i == j + 1 else 0) for i in range(n)), 0))
    out.append(AffineRoot(e(n - 1, 2), 0))
    return out


ORBITS = ("O1", "O2", "O3", "O4", "O5")


def orbit_of(a: AffineRoot) -> str:
    shape = _shape(a.alpha)
    if shape == "e":
        return "O1" if a.r2 % 2 == 0 else "O3"
    if shape == "2e":
        return "O2" if a.r2 % 4 == 0 else "O4"
    return "O5"


def is_positive(a: AffineRoot) -> bool:
    if a.r2 != 0:
        return a.r2 > 0
    return a.finite_positive()


def reflect_root(a: AffineRoot, f: AffineRoot) -> AffineRoot:
    """The reflection s_a applied to f; fixes c.

    s_a(f) = f - <f, a^v> a with a^v = 2a/<abar, abar>; the pairing ignores
    constant parts.  <f, a^v> is an integer for every pair of roots, so the
    result stays in the lattice.
    """
    norm2 = a.norm2()
    pair = sum(x * y for x, y in zip(a.alpha, f.alpha))
    if (2 * pair) % norm2:
        raise NotARoot("reflection left the lattice")
    coeff = 2 * pair // norm2
    alpha = tuple(x - coeff * y for x, y in zip(f.alpha, a.alpha))
    return AffineRoot(alpha, f.r2 - coeff * a.r2)


# -- subsystems -------------------------------------------------------

# Each entry: orbit label of a member root, keyed by the ambient orbit.
# A root belongs to the subsystem iff its ambient orbit appears as a key.
_SUBSYSTEM_ORBITS: dict[str, dict[str, str]] = {
    # nine rows of the specialization table
    "B": {"O1": "s", "O5": "l"},
    "Bv": {"O2": "l", "O5": "s"},
    "C": {"O2": "l", "O4": "l", "O5": "s"},
    "Cv": {"O1": "s", "O3": "s", "O5": "l"},
    "BC": {"O1": "s", "O4": "l", "O5": "m"},
    "D": {"O5": "t"},
    "BC_C": {"O1": "s", "O2": "l", "O4": "l", "O5": "m"},
    "Cv_BC": {"O1": "s", "O3": "s", "O2": "l", "O5": "m"},
    "Bv_B": {"O1": "s", "O2": "l", "O5": "m"},
    # root systems underlying the type B/C/D walk formulas
    "CvRY": {"O1": "s", "O5": "m"},
    "BvRY": {"O2": "l", "O4": "l", "O5": "m"},
    "DRY": {"O5": "t"},
}

SUBSYSTEMS = tuple(_SUBSYSTEM_ORBITS)


def subsystem_contains(tag: str, a: AffineRoot) -> bool:
    return orbit_of(a) in _SUBSYSTEM_ORBITS[tag]


def subsystem_orbit(tag: str, a: AffineRoot) -> str:
    """The s/m/l (or t) label of a member root; raises for non-members."""
    orb = orbit_of(a)
    table = _SUBSYSTEM_ORBITS[tag]
    if orb not in table:
        raise NotARoot(f"{a.text()} not in subsystem {tag}")
    return table[orb]


def enumerate_positive(n: int, max_c: Fraction, tag: str | None = None):
    """All positive roots (of S, or of a subsystem) with constant part <= max_c.

    Deterministic order: sorted by (r2, alpha).
    """
    max_r2 = int(2 * Fraction(max_c))
    out = []
    vectors = []
    for i in range(n):
        for s in (1, -1):
            vectors.append(tuple(s if j == i else 0 for j in range(n)))
            vectors.append(tuple(2 * s if j == i else 0 for j in range(n)))
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    vectors.append(tuple(si if k == i else sj if k == j else 0 for k in range(n)))
    for r2 in range(0, max_r2 + 1):
        for alpha in vectors:
            try:
                a = AffineRoot(alpha, r2)
            except NotARoot:
                continue
            if not is_positive(a):
                continue
            if tag is not None and not subsystem_contains(tag, a):
                continue
            out.append(a)
    return sorted(out, key=lambda a: (a.r2, a.alpha))
