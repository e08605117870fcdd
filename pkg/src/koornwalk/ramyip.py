"""Alcove-walk sums for non-symmetric Koornwinder and Macdonald polynomials.

One engine drives four systems, each a bundle of

  * a group presentation supplying words and walks,
  * a parameter ring,
  * the folding-weight argument  z(beta) = q^(sh(-beta)) t^(hgt(-beta)),
    where sh(alpha + r c) = -r and hgt pairs the finite part against a
    per-parameter rho vector,
  * folding factors  psi_i^+(z) = (A_i + z^(1/2) B_i) / (1 - z)  and
    psi_i^-(z) = (z A_i + z^(1/2) B_i) / (1 - z)   (the minus case is the
    familiar -(A + z^(-1/2) B)/(1 - z^(-1)) with numerator and denominator
    cleared by -z), and
  * the direction factor: the product of tau^(1/2) over the inversions of
    the endpoint direction in the system's finite root system.  Defining it
    through inversions rather than through a reduced word makes it
    well-defined for directions that are not products of the finite
    generators, which happens in the type D system.

The polynomial of weight mu is the sum over all walks of the word of the
shortest coset representative w(mu):

    E_mu(x) = sum_p  [prod over foldings psi^{+/-}(z_k)] * taudir(p) * x^wgt(p)

Every position k contributes either the crossing factor (1 - z_k) or a
folding numerator to the walk's numerator, so the whole sum sits over the
single common denominator prod_k (1 - z_k): coefficients never accumulate
denominators pairwise and stay exact.

The systems:

    cc  Koornwinder, parameters (q, t, t0, tn, u0, un)
    c   type C walks, parameters (q, ts, tm)
    b   type B walks, parameters (q, tm, tl)
    d   type D walks, parameters (q, t)

A specialization rule (a map from the cc parameters to monomials in a
target ring) may be applied to the atoms before summing; folding factors
that specialize to zero prune their branches, which is how the
specialized sums collapse onto the sub-walk sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import Laurent, Rat, XPoly
from .roots import AffineRoot
from .walks import beta_roots
from .weyl import Affine, min_coset_rep, normal_form, presentation

__all__ = [
    "SYSTEMS",
    "WalkSystem",
    "NSPoly",
    "SingularFoldWeight",
    "WalkBudgetExceeded",
    "system",
    "nonsymmetric_poly",
    "fold_weight_argument",
    "folding_factor",
    "direction_factor",
]

DEFAULT_BUDGET = 20


class SingularFoldWeight(ArithmeticError):
    """A folding-factor argument equal to 1 (vanishing denominator)."""


class WalkBudgetExceeded(RuntimeError):
    """Reduced word longer than the configured walk budget."""


def _diff(ring: tuple[str, ...], var: str) -> Laurent:
    """var^(-1/2) - var^(1/2)."""
    lo = Laurent.gen(ring, var, -1)
    hi = Laurent.gen(ring, var, 1)
    return lo - hi


@dataclass(frozen=True)
class WalkSystem:
    key: str
    pres_name: str
    ring: tuple[str, ...]
    n: int

    @property
    def pres(self):
        return presentation(self.pres_name, self.n)

    # rho vectors, doubled, per parameter appearing in t^hgt
    def _rho2(self) -> dict[str, tuple[int, ...]]:
        n = self.n
        staircase = tuple(2 * (n - 1 - i) for i in range(n))
        ones = (1,) * n
        if self.key == "cc":
            return {"t": staircase, "t0": ones, "tn": ones}
        if self.key == "c":
            return {"ts": ones, "tm": staircase}
        if self.key == "b":
            return {"tm": staircase, "tl": ones}
        return {"t": staircase}

    def fold_weight_argument(self, beta: AffineRoot) -> Laurent:
        """z(beta) = q^(sh(-beta)) t^(hgt(-beta)), a coefficient-1 monomial.

        In the type C system the short roots are the halves of the walls they
        share with the ambient Koornwinder system, so sh and hgt are read off
        the coroot; this is what makes matched folding steps of the two walk
        models carry identical arguments.  The other systems pair against the
        root itself.
        """
        if self.key == "c" and beta.norm2() == 1:
            beta = beta.double()
        exps = [0] * len(self.ring)
        exps[self.ring.index("q")] = beta.r2
        for var, rho2 in self._rho2().items():
            exps[self.ring.index(var)] = -sum(r * a for r, a in zip(rho2, beta.alpha))
        return Laurent.monomial(self.ring, exps)

    def psi_pieces(self, letter: int) -> tuple[Laurent, Laurent]:
        """(A, B) with psi^+(z) = (A + z^(1/2) B)/(1 - z)."""
        n, ring = self.n, self.ring
        zero = Laurent.zero(ring)
        if self.key == "cc":
            if letter == 0:
                return _diff(ring, "un"), _diff(ring, "u0")
            if letter == n:
                return _diff(ring, "tn"), _diff(ring, "t0")
            return _diff(ring, "t"), zero
        if self.key == "c":
            return _diff(ring, "ts") if letter == n else _diff(ring, "tm"), zero
        if self.key == "b":
            return _diff(ring, "tl") if letter in (0, n) else _diff(ring, "tm"), zero
        return _diff(ring, "t"), zero

    @property
    def finite_tau_roots(self) -> tuple[tuple[tuple[int, ...], str], ...]:
        """Positive finite roots of the system with their tau parameter."""
        n = self.n
        e = lambda i, k=1: tuple(k if j == i else 0 for j in range(n))
        long_roots = [(e(i, 2), None) for i in range(n)]
        short_roots = [(e(i), None) for i in range(n)]
        pairs = []
        for i in range(n):
            for j in range(i + 1, n):
                for sj in (1, -1):
                    pairs.append(tuple(1 if k == i else sj if k == j else 0 for k in range(n)))
        if self.key == "cc":
            return tuple([(a, "tn") for a, _ in long_roots] + [(a, "t") for a in pairs])
        if self.key == "c":
            return tuple([(a, "ts") for a, _ in short_roots] + [(a, "tm") for a in pairs])
        if self.key == "b":
            return tuple([(a, "tl") for a, _ in long_roots] + [(a, "tm") for a in pairs])
        return tuple((a, "t") for a in pairs)

    def direction_factor(self, perm: tuple[int, ...]) -> Laurent:
        """Product of tau^(1/2) over the inversions of the direction."""
        from .weyl import sp_apply

        exps = [0] * len(self.ring)
        for alpha, var in self.finite_tau_roots:
            img = sp_apply(perm, alpha)
            for a in img:
                if a:
                    if a < 0:
                        exps[self.ring.index(var)] += 1
                    break
        return Laurent.monomial(self.ring, exps)


@lru_cache(maxsize=None)
def system(key: str, n: int) -> WalkSystem:
    pres_names = {"cc": "cc", "c": "cry", "b": "bry", "d": "d"}
    rings = {
        "cc": ("q", "t", "t0", "tn", "u0", "un"),
        "c": ("q", "ts", "tm"),
        "b": ("q", "tm", "tl"),
        "d": ("q", "t"),
    }
    if key not in rings:
        raise ValueError(f"unknown walk system {key!r}")
    return WalkSystem(key, pres_names[key], rings[key], n)


def fold_weight_argument(sys: WalkSystem, beta: AffineRoot) -> Laurent:
    return sys.fold_weight_argument(beta)


def folding_factor(sys: WalkSystem, letter: int, sign: int, z: Laurent) -> Rat:
    """psi_letter^sign evaluated at the monomial z, as a rational function."""
    if not z.is_monomial():
        raise ValueError("folding-factor argument must be a monomial")
    if z.is_one():
        raise SingularFoldWeight("folding-factor argument equals 1")
    a_piece, b_piece = sys.psi_pieces(letter)
    num = a_piece if sign > 0 else a_piece * z
    if b_piece:
        num = num + z.sqrt_monomial() * b_piece
    return Rat(num, Laurent.one(sys.ring) - z)


def direction_factor(sys: WalkSystem, perm: tuple[int, ...]) -> Laurent:
    return sys.direction_factor(perm)


@dataclass
class NSPoly:
    """A walk-sum polynomial plus its provenance."""

    system: str
    n: int
    mu: tuple[int, ...]
    poly: XPoly
    auto: str
    word: tuple[int, ...]
    walk_count: int
    target_ring: tuple[str, ...]

    def coeff_at_mu(self) -> Rat:
        """Diagnostic: the coefficient of x^mu (no monicity is claimed)."""
        return self.poly.coeff(tuple(2 * m for m in self.mu))

    def __eq__(self, other):
        if not isinstance(other, NSPoly):
            return NotImplemented
        return self.poly == other.poly


def _subst_atom(atom: Laurent, rule) -> Laurent:
    if rule is None:
        return atom
    return atom.substitute(rule.target_ring, rule.images)


def nonsymmetric_poly(
    key: str,
    n: int,
    mu: tuple[int, ...],
    rule=None,
    budget: int = DEFAULT_BUDGET,
    word_override: tuple[str, tuple[int, ...]] | None = None,
    point: dict | None = None,
) -> NSPoly:
    """The walk-sum polynomial E_mu for the given system.

    ``rule`` (a specialization with cc-source) is applied to every parameter
    atom before summation, so the returned value is the specialized
    polynomial computed directly.  ``point`` additionally evaluates every
    parameter atom at rational values (which must admit exact square roots),
    producing the polynomial over plain rationals: the fast mode for sweeps.
    ``word_override`` forces a particular (auto, word) pair; it must
    evaluate to the minimal coset representative and exists to exercise
    word-independence.
    """
    sys = system(key, n)
    pres = sys.pres
    mu = tuple(mu)
    if len(mu) != n:
        raise ValueError("weight length must equal the rank")
    if word_override is None:
        w = min_coset_rep(pres, mu)
        auto, word = normal_form(pres, w)
    else:
        auto, word = word_override
        w = None
    if len(word) > budget:
        raise WalkBudgetExceeded(f"word length {len(word)} exceeds budget {budget}")
    ring = sys.ring if rule is None else rule.target_ring
    if point is not None:
        numeric = lambda atom: Laurent.const((), atom.evaluate(point))
        ring = ()
    else:
        numeric = lambda atom: atom

    betas = beta_roots(pres, word)
    one = Laurent.one(ring)
    crossing = []
    fold_plus = []
    fold_minus = []
    for k, i in enumerate(word):
        z = numeric(_subst_atom(sys.fold_weight_argument(betas[k]), rule))
        if z.is_one():
            raise SingularFoldWeight(
                f"fold weight at position {k + 1} of {key} word {word} equals 1"
            )
        a_piece, b_piece = sys.psi_pieces(i)
        a_piece = numeric(_subst_atom(a_piece, rule))
        b_piece = numeric(_subst_atom(b_piece, rule))
        zb = z.sqrt_monomial() * b_piece if b_piece else None
        plus = a_piece + zb if zb is not None else a_piece
        minus = a_piece * z + zb if zb is not None else a_piece * z
        crossing.append(one - z)
        fold_plus.append(plus)
        fold_minus.append(minus)

    start = pres.auto(auto)
    buckets: dict[tuple, Laurent] = {}

    def leaf(v: Affine, numer: Laurent):
        if numer.is_zero():
            return
        tau = numeric(_subst_atom(sys.direction_factor(v.perm), rule))
        key2 = v.trans2
        if any(x % 2 for x in key2):
            raise ValueError(f"walk weight {key2} left the integral lattice")
        add = numer * tau
        cur = buckets.get(key2)
        buckets[key2] = add if cur is None else cur + add

    def rec(k: int, v: Affine, numer: Laurent):
        if k == len(word):
            leaf(v, numer)
            return
        i = word[k]
        rec(k + 1, v * pres.gens[i], numer * crossing[k])
        gamma = v.act_root(pres.simple[i])
        piece = fold_plus[k] if gamma.finite_positive() else fold_minus[k]
        if not piece.is_zero():
            rec(k + 1, v, numer * piece)

    rec(0, start, one)

    den = one
    for f in crossing:
        den = den * f
    terms = {e: Rat(num, den) for e, num in buckets.items() if num}
    xvars = tuple(f"x{i + 1}" for i in range(n))
    poly = XPoly(xvars, ring, terms)
    return NSPoly(
        system=key,
        n=n,
        mu=mu,
        poly=poly,
        auto=auto,
        word=tuple(word),
        walk_count=1 << len(word),
        target_ring=ring,
    )
