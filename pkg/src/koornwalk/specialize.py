"""Parameter dictionaries and the specialization tables.

The Koornwinder family carries the five Noumi parameters (t, t0, tn, u0, un)
next to q.  Each classical subsystem of the (C_n^v, C_n) root system has its
own smaller parameter set indexed by its orbits, and the specialization
table records, row by row, the monomial values of the Noumi parameters that
collapse the Koornwinder weight function onto the subsystem's.  The table is
data here, not code: each rule is a checked map from parameter names to
coefficient-1 monomials in the target variables.

Also provided:

  * the exponent dictionary between the five orbit parameters
    q^k1..q^k5 (one per orbit O1..O5) and the Noumi parameters, through

        (q^{2k1}, q^{2k2}, q^{2k3}, q^{2k4}, q^{k5})
            = (tn un, tn/un, t0 u0, t0/u0, t),

  * Koornwinder's original four parameters (a, b, c, d) via
    (t0, tn, u0, un) = (-cd/q, -ab, -c/d, -a/b), and the re-derivation of
    his (R_BC, S_B) specialization as the (Bv, B) row of the table,

  * the driver comparing the specialized Koornwinder walk sum against the
    type B/C/D walk sums computed independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .laurent import Laurent, NotDivisible, Rat
from .ramyip import nonsymmetric_poly

__all__ = [
    "SpecRule",
    "NOUMI_RING",
    "MACDONALD_RING",
    "TABLE1",
    "TABLE2",
    "spec_rule",
    "macdonald_from_noumi",
    "noumi_from_macdonald",
    "koornwinder_to_noumi",
    "bcb_rule_from_koornwinder",
    "random_sqrt_point",
    "verify_ry_proposition",
]

NOUMI_RING = ("q", "t", "t0", "tn", "u0", "un")
MACDONALD_RING = ("q", "qk1", "qk2", "qk3", "qk4", "qk5")
NOUMI_PARAMS = ("t", "t0", "tn", "u0", "un")


@dataclass(frozen=True)
class SpecRule:
    """A named substitution sending each Noumi parameter to a monomial."""

    name: str
    target_ring: tuple[str, ...]
    images: dict  # parameter name -> coefficient-1 Laurent monomial over target_ring

    def apply(self, f: Laurent) -> Laurent:
        return f.substitute(self.target_ring, self.images)

    def image_tuple(self) -> tuple[Laurent, ...]:
        """(t, t0, tn, u0, un) images, in that order."""
        return tuple(self.images[v] for v in NOUMI_PARAMS)


def _mono(ring: tuple[str, ...], **exps2) -> Laurent:
    e = [0] * len(ring)
    for name, d in exps2.items():
        e[ring.index(name)] = d
    return Laurent.monomial(ring, e)


def _rule(name: str, ring: tuple[str, ...], t, t0, tn, u0, un) -> SpecRule:
    images = {"t": t, "t0": t0, "tn": tn, "u0": u0, "un": un}
    return SpecRule(name, ring, images)


def _table1() -> dict[str, SpecRule]:
    r2 = ("q", "ts", "tl")
    r3 = ("q", "ts", "tm", "tl")
    rd = ("q", "t")
    one2, one3, oned = Laurent.one(r2), Laurent.one(r3), Laurent.one(rd)
    ts2, tl2 = _mono(r2, ts=2), _mono(r2, tl=2)
    tl2sq = _mono(r2, tl=4)
    ts3, tm3, tl3 = _mono(r3, ts=2), _mono(r3, tm=2), _mono(r3, tl=2)
    tl3sq = _mono(r3, tl=4)
    tstl = _mono(r3, ts=2, tl=2)
    ts_over_tl = _mono(r3, ts=2, tl=-2)
    td = _mono(rd, t=2)
    return {
        "B": _rule("B", r2, tl2, one2, ts2, one2, ts2),
        "Bv": _rule("Bv", r2, ts2, one2, tl2sq, one2, one2),
        "C": _rule("C", r2, ts2, tl2sq, tl2sq, one2, one2),
        "Cv": _rule("Cv", r2, tl2, ts2, ts2, ts2, ts2),
        "BC": _rule("BC", r3, tm3, tl3sq, ts3, one3, ts3),
        "D": _rule("D", rd, td, oned, oned, oned, oned),
        "BC_C": _rule("BC_C", r3, tm3, tl3sq, tstl, one3, ts_over_tl),
        "Cv_BC": _rule("Cv_BC", r3, tm3, ts3, tstl, ts3, ts_over_tl),
        "Bv_B": _rule("Bv_B", r3, tm3, one3, tstl, one3, ts_over_tl),
    }


def _table2() -> dict[str, SpecRule]:
    rb = ("q", "tm", "tl")
    rc = ("q", "ts", "tm")
    rd = ("q", "t")
    oneb, onec, oned = Laurent.one(rb), Laurent.one(rc), Laurent.one(rd)
    return {
        "b": _rule("b", rb, _mono(rb, tm=2), oneb, _mono(rb, tl=2), oneb, _mono(rb, tl=2)),
        "c": _rule("c", rc, _mono(rc, tm=2), onec, _mono(rc, ts=2), onec, onec),
        "d": _rule("d", rd, _mono(rd, t=2), oned, oned, oned, oned),
    }


TABLE1 = _table1()
TABLE2 = _table2()


def spec_rule(name: str) -> SpecRule:
    """Look up a rule from either table; table-2 names are lowercase."""
    if name in TABLE1:
        return TABLE1[name]
    if name in TABLE2:
        return TABLE2[name]
    raise KeyError(f"unknown specialization rule {name!r}")


# -- orbit parameters <-> Noumi parameters ------------------------------

_ORBIT_IMAGES = {
    "qk1": {"tn": 1, "un": 1},
    "qk2": {"tn": 1, "un": -1},
    "qk3": {"t0": 1, "u0": 1},
    "qk4": {"t0": 1, "u0": -1},
    "qk5": {"t": 2},
}


def noumi_from_macdonald(f: Laurent) -> Laurent:
    """Exponent-linear change of basis q^k_i -> Noumi monomials."""
    if f.vars != MACDONALD_RING:
        raise ValueError("expected a value over the orbit-parameter ring")
    images = {
        name: _mono(NOUMI_RING, **exps) for name, exps in _ORBIT_IMAGES.items()
    }
    return f.substitute(NOUMI_RING, images)


def macdonald_from_noumi(f: Laurent) -> Laurent:
    """Inverse change of basis; always lands in half-integer exponents."""
    if f.vars != NOUMI_RING:
        raise ValueError("expected a value over the Noumi ring")
    iq = NOUMI_RING.index("q")
    out = {}
    for e, c in f.terms.items():
        a_t = e[NOUMI_RING.index("t")]
        a_t0 = e[NOUMI_RING.index("t0")]
        a_tn = e[NOUMI_RING.index("tn")]
        a_u0 = e[NOUMI_RING.index("u0")]
        a_un = e[NOUMI_RING.index("un")]
        key = (e[iq], a_tn + a_un, a_tn - a_un, a_t0 + a_u0, a_t0 - a_u0, a_t)
        out[key] = out.get(key, Fraction(0)) + c
    return Laurent(MACDONALD_RING, out)


# -- Koornwinder's (a, b, c, d) parameters ------------------------------

KOORNWINDER_RING = ("q", "a", "b", "c", "d")


def koornwinder_to_noumi() -> dict:
    """(t0, tn, u0, un) = (-cd/q, -ab, -c/d, -a/b) as formal expressions."""
    r = KOORNWINDER_RING
    return {
        "t0": _mono(r, c=2, d=2, q=-2).scale(-1),
        "tn": _mono(r, a=2, b=2).scale(-1),
        "u0": _mono(r, c=2, d=-2).scale(-1),
        "un": _mono(r, a=2, b=-2).scale(-1),
    }


def bcb_rule_from_koornwinder() -> SpecRule:
    """Koornwinder's (R_BC, S_B) specialization, rewritten in Noumi form.

    The rewritten rule reads (t, t0, tn, u0, un) -> (tB, 1, aB bB, 1, aB);
    under tB = tm, aB = ts/tl, bB = tl^2 it is exactly the (Bv, B) table
    row, which the test suite checks.
    """
    r3 = ("q", "ts", "tm", "tl")
    one = Laurent.one(r3)
    t_b = _mono(r3, tm=2)
    a_b = _mono(r3, ts=2, tl=-2)
    ab_bb = _mono(r3, ts=2, tl=2)  # aB * bB = (ts/tl) * tl^2
    return _rule("BCB_from_abcd", r3, t_b, one, ab_bb, one, a_b)


# -- identity testing at random points -----------------------------------

def random_sqrt_point(ring: tuple[str, ...], seed: int) -> dict:
    """A seeded point assigning each variable an exact square in (0, 10^4].

    Values are squares of fractions with numerator and denominator at most
    100, so every half-integer power evaluates exactly.
    """
    rng = random.Random(seed)
    point = {}
    for v in ring:
        while True:
            a = rng.randint(2, 100)
            b = rng.randint(1, 100)
            if a != b:
                break
        point[v] = Fraction(a, b) ** 2
    return point


def verify_ry_proposition(
    which: str,
    n: int,
    mu: tuple[int, ...],
    mode: str = "exact",
    points: int = 3,
    seed: int = 0,
    budget: int = 20,
) -> dict:
    """Compare the specialized Koornwinder walk sum with the type-X walk sum.

    which is one of "b", "c", "d".  Both sides are computed independently
    (different groups, words, folding data) and compared exactly, or at
    seeded random parameter points in eval mode.
    """
    if which not in TABLE2:
        raise ValueError(f"no walk-sum proposition for {which!r}")
    rule = TABLE2[which]
    report = {
        "type": which,
        "n": n,
        "mu": list(mu),
        "mode": mode,
    }
    try:
        lhs = nonsymmetric_poly("cc", n, mu, rule=rule, budget=budget)
        rhs = nonsymmetric_poly(which, n, mu, budget=budget)
    except Exception as exc:  # propagate as a structured failure
        report["status"] = "error"
        report["diff"] = [f"{type(exc).__name__}: {exc}"]
        return report
    if mode == "exact":
        if lhs.poly == rhs.poly:
            report["status"] = "ok"
        else:
            report["status"] = "fail"
            report["diff"] = _poly_diff(lhs.poly, rhs.poly)
    elif mode == "eval":
        bad = []
        for k in range(points):
            point = random_sqrt_point(rule.target_ring, seed + k)
            try:
                le = lhs.poly.evaluate_params(point)
                re_ = rhs.poly.evaluate_params(point)
            except NotDivisible as exc:
                bad.append(f"point {k}: {exc}")
                continue
            if le != re_:
                bad.append(f"point {k}: values differ")
        report["status"] = "ok" if not bad else "fail"
        if bad:
            report["diff"] = bad
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report


def _poly_diff(a, b) -> list:
    keys = sorted(set(a.terms) | set(b.terms))
    out = []
    for e in keys:
        if a.coeff(e) != b.coeff(e):
            out.append({"x_exp2": list(e)})
    return out
