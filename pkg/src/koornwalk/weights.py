"""Orthogonality weight functions as finite factor lists, and the
factor-level verification of the specialization table.

The weight function of a (sub)system S0 with orbit parameters k is the
product over positive roots a of

    (1 - q^{k(2a)} e^a) / (1 - q^{k(a)} e^a),        e^{alpha + r c} = x^alpha q^r,

with k(2a) = 0 when 2a is not a root.  For the full (C_n^v, C_n) system the
orbit parameters are carried as Noumi monomials through

    q^{k(O1)} = (tn un)^(1/2),  q^{k(O2)} = (tn/un)^(1/2),
    q^{k(O3)} = (t0 u0)^(1/2),  q^{k(O4)} = (t0/u0)^(1/2),  q^{k(O5)} = t;

a subsystem uses its own variables through its s/m/l orbit labels.  The
specialization identity behind the table holds factor by factor: under a
table row, the factor of a root outside the subsystem collapses to 1 and
the factor of a member root becomes the corresponding subsystem factor.
The check below verifies exactly that on all factors up to a cutoff on the
constant part, so no power-series truncation is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import Laurent
from .roots import AffineRoot, enumerate_positive, orbit_of, subsystem_contains, subsystem_orbit
from .specialize import TABLE1, SpecRule

__all__ = ["DeltaFactor", "delta_factors", "check_delta_specialization", "DELTA_AMBIENT_RING"]

_NOUMI_OF_ORBIT = {
    "O1": {"tn": 1, "un": 1},
    "O2": {"tn": 1, "un": -1},
    "O3": {"t0": 1, "u0": 1},
    "O4": {"t0": 1, "u0": -1},
    "O5": {"t": 2},
}

_LABEL_VAR = {"s": "ts", "m": "tm", "l": "tl", "t": "t"}


def _xring(n: int, params: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n)) + ("q",) + params


def DELTA_AMBIENT_RING(n: int) -> tuple[str, ...]:
    return _xring(n, ("t", "t0", "tn", "u0", "un"))


@dataclass(frozen=True)
class DeltaFactor:
    root: AffineRoot
    num: Laurent
    den: Laurent


def _e_root(ring: tuple[str, ...], n: int, a: AffineRoot) -> Laurent:
    exps = [0] * len(ring)
    for i, al in enumerate(a.alpha):
        exps[i] = 2 * al
    exps[n] = a.r2  # the q slot sits right after the x block
    return Laurent.monomial(ring, exps)


def _param_mono(ring: tuple[str, ...], exps2: dict) -> Laurent:
    e = [0] * len(ring)
    for name, d in exps2.items():
        e[ring.index(name)] = d
    return Laurent.monomial(ring, e)


def delta_factors(n: int, cutoff, tag: str | None = None) -> list[DeltaFactor]:
    """Factors of the weight function up to the constant-part cutoff.

    ``tag=None`` gives the full system over the Noumi parameters; a
    subsystem tag gives its factors over (q, ts, tm, tl) or (q, t).
    """
    cutoff = Fraction(cutoff)
    if tag is None:
        ring = _xring(n, ("t", "t0", "tn", "u0", "un"))
        roots = enumerate_positive(n, cutoff)
        k_of = lambda a: _param_mono(ring, _NOUMI_OF_ORBIT[orbit_of(a)])
        member = lambda a: True
    else:
        params = TABLE1[tag].target_ring[1:]  # drop the leading q
        ring = _xring(n, params)
        roots = enumerate_positive(n, cutoff, tag)
        k_of = lambda a: _param_mono(ring, {_LABEL_VAR[subsystem_orbit(tag, a)]: 2})
        member = lambda a: subsystem_contains(tag, a)
    one = Laurent.one(ring)
    out = []
    for a in roots:
        e_a = _e_root(ring, n, a)
        den = one - k_of(a) * e_a
        dbl = a.try_double()
        if dbl is not None and member(dbl):
            num = one - k_of(dbl) * e_a
        else:
            num = one - e_a
        out.append(DeltaFactor(a, num, den))
    return out


def _extend_rule_to_x(rule: SpecRule, n: int) -> SpecRule:
    """The table rule acting on the x-extended ambient ring."""
    dst_x = _xring(n, rule.target_ring[1:])
    images = {}
    for name, img in rule.images.items():
        ((e, _),) = img.terms.items()
        exps = [0] * len(dst_x)
        for j, d in enumerate(e):
            if d:
                exps[dst_x.index(img.vars[j])] = d
        images[name] = Laurent.monomial(dst_x, exps)
    return SpecRule(rule.name, dst_x, images)


def check_delta_specialization(tag: str, n: int, cutoff) -> dict:
    """Factor-by-factor verification of one specialization-table row.

    Every ambient factor with a root outside the subsystem must specialize
    to 1; every member-root factor must land exactly on the subsystem
    factor of the same root.
    """
    rule = _extend_rule_to_x(TABLE1[tag], n)
    ambient = delta_factors(n, cutoff)
    sub = {f.root: f for f in delta_factors(n, cutoff, tag)}
    failures = []
    for f in ambient:
        num = rule.apply(f.num)
        den = rule.apply(f.den)
        if subsystem_contains(tag, f.root):
            g = sub.pop(f.root)
            ok = num * g.den == g.num * den
        else:
            ok = num == den
        if not ok:
            failures.append(f.root.text())
    for leftover in sub:
        failures.append(f"unmatched subsystem root {leftover.text()}")
    return {
        "subsystem": tag,
        "n": n,
        "cutoff": str(Fraction(cutoff)),
        "checked": len(ambient),
        "status": "ok" if not failures else "fail",
        "failures": failures,
    }
