"""The basic representation: Demazure-Lusztig operators and Cherednik operators.

The affine Hecke algebra of the (C_n^v, C_n) group acts faithfully on
Laurent polynomials in x_1..x_n through

    T_i f = tau_i s_i(f) + b_i (f - s_i(f)),

    b_i = (tau_i - tau_i^{-1} + (tau_i' - tau_i'^{-1}) m_i^{1/2}) / (1 - m_i),

with Hecke parameters (tau_0, tau_n, tau_0', tau_n', tau_j = middle)
= (t0^(1/2), tn^(1/2), u0^(1/2), un^(1/2), t^(1/2)), where the middle
letters carry no primed contribution (their u-parameter is 1), and

    m_0 = q x_1^{-2},   m_j = x_j / x_{j+1},   m_n = x_n^2.

b_i (f - s_i f) is always a Laurent polynomial; the division by 1 - m_i is
performed exactly and a nonzero remainder is a fatal bug signal.  Each T_i
satisfies (T_i - tau_i)(T_i + tau_i^{-1}) = 0, so T_i^{-1} = T_i - tau_i +
tau_i^{-1}; both the quadratic and the braid relations are verified
symbolically by the test suite rather than assumed.

The commuting Cherednik operators attached to the translations t(e_j) are

    Y_j = T_{j-1}^{-1} ... T_1^{-1} T_0 T_1 ... T_{n-1} T_n T_{n-1} ... T_j

(rightmost factor acts first).  Non-symmetric Koornwinder polynomials are
their simultaneous eigenvectors, which gives an independent check of every
walk-sum output: eigencheck measures the eigenvalue from one matched
coefficient and verifies proportionality on all the others.  Using the
reversed operator word breaks the eigenvector property; a negative-control
test pins the ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import BadPoint, Laurent, Rat, XPoly

__all__ = ["BasicRep", "eigencheck"]

NOUMI_RING = ("q", "t", "t0", "tn", "u0", "un")


def _xvars(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class _Letter:
    tau: Rat            # scalar multiplying s_i
    tau_inv: Rat
    a_num: Laurent      # tau_i - tau_i^{-1}
    b_num: Laurent      # tau_i' - tau_i'^{-1} (zero for middle letters)
    m_x2: tuple[int, ...]   # x-part of m_i, doubled
    m_p: Laurent            # parameter part of m_i (q for letter 0)
    half_x2: tuple[int, ...]
    half_p: Laurent


class BasicRep:
    """Demazure-Lusztig action on XPoly values over a parameter ring.

    With ``point`` given, all parameter atoms are evaluated there (values
    are variable values; they must admit exact square roots) and the
    operators act on XPoly values with plain rational coefficients, which
    is the fast mode used for sweeps.
    """

    def __init__(self, n: int, point: dict | None = None):
        self.n = n
        self.xvars = _xvars(n)
        self.ring: tuple[str, ...] = () if point is not None else NOUMI_RING
        self._point = point

        def atom(f: Laurent) -> Laurent:
            if point is None:
                return f
            return Laurent.const((), f.evaluate(point))

        letters = []
        for i in range(n + 1):
            if i == 0:
                tau_v, taup_v = "t0", "u0"
            elif i == n:
                tau_v, taup_v = "tn", "un"
            else:
                tau_v, taup_v = "t", None
            tau = atom(Laurent.gen(NOUMI_RING, tau_v, 1))
            tau_inv = atom(Laurent.gen(NOUMI_RING, tau_v, -1))
            a_num = tau - tau_inv
            if taup_v is None:
                b_num = Laurent.zero(self.ring)
            else:
                b_num = atom(
                    Laurent.gen(NOUMI_RING, taup_v, 1) - Laurent.gen(NOUMI_RING, taup_v, -1)
                )
            ex = [0] * n
            if i == 0:
                ex[0] = -4
                m_p = atom(Laurent.gen(NOUMI_RING, "q", 2))
                half_p = atom(Laurent.gen(NOUMI_RING, "q", 1))
            elif i == n:
                ex[n - 1] = 4
                m_p = atom(Laurent.one(NOUMI_RING))
                half_p = m_p
            else:
                ex[i - 1], ex[i] = 2, -2
                m_p = atom(Laurent.one(NOUMI_RING))
                half_p = m_p
            letters.append(
                _Letter(
                    tau=Rat(tau),
                    tau_inv=Rat(tau_inv),
                    a_num=a_num,
                    b_num=b_num,
                    m_x2=tuple(ex),
                    m_p=m_p,
                    half_x2=tuple(x // 2 for x in ex),
                    half_p=half_p,
                )
            )
        self.letters = letters

    # -- reflections on x-monomials ------------------------------------

    def apply_s(self, f: XPoly, i: int) -> XPoly:
        """The reflection s_i acting on Laurent polynomials in x."""
        n = self.n
        terms = {}
        if 1 <= i <= n - 1:
            for e, c in f.terms.items():
                e2 = list(e)
                e2[i - 1], e2[i] = e2[i], e2[i - 1]
                terms[tuple(e2)] = c
        elif i == n:
            for e, c in f.terms.items():
                e2 = list(e)
                e2[n - 1] = -e2[n - 1]
                terms[tuple(e2)] = c
        elif i == 0:
            # x_1^m -> q^m x_1^{-m}
            qpow: dict[int, Rat] = {}
            for e, c in f.terms.items():
                e2 = list(e)
                d = e2[0]
                e2[0] = -d
                if d:
                    q = qpow.get(d)
                    if q is None:
                        base = Laurent.gen(NOUMI_RING, "q", d)
                        if self._point is not None:
                            base = Laurent.const((), base.evaluate(self._point))
                        q = Rat(base)
                        qpow[d] = q
                    c = c * q
                terms[tuple(e2)] = c
        else:
            raise ValueError(f"no letter {i}")
        return XPoly(f.xvars, f.pvars, terms)

    def apply_T(self, f: XPoly, i: int, power: int = 1) -> XPoly:
        """T_i f, or T_i^{-1} f via T_i^{-1} = T_i - tau_i + tau_i^{-1}."""
        if power not in (1, -1):
            raise ValueError("power must be +-1")
        L = self.letters[i]
        sf = self.apply_s(f, i)
        g = f - sf
        h = g.exact_div_one_minus(L.m_x2, L.m_p)
        out = sf.scale(L.tau) + h.scale(Rat(L.a_num))
        if L.b_num:
            out = out + h.mul_term(L.half_x2, Rat(L.half_p * L.b_num))
        if power == -1:
            out = out + f.scale(L.tau_inv - L.tau)
        return out

    def apply_Y(self, f: XPoly, j: int) -> XPoly:
        """The Cherednik operator attached to the translation by e_j."""
        n = self.n
        if not 1 <= j <= n:
            raise ValueError("j out of range")
        ops: list[tuple[int, int]] = []
        for i in range(j - 1, 0, -1):
            ops.append((i, -1))
        ops.append((0, 1))
        for i in range(1, n):
            ops.append((i, 1))
        ops.append((n, 1))
        for i in range(n - 1, j - 1, -1):
            ops.append((i, 1))
        for i, power in reversed(ops):
            f = self.apply_T(f, i, power)
        return f


def eigencheck(rep: BasicRep, poly: XPoly) -> dict:
    """Verify that poly is a simultaneous eigenvector of all Y_j.

    The eigenvalue is the cross-ratio at one matched nonzero coefficient;
    the verdict is the full comparison Y_j(poly) == eigenvalue * poly.
    """
    if poly.is_zero():
        raise ValueError("eigencheck of the zero polynomial")
    report = {"ok": True, "eigenvalues": [], "failures": []}
    ref = min(poly.terms)
    for j in range(1, rep.n + 1):
        image = rep.apply_Y(poly, j)
        cand = image.coeff(ref)
        lam = (cand / poly.terms[ref]).trimmed()
        if image == poly.scale(lam):
            report["eigenvalues"].append(lam)
        else:
            report["ok"] = False
            report["eigenvalues"].append(None)
            bad = sorted(
                e for e in set(poly.terms) | set(image.terms)
                if image.coeff(e) != poly.coeff(e) * lam
            )
            report["failures"].append({"j": j, "x_exp2": list(bad[0]) if bad else None})
    return report
