"""Exact Laurent-polynomial and rational-function arithmetic over Q.

Everything downstream (walk sums, Hecke operators, weight functions) reduces
to arithmetic in rings of the shape

    Q[v1^(1/2), v1^(-1/2), ..., vk^(1/2), vk^(-1/2)]

for a fixed tuple of variable names.  Exponents live in (1/2)Z and are stored
*doubled* as plain ints, so a term is

    exps: tuple[int, ...]   (entry i = twice the exponent of vars[i])
    coeff: Fraction         (nonzero)

and the zero polynomial has an empty term dict.  Any operation that would
force a quarter-integer exponent (an odd doubled exponent that must be
halved) raises, which catches convention bugs early instead of silently
producing garbage.

Rational functions are kept as num/den pairs and compared by
cross-multiplication; there is no multivariate gcd anywhere, only trimming
by monomial and rational content.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "Laurent",
    "Rat",
    "XPoly",
    "RingError",
    "NotDivisible",
    "BadPoint",
    "exact_sqrt",
    "half_str",
]


class RingError(ValueError):
    """Mixing values from different variable contexts."""


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


class BadPoint(ValueError):
    """Evaluation point hits a pole or needs an inexact square root."""


def exact_sqrt(value: Fraction) -> Fraction:
    """Square root of a rational, or raise BadPoint if it is not rational."""
    if value < 0:
        raise BadPoint(f"negative value {value} has no rational square root")
    p, q = value.numerator, value.denominator
    rp, rq = _isqrt(p), _isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise BadPoint(f"{value} is not an exact square")
    return Fraction(rp, rq)


def _isqrt(m: int) -> int:
    return int(m**0.5 + 0.5) if m < 1 << 52 else _isqrt_big(m)


def _isqrt_big(m: int) -> int:
    x = 1 << ((m.bit_length() + 1) // 2)
    while True:
        y = (x + m // x) // 2
        if y >= x:
            return x
        x = y


def half_str(exp2: int) -> str:
    """Render a doubled exponent: 4 -> '2', 3 -> '3/2'."""
    return str(exp2 // 2) if exp2 % 2 == 0 else f"{exp2}/2"


def _tadd(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _tsub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


class Laurent:
    """A Laurent polynomial with half-integer exponents over Q.

    Immutable by convention: no method mutates ``terms`` after construction,
    so values can be shared freely (including across worker processes).
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict | None = None):
        self.vars = vars
        clean: dict[tuple, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple[str, ...]) -> "Laurent":
        return cls(vars)

    @classmethod
    def const(cls, vars: tuple[str, ...], c) -> "Laurent":
        c = Fraction(c)
        return cls(vars, {(0,) * len(vars): c} if c else None)

    @classmethod
    def one(cls, vars: tuple[str, ...]) -> "Laurent":
        return cls.const(vars, 1)

    @classmethod
    def monomial(cls, vars: tuple[str, ...], exps2, coeff=1) -> "Laurent":
        return cls(vars, {tuple(exps2): Fraction(coeff)})

    @classmethod
    def gen(cls, vars: tuple[str, ...], name: str, exp2: int = 2) -> "Laurent":
        """The monomial name^(exp2/2)."""
        e = [0] * len(vars)
        e[vars.index(name)] = exp2
        return cls.monomial(vars, e)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.vars): Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Laurent)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _check(self, other: "Laurent"):
        if self.vars != other.vars:
            raise RingError(f"variable mismatch: {self.vars} vs {other.vars}")

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        out = Laurent.__new__(Laurent)
        out.vars = self.vars
        out.terms = terms
        return out

    def __neg__(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out.vars = self.vars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = _tadd(e1, e2)
                s = terms.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        out = Laurent.__new__(Laurent)
        out.vars = self.vars
        out.terms = terms
        return out

    def scale(self, c) -> "Laurent":
        c = Fraction(c)
        out = Laurent.__new__(Laurent)
        out.vars = self.vars
        out.terms = {e: c * v for e, v in self.terms.items()} if c else {}
        return out

    def shift(self, exps2) -> "Laurent":
        """Multiply by the coefficient-1 monomial with the given doubled exponents."""
        m = tuple(exps2)
        out = Laurent.__new__(Laurent)
        out.vars = self.vars
        out.terms = {_tadd(e, m): c for e, c in self.terms.items()}
        return out

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            ((e, c),) = self.terms.items()
            return Laurent.monomial(self.vars, tuple(x * k for x in e), Fraction(c) ** k)
        out = Laurent.one(self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def sqrt_monomial(self) -> "Laurent":
        """Square root of a single monomial; doubled exponents must be even."""
        if not self.is_monomial():
            raise NotDivisible("sqrt of a non-monomial")
        ((e, c),) = self.terms.items()
        if any(x % 2 for x in e):
            raise NotDivisible(f"sqrt would need quarter-integer exponents: {e}")
        return Laurent.monomial(self.vars, tuple(x // 2 for x in e), exact_sqrt(c))

    # -- exact division -----------------------------------------------

    def exact_div_one_minus(self, mono2) -> "Laurent":
        """Exact quotient self / (1 - m), m the coefficient-1 monomial mono2.

        Long division along the m-grading.  Raises NotDivisible when a
        remainder survives, the signal of a broken operator application.
        """
        m = tuple(mono2)
        if not any(m):
            raise NotDivisible("division by 1 - 1 = 0")
        if not self.terms:
            return Laurent.zero(self.vars)
        grade = lambda e: sum(x * y for x, y in zip(e, m))
        maxg = max(grade(e) for e in self.terms)
        rem = dict(self.terms)
        quot: dict[tuple, Fraction] = {}
        while rem:
            e = min(rem, key=lambda t: (grade(t), t))
            if grade(e) > maxg:
                raise NotDivisible("nonzero remainder in division by 1 - monomial")
            c = rem.pop(e)
            quot[e] = quot.get(e, Fraction(0)) + c
            e2 = _tadd(e, m)
            s = rem.get(e2, Fraction(0)) + c
            if s:
                rem[e2] = s
            elif e2 in rem:
                del rem[e2]
        return Laurent(self.vars, quot)

    # -- substitution and evaluation ------------------------------------

    def substitute(self, target_vars: tuple[str, ...], images: dict) -> "Laurent":
        """Exponent-linear substitution var -> monomial in a target ring.

        ``images`` maps source variable names to single-term coefficient-1
        Laurent values over ``target_vars`` (the constant 1 being the empty
        image).  Unmapped variables must exist in the target ring.  Raises on
        quarter-integer exponents in the result.
        """
        k = len(target_vars)
        img2 = []
        for i, v in enumerate(self.vars):
            if v in images:
                g = images[v]
                if not isinstance(g, Laurent) or g.vars != target_vars:
                    raise RingError(f"image of {v} not in target ring")
                if not g.is_monomial():
                    raise RingError(f"image of {v} must be a monomial")
                ((e, c),) = g.terms.items()
                if c != 1:
                    raise RingError(f"image of {v} must have coefficient 1")
                img2.append(e)
            else:
                e = [0] * k
                e[target_vars.index(v)] = 2
                img2.append(tuple(e))
        terms: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            acc4 = [0] * k
            for i, d in enumerate(e):
                if d == 0:
                    continue
                for j, w in enumerate(img2[i]):
                    acc4[j] += d * w
            if any(x % 2 for x in acc4):
                raise NotDivisible("substitution produced a quarter-integer exponent")
            key = tuple(x // 2 for x in acc4)
            s = terms.get(key, Fraction(0)) + c
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
        return Laurent(target_vars, terms)

    def rename(self, target_vars: tuple[str, ...]) -> "Laurent":
        """Reinterpret over a ring with the same variables in a new order/superset."""
        pos = [target_vars.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            acc = [0] * len(target_vars)
            for i, d in enumerate(e):
                acc[pos[i]] = d
            terms[tuple(acc)] = c
        return Laurent(target_vars, terms)

    def evaluate(self, point: dict, sqrt_point: bool = False) -> Fraction:
        """Evaluate at rational values for every variable.

        ``point`` maps each variable name to a nonzero rational.  With
        ``sqrt_point=True`` the given value is the value of var^(1/2);
        otherwise it is the value of the variable itself and odd doubled
        exponents demand an exact rational square root.
        """
        sq: list[Fraction] = []
        for v in self.vars:
            if v not in point:
                raise BadPoint(f"no value for {v}")
            val = Fraction(point[v])
            if val == 0:
                raise BadPoint(f"zero value for {v}")
            sq.append(val if sqrt_point else None)
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, d in enumerate(e):
                if d == 0:
                    continue
                if sqrt_point:
                    term *= sq[i] ** d
                else:
                    val = Fraction(point[self.vars[i]])
                    if d % 2 == 0:
                        term *= val ** (d // 2)
                    else:
                        term *= exact_sqrt(val) ** d
            total += term
        return total

    # -- content trimming ----------------------------------------------

    def monomial_content2(self) -> tuple:
        """Componentwise minimum of the doubled exponents (0 for the zero poly)."""
        if not self.terms:
            return (0,) * len(self.vars)
        its = iter(self.terms)
        lo = list(next(its))
        for e in its:
            for i, x in enumerate(e):
                if x < lo[i]:
                    lo[i] = x
        return tuple(lo)

    def rational_content(self) -> Fraction:
        """gcd of numerators over lcm of denominators, with the sign of the leading term."""
        if not self.terms:
            return Fraction(1)
        g, l = 0, 1
        for c in self.terms.values():
            g = gcd(g, abs(c.numerator))
            l = l * c.denominator // gcd(l, c.denominator)
        content = Fraction(g, l)
        lead = self.terms[min(self.terms)]
        return -content if lead < 0 else content

    # -- presentation ----------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def text(self) -> str:
        """Canonical plain-text form, lexicographic term order."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, d in zip(self.vars, e):
                if d == 0:
                    continue
                factors.append(name if d == 2 else f"{name}^({half_str(d)})")
            mono = " ".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c} * {mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"coeff": f"{c.numerator}/{c.denominator}", "exp": list(e)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Laurent":
        vars = tuple(data["vars"])
        terms = {tuple(t["exp"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(vars, terms)

    def __repr__(self):
        return f"Laurent({self.text()!r})"


class Rat:
    """A ratio of Laurent polynomials, compared by cross-multiplication.

    Addition keeps a common denominator when both operands already share
    one (the dominant case in walk sums), so denominators do not snowball.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent, den: Laurent | None = None):
        if den is None:
            den = Laurent.one(num.vars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.vars != den.vars:
            raise RingError("num/den variable mismatch")
        self.num = num
        self.den = den

    @classmethod
    def const(cls, vars: tuple[str, ...], c) -> "Rat":
        return cls(Laurent.const(vars, c))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rat):
            return NotImplemented
        if self.den is other.den or self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("Rat is unhashable (equality is cross-multiplicative)")

    def __add__(self, other: "Rat") -> "Rat":
        if self.den is other.den or self.den == other.den:
            return Rat(self.num + other.num, self.den)
        return Rat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Rat":
        return Rat(-self.num, self.den)

    def __sub__(self, other: "Rat") -> "Rat":
        return self + (-other)

    def __mul__(self, other: "Rat") -> "Rat":
        return Rat(self.num * other.num, self.den * other.den)

    def inverse(self) -> "Rat":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Rat(self.den, self.num)

    def __truediv__(self, other: "Rat") -> "Rat":
        return self * other.inverse()

    def scale(self, c) -> "Rat":
        return Rat(self.num.scale(c), self.den)

    def trimmed(self) -> "Rat":
        """Normalize by monomial content and by the denominator's rational content."""
        if self.num.is_zero():
            return Rat(Laurent.zero(self.vars), Laurent.one(self.vars))
        mn = self.num.monomial_content2()
        md = self.den.monomial_content2()
        shared = tuple(min(a, b) for a, b in zip(mn, md))
        unshift = tuple(-x for x in shared)
        num = self.num.shift(unshift)
        den = self.den.shift(unshift)
        cd = den.rational_content()
        return Rat(num.scale(1 / cd), den.scale(1 / cd))

    def substitute(self, target_vars: tuple[str, ...], images: dict) -> "Rat":
        num = self.num.substitute(target_vars, images)
        den = self.den.substitute(target_vars, images)
        if den.is_zero():
            raise ZeroDivisionError("substitution killed the denominator")
        return Rat(num, den)

    def evaluate(self, point: dict, sqrt_point: bool = False) -> Fraction:
        d = self.den.evaluate(point, sqrt_point)
        if d == 0:
            raise BadPoint("denominator vanishes at evaluation point")
        return self.num.evaluate(point, sqrt_point) / d

    def text(self) -> str:
        if self.den.is_one():
            return self.num.text()
        return f"({self.num.text()}) / ({self.den.text()})"

    def __repr__(self):
        return f"Rat({self.text()!r})"


class XPoly:
    """Laurent polynomial in x_1..x_n over the rational-function field in the
    parameters.

    The x-exponents (doubled, like everything else) key the term dict; each
    coefficient is a Rat over the parameter ring.  A parameter ring of ()
    makes the coefficients plain rationals, which is how evaluated
    ("fast-mode") polynomials are represented.
    """

    __slots__ = ("xvars", "pvars", "terms")

    def __init__(self, xvars: tuple[str, ...], pvars: tuple[str, ...], terms: dict | None = None):
        self.xvars = xvars
        self.pvars = pvars
        clean: dict[tuple, Rat] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, Rat):
                    c = Rat(Laurent.const(pvars, c))
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, xvars, pvars) -> "XPoly":
        return cls(xvars, pvars)

    @classmethod
    def one(cls, xvars, pvars) -> "XPoly":
        return cls(xvars, pvars, {(0,) * len(xvars): Rat.const(pvars, 1)})

    @classmethod
    def monomial(cls, xvars, pvars, exps2, coeff=None) -> "XPoly":
        if coeff is None:
            coeff = Rat.const(pvars, 1)
        return cls(xvars, pvars, {tuple(exps2): coeff})

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exps2) -> Rat:
        return self.terms.get(tuple(exps2), Rat(Laurent.zero(self.pvars)))

    def _check(self, other: "XPoly"):
        if self.xvars != other.xvars or self.pvars != other.pvars:
            raise RingError("XPoly ring mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.xvars != other.xvars or self.pvars != other.pvars:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(other.terms[e] == c for e, c in self.terms.items())

    def __hash__(self):
        raise TypeError("XPoly is unhashable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        out = XPoly.__new__(XPoly)
        out.xvars, out.pvars, out.terms = self.xvars, self.pvars, terms
        return out

    def __neg__(self) -> "XPoly":
        out = XPoly.__new__(XPoly)
        out.xvars, out.pvars = self.xvars, self.pvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __mul__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        out = XPoly.zero(self.xvars, self.pvars)
        terms: dict[tuple, Rat] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _tadd(e1, e2)
                p = c1 * c2
                s = terms.get(e)
                s = p if s is None else s + p
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        out.terms = terms
        return out

    def scale(self, c: "Rat") -> "XPoly":
        out = XPoly.__new__(XPoly)
        out.xvars, out.pvars = self.xvars, self.pvars
        out.terms = {e: v * c for e, v in self.terms.items()} if c else {}
        return out

    def mul_term(self, exps2, coeff: "Rat | None" = None) -> "XPoly":
        """Multiply by coeff * x^(exps2/2)."""
        m = tuple(exps2)
        out = XPoly.__new__(XPoly)
        out.xvars, out.pvars = self.xvars, self.pvars
        if coeff is None:
            out.terms = {_tadd(e, m): c for e, c in self.terms.items()}
        else:
            out.terms = {_tadd(e, m): c * coeff for e, c in self.terms.items()} if coeff else {}
        return out

    # -- exact division ----------------------------------------------------

    def exact_div_one_minus(self, x_mono2, p_mono: "Laurent | None" = None) -> "XPoly":
        """Exact quotient by (1 - M), M = x^(x_mono2/2) * p_mono.

        Long division along the x-grading defined by x_mono2 (which must be
        nonzero).  Raises NotDivisible on a surviving remainder.
        """
        m = tuple(x_mono2)
        if not any(m):
            raise NotDivisible("x-part of the divisor monomial is trivial")
        pfac = None
        if p_mono is not None and not p_mono.is_one():
            if not p_mono.is_monomial():
                raise NotDivisible("parameter part of the divisor must be a monomial")
            pfac = Rat(p_mono)
        grade = lambda e: sum(x * y for x, y in zip(e, m))
        if not self.terms:
            return XPoly.zero(self.xvars, self.pvars)
        maxg = max(grade(e) for e in self.terms)
        rem = dict(self.terms)
        quot: dict[tuple, Rat] = {}
        while rem:
            e = min(rem, key=lambda t: (grade(t), t))
            if grade(e) > maxg:
                raise NotDivisible("nonzero remainder in division by 1 - monomial")
            c = rem.pop(e)
            q = quot.get(e)
            q = c if q is None else q + c
            if q:
                quot[e] = q
            elif e in quot:
                del quot[e]
            e2 = _tadd(e, m)
            add = c * pfac if pfac is not None else c
            s = rem.get(e2)
            s = add if s is None else s + add
            if s:
                rem[e2] = s
            elif e2 in rem:
                del rem[e2]
        return XPoly(self.xvars, self.pvars, quot)

    # -- parameter substitution and evaluation ------------------------------

    def substitute_params(self, target_pvars: tuple[str, ...], images: dict) -> "XPoly":
        out = XPoly.zero(self.xvars, target_pvars)
        terms = {}
        for e, c in self.terms.items():
            s = c.substitute(target_pvars, images)
            if s:
                terms[e] = s
        out.terms = terms
        return out

    def evaluate_params(self, point: dict, sqrt_point: bool = False) -> "XPoly":
        """Plug rationals into every parameter; x stays symbolic."""
        out = XPoly.zero(self.xvars, ())
        terms = {}
        unit = Laurent.one(())
        for e, c in self.terms.items():
            val = c.evaluate(point, sqrt_point)
            if val:
                terms[e] = Rat(Laurent.const((), val), unit)
        out.terms = terms
        return out

    # -- presentation ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, d in zip(self.xvars, e):
                if d == 0:
                    continue
                factors.append(name if d == 2 else f"{name}^({half_str(d)})")
            mono = " ".join(factors)
            ct = c.text()
            if not mono:
                parts.append(f"({ct})" if " " in ct else ct)
            elif c.den.is_one() and c.num.is_one():
                parts.append(mono)
            else:
                parts.append(f"({ct}) * {mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "x_vars": list(self.xvars),
            "param_vars": list(self.pvars),
            "terms": [
                {"exp": list(e), "num": c.num.to_json(), "den": c.den.to_json()}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "XPoly":
        xvars = tuple(data["x_vars"])
        pvars = tuple(data["param_vars"])
        terms = {
            tuple(t["exp"]): Rat(Laurent.from_json(t["num"]), Laurent.from_json(t["den"]))
            for t in data["terms"]
        }
        return cls(xvars, pvars, terms)

    def __repr__(self):
        return f"XPoly({self.text()!r})"
