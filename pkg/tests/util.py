"""Shared helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from koornwalk.laurent import Laurent


def random_laurent(rng: random.Random, vars, terms=3, spread=2, half=True) -> Laurent:
    """A small random Laurent polynomial with half-integer exponents."""
    data = {}
    step = 1 if half else 2
    for _ in range(terms):
        exp = tuple(rng.randrange(-spread * 2, spread * 2 + 1, step) for _ in vars)
        data[exp] = data.get(exp, 0) + Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return Laurent(vars, data)


def random_monomial(rng: random.Random, vars, spread=2) -> tuple:
    exp = [0] * len(vars)
    exp[rng.randrange(len(vars))] = rng.choice([-2, -1, 1, 2])
    for i in range(len(vars)):
        if rng.random() < 0.3:
            exp[i] += rng.randrange(-spread, spread + 1)
    if not any(exp):
        exp[0] = 2
    return tuple(exp)


def span_coefficients(alpha, r2):
    """Solve alpha + (r2/2) c = sum c_i a_i over the simple roots, exactly.

    Returns the coefficient list when a nonnegative-integer solution exists,
    else None.  Only a_0 carries a constant part, so c_0 is forced and the
    finite part reduces to a triangular system.
    """
    n = len(alpha)
    if r2 % 2 or r2 < 0:
        return None
    c0 = r2 // 2
    # remaining finite part must match sum_{j<n} c_j (e_j - e_{j+1}) + c_n 2e_n
    target = list(alpha)
    target[0] += 2 * c0
    coeffs = [c0]
    run = 0
    for k in range(n - 1):
        run += target[k]
        if run < 0:
            return None
        coeffs.append(run)
    run += target[n - 1]
    if run < 0 or run % 2:
        return None
    coeffs.append(run // 2)
    return coeffs
