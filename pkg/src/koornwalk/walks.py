"""Alcove walks: enumeration, step classes, and the roots attached to a word.

A walk of type (auto, i_1..i_r) starting at z is the alcove sequence

    p_k = z * auto * s_{i_1}^{b_1} ... s_{i_k}^{b_k} A,   b in {0,1}^r,

where bit 1 crosses the k-th wall and bit 0 folds back on it.  The wall of
step k carries the root gamma_k = v_{k-1}(a_{i_k}) with v_{k-1} the partial
product; the four step classes are read off the sign of its finite part:

    crossing (b_k = 1):  negative crossing if the finite part is positive,
                         positive crossing otherwise
    folding  (b_k = 0):  positive folding if the finite part is positive,
                         negative folding otherwise

For a reduced word the roots beta_k = s_{i_r} ... s_{i_{k+1}}(a_{i_k}) are
pairwise distinct and positive; they drive the folding weights of the walk
sums.  (Reading the innermost letter as i_r instead of i_k would make every
beta_k a conjugate of the single last letter and break distinctness; the
i_k reading is asserted by the test suite.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import AffineRoot, is_positive
from .weyl import Affine, Presentation

__all__ = [
    "Walk",
    "enumerate_walks",
    "walk_partials",
    "classify_step",
    "beta_roots",
    "endpoint",
    "format_walk",
]

POSITIVE_CROSSING = "positive_crossing"
NEGATIVE_CROSSING = "negative_crossing"
POSITIVE_FOLDING = "positive_folding"
NEGATIVE_FOLDING = "negative_folding"


@dataclass(frozen=True)
class Walk:
    auto: str
    word: tuple[int, ...]
    bits: tuple[int, ...]
    start: Affine

    def __post_init__(self):
        if len(self.word) != len(self.bits):
            raise ValueError("bit vector length must match the word length")

    @property
    def steps(self) -> int:
        return len(self.word)


def enumerate_walks(pres: Presentation, auto: str, word, start: Affine | None = None):
    """All 2^r walks of the given type, bits running as a big-endian counter."""
    word = tuple(word)
    if start is None:
        start = pres.identity()
    r = len(word)
    for m in range(1 << r):
        bits = tuple((m >> (r - 1 - k)) & 1 for k in range(r))
        yield Walk(auto, word, bits, start)


def walk_partials(pres: Presentation, walk: Walk) -> list[Affine]:
    """The elements v_0 .. v_r giving the alcoves of the walk."""
    v = walk.start * pres.auto(walk.auto)
    out = [v]
    for i, b in zip(walk.word, walk.bits):
        if b:
            v = v * pres.gens[i]
        out.append(v)
    return out


def step_root(pres: Presentation, partials: list[Affine], word, k: int) -> AffineRoot:
    """gamma_k, the root of the wall met at step k (1-based)."""
    return partials[k - 1].act_root(pres.simple[word[k - 1]])


def classify_step(pres: Presentation, walk: Walk, k: int) -> str:
    """Class of the k-th step (1-based), per the sign conventions above."""
    partials = walk_partials(pres, walk)
    gamma = step_root(pres, partials, walk.word, k)
    finite_pos = gamma.finite_positive()
    if walk.bits[k - 1]:
        return NEGATIVE_CROSSING if finite_pos else POSITIVE_CROSSING
    return POSITIVE_FOLDING if finite_pos else NEGATIVE_FOLDING


def beta_roots(pres: Presentation, word) -> list[AffineRoot]:
    """beta_k = s_{i_r} ... s_{i_{k+1}}(a_{i_k}) for k = 1..r, in O(r) products."""
    word = tuple(word)
    out: list[AffineRoot] = []
    v = pres.identity()
    for i in reversed(word):
        out.append(v.act_root(pres.simple[i]))
        v = v * pres.gens[i]
    out.reverse()
    return out


def endpoint(pres: Presentation, walk: Walk) -> Affine:
    """e(p) = start * auto * s_{i_1}^{b_1} ... s_{i_r}^{b_r}."""
    v = walk.start * pres.auto(walk.auto)
    for i, b in zip(walk.word, walk.bits):
        if b:
            v = v * pres.gens[i]
    return v


def endpoint_decompose(pres: Presentation, walk: Walk) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(doubled weight, direction) of the endpoint."""
    e = endpoint(pres, walk)
    return e.weight2(), e.direction()


def format_walk(walk: Walk) -> str:
    word = "[" + ",".join(map(str, walk.word)) + "]"
    bits = "".join(map(str, walk.bits))
    core = f"{word}/{bits}" if walk.bits else f"{word}/"
    return core if walk.auto == "e" else f"{walk.auto}.{core}"


def assert_reduced_betas(pres: Presentation, word) -> list[AffineRoot]:
    """Betas of a reduced word must be pairwise distinct positive roots."""
    betas = beta_roots(pres, word)
    seen = set()
    for b in betas:
        if not is_positive(b):
            raise ValueError(f"beta root {b.text()} of a reduced word is negative")
        if b in seen:
            raise ValueError(f"beta root {b.text()} repeats; word is not reduced")
        seen.add(b)
    return betas
