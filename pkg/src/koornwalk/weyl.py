"""Extended affine Weyl groups acting on the (C_n^v, C_n) root system.

Every group element is stored in ambient coordinates

    w = t(lambda) u,   lambda in (1/2)Z^n (doubled),  u a signed permutation,

with the group law (lambda, u)(mu, v) = (lambda + u mu, u v).  The action on
an affine root alpha + r c is u(alpha) + (r - <u(alpha), lambda>) c, which
fixes c and preserves the root system.

Four presentations of (sub)groups of this ambient group are used:

    cc   t(Z^n) x W0, Coxeter generators s_0..s_n
         (s_0 = t(e_1) s_{2e_1}; the Koornwinder walk group)
    cry  the same subgroup presented with s_0' = s_{-(e_1+e_2)+c}, s_1..s_n
         and the diagram involution pi (type C walk formula)
    bry  t(P) x W0 for P = Z^n + Z(1,...,1)/2, generators s_0..s_n and the
         diagram involution pi (type B walk formula)
    d    the group generated by s_0^D = s_{-(e_1+e_2)+c}, s_1..s_{n-1},
         s_n^D = s_{e_{n-1}+e_n} and the three diagram automorphisms
         (type D walk formula)

Words, lengths and minimal coset representatives are computed by greedy
right-descent peeling: s_i is a right descent of w exactly when w(a_i) is a
negative root.  Diagram automorphisms have length zero.  Tie-breaking always
takes the lowest letter index, which reproduces the textbook reduced words
for the translations t(e_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .roots import AffineRoot, is_positive, simple_roots

__all__ = [
    "Affine",
    "Presentation",
    "NotInGroup",
    "presentation",
    "reflection",
    "normal_form",
    "length",
    "reduced_word",
    "word_element",
    "min_coset_rep",
    "phi_c",
    "phi_d",
    "embed_b",
    "all_signed_perms",
    "length_ball",
    "sp_identity",
    "sp_mul",
    "sp_inv",
    "sp_apply",
    "sp_flip_count",
    "format_word",
]


class NotInGroup(ValueError):
    """Element does not belong to the group of the given presentation."""


# -- signed permutations ----------------------------------------------
# p[i] = +-(j+1) means u(e_{i+1}) = sign * e_j.

def sp_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def sp_apply(p: tuple[int, ...], v) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(v):
        q = p[i]
        if q > 0:
            out[q - 1] += x
        else:
            out[-q - 1] -= x
    return tuple(out)


def sp_mul(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """(u v)(x) = u(v(x))."""
    out = []
    for q in v:
        r = u[abs(q) - 1]
        out.append(r if q > 0 else -r)
    return tuple(out)


def sp_inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, q in enumerate(p):
        if q > 0:
            out[q - 1] = i + 1
        else:
            out[-q - 1] = -(i + 1)
    return tuple(out)


def sp_flip_count(p: tuple[int, ...]) -> int:
    return sum(1 for q in p if q < 0)


def all_signed_perms(n: int):
    """All 2^n n! signed permutations, deterministic order."""
    from itertools import permutations, product

    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(tuple(s * q for s, q in zip(signs, perm)))
    return out


# -- ambient group elements -------------------------------------------


@dataclass(frozen=True)
class Affine:
    """t(trans2 / 2) followed by the signed permutation perm."""

    trans2: tuple[int, ...]
    perm: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Affine":
        return cls((0,) * n, sp_identity(n))

    @classmethod
    def translation(cls, mu: tuple[int, ...]) -> "Affine":
        return cls(tuple(2 * x for x in mu), sp_identity(len(mu)))

    @property
    def n(self) -> int:
        return len(self.trans2)

    def __mul__(self, other: "Affine") -> "Affine":
        return Affine(
            tuple(a + b for a, b in zip(self.trans2, sp_apply(self.perm, other.trans2))),
            sp_mul(self.perm, other.perm),
        )

    def inverse(self) -> "Affine":
        pinv = sp_inv(self.perm)
        return Affine(tuple(-x for x in sp_apply(pinv, self.trans2)), pinv)

    def act_root(self, a: AffineRoot) -> AffineRoot:
        alpha = sp_apply(self.perm, a.alpha)
        r2 = a.r2 - sum(x * y for x, y in zip(alpha, self.trans2))
        return AffineRoot(alpha, r2)

    def is_identity(self) -> bool:
        return not any(self.trans2) and self.perm == sp_identity(self.n)

    def is_translation(self) -> bool:
        return self.perm == sp_identity(self.n)

    def weight2(self) -> tuple[int, ...]:
        """Doubled translation part (the walk weight)."""
        return self.trans2

    def direction(self) -> tuple[int, ...]:
        """Finite signed-permutation part (the walk direction)."""
        return self.perm

    def to_json(self) -> dict:
        return {"trans2": list(self.trans2), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, data: dict) -> "Affine":
        return cls(tuple(data["trans2"]), tuple(data["perm"]))


def reflection(a: AffineRoot) -> Affine:
    """s_{alpha + r c} = t(-r alpha^v) s_alpha as an ambient element."""
    n = a.n
    norm2 = a.norm2()
    trans2 = []
    for x in a.alpha:
        num = -2 * a.r2 * x
        if num % norm2:
            raise NotInGroup("reflection translation leaves the lattice")
        trans2.append(num // norm2)
    perm = []
    for k in range(n):
        pair = a.alpha[k]
        coeff_num = 2 * pair
        image = [1 if j == k else 0 for j in range(n)]
        if coeff_num % norm2 == 0:
            c = coeff_num // norm2
            for j in range(n):
                image[j] -= c * a.alpha[j]
        else:
            raise NotInGroup("reflection image leaves the lattice")
        nz = [(j, v) for j, v in enumerate(image) if v]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            raise NotInGroup(f"{a.text()} is not a signed-permutation reflection")
        j, v = nz[0]
        perm.append(v * (j + 1))
    return Affine(tuple(trans2), tuple(perm))


# -- presentations ----------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    name: str
    n: int
    simple: tuple[AffineRoot, ...]
    gens: tuple[Affine, ...]
    auto_names: tuple[str, ...]
    auto_elts: tuple[Affine, ...]
    finite_letters: tuple[int, ...]

    def auto(self, name: str) -> Affine:
        return self.auto_elts[self.auto_names.index(name)]

    def identity(self) -> Affine:
        return Affine.identity(self.n)

    def match_auto(self, w: Affine) -> str | None:
        for name, elt in zip(self.auto_names, self.auto_elts):
            if elt == w:
                return name
        return None


def _eps(n: int, entries: dict[int, int]) -> tuple[int, ...]:
    return tuple(entries.get(i, 0) for i in range(n))


@lru_cache(maxsize=None)
def presentation(name: str, n: int) -> Presentation:
    if n < 2:
        raise ValueError("rank must be at least 2")
    e = Affine.identity(n)
    mids = simple_roots(n)[1:-1]
    flip1 = tuple(-1 if i == 0 else i + 1 for i in range(n))
    revflip = tuple(-(n - i) for i in range(n))  # e_{i+1} -> -e_{n-i}
    if name == "cc":
        simple = tuple(simple_roots(n))
        autos = {"e": e}
    elif name == "cry":
        a0 = AffineRoot(_eps(n, {0: -1, 1: -1}), 2)
        an = AffineRoot(_eps(n, {n - 1: 1}), 0)
        simple = (a0, *mids, an)
        autos = {"e": e, "pi^Cv": Affine(_eps(n, {0: 2}), flip1)}
    elif name == "bry":
        simple = tuple(simple_roots(n))
        autos = {"e": e, "pi^Bv": Affine((1,) * n, revflip)}
    elif name == "d":
        a0 = AffineRoot(_eps(n, {0: -1, 1: -1}), 2)
        an = AffineRoot(_eps(n, {n - 2: 1, n - 1: 1}), 0)
        simple = (a0, *mids, an)
        if n == 2:
            # Rank 2 is the reducible case (two orthogonal rank-1 systems):
            # the wall opposite a_1 is an independent simple root, without
            # which the diagram automorphisms do not normalize the walls.
            simple = simple + (AffineRoot(_eps(n, {0: -1, 1: 1}), 2),)
        pin_minus = tuple(n if i == 0 else -(n - i) for i in range(n))  # e_1 -> +e_n
        autos = {
            "e": e,
            "pi1^D": Affine(_eps(n, {0: 2}), flip1),
            "pin-1^D": Affine((1,) * n, pin_minus),
            "pin^D": Affine((1,) * n, revflip),
        }
    else:
        raise ValueError(f"unknown presentation {name!r}")
    gens = tuple(reflection(a) for a in simple)
    return Presentation(
        name=name,
        n=n,
        simple=simple,
        gens=gens,
        auto_names=tuple(autos),
        auto_elts=tuple(autos.values()),
        finite_letters=tuple(range(1, n + 1)),
    )


# -- words, length, normal form ---------------------------------------


def _peel(pres: Presentation, w: Affine, letters) -> tuple[Affine, list[int]]:
    """Strip right descents from the given letter set; word comes out reversed."""
    peeled: list[int] = []
    guard = 0
    while True:
        guard += 1
        if guard > 100000:
            raise NotInGroup("descent peeling did not terminate")
        for i in letters:
            if not is_positive(w.act_root(pres.simple[i])):
                w = w * pres.gens[i]
                peeled.append(i)
                break
        else:
            return w, peeled


def normal_form(pres: Presentation, w: Affine) -> tuple[str, tuple[int, ...]]:
    """(diagram automorphism, reduced Coxeter word) with w = auto * word.

    Raises NotInGroup when the residue after peeling all descents is not a
    diagram automorphism of this presentation.
    """
    residue, peeled = _peel(pres, w, range(len(pres.simple)))
    name = pres.match_auto(residue)
    if name is None:
        raise NotInGroup(f"{w} is not in the {pres.name} group (rank {pres.n})")
    return name, tuple(reversed(peeled))


def word_element(pres: Presentation, auto: str, word) -> Affine:
    w = pres.auto(auto)
    for i in word:
        w = w * pres.gens[i]
    return w


def length(pres: Presentation, w: Affine) -> int:
    return len(normal_form(pres, w)[1])


def reduced_word(pres: Presentation, w: Affine) -> tuple[str, tuple[int, ...]]:
    return normal_form(pres, w)


def contains(pres: Presentation, w: Affine) -> bool:
    try:
        normal_form(pres, w)
        return True
    except NotInGroup:
        return False


def min_coset_rep(pres: Presentation, mu: tuple[int, ...]) -> Affine:
    """The shortest element of t(mu) * (finite part of the group).

    For the cc/cry/bry presentations the finite letters generate the full
    hyperoctahedral group and greedy right-descent stripping from t(mu) is
    the whole story.  The d group contains finite parts reachable only
    through diagram automorphisms, so there the minimum is taken over every
    signed permutation u with t(mu) u in the group.
    """
    t = Affine.translation(mu)
    if pres.name != "d":
        w, _ = _peel(pres, t, pres.finite_letters)
        return w
    best = None
    for u in all_signed_perms(pres.n):
        cand = Affine(t.trans2, u)
        try:
            auto, word = normal_form(pres, cand)
        except NotInGroup:
            continue
        key = (len(word), pres.auto_names.index(auto), word)
        if best is None or key < best[0]:
            best = (key, cand)
    if best is None:
        raise NotInGroup(f"no coset representative for {mu} in {pres.name}")
    return best[1]


# -- the letter homomorphisms between presentations --------------------


def _word_image(src: Presentation, dst: Presentation, w: Affine, letter_map) -> Affine:
    _, word = normal_form(src, w)
    out = dst.identity()
    for i in word:
        out = out * letter_map(i)
    return out


def phi_c(w: Affine, n: int) -> Affine:
    """cc -> cry: s_0 goes to the diagram involution, s_i (i >= 1) to itself."""
    cc, cry = presentation("cc", n), presentation("cry", n)
    pi = cry.auto("pi^Cv")
    return _word_image(cc, cry, w, lambda i: pi if i == 0 else cry.gens[i])


def phi_d(w: Affine, n: int) -> Affine:
    """cc -> d: s_0 -> pi_1, s_i -> s_i (i < n), s_n -> identity."""
    cc, d = presentation("cc", n), presentation("d", n)
    pi1 = d.auto("pi1^D")
    ident = d.identity()
    return _word_image(cc, d, w, lambda i: pi1 if i == 0 else ident if i == n else d.gens[i])


def embed_b(w: Affine, n: int) -> Affine:
    """cc -> bry: the identity on letters (cc is the index-two Coxeter part)."""
    cc, bry = presentation("cc", n), presentation("bry", n)
    return _word_image(cc, bry, w, lambda i: bry.gens[i])


# -- enumeration and formatting ---------------------------------------


def length_ball(pres: Presentation, max_len: int) -> dict[Affine, int]:
    """All elements of length <= max_len, mapped to their lengths."""
    ball: dict[Affine, int] = {}
    frontier: list[Affine] = []
    for elt in pres.auto_elts:
        ball[elt] = 0
        frontier.append(elt)
    for ell in range(1, max_len + 1):
        nxt = []
        for w in frontier:
            for i, s in enumerate(pres.gens):
                if is_positive(w.act_root(pres.simple[i])):
                    v = w * s
                    if v not in ball:
                        ball[v] = ell
                        nxt.append(v)
        frontier = nxt
    return ball


def format_word(pres: Presentation, auto: str, word) -> str:
    parts = [] if auto == "e" else [auto]
    parts.extend(f"s{i}" for i in word)
    return ".".join(parts) if parts else "e"
