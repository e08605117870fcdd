"""Alcove walks: enumeration, step classes, wall roots, endpoints."""

import itertools

import pytest

from koornwalk.roots import AffineRoot, is_positive
from koornwalk.walks import (
    NEGATIVE_CROSSING,
    NEGATIVE_FOLDING,
    POSITIVE_FOLDING,
    Walk,
    assert_reduced_betas,
    beta_roots,
    classify_step,
    endpoint,
    endpoint_decompose,
    enumerate_walks,
    format_walk,
    walk_partials,
)
from koornwalk.weyl import Affine, length_ball, min_coset_rep, normal_form, presentation


def test_walk_counts():
    cc = presentation("cc", 2)
    assert len(list(enumerate_walks(cc, "e", ()))) == 1
    assert len(list(enumerate_walks(cc, "e", (1, 2, 1, 0)))) == 16
    for word in [(0,), (0, 1), (1, 2, 1)]:
        walks = list(enumerate_walks(cc, "e", word))
        assert len(walks) == 2 ** len(word)
        assert len({w.bits for w in walks}) == len(walks)


def test_bits_run_as_binary_counter():
    cc = presentation("cc", 2)
    walks = list(enumerate_walks(cc, "e", (1, 0)))
    assert [w.bits for w in walks] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_textbook_walk_pair():
    # word s_1 s_2 s_1 s_0 starting at e: the walk with bits 0111 stays put
    # on the first step and then crosses; the straight walk has bits 1111
    cc = presentation("cc", 2)
    e = cc.identity()
    p1 = Walk("e", (1, 2, 1, 0), (0, 1, 1, 1), e)
    parts = walk_partials(cc, p1)
    s = cc.gens
    assert parts[0] == e and parts[1] == e
    assert parts[2] == s[2]
    assert parts[3] == s[2] * s[1]
    assert parts[4] == s[2] * s[1] * s[0]
    # first step folds on the wall of a_1, staying on the positive side
    assert classify_step(cc, p1, 1) == POSITIVE_FOLDING
    p2 = Walk("e", (1, 2, 1, 0), (1, 1, 1, 1), e)
    parts = walk_partials(cc, p2)
    assert parts[4] == s[1] * s[2] * s[1] * s[0]


def test_all_ones_bits_are_crossings():
    cc = presentation("cc", 2)
    for walk in enumerate_walks(cc, "e", (0, 1, 2)):
        if all(walk.bits):
            for k in range(1, 4):
                assert classify_step(cc, walk, k).endswith("crossing")


def test_sign_convention_at_fundamental_alcove():
    # crossing the wall of a simple root from the fundamental alcove moves
    # from the positive side to the negative side
    cc = presentation("cc", 2)
    walk = Walk("e", (1,), (1,), cc.identity())
    assert classify_step(cc, walk, 1) == NEGATIVE_CROSSING
    folded = Walk("e", (1,), (0,), cc.identity())
    assert classify_step(cc, folded, 1) == POSITIVE_FOLDING
    # from the other side of the wall the crossing is positive
    walk2 = Walk("e", (1, 1), (1, 1), cc.identity())
    assert classify_step(cc, walk2, 2) == "positive_crossing"
    folded2 = Walk("e", (1, 1), (1, 0), cc.identity())
    assert classify_step(cc, folded2, 2) == NEGATIVE_FOLDING


def test_beta_examples():
    cc = presentation("cc", 2)
    a = cc.simple
    assert beta_roots(cc, (0,)) == [a[0]]
    b1, b2 = beta_roots(cc, (1, 0))
    assert b2 == a[0]
    assert b1 == cc.gens[0].act_root(a[1])  # s_0(a_1)
    assert b1 == AffineRoot((-1, -1), 2)


@pytest.mark.parametrize("n", [2])
def test_betas_distinct_positive_on_reduced_words(n):
    cc = presentation("cc", n)
    for w, ell in length_ball(cc, 5).items():
        auto, word = normal_form(cc, w)
        betas = assert_reduced_betas(cc, word)
        assert len(betas) == ell


def test_beta_gamma_cross_check():
    # for the straight walk, gamma_k = w(-beta_k): the crossing sign at
    # step k is readable from the finite part of the beta root
    cc = presentation("cc", 2)
    for w, ell in length_ball(cc, 5).items():
        if ell == 0:
            continue
        auto, word = normal_form(cc, w)
        betas = beta_roots(cc, word)
        walk = Walk(auto, word, (1,) * ell, cc.identity())
        parts = walk_partials(cc, walk)
        for k in range(1, ell + 1):
            gamma = parts[k - 1].act_root(cc.simple[word[k - 1]])
            assert gamma == endpoint(cc, walk).act_root(-betas[k - 1])


def test_endpoint_decompose():
    cc = presentation("cc", 2)
    empty = Walk("e", (), (), cc.identity())
    assert endpoint_decompose(cc, empty) == ((0, 0), (1, 2))
    straight = Walk("e", (0,), (1,), cc.identity())
    wgt2, perm = endpoint_decompose(cc, straight)
    assert wgt2 == (2, 0) and perm == (-1, 2)  # t(e_1) s_{2e_1}
    folded = Walk("e", (0,), (0,), cc.identity())
    assert endpoint_decompose(cc, folded) == ((0, 0), (1, 2))


def test_deletion_bijection_type_c():
    # deleting the affine-letter steps of walks without 0-foldings gives the
    # walks of the image word, preserving weight and direction
    for n in (2, 3):
        box = 2 if n == 2 else 1
        cc = presentation("cc", n)
        cry = presentation("cry", n)
        pi = cry.auto("pi^Cv")
        for mu in itertools.product(range(-box, box + 1), repeat=n):
            auto, word = normal_form(cc, min_coset_rep(cc, mu))
            # pushing the involutions to the front conjugates each remaining
            # letter by the involutions that started to its right
            target_letters = []
            zeros_after = [0] * (len(word) + 1)
            for k in range(len(word) - 1, -1, -1):
                zeros_after[k] = zeros_after[k + 1] + (1 if word[k] == 0 else 0)
            for k, i in enumerate(word):
                if i == 0:
                    continue
                img = cry.gens[i]
                if zeros_after[k + 1] % 2:
                    img = pi * img * pi.inverse()
                target_letters.append(cry.gens.index(img))
            acc = pi if zeros_after[0] % 2 else cry.identity()
            prefix = cry.match_auto(acc)
            assert prefix is not None
            # the image word is a reduced word of the cry coset representative
            target = min_coset_rep(cry, mu)
            from koornwalk.weyl import word_element
            assert word_element(cry, prefix, target_letters) == target
            assert len(target_letters) == len(normal_form(cry, target)[1])
            seen = set()
            for walk in enumerate_walks(cc, auto, word):
                if any(b == 0 and i == 0 for i, b in zip(walk.word, walk.bits)):
                    continue  # no folding on the affine letter
                bits = tuple(b for i, b in zip(walk.word, walk.bits) if i != 0)
                image = Walk(prefix, tuple(target_letters), bits, cry.identity())
                assert endpoint(cry, image) == endpoint(cc, walk)
                assert bits not in seen
                seen.add(bits)
            assert len(seen) == 2 ** len(target_letters)


def test_walk_text_form():
    cc = presentation("cc", 2)
    walk = Walk("e", (1, 2, 1, 0), (0, 1, 1, 1), cc.identity())
    assert format_walk(walk) == "[1,2,1,0]/0111"
