import itertools

import pytest

from springerrep.perms import Permutation, parse_permutation


def test_basic_operations():
    w = Permutation((2, 3, 1, 4))
    assert w(1) == 2 and w(3) == 1
    assert w.inverse() * w == Permutation.identity(4)
    assert (w * w.inverse()).is_identity()
    assert w.cycle_type() == (3, 1)
    assert Permutation.simple(4, 2).images == (1, 3, 2, 4)


def test_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation.simple(4, 4)
    with pytest.raises(ValueError):
        Permutation((2, 3)) * Permutation((1,))


def test_reduced_word_reconstructs_every_permutation_in_s4():
    for images in itertools.permutations(range(1, 5)):
        w = Permutation(images)
        word = w.reduced_word()
        rebuilt = Permutation.identity(4)
        for letter in word:  # leftmost factor applied last
            rebuilt = rebuilt * Permutation.simple(4, letter)
        assert rebuilt == w
        # reduced: length equals the inversion number
        inversions = sum(
            1 for a in range(4) for b in range(a + 1, 4) if images[a] > images[b]
        )
        assert len(word) == inversions


def test_reduced_word_convention_pin():
    # the 3-cycle 1->2->3->1 is s_1 s_2: s_2 first, then s_1
    assert Permutation((2, 3, 1)).reduced_word() == (1, 2)


def test_parse_cycle_notation():
    w = parse_permutation("(1 2)(3 4 5)")
    assert w.images == (2, 1, 4, 5, 3)
    assert parse_permutation("(1 2)", n=4).images == (2, 1, 3, 4)
    assert parse_permutation("(2,6,5,4,3)", n=6).images == (1, 6, 2, 3, 4, 5)


def test_parse_one_line_notation():
    assert parse_permutation("2 1 4 5 3").images == (2, 1, 4, 5, 3)
    assert parse_permutation("2,1", n=2).images == (2, 1)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_permutation("")
    with pytest.raises(ValueError):
        parse_permutation("(1 2")
    with pytest.raises(ValueError):
        parse_permutation("(1 2)(2 3)")
    with pytest.raises(ValueError):
        parse_permutation("(1 5)", n=4)
    with pytest.raises(ValueError):
        parse_permutation("1 2 3", n=4)
