"""Root datum construction, arithmetic, and the text format."""

import pytest

from flagorbits import (
    CartanSpec,
    InvalidCartan,
    InvalidTwist,
    NotARoot,
    ParseError,
    RootPosition,
    build_root_datum,
    cartan_matrix,
    classify_wrt_parabolic,
    coroot_pairing,
    format_root_datum,
    is_m_alpha_trivial,
    parse_root_datum,
    positive_roots,
    reflect,
    simple_root,
    twist_root,
)
from flagorbits.root_datum import all_roots, is_root, is_positive_root, root_support, normalize_levi


def test_builtin_cartan_matrices():
    assert cartan_matrix("A2").entries == ((2, -1), (-1, 2))
    assert cartan_matrix("B2").entries == ((2, -2), (-1, 2))
    assert cartan_matrix("G2").entries == ((2, -1), (-3, 2))
    a1a1 = cartan_matrix("A1xA1").entries
    assert a1a1 == ((2, 0), (0, 2))


def test_bad_type_names():
    for name in ("", "A", "A0", "H3", "B1", "E9", "2A", "A2x"):
        with pytest.raises(InvalidCartan):
            cartan_matrix(name)


def test_cartan_validation_rejects_affine_and_junk():
    # affine A1~ has determinant zero
    with pytest.raises(InvalidCartan):
        build_root_datum(CartanSpec(((2, -2), (-2, 2)), ("1", "2")))
    with pytest.raises(InvalidCartan):
        build_root_datum(CartanSpec(((2, -1), (0, 2)), ("1", "2")))  # asymmetric zero
    with pytest.raises(InvalidCartan):
        build_root_datum(CartanSpec(((2, 1), (1, 2)), ("1", "2")))  # positive off-diagonal
    with pytest.raises(InvalidCartan):
        build_root_datum(CartanSpec(((1, 0), (0, 2)), ("1", "2")))  # bad diagonal


def test_isogenies_of_rank_one():
    sc = build_root_datum("A1")
    ad = build_root_datum("A1", isogeny="adjoint")
    assert sc.root_images == ((2,),)
    assert sc.coroot_images == ((1,),)
    assert ad.root_images == ((1,),)
    assert ad.coroot_images == ((2,),)
    assert not is_m_alpha_trivial(sc, 1)
    assert is_m_alpha_trivial(ad, 1)


def test_lattice_isogeny_matches_adjoint():
    ad = build_root_datum("B2", isogeny="adjoint")
    lat = build_root_datum("B2", isogeny="lattice", coroot_rows=ad.coroot_images)
    assert lat.root_images == ad.root_images
    assert lat.coroot_images == ad.coroot_images


def test_lattice_isogeny_requires_integral_roots():
    # index-two sublattice that does not contain the root
    with pytest.raises(InvalidCartan):
        build_root_datum("A1", isogeny="lattice", coroot_rows=((3,),))


def test_twist_validation():
    assert build_root_datum("A2", twist=(2, 1)).twist == (2, 1)
    with pytest.raises(InvalidTwist):
        build_root_datum("B2", twist=(2, 1))  # does not preserve the matrix
    with pytest.raises(InvalidTwist):
        build_root_datum("A2", twist=(1, 1))  # not a permutation
    with pytest.raises(InvalidTwist):
        build_root_datum("A3", twist=(2, 3, 1))  # not an involution


def test_pairing_and_reflection():
    d = build_root_datum("B2")
    alpha, beta = simple_root(d, 1), simple_root(d, 2)
    assert coroot_pairing(d, alpha, 2) == -2
    assert coroot_pairing(d, beta, 1) == -1
    assert reflect(d, 1, alpha) == (-1, 0)
    assert reflect(d, 2, alpha) == (1, 2)
    # s_i is an involution on every root
    for i in (1, 2):
        for root in all_roots(d):
            assert reflect(d, i, reflect(d, i, root)) == root


def test_positive_root_counts():
    for name, count in (("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6), ("A1xA1", 2)):
        d = build_root_datum(name)
        pos = positive_roots(d)
        assert len(pos) == count
        assert len(all_roots(d)) == 2 * count
        assert all(is_positive_root(d, beta) for beta in pos)


def test_root_membership_and_support():
    d = build_root_datum("A2")
    assert is_root(d, (1, 1))
    assert not is_root(d, (2, 1))
    assert not is_root(d, (0, 0))
    assert root_support((1, 0, 1)) == frozenset({1, 3})


def test_normalize_levi():
    d = build_root_datum("A3")
    assert normalize_levi(d, [3, 1]) == (1, 3)
    assert normalize_levi(d, [1, 1, 2]) == (1, 2)
    with pytest.raises(NotARoot):
        normalize_levi(d, [0])
    with pytest.raises(NotARoot):
        normalize_levi(d, [4, 5])


def test_classify_wrt_parabolic():
    d = build_root_datum("B2")
    levi = (1,)
    assert classify_wrt_parabolic(d, (1, 0), levi) is RootPosition.LEVI
    assert classify_wrt_parabolic(d, (-1, 0), levi) is RootPosition.LEVI
    assert classify_wrt_parabolic(d, (0, 1), levi) is RootPosition.NILRADICAL
    assert classify_wrt_parabolic(d, (1, 1), levi) is RootPosition.NILRADICAL
    assert classify_wrt_parabolic(d, (-1, -1), levi) is RootPosition.OPPOSITE_NILRADICAL
    with pytest.raises(NotARoot):
        classify_wrt_parabolic(d, (2, 1), levi)


def test_twist_root():
    d = build_root_datum("A2", twist=(2, 1))
    assert twist_root(d, (1, 0)) == (0, 1)
    assert twist_root(d, (1, 1)) == (1, 1)


def test_m_alpha_triviality_across_types():
    sc_b2 = build_root_datum("B2")
    assert [is_m_alpha_trivial(sc_b2, i) for i in (1, 2)] == [False, False]
    # in the adjoint lattice the second simple coroot is the even column (-2, 2)
    ad_b2 = build_root_datum("B2", isogeny="adjoint")
    assert [is_m_alpha_trivial(ad_b2, i) for i in (1, 2)] == [False, True]


def test_format_round_trip_named():
    for name in ("A1", "A2", "B2", "A1xA1"):
        for isogeny in ("simply_connected", "adjoint"):
            d = build_root_datum(name, isogeny=isogeny)
            text = format_root_datum(d)
            again = parse_root_datum(text)
            assert again == d
            assert format_root_datum(again) == text


def test_format_round_trip_custom_lattice():
    d = build_root_datum("A1", isogeny="lattice", coroot_rows=((2,),))
    text = format_root_datum(d)
    assert parse_root_datum(text) == d


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_root_datum("")
    with pytest.raises(ParseError):
        parse_root_datum("rootdatum v2\ntype A1\n")
    with pytest.raises(ParseError):
        parse_root_datum("rootdatum v1\ntype A1\nisogeny nonsense\n")
    good = format_root_datum(build_root_datum("A2"))
    with pytest.raises(ParseError):
        parse_root_datum(good + "trailing junk\n")
