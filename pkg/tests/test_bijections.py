"""Lattice-path bijections: worked examples, round trips, image sets."""

from itertools import permutations

import pytest

from patavoid import bijections as B
from patavoid.closed_forms import formula_value
from patavoid.patterns import avoids, parse_pattern_set
from patavoid.perms import parse_perm

P213 = parse_pattern_set("2-1-3")
P_BAR = parse_pattern_set("2-1-3,[2]-31")
P_GLUED = parse_pattern_set("2-1-3,12-3")
P_ODD = parse_pattern_set("2-1-3,[2o]-31")


def avoiders(pats, n):
    return [p for p in permutations(range(1, n + 1)) if avoids(p, pats)]


def test_path_kinds():
    assert B.path_is("UUDD", "dyck")
    assert not B.path_is("UDDU", "dyck")
    assert not B.path_is("UDX", "dyck")
    assert B.path_is("UHDUD", "motzkin")
    assert not B.path_is("UHD", "dyck")
    assert B.path_is("UUDDUD", "udu_free")
    assert not B.path_is("UDUD", "udu_free")
    assert B.path_is("UUDDUD", "uuu_free")
    assert not B.path_is("UUUDDD", "uuu_free")
    assert B.path_is("UUDUDD", "ddd_free")
    assert not B.path_is("UUUDDD", "ddd_free")
    assert B.path_is("EEENENEEEN", "subdiagonal")
    assert not B.path_is("ENE", "subdiagonal")  # rises above y = x/2
    assert not B.path_is("EEE", "subdiagonal")  # stops short of y = x // 2
    with pytest.raises(ValueError):
        B.path_is("UD", "nope")


def test_generators_have_known_sizes():
    catalan = [1, 1, 2, 5, 14, 42]
    for n in range(6):
        assert len(list(B.dyck_paths(n))) == catalan[n]
        assert len(list(B.motzkin_paths(n))) == formula_value("motzkin", n)
    for n, count in enumerate([1, 1, 1, 2, 3, 7, 12, 30], start=0):
        if n:
            assert len(list(B.subdiagonal_paths(n))) == count, n


def test_phi_examples():
    assert B.phi(parse_perm("4675123")) == "UUUDDUDDUUUDDD"
    assert B.phi((1,)) == "UD"
    assert B.phi_inverse("UUUDDUDDUUUDDD") == parse_perm("4675123")
    assert B.phi_inverse("UUDUDDUDUD") == parse_perm("35421")
    with pytest.raises(ValueError):
        B.phi((1, 3, 2, 4))  # 3, 2, 4 forms a 2-1-3 occurrence
    with pytest.raises(ValueError):
        B.phi_inverse("UDU")


@pytest.mark.parametrize("n", range(1, 9))
def test_phi_bijective_onto_dyck(n):
    perms = avoiders(P213, n)
    images = set()
    for p in perms:
        d = B.phi(p)
        assert B.path_is(d, "dyck") and len(d) == 2 * n
        assert B.phi_inverse(d) == p
        images.add(d)
    assert images == set(B.dyck_paths(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_phi_characterizations(n):
    # the barred companion pattern corresponds to UDU factors, the glued
    # ascent companion to UUU factors
    for p in avoiders(P213, n):
        d = B.phi(p)
        assert ("UDU" not in d) == avoids(p, P_BAR)
        assert ("UUU" not in d) == avoids(p, P_GLUED)


def test_callan_examples():
    assert B.callan("UUDD") == "H"
    assert B.callan("UUDDUD") == "UD"
    assert B.callan("UUUDDD") == "HH"
    assert B.callan("UD") == ""
    assert B.callan_inverse("") == "UD"
    with pytest.raises(ValueError):
        B.callan("UDUD")
    with pytest.raises(ValueError):
        B.callan_inverse("UDD")


@pytest.mark.parametrize("n", range(1, 10))
def test_callan_bijective(n):
    domain = [d for d in B.dyck_paths(n) if "UDU" not in d]
    motzkin = set(B.motzkin_paths(n - 1))
    images = set()
    for d in domain:
        m = B.callan(d)
        assert B.callan_inverse(m) == d
        images.add(m)
    assert images == motzkin
    for m in motzkin:
        assert B.callan(B.callan_inverse(m)) == m


def test_udu_uuu_examples():
    assert B.udu_uuu("UUUUDDUUDDDDUUDD") == "UDUUDUDUUDDUDD"
    assert B.udu_uuu("UD") == ""
    assert B.udu_uuu_inverse("UDUUDUDUUDDUDD") == "UUUUDDUUDDDDUUDD"
    assert B.udu_uuu_inverse("") == "UD"
    with pytest.raises(ValueError):
        B.udu_uuu("UDUD")
    with pytest.raises(ValueError):
        B.udu_uuu_inverse("UUUDDD")


@pytest.mark.parametrize("n", range(1, 10))
def test_udu_uuu_bijective(n):
    domain = [d for d in B.dyck_paths(n) if "UDU" not in d]
    codomain = set(d for d in B.dyck_paths(n - 1) if "UUU" not in d)
    images = set()
    for d in domain:
        out = B.udu_uuu(d)
        assert B.udu_uuu_inverse(out) == d
        images.add(out)
    assert images == codomain
    for m in codomain:
        assert B.udu_uuu(B.udu_uuu_inverse(m)) == m


@pytest.mark.parametrize("n", range(1, 9))
def test_chained_motzkin_witness(n):
    # composing the maps carries the doubly restricted avoiders onto the
    # Motzkin paths one step shorter, witnessing their counting sequence
    perms = avoiders(P_BAR, n)
    images = sorted(B.callan(B.phi(p)) for p in perms)
    assert images == sorted(B.motzkin_paths(n - 1))


def test_subdiag_examples():
    assert B.subdiag(parse_perm("4675123")) == "EEENENEEEN"
    assert B.subdiag((1,)) == "E"
    assert B.subdiag_inverse("EEENENEEEN") == parse_perm("4675123")
    assert B.subdiag_inverse("E") == (1,)
    with pytest.raises(ValueError):
        B.subdiag((1, 3, 2))  # the descent (3, 2) has no extension: even count
    with pytest.raises(ValueError):
        B.subdiag_inverse("NE")


@pytest.mark.parametrize("n", range(1, 9))
def test_subdiag_bijective(n):
    perms = avoiders(P_ODD, n)
    images = set()
    for p in perms:
        path = B.subdiag(p)
        assert B.path_is(path, "subdiagonal")
        assert B.subdiag_inverse(path) == p
        images.add(path)
    assert images == set(B.subdiagonal_paths(n))
