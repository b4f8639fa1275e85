import _grigq as gq


def test_words():
    assert gq.free_reduce("abBc") == "ac"
    assert gq.reduce_involutive("bc") == "d"
    assert gq.substitute("ad", 1) == "acac"
    fam = gq.relator_family("thm1", 3)
    assert len(fam) == 8
    assert ("u_0", "adadadad") in fam


def test_tree():
    assert gq.act("a", "00") == "10"
    assert gq.section("b", "0") == "a"
    assert gq.level_perm("a", 1) == [1, 0]
    assert gq.is_trivial("(ad)^4")
    assert not gq.is_trivial("ab")
    assert gq.nucleus_depth("ab") == 1


def test_orders():
    assert gq.quotient_order(3) == "128"
    assert gq.quotient_order(5) == str(2**22)
    assert gq.kernel_order(4) == "32"
    assert gq.kernel_elementary_abelian(4)


def test_enumeration_and_abelianization():
    assert gq.enumerate_order("gens: a b\na^2\nb^2\n(ab)^3") == 6
    assert gq.enumerate_order("gens: a\naA", max_cosets=50) is None
    inv = gq.abelianization("thm4", 3)
    assert [f for f in inv if f != "1"] == ["2", "2", "2"]


def test_multiplier():
    rep = gq.multiplier_report(3)
    assert rep["h2_dim"] == 7
    assert rep["schur_mod2_rank"] == 4
    assert rep["relators_independent"]


def test_pairs_and_limits():
    assert gq.verify_pair_identity("u", 1)
    assert gq.verify_pair_identity("V", 2)
    dims = [2 * n + 1 for n in range(3, 41)]
    assert gq.limit_bound(dims, 5, 10) == 22


def test_version():
    assert gq.__version__
