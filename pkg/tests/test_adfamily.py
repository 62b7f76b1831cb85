import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import lacunary
from rieszsep.adfamily import (
    BranchSeed,
    IndistinguishableSeeds,
    ad_set,
    ad_set_within,
    code,
    decode,
    intersection_bound,
    letters_for,
)
from rieszsep.dissociate import word_intersection_check


def seed(text):
    return BranchSeed.parse(text)


def test_ad_set_examples():
    assert ad_set(seed("period=01"), 3).codes == (1, 4, 9)
    assert ad_set(seed("period=1"), 2).codes == (2, 6)
    assert ad_set(seed("prefix=0,period=1"), 1).codes == (1,)


def test_code_bijection_exhaustive():
    seen = set()
    for length in range(1, 13):
        for bits in itertools.product("01", repeat=length):
            s = "".join(bits)
            c = code(s)
            assert decode(c) == s
            seen.add(c)
    assert seen == set(range(1, 2 ** 13 - 1))


def test_intersection_bound_examples():
    a, b = seed("prefix=0,period=1"), seed("prefix=01,period=0")
    assert intersection_bound(a, b) == 2
    assert intersection_bound(seed("prefix=0,period=1"), seed("period=1")) == 0
    common = set(ad_set(a, 5).codes) & set(ad_set(b, 5).codes)
    assert len(common) == 2


def test_identical_seeds_rejected():
    with pytest.raises(IndistinguishableSeeds):
        intersection_bound(seed("period=01"), seed("prefix=01,period=01"))


def test_seed_parsing():
    s = seed("prefix=0110,period=10")
    assert s.bits(8) == "01101010"
    assert str(s) == "prefix=0110,period=10"
    assert seed("prng=42").bits(20) == seed("prng=42").bits(20)
    assert seed("prng=42").bits(64) != seed("prng=43").bits(64)
    for bad in ["prefix=012,period=1", "prefix=01", "prng=x", "bits=01", "prng=3,period=1"]:
        with pytest.raises(ValueError):
            seed(bad)


def test_prng_stream_independent_of_access_order():
    a, b = seed("prng=7"), seed("prng=7")
    b.bit(500)
    assert a.bits(600) == b.bits(600)


def test_letters_for_examples(Z):
    master = lacunary(Z, 9)
    S = ad_set(seed("period=01"), 3)
    theta, index = letters_for(master, S)
    assert [Z.value(l.element) for l in theta] == [3, 3 ** 4, 3 ** 9]
    assert [index[l] for l in theta] == [1, 2, 3]
    theta, index = letters_for(master, ad_set(seed("period=1"), 1))
    assert [Z.value(l.element) for l in theta] == [9] and index[theta[0]] == 1
    with pytest.raises(ValueError):
        letters_for(lacunary(Z, 5), S)


def test_letters_share_bound_many(Z):
    master = lacunary(Z, 40)
    a, b = seed("prefix=0,period=1"), seed("prefix=01,period=0")
    ta, _ = letters_for(master, ad_set_within(a, 40))
    tb, _ = letters_for(master, ad_set_within(b, 40))
    assert len(set(ta) & set(tb)) == intersection_bound(a, b) == 2


def test_ad_set_within():
    S = ad_set_within(seed("period=1"), 40)
    assert S.codes == (2, 6, 14, 30)
    assert max(ad_set_within(seed("period=0"), 40).codes) == 31


seed_text = st.builds(
    lambda p, q: f"prefix={p},period={q}",
    st.text("01", max_size=6),
    st.text("01", min_size=1, max_size=4),
)


@settings(max_examples=60, deadline=None)
@given(seed_text, seed_text, st.integers(1, 14))
def test_almost_disjointness(t1, t2, n):
    s1, s2 = seed(t1), seed(t2)
    try:
        bound = intersection_bound(s1, s2, horizon=64)
    except IndistinguishableSeeds:
        return
    common = set(ad_set(s1, n).codes) & set(ad_set(s2, n).codes)
    assert len(common) <= bound
    if n >= bound:
        assert len(common) == bound


@settings(max_examples=30, deadline=None)
@given(seed_text, st.integers(1, 20))
def test_monotone_exhaustion(t, n):
    assert set(ad_set(seed(t), n).codes) < set(ad_set(seed(t), n + 1).codes)


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_lemma_on_family_letters(Z, L):
    master = lacunary(Z, 40)
    seeds = [seed(t) for t in ["prefix=0,period=1", "prefix=01,period=0", "period=01"]]
    for a, b in itertools.combinations(seeds, 2):
        ta, _ = letters_for(master, ad_set_within(a, 40))
        tb, _ = letters_for(master, ad_set_within(b, 40))
        assert word_intersection_check(Z, ta, tb, L).equal
