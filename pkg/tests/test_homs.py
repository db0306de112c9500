import random

import pytest

from uvbraid import (
    BudgetExceededError,
    HomSpec,
    Params,
    Perm,
    SearchBudget,
    abelianize,
    color_parity,
    enumerate_homs,
    hom_from_bits,
    identity,
    is_admissible,
    parse_word,
    random_word,
    relator_words,
    verify_homspec,
)
from uvbraid.homs import check_bits, eval_bits_hom, has_abelian_image
from uvbraid.perms import transposition


def test_hom_from_bits_images():
    p = Params(4, 2)
    h = hom_from_bits((1, 0, 1), p)
    assert h.m == 4
    assert h.image_rho[0] == transposition(4, 1, 2)
    assert h.image_sigma[0][0] == transposition(4, 1, 2)  # colour 1 switched on
    assert h.image_sigma[0][1] == identity(4)  # colour 2 switched off
    assert h.image_sigma[2][0] == transposition(4, 3, 4)


def test_switched_on_tuples_are_homomorphisms():
    for n in (3, 5):
        for c in (1, 2):
            p = Params(n, c)
            for k in range(2**c):
                bits = tuple((k >> b) & 1 for b in range(c)) + (1,)
                ok, failed = verify_homspec(hom_from_bits(bits, p), p)
                assert ok, failed


def test_virtual_off_with_colour_on_is_not_a_homomorphism():
    # the slide relation forces the virtual images to carry crossings
    # to the next strand pair; with the virtual letters killed the two
    # sides land on different transpositions
    p = Params(3, 1)
    ok, failed = verify_homspec(hom_from_bits((1, 0), p), p)
    assert not ok
    assert failed.startswith("slide(")


def test_is_admissible():
    p = Params(4, 1)
    assert is_admissible((0, 1), p)
    assert is_admissible((1, 1), p)
    assert not is_admissible((1, 0), p)
    assert not is_admissible((0, 0), p)


def test_is_admissible_needs_three_strands():
    with pytest.raises(ValueError):
        is_admissible((1, 1), Params(2, 1))


def test_check_bits():
    p = Params(3, 2)
    check_bits((0, 1, 1), p)
    with pytest.raises(ValueError):
        check_bits((0, 1), p)  # wrong length
    with pytest.raises(ValueError):
        check_bits((0, 2, 1), p)


def test_eval_bits_hom():
    p = Params(3, 1)
    w = parse_word("r1 s2.1 r1", p)
    assert eval_bits_hom((1, 1), w) == eval_bits_hom((1, 1), parse_word("r2 s1.1 r2", p))
    # with every bit on, each letter maps to its adjacent transposition
    assert eval_bits_hom((1, 1), parse_word("r1", p)) == transposition(3, 1, 2)


def test_homspec_json_round_trip():
    p = Params(3, 1)
    h = hom_from_bits((1, 1), p)
    data = h.to_json_dict()
    assert data["m"] == 3
    assert HomSpec.from_json_dict(data, p) == h


def test_from_json_rejects_bad_shapes():
    p = Params(3, 1)
    data = hom_from_bits((1, 1), p).to_json_dict()
    data["rho"] = data["rho"][:1]
    with pytest.raises(ValueError):
        HomSpec.from_json_dict(data, p)


def test_verify_homspec_spots_broken_images():
    p = Params(3, 1)
    # sending every generator to a 3-cycle breaks the involution relation
    cyc = Perm((2, 3, 1))
    h = HomSpec(3, (cyc, cyc), ((cyc,), (cyc,)))
    ok, failed = verify_homspec(h, p)
    assert not ok
    assert failed == "invol(r1)"


def test_abelianize_counts_signed_colour_exponents():
    p = Params(4, 3)
    w = parse_word("s1.2 r1 s3.2 S2.1 r3 s1.3", p)
    img = abelianize(w)
    assert img.sigma_exponents == (-1, 2, 1)
    assert img.rho_parity == 0
    assert abelianize(parse_word("r1 r2 r1", p)).rho_parity == 1


def test_abelianize_is_additive():
    p = Params(4, 2)
    rng = random.Random(9)
    for _ in range(50):
        u = random_word(p, rng, 10)
        v = random_word(p, rng, 10)
        uv = abelianize(u * v)
        au, av = abelianize(u), abelianize(v)
        assert uv.sigma_exponents == tuple(
            x + y for x, y in zip(au.sigma_exponents, av.sigma_exponents)
        )
        assert uv.rho_parity == (au.rho_parity + av.rho_parity) % 2


def test_abelianize_kills_relators():
    p = Params(5, 2)
    for label, w in relator_words(p):
        img = abelianize(w)
        assert img.sigma_exponents == (0, 0), label
        assert img.rho_parity == 0, label


def test_color_parity():
    p = Params(3, 2)
    w = parse_word("s1.1 r1", p)
    assert color_parity(1, w) == 1
    assert color_parity(2, w) == 0
    assert color_parity(1, parse_word("s1.1 S2.1", p)) == 0
    with pytest.raises(ValueError):
        color_parity(3, w)
    with pytest.raises(ValueError):
        color_parity(0, w)


def test_enumerate_homs_to_s2():
    # factors through the abelianisation: independent sign choices for
    # the sigma class and the rho class
    found = enumerate_homs(Params(3, 1), 2, SearchBudget())
    assert len(found) == 4
    for h in found:
        assert verify_homspec(h, Params(3, 1))[0]
        assert has_abelian_image(h)


def test_enumerate_homs_deterministic_order():
    a = enumerate_homs(Params(4, 1), 2, SearchBudget())
    b = enumerate_homs(Params(4, 1), 2, SearchBudget())
    assert a == b


def test_enumerate_homs_includes_bit_family():
    p = Params(3, 1)
    found = enumerate_homs(p, 3, SearchBudget())
    for bits in ((0, 1), (1, 1)):
        assert hom_from_bits(bits, p) in found


def test_trivial_rho_image_forces_abelian_image():
    p = Params(3, 1)
    for h in enumerate_homs(p, 3, SearchBudget()):
        if any(img.is_identity for img in h.image_rho):
            assert has_abelian_image(h)


def test_enumerate_homs_budget():
    with pytest.raises(BudgetExceededError) as err:
        enumerate_homs(Params(5, 1), 3, SearchBudget(max_nodes=5, max_seconds=60.0))
    assert isinstance(err.value.partial, list)


def test_single_strand_has_one_hom():
    found = enumerate_homs(Params(1, 1), 3, SearchBudget())
    assert len(found) == 1
    assert found[0].image_rho == ()
