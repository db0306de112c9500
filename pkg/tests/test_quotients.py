import random

import pytest

from uvbraid import (
    OrderCertificate,
    Params,
    QuotElem,
    abelianize,
    parse_word,
    quotient_image,
    quotient_order,
    random_word,
    relator_words,
)
from uvbraid.quotients import qinv, qmul, quotient_identity


def test_identity_element():
    e = quotient_identity(Params(3, 2), 5)
    assert e.vec == (0, 0)
    assert e.perm.is_identity
    assert e.modulus == 5


def test_modulus_validation():
    with pytest.raises(ValueError):
        quotient_identity(Params(3, 1), 1)
    with pytest.raises(ValueError):
        QuotElem((1,), quotient_identity(Params(2, 1), 2).perm, -2)
    # 0 means untruncated integer exponents
    quotient_identity(Params(3, 1), 0)


def test_qmul_checks_compatibility():
    p = Params(3, 1)
    a = quotient_image(parse_word("s1.1", p), 2)
    b = quotient_image(parse_word("s1.1", p), 3)
    with pytest.raises(ValueError):
        qmul(a, b)


def test_group_axioms_randomised():
    p = Params(4, 2)
    rng = random.Random(17)
    e = quotient_identity(p, 3)
    elems = [quotient_image(random_word(p, rng, 8), 3) for _ in range(30)]
    for x in elems:
        assert qmul(x, qinv(x)) == e
        assert qmul(qinv(x), x) == e
        assert qmul(x, e) == x
    for _ in range(30):
        x, y, z = (rng.choice(elems) for _ in range(3))
        assert qmul(qmul(x, y), z) == qmul(x, qmul(y, z))


def test_quotient_image_is_a_homomorphism():
    p = Params(4, 2)
    rng = random.Random(19)
    for d in (2, 3):
        for _ in range(40):
            u = random_word(p, rng, 10)
            v = random_word(p, rng, 10)
            assert quotient_image(u * v, d) == qmul(
                quotient_image(u, d), quotient_image(v, d)
            )


def test_relators_die_in_quotient():
    for n in (2, 4, 6):
        for c in (1, 3):
            p = Params(n, c)
            e = quotient_identity(p, 2)
            for label, w in relator_words(p):
                assert quotient_image(w, 2) == e, label


def test_generator_images():
    p = Params(3, 2)
    x = quotient_image(parse_word("s1.2", p), 3)
    assert x.vec == (0, 1)
    assert x.perm.images == (2, 1, 3)
    y = quotient_image(parse_word("r2", p), 3)
    assert y.vec == (0, 0)
    assert y.perm.images == (1, 3, 2)
    z = quotient_image(parse_word("S1.2 S1.2", p), 3)
    assert z.vec == (0, 1)  # -2 = 1 mod 3


def test_untruncated_exponents_match_abelianisation():
    p = Params(4, 2)
    rng = random.Random(23)
    for _ in range(40):
        w = random_word(p, rng, 15)
        assert quotient_image(w, 0).vec == abelianize(w).sigma_exponents


def test_quotient_order_closure_certificate():
    cert = quotient_order(Params(5, 2), 2)
    assert cert == OrderCertificate(480, 120, "closure", 480)
    assert cert.order > cert.n_factorial


def test_quotient_order_units_certificate():
    # past the closure budget the order is certified structurally
    cert = quotient_order(Params(5, 2), 2, closure_limit=100)
    assert cert.order == 480
    assert cert.method == "units"
    assert cert.closure_size is None


def test_quotient_order_small_cases():
    assert quotient_order(Params(2, 1), 2).order == 4
    assert quotient_order(Params(2, 1), 3).order == 6
    assert quotient_order(Params(3, 1), 2).order == 12


def test_quotient_order_validation():
    with pytest.raises(ValueError):
        quotient_order(Params(3, 1), 1)
    with pytest.raises(ValueError):
        quotient_order(Params(1, 1), 2)
