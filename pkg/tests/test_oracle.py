import random

import pytest

from uvbraid import (
    Params,
    ProofResult,
    are_equal,
    bfs_equal,
    parse_word,
    random_word,
    replay,
    rewrite_rules,
)
from uvbraid.oracle import PROVEN_EQUAL, UNKNOWN, apply_rule


def test_reflexive_at_depth_zero():
    p = Params(3, 1)
    w = parse_word("r1 s2.1 S1.1", p)
    res = bfs_equal(w, w)
    assert res.verdict == PROVEN_EQUAL
    assert res.path == ()


def test_slide_example():
    p = Params(3, 1)
    res = bfs_equal(parse_word("r1 s2.1 r1", p), parse_word("r2 s1.1 r2", p))
    assert res.proven
    assert len(res.path) >= 1


def test_small_budget_stays_unknown():
    p = Params(3, 1)
    res = bfs_equal(parse_word("r1", p), parse_word("", p), max_depth=3, max_frontier=50)
    assert res.verdict == UNKNOWN
    assert res.path is None


def test_rejects_mixed_params():
    with pytest.raises(ValueError):
        bfs_equal(parse_word("r1", Params(3, 1)), parse_word("r1", Params(4, 1)))


def test_rule_table_labels():
    rules = rewrite_rules(Params(4, 1))
    assert "braid(r1):fwd" in rules
    assert "braid(r1):rev" in rules
    assert "comm(r1,r3)" in rules and "comm(r3,r1)" in rules
    assert "comm(s1.1,r3)" in rules
    assert "ins(r2)" in rules
    assert "ins(s1.1)" in rules and "ins(S1.1)" in rules
    assert "slide(s2.1):fwd" in rules
    assert "slide(S1.1):rev" in rules
    assert "rel(slide(s1.1)):ins" in rules
    assert "rel(slide(s1.1)):del" in rules


def test_apply_rule_validates_position():
    p = Params(4, 1)
    rules = rewrite_rules(p)
    letters = parse_word("r1 r2 r1", p).letters
    out = apply_rule(letters, rules["braid(r1):fwd"], 0)
    assert out == parse_word("r2 r1 r2", p).letters
    with pytest.raises(ValueError):
        apply_rule(letters, rules["braid(r1):fwd"], 1)
    with pytest.raises(ValueError):
        apply_rule(letters, rules["braid(r2):fwd"], 0)


def test_every_rule_preserves_the_element():
    # each rewrite must fix the group element it acts on, otherwise a
    # "proof" would be meaningless
    p = Params(4, 2)
    for label, (pattern, replacement) in rewrite_rules(p).items():
        from uvbraid import word

        assert are_equal(word(p, *pattern), word(p, *replacement)), label


def test_replay_reproduces_the_proof():
    p = Params(4, 1)
    u = parse_word("r1 s2.1 r1 r3", p)
    v = parse_word("r2 s1.1 r2 r3", p)
    res = bfs_equal(u, v)
    assert res.proven
    assert replay(u, v, res.path).letters == ()


def test_replay_rejects_invalid_path():
    p = Params(3, 1)
    u = parse_word("r1 s2.1 r1", p)
    v = parse_word("r2 s1.1 r2", p)
    with pytest.raises((KeyError, ValueError)):
        replay(u, v, (("braid(r1):fwd", 0),))


def test_never_disagrees_with_the_engine():
    p = Params(4, 2)
    rng = random.Random(29)
    proven = 0
    for _ in range(150):
        u = random_word(p, rng, 8)
        v = random_word(p, rng, 8)
        res = bfs_equal(u, v, max_depth=10, max_frontier=250)
        if res.proven:
            proven += 1
            assert are_equal(u, v)
            assert replay(u, v, res.path).letters == ()
    # the sample is small but should not be empty of positives
    assert proven >= 1


def test_equal_words_get_proofs_at_modest_depth():
    p = Params(4, 1)
    rng = random.Random(31)
    rels = [
        parse_word("r1 r2 r1 r2 r1 r2", p),
        parse_word("r1 r3 r1 r3", p),
        parse_word("s1.1 r3 S1.1 r3", p),
    ]
    proven = 0
    for _ in range(20):
        w = random_word(p, rng, 5)
        rel = rng.choice(rels)
        pos = rng.randrange(len(w.letters) + 1)
        from uvbraid import word

        spliced = word(p, *(w.letters[:pos] + rel.letters + w.letters[pos:]))
        res = bfs_equal(w, spliced, max_depth=6, max_frontier=4000)
        proven += res.proven
    assert proven >= 15


def test_proof_result_shape():
    res = ProofResult(PROVEN_EQUAL, (), 1)
    assert res.proven
    assert not ProofResult(UNKNOWN, None, 5).proven
