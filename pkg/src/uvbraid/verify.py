"""Built-in verification suite for the library's mathematical claims.

Each check exercises one headline property of UV(n, c) end to end at
fixed parameter ranges, using an independent source of truth where one
exists (closed formulas, the raw-presentation prover, exhaustive
enumeration).  ``run_all`` returns one result per claim; the CLI
``verify-paper`` command renders them and fails if any claim does.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable

from . import homs, oracle, quotients, raag, semidirect
from .perms import adjacent, all_perms, rho_word, virtual_permutation
from .raag import KLetter, build_graph
from .semidirect import (
    commutator,
    expand_kword,
    kletter_to_word,
    permute_kletter,
    to_normal_form,
)
from .words import Params, Word, random_word, relator_words, rho, sigma, word

DEFAULT_SEED = 271828


@dataclass(frozen=True)
class CheckResult:
    claim: str
    ok: bool
    details: str


def _seeded(seed: int, claim: str) -> Random:
    return Random(f"{seed}:{claim}")


def check_relator_triviality(seed: int) -> CheckResult:
    bad: list[str] = []
    count = 0
    for n in range(2, 9):
        for c in range(1, 4):
            params = Params(n, c)
            for label, w in relator_words(params):
                count += 1
                if not semidirect.is_trivial(w):
                    bad.append(f"n={n} c={c} {label}")
    ok = not bad
    details = f"{count} relator instances trivial over n=2..8, c=1..3"
    if bad:
        details = f"non-trivial relators: {bad[:5]}"
    return CheckResult("relator-triviality", ok, details)


def check_clique_number(seed: int) -> CheckResult:
    bad: list[str] = []
    for n in range(2, 9):
        for c in range(1, 4):
            g = build_graph(Params(n, c))
            got = raag.clique_number(g)
            if got != n // 2:
                bad.append(f"n={n} c={c}: clique {got} != {n // 2}")
    ok = not bad
    details = "branch-and-bound clique number matches floor(n/2) for n=2..8, c=1..3"
    if bad:
        details = "; ".join(bad)
    return CheckResult("vcd-clique-number", ok, details)


def check_p3_classification(seed: int) -> CheckResult:
    bad: list[str] = []
    for n in range(2, 9):
        for c in range(1, 4):
            g = build_graph(Params(n, c))
            free, witness = raag.is_p3_free(g)
            if free != (n <= 3):
                bad.append(f"n={n} c={c}: p3-free={free}")
            if not free:
                v1, v2, v3 = witness
                if not (
                    g.adjacent(v1, v2)
                    and g.adjacent(v2, v3)
                    and not g.adjacent(v1, v3)
                ):
                    bad.append(f"n={n} c={c}: invalid witness {witness}")
    ok = not bad
    details = "induced-path freeness iff n<=3, witnesses valid, n=2..8, c=1..3"
    if bad:
        details = "; ".join(bad)
    return CheckResult("howson-p3-classification", ok, details)


def check_f2xf2(seed: int) -> CheckResult:
    bad: list[str] = []
    for n in range(2, 9):
        for c in range(1, 4):
            g = build_graph(Params(n, c))
            witness = raag.f2xf2_witness(g)
            if (witness is not None) != (n >= 4):
                bad.append(f"n={n} c={c}: witness={witness}")
            if witness is not None:
                x1, x2, y1, y2 = witness
                pattern = (
                    not g.adjacent(x1, x2)
                    and not g.adjacent(y1, y2)
                    and g.adjacent(x1, y1)
                    and g.adjacent(x1, y2)
                    and g.adjacent(x2, y1)
                    and g.adjacent(x2, y2)
                )
                if not pattern:
                    bad.append(f"n={n} c={c}: bad pattern {witness}")
    ok = not bad
    details = "F2xF2 witness exists iff n>=4 with full join pattern, n=2..8, c=1..3"
    if bad:
        details = "; ".join(bad)
    return CheckResult("lerf-f2xf2-obstruction", ok, details)


def check_small_kernels_free(seed: int) -> CheckResult:
    bad: list[str] = []
    for c in range(1, 6):
        g2 = build_graph(Params(2, c))
        g3 = build_graph(Params(3, c))
        if len(g2.verts) != 2 * c or g2.edge_count() != 0:
            bad.append(f"n=2 c={c}: {len(g2.verts)} verts {g2.edge_count()} edges")
        if len(g3.verts) != 6 * c or g3.edge_count() != 0:
            bad.append(f"n=3 c={c}: {len(g3.verts)} verts {g3.edge_count()} edges")
    ok = not bad
    details = "kernel graphs edgeless with 2c and 6c vertices for c=1..5"
    if bad:
        details = "; ".join(bad)
    return CheckResult("free-kernel-small-n", ok, details)


def check_conjugation_action(seed: int) -> CheckResult:
    bad: list[str] = []
    count = 0
    for n in (2, 3, 4):
        for c in (1, 2):
            params = Params(n, c)
            g = build_graph(params)
            for p in all_perms(n):
                section = rho_word(p, params)
                for i, j, t in g.verts:
                    count += 1
                    d = KLetter(i, j, t, 1)
                    lhs = section * kletter_to_word(d, params) * section.inverse()
                    rhs = kletter_to_word(permute_kletter(p, d), params)
                    if not semidirect.are_equal(lhs, rhs):
                        bad.append(f"n={n} c={c} p={p.images} d={d.token()}")
    proven = 0
    checked = 0
    oracle_bad: list[str] = []
    params = Params(4, 1)
    g = build_graph(params)
    for k in (1, 2, 3):
        p = adjacent(4, k)
        section = rho_word(p, params)
        for i, j, t in g.verts:
            d = KLetter(i, j, t, 1)
            lhs = section * kletter_to_word(d, params) * section.inverse()
            rhs = kletter_to_word(permute_kletter(p, d), params)
            checked += 1
            result = oracle.bfs_equal(lhs, rhs, max_depth=5, max_frontier=2500)
            if result.proven:
                proven += 1
                if len(oracle.replay(lhs, rhs, result.path)) != 0:
                    oracle_bad.append(f"replay failed for p=s{k} d={d.token()}")
                if not semidirect.are_equal(lhs, rhs):
                    oracle_bad.append(f"prover disagrees with engine at p=s{k} d={d.token()}")
    ok = not bad and not oracle_bad and proven >= 10
    details = (
        f"{count} conjugation instances equal; prover confirmed {proven}/{checked}"
        " single-transposition instances independently"
    )
    if bad or oracle_bad or proven < 10:
        details = f"failures: {bad[:3] + oracle_bad[:3]}, proven={proven}"
    return CheckResult("conjugation-reindexing", ok, details)


def check_factorisation_soundness(seed: int) -> CheckResult:
    rng = _seeded(seed, "factorisation")
    bad: list[str] = []
    count = 0
    for n in (3, 4, 5):
        for c in (1, 2):
            params = Params(n, c)
            for _ in range(1000):
                w = random_word(params, rng, 30)
                nf = to_normal_form(w)
                rebuilt = expand_kword(nf.kword) * rho_word(nf.perm, params)
                count += 1
                if virtual_permutation(w) != nf.perm:
                    bad.append(f"perm mismatch n={n} c={c}: {w}")
                elif not semidirect.are_equal(w, rebuilt):
                    bad.append(f"n={n} c={c}: {w}")
                if len(bad) > 3:
                    break
    ok = not bad
    details = f"{count} random words of length <= 30 re-assemble from their normal forms"
    if bad:
        details = f"failures: {bad[:3]}"
    return CheckResult("factorisation-soundness", ok, details)


def _virtual_pair_identity_word(params: Params) -> Word:
    a = word(params, rho(3), rho(1))
    b = word(params, rho(1), rho(2))
    return a.inverse() * b.inverse() * commutator(a, b) * b


def _crossing_commutator_word(params: Params, i: int, t: int) -> Word:
    x = word(params, sigma(i, t))
    y = word(params, rho(i + 1), rho(i))
    target = word(params, sigma(i, t, -1), sigma(i + 1, t))
    return commutator(x, y) * target.inverse()


def check_commutator_identities(seed: int) -> CheckResult:
    bad: list[str] = []
    count = 0
    for n in (4, 5, 6):
        for c in (1, 2):
            params = Params(n, c)
            count += 1
            if not semidirect.is_trivial(_virtual_pair_identity_word(params)):
                bad.append(f"virtual-pair identity fails at n={n} c={c}")
            for i in range(1, n - 1):
                for t in range(1, c + 1):
                    count += 1
                    if not semidirect.is_trivial(_crossing_commutator_word(params, i, t)):
                        bad.append(f"crossing commutator fails n={n} c={c} i={i} t={t}")
    ok = not bad
    details = f"{count} commutator identities trivial for n=4..6"
    if bad:
        details = "; ".join(bad[:5])
    return CheckResult("commutator-identities", ok, details)


def _all_bits(c: int):
    for k in range(2 ** (c + 1)):
        yield tuple((k >> b) & 1 for b in range(c + 1))


def check_admissibility(seed: int) -> CheckResult:
    bad: list[str] = []
    for n in range(3, 8):
        for c in range(1, 4):
            params = Params(n, c)
            admissible = 0
            for bits in sorted(_all_bits(c)):
                h = homs.hom_from_bits(bits, params)
                ok_hom, label = homs.verify_homspec(h, params)
                if bits[c] == 1 and not ok_hom:
                    bad.append(f"n={n} c={c} bits={bits}: relation {label} fails")
                got = homs.is_admissible(bits, params)
                if got != (bits[c] == 1):
                    bad.append(f"n={n} c={c} bits={bits}: admissible={got}")
                admissible += got
            if admissible != 2**c:
                bad.append(f"n={n} c={c}: {admissible} admissible tuples != {2 ** c}")
    ok = not bad
    details = (
        "switched-on-virtual tuples are homomorphisms; admissible iff virtual bit set,"
        " exactly 2^c per (n, c), n=3..7, c=1..3"
    )
    if bad:
        details = "; ".join(bad[:5])
    return CheckResult("admissibility", ok, details)


def check_abelianisation(seed: int) -> CheckResult:
    bad: list[str] = []
    zero_count = 0
    for n in range(2, 9):
        for c in range(1, 4):
            params = Params(n, c)
            for label, w in relator_words(params):
                img = homs.abelianize(w)
                zero_count += 1
                if any(img.sigma_exponents) or img.rho_parity:
                    bad.append(f"n={n} c={c} {label} -> {img}")
            for i in range(1, n):
                for t in range(1, c + 1):
                    if homs.color_parity(t, word(params, sigma(i, t), rho(i))) != 1:
                        bad.append(f"n={n} c={c} parity of s{i}.{t} r{i} != 1")
    ok = not bad
    details = f"{zero_count} relators abelianise to zero; colour parity detects single crossings"
    if bad:
        details = "; ".join(bad[:5])
    return CheckResult("abelianisation-parity", ok, details)


def check_small_target_rigidity(seed: int) -> CheckResult:
    params = Params(5, 1)
    budget = homs.SearchBudget(max_nodes=5_000_000, max_seconds=300.0)
    bad: list[str] = []
    counts = {}
    for m in (2, 3):
        found = homs.enumerate_homs(params, m, budget)
        counts[m] = len(found)
        for h in found:
            if not homs.has_abelian_image(h):
                bad.append(f"m={m}: non-abelian image {h.to_json_dict()}")
    ok = not bad
    details = (
        f"all homomorphisms to S_2 ({counts[2]}) and S_3 ({counts[3]})"
        " from n=5 have abelian image"
    )
    if bad:
        details = "; ".join(bad[:3])
    return CheckResult("small-target-rigidity", ok, details)


def check_finite_quotients(seed: int) -> CheckResult:
    bad: list[str] = []
    count = 0
    for n in range(2, 8):
        for c in range(1, 4):
            params = Params(n, c)
            for d in (2, 3):
                ident = quotients.quotient_identity(params, d)
                for label, w in relator_words(params):
                    count += 1
                    if quotients.quotient_image(w, d) != ident:
                        bad.append(f"n={n} c={c} d={d} {label}")
    cert = quotients.quotient_order(Params(5, 2), 2)
    if cert.order != 480 or cert.order <= cert.n_factorial:
        bad.append(f"order certificate wrong: {cert}")
    if cert.method != "closure" or cert.closure_size != 480:
        bad.append(f"no closure certificate at (5,2,2): {cert}")
    ok = not bad
    details = (
        f"{count} relators die in (Z/d)^c x S_n for d=2,3, n=2..7, c=1..3;"
        f" order at n=5, c=2, d=2 is {cert.order} > 120 by closure"
    )
    if bad:
        details = "; ".join(bad[:5])
    return CheckResult("finite-quotients", ok, details)


def check_trivial_centre(seed: int) -> CheckResult:
    bad: list[str] = []
    for n in range(2, 9):
        for c in range(1, 4):
            dom = raag.dominating_vertices(build_graph(Params(n, c)))
            if dom:
                bad.append(f"n={n} c={c}: dominating {dom}")
    for n in range(3, 7):
        params = Params(n, 1)
        u = word(params, rho(1), sigma(1, 1))
        v = word(params, sigma(1, 1), rho(1))
        if semidirect.are_equal(u, v):
            bad.append(f"n={n}: r1 and s1.1 commute")
    ok = not bad
    details = "no dominating vertices (n=2..8, c=1..3); r1 s1.1 != s1.1 r1 for n=3..6"
    if bad:
        details = "; ".join(bad)
    return CheckResult("trivial-centre", ok, details)


def check_section_identity(seed: int) -> CheckResult:
    bad: list[str] = []
    count = 0
    for n in range(1, 7):
        params = Params(n, 1)
        for p in all_perms(n):
            count += 1
            if virtual_permutation(rho_word(p, params)) != p:
                bad.append(f"n={n} p={p.images}")
    ok = not bad
    details = f"virtual projection of the section is the identity on {count} permutations, n<=6"
    if bad:
        details = "; ".join(bad[:5])
    return CheckResult("section-identity", ok, details)


def check_oracle_coherence(seed: int) -> CheckResult:
    rng = _seeded(seed, "oracle")
    params = Params(4, 1)
    disagreements: list[str] = []
    proven = 0
    for _ in range(500):
        u = random_word(params, rng, 8)
        v = random_word(params, rng, 8)
        result = oracle.bfs_equal(u, v, max_depth=10, max_frontier=300)
        if result.proven:
            proven += 1
            if not semidirect.are_equal(u, v):
                disagreements.append(f"{u} vs {v}")
            if len(oracle.replay(u, v, result.path)) != 0:
                disagreements.append(f"replay failed: {u} vs {v}")
    ok = not disagreements
    details = (
        f"500 random pairs, {proven} proven equal by the raw-presentation prover,"
        " zero disagreements with the normal-form engine"
    )
    if disagreements:
        details = f"disagreements: {disagreements[:3]}"
    return CheckResult("oracle-coherence", ok, details)


CHECKS: list[tuple[str, Callable[[int], CheckResult]]] = [
    ("relator-triviality", check_relator_triviality),
    ("vcd-clique-number", check_clique_number),
    ("howson-p3-classification", check_p3_classification),
    ("lerf-f2xf2-obstruction", check_f2xf2),
    ("free-kernel-small-n", check_small_kernels_free),
    ("conjugation-reindexing", check_conjugation_action),
    ("factorisation-soundness", check_factorisation_soundness),
    ("commutator-identities", check_commutator_identities),
    ("admissibility", check_admissibility),
    ("abelianisation-parity", check_abelianisation),
    ("small-target-rigidity", check_small_target_rigidity),
    ("finite-quotients", check_finite_quotients),
    ("trivial-centre", check_trivial_centre),
    ("section-identity", check_section_identity),
    ("oracle-coherence", check_oracle_coherence),
]


def run_check(claim: str, seed: int = DEFAULT_SEED) -> CheckResult:
    for name, fn in CHECKS:
        if name == claim:
            return fn(seed)
    raise ValueError(f"unknown claim {claim!r}")


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    return [fn(seed) for _, fn in CHECKS]
