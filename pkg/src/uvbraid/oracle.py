"""Independent equality prover over the raw group presentation.

``bfs_equal`` decides u = v by breadth-first search from the free
reduction of u * v^-1, seeking the empty word.  Each search step
applies one directed rewrite at one position and then free-reduces:
either side of a defining relation replaced by the other (including
the sign-flipped forms of the slide relation), insertion or deletion
of a whole relator, or insertion of a cancelling pair r<i> r<i> or
s S / S s.  Every rule preserves the
group element, so a found path is a proof of equality; the result is
three-valued and never claims inequality.  Exhausting the depth or
overflowing the frontier budget returns Unknown.

Proof paths are replayable: ``replay`` applies the recorded
(rule, position) steps to u * v^-1 and must end at the empty word.
This module shares nothing with the normal-form engine except the
letter type, which is what makes it a useful cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .words import Letter, Params, Word, free_reduce_letters, relator_words, rho, sigma

PROVEN_EQUAL = "proven_equal"
UNKNOWN = "unknown"

Rule = tuple[tuple[Letter, ...], tuple[Letter, ...]]
Step = tuple[str, int]


@dataclass(frozen=True)
class ProofResult:
    verdict: str
    path: Optional[tuple[Step, ...]]  # set iff proven_equal
    explored: int

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN_EQUAL


@lru_cache(maxsize=None)
def rewrite_rules(params: Params) -> dict[str, Rule]:
    """All directed rewrites for UV(n, c), keyed by a stable label."""
    n, c = params.n, params.c
    rules: dict[str, Rule] = {}

    def both_ways(label: str, lhs: tuple[Letter, ...], rhs: tuple[Letter, ...]) -> None:
        rules[f"{label}:fwd"] = (lhs, rhs)
        rules[f"{label}:rev"] = (rhs, lhs)

    for i in range(1, n - 1):
        both_ways(
            f"braid(r{i})",
            (rho(i), rho(i + 1), rho(i)),
            (rho(i + 1), rho(i), rho(i + 1)),
        )
    commuting: list[tuple[Letter, Letter]] = []
    for i in range(1, n):
        for j in range(i + 2, n):
            commuting.append((rho(i), rho(j)))
            for t in range(1, c + 1):
                for s_i in (1, -1):
                    commuting.append((sigma(i, t, s_i), rho(j)))
                    commuting.append((sigma(j, t, s_i), rho(i)))
                    for l in range(1, c + 1):
                        for s_j in (1, -1):
                            commuting.append((sigma(i, t, s_i), sigma(j, l, s_j)))
    for x, y in commuting:
        rules[f"comm({x.token()},{y.token()})"] = ((x, y), (y, x))
        rules[f"comm({y.token()},{x.token()})"] = ((y, x), (x, y))
    for i in range(1, n):
        rules[f"ins(r{i})"] = ((), (rho(i), rho(i)))
    for i in range(1, n):
        for t in range(1, c + 1):
            rules[f"ins(s{i}.{t})"] = ((), (sigma(i, t, 1), sigma(i, t, -1)))
            rules[f"ins(S{i}.{t})"] = ((), (sigma(i, t, -1), sigma(i, t, 1)))
    for i in range(1, n - 1):
        for t in range(1, c + 1):
            both_ways(
                f"slide(s{i}.{t})",
                (rho(i), rho(i + 1), sigma(i, t, 1)),
                (sigma(i + 1, t, 1), rho(i), rho(i + 1)),
            )
            both_ways(
                f"slide(S{i}.{t})",
                (sigma(i, t, -1), rho(i + 1), rho(i)),
                (rho(i + 1), rho(i), sigma(i + 1, t, -1)),
            )
    for label, relator in relator_words(params):
        letters = free_reduce_letters(relator.letters)
        if not letters:
            continue  # the involutions are already absorbed by free reduction
        rules[f"rel({label}):ins"] = ((), letters)
        rules[f"rel({label}):del"] = (letters, ())
        reversed_letters = free_reduce_letters(relator.inverse().letters)
        if reversed_letters != letters:
            rules[f"rel({label}):rins"] = ((), reversed_letters)
            rules[f"rel({label}):rdel"] = (reversed_letters, ())
    return rules


def apply_rule(letters: tuple[Letter, ...], rule: Rule, pos: int) -> tuple[Letter, ...]:
    pattern, replacement = rule
    if not 0 <= pos <= len(letters) - len(pattern):
        raise ValueError(f"position {pos} out of range")
    if letters[pos : pos + len(pattern)] != pattern:
        raise ValueError(f"pattern does not match at position {pos}")
    return letters[:pos] + replacement + letters[pos + len(pattern) :]


def _successors(
    letters: tuple[Letter, ...], rules: dict[str, Rule]
) -> Iterator[tuple[str, int, tuple[Letter, ...]]]:
    for label, (pattern, replacement) in rules.items():
        if pattern:
            span = len(pattern)
            for pos in range(len(letters) - span + 1):
                if letters[pos : pos + span] == pattern:
                    out = free_reduce_letters(
                        letters[:pos] + replacement + letters[pos + span :]
                    )
                    yield label, pos, out
        else:
            for pos in range(len(letters) + 1):
                out = free_reduce_letters(letters[:pos] + replacement + letters[pos:])
                yield label, pos, out


def bfs_equal(
    u: Word, v: Word, *, max_depth: int = 8, max_frontier: int = 200_000
) -> ProofResult:
    """Three-valued equality: PROVEN_EQUAL with a replayable path, or UNKNOWN."""
    if u.params != v.params:
        raise ValueError(f"cannot compare words with parameters {u.params} and {v.params}")
    rules = rewrite_rules(u.params)
    start = free_reduce_letters(u.letters + v.inverse().letters)
    if not start:
        return ProofResult(PROVEN_EQUAL, (), 1)
    seen: set[tuple[Letter, ...]] = {start}
    parent: dict[tuple[Letter, ...], tuple[tuple[Letter, ...], str, int]] = {}
    frontier: list[tuple[Letter, ...]] = [start]
    for _ in range(max_depth):
        nxt: list[tuple[Letter, ...]] = []
        for node in frontier:
            for label, pos, out in _successors(node, rules):
                if out in seen:
                    continue
                seen.add(out)
                parent[out] = (node, label, pos)
                if not out:
                    path: list[Step] = []
                    cur: tuple[Letter, ...] = out
                    while cur != start:
                        prev, lab, p = parent[cur]
                        path.append((lab, p))
                        cur = prev
                    path.reverse()
                    return ProofResult(PROVEN_EQUAL, tuple(path), len(seen))
                nxt.append(out)
                if len(nxt) > max_frontier:
                    return ProofResult(UNKNOWN, None, len(seen))
        if not nxt:
            break
        frontier = nxt
    return ProofResult(UNKNOWN, None, len(seen))


def replay(u: Word, v: Word, path: tuple[Step, ...]) -> Word:
    """Apply a proof path to free_reduce(u * v^-1), free-reducing after
    each step; a valid equality proof ends at the empty word."""
    rules = rewrite_rules(u.params)
    letters = free_reduce_letters(u.letters + v.inverse().letters)
    for label, pos in path:
        letters = free_reduce_letters(apply_rule(letters, rules[label], pos))
    return Word(u.params, letters)
