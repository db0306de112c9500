"""Words over the generators of the universal virtual braid group UV(n, c).

The group on n strands with c crossing colours is generated by virtual
letters r1 .. r(n-1) and, for each colour 1 <= t <= c, crossing letters
s<i>.<t>.  The defining relations are

    braid    r<i> r<i+1> r<i>      =  r<i+1> r<i> r<i+1>
    comm     r<i> r<j>             =  r<j> r<i>              |i-j| >= 2
    invol    r<i> r<i>             =  1
    comm     s<i>.<t> s<j>.<l>     =  s<j>.<l> s<i>.<t>      |i-j| >= 2
    comm     s<i>.<t> r<j>         =  r<j> s<i>.<t>          |i-j| >= 2
    slide    r<i> r<i+1> s<i>.<t>  =  s<i+1>.<t> r<i> r<i+1>

Words are whitespace-separated token strings: ``r<i>`` for a virtual
letter, ``s<i>.<t>`` for a crossing, ``S<i>.<t>`` for its inverse.
Virtual letters are involutions so they carry no sign; ``R<i>`` is
accepted on input and normalised to ``r<i>``.  UV(1, c) is trivial by
convention, the only valid word there is the empty one.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterator

RHO = "r"
SIGMA = "s"


@dataclass(frozen=True, slots=True)
class Params:
    """Strand count n and number of crossing colours c."""

    n: int
    c: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got n={self.n}")
        if self.c < 1:
            raise ValueError(f"colour count must be >= 1, got c={self.c}")


@dataclass(frozen=True, slots=True)
class Letter:
    """A single generator or inverse generator.

    Virtual letters have kind ``"r"``, index i, and are stored with
    t=0, sign=+1 (they are involutions, so the sign is meaningless).
    Crossing letters have kind ``"s"``, index i, colour t and sign +-1.
    """

    kind: str
    i: int
    t: int = 0
    sign: int = 1

    def __post_init__(self) -> None:
        if self.kind not in (RHO, SIGMA):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.kind == RHO and (self.t != 0 or self.sign != 1):
            raise ValueError("virtual letters carry no colour or sign")
        if self.kind == SIGMA and self.t < 1:
            raise ValueError(f"crossing colour must be >= 1, got {self.t}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def is_rho(self) -> bool:
        return self.kind == RHO

    def inverse(self) -> "Letter":
        if self.kind == RHO:
            return self
        return Letter(SIGMA, self.i, self.t, -self.sign)

    def token(self) -> str:
        if self.kind == RHO:
            return f"r{self.i}"
        head = "s" if self.sign > 0 else "S"
        return f"{head}{self.i}.{self.t}"


def rho(i: int) -> Letter:
    return Letter(RHO, i)


def sigma(i: int, t: int, sign: int = 1) -> Letter:
    return Letter(SIGMA, i, t, sign)


def check_letter(letter: Letter, params: Params) -> None:
    """Raise ValueError unless the letter is valid for UV(n, c)."""
    if not 1 <= letter.i <= params.n - 1:
        raise ValueError(
            f"letter index {letter.i} out of range 1..{params.n - 1} for n={params.n}"
        )
    if letter.kind == SIGMA and not 1 <= letter.t <= params.c:
        raise ValueError(
            f"crossing colour {letter.t} out of range 1..{params.c} for c={params.c}"
        )


@dataclass(frozen=True)
class Word:
    """An immutable word in the generators, tied to fixed parameters."""

    params: Params
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            check_letter(letter, self.params)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.params != other.params:
            raise ValueError(
                f"cannot concatenate words with parameters {self.params} and {other.params}"
            )
        return Word(self.params, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.params, tuple(l.inverse() for l in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(l.token() for l in self.letters)


def word(params: Params, *letters: Letter) -> Word:
    return Word(params, tuple(letters))


class ParseError(ValueError):
    """Malformed token; ``position`` is the 1-based token index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


def _parse_token(tok: str, position: int, params: Params) -> Letter:
    if tok[0] in ("r", "R"):
        body = tok[1:]
        if not body.isdigit():
            raise ParseError(f"expected r<i> but got {tok!r}", position)
        letter = rho(int(body))
    elif tok[0] in ("s", "S"):
        body = tok[1:]
        parts = body.split(".")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected {tok[0]}<i>.<t> but got {tok!r}", position)
        sign = 1 if tok[0] == "s" else -1
        try:
            letter = sigma(int(parts[0]), int(parts[1]), sign)
        except ValueError as exc:
            raise ParseError(str(exc), position) from None
    else:
        raise ParseError(f"unrecognised token {tok!r}", position)
    try:
        check_letter(letter, params)
    except ValueError as exc:
        raise ParseError(str(exc), position) from None
    return letter


def parse_word(text: str, params: Params) -> Word:
    """Parse a whitespace-separated token string into a Word.

    >>> str(parse_word("r1 s2.1 S1.1", Params(3, 1)))
    'r1 s2.1 S1.1'
    >>> parse_word("R2", Params(3, 1)).letters[0].token()
    'r2'
    """
    letters = [
        _parse_token(tok, pos, params)
        for pos, tok in enumerate(text.split(), start=1)
    ]
    return Word(params, tuple(letters))


def _cancels(a: Letter, b: Letter) -> bool:
    if a.kind != b.kind or a.i != b.i:
        return False
    if a.kind == RHO:
        return True
    return a.t == b.t and a.sign == -b.sign


def free_reduce_letters(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for letter in letters:
        if out and _cancels(out[-1], letter):
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs (r<i> r<i>, s S, S s) until none remain.

    >>> str(free_reduce(parse_word("r1 r1 s1.1 S1.1", Params(2, 1))))
    ''
    """
    return Word(w.params, free_reduce_letters(w.letters))


Relation = tuple[str, Word, Word]


def defining_relations(params: Params) -> list[Relation]:
    """All defining relation instances of UV(n, c) as (label, lhs, rhs).

    The order is fixed: virtual braid relations, far virtual
    commutations, involutions, far crossing commutations, far
    crossing/virtual commutations, then the slide relations.
    """
    n, c = params.n, params.c
    rels: list[Relation] = []
    for i in range(1, n - 1):
        rels.append((
            f"braid(r{i},r{i + 1})",
            word(params, rho(i), rho(i + 1), rho(i)),
            word(params, rho(i + 1), rho(i), rho(i + 1)),
        ))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            rels.append((
                f"comm(r{i},r{j})",
                word(params, rho(i), rho(j)),
                word(params, rho(j), rho(i)),
            ))
    for i in range(1, n):
        rels.append((f"invol(r{i})", word(params, rho(i), rho(i)), word(params)))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            for t in range(1, c + 1):
                for l in range(1, c + 1):
                    rels.append((
                        f"comm(s{i}.{t},s{j}.{l})",
                        word(params, sigma(i, t), sigma(j, l)),
                        word(params, sigma(j, l), sigma(i, t)),
                    ))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) < 2:
                continue
            for t in range(1, c + 1):
                rels.append((
                    f"comm(s{i}.{t},r{j})",
                    word(params, sigma(i, t), rho(j)),
                    word(params, rho(j), sigma(i, t)),
                ))
    for i in range(1, n - 1):
        for t in range(1, c + 1):
            rels.append((
                f"slide(s{i}.{t})",
                word(params, rho(i), rho(i + 1), sigma(i, t)),
                word(params, sigma(i + 1, t), rho(i), rho(i + 1)),
            ))
    return rels


def relator_words(params: Params) -> list[tuple[str, Word]]:
    """Each defining relation as a single relator lhs * rhs^-1."""
    return [(label, lhs * rhs.inverse()) for label, lhs, rhs in defining_relations(params)]


def alphabet(params: Params) -> list[Letter]:
    """Every letter of UV(n, c) including crossing inverses, in a fixed order."""
    letters: list[Letter] = [rho(i) for i in range(1, params.n)]
    for i in range(1, params.n):
        for t in range(1, params.c + 1):
            letters.append(sigma(i, t, 1))
            letters.append(sigma(i, t, -1))
    return letters


def random_word(params: Params, rng: Random, max_len: int) -> Word:
    pool = alphabet(params)
    if not pool:
        return Word(params)
    length = rng.randint(0, max_len)
    return Word(params, tuple(rng.choice(pool) for _ in range(length)))
