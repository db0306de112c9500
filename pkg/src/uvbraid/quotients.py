"""Finite quotients (Z/d)^c x S_n of UV(n, c).

``quotient_image`` sends r<i> to (0, (i i+1)) and s<i>.<t>^e to
(e * unit_t, (i i+1)); the vector part is the per-colour signed
crossing count mod d, the permutation part is the strand permutation.
With d = 0 the vector part is taken over the integers, recovering the
crossing exponent sums of the abelianisation.

For d >= 2 the image is the whole group of order d^c * n!, strictly
larger than n!, so UV(n, c) has finite quotients bigger than the
symmetric group.  ``quotient_order`` certifies surjectivity either by
closing the generator images under multiplication (small groups) or by
exhibiting the vector units and virtual transpositions inside the
image (any size).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .perms import Perm, adjacent, compose, identity
from .words import SIGMA, Letter, Params, Word, alphabet


@dataclass(frozen=True, slots=True)
class QuotElem:
    """Element of (Z/d)^c x S_n; modulus 0 means integer vector entries."""

    vec: tuple[int, ...]
    perm: Perm
    modulus: int

    def __post_init__(self) -> None:
        _check_modulus(self.modulus)


def _check_modulus(d: int) -> None:
    if d != 0 and d < 2:
        raise ValueError(f"modulus must be 0 (integers) or >= 2, got {d}")


def quotient_identity(params: Params, d: int) -> QuotElem:
    _check_modulus(d)
    return QuotElem((0,) * params.c, identity(params.n), d)


def qmul(a: QuotElem, b: QuotElem) -> QuotElem:
    if a.modulus != b.modulus or len(a.vec) != len(b.vec):
        raise ValueError("cannot multiply elements of different quotients")
    vec = tuple(x + y for x, y in zip(a.vec, b.vec))
    if a.modulus:
        vec = tuple(x % a.modulus for x in vec)
    return QuotElem(vec, compose(a.perm, b.perm), a.modulus)


def qinv(a: QuotElem) -> QuotElem:
    vec = tuple(-x for x in a.vec)
    if a.modulus:
        vec = tuple(x % a.modulus for x in vec)
    return QuotElem(vec, a.perm.inverse(), a.modulus)


def _letter_image(letter: Letter, params: Params, d: int) -> QuotElem:
    vec = [0] * params.c
    if letter.kind == SIGMA:
        vec[letter.t - 1] = letter.sign % d if d else letter.sign
    return QuotElem(tuple(vec), adjacent(params.n, letter.i), d)


def quotient_image(w: Word, d: int) -> QuotElem:
    _check_modulus(d)
    out = quotient_identity(w.params, d)
    for letter in w:
        out = qmul(out, _letter_image(letter, w.params, d))
    return out


@dataclass(frozen=True)
class OrderCertificate:
    order: int
    n_factorial: int
    method: str  # "closure" or "units"
    closure_size: Optional[int]


def quotient_order(params: Params, d: int, closure_limit: int = 20_000) -> OrderCertificate:
    """Order d^c * n! of the quotient, with a surjectivity certificate.

    Up to ``closure_limit`` elements the certificate is the closure of
    the generator images under multiplication (a finite submonoid is a
    subgroup, so reaching every element proves surjectivity).  Beyond
    that, the units (unit_t, 1) = image(s<1>.<t>) * image(r1)^-1 and
    the transpositions (0, (i i+1)) = image(r<i>) are checked to lie in
    the image; together they generate the whole group.
    """
    if d < 2:
        raise ValueError(f"finite quotients need d >= 2, got {d}")
    if params.n < 2:
        raise ValueError(f"quotient order needs n >= 2, got n={params.n}")
    n_fact = 1
    for k in range(2, params.n + 1):
        n_fact *= k
    order = d**params.c * n_fact
    gens = [
        _letter_image(letter, params, d)
        for letter in alphabet(params)
    ]
    if order <= closure_limit:
        frontier = [quotient_identity(params, d)]
        seen = set(frontier)
        while frontier:
            nxt = []
            for elem in frontier:
                for g in gens:
                    prod = qmul(elem, g)
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
            frontier = nxt
        if len(seen) != order:
            raise RuntimeError(
                f"closure reached {len(seen)} elements, expected {order}"
            )
        return OrderCertificate(order, n_fact, "closure", len(seen))
    from .words import rho, sigma, word

    for t in range(1, params.c + 1):
        unit = qmul(
            quotient_image(word(params, sigma(1, t)), d),
            qinv(quotient_image(word(params, rho(1)), d)),
        )
        expected_vec = tuple(1 if k == t - 1 else 0 for k in range(params.c))
        if unit.vec != expected_vec or not unit.perm.is_identity:
            raise RuntimeError(f"unit for colour {t} not realised in the image")
    for i in range(1, params.n):
        img = quotient_image(word(params, rho(i)), d)
        if any(img.vec) or img.perm != adjacent(params.n, i):
            raise RuntimeError(f"virtual transposition r{i} not realised in the image")
    return OrderCertificate(order, n_fact, "units", None)
