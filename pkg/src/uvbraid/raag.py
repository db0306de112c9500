"""The right-angled Artin kernel of the virtual projection.

The kernel of ``virtual_permutation`` is generated by the letters
d<i>.<j>.<t> with i != j: the crossing s<i>.<t> conjugated by a virtual
word taking the pair (i, i+1) to (i, j).  Two such letters commute
exactly when their strand pairs {i, j} are disjoint, regardless of
colour, and these commutations are a complete set of relations.  The
kernel is therefore the right-angled Artin group on the commutation
graph built here: n(n-1)c vertices (i, j, t), edges between
colour-blind disjoint pairs.

Normal forms use the piling construction for trace monoids: letters are
pushed onto one pile per generator, with a blocking marker pushed onto
every non-commuting pile, and adjacent inverses cancel through
commuting material.  Reading the piles back smallest-vertex-first (in
lexicographic (i, j, t) order) yields a canonical fully-cancelled word:
two words are equal in the group iff their normal forms are equal
letter for letter.

The graph also carries the certificates used elsewhere: an exact
branch-and-bound maximum clique (for cohomological dimension), induced
path detection (Howson property), a pair of joined non-edges spanning
F2 x F2 (an obstruction to subgroup separability), and dominating
vertices (central generators).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .words import Params

Vertex = tuple[int, int, int]


@dataclass(frozen=True, slots=True)
class KLetter:
    """Signed kernel generator d<i>.<j>.<t>: source strand, target strand, colour."""

    i: int
    j: int
    t: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            raise ValueError(f"strand indices are 1-based, got ({self.i},{self.j})")
        if self.i == self.j:
            raise ValueError(f"kernel letter needs distinct strands, got ({self.i},{self.j})")
        if self.t < 1:
            raise ValueError(f"colour indices are 1-based, got {self.t}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def vertex(self) -> Vertex:
        return (self.i, self.j, self.t)

    def inverse(self) -> "KLetter":
        return KLetter(self.i, self.j, self.t, -self.sign)

    def token(self) -> str:
        head = "d" if self.sign > 0 else "D"
        return f"{head}{self.i}.{self.j}.{self.t}"


def check_kletter(letter: KLetter, params: Params) -> None:
    if not (1 <= letter.i <= params.n and 1 <= letter.j <= params.n):
        raise ValueError(f"strand pair ({letter.i},{letter.j}) out of range 1..{params.n}")
    if not 1 <= letter.t <= params.c:
        raise ValueError(f"colour {letter.t} out of range 1..{params.c}")


@dataclass(frozen=True)
class KWord:
    """A word in the kernel generators, tied to fixed parameters."""

    params: Params
    letters: tuple[KLetter, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            check_kletter(letter, self.params)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[KLetter]:
        return iter(self.letters)

    def __mul__(self, other: "KWord") -> "KWord":
        if self.params != other.params:
            raise ValueError("cannot concatenate kernel words with different parameters")
        return KWord(self.params, self.letters + other.letters)

    def inverse(self) -> "KWord":
        return KWord(self.params, tuple(l.inverse() for l in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(l.token() for l in self.letters)


def parse_kword(text: str, params: Params) -> KWord:
    letters = []
    for pos, tok in enumerate(text.split(), start=1):
        if tok[:1] not in ("d", "D"):
            raise ValueError(f"token {pos}: expected d<i>.<j>.<t>, got {tok!r}")
        parts = tok[1:].split(".")
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise ValueError(f"token {pos}: expected d<i>.<j>.<t>, got {tok!r}")
        sign = 1 if tok[0] == "d" else -1
        letters.append(KLetter(int(parts[0]), int(parts[1]), int(parts[2]), sign))
    return KWord(params, tuple(letters))


def vertices_commute(u: Vertex, v: Vertex) -> bool:
    """Colour-blind disjointness of the strand pairs."""
    return not ({u[0], u[1]} & {v[0], v[1]})


class CommGraph:
    """Immutable commutation graph on the kernel generators of UV(n, c)."""

    def __init__(self, params: Params):
        if params.n < 2:
            raise ValueError(f"commutation graph needs n >= 2, got n={params.n}")
        self.params = params
        n, c = params.n, params.c
        self.verts: tuple[Vertex, ...] = tuple(
            (i, j, t)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j
            for t in range(1, c + 1)
        )
        # Vertex tuples are generated in lexicographic order already.
        self.index: dict[Vertex, int] = {v: k for k, v in enumerate(self.verts)}
        size = len(self.verts)
        adj = [0] * size
        for a in range(size):
            va = self.verts[a]
            for b in range(a + 1, size):
                if vertices_commute(va, self.verts[b]):
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
        self.adj: tuple[int, ...] = tuple(adj)
        self.noncomm: tuple[tuple[int, ...], ...] = tuple(
            tuple(
                b for b in range(size)
                if b != a and not (adj[a] >> b) & 1
            )
            for a in range(size)
        )

    def __len__(self) -> int:
        return len(self.verts)

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        a, b = self.index[u], self.index[v]
        return bool((self.adj[a] >> b) & 1)

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def degree(self, v: Vertex) -> int:
        return bin(self.adj[self.index[v]]).count("1")


@lru_cache(maxsize=None)
def build_graph(params: Params) -> CommGraph:
    return CommGraph(params)


def normal_form(w: KWord, g: CommGraph) -> KWord:
    """Canonical representative of w in the right-angled Artin group of g.

    Piling pass: push each letter onto its own pile and a 0 marker onto
    every non-commuting pile; a letter meeting its inverse on top of its
    own pile cancels instead, removing the matching markers.  Reading
    pass: repeatedly emit the lexicographically smallest generator whose
    pile front is a real letter.  The result is fully cancelled and
    every run of pairwise-commuting letters appears in vertex order.
    """
    if w.params != g.params:
        raise ValueError("kernel word and graph have different parameters")
    piles: list[deque[int]] = [deque() for _ in g.verts]
    signs_remaining = 0
    order: list[int] = []
    for letter in w:
        vid = g.index.get(letter.vertex)
        if vid is None:
            raise ValueError(f"letter {letter.token()} is not a vertex of the graph")
        pile = piles[vid]
        if pile and pile[-1] == -letter.sign:
            pile.pop()
            for other in g.noncomm[vid]:
                marker = piles[other].pop()
                assert marker == 0
            signs_remaining -= 1
        else:
            pile.append(letter.sign)
            for other in g.noncomm[vid]:
                piles[other].append(0)
            signs_remaining += 1
    out: list[KLetter] = []
    while signs_remaining:
        for vid, pile in enumerate(piles):
            if pile and pile[0] != 0:
                i, j, t = g.verts[vid]
                out.append(KLetter(i, j, t, pile.popleft()))
                for other in g.noncomm[vid]:
                    marker = piles[other].popleft()
                    assert marker == 0
                signs_remaining -= 1
                break
    return KWord(w.params, tuple(out))


def _max_clique_ids(g: CommGraph) -> list[int]:
    """Exact maximum clique via branch and bound with greedy colouring bounds."""
    adj = g.adj
    best: list[int] = []
    stack: list[int] = []

    def expand(candidates: int) -> None:
        nonlocal best
        order: list[int] = []
        bounds: list[int] = []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~adj[v] & ~bit
                uncoloured &= ~bit
                order.append(v)
                bounds.append(colour)
        remaining = candidates
        for idx in range(len(order) - 1, -1, -1):
            if len(stack) + bounds[idx] <= len(best):
                return
            v = order[idx]
            stack.append(v)
            rest = remaining & adj[v]
            if rest:
                expand(rest)
            elif len(stack) > len(best):
                best = stack.copy()
            stack.pop()
            remaining &= ~(1 << v)

    expand((1 << len(g.verts)) - 1)
    return sorted(best)


def max_clique(g: CommGraph) -> tuple[Vertex, ...]:
    return tuple(g.verts[i] for i in _max_clique_ids(g))


def clique_number(g: CommGraph) -> int:
    return len(_max_clique_ids(g))


P3Witness = tuple[Vertex, Vertex, Vertex]


def is_p3_free(g: CommGraph) -> tuple[bool, Optional[P3Witness]]:
    """Whether no induced path on three vertices exists.

    A witness (v1, v2, v3) has v2 adjacent to both ends, which are not
    adjacent to each other.
    """
    size = len(g.verts)
    for mid in range(size):
        nb_mask = g.adj[mid]
        nbs = []
        m = nb_mask
        while m:
            v = (m & -m).bit_length() - 1
            nbs.append(v)
            m &= m - 1
        for x in range(len(nbs)):
            for y in range(x + 1, len(nbs)):
                a, b = nbs[x], nbs[y]
                if not (g.adj[a] >> b) & 1:
                    return False, (g.verts[a], g.verts[mid], g.verts[b])
    return True, None


F2F2Witness = tuple[Vertex, Vertex, Vertex, Vertex]


def f2xf2_witness(g: CommGraph) -> Optional[F2F2Witness]:
    """Two non-adjacent pairs, fully joined across, spanning F2 x F2.

    Exists iff n >= 4: take the opposite-direction letters on strands
    (1,2) and on (3,4) in the first colour.
    """
    if g.params.n < 4:
        return None
    quad: F2F2Witness = ((1, 2, 1), (2, 1, 1), (3, 4, 1), (4, 3, 1))
    x1, x2, y1, y2 = quad
    ok = (
        not g.adjacent(x1, x2)
        and not g.adjacent(y1, y2)
        and g.adjacent(x1, y1)
        and g.adjacent(x1, y2)
        and g.adjacent(x2, y1)
        and g.adjacent(x2, y2)
    )
    assert ok, "witness adjacency pattern failed"
    return quad


def dominating_vertices(g: CommGraph) -> tuple[Vertex, ...]:
    """Vertices adjacent to every other vertex (always empty here)."""
    size = len(g.verts)
    full = (1 << size) - 1
    return tuple(
        g.verts[v] for v in range(size) if g.adj[v] == full & ~(1 << v)
    )


def to_dot(g: CommGraph) -> str:
    """Deterministic DOT rendering with vertex labels d<i>.<j>.<t>."""
    lines = ["graph commutation {"]
    names = [f"d{i}.{j}.{t}" for (i, j, t) in g.verts]
    for name in names:
        lines.append(f'  "{name}";')
    for a in range(len(g.verts)):
        m = g.adj[a] >> (a + 1) << (a + 1)
        while m:
            b = (m & -m).bit_length() - 1
            lines.append(f'  "{names[a]}" -- "{names[b]}";')
            m &= m - 1
    lines.append("}")
    return "\n".join(lines) + "\n"
