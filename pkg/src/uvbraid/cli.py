"""Command-line interface.

Every subcommand prints one JSON document to stdout whose first key is
``"schema": 1`` — except ``graph dot``, which prints DOT text.  Output
is deterministic: identical invocations produce identical bytes.

Exit codes: 0 on success, 2 on domain errors (bad parameters, malformed
words, unreadable input) with a message on stderr, 64 for an unknown
subcommand, and 1 when ``verify-paper`` finds a failing claim.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import homs, oracle, quotients, raag, semidirect, verify
from .perms import strand_permutation, virtual_permutation
from .raag import CommGraph, build_graph
from .words import Params, Word, parse_word

COMMANDS = (
    "nf",
    "eq",
    "trivial",
    "pure",
    "perm",
    "graph",
    "vcd",
    "howson",
    "lerf-witness",
    "center-witness",
    "hom",
    "ab",
    "chi",
    "quot",
    "oracle",
    "verify-paper",
)

MODES = {
    "graph": ("dot", "stats"),
    "hom": ("check", "phi", "enumerate"),
    "quot": ("eval", "order"),
    "oracle": ("eq",),
}


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _parse(args: argparse.Namespace, text: str) -> tuple[Params, Word]:
    params = Params(args.n, args.c)
    return params, parse_word(text, params)


def _nf_dict(w: Word) -> dict:
    nf = semidirect.to_normal_form(w)
    return {
        "delta_nf": [letter.token() for letter in nf.kword.letters],
        "perm": list(nf.perm.images),
        "cycles": nf.perm.cycle_string(),
    }


def _maybe_graph(params: Params) -> CommGraph | None:
    if params.n == 1:
        return None
    return build_graph(params)


def _cmd_nf(args: argparse.Namespace) -> int:
    _, w = _parse(args, args.word)
    _emit({"schema": 1, **_nf_dict(w)})
    return 0


def _cmd_eq(args: argparse.Namespace) -> int:
    params, u = _parse(args, args.left)
    v = parse_word(args.right, params)
    _emit(
        {
            "schema": 1,
            "equal": semidirect.are_equal(u, v),
            "left": _nf_dict(u),
            "right": _nf_dict(v),
        }
    )
    return 0


def _cmd_trivial(args: argparse.Namespace) -> int:
    _, w = _parse(args, args.word)
    _emit({"schema": 1, "trivial": semidirect.is_trivial(w), **_nf_dict(w)})
    return 0


def _cmd_pure(args: argparse.Namespace) -> int:
    _, w = _parse(args, args.word)
    p = strand_permutation(w)
    _emit(
        {
            "schema": 1,
            "pure": semidirect.is_pure(w),
            "strand_perm": list(p.images),
            "strand_cycles": p.cycle_string(),
        }
    )
    return 0


def _cmd_perm(args: argparse.Namespace) -> int:
    _, w = _parse(args, args.word)
    sp = strand_permutation(w)
    vp = virtual_permutation(w)
    _emit(
        {
            "schema": 1,
            "strand_perm": list(sp.images),
            "strand_cycles": sp.cycle_string(),
            "virtual_perm": list(vp.images),
            "virtual_cycles": vp.cycle_string(),
        }
    )
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    g = _maybe_graph(params)
    if args.mode == "dot":
        if g is None:
            sys.stdout.write("graph commutation {\n}\n")
        else:
            sys.stdout.write(raag.to_dot(g))
        return 0
    degrees = [g.degree(v) for v in g.verts] if g is not None else []
    _emit(
        {
            "schema": 1,
            "vertices": 0 if g is None else len(g.verts),
            "edges": 0 if g is None else g.edge_count(),
            "min_degree": min(degrees) if degrees else 0,
            "max_degree": max(degrees) if degrees else 0,
        }
    )
    return 0


def _cmd_vcd(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    g = _maybe_graph(params)
    k = 0 if g is None else raag.clique_number(g)
    _emit({"schema": 1, "clique_number": k, "vcd": k})
    return 0


def _cmd_howson(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    g = _maybe_graph(params)
    if g is None:
        free, witness = True, None
    else:
        free, witness = raag.is_p3_free(g)
    _emit(
        {
            "schema": 1,
            "howson": free,
            "p3_witness": None if witness is None else [list(v) for v in witness],
        }
    )
    return 0


def _cmd_lerf_witness(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    g = _maybe_graph(params)
    witness = None if g is None else raag.f2xf2_witness(g)
    _emit(
        {
            "schema": 1,
            "lerf": witness is None,
            "f2xf2_witness": None if witness is None else [list(v) for v in witness],
        }
    )
    return 0


def _cmd_center_witness(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    g = _maybe_graph(params)
    dom = [] if g is None else [list(v) for v in raag.dominating_vertices(g)]
    if params.n >= 2:
        u = parse_word("r1 s1.1", params)
        v = parse_word("s1.1 r1", params)
        pair = ["r1 s1.1", "s1.1 r1"]
        commute = semidirect.are_equal(u, v)
    else:
        pair = None
        commute = None
    _emit(
        {
            "schema": 1,
            "dominating_vertices": dom,
            "noncommuting_pair": pair,
            "commute": commute,
        }
    )
    return 0


def _cmd_hom_check(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    if args.file == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read {args.file}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    h = homs.HomSpec.from_json_dict(data, params)
    ok, label = homs.verify_homspec(h, params)
    _emit(
        {
            "schema": 1,
            "homomorphism": ok,
            "failed_relation": label,
            "abelian_image": homs.has_abelian_image(h) if ok else None,
        }
    )
    return 0


def _cmd_hom_phi(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    try:
        bits = tuple(int(piece) for piece in args.eps.split(","))
    except ValueError as exc:
        raise ValueError(f"--eps must be comma-separated bits: {args.eps!r}") from exc
    h = homs.hom_from_bits(bits, params)
    payload = {
        "schema": 1,
        "bits": list(bits),
        "admissible": homs.is_admissible(bits, params) if params.n >= 3 else None,
        "hom": h.to_json_dict(),
    }
    if args.word is not None:
        image = h.evaluate(parse_word(args.word, params))
        payload["image"] = list(image.images)
        payload["image_cycles"] = image.cycle_string()
    _emit(payload)
    return 0


def _cmd_hom_enumerate(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    budget = homs.SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    try:
        found = homs.enumerate_homs(params, args.m, budget)
    except homs.BudgetExceededError as exc:
        sys.stderr.write(
            f"search budget exceeded with {len(exc.partial)} homomorphisms found\n"
        )
        return 2
    _emit(
        {
            "schema": 1,
            "m": args.m,
            "count": len(found),
            "homs": [h.to_json_dict() for h in found],
        }
    )
    return 0


def _cmd_ab(args: argparse.Namespace) -> int:
    _, w = _parse(args, args.word)
    image = homs.abelianize(w)
    _emit(
        {
            "schema": 1,
            "sigma_exponents": list(image.sigma_exponents),
            "rho_parity": image.rho_parity,
        }
    )
    return 0


def _cmd_chi(args: argparse.Namespace) -> int:
    _, w = _parse(args, args.word)
    _emit({"schema": 1, "t": args.t, "parity": homs.color_parity(args.t, w)})
    return 0


def _cmd_quot_eval(args: argparse.Namespace) -> int:
    _, w = _parse(args, args.word)
    elem = quotients.quotient_image(w, args.d)
    _emit(
        {
            "schema": 1,
            "d": args.d,
            "vec": list(elem.vec),
            "perm": list(elem.perm.images),
            "cycles": elem.perm.cycle_string(),
        }
    )
    return 0


def _cmd_quot_order(args: argparse.Namespace) -> int:
    params = Params(args.n, args.c)
    cert = quotients.quotient_order(params, args.d)
    _emit(
        {
            "schema": 1,
            "d": args.d,
            "order": cert.order,
            "n_factorial": cert.n_factorial,
            "method": cert.method,
            "closure_size": cert.closure_size,
        }
    )
    return 0


def _cmd_oracle_eq(args: argparse.Namespace) -> int:
    params, u = _parse(args, args.left)
    v = parse_word(args.right, params)
    result = oracle.bfs_equal(u, v, max_depth=args.depth, max_frontier=args.width)
    _emit(
        {
            "schema": 1,
            "verdict": result.verdict,
            "path": None if result.path is None else [list(step) for step in result.path],
            "explored": result.explored,
        }
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_all(args.seed)
    ok = all(r.ok for r in results)
    _emit(
        {
            "schema": 1,
            "seed": args.seed,
            "ok": ok,
            "results": [
                {"claim": r.claim, "ok": r.ok, "details": r.details} for r in results
            ],
        }
    )
    return 0 if ok else 1


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="number of strands")
    p.add_argument("--c", type=int, default=1, help="number of crossing types")


def _add_word(p: argparse.ArgumentParser) -> None:
    p.add_argument("--word", required=True, help="word over r<i> / s<i>.<t> tokens")


def _add_pair(p: argparse.ArgumentParser) -> None:
    p.add_argument("left", help="first word")
    p.add_argument("right", help="second word")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uvbraid", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    for name, needs_word, help_text in (
        ("nf", True, "canonical normal form of a word"),
        ("trivial", True, "test whether a word is the identity"),
        ("pure", True, "test whether a word has trivial strand permutation"),
        ("perm", True, "strand and virtual permutations of a word"),
        ("ab", True, "image in the abelianisation"),
        ("eq", False, "decide equality of two words"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_params(p)
        if needs_word:
            _add_word(p)
        else:
            _add_pair(p)

    p = sub.add_parser("graph", help="kernel commutation graph")
    p.add_argument("mode", choices=["dot", "stats"])
    _add_params(p)

    for name, help_text in (
        ("vcd", "clique number of the commutation graph"),
        ("howson", "induced-path-freeness classification"),
        ("lerf-witness", "complete-bipartite obstruction witness"),
        ("center-witness", "dominating vertices and a non-commuting pair"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_params(p)

    p = sub.add_parser("hom", help="homomorphisms to symmetric groups")
    hom_sub = p.add_subparsers(dest="mode")
    ph = hom_sub.add_parser("check", help="verify a homomorphism given as JSON")
    _add_params(ph)
    ph.add_argument("--file", default="-", help="JSON file, or - for stdin")
    ph = hom_sub.add_parser("phi", help="the switch-family homomorphism for a bit tuple")
    _add_params(ph)
    ph.add_argument("--eps", required=True, help="comma-separated bits, length c+1")
    ph.add_argument("--word", help="optional word to evaluate")
    ph = hom_sub.add_parser("enumerate", help="all homomorphisms to S_m")
    _add_params(ph)
    ph.add_argument("--m", type=int, required=True, help="target degree")
    ph.add_argument("--max-nodes", type=int, default=2_000_000)
    ph.add_argument("--max-seconds", type=float, default=300.0)

    p = sub.add_parser("chi", help="parity of one crossing colour")
    _add_params(p)
    p.add_argument("--t", type=int, required=True, help="colour index")
    _add_word(p)

    p = sub.add_parser("quot", help="finite wreath-style quotients")
    quot_sub = p.add_subparsers(dest="mode")
    pq = quot_sub.add_parser("eval", help="image of a word in the quotient")
    _add_params(pq)
    pq.add_argument("--d", type=int, required=True, help="cyclic modulus (0 for integers)")
    _add_word(pq)
    pq = quot_sub.add_parser("order", help="order of the quotient with certificate")
    _add_params(pq)
    pq.add_argument("--d", type=int, required=True, help="cyclic modulus")

    p = sub.add_parser("oracle", help="presentation-level rewriting prover")
    oracle_sub = p.add_subparsers(dest="mode")
    po = oracle_sub.add_parser("eq", help="search for a rewriting proof of equality")
    _add_params(po)
    po.add_argument("--depth", type=int, default=8, help="maximum proof length")
    po.add_argument("--width", type=int, default=200_000, help="frontier size cap")
    _add_pair(po)

    p = sub.add_parser("verify-paper", help="run the built-in claim verification suite")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)

    return parser


_HANDLERS = {
    "nf": _cmd_nf,
    "eq": _cmd_eq,
    "trivial": _cmd_trivial,
    "pure": _cmd_pure,
    "perm": _cmd_perm,
    ("graph", "dot"): _cmd_graph,
    ("graph", "stats"): _cmd_graph,
    "vcd": _cmd_vcd,
    "howson": _cmd_howson,
    "lerf-witness": _cmd_lerf_witness,
    "center-witness": _cmd_center_witness,
    ("hom", "check"): _cmd_hom_check,
    ("hom", "phi"): _cmd_hom_phi,
    ("hom", "enumerate"): _cmd_hom_enumerate,
    "ab": _cmd_ab,
    "chi": _cmd_chi,
    ("quot", "eval"): _cmd_quot_eval,
    ("quot", "order"): _cmd_quot_order,
    ("oracle", "eq"): _cmd_oracle_eq,
    "verify-paper": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if not argv or argv[0] in ("-h", "--help"):
        _build_parser().print_help()
        return 0 if argv else 64
    command = argv[0]
    if command not in COMMANDS:
        sys.stderr.write(f"unknown command: {command}\n")
        return 64
    if command in MODES:
        mode = next((tok for tok in argv[1:] if tok in MODES[command]), None)
        if mode is None:
            sys.stderr.write(
                f"unknown mode for {command}: expected one of {', '.join(MODES[command])}\n"
            )
            return 64
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    key = (command, args.mode) if command in MODES else command
    try:
        return _HANDLERS[key](args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
