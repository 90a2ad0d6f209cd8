"""Command-line front end.

Every subcommand prints one JSON object on standard output.  Its ``status``
field matches the exit code: ``yes`` (0), ``no`` (1), ``error`` (2, bad
input) and ``internal`` (3, a certificate failed its own re-check).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import io
from .biarc import biarc_from_min_ordering, is_consistent, ordering_generated, realize_biarc
from .exceptions import BudgetExceededError, ConstructionError, GraphInputError
from .graph import Digraph, as_bipartite_digraph, complement
from .homomorphism import is_homomorphism, solve_list_hom
from .interval_models import (
    cott_from_min_ordering,
    cott_to_signed,
    cott_to_threshold_tolerance,
    interval_model_from_min_ordering,
    min_ordering_from_signed,
    realize_cott,
    realize_intervals,
    realize_signed,
    realize_tt,
    signed_from_min_ordering,
    signed_to_cott,
)
from .matrix import (
    PATTERNS,
    TRANSFORMS,
    augment,
    find_pattern,
    independent_KL_free,
    is_KL_free,
    min_orderable,
    submatrix,
    transform,
)
from .obstructions import (
    find_asteroidal_triple,
    find_induced_cycle,
    find_invertible_pair,
    lekkerkerker_boland,
)
from .ordering import find_min_ordering, verify_min_ordering
from .rays import min_ordering_from_rays, rays_from_signed, realize_rays
from .sweep import CHECKS, DEFAULT_SEED, run_checks

EXIT = {"yes": 0, "no": 1, "error": 2, "internal": 3}


class _Guard(Exception):
    """A certificate failed verification right before it would have been printed."""


def _guard(ok: bool, what: str) -> None:
    if not ok:
        raise _Guard(f"{what} failed re-verification")


def _graph_json(h: Digraph) -> dict:
    return {"n": h.n, "arcs": [list(a) for a in h.arcs]}


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _parse_ordering(text: str):
    """Ordering given inline (``0,2,1`` or a JSON array) or as a path to a JSON file."""
    text = text.strip()
    if text.startswith("["):
        try:
            return io.ordering_from_json(json.loads(text))
        except json.JSONDecodeError:
            raise GraphInputError(f"ordering {text!r} is not a JSON array") from None
    if all(part.strip().lstrip("-").isdigit() for part in text.split(",")):
        return io.ordering_from_json([int(part) for part in text.split(",")])
    return io.ordering_from_json(_load_json(text))


# -- subcommands ---------------------------------------------------------------------


def cmd_recognize(args) -> dict:
    h = io.read_graph(args.graph)
    ordering = find_min_ordering(h)
    if ordering is None:
        return {"status": "no", "n": h.n}
    _guard(verify_min_ordering(h, ordering) is None, "min ordering")
    out = {"status": "yes", "n": h.n, "ordering": io.ordering_to_json(ordering)}
    emit = set(args.emit)
    if "all" in emit:
        emit |= {"model", "biarc"}
    if "model" in emit:
        model = signed_from_min_ordering(h, ordering)
        _guard(realize_signed(model) == h, "signed-interval model")
        out["model"] = io.signed_to_json(model)
    if "biarc" in emit:
        arcs = biarc_from_min_ordering(h, ordering)
        _guard(is_consistent(arcs) and realize_biarc(arcs) == h, "bi-arc model")
        out["biarc"] = io.biarc_to_json(arcs)
    if "cott" in emit:
        cott = cott_from_min_ordering(h, ordering)
        _guard(realize_cott(cott) == h, "co-TT model")
        out["cott"] = io.cott_to_json(cott)
    if "rays" in emit:
        bip = as_bipartite_digraph(h, strict=True)
        if bip.as_digraph() != h:
            raise GraphInputError("ray models need every arc to go from one side to the other")
        rays = rays_from_signed(bip, signed_from_min_ordering(h, ordering))
        _guard(realize_rays(rays) == bip, "ray model")
        out["rays"] = io.rays_to_json(rays)
    return out


def cmd_check_ordering(args) -> dict:
    h = io.read_graph(args.graph)
    ordering = _parse_ordering(args.ordering)
    if len(ordering) != h.n:
        raise GraphInputError(f"ordering covers {len(ordering)} vertices, graph has {h.n}")
    violation = verify_min_ordering(h, ordering)
    if violation is None:
        return {"status": "yes", "ordering": io.ordering_to_json(ordering)}
    _guard(violation.holds_in(h, ordering), "violation")
    return {"status": "no", "ordering": io.ordering_to_json(ordering), "violation": violation.to_dict()}


def _realized(kind: str, data, standard_cott: bool) -> Digraph:
    if kind == "signed":
        return realize_signed(io.signed_from_json(data))
    if kind == "cott":
        return realize_cott(io.cott_from_json(data), standard=standard_cott)
    if kind == "biarc":
        model = io.biarc_from_json(data)
        if not is_consistent(model):
            raise GraphInputError("bi-arc families are not consistent")
        return realize_biarc(model)
    if kind == "rays":
        return realize_rays(io.rays_from_json(data)).as_digraph()
    raise GraphInputError(f"unknown model kind {kind!r}")


def cmd_realize(args) -> dict:
    h = _realized(args.kind, _load_json(args.model), args.standard_cott)
    return {"status": "yes", "kind": args.kind, "graph": _graph_json(h)}


def cmd_convert(args) -> dict:
    data = _load_json(args.model)
    src, dst = args.source, args.target
    if src == "cott":
        model = io.cott_from_json(data)
        if dst == "signed":
            signed = cott_to_signed(model)
            _guard(realize_signed(signed) == realize_cott(model), "signed-interval model")
            return {"status": "yes", "model": io.signed_to_json(signed)}
        if dst == "tt":
            tt = cott_to_threshold_tolerance(model)
            _guard(realize_tt(tt) == complement(realize_cott(model, standard=True)), "threshold-tolerance model")
            return {"status": "yes", "model": io.tt_to_json(tt)}
        if dst == "ordering":
            return _ordering_payload(realize_cott(model), min_ordering_from_signed(cott_to_signed(model)))
    elif src == "signed":
        model = io.signed_from_json(data)
        if dst == "cott":
            cott = signed_to_cott(model)
            _guard(realize_cott(cott) == realize_signed(model), "co-TT model")
            return {"status": "yes", "model": io.cott_to_json(cott)}
        if dst == "ordering":
            return _ordering_payload(realize_signed(model), min_ordering_from_signed(model))
        if dst == "biarc":
            h = realize_signed(model)
            arcs = biarc_from_min_ordering(h, min_ordering_from_signed(model))
            _guard(realize_biarc(arcs) == h, "bi-arc model")
            return {"status": "yes", "model": io.biarc_to_json(arcs)}
        if dst == "rays":
            h = realize_signed(model)
            bip = as_bipartite_digraph(h, strict=True)
            if bip.as_digraph() != h:
                raise GraphInputError("ray models need every arc to go from one side to the other")
            rays = rays_from_signed(bip, model)
            _guard(realize_rays(rays) == bip, "ray model")
            return {"status": "yes", "model": io.rays_to_json(rays)}
    elif src == "biarc":
        model = io.biarc_from_json(data)
        if dst == "ordering":
            if not is_consistent(model):
                raise GraphInputError("bi-arc families are not consistent")
            return _ordering_payload(realize_biarc(model), ordering_generated(model))
        if dst == "signed":
            h = realize_biarc(model)
            signed = signed_from_min_ordering(h, ordering_generated(model))
            _guard(realize_signed(signed) == h, "signed-interval model")
            return {"status": "yes", "model": io.signed_to_json(signed)}
    elif src == "rays":
        model = io.rays_from_json(data)
        if dst == "ordering":
            return _ordering_payload(realize_rays(model).as_digraph(), min_ordering_from_rays(model))
    raise GraphInputError(f"no conversion from {src} to {dst}")


def _ordering_payload(h: Digraph, ordering) -> dict:
    _guard(verify_min_ordering(h, ordering) is None, "min ordering")
    return {"status": "yes", "ordering": io.ordering_to_json(ordering), "graph": _graph_json(h)}


def cmd_obstruct(args) -> dict:
    h = io.read_graph(args.graph)
    if args.kind == "invertible":
        witness = find_invertible_pair(h)
    elif args.kind == "asteroidal":
        witness = find_asteroidal_triple(h)
    elif args.kind == "cycle":
        witness = find_induced_cycle(h)
    else:
        witness = lekkerkerker_boland(h)
    if witness is not None:
        _guard(witness.is_valid(h), "obstruction")
        return {"status": "yes", "kind": args.kind, "witness": witness.to_dict()}
    out = {"status": "no", "kind": args.kind}
    if args.kind in ("lb", "invertible"):
        ordering = find_min_ordering(h)
        if ordering is None:
            raise _Guard("no obstruction found, yet the graph has no min ordering")
        model = interval_model_from_min_ordering(h, ordering)
        _guard(realize_intervals(model.x, model.y) == h, "interval model")
        out["intervals"] = [[io.rational_str(a), io.rational_str(b)] for a, b in zip(model.x, model.y)]
    return out


def cmd_hom(args) -> dict:
    h = io.read_graph(args.template)
    g = io.read_graph(args.input)
    lists = io.lists_from_json(_load_json(args.lists), g.n) if args.lists else None
    if args.ordering:
        ordering = _parse_ordering(args.ordering)
    else:
        ordering = find_min_ordering(h)
        if ordering is None:
            raise GraphInputError("template has no min ordering")
    f = solve_list_hom(g, h, ordering, lists)
    if f is None:
        return {"status": "no"}
    _guard(is_homomorphism(g, h, f, lists), "homomorphism")
    return {"status": "yes", "map": list(f), "ordering": io.ordering_to_json(ordering)}


def cmd_matrix(args) -> dict:
    m = io.read_matrix(args.matrix)
    out = {"shape": list(m.shape)}
    if args.transform:
        for op in args.transform:
            m = transform(m, op)
        out["matrix"] = io.format_matrix(m).split()
    if args.augment:
        m = augment(m)
        out["matrix"] = io.format_matrix(m).split()
    if args.pattern:
        where = find_pattern(m, args.pattern)
        if where is None:
            return {**out, "status": "no", "pattern": args.pattern}
        _guard(submatrix(m, where) == PATTERNS[args.pattern], "pattern occurrence")
        return {**out, "status": "yes", "pattern": args.pattern, "rows": list(where[:2]), "cols": list(where[2:])}
    if args.min_orderable:
        perm = min_orderable(m)
        if perm is None:
            return {**out, "status": "no"}
        _guard(is_KL_free(m.permuted(perm, perm)), "simultaneous permutation")
        return {**out, "status": "yes", "permutation": perm}
    if args.independent:
        found = independent_KL_free(m, method=args.method)
        if found is None:
            return {**out, "status": "no"}
        rows, cols = found
        _guard(is_KL_free(m.permuted(rows, cols)), "independent permutations")
        return {**out, "status": "yes", "rows": rows, "cols": cols}
    return {**out, "status": "yes"}


def cmd_sweep(args) -> dict:
    if args.all:
        keys = list(CHECKS)
    elif args.criteria:
        keys = [k.strip().upper() for k in args.criteria.split(",") if k.strip()]
        unknown = [k for k in keys if k not in CHECKS]
        if unknown:
            raise GraphInputError(f"unknown criteria {unknown}; choose from {list(CHECKS)}")
    else:
        keys = ["C1", "C2"]
    ns = tuple(args.n)
    if any(not 0 <= n <= 4 for n in ns):
        raise GraphInputError("exhaustive sweeps are limited to n <= 4")
    overrides = {"C1": {"ns": ns}, "C2": {"ns": ns}}
    results = run_checks(keys, seed=args.seed, overrides=overrides)
    for r in results:
        print(r.line(), file=sys.stderr)
    checks = []
    for r in results:
        entry = r.to_dict()
        if not args.timing:
            del entry["seconds"]
        checks.append(entry)
    ok = all(r.passed for r in results)
    return {"status": "yes" if ok else "no", "seed": args.seed, "checks": checks}


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-interval",
        description="Min orderings, signed-interval and bi-arc models, obstructions and list homomorphisms. "
                    "Prints JSON; exit code 0 = yes, 1 = no, 2 = bad input, 3 = internal check failed.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="find a min ordering and the models it yields")
    p.add_argument("graph", help="graph file: vertex count, then one 'u v' arc per line")
    p.add_argument("--emit", nargs="+", default=["all"],
                   choices=["ordering", "model", "biarc", "cott", "rays", "all"],
                   help="certificates to print besides the ordering (default: all = model and biarc)")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("check-ordering", help="verify a proposed min ordering")
    p.add_argument("graph")
    p.add_argument("ordering", help="'0,2,1', a JSON array, or a JSON file")
    p.set_defaults(func=cmd_check_ordering)

    p = sub.add_parser("realize", help="digraph of a model given as JSON")
    p.add_argument("kind", choices=["signed", "cott", "biarc", "rays"])
    p.add_argument("model", help="model JSON file")
    p.add_argument("--standard-cott", action="store_true",
                   help="for co-TT models compare distinct pairs only (no loops)")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("convert", help="translate between model kinds")
    p.add_argument("model", help="model JSON file")
    p.add_argument("--from", dest="source", required=True, choices=["cott", "signed", "biarc", "rays"])
    p.add_argument("--to", dest="target", required=True, choices=["signed", "cott", "tt", "biarc", "rays", "ordering"])
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("obstruct", help="obstructions to interval-ness of a reflexive graph")
    p.add_argument("graph")
    p.add_argument("--kind", default="lb", choices=["lb", "invertible", "asteroidal", "cycle"],
                   help="lb: induced 4/5-cycle or asteroidal triple (default); invertible: invertible pair")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("hom", help="list homomorphism to a template with a min ordering")
    p.add_argument("--template", required=True, help="template graph file H")
    p.add_argument("--input", required=True, help="input graph file G")
    p.add_argument("--lists", help='JSON file {"u": [allowed images]}')
    p.add_argument("--ordering", help="min ordering of the template (found automatically if omitted)")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("matrix", help="0/1 matrix patterns and permutations")
    p.add_argument("matrix", help="matrix file: one row of 0/1 characters per line")
    p.add_argument("--transform", action="append", choices=TRANSFORMS,
                   help="apply before anything else; repeatable")
    p.add_argument("--augment", action="store_true", help="replace the matrix by its square augmentation")
    action = p.add_mutually_exclusive_group()
    action.add_argument("--pattern", choices=sorted(PATTERNS), help="locate a 2x2 pattern")
    action.add_argument("--min-orderable", action="store_true",
                        help="simultaneous row/column permutation avoiding K and L")
    action.add_argument("--independent", action="store_true",
                        help="independent row and column permutations avoiding K and L")
    p.add_argument("--method", default="augment", choices=["augment", "brute"],
                   help="search used by --independent")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("sweep", help="run the exhaustive and randomized cross-checks")
    p.add_argument("--n", type=int, nargs="+", default=[1, 2, 3, 4],
                   help="vertex counts for the exhaustive checks (default 1 2 3 4)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="run every check C1..C10")
    group.add_argument("--criteria", help="comma-separated check keys, e.g. C1,C4 (default C1,C2)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomized checks")
    p.add_argument("--timing", action="store_true", help="include run times (output then varies)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except (GraphInputError, BudgetExceededError, OSError) as exc:
        payload = {"status": "error", "error": str(exc), "type": type(exc).__name__}
    except (_Guard, ConstructionError, AssertionError) as exc:
        payload = {"status": "internal", "error": str(exc), "type": type(exc).__name__}
    print(io.dumps(payload, pretty=args.pretty))
    return EXIT[payload["status"]]


if __name__ == "__main__":
    sys.exit(main())
