"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 indeterminate.
`--json` switches stdout to a stable JSON rendering (sorted keys).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import fixtures
from .errors import LatticeError, ScriptSyntaxError, DuplicateEdge
from .geometry import gauss_linking, length, pv_approx
from .io import (
    parse_curve_file,
    parse_knot_file,
    parse_move,
    parse_move_script,
    serialize_knot,
    serialize_moves,
)
from .lattice import Order, components, inject, refine
from .moves import apply_word, generators
from .orbits import (
    enumerate_knots,
    equivalent,
    equivalent_escalating,
    lattice_number,
    orbit,
)
from .quantum import (
    basis_state,
    evolve,
    hamiltonian,
    invariant_observable,
    measure_distribution,
    orbit_projector,
)
from .refinement import conjecture_check, refine_generator

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_INDETERMINATE = 3


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_knot(path: str):
    return parse_knot_file(_read(path))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _knot_payload(k) -> dict:
    return {
        "order": [k.order.ell, k.order.n],
        "edges": [[*e.origin, e.p] for e in k.sorted_edges()],
    }


def cmd_validate(args) -> int:
    k = _load_knot(args.knot)
    _emit(
        args,
        {"valid": True, "edges": len(k), "components": components(k), **_knot_payload(k)},
        [f"valid: {len(k)} edges, {components(k)} component(s)"],
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    basis = enumerate_knots(Order(args.ell, args.n), cap=args.cap, include_empty=args.include_empty)
    payload = {"order": [args.ell, args.n], "count": basis.count, "include_empty": args.include_empty}
    _emit(args, payload, [f"count: {basis.count}"])
    return EXIT_OK


def cmd_orbit(args) -> int:
    k = _load_knot(args.knot)
    gens = generators(k.order, inextensible=args.inextensible)
    orb = orbit(k, gens, limit=args.limit)
    members = sorted(orb.members)
    payload = {
        "size": len(orb),
        "inextensible": args.inextensible,
        "members": [_knot_payload(m)["edges"] for m in members],
    }
    _emit(args, payload, [f"orbit size: {len(orb)}"])
    return EXIT_OK


def cmd_equiv(args) -> int:
    k1, k2 = _load_knot(args.knot1), _load_knot(args.knot2)
    if args.n is not None:
        k1, k2 = inject(k1, args.n), inject(k2, args.n)
    if args.escalate_n or args.escalate_ell:
        max_n = max(args.escalate_n or 0, k1.order.n, k2.order.n)
        max_ell = max(args.escalate_ell or 0, k1.order.ell)
        res = equivalent_escalating(
            k1, k2, max_n=max_n, max_ell=max_ell,
            inextensible=args.inextensible, limit=args.limit,
        )
    else:
        n0 = max(k1.order.n, k2.order.n)
        res = equivalent(
            inject(k1, n0), inject(k2, n0),
            inextensible=args.inextensible, limit=args.limit,
        )
    payload = {"status": res.status}
    lines = []
    if res.status == "equivalent":
        word = serialize_moves(res.witness).strip().replace("\n", ", ")
        payload["witness"] = [str(m) for m in res.witness]
        lines.append(f"equivalent: true, witness: [{word}]")
        code = EXIT_OK
    elif res.status == "distinct":
        lines.append("equivalent: false (orbits exhausted)")
        code = EXIT_OK
    else:
        lines.append("indeterminate (limit reached)")
        code = EXIT_INDETERMINATE
    _emit(args, payload, lines)
    return code


def cmd_apply(args) -> int:
    k = _load_knot(args.knot)
    word = parse_move_script(_read(args.script), k.order)
    out = apply_word(word, k)
    _emit(args, _knot_payload(out), [serialize_knot(out).rstrip("\n")])
    return EXIT_OK


def cmd_refine(args) -> int:
    k = refine(_load_knot(args.knot))
    _emit(args, _knot_payload(k), [serialize_knot(k).rstrip("\n")])
    return EXIT_OK


def cmd_length(args) -> int:
    k = _load_knot(args.knot)
    val = length(k)
    _emit(args, {"length": val}, [f"{val:.6f}"])
    return EXIT_OK


def cmd_link(args) -> int:
    k = _load_knot(args.knot)
    val = gauss_linking(k)
    _emit(args, {"linking": round(val, 9)}, [f"{val:.6f}"])
    return EXIT_OK


def cmd_pv(args) -> int:
    curve = parse_curve_file(_read(args.curve))
    k = pv_approx(curve, args.ell, args.n)
    _emit(args, _knot_payload(k), [serialize_knot(k).rstrip("\n")])
    return EXIT_OK


def cmd_evolve(args) -> int:
    k = _load_knot(args.knot)
    basis = enumerate_knots(k.order, cap=args.cap)
    move = parse_move(args.move)
    psi = evolve(basis_state(k, basis), move, args.t)
    amps = [
        {"knot": _knot_payload(basis.knots[i])["edges"],
         "re": round(c.real, 12), "im": round(c.imag, 12)}
        for i, c in sorted(psi.amplitudes.items())
    ]
    lines = [
        f"|{'+'.join(str(x) for x in basis.knots[i].sorted_edges()[0].origin)}...> "
        f"amp {c.real:+.6f}{c.imag:+.6f}i"
        for i, c in sorted(psi.amplitudes.items())
    ]
    _emit(args, {"t": args.t, "amplitudes": amps}, lines)
    return EXIT_OK


def cmd_ham(args) -> int:
    k = _load_knot(args.knot)
    basis = enumerate_knots(k.order, cap=args.cap)
    move = parse_move(args.move)
    ham = hamiltonian(move, basis)
    entries = []
    for a, b in ham.pairs:
        entries.extend(
            [
                {"row": a, "col": a, "value": "pi/2"},
                {"row": b, "col": b, "value": "pi/2"},
                {"row": a, "col": b, "value": "-pi/2"},
                {"row": b, "col": a, "value": "-pi/2"},
            ]
        )
    payload = {"dim": ham.dim, "pairs": [list(p) for p in ham.pairs], "entries": entries}
    lines = [f"dim {ham.dim}, {len(ham.pairs)} transposed pair(s)"] + [
        f"  pair {a} <-> {b}" for a, b in ham.pairs
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_measure(args) -> int:
    k = _load_knot(args.knot)
    basis = enumerate_knots(k.order, cap=args.cap)
    spec = args.observable
    if spec == "components":
        omega = invariant_observable(components, basis)
    elif spec == "length":
        omega = invariant_observable(length, basis)
    elif spec.startswith("orbit:"):
        seed = _load_knot(spec.split(":", 1)[1])
        gens = generators(k.order, inextensible=args.inextensible)
        omega = orbit_projector(seed, gens, basis)
    else:
        raise ScriptSyntaxError(f"unknown observable {spec!r}")
    dist = measure_distribution(basis_state(k, basis), omega)
    payload = {"distribution": {f"{lam:.9g}": p for lam, p in sorted(dist.items())}}
    lines = [f"{lam:.6f}: {p:.6f}" for lam, p in sorted(dist.items())]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    move = parse_move(args.generator)
    order = Order(args.ell, args.n)
    basis = enumerate_knots(order, cap=args.cap)
    rng = random.Random(args.seed)
    from .orbits import random_knots

    arbitrary = random_knots(Order(order.ell + 1, order.n), args.arbitrary, rng)
    report = conjecture_check(move, basis.knots, arbitrary)
    lines = [f"generator: {report['generator']}", f"supported: {report['supported']}"]
    if report["supported"]:
        for key in ("restriction", "involution_on_refined", "involution_on_arbitrary"):
            r = report[key]
            lines.append(f"{key}: {r['failures']}/{r['checked']} failures")
    else:
        lines.append(f"reason: {report['reason']}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_lattice_number(args) -> int:
    k = _load_knot(args.knot)
    res = lattice_number(k, max_n=args.max_n, limit=args.limit)
    payload = {
        "value": res.value,
        "best_found": res.best_found,
        "exhausted": res.exhausted,
    }
    if res.indeterminate:
        _emit(args, payload, [f"indeterminate (best found: {res.best_found})"])
        return EXIT_INDETERMINATE
    _emit(args, payload, [f"lattice number: {res.value}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latknot",
        description="Lattice knots on the bounded cubic grid: moves, orbits, "
        "quantum states, and geometry functionals.",
    )
    ap.add_argument("--json", action="store_true", help="emit stable JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=fn)
        return p

    p = add("validate", cmd_validate, help="validate a knot file")
    p.add_argument("knot")

    p = add("enumerate", cmd_enumerate, help="count/enumerate the knot basis")
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--include-empty", action="store_true")

    p = add("orbit", cmd_orbit, help="orbit of a knot under the ambient group")
    p.add_argument("knot")
    p.add_argument("--inextensible", action="store_true")
    p.add_argument("--limit", type=int, default=10**6)

    p = add("equiv", cmd_equiv, help="decide bounded knot equivalence")
    p.add_argument("knot1")
    p.add_argument("knot2")
    p.add_argument("--n", type=int, default=None, help="inject both knots to this bound")
    p.add_argument("--escalate-n", type=int, default=None)
    p.add_argument("--escalate-ell", type=int, default=None)
    p.add_argument("--inextensible", action="store_true")
    p.add_argument("--limit", type=int, default=10**6)

    p = add("apply", cmd_apply, help="apply a move script to a knot")
    p.add_argument("knot")
    p.add_argument("script")

    p = add("refine", cmd_refine, help="subdivide a knot one level")
    p.add_argument("knot")

    p = add("length", cmd_length, help="total real length")
    p.add_argument("knot")

    p = add("link", cmd_link, help="Gauss linking number magnitude")
    p.add_argument("knot")

    p = add("pv", cmd_pv, help="lattice approximation of a sampled curve")
    p.add_argument("curve")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("evolve", cmd_evolve, help="Schroedinger evolution under one move")
    p.add_argument("knot")
    p.add_argument("--move", required=True, help='e.g. "L1 0 1 0 3 0"')
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--cap", type=int, default=10**6)

    p = add("ham", cmd_ham, help="sparse Hamiltonian of one move")
    p.add_argument("knot")
    p.add_argument("--move", required=True)
    p.add_argument("--cap", type=int, default=10**6)

    p = add("measure", cmd_measure, help="measurement distribution of an observable")
    p.add_argument("knot")
    p.add_argument("--observable", required=True, help="components|length|orbit:FILE")
    p.add_argument("--inextensible", action="store_true")
    p.add_argument("--cap", type=int, default=10**6)

    p = add("conjecture", cmd_conjecture, help="refinement image report for a generator")
    p.add_argument("--generator", required=True, help='e.g. "L1 0 0 0 3 0"')
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--arbitrary", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=10**6)

    p = add("lattice-number", cmd_lattice_number, help="smallest bound reached by the orbit")
    p.add_argument("knot")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--limit", type=int, default=10**6)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ScriptSyntaxError, DuplicateEdge) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
