"""Command-line front end.

Every command writes deterministic JSON (``garland`` writes one text line).
Exit codes: 0 success, 1 failed verification or refused input, 2 malformed
JSON, 3 a size cap exceeded.
"""

import argparse
import json
import sys
from pathlib import Path

from . import checks, jsonio, lattice
from .affine import AffineData, AffineWeight, build_irreducible, freudenthal_table
from .garland import format_poly, garland_p
from .pimod import PiFunction, build_L, compute_G_pi, decompose, iso_check
from .rootsys import build_root_system, parse_type

MAX_RANK = 2
MAX_LEVEL = 3
MAX_DEPTH = 8
MAX_FACTORS = 3
MAX_FACTOR_LEVEL = 2
MAX_FACTOR_DEPTH = 4
MAX_WINDOW = 4


class CapError(ValueError):
    pass


class InputError(ValueError):
    pass


def _cap(ok, msg):
    if not ok:
        raise CapError(msg)


def _load(arg):
    if arg is None:
        raise InputError("missing --json input")
    try:
        return jsonio.load_input(arg)
    except (json.JSONDecodeError, OSError) as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _parse_pi(data):
    try:
        return PiFunction.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed pi-function: missing or bad field {exc}") from exc


def _parse_weight(data):
    try:
        return AffineWeight(int(data["level"]), tuple(int(x) for x in data["finite"]), jsonio.frac_from_json(data.get("delta1", [0, 1])))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed weight: {exc}") from exc


def _check_type(code):
    letter, rank = parse_type(code)
    _cap(rank <= MAX_RANK, f"rank {rank} exceeds cap {MAX_RANK}")
    return build_root_system(letter, rank)


def _check_pi(pi, depth, window=None):
    _check_type(pi.type_code)
    _cap(len(pi.points) <= MAX_FACTORS, f"{len(pi.points)} factors exceed cap {MAX_FACTORS}")
    _cap(all(w.level <= MAX_FACTOR_LEVEL for w in pi.weights), f"factor level exceeds cap {MAX_FACTOR_LEVEL}")
    _cap(depth <= MAX_FACTOR_DEPTH, f"depth {depth} exceeds cap {MAX_FACTOR_DEPTH}")
    if window is not None:
        _cap(window <= MAX_WINDOW, f"window {window} exceeds cap {MAX_WINDOW}")


# ------------------------------------------------------------------ commands
def cmd_rootsys(args):
    rs = _check_type(args.type)
    return rs.to_json()


def cmd_affine_mult(args):
    if args.json is not None:
        data = _load(args.json)
        code = data.get("type", args.type)
        lam = _parse_weight(data["weight"] if "weight" in data else data)
    else:
        code = args.type
        lam = None
    rs = _check_type(code)
    if lam is None:
        lam = AffineWeight(args.level, tuple(args.finite) if args.finite is not None else (0,) * rs.rank, 0)
    _cap(lam.level <= MAX_LEVEL, f"level {lam.level} exceeds cap {MAX_LEVEL}")
    _cap(args.depth <= MAX_DEPTH, f"depth {args.depth} exceeds cap {MAX_DEPTH}")
    if len(lam.finite) != rs.rank:
        raise InputError("finite part has the wrong length")
    if args.method == "freudenthal":
        data = AffineData(rs)
        table = freudenthal_table(rs, lam, args.depth)
        rows = sorted((data.weight_of_key(lam, k), d) for k, d in table.items())
    else:
        mod = build_irreducible(rs, lam, args.depth)
        rows = sorted(mod.multiplicities().items())
    return [{"weight": mu.to_json(), "mult": d} for mu, d in rows if d]


def cmd_garland(args):
    if args.s < 0:
        raise InputError("s must be non-negative")
    return format_poly(garland_p(args.s))


def cmd_gcdmat(args):
    B = lattice.gcd_unimodular(args.n)
    return {
        "n": list(args.n),
        "B": [list(r) for r in B],
        "image": [sum(b * x for b, x in zip(row, args.n)) for row in B],
        "det": lattice.determinant(B),
    }


def cmd_gpi(args):
    pi = _parse_pi(_load(args.json))
    _check_type(pi.type_code)
    G = compute_G_pi(pi, args.box)
    return {"basis": [list(r) for r in G.basis], "index": G.index(), "cosets": [list(g) for g in lattice.quotient_reps(G)]}


def cmd_build_l(args):
    pi = _parse_pi(_load(args.json))
    _check_pi(pi, args.depth, args.window)
    L = build_L(pi, args.depth, args.window)
    return {"dims": {jsonio.key_to_str(k): L.dim(k) for k in L.keys if L.dim(k)}, "depth": args.depth, "window": args.window}


def cmd_decompose(args):
    pi = _parse_pi(_load(args.json))
    _check_pi(pi, args.depth, args.window)
    L = build_L(pi, args.depth, args.window)
    G = compute_G_pi(pi, args.box)
    comps, report = decompose(L, G)
    dims = {}
    for key in L.interior():
        if L.dim(key):
            dims[jsonio.key_to_str(key)] = [c.dims.get(key, 0) for c in comps]
    return {"cosets": report["cosets"], "dims": dims, "ok": report["ok"]}


def cmd_iso_check(args):
    data = _load(args.json)
    try:
        first = (_parse_pi(data["first"]["pi"]), tuple(int(x) for x in data["first"]["g"]))
        second = (_parse_pi(data["second"]["pi"]), tuple(int(x) for x in data["second"]["g"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed iso-check input: {exc}") from exc
    ok, info = iso_check(first, second, args.box)
    if ok:
        return {"isomorphic": True, "witness": [jsonio.frac_to_json(x) for x in info]}
    return {"isomorphic": False, "reason": info}


def cmd_verify(args):
    results = checks.run_all(args.seed)
    return {"checks": [{"name": n, "ok": ok} for n, ok, _ in results], "ok": all(ok for _, ok, _ in results)}


COMMANDS = {
    "rootsys": cmd_rootsys,
    "affine-mult": cmd_affine_mult,
    "garland": cmd_garland,
    "gcdmat": cmd_gcdmat,
    "gpi": cmd_gpi,
    "build-l": cmd_build_l,
    "decompose": cmd_decompose,
    "iso-check": cmd_iso_check,
    "verify": cmd_verify,
}


def make_parser():
    parser = argparse.ArgumentParser(prog="toroidal-irreps", description="Exact computations for toroidal Lie algebra modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, json_input=False, depth=None, window=False, box=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", help="write output here instead of stdout")
        if json_input:
            p.add_argument("--json", help="input JSON (inline text or a file path)")
        if depth is not None:
            p.add_argument("--depth", type=int, default=depth)
        if window:
            p.add_argument("--window", type=int, default=2)
        if box:
            p.add_argument("--box", type=int, default=4)
        return p

    p = add("rootsys", "root system data")
    p.add_argument("type", help="type code such as A2 or G2")
    p = add("affine-mult", "weight multiplicities of a standard module", json_input=True, depth=4)
    p.add_argument("--type", default="A1")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--finite", type=int, nargs="*")
    p.add_argument("--method", choices=["gram", "freudenthal"], default="gram")
    p = add("garland", "Garland polynomial p^s")
    p.add_argument("--s", type=int, required=True)
    p = add("gcdmat", "unimodular matrix moving n to (gcd, 0, ..., 0)")
    p.add_argument("n", type=int, nargs="+")
    add("gpi", "the lattice G_pi", json_input=True, box=True)
    add("build-l", "weight dimensions of L(X_pi)", json_input=True, depth=2, window=True)
    add("decompose", "split L(X_pi) into the pieces X_pi^g", json_input=True, depth=2, window=True, box=True)
    add("iso-check", "decide X_pi^g = X_pi'^g'", json_input=True, box=True)
    p = add("verify", "run the invariant suite")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapError as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = result + "\n" if isinstance(result, str) else jsonio.dumps(result)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not result["ok"]:
        return 1
    if args.command == "decompose" and not result["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
