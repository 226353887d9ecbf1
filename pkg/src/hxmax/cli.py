"""Command-line entry point: ``hxmax <command> ...``.

Single reports are printed as JSON (sorted keys), the sweep as CSV.  Any
rejected input exits with status 3 and a JSON error object on stderr;
``verify`` exits 0 (maximal), 1 (not maximal) or 2 (property a violated).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

from . import bounds as bd
from . import constructions as cons
from .connectivity import kappa_flow, kappa_oracle
from .errors import HxError, ParameterError
from .hypergraph import Hypergraph, complete, dumps, empty, read_file
from .maximality import greedy_maximalize, is_kl_edge_maximal, oracle_cap
from .normalize import SatelliteSpectrum, msh_spectrum, normalize, spectrum_edges

EXIT_ERROR = 3
_ORACLE = {"on": "oracle", "off": "fast", "auto": "auto"}


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _write_or_print(H: Hypergraph, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(dumps(H))
    else:
        sys.stdout.write(dumps(H))


def _require(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError("required flags " + " ".join(missing))


# -- commands ----------------------------------------------------------------


def cmd_params(args) -> int:
    _require(args, "k", "r")
    p = bd.params(args.k, args.r)
    print(f"t={p.t} s={p.s}")
    return 0


def cmd_bounds(args) -> int:
    _require(args, "n", "k", "l", "r")
    _emit_json(asdict(bd.bounds_report(args.n, args.k, args.l, args.r)))
    return 0


def _construct(args) -> Hypergraph:
    fam = args.family
    if fam == "msh":
        _require(args, "n", "k", "l", "r")
        return cons.build_msh(args.n, args.k, args.l, args.r)
    if fam == "def5":
        _require(args, "t", "r", "p", "l")
        return cons.build_def5(args.t, args.r, args.p, args.l)
    if fam == "lemma41":
        _require(args, "n", "k", "r", "variant")
        a = args.a if args.a is not None else bd.t_param(args.k, args.r)
        return cons.build_lemma41(args.n, a, args.k, args.r, args.variant)
    if fam == "starlike":
        _require(args, "k", "r", "l")
        sats = _ints(args.satellites or "")
        return cons.build_starlike(cons.StarLikeSpec(args.k, args.r, args.l, tuple(sats)))
    if fam == "complete":
        _require(args, "n", "r")
        return complete(args.n, args.r)
    _require(args, "n", "r")
    return empty(args.n, args.r)


def cmd_construct(args) -> int:
    _write_or_print(_construct(args), args.output)
    return 0


def cmd_kappa(args) -> int:
    H = read_file(args.file)
    mode = args.oracle
    cap = oracle_cap()
    if mode == "on":
        res = kappa_oracle(H, cap=max(cap, H.n))
        checked = True
    else:
        res = kappa_flow(H)
        checked = False
        if mode == "auto" and 2 <= H.n <= cap:
            alt = kappa_oracle(H)
            if alt.kappa != res.kappa:
                raise HxError(f"flow/oracle disagreement: {res.kappa} vs {alt.kappa}")
            checked = True
    out = {
        "kappa": res.kappa,
        "method": res.method,
        "oracle_checked": checked,
        "side": list(res.witness.side) if res.witness else None,
        "crossing": [list(e) for e in res.witness.crossing] if res.witness else None,
    }
    _emit_json(out)
    return 0


def cmd_verify(args) -> int:
    _require(args, "k", "l")
    H = read_file(args.file)
    rep = is_kl_edge_maximal(H, args.k, args.l, _ORACLE[args.oracle])
    _emit_json(rep.to_dict())
    if rep.maximal:
        return 0
    return 1 if rep.property_a else 2


def cmd_maximalize(args) -> int:
    _require(args, "k", "l", "seed")
    if args.input:
        H0 = read_file(args.input)
    else:
        _require(args, "n", "r")
        H0 = empty(args.n, args.r)
    H = greedy_maximalize(H0, args.k, args.l, args.seed, _ORACLE[args.oracle])
    if args.output:
        _write_or_print(H, args.output)
        _emit_json({"n": H.n, "r": H.r, "edges": H.m, "seed": args.seed, "output": args.output})
    else:
        _write_or_print(H, None)
    return 0


def _parse_spectrum(text: str) -> dict[int, int]:
    counts: dict[int, int] = {}
    for part in text.split(","):
        if not part.strip():
            continue
        size, _, mult = part.partition(":")
        counts[int(size)] = counts.get(int(size), 0) + int(mult or 1)
    return counts


def cmd_normalize(args) -> int:
    _require(args, "k", "r", "l", "spectrum")
    sp = SatelliteSpectrum.of(args.k, args.r, args.l, _parse_spectrum(args.spectrum))
    rng = random.Random(args.seed) if args.seed is not None else None
    final, trace = normalize(sp, rng)
    out = {
        "n": sp.n,
        "initial": {str(i): c for i, c in sp.counts},
        "initial_edges": spectrum_edges(sp),
        "final": {str(i): c for i, c in final.counts},
        "final_edges": spectrum_edges(final),
        "trace": [step.to_dict() for step in trace],
    }
    if sp.n >= args.l:
        out["upper_bound"] = bd.upper_bound(bd.BoundQuery(sp.n, args.k, args.l, args.r)).value
        out["matches_msh"] = final == msh_spectrum(sp.n, args.k, args.l, args.r)
    _emit_json(out)
    return 0


# -- sweep -------------------------------------------------------------------


@dataclass
class SweepRow:
    n: int
    k: int
    l: int
    r: int
    t: int
    s: int
    p: int
    q: int
    lower: int
    lower_branch: str
    upper: int
    upper_branch: str
    msh_edges: int
    def5_edges: int | None
    msh_maximal: bool | None
    def5_maximal: bool | None
    verify_method: str


def sweep_grid(r_values, k_values, l_span: int, n_span: int, max_n: int):
    for r in r_values:
        for k in k_values:
            t = bd.t_param(k, r)
            for l in range(t + 1, t + l_span + 1):
                for n in range(l, min(l + n_span, max_n) + 1):
                    yield n, k, l, r


def sweep_row(n: int, k: int, l: int, r: int, verify: bool, method: str) -> SweepRow:
    rep = bd.bounds_report(n, k, l, r)
    H = cons.build_msh(n, k, l, r)
    p5 = cons.def5_applies(n, k, l, r)
    G = cons.build_def5(bd.t_param(k, r), r, p5, l) if p5 is not None else None
    msh_ok = def5_ok = None
    how = "-"
    if verify:
        mr = is_kl_edge_maximal(H, k, l, method)
        msh_ok, how = mr.maximal, mr.method
        if G is not None:
            def5_ok = is_kl_edge_maximal(G, k, l, method).maximal
    return SweepRow(
        n, k, l, r, rep.t, rep.s, rep.p, rep.q,
        rep.lower, rep.lower_branch, rep.upper, rep.upper_branch,
        H.m, G.m if G is not None else None, msh_ok, def5_ok, how,
    )


def _row_task(args):
    return sweep_row(*args)


def row_violations(row: SweepRow) -> list[str]:
    bad = []
    if row.msh_edges != row.upper:
        bad.append("msh_edges != upper")
    if row.lower > row.upper:
        bad.append("lower > upper")
    if row.def5_edges is not None and row.def5_edges != row.lower:
        bad.append("def5_edges != lower")
    if row.msh_maximal is False:
        bad.append("msh not maximal")
    if row.def5_maximal is False:
        bad.append("def5 not maximal")
    return bad


def cmd_sweep(args) -> int:
    grid = sorted(
        sweep_grid(_ints(args.r_values), _ints(args.k_values), args.l_span, args.n_span, args.max_n),
        key=lambda x: (x[3], x[1], x[2], x[0]),
    )
    tasks = [(n, k, l, r, args.verify, _ORACLE[args.oracle]) for n, k, l, r in grid]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_row_task, tasks))
    else:
        rows = [_row_task(t) for t in tasks]
    buf = io.StringIO()
    names = [f.name for f in fields(SweepRow)]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    violations = 0
    for row in rows:
        w.writerow(["" if getattr(row, f) is None else getattr(row, f) for f in names])
        violations += bool(row_violations(row))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    if violations:
        print(json.dumps({"violations": violations}), file=sys.stderr)
        return 1
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hxmax", description="(k,l)-edge-maximal r-uniform hypergraphs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ints(p, *names):
        for name in names:
            p.add_argument(f"--{name}", type=int)

    def oracle(p, default="auto"):
        p.add_argument("--oracle", choices=("on", "off", "auto"), default=default)

    p = sub.add_parser("params", help="print t(k,r) and s(k,r)")
    ints(p, "k", "r")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("bounds", help="lower/upper edge bounds as JSON")
    ints(p, "n", "k", "l", "r")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="write an extremal hypergraph file")
    p.add_argument("family", choices=("msh", "def5", "lemma41", "starlike", "complete", "empty"))
    ints(p, "n", "k", "l", "r", "t", "p", "a")
    p.add_argument("--variant", choices=("i", "ii"))
    p.add_argument("--satellites", help="comma-separated satellite sizes (starlike)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("kappa", help="edge-connectivity with a minimum cut")
    p.add_argument("file")
    oracle(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("verify", help="check (k,l)-edge-maximality")
    p.add_argument("file")
    ints(p, "k", "l")
    oracle(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("maximalize", help="seeded greedy saturation")
    ints(p, "n", "r", "k", "l", "seed")
    p.add_argument("-i", "--input")
    p.add_argument("-o", "--output")
    oracle(p, default="off")
    p.set_defaults(func=cmd_maximalize)

    p = sub.add_parser("normalize", help="satellite-spectrum normalization trace")
    ints(p, "k", "r", "l", "seed")
    p.add_argument("--spectrum", help="size:count pairs, e.g. 3:2,1:4")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("sweep", help="bounds and constructions over a grid, as CSV")
    p.add_argument("--r-values", default="2,3")
    p.add_argument("--k-values", default="2,3,4")
    p.add_argument("--l-span", type=int, default=4)
    p.add_argument("--n-span", type=int, default=6)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    oracle(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HxError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParameterError):
            err["constraint"] = exc.constraint
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
