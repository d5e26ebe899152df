"""Command-line front door: one subcommand per experiment family.

Runs are configured by flags, by a flat key=value config file, or both
(flags win).  Every run writes its full configuration to a manifest
whose sha256 is embedded in each output file; passing the manifest back
through ``--config`` reproduces the outputs byte-for-byte.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 numerical
failure.
"""

import argparse
import math
import os
import sys

from . import __version__
from .errors import DomainError, NumericalError
from .tables import DataTable
from . import barriers as _barriers
from . import billiard as _billiard
from . import everett as _everett
from . import szilard as _szilard
from . import traps as _traps
from .emit import emit
from .paths import (PathOfStates, coherent_overlap, ensemble_conditional_probability,
                    rotation_path)
from .reactions import (CoherentState, RepetitionSchedule, pair_survival_limit,
                        pair_survival_repeated, survival_repeated,
                        survival_repeated_smallstep)

DEFAULT_OUT = os.environ.get("ZENOLAB_OUT", "zenolab_out")


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _int_or_never(text: str):
    return None if text.lower() in ("never", "none") else int(text)


def _formats(text: str) -> list[str]:
    fmts = [tok.strip() for tok in text.split(",") if tok.strip()]
    for f in fmts:
        if f not in ("csv", "json", "svg"):
            raise argparse.ArgumentTypeError(f"unknown format {f!r}")
    return fmts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zenolab",
        description="numerical laboratory for dense-measurement effects")
    parser.add_argument("--version", action="version", version=f"zenolab {__version__}")
    parser.add_argument("--config", help="flat key=value config file; flags override")
    parser.add_argument("--out", default=DEFAULT_OUT,
                        help="output directory (default: $ZENOLAB_OUT or ./zenolab_out)")
    parser.add_argument("--formats", type=_formats, default=["csv"],
                        help="comma list of csv,json,svg")
    parser.add_argument("--seed", type=int, default=0, help="master random seed")
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                        help="max parallel workers (results do not depend on this)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("reactions", help="repeated-reaction survival sweeps")
    p.add_argument("--mode", choices=("single", "pair"), default="single")
    p.add_argument("--q", type=float, default=1.0)
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--qa", type=float, default=1.0)
    p.add_argument("--pa", type=float, default=0.0)
    p.add_argument("--qb", type=float, default=1.0)
    p.add_argument("--pb", type=float, default=0.0)
    p.add_argument("--total-time", type=float, default=1.0)
    p.add_argument("--n-list", type=_int_list,
                   default=[1, 10, 100, 1000, 10000, 100000, 1000000])

    p = sub.add_parser("paths", help="path-product convergence tables")
    p.add_argument("--kernel", choices=("rotation", "coherent"), default="rotation")
    p.add_argument("--total-angle", type=float, default=0.5 * math.pi)
    p.add_argument("--q0", type=float, default=0.0)
    p.add_argument("--q1", type=float, default=1.0)
    p.add_argument("--total-time", type=float, default=1.0)
    p.add_argument("--n-list", type=_int_list, default=[10, 100, 1000, 10000])

    p = sub.add_parser("billiard", help="concentric-billiard activity curves")
    p.add_argument("--r1", type=float, default=6.0)
    p.add_argument("--r2", type=float, default=3.0)
    p.add_argument("--hole", type=float, default=0.15, help="hole arc length")
    p.add_argument("--hole-center", type=float, default=0.0)
    p.add_argument("--speed", type=float, default=3.0)
    p.add_argument("--particles", type=int, default=100000)
    p.add_argument("--switch-1to2", type=_int_or_never, default=None,
                   help="reflections before a 1->2 switch, or 'never'")
    p.add_argument("--switch-2to1", type=_int_or_never, default=None)
    p.add_argument("--bin", type=float, default=60.0)
    p.add_argument("--max-time", type=float, default=3000.0)
    p.add_argument("--initial-class", choices=("geometry", "state1", "state2"),
                   default="geometry")

    p = sub.add_parser("barriers", help="multibarrier transmission")
    p.add_argument("--n-list", type=_int_list, default=[1, 5, 10, 30, 100])
    p.add_argument("--a", type=float, default=1.0, help="total barrier width")
    p.add_argument("--b", type=float, default=None, help="total gap width")
    p.add_argument("--c", type=float, default=None, help="gap ratio b/a (alternative to --b)")
    p.add_argument("--e", type=float, default=25.0, help="particle energy")
    p.add_argument("--v", type=float, default=50.0, help="barrier height")
    p.add_argument("--layout", choices=_barriers._LAYOUTS, default="centered")

    p = sub.add_parser("traps", help="multitrap transmitted density")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=None, help="total gap width (default a/2)")
    p.add_argument("--De", dest="d_ext", type=float, default=0.5)
    p.add_argument("--Di", dest="d_int", type=float, default=0.1)
    p.add_argument("--k", dest="strength", type=float, default=1.0)
    p.add_argument("--t", dest="time", type=float, default=1e-6)
    p.add_argument("--sweep", choices=("n", "t", "a"), default=None)
    p.add_argument("--values", type=_float_list, default=None)

    p = sub.add_parser("everett", help="observer-sequence counting")
    esub = p.add_subparsers(dest="everett_mode", required=True)
    pt = esub.add_parser("table1", help="the five-column observer-count table")
    pt.add_argument("--mode", choices=("published", "formula", "exact"),
                    default="published")
    ps = esub.add_parser("surface", help="relative-rate surface over (K, r)")
    ps.add_argument("--k-min", type=int, default=2)
    ps.add_argument("--k-max", type=int, default=250)
    ps.add_argument("--r-min", type=int, default=1)
    ps.add_argument("--r-max", type=int, default=99)

    p = sub.add_parser("szilard", help="piston-cylinder entropy ensembles")
    p.add_argument("--mode", choices=("surface", "related", "random"), default="surface")
    p.add_argument("--x", type=float, default=3.0, help="interval half-width for the surface")
    p.add_argument("--grid", type=int, default=50)
    p.add_argument("--n-performed", type=int, default=1000)
    p.add_argument("--n-list", type=_int_list,
                   default=list(range(1000, 6001, 500)))
    p.add_argument("--indicator", choices=("negative", "positive"), default="negative")
    return parser


def read_config_file(path: str) -> dict:
    values = {}
    try:
        text = open(path).read()
    except OSError as exc:
        raise DomainError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def _walk_parsers(parser: argparse.ArgumentParser):
    yield parser
    for act in parser._actions:
        if isinstance(act, argparse._SubParsersAction):
            for sp in act.choices.values():
                yield from _walk_parsers(sp)


def _collect_actions(parser: argparse.ArgumentParser) -> dict:
    """dest -> action over the parser and all nested subparsers."""
    into = {}
    for p in _walk_parsers(parser):
        for act in p._actions:
            if not isinstance(act, argparse._SubParsersAction):
                into.setdefault(act.dest, act)
    return into


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Fold config-file values into argv-level defaults; flags still win."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return argv
    values = read_config_file(known.config)
    sub_name = values.pop("subcommand", None)
    emode = values.pop("everett_mode", None)
    if sub_name and not any(a in argv for a in
                            ("reactions", "paths", "billiard", "barriers",
                             "traps", "everett", "szilard")):
        argv = argv + [sub_name] + ([emode] if emode else [])

    actions = _collect_actions(parser)
    defaults = {}
    for key, raw in values.items():
        if key not in actions:
            parser.error(f"unknown config key {key!r}")
        act = actions[key]
        if act.type is not None:
            try:
                defaults[key] = act.type(raw)
            except (TypeError, ValueError, argparse.ArgumentTypeError) as exc:
                parser.error(f"config key {key!r}: {exc}")
        elif isinstance(act.default, bool):
            defaults[key] = raw.lower() in ("1", "true", "yes")
        else:
            defaults[key] = raw
    # subparsers parse into a fresh namespace, so defaults must reach every level
    for p in _walk_parsers(parser):
        p.set_defaults(**defaults)
    return argv


def _manifest_params(args, keys) -> dict:
    params = {"subcommand": args.subcommand, "seed": args.seed,
              "formats": ",".join(args.formats)}
    for key in keys:
        params[key] = getattr(args, key)
    return params


def _run_reactions(args) -> tuple[DataTable, dict, tuple]:
    rows = []
    if args.mode == "single":
        state = CoherentState(args.q, args.p)
        for n in args.n_list:
            sched = RepetitionSchedule(args.total_time, n)
            rows.append([n, survival_repeated(state, sched),
                         survival_repeated_smallstep(state, sched)])
        table = DataTable(["n", "probability", "small_step_form"], rows,
                          {"experiment": "repeated-reaction-survival",
                           "mode": "single", "q": args.q, "p": args.p,
                           "total_time": args.total_time})
    else:
        a = CoherentState(args.qa, args.pa)
        b = CoherentState(args.qb, args.pb)
        limit = pair_survival_limit(a, b, args.total_time)
        for n in args.n_list:
            sched = RepetitionSchedule(args.total_time, n)
            rows.append([n, pair_survival_repeated(a, b, sched), limit])
        table = DataTable(["n", "weight", "dense_limit"], rows,
                          {"experiment": "repeated-pair-survival",
                           "mode": "pair", "qa": args.qa, "pa": args.pa,
                           "qb": args.qb, "pb": args.pb,
                           "total_time": args.total_time})
    keys = ("mode", "q", "p", "qa", "pa", "qb", "pb", "total_time", "n_list")
    return table, _manifest_params(args, keys), ("line", "n", table.columns[1])


def _run_paths(args) -> tuple[DataTable, dict, tuple]:
    rows = []
    for n in args.n_list:
        if args.kernel == "rotation":
            path = rotation_path(args.total_angle, n, args.total_time)
            prob = ensemble_conditional_probability(path)
        else:
            qs = [args.q0 + (args.q1 - args.q0) * i / (n - 1) for i in range(n)]
            times = [args.total_time * i / (n - 1) for i in range(n)]
            path = PathOfStates([CoherentState(q, 0.0) for q in qs], times)
            prob = ensemble_conditional_probability(path, coherent_overlap)
        rows.append([n, prob])
    table = DataTable(["N", "probability"], rows,
                      {"experiment": "path-product-convergence",
                       "kernel": args.kernel, "total_angle": args.total_angle,
                       "total_time": args.total_time})
    keys = ("kernel", "total_angle", "q0", "q1", "total_time", "n_list")
    return table, _manifest_params(args, keys), ("line", "N", "probability")


def _run_billiard(args) -> tuple[DataTable, dict, tuple]:
    config = _billiard.BilliardConfig(
        r1=args.r1, r2=args.r2, hole_width=args.hole,
        hole_center=args.hole_center, speed=args.speed,
        n_particles=args.particles, switch_after_1to2=args.switch_1to2,
        switch_after_2to1=args.switch_2to1, bin_width=args.bin,
        max_time=args.max_time, seed=args.seed,
        initial_class=args.initial_class)
    curve = _billiard.run_activity(config, workers=max(1, args.workers))
    rows = []
    cum = 0
    for i, c in enumerate(curve.histogram.counts):
        cum += c
        rows.append([i * config.bin_width, c, cum])
    meta = {"experiment": "billiard-activity-curve",
            "escapes_state1": curve.escapes_by_class[1],
            "escapes_state2": curve.escapes_by_class[2],
            "censored": curve.censored, "switches": curve.switches}
    for cls, (lo, hi) in sorted(curve.flight_extremes.items()):
        meta[f"flight_min_state{cls}"] = lo
        meta[f"flight_max_state{cls}"] = hi
    table = DataTable(["bin_start", "escapes", "cumulative"], rows, meta)
    keys = ("r1", "r2", "hole", "hole_center", "speed", "particles",
            "switch_1to2", "switch_2to1", "bin", "max_time", "initial_class")
    return table, _manifest_params(args, keys), ("line", "bin_start", "escapes")


def _run_barriers(args) -> tuple[DataTable, dict, tuple]:
    if args.b is not None and args.c is not None:
        raise DomainError("give either --b or --c, not both")
    b = args.b if args.b is not None else (args.c if args.c is not None else 0.5) * args.a
    template = _barriers.BarrierSystem(n=1, a=args.a, b=b, energy=args.e,
                                       height=args.v, layout=args.layout)
    table = _barriers.sweep_n(template, args.n_list)
    keys = ("n_list", "a", "b", "c", "e", "v", "layout")
    return table, _manifest_params(args, keys), ("line", "n", "T")


def _run_traps(args) -> tuple[DataTable, dict, tuple]:
    b = args.b if args.b is not None else 0.5 * args.a
    template = _traps.TrapSystem(n=args.n, a=args.a, b=b, d_ext=args.d_ext,
                                 d_int=args.d_int, strength=args.strength,
                                 time=args.time)
    if args.sweep is None:
        table = _traps.sweep(template, "n", [args.n])
    else:
        if args.values is None:
            raise DomainError("--sweep needs --values")
        table = _traps.sweep(template, args.sweep, args.values)
    keys = ("n", "a", "b", "d_ext", "d_int", "strength", "time", "sweep", "values")
    xcol = table.columns[0]
    return table, _manifest_params(args, keys), ("line", xcol, "V")


def _run_everett(args) -> tuple[DataTable, dict, tuple | None]:
    if args.everett_mode == "table1":
        table = _everett.observer_table(args.mode)
        params = _manifest_params(args, ("mode",))
        params["everett_mode"] = "table1"
        return table, params, None
    table = _everett.rate_surface(range(args.k_min, args.k_max + 1),
                                  range(args.r_min, args.r_max + 1))
    params = _manifest_params(args, ("k_min", "k_max", "r_min", "r_max"))
    params["everett_mode"] = "surface"
    return table, params, ("grid", "K", "r", "rate")


def _run_szilard(args) -> tuple[DataTable, dict, tuple]:
    if args.mode == "surface":
        table = _szilard.entropy_surface(x=args.x, grid=args.grid)
        plot = ("grid", "fo", "fi", "s")
    else:
        table = _szilard.fraction_sweep(args.mode, args.n_list,
                                        n_performed=args.n_performed,
                                        seed=args.seed,
                                        negative=args.indicator == "negative")
        plot = ("line", "N", "f")
    keys = ("mode", "x", "grid", "n_performed", "n_list", "indicator")
    return table, _manifest_params(args, keys), plot


_RUNNERS = {
    "reactions": _run_reactions,
    "paths": _run_paths,
    "billiard": _run_billiard,
    "barriers": _run_barriers,
    "traps": _run_traps,
    "everett": _run_everett,
    "szilard": _run_szilard,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        table, params, plot = _RUNNERS[args.subcommand](args)
        stem = args.subcommand
        if args.subcommand == "everett":
            stem = f"everett_{args.everett_mode}"
        elif args.subcommand == "szilard":
            stem = f"szilard_{args.mode}"
        if "svg" in args.formats and plot is None:
            raise DomainError(f"no svg rendering for {stem}")
        written = emit(table, args.out, stem, args.formats, params, plot)
        for fmt, path in sorted(written.items()):
            print(f"{fmt}: {path}")
        return 0
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
