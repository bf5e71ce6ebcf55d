"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (the error class name is printed first).
"""

from __future__ import annotations

import argparse
import os
import sys as _sys

from .affine_weyl import affine_group
from .errors import InvalidRank, NilcError
from .height2_catalogue import catalogue, diagram_string, find, g_orbit_of_set
from .orbit_poset import (
    TildePair,
    admissible_pair,
    b_orbit,
    closure_leq_N2,
    enumerate_N2,
    enumerate_tilde,
    fiber,
    to_dot,
    to_json,
)
from .orbit_labels import lookup
from .orthogonal import format_set, parse_set
from .root_system import CartanType, RootSystem, build
from .weyl import weyl_group

DEFAULT_RANK_CAP = 8


class UsageError(Exception):
    pass


def rank_cap() -> int:
    raw = os.environ.get("NILC_RANK_CAP", str(DEFAULT_RANK_CAP))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"NILC_RANK_CAP must be an integer, got {raw!r}") from None


def _system(args) -> RootSystem:
    ct = CartanType(args.type.upper(), args.rank)
    if ct.letter in "ABCD" and ct.rank > rank_cap():
        raise InvalidRank(f"rank {ct.rank} exceeds the cap {rank_cap()} (set NILC_RANK_CAP)")
    return build(ct)


def _set(sys: RootSystem, text: str):
    return parse_set(sys, text)


def _show_set(s) -> str:
    return format_set(s) or "{}"


def _sigma_summary(sys: RootSystem, s) -> str:
    G = affine_group(sys)
    o = b_orbit(sys, s)
    return f"{G.format(o.sigma.element)}, l={o.sigma.length}, dim={o.dim}"


def _pair_line(sys: RootSystem, p: TildePair) -> str:
    W = weyl_group(sys)
    G = affine_group(sys)
    tag = " admissible" if p.admissible else ""
    return (
        f"w = {W.format(p.w)}  S = {_show_set(p.S)}  w(S) = {_show_set(p.image)}  "
        f"sigma = {G.format(p.sigma.element)}  dim={p.dim}{tag}"
    )


# -- subcommands -------------------------------------------------------------
def cmd_catalogue(args, out) -> int:
    sys = _system(args)
    cat = catalogue(sys)
    out.write(f"{len(cat)} height-2 orbits in {sys.cartan_type}\n")
    out.write(f"{'id':<14}{'diagram':<12}{'r':>3}{'|Psi|':>7}{'dim':>6}  label\n")
    for o in cat:
        row = lookup(sys.cartan_type, o.diagram)
        label = f"{row[0]} {row[2]}" if row else "-"
        out.write(
            f"{o.id:<14}{diagram_string(o.diagram):<12}{o.rank_r:>3}{len(o.psi):>7}{o.dim:>6}  {label}\n"
        )
    return 0


def _orbit(sys: RootSystem, oid: str):
    return find(sys, oid)


def cmd_enumerate(args, out) -> int:
    sys = _system(args)
    G = affine_group(sys)
    if args.tilde or args.orbit:
        if not args.orbit:
            raise UsageError("--tilde needs --orbit")
        o = _orbit(sys, args.orbit)
        p = enumerate_tilde(sys, o)
        out.write(f"{len(p)} B-orbits in the resolution of {o.id}\n")
        for pid, node in zip(p.ids, p.nodes):
            out.write(f"{pid}: {_pair_line(sys, node)}\n")
        return 0
    p = enumerate_N2(sys)
    out.write(f"{len(p)} B-orbits in N2\n")
    for pid, node in zip(p.ids, p.nodes):
        out.write(
            f"{pid}: S = {_show_set(node.S)}  sigma = {G.format(node.sigma.element)}  "
            f"dim={node.dim}  orbit={node.g_orbit}\n"
        )
    return 0


def cmd_compare(args, out) -> int:
    sys = _system(args)
    r, s = _set(sys, args.r), _set(sys, args.s)
    le, ge = closure_leq_N2(sys, r, s), closure_leq_N2(sys, s, r)
    if le and ge:
        verdict = "EQ"
    elif le:
        verdict = "LEQ"
    elif ge:
        verdict = "GEQ"
    else:
        verdict = "INCOMPARABLE"
    out.write(
        f"{verdict}: true (sigma_R = {_sigma_summary(sys, r)}; sigma_S = {_sigma_summary(sys, s)})\n"
        if verdict != "INCOMPARABLE"
        else f"INCOMPARABLE (sigma_R = {_sigma_summary(sys, r)}; sigma_S = {_sigma_summary(sys, s)})\n"
    )
    return 0


def _orbit_for_set(sys: RootSystem, args, s):
    if args.orbit:
        return _orbit(sys, args.orbit)
    return g_orbit_of_set(sys, s)


def cmd_admissible(args, out) -> int:
    sys = _system(args)
    s = _set(sys, args.set)
    o = _orbit_for_set(sys, args, s)
    out.write(f"orbit {o.id}\n{_pair_line(sys, admissible_pair(sys, o, s))}\n")
    return 0


def cmd_fiber(args, out) -> int:
    sys = _system(args)
    s = _set(sys, args.set)
    o = _orbit_for_set(sys, args, s)
    members = fiber(sys, o, s)
    out.write(f"{len(members)} pairs over {_show_set(s)} in the resolution of {o.id}\n")
    for p in members:
        out.write(_pair_line(sys, p) + "\n")
    return 0


def cmd_hasse(args, out) -> int:
    sys = _system(args)
    p = enumerate_tilde(sys, _orbit(sys, args.orbit)) if args.orbit else enumerate_N2(sys)
    text = to_json(sys, p) + "\n" if args.format == "json" else to_dot(sys, p)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        out.write(f"wrote {len(p)} nodes, {len(p.covers)} covers to {args.out}\n")
    else:
        out.write(text)
    return 0


def cmd_verify(args, out) -> int:
    from .verification import run_suite

    results = run_suite(args.suite, args.jobs)
    for r in results:
        out.write(r.line() + "\n")
        out.flush()
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


# -- parser ----------------------------------------------------------------
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nilc", description="B-orbits in the height-2 nilpotent locus.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def typed(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--type", required=True, help="Cartan type letter A-G")
        p.add_argument("--rank", required=True, type=int)
        return p

    typed("catalogue", "list height-2 orbits").set_defaults(fn=cmd_catalogue)

    p = typed("enumerate", "list B-orbits in N2 or in a resolution")
    p.add_argument("--orbit", help="orbit id such as h2-02")
    p.add_argument("--tilde", action="store_true", help="enumerate pairs (w, S)")
    p.set_defaults(fn=cmd_enumerate)

    p = typed("compare", "closure order between two sets")
    p.add_argument("--r", required=True, help='roots as "1,0;0,1"')
    p.add_argument("--s", required=True)
    p.set_defaults(fn=cmd_compare)

    for name, fn, help_ in (
        ("admissible", cmd_admissible, "admissible pair over a set"),
        ("fiber", cmd_fiber, "all pairs over a set"),
    ):
        p = typed(name, help_)
        p.add_argument("--set", required=True)
        p.add_argument("--orbit", help="defaults to the orbit of the set")
        p.set_defaults(fn=fn)

    p = typed("hasse", "export the Hasse diagram")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--orbit", help="resolution of this orbit instead of N2")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all", "bruhat", "poset", "catalogue", "lemmas"), default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or _sys.stdout
    err = err or _sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return 2
    except InvalidRank as e:
        err.write(f"InvalidRank: {e}\n")
        return 2
    except NilcError as e:
        err.write(f"{type(e).__name__}: {e}\n")
        return 3


def main() -> None:
    raise SystemExit(run())
