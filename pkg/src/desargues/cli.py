"""Batch driver.

    desargues cayley  --field 3,1 --out DIR
    desargues verify  --field 3,1 --suite all --mode exhaustive
    desargues verify  --quaternion --suite pappus-countermodel --seed 7 --samples 100000
    desargues witness --quaternion --seed 7 --samples 100000 --out DIR

Exit codes: 0 pass, 1 suite failure, 2 usage error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import dilation as dil
from .field_core import FiniteField, QuaternionRing, RingError
from .incidence import (
    DegenerateInputError,
    Plane,
    check_affine_axioms,
    check_desargues,
    check_pappus,
    find_pappus_violation,
    pappus_holds,
    validate_pappus,
)
from .line_algebra import (
    ConstructionError,
    add_points,
    cayley_table,
    find_noncommuting_pair,
    make_line_algebra,
    mul_points,
    verify_skewfield,
)
from .report import Report, write_atomic
from .sampling import DEFAULT_BOUND, make_rng, random_element

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
SUITES = ("axioms", "desargues", "pappus", "pappus-countermodel", "skewfield", "dilation-iso", "all")
# dilations drawn by the sampled dilation-iso suite; pairs are split among them
SAMPLED_DILATIONS = 10


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    field: Optional[tuple[int, int]]
    quaternion: bool
    suite: str = "all"
    mode: str = "exhaustive"
    seed: Optional[int] = None
    samples: int = 10_000
    rational_bound: int = DEFAULT_BOUND
    csv: Optional[str] = None
    out: Optional[str] = None
    dilation: Optional[tuple] = None  # ("homothety", V, P, P') | ("translation", P, P')

    def __post_init__(self):
        if self.quaternion == (self.field is not None):
            raise UsageError("give exactly one of --field p,k and --quaternion")
        if self.quaternion and self.mode == "exhaustive":
            raise UsageError("exhaustive mode needs a finite plane")
        if self.mode == "sampled" and self.seed is None:
            raise UsageError("sampled mode requires --seed")
        if self.samples < 0 or self.rational_bound < 1:
            raise UsageError("--samples must be >= 0 and --rational-bound >= 1")

    def plane(self) -> Plane:
        if self.quaternion:
            return Plane(QuaternionRing())
        p, k = self.field
        return Plane(FiniteField(p, k))


def _field_arg(text: str) -> tuple[int, int]:
    try:
        p, k = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p,k got {text!r}") from None
    return p, k


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="desargues", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, mode=True):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--field", type=_field_arg, metavar="p,k", help="the plane AG(2, GF(p^k))")
        g.add_argument("--quaternion", action="store_true", help="the plane over rational quaternions")
        if mode:
            sp.add_argument("--mode", choices=("exhaustive", "sampled"))
        sp.add_argument("--seed", type=int)
        sp.add_argument("--samples", type=int, default=10_000)
        sp.add_argument("--rational-bound", type=int, default=DEFAULT_BOUND)
        sp.add_argument("--csv", metavar="PATH", help="also write the report as CSV")
        sp.add_argument("--out", metavar="DIR")

    common(sub.add_parser("cayley", help="write add/mul Cayley tables of the line y = 0"), mode=False)
    v = sub.add_parser("verify", help="run verification suites")
    common(v)
    v.add_argument("--suite", choices=SUITES, default="all")
    d = v.add_mutually_exclusive_group()
    d.add_argument("--homothety", nargs=3, metavar=("V=x,y", "P=x,y", "P'=x,y"))
    d.add_argument("--translation", nargs=2, metavar=("P=x,y", "P'=x,y"))
    common(sub.add_parser("witness", help="find non-commutativity and Pappus countermodels"), mode=False)
    return ap


def _parse_dilation(args, plane: Plane):
    if getattr(args, "homothety", None):
        kind, items, names = "homothety", args.homothety, ("V", "P", "P'")
    elif getattr(args, "translation", None):
        kind, items, names = "translation", args.translation, ("P", "P'")
    else:
        return None
    pts = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or key not in names:
            raise UsageError(f"bad dilation argument {item!r}; expected one of {', '.join(n + '=' for n in names)}")
        try:
            pts[key] = plane.parse_point(val)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if set(pts) != set(names):
        raise UsageError(f"{kind} needs {' '.join(names)}")
    return (kind, *(pts[n] for n in names))


def config_from_args(args) -> RunConfig:
    mode = getattr(args, "mode", None)
    if mode is None:
        mode = "sampled" if args.quaternion or args.command == "witness" else "exhaustive"
    return RunConfig(
        field=args.field,
        quaternion=args.quaternion,
        suite=getattr(args, "suite", "all"),
        mode=mode,
        seed=args.seed,
        samples=args.samples,
        rational_bound=args.rational_bound,
        csv=args.csv,
        out=args.out,
    )


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_skewfield(cfg: RunConfig, plane: Plane) -> Report:
    K = make_line_algebra(plane)
    if cfg.mode == "exhaustive":
        rep = verify_skewfield(K.with_aux("all_and_compare"), "exhaustive")
        r = plane.ring
        add_t, mul_t = cayley_table(K, "add"), cayley_table(K, "mul")
        xs = [P.x for P in add_t.points]
        bad = ""
        for i, a in enumerate(xs):
            for j, c in enumerate(xs):
                if add_t.points[add_t.table[i, j]] != (r.add(a, c), r.zero):
                    bad = bad or f"{r.format(a)}+{r.format(c)}"
                if mul_t.points[mul_t.table[i, j]] != (r.mul(a, c), r.zero):
                    bad = bad or f"{r.format(a)}*{r.format(c)}"
        rep.add("skewfield", "coordinate-oracle", not bad, bad)
        return rep
    rep = verify_skewfield(K, "sampled", cfg.seed, cfg.samples, cfg.rational_bound)
    # auxiliary-point independence on a few pairs; 100 B's each
    Kall = K.with_aux("all_and_compare")
    rng = make_rng(cfg.seed)
    wit = ""
    for _ in range(min(cfg.samples, 20)):
        A = K.point_at(random_element(plane.ring, rng, cfg.rational_bound))
        C = K.point_at(random_element(plane.ring, rng, cfg.rational_bound))
        try:
            add_points(Kall, A, C)
            mul_points(Kall, A, C)
        except ConstructionError as exc:
            wit = str(exc)
            break
    rep.add("skewfield", "aux-independence", not wit, wit)
    return rep


def suite_dilation_iso(cfg: RunConfig, plane: Plane) -> Report:
    K = make_line_algebra(plane)
    if cfg.dilation is not None:
        kind, *pts = cfg.dilation
        delta = dil.homothety(plane, *pts) if kind == "homothety" else dil.translation(plane, *pts)
        deltas = [delta]
    elif cfg.mode == "exhaustive":
        deltas = dil.enumerate_dilations(plane)
    else:
        rng = make_rng(cfg.seed)
        deltas = [dil.random_dilation(plane, rng, cfg.rational_bound) for _ in range(SAMPLED_DILATIONS)]
    rep = Report()
    per = max(1, cfg.samples // max(1, len(deltas)))
    for n, delta in enumerate(deltas):
        if cfg.mode == "exhaustive":
            rep = rep.merge(dil.check_isomorphism(delta, K, "exhaustive"))
        else:
            rep = rep.merge(dil.check_isomorphism(delta, K, "sampled", cfg.seed + n, per, cfg.rational_bound))
    return rep


def suite_pappus_countermodel(cfg: RunConfig, plane: Plane) -> Report:
    rep = Report()
    found, used = find_pappus_violation(plane, cfg.seed if cfg.seed is not None else 0,
                                        cfg.samples, cfg.rational_bound)
    if found is None:
        rep.add("pappus-countermodel", "search", False, f"no violation in {used} draws")
        return rep
    validate_pappus(plane, found)
    ok = not pappus_holds(plane, found)
    rep.add("pappus-countermodel", "search", ok, f"draws={used} {found.describe(plane)}")
    return rep


def run_suites(cfg: RunConfig) -> Report:
    plane = cfg.plane()
    if cfg.suite == "all":
        names = ["axioms", "desargues", "pappus-countermodel" if cfg.quaternion else "pappus",
                 "skewfield", "dilation-iso"]
    else:
        names = [cfg.suite]
    kw = dict(seed=cfg.seed, samples=cfg.samples, bound=cfg.rational_bound)
    rep = Report()
    for name in names:
        if name == "axioms":
            part = check_affine_axioms(plane, cfg.mode, **kw)
        elif name == "desargues":
            part = check_desargues(plane, mode=cfg.mode, **kw)
        elif name == "pappus":
            part = check_pappus(plane, cfg.mode, **kw)
        elif name == "pappus-countermodel":
            part = suite_pappus_countermodel(cfg, plane)
        elif name == "skewfield":
            part = suite_skewfield(cfg, plane)
        else:
            part = suite_dilation_iso(cfg, plane)
        rep = rep.merge(part)
    return rep


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _out_dir(cfg: RunConfig) -> str:
    out = cfg.out or "."
    if not os.path.isdir(out):
        raise UsageError(f"output directory {out!r} does not exist")
    return out


def cmd_cayley(cfg: RunConfig) -> int:
    if cfg.quaternion:
        raise UsageError("Cayley tables need a finite plane (--field p,k)")
    out = _out_dir(cfg)
    K = make_line_algebra(cfg.plane())
    for op in ("add", "mul"):
        table = cayley_table(K, op)
        path = os.path.join(out, f"{op}.csv")
        write_atomic(path, table.to_csv())
        print(f"wrote {path}")
    return EXIT_OK


def _emit(cfg: RunConfig, rep: Report) -> None:
    sys.stdout.write(rep.to_text())
    if cfg.csv:
        write_atomic(cfg.csv, rep.to_csv())


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.csv and not os.path.isdir(os.path.dirname(os.path.abspath(cfg.csv))):
        raise UsageError(f"directory for {cfg.csv!r} does not exist")
    rep = run_suites(cfg)
    _emit(cfg, rep)
    bad = rep.first_failure()
    if bad is None:
        print("PASS")
        return EXIT_OK
    print(f"FAIL {bad.suite} {bad.case_id}: {bad.witness}")
    return EXIT_FAIL


def cmd_witness(cfg: RunConfig) -> int:
    if not cfg.quaternion:
        raise UsageError("witness search runs on the quaternion plane (--quaternion)")
    out = _out_dir(cfg)
    plane = cfg.plane()
    K = make_line_algebra(plane)
    rep = Report()
    lines = []

    pair, used = find_noncommuting_pair(K, cfg.seed, cfg.samples, cfg.rational_bound)
    if pair is not None:
        A, C = pair
        # re-verify with a second auxiliary point
        K2 = K.with_aux("explicit", plane.translate(K.B, (plane.ring.one, plane.ring.one)))
        AC, CA = mul_points(K2, A, C), mul_points(K2, C, A)
        ok = AC != CA and AC == mul_points(K, A, C)
        f = plane.format_point
        text = f"A={f(A)} C={f(C)} A*C={f(AC)} C*A={f(CA)}"
        rep.add("witness", "noncommutative-mul", ok, f"draws={used} {text}")
        lines.append(f"noncommutative-mul\t{text}")
    else:
        rep.add("witness", "noncommutative-mul", False, f"budget exhausted after {used} draws")

    cfg_p, used_p = find_pappus_violation(plane, cfg.seed, cfg.samples, cfg.rational_bound)
    if cfg_p is not None:
        validate_pappus(plane, cfg_p)
        ok = not pappus_holds(plane, cfg_p)
        rep.add("witness", "pappus-violation", ok, f"draws={used_p} {cfg_p.describe(plane)}")
        lines.append(f"pappus-violation\t{cfg_p.describe(plane)}")
    else:
        rep.add("witness", "pappus-violation", False, f"budget exhausted after {used_p} draws")

    _emit(cfg, rep)
    if pair is None or cfg_p is None:
        print("BUDGET EXHAUSTED")
        return EXIT_BUDGET
    if not rep.passed:
        return EXIT_FAIL
    path = os.path.join(out, "witness.txt")
    write_atomic(path, "\n".join(lines) + "\n")
    print(f"wrote {path}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "verify":
            plane = cfg.plane()
            dilation = _parse_dilation(args, plane)
            if dilation is not None:
                cfg = RunConfig(**{**cfg.__dict__, "dilation": dilation})
            return cmd_verify(cfg)
        if args.command == "cayley":
            return cmd_cayley(cfg)
        return cmd_witness(cfg)
    except (UsageError, RingError, DegenerateInputError) as exc:
        print(f"desargues: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
