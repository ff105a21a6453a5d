"""Command-line harness: ``sylwitt {verify,boost,witt,kernel,rep,triangle}``.

Exit codes: 0 success / all checks pass, 1 a check failed or the wrapped
library raised, 2 usage error.  Global flags may appear before or after the
subcommand; a ``--config`` file of ``key=value`` lines supplies defaults
that explicit flags override.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

import numpy as np

from . import checks
from . import electroweak as ew
from . import kernels as kn
from . import time_reps as tr
from .minkowski import Tolerance
from .transmutators import (
    GaugeTriple,
    LightlikeMomentum,
    MassiveMomentum,
    helicity_projectors,
    lorentz_boost,
    sylvester_witt,
    weyl_boost,
    witt_rotation_so3,
    witt_rotation_su2,
)

FORMATS = ("json", "csv", "text")
DEFAULTS = {"seed": 0, "cases": 1000, "tol_abs": None, "tol_rel": None, "format": None, "jobs": 1}
CONFIG_KEYS = {k.replace("_", "-"): k for k in DEFAULTS}


class UsageError(Exception):
    pass


# -- output ------------------------------------------------------------------

def _num(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return "%.17g" % x


def to_json(obj: Any) -> str:
    """Deterministic JSON: sorted keys, floats with 17 significant digits.

    Complex numbers become {"re": .., "im": ..}; arrays become nested lists.
    """
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in items) + "}"
    if isinstance(obj, np.ndarray):
        return to_json(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return to_json({"re": float(obj.real), "im": float(obj.imag)})
    return json.dumps(str(obj))


def matrix_payload(a: np.ndarray) -> Any:
    a = np.asarray(a)
    if np.iscomplexobj(a):
        return {"re": a.real, "im": a.imag}
    return a


def matrix_csv(a: np.ndarray) -> str:
    a = np.asarray(a)
    rows = []
    for row in a:
        if np.iscomplexobj(a):
            rows.append(",".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row))
        else:
            rows.append(",".join(f"{x:.17g}" for x in row))
    return "\n".join(rows) + "\n"


def matrix_text(a: np.ndarray) -> str:
    with np.printoptions(precision=6, suppress=True, linewidth=120):
        return str(np.asarray(a)) + "\n"


def render_matrices(named: dict[str, np.ndarray], fmt: str) -> str:
    if fmt == "json":
        return to_json({k: matrix_payload(v) for k, v in named.items()}) + "\n"
    render = matrix_csv if fmt == "csv" else matrix_text
    parts = []
    for k, v in named.items():
        parts.append(f"# {k}\n" + render(v))
    return "".join(parts)


def render_flat(d: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return to_json(d) + "\n"
    flat = {}

    def walk(prefix, v):
        if isinstance(v, dict):
            for k, w in sorted(v.items()):
                walk(f"{prefix}.{k}" if prefix else k, w)
        else:
            flat[prefix] = v

    walk("", d)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in flat.items():
            w.writerow([k, _num(v) if isinstance(v, float) else v])
        return buf.getvalue()
    return "".join(f"{k:24} {v:.10g}\n" if isinstance(v, float) else f"{k:24} {v}\n"
                   for k, v in flat.items())


# -- parsing -------------------------------------------------------------------

def vector3(text: str) -> np.ndarray:
    try:
        v = [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    if len(v) != 3:
        raise argparse.ArgumentTypeError(f"expected three components, got {len(v)}")
    return np.array(v)


def x0_range(text: str) -> np.ndarray:
    """START,STOP,NUM for an evenly spaced grid."""
    try:
        a, b, n = text.split(",")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START,STOP,NUM, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("NUM must be >= 1")
    return np.linspace(a, b, n)


def _global_parent(suppress: bool) -> argparse.ArgumentParser:
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    g = p.add_argument_group("global options")
    g.add_argument("--seed", type=int, default=d)
    g.add_argument("--cases", type=int, default=d, help="samples per randomized check (default 1000)")
    g.add_argument("--tol-abs", type=float, default=d, help="override absolute tolerance")
    g.add_argument("--tol-rel", type=float, default=d, help="override relative tolerance")
    g.add_argument("--format", choices=FORMATS, default=d)
    g.add_argument("--config", default=d, help="key=value file mirroring the flags")
    g.add_argument("--jobs", type=int, default=d, help="run checks on this many threads")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylwitt", description=__doc__.splitlines()[0], parents=[_global_parent(False)],
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = {"parents": [_global_parent(True)], "allow_abbrev": False}

    v = sub.add_parser("verify", **common, help="run the randomized property suite")
    v.add_argument("--check", action="append", dest="checks", metavar="NAME",
                   help="run only this check (repeatable)")
    v.add_argument("--list", action="store_true", help="list check names and exit")
    v.add_argument("--timings", action="store_true", help="include elapsed seconds in reports")

    b = sub.add_parser("boost", **common, help="Lorentz and Weyl boosts of a massive momentum")
    b.add_argument("--m", type=float, required=True)
    b.add_argument("--q", type=vector3, required=True, metavar="Q1,Q2,Q3")
    b.add_argument("--spinor", action="store_true", help="also print the SL(2,C) boost")

    w = sub.add_parser("witt", **common, help="Witt-basis transmutators of a lightlike momentum")
    w.add_argument("--q", type=vector3, required=True, metavar="Q1,Q2,Q3",
                   help="use --q=-1,0,0 when the first component is negative")

    k = sub.add_parser("kernel", **common, help="dump a mode kernel on an x0 grid")
    k.add_argument("--species", required=True,
                   choices=("massive", "massive-embedded", "spinor", "rest", "witt",
                            "transverse", "lightlike"))
    k.add_argument("--q", type=vector3, default=np.array([0.0, 0.0, 1.0]), metavar="Q1,Q2,Q3")
    k.add_argument("--m", type=float, default=1.0)
    k.add_argument("--lam", type=float, default=None)
    k.add_argument("--mu2", type=float, default=1.0)
    k.add_argument("--eps-sigma2", type=float, default=None, help="default: Feynman point -mu2")
    k.add_argument("--variant", default=None,
                   help="commutator|fock (massive, transverse), anticommutator|commutator (spinor)")
    k.add_argument("--x0", type=x0_range, default=None, metavar="START,STOP,NUM",
                   help="default: 0 to one period, 9 points")
    k.add_argument("--classify", action="store_true", help="print pole/dipole/zero labels instead")

    r = sub.add_parser("rep", **common, help="time-representation matrices")
    r.add_argument("--kind", required=True,
                   choices=("u11", "generator", "oscillator", "oscillator-fock", "two-position"))
    r.add_argument("--t", type=float, default=0.0)
    r.add_argument("--omega", type=float, default=1.0)
    r.add_argument("--M0", type=float, default=1.0)
    r.add_argument("--M", type=float, default=1.0)
    r.add_argument("--M-prime", type=float, default=1.0)
    r.add_argument("--k", type=float, default=1.0)

    t = sub.add_parser("triangle", **common, help="solve the electroweak triangle")
    for flag, dest in (("--mz", "m_Z"), ("--me", "m_e"), ("--mw", "m_W"), ("--my", "m_Y")):
        t.add_argument(flag, dest=dest, type=float)
    t.add_argument("--theta-w", dest="theta_w", type=float, help="radians")
    t.add_argument("--fermi-mass", type=float, default=123.0)
    t.add_argument("--complementary", action="store_true",
                   help="take theta_w > pi/4 when m_Z and m_e leave it ambiguous")
    return parser


def read_config(path: str) -> dict[str, Any]:
    out: dict[str, Any] = {}
    try:
        lines = open(path, encoding="utf-8").read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        key = key.lstrip("-")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{n}: expected one of {sorted(CONFIG_KEYS)} as key=value")
        out[CONFIG_KEYS[key]] = value
    return out


def resolve_globals(args: argparse.Namespace) -> dict[str, Any]:
    """Flags override the config file, which overrides built-in defaults."""
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    casts = {"seed": int, "cases": int, "tol_abs": float, "tol_rel": float, "format": str, "jobs": int}
    out = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, key, None)
        if flag is not None:
            out[key] = flag
        elif key in cfg:
            try:
                out[key] = casts[key](cfg[key])
            except ValueError:
                raise UsageError(f"config value for {key} is not a valid {casts[key].__name__}")
        else:
            out[key] = default
    if out["format"] is not None and out["format"] not in FORMATS:
        raise UsageError(f"format must be one of {FORMATS}")
    if out["cases"] < 1:
        raise UsageError("--cases must be >= 1")
    if out["jobs"] < 1:
        raise UsageError("--jobs must be >= 1")
    for key in ("tol_abs", "tol_rel"):
        if out[key] is not None and not out[key] >= 0:
            raise UsageError(f"--{key.replace('_', '-')} must be non-negative")
    return out


# -- commands ------------------------------------------------------------------

def cmd_verify(args, g) -> tuple[str, int]:
    if args.list:
        return "".join(f"{name}\n" for name in sorted(checks.REGISTRY)), 0
    names = args.checks
    if names:
        missing = sorted(set(names) - set(checks.REGISTRY))
        if missing:
            raise UsageError(f"unknown checks {missing}; see verify --list")
    tol = None
    if g["tol_abs"] is not None or g["tol_rel"] is not None:
        tol = Tolerance(g["tol_abs"] or 0.0, g["tol_rel"] or 0.0)
    fmt = g["format"] or "json"
    cfg = checks.VerifyConfig(g["seed"], g["cases"], tol, fmt, g["jobs"])
    reports = checks.run_verify(cfg, names)
    ok = all(r.passed for r in reports)
    if fmt == "json":
        payload = {
            "all_passed": ok,
            "cases": cfg.cases,
            "checks": [r.as_dict(args.timings) for r in reports],
            "seed": cfg.seed,
        }
        text = to_json(payload) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["check_name", "passed", "max_residual", "tolerance"] + (["elapsed"] if args.timings else [])
        w.writerow(cols)
        for r in reports:
            row = [r.check_name, str(r.passed).lower(), _num(r.max_residual), _num(r.tolerance)]
            w.writerow(row + ([_num(r.elapsed)] if args.timings else []))
        text = buf.getvalue()
    else:
        lines = []
        for r in reports:
            extra = f"  {r.elapsed:.2f}s" if args.timings else ""
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.check_name:44} "
                         f"{r.max_residual:.3e} <= {r.tolerance:.1e}{extra}")
        lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
        text = "\n".join(lines) + "\n"
    return text, 0 if ok else 1


def cmd_boost(args, g):
    p = MassiveMomentum(args.m, args.q)
    named = {"lorentz": lorentz_boost(p)}
    if args.spinor:
        named["weyl"] = weyl_boost(p)
    return render_matrices(named, g["format"] or "json"), 0


def cmd_witt(args, g):
    q = LightlikeMomentum(args.q)
    pp, pm = helicity_projectors(q)
    named = {
        "u": witt_rotation_su2(q),
        "O": witt_rotation_so3(q),
        "H": sylvester_witt(q),
        "p_plus": pp,
        "p_minus": pm,
    }
    return render_matrices(named, g["format"] or "json"), 0


def _kernel(args) -> kn.ModeKernel:
    sp, v = args.species, args.variant
    if sp in ("massive", "massive-embedded"):
        p = kn.MassiveVectorParams(args.m, args.lam)
        return kn.massive_vector_kernel(p, args.q, v or "commutator", embedded=sp.endswith("embedded"))
    if sp == "spinor":
        return kn.massless_spinor_kernel(args.q, v or "anticommutator")
    es = -args.mu2 if args.eps_sigma2 is None else args.eps_sigma2
    gauge = GaugeTriple(args.mu2, es)
    if sp == "rest":
        return kn.massless_vector_rest_kernel(args.q, gauge)
    q0 = LightlikeMomentum(args.q).q0
    if sp == "transverse":
        return kn.transverse_kernel(q0, gauge, v or "commutator")
    return {"witt": kn.witt_kernel, "lightlike": kn.lightlike_kernel}[sp](q0, gauge)


def cmd_kernel(args, g):
    k = _kernel(args)
    fmt = g["format"] or "csv"
    if args.classify:
        labels = kn.ode_order_check(k, k.q0)
        if fmt == "json":
            return to_json({"labels": labels.tolist(), "q0": k.q0, "species": k.species}) + "\n", 0
        return "".join(",".join(row) + "\n" for row in labels), 0
    x0 = args.x0 if args.x0 is not None else np.linspace(0.0, 2 * np.pi / k.q0, 9)
    if fmt == "csv":
        return kn.kernel_csv(k, x0), 0
    if fmt == "json":
        vals = np.array([k(x) for x in x0], dtype=complex)
        return to_json({"species": k.species, "variant": k.variant, "q0": k.q0, "x0": x0,
                        "re": vals.real, "im": vals.imag}) + "\n", 0
    return "".join(f"x0 = {x:.6g}\n" + matrix_text(k(x)) for x in x0), 0


def cmd_rep(args, g):
    kind = args.kind
    if kind in ("u11", "generator"):
        p = tr.IndefiniteRepParams(args.omega, args.M0)
        mat = tr.u11_matrix(args.t, p) if kind == "u11" else tr.u11_generator(p)
    elif kind.startswith("oscillator"):
        p = tr.OscillatorParams(args.M, args.k)
        mat = tr.oscillator_kernel(args.t, p, "fock" if kind.endswith("fock") else "commutator")
    else:
        mat = tr.two_position_kernel(args.t, tr.TwoPositionParams(args.M, args.M_prime, args.k))
    return render_matrices({kind: mat}, g["format"] or "json"), 0


def cmd_triangle(args, g):
    masses = {k: getattr(args, k) for k in ("m_Z", "m_e", "m_W", "m_Y", "theta_w")}
    tri = ew.triangle_from_masses(args.fermi_mass, args.complementary, **masses)
    spectrum = ew.mass_spectrum(tri, args.fermi_mass)
    rel = ew.weinberg_relations(spectrum)
    out = dict(tri.as_dict())
    out.update(masses=spectrum.as_dict(), sin2theta=rel["sin2theta"], alpha_e=rel["alpha_e"],
               fermi_mass=args.fermi_mass, tension=ew.coupling_tension(spectrum))
    return render_flat(out, g["format"] or "json"), 0


COMMANDS = {
    "verify": cmd_verify,
    "boost": cmd_boost,
    "witt": cmd_witt,
    "kernel": cmd_kernel,
    "rep": cmd_rep,
    "triangle": cmd_triangle,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    try:
        g = resolve_globals(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sylwitt: error: {exc}", file=sys.stderr)
        return 2
    try:
        text, code = COMMANDS[args.command](args, g)
    except UsageError as exc:
        print(f"sylwitt: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, tr.QuadratureError) as exc:
        print(f"sylwitt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
