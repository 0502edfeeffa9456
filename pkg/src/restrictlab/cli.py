"""Command-line front end: ``restrict-lab <command> [flags]``.

Every command prints one JSON document (sorted keys, UTF-8) to stdout or to
``--json PATH`` and may write CSV/SVG artifacts.  Exit status: 0 success,
2 validation error, 3 numerical warning escalated by ``--strict``.

Settings are resolved as command-line flag > ``--config`` JSON > default.
A config file may hold flat keys and/or a section named after the command;
the section wins over flat keys.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
import warnings
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from . import __version__

log = logging.getLogger("restrictlab")

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- parsing helpers


def exponent(text) -> float:
    """'3/2', '1.5' or 'inf' -> float."""
    s = str(text).strip().lower()
    if s in ("inf", "infinity"):
        return math.inf
    try:
        return float(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exponent: {text!r}") from exc


def exponent_exact(text):
    s = str(text).strip().lower()
    return "inf" if s in ("inf", "infinity") else Fraction(s)


def float_list(text) -> List[float]:
    if isinstance(text, (list, tuple)):
        return [float(Fraction(str(v))) for v in text]
    return [float(Fraction(v)) for v in str(text).replace(",", " ").split()]


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (complex, np.complexfloating)):
        return {"re": _jsonable(float(x.real)), "im": _jsonable(float(x.imag))}
    if isinstance(x, (np.floating, float)):
        v = float(x)
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        if math.isnan(v):
            return "nan"
        return v
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, Fraction):
        return str(x)
    return x


def dump_json(doc: dict) -> str:
    return json.dumps(_jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _svg_setup():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    plt.rcParams["svg.hashsalt"] = "restrictlab"
    plt.rcParams["svg.fonttype"] = "none"
    return plt


def _save_svg(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None})


# ---------------------------------------------------------------- commands
#
# Each command: (defaults, add_arguments, handler).  Handlers receive the
# resolved settings dict and return the JSON document.

COMMANDS: Dict[str, dict] = {}


def command(name: str, defaults: dict, help: str):
    def deco(fn):
        COMMANDS[name] = {"defaults": defaults, "handler": fn, "help": help}
        return fn
    return deco


def _params(cfg):
    from .symgeom import SymmetryParams
    return SymmetryParams(int(cfg["d"]), int(cfg["k"]))


def _quad(cfg):
    from .quadrature import QuadratureSpec
    return QuadratureSpec(int(cfg["cap_nodes"]), float(cfg["radius"]), int(cfg["space_nodes"]),
                          float(cfg["tol"]))


QUAD_DEFAULTS = {"cap_nodes": 128, "radius": 200.0, "space_nodes": 512, "tol": 1e-6}


def _gaussian_profile(radius: float = 12.0, nodes: int = 256):
    from .symgeom import RadialGrid, RadialProfile2D
    g = RadialGrid.default(radius, nodes)
    return RadialProfile2D.from_function(lambda a, b: np.exp(-0.5 * (a * a + b * b)), g, g)


def _load_profile(cfg):
    from .symgeom import RadialProfile2D
    if cfg.get("profile"):
        f, p = RadialProfile2D.from_csv(cfg["profile"])
        return f, p
    return _gaussian_profile(), None


@command("bessel-check", {"nu": [0.0, 0.5, 1.0, 1.5, 2.0, 2.5], "x_max": 1e4, "points": 4000},
         "split J_nu = principal + remainder; envelope constants and branch agreement")
def cmd_bessel(cfg):
    from scipy.special import jv
    from ._bessel import jv_kernel
    from .specfun import bessel_split, remainder_envelope_constant
    x = np.geomspace(1e-3, float(cfg["x_max"]), int(cfg["points"]))
    out = {}
    for nu in float_list(cfg["nu"]):
        split_err = max(abs(bessel_split(nu, float(r)).value - float(jv_kernel(nu, np.array([r]))[0]))
                        for r in x[:: max(1, x.size // 200)])
        ref = jv(nu, x)
        rel = np.abs(jv_kernel(nu, x) - ref) / np.maximum(np.abs(ref), 1e-300)
        out[str(nu)] = {
            "split_max_error": split_err,
            "envelope_constant": remainder_envelope_constant(nu, x),
            "envelope_constant_refined": remainder_envelope_constant(nu, np.geomspace(1e-3, float(cfg["x_max"]), 2 * x.size)),
            "max_abs_error_vs_scipy": float(np.max(np.abs(jv_kernel(nu, x) - ref))),
            "median_rel_error_vs_scipy": float(np.median(rel)),
        }
    return {"results": out, "citations": ["bessel-split: principal Hankel term plus remainder",
                                          "remainder envelope r^nu (1+r)^(-nu-3/2)"]}


@command("extend", {"d": 4, "k": 2, "const": False, "cap_profile": None, "at": None, "grid": 0,
                    "grid_radius": 30.0, "cap_nodes": 96, "csv": None, "svg": None},
         "extension F^sigma of a cap profile at points or on a grid")
def cmd_extend(cfg):
    from .symgeom import CapProfile
    from .transforms import extension_grid, extension_operator
    params = _params(cfg)
    n = int(cfg["cap_nodes"])
    if cfg.get("cap_profile"):
        data = np.loadtxt(cfg["cap_profile"], delimiter=",", skiprows=1, ndmin=2)
        # columns r, re, im: interpolate in r onto the cap rule
        r_rule, _ = CapProfile.rule(params, n)
        re = np.interp(r_rule, data[:, 0], data[:, 1])
        im = np.interp(r_rule, data[:, 0], data[:, 2]) if data.shape[1] > 2 else 0.0
        F = CapProfile.constant(params, n).with_values(re + 1j * im)
    else:
        F = CapProfile.constant(params, n)
    doc: Dict[str, Any] = {"params": {"d": params.d, "k": params.k}, "profile": "constant" if not cfg.get("cap_profile") else cfg["cap_profile"],
                           "citations": ["slice integration over |eta|", "extension as a two-Bessel kernel integral"]}
    pts = cfg.get("at")
    if pts:
        arr = np.asarray(pts, dtype=float).reshape(-1, 2)
        vals = extension_operator(F, arr[:, 0], arr[:, 1])
        doc["points"] = [{"y": a, "z": b, "value": complex(v)} for (a, b), v in zip(arr, np.atleast_1d(vals))]
        if len(doc["points"]) == 1:
            doc["value"] = doc["points"][0]["value"]
    if int(cfg["grid"]) > 0:
        g = np.linspace(0.0, float(cfg["grid_radius"]), int(cfg["grid"]))
        field = extension_grid(F, g, g)
        doc["grid_max_abs"] = float(np.max(np.abs(field.values)))
        if cfg.get("csv"):
            field.to_csv(cfg["csv"], {"d": params.d, "k": params.k})
        if cfg.get("svg"):
            plt = _svg_setup()
            fig, ax = plt.subplots(figsize=(5, 4))
            im = ax.imshow(np.abs(field.values).T, origin="lower", extent=(g[0], g[-1], g[0], g[-1]), aspect="auto")
            fig.colorbar(im, ax=ax, label="|F^sigma|")
            ax.set_xlabel("|y|")
            ax.set_ylabel("|z|")
            _save_svg(fig, cfg["svg"])
            plt.close(fig)
    if not pts and int(cfg["grid"]) <= 0:
        raise UsageError("extend needs --at Y Z or --grid N")
    return doc


@command("transform", {"d": 4, "k": 2, "profile": None, "at": None, "split": False, "p": 1.5, **QUAD_DEFAULTS},
         "symmetric Fourier transform of a radial profile (Gaussian by default)")
def cmd_transform(cfg):
    from .transforms import f4_via_R, split_transform, symmetric_fourier
    params = _params(cfg)
    f, pfile = _load_profile(cfg)
    if pfile is not None and (pfile.d, pfile.k) != (params.d, params.k):
        raise UsageError("profile metadata disagrees with --d/--k")
    pts = cfg.get("at")
    if not pts:
        raise UsageError("transform needs --at ETA ZETA")
    arr = np.asarray(pts, dtype=float).reshape(-1, 2)
    quad = _quad(cfg)
    vals = np.atleast_1d(symmetric_fourier(f, arr[:, 0], arr[:, 1], params, quad))
    doc = {"params": {"d": params.d, "k": params.k}, "profile": cfg.get("profile") or "gaussian",
           "points": [{"eta": a, "zeta": b, "value": complex(v)} for (a, b), v in zip(arr, vals)],
           "citations": ["slice-reduced Fourier transform with two Bessel kernels"]}
    if cfg.get("split"):
        pieces = []
        for a, b in arr:
            st = split_transform(f, a, b, params, quad)
            pieces.append({"eta": a, "zeta": b, "pieces": [complex(v) for v in st.pieces],
                           "reconstructed": complex(st.reconstruct()),
                           "f4_via_R": f4_via_R(f, a, b, params, float(cfg["p"]), quad=quad)})
        doc["split"] = pieces
        doc["citations"].append("principal/remainder split of both Bessel factors")
    return doc


@command("norm", {"d": 4, "k": 2, "profile": None, "p": 2.0, "s": None, "tol": 1e-6},
         "L^p or Lorentz L^{p,s} norm of a symmetric function on R^d")
def cmd_norm(cfg):
    from .symgeom import LorentzExponent, lorentz_norm, lp_norm_2d
    params = _params(cfg)
    f, _ = _load_profile(cfg)
    p = float(cfg["p"])
    doc = {"params": {"d": params.d, "k": params.k}, "p": p, "profile": cfg.get("profile") or "gaussian",
           "citations": ["slice integration with measure rho1^(d-k-1) rho2^(k-1)"]}
    if cfg.get("s") is None:
        doc["norm"] = lp_norm_2d(f, p, params, float(cfg["tol"]))
    else:
        s = float(cfg["s"])
        m1 = f.grid1.weights * f.nodes1 ** (params.d - params.k - 1)
        m2 = f.grid2.weights * f.nodes2 ** (params.k - 1)
        doc["s"] = s
        doc["norm"] = lorentz_norm(f.values, params.slice_constant * m1[:, None] * m2[None, :], LorentzExponent(p, s))
    return doc


@command("maximize", {"d": 4, "k": 2, "p": 10 / 7, "max_iters": 200, "restarts": 8, "seed": 0,
                      "csv": None, "svg": None, "stability": True, **QUAD_DEFAULTS},
         "power-iteration search for the symmetric extension constant")
def cmd_maximize(cfg):
    from .optimize import maximize
    params = _params(cfg)
    p = float(cfg["p"])
    run = maximize(params, p, _quad(cfg), int(cfg["max_iters"]), int(cfg["restarts"]), int(cfg["seed"]),
                   jobs=cfg.get("jobs"), check_stability=bool(cfg["stability"]))
    doc = run.to_dict()
    doc["citations"] = ["extension quotient ||F^sigma||_p' / ||F||_2",
                        "existence range 1 <= p < 2(d+m)/(d+m+2)"]
    if cfg.get("csv"):
        import csv
        with open(cfg["csv"], "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["r", "re", "im"])
            for r, v in zip(run.iterate.nodes, run.iterate.values):
                w.writerow([repr(float(r)), repr(float(v.real)), repr(float(v.imag))])
    if cfg.get("svg"):
        plt = _svg_setup()
        fig, ax = plt.subplots(figsize=(5, 3.5))
        ax.plot(run.iterate.nodes, np.abs(run.iterate.values), "-o", ms=2)
        ax.set_xlabel("r = |eta|")
        ax.set_ylabel("|F0(r)|")
        ax.set_title(f"d={params.d}, k={params.k}, p={p:.6g}: {run.objective:.6g}")
        _save_svg(fig, cfg["svg"])
        plt.close(fig)
    return doc


@command("duality", {"d": 4, "k": 2, "p": 10 / 7, "profile": None, "const": False, **QUAD_DEFAULTS},
         "pairing <f, F^sigma> against <f^|_S, F> and the dual-objective bound")
def cmd_duality(cfg):
    from .optimize import duality_check
    from .symgeom import CapProfile
    params = _params(cfg)
    f, _ = _load_profile(cfg)
    F = CapProfile.constant(params, int(cfg["cap_nodes"])) if cfg.get("const") else None
    rep = duality_check(params, float(cfg["p"]), f, F, _quad(cfg))
    doc = rep.to_dict()
    doc["citations"] = ["restriction/extension adjointness", "Holder: primal quotient <= dual objective"]
    return doc


def _sweep_artifacts(fit, cfg, title):
    from .sharpness import write_sweep_csv
    if cfg.get("csv"):
        write_sweep_csv(cfg["csv"], fit)
    if cfg.get("svg"):
        plt = _svg_setup()
        fig, ax = plt.subplots(figsize=(5, 3.5))
        x, y = np.log(fit.deltas), np.log(fit.quotients)
        ax.plot(x, y, "o", label="quotient")
        c = np.polyfit(x, y, 1)
        ax.plot(x, np.polyval(c, x), "-", label=f"fit slope {c[0]:.3f}")
        ax.set_xlabel("log delta")
        ax.set_ylabel("log quotient")
        ax.set_title(title)
        ax.legend()
        _save_svg(fig, cfg["svg"])
        plt.close(fig)


@command("knapp-sweep", {"d": 4, "k": 2, "p": 1.5, "q": 2.0, "deltas": None, "csv": None, "svg": None},
         "Knapp-cap quotient over a delta sweep with slope fit")
def cmd_knapp(cfg):
    from .sharpness import KnappConfig, slope_fit
    deltas = float_list(cfg["deltas"]) if cfg.get("deltas") else None
    kc = KnappConfig(0.1, int(cfg["d"]), int(cfg["k"]), float(cfg["p"]), float(cfg["q"]))
    fit = slope_fit(kc, deltas, jobs=cfg.get("jobs") or 1)
    _sweep_artifacts(fit, cfg, f"Knapp d={kc.d} k={kc.k}")
    doc = fit.to_dict()
    doc["citations"] = [f"knapp regime {fit.regime}", "cap measure ~ delta^(d-k)"]
    doc["c"], doc["j0"] = kc.c, kc.j0
    return doc


@command("g1-knapp", {"d": 4, "p": 10 / 7, "q": 2.0, "deltas": None, "csv": None, "svg": None},
         "Knapp construction for G_1-symmetric functions")
def cmd_g1(cfg):
    from .sharpness import g1_knapp
    deltas = float_list(cfg["deltas"]) if cfg.get("deltas") else None
    fit = g1_knapp(deltas, int(cfg["d"]), float(cfg["p"]), float(cfg["q"]), jobs=cfg.get("jobs") or 1)
    _sweep_artifacts(fit, cfg, f"G1 Knapp d={cfg['d']}")
    doc = fit.to_dict()
    doc["citations"] = ["G_1 Knapp exponent (d+1)/p+(d-1)/q-d-1"]
    return doc


@command("radial-tail", {"d": 4, "p_prime": 3.0, "eta": 0.01},
         "does sigma_hat lie in L^p'(R^d)?")
def cmd_radial(cfg):
    from .sharpness import radial_tail
    tv = radial_tail(int(cfg["d"]), float(cfg["p_prime"]), eta=float(cfg["eta"]))
    doc = tv.to_dict()
    doc["citations"] = ["sigma_hat in L^p' iff p' > 2d/(d-1)"]
    return doc


@command("op-probe", {"op": "T", "p": 2.0, "q": 2.0, "a": 0.75, "b": 0.25, "ell": 1.0, "alpha": 0.5,
                      "beta": 0.5, "trials": 10, "seed": 0, "family": "random", "eps": 0.1},
         "empirical norm ratios of the weighted one-dimensional operators")
def cmd_probe(cfg):
    from .weightedops import WeightedOpParams, norm_probe
    prm = WeightedOpParams(float(cfg["a"]), float(cfg["b"]), float(cfg["ell"]), float(cfg["alpha"]), float(cfg["beta"]))
    rep = norm_probe(str(cfg["op"]), float(cfg["p"]), float(cfg["q"]), prm, int(cfg["trials"]),
                     int(cfg["seed"]), str(cfg["family"]), float(cfg["eps"]))
    doc = rep.to_dict()
    doc["citations"] = [f"{cfg['op']} hypotheses: " + ", ".join(k for k, v in rep.hypotheses.items() if v)]
    return doc


@command("oscillatory", {"gamma": 0.5, "a": 1.0, "lam": 1.0},
         "int_a^inf r^-gamma e^{i lam r} dr and its bound ratio")
def cmd_osc(cfg):
    from .weightedops import oscillatory_bound_ratio, oscillatory_integral
    g, a, lam = float(cfg["gamma"]), float(cfg["a"]), float(cfg["lam"])
    if not -2 <= lam <= 2:
        raise UsageError("lambda must lie in [-2, 2]")
    val = oscillatory_integral(g, a, lam)
    return {"gamma": g, "a": a, "lambda": lam, "value": val,
            "bound_ratio": oscillatory_bound_ratio(g, a, lam),
            "bound": "lambda^(gamma-1)" if g < 1 else "a^(1-gamma)",
            "citations": ["oscillatory tail bound"]}


@command("riesz", {"d": 4, "k": 2, "p": "3/2", "q": "2", "diagram": 0, "svg": None},
         "classify (1/p, 1/q) for the symmetric restriction problem")
def cmd_riesz(cfg):
    from .rieszmap import classify, diagram, diagram_svg, landmarks
    params = _params(cfg)
    v = classify(params, exponent_exact(cfg["p"]), exponent_exact(cfg["q"]))
    doc = {"params": {"d": params.d, "k": params.k, "m": params.m}, "p": str(cfg["p"]), "q": str(cfg["q"]),
           "verdict": v.status, "citations": v.citations, "inv_p": v.inv_p, "inv_q": v.inv_q,
           "landmarks": {k: str(x) for k, x in landmarks(params).abscissas().items()}}
    res = int(cfg.get("diagram") or 0)
    if res:
        dg = diagram(params, res)
        doc["diagram"] = {"resolution": res, "counts": dg.counts(), "conflicts": dg.conflicts}
        if cfg.get("svg"):
            diagram_svg(dg, cfg["svg"])
    return doc


# ---------------------------------------------------------------- argparse


def _add_flags(sp: argparse.ArgumentParser, name: str):
    # every flag defaults to None so we can tell "given" from "not given"
    opt = {"default": None}
    has = COMMANDS[name]["defaults"]
    if "d" in has:
        sp.add_argument("--d", type=int, **opt)
    if "k" in has:
        sp.add_argument("--k", type=int, **opt)
    for key in ("p", "q"):
        if key in has:
            sp.add_argument(f"--{key}", type=str if name == "riesz" else exponent, **opt)
    simple = {
        "s": exponent, "p_prime": exponent, "tol": float, "cap_nodes": int, "radius": float,
        "space_nodes": int, "max_iters": int, "restarts": int, "seed": int, "trials": int,
        "a": float, "b": float, "ell": float, "alpha": float, "beta": float, "gamma": float,
        "lam": float, "eta": float, "eps": float, "x_max": float, "points": int, "grid": int,
        "grid_radius": float, "diagram": int, "op": str, "family": str, "profile": str,
        "cap_profile": str, "csv": str, "svg": str, "deltas": str, "nu": str,
    }
    for key, typ in simple.items():
        if key in has:
            flag = "--" + key.replace("_", "-")
            if key == "lam":
                sp.add_argument("--lam", "--lambda", dest="lam", type=typ, **opt)
            else:
                sp.add_argument(flag, dest=key, type=typ, **opt)
    if "at" in has:
        sp.add_argument("--at", nargs=2, type=float, action="append", metavar=("A", "B"), default=None)
    for key in ("const", "split"):
        if key in has:
            sp.add_argument(f"--{key}", action="store_true", default=None)
    if "stability" in has:
        sp.add_argument("--no-stability", dest="stability", action="store_false", default=None)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (flags override it)")
    common.add_argument("--json", dest="json_out", help="write the JSON result here instead of stdout")
    common.add_argument("--strict", action="store_true", help="turn numerical warnings into exit status 3")
    common.add_argument("--jobs", type=int, default=None, help="worker threads (env RESTRICT_LAB_JOBS)")
    common.add_argument("-v", "--verbose", action="count", default=0)
    ap = argparse.ArgumentParser(prog="restrict-lab", description="symmetric Fourier restriction toolkit")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")
    for name, spec in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=spec["help"], description=spec["help"])
        _add_flags(sp, name)
    return ap


def _load_config(path: Optional[str], name: str) -> dict:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError("config must be a JSON object")
    norm = lambda d: {str(k).replace("-", "_"): v for k, v in d.items() if not isinstance(v, dict)}
    out = norm(raw)
    if isinstance(raw.get(name), dict):
        out.update(norm(raw[name]))
    return out


def resolve(name: str, ns: argparse.Namespace) -> dict:
    """flags > config file > defaults."""
    defaults = COMMANDS[name]["defaults"]
    conf = _load_config(ns.config, name)
    unknown = set(conf) - set(defaults) - {"jobs", "strict"}
    if unknown:
        raise UsageError(f"unknown config keys for {name}: {sorted(unknown)}")
    cfg = dict(defaults)
    cfg.update(conf)
    for key in defaults:
        v = getattr(ns, key, None)
        if v is not None:
            cfg[key] = v
    if ns.jobs is not None:
        cfg["jobs"] = ns.jobs
    elif "jobs" in conf:
        cfg["jobs"] = int(conf["jobs"])
    else:
        from .optimize import default_jobs
        cfg["jobs"] = default_jobs()
    if cfg["jobs"] is not None and int(cfg["jobs"]) < 1:
        raise UsageError("--jobs must be >= 1")
    return cfg


def run(argv: Optional[List[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.WARNING - 10 * min(ns.verbose, 2), format="%(levelname)s %(name)s: %(message)s")
    name = ns.command
    caught: List[warnings.WarningMessage] = []
    try:
        cfg = resolve(name, ns)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            doc = COMMANDS[name]["handler"](cfg)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"restrict-lab {name}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    numeric = [w for w in caught if issubclass(w.category, RuntimeWarning)]
    doc = dict(doc)
    doc["command"] = name
    doc["warnings"] = sorted({f"{w.category.__name__}: {w.message}" for w in numeric})
    doc["settings"] = {k: v for k, v in cfg.items() if k not in ("csv", "svg", "jobs")}
    text = dump_json(doc)
    if ns.json_out:
        with open(ns.json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    for w in doc["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    if ns.strict and numeric:
        return EXIT_NUMERIC
    return EXIT_OK


def main() -> None:  # console entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
