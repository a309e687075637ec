"""Command-line front end: single-shot designs, sweeps, and oracle verification.

Settings resolve in precedence order: command-line flag, config file entry,
SECJAM_SEED (seed only), built-in default.  The config file is flat
``key = value`` text whose keys are the long flag names with dashes replaced
by underscores; ``#`` starts a comment.  All dBm inputs convert to linear
milliwatts once, here at the boundary.

Exit codes: 0 success, 1 infeasible design / verification failure / I/O
error, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, backend
from .channel import ChannelParams, dbm_to_mw, mw_to_dbm, realize
from .design import (
    Mode,
    PowerMinProblem,
    RateMaxProblem,
    design_power_min,
    design_rate_max,
)
from .sim import (
    DEFAULT_D_SE_VALUES,
    SweepConfig,
    effective_geometry,
    run_sweep,
    trial_rng,
    write_csv,
)

__all__ = ["main"]

_DEFAULTS = {
    "d_sd": 50.0,
    "d_sr": 25.0,
    "d_se": 40.0,
    "d_se_range": "10:90:5",
    "alpha": 3.5,
    "sigma2_dbm": -100.0,
    "p0_dbm": -40.0,
    "rs0": 1.0,
    "n": [2, 4],
    "trials": 1000,
    "seed": 0,
    "out": "sweep.csv",
    "mode": "ratemax",
    "verbose": False,
}


class ConfigError(Exception):
    pass


def _parse_int_list(text: str) -> list[int]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty list")
    return [int(p) for p in parts]


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


_CONFIG_PARSERS = {
    "d_sd": float, "d_sr": float, "d_se": float, "d_se_range": str,
    "alpha": float, "sigma2_dbm": float, "p0_dbm": float, "rs0": float,
    "n": _parse_int_list, "trials": int, "seed": int, "out": str,
    "mode": str, "verbose": _parse_bool,
}


def load_config(path: str) -> dict:
    """Parse a flat key = value config file."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_PARSERS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _CONFIG_PARSERS[key](value)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


def parse_d_se_range(text: str) -> tuple[float, ...]:
    """Parse lo:hi:step into an inclusive tuple of positions."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected lo:hi:step, got {text!r}")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0.0 or hi < lo:
        raise ValueError(f"bad range {text!r}")
    values = []
    k = 0
    while True:
        d = lo + k * step
        if d > hi + 1e-9 * step:
            break
        values.append(d)
        k += 1
    return tuple(values)


def _add_common(parser):
    parser.add_argument("--config", help="flat key = value settings file")
    parser.add_argument("--seed", type=int, help="64-bit RNG seed")
    parser.add_argument("--verbose", action="store_true", default=None)
    parser.add_argument("--d-sd", type=float, dest="d_sd",
                        help="source-destination distance (m)")
    parser.add_argument("--d-sr", type=float, dest="d_sr",
                        help="source-relay distance (m)")
    parser.add_argument("--alpha", type=float, help="path-loss exponent")
    parser.add_argument("--sigma2-dbm", type=float, dest="sigma2_dbm",
                        help="noise power (dBm)")
    parser.add_argument("--n", type=int, action="append",
                        help="relay antenna count (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secjam",
        description="Null-steering cooperative jamming designs and sweeps")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design-ratemax",
                       help="one-shot secrecy-rate maximization")
    _add_common(p)
    p.add_argument("--d-se", type=float, dest="d_se",
                   help="source-eavesdropper distance (m)")
    p.add_argument("--p0-dbm", type=float, dest="p0_dbm",
                   help="total power budget (dBm)")

    p = sub.add_parser("design-powermin",
                       help="one-shot total-power minimization")
    _add_common(p)
    p.add_argument("--d-se", type=float, dest="d_se",
                   help="source-eavesdropper distance (m)")
    p.add_argument("--rs0", type=float, help="secrecy-rate target (b/s/Hz)")

    p = sub.add_parser("sweep", help="Monte Carlo eavesdropper-position sweep")
    _add_common(p)
    p.add_argument("--mode", choices=("ratemax", "powermin"))
    p.add_argument("--d-se-range", dest="d_se_range",
                   help="positions as lo:hi:step (m)")
    p.add_argument("--p0-dbm", type=float, dest="p0_dbm")
    p.add_argument("--rs0", type=float)
    p.add_argument("--trials", type=int)
    p.add_argument("--out", help="output CSV path")

    p = sub.add_parser("verify", help="run the brute-force oracle suite")
    _add_common(p)
    p.add_argument("--trials", type=int,
                   help="realizations per (position, antennas) cell")
    return parser


def _resolve(args) -> tuple[dict, set]:
    """Merge flags over config file over env seed over defaults.

    Also reports which keys were set explicitly (flag or config), so the
    design subcommands can tell a requested antenna list from the sweep
    default.
    """
    cfg = dict(_DEFAULTS)
    explicit = set()
    env_seed = os.environ.get("SECJAM_SEED")
    if env_seed is not None:
        try:
            cfg["seed"] = int(env_seed)
        except ValueError as exc:
            raise ConfigError(f"bad SECJAM_SEED: {env_seed!r}") from exc
    if getattr(args, "config", None):
        from_file = load_config(args.config)
        cfg.update(from_file)
        explicit |= set(from_file)
    for key in _DEFAULTS:
        flag_val = getattr(args, key, None)
        if flag_val is not None:
            cfg[key] = flag_val
            explicit.add(key)
    return cfg, explicit


def _single_n(cfg, explicit) -> int:
    if "n" not in explicit:
        return 2
    n = cfg["n"]
    if isinstance(n, int):
        return n
    if len(n) != 1:
        raise ConfigError("design subcommands take a single --n")
    return n[0]


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _cmd_design(cfg, explicit, ratemax: bool) -> int:
    n = _single_n(cfg, explicit)
    sigma2 = dbm_to_mw(cfg["sigma2_dbm"])
    geom = effective_geometry(cfg["d_sd"], cfg["d_sr"], cfg["d_se"])
    params = ChannelParams(alpha=cfg["alpha"], sigma2=sigma2, n=n)
    csi = realize(geom, params, trial_rng(cfg["seed"], 0, n, 0))
    name = "design-ratemax" if ratemax else "design-powermin"
    print(f"secjam {name}")
    print(f"  geometry: d_sd={_fmt(geom.d_sd)} m  d_sr={_fmt(geom.d_sr)} m  "
          f"d_se={_fmt(geom.d_se)} m  (d_rd={_fmt(geom.d_rd)}, d_re={_fmt(geom.d_re)})")
    print(f"  channel: alpha={_fmt(cfg['alpha'])}  "
          f"sigma2={_fmt(cfg['sigma2_dbm'])} dBm  n={n}  seed={cfg['seed']}")
    if ratemax:
        p0 = dbm_to_mw(cfg["p0_dbm"])
        print(f"  constraint: p0={_fmt(cfg['p0_dbm'])} dBm ({_fmt(p0)} mW)")
        out = design_rate_max(RateMaxProblem(csi, p0))
    else:
        print(f"  constraint: rs0={_fmt(cfg['rs0'])} b/s/Hz")
        out = design_power_min(PowerMinProblem(csi, cfg["rs0"]))
    if out.mode is Mode.INFEASIBLE:
        print("  result: infeasible (rate target unreachable on this channel)")
    else:
        kind = ("cooperative jamming" if out.mode is Mode.COOPERATIVE_JAMMING
                else "direct transmission")
        print(f"  result: {kind}, secrecy rate {_fmt(out.secrecy_rate)} b/s/Hz, "
              f"total power {_fmt(mw_to_dbm(out.total_power))} dBm")
    if cfg["verbose"]:
        print(f"  weights: {[f'{w_k:.6g}' for w_k in out.w]}")
    print(f"mode={out.mode.value}")
    print(f"ps_mw={_fmt(out.ps)}")
    print(f"pj_mw={_fmt(out.pj)}")
    print(f"secrecy_rate={_fmt(out.secrecy_rate)}")
    print(f"total_power_mw={_fmt(out.total_power)}")
    return 1 if out.mode is Mode.INFEASIBLE else 0


def _cmd_sweep(cfg) -> int:
    try:
        d_se_values = parse_d_se_range(cfg["d_se_range"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    antenna_counts = cfg["n"] if isinstance(cfg["n"], list) else [cfg["n"]]
    sweep_cfg = SweepConfig(
        d_sd=cfg["d_sd"], d_sr=cfg["d_sr"], d_se_values=d_se_values,
        alpha=cfg["alpha"], sigma2_dbm=cfg["sigma2_dbm"], mode=cfg["mode"],
        p0_dbm=cfg["p0_dbm"], rs0=cfg["rs0"],
        antenna_counts=tuple(antenna_counts), trials=cfg["trials"],
        seed=cfg["seed"])
    kernels = backend.get_backend()
    if cfg["verbose"]:
        print(f"# backend: {backend.backend_name(kernels)}")
    rows = run_sweep(sweep_cfg, kernels=kernels)
    try:
        write_csv(rows, cfg["out"], include_unclamped=cfg["verbose"])
    except OSError as exc:
        print(f"error: cannot write {cfg['out']}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(rows)} rows to {cfg['out']}")
    return 0


def _cmd_verify(cfg, explicit) -> int:
    from .verify import run_checks
    antenna_counts = cfg["n"] if isinstance(cfg["n"], list) else [cfg["n"]]
    per_cell = cfg["trials"] if "trials" in explicit else 20
    results = run_checks(seed=cfg["seed"], per_cell=per_cell,
                         antenna_counts=tuple(antenna_counts),
                         d_sd=cfg["d_sd"], d_sr=cfg["d_sr"], alpha=cfg["alpha"],
                         sigma2=dbm_to_mw(cfg["sigma2_dbm"]),
                         p0=dbm_to_mw(cfg["p0_dbm"]), rs0=cfg["rs0"])
    failed = 0
    for res in results:
        tag = "ok  " if res.ok else "FAIL"
        print(f"{tag} {res.name}: {res.detail}")
        if not res.ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg, explicit = _resolve(args)
        if args.command == "design-ratemax":
            return _cmd_design(cfg, explicit, ratemax=True)
        if args.command == "design-powermin":
            return _cmd_design(cfg, explicit, ratemax=False)
        if args.command == "sweep":
            return _cmd_sweep(cfg)
        if args.command == "verify":
            return _cmd_verify(cfg, explicit)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
