"""Command line front end.

Each subcommand reads its parameters from ``--config file.json`` and/or
flags (flags win), runs one computation and writes a self-describing JSON
report (or CSV where a CSV schema exists).  Exit status: 0 on success, 1 for
configuration or I/O problems, 2 when a mathematical precondition fails.
"""

import argparse
import io
import json
import re
import sys

from . import beta_adic, erdos, local, primes
from .errors import MathError
from .ring import NumberRing

EXIT_OK, EXIT_CONFIG, EXIT_MATH = 0, 1, 2


class ConfigError(Exception):
    def __init__(self, field, msg):
        super().__init__(f"{field}: {msg}")
        self.field = field


def _json_value(text):
    return json.loads(text) if isinstance(text, str) else text


def _int_list(text):
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    if isinstance(text, int):
        return [text]
    return [int(x) for x in str(text).split(",") if x.strip()]


# field name -> (parser, flag help)
FIELDS = {
    "min_poly": (_int_list, "defining polynomial, constant term first, e.g. 1,0,1"),
    "alpha": (_int_list, "coordinates of alpha"),
    "beta": (_int_list, "coordinates of beta"),
    "x": (_int_list, "coordinates of x"),
    "digits": (_json_value, "JSON list of digit coordinate lists (optional override)"),
    "m": (int, "truncation length"),
    "m_max": (int, "largest truncation length"),
    "k": (int, "precision exponent"),
    "r": (int, "level r for a single kernel"),
    "rmax": (int, "largest level r"),
    "p": (int, "rational prime"),
    "q": (int, "base prime"),
    "prime_index": (int, "which prime above p (sorted as factored)"),
    "N": (int, "scan bound"),
    "budget": (int, "work budget for orbit walks"),
    "seed": (int, "seed for equal-degree splitting"),
    "workers": (int, "worker processes for block scans"),
}

COMMANDS = {
    "expand": (["min_poly", "x", "beta", "m"], ["digits"]),
    "factor": (["min_poly"], ["beta", "p", "seed"]),
    "order": (["min_poly", "alpha", "p", "k"], ["prime_index", "seed"]),
    "kernel": (["min_poly", "alpha", "p", "rmax"], ["prime_index", "seed", "r"]),
    "pattern": (["min_poly", "alpha", "p", "rmax"], ["prime_index", "seed"]),
    "freq": (["min_poly", "alpha", "beta", "m"], ["budget", "digits"]),
    "complexity": (["min_poly", "alpha", "beta", "m_max"], []),
    "erdos": (["N"], ["workers"]),
    "dw": (["p", "q", "m"], ["budget"]),
}

DEFAULTS = {"min_poly": [0, 1], "seed": primes.polymodp.DEFAULT_SEED, "prime_index": 0,
            "budget": beta_adic.DEFAULT_BUDGET, "workers": 1}


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors are configuration errors (exit 1)."""

    def error(self, message):
        raise ConfigError("arguments", message)


_NEGATIVE_VALUE = re.compile(r"^-\d")


def _attach_negative_values(argv):
    """Rewrite ``--flag -2,0,1`` as ``--flag=-2,0,1`` so values may start with a minus."""
    out = []
    for tok in argv:
        if out and _NEGATIVE_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def build_parser():
    parser = _Parser(prog="betadic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (required, optional) in COMMANDS.items():
        sp = sub.add_parser(name)
        sp.add_argument("--config", help="JSON file with parameters")
        sp.add_argument("--out", help="report path (default: stdout)")
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        for field in required + optional:
            flag = "--" + field.replace("_", "-")
            sp.add_argument(flag, dest=field, default=None, help=FIELDS[field][1])
    return parser


def resolve_config(args):
    """Merge config file and flags into one validated parameter dict."""
    required, optional = COMMANDS[args.command]
    raw = {}
    if args.config:
        try:
            with open(args.config) as fh:
                raw.update(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError("config", str(exc)) from exc
    for field in required + optional:
        value = getattr(args, field)
        if value is not None:
            raw[field] = value
    cfg = {}
    for field in required + optional:
        if field not in raw:
            if field in DEFAULTS:
                cfg[field] = DEFAULTS[field]
                continue
            if field in required:
                raise ConfigError(field, "missing")
            continue
        try:
            cfg[field] = FIELDS[field][0](raw[field])
        except (ValueError, TypeError) as exc:
            raise ConfigError(field, f"cannot parse {raw[field]!r}") from exc
    return cfg


def _progress(n, h):
    print(f"orbit step {n}/{h}", file=sys.stderr, flush=True)


def _local(cfg):
    ring = NumberRing(cfg["min_poly"])
    above = primes.factor_rational_prime(ring, cfg["p"], cfg["seed"])
    i = cfg["prime_index"]
    if not 0 <= i < len(above):
        raise ConfigError("prime_index", f"only {len(above)} prime(s) above {cfg['p']}")
    return ring, local.local_context(above[i])


def run(command, cfg):
    """Execute one subcommand; returns (result dict, csv text or None)."""
    if command == "expand":
        ring = NumberRing(cfg["min_poly"])
        ds = beta_adic.digit_system(ring, cfg["beta"], cfg.get("digits"))
        ex = beta_adic.expand(ds, cfg["x"], cfg["m"])
        return {
            "digit_indices": list(ex.digit_indices),
            "digits": [d.to_json() for d in ex.digits(ds)],
        }, None
    if command == "factor":
        ring = NumberRing(cfg["min_poly"])
        if "beta" in cfg:
            return primes.factor_beta(ring, cfg["beta"], cfg["seed"]).to_json(), None
        if "p" not in cfg:
            raise ConfigError("beta", "either beta or p is required")
        above = primes.factor_rational_prime(ring, cfg["p"], cfg["seed"])
        return {"factors": [P.to_json() for P in above]}, None
    if command == "order":
        ring, ctx = _local(cfg)
        return {
            "order": str(local.mult_order(ctx, cfg["alpha"], cfg["k"])),
            "unit_group_size": str(local.unit_group_size(ctx, cfg["k"])),
        }, None
    if command == "kernel":
        ring, ctx = _local(cfg)
        if "r" in cfg:
            return {"r": cfg["r"], "size": str(local.kernel_size(ctx, cfg["alpha"], cfg["r"]))}, None
        return local.kernel_report(ctx, cfg["alpha"], cfg["rmax"]), None
    if command == "pattern":
        ring, ctx = _local(cfg)
        alpha = ring(cfg["alpha"])
        return local.detect_pattern(ctx, alpha, cfg["rmax"]).to_json(alpha), None
    if command == "freq":
        ring = NumberRing(cfg["min_poly"])
        ds = beta_adic.digit_system(ring, cfg["beta"], cfg.get("digits"))
        stats = beta_adic.orbit_digit_stats(ds, cfg["alpha"], cfg["m"], cfg["budget"], _progress)
        return stats.to_json(), None
    if command == "complexity":
        ring = NumberRing(cfg["min_poly"])
        ds = beta_adic.digit_system(ring, cfg["beta"])
        return beta_adic.block_complexity(ds, cfg["alpha"], cfg["m_max"]).to_json(), None
    if command == "erdos":
        res = erdos.erdos_count(cfg["N"], workers=cfg["workers"])
        buf = io.StringIO()
        erdos.write_erdos_csv(res, buf)
        return {"N": res.N, "M_N": res.M_N, "hits": list(res.hits), "bound": repr(res.bound)}, buf.getvalue()
    if command == "dw":
        avgs = [erdos.dupuy_weirich_avg(cfg["p"], cfg["q"], m, cfg["budget"], _progress)
                for m in range(1, cfg["m"] + 1)]
        buf = io.StringIO()
        erdos.write_dw_csv(avgs, buf)
        return {
            "averages": [
                {"m": a.m, "l_m": str(a.l_m), "freq": [str(f) for f in a.freq]} for a in avgs
            ],
            "target": f"1/{cfg['q']}",
        }, buf.getvalue()
    raise ConfigError("command", f"unknown command {command!r}")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_attach_negative_values(argv))
    except ConfigError as exc:
        print(json.dumps({"error": "ConfigError", "field": exc.field, "message": str(exc)}), file=sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = resolve_config(args)
        result, csv_text = run(args.command, cfg)
        if args.format == "csv":
            if csv_text is None:
                raise ConfigError("format", f"{args.command} has no CSV output")
            text = csv_text
        else:
            report = {"command": args.command, "config": cfg, "result": result}
            text = json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"
        _emit(text, args.out)
    except ConfigError as exc:
        print(json.dumps({"error": "ConfigError", "field": exc.field, "message": str(exc)}), file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(json.dumps({"error": "IOError", "message": str(exc)}), file=sys.stderr)
        return EXIT_CONFIG
    except (MathError, ValueError) as exc:
        name = exc.name if isinstance(exc, MathError) else type(exc).__name__
        diag = {"error": name, "message": str(exc), "command": args.command}
        print(json.dumps(diag, sort_keys=True))
        return EXIT_MATH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
