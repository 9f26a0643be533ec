"""Command-line front end.

    susypiv g --k 1 --eps1 -2.5 --nu1 0 --xmin -5 --xmax 5 --n 11
    susypiv params --k 2 --eps1 0.25 --nu1 0.5
    susypiv figures --output figdata
    susypiv verify

Exit codes: 0 success, 1 verification failure, 2 invalid arguments or I/O
failure, 3 domain violation (bad eps1 / nu1 / k, seed node, uncataloged
closed form), 4 numerical failure. Results are computed in full before
anything is written, so a failing run leaves the output path untouched.
"""

import argparse
import configparser
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .acceptance import run_all
from .errors import DomainError, NumericalError
from .export import FORMATS, export_table, write_text
from .figures import BUNDLE_NAMES, figure_bundle
from .grid import DEFAULT_FIGURE_GRID, GridFunction, GridSpec
from .hierarchies import classify, closed_form
from .painleve import pain4_params, pain4_residual
from .seeds import SeedFamily, SeedParams, check_nodeless
from .susy import pain4_solution_jet, partner_potential_jet, spectrum

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NUMERICAL = 4

SUBCOMMANDS = ("potential", "g", "residual", "params", "classify", "hierarchy", "figures", "verify")
CONFIG_KEYS = {"k": int, "eps1": float, "nu1": float, "xmin": float, "xmax": float, "n": int,
               "jet_order": int, "output": str, "format": str}


class UsageError(Exception):
    """Bad command-line input that argparse itself cannot catch."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    params: SeedParams
    grid: GridSpec
    jet_order: int
    output: str | None
    format: str


def _common_options(defaults=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help="flat key=value file mirroring the flags; flags win")
    common.add_argument("--k", type=int, default=1, help="transformation order (1..6)")
    common.add_argument("--eps1", type=float, default=-0.5, help="top factorization energy (< 1/2)")
    common.add_argument("--nu1", type=float, default=0.0, help="seed asymmetry (|nu1| < 1)")
    common.add_argument("--xmin", type=float, default=DEFAULT_FIGURE_GRID[0])
    common.add_argument("--xmax", type=float, default=DEFAULT_FIGURE_GRID[1])
    common.add_argument("--n", type=int, default=DEFAULT_FIGURE_GRID[2], help="grid points")
    common.add_argument("--jet-order", dest="jet_order", type=int, default=None,
                        help="seed jet order (>= 2k + 4); default 2k + 6")
    common.add_argument("--output", "-o", default=None,
                        help="output file (directory for `figures`); default stdout")
    common.add_argument("--format", choices=FORMATS, default="csv")
    if defaults:
        common.set_defaults(**defaults)
    return common


def build_parser(defaults=None):
    """Argument parser; ``defaults`` (e.g. from a config file) replace the built-in ones."""
    parser = argparse.ArgumentParser(
        prog="susypiv",
        description="SUSY partners of the harmonic oscillator and their Painleve IV solutions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", metavar="COMMAND", required=True)
    common = _common_options(defaults)
    helps = {
        "potential": "sample the partner potential V_k",
        "g": "sample the Painleve IV solution g_k",
        "residual": "per-point Painleve IV residual of g_k",
        "params": "P_IV parameters, extremal energies and spectrum as JSON",
        "classify": "solution hierarchy of (eps1, nu1)",
        "hierarchy": "sample the cataloged closed form for (k, eps1, nu1)",
        "figures": "write the curve bundles behind the figures",
        "verify": "run the acceptance suite (exit 1 on any failure)",
    }
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name],
                       formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    return parser


def read_config(path):
    """Parse a flat key=value file into flag defaults ('jet-order' and 'jet_order' both work)."""
    cp = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_string("[config]\n" + fh.read(), source=path)
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc.strerror or exc}") from exc
    except configparser.Error as exc:
        raise UsageError(f"malformed config {path!r}: {exc}") from exc
    if cp.sections() != ["config"]:
        raise UsageError(f"config {path!r} must be flat key=value lines without [sections]")
    out = {}
    for raw, value in cp["config"].items():
        key = raw.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"unknown config key {raw!r} in {path!r}")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError:
            raise UsageError(f"config key {raw!r}: cannot parse {value!r}") from None
    if "format" in out and out["format"] not in FORMATS:
        raise UsageError(f"config key 'format' must be one of {FORMATS}")
    return out


def parse_args(argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    defaults = read_config(known.config) if known.config else None
    return build_parser(defaults).parse_args(argv)


def make_config(args):
    """Validate the parsed flags. Grid and jet-order problems are usage errors,
    seed-parameter problems are domain errors."""
    try:
        grid = GridSpec(args.xmin, args.xmax, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    params = SeedParams(args.eps1, args.nu1, args.k)
    jet_order = args.jet_order
    if jet_order is None:
        jet_order = 2 * params.k + 6
    elif jet_order < 2 * params.k + 4:
        raise UsageError(f"--jet-order must be >= 2k + 4 = {2 * params.k + 4}, got {jet_order}")
    return RunConfig(args.subcommand, params, grid, jet_order, args.output, args.format)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _require_nodeless(cfg):
    node = check_nodeless(cfg.params, cfg.grid.xs)
    if node is not None:
        raise DomainError(f"seed u1 has a node in [{node[0]:.17g}, {node[1]:.17g}]")


def _g_order(cfg):
    # g_k jets are built from seed jets of order k + (g order)
    return cfg.jet_order - cfg.params.k


def cmd_potential(cfg):
    _require_nodeless(cfg)
    fam = SeedFamily(cfg.params)
    order = max(_g_order(cfg) - 1, 0)
    gf = GridFunction.sample(lambda x: partner_potential_jet(fam, x, order).value, cfg.grid.xs)
    return _emit_table(gf, cfg)


def cmd_g(cfg):
    _require_nodeless(cfg)
    fam = SeedFamily(cfg.params)
    gf = GridFunction.sample(lambda x: pain4_solution_jet(fam, x, _g_order(cfg)).value, cfg.grid.xs)
    return _emit_table(gf, cfg)


def cmd_residual(cfg):
    _require_nodeless(cfg)
    fam = SeedFamily(cfg.params)
    pp = pain4_params(cfg.params)
    gf = GridFunction.sample(
        lambda x: pain4_residual(pain4_solution_jet(fam, x, _g_order(cfg)), pp), cfg.grid.xs)
    code = _emit_table(gf, cfg)
    print(f"max residual {max(gf.values):.3e} over {len(gf)} points "
          f"(a={pp.a:.17g}, b={pp.b:.17g})", file=sys.stderr)
    return code


def cmd_params(cfg):
    p = cfg.params
    report = {
        "params": {"k": p.k, "eps1": p.eps1, "nu1": p.nu1},
        "pain4": pain4_params(p).as_dict(),
        "spectrum": spectrum(p).as_dict(),
        "hierarchy": str(classify(p)),
    }
    _emit_text(json.dumps(report, indent=2) + "\n", cfg)
    return EXIT_OK


def cmd_classify(cfg):
    _emit_text(f"{classify(cfg.params)}\n", cfg)
    return EXIT_OK


def cmd_hierarchy(cfg):
    p = cfg.params
    gf = GridFunction.sample(lambda x: closed_form(p.k, p.eps1, p.nu1, x), cfg.grid.xs)
    return _emit_table(gf, cfg)


def cmd_figures(cfg):
    bundles = {name: figure_bundle(name, cfg.grid) for name in BUNDLE_NAMES}
    root = cfg.output or "figures"
    try:
        for name, curves in bundles.items():
            folder = os.path.join(root, name)
            os.makedirs(folder, exist_ok=True)
            for c in curves:
                export_table(c.data, cfg.format, os.path.join(folder, f"{c.name}.{cfg.format}"))
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    total = sum(len(c) for c in bundles.values())
    print(f"wrote {len(bundles)} bundles ({total} curves) under {root}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(cfg):
    ok, report = run_all()
    _emit_text(report, cfg)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _emit_text(text, cfg):
    try:
        write_text(text, cfg.output if cfg.output else sys.stdout)
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _emit_table(gf, cfg):
    try:
        export_table(gf, cfg.format, cfg.output if cfg.output else sys.stdout)
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


COMMANDS = {
    "potential": cmd_potential, "g": cmd_g, "residual": cmd_residual, "params": cmd_params,
    "classify": cmd_classify, "hierarchy": cmd_hierarchy, "figures": cmd_figures,
    "verify": cmd_verify,
}


def run(argv=None):
    """Run one subcommand and return its exit code."""
    try:
        args = parse_args(argv)
    except SystemExit as exc:  # argparse: --help/--version give 0, bad input 2
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = make_config(args)
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
