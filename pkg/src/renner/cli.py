"""Command-line interface.

    renner roots --type E6
    renner group --type E6 --format json
    renner lattice --type E6 --weight 1
    renner classes --type E6 --weight 1 --format json --output e6.json
    renner conjugate --type E6 --weight 1 --idempotent e_1 --u "1" --v "3"
    renner verify --fixture table3.txt
    renner selftest --deep

Exit status: 0 success, 1 verification failure, 2 usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .conjorbit import _OrbitCache, are_conjugate, enumerate_catalog, verify_transversal
from .crosslat import build_lattice
from .errors import CapacityError, ConfigurationError, RennerError
from .export import (
    SCHEMA_VERSION,
    catalog_csv,
    catalog_json,
    catalog_paper,
    dumps,
    group_dict,
    group_text,
    lattice_dict,
    lattice_text,
    roots_dict,
    roots_text,
)
from .oracle import selftest
from .rootsys import CartanType, build_root_system
from .weyl import DEFAULT_SIZE_LIMIT, enumerate_group

log = logging.getLogger("renner")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    cartan_type: CartanType
    weight_index: int = 1
    idempotent_filter: str | None = None
    format: str = "paper"
    jobs: int = 1
    output_path: Path | None = None
    size_limit: int = DEFAULT_SIZE_LIMIT

    def __post_init__(self):
        if self.jobs < 1:
            raise ConfigurationError(f"jobs must be >= 1, got {self.jobs}")
        if self.format not in ("json", "csv", "paper", "text"):
            raise ConfigurationError(f"unknown format {self.format!r}")
        if not 1 <= self.weight_index <= self.cartan_type.rank:
            raise ConfigurationError(
                f"weight index {self.weight_index} out of range 1..{self.cartan_type.rank}"
            )

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            cartan_type=CartanType.parse(args.type),
            weight_index=getattr(args, "weight", 1),
            idempotent_filter=getattr(args, "idempotent", None),
            format=getattr(args, "format", "text"),
            jobs=args.jobs,
            output_path=getattr(args, "output", None),
            size_limit=args.size_limit,
        )


def parse_word(text: str) -> list[int]:
    """Accept ``"1 3 4"``, ``"1,3,4"``, ``"[1, 3, 4]"`` or ``""``."""
    if re.search(r"[^\d,\s\[\]]", text):
        raise ConfigurationError(f"cannot parse word {text!r}")
    return [int(t) for t in re.findall(r"\d+", text)]


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from None


def _emit(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _group(cfg: RunConfig):
    t0 = time.perf_counter()
    rs = build_root_system(cfg.cartan_type)
    gt = enumerate_group(rs, cfg.size_limit)
    log.info("enumerated W(%s): %d elements in %.2fs", cfg.cartan_type, gt.order, time.perf_counter() - t0)
    return rs, gt


def cmd_roots(args, cfg):
    rs = build_root_system(cfg.cartan_type)
    _emit(dumps(roots_dict(rs)) if cfg.format == "json" else roots_text(rs), cfg.output_path)
    return EXIT_OK


def cmd_group(args, cfg):
    _, gt = _group(cfg)
    _emit(dumps(group_dict(gt)) if cfg.format == "json" else group_text(gt), cfg.output_path)
    return EXIT_OK


def cmd_lattice(args, cfg):
    lat = build_lattice(cfg.cartan_type, cfg.weight_index)
    _emit(dumps(lattice_dict(lat)) if cfg.format == "json" else lattice_text(lat), cfg.output_path)
    return EXIT_OK


def cmd_classes(args, cfg):
    rs, gt = _group(cfg)
    lat = build_lattice(rs, cfg.weight_index)
    t0 = time.perf_counter()
    cat = enumerate_catalog(gt, lat, only=cfg.idempotent_filter, jobs=cfg.jobs)
    log.info("%d classes in %.2fs", cat.total_classes, time.perf_counter() - t0)
    writer = {"json": catalog_json, "csv": catalog_csv, "paper": catalog_paper}.get(cfg.format)
    if writer is None:
        raise ConfigurationError(f"classes does not support format {cfg.format!r}")
    _emit(writer(cat), cfg.output_path)
    return EXIT_OK


def cmd_conjugate(args, cfg):
    rs, gt = _group(cfg)
    lat = build_lattice(rs, cfg.weight_index)
    result = are_conjugate(gt, lat, args.idempotent, parse_word(args.u), parse_word(args.v))
    print("true" if result else "false")
    return EXIT_OK


def cmd_verify(args, cfg):
    rs, gt = _group(cfg)
    lat = build_lattice(rs, cfg.weight_index)
    report = verify_transversal(gt, lat, Path(args.fixture).read_text())
    for line in report.lines():
        print(line)
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_selftest(args, cfg):
    ok = True
    for name, passed, detail in selftest(deep=args.deep):
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}" + ("" if passed else f": {detail}"))
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="renner", description="Conjugacy classes of basic Renner monoids.", allow_abbrev=False
    )
    parser.add_argument(
        "--version", action="version", version=f"renner {__version__} (data schema {SCHEMA_VERSION})"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="timing messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    sub_kw = {"allow_abbrev": False}

    def common(p, weight=True, formats=("text", "json"), default="text"):
        p.add_argument("--type", default="E6", help="Cartan type such as E6 or A3 (default E6)")
        if weight:
            p.add_argument("--weight", type=int, default=1, help="fundamental weight index (default 1)")
        if formats:
            p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", type=Path, help="write to this file instead of stdout")
        p.add_argument("--size-limit", type=int, default=None, help="maximum Weyl group order")
        p.add_argument("--jobs", type=int, default=None, help="worker threads (classes only)")
        return p

    common(sub.add_parser("roots", **sub_kw, help="root system summary"), weight=False).set_defaults(func=cmd_roots)
    common(sub.add_parser("group", **sub_kw, help="Weyl group summary"), weight=False).set_defaults(func=cmd_group)
    common(sub.add_parser("lattice", **sub_kw, help="cross-section lattice")).set_defaults(func=cmd_lattice)

    p = common(sub.add_parser("classes", **sub_kw, help="conjugacy class catalog"), formats=("json", "csv", "paper"), default="paper")
    p.add_argument("--idempotent", help="restrict to one idempotent label")
    p.set_defaults(func=cmd_classes)

    p = common(sub.add_parser("conjugate", **sub_kw, help="decide conjugacy of u e and v e"), formats=None)
    p.add_argument("--idempotent", required=True)
    p.add_argument("--u", required=True, help='word such as "1 3 4"')
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_conjugate)

    p = common(sub.add_parser("verify", **sub_kw, help="check a class-table fixture"), formats=None)
    p.add_argument("--fixture", required=True, type=Path)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", **sub_kw, help="oracle equivalence checks")
    p.add_argument("--deep", action="store_true", help="include E6 checks")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--size-limit", type=int, default=None)
    p.set_defaults(func=cmd_selftest, type="A1")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        if args.size_limit is None:
            args.size_limit = _env_int("RENNER_SIZE_LIMIT", DEFAULT_SIZE_LIMIT)
        if args.jobs is None:
            args.jobs = _env_int("RENNER_JOBS", 1)
        cfg = RunConfig.from_args(args)
        return args.func(args, cfg)
    except CapacityError as exc:
        print(f"renner: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (RennerError, OSError) as exc:
        print(f"renner: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
