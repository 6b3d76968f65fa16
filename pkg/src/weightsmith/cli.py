"""``weightsmith`` command-line front end.

Every command prints a JSON report (``"schema": 1``) and exits with 0 when all
checks pass, 1 when any check fails and 2 when a budget ran out or a check was
skipped.  Reports contain no timing, so identical configurations give
byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Sequence

from . import audits
from .audits import AuditReport, Check, SKIPPED
from .corpus import AWC_CORPUS, CORPUS
from .gf import FieldError, prime_power
from .grouplab import GroupError, GroupOverflow

DEFAULTS = {"q": None, "group": "g2", "ell": None, "exhaustive": False, "samples": 1000, "seed": 0,
            "budget": 20000, "out": None, "fixture": None, "full_centralizer": False}


def read_config(path: str | Path) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for ln, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{ln}: expected key = value")
        k, v = (x.strip() for x in line.split("=", 1))
        k = k.replace("-", "_")
        if k not in DEFAULTS:
            raise ValueError(f"{path}:{ln}: unknown key {k!r}")
        out[k] = _coerce(k, v.strip("\"'"))
    return out


def _coerce(key: str, value: str):
    if key in ("q", "ell", "samples", "seed", "budget"):
        return int(value)
    if key in ("exhaustive", "full_centralizer"):
        return value.lower() in ("1", "true", "yes", "on")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value file; command-line flags take precedence")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="element cap for enumerations")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the JSON report here")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="weightsmith", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("relations", parents=[common], help="Steinberg relations in the adjoint G2(q) engine")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--exhaustive", action="store_true", default=argparse.SUPPRESS)
    s.add_argument("--samples", type=int, default=argparse.SUPPRESS)

    s = sub.add_parser("signs", parents=[common], help="sign table and Cartan integers")

    s = sub.add_parser("torus-atlas", parents=[common], help="maximal tori of G2(q) or 3D4(q)")
    s.add_argument("--group", choices=("g2", "3d4"), default=argparse.SUPPRESS)
    s.add_argument("--q", type=int, required=True)

    s = sub.add_parser("radical-audit", parents=[common], help="the radical 2-subgroup 2^{1+4}_+ of G2(3)")
    s.add_argument("--q", type=int, default=argparse.SUPPRESS)
    s.add_argument("--ell", type=int, default=argparse.SUPPRESS)

    s = sub.add_parser("q9-audit", parents=[common], help="R_{a+b} versus R_{3a+b} in G2(9) (slow)")
    s.add_argument("--q", type=int, default=argparse.SUPPRESS)
    s.add_argument("--full-centralizer", action="store_true", default=argparse.SUPPRESS,
                   help="also enumerate C_G(y) and check its order (memory heavy)")

    s = sub.add_parser("named", parents=[common], help="v2, v3, v6 and Gamma^2 = F_3")
    s.add_argument("--q", type=int, required=True)

    s = sub.add_parser("stab-census", parents=[common], help="Weyl orbits on torus characters")
    s.add_argument("--group", choices=("g2", "3d4"), default=argparse.SUPPRESS)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--ell", type=int, default=argparse.SUPPRESS)

    s = sub.add_parser("awc-check", parents=[common], help="weights versus regular classes on small groups")
    s.add_argument("--fixture", action="append", default=argparse.SUPPRESS,
                   help=f"corpus name ({', '.join(CORPUS)}) or JSON fixture path; repeatable")
    s.add_argument("--ell", type=int, default=argparse.SUPPRESS)
    return p


def resolve(argv: Sequence[str] | None = None) -> tuple[str, dict]:
    ns = build_parser().parse_args(argv)
    cfg = dict(DEFAULTS)
    if ns.config:
        cfg.update(read_config(ns.config))
    cfg.update({k: v for k, v in vars(ns).items() if k not in ("command", "config")})
    return ns.command, cfg


def _fixture_hashes(fixtures) -> dict:
    out = {}
    for f in fixtures:
        if f not in CORPUS and Path(f).exists():
            out[str(f)] = hashlib.sha256(Path(f).read_bytes()).hexdigest()
    return out


def run(command: str, cfg: dict) -> AuditReport:
    cap = int(cfg["budget"])
    if cfg.get("q") is not None:
        prime_power(int(cfg["q"]))
    try:
        if command == "relations":
            return audits.relations_report(cfg["q"], exhaustive=True if cfg["exhaustive"] else None,
                                           samples=cfg["samples"], seed=cfg["seed"])
        if command == "signs":
            rep = audits.signs_report()
            rep.checks.extend(audits.cartan_report().checks)
            return rep
        if command == "torus-atlas":
            return audits.torus_atlas_report(cfg["group"], cfg["q"])
        if command == "radical-audit":
            return audits.radical_audit_report(cfg["q"] or 3, cfg["ell"] or 2, cap=cap)
        if command == "q9-audit":
            return audits.q9_audit_report(cfg["q"] or 9, full_centralizer=cfg["full_centralizer"], cap=cap)
        if command == "named":
            return audits.named_report(cfg["q"])
        if command == "stab-census":
            return audits.stab_census_report(cfg["group"], cfg["q"], cfg["ell"] or 3)
        if command == "awc-check":
            fx = cfg["fixture"] or list(AWC_CORPUS)
            if isinstance(fx, str):
                fx = [fx]
            rep = audits.awc_report(fx, ells=[cfg["ell"]] if cfg["ell"] else None, cap=cap)
            hashes = _fixture_hashes(fx)
            if hashes:
                rep.data["fixture_sha256"] = hashes
            return rep
    except GroupOverflow as exc:
        rep = AuditReport(command, {k: v for k, v in cfg.items() if v is not None and k != "out"})
        rep.add(Check("budget", SKIPPED, observed={"cap": exc.cap, "partial": exc.partial}, detail=str(exc)))
        return rep
    raise ValueError(f"unknown command {command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    command, cfg = resolve(argv)
    try:
        rep = run(command, cfg)
    except (FieldError, GroupError, ValueError) as exc:
        print(f"weightsmith: error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(rep.as_dict(), indent=2, sort_keys=True, default=str) + "\n"
    if cfg.get("out"):
        Path(cfg["out"]).write_text(text)
    else:
        sys.stdout.write(text)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
