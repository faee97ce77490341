"""Command-line front end: build the requested spaces, run one family of checks, write a JSON report.

Exit status is 0 when every check passes, 2 when a check fails and 1 on
input errors.  Reports depend only on the configuration and the inputs.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .calculus import delta_filtration_check, triangularity_check
from .constructions import (
    InputError,
    builtin_spaces,
    cech_nerve,
    commuting_nerve,
    order_complex,
    read_complex,
    read_group,
    rep_nerve,
    simplicial_circle,
    simplicial_complex_chains_oracle,
    simplicial_set_as_space,
)
from .filtration import filtration_stage, intersection_check, stage_quotient, wedge_decomposition
from .homology import homology, normalized_chains
from .realization import segal_E1, total_complex, verify_corollary_shift, verify_realization_quotients
from .reports import Report
from .simplicial import SimplexRef, normal_form, validate_identities
from .space import SimplicialSpace
from .splitting import verify_restriction, verify_theorem_splitting

COMMANDS = (
    "validate",
    "homology",
    "filtration",
    "verify-splitting",
    "verify-realization",
    "verify-corollary",
    "segal-e1",
    "triangularity",
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    group: Path | None = None
    complex: Path | None = None
    cech_circle: bool = False
    rep: bool = False
    builtin: str | None = None
    max_level: int = 4
    max_dim: int = 4
    json: Path | None = None
    seed: int = 0

    def describe(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "group": None if self.group is None else self.group.name,
            "complex": None if self.complex is None else self.complex.name,
            "cech_circle": self.cech_circle,
            "rep": self.rep,
            "builtin": self.builtin,
            "max_level": self.max_level,
            "max_dim": self.max_dim,
            "seed": self.seed,
        }


def thread_count() -> int:
    raw = os.environ.get("SUSPSPLIT_THREADS", "")
    try:
        return max(1, int(raw)) if raw else min(4, os.cpu_count() or 1)
    except ValueError:
        raise InputError(f"SUSPSPLIT_THREADS must be an integer, got {raw!r}") from None


def jsonable(obj: Any) -> Any:
    """Plain JSON data with deterministic ordering for sets and non-string keys."""
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((jsonable(v) for v in obj), key=repr)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, SimplexRef):
        return repr(obj)
    return str(obj)


def _key(k: Any) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, tuple):
        return ",".join(map(str, k))
    return str(k)


# -- inputs -------------------------------------------------------------------

def load_spaces(cfg: RunConfig) -> dict[str, SimplicialSpace]:
    N = cfg.max_level
    chosen = sum(x is not None and x is not False for x in (cfg.group, cfg.complex, cfg.builtin, cfg.cech_circle or None))
    if chosen > 1:
        raise InputError("choose at most one of --group, --complex, --cech-circle, --builtin")
    if cfg.group is not None:
        G = read_group(cfg.group)
        return {f"rep_{G.name}" if cfg.rep else f"hom_{G.name}": rep_nerve(G, N) if cfg.rep else commuting_nerve(G, N)}
    if cfg.complex is not None:
        K = read_complex(cfg.complex)
        return {f"disc_{K.name}": simplicial_set_as_space(order_complex(K, N), N)}
    if cfg.cech_circle:
        return {"cech_circle": cech_nerve(simplicial_circle(cfg.max_dim), N, cfg.max_dim)}
    spaces = builtin_spaces(N, min(cfg.max_dim, 3))
    if cfg.builtin is not None:
        if cfg.builtin not in spaces:
            raise InputError(f"unknown built-in {cfg.builtin!r}; choose from {', '.join(spaces)}")
        return {cfg.builtin: spaces[cfg.builtin]}
    return spaces


# -- commands -----------------------------------------------------------------

Entry = dict[str, Any]


def _entry(check: str, params: dict, passed: bool, details: dict) -> Entry:
    return {"check": check, "params": params, "passed": passed, "details": details}


def _report(r: Report) -> Entry:
    return r.to_dict()


def _normal_form_trials(seed: int, trials: int = 500) -> Report:
    """Random degeneracy words reduce to the same admissible word in any order of rewriting."""
    rng = random.Random(seed)
    rep = Report("normal_form_confluence", {"seed": seed, "trials": trials})
    for _ in range(trials):
        word = [rng.randrange(6) for _ in range(rng.randrange(1, 6))]
        nf = normal_form(word)
        if normal_form(nf) != nf:
            rep.violations.append({"word": word, "problem": "not idempotent"})
        # split anywhere and normalize the halves first
        k = rng.randrange(len(word) + 1)
        if normal_form(list(normal_form(word[:k])) + list(normal_form(word[k:]))) != nf:
            rep.violations.append({"word": word, "split": k})
    return rep


def cmd_validate(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    out = []
    for n in range(space.max_level + 1):
        r = validate_identities(space.level(n))
        r.params["level"] = n
        out.append(_report(r))
    out.append(_report(space.validate()))
    return out


def cmd_homology(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    out = []
    for n in range(space.max_level + 1):
        h = homology(normalized_chains(space.level(n)))
        out.append(_entry("level_homology", {"space": space.name, "n": n}, True, {"homology": h.to_dict()}))
    tot = homology(total_complex(space))
    out.append(_entry("realization_homology", {"space": space.name}, True, {"homology": tot.to_dict()}))
    return out


def cmd_filtration(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    out = []
    for n in range(1, space.max_level + 1):
        sizes = [len(filtration_stage(space, n, t)) for t in range(n + 2)]
        quotients = {str(t): homology(normalized_chains(stage_quotient(space, n, t))).to_dict() for t in range(n + 1)}
        out.append(_entry("filtration", {"space": space.name, "n": n}, True, {"stage_sizes": sizes, "stage_quotients": quotients}))
        for r in range(n):
            w = wedge_decomposition(space, n, r)
            out.append(_entry("wedge_decomposition", {"space": space.name, "n": n, "r": r}, w.passed, w.to_dict()))
            out.append(_report(intersection_check(space, n, r)))
    return out


def cmd_verify_splitting(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    out = []
    for n in range(1, space.max_level + 1):
        s = verify_theorem_splitting(space, n)
        out.append(_entry("splitting", {"space": space.name, "n": n}, s.passed, s.to_dict()))
        for t in range(1, n + 1):
            out.append(_report(verify_restriction(space, n, t)))
    return out


def cmd_verify_realization(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    return [_report(verify_realization_quotients(space, j)) for j in range(min(space.max_level, 3) + 1)]


def cmd_verify_corollary(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    return [_report(verify_corollary_shift(space, n, t)) for n in range(1, space.max_level + 1) for t in range(n + 1)]


def cmd_segal_e1(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    p = segal_E1(space)
    return [_entry("segal_E1", {"space": space.name}, p.passed, p.to_dict())]


def cmd_triangularity(cfg: RunConfig, space: SimplicialSpace) -> list[Entry]:
    out = []
    for n in range(1, space.max_level + 1):
        for r in range(n + 1):
            out.append(_report(triangularity_check(space, n, r)))
            out.append(_report(delta_filtration_check(space, n, r)))
    return out


HANDLERS: dict[str, Callable[[RunConfig, SimplicialSpace], list[Entry]]] = {
    "validate": cmd_validate,
    "homology": cmd_homology,
    "filtration": cmd_filtration,
    "verify-splitting": cmd_verify_splitting,
    "verify-realization": cmd_verify_realization,
    "verify-corollary": cmd_verify_corollary,
    "segal-e1": cmd_segal_e1,
    "triangularity": cmd_triangularity,
}


def _complex_homology(cfg: RunConfig) -> list[Entry]:
    """For ``homology --complex``: the order complex against the simplicial-chain oracle."""
    K = read_complex(cfg.complex)
    X = order_complex(K)
    mine = homology(normalized_chains(X))
    oracle = homology(simplicial_complex_chains_oracle(K))
    return [
        _entry(
            "order_complex_homology",
            {"complex": K.name, "vertices": len(K.vertices), "facets": len(K.facets)},
            mine == oracle,
            {"homology": mine.to_dict(), "oracle": oracle.to_dict()},
        )
    ]


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute one command; returns ``(exit status, report)``."""
    if cfg.max_level < 0 or cfg.max_dim < 0:
        raise InputError("truncations must be nonnegative")
    entries: list[Entry] = []
    if cfg.command == "homology" and cfg.complex is not None:
        entries.extend(_complex_homology(cfg))
    spaces = load_spaces(cfg)
    handler = HANDLERS[cfg.command]
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        results = list(pool.map(lambda sp: handler(cfg, sp), spaces.values()))
    for name, res in zip(spaces, results):
        for e in res:
            e["params"] = {"input": name, **e["params"]}
        entries.extend(res)
    if cfg.command == "validate":
        entries.append(_report(_normal_form_trials(cfg.seed)))
    passed = all(e["passed"] for e in entries)
    report = {
        "tool": "suspsplit",
        "version": __version__,
        "config": cfg.describe(),
        "passed": passed,
        "summary": {"checks": len(entries), "failed": sum(not e["passed"] for e in entries)},
        "reports": entries,
    }
    return (0 if passed else 2), jsonable(report)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="suspsplit", description="Degeneracy filtrations and suspension splittings, checked in integer homology.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        c = sub.add_parser(name)
        src = c.add_argument_group("input (default: every built-in)")
        src.add_argument("--group", type=Path, help="group multiplication table (CSV)")
        src.add_argument("--complex", type=Path, help="simplicial complex, one facet per line")
        src.add_argument("--cech-circle", action="store_true", help="Cech nerve of the simplicial circle")
        src.add_argument("--builtin", help="one named built-in space")
        c.add_argument("--rep", action="store_true", help="with --group: use the conjugation quotient")
        c.add_argument("--max-level", type=int, default=4)
        c.add_argument("--max-dim", type=int, default=4)
        c.add_argument("--json", type=Path, help="write the report here instead of stdout")
        c.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        group=args.group,
        complex=args.complex,
        cech_circle=args.cech_circle,
        rep=args.rep,
        builtin=args.builtin,
        max_level=args.max_level,
        max_dim=args.max_dim,
        json=args.json,
        seed=args.seed,
    )
    try:
        status, report = run(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2) + "\n"
    if cfg.json is None:
        sys.stdout.write(text)
    else:
        cfg.json.write_text(text, encoding="utf-8")
        for e in report["reports"]:
            print(f"{'PASS' if e['passed'] else 'FAIL'}  {e['check']}  {json.dumps(e['params'])}")
        print(f"{report['summary']['checks'] - report['summary']['failed']}/{report['summary']['checks']} checks passed")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
