"""Batch front-end.

Every subcommand prints one JSON report to stdout (and to ``--out`` when
given).  Reports are deterministic for a fixed configuration except for the
``generated_at`` field.  Exit status: 0 when every assertion in the run
passed, 1 when a mathematical assertion failed, 2 for usage, input or
budget problems.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from . import geometry, propm, search
from .code import (
    apply_move,
    code_from_dict,
    code_to_dict,
    is_mds,
    linear_equivalence_witness,
    min_distance,
    project,
    rs_code,
    to_standard_form,
    weight_enumerator,
)
from .errors import (
    AddmdsError,
    BudgetExceeded,
    FieldTooSmall,
    InvalidSubfield,
    NotPrime,
    TowerMismatch,
    TowerTooLarge,
)
from .gf import FieldTower, field_create
from .linpoly import LinearizedPoly

USAGE_ERRORS = (BudgetExceeded, FieldTooSmall, NotPrime, TowerTooLarge,
                TowerMismatch, InvalidSubfield)


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    e: int = 1
    h: int | None = None
    k: int | None = None
    n: int | None = None
    budget_codewords: int | None = None
    budget_candidates: int | None = None
    shards: int = 1
    seed: int = 0
    input: str | None = None
    output: str | None = None

    def __post_init__(self):
        for name in ("budget_codewords", "budget_candidates"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive")
        if self.shards < 1:
            raise ValueError("shard count must be >= 1")


def _tower(cfg: RunConfig) -> FieldTower:
    if cfg.p is None or cfg.h is None:
        raise ValueError("this command needs --p and --h (and --e for q = p^e)")
    return field_create(cfg.p, cfg.e, cfg.h)


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _MalformedInput(
            f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


class _MalformedInput(Exception):
    pass


def _load_code(cfg: RunConfig):
    if cfg.input is None:
        raise ValueError("this command needs --in with a code JSON file")
    return code_from_dict(_load_json(cfg.input))


def _emit(cfg: RunConfig, payload: dict, out: str | None = None) -> None:
    report = {"command": cfg.command,
              "generated_at": datetime.now(timezone.utc).isoformat()}
    report.update(payload)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    path = out or cfg.output
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands; each returns True when every assertion passed

def _cmd_field(cfg: RunConfig) -> bool:
    t = _tower(cfg)
    glh = 1
    for i in range(t.h):
        glh *= t.size - t.q ** i
    _emit(cfg, {
        "field": t.descriptor(),
        "q": t.q,
        "size": t.size,
        "omega": t.digits(t.omega),
        "invertible_linearized_maps": glh,
        "dual_basis": [t.digits(x) for x in t.dual_basis()],
    })
    return True


def _cmd_rs(cfg: RunConfig) -> bool:
    t = _tower(cfg)
    if cfg.k is None:
        raise ValueError("rs needs --k")
    code = rs_code(t, cfg.k)
    _emit(cfg, {
        "field": t.descriptor(),
        "code": code_to_dict(code),
        "n": code.n,
        "message_length": code.message_length(),
        "codewords": t.size ** code.message_length(),
    })
    return True


def _cmd_check_mds(cfg: RunConfig) -> bool:
    code = _load_code(cfg)
    d = min_distance(code, cfg.budget_codewords)
    k = code.message_length()
    enum = weight_enumerator(code, cfg.budget_codewords)
    mds = d == code.n - k + 1
    _emit(cfg, {
        "n": code.n,
        "message_length": k,
        "codewords": code.tower.size ** k,
        "min_distance": d,
        "singleton_defect": code.n - k + 1 - d,
        "weight_enumerator": enum,
        "is_mds": mds,
    })
    return mds


def _cmd_project(cfg: RunConfig) -> bool:
    code = _load_code(cfg)
    if cfg.n is None:
        raise ValueError("project needs --n with the position to remove")
    shortened = project(code, {cfg.n})
    _emit(cfg, {
        "position": cfg.n,
        "before": {"n": code.n, "k_fq": code.k_fq},
        "after": {"n": shortened.n, "k_fq": shortened.k_fq},
        "code": code_to_dict(shortened),
    })
    return True


def _cmd_standard_form(cfg: RunConfig) -> bool:
    code = _load_code(cfg)
    std, move = to_standard_form(code)
    t = code.tower
    ok = apply_move(code, move).gen == std.gen
    _emit(cfg, {
        "code": code_to_dict(std),
        "move": {
            "perm": list(move.perm),
            "maps": [[t.digits(c) for c in m.coeffs] for m in move.maps],
        },
        "move_reproduces_form": ok,
    })
    return ok


def _cmd_linear_witness(cfg: RunConfig) -> bool:
    code = _load_code(cfg)
    t = code.tower
    wit = linear_equivalence_witness(code, cfg.budget_candidates)
    payload = {"witness_found": wit is not None}
    if wit is not None:
        moved = apply_move(code, wit.linearizing_move())
        payload["g"] = [t.digits(c) for c in wit.g.coeffs]
        payload["scalars"] = [[t.digits(c) for c in row] for row in wit.scalars]
        payload["moved_code_is_linear"] = moved.is_field_linear()
    _emit(cfg, payload)
    return wit is not None and payload["moved_code_is_linear"]


def _cmd_geometry(cfg: RunConfig) -> bool:
    code = _load_code(cfg)
    t = code.tower
    system = geometry.system_from_code(code)
    membership = []
    for block in system.blocks:
        pt = geometry.desarguesian_membership(t, block)
        membership.append(None if pt is None else [t.digits(x) for x in pt])
    d_code = min_distance(code, cfg.budget_codewords)
    d_system = geometry.system_min_distance(system, cfg.budget_codewords)
    bridge = d_code == d_system
    _emit(cfg, {
        "system": geometry.system_to_dict(system),
        "block_ranks": [system.block_rank(i) for i in range(len(system.blocks))],
        "pseudo_arc": geometry.is_pseudo_arc(system),
        "spread_membership": membership,
        "min_distance_code": d_code,
        "min_distance_system": d_system,
        "distance_bridge_agrees": bridge,
    })
    return bridge


def _cmd_propm(cfg: RunConfig) -> bool:
    t = _tower(cfg)
    if cfg.input is not None:
        data = _load_json(cfg.input)
        f = LinearizedPoly(t, tuple(t.from_digits(d) for d in data["f"]))
        g = LinearizedPoly(t, tuple(t.from_digits(d) for d in data["g"]))
        m, wit = propm.max_prop_m(f, g, cfg.budget_candidates)
        inverse = propm.verify_inverse_lemma(f, g)
        _emit(cfg, {
            "field": t.descriptor(),
            "f": [t.digits(c) for c in f.coeffs],
            "g": [t.digits(c) for c in g.coeffs],
            "triples": len(propm.prop_triples(f, g)),
            "m": m,
            "witness": [[t.digits(x) for x in tr] for tr in wit.triples],
            "inverse_lemma": inverse,
        })
        return bool(inverse["ok"])
    n = cfg.n if cfg.n is not None else t.size + 1
    reports = {
        "semilinear_criterion": propm.verify_semilinear_criterion(t),
        "zero_coefficient_lemma": propm.verify_zero_coeff_lemma(t),
        "two_nonzero_lemma": propm.verify_two_nonzero_lemma(t),
        "prop_m_implication": propm.verify_lm_prop_implication(t, n),
        "inverse_lemma_samples": _inverse_samples(t, cfg.seed),
    }
    ok = all(r["ok"] for r in reports.values())
    _emit(cfg, {"field": t.descriptor(), "n": n, "verifiers": reports, "all_ok": ok})
    return ok


def _inverse_samples(t: FieldTower, seed: int, count: int = 25) -> dict:
    import random

    from .linpoly import random_invertible

    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        f = random_invertible(t, rng)
        g = random_invertible(t, rng)
        rep = propm.verify_inverse_lemma(f, g)
        if not rep["ok"]:
            bad.append(rep)
    return {"seed": seed, "samples": count, "violations": bad, "ok": not bad}


def _cmd_hunt_k4(cfg: RunConfig) -> bool:
    t = _tower(cfg)
    n = cfg.n if cfg.n is not None else 6
    ex = search.k4_example_search(t, n=n, shards=cfg.shards,
                                  budget=cfg.budget_candidates)
    if ex is None:
        _emit(cfg, {"found": False, "exhausted": True, "n": n})
        return False
    report = search.verify_k4_example(ex, cfg.budget_codewords,
                                      cfg.budget_candidates)
    payload = {
        "found": True,
        "example": search.example_to_dict(ex),
        "verification": report,
    }
    _emit(cfg, payload, out=cfg.output or "found-example.json")
    return bool(report["ok"])


def _cmd_verify_example(cfg: RunConfig) -> bool:
    if cfg.input is None:
        raise ValueError("verify-example needs --in with a found-example JSON file")
    data = _load_json(cfg.input)
    ex = search.example_from_dict(data.get("example", data))
    report = search.verify_k4_example(ex, cfg.budget_codewords,
                                      cfg.budget_candidates)
    _emit(cfg, {"verification": report})
    return bool(report["ok"])


_COMMANDS = {
    "field": _cmd_field,
    "rs": _cmd_rs,
    "check-mds": _cmd_check_mds,
    "project": _cmd_project,
    "standard-form": _cmd_standard_form,
    "linear-witness": _cmd_linear_witness,
    "geometry": _cmd_geometry,
    "propm": _cmd_propm,
    "hunt-k4": _cmd_hunt_k4,
    "verify-example": _cmd_verify_example,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addmds",
        description="additive MDS codes: construction, certificates, searches",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int, help="characteristic")
        sp.add_argument("--e", type=int, default=1, help="q = p^e")
        sp.add_argument("--h", type=int, help="extension degree over F_q")
        sp.add_argument("--k", type=int, help="message length")
        sp.add_argument("--n", type=int, help="code length / position / threshold length")
        sp.add_argument("--budget-codewords", type=int, dest="budget_codewords")
        sp.add_argument("--budget-candidates", type=int, dest="budget_candidates")
        sp.add_argument("--shards", type=int, default=1)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--in", dest="input")
        sp.add_argument("--out", dest="output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = RunConfig(**vars(ns))
        ok = _COMMANDS[cfg.command](cfg)
    except _MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except AddmdsError as exc:
        print(f"assertion failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
