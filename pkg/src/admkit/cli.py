"""Command-line interface: ``admkit <command> ...``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
JSON output is serialized with sorted keys so identical input gives identical
bytes.  Rationals are written as ``{"num": "...", "den": "..."}``, half-integer
grades as ``{"x2": n}`` and polynomials in the MultiPoly schema.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import acceptance, affine_adm, detformulas, neveu_schwarz as ns, partitions, virasoro
from . import wreduction
from .exactmath import XI, ExactMathError, MultiPoly, RationalFunction, TPoly, to_rational
from .rootsystem import (DomainError, Root, Weight, affine_type, classify, finite_type,
                         positive_roots)
from .shapovalov import (DegenerateFiltrationError, NotInImage, engine_for, selfext_jantzen_test,
                         sum_formula_check)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


# ---------------------------------------------------------------------------
# configuration


@dataclass
class Config:
    root_height: int = 20
    depth_vir: int = 6
    depth_ns_x2: int = 9
    depth_aff: int = 4
    partition_cutoff: int = 20
    lattice_bound: int = 50
    output_format: str = "json"
    seed: int = 2024

    def validate(self) -> "Config":
        for f in fields(self):
            if f.name == "output_format":
                continue
            val = getattr(self, f.name)
            if not isinstance(val, int) or isinstance(val, bool):
                raise UsageError(f"config field {f.name} must be an integer")
            if f.name != "seed" and val <= 0:
                raise UsageError(f"config field {f.name} must be positive")
        if self.output_format not in ("json", "csv", "table"):
            raise UsageError("outputFormat must be one of json, csv, table")
        return self

    def echo(self) -> dict:
        return asdict(self)


_CONFIG_KEYS = {
    "rootHeight": "root_height",
    "H": "root_height",
    "depthVir": "depth_vir",
    "depthNsX2": "depth_ns_x2",
    "depthAff": "depth_aff",
    "partitionCutoff": "partition_cutoff",
    "latticeBound": "lattice_bound",
    "outputFormat": "output_format",
    "seed": "seed",
}


def load_config(env: Optional[Dict[str, str]] = None) -> Config:
    env = os.environ if env is None else env
    path = env.get("ADMKIT_CONFIG")
    cfg = Config()
    if not path:
        return cfg
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read ADMKIT_CONFIG {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError("ADMKIT_CONFIG must hold a JSON object")
    for key, val in raw.items():
        if key == "cutoffs" and isinstance(val, dict):
            for k2, v2 in val.items():
                _set_config(cfg, k2, v2)
        else:
            _set_config(cfg, key, val)
    return cfg.validate()


def _set_config(cfg: Config, key: str, val):
    name = _CONFIG_KEYS.get(key, key)
    if name not in {f.name for f in fields(cfg)}:
        raise UsageError(f"unknown config key {key!r}")
    setattr(cfg, name, val)


# ---------------------------------------------------------------------------
# serialization


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, MultiPoly):
        return obj.to_json()
    if isinstance(obj, TPoly):
        return [to_jsonable(c) for c in obj.coeffs]
    if isinstance(obj, RationalFunction):
        return {"expr": repr(obj)}
    if isinstance(obj, Weight):
        return {"coords": [to_jsonable(c) for c in obj.coords]}
    if isinstance(obj, Root):
        return {"vector": list(obj.vector), "height": obj.height, "real": obj.is_real,
                "multiplicity": obj.multiplicity}
    if isinstance(obj, float):
        if obj == float("inf"):
            return "inf"
        raise TypeError("floats are not serialized")
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2)


def _scalar_text(v) -> str:
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return v["num"] if v["den"] == "1" else f"{v['num']}/{v['den']}"
    if isinstance(v, dict) and set(v) == {"x2"}:
        return str(Fraction(v["x2"], 2))
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v).lower() if isinstance(v, bool) else str(v)


def render_rows(rows: List[dict], fmt: str) -> str:
    rows = [to_jsonable(r) for r in rows]
    cols: List[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_scalar_text(r.get(c, "")) for c in cols])
        return buf.getvalue().rstrip("\n")
    cells = [[_scalar_text(r.get(c, "")) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def emit(payload, fmt: str, out) -> None:
    if fmt == "json" or not isinstance(payload, list):
        out.write(dumps(payload) + "\n")
    else:
        out.write(render_rows(payload, fmt) + "\n")


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_number(text: str):
    """Exact number from text; ``xi`` stands for a formal irrational."""
    t = text.strip().lower()
    if t in ("xi", "irrational"):
        return XI
    if t.startswith("xi+") or t.startswith("xi-"):
        return XI + to_rational(t[2:])
    try:
        return to_rational(t)
    except (ValueError, ZeroDivisionError, ExactMathError) as exc:
        raise UsageError(f"not an exact number: {text!r}") from exc


def parse_vector(text: str, names: Sequence[str]) -> Dict[str, object]:
    """``"1,0"`` (positional) or ``"h=1,c=0"`` (named) into a coordinate map."""
    out: Dict[str, object] = {n: Fraction(0) for n in names}
    parts = [p for p in text.split(",") if p.strip()]
    if all("=" in p for p in parts):
        for p in parts:
            k, v = p.split("=", 1)
            if k.strip() not in out:
                raise UsageError(f"unknown coordinate {k.strip()!r}; expected {list(names)}")
            out[k.strip()] = parse_number(v)
        return out
    if len(parts) != len(names):
        raise UsageError(f"expected {len(names)} coordinates {list(names)}, got {text!r}")
    for n, p in zip(names, parts):
        out[n] = parse_number(p)
    return out


def parse_coords(text: str) -> List:
    return [parse_number(p) for p in text.split(",") if p.strip()]


def parse_grade_arg(algebra: str, text: str):
    if algebra == "aff-sl2":
        parts = [p for p in text.split(",") if p.strip()]
        if len(parts) != 2:
            raise UsageError("affine sl2 grades are written a,b")
        return (int(parts[0]), int(parts[1]))
    val = parse_number(text)
    if algebra == "vir":
        if val.denominator != 1:
            raise UsageError("Virasoro grades are integers")
        return int(val)
    return val


def grade_json(algebra: str, grade):
    if algebra == "ns":
        return {"x2": partitions.half_integer_x2(grade)}
    if algebra == "aff-sl2":
        return list(grade)
    return int(grade)


def _type_data(name: str, affine: bool):
    return affine_type(name) if affine else finite_type(name)


def _engine(algebra: str, depth_bound=None):
    if algebra == "aff-sl2":
        md = 6 if depth_bound is None else max(6, 2 * depth_bound)
        return engine_for(algebra, max_depth=md)
    return engine_for(algebra)


def _depth_default(cfg: Config, algebra: str):
    if algebra == "vir":
        return cfg.depth_vir
    if algebra == "ns":
        return Fraction(cfg.depth_ns_x2, 2)
    return cfg.depth_aff


# ---------------------------------------------------------------------------
# commands


def cmd_partitions(args, cfg: Config):
    up_to = args.up_to if args.up_to is not None else cfg.partition_cutoff
    if args.algebra == "vir":
        table = partitions.vir_table(int(parse_number(up_to)))
        rows = [{"grade": g, "count": n} for g, n in sorted(table.table.items())]
    elif args.algebra == "ns":
        table = partitions.ns_table(parse_number(up_to))
        rows = [{"gradeX2": partitions.half_integer_x2(g), "count": n}
                for g, n in sorted(table.table.items())]
    else:
        table = partitions.affine_sl2_table(int(parse_number(up_to)))
        rows = [{"a": g[0], "b": g[1], "count": n}
                for g, n in sorted(table.table.items(), key=lambda kv: (kv[0][1], kv[0][0]))]
    return rows, args.format or "csv"


def cmd_roots(args, cfg: Config):
    data = _type_data(args.type, args.affine)
    H = args.height or cfg.root_height
    roots = positive_roots(data, H)
    return [{"vector": list(r.vector), "height": r.height, "real": r.is_real,
             "multiplicity": r.multiplicity} for r in roots], None


def cmd_classify(args, cfg: Config):
    data = _type_data(args.type, args.affine)
    coords = parse_coords(args.weight)
    if len(coords) != data.dim:
        raise UsageError(f"{args.type} weights need {data.dim} coordinates")
    H = args.H or cfg.root_height
    rep = classify(data.weight(coords), H)
    out = dict(rep.flags())
    out["weight"] = list(coords)
    out["simpleSystem"] = [list(r.vector) for r in rep.simple_system]
    return out, None


def cmd_kac_det(args, cfg: Config):
    grade = parse_grade_arg(args.algebra, args.level)
    eng = _engine(args.algebra, abs(grade[0]) + grade[1] if args.algebra == "aff-sl2" else None)
    det = eng.shapovalov_det(grade)
    out = {"algebra": args.algebra, "grade": grade_json(args.algebra, grade),
           "size": len(eng.pbw_basis(grade)), "det": det, "vars": list(det.vars)}
    if args.check:
        if args.algebra == "vir":
            cmp = detformulas.compare_vir(det, grade)
        elif args.algebra == "ns":
            cmp = detformulas.compare_ns(det, grade)
        else:
            cmp = detformulas.compare_affine_sl2(det, grade)
        out["matchesProductFormula"] = cmp.ok
        out["scalar"] = cmp.scalar
        if not cmp.ok:
            raise VerificationFailed(out)
    if not args.json and (args.format or cfg.output_format) != "json":
        return [{"grade": out["grade"], "size": out["size"], "det": repr(det)}], None
    return out, "json"


def _jantzen_point(args, names):
    pt = {}
    for n in names:
        val = getattr(args, "w_" + n, None)
        if val is None:
            raise UsageError(f"--{n} is required for this algebra")
        pt[n] = parse_number(val)
    return pt


def cmd_jantzen(args, cfg: Config):
    names = ("a", "K", "D") if args.algebra == "aff-sl2" else ("h", "c")
    if args.algebra == "aff-sl2" and args.w_D is None:
        args.w_D = "0"
    lam = _jantzen_point(args, names)
    mu = parse_vector(args.mu, names)
    mu2 = parse_vector(args.mu2, names) if args.mu2 else None
    up_to = parse_grade_arg("ns" if args.algebra == "ns" else "vir", args.up_to) \
        if args.up_to is not None else _depth_default(cfg, args.algebra)
    eng = _engine(args.algebra, up_to if args.algebra == "aff-sl2" else None)
    rows = []
    ok = True
    try:
        for g in eng.grades_upto(up_to):
            rep = sum_formula_check(eng, lam, mu, mu2, g)
            ok = ok and rep.ok
            rows.append({"grade": grade_json(args.algebra, eng.format_grade(g)), "layerDims": rep.layer_dims,
                         "layerSum": rep.layer_sum, "detValuation": rep.det_valuation,
                         "ok": rep.ok})
    except DegenerateFiltrationError as exc:
        raise DomainError(f"{exc}; choose a direction transverse to the reducibility locus") from exc
    if not ok:
        raise VerificationFailed(rows)
    return rows, None


def _vir_classify(args, cfg):
    _check_coprime(args.p, args.q)
    return virasoro.classify_grid(args.p, args.q), None


def _check_coprime(p, q):
    from math import gcd
    if q <= 0 or gcd(p, q) != 1:
        raise DomainError(f"(p, q) = ({p}, {q}) must be coprime with q > 0")


def _vir_selfext(args, cfg):
    h, k = parse_number(args.h), parse_number(args.k)
    rep = virasoro.selfext_report(h, k)
    out = {"h": h, "k": k, "selfExtDim": rep.dim, "vermaIrreducible": rep.irreducible,
           "integralB": rep.integral_b, "centralCharge1or25": rep.central_1_or_25}
    level = virasoro.as_level(k)
    bound = cfg.lattice_bound
    if level.is_rational:
        # enumeration is complete once the radius covers a full period of the line
        bound = max(bound, 4 * max(abs(level.p), level.q) + 8)
    out["minimalPoints"] = [list(pt) for pt in virasoro.minimal_points(h, level, bound)]
    if rep.note:
        out["note"] = rep.note
    if args.mu:
        mu = parse_vector(args.mu, ("h", "c"))
        depth = virasoro.minimal_depth(h, k)
        if depth is None:
            out["jantzen"] = {"result": "irreducible"}
        else:
            eng = engine_for("vir")
            res = selfext_jantzen_test(eng, {"h": h, "c": virasoro.c_of_k(k)}, mu, None,
                                       min(depth, cfg.depth_vir))
            out["jantzen"] = ({"result": "notInImage", "grade": res.witness}
                              if isinstance(res, NotInImage)
                              else {"result": "consistentUpTo", "grade": res.bound})
    return out, None


def _ns_classify(args, cfg):
    return ns.ns_classify_grid(args.p, args.q), None


def _affine_vacuum(args, cfg):
    if args.k is not None:
        st = affine_adm.vacuum_status(args.type, parse_number(args.k))
    else:
        if args.p is None or args.q is None:
            raise UsageError("give --p and --q, or --k")
        st = affine_adm.vacuum_status(args.type, p=args.p, q=args.q)
    return st.flags(), None


def _affine_sl2(args, cfg):
    out = {"p": args.p, "q": args.q,
           "kAdmissible": [w.to_json() for w in affine_adm.sl2_kadm_set(args.p, args.q)],
           "kwAdmissible": [w.to_json() for w in affine_adm.sl2_kw_set(args.p, args.q)]}
    if args.validate:
        cv = affine_adm.cross_validate_sl2(args.p, args.q, args.H or cfg.root_height)
        out["crossValidation"] = cv.to_json()
        if not cv.ok:
            raise VerificationFailed(out)
    return out, None


def _wred_reduce(args, cfg):
    W = wreduction.MinimalWData(args.type)
    H = args.H or cfg.root_height
    if args.weight is not None:
        if args.k is None and (args.p is None or args.q is None):
            raise UsageError("--weight needs the level via --k or --p/--q")
        fin = parse_coords(args.weight)
        if len(fin) != W.type.rank:
            raise UsageError(f"--weight takes the {W.type.rank} finite coroot pairings")
        k = parse_number(args.k) if args.k is not None else Fraction(args.p, args.q) - W.type.hdual
        lam = W.weight([k - sum(a * x for a, x in zip(W.comarks[1:], fin))] + fin + [0])
    else:
        if W.type.name != "A1":
            raise UsageError("--r/--s grid weights exist only for --type A1; use --weight")
        if None in (args.p, args.q, args.r, args.s):
            raise UsageError("give --p --q --r --s")
        _check_coprime(args.p, args.q)
        lam = wreduction.sl2_grid_weight(args.r, args.s, args.p, args.q)
    red = wreduction.reduce_weight(W, lam)
    tr = wreduction.wadm_transfer(W, lam, H)
    out = {"type": W.type.name, "weight": list(lam.coords), "level": lam.level,
           "hf": list(red.hf_part), "l0": red.l0,
           "centralCharge": wreduction.minimal_w_central_charge(W, lam.level),
           "transfer": tr.to_json(), "cutoff": H}
    if W.type.name == "A1" and args.weight is None:
        out["virasoroH"] = virasoro.h_pq(args.r, args.s, args.p, args.q)
    return out, None


def _wred_recovery(args, cfg):
    rep = wreduction.vir_recovery_check(args.p, args.q, args.H or cfg.root_height)
    out = rep.to_json()
    if args.check and not rep.ok:
        raise VerificationFailed(out)
    return out, None


def _verify_one(ident, seed=None):
    fn = dict(acceptance.CHECKS)[ident]
    if seed is not None and ident in acceptance.SEEDED:
        return fn(seed=seed)
    return fn()


def cmd_verify(args, cfg: Config):
    if args.suite == "all":
        idents = [i for i, _ in acceptance.CHECKS]
    elif args.suite == "quick":
        idents = list(acceptance.QUICK)
    else:
        idents = [s.strip().upper() for s in args.suite.split(",")]
        known = dict(acceptance.CHECKS)
        bad = [i for i in idents if i not in known]
        if bad:
            raise UsageError(f"unknown checks {bad}; known: {sorted(known)}")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, idents, [cfg.seed] * len(idents)))
    else:
        results = [_verify_one(i, cfg.seed) for i in idents]
    order = {i: n for n, (i, _) in enumerate(acceptance.CHECKS)}
    results.sort(key=lambda r: order[r.ident])
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        row = f"{status}  {r.ident:<4} {r.anchor}"
        if args.timings:
            row += f"  [{r.seconds:.2f}s" + (f" / {r.limit:.0f}s]" if r.limit else "]")
        lines.append(row)
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    text = "\n".join(lines)
    if passed != len(results):
        raise VerificationFailed(text)
    return text, "text"


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="admkit", description="Exact Kac determinants and "
                                 "admissibility classifications.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("json", "csv", "table"), default=None)

    p = sub.add_parser("partitions", help="graded dimensions of Verma modules (CSV)")
    p.add_argument("--algebra", choices=("vir", "ns", "aff-sl2"), required=True)
    p.add_argument("--up-to", dest="up_to", default=None)
    fmt(p)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("roots", help="positive roots up to a height")
    p.add_argument("--type", required=True)
    p.add_argument("--affine", action="store_true")
    p.add_argument("--height", type=int, default=None)
    fmt(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("classify", help="admissibility predicates of a weight")
    p.add_argument("--type", required=True)
    p.add_argument("--affine", action="store_true")
    p.add_argument("--weight", required=True,
                   help="pairings with the simple coroots, then the d-coordinate if affine")
    p.add_argument("--H", type=int, default=None)
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("kac-det", help="Shapovalov determinant at one grade")
    p.add_argument("--algebra", choices=("vir", "ns", "aff-sl2"), required=True)
    p.add_argument("--level", required=True, help="grade: N, N/2 or a,b")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check", action="store_true", help="compare with the product formula")
    fmt(p)
    p.set_defaults(func=cmd_kac_det)

    p = sub.add_parser("jantzen", help="Jantzen layers and the sum formula")
    p.add_argument("--algebra", choices=("vir", "ns", "aff-sl2"), required=True)
    for n in ("h", "c", "a", "K", "D"):
        p.add_argument(f"--{n}", dest=f"w_{n}", default=None)
    p.add_argument("--mu", required=True)
    p.add_argument("--mu2", default=None)
    p.add_argument("--up-to", dest="up_to", default=None)
    fmt(p)
    p.set_defaults(func=cmd_jantzen)

    p = sub.add_parser("vir", help="Virasoro classification")
    vs = p.add_subparsers(dest="action", required=True)
    q = vs.add_parser("classify")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    fmt(q)
    q.set_defaults(func=_vir_classify)
    q = vs.add_parser("selfext")
    q.add_argument("--h", required=True)
    q.add_argument("--k", required=True)
    q.add_argument("--mu", default=None, help="optional direction h=..,c=.. for the Jantzen test")
    fmt(q)
    q.set_defaults(func=_vir_selfext)

    p = sub.add_parser("ns", help="Neveu-Schwarz classification")
    nsub = p.add_subparsers(dest="action", required=True)
    q = nsub.add_parser("classify")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    fmt(q)
    q.set_defaults(func=_ns_classify)

    p = sub.add_parser("affine", help="affine admissible levels and weights")
    asub = p.add_subparsers(dest="action", required=True)
    q = asub.add_parser("vacuum")
    q.add_argument("--type", required=True)
    q.add_argument("--p", type=int, default=None)
    q.add_argument("--q", type=int, default=None)
    q.add_argument("--k", default=None)
    fmt(q)
    q.set_defaults(func=_affine_vacuum)
    q = asub.add_parser("sl2")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--validate", action="store_true")
    q.add_argument("--H", type=int, default=None)
    fmt(q)
    q.set_defaults(func=_affine_sl2)

    p = sub.add_parser("wred", help="minimal W-algebra reduction")
    wsub = p.add_subparsers(dest="action", required=True)
    q = wsub.add_parser("reduce")
    q.add_argument("--type", default="A1")
    for n in ("p", "q", "r", "s"):
        q.add_argument(f"--{n}", type=int, default=None)
    q.add_argument("--k", default=None)
    q.add_argument("--weight", default=None,
                   help="finite coroot pairings; the level comes from --k or --p/--q")
    q.add_argument("--H", type=int, default=None)
    fmt(q)
    q.set_defaults(func=_wred_reduce)
    q = wsub.add_parser("recovery")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--check", action="store_true")
    q.add_argument("--H", type=int, default=None)
    fmt(q)
    q.set_defaults(func=_wred_recovery)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--suite", default="all", help="all, quick, or a list like C1,C5")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def _write(payload, kind, args, cfg, out):
    """``kind`` is "text", "json" (forced) or a default format for the command."""
    if kind == "text":
        out.write(payload + "\n")
        return
    if kind == "json":
        fmt = "json"
    else:
        fmt = getattr(args, "format", None) or kind or cfg.output_format
    emit(payload, fmt, out)


_NEGATIVE_VALUE = re.compile(r"^-[0-9][0-9/,\-]*$")


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """Let ``--k -2/3`` and ``--mu -1,2`` through; argparse only knows plain negatives."""
    out: List[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE_VALUE.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        argv = sys.argv[1:] if argv is None else list(argv)
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = load_config()
        payload, kind = args.func(args, cfg)
        _write(payload, kind, args, cfg, out)
        return EXIT_OK
    except UsageError as exc:
        err.write(f"admkit: usage error: {exc}\n")
        parser.print_usage(err)
        return EXIT_USAGE
    except VerificationFailed as exc:
        _write(exc.payload, "text" if isinstance(exc.payload, str) else None, args, cfg, out)
        err.write("admkit: verification failed\n")
        return EXIT_VERIFY
    except (DomainError, ExactMathError, partitions.CutoffError, ValueError,
            ZeroDivisionError) as exc:
        err.write(f"admkit: domain error: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
