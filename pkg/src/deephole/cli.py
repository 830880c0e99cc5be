"""Command-line front end: ``deephole <command> ...``.

Exit status: 0 on success, 1 when a verification or table row fails,
2 on usage errors (including malformed words and polynomials).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import distance as dist_mod
from .dft import dft, dft_poly, idft, idft_poly
from .errors import DeepHoleError
from .gf import field_of_order
from .poly import Poly, Word, eval_word, lagrange_interpolate
from .rscode import CyclicRSCode, RSCode, encode_cyclic, encode_eval, is_codeword
from .tables import TABLE_IDS, reports_to_csv, reproduce_table


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.strip().strip("()[]").split(",") if t.strip()]


def _field(args):
    modulus = _ints(args.modulus) if getattr(args, "modulus", None) else None
    return field_of_order(args.q, modulus)


def _code(args):
    f = _field(args)
    cls = CyclicRSCode if getattr(args, "version", "eval") == "cyclic" else RSCode
    return cls(f, args.k)


def _poly(field, text: str) -> Poly:
    if "x" in text:
        return Poly.parse(field, text)
    return Poly(field, _ints(text))


def cmd_field(args) -> tuple[dict, int]:
    f = _field(args)
    return {
        "kind": "field",
        "field": f.descriptor,
        "p": f.p, "m": f.m, "q": f.q,
        "modulus": list(f.modulus) if f.modulus else None,
        "alpha": f.alpha,
        "alpha_powers": f.alpha_powers(),
    }, 0


def cmd_encode(args) -> tuple[dict, int]:
    code = _code(args)
    msg = _poly(code.field, args.message)
    cw = encode_cyclic(code, msg) if code.version == "cyclic" else encode_eval(code, msg)
    return {"kind": "codeword", "code": code.descriptor(), "message": str(msg),
            "codeword": str(cw)}, 0


def cmd_interpolate(args) -> tuple[dict, int]:
    f = _field(args)
    u = lagrange_interpolate(Word.parse(f, args.word))
    deg = u.degree
    return {"kind": "interpolation", "field": f.descriptor, "word": args.word,
            "interpolant": str(u), "degree": None if u.is_zero() else deg}, 0


def cmd_distance(args) -> tuple[dict, int]:
    code = _code(args)
    if code.version == "cyclic":
        u = _poly(code.field, args.word)
    else:
        u = Word.parse(code.field, args.word)
    rep = dist_mod.error_distance_exact(code, u, workers=args.workers, force=args.force)
    out = {"kind": "distance", "code": code.descriptor(), "word": str(u)}
    out.update(rep.to_dict())
    return out, 0


def cmd_deephole(args) -> tuple[dict, int]:
    code = _code(args)
    if args.verify:
        mode = "sample" if args.sample else "exhaustive"
        if mode == "sample" and args.seed is None:
            raise UsageError("--sample needs --seed")
        kw = dict(mode=mode, count=args.sample, seed=args.seed, workers=args.workers, force=args.force)
        if code.version == "cyclic":
            summary = dist_mod.verify_cyclic_families(code, **kw)
        else:
            summary = dist_mod.verify_monomial_families(code, **kw)
        return summary.to_dict(), 0 if summary.passed else 1
    shape = {"high": "MonomialHigh", "k": "MonomialK", "g1": "CyclicG1", "g2": "CyclicG2"}[args.shape]
    tail = _poly(code.field, args.tail) if args.tail else Poly.zero(code.field)
    fam = dist_mod.DeepHoleFamily(shape, args.a, tail)
    if code.version == "cyclic":
        word = dist_mod.construct_cyclic_deep_hole(code, fam)
    else:
        word = dist_mod.construct_deep_hole(code, fam)
    rep = dist_mod.error_distance_exact(code, word, workers=args.workers, force=args.force)
    out = {"kind": "deephole", "code": code.descriptor(), "shape": shape, "a": args.a,
           "tail": str(tail), "word": str(word)}
    out.update(rep.to_dict())
    return out, 0 if rep.is_deep_hole else 1


def cmd_dft(args) -> tuple[dict, int]:
    f = _field(args)
    if args.poly:
        p = _poly(f, args.poly)
        res = idft_poly(p) if args.inverse else dft_poly(p)
        src = str(p)
    else:
        w = Word.parse(f, args.word)
        res = idft(w) if args.inverse else dft(w)
        src = str(w)
    return {"kind": "transform", "field": f.descriptor, "inverse": args.inverse,
            "input": src, "output": str(res)}, 0


def cmd_reproduce(args) -> tuple[dict, int]:
    ids = TABLE_IDS if args.table == "all" else (args.table,)
    reports = [reproduce_table(t, workers=args.workers) for t in ids]
    ok = all(r.passed for r in reports)
    if len(reports) == 1:
        out = reports[0].to_dict()
    else:
        out = {"kind": "tables", "reports": [r.to_dict() for r in reports], "passed": ok}
    out["_csv"] = reports_to_csv(reports)
    out["_reports"] = reports
    return out, 0 if ok else 1


def cmd_census(args) -> tuple[dict, int]:
    code = RSCode(_field(args), args.k)
    mode = "sample" if args.sample else "exhaustive"
    if mode == "sample" and args.seed is None:
        raise UsageError("--sample needs --seed")
    rep = dist_mod.census_other_deep_holes(code, mode=mode, count=args.sample, seed=args.seed,
                                       workers=args.workers, force=args.force)
    out = rep.to_dict()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["distance", "count"])
    for d, c in rep.histogram.items():
        w.writerow([d, c])
    out["_csv"] = buf.getvalue()
    bad = any(h["verified"] is False for h in rep.deep_holes)
    return out, 1 if bad else 0


COMMANDS = {
    "field": cmd_field, "encode": cmd_encode, "interpolate": cmd_interpolate,
    "distance": cmd_distance, "deephole": cmd_deephole, "dft": cmd_dft,
    "reproduce": cmd_reproduce, "census": cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "json", "csv"], default="human")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--force", action="store_true", help="lift the exhaustive search caps")

    fld = argparse.ArgumentParser(add_help=False)
    fld.add_argument("--q", type=int, required=True, help="field order p^m")
    fld.add_argument("--modulus", help="modulus coefficients c0,...,cm (low degree first)")

    code = argparse.ArgumentParser(add_help=False, parents=[fld])
    code.add_argument("--k", type=int, required=True)
    code.add_argument("--version", choices=["eval", "cyclic"], default="eval")

    ap = argparse.ArgumentParser(prog="deephole", description="Reed-Solomon deep-hole toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("field", parents=[common, fld], help="describe GF(q)")

    p = sub.add_parser("encode", parents=[common, code], help="encode a message polynomial")
    p.add_argument("--message", required=True, help="coefficients c0,c1,... or a polynomial")

    p = sub.add_parser("interpolate", parents=[common, fld], help="interpolant of a word")
    p.add_argument("--word", required=True)

    p = sub.add_parser("distance", parents=[common, code], help="exact error distance")
    p.add_argument("--word", required=True, help="word, or coefficients for --version cyclic")

    p = sub.add_parser("deephole", parents=[common, code], help="construct or verify deep holes")
    p.add_argument("--verify", action="store_true", help="check every (or sampled) family member")
    p.add_argument("--sample", type=int, help="number of random family members to check")
    p.add_argument("--seed", type=int)
    p.add_argument("--shape", choices=["high", "k", "g1", "g2"], default="high")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--tail", help="tail polynomial coefficients, degree <= k-1")

    p = sub.add_parser("dft", parents=[common, fld], help="forward or inverse transform")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--poly")
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("reproduce", parents=[common], help="re-derive the published tables")
    p.add_argument("--table", choices=list(TABLE_IDS) + ["all"], default="all")

    p = sub.add_parser("census", parents=[common, fld], help="search for other deep holes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    return ap


def _human(out: dict) -> str:
    lines = []
    for key, val in out.items():
        if key.startswith("_"):
            continue
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{key}:")
            for item in val:
                lines.append("  - " + ", ".join(f"{k}={v}" for k, v in item.items()
                                               if not isinstance(v, (dict, list))))
                for k, v in item.items():
                    if isinstance(v, dict):
                        lines.append(f"    {k}: " + ", ".join(f"{a}={b}" for a, b in v.items()))
        elif isinstance(val, dict):
            lines.append(f"{key}: " + ", ".join(f"{a}={b}" for a, b in val.items()))
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def render(out: dict, fmt: str) -> str:
    if fmt == "csv":
        if "_csv" not in out:
            raise UsageError("csv output is available for reproduce and census only")
        return out["_csv"].rstrip("\n")
    public = {k: v for k, v in out.items() if not k.startswith("_")}
    if fmt == "json":
        return json.dumps(public, sort_keys=True, indent=2)
    return _human(public)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, status = COMMANDS[args.command](args)
        text = render(out, args.format)
    except (UsageError, DeepHoleError, ValueError, TypeError) as exc:
        print(f"deephole {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
