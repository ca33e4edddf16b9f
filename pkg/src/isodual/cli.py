"""Command-line entry point: ``isodual <command> [options]``.

Exit codes: 0 ok, 2 validation error, 3 inconclusive certificate,
4 definitive negative (NotIsoDual).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import codes, curves, cyclotomic
from .divisors import riemann_hurwitz
from .field import GF, make_field
from .serialize import canonical_json, code_from_dict, code_id, code_to_dict

EXIT_OK, EXIT_VALIDATION, EXIT_INCONCLUSIVE, EXIT_NEGATIVE = 0, 2, 3, 4

_TERM = re.compile(r"^(?:(\d+)\*?)?(x(?:\^(\d+))?)?$")


def parse_poly(text: str) -> list[int]:
    """'x^3 + 2*x + 1' -> little-endian coefficient codes [1, 2, 0, 1]."""
    coeffs: dict[int, int] = {}
    for raw in text.replace("-", "+-").split("+"):
        term = raw.replace(" ", "")
        if not term:
            continue
        if term.startswith("-"):
            raise ValueError("use field codes for coefficients, not signs")
        m = _TERM.match(term)
        if not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"cannot parse term {raw!r}")
        c = int(m.group(1)) if m.group(1) else 1
        e = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        coeffs[e] = coeffs.get(e, 0) + c
    if not coeffs:
        raise ValueError("empty polynomial")
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return out


def _emit(args, payload: dict, csv_text: str | None = None) -> None:
    text = csv_text if (args.format == "csv" and csv_text is not None) else canonical_json(payload)
    if args.out:
        Path(args.out).write_text(text + ("" if text.endswith("\n") else "\n"), encoding="utf-8")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _load_code(path: str):
    return code_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "rational":
        F = GF(args.q)
        alphas = _alphas_arg(args.alphas) if args.alphas not in (None, "auto") else list(F.nonzero())[: args.n]
        code = codes.build_rational_isodual(F, alphas)
    elif fam == "eab":
        F = make_field(args.p, args.m_ext)
        model = curves.ElemAbelian(F, args.qprime or args.p, args.mu, parse_poly(args.fx))
        alphas = None if args.alphas in (None, "auto") else _alphas_arg(args.alphas)
        code = codes.build_eab_lift(model, alphas)
    elif fam == "hermitian":
        if args.q > 4 and not args.long:
            raise codes.CodeError("Hermitian codes with q > 4 need --long")
        code = codes.build_hermitian_isodual(args.q, args.beta)
    elif fam == "hermitian-cover":
        code = codes.build_hermitian_cover(args.q, args.ell)
    elif fam == "tower":
        code = codes.build_tower_step1(args.q)
    elif fam == "ggs":
        if not args.long:
            raise codes.CodeError("GGS construction needs --long")
        code = codes.build_ggs_lift(args.q, args.r)
    else:
        raise codes.CodeError(f"unknown family {fam!r}")
    payload = code_to_dict(code)
    _emit(args, payload, code.generator.to_csv())
    print(f"[{code.n},{code.k}] {fam} id={code_id(code)[:16]}", file=sys.stderr)
    return EXIT_OK


def _alphas_arg(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def cmd_certify(args) -> int:
    code = _load_code(args.inp)
    x = _alphas_arg(args.x) if args.x else None
    if x is None and code.provenance.family == "hermitian":
        x = codes.hermitian_certificate(code).tolist()
    cert = codes.certify_isodual(code, candidate_x=x, seed=args.seed, method=args.method)
    payload = cert.to_dict() | {"seed": args.seed, "field": code.field.to_dict()}
    _emit(args, payload)
    if cert.verdict == "Inconclusive":
        return EXIT_INCONCLUSIVE
    if cert.verdict == "NotIsoDual":
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_distance(args) -> int:
    code = _load_code(args.inp)
    rep = codes.min_distance(code, cap=args.cap, require_exact=args.exact, threads=args.threads, seed=args.seed)
    _emit(args, rep.to_dict() | {"seed": args.seed, "n": code.n, "k": code.k})
    return EXIT_OK


def cmd_census(args) -> int:
    c = args.curve
    if c == "curveX":
        out = curves.curveX_census(args.q)
    elif c == "hermitian":
        out = curves.hermitian_places(args.q).to_dict()
    elif c == "eab":
        F = make_field(args.p, args.m_ext)
        model = curves.ElemAbelian(F, args.qprime or args.p, args.mu, parse_poly(args.fx))
        out = model.split_report().to_dict() | {"split_alphas": model.split_alphas(), "genus": model.genus}
    elif c == "suzuki":
        if args.q > 8 and not args.long:
            raise codes.CodeError("Suzuki census beyond q = 8 needs --long")
        out = curves.SuzukiLocus(args.q).census()
    elif c == "ggs":
        if args.q ** (2 * args.r) > 1 << 12 and not args.long:
            raise codes.CodeError("GGS census over fields larger than 2^12 needs --long")
        model = curves.GGSCover(args.q, args.r)
        split = model.split_alphas()
        out = {
            "q": args.q,
            "r": args.r,
            "split_alphas": len(split),
            "nonzero_split_alphas": sum(1 for a in split if a),
            "trace_split_alphas": len(model.trace_split_alphas()),
            "genus": model.genus,
        }
    else:
        raise codes.CodeError(f"unknown curve {c!r}")
    _emit(args, out)
    return EXIT_OK


def cmd_params(args) -> int:
    fam = args.family
    kw = {
        "rational": {"n": args.n},
        "hermitian": {"q": args.q},
        "eab": {"qprime": args.qprime, "m": args.m, "n": args.n},
        "hermitian-cover": {"q": args.q, "ell": args.ell},
        "suzuki": {"q": args.q},
        "ggs": {"q": args.q, "r": args.r},
        "tower": {"q": args.q},
        "cyclotomic-binary": {"n": args.n},
        "cyclotomic-ternary": {"n": args.n},
    }.get(fam)
    if kw is None:
        raise codes.CodeError(f"unknown family {fam!r}")
    missing = [k for k, v in kw.items() if v is None]
    if missing:
        raise codes.CodeError(f"family {fam} needs --{' --'.join(missing)}")
    _emit(args, codes.param_report(fam, **kw).to_dict())
    return EXIT_OK


def cmd_genus(args) -> int:
    c = args.curve
    if c == "Kn":
        g = cyclotomic.genus_Kn(args.q, args.n, force=args.force)
        out = {"curve": "Kn", "q": args.q, "n": args.n, "genus": g}
    else:
        model = {
            "hermitian": lambda: curves.Hermitian(args.q),
            "curveX": lambda: curves.CurveX(args.q),
            "suzuki": lambda: curves.SuzukiLocus(args.q),
            "ggs": lambda: curves.GGSCover(args.q, args.r),
        }[c]()
        out = {"curve": c, "genus": model.genus, "riemann_hurwitz": riemann_hurwitz(model.descriptor())}
    _emit(args, out)
    return EXIT_OK


def cmd_carlitz(args) -> int:
    rho = cyclotomic.carlitz_poly(args.q, parse_poly(args.f))
    out = {"q": args.q, "f": args.f, "rho": str(rho), "coeffs": [list(c) for c in rho.coeffs]}
    if args.identity:
        i, n = args.identity
        out["identity"] = {
            "i": i,
            "n": n,
            "holds": cyclotomic.carlitz_identity_check(args.q, i, n),
            "support": cyclotomic.binomial_support(GF(args.q).p, i, n),
        }
    _emit(args, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--cap", type=int, default=1 << 22, help="enumeration budget q^k")
    common.add_argument("--long", action="store_true", help="allow large runs")
    common.add_argument("--format", choices=["json", "csv"], default="json")

    curve_opts = argparse.ArgumentParser(add_help=False)
    curve_opts.add_argument("--q", type=int)
    curve_opts.add_argument("--r", type=int)
    curve_opts.add_argument("--p", type=int)
    curve_opts.add_argument("--m-ext", type=int, default=1)
    curve_opts.add_argument("--qprime", type=int)
    curve_opts.add_argument("--mu", type=int, default=1)
    curve_opts.add_argument("--fx")

    ap = argparse.ArgumentParser(prog="isodual", description="Iso-dual AG code toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, curve_opts])
    p.add_argument("--family", required=True,
                   choices=["rational", "eab", "hermitian", "hermitian-cover", "tower", "ggs"])
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--beta", type=int, default=1)
    p.add_argument("--ell", type=int)
    p.add_argument("--alphas", help="'auto' or comma-separated element codes")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", parents=[common])
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--x", help="comma-separated candidate twist vector to check")
    p.add_argument("--method", choices=["auto", "pairs", "systematic"], default="auto")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("distance", parents=[common])
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--exact", action="store_true", help="fail unless exact enumeration fits in --cap")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("census", parents=[common, curve_opts])
    p.add_argument("--curve", required=True, choices=["curveX", "hermitian", "eab", "suzuki", "ggs"])
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("params", parents=[common])
    p.add_argument("--family", required=True)
    for name in ("q", "r", "n", "m", "qprime", "ell"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("genus", parents=[common])
    p.add_argument("--curve", default="Kn", choices=["Kn", "hermitian", "curveX", "suzuki", "ggs"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--force", action="store_true", help="allow q outside {2, 3} for Kn")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("carlitz", parents=[common])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--f", required=True, help="polynomial in x, e.g. 'x^2 + 1'")
    p.add_argument("--identity", type=int, nargs=2, metavar=("I", "N"))
    p.set_defaults(func=cmd_carlitz)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, KeyError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
