"""Command-line front end.

Exit codes: 0 on success, 1 when a decision verb answers false/none, 2 on
usage or parse errors.  ``--json`` prints one document
``{"verb": ..., "result": ..., "witness": ...}``.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from typing import Any, Optional

from . import bundle_p1 as bp
from . import chow, concordance
from .bundle_p1 import SplitBundle, format_bundle
from .laurent import format_matrix
from .parsing import ParseError, parse_bundle, parse_matrix
from .pic_group import PicGroup
from .transition_p1 import ExtClass, build_extension, family, splitting_type

DECISION_VERBS = {"concordant", "verify-cert", "weak-equiv", "chow-iso"}


class UsageError(Exception):
    pass


class Outcome:
    def __init__(self, result: Any, text: str, witness: Any = None, ok: bool = True):
        self.result = result
        self.text = text
        self.witness = witness
        self.ok = ok


def _bundle_json(e: SplitBundle) -> dict:
    return {"text": format_bundle(e), "degrees": list(e.degrees)}


def _parse_class(text: str, G: PicGroup) -> concordance.BundleClass:
    """``RANK:DET`` with DET an element literal of ``G``."""
    try:
        rank, det = text.split(":", 1)
        return concordance.BundleClass(int(rank), G.parse_element(det))
    except ValueError as exc:
        raise UsageError(f"bad bundle class {text!r}; expected RANK:DET such as 3:1,2 ({exc})") from exc


def _parse_class_list(text: str) -> list[Fraction]:
    text = text.strip()
    return [Fraction(x) for x in text.split(",")] if text else []


def _ext_class(args) -> ExtClass:
    sub, quotient = parse_bundle(args.sub), parse_bundle(args.quotient)
    return ExtClass(sub, quotient, _parse_class_list(args.ext_class or ""))


# ---------------------------------------------------------------- verbs


def cmd_canon(args) -> Outcome:
    if args.pic:
        G = PicGroup.parse(args.pic)
        bc = _parse_class(args.bundle, G)
        text = ("O^%d + " % (bc.rank - 1) if bc.rank > 1 else "") + f"L[{bc.determinant}]"
        return Outcome({"rank": bc.rank, "det": str(bc.determinant), "text": text}, text)
    c = concordance.canonical_form(parse_bundle(args.bundle))
    return Outcome(_bundle_json(c), format_bundle(c))


def cmd_concordant(args) -> Outcome:
    if args.pic:
        G = PicGroup.parse(args.pic)
        ans = concordance.concordant_classes(_parse_class(args.e, G), _parse_class(args.f, G))
        return Outcome(ans, str(ans).lower(), ok=ans)
    e, f = parse_bundle(args.e), parse_bundle(args.f)
    ans = concordance.concordant(e, f)
    witness = None
    if ans:
        witness = concordance.certificate_to_dict(concordance.certificate_between(e, f))
    return Outcome(ans, str(ans).lower(), witness, ok=ans)


def cmd_certify(args) -> Outcome:
    e = parse_bundle(args.bundle)
    cert = concordance.generate_certificate(e)
    lines = [f"{format_bundle(e)} ~ {format_bundle(cert.endpoints[1])}"]
    for i, mv in enumerate(cert.moves):
        lines.append(f"  {i}: {mv.kind:<13} {format_bundle(mv.source)} -> {format_bundle(mv.target)}")
    verdict = concordance.verify_certificate(cert)
    return Outcome(concordance.certificate_to_dict(cert), "\n".join(lines), {"verified": verdict.ok})


def cmd_verify_cert(args) -> Outcome:
    try:
        raw = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
        doc = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from exc
    if isinstance(doc, dict) and doc.get("verb") == "certify":
        doc = doc.get("result")
    if not isinstance(doc, dict):
        raise UsageError("certificate must be a JSON object")
    cert = concordance.certificate_from_dict(doc)
    v = concordance.verify_certificate(cert)
    diag = None if v.ok else {"reason": v.reason, "move": v.move_index, "malformed": v.malformed}
    return Outcome(v.ok, str(v.ok).lower() if v.ok else f"false: {v}", diag, ok=v.ok)


def cmd_ext_dim(args) -> Outcome:
    d = bp.ext1_dim(parse_bundle(args.quotient), parse_bundle(args.sub))
    return Outcome(d, str(d))


def cmd_build_ext(args) -> Outcome:
    M = build_extension(_ext_class(args))
    return Outcome(format_matrix(M), format_matrix(M))


def cmd_family(args) -> Outcome:
    lam = Fraction(args.lam)
    M = family(_ext_class(args), lam)
    st = splitting_type(M)
    text = f"{format_matrix(M)}\nsplitting type: {format_bundle(st)}"
    return Outcome(format_matrix(M), text, {"lambda": str(lam), "splitting_type": _bundle_json(st)})


def cmd_split_type(args) -> Outcome:
    st = splitting_type(parse_matrix(args.matrix))
    return Outcome(_bundle_json(st), format_bundle(st))


def cmd_weak_equiv(args) -> Outcome:
    if args.pic:
        G = PicGroup.parse(args.pic)
        w = chow.weak_equivalent_curve(G, G.parse_element(args.a), G.parse_element(args.b), args.n)
        ans = w is not None
        return Outcome(ans, str(ans).lower() + (f" (L = {w})" if ans else ""), str(w) if ans else None, ok=ans)
    try:
        a, b = int(args.a), int(args.b)
    except ValueError as exc:
        raise UsageError(f"--a/--b must be integers without --pic: {exc}") from exc
    ans = chow.weak_equivalent_p1(args.n, a, b)
    witness = (a - b) // (args.n + 1) if ans else None
    return Outcome(ans, str(ans).lower(), witness, ok=ans)


def cmd_chow_iso(args) -> Outcome:
    R1, R2 = chow.ProjBundleRing.parse(args.r1), chow.ProjBundleRing.parse(args.r2)
    w = chow.find_graded_iso(R1, R2)
    weq = R1.n == R2.n and chow.weak_equivalent_p1(R1.n, R1.a, R2.a)
    text = f"{'isomorphic' if w else 'not isomorphic'}"
    if w:
        text += f": {w}"
    text += f"\ncriterion (n+1 | a-b): {str(weq).lower()}"
    witness = {"iso": w.to_dict() if w else None, "weak_equivalent": weq}
    return Outcome(w is not None, text, witness, ok=w is not None)


def cmd_enum_isos(args) -> Outcome:
    R1, R2 = chow.ProjBundleRing.parse(args.r1), chow.ProjBundleRing.parse(args.r2)
    isos = chow.enumerate_graded_isos(R1, R2, args.bound)
    text = "\n".join(str(w) for w in isos) or "(none)"
    return Outcome([w.to_dict() for w in isos], f"{len(isos)} isomorphism(s)\n{text}", {"bound": args.bound})


def cmd_verify_thm_count(args) -> Outcome:
    report = chow.verify_theorem_count(args.bound)
    ok = all(r["pass"] for r in report)
    text = "\n".join(f"{r['check']}: {'pass' if r['pass'] else 'FAIL'}" for r in report)
    return Outcome(report, text, None, ok=ok)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--pic", metavar="GROUP", help="abstract-curve mode, e.g. 'Z x Z/5'")

    p = argparse.ArgumentParser(prog="a1bundles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("canon", cmd_canon, "canonical form O^(n-1) + det")
    sp.add_argument("bundle", help="bundle expression, or RANK:DET with --pic")

    sp = add("concordant", cmd_concordant, "decide A^1-concordance")
    sp.add_argument("e")
    sp.add_argument("f")

    sp = add("certify", cmd_certify, "emit a concordance certificate")
    sp.add_argument("bundle")

    sp = add("verify-cert", cmd_verify_cert, "replay a certificate file ('-' for stdin)")
    sp.add_argument("file")

    sp = add("ext-dim", cmd_ext_dim, "dim Ext^1(QUOTIENT, SUB)")
    sp.add_argument("quotient")
    sp.add_argument("sub")

    for name, func, help in (
        ("build-ext", cmd_build_ext, "transition matrix of an extension"),
        ("family", cmd_family, "fiber of the one-parameter family"),
    ):
        sp = add(name, func, help)
        sp.add_argument("--sub", required=True)
        sp.add_argument("--quotient", required=True)
        sp.add_argument("--class", dest="ext_class", default="", help="comma-separated Cech coefficients")
        if name == "family":
            sp.add_argument("--lambda", dest="lam", default="1", help="exact rational fiber parameter")

    sp = add("split-type", cmd_split_type, "splitting type of a Laurent matrix")
    sp.add_argument("matrix", help="rows separated by ';', entries by ','")

    sp = add("weak-equiv", cmd_weak_equiv, "A^1-weak equivalence of P^n-bundles")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)

    sp = add("chow-iso", cmd_chow_iso, "search a graded Chow ring isomorphism")
    sp.add_argument("r1", help="e.g. 'PB(n=2, a=1)'")
    sp.add_argument("r2")

    sp = add("enum-isos", cmd_enum_isos, "enumerate graded isomorphisms")
    sp.add_argument("r1")
    sp.add_argument("r2")
    sp.add_argument("--bound", type=int, default=3)

    sp = add("verify-thm-count", cmd_verify_thm_count, "run the P^2 counterexample checks")
    sp.add_argument("--bound", type=int, default=3)
    return p


def _emit(args, out: Outcome):
    if args.json:
        print(json.dumps({"verb": args.verb, "result": out.result, "witness": out.witness}, ensure_ascii=False))
    else:
        print(out.text)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (ParseError, UsageError, ValueError, ZeroDivisionError) as exc:
        if getattr(args, "json", False):
            print(json.dumps({"verb": args.verb, "error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, out)
    if args.verb in DECISION_VERBS or args.verb == "verify-thm-count":
        return 0 if out.ok else 1
    return 0


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process; return the exit code and captured stdout."""
    buf, err = io.StringIO(), io.StringIO()
    with redirect_stdout(buf), redirect_stderr(err):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
