"""Command line surface.

Subcommands: product, coproduct, antipode, convert, map, gamma, expand,
verify.  Signed permutations are written as comma separated signed
integers ('id' for the empty one), regularized compositions use 'e' for
epsilon ('empty' for the empty one), and rationals as 'p/q'.  Output is
JSON by default, '--format text' for a human rendering.

Exit codes: 0 on success, 1 when a verification suite reports failures,
2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .lincomb import lincomb_to_json, lincomb_to_text
from . import hopf, morphisms, ppartitions
from .compositions import comp_to_text, text_to_comp
from .words import is_signed_permutation, perm_to_text, text_to_perm


class CLIError(Exception):
    pass


PERM_ALGEBRAS = {"hsym", "ssym"}
BASIS_LETTER = {"hsym": "P", "ssym": "P", "rqsym-m": "M", "qsym": "M", "rqsym-f": "F"}


def _parse_key(algebra, text):
    if algebra in PERM_ALGEBRAS:
        key = text_to_perm(text)
        if not is_signed_permutation(key):
            raise CLIError(f"{text!r} is not a signed permutation")
        if algebra == "ssym" and any(a < 0 for a in key):
            raise CLIError(f"{text!r} has negative letters; ssym needs a permutation")
        return key
    key = text_to_comp(text)
    if algebra == "qsym" and any(not isinstance(p, int) for p in key):
        raise CLIError(f"{text!r} has epsilon parts; qsym needs a composition")
    return key


def _key_text(algebra):
    return perm_to_text if algebra in PERM_ALGEBRAS else comp_to_text


def _render_key(algebra):
    letter = BASIS_LETTER[algebra]
    encode = _key_text(algebra)
    return lambda key: f"{letter}[{encode(key)}]"


def _emit_lincomb(lc, algebra, fmt):
    encode = _key_text(algebra)
    if fmt == "text":
        print(lincomb_to_text(lc, _render_key(algebra)))
    else:
        print(json.dumps(lincomb_to_json(lc, encode), indent=2))


def _emit_tensor(t, algebra, fmt):
    encode = _key_text(algebra)
    if fmt == "text":
        render = _render_key(algebra)
        print(lincomb_to_text(t, lambda kk: f"{render(kk[0])}(x){render(kk[1])}"))
    else:
        print(json.dumps(lincomb_to_json(t, lambda kk: [encode(kk[0]), encode(kk[1])]),
                         indent=2))


def _parse_lambda(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CLIError(f"bad rational {text!r}") from None


def cmd_product(args):
    ctx = hopf.context_by_name(args.algebra, _parse_lambda(args.lam))
    a = _parse_key(args.algebra, args.elements[0])
    b = _parse_key(args.algebra, args.elements[1])
    _emit_lincomb(ctx.product(a, b), args.algebra, args.format)
    return 0


def cmd_coproduct(args):
    ctx = hopf.context_by_name(args.algebra, _parse_lambda(args.lam))
    key = _parse_key(args.algebra, args.elements[0])
    _emit_tensor(ctx.coproduct(key), args.algebra, args.format)
    return 0


def cmd_antipode(args):
    ctx = hopf.context_by_name(args.algebra, _parse_lambda(args.lam))
    key = _parse_key(args.algebra, args.elements[0])
    _emit_lincomb(ctx.antipode(key), args.algebra, args.format)
    return 0


def cmd_convert(args):
    if {args.frm, args.to} != {"f", "m"}:
        raise CLIError("convert needs --from f --to m or --from m --to f")
    key = text_to_comp(args.elements[0])
    lc = hopf.f_to_m_cached(key) if args.frm == "f" else hopf.m_to_f_cached(key)
    algebra = "rqsym-m" if args.to == "m" else "rqsym-f"
    _emit_lincomb(lc, algebra, args.format)
    return 0


def cmd_map(args):
    which = args.which
    text = args.elements[0]
    if which in ("d1", "d2", "phi2"):
        key = _parse_key("hsym", text)
        if which == "d1":
            if any(a < 0 for a in key):
                raise CLIError("d1 needs an ordinary permutation")
            out, algebra = morphisms.d1(key), "rqsym-f"
        elif which == "d2":
            out, algebra = morphisms.d2(key), "rqsym-f"
        else:
            out, algebra = morphisms.phi2(key), "ssym"
    else:
        key = text_to_comp(text)
        if which == "phi1M":
            out, algebra = morphisms.phi1_m(key), "qsym"
        else:
            out, algebra = morphisms.phi1_f(key), "rqsym-f"
    _emit_lincomb(out, algebra, args.format)
    return 0


def cmd_gamma(args):
    try:
        with open(args.poset) as fh:
            poset = ppartitions.parse_poset(fh.read())
    except OSError as exc:
        raise CLIError(f"cannot read poset file: {exc}") from None
    series = ppartitions.gamma(poset, args.vars)
    if args.format == "text":
        print(series.to_text())
    else:
        print(json.dumps(series.to_json(), indent=2))
    return 0


def cmd_expand(args):
    alpha = text_to_comp(args.elements[0])
    fn = ppartitions.expand_m if args.basis == "m" else ppartitions.expand_f
    series = fn(alpha, args.vars)
    if args.format == "text":
        print(series.to_text())
    else:
        print(json.dumps(series.to_json(), indent=2))
    return 0


def _suite_shard(payload):
    """Worker entry: run one shard of a suite.  Module level so the
    process pool can pickle it."""
    kind, params, shard = payload
    if kind == "hopf":
        name, lam_text, degree = params
        ctx = hopf.context_by_name(name, Fraction(lam_text))
        return hopf.verify_hopf(ctx, degree, shard)
    if kind == "square":
        return morphisms.verify_square(params, shard)
    if kind == "morphisms":
        return morphisms.verify_morphism_laws(params, shard)
    if kind == "annihilation":
        return morphisms.verify_annihilation(params, shard)
    if kind == "gamma":
        max_len, k, pair_len, pair_k = params
        return ppartitions.verify_gamma_identities(
            max_len=max_len, k=k, pair_len=pair_len, pair_k=pair_k, shard=shard
        )
    raise ValueError(kind)


def _run_sharded(kind, params, jobs):
    """Run a suite across worker processes and merge the law reports.

    The merge only concatenates shard tallies, so results are identical
    for every jobs setting.
    """
    if jobs <= 1:
        return _suite_shard((kind, params, (0, 1)))
    import concurrent.futures

    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_suite_shard, (kind, params, (i, jobs))) for i in range(jobs)
        ]
        partials = [f.result() for f in futures]
    return hopf.merge_reports(partials)


def cmd_verify(args):
    suite = args.suite
    degree = args.max_degree
    jobs = args.jobs
    meta = {"suite": suite, "max_degree": degree}

    if suite == "hopf":
        if args.lam is None:
            raise CLIError("verify --suite hopf needs an explicit --lambda")
        lam = _parse_lambda(args.lam)
        meta["lambda"] = str(lam)
        algebras = [args.algebra] if args.algebra else ["hsym", "ssym", "rqsym-m"]
        laws = []
        for name in algebras:
            got = _run_sharded("hopf", (name, str(lam), degree), jobs)
            for law in got:
                law.law = f"{name}: {law.law}"
            laws.extend(got)
    elif suite == "square":
        laws = _run_sharded("square", degree, jobs)
    elif suite == "morphisms":
        laws = _run_sharded("morphisms", degree, jobs)
        laws += _run_sharded("annihilation", degree, jobs)
    elif suite == "gamma":
        params = (degree, 2 * degree, degree + 1, 2 * (degree + 1))
        laws = _run_sharded("gamma", params, jobs)
    else:
        raise CLIError(f"unknown suite {suite!r}")

    report = hopf.report_to_json(laws, **meta)
    failed = report["summary"]["failed"]
    total = report["summary"]["total"]
    if args.format == "text":
        for check in report["checks"]:
            print(f"{check['status']:4s}  {check['law']}  ({check['checked']} checks)")
        print(f"summary: {failed} mismatches / {total} checks")
    else:
        print(json.dumps(report, indent=2))
    return 0 if failed == 0 else 1


class _Parser(argparse.ArgumentParser):
    # let signed permutations like "-3,1,2,-4" pass as positionals
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d[\d,\-/]*$")


def build_parser():
    parser = _Parser(
        prog="wqsym",
        description="Hopf algebras of signed permutations and weak "
        "quasi-symmetric functions",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, nargs_elements=0):
        p.add_argument("--format", choices=("json", "text"), default="json")
        if nargs_elements:
            p.add_argument("elements", nargs=nargs_elements)

    p = sub.add_parser("product", help="multiply two basis elements")
    p.add_argument("--algebra", required=True,
                   choices=("hsym", "ssym", "rqsym-m", "rqsym-f", "qsym"))
    p.add_argument("--lambda", dest="lam", default="-1",
                   help="quasi-shuffle weight for hsym (default -1)")
    common(p, 2)
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("coproduct", help="coproduct of a basis element")
    p.add_argument("--algebra", required=True,
                   choices=("hsym", "ssym", "rqsym-m", "rqsym-f", "qsym"))
    p.add_argument("--lambda", dest="lam", default="-1")
    common(p, 1)
    p.set_defaults(fn=cmd_coproduct)

    p = sub.add_parser("antipode", help="antipode of a basis element")
    p.add_argument("--algebra", required=True,
                   choices=("hsym", "ssym", "rqsym-m", "rqsym-f", "qsym"))
    p.add_argument("--lambda", dest="lam", default="-1")
    common(p, 1)
    p.set_defaults(fn=cmd_antipode)

    p = sub.add_parser("convert", help="change basis between F and M")
    p.add_argument("--from", dest="frm", required=True, choices=("f", "m"))
    p.add_argument("--to", dest="to", required=True, choices=("f", "m"))
    common(p, 1)
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("map", help="apply one of the four surjections")
    p.add_argument("--which", required=True,
                   choices=("d1", "d2", "phi1M", "phi1F", "phi2"))
    common(p, 1)
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("gamma", help="generating function of a poset file")
    p.add_argument("--poset", required=True)
    p.add_argument("--vars", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("expand", help="truncated expansion of a basis element")
    p.add_argument("--basis", required=True, choices=("m", "f"))
    p.add_argument("--vars", type=int, required=True)
    common(p, 1)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("hopf", "morphisms", "square", "gamma"))
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--algebra", default=None,
                   choices=("hsym", "ssym", "rqsym-m"))
    common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CLIError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
