"""Command-line entry point: ``python -m twovalued <subcommand> ...``.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on usage errors.  JSON reports carry a ``schema`` field and are
byte-identical for the same arguments and seed; wall-clock timings are only
added with ``--timings``.
"""

import argparse
import json
import random
import sys
import time

from . import __version__
from .exactnum import QQ, GF, fmt_rational, parse_domain, parse_rational
from .mpoly import MultiPoly

REPORT_SCHEMA = "twovalued.report/1"
DEFAULT_SEED = 20240601


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers

def _param(value, name, domain):
    """A command-line parameter: a rational number or, if omitted, a symbol."""
    if value is None:
        return name
    try:
        return domain.coerce(parse_rational(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad value for --{name}: {value!r}") from exc


def _domain(args):
    try:
        return parse_domain(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def build_family(args, domain=None):
    from . import families

    domain = domain or _domain(args)
    fam = args.family
    if fam == "buchstaber":
        return families.buchstaber(*(_param(getattr(args, n), n, domain) for n in ("a1", "a2", "a3")),
                                   domain=domain)
    if fam == "kontsevich":
        return families.kontsevich(*(_param(getattr(args, n), n, domain) for n in ("a", "b", "c")),
                                   domain=domain)
    if fam == "classical":
        return families.kontsevich_classical(_param(args.t, "t", domain), domain=domain)
    if fam == "pN":
        if domain is not QQ:
            raise UsageError("pN is built over QQ")
        try:
            return families.p_N(args.N)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if fam in ("multiplicative", "mordell"):
        return families.named_toys(domain)[fam]
    raise UsageError(f"unknown family {fam!r}")


def _parse_e(value):
    if value in ("inf", "oo", "infinity"):
        return "inf"
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad identity element {value!r}") from exc


# ---------------------------------------------------------------------------
# subcommands; each returns (passed, results)

def cmd_family(args):
    F = build_family(args)
    res = {"family": args.family, "polynomial": F.to_json(), "text": str(F)}
    if args.sigma:
        from .mpoly import is_symmetric, to_sigma
        if is_symmetric(F):
            res["sigma"] = to_sigma(F).to_json()
    return True, res


def cmd_check(args):
    from .grouplaw import check_law, extendability

    F = build_family(args)
    e = _parse_e(args.e)
    numeric = not any(v in F.vars for v in ("a1", "a2", "a3", "a", "b", "c", "t"))
    assoc = not args.no_associativity and (numeric or args.symbolic_associativity)
    rep = check_law(F, e=e, associativity=assoc, split=not args.no_split)
    out = rep.to_json()
    if args.family == "buchstaber" and numeric and F.domain is QQ:
        out["extendable"] = extendability(*(parse_rational(getattr(args, n)) for n in ("a1", "a2", "a3"))).to_json()
    if not assoc:
        out["associativity_skipped"] = "symbolic parameters; pass --symbolic-associativity to force"
    return rep.passed, out


def cmd_coset(args):
    from .elliptic import EllipticCurve, coset_mul, kontsevich_roots, INF

    if args.q is None:
        raise UsageError("coset needs --q")
    F = _gf(args.q)
    rng = random.Random(args.seed)
    a, b, c = (F.coerce(parse_rational(v)) if v is not None else F.coerce(rng.randrange(args.q))
               for v in (args.a, args.b, args.c))
    E = EllipticCurve(a, b, c, F)
    if E.degenerate:
        raise UsageError("degenerate cubic (zero discriminant)")
    liftable = [v for v in F.elements() if E.lift(v)]
    pairs = []
    if args.x is not None and args.y is not None:
        pairs.append((F.coerce(parse_rational(args.x)), F.coerce(parse_rational(args.y))))
    else:
        for _ in range(args.n):
            pairs.append((rng.choice(liftable), rng.choice(liftable)))
    rows, ok = [], True
    for x, y in pairs:
        if not E.lift(x) or not E.lift(y):
            raise UsageError(f"{x} or {y} does not lift to the curve")
        got = coset_mul(E, x, y)
        want = kontsevich_roots(E, x, y)
        match = want is None or list(got) == list(want)
        ok &= match
        rows.append({"x": str(x), "y": str(y), "coset": [str(v) for v in got],
                     "roots": None if want is None else [str(v) for v in want], "match": match})
    return ok, {"q": args.q, "curve": [str(a), str(b), str(c)], "pairs": rows}


def _gf(q):
    try:
        return GF(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_hecke(args):
    from . import hecke

    if args.q is None or args.t is None:
        raise UsageError("hecke needs --q and --t")
    try:
        S = hecke.build_all(args.q, int(args.t), args.yinf)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = {"q": S.q, "t": S.t, "yinf": S.yinf, "index": S.index_labels(),
           "degenerate_pairs": len(S.degenerate_pairs),
           "degenerate_rows_ok": hecke.degenerate_rows_ok(S)}
    ok = True
    if args.check in ("commute", "all"):
        fails = hecke.commutator_failures(S)
        out["commute"] = {"passed": not fails, "failures": [list(p) for p in fails]}
        ok &= not fails
    if args.check in ("algebra", "all"):
        conv = {}
        for c in hecke.CONVENTIONS:
            fails = hecke.algebra_failures(S, c)
            conv[c] = {"passed": not fails, "failures": len(fails)}
        passed = any(v["passed"] for v in conv.values())
        out["algebra"] = {"passed": passed, "by_convention": conv}
        ok &= passed
    if args.matrices:
        out["matrices"] = {str(x): M.tolist() for x, M in S.matrices.items()}
    if args.csv:
        import pathlib
        d = pathlib.Path(args.csv)
        d.mkdir(parents=True, exist_ok=True)
        for x in S.matrices:
            (d / f"T_{x}.csv").write_text(S.to_csv(x) + "\n")
        out["csv_dir"] = str(d)
    return ok, out


def cmd_star(args):
    from . import starinv

    results = {
        "kb": {str(s): starinv.kb_check(sign=s).to_json() for s in (1, -1)},
        "disc_presentation": {f: starinv.kb_disc_presentation(form=f).to_json()
                              for f in ("derived", "printed")},
        "star_identity": {str(s): starinv.kontsevich_star_identity(s).to_json() for s in (1, -1)},
    }
    sign = args.sign
    results["frozen_sign"] = sign
    rng = random.Random(args.seed)
    mob = []
    for _ in range(args.n):
        from .grouplaw import random_rational
        a, b, c = (random_rational(rng) for _ in range(3))
        A, B = random_rational(rng), random_rational(rng)
        mob.append(starinv.mobius_match(a, b, c, A, B).to_json())
    results["mobius"] = mob
    ok = (results["kb"][str(sign)]["passed"] and results["star_identity"][str(sign)]["passed"]
          and results["disc_presentation"]["derived"]["passed"]
          and all(m["proportional"] and m["identity_at_one_one"] for m in mob))
    return ok, results


def cmd_locus(args):
    from . import starinv

    fl = starinv.fixed_locus_suite()
    he = starinv.hesse_substitution_check()
    res = {"fixed_locus": fl.to_json(), "hesse": he.to_json(),
           "transposition_maps_cubics": starinv.transposition_maps_cubics(),
           "cyclic_maps_cubics": starinv.cyclic_maps_cubics()}
    return fl.passed and he.passed and res["transposition_maps_cubics"], res


COMMANDS = {"family": cmd_family, "check": cmd_check, "coset": cmd_coset,
            "hecke": cmd_hecke, "star": cmd_star, "locus": cmd_locus}


# ---------------------------------------------------------------------------
# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _family_args(p):
    p.add_argument("--family", default="buchstaber",
                   choices=["buchstaber", "kontsevich", "classical", "pN", "multiplicative", "mordell"])
    p.add_argument("--field", default="QQ", help="QQ, GF(q) or QQ(zetaN)")
    for n in ("a1", "a2", "a3", "a", "b", "c", "t"):
        p.add_argument(f"--{n}", default=None)
    p.add_argument("--N", type=int, default=2)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", default=None)
    common.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")

    p = _Parser(prog="twovalued", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    f = sub.add_parser("family", parents=[common], help="construct a polynomial")
    _family_args(f)
    f.add_argument("--sigma", action="store_true", help="also rewrite in sigma1..sigma3")

    c = sub.add_parser("check", parents=[common], help="check the 2-valued group axioms")
    _family_args(c)
    c.add_argument("--e", default="0", help="identity element: a rational or inf")
    c.add_argument("--no-associativity", action="store_true")
    c.add_argument("--symbolic-associativity", action="store_true")
    c.add_argument("--no-split", action="store_true")

    k = sub.add_parser("coset", parents=[common], help="coset multiplication over F_q")
    k.add_argument("--q", type=int)
    for n in ("a", "b", "c", "x", "y"):
        k.add_argument(f"--{n}", default=None)
    k.add_argument("--n", type=int, default=10, help="random pairs when --x/--y are absent")

    h = sub.add_parser("hecke", parents=[common], help="Hecke matrices over P^1(F_q)")
    h.add_argument("--q", type=int)
    h.add_argument("--t")
    h.add_argument("--check", choices=["commute", "algebra", "all", "none"], default="all")
    h.add_argument("--yinf", choices=["symmetric", "degenerate"], default="symmetric")
    h.add_argument("--matrices", action="store_true", help="include the matrices in the report")
    h.add_argument("--csv", default=None, help="directory for per-operator CSV files")

    s = sub.add_parser("star", parents=[common], help="star involution and B/D correspondence")
    s.add_argument("--sign", type=int, choices=[1, -1], default=1)
    s.add_argument("--n", type=int, default=3, help="random Moebius matches")

    sub.add_parser("locus", parents=[common], help="fixed locus of x -> -1/x")
    return p


# ---------------------------------------------------------------------------
# output

def _is_poly(obj):
    return isinstance(obj, dict) and obj.get("schema") == "twovalued.poly/1"


def _scalar_list(obj):
    return isinstance(obj, list) and all(not isinstance(v, (dict, list)) for v in obj)


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if _is_poly(v):
                lines.append(f"{pad}{k}: {MultiPoly.from_json(v)}")
            elif _scalar_list(v):
                lines.append(f"{pad}{k}: [{', '.join(str(x) for x in v)}]")
            elif isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if _is_poly(v):
                lines.append(f"{pad}- {MultiPoly.from_json(v)}")
            elif _scalar_list(v):
                lines.append(f"{pad}- [{', '.join(str(x) for x in v)}]")
            else:
                sub = _text(v, indent + 1)
                lines.append(f"{pad}- {sub[0].strip()}")
                lines.extend(sub[1:])
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _default(o):
    from fractions import Fraction
    if isinstance(o, Fraction):
        return fmt_rational(o)
    if isinstance(o, MultiPoly):
        return o.to_json()
    return str(o)


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False, default=_default) + "\n"
    head = f"{report['command']}: {'PASS' if report['passed'] else 'FAIL'}"
    body = json.loads(json.dumps(report["results"], default=_default))
    return "\n".join([head] + _text(body)) + "\n"


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        t0 = time.perf_counter()
        passed, results = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    report = {"schema": REPORT_SCHEMA, "version": __version__, "command": args.command,
              "seed": args.seed, "passed": bool(passed), "results": results}
    if args.timings:
        report["seconds"] = round(time.perf_counter() - t0, 4)
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0 if passed else 1


def main():
    sys.exit(run())
