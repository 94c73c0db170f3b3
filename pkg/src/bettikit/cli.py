"""Command-line driver.

Exit codes: 0 success, 1 when the mathematics disagrees (a bound is violated,
an oracle mismatches, a computation cannot finish), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .betti import BettiTable, betti_number, betti_table
from .bounds import check_theorem
from .constructions import complete_intersection, corpus, gamma, lpp_L, prime_candidate, random_pure_complex, stanley_reisner
from .field import FieldSpec
from .groebner import buchberger
from .hilbert import hilbert_data
from .ideal_file import format_ideal, parse_ideal
from .lpp import PowerVector, is_lpp, lpp_ideal, murai_betti
from .ring import DEGREVLEX, LEX, Ideal, RingDescriptor

USAGE_ERRORS = (
    errors.ParseError,
    errors.UnknownVariable,
    errors.BadCharacteristic,
    errors.ParameterOutOfRange,
    errors.Infeasible,
    errors.PreconditionViolated,
    errors.NotMonomial,
    errors.DimensionMismatch,
)


class UsageError(Exception):
    pass


def _field(text):
    return FieldSpec.parse(text) if text else None


def _ints(text):
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _read_ideal(args) -> Ideal:
    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    I = parse_ideal(text)
    fs = _field(getattr(args, "field", None))
    return I.with_field(fs) if fs else I


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.kind} needs " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_construct(args, out):
    fs = _field(args.field)
    if args.kind == "gamma":
        _require(args, "h")
        I = gamma(args.h, fs).ideal
    elif args.kind == "prime":
        _require(args, "h")
        I = prime_candidate(args.h, fs).ideal
    elif args.kind == "lpp":
        _require(args, "a", "h")
        I = lpp_L(args.a, args.h, args.n, fs).ideal
    elif args.kind == "ci":
        _require(args, "degrees")
        I = complete_intersection(_ints(args.degrees), args.n, fs).ideal
    else:
        _require(args, "n", "facet_dim", "count", "seed")
        c = random_pure_complex(args.n, args.facet_dim, args.count, args.seed)
        I = stanley_reisner(c, RingDescriptor.standard(args.n, fs))
    out.write(format_ideal(I))
    return 0


def cmd_gb(args, out):
    I = _read_ideal(args)
    order = LEX if args.order == "lex" else DEGREVLEX
    G = buchberger(I, order)
    out.write(format_ideal(Ideal(I.ring, list(G.elements))))
    return 0


def _emit_table(T, fmt, out):
    if fmt == "json":
        out.write(json.dumps(T.to_json()) + "\n")
    else:
        out.write(T.staircase() + "\n")


def cmd_betti(args, out):
    I = _read_ideal(args)
    _emit_table(betti_table(I, args.imax, args.jmax), args.format, out)
    return 0


def cmd_hilbert(args, out):
    I = _read_ideal(args)
    H = hilbert_data(I, args.dmax)
    out.write(json.dumps({
        "hilbert_function": H.hf_values,
        "numerator": H.numerator,
        "dimension": H.dim,
        "multiplicity": H.multiplicity,
    }) + "\n")
    return 0


def cmd_bound_check(args, out, err):
    I = _read_ideal(args)
    attest = {a.strip() for a in (args.attest or "").split(",") if a.strip()}
    unknown = attest - {"radical", "unmixed"}
    if unknown:
        raise UsageError(f"unknown attestation(s): {', '.join(sorted(unknown))}")
    attested = attest == {"radical", "unmixed"}
    if not attested:
        err.write("warning: radical and unmixed not attested; the bound may not apply\n")
    rep = check_theorem(I, attested, args.id)
    out.write(json.dumps(rep.to_json()) + "\n")
    return 0 if rep.satisfied or not attested else 1


def cmd_murai(args, out, err):
    I = _read_ideal(args)
    if not I.is_monomial():
        raise errors.NotMonomial("murai needs a monomial ideal")
    a = PowerVector.parse(args.powers)
    if len(a) != I.ring.num_vars:
        raise UsageError(f"{len(a)} powers for {I.ring.num_vars} variables")
    if not is_lpp(I, a):
        err.write(f"ideal is not an a-LPP ideal for a = {a}\n")
        return 1
    L = lpp_ideal(I.ring, a, [g.leading_monomial() for g in I.generators])
    n = I.ring.num_vars
    i_max = n if args.imax is None else args.imax
    j_max = (max(g.degree() for g in I.generators) + n if I.generators else n) if args.jmax is None else args.jmax
    entries = {}
    mismatches = []
    for i in range(i_max + 1):
        for j in range(i, j_max + 1):
            v = murai_betti(L, i, j - i)
            if v:
                entries[(i, j)] = v
            if args.check and v != betti_number(I, i, j):
                mismatches.append((i, j, v, betti_number(I, i, j)))
    _emit_table(BettiTable(I.ring, entries, i_max, j_max), args.format, out)
    for m in mismatches:
        err.write("mismatch at (i, j) = ({}, {}): formula {} vs Koszul {}\n".format(*m))
    return 1 if mismatches else 0


def cmd_corpus(args, out, err):
    fs = _field(args.field)
    bad = 0
    for entry in corpus(args.count, args.seed, vars=args.vars, facet_dim=args.facet_dim, field=fs):
        record = {"id": entry.ideal_id, "facets": [list(f) for f in entry.complex.facets],
                  "ideal": format_ideal(entry.ideal)}
        if args.check:
            rep = check_theorem(entry.ideal, True, entry.ideal_id)
            record["report"] = rep.to_json()
            bad += not rep.satisfied
        out.write(json.dumps(record) + "\n")
    if bad:
        err.write(f"{bad} ideal(s) violate the strand bound\n")
    return 1 if bad else 0


def cmd_verify(args, out, err):
    from .verify import run_suite

    def report(res):
        out.write(res.line() + "\n")
        out.flush()

    results = run_suite(args.level, report)
    failed = [r.number for r in results if not r.passed]
    if failed:
        err.write(f"failed criteria: {failed}\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bettikit", description="Betti numbers, Hilbert series and strand bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="print a named ideal")
    c.add_argument("kind", choices=["gamma", "prime", "lpp", "ci", "sr"])
    c.add_argument("--h", type=int)
    c.add_argument("--a", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--degrees")
    c.add_argument("--facet-dim", type=int)
    c.add_argument("--count", type=int)
    c.add_argument("--seed", type=int)
    c.add_argument("--field")

    def with_file(name, help_text):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("file", nargs="?", help="ideal file (default: stdin)")
        return q

    g = with_file("gb", "reduced Groebner basis")
    g.add_argument("--order", choices=["degrevlex", "lex"], default="degrevlex")

    b = with_file("betti", "graded Betti table of S/I")
    b.add_argument("--imax", type=int)
    b.add_argument("--jmax", type=int)
    b.add_argument("--field", help="qq or gfP; reinterpret the generators over this field")
    b.add_argument("--format", choices=["json", "text"], default="json")

    h = with_file("hilbert", "Hilbert function and series numerator")
    h.add_argument("--dmax", type=int)

    k = with_file("bound-check", "compare the quadratic strand with the height bound")
    k.add_argument("--attest", help="comma list; 'radical,unmixed' attests both hypotheses")
    k.add_argument("--id", default="ideal")

    m = with_file("murai", "Betti table of an LPP ideal by the combinatorial formula")
    m.add_argument("--powers", required=True, help="e.g. 3,3,inf,inf")
    m.add_argument("--imax", type=int)
    m.add_argument("--jmax", type=int)
    m.add_argument("--format", choices=["json", "text"], default="json")
    m.add_argument("--check", action="store_true", help="compare with Koszul homology")

    r = sub.add_parser("corpus", help="seeded Stanley-Reisner ideals, one JSON record per line")
    r.add_argument("--count", type=int, default=100)
    r.add_argument("--vars", type=int)
    r.add_argument("--facet-dim", type=int)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--field")
    r.add_argument("--check", action="store_true", help="attach a bound report to each record")

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--level", choices=["fast", "full"], default="fast")
    return p


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "construct": lambda: cmd_construct(args, out),
        "gb": lambda: cmd_gb(args, out),
        "betti": lambda: cmd_betti(args, out),
        "hilbert": lambda: cmd_hilbert(args, out),
        "bound-check": lambda: cmd_bound_check(args, out, err),
        "murai": lambda: cmd_murai(args, out, err),
        "corpus": lambda: cmd_corpus(args, out, err),
        "verify": lambda: cmd_verify(args, out, err),
    }
    try:
        return handlers[args.command]()
    except (UsageError, *USAGE_ERRORS) as exc:
        err.write(f"bettikit {args.command}: {exc}\n")
        return 2
    except errors.BettikitError as exc:
        err.write(f"bettikit {args.command}: {type(exc).__name__}: {exc}\n")
        return 1


def main():
    sys.exit(run_cli())
