"""Command-line interface.

Exit status: 0 success, 2 precondition error (named on stderr), 1 internal
failure or a record that fails verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from .aqec import css_aqec, css_subsystem, defset_aqec, euclidean_assc, genpoly_aqec
from .catalog import (
    dumps,
    read_entries,
    search_catalog,
    to_csv,
    verify_record,
)
from .cyclic import (
    CyclicCode,
    bch_construct,
    code_from_defset,
    code_from_genpoly,
    rs_construct,
)
from .errors import BadFlag, CodeError, UnknownCommand
from .galois import field_of_order
from .polyring import cyclotomic_cosets, factor_xn_minus_1, parse_poly
from .weights import DEFAULT_BUDGET, bch_bound, min_weight


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "invalid choice" in message and message.startswith(("argument command", "argument construction")):
            raise UnknownCommand(message)
        raise BadFlag(message)


def residues(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _poly(text, spec):
    try:
        return parse_poly(text, spec)
    except ValueError as e:
        raise BadFlag(f"bad polynomial {text!r}: {e}") from None


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["table", "json", "csv"], default=argparse.SUPPRESS)
    p.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="aqcodes", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help, parent=sub):
        return parent.add_parser(name, help=help, parents=[common])

    def nq(p, n=True):
        if n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)

    p = cmd("cosets", "cyclotomic cosets of q modulo n")
    nq(p)
    p = cmd("factor", "factor x^n - 1 over GF(q) into minimal polynomials")
    nq(p)
    p = cmd("code", "describe a cyclic code")
    nq(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--defset", type=residues)
    g.add_argument("--genpoly")

    p = cmd("aqec", "asymmetric quantum code constructions")
    aq = p.add_subparsers(dest="construction", required=True, parser_class=_Parser)
    p = cmd("css", "CSS pair (C1, C2) with C2^perp in C1", aq)
    nq(p)
    p.add_argument("--defset1", type=residues, required=True)
    p.add_argument("--defset2", type=residues, required=True)
    p = cmd("genpoly", "C2 generated by f * g1", aq)
    nq(p)
    p.add_argument("--defset1", type=residues, required=True)
    p.add_argument("--f", required=True)
    p = cmd("defset", "C2^perp with defining set T(C1^perp) minus (T u -T)", aq)
    nq(p)
    p.add_argument("--defset1", type=residues, required=True)
    p.add_argument("--t", type=residues, required=True)

    p = cmd("assc", "asymmetric subsystem code constructions")
    asub = p.add_subparsers(dest="construction", required=True, parser_class=_Parser)
    p = cmd("euclidean", "C1 with its hull", asub)
    nq(p)
    p.add_argument("--defset", type=residues, required=True)

    p = cmd("subsystem", "subsystem code from a CSS pair with r gauge qudits")
    nq(p)
    p.add_argument("--defset1", type=residues, required=True)
    p.add_argument("--defset2", type=residues, required=True)
    p.add_argument("--r", type=int, required=True)

    p = cmd("bch", "BCH code with designed distance delta")
    nq(p)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--b", type=int, default=1)
    p = cmd("rs", "Reed-Solomon code of length q - 1")
    nq(p, n=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b", type=int, default=1)

    p = cmd("search", "catalog every defining-set and Euclidean construction")
    nq(p)
    p = cmd("verify", "recompute records from a JSON file")
    p.add_argument("--in", dest="infile", required=True)
    return parser


# -- output ---------------------------------------------------------------------


def _emit_records(records, fmt, out, dicts=None):
    dicts = dicts if dicts is not None else [r.as_dict() for r in records]
    if fmt == "json":
        for d in dicts:
            print(dumps(d), file=out)
    elif fmt == "csv":
        out.write(to_csv(dicts))
    else:
        for r in records:
            extra = []
            if r.pure_x is not None:
                extra.append(f"pure_x={r.pure_x} pure_z={r.pure_z}")
            cap = r.capability()
            if cap:
                extra.append(f"corrects {cap[0]} X / {cap[1]} Z")
            print(
                f"{r.label():<24} {r.construction:<9} C1 T={list(r.c1_defset)} "
                f"C2 T={list(r.c2_defset)} {' '.join(extra)}",
                file=out,
            )


def _emit_code(C: CyclicCode, fmt, budget, out):
    info = {
        "n": C.n,
        "q": C.q,
        "k": C.k,
        "defset": list(C.defset),
        "genpoly": list(C.g.coeffs),
        "bch_bound": bch_bound(C),
    }
    if C.k:
        w = min_weight(C, budget)
        info.update(d=w.value, d_exact=w.exact)
    else:
        info.update(d=None, d_exact=None)
    if fmt == "json":
        print(dumps(info), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(info))
        w.writerow([",".join(map(str, v)) if isinstance(v, list) else v for v in info.values()])
    else:
        d = "-" if info["d"] is None else f"{info['d']}{'' if info['d_exact'] else '?'}"
        print(f"[{C.n},{C.k},{d}]_{C.q}", file=out)
        print(f"defining set  {list(C.defset)}", file=out)
        print(f"generator     {C.g}  ({C.g.to_text()})", file=out)
        print(f"BCH bound     {info['bch_bound']}", file=out)


def _run(args, out) -> int:
    fmt, budget = args.format, args.budget
    c = args.command
    if c == "cosets":
        cosets = [list(cs.members) for cs in cyclotomic_cosets(args.n, args.q)]
        if fmt == "json":
            print(dumps(cosets), file=out)
        elif fmt == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["rep", "size", "members"])
            for m in cosets:
                w.writerow([m[0], len(m), ",".join(map(str, m))])
        else:
            for m in cosets:
                print(f"{m[0]:>4}  {{{', '.join(map(str, m))}}}", file=out)
        return 0
    if c == "factor":
        pairs = factor_xn_minus_1(args.n, args.q)
        if fmt == "json":
            print(dumps([{"coset": list(cs.members), "poly": list(p.coeffs)} for cs, p in pairs]), file=out)
        elif fmt == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["rep", "coset", "poly"])
            for cs, p in pairs:
                w.writerow([cs.rep, ",".join(map(str, cs.members)), p.to_text()])
        else:
            print(f"x^{args.n} - 1 over GF({args.q}), alpha fixed by the canonical primitive element:", file=out)
            for cs, p in pairs:
                print(f"  {{{', '.join(map(str, cs.members))}}}: {p}", file=out)
        return 0
    if c == "code":
        if args.defset is not None:
            C = code_from_defset(args.n, args.q, args.defset)
        else:
            C = code_from_genpoly(args.n, args.q, _poly(args.genpoly, field_of_order(args.q)))
        _emit_code(C, fmt, budget, out)
        return 0
    if c == "bch":
        _emit_code(bch_construct(args.n, args.q, args.delta, args.b), fmt, budget, out)
        return 0
    if c == "rs":
        _emit_code(rs_construct(args.q, args.k, args.b), fmt, budget, out)
        return 0
    if c == "aqec":
        C1 = code_from_defset(args.n, args.q, args.defset1)
        if args.construction == "css":
            rec = css_aqec(C1, code_from_defset(args.n, args.q, args.defset2), budget)
        elif args.construction == "genpoly":
            rec = genpoly_aqec(C1, _poly(args.f, C1.spec), budget)
        else:
            rec = defset_aqec(C1, args.t, budget)
        _emit_records([rec], fmt, out)
        return 0
    if c == "assc":
        recs = euclidean_assc(code_from_defset(args.n, args.q, args.defset), budget)
        _emit_records(recs, fmt, out)
        return 0
    if c == "subsystem":
        C1 = code_from_defset(args.n, args.q, args.defset1)
        C2 = code_from_defset(args.n, args.q, args.defset2)
        _emit_records([css_subsystem(C1, C2, args.r, budget)], fmt, out)
        return 0
    if c == "search":
        entries = search_catalog(args.n, args.q, budget)
        _emit_records(
            [e.record for e in entries], fmt, out,
            dicts=[e.as_dict() for e in entries] if fmt == "json" else None,
        )  # fmt: skip
        return 0
    if c == "verify":
        with open(args.infile) as fh:
            entries = read_entries(fh.read())
        status = 0
        for i, d in enumerate(entries):
            rep = verify_record(d, budget)
            if fmt == "json":
                print(dumps({"index": i, "passed": rep.passed, "mismatches": rep.mismatches,
                             "error": rep.error}), file=out)  # fmt: skip
            else:
                tag = "PASS" if rep.passed else "FAIL"
                detail = rep.error or ", ".join(
                    f"{f}: recorded {rep.fields[f][0]} recomputed {rep.fields[f][1]}"
                    for f in rep.mismatches
                )
                print(f"{tag} #{i} {detail}".rstrip(), file=out)
            if not rep.passed:
                status = 1
        return status
    raise UnknownCommand(c)


def run_command(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.format = getattr(args, "format", "table")
        args.budget = getattr(args, "budget", DEFAULT_BUDGET)
        if args.budget < 1:
            raise BadFlag("--budget must be positive")
        return _run(args, out)
    except CodeError as e:
        print(f"error: {type(e).__name__}: {e}", file=err)
        return 2
    except OSError as e:
        print(f"error: {e}", file=err)
        return 2
    except Exception as e:  # noqa: BLE001
        print(f"internal error: {type(e).__name__}: {e}", file=err)
        return 1


def capture(argv) -> tuple[int, str, str]:
    """Run a command and return (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    status = run_command(argv, out, err)
    return status, out.getvalue(), err.getvalue()


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
