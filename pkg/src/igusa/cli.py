"""Command-line front end.

Subcommands: compute (full pipeline with per-cone table), check
(non-degeneracy reports, optionally swept over primes), oracle
(truncated-integral bracket vs formula value) and poles (candidate-pole
table). Text rendering is a pure function of the JSON report, so JSON
output round-trips to byte-identical text.

Exit codes: 0 ok, 1 parse error, 2 degeneracy, 3 size guard, 4 oracle
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import oracle, problem, zeta
from .errors import (DegeneracyError, IgusaError, PolynomialParseError,
                     SizeGuardError)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DEGENERATE = 2
EXIT_SIZE = 3
EXIT_ORACLE = 4


def _ratfun_str(doc):
    num = _poly_str(doc["num"])
    den = _poly_str(doc["den"])
    if den == "1":
        return num
    return f"({num}) / ({den})"


def _poly_str(coeffs):
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[e])
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif e == 1:
            body = "t" if mag == 1 else f"{mag}*t"
        else:
            body = f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _exp_str(p, a, b):
    if a == 0:
        return f"{p}^{b}"
    head = f"{a}s" if a != 1 else "s"
    if b > 0:
        return f"{p}^({head}+{b})"
    if b < 0:
        return f"{p}^({head}{b})"
    return f"{p}^({head})"


def _factored_str(p, pieces):
    chunks = []
    for piece in pieces:
        terms = []
        for c, a, b in piece["terms"]:
            body = _exp_str(p, a, b) if (a, b) != (0, 0) else "1"
            terms.append(body if c == 1 else f"{c}*{body}")
        num = " + ".join(terms)
        if not piece["factors"]:
            chunks.append(num)
            continue
        den = "".join(f"({_exp_str(p, a, b)}-1)"
                      for a, b in piece["factors"])
        chunks.append(f"({num}) / ({den})")
    return " + ".join(chunks)


# -- report construction -------------------------------------------------


def _spec_doc(spec):
    doc = {"mode": spec.mode, "n": spec.n, "p": spec.p,
           "f": str(spec.fside),
           "g": "trivial" if spec.g is None else str(spec.g)}
    if spec.mode == "mapping":
        doc["t"] = spec.t_count
    return doc


def _pole_rows(comp):
    return [{"value": str(cp.value), "source": cp.source}
            for cp in comp.poles]


def compute_report(comp):
    spec = comp.spec
    doc = {"command": "compute", "spec": _spec_doc(spec)}
    doc["reports"] = {name: rep.to_json()
                      for name, rep in comp.reports.items()}
    rows = []
    for i, term in enumerate(comp.terms):
        cone = term.cone
        rows.append({
            "cone": f"delta_{i}",
            "dim": cone.dim,
            "rays": [list(r) for r in cone.rays],
            "counts": {"N": term.counts.N, "P": term.counts.P,
                       "Q": term.counts.Q},
            "L": term.L.reduced.to_json(),
            "S": term.S.reduced.to_json(),
            "S_factored": [piece.to_json() for piece in term.S.factored],
        })
    doc["cones"] = rows
    doc["zeta"] = comp.zeta.to_json()
    factors = zeta.display_factors(spec.mode, comp.terms, spec.t_count)
    common = zeta.common_denominator_form(comp.zeta, factors, spec.p)
    if common is not None:
        numerator, const = common
        doc["zeta_factored"] = {
            "numerator": [str(c) for c in numerator.int_coeffs()],
            "constant_divisor": const,
            "factors": [[f.a, f.b] for f in factors],
        }
    doc["poles"] = _pole_rows(comp)
    return doc


def render_compute(doc):
    spec = doc["spec"]
    p = spec["p"]
    lines = []
    lines.append(f"mode={spec['mode']} n={spec['n']} p={p}")
    lines.append(f"f side: {spec['f']}")
    lines.append(f"measure: {spec['g']}")
    lines.append("")
    lines.append("cone      dim  rays                 N     P     Q"
                 "     L, S")
    for row in doc["cones"]:
        rays = " ".join(str(tuple(r)) for r in row["rays"]) or "-"
        c = row["counts"]
        lines.append(f"{row['cone']:<9} {row['dim']:<4} {rays:<20} "
                     f"{c['N']:<5} {c['P']:<5} {c['Q']:<5}")
        lines.append(f"    L = {_ratfun_str(row['L'])}")
        lines.append(f"    S = {_factored_str(p, row['S_factored'])}")
    lines.append("")
    for note in doc["zeta"].get("notes", []):
        lines.append(f"note: {note}")
    lines.append(f"Z(s) = {_ratfun_str(doc['zeta'])}")
    if "zeta_factored" in doc:
        zf = doc["zeta_factored"]
        den = f"{zf['constant_divisor']}" + "".join(
            f"({_exp_str(p, a, b)}-1)" for a, b in zf["factors"])
        lines.append(f"     = ({_poly_str(zf['numerator'])})")
        lines.append(f"       / ({den})")
    lines.append("")
    lines.append("candidate poles (real parts):")
    for row in doc["poles"]:
        lines.append(f"  {row['value']:<8} from {row['source']}")
    return "\n".join(lines) + "\n"


def check_report(specs_by_p):
    doc = {"command": "check", "results": []}
    for p, (spec, reports) in specs_by_p.items():
        doc["results"].append({
            "p": p,
            "ok": all(rep.ok for rep in reports.values()),
            "reports": {name: rep.to_json()
                        for name, rep in reports.items()},
        })
    return doc


def render_check(doc):
    lines = []
    for result in doc["results"]:
        status = "ok" if result["ok"] else "DEGENERATE"
        lines.append(f"p={result['p']}: {status}")
        for name, rep in sorted(result["reports"].items()):
            mark = "ok" if rep["ok"] else "failed"
            lines.append(f"  {name}: {mark}")
            for w in rep["witnesses"]:
                point = tuple(w["point"])
                lines.append(f"    witness {point} in {w['where']}: "
                             f"{w['condition']}")
    return "\n".join(lines) + "\n"


def oracle_report(comp, s0, M, corrupt=False):
    spec = comp.spec
    tval = Fraction(1, spec.p**s0)
    value = comp.zeta.evaluate(tval)
    if corrupt:
        value += Fraction(1, 2)
    bracket = oracle.truncated_integral(spec.mode, spec.fside, spec.g,
                                        spec.p, s0, M)
    return {
        "command": "oracle", "spec": _spec_doc(spec),
        "s0": s0, "level": M, "t_value": str(tval),
        "formula_value": str(value),
        "bracket": {"lo": str(bracket.lo), "hi": str(bracket.hi)},
        "contained": bracket.lo <= value <= bracket.hi,
    }


def render_oracle(doc):
    lines = [f"s0={doc['s0']} level={doc['level']} t={doc['t_value']}",
             f"formula value: {doc['formula_value']}",
             f"bracket: [{doc['bracket']['lo']}, {doc['bracket']['hi']}]"]
    lines.append("contained" if doc["contained"] else "bracket violation")
    return "\n".join(lines) + "\n"


def poles_report(comp):
    return {"command": "poles", "spec": _spec_doc(comp.spec),
            "poles": _pole_rows(comp)}


def render_poles(doc):
    lines = ["candidate poles (real parts):"]
    for row in doc["poles"]:
        lines.append(f"  {row['value']:<8} from {row['source']}")
    return "\n".join(lines) + "\n"


# -- entry point ---------------------------------------------------------


def _emit(doc, renderer, as_json, out):
    if as_json:
        json.dump(doc, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(renderer(doc))


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = argparse.ArgumentParser(
        prog="igusa",
        description="Exact p-adic zeta functions from Newton polyhedra")
    parser.add_argument("command",
                        choices=["compute", "check", "oracle", "poles"])
    parser.add_argument("problem_file")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--override-degenerate", action="store_true")
    parser.add_argument("--level", type=int, default=4,
                        help="truncation level M for the oracle")
    parser.add_argument("--s0", type=int, default=1,
                        help="integer evaluation point s = s0")
    parser.add_argument("--sweep", default="",
                        help="comma-separated primes for check")
    parser.add_argument("--corrupt-zeta", action="store_true",
                        help=argparse.SUPPRESS)  # negative-control test hook
    args = parser.parse_args(argv)

    try:
        spec = problem.parse_problem_file(args.problem_file)
    except (PolynomialParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        if args.command == "compute":
            comp = problem.compute(spec, override=args.override_degenerate)
            _emit(compute_report(comp), render_compute, args.json, out)
            return EXIT_OK
        if args.command == "check":
            primes = [int(x) for x in args.sweep.split(",") if x] or [spec.p]
            results = {}
            for p in primes:
                pspec = problem.ProblemSpec(spec.mode, spec.n, p,
                                            spec.fside, spec.g)
                comp = problem.build_geometry(pspec)
                results[p] = (pspec, problem.run_checks(comp))
            doc = check_report(results)
            _emit(doc, render_check, args.json, out)
            ok = all(result["ok"] for result in doc["results"])
            return EXIT_OK if ok else EXIT_DEGENERATE
        if args.command == "oracle":
            comp = problem.compute(spec, override=args.override_degenerate)
            doc = oracle_report(comp, args.s0, args.level,
                                corrupt=args.corrupt_zeta)
            _emit(doc, render_oracle, args.json, out)
            if not doc["contained"]:
                print("bracket violation", file=sys.stderr)
                return EXIT_ORACLE
            return EXIT_OK
        comp = problem.build_geometry(spec)
        _emit(poles_report(comp), render_poles, args.json, out)
        return EXIT_OK
    except DegeneracyError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (PolynomialParseError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IgusaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
