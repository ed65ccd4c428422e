"""Problem descriptions and the end-to-end computation pipeline.

A problem file is line-oriented text: `key=value` pairs with `#`
comments. Keys: mode (ideal|single|mapping), n, p, generators (ideal
mode, comma-separated monic monomials), f (one polynomial, or a
comma-separated list in mapping mode) and g (a polynomial, or `trivial`
for the plain Haar measure).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import counting, zeta
from .cones import partition_pair, partition_single
from .errors import PolynomialParseError
from .newton import NewtonPolyhedron, face_restriction
from .polynomials import (IntegerPolynomial, MonomialIdealSpec,
                          PolynomialMapping, parse_monomial_generator,
                          parse_polynomial)

MODES = ("ideal", "single", "mapping")


def is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@dataclass
class ProblemSpec:
    mode: str
    n: int
    p: int
    fside: object  # MonomialIdealSpec | IntegerPolynomial | PolynomialMapping
    g: object  # IntegerPolynomial or None for trivial measure

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 1:
            raise ValueError("need n >= 1")
        if self.mode == "single" and self.g is not None and self.n < 2:
            raise ValueError("a polynomial pair needs n >= 2")
        if self.mode == "mapping" and self.g is not None \
                and self.n < self.t_count + 1:
            raise ValueError(
                f"a mapping pair with t={self.t_count} needs n >= "
                f"{self.t_count + 1}")
        if self.mode == "single" and self.fside.is_zero():
            raise ValueError("f is zero")
        if self.mode == "single" and not self.fside.vanishes_at_origin():
            raise ValueError("f(0) != 0")
        if self.g is not None:
            if self.g.is_zero():
                raise ValueError("g is zero")
            if not self.g.vanishes_at_origin():
                raise ValueError("g(0) != 0")

    @property
    def t_count(self):
        if self.mode == "mapping":
            return self.fside.t
        return 1

    def fside_mapping(self):
        """The f side viewed as a mapping (for oracles and restrictions)."""
        if self.mode == "ideal":
            return self.fside.as_mapping()
        if self.mode == "single":
            return PolynomialMapping([self.fside])
        return self.fside


def parse_problem_text(text) -> ProblemSpec:
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise PolynomialParseError(
                f"line {lineno}: expected key=value, got {line!r}", 0)
        key, value = line.split("=", 1)
        key = key.strip()
        if key in entries:
            raise PolynomialParseError(f"line {lineno}: duplicate key {key!r}", 0)
        entries[key] = value.strip()
    for required in ("mode", "n", "p"):
        if required not in entries:
            raise PolynomialParseError(f"missing key {required!r}", 0)
    mode = entries.pop("mode")
    if mode not in MODES:
        raise PolynomialParseError(f"unknown mode {mode!r}", 0)
    try:
        n = int(entries.pop("n"))
        p = int(entries.pop("p"))
    except ValueError as exc:
        raise PolynomialParseError(f"n and p must be integers: {exc}", 0)
    gtext = entries.pop("g", "trivial")
    g = None if gtext == "trivial" else parse_polynomial(gtext, n)
    if mode == "ideal":
        gens = entries.pop("generators", "")
        if not gens:
            raise PolynomialParseError("ideal mode needs generators=", 0)
        fside = MonomialIdealSpec(
            n, [parse_monomial_generator(part, n)
                for part in gens.split(",")])
    else:
        ftext = entries.pop("f", "")
        if not ftext:
            raise PolynomialParseError(f"{mode} mode needs f=", 0)
        parts = [parse_polynomial(part, n) for part in ftext.split(",")]
        if mode == "single":
            if len(parts) != 1:
                raise PolynomialParseError("single mode takes exactly one f", 0)
            fside = parts[0]
        else:
            fside = PolynomialMapping(parts)
    if entries:
        raise PolynomialParseError(
            f"unknown keys: {', '.join(sorted(entries))}", 0)
    try:
        return ProblemSpec(mode, n, p, fside, g)
    except ValueError as exc:
        raise PolynomialParseError(str(exc), 0)


def parse_problem_file(path) -> ProblemSpec:
    with open(path, "r", encoding="ascii") as handle:
        return parse_problem_text(handle.read())


# -- pipeline -----------------------------------------------------------


@dataclass
class Computation:
    spec: ProblemSpec
    gamma_f: NewtonPolyhedron
    gamma_g: object  # NewtonPolyhedron or None
    partition: object
    counts: list = field(default_factory=list)
    reports: dict = field(default_factory=dict)
    terms: list = field(default_factory=list)
    zeta: object = None
    poles: list = field(default_factory=list)

    def mf(self, k):
        return self.gamma_f.m_value(k)

    def mg(self, k):
        return self.gamma_g.m_value(k) if self.gamma_g is not None else 0


def build_geometry(spec: ProblemSpec) -> Computation:
    gamma_f = NewtonPolyhedron.of(spec.fside)
    if spec.g is None:
        gamma_g = None
        partition = partition_single(gamma_f)
    else:
        gamma_g = NewtonPolyhedron.of(spec.g)
        partition = partition_pair(gamma_f, gamma_g)
    comp = Computation(spec, gamma_f, gamma_g, partition)
    comp.poles = zeta.candidate_poles(partition, comp.mf, comp.mg,
                                      spec.mode, spec.t_count)
    return comp


def run_checks(comp: Computation) -> dict:
    """All non-degeneracy reports the chosen mode relies on."""
    spec = comp.spec
    reports = {}
    if spec.mode == "single":
        reports["f"] = counting.check_nondegenerate_single(spec.fside, spec.p)
    elif spec.mode == "mapping":
        reports["f"] = counting.check_strong_nondegenerate(spec.fside, spec.p)
    if spec.g is not None:
        reports["g"] = counting.check_nondegenerate_single(spec.g, spec.p)
        if spec.mode in ("single", "mapping"):
            reports["pair"] = counting.check_pair_nondegenerate(
                spec.fside, spec.g, comp.partition, spec.p)
    comp.reports = reports
    return reports


def _cone_counts(comp: Computation):
    spec = comp.spec
    fmap = spec.fside_mapping()
    counts = []
    for cone in comp.partition.cones:
        face_f = cone.labels[0]
        if spec.mode == "ideal":
            fpart = None
        else:
            parts = [face_restriction(c, face_f) for c in fmap.components]
            fpart = parts[0] if spec.mode == "single" \
                else PolynomialMapping(parts)
        if spec.g is None:
            gpart = None
        else:
            gpart = face_restriction(spec.g, cone.labels[1])
        counts.append(counting.count_triple(fpart, gpart, spec.p))
    return counts


def compute(spec: ProblemSpec, override=False) -> Computation:
    """Full pipeline: geometry, checks, counts, Z, factored view, poles."""
    comp = build_geometry(spec)
    run_checks(comp)
    comp.counts = _cone_counts(comp)
    comp.zeta = zeta.assemble(
        spec.mode, comp.partition, comp.counts, comp.mf, comp.mg, spec.p,
        spec.t_count, degeneracy_reports=tuple(comp.reports.values()),
        override=override)
    comp.terms = zeta.cone_terms(spec.mode, comp.partition, comp.counts,
                                 comp.mf, comp.mg, spec.p, spec.t_count)
    return comp
