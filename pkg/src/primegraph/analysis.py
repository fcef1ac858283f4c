"""The ring -> graph -> edge ideal -> powers pipeline behind the command line.

Each check records ``True``, ``False`` or ``None`` (not applicable / not
requested).  A report passes iff no check is ``False``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .edgeideal import (
    EdgeIdealModel,
    closed_form_generators,
    count_generators,
    edge_ideal,
    height_and_dim,
    primary_decomposition,
    verify_primary_decomposition,
    zpm_mu,
    zpm_parameters,
)
from .errors import CapExceededError, LinearQuotientsError
from .graph import (
    DEFAULT_COVER_CAP,
    SplitGraph,
    abstract_split_graph,
    build_graph,
    clique_number,
    max_clique_bruteforce,
    minimal_vertex_covers_bruteforce,
    minimal_vertex_covers_closed_form,
    non_adjacent_pair,
)
from .monomial import DEFAULT_PRODUCT_CAP, MonomialIdeal, is_squarefree, product
from .polymatroid import (
    DEFAULT_EXCHANGE_CAP,
    betti_from_certificate,
    is_polymatroidal,
    linear_quotients,
)
from .ring import (
    DEFAULT_RING_CAP,
    PrimeIdeal,
    RingSpec,
    ideal_from_generator,
    ideal_from_members,
    prime_ideals,
)

ALL_CHECKS = ("oracle", "polymatroid", "linquot", "primary", "covers")

TABLE1 = (
    # ring, generator of P, (a, b), mu(I^n) for n = 1, 2, 3
    ("Z6", "3", (1, 4), (4, 10, 20)),
    ("Z8", "2", (3, 4), (15, 94, 378)),
)


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


@dataclass
class Caps:
    ring: int = DEFAULT_RING_CAP
    gens: int = DEFAULT_PRODUCT_CAP
    covers: int = DEFAULT_COVER_CAP
    exchange: int = DEFAULT_EXCHANGE_CAP


@dataclass
class AnalysisConfig:
    ring_spec: str | None = None
    prime_selector: str | None = None
    prime_set: str | None = None
    abstract_ab: tuple[int, int] | None = None
    max_power: int = 3
    checks: frozenset[str] = frozenset(ALL_CHECKS)
    output_format: str = "text"
    caps: Caps = field(default_factory=Caps)

    def __post_init__(self):
        if (self.ring_spec is None) == (self.abstract_ab is None):
            raise ValueError("give exactly one of a ring or an abstract (a, b)")
        if self.max_power < 1:
            raise ValueError("max power must be >= 1")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}; choose from {', '.join(ALL_CHECKS)}")


def parse_checks(text: str) -> frozenset[str]:
    if text.strip().lower() == "all":
        return frozenset(ALL_CHECKS)
    return frozenset(c.strip().lower() for c in text.split(",") if c.strip())


def _passed(checks: dict[str, bool | None]) -> bool:
    return all(v is not False for v in checks.values())


@dataclass
class PowerReport:
    a: int
    b: int
    n: int
    mu_closed_form: int
    mu_oracle: int | None
    generators: list[str]
    checks: dict[str, bool | None]
    certificate: dict | None = None

    @property
    def passed(self) -> bool:
        return _passed(self.checks)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "mu_closed_form": self.mu_closed_form,
            "mu_oracle": self.mu_oracle,
            "generators": self.generators,
            "checks": self.checks,
            "certificate": self.certificate,
        }


@dataclass
class AnalysisReport:
    source: dict
    a: int
    b: int
    structure: dict
    checks: dict[str, bool | None]
    powers: list[PowerReport]

    @property
    def passed(self) -> bool:
        return _passed(self.checks) and all(p.passed for p in self.powers)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "a": self.a,
            "b": self.b,
            "structure": self.structure,
            "checks": self.checks,
            "powers": [p.to_dict() for p in self.powers],
            "passed": self.passed,
        }


def certificate_dict(ideal: MonomialIdeal, n: int, caps: Caps, want_poly: bool, want_lq: bool) -> tuple[dict, dict]:
    """Certificate JSON for one power plus the check outcomes it supports."""
    checks: dict[str, bool | None] = {"polymatroid": None, "linquot": None, "regularity": None}
    cert: dict = {}
    if want_poly:
        report = is_polymatroidal(ideal, caps.exchange)
        checks["polymatroid"] = report.holds
        cert["polymatroidal"] = report.holds
        if not report.holds:
            cert["counterexample"] = report.describe(ideal.a, ideal.b)
    if want_lq:
        try:
            c = linear_quotients(ideal)
        except LinearQuotientsError as exc:
            checks["linquot"] = False
            cert["linquot_failure"] = str(exc)
        else:
            betti = betti_from_certificate(c, 2 * n)
            checks["linquot"] = True
            checks["regularity"] = betti[0][2] == len(ideal) and all(s == 2 * n + i for i, s, _ in betti)
            cert["order"] = [str(m) for m in c.order]
            cert["r"] = list(c.r)
            cert["betti"] = [{"i": i, "shift": s, "beta": beta} for i, s, beta in betti]
            cert["reg"] = 2 * n
    return cert, checks


def analyze_powers(model: EdgeIdealModel, max_power: int, checks: Iterable[str], caps: Caps) -> list[PowerReport]:
    checks = set(checks)
    a, b = model.a, model.b
    reports = []
    running = MonomialIdeal.unit(a, b)
    for n in range(1, max_power + 1):
        mu = count_generators(a, b, n)
        cf = closed_form_generators(a, b, n, caps.gens)
        out: dict[str, bool | None] = {}
        mu_oracle = None
        if "oracle" in checks:
            running = product(running, model.ideal, caps.gens)
            mu_oracle = len(running)
            out["oracle_equal"] = running == cf
        else:
            out["oracle_equal"] = None
        out["count_equal"] = len(cf) == mu
        deg = cf.degrees()
        rows = cf.rows
        out["degree_law"] = bool(
            (deg == 2 * n).all() and (rows[:, a:].sum(axis=1) <= n).all() and (rows[:, :a] <= n).all()
        ) if len(cf) else a == 0
        out.update(primary_decomp=None, polymatroid=None, linquot=None, regularity=None)
        cert = None
        if a >= 1 and ({"polymatroid", "linquot"} & checks):
            cert, extra = certificate_dict(cf, n, caps, "polymatroid" in checks, "linquot" in checks)
            out.update(extra)
        reports.append(PowerReport(a, b, n, mu, mu_oracle, cf.strings(), out, cert))
    return reports


def _select_prime(r: RingSpec, cfg: AnalysisConfig) -> PrimeIdeal:
    if cfg.prime_selector is not None:
        return ideal_from_generator(r, r.parse_element(cfg.prime_selector), cfg.caps.ring)
    if cfg.prime_set is not None:
        if len(r.factors) == 1:
            members = [r.parse_element(t) for t in cfg.prime_set.split(",") if t.strip()]
        else:
            members = [r.parse_element(t) for t in cfg.prime_set.split(";") if t.strip()]
        return ideal_from_members(r, members, cfg.caps.ring)
    primes = prime_ideals(r, cfg.caps.ring)
    if len(primes) == 1:
        return primes[0]
    listing = ", ".join(str(p) for p in primes)
    raise ValueError(f"{r} has several prime ideals ({listing}); choose one with --prime or --prime-set")


def ring_structure_checks(r: RingSpec, p: PrimeIdeal, g: SplitGraph) -> dict[str, bool | None]:
    q = p.quotient_order
    return {
        "order_factorizes": r.order == len(p) * q,
        "b_formula": g.b == (g.a + 1) * (q - 1),
        "not_complete": (non_adjacent_pair(g) is not None) if g.a >= 1 else None,
    }


def analyze(cfg: AnalysisConfig) -> AnalysisReport:
    caps = cfg.caps
    checks: dict[str, bool | None] = {}
    if cfg.ring_spec is not None:
        r = RingSpec.parse(cfg.ring_spec)
        p = _select_prime(r, cfg)
        g = build_graph(r, p, caps.ring)
        source = {"ring": str(r), "ideal": str(p), "members": [str(x) for x in p.sorted_members()],
                  "order": r.order, "quotient_order": p.quotient_order}
        checks.update(ring_structure_checks(r, p, g))
    else:
        a, b = cfg.abstract_ab
        g = abstract_split_graph(a, b)
        source = {"abstract": [a, b]}
    a, b = g.a, g.b
    model = edge_ideal(g)

    structure: dict = {"clique_number": clique_number(g), "edges": len(g.edge_indices)}
    if len(g) <= caps.covers:
        checks["clique_number"] = max_clique_bruteforce(g, caps.covers) == clique_number(g)
    else:
        checks["clique_number"] = None

    closed = minimal_vertex_covers_closed_form(g)
    structure["covers"] = [sorted(str(v) for v in c.members) for c in closed]
    if "covers" in cfg.checks and a >= 1 and len(g) <= caps.covers:
        brute = minimal_vertex_covers_bruteforce(g, caps.covers)
        checks["covers"] = {c.members for c in brute} == {c.members for c in closed} and len(closed) == a + 1
    else:
        checks["covers"] = None

    checks["squarefree"] = is_squarefree(model.ideal)
    if a >= 1:
        dec = primary_decomposition(a, b)
        ht, dim, unmixed = height_and_dim(a, b)
        structure["primary_decomposition"] = dec.names()
        structure["height"] = ht
        structure["dim"] = dim
        structure["unmixed"] = unmixed
        checks["height_dim"] = (ht, dim, unmixed) == (a, b, b == 1)
        checks["primary_decomp"] = verify_primary_decomposition(model, dec, caps.gens) if "primary" in cfg.checks else None
    else:
        checks["height_dim"] = None
        checks["primary_decomp"] = None

    powers = analyze_powers(model, cfg.max_power, cfg.checks, caps)
    for pr in powers:
        pr.checks["primary_decomp"] = checks["primary_decomp"]
    return AnalysisReport(source, a, b, structure, checks, powers)


def format_analysis(rep: AnalysisReport) -> str:
    src = rep.source
    if "ring" in src:
        head = f"R = {src['ring']}, P = {src['ideal']} = {{{', '.join(src['members'])}}}"
    else:
        head = f"abstract K_{rep.a} v co-K_{rep.b}"
    lines = [head, f"a = {rep.a}, b = {rep.b}, clique number = {rep.structure['clique_number']}"]
    if "primary_decomposition" in rep.structure:
        comps = " ∩ ".join("(" + ",".join(c) + ")" for c in rep.structure["primary_decomposition"])
        lines.append(f"I = {comps}")
        lines.append(f"ht = {rep.structure['height']}, dim = {rep.structure['dim']}, unmixed = {rep.structure['unmixed']}")
    lines.append("")
    lines.append(f"{'n':>3} {'mu(formula)':>12} {'mu(oracle)':>11}  checks")
    for p in rep.powers:
        flags = " ".join(f"{k}={_flag(v)}" for k, v in sorted(p.checks.items()) if v is not None)
        oracle = "-" if p.mu_oracle is None else str(p.mu_oracle)
        lines.append(f"{p.n:>3} {p.mu_closed_form:>12} {oracle:>11}  {flags}")
    lines.append("")
    lines.append("structure checks: " + " ".join(f"{k}={_flag(v)}" for k, v in sorted(rep.checks.items())))
    lines.append("PASS" if rep.passed else "FAIL")
    return "\n".join(lines) + "\n"


def _flag(v: bool | None) -> str:
    return {True: "ok", False: "FAIL", None: "-"}[v]


def table1(count_fn: Callable[[int, int, int], int] = count_generators, caps: Caps | None = None) -> dict:
    """Recompute both published rows by formula and by brute-force powers and diff them."""
    caps = caps or Caps()
    rows = []
    mismatches = []
    for ring_text, gen, (pa, pb), published in TABLE1:
        r = RingSpec.parse(ring_text)
        p = ideal_from_generator(r, r.parse_element(gen), caps.ring)
        g = build_graph(r, p, caps.ring)
        ideal = edge_ideal(g).ideal
        if (g.a, g.b) != (pa, pb):
            mismatches.append({"ring": ring_text, "cell": "a,b", "published": [pa, pb], "computed": [g.a, g.b]})
        running = MonomialIdeal.unit(g.a, g.b)
        cells = []
        for n, expected in enumerate(published, start=1):
            running = product(running, ideal, caps.gens)
            formula = count_fn(g.a, g.b, n)
            oracle = len(running)
            ok = formula == expected and oracle == expected
            cells.append({"n": n, "published": expected, "formula": formula, "oracle": oracle, "ok": ok})
            if not ok:
                mismatches.append({"ring": ring_text, "cell": f"n={n}", "published": expected,
                                   "formula": formula, "oracle": oracle})
        rows.append({"ring": str(r), "ideal": str(p), "a": g.a, "b": g.b, "cells": cells})
    return {"rows": rows, "mismatches": mismatches, "status": "PASS" if not mismatches else "FAIL"}


def format_table1(result: dict) -> str:
    lines = [f"{'Ring':<6}{'P':<6}{'a':>3}{'b':>3}{'n=1':>8}{'n=2':>8}{'n=3':>8}"]
    for row in result["rows"]:
        vals = "".join(f"{c['formula']:>8}" for c in row["cells"])
        lines.append(f"{row['ring']:<6}{row['ideal']:<6}{row['a']:>3}{row['b']:>3}{vals}")
    for m in result["mismatches"]:
        lines.append(f"mismatch {m['ring']} {m['cell']}: published {m['published']}, "
                     f"formula {m.get('formula', m.get('computed'))}, oracle {m.get('oracle', '-')}")
    lines.append(f"status {result['status']}")
    return "\n".join(lines) + "\n"


def _sweep_rings(family: str, primes: Iterable[int], exponents: Iterable[int], moduli: Iterable[int]):
    if family == "zpm":
        for p in primes:
            for m in exponents:
                yield RingSpec((p ** m,)), (p, m)
    elif family == "zn":
        for n in moduli:
            yield RingSpec((n,)), None
    else:
        raise ValueError(f"unknown family {family!r}; use zpm or zn")


def sweep(family: str, max_power: int = 1, primes: Iterable[int] = (2, 3), exponents: Iterable[int] = (2, 3),
          moduli: Iterable[int] = range(2, 13), caps: Caps | None = None, oracle: bool = True) -> dict:
    caps = caps or Caps()
    rows = []
    for r, pm in _sweep_rings(family, primes, exponents, moduli):
        if r.order > caps.ring:
            raise CapExceededError(f"|R| = {r.order} exceeds the ring cap {caps.ring}")
        for p in prime_ideals(r, caps.ring):
            g = build_graph(r, p, caps.ring)
            checks = ring_structure_checks(r, p, g)
            row: dict = {"ring": str(r), "ideal": str(p), "a": g.a, "b": g.b, "q": p.quotient_order,
                         "mu": [], "mu_oracle": []}
            ideal = edge_ideal(g).ideal
            running = MonomialIdeal.unit(g.a, g.b)
            for n in range(1, max_power + 1):
                mu = count_generators(g.a, g.b, n)
                row["mu"].append(mu)
                if oracle:
                    running = product(running, ideal, caps.gens)
                    row["mu_oracle"].append(len(running))
                    checks[f"oracle_n{n}"] = len(running) == mu
            if pm is not None and p.prime == pm[0]:
                zp = zpm_mu(*pm)
                row["zpm_mu"] = zp
                checks["zpm_params"] = zpm_parameters(*pm) == (g.a, g.b)
                checks["zpm_mu"] = zp == count_generators(g.a, g.b, 1)
            row["checks"] = checks
            row["passed"] = _passed(checks)
            rows.append(row)
    return {"family": family, "max_power": max_power, "rows": rows,
            "status": "PASS" if all(r["passed"] for r in rows) else "FAIL"}


def format_sweep(result: dict) -> str:
    n = result["max_power"]
    header = f"{'Ring':<8}{'P':<8}{'q':>4}{'a':>5}{'b':>5}" + "".join(f"{'n=' + str(k):>10}" for k in range(1, n + 1))
    lines = [header]
    for row in result["rows"]:
        vals = "".join(f"{v:>10}" for v in row["mu"])
        mark = "" if row["passed"] else "  FAIL"
        lines.append(f"{row['ring']:<8}{row['ideal']:<8}{row['q']:>4}{row['a']:>5}{row['b']:>5}{vals}{mark}")
    lines.append(f"status {result['status']}")
    return "\n".join(lines) + "\n"
