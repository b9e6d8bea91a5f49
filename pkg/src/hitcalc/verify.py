"""Fixture checking: hit relations, dimension tables, basis lists, patterns.

The relation format is line oriented. Each nonblank line outside ``#``
comments reads

    (3,4,3,3) = Sq^1[(3,3,3,3)+(2,4,3,3)] + Sq^2[(2,3,3,3)] + (3,3,4,3)

optionally closed by ``mod L(t1;t2;...)``, which asserts the two sides agree
up to monomials whose weight sequence falls strictly lex-below the given
one. Exponent lists are base ten, whitespace is free around ``=`` and ``+``.
A repeated monomial folds out mod 2 and draws a warning, since fixtures are
normally written without cancellation.

Dimension tables are CSV with header ``family,s,t,u,degree,expected_dim,
tier``; the degree column is redundant with the family formula and is
checked against it on load. Basis fixtures are JSON objects with keys
``k``, ``degree``, ``expected``. Pattern files hold one digit-block per
line, rows separated by ``/``, leftmost character is the first variable.
"""
from __future__ import annotations

import csv
import json
import warnings
from dataclasses import dataclass
from typing import Optional

from .gf2 import CapacityError
from .monomials import (
    Monomial,
    degree,
    format_monomial,
    format_tau,
    in_lower_tau_span,
)
from .solver import HitReport, cohit
from .steenrod import Polynomial, sq


class FixtureError(ValueError):
    """A fixture file that cannot be used: syntax or internal mismatch."""


# relations ----------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    lhs: Monomial
    applied: tuple[tuple[int, Polynomial], ...]
    plain: Polynomial
    modulus: Optional[tuple[int, ...]]
    source: str

    @property
    def arity(self) -> int:
        return len(self.lhs)

    @property
    def degree(self) -> int:
        return degree(self.lhs)


@dataclass(frozen=True)
class RelationResult:
    relation: Relation
    status: str  # "exact", "holds_mod_L", "fails"
    residual: Polynomial

    @property
    def ok(self) -> bool:
        return self.status != "fails"


class _Scanner:
    def __init__(self, text: str, source: str):
        self.text = text
        self.pos = 0
        self.source = source

    def fail(self, message: str):
        raise FixtureError(f"{self.source}: {message} at column {self.pos + 1}")

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def done(self) -> bool:
        return self.pos >= len(self.text)

    def take(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str):
        if not self.take(literal):
            self.fail(f"expected {literal!r}")

    def uint(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a number")
        return int(self.text[start:self.pos])

    def mono(self) -> Monomial:
        self.expect("(")
        out = [self.uint()]
        self.ws()
        while self.take(","):
            self.ws()
            out.append(self.uint())
            self.ws()
        self.expect(")")
        return tuple(out)

    def poly(self) -> list[Monomial]:
        out = [self.mono()]
        while True:
            mark = self.pos
            self.ws()
            if not self.take("+"):
                self.pos = mark
                return out
            self.ws()
            out.append(self.mono())


def _fold(monomials, source: str) -> Polynomial:
    out: set[Monomial] = set()
    for m in monomials:
        if m in out:
            warnings.warn(f"{source}: repeated monomial {format_monomial(m)} "
                          "folds out mod 2")
            out.discard(m)
        else:
            out.add(m)
    return frozenset(out)


def parse_relation(text: str, source: str = "<string>") -> Relation:
    sc = _Scanner(text, source)
    sc.ws()
    lhs = sc.mono()
    sc.ws()
    sc.expect("=")
    applied: list[tuple[int, Polynomial]] = []
    plain: list[Monomial] = []
    while True:
        sc.ws()
        if sc.take("Sq^"):
            i = sc.uint()
            sc.expect("[")
            sc.ws()
            arg = sc.poly()
            sc.ws()
            sc.expect("]")
            applied.append((i, _fold(arg, source)))
        else:
            plain.append(sc.mono())
        mark = sc.pos
        sc.ws()
        if not sc.take("+"):
            sc.pos = mark
            break
    modulus = None
    mark = sc.pos
    sc.ws()
    if sc.take("mod"):
        sc.ws()
        sc.expect("L(")
        parts = [sc.uint()]
        while sc.take(";"):
            parts.append(sc.uint())
        sc.expect(")")
        modulus = tuple(parts)
    else:
        sc.pos = mark
    sc.ws()
    if not sc.done():
        sc.fail("trailing text")

    k = len(lhs)
    n = degree(lhs)
    for i, arg in applied:
        if i == 0:
            raise FixtureError(f"{source}: Sq^0 is the identity, not a "
                               "hitting operator")
        for m in arg:
            if len(m) != k:
                raise FixtureError(f"{source}: arity mismatch in "
                                   f"{format_monomial(m)}")
            if degree(m) + i != n:
                raise FixtureError(
                    f"{source}: Sq^{i} argument {format_monomial(m)} lands "
                    f"in degree {degree(m) + i}, not {n}"
                )
    for m in plain:
        if len(m) != k:
            raise FixtureError(f"{source}: arity mismatch in "
                               f"{format_monomial(m)}")
        if degree(m) != n:
            raise FixtureError(f"{source}: {format_monomial(m)} has degree "
                               f"{degree(m)}, not {n}")
    if modulus is not None:
        bound_degree = sum(t << i for i, t in enumerate(modulus))
        if bound_degree != n:
            raise FixtureError(f"{source}: modulus {format_tau(modulus)} "
                               f"belongs to degree {bound_degree}, not {n}")
    return Relation(lhs, tuple(applied), _fold(plain, source), modulus,
                    source)


def parse_relation_file(path) -> list[Relation]:
    out = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            out.append(parse_relation(line, f"{path}:{lineno}"))
    return out


def verify_relation(rel: Relation) -> RelationResult:
    residual = {rel.lhs}
    for i, arg in rel.applied:
        residual ^= sq(i, arg)
    residual ^= rel.plain
    if not residual:
        return RelationResult(rel, "exact", frozenset())
    if rel.modulus is not None:
        if all(in_lower_tau_span(m, rel.modulus) for m in residual):
            return RelationResult(rel, "holds_mod_L", frozenset(residual))
    return RelationResult(rel, "fails", frozenset(residual))


def parse_polynomial(text: str, source: str = "<arg>") -> Polynomial:
    """A bare ``(..)+(..)`` sum, folded mod 2."""
    sc = _Scanner(text, source)
    sc.ws()
    monomials = sc.poly()
    sc.ws()
    if not sc.done():
        sc.fail("trailing text")
    return _fold(monomials, source)


# dimension tables ---------------------------------------------------------

TABLE_HEADER = ("family", "s", "t", "u", "degree", "expected_dim", "tier")

FAMILIES = {
    "2^{s+1}-3": (("s",), lambda s: 2 ** (s + 1) - 3),
    "2^{s+1}-2": (("s",), lambda s: 2 ** (s + 1) - 2),
    "2^{s+1}-1": (("s",), lambda s: 2 ** (s + 1) - 1),
    "2^{s+t+1}+2^{s+1}-3":
        (("s", "t"), lambda s, t: 2 ** (s + t + 1) + 2 ** (s + 1) - 3),
    "2^{s+t}+2^s-2":
        (("s", "t"), lambda s, t: 2 ** (s + t) + 2 ** s - 2),
    "2^{s+t+u}+2^{s+t}+2^s-3":
        (("s", "t", "u"),
         lambda s, t, u: 2 ** (s + t + u) + 2 ** (s + t) + 2 ** s - 3),
}


@dataclass(frozen=True)
class TableRow:
    family: str
    params: tuple[tuple[str, int], ...]
    degree: int
    expected_dim: int
    tier: str
    source: str


@dataclass(frozen=True)
class TableOutcome:
    row: TableRow
    status: str  # "pass", "fail", "skip"
    computed: Optional[int]
    note: str = ""


def load_table(path) -> list[TableRow]:
    rows = []
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise FixtureError(f"{path}: empty table") from None
        if tuple(h.strip() for h in header) != TABLE_HEADER:
            raise FixtureError(f"{path}: header must be "
                               f"{','.join(TABLE_HEADER)}")
        for lineno, record in enumerate(reader, start=2):
            if not record or all(not cell.strip() for cell in record):
                continue
            source = f"{path}:{lineno}"
            if len(record) != len(TABLE_HEADER):
                raise FixtureError(f"{source}: expected "
                                   f"{len(TABLE_HEADER)} fields")
            family = record[0].strip()
            entry = FAMILIES.get(family)
            if entry is None:
                raise FixtureError(f"{source}: unknown family {family!r}")
            names, formula = entry
            values = {}
            for name, cell in zip(("s", "t", "u"), record[1:4]):
                cell = cell.strip()
                if name in names:
                    if not cell:
                        raise FixtureError(f"{source}: family {family} "
                                           f"needs parameter {name}")
                    values[name] = int(cell)
                elif cell:
                    raise FixtureError(f"{source}: family {family} takes no "
                                       f"parameter {name}")
            try:
                n = int(record[4])
                expected = int(record[5])
            except ValueError:
                raise FixtureError(f"{source}: degree and expected_dim must "
                                   "be integers") from None
            tier = record[6].strip()
            if tier not in ("required", "optional"):
                raise FixtureError(f"{source}: tier must be required or "
                                   "optional")
            formula_degree = formula(*(values[name] for name in names))
            if formula_degree != n:
                raise FixtureError(f"{source}: family formula gives degree "
                                   f"{formula_degree}, row says {n}")
            rows.append(TableRow(family,
                                 tuple((name, values[name])
                                       for name in names),
                                 n, expected, tier, source))
    return rows


def verify_table(path, tier: str = "required", k: int = 4,
                 mode: str = "auto") -> list[TableOutcome]:
    if tier not in ("required", "all"):
        raise ValueError("tier must be 'required' or 'all'")
    outcomes = []
    for row in load_table(path):
        if tier == "required" and row.tier != "required":
            continue
        try:
            report = cohit(k, row.degree, mode=mode)
        except CapacityError as exc:
            outcomes.append(TableOutcome(row, "skip", None, str(exc)))
            continue
        status = "pass" if report.cohit_dimension == row.expected_dim \
            else "fail"
        outcomes.append(TableOutcome(row, status, report.cohit_dimension))
    return outcomes


# basis fixtures -----------------------------------------------------------

@dataclass(frozen=True)
class BasisOutcome:
    k: int
    degree: int
    status: str  # "pass" or "fail"
    report: HitReport
    missing: tuple[Monomial, ...]
    unexpected: tuple[Monomial, ...]


def load_basis(path) -> tuple[int, int, frozenset]:
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FixtureError(f"{path}: {exc}") from None
    try:
        k = data["k"]
        n = data["degree"]
        raw = data["expected"]
    except (TypeError, KeyError):
        raise FixtureError(f"{path}: need keys k, degree, expected") from None
    if not isinstance(k, int) or not isinstance(n, int):
        raise FixtureError(f"{path}: k and degree must be integers")
    expected = set()
    for entry in raw:
        m = tuple(entry)
        if len(m) != k or not all(isinstance(a, int) and a >= 0 for a in m):
            raise FixtureError(f"{path}: bad monomial {entry}")
        if degree(m) != n:
            raise FixtureError(f"{path}: {format_monomial(m)} has degree "
                               f"{degree(m)}, not {n}")
        if m in expected:
            raise FixtureError(f"{path}: duplicate monomial "
                               f"{format_monomial(m)}")
        expected.add(m)
    return k, n, frozenset(expected)


def verify_basis(path, mode: str = "auto") -> BasisOutcome:
    k, n, expected = load_basis(path)
    report = cohit(k, n, mode=mode)
    got = frozenset(report.admissible)
    missing = tuple(sorted(expected - got))
    unexpected = tuple(sorted(got - expected))
    status = "pass" if not missing and not unexpected else "fail"
    return BasisOutcome(k, n, status, report, missing, unexpected)


# pattern files ------------------------------------------------------------

def load_patterns(path) -> list[tuple[tuple[int, ...], ...]]:
    out = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            source = f"{path}:{lineno}"
            rows = []
            for chunk in line.split("/"):
                if not chunk or any(c not in "01" for c in chunk):
                    raise FixtureError(f"{source}: rows must be blocks of "
                                       "0 and 1")
                rows.append(tuple(int(c) for c in chunk))
            if len({len(r) for r in rows}) != 1:
                raise FixtureError(f"{source}: ragged pattern")
            out.append(tuple(rows))
    return out
