"""Text format for instances, and JSON reports.

Instance files look like::

    # comment
    p mwc <n> <m> <k>
    t <vertex>            (k lines, in terminal order)
    e <u> <v> <weight>    (m lines; weight is an integer, decimal, or p/q)

Vertex ids are 1-based in files. Report documents write every rational as a
string and use 1-based vertex ids, terminal indices, and edge ids.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable

from .graph import InputError, Instance, KCutSolution

_RATIONAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?$")


class ParseError(InputError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.reason = message


def parse_rational(text: str) -> Fraction:
    """Exact value of ``"3"``, ``"0.1"`` or ``"3/2"``."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise InputError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InputError(f"zero denominator in {text!r}") from None


def format_rational(x) -> str:
    if x == float("inf"):
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _int(tok: str, lineno: int, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(lineno, f"bad {what} {tok!r}")
    return int(tok)


def parse_instance(text: str, name: str | None = None) -> Instance:
    """Parse the text format. Without ``name``, a comment before the header names the instance."""
    header = None
    comment = None
    terminals: list[int] = []
    edges: list[tuple[int, int, Fraction]] = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#") and header is None and comment is None:
            comment = line[1:].strip()
        if not line or line.startswith("#") or line.startswith("c "):
            continue
        last = lineno
        tok = line.split()
        tag = tok[0]
        if tag == "p":
            if header is not None:
                raise ParseError(lineno, "duplicate header")
            if len(tok) != 5 or tok[1] != "mwc":
                raise ParseError(lineno, "malformed header, expected 'p mwc <n> <m> <k>'")
            header = tuple(_int(t, lineno, "header field") for t in tok[2:])
            continue
        if header is None:
            raise ParseError(lineno, "missing header before data lines")
        n = header[0]
        if tag == "t":
            if len(tok) != 2:
                raise ParseError(lineno, "malformed terminal line")
            t = _int(tok[1], lineno, "vertex id")
            if not 1 <= t <= n:
                raise ParseError(lineno, f"vertex id {t} out of range 1..{n}")
            if t - 1 in terminals:
                raise ParseError(lineno, f"duplicate terminal {t}")
            terminals.append(t - 1)
        elif tag == "e":
            if len(tok) != 4:
                raise ParseError(lineno, "malformed edge line")
            u = _int(tok[1], lineno, "vertex id")
            v = _int(tok[2], lineno, "vertex id")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(lineno, f"vertex id {x} out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            try:
                w = parse_rational(tok[3])
            except InputError as exc:
                raise ParseError(lineno, str(exc)) from None
            if w <= 0:
                raise ParseError(lineno, f"nonpositive weight {tok[3]}")
            edges.append((u - 1, v - 1, w))
        else:
            raise ParseError(lineno, f"unknown line tag {tag!r}")
    if header is None:
        raise ParseError(last, "missing header")
    n, m, k = header
    if len(terminals) != k:
        raise ParseError(last, f"terminal count {len(terminals)} != k={k}")
    if len(edges) != m:
        raise ParseError(last, f"edge count {len(edges)} != m={m}")
    try:
        return Instance(n, tuple(edges), tuple(terminals), name=(comment or "") if name is None else name)
    except InputError as exc:
        raise ParseError(last, str(exc)) from None


def serialize_instance(inst: Instance) -> str:
    lines = []
    if inst.name:
        lines.append(f"# {inst.name}")
    lines.append(f"p mwc {inst.n} {inst.m} {inst.k}")
    lines += [f"t {t + 1}" for t in inst.terminals]
    lines += [f"e {u + 1} {v + 1} {format_rational(w)}" for u, v, w in inst.edges]
    return "\n".join(lines) + "\n"


def read_instance(path) -> Instance:
    with open(path) as fh:
        inst = parse_instance(fh.read())
    return inst if inst.name else Instance(inst.n, inst.edges, inst.terminals, name=str(path))


def write_instance(inst: Instance, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_instance(inst))


# --- reports -------------------------------------------------------------

def _vertices(vs: Iterable[int]) -> list[int]:
    return sorted(v + 1 for v in vs)


def _edges(es: Iterable[int]) -> list[int]:
    return sorted(e + 1 for e in es)


def solution_doc(sol: KCutSolution) -> dict:
    return {
        "weight": format_rational(sol.weight),
        "assignment": {str(v + 1): a + 1 for v, a in enumerate(sol.assignment)},
        "cut_edges": _edges(sol.cut_edges),
    }


def exact_doc(res) -> dict:
    doc = solution_doc(res.optima[0])
    doc["optima_count"] = len(res.optima)
    doc["enumerated_count"] = res.enumerated_count
    return doc


def iso_doc(iso) -> dict:
    return {
        "cuts": [
            {
                "terminal": c.terminal + 1,
                "Q": _vertices(c.source_side),
                "E": _edges(c.cut_edges),
                "weight": format_rational(c.weight),
            }
            for c in iso.cuts
        ],
        "dropped": iso.dropped + 1,
        "E_ISO": _edges(iso.cut_edges),
        "weight": format_rational(iso.weight),
    }


def stability_doc(rep) -> dict:
    return {
        "gamma_star": format_rational(rep.gamma_star),
        "witness_cut": None if rep.witness is None else solution_doc(rep.witness),
        "optima_count": rep.optima_count,
        "stable_interval": rep.interval_text(),
    }


def build_report(exact=None, iso=None, stability=None, **extra) -> dict:
    doc = {}
    if exact is not None:
        doc["optimum"] = exact_doc(exact)
    if iso is not None:
        doc["iso"] = iso_doc(iso)
    if stability is not None:
        doc["stability"] = stability_doc(stability)
    doc.update(extra)
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
