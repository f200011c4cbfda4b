"""Text, JSON-lines and OEIS b-file renderings of P_1..P_N, plus a JSON reader."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import IO, Iterable, Iterator

from .coeffs import BinomPoly, to_binomial
from .exact import Poly
from .pseq import PSequence, expected_degree

BASES = ("power", "binomial")
ORDERS = ("descending", "ascending")


def row(p: Poly, n: int, basis: str) -> list[int]:
    """Coefficients of P_n, highest order first."""
    if basis == "power":
        return p.int_coeffs()[::-1]
    if basis == "binomial":
        return list(to_binomial(p, expected_degree(n)).b)
    raise ValueError(f"unknown basis {basis!r}")


def render_text(p: Poly, n: int, basis: str) -> str:
    if basis == "power":
        return str(p)
    return str(to_binomial(p, expected_degree(n)))


def json_record(p: Poly, n: int, basis: str) -> dict:
    return {
        "n": n,
        "basis": basis,
        "coefficients": row(p, n, basis),
        "degree": expected_degree(n),
        "content": p.content(),
    }


def write_jsonl(seq: PSequence, basis: str, out: IO[str], ns: Iterable[int] | None = None) -> None:
    for n in ns if ns is not None else range(1, seq.max_n + 1):
        out.write(json.dumps(json_record(seq[n], n, basis), sort_keys=True) + "\n")


def bfile_lines(seq: PSequence, basis: str, order: str) -> Iterator[str]:
    """Rows n = 1, 2, ... flattened into consecutive indices starting at 1."""
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")
    idx = 0
    for n in range(1, seq.max_n + 1):
        r = row(seq[n], n, basis)
        if order == "ascending":
            r = r[::-1]
        for v in r:
            idx += 1
            yield f"{idx} {v}"


def write_bfile(seq: PSequence, basis: str, order: str, out: IO[str]) -> None:
    for line in bfile_lines(seq, basis, order):
        out.write(line + "\n")


def poly_from_record(rec: dict) -> Poly:
    coeffs = [Fraction(c) for c in rec["coefficients"]]
    if rec["basis"] == "power":
        return Poly.from_descending(coeffs)
    if rec["basis"] == "binomial":
        return BinomPoly(len(coeffs) - 1, tuple(coeffs)).to_poly()
    raise ValueError(f"unknown basis {rec['basis']!r}")


def read_jsonl(lines: Iterable[str]) -> dict[int, Poly]:
    """n -> P_n from JSON-lines written by :func:`write_jsonl`."""
    out = {}
    for line in lines:
        line = line.strip()
        if line:
            rec = json.loads(line)
            out[rec["n"]] = poly_from_record(rec)
    return out
