"""Text, JSON and CSV forms of monomials, polynomials and matrices."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .linalg import RationalMatrix
from .monomials import Monomial, Shape
from .polynomial import Polynomial


def fraction_text(c: Fraction) -> str:
    return str(Fraction(c))


def variable_name(shape: Shape, index: tuple) -> str:
    """``x011`` for 2x2x2 (0-based), ``x12`` or ``x_{1,12}`` (1-based) otherwise."""
    if shape.is_cube222:
        return "x" + "".join(str(i - 1) for i in index)
    if all(n <= 9 for n in shape.dims):
        return "x" + "".join(str(i) for i in index)
    return "x_{" + ",".join(str(i) for i in index) + "}"


def monomial_text(m: Monomial) -> str:
    """Product form, e.g. ``x000^2 x111^2``; ``1`` for the constant monomial."""
    parts = []
    for idx, e in zip(m.shape.cells, m.exponents):
        if e == 1:
            parts.append(variable_name(m.shape, idx))
        elif e > 1:
            parts.append(f"{variable_name(m.shape, idx)}^{e}")
    return " ".join(parts) if parts else "1"


def polynomial_text(p: Polynomial) -> str:
    """Grouped layout: terms in descending canonical order, collected by coefficient.

    Each distinct coefficient opens a group at its first (largest) monomial;
    unit groups are written as plain sums, others as ``c (m1 + m2 + ...)``.
    """
    if p.is_zero():
        return "0"
    groups = {}
    for exps in sorted(p.terms, reverse=True):
        c = p.terms[exps]
        groups.setdefault(abs(c) if abs(c) == 1 else c, []).append(exps)
    pieces = []
    for c, members in groups.items():
        if abs(c) == 1:
            for exps in members:
                sign = "-" if p.terms[exps] < 0 else "+"
                pieces.append((sign, monomial_text(Monomial(p.shape, exps))))
        else:
            inner = " + ".join(monomial_text(Monomial(p.shape, e)) for e in members)
            body = f"{fraction_text(abs(c))} ({inner})" if len(members) > 1 else f"{fraction_text(abs(c))} {inner}"
            pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f"\n  {sign} {body}"
    return out


def polynomial_to_dict(p: Polynomial) -> dict:
    return {
        "shape": list(p.shape.dims),
        "terms": [
            {"exponents": list(m.exponents), "coeff": fraction_text(c)} for m, c in p.items()
        ],
    }


def polynomial_from_dict(data: dict) -> Polynomial:
    try:
        shape = Shape(tuple(data["shape"]))
        terms = [(tuple(t["exponents"]), Fraction(t["coeff"])) for t in data["terms"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from None
    return Polynomial(shape, terms)


def polynomial_to_json(p: Polynomial) -> str:
    return json.dumps(polynomial_to_dict(p), indent=2)


def polynomial_from_json(text: str) -> Polynomial:
    return polynomial_from_dict(json.loads(text))


def _cell(x: Fraction) -> str:
    return "." if x == 0 else fraction_text(x)


def matrix_grid(A: RationalMatrix, row_labels=None, blocks=None) -> str:
    """Grid with ``.`` for zero and a dashed rule between row blocks.

    ``blocks`` lists the row count of each block.
    """
    cells = [[_cell(x) for x in r] for r in A.rows]
    width = max((len(c) for r in cells for c in r), default=1)
    lines = []
    label_w = max((len(s) for s in row_labels), default=0) if row_labels else 0
    rule_at = set()
    if blocks:
        acc = 0
        for b in blocks[:-1]:
            acc += b
            rule_at.add(acc)
    grid_w = A.ncols * (width + 1) - 1
    for i, r in enumerate(cells):
        if i in rule_at:
            rule = "-" * grid_w
            lines.append(("-" * label_w + "  " + rule) if row_labels else rule)
        grid = " ".join(c.rjust(width) for c in r)
        lines.append(f"{row_labels[i]}  {grid}" if row_labels else grid)
    return "\n".join(lines)


def matrix_csv(A: RationalMatrix, row_labels=None, col_labels=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if col_labels is not None:
        w.writerow(([""] if row_labels else []) + list(col_labels))
    for i, r in enumerate(A.rows):
        w.writerow(([row_labels[i]] if row_labels else []) + [fraction_text(x) for x in r])
    return buf.getvalue()


def matrix_to_dict(A: RationalMatrix, row_labels=None, col_labels=None) -> dict:
    try:
        entries = A.to_int_rows()
    except ValueError:
        entries = [[fraction_text(x) for x in r] for r in A.rows]
    out = {"rows": A.nrows, "cols": A.ncols, "entries": entries}
    if row_labels is not None:
        out["row_labels"] = list(row_labels)
    if col_labels is not None:
        out["col_labels"] = list(col_labels)
    return out


def matrix_from_dict(data: dict) -> RationalMatrix:
    return RationalMatrix([[Fraction(x) for x in r] for r in data["entries"]], data["cols"])
