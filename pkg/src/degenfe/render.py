"""Text renderers (JSON-ready dicts, LaTeX, CSV) shared by the CLI."""

from __future__ import annotations

import csv
import io
from fractions import Fraction

from .exact_poly import Poly, latex_rational
from .families import Family, FamilyKind


def basis_symbol(kind: FamilyKind, k: int) -> str:
    lam = latex_rational(kind.lambda_)
    u = latex_rational(kind.u)
    order = f"^{{({kind.r})}}" if kind.r != 1 else ""
    tag = kind.tag
    if tag is Family.BERNOULLI:
        return f"B_{{{k}}}(x)"
    if tag is Family.EULER:
        return f"E{order}_{{{k}}}(x)"
    if tag is Family.FROBENIUS_EULER:
        return f"H{order}_{{{k}}}(x|{u})"
    if tag is Family.DEGENERATE_EULER:
        return f"\\mathcal{{E}}{order}_{{{k},{lam}}}(x)"
    if tag is Family.DEGENERATE_FROBENIUS_EULER:
        return f"h{order}_{{{k},{lam}}}(x|{u})"
    return f"(x)_{{{k},{lam}}}"


def latex_family_table(kind: FamilyKind, table: list[Poly]) -> str:
    lines = ["\\begin{align*}"]
    for n, p in enumerate(table):
        end = " \\\\" if n < len(table) - 1 else ""
        lines.append(f"{basis_symbol(kind, n)} &= {p.to_latex()}{end}")
    lines.append("\\end{align*}")
    return "\n".join(lines)


def latex_expansion(p: Poly, kind: FamilyKind, coeffs) -> str:
    terms = []
    for k, a in enumerate(coeffs):
        if a == 0:
            continue
        sym = basis_symbol(kind, k)
        mag = abs(a)
        body = sym if mag == 1 else f"{latex_rational(mag)}\\,{sym}"
        if not terms:
            terms.append(body if a > 0 else "-" + body)
        else:
            terms.append((" + " if a > 0 else " - ") + body)
    return f"{p.to_latex()} = {''.join(terms) or '0'}"


def csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([str(c) if isinstance(c, Fraction) else c for c in row])
    return buf.getvalue().rstrip("\n")
