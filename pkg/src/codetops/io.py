"""Text formats: matrix files, analysis JSON, graph export."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

import numpy as np

from .errors import BadArgs, CodeTopsError
from .field import FieldSpec, field_of_order, make_field
from .grassmann import GrassmannGraph
from .matspace import MatrixGF, Subspace
from .tops import TopAnalysis, TopKind


class ParseError(CodeTopsError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_HEADER = re.compile(r"^q=(\d+)(?:\^(\d+))?(?:\s+poly=([\d,]+))?$")


def parse_header(text: str, line: int = 1) -> FieldSpec:
    m = _HEADER.match(text.strip())
    if not m:
        raise ParseError(f"bad field header {text.strip()!r}; expected q=p^m [poly=c0,...,cm]", line)
    base, exp, poly = m.group(1), m.group(2), m.group(3)
    modulus = [int(c) for c in poly.split(",")] if poly else None
    try:
        if exp is None:
            spec = field_of_order(int(base))
            if modulus is not None:
                spec = make_field(spec.p, spec.m, modulus)
            return spec
        return make_field(int(base), int(exp), modulus)
    except CodeTopsError as exc:
        raise ParseError(str(exc), line) from exc


def parse_matrix(text: str) -> MatrixGF:
    lines = text.splitlines()
    # blank lines and '#' comments are skipped everywhere
    body = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise ParseError("empty matrix file", 1)
    hline, htext = body[0]
    spec = parse_header(htext, hline)
    rows = []
    width = None
    for lineno, raw in body[1:]:
        row = []
        for tok in re.finditer(r"\S+", raw):
            try:
                row.append(spec.parse_code(tok.group()))
            except (BadArgs, ValueError) as exc:
                raise ParseError(str(exc), lineno, tok.start() + 1) from exc
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", lineno, len(raw.rstrip()) + 1)
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows after header", hline + 1)
    return MatrixGF(spec, np.array(rows, dtype=np.int64))


def read_matrix(path: str) -> MatrixGF:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def format_matrix(M: MatrixGF) -> str:
    spec = M.spec
    out = [spec.header()]
    for row in M.entries:
        out.append(" ".join(spec.format_code(x) for x in row))
    return "\n".join(out) + "\n"


def write_matrix(M: MatrixGF, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(M))


# -- analysis records -------------------------------------------------------------

def _rows(spec: FieldSpec, arr) -> list[list[str]]:
    return [[spec.format_code(x) for x in row] for row in np.asarray(arr)]


def _unrows(spec: FieldSpec, rows, n: int) -> Subspace:
    arr = np.array([[spec.parse_code(x) for x in r] for r in rows], dtype=np.int64).reshape(len(rows), n)
    return Subspace.span(spec, arr, n)


@dataclass(frozen=True)
class AnalysisRecord:
    """Serializable view of a TopAnalysis; ``to_dict``/``from_dict`` are inverse."""

    spec: FieldSpec
    n: int
    k: int
    column_classes: tuple[tuple[int, ...], ...]
    class_representatives: tuple[tuple[int, ...], ...]
    wprime_count: int
    dim_w: int
    W_perp: Subspace
    members: tuple[Subspace, ...]
    common: Subspace | None
    classification: str
    line: tuple[Subspace, Subspace] | None
    line_count: int | None
    top_size: int
    timing: float | None = None

    @classmethod
    def from_analysis(cls, a: TopAnalysis, timing: float | None = None) -> "AnalysisRecord":
        cc = a.classes
        c = a.classification
        return cls(
            spec=a.spec, n=a.n, k=a.k,
            column_classes=cc.classes if cc else (),
            class_representatives=cc.representatives if cc else (),
            wprime_count=len(a.wprime_reps),
            dim_w=a.dim_w,
            W_perp=a.W_perp,
            members=a.members,
            common=a.common,
            classification=c.kind.value,
            line=c.line,
            line_count=c.line_count,
            top_size=a.top_size,
            timing=timing,
        )

    def to_dict(self) -> dict:
        spec = self.spec
        d = {
            "field": {"p": spec.p, "m": spec.m, "modulus": list(spec.modulus) if spec.m > 1 else None},
            "n": self.n,
            "k": self.k,
            "column_classes": {
                "indices": [list(c) for c in self.column_classes],
                "representatives": [[spec.format_code(x) for x in r] for r in self.class_representatives],
            },
            "wprime_count": {"projective": self.wprime_count, "full": self.wprime_count * (spec.q - 1)},
            "dimW": self.dim_w,
            "W_perp": _rows(spec, self.W_perp.basis),
            "members": [_rows(spec, C.basis) for C in self.members],
            "common": None if self.common is None else _rows(spec, self.common.basis),
            "classification": self.classification,
            "line": None if self.line is None else {
                "S": _rows(spec, self.line[0].basis), "U": _rows(spec, self.line[1].basis)},
            "line_count": self.line_count,
            "counts": {"top_size": self.top_size, "members": len(self.members)},
        }
        if self.timing is not None:
            d["timing"] = self.timing
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisRecord":
        f = d["field"]
        spec = make_field(f["p"], f["m"], f["modulus"])
        n, k = d["n"], d["k"]
        line = d["line"]
        return cls(
            spec=spec, n=n, k=k,
            column_classes=tuple(tuple(c) for c in d["column_classes"]["indices"]),
            class_representatives=tuple(tuple(spec.parse_code(x) for x in r)
                                        for r in d["column_classes"]["representatives"]),
            wprime_count=d["wprime_count"]["projective"],
            dim_w=d["dimW"],
            W_perp=_unrows(spec, d["W_perp"], k + 1),
            members=tuple(_unrows(spec, m, n) for m in d["members"]),
            common=None if d["common"] is None else _unrows(spec, d["common"], n),
            classification=d["classification"],
            line=None if line is None else (_unrows(spec, line["S"], n), _unrows(spec, line["U"], n)),
            line_count=d["line_count"],
            top_size=d["counts"]["top_size"],
            timing=d.get("timing"),
        )


def analysis_json(a: TopAnalysis, timing: float | None = None) -> str:
    return dumps(AnalysisRecord.from_analysis(a, timing).to_dict())


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def pretty_analysis(a: TopAnalysis) -> str:
    spec = a.spec
    c = a.classification
    out = [
        f"field      GF({spec.q})",
        f"code       [n={a.n}, k+1={a.k + 1}]",
        f"classes    {a.classes.s if a.classes else 0}",
        f"W'         {len(a.wprime_reps)} projective points ({a.wprime_full_count} vectors)",
        f"dim W      {a.dim_w}",
        f"members    {len(a.members)} of {a.top_size}",
        f"type       {c.kind.value}",
    ]
    if c.kind is TopKind.SINGLE_POINT:
        out.append(f"lines      {c.line_count} lines through the single member")
    if c.kind is TopKind.LINE_CONTAINED:
        out.append(f"line       [S, U] with dim S = {c.line[0].dim}")
    return "\n".join(out) + "\n"


# -- graphs ---------------------------------------------------------------------------

def _label(spec: FieldSpec, S: Subspace) -> str:
    return " / ".join(" ".join(spec.format_code(x) for x in row) for row in S.basis) or "0"


def graph_dot(G: GrassmannGraph) -> str:
    out = [f'graph "G({G.n},{G.k})_{G.spec.q}" {{']
    for i, V in enumerate(G.vertices):
        out.append(f'  {i} [label="{_label(G.spec, V)}"];')
    for i, j in G.edges():
        out.append(f"  {i} -- {j};")
    out.append("}")
    return "\n".join(out) + "\n"


def graph_json(G: GrassmannGraph) -> str:
    return dumps({
        "n": G.n, "k": G.k, "q": G.spec.q,
        "nondegenerate_only": G.restricted_to_nondegenerate,
        "vertices": [_rows(G.spec, V.basis) for V in G.vertices],
        "adjacency": [G.neighbors(i) for i in range(len(G))],
    })
