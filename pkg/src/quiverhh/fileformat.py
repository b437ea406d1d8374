"""Line-oriented text format for monomial algebras.

Directives, one per line: ``field Q`` or ``field F <p>``; ``vertex <name>``
(order defines ids); ``arrow <name> <src> <tgt>``; ``rel <arrow> ...``
listing arrows in traversal order (first-traversed first, which is the
reverse of the right-to-left product notation used in rendered output).
``#`` starts a comment.  Parsing is total with positioned diagnostics and
``parse(print_algebra(A))`` reproduces ``A``.
"""

from __future__ import annotations

from .algebra import MonomialAlgebra, build
from .errors import (
    AdmissibilityError,
    CompositionError,
    DimensionalityError,
    MinimalityError,
    ParseError,
)
from .fields import GF, QQ, FieldSpec
from .quiver import Quiver


def _tokens(line: str):
    """(token, 1-based column) pairs, comments stripped."""
    code = line.split("#", 1)[0]
    out = []
    col = 1
    for raw in code.split(" "):
        if raw.strip():
            out.append((raw.strip(), col))
        col += len(raw) + 1
    return out


def parse(text: str, minimalize: bool = False) -> MonomialAlgebra:
    field: FieldSpec = None
    vertices: list = []
    vertex_ids: dict = {}
    arrows: list = []
    arrow_ids: dict = {}
    rel_lines: list = []

    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line.replace("\t", " "))
        if not toks:
            continue
        head, col0 = toks[0]
        args = toks[1:]
        if head == "field":
            if field is not None:
                raise ParseError("duplicate field directive", lineno, col0)
            if len(args) == 1 and args[0][0] == "Q":
                field = QQ
            elif len(args) == 2 and args[0][0] == "F":
                tok, col = args[1]
                try:
                    field = GF(int(tok))
                except ValueError as err:
                    raise ParseError(str(err), lineno, col) from None
            else:
                raise ParseError("expected 'field Q' or 'field F <p>'", lineno, col0)
        elif head == "vertex":
            if len(args) != 1:
                raise ParseError("expected 'vertex <name>'", lineno, col0)
            name, col = args[0]
            if name in vertex_ids:
                raise ParseError(f"duplicate vertex name {name}", lineno, col)
            vertex_ids[name] = len(vertices)
            vertices.append(name)
        elif head == "arrow":
            if len(args) != 3:
                raise ParseError("expected 'arrow <name> <src> <tgt>'", lineno, col0)
            (name, ncol), (src, scol), (tgt, tcol) = args
            if name in arrow_ids:
                raise ParseError(f"duplicate arrow name {name}", lineno, ncol)
            if src not in vertex_ids:
                raise ParseError(f"unknown vertex {src}", lineno, scol)
            if tgt not in vertex_ids:
                raise ParseError(f"unknown vertex {tgt}", lineno, tcol)
            arrow_ids[name] = len(arrows)
            arrows.append((name, vertex_ids[src], vertex_ids[tgt]))
        elif head == "rel":
            if len(args) < 2:
                raise ParseError(
                    "a relation needs at least two arrows (admissibility)", lineno, col0
                )
            rel_lines.append((lineno, col0, args))
        else:
            raise ParseError(f"unknown directive {head}", lineno, col0)

    quiver = Quiver(tuple(vertices), tuple(arrows))
    relations = []
    for lineno, col0, args in rel_lines:
        word = []
        for name, col in args:
            if name not in arrow_ids:
                raise ParseError(f"unknown arrow {name}", lineno, col)
            word.append(arrow_ids[name])
        try:
            relations.append(quiver.path(word))
        except CompositionError as err:
            raise ParseError(str(err), lineno, col0) from None
    try:
        return build(quiver, relations, field or QQ, minimalize=minimalize)
    except (AdmissibilityError, MinimalityError, DimensionalityError) as err:
        raise ParseError(str(err), len(text.splitlines()) or 1) from None


def print_algebra(A: MonomialAlgebra) -> str:
    lines = [f"field {'Q' if A.field.char == 0 else f'F {A.field.char}'}"]
    for name in A.quiver.vertex_names:
        lines.append(f"vertex {name}")
    for name, s, t in A.quiver.arrows:
        lines.append(f"arrow {name} {A.quiver.vertex_names[s]} {A.quiver.vertex_names[t]}")
    for r in A.relations:
        lines.append("rel " + " ".join(A.quiver.arrow_name(a) for a in r.arrows))
    return "\n".join(lines) + "\n"
