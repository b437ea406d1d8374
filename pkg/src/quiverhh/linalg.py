"""Deterministic exact linear algebra on labeled bases.

Vectors are sparse dicts ``index -> scalar`` over a :class:`LabeledBasis`.
A :class:`Subspace` is stored as the reduced row echelon form of its
spanning set, which is unique: two subspaces are equal iff their stored
rows are identical.  Pivoting is positional (first nonzero column, first
nonzero row), never numerical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import ContainmentError, ShapeError
from .fields import FieldSpec


@dataclass(frozen=True)
class LabeledBasis:
    """Ordered tuple of distinct hashable labels with index lookup."""

    labels: tuple

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")

    @cached_property
    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)

    def vector(self, assignment: dict) -> dict:
        """Sparse vector from a ``label -> scalar`` mapping."""
        return {self.index[lab]: c for lab, c in assignment.items() if c != 0}


def vec_add(field: FieldSpec, u: dict, v: dict) -> dict:
    out = dict(u)
    for i, c in v.items():
        s = field.add(out.get(i, field.zero), c)
        if field.is_zero(s):
            out.pop(i, None)
        else:
            out[i] = s
    return out

def vec_scale(field: FieldSpec, c, v: dict) -> dict:
    if field.is_zero(c):
        return {}
    return {i: field.mul(c, x) for i, x in v.items()}

def vec_sub(field: FieldSpec, u: dict, v: dict) -> dict:
    return vec_add(field, u, vec_scale(field, field.neg(field.one), v))


def _rref(field: FieldSpec, rows: list, width: int) -> tuple:
    """Reduced row echelon form; returns (rows, pivots) with dense tuple rows."""
    work = [list(r) for r in rows if any(not field.is_zero(x) for x in r)]
    pivots = []
    r = 0
    for c in range(width):
        pr = None
        for i in range(r, len(work)):
            if not field.is_zero(work[i][c]):
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and not field.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    work = [tuple(row) for row in work[:r]]
    return tuple(work), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """Canonical reduced-echelon representation of a span."""

    basis: LabeledBasis
    rows: tuple = ()
    pivots: tuple = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def row_vectors(self) -> list:
        """Rows as sparse dicts (field-zero entries dropped)."""
        return [{i: c for i, c in enumerate(row) if c != 0} for row in self.rows]

    def __contains__(self, vec: dict) -> bool:  # pragma: no cover - alias
        raise TypeError("use member(space, vector)")


def span(field: FieldSpec, basis: LabeledBasis, vectors: Sequence[dict]) -> Subspace:
    """Canonical subspace spanned by sparse vectors."""
    width = len(basis)
    dense = []
    for v in vectors:
        row = [field.zero] * width
        for i, c in v.items():
            row[i] = c
        dense.append(row)
    rows, pivots = _rref(field, dense, width)
    return Subspace(basis, rows, pivots)


def zero_subspace(basis: LabeledBasis) -> Subspace:
    return Subspace(basis, (), ())


def reduce_against(field: FieldSpec, space: Subspace, vec: dict) -> tuple:
    """Split ``vec`` as (coefficients along space.rows, remainder)."""
    rem = dict(vec)
    coeffs = []
    for row, p in zip(space.rows, space.pivots):
        c = rem.get(p, field.zero)
        coeffs.append(c)
        if not field.is_zero(c):
            for i, x in enumerate(row):
                if field.is_zero(x):
                    continue
                s = field.sub(rem.get(i, field.zero), field.mul(c, x))
                if field.is_zero(s):
                    rem.pop(i, None)
                else:
                    rem[i] = s
    return coeffs, rem


def member(field: FieldSpec, space: Subspace, vec: dict) -> bool:
    _, rem = reduce_against(field, space, vec)
    return not rem


def subspace_sum(field: FieldSpec, s: Subspace, t: Subspace) -> Subspace:
    _check_same_basis(s, t)
    return span(field, s.basis, s.row_vectors() + t.row_vectors())


def intersect(field: FieldSpec, s: Subspace, t: Subspace) -> Subspace:
    """Zassenhaus: echelonize [S|S] over [T|0]; zero-left rows carry the meet."""
    _check_same_basis(s, t)
    width = len(s.basis)
    rows = []
    for r in s.rows:
        rows.append(list(r) + list(r))
    zero = [field.zero] * width
    for r in t.rows:
        rows.append(list(r) + zero)
    ech, _ = _rref(field, rows, 2 * width)
    meet = []
    for row in ech:
        if all(field.is_zero(x) for x in row[:width]):
            v = {i: c for i, c in enumerate(row[width:]) if not field.is_zero(c)}
            if v:
                meet.append(v)
    return span(field, s.basis, meet)


def is_direct_sum(field: FieldSpec, s: Subspace, t: Subspace) -> bool:
    return subspace_sum(field, s, t).dim == s.dim + t.dim


def quotient_dim(field: FieldSpec, sub: Subspace, total: Subspace) -> int:
    _check_same_basis(sub, total)
    for v in sub.row_vectors():
        if not member(field, total, v):
            raise ContainmentError("subspace is not contained in the total space")
    return total.dim - sub.dim


def contains_subspace(field: FieldSpec, big: Subspace, small: Subspace) -> bool:
    return all(member(field, big, v) for v in small.row_vectors())


def _check_same_basis(s: Subspace, t: Subspace):
    if s.basis is not t.basis and s.basis != t.basis:
        raise ShapeError("subspaces live over different bases")


@dataclass(frozen=True)
class LinearMap:
    """Columns of a map between labeled bases, stored sparsely."""

    domain: LabeledBasis
    codomain: LabeledBasis
    columns: tuple  # one sparse dict per domain label

    def __post_init__(self):
        if len(self.columns) != len(self.domain):
            raise ShapeError("one column per domain label required")

    def apply(self, field: FieldSpec, vec: dict) -> dict:
        out: dict = {}
        for j, c in vec.items():
            for i, x in self.columns[j].items():
                s = field.add(out.get(i, field.zero), field.mul(c, x))
                if field.is_zero(s):
                    out.pop(i, None)
                else:
                    out[i] = s
        return out

    def is_zero_on(self, field: FieldSpec, vec: dict) -> bool:
        return not self.apply(field, vec)


def image(field: FieldSpec, m: LinearMap) -> Subspace:
    return span(field, m.codomain, list(m.columns))


def kernel(field: FieldSpec, m: LinearMap) -> Subspace:
    """Canonical kernel via RREF of the coefficient matrix."""
    ncols = len(m.domain)
    nrows = len(m.codomain)
    rows = [[field.zero] * ncols for _ in range(nrows)]
    for j, col in enumerate(m.columns):
        for i, x in col.items():
            rows[i][j] = x
    ech, pivots = _rref(field, rows, ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    gens = []
    for f in free:
        v = {f: field.one}
        for row, p in zip(ech, pivots):
            if not field.is_zero(row[f]):
                v[p] = field.neg(row[f])
        gens.append(v)
    return span(field, m.domain, gens)


def solve_columns(field: FieldSpec, width: int, columns, target: dict):
    """Coefficients expressing ``target`` in ``columns`` (free parts zero),
    or None when the system is inconsistent."""
    ncols = len(columns) + 1
    rows = [[field.zero] * ncols for _ in range(width)]
    for j, col in enumerate(columns):
        for i, x in col.items():
            rows[i][j] = x
    for i, x in target.items():
        rows[i][ncols - 1] = x
    ech, pivots = _rref(field, rows, ncols)
    if ncols - 1 in pivots:
        return None
    sol = [field.zero] * len(columns)
    for row, p in zip(ech, pivots):
        sol[p] = row[ncols - 1]
    return sol


def compose_maps(field: FieldSpec, outer: LinearMap, inner: LinearMap) -> LinearMap:
    if outer.domain != inner.codomain:
        raise ShapeError("maps are not composable")
    cols = tuple(outer.apply(field, col) for col in inner.columns)
    return LinearMap(inner.domain, outer.codomain, cols)


class QuotientView:
    """Classes of ``total / sub`` with deterministic representatives.

    Representatives are the echelon rows of ``total`` whose index avoids
    the pivot set of ``sub`` rewritten in ``total`` coordinates, so two
    runs (and two machines) pick the same basis.
    """

    def __init__(self, field: FieldSpec, total: Subspace, sub: Subspace):
        self.field = field
        self.total = total
        self.sub = sub
        coord_rows = []
        for v in sub.row_vectors():
            coeffs, rem = reduce_against(field, total, v)
            if rem:
                raise ContainmentError("subspace is not contained in the total space")
            coord_rows.append({i: c for i, c in enumerate(coeffs) if not field.is_zero(c)})
        coord_basis = LabeledBasis(tuple(range(total.dim)))
        self._sub_in_total = span(field, coord_basis, coord_rows)
        piv = set(self._sub_in_total.pivots)
        self.rep_indices = tuple(i for i in range(total.dim) if i not in piv)

    @property
    def dim(self) -> int:
        return len(self.rep_indices)

    def representatives(self) -> list:
        rows = self.total.row_vectors()
        return [rows[i] for i in self.rep_indices]

    def project(self, vec: dict) -> tuple:
        """Coordinates of the class of ``vec`` in the representative basis."""
        coeffs, rem = reduce_against(self.field, self.total, vec)
        if rem:
            raise ContainmentError("vector lies outside the total space")
        as_vec = {i: c for i, c in enumerate(coeffs) if not self.field.is_zero(c)}
        _, reduced = reduce_against(self.field, self._sub_in_total, as_vec)
        return tuple(reduced.get(i, self.field.zero) for i in self.rep_indices)
