"""Parallel-pair cochain complex computing HH0 and HH1 of a monomial algebra.

The truncated complex lives on three labeled bases: vertex/basis-path
pairs, arrow/basis-path pairs and relation/basis-path pairs (each pair
parallel).  The degree-zero differential moves a cycle pair across
incident arrows; the degree-one differential substitutes an arrow by a
parallel path inside every relation.  HH0 is the kernel in degree zero,
HH1 the kernel modulo image in degree one, and the degree-one bracket of
two arrow pairs substitutes each into the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import MonomialAlgebra
from .errors import ShapeError
from .fields import FieldSpec
from .linalg import (
    LabeledBasis,
    LinearMap,
    QuotientView,
    Subspace,
    image,
    kernel,
    reduce_against,
    span,
)
from .quiver import Path, parallel, path_str


def pair_str(A: MonomialAlgebra, label, kind: str) -> str:
    """Render a parallel pair as ``left || right`` with right-to-left paths.

    ``kind`` resolves the left id: "0" vertex, "1" arrow, "Z" relation.
    """
    left, p = label
    if kind == "0":
        lhs = A.quiver.vertex_names[left]
    elif kind == "1":
        lhs = A.quiver.arrow_name(left)
    elif kind == "Z":
        lhs = path_str(A.quiver, A.relations[left])
    else:
        raise ShapeError(f"unknown pair space kind {kind!r}")
    return f"{lhs} || {path_str(A.quiver, p)}"


def pair_degree(A: MonomialAlgebra, label, kind: str) -> int:
    """Internal grading: length of the right path minus length of the left."""
    left, p = label
    left_len = {"0": 0, "1": 1}.get(kind)
    if left_len is None:
        if kind != "Z":
            raise ShapeError(f"unknown pair space kind {kind!r}")
        left_len = A.relations[left].length
    return p.length - left_len


def substitute(A: MonomialAlgebra, target: Path, a: int, gamma: Path) -> list:
    """All basis paths obtained by replacing one occurrence of arrow ``a``
    in ``target`` by the parallel path ``gamma`` (with multiplicity)."""
    out = []
    word = target.arrows
    for i, arr in enumerate(word):
        if arr != a:
            continue
        new_word = word[:i] + gamma.arrows + word[i + 1 :]
        if A.word_in_ideal(new_word):
            continue
        out.append(Path(target.source, target.target, new_word))
    return out


class PairComplex:
    """Matrices and canonical subspaces of the truncated complex of ``A``."""

    def __init__(self, A: MonomialAlgebra):
        self.A = A
        self.field: FieldSpec = A.field
        Q = A.quiver

        labels0 = [
            (v, p)
            for v in range(Q.num_vertices)
            for p in A.basis
            if p.source == v and p.target == v
        ]
        labels1 = [
            (a, p)
            for a in range(Q.num_arrows)
            for p in A.basis
            if p.source == Q.source(a) and p.target == Q.target(a)
        ]
        labelsZ = [
            (ri, p)
            for ri, r in enumerate(A.relations)
            for p in A.basis
            if parallel(r, p)
        ]
        self.basis0 = LabeledBasis(tuple(labels0))
        self.basis1 = LabeledBasis(tuple(labels1))
        self.basisZ = LabeledBasis(tuple(labelsZ))

        self.delta0 = self._build_delta0()
        self.delta1 = self._build_delta1()

        self.ker0: Subspace = kernel(self.field, self.delta0)
        self.im0: Subspace = image(self.field, self.delta0)
        self.ker1: Subspace = kernel(self.field, self.delta1)
        # Raises if the image is not inside the kernel: the complex property
        # is checked on every construction.
        self.hh1_view = QuotientView(self.field, self.ker1, self.im0)

    # -- differentials -------------------------------------------------------

    def _build_delta0(self) -> LinearMap:
        A, Q, f = self.A, self.A.quiver, self.field
        idx1 = self.basis1.index
        cols = []
        for v, p in self.basis0.labels:
            col: dict = {}
            for a in Q.arrows_from[v]:
                q = A.multiply(Q.arrow_path(a), p)
                if q is not None:
                    i = idx1[(a, q)]
                    s = f.add(col.get(i, f.zero), f.one)
                    col.pop(i, None) if f.is_zero(s) else col.__setitem__(i, s)
            for a in Q.arrows_into[v]:
                q = A.multiply(p, Q.arrow_path(a))
                if q is not None:
                    i = idx1[(a, q)]
                    s = f.sub(col.get(i, f.zero), f.one)
                    col.pop(i, None) if f.is_zero(s) else col.__setitem__(i, s)
            cols.append(col)
        return LinearMap(self.basis0, self.basis1, tuple(cols))

    def _build_delta1(self) -> LinearMap:
        A, f = self.A, self.field
        idxZ = self.basisZ.index
        cols = []
        for a, gamma in self.basis1.labels:
            col: dict = {}
            for ri, r in enumerate(A.relations):
                for q in substitute(A, r, a, gamma):
                    i = idxZ[(ri, q)]
                    s = f.add(col.get(i, f.zero), f.one)
                    col.pop(i, None) if f.is_zero(s) else col.__setitem__(i, s)
            cols.append(col)
        return LinearMap(self.basis1, self.basisZ, tuple(cols))

    # -- degree-zero block split ----------------------------------------------

    def degree0_split(self):
        """Column index sets of the vertex-pair block and the cycle-pair block."""
        triv = [i for i, (v, p) in enumerate(self.basis0.labels) if p.length == 0]
        pos = [i for i, (v, p) in enumerate(self.basis0.labels) if p.length >= 1]
        return triv, pos

    def im0_block(self, positions) -> Subspace:
        return span(self.field, self.basis1, [self.delta0.columns[i] for i in positions])

    def ker0_positive(self) -> Subspace:
        """Kernel of the differential restricted to cycle pairs of length >= 1,
        as a subspace of the full degree-zero space."""
        _, pos = self.degree0_split()
        sub_basis = LabeledBasis(tuple(self.basis0.labels[i] for i in pos))
        restricted = LinearMap(
            sub_basis, self.basis1, tuple(self.delta0.columns[i] for i in pos)
        )
        ker = kernel(self.field, restricted)
        lifted = []
        for row in ker.row_vectors():
            lifted.append({pos[i]: c for i, c in row.items()})
        return span(self.field, self.basis0, lifted)

    # -- bracket ---------------------------------------------------------------

    def bracket(self, x: dict, y: dict) -> dict:
        """Degree-one bracket, bilinear over arrow/path pair labels."""
        A, f = self.A, self.field
        labels = self.basis1.labels
        idx = self.basis1.index
        out: dict = {}

        def add(i, c):
            s = f.add(out.get(i, f.zero), c)
            out.pop(i, None) if f.is_zero(s) else out.__setitem__(i, s)

        for i, ci in x.items():
            a, gamma = labels[i]
            for j, cj in y.items():
                b, eps = labels[j]
                c = f.mul(ci, cj)
                for q in substitute(A, eps, a, gamma):
                    add(idx[(b, q)], c)
                for q in substitute(A, gamma, b, eps):
                    add(idx[(a, q)], f.neg(c))
        return out

    # -- cohomology --------------------------------------------------------------

    @property
    def hh0(self) -> Subspace:
        return self.ker0

    @property
    def hh1_dim(self) -> int:
        return self.hh1_view.dim

    def hh1_representatives(self) -> list:
        return self.hh1_view.representatives()


@lru_cache(maxsize=64)
def complex_data(A: MonomialAlgebra) -> PairComplex:
    return PairComplex(A)


def delta0(A: MonomialAlgebra) -> LinearMap:
    return complex_data(A).delta0


def delta1(A: MonomialAlgebra) -> LinearMap:
    return complex_data(A).delta1


def hh0(A: MonomialAlgebra) -> Subspace:
    return complex_data(A).hh0


def hh1(A: MonomialAlgebra):
    """(representative vectors inside the degree-one kernel, dimension)."""
    C = complex_data(A)
    return C.hh1_representatives(), C.hh1_dim


def bracket(A: MonomialAlgebra, x: dict, y: dict) -> dict:
    return complex_data(A).bracket(x, y)


@dataclass(frozen=True)
class LieAlgebraPresentation:
    """Structure constants of the degree-one cohomology Lie algebra."""

    dim: int
    basis_labels: tuple
    constants: dict  # (i, j) with i < j -> coefficient tuple
    field: FieldSpec

    def bracket_coords(self, i: int, j: int) -> tuple:
        f = self.field
        if i == j:
            return tuple(f.zero for _ in range(self.dim))
        if i < j:
            return self.constants[(i, j)]
        return tuple(f.neg(c) for c in self.constants[(j, i)])

    def is_abelian(self) -> bool:
        return all(all(self.field.is_zero(c) for c in v) for v in self.constants.values())

    def check_jacobi(self) -> bool:
        f = self.field
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    for m in range(d):
                        total = f.zero
                        for cyc in ((i, j, k), (j, k, i), (k, i, j)):
                            inner = self.bracket_coords(cyc[0], cyc[1])
                            for l in range(d):
                                if f.is_zero(inner[l]):
                                    continue
                                total = f.add(
                                    total, f.mul(inner[l], self.bracket_coords(l, cyc[2])[m])
                                )
                        if not f.is_zero(total):
                            return False
        return True


def lie_center_dim(pres: LieAlgebraPresentation) -> int:
    """Dimension of the center of the presented Lie algebra."""
    f = pres.field
    d = pres.dim
    if d == 0:
        return 0
    columns = []
    for i in range(d):
        col: dict = {}
        for k in range(d):
            coords = pres.bracket_coords(i, k)
            for m, c in enumerate(coords):
                if not f.is_zero(c):
                    col[k * d + m] = c
        columns.append(col)
    dom = LabeledBasis(tuple(range(d)))
    cod = LabeledBasis(tuple(range(d * d)))
    return kernel(f, LinearMap(dom, cod, tuple(columns))).dim


def hh1_lie(A: MonomialAlgebra) -> LieAlgebraPresentation:
    """Structure constants on the deterministic degree-one representatives."""
    C = complex_data(A)
    reps = C.hh1_representatives()
    d = len(reps)
    constants = {}
    for i in range(d):
        for j in range(i + 1, d):
            br = C.bracket(reps[i], reps[j])
            constants[(i, j)] = C.hh1_view.project(br)
    pivots = [C.ker1.pivots[i] for i in C.hh1_view.rep_indices]
    labels = tuple(pair_str(A, C.basis1.labels[p], "1") for p in pivots)
    return LieAlgebraPresentation(d, labels, constants, A.field)


@dataclass(frozen=True)
class CenterTable:
    """Commutative multiplication table on the degree-zero cohomology basis."""

    dim: int
    table: dict  # (i, j) -> coefficient tuple
    unit: tuple
    basis_labels: tuple


def central_mult(C: PairComplex, u: dict, v: dict) -> dict:
    """Product of two degree-zero pair vectors as central algebra elements.

    The pair (vertex, cycle) stands for the cycle itself; the product is
    expanded in the monomial basis and folded back into cycle pairs.
    """
    A, f = C.A, C.field
    labels0 = C.basis0.labels
    prod: dict = {}
    for i, cp in u.items():
        p = labels0[i][1]
        for j, cq in v.items():
            q = labels0[j][1]
            r = A.multiply(p, q)
            if r is None:
                continue
            s = f.add(prod.get(r, f.zero), f.mul(cp, cq))
            prod.pop(r, None) if f.is_zero(s) else prod.__setitem__(r, s)
    return {C.basis0.index[(r.source, r)]: c for r, c in prod.items()}


def center_product(A: MonomialAlgebra) -> CenterTable:
    """Multiplication table of the center in the canonical kernel basis.

    A kernel class corresponds to the central element obtained by summing
    the right-hand paths of its pairs; products are expanded in the
    monomial basis and rewritten in kernel coordinates.
    """
    C = complex_data(A)
    f = A.field
    rows = C.hh0.row_vectors()
    labels0 = C.basis0.labels
    table = {}
    for i, x in enumerate(rows):
        for j, y in enumerate(rows):
            coords, rem = reduce_against(f, C.hh0, central_mult(C, x, y))
            if rem:
                raise ShapeError("central product left the center; this is a bug")
            table[(i, j)] = tuple(coords)
    unit_vec = {C.basis0.index[(v, A.quiver.trivial_path(v))]: f.one for v in range(A.quiver.num_vertices)}
    unit, rem = reduce_against(f, C.hh0, unit_vec)
    if rem:
        raise ShapeError("identity element is not central; this is a bug")
    labels = tuple(pair_str(A, labels0[p], "0") for p in C.hh0.pivots)
    return CenterTable(C.hh0.dim, table, tuple(unit), labels)
