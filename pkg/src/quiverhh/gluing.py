"""Gluing two arrows of a monomial algebra into a subalgebra.

Identifying arrows ``alpha: e1 -> e2`` and ``beta: e3 -> e4`` (all four
endpoints distinct) merges e1 with e3 and e2 with e4 and produces a
monomial subalgebra presented on the merged quiver.  The new relations
are exactly the newly composable words of length two through a merged
vertex and of length three through the merged arrow, in both directions.
The construction also carries the induced linear maps between the
parallel-pair spaces of the two algebras and the combinatorial data
(special paths, crucial paths, special pairs, glued-vertex cycle pairs)
controlling how kernels and images of the two complexes differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import MonomialAlgebra, build
from .errors import GluingError, QuiverHHError
from .linalg import LinearMap, Subspace, intersect, span
from .quiver import (
    Path,
    Quiver,
    component_of,
    connected_components,
    is_sink_arrow,
    is_source_arrow,
    parallel,
)
from .paircomplex import complex_data


def _unique_name(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "*"
    taken.add(name)
    return name


def _invariant(cond: bool, message: str):
    if not cond:
        raise QuiverHHError(f"gluing invariant violated: {message}")


@dataclass(frozen=True)
class GluingSpec:
    alpha: int
    beta: int


class GluedAlgebra:
    """Result of gluing arrows ``alpha`` and ``beta`` of ``A``."""

    def __init__(self, A, alpha, beta, B, vertex_map, arrow_map, gamma, z_new):
        self.A: MonomialAlgebra = A
        self.alpha: int = alpha
        self.beta: int = beta
        self.B: MonomialAlgebra = B
        self.vertex_map: tuple = vertex_map
        self.arrow_map: tuple = arrow_map
        self.gamma: int = gamma
        self.z_new: tuple = z_new

    # -- path and pair transport ----------------------------------------------

    def map_path(self, p: Path) -> Path:
        word = tuple(self.arrow_map[a] for a in p.arrows)
        return Path(self.vertex_map[p.source], self.vertex_map[p.target], word)

    @cached_property
    def path_image(self) -> dict:
        return {p: self.map_path(p) for p in self.A.basis}

    @cached_property
    def endpoints(self) -> tuple:
        QA = self.A.quiver
        return (
            QA.source(self.alpha),
            QA.target(self.alpha),
            QA.source(self.beta),
            QA.target(self.beta),
        )

    @cached_property
    def complexes(self) -> tuple:
        return complex_data(self.A), complex_data(self.B)

    @cached_property
    def gamma_pair_index(self) -> int:
        """Index of the merged arrow's diagonal pair in the degree-one basis of B."""
        CB = self.complexes[1]
        g = self.gamma
        return CB.basis1.index[(g, self.B.quiver.arrow_path(g))]

    def gamma_pair_vector(self) -> dict:
        return {self.gamma_pair_index: self.B.field.one}

    # -- induced linear maps ----------------------------------------------------

    @cached_property
    def relation_image_index(self) -> dict:
        """Index in B's relation list of each transported A-relation."""
        out = {}
        b_index = {r.arrows: i for i, r in enumerate(self.B.relations)}
        for ri, r in enumerate(self.A.relations):
            image = self.map_path(r)
            _invariant(
                image.arrows in b_index,
                "transported relation missing from the glued relation set",
            )
            out[ri] = b_index[image.arrows]
        return out

    def _psi(self, src_basis, dst_basis, left_map) -> LinearMap:
        f = self.B.field
        cols = []
        for left, p in src_basis.labels:
            lab = (left_map(left), self.path_image[p])
            cols.append({dst_basis.index[lab]: f.one})
        return LinearMap(src_basis, dst_basis, tuple(cols))

    @cached_property
    def psi0(self) -> LinearMap:
        CA, CB = self.complexes
        return self._psi(CA.basis0, CB.basis0, lambda v: self.vertex_map[v])

    @cached_property
    def psi1(self) -> LinearMap:
        CA, CB = self.complexes
        return self._psi(CA.basis1, CB.basis1, lambda a: self.arrow_map[a])

    @cached_property
    def psi2(self) -> LinearMap:
        CA, CB = self.complexes
        return self._psi(CA.basisZ, CB.basisZ, lambda ri: self.relation_image_index[ri])

    def psi_subspace(self, m: LinearMap, sub: Subspace) -> Subspace:
        f = self.B.field
        return span(f, m.codomain, [m.apply(f, v) for v in sub.row_vectors()])

    # -- gluing kind -------------------------------------------------------------

    @cached_property
    def source_sink(self) -> bool:
        QA = self.A.quiver
        return is_source_arrow(QA, self.alpha) and is_sink_arrow(QA, self.beta)

    @cached_property
    def same_block(self) -> bool:
        e1, _, e3, _ = self.endpoints
        return component_of(self.A.quiver, e1) == component_of(self.A.quiver, e3)

    @cached_property
    def components(self) -> tuple:
        return (
            len(connected_components(self.A.quiver)),
            len(connected_components(self.B.quiver)),
        )


def glue(A: MonomialAlgebra, alpha: int, beta: int, gamma_name: str = "gamma*") -> GluedAlgebra:
    """Glue arrows ``alpha`` and ``beta`` of ``A`` into a subalgebra.

    Raises :class:`GluingError` when an arrow is a loop, the arrows agree,
    or the four endpoint vertices are not pairwise distinct.  The merged
    vertices are named ``f1``/``f2`` and the merged arrow ``gamma_name``
    (uniquified against existing names); everything else keeps its name.
    """
    QA = A.quiver
    if alpha == beta:
        raise GluingError("cannot glue an arrow with itself")
    e1, e2 = QA.source(alpha), QA.target(alpha)
    e3, e4 = QA.source(beta), QA.target(beta)
    if e1 == e2:
        raise GluingError(f"arrow {QA.arrow_name(alpha)} is a loop; gluing is undefined for loops")
    if e3 == e4:
        raise GluingError(f"arrow {QA.arrow_name(beta)} is a loop; gluing is undefined for loops")
    if len({e1, e2, e3, e4}) != 4:
        raise GluingError(
            "the four endpoint vertices must be pairwise distinct; "
            f"got {[QA.vertex_names[v] for v in (e1, e2, e3, e4)]}"
        )

    # Merged quiver: keep A's vertex order, dropping the two merged-away
    # vertices; keep A's arrow order, dropping beta.
    vertex_map = [0] * QA.num_vertices
    new_names: list = []
    taken: set = set()
    for v in range(QA.num_vertices):
        if v in (e3, e4):
            continue
        if v == e1:
            name = _unique_name("f1", taken)
        elif v == e2:
            name = _unique_name("f2", taken)
        else:
            name = _unique_name(QA.vertex_names[v], taken)
        vertex_map[v] = len(new_names)
        new_names.append(name)
    vertex_map[e3] = vertex_map[e1]
    vertex_map[e4] = vertex_map[e2]

    arrow_map = [0] * QA.num_arrows
    new_arrows: list = []
    taken_arrows: set = set()
    gamma = -1
    for a in range(QA.num_arrows):
        if a == beta:
            continue
        if a == alpha:
            name = _unique_name(gamma_name, taken_arrows)
            gamma = len(new_arrows)
        else:
            name = _unique_name(QA.arrow_name(a), taken_arrows)
        arrow_map[a] = len(new_arrows)
        new_arrows.append((name, vertex_map[QA.source(a)], vertex_map[QA.target(a)]))
    arrow_map[beta] = gamma
    QB = Quiver(tuple(new_names), tuple(new_arrows))

    # Newly formed words of length 2 through a merged vertex and of
    # length 3 through the merged arrow, in both directions.
    def new_words(into_merged, out_merged, out_excl, into_other, into_excl, out_far):
        words = []
        for eta in into_merged:
            for lam in out_merged:
                if lam == out_excl:
                    continue
                words.append((eta, lam))
        for mu in into_other:
            if mu == into_excl:
                continue
            for xi in out_far:
                words.append((mu, xi))
        for eta in into_merged:
            for xi in out_far:
                words.append((eta, alpha, xi))
        return words

    QA_from, QA_into = QA.arrows_from, QA.arrows_into
    raw = new_words(QA_into[e1], QA_from[e3], beta, QA_into[e2], alpha, QA_from[e4])
    raw += new_words(QA_into[e3], QA_from[e1], alpha, QA_into[e4], beta, QA_from[e2])
    z_new = []
    seen = set()
    for word in raw:
        mapped = tuple(arrow_map[a] for a in word)
        if mapped not in seen:
            seen.add(mapped)
            z_new.append(QB.path(mapped))
    z_new.sort(key=Path.sort_key)

    transported = []
    for r in A.relations:
        word = tuple(arrow_map[a] for a in r.arrows)
        transported.append(QB.path(word))
    B = build(QB, transported + z_new, A.field, minimalize=True)

    g = GluedAlgebra(A, alpha, beta, B, tuple(vertex_map), tuple(arrow_map), gamma, tuple(z_new))

    _invariant(B.dim == A.dim - 3, f"dim B = {B.dim} but dim A - 3 = {A.dim - 3}")
    fibers: dict = {}
    for p in A.basis:
        q = g.map_path(p)
        _invariant(B.in_basis(q), f"image of a basis path is not relation-free: {q}")
        fibers.setdefault(q, []).append(p)
    _invariant(len(fibers) == B.dim, "induced path map is not surjective")
    for q, pre in fibers.items():
        # Fibers of size two occur exactly at the merged arrow and vertices.
        doubled = q.arrows == (gamma,) or (
            q.length == 0 and q.source in (vertex_map[e1], vertex_map[e2])
        )
        expected = 2 if doubled else 1
        _invariant(
            len(pre) == expected,
            f"fiber of {q} has size {len(pre)}, expected {expected}",
        )
    long_a = sum(1 for p in A.basis if p.length >= 2)
    long_b = sum(1 for q in B.basis if q.length >= 2)
    _invariant(long_a == long_b, "gluing must preserve the span of length->=2 basis paths")
    return g


def gluing_kind(g: GluedAlgebra) -> dict:
    return {"source_sink": g.source_sink, "same_block": g.same_block}


def psi_maps(g: GluedAlgebra) -> tuple:
    return g.psi0, g.psi1, g.psi2


# -- special paths --------------------------------------------------------------


@dataclass(frozen=True)
class SpecialPathData:
    between_first: tuple  # basis paths joining the first merged vertex pair
    between_second: tuple
    z_sp: Subspace
    sp: int


def special_paths(g: GluedAlgebra) -> SpecialPathData:
    """Paths between the glued vertex pairs with nonzero degree-zero image."""
    A, B = g.A, g.B
    CB = g.complexes[1]
    e1, e2, e3, e4 = g.endpoints
    f = B.field

    def survivors(u, v, merged):
        out = []
        cols = []
        for p in A.basis:
            if p.length < 1 or {p.source, p.target} != {u, v}:
                continue
            idx = CB.basis0.index[(merged, g.path_image[p])]
            col = CB.delta0.columns[idx]
            if col:
                out.append(p)
                cols.append(col)
        return out, cols

    first, cols1 = survivors(e1, e3, g.vertex_map[e1])
    second, cols2 = survivors(e2, e4, g.vertex_map[e2])
    z_sp = span(f, CB.basis1, cols1 + cols2)
    return SpecialPathData(tuple(first), tuple(second), z_sp, z_sp.dim)


def crucial_paths(g: GluedAlgebra):
    """Basis paths p from t(alpha) to s(beta) with beta.p.alpha relation-free.

    Only meaningful for a source-sink gluing; returns None then and lets
    callers surface a not-applicable status.
    """
    if not g.source_sink:
        return None
    A = g.A
    e1, e2, e3, e4 = g.endpoints
    out = []
    for p in A.basis:
        if p.length < 1 or p.source != e2 or p.target != e3:
            continue
        word = (g.alpha,) + p.arrows + (g.beta,)
        if not A.word_in_ideal(word):
            out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class SpecialPairData:
    pairs: tuple  # (arrow id, basis path) in A
    span: Subspace  # inside the degree-one pair space of B
    z_spp: Subspace
    kspp: int


def special_pairs(g: GluedAlgebra) -> SpecialPairData:
    """Arrow/path pairs made parallel by the gluing, intersected with the kernel."""
    A, B = g.A, g.B
    QA = A.quiver
    CB = g.complexes[1]
    f = B.field
    e1, e2, e3, e4 = g.endpoints
    four = {e1, e2, e3, e4}
    alpha_path = QA.arrow_path(g.alpha)
    beta_path = QA.arrow_path(g.beta)

    pairs = []
    labels = set()
    for a in range(QA.num_arrows):
        if not ({QA.source(a), QA.target(a)} & four):
            continue
        a_path = QA.arrow_path(a)
        a_star = g.arrow_map[a]
        for p in A.basis:
            if parallel(a_path, p):
                continue
            p_star = g.path_image[p]
            if not (
                B.quiver.source(a_star) == p_star.source
                and B.quiver.target(a_star) == p_star.target
            ):
                continue
            if a_star == g.gamma and p_star.arrows == (g.gamma,):
                continue
            if a == g.alpha and parallel(p, beta_path):
                continue
            if a == g.beta and parallel(p, alpha_path):
                continue
            if p == alpha_path and parallel(a_path, beta_path):
                continue
            if p == beta_path and parallel(a_path, alpha_path):
                continue
            pairs.append((a, p))
            labels.add(CB.basis1.index[(a_star, p_star)])

    spp_span = span(f, CB.basis1, [{i: f.one} for i in sorted(labels)])
    z_spp = intersect(f, spp_span, CB.ker1)
    return SpecialPairData(tuple(pairs), spp_span, z_spp, z_spp.dim)


@dataclass(frozen=True)
class NspData:
    paths: tuple  # basis paths of A between the glued vertex pairs
    span: Subspace  # inside the degree-zero pair space of B
    z_nsp: Subspace
    nsp: int


def nsp_data(g: GluedAlgebra) -> NspData:
    """Glued-vertex cycle pairs and their kernel part, controlling the center."""
    A, B = g.A, g.B
    CB = g.complexes[1]
    C0 = CB.basis0
    f = B.field
    e1, e2, e3, e4 = g.endpoints
    paths = []
    labels = []
    for u, v, merged in ((e1, e3, g.vertex_map[e1]), (e2, e4, g.vertex_map[e2])):
        for p in A.basis:
            if p.length < 1 or {p.source, p.target} != {u, v}:
                continue
            paths.append(p)
            labels.append(C0.index[(merged, g.path_image[p])])
    nsp_span = span(f, C0, [{i: f.one} for i in sorted(set(labels))])
    z_nsp = intersect(f, nsp_span, CB.ker0)
    return NspData(tuple(paths), nsp_span, z_nsp, z_nsp.dim)


def assumption_holds(g: GluedAlgebra):
    """Characteristic condition on loop powers at the four glued vertices.

    Returns (True, None) or (False, (loop arrow id, power)) for the first
    loop at a glued endpoint whose unique pure-power relation length is
    divisible by the characteristic.
    """
    A = g.A
    QA = A.quiver
    f = A.field
    for v in g.endpoints:
        for a in QA.arrows_from[v]:
            if QA.target(a) != v:
                continue
            m = None
            for word in A.relation_words:
                if all(x == a for x in word):
                    m = len(word)
                    break
            _invariant(m is not None, "loop without a pure power relation in a finite-dimensional algebra")
            if f.divides_char(m):
                return False, (a, m)
    return True, None
