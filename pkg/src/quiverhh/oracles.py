"""Independent cross-checks for degree-zero and degree-one cohomology.

Both oracles work on the algebra's multiplication directly, never through
the parallel-pair complex: the center is the commutant of the generators,
and the degree-one dimension is the derivation space modulo inner
derivations.  Derivations are parametrized by their values on vertices
and arrows; values on longer basis paths are forced by the product rule,
and the constraints are the vertex/arrow compatibility equations plus the
vanishing of the expanded relations.
"""

from __future__ import annotations

from .algebra import MonomialAlgebra
from .linalg import LabeledBasis, LinearMap, kernel, span
from .quiver import Path


def _solve_rows(field, rows, ncols):
    """Kernel of a sparse row system; returns a Subspace over range(ncols)."""
    unknowns = LabeledBasis(tuple(range(ncols)))
    columns = [dict() for _ in range(ncols)]
    distinct = {}
    for row in rows:
        if not row:
            continue
        key = tuple(sorted(row.items()))
        if key in distinct:
            continue
        distinct[key] = True
        r = len(distinct) - 1
        for u, c in row.items():
            columns[u][r] = c
    eq_space = LabeledBasis(tuple(range(len(distinct))))
    return kernel(field, LinearMap(unknowns, eq_space, tuple(columns)))


def _generators(A: MonomialAlgebra):
    Q = A.quiver
    gens = [Q.trivial_path(v) for v in range(Q.num_vertices)]
    gens += [Q.arrow_path(a) for a in range(Q.num_arrows)]
    return gens


def oracle_center(A: MonomialAlgebra):
    """(dimension, central elements as path-coefficient dicts).

    Solves z*g = g*z for every vertex idempotent and arrow generator g;
    commuting with generators is commuting with everything.
    """
    f = A.field
    basis = A.basis
    index = A.basis_index
    rows = []
    for gpath in _generators(A):
        per_coord: dict = {}

        def bump(coord, pi, delta):
            d = per_coord.setdefault(coord, {})
            d[pi] = f.add(d.get(pi, f.zero), delta)

        for pi, p in enumerate(basis):
            left = A.multiply(p, gpath)
            if left is not None:
                bump(index[left], pi, f.one)
            right = A.multiply(gpath, p)
            if right is not None:
                bump(index[right], pi, f.neg(f.one))
        for coord_row in per_coord.values():
            row = {u: c for u, c in coord_row.items() if not f.is_zero(c)}
            rows.append(row)
    sol = _solve_rows(f, rows, len(basis))
    elements = [
        {basis[i]: c for i, c in v.items()} for v in sol.row_vectors()
    ]
    return sol.dim, elements


class _DerivationSystem:
    """Linear forms for d(p) with unknowns = generator values."""

    def __init__(self, A: MonomialAlgebra):
        self.A = A
        self.f = A.field
        self.gens = _generators(A)
        self.gen_index = {g: i for i, g in enumerate(self.gens)}
        self.dim = A.dim
        self.n_unknowns = len(self.gens) * A.dim
        self._forms: dict = {}

    def unknown(self, gen_path: Path, coord: int) -> int:
        return self.gen_index[gen_path] * self.dim + coord

    def generator_form(self, gpath: Path) -> dict:
        # d(g) is the free vector of unknowns (g, q) over all coords q.
        return {
            (q, self.unknown(gpath, qi)): self.f.one
            for qi, q in enumerate(self.A.basis)
        }

    def form_of(self, p: Path) -> dict:
        """Form of d(p) for a basis path, by splitting off the last arrow."""
        if p in self._forms:
            return self._forms[p]
        A, f = self.A, self.f
        if p.length <= 1:
            form = self.generator_form(p)
        else:
            x = A.quiver.arrow_path(p.arrows[-1])
            rest = Path(p.source, A.quiver.source(p.arrows[-1]), p.arrows[:-1])
            form = self._add(
                self._mul_right(self.form_of(x), rest),
                self._mul_left(x, self.form_of(rest)),
            )
        self._forms[p] = form
        return form

    def _mul_right(self, form: dict, y: Path) -> dict:
        out: dict = {}
        for (q, u), c in form.items():
            r = self.A.multiply(q, y)
            if r is None:
                continue
            key = (r, u)
            s = self.f.add(out.get(key, self.f.zero), c)
            out.pop(key, None) if self.f.is_zero(s) else out.__setitem__(key, s)
        return out

    def _mul_left(self, x: Path, form: dict) -> dict:
        out: dict = {}
        for (q, u), c in form.items():
            r = self.A.multiply(x, q)
            if r is None:
                continue
            key = (r, u)
            s = self.f.add(out.get(key, self.f.zero), c)
            out.pop(key, None) if self.f.is_zero(s) else out.__setitem__(key, s)
        return out

    def _add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for k, c in b.items():
            s = self.f.add(out.get(k, self.f.zero), c)
            out.pop(k, None) if self.f.is_zero(s) else out.__setitem__(k, s)
        return out

    def _scale(self, c, form: dict) -> dict:
        if self.f.is_zero(c):
            return {}
        return {k: self.f.mul(c, v) for k, v in form.items()}

    def equations(self):
        """Sparse unknown-coefficient rows whose kernel is the derivation space."""
        A, f = self.A, self.f
        Q = A.quiver
        rows = []

        def emit(form: dict):
            per_coord: dict = {}
            for (q, u), c in form.items():
                per_coord.setdefault(q, {})[u] = c
            for row in per_coord.values():
                rows.append({u: c for u, c in row.items() if not f.is_zero(c)})

        verts = [Q.trivial_path(v) for v in range(Q.num_vertices)]
        # Idempotent pairs: d(e_i)e_j + e_i d(e_j) = [i == j] d(e_i).
        for i, ei in enumerate(verts):
            for j, ej in enumerate(verts):
                form = self._add(
                    self._mul_right(self.generator_form(ei), ej),
                    self._mul_left(ei, self.generator_form(ej)),
                )
                if i == j:
                    form = self._add(form, self._scale(f.neg(f.one), self.generator_form(ei)))
                emit(form)
        # Vertex/arrow pairs in both orders.
        for a in range(Q.num_arrows):
            ap = Q.arrow_path(a)
            for i, ei in enumerate(verts):
                form = self._add(
                    self._mul_right(self.generator_form(ei), ap),
                    self._mul_left(ei, self.generator_form(ap)),
                )
                if i == Q.target(a):
                    form = self._add(form, self._scale(f.neg(f.one), self.generator_form(ap)))
                emit(form)
                form = self._add(
                    self._mul_right(self.generator_form(ap), ei),
                    self._mul_left(ap, self.generator_form(ei)),
                )
                if i == Q.source(a):
                    form = self._add(form, self._scale(f.neg(f.one), self.generator_form(ap)))
                emit(form)
        # Expanded relations must map to zero.
        for r in A.relations:
            emit(self._word_form(r))
        return rows

    def _word_form(self, r: Path) -> dict:
        """Leibniz expansion of d along the word of ``r``, evaluated in A."""
        A = self.A
        word = r.arrows
        total: dict = {}
        for i in range(len(word)):
            x = A.quiver.arrow_path(word[i])
            form = self.generator_form(x)
            # multiply by the prefix on the right, then the suffix on the left
            for j in range(i - 1, -1, -1):
                form = self._mul_right(form, A.quiver.arrow_path(word[j]))
            for j in range(i + 1, len(word)):
                form = self._mul_left(A.quiver.arrow_path(word[j]), form)
            total = self._add(total, form)
        return total


def derivation_dims(A: MonomialAlgebra):
    """(dim Der, dim InnDer) from the generator-value parametrization."""
    f = A.field
    system = _DerivationSystem(A)
    der = _solve_rows(f, system.equations(), system.n_unknowns)

    inner = []
    for b in A.basis:
        vec: dict = {}
        for g in system.gens:
            left = A.multiply(b, g)
            if left is not None:
                u = system.unknown(g, A.basis_index[left])
                s = f.add(vec.get(u, f.zero), f.one)
                vec.pop(u, None) if f.is_zero(s) else vec.__setitem__(u, s)
            right = A.multiply(g, b)
            if right is not None:
                u = system.unknown(g, A.basis_index[right])
                s = f.sub(vec.get(u, f.zero), f.one)
                vec.pop(u, None) if f.is_zero(s) else vec.__setitem__(u, s)
        if vec:
            inner.append(vec)
    unknown_basis = LabeledBasis(tuple(range(system.n_unknowns)))
    inner_space = span(f, unknown_basis, inner)
    return der.dim, inner_space.dim


def oracle_hh1_dim(A: MonomialAlgebra) -> int:
    """Derivations modulo inner derivations."""
    der, inner = derivation_dims(A)
    return der - inner
