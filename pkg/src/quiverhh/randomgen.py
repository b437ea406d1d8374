"""Seeded random monomial algebras and gluable arrow pairs.

Generation is reproducible: one ``random.Random`` stream per call, all
candidate collections iterated in canonical order.  Relation sampling is
followed by a repair loop that cuts any remaining relation-free cycle, so
every returned algebra passes build validation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .algebra import MonomialAlgebra, build
from .errors import DimensionalityError
from .fields import FieldSpec, QQ
from .gluing import GluingSpec
from .quiver import Quiver


@dataclass(frozen=True)
class RandomSpec:
    seed: int
    max_vertices: int = 5
    max_arrows: int = 6
    max_relation_length: int = 3
    relation_density: float = 0.5
    field: FieldSpec = QQ
    max_dim: int = 40


def _random_quiver(rng: random.Random, spec: RandomSpec) -> Quiver:
    lo_v = min(4, spec.max_vertices)
    n = rng.randint(lo_v, spec.max_vertices)
    lo_a = min(2, spec.max_arrows)
    m = rng.randint(lo_a, spec.max_arrows)
    names = tuple(f"v{i}" for i in range(n))
    arrows = tuple((f"a{i}", rng.randrange(n), rng.randrange(n)) for i in range(m))
    return Quiver(names, arrows)


def _random_walk_word(rng: random.Random, Q: Quiver, length: int):
    starts = [a for a in range(Q.num_arrows)]
    if not starts:
        return None
    word = [rng.choice(starts)]
    while len(word) < length:
        nxt = Q.arrows_from[Q.target(word[-1])]
        if not nxt:
            break
        word.append(rng.choice(list(nxt)))
    return tuple(word) if len(word) >= 2 else None


def random_instance(spec: RandomSpec) -> MonomialAlgebra:
    """Reproducible monomial algebra; always passes build validation."""
    rng = random.Random(spec.seed)
    for _ in range(256):
        Q = _random_quiver(rng, spec)
        n_rel = int(round(spec.relation_density * Q.num_arrows))
        words = set()
        for _ in range(n_rel):
            length = rng.randint(2, max(2, spec.max_relation_length))
            w = _random_walk_word(rng, Q, length)
            if w is not None:
                words.add(w)
        for _ in range(64):
            rels = [Q.path(w) for w in sorted(words)]
            try:
                A = build(Q, rels, spec.field, minimalize=True)
            except DimensionalityError as err:
                cycle = err.cycle
                cut = tuple((cycle * 2)[:2]) if len(cycle) == 1 else tuple(cycle[:2])
                if cut in words:
                    # cycle survives all its cuts; give up on this quiver
                    break
                words.add(cut)
                continue
            if A.dim <= spec.max_dim:
                return A
            break
    raise RuntimeError("random generation failed to produce a valid algebra")


def gluable_pairs(A: MonomialAlgebra) -> list:
    """All (alpha, beta) with distinct arrows, no loops, four distinct vertices."""
    Q = A.quiver
    out = []
    for a in range(Q.num_arrows):
        if Q.source(a) == Q.target(a):
            continue
        for b in range(Q.num_arrows):
            if b == a or Q.source(b) == Q.target(b):
                continue
            if len({Q.source(a), Q.target(a), Q.source(b), Q.target(b)}) == 4:
                out.append((a, b))
    return out


def random_gluing(A: MonomialAlgebra, seed: int):
    """A uniformly chosen valid gluing spec, or None when none exists."""
    pairs = gluable_pairs(A)
    if not pairs:
        return None
    rng = random.Random(seed)
    alpha, beta = rng.choice(pairs)
    return GluingSpec(alpha, beta)


def instance_with_gluing(spec: RandomSpec):
    """(algebra, gluing) pair, re-seeding until a gluable instance appears."""
    sub = spec
    for bump in range(64):
        A = random_instance(sub)
        gs = random_gluing(A, sub.seed ^ 0x9E3779B9)
        if gs is not None:
            return A, gs
        sub = replace(sub, seed=sub.seed + 1_000_003)
    raise RuntimeError("no gluable instance found")


def source_sink_rad2_instance(spec: RandomSpec):
    """Radical-square-zero algebra with a planted source/sink arrow pair.

    Every composable length-2 word is a relation, so the instance always
    builds; the planted pair is glueable by construction.
    """
    rng = random.Random(spec.seed)
    base = _random_quiver(rng, spec)
    n = base.num_vertices
    w_in = rng.randrange(n)
    w_out = rng.randrange(n)
    names = base.vertex_names + ("s1", "s2", "t1", "t2")
    s1, t1 = n, n + 2
    arrows = base.arrows + (
        ("alpha", s1, n + 1),
        ("con_a", n + 1, w_in),
        ("con_b", w_out, t1),
        ("beta", t1, n + 3),
    )
    Q = Quiver(names, arrows)
    rels = []
    for a in range(Q.num_arrows):
        for b in Q.arrows_from[Q.target(a)]:
            rels.append(Q.path((a, b)))
    A = build(Q, rels, spec.field)
    return A, GluingSpec(Q.arrow_index["alpha"], Q.arrow_index["beta"])


def source_sink_instance(spec: RandomSpec):
    """(algebra, gluing) whose pair is a source arrow and a sink arrow.

    A fresh source arrow is hung off a random vertex via a connector, and
    dually a fresh sink arrow, so the planted pair always satisfies the
    source/sink conditions; relations are then sampled as usual.
    """
    rng = random.Random(spec.seed)
    for _ in range(256):
        base = _random_quiver(rng, spec)
        n = base.num_vertices
        w_in = rng.randrange(n)
        w_out = rng.randrange(n)
        names = base.vertex_names + ("s1", "s2", "t1", "t2")
        s1, s2, t1, t2 = n, n + 1, n + 2, n + 3
        arrows = base.arrows + (
            ("alpha", s1, s2),
            ("con_a", s2, w_in),
            ("con_b", w_out, t1),
            ("beta", t1, t2),
        )
        Q = Quiver(names, arrows)
        n_rel = int(round(spec.relation_density * Q.num_arrows))
        words = set()
        for _ in range(n_rel):
            length = rng.randint(2, max(2, spec.max_relation_length))
            w = _random_walk_word(rng, Q, length)
            if w is not None:
                words.add(w)
        A = None
        for _ in range(64):
            rels = [Q.path(w) for w in sorted(words)]
            try:
                A = build(Q, rels, spec.field, minimalize=True)
            except DimensionalityError as err:
                cycle = err.cycle
                cut = tuple((cycle * 2)[:2]) if len(cycle) == 1 else tuple(cycle[:2])
                if cut in words:
                    A = None
                    break
                words.add(cut)
                continue
            break
        if A is None or A.dim > spec.max_dim:
            continue
        alpha = Q.arrow_index["alpha"]
        beta = Q.arrow_index["beta"]
        return A, GluingSpec(alpha, beta)
    raise RuntimeError("random generation failed to produce a source-sink instance")
