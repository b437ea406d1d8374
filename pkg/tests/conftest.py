import pytest

from quiverhh.examples_data import example_by_name
from quiverhh.fileformat import parse
from quiverhh.gluing import glue


def algebra(name):
    return parse(example_by_name(name).text)


def glued(name):
    ex = example_by_name(name)
    A = parse(ex.text)
    return glue(A, A.quiver.arrow_index[ex.alpha], A.quiver.arrow_index[ex.beta])


def path_of(A, *arrow_names):
    Q = A.quiver
    return Q.path([Q.arrow_index[n] for n in arrow_names])


def pair1_index(C, arrow_name, *path_arrow_names):
    """Index of an arrow/path pair in the degree-one basis, by names.

    An empty path spec means the trivial path at the arrow's source.
    """
    A = C.A
    Q = A.quiver
    a = Q.arrow_index[arrow_name]
    if path_arrow_names:
        p = path_of(A, *path_arrow_names)
    else:
        p = Q.trivial_path(Q.source(a))
    return C.basis1.index[(a, p)]


def pair0_index(C, vertex_name, *path_arrow_names):
    A = C.A
    Q = A.quiver
    v = Q.vertex_index[vertex_name]
    p = path_of(A, *path_arrow_names) if path_arrow_names else Q.trivial_path(v)
    return C.basis0.index[(v, p)]


@pytest.fixture
def line_bound():
    return algebra("line-bound")


@pytest.fixture
def line_free():
    return algebra("line-free")
