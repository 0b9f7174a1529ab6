"""Shared fixtures and slow, obviously-correct reference helpers.

The reference helpers intentionally use the most naive formulation of
each concept (full n! scans, orbit enumeration by applying every group
element) so the package code can be checked against something with no
shared cleverness.
"""

import itertools
import os

import pytest

from doubletrace import Graph, apply_symmetry, named_graph, symmetry_elements


def run_slow() -> bool:
    return os.environ.get("DOUBLETRACE_SLOW", "") not in ("", "0")


@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4():
    return named_graph("tetrahedron")


@pytest.fixture
def prism3():
    return named_graph("prism", 3)


@pytest.fixture
def pyramid4():
    return named_graph("pyramid", 4)


@pytest.fixture
def bipyramid3():
    return named_graph("bipyramid", 3)


@pytest.fixture
def path3():
    return Graph(3, [(0, 1), (1, 2)])


def brute_automorphisms(graph):
    """All automorphisms by checking every permutation of the vertices."""
    out = []
    edges = set(graph.edges)
    for perm in itertools.permutations(range(graph.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
        if mapped == edges:
            out.append(perm)
    return out


def naive_is_canonical(graph, seq, aut):
    """Compare against every image under the full symmetry group."""
    w = tuple(seq)
    for element in symmetry_elements(aut, len(w)):
        if apply_symmetry(element, w) < w:
            return False
    return True


def naive_orbit(aut, seq):
    """The full orbit of a trace under the symmetry group."""
    w = tuple(seq)
    return {apply_symmetry(element, w) for element in symmetry_elements(aut, len(w))}
