"""Ortak fixture grupları."""

from pathlib import Path

import pytest

from src.graph_product import (
    complete_bipartite_raag,
    create_graph_product,
    cycle_racg,
    racg,
    raag,
)
from src.vertex_groups import cyclic_group, infinite_cyclic, symmetric_group

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def f2():
    return raag(["a", "b"])


@pytest.fixture
def z2():
    return raag(["a", "b"], [("a", "b")])


@pytest.fixture
def p3():
    """a - b - c"""
    return raag(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def infinite_dihedral():
    return racg(["u", "v"])


@pytest.fixture
def pentagon():
    return cycle_racg(5)


@pytest.fixture
def mixed():
    """x: C_3, a ve b: Z; tek kenar x - a."""
    z = infinite_cyclic()
    return create_graph_product(["x", "a", "b"], [("x", "a")], {"x": cyclic_group(3), "a": z, "b": z})


@pytest.fixture
def k22():
    return complete_bipartite_raag(2)


@pytest.fixture
def s3():
    return create_graph_product(["s"], [], {"s": symmetric_group(3)})
