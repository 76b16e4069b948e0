import pathlib

import pytest

import proggen
from blp import engine
from blp.bilattice import F, I, T, U
from blp.grounder import ground
from blp.syntax import parse_program

ALPHAS = (F, T, U, I)
DATA = pathlib.Path(__file__).parent / "data"


def load_ground(name, **kwargs):
    return ground(parse_program((DATA / name).read_text()), **kwargs)


@pytest.fixture(scope="session")
def suspect_gp():
    return load_ground("suspect.blp")


@pytest.fixture(scope="session")
def mixed_ops_gp():
    return load_ground("mixed_ops.blp")


@pytest.fixture(scope="session")
def excluded_middle_gp():
    return load_ground("excluded_middle.blp")


@pytest.fixture(scope="session")
def colleague_single_gp():
    return load_ground("colleague_single.blp")


@pytest.fixture(scope="session")
def colleague_multi_gp():
    return load_ground("colleague_multi.blp")


@pytest.fixture(scope="session")
def mixed_corpus():
    """500 seeded random ground programs, all connectives, up to 6 atoms."""
    return [proggen.random_ground_program(seed) for seed in range(500)]


@pytest.fixture(scope="session")
def mixed_results(mixed_corpus):
    """Full semantics (self-checked) for every corpus program and default."""
    return [
        {alpha: engine.semantics(gp, alpha) for alpha in ALPHAS}
        for gp in mixed_corpus
    ]


@pytest.fixture(scope="session")
def conventional_corpus():
    """200 seeded random conventional ground programs, up to 6 atoms."""
    return [
        proggen.random_ground_program(1000 + seed, conventional=True)
        for seed in range(200)
    ]


@pytest.fixture(scope="session")
def positive_corpus():
    """100 seeded random negation-free ground programs."""
    return [
        proggen.random_ground_program(2000 + seed, negation_free=True)
        for seed in range(100)
    ]


@pytest.fixture(scope="session")
def tiny_corpus():
    """Programs small enough for exhaustive valuation enumeration."""
    return [
        proggen.random_ground_program(3000 + seed, max_atoms=4)
        for seed in range(60)
    ]
