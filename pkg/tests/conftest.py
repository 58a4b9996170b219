from pathlib import Path

import pytest

import torsionkit as tk

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def triangle():
    """Circuit on three vertices; H_0 and H_1 are one-dimensional."""
    return tk.make_complex(
        tk.QQ, [3, 3], [[[-1, 1, 0], [0, -1, 1], [1, 0, -1]]]
    )


@pytest.fixture
def triangle_cover(triangle):
    """Degree-two self cover of the triangle circuit; torsion 1/2."""
    return tk.make_chain_map(
        triangle,
        triangle,
        [
            [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
            [[1, 1, 0], [1, 0, 1], [0, 1, 1]],
        ],
    )


@pytest.fixture
def square():
    return tk.make_complex(
        tk.QQ,
        [4, 4],
        [[[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [1, 0, 0, -1]]],
    )


@pytest.fixture
def square_cover(square):
    """Degree-two self cover of the square circuit; torsion 1/2."""
    return tk.make_chain_map(
        square,
        square,
        [
            [[1, 0, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 1, 0]],
            [[1, 1, 0, 0], [0, 0, 1, 1], [1, 1, 0, 0], [0, 0, 1, 1]],
        ],
    )


@pytest.fixture
def wedge():
    """Two triangle circuits glued at one vertex; betti (1, 2)."""
    return tk.make_complex(
        tk.QQ,
        [5, 6],
        [
            [
                [-1, 1, 0, 0, 0],
                [0, -1, 1, 0, 0],
                [1, 0, -1, 0, 0],
                [0, 0, 0, -1, 1],
                [0, 0, -1, 1, 0],
                [0, 0, 1, 0, -1],
            ]
        ],
    )


@pytest.fixture
def wedge_fold(wedge):
    """Self-map folding the first circuit across both; torsion 1."""
    return tk.make_chain_map(
        wedge,
        wedge,
        [
            [
                [1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0],
                [0, 0, 0, 0, 1],
                [0, 0, 0, 1, 0],
                [0, 0, 0, 0, 1],
            ],
            [
                [1, 1, 0, 0, 0, 0],
                [0, 0, 0, 1, 1, 0],
                [0, 0, 1, 0, 0, 1],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 1, 1],
                [0, 0, 0, 0, 0, 0],
            ],
        ],
    )
