import random

import pytest

from dorroh.fields import GF, Q
from dorroh.linalg import Matrix
from dorroh.structures import (
    Algebra,
    BicomoduleCoaction,
    BimoduleAction,
    Coalgebra,
    DorrohPair,
    DorrohPairAlgebras,
    DorrohPairCoalgebras,
)


@pytest.fixture
def Q_():
    return Q


@pytest.fixture(params=[2, 3], ids=["GF2", "GF3"])
def small_field(request):
    return GF(request.param)


def random_matrix(F, rows, cols, rng, density=0.5):
    els = F.elements()
    return Matrix(F, [[rng.choice(els) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)], cols)


def random_pair_candidate(F, h, n, rng, density=0.5):
    """Unconstrained structure constants for a pair over ``F``; usually not a valid pair."""
    rm = lambda r, c: random_matrix(F, r, c, rng, density)  # noqa: E731
    unit = tuple(rng.choice(F.elements()) for _ in range(h))
    counit = tuple(rng.choice(F.elements()) for _ in range(h))
    H_alg = Algebra(F, rm(h, h * h), unit)
    H_coal = Coalgebra(F, rm(h * h, h), counit)
    I_alg = Algebra(F, rm(n, n * n))
    I_coal = Coalgebra(F, rm(n * n, n))
    act = BimoduleAction(rm(n, h * n), rm(n, n * h))
    coact = BicomoduleCoaction(rm(h * n, n), rm(n * h, n))
    return DorrohPair(DorrohPairAlgebras(H_alg, I_alg, act), DorrohPairCoalgebras(H_coal, I_coal, coact))


@pytest.fixture
def rng():
    return random.Random(20261016)


def gallery_pairs(field, kind):
    """``(name, pair)`` for every gallery fixture that carries ``kind`` data over ``field``.

    ``kind`` is ``"algebra"`` or ``"coalgebra"``; the graded Hopf fixture is split first.
    """
    from dorroh.gallery import GalleryError, SWEEDLER_DEGREES, gallery, gallery_names, sweedler_hopf
    from dorroh.hopf import split_graded_hopf

    out = []
    for name in gallery_names():
        try:
            doc = gallery(name, field)
        except GalleryError:
            continue
        if doc.pair is None:
            pair = split_graded_hopf(sweedler_hopf(field), SWEEDLER_DEGREES).split.pair
            out.append((name, pair.algebras if kind == "algebra" else pair.coalgebras))
        elif kind == "algebra" and doc.has_algebra_data:
            out.append((name, doc.pair_algebras()))
        elif kind == "coalgebra" and doc.has_coalgebra_data:
            out.append((name, doc.pair_coalgebras()))
    return out


BIG_BUDGET = 3 ** 16
