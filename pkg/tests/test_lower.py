import random

import pytest

import worked_examples as ex
from oracles import RUNNING, ClassKey, random_shifting, random_srm
from sandtile.linalg import hnf_row
from sandtile.lower import (
    DOUBLE_PRIME,
    PRIME,
    alt_bases,
    build_lower_tile,
    lower_equivalent,
    lower_representatives,
    piece_polygon,
    project_first,
    project_last,
)
from sandtile.sandpile import SandpileLattice
from sandtile.srm import enumerate_bases
from sandtile.tiling import w_representatives


def _sets(reps):
    return {B.indices: set(v) for B, v in reps.items()}


def test_worked_prime_representatives():
    tile = build_lower_tile(RUNNING, [1, 1, 1], PRIME)
    assert _sets(lower_representatives(RUNNING, tile, [1, 1, 1])) == ex.LOWER_PRIME


def test_worked_double_prime_representatives():
    tile = build_lower_tile(RUNNING, [1, 1, 1], DOUBLE_PRIME)
    assert _sets(lower_representatives(RUNNING, tile, [1, 1, 1])) == ex.LOWER_DOUBLE_PRIME


@pytest.mark.parametrize("proj, expected", [(project_first, ex.LOWER_PRIME), (project_last, ex.LOWER_DOUBLE_PRIME)])
def test_projections_of_full_fibers(proj, expected):
    projected = {B: {proj(RUNNING, p) for p in pts} for B, pts in ex.FIBERS_W.items()}
    assert projected == expected


def test_prime_tile_pieces():
    tile = build_lower_tile(RUNNING, [1, 1, 1], PRIME)
    got = sorted((B.indices, frozenset(piece_polygon(P))) for B, P in tile.pieces)
    assert got == sorted((B, frozenset(v)) for B, v in ex.PRIME_TILE)
    corners = {v for _, P in tile.pieces for v in piece_polygon(P)}
    assert set(ex.PRIME_OUTLINE) <= corners
    assert sorted(P.volume() for _, P in tile.pieces) == [1, 2, 2, 3, 3, 3]


def test_double_prime_intervals():
    tile = build_lower_tile(RUNNING, [1, 1, 1], DOUBLE_PRIME)
    ends = sorted({e for _, P in tile.pieces for e in (P.anchor[0], P.anchor[0] + P.generators[0][0])})
    assert ends == [-13, -10, -8, -5, -3, 0, 1]
    assert sum(P.volume() for _, P in tile.pieces) == 14
    assert tile.translation_lattice == ((14,),)


def test_alt_bases_generate_the_same_lattice():
    rng = random.Random(31)
    for D in [RUNNING] + [random_srm(rng) for _ in range(30)]:
        Dp, Dpp = alt_bases(D)
        H = SandpileLattice(D).hnf
        assert hnf_row(Dp) == H
        assert hnf_row(Dpp) == H


def test_projections_preserve_class_random():
    rng = random.Random(32)
    for _ in range(40):
        D = random_srm(rng)
        key = ClassKey(D)
        for _ in range(10):
            z = [rng.randint(-9, 9) for _ in range(D.n)]
            assert key(project_first(D, z)) == key(z)
            assert key(project_last(D, z)) == key(z)


def test_lower_representatives_random():
    rng = random.Random(33)
    for _ in range(25):
        D = random_srm(rng, rmax=3, nmax=5, lo=-3, hi=3)
        vec = random_shifting(D, rng)
        key = ClassKey(D)
        table = enumerate_bases(D)
        for kind in (PRIME, DOUBLE_PRIME):
            reps = lower_representatives(D, build_lower_tile(D, vec, kind, table), vec)
            for B, m in table:
                assert len(reps[B]) == m * m
            pts = [p for v in reps.values() for p in v]
            assert len({key(p) for p in pts}) == len(pts) == key.det
            for a, b in zip(pts, pts[1:]):
                assert lower_equivalent(D, kind, a, b) == (key(a) == key(b))


def test_lower_and_full_multijections_agree_on_classes():
    # each lower representative lands in the class of a full representative for the same basis
    f = w_representatives(RUNNING, [1, 1, 1])
    for kind in (PRIME, DOUBLE_PRIME):
        reps = lower_representatives(RUNNING, build_lower_tile(RUNNING, [1, 1, 1], kind), [1, 1, 1])
        for B, pts in reps.items():
            assert {f.basis_of(p) for p in pts} == {B}


def test_bad_kind():
    with pytest.raises(ValueError):
        build_lower_tile(RUNNING, [1, 1, 1], "triple")
