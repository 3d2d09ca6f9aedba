import json
import random
from fractions import Fraction

import pytest

import worked_examples as ex
from oracles import RUNNING, ClassKey, brute_associated, brute_box_count, cramer, full_rows, random_shifting, random_srm
from sandtile.sandpile import SandpileLattice
from sandtile.srm import Basis, StandardRepMatrix, enumerate_bases
from sandtile.tiling import (
    CLOSED_ABOVE,
    CLOSED_BELOW,
    InvariantViolation,
    NotShiftingDirectionError,
    OrientedParallelepiped,
    ShiftingVectorError,
    corner_candidates,
    corner_point,
    integer_points,
    locate_in_tile,
    orient,
    p1,
    p2,
    p_full,
    tile_membership,
    validate_shifting,
    w_representatives,
)


def _fibers(f):
    return {B.indices: set(pts) for B, pts in f.fibers.items()}


def test_worked_fibers_w():
    assert _fibers(w_representatives(RUNNING, [1, 1, 1])) == ex.FIBERS_W


def test_worked_fibers_w_prime():
    assert _fibers(w_representatives(RUNNING, [-1, 2, -2])) == ex.FIBERS_W_PRIME


def test_fibers_match_box_scan_oracle():
    rng = random.Random(21)
    checked = 0
    while checked < 25:
        D = random_srm(rng, rmax=2, nmax=4, lo=-2, hi=2)
        if SandpileLattice(D).order() > 60:
            continue
        vec = random_shifting(D, rng)
        f = w_representatives(D, vec)
        assert _fibers(f) == {B: set(p) for B, p in brute_associated(D, vec).items()}
        checked += 1


def test_fiber_invariants_random():
    rng = random.Random(22)
    for _ in range(30):
        D = random_srm(rng, rmax=3, nmax=5, lo=-3, hi=3)
        vec = random_shifting(D, rng)
        f = w_representatives(D, vec)
        key = ClassKey(D)
        table = enumerate_bases(D)
        for B, m in table:
            assert len(f.fibers[B]) == m * m
        reps = f.representatives()
        assert len(reps) == SandpileLattice(D).order() == key.det
        assert len({key(z) for z in reps}) == len(reps)


def test_apply_sends_each_class_to_its_fiber():
    f = w_representatives(RUNNING, [1, 1, 1])
    L = SandpileLattice(RUNNING)
    for B, pts in f.fibers.items():
        for p in pts:
            # move p around its class; the map must not notice
            q = [a + 2 * b - c for a, b, c in zip(p, L.full[0], L.full[2])]
            assert f.apply(q) == (B, p)
            assert f.basis_of(q) == B


def test_json_schema_and_determinism():
    a = w_representatives(RUNNING, ["1", "1", "1"]).to_json()
    b = w_representatives(RUNNING, [1, 1, Fraction(1)]).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert a["group_order"] == 14
    assert [e["basis"] for e in a["fibers"]] == [[1, 2], [1, 3], [2, 3]]
    for e in a["fibers"]:
        assert e["points"] == sorted(e["points"])
        assert len(e["points"]) == e["multiplicity"] ** 2


def test_invalid_shifting_vector_names_the_facet():
    with pytest.raises(ShiftingVectorError) as err:
        validate_shifting(RUNNING, [1, 0, 1])
    assert "columns [1]" in str(err.value)
    assert err.value.basis == Basis((1, 2))
    with pytest.raises(ValueError):
        validate_shifting(RUNNING, [1, 1])
    # (3, 2) is column 3 of D: it lies on the facet spans {3} of bases {1,3} and {2,3}
    with pytest.raises(NotShiftingDirectionError):
        validate_shifting(RUNNING, [3, 2, 1])


def test_half_open_counts_match_box_scan():
    rng = random.Random(23)
    for _ in range(60):
        k = rng.randint(1, 3)
        gens = [tuple(rng.randint(-3, 3) for _ in range(k)) for _ in range(k)]
        anchor = tuple(rng.randint(-4, 4) for _ in range(k))
        try:
            P = OrientedParallelepiped(tuple(gens), anchor)
        except ValueError:
            continue
        direction = [rng.randint(1, 9) * rng.choice((-1, 1)) for _ in range(k)]
        try:
            Q = orient(P, direction)
        except NotShiftingDirectionError:
            continue
        pts = integer_points(Q)
        closed = [o == CLOSED_BELOW for o in Q.orientation]
        assert pts == brute_box_count(gens, anchor, closed)
        assert len(pts) == P.volume()


def test_orientation_follows_direction():
    P = OrientedParallelepiped(((2, 0), (0, 3)), (0, 0))
    assert orient(P, (1, -1)).orientation == (CLOSED_BELOW, CLOSED_ABOVE)
    assert integer_points(orient(P, (1, -1))) == [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)]
    with pytest.raises(NotShiftingDirectionError):
        orient(P, (0, 1))
    with pytest.raises(ValueError):
        integer_points(P)


def test_integer_points_guard():
    P = OrientedParallelepiped(((1, 0), (0, 1)), (Fraction(1, 2), 0), (CLOSED_BELOW, CLOSED_BELOW))
    with pytest.raises(ValueError):
        integer_points(P)
    assert issubclass(InvariantViolation, AssertionError)


def test_parallelepipeds_of_running_example():
    B = Basis((1, 3))
    assert p1(RUNNING, B).generators == ((1, 0), (3, 2))
    assert p2(RUNNING, B).generators == ((-2,),)
    assert p_full(RUNNING, B).volume() == 4


def test_corner_points_running_example():
    expect = {
        (1, 2): ((0, 0, 0), (0, 0, 0)),
        (1, 3): ((1, 0, -2), (1, 1, 0)),
        (2, 3): ((0, 0, -3), (1, 0, 0)),
    }
    L = SandpileLattice(RUNNING)
    for B, _ in enumerate_bases(RUNNING):
        c = corner_point(RUNNING, B, [1, 1, 1])
        assert (c.point, c.zero_one) == expect[B.indices]
        assert L.equivalent(c.point, c.zero_one)


def test_corner_is_the_associated_vertex():
    rng = random.Random(24)
    for _ in range(40):
        D = random_srm(rng, rmax=3, nmax=5, lo=-3, hi=3)
        vec = random_shifting(D, rng)
        sv = validate_shifting(D, vec)
        key = ClassKey(D)
        for B, _ in enumerate_bases(D):
            c = corner_point(D, B, sv)
            neg, pos = corner_candidates(D, B, sv)
            P = orient(p_full(D, B), sv.full)
            assert P.contains(c.point)
            assert neg == c.point
            if pos != neg:
                assert not P.contains(pos)
            assert key(c.point) == key(c.zero_one)
            assert set(c.zero_one) <= {0, 1}


def test_locate_in_tile_running_example():
    B, x = locate_in_tile(RUNNING, [Fraction(7, 3), -5, Fraction(1, 2)])
    q = [p - sum(r[i] * xi for r, xi in zip(full_rows(RUNNING), x)) for i, p in
         enumerate([Fraction(7, 3), -5, Fraction(1, 2)])]
    assert B in tile_membership(RUNNING, q)


def test_locate_in_tile_random_points():
    rng = random.Random(25)
    for D in (RUNNING, StandardRepMatrix(2, 4, ((1, -1), (2, 1))), StandardRepMatrix(1, 3, ((2, -3),))):
        F = full_rows(D)
        table = enumerate_bases(D)
        for _ in range(15):
            p = [Fraction(rng.randint(-200, 200), rng.randint(1, 9)) for _ in range(D.n)]
            B, x = locate_in_tile(D, p, table)
            q = [pi - sum(F[j][i] * x[j] for j in range(D.n)) for i, pi in enumerate(p)]
            G = [list(col) for col in zip(*p_full(D, B).generators)]
            assert all(0 <= c <= 1 for c in cramer(G, q))


def test_same_map_and_representatives():
    f = w_representatives(RUNNING, [1, 1, 1])
    # (1, 2, 5) sits in the same chambers as (1, 1, 1)
    g = w_representatives(RUNNING, [1, 2, 5])
    assert f.same_representatives(g) and f.same_map(g)
    h = w_representatives(RUNNING, [-1, 2, -2])
    assert not f.same_representatives(h)
    assert not f.same_map(h)
