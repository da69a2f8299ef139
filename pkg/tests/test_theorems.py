import math

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigeom import kernel as K
from trigeom.centers import configuration
from trigeom.errors import InvalidSampleCount
from trigeom.kernel import Point, Triangle
from trigeom.rng import SplitMix64
from trigeom.schema import SUITE_REPORT
from trigeom.theorems import (
    BROCARD,
    ORTHOCENTROIDAL,
    SCALENE,
    SUITE_TOL,
    InputSpec,
    Status,
    get_check,
    mutate_point,
    random_triangle,
    random_triangles,
    registry,
    run_check,
    run_suite,
)


# -- registry structure ----------------------------------------------------


def test_registry_size_and_unique_ids():
    ids = [c.id for c in registry()]
    assert len(ids) >= 31
    assert len(set(ids)) == len(ids)


def test_registry_entries_are_complete():
    for c in registry():
        assert c.description and c.source and c.statement
        assert c.citation.count('"') == 2 and len(c.statement) > 0
        assert isinstance(c.inputs, InputSpec)
        assert c.requires <= {BROCARD, ORTHOCENTROIDAL, SCALENE}
        assert c.figure, c.id


def test_get_check_unknown():
    with pytest.raises(KeyError):
        get_check("no_such_check")


# -- run_check examples ----------------------------------------------------


def test_isogonal_on_reference(T0):
    r = run_check(get_check("t_isogonal"), T0, SplitMix64(1))
    assert r.status is Status.PASS and r.residual < 1e-9


def test_brocard_circle_skipped_on_equilateral(EQ):
    r = run_check(get_check("t_brocard_circle"), EQ, SplitMix64(1))
    assert r.status is Status.SKIPPED_DEGENERATE


def test_problem1_on_reference_records_parameters(T0):
    r = run_check(get_check("p1_fixed"), T0, SplitMix64(5))
    assert r.status is Status.PASS
    assert r.sampled_parameters["t"][:3] == [0.2, 0.5, 0.8]
    assert len(r.sampled_parameters["t"]) == 5


def test_every_check_passes_on_reference(T0):
    cfg = configuration(T0)
    for c in registry():
        r = run_check(c, T0, SplitMix64(3), config=cfg)
        assert r.status is Status.PASS, (c.id, r.residual, r.message)


def test_equilateral_has_no_failures(EQ):
    for c in registry():
        r = run_check(c, EQ, SplitMix64(3))
        assert r.status in (Status.PASS, Status.SKIPPED_DEGENERATE), (c.id, r.status, r.message)


def test_run_check_is_deterministic(T0):
    c = get_check("lem_hagge")
    a = run_check(c, T0, SplitMix64(9))
    b = run_check(c, T0, SplitMix64(9))
    assert a.to_dict() == b.to_dict()


def test_obtuse_triangle_passes():
    t = Triangle.from_coords((0, 0, 6, 0, -1, 1.5))
    assert max(t.angles) > math.pi / 2
    cfg = configuration(t)
    for c in registry():
        r = run_check(c, t, SplitMix64(3), config=cfg)
        assert r.status is Status.PASS, (c.id, r.residual, r.message)


# -- random triangles and suite --------------------------------------------


def test_random_triangle_normalization():
    rng = SplitMix64(11)
    for _ in range(50):
        t = random_triangle(rng)
        c = K.circle_through(*t.vertices)
        assert c.center.norm() < 1e-12 and abs(c.r - 1) < 1e-12
        assert t.min_angle >= math.radians(15) - 1e-12


def test_suite_determinism_and_schema():
    a = run_suite(42, 10)
    b = run_suite(42, 10)
    assert a.to_json() == b.to_json()
    jsonschema.validate(a.to_dict(), SUITE_REPORT)
    assert a.passed


def test_suite_rejects_zero_samples():
    with pytest.raises(InvalidSampleCount):
        run_suite(42, 0)


def test_suite_reports_every_check():
    rep = run_suite(3, 2)
    assert [c.id for c in rep.checks] == [c.id for c in registry()]


# -- similarity invariance -------------------------------------------------


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 2 ** 32), st.floats(0.01, 100), st.floats(0, 2 * math.pi),
       st.floats(-50, 50), st.floats(-50, 50))
def test_similarity_invariance(seed, k, theta, dx, dy):
    t = random_triangles(seed, 1)[0]
    c, s = math.cos(theta), math.sin(theta)
    f = lambda p: Point(k * (c * p.x - s * p.y) + dx, k * (s * p.x + c * p.y) + dy)
    t2 = Triangle(*map(f, t.vertices))
    cfg1, cfg2 = configuration(t), configuration(t2)
    for ci, chk in enumerate(registry()):
        r1 = run_check(chk, t, SplitMix64(ci), config=cfg1)
        r2 = run_check(chk, t2, SplitMix64(ci), config=cfg2)
        assert r1.status == r2.status, chk.id
        if r1.status is Status.PASS:
            assert abs(r1.residual - r2.residual) < 1e-9, chk.id


# -- mutation --------------------------------------------------------------


def _statuses(t, name):
    cfg = configuration(t)
    delta = Point(0.6, 0.8) * (1e-3 * t.diameter)
    out = {}
    for c in registry():
        out[c.id] = run_check(c, t, SplitMix64(0), config=cfg, mutate=lambda g: mutate_point(g, name, delta)).status
    return out


def test_mutating_ax_flips_designated_checks(T0):
    st_ = _statuses(T0, "A_X")
    for cid in ("t_isogonal", "t_brocard_circle", "cor_agy_parallel"):
        assert st_[cid] is Status.FAIL, cid


@pytest.mark.parametrize("name", ["A_Y", "Z1", "L", "A_GY", "B_X", "H", "X39"])
def test_mutations_are_detected(T0, name):
    assert Status.FAIL in _statuses(T0, name).values()


def test_mutate_unknown_name(T0):
    with pytest.raises(KeyError):
        mutate_point(configuration(T0), "nonsense", Point(1, 0))
