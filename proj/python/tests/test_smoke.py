import pytest

import sginv


def test_theta_yamada(fixture_path):
    d = sginv.load(fixture_path("theta_trivial"))
    assert d.vertex_count == 2
    assert sginv.yamada(d) == {-2: -1, -1: -1, 0: -2, 1: -1, 2: -1}


def test_knot_invariants(fixture_path):
    trefoil = sginv.load(fixture_path("trefoil"))
    assert sginv.alexander(trefoil) == {0: 1, 1: -1, 2: 1}
    assert sginv.alexander(trefoil, {"e1": 1}) == {0: 1, 1: -1, 2: 1}
    assert sginv.determinant(sginv.load(fixture_path("figure_eight"))) == 5
    assert sginv.colorings(trefoil, dihedral=3) == 9
    assert sginv.is_p_colorable(trefoil, 3)
    generators, relators = sginv.wirtinger(trefoil)
    assert generators == 3 and len(relators) == 3


def test_mirror_inverts_yamada(fixture_path):
    d = sginv.load(fixture_path("theta_trefoil"))
    raw = sginv.yamada(d)
    assert sginv.yamada(sginv.mirror(d)) == {-e: c for e, c in raw.items()}


def test_move_one_scales_yamada(fixture_path):
    d = sginv.load(fixture_path("trefoil"))
    raw = sginv.yamada(d)
    kinked = sginv.apply_r1(d, d.segments[0], 1)
    assert sginv.yamada(kinked) == {e + 2: c for e, c in raw.items()}
    assert sginv.yamada(kinked, normalized=True) == sginv.yamada(d, normalized=True)


def test_constituents(fixture_path):
    theta = sginv.load(fixture_path("theta_trivial"))
    assert sginv.constituent_count(theta) == 9
    members = sginv.constituents(theta)
    assert len(members) == 9
    assert sum(1 for _, link in members if link.free_loops == 1) == 3
    assert sginv.constituent_fingerprint(theta, "determinant") == ["1", "1", "1"]
    assert sginv.conway_gordon_sum(theta) == 0


def test_errors(fixture_path):
    with pytest.raises(ValueError):
        sginv.parse("{")
    with open(fixture_path("broken")) as f:
        assert sginv.validate(f.read())
    with pytest.raises(ValueError):
        sginv.is_p_colorable(sginv.load(fixture_path("trefoil")), 4)
    with pytest.raises(ValueError):
        sginv.colorings(sginv.load(fixture_path("trefoil")))
    assert sginv.quandle_violations([[0, 0], [0, 1]])
