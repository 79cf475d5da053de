import os
import pathlib

import pytest

import mvspace as mv

Q = mv.Field.rational()
DATA = pathlib.Path(os.environ.get("MVS_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def vec(*xs, field=Q):
    return mv.Vector(field, list(xs))


def span(*gens, ambient=2, field=Q):
    return mv.Subspace.span(field, ambient, list(gens))


def line_plane():
    return mv.MVSpace(Q, 2, 4, [(4, mv.Subspace.zero(Q, 2)), (2, span(vec(0, 1))), (1, mv.Subspace.full(Q, 2))])


def test_counts_on_the_line_plane():
    v = line_plane()
    assert v.count(vec(0, 0)) == 4
    assert v.count(vec(0, -3)) == 2
    assert v.count(vec("1/2", 7)) == 1
    assert v.nonzero_count_range() == [2, 1]


def test_dependent_pair_has_a_witness():
    v = line_plane()
    xs = [vec(1, 0), vec(-1, 1)]
    r = mv.is_multi_linearly_independent(v, xs)
    assert not r
    assert r.min_count == 1 and r.witness_count == 2
    assert all(c != "0" for c in r.witness)
    assert not mv.is_mbasis(v, xs)


def test_found_basis_is_an_mbasis():
    v = line_plane()
    b = mv.find_mbasis(v)
    assert len(b) == 2
    assert mv.is_mbasis(v, b)
    assert mv.is_hereditarily_multi_independent(v, b)
    assert mv.basis_count_sum(v, b) == mv.mdim(v) == 3
    assert mv.basis_index(v, b) == mv.multi_index(v) == [(2, 1), (1, 1)]


def test_space_file_round_trip():
    spaces = mv.parse_space_file((DATA / "dominant_pair.mvs").read_text())
    assert list(spaces) == ["V", "W"]
    v, w = spaces["V"], spaces["W"]
    assert mv.theta_dominance(v, w)
    assert (mv.mdim(v), mv.mdim(w)) == (4, 3)
    assert mv.mdim(mv.intersect(v, w)) == 2
    assert mv.mdim(mv.sum(v, w)) == 5
    assert mv.modular_dimension_check(v, w) == (5, 5)
    text = mv.serialize_space("V", v)
    header = "field Q\nambient 2\nomega 6\n\n"
    assert mv.parse_space_file(header + text)["V"] == v


def test_common_basis():
    spaces = mv.parse_space_file((DATA / "dominant_pair.mvs").read_text())
    v, w = spaces["V"], spaces["W"]
    b = mv.common_mbasis(v, w)
    for s in (v, w, mv.intersect(v, w), mv.sum(v, w)):
        assert mv.is_mbasis(s, b)


def test_rank_nullity_on_a_projection():
    v = line_plane()
    f = mv.LinearMap(Q, 2, [[1, 0]])
    lhs, rhs = mv.rank_nullity_check(f, v)
    assert lhs == rhs == mv.mdim(v)
    assert mv.kernel_mdim(f, v) + mv.image_mdim(f, v) == mv.mdim(v)
    assert mv.map_image(f, v).count(mv.Vector(Q, [0])) == 4


def test_prime_field_scale_and_sum():
    gf3 = mv.Field.prime(3)
    spaces = mv.parse_space_file((DATA / "gf3_pair.mvs").read_text())
    a, b = spaces["A"], spaces["B"]
    assert a.field == gf3
    assert a.count(vec(2, 1, field=gf3)) == 3
    assert mv.scale(2, a) == a
    assert mv.scale(0, a).count(vec(0, 0, field=gf3)) == 5
    assert mv.sum(a, b).count(vec(0, 1, field=gf3)) == 4


def test_errors_are_typed():
    with pytest.raises(mv.PreconditionError):
        mv.Field.prime(4)
    with pytest.raises(mv.InvariantViolation):
        mv.MVSpace(Q, 2, 3, [(5, mv.Subspace.zero(Q, 2))])
    with pytest.raises(mv.ParseError):
        mv.parse_space_file("field Q\nambient two\n")
    with pytest.raises(mv.Error):
        line_plane().count(mv.Vector(mv.Field.prime(2), [1, 0]))
