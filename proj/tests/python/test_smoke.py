import pytest

import rspin


def test_two_spin_report():
    ctx = rspin.Context(2, 9, eps=0)
    assert str(rspin.h2(ctx)) == "Z ⊕ Z/4"
    assert rspin.presentation(ctx) == "⟨lambda, mu | 4(lambda + 4*mu)⟩"
    assert rspin.free_coordinate(ctx, "lambda(1/2)") == -2
    assert rspin.canonical_coords(ctx, "2*lambda(1/2) + lambda") == (0, 6)
    assert rspin.rational_multiple_of_lambda(ctx, "mu") == (-1, 4)


def test_four_spin_torsion():
    ctx = rspin.Context(4, 9, eps=0)
    assert rspin.phi(ctx, "mu - 2*lambda(1/4)") == 21
    assert rspin.torsion_generator(ctx) == "kappa1(1/4) + 3*mu"
    assert rspin.h1_theta(ctx).invariant_factors == [8]


def test_big_integers_cross_the_boundary():
    r = 10**40 + 1
    assert rspin.u_r(r) == 12
    assert rspin.pi2_multiplier(r) == r * r
    s, u, v = rspin.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [s[i][i] for i in range(3)] == [2, 6, 12]


def test_groups():
    g = rspin.group_from_presentation(2, [[4, 16]])
    assert g.free_rank == 1 and g.invariant_factors == [4]
    assert g == rspin.group_from_presentation(2, [[-4, -16]])
    assert str(rspin.group_from_presentation(3, [])) == "Z^3" or g.free_rank == 1


def test_twist():
    ctx = rspin.Context(4, 9, eps=1)
    assert rspin.twist_shift(ctx, "mu", arf=1, beta=1) == 2
    assert rspin.twist_shift(ctx, "lambda + lambda(3/4)", beta=3) == 0


def test_documents_round_trip():
    doc = rspin.report(3, 10)
    assert doc["groups"]["h2"]["text"] == "Z ⊕ Z/3"
    import json

    assert rspin.render_text(json.dumps(doc)).startswith("r-Spin moduli space")
    assert rspin.table(2, 4)["rows"][2]["u_r"] == "6"
    assert "index 2" in rspin.render_text(json.dumps(rspin.theta(2, 9, eps=1)))


def test_errors():
    with pytest.raises(rspin.InvalidInput):
        rspin.Context(3, 10, eps=1)
    with pytest.raises(rspin.RangeError):
        rspin.report(3, 2)
    with pytest.raises(rspin.ParseError):
        rspin.phi(rspin.Context(3, 10), "lambda +")
    with pytest.raises(ValueError):
        rspin.phi(rspin.Context(3, 10), "mu")
