import cmath

import pytest

import sfab


def test_vertex_counts_a1():
    ctx = sfab.Context("A", 1, {0: "4", 1: "4"})
    assert [sfab.n_lambda(ctx, [k]) for k in range(4)] == ["1", "5", "20", "80"]


def test_spherical_at_rho_is_one():
    ctx = sfab.Context("A", 1, {0: "4", 1: "4"})
    # u = q^{1/2} is the trivial character
    assert abs(sfab.spherical(ctx, [2], [2.0]) - 1) < 1e-12
    assert abs(sfab.norm_at_one(ctx, [1]) - 0.8) < 1e-12


def test_structure_constants_sum_to_one():
    ctx = sfab.Context("C", 2, {0: "2", 1: "3", 2: "2"})
    row = sfab.structure_constants(ctx, [1, 0], [0, 1])
    assert abs(sum(row.values()) - 1) < 1e-12
    assert all(v >= 0 for v in row.values())
    assert (1, 1) in row


def test_orthogonality_exceptional():
    ctx = sfab.Context("BC", 1, {0: "4", 1: "2"})
    assert ctx.exceptional
    assert sfab.orthogonality_residual(ctx, 2, 129) < 1e-8


def test_cli_roundtrip():
    report, code = sfab.run("nlambda", "--type", "A", "--rank", "1", "--q", "0=4,1=4", "--lambda", "3")
    assert code == 0
    assert report["result"]["N"] == "80"


def test_bad_parameters_raise():
    with pytest.raises(sfab.ConfigError):
        sfab.Context("BC", 1, {0: "2", 1: "2"})
    with pytest.raises(sfab.ConfigError):
        sfab.run("nlambda", "--type", "A", "--rank", "1", "--lambda", "1")


def test_unit_circle_bound():
    ctx = sfab.Context("A", 1, {0: "3", 1: "3"})
    p1 = sfab.norm_at_one(ctx, [1])
    for k in range(64):
        u = cmath.exp(2j * cmath.pi * k / 64)
        assert abs(sfab.spherical(ctx, [1], [u])) <= p1 + 1e-12
