"""Model construction, validation, derivation rule, quotients and sub-models."""
import pytest

from sullivan import build_model
from sullivan.algebra import Element
from sullivan.errors import (
    DegreeMismatch,
    DifferentialNotSquareZero,
    NotClosedUnderDifferential,
    NotMinimal,
    UnknownGenerator,
)


def cp(n):
    return build_model([("x", 2), ("y", 2 * n + 1)],
                       {"y": lambda e: e["x"] ** (n + 1)}, name=f"cp{n}")


def test_validate_good_model(mixed_model):
    report = mixed_model.validate()
    assert report.pure and report.minimal
    assert report.chi_pi == -1
    assert report.n_even == 2 and report.n_odd == 3


def test_differential_is_derivation(mixed_model):
    m = mixed_model
    y1 = m.element("y1")
    y2 = m.element("y2")
    x1 = m.element("x1")
    lhs = m.d(y1 * y2)
    rhs = m.d(y1) * y2 - y1 * m.d(y2)  # y1 is odd, sign flips on the second term
    assert lhs == rhs
    assert m.d(x1 * y1) == x1 * m.d(y1)
    from sullivan import apply_differential
    assert apply_differential(m, y1 * y2) == lhs
    assert apply_differential(m, x1).is_zero()


def test_d_square_zero_everywhere(mixed_model):
    m = mixed_model
    for g in m.generators:
        assert m.d(m.d(m.element(g.name))).is_zero()


def test_degree_mismatch():
    bad = build_model([("x", 2), ("y", 5)], {"y": lambda e: e["x"] ** 2})
    with pytest.raises(DegreeMismatch):
        bad.validate()


def test_not_minimal():
    bad = build_model([("x", 2), ("y", 3), ("z", 3)],
                      {"z": lambda e: e["x"] ** 2 + 0 * e["y"],
                       "y": lambda e: e["x"] ** 2},
                      name="ok")
    bad.validate()  # fine: no linear terms
    linear = build_model([("x", 2), ("w", 5), ("z", 4)],
                         {"z": lambda e: e["w"]})
    with pytest.raises(NotMinimal):
        linear.validate()


def test_d_square_violation(d2_failure_model):
    with pytest.raises(DifferentialNotSquareZero) as exc:
        d2_failure_model.validate()
    assert exc.value.generator == "z"


def test_purity(nonpure_model, mixed_model):
    assert not nonpure_model.is_pure()
    assert mixed_model.is_pure()


def test_differential_length(mixed_model, tower_model, odd_spheres):
    assert mixed_model.differential_length().render() == "mixed{4,5}"
    assert tower_model.differential_length().render() == "constant(2)"
    assert odd_spheres.differential_length().render() == "zero"
    assert tower_model.differential_length().is_constant


def test_length_ignores_zero_images():
    m = build_model([("x", 2), ("y", 3), ("w", 5)],
                    {"y": lambda e: e["x"] ** 2})
    assert m.differential_length().render() == "constant(2)"


def test_chi_pi(mixed_model, odd_spheres):
    assert mixed_model.chi_pi() == -1
    assert odd_spheres.chi_pi() == -3
    assert cp(3).chi_pi() == 0


def test_formal_dimension():
    # cp^n has formal dimension 2n
    for n in (1, 2, 3, 4):
        assert cp(n).formal_dimension() == 2 * n


def test_formal_dimension_mixed(mixed_model):
    # (29 + 31 + 33) - (5 + 7) = 81
    assert mixed_model.formal_dimension() == 81


def test_quotient_model(tower_model):
    q = tower_model.quotient_model(["x1", "y1"])
    assert [g.name for g in q.generators] == ["x2", "y2", "y3"]
    assert q.d(q.element("y2")).is_zero()  # x1*x2 dies with x1
    assert q.d(q.element("y3")) == q.element("x2") ** 2
    q.validate()


def test_sub_model(tower_model):
    s = tower_model.sub_model(["x1", "y1"])
    assert [g.name for g in s.generators] == ["x1", "y1"]
    s.validate()
    with pytest.raises(NotClosedUnderDifferential):
        tower_model.sub_model(["x1", "y2"])  # dy2 = x1*x2 leaves the span


def test_unknown_generator(tower_model):
    with pytest.raises(UnknownGenerator):
        tower_model.generator("nope")


def test_basis_of_degree(mixed_model):
    b6 = mixed_model.basis_of_degree(6)
    assert [m.render() for m in b6] == ["x1"]
    b14 = mixed_model.basis_of_degree(14)
    # x1 x2 and x1 x2... degree 14 = 6+8 only
    assert len(b14) == 1
    assert mixed_model.basis_of_degree(1) == []
    b0 = mixed_model.basis_of_degree(0)
    assert len(b0) == 1 and b0[0].is_unit


def test_dim_v(mixed_model):
    assert mixed_model.dim_v() == 5


def test_element_lookup_returns_generator_element(mixed_model):
    e = mixed_model.element("x1")
    assert isinstance(e, Element)
    assert e.degree() == 6
