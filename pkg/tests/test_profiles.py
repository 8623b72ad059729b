import numpy as np
import pytest

from grassmann_cosine.core.exceptions import DomainError, ProfileParseError, SpecMismatch
from grassmann_cosine.transform import InvariantFunction, PolynomialProfile, ProfileFactory, ProfileParser


@pytest.fixture
def parser():
    return ProfileParser()


@pytest.mark.parametrize("expression,c,expected", [
    ("c1*c2", [0.5, 0.4], 0.2),
    ("3/2*c1^2 - 1/2", [0.5, 0.0], -0.125),
    ("(c1 + c2)**2", [0.25, 0.5], 0.5625),
    ("-c2 + 2", [0.1, 0.3], 1.7),
    ("c1/4", [0.8, 0.0], 0.2),
    ("7", [0.1, 0.2], 7.0),
])
def test_parser_evaluates_in_cos2(parser, expression, c, expected):
    profile = parser.parse(expression, 2)
    assert isinstance(profile, PolynomialProfile)
    assert profile.in_cos2(np.array(c)) == pytest.approx(expected)


def test_parser_evaluates_on_angles(parser):
    profile = parser.parse("c1 + c2", 2)
    t = np.array([[np.pi / 3, np.pi / 6], [np.pi / 2, 0.0]])
    assert np.allclose(profile(t), [0.25 + 0.75, 1.0])


def test_constant_profile_broadcasts(parser):
    values = parser.parse("2", 3)(np.zeros((4, 3)))
    assert values.shape == (4,)
    assert np.all(values == 2.0)


@pytest.mark.parametrize("expression", [
    "",
    "c1 +",
    "c3",
    "x1",
    "c1^c2",
    "c1^-1",
    "c1^0.5",
    "1/c1",
    "c1/0",
    "sin(c1)",
    "c1 < c2",
    "'a'",
])
def test_parser_rejects(parser, expression):
    with pytest.raises(ProfileParseError):
        parser.parse(expression, 2)


def test_factory_builtins():
    factory = ProfileFactory()
    assert set(factory.get_available_profiles()) == {
        "one", "prod_cos2", "sum_cos2", "cos2_first", "cos2_last", "quartic",
    }
    assert factory.expression_for("prod_cos2", 3) == "c1*c2*c3"
    assert factory.expression_for("sum_cos2", 2) == "c1 + c2"
    assert factory.expression_for("cos2_last", 4) == "c4"
    c = np.array([0.5, 0.25])
    assert factory.create("quartic", 2).in_cos2(c) == pytest.approx(0.3125)
    assert factory.create("ONE", 2).name == "one"


def test_factory_falls_back_to_expressions_and_registers():
    factory = ProfileFactory()
    assert factory.create("c1 - c2", 2).in_cos2(np.array([0.5, 0.25])) == pytest.approx(0.25)
    factory.register_profile("double_first", lambda p: "2*c1")
    assert factory.create("double_first", 3).in_cos2(np.array([0.5, 0.0, 0.0])) == pytest.approx(1.0)
    with pytest.raises(ProfileParseError, match="Builtin profiles"):
        factory.create("nonsense", 2)
    with pytest.raises(ProfileParseError):
        factory.expression_for("nonsense", 2)


def test_pinned_profile(parser):
    profile = parser.parse("1 + c1 + 3*c2*c3", 3)
    pinned = profile.pinned(1)
    assert pinned.p == 2
    assert pinned.value_at([0.0, 0.0]) == pytest.approx(4.0)
    assert profile.pinned(2).value_at([0.0]) == pytest.approx(1.0)
    assert profile.pinned(0) is profile
    with pytest.raises(DomainError):
        profile.pinned(3)


def test_funk_value(parser):
    assert parser.parse("1 + c1 + c2", 2).funk_value() == pytest.approx(1.0)


def test_invariant_function_shape_check():
    f = InvariantFunction(2, lambda t: np.sum(t, axis=-1), name="sum_t")
    assert f.value_at([0.3, 0.2]) == pytest.approx(0.5)
    with pytest.raises(SpecMismatch):
        f(np.zeros(3))
    with pytest.raises(DomainError):
        InvariantFunction(0, lambda t: t)
