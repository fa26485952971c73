import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.core.exceptions import ConvergenceError, DomainError, SingularityError, SupportError
from app.models.logkind import LogKind
from app.models.superstat import BoltzmannSpec, Family, MixingDensity
from app.services.efflog import eff_log
from app.services.quadrature import integrate, integrate_semi_infinite
from app.services.superstat import (
    boltzmann,
    entropic_form,
    inverse_length,
    laplace_check,
    laplace_forward,
    mixing_density,
    mixing_normalization,
)

SPECS = [
    BoltzmannSpec.standard(1.0),
    BoltzmannSpec.standard(2.5),
    BoltzmannSpec.plus(0.5),
    BoltzmannSpec.plus(0.1, beta0=2.0),
    BoltzmannSpec.minus(0.5),
    BoltzmannSpec.minus(1.0, beta0=0.5),
]


@pytest.mark.parametrize("spec,l,expected", [
    (BoltzmannSpec.plus(0.5), 0.0, 1.0),
    (BoltzmannSpec.plus(0.5), 2.0, 0.25),
    (BoltzmannSpec.minus(0.5), 1.0, 0.25),
    (BoltzmannSpec.standard(1.0), 1.0, math.exp(-1.0)),
])
def test_boltzmann_values(spec, l, expected):
    assert boltzmann(spec, l) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("spec", SPECS)
def test_boltzmann_decreases_from_one(spec):
    assert boltzmann(spec, 0.0) == 1.0
    end = min(spec.support_end, 50.0)
    ls = np.linspace(0.0, end, 200, endpoint=False)
    values = [boltzmann(spec, float(l)) for l in ls]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_minus_factor_support():
    spec = BoltzmannSpec.minus(0.5)
    assert spec.support_end == 2.0
    with pytest.raises(SupportError):
        boltzmann(spec, 2.0)
    with pytest.raises(DomainError):
        boltzmann(spec, -0.1)


def test_spec_validation():
    with pytest.raises(ValidationError):
        BoltzmannSpec.plus(0.0)
    with pytest.raises(ValidationError):
        BoltzmannSpec.minus(1.5)
    with pytest.raises(ValidationError):
        MixingDensity(family=Family.STANDARD, shape=0.5)


@pytest.mark.parametrize("shape,beta,expected", [
    (0.5, 1.0, 4.0 * math.exp(-2.0)),
    (1.0, 1.0, math.exp(-1.0)),
])
def test_mixing_density_values(shape, beta, expected):
    d = MixingDensity(family=Family.PLUS, shape=shape)
    assert mixing_density(d, beta) == pytest.approx(expected, rel=1e-13)


def test_mixing_density_domain():
    with pytest.raises(DomainError):
        mixing_density(MixingDensity(family=Family.PLUS, shape=0.5), 0.0)


@pytest.mark.parametrize("shape", [0.1, 0.5, 1.0])
@pytest.mark.parametrize("l", [0.0, 0.5, 1.0, 2.0, 5.0])
def test_plus_laplace_transform_reproduces_factor(shape, l):
    d = MixingDensity(family=Family.PLUS, shape=shape, beta0=1.0)
    assert laplace_forward(d, l) == pytest.approx(boltzmann(d.boltzmann_spec(), l), abs=1e-6)


def test_quadrature_values_and_failures():
    assert integrate(math.exp, 0.0, 1.0).value == pytest.approx(math.e - 1.0, rel=1e-12)
    assert integrate_semi_infinite(lambda x: math.exp(-x)).value == pytest.approx(1.0, rel=1e-10)
    with pytest.raises(ConvergenceError) as info:
        integrate(lambda x: math.sin(50.0 * x), 0.0, 10.0, max_panels=1)
    assert math.isfinite(info.value.estimate)
    with pytest.raises(ValueError):
        integrate(math.exp, 1.0, 1.0)


@pytest.mark.parametrize("shape,beta0", [(0.1, 1.0), (0.5, 3.0), (1.0, 0.2)])
def test_plus_density_normalizes(shape, beta0):
    d = MixingDensity(family=Family.PLUS, shape=shape, beta0=beta0)
    assert mixing_normalization(d) == pytest.approx(1.0, abs=1e-8)


def test_laplace_rel_tol_range():
    d = MixingDensity(family=Family.PLUS, shape=0.5)
    with pytest.raises(DomainError):
        laplace_forward(d, 1.0, rel_tol=1e-2)


def test_plus_laplace_check_converges():
    check = laplace_check(MixingDensity(family=Family.PLUS, shape=0.5), 2.0)
    assert check.converged
    assert check.closed_form == pytest.approx(0.25, rel=1e-14)
    assert abs(check.residual) <= 1e-6


def test_minus_laplace_check_is_recorded_not_raised(recorded_values):
    recorded = recorded_values["minus_laplace_check"]
    d = MixingDensity(family=Family.MINUS, shape=recorded["shape"], beta0=recorded["beta0"])
    check = laplace_check(d, recorded["length"])
    assert check.family is Family.MINUS
    assert check.closed_form == pytest.approx(recorded["closed_form"], rel=1e-14)
    # the minus density is not integrable at beta -> 0
    assert check.converged is recorded["converged"]
    assert check.residual is recorded["residual"]


def test_minus_laplace_check_beyond_support_has_no_closed_form():
    check = laplace_check(MixingDensity(family=Family.MINUS, shape=0.5), 3.0)
    assert check.closed_form is None
    assert check.residual is None


@pytest.mark.parametrize("spec,y,expected", [
    (BoltzmannSpec.standard(1.0), 1.0, 0.0),
    (BoltzmannSpec.plus(0.5), 0.25, 2.0),
    (BoltzmannSpec.minus(0.5), 0.25, 1.0),
])
def test_inverse_length_values(spec, y, expected):
    assert inverse_length(spec, y) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("spec", SPECS)
def test_inverse_length_round_trip(spec):
    for y in np.geomspace(1e-6, 1.0, 60):
        y = float(y)
        assert boltzmann(spec, inverse_length(spec, y)) == pytest.approx(y, abs=1e-10)


def test_inverse_length_domain():
    with pytest.raises(DomainError):
        inverse_length(BoltzmannSpec.plus(0.5), 0.0)
    with pytest.raises(DomainError):
        inverse_length(BoltzmannSpec.plus(0.5), 1.2)


def test_self_identified_lengths_are_effective_logarithms():
    for y in np.linspace(0.01, 1.0, 100):
        y = float(y)
        assert inverse_length(BoltzmannSpec.plus(y), y) == pytest.approx(-eff_log(LogKind.MINUS, y), abs=1e-12)
        assert inverse_length(BoltzmannSpec.minus(y), y) == pytest.approx(-eff_log(LogKind.PLUS, y), abs=1e-12)
    assert inverse_length(BoltzmannSpec.plus(0.5), 0.5) == pytest.approx(0.828427124746, abs=1e-12)


def test_standard_entropic_form_is_shannon():
    spec = BoltzmannSpec.standard(1.0)
    form = entropic_form(spec, "infinite", 0.5)
    assert form.h == pytest.approx(-0.5 * math.log(0.5), abs=1e-8)
    assert form.alpha == pytest.approx(-1.0, abs=1e-8)
    assert entropic_form(spec, math.inf, 1.0).h == pytest.approx(0.0, abs=1e-8)


def test_standard_entropic_form_on_a_grid():
    spec = BoltzmannSpec.standard(1.0)
    for x in np.linspace(0.02, 1.0, 50):
        x = float(x)
        assert entropic_form(spec, "infinite", x).h == pytest.approx(-x * math.log(x), abs=1e-8)


def test_self_identified_entropic_form_matches_recorded_values(recorded_values):
    recorded = recorded_values["self_identified_plus_form"]
    form = entropic_form(BoltzmannSpec.plus(1.0), "infinite", recorded["x"], self_identified=True)
    assert form.h == pytest.approx(recorded["h"], abs=1e-8)
    assert form.alpha == pytest.approx(recorded["alpha"], abs=1e-8)
    reference = -recorded["x"] * eff_log(LogKind.MINUS, recorded["x"])
    assert reference == pytest.approx(recorded["reference"], abs=1e-12)
    assert form.h - reference == pytest.approx(recorded["reference_gap"], abs=1e-8)
    closing = entropic_form(BoltzmannSpec.plus(1.0), "infinite", 1.0, self_identified=True)
    assert closing.h == pytest.approx(0.0, abs=1e-8)


def test_self_identified_alpha_is_minus_the_mean_length():
    # integral of (y^-y - 1)/y over (0, 1) is sum_k k^-(k+1)
    expected = -math.fsum(k ** -(k + 1.0) for k in range(1, 30))
    form = entropic_form(BoltzmannSpec.plus(1.0), "infinite", 1.0, self_identified=True)
    assert form.alpha == pytest.approx(expected, abs=1e-8)


def test_finite_minimum_length():
    form = entropic_form(BoltzmannSpec.minus(0.5), 3.0, 1.0)
    assert form.h == pytest.approx(0.0, abs=1e-8)


@pytest.mark.parametrize("spec,ystar", [
    (BoltzmannSpec.standard(1.0), 5.0),
    (BoltzmannSpec.plus(0.5), 100.0),
    (BoltzmannSpec.minus(0.5), 1.5),
])
def test_vanishing_denominator_is_a_singularity(spec, ystar):
    with pytest.raises(SingularityError):
        entropic_form(spec, ystar, 0.5)


def test_entropic_form_argument_checks():
    with pytest.raises(DomainError):
        entropic_form(BoltzmannSpec.standard(1.0), "never", 0.5)
    with pytest.raises(DomainError):
        entropic_form(BoltzmannSpec.standard(1.0), -1.0, 0.5)
    with pytest.raises(DomainError):
        entropic_form(BoltzmannSpec.standard(1.0), "infinite", 0.5, self_identified=True)
