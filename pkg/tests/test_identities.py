"""Tests for the identity builders and the catalogue."""

from __future__ import annotations

import pickle

import pytest

from mocktheta.algebra.cyclotomic import ONE, SQRT3, zeta_pow
from mocktheta.algebra.series import Monomial
from mocktheta.errors import GenericityError
from mocktheta.identities import entries, toolbox, transforms
from mocktheta.identities.catalogue import (
    SELECTORS,
    IdentityCheck,
    build_catalogue,
    entry_checks,
    select,
)

ZETA = Monomial(zeta_pow(1))


@pytest.mark.parametrize("builder", [toolbox.quasi_period, toolbox.reflection, toolbox.square, toolbox.duplication])
def test_toolbox_at_q_power_argument(builder):
    lhs, rhs = builder(30, Monomial(zeta_pow(1), 1))
    assert lhs == rhs


@pytest.mark.parametrize("name", sorted(toolbox.PRODUCT_FORMS))
def test_product_forms(name):
    lhs, rhs = toolbox.product_form(30, name)
    assert lhs == rhs


def test_three_term_proof_instances():
    lhs, rhs = transforms.three_term(30, "plus", Monomial(-ONE), dilation=2)
    assert lhs == rhs
    lhs, rhs = transforms.three_term(30, "minus", Monomial(ONE, 4), dilation=2)
    assert lhs.truncate(26) == rhs.truncate(26)


def test_three_term_unknown_kind():
    with pytest.raises(ValueError):
        transforms.three_term(20, "sideways", ZETA)


def test_entry_parameters_satisfy_constraints():
    for k in (1, 2, 5):
        t = zeta_pow(k)
        a, b = entries.entry1_parameters(t)
        assert a * a + b * b == 4
        a, b = entries.entry2_parameters(t)
        assert a * a + a * b + b * b == 3
    a, b = entries.entry1_parameters(zeta_pow(4))
    assert (a, b) == (ONE, SQRT3)


def test_entry1_reduced_low_order():
    lhs, rhs = entries.entry1_reduced(12, ZETA)
    assert lhs == rhs


def test_entry2_reduced_low_order():
    lhs, rhs = entries.entry2_reduced(12, ZETA)
    assert lhs == rhs


def test_entry3_low_order():
    lhs, rhs = entries.entry3_original(15)
    assert lhs == rhs
    assert lhs.coeff(0) == 2 * SQRT3 / 3


def test_entry4_core_low_order():
    lhs, rhs = entries.entry4_core(25)
    assert lhs == rhs


@pytest.mark.parametrize("t", [Monomial(ONE), Monomial(-ONE), Monomial(zeta_pow(6))])
def test_entry1_degenerate(t):
    with pytest.raises(GenericityError):
        entries.entry1_reduced(12, t)


def test_entry2_degenerate_and_q_power():
    with pytest.raises(GenericityError):
        entries.entry2_reduced(12, Monomial(zeta_pow(8)))
    with pytest.raises(GenericityError):
        entries.entry2_reduced(12, Monomial(zeta_pow(1), 1))


def test_catalogue_ids_unique_and_sorted():
    checks = build_catalogue()
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids))
    assert ids == sorted(ids)
    assert all(c.order >= 10 for c in checks)


def test_catalogue_coverage():
    checks = build_catalogue()
    assert sum(c.id.startswith("theta.triple_product") for c in checks) == 20
    assert {c.suite for c in checks} == {"prelim", "props", "entries"}
    assert any(c.expect_error for c in checks)


@pytest.mark.parametrize("selector", SELECTORS)
def test_select(selector):
    checks = select(selector)
    assert checks
    if selector.startswith("entry"):
        assert all(c.group == selector or selector == "entries" for c in checks)


def test_select_unknown():
    with pytest.raises(ValueError):
        select("bogus")


def test_sample_override():
    checks = select("entry1", {"entry1": [Monomial(zeta_pow(7))]})
    generic = [c for c in checks if not c.expect_error]
    assert len(generic) == len(entry_checks("entry1", [ZETA]))


def test_checks_pickle():
    for check in select("all"):
        assert pickle.loads(pickle.dumps(check)).id == check.id


def test_identity_check_validation():
    with pytest.raises(ValueError):
        IdentityCheck("x", "prelim", "theta", 5, toolbox.duplication)
    with pytest.raises(ValueError):
        IdentityCheck("x", "nowhere", "theta", 20, toolbox.duplication)
