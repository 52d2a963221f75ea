from fractions import Fraction
import math
import random

from hypothesis import given, settings, strategies as st
import pytest

from cusp_char.engine import (
    analyze,
    extract_characteristic,
    p1_step,
    pk_step,
    recover_coefficient,
    run_algorithm,
    validate,
)
from cusp_char.errors import (
    IncompleteSequence,
    InsufficientPrecision,
    MaxStepsExceeded,
    NonInjective,
    SmoothOrInvalid,
    UnknownOrder,
)
from cusp_char.puiseux import puiseux_characteristic, puiseux_expand
from cusp_char.sampling import random_coefficient, random_parametrization
from cusp_char.series import TruncSeries

from helpers import reparametrize, scale_t


def S(terms, prec=math.inf):
    return TruncSeries(terms, prec)


class TestValidate:
    def test_example(self, example_xy):
        par = validate(*example_xy)
        assert (par.p, par.q, par.swapped) == (12, 18, False)
        assert par.a0 == 1 and par.b0 == 1

    def test_swap(self):
        par = validate(S({3: 1}), S({2: 1}))
        assert (par.p, par.q, par.swapped) == (2, 3, True)

    def test_smooth(self):
        with pytest.raises(SmoothOrInvalid):
            validate(S({1: 1}), S({5: 1}))

    def test_not_at_origin(self):
        with pytest.raises(SmoothOrInvalid):
            validate(S({0: 1, 2: 1}), S({3: 1}))

    def test_zero_component(self):
        with pytest.raises(SmoothOrInvalid):
            validate(S({}), S({3: 1}))

    def test_unknown_order(self):
        with pytest.raises(UnknownOrder):
            validate(S({}, 5), S({3: 1}))


class TestSteps:
    def test_p1_example(self, example_xy):
        t = p1_step(validate(*example_xy))
        assert t.Pk == S({35: Fraction(-2025, 10976), 36: Fraction(-24975, 43904)})
        assert t.rk == 24 and t.k == 1

    def test_p1_identically_zero(self):
        with pytest.raises(NonInjective) as exc:
            p1_step(validate(S({4: 1}), S({6: 1})))
        assert exc.value.covering_degree == 2

    def test_p1_small(self):
        par = validate(S({4: 1}), S({6: 1, 7: 1}))
        t = p1_step(par)
        assert t.Pk == S({10: 1}) and t.rk == 7
        assert sorted(puiseux_expand(par, 7).coefficients) == [6, 7]

    def test_pk_example(self, example_xy):
        par = validate(*example_xy)
        t1 = p1_step(par)
        t2 = pk_step(par, t1, [18])
        assert t2.Pk.leading() == (59, Fraction(2500875, 76832))
        assert t2.rk == 26
        t3 = pk_step(par, t2, [18, 24])
        assert t3.Pk.order() == 82 and t3.rk == 27

    def test_pk_needs_p1(self, example_xy):
        par = validate(*example_xy)
        with pytest.raises(ValueError):
            pk_step(par, run_algorithm(par).traces[0], [])

    def test_p1_truncated_is_insufficient(self, example_xy):
        x, y = example_xy
        with pytest.raises(InsufficientPrecision) as exc:
            p1_step(validate(x, y.truncate(22)))
        assert exc.value.needed_bound == 23


class TestRunAlgorithm:
    def test_example(self, example_xy):
        res = run_algorithm(validate(*example_xy))
        assert res.r_sequence == (18, 24, 26, 27)
        assert res.char_seq.q_list == (18, 26, 27)
        assert str(res.char_seq) == "(12;18,26,27)"
        assert res.inessential == (24,)

    def test_quasi_homogeneous(self):
        res = analyze(S({2: 1}), S({3: 1}))
        assert str(res.char_seq) == "(2;3)"
        assert [t.k for t in res.traces] == [0]

    def test_non_injective(self):
        with pytest.raises(NonInjective) as exc:
            analyze(S({4: 1}), S({6: 1}))
        assert exc.value.covering_degree == 2

    def test_non_injective_after_steps(self):
        # (u^2, u^3 + u^4) composed with u = t^3: covering degree 3
        x = S({6: 1})
        y = S({9: 1, 12: 1})
        with pytest.raises(NonInjective) as exc:
            analyze(x, y)
        assert exc.value.covering_degree == 3
        assert [t.rk for t in exc.value.traces] == [9, 12]

    def test_max_steps(self, example_xy):
        with pytest.raises(MaxStepsExceeded) as exc:
            run_algorithm(validate(*example_xy), max_steps=2)
        assert [t.rk for t in exc.value.traces] == [18, 24, 26]

    def test_insufficient_precision_keeps_partial_trace(self, example_xy):
        x, y = example_xy
        with pytest.raises(InsufficientPrecision) as exc:
            analyze(x, y.truncate(25))
        assert [t.rk for t in exc.value.traces] == [18, 24]
        assert exc.value.needed_bound == 26
        assert exc.value.covering_hint == 6

    def test_truncated_x(self, example_xy):
        x, y = example_xy
        assert analyze(x.truncate(21), y).r_sequence == (18, 24, 26, 27)
        with pytest.raises(InsufficientPrecision) as exc:
            analyze(x.truncate(20), y)
        assert exc.value.needed_bound == 27

    def test_swapped_input(self, example_xy):
        x, y = example_xy
        res = analyze(y, x)
        assert res.par.swapped and str(res.char_seq) == "(12;18,26,27)"


class TestExtract:
    def test_example(self):
        cs = extract_characteristic(12, [18, 24, 26, 27])
        assert cs.q_list == (18, 26, 27)
        assert cs.gcd_chain == (12, 6, 2, 1)

    def test_small(self):
        cs = extract_characteristic(4, [6, 7])
        assert cs.q_list == (6, 7) and cs.gcd_chain == (4, 2, 1)

    def test_trivial(self):
        assert extract_characteristic(2, [3]).q_list == (3,)

    def test_incomplete(self):
        with pytest.raises(IncompleteSequence) as exc:
            extract_characteristic(12, [18, 24])
        assert exc.value.gcd == 6

    def test_not_increasing(self):
        with pytest.raises(ValueError):
            extract_characteristic(4, [7, 6])

    def test_multiple_of_p_first(self):
        cs = extract_characteristic(2, [4, 5])
        assert cs.q_list == (5,)


class TestRecover:
    def test_example(self, example_xy):
        par = validate(*example_xy)
        res = run_algorithm(par)
        t0, t1, t2, _ = res.traces
        assert recover_coefficient(par, t0, []) == 1
        assert recover_coefficient(par, t1, [18]) == Fraction(-675, 21952)
        assert recover_coefficient(par, t2, [18, 24]) == Fraction(833625, 4917248)
        oracle = puiseux_expand(par, 30).coefficients
        for t in res.traces:
            assert oracle[t.rk] == t.c_tilde

    def test_wrong_history_length(self, example_xy):
        par = validate(*example_xy)
        with pytest.raises(ValueError):
            recover_coefficient(par, p1_step(par), [])

    def test_first_step_formula_matches_general_identity(self):
        # a0 != 1 so the a0 power is actually exercised
        x = S({4: Fraction(3, 2), 5: 2})
        y = S({6: Fraction(-5, 3), 7: 1, 9: Fraction(1, 4)})
        par = validate(x, y)
        t1 = p1_step(par)
        c = puiseux_expand(par, t1.rk).coefficients[t1.rk]
        assert t1.leading == (t1.rk - par.q) * c * par.a0


# -- invariants over random parametrizations ------------------------------------

seeds = st.integers(0, 2**32 - 1)


def draw(seed):
    return random_parametrization(random.Random(seed))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_order_formula_and_monotone_r(seed):
    x, y, _ = draw(seed)
    res = analyze(x, y)
    p = res.par.p
    for prev, t in zip(res.traces, res.traces[1:]):
        assert t.Pk.order() - (2 * t.k - 1) * (p - 1) == t.rk
        assert t.rk > prev.rk


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_gcd_drops_exactly_at_q_list(seed):
    x, y, _ = draw(seed)
    res = analyze(x, y)
    d = res.par.p
    drops = []
    for r in res.r_sequence:
        if math.gcd(d, r) < d:
            drops.append(r)
            d = math.gcd(d, r)
    assert tuple(drops) == res.char_seq.q_list
    chain = res.char_seq.gcd_chain
    assert all(a > b for a, b in zip(chain, chain[1:])) and chain[-1] == 1


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_oracle_equivalence(seed):
    x, y, designed = draw(seed)
    res = analyze(x, y)
    data = puiseux_characteristic(res.par)
    last = res.r_sequence[-1]
    assert [s for s in data.exponents if s <= last] == list(res.r_sequence)
    assert data.char_seq == res.char_seq
    if designed is not None:
        assert (res.char_seq.p, res.char_seq.q_list) == designed


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(-5, 5).filter(bool), st.integers(1, 5))
def test_parameter_scaling(seed, num, den):
    lam = Fraction(num, den)
    x, y, _ = draw(seed)
    base = analyze(x, y)
    scaled = analyze(scale_t(x, lam), scale_t(y, lam))
    assert scaled.char_seq == base.char_seq
    assert scaled.r_sequence == base.r_sequence
    for a, b in zip(base.traces, scaled.traces):
        assert b.c_tilde == lam ** a.rk * a.c_tilde


@settings(max_examples=30, deadline=None)
@given(seeds, st.data())
def test_unit_reparametrization(seed, data):
    x, y, _ = draw(seed)
    base = analyze(x, y)
    rng = random.Random(seed)
    unit = S({0: 1, 1: random_coefficient(rng), 2: random_coefficient(rng)})
    bound = base.char_seq.q_list[-1]
    xr, yr = reparametrize(x, unit, bound), reparametrize(y, unit, bound)
    moved = analyze(xr, yr)
    assert moved.char_seq == base.char_seq


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 20))
def test_precision_monotonicity(seed, k):
    x, y, _ = draw(seed)
    full = analyze(x, y)
    q = full.par.q

    def run(bound):
        try:
            return analyze(x.truncate(bound), y.truncate(bound)).r_sequence, True
        except InsufficientPrecision as exc:
            return tuple(t.rk for t in exc.traces), False

    lo, lo_done = run(q + k)
    hi, hi_done = run(q + k + 3)
    assert hi[:len(lo)] == lo
    if lo_done:
        assert hi == lo == full.r_sequence
