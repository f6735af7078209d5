import math
from decimal import Decimal, localcontext

import pytest

from welltime import (
    BracketError,
    PrecisionError,
    TABLE_CONSTANT,
    ThetaEvaluator,
    find_zero,
    predicted_zero,
    theta,
    zero_table,
)
from welltime import zeros as zeros_module

from reference_data import ZEROS, as_float, last_digit_unit


class TestPredictedZero:
    def test_boundary_zero(self):
        assert predicted_zero(1) == 0.0
        assert predicted_zero(1, constant=12.0) == 0.0

    def test_back_solved_constant_reproduces_reference(self):
        assert predicted_zero(2, TABLE_CONSTANT) == pytest.approx(3.335679, abs=1e-5)

    def test_printed_radical_constant(self):
        assert predicted_zero(2) == pytest.approx(3.285409, abs=1e-5)
        assert predicted_zero(2) == pytest.approx(math.sqrt(4 * math.pi - math.sqrt(math.pi)))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            predicted_zero(0)
        with pytest.raises(ValueError):
            predicted_zero(2, constant=-1.0)
        with pytest.raises(ValueError):
            predicted_zero(2, constant=4 * math.pi)  # radicand exactly zero
        with pytest.raises(ValueError):
            predicted_zero(2, constant=13.0)


class TestFindZero:
    def test_boundary(self):
        ev = ThetaEvaluator.for_max_argument(5.0)
        assert find_zero(1, ev) == 0.0

    def test_second_zero(self):
        ev = ThetaEvaluator.for_max_argument(5.0)
        z2 = find_zero(2, ev)
        assert abs(z2 - 3.3352) <= 1e-4  # all printed digits
        assert z2 == pytest.approx(3.3351987790805, abs=1e-9)  # pinned, ODE-validated

    def test_sixtieth_zero(self, zeros60):
        z60 = zeros60[59].position
        assert abs(z60 - 27.2001) <= 1e-4
        assert z60 == pytest.approx(27.200130465, abs=1e-7)

    def test_refinement_brackets_sign_change(self, table_evaluator, zeros60):
        tol = Decimal("1e-12")
        with localcontext() as ctx:
            ctx.prec = table_evaluator.precision_digits
            for n in (2, 7, 23, 60):
                z = Decimal(zeros60[n - 1].position)
                below = theta(z - tol, table_evaluator)
                above = theta(z + tol, table_evaluator)
                assert (below < 0) != (above < 0), f"no sign change around zero {n}"

    def test_invalid_arguments(self):
        ev = ThetaEvaluator.for_max_argument(5.0)
        with pytest.raises(ValueError):
            find_zero(0, ev)
        with pytest.raises(ValueError):
            find_zero(2, ev, tol=0.0)

    def test_insufficient_precision(self):
        with pytest.raises(PrecisionError):
            find_zero(2, ThetaEvaluator(precision_digits=10))

    def test_march_fallback_brackets_next_zero(self):
        ev = ThetaEvaluator.for_max_argument(6.0)
        lo, hi, f_lo, f_hi = zeros_module._march_bracket(0.0, ev)
        assert float(lo) < 3.3351988 < float(hi)
        assert (f_lo < 0) != (f_hi < 0)
        lo, hi, _, _ = zeros_module._march_bracket(3.3351987790805, ev)
        assert float(lo) < 4.8605114 < float(hi)

    def test_march_exhaustion_raises(self, monkeypatch):
        ev = ThetaEvaluator.for_max_argument(6.0)
        monkeypatch.setattr(zeros_module, "_MARCH_LIMIT", 1)
        with pytest.raises(BracketError):
            zeros_module._march_bracket(0.0, ev)


class TestZeroTable:
    def test_single_boundary_record(self):
        ev = ThetaEvaluator.for_max_argument(5.0)
        (record,) = zero_table(1, ev)
        assert record.n == 1
        assert record.position == 0.0
        assert record.spacing is None
        assert record.predicted == 0.0
        assert record.error == 0.0
        assert record.relative_error is None

    def test_third_row_against_reference(self):
        ev = ThetaEvaluator.for_max_argument(6.0)
        records = zero_table(3, ev, constant=TABLE_CONSTANT)
        assert abs(records[2].position - 4.86051) <= 2e-5
        assert records[2].relative_error == pytest.approx(-0.001450, abs=2e-6)

    def test_positions_strictly_increasing(self, zeros60):
        positions = [r.position for r in zeros60]
        assert positions[0] == 0.0
        assert all(a < b for a, b in zip(positions, positions[1:]))

    def test_positions_match_all_printed_digits(self, zeros60):
        for record, (n, pos, *_rest) in zip(zeros60, ZEROS):
            assert record.n == n
            assert abs(record.position - as_float(pos)) <= last_digit_unit(pos), f"row {n}"

    def test_spacing_column_matches_reference_and_decreases(self, zeros60):
        spacings = [r.spacing for r in zeros60[1:]]
        assert spacings[0] == pytest.approx(3.3352, abs=1e-4)
        assert spacings[1] == pytest.approx(1.52531, abs=1e-4)
        assert spacings[2] == pytest.approx(1.1536, abs=1e-4)
        # strictly decreasing from the first interior gap on
        assert all(a > b for a, b in zip(spacings, spacings[1:]))

    def test_prediction_column_consistency(self, zeros60):
        worst = max(
            abs(r.predicted - as_float(row[3]))
            for r, row in zip(zeros60, ZEROS)
            if r.n >= 2
        )
        assert worst <= 1e-5

    def test_squared_spacing_increases_toward_4pi(self, zeros60):
        z = [r.position for r in zeros60]
        d = [z[i + 1] ** 2 - z[i] ** 2 for i in range(1, 59)]  # d_2 .. d_59
        assert all(a < b for a, b in zip(d, d[1:]))
        assert all(x < 4 * math.pi for x in d)
        assert 0 < 4 * math.pi - d[-1] < 0.01

    def test_back_solved_constant_from_reference_predictions(self):
        # every reference prediction row back-solves to the same constant,
        # so any least-squares weighting lands on their common value
        cs = [4 * (n - 1) * math.pi - as_float(pred) ** 2 for (n, _p, _d, pred, _e, _r) in ZEROS[1:]]
        assert max(cs) - min(cs) < 5e-7
        mean = sum(cs) / len(cs)
        assert mean == pytest.approx(TABLE_CONSTANT, abs=1e-6)

    def test_invalid_count(self):
        ev = ThetaEvaluator.for_max_argument(5.0)
        with pytest.raises(ValueError):
            zero_table(0, ev)
