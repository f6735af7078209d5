import pytest

from welltime import ENVELOPE_NORMALIZED_A1, TABLE_CONSTANT, ThetaEvaluator, extrema_table, zero_table


@pytest.fixture(scope="session")
def table_evaluator():
    # digits for any argument the 60-zero table can touch (z_60 ~ 27.2 plus bracketing)
    return ThetaEvaluator.for_max_argument(28.5)


@pytest.fixture(scope="session")
def zeros60(table_evaluator):
    return zero_table(60, table_evaluator, constant=TABLE_CONSTANT)


@pytest.fixture(scope="session")
def extrema14():
    evaluator = ThetaEvaluator.for_max_argument(14.5, a1=ENVELOPE_NORMALIZED_A1)
    return extrema_table(14, evaluator)


@pytest.fixture(scope="session")
def extrema30():
    evaluator = ThetaEvaluator.for_max_argument(20.5, a1=ENVELOPE_NORMALIZED_A1)
    return extrema_table(30, evaluator)
