import pytest
from click.testing import CliRunner
from permprod.config import config
from permprod.models import ClassSpec, Permutation
from permprod.solvers import SearchBudget


@pytest.fixture
def budget():
    return SearchBudget(max_degree=10, max_nodes=10**8, time_cap=600.0)


@pytest.fixture
def small_budget():
    return SearchBudget(max_degree=5, max_nodes=10**6, time_cap=60.0)


@pytest.fixture
def runner():
    yield CliRunner()
    config.configure_solver(0)


@pytest.fixture
def exceptional_pair():
    return (
        Permutation.parse("(1,2,3)(4,5,6)(7,8,9)@10"),
        Permutation.parse("(1,4,8,9,10)@10"),
    )


@pytest.fixture
def transpositions_s3():
    return ClassSpec.of([2], 3)
