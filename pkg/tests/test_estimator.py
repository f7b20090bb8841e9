import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from glhwv.estimators import COMPLETE, INCONCLUSIVE, HighestWeightModule
from glhwv.invariants import fundamental_invariants
from glhwv.ring import RingContext
from glhwv.semiinvariants import u_family


def test_params_roundtrip():
    est = HighestWeightModule(n=4, weight=(2, 0, -1, -1), max_degree=7)
    params = est.get_params()
    assert params == {"n": 4, "weight": (2, 0, -1, -1), "characteristic": 0, "max_degree": 7, "n_jobs": None}
    other = clone(est)
    assert other.get_params() == params and not hasattr(other, "pieces_")
    est.set_params(n=3, weight=(1, 0, -1))
    assert est.n == 3


def test_fit_returns_self_and_sets_attributes():
    est = HighestWeightModule(n=3, weight=(1, 0, -1))
    assert est.fit() is est
    assert est.status_ == COMPLETE
    assert est.target_rank_ == est.quotient_rank_ == 2
    assert est.quotient_dims_ == {1: 1, 2: 1}
    assert est.per_degree_dims_[2] == {"module": 2, "relations": 1, "quotient": 1}


def test_unfitted_queries_raise():
    est = HighestWeightModule(n=2)
    with pytest.raises(NotFittedError):
        est.transform([])
    with pytest.raises(NotFittedError):
        est.quotient_dims_


def test_transform_shape_and_spans():
    R = RingContext(4)
    fam = [c.poly for c in u_family(R, 2)]
    est = HighestWeightModule(n=4, weight=(2, 0, -1, -1)).fit()
    T = est.transform(fam)
    assert T.shape == (3, 3) and T.dtype == object
    assert est.image_rank(fam) == 3
    assert est.spans(fam)
    assert not est.spans(fam[:2])


def test_relations_map_to_zero():
    R = RingContext(3)
    s1 = fundamental_invariants(R)[0]
    est = HighestWeightModule(n=3, weight=(1, 0, -1)).fit()
    row = est.transform([s1 * R.xi(3, 1)])[0]
    assert np.all(row == 0)


def test_non_semi_invariant_is_rejected():
    R = RingContext(3)
    est = HighestWeightModule(n=3, weight=(1, 0, -1)).fit()
    with pytest.raises(ValueError):
        est.transform([R.xi(1, 3)])


def test_degree_cap_is_inconclusive():
    est = HighestWeightModule(n=4, weight=(2, 0, -1, -1), max_degree=3).fit()
    assert est.status_ == INCONCLUSIVE
    with pytest.raises(RuntimeError):
        est.spans([])


def test_parallel_layers_give_same_dims():
    a = HighestWeightModule(n=4, weight=(1, 1, -1, -1)).fit()
    b = HighestWeightModule(n=4, weight=(1, 1, -1, -1), n_jobs=2).fit()
    assert a.quotient_dims_ == b.quotient_dims_ == {2: 1, 4: 1}
    assert a.per_degree_dims_ == {d: v for d, v in b.per_degree_dims_.items() if d in a.per_degree_dims_}


def test_prime_characteristic_fit():
    est = HighestWeightModule(n=3, weight=(1, 0, -1), characteristic=5).fit()
    assert est.quotient_rank_ == 2


@pytest.mark.parametrize(
    "params",
    [{"n": 1, "weight": (0,)}, {"n": 3, "weight": (1, -1)}, {"n": 2, "weight": (1, -1), "characteristic": 4}, {"n": 2, "max_degree": -1}],
)
def test_invalid_parameters(params):
    with pytest.raises(ValueError):
        HighestWeightModule(**params).fit()
