import pytest

from leftalg.quaternion import QAlgebra
from leftalg.sampling import (
    SamplerConfig,
    check_centralizer,
    check_degmin_additivity,
    check_inverse_law,
    check_N_normality,
    check_operators,
    check_thm23,
    sample_gadget,
    sample_series,
)


def test_samples_are_reproducible():
    cfg = SamplerConfig(seed=11)
    assert str(sample_series(cfg, "any", 5)) == str(sample_series(cfg, "any", 5))
    assert str(sample_series(cfg, "any", 5)) != str(sample_series(cfg, "any", 6))


@pytest.mark.parametrize("index", range(30))
def test_constraints_hold(index):
    cfg = SamplerConfig(seed=2)
    assert sample_series(cfg, "degmin0", index).degmin() == 0
    assert all(e % 2 == 0 for e in sample_series(cfg, "in_K", index).coeffs)
    friendly = sample_series(cfg, "image_friendly", index)
    assert all(v >= cfg.image_threshold for c in friendly.coeffs.values() for v in c.variables())
    a = sample_series(cfg, "any", index)
    assert a.known_upto == a.degmin() + cfg.precision


def test_config_validation():
    with pytest.raises(ValueError):
        SamplerConfig(exponent_range=(3, 1))
    with pytest.raises(ValueError):
        SamplerConfig(precision=2)
    with pytest.raises(ValueError):
        SamplerConfig(coefficient_pool="reals")
    with pytest.raises(ValueError):
        sample_series(SamplerConfig(), "odd")


def test_gadgets_are_admissible():
    for idx in range(20):
        a, b, alpha = sample_gadget(SamplerConfig(seed=4), idx)
        assert 1 <= a.degmin() <= 3 and len(a.coeffs) == 1
        assert alpha in (0, 1, 2)
        assert not (b * a - a * b).is_zero_on_window()


@pytest.mark.parametrize("seed", [1, 2])
def test_sampled_checks_pass(seed):
    cfg = SamplerConfig(seed=seed)
    for rep in (
        check_degmin_additivity(cfg, 100),
        check_inverse_law(cfg, 50),
        check_N_normality(cfg, 50),
        check_centralizer(cfg, 30),
        check_thm23(cfg, 10),
        check_operators(QAlgebra.division(-1, -1), cfg, 10),
    ):
        assert rep.ok, rep.to_dict()["failures"][:1]
        assert rep.skip_rate < 0.2


def test_failures_carry_seed_and_index():
    from leftalg.sampling import SampleReport

    rep = SampleReport("demo", 9)
    rep.record(False, "probe", 4, {"alpha": "x0"})
    d = rep.to_dict()
    assert not rep.ok
    assert d["failures"] == [{"check": "probe", "seed": 9, "index": 4, "inputs": {"alpha": "x0"}}]
