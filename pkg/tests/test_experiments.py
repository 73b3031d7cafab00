"""Batch pipeline: config plumbing, determinism, and on-disk formats."""

import json

import pytest

from tritrunc.experiments import (
    DEFAULT_SEED,
    EXPERIMENT_IDS,
    ExperimentConfig,
    config_from_dict,
    experiment_description,
    run_experiment,
)


def strip_wall(csv_text):
    """Drop the informational wall_ms column (the only nondeterministic one)."""
    return [line.rsplit(",", 1)[0] for line in csv_text.splitlines()]


# --- configuration ----------------------------------------------------------------


def test_registry_lists_all_nine_experiments():
    assert EXPERIMENT_IDS == tuple(f"E{i}" for i in range(1, 10))
    assert DEFAULT_SEED == 20260815
    assert experiment_description("E1").startswith("delta_schatten:")


def test_config_rejects_unknown_experiment():
    with pytest.raises(ValueError, match="unknown experiment id"):
        ExperimentConfig("E10")


@pytest.mark.parametrize(
    "kwargs, message",
    [
        (dict(p=0.0), "p must be positive"),
        (dict(kmin=5, kmax=4), "exceeds kmax"),
        (dict(samples=0), "samples"),
        (dict(sizes=(8, 0)), "sizes must be positive"),
        (dict(oversample=0), "oversample"),
        (dict(tolerance=0.0), "tolerance"),
    ],
)
def test_config_field_validation(kwargs, message):
    with pytest.raises(ValueError, match=message):
        ExperimentConfig("E1", **kwargs)


def test_config_from_dict_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown config keys: smaples"):
        config_from_dict({"experiment": "E1", "smaples": 3})
    with pytest.raises(ValueError, match="JSON object"):
        config_from_dict(["E1"])


def test_config_from_dict_requires_an_experiment():
    with pytest.raises(ValueError, match="must name an experiment"):
        config_from_dict({"p": 0.5})
    cfg = config_from_dict({"p": 0.5}, experiment="E6")
    assert cfg.experiment == "E6" and cfg.p == 0.5


def test_config_from_dict_rejects_a_conflicting_pin():
    with pytest.raises(ValueError, match="was requested"):
        config_from_dict({"experiment": "E1"}, experiment="E2")
    assert config_from_dict({"experiment": "E1"}, experiment="E1").experiment == "E1"


@pytest.mark.parametrize("exp", ["E2", "E3", "E7"])
def test_exact_dyadic_experiments_reject_sizes(exp):
    with pytest.raises(ValueError, match="kmin/kmax"):
        run_experiment(ExperimentConfig(exp, sizes=(5,)))


def test_sizes_override_the_dyadic_grid():
    result = run_experiment(ExperimentConfig("E1", p=0.5, sizes=(5, 12, 33)))
    assert [(r.k, r.n) for r in result.records] == [(2, 5), (3, 12), (5, 33)]


# --- determinism ------------------------------------------------------------------


def test_runs_are_reproducible_modulo_wall_time(tmp_path):
    paths = []
    for name in ("one.csv", "two.csv"):
        out = tmp_path / name
        cfg = ExperimentConfig("E4", kmin=4, kmax=6, samples=3, out=str(out))
        run_experiment(cfg)
        paths.append(out)
    a, b = (strip_wall(path.read_text(encoding="utf-8")) for path in paths)
    assert a == b
    assert len(a) == 1 + 3 * 3  # header + one record per (size, sample)


def test_the_seed_changes_the_data():
    vals = []
    for seed in (1, 2):
        cfg = ExperimentConfig("E3", kmin=2, kmax=4, samples=2, seed=seed)
        result = run_experiment(cfg)
        vals.append(tuple(r.value for r in result.records))
    assert vals[0] != vals[1]


def test_fits_need_at_least_three_grid_points():
    with pytest.raises(ValueError, match="at least 3"):
        run_experiment(ExperimentConfig("E4", kmin=5, kmax=5, samples=2))


# --- on-disk formats ---------------------------------------------------------------


def test_csv_and_fit_formats(tmp_path):
    out = tmp_path / "e6.csv"
    cfg = ExperimentConfig("E6", kmin=3, kmax=5, out=str(out))
    result = run_experiment(cfg)

    raw = out.read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n")
    lines = raw.decode("utf-8").splitlines()
    assert lines[0] == "experiment,p,k,n,sample,quantity,value,wall_ms"
    assert len(lines) == 1 + len(result.records)
    for line, record in zip(lines[1:], result.records):
        fields = line.split(",")
        assert fields[0] == "E6"
        assert float(fields[6]) == record.value  # 17 significant digits round-trip
        assert fields[6] == f"{record.value:.17g}"

    fits = json.loads((tmp_path / "e6.fits.json").read_text(encoding="utf-8"))
    assert [list(f.keys()) for f in fits] == [
        ["experiment", "p", "target", "slope", "intercept", "max_residual", "pass"]
    ]
    assert fits[0]["experiment"] == "E6"
    assert fits[0]["pass"] == result.fits[0].fit.passed


def test_output_location_is_validated_before_compute(tmp_path):
    cfg = ExperimentConfig("E1", out=str(tmp_path / "missing" / "x.csv"))
    with pytest.raises(ValueError, match="does not exist"):
        run_experiment(cfg)


def test_records_are_sorted_by_the_published_key():
    result = run_experiment(ExperimentConfig("E8", kmin=4, kmax=6, samples=2))
    keys = [(r.experiment, r.p, r.k, r.n, r.quantity, r.sample) for r in result.records]
    assert keys == sorted(keys)


# --- verdicts ----------------------------------------------------------------------


def test_e1_recovers_the_registered_growth_rate():
    result = run_experiment(ExperimentConfig("E1", p=0.5, kmin=4, kmax=8))
    (fit,) = result.fits
    assert fit.fit.target == 2.0
    assert 1.9 <= fit.fit.slope <= 2.1
    assert result.verdict


def test_tolerance_override_can_flip_the_verdict():
    cfg = ExperimentConfig("E1", p=0.5, kmin=4, kmax=8, tolerance=1e-6)
    result = run_experiment(cfg)
    assert not result.fits[0].fit.passed
    assert not result.verdict


def test_e7_small_run_mechanics():
    result = run_experiment(ExperimentConfig("E7", kmin=3, kmax=5))
    quantities = {r.quantity for r in result.records}
    assert quantities == {"besov_total", "top_level_term"}
    (check,) = result.checks
    assert check.name == "top_level_term_at_least_2k"
    assert check.ok
