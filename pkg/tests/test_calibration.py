import json

import pytest

from spinunip.partitions import BiPartition, partitions_of
from spinunip.weylrep import calibration
from spinunip.weylrep.calibration import (
    CALIBRATION_VERSION,
    CalibrationError,
    calibrate_eta,
    equal_shape_multiplicities,
    load_calibration,
    structured_candidates,
    write_calibration,
)
from spinunip.weylrep.characters import decompose
from spinunip.weylrep.induction import induce
from spinunip.weylrep.subgroups import EtaChoice, SubgroupFactor

WINNER = EtaChoice("swap", -1, 1, "one")


@pytest.fixture(scope="module")
def calibrated():
    return calibrate_eta()


def test_candidate_space():
    cands = structured_candidates()
    assert len(cands) == len(set(cands)) == 8
    assert {c.embedding for c in cands} == {"swap", "flip"}


def test_unique_winner(calibrated):
    eta, reports = calibrated
    assert eta == WINNER
    assert eta.name == "swap[s-,-s+,-1-]xone"
    assert [r.eta for r in reports if r.passes] == [WINNER]


def test_first_step_filters(calibrated):
    _, reports = calibrated
    for r in reports:
        if not r.passes_t1:
            assert r.t1_decomposition != {str(BiPartition((1,), (1,))): 1}
    # the surviving first-step candidates are told apart only at t = 2
    early = [r for r in reports if r.passes_t1]
    assert len(early) > 1
    assert all(r.equal_shape_ok[1] for r in early)
    assert [r.eta for r in early if r.equal_shape_ok[2]] == [WINNER]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_equal_shapes_occur_once(t):
    mults = equal_shape_multiplicities(WINNER, t)
    assert set(mults) == set(partitions_of(t))
    assert all(m == 1 for m in mults.values())


def test_base_case_is_the_two_dimensional_irreducible():
    assert decompose(induce([SubgroupFactor.H(1, WINNER)], 2)) == {BiPartition((1,), (1,)): 1}


def test_file_round_trip(tmp_path):
    path = tmp_path / "cal.json"
    payload = write_calibration(path, WINNER)
    assert payload["version"] == CALIBRATION_VERSION
    assert json.loads(path.read_text())["eta_name"] == WINNER.name
    assert load_calibration(path) == WINNER


def test_rejects_other_versions(tmp_path):
    path = tmp_path / "cal.json"
    write_calibration(path, WINNER)
    data = json.loads(path.read_text())
    data["version"] = CALIBRATION_VERSION + 1
    path.write_text(json.dumps(data))
    with pytest.raises(CalibrationError):
        load_calibration(path)


def test_environment_variable(tmp_path, monkeypatch):
    path = tmp_path / "cal.json"
    other = EtaChoice("flip", 1, -1, "sgn")
    write_calibration(path, other)
    monkeypatch.setenv(calibration.ENV_VAR, str(path))
    assert calibration.current_eta() == other
    monkeypatch.delenv(calibration.ENV_VAR)
    assert calibration.current_eta() == WINNER
