"""Tests for result files."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from rashomon_rid.config import RunConfig
from rashomon_rid.dao.result_dao import ResultDAO
from rashomon_rid.models.dataset import Dataset
from rashomon_rid.models.distribution import BootstrapBlock, Interval, RIDResult
from rashomon_rid.models.report import CoverageReport
from rashomon_rid.models.tree import Tree
from rashomon_rid.services.dataset_service import DatasetService
from rashomon_rid.services.rashomon_service import RashomonService
from rashomon_rid.services.rid_service import RidService
from rashomon_rid.utils.files import Files


def _toy_result() -> RIDResult:
    blocks = [
        BootstrapBlock(0, np.asarray([[0.125, 0.0], [0.25, -0.0625]]), 0.25, 2, 0.02),
        BootstrapBlock(1, np.asarray([[0.0, 0.0]]), 0.5, 1, 0.03),
    ]
    return RIDResult.from_blocks(("a", "b"), blocks, RunConfig(bootstraps=2, seed=4))


def test_rid_round_trip(tmp_path: Path) -> None:
    """Saved results load back with identical atoms, blocks and config."""
    result = _toy_result()
    path = tmp_path / "rid.json"
    ResultDAO.save_rid(result, path)
    back = ResultDAO.load_rid(path)
    assert back.feature_names == result.feature_names
    assert back.config.seed == 4
    for left, right in zip(result.per_variable, back.per_variable):
        assert np.array_equal(left.values, right.values)
        assert np.array_equal(left.weights, right.weights)
    assert np.array_equal(back.blocks[0].values, result.blocks[0].values)
    assert back.joint_cdf([0.125, 0.0]) == result.joint_cdf([0.125, 0.0])


def test_rid_json_layout() -> None:
    """Top-level keys and the public ``lambda`` spelling."""
    data = ResultDAO.rid_to_dict(_toy_result())
    assert set(data) == {"config", "support", "variables", "bootstraps"}
    assert data["config"]["lambda"] == 0.01
    assert data["variables"][0]["atoms"] == [[0.0, 0.5], [0.125, 0.25], [0.25, 0.25]]
    assert data["bootstraps"][1] == {
        "index": 1, "rset_size": 1, "min_objective": 0.03, "weight": 0.5, "values": [[0.0, 0.0]],
    }


def test_load_rejects_malformed(tmp_path: Path) -> None:
    """Broken JSON and missing keys raise ValueError."""
    path = tmp_path / "rid.json"
    path.write_text("{")
    with pytest.raises(ValueError, match="malformed JSON"):
        ResultDAO.load_rid(path)
    path.write_text(json.dumps({"config": {}}))
    with pytest.raises(ValueError, match="malformed RID result"):
        ResultDAO.load_rid(path)


def test_summary_csv() -> None:
    """One row per variable with the BWR split into two columns."""
    lines = ResultDAO.summary_csv(_toy_result()).splitlines()
    assert lines[0] == "name,mean,q25,q50,q75,iqr,p_gt_zero,bwr_lo,bwr_hi"
    assert lines[1].startswith("a,")
    assert len(lines) == 3


def test_rset_json(xor_dataset: Dataset) -> None:
    """Trees decode back to the enumerated structures."""
    binary = DatasetService.binarize(xor_dataset)
    rset = RashomonService.enumerate_rset(binary, 0.05, 0.01, 2)
    data = ResultDAO.rset_to_dict(rset, xor_dataset.feature_names)
    assert [Tree.from_dict(entry["tree"]) for entry in data["trees"]] == list(rset.trees)
    assert data["features"][0] == "A == 0"
    assert len(data["dataset_fingerprint"]) == 16


def test_report_intervals_become_lists() -> None:
    """Interval fields serialize as [lo, hi] pairs."""
    report = CoverageReport("monk1", 3, 0.1, [Interval(0.0, 0.5)], [1.0])
    assert ResultDAO.report_to_dict(report)["intervals"] == [[0.0, 0.5]]


def test_svg_is_deterministic(tmp_path: Path, xor_dataset: Dataset) -> None:
    """Plots depend only on the distribution."""
    result = RidService.estimate_rid(
        xor_dataset, RunConfig(epsilon=0.05, depth=2, bootstraps=2, seed=1),
    )
    written = ResultDAO.save_svgs(result, tmp_path / "plots")
    assert [path.name for path in written] == ["A.svg", "B.svg", "C.svg"]
    text = written[0].read_text()
    assert text == ResultDAO.render_cdf_svg(result.per_variable[0], "A")
    assert "<polyline" in text
    assert "RID of A" in text
    assert "$" not in text


def test_atomic_write_leaves_no_temp_files(tmp_path: Path) -> None:
    """Only the target file remains after a write."""
    target = tmp_path / "nested" / "out.txt"
    Files.atomic_write(target, "hello\n")
    assert target.read_text() == "hello\n"
    assert [p.name for p in target.parent.iterdir()] == ["out.txt"]
