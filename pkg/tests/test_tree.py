"""Tests for trees and the regularized objective."""

from __future__ import annotations

import itertools

import pytest

from rashomon_rid.models.tree import Leaf, Split, Tree, regularized_objective
from rashomon_rid.services.rashomon_service import RashomonService
from rashomon_rid.utils.bitset import Bitset
from tests.conftest import random_bin_dataset


def test_leaf_predicts_its_label() -> None:
    """Leaf(1) labels every row 1."""
    assert Leaf(1).predict((0, 1, 0)) == 1


def test_single_split() -> None:
    """A split goes right when its bit is set."""
    tree = Split(0, Leaf(0), Leaf(1))
    assert tree.predict((1,)) == 1
    assert tree.predict((0,)) == 0


def test_depth_two_truth_table() -> None:
    """A depth-2 xor tree matches the truth table on all four rows."""
    tree = Split(0, Split(1, Leaf(0), Leaf(1)), Split(1, Leaf(1), Leaf(0)))
    for a, b in itertools.product((0, 1), repeat=2):
        assert tree.predict((a, b)) == a ^ b


def test_structural_counts() -> None:
    """Leaf is (1, 0); a stump is (2, 1); a full depth-3 tree is (8, 3)."""
    assert (Leaf(0).leaves(), Leaf(0).depth()) == (1, 0)
    stump = Split(0, Leaf(0), Leaf(1))
    assert (stump.leaves(), stump.depth()) == (2, 1)
    full: Tree = Leaf(0)
    for feature in range(3):
        full = Split(feature, full, full)
    assert (full.leaves(), full.depth()) == (8, 3)
    assert full.features() == {0, 1, 2}


def test_mirrored_split_predicts_the_same() -> None:
    """Swapping children and negating the bit leaves predictions unchanged."""
    d = random_bin_dataset(4, 20, 2)
    negated = Bitset.full(d.n) ^ d.columns[0]
    columns = (*d.columns, negated)
    tree = Split(0, Leaf(0), Split(1, Leaf(1), Leaf(0)))
    mirrored = Split(2, Split(1, Leaf(1), Leaf(0)), Leaf(0))
    everyone = d.everyone
    assert tree.positives(columns, everyone) == mirrored.positives(columns, everyone)


def test_objective_of_all_wrong_leaf() -> None:
    """Leaf(0) on all-ones labels with no penalty scores 1."""
    d = random_bin_dataset(1, 10, 2)
    ones = type(d)(d.columns, d.everyone, d.n, d.feature_map)
    assert RashomonService.objective(Leaf(0), ones, 0.0) == 1.0


def test_objective_of_perfect_tree() -> None:
    """A perfect tree pays only lambda per leaf."""
    d = random_bin_dataset(2, 16, 2)
    perfect_labels = d.columns[0]
    labelled = type(d)(d.columns, perfect_labels, d.n, d.feature_map)
    tree = Split(0, Leaf(0), Leaf(1))
    assert RashomonService.objective(tree, labelled, 0.03) == regularized_objective(0, 2, 16, 0.03)


def test_objective_of_majority_leaf() -> None:
    """A majority leaf scores minority rate plus lambda."""
    d = random_bin_dataset(3, 30, 3)
    positives = Bitset.count(d.labels)
    label = int(positives * 2 >= d.n)
    minority = d.n - positives if label else positives
    assert RashomonService.objective(Leaf(label), d, 0.03) == pytest.approx(minority / 30 + 0.03)


def test_serialization_round_trip() -> None:
    """to_dict and from_dict preserve structure."""
    tree = Split(2, Leaf(1), Split(0, Leaf(0), Leaf(1)))
    assert Tree.from_dict(tree.to_dict()) == tree
    assert tree.canonical == (
        '{"feature":2,"left":{"leaf":1},'
        '"right":{"feature":0,"left":{"leaf":0},"right":{"leaf":1}}}'
    )


def test_from_dict_rejects_bad_leaf() -> None:
    """A leaf label outside {0, 1} is refused."""
    with pytest.raises(ValueError, match="leaf label"):
        Tree.from_dict({"leaf": 2})
