"""Tests for the optimal objective and Rashomon-set enumeration."""

from __future__ import annotations

import pickle

import pytest
from gmpy2 import mpz

from rashomon_rid.config import ConfigLoader
from rashomon_rid.models.dataset import BinDataset, Dataset
from rashomon_rid.models.dgp import DgpId, DgpSpec
from rashomon_rid.models.strategy import MrStrategy
from rashomon_rid.models.tree import Leaf, Split, Tree, is_redundant_split
from rashomon_rid.plugins.sub_mr import SubtractiveModelReliance
from rashomon_rid.services.dataset_service import DatasetService
from rashomon_rid.services.dgp_service import DgpService
from rashomon_rid.services.rashomon_service import RashomonService, RashomonSetTooLargeError
from rashomon_rid.utils.rng import SplitMix64
from tests.conftest import random_bin_dataset

EPSILONS = (0.05, 0.1, 0.2)
LAMBDAS = (0.0, 0.01, 0.05)


def _all_trees(d: BinDataset, support: mpz, depth: int) -> list[Tree]:
    """Every canonical tree: no empty child, no equal-leaf split, children in bit order."""
    trees: list[Tree] = [Leaf(0), Leaf(1)]
    if depth == 0:
        return trees
    for feature, column in enumerate(d.columns):
        right = support & column
        if right == 0 or right == support:
            continue
        lefts = _all_trees(d, support & ~column, depth - 1)
        rights = _all_trees(d, right, depth - 1)
        trees.extend(
            Split(feature, left, r)
            for left in lefts
            for r in rights
            if not is_redundant_split(left, r)
        )
    return trees


def _oracle(d: BinDataset, epsilon: float, lam: float, depth: int) -> set[str]:
    trees = _all_trees(d, d.everyone, depth)
    scores = [RashomonService.objective(t, d, lam) for t in trees]
    bound = RashomonService.membership_bound(min(scores), epsilon)
    return {t.canonical for t, score in zip(trees, scores) if score <= bound}


def _instance(seed: int) -> tuple[BinDataset, float, float, int]:
    """Random size, width, threshold, penalty and depth from one stream."""
    rng = SplitMix64(seed)
    n = 4 + rng.next_below(27)
    m = 1 + rng.next_below(8)
    epsilon = EPSILONS[rng.next_below(3)]
    lam = LAMBDAS[rng.next_below(3)]
    depth = rng.next_below(3)
    return random_bin_dataset(rng.next_u64(), n, m), epsilon, lam, depth


def _check_against_oracle(seed: int) -> None:
    d, epsilon, lam, depth = _instance(seed)
    rset = RashomonService.enumerate_rset(d, epsilon, lam, depth)
    found = [t.canonical for t in rset.trees]
    assert len(found) == len(set(found))
    assert set(found) == _oracle(d, epsilon, lam, depth)


@pytest.mark.parametrize("seed", range(20))
def test_enumeration_matches_brute_force(seed: int) -> None:
    """Enumerated trees equal the exhaustively filtered set."""
    _check_against_oracle(seed)


@pytest.mark.slow
def test_enumeration_matches_brute_force_200_instances() -> None:
    """Same oracle comparison over 200 random instances."""
    for seed in range(1000, 1200):
        _check_against_oracle(seed)


def test_fixed_instance_matches_brute_force() -> None:
    """n=20, four features, depth 2, epsilon 0.1, lambda 0.01."""
    d = random_bin_dataset(77, 20, 4)
    rset = RashomonService.enumerate_rset(d, 0.1, 0.01, 2)
    assert {t.canonical for t in rset.trees} == _oracle(d, 0.1, 0.01, 2)


def test_min_objective_equals_best_member() -> None:
    """The optimum is the smallest enumerated objective."""
    d = random_bin_dataset(5, 25, 5)
    rset = RashomonService.enumerate_rset(d, 0.05, 0.01, 2)
    assert rset.min_objective == pytest.approx(
        RashomonService.min_objective(d, 0.01, 2), abs=1e-12,
    )
    assert rset.objectives[0] == rset.min_objective


def test_members_are_sorted_and_within_bound() -> None:
    """Objectives ascend and none exceeds min + epsilon."""
    d = random_bin_dataset(6, 30, 6)
    rset = RashomonService.enumerate_rset(d, 0.1, 0.01, 2)
    objectives = list(rset.objectives)
    assert objectives == sorted(objectives)
    assert max(objectives) <= rset.min_objective + 0.1 + 1e-12
    for tree, objective in zip(rset.trees, rset.objectives):
        assert RashomonService.objective(tree, d, 0.01) == objective


def test_epsilon_is_monotone() -> None:
    """A larger epsilon keeps every member of the smaller set."""
    d = random_bin_dataset(8, 24, 5)
    small = {t.canonical for t in RashomonService.enumerate_rset(d, 0.05, 0.01, 2).trees}
    large = {t.canonical for t in RashomonService.enumerate_rset(d, 0.2, 0.01, 2).trees}
    assert small <= large


def test_depth_zero_is_leaves_only() -> None:
    """Depth 0 admits only leaves."""
    d = random_bin_dataset(9, 12, 3)
    rset = RashomonService.enumerate_rset(d, 1.0, 0.0, 0)
    assert all(isinstance(t, Leaf) for t in rset.trees)


def test_non_positive_epsilon_is_refused() -> None:
    """epsilon must be positive."""
    with pytest.raises(ValueError, match="epsilon"):
        RashomonService.enumerate_rset(random_bin_dataset(1, 8, 2), 0.0, 0.01, 2)


def test_overflow_raises_with_counts() -> None:
    """Exceeding max_models raises RashomonSetTooLargeError."""
    d = random_bin_dataset(10, 30, 8)
    with pytest.raises(RashomonSetTooLargeError) as info:
        RashomonService.enumerate_rset(d, 1.0, 0.0, 2, max_models=10)
    assert info.value.limit == 10
    assert info.value.count > 10


def test_overflow_error_pickles() -> None:
    """The error survives a process boundary with its fields."""
    error = RashomonSetTooLargeError(12, 10, bootstrap=3)
    back = pickle.loads(pickle.dumps(error))
    assert (back.count, back.limit, back.bootstrap) == (12, 10, 3)
    assert "bootstrap 3" in str(back)


def test_fingerprint_recorded() -> None:
    """The set carries the dataset digest and search parameters."""
    d = random_bin_dataset(11, 16, 3)
    rset = RashomonService.enumerate_rset(d, 0.1, 0.02, 1)
    assert rset.dataset_fingerprint == d.fingerprint
    assert (rset.epsilon, rset.lam, rset.depth_bound) == (0.1, 0.02, 1)
    assert sum(rset.leaf_histogram().values()) == len(rset)


def test_mcr_and_vic(copy_dataset: Dataset) -> None:
    """MCR spans the VIC values; the copied variable is always important."""
    binary = DatasetService.binarize(copy_dataset)
    rset = RashomonService.enumerate_rset(binary, 0.05, 0.01, 2)
    metric = SubtractiveModelReliance(MrStrategy.parse("e_divide"))
    vic = RashomonService.vic(rset, copy_dataset, metric, 0)
    interval = RashomonService.mcr(rset, copy_dataset, 0, metric, 0)
    assert interval.lo == min(vic[0])
    assert interval.hi == max(vic[0])
    assert len(vic[1]) == len(rset)
    assert all(value > 0 for value in vic[0])


def test_statistics() -> None:
    """Summary holds size, optimum and leaf histogram."""
    d = random_bin_dataset(12, 20, 3)
    rset = RashomonService.enumerate_rset(d, 0.1, 0.01, 2)
    stats = RashomonService.rset_statistics(rset)
    assert stats["size"] == len(rset)
    assert stats["min_objective"] == rset.min_objective
    assert sum(stats["leaves"].values()) == len(rset)


def _has_redundant_split(tree: Tree) -> bool:
    if isinstance(tree, Leaf):
        return False
    assert isinstance(tree, Split)
    return (
        is_redundant_split(tree.left, tree.right)
        or _has_redundant_split(tree.left)
        or _has_redundant_split(tree.right)
    )


def test_equal_leaf_splits_are_excluded() -> None:
    """No member splits into two leaves with the same label, even at lambda 0."""
    d = random_bin_dataset(13, 24, 4)
    for lam in (0.0, 0.01):
        rset = RashomonService.enumerate_rset(d, 0.2, lam, 2)
        assert not any(_has_redundant_split(t) for t in rset.trees)
        assert Split(0, Leaf(0), Leaf(0)).canonical not in {t.canonical for t in rset.trees}


def test_monk1_preset_bootstrap_at_depth_five() -> None:
    """One Monk 1 bootstrap with the preset threshold, penalty and depth enumerates in bounds."""
    cfg = ConfigLoader.load_config(preset="monk1")
    d = DgpService.generate(DgpSpec(DgpId.MONK1, 124, seed=0))
    sample = DatasetService.bootstrap_sample(d, DatasetService.split_rng(cfg.seed, 0))
    binary = DatasetService.binarize(sample, cfg.max_thresholds)
    rset = RashomonService.enumerate_rset(
        binary, cfg.epsilon, cfg.lambda_, cfg.depth, cfg.max_models,
    )
    assert cfg.depth == 5
    assert len(rset) >= 1
    assert max(rset.objectives) <= rset.min_objective + cfg.epsilon + 1e-12
    assert not any(_has_redundant_split(t) for t in rset.trees)
