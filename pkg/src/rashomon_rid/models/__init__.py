"""Domain models — plain dataclasses shared by every layer."""

from rashomon_rid.models.dataset import BinDataset as BinDataset
from rashomon_rid.models.dataset import Dataset as Dataset
from rashomon_rid.models.dataset import FeatureKind as FeatureKind
from rashomon_rid.models.dataset import FeatureMap as FeatureMap
from rashomon_rid.models.dataset import RuleKind as RuleKind
from rashomon_rid.models.dataset import SplitRule as SplitRule
from rashomon_rid.models.dgp import DgpId as DgpId
from rashomon_rid.models.dgp import DgpSpec as DgpSpec
from rashomon_rid.models.distribution import Interval as Interval
from rashomon_rid.models.distribution import RIDResult as RIDResult
from rashomon_rid.models.distribution import VIDistribution as VIDistribution
from rashomon_rid.models.rashomon import RashomonSet as RashomonSet
from rashomon_rid.models.strategy import MrStrategy as MrStrategy
from rashomon_rid.models.tree import Leaf as Leaf
from rashomon_rid.models.tree import Split as Split
from rashomon_rid.models.tree import Tree as Tree
