"""The pre-built resources every command handler receives."""

from __future__ import annotations

from dataclasses import dataclass

from rashomon_rid.resources.data import DataResource
from rashomon_rid.resources.experiment import ExperimentResource
from rashomon_rid.resources.linear import LinearResource
from rashomon_rid.resources.rid import RidResource


@dataclass(frozen=True)
class ResourceState:
    data: DataResource
    rid: RidResource
    linear: LinearResource
    experiment: ExperimentResource
