"""
Abstract base class for all verification suites.
Each suite turns one RunConfig into one Report.
"""
from abc import ABC, abstractmethod
from typing import Tuple
import logging

from chevlab.algebra.finring import FiniteRing, make_ring
from chevlab.algebra.rootsys import RootSystem, parse_root_system
from chevlab.runner.models import Command, Report, RunConfig

logger = logging.getLogger(__name__)


class BaseSuite(ABC):
    """Base class for all suites."""

    command: Command

    def __init__(self, name: str):
        self.name = name
        self.logger = logging.getLogger(f"suite.{name}")

    @abstractmethod
    def run(self, config: RunConfig) -> Report:
        """Run the suite. Errors propagate as ChevlabError."""
        ...

    def new_report(self, config: RunConfig) -> Report:
        return Report(command=self.command.value, inputs=config.inputs())

    def load(self, config: RunConfig) -> Tuple[RootSystem, FiniteRing]:
        return parse_root_system(config.phi), make_ring(config.ring)

    def status(self) -> dict:
        return {
            "name": self.name,
            "command": self.command.value,
            "description": (self.__doc__ or "").strip().splitlines()[0] if self.__doc__ else "",
        }
