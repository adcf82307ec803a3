"""
Verification suites, one per command.
"""
from typing import Dict

from chevlab.runner.models import Command
from chevlab.suites.base import BaseSuite
from chevlab.suites.bigcell import BigCellSuite
from chevlab.suites.enumerate import EnumerateSuite
from chevlab.suites.filtration import FiltrationSuite
from chevlab.suites.k2 import K2Suite
from chevlab.suites.ring_info import RingInfoSuite
from chevlab.suites.verify import VerifySuite
from chevlab.suites.words import WordsSuite


def all_suites() -> Dict[Command, BaseSuite]:
    suites = [RingInfoSuite(), VerifySuite(), K2Suite(), BigCellSuite(), EnumerateSuite(), WordsSuite(),
              FiltrationSuite()]
    return {suite.command: suite for suite in suites}
