"""
Core data models for runs and reports.
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

from chevlab.config import settings


class Command(str, Enum):
    RING_INFO = "ring-info"
    VERIFY = "verify"
    K2 = "k2"
    BIGCELL = "bigcell"
    ENUMERATE = "enumerate"
    WORDS = "words"
    FILTRATION = "filtration"
    SUITE = "suite"


class SubgroupStrategy(str, Enum):
    UNIPOTENT = "unipotent"
    TRIVIAL = "trivial"


class RunConfig(BaseModel):
    """Everything one run depends on; identical configs give identical reports."""
    command: Command = Command.RING_INFO
    ring: str = "Z/5"
    phi: str = "A2"
    budget_cosets: int = Field(default_factory=lambda: settings.budget_cosets, gt=0)
    budget_bfs: int = Field(default_factory=lambda: settings.budget_bfs, gt=0)
    seed: int = Field(default_factory=lambda: settings.seed)
    out: Optional[str] = None

    # bigcell: a matrix given row by row in the ring's element notation
    element: Optional[List[List[str]]] = None

    # filtration
    level: int = Field(default=1, ge=1)
    s: int = Field(default=1, ge=1)
    t: int = Field(default=1, ge=1)
    sample_pairs: int = Field(default_factory=lambda: settings.sample_pairs, gt=0)
    equivariance_samples: int = Field(default_factory=lambda: settings.equivariance_samples, gt=0)
    levi: bool = False

    # words: homomorphism source -> target given by images of the source generators
    source_ring: Optional[str] = None
    images: Optional[List[str]] = None

    # k2
    subgroup: SubgroupStrategy = SubgroupStrategy.UNIPOTENT
    symbols: bool = True
    # path prefix for the presentation and coset-table text files
    dump: Optional[str] = None

    def inputs(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude={"out", "dump"}, exclude_none=True)


class CheckResult(BaseModel):
    """Outcome of one verified property."""
    name: str
    passed: bool
    detail: str = ""
    counterexamples: List[Dict[str, Any]] = []


class Report(BaseModel):
    """Machine-readable result of a command."""
    command: str
    inputs: Dict[str, Any] = {}
    checks: List[CheckResult] = []
    counts: Dict[str, int] = {}
    tables: Dict[str, Any] = {}
    error: Optional[str] = None
    timings: Optional[Dict[str, float]] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = "",
              counterexamples: Optional[List[Dict[str, Any]]] = None) -> CheckResult:
        result = CheckResult(name=name, passed=bool(passed), detail=detail,
                             counterexamples=list(counterexamples or [])[:5])
        self.checks.append(result)
        return result

    def extend(self, checks: List[CheckResult]) -> None:
        self.checks.extend(checks)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
