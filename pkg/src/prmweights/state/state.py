from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.prmweights import __version__
from src.prmweights.config.settings import DEFAULT_VISIT_BUDGET, DEFAULT_WORKERS


class RunConfig(BaseModel):
    """
    Everything a CLI invocation was asked to do.
    Embedded verbatim in every report so a run can be replayed.
    """

    verb: Literal["table", "construct", "search", "verify", "ghw"]
    d: Optional[int] = None
    m: Optional[int] = None
    r: Optional[int] = None
    r_min: Optional[int] = None
    r_max: Optional[int] = None
    p: Optional[int] = None
    e: int = 1
    q: Optional[int] = None             # table verb works on the bare integer q
    objective: Optional[Literal["e_r", "u_r"]] = None
    mode: Literal["exhaustive", "randomized"] = "exhaustive"
    suite: Optional[str] = None
    limits: Dict[str, int] = Field(default_factory=dict)
    seed: int = 0
    iterations: int = 2000
    chains: int = 1
    cross_check: bool = False           # ghw: also compare with exhaustive e_r
    workers: int = DEFAULT_WORKERS
    visit_budget: int = DEFAULT_VISIT_BUDGET
    output_format: Literal["csv", "json"] = "json"
    output_path: Optional[str] = None

    @field_validator("e", "workers", "chains", "visit_budget")
    @classmethod
    def _positive(cls, v, info):
        if v < 1:
            raise ValueError(f"{info.field_name} must be positive, got {v}")
        return v

    @field_validator("d", "m", "iterations", "seed")
    @classmethod
    def _non_negative(cls, v, info):
        if v is not None and v < 0:
            raise ValueError(f"{info.field_name} must be >= 0, got {v}")
        return v

    @model_validator(mode="after")
    def _ranges(self):
        if self.r_min is not None and self.r_max is not None and self.r_max < self.r_min - 1:
            raise ValueError(f"bad rank range {self.r_min}..{self.r_max}")
        if self.verb in ("construct", "search") and self.r is None:
            raise ValueError(f"verb {self.verb} needs r")
        if self.verb == "search" and self.objective is None:
            raise ValueError("verb search needs an objective")
        if self.verb == "verify" and not self.suite:
            raise ValueError("verb verify needs a suite")
        return self

    def ranks(self) -> List[int]:
        if self.r_min is None:
            return [] if self.r is None else [self.r]
        return list(range(self.r_min, self.r_max + 1))


class SearchReport(BaseModel):
    """
    Result of an exhaustive or randomized maximization over r-dimensional subspaces.
    wall_time is logged and kept out of the JSON dump.
    """

    mode: Literal["exhaustive", "randomized"]
    objective: Literal["e_r", "u_r_rational", "ghw"]
    d: int
    m: int
    p: int
    e: int = 1
    q: int
    r: int
    best_value: int
    witness: List[List[int]] = Field(default_factory=list)   # RREF rows
    visited: int = 0
    seed: Optional[int] = None
    expected: Optional[int] = None                           # f_r or H'_{r-1}
    match: Optional[bool] = None
    theorem_range: bool = False                              # mismatch here is a failure
    wall_time: float = Field(default=0.0, exclude=True)

    def summary_row(self) -> dict:
        return {
            "d": self.d, "m": self.m, "q": self.q, "r": self.r,
            "mode": self.mode, "best": self.best_value,
            "expected_f_or_Hprime": self.expected, "match": self.match,
        }


class SuiteResult(BaseModel):
    name: str
    passed: bool = True
    checked: int = 0
    failures: List[str] = Field(default_factory=list)   # first few counterexamples

    def fail(self, message: str, keep: int = 5) -> None:
        self.passed = False
        if len(self.failures) < keep:
            self.failures.append(message)


class VerificationState(BaseModel):
    """
    The shared state object for the verification graph.
    Holds the queue of suites still to run and every finished result.
    """

    # === INPUTS ===
    suites: List[str] = Field(default_factory=list)
    limits: Dict[str, int] = Field(default_factory=dict)
    seed: int = 0
    workers: int = DEFAULT_WORKERS

    # === PROGRESS ===
    pending: List[str] = Field(default_factory=list)
    current: Optional[str] = None

    # === RESULTS ===
    results: List[SuiteResult] = Field(default_factory=list)
    report: Optional[str] = None        # markdown summary
    passed: Optional[bool] = None

    version: str = __version__


class RunReport(BaseModel):
    """JSON envelope for every CLI verb: the config, the version and the verb's output."""

    config: RunConfig
    version: str = __version__
    exit_code: int = 0
    result: Any = None
