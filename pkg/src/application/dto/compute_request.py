"""
Data Transfer Objects for computation requests
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from ...core.exceptions import ValidationError
from ...infrastructure.config.settings import ComputeMethod, OutputFormat, Settings, TauMethod
from ...utils.validation import InputValidator


STRATEGIES = ("power", "binomial")


@dataclass
class ComputeRequest:
    """
    Request object for the compute polynomial use case

    Exactly one source is given: a named ``family`` with ``n``, a plain
    ``graph_file``, or a ``base_file`` with ``marks``, ``shape`` and ``n``.
    """
    family: Optional[str] = None
    n: Optional[int] = None
    graph_file: Optional[Path] = None
    base_file: Optional[Path] = None
    marks: Optional[str] = None
    shape: Optional[str] = None
    method: str = ComputeMethod.AUTO.value
    output_format: str = OutputFormat.TEXT.value
    strategy: str = "power"

    def __post_init__(self):
        """Validate request data"""
        sources = [self.family is not None, self.graph_file is not None, self.base_file is not None]
        if sum(sources) != 1:
            raise ValidationError("Give exactly one of a family, a graph file or a base file")

        if isinstance(self.graph_file, str):
            self.graph_file = Path(self.graph_file)
        if isinstance(self.base_file, str):
            self.base_file = Path(self.base_file)

        InputValidator.validate_choice(self.method, [m.value for m in ComputeMethod], "method")
        InputValidator.validate_choice(self.output_format, [f.value for f in OutputFormat], "output format")
        InputValidator.validate_choice(self.strategy, STRATEGIES, "strategy")

        if self.family is not None:
            InputValidator.validate_choice(self.family, Settings.family_names(), "family")
            if self.n is None:
                raise ValidationError(f"Family '{self.family}' needs n")
            self.n = InputValidator.validate_n(self.n)

        if self.base_file is not None:
            if not self.marks or not self.shape:
                raise ValidationError("A base file needs marks and a shape")
            if self.n is None:
                raise ValidationError("A base file needs n")
            InputValidator.parse_marks(self.marks)
            self.n = InputValidator.validate_n(self.n)

    @property
    def source_kind(self) -> str:
        if self.family is not None:
            return "family"
        if self.graph_file is not None:
            return "graph"
        return "base"


@dataclass
class TauRequest:
    """
    Request object for spanning-tree counts of benzenoid chains
    """
    family: str
    n: int
    method: str = TauMethod.RECURRENCE.value

    def __post_init__(self):
        """Validate request data"""
        InputValidator.validate_choice(self.family, Settings.CHAIN_FAMILIES, "chain family")
        InputValidator.validate_choice(self.method, [m.value for m in TauMethod], "method")
        self.n = InputValidator.validate_n(self.n)


@dataclass
class VerifyRequest:
    """
    Request object for a verification run
    """
    scope: str = "all"
    scopes: List[str] = field(init=False)

    def __post_init__(self):
        """Expand ``all`` into the individual scopes"""
        InputValidator.validate_choice(self.scope, Settings.VERIFY_SCOPES, "scope")
        if self.scope == "all":
            self.scopes = [scope for scope in Settings.VERIFY_SCOPES if scope != "all"]
        else:
            self.scopes = [self.scope]
