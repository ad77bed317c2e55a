"""
Abstract Base Class for Graph Family Plugins
"""

from abc import abstractmethod
from typing import ClassVar, List, Sequence

from pydantic import BaseModel, ConfigDict

from app.errors import FamilySpecError
from app.services.graph.core import Graph


def parse_int_list(text: str) -> List[int]:
    """Parse "1,2,3" into [1, 2, 3]; empty string gives []"""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise FamilySpecError(f"expected comma-separated integers, got {text!r}") from e


def parse_int(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise FamilySpecError(f"{name} must be an integer, got {text!r}") from e


class FamilySpec(BaseModel):
    """
    Parameters of one named graph family.

    Subclasses check their invariants in validate_spec() and realize the
    graph in build(). Vertex numbering is deterministic and documented per
    family.
    """

    model_config = ConfigDict(frozen=True)

    family: ClassVar[str] = ""

    @abstractmethod
    def validate_spec(self) -> None:
        """Raise FamilySpecError if the parameters violate the family invariants"""
        pass

    @abstractmethod
    def realize(self) -> Graph:
        """Build the graph; parameters are already validated"""
        pass

    @classmethod
    @abstractmethod
    def from_args(cls, args: Sequence[str]) -> "FamilySpec":
        """Parse command-line arguments into a spec"""
        pass

    def build(self) -> Graph:
        self.validate_spec()
        return self.realize()
