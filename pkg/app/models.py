from datetime import datetime
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, PlainSerializer, PlainValidator, TypeAdapter, WithJsonSchema


def parse_rational(value: Any) -> Fraction:
    """Accept Fraction, int or a "p/q" / "p" string"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational: {value!r}") from e
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    # str(Fraction) already yields "p" when the denominator is 1
    return str(value)


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(/\d+)?$"}),
]


class ObstructionWitness(BaseModel):
    kind: Literal["obstruction"] = "obstruction"
    component: List[int]
    sets: List[List[int]]  # F1, F2, F3, F4


class InfeasibilityWitness(BaseModel):
    kind: Literal["infeasibility"] = "infeasibility"
    component: List[int]
    farkas_multipliers: List[Rational]


Witness = Annotated[Union[ObstructionWitness, InfeasibilityWitness], Field(discriminator="kind")]


class LevelableCertificate(BaseModel):
    verdict: Literal["levelable"] = "levelable"
    weights: List[int]
    independence_weight: int


class NotLevelableCertificate(BaseModel):
    verdict: Literal["not_levelable"] = "not_levelable"
    witness: Witness


LevelCertificate = Annotated[
    Union[LevelableCertificate, NotLevelableCertificate], Field(discriminator="verdict")
]
certificate_adapter: TypeAdapter = TypeAdapter(LevelCertificate)


class FamilyVerdictResponse(BaseModel):
    family: str
    levelable: bool
    weights: Optional[List[int]] = None
    independence_weight: Optional[int] = None
    citation: str
    witness: Optional[List[List[int]]] = None
    farkas_multipliers: Optional[List[Rational]] = None


class MisResponse(BaseModel):
    n: int
    count: int
    sets: List[List[int]]
    independence_number: int
    well_covered: bool


class WcwResponse(BaseModel):
    n: int
    dim: int
    rank: int
    basis: List[List[Rational]]


class SocleResponse(BaseModel):
    socle: List[int]
    level: bool
    top_degree: int
    graded_dims: List[int]
    well_covered: bool


class ConstructionResponse(BaseModel):
    n: int
    edges: List[Tuple[int, int]]
    weights: List[int]
    independence_weight: int


class ExperimentSummary(BaseModel):
    n: int
    p: Rational
    trials: int
    seed: Optional[int] = None
    fraction: Rational
    dim_histogram: Dict[int, int]
    positive_dim_count: int
    levelable_count: int
    capped_trials: List[int] = Field(default_factory=list)


class ErrorResponse(BaseModel):
    success: bool = False
    error: str
    detail: Optional[str] = None
    timestamp: datetime = Field(default_factory=datetime.utcnow)


SCHEMAS: Dict[str, Any] = {
    "certificate": certificate_adapter,
    "family-verdict": FamilyVerdictResponse,
    "mis": MisResponse,
    "wcw": WcwResponse,
    "socle": SocleResponse,
    "construction": ConstructionResponse,
    "experiment": ExperimentSummary,
    "error": ErrorResponse,
}


def json_schema(name: str) -> Dict[str, Any]:
    """JSON schema of a named wire model"""
    target = SCHEMAS[name]
    if isinstance(target, TypeAdapter):
        return target.json_schema()
    return target.model_json_schema()
