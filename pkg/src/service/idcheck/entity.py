from pydantic import BaseModel, Field


class WitnessEntity(BaseModel):
    pattern: list[list[str]] | None = Field(default=None, description="Odd/EvenUnit matrix, variables by slots")
    arguments: list[str]
    value: str


class IdentityVerdictEntity(BaseModel):
    is_identity: bool
    method: str
    witness: WitnessEntity | None = None


class MinIndexEntity(BaseModel):
    algebra: str
    index: int
    cap: int
    odd: bool


class EvaluationEntity(BaseModel):
    recipe: str
    algebra: str
    arguments: list[str]
    value: str
    nonzero: bool


class GammaEntity(BaseModel):
    algebra: str
    n: int
    gamma: int
    method: str
