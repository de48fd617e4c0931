import logging
from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, Field

logger = logging.getLogger("service.core.entity")


class ErrorEntity(BaseModel):
    code: str
    message: str
    additional_info: Any | None = Field(default=None, description="Additional information related to the error")


class ClaimEntity(BaseModel):
    """
    Outcome of a single named claim checked by the verification suite.

    Attributes:
        name (str): Stable claim identifier, used for ordering and filtering.
        verified (bool): Whether the engine confirmed the claim exactly.
        detail (str): Short human readable evidence (computed values).
        seconds (float): Wall clock time spent on the claim.
    """
    name: str = Field(description="Claim identifier")
    verified: bool = Field(description="Claim confirmed by exact computation")
    detail: str = Field(default="", description="Computed evidence")
    seconds: float = Field(default=0.0, description="Elapsed time")


class SuiteReport(BaseModel):
    claims: Sequence[ClaimEntity] = Field(default_factory=list)
    seed: int = Field(description="Seed used for randomized corpora")

    @property
    def all_verified(self) -> bool:
        return all(claim.verified for claim in self.claims)
