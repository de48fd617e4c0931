from pydantic import BaseModel, Field


class InclusionReport(BaseModel):
    statement: str = Field(description="Inclusion being checked, e.g. 'I_3·I_2 ⊂ I_4'")
    degree: int
    checked: int = Field(description="Number of spanning-set members tested")
    failures: int = Field(description="Members found outside the target ideal")

    @property
    def holds(self) -> bool:
        return self.failures == 0


class QuotientDimsEntity(BaseModel):
    n: int
    p: int
    c: int = Field(description="dim P_n modulo I_{p+1}")
    gamma: int = Field(description="dim Γ_n modulo I_{p+1}")


class ModuleSpanEntity(BaseModel):
    poly: str
    degree: int
    p: int
    dim: int
