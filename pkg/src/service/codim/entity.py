from pydantic import BaseModel, Field

from .sequence import QuasiPoly


class QuasiPolyEntity(BaseModel):
    r: list[str] = Field(description="Coefficients of r(n) by ascending degree")
    s: list[str] = Field(description="Coefficients of s(n) by ascending degree")

    @classmethod
    def of(cls, form: QuasiPoly) -> "QuasiPolyEntity":
        return cls(r=form.r.to_list(), s=form.s.to_list())


class CodimRowEntity(BaseModel):
    n: int
    lower_bound: str = Field(description="Binomial transform of the γ lower bound")
    closed_form: str = Field(description="r(n)·2^n + s(n) at n")


class CodimEntity(BaseModel):
    label: str
    tail: str = Field(description="Polynomial γ_n from the threshold on")
    threshold: int
    closed_form: QuasiPolyEntity
    rows: list[CodimRowEntity] = Field(default_factory=list)


class BoundsEntity(BaseModel):
    """
    Leading coefficients of the γ and codimension lower bounds for N_{2k}.

    Attributes:
        a_lead (str): Leading coefficient of A_k in the half degree.
        b_lead (str): Leading coefficient of B_k in the half degree.
        r_lead (str): Leading coefficient of r(n) in the closed form of the A_k bound.
        gamma_lead (str | None): Combined γ lead, only for k ≥ 4.
        codim_lead (str | None): Combined codimension lead, only for k ≥ 4.
    """
    k: int
    catalan: int
    a_lead: str
    b_lead: str
    r_lead: str
    gamma_lead: str | None = None
    codim_lead: str | None = None
