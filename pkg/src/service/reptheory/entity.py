from pydantic import BaseModel, Field


class ComponentEntity(BaseModel):
    partition: str = Field(description="Partition rendered as (3,1,1)")
    multiplicity: int
    dim: int = Field(description="Dimension of the irreducible module")


class DecompositionEntity(BaseModel):
    label: str = ""
    n: int
    components: list[ComponentEntity] = Field(default_factory=list)
    dimension: int


class PartitionListEntity(BaseModel):
    n: int
    p: int
    partitions: list[str]
