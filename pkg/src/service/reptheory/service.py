import logging

from opentelemetry import trace

from service.freealg import FreeAlgebraService

from .decompose import check_decomposable, class_representatives, decompose_character, decompose_quotient, did_gamma, did_gamma_finite, intro_partitions
from .entity import DecompositionEntity, PartitionListEntity

logger = logging.getLogger("service.reptheory.service")
tracer = trace.get_tracer("lienil.reptheory.tracer")


class RepresentationService:
    """S_n-module structure of proper multilinear quotients."""

    def __init__(self, freealg: FreeAlgebraService):
        self.freealg = freealg

    async def decompose(self, n: int, p: int) -> DecompositionEntity:
        """
        Decomposes Γ_n(N_p) into irreducible modules from the traces of one permutation per class.

        Args:
            n (int): Degree, at most ``EXACT_RANK_MAX_DEGREE``.
            p (int): Lie nilpotency index.

        Returns:
            DecompositionEntity: Multiplicities with module dimensions.
        """
        with tracer.start_as_current_span("decompose_quotient"):
            check_decomposable(n)
            if n <= 1:
                return decompose_quotient(n, p).to_entity(f"Gamma_{n}(N_{p})")
            classes, representatives = class_representatives(n)
            traces = await self.freealg.character(n, p, representatives)
            decomposition = decompose_character(n, dict(zip(classes, traces, strict=True)))
            logger.info(f"Gamma_{n}(N_{p}) = {decomposition}")
            return decomposition.to_entity(f"Gamma_{n}(N_{p})")

    async def did(self, n: int, l: int, m: int | None = None) -> DecompositionEntity:
        """Γ_n(E ⊗ E_{2l}), or Γ_n(E_{2m} ⊗ E_{2l}) when m is given."""
        with tracer.start_as_current_span("did_gamma"):
            if m is None:
                return did_gamma(n, l).to_entity(f"Gamma_{n}(E*E{2 * l})")
            return did_gamma_finite(n, m, l).to_entity(f"Gamma_{n}(E{2 * m}*E{2 * l})")

    async def intro(self, n: int, p: int) -> PartitionListEntity:
        with tracer.start_as_current_span("intro_partitions"):
            return PartitionListEntity(n=n, p=p, partitions=[str(shape) for shape in intro_partitions(n, p)])
