import logging

from opentelemetry import trace

from .entity import InclusionReport, ModuleSpanEntity, QuotientDimsEntity
from .parser import parse_poly
from .poly import MultilinearPoly, NcPoly, multilinearize
from .spans import check_lemma_instances, check_product_inclusion, module_span_dim, proper_dimension, quotient_character, quotient_dims

logger = logging.getLogger("service.freealg.service")
tracer = trace.get_tracer("lienil.freealg.tracer")


class FreeAlgebraService:
    """Multilinear computations in the free algebra modulo the T-ideals I_p."""

    def __init__(self, max_degree: int | None = None):
        self.max_degree = max_degree

    def parse(self, text: str) -> NcPoly:
        return parse_poly(text)

    def multilinear(self, text: str) -> MultilinearPoly:
        """Parses a literal and multilinearizes it."""
        return multilinearize(parse_poly(text))

    async def quotient_dims(self, n: int, p: int) -> QuotientDimsEntity:
        """
        Computes c_n(N_p) and γ_n(N_p) by exact elimination.

        Args:
            n (int): Multilinear degree.
            p (int): Lie nilpotency index, the identity being [x_1, ..., x_{p+1}].

        Returns:
            QuotientDimsEntity: Both dimensions.

        Raises:
            SizeGuardError: If n exceeds the degree guard.
        """
        with tracer.start_as_current_span("quotient_dims"):
            c, gamma = quotient_dims(n, p, max_degree=self.max_degree)
            return QuotientDimsEntity(n=n, p=p, c=c, gamma=gamma)

    async def proper_dimension(self, n: int) -> int:
        with tracer.start_as_current_span("proper_dimension"):
            return proper_dimension(n)

    async def module_span(self, text: str, p: int) -> ModuleSpanEntity:
        """Dimension of the S_n-module generated by the multilinearization of ``text`` modulo I_{p+1}."""
        with tracer.start_as_current_span("module_span_dim"):
            f = self.multilinear(text)
            dim = module_span_dim(f, p, max_degree=self.max_degree)
            logger.info(f"Module generated by {text} modulo I_{p + 1} has dimension {dim}")
            return ModuleSpanEntity(poly=text, degree=f.degree, p=p, dim=dim)

    async def character(self, n: int, p: int, classes: list[tuple[int, ...]]) -> list[int]:
        with tracer.start_as_current_span("quotient_character"):
            return quotient_character(n, p, classes, max_degree=self.max_degree)

    async def inclusion(self, m: int, q: int, degree: int, target: int | None = None) -> InclusionReport:
        """
        Checks the product inclusion I_m·I_q ⊂ I_target on the multilinear component of the given degree.

        Args:
            m (int): First commutator length.
            q (int): Second commutator length.
            degree (int): Multilinear degree, at least m + q for a nonempty check.
            target (int | None): Target index; defaults to m + q − 1 if m or q is odd, else m + q − 2.

        Returns:
            InclusionReport: Counts of checked and failing generators.
        """
        with tracer.start_as_current_span("check_product_inclusion"):
            return check_product_inclusion(m, q, degree, target, max_degree=self.max_degree)

    async def lemma(self, m: int, degree: int, target: int | None = None) -> InclusionReport:
        """Checks [I_m, x, y] ⊂ I_target on the given degree, target m + 2 by default."""
        with tracer.start_as_current_span("check_lemma_instances"):
            return check_lemma_instances(m, degree, target, max_degree=self.max_degree)
