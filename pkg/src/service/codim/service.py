import logging

from opentelemetry import trace

from service.freealg import FreeAlgebraService
from service.reptheory import RepresentationService

from .bounds import BoundSpec, Parity, bound_poly, bound_spec, closed_form, codim_table, combined_bounds, did_spec
from .entity import BoundsEntity, CodimEntity, CodimRowEntity, QuasiPolyEntity
from .sequence import catalan

logger = logging.getLogger("service.codim.service")
tracer = trace.get_tracer("lienil.codim.tracer")


class CodimensionService:
    """Codimension lower bounds and their closed forms."""

    def __init__(self, freealg: FreeAlgebraService, reptheory: RepresentationService):
        self.freealg = freealg
        self.reptheory = reptheory

    async def codim(self, k: int, parity: Parity = "odd", n_max: int = 12) -> CodimEntity:
        """
        Closed form and table of the codimension lower bound for N_{2k}.

        Args:
            k (int): Half the nilpotency index.
            parity (Parity): ``odd`` for the A_k bound, ``even`` for B_k.
            n_max (int): Last row of the table.

        Returns:
            CodimEntity: The closed form together with rows comparing it to the binomial transform.

        Raises:
            VerificationError: If the closed form fails on a held-out point.
        """
        with tracer.start_as_current_span("codim_bound"):
            head = [await self.freealg.proper_dimension(n) for n in range(2 * k)]
            return self._report(bound_spec(k, parity, head), n_max)

    async def did_codim(self, l: int, n_max: int = 12) -> CodimEntity:
        """Closed form of c_n(E ⊗ E_{2l}) computed from the module decomposition of Γ_n."""
        with tracer.start_as_current_span("did_codim"):
            dims = {n: 1 - n for n in range(2)}
            for n in range(2, 8 * l + 3):
                dims[n] = (await self.reptheory.did(n, l)).dimension
            return self._report(did_spec(l, dims.__getitem__), n_max)

    async def bounds(self, k: int) -> BoundsEntity:
        with tracer.start_as_current_span("bounds"):
            form = closed_form(bound_spec(k, "odd", [await self.freealg.proper_dimension(n) for n in range(2 * k)]))
            entity = BoundsEntity(
                k=k,
                catalan=catalan(k),
                a_lead=str(bound_poly(k, "odd").lead),
                b_lead=str(bound_poly(k, "even").lead),
                r_lead=str(form.r.lead),
            )
            if k >= 4:
                gamma_lead, codim_lead = combined_bounds(k)
                entity.gamma_lead, entity.codim_lead = str(gamma_lead), str(codim_lead)
            logger.info(f"k={k}: A_k lead {entity.a_lead}, r lead {entity.r_lead}")
            return entity

    def _report(self, spec: BoundSpec, n_max: int) -> CodimEntity:
        form = closed_form(spec)
        rows = [CodimRowEntity(n=n, lower_bound=str(bound), closed_form=str(value)) for n, bound, value in codim_table(spec, n_max, form)]
        return CodimEntity(label=spec.label, tail=str(spec.tail), threshold=spec.threshold, closed_form=QuasiPolyEntity.of(form), rows=rows)
