import logging
from typing import Literal, TypeAlias

from opentelemetry import trace

from service.algebras import AlgebraSpec, materialize, parse_algebra_spec
from service.core.errors import UnsupportedError, VerificationError
from service.freealg import MultilinearPoly, multilinearize, parse_poly

from .brute import brute_check
from .entity import EvaluationEntity, GammaEntity, IdentityVerdictEntity, MinIndexEntity
from .gamma import GammaMethod, identity_gamma
from .parity import parity_check
from .recipes import RECIPES, run_recipe
from .search import min_index, recognized_cap
from .verdict import IdentityVerdict

logger = logging.getLogger("service.idcheck.service")
tracer = trace.get_tracer("lienil.idcheck.tracer")

CheckMethod: TypeAlias = Literal["auto", "parity", "brute"]


class IdentityService:
    """Identity checks, Lie nilpotency indices and witnesses on tensor products of algebras."""

    def __init__(self, max_dim: int | None = None):
        self.max_dim = max_dim

    def _check(self, f: MultilinearPoly, spec: AlgebraSpec, method: CheckMethod) -> IdentityVerdict:
        if method == "auto":
            method = "parity" if spec.all_grassmann else "brute"
        if method == "parity":
            return parity_check(f, spec)
        return brute_check(f, materialize(spec, max_dim=self.max_dim, unbounded_rank=max(f.degree, 1)))

    async def check_identity(self, algebra: str, poly: str, method: CheckMethod = "auto") -> IdentityVerdictEntity:
        """
        Decides whether a polynomial is an identity of the algebra.

        Non-multilinear input is split into multihomogeneous components and each component is
        replaced by its complete multilinearization, which is equivalent over the rationals.
        The reported witness belongs to the first failing multilinearization.

        Args:
            algebra (str): Spec string such as ``E*E2``.
            poly (str): Polynomial literal.
            method (CheckMethod): ``parity`` (Grassmann slots only), ``brute`` or ``auto``.

        Returns:
            IdentityVerdictEntity: Verdict with witness.
        """
        with tracer.start_as_current_span("check_identity"):
            spec = parse_algebra_spec(algebra)
            f = parse_poly(poly)
            components = [f] if f.multilinear_degree() is not None else f.multihomogeneous_components()
            verdict = IdentityVerdict(True, method=method)
            for component in components:
                verdict = self._check(multilinearize(component), spec, method)
                if not verdict.is_identity:
                    break
            logger.info(f"{poly} on {spec}: {'identity' if verdict.is_identity else 'not an identity'}")
            return verdict.to_entity()

    async def min_index(self, algebra: str, cap: int | None = None) -> MinIndexEntity:
        """
        Least q with [x_1, ..., x_q] = 0 on the algebra.

        Raises:
            UnsupportedError: If no cap is given and none is known for the spec.
            CapExceededError: If no q up to the cap works.
        """
        with tracer.start_as_current_span("min_index"):
            spec = parse_algebra_spec(algebra)
            bound = cap if cap is not None else recognized_cap(spec)
            index = min_index(spec, bound, max_dim=self.max_dim)
            return MinIndexEntity(algebra=str(spec), index=index, cap=bound, odd=bool(index % 2))  # type: ignore[arg-type]

    async def witness(self, recipe: str, **params: int) -> EvaluationEntity:
        """
        Evaluates a named substitution recipe.

        Raises:
            UnsupportedError: For unknown recipes or parameters.
            VerificationError: If a recipe with a known closed value evaluates to something else.
        """
        with tracer.start_as_current_span("witness"):
            if (builder := RECIPES.get(recipe)) is None:
                raise UnsupportedError(f"unknown recipe {recipe}, expected one of {', '.join(RECIPES)}")
            try:
                instance = builder(**params)
            except TypeError as exc:
                raise UnsupportedError(f"bad parameters for {recipe}: {exc}")
            value = run_recipe(instance)
            if instance.expected is not None and value != instance.expected:
                raise VerificationError(f"{recipe} evaluates to {value}, expected {instance.expected}")
            return EvaluationEntity(
                recipe=instance.name,
                algebra=str(instance.spec),
                arguments=[str(arg) for arg in instance.arguments],
                value=str(value),
                nonzero=not value.is_zero(),
            )

    async def gamma(self, algebra: str, n: int, method: GammaMethod = "parity") -> GammaEntity:
        with tracer.start_as_current_span("identity_gamma"):
            spec = parse_algebra_spec(algebra)
            gamma = identity_gamma(spec, n, method, max_dim=self.max_dim)
            return GammaEntity(algebra=str(spec), n=n, gamma=gamma, method=method)
