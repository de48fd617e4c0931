import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor

from opentelemetry import trace

from service.core.entity import SuiteReport
from settings import get_settings

from .claims import CLAIMS
from .runner import run_claim

logger = logging.getLogger("service.verification.service")
tracer = trace.get_tracer("lienil.verification.tracer")


class VerificationService:
    """Runs the named claims, sequentially or on a process pool."""

    def __init__(self, threads: int | None = None, seed: int | None = None):
        settings = get_settings()
        self.threads = threads if threads is not None else settings.THREADS
        self.seed = seed if seed is not None else settings.DEFAULT_SEED

    def names(self, only: str | None = None) -> list[str]:
        return [claim.name for claim in CLAIMS if only is None or only in claim.name]

    async def run(self, only: str | None = None) -> SuiteReport:
        """
        Checks every claim whose name contains ``only``.

        Claims are reported in declaration order whatever the number of workers.

        Args:
            only (str | None): Substring filter on claim names.

        Returns:
            SuiteReport: One entry per selected claim.
        """
        with tracer.start_as_current_span("verify_suite"):
            names = self.names(only)
            logger.info(f"Checking {len(names)} claims on {self.threads} worker(s), seed {self.seed}")
            if self.threads <= 1:
                claims = [run_claim(name, self.seed) for name in names]
            else:
                loop = asyncio.get_running_loop()
                with ProcessPoolExecutor(max_workers=self.threads) as pool:
                    claims = list(await asyncio.gather(*(loop.run_in_executor(pool, run_claim, name, self.seed) for name in names)))
            return SuiteReport(claims=claims, seed=self.seed)
