import pytest

from service.verification import CLAIMS, VerificationService, run_claim
from settings import get_settings

pytestmark = pytest.mark.integration


@pytest.mark.parametrize("name", [claim.name for claim in CLAIMS])
def test_claim(name):
    claim = run_claim(name, get_settings().DEFAULT_SEED)
    assert claim.verified, claim.detail


@pytest.mark.asyncio
async def test_parallel_run_keeps_order():
    service = VerificationService(threads=2, seed=1)
    report = await service.run("t-ideal/")
    assert [claim.name for claim in report.claims] == service.names("t-ideal/")
    assert report.all_verified
