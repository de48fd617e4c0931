from .claims import CLAIMS, CLAIMS_BY_NAME, Claim, equivalence_corpus, expect
from .runner import run_claim
from .service import VerificationService

__all__ = [
    "CLAIMS",
    "CLAIMS_BY_NAME",
    "Claim",
    "VerificationService",
    "equivalence_corpus",
    "expect",
    "run_claim",
]
