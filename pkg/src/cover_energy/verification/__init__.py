"""Seeded random corpus and the runner that checks the covering theorems over it."""

from cover_energy.verification.corpus import (
    TrialSample,
    draw_trial,
    random_connected_graph,
    trial_rng,
)
from cover_energy.verification.runner import (
    ORACLE_CHECK,
    TrialResult,
    VerificationReport,
    run_trial,
    verify,
)

__all__ = [
    "ORACLE_CHECK",
    "TrialResult",
    "TrialSample",
    "VerificationReport",
    "draw_trial",
    "random_connected_graph",
    "run_trial",
    "trial_rng",
    "verify",
]
