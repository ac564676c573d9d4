"""Structured result objects for verification runs and conjecture sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass

VERIFIED = "verified"
CONSISTENT = "consistent-up-to-bound"
COUNTEREXAMPLE = "counterexample"

_STATUSES = (VERIFIED, CONSISTENT, COUNTEREXAMPLE)


@dataclass
class Report:
    """Outcome of one check: a claim id, its parameters, and what happened.

    ``witness`` is present exactly when ``status`` is "counterexample".
    ``detail`` carries deterministic auxiliary data (e.g. a measured maximum
    deviation); ``elapsed_ms`` is wall time and is excluded from the
    canonical serialization so that repeated runs compare byte-identical.
    """

    subject: str
    params: dict
    bound: int
    status: str
    witness: dict | None = None
    detail: dict | None = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown report status: {self.status!r}")
        if (self.status == COUNTEREXAMPLE) != (self.witness is not None):
            raise ValueError("witness must be present iff status is counterexample")

    def _payload(self) -> dict:
        payload = {
            "subject": self.subject,
            "params": self.params,
            "bound": self.bound,
            "status": self.status,
        }
        if self.witness is not None:
            payload["witness"] = self.witness
        if self.detail is not None:
            payload["detail"] = self.detail
        return payload

    def canonical_json(self) -> str:
        """Deterministic serialization: same inputs give identical bytes."""
        return json.dumps(self._payload(), sort_keys=True)

    def to_json(self) -> str:
        """Full serialization including elapsed wall time."""
        payload = self._payload()
        payload["elapsed_ms"] = round(self.elapsed_ms, 3)
        return json.dumps(payload, sort_keys=True)

    @property
    def ok(self) -> bool:
        return self.status in (VERIFIED, CONSISTENT)
