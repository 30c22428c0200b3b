"""Seeded Monte-Carlo sampling of hypersurfaces through the curve.

Draws uniform coefficient vectors over a prime-field basis of the
degree-d ideal and tallies the resulting kernel splitting types.  Trials
are keyed by counter-derived seeds, so the table is byte-identical for a
given (seed, config) regardless of the thread count or completion order.
"""

from __future__ import annotations

import hashlib
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from . import linalg
from .errors import ZeroMap
from .mpoly import MPoly
from .normalmap import phi_matrix, psi_from_row
from .rnc import CurveContext, ideal_basis
from .splitting import SplitType, splitting_type

THREADS_ENV = "SPLITKIT_THREADS"


@dataclass
class SampleConfig:
    ctx: CurveContext
    d: int
    trials: int
    seed: int
    threads: int | None = None

    def __post_init__(self):
        if self.ctx.field.is_rationals:
            raise ValueError("sampling draws uniform residues; use a prime field")
        if self.trials < 1:
            raise ValueError("need at least one trial")

    def resolved_threads(self) -> int:
        if self.threads is not None:
            return max(1, self.threads)
        env = os.environ.get(THREADS_ENV)
        return max(1, int(env)) if env else 1


@dataclass
class FrequencyTable:
    counts: dict = dc_field(default_factory=dict)
    total: int = 0
    rejected: int = 0

    def tally(self, st: SplitType | None):
        self.total += 1
        if st is None:
            self.rejected += 1
        else:
            self.counts[st] = self.counts.get(st, 0) + 1

    def merge(self, other: FrequencyTable):
        self.total += other.total
        self.rejected += other.rejected
        for st, c in other.counts.items():
            self.counts[st] = self.counts.get(st, 0) + c

    def frequency(self, st: SplitType) -> float:
        return self.counts.get(st, 0) / self.total if self.total else 0.0

    def to_json(self) -> dict:
        rows = sorted(
            self.counts.items(), key=lambda kv: (-kv[1], tuple(-u for u in kv[0].degrees))
        )
        return {
            "total": self.total,
            "rejected": self.rejected,
            "counts": [{"degrees": list(st.degrees), "count": c} for st, c in rows],
        }


def _trial_rng(seed: int, trial: int) -> random.Random:
    key = f"{seed}:{trial}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def _trial_coeffs(cfg: SampleConfig, trial: int) -> list[int]:
    rng = _trial_rng(cfg.seed, trial)
    size = len(ideal_basis(cfg.ctx, cfg.d))
    p = cfg.ctx.field.modulus
    return [rng.randrange(p) for _ in range(size)]


def random_ideal_element(cfg: SampleConfig, trial: int) -> MPoly:
    """The trial's uniform combination of the ideal basis; deterministic per (seed, trial)."""
    coeffs = _trial_coeffs(cfg, trial)
    K, ctx = cfg.ctx.field, cfg.ctx
    terms: dict = {}
    for c, base in zip(coeffs, ideal_basis(ctx, cfg.d)):
        if c == 0:
            continue
        for exps, v in base.terms.items():
            acc = K.add(terms.get(exps, 0), K.mul(c, v))
            if acc == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = acc
    return MPoly(K, ctx.n, cfg.d, terms)


def _trial_type(cfg: SampleConfig, phi, trial: int) -> SplitType | None:
    coeffs = _trial_coeffs(cfg, trial)
    row = linalg.matvec(cfg.ctx.field, phi, coeffs)
    psi = psi_from_row(cfg.ctx, cfg.d, row)
    try:
        return splitting_type(psi)
    except ZeroMap:
        return None


def sample_distribution(cfg: SampleConfig) -> FrequencyTable:
    """Tally kernel splitting types over the configured trials."""
    phi = phi_matrix(cfg.ctx, cfg.d)
    table = FrequencyTable()
    threads = cfg.resolved_threads()
    if threads == 1:
        for trial in range(cfg.trials):
            table.tally(_trial_type(cfg, phi, trial))
        return table
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for st in pool.map(lambda t: _trial_type(cfg, phi, t), range(cfg.trials)):
            table.tally(st)
    return table
