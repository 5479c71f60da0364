"""Superimposed attack: paraphrase, then passage-only CharSwap, then AddSent,
in that fixed order, with per-stage seeds derived independently so each stage
matches its standalone run on the same input."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .attacks.addsent import AddSentConfig, QuestionPool, apply_addsent
from .attacks.charswap import CharSwapConfig, apply_charswap
from .attacks.paraphrase import apply_paraphrase
from .corpus import Dataset, McrcExample, PerturbationRecord
from .resources import Resources
from .seeding import derive_seed

ATTACK_NAME = "superimposed"


@dataclass(frozen=True)
class SuperimposedConfig:
    seed: int = 0
    addsent: AddSentConfig = field(default_factory=AddSentConfig)
    charswap: CharSwapConfig = field(default_factory=CharSwapConfig)

    def __post_init__(self) -> None:
        # stage seeds always derive from the one global seed; CharSwap never
        # touches questions in this mode
        object.__setattr__(self, "addsent", replace(self.addsent, seed=self.seed))
        object.__setattr__(
            self, "charswap", replace(self.charswap, seed=self.seed, include_question=False)
        )


def apply_superimposed(
    ex: McrcExample,
    pool: Dataset | QuestionPool,
    provider,
    cfg: SuperimposedConfig,
    resources: Resources,
    warnings: list[str] | None = None,
) -> tuple[McrcExample, PerturbationRecord]:
    staged, para_rec = apply_paraphrase(ex, provider, resources,
                                        warnings=warnings, seed=cfg.seed)
    staged, swap_rec = apply_charswap(staged, cfg.charswap, resources, warnings=warnings)
    staged, add_rec = apply_addsent(staged, pool, cfg.addsent, resources, warnings=warnings)

    record = PerturbationRecord(
        example_id=ex.id,
        attack=ATTACK_NAME,
        seed=derive_seed(cfg.seed, ex.id, ATTACK_NAME),
        edits=para_rec.edits + swap_rec.edits + add_rec.edits,
    )
    return staged, record
