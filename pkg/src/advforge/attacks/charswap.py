"""CharSwap: transpose one pair of adjacent interior letters in targeted words.

Targets are the question's non-stopwords plus passage non-stopwords that also
appear in the question or options; options themselves are never edited.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..corpus import Edit, McrcExample, PerturbationRecord
from ..resources import Resources
from ..seeding import derive_seed
from ..textkit import Token

ATTACK_NAME = "charswap"

MIN_WORD_LENGTH = 4  # shorter words have no interior pair to swap


@dataclass(frozen=True)
class CharSwapConfig:
    seed: int = 0
    include_question: bool = True
    min_word_length: int = MIN_WORD_LENGTH

    def __post_init__(self) -> None:
        if self.min_word_length != MIN_WORD_LENGTH:
            raise ValueError("min_word_length is fixed at 4: a word needs two interior letters")


def swap_word(word: str, rng: random.Random) -> str:
    """Transpose one uniformly chosen adjacent interior pair; first and last
    characters never move. Words shorter than 4 characters pass through."""
    if len(word) < MIN_WORD_LENGTH:
        return word
    i = rng.randrange(1, len(word) - 2)
    return word[:i] + word[i + 1] + word[i] + word[i + 2 :]


def _eligible(token: Token) -> bool:
    return token.is_word() and not token.is_stopword and len(token.surface) >= MIN_WORD_LENGTH


def select_targets(ex: McrcExample, resources: Resources) -> dict[str, list[Token]]:
    """Token occurrences to perturb, keyed by component ("question"/"passage")."""
    question_tokens = resources.tokenize(ex.question)
    reference = {t.surface.lower() for t in question_tokens}
    for option in ex.options:
        reference |= {t.surface.lower() for t in resources.tokenize(option)}

    return {
        "question": [t for t in question_tokens if _eligible(t)],
        "passage": [
            t
            for t in resources.tokenize(ex.passage)
            if _eligible(t) and t.surface.lower() in reference
        ],
    }


def apply_charswap(
    ex: McrcExample,
    cfg: CharSwapConfig,
    resources: Resources,
    warnings: list[str] | None = None,
) -> tuple[McrcExample, PerturbationRecord]:
    seed = derive_seed(cfg.seed, ex.id, ATTACK_NAME)
    rng = random.Random(seed)
    targets = select_targets(ex, resources)
    record = PerturbationRecord(example_id=ex.id, attack=ATTACK_NAME, seed=seed)

    out = ex
    components = (["question"] if cfg.include_question else []) + ["passage"]
    for component in components:
        text = out.component_text(component)
        for token in targets[component]:
            swapped = swap_word(token.surface, rng)
            if swapped == token.surface:
                continue
            text = text[: token.start] + swapped + text[token.end :]
            record.edits.append(
                Edit(component=component, original_text=token.surface,
                     new_text=swapped, char_offset=token.start)
            )
        out = out.with_component(component, text)
    return out, record
