"""AddSent: distort the question, append one of the example's own distractors,
and insert the sequence into the passage; repeated for a configurable number of
rounds with different replacement words and a different distractor each round.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .. import textkit
from ..corpus import Dataset, Edit, McrcExample, PerturbationRecord
from ..resources import Resources, antonyms_of, nearest_words
from ..seeding import derive_seed
from ..textkit import ANTONYM_TAGS, NEIGHBOR_TAGS

ATTACK_NAME = "addsent"

SENTENCE_BOUNDARY = "sentence_boundary"
ANY_CHAR = "any_char"


@dataclass(frozen=True)
class AddSentConfig:
    rounds: int = 2
    seed: int = 0
    insertion_policy: str = SENTENCE_BOUNDARY

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")
        if self.insertion_policy not in (SENTENCE_BOUNDARY, ANY_CHAR):
            raise ValueError(f"unknown insertion policy {self.insertion_policy!r}")


class QuestionPool:
    """Questions of a dataset bucketed by question-word class, for the
    sampling fallback. Built once, then shared read-only."""

    def __init__(self, dataset: Dataset, stopwords: frozenset[str] | None = None):
        self.buckets: dict[str, list[str]] = {}
        for ex in dataset:
            cls = textkit.question_class(ex.question, stopwords)
            if cls is not None:
                self.buckets.setdefault(cls, []).append(ex.question)

    def sample_other(self, question: str, rng: random.Random,
                     stopwords: frozenset[str] | None = None) -> str | None:
        cls = textkit.question_class(question, stopwords)
        if cls is None:
            return None
        candidates = [q for q in self.buckets.get(cls, []) if q != question]
        if not candidates:
            return None
        return rng.choice(candidates)


def _as_pool(pool: Dataset | QuestionPool, stopwords: frozenset[str]) -> QuestionPool:
    if isinstance(pool, QuestionPool):
        return pool
    return QuestionPool(pool, stopwords)


def _transfer_casing(original: str, replacement: str) -> str:
    if original.isupper() and len(original) > 1:
        return replacement.upper()
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def distract_question(
    question: str,
    pool: Dataset | QuestionPool,
    rng: random.Random,
    resources: Resources,
    choice_rank: int = 0,
    warnings: list[str] | None = None,
) -> tuple[str, int]:
    """Replace nouns/proper nouns/numbers with embedding neighbors and
    adjectives/adverbs/verbs with antonyms; if nothing changes, sample a
    different same-class question from the pool.

    choice_rank selects the rank of the replacement candidate (0 = nearest
    neighbor / first antonym); absent ranks fall back to the best available.
    """
    tokens = resources.tagged_tokens(question)
    pieces: list[str] = []
    cursor = 0
    changed = 0
    for token in tokens:
        replacement: str | None = None
        if token.coarse_pos in NEIGHBOR_TAGS:
            found = nearest_words(token.surface, token.coarse_pos, resources.embeddings,
                                  k=choice_rank + 1)
            if found:
                replacement = found[min(choice_rank, len(found) - 1)]
        elif token.coarse_pos in ANTONYM_TAGS:
            found = antonyms_of(token.surface, token.coarse_pos, resources.antonyms)
            if found:
                replacement = found[min(choice_rank, len(found) - 1)]
        if replacement is not None and replacement.lower() != token.surface.lower():
            pieces.append(question[cursor : token.start])
            pieces.append(_transfer_casing(token.surface, replacement))
            cursor = token.end
            changed += 1
    pieces.append(question[cursor:])
    altered = "".join(pieces)

    if changed > 0:
        return altered, changed

    sampled = _as_pool(pool, resources.stopwords).sample_other(
        question, rng, resources.stopwords
    )
    if sampled is None:
        if warnings is not None:
            warnings.append(
                f"no same-class question to sample for {question!r}; kept it verbatim"
            )
        return question, 0
    return sampled, 0


def _boundary_positions(passage: str, resources: Resources) -> list[int]:
    spans = resources.sentences(passage)
    if not spans:
        return [0]
    return [spans[0].start] + [s.start for s in spans[1:]] + [spans[-1].end]


def _insert(passage: str, sequence: str, position: int, at_end: bool) -> tuple[str, Edit]:
    inserted = " " + sequence if at_end else sequence + " "
    new_passage = passage[:position] + inserted + passage[position:]
    return new_passage, Edit(component="passage", original_text="",
                             new_text=inserted, char_offset=position)


def apply_addsent(
    ex: McrcExample,
    pool: Dataset | QuestionPool,
    cfg: AddSentConfig,
    resources: Resources,
    warnings: list[str] | None = None,
) -> tuple[McrcExample, PerturbationRecord]:
    seed = derive_seed(cfg.seed, ex.id, ATTACK_NAME)
    rng = random.Random(seed)
    record = PerturbationRecord(example_id=ex.id, attack=ATTACK_NAME, seed=seed)
    question_pool = _as_pool(pool, resources.stopwords)

    distractor_slots = list(ex.distractor_indices())
    order = rng.sample(distractor_slots, k=min(cfg.rounds, len(distractor_slots)))
    while len(order) < cfg.rounds:  # only reachable with rounds > 3
        order.append(rng.choice(distractor_slots))

    passage = ex.passage
    for round_index in range(cfg.rounds):
        altered, _ = distract_question(
            ex.question, question_pool, rng, resources,
            choice_rank=round_index, warnings=warnings,
        )
        sequence = altered + " " + ex.options[order[round_index]]
        if cfg.insertion_policy == SENTENCE_BOUNDARY:
            positions = _boundary_positions(passage, resources)
            choice = rng.randint(0, len(positions) - 1)
            position = positions[choice]
            at_end = choice == len(positions) - 1
        else:
            position = rng.randint(0, len(passage))
            at_end = position == len(passage)
        passage, edit = _insert(passage, sequence, position, at_end)
        record.edits.append(edit)

    return ex.with_component("passage", passage), record
