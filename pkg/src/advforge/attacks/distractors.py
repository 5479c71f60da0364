"""Distractor construction attacks: replace an example's three distractors with
candidates from a provider, picked greedily under lexical-diversity constraints.

Also houses the span-extraction data-prep transform (answer inserted into the
passage with exact offsets) used to train extraction models.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from ..corpus import Dataset, Edit, McrcExample, PerturbationRecord
from ..provider import CandidateSpan
from ..resources import Resources
from ..seeding import derive_seed
from ..textkit import jaccard_distance, jaccard_similarity, token_set

EXTRACTION_NAME = "distractor_extraction"
GENERATION_NAME = "distractor_generation"


@dataclass(frozen=True)
class ExtractionSelectConfig:
    top_n: int = 20
    pick: int = 3
    max_pair_sim: float = 0.5
    max_answer_sim: float = 0.3
    relax_step: float = 0.1

    def __post_init__(self) -> None:
        if self.pick > self.top_n:
            raise ValueError("pick cannot exceed top_n")
        for name in ("max_pair_sim", "max_answer_sim", "relax_step"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {value}")


@dataclass(frozen=True)
class GenerationSelectConfig:
    beam: int = 50
    pick: int = 3
    min_pair_distance: float = 0.5
    relax_step: float = 0.1

    def __post_init__(self) -> None:
        if self.pick > self.beam:
            raise ValueError("pick cannot exceed beam")
        for name in ("min_pair_distance", "relax_step"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {value}")


@dataclass
class SelectionResult:
    texts: list[str]
    underfilled: bool
    # thresholds in force when the last candidate was accepted
    final_pair_threshold: float
    final_answer_threshold: float | None = None


@dataclass(frozen=True)
class SpanInstance:
    """Span-extraction training instance: the answer re-inserted into the passage."""

    passage: str
    question: str
    answer_start: int
    answer_end: int


def to_span_extraction(ex: McrcExample, rng: random.Random,
                       resources: Resources) -> SpanInstance:
    """Insert the answer as its own sentence at a seeded-random sentence
    boundary; offsets address exactly the inserted answer text."""
    answer = ex.answer_text
    spans = resources.sentences(ex.passage)
    if spans:
        positions = [spans[0].start] + [s.start for s in spans[1:]] + [spans[-1].end]
    else:
        positions = [0]
    choice = rng.randint(0, len(positions) - 1)
    position = positions[choice]
    if choice == len(positions) - 1 and spans:
        inserted, answer_start = " " + answer, position + 1
    else:
        inserted, answer_start = answer + " ", position
    passage = ex.passage[:position] + inserted + ex.passage[position:]
    return SpanInstance(
        passage=passage,
        question=ex.question,
        answer_start=answer_start,
        answer_end=answer_start + len(answer),
    )


def write_span_instances(dataset: Dataset, path: str | Path, seed: int,
                         resources: Resources) -> int:
    """Emit one line-delimited span instance per example; returns the count."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for ex in dataset:
            rng = random.Random(derive_seed(seed, ex.id, "span_extraction"))
            inst = to_span_extraction(ex, rng, resources)
            fh.write(
                json.dumps(
                    {
                        "id": ex.id,
                        "passage": inst.passage,
                        "question": inst.question,
                        "answer_start": inst.answer_start,
                        "answer_end": inst.answer_end,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
            count += 1
    return count


def _is_answer_copy(candidate: str, answer: str) -> bool:
    return candidate.strip().lower() == answer.strip().lower()


def _greedy_select(
    candidates: list[CandidateSpan],
    answer: str,
    pick: int,
    accepts,
    relax,
    initial: tuple[float, float | None],
) -> SelectionResult:
    """Shared greedy scan with threshold relaxation.

    `accepts(cand_set, accepted_sets, thresholds)` decides one candidate;
    `relax(thresholds)` loosens thresholds one step or returns None when no
    further relaxation is possible. Candidates textually equal to the answer
    are never eligible. Accepted candidates stay accepted across relaxation
    rounds; only the rejected remainder is rescanned.
    """
    eligible = [c for c in candidates if c.text.strip() and not _is_answer_copy(c.text, answer)]
    sets = {id(c): token_set(c.text) for c in eligible}

    accepted: list[CandidateSpan] = []
    remaining = list(eligible)
    thresholds = initial
    while True:
        still_rejected = []
        for cand in remaining:
            if len(accepted) >= pick:
                break
            if accepts(sets[id(cand)], [sets[id(a)] for a in accepted], thresholds):
                accepted.append(cand)
            else:
                still_rejected.append(cand)
        if len(accepted) >= pick:
            break
        next_thresholds = relax(thresholds)
        if next_thresholds is None:
            break
        thresholds = next_thresholds
        remaining = still_rejected

    return SelectionResult(
        texts=[c.text for c in accepted],
        underfilled=len(accepted) < pick,
        final_pair_threshold=thresholds[0],
        final_answer_threshold=thresholds[1],
    )


def select_extracted(candidates: list[CandidateSpan], answer: str,
                     cfg: ExtractionSelectConfig) -> SelectionResult:
    """Greedy pick in score order: accept a span iff its Jaccard similarity to
    the answer and to every accepted span stays at or below the thresholds;
    both thresholds relax by relax_step (capped at 1.0) on underfill."""
    ordered = sorted(candidates, key=lambda c: -c.score)[: cfg.top_n]
    answer_set = token_set(answer)

    def accepts(cand_set, accepted_sets, thresholds):
        pair_max, answer_max = thresholds
        if jaccard_similarity(cand_set, answer_set) > answer_max:
            return False
        return all(jaccard_similarity(cand_set, other) <= pair_max for other in accepted_sets)

    def relax(thresholds):
        pair_max, answer_max = thresholds
        if pair_max >= 1.0 and answer_max >= 1.0:
            return None
        return min(pair_max + cfg.relax_step, 1.0), min(answer_max + cfg.relax_step, 1.0)

    return _greedy_select(ordered, answer, cfg.pick, accepts, relax,
                          initial=(cfg.max_pair_sim, cfg.max_answer_sim))


def select_generated(candidates: list[CandidateSpan], answer: str,
                     cfg: GenerationSelectConfig) -> SelectionResult:
    """Greedy pick in beam order: accept a candidate iff its Jaccard distance
    to every accepted one strictly exceeds the threshold; the threshold drops
    by relax_step (floored at 0.0) on underfill."""
    ordered = list(candidates)[: cfg.beam]

    def accepts(cand_set, accepted_sets, thresholds):
        min_dist = thresholds[0]
        return all(jaccard_distance(cand_set, other) > min_dist for other in accepted_sets)

    def relax(thresholds):
        min_dist = thresholds[0]
        if min_dist <= 0.0:
            return None
        return max(min_dist - cfg.relax_step, 0.0), None

    return _greedy_select(ordered, answer, cfg.pick, accepts, relax,
                          initial=(cfg.min_pair_distance, None))


def replace_distractors(ex: McrcExample, new3: list[str],
                        attack: str = EXTRACTION_NAME,
                        seed: int = 0) -> tuple[McrcExample, PerturbationRecord]:
    """Swap the three non-answer options for new3 (in order); the answer keeps
    its original slot. Rejects any replacement equal to the answer text."""
    if len(new3) != 3:
        raise ValueError(f"expected exactly 3 replacement distractors, got {len(new3)}")
    for text in new3:
        if _is_answer_copy(text, ex.answer_text):
            raise ValueError(f"replacement distractor equals the answer: {text!r}")

    record = PerturbationRecord(example_id=ex.id, attack=attack,
                                seed=derive_seed(seed, ex.id, attack))
    out = ex
    for slot, text in zip(ex.distractor_indices(), new3):
        old = ex.options[slot]
        if old == text:
            continue
        out = out.with_component(f"option_{slot}", text)
        record.edits.append(
            Edit(component=f"option_{slot}", original_text=old, new_text=text, char_offset=0)
        )
    return out, record


def _fill_from_originals(picked: list[str], ex: McrcExample) -> list[str]:
    """Underfill fallback: complete the triple with original distractors."""
    filled = list(picked)
    originals = [ex.options[k] for k in ex.distractor_indices()]
    taken = {t.strip().lower() for t in filled}
    for text in originals:
        if len(filled) >= 3:
            break
        if text.strip().lower() not in taken:
            filled.append(text)
            taken.add(text.strip().lower())
    for text in originals:  # degenerate corner: originals collide with picks
        if len(filled) >= 3:
            break
        filled.append(text)
    return filled


def _apply_distractor_attack(
    ex: McrcExample,
    provider,
    mode: str,
    attack: str,
    beam: int,
    select,
    seed: int,
    warnings: list[str] | None,
) -> tuple[McrcExample, PerturbationRecord]:
    candidates = provider.distractors(
        passage=ex.passage,
        question=ex.question,
        answer=ex.answer_text,
        mode=mode,
        beam=beam,
        request_id=f"{ex.id}#{mode}",
    )
    result = select(candidates)
    if result.underfilled:
        if warnings is not None:
            warnings.append(
                f"{ex.id}: only {len(result.texts)} usable {mode} candidates; "
                "filled remaining slots from original distractors"
            )
        new3 = _fill_from_originals(result.texts, ex)
    else:
        new3 = result.texts
    return replace_distractors(ex, new3, attack=attack, seed=seed)


def apply_distractor_extraction(
    ex: McrcExample,
    provider,
    cfg: ExtractionSelectConfig,
    seed: int = 0,
    warnings: list[str] | None = None,
) -> tuple[McrcExample, PerturbationRecord]:
    return _apply_distractor_attack(
        ex, provider, "extract", EXTRACTION_NAME, cfg.top_n,
        lambda cands: select_extracted(cands, ex.answer_text, cfg), seed, warnings,
    )


def apply_distractor_generation(
    ex: McrcExample,
    provider,
    cfg: GenerationSelectConfig,
    seed: int = 0,
    warnings: list[str] | None = None,
) -> tuple[McrcExample, PerturbationRecord]:
    return _apply_distractor_attack(
        ex, provider, "generate", GENERATION_NAME, cfg.beam,
        lambda cands: select_generated(cands, ex.answer_text, cfg), seed, warnings,
    )
