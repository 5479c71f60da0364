"""Paraphrase attack: replace passage sentences that share content words with
the question or options by provider-generated paraphrases; questions and
options are never touched."""

from __future__ import annotations

from ..corpus import Edit, McrcExample, PerturbationRecord
from ..provider import CandidateSpan
from ..resources import Resources
from ..seeding import derive_seed

ATTACK_NAME = "paraphrase"


def select_sentences(ex: McrcExample, resources: Resources) -> list[int]:
    """Indices of passage sentences with content-word overlap against the
    question or any option, ascending."""
    from ..textkit import content_overlap

    question_tokens = resources.tokenize(ex.question)
    option_tokens = [resources.tokenize(opt) for opt in ex.options]
    selected = []
    for span in resources.sentences(ex.passage):
        sentence_tokens = resources.tokenize(span.text_of(ex.passage))
        if content_overlap(sentence_tokens, question_tokens) or any(
            content_overlap(sentence_tokens, opts) for opts in option_tokens
        ):
            selected.append(span.index)
    return selected


def _best_candidate(candidates: list[CandidateSpan], source: str) -> str | None:
    """Highest-scoring candidate, ties broken by response order; empty
    candidates and case-insensitive copies of the source are degenerate."""
    usable = [
        c for c in candidates
        if c.text.strip() and c.text.strip().lower() != source.strip().lower()
    ]
    if not usable:
        return None
    best = usable[0]
    for cand in usable[1:]:
        if cand.score > best.score:
            best = cand
    return best.text


def apply_paraphrase(
    ex: McrcExample,
    provider,
    resources: Resources,
    warnings: list[str] | None = None,
    seed: int = 0,
) -> tuple[McrcExample, PerturbationRecord]:
    # the transform is deterministic given the provider; the seed only labels
    # the provenance record for uniformity with the seeded attacks
    record = PerturbationRecord(
        example_id=ex.id, attack=ATTACK_NAME,
        seed=derive_seed(seed, ex.id, ATTACK_NAME),
    )
    spans = resources.sentences(ex.passage)
    selected = set(select_sentences(ex, resources))

    passage = ex.passage
    shift = 0
    for span in spans:
        if span.index not in selected:
            continue
        source = span.text_of(ex.passage)
        candidates = provider.paraphrase(source, request_id=f"{ex.id}#s{span.index}")
        replacement = _best_candidate(candidates, source)
        if replacement is None:
            if warnings is not None:
                warnings.append(
                    f"{ex.id}: no usable paraphrase for sentence {span.index}; kept original"
                )
            continue
        offset = span.start + shift
        passage = passage[:offset] + replacement + passage[offset + len(source) :]
        record.edits.append(
            Edit(component="passage", original_text=source,
                 new_text=replacement, char_offset=offset)
        )
        shift += len(replacement) - len(source)

    return ex.with_component("passage", passage), record
