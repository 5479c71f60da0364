"""Corpus statistics recomputed from provenance: altered-word and
paraphrased-sentence fractions, insertion and distractor-replacement counts."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Dataset, PerturbationRecord
from .resources import Resources


@dataclass
class ProvenanceStats:
    examples: int
    word_tokens: int
    passage_sentences: int
    word_swap_edits: int
    sentence_edits: int
    insertions: int
    distractor_replacements: int

    @property
    def altered_word_fraction(self) -> float:
        return self.word_swap_edits / self.word_tokens if self.word_tokens else 0.0

    @property
    def paraphrased_sentence_fraction(self) -> float:
        return self.sentence_edits / self.passage_sentences if self.passage_sentences else 0.0

    def as_record(self) -> dict:
        return {
            "examples": self.examples,
            "word_tokens": self.word_tokens,
            "passage_sentences": self.passage_sentences,
            "word_swap_edits": self.word_swap_edits,
            "altered_word_fraction": round(self.altered_word_fraction, 4),
            "sentence_edits": self.sentence_edits,
            "paraphrased_sentence_fraction": round(self.paraphrased_sentence_fraction, 4),
            "insertions": self.insertions,
            "distractor_replacements": self.distractor_replacements,
        }


def _classify(original: str, new: str, component: str) -> str:
    if component.startswith("option_"):
        return "distractor"
    if original == "":
        return "insertion"
    if (
        len(original) == len(new)
        and original.isalpha()
        and sorted(original) == sorted(new)
    ):
        return "word_swap"
    return "sentence"


def compute_stats(
    dataset: Dataset, records: list[PerturbationRecord], resources: Resources
) -> ProvenanceStats:
    dataset_ids = {ex.id for ex in dataset}
    record_ids = {r.example_id for r in records}
    stray = sorted(record_ids - dataset_ids)
    if stray:
        raise ValueError(f"provenance ids not present in dataset: {', '.join(stray)}")

    word_tokens = 0
    passage_sentences = 0
    for ex in dataset:
        word_tokens += sum(1 for t in resources.tokenize(ex.passage) if t.is_word())
        word_tokens += sum(1 for t in resources.tokenize(ex.question) if t.is_word())
        passage_sentences += len(resources.sentences(ex.passage))

    counts = {"word_swap": 0, "sentence": 0, "insertion": 0, "distractor": 0}
    for record in records:
        for edit in record.edits:
            counts[_classify(edit.original_text, edit.new_text, edit.component)] += 1

    return ProvenanceStats(
        examples=len(dataset),
        word_tokens=word_tokens,
        passage_sentences=passage_sentences,
        word_swap_edits=counts["word_swap"],
        sentence_edits=counts["sentence"],
        insertions=counts["insertion"],
        distractor_replacements=counts["distractor"],
    )
