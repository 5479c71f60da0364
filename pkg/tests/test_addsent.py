import random

import pytest

from advforge.attacks.addsent import (
    AddSentConfig,
    QuestionPool,
    apply_addsent,
    distract_question,
)
from advforge.corpus import Dataset, McrcExample, undo_record
from advforge.seeding import derive_seed

from conftest import build_toy_resources


def planted_distortion_resources():
    """Toy resources reproducing the classic question-distortion shape:
    nouns hop to a planted neighbor, adjectives flip to an antonym."""
    vectors = {
        "following": [1.0, 0.0, 0.0],
        "leading": [0.99, 0.01, 0.0],
        "trailing": [0.97, 0.03, 0.0],
        "text": [0.0, 1.0, 0.0],
        "document": [0.01, 0.99, 0.0],
        "page": [0.03, 0.97, 0.0],
        "noise": [0.0, 0.0, 1.0],
    }
    lexicon = {w: "NOUN" for w in vectors}
    lexicon.update({"true": "ADJ", "is": "OTHER", "about": "OTHER", "homeschooling": "VERB",
                    "according": "VERB", "which": "OTHER", "of": "OTHER", "the": "OTHER",
                    "to": "OTHER"})
    return build_toy_resources(
        vectors=vectors,
        lexicon=lexicon,
        antonyms={("true", "ADJ"): ("false", "untrue")},
    )


def make_pool(questions):
    examples = [
        McrcExample(
            id=f"p{i}",
            passage="Filler passage one. Filler passage two.",
            question=q,
            options=("Opt a.", "Opt b.", "Opt c.", "Opt d."),
            answer_index=0,
        )
        for i, q in enumerate(questions)
    ]
    return Dataset(name="pool", split="test", examples=examples)


QUESTION = "Which of the following is TRUE about homeschooling according to the text?"


class TestDistractQuestion:
    def test_full_distortion_shape(self):
        res = planted_distortion_resources()
        pool = make_pool([QUESTION])
        altered, changed = distract_question(QUESTION, pool, random.Random(0), res)
        assert altered == (
            "Which of the leading is FALSE about homeschooling according to the document?"
        )
        assert changed == 3

    def test_second_rank_round(self):
        res = planted_distortion_resources()
        pool = make_pool([QUESTION])
        altered, changed = distract_question(
            QUESTION, pool, random.Random(0), res, choice_rank=1
        )
        assert altered == (
            "Which of the trailing is UNTRUE about homeschooling according to the page?"
        )
        assert changed == 3

    def test_casing_transfer_all_caps(self):
        res = planted_distortion_resources()
        altered, _ = distract_question(QUESTION, make_pool([]), random.Random(0), res)
        assert "FALSE" in altered and "false" not in altered

    def test_unchanged_question_samples_same_class(self):
        res = planted_distortion_resources()
        pool = make_pool(["What is it about?", "What is the unknownword?"])
        altered, changed = distract_question(
            "What is it about?", pool, random.Random(3), res
        )
        assert changed == 0
        assert altered == "What is the unknownword?"

    def test_blank_class_sampling(self):
        res = planted_distortion_resources()
        pool = make_pool(["How many _ ?", "The bird flew every _ .", "Why though?"])
        altered, changed = distract_question("How many _ ?", pool, random.Random(1), res)
        assert changed == 0
        assert altered == "The bird flew every _ ."

    def test_no_same_class_candidate_warns_and_keeps(self):
        res = planted_distortion_resources()
        pool = make_pool(["Why though?"])
        warnings = []
        altered, changed = distract_question(
            "What is it about?", pool, random.Random(0), res, warnings=warnings
        )
        assert (altered, changed) == ("What is it about?", 0)
        assert len(warnings) == 1


def fixture_example():
    return McrcExample(
        id="as1",
        passage="The following text sits here. Another sentence follows it. A third one ends the passage.",
        question=QUESTION,
        options=(
            "The right answer.",
            "First wrong option.",
            "Second wrong option.",
            "Third wrong option.",
        ),
        answer_index=0,
    )


class TestApplyAddSent:
    def test_label_preservation(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        out, _ = apply_addsent(ex, make_pool([QUESTION]), AddSentConfig(seed=11), res)
        assert out.question == ex.question
        assert out.options == ex.options
        assert out.answer_index == ex.answer_index

    def test_two_insertions_each_ending_in_distinct_distractor(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        _, record = apply_addsent(ex, make_pool([QUESTION]), AddSentConfig(seed=11), res)
        assert len(record.edits) == 2
        distractors = {ex.options[k] for k in ex.distractor_indices()}
        used = []
        for edit in record.edits:
            assert edit.original_text == ""
            inserted = edit.new_text.strip()
            tail = next((d for d in distractors if inserted.endswith(d)), None)
            assert tail is not None
            used.append(tail)
        assert used[0] != used[1]

    def test_rounds_one_single_insertion_and_undo(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        out, record = apply_addsent(
            ex, make_pool([QUESTION]), AddSentConfig(seed=11, rounds=1), res
        )
        assert len(record.edits) == 1
        assert undo_record(out, record) == ex

    def test_undo_two_rounds(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        out, record = apply_addsent(ex, make_pool([QUESTION]), AddSentConfig(seed=11), res)
        assert undo_record(out, record) == ex

    def test_deterministic(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        pool = make_pool([QUESTION])
        assert apply_addsent(ex, pool, AddSentConfig(seed=4), res) == apply_addsent(
            ex, pool, AddSentConfig(seed=4), res
        )

    def test_different_seeds_generally_differ(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        pool = make_pool([QUESTION])
        outs = {apply_addsent(ex, pool, AddSentConfig(seed=s), res)[0].passage for s in range(8)}
        assert len(outs) > 1

    def test_sentence_boundary_insertions_keep_sentences_intact(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        out, _ = apply_addsent(ex, make_pool([QUESTION]), AddSentConfig(seed=11), res)
        for original_sentence in (
            "The following text sits here.",
            "Another sentence follows it.",
            "A third one ends the passage.",
        ):
            assert original_sentence in out.passage

    def test_any_char_policy_undo(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        out, record = apply_addsent(
            ex, make_pool([QUESTION]),
            AddSentConfig(seed=11, insertion_policy="any_char"), res,
        )
        assert undo_record(out, record) == ex

    def test_record_seed_is_derived(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        _, record = apply_addsent(ex, make_pool([QUESTION]), AddSentConfig(seed=11), res)
        assert record.seed == derive_seed(11, ex.id, "addsent")

    def test_rounds_validation(self):
        with pytest.raises(ValueError):
            AddSentConfig(rounds=0)

    def test_step3_sampling_on_shipped_fixture(self, fixture_dataset, resources):
        # fx11's question is all function words under the shipped lexicon, so
        # both rounds fall through to same-class (what) sampling
        ex = fixture_dataset.by_id()["fx11"]
        what_questions = {
            other.question for other in fixture_dataset
            if other.id != "fx11" and other.question.startswith("What")
        }
        _, record = apply_addsent(ex, fixture_dataset, AddSentConfig(seed=42), resources)
        for edit in record.edits:
            prefix = edit.new_text.strip()
            assert any(prefix.startswith(q) for q in what_questions), prefix

    def test_question_pool_prebuilt_equivalent(self):
        res = planted_distortion_resources()
        ex = fixture_example()
        dataset = make_pool([QUESTION, "What is near?"])
        prebuilt = QuestionPool(dataset, res.stopwords)
        a = apply_addsent(ex, dataset, AddSentConfig(seed=2), res)
        b = apply_addsent(ex, prebuilt, AddSentConfig(seed=2), res)
        assert a == b
