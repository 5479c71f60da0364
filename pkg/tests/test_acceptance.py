"""Acceptance suite: one test per release criterion, each printing a PASS/FAIL
line (run with -s to see them alongside the dots).

Reference values for the report arithmetic come from the published robustness
results table for four models; every bracketed drop and the average row must
be reproduced to within +/-0.05 (the slack of one-decimal printing).
"""

import random
import string
import time
from contextlib import contextmanager
from itertools import combinations
from pathlib import Path

import pytest

from advforge import ATTACK_NAMES
from advforge.attacks.addsent import AddSentConfig, apply_addsent
from advforge.attacks.charswap import CharSwapConfig, apply_charswap, swap_word
from advforge.attacks.distractors import (
    ExtractionSelectConfig,
    GenerationSelectConfig,
    select_extracted,
    select_generated,
)
from advforge.attacks.paraphrase import apply_paraphrase, select_sentences
from advforge.cli import main as cli_main
from advforge.compose import SuperimposedConfig, apply_superimposed
from advforge.corpus import load_dataset, load_provenance, undo_record
from advforge.harness import build_report
from advforge.provider import CandidateSpan, IdentityProvider
from advforge.resources import nearest_word, stem
from advforge.textkit import jaccard_distance, jaccard_similarity, token_set

from conftest import FIXTURE_PATH
from test_charswap import is_single_interior_transposition
from test_resources import brute_force_nearest


@contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE FAIL: {name}")
        raise
    print(f"\nACCEPTANCE PASS: {name}")


# --- criterion 1: reference-table arithmetic ---------------------------------

# per model: original accuracy, then per test set (accuracy, bracketed drop)
REFERENCE_TABLE = {
    "bert": {
        "original": 69.5,
        "addsent": (30.0, -56.8), "charswap": (48.8, -29.8), "paraphrase": (59.4, -14.5),
        "superimposed": (18.6, -73.2), "distractor_extraction": (32.0, -54.0),
        "distractor_generation": (55.5, -20.1), "average": (40.7, -41.4),
    },
    "roberta": {
        "original": 83.7,
        "addsent": (57.3, -31.5), "charswap": (69.4, -17.1), "paraphrase": (72.3, -13.6),
        "superimposed": (38.1, -54.5), "distractor_extraction": (47.5, -43.2),
        "distractor_generation": (67.7, -19.1), "average": (58.7, -29.9),
    },
    "xlnet": {
        "original": 79.9,
        "addsent": (51.4, -35.7), "charswap": (63.4, -20.7), "paraphrase": (68.2, -14.6),
        "superimposed": (36.4, -54.4), "distractor_extraction": (42.9, -46.3),
        "distractor_generation": (63.8, -20.2), "average": (54.4, -32.0),
    },
    "albert": {
        "original": 86.0,
        "addsent": (57.8, -32.8), "charswap": (73.0, -15.1), "paraphrase": (73.7, -14.3),
        "superimposed": (36.1, -58.0), "distractor_extraction": (50.7, -41.0),
        "distractor_generation": (69.9, -18.7), "average": (60.2, -30.0),
    },
}

TOLERANCE = 0.05


@pytest.mark.parametrize("model", sorted(REFERENCE_TABLE))
def test_acceptance_table_arithmetic(model):
    """Every bracketed drop and the average row reproduce to within +/-0.05.

    Known irreproducible cell: the xlnet average drop. The source table was
    computed from accuracies at higher precision than printed; from the printed
    one-decimal cells, no rounding convention yields both the roberta average
    drop (-29.9, which requires deriving from the one-decimal mean 58.7) and
    the xlnet average drop (-32.0, which requires the unrounded mean 54.35).
    The report derives from reported one-decimal values, matching roberta.
    """
    with criterion(f"table arithmetic reproduces the {model} column"):
        column = REFERENCE_TABLE[model]
        start = time.perf_counter()
        report = build_report(
            column["original"], {name: column[name][0] for name in ATTACK_NAMES}
        )
        elapsed = time.perf_counter() - start
        mismatches = []
        for row in report.rows:
            expected_acc, expected_drop = column[row.name]
            if abs(row.accuracy - expected_acc) > TOLERANCE:
                mismatches.append(f"{row.name} accuracy {row.accuracy} != {expected_acc}")
            if abs(row.drop - expected_drop) > TOLERANCE:
                mismatches.append(f"{row.name} drop {row.drop} != {expected_drop}")
        expected_acc, expected_drop = column["average"]
        if abs(report.average.accuracy - expected_acc) > TOLERANCE:
            mismatches.append(
                f"average accuracy {report.average.accuracy} != {expected_acc}"
            )
        if abs(report.average.drop - expected_drop) > TOLERANCE:
            mismatches.append(f"average drop {report.average.drop} != {expected_drop}")
        assert not mismatches, f"{model}: " + "; ".join(mismatches)
        assert elapsed < 1.0


# --- criterion 2: charswap property suite ------------------------------------

def test_acceptance_charswap_properties():
    with criterion("charswap transposition properties over 10,000 random words"):
        rng = random.Random(20240810)
        start = time.perf_counter()
        for _ in range(10_000):
            length = rng.randint(1, 16)
            word = "".join(rng.choice(string.ascii_letters) for _ in range(length))
            swapped = swap_word(word, rng)
            if length < 4:
                assert swapped == word
            else:
                assert sorted(swapped) == sorted(word), "not an anagram"
                assert swapped[0] == word[0] and swapped[-1] == word[-1]
                assert is_single_interior_transposition(word, swapped)
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, f"took {elapsed:.2f}s"


# --- criterion 3: CLI determinism --------------------------------------------

def _run_suite(out_dir: Path, jobs: int) -> dict[str, bytes]:
    code = cli_main([
        "perturb", "--in", str(FIXTURE_PATH), "--attack", "all",
        "--out", str(out_dir), "--seed", "42", "--provider", "identity",
        "--jobs", str(jobs),
    ])
    assert code == 0
    return {p.name: p.read_bytes() for p in sorted(out_dir.iterdir())}


def test_acceptance_cli_determinism(tmp_path):
    with criterion("perturb --attack all --seed 42 is byte-identical across runs and job counts"):
        first = _run_suite(tmp_path / "run1", jobs=1)
        second = _run_suite(tmp_path / "run2", jobs=1)
        eight = _run_suite(tmp_path / "run3", jobs=8)
        assert set(first) == set(second) == set(eight)
        expected = {"original.jsonl"}
        for attack in ATTACK_NAMES:
            expected |= {f"{attack}.jsonl", f"{attack}.jsonl.prov", f"{attack}.manifest.json"}
        assert set(first) == expected
        for name in first:
            assert first[name] == second[name], f"{name} differs between identical runs"
            assert first[name] == eight[name], f"{name} differs between --jobs 1 and --jobs 8"


# --- criterion 4: provenance undo --------------------------------------------

def test_acceptance_provenance_undo(tmp_path):
    with criterion("recorded edits undo every attack bit-exact on the fixture corpus"):
        out = tmp_path / "suite"
        assert cli_main([
            "perturb", "--in", str(FIXTURE_PATH), "--attack", "all",
            "--out", str(out), "--seed", "42", "--provider", "identity",
        ]) == 0
        source = {ex.id: ex for ex in load_dataset(FIXTURE_PATH)}
        for attack in ATTACK_NAMES:
            perturbed = load_dataset(out / f"{attack}.jsonl")
            _, records = load_provenance(out / f"{attack}.jsonl.prov")
            by_id = {r.example_id: r for r in records}
            assert set(by_id) == set(source)
            for ex in perturbed:
                restored = undo_record(ex, by_id[ex.id])
                assert restored == source[ex.id], f"{attack}/{ex.id} failed to undo"


# --- criterion 5: distractor-selection oracle --------------------------------

_ORACLE_WORDS = (
    "river stone cloud garden window teacher bridge market lantern harvest "
    "signal craft valley summer engine basket meadow copper november circle "
    "pencil shadow harbor castle timber barrel rocket anchor velvet thorn"
).split()


def _random_candidate_set(rng: random.Random):
    cands = [
        CandidateSpan(
            text=" ".join(rng.sample(_ORACLE_WORDS, rng.randint(2, 6))),
            score=1.0 - i * 0.01,
        )
        for i in range(20)
    ]
    answer = " ".join(rng.sample(_ORACLE_WORDS, 3))
    return cands, answer


def _oracle_satisfiable(cands, answer, *, pair_max=None, answer_max=None, dist_min=None):
    answer_tokens = token_set(answer)
    sets = [token_set(c.text) for c in cands]
    eligible = [
        i for i, c in enumerate(cands)
        if c.text.strip().lower() != answer.strip().lower()
        and (answer_max is None or jaccard_similarity(sets[i], answer_tokens) <= answer_max)
    ]
    checked = 0
    for triple in combinations(eligible, 3):
        checked += 1
        ok = True
        for i, j in combinations(triple, 2):
            if pair_max is not None and jaccard_similarity(sets[i], sets[j]) > pair_max:
                ok = False
                break
            if dist_min is not None and jaccard_distance(sets[i], sets[j]) <= dist_min:
                ok = False
                break
        if ok:
            return True
    return False


def test_acceptance_distractor_selection_oracle():
    with criterion("greedy distractor selection matches the exhaustive 3-subset oracle "
                   "on 200 random candidate sets"):
        ext_cfg = ExtractionSelectConfig()
        gen_cfg = GenerationSelectConfig(beam=20)
        start = time.perf_counter()
        for seed in range(200):
            rng = random.Random(seed * 7919 + 13)
            cands, answer = _random_candidate_set(rng)
            answer_tokens = token_set(answer)

            ext = select_extracted(cands, answer, ext_cfg)
            sets = [token_set(t) for t in ext.texts]
            for s in sets:
                assert jaccard_similarity(s, answer_tokens) <= ext.final_answer_threshold + 1e-12
            for a, b in combinations(sets, 2):
                assert jaccard_similarity(a, b) <= ext.final_pair_threshold + 1e-12
            if _oracle_satisfiable(cands, answer, pair_max=ext_cfg.max_pair_sim,
                                   answer_max=ext_cfg.max_answer_sim):
                assert not ext.underfilled, f"seed {seed}: greedy underfilled"
                assert ext.final_pair_threshold <= ext_cfg.max_pair_sim + ext_cfg.relax_step + 1e-12
                assert ext.final_answer_threshold <= ext_cfg.max_answer_sim + ext_cfg.relax_step + 1e-12

            gen = select_generated(cands, answer, gen_cfg)
            sets = [token_set(t) for t in gen.texts]
            for a, b in combinations(sets, 2):
                assert jaccard_distance(a, b) > gen.final_pair_threshold - 1e-12
            if _oracle_satisfiable(cands, answer, dist_min=gen_cfg.min_pair_distance):
                assert not gen.underfilled, f"seed {seed}: greedy underfilled (generation)"
                assert gen.final_pair_threshold >= gen_cfg.min_pair_distance - gen_cfg.relax_step - 1e-12
        elapsed = time.perf_counter() - start
        assert elapsed < 10.0, f"took {elapsed:.2f}s"


# --- criterion 6: addsent structure ------------------------------------------

def test_acceptance_addsent_structure(fixture_dataset, resources):
    with criterion("addsent inserts exactly 2 sequences per fixture example, each "
                   "ending in an original distractor; labels bit-identical"):
        cfg = AddSentConfig(seed=42)
        for ex in fixture_dataset:
            out, record = apply_addsent(ex, fixture_dataset, cfg, resources)
            assert out.question == ex.question
            assert out.options == ex.options
            assert out.answer_index == ex.answer_index
            insertions = [e for e in record.edits if e.original_text == ""]
            assert len(insertions) == 2
            distractors = {ex.options[k] for k in ex.distractor_indices()}
            tails = []
            for edit in insertions:
                tail = next(
                    (d for d in distractors if edit.new_text.strip().endswith(d)), None
                )
                assert tail is not None, f"{ex.id}: insertion does not end in a distractor"
                tails.append(tail)
            assert tails[0] != tails[1], f"{ex.id}: both rounds used the same distractor"


# --- criterion 7: paraphrase gating ------------------------------------------

class _ReversingProvider:
    """Paraphrases by reversing word order; used to prove the selection gate."""

    tasks = frozenset({"paraphrase"})

    def paraphrase(self, text, request_id, template=None, beam=None):
        words = text.rstrip(".").split()
        return [CandidateSpan(" ".join(reversed(words)) + ".", 1.0)]

    def close(self):
        pass


def test_acceptance_paraphrase_gating(fixture_dataset, resources):
    with criterion("identity provider yields the identity transform; non-overlapping "
                   "sentences stay bit-identical under any provider"):
        for ex in fixture_dataset:
            out, record = apply_paraphrase(ex, IdentityProvider(), resources)
            assert out == ex and record.edits == []

        for ex in fixture_dataset:
            selected = set(select_sentences(ex, resources))
            out, record = apply_paraphrase(ex, _ReversingProvider(), resources)
            in_spans = resources.sentences(ex.passage)
            shift = 0
            for span in in_spans:
                original = span.text_of(ex.passage)
                if span.index in selected:
                    edit = next(e for e in record.edits if e.original_text == original)
                    shift += len(edit.new_text) - len(edit.original_text)
                    continue
                start = span.start + shift
                assert out.passage[start : start + len(original)] == original, (
                    f"{ex.id}: unselected sentence {span.index} changed"
                )


# --- criterion 8: superimposed composition equivalence ------------------------

def test_acceptance_superimposed_composition(fixture_dataset, resources):
    with criterion("superimposed equals the manual paraphrase->charswap->addsent "
                   "pipeline byte-exact on the fixture corpus"):
        cfg = SuperimposedConfig(seed=42)
        provider = IdentityProvider()
        for ex in fixture_dataset:
            combined, _ = apply_superimposed(ex, fixture_dataset, provider, cfg, resources)
            staged, _ = apply_paraphrase(ex, provider, resources, seed=42)
            staged, _ = apply_charswap(
                staged, CharSwapConfig(seed=42, include_question=False), resources
            )
            staged, _ = apply_addsent(
                staged, fixture_dataset, AddSentConfig(seed=42), resources
            )
            assert combined.passage == staged.passage
            assert combined == staged


# --- criterion 9: nearest-word oracle ----------------------------------------

def test_acceptance_nearest_word_oracle(resources):
    with criterion("nearest_word equals brute-force cosine argmax on 1,000 random "
                   "queries against the shipped snapshot"):
        store = resources.embeddings
        rng = random.Random(424242)
        words = rng.sample(store.words, 1000)
        for word in words:
            pos = store.word_pos[word]
            fast = nearest_word(word, pos, store)
            slow = brute_force_nearest(word, pos, store)
            assert fast == slow, f"{word}/{pos}: {fast!r} != {slow!r}"
            if fast is not None:
                assert fast != word and stem(fast) != stem(word)
