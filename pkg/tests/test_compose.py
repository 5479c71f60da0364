from advforge.attacks.addsent import AddSentConfig, apply_addsent
from advforge.attacks.charswap import CharSwapConfig, apply_charswap
from advforge.attacks.paraphrase import apply_paraphrase
from advforge.compose import SuperimposedConfig, apply_superimposed
from advforge.corpus import undo_record
from advforge.provider import CandidateSpan, IdentityProvider

from conftest import ScriptedProvider


class TestSuperimposedConfig:
    def test_charswap_never_touches_question(self):
        cfg = SuperimposedConfig(seed=7, charswap=CharSwapConfig(include_question=True))
        assert cfg.charswap.include_question is False

    def test_stage_seeds_follow_global(self):
        cfg = SuperimposedConfig(seed=7, addsent=AddSentConfig(seed=123),
                                 charswap=CharSwapConfig(seed=456))
        assert cfg.addsent.seed == 7 and cfg.charswap.seed == 7


class TestApplySuperimposed:
    def test_composition_equivalence_on_fixture(self, fixture_dataset, resources):
        provider = IdentityProvider()
        cfg = SuperimposedConfig(seed=42)
        for ex in fixture_dataset:
            combined, record = apply_superimposed(
                ex, fixture_dataset, provider, cfg, resources
            )
            staged, _ = apply_paraphrase(ex, provider, resources, seed=42)
            staged, _ = apply_charswap(staged, cfg.charswap, resources)
            staged, _ = apply_addsent(staged, fixture_dataset, cfg.addsent, resources)
            assert combined == staged
            assert undo_record(combined, record) == ex

    def test_question_bit_identical(self, fixture_dataset, resources):
        cfg = SuperimposedConfig(seed=21)
        for ex in fixture_dataset:
            out, _ = apply_superimposed(
                ex, fixture_dataset, IdentityProvider(), cfg, resources
            )
            assert out.question == ex.question
            assert out.options == ex.options
            assert out.answer_index == ex.answer_index

    def test_degenerate_stages_equal_plain_addsent(self, fixture_dataset, resources):
        # identity paraphrase provider + an example with no charswap targets
        ex = fixture_dataset.examples[0]
        no_target = ex.with_component(
            "passage", "Completely unrelated words occupy territory. Nothing collides verbally."
        )
        cfg = SuperimposedConfig(seed=9)
        combined, _ = apply_superimposed(
            no_target, fixture_dataset, IdentityProvider(), cfg, resources
        )
        plain, _ = apply_addsent(no_target, fixture_dataset, cfg.addsent, resources)
        assert combined == plain

    def test_all_three_stages_visible(self, fixture_dataset, resources):
        ex = fixture_dataset.examples[0]
        provider = ScriptedProvider(
            paraphrase_map={
                "The city of Maplewood opened a community garden on Elm Street in 2019.": [
                    CandidateSpan("A community garden opened on Elm Street in 2019.", 1.0)
                ],
            }
        )
        out, record = apply_superimposed(
            ex, fixture_dataset, provider, SuperimposedConfig(seed=11), resources
        )
        kinds = {("insert" if e.original_text == "" else
                  "swap" if len(e.original_text) == len(e.new_text) else "sentence")
                 for e in record.edits}
        assert kinds == {"insert", "swap", "sentence"}
        assert undo_record(out, record) == ex

    def test_stage_order_edits_sequential(self, fixture_dataset, resources):
        # sentence replacements precede swaps precede insertions in the record
        ex = fixture_dataset.examples[0]
        provider = ScriptedProvider(
            paraphrase_map={
                "The city of Maplewood opened a community garden on Elm Street in 2019.": [
                    CandidateSpan("A community garden opened on Elm Street in 2019.", 1.0)
                ],
            }
        )
        _, record = apply_superimposed(
            ex, fixture_dataset, provider, SuperimposedConfig(seed=11), resources
        )

        def kind(e):
            if e.original_text == "":
                return 2
            return 1 if len(e.original_text) == len(e.new_text) else 0

        kinds = [kind(e) for e in record.edits]
        assert kinds == sorted(kinds)
