from .addsent import AddSentConfig, apply_addsent, distract_question
from .charswap import CharSwapConfig, apply_charswap, select_targets, swap_word
from .distractors import (
    ExtractionSelectConfig,
    GenerationSelectConfig,
    SelectionResult,
    apply_distractor_extraction,
    apply_distractor_generation,
    replace_distractors,
    select_extracted,
    select_generated,
    to_span_extraction,
)
from .paraphrase import apply_paraphrase, select_sentences

__all__ = [
    "AddSentConfig",
    "CharSwapConfig",
    "ExtractionSelectConfig",
    "GenerationSelectConfig",
    "SelectionResult",
    "apply_addsent",
    "apply_charswap",
    "apply_distractor_extraction",
    "apply_distractor_generation",
    "apply_paraphrase",
    "distract_question",
    "replace_distractors",
    "select_extracted",
    "select_generated",
    "select_sentences",
    "select_targets",
    "swap_word",
    "to_span_extraction",
]
