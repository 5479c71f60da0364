"""advforge: adversarial perturbations and robustness scoring for multiple-choice MRC."""

__version__ = "0.1.0"

ATTACK_NAMES = (
    "addsent",
    "charswap",
    "paraphrase",
    "superimposed",
    "distractor_extraction",
    "distractor_generation",
)
