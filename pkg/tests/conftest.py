import sys
from pathlib import Path

import numpy as np
import pytest

from advforge.corpus import Dataset, load_dataset
from advforge.provider import CandidateSpan, IdentityProvider
from advforge.resources import AntonymTable, EmbeddingStore, Resources, load_resources

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_PATH = DATA_DIR / "fixture.jsonl"
RACE_DIR = DATA_DIR / "race"
RACE_IRREGULAR_DIR = DATA_DIR / "race_irregular"
RACE_MALFORMED_DIR = DATA_DIR / "race_malformed"

FAKE_PROVIDER = Path(__file__).parent / "fake_provider.py"


def fake_provider_spec(*flags: str) -> str:
    return "exec:" + " ".join([sys.executable, str(FAKE_PROVIDER), *flags])


@pytest.fixture(scope="session")
def resources() -> Resources:
    return load_resources()


@pytest.fixture(scope="session")
def fixture_dataset() -> Dataset:
    return load_dataset(FIXTURE_PATH)


@pytest.fixture()
def identity_provider() -> IdentityProvider:
    return IdentityProvider()


def build_toy_resources(
    vectors: dict[str, list[float]] | None = None,
    lexicon: dict[str, str] | None = None,
    antonyms: dict[tuple[str, str], tuple[str, ...]] | None = None,
    stopwords: frozenset[str] | None = None,
) -> Resources:
    """Hand-sized Resources for unit tests with exactly known contents."""
    vectors = vectors or {"cat": [1.0, 0.0], "dog": [0.9, 0.1], "car": [0.0, 1.0]}
    lexicon = lexicon if lexicon is not None else {w: "NOUN" for w in vectors}
    words = list(vectors)
    store = EmbeddingStore(
        words=words,
        vectors=np.array([vectors[w] for w in words], dtype=np.float64),
        dim=len(next(iter(vectors.values()))),
        word_pos=lexicon,
    )
    return Resources(
        stopwords=stopwords if stopwords is not None else frozenset(
            {"the", "a", "an", "of", "is", "to", "about", "it", "all", "what", "which", "how"}
        ),
        abbreviations=frozenset({"mr", "mrs", "dr"}),
        lexicon=lexicon,
        embeddings=store,
        antonyms=AntonymTable(entries=antonyms or {}),
        hashes={},
    )


class ScriptedProvider:
    """In-process provider driven by canned responses, for exact unit tests.

    paraphrase_map: source text -> list[CandidateSpan] (default: empty list)
    distractor_cands: list[CandidateSpan] returned for every distractors call
    """

    tasks = frozenset({"paraphrase", "distractors"})
    spec = "scripted"

    def __init__(self, paraphrase_map=None, distractor_cands=None, default=None):
        self.paraphrase_map = paraphrase_map or {}
        self.distractor_cands = distractor_cands or []
        self.default = default
        self.requests: list[dict] = []

    def paraphrase(self, text, request_id, template=None, beam=None):
        self.requests.append({"task": "paraphrase", "text": text, "id": request_id})
        if text in self.paraphrase_map:
            return list(self.paraphrase_map[text])
        if self.default == "echo":
            return [CandidateSpan(text=text, score=1.0)]
        return []

    def distractors(self, passage, question, answer, mode, beam, request_id):
        self.requests.append({"task": "distractors", "mode": mode, "id": request_id})
        return list(self.distractor_cands)[:beam]

    def close(self):
        pass
