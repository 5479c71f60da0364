"""Lexical resources: word-embedding store with POS-constrained nearest-neighbor
lookup, and the antonym table. Both load once and are immutable afterwards."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import textkit
from .datapaths import (
    ABBREV_FILE,
    ANTONYMS_FILE,
    EMBEDDINGS_FILE,
    POS_LEXICON_FILE,
    STOPWORDS_FILE,
    data_dir,
    file_sha256,
)

# Suffixes stripped (longest first, one strip, stem must keep >= 3 chars) when
# excluding same-stem neighbor candidates.
STEM_SUFFIXES = ("tion", "ment", "ness", "ing", "est", "ful", "ous", "es", "ed", "ly", "er", "s")


def stem(word: str) -> str:
    lower = word.lower()
    for suffix in STEM_SUFFIXES:
        if lower.endswith(suffix) and len(lower) - len(suffix) >= 3:
            return lower[: -len(suffix)]
    return lower


class ResourceError(ValueError):
    """A shipped resource file is malformed."""


@dataclass
class EmbeddingStore:
    words: list[str]
    vectors: np.ndarray  # (V, dim) float64
    dim: int
    word_pos: dict[str, str]
    index: dict[str, int] = field(init=False)
    norms: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        if len(self.words) != len(set(self.words)):
            raise ResourceError("embedding vocabulary contains duplicate words")
        if self.vectors.shape != (len(self.words), self.dim):
            raise ResourceError(
                f"vector matrix {self.vectors.shape} does not match "
                f"{len(self.words)} words x {self.dim} dims"
            )
        self.index = {w: i for i, w in enumerate(self.words)}
        self.norms = np.linalg.norm(self.vectors, axis=1)
        if not np.all(self.norms > 0):
            raise ResourceError("embedding store contains a zero vector")
        # lazy query-acceleration state; results stay bit-identical to a scan
        self._pos_masks: dict[str, np.ndarray] = {}
        self._stem_groups: dict[str, list[int]] = {}
        self._lower_groups: dict[str, list[int]] = {}
        self._groups_built = False
        self._build_lock = threading.Lock()
        self._query_cache: dict[tuple[str, str, int], tuple[str, ...]] = {}

    def lookup(self, word: str) -> int | None:
        """Case-sensitive lookup with lowercase fallback."""
        idx = self.index.get(word)
        if idx is None:
            idx = self.index.get(word.lower())
        return idx

    def _build_groups(self) -> None:
        with self._build_lock:
            if self._groups_built:
                return
            for i, word in enumerate(self.words):
                pos = self.word_pos.get(word)
                if pos is not None:
                    if pos not in self._pos_masks:
                        self._pos_masks[pos] = np.zeros(len(self.words), dtype=bool)
                    self._pos_masks[pos][i] = True
                self._stem_groups.setdefault(stem(word), []).append(i)
                self._lower_groups.setdefault(word.lower(), []).append(i)
            self._groups_built = True

    def candidate_mask(self, word: str, pos: str) -> np.ndarray:
        """Candidates with word_pos == pos, excluding the word itself, its case
        variants, and words sharing its stem."""
        if not self._groups_built:
            self._build_groups()
        pos_mask = self._pos_masks.get(pos)
        if pos_mask is None:
            return np.zeros(len(self.words), dtype=bool)
        mask = pos_mask.copy()
        mask[self._stem_groups.get(stem(word), [])] = False
        mask[self._lower_groups.get(word.lower(), [])] = False
        exact = self.index.get(word)
        if exact is not None:
            mask[exact] = False
        return mask

    @classmethod
    def load(cls, path: str | Path, word_pos: dict[str, str]) -> "EmbeddingStore":
        words: list[str] = []
        rows: list[list[float]] = []
        dim: int | None = None
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                parts = line.split()
                if not parts:
                    continue
                word, coords = parts[0], parts[1:]
                if dim is None:
                    dim = len(coords)
                    if dim == 0:
                        raise ResourceError(f"{path}:{lineno}: no coordinates on first line")
                elif len(coords) != dim:
                    raise ResourceError(
                        f"{path}:{lineno}: expected {dim} coordinates, got {len(coords)}"
                    )
                words.append(word)
                rows.append([float(x) for x in coords])
        if dim is None:
            raise ResourceError(f"{path}: empty embedding file")
        return cls(words=words, vectors=np.array(rows, dtype=np.float64), dim=dim,
                   word_pos=word_pos)


def nearest_words(word: str, pos: str, store: EmbeddingStore, k: int = 1) -> list[str]:
    """Up to k nearest same-POS vocabulary words by cosine similarity, excluding
    the word itself, its case variants, and words sharing its stem. Ties break
    by vocabulary order (stable sort). Empty when the word is unknown."""
    cached = store._query_cache.get((word, pos, k))
    if cached is not None:
        return list(cached)
    idx = store.lookup(word)
    if idx is None:
        return []
    mask = store.candidate_mask(word, pos)
    if not mask.any():
        return []
    query = store.vectors[idx]
    sims = (store.vectors @ query) / (store.norms * float(np.linalg.norm(query)))
    sims[~mask] = -np.inf
    order = np.argsort(-sims, kind="stable")
    found = [store.words[i] for i in order[: min(k, int(mask.sum()))]]
    store._query_cache[(word, pos, k)] = tuple(found)
    return found


def nearest_word(word: str, pos: str, store: EmbeddingStore) -> str | None:
    found = nearest_words(word, pos, store, k=1)
    return found[0] if found else None


@dataclass
class AntonymTable:
    entries: dict[tuple[str, str], tuple[str, ...]]

    def __post_init__(self) -> None:
        for (lemma, pos), antonyms in self.entries.items():
            if lemma in antonyms:
                raise ResourceError(f"antonym table maps {lemma!r}/{pos} to itself")
            if not antonyms:
                raise ResourceError(f"antonym row for {lemma!r}/{pos} is empty")

    @classmethod
    def load(cls, path: str | Path) -> "AntonymTable":
        entries: dict[tuple[str, str], tuple[str, ...]] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise ResourceError(f"{path}:{lineno}: expected 3 tab-separated fields")
                lemma, pos, ants = parts
                key = (lemma, pos)
                if key in entries:
                    raise ResourceError(f"{path}:{lineno}: duplicate row for {key}")
                entries[key] = tuple(a for a in ants.split(",") if a)
        return cls(entries=entries)


def antonyms_of(word: str, pos: str, table: AntonymTable) -> tuple[str, ...]:
    return table.entries.get((word.lower(), pos), ())


def antonym_of(word: str, pos: str, table: AntonymTable) -> str | None:
    found = antonyms_of(word, pos, table)
    return found[0] if found else None


@dataclass
class Resources:
    """Everything the attacks need, loaded once from one directory."""

    stopwords: frozenset[str]
    abbreviations: frozenset[str]
    lexicon: dict[str, str]
    embeddings: EmbeddingStore
    antonyms: AntonymTable
    hashes: dict[str, str]

    def tokenize(self, text: str) -> list[textkit.Token]:
        return textkit.tokenize(text, self.stopwords)

    def tagged_tokens(self, text: str) -> list[textkit.Token]:
        return textkit.tag_pos(self.tokenize(text), self.lexicon)

    def sentences(self, text: str) -> list[textkit.SentenceSpan]:
        return textkit.split_sentences(text, self.abbreviations)


@lru_cache(maxsize=4)
def _load_resources(dir_str: str) -> Resources:
    directory = Path(dir_str)
    paths = {
        "stopwords": directory / STOPWORDS_FILE,
        "abbrev": directory / ABBREV_FILE,
        "pos_lexicon": directory / POS_LEXICON_FILE,
        "embeddings": directory / EMBEDDINGS_FILE,
        "antonyms": directory / ANTONYMS_FILE,
    }
    for name, p in paths.items():
        if not p.exists():
            raise ResourceError(f"missing resource file {p} ({name})")
    lexicon = textkit._lexicon_from(str(paths["pos_lexicon"]))
    return Resources(
        stopwords=textkit._stopwords_from(str(paths["stopwords"])),
        abbreviations=textkit._abbreviations_from(str(paths["abbrev"])),
        lexicon=lexicon,
        embeddings=EmbeddingStore.load(paths["embeddings"], lexicon),
        antonyms=AntonymTable.load(paths["antonyms"]),
        hashes={name: file_sha256(p) for name, p in sorted(paths.items())},
    )


def load_resources(directory: str | Path | None = None) -> Resources:
    return _load_resources(str(directory) if directory else str(data_dir()))
