"""Deterministic text primitives: tokenization, sentence splitting, overlap measures, coarse POS.

Everything here is a pure function of its inputs plus the shipped data files
(stopwords.txt, abbrev.txt, pos_lexicon.tsv). No models, no global mutable state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path

from .datapaths import ABBREV_FILE, POS_LEXICON_FILE, STOPWORDS_FILE, data_dir

NOUN = "NOUN"
VERB = "VERB"
ADJ = "ADJ"
ADV = "ADV"
NUM = "NUM"
PROPN = "PROPN"
OTHER = "OTHER"

COARSE_TAGS = frozenset({NOUN, VERB, ADJ, ADV, NUM, PROPN, OTHER})

# tags whose tokens AddSent replaces via embedding neighbors / antonyms
NEIGHBOR_TAGS = frozenset({NOUN, PROPN, NUM})
ANTONYM_TAGS = frozenset({ADJ, ADV, VERB})

_TERMINAL = ".!?"
_CLOSERS = "\"')]}’”"
_OPENERS = "\"'([{‘“"

_NUM_RE = re.compile(r"^[0-9][0-9,.\-/:]*$")
# an underscore run marks a fill-in-the-blank slot; guarded so snake_case does not count
_BLANK_RE = re.compile(r"_{2,}|(?<![0-9A-Za-z_])_(?![0-9A-Za-z_])")

_SUFFIX_TAGS = (
    ("tion", NOUN),
    ("sion", NOUN),
    ("ment", NOUN),
    ("ness", NOUN),
    ("ship", NOUN),
    ("ing", VERB),
    ("ed", VERB),
    ("ly", ADV),
    ("ful", ADJ),
    ("ous", ADJ),
    ("ive", ADJ),
    ("al", ADJ),
)


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    is_stopword: bool = False
    coarse_pos: str = OTHER

    def is_word(self) -> bool:
        return self.surface.isalpha()


@dataclass(frozen=True)
class SentenceSpan:
    start: int
    end: int
    index: int

    def text_of(self, source: str) -> str:
        return source[self.start : self.end]


def _load_lines(path: Path) -> tuple[str, ...]:
    out = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return tuple(out)


@lru_cache(maxsize=8)
def _stopwords_from(path_str: str) -> frozenset[str]:
    return frozenset(_load_lines(Path(path_str)))


@lru_cache(maxsize=8)
def _abbreviations_from(path_str: str) -> frozenset[str]:
    return frozenset(w.lower().rstrip(".") for w in _load_lines(Path(path_str)))


@lru_cache(maxsize=8)
def _lexicon_from(path_str: str) -> dict[str, str]:
    lexicon: dict[str, str] = {}
    for line in _load_lines(Path(path_str)):
        word, _, tag = line.partition("\t")
        if not tag:
            raise ValueError(f"malformed lexicon line (expected word<TAB>tag): {line!r}")
        tag = tag.strip()
        if tag not in COARSE_TAGS:
            raise ValueError(f"unknown coarse tag {tag!r} for word {word!r}")
        lexicon.setdefault(word, tag)
    return lexicon


def default_stopwords() -> frozenset[str]:
    return _stopwords_from(str(data_dir() / STOPWORDS_FILE))


def default_abbreviations() -> frozenset[str]:
    return _abbreviations_from(str(data_dir() / ABBREV_FILE))


def default_lexicon() -> dict[str, str]:
    return _lexicon_from(str(data_dir() / POS_LEXICON_FILE))


def _is_wordchar(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def tokenize(text: str, stopwords: frozenset[str] | None = None) -> list[Token]:
    """Split text into offset-exact tokens.

    Whitespace separates chunks; leading/trailing punctuation is detached one
    character at a time; internal characters (hyphens, apostrophes) stay put.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    tokens: list[Token] = []

    def emit(start: int, end: int) -> None:
        surface = text[start:end]
        tokens.append(
            Token(surface=surface, start=start, end=end, is_stopword=surface.lower() in stopwords)
        )

    for m in re.finditer(r"\S+", text):
        chunk, base = m.group(), m.start()
        i, j = 0, len(chunk)
        while i < j and not _is_wordchar(chunk[i]):
            emit(base + i, base + i + 1)
            i += 1
        trailing = []
        while j > i and not _is_wordchar(chunk[j - 1]):
            trailing.append((base + j - 1, base + j))
            j -= 1
        if i < j:
            emit(base + i, base + j)
        for start, end in reversed(trailing):
            emit(start, end)
    return tokens


def _preceding_word(text: str, punct_start: int) -> str:
    """Token immediately before a period, dots included (so "e.g" matches the list)."""
    k = punct_start
    while k > 0 and (text[k - 1].isalnum() or text[k - 1] in ".-'"):
        k -= 1
    return text[k:punct_start].rstrip(".")


def split_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[SentenceSpan]:
    """Sentence spans covering all non-whitespace text.

    A boundary is a run of terminal punctuation followed by whitespace and a
    capital letter, unless the preceding token is a known abbreviation or a
    single uppercase initial.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()

    breaks: list[tuple[int, int]] = []  # (sentence_end, next_start)
    for m in re.finditer(rf"[{re.escape(_TERMINAL)}]+[{re.escape(_CLOSERS)}]*", text):
        end = m.end()
        j = end
        while j < len(text) and text[j].isspace():
            j += 1
        if j == end or j >= len(text):
            continue
        k = j
        while k < len(text) and text[k] in _OPENERS:
            k += 1
        if k >= len(text) or not text[k].isupper():
            continue
        if m.group() == ".":
            word = _preceding_word(text, m.start())
            if word and (word.lower() in abbreviations or (len(word) == 1 and word.isupper())):
                continue
        breaks.append((end, j))

    spans: list[SentenceSpan] = []
    cursor = 0
    while cursor < len(text) and text[cursor].isspace():
        cursor += 1

    def push(start: int, end: int) -> None:
        while end > start and text[end - 1].isspace():
            end -= 1
        if end > start:
            spans.append(SentenceSpan(start=start, end=end, index=len(spans)))

    for sent_end, next_start in breaks:
        if sent_end <= cursor:
            continue
        push(cursor, sent_end)
        cursor = next_start
    push(cursor, len(text))
    return spans


def token_set(text: str, stopwords: frozenset[str] | None = None) -> set[str]:
    """Lowercased surfaces of tokens that carry at least one alphanumeric character."""
    return {
        t.surface.lower()
        for t in tokenize(text, stopwords)
        if any(ch.isalnum() for ch in t.surface)
    }


def jaccard_similarity(a: set[str], b: set[str]) -> float:
    if not a and not b:
        return 1.0
    union = a | b
    return len(a & b) / len(union)


def jaccard_distance(a: set[str], b: set[str]) -> float:
    if not a and not b:
        return 0.0
    return 1.0 - jaccard_similarity(a, b)


def content_words(tokens: list[Token]) -> set[str]:
    return {
        t.surface.lower()
        for t in tokens
        if not t.is_stopword and any(ch.isalnum() for ch in t.surface)
    }


def content_overlap(a: list[Token], b: list[Token]) -> bool:
    """True iff the two token lists share a lowercased non-stopword surface."""
    return bool(content_words(a) & content_words(b))


def _suffix_tag(word: str) -> str | None:
    for suffix, tag in _SUFFIX_TAGS:
        if word.endswith(suffix) and len(word) - len(suffix) >= 3:
            return tag
    return None


def tag_pos(tokens: list[Token], lexicon: dict[str, str] | None = None) -> list[Token]:
    """Fill coarse_pos deterministically: numeric pattern, lexicon (case-sensitive
    then lowercase), mid-sentence capitalization for unknown words, suffix rules.
    """
    if lexicon is None:
        lexicon = default_lexicon()

    tagged: list[Token] = []
    sentence_initial = True
    for tok in tokens:
        surface = tok.surface
        tag = OTHER
        if _NUM_RE.match(surface):
            tag = NUM
        elif surface in lexicon:
            tag = lexicon[surface]
        elif surface.lower() in lexicon:
            tag = lexicon[surface.lower()]
        elif surface[:1].isalpha():
            if surface[0].isupper() and not sentence_initial:
                tag = PROPN
            else:
                tag = _suffix_tag(surface.lower()) or OTHER
        tagged.append(replace(tok, coarse_pos=tag))

        if surface.isalnum() or "_" in surface:
            sentence_initial = False
        elif surface and surface[-1] in _TERMINAL:
            sentence_initial = True
    return tagged


def has_blank_marker(text: str) -> bool:
    """Detect the fill-in-the-blank underscore run."""
    return _BLANK_RE.search(text) is not None


WH_WORDS = ("what", "who", "whom", "when", "where", "why", "which", "how")


def question_class(question: str, stopwords: frozenset[str] | None = None) -> str | None:
    """Question-word class used for same-class sampling: a wh-word, "blank", or None."""
    if has_blank_marker(question):
        return "blank"
    for tok in tokenize(question, stopwords):
        lower = tok.surface.lower()
        if lower in WH_WORDS:
            return lower
    return None
