"""Resolution of the bundled data directory (ADVFORGE_RESOURCES overrides it)."""

import hashlib
import os
from pathlib import Path

ENV_VAR = "ADVFORGE_RESOURCES"

STOPWORDS_FILE = "stopwords.txt"
ABBREV_FILE = "abbrev.txt"
POS_LEXICON_FILE = "pos_lexicon.tsv"
EMBEDDINGS_FILE = "embeddings.txt"
ANTONYMS_FILE = "antonyms.tsv"


def data_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()
