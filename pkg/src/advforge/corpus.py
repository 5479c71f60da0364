"""Dataset model and I/O: RACE-format import, the native line-delimited dataset
format, and perturbation provenance records (with bit-exact undo)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import ATTACK_NAMES

SCHEMA_VERSION = 1

SPLITS = ("train", "dev", "test")

_ANSWER_LETTERS = {"A": 0, "B": 1, "C": 2, "D": 3}

OPTION_COMPONENTS = tuple(f"option_{k}" for k in range(4))
COMPONENTS = ("passage", "question") + OPTION_COMPONENTS


class DatasetFormatError(ValueError):
    """Malformed dataset, prediction, or provenance input."""


class ProvenanceError(ValueError):
    """A provenance record does not match the text it claims to describe."""


@dataclass(frozen=True)
class McrcExample:
    """One passage / question / 4-option record; the unit every attack transforms."""

    id: str
    passage: str
    question: str
    options: tuple[str, str, str, str]
    answer_index: int

    def __post_init__(self) -> None:
        if not self.id:
            raise DatasetFormatError("example id must be non-empty")
        if not self.passage.strip():
            raise DatasetFormatError(f"example {self.id}: passage must be non-empty")
        if not self.question.strip():
            raise DatasetFormatError(f"example {self.id}: question must be non-empty")
        if len(self.options) != 4:
            raise DatasetFormatError(
                f"example {self.id}: expected exactly 4 options, got {len(self.options)}"
            )
        if any(not opt.strip() for opt in self.options):
            raise DatasetFormatError(f"example {self.id}: options must be non-empty")
        if not 0 <= self.answer_index <= 3:
            raise DatasetFormatError(
                f"example {self.id}: answer_index {self.answer_index} out of range [0,3]"
            )

    @property
    def answer_text(self) -> str:
        return self.options[self.answer_index]

    def distractor_indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(4) if k != self.answer_index)

    def component_text(self, component: str) -> str:
        if component == "passage":
            return self.passage
        if component == "question":
            return self.question
        if component in OPTION_COMPONENTS:
            return self.options[int(component.split("_")[1])]
        raise ProvenanceError(f"unknown component {component!r}")

    def with_component(self, component: str, text: str) -> "McrcExample":
        if component == "passage":
            return McrcExample(self.id, text, self.question, self.options, self.answer_index)
        if component == "question":
            return McrcExample(self.id, self.passage, text, self.options, self.answer_index)
        if component in OPTION_COMPONENTS:
            k = int(component.split("_")[1])
            options = list(self.options)
            options[k] = text
            return McrcExample(
                self.id, self.passage, self.question, tuple(options), self.answer_index
            )
        raise ProvenanceError(f"unknown component {component!r}")


@dataclass
class Dataset:
    name: str
    split: str
    examples: list[McrcExample] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.split not in SPLITS:
            raise DatasetFormatError(f"split must be one of {SPLITS}, got {self.split!r}")
        seen: set[str] = set()
        for ex in self.examples:
            if ex.id in seen:
                raise DatasetFormatError(f"duplicate example id {ex.id!r}")
            seen.add(ex.id)

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self):
        return iter(self.examples)

    def by_id(self) -> dict[str, McrcExample]:
        return {ex.id: ex for ex in self.examples}


@dataclass(frozen=True)
class Edit:
    """One textual replacement. Offsets refer to the component text at the moment
    the edit was applied, so replaying edits in order reproduces the perturbed
    text and replaying them in reverse restores the original."""

    component: str
    original_text: str
    new_text: str
    char_offset: int


@dataclass
class PerturbationRecord:
    example_id: str
    attack: str
    seed: int
    edits: list[Edit] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.attack not in ATTACK_NAMES:
            raise DatasetFormatError(f"unknown attack name {self.attack!r}")


def apply_edit(text: str, edit: Edit) -> str:
    off = edit.char_offset
    found = text[off : off + len(edit.original_text)]
    if found != edit.original_text:
        raise ProvenanceError(
            f"edit mismatch in {edit.component} at {off}: "
            f"expected {edit.original_text!r}, found {found!r}"
        )
    return text[:off] + edit.new_text + text[off + len(edit.original_text) :]


def revert_edit(text: str, edit: Edit) -> str:
    off = edit.char_offset
    found = text[off : off + len(edit.new_text)]
    if found != edit.new_text:
        raise ProvenanceError(
            f"undo mismatch in {edit.component} at {off}: "
            f"expected {edit.new_text!r}, found {found!r}"
        )
    return text[:off] + edit.original_text + text[off + len(edit.new_text) :]


def undo_record(perturbed: McrcExample, record: PerturbationRecord) -> McrcExample:
    """Reconstruct the original example by reverting recorded edits in reverse order."""
    if perturbed.id != record.example_id:
        raise ProvenanceError(
            f"record for {record.example_id!r} applied to example {perturbed.id!r}"
        )
    current = perturbed
    for edit in reversed(record.edits):
        current = current.with_component(
            edit.component, revert_edit(current.component_text(edit.component), edit)
        )
    return current


# --- RACE-format import ------------------------------------------------------

def _require(record: dict, key: str, path: Path):
    if key not in record:
        raise DatasetFormatError(f"{path}: missing field {key!r}")
    return record[key]


def import_race(
    path: str | Path,
    name: str | None = None,
    split: str = "test",
    warnings: list[str] | None = None,
) -> Dataset:
    """Import RACE-format records (one JSON record per file, or a directory of them).

    Each record holds one article with parallel questions/options/answers lists.
    Example ids are "<file-id>-q<k>" with k counting questions from 0. Records
    whose option list is not exactly 4 long, or whose answer letter is outside
    A-D, are skipped with a collected warning instead of aborting the import.
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(p for p in path.rglob("*") if p.is_file())
    elif path.exists():
        files = [path]
    else:
        raise FileNotFoundError(f"no such RACE input: {path}")

    examples: list[McrcExample] = []
    for file_path in files:
        try:
            record = json.loads(file_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DatasetFormatError(f"{file_path}: invalid JSON ({exc})") from exc
        if not isinstance(record, dict):
            raise DatasetFormatError(f"{file_path}: expected a JSON object record")
        article = _require(record, "article", file_path)
        questions = _require(record, "questions", file_path)
        options = _require(record, "options", file_path)
        answers = _require(record, "answers", file_path)
        file_id = _require(record, "id", file_path)
        if not (len(questions) == len(options) == len(answers)):
            raise DatasetFormatError(
                f"{file_path}: questions/options/answers lengths differ "
                f"({len(questions)}/{len(options)}/{len(answers)})"
            )
        for k, (question, opts, answer) in enumerate(zip(questions, options, answers)):
            where = f"{file_path.name} question {k}"
            if not isinstance(question, str) or not question.strip():
                _warn(warnings, f"{where}: missing question text, skipped")
                continue
            if not isinstance(opts, list) or len(opts) != 4:
                _warn(warnings, f"{where}: expected 4 options, got "
                                f"{len(opts) if isinstance(opts, list) else type(opts).__name__}, skipped")
                continue
            if answer not in _ANSWER_LETTERS:
                _warn(warnings, f"{where}: answer {answer!r} not in A-D, skipped")
                continue
            examples.append(
                McrcExample(
                    id=f"{file_id}-q{k}",
                    passage=article,
                    question=question,
                    options=tuple(opts),
                    answer_index=_ANSWER_LETTERS[answer],
                )
            )
    return Dataset(name=name or path.stem, split=split, examples=examples)


def _warn(warnings: list[str] | None, message: str) -> None:
    if warnings is not None:
        warnings.append(message)


# --- native dataset format ----------------------------------------------------

def save_dataset(dataset: Dataset, path: str | Path) -> None:
    path = Path(path)
    header = {"schema": SCHEMA_VERSION, "name": dataset.name, "split": dataset.split}
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for ex in dataset.examples:
            fh.write(
                json.dumps(
                    {
                        "id": ex.id,
                        "passage": ex.passage,
                        "question": ex.question,
                        "options": list(ex.options),
                        "answer_index": ex.answer_index,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )


def load_dataset(path: str | Path) -> Dataset:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    if not lines:
        raise DatasetFormatError(f"{path}: empty dataset file")
    header = _parse_json_line(lines[0], path, 1)
    schema = header.get("schema")
    if schema != SCHEMA_VERSION:
        raise DatasetFormatError(
            f"{path}: unsupported schema version {schema!r} (this build reads {SCHEMA_VERSION})"
        )
    examples = []
    for lineno, line in enumerate(lines[1:], start=2):
        rec = _parse_json_line(line, path, lineno)
        try:
            examples.append(
                McrcExample(
                    id=rec["id"],
                    passage=rec["passage"],
                    question=rec["question"],
                    options=tuple(rec["options"]),
                    answer_index=rec["answer_index"],
                )
            )
        except KeyError as exc:
            raise DatasetFormatError(f"{path}:{lineno}: missing field {exc}") from exc
    return Dataset(name=header.get("name", path.stem), split=header.get("split", "test"),
                   examples=examples)


def _parse_json_line(line: str, path: Path, lineno: int) -> dict:
    try:
        value = json.loads(line)
    except json.JSONDecodeError as exc:
        raise DatasetFormatError(f"{path}:{lineno}: invalid JSON ({exc})") from exc
    if not isinstance(value, dict):
        raise DatasetFormatError(f"{path}:{lineno}: expected a JSON object")
    return value


# --- provenance format ---------------------------------------------------------

def save_provenance(
    records: list[PerturbationRecord],
    path: str | Path,
    attack: str,
    global_seed: int,
    resource_hashes: dict[str, str] | None = None,
    provider: str | None = None,
) -> None:
    header = {
        "schema": SCHEMA_VERSION,
        "attack": attack,
        "global_seed": global_seed,
        "resources": resource_hashes or {},
        "provider": provider,
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for rec in records:
            fh.write(
                json.dumps(
                    {
                        "example_id": rec.example_id,
                        "attack": rec.attack,
                        "seed": rec.seed,
                        "edits": [
                            {
                                "component": e.component,
                                "original_text": e.original_text,
                                "new_text": e.new_text,
                                "char_offset": e.char_offset,
                            }
                            for e in rec.edits
                        ],
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )


def load_provenance(path: str | Path) -> tuple[dict, list[PerturbationRecord]]:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    if not lines:
        raise DatasetFormatError(f"{path}: empty provenance file")
    header = _parse_json_line(lines[0], path, 1)
    if header.get("schema") != SCHEMA_VERSION:
        raise DatasetFormatError(
            f"{path}: unsupported schema version {header.get('schema')!r}"
        )
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        rec = _parse_json_line(line, path, lineno)
        try:
            records.append(
                PerturbationRecord(
                    example_id=rec["example_id"],
                    attack=rec["attack"],
                    seed=rec["seed"],
                    edits=[
                        Edit(
                            component=e["component"],
                            original_text=e["original_text"],
                            new_text=e["new_text"],
                            char_offset=e["char_offset"],
                        )
                        for e in rec["edits"]
                    ],
                )
            )
        except KeyError as exc:
            raise DatasetFormatError(f"{path}:{lineno}: missing field {exc}") from exc
    return header, records
