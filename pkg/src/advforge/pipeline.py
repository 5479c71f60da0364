"""Corpus-level perturbation runs: per-example derived seeds, optional worker
pool (output order is input order regardless of job count), provenance and a
reproduction manifest next to every emitted dataset."""

from __future__ import annotations

import json
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import ATTACK_NAMES, __version__
from .attacks.addsent import AddSentConfig, QuestionPool, apply_addsent
from .attacks.charswap import CharSwapConfig, apply_charswap
from .attacks.distractors import (
    ExtractionSelectConfig,
    GenerationSelectConfig,
    apply_distractor_extraction,
    apply_distractor_generation,
)
from .attacks.paraphrase import apply_paraphrase
from .compose import SuperimposedConfig, apply_superimposed
from .corpus import Dataset, McrcExample, PerturbationRecord, save_dataset, save_provenance
from .datapaths import file_sha256
from .provider import open_provider
from .resources import Resources

PROVIDER_ATTACKS = frozenset(
    {"paraphrase", "superimposed", "distractor_extraction", "distractor_generation"}
)


@dataclass
class PerturbConfig:
    seed: int = 0
    jobs: int = 1
    rounds: int = 2
    insertion_policy: str = "sentence_boundary"
    extraction: ExtractionSelectConfig = field(default_factory=ExtractionSelectConfig)
    generation: GenerationSelectConfig = field(default_factory=GenerationSelectConfig)
    provider_spec: str | None = None
    provider_timeout_ms: int = 30_000

    def addsent(self) -> AddSentConfig:
        return AddSentConfig(rounds=self.rounds, seed=self.seed,
                             insertion_policy=self.insertion_policy)

    def charswap(self, include_question: bool = True) -> CharSwapConfig:
        return CharSwapConfig(seed=self.seed, include_question=include_question)

    def superimposed(self) -> SuperimposedConfig:
        return SuperimposedConfig(seed=self.seed, addsent=self.addsent(),
                                  charswap=self.charswap())


class _ProviderPool:
    """One provider per worker thread; created lazily, closed together."""

    def __init__(self, spec: str | None, timeout_ms: int):
        self.spec = spec
        self.timeout_ms = timeout_ms
        self._local = threading.local()
        self._all: list = []
        self._lock = threading.Lock()

    def get(self):
        if self.spec is None:
            return None
        provider = getattr(self._local, "provider", None)
        if provider is None:
            provider = open_provider(self.spec, timeout_ms=self.timeout_ms)
            self._local.provider = provider
            with self._lock:
                self._all.append(provider)
        return provider

    def close(self) -> None:
        with self._lock:
            for provider in self._all:
                provider.close()
            self._all.clear()


def perturb_dataset(
    dataset: Dataset,
    attack: str,
    resources: Resources,
    cfg: PerturbConfig,
    warnings: list[str] | None = None,
) -> tuple[Dataset, list[PerturbationRecord]]:
    if attack not in ATTACK_NAMES:
        raise ValueError(f"unknown attack {attack!r}; expected one of {ATTACK_NAMES}")
    if attack in PROVIDER_ATTACKS and cfg.provider_spec is None:
        raise ValueError(f"attack {attack!r} needs a provider")

    pool = QuestionPool(dataset, resources.stopwords)
    providers = _ProviderPool(cfg.provider_spec, cfg.provider_timeout_ms)

    def transform(ex: McrcExample) -> tuple[McrcExample, PerturbationRecord, list[str]]:
        local_warnings: list[str] = []
        if attack == "addsent":
            out = apply_addsent(ex, pool, cfg.addsent(), resources, warnings=local_warnings)
        elif attack == "charswap":
            out = apply_charswap(ex, cfg.charswap(), resources, warnings=local_warnings)
        elif attack == "paraphrase":
            out = apply_paraphrase(ex, providers.get(), resources,
                                   warnings=local_warnings, seed=cfg.seed)
        elif attack == "superimposed":
            out = apply_superimposed(ex, pool, providers.get(), cfg.superimposed(),
                                     resources, warnings=local_warnings)
        elif attack == "distractor_extraction":
            out = apply_distractor_extraction(ex, providers.get(), cfg.extraction,
                                              seed=cfg.seed, warnings=local_warnings)
        else:
            out = apply_distractor_generation(ex, providers.get(), cfg.generation,
                                              seed=cfg.seed, warnings=local_warnings)
        return out[0], out[1], local_warnings

    try:
        if cfg.jobs <= 1:
            results = [transform(ex) for ex in dataset]
        else:
            with ThreadPoolExecutor(max_workers=cfg.jobs) as executor:
                results = list(executor.map(transform, dataset.examples))
    finally:
        providers.close()

    examples = [r[0] for r in results]
    records = [r[1] for r in results]
    if warnings is not None:
        for r in results:
            warnings.extend(r[2])
    perturbed = Dataset(name=f"{dataset.name}.{attack}", split=dataset.split,
                        examples=examples)
    return perturbed, records


def build_manifest(
    attack: str,
    dataset: Dataset,
    source_path: str | Path | None,
    resources: Resources,
    cfg: PerturbConfig,
) -> dict:
    manifest = {
        "schema": 1,
        "tool": "advforge",
        "version": __version__,
        "attack": attack,
        "global_seed": cfg.seed,
        "source": {
            "name": dataset.name,
            "split": dataset.split,
            "examples": len(dataset),
        },
        "resources": resources.hashes,
        "provider": cfg.provider_spec if attack in PROVIDER_ATTACKS else None,
        "options": {
            "rounds": cfg.rounds,
            "insertion_policy": cfg.insertion_policy,
            "extraction": {
                "top_n": cfg.extraction.top_n,
                "pick": cfg.extraction.pick,
                "max_pair_sim": cfg.extraction.max_pair_sim,
                "max_answer_sim": cfg.extraction.max_answer_sim,
                "relax_step": cfg.extraction.relax_step,
            },
            "generation": {
                "beam": cfg.generation.beam,
                "pick": cfg.generation.pick,
                "min_pair_distance": cfg.generation.min_pair_distance,
                "relax_step": cfg.generation.relax_step,
            },
        },
    }
    if source_path is not None:
        manifest["source"]["path"] = str(source_path)
        manifest["source"]["sha256"] = file_sha256(Path(source_path))
    return manifest


@dataclass
class PerturbRun:
    dataset_path: Path
    prov_path: Path
    manifest_path: Path
    records: list[PerturbationRecord]


def run_perturb_to_dir(
    dataset: Dataset,
    attack: str,
    out_dir: str | Path,
    resources: Resources,
    cfg: PerturbConfig,
    source_path: str | Path | None = None,
    warnings: list[str] | None = None,
) -> PerturbRun:
    """Write <attack>.jsonl, <attack>.jsonl.prov, and <attack>.manifest.json."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    perturbed, records = perturb_dataset(dataset, attack, resources, cfg, warnings=warnings)

    dataset_path = out_dir / f"{attack}.jsonl"
    prov_path = out_dir / f"{attack}.jsonl.prov"
    manifest_path = out_dir / f"{attack}.manifest.json"

    save_dataset(perturbed, dataset_path)
    save_provenance(
        records, prov_path, attack=attack, global_seed=cfg.seed,
        resource_hashes=resources.hashes,
        provider=cfg.provider_spec if attack in PROVIDER_ATTACKS else None,
    )
    manifest = build_manifest(attack, dataset, source_path, resources, cfg)
    with open(manifest_path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")
    return PerturbRun(dataset_path=dataset_path, prov_path=prov_path,
                      manifest_path=manifest_path, records=records)
