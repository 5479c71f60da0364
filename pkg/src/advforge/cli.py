"""Command-line interface.

Exit codes are a stable contract: 0 success, 2 usage or input problems,
3 provider/protocol failures, 4 I/O failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import ATTACK_NAMES, __version__
from .attacks.distractors import (
    ExtractionSelectConfig,
    GenerationSelectConfig,
    write_span_instances,
)
from .corpus import (
    Dataset,
    DatasetFormatError,
    import_race,
    load_dataset,
    load_provenance,
    save_dataset,
)
from .figures import render_report_figure
from .harness import (
    EvaluationError,
    build_report,
    load_predictions,
    render_text,
    score,
    to_records,
    write_records,
)
from .pipeline import PROVIDER_ATTACKS, PerturbConfig, run_perturb_to_dir
from .provider import ProviderError, open_provider
from .resources import ResourceError, load_resources
from .stats import compute_stats

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PROVIDER = 3
EXIT_IO = 4

ORIGINAL_SET = "original"


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="advforge",
        description="Apply label-preserving adversarial perturbations to "
                    "multiple-choice reading-comprehension datasets and score "
                    "model predictions across the resulting suite.",
    )
    parser.add_argument("--version", action="version", version=f"advforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_import = sub.add_parser("import", help="convert RACE-format records to the native format")
    p_import.add_argument("--race", required=True, help="RACE-format file or directory")
    p_import.add_argument("--out", required=True, help="native dataset file to write")
    p_import.add_argument("--name", default=None, help="dataset name (default: input stem)")
    p_import.add_argument("--split", default="test", choices=["train", "dev", "test"])

    p_perturb = sub.add_parser("perturb", help="generate perturbed test sets")
    p_perturb.add_argument("--in", dest="input", required=True, help="native dataset file")
    p_perturb.add_argument("--attack", required=True,
                           choices=list(ATTACK_NAMES) + ["all"])
    p_perturb.add_argument("--out", required=True, help="output directory")
    p_perturb.add_argument("--seed", type=int, default=0, help="global seed (u64)")
    p_perturb.add_argument("--provider", default=None,
                           help="provider spec: exec:<command>, http:<url>, or identity")
    p_perturb.add_argument("--provider-timeout-ms", type=int, default=30_000)
    p_perturb.add_argument("--jobs", type=int, default=0,
                           help="worker threads (0 = available parallelism)")
    p_perturb.add_argument("--rounds", type=int, default=2, help="AddSent insertion rounds")
    p_perturb.add_argument("--insertion-policy", default="sentence_boundary",
                           choices=["sentence_boundary", "any_char"])
    p_perturb.add_argument("--top-n", type=int, default=20,
                           help="extraction candidates considered")
    p_perturb.add_argument("--max-pair-sim", type=float, default=0.5)
    p_perturb.add_argument("--max-answer-sim", type=float, default=0.3)
    p_perturb.add_argument("--beam", type=int, default=50,
                           help="generation candidates considered")
    p_perturb.add_argument("--min-pair-distance", type=float, default=0.5)
    p_perturb.add_argument("--relax-step", type=float, default=0.1)

    p_eval = sub.add_parser("evaluate", help="score prediction files across the suite")
    p_eval.add_argument("--gold-dir", required=True,
                        help="directory with original.jsonl plus the six attack sets")
    p_eval.add_argument("--preds-dir", required=True,
                        help="directory with <set>.preds.jsonl files")
    p_eval.add_argument("--format", default="text", choices=["text", "records"])
    p_eval.add_argument("--out", default=None,
                        help="also write report.txt, report.records.jsonl, report.png here")
    p_eval.add_argument("--title", default=None, help="title for the text report and figure")

    p_stats = sub.add_parser("stats", help="report corpus statistics from provenance")
    p_stats.add_argument("--in", dest="input", required=True, help="source dataset file")
    p_stats.add_argument("--prov", required=True, help="provenance file")
    p_stats.add_argument("--format", default="text", choices=["text", "records"])

    p_check = sub.add_parser("provider-check", help="validate a provider implementation")
    p_check.add_argument("--provider", required=True)
    p_check.add_argument("--provider-timeout-ms", type=int, default=10_000)

    p_span = sub.add_parser("spanprep",
                            help="emit span-extraction training instances "
                                 "(answer inserted into the passage)")
    p_span.add_argument("--in", dest="input", required=True, help="native dataset file")
    p_span.add_argument("--out", required=True, help="line-delimited output file")
    p_span.add_argument("--seed", type=int, default=0)

    return parser


def _load_native(path: str) -> Dataset:
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such dataset: {p}")
    return load_dataset(p)


def _cmd_import(args) -> int:
    warnings: list[str] = []
    dataset = import_race(args.race, name=args.name, split=args.split, warnings=warnings)
    save_dataset(dataset, args.out)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    print(f"imported {len(dataset)} examples -> {args.out}")
    return EXIT_OK


def _cmd_perturb(args) -> int:
    dataset = _load_native(args.input)
    attacks = list(ATTACK_NAMES) if args.attack == "all" else [args.attack]
    needs_provider = [a for a in attacks if a in PROVIDER_ATTACKS]
    if needs_provider and not args.provider:
        raise UsageError(
            f"--provider is required for: {', '.join(needs_provider)} "
            "(use exec:<command>, http:<url>, or identity)"
        )
    jobs = args.jobs if args.jobs > 0 else max(1, os.cpu_count() or 1)
    cfg = PerturbConfig(
        seed=args.seed,
        jobs=jobs,
        rounds=args.rounds,
        insertion_policy=args.insertion_policy,
        extraction=ExtractionSelectConfig(
            top_n=args.top_n,
            max_pair_sim=args.max_pair_sim,
            max_answer_sim=args.max_answer_sim,
            relax_step=args.relax_step,
        ),
        generation=GenerationSelectConfig(
            beam=args.beam,
            min_pair_distance=args.min_pair_distance,
            relax_step=args.relax_step,
        ),
        provider_spec=args.provider,
        provider_timeout_ms=args.provider_timeout_ms,
    )
    resources = load_resources()
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    if args.attack == "all":
        save_dataset(dataset, out_dir / f"{ORIGINAL_SET}.jsonl")
    for attack in attacks:
        warnings: list[str] = []
        run = run_perturb_to_dir(
            dataset, attack, out_dir, resources, cfg,
            source_path=args.input, warnings=warnings,
        )
        print(f"{attack}: wrote {run.dataset_path}")
        _print_run_stats(attack, dataset, run, resources)
        _print_warnings(attack, warnings)
    return EXIT_OK


def _print_run_stats(attack, dataset, run, resources) -> None:
    stats = compute_stats(dataset, run.records, resources)
    if attack in ("charswap", "superimposed"):
        print(f"{attack}: altered-word fraction "
              f"{stats.altered_word_fraction:.3f} "
              f"({stats.word_swap_edits}/{stats.word_tokens} word tokens)")
    if attack in ("paraphrase", "superimposed"):
        print(f"{attack}: paraphrased-sentence fraction "
              f"{stats.paraphrased_sentence_fraction:.3f} "
              f"({stats.sentence_edits}/{stats.passage_sentences} sentences)")
    if attack in ("addsent", "superimposed"):
        print(f"{attack}: {stats.insertions} inserted sequences")
    if attack.startswith("distractor_"):
        print(f"{attack}: {stats.distractor_replacements} distractor slots replaced")


def _print_warnings(context: str, warnings: list[str], limit: int = 5) -> None:
    for w in warnings[:limit]:
        print(f"warning [{context}]: {w}", file=sys.stderr)
    if len(warnings) > limit:
        print(f"warning [{context}]: ... and {len(warnings) - limit} more", file=sys.stderr)


def _report_set_names() -> list[str]:
    return [ORIGINAL_SET] + list(ATTACK_NAMES)


def _cmd_evaluate(args) -> int:
    gold_dir, preds_dir = Path(args.gold_dir), Path(args.preds_dir)
    accuracies: dict[str, float] = {}
    for name in _report_set_names():
        gold_path = gold_dir / f"{name}.jsonl"
        preds_path = preds_dir / f"{name}.preds.jsonl"
        if not gold_path.exists():
            raise UsageError(f"missing gold set: {gold_path}")
        if not preds_path.exists():
            raise UsageError(f"missing predictions for {name}: {preds_path}")
        accuracies[name] = score(load_predictions(preds_path), load_dataset(gold_path))

    report = build_report(accuracies.pop(ORIGINAL_SET), accuracies)
    if args.format == "text":
        print(render_text(report, title=args.title))
    else:
        for rec in to_records(report):
            print(json.dumps(rec, ensure_ascii=False))
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "report.txt").write_text(
            render_text(report, title=args.title) + "\n", encoding="utf-8"
        )
        write_records(report, out_dir / "report.records.jsonl")
        render_report_figure(report, out_dir / "report.png", title=args.title)
        print(f"report written to {out_dir}", file=sys.stderr)
    return EXIT_OK


def _cmd_stats(args) -> int:
    dataset = _load_native(args.input)
    _, records = load_provenance(args.prov)
    resources = load_resources()
    try:
        stats = compute_stats(dataset, records, resources)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    record = stats.as_record()
    if args.format == "records":
        print(json.dumps(record, ensure_ascii=False))
    else:
        width = max(len(k) for k in record)
        for key, value in record.items():
            print(f"{key:<{width}}  {value}")
    return EXIT_OK


_PROBE_TEXT = "The quick brown fox jumps over the lazy dog."
_PROBE_PASSAGE = (
    "The river floods every spring. Farmers plant after the water drops. "
    "The harvest comes in late summer."
)


def _cmd_provider_check(args) -> int:
    provider = open_provider(args.provider, timeout_ms=args.provider_timeout_ms)
    try:
        if not provider.tasks:
            raise ProviderError("provider advertises no tasks")
        for task in sorted(provider.tasks):
            if task == "paraphrase":
                candidates = provider.paraphrase(_PROBE_TEXT, request_id="probe-paraphrase")
                print(f"paraphrase: ok ({len(candidates)} candidates)")
            elif task == "distractors":
                for mode in ("extract", "generate"):
                    candidates = provider.distractors(
                        passage=_PROBE_PASSAGE, question="When does the river flood?",
                        answer="Every spring.", mode=mode, beam=5,
                        request_id=f"probe-{mode}",
                    )
                    if len(candidates) > 5:
                        raise ProviderError(
                            f"{mode}: returned {len(candidates)} candidates for beam 5"
                        )
                    print(f"distractors/{mode}: ok ({len(candidates)} candidates)")
            else:
                print(f"{task}: advertised but unknown to this tool; skipped")
        print(f"provider ok: tasks={sorted(provider.tasks)}")
    finally:
        provider.close()
    return EXIT_OK


def _cmd_spanprep(args) -> int:
    dataset = _load_native(args.input)
    resources = load_resources()
    count = write_span_instances(dataset, args.out, args.seed, resources)
    print(f"wrote {count} span-extraction instances -> {args.out}")
    return EXIT_OK


_COMMANDS = {
    "import": _cmd_import,
    "perturb": _cmd_perturb,
    "evaluate": _cmd_evaluate,
    "stats": _cmd_stats,
    "provider-check": _cmd_provider_check,
    "spanprep": _cmd_spanprep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DatasetFormatError, EvaluationError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProviderError as exc:
        print(f"provider error: {exc}", file=sys.stderr)
        return EXIT_PROVIDER
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
