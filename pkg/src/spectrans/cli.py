"""Command line entry point: propose-spec, translate, verify, and score.

Exit codes are a total function of outcome class:
0 success/accept, 1 usage, 2 validation or parse failure, 3 revise or
not-accepted outcome, 4 provider failure.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .dialogue import propose_spec
from .errors import (
    ChunkTranslationError,
    EmptyDocumentError,
    EmptyTableError,
    EncodingError,
    JudgeParseError,
    ProposalError,
    ProviderError,
    RefineError,
    ScriptExhaustedError,
    SpecParseError,
    SpecValidationError,
)
from .llm import DEFAULT_TEMPERATURES, HttpProvider, MockProvider, ModelRequest, Provider
from .mqm import (
    SEVERITIES,
    SEVERITY_PENALTIES,
    compute_verdict,
    make_report,
    parse_judge_response,
)
from .pipeline import PipelineConfig, report_to_json, translate_document
from .prompts import VERIFY_SYSTEM, verification_prompt
from .references import ReferenceSet, add_glossary, add_paired_examples, parse_pair_table
from .specification import (
    SpecSession,
    render_markdown,
    spec_from_json_text,
    spec_to_json_text,
    validate_spec,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_REVISE = 3
EXIT_PROVIDER = 4


def _warn(messages) -> None:
    for message in messages:
        click.echo(f"warning: {message}", err=True)


def _build_provider(provider: str, script: str | None) -> Provider:
    if provider == "mock":
        if not script:
            raise click.UsageError("--provider mock requires --script")
        return MockProvider.from_file(script)
    api_key = os.environ.get("SPECTRANS_API_KEY", "")
    if not api_key:
        raise click.UsageError("--provider live requires SPECTRANS_API_KEY in the environment")
    endpoint = os.environ.get("SPECTRANS_ENDPOINT", "")
    model = os.environ.get("SPECTRANS_MODEL", "")
    if not endpoint or not model:
        raise click.UsageError("--provider live requires SPECTRANS_ENDPOINT and SPECTRANS_MODEL")
    return HttpProvider(endpoint=endpoint, model=model, api_key=api_key,
                        auth_header=os.environ.get("SPECTRANS_AUTH_HEADER", "Authorization"))


def _load_refs(refs_dir: str | None) -> ReferenceSet:
    """Directory convention: glossary.tsv, examples.tsv, parallel/*.txt, style.md."""
    refs = ReferenceSet()
    if not refs_dir:
        return refs
    base = Path(refs_dir)

    glossary_file = base / "glossary.tsv"
    if glossary_file.exists():
        pairs, warnings = parse_pair_table(glossary_file.read_bytes(), "glossary")
        refs, merge_warnings = add_glossary(refs, pairs)
        _warn(warnings + merge_warnings)

    examples_file = base / "examples.tsv"
    if examples_file.exists():
        pairs, warnings = parse_pair_table(examples_file.read_bytes(), "examples")
        refs, budget_warnings = add_paired_examples(refs, pairs)
        _warn(warnings + budget_warnings)

    parallel_dir = base / "parallel"
    if parallel_dir.is_dir():
        parallel = tuple(
            (path.name, path.read_text(encoding="utf-8"))
            for path in sorted(parallel_dir.glob("*.txt"))
        )
        refs = ReferenceSet(glossary=refs.glossary, paired_examples=refs.paired_examples,
                            parallel_texts=parallel, style_guide=refs.style_guide)

    style_file = base / "style.md"
    if style_file.exists():
        refs = ReferenceSet(glossary=refs.glossary, paired_examples=refs.paired_examples,
                            parallel_texts=refs.parallel_texts,
                            style_guide=style_file.read_text(encoding="utf-8"))
    return refs


def _load_locked_session(spec_path: str) -> SpecSession:
    """A spec supplied as a file is treated as endorsed: it is validated and
    locked before the run; violations abort instead."""
    spec = spec_from_json_text(Path(spec_path).read_text(encoding="utf-8"))
    violations = validate_spec(spec)
    if violations:
        raise SpecValidationError(violations)
    session = SpecSession(spec)
    session.lock()
    return session


@click.group()
def cli():
    """Specification-driven translation pipeline."""


@cli.command("propose-spec")
@click.option("--source", "source_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--source-lang", required=True)
@click.option("--target-lang", required=True)
@click.option("--refs", "refs_dir", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--provider", type=click.Choice(["mock", "live"]), default="live", show_default=True)
@click.option("--script", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Scripted replies for the mock provider.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default="spec.json", show_default=True)
def propose_spec_cmd(source_path, source_lang, target_lang, refs_dir, provider, script, out_path):
    """Draft a translation specification from a source text."""
    llm = _build_provider(provider, script)
    refs = _load_refs(refs_dir)
    source = Path(source_path).read_text(encoding="utf-8")
    spec, warnings = propose_spec(source, refs, source_lang, target_lang, llm)
    _warn(warnings)

    out = Path(out_path)
    out.write_text(spec_to_json_text(spec) + "\n", encoding="utf-8")
    markdown_path = out.with_suffix(".md")
    markdown_path.write_text(render_markdown(spec), encoding="utf-8")
    click.echo(f"wrote {out} and {markdown_path}")
    return EXIT_OK


@cli.command("translate")
@click.option("--source", "source_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--refs", "refs_dir", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--provider", type=click.Choice(["mock", "live"]), default="live", show_default=True)
@click.option("--script", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--threshold", type=int, default=-2, show_default=True)
@click.option("--max-revisions", type=int, default=2, show_default=True)
@click.option("--max-chunk-chars", type=int, default=4000, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Target text path; defaults to <source>.out.txt.")
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False), default=None,
              help="Trace JSON path; defaults to <out>.trace.json.")
@click.option("--deterministic", is_flag=True,
              help="Zero timestamps and latencies and derive the run id from the inputs.")
def translate_cmd(source_path, spec_path, refs_dir, provider, script, threshold,
                  max_revisions, max_chunk_chars, out_path, trace_path, deterministic):
    """Translate a document under a locked specification."""
    llm = _build_provider(provider, script)
    session = _load_locked_session(spec_path)
    refs = _load_refs(refs_dir)
    try:
        config = PipelineConfig(threshold=threshold, max_revisions=max_revisions,
                                max_chunk_chars=max_chunk_chars)
    except ValueError as exc:
        raise click.UsageError(str(exc))

    source = Path(source_path).read_text(encoding="utf-8")
    out = Path(out_path) if out_path else Path(source_path).with_suffix(".out.txt")
    trace_file = Path(trace_path) if trace_path else Path(str(out) + ".trace.json")

    output, trace = translate_document(
        source, session, refs, config, llm,
        trace_path=str(trace_file), deterministic=deterministic,
    )
    out.write_text(output, encoding="utf-8")

    accepted = [c["accepted"] for c in trace["chunks"]]
    click.echo(f"wrote {out} and {trace_file} "
               f"({len(accepted)} chunks, {sum(accepted)} accepted)")
    return EXIT_OK if all(accepted) else EXIT_REVISE


@cli.command("verify")
@click.option("--source", "source_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--target", "target_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--refs", "refs_dir", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--provider", type=click.Choice(["mock", "live"]), default="live", show_default=True)
@click.option("--script", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--threshold", type=int, default=-2, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Report JSON path; defaults to stdout.")
def verify_cmd(source_path, target_path, spec_path, refs_dir, provider, script, threshold, out_path):
    """Judge an existing translation against a specification."""
    llm = _build_provider(provider, script)
    session = _load_locked_session(spec_path)
    refs = _load_refs(refs_dir)
    source = Path(source_path).read_text(encoding="utf-8")
    target = Path(target_path).read_text(encoding="utf-8")

    user = verification_prompt(session.spec, refs, source, target)
    request = ModelRequest(stage_tag="verify", system=VERIFY_SYSTEM, user=user,
                           temperature=DEFAULT_TEMPERATURES["verify"])
    last_error: JudgeParseError | None = None
    for _ in range(2):
        reply = llm.complete(request)
        try:
            spans, warnings = parse_judge_response(reply.text, target)
        except JudgeParseError as exc:
            last_error = exc
            continue
        report = make_report(spans, iteration=0, threshold=threshold, warnings=warnings)
        text = json.dumps(report_to_json(report), ensure_ascii=False, indent=2)
        if out_path:
            Path(out_path).write_text(text + "\n", encoding="utf-8")
            click.echo(f"wrote {out_path}")
        else:
            click.echo(text)
        click.echo(f"{report.score} {report.verdict}", err=True)
        return EXIT_OK if report.verdict == "accept" else EXIT_REVISE
    raise last_error


@cli.command("score")
@click.argument("spans_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--threshold", type=int, default=-2, show_default=True)
def score_cmd(spans_path, threshold):
    """Score an error-span JSON file and print the verdict."""
    try:
        data = json.loads(Path(spans_path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise JudgeParseError(f"span file is not valid JSON: {exc}")
    if not isinstance(data, list):
        raise JudgeParseError("span file must hold a JSON array of error objects")
    score = 0
    for i, item in enumerate(data):
        if not isinstance(item, dict) or item.get("severity") not in SEVERITIES:
            raise JudgeParseError(f"span {i} has no valid severity")
        score += SEVERITY_PENALTIES[item["severity"]]
    verdict = compute_verdict(score, threshold)
    click.echo(f"{score} {verdict}")
    return EXIT_OK if verdict == "accept" else EXIT_REVISE


def main(argv=None) -> int:
    """Entry point with the exit-code contract applied."""
    try:
        rv = cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except SpecValidationError as exc:
        click.echo("error: the specification is invalid:", err=True)
        for violation in exc.violations:
            click.echo(f"  {violation.field}: {violation.reason}", err=True)
        return EXIT_INVALID
    except (SpecParseError, EmptyTableError, EncodingError, EmptyDocumentError,
            JudgeParseError, ProposalError, RefineError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INVALID
    except (ChunkTranslationError, ScriptExhaustedError, ProviderError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_PROVIDER
    except UnicodeDecodeError as exc:
        click.echo(f"error: input is not valid UTF-8: {exc}", err=True)
        return EXIT_INVALID
    return int(rv) if rv else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
