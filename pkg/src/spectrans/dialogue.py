"""Model-assisted specification authoring: propose a draft from the source,
refine it with conversational instructions, and track the turns.

The model always emits spec JSON; the ten-section markdown is derived from
the parsed result, never parsed back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ProposalError, RefineError
from .llm import DEFAULT_TEMPERATURES, ModelRequest, Provider
from .prompts import spec_propose_system, spec_refine_system
from .references import ReferenceSet, format_reference_block
from .specification import (
    HOUSE_MODES,
    TEXT_TYPES,
    Audience,
    Loyalty,
    Register,
    TranslationSpec,
    diff_specs,
    spec_to_json,
)

PROPOSAL_SOURCE_CAP = 6000


@dataclass(frozen=True)
class SpecDraftTurn:
    role: str  # "user" or "assistant"
    content: str
    resulting_spec: TranslationSpec | None = None


_SCHEMA_TEXT = """\
{
  "skopos": "purpose of the translation, one or two sentences",
  "text_type": "informative | expressive | operative | audiomedial",
  "house_mode": "overt | covert",
  "loyalty": {
    "author_intention": 0.5,
    "st_culture_fidelity": 0.5,
    "tt_reader_orientation": 0.5,
    "commissioner_brief": 0.5
  },
  "domestication_axis": 0.5,
  "audience": {"description": "...", "expertise": "...", "locale": "..."},
  "register": {"formality": "...", "voice": "...", "person": "..."},
  "genre": "...",
  "terminology_guidance": "...",
  "style_decisions": "...",
  "preserve": ["..."],
  "localize": ["..."],
  "avoid": ["..."],
  "open_questions": ["..."]
}

All loyalty weights and domestication_axis are numbers between 0 and 1
(domestication_axis: 0 = keep the source culture visible, 1 = fully adapt
to the target culture). List fields hold short strings. open_questions
lists decisions you could not settle from the material given."""


def _truncate_source(source: str) -> str:
    if len(source) <= PROPOSAL_SOURCE_CAP:
        return source
    return (source[:PROPOSAL_SOURCE_CAP]
            + f"\n[... source truncated after {PROPOSAL_SOURCE_CAP} characters ...]")


def _first_json_object(raw: str) -> dict | None:
    decoder = json.JSONDecoder()
    pos = raw.find("{")
    while pos != -1:
        try:
            value, _ = decoder.raw_decode(raw, pos)
        except json.JSONDecodeError:
            pass
        else:
            if isinstance(value, dict):
                return value
        pos = raw.find("{", pos + 1)
    return None


def _neutral_number(value, path: str, defaulted: list[str]) -> float:
    if isinstance(value, (int, float)) and not isinstance(value, bool) and 0.0 <= value <= 1.0:
        return float(value)
    defaulted.append(path)
    return 0.5


def _clean_str(value) -> str:
    return value.strip() if isinstance(value, str) else ""


def _clean_str_list(value) -> tuple[str, ...]:
    if not isinstance(value, list):
        return ()
    return tuple(x.strip() for x in value if isinstance(x, str) and x.strip())


def _spec_from_model_json(data: dict, source_lang: str,
                          target_lang: str) -> tuple[TranslationSpec, list[str], list[str]]:
    """Tolerant parse of model-authored spec JSON.

    Unknown fields are dropped with a warning; omitted or out-of-domain
    fields take neutral defaults and are reported in the defaulted list.
    The language pair is fixed by the caller, never by the model.
    """
    defaulted: list[str] = []
    warnings: list[str] = []

    known = {"skopos", "text_type", "house_mode", "loyalty", "domestication_axis",
             "audience", "register", "genre", "terminology_guidance", "style_decisions",
             "preserve", "localize", "avoid", "open_questions", "source_lang", "target_lang"}
    for key in data:
        if key not in known:
            warnings.append(f"model proposed unknown spec field {key!r}; dropped")

    def text_field(name: str) -> str:
        if name not in data:
            defaulted.append(name)
            return ""
        return _clean_str(data[name])

    def list_field(name: str) -> tuple[str, ...]:
        if name not in data:
            defaulted.append(name)
            return ()
        return _clean_str_list(data[name])

    text_type = data.get("text_type")
    if text_type not in TEXT_TYPES:
        defaulted.append("text_type")
        text_type = "informative"
    house_mode = data.get("house_mode")
    if house_mode not in HOUSE_MODES:
        defaulted.append("house_mode")
        house_mode = "covert"

    loyalty_raw = data.get("loyalty")
    if isinstance(loyalty_raw, dict):
        loyalty = Loyalty(
            author_intention=_neutral_number(loyalty_raw.get("author_intention"), "loyalty.author_intention", defaulted),
            st_culture_fidelity=_neutral_number(
                loyalty_raw.get("st_culture_fidelity", loyalty_raw.get("ST_culture_fidelity")),
                "loyalty.st_culture_fidelity", defaulted),
            tt_reader_orientation=_neutral_number(
                loyalty_raw.get("tt_reader_orientation", loyalty_raw.get("TT_reader_orientation")),
                "loyalty.tt_reader_orientation", defaulted),
            commissioner_brief=_neutral_number(loyalty_raw.get("commissioner_brief"), "loyalty.commissioner_brief", defaulted),
        )
    else:
        defaulted.append("loyalty")
        loyalty = Loyalty()

    axis = data.get("domestication_axis")
    if isinstance(axis, (int, float)) and not isinstance(axis, bool) and 0.0 <= axis <= 1.0:
        axis = float(axis)
    else:
        defaulted.append("domestication_axis")
        axis = 0.5

    audience_raw = data.get("audience")
    if isinstance(audience_raw, dict):
        audience = Audience(
            description=_clean_str(audience_raw.get("description")),
            expertise=_clean_str(audience_raw.get("expertise")),
            locale=_clean_str(audience_raw.get("locale")),
        )
    else:
        defaulted.append("audience")
        audience = Audience()

    register_raw = data.get("register")
    if isinstance(register_raw, dict):
        register = Register(
            formality=_clean_str(register_raw.get("formality")),
            voice=_clean_str(register_raw.get("voice")),
            person=_clean_str(register_raw.get("person")),
        )
    else:
        defaulted.append("register")
        register = Register()

    open_questions = list(_clean_str_list(data.get("open_questions")))
    for name in defaulted:
        open_questions.append(f"Confirm {name}: not settled by the model proposal, neutral default applied.")

    spec = TranslationSpec(
        source_lang=source_lang,
        target_lang=target_lang,
        skopos=text_field("skopos"),
        text_type=text_type,
        house_mode=house_mode,
        loyalty=loyalty,
        domestication_axis=axis,
        audience=audience,
        register=register,
        genre=text_field("genre"),
        terminology_guidance=text_field("terminology_guidance"),
        style_decisions=text_field("style_decisions"),
        preserve=list_field("preserve"),
        localize=list_field("localize"),
        avoid=list_field("avoid"),
        open_questions=tuple(open_questions),
    )
    return spec, defaulted, warnings


def _call_with_retry(llm: Provider, stage_tag: str, system: str, user: str,
                     error_cls: type[Exception]) -> dict:
    """Two attempts at getting a JSON object back; the second prompt carries
    the first failure's description."""
    request = ModelRequest(stage_tag=stage_tag, system=system, user=user,
                          temperature=DEFAULT_TEMPERATURES[stage_tag])
    reply = llm.complete(request)
    data = _first_json_object(reply.text)
    if data is not None:
        return data

    retry_user = (
        user
        + "\n\nYour previous reply could not be parsed: no JSON object was found. "
        "Reply with the specification as one JSON object and nothing else."
    )
    retry = ModelRequest(stage_tag=stage_tag, system=system, user=retry_user,
                         temperature=DEFAULT_TEMPERATURES[stage_tag])
    reply = llm.complete(retry)
    data = _first_json_object(reply.text)
    if data is None:
        raise error_cls("model did not return parseable spec JSON in two attempts")
    return data


def propose_spec(source: str, refs: ReferenceSet, source_lang: str, target_lang: str,
                 llm: Provider) -> tuple[TranslationSpec, list[str]]:
    """Draft a spec from the source text and whatever references exist."""
    if not source or not source.strip():
        raise ValueError("propose_spec requires a non-empty source")

    ref_block = format_reference_block(refs)
    parts = [
        f"Draft a translation specification for translating the text below from "
        f"{source_lang} to {target_lang}.",
        "",
        "### Source text",
        "",
        _truncate_source(source),
    ]
    if ref_block:
        parts.extend(["", "### Reference material", "", ref_block])
    parts.extend([
        "",
        "Reply with one JSON object of this exact shape and nothing else:",
        "",
        _SCHEMA_TEXT,
    ])
    user = "\n".join(parts)

    data = _call_with_retry(llm, "spec_propose", spec_propose_system(), user, ProposalError)
    spec, _, warnings = _spec_from_model_json(data, source_lang, target_lang)
    return spec, warnings


def refine_spec(spec: TranslationSpec, instruction: str,
                llm: Provider) -> tuple[TranslationSpec, list[tuple[str, str, str]], list[str]]:
    """Apply one conversational instruction; returns (new_spec, diff, warnings).

    The model sees the current spec JSON and the instruction only, and must
    return the full revised JSON. Fields that changed without the instruction
    naming them are kept, with a drift warning.
    """
    if not instruction or not instruction.strip():
        raise ValueError("refine_spec requires a non-empty instruction")

    current_json = json.dumps(spec_to_json(spec), ensure_ascii=False, indent=2)
    user = (
        "Here is the current translation specification as JSON:\n"
        "\n"
        f"{current_json}\n"
        "\n"
        "Client instruction:\n"
        f"{instruction}\n"
        "\n"
        "Apply the instruction and reply with the full revised specification as "
        "one JSON object of the same shape, and nothing else. Keep every field "
        "the instruction does not touch exactly as it is."
    )

    data = _call_with_retry(llm, "spec_refine", spec_refine_system(), user, RefineError)
    new_spec, _, warnings = _spec_from_model_json(data, spec.source_lang, spec.target_lang)

    diff = diff_specs(spec, new_spec)
    for path, old, new in diff:
        if not _mentioned(path, instruction):
            warnings.append(
                f"field {path} changed ({old} -> {new}) without the instruction mentioning it"
            )
    return new_spec, diff, warnings


def _mentioned(path: str, instruction: str) -> bool:
    """Crude relevance check: any segment of the field path appearing in the
    instruction counts as mentioned."""
    hay = instruction.lower()
    for segment in path.split("."):
        for token in (segment, segment.replace("_", " ")):
            if token and token in hay:
                return True
    return False
