"""Structured translation specification: schema, validation, lock lifecycle,
and the derived ten-section markdown view.

The structured record is the source of truth; the markdown is always derived
from it, never edited directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, replace
from datetime import datetime, timezone

from .errors import LockedSpecError, SpecParseError, SpecValidationError, SpectransError

TEXT_TYPES = ("informative", "expressive", "operative", "audiomedial")
HOUSE_MODES = ("overt", "covert")

# Canonical order of the ten markdown sections.
SECTION_HEADINGS = (
    "Skopos",
    "Audience",
    "Register & Voice",
    "Genre",
    "Terminology guidance",
    "Style decisions",
    "Things to preserve",
    "Things to localise",
    "Things to avoid",
    "Open questions",
)

UNSPECIFIED = "(unspecified)"


@dataclass(frozen=True)
class Loyalty:
    """Relative weights of the four loyalty obligations, each in [0, 1]."""

    author_intention: float = 0.5
    st_culture_fidelity: float = 0.5
    tt_reader_orientation: float = 0.5
    commissioner_brief: float = 0.5


@dataclass(frozen=True)
class Audience:
    description: str = ""
    expertise: str = ""
    locale: str = ""


@dataclass(frozen=True)
class Register:
    formality: str = ""
    voice: str = ""
    person: str = ""


@dataclass(frozen=True)
class TranslationSpec:
    """The locked contract a translation run is conditioned on and judged against."""

    source_lang: str
    target_lang: str
    skopos: str = ""
    text_type: str = "informative"
    house_mode: str = "covert"
    loyalty: Loyalty = field(default_factory=Loyalty)
    # 0 = fully foreignizing, 1 = fully domesticating.
    domestication_axis: float = 0.5
    audience: Audience = field(default_factory=Audience)
    register: Register = field(default_factory=Register)
    genre: str = ""
    terminology_guidance: str = ""
    style_decisions: str = ""
    preserve: tuple[str, ...] = ()
    localize: tuple[str, ...] = ()
    avoid: tuple[str, ...] = ()
    open_questions: tuple[str, ...] = ()


@dataclass(frozen=True)
class Violation:
    field: str
    reason: str


def _check_weight(name: str, value, out: list[Violation]) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        out.append(Violation(name, f"must be a number, got {type(value).__name__}"))
    elif not 0.0 <= value <= 1.0:
        out.append(Violation(name, f"must be within [0, 1], got {value}"))


def validate_spec(spec: TranslationSpec) -> list[Violation]:
    """Return every field-domain violation; an empty list means the spec is valid."""
    out: list[Violation] = []
    if spec.text_type not in TEXT_TYPES:
        out.append(Violation("text_type", f"must be one of {TEXT_TYPES}, got {spec.text_type!r}"))
    if spec.house_mode not in HOUSE_MODES:
        out.append(Violation("house_mode", f"must be one of {HOUSE_MODES}, got {spec.house_mode!r}"))
    for name in ("author_intention", "st_culture_fidelity", "tt_reader_orientation", "commissioner_brief"):
        _check_weight(f"loyalty.{name}", getattr(spec.loyalty, name), out)
    _check_weight("domestication_axis", spec.domestication_axis, out)
    if not spec.source_lang or not spec.source_lang.strip():
        out.append(Violation("source_lang", "must be non-empty"))
    if not spec.target_lang or not spec.target_lang.strip():
        out.append(Violation("target_lang", "must be non-empty"))
    if spec.source_lang and spec.target_lang and spec.source_lang == spec.target_lang:
        out.append(Violation("target_lang", f"must differ from source_lang ({spec.source_lang!r})"))
    return out


def _fmt_weight(x: float) -> str:
    return f"{x:g}"


def _text_or_placeholder(text: str) -> str:
    return text.strip() if text and text.strip() else UNSPECIFIED


def _bullets(items: tuple[str, ...]) -> str:
    if not items:
        return UNSPECIFIED
    return "\n".join(f"- {item}" for item in items)


def render_markdown(spec: TranslationSpec) -> str:
    """Render the canonical ten-section markdown view of a valid spec.

    Deterministic: the same spec always yields byte-identical output
    (UTF-8, LF line endings).
    """
    violations = validate_spec(spec)
    if violations:
        raise SpecValidationError(violations)

    loyalty = spec.loyalty
    parts = [
        f"# Translation specification ({spec.source_lang} → {spec.target_lang})",
        "",
        "## Skopos",
        "",
        _text_or_placeholder(spec.skopos),
        "",
        f"- Text type: {spec.text_type}",
        f"- House mode: {spec.house_mode}",
        f"- Loyalty weight, author intention: {_fmt_weight(loyalty.author_intention)}",
        f"- Loyalty weight, source-culture fidelity: {_fmt_weight(loyalty.st_culture_fidelity)}",
        f"- Loyalty weight, target-reader orientation: {_fmt_weight(loyalty.tt_reader_orientation)}",
        f"- Loyalty weight, commissioner brief: {_fmt_weight(loyalty.commissioner_brief)}",
        f"- Domestication axis: {_fmt_weight(spec.domestication_axis)} (0 = foreignizing, 1 = domesticating)",
        "",
        "## Audience",
        "",
        f"- Description: {_text_or_placeholder(spec.audience.description)}",
        f"- Expertise: {_text_or_placeholder(spec.audience.expertise)}",
        f"- Locale: {_text_or_placeholder(spec.audience.locale)}",
        "",
        "## Register & Voice",
        "",
        f"- Formality: {_text_or_placeholder(spec.register.formality)}",
        f"- Voice: {_text_or_placeholder(spec.register.voice)}",
        f"- Person: {_text_or_placeholder(spec.register.person)}",
        "",
        "## Genre",
        "",
        _text_or_placeholder(spec.genre),
        "",
        "## Terminology guidance",
        "",
        _text_or_placeholder(spec.terminology_guidance),
        "",
        "## Style decisions",
        "",
        _text_or_placeholder(spec.style_decisions),
        "",
        "## Things to preserve",
        "",
        _bullets(spec.preserve),
        "",
        "## Things to localise",
        "",
        _bullets(spec.localize),
        "",
        "## Things to avoid",
        "",
        _bullets(spec.avoid),
        "",
        "## Open questions",
        "",
        _bullets(spec.open_questions),
        "",
    ]
    return "\n".join(parts)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

# The printed schema spells two loyalty keys with uppercase prefixes; accept
# them on input, always emit lowercase.
_LOYALTY_ALIASES = {
    "st_culture_fidelity": "st_culture_fidelity",
    "ST_culture_fidelity": "st_culture_fidelity",
    "tt_reader_orientation": "tt_reader_orientation",
    "TT_reader_orientation": "tt_reader_orientation",
    "author_intention": "author_intention",
    "commissioner_brief": "commissioner_brief",
}

_LIST_FIELDS = ("preserve", "localize", "avoid", "open_questions")
_TEXT_FIELDS = ("skopos", "text_type", "house_mode", "genre", "terminology_guidance",
                "style_decisions", "source_lang", "target_lang")
_RECORD_FIELDS = {"audience": Audience, "register": Register}


def spec_to_json(spec: TranslationSpec) -> dict:
    """Serialize to the interchange JSON shape (plain dict)."""
    return {
        "skopos": spec.skopos,
        "text_type": spec.text_type,
        "house_mode": spec.house_mode,
        "loyalty": {
            "author_intention": spec.loyalty.author_intention,
            "st_culture_fidelity": spec.loyalty.st_culture_fidelity,
            "tt_reader_orientation": spec.loyalty.tt_reader_orientation,
            "commissioner_brief": spec.loyalty.commissioner_brief,
        },
        "domestication_axis": spec.domestication_axis,
        "audience": {
            "description": spec.audience.description,
            "expertise": spec.audience.expertise,
            "locale": spec.audience.locale,
        },
        "register": {
            "formality": spec.register.formality,
            "voice": spec.register.voice,
            "person": spec.register.person,
        },
        "genre": spec.genre,
        "terminology_guidance": spec.terminology_guidance,
        "style_decisions": spec.style_decisions,
        "preserve": list(spec.preserve),
        "localize": list(spec.localize),
        "avoid": list(spec.avoid),
        "open_questions": list(spec.open_questions),
        "source_lang": spec.source_lang,
        "target_lang": spec.target_lang,
    }


def spec_to_json_text(spec: TranslationSpec) -> str:
    return json.dumps(spec_to_json(spec), ensure_ascii=False, indent=2, sort_keys=False)


def _coerce_str(value, path: str) -> str:
    if value is None:
        return ""
    if not isinstance(value, str):
        raise SpecParseError(f"{path}: expected string, got {type(value).__name__}")
    return value


def _coerce_str_list(value, path: str) -> tuple[str, ...]:
    if value is None:
        return ()
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SpecParseError(f"{path}: expected a list of strings")
    return tuple(value)


def spec_from_json(data: dict) -> TranslationSpec:
    """Parse the interchange JSON shape. Unknown fields are rejected.

    Missing fields fall back to constructor defaults; validity is a separate
    question for validate_spec.
    """
    if not isinstance(data, dict):
        raise SpecParseError(f"spec JSON must be an object, got {type(data).__name__}")

    known = set(_TEXT_FIELDS) | set(_LIST_FIELDS) | {"loyalty", "domestication_axis", "audience", "register"}
    unknown = [k for k in data if k not in known]
    if unknown:
        raise SpecParseError(f"unknown spec field(s): {', '.join(sorted(unknown))}")

    kwargs: dict = {}
    for name in _TEXT_FIELDS:
        if name in data:
            kwargs[name] = _coerce_str(data[name], name)
    for name in _LIST_FIELDS:
        if name in data:
            kwargs[name] = _coerce_str_list(data[name], name)

    if "loyalty" in data:
        raw = data["loyalty"]
        if not isinstance(raw, dict):
            raise SpecParseError("loyalty: expected an object")
        weights: dict = {}
        for key, value in raw.items():
            canonical = _LOYALTY_ALIASES.get(key)
            if canonical is None:
                raise SpecParseError(f"unknown spec field(s): loyalty.{key}")
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise SpecParseError(f"loyalty.{canonical}: expected a number")
            weights[canonical] = float(value)
        kwargs["loyalty"] = Loyalty(**{**Loyalty().__dict__, **weights})

    if "domestication_axis" in data:
        value = data["domestication_axis"]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise SpecParseError("domestication_axis: expected a number")
        kwargs["domestication_axis"] = float(value)

    for name, cls in _RECORD_FIELDS.items():
        if name in data:
            raw = data[name]
            if not isinstance(raw, dict):
                raise SpecParseError(f"{name}: expected an object")
            allowed = {f.name for f in fields(cls)}
            bad = [k for k in raw if k not in allowed]
            if bad:
                raise SpecParseError(f"unknown spec field(s): {', '.join(f'{name}.{k}' for k in sorted(bad))}")
            kwargs[name] = cls(**{k: _coerce_str(v, f"{name}.{k}") for k, v in raw.items()})

    kwargs.setdefault("source_lang", "")
    kwargs.setdefault("target_lang", "")
    return TranslationSpec(**kwargs)


def spec_from_json_text(text: str) -> TranslationSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"spec file is not valid JSON: {exc}") from exc
    return spec_from_json(data)


def diff_specs(old: TranslationSpec, new: TranslationSpec) -> list[tuple[str, str, str]]:
    """Flat field diff as (path, old_repr, new_repr), in schema order."""
    old_flat = _flatten(spec_to_json(old))
    new_flat = _flatten(spec_to_json(new))
    return [(path, repr(old_flat[path]), repr(new_flat[path]))
            for path in old_flat if old_flat[path] != new_flat[path]]


def _flatten(data: dict, prefix: str = "") -> dict:
    flat: dict = {}
    for key, value in data.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, prefix=f"{path}."))
        else:
            flat[path] = value
    return flat


# ---------------------------------------------------------------------------
# Session lifecycle
# ---------------------------------------------------------------------------

DRAFTING = "drafting"
LOCKED = "locked"


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat()


class SpecSession:
    """Two-state (drafting/locked) holder of the working spec.

    Mutation is only legal while drafting; locking freezes the spec until an
    explicit unlock, which also marks artifacts produced under the old lock
    as stale.
    """

    def __init__(self, spec: TranslationSpec):
        self.spec = spec
        self.state = DRAFTING
        self.revision_history: list[tuple[str, str]] = []
        # Bumped on every unlock so downstream caches can detect staleness.
        self.lock_generation = 0

    def update_spec(self, new_spec: TranslationSpec, description: str) -> None:
        if self.state == LOCKED:
            raise LockedSpecError("spec is locked; unlock before editing")
        self.spec = new_spec
        self.revision_history.append((_utcnow(), description))

    def lock(self) -> None:
        if self.state != DRAFTING:
            raise SpectransError("lock requires drafting state")
        violations = validate_spec(self.spec)
        if violations:
            raise SpecValidationError(violations)
        self.state = LOCKED
        self.revision_history.append((_utcnow(), "locked"))

    def unlock(self) -> None:
        if self.state != LOCKED:
            raise SpectransError("unlock requires locked state")
        self.state = DRAFTING
        self.lock_generation += 1
        self.revision_history.append((_utcnow(), "unlocked"))

    @property
    def locked(self) -> bool:
        return self.state == LOCKED


def neutral_spec(source_lang: str, target_lang: str) -> TranslationSpec:
    """A blank-but-valid spec for a language pair."""
    return TranslationSpec(source_lang=source_lang, target_lang=target_lang)


def with_fields(spec: TranslationSpec, **changes) -> TranslationSpec:
    """Functional field update (specs are immutable)."""
    return replace(spec, **changes)
