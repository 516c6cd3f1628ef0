"""Launch the HTTP service with a scripted mock provider for offline smoke runs.

Usage: python3 scripts/smoke_server.py [PORT] [DATA_DIR]
"""
import json
import sys
import tempfile

import uvicorn

from spectrans.llm import MockProvider
from spectrans.service import create_app


def spec_json(**overrides):
    data = {
        "skopos": "Inform general readers about the subject.",
        "text_type": "informative", "house_mode": "covert",
        "loyalty": {"author_intention": 0.6, "st_culture_fidelity": 0.5,
                    "tt_reader_orientation": 0.7, "commissioner_brief": 0.5},
        "domestication_axis": 0.5,
        "audience": {"description": "adult readers", "expertise": "lay", "locale": "US"},
        "register": {"formality": "neutral", "voice": "active", "person": "third"},
        "genre": "news", "terminology_guidance": "keep official names",
        "style_decisions": "plain prose", "preserve": ["names"],
        "localize": ["dates"], "avoid": ["slang"], "open_questions": [],
    }
    data.update(overrides)
    return data


IDENTIFY = json.dumps({"skopos": "inform", "audience": "general", "register": "neutral",
                       "genre": "news", "stance": "descriptive", "notes": "none"})
MEMORY = json.dumps({"new_terms": [["犬", "dog"]],
                     "summary": " ".join(f"w{i}" for i in range(55))})


def make_script():
    return {
        "identify": {"cycle": [IDENTIFY]},
        "generate": {"cycle": ["A scripted translation of the chunk."]},
        "verify": {"cycle": ["[]"]},
        "memory_update": {"cycle": [MEMORY]},
        "spec_propose": {"cycle": [json.dumps(spec_json())]},
        "spec_refine": {"cycle": [json.dumps(spec_json(
            register={"formality": "formal", "voice": "active", "person": "third"}))]},
    }


def main() -> None:
    port = int(sys.argv[1]) if len(sys.argv) > 1 else 8123
    data_dir = sys.argv[2] if len(sys.argv) > 2 else tempfile.mkdtemp(prefix="smoke-")
    app = create_app(data_dir, provider_factory=lambda key: MockProvider(make_script()))
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    main()
