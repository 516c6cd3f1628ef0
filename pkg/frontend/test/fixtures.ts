/** Fixtures captured from a real engine run (deterministic mock provider):
 * a three-chunk document where chunk 0 needs one revision (one locatable
 * major, one locatable minor, one unlocatable minor), chunks 1-2 accept
 * cleanly, and the term ledger grows after chunks 0 and 1.
 */

import type { SpecJson, TraceJson } from "../src/types.js";

export const SAMPLE_SPEC: SpecJson = {
  "skopos": "Publishable English rendering of a Japanese news item.",
  "text_type": "informative",
  "house_mode": "covert",
  "loyalty": {
    "author_intention": 0.7,
    "st_culture_fidelity": 0.9,
    "tt_reader_orientation": 0.7,
    "commissioner_brief": 0.5
  },
  "domestication_axis": 0.4,
  "audience": {
    "description": "General adult readers",
    "expertise": "non-specialist",
    "locale": "US"
  },
  "register": {
    "formality": "neutral",
    "voice": "active where natural",
    "person": "third"
  },
  "genre": "feature journalism",
  "terminology_guidance": "Keep institutional names official.",
  "style_decisions": "Serial comma; sentence case headings.",
  "preserve": [
    "personal names",
    "figures"
  ],
  "localize": [
    "date formats"
  ],
  "avoid": [
    "translationese"
  ],
  "open_questions": [],
  "source_lang": "ja",
  "target_lang": "en"
};

export const SAMPLE_MARKDOWN: string = "# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader orientation: 0.7\n- Loyalty weight, commissioner brief: 0.5\n- Domestication axis: 0.4 (0 = foreignizing, 1 = domesticating)\n\n## Audience\n\n- Description: General adult readers\n- Expertise: non-specialist\n- Locale: US\n\n## Register & Voice\n\n- Formality: neutral\n- Voice: active where natural\n- Person: third\n\n## Genre\n\nfeature journalism\n\n## Terminology guidance\n\nKeep institutional names official.\n\n## Style decisions\n\nSerial comma; sentence case headings.\n\n## Things to preserve\n\n- personal names\n- figures\n\n## Things to localise\n\n- date formats\n\n## Things to avoid\n\n- translationese\n\n## Open questions\n\n(unspecified)\n";

export const SAMPLE_TRACE: TraceJson = {
  "run_id": "17658d7e342a",
  "status": "done",
  "incomplete": false,
  "spec": {
    "skopos": "Publishable English rendering of a Japanese news item.",
    "text_type": "informative",
    "house_mode": "covert",
    "loyalty": {
      "author_intention": 0.7,
      "st_culture_fidelity": 0.9,
      "tt_reader_orientation": 0.7,
      "commissioner_brief": 0.5
    },
    "domestication_axis": 0.4,
    "audience": {
      "description": "General adult readers",
      "expertise": "non-specialist",
      "locale": "US"
    },
    "register": {
      "formality": "neutral",
      "voice": "active where natural",
      "person": "third"
    },
    "genre": "feature journalism",
    "terminology_guidance": "Keep institutional names official.",
    "style_decisions": "Serial comma; sentence case headings.",
    "preserve": [
      "personal names",
      "figures"
    ],
    "localize": [
      "date formats"
    ],
    "avoid": [
      "translationese"
    ],
    "open_questions": [],
    "source_lang": "ja",
    "target_lang": "en"
  },
  "spec_markdown": "# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader orientation: 0.7\n- Loyalty weight, commissioner brief: 0.5\n- Domestication axis: 0.4 (0 = foreignizing, 1 = domesticating)\n\n## Audience\n\n- Description: General adult readers\n- Expertise: non-specialist\n- Locale: US\n\n## Register & Voice\n\n- Formality: neutral\n- Voice: active where natural\n- Person: third\n\n## Genre\n\nfeature journalism\n\n## Terminology guidance\n\nKeep institutional names official.\n\n## Style decisions\n\nSerial comma; sentence case headings.\n\n## Things to preserve\n\n- personal names\n- figures\n\n## Things to localise\n\n- date formats\n\n## Things to avoid\n\n- translationese\n\n## Open questions\n\n(unspecified)\n",
  "config": {
    "threshold": -2,
    "max_revisions": 2,
    "max_chunk_chars": 4000,
    "generation_temperature": 0.3
  },
  "judge_prompt_version": "judge-v1",
  "chunk_warnings": [],
  "chunks": [
    {
      "chunk": {
        "index": 0,
        "text": "大臣は昨日、計画を発表した。",
        "boundary_kind": "paragraph",
        "separator": "",
        "overlong": false
      },
      "identification": {
        "skopos": "inform readers",
        "audience": "general readers",
        "register": "neutral",
        "genre": "news",
        "stance": "descriptive",
        "notes": "none"
      },
      "identification_warnings": [],
      "assembled_prompts": [
        "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]",
        "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]"
      ],
      "verification_prompts": [
        "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]",
        "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]"
      ],
      "drafts": [
        "The minister anounced the plan yesterday.",
        "The minister announced the plan yesterday."
      ],
      "reports": [
        {
          "errors": [
            {
              "span": "anounced the plan",
              "category": "accuracy/mistranslation",
              "severity": "major",
              "explanation": "verb misrendered",
              "unlocatable": false
            },
            {
              "span": "anounced",
              "category": "fluency/spelling",
              "severity": "minor",
              "explanation": "misspelling",
              "unlocatable": false
            },
            {
              "span": "a perfectly idiomatic closing",
              "category": "style",
              "severity": "minor",
              "explanation": "tone drifts from the register",
              "unlocatable": true
            }
          ],
          "score": -7,
          "verdict": "revise",
          "iteration": 0,
          "warnings": [
            "span 'a perfectly idiomatic closing' not found in the candidate translation"
          ]
        },
        {
          "errors": [],
          "score": 0,
          "verdict": "accept",
          "iteration": 1,
          "warnings": []
        }
      ],
      "accepted_draft_index": 1,
      "accepted": true,
      "verification_failed": false,
      "translation": "The minister announced the plan yesterday.",
      "numeral_warnings": [],
      "elapsed_ms": 0.0,
      "memory_before": {
        "ledger": [],
        "summary": "",
        "prev_chunk": null
      },
      "memory_after": {
        "ledger": [
          [
            "大臣",
            "minister"
          ]
        ],
        "summary": "w00 w01 w02 w03 w04 w05 w06 w07 w08 w09 w010 w011 w012 w013 w014 w015 w016 w017 w018 w019 w020 w021 w022 w023 w024 w025 w026 w027 w028 w029 w030 w031 w032 w033 w034 w035 w036 w037 w038 w039 w040 w041 w042 w043 w044 w045 w046 w047 w048 w049 w050 w051 w052 w053 w054",
        "prev_chunk": [
          "大臣は昨日、計画を発表した。",
          "The minister announced the plan yesterday."
        ]
      },
      "memory_warnings": []
    },
    {
      "chunk": {
        "index": 1,
        "text": "省は4月に予算を公表する。",
        "boundary_kind": "paragraph",
        "separator": "\n\n",
        "overlong": false
      },
      "identification": {
        "skopos": "inform readers",
        "audience": "general readers",
        "register": "neutral",
        "genre": "news",
        "stance": "descriptive",
        "notes": "none"
      },
      "identification_warnings": [],
      "assembled_prompts": [
        "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]"
      ],
      "verification_prompts": [
        "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]"
      ],
      "drafts": [
        "The ministry will publish the budget in April."
      ],
      "reports": [
        {
          "errors": [],
          "score": 0,
          "verdict": "accept",
          "iteration": 0,
          "warnings": []
        }
      ],
      "accepted_draft_index": 0,
      "accepted": true,
      "verification_failed": false,
      "translation": "The ministry will publish the budget in April.",
      "numeral_warnings": [
        "number '4' from the source was not found in the translation"
      ],
      "elapsed_ms": 0.0,
      "memory_before": {
        "ledger": [
          [
            "大臣",
            "minister"
          ]
        ],
        "summary": "w00 w01 w02 w03 w04 w05 w06 w07 w08 w09 w010 w011 w012 w013 w014 w015 w016 w017 w018 w019 w020 w021 w022 w023 w024 w025 w026 w027 w028 w029 w030 w031 w032 w033 w034 w035 w036 w037 w038 w039 w040 w041 w042 w043 w044 w045 w046 w047 w048 w049 w050 w051 w052 w053 w054",
        "prev_chunk": [
          "大臣は昨日、計画を発表した。",
          "The minister announced the plan yesterday."
        ]
      },
      "memory_after": {
        "ledger": [
          [
            "大臣",
            "minister"
          ],
          [
            "予算",
            "budget"
          ]
        ],
        "summary": "w10 w11 w12 w13 w14 w15 w16 w17 w18 w19 w110 w111 w112 w113 w114 w115 w116 w117 w118 w119 w120 w121 w122 w123 w124 w125 w126 w127 w128 w129 w130 w131 w132 w133 w134 w135 w136 w137 w138 w139 w140 w141 w142 w143 w144 w145 w146 w147 w148 w149 w150 w151 w152 w153 w154",
        "prev_chunk": [
          "省は4月に予算を公表する。",
          "The ministry will publish the budget in April."
        ]
      },
      "memory_warnings": []
    },
    {
      "chunk": {
        "index": 2,
        "text": "当局者は発表を歓迎した。",
        "boundary_kind": "paragraph",
        "separator": "\n\n",
        "overlong": false
      },
      "identification": {
        "skopos": "inform readers",
        "audience": "general readers",
        "register": "neutral",
        "genre": "news",
        "stance": "descriptive",
        "notes": "none"
      },
      "identification_warnings": [],
      "assembled_prompts": [
        "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]"
      ],
      "verification_prompts": [
        "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]"
      ],
      "drafts": [
        "Officials welcomed the announcement."
      ],
      "reports": [
        {
          "errors": [],
          "score": 0,
          "verdict": "accept",
          "iteration": 0,
          "warnings": []
        }
      ],
      "accepted_draft_index": 0,
      "accepted": true,
      "verification_failed": false,
      "translation": "Officials welcomed the announcement.",
      "numeral_warnings": [],
      "elapsed_ms": 0.0,
      "memory_before": {
        "ledger": [
          [
            "大臣",
            "minister"
          ],
          [
            "予算",
            "budget"
          ]
        ],
        "summary": "w10 w11 w12 w13 w14 w15 w16 w17 w18 w19 w110 w111 w112 w113 w114 w115 w116 w117 w118 w119 w120 w121 w122 w123 w124 w125 w126 w127 w128 w129 w130 w131 w132 w133 w134 w135 w136 w137 w138 w139 w140 w141 w142 w143 w144 w145 w146 w147 w148 w149 w150 w151 w152 w153 w154",
        "prev_chunk": [
          "省は4月に予算を公表する。",
          "The ministry will publish the budget in April."
        ]
      },
      "memory_after": {
        "ledger": [
          [
            "大臣",
            "minister"
          ],
          [
            "予算",
            "budget"
          ]
        ],
        "summary": "w20 w21 w22 w23 w24 w25 w26 w27 w28 w29 w210 w211 w212 w213 w214 w215 w216 w217 w218 w219 w220 w221 w222 w223 w224 w225 w226 w227 w228 w229 w230 w231 w232 w233 w234 w235 w236 w237 w238 w239 w240 w241 w242 w243 w244 w245 w246 w247 w248 w249 w250 w251 w252 w253 w254",
        "prev_chunk": [
          "当局者は発表を歓迎した。",
          "Officials welcomed the announcement."
        ]
      },
      "memory_warnings": []
    }
  ],
  "model_calls": [
    {
      "stage_tag": "identify",
      "system": "You are a translation analyst. You study a source text before it is translated and reply with strict JSON only.",
      "user": "Analyse the following ja text before it is translated into en.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader orientation: 0.7\n- Loyalty weight,\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "{\"skopos\": \"inform readers\", \"audience\": \"general readers\", \"register\": \"neutral\", \"genre\": \"news\", \"stance\": \"descriptive\", \"notes\": \"none\"}",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "generate",
      "system": "You are a professional translator. You follow the translation specification exactly and output only the translation text, with no preamble, notes, or markup.",
      "user": "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]",
      "temperature": 0.3,
      "reply": "The minister anounced the plan yesterday.",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "verify",
      "system": "You are an annotator of translation errors. You compare a candidate translation against its source and a translation specification, mark error spans, and reply with a JSON array only. You never report a score.",
      "user": "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "[{\"span\": \"anounced the plan\", \"category\": \"accuracy/mistranslation\", \"severity\": \"major\", \"explanation\": \"verb misrendered\"}, {\"span\": \"anounced\", \"category\": \"fluency/spelling\", \"severity\": \"minor\", \"explanation\": \"misspelling\"}, {\"span\": \"a perfectly idiomatic closing\", \"category\": \"style\", \"severity\": \"minor\", \"explanation\": \"tone drifts from the register\"}]",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "generate",
      "system": "You are a professional translator. You follow the translation specification exactly and output only the translation text, with no preamble, notes, or markup.",
      "user": "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]",
      "temperature": 0.3,
      "reply": "The minister announced the plan yesterday.",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "verify",
      "system": "You are an annotator of translation errors. You compare a candidate translation against its source and a translation specification, mark error spans, and reply with a JSON array only. You never report a score.",
      "user": "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "[]",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "memory_update",
      "system": "You maintain working memory for a long document translation. You reply with strict JSON and nothing else.",
      "user": "A document is being translated from ja to en, one chunk at a time.\n\nEstablished terminology so far:\n(none)\n\nRunning summary so far:\n(none)\n\nLatest chunk source:\n大臣は昨日、計画を発表した。\n\nLatest chunk translation:\nThe minister announced the plan yesterday.\n\nUpdate the memory. Reply with one JSON object of this exact shape:\n{\"new_terms\": [[\"source term\", \"target rendering\"], ...], \"summary\": \"...\"}\n\nnew_terms\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "{\"new_terms\": [[\"\\u5927\\u81e3\", \"minister\"]], \"summary\": \"w00 w01 w02 w03 w04 w05 w06 w07 w08 w09 w010 w011 w012 w013 w014 w015 w016 w017 w018 w019 w020 w021 w022 w023 w024 w025 w026 w027 w028 w029 w030 w031 w032 w033 w034 w035 w036 w037 w038 w039 w040 w041 w042 w043 w044 w045 w046 w047 w048 w049 w050 w051 w052 w053 w054\"}",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "identify",
      "system": "You are a translation analyst. You study a source text before it is translated and reply with strict JSON only.",
      "user": "Analyse the following ja text before it is translated into en.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader orientation: 0.7\n- Loyalty weight,\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "{\"skopos\": \"inform readers\", \"audience\": \"general readers\", \"register\": \"neutral\", \"genre\": \"news\", \"stance\": \"descriptive\", \"notes\": \"none\"}",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "generate",
      "system": "You are a professional translator. You follow the translation specification exactly and output only the translation text, with no preamble, notes, or markup.",
      "user": "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]",
      "temperature": 0.3,
      "reply": "The ministry will publish the budget in April.",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "verify",
      "system": "You are an annotator of translation errors. You compare a candidate translation against its source and a translation specification, mark error spans, and reply with a JSON array only. You never report a score.",
      "user": "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "[]",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "memory_update",
      "system": "You maintain working memory for a long document translation. You reply with strict JSON and nothing else.",
      "user": "A document is being translated from ja to en, one chunk at a time.\n\nEstablished terminology so far:\n大臣 → minister\n\nRunning summary so far:\nw00 w01 w02 w03 w04 w05 w06 w07 w08 w09 w010 w011 w012 w013 w014 w015 w016 w017 w018 w019 w020 w021 w022 w023 w024 w025 w026 w027 w028 w029 w030 w031 w032 w033 w034 w035 w036 w037 w038 w039 w040 w041 w042 w043 w044 w045 w046 w047 w048 w049 w050 w051 w052 w053 w\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "{\"new_terms\": [[\"\\u4e88\\u7b97\", \"budget\"]], \"summary\": \"w10 w11 w12 w13 w14 w15 w16 w17 w18 w19 w110 w111 w112 w113 w114 w115 w116 w117 w118 w119 w120 w121 w122 w123 w124 w125 w126 w127 w128 w129 w130 w131 w132 w133 w134 w135 w136 w137 w138 w139 w140 w141 w142 w143 w144 w145 w146 w147 w148 w149 w150 w151 w152 w153 w154\"}",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "identify",
      "system": "You are a translation analyst. You study a source text before it is translated and reply with strict JSON only.",
      "user": "Analyse the following ja text before it is translated into en.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader orientation: 0.7\n- Loyalty weight,\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "{\"skopos\": \"inform readers\", \"audience\": \"general readers\", \"register\": \"neutral\", \"genre\": \"news\", \"stance\": \"descriptive\", \"notes\": \"none\"}",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "generate",
      "system": "You are a professional translator. You follow the translation specification exactly and output only the translation text, with no preamble, notes, or markup.",
      "user": "Translate the source text below from ja to en, following the translation specification exactly.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Text type: informative\n- House mode: covert\n- Loyalty weight, author intention: 0.7\n- Loyalty weight, source-culture fidelity: 0.9\n- Loyalty weight, target-reader o\n…[trimmed for fixture]",
      "temperature": 0.3,
      "reply": "Officials welcomed the announcement.",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "verify",
      "system": "You are an annotator of translation errors. You compare a candidate translation against its source and a translation specification, mark error spans, and reply with a JSON array only. You never report a score.",
      "user": "Annotate translation errors in a candidate en translation of a ja source text. Judge the candidate against the source and against the translation specification below: a rendering the specification calls for is correct even where a different default exists.\n\n### Translation specification\n\n# Translation specification (ja → en)\n\n## Skopos\n\nPublishable English rendering of a Japanese news item.\n\n- Tex\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "[]",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    },
    {
      "stage_tag": "memory_update",
      "system": "You maintain working memory for a long document translation. You reply with strict JSON and nothing else.",
      "user": "A document is being translated from ja to en, one chunk at a time.\n\nEstablished terminology so far:\n大臣 → minister\n予算 → budget\n\nRunning summary so far:\nw10 w11 w12 w13 w14 w15 w16 w17 w18 w19 w110 w111 w112 w113 w114 w115 w116 w117 w118 w119 w120 w121 w122 w123 w124 w125 w126 w127 w128 w129 w130 w131 w132 w133 w134 w135 w136 w137 w138 w139 w140 w141 w142 w143 w144 w145 w146 w147 w148 w149 w150 w151\n…[trimmed for fixture]",
      "temperature": 0.0,
      "reply": "{\"new_terms\": [], \"summary\": \"w20 w21 w22 w23 w24 w25 w26 w27 w28 w29 w210 w211 w212 w213 w214 w215 w216 w217 w218 w219 w220 w221 w222 w223 w224 w225 w226 w227 w228 w229 w230 w231 w232 w233 w234 w235 w236 w237 w238 w239 w240 w241 w242 w243 w244 w245 w246 w247 w248 w249 w250 w251 w252 w253 w254\"}",
      "input_tokens": 0,
      "output_tokens": 0,
      "latency_ms": 0.0
    }
  ],
  "total_model_calls": 14,
  "timings": {
    "started_at": "",
    "finished_at": "",
    "elapsed_ms": 0.0
  },
  "output": "The minister announced the plan yesterday.\n\nThe ministry will publish the budget in April.\n\nOfficials welcomed the announcement."
};

export const SAMPLE_EVENTS: { name: string; payload: unknown }[] = [
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 0,
      "stage": "identify"
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 0,
      "stage": "identify",
      "identification": {
        "skopos": "inform readers",
        "audience": "general readers",
        "register": "neutral",
        "genre": "news",
        "stance": "descriptive",
        "notes": "none"
      }
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 0,
      "stage": "generate",
      "iteration": 0
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 0,
      "stage": "generate",
      "iteration": 0,
      "draft": "The minister anounced the plan yesterday."
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 0,
      "stage": "verify",
      "iteration": 0
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 0,
      "stage": "verify",
      "iteration": 0,
      "report": {
        "errors": [
          {
            "span": "anounced the plan",
            "category": "accuracy/mistranslation",
            "severity": "major",
            "explanation": "verb misrendered",
            "unlocatable": false
          },
          {
            "span": "anounced",
            "category": "fluency/spelling",
            "severity": "minor",
            "explanation": "misspelling",
            "unlocatable": false
          },
          {
            "span": "a perfectly idiomatic closing",
            "category": "style",
            "severity": "minor",
            "explanation": "tone drifts from the register",
            "unlocatable": true
          }
        ],
        "score": -7,
        "verdict": "revise",
        "iteration": 0,
        "warnings": [
          "span 'a perfectly idiomatic closing' not found in the candidate translation"
        ]
      }
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 0,
      "stage": "generate",
      "iteration": 1
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 0,
      "stage": "generate",
      "iteration": 1,
      "draft": "The minister announced the plan yesterday."
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 0,
      "stage": "verify",
      "iteration": 1
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 0,
      "stage": "verify",
      "iteration": 1,
      "report": {
        "errors": [],
        "score": 0,
        "verdict": "accept",
        "iteration": 1,
        "warnings": []
      }
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 0,
      "stage": "memory_update"
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 0,
      "stage": "memory_update",
      "memory": {
        "ledger": [
          [
            "大臣",
            "minister"
          ]
        ],
        "summary": "w00 w01 w02 w03 w04 w05 w06 w07 w08 w09 w010 w011 w012 w013 w014 w015 w016 w017 w018 w019 w020 w021 w022 w023 w024 w025 w026 w027 w028 w029 w030 w031 w032 w033 w034 w035 w036 w037 w038 w039 w040 w041 w042 w043 w044 w045 w046 w047 w048 w049 w050 w051 w052 w053 w054",
        "prev_chunk": [
          "大臣は昨日、計画を発表した。",
          "The minister announced the plan yesterday."
        ]
      }
    }
  },
  {
    "name": "chunk_done",
    "payload": {
      "chunk_index": 0,
      "accepted": true,
      "accepted_draft_index": 1,
      "score": 0,
      "translation": "The minister announced the plan yesterday."
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 1,
      "stage": "identify"
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 1,
      "stage": "identify",
      "identification": {
        "skopos": "inform readers",
        "audience": "general readers",
        "register": "neutral",
        "genre": "news",
        "stance": "descriptive",
        "notes": "none"
      }
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 1,
      "stage": "generate",
      "iteration": 0
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 1,
      "stage": "generate",
      "iteration": 0,
      "draft": "The ministry will publish the budget in April."
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 1,
      "stage": "verify",
      "iteration": 0
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 1,
      "stage": "verify",
      "iteration": 0,
      "report": {
        "errors": [],
        "score": 0,
        "verdict": "accept",
        "iteration": 0,
        "warnings": []
      }
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 1,
      "stage": "memory_update"
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 1,
      "stage": "memory_update",
      "memory": {
        "ledger": [
          [
            "大臣",
            "minister"
          ],
          [
            "予算",
            "budget"
          ]
        ],
        "summary": "w10 w11 w12 w13 w14 w15 w16 w17 w18 w19 w110 w111 w112 w113 w114 w115 w116 w117 w118 w119 w120 w121 w122 w123 w124 w125 w126 w127 w128 w129 w130 w131 w132 w133 w134 w135 w136 w137 w138 w139 w140 w141 w142 w143 w144 w145 w146 w147 w148 w149 w150 w151 w152 w153 w154",
        "prev_chunk": [
          "省は4月に予算を公表する。",
          "The ministry will publish the budget in April."
        ]
      }
    }
  },
  {
    "name": "chunk_done",
    "payload": {
      "chunk_index": 1,
      "accepted": true,
      "accepted_draft_index": 0,
      "score": 0,
      "translation": "The ministry will publish the budget in April."
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 2,
      "stage": "identify"
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 2,
      "stage": "identify",
      "identification": {
        "skopos": "inform readers",
        "audience": "general readers",
        "register": "neutral",
        "genre": "news",
        "stance": "descriptive",
        "notes": "none"
      }
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 2,
      "stage": "generate",
      "iteration": 0
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 2,
      "stage": "generate",
      "iteration": 0,
      "draft": "Officials welcomed the announcement."
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 2,
      "stage": "verify",
      "iteration": 0
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 2,
      "stage": "verify",
      "iteration": 0,
      "report": {
        "errors": [],
        "score": 0,
        "verdict": "accept",
        "iteration": 0,
        "warnings": []
      }
    }
  },
  {
    "name": "stage_started",
    "payload": {
      "chunk_index": 2,
      "stage": "memory_update"
    }
  },
  {
    "name": "stage_finished",
    "payload": {
      "chunk_index": 2,
      "stage": "memory_update",
      "memory": {
        "ledger": [
          [
            "大臣",
            "minister"
          ],
          [
            "予算",
            "budget"
          ]
        ],
        "summary": "w20 w21 w22 w23 w24 w25 w26 w27 w28 w29 w210 w211 w212 w213 w214 w215 w216 w217 w218 w219 w220 w221 w222 w223 w224 w225 w226 w227 w228 w229 w230 w231 w232 w233 w234 w235 w236 w237 w238 w239 w240 w241 w242 w243 w244 w245 w246 w247 w248 w249 w250 w251 w252 w253 w254",
        "prev_chunk": [
          "当局者は発表を歓迎した。",
          "Officials welcomed the announcement."
        ]
      }
    }
  },
  {
    "name": "chunk_done",
    "payload": {
      "chunk_index": 2,
      "accepted": true,
      "accepted_draft_index": 0,
      "score": 0,
      "translation": "Officials welcomed the announcement."
    }
  },
  {
    "name": "run_done",
    "payload": {
      "run_id": "17658d7e342a",
      "status": "done",
      "output": "The minister announced the plan yesterday.\n\nThe ministry will publish the budget in April.\n\nOfficials welcomed the announcement.",
      "total_model_calls": 14,
      "all_accepted": true
    }
  }
];
