"""The builtin group corpus and corpus-file loading."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .builders import parse_expression
from .errors import ParseError


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    expr: str

    def as_dict(self) -> dict:
        return {"label": self.label, "expr": self.expr}


STRETCH = ("Sp62",)


def builtin_corpus(include_stretch: bool = False) -> list[CorpusEntry]:
    exprs = [f"Sym({n})" for n in range(3, 7)]
    exprs += [f"Alt({n})" for n in range(4, 7)]
    exprs += [f"C({n})" for n in (6, 12, 30)]
    exprs += [f"D({n})" for n in range(4, 16)]
    exprs += [f"PSL2({q})" for q in (4, 5, 7, 8, 9, 11, 13)]
    exprs += [f"Sym(5) * Pow(Sym(3), {t})" for t in (1, 2, 3)]
    exprs += [f"InvolutionExample({s})" for s in range(1, 6)]
    exprs += ["Alt(5) * C(6)"]
    if include_stretch:
        exprs += list(STRETCH)
    return [CorpusEntry(e, e) for e in exprs]


def load_corpus(path: str | Path) -> list[CorpusEntry]:
    """Read a JSON array of ``{"label": ..., "expr": ...}`` objects.

    Expressions are parsed eagerly so malformed files fail before any work.
    """
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"corpus file is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ParseError("corpus file must contain a JSON array")
    out = []
    for item in data:
        if not isinstance(item, dict) or set(item) != {"label", "expr"}:
            raise ParseError(f"corpus entries need exactly 'label' and 'expr': {item!r}")
        parse_expression(item["expr"])
        out.append(CorpusEntry(str(item["label"]), str(item["expr"])))
    return out


def dump_corpus(entries: list[CorpusEntry]) -> str:
    return json.dumps([e.as_dict() for e in entries], indent=2)
