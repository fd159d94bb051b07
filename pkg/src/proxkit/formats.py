"""JSON instance files.

One JSON document per object, tagged by ``kind``::

    lattice   {"kind": "lattice", "elements": [...], "leq": [[i, j], ...]}
    poset     {"kind": "poset", "elements": [...], "leq": [[i, j], ...]}
    relation  {"kind": "relation", "lattice": REF, "pairs": [[i, j], ...] | "leq"}
    morphism  {"kind": "morphism", "source": REF, "target": REF, "map": [j0, j1, ...],
               "source_relation": PAIRS | "leq", "target_relation": PAIRS | "leq"}
    gleason   {"kind": "gleason", "elements": [...], "leq": [[i, j], ...], "R": [[i, j], ...]}

``leq`` may list any generating pairs; the reflexive-transitive closure is
taken. Elements inside pairs may be given by index or by label. A ``REF`` is
an inline document, a path, or the name of a corpus fixture.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .corpus import corpus_dir
from .errors import ParseError
from .gleason import GleasonSpace
from .morphism import HemiMorphism
from .order import Lattice, Poset, close_order, lattice_from_poset
from .subordination import Subordination, leq_subordination

KINDS = ("lattice", "poset", "relation", "morphism", "gleason")


def fixture_path(name: str) -> Path:
    stem = name[2:-1] if name.startswith("U(") and name.endswith(")") else None
    stem = f"U_{stem}" if stem else name
    return corpus_dir() / f"{stem}.json"


def parse_text(text: str, origin: str = "<input>") -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{origin}:1:1: top-level value must be an object")
    doc.setdefault("kind", _infer_kind(doc, origin))
    if doc["kind"] not in KINDS:
        raise ParseError(f"{origin}: unknown kind {doc['kind']!r}")
    return doc


def _infer_kind(doc: dict, origin: str) -> str:
    if "map" in doc:
        return "morphism"
    if "R" in doc:
        return "gleason"
    if "pairs" in doc:
        return "relation"
    if "elements" in doc:
        return "lattice"
    raise ParseError(f"{origin}: cannot tell what kind of instance this is")


def load(ref: Any) -> dict:
    """Resolve a reference (inline dict, file path or fixture name) to a document."""
    if isinstance(ref, dict):
        doc = dict(ref)
        doc.setdefault("kind", _infer_kind(doc, "<inline>"))
        return doc
    if not isinstance(ref, str):
        raise ParseError(f"cannot resolve reference {ref!r}")
    path = Path(ref)
    if not path.is_file():
        fixture = fixture_path(ref)
        if fixture.is_file():
            path = fixture
        else:
            raise FileNotFoundError(f"no file or corpus fixture named {ref!r}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 text ({exc.reason})") from None
    doc = parse_text(text, str(path))
    doc.setdefault("name", path.stem)
    return doc


def _field(doc: dict, key: str):
    if key not in doc:
        raise ParseError(f"{doc.get('name', '<input>')}: missing field {key!r}")
    return doc[key]


def _labels(doc: dict) -> list[str]:
    elems = _field(doc, "elements")
    if not isinstance(elems, list):
        raise ParseError("'elements' must be a list")
    labels = [str(e) for e in elems]
    if len(set(labels)) != len(labels):
        raise ParseError("element labels must be distinct")
    return labels


def _index(token, labels: list[str]) -> int:
    if isinstance(token, bool):
        raise ParseError(f"bad element reference {token!r}")
    if isinstance(token, int):
        if not 0 <= token < len(labels):
            raise ParseError(f"element index {token} out of range 0..{len(labels) - 1}")
        return token
    if isinstance(token, str) and token in labels:
        return labels.index(token)
    raise ParseError(f"unknown element {token!r}")


def _pairs(raw, labels: list[str]) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise ParseError("pairs must be a list of two-element lists")
    out = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"bad pair {item!r}")
        out.append((_index(item[0], labels), _index(item[1], labels)))
    return out


def parse_poset(doc: dict) -> Poset:
    labels = _labels(doc)
    return close_order(_pairs(doc.get("leq", []), labels), len(labels), labels)


def parse_lattice(ref) -> Lattice:
    doc = load(ref)
    if doc["kind"] == "relation":
        raise ParseError("expected a lattice, got a relation")
    return lattice_from_poset(parse_poset(doc))


def parse_relation(doc: dict, lattice: Lattice | None = None) -> Subordination:
    if lattice is None:
        lattice = parse_lattice(_field(doc, "lattice"))
    return relation_on(lattice, doc.get("pairs", "leq"))


def relation_on(lattice: Lattice, raw) -> Subordination:
    if raw == "leq" or raw is None:
        return leq_subordination(lattice)
    return Subordination.from_pairs(lattice, _pairs(raw, list(lattice.names)))


def parse_morphism_table(raw, source: Lattice, target: Lattice) -> list[int]:
    if isinstance(raw, str):
        raw = [t.strip() for t in raw.split(",") if t.strip()]
        raw = [int(t) if t.lstrip("-").isdigit() else t for t in raw]
    if not isinstance(raw, list) or len(raw) != source.size:
        raise ParseError(f"map must list one target element per source element ({source.size})")
    return [_index(t, list(target.names)) for t in raw]


def parse_morphism(doc: dict) -> HemiMorphism:
    L = parse_lattice(_field(doc, "source"))
    M = parse_lattice(_field(doc, "target"))
    s = relation_on(L, doc.get("source_relation", "leq"))
    t = relation_on(M, doc.get("target_relation", "leq"))
    return HemiMorphism(s, t, parse_morphism_table(_field(doc, "map"), L, M))


def parse_gleason(doc: dict) -> GleasonSpace:
    P = parse_poset(doc)
    return GleasonSpace.from_pairs(P, _pairs(_field(doc, "R"), list(P.names)))


def poset_doc(P: Poset, kind: str = "poset") -> dict:
    return {"kind": kind, "elements": list(P.names), "leq": [list(e) for e in P.covers]}


def lattice_doc(L: Lattice) -> dict:
    return poset_doc(L.poset, "lattice")


def relation_doc(s: Subordination, lattice_ref=None) -> dict:
    return {"kind": "relation",
            "lattice": lattice_ref if lattice_ref is not None else lattice_doc(s.lattice),
            "pairs": [list(p) for p in s.pairs]}


def gleason_doc(G: GleasonSpace) -> dict:
    doc = poset_doc(G.poset, "gleason")
    doc["R"] = [list(p) for p in G.pairs]
    return doc


def dumps(doc: dict) -> str:
    """One top-level field per line, each value compact. Diff-friendly and stable."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in doc.items())
    return "{\n" + body + "\n}\n"
