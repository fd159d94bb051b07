"""Graphviz DOT export.

Hasse edges are solid; R-edges not already implied by the order are
dashed; ≡-classes with more than one point are drawn as clusters. Nodes are
emitted in index order so output is stable.
"""
from __future__ import annotations

from .gleason import GleasonSpace, quotient
from .order import Poset, bits_of


def _node(i: int) -> str:
    return f"n{i}"


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_dot(P: Poset, name: str = "P") -> str:
    return gleason_dot(GleasonSpace(P, P.up), name, show_relation=False)


def gleason_dot(G: GleasonSpace, name: str = "G", show_relation: bool = True) -> str:
    P = G.poset
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for i, label in enumerate(P.names):
        lines.append(f"  {_node(i)} [label={_quote(label)}];")
    for i, j in P.covers:
        lines.append(f"  {_node(i)} -> {_node(j)};")
    if show_relation:
        for x in range(G.size):
            for y in bits_of(G.rows[x]):
                if x != y and not P.le(x, y):
                    lines.append(f"  {_node(x)} -> {_node(y)} [style=dashed];")
        if G.is_preorder:
            for k, cls in enumerate(quotient(G).classes):
                if len(cls) > 1:
                    members = "; ".join(_node(x) for x in cls)
                    lines.append(f"  subgraph cluster_{k} {{ label={_quote(f'class {k}')}; {members}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"
