"""Stable text formats for digraphs: dot, edge list, and json.

Emission is canonical (arcs sorted by source then target, fixed header
and key order), so emit -> parse -> emit is byte-identical.  Vertex ids
are 0-based contiguous integers and survive every round trip; vertices
that touch no arc are written explicitly so the order is never lost.
"""

from __future__ import annotations

import json
import re

import numpy as np

from .digraph import Digraph

FORMATS = ("dot", "edgelist", "json")

_DOT_ARC = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*;\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;\s*$")


def emit(graph: Digraph, kind: str) -> str:
    if kind == "dot":
        return emit_dot(graph)
    if kind == "edgelist":
        return emit_edgelist(graph)
    if kind == "json":
        return emit_json(graph)
    raise ValueError(f"unknown format {kind!r}")


def parse(text: str, kind: str) -> Digraph:
    if kind == "dot":
        return parse_dot(text)
    if kind == "edgelist":
        return parse_edgelist(text)
    if kind == "json":
        return parse_json(text)
    raise ValueError(f"unknown format {kind!r}")


def detect_format(text: str, filename: str | None = None) -> str:
    """Guess the format from the filename extension, then the content."""
    if filename:
        lowered = filename.lower()
        if lowered.endswith((".dot", ".gv")):
            return "dot"
        if lowered.endswith(".json"):
            return "json"
        if lowered.endswith((".edges", ".edgelist", ".txt")):
            return "edgelist"
    head = text.lstrip()[:16]
    if head.startswith("digraph"):
        return "dot"
    if head.startswith("{"):
        return "json"
    return "edgelist"


# -- dot ---------------------------------------------------------------


def emit_dot(graph: Digraph) -> str:
    lines = ["digraph {"]
    degrees = graph.out_degrees() + graph.in_degrees()
    for v in np.flatnonzero(degrees == 0):
        lines.append(f"  {int(v)};")
    for u, v in graph.arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Digraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("digraph") or lines[-1] != "}":
        raise ValueError("not a dot digraph document")
    arcs: list[tuple[int, int]] = []
    seen = -1
    for ln in lines[1:-1]:
        m = _DOT_ARC.match(ln)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            arcs.append((u, v))
            seen = max(seen, u, v)
            continue
        m = _DOT_NODE.match(ln)
        if m:
            seen = max(seen, int(m.group(1)))
            continue
        raise ValueError(f"unparseable dot line: {ln!r}")
    return Digraph(seen + 1, arcs)


# -- edge list ---------------------------------------------------------


def emit_edgelist(graph: Digraph) -> str:
    lines = [f"# tournament n={graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.arcs())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Digraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list document")
    header = re.match(r"^#\s*tournament\s+n=(\d+)$", lines[0])
    if not header:
        raise ValueError("edge list must start with '# tournament n=<n>'")
    n = int(header.group(1))
    arcs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"unparseable edge-list line: {ln!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return Digraph(n, arcs)


# -- json --------------------------------------------------------------


def emit_json(graph: Digraph) -> str:
    doc = {
        "n": graph.n,
        "arcs": [[u, v] for u, v in graph.arcs()],
        "imbalance_sequence": list(graph.imbalance_sequence()),
        "imbalance_set": sorted(graph.imbalance_set(), reverse=True),
    }
    return json.dumps(doc, indent=None, separators=(", ", ": ")) + "\n"


def parse_json(text: str) -> Digraph:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "n" not in doc or "arcs" not in doc:
        raise ValueError("json document must carry 'n' and 'arcs'")
    return Digraph(int(doc["n"]), [(int(u), int(v)) for u, v in doc["arcs"]])
