"""Text, JSON, DOT and TikZ renderings of the diagrams.

Weights print as doubled integers (the factor 1/2 omitted) unless ``half`` is
set. Output ordering is rows ascending, then columns ascending.
"""

from __future__ import annotations

import json
from typing import Optional

from .bgg import BggDiagram
from .hasse import HasseDiagram, HasseVertex
from .pushdown import (
    ComplexDescriptor,
    ComplexTerm,
    DirectImage,
    ModuleDescriptor,
    descriptor_from_weight,
)
from .weights import ParabolicMarking, Weight

FORMATS = ("text", "json", "dot", "tikz")


def _half_note(half: bool) -> str:
    return "half-integer coordinates" if half else "factor 1/2 omitted"


def _sorted_edges(h: HasseDiagram):
    return sorted(h.edges, key=lambda e: (e.source.row, e.source.col, e.target.col))


# -- generic graph output -------------------------------------------------


def _dot(name: str, nodes, edges) -> str:
    """``nodes``: (id, label, rank); ``edges``: (src, dst, label, order)."""
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
    for node_id, label, _ in nodes:
        lines.append(f'  {node_id} [label="{label}"];')
    ranks = sorted({r for _, _, r in nodes})
    for r in ranks:
        ids = " ".join(n for n, _, rr in nodes if rr == r)
        lines.append(f"  {{ rank=same; {ids} }}")
    for src, dst, label, order in edges:
        attrs = []
        if label:
            attrs.append(f'label="{label}"')
        if order == 2:
            attrs.append('color="black:black"')
        attr = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {src} -> {dst}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tikz(nodes, edges, positions) -> str:
    """Standalone TikZ picture; ``positions`` maps node id to (x, y)."""
    lines = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[x=1.6cm, y=-1.1cm, every node/.style={font=\small}]",
    ]
    for node_id, label, _ in nodes:
        x, y = positions[node_id]
        lines.append(f"  \\node ({node_id}) at ({x},{y}) {{${label}$}};")
    for src, dst, label, order in edges:
        style = "->, double" if order == 2 else "->"
        lab = f" node[midway, fill=white, inner sep=1pt] {{\\tiny ${label}$}}" if label else ""
        lines.append(f"  \\draw[{style}] ({src}) --{lab} ({dst});")
    lines += [r"\end{tikzpicture}", r"\end{document}"]
    return "\n".join(lines) + "\n"


def _tex_label(v: HasseVertex) -> str:
    return f"A_{{{v.row}{v.col}}}" if v.row < 10 and v.col < 10 else f"A_{{{v.row},{v.col}}}"


def _node_id(v: HasseVertex) -> str:
    return f"A_{v.row}_{v.col}"


def _vertex_graph(h: HasseDiagram, labels: dict, tex_labels: dict, fmt: str, name: str) -> str:
    nodes = [(_node_id(v), labels[v], v.row) for v in h.topological_order()]
    edges = [(_node_id(e.source), _node_id(e.target), e.root.name, 1) for e in _sorted_edges(h)]
    if fmt == "dot":
        return _dot(name, nodes, edges)
    tnodes = [(_node_id(v), tex_labels[v], v.row) for v in h.topological_order()]
    tedges = [(_node_id(e.source), _node_id(e.target), e.root.tex, 1) for e in _sorted_edges(h)]
    positions = {_node_id(v): (v.col, v.row) for v in h.vertices}
    return _tikz(tnodes, tedges, positions)


# -- hasse -----------------------------------------------------------------


def render_hasse(h: HasseDiagram, fmt: str = "text") -> str:
    if fmt == "json":
        return _dumps(hasse_record(h))
    if fmt in ("dot", "tikz"):
        labels = {v: v.label for v in h.vertices}
        tex = {v: _tex_label(v) for v in h.vertices}
        return _vertex_graph(h, labels, tex, fmt, "hasse")
    lines = [f"Relative Hasse diagram, k={h.k} ({len(h.vertices)} vertices, {len(h.edges)} edges)"]
    for i, row in enumerate(h.rows()):
        lines.append(f"row {i}: " + "  ".join(v.label for v in row))
    for e in _sorted_edges(h):
        lines.append(f"{e.source.label} -> {e.target.label} [{e.root.name}]")
    return "\n".join(lines) + "\n"


def hasse_record(h: HasseDiagram) -> dict:
    return {
        "k": h.k,
        "vertices": [{"s": v.s, "t": v.t, "i": v.row, "j": v.col} for v in h.topological_order()],
        "edges": [
            {"source": [e.source.s, e.source.t], "target": [e.target.s, e.target.t], "root": e.root.name}
            for e in _sorted_edges(h)
        ],
    }


# -- bgg -------------------------------------------------------------------


def render_bgg(d: BggDiagram, fmt: str = "text", half: bool = False) -> str:
    if fmt == "json":
        return _dumps(full_record(d))
    h = d.hasse
    if fmt in ("dot", "tikz"):
        labels = {v: f"{v.label} {d[v].format(half=half)}" for v in h.vertices}
        tex = {v: d[v].format(half=half).replace("|", r"\,|\,") for v in h.vertices}
        return _vertex_graph(h, labels, tex, fmt, "bgg")
    lines = [f"Relative BGG diagram, k={d.k}, seed {d.seed.format(half=half)} ({_half_note(half)})"]
    for i, row in enumerate(h.rows()):
        cells = "   ".join(f"{v.label} {d[v].format(half=half)}" for v in row)
        lines.append(f"V_{i}: {cells}")
    return "\n".join(lines) + "\n"


# -- pushdown --------------------------------------------------------------


def render_pushdown(d: BggDiagram, images: dict, cx: Optional[ComplexDescriptor], fmt: str = "text", half: bool = False) -> str:
    if fmt == "json":
        return _dumps(full_record(d, images, cx))
    h = d.hasse
    if fmt in ("dot", "tikz"):
        labels = {v: f"{v.label} {images[v].format(half=half)}" for v in h.vertices}
        tex = {}
        for v in h.vertices:
            img = images[v]
            if img.exists:
                w = img.weight.format(ParabolicMarking.P, half=half).replace("|", r"\,|\,")
                tex[v] = f"{w}_{{{img.degree}}}"
            else:
                tex[v] = r"\emptyset"
        return _vertex_graph(h, labels, tex, fmt, "pushdown")
    lines = [
        f"Direct images, k={d.k} ({_half_note(half)}; subscript = degree, ∅ = no direct image)"
    ]
    for i, row in enumerate(h.rows()):
        cells = "   ".join(f"{v.label} {images[v].format(half=half)}" for v in row)
        lines.append(f"row {i}: {cells}")
    return "\n".join(lines) + "\n"


# -- complex ---------------------------------------------------------------


def module_label(term: ComplexTerm, idx: int, k: int) -> str:
    v, m = term.vertices[idx], term.modules[idx]
    if term.position <= 1:
        return m.name
    return f"U{v.row},{v.col}" if v.row >= 10 else f"U{v.row}{v.col}"


def _complex_edges(cx: ComplexDescriptor):
    out = []
    for src, dst, order in zip(cx.terms, cx.terms[1:], cx.orders):
        for a, va in enumerate(src.vertices):
            for b, vb in enumerate(dst.vertices):
                if dst.position - src.position == 1 and abs(va.col - vb.col) != 1:
                    continue
                out.append((src.position, a, dst.position, b, order))
    return out


def render_complex(cx: ComplexDescriptor, fmt: str = "text", half: bool = False) -> str:
    k = cx.k
    if fmt == "json":
        return _dumps({"k": k, "complex": complex_record(cx)})
    if fmt in ("dot", "tikz"):
        def nid(pos, idx):
            return f"U_{pos}_{idx}"

        nodes, tnodes, positions = [], [], {}
        for t in cx.terms:
            for idx, (v, m) in enumerate(zip(t.vertices, t.modules)):
                nodes.append((nid(t.position, idx), f"{module_label(t, idx, k)}: {m.name} ({m.dim})", t.position))
                tlabel = module_label(t, idx, k).replace("(x)", r"\otimes ")
                if t.position <= 1:
                    tlabel = tlabel.replace("Sp_-", r"\mathrm{Sp}_-").replace("Sp_+", r"\mathrm{Sp}_+")
                else:
                    tlabel = f"U_{{{v.row}{v.col}}}" if v.row < 10 else f"U_{{{v.row},{v.col}}}"
                tnodes.append((nid(t.position, idx), tlabel, t.position))
                positions[nid(t.position, idx)] = (v.col, t.position)
        edges = [(nid(p, a), nid(q, b), "", o) for p, a, q, b, o in _complex_edges(cx)]
        if fmt == "dot":
            return _dot("complex", nodes, edges)
        return _tikz(tnodes, edges, positions)

    lines = [f"Pushed-down complex, k={k}: {len(cx.terms)} terms, positions {cx.positions} (-> order 1, => order 2)"]
    for n, t in enumerate(cx.terms):
        cells = []
        for idx, m in enumerate(t.modules):
            label = module_label(t, idx, k)
            if t.position <= 1:
                cells.append(f"{label} (dim {m.dim})")
            else:
                cells.append(f"{label} = {m.name} (dim {m.dim})")
        lines.append(f"[{t.position}] " + "   ".join(cells))
        if n < len(cx.orders):
            arrow = "=>" if cx.orders[n] == 2 else "->"
            lines.append(f"    {arrow} order {cx.orders[n]}")
    return "\n".join(lines) + "\n"


def render_dims(cx: ComplexDescriptor) -> str:
    from .dims import dim_so4, weyl_dim_sl

    header = f"{'pos':>3}  {'module':<8} {'sl_k highest weight':<24} {'dim V':>7} {'so4':<8} {'dim W':>5} {'dim U':>8}"
    lines = [f"Module dimensions, k={cx.k}", header]
    for t in cx.terms:
        for idx, m in enumerate(t.modules):
            slk = "[" + ",".join(map(str, m.slk_hw)) + "]"
            so4 = f"({m.so4_hw[0]},{m.so4_hw[1]})"
            label = module_label(t, idx, cx.k) if t.position > 1 else f"U{t.vertices[idx].row}{t.vertices[idx].col}"
            lines.append(
                f"{t.position:>3}  {label:<8} {slk:<24} {weyl_dim_sl(m.slk_hw):>7} {so4:<8} {dim_so4(*m.so4_hw):>5} {m.dim:>8}"
            )
        lines.append(f"{'':>3}  total at position {t.position}: {sum(m.dim for m in t.modules)}")
    return "\n".join(lines) + "\n"


# -- JSON ------------------------------------------------------------------


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def descriptor_record(m: ModuleDescriptor) -> dict:
    return {"slk": list(m.slk_hw), "so4": list(m.so4_hw), "dim": m.dim}


def descriptor_from_record(rec: dict) -> ModuleDescriptor:
    return ModuleDescriptor(tuple(rec["slk"]), tuple(rec["so4"]), rec["dim"])


def complex_record(cx: ComplexDescriptor) -> dict:
    return {
        "positions": cx.positions,
        "terms": [[descriptor_record(m) for m in t.modules] for t in cx.terms],
        "orders": list(cx.orders),
    }


def _image_record(img: DirectImage) -> dict:
    return {"degree": img.degree, "weight2": list(img.weight.coords2) if img.exists else None}


def full_record(d: BggDiagram, images: Optional[dict] = None, cx: Optional[ComplexDescriptor] = None) -> dict:
    """Top-level JSON record: seed, vertices with weights and images, and the complex."""
    vertices = []
    for v in d.hasse.topological_order():
        rec = {"s": v.s, "t": v.t, "i": v.row, "j": v.col, "weight2": list(d[v].coords2)}
        if images is not None:
            rec["image"] = _image_record(images[v])
        vertices.append(rec)
    out = {"k": d.k, "seed": list(d.seed.coords2), "vertices": vertices}
    if cx is not None:
        out["complex"] = complex_record(cx)
    return out


def complex_from_record(rec: dict) -> ComplexDescriptor:
    """Rebuild a :class:`ComplexDescriptor` from :func:`full_record` output.

    Terms are reassembled from the vertex image weights; the stored descriptors
    must agree with the ones recomputed from those weights.
    """
    k = rec["k"]
    cx = rec["complex"]
    by_row: dict[int, list] = {}
    for v in rec["vertices"]:
        by_row.setdefault(v["i"], []).append(v)
    terms = []
    for pos, stored in zip(cx["positions"], cx["terms"]):
        row = sorted(by_row[pos], key=lambda v: v["j"])
        vertices = tuple(HasseVertex(v["s"], v["t"]) for v in row)
        weights = tuple(Weight(k, tuple(v["image"]["weight2"])) for v in row)
        modules = tuple(descriptor_from_record(m) for m in stored)
        if modules != tuple(descriptor_from_weight(w) for w in weights):
            raise ValueError(f"stored descriptors at position {pos} do not match the image weights")
        terms.append(ComplexTerm(pos, vertices, weights, modules))
    return ComplexDescriptor(k, tuple(terms), tuple(cx["orders"]))


def parse(text: str) -> dict:
    return json.loads(text)
