"""
Edge-list readers and writers.

Text format: first line `n m`, then m lines `u v` (0-based, whitespace separated,
`#` starts a comment). JSON mirror: {"n": int, "edges": [[u, v], ...]}.
"""
import json
from pathlib import Path
from typing import List

from .graph import Graph, build_graph


def _data_lines(text: str) -> List[List[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def parse_edge_list(text: str) -> Graph:
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a header line `n m`")
    n, m = (int(x) for x in rows[0])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    for row in body:
        if len(row) != 2:
            raise ValueError(f"edge line must hold two vertices, got {' '.join(row)!r}")
    return build_graph(n, [(int(u), int(v)) for u, v in body])


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_from_dict(d: dict) -> Graph:
    return build_graph(int(d["n"]), d["edges"])


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def read_graph(fpath) -> Graph:
    fpath = Path(fpath)
    text = fpath.read_text(encoding="utf-8")
    if fpath.suffix == ".json":
        return graph_from_dict(json.loads(text))
    return parse_edge_list(text)


def write_graph(g: Graph, fpath):
    fpath = Path(fpath)
    if fpath.suffix == ".json":
        fpath.write_text(json.dumps(graph_to_dict(g)), encoding="utf-8")
    else:
        fpath.write_text(format_edge_list(g), encoding="utf-8")
