"""Edge-list / hyperedge-list parsing and report serialization (JSON, CSV, DOT)."""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import numpy as np

from .centrality import CentralityReport
from .errors import ParseError
from .graph import DirectedGraph, Hypergraph

__all__ = [
    "parse_edgelist",
    "parse_hyperedgelist",
    "export_report",
    "report_from_json",
    "export_experiment",
    "format_float",
]

NODE_ID_MODES = ("auto", "index", "label")


def format_float(x) -> str:
    """17 significant digits, enough to round-trip any double."""
    if x is None:
        return ""
    return format(float(x), ".17g")


def _tokens(path):
    """Yield ``(line_no, [(col, token), ...])`` for non-blank, non-comment lines."""
    text = Path(path).read_text()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = []
        col = 0
        for tok in raw.split():
            col = raw.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        yield line_no, toks


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def _resolve_mode(path, node_ids):
    if node_ids not in NODE_ID_MODES:
        raise ValueError(f"node_ids must be one of {NODE_ID_MODES}, got {node_ids!r}")
    if node_ids != "auto":
        return node_ids
    all_int = all(_is_int(tok) for _, toks in _tokens(path) for _, tok in toks)
    return "index" if all_int else "label"


class _Interner:
    def __init__(self, mode, path):
        self.mode = mode
        self.path = path
        self.ids: dict[str, int] = {}
        self.max_index = -1

    def __call__(self, tok, line_no, col):
        if self.mode == "index":
            try:
                i = int(tok)
            except ValueError:
                raise ParseError(f"expected a vertex index, got {tok!r}", self.path, line_no, col) from None
            if i < 0:
                raise ParseError(f"negative vertex index {i}", self.path, line_no, col)
            self.max_index = max(self.max_index, i)
            return i
        if tok not in self.ids:
            self.ids[tok] = len(self.ids)
        return self.ids[tok]

    def finish(self):
        if self.mode == "index":
            return self.max_index + 1, None
        return len(self.ids), tuple(self.ids)


def parse_edgelist(path, node_ids: str = "auto") -> DirectedGraph:
    """Read ``tail head`` pairs, one per line; ``#`` lines are comments.

    ``node_ids="index"`` expects 0-based integers (``n`` is the largest index
    plus one); ``"label"`` interns arbitrary tokens in first-seen order;
    ``"auto"`` picks index mode when every token is an integer.
    """
    mode = _resolve_mode(path, node_ids)
    intern = _Interner(mode, path)
    edges = []
    for line_no, toks in _tokens(path):
        if len(toks) != 2:
            col = toks[2][0] if len(toks) > 2 else 1
            raise ParseError(f"expected 'tail head', got {len(toks)} fields", path, line_no, col)
        (ct, t), (ch, h) = toks
        ti = intern(t, line_no, ct)
        hi = intern(h, line_no, ch)
        if ti == hi:
            raise ParseError(f"self-loop on vertex {t!r}", path, line_no, ct)
        edges.append((ti, hi))
    n, labels = intern.finish()
    return DirectedGraph(n, tuple(edges), labels)


def parse_hyperedgelist(path, node_ids: str = "auto") -> Hypergraph:
    """Read one hyperedge per line as whitespace-separated member ids."""
    mode = _resolve_mode(path, node_ids)
    intern = _Interner(mode, path)
    hyperedges = []
    for line_no, toks in _tokens(path):
        hyperedges.append(frozenset(intern(tok, line_no, col) for col, tok in toks))
    n, labels = intern.finish()
    return Hypergraph(n, tuple(hyperedges), labels)


def _json_float(x):
    x = float(x)
    return None if math.isnan(x) else x


def _json_vec(v):
    return None if v is None else [_json_float(x) for x in v]


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _json_float(obj)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    return obj


def _report_json(r: CentralityReport) -> bytes:
    payload = {
        "kind": r.kind,
        "params": _jsonable(r.params),
        "extra": _jsonable(r.extra),
        "vertices": {
            "label": list(r.vertex_labels),
            "c_v": _json_vec(r.c_v),
            "s_v": _json_vec(r.s_v),
            "s_hub": _json_vec(r.s_hub),
            "s_auth": _json_vec(r.s_auth),
        },
        "edges": {
            "members": [list(e) for e in r.edge_members],
            "c_e": _json_vec(r.c_e),
            "s_e": _json_vec(r.s_e),
        },
    }
    return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode()


def report_from_json(data: bytes | str) -> CentralityReport:
    """Inverse of ``export_report(r, "json")``."""
    obj = json.loads(data)
    v, e = obj["vertices"], obj["edges"]

    def vec(x):
        return None if x is None else np.array([np.nan if y is None else y for y in x], dtype=float)

    return CentralityReport(
        c_v=vec(v["c_v"]),
        c_e=vec(e["c_e"]),
        s_v=vec(v["s_v"]),
        s_e=vec(e["s_e"]),
        s_hub=vec(v["s_hub"]),
        s_auth=vec(v["s_auth"]),
        params=obj["params"],
        vertex_labels=tuple(v["label"]),
        edge_members=tuple(tuple(m) for m in e["members"]),
        kind=obj["kind"],
        extra=obj.get("extra", {}),
    )


def _csv_bytes(header, rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().encode()


def _vertex_csv(r: CentralityReport) -> bytes:
    rows = []
    for i in range(r.n):
        rows.append([
            i,
            r.vertex_labels[i] if r.vertex_labels else str(i),
            format_float(r.c_v[i]),
            format_float(r.s_v[i]),
            format_float(r.s_hub[i]) if r.s_hub is not None else "",
            format_float(r.s_auth[i]) if r.s_auth is not None else "",
        ])
    return _csv_bytes(["id", "label", "c_v", "s_v", "s_hub", "s_auth"], rows)


def _edge_csv(r: CentralityReport) -> bytes:
    if r.kind == "hypergraph":
        rows = [[j, " ".join(str(x) for x in members), format_float(r.c_e[j]), format_float(r.s_e[j])]
                for j, members in enumerate(r.edge_members)]
        return _csv_bytes(["id", "members", "c_e", "s_e"], rows)
    rows = [[j, t, h, format_float(r.c_e[j]), format_float(r.s_e[j])] for j, (t, h) in enumerate(r.edge_members)]
    return _csv_bytes(["id", "tail", "head", "c_e", "s_e"], rows)


def _color(score: float) -> str:
    # white (0) to red (1)
    s = min(max(float(score), 0.0), 1.0)
    other = int(round(255 * (1.0 - s)))
    return f"#ff{other:02x}{other:02x}"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _report_dot(r: CentralityReport) -> bytes:
    lines = ["digraph centrality {" if r.kind == "graph" else "graph centrality {"]
    lines.append("  node [style=filled];")
    for i in range(r.n):
        label = r.vertex_labels[i] if r.vertex_labels else str(i)
        lines.append(
            f'  {i} [label="{_dot_escape(label)}", s_v="{format_float(r.s_v[i])}", fillcolor="{_color(r.s_v[i])}"];'
        )
    if r.kind == "graph":
        for j, (t, h) in enumerate(r.edge_members):
            s = r.s_e[j]
            lines.append(f'  {t} -> {h} [s_e="{format_float(s)}", color="{_color(s)}", penwidth={1 + 3 * s:.3f}];')
    else:
        # hyperedges drawn as box nodes joined to their members
        for j, members in enumerate(r.edge_members):
            s = r.s_e[j]
            lines.append(f'  h{j} [shape=box, label="e{j}", s_e="{format_float(s)}", fillcolor="{_color(s)}"];')
            for v in members:
                lines.append(f"  h{j} -- {v};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def export_report(r: CentralityReport, fmt: str = "json", table: str = "vertices") -> bytes:
    """Serialize a report.

    ``fmt`` is ``"json"``, ``"csv"`` or ``"dot"``. CSV output holds one table,
    chosen by ``table`` (``"vertices"`` or ``"edges"``).
    """
    if fmt == "json":
        return _report_json(r)
    if fmt == "csv":
        if table == "vertices":
            return _vertex_csv(r)
        if table == "edges":
            return _edge_csv(r)
        raise ValueError(f"unknown table {table!r}")
    if fmt == "dot":
        return _report_dot(r)
    raise ValueError(f"unknown export format {fmt!r}")


def export_experiment(result, fmt: str = "json", table: str = "vertices") -> bytes:
    """Serialize an :class:`ExperimentResult` as JSON or one of its tables as CSV."""
    if fmt == "json":
        return (json.dumps(_jsonable(result.as_dict()), indent=2, sort_keys=True) + "\n").encode()
    if fmt == "csv":
        rows = result.tables.get(table, [])
        if not rows:
            return b""
        header = list(rows[0])
        body = [[format_float(row[k]) if isinstance(row[k], float) else row[k] for k in header] for row in rows]
        return _csv_bytes(header, body)
    raise ValueError(f"experiments export as json or csv, not {fmt!r}")
