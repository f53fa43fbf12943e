"""Load and dump the graph-set and verdict JSON formats.

Graph-set shape:

    {"functions": [{"name": "A", "params": ["x", "y"]}],
     "graphs": [{"name": "G01", "source": "A", "target": "A",
                 "arcs": [{"from": "x", "kind": "strict", "to": "x"}]}]}

Schema violations are reported with JSON-pointer paths.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .graphs import (
    Arc,
    ArcKind,
    FunSig,
    GraphSet,
    SizeChangeGraph,
    Verdict,
)
from .interp import SafetyReport
from .oracle import OracleReport


class SchemaError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
        self.message = message


def _need(data, key, kind, pointer):
    if not isinstance(data, dict):
        raise SchemaError(pointer, "expected an object")
    if key not in data:
        raise SchemaError(pointer, f"missing key {key!r}")
    value = data[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{pointer}/{key}", f"expected {kind.__name__}")
    return value


def load_graph_set(data: dict) -> GraphSet:
    functions = _need(data, "functions", list, "")
    graphs_json = _need(data, "graphs", list, "")
    sigs: list[FunSig] = []
    by_name: dict[str, FunSig] = {}
    for i, f in enumerate(functions):
        ptr = f"/functions/{i}"
        name = _need(f, "name", str, ptr)
        params = _need(f, "params", list, ptr)
        if not params or not all(isinstance(p, str) for p in params):
            raise SchemaError(f"{ptr}/params", "expected a nonempty array of strings")
        if len(set(params)) != len(params):
            raise SchemaError(f"{ptr}/params", "parameters must be distinct")
        if name in by_name:
            raise SchemaError(f"{ptr}/name", f"duplicate function {name!r}")
        sig = FunSig(name, tuple(params))
        by_name[name] = sig
        sigs.append(sig)
    graphs: list[SizeChangeGraph] = []
    names: list[str] = []
    for i, g in enumerate(graphs_json):
        ptr = f"/graphs/{i}"
        if not isinstance(g, dict):
            raise SchemaError(ptr, "expected an object")
        name = g.get("name", f"g{i}")
        if not isinstance(name, str):
            raise SchemaError(f"{ptr}/name", "expected str")
        source = _need(g, "source", str, ptr)
        target = _need(g, "target", str, ptr)
        if source not in by_name:
            raise SchemaError(f"{ptr}/source", f"unknown function {source!r}")
        if target not in by_name:
            raise SchemaError(f"{ptr}/target", f"unknown function {target!r}")
        src_sig, tgt_sig = by_name[source], by_name[target]
        arcs = []
        seen: set[tuple[str, str]] = set()
        for j, arc in enumerate(_need(g, "arcs", list, ptr)):
            aptr = f"{ptr}/arcs/{j}"
            frm = _need(arc, "from", str, aptr)
            kind = _need(arc, "kind", str, aptr)
            to = _need(arc, "to", str, aptr)
            if frm not in src_sig.params:
                raise SchemaError(f"{aptr}/from", f"unknown parameter {frm!r} of {source}")
            if to not in tgt_sig.params:
                raise SchemaError(f"{aptr}/to", f"unknown parameter {to!r} of {target}")
            if kind not in ("strict", "nonstrict"):
                raise SchemaError(f"{aptr}/kind", "expected \"strict\" or \"nonstrict\"")
            if (frm, to) in seen:
                raise SchemaError(aptr, f"second arc between {frm!r} and {to!r}")
            seen.add((frm, to))
            arcs.append(Arc(src_sig.index_of(frm), ArcKind(kind), tgt_sig.index_of(to)))
        graphs.append(SizeChangeGraph(src_sig, tgt_sig, tuple(arcs)))
        names.append(name)
    if len(set(names)) != len(names):
        raise SchemaError("/graphs", "graph names must be distinct")
    return GraphSet(tuple(sigs), tuple(graphs), tuple(names))


def load_graph_set_file(path: Union[str, Path]) -> GraphSet:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError("", f"invalid JSON: {exc}") from None
    return load_graph_set(data)


def graph_to_json(g: SizeChangeGraph, name: Optional[str] = None) -> dict:
    out: dict = {}
    if name is not None:
        out["name"] = name
    out["source"] = g.source.name
    out["target"] = g.target.name
    out["arcs"] = [
        {
            "from": g.source.params[a.src],
            "kind": a.kind.value,
            "to": g.target.params[a.tgt],
        }
        for a in g.arcs
    ]
    return out


def graph_set_to_json(gs: GraphSet) -> dict:
    return {
        "functions": [{"name": s.name, "params": list(s.params)} for s in gs.sigs],
        "graphs": [graph_to_json(g, name) for g, name in zip(gs.graphs, gs.names)],
    }


def verdict_to_json(verdict: Verdict, gs: GraphSet) -> dict:
    out: dict = {"sct": verdict.sct}
    if not verdict.sct:
        failing = graph_to_json(verdict.failing_idempotent.graph)
        failing["witness"] = gs.word_names(verdict.failing_idempotent.witness)
        out["failing_idempotent"] = failing
        out["lasso"] = {
            "prefix": gs.word_names(verdict.lasso.prefix),
            "period": gs.word_names(verdict.lasso.period),
        }
    return out


def oracle_report_to_json(report: OracleReport, gs: GraphSet) -> dict:
    out: dict = {
        "max_word_len": report.max_len,
        "words_checked": report.words_checked,
    }
    if report.counterexample is None:
        out["counterexample"] = None
    else:
        out["counterexample"] = {
            "period": gs.word_names(report.counterexample.period),
        }
    return out


def safety_report_to_json(report: SafetyReport) -> dict:
    return {
        "violations": [
            {
                "site": v.site,
                "arc": {
                    "from": v.source.fun.params[v.arc.src],
                    "kind": v.arc.kind.value,
                    "to": v.target.fun.params[v.arc.tgt],
                },
                "source": list(v.source.values),
                "target": list(v.target.values),
            }
            for v in report.violations
        ],
        "converged": report.converged,
        "skipped": report.skipped,
    }


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"
