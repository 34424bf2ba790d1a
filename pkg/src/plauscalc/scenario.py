"""Scenario files: a JSON schema binding frames, bodies of evidence and
credal sets to names, plus a list of queries to run against them.

All numbers are eps-expression strings (see :mod:`plauscalc.parser`); binary
floating point never enters the I/O path.  Schema::

    {
      "frame": ["BC", "BnC", "nBC", "nBnC"],
      "bodies": [
        {"name": "m2", "masses": [{"set": ["BC", "nBC"], "mass": "1/2"},
                                   {"set": ["BnC", "nBnC"], "mass": "1/2"}]}
      ],
      "credals": [
        {"name": "c1", "dists": [{"BC": "1/2", "nBC": "1/2", ...}]}
      ],
      "queries": [
        {"op": "bel-pl", "body": "m2", "event": ["BC", "nBC"]},
        ...
      ]
    }

Validation failures raise :class:`ScenarioError` carrying a path into the
document; semantic failures while executing queries raise the operation's
own exception.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from .credal import (
    CredalSet,
    ExtDist,
    combine_laplace,
    condition,
    decompose,
    envelopes,
    event_plausibility,
    more_plausible,
)
from .evidence import Frame, MassFunction, bel_pl, dempster_combine, mass_to_credal
from .parser import EpsSyntaxError, parse_eps_expr

__all__ = ["ScenarioError", "Query", "Scenario", "load_scenario", "run_queries"]


class ScenarioError(ValueError):
    """Malformed scenario document; the message pinpoints the location."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class Query:
    op: str
    args: dict[str, Any]


@dataclass(frozen=True)
class Scenario:
    frame: Frame
    bodies: dict[str, MassFunction] = field(default_factory=dict)
    credals: dict[str, CredalSet] = field(default_factory=dict)
    queries: tuple[Query, ...] = ()

    def body(self, name: str) -> MassFunction:
        try:
            return self.bodies[name]
        except KeyError:
            raise KeyError(f"unknown body of evidence {name!r}") from None

    def credal(self, name: str) -> CredalSet:
        try:
            return self.credals[name]
        except KeyError:
            raise KeyError(f"unknown credal set {name!r}") from None


def _number(text: Any, path: str):
    if not isinstance(text, str):
        raise ScenarioError(path, f"numbers must be eps-expression strings, got {text!r}")
    try:
        return parse_eps_expr(text)
    except (EpsSyntaxError, ZeroDivisionError) as exc:
        raise ScenarioError(path, f"bad number {text!r}: {exc}") from exc


def _string_list(value: Any, path: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ScenarioError(path, "expected a list of strings")
    return value


def load_scenario(path: str) -> Scenario:
    """Load and fully validate a scenario file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScenarioError(path, f"invalid JSON: {exc}") from exc
    return parse_scenario(doc)


def parse_scenario(doc: Any) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError("$", "document must be a JSON object")
    if "frame" not in doc:
        raise ScenarioError("$", "missing 'frame'")
    try:
        frame = Frame(_string_list(doc["frame"], "frame"))
    except ValueError as exc:
        raise ScenarioError("frame", str(exc)) from exc

    bodies: dict[str, MassFunction] = {}
    for i, item in enumerate(doc.get("bodies", [])):
        where = f"bodies[{i}]"
        name = item.get("name") if isinstance(item, dict) else None
        if not isinstance(name, str):
            raise ScenarioError(where, "body needs a string 'name'")
        if name in bodies:
            raise ScenarioError(where, f"duplicate body name {name!r}")
        raw = item.get("masses")
        if not isinstance(raw, list) or not raw:
            raise ScenarioError(f"{where}.masses", "expected a nonempty list")
        masses = {}
        for j, entry in enumerate(raw):
            epath = f"{where}.masses[{j}]"
            if not isinstance(entry, dict) or "set" not in entry or "mass" not in entry:
                raise ScenarioError(epath, "expected {'set': [...], 'mass': '...'}")
            atoms = tuple(_string_list(entry["set"], f"{epath}.set"))
            try:
                mask = frame.mask_of(atoms)
            except KeyError as exc:
                raise ScenarioError(f"{epath}.set", str(exc.args[0])) from exc
            value = _number(entry["mass"], f"{epath}.mass")
            masses[mask] = masses.get(mask, 0) + value
        try:
            bodies[name] = MassFunction(frame, masses)
        except ValueError as exc:
            raise ScenarioError(f"{where}.masses", str(exc)) from exc

    credals: dict[str, CredalSet] = {}
    space = frame.outcome_space()
    for i, item in enumerate(doc.get("credals", [])):
        where = f"credals[{i}]"
        name = item.get("name") if isinstance(item, dict) else None
        if not isinstance(name, str):
            raise ScenarioError(where, "credal set needs a string 'name'")
        if name in credals:
            raise ScenarioError(where, f"duplicate credal name {name!r}")
        raw = item.get("dists")
        if not isinstance(raw, list) or not raw:
            raise ScenarioError(f"{where}.dists", "expected a nonempty list")
        dists = []
        for j, entry in enumerate(raw):
            epath = f"{where}.dists[{j}]"
            if not isinstance(entry, dict):
                raise ScenarioError(epath, "expected an atom -> number object")
            probs = {}
            for atom, num in entry.items():
                if atom not in frame.atoms:
                    raise ScenarioError(epath, f"unknown atom {atom!r}")
                probs[atom] = _number(num, f"{epath}.{atom}")
            for atom in frame.atoms:
                probs.setdefault(atom, 0)
            try:
                dists.append(ExtDist(space, probs))
            except ValueError as exc:
                raise ScenarioError(epath, str(exc)) from exc
        credals[name] = CredalSet(space, dists)

    queries = []
    for i, item in enumerate(doc.get("queries", [])):
        where = f"queries[{i}]"
        if not isinstance(item, dict) or not isinstance(item.get("op"), str):
            raise ScenarioError(where, "query needs a string 'op'")
        args = {k: v for k, v in item.items() if k != "op"}
        queries.append(Query(item["op"], args))

    scenario = Scenario(frame=frame, bodies=bodies, credals=credals, queries=tuple(queries))
    _check_query_names(scenario)
    return scenario


def _check_query_names(s: Scenario) -> None:
    for i, q in enumerate(s.queries):
        where = f"queries[{i}]"
        for key in ("body",):
            if key in q.args and q.args[key] not in s.bodies:
                raise ScenarioError(where, f"unknown body {q.args[key]!r}")
        for key in ("credal",):
            if key in q.args and q.args[key] not in s.credals:
                raise ScenarioError(where, f"unknown credal set {q.args[key]!r}")
        if "bodies" in q.args:
            for name in q.args["bodies"]:
                if name not in s.bodies:
                    raise ScenarioError(where, f"unknown body {name!r}")
        for key in ("event", "a", "b"):
            if key in q.args:
                for atom in q.args[key]:
                    if atom not in s.frame.atoms:
                        raise ScenarioError(where, f"unknown atom {atom!r}")


def _fmt_event(atoms: Iterable[str]) -> str:
    return "{" + ",".join(atoms) + "}"


def _combine_bodies_dempster(s: Scenario, names: list[str]) -> MassFunction:
    acc = s.body(names[0])
    for name in names[1:]:
        acc = dempster_combine(acc, s.body(name))
    return acc


def _combine_bodies_robust(s: Scenario, names: list[str]) -> CredalSet:
    acc = mass_to_credal(s.body(names[0]))
    for name in names[1:]:
        acc = combine_laplace(acc, mass_to_credal(s.body(name)))
    return acc


def run_queries(s: Scenario) -> list[str]:
    """Execute each query; returns stable line-oriented output."""
    lines: list[str] = []
    for q in s.queries:
        lines.extend(run_query(s, q))
    return lines


def run_query(s: Scenario, q: Query) -> list[str]:
    op, a = q.op, q.args
    if op == "order":
        left = parse_eps_expr(a["left"]) if isinstance(a["left"], str) else a["left"]
        right = parse_eps_expr(a["right"]) if isinstance(a["right"], str) else a["right"]
        verdict = {-1: "LT", 0: "EQ", 1: "GT"}[left.compare(right)]
        return [f"order {a['left']} vs {a['right']}: {verdict}"]
    if op == "bel-pl":
        bel, pl = bel_pl(s.body(a["body"]), tuple(a["event"]))
        return [f"bel-pl {a['body']} {_fmt_event(a['event'])}: bel={bel} pl={pl}"]
    if op == "dempster":
        m = _combine_bodies_dempster(s, list(a["bodies"]))
        return [f"dempster {' (x) '.join(a['bodies'])} = {m}"]
    if op == "robust-combine":
        c = _combine_bodies_robust(s, list(a["bodies"]))
        out = [f"robust-combine {' (x) '.join(a['bodies'])}: {len(c)} members"]
        out.extend(f"  member {d}" for d in c.dists)
        return out
    if op == "mass-to-credal":
        c = mass_to_credal(s.body(a["body"]))
        out = [f"mass-to-credal {a['body']}: {len(c)} members"]
        out.extend(f"  member {d}" for d in c.dists)
        return out
    if op == "laplace":
        names = list(a["credals"])
        acc = s.credal(names[0])
        for name in names[1:]:
            acc = combine_laplace(acc, s.credal(name))
        out = [f"laplace {' (x) '.join(names)}: {len(acc)} members"]
        out.extend(f"  member {d}" for d in acc.dists)
        return out
    if op == "event-plausibility":
        vec = event_plausibility(s.credal(a["credal"]), tuple(a["event"]))
        return [f"event-plausibility {a['credal']} {_fmt_event(a['event'])}: {vec}"]
    if op == "envelopes":
        lo, hi = envelopes(s.credal(a["credal"]), tuple(a["event"]))
        return [f"envelopes {a['credal']} {_fmt_event(a['event'])}: ({lo}, {hi})"]
    if op == "condition":
        c = condition(s.credal(a["credal"]), tuple(a["event"]))
        out = [f"condition {a['credal']} on {_fmt_event(a['event'])}: {len(c)} members"]
        out.extend(f"  member {d}" for d in c.dists)
        return out
    if op == "decompose":
        vec = event_plausibility(s.credal(a["credal"]), tuple(a["event"]))
        d = decompose(vec)
        profile = "none" if d.profile is None else str(d.profile)
        return [
            f"decompose {a['credal']} {_fmt_event(a['event'])}: p={vec}",
            f"  lower={d.lower} spread={d.spread} profile={profile}",
        ]
    if op == "more-plausible":
        r = more_plausible(s.credal(a["credal"]), tuple(a["a"]), tuple(a["b"]))
        return [
            f"more-plausible {a['credal']} {_fmt_event(a['a'])} vs {_fmt_event(a['b'])}: {r}"
        ]
    raise ScenarioError(f"query op {op!r}", "unknown operation")
