"""Text formats for groups (``.grp``), 2-categories (``.2cat``) and actions (``.act``).

Every file is YAML with a ``kind`` field; several documents may share a file
when separated by ``---``. Cells are referenced by name and resolved before
any validation runs. Example group file::

    kind: group
    name: C2
    elements: [e, s]
    unit: e
    table:
      - [e, s]
      - [s, e]

A 2-category lists its cells and composition tables as name triples::

    kind: 2category
    name: sigma_c2
    cells0: ["*"]
    cells1: [[e, "*", "*"], [s, "*", "*"]]
    cells2: [[id_e, e, e], [id_s, s, s]]
    units: {"*": e}
    identities: {e: id_e, s: id_s}
    vcomp: [[id_e, id_e, id_e], [id_s, id_s, id_s]]    # b after a -> result
    hcomp1: [[e, e, e], [e, s, s], [s, e, s], [s, s, e]]
    hcomp2: [[id_e, id_e, id_e], ...]

An action names its group and base and lists the functors ``F_g``, the
pseudonats ``χ_{g,h}`` and the modifications ``ω_{g,h,f}``. Omitted
functors act as the identity, omitted compositor and unit entries are
identities, and omitted ``chi``/``omega`` entries default to identity
components; the validator decides whether the result is an action.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from pathlib import Path

import jsonschema
import yaml

from .core2 import Fin2Cat, FinGroup, ValidationReport, make_fin_group, validate_2category
from .errors import GroupAxiomError, TwoCatError
from .gaction import GroupAction2, omega_source, omega_target, validate_action
from .pseudo import (
    Modification,
    PseudoFunctor,
    PseudoNat,
    compose_pseudofunctors,
    identity_pseudofunctor,
)

EXTENSIONS = {"group": ".grp", "2category": ".2cat", "action": ".act"}
NON_UNITAL_KEYS = ("iota", "kappa", "zeta")


class ParseError(TwoCatError):
    def __init__(self, message, line=None, column=None, path=None):
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{path or '<text>'}{where}: {message}")
        self.line, self.column, self.path = line, column, path


class SchemaError(TwoCatError):
    def __init__(self, message, field_path=(), witness=()):
        where = ".".join(str(p) for p in field_path) or "<document>"
        extra = f" {tuple(witness)!r}" if witness else ""
        super().__init__(f"{where}: {message}{extra}")
        self.field_path = tuple(field_path)
        self.witness = tuple(witness)


class ValidationError(TwoCatError):
    def __init__(self, name, report: ValidationReport):
        first = report.violations[0]
        super().__init__(f"{name} fails {first.axiom} at {first.cells!r}"
                         f" ({len(report.violations)} violation(s))")
        self.report = report
        self.axiom = first.axiom
        self.witness = first.cells


# --------------------------------------------------------------------------
# structural schemas

_NAME = {"type": ["string", "integer"]}
_TRIPLE = {"type": "array", "items": _NAME, "minItems": 3, "maxItems": 3}
_MAP = {"type": "object", "additionalProperties": _NAME}

SCHEMAS = {
    "group": {
        "type": "object",
        "required": ["kind", "name", "elements", "table"],
        "properties": {
            "kind": {"const": "group"},
            "name": {"type": "string"},
            "elements": {"type": "array", "items": _NAME, "minItems": 1},
            "unit": _NAME,
            "table": {"type": "array", "items": {"type": "array", "items": _NAME}},
        },
        "additionalProperties": False,
    },
    "2category": {
        "type": "object",
        "required": ["kind", "name", "cells0", "cells1", "cells2", "units", "identities",
                     "vcomp", "hcomp1", "hcomp2"],
        "properties": {
            "kind": {"const": "2category"},
            "name": {"type": "string"},
            "cells0": {"type": "array", "items": _NAME},
            "cells1": {"type": "array", "items": _TRIPLE},
            "cells2": {"type": "array", "items": _TRIPLE},
            "units": _MAP,
            "identities": _MAP,
            "vcomp": {"type": "array", "items": _TRIPLE},
            "hcomp1": {"type": "array", "items": _TRIPLE},
            "hcomp2": {"type": "array", "items": _TRIPLE},
        },
        "additionalProperties": False,
    },
    "action": {
        "type": "object",
        "required": ["kind", "name", "group", "base"],
        "properties": {
            "kind": {"const": "action"},
            "name": {"type": "string"},
            "group": {"type": "string"},
            "base": {"type": "string"},
            "functors": {
                "type": "object",
                "additionalProperties": {
                    "type": "object",
                    "required": ["obj", "map1", "map2"],
                    "properties": {
                        "obj": _MAP, "map1": _MAP, "map2": _MAP,
                        "comp": {"type": "array", "items": _TRIPLE},
                        "unit": _MAP,
                    },
                    "additionalProperties": False,
                },
            },
            "chi": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["g", "h"],
                    "properties": {"g": _NAME, "h": _NAME, "comp0": _MAP, "comp2": _MAP},
                    "additionalProperties": False,
                },
            },
            "omega": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["g", "h", "f", "comp"],
                    "properties": {"g": _NAME, "h": _NAME, "f": _NAME, "comp": _MAP},
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
}


# --------------------------------------------------------------------------
# workspace


@dataclass
class Entry:
    name: str
    kind: str
    value: object
    path: str | None = None
    sha256: str | None = None


@dataclass
class Workspace:
    """Named groups, 2-categories and actions with where they came from."""

    entries: dict = field(default_factory=dict)
    search_paths: list = field(default_factory=list)
    validate: bool = True

    def add(self, entry: Entry):
        if entry.name in self.entries:
            old = self.entries[entry.name]
            raise SchemaError(f"name already registered as a {old.kind}", ("name",), (entry.name,))
        self.entries[entry.name] = entry

    def __contains__(self, name):
        return name in self.entries

    def get(self, name: str, kind: str | None = None):
        if name not in self.entries:
            self._load_by_name(name)
        entry = self.entries[name]
        if kind is not None and entry.kind != kind:
            raise SchemaError(f"expected a {kind}, found a {entry.kind}", ("name",), (name,))
        return entry.value

    def entry(self, name: str) -> Entry:
        self.get(name)
        return self.entries[name]

    def _load_by_name(self, name: str):
        for directory in self.search_paths:
            for ext in EXTENSIONS.values():
                candidate = Path(directory) / f"{name}{ext}"
                if candidate.is_file():
                    load_file(candidate, self, validate=self.validate)
                    if name in self.entries:
                        return
        raise SchemaError("unknown name; not found in the workspace or search paths", ("name",), (name,))

    def load(self, path) -> list[str]:
        return load_file(Path(path), self, validate=self.validate)


def load_file(path: Path, workspace: Workspace, validate: bool | None = None) -> list[str]:
    text = path.read_text(encoding="utf-8")
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    if path.parent not in [Path(p) for p in workspace.search_paths]:
        workspace.search_paths.insert(0, str(path.parent))
    return parse_document(text, workspace, validate=validate, path=str(path), sha256=digest)


def parse_document(text: str, workspace: Workspace | None = None, validate: bool | None = None,
                   path: str | None = None, sha256: str | None = None) -> list[str]:
    """Parse every YAML document in ``text`` into ``workspace``; return the new names.

    With ``validate`` set (the workspace's setting by default), each
    2-category and action must pass its validator and a failure raises
    ``ValidationError``.
    """
    workspace = workspace if workspace is not None else Workspace()
    validate = workspace.validate if validate is None else validate
    try:
        docs = [d for d in yaml.safe_load_all(text) if d is not None]
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line, col = (mark.line + 1, mark.column + 1) if mark else (None, None)
        raise ParseError(exc.problem or str(exc), line, col, path) from None
    except yaml.YAMLError as exc:
        raise ParseError(str(exc), path=path) from None
    names = []
    for doc in docs:
        if not isinstance(doc, dict):
            raise SchemaError("a document must be a mapping", ())
        kind = doc.get("kind")
        if kind == "action":
            for key in NON_UNITAL_KEYS:
                if key in doc:
                    raise SchemaError(
                        "non-unital action data is not accepted; every action is equivalent to a "
                        "unital one, so supply unital data (F_1 = Id, identity χ and ω at the unit)",
                        (key,))
        if kind not in SCHEMAS:
            raise SchemaError(f"unknown kind {kind!r}; expected one of {sorted(SCHEMAS)}", ("kind",))
        _check_schema(doc, SCHEMAS[kind])
        if kind == "group":
            value = _build_group(doc)
        elif kind == "2category":
            value = _build_2cat(doc)
            if validate:
                report = validate_2category(value)
                if not report.ok:
                    raise ValidationError(doc["name"], report)
        else:
            value = _build_action(doc, workspace)
            if validate:
                report = validate_action(value)
                if not report.ok:
                    raise ValidationError(doc["name"], report)
        workspace.add(Entry(doc["name"], kind, value, path, sha256))
        names.append(doc["name"])
    return names


def _check_schema(doc, schema):
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise SchemaError(err.message, tuple(err.absolute_path))


def _resolver(names, what, path):
    index = {}
    for i, n in enumerate(names):
        n = str(n)
        if n in index:
            raise SchemaError(f"duplicate {what} name", path, (n,))
        index[n] = i

    def resolve(value, *where):
        try:
            return index[str(value)]
        except KeyError:
            raise SchemaError(f"unknown {what}", where, (value,)) from None
    return resolve


def _build_group(doc) -> FinGroup:
    elements = [str(e) for e in doc["elements"]]
    resolve = _resolver(elements, "element", ("elements",))
    n = len(elements)
    rows = doc["table"]
    if len(rows) != n:
        raise SchemaError(f"table needs {n} rows", ("table",))
    table = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise SchemaError(f"row needs {n} entries", ("table", i))
        table.append([resolve(v, "table", i, j) for j, v in enumerate(row)])
    unit = resolve(doc.get("unit", elements[0]), "unit")
    try:
        return make_fin_group(elements, table, unit, doc["name"])
    except GroupAxiomError as exc:
        raise SchemaError(str(exc).split(":")[0], ("table",), exc.witness) from None


def _build_2cat(doc) -> Fin2Cat:
    cells0 = [str(c) for c in doc["cells0"]]
    r0 = _resolver(cells0, "0-cell", ("cells0",))
    r1 = _resolver([c[0] for c in doc["cells1"]], "1-cell", ("cells1",))
    r2 = _resolver([c[0] for c in doc["cells2"]], "2-cell", ("cells2",))
    cells1 = [(str(c[0]), r0(c[1], "cells1", k, 1), r0(c[2], "cells1", k, 2)) for k, c in enumerate(doc["cells1"])]
    cells2 = [(str(c[0]), r1(c[1], "cells2", k, 1), r1(c[2], "cells2", k, 2)) for k, c in enumerate(doc["cells2"])]

    def total(mapping, resolve_key, resolve_val, size, what):
        out = [None] * size
        for key, val in mapping.items():
            out[resolve_key(key, what, key)] = resolve_val(val, what, key)
        missing = [i for i, v in enumerate(out) if v is None]
        if missing:
            raise SchemaError("missing entry", (what,), (missing[0],))
        return out

    unit1 = total(doc["units"], r0, r1, len(cells0), "units")
    id2 = total(doc["identities"], r1, r2, len(cells1), "identities")

    def table(what, ra, rb, rc):
        out = {}
        for k, (a, b, c) in enumerate(doc[what]):
            key = (ra(a, what, k, 0), rb(b, what, k, 1))
            if key in out:
                raise SchemaError("duplicate composite", (what, k), (a, b))
            out[key] = rc(c, what, k, 2)
        return out

    return Fin2Cat(cells0, cells1, cells2, unit1, id2, table("vcomp", r2, r2, r2),
                   table("hcomp1", r1, r1, r1), table("hcomp2", r2, r2, r2), doc["name"])


def _build_action(doc, workspace: Workspace) -> GroupAction2:
    G = workspace.get(doc["group"], "group")
    B = workspace.get(doc["base"], "2category")
    rg = _resolver(G.elements, "group element", ("group",))
    r0 = _resolver(B.cells0, "0-cell", ("base",))
    r1 = _resolver(B.names1, "1-cell", ("base",))
    r2 = _resolver(B.names2, "2-cell", ("base",))
    ident = identity_pseudofunctor(B)

    functors = [ident] * G.order
    for gname, spec in doc.get("functors", {}).items():
        g = rg(gname, "functors", gname)
        where = ("functors", gname)

        def total(what, rk, rv, size):
            out = [None] * size
            for k, v in spec[what].items():
                out[rk(k, *where, what, k)] = rv(v, *where, what, k)
            missing = [i for i, v in enumerate(out) if v is None]
            if missing:
                raise SchemaError("missing entry", where + (what,), (missing[0],))
            return tuple(out)

        obj, map1, map2 = total("obj", r0, r0, B.n0), total("map1", r1, r1, B.n1), total("map2", r2, r2, B.n2)
        comp = {}
        for (x, y), z in B.hc1.items():
            comp[x, y] = B.id2[map1[z]]
        for k, (x, y, a) in enumerate(spec.get("comp", [])):
            comp[r1(x, *where, "comp", k, 0), r1(y, *where, "comp", k, 1)] = r2(a, *where, "comp", k, 2)
        unit = [B.id2[B.unit1[obj[A]]] for A in range(B.n0)]
        for k, v in spec.get("unit", {}).items():
            unit[r0(k, *where, "unit", k)] = r2(v, *where, "unit", k)
        functors[g] = PseudoFunctor(B, B, obj, map1, map2, comp, tuple(unit), f"F_{gname}")
    functors = tuple(functors)

    chi = {}
    for g, h in itertools.product(G, repeat=2):
        target = functors[G.m(g, h)]
        comp0 = [B.unit1[target.obj[A]] for A in range(B.n0)]
        comp2 = [B.id2[target.map1[x]] for x in range(B.n1)]
        chi[g, h] = (comp0, comp2)
    for k, spec in enumerate(doc.get("chi", [])):
        g, h = rg(spec["g"], "chi", k, "g"), rg(spec["h"], "chi", k, "h")
        comp0, comp2 = chi[g, h]
        for A, x in spec.get("comp0", {}).items():
            comp0[r0(A, "chi", k, "comp0", A)] = r1(x, "chi", k, "comp0", A)
        for x, a in spec.get("comp2", {}).items():
            comp2[r1(x, "chi", k, "comp2", x)] = r2(a, "chi", k, "comp2", x)
    chi = {key: PseudoNat(compose_pseudofunctors(functors[key[0]], functors[key[1]]),
                          functors[G.m(*key)], tuple(c0), tuple(c2))
           for key, (c0, c2) in chi.items()}
    action = GroupAction2(G, B, functors, chi, {}, doc["name"])

    given = {}
    for k, spec in enumerate(doc.get("omega", [])):
        key = tuple(rg(spec[v], "omega", k, v) for v in ("g", "h", "f"))
        given[key] = {r0(A, "omega", k, "comp", A): r2(a, "omega", k, "comp", A)
                      for A, a in spec["comp"].items()}
    for key in itertools.product(G, repeat=3):
        try:
            src, tgt = omega_source(action, *key), omega_target(action, *key)
        except TwoCatError:
            src = tgt = None
        comps = given.get(key, {})
        if src is None:
            if comps:
                raise SchemaError("omega entry for ill-typed χ data", ("omega",),
                                  tuple(G.elements[i] for i in key))
            continue
        comp = tuple(comps.get(A, B.id2[src.comp0[A]]) for A in range(B.n0))
        action.omega[key] = Modification(src, tgt, comp)
    return action


# --------------------------------------------------------------------------
# serialization


def _dump(doc) -> str:
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None, allow_unicode=True, width=100)


def group_document(G: FinGroup) -> dict:
    e = G.elements
    return {"kind": "group", "name": G.name, "elements": list(e), "unit": e[G.unit],
            "table": [[e[v] for v in row] for row in G.mult]}


def two_category_document(B: Fin2Cat, name: str | None = None) -> dict:
    c0, n1, n2 = B.cells0, B.names1, B.names2
    return {
        "kind": "2category",
        "name": name or B.name,
        "cells0": list(c0),
        "cells1": [[n1[x], c0[B.src1[x]], c0[B.tgt1[x]]] for x in range(B.n1)],
        "cells2": [[n2[a], n1[B.src2[a]], n1[B.tgt2[a]]] for a in range(B.n2)],
        "units": {c0[A]: n1[u] for A, u in enumerate(B.unit1)},
        "identities": {n1[x]: n2[a] for x, a in enumerate(B.id2)},
        "vcomp": [[n2[b], n2[a], n2[c]] for (b, a), c in sorted(B.vc.items())],
        "hcomp1": [[n1[x], n1[y], n1[z]] for (x, y), z in sorted(B.hc1.items())],
        "hcomp2": [[n2[a], n2[b], n2[c]] for (a, b), c in sorted(B.hc2.items())],
    }


def action_document(action: GroupAction2, group_name: str | None = None, base_name: str | None = None) -> dict:
    G, B = action.group, action.base
    c0, n1, n2, e = B.cells0, B.names1, B.names2, G.elements
    ident = identity_pseudofunctor(B)
    functors = {}
    for g in G:
        F = action.F[g]
        if F.same_as(ident):
            continue
        spec = {
            "obj": {c0[A]: c0[F.obj[A]] for A in range(B.n0)},
            "map1": {n1[x]: n1[F.map1[x]] for x in range(B.n1)},
            "map2": {n2[a]: n2[F.map2[a]] for a in range(B.n2)},
        }
        comp = [[n1[x], n1[y], n2[a]] for (x, y), a in sorted(F.comp.items()) if a != B.id2[F.map1[B.hc1[x, y]]]]
        if comp:
            spec["comp"] = comp
        unit = {c0[A]: n2[a] for A, a in enumerate(F.unit) if a != B.id2[B.unit1[F.obj[A]]]}
        if unit:
            spec["unit"] = unit
        functors[e[g]] = spec
    chi = []
    for (g, h), nat in sorted(action.chi.items()):
        target = action.F[G.m(g, h)]
        comp0 = {c0[A]: n1[x] for A, x in enumerate(nat.comp0) if x != B.unit1[target.obj[A]]}
        comp2 = {n1[x]: n2[a] for x, a in enumerate(nat.comp2) if a != B.id2[target.map1[x]]}
        if comp0 or comp2:
            entry = {"g": e[g], "h": e[h]}
            if comp0:
                entry["comp0"] = comp0
            if comp2:
                entry["comp2"] = comp2
            chi.append(entry)
    omega = []
    for (g, h, f), mod in sorted(action.omega.items()):
        comp = {c0[A]: n2[a] for A, a in enumerate(mod.comp) if a != B.id2[mod.source.comp0[A]]}
        if comp:
            omega.append({"g": e[g], "h": e[h], "f": e[f], "comp": comp})
    doc = {"kind": "action", "name": action.name, "group": group_name or G.name,
           "base": base_name or B.name, "functors": functors}
    if chi:
        doc["chi"] = chi
    if omega:
        doc["omega"] = omega
    return doc


def serialize(obj, name: str | None = None, **names) -> str:
    """Text for a group, 2-category or action (``group_name``/``base_name`` for actions)."""
    if isinstance(obj, FinGroup):
        doc = group_document(obj)
        if name:
            doc["name"] = name
    elif isinstance(obj, Fin2Cat):
        doc = two_category_document(obj, name)
    elif isinstance(obj, GroupAction2):
        doc = action_document(obj, **names)
        if name:
            doc["name"] = name
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return _dump(doc)


__all__ = [
    "Entry", "ParseError", "SchemaError", "ValidationError", "Workspace", "action_document",
    "group_document", "load_file", "parse_document", "serialize", "two_category_document",
]
