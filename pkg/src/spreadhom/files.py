"""Declarative poset / module / family files.

Parsing goes through yaml.safe_load; serialization is a small canonical
emitter (stable ordering, labels always double-quoted) so that serializing a
parsed canonical file reproduces it byte for byte.
"""
from __future__ import annotations

import json
import os

import yaml

from .approx import BUILTIN_FAMILIES, Family, builtin_family
from .errors import FileFormatError
from .field import PrimeField
from .modules import PersistenceModule
from .poset import Poset, Spread, spread_from_antichains


def _load_yaml(path: str):
    try:
        with open(path) as fh:
            data = yaml.safe_load(fh)
    except OSError as e:
        raise FileFormatError(f"{path}: {e.strerror or e}") from None
    except yaml.YAMLError as e:
        raise FileFormatError(f"{path}: not valid YAML ({e})") from None
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: expected a mapping at the top level")
    return data


def _as_label(x) -> str:
    return x if isinstance(x, str) else str(x)


def _expect_keys(path: str, data: dict, allowed: set[str], required: set[str]):
    unknown = set(data) - allowed
    if unknown:
        raise FileFormatError(f"{path}: unknown keys {sorted(unknown)}")
    missing = required - set(data)
    if missing:
        raise FileFormatError(f"{path}: missing keys {sorted(missing)}")


def load_poset(path: str) -> Poset:
    data = _load_yaml(path)
    _expect_keys(path, data, {"elements", "covers"}, {"elements", "covers"})
    elements = data["elements"]
    if not isinstance(elements, list):
        raise FileFormatError(f"{path}: 'elements' must be a list of labels")
    names = [_as_label(x) for x in elements]
    index = {lbl: i for i, lbl in enumerate(names)}
    covers = []
    for item in data["covers"] or []:
        if not isinstance(item, list) or len(item) != 2:
            raise FileFormatError(f"{path}: each cover must be a pair, got {item!r}")
        a, b = (_as_label(x) for x in item)
        for lbl in (a, b):
            if lbl not in index:
                raise FileFormatError(f"{path}: unknown element label {lbl!r} in cover")
        covers.append((index[a], index[b]))
    return Poset(len(names), covers, names)


def load_module(path: str, field: PrimeField, poset: Poset | None = None):
    """Parse a module file; returns (module, poset, poset_reference)."""
    data = _load_yaml(path)
    _expect_keys(path, data, {"poset", "dims", "maps"}, {"poset", "dims"})
    ref = _as_label(data["poset"])
    if poset is None:
        poset_path = os.path.join(os.path.dirname(os.path.abspath(path)), ref)
        poset = load_poset(poset_path)
    dims = [0] * poset.n
    raw_dims = data["dims"]
    if not isinstance(raw_dims, dict):
        raise FileFormatError(f"{path}: 'dims' must map labels to counts")
    for lbl, d in raw_dims.items():
        lbl = _as_label(lbl)
        try:
            a = poset.element(lbl)
        except KeyError:
            raise FileFormatError(f"{path}: unknown element label {lbl!r} in dims") from None
        if not isinstance(d, int) or d < 0:
            raise FileFormatError(f"{path}: dims[{lbl!r}] must be a non-negative integer")
        dims[a] = d
    maps = {}
    for key, value in (data.get("maps") or {}).items():
        key = _as_label(key)
        if "->" not in key:
            raise FileFormatError(f"{path}: map key {key!r} is not of the form 'a->b'")
        left, right = (t.strip() for t in key.split("->", 1))
        try:
            a, b = poset.element(left), poset.element(right)
        except KeyError as e:
            raise FileFormatError(f"{path}: map key {key!r}: {e.args[0]}") from None
        if (a, b) not in set(poset.covers):
            raise FileFormatError(f"{path}: map key {key!r} is not a cover of the poset")
        if value == "id":
            if dims[a] != dims[b]:
                raise FileFormatError(
                    f"{path}: map {key!r} says 'id' but dimensions are {dims[a]} and {dims[b]}"
                )
            maps[(a, b)] = field.eye(dims[a])
        else:
            if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
                raise FileFormatError(f"{path}: map {key!r} must be a matrix (list of rows) or 'id'")
            maps[(a, b)] = value
    module = PersistenceModule(poset, field, dims, maps)
    return module, poset, ref


def _parse_spread(path: str, item, poset: Poset) -> Spread:
    if not isinstance(item, dict) or set(item) != {"sources", "targets"}:
        raise FileFormatError(
            f"{path}: each spread needs exactly 'sources' and 'targets', got {item!r}"
        )
    try:
        sources = [poset.element(_as_label(x)) for x in item["sources"]]
        targets = [poset.element(_as_label(x)) for x in item["targets"]]
    except KeyError as e:
        raise FileFormatError(f"{path}: {e.args[0]}") from None
    return spread_from_antichains(poset, sources, targets)


def load_family(spec: str, poset: Poset, cap: int = 100_000) -> Family:
    """A builtin family name, or a path to a family file."""
    if spec in BUILTIN_FAMILIES:
        return builtin_family(poset, spec, cap)
    if not os.path.exists(spec):
        raise FileFormatError(
            f"{spec!r} is neither a builtin family ({', '.join(BUILTIN_FAMILIES)}) nor a file"
        )
    data = _load_yaml(spec)
    if "family" in data:
        _expect_keys(spec, data, {"family"}, {"family"})
        name = _as_label(data["family"])
        if name not in BUILTIN_FAMILIES:
            raise FileFormatError(f"{spec}: unknown builtin family {name!r}")
        return builtin_family(poset, name, cap)
    _expect_keys(spec, data, {"spreads", "quotient_closed"}, {"spreads"})
    if not isinstance(data["spreads"], list):
        raise FileFormatError(f"{spec}: 'spreads' must be a list")
    members = [_parse_spread(spec, item, poset) for item in data["spreads"]]
    closed = bool(data.get("quotient_closed", False))
    return Family(poset, members, quotient_closed=closed)


# -- canonical emission ---------------------------------------------------------


def dump_poset(p: Poset) -> str:
    elements = json.dumps(list(p.names))
    covers = json.dumps([[p.label(a), p.label(b)] for a, b in p.covers])
    return f"elements: {elements}\ncovers: {covers}\n"


def _is_identity(mat, field: PrimeField) -> bool:
    import numpy as np

    return mat.shape[0] == mat.shape[1] and bool(np.array_equal(mat, field.eye(mat.shape[0])))


def dump_module(m: PersistenceModule, poset_ref: str) -> str:
    dims = {m.poset.label(a): int(d) for a, d in enumerate(m.dims) if d}
    lines = [f"poset: {json.dumps(poset_ref)}", f"dims: {json.dumps(dims)}"]
    entries = []
    for a, b in m.poset.covers:
        mat = m.maps[(a, b)]
        if mat.size == 0 or not mat.any():
            continue
        key = json.dumps(f"{m.poset.label(a)}->{m.poset.label(b)}")
        if _is_identity(mat, m.field):
            entries.append(f"  {key}: id")
        else:
            entries.append(f"  {key}: {json.dumps([[int(x) for x in row] for row in mat])}")
    if entries:
        lines.append("maps:")
        lines.extend(entries)
    else:
        lines.append("maps: {}")
    return "\n".join(lines) + "\n"


def dump_family(members, quotient_closed: bool = False) -> str:
    lines = []
    if quotient_closed:
        lines.append("quotient_closed: true")
    lines.append("spreads:")
    for s in members:
        src = json.dumps([s.poset.label(a) for a in s.source_elements()])
        tgt = json.dumps([s.poset.label(b) for b in s.target_elements()])
        lines.append(f"  - {{sources: {src}, targets: {tgt}}}")
    return "\n".join(lines) + "\n"
