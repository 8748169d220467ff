"""JSON interchange format for algebras, operators, bimodules and twistors.

All scalars travel as literal strings in the exact grammar (integers,
fractions, parameter names, + - * / and parentheses); floats are rejected.
parse_spec(serialize(x)) reproduces x exactly.
"""

from __future__ import annotations

import json

from .bimodules import BiHomBimodule, GRBOperator
from .errors import SpecFileError
from .linalg import LinearMap, StructureTable
from .pseudotwistors import WeakPseudotwistor
from .rota_baxter import OneSidedBaxter, RBOperator
from .scalars import FieldSpec, Scalar, scalar_to_str
from .structures import (BiHomAssociativeAlgebra, BiHomDendriform,
                         BiHomQuadri, BiHomTridendriform)

KIND_TABLES = {
    "assoc": ("mu",),
    "dend": ("prec", "succ"),
    "tridend": ("prec", "succ", "dot"),
    "quadri": ("nw", "sw", "ne", "se"),
}
KIND_CLASSES = {
    "assoc": BiHomAssociativeAlgebra,
    "dend": BiHomDendriform,
    "tridend": BiHomTridendriform,
    "quadri": BiHomQuadri,
}


def _fail(path: str, msg: str):
    raise SpecFileError(f"{path}: {msg}")


def _scalar(field: FieldSpec, value, path: str) -> Scalar:
    if not isinstance(value, str):
        _fail(path, f"scalars must be literal strings, got {type(value).__name__}")
    try:
        return field.parse(value)
    except (ValueError, ZeroDivisionError) as exc:
        _fail(path, f"bad scalar literal {value!r}: {exc}")


def _matrix(field: FieldSpec, value, rows: int, cols: int, path: str) -> LinearMap:
    if not isinstance(value, list) or len(value) != rows:
        _fail(path, f"expected a matrix with {rows} rows")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != cols:
            _fail(f"{path}[{i}]", f"expected {cols} entries")
        out.append(tuple(_scalar(field, x, f"{path}[{i}][{j}]")
                         for j, x in enumerate(row)))
    return LinearMap(field, tuple(out))


def _table(field: FieldSpec, value, dl: int, dr: int, do: int,
           path: str) -> StructureTable:
    if not isinstance(value, list) or len(value) != dl:
        _fail(path, f"expected {dl} rows of structure constants")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != dr:
            _fail(f"{path}[{i}]", f"expected {dr} columns")
        cols = []
        for j, col in enumerate(row):
            if not isinstance(col, list) or len(col) != do:
                _fail(f"{path}[{i}][{j}]", f"expected {do} coefficients")
            cols.append(tuple(_scalar(field, x, f"{path}[{i}][{j}][{k}]")
                              for k, x in enumerate(col)))
        out.append(tuple(cols))
    return StructureTable(field, tuple(out))


def _parse_field(value, path: str) -> FieldSpec:
    if not isinstance(value, dict) or "kind" not in value:
        _fail(path, "field block needs a 'kind'")
    kind = value["kind"]
    try:
        if kind == "rational":
            return FieldSpec.rational()
        if kind == "prime":
            return FieldSpec.prime(int(value["p"]))
        if kind == "rational_function":
            return FieldSpec.rational_function(*value["params"])
    except (KeyError, TypeError, ValueError) as exc:
        _fail(path, str(exc))
    _fail(path, f"unknown field kind {kind!r}")


def parse_spec(text: str) -> dict:
    """Parse a spec document.  Returns a dict with key "structure" and any of
    the optional keys "rota_baxter", "baxter", "bimodule", "grb", "twistor"."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        _fail("document", "top level must be an object")
    for key in ("field", "dim", "kind", "tables", "alpha", "beta"):
        if key not in doc:
            _fail("document", f"missing required key {key!r}")
    field = _parse_field(doc["field"], "field")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        _fail("dim", "must be a positive integer")
    kind = doc["kind"]
    if kind not in KIND_TABLES:
        _fail("kind", f"must be one of {sorted(KIND_TABLES)}")
    tables = {}
    for name in KIND_TABLES[kind]:
        if name not in doc["tables"]:
            _fail("tables", f"kind {kind!r} needs table {name!r}")
        tables[name] = _table(field, doc["tables"][name], dim, dim, dim,
                              f"tables.{name}")
    alpha = _matrix(field, doc["alpha"], dim, dim, "alpha")
    beta = _matrix(field, doc["beta"], dim, dim, "beta")
    structure = KIND_CLASSES[kind](field, *[tables[n] for n in KIND_TABLES[kind]],
                                   alpha, beta)
    out = {"structure": structure}
    if "rota_baxter" in doc:
        block = doc["rota_baxter"]
        out["rota_baxter"] = RBOperator(
            _matrix(field, block.get("matrix"), dim, dim, "rota_baxter.matrix"),
            _scalar(field, block.get("weight", "0"), "rota_baxter.weight"))
    if "baxter" in doc:
        block = doc["baxter"]
        side = block.get("side")
        if side not in ("left", "right"):
            _fail("baxter.side", "must be 'left' or 'right'")
        out["baxter"] = OneSidedBaxter(
            _matrix(field, block.get("matrix"), dim, dim, "baxter.matrix"), side)
    if "bimodule" in doc:
        if kind != "assoc":
            _fail("bimodule", "bimodules attach to an associative structure")
        block = doc["bimodule"]
        m = block.get("dim")
        if not isinstance(m, int) or m < 1:
            _fail("bimodule.dim", "must be a positive integer")
        out["bimodule"] = BiHomBimodule(
            structure,
            _matrix(field, block.get("alpha_M"), m, m, "bimodule.alpha_M"),
            _matrix(field, block.get("beta_M"), m, m, "bimodule.beta_M"),
            _table(field, block.get("left_action"), dim, m, m,
                   "bimodule.left_action"),
            _table(field, block.get("right_action"), m, dim, m,
                   "bimodule.right_action"))
        if "grb" in block:
            out["grb"] = GRBOperator(
                _matrix(field, block["grb"], dim, m, "bimodule.grb"))
    if "twistor" in doc:
        block = doc["twistor"]
        n2, n3 = dim * dim, dim ** 3
        out["twistor"] = WeakPseudotwistor(
            _matrix(field, block.get("T"), n2, n2, "twistor.T"),
            _matrix(field, block.get("companion"), n3, n3, "twistor.companion"),
            _matrix(field, block.get("atilde"), dim, dim, "twistor.atilde"),
            _matrix(field, block.get("btilde"), dim, dim, "twistor.btilde"))
    return out


def _field_block(field: FieldSpec):
    if field.kind == "rational":
        return {"kind": "rational"}
    if field.kind == "prime":
        return {"kind": "prime", "p": field.p}
    return {"kind": "rational_function", "params": list(field.params)}


def _matrix_block(m: LinearMap):
    return [[scalar_to_str(x) for x in row] for row in m.entries]


def _table_block(t: StructureTable):
    return [[[scalar_to_str(x) for x in col] for col in row]
            for row in t.constants]


def _structure_kind(structure) -> str:
    for kind, cls in KIND_CLASSES.items():
        if type(structure) is cls:
            return kind
    raise SpecFileError(f"cannot serialize {type(structure).__name__}")


def serialize(parts: dict) -> str:
    """Inverse of parse_spec; accepts the same dict shape it returns."""
    structure = parts["structure"]
    kind = _structure_kind(structure)
    doc = {
        "field": _field_block(structure.field),
        "dim": structure.dim,
        "kind": kind,
        "tables": {name: _table_block(getattr(structure, name))
                   for name in KIND_TABLES[kind]},
        "alpha": _matrix_block(structure.alpha),
        "beta": _matrix_block(structure.beta),
    }
    if "rota_baxter" in parts:
        R = parts["rota_baxter"]
        doc["rota_baxter"] = {"matrix": _matrix_block(R.map),
                              "weight": scalar_to_str(R.weight)}
    if "baxter" in parts:
        B = parts["baxter"]
        doc["baxter"] = {"matrix": _matrix_block(B.map), "side": B.side}
    if "bimodule" in parts:
        M = parts["bimodule"]
        block = {"dim": M.dim,
                 "alpha_M": _matrix_block(M.alpha_M),
                 "beta_M": _matrix_block(M.beta_M),
                 "left_action": _table_block(M.left_action),
                 "right_action": _table_block(M.right_action)}
        if "grb" in parts:
            block["grb"] = _matrix_block(parts["grb"].map)
        doc["bimodule"] = block
    if "twistor" in parts:
        W = parts["twistor"]
        doc["twistor"] = {"T": _matrix_block(W.T),
                          "companion": _matrix_block(W.companion),
                          "atilde": _matrix_block(W.atilde),
                          "btilde": _matrix_block(W.btilde)}
    return json.dumps(doc, indent=2)
