"""JSON space descriptions and their evaluation to fixed-point models.

Grammar (``Q``, ``S`` integers; characters are lists of elements)::

    {"kind": "point", "q": Q}
    {"kind": "real_flag" | "complex_flag", "q": Q, "S": [[..], ..], "parts": [..]}
    {"kind": "proj", "s": S, "chars": [[..], ..]}
    {"kind": "dold", "proj": <proj>, "base": <conjugation space>}
    {"kind": "product", "factors": [..]}
    {"kind": "disjoint_union", "summands": [..]}

A Dold base must describe a conjugation space: ``point``, ``real_flag`` or
``complex_flag`` (both name the same conjugation space), and products or
unions of those.
"""

from __future__ import annotations

from functools import reduce

from .characters import RankError, check_rank, elements_from_bits
from .spaces import (ConjugationModel, FlagSpec, Model, ModelError, ProjSpec,
                     complex_from_real, disjoint_union, dold_fixed_data, point_space,
                     product_space, proj_space, real_flag_space)

KINDS = ("point", "real_flag", "complex_flag", "proj", "dold", "product", "disjoint_union")


class SpaceSyntaxError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _field(node, key, path):
    if not isinstance(node, dict):
        raise SpaceSyntaxError(path, f"expected an object, got {type(node).__name__}")
    if key not in node:
        raise SpaceSyntaxError(f"{path}.{key}", "missing field")
    return node[key]


def _int(node, key, path):
    value = _field(node, key, path)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpaceSyntaxError(f"{path}.{key}", f"expected an integer, got {value!r}")
    try:
        return check_rank(value)
    except RankError as exc:
        raise SpaceSyntaxError(f"{path}.{key}", str(exc)) from None


def _list(node, key, path):
    value = _field(node, key, path)
    if not isinstance(value, list):
        raise SpaceSyntaxError(f"{path}.{key}", "expected a list")
    return value


def _kind(node, path):
    kind = _field(node, "kind", path)
    if kind not in KINDS:
        raise SpaceSyntaxError(f"{path}.kind", f"unknown kind {kind!r}")
    return kind


def parse_flag_spec(node, path="$") -> FlagSpec:
    q = _int(node, "q", path)
    S = _list(node, "S", path)
    parts = _list(node, "parts", path)
    try:
        return FlagSpec.of(q, S, parts)
    except (ValueError, TypeError) as exc:
        field = "parts" if "parts" in str(exc) else "S"
        raise SpaceSyntaxError(f"{path}.{field}", str(exc)) from None


def parse_proj_spec(node, path="$") -> ProjSpec:
    if isinstance(node, dict) and node.get("kind", "proj") != "proj":
        raise SpaceSyntaxError(f"{path}.kind", "expected kind 'proj'")
    s = _int(node, "s", path)
    chars = _list(node, "chars", path)
    try:
        return ProjSpec.of(s, chars)
    except (ValueError, TypeError) as exc:
        raise SpaceSyntaxError(f"{path}.chars", str(exc)) from None


def _combine(node, key, path, op, child):
    items = _list(node, key, path)
    if not items:
        raise SpaceSyntaxError(f"{path}.{key}", "must be nonempty")
    models = [child(x, f"{path}.{key}[{i}]") for i, x in enumerate(items)]
    try:
        return reduce(op, models)
    except (ModelError, RankError) as exc:
        raise SpaceSyntaxError(f"{path}.{key}", str(exc)) from None


def build_base(node, path="$") -> ConjugationModel:
    """Evaluate a description that must denote a conjugation space."""
    kind = _kind(node, path)
    if kind == "point":
        return point_space(_int(node, "q", path))
    if kind in ("real_flag", "complex_flag"):
        return real_flag_space(parse_flag_spec(node, path))
    if kind == "product":
        return _combine(node, "factors", path, product_space, build_base)
    if kind == "disjoint_union":
        return _combine(node, "summands", path, disjoint_union, build_base)
    raise SpaceSyntaxError(f"{path}.kind", f"{kind!r} is not a conjugation space")


def build(node, path="$") -> Model:
    """Evaluate a description to the model of the space it names."""
    kind = _kind(node, path)
    if kind in ("point", "real_flag"):
        return build_base(node, path)
    if kind == "complex_flag":
        return complex_from_real(real_flag_space(parse_flag_spec(node, path)))
    if kind == "proj":
        return proj_space(parse_proj_spec(node, path))
    if kind == "dold":
        proj = parse_proj_spec(_field(node, "proj", path), f"{path}.proj")
        base = build_base(_field(node, "base", path), f"{path}.base")
        try:
            return dold_fixed_data(proj, base)
        except (ModelError, RankError) as exc:
            raise SpaceSyntaxError(path, str(exc)) from None
    if kind == "product":
        return _combine(node, "factors", path, product_space, build)
    return _combine(node, "summands", path, disjoint_union, build)


def flag_ast(spec: FlagSpec, kind: str = "real_flag") -> dict:
    return {"kind": kind, "q": spec.q, "S": [elements_from_bits(a) for a in spec.S],
            "parts": list(spec.parts)}


def proj_ast(spec: ProjSpec) -> dict:
    return {"kind": "proj", "s": spec.s, "chars": [elements_from_bits(c) for c in spec.chars]}


def canonical(node, path="$") -> dict:
    """Validated copy of ``node`` with every flag's ``S`` in canonical order."""
    kind = _kind(node, path)
    if kind == "point":
        return {"kind": "point", "q": _int(node, "q", path)}
    if kind in ("real_flag", "complex_flag"):
        return flag_ast(parse_flag_spec(node, path), kind)
    if kind == "proj":
        return proj_ast(parse_proj_spec(node, path))
    if kind == "dold":
        build(node, path)
        return {"kind": "dold", "proj": canonical(node["proj"], f"{path}.proj"),
                "base": canonical(node["base"], f"{path}.base")}
    key = "factors" if kind == "product" else "summands"
    build(node, path)
    return {"kind": kind, key: [canonical(x, f"{path}.{key}[{i}]")
                                for i, x in enumerate(node[key])]}
