"""Named examples.

Grammar (``@F`` at the very end sets the default field of every part)::

    group:<G>[:<field>]            G in Cn, S3, V4, D4
    pair-groupoid:<n>[:<field>]
    union:<g>,<g>,...              disjoint union of groupoids (group:/pair-groupoid: parts)
    dsum:<x>,<y>,...               direct sum of weak Hopf algebras
    tensor:<x>,<y>,...
    matrix:<n>:<x>                 M_n(x)
    kk[:<field>]                   k (+) k
    path:A2[:<field>]              upper triangular 2x2 matrices (algebra only)
    smash-laurent:<x>:<sigma>:<D>  sigma in id, swap
    ore-skew:<x>:<sigma>:<D>

Parts containing commas can be grouped with parentheses.
"""
from __future__ import annotations

import re

from .algebra import AlgebraError, upper_triangular_algebra
from .linalg import QQ, Field, FieldError, Matrix, parse_field
from .weakhopf import (
    Groupoid,
    WeakHopfAlgebra,
    build_groupoid_algebra,
    direct_sum,
    disjoint_union,
    group_by_name,
    group_algebra,
    group_groupoid,
    matrix_weak_hopf,
    pair_groupoid,
    pair_groupoid_algebra,
    swap_summands,
    tensor_product,
)


class UnknownExampleError(ValueError):
    code = "unknown-example"


_FIELD = re.compile(r"^(Q|F\d+|Fp\d+)$")


def split_top(text: str) -> list[str]:
    """Split on commas outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UnknownExampleError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise UnknownExampleError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return [_strip(p) for p in parts]


def _strip(p: str) -> str:
    p = p.strip()
    while p.startswith("(") and p.endswith(")") and not split_top_unsafe(p[1:-1]):
        p = p[1:-1].strip()
    return p


def split_top_unsafe(text: str) -> bool:
    """True if ``text`` has unbalanced parentheses (so the outer pair is not a wrapper)."""
    depth = 0
    for ch in text:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return True
    return depth != 0


def _field_suffix(parts: list[str], default: Field) -> tuple[list[str], Field]:
    if parts and _FIELD.match(parts[-1]):
        return parts[:-1], parse_field(parts[-1])
    return parts, default


def _groupoid(name: str, default: Field) -> tuple[Groupoid, Field]:
    parts, f = _field_suffix(name.split(":"), default)
    if len(parts) == 2 and parts[0] == "group":
        try:
            elems, mult = group_by_name(parts[1])
        except AlgebraError:
            raise UnknownExampleError(f"unknown group {parts[1]!r}") from None
        return group_groupoid(elems, mult), f
    if len(parts) == 2 and parts[0] == "pair-groupoid":
        return pair_groupoid(_int(parts[1], name)), f
    raise UnknownExampleError(f"not a groupoid: {name!r}")


def _int(tok: str, name: str) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise UnknownExampleError(f"expected an integer in {name!r}, got {tok!r}") from None
    if v < 1:
        raise UnknownExampleError(f"expected a positive integer in {name!r}")
    return v


def _same_field(fields: list[Field], name: str) -> Field:
    if any(f != fields[0] for f in fields):
        raise UnknownExampleError(f"parts of {name!r} live over different fields")
    return fields[0]


def build_example(name: str, default: Field = QQ):
    """Resolve an example name to a weak Hopf algebra, skew family or (for ``path:A2``) a plain algebra."""
    name = name.strip()
    if "@" in name:
        name, _, ftxt = name.rpartition("@")
        try:
            default = parse_field(ftxt)
        except (FieldError, ValueError):
            raise UnknownExampleError(f"unknown field {ftxt!r}") from None
    return _build(_strip(name), default)


def _build(name: str, default: Field):
    head, _, rest = name.partition(":")
    if head in ("group", "pair-groupoid"):
        g, f = _groupoid(name, default)
        if head == "group":
            return group_algebra(f, rest.split(":")[0])
        return pair_groupoid_algebra(f, g.objects)
    if head == "union":
        pieces = [_groupoid(p, default) for p in split_top(rest)]
        f = _same_field([p[1] for p in pieces], name)
        return build_groupoid_algebra(f, disjoint_union(*[p[0] for p in pieces]), name=f"union({rest})")
    if head == "kk":
        parts, f = _field_suffix([p for p in rest.split(":") if p], default)
        if parts:
            raise UnknownExampleError(f"unexpected parameters in {name!r}")
        one = build_groupoid_algebra(f, pair_groupoid(1), name="k")
        return direct_sum(one, one, name="k+k")
    if head == "path":
        parts, f = _field_suffix(rest.split(":"), default)
        if parts != ["A2"]:
            raise UnknownExampleError(f"unknown path algebra {name!r}")
        return upper_triangular_algebra(f)
    if head in ("dsum", "tensor"):
        parts = [_weak_hopf(p, default) for p in split_top(rest)]
        if len(parts) < 2:
            raise UnknownExampleError(f"{head} needs at least two parts")
        _same_field([p.field for p in parts], name)
        op = direct_sum if head == "dsum" else tensor_product
        acc = parts[0]
        for p in parts[1:]:
            acc = op(acc, p)
        return acc
    if head == "matrix":
        n, _, inner = rest.partition(":")
        return matrix_weak_hopf(_int(n, name), _weak_hopf(inner, default))
    if head in ("smash-laurent", "ore-skew"):
        from .families import build_ore_extension, build_smash_laurent

        try:
            base_name, sig, D = rest.rsplit(":", 2)
        except ValueError:
            raise UnknownExampleError(f"{head} needs <base>:<sigma>:<D>") from None
        base = _weak_hopf(base_name, default)
        sigma = named_sigma(base, sig)
        build = build_smash_laurent if head == "smash-laurent" else build_ore_extension
        return build(base, sigma, _int(D, name))
    raise UnknownExampleError(f"unknown example {name!r}")


def _weak_hopf(name: str, default: Field) -> WeakHopfAlgebra:
    obj = _build(_strip(name), default)
    if not isinstance(obj, WeakHopfAlgebra):
        raise UnknownExampleError(f"{name!r} is not a weak Hopf algebra")
    return obj


def named_sigma(w: WeakHopfAlgebra, sig: str) -> Matrix:
    if sig == "id":
        return Matrix.identity(w.field, w.dim)
    if sig == "swap":
        if w.dim % 2:
            raise UnknownExampleError("swap needs a direct sum of two equal parts")
        return swap_summands(w, w.dim // 2)
    raise UnknownExampleError(f"unknown automorphism {sig!r}")


# weak Hopf algebras of dimension at most 16 used for the quasi-Frobenius suite
QF_GALLERY = [
    "group:C2", "group:S3", "group:V4", "group:D4",
    "group:C2:F2", "group:C4:F2", "group:S3:F2", "group:V4:F2", "group:D4:F2",
    "group:C3:F3", "group:S3:F3",
    "pair-groupoid:2", "pair-groupoid:3", "pair-groupoid:2:F2", "pair-groupoid:3:F2",
    "union:pair-groupoid:2,group:C2", "union:pair-groupoid:2,group:C2@F2",
    "union:pair-groupoid:3,group:C3@F3",
    "dsum:pair-groupoid:2,group:C2", "dsum:pair-groupoid:2,group:C2@F2", "dsum:group:C2,group:S3@F3",
    "kk", "kk:F2",
    "tensor:pair-groupoid:2,group:C2", "tensor:pair-groupoid:2,group:C2@F2",
    "matrix:2:group:C2@F2", "tensor:group:C2,group:C2@F2", "tensor:pair-groupoid:2,group:V4@F2",
]

# the direct-sum examples with the summand names, for block recovery
DSUM_EXAMPLES = {
    "dsum:pair-groupoid:2,group:C2": ["pair-groupoid:2", "group:C2"],
    "dsum:pair-groupoid:2,group:C2@F2": ["pair-groupoid:2@F2", "group:C2@F2"],
    "dsum:group:C2,group:S3@F3": ["group:C2@F3", "group:S3@F3"],
    "kk": ["pair-groupoid:1", "pair-groupoid:1"],
    "kk:F2": ["pair-groupoid:1@F2", "pair-groupoid:1@F2"],
}
