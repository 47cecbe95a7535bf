"""The algebra spec file: a small line-oriented text format.

::

    weakhopf-spec 1
    name pair2
    provenance example pair-groupoid:2
    field Q
    dim 4
    unit 1 0 0 1
    [constants]
    0 0 0 1 1            # e_i e_j = (num/den) e_k  as  i j k num den
    [coalgebra]
    counit 1 1 1 1       # dense row, entries a or a/b
    0 0 0 1 1            # Delta(e_i) contains (num/den) e_p (x) e_q  as  i p q num den
    [antipode]
    0 0 1 1              # S(e_j) contains (num/den) e_i  as  i j num den
    [family]
    kind smash-laurent
    degree 3
    0 1 1 1              # sigma(e_j) contains (num/den) e_i  as  i j num den

Comments start with ``#``.  Rationals are written as numerator/denominator
pairs, elements of F_p as their representatives ``0..p-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraError, FiniteDimAlgebra
from .linalg import Field, FieldError, Matrix, parse_field
from .weakhopf import WeakHopfAlgebra

HEADER = "weakhopf-spec"
VERSION = 1
SECTIONS = ("constants", "coalgebra", "antipode", "family")


class SpecError(ValueError):
    code = "input-error"


class SpecParseError(SpecError):
    code = "parse-error"

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.field = field


class MissingSectionError(SpecError):
    code = "missing-section"

    def __init__(self, section: str):
        super().__init__(f"required section [{section}] is missing")
        self.section = section


@dataclass
class SpecDocument:
    algebra: FiniteDimAlgebra
    weak_hopf: WeakHopfAlgebra | None = None
    family: object = None  # SkewFamily when a [family] section is present
    name: str = ""
    provenance: str = ""

    @property
    def subject(self):
        """The richest structure the file describes."""
        return self.family or self.weak_hopf or self.algebra

    def require(self, section: str) -> None:
        if section == "coalgebra" and self.weak_hopf is None:
            raise MissingSectionError("coalgebra")
        if section == "antipode" and (self.weak_hopf is None or self.weak_hopf.antipode is None):
            raise MissingSectionError("antipode")


# ---------------------------------------------------------------------------
# serialisation


def _pair(f: Field, x) -> tuple[int, int]:
    if isinstance(x, Fraction):
        return x.numerator, x.denominator
    return int(x), 1


def _token(f: Field, x) -> str:
    n, d = _pair(f, x)
    return str(n) if d == 1 else f"{n}/{d}"


def _field_line(f: Field) -> str:
    return "field Q" if f.characteristic == 0 else f"field Fp {f.characteristic}"


def _clean(text: str) -> str:
    return " ".join(str(text).split())


def dump_spec(obj, provenance: str = "", name: str | None = None) -> str:
    """Serialise an algebra, weak Hopf algebra or skew family."""
    from .families import SkewFamily

    fam = obj if isinstance(obj, SkewFamily) else None
    w = fam.base if fam else (obj if isinstance(obj, WeakHopfAlgebra) else None)
    a = w.algebra if w is not None else obj
    if not isinstance(a, FiniteDimAlgebra):
        raise SpecError(f"cannot serialise {type(obj).__name__}")
    f = a.field
    # a family file embeds its base, so the name line names the base
    carrier = w if w is not None else a
    title = name if name is not None else carrier.name
    out = [f"{HEADER} {VERSION}"]
    if title:
        out.append(f"name {_clean(title)}")
    if provenance:
        out.append(f"provenance {_clean(provenance)}")
    out.append(_field_line(f))
    out.append(f"dim {a.dim}")
    out.append("unit " + " ".join(_token(f, c) for c in a.unit))
    out.append("[constants]")
    for i, j, k, c in sorted(a.structure_tuples()):
        n, d = _pair(f, c)
        out.append(f"{i} {j} {k} {n} {d}")
    if w is not None:
        out.append("[coalgebra]")
        out.append("counit " + " ".join(_token(f, c) for c in w.counit.rows[0]))
        for i in range(w.dim):
            for (p, q), c in sorted(w.delta_terms(i).items()):
                n, d = _pair(f, c)
                out.append(f"{i} {p} {q} {n} {d}")
        if w.antipode is not None:
            out.append("[antipode]")
            out.extend(_matrix_lines(f, w.antipode))
    if fam is not None:
        out.append("[family]")
        out.append(f"kind {fam.kind}")
        out.append(f"degree {fam.D}")
        out.extend(_matrix_lines(f, fam.sigma))
    return "\n".join(out) + "\n"


def _matrix_lines(f: Field, m: Matrix) -> list[str]:
    lines = []
    for i, row in enumerate(m.rows):
        for j, c in enumerate(row):
            if c != 0:
                n, d = _pair(f, c)
                lines.append(f"{i} {j} {n} {d}")
    return lines


# ---------------------------------------------------------------------------
# parsing


class _Reader:
    def __init__(self, field: Field | None = None):
        self.field = field

    def int(self, tok: str, line: int, what: str) -> int:
        try:
            return int(tok)
        except ValueError:
            raise SpecParseError(f"expected an integer, got {tok!r}", line, what) from None

    def index(self, tok: str, line: int, what: str, dim: int) -> int:
        i = self.int(tok, line, what)
        if not 0 <= i < dim:
            raise SpecParseError(f"index {i} out of range 0..{dim - 1}", line, what)
        return i

    def scalar(self, num: str, den: str, line: int, what: str):
        n, d = self.int(num, line, what), self.int(den, line, what)
        if d == 0:
            raise SpecParseError("zero denominator", line, what)
        try:
            return self.field(Fraction(n, d))
        except ZeroDivisionError:
            raise SpecParseError(f"denominator {d} vanishes in {self.field}", line, what) from None

    def token(self, tok: str, line: int, what: str):
        num, _, den = tok.partition("/")
        return self.scalar(num, den or "1", line, what)


def parse_spec(text: str) -> SpecDocument:
    """Parse a spec file; errors cite the line number and the field."""
    lines = text.splitlines()
    body: list[tuple[int, list[str]]] = []
    for no, raw in enumerate(lines, start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            body.append((no, content.split()))
    if not body or body[0][1][0] != HEADER:
        raise SpecParseError(f"first line must be '{HEADER} {VERSION}'", body[0][0] if body else 1, "header")
    no, toks = body[0]
    if len(toks) != 2 or toks[1] != str(VERSION):
        raise SpecParseError(f"unsupported version {' '.join(toks[1:])!r}", no, "header")

    head: dict[str, tuple[int, list[str]]] = {}
    sections: dict[str, list[tuple[int, list[str]]]] = {}
    current = None
    for no, toks in body[1:]:
        word = toks[0]
        if word.startswith("[") and word.endswith("]"):
            current = word[1:-1]
            if current not in SECTIONS:
                raise SpecParseError(f"unknown section {word}", no, "section")
            if current in sections:
                raise SpecParseError(f"duplicate section {word}", no, "section")
            sections[current] = []
        elif current is None:
            if word not in ("name", "provenance", "field", "dim", "unit"):
                raise SpecParseError(f"unknown header key {word!r}", no, word)
            if word in head:
                raise SpecParseError(f"duplicate key {word!r}", no, word)
            head[word] = (no, toks[1:])
        else:
            sections[current].append((no, toks))

    for key in ("field", "dim", "unit"):
        if key not in head:
            raise SpecParseError(f"missing '{key}' line", None, key)
    no, toks = head["field"]
    try:
        f = parse_field("".join(toks))
    except (FieldError, ValueError):
        raise SpecParseError(f"bad field descriptor {' '.join(toks)!r}", no, "field") from None
    rd = _Reader(f)
    no, toks = head["dim"]
    if len(toks) != 1:
        raise SpecParseError("expected one integer", no, "dim")
    dim = rd.int(toks[0], no, "dim")
    if dim < 1:
        raise SpecParseError("dimension must be positive", no, "dim")
    no, toks = head["unit"]
    if len(toks) != dim:
        raise SpecParseError(f"expected {dim} entries, got {len(toks)}", no, "unit")
    unit = [rd.token(t, no, "unit") for t in toks]
    name = " ".join(head.get("name", (0, []))[1])
    prov = " ".join(head.get("provenance", (0, []))[1])

    if "constants" not in sections:
        raise MissingSectionError("constants")
    consts = {}
    for no, toks in sections["constants"]:
        if len(toks) != 5:
            raise SpecParseError("expected 'i j k num den'", no, "constants")
        i, j, k = (rd.index(t, no, "constants", dim) for t in toks[:3])
        if (i, j, k) in consts:
            raise SpecParseError(f"duplicate entry for {(i, j, k)}", no, "constants")
        consts[(i, j, k)] = rd.scalar(toks[3], toks[4], no, "constants")
    try:
        a = FiniteDimAlgebra(f, dim, [(i, j, k, c) for (i, j, k), c in consts.items() if c != 0], unit, name=name)
    except AlgebraError as e:
        raise SpecParseError(str(e), None, "constants") from None
    doc = SpecDocument(a, name=name, provenance=prov)

    if "coalgebra" in sections:
        counit = None
        delta = [dict() for _ in range(dim)]
        for no, toks in sections["coalgebra"]:
            if toks[0] == "counit":
                if counit is not None:
                    raise SpecParseError("duplicate counit row", no, "counit")
                if len(toks) - 1 != dim:
                    raise SpecParseError(f"expected {dim} entries, got {len(toks) - 1}", no, "counit")
                counit = [rd.token(t, no, "counit") for t in toks[1:]]
                continue
            if len(toks) != 5:
                raise SpecParseError("expected 'i p q num den'", no, "delta")
            i, p, q = (rd.index(t, no, "delta", dim) for t in toks[:3])
            if (p, q) in delta[i]:
                raise SpecParseError(f"duplicate entry for {(i, p, q)}", no, "delta")
            delta[i][(p, q)] = rd.scalar(toks[3], toks[4], no, "delta")
        if counit is None:
            raise SpecParseError("missing counit row", None, "counit")
        S = None
        if "antipode" in sections:
            S = _read_matrix(rd, sections["antipode"], dim, "antipode")
        doc.weak_hopf = WeakHopfAlgebra.from_terms(a, delta, counit, S, name=name)
    elif "antipode" in sections:
        raise SpecParseError("an antipode needs a [coalgebra] section", sections["antipode"][0][0] if sections["antipode"] else None, "antipode")

    if "family" in sections:
        doc.family = _read_family(rd, sections["family"], doc, dim)
    return doc


def _read_matrix(rd: _Reader, entries, dim: int, what: str) -> Matrix:
    rows = [[0] * dim for _ in range(dim)]
    seen = set()
    for no, toks in entries:
        if len(toks) != 4:
            raise SpecParseError("expected 'i j num den'", no, what)
        i, j = (rd.index(t, no, what, dim) for t in toks[:2])
        if (i, j) in seen:
            raise SpecParseError(f"duplicate entry for {(i, j)}", no, what)
        seen.add((i, j))
        rows[i][j] = rd.scalar(toks[2], toks[3], no, what)
    return Matrix(rd.field, rows, dim)


def _read_family(rd: _Reader, entries, doc: SpecDocument, dim: int):
    from .families import ORE, SMASH, FamilyError, SkewFamily

    kind, degree, sigma_lines = None, None, []
    for no, toks in entries:
        if toks[0] == "kind":
            if len(toks) != 2 or toks[1] not in (SMASH, ORE):
                raise SpecParseError(f"kind must be {SMASH} or {ORE}", no, "kind")
            kind = toks[1]
        elif toks[0] == "degree":
            if len(toks) != 2:
                raise SpecParseError("expected one integer", no, "degree")
            degree = rd.int(toks[1], no, "degree")
        else:
            sigma_lines.append((no, toks))
    if kind is None or degree is None:
        raise SpecParseError("a family needs 'kind' and 'degree'", entries[0][0] if entries else None, "family")
    if doc.weak_hopf is None or doc.weak_hopf.antipode is None:
        raise MissingSectionError("antipode")
    sigma = _read_matrix(rd, sigma_lines, dim, "sigma")
    try:
        return SkewFamily(doc.weak_hopf, sigma, kind, degree)
    except FamilyError as e:
        raise SpecParseError(str(e), None, "family") from None


def load_spec(path: str) -> SpecDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def same_data(x, y) -> bool:
    """Bit-equal structure constants and coalgebra data (and family parameters)."""
    if hasattr(x, "kind") or hasattr(y, "kind"):
        if not (hasattr(x, "kind") and hasattr(y, "kind")):
            return False
        return x.kind == y.kind and x.D == y.D and x.sigma == y.sigma and same_data(x.base, y.base)
    ax = getattr(x, "algebra", x)
    ay = getattr(y, "algebra", y)
    if ax.field != ay.field or ax.dim != ay.dim or ax.unit != ay.unit:
        return False
    if sorted(ax.structure_tuples()) != sorted(ay.structure_tuples()):
        return False
    if isinstance(x, WeakHopfAlgebra) != isinstance(y, WeakHopfAlgebra):
        return False
    if isinstance(x, WeakHopfAlgebra):
        if x.comul != y.comul or x.counit != y.counit:
            return False
        if (x.antipode is None) != (y.antipode is None):
            return False
        if x.antipode is not None and x.antipode != y.antipode:
            return False
    return True
