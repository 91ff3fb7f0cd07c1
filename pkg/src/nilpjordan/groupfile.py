"""The group-definition file format.

A file is a header followed by generator blocks, one item per line::

    # S3 on three points
    kind: permutation
    degree: 3
    generator: 1, 0, 2
    generator: 1, 2, 0

    kind: semilinear
    conductor: 4
    dimension: 2
    uses_t: true
    generator:
      row: 0, t
      row: 1/t, 0
      mobius: 0, 1, 1, 0

Matrix and semilinear generators open with a bare ``generator:`` line and
list their rows; a semilinear generator may give ``mobius: a, b, c, d``
(default: the identity).  Entries are scalar expressions; blank lines and
text after ``#`` are ignored.  The full grammar is in docs/file_format.md.
"""

from dataclasses import dataclass, field

from .errors import NilpJordanError, ParseError, ValidationError
from .exact_field import FieldAutomorphism, RationalFunction, parse_scalar
from .group_core import Matrix, Permutation, Semilinear, closure

KINDS = ("permutation", "matrix", "semilinear")
_HEADER = ("kind", "conductor", "dimension", "degree", "uses_t", "name")


@dataclass
class GroupContext:
    kind: str
    conductor: int = None
    dimension: int = None
    uses_t: bool = False
    name: str = None
    source: str = None


@dataclass
class _Block:
    line: int
    rows: list = field(default_factory=list)
    mobius: tuple = None


def _strip_comment(text):
    return text.split("#", 1)[0].rstrip()


def _fields(text, line, offset):
    """Split a comma-separated list, remembering each field's column."""
    out = []
    col = offset
    for piece in text.split(","):
        lead = len(piece) - len(piece.lstrip())
        if not piece.strip():
            raise ParseError(line, col + lead + 1, "empty entry")
        out.append((piece.strip(), col + lead + 1))
        col += len(piece) + 1
    return out


def _integer(text, line, col, what):
    try:
        value = int(text)
    except ValueError:
        raise ParseError(line, col, f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise ValidationError(f"line {line}: {what} must be positive")
    return value


def _scalar(text, line, col, ctx):
    try:
        return parse_scalar(text, ctx.conductor, allow_t=ctx.uses_t)
    except ParseError as err:
        raise ParseError(line, col + err.column - 1, err.message) from None
    except NilpJordanError as err:
        raise ValidationError(f"line {line}, column {col}: {err}") from None


def parse_group_text(text, source=None):
    """Parse file contents into (generators, context)."""
    header = {}
    perms = []
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        if ":" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise ParseError(lineno, col, "expected 'key: value'")
        key_part, value = body.split(":", 1)
        key = key_part.strip()
        vcol = len(key_part) + 1  # columns before the value
        if key in _HEADER:
            if perms or blocks:
                raise ParseError(lineno, 1, f"header key {key!r} after the first generator")
            if key in header:
                raise ParseError(lineno, 1, f"duplicate header key {key!r}")
            header[key] = (value.strip(), lineno, vcol + len(value) - len(value.lstrip()) + 1)
        elif key == "generator":
            if value.strip():
                perms.append((value, lineno, vcol))
            else:
                blocks.append(_Block(lineno))
        elif key in ("row", "mobius"):
            if not blocks:
                raise ParseError(lineno, 1, f"{key!r} outside a generator block")
            if key == "row":
                blocks[-1].rows.append((value, lineno, vcol))
            elif blocks[-1].mobius is not None:
                raise ParseError(lineno, 1, "duplicate 'mobius' line")
            else:
                blocks[-1].mobius = (value, lineno, vcol)
        else:
            col = len(key_part) - len(key_part.lstrip()) + 1
            raise ParseError(lineno, col, f"unknown key {key!r}")

    ctx = _context(header, source)
    if ctx.kind == "permutation":
        if blocks:
            raise ParseError(blocks[0].line, 1, "permutation generators are given inline")
        gens = [_permutation(v, ln, col, ctx) for v, ln, col in perms]
    else:
        if perms:
            raise ParseError(perms[0][1], 1, "matrix generators are given as 'row:' lines")
        gens = [_matrix_generator(b, ctx) for b in blocks]
    if not gens:
        raise ValidationError("no generators")
    return gens, ctx


def _context(header, source):
    if "kind" not in header:
        raise ParseError(1, 1, "missing 'kind:' header")
    kind, line, col = header["kind"]
    if kind not in KINDS:
        raise ParseError(line, col, f"unknown kind {kind!r}")
    ctx = GroupContext(kind, source=source)
    if "name" in header:
        ctx.name = header["name"][0]
    if "dimension" in header and "degree" in header:
        raise ParseError(header["degree"][1], 1, "give either 'dimension' or 'degree'")
    size = header.get("dimension") or header.get("degree")
    if size is None:
        raise ParseError(1, 1, "missing 'dimension:' or 'degree:' header")
    ctx.dimension = _integer(*size, "dimension")
    if kind == "permutation":
        for key in ("conductor", "uses_t"):
            if key in header:
                raise ParseError(header[key][1], 1, f"{key!r} is meaningless for permutations")
        return ctx
    if "conductor" not in header:
        raise ParseError(1, 1, f"{kind} files need a 'conductor:' header")
    ctx.conductor = _integer(*header["conductor"], "conductor")
    if "uses_t" in header:
        flag, line, col = header["uses_t"]
        if flag.lower() not in ("true", "false"):
            raise ParseError(line, col, "uses_t must be true or false")
        ctx.uses_t = flag.lower() == "true"
    if kind == "matrix" and ctx.uses_t:
        raise ValidationError("matrix files have constant entries; use kind: semilinear")
    return ctx


def _permutation(value, line, col, ctx):
    images = []
    for text, c in _fields(value, line, col):
        try:
            images.append(int(text))
        except ValueError:
            raise ParseError(line, c, f"expected an integer, got {text!r}") from None
    if len(images) != ctx.dimension:
        raise ValidationError(f"line {line}: {len(images)} images for degree {ctx.dimension}")
    try:
        return Permutation(images)
    except ValidationError as err:
        raise ValidationError(f"line {line}: {err}") from None


def _matrix_generator(block, ctx):
    n = ctx.dimension
    rows = []
    for value, line, col in block.rows:
        entries = [_scalar(t, line, c, ctx) for t, c in _fields(value, line, col)]
        if len(entries) != n:
            raise ValidationError(f"line {line}: row has {len(entries)} entries, expected {n}")
        rows.append(entries)
    if len(rows) != n:
        raise ValidationError(f"line {block.line}: generator has {len(rows)} rows, expected {n}")
    try:
        matrix = Matrix(ctx.conductor, rows)
    except NilpJordanError as err:
        raise ValidationError(f"line {block.line}: {err}") from None
    if ctx.kind == "matrix":
        if block.mobius is not None:
            raise ParseError(block.mobius[1], 1, "'mobius' needs kind: semilinear")
        return matrix
    if block.mobius is None:
        aut = FieldAutomorphism.identity(ctx.conductor)
    else:
        value, line, col = block.mobius
        coeffs = []
        for t, c in _fields(value, line, col):
            x = _constant(t, line, c, ctx.conductor)
            coeffs.append(x)
        if len(coeffs) != 4:
            raise ValidationError(f"line {line}: mobius needs 4 entries, got {len(coeffs)}")
        try:
            aut = FieldAutomorphism(ctx.conductor, *coeffs)
        except NilpJordanError as err:
            raise ValidationError(f"line {line}: {err}") from None
    return Semilinear(matrix, aut)


def _constant(text, line, col, conductor):
    """A Moebius coefficient: a constant scalar expression (no t)."""
    try:
        x = parse_scalar(text, conductor, allow_t=False)
    except ParseError as err:
        raise ParseError(line, col + err.column - 1, err.message) from None
    except NilpJordanError as err:
        raise ValidationError(f"line {line}, column {col}: {err}") from None
    if isinstance(x, RationalFunction):  # pragma: no cover - allow_t=False forbids it
        raise ValidationError(f"line {line}: Moebius entries must be constants")
    return x


def parse_group_file(path):
    """Read and validate a group-definition file: (generators, context)."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise ValidationError(f"cannot read {path}: {err.strerror}") from None
    return parse_group_text(text, source=str(path))


def load_group(path, cap=None):
    """Parse a file and close its generators into a FiniteGroup."""
    gens, ctx = parse_group_file(path)
    G = closure(gens, cap=cap, name=ctx.name)
    return G, ctx


# writing ------------------------------------------------------------------


def _entries(values):
    return ", ".join(str(x) for x in values)


def format_group(G, name=None, comment=None):
    """Render the generators of G in the file format."""
    gens = [G.element(i) for i in G.gens] or [G.element(0)]
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"kind: {G.kind}")
    name = name or G.name
    if name:
        lines.append(f"name: {name}")
    if G.kind == "permutation":
        lines.append(f"degree: {G.dimension}")
        lines += [f"generator: {_entries(g.images)}" for g in gens]
        return "\n".join(lines) + "\n"
    lines.append(f"conductor: {G.conductor}")
    lines.append(f"dimension: {G.dimension}")
    if G.kind == "semilinear":
        uses_t = any(
            isinstance(x, RationalFunction) for g in gens for r in g.matrix.rows for x in r
        )
        lines.append(f"uses_t: {'true' if uses_t else 'false'}")
    for g in gens:
        matrix = g if G.kind == "matrix" else g.matrix
        lines.append("generator:")
        lines += [f"  row: {_entries(r)}" for r in matrix.rows]
        if G.kind == "semilinear" and not g.aut.is_identity():
            lines.append(f"  mobius: {_entries(g.aut.mobius)}")
    return "\n".join(lines) + "\n"


def write_group_file(path, G, name=None, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_group(G, name=name, comment=comment))
