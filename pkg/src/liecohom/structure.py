"""Structure equations, the `.lie` text format, and the differential.

A structure file declares the differential of each holomorphic coframe
generator; the differential of a conjugate generator is never user input,
it is the conjugate of the declared one (d is a real operator).  The
differential extends to all invariant forms as the unique antiderivation,
and splits as d = del + delbar on integrable structures.

Grammar (UTF-8, line oriented, `#` starts a comment):

    algebra NAME
    dim N
    d fK = EXPR          # omitted generators have d fK = 0
    metric identity
    metric hermitian     # followed by N lines of N scalars, row-major

    EXPR  := ['-'] TERM (('+'|'-') TERM)*
    TERM  := [COEF '*'] MONO | COEF
    MONO  := GEN ('^' GEN)*          GEN := fJ | FJ   (FJ = conjugate)
    COEF  := '(' A [('+'|'-') B 'i'] ')' | A | B'i' | 'i'
             with A, B rationals like -1/2   (so `1/2i` means (1/2)*i)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    IntegrabilityError,
    JacobiViolation,
    ParseError,
)
from .exterior import BasisMonomial, Form
from .linalg import Subspace, Vector, vec_is_zero, zero_vector
from .scalars import ONE, ZERO, Scalar, format_scalar


@dataclass(frozen=True)
class AlgebraFlags:
    integrable: bool
    unimodular: bool
    nilpotent: bool


class StructureEquations:
    """Validated structure equations of a complex Lie coalgebra.

    Immutable after construction; d**2 = 0 is verified on every generator
    at construction time, so downstream code may assume it.
    """

    def __init__(self, n: int, dgen: Sequence[Form], name: str = "unnamed"):
        if len(dgen) != n:
            raise ValueError(f"expected {n} generator differentials, got {len(dgen)}")
        for k, g in enumerate(dgen, start=1):
            if g.n != n:
                raise ValueError(f"d f{k} lives over the wrong coframe size")
            bad = [bd for bd in g.bidegrees() if sum(bd) != 2]
            if bad:
                raise ValueError(f"d f{k} must be homogeneous of degree 2, found {bad}")
        self.n = n
        self.name = name
        self.dgen = tuple(dgen)
        self.dgen_conj = tuple(g.conjugate() for g in dgen)
        self._d_mono: dict[BasisMonomial, Form] = {}
        self._op_matrix_cache: dict = {}
        self._bracket_cache: dict[tuple[int, int], Vector] = {}
        for k in range(1, n + 1):
            if not self.d(self.dgen[k - 1]).is_zero():
                raise JacobiViolation(
                    f"Jacobi violation: d(d f{k}) != 0 for generator f{k}"
                )
        self.flags = AlgebraFlags(
            integrable=self._compute_integrable(),
            unimodular=self._compute_unimodular(),
            nilpotent=self._compute_nilpotent(),
        )

    # -- differential -----------------------------------------------------

    def _d_monomial(self, mono: BasisMonomial) -> Form:
        cached = self._d_mono.get(mono)
        if cached is not None:
            return cached
        factors = [(i, False) for i in mono.holo] + [(j, True) for j in mono.anti]
        p = len(mono.holo)
        out = Form.zero(self.n)
        for k, (idx, is_conj) in enumerate(factors):
            dfac = self.dgen_conj[idx - 1] if is_conj else self.dgen[idx - 1]
            if dfac.is_zero():
                continue
            if k < p:
                prefix = BasisMonomial(mono.holo[:k], ())
                suffix = BasisMonomial(mono.holo[k + 1 :], mono.anti)
            else:
                y = k - p
                prefix = BasisMonomial(mono.holo, mono.anti[:y])
                suffix = BasisMonomial((), mono.anti[y + 1 :])
            piece = (
                Form(self.n, {prefix: ONE}, _validated=True)
                .wedge(dfac)
                .wedge(Form(self.n, {suffix: ONE}, _validated=True))
            )
            out = out + (piece if k % 2 == 0 else -piece)
        self._d_mono[mono] = out
        return out

    def d(self, a: Form) -> Form:
        """Exterior differential: the antiderivation extending the equations."""
        if a.n != self.n:
            raise ValueError(f"form over n={a.n}, structure over n={self.n}")
        out = Form.zero(self.n)
        for mono, coeff in a.terms.items():
            out = out + self._d_monomial(mono).scale(coeff)
        return out

    def _require_integrable(self):
        if not self.flags.integrable:
            raise IntegrabilityError(
                f"algebra {self.name!r} is not integrable; del/delbar are undefined"
            )

    def del_(self, a: Form) -> Form:
        """(1,0)-part of d; defined on integrable structures."""
        self._require_integrable()
        out = Form.zero(self.n)
        for (p, q), comp in a.components().items():
            out = out + self.d(comp).project(p + 1, q)
        return out

    def delbar(self, a: Form) -> Form:
        """(0,1)-part of d; defined on integrable structures."""
        self._require_integrable()
        out = Form.zero(self.n)
        for (p, q), comp in a.components().items():
            out = out + self.d(comp).project(p, q + 1)
        return out

    def del_delbar(self, a: Form) -> Form:
        return self.del_(self.delbar(a))

    # -- flags --------------------------------------------------------------

    def _compute_integrable(self) -> bool:
        return all(g.project(0, 2).is_zero() for g in self.dgen)

    # The real Lie algebra behind the coframe is recovered through the
    # pairing d(alpha)(x, y) = -alpha([x, y]).  We work in the complexified
    # algebra with basis Z_1..Z_n, conj(Z_1)..conj(Z_n) dual to f's and F's;
    # basis vector index a in 0..2n-1 means Z_{a+1} for a < n, else the
    # conjugate generator.  Unimodularity / nilpotency of the real algebra
    # and of its complexification coincide, so no real basis is needed.

    def _eval_two_form(self, form: Form, a: int, b: int) -> Scalar:
        total = ZERO
        for mono, coeff in form.terms.items():
            factors = [(i, False) for i in mono.holo] + [(j, True) for j in mono.anti]
            f1, f2 = factors
            val = _eval_factor(f1, a, self.n) * _eval_factor(f2, b, self.n) - _eval_factor(
                f1, b, self.n
            ) * _eval_factor(f2, a, self.n)
            if val:
                total = total + coeff * val
        return total

    def bracket(self, a: int, b: int) -> Vector:
        """[e_a, e_b] in coordinates over the 2n complexified basis vectors."""
        cached = self._bracket_cache.get((a, b))
        if cached is not None:
            return cached
        coords = []
        for g in self.dgen:
            coords.append(-self._eval_two_form(g, a, b))
        for g in self.dgen_conj:
            coords.append(-self._eval_two_form(g, a, b))
        out = tuple(coords)
        self._bracket_cache[(a, b)] = out
        return out

    def _bracket_with_vector(self, a: int, v: Vector) -> Vector:
        out = list(zero_vector(2 * self.n))
        for b, vb in enumerate(v):
            if vb:
                w = self.bracket(a, b)
                out = [x + vb * y for x, y in zip(out, w)]
        return tuple(out)

    def _compute_unimodular(self) -> bool:
        dim = 2 * self.n
        for a in range(dim):
            trace = ZERO
            for b in range(dim):
                trace = trace + self.bracket(a, b)[b]
            if trace:
                return False
        return True

    def _compute_nilpotent(self) -> bool:
        dim = 2 * self.n
        vectors = [
            self.bracket(a, b) for a in range(dim) for b in range(a + 1, dim)
        ]
        layer = Subspace(dim, [v for v in vectors if not vec_is_zero(v)])
        while layer.dim:
            next_vectors = [
                self._bracket_with_vector(a, v)
                for a in range(dim)
                for v in layer.basis_vectors()
            ]
            next_layer = Subspace(dim, [v for v in next_vectors if not vec_is_zero(v)])
            if next_layer.dim == layer.dim:
                return False  # lower central series stabilized above zero
            layer = next_layer
        return True

    def __repr__(self):
        return f"StructureEquations({self.name!r}, n={self.n})"


def check_flags(s: StructureEquations) -> AlgebraFlags:
    return s.flags


def _eval_factor(factor, a: int, n: int) -> Scalar:
    idx, is_conj = factor
    target = n + idx - 1 if is_conj else idx - 1
    return ONE if a == target else ZERO


# ---------------------------------------------------------------------------
# Lexer / parser for the `.lie` format and for form expressions
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<num>\d+(?:/\d+)?i?)
      | (?P<word>[A-Za-z][A-Za-z0-9_]*)
      | (?P<sym>[-+*^()=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'imagnum', 'word', or the symbol itself
    text: str
    line: int
    col: int


def _tokenize_line(text: str, line_no: int) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line_no, pos + 1)
        pos = m.end()
        if m.lastgroup == "ws":
            continue
        col = m.start() + 1
        if m.lastgroup == "num":
            raw = m.group()
            if raw.endswith("i"):
                tokens.append(_Token("imagnum", raw[:-1], line_no, col))
            else:
                tokens.append(_Token("num", raw, line_no, col))
        elif m.lastgroup == "word":
            tokens.append(_Token("word", m.group(), line_no, col))
        else:
            tokens.append(_Token(m.group(), m.group(), line_no, col))
    return tokens


class _TokenStream:
    def __init__(self, tokens: list[_Token], line_no: int):
        self.tokens = tokens
        self.pos = 0
        self.line = line_no

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of line", self.line, self._end_col())
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def done(self) -> bool:
        return self.pos >= len(self.tokens)

    def _end_col(self) -> int:
        return self.tokens[-1].col + len(self.tokens[-1].text) if self.tokens else 1


def _parse_rational(tok: _Token) -> Scalar:
    from fractions import Fraction

    try:
        return Scalar(Fraction(tok.text))
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok.text!r}", tok.line, tok.col) from None


def _parse_scalar_atom(ts: _TokenStream, allow_sign: bool = True) -> Scalar:
    tok = ts.peek()
    if tok is None:
        raise ParseError("expected a scalar", ts.line, ts._end_col())
    sign = ONE
    if allow_sign and tok.kind in ("+", "-"):
        ts.next()
        if tok.kind == "-":
            sign = -ONE
        tok = ts.peek()
        if tok is None:
            raise ParseError("dangling sign", ts.line, ts._end_col())
    if tok.kind == "num":
        ts.next()
        return sign * _parse_rational(tok)
    if tok.kind == "imagnum":
        ts.next()
        return sign * Scalar(0, _parse_rational(tok).re)
    if tok.kind == "word" and tok.text == "i":
        ts.next()
        return sign * Scalar(0, 1)
    if tok.kind == "(":
        ts.next()
        total = _parse_scalar_atom(ts, allow_sign=True)
        while True:
            nxt = ts.peek()
            if nxt is None:
                raise ParseError("unclosed '(' in scalar", tok.line, tok.col)
            if nxt.kind == ")":
                ts.next()
                return sign * total
            if nxt.kind in ("+", "-"):
                total = total + _parse_scalar_atom(ts, allow_sign=True)
            else:
                raise ParseError(
                    f"unexpected {nxt.text!r} inside scalar", nxt.line, nxt.col
                )
    raise ParseError(f"expected a scalar, found {tok.text!r}", tok.line, tok.col)


def _parse_generator(ts: _TokenStream, n: int) -> Form:
    tok = ts.expect("word")
    m = re.fullmatch(r"([fF])(\d+)", tok.text)
    if m is None:
        raise ParseError(f"expected a generator fJ or FJ, found {tok.text!r}", tok.line, tok.col)
    idx = int(m.group(2))
    if not (1 <= idx <= n):
        raise ParseError(f"generator index {idx} out of 1..{n}", tok.line, tok.col)
    if m.group(1) == "f":
        return Form.monomial(n, [idx], [])
    return Form.monomial(n, [], [idx])


def _parse_monomial(ts: _TokenStream, n: int) -> Form:
    out = _parse_generator(ts, n)
    while True:
        tok = ts.peek()
        if tok is not None and tok.kind == "^":
            ts.next()
            out = out.wedge(_parse_generator(ts, n))
        else:
            return out


def _starts_generator(tok: Optional[_Token]) -> bool:
    return (
        tok is not None
        and tok.kind == "word"
        and re.fullmatch(r"[fF]\d+", tok.text) is not None
    )


def _parse_term(ts: _TokenStream, n: int) -> Form:
    tok = ts.peek()
    if _starts_generator(tok):
        return _parse_monomial(ts, n)
    coeff = _parse_scalar_atom(ts, allow_sign=False)
    nxt = ts.peek()
    if nxt is not None and nxt.kind == "*":
        ts.next()
        return _parse_monomial(ts, n).scale(coeff)
    return Form.one(n).scale(coeff)


def _parse_expr(ts: _TokenStream, n: int) -> Form:
    out = Form.zero(n)
    sign = ONE
    tok = ts.peek()
    if tok is not None and tok.kind in ("+", "-"):
        ts.next()
        if tok.kind == "-":
            sign = -ONE
    while True:
        out = out + _parse_term(ts, n).scale(sign)
        tok = ts.peek()
        if tok is None:
            return out
        if tok.kind == "+":
            sign = ONE
        elif tok.kind == "-":
            sign = -ONE
        else:
            raise ParseError(f"expected '+', '-' or end, found {tok.text!r}", tok.line, tok.col)
        ts.next()


def parse_form_expr(text: str, n: int, line_no: int = 1) -> Form:
    """Parse a standalone form expression (the DSL's EXPR production)."""
    ts = _TokenStream(_tokenize_line(text, line_no), line_no)
    form = _parse_expr(ts, n)
    if not ts.done():
        tok = ts.peek()
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return form


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal like ``-1/2``, ``3i`` or ``(1/2-3i)``."""
    ts = _TokenStream(_tokenize_line(text, 1), 1)
    value = _parse_scalar_atom(ts, allow_sign=True)
    if not ts.done():
        tok = ts.peek()
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return value


@dataclass
class LieFile:
    structure: StructureEquations
    metric: object  # Optional[HermitianMetric]; untyped to avoid a cycle


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0]


def parse_lie(text: str, name: Optional[str] = None) -> LieFile:
    """Parse a `.lie` file into structure equations plus an optional metric."""
    lines = text.splitlines()
    algebra_name = name
    n: Optional[int] = None
    equations: dict[int, Form] = {}
    metric_rows = None
    metric_identity = False
    pending_metric_rows = 0
    collected_rows: list[list[Scalar]] = []

    for line_no, raw in enumerate(lines, start=1):
        content = _strip_comment(raw).strip()
        if not content:
            continue
        tokens = _tokenize_line(_strip_comment(raw), line_no)
        if pending_metric_rows:
            ts = _TokenStream(tokens, line_no)
            row = [_parse_scalar_atom(ts, allow_sign=True) for _ in range(n or 0)]
            if not ts.done():
                tok = ts.peek()
                raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
            collected_rows.append(row)
            pending_metric_rows -= 1
            continue
        ts = _TokenStream(tokens, line_no)
        head = ts.next()
        if head.kind != "word":
            raise ParseError(f"unexpected {head.text!r}", head.line, head.col)
        if head.text == "algebra":
            rest = _strip_comment(raw).strip()[len("algebra") :].strip()
            if not rest:
                raise ParseError("missing algebra name", head.line, head.col)
            algebra_name = rest
        elif head.text == "dim":
            tok = ts.expect("num")
            if "/" in tok.text:
                raise ParseError("dim must be an integer", tok.line, tok.col)
            if n is not None:
                raise ParseError("duplicate dim declaration", tok.line, tok.col)
            n = int(tok.text)
            if n < 1:
                raise ParseError("dim must be at least 1", tok.line, tok.col)
            if not ts.done():
                tok = ts.peek()
                raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
        elif head.text == "d":
            if n is None:
                raise ParseError("dim must be declared before equations", head.line, head.col)
            gen_tok = ts.expect("word")
            m = re.fullmatch(r"f(\d+)", gen_tok.text)
            if m is None:
                raise ParseError(
                    f"only holomorphic generators fK may be assigned, found {gen_tok.text!r}",
                    gen_tok.line,
                    gen_tok.col,
                )
            k = int(m.group(1))
            if not (1 <= k <= n):
                raise ParseError(f"generator index {k} out of 1..{n}", gen_tok.line, gen_tok.col)
            if k in equations:
                raise ParseError(f"duplicate definition of d f{k}", gen_tok.line, gen_tok.col)
            ts.expect("=")
            value = _parse_expr(ts, n)
            if not ts.done():
                tok = ts.peek()
                raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
            bad = [bd for bd in value.bidegrees() if sum(bd) != 2]
            if bad:
                raise ParseError(
                    f"d f{k} must have total degree 2, found bidegrees {bad}",
                    gen_tok.line,
                    gen_tok.col,
                )
            equations[k] = value
        elif head.text == "metric":
            if n is None:
                raise ParseError("dim must be declared before the metric", head.line, head.col)
            kind = ts.expect("word")
            if kind.text == "identity":
                metric_identity = True
            elif kind.text == "hermitian":
                pending_metric_rows = n
                collected_rows = []
            else:
                raise ParseError(
                    f"metric kind must be 'identity' or 'hermitian', found {kind.text!r}",
                    kind.line,
                    kind.col,
                )
            if not ts.done():
                tok = ts.peek()
                raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
        else:
            raise ParseError(f"unknown statement {head.text!r}", head.line, head.col)

    if pending_metric_rows:
        raise ParseError(
            f"metric matrix ended early: {pending_metric_rows} row(s) missing",
            len(lines),
            1,
        )
    if n is None:
        raise ParseError("missing 'dim N' declaration", len(lines) or 1, 1)
    if algebra_name is None:
        raise ParseError("missing 'algebra NAME' declaration", len(lines) or 1, 1)
    if collected_rows:
        metric_rows = collected_rows

    dgen = [equations.get(k, Form.zero(n)) for k in range(1, n + 1)]
    structure = StructureEquations(n, dgen, name=algebra_name)

    metric = None
    if metric_identity or metric_rows is not None:
        from .hodge import HermitianMetric  # deferred to avoid an import cycle

        try:
            if metric_identity:
                metric = HermitianMetric.identity(n)
            else:
                metric = HermitianMetric(metric_rows)
        except Exception as exc:  # surface metric defects as parse errors
            raise ParseError(f"invalid metric: {exc}", len(lines), 1) from exc
    return LieFile(structure=structure, metric=metric)


def parse_structure(text: str, name: Optional[str] = None) -> StructureEquations:
    return parse_lie(text, name=name).structure


# ---------------------------------------------------------------------------
# Rendering back to the DSL (used for reports and JSON serialization)
# ---------------------------------------------------------------------------


def render_monomial(mono: BasisMonomial) -> str:
    parts = [f"f{i}" for i in mono.holo] + [f"F{j}" for j in mono.anti]
    return "^".join(parts)


def render_form(form: Form) -> str:
    """Deterministic DSL text for a form; parses back to the same form."""
    if form.is_zero():
        return "0"
    chunks = []
    for mono, coeff in form.sorted_terms():
        mono_txt = render_monomial(mono)
        if mono.degree == 0:
            txt = format_scalar(coeff)
        elif coeff == ONE:
            txt = mono_txt
        elif coeff == -ONE:
            txt = "-" + mono_txt
        else:
            txt = format_scalar(coeff) + "*" + mono_txt
        chunks.append(txt)
    out = chunks[0]
    for txt in chunks[1:]:
        if txt.startswith("-"):
            out += " - " + txt[1:]
        else:
            out += " + " + txt
    return out


def render_structure(s: StructureEquations) -> str:
    lines = [f"algebra {s.name}", f"dim {s.n}"]
    for k in range(1, s.n + 1):
        lines.append(f"d f{k} = {render_form(s.dgen[k - 1])}")
    return "\n".join(lines)
