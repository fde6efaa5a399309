"""Exact cohomology of the invariant complex.

Dimensions and representatives are computed from the quotient definitions

    H_BC = (ker del  /\  ker delbar) / im(del delbar)
    H_A  = ker(del delbar) / (im del + im delbar)

by exact row reduction; these are metric-free and are the engine's source
of truth.  With a metric on a unimodular algebra the same spaces are also
computed as kernels of the fourth-order Bott-Chern / Aeppli Laplacians,
through the three-condition characterizations of their kernels, and the
two routes are required to agree.

Everything refers to the invariant (Lie-algebra level) complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import IntegrabilityError, PreconditionError
from .exterior import Form, basis, total_basis
from .hodge import HermitianMetric
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    hstack,
    kernel_basis,
    quotient_representatives,
    vstack,
)
from .scalars import ZERO, Scalar
from .structure import StructureEquations, render_form


# -- coordinates -------------------------------------------------------------


def form_to_vector(form: Form, mons) -> Vector:
    return tuple(form.terms.get(m, ZERO) for m in mons)


def vector_to_form(n: int, v: Vector, mons) -> Form:
    return Form(n, {m: c for m, c in zip(mons, v) if c}, _validated=True)


def _matrix_for(op: Callable[[Form], Form], n: int, src, dst) -> Matrix:
    cols = []
    for mono in src:
        image = op(Form(n, {mono: Scalar(1)}, _validated=True))
        cols.append(form_to_vector(image, dst))
    if not cols:
        return Matrix([], ncols=0) if not dst else Matrix.zeros(len(dst), 0)
    return Matrix.from_columns(cols, nrows=len(dst))


# Bidegree shifts of the four first-order operators.
_OP_SHIFT = {
    "del": (1, 0),
    "delbar": (0, 1),
    "del_adj": (-1, 0),
    "delbar_adj": (0, -1),
}


def _clip(n: int, p: int, q: int):
    return [] if not (0 <= p <= n and 0 <= q <= n) else basis(n, p, q)


def _single_matrix(
    name: str,
    s: StructureEquations,
    p: int,
    q: int,
    h: Optional[HermitianMetric],
) -> Matrix:
    needs_metric = name in ("del_adj", "delbar_adj")
    if needs_metric and h is None:
        raise PreconditionError(f"operator {name} needs a metric")
    key = (name, p, q, h if needs_metric else None)
    cached = s._op_matrix_cache.get(key)
    if cached is not None:
        return cached
    n = s.n
    dp, dq = _OP_SHIFT[name]
    src = _clip(n, p, q)
    dst = _clip(n, p + dp, q + dq)
    if name == "del":
        op = s.del_
    elif name == "delbar":
        op = s.delbar
    else:
        op = (lambda a: h.del_adjoint(a, s)) if name == "del_adj" else (
            lambda a: h.delbar_adjoint(a, s)
        )
    out = _matrix_for(op, n, src, dst)
    s._op_matrix_cache[key] = out
    return out


def chain_matrix(
    ops: list[str],
    s: StructureEquations,
    p: int,
    q: int,
    h: Optional[HermitianMetric] = None,
) -> Matrix:
    """Matrix of a composite written left-to-right (applied right-to-left),
    as an endo/exo-morphism out of the (p, q) space."""
    n = s.n
    cur_p, cur_q = p, q
    total: Optional[Matrix] = None
    for name in reversed(ops):
        m = _single_matrix(name, s, cur_p, cur_q, h)
        dp, dq = _OP_SHIFT[name]
        cur_p += dp
        cur_q += dq
        total = m if total is None else m @ total
    assert total is not None
    return total


@dataclass(frozen=True)
class OperatorMatrix:
    """An operator matrix tagged with its source/target bidegree bases."""

    name: str
    source: tuple[int, int]
    target: tuple[int, int] | int  # total degree for d
    matrix: Matrix


_BC_LAPLACIAN_TERMS = [
    ["del", "delbar", "delbar_adj", "del_adj"],
    ["delbar_adj", "del_adj", "del", "delbar"],
    ["delbar_adj", "del", "del_adj", "delbar"],
    ["del_adj", "delbar", "delbar_adj", "del"],
    ["delbar_adj", "delbar"],
    ["del_adj", "del"],
]

_AEPPLI_LAPLACIAN_TERMS = [
    ["del", "del_adj"],
    ["delbar", "delbar_adj"],
    ["delbar_adj", "del_adj", "del", "delbar"],
    ["del", "delbar", "delbar_adj", "del_adj"],
    ["del", "delbar_adj", "delbar", "del_adj"],
    ["delbar", "del_adj", "del", "delbar_adj"],
]


def bc_laplacian_matrix(
    s: StructureEquations, h: HermitianMetric, p: int, q: int
) -> Matrix:
    terms = [chain_matrix(t, s, p, q, h) for t in _BC_LAPLACIAN_TERMS]
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


def aeppli_laplacian_matrix(
    s: StructureEquations, h: HermitianMetric, p: int, q: int
) -> Matrix:
    terms = [chain_matrix(t, s, p, q, h) for t in _AEPPLI_LAPLACIAN_TERMS]
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


def operator_matrix(
    name: str,
    s: StructureEquations,
    p: int,
    q: int,
    h: Optional[HermitianMetric] = None,
) -> OperatorMatrix:
    """Exact matrix of a named operator out of the (p, q) space.

    Names: d, del, delbar, del_adj, delbar_adj, deldelbar, lap_bc, lap_a.
    Starred and Laplacian operators need a metric; bigraded operators need
    an integrable structure (d does not).
    """
    n = s.n
    if name == "d":
        src = basis(n, p, q)
        dst = total_basis(n, p + q + 1)
        return OperatorMatrix("d", (p, q), p + q + 1, _matrix_for(s.d, n, src, dst))
    if name == "deldelbar":
        return OperatorMatrix(
            name, (p, q), (p + 1, q + 1), chain_matrix(["del", "delbar"], s, p, q, h)
        )
    if name in _OP_SHIFT:
        dp, dq = _OP_SHIFT[name]
        return OperatorMatrix(
            name, (p, q), (p + dp, q + dq), _single_matrix(name, s, p, q, h)
        )
    if name == "lap_bc":
        if h is None:
            raise PreconditionError("lap_bc needs a metric")
        return OperatorMatrix(name, (p, q), (p, q), bc_laplacian_matrix(s, h, p, q))
    if name == "lap_a":
        if h is None:
            raise PreconditionError("lap_a needs a metric")
        return OperatorMatrix(name, (p, q), (p, q), aeppli_laplacian_matrix(s, h, p, q))
    raise ValueError(f"unknown operator {name!r}")


def d_matrix_total(s: StructureEquations, k: int) -> Matrix:
    """d on the full degree-k space, in the canonical total-degree basis."""
    n = s.n
    return _matrix_for(s.d, n, total_basis(n, k), total_basis(n, k + 1))


# -- quotient cohomologies ----------------------------------------------------


@dataclass
class CohomologyGroup:
    kind: str
    p: int
    q: int
    dim: int
    representatives: list[Form]
    numerator: Subspace
    denominator: Subspace


def _rep_forms(n: int, vectors, mons) -> list[Form]:
    return [vector_to_form(n, v, mons) for v in vectors]


def bc_cohomology(s: StructureEquations, p: int, q: int) -> CohomologyGroup:
    """(ker del /\\ ker delbar) / im(del delbar) on (p, q)-forms."""
    n = s.n
    mons = basis(n, p, q)
    dim_pq = len(mons)
    stacked = vstack(
        [
            _single_matrix("del", s, p, q, None),
            _single_matrix("delbar", s, p, q, None),
        ]
    )
    numerator = Subspace(dim_pq, kernel_basis(stacked))
    if p >= 1 and q >= 1:
        dd = chain_matrix(["del", "delbar"], s, p - 1, q - 1)
        denominator = Subspace(dim_pq, [dd.column(j) for j in range(dd.ncols)])
    else:
        denominator = Subspace(dim_pq)
    ok, witness = numerator.contains_subspace(denominator)
    if not ok:
        raise PreconditionError(
            f"im(del delbar) not closed at ({p},{q}); witness {witness}"
        )
    reps = quotient_representatives(numerator, denominator)
    return CohomologyGroup(
        "bc", p, q, numerator.dim - denominator.dim, _rep_forms(n, reps, mons),
        numerator, denominator,
    )


def aeppli_cohomology(s: StructureEquations, p: int, q: int) -> CohomologyGroup:
    """ker(del delbar) / (im del + im delbar) on (p, q)-forms."""
    n = s.n
    mons = basis(n, p, q)
    dim_pq = len(mons)
    dd = chain_matrix(["del", "delbar"], s, p, q)
    numerator = Subspace(dim_pq, kernel_basis(dd))
    image_vectors = []
    if p >= 1:
        m = _single_matrix("del", s, p - 1, q, None)
        image_vectors.extend(m.column(j) for j in range(m.ncols))
    if q >= 1:
        m = _single_matrix("delbar", s, p, q - 1, None)
        image_vectors.extend(m.column(j) for j in range(m.ncols))
    denominator = Subspace(dim_pq, image_vectors)
    ok, witness = numerator.contains_subspace(denominator)
    if not ok:
        raise PreconditionError(
            f"im del + im delbar not (del delbar)-closed at ({p},{q}); witness {witness}"
        )
    reps = quotient_representatives(numerator, denominator)
    return CohomologyGroup(
        "a", p, q, numerator.dim - denominator.dim, _rep_forms(n, reps, mons),
        numerator, denominator,
    )


def dolbeault_cohomology(s: StructureEquations, p: int, q: int) -> CohomologyGroup:
    """ker delbar / im delbar on (p, q)-forms."""
    n = s.n
    mons = basis(n, p, q)
    numerator = Subspace(
        len(mons), kernel_basis(_single_matrix("delbar", s, p, q, None))
    )
    if q >= 1:
        m = _single_matrix("delbar", s, p, q - 1, None)
        denominator = Subspace(len(mons), [m.column(j) for j in range(m.ncols)])
    else:
        denominator = Subspace(len(mons))
    reps = quotient_representatives(numerator, denominator)
    return CohomologyGroup(
        "dolbeault", p, q, numerator.dim - denominator.dim,
        _rep_forms(n, reps, mons), numerator, denominator,
    )


def de_rham_cohomology(s: StructureEquations, k: int) -> CohomologyGroup:
    """ker d / im d on complex invariant k-forms (works without integrability)."""
    n = s.n
    mons = total_basis(n, k)
    numerator = Subspace(len(mons), kernel_basis(d_matrix_total(s, k)))
    if k >= 1:
        m = d_matrix_total(s, k - 1)
        denominator = Subspace(len(mons), [m.column(j) for j in range(m.ncols)])
    else:
        denominator = Subspace(len(mons))
    reps = quotient_representatives(numerator, denominator)
    return CohomologyGroup(
        "derham", k, -1, numerator.dim - denominator.dim,
        _rep_forms(n, reps, mons), numerator, denominator,
    )


# -- harmonic spaces ------------------------------------------------------------


def _require_harmonic_preconditions(s: StructureEquations, h: HermitianMetric):
    if not s.flags.integrable:
        raise IntegrabilityError("harmonic spaces need an integrable structure")
    if not s.flags.unimodular:
        raise PreconditionError(
            "harmonic spaces are refused on non-unimodular algebras: the "
            "adjoint identities behind the kernel characterizations only "
            "hold at the invariant level when trace(ad) = 0"
        )
    h.require_positive()


def harmonic_space(
    kind: str, s: StructureEquations, h: HermitianMetric, p: int, q: int
) -> Subspace:
    """Harmonic (p, q)-forms for the Bott-Chern ('bc') or Aeppli ('a') theory.

    Primary route: the kernel of the stacked first/second-order conditions
    (del u = 0, delbar u = 0, del_adj delbar_adj u = 0 for Bott-Chern;
    del_adj v = 0, delbar_adj v = 0, del delbar v = 0 for Aeppli).
    Cross-check: the kernel of the full fourth-order Laplacian matrix.
    The two must agree exactly; a mismatch is an engine defect.
    """
    _require_harmonic_preconditions(s, h)
    n = s.n
    dim_pq = len(basis(n, p, q))
    if kind == "bc":
        stack = vstack(
            [
                _single_matrix("del", s, p, q, None),
                _single_matrix("delbar", s, p, q, None),
                chain_matrix(["del_adj", "delbar_adj"], s, p, q, h),
            ]
        )
        lap = bc_laplacian_matrix(s, h, p, q)
    elif kind == "a":
        stack = vstack(
            [
                _single_matrix("del_adj", s, p, q, h),
                _single_matrix("delbar_adj", s, p, q, h),
                chain_matrix(["del", "delbar"], s, p, q),
            ]
        )
        lap = aeppli_laplacian_matrix(s, h, p, q)
    else:
        raise ValueError("kind must be 'bc' or 'a'")
    primary = Subspace(dim_pq, kernel_basis(stack))
    check = Subspace(dim_pq, kernel_basis(lap))
    if primary != check:
        raise RuntimeError(
            f"harmonic characterization mismatch at ({p},{q}) for {kind}; engine defect"
        )
    return primary


def harmonic_forms(
    kind: str, s: StructureEquations, h: HermitianMetric, p: int, q: int
) -> list[Form]:
    mons = basis(s.n, p, q)
    space = harmonic_space(kind, s, h, p, q)
    return [vector_to_form(s.n, v, mons) for v in space.basis_vectors()]


def harmonic_projection(
    kind: str, s: StructureEquations, h: HermitianMetric, a: Form
) -> Form:
    """Orthogonal projection onto the harmonic space of a's bidegree."""
    bd = a.pure_bidegree()
    if bd is None:
        if a.is_zero():
            return a
        raise PreconditionError("harmonic projection expects a pure-bidegree form")
    reps = harmonic_forms(kind, s, h, *bd)
    if not reps:
        return Form.zero(s.n)
    k = len(reps)
    gram = Matrix(
        [[h.pairing(reps[i], reps[j]) for i in range(k)] for j in range(k)], ncols=k
    )
    rhs = tuple(h.pairing(a, reps[j]) for j in range(k))
    from .linalg import solve

    coeffs = solve(gram, rhs)
    if coeffs is None:
        raise RuntimeError("harmonic Gram system unsolvable; engine defect")
    out = Form.zero(s.n)
    for c, rep in zip(coeffs, reps):
        out = out + rep.scale(c)
    return out


# -- Hodge-type decompositions ---------------------------------------------------


@dataclass
class Decomposition:
    """a = harmonic + second_order + first_order_a + first_order_b, with
    potential witnesses.  For the Bott-Chern shape the pieces are
    (del delbar gamma, del_adj alpha, delbar_adj beta); for the Aeppli shape
    (del_adj delbar_adj eta, del mu, delbar lam)."""

    kind: str
    harmonic: Form
    second_order: Form
    first_a: Form
    first_b: Form
    witnesses: dict[str, Form] = field(default_factory=dict)

    def total(self) -> Form:
        return self.harmonic + self.second_order + self.first_a + self.first_b


def _decompose(
    kind: str, s: StructureEquations, h: HermitianMetric, a: Form
) -> Decomposition:
    bd = a.pure_bidegree()
    if bd is None and not a.is_zero():
        raise PreconditionError("decomposition expects a pure-bidegree form")
    if a.is_zero():
        z = Form.zero(s.n)
        return Decomposition(kind, z, z, z, z)
    p, q = bd
    n = s.n
    mons = basis(n, p, q)
    harm = harmonic_projection(kind, s, h, a)
    rest = a - harm
    if kind == "bc":
        blocks = [
            ("gamma", ["del", "delbar"], (p - 1, q - 1), None),
            ("alpha", ["del_adj"], (p + 1, q), h),
            ("beta", ["delbar_adj"], (p, q + 1), h),
        ]
    else:
        blocks = [
            ("eta", ["del_adj", "delbar_adj"], (p + 1, q + 1), h),
            ("mu", ["del"], (p - 1, q), None),
            ("lam", ["delbar"], (p, q - 1), None),
        ]
    mats = []
    srcs = []
    for _, ops, (sp, sq), _h in blocks:
        if 0 <= sp <= n and 0 <= sq <= n:
            mats.append(chain_matrix(ops, s, sp, sq, h))
            srcs.append(basis(n, sp, sq))
        else:
            mats.append(Matrix.zeros(len(mons), 0))
            srcs.append([])
    from .linalg import solve

    system = hstack(mats)
    sol = solve(system, form_to_vector(rest, mons))
    if sol is None:
        raise RuntimeError("decomposition system unsolvable; engine defect")
    offset = 0
    witnesses: dict[str, Form] = {}
    parts: list[Form] = []
    for (name, ops, _, _h), mat, src in zip(blocks, mats, srcs):
        piece_coords = sol[offset : offset + mat.ncols]
        offset += mat.ncols
        witness = vector_to_form(n, piece_coords, src) if src else Form.zero(n)
        witnesses[name] = witness
        parts.append(vector_to_form(n, mat.apply(piece_coords), mons) if src else Form.zero(n))
    out = Decomposition(kind, harm, parts[0], parts[1], parts[2], witnesses)
    if out.total() != a:
        raise RuntimeError("decomposition does not reassemble; engine defect")
    return out


def decompose_bc(s: StructureEquations, h: HermitianMetric, a: Form) -> Decomposition:
    return _decompose("bc", s, h, a)


def decompose_aeppli(s: StructureEquations, h: HermitianMetric, a: Form) -> Decomposition:
    return _decompose("a", s, h, a)


# -- full report -------------------------------------------------------------------


@dataclass
class CohomologyReport:
    algebra: str
    n: int
    flags: dict
    groups: dict  # kind -> {(p,q) or k: (dim, [rep strings])}
    metric_class: Optional[dict] = None
    aeppli_decisions: list = field(default_factory=list)
    level: str = "invariant"

    def to_dict(self) -> dict:
        cohomology = {}
        for kind, table in self.groups.items():
            sub = {}
            for key, (dim, reps) in table.items():
                name = f"{key[0]},{key[1]}" if isinstance(key, tuple) else str(key)
                sub[name] = {"dim": dim, "reps": list(reps)}
            cohomology[kind] = sub
        return {
            "algebra": self.algebra,
            "n": self.n,
            "flags": dict(self.flags),
            "metric_class": dict(self.metric_class) if self.metric_class else None,
            "cohomology": cohomology,
            "aeppli_decisions": [dict(d) for d in self.aeppli_decisions],
            "level": self.level,
        }

    @staticmethod
    def from_dict(data: dict) -> "CohomologyReport":
        groups = {}
        for kind, sub in data["cohomology"].items():
            table = {}
            for name, cell in sub.items():
                if "," in name:
                    p, q = name.split(",")
                    key = (int(p), int(q))
                else:
                    key = int(name)
                table[key] = (cell["dim"], list(cell["reps"]))
            groups[kind] = table
        return CohomologyReport(
            algebra=data["algebra"],
            n=data["n"],
            flags=dict(data["flags"]),
            groups=groups,
            metric_class=dict(data["metric_class"]) if data.get("metric_class") else None,
            aeppli_decisions=[dict(d) for d in data.get("aeppli_decisions", [])],
            level=data.get("level", "invariant"),
        )


ALL_GROUPS = ("bc", "a", "dolbeault", "derham")


def full_report(
    s: StructureEquations,
    h: Optional[HermitianMetric] = None,
    groups=ALL_GROUPS,
) -> CohomologyReport:
    """Dimensions and representatives for the requested cohomologies.

    Bigraded groups need integrability; de Rham never does.  The metric,
    when supplied, only feeds the metric classification and the Aeppli
    obstruction certificates (quotient dimensions are metric-free).
    """
    n = s.n
    tables: dict[str, dict] = {}
    for kind in groups:
        if kind == "derham":
            tables[kind] = {
                k: _cell(de_rham_cohomology(s, k)) for k in range(2 * n + 1)
            }
            continue
        if not s.flags.integrable:
            raise IntegrabilityError(
                f"cohomology {kind!r} needs an integrable structure"
            )
        func = {
            "bc": bc_cohomology,
            "a": aeppli_cohomology,
            "dolbeault": dolbeault_cohomology,
        }[kind]
        tables[kind] = {
            (p, q): _cell(func(s, p, q))
            for p in range(n + 1)
            for q in range(n + 1)
        }
    metric_class = None
    decisions: list[dict] = []
    if h is not None and s.flags.integrable:
        from .analysis import aeppli_class_vanishes, classify_metric

        mc = classify_metric(s, h)
        metric_class = {
            "kaehler": mc.kaehler,
            "balanced": mc.balanced,
            "gauduchon": mc.gauduchon,
            "skt": mc.skt,
        }
        for p in range(1, n):
            try:
                decision = aeppli_class_vanishes(s, h, p)
            except PreconditionError:
                continue  # the class of omega^(n-p) is undefined for this metric
            decisions.append(decision.to_dict())
    flags = {
        "integrable": s.flags.integrable,
        "unimodular": s.flags.unimodular,
        "nilpotent": s.flags.nilpotent,
    }
    return CohomologyReport(
        algebra=s.name, n=n, flags=flags, groups=tables,
        metric_class=metric_class, aeppli_decisions=decisions,
    )


def _cell(group: CohomologyGroup):
    return (group.dim, [render_form(f) for f in group.representatives])
