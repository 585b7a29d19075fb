"""Truncated polynomial algebra over the boundary-data symbols.

The variable ladder is (uf, uf', uf'', uf''', uf'''') -- the outer-circle
boundary value and its first four tangential derivatives.  A polynomial is
a sparse map from exponent 5-tuples to real coefficients, kept in the
canonical form of the truncation spec: any monomial whose exponent exceeds
a per-variable cap is discarded the moment it appears, which reproduces
the series-truncation semantics of multiplying then cutting.  With the
default caps (3, 1, 1, 0, 0) at most 16 monomials can ever be stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "TruncationSpec",
    "DEFAULT_TRUNCATION",
    "BoundaryPolynomial",
    "poly_zero",
    "poly_const",
    "poly_symbol",
    "poly_add",
    "poly_scale",
    "poly_mul",
    "poly_diff",
    "poly_eval",
    "to_json_dict",
    "from_json_dict",
    "format_terms",
]

NVARS = 5
_NAMES = ("uf", "uf'", "uf''", "uf'''", "uf''''")

# canonical form keeps everything except exact underflow junk; printed-digit
# comparisons must not be polluted by epsilon pruning
_DROP_BELOW = 1e-300


@dataclass(frozen=True)
class TruncationSpec:
    """Per-variable maximum exponents."""

    caps: tuple[int, int, int, int, int] = (3, 1, 1, 0, 0)

    def __post_init__(self):
        if len(self.caps) != NVARS or any(c < 0 for c in self.caps):
            raise ValueError(f"caps must be {NVARS} non-negative integers, got {self.caps}")

    def admits(self, exponents: tuple[int, ...]) -> bool:
        return all(e <= c for e, c in zip(exponents, self.caps))


DEFAULT_TRUNCATION = TruncationSpec()


def _canonical(terms: dict, trunc: TruncationSpec) -> dict:
    return {
        e: c
        for e, c in terms.items()
        if abs(c) >= _DROP_BELOW and trunc.admits(e)
    }


@dataclass(frozen=True)
class BoundaryPolynomial:
    """Truncated real polynomial in the boundary symbols.

    Equality is structural on the canonical term map; term order is
    irrelevant.  Instances are immutable; arithmetic goes through the
    module-level functions (also available as operators).
    """

    terms: dict = field(default_factory=dict)
    trunc: TruncationSpec = DEFAULT_TRUNCATION

    def __post_init__(self):
        object.__setattr__(self, "terms", _canonical(self.terms, self.trunc))

    def __eq__(self, other):
        return (
            isinstance(other, BoundaryPolynomial)
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.trunc))

    def __add__(self, other):
        return poly_add(self, other)

    def __mul__(self, other):
        if isinstance(other, BoundaryPolynomial):
            return poly_mul(self, other)
        return poly_scale(self, float(other))

    __rmul__ = __mul__

    def __sub__(self, other):
        return poly_add(self, poly_scale(other, -1.0))

    def coefficient(self, exponents: tuple[int, ...]) -> float:
        return self.terms.get(tuple(exponents), 0.0)

    def __repr__(self):
        return f"BoundaryPolynomial({format_terms(self)!r})"


def poly_zero(trunc: TruncationSpec = DEFAULT_TRUNCATION) -> BoundaryPolynomial:
    return BoundaryPolynomial({}, trunc)


def poly_const(value: float, trunc: TruncationSpec = DEFAULT_TRUNCATION) -> BoundaryPolynomial:
    return BoundaryPolynomial({(0, 0, 0, 0, 0): float(value)}, trunc)


def poly_symbol(index: int, trunc: TruncationSpec = DEFAULT_TRUNCATION) -> BoundaryPolynomial:
    """The bare symbol of ladder position ``index`` (0 = uf, 1 = uf', ...)."""
    e = tuple(1 if i == index else 0 for i in range(NVARS))
    return BoundaryPolynomial({e: 1.0}, trunc)


def _require_same_trunc(p: BoundaryPolynomial, q: BoundaryPolynomial):
    if p.trunc != q.trunc:
        raise ValueError(f"truncation specs differ: {p.trunc} vs {q.trunc}")


def poly_add(p: BoundaryPolynomial, q: BoundaryPolynomial) -> BoundaryPolynomial:
    _require_same_trunc(p, q)
    terms = dict(p.terms)
    for e, c in q.terms.items():
        s = terms.get(e, 0.0) + c
        if s == 0.0:
            terms.pop(e, None)
        else:
            terms[e] = s
    return BoundaryPolynomial(terms, p.trunc)


def poly_scale(p: BoundaryPolynomial, s: float) -> BoundaryPolynomial:
    if s == 0.0:
        return poly_zero(p.trunc)
    return BoundaryPolynomial({e: c * s for e, c in p.terms.items()}, p.trunc)


def poly_mul(p: BoundaryPolynomial, q: BoundaryPolynomial) -> BoundaryPolynomial:
    """Distributive product; monomials exceeding any cap are discarded."""
    _require_same_trunc(p, q)
    caps = p.trunc.caps
    terms: dict = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
            if e[0] <= caps[0] and e[1] <= caps[1] and e[2] <= caps[2] \
                    and e[3] <= caps[3] and e[4] <= caps[4]:
                terms[e] = terms.get(e, 0.0) + c1 * c2
    return BoundaryPolynomial({e: c for e, c in terms.items() if c != 0.0}, p.trunc)


def poly_diff(p: BoundaryPolynomial) -> BoundaryPolynomial:
    """d/dx via the symbol ladder uf -> uf' -> ... -> uf''''.

    Product rule per monomial; the ladder top differentiates to a symbol
    outside the tracked set and is dropped, as are monomials whose bumped
    exponent exceeds its cap.
    """
    terms: dict = {}
    for e, c in p.terms.items():
        for i in range(NVARS - 1):
            if e[i] > 0:
                ne = list(e)
                ne[i] -= 1
                ne[i + 1] += 1
                ne = tuple(ne)
                if p.trunc.admits(ne):
                    terms[ne] = terms.get(ne, 0.0) + c * e[i]
    return BoundaryPolynomial({e: c for e, c in terms.items() if c != 0.0}, p.trunc)


def poly_eval(p: BoundaryPolynomial, u_f: float, u_f1: float, u_f2: float) -> float:
    """Numeric value at (uf, uf', uf''); requires caps 0 on uf''' and uf''''."""
    if p.trunc.caps[3] != 0 or p.trunc.caps[4] != 0:
        raise ValueError("poly_eval supports only specs with uf''' and uf'''' capped at 0")
    total = 0.0
    for e, c in p.terms.items():
        total += c * u_f ** e[0] * u_f1 ** e[1] * u_f2 ** e[2]
    return total


def to_json_dict(p: BoundaryPolynomial) -> dict:
    """JSON form: {"terms": [{"exp": [...], "coeff": ...}, ...]}, exp-sorted."""
    return {
        "terms": [
            {"exp": list(e), "coeff": c} for e, c in sorted(p.terms.items())
        ]
    }


def from_json_dict(data: dict, trunc: TruncationSpec = DEFAULT_TRUNCATION) -> BoundaryPolynomial:
    terms = {tuple(t["exp"]): float(t["coeff"]) for t in data["terms"]}
    return BoundaryPolynomial(terms, trunc)


def _monomial_text(e: tuple[int, ...]) -> str:
    parts = []
    for name, k in zip(_NAMES, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_terms(p: BoundaryPolynomial, fmt: str = "%.6g") -> str:
    """Human-readable rendering, constant first then by exponent order."""
    if not p.terms:
        return "0"
    pieces = []
    for e, c in sorted(p.terms.items()):
        mono = _monomial_text(e)
        num = fmt % c
        text = num if not mono else f"{num} {mono}"
        if pieces and not text.startswith("-"):
            pieces.append("+ " + text)
        elif pieces:
            pieces.append("- " + text[1:])
        else:
            pieces.append(text)
    return " ".join(pieces)
