"""Degree-truncated symmetric series in one alphabet.

A series is a sparse map partition -> coefficient, tagged with a basis:
power sum ('p'), complete homogeneous ('h'), or Schur ('s').  The constant
term lives at the empty partition.  Every basis conversion routes through
the power sums, where the Hall pairing is diagonal and plethysm acts by
stretching part sizes.  Truncation is explicit on each value (None meaning
an exact, finitely supported element) and propagates as the minimum across
binary operations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import partitions
from .exactnum import Cyclotomic, zeta
from .partitions import Partition

POWER_SUM = "p"
HOMOGENEOUS = "h"
SCHUR = "s"
_BASES = (POWER_SUM, HOMOGENEOUS, SCHUR)

__all__ = [
    "DegreeOutOfRangeError",
    "SymSeries",
    "TruncationTooShortError",
    "constant",
    "convert",
    "h_basis",
    "hall_inner_product",
    "omega",
    "omega_at_root",
    "p_basis",
    "plethysm",
    "s_basis",
    "schur_coefficient",
    "series_from_json",
    "series_to_json",
    "stretch",
]


class TruncationTooShortError(ValueError):
    """The plethysm argument is not known to the degree requested."""


class DegreeOutOfRangeError(ValueError):
    """A coefficient beyond the series truncation was requested."""


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def _min_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _canonical_order(lam: Partition):
    # Sort by total degree, then reverse-lexicographically within a degree.
    return (sum(lam), tuple(-part for part in lam))


class SymSeries:
    """Sparse symmetric series; ``truncation`` None marks an exact element.

    Equality compares expansions (converting bases when they differ); the
    truncation bound is metadata and takes no part in it.
    """

    __slots__ = ("basis", "truncation", "terms")

    def __init__(self, basis: str, terms: dict, truncation: int | None = None):
        if basis not in _BASES:
            raise ValueError(f"unknown basis tag {basis!r}")
        if truncation is not None and truncation < 0:
            raise ValueError("truncation must be non-negative")
        clean = {}
        for lam, coeff in terms.items():
            if truncation is not None and sum(lam) > truncation:
                continue
            if coeff:
                clean[lam] = coeff
        self.basis = basis
        self.truncation = truncation
        self.terms = clean

    def coefficient(self, lam: Partition):
        """Coefficient of the basis element indexed by lam (no conversion)."""
        return self.terms.get(lam, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def restricted(self, max_degree: int) -> "SymSeries":
        return SymSeries(self.basis, self.terms, _min_trunc(self.truncation, max_degree))

    def __add__(self, other: "SymSeries") -> "SymSeries":
        if not isinstance(other, SymSeries):
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        out = dict(self.terms)
        for lam, coeff in other.terms.items():
            out[lam] = out.get(lam, 0) + coeff
        return SymSeries(self.basis, out, _min_trunc(self.truncation, other.truncation))

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self + (-other)

    def __neg__(self) -> "SymSeries":
        return SymSeries(
            self.basis, {lam: -c for lam, c in self.terms.items()}, self.truncation
        )

    def __mul__(self, other):
        if isinstance(other, SymSeries):
            return _series_product(self, other)
        return SymSeries(
            self.basis,
            {lam: c * other for lam, c in self.terms.items()},
            self.truncation,
        )

    def __rmul__(self, other):
        if isinstance(other, SymSeries):
            return NotImplemented
        return SymSeries(
            self.basis,
            {lam: other * c for lam, c in self.terms.items()},
            self.truncation,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymSeries):
            return NotImplemented
        a, b = self, other
        if a.basis != b.basis:
            a, b = convert(a, POWER_SUM), convert(b, POWER_SUM)
        if a.terms.keys() != b.terms.keys():
            return False
        return all(a.terms[lam] == b.terms[lam] for lam in a.terms)

    def __repr__(self) -> str:
        body = " + ".join(
            f"({coeff})*{self.basis}{list(lam)}"
            for lam, coeff in sorted(self.terms.items(), key=lambda kv: _canonical_order(kv[0]))
        )
        return f"SymSeries[{self.basis}; D={self.truncation}]({body or '0'})"


def p_basis(lam: Partition, coeff=Fraction(1), truncation: int | None = None) -> SymSeries:
    return SymSeries(POWER_SUM, {tuple(lam): coeff}, truncation)


def h_basis(lam: Partition, coeff=Fraction(1), truncation: int | None = None) -> SymSeries:
    return SymSeries(HOMOGENEOUS, {tuple(lam): coeff}, truncation)


def s_basis(lam: Partition, coeff=Fraction(1), truncation: int | None = None) -> SymSeries:
    return SymSeries(SCHUR, {tuple(lam): coeff}, truncation)


def constant(value, basis: str = POWER_SUM, truncation: int | None = None) -> SymSeries:
    return SymSeries(basis, {(): value}, truncation)


@lru_cache(maxsize=None)
def _h_part_in_p(n: int) -> tuple[tuple[Partition, Fraction], ...]:
    # h_n = sum over lam of p_lam / z_lam
    return tuple(
        (lam, Fraction(1, partitions.centralizer_order(lam)))
        for lam in partitions.partitions_of(n)
    )


@lru_cache(maxsize=None)
def _p_part_in_h(n: int) -> tuple[tuple[Partition, Fraction], ...]:
    # Newton: p_n = n*h_n - sum_{k=1}^{n-1} h_k * p_{n-k}
    if n == 0:
        return (((), Fraction(1)),)
    acc: dict[Partition, Fraction] = {(n,): Fraction(n)}
    for k in range(1, n):
        for mu, coeff in _p_part_in_h(n - k):
            key = _merge(mu, (k,))
            acc[key] = acc.get(key, Fraction(0)) - coeff
    return tuple(sorted((kv for kv in acc.items() if kv[1]), key=lambda kv: kv[0]))


def _s_in_p_terms(lam: Partition) -> list[tuple[Partition, Fraction]]:
    # s_lam = sum over mu of chi^lam(mu)/z_mu * p_mu
    out = []
    for mu in partitions.partitions_of(sum(lam)):
        chi = partitions.symmetric_group_character(lam, mu)
        if chi:
            out.append((mu, Fraction(chi, partitions.centralizer_order(mu))))
    return out


def _p_in_s_terms(mu: Partition) -> list[tuple[Partition, int]]:
    # p_mu = sum over lam of chi^lam(mu) * s_lam
    out = []
    for lam in partitions.partitions_of(sum(mu)):
        chi = partitions.symmetric_group_character(lam, mu)
        if chi:
            out.append((lam, chi))
    return out


def _product_of_expansions(factors, trunc: int | None) -> dict[Partition, Fraction]:
    prod: dict[Partition, Fraction] = {(): Fraction(1)}
    for expansion in factors:
        nxt: dict[Partition, Fraction] = {}
        for base, cb in prod.items():
            db = sum(base)
            for lam, cl in expansion:
                if trunc is not None and db + sum(lam) > trunc:
                    continue
                key = _merge(base, lam)
                nxt[key] = nxt.get(key, Fraction(0)) + cb * cl
        prod = nxt
        if not prod:
            break
    return prod


def _to_power(f: SymSeries) -> SymSeries:
    if f.basis == POWER_SUM:
        return f
    out: dict[Partition, object] = {}
    for lam, coeff in f.terms.items():
        if f.basis == HOMOGENEOUS:
            expanded = _product_of_expansions(
                (_h_part_in_p(part) for part in lam), f.truncation
            )
        else:
            expanded = dict(_s_in_p_terms(lam))
        for mu, c in expanded.items():
            out[mu] = out.get(mu, 0) + coeff * c
    return SymSeries(POWER_SUM, out, f.truncation)


def _from_power(f: SymSeries, target: str) -> SymSeries:
    out: dict[Partition, object] = {}
    for mu, coeff in f.terms.items():
        if target == HOMOGENEOUS:
            expanded = _product_of_expansions(
                (_p_part_in_h(part) for part in mu), f.truncation
            ).items()
        else:
            expanded = _p_in_s_terms(mu)
        for lam, c in expanded:
            out[lam] = out.get(lam, 0) + coeff * c
    return SymSeries(target, out, f.truncation)


def convert(f: SymSeries, target: str) -> SymSeries:
    """Re-expand f in the target basis, keeping its truncation."""
    if target not in _BASES:
        raise ValueError(f"unknown basis tag {target!r}")
    if f.basis == target:
        return f
    g = _to_power(f)
    if target == POWER_SUM:
        return g
    return _from_power(g, target)


def _series_product(f: SymSeries, g: SymSeries) -> SymSeries:
    # p- and h-basis elements multiply by merging indices; route s through p.
    if f.basis == g.basis and f.basis in (POWER_SUM, HOMOGENEOUS):
        basis = f.basis
    else:
        basis = POWER_SUM
        f, g = convert(f, POWER_SUM), convert(g, POWER_SUM)
    trunc = _min_trunc(f.truncation, g.truncation)
    out: dict[Partition, object] = {}
    for a, ca in f.terms.items():
        da = sum(a)
        for b, cb in g.terms.items():
            if trunc is not None and da + sum(b) > trunc:
                continue
            key = _merge(a, b)
            out[key] = out.get(key, 0) + ca * cb
    return SymSeries(basis, out, trunc)


def hall_inner_product(f: SymSeries, g: SymSeries):
    """Hall pairing: diagonal on power sums with <p_lam, p_lam> = z_lam."""
    fp, gp = _to_power(f), _to_power(g)
    if len(gp.terms) < len(fp.terms):
        fp, gp = gp, fp
    total = Fraction(0)
    for lam, cf in fp.terms.items():
        cg = gp.terms.get(lam)
        if cg is not None:
            total = total + partitions.centralizer_order(lam) * cf * cg
    return total


def stretch(f: SymSeries, n: int) -> SymSeries:
    """Substitute p_r -> p_{n*r}, keeping all coefficients fixed.

    This is plethysm by p_n on the right in the sense used here: exponents
    of the underlying variables are scaled, coefficients (rational or
    cyclotomic) are untouched, and constants pass through.
    """
    if n < 1:
        raise ValueError("stretch factor must be >= 1")
    fp = _to_power(f)
    trunc = None if fp.truncation is None else n * fp.truncation + (n - 1)
    return SymSeries(
        POWER_SUM,
        {tuple(n * part for part in lam): c for lam, c in fp.terms.items()},
        trunc,
    )


def plethysm(f: SymSeries, g: SymSeries, max_degree: int | None = None) -> SymSeries:
    """The substitution f[g], computed on power sums up to max_degree.

    Expands f in power sums and maps each p_lam to the product of the
    stretched copies of g.  When max_degree is omitted, the truncation of g
    is used; an exact g gives an exact result for polynomial f.
    """
    gp = _to_power(g)
    if max_degree is None:
        degree = gp.truncation
    else:
        degree = max_degree
        if gp.truncation is not None and gp.truncation < max_degree:
            raise TruncationTooShortError(
                f"argument known to degree {gp.truncation}, need {max_degree}"
            )
    fp = _to_power(f)
    stretched: dict[int, SymSeries] = {}
    total: dict[Partition, object] = {}
    for lam, coeff in fp.terms.items():
        prod: dict[Partition, object] = {(): Fraction(1)}
        for part in lam:
            if part not in stretched:
                stretched[part] = stretch(gp, part)
            factor = stretched[part].terms
            nxt: dict[Partition, object] = {}
            for base, cb in prod.items():
                db = sum(base)
                for mu, cm in factor.items():
                    if degree is not None and db + sum(mu) > degree:
                        continue
                    key = _merge(base, mu)
                    nxt[key] = nxt.get(key, 0) + cb * cm
            prod = nxt
            if not prod:
                break
        for mu, c in prod.items():
            total[mu] = total.get(mu, 0) + coeff * c
    return SymSeries(POWER_SUM, total, degree)


def omega(max_degree: int) -> SymSeries:
    """1 + h_1 + ... + h_D: the plethystic exponential, truncated."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    terms: dict[Partition, Fraction] = {(): Fraction(1)}
    for k in range(1, max_degree + 1):
        terms[(k,)] = Fraction(1)
    return SymSeries(HOMOGENEOUS, terms, max_degree)


def omega_at_root(exponent: int, order: int, max_degree: int) -> SymSeries:
    """The geometric kernel sum of zeta^(j*k) h_k for the root zeta_order^exponent."""
    if not 0 <= exponent < order:
        raise ValueError(f"exponent must lie in 0..{order - 1}")
    terms: dict[Partition, Cyclotomic] = {(): zeta(order, 0)}
    for k in range(1, max_degree + 1):
        terms[(k,)] = zeta(order, exponent * k)
    return SymSeries(HOMOGENEOUS, terms, max_degree)


def schur_coefficient(f: SymSeries, lam: Partition):
    """Coefficient of the Schur element at lam, read off by Hall pairing."""
    if f.truncation is not None and sum(lam) > f.truncation:
        raise DegreeOutOfRangeError(
            f"degree {sum(lam)} exceeds series truncation {f.truncation}"
        )
    return hall_inner_product(f, s_basis(lam))


def series_to_json(f: SymSeries) -> dict:
    """JSON form of a rational series: basis, truncation, and sorted terms."""
    from .exactnum import to_rational

    entries = []
    for lam in sorted(f.terms, key=_canonical_order):
        coeff = to_rational(f.terms[lam])
        entries.append({"partition": list(lam), "coeff": str(coeff)})
    return {"basis": f.basis, "truncation": f.truncation, "terms": entries}


def series_from_json(obj: dict) -> SymSeries:
    terms = {
        tuple(entry["partition"]): Fraction(entry["coeff"]) for entry in obj["terms"]
    }
    return SymSeries(obj["basis"], terms, obj["truncation"])
