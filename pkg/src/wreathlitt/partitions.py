"""Integer partitions, their statistics, and symmetric group characters.

Characters are computed by the Murnaghan-Nakayama recursion, phrased on
beta-sets (first-column hook lengths): removing a border strip of size r
means lowering one beta number by r, with sign given by the number of beta
numbers jumped over.  Full character tables are built per degree on first
use; the table store doubles as the cache payload the CLI can persist.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "SizeMismatchError",
    "centralizer_order",
    "character_table",
    "conjugate_partition",
    "export_character_table",
    "format_partition",
    "import_character_table",
    "multiplicities",
    "parse_partition",
    "partitions_of",
    "reset_character_cache",
    "specht_dimension",
    "symmetric_group_character",
]


class SizeMismatchError(ValueError):
    """Character arguments index different symmetric groups."""


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    cap = n if max_part is None else min(max_part, n)
    return list(_partitions(n, cap))


def is_partition(seq) -> bool:
    return all(
        isinstance(x, int) and x >= 1 and (i == 0 or seq[i - 1] >= x)
        for i, x in enumerate(seq)
    )


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part size -> number of occurrences."""
    out: dict[int, int] = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out


def centralizer_order(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    out = 1
    for part, mult in multiplicities(lam).items():
        out *= factorial(mult) * part**mult
    return out


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def specht_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    conj = conjugate_partition(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    dim, rem = divmod(factorial(sum(lam)), hooks)
    assert rem == 0
    return dim


# Complete character tables per degree; degree 0 seeds the recursion.
_TABLES: dict[int, dict[tuple[Partition, Partition], int]] = {0: {((), ()): 1}}


def _border_strip_removals(lam: Partition, size: int):
    """Yield (smaller partition, sign) for each removable border strip."""
    k = len(lam)
    beta = [lam[i] + k - 1 - i for i in range(k)]
    beta_set = set(beta)
    for b in beta:
        lowered = b - size
        if lowered < 0 or lowered in beta_set:
            continue
        height = sum(1 for c in beta if lowered < c < b)
        new_beta = sorted((beta_set - {b}) | {lowered}, reverse=True)
        shrunk = tuple(v - (len(new_beta) - 1 - i) for i, v in enumerate(new_beta))
        yield tuple(x for x in shrunk if x > 0), (-1 if height % 2 else 1)


def _build_table(n: int) -> dict[tuple[Partition, Partition], int]:
    table: dict[tuple[Partition, Partition], int] = {}
    shapes = _partitions(n, n)
    for mu in shapes:
        strip, rest = mu[0], mu[1:]
        lower = _TABLES[n - strip]
        for lam in shapes:
            value = 0
            for smaller, sign in _border_strip_removals(lam, strip):
                value += sign * lower[(smaller, rest)]
            table[(lam, mu)] = value
    return table


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """The full character table of the symmetric group of degree n.

    Keyed by (shape, cycle type); building degree n fills in all lower
    degrees as well.
    """
    for k in range(1, n + 1):
        if k not in _TABLES:
            _TABLES[k] = _build_table(k)
    return _TABLES[n]


def symmetric_group_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character of shape lam at cycle type mu."""
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")
    return character_table(sum(lam))[(lam, mu)]


def character_cache_sizes() -> list[int]:
    return sorted(_TABLES)


def reset_character_cache() -> None:
    """Drop all computed tables (degree 0 is reseeded)."""
    _TABLES.clear()
    _TABLES[0] = {((), ()): 1}


def export_character_table(n: int) -> dict[str, int]:
    """Serialize the degree-n table as {"lam|mu": value} in canonical order."""
    table = character_table(n)
    shapes = _partitions(n, n)
    return {
        f"{format_partition(lam)}|{format_partition(mu)}": table[(lam, mu)]
        for lam in shapes
        for mu in shapes
    }


def import_character_table(n: int, payload: dict[str, int]) -> bool:
    """Install a persisted degree-n table; rejected unless complete and well-formed."""
    shapes = _partitions(n, n)
    table: dict[tuple[Partition, Partition], int] = {}
    try:
        for key, value in payload.items():
            lam_text, mu_text = key.split("|")
            lam, mu = parse_partition(lam_text), parse_partition(mu_text)
            if sum(lam) != n or sum(mu) != n or not isinstance(value, int):
                return False
            table[(lam, mu)] = value
    except (ValueError, AttributeError):
        return False
    if len(table) != len(shapes) ** 2:
        return False
    _TABLES[n] = table
    return True


def parse_partition(text: str) -> Partition:
    """Parse "3,1,1"; both "" and "[]" denote the empty partition."""
    text = text.strip()
    if text in ("", "[]"):
        return ()
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    if not is_partition(parts):
        raise ValueError(f"parts must be weakly decreasing positive integers: {text!r}")
    return parts


def format_partition(lam: Partition) -> str:
    return "[]" if not lam else ",".join(str(part) for part in lam)
