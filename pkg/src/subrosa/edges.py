"""Edge substitution sequences.

``sigma(n)`` lists, in order, the angle labels of the unit rhombuses bisected
by one edge of an enlarged rhombus.  A label 0 (even n only) stands for a unit
edge lying along the super-edge.  ``alpha(n)`` is the part of ``sigma(n)`` that
lies outside the two corner roses.
"""

from __future__ import annotations

from functools import lru_cache

from .geometry import check_n, diagonal_measure


def _run_length(n: int) -> int:
    return (n - 1) // 2 if n % 2 else n // 2


@lru_cache(maxsize=None)
def _sigma(n: int) -> tuple[int, ...]:
    p = n % 2
    first = list(range(p, n - 1, 2))
    # reversed corner runs of the smaller members of the same parity class
    for q in range(p + 2, n - 1, 2):
        first.extend(reversed(_sigma(q)[: _run_length(q)]))
    return tuple(first + first[::-1])


def sigma(n: int) -> list[int]:
    check_n(n)
    return list(_sigma(n))


def corner_run(n: int) -> list[int]:
    """The labels of ``sigma(n)`` that fall inside the rose at one corner."""
    check_n(n)
    return list(_sigma(n)[: _run_length(n)])


def alpha(n: int) -> list[int]:
    check_n(n)
    r = _run_length(n)
    s = _sigma(n)
    return list(s[r : len(s) - r])


def f(m: int, n: int) -> int:
    """Number of occurrences of label m in each half of ``alpha(n)``."""
    check_n(n)
    if not 0 <= m <= n - 2 or (n - m) % 2:
        raise ValueError(f"label {m} is not valid for n={n}")
    return (n - m) // 2 - 1


def split_in_out(seq: list[int]) -> tuple[list[int], list[int]]:
    if len(seq) % 2:
        raise ValueError("edge sequence must have even length")
    h = len(seq) // 2
    return list(seq[:h]), list(seq[h:])


def label_length(n: int, m: int) -> float:
    return 1.0 if m == 0 else diagonal_measure(n, m)


def edge_length_from_sigma(n: int) -> float:
    return sum(label_length(n, m) for m in sigma(n))


def format_sigma(n: int, use_alpha: bool = False) -> str:
    """Render as in the composition tables: labels joined by '-', '|' at the midpoint."""
    left, right = split_in_out(alpha(n) if use_alpha else sigma(n))
    return "-".join(map(str, left)) + "|" + "-".join(map(str, right))
