"""The U-basis of the representation ring and both change-of-basis
directions.

U_r is the product of quantum numbers [r_i + 1] evaluated at chi_i, one
factor per base-p digit r_i of r - 1.  The U_j form a second Z-basis:
each V_r is a multiplicity-free 0/1 sum of U_j, with the index set given
either by the digit-splitting recursion (``curly_u``) or by the cousins
closed form (``v_in_u``).  The V-to-U matrix is lower triangular with
unit diagonal; rendered as a bitmap it shows a Sierpinski-like pattern.
"""

from __future__ import annotations

import dataclasses

from . import digits
from .core_ring import GroupSpec, RingElement, chi, mul, one
from .quantum import eval_at_element

__all__ = [
    "UIndexSet",
    "IntMatrix",
    "u_element",
    "cousins",
    "v_in_u",
    "curly_u",
    "change_of_basis",
    "render_matrix",
]


@dataclasses.dataclass(frozen=True)
class UIndexSet:
    """Sorted, multiplicity-free set of U-basis indices in 1..q."""

    indices: tuple[int, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(int(i) for i in self.indices)))
        if len(ordered) != len(self.indices):
            raise ValueError("index set must be multiplicity-free")
        if ordered and ordered[0] < 1:
            raise ValueError("indices must be positive")
        object.__setattr__(self, "indices", ordered)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, item) -> bool:
        return item in self.indices

    def to_set(self) -> frozenset[int]:
        return frozenset(self.indices)


@dataclasses.dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix; entries stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def identity(n: int) -> IntMatrix:
        return IntMatrix(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    def matmul(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.entries)) if other.entries else ()
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )


def u_element(group: GroupSpec, r: int) -> RingElement:
    """U_r expanded into the V-basis.

    Factors are multiplied from the highest digit level downwards.  The
    top index of the result is exactly r with coefficient 1, and its
    dimension is the product of (digit + 1) over the digits of r - 1.
    """
    if not 1 <= r <= group.q:
        raise ValueError(f"index {r} outside 1..{group.q}")
    digs = digits.to_digits(r - 1, group.p)
    out = one(group)
    for level in range(len(digs) - 1, -1, -1):
        if digs[level] == 0:
            continue
        out = mul(out, eval_at_element(digs[level] + 1, chi(group, level)))
    return out


def cousins(n: int, base: int) -> frozenset[int]:
    """All sign choices on the non-leading digits of the base-b expansion.

    >>> sorted(cousins(63, 5))
    [37, 43, 57, 63]
    """
    if n < 0:
        raise ValueError("cousins are defined for n >= 0")
    digs = digits.to_digits(n, base)
    if not digs:
        return frozenset((0,))
    values = {digs[-1] * base ** (len(digs) - 1)}
    for i in range(len(digs) - 1):
        term = digs[i] * base**i
        if term:
            values = {v + term for v in values} | {v - term for v in values}
    return frozenset(values)


def v_in_u(group: GroupSpec, r: int) -> UIndexSet:
    """Indices j with V_r = sum of U_j: all j such that q - r is a cousin
    of q - j in base p."""
    if not 1 <= r <= group.q:
        raise ValueError(f"index {r} outside 1..{group.q}")
    target = group.q - r
    hits = tuple(
        j for j in range(1, group.q + 1) if target in cousins(group.q - j, group.p)
    )
    return UIndexSet(hits)


def curly_u(group: GroupSpec, r: int, beta: int) -> UIndexSet:
    """Index set of the splitting recursion run down from level beta;
    beta = alpha reproduces v_in_u."""
    if not 1 <= r <= group.q:
        raise ValueError(f"index {r} outside 1..{group.q}")
    if not 0 <= beta <= group.alpha:
        raise ValueError(f"level {beta} outside 0..{group.alpha}")
    return UIndexSet(tuple(digits.split_indices(r, group.p, beta)))


def change_of_basis(group: GroupSpec, direction: str) -> IntMatrix:
    """Square change-of-basis matrix over indices 1..q.

    ``v_to_u``: entry (i, j) is 1 when j lies in v_in_u(i), else 0.
    ``u_to_v``: row r holds the V-basis coefficients of U_r; this is the
    integer inverse of the other direction.
    """
    q = group.q
    key = direction.lower().replace("-", "_")
    if key == "v_to_u":
        rows = tuple(
            tuple(1 if j in v_in_u(group, i).to_set() else 0 for j in range(1, q + 1))
            for i in range(1, q + 1)
        )
    elif key == "u_to_v":
        rows = []
        for r in range(1, q + 1):
            coeffs = u_element(group, r).coeffs
            rows.append(tuple(coeffs.get(t, 0) for t in range(1, q + 1)))
        rows = tuple(rows)
    else:
        raise ValueError(f"direction must be v_to_u or u_to_v, got {direction!r}")
    return IntMatrix(rows)


def render_matrix(matrix: IntMatrix, format: str) -> bytes:
    """Render as a text grid (filled/empty cells for 1/0), CSV of
    integers, or a P1 portable bitmap; the cell formats require all
    entries to be 0 or 1."""
    if format == "csv":
        lines = [",".join(str(v) for v in row) for row in matrix.entries]
        return ("\n".join(lines) + "\n").encode()
    if format not in ("text", "pbm"):
        raise ValueError(f"format must be text, csv or pbm, got {format!r}")
    if any(v not in (0, 1) for row in matrix.entries for v in row):
        raise ValueError(f"{format} rendering requires 0/1 entries")
    if format == "pbm":
        header = f"P1\n{matrix.cols} {matrix.rows}\n"
        body = "\n".join(" ".join(str(v) for v in row) for row in matrix.entries)
        return (header + body + "\n").encode()
    grid = "\n".join(
        "".join("█" if v else "·" for v in row) for row in matrix.entries
    )
    return (grid + "\n").encode()
