"""Elements of the representation ring of a cyclic p-group in the V-basis,
with the full tensor-product decomposition engine.

Conventions
-----------
For the group of order q = p^alpha the indecomposables are V_1 .. V_q,
where V_1 is the unit of the ring.  An index of zero or below denotes the
zero module and is silently dropped when an element is assembled; the
column rules below produce such terms on purpose.  Indices above q never
arise from valid inputs and are rejected.

The engine decomposes V_r (x) V_s (with r <= s after swapping) by:

* ``r == 1``: the unit acts trivially.
* ``s`` a power of p: V_r (x) V_s = r V_s.  The operator g (x) g - 1 has
  kernel of dimension min(r, s) = r, so there are exactly r blocks, and no
  block can exceed the p-power envelope s of the larger factor; r blocks
  bounded by s summing to r*s must all equal s.
* ``r, s <= p``: iterate the chi_0 column rule through the recurrence
  [m+1] = [2][m] - [m-1] of the quantum numbers, starting from
  [1] V_s = V_s.
* otherwise: recurse through the level-beta digit reduction, beta minimal
  with s <= p^(beta+1), whose base case is the product of the two
  level-beta remainders.

The boundary term of the digit-reduction rule admits several candidate
readings; they were discriminated empirically against the brute-force
oracle (``greenring.oracle``), and the reading implemented here survives
exhaustive sweeps.  See docs/discrepancies.md for the record.

All operations are pure functions on immutable values.  The tensor memo
table is a read-mostly dict; CPython dict operations are atomic under the
GIL and recomputing an entry is harmless, so no locking is used.
"""

from __future__ import annotations

import dataclasses
import json
import math
from typing import Mapping

__all__ = [
    "GroupSpec",
    "RingElement",
    "ReductionParameters",
    "zero",
    "one",
    "basis_element",
    "add",
    "dim",
    "chi",
    "mul_chi_V",
    "tensor",
    "mul",
    "chi_power",
    "induce",
    "reduction_parameters",
]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@dataclasses.dataclass(frozen=True)
class GroupSpec:
    """Ambient cyclic p-group data: order q = p^alpha."""

    p: int
    alpha: int
    q: int = dataclasses.field(init=False)

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.alpha < 1:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        object.__setattr__(self, "q", self.p**self.alpha)


class RingElement:
    """A virtual module: finite integer combination of V_1 .. V_q.

    ``coeffs`` maps index -> nonzero integer coefficient.  Nonpositive
    indices passed to the constructor are the zero module and vanish;
    zero coefficients are pruned.  Treat instances as immutable.
    """

    __slots__ = ("group", "coeffs")

    def __init__(self, group: GroupSpec, coeffs: Mapping[int, int]):
        clean: dict[int, int] = {}
        for idx, c in coeffs.items():
            idx, c = int(idx), int(c)
            if c == 0 or idx <= 0:
                continue
            if idx > group.q:
                raise ValueError(f"index {idx} exceeds q = {group.q}")
            clean[idx] = c
        self.group = group
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def dim(self) -> int:
        """Image under the dimension homomorphism to Z."""
        return sum(idx * c for idx, c in self.coeffs.items())

    def top_index(self) -> int:
        """Largest index with nonzero coefficient (0 for the zero element)."""
        return max(self.coeffs, default=0)

    def _binop(self, other: RingElement, sign: int) -> RingElement:
        if self.group != other.group:
            raise ValueError("elements live over different groups")
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, 0) + sign * c
        return RingElement(self.group, out)

    def __add__(self, other: RingElement) -> RingElement:
        return self._binop(other, 1)

    def __sub__(self, other: RingElement) -> RingElement:
        return self._binop(other, -1)

    def __neg__(self) -> RingElement:
        return RingElement(self.group, {i: -c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return mul(self, other)
        if isinstance(other, int):
            return RingElement(
                self.group, {i: c * other for i, c in self.coeffs.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.group == other.group
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.group, tuple(sorted(self.coeffs.items()))))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs, reverse=True):
            c = self.coeffs[idx]
            mag = abs(c)
            term = f"V{idx}" if mag == 1 else f"{mag}V{idx}"
            parts.append(("-" if c < 0 else "+", term))
        head_sign, head = parts[0]
        rendered = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            rendered += f" {sign} {term}"
        return rendered

    def __repr__(self) -> str:
        return f"RingElement(p={self.group.p}, alpha={self.group.alpha}, '{self}')"

    def to_json_dict(self) -> dict:
        """{"p": .., "alpha": .., "coeffs": {...}} with numerically sorted keys."""
        return {
            "p": self.group.p,
            "alpha": self.group.alpha,
            "coeffs": {str(i): self.coeffs[i] for i in sorted(self.coeffs)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @staticmethod
    def from_json_dict(data: Mapping) -> RingElement:
        group = GroupSpec(int(data["p"]), int(data["alpha"]))
        return RingElement(group, {int(k): int(v) for k, v in data["coeffs"].items()})

    @staticmethod
    def from_json(text: str) -> RingElement:
        return RingElement.from_json_dict(json.loads(text))


def zero(group: GroupSpec) -> RingElement:
    return RingElement(group, {})


def basis_element(group: GroupSpec, r: int) -> RingElement:
    """The class of the indecomposable V_r."""
    if not 1 <= r <= group.q:
        raise ValueError(f"index {r} outside 1..{group.q}")
    return RingElement(group, {r: 1})


def one(group: GroupSpec) -> RingElement:
    return basis_element(group, 1)


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def dim(a: RingElement) -> int:
    return a.dim()


def chi(group: GroupSpec, k: int) -> RingElement:
    """The virtual element V_{p^k+1} - V_{p^k-1}; for k = 0 this is V_2."""
    if not 0 <= k < group.alpha:
        raise ValueError(f"level {k} outside 0..{group.alpha - 1}")
    pk = group.p**k
    return RingElement(group, {pk + 1: 1, pk - 1: -1})


def _chi_column(p: int, k: int, s: int) -> dict[int, int]:
    """Raw coefficients of chi_k . V_s for 1 <= s <= p^(k+1).

    Three ranges; nonpositive indices vanish and colliding indices merge
    (both happen at the range boundaries, e.g. s = p^(k+1)).  For p = 2
    the middle range is empty and s = 2^k falls through to the first.
    """
    pk = p**k
    pk1 = pk * p
    if not 1 <= s <= pk1:
        raise ValueError(f"index {s} outside 1..{pk1} for level {k}")
    if s <= pk:
        terms = ((s + pk, 1), (pk - s, -1))
    elif s < (p - 1) * pk:
        terms = ((s + pk, 1), (s - pk, 1))
    else:
        terms = ((s - pk, 1), (pk1, 2), (2 * pk1 - (s + pk), -1))
    out: dict[int, int] = {}
    for idx, c in terms:
        if idx > 0:
            out[idx] = out.get(idx, 0) + c
    return {idx: c for idx, c in out.items() if c}


def mul_chi_V(group: GroupSpec, k: int, s: int) -> RingElement:
    """Decomposition of chi_k . V_s, valid for 1 <= s <= p^(k+1)."""
    if not 0 <= k < group.alpha:
        raise ValueError(f"level {k} outside 0..{group.alpha - 1}")
    return RingElement(group, _chi_column(group.p, k, s))


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# Tensor memo: key (p, r, s) with r <= s; the decomposition of
# V_r (x) V_s depends only on p, never on alpha, because every block is
# bounded by the p-power envelope of max(r, s).
_TENSOR_CACHE: dict[tuple[int, int, int], dict[int, int]] = {}


def _tensor_base(p: int, r: int, s: int) -> dict[int, int]:
    """V_r (x) V_s for 2 <= r <= s <= p via the chi_0 column rule.

    E_m := [m] at chi_0, times V_s, satisfies E_1 = V_s and
    E_{m+1} = chi_0 E_m - E_{m-1}; E_r is the answer since V_r = [r] at
    chi_0 for r <= p.  Intermediate supports stay within 1..p, the valid
    window of the level-0 column rule.
    """
    prev: dict[int, int] = {}
    cur: dict[int, int] = {s: 1}
    for _ in range(r - 1):
        nxt: dict[int, int] = {}
        for t, c in cur.items():
            for idx, d in _chi_column(p, 0, t).items():
                nxt[idx] = nxt.get(idx, 0) + c * d
        for t, c in prev.items():
            nxt[t] = nxt.get(t, 0) - c
        prev, cur = cur, {t: c for t, c in nxt.items() if c}
    return cur


@dataclasses.dataclass(frozen=True)
class ReductionParameters:
    """Digit data for the level-beta reduction of V_r (x) V_s, r <= s.

    r = r0 p^beta + r1 and s = s0 p^beta + s1 with 0 <= r1, s1 < p^beta;
    c1, d1, d2 switch on r0 + s0 against p; base_product lists the pairs
    (a_j, b_j) with V_{r1} (x) V_{s1} = sum a_j V_{b_j}.
    """

    beta: int
    r0: int
    r1: int
    s0: int
    s1: int
    c1: int
    d1: int
    d2: int
    base_product: tuple[tuple[int, int], ...]


def reduction_parameters(p: int, r: int, s: int) -> ReductionParameters:
    """Parameters driving one level of the digit reduction (r <= s, p < s,
    s not a power of p; powers of p are absorbed before reduction)."""
    if r > s:
        raise ValueError("reduction expects r <= s")
    if s <= p or _is_p_power(s, p):
        raise ValueError("reduction applies to s > p that is not a p-power")
    beta = 1
    while s > p ** (beta + 1):
        beta += 1
    pb = p**beta
    r0, r1 = divmod(r, pb)
    s0, s1 = divmod(s, pb)
    if r0 + s0 < p:
        c1, d1, d2 = 0, r0, r0
    else:
        c1, d1, d2 = r + s - pb * p, p - s0 - 1, p - s0
    if r1 >= 1 and s1 >= 1:
        base = _tensor_coeffs(p, r1, s1)
    else:
        base = {}
    base_product = tuple((base[idx], idx) for idx in sorted(base))
    return ReductionParameters(beta, r0, r1, s0, s1, c1, d1, d2, base_product)


def _tensor_reduce(p: int, r: int, s: int) -> dict[int, int]:
    """One level of the digit reduction, expanding through the memoized
    base product.  The lone boundary term outside the base-product sums is
    max(0, r1 - s1) V_{(s0-r0) p^beta}; see docs/discrepancies.md."""
    params = reduction_parameters(p, r, s)
    pb = p**params.beta
    shift = (params.s0 - params.r0) * pb
    out: dict[int, int] = {}

    def bump(idx: int, c: int) -> None:
        if idx > 0 and c:
            out[idx] = out.get(idx, 0) + c

    bump(pb * p, params.c1)
    spread = abs(params.r1 - params.s1)
    for i in range(1, params.d1 + 1):
        bump(shift + 2 * i * pb, spread)
    bump(shift, max(0, params.r1 - params.s1))
    weight = pb - params.r1 - params.s1
    for i in range(1, params.d2 + 1):
        bump(shift + (2 * i - 1) * pb, weight)
    for a_j, b_j in params.base_product:
        for i in range(1, params.d1 + 1):
            bump(shift + 2 * i * pb + b_j, a_j)
            bump(shift + 2 * i * pb - b_j, a_j)
        bump(shift + b_j, a_j)
    return {idx: c for idx, c in out.items() if c}


def _tensor_coeffs(p: int, r: int, s: int) -> dict[int, int]:
    if r > s:
        r, s = s, r
    key = (p, r, s)
    cached = _TENSOR_CACHE.get(key)
    if cached is not None:
        return cached
    if r == 1:
        out = {s: 1}
    elif _is_p_power(s, p):
        out = {s: r}
    elif s <= p:
        out = _tensor_base(p, r, s)
    else:
        out = _tensor_reduce(p, r, s)
    assert all(c > 0 for c in out.values()), f"negative multiplicity at {key}"
    assert sum(i * c for i, c in out.items()) == r * s, f"dimension lost at {key}"
    _TENSOR_CACHE[key] = out
    return out


def tensor(group: GroupSpec, r: int, s: int) -> RingElement:
    """Exact decomposition of V_r (x) V_s into indecomposables."""
    for idx in (r, s):
        if not 1 <= idx <= group.q:
            raise ValueError(f"index {idx} outside 1..{group.q}")
    return RingElement(group, _tensor_coeffs(group.p, r, s))


def mul(a: RingElement, b: RingElement) -> RingElement:
    """Ring product: bilinear extension of the tensor decomposition."""
    if a.group != b.group:
        raise ValueError("elements live over different groups")
    p = a.group.p
    out: dict[int, int] = {}
    for r, cr in a.coeffs.items():
        for s, cs in b.coeffs.items():
            w = cr * cs
            for idx, c in _tensor_coeffs(p, r, s).items():
                out[idx] = out.get(idx, 0) + w * c
    return RingElement(a.group, out)


def chi_power(group: GroupSpec, i: int, s: int) -> RingElement:
    """chi_i^s, 0 < s < p, by the binomial closed form.

    Summand nu contributes binom(s, nu) (V_{e p^i + 1} - V_{e p^i - 1})
    with e = s - 2 nu; terms whose index falls to zero or below vanish, so
    negative e contributes nothing and e = 0 leaves the central
    binom(s, s/2) V_1.
    """
    if not 0 <= i < group.alpha:
        raise ValueError(f"level {i} outside 0..{group.alpha - 1}")
    if not 0 < s < group.p:
        raise ValueError(f"exponent {s} outside 1..{group.p - 1}")
    pi = group.p**i
    out: dict[int, int] = {}
    for nu in range(s + 1):
        coeff = math.comb(s, nu)
        e = s - 2 * nu
        for idx, sign in ((e * pi + 1, 1), (e * pi - 1, -1)):
            if idx > 0:
                out[idx] = out.get(idx, 0) + sign * coeff
    return RingElement(group, out)


def induce(group: GroupSpec, beta: int, r: int) -> RingElement:
    """Induction to the full group of the r-th indecomposable of the
    subgroup of order p^beta: a single indecomposable V_{r p^(alpha-beta)}."""
    if not 0 <= beta < group.alpha:
        raise ValueError(f"subgroup level {beta} outside 0..{group.alpha - 1}")
    if not 1 <= r <= group.p**beta:
        raise ValueError(f"index {r} outside 1..{group.p**beta}")
    return basis_element(group, r * group.p ** (group.alpha - beta))
