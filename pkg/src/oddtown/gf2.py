"""Bit-parallel linear algebra over F2 with Python ints as bit vectors.

A subset of {1,..,n} and its characteristic vector in F2^n share one
representation: bit i-1 of an integer records membership of element i.
The inner product <u,v> is then the parity of popcount(u & v), so parity
of intersection sizes, spans, kernels and orthogonal complements all
reduce to word-parallel integer operations (Python ints act as arbitrary
width word arrays).

Subspaces are canonicalised to reduced row-echelon bases with the pivot
of a row at its lowest set bit and pivots strictly increasing, which
makes subspace equality a plain tuple comparison.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceededError, GroundSetMismatchError

ENUMERATION_CAP = 24  # enumerate_subspace refuses dim above this (2^24 vectors)


def _lsb_index(x: int) -> int:
    """Position of the lowest set bit; x must be nonzero."""
    return (x & -x).bit_length() - 1


@dataclass(frozen=True, order=True)
class BitSubset:
    """A subset of {1,..,ground_size} stored as a bit mask.

    Doubles as the characteristic vector in F2^ground_size.  Instances
    compare numerically by mask, which is the lexicographic-by-mask order
    used for canonical forms throughout the package.  Elements are 1-based
    at the API boundary; bit positions are 0-based internally.
    """

    mask: int
    ground_size: int

    def __post_init__(self) -> None:
        if self.ground_size < 1:
            raise ValueError(f"ground size must be >= 1, got {self.ground_size}")
        if self.mask < 0 or self.mask >> self.ground_size:
            raise ValueError(
                f"mask {self.mask:#x} has bits outside ground set of size {self.ground_size}"
            )

    @classmethod
    def from_elements(cls, elements: Iterable[int], ground_size: int) -> "BitSubset":
        """Build from 1-based element indices."""
        mask = 0
        for e in elements:
            if not 1 <= e <= ground_size:
                raise ValueError(f"element {e} outside ground set [1, {ground_size}]")
            mask |= 1 << (e - 1)
        return cls(mask, ground_size)

    def elements(self) -> tuple[int, ...]:
        """The members as ascending 1-based indices."""
        m, out, pos = self.mask, [], 1
        while m:
            if m & 1:
                out.append(pos)
            m >>= 1
            pos += 1
        return tuple(out)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.ground_size and (self.mask >> (element - 1)) & 1 == 1

    def _check_ground(self, other: "BitSubset") -> None:
        if self.ground_size != other.ground_size:
            raise GroundSetMismatchError(
                f"ground sets differ: {self.ground_size} vs {other.ground_size}"
            )

    def __and__(self, other: "BitSubset") -> "BitSubset":
        self._check_ground(other)
        return BitSubset(self.mask & other.mask, self.ground_size)

    def __or__(self, other: "BitSubset") -> "BitSubset":
        self._check_ground(other)
        return BitSubset(self.mask | other.mask, self.ground_size)

    def __xor__(self, other: "BitSubset") -> "BitSubset":
        self._check_ground(other)
        return BitSubset(self.mask ^ other.mask, self.ground_size)

    def difference(self, other: "BitSubset") -> "BitSubset":
        self._check_ground(other)
        return BitSubset(self.mask & ~other.mask, self.ground_size)

    def issubset(self, other: "BitSubset") -> bool:
        self._check_ground(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "BitSubset") -> bool:
        self._check_ground(other)
        return self.mask & other.mask == 0

    def __str__(self) -> str:
        if not self.mask:
            return "{}"
        return "{" + " ".join(map(str, self.elements())) + "}"


def inner_parity(u: BitSubset, v: BitSubset) -> int:
    """The F2 inner product <u,v>, i.e. |u n v| mod 2."""
    if u.ground_size != v.ground_size:
        raise GroundSetMismatchError(
            f"ground sets differ: {u.ground_size} vs {v.ground_size}"
        )
    return (u.mask & v.mask).bit_count() & 1


def _rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon basis of the span of the given masks."""
    rows: list[tuple[int, int]] = []  # (pivot, row), pivots strictly increasing
    for v in vectors:
        for p, r in rows:
            if (v >> p) & 1:
                v ^= r
        if v == 0:
            continue
        p = _lsb_index(v)
        # v is zero on existing pivots, so back-reduction preserves them
        rows = [(q, r ^ v if (r >> p) & 1 else r) for q, r in rows]
        insort(rows, (p, v))
    return tuple(r for _, r in rows)


@dataclass(frozen=True)
class Gf2Subspace:
    """A subspace of F2^ground_size held as a reduced row-echelon basis.

    rows are nonzero masks with strictly increasing pivots (lowest set
    bit) and every pivot column cleared in all other rows, so two equal
    subspaces always carry identical tuples.
    """

    ground_size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ground_size < 1:
            raise ValueError(f"ground size must be >= 1, got {self.ground_size}")
        prev = -1
        for r in self.rows:
            if r == 0 or r >> self.ground_size:
                raise ValueError("basis rows must be nonzero and inside the ground set")
            p = _lsb_index(r)
            if p <= prev:
                raise ValueError("basis pivots must strictly increase")
            prev = p
        pivots = [_lsb_index(r) for r in self.rows]
        for i, r in enumerate(self.rows):
            for j, p in enumerate(pivots):
                if i != j and (r >> p) & 1:
                    raise ValueError("basis is not fully reduced")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple[BitSubset, ...]:
        return tuple(BitSubset(r, self.ground_size) for r in self.rows)

    @classmethod
    def zero(cls, ground_size: int) -> "Gf2Subspace":
        return cls(ground_size, ())

    @classmethod
    def full(cls, ground_size: int) -> "Gf2Subspace":
        return cls(ground_size, tuple(1 << i for i in range(ground_size)))

    def reduce(self, mask: int) -> int:
        """Remainder of mask after elimination against the basis."""
        for r in self.rows:
            if (mask >> _lsb_index(r)) & 1:
                mask ^= r
        return mask

    def contains(self, v: "BitSubset | int") -> bool:
        mask = v.mask if isinstance(v, BitSubset) else v
        if isinstance(v, BitSubset) and v.ground_size != self.ground_size:
            raise GroundSetMismatchError(
                f"ground sets differ: {v.ground_size} vs {self.ground_size}"
            )
        return self.reduce(mask) == 0

    def __contains__(self, v: "BitSubset | int") -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "Gf2Subspace") -> bool:
        if self.ground_size != other.ground_size:
            raise GroundSetMismatchError(
                f"ground sets differ: {self.ground_size} vs {other.ground_size}"
            )
        return all(other.contains(r) for r in self.rows)


def _common_ground(vectors: Sequence[BitSubset], ground_size: int | None) -> int:
    if vectors:
        n = vectors[0].ground_size
        for v in vectors[1:]:
            if v.ground_size != n:
                raise GroundSetMismatchError(
                    f"ground sets differ: {v.ground_size} vs {n}"
                )
        if ground_size is not None and ground_size != n:
            raise GroundSetMismatchError(
                f"ground sets differ: {ground_size} vs {n}"
            )
        return n
    if ground_size is None:
        raise ValueError("ground_size is required for an empty vector list")
    return ground_size


def span(vectors: Sequence[BitSubset], *, ground_size: int | None = None) -> Gf2Subspace:
    """Span of the given vectors; the empty list spans the zero subspace."""
    n = _common_ground(vectors, ground_size)
    return Gf2Subspace(n, _rref(v.mask for v in vectors))


def rank(vectors: Sequence[BitSubset], *, ground_size: int | None = None) -> int:
    return span(vectors, ground_size=ground_size).dim


def nullspace(vectors: Sequence[BitSubset]) -> Gf2Subspace:
    """All coefficient vectors (e_1,..,e_m) with e_1 v_1 + .. + e_m v_m = 0.

    Returned as a subspace of F2^m where m = len(vectors); its dimension is
    m - rank(vectors) by rank-nullity.
    """
    m = len(vectors)
    if m == 0:
        raise ValueError("nullspace needs at least one vector")
    n = _common_ground(vectors, None)
    # Track coefficients in bits n.. of an augmented row; a row whose low
    # n bits eliminate to zero exposes one dependency in its high part.
    low_mask = (1 << n) - 1
    rows: list[tuple[int, int]] = []  # (pivot < n, augmented row)
    dependencies: list[int] = []
    for i, v in enumerate(vectors):
        aug = v.mask | 1 << (n + i)
        for p, r in rows:
            if (aug >> p) & 1:
                aug ^= r
        low = aug & low_mask
        if low == 0:
            dependencies.append(aug >> n)
        else:
            insort(rows, (_lsb_index(low), aug))
    return Gf2Subspace(m, _rref(dependencies))


def kernel_of_functional(W: Gf2Subspace, v: BitSubset) -> Gf2Subspace:
    """Kernel of w -> <w,v> restricted to W.

    Equals W when the functional vanishes on W, otherwise a hyperplane of
    W (dimension dim W - 1).
    """
    if v.ground_size != W.ground_size:
        raise GroundSetMismatchError(
            f"ground sets differ: {v.ground_size} vs {W.ground_size}"
        )
    values = [(r & v.mask).bit_count() & 1 for r in W.rows]
    if 1 not in values:
        return W
    i0 = values.index(1)
    hot = W.rows[i0]
    gens = [r if val == 0 else r ^ hot for i, (r, val) in enumerate(zip(W.rows, values)) if i != i0]
    return Gf2Subspace(W.ground_size, _rref(gens))


def orthogonal_complement(U: Gf2Subspace) -> Gf2Subspace:
    """All vectors orthogonal to U; dim U + dim U-perp = n."""
    n = U.ground_size
    pivots = [_lsb_index(r) for r in U.rows]
    pivot_set = set(pivots)
    gens = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = 1 << f
        for p, r in zip(pivots, U.rows):
            if (r >> f) & 1:
                x |= 1 << p
        gens.append(x)
    return Gf2Subspace(n, _rref(gens))


def enumerate_subspace(W: Gf2Subspace, *, cap: int = ENUMERATION_CAP) -> list[BitSubset]:
    """All 2^dim vectors of W, each exactly once, in Gray-code order.

    Refuses dimensions above the cap to bound memory.
    """
    if W.dim > cap:
        raise CapExceededError(
            f"subspace of dimension {W.dim} exceeds enumeration cap {cap}"
        )
    out = [BitSubset(0, W.ground_size)]
    v = 0
    for i in range(1, 1 << W.dim):
        v ^= W.rows[_lsb_index(i)]
        out.append(BitSubset(v, W.ground_size))
    return out
