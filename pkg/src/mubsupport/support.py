"""Support sizes, zero distributions, and the additive support bounds.

Zero detection is exact everywhere in this module: a coefficient vanishes iff
its cyclotomic coefficients are all zero.  No tolerance appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .cyclotomic import is_prime
from .errors import DegenerateStateError, DimensionMismatchError, InvalidDimensionError
from .mub import MubBasis, MubSet, StateVector, inner_product


@dataclass(frozen=True)
class SupportProfile:
    """Support sizes of one state in every basis of a complete standard set."""

    dim: int
    sizes: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.sizes) != self.dim + 1:
            raise ValueError(f"expected {self.dim + 1} sizes, got {len(self.sizes)}")
        if self.total != sum(self.sizes):
            raise ValueError("profile total does not match its sizes")

    @classmethod
    def from_sizes(cls, dim: int, sizes) -> "SupportProfile":
        sizes = tuple(int(s) for s in sizes)
        return cls(dim, sizes, sum(sizes))


@dataclass(frozen=True)
class ZeroDistribution:
    """Indices of the vanishing coefficients of a state in one basis."""

    dim: int
    basis_index: int
    indices: tuple[int, ...]

    def shifted(self, mu: int) -> tuple[int, ...]:
        return tuple(sorted((x + mu) % self.dim for x in self.indices))


@dataclass(frozen=True)
class PairBoundCheck:
    """Additive and multiplicative two-basis bounds for one basis pair."""

    j: int
    k: int
    additive_sum: int
    additive_bound: int
    product: int
    product_bound: int

    @property
    def additive_ok(self) -> bool:
        return self.additive_sum >= self.additive_bound

    @property
    def additive_slack(self) -> int:
        return self.additive_sum - self.additive_bound

    @property
    def product_ok(self) -> bool:
        return self.product >= self.product_bound

    @property
    def product_slack(self) -> int:
        return self.product - self.product_bound

    @property
    def holds(self) -> bool:
        return self.additive_ok and self.product_ok

    def __bool__(self) -> bool:
        return self.additive_ok


@dataclass(frozen=True)
class BoundReport:
    """Derived lower bound, sharp bound, and witnesses for one dimension."""

    dim: int
    lower_bound: Fraction
    sharp: int | None
    achievable: str  # "yes" | "no" | "numeric-no" | "unknown"
    witnesses: tuple[StateVector, ...] = field(default_factory=tuple)
    provenance: str = "theorem"  # "theorem" | "search" | "paper-numeric"

    def __post_init__(self):
        if self.lower_bound != lower_bound_total(self.dim):
            raise ValueError("inconsistent derived lower bound")


def lower_bound_total(d: int) -> Fraction:
    """State-independent lower bound (d+1)^2/2 on the overall support."""
    return Fraction((d + 1) ** 2, 2)


def support_size(psi: StateVector, basis: MubBasis) -> int:
    """Number of nonzero expansion coefficients of psi in the given basis."""
    if psi.is_zero:
        raise DegenerateStateError("support of the zero vector is undefined")
    if psi.dim != basis.dim:
        raise DimensionMismatchError(f"state dim {psi.dim} vs basis dim {basis.dim}")
    return sum(1 for col in basis.columns if not inner_product(col, psi).is_zero)


def support_profile(psi: StateVector, mubs: MubSet) -> SupportProfile:
    """Support sizes in all d+1 bases plus their total."""
    if psi.is_zero:
        raise DegenerateStateError("support of the zero vector is undefined")
    sizes = tuple(support_size(psi, basis) for basis in mubs.bases)
    return SupportProfile(psi.dim, sizes, sum(sizes))


def zero_distribution(psi: StateVector, j: int, mubs: MubSet) -> ZeroDistribution:
    """Exact index set of vanishing coefficients of psi in basis j."""
    if psi.is_zero:
        raise DegenerateStateError("zero distribution of the zero vector is undefined")
    basis = mubs.basis(j)
    idx = tuple(
        k for k, col in enumerate(basis.columns) if inner_product(col, psi).is_zero
    )
    return ZeroDistribution(psi.dim, j, idx)


def check_pair_inequality(profile: SupportProfile, j: int, k: int) -> PairBoundCheck:
    """Evaluate both two-basis bounds: sizes sum >= d+1 and product >= d."""
    if j == k:
        raise ValueError("pair bound needs two distinct basis labels")
    d = profile.dim
    sj, sk = profile.sizes[j], profile.sizes[k]
    return PairBoundCheck(
        j=j,
        k=k,
        additive_sum=sj + sk,
        additive_bound=d + 1,
        product=sj * sk,
        product_bound=d,
    )


def check_complete_bound(profile: SupportProfile) -> str:
    """Compare the overall support with (d+1)^2/2.

    Returns "satisfied", "saturated", or "violated"; the last one signals an
    implementation bug, never a real state.
    """
    lhs = 2 * profile.total
    rhs = (profile.dim + 1) ** 2
    if lhs > rhs:
        return "satisfied"
    if lhs == rhs:
        return "saturated"
    return "violated"


def check_triple_bound(profile: SupportProfile, bases: tuple[int, int, int] = (0, 1, 2)) -> bool:
    """Additive three-basis bound: sum of the three sizes >= 3(d+1)/2."""
    a, b, c = bases
    total = profile.sizes[a] + profile.sizes[b] + profile.sizes[c]
    return 2 * total >= 3 * (profile.dim + 1)


def equal_support_condition(profile: SupportProfile) -> bool:
    """True iff every size equals (d+1)/2 (profile-level saturation test)."""
    d = profile.dim
    if d % 2 == 0:
        raise InvalidDimensionError("equal-support condition needs an odd prime dimension")
    return all(2 * s == d + 1 for s in profile.sizes)


def compatible(z1: ZeroDistribution | tuple, z2: ZeroDistribution | tuple, dim: int | None = None):
    """Cyclic shift mu with z2 = z1 + mu (as index sets), or None.

    Accepts ZeroDistribution objects or bare index tuples (then ``dim`` is
    required).
    """
    if isinstance(z1, ZeroDistribution):
        if z1.dim != z2.dim:
            raise DimensionMismatchError("zero distributions of different dimensions")
        d = z1.dim
        a, b = set(z1.indices), set(z2.indices)
    else:
        if dim is None:
            raise ValueError("dim is required for bare index sets")
        d = dim
        a, b = set(z1), set(z2)
    if len(a) != len(b):
        return None
    for mu in range(d):
        if {(x + mu) % d for x in a} == b:
            return mu
    return None


def shift_class_key(d: int, indices) -> tuple[int, ...]:
    """Lexicographically minimal cyclic shift of an index set (sorted tuple)."""
    return min(tuple(sorted((x + mu) % d for x in indices)) for mu in range(d))


def canonical_class_representatives(d: int, n: int) -> list[tuple[int, ...]]:
    """All shift classes of n-element zero distributions, one representative each.

    For prime d and 0 < n < d every class has exactly d members, so the result
    has binom(d, n)/d entries; representatives are the lexicographically
    minimal members, sorted.
    """
    if not is_prime(d):
        raise InvalidDimensionError(f"dimension {d} is not prime")
    if n <= 0 or n >= d:
        raise ValueError(f"class size must satisfy 0 < n < d, got n={n}")
    reps = {shift_class_key(d, combo) for combo in combinations(range(d), n)}
    return sorted(reps)
