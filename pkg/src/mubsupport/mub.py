"""Complete standard sets of mutually unbiased bases in prime dimension.

Everything is kept in the sqrt(d)-scaled convention: basis columns store bare
powers of w = exp(2*pi*i/d), so orthogonality reads "inner product equals 0",
normalization reads "equals d", and cross-basis unbiasedness reads
"z * conj(z) equals d".  For d = 2 the second Hadamard matrix involves i, so
that single dimension lives in Q(i) (root order 4).

Basis labels follow the convention: index 0 is the computational basis, index
1 is the Fourier basis, and index j >= 1 has scaled entries w^(-k*x + (j-1)*x^2)
at row x, column k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .cyclotomic import (
    Cyclotomic,
    QuadraticGaussElement,
    gauss_sum,
    is_prime,
    jacobi_symbol,
    mod_inverse,
)
from .errors import DimensionMismatchError, InvalidDimensionError, TheoremViolationError


def field_order(dim: int) -> int:
    """Root-of-unity order used for dimension ``dim``: 4 for d=2, d otherwise."""
    return 4 if dim == 2 else dim


class StateVector:
    """Unnormalized ray representative with exact entries."""

    __slots__ = ("dim", "entries", "label")

    def __init__(self, dim: int, entries: Sequence[Cyclotomic], label: str | None = None):
        if len(entries) != dim:
            raise ValueError(f"expected {dim} entries, got {len(entries)}")
        order = field_order(dim)
        for e in entries:
            if e.order != order:
                raise DimensionMismatchError(
                    f"entry of order {e.order} in a dimension-{dim} state (order {order})"
                )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("StateVector is immutable")

    @property
    def order(self) -> int:
        return field_order(self.dim)

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def scale(self, factor: Cyclotomic) -> "StateVector":
        return StateVector(self.dim, [e * factor for e in self.entries], self.label)

    def proportional_to(self, other: "StateVector") -> bool:
        """True when the two vectors span the same ray (exact test)."""
        if self.dim != other.dim:
            return False
        pivot = next((x for x in range(self.dim) if not self.entries[x].is_zero), None)
        if pivot is None:
            return other.is_zero
        if other.entries[pivot].is_zero:
            return False
        ratio = other.entries[pivot] / self.entries[pivot]
        return all(self.entries[x] * ratio == other.entries[x] for x in range(self.dim))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dim, self.entries))

    def __repr__(self) -> str:
        tag = f", label={self.label!r}" if self.label else ""
        return f"StateVector({self.dim}, [{', '.join(str(e) for e in self.entries)}]{tag})"

    def to_json_dict(self) -> dict:
        out = {"dim": self.dim, "entries": [e.to_strings() for e in self.entries]}
        if self.label:
            out["label"] = self.label
        return out

    @classmethod
    def from_json_dict(cls, payload: dict) -> "StateVector":
        dim = int(payload["dim"])
        order = field_order(dim)
        entries = [Cyclotomic.from_strings(order, part) for part in payload["entries"]]
        return cls(dim, entries, payload.get("label"))


@dataclass(frozen=True)
class MubBasis:
    """One orthonormal basis of the standard set, as scaled columns."""

    dim: int
    index: int
    columns: tuple[StateVector, ...]


@dataclass(frozen=True)
class MubSet:
    """The d+1 standard MU bases; bases[0] is computational, bases[1] Fourier."""

    dim: int
    bases: tuple[MubBasis, ...]

    def basis(self, j: int) -> MubBasis:
        return self.bases[j]

    def to_json_dict(self) -> dict:
        order = field_order(self.dim)
        bases = []
        for basis in self.bases:
            cols = []
            for col in basis.columns:
                exps = []
                for entry in col.entries:
                    exps.append(None if entry.is_zero else _unit_exponent(order, entry))
                cols.append(exps)
            bases.append({"index": basis.index, "columns": cols})
        return {"dim": self.dim, "order": order, "bases": bases}

    @classmethod
    def from_json_dict(cls, payload: dict) -> "MubSet":
        dim = int(payload["dim"])
        order = field_order(dim)
        if payload.get("order", order) != order:
            raise ValueError("inconsistent root order in MU-set payload")
        bases = []
        for spec in payload["bases"]:
            cols = []
            for exps in spec["columns"]:
                entries = [
                    Cyclotomic.zero(order) if e is None else Cyclotomic.root_power(order, e)
                    for e in exps
                ]
                cols.append(StateVector(dim, entries))
            bases.append(MubBasis(dim, int(spec["index"]), tuple(cols)))
        return cls(dim, tuple(bases))


def _unit_exponent(order: int, entry: Cyclotomic) -> int:
    for e in range(order):
        if entry == Cyclotomic.root_power(order, e):
            return e
    raise ValueError(f"{entry!r} is not a root of unity of order {order}")


def scaled_entry(d: int, j: int, x: int, k: int) -> Cyclotomic:
    """Scaled overlap of computational row x with column k of basis j."""
    order = field_order(d)
    if j == 0:
        return Cyclotomic.one(order) if x == k else Cyclotomic.zero(order)
    if d == 2:
        # Fourier matrix [[1,1],[1,-1]]; second basis diag(1,i) times it.
        exponent = 2 * x * k + (j - 1) * x
        return Cyclotomic.root_power(4, exponent)
    return Cyclotomic.root_power(d, (-k * x + (j - 1) * x * x) % d)


def basis_exponent(d: int, j: int, x: int, k: int) -> int:
    """Exponent of w in the scaled entry, for odd prime d and j >= 1."""
    return (-k * x + (j - 1) * x * x) % d


def build_mub_set(d: int) -> MubSet:
    """Construct the d+1 standard MU bases for prime d."""
    if not is_prime(d):
        raise InvalidDimensionError(f"dimension {d} is not prime")
    bases = []
    for j in range(d + 1):
        cols = tuple(
            StateVector(d, [scaled_entry(d, j, x, k) for x in range(d)], label=f"basis {j} column {k}")
            for k in range(d)
        )
        bases.append(MubBasis(d, j, cols))
    return MubSet(d, tuple(bases))


def inner_product(a: StateVector, b: StateVector) -> Cyclotomic:
    """Exact <a|b> = sum over x of conj(a_x) * b_x."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimensions {a.dim} and {b.dim} differ")
    acc = Cyclotomic.zero(a.order)
    for ax, bx in zip(a.entries, b.entries):
        acc = acc + ax.conjugate() * bx
    return acc


def apply_shift_phase(psi: StateVector, power: int = 1) -> StateVector:
    """Multiply entrywise by diag(1, w^-1, ..., w^-(d-1))^power.

    On every basis with label j >= 1 this advances the column label by
    ``power`` (cyclically); on the computational basis it only rephases.
    """
    d = psi.dim
    if d == 2:
        # w = -1, so the diagonal is (1, (-1)^power).
        phases = [Cyclotomic.root_power(4, 2 * x * power) for x in range(d)]
    else:
        phases = [Cyclotomic.root_power(d, (-x * power) % d) for x in range(d)]
    return StateVector(d, [e * p for e, p in zip(psi.entries, phases)], psi.label)


def apply_basis_step(psi: StateVector, power: int = 1) -> StateVector:
    """Multiply entrywise by diag(1, w, w^4, ..., w^((d-1)^2))^power.

    Maps every column of basis j to the matching column of basis j+1, with
    basis d wrapping to basis 1 (for d = 2 the wrap also swaps the columns).
    """
    d = psi.dim
    if d == 2:
        phases = [Cyclotomic.one(4), Cyclotomic.root_power(4, power)]
    else:
        phases = [Cyclotomic.root_power(d, (x * x * power) % d) for x in range(d)]
    return StateVector(d, [e * p for e, p in zip(psi.entries, phases)], psi.label)


@dataclass(frozen=True)
class MonomialDecomposition:
    """Witness that a product of two scaled Hadamard matrices is monomial
    times the adjoint of a third one.

    For odd prime d and distinct j, k in {1..d}, the scaled product
    P = H_k^dag H_j satisfies P = M H_t^dag where t = 1 + chi,
    4*(j-k)*chi = 1 mod d, and M has its only nonzero entry in row l at
    column 2*l*chi mod d with value jacobi(j-k, d) * g * w^(-l^2 chi).
    The entries carry the scale g (so |entry|^2 = d); the construction
    verifies the identity entrywise before returning.
    """

    dim: int
    j: int
    k: int
    chi: int
    t: int
    permutation: tuple[int, ...]
    phases: tuple[Cyclotomic, ...]


def product_entry(d: int, j: int, k: int, row: int, col: int) -> Cyclotomic:
    """Entry (row, col) of the scaled product H_k^dag H_j, exact."""
    order = field_order(d)
    if j == k:
        return Cyclotomic.rational(order, d) if row == col else Cyclotomic.zero(order)
    if k == 0:
        return scaled_entry(d, j, row, col)
    if j == 0:
        return scaled_entry(d, k, col, row).conjugate()
    if d == 2:
        acc = Cyclotomic.zero(4)
        for x in range(2):
            acc = acc + scaled_entry(2, k, x, row).conjugate() * scaled_entry(2, j, x, col)
        return acc
    return gauss_sum(d, j - k, row - col)


def monomial_decompose(j: int, k: int, d: int) -> MonomialDecomposition:
    """Decompose H_k^dag H_j as monomial times H_(1+chi)^dag, verified exactly."""
    if d == 2 or not is_prime(d):
        raise InvalidDimensionError(f"monomial decomposition needs an odd prime, got {d}")
    if j == k or not (1 <= j <= d and 1 <= k <= d):
        raise ValueError(f"labels must be distinct and in 1..{d}, got j={j}, k={k}")
    chi = mod_inverse(4 * (j - k), d)
    t = 1 + chi
    eps = jacobi_symbol(j - k, d)
    g = QuadraticGaussElement.for_dimension(d).value
    permutation = tuple((2 * ell * chi) % d for ell in range(d))
    if len(set(permutation)) != d:
        raise TheoremViolationError(
            "monomial column map is not a permutation", witness=(d, j, k, permutation)
        )
    phases = tuple(
        (eps * g) * Cyclotomic.root_power(d, (-ell * ell * chi) % d) for ell in range(d)
    )
    # Entrywise check of P = M H_t^dag: row l of P must equal phases[l] times
    # the conjugate of row permutation[l] of H_t.
    for ell in range(d):
        for ellp in range(d):
            got = product_entry(d, j, k, ell, ellp)
            expected = phases[ell] * Cyclotomic.root_power(
                d, (permutation[ell] * ellp - (t - 1) * ellp * ellp) % d
            )
            if got != expected:
                raise TheoremViolationError(
                    "monomial decomposition identity failed",
                    witness={"d": d, "j": j, "k": k, "entry": (ell, ellp)},
                )
    return MonomialDecomposition(d, j, k, chi, t, permutation, phases)


def monomial_negative_check(j: int, k: int, t_prime: int, d: int) -> bool:
    """True when every entry of the scaled H_k^dag H_j H_t' is nonzero.

    Together with monomial_decompose this pins down t = 1 + chi as the unique
    label producing a monomial product: for any other t' the triple product
    has no zero entry at all.
    """
    if d == 2 or not is_prime(d):
        raise InvalidDimensionError(f"odd prime required, got {d}")
    chi = mod_inverse(4 * (j - k), d)
    if t_prime == 1 + chi or not (1 <= t_prime <= d):
        raise ValueError(f"t'={t_prime} must lie in 1..{d} and differ from {1 + chi}")
    for ell in range(d):
        row = [product_entry(d, j, k, ell, m) for m in range(d)]
        for ellp in range(d):
            acc = Cyclotomic.zero(d)
            for m in range(d):
                acc = acc + row[m] * scaled_entry(d, t_prime, m, ellp)
            if acc.is_zero:
                return False
    return True


def two_basis_monomial_check_d2() -> tuple[list[list[Cyclotomic]], list[list[Cyclotomic]]]:
    """Direct d=2 analogue: H_1^dag H_2 and H_2^dag H_1 are monomial times H_2^dag.

    Returns the two (diagonal) monomial matrices; raises if either product
    fails to be a rephased row permutation of H_2^dag.
    """
    monomials = []
    for (a, b) in ((1, 2), (2, 1)):
        rows: list[list[Cyclotomic]] = []
        for ell in range(2):
            rows.append([product_entry(2, b, a, ell, m) for m in range(2)])
        target = [
            [scaled_entry(2, 2, x, r).conjugate() for x in range(2)] for r in range(2)
        ]
        monomial = [[Cyclotomic.zero(4), Cyclotomic.zero(4)] for _ in range(2)]
        for r, row in enumerate(rows):
            matched = False
            for tr, trow in enumerate(target):
                pivot = next(i for i, e in enumerate(trow) if not e.is_zero)
                ratio = row[pivot] / trow[pivot]
                if ratio.is_zero:
                    continue
                if all(row[i] == trow[i] * ratio for i in range(2)):
                    monomial[r][tr] = ratio
                    matched = True
                    break
            if not matched:
                raise TheoremViolationError(
                    "d=2 product is not monomial times the second Hadamard adjoint",
                    witness=(a, b, r),
                )
        monomials.append(monomial)
    return monomials[0], monomials[1]


def root_frequency_counts(d: int, j: int, k: int) -> list[int]:
    """How often each power of w occurs among the scaled entries of column k of basis j."""
    order = field_order(d)
    counts = [0] * order
    for x in range(d):
        counts[_unit_exponent(order, scaled_entry(d, j, x, k))] += 1
    return counts


def identical_entry_counts(d: int, j1: int, k1: int, j2: int, k2: int) -> list[int]:
    """For each n, how many rows x satisfy entry(j1,k1,x) = w^n * entry(j2,k2,x)."""
    if d == 2 or not is_prime(d):
        raise InvalidDimensionError(f"odd prime required, got {d}")
    counts = [0] * d
    for x in range(d):
        e1 = basis_exponent(d, j1, x, k1)
        e2 = basis_exponent(d, j2, x, k2)
        counts[(e1 - e2) % d] += 1
    return counts
