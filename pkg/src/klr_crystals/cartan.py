"""Cartan datum for the cyclic quiver on ell nodes.

Residues and colors live in Z/ell and are passed around as plain ints,
normalized mod ell at entry points. Aggregate values (root vectors, coroot
weights) carry ell themselves and refuse to mix across different ell.
"""

from __future__ import annotations

from dataclasses import dataclass


class InvalidDatumError(ValueError):
    """Malformed or incompatible combinatorial data."""


def check_ell(ell):
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 2:
        raise InvalidDatumError(f"need an integer ell >= 2, got {ell!r}")


def cartan_entry(ell, i, j):
    """Entry a_ij of the affine Cartan matrix on the ell-cycle.

    Diagonal 2; at ell = 2 the two off-diagonal entries are -2; for larger
    ell the entry is -1 exactly when i and j are neighbors mod ell.
    """
    check_ell(ell)
    d = (i - j) % ell
    if d == 0:
        return 2
    if ell == 2:
        return -2
    return -1 if d in (1, ell - 1) else 0


def symmetric_form(ell, i, j):
    """Pairing (alpha_i, alpha_j); equals a_ij since every root is short here."""
    return cartan_entry(ell, i, j)


@dataclass(frozen=True)
class RootVector:
    """Nonnegative integer combination of the simple roots alpha_0..alpha_{ell-1}."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        check_ell(len(self.coeffs))
        coeffs = tuple(int(c) for c in self.coeffs)
        if any(c < 0 for c in coeffs):
            raise InvalidDatumError(f"negative root multiplicity in {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, ell):
        check_ell(ell)
        return cls((0,) * ell)

    @classmethod
    def alpha(cls, ell, i):
        check_ell(ell)
        return cls(tuple(1 if t == i % ell else 0 for t in range(ell)))

    @property
    def ell(self):
        return len(self.coeffs)

    @property
    def height(self):
        return sum(self.coeffs)

    def _match(self, other):
        if not isinstance(other, RootVector) or other.ell != self.ell:
            raise InvalidDatumError(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        self._match(other)
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._match(other)
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))


def gamma(ell, i, k, direction="plus"):
    """Sum of k consecutive simple roots walking from residue i.

    "plus" walks up through i, i+1, ..., i+k-1; "minus" walks down through
    i, i-1, ..., i-k+1. Heights wrap freely around the cycle.
    """
    check_ell(ell)
    if k < 0:
        raise InvalidDatumError(f"segment height must be >= 0, got {k}")
    if direction not in ("plus", "minus"):
        raise InvalidDatumError(f"unknown direction {direction!r}")
    step = 1 if direction == "plus" else -1
    coeffs = [0] * ell
    for t in range(k):
        coeffs[(i + step * t) % ell] += 1
    return RootVector(tuple(coeffs))


def pair_coroot(j, nu):
    """Evaluation <h_j, nu> of a coroot against a root vector."""
    if not isinstance(nu, RootVector):
        raise InvalidDatumError(f"expected a RootVector, got {nu!r}")
    ell = nu.ell
    return sum(cartan_entry(ell, j, t) * c for t, c in enumerate(nu.coeffs) if c)


@dataclass(frozen=True)
class CorootWeight:
    """Weight known through its evaluations <h_j, -> for j = 0..ell-1."""

    evals: tuple[int, ...]

    def __post_init__(self):
        check_ell(len(self.evals))
        object.__setattr__(self, "evals", tuple(int(v) for v in self.evals))

    @classmethod
    def zero(cls, ell):
        check_ell(ell)
        return cls((0,) * ell)

    @classmethod
    def fundamental(cls, ell, i):
        check_ell(ell)
        return cls(tuple(1 if t == i % ell else 0 for t in range(ell)))

    @property
    def ell(self):
        return len(self.evals)

    def _match(self, other):
        if not isinstance(other, CorootWeight) or other.ell != self.ell:
            raise InvalidDatumError(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        self._match(other)
        return CorootWeight(tuple(a + b for a, b in zip(self.evals, other.evals)))

    def __sub__(self, other):
        self._match(other)
        return CorootWeight(tuple(a - b for a, b in zip(self.evals, other.evals)))


def coroot_evals(nu):
    """The coroot evaluations of a root vector, as a CorootWeight."""
    return CorootWeight(tuple(pair_coroot(j, nu) for j in range(nu.ell)))
