"""Highest weight crystals on partitions, defined by unfolding.

Two combinatorial models over the cyclic datum:

* restricted: successive row differences (including the last part) stay
  below ell; operators are computed by peeling the first row into a cycle
  crystal node paired with the remaining rows, recursively.
* regular: no part value repeats ell or more times; operators peel the
  first column instead, with the opposite cycle crystal.

Peeling lowers or raises the ambient highest weight index by one, so the
recursion walks down through all residues. Every statistic is cached on
(ell, hw, model, partition, color) keys; partitions are plain tuples.
"""

from __future__ import annotations

from functools import cache
from typing import NamedTuple

from .cartan import (
    CorootWeight,
    InvalidDatumError,
    RootVector,
    check_ell,
    pair_coroot,
)
from .crystal_core import Crystal

MODELS = ("restricted", "regular")


def check_partition(parts):
    """Canonical tuple of weakly decreasing positive ints."""
    parts = tuple(parts)
    for r, p in enumerate(parts):
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise InvalidDatumError(f"parts must be positive ints, got {parts!r}")
        if r and parts[r - 1] < p:
            raise InvalidDatumError(f"parts must weakly decrease, got {parts!r}")
    return parts


def is_restricted(ell, parts):
    """Row differences, including the last part, all below ell."""
    check_ell(ell)
    parts = check_partition(parts)
    if not parts:
        return True
    return all(a - b < ell for a, b in zip(parts, parts[1:])) and parts[-1] < ell


def is_regular(ell, parts):
    """No part value occurs ell or more times."""
    check_ell(ell)
    parts = check_partition(parts)
    run = 1
    for a, b in zip(parts, parts[1:]):
        run = run + 1 if a == b else 1
        if run >= ell:
            return False
    return True


def transpose(parts):
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def box_residue(ell, i, row, col):
    """Residue of the box in the given (1-indexed) row and column."""
    check_ell(ell)
    if row < 1 or col < 1:
        raise InvalidDatumError(f"box coordinates are 1-indexed, got {(row, col)}")
    return (i + col - row) % ell


@cache
def _nu(ell, i, parts):
    coeffs = [0] * ell
    for r, p in enumerate(parts, start=1):
        for c in range(1, p + 1):
            coeffs[(i + c - r) % ell] += 1
    return RootVector(tuple(coeffs))


def nu_of(ell, i, parts):
    """Multiset of box residues of a partition, as a root vector."""
    check_ell(ell)
    return _nu(ell, i % ell, check_partition(parts))


@cache
def _node_ok(ell, model, parts):
    if model == "restricted":
        ok = is_restricted(ell, parts)
    else:
        ok = is_regular(ell, parts)
    if not ok:
        raise InvalidDatumError(f"{parts!r} is not a node of the {model} model at ell={ell}")
    return True


def _check_node(ell, model, parts):
    parts = check_partition(parts)
    _node_ok(ell, model, parts)
    return parts


# --- peels ------------------------------------------------------------

def _row_peel(ell, i, parts):
    if not parts:
        return (i - 1) % ell, ()
    return (parts[0] + i - 1) % ell, parts[1:]


def _row_unpeel(ell, i, k, mu):
    base = mu[0] if mu else 0
    offset = (k + 1 - i - base) % ell
    first = base + offset
    return (first, *mu) if first else ()


def _col_peel(ell, i, parts):
    return (i + 1 - len(parts)) % ell, tuple(p - 1 for p in parts if p > 1)


def _col_unpeel(ell, i, k, mu):
    base = len(mu)
    offset = (i + 1 - k - base) % ell
    rows = base + offset
    if not rows:
        return ()
    lam = tuple(p + 1 for p in mu) + (1,) * (rows - len(mu))
    return lam


def phi_peel(ell, i, parts):
    """First-row unfolding on the restricted model: (cycle label, lower rows)."""
    check_ell(ell)
    i %= ell
    return _row_peel(ell, i, _check_node(ell, "restricted", parts))


def phi_unpeel(ell, i, k, mu):
    check_ell(ell)
    i %= ell
    mu = _check_node(ell, "restricted", mu)
    lam = _row_unpeel(ell, i, k % ell, mu)
    return _check_node(ell, "restricted", lam)


def phiop_peel(ell, i, parts):
    """First-column unfolding on the regular model: (cycle label, stripped parts)."""
    check_ell(ell)
    i %= ell
    return _col_peel(ell, i, _check_node(ell, "regular", parts))


def phiop_unpeel(ell, i, k, mu):
    check_ell(ell)
    i %= ell
    mu = _check_node(ell, "regular", mu)
    lam = _col_unpeel(ell, i, k % ell, mu)
    return _check_node(ell, "regular", lam)


# --- recursive operators ----------------------------------------------

def _peel(ell, i, model, parts):
    """(cycle label, tail partition, tail highest weight, cycle arrows).

    The cycle arrows are returned as the color offsets used by the local
    factor: for each color j the left factor has eps 1 iff j == k, while
    f moves the label by `step` exactly on color k + step.
    """
    if model == "restricted":
        k, mu = _row_peel(ell, i, parts)
        return k, mu, (i - 1) % ell, 1
    k, mu = _col_peel(ell, i, parts)
    return k, mu, (i + 1) % ell, -1


def _unpeel(ell, i, model, k, mu):
    if model == "restricted":
        lam = _row_unpeel(ell, i, k, mu)
    else:
        lam = _col_unpeel(ell, i, k, mu)
    return _check_node(ell, model, lam)


@cache
def _stats(ell, i, model, parts, j):
    """(eps, phi) of a node, via the tensor rule on the peeled pair."""
    if not parts:
        return 0, 1 if j == i else 0
    k, mu, i2, step = _peel(ell, i, model, parts)
    e1 = 1 if j == k else 0
    p1 = 1 if j == (k + step) % ell else 0
    w1 = p1 - e1
    e2, p2 = _stats(ell, i2, model, mu, j)
    w2 = (1 if j == i2 else 0) - pair_coroot(j, _nu(ell, i2, mu))
    return max(e2, e1 - w2), max(p2 + w1, p1)


@cache
def _f_op(ell, i, model, parts, j):
    if not parts:
        return (1,) if j == i else None
    k, mu, i2, step = _peel(ell, i, model, parts)
    if (1 if j == k else 0) >= _stats(ell, i2, model, mu, j)[1]:
        if j != (k + step) % ell:
            return None
        return _unpeel(ell, i, model, (k + step) % ell, mu)
    nxt = _f_op(ell, i2, model, mu, j)
    return None if nxt is None else _unpeel(ell, i, model, k, nxt)


@cache
def _e_op(ell, i, model, parts, j):
    if not parts:
        return None
    k, mu, i2, step = _peel(ell, i, model, parts)
    if (1 if j == k else 0) > _stats(ell, i2, model, mu, j)[1]:
        # eps of the cycle factor is 1 exactly on color k, moving against f
        return _unpeel(ell, i, model, (k - step) % ell, mu)
    nxt = _e_op(ell, i2, model, mu, j)
    return None if nxt is None else _unpeel(ell, i, model, k, nxt)


class HWCrystal(Crystal):
    """Partition model of the highest weight crystal at a fundamental weight."""

    def __init__(self, ell, i, model="restricted"):
        check_ell(ell)
        if model not in MODELS:
            raise InvalidDatumError(f"unknown model {model!r}")
        self.ell = ell
        self.hw = i % ell
        self.model = model

    def _node(self, b):
        return _check_node(self.ell, self.model, b)

    def highest(self):
        return ()

    def wt(self, b):
        parts = self._node(b)
        fund = CorootWeight.fundamental(self.ell, self.hw)
        nu = _nu(self.ell, self.hw, parts)
        return CorootWeight(
            tuple(f - pair_coroot(j, nu) for j, f in enumerate(fund.evals))
        )

    def eps(self, j, b):
        return _stats(self.ell, self.hw, self.model, self._node(b), j % self.ell)[0]

    def phi(self, j, b):
        return _stats(self.ell, self.hw, self.model, self._node(b), j % self.ell)[1]

    def e(self, j, b):
        return _e_op(self.ell, self.hw, self.model, self._node(b), j % self.ell)

    def f(self, j, b):
        return _f_op(self.ell, self.hw, self.model, self._node(b), j % self.ell)

    def label(self, b):
        parts = self._node(b)
        tag = "R" if self.model == "restricted" else "G"
        return f"{tag}{self.hw}:" + ",".join(str(p) for p in parts)


def hw_crystal(ell, i, model="restricted"):
    return HWCrystal(ell, i, model)


# --- derived statistics -------------------------------------------------

class StatsPair(NamedTuple):
    """Precomputed (eps_j, wt_j) of some character or node, for phcyc_stat."""

    eps: int
    wt: int


def eps_vee(ell, i, parts, j):
    """Dual string statistic: 1 on the ambient color for nonempty nodes."""
    check_ell(ell)
    parts = check_partition(parts)
    return 1 if parts and j % ell == i % ell else 0


def jump_stat(ell, i, parts, j, model="restricted"):
    """-<h_j, nu> + eps_j + dual eps_j, on a node of the given model."""
    check_ell(ell)
    i %= ell
    j %= ell
    parts = _check_node(ell, model, parts)
    return (
        -pair_coroot(j, _nu(ell, i, parts))
        + _stats(ell, i, model, parts, j)[0]
        + eps_vee(ell, i, parts, j)
    )


def phcyc_stat(Lambda, lam_or_stats, j, model="restricted"):
    """Cyclotomic phi: Lambda_j + eps_j + wt_j.

    Accepts either a StatsPair of precomputed (eps_j, wt_j), or a partition
    node, in which case Lambda must be the fundamental weight of its crystal.
    """
    if not isinstance(Lambda, CorootWeight):
        raise InvalidDatumError(f"expected a CorootWeight, got {Lambda!r}")
    ell = Lambda.ell
    j %= ell
    if isinstance(lam_or_stats, StatsPair):
        return Lambda.evals[j] + lam_or_stats.eps + lam_or_stats.wt
    if sorted(Lambda.evals) != [0] * (ell - 1) + [1]:
        raise InvalidDatumError(
            f"partition input needs a fundamental weight, got {Lambda.evals}"
        )
    i = Lambda.evals.index(1)
    parts = _check_node(ell, model, lam_or_stats)
    eps = _stats(ell, i, model, parts, j)[0]
    return Lambda.evals[j] + eps - pair_coroot(j, _nu(ell, i, parts))
