"""The two level-one cyclic crystals: each is a single ell-cycle of arrows.

Nodes are the ints 0..ell-1. In the "row" family (B11) the arrow into node
k+1 has color k+1; in the "column" family (Bopp) the arrows run the opposite
way around the cycle, with the arrow into node k-1 colored k-1.
"""

from __future__ import annotations

from .cartan import CorootWeight, InvalidDatumError, check_ell
from .crystal_core import Crystal


class _CycleCrystal(Crystal):
    prefix = "?"

    def __init__(self, ell):
        check_ell(ell)
        self.ell = ell

    def node_set(self):
        return range(self.ell)

    def _check(self, k):
        if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < self.ell:
            raise InvalidDatumError(f"node must be an int in 0..{self.ell - 1}, got {k!r}")
        return k

    def label(self, b):
        return f"{self.prefix}:{self._check(b)}"


class B11Crystal(_CycleCrystal):
    """Row family: e_k(b_k) = b_{k-1}, f_{k+1}(b_k) = b_{k+1}."""

    prefix = "B11"

    def wt(self, b):
        k = self._check(b)
        ell = self.ell
        return CorootWeight.fundamental(ell, (k + 1) % ell) - CorootWeight.fundamental(ell, k)

    def eps(self, j, b):
        return 1 if j % self.ell == self._check(b) else 0

    def phi(self, j, b):
        return 1 if j % self.ell == (self._check(b) + 1) % self.ell else 0

    def e(self, j, b):
        k = self._check(b)
        return (k - 1) % self.ell if j % self.ell == k else None

    def f(self, j, b):
        k = self._check(b)
        return (k + 1) % self.ell if j % self.ell == (k + 1) % self.ell else None


class BoppCrystal(_CycleCrystal):
    """Column family: e_k(b_k) = b_{k+1}, f_{k-1}(b_k) = b_{k-1}."""

    prefix = "BOP"

    def wt(self, b):
        k = self._check(b)
        ell = self.ell
        return CorootWeight.fundamental(ell, (k - 1) % ell) - CorootWeight.fundamental(ell, k)

    def eps(self, j, b):
        return 1 if j % self.ell == self._check(b) else 0

    def phi(self, j, b):
        return 1 if j % self.ell == (self._check(b) - 1) % self.ell else 0

    def e(self, j, b):
        k = self._check(b)
        return (k + 1) % self.ell if j % self.ell == k else None

    def f(self, j, b):
        k = self._check(b)
        return (k - 1) % self.ell if j % self.ell == (k - 1) % self.ell else None


def b11(ell):
    return B11Crystal(ell)


def bopp(ell):
    return BoppCrystal(ell)
