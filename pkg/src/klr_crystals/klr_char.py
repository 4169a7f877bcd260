"""Character calculus over residue sequences: Laurent coefficients, quantum
shuffles, the standard one-row families, and brute classification of the
one-dimensional modules.

A character is a finite q-linear combination of residue sequences sharing one
content vector. The shuffle product interleaves two sequences over all coset
patterns, weighting each interleaving by q to the (negated) pairing of the
crossed letters.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cache
from itertools import combinations, product
from math import factorial
from typing import NamedTuple

from .cartan import (
    InvalidDatumError,
    RootVector,
    cartan_entry,
    check_ell,
    symmetric_form,
)


class LaurentPoly:
    """Integer Laurent polynomial in q, stored as sorted (exponent, coeff) pairs."""

    __slots__ = ("_pairs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        acc = {}
        for exp, c in items:
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise InvalidDatumError(f"exponents must be ints, got {exp!r}")
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidDatumError(f"coefficients must be ints, got {c!r}")
            acc[exp] = acc.get(exp, 0) + c
        self._pairs = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    def pairs(self):
        return self._pairs

    def at_q1(self):
        return sum(c for _, c in self._pairs)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(list(self._pairs) + list(other._pairs))

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._pairs})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly({e: c * other for e, c in self._pairs})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = {}
        for e1, c1 in self._pairs:
            for e2, c2 in other._pairs:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._pairs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return f"LaurentPoly({dict(self._pairs)!r})"


def qint(k):
    """Balanced q-integer: q^(k-1) + q^(k-3) + ... + q^(1-k)."""
    if k < 0:
        return -qint(-k)
    return LaurentPoly({k - 1 - 2 * t: 1 for t in range(k)})


@cache
def qfact(k):
    out = LaurentPoly.one()
    for t in range(2, k + 1):
        out = out * qint(t)
    return out


class Character:
    """q-linear combination of residue sequences of one fixed content."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell, terms):
        check_ell(ell)
        clean = {}
        content = None
        for seq, poly in terms.items():
            seq = tuple(seq)
            for x in seq:
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < ell:
                    raise InvalidDatumError(
                        f"residues must be ints in range({ell}), got {seq!r}"
                    )
            if not isinstance(poly, LaurentPoly):
                raise InvalidDatumError(f"coefficients must be LaurentPoly, got {poly!r}")
            if not poly:
                continue
            key = tuple(sorted(seq))
            if content is None:
                content = key
            elif content != key:
                raise InvalidDatumError(
                    f"mixed contents in one character: {content} vs {key}"
                )
            clean[seq] = poly
        self.ell = ell
        self.terms = clean

    def content(self):
        coeffs = [0] * self.ell
        for seq in self.terms:
            for x in seq:
                coeffs[x] += 1
            break
        return RootVector(tuple(coeffs))

    def mass_q1(self):
        return sum(p.at_q1() for p in self.terms.values())

    def to_json_bytes(self):
        doc = {
            "ell": self.ell,
            "terms": [
                {"seq": list(seq), "poly": [[e, c] for e, c in poly.pairs()]}
                for seq, poly in sorted(self.terms.items())
            ],
        }
        return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.ell == other.ell
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"Character({self.ell}, {self.terms!r})"


def unit_char(ell):
    return Character(ell, {(): LaurentPoly.one()})


class ShufflePattern(NamedTuple):
    left_slots: tuple
    right_slots: tuple
    inversions: tuple


@cache
def coset_shuffles(m1, m2):
    """All interleavings of m1 left and m2 right slots, lexicographic in left_slots.

    Each inversion (ia, ib) records left letter ia landing right of right
    letter ib.
    """
    if m1 < 0 or m2 < 0:
        raise InvalidDatumError(f"lengths must be nonnegative, got {(m1, m2)}")
    pats = []
    for left in combinations(range(m1 + m2), m1):
        taken = set(left)
        right = tuple(s for s in range(m1 + m2) if s not in taken)
        inv = tuple(
            (ia, ib)
            for ia, sa in enumerate(left)
            for ib, sb in enumerate(right)
            if sa > sb
        )
        pats.append(ShufflePattern(left, right, inv))
    return pats


def shuffle_degree(ell, left, right, pattern):
    """q-exponent of one interleaving: minus the pairing over its inversions."""
    check_ell(ell)
    left = tuple(left)
    right = tuple(right)
    if len(left) != len(pattern.left_slots) or len(right) != len(pattern.right_slots):
        raise InvalidDatumError("pattern shape does not match the sequences")
    return -sum(symmetric_form(ell, left[ia], right[ib]) for ia, ib in pattern.inversions)


def qshuffle(a, b):
    """Shuffle product of two characters over the same datum."""
    if not isinstance(a, Character) or not isinstance(b, Character):
        raise InvalidDatumError("qshuffle needs two Character operands")
    if a.ell != b.ell:
        raise InvalidDatumError(f"mixed data: ell={a.ell} vs ell={b.ell}")
    acc = {}
    for s1, p1 in a.terms.items():
        for s2, p2 in b.terms.items():
            pp = p1 * p2
            for pat in coset_shuffles(len(s1), len(s2)):
                merged = [None] * (len(s1) + len(s2))
                for ia, slot in enumerate(pat.left_slots):
                    merged[slot] = s1[ia]
                for ib, slot in enumerate(pat.right_slots):
                    merged[slot] = s2[ib]
                seq = tuple(merged)
                deg = shuffle_degree(a.ell, s1, s2, pat)
                contrib = pp * LaurentPoly.monomial(deg)
                acc[seq] = acc.get(seq, LaurentPoly.zero()) + contrib
    return Character(a.ell, acc)


def char_trivial(ell, i, k):
    """Ascending run i, i+1, ..., i+k-1 of residues, coefficient 1."""
    check_ell(ell)
    if k < 0:
        raise InvalidDatumError(f"length must be nonnegative, got {k}")
    return Character(ell, {tuple((i + t) % ell for t in range(k)): LaurentPoly.one()})


def char_sign(ell, i, k):
    """Descending run i, i-1, ..., i-k+1 of residues, coefficient 1."""
    check_ell(ell)
    if k < 0:
        raise InvalidDatumError(f"length must be nonnegative, got {k}")
    return Character(ell, {tuple((i - t) % ell for t in range(k)): LaurentPoly.one()})


def char_Lin(ell, i, n):
    """Single repeated residue with the full q-factorial coefficient."""
    check_ell(ell)
    if n < 0:
        raise InvalidDatumError(f"length must be nonnegative, got {n}")
    return Character(ell, {(i % ell,) * n: qfact(n)})


def eps_from_char(c, j, side="right"):
    """Longest run of the color j at the chosen end, over the support."""
    if side not in ("left", "right"):
        raise InvalidDatumError(f"side must be 'left' or 'right', got {side!r}")
    j %= c.ell
    best = 0
    for seq in c.terms:
        run = 0
        for x in reversed(seq) if side == "right" else seq:
            if x != j:
                break
            run += 1
        best = max(best, run)
    return best


def e_op(c, j):
    """Strip one trailing letter j from every supporting sequence."""
    j %= c.ell
    out = {}
    for seq, poly in c.terms.items():
        if seq and seq[-1] == j:
            head = seq[:-1]
            out[head] = out.get(head, LaurentPoly.zero()) + poly
    return Character(c.ell, out)


def _e_once(vec, j):
    out = {}
    for seq, a in vec.items():
        if seq and seq[-1] == j:
            head = seq[:-1]
            out[head] = out.get(head, Fraction(0)) + a
    return {s: a for s, a in out.items() if a}


def _e_divided(vec, j, m):
    for _ in range(m):
        vec = _e_once(vec, j)
    if m > 1 and vec:
        d = factorial(m)
        scaled = {}
        for seq, a in vec.items():
            b = a / d
            if b.denominator != 1:
                raise InvalidDatumError(
                    f"divided power e_{j}^({m}) is non-integral at {seq}: {b}"
                )
            scaled[seq] = b
        vec = scaled
    return vec


def serre_defect(c, i, j):
    """Alternating divided-power sum in colors i and j, specialized at q=1.

    Returns the surviving coefficients by sequence; empty means the relation
    holds. A non-integral divided power along the way raises.
    """
    ell = c.ell
    i %= ell
    j %= ell
    if i == j:
        raise InvalidDatumError("serre check needs two distinct colors")
    c0 = 1 - cartan_entry(ell, i, j)
    base = {seq: Fraction(p.at_q1()) for seq, p in c.terms.items() if p.at_q1()}
    total = {}
    for r in range(c0 + 1):
        vec = _e_divided(base, i, r)
        vec = _e_once(vec, j)
        vec = _e_divided(vec, i, c0 - r)
        sign = -1 if r % 2 else 1
        for seq, a in vec.items():
            total[seq] = total.get(seq, Fraction(0)) + sign * a
    return {seq: int(a) for seq, a in total.items() if a}


def _onedim_ok(ell, seq):
    for r in range(len(seq) - 1):
        a, b = seq[r], seq[r + 1]
        if a == b:
            return False
        if cartan_entry(ell, a, b) == 0:
            return False
    if ell > 2:
        for r in range(len(seq) - 2):
            if seq[r] == seq[r + 2]:
                return False
    return True


def onedim_classify(ell, m):
    """Brute scan: sequences whose local relations admit a one-dimensional module.

    Equal neighbors force the dot-past-crossing contradiction; distinct
    non-neighbors force a crossing to square to 1 while acting by 0; for
    ell > 2 a return step trips the braid correction term.
    """
    check_ell(ell)
    if m < 0:
        raise InvalidDatumError(f"length must be nonnegative, got {m}")
    return {seq for seq in product(range(ell), repeat=m) if _onedim_ok(ell, seq)}


def onedim_families(ell, m):
    """The same sequences from the closed form: full ascending and descending runs."""
    check_ell(ell)
    if m < 0:
        raise InvalidDatumError(f"length must be nonnegative, got {m}")
    if m == 0:
        return {()}
    out = set()
    for s in range(ell):
        out.add(tuple((s + t) % ell for t in range(m)))
        out.add(tuple((s - t) % ell for t in range(m)))
    return out


def char_equal_up_to_monomial(a, b):
    """The global exponent s with a == q^s * b, or None."""
    if a.ell != b.ell or set(a.terms) != set(b.terms):
        return None
    if not a.terms:
        return 0
    seq = min(a.terms)
    s = a.terms[seq].pairs()[0][0] - b.terms[seq].pairs()[0][0]
    shift = LaurentPoly.monomial(s)
    if all(a.terms[t] == b.terms[t] * shift for t in a.terms):
        return s
    return None
