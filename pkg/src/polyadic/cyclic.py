"""Cyclic codes over GF(q) driven entirely by their defining sets.

The defining set is the primary key; generator polynomial, idempotent and
dimension are derived caches.  Duals, multipliers, sums and intersections
are exact set operations on defining sets.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

from . import gf
from .polyring import CyclotomicRing, Poly, multiplier_apply, multiplier_set, cyclotomic_ring
from .errors import LengthMismatch, NotUnit


class CyclicCode:
    """An ideal of GF(q)[x]/(x^n - 1), identified by its defining set."""

    __slots__ = ("ring", "defining_set", "_generator", "_idempotent")

    def __init__(self, ring: CyclotomicRing, T: Iterable[int]):
        self.ring = ring
        self.defining_set = tuple(sorted(ring.closure_check(T)))
        self._generator = None
        self._idempotent = None

    # -- derived data --------------------------------------------------------

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def field(self) -> gf.FieldSpec:
        return self.ring.field

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)

    @property
    def generator(self) -> Poly:
        if self._generator is None:
            g = Poly.one(self.field)
            T = set(self.defining_set)
            for coset in self.ring.cosets.cosets:
                if coset[0] in T:
                    g = g * self.ring.factor(coset)
            self._generator = g
        return self._generator

    @property
    def idempotent(self) -> Poly:
        if self._idempotent is None:
            self._idempotent = self.ring.idempotent(self.defining_set)
        return self._idempotent

    # -- lattice / duality ----------------------------------------------------

    def _same_ring(self, other: "CyclicCode"):
        if self.ring != other.ring:
            raise LengthMismatch("codes live in different ambient rings")

    def dual(self) -> "CyclicCode":
        """Defining set Z_n - mu_{-1}(T)."""
        T = multiplier_set(-1 % self.n, self.defining_set, self.n) if self.n > 1 else frozenset(self.defining_set)
        comp = frozenset(range(self.n)) - T
        return self.ring.code(comp)

    def intersect(self, other: "CyclicCode") -> "CyclicCode":
        self._same_ring(other)
        return self.ring.code(frozenset(self.defining_set) | frozenset(other.defining_set))

    def __and__(self, other):
        return self.intersect(other)

    def sum(self, other: "CyclicCode") -> "CyclicCode":
        self._same_ring(other)
        return self.ring.code(frozenset(self.defining_set) & frozenset(other.defining_set))

    def __add__(self, other):
        return self.sum(other)

    def multiplier(self, a: int) -> "CyclicCode":
        """mu_a(C): defining set mu_{a^{-1}}(T)."""
        if gcd(a, self.n) != 1:
            raise NotUnit(f"{a} is not a unit mod {self.n}")
        a_inv = pow(a, -1, self.n) if self.n > 1 else 1
        return self.ring.code(multiplier_set(a_inv, self.defining_set, self.n))

    def is_even_like(self) -> bool:
        """True iff every codeword sums to 0, i.e. 0 is in the defining set."""
        return 0 in self.defining_set

    # -- concrete vectors ------------------------------------------------------

    def generator_matrix(self):
        from .linalg import GeneratorMatrix
        import numpy as np
        k = self.dimension
        g = self.generator
        rows = np.zeros((k, self.n), dtype=np.int64)
        for t in range(k):
            for i, c in enumerate(g.coeffs):
                rows[t, t + i] = c
        return GeneratorMatrix(self.field, rows)

    def codewords(self):
        """All q^k codewords as coefficient tuples (tiny codes only)."""
        import itertools
        F = self.field
        g = self.generator
        k = self.dimension
        base = [tuple(Poly(F, [0] * t + list(g.coeffs)).mod_xn1(self.n).coeff(i)
                      for i in range(self.n)) for t in range(k)]
        for msg in itertools.product(range(F.q), repeat=k):
            w = [0] * self.n
            for m, row in zip(msg, base):
                if m:
                    for i in range(self.n):
                        w[i] = F.add(w[i], F.mul(m, row[i]))
            yield tuple(w)

    # -- presentation -----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, CyclicCode) and self.ring == other.ring
                and self.defining_set == other.defining_set)

    def __hash__(self):
        return hash((self.ring, self.defining_set))

    def __repr__(self):
        return f"CyclicCode(n={self.n}, q={self.field.q}, k={self.dimension}, T={list(self.defining_set)})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": {"p": self.field.p, "s": self.field.s},
            "defining_set": list(self.defining_set),
            "generator": self.generator.to_json(self.n)["coeffs"],
            "idempotent": self.idempotent.to_json(self.n)["coeffs"],
        }


def code_from_defining_set(n: int, field: gf.FieldSpec, T, root=None) -> CyclicCode:
    """Fully populated cyclic code with the given defining set."""
    return cyclotomic_ring(n, field, root).code(T)
