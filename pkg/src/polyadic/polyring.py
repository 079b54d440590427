"""Polynomials over GF(q), cyclotomic cosets and idempotent generators.

The central object is CyclotomicRing: GF(q)[x]/(x^n - 1) for gcd(n, q) = 1,
carrying a fixed primitive n-th root of unity in the splitting field.  All
defining-set machinery (factors of x^n - 1, idempotents, multipliers) is
relative to that root; an explicit `root` override reproduces published
idempotents whose root convention differs from ours.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from . import gf
from ._numtheory import multiplicative_order
from .errors import (
    CoefficientNotInBaseField,
    NotCoprime,
    NotCosetClosed,
    NotUnit,
)


class Poly:
    """Dense polynomial over a FieldSpec; coefficients ascending, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: gf.FieldSpec, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(field):
        return Poly(field, ())

    @staticmethod
    def one(field):
        return Poly(field, (1,))

    @staticmethod
    def x(field):
        return Poly(field, (0, 1))

    @staticmethod
    def from_ints(field, ints: Sequence[int]) -> "Poly":
        """Integer coefficients, embedded through the prime subfield."""
        return Poly(field, (field.from_int(c) for c in ints))

    # -- basics --------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Poly(F, (F.add(x, y) for x, y in zip(a, b)))

    def __sub__(self, other):
        other = self._coerce(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Poly(F, (F.sub(x, y) for x, y in zip(a, b)))

    def __neg__(self):
        return Poly(self.field, (self.field.neg(c) for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            other = Poly(self.field, (self.field.from_int(other),))
        if not isinstance(other, Poly):
            return NotImplemented
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly(self.field, (self.field.from_int(other),))
        raise TypeError(f"cannot combine Poly with {type(other)!r}")

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, (F.mul(c, x) for x in self.coeffs))

    def __divmod__(self, other: "Poly"):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = F.inv(other.coeffs[-1])
        q = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = F.mul(rem[-1], lead_inv)
            pos = len(rem) - 1 - db
            q[pos] = c
            for i, y in enumerate(other.coeffs):
                rem[pos + i] = F.sub(rem[pos + i], F.mul(c, y))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(F, q), Poly(F, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def ext_gcd(self, other: "Poly"):
        """(g, u, v) with u*self + v*other = g, g monic."""
        F = self.field
        r0, r1 = self, other
        u0, u1 = Poly.one(F), Poly.zero(F)
        v0, v1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        if not r0.is_zero():
            c = F.inv(r0.coeffs[-1])
            r0, u0, v0 = r0.scale(c), u0.scale(c), v0.scale(c)
        return r0, u0, v0

    def mod_xn1(self, n: int) -> "Poly":
        F = self.field
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] = F.add(out[i % n], c)
        return Poly(F, out)

    def mul_mod_xn1(self, other: "Poly", n: int) -> "Poly":
        return (self * other).mod_xn1(n)

    def __call__(self, x: Union[int, gf.FieldElement]) -> int:
        """Horner evaluation; x is a packed value (or element) of self.field."""
        F = self.field
        xv = x.val if isinstance(x, gf.FieldElement) else x
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, xv), c)
        return acc

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- presentation --------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        F = self.field
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            cs = F.elem_str(c)
            if F.s > 1 and ("+" in cs) and i > 0:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if cs == "1" else f"{cs}{xs}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self, n: Optional[int] = None) -> dict:
        F = self.field
        obj = {"q": {"p": F.p, "s": F.s},
               "coeffs": [list(gf._digits(c, F.p, F.s)) for c in self.coeffs]}
        if n is not None:
            obj["n"] = n
        return obj

    @staticmethod
    def from_json(obj: dict, field: Optional[gf.FieldSpec] = None) -> "Poly":
        if field is None:
            field = gf.build_field(obj["q"]["p"], obj["q"].get("s", 1))
        return Poly(field, (gf._undigits(ds, field.p) for ds in obj["coeffs"]))


@dataclass(frozen=True)
class CosetPartition:
    """The q-cyclotomic cosets partitioning Z_n (q = field size)."""

    n: int
    q: int
    cosets: tuple

    def coset_of(self, i: int) -> tuple:
        i %= self.n
        for c in self.cosets:
            if i in c:
                return c
        raise ValueError(f"{i} not found")  # unreachable

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "cosets": [list(c) for c in self.cosets]}


def cyclotomic_cosets(n: int, q: int) -> CosetPartition:
    """Orbits of i -> q*i mod n, sorted by smallest representative."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    seen = [False] * n
    cosets = []
    for start in range(n):
        if seen[start]:
            continue
        orb = []
        i = start
        while not seen[i]:
            seen[i] = True
            orb.append(i)
            i = i * q % n
        cosets.append(tuple(sorted(orb)))
    return CosetPartition(n, q, tuple(cosets))


def multiplier_apply(a: int, f: Poly, n: int) -> Poly:
    """mu_a on residues mod x^n - 1: exponent permutation i -> a*i mod n."""
    if gcd(a, n) != 1:
        raise NotUnit(f"{a} is not a unit mod {n}")
    out = [0] * n
    for i in range(min(len(f.coeffs), n)):
        out[a * i % n] = f.coeff(i)
    return Poly(f.field, out)


def multiplier_set(a: int, T: Iterable[int], n: int) -> frozenset:
    if gcd(a, n) != 1:
        raise NotUnit(f"{a} is not a unit mod {n}")
    return frozenset(a * i % n for i in T)


def minimal_polynomial(coset: Sequence[int], omega: gf.FieldElement,
                       ext: gf.FieldExtension) -> Poly:
    """prod_{i in coset} (x - omega^i), coefficients pulled back to GF(q)."""
    big = ext.field
    coeffs = [1]  # ascending, over the big field
    for i in coset:
        root = big.pow(omega.val, i)
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] = big.add(nxt[j + 1], c)
            nxt[j] = big.sub(nxt[j], big.mul(root, c))
        coeffs = nxt
    try:
        return Poly(ext.base, (ext.project(c) for c in coeffs))
    except CoefficientNotInBaseField:
        raise NotCosetClosed(
            f"{list(coset)} is not closed under multiplication by {ext.base.q}") from None


class CyclotomicRing:
    """GF(q)[x]/(x^n - 1) with cached factors, idempotents and codes."""

    def __init__(self, n: int, field: gf.FieldSpec,
                 root: Union[int, gf.FieldElement, None] = None):
        if gcd(n, field.q) != 1:
            raise NotCoprime(f"gcd({n}, {field.q}) != 1")
        self.n = n
        self.field = field
        self.cosets = cyclotomic_cosets(n, field.q)
        self.t = multiplicative_order(field.q % n, n) if n > 1 else 1
        self.extension = gf.build_extension(field, self.t)
        if root is None:
            self.omega = gf.nth_root_of_unity(self.extension.field, n)
        else:
            val = root.val if isinstance(root, gf.FieldElement) else root
            elem = self.extension.field.element(val)
            if n > 1 and elem.order() != n:
                raise ValueError(f"override root has order != {n}")
            if n == 1 and val != 1:
                raise ValueError("root must be 1 when n = 1")
            self.omega = elem
        self._factors = {}
        self._idempotents = {}
        self._codes = {}

    @property
    def key(self):
        return (self.n, self.field, self.omega.val)

    def __eq__(self, other):
        return isinstance(other, CyclotomicRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def factor(self, coset: Sequence[int]) -> Poly:
        coset = tuple(sorted(i % self.n for i in coset))
        if coset not in self._factors:
            self._factors[coset] = minimal_polynomial(coset, self.omega, self.extension)
        return self._factors[coset]

    def factors(self):
        """(coset, factor) pairs; the product over all pairs is x^n - 1."""
        return [(c, self.factor(c)) for c in self.cosets.cosets]

    def xn1(self) -> Poly:
        return Poly(self.field, [self.field.neg(1)] + [0] * (self.n - 1) + [1])

    def closure_check(self, T: Iterable[int]) -> frozenset:
        T = frozenset(i % self.n for i in T)
        for i in T:
            if i * self.cosets.q % self.n not in T:
                raise NotCosetClosed(f"{sorted(T)} is not a union of cosets mod {self.n}")
        return T

    def idempotent(self, T: Iterable[int]) -> Poly:
        """The unique e = e^2 with e(omega^i) = 0 on T and 1 off T."""
        T = self.closure_check(T)
        if T not in self._idempotents:
            F = self.field
            e = Poly.zero(F)
            M = self.xn1()
            for coset in self.cosets.cosets:
                if coset[0] in T:
                    continue
                f = self.factor(coset)
                h = M // f
                _, u, _ = h.ext_gcd(f)  # u*h = 1 mod f
                e = (e + (h * u)).mod_xn1(self.n)
            self._idempotents[T] = e
        return self._idempotents[T]

    def jbar(self) -> Poly:
        """(1/n)(1 + x + ... + x^(n-1)): the repetition-code idempotent."""
        F = self.field
        ninv = F.inv(F.from_int(self.n))
        return Poly(F, [ninv] * self.n)

    def code(self, T: Iterable[int]):
        from .cyclic import CyclicCode
        T = self.closure_check(T)
        if T not in self._codes:
            self._codes[T] = CyclicCode(self, T)
        return self._codes[T]


_ring_cache: dict = {}


def cyclotomic_ring(n: int, field: gf.FieldSpec,
                    root: Union[int, gf.FieldElement, None] = None) -> CyclotomicRing:
    rv = root.val if isinstance(root, gf.FieldElement) else root
    key = (n, field, rv)
    if key not in _ring_cache:
        _ring_cache[key] = CyclotomicRing(n, field, root)
    return _ring_cache[key]


def factor_xn1(n: int, field: gf.FieldSpec, root=None):
    """Factor x^n - 1 into the minimal polynomials of the cosets."""
    return cyclotomic_ring(n, field, root).factors()


def idempotent_from_defining_set(n: int, field: gf.FieldSpec, T, root=None) -> Poly:
    return cyclotomic_ring(n, field, root).idempotent(T)
