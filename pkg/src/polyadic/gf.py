"""Finite fields GF(p^s), their extensions and roots of unity.

Elements travel as packed integers in 0..q-1: the base-p digits of the
packed value are the ascending coefficients of the residue polynomial.
Small fields (q <= _TABLE_LIMIT) build dense numpy operation tables, which
the linear-algebra and enumeration layers index directly; larger fields
fall back to digit arithmetic.  Field sizes must stay inside a machine
word: this is a desk-scale library, not a bignum one.
"""

from __future__ import annotations

import functools
from math import gcd
from typing import Optional, Sequence

import numpy as np

from . import _numtheory
from .errors import (
    CoefficientNotInBaseField,
    FieldTooLarge,
    NotPrime,
    OrderNotDivisible,
    ReducibleModulus,
)

_TABLE_LIMIT = 1024  # dense q x q tables only below this
_WORD_LIMIT = 2**63 - 1


# ---------------------------------------------------------------------------
# digit packing and polynomial arithmetic over GF(p) (ascending int lists)

def _digits(val: int, p: int, s: int) -> list:
    out = []
    for _ in range(s):
        out.append(val % p)
        val //= p
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    val = 0
    for d in reversed(ds):
        val = val * p + d
    return val


def _pp_trim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _pp_trim(out)


def _pp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(_pp_trim(a)) - 1 >= db and a:
        da = len(a) - 1
        c = a[-1] * inv_lb % p
        q[da - db] = c
        for i, x in enumerate(b):
            a[da - db + i] = (a[da - db + i] - c * x) % p
        _pp_trim(a)
    return _pp_trim(q), a


def _pp_mod(a, b, p):
    return _pp_divmod(a, b, p)[1]


def _pp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pp_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _pp_powmod(base, e: int, f, p):
    result = [1]
    base = _pp_mod(base, f, p)
    while e:
        if e & 1:
            result = _pp_mod(_pp_mul(result, base, p), f, p)
        base = _pp_mod(_pp_mul(base, base, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Monic f over GF(p): x^(p^s) = x mod f and gcd(x^(p^(s/r)) - x, f) = 1."""
    s = len(f) - 1
    if s == 0:
        return False
    x = [0, 1]
    if _pp_powmod(x, p**s, f, p) != _pp_mod(x, f, p):
        return False
    for r in _numtheory.prime_factors(s):
        g = _pp_powmod(x, p ** (s // r), f, p)
        g = _pp_trim([(a - b) % p for a, b in
                      zip(g + [0] * 2, [0, 1] + [0] * len(g))])
        if len(_pp_gcd(g, f, p)) > 1:
            return False
    return True


def _find_modulus(p: int, s: int) -> tuple:
    # Deterministic scan: ascending packed value of the non-leading coefficients.
    for val in range(p**s):
        f = _digits(val, p, s) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise ReducibleModulus(f"no irreducible polynomial of degree {s} over GF({p})")


# ---------------------------------------------------------------------------

class FieldElement:
    """A single value of a FieldSpec; immutable, arithmetic via dunders."""

    __slots__ = ("field", "val")

    def __init__(self, field: "FieldSpec", val: int):
        self.field = field
        self.val = val

    @property
    def coeffs(self) -> tuple:
        return tuple(_digits(self.val, self.field.p, self.field.s))

    def order(self) -> int:
        if self.val == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        x, t = self.val, 1
        while x != 1:
            x = self.field.mul(x, self.val)
            t += 1
        return t

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.val
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.val, self.field.inv(v)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.val, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.val))

    def __repr__(self):
        return f"FieldElement({self.field.p}^{self.field.s}, {self.field.elem_str(self.val)})"


class FieldSpec:
    """GF(p^s) with a fixed irreducible modulus and a verified generator.

    Construction is deterministic: the same (p, s) always yields the same
    modulus and the same primitive element, so every derived object
    (idempotents, code parameters, reports) is byte-stable across runs.
    """

    def __init__(self, p: int, s: int, modulus: Optional[Sequence[int]] = None):
        if p < 2 or not _numtheory.is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if s < 1:
            raise ValueError("extension degree must be >= 1")
        if p**s > _WORD_LIMIT:
            raise FieldTooLarge(f"GF({p}^{s}) exceeds the machine-word limit")
        self.p = p
        self.s = s
        self.q = p**s
        if modulus is None:
            modulus = _find_modulus(p, s)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != s + 1 or modulus[-1] != 1:
                raise ReducibleModulus("modulus must be monic of degree s")
            if not _is_irreducible(list(modulus), p):
                raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
        self.modulus = tuple(modulus)
        # x^(s+i) mod modulus for on-the-fly reduction of products
        self._xpows = []
        cur = [(-c) % p for c in self.modulus[:-1]]
        for _ in range(s - 1):
            self._xpows.append(list(cur))
            cur = [0] + cur
            if len(cur) > s:
                lead = cur.pop()
                cur = [(a + lead * b) % p for a, b in zip(cur, self._xpows[0])]
        self._xpows.insert(0, None)  # unused slot to align indexing
        self._tables = None
        self._dlog = None
        self.generator = self._find_generator()

    # -- scalar arithmetic on packed ints ----------------------------------

    def add(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a + b) % self.p
        p = self.p
        return _undigits([(x + y) % p for x, y in
                          zip(_digits(a, p, self.s), _digits(b, p, self.s))], p)

    def sub(self, a: int, b: int) -> int:
        if self.s == 1:
            return (a - b) % self.p
        p = self.p
        return _undigits([(x - y) % p for x, y in
                          zip(_digits(a, p, self.s), _digits(b, p, self.s))], p)

    def neg(self, a: int) -> int:
        if self.s == 1:
            return (-a) % self.p
        p = self.p
        return _undigits([(-x) % p for x in _digits(a, p, self.s)], p)

    def mul(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        p, s = self.p, self.s
        prod = _pp_mul(_digits(a, p, s), _digits(b, p, s), p)
        if len(prod) > s:
            red = list(prod[:s])
            red += [0] * (s - len(red))
            for i in range(s, len(prod)):
                c = prod[i]
                if c:
                    xp = self._xpows[i - s + 1]
                    for j, v in enumerate(xp):
                        red[j] = (red[j] + c * v) % p
            prod = red
        return _undigits(prod, p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.s == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if self.s == 1:
            return pow(a, e % (self.p - 1) if a else e, self.p) if e >= 0 else pow(self.inv(a), -e, self.p)
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 0 if e else 1
        e %= self.q - 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def _find_generator(self) -> int:
        fac = _numtheory.prime_factors(self.q - 1) if self.q > 2 else []
        for cand in range(1, self.q):
            if all(self.pow(cand, (self.q - 1) // r) != 1 for r in fac):
                return cand
        raise ArithmeticError("no generator found")  # unreachable for a field

    def element(self, val: int) -> FieldElement:
        if not 0 <= val < self.q:
            raise ValueError(f"value {val} outside GF({self.q})")
        return FieldElement(self, val)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.q))

    def from_int(self, c: int) -> int:
        """Packed value of the constant c * 1 (integers embed through GF(p))."""
        return c % self.p

    def tables(self):
        """(add, mul, neg, inv) as numpy int32 arrays; None above _TABLE_LIMIT."""
        if self.q > _TABLE_LIMIT:
            return None
        if self._tables is None:
            q, p = self.q, self.p
            if self.s == 1:
                idx = np.arange(q, dtype=np.int64)
                add = (idx[:, None] + idx[None, :]) % p
                mul = (idx[:, None] * idx[None, :]) % p
                neg = (-idx) % p
                inv = np.zeros(q, dtype=np.int64)
                inv[1:] = [pow(int(v), p - 2, p) for v in idx[1:]]
            else:
                digs = np.array([_digits(v, p, self.s) for v in range(q)], dtype=np.int64)
                weights = p ** np.arange(self.s, dtype=np.int64)
                add = ((digs[:, None, :] + digs[None, :, :]) % p) @ weights
                neg = ((-digs) % p) @ weights
                # discrete logs off the generator give the multiplication table
                dlog = np.full(q, -1, dtype=np.int64)
                x = 1
                for e in range(q - 1):
                    dlog[x] = e
                    x = self.mul(x, self.generator)
                exp = np.zeros(2 * (q - 1), dtype=np.int64)
                x = 1
                for e in range(q - 1):
                    exp[e] = x
                    exp[e + q - 1] = x
                    x = self.mul(x, self.generator)
                mul = np.zeros((q, q), dtype=np.int64)
                nz = np.arange(1, q)
                mul[1:, 1:] = exp[dlog[nz][:, None] + dlog[nz][None, :]]
                inv = np.zeros(q, dtype=np.int64)
                inv[1:] = exp[(q - 1 - dlog[nz]) % (q - 1)]
            self._tables = (add.astype(np.int32), mul.astype(np.int32),
                            neg.astype(np.int32), inv.astype(np.int32))
        return self._tables

    def elem_str(self, val: int) -> str:
        if self.s == 1:
            return str(val)
        ds = _digits(val, self.p, self.s)
        terms = []
        for i in range(self.s - 1, -1, -1):
            c = ds[i]
            if c == 0:
                continue
            sym = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(sym)
            else:
                terms.append(f"{c}{sym}")
        return "+".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"p": self.p, "s": self.s, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        return build_field(obj["p"], obj.get("s", 1), obj.get("modulus"))

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus))

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.s})" if self.s > 1 else f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, s: int, modulus: Optional[tuple]) -> FieldSpec:
    return FieldSpec(p, s, modulus)


def build_field(p: int, s: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """GF(p^s) with a deterministic irreducible modulus and primitive element."""
    return _cached_field(p, s, tuple(modulus) if modulus is not None else None)


def nth_root_of_unity(field: FieldSpec, n: int) -> FieldElement:
    """The conventional primitive n-th root of unity g^((q-1)/n)."""
    if n < 1 or (field.q - 1) % n != 0:
        raise OrderNotDivisible(f"{n} does not divide {field.q} - 1")
    return field.element(field.pow(field.generator, (field.q - 1) // n))


class FieldExtension:
    """GF(q^t) over GF(q) with an explicit embedding table for GF(q)."""

    def __init__(self, base: FieldSpec, field: FieldSpec, image: Sequence[int]):
        self.base = base
        self.field = field
        self.t = field.s // base.s
        self.image = tuple(image)
        self._back = {v: i for i, v in enumerate(self.image)}

    def embed(self, val: int) -> int:
        return self.image[val]

    def project(self, big_val: int) -> int:
        try:
            return self._back[big_val]
        except KeyError:
            raise CoefficientNotInBaseField(
                f"{big_val} is not in the embedded GF({self.base.q})") from None

    def __repr__(self):
        return f"FieldExtension(GF({self.base.q}) -> GF({self.field.q}))"


def _subfield_embedding(base: FieldSpec, big: FieldSpec) -> list:
    """Image table of GF(q) inside GF(q^t), t = big.s / base.s.

    The subfield is the kernel of Frobenius^s - id (an F_p-linear map); the
    base modulus has exactly s roots there and the smallest packed root
    fixes the embedding deterministically.
    """
    p, s, st = base.p, base.s, big.s
    if s == 1:
        return list(range(p))
    # matrix of z -> z^p on the basis 1, x, ..., x^(st-1), columns = images
    F = np.zeros((st, st), dtype=np.int64)
    for i in range(st):
        img = big.pow(_undigits([0] * i + [1], p), p)
        F[:, i] = _digits(img, p, st)
    Fs = np.eye(st, dtype=np.int64)
    for _ in range(s):
        Fs = (F @ Fs) % p
    A = (Fs - np.eye(st, dtype=np.int64)) % p
    kern = _nullspace_modp(A, p)
    if len(kern) != s:
        raise ArithmeticError("subfield has wrong dimension")
    # enumerate the q subfield elements, pick the smallest root of the base modulus
    roots = []
    for val in range(base.q):
        cs = _digits(val, p, s)
        vec = np.zeros(st, dtype=np.int64)
        for c, b in zip(cs, kern):
            vec = (vec + c * b) % p
        z = _undigits(list(vec), p)
        acc = 0
        zp = 1
        for c in base.modulus:
            acc = big.add(acc, big.mul(c % p, zp))
            zp = big.mul(zp, z)
        if acc == 0:
            roots.append(z)
    if not roots:
        raise ArithmeticError("base modulus has no root in the extension")
    rho = min(roots)
    image = []
    for val in range(base.q):
        cs = _digits(val, p, s)
        acc = 0
        rp = 1
        for c in cs:
            acc = big.add(acc, big.mul(c, rp))
            rp = big.mul(rp, rho)
        image.append(acc)
    return image


def _nullspace_modp(A: np.ndarray, p: int) -> list:
    """Basis vectors of the null space of A over GF(p)."""
    A = A.copy() % p
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        rows = np.nonzero(A[r:, c])[0]
        if len(rows) == 0:
            continue
        i = rows[0] + r
        A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        for j in range(m):
            if j != r and A[j, c]:
                A[j] = (A[j] - A[j, c] * A[r]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-A[i, f]) % p
        basis.append(v)
    return basis


@functools.lru_cache(maxsize=None)
def _cached_extension(base: FieldSpec, t: int) -> FieldExtension:
    if t == 1:
        return FieldExtension(base, base, list(range(base.q)))
    big = build_field(base.p, base.s * t)
    return FieldExtension(base, big, _subfield_embedding(base, big))


def build_extension(base: FieldSpec, t: int) -> FieldExtension:
    """GF(q^t) together with the embedding of GF(q); t = 1 is the identity."""
    if t < 1:
        raise ValueError("extension degree must be >= 1")
    return _cached_extension(base, t)
