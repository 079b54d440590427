"""Splittings of Z_n and the four polyadic code families over GF(q).

A splitting is a partition Z_n = S_1 | ... | S_m | S_inf into coset unions
cycled by a multiplier mu_a (S_inf fixed, 0 in S_inf).  The search is
exhaustive over units a: the multiplier permutes the cyclotomic cosets, and
each mu_a-orbit either lands in S_inf or (when m divides its length) is
dealt cyclically into the classes.  Existence theory is replaced wholesale
by this search; n is capped to keep it desk-scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from . import gf
from .polyring import Poly, cyclotomic_cosets, cyclotomic_ring, multiplier_apply
from .errors import NotCoprime

N_LIMIT = 4096


@dataclass(frozen=True)
class Splitting:
    """Z_n = S_1 | ... | S_m | S_inf with multiplier a (Eq-style data)."""

    n: int
    q: int
    m: int
    a: int
    classes: tuple  # m tuples of sorted residues
    s_inf: tuple

    @property
    def s_inf_prime(self) -> tuple:
        return tuple(i for i in self.s_inf if i != 0)

    def validate(self):
        cover = sorted(itertools.chain(self.s_inf, *self.classes))
        assert cover == list(range(self.n)), "classes do not partition Z_n"
        assert 0 in self.s_inf
        assert all(self.classes), "empty splitting class"
        part = cyclotomic_cosets(self.n, self.q)
        for block in (*self.classes, self.s_inf):
            bs = set(block)
            assert all(set(part.coset_of(i)) <= bs for i in block), "class not coset-closed"
        for i, cls in enumerate(self.classes):
            img = {self.a * x % self.n for x in cls}
            assert img == set(self.classes[(i + 1) % self.m]), "multiplier does not cycle classes"
        assert {self.a * x % self.n for x in self.s_inf} == set(self.s_inf)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "m": self.m, "a": self.a,
                "S": [list(c) for c in self.classes], "S_inf": list(self.s_inf)}

    @staticmethod
    def from_json(obj) -> "Splitting":
        return Splitting(obj["n"], obj["q"], obj["m"], obj["a"],
                         tuple(tuple(sorted(c)) for c in obj["S"]),
                         tuple(sorted(obj["S_inf"])))


def _coset_orbits(part, a: int):
    """Orbits of mu_a on the cosets, as lists of coset indices."""
    n = part.n
    index_of = {c[0]: i for i, c in enumerate(part.cosets)}
    perm = []
    for c in part.cosets:
        img = sorted(x * a % n for x in c)
        perm.append(index_of[min(img)])
    seen = [False] * len(part.cosets)
    orbits = []
    for start in range(len(part.cosets)):
        if seen[start]:
            continue
        orb = []
        i = start
        while not seen[i]:
            seen[i] = True
            orb.append(i)
            i = perm[i]
        orbits.append(orb)
    return orbits


def iter_splittings(n: int, q: int, m: int, a: Optional[int] = None) -> Iterator[Splitting]:
    """Deterministic enumeration; duplicates equal up to class rotation removed.

    Every mu_a-orbit of cosets is either assigned wholly to S_inf or, when m
    divides its length, dealt cyclically into the classes starting at a free
    offset.  Assignments with all orbits distributed come first.  Classes are
    canonically rotated so S_1 holds the smallest distributed residue.
    """
    if n < 1 or n > N_LIMIT:
        raise ValueError(f"n must be in 1..{N_LIMIT}")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    part = cyclotomic_cosets(n, q)
    cands = [a] if a is not None else [u for u in range(2, n) if gcd(u, n) == 1]
    seen = set()
    for cand in cands:
        if gcd(cand, n) != 1:
            from .errors import NotUnit
            raise NotUnit(f"{cand} is not a unit mod {n}")
        orbits = _coset_orbits(part, cand)
        moving = [o for o in orbits if len(o) > 1]
        fixed = [o[0] for o in orbits if len(o) == 1]
        # per-orbit choices: offsets 0..m-1 when m | length, then S_inf
        choice_lists = []
        for o in moving:
            opts = list(range(m)) if len(o) % m == 0 else []
            opts.append(-1)  # -1 = park the whole orbit in S_inf
            choice_lists.append(opts)
        for choices in itertools.product(*choice_lists):
            classes = [set() for _ in range(m)]
            inf = set()
            for idx in fixed:
                inf.update(part.cosets[idx])
            for o, ch in zip(moving, choices):
                if ch == -1:
                    for idx in o:
                        inf.update(part.cosets[idx])
                else:
                    for j, idx in enumerate(o):
                        classes[(ch + j) % m].update(part.cosets[idx])
            if any(not c for c in classes):
                continue
            # canonical rotation: S_1 contains the smallest distributed residue
            lead = min(min(c) for c in classes)
            shift = next(i for i, c in enumerate(classes) if lead in c)
            classes = classes[shift:] + classes[:shift]
            key = (tuple(tuple(sorted(c)) for c in classes), tuple(sorted(inf)))
            if key in seen:
                continue
            seen.add(key)
            yield Splitting(n, q, m, cand, key[0], key[1])


def find_splittings(n: int, q: int, m: int, a: Optional[int] = None,
                    limit: Optional[int] = None) -> list:
    it = iter_splittings(n, q, m, a)
    if limit is None:
        return list(it)
    return list(itertools.islice(it, limit))


class PolyadicFamily:
    """The 4m polyadic codes attached to one splitting.

    Defining sets (1-based index i):
      D_i  : S_i | S_inf'          (odd-like)
      D'_i : (S_i | S_inf)^c       (odd-like)
      C_i  : (S_i | S_inf')^c      (even-like)
      C'_i : S_i | S_inf           (even-like)
    """

    def __init__(self, splitting: Splitting, field: gf.FieldSpec, root=None):
        if field.q != splitting.q:
            raise ValueError("field size does not match the splitting")
        self.splitting = splitting
        self.field = field
        self.ring = cyclotomic_ring(splitting.n, field, root)
        n, m = splitting.n, splitting.m
        zn = frozenset(range(n))
        sp = frozenset(splitting.s_inf_prime)
        sf = frozenset(splitting.s_inf)
        self.D = tuple(self.ring.code(frozenset(S) | sp) for S in splitting.classes)
        self.Dp = tuple(self.ring.code(zn - (frozenset(S) | sf)) for S in splitting.classes)
        self.C = tuple(self.ring.code(zn - (frozenset(S) | sp)) for S in splitting.classes)
        self.Cp = tuple(self.ring.code(frozenset(S) | sf) for S in splitting.classes)
        self._verify_chain()

    @property
    def m(self) -> int:
        return self.splitting.m

    @property
    def n(self) -> int:
        return self.splitting.n

    # 1-based idempotent accessors, matching the classical notation
    def e(self, i: int) -> Poly:
        return self.C[i - 1].idempotent

    def ep(self, i: int) -> Poly:
        return self.Cp[i - 1].idempotent

    def d(self, i: int) -> Poly:
        return self.D[i - 1].idempotent

    def dp(self, i: int) -> Poly:
        return self.Dp[i - 1].idempotent

    def _verify_chain(self):
        # mu_a(e_i) = e_{i-1} cyclically, and likewise for the other three
        a, n, m = self.splitting.a, self.n, self.m
        for fam in (self.C, self.Cp, self.D, self.Dp):
            for i in range(m):
                moved = multiplier_apply(a, fam[i].idempotent, n)
                assert moved == fam[(i - 1) % m].idempotent, \
                    "multiplier chain broken; splitting is inconsistent"

    def __repr__(self):
        s = self.splitting
        return f"PolyadicFamily(n={s.n}, q={s.q}, m={s.m}, a={s.a})"


def build_family(splitting: Splitting, field: gf.FieldSpec, root=None) -> PolyadicFamily:
    """All 4m codes and idempotents for one splitting, chain-verified."""
    return PolyadicFamily(splitting, field, root)
