"""Finite fields GF(p^k) and affine planes AG(2, q), built from scratch.

Fields are represented on the element set 0..q-1.  For prime q the
element i is the residue i mod p; for prime powers an element encodes the
coefficient vector of a polynomial over GF(p) in base-p digits
(low-order digit = constant term), reduced modulo the lexicographically
first monic irreducible polynomial of the right degree.  Add/mul tables
are precomputed, which is cheap for the supported range q <= 64.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [
    "MAX_FIELD_SIZE",
    "prime_power_decompose",
    "is_prime_power",
    "FiniteField",
    "make_field",
    "AffinePlane",
    "make_affine_plane",
    "q_for_ramsey",
    "q_for_partition",
]

MAX_FIELD_SIZE = 64


def prime_power_decompose(q: int) -> tuple[int, int] | None:
    """(p, k) with q = p**k and p prime, or None if q is not a prime power."""
    if q < 2:
        raise DomainError(f"prime power query needs q >= 2, got {q}")
    p = None
    for cand in range(2, q + 1):
        if cand * cand > q and p is None:
            p = q  # q itself is prime
            break
        if q % cand == 0:
            p = cand
            break
    assert p is not None
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    return (p, k) if rest == 1 else None


def is_prime_power(q: int) -> bool:
    return prime_power_decompose(q) is not None


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); polynomials are low-endian coefficient tuples


def _poly_from_int(m: int, p: int, k: int) -> tuple[int, ...]:
    digits = []
    for _ in range(k):
        digits.append(m % p)
        m //= p
    return tuple(digits)


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = list(a)
    _poly_trim(a)
    d = len(mod) - 1
    while len(a) - 1 >= d and a:
        lead = a[-1]
        shift = len(a) - 1 - d
        for i, c in enumerate(mod):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _poly_trim(a)
    return a


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for m in range(p ** d):
            divisor = list(_poly_from_int(m, p, d)) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree k over GF(p).

    Candidates x^k + c_{k-1}x^{k-1} + ... + c_0 are scanned in increasing
    order of the base-p integer encoding of (c_0, ..., c_{k-1}).
    """
    for m in range(p ** k):
        lower = _poly_from_int(m, p, k)
        poly = list(lower) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class FiniteField:
    """GF(q) on elements 0..q-1 with precomputed operation tables."""

    q: int
    p: int
    k: int
    modulus: tuple[int, ...] | None
    _add: tuple[tuple[int, ...], ...] = field(repr=False)
    _mul: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        row = self._add[a]
        for b in range(self.q):
            if row[b] == 0:
                return b
        raise AssertionError("element without additive inverse")

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self.neg(b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative inverse")
        row = self._mul[a]
        for b in range(1, self.q):
            if row[b] == 1:
                return b
        raise AssertionError("nonzero element without inverse")

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out


_FIELD_CACHE: dict[int, FiniteField] = {}


def make_field(q: int) -> FiniteField:
    """Construct GF(q); q must be a prime power with q <= MAX_FIELD_SIZE."""
    if q in _FIELD_CACHE:
        return _FIELD_CACHE[q]
    if q < 2 or q > MAX_FIELD_SIZE:
        raise DomainError(f"field size must be in [2, {MAX_FIELD_SIZE}], got {q}")
    pk = prime_power_decompose(q)
    if pk is None:
        raise DomainError(f"{q} is not a prime power")
    p, k = pk
    if k == 1:
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
        fieldobj = FiniteField(q, p, 1, None, add, mul)
    else:
        modulus = list(_first_irreducible(p, k))
        polys = [list(_poly_from_int(m, p, k)) for m in range(q)]

        def encode(poly: list[int]) -> int:
            out = 0
            for c in reversed(poly):
                out = out * p + c
            return out

        add_rows = []
        mul_rows = []
        for a in range(q):
            add_row = []
            mul_row = []
            for b in range(q):
                s = [(x + y) % p for x, y in zip(
                    polys[a] + [0] * k, polys[b] + [0] * k)][:k]
                add_row.append(encode(_poly_trim(list(s))))
                prod = _poly_mod(_poly_mul(polys[a], polys[b], p), modulus, p)
                mul_row.append(encode(prod))
            add_rows.append(tuple(add_row))
            mul_rows.append(tuple(mul_row))
        fieldobj = FiniteField(q, p, k, tuple(modulus), tuple(add_rows), tuple(mul_rows))
    _FIELD_CACHE[q] = fieldobj
    return fieldobj


# ---------------------------------------------------------------------------
# affine planes


@dataclass(frozen=True)
class AffinePlane:
    """AG(2, q): q^2 points, q^2 + q lines, q + 1 parallel classes.

    Point (x, y) has index x*q + y.  Parallel classes 0..q-1 collect the
    lines y = m*x + b of slope m; class q holds the vertical lines x = c.
    """

    q: int
    field: FiniteField
    lines: tuple[frozenset[int], ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def point_count(self) -> int:
        return self.q * self.q

    def point_index(self, x: int, y: int) -> int:
        return x * self.q + y

    def class_of_pair(self, p1: int, p2: int) -> int:
        """Parallel-class index of the unique line through two distinct points."""
        if p1 == p2:
            raise DomainError("two distinct points are required")
        f = self.field
        q = self.q
        x1, y1 = divmod(p1, q)
        x2, y2 = divmod(p2, q)
        if x1 == x2:
            return q
        slope = f.div(f.sub(y2, y1), f.sub(x2, x1))
        return slope

    def line_through(self, p1: int, p2: int) -> tuple[int, int]:
        """(line index, class index) for the unique line through two points."""
        cls = self.class_of_pair(p1, p2)
        f = self.field
        q = self.q
        x1, y1 = divmod(p1, q)
        if cls == q:
            return self.classes[q][x1], q
        # b = y1 - slope*x1 identifies the line within its class
        b = f.sub(y1, f.mul(cls, x1))
        return self.classes[cls][b], cls


def make_affine_plane(q: int) -> AffinePlane:
    """Build AG(2, q) over GF(q)."""
    f = make_field(q)
    lines: list[frozenset[int]] = []
    classes: list[tuple[int, ...]] = []
    for m in range(q):
        ids = []
        for b in range(q):
            pts = frozenset(
                x * q + f.add(f.mul(m, x), b) for x in range(q)
            )
            ids.append(len(lines))
            lines.append(pts)
        classes.append(tuple(ids))
    vertical_ids = []
    for c in range(q):
        pts = frozenset(c * q + y for y in range(q))
        vertical_ids.append(len(lines))
        lines.append(pts)
    classes.append(tuple(vertical_ids))
    return AffinePlane(q, f, tuple(lines), tuple(classes))


# ---------------------------------------------------------------------------
# parameter selection for the coloring constructions


def q_for_ramsey(r: int) -> int:
    """Smallest prime power in [ceil((r+1)/2), r-1]; needs r >= 3.

    Bertrand's postulate guarantees a prime in the window, so the scan
    cannot run off the end.
    """
    if r < 3:
        raise DomainError(f"q_for_ramsey needs r >= 3, got {r}")
    lo = (r + 2) // 2
    for q in range(lo, r):
        if is_prime_power(q):
            return q
    raise AssertionError(f"no prime power in [{lo}, {r - 1}]")


def q_for_partition(r: int) -> int:
    """Smallest prime power >= r; needs r >= 2.  Always at most 2r - 2."""
    if r < 2:
        raise DomainError(f"q_for_partition needs r >= 2, got {r}")
    q = r
    while not is_prime_power(q):
        q += 1
    assert q <= 2 * r - 2, f"prime power gap violation at r={r}"
    return q
