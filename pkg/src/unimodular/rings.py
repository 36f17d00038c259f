"""Exact arithmetic over the supported quasi-Euclidean rings.

Four kinds of ring are supported: the integers, the integers modulo ``n``,
polynomials over a prime field, and finite products of these.  Ring objects
are stateless descriptors; they act on raw *canonical values*:

* ``Integers`` and ``IntegersMod``: Python ``int`` (least nonnegative residue
  for ``IntegersMod``);
* ``PolynomialsOverPrimeField``: ``tuple`` of coefficients in ``range(p)``,
  constant term first, no trailing zeros (zero is ``()``);
* ``Product``: ``tuple`` of component values.

Ideals are always principal and are identified with a canonical generator:
nonnegative integers, monic polynomials, divisors ``0 <= g < n`` of ``n`` for
``IntegersMod(n)`` (``0`` is the zero ideal), componentwise for products.

:class:`RingElement` wraps a value together with its ring for the public,
type-checked surface (mixing rings raises :class:`RingMismatch`).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Any, Iterator

from .errors import NotAUnit, RingMismatch, RowTooShort, Unsupported
from .scripts import ElementaryScript


def _int_xgcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Ring:
    """Common interface.  Subclasses are frozen dataclasses (hashable, comparable)."""

    kind = "abstract"
    euclidean = False

    # construction helpers
    def element(self, x) -> "RingElement":
        return RingElement(self, x)

    def ideal(self, x) -> "PrincipalIdeal":
        return PrincipalIdeal(self, x)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def ideal_generator(self, a):
        return self.associate(a)[0]

    def is_unit(self, a) -> bool:
        return self.ideal_generator(a) == self.one

    def unit_inverse(self, u):
        """Exact inverse of a unit of the ring itself."""
        return self.inverse_mod(u, self.zero)

    def ideal_sum(self, gens):
        g = self.zero
        for x in gens:
            g = self.xgcd(g, x)[0]
        return g

    def sort_key(self, a):
        return a

    def format(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class Integers(Ring):
    kind = "Z"
    euclidean = True
    zero = 0
    one = 1

    def canonical(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            raise TypeError(f"integer expected, got {a!r}")
        return a

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def associate(self, a):
        return (a, 1) if a >= 0 else (-a, -1)

    def divides(self, a, b) -> bool:
        return b == 0 if a == 0 else b % a == 0

    def xgcd(self, a, b):
        return _int_xgcd(a, b)

    def reduce(self, a, g):
        return a if g == 0 else a % g

    def inverse_mod(self, a, g):
        h, x, _ = _int_xgcd(a, g)
        if h != 1:
            raise NotAUnit(f"{a} is not a unit modulo {g}", gcd=h)
        return self.reduce(x, g)

    def residues(self, g) -> Iterator[int]:
        if g == 0:
            raise Unsupported("Z/(0) is infinite")
        return iter(range(g))

    def residue_count(self, g):
        return None if g == 0 else g

    def units(self, g):
        if g == 0:
            return [1, -1]
        return [r for r in range(g) if gcd(r, g) == 1]

    def unit_count(self, g):
        return 2 if g == 0 else euler_phi(g)

    def additive_generators(self, g):
        return [1]

    def measure(self, a):
        return abs(a)

    def divmod(self, a, b):
        return divmod(a, b)

    def lift(self, a):
        return self, a

    def sort_key(self, a):
        return (abs(a), a < 0)

    def describe(self):
        return {"kind": "Z"}

    def to_json(self, a):
        return str(a)

    def from_json(self, obj):
        if isinstance(obj, str):
            return int(obj.strip())
        return self.canonical(obj)


@dataclass(frozen=True)
class IntegersMod(Ring):
    modulus: int
    kind = "Zn"
    euclidean = True
    zero = 0

    def __post_init__(self):
        if isinstance(self.modulus, bool) or not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError("IntegersMod modulus must be an integer >= 2")

    @property
    def one(self):
        return 1

    def canonical(self, a):
        if isinstance(a, bool) or not isinstance(a, int):
            raise TypeError(f"integer expected, got {a!r}")
        return a % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def associate(self, a):
        n = self.modulus
        g = gcd(a, n)
        if g == n:
            return 0, 1
        m = n // g
        u = pow(a // g, -1, m) if m > 1 else 0
        while gcd(u, n) != 1:
            u += m
        return g, u % n

    def _order(self, g):
        return g or self.modulus

    def divides(self, a, b) -> bool:
        n = self.modulus
        return gcd(b, n) % gcd(a, n) == 0

    def xgcd(self, a, b):
        g0, x, y = _int_xgcd(a, b)
        g, u = self.associate(g0 % self.modulus)
        return g, u * x % self.modulus, u * y % self.modulus

    def reduce(self, a, g):
        return a % self._order(g)

    def inverse_mod(self, a, g):
        m = self._order(g)
        h = gcd(a, m)
        if h != 1:
            raise NotAUnit(f"{a} is not a unit modulo {m}", gcd=h)
        return pow(a, -1, m) if m > 1 else 0

    def residues(self, g):
        return iter(range(self._order(g)))

    def residue_count(self, g):
        return self._order(g)

    def units(self, g):
        m = self._order(g)
        return [r for r in range(m) if gcd(r, m) == 1]

    def unit_count(self, g):
        return euler_phi(self._order(g))

    def additive_generators(self, g):
        return [1]

    def measure(self, a):
        return a

    def divmod(self, a, b):
        return divmod(a, b)

    def lift(self, a):
        return Integers(), a

    def describe(self):
        return {"kind": "Zn", "n": self.modulus}

    def to_json(self, a):
        return str(a)

    def from_json(self, obj):
        if isinstance(obj, str):
            return self.canonical(int(obj.strip()))
        return self.canonical(obj)


# polynomial helpers; coefficients already reduced mod p
def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class PolynomialsOverPrimeField(Ring):
    characteristic: int
    kind = "GF_p_x"
    euclidean = True
    zero = ()

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError("characteristic must be prime")

    @property
    def one(self):
        return (1,)

    @property
    def x(self):
        return (0, 1)

    def canonical(self, a):
        if isinstance(a, int) and not isinstance(a, bool):
            a = (a,)
        p = self.characteristic
        return _ptrim(int(c) % p for c in a)

    def add(self, a, b):
        p = self.characteristic
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return _ptrim(out)

    def neg(self, a):
        p = self.characteristic
        return tuple(-c % p for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        p = self.characteristic
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _ptrim(c % p for c in out)

    def scale(self, c, a):
        p = self.characteristic
        return _ptrim(c * x % p for x in a)

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.characteristic
        inv = pow(b[-1], -1, p)
        r = list(a)
        db = len(b) - 1
        q = [0] * max(len(a) - db, 0)
        for k in range(len(a) - 1, db - 1, -1):
            c = r[k] * inv % p
            if c:
                q[k - db] = c
                for i, y in enumerate(b):
                    r[k - db + i] = (r[k - db + i] - c * y) % p
        return _ptrim(q), _ptrim(r[:db] if db else [])

    def measure(self, a):
        return len(a) - 1

    def associate(self, a):
        if not a:
            return (), (1,)
        u = pow(a[-1], -1, self.characteristic)
        return self.scale(u, a), (u,)

    def divides(self, a, b) -> bool:
        if not a:
            return not b
        return not self.divmod(b, a)[1]

    def xgcd(self, a, b):
        r0, r1 = a, b
        s0, s1, t0, t1 = (1,), (), (), (1,)
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        if not r0:
            return (), (1,), ()
        g, u = self.associate(r0)
        return g, self.mul(u, s0), self.mul(u, t0)

    def reduce(self, a, g):
        return a if not g else self.divmod(a, g)[1]

    def inverse_mod(self, a, g):
        h, x, _ = self.xgcd(a, g)
        if h != (1,):
            raise NotAUnit(f"{self.format(a)} is not a unit modulo {self.format(g)}",
                           gcd=self.format(h))
        return self.reduce(x, g)

    def residues(self, g):
        if not g:
            raise Unsupported("GF(p)[x]/(0) is infinite")
        p, d = self.characteristic, len(g) - 1
        return (_ptrim(c) for c in itertools.product(range(p), repeat=d))

    def residue_count(self, g):
        return None if not g else self.characteristic ** (len(g) - 1)

    def units(self, g):
        if not g:
            return [(c,) for c in range(1, self.characteristic)]
        if g == (1,):
            return [()]
        return [r for r in self.residues(g) if self.xgcd(r, g)[0] == (1,)]

    def unit_count(self, g):
        return len(self.units(g))

    def additive_generators(self, g):
        if not g:
            raise Unsupported("GF(p)[x] is not finitely generated as an additive group")
        return [tuple([0] * t + [1]) for t in range(len(g) - 1)]

    def lift(self, a):
        return self, a

    def sort_key(self, a):
        return (len(a), tuple(reversed(a)))

    def format(self, a):
        if not a:
            return "0"
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)

    def describe(self):
        return {"kind": "GF_p_x", "p": self.characteristic}

    def to_json(self, a):
        return list(a)

    def from_json(self, obj):
        if isinstance(obj, (list, tuple)):
            if any(isinstance(c, bool) or not isinstance(c, int) for c in obj):
                raise TypeError("polynomial coefficients must be integers")
            return self.canonical(obj)
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.canonical(obj)
        raise TypeError(f"polynomial coefficient list expected, got {obj!r}")


@dataclass(frozen=True, init=False)
class Product(Ring):
    """Finite direct product; nested products are flattened on construction."""

    factors: tuple
    kind = "product"

    def __init__(self, *factors):
        if len(factors) == 1 and isinstance(factors[0], (list, tuple)):
            factors = tuple(factors[0])
        flat = []
        for f in factors:
            if isinstance(f, Product):
                flat.extend(f.factors)
            elif isinstance(f, Ring):
                flat.append(f)
            else:
                raise TypeError(f"not a ring: {f!r}")
        if not flat:
            raise ValueError("Product needs at least one factor")
        object.__setattr__(self, "factors", tuple(flat))

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    def _map(self, name, *args):
        return tuple(getattr(f, name)(*xs) for f, *xs in zip(self.factors, *args))

    def canonical(self, a):
        if not isinstance(a, (list, tuple)) or len(a) != len(self.factors):
            raise TypeError(f"expected {len(self.factors)} components, got {a!r}")
        return self._map("canonical", a)

    def add(self, a, b):
        return self._map("add", a, b)

    def neg(self, a):
        return self._map("neg", a)

    def sub(self, a, b):
        return self._map("sub", a, b)

    def mul(self, a, b):
        return self._map("mul", a, b)

    def embed(self, c, x):
        """Element with ``x`` in component ``c`` and zero elsewhere."""
        return tuple(x if i == c else f.zero for i, f in enumerate(self.factors))

    def associate(self, a):
        pairs = [f.associate(x) for f, x in zip(self.factors, a)]
        return tuple(g for g, _ in pairs), tuple(u for _, u in pairs)

    def is_unit(self, a):
        return all(f.is_unit(x) for f, x in zip(self.factors, a))

    def divides(self, a, b):
        return all(f.divides(x, y) for f, x, y in zip(self.factors, a, b))

    def xgcd(self, a, b):
        parts = [f.xgcd(x, y) for f, x, y in zip(self.factors, a, b)]
        return tuple(tuple(p[i] for p in parts) for i in range(3))

    def reduce(self, a, g):
        return self._map("reduce", a, g)

    def inverse_mod(self, a, g):
        return self._map("inverse_mod", a, g)

    def residues(self, g):
        return itertools.product(*(f.residues(x) for f, x in zip(self.factors, g)))

    def residue_count(self, g):
        total = 1
        for f, x in zip(self.factors, g):
            c = f.residue_count(x)
            if c is None:
                return None
            total *= c
        return total

    def units(self, g):
        return list(itertools.product(*(f.units(x) for f, x in zip(self.factors, g))))

    def unit_count(self, g):
        total = 1
        for f, x in zip(self.factors, g):
            total *= f.unit_count(x)
        return total

    def additive_generators(self, g):
        return [self.embed(c, s)
                for c, (f, x) in enumerate(zip(self.factors, g))
                for s in f.additive_generators(x)]

    def lift(self, a):
        parts = [f.lift(x) for f, x in zip(self.factors, a)]
        return Product(*(r for r, _ in parts)), tuple(x for _, x in parts)

    def sort_key(self, a):
        return tuple(f.sort_key(x) for f, x in zip(self.factors, a))

    def format(self, a):
        return "(" + ", ".join(f.format(x) for f, x in zip(self.factors, a)) + ")"

    def describe(self):
        return {"kind": "product", "factors": [f.describe() for f in self.factors]}

    def to_json(self, a):
        return [f.to_json(x) for f, x in zip(self.factors, a)]

    def from_json(self, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != len(self.factors):
            raise TypeError(f"expected {len(self.factors)} components, got {obj!r}")
        return tuple(f.from_json(x) for f, x in zip(self.factors, obj))


def ring_from_json(obj) -> Ring:
    kind = obj["kind"]
    if kind == "Z":
        return Integers()
    if kind == "Zn":
        return IntegersMod(int(obj["n"]))
    if kind == "GF_p_x":
        return PolynomialsOverPrimeField(int(obj["p"]))
    if kind == "product":
        return Product(*(ring_from_json(f) for f in obj["factors"]))
    raise ValueError(f"unknown ring kind {kind!r}")


def euler_phi(d: int) -> int:
    """Euler's totient, extended by phi(0) = 0."""
    if d < 0:
        raise ValueError("euler_phi needs d >= 0")
    if d == 0:
        return 0
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class RingElement:
    ring: Ring
    value: Any

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.canonical(self.value))

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            return other.value
        return self.ring.canonical(other)

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return RingElement(self.ring, self.ring.sub(self._other(other), self.value))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def is_zero(self):
        return self.ring.is_zero(self.value)

    def is_unit(self):
        return self.ring.is_unit(self.value)

    def __str__(self):
        return self.ring.format(self.value)


@dataclass(frozen=True)
class PrincipalIdeal:
    ring: Ring
    generator: Any

    def __post_init__(self):
        g = self.generator
        if isinstance(g, RingElement):
            if g.ring != self.ring:
                raise RingMismatch(f"{g.ring} vs {self.ring}")
            g = g.value
        object.__setattr__(self, "generator", self.ring.ideal_generator(self.ring.canonical(g)))

    def is_zero(self):
        return self.ring.is_zero(self.generator)

    def is_whole(self):
        return self.generator == self.ring.one

    def contains(self, other) -> bool:
        """``other`` (an ideal or an element) lies in this ideal."""
        if isinstance(other, PrincipalIdeal):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            x = other.generator
        elif isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            x = other.value
        else:
            x = self.ring.canonical(other)
        return self.ring.divides(self.generator, x)

    def reduce(self, x):
        if isinstance(x, RingElement):
            x = x.value
        return self.ring.reduce(self.ring.canonical(x), self.generator)

    def __str__(self):
        return f"({self.ring.format(self.generator)})"


def _same_ring(*elements) -> Ring:
    ring = elements[0].ring
    for e in elements[1:]:
        if e.ring != ring:
            raise RingMismatch(f"{e.ring} vs {ring}")
    return ring


def extended_gcd(a: RingElement, b: RingElement):
    """Return ``(g, x, y)`` with ``x*a + y*b = g`` and ``g`` the canonical generator of ``(a, b)``."""
    ring = _same_ring(a, b)
    g, x, y = ring.xgcd(a.value, b.value)
    return ring.element(g), ring.element(x), ring.element(y)


def inverse_mod(a: RingElement, ideal: PrincipalIdeal) -> RingElement:
    ring = _same_ring(a, ideal)
    return ring.element(ring.inverse_mod(ring.reduce(a.value, ideal.generator), ideal.generator))


def quotient_lift(a: RingElement) -> RingElement:
    """Canonical representative of ``a`` in the Euclidean ring it is a quotient of."""
    base, value = a.ring.lift(a.value)
    return base.element(value)


def whitehead_triples(ring: Ring, u, v, i: int, j: int):
    """Six transvections realizing diag(u at i, v at j) whenever ``u*v = 1``."""
    one = ring.one
    return [(i, j, u), (j, i, ring.neg(v)), (i, j, u),
            (i, j, ring.neg(one)), (j, i, one), (i, j, ring.neg(one))]


def _euclid_cancel(ring: Ring, values):
    v = list(values)
    n = len(v)
    ops = []
    while True:
        live = [i for i in range(n) if not ring.is_zero(v[i])]
        if len(live) <= 1:
            break
        p = min(live, key=lambda i: (ring.measure(v[i]), i))
        for i in live:
            if i == p:
                continue
            q, r = ring.divmod(v[i], v[p])
            ops.append((p, i, ring.neg(q)))
            v[i] = r
    if live and live[0] != 0:
        p = live[0]
        ops.append((p, 0, ring.one))
        ops.append((0, p, ring.neg(ring.one)))
        v[0], v[p] = v[p], ring.zero
    return v[0], ops


def cancel_triples(ring: Ring, values, canonical: bool = True):
    """Raw row cancellation: returns ``(d, [(source, target, coeff), ...])``.

    Replaying the triples on ``values`` gives ``(d, 0, ..., 0)`` where ``d``
    generates the ideal of the entries (and is its canonical generator when
    ``canonical`` is set).
    """
    if isinstance(ring, Product):
        d, ops = [], []
        for c, f in enumerate(ring.factors):
            dc, oc = cancel_triples(f, [x[c] for x in values], canonical)
            d.append(dc)
            ops.extend((s, t, ring.embed(c, r)) for s, t, r in oc)
        return tuple(d), ops
    d, ops = _euclid_cancel(ring, values)
    if canonical:
        g, u = ring.associate(d)
        if u != ring.one:
            ops.extend(whitehead_triples(ring, u, ring.unit_inverse(u), 0, 1))
            d = g
    return d, ops


def row_cancel_bound(ring: Ring, values) -> int:
    """Published upper bound on the script length emitted by :func:`row_cancel`.

    Each Euclidean pass costs at most ``n - 1`` ops and strictly lowers the
    least nonzero measure, so passes are bounded by that measure plus one;
    two more ops move the pivot into slot 0 and six normalize it.
    """
    n = len(values)
    if isinstance(ring, Product):
        return sum(row_cancel_bound(f, [x[c] for x in values])
                   for c, f in enumerate(ring.factors))
    live = [ring.measure(x) for x in values if not ring.is_zero(x)]
    if not live:
        return 0
    return (n - 1) * (min(live) + 2) + 8


def row_cancel(v) -> tuple:
    """Reduce a row of ring elements to ``(d, 0, ..., 0)`` by transvections.

    Returns ``(d, script)``; ``d`` is the canonical generator of the ideal
    spanned by the entries.
    """
    v = list(v)
    if len(v) < 2:
        raise RowTooShort(f"row_cancel needs at least 2 entries, got {len(v)}")
    ring = _same_ring(*v)
    d, triples = cancel_triples(ring, [e.value for e in v])
    return ring.element(d), ElementaryScript.from_triples(ring, len(v), triples)
