"""Exact coefficient rings: Z, prime fields F_p and explicit extensions F_{p^k}.

Every value is immutable and every operation is pure; nothing here ever
rounds.  Elements of Z are plain Python ints.  Field elements are wrapped in
FieldElem so that polynomial code can treat coefficients uniformly through
the arithmetic operators.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


class RingMismatch(ValueError):
    """Mixed operands from different coefficient rings."""


def is_prime(n: int) -> bool:
    """Trial division; sufficient for the p < 2^31 supported here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# dense univariate arithmetic over F_p (internal helper layer for ExtField)
# ---------------------------------------------------------------------------
# Polynomials are little-endian coefficient tuples with no trailing zeros.


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _poly_mulmod(a, b, modulus, p):
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by the monic modulus
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(k):
                prod[i - k + j] = (prod[i - k + j] - c * modulus[j]) % p
    return _trim(prod[:k])


def _poly_powmod(a, e, modulus, p):
    result = (1,)
    base = a
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        e >>= 1
    return result


def _poly_divmod(a, b, p):
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = (a[i + len(b) - 1] * binv) % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return _trim(q), _trim(a)


def _poly_gcd(a, b, p):
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def _poly_is_irreducible(f, p) -> bool:
    """Frobenius test: f of degree k is irreducible over F_p iff
    x^(p^k) = x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for prime l | k."""
    k = len(f) - 1
    if k < 1 or f[-1] != 1:
        return False
    x = (0, 1)
    if _poly_powmod(x, p ** k, f, p) != x:
        return False
    for l in range(2, k + 1):
        if k % l == 0 and is_prime(l):
            g = _poly_powmod(x, p ** (k // l), f, p)
            diff = _trim([(gi - xi) % p for gi, xi in
                          zip(list(g) + [0] * 2, list(x) + [0] * len(g))])
            if len(_poly_gcd(f, diff, p)) - 1 != 0:
                return False
    return True


@lru_cache(maxsize=None)
def _shipped_moduli():
    text = resources.files("f4stable.data").joinpath("field_moduli.json").read_text()
    raw = json.load(__import__("io").StringIO(text))
    return {(int(k.split(",")[0]), int(k.split(",")[1])): tuple(v) for k, v in raw.items()}


def find_irreducible(p: int, k: int) -> tuple:
    """Deterministic monic irreducible of degree k over F_p.

    The shipped table covers p <= 7, k <= 4; anything else is found by
    ascending scan over lower-coefficient vectors.
    """
    table = _shipped_moduli()
    if (p, k) in table:
        return table[(p, k)]
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        lower, c = [], code
        for _ in range(k):
            lower.append(c % p)
            c //= p
        f = tuple(lower) + (1,)
        if _poly_is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {k} over F_{p}")


# ---------------------------------------------------------------------------
# coefficient rings
# ---------------------------------------------------------------------------


class CoeffRing:
    """Base class; instances compare by structure and are hashable."""

    char: int

    def is_field(self) -> bool:
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError


class IntegerRing(CoeffRing):
    char = 0

    def is_field(self):
        return False

    def from_int(self, n):
        return int(n)

    def __repr__(self):
        return "Z"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")


ZZ = IntegerRing()


class PrimeField(CoeffRing):
    """F_p for prime p < 2^31."""

    def __init__(self, p: int):
        if not (2 <= p < 2 ** 31):
            raise ValueError(f"prime out of supported range: {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.degree = 1

    def is_field(self):
        return True

    def from_int(self, n):
        return FieldElem(self, n % self.p)

    def zero(self):
        return FieldElem(self, 0)

    def one(self):
        return FieldElem(self, 1)

    def elements(self):
        for v in range(self.p):
            yield FieldElem(self, v)

    def random_elem(self, rng):
        return FieldElem(self, rng.randrange(self.p))

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


class ExtField(CoeffRing):
    """F_{p^k} presented as F_p[w]/(modulus), modulus monic of degree k.

    Elements are little-endian coefficient tuples of length k.
    """

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = find_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _poly_is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.char = p
        self.order = p ** k
        self.degree = k

    def is_field(self):
        return True

    def from_int(self, n):
        return FieldElem(self, ((n % self.p),) + (0,) * (self.k - 1))

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def gen(self):
        """The class of w."""
        if self.k == 1:
            return self.from_int(-self.modulus[0])
        return FieldElem(self, (0, 1) + (0,) * (self.k - 2))

    def elem(self, coeffs) -> "FieldElem":
        cs = [int(c) % self.p for c in coeffs]
        if len(cs) > self.k:
            raise ValueError("too many coefficients")
        cs += [0] * (self.k - len(cs))
        return FieldElem(self, tuple(cs))

    def elements(self):
        for code in range(self.order):
            cs, c = [], code
            for _ in range(self.k):
                cs.append(c % self.p)
                c //= self.p
            yield FieldElem(self, tuple(cs))

    def random_elem(self, rng):
        return FieldElem(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def __repr__(self):
        return f"F{self.p}^{self.k}"

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("Fpk", self.p, self.k, self.modulus))


class FieldElem:
    """Canonical residue in a PrimeField or ExtField; fully reduced, exact."""

    __slots__ = ("ring", "val")

    def __init__(self, ring, val):
        self.ring = ring
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        r = self.ring
        if isinstance(r, PrimeField):
            return FieldElem(r, (self.val + o.val) % r.p)
        return FieldElem(r, tuple((a + b) % r.p for a, b in zip(self.val, o.val)))

    __radd__ = __add__

    def __neg__(self):
        r = self.ring
        if isinstance(r, PrimeField):
            return FieldElem(r, (-self.val) % r.p)
        return FieldElem(r, tuple((-a) % r.p for a in self.val))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        r = self.ring
        if isinstance(r, PrimeField):
            return FieldElem(r, (self.val * o.val) % r.p)
        prod = _poly_mulmod(_trim(self.val), _trim(o.val), r.modulus, r.p)
        return FieldElem(r, tuple(prod) + (0,) * (r.k - len(prod)))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        r = self.ring
        if isinstance(r, PrimeField):
            return FieldElem(r, pow(self.val, r.p - 2, r.p))
        # extended Euclid over F_p[w]
        a, b = _trim(self.val), r.modulus
        s0, s1 = (1,), ()
        while len(b) > 1 or (b and b[0] != 0):
            q, rem = _poly_divmod(a, b, r.p)
            a, b = b, rem
            qs1 = _poly_mul_plain(q, s1, r.p)
            s0, s1 = s1, _trim([(x - y) % r.p for x, y in
                                zip(list(s0) + [0] * len(qs1), list(qs1) + [0] * len(s0))])
            if not b:
                break
        # 'a' is now the gcd = nonzero constant
        c = pow(a[0], r.p - 2, r.p)
        inv = _trim([(c * x) % r.p for x in s0])
        inv = _poly_divmod(inv, r.modulus, r.p)[1] if len(inv) > r.k else inv
        return FieldElem(r, tuple(inv) + (0,) * (r.k - len(inv)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r = self.ring
        if isinstance(r, PrimeField):
            return FieldElem(r, pow(self.val, e, r.p))
        res = _poly_powmod(_trim(self.val), e, r.modulus, r.p)
        return FieldElem(r, tuple(res) + (0,) * (r.k - len(res)))

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.from_int(other)
        return (isinstance(other, FieldElem) and other.ring == self.ring
                and other.val == self.val)

    def __hash__(self):
        return hash((self.ring, self.val))

    def __bool__(self):
        if isinstance(self.ring, PrimeField):
            return self.val != 0
        return any(self.val)

    def lift(self):
        """Canonical integer lift: int for F_p, little-endian int tuple for F_{p^k}."""
        return self.val

    def __repr__(self):
        return f"{render_field_elem(self)}:{self.ring!r}"


def _poly_mul_plain(a, b, p):
    if not a or not b:
        return ()
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _trim(prod)


def render_field_elem(x: FieldElem) -> str:
    """Text form: residue for F_p, polynomial in w for F_{p^k}."""
    if isinstance(x.ring, PrimeField):
        return str(x.val)
    parts = []
    for i in range(x.ring.k - 1, -1, -1):
        c = x.val[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}w" + (f"^{i}" if i > 1 else ""))
    return "+".join(parts) if parts else "0"


def field_sqrt_char2(x: FieldElem) -> FieldElem:
    """Square root in F_{2^k} via Frobenius: x^(2^(k-1)); unique in char 2."""
    if x.ring.char != 2:
        raise ValueError(f"characteristic {x.ring.char}, need 2")
    k = getattr(x.ring, "k", 1)
    return x ** (2 ** (k - 1))


# ---------------------------------------------------------------------------
# field embeddings and extension towers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _embedding_root(small: ExtField, big: CoeffRing):
    """A root of small.modulus inside big, by exhaustive scan."""
    if big.order > 1 << 20:
        raise ValueError("embedding search field too large")
    mod = small.modulus
    for x in big.elements():
        acc = big.from_int(0)
        xp = big.from_int(1)
        for c in mod:
            if c:
                acc = acc + xp * c
            xp = xp * x
        if not acc:
            return x
    raise ValueError(f"{small} does not embed in {big}")


def extension_of(base: CoeffRing, e: int):
    """Return (K, embed) with K the degree-e extension of base.

    embed maps base elements into K as a field homomorphism.
    """
    if e == 1:
        return base, lambda x: x
    if isinstance(base, PrimeField):
        K = ExtField(base.p, e)
        return K, lambda x: K.from_int(x.val)
    if isinstance(base, ExtField):
        K = ExtField(base.p, base.k * e)
        root = _embedding_root(base, K)

        def embed(x, _K=K, _root=root):
            acc = _K.from_int(0)
            xp = _K.from_int(1)
            for c in x.val:
                if c:
                    acc = acc + xp * c
                xp = xp * _root
            return acc

        return K, embed
    raise ValueError(f"not a finite field: {base}")


def minimal_extension_degree(x: FieldElem, base: CoeffRing, within: int) -> int:
    """Smallest e' | within with x fixed by the e'-fold base Frobenius."""
    kq = base.p ** getattr(base, "k", 1) if hasattr(base, "p") else None
    for d in range(1, within + 1):
        if within % d == 0 and x ** (kq ** d) == x:
            return d
    return within
