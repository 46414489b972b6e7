"""Sparse multivariate polynomials over an exact coefficient ring.

Terms live in a map from exponent vector to nonzero coefficient; two
polynomials are equal iff their term maps are equal (canonical form).
Coefficients are plain ints over Z and FieldElem over finite fields, so all
arithmetic goes through the ordinary operators and stays exact.
"""

from __future__ import annotations

from .rings import ZZ, CoeffRing, FieldElem, RingMismatch, render_field_elem


class SparsePoly:
    __slots__ = ("ring", "vars", "terms")

    def __init__(self, ring: CoeffRing, variables, terms=None):
        self.ring = ring
        self.vars = tuple(variables)
        self.terms = dict(terms) if terms else {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring, variables):
        return cls(ring, variables)

    @classmethod
    def const(cls, ring, variables, c):
        c = ring.from_int(c) if isinstance(c, int) and ring is not ZZ else c
        p = cls(ring, variables)
        if c:
            p.terms[(0,) * len(p.vars)] = c
        return p

    @classmethod
    def variable(cls, ring, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise KeyError(name)
        exps = tuple(1 if v == name else 0 for v in variables)
        one = 1 if ring is ZZ else ring.from_int(1)
        return cls(ring, variables, {exps: one})

    @classmethod
    def gens(cls, ring, variables):
        return [cls.variable(ring, variables, v) for v in variables]

    def _compat(self, other: "SparsePoly"):
        if self.vars != other.vars:
            raise RingMismatch(f"variable mismatch: {self.vars} vs {other.vars}")
        if self.ring != other.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce_scalar(self, c):
        if isinstance(c, int):
            return c if self.ring is ZZ else self.ring.from_int(c)
        if isinstance(c, FieldElem):
            if c.ring != self.ring:
                raise RingMismatch(f"{c.ring} vs {self.ring}")
            return c
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            c = self._coerce_scalar(other)
            if c is None:
                return NotImplemented
            other = SparsePoly.const(self.ring, self.vars, c)
        self._compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            acc = c if acc is None else acc + c
            if acc:
                terms[e] = acc
            elif e in terms:
                del terms[e]
        return SparsePoly(self.ring, self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.ring, self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SparsePoly) else -self._as_poly(other))

    def __rsub__(self, other):
        return (-self) + other

    def _as_poly(self, other):
        c = self._coerce_scalar(other)
        if c is None:
            raise TypeError(f"cannot coerce {other!r}")
        return SparsePoly.const(self.ring, self.vars, c)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c = self._coerce_scalar(other)
            if c is None:
                return NotImplemented
            if not c:
                return SparsePoly(self.ring, self.vars)
            return SparsePoly(self.ring, self.vars,
                              {e: t * c for e, t in self.terms.items()})
        self._compat(other)
        if not self.terms or not other.terms:
            return SparsePoly(self.ring, self.vars)
        # pack exponent vectors into single ints so monomial products are
        # one integer addition; width is sized so columns never carry
        n = len(self.vars)
        maxe = 1
        for e in self.terms:
            maxe = max(maxe, max(e, default=0))
        for e in other.terms:
            maxe = max(maxe, max(e, default=0))
        width = (2 * maxe + 1).bit_length()
        packed = {}
        a_items = [(_pack(e, width), c) for e, c in self.terms.items()]
        b_items = [(_pack(e, width), c) for e, c in other.terms.items()]
        if len(a_items) > len(b_items):
            a_items, b_items = b_items, a_items
        for ka, ca in a_items:
            for kb, cb in b_items:
                k = ka + kb
                prod = ca * cb
                acc = packed.get(k)
                acc = prod if acc is None else acc + prod
                if acc:
                    packed[k] = acc
                elif k in packed:
                    del packed[k]
        terms = {_unpack(k, width, n): c for k, c in packed.items()}
        return SparsePoly(self.ring, self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.const(self.ring, self.vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return (self.ring == other.ring and self.vars == other.vars
                    and self.terms == other.terms)
        if isinstance(other, (int, FieldElem)):
            c = self._coerce_scalar(other)
            if not c:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): c}
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries ------------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exps):
        c = self.terms.get(tuple(exps))
        if c is None:
            return 0 if self.ring is ZZ else self.ring.from_int(0)
        return c

    # -- evaluation / substitution ------------------------------------------

    def eval(self, assignment: dict):
        """Evaluate or substitute; values may be scalars or polynomials.

        The assignment must cover every variable of the polynomial.
        Substituting polynomials implements (linear or not) changes of
        variables; all values must share one ring context.
        """
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise KeyError(f"missing variables in assignment: {missing}")
        values = [assignment[v] for v in self.vars]
        poly_mode = any(isinstance(v, SparsePoly) for v in values)
        if poly_mode:
            protos = [v for v in values if isinstance(v, SparsePoly)]
            proto = protos[0]
            for q in protos[1:]:
                proto._compat(q)
            values = [v if isinstance(v, SparsePoly)
                      else SparsePoly.const(proto.ring, proto.vars, v)
                      for v in values]
            out = SparsePoly(proto.ring, proto.vars)
        else:
            for v in values:
                if isinstance(v, FieldElem) and v.ring != self.ring and self.ring is not ZZ:
                    raise RingMismatch(f"{v.ring} vs {self.ring}")
            out = None
        pow_cache = [dict() for _ in values]

        def vpow(i, e):
            cache = pow_cache[i]
            if e not in cache:
                cache[e] = values[i] ** e
            return cache[e]

        for exps, coef in self.terms.items():
            term = coef
            for i, e in enumerate(exps):
                if e:
                    term = vpow(i, e) * term
            out = term if out is None else out + term
        if out is None:
            zero = 0 if not isinstance(values[0], FieldElem) else values[0].ring.from_int(0)
            if poly_mode:
                return SparsePoly(self.ring, self.vars)
            return self.ring.from_int(0) if self.ring is not ZZ else 0
        return out

    def exact_div_int(self, c: int) -> "SparsePoly":
        """Divide every coefficient by the integer c, exactly.

        Raises ValueError naming the offending term if any coefficient is
        not divisible; only meaningful over Z.
        """
        if self.ring is not ZZ:
            raise RingMismatch("exact integer division needs coefficients in Z")
        if c == 0:
            raise ZeroDivisionError("exact division by zero")
        terms = {}
        for e, coef in self.terms.items():
            q, r = divmod(coef, c)
            if r:
                raise ValueError(
                    f"coefficient {coef} of {_render_mono(e, self.vars) or '1'} "
                    f"not divisible by {c}")
            terms[e] = q
        return SparsePoly(self.ring, self.vars, terms)

    def map_coefficients(self, fn, ring=None):
        """Apply fn to every coefficient, dropping any that map to zero."""
        ring = self.ring if ring is None else ring
        terms = {}
        for e, c in self.terms.items():
            c2 = fn(c)
            if c2:
                terms[e] = c2
        return SparsePoly(ring, self.vars, terms)

    # -- canonical text -----------------------------------------------------

    def render(self) -> str:
        """Canonical text: graded-lex order, explicit `*` and `^`."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        pieces = []
        for i, e in enumerate(keys):
            c = self.terms[e]
            mono = _render_mono(e, self.vars)
            if isinstance(c, int):
                neg = c < 0
                mag = -c if neg else c
                body = f"{mag}*{mono}" if mono and mag != 1 else (mono or str(mag))
                if i == 0:
                    pieces.append(("-" if neg else "") + body)
                else:
                    pieces.append(("- " if neg else "+ ") + body)
            else:
                cs = render_field_elem(c)
                wrapped = f"({cs})" if ("+" in cs or "-" in cs) else cs
                body = f"{wrapped}*{mono}" if mono and cs != "1" else (mono or wrapped)
                pieces.append(body if i == 0 else "+ " + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"<poly {self.render()}>"


def _pack(exps, width):
    k = 0
    for e in exps:
        k = (k << width) | e
    return k


def _unpack(key, width, n):
    mask = (1 << width) - 1
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & mask
        key >>= width
    return tuple(out)


def _render_mono(exps, names):
    parts = []
    for v, e in zip(names, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def poly_add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p + q


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def poly_eval(p: SparsePoly, assignment: dict):
    return p.eval(assignment)


def poly_exact_div_int(p: SparsePoly, c: int) -> SparsePoly:
    return p.exact_div_int(c)


def univariate_roots(f: SparsePoly, base, max_ext: int):
    """All roots of f in the extensions of degree <= max_ext of a finite base.

    Roots are found by exhaustive evaluation (desk scale: every scanned field
    is capped at 2^16 elements) and each is reported once, paired with its
    minimal extension.  Returns a list of (root, field) pairs.
    """
    from .rings import extension_of, minimal_extension_degree

    if len(f.vars) != 1:
        raise ValueError("univariate polynomial expected")
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    if not base.is_field():
        raise ValueError("base must be a finite field")
    coeffs = sorted(((e[0], c) for e, c in f.terms.items()))
    out = []
    for e in range(1, max_ext + 1):
        K, embed = extension_of(base, e)
        if K.order > 1 << 16:
            raise ValueError(f"extension {K} too large for exhaustive roots")
        lifted = [(d, embed(c) if isinstance(c, FieldElem) else K.from_int(c))
                  for d, c in coeffs]
        for x in K.elements():
            acc = K.from_int(0)
            for d, c in lifted:
                acc = acc + c * x ** d
            if not acc:
                if minimal_extension_degree(x, base, e) == e:
                    out.append((x, K))
    return out
