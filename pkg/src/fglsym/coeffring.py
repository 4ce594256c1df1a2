"""Exact arithmetic in the Lazard ring.

The ring is modeled as the free commutative polynomial ring over the
integers on normalized generators a_{i,j} (i <= j), with the weight
grading weight(a_{i,j}) = i + j - 1.
"""

import json


class AGen(tuple):
    """A normalized generator a_{i,j}; construction sorts the indices."""

    def __new__(cls, i, j):
        if i < 1 or j < 1:
            raise ValueError("generator indices must be positive: (%r, %r)" % (i, j))
        if i > j:
            i, j = j, i
        return super().__new__(cls, (i, j))

    @property
    def i(self):
        return self[0]

    @property
    def j(self):
        return self[1]

    @property
    def weight(self):
        return self[0] + self[1] - 1

    def __repr__(self):
        return "a_{%d,%d}" % (self[0], self[1])


# A monomial in the generators is a tuple of (AGen, exponent) pairs,
# sorted by generator, exponents positive.  () is the constant monomial.

_ONE_MONO = ()


def mono_weight(mono):
    return sum(g.weight * e for g, e in mono)


def mono_degree(mono):
    return sum(e for _, e in mono)


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for g, e in m2:
        d[g] = d.get(g, 0) + e
    return tuple(sorted(d.items()))


def mono_key(mono):
    # Graded lex: by total degree, then lexicographically with higher
    # power of the earliest generator first.
    return (mono_degree(mono), tuple((g[0], g[1], -e) for g, e in mono))


def _format_mono(mono, c):
    parts = []
    for g, e in mono:
        parts.append(repr(g) if e == 1 else "%r^%d" % (g, e))
    body = "*".join(parts)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return "%d*%s" % (c, body)


class CoeffPoly:
    """Sparse integer polynomial in the a_{i,j}; zero coefficients never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def const(n):
        return CoeffPoly({_ONE_MONO: n} if n else {})

    @staticmethod
    def zero():
        return CoeffPoly({})

    @staticmethod
    def one():
        return CoeffPoly({_ONE_MONO: 1})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and _ONE_MONO in self.terms)

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant: %r" % self)
        return self.terms.get(_ONE_MONO, 0)

    def is_monomial_term(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_const() and self.const_value() == other
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = CoeffPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return CoeffPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CoeffPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = CoeffPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return CoeffPoly.zero()
            return CoeffPoly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, CoeffPoly):
            return NotImplemented
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return CoeffPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        out = CoeffPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def max_weight(self):
        return max((mono_weight(m) for m in self.terms), default=0)

    def weight(self):
        """The common weight of all terms; None for zero, error if mixed."""
        ws = {mono_weight(m) for m in self.terms}
        if not ws:
            return None
        if len(ws) > 1:
            raise ValueError("not weight-homogeneous: weights %s" % sorted(ws))
        return ws.pop()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: mono_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            _format_mono(m, c) for m, c in self.sorted_terms()
        ).replace("+ -", "- ")

    def to_json_obj(self):
        out = []
        for m, c in self.sorted_terms():
            a = []
            for g, e in m:
                a.append([g[0], g[1]])
                a.append(e)
            out.append({"a": a, "c": str(c)})
        return out

    @staticmethod
    def from_json_obj(obj):
        terms = {}
        for entry in obj:
            a = entry["a"]
            mono = []
            for k in range(0, len(a), 2):
                mono.append((AGen(a[k][0], a[k][1]), a[k + 1]))
            terms[tuple(sorted(mono))] = int(entry["c"])
        return CoeffPoly(terms)

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def a_gen(i, j):
    return CoeffPoly({((AGen(i, j), 1),): 1})


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def neg(p):
    return -p


def int_scale(p, n):
    return p * n


def exact_div_int(p, m):
    """Divide every integer coefficient by m, asserting exactness."""
    if m == 0:
        raise ZeroDivisionError("division by zero")
    out = {}
    for mono, c in p.terms.items():
        q, r = divmod(c, m)
        if r:
            raise ValueError(
                "coefficient %d of %s not divisible by %d"
                % (c, _format_mono(mono, 1), m)
            )
        out[mono] = q
    return CoeffPoly(out)


def specialize(p, assignment):
    """Ring-homomorphic image of p under a generator assignment.

    assignment maps AGen -> CoeffPoly or int; generators not present
    default to themselves.
    """
    out = CoeffPoly.zero()
    for mono, c in p.terms.items():
        term = CoeffPoly.const(c)
        for g, e in mono:
            img = assignment.get(g)
            if img is None:
                img = CoeffPoly({((g, 1),): 1})
            elif isinstance(img, int):
                img = CoeffPoly.const(img)
            term = term * (img ** e)
            if term.is_zero():
                break
        out = out + term
    return out


class Specialization:
    """A named total assignment on the generators."""

    def __init__(self, name, mapper):
        self.name = name
        self._mapper = mapper  # AGen -> CoeffPoly

    def image(self, gen):
        return self._mapper(gen)

    def apply(self, p):
        out = CoeffPoly.zero()
        for mono, c in p.terms.items():
            term = CoeffPoly.const(c)
            for g, e in mono:
                term = term * (self._mapper(g) ** e)
                if term.is_zero():
                    break
            out = out + term
        return out

    def __repr__(self):
        return "Specialization(%s)" % self.name


UNIVERSAL = Specialization("universal", lambda g: CoeffPoly({((g, 1),): 1}))

ADDITIVE = Specialization("additive", lambda g: CoeffPoly.zero())


def MULTIPLICATIVE(beta=None):
    """a_{1,1} specialized to -beta, all other generators to 0.

    With beta an integer the image ring is Z; with beta None the symbol
    a_{1,1} is retained (beta = -a_{1,1} implicitly).
    """
    a11 = AGen(1, 1)
    if beta is None:
        img = a_gen(1, 1)
        name = "multiplicative(symbolic)"
    else:
        img = CoeffPoly.const(-beta)
        name = "multiplicative(beta=%d)" % beta

    def mapper(g):
        return img if g == a11 else CoeffPoly.zero()

    return Specialization(name, mapper)
