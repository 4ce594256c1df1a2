"""Classical symmetric polynomials and basis expansions.

Elementary, complete, monomial, Schur, and Schur P/Q polynomials in a
finite alphabet, together with the Expansion container used to report
coordinates of an element in a chosen basis.
"""

import json
from itertools import permutations

from .coeffring import CoeffPoly, exact_div_int
from .series import ShapeError, TruncSeries, VarSet

BASIS_TAGS = ("m", "h", "e", "s", "P", "Q", "sL", "PL", "QL",
              "phat", "qhat", "phat_mono")


class Expansion:
    """Coordinates of an element in a labeled basis.

    Labels are tuples of nonnegative ints (partition shapes, or monomial
    exponents of abstract generators for the tag "phat_mono").
    """

    __slots__ = ("basis", "entries")

    def __init__(self, basis, entries=None):
        if basis not in BASIS_TAGS:
            raise ValueError("unknown basis tag %r" % (basis,))
        self.basis = basis
        self.entries = {}
        for label, c in (entries or {}).items():
            label = tuple(int(v) for v in label)
            if isinstance(c, int):
                c = CoeffPoly.const(c)
            if not c.is_zero():
                self.entries[label] = c

    def __eq__(self, other):
        return (isinstance(other, Expansion) and self.basis == other.basis
                and self.entries == other.entries)

    def __bool__(self):
        return bool(self.entries)

    def coefficient(self, label):
        return self.entries.get(tuple(label), CoeffPoly.zero())

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __add__(self, other):
        if other == 0:
            return self
        if self.basis != other.basis:
            raise ValueError("basis mismatch")
        out = dict(self.entries)
        for label, c in other.entries.items():
            s = out.get(label)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(label, None)
            else:
                out[label] = s
        return Expansion(self.basis, out)

    __radd__ = __add__

    def scale(self, c):
        if isinstance(c, int):
            c = CoeffPoly.const(c)
        return Expansion(self.basis,
                         {label: v * c for label, v in self.entries.items()})

    def __repr__(self):
        if not self.entries:
            return "<0 in basis %s>" % self.basis
        bits = ["(%r)*%s%r" % (c, self.basis, list(label))
                for label, c in self.sorted_items()]
        return " + ".join(bits)

    def to_json_obj(self):
        return {"basis": self.basis,
                "entries": [{"label": list(label), "coeff": c.to_json_obj()}
                            for label, c in self.sorted_items()]}

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @staticmethod
    def from_json_obj(obj):
        return Expansion(obj["basis"],
                         {tuple(e["label"]): CoeffPoly.from_json_obj(e["coeff"])
                          for e in obj["entries"]})


def _x_vars(nvars):
    return VarSet(nvars, 0, 0, 0)


def _family_product(per_var, upto, vs, trunc):
    """Convolve per-variable T-families; per_var(i) yields [deg0, deg1, ...]
    entries as TruncSeries. Returns a list indexed by T-degree."""
    fam = [TruncSeries.const(vs, trunc, 1)] + \
          [TruncSeries.zero(vs, trunc) for _ in range(upto)]
    for factors in per_var:
        nxt = [TruncSeries.zero(vs, trunc) for _ in range(upto + 1)]
        for d1, f in enumerate(factors):
            if d1 > upto:
                break
            for d2 in range(upto + 1 - d1):
                if not fam[d2].is_zero():
                    nxt[d1 + d2] = nxt[d1 + d2] + fam[d2] * f
        fam = nxt
    return fam


def elementary(k, nvars, trunc=None):
    """e_k(x_1..x_n)."""
    if trunc is None:
        trunc = max(k, 1)
    vs = _x_vars(nvars)
    if k < 0 or k > nvars:
        return TruncSeries.zero(vs, trunc)
    per_var = ([TruncSeries.const(vs, trunc, 1),
                TruncSeries.variable(vs, trunc, "x%d" % (i + 1))]
               for i in range(nvars))
    return _family_product(per_var, k, vs, trunc)[k]


def complete(k, nvars, trunc=None):
    """h_k(x_1..x_n)."""
    if trunc is None:
        trunc = max(k, 1)
    vs = _x_vars(nvars)
    if k < 0:
        return TruncSeries.zero(vs, trunc)

    def powers(i):
        x = TruncSeries.variable(vs, trunc, "x%d" % (i + 1))
        out = [TruncSeries.const(vs, trunc, 1)]
        for _ in range(k):
            out.append(out[-1] * x)
        return out

    return _family_product((powers(i) for i in range(nvars)), k, vs, trunc)[k]


def monomial(lam, nvars, trunc=None):
    """m_lam(x_1..x_n): the orbit sum of x^lam."""
    lam = tuple(sorted((int(p) for p in lam), reverse=True))
    if any(p <= 0 for p in lam):
        raise ValueError("parts must be positive")
    if trunc is None:
        trunc = max(sum(lam), 1)
    vs = _x_vars(nvars)
    if len(lam) > nvars or sum(lam) > trunc:
        return TruncSeries.zero(vs, trunc)
    padded = lam + (0,) * (nvars - len(lam))
    out = TruncSeries.zero(vs, trunc)
    for arr in sorted(set(permutations(padded))):
        exps = {"x%d" % (i + 1): e for i, e in enumerate(arr) if e}
        out = out + TruncSeries.monomial(vs, trunc, exps, 1)
    return out


def classical_q(k, nvars, trunc=None):
    """q_k: the T^k coefficient of prod (1 + x_i T) / (1 - x_i T)."""
    if trunc is None:
        trunc = max(k, 1)
    vs = _x_vars(nvars)
    if k < 0:
        return TruncSeries.zero(vs, trunc)

    def factors(i):
        x = TruncSeries.variable(vs, trunc, "x%d" % (i + 1))
        out = [TruncSeries.const(vs, trunc, 1)]
        p = TruncSeries.const(vs, trunc, 1)
        for _ in range(k):
            p = p * x
            out.append(p.scale(2))
        return out

    return _family_product((factors(i) for i in range(nvars)), k, vs, trunc)[k]


def _q_two_row(r, s, q):
    """Q_{(r,s)} from the one-row family q (list indexed by degree)."""
    def qq(k):
        return q[k] if 0 <= k < len(q) else None
    out = q[r] * q[s]
    for i in range(1, s + 1):
        a, b = qq(r + i), qq(s - i)
        if a is None or b is None or a.is_zero():
            continue
        term = (a * b).scale(2)
        out = out + (term if i % 2 == 0 else -term)
    return out


def _pfaffian_matchings(idx):
    """Perfect matchings of idx (even length) with signs."""
    if not idx:
        yield 1, []
        return
    first = idx[0]
    for pos in range(1, len(idx)):
        rest = idx[1:pos] + idx[pos + 1:]
        sign = -1 if pos % 2 == 0 else 1
        for s2, pairs in _pfaffian_matchings(rest):
            yield sign * s2, [(first, idx[pos])] + pairs


def classical_Q(lam, nvars, trunc=None):
    """Schur Q-polynomial Q_lam(x_1..x_n)."""
    lam = tuple(int(p) for p in lam)
    if any(lam[i] <= lam[i + 1] for i in range(len(lam) - 1)) or \
            any(p <= 0 for p in lam):
        raise ValueError("label must be a strict partition")
    if trunc is None:
        trunc = max(sum(lam), 1)
    vs = _x_vars(nvars)
    if not lam:
        return TruncSeries.const(vs, trunc, 1)
    top = lam[0]
    q = [classical_q(k, nvars, trunc) for k in range(2 * top + 1)]
    if len(lam) == 1:
        return q[lam[0]]
    if len(lam) == 2:
        return _q_two_row(lam[0], lam[1], q)
    padded = lam if len(lam) % 2 == 0 else lam + (0,)
    pair = {}
    for a in range(len(padded)):
        for b in range(a + 1, len(padded)):
            pair[(a, b)] = _q_two_row(padded[a], padded[b], q)
    out = TruncSeries.zero(vs, trunc)
    for sign, pairs in _pfaffian_matchings(list(range(len(padded)))):
        term = TruncSeries.const(vs, trunc, 1)
        for a, b in pairs:
            term = term * pair[(a, b)]
        out = out + (term if sign > 0 else -term)
    return out


def classical_P(lam, nvars, trunc=None):
    """Schur P-polynomial: Q_lam divided by 2^len(lam)."""
    lam = tuple(int(p) for p in lam)
    return classical_Q(lam, nvars, trunc).exact_div_int(2 ** len(lam))


def schur_s(lam, nvars, trunc=None):
    """Schur polynomial via the complete-homogeneous determinant."""
    lam = tuple(sorted((int(p) for p in lam), reverse=True))
    if trunc is None:
        trunc = max(sum(lam), 1)
    vs = _x_vars(nvars)
    if not lam:
        return TruncSeries.const(vs, trunc, 1)
    if len(lam) > nvars:
        return TruncSeries.zero(vs, trunc)
    ell = len(lam)
    hmax = lam[0] + ell
    h = [complete(k, nvars, trunc) for k in range(hmax + 1)]

    def entry(i, j):
        d = lam[i] - (i + 1) + (j + 1)
        if d < 0:
            return TruncSeries.zero(vs, trunc)
        if d == 0:
            return TruncSeries.const(vs, trunc, 1)
        return h[d]

    out = TruncSeries.zero(vs, trunc)
    for perm in permutations(range(ell)):
        inv = sum(1 for a in range(ell) for b in range(a + 1, ell)
                  if perm[a] > perm[b])
        term = TruncSeries.const(vs, trunc, 1)
        for i in range(ell):
            term = term * entry(i, perm[i])
            if term.is_zero():
                break
        out = out + (term if inv % 2 == 0 else -term)
    return out


def expand_in_m(f, nvars):
    """Expansion of a symmetric x-polynomial in the monomial basis."""
    if not f.is_symmetric(nvars):
        raise ShapeError("input is not symmetric in x_1..x_%d" % nvars)
    lo, hi = f.vars.fam_slice("x")
    if hi - lo < nvars:
        raise ShapeError("series has fewer than %d x-variables" % nvars)
    entries = {}
    for mono, c in f.terms.items():
        if any(mono[k] for k in range(len(mono)) if not lo <= k < hi):
            raise ShapeError("series involves variables besides x")
        exps = list(mono[lo:hi])
        if any(exps[k] < exps[k + 1] for k in range(len(exps) - 1)):
            continue
        label = tuple(e for e in exps if e)
        entries[label] = entries.get(label, CoeffPoly.zero()) + c
    return Expansion("m", entries)


def _strict_labels_by_size(max_size):
    out = []
    def rec(prefix, remaining, cap):
        for p in range(min(remaining, cap), 0, -1):
            out.append(prefix + (p,))
            rec(prefix + (p,), remaining - p, p - 1)
    rec((), max_size, max_size)
    out.append(())
    out.sort(key=lambda t: (sum(t), tuple(-v for v in t)))
    return out


def expand_in_classical_Q(f, nvars, use_P=False):
    """Expand a symmetric x-polynomial in Schur Q (or P) polynomials.

    Triangular solve on the dominant monomial x^mu of each strict mu;
    fails if a nonzero residual survives.
    """
    coords = expand_in_m(f, nvars)
    degree = max((sum(l) for l in coords.entries), default=0)
    entries = {}
    for label in _strict_labels_by_size(degree):
        if not label:
            continue
        c = coords.coefficient(label)
        if c.is_zero():
            continue
        if not use_P:
            c = exact_div_int(c, 2 ** len(label))
        entries[label] = c
        base = classical_P(label, nvars, f.trunc) if use_P else \
            classical_Q(label, nvars, f.trunc)
        coords = coords + expand_in_m(base, nvars).scale(-c)
    leftover = {l: c for l, c in coords.entries.items() if l}
    if leftover:
        raise ValueError("element is not in the span: residual %r" % (leftover,))
    out = Expansion("P" if use_P else "Q", entries)
    if not coords.coefficient(()).is_zero():
        out = out + Expansion(out.basis, {(): coords.coefficient(())})
    return out


def check_classical_q_relation(i, nvars=None, trunc=None):
    """q_i^2 + 2 sum_j (-1)^j q_{i+j} q_{i-j} == 0 in the classical ring."""
    if nvars is None:
        nvars = i
    if trunc is None:
        trunc = 2 * i
    total = classical_q(i, nvars, trunc) * classical_q(i, nvars, trunc)
    for j in range(1, i + 1):
        term = classical_q(i + j, nvars, trunc) * classical_q(i - j, nvars, trunc)
        term = term.scale(2)
        total = total + (term if j % 2 == 0 else -term)
    return total.is_zero()
