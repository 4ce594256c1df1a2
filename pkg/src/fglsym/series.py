"""Truncated multivariate formal power series over the Lazard ring.

Variables come in four families ordered x < b < y < t; truncation
counts only variable degree, never the a-generator weight of the
coefficients.  Storage is sparse, arithmetic iterates dense-by-degree.
"""

import json
from itertools import permutations

from .coeffring import CoeffPoly

FAMILIES = ("x", "b", "y", "t")


class ShapeError(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


class InversionError(ValueError):
    pass


class DivisibilityError(ValueError):
    pass


class VarSet:
    """An ordered list of named variables, canonical family order x<b<y<t."""

    __slots__ = ("counts", "names", "_index", "_slices")

    def __init__(self, nx=0, nb=0, ny=0, nt=0):
        self.counts = (nx, nb, ny, nt)
        names = []
        slices = {}
        for fam, cnt in zip(FAMILIES, self.counts):
            start = len(names)
            names.extend("%s%d" % (fam, i) for i in range(1, cnt + 1))
            slices[fam] = (start, len(names))
        self.names = tuple(names)
        self._index = {nm: k for k, nm in enumerate(names)}
        self._slices = slices

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return "VarSet(nx=%d, nb=%d, ny=%d, nt=%d)" % self.counts

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ShapeError("unknown variable %r in %r" % (name, self))

    def fam_slice(self, fam):
        return self._slices[fam]

    def fam_degree(self, mono, fam):
        lo, hi = self._slices[fam]
        return sum(mono[lo:hi])

    def extended(self, nx=None, nb=None, ny=None, nt=None):
        cur = self.counts
        new = (
            cur[0] if nx is None else max(cur[0], nx),
            cur[1] if nb is None else max(cur[1], nb),
            cur[2] if ny is None else max(cur[2], ny),
            cur[3] if nt is None else max(cur[3], nt),
        )
        return VarSet(*new)


def _perm_sign(p):
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _grlex_key(mono):
    return (sum(mono), mono)


class TruncSeries:
    """Sparse truncated series; terms maps exponent tuples to CoeffPoly."""

    __slots__ = ("vars", "trunc", "terms")

    def __init__(self, vars, trunc, terms=None):
        if trunc < 0:
            raise ShapeError("negative truncation")
        self.vars = vars
        self.trunc = trunc
        self.terms = terms if terms is not None else {}

    # ---------- constructors ----------

    @staticmethod
    def zero(vars, trunc):
        return TruncSeries(vars, trunc, {})

    @staticmethod
    def const(vars, trunc, c):
        if isinstance(c, int):
            c = CoeffPoly.const(c)
        if c.is_zero():
            return TruncSeries(vars, trunc, {})
        return TruncSeries(vars, trunc, {(0,) * len(vars): c})

    @staticmethod
    def variable(vars, trunc, name):
        idx = vars.index(name)
        mono = tuple(1 if k == idx else 0 for k in range(len(vars)))
        if trunc < 1:
            return TruncSeries(vars, trunc, {})
        return TruncSeries(vars, trunc, {mono: CoeffPoly.one()})

    @staticmethod
    def monomial(vars, trunc, exps, c=1):
        """exps: dict name -> exponent."""
        mono = [0] * len(vars)
        for nm, e in exps.items():
            mono[vars.index(nm)] = e
        if isinstance(c, int):
            c = CoeffPoly.const(c)
        mono = tuple(mono)
        if sum(mono) > trunc or c.is_zero():
            return TruncSeries(vars, trunc, {})
        return TruncSeries(vars, trunc, {mono: c})

    # ---------- basic queries ----------

    def _check_shape(self, other):
        if self.vars != other.vars or self.trunc != other.trunc:
            raise ShapeError(
                "mismatched series: %r/%d vs %r/%d"
                % (self.vars, self.trunc, other.vars, other.trunc)
            )

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), CoeffPoly.zero())

    def min_degree(self):
        """Smallest variable degree with a term; None for the zero series."""
        return min((sum(m) for m in self.terms), default=None)

    def coefficient(self, exps):
        """Exact coefficient of a monomial given as dict name -> exponent."""
        mono = [0] * len(self.vars)
        for nm, e in exps.items():
            mono[self.vars.index(nm)] = e
        return self.terms.get(tuple(mono), CoeffPoly.zero())

    def coefficient_of_power(self, name, k):
        """The series coefficient of name**k (variable cleared in the output)."""
        idx = self.vars.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[idx] == k:
                mm = m[:idx] + (0,) + m[idx + 1 :]
                out[mm] = c
        return TruncSeries(self.vars, self.trunc, out)

    def max_exponent(self, name):
        idx = self.vars.index(name)
        return max((m[idx] for m in self.terms), default=0)

    def by_degree(self):
        buckets = {}
        for m, c in self.terms.items():
            buckets.setdefault(sum(m), []).append((m, c))
        return buckets

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.vars != other.vars or self.trunc != other.trunc:
            return False
        return self.terms == other.terms

    def __repr__(self):
        n = len(self.terms)
        return "TruncSeries(%r, trunc=%d, %d terms)" % (self.vars, self.trunc, n)

    # ---------- arithmetic ----------

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncSeries.const(self.vars, self.trunc, other)
        self._check_shape(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return TruncSeries(self.vars, self.trunc, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.vars, self.trunc, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncSeries.const(self.vars, self.trunc, other)
        return self + (-other)

    def exact_div_int(self, m):
        """Divide every coefficient by the integer m; exact or error."""
        from .coeffring import exact_div_int as _cdiv
        return TruncSeries(self.vars, self.trunc,
                           {mono: _cdiv(c, m) for mono, c in self.terms.items()})

    def scale(self, c):
        """Multiply by an integer or CoeffPoly scalar."""
        if isinstance(c, int):
            c = CoeffPoly.const(c)
        if c.is_zero():
            return TruncSeries(self.vars, self.trunc, {})
        out = {}
        for m, old in self.terms.items():
            s = old * c
            if not s.is_zero():
                out[m] = s
        return TruncSeries(self.vars, self.trunc, out)

    def mul(self, other, fam_caps=None, degree_cap=None):
        """Truncated product; fam_caps optionally bounds per-family degrees.

        A family cap is extra truncation: terms of the product whose
        family degree exceeds the cap are dropped (and never generated).
        degree_cap lowers the computed total degree below trunc without
        changing the declared trunc (sound only when the caller knows the
        discarded degrees cannot influence later results).
        """
        self._check_shape(other)
        N = self.trunc
        if degree_cap is not None and degree_cap < N:
            N = degree_cap
        vars = self.vars
        caps = sorted(fam_caps.items()) if fam_caps else None

        def buckets(series):
            out = {}
            for m, c in series.terms.items():
                if caps:
                    key = (sum(m),) + tuple(vars.fam_degree(m, f) for f, _ in caps)
                else:
                    key = (sum(m),)
                out.setdefault(key, []).append((m, c))
            return out

        A = buckets(self)
        B = buckets(other)
        out = {}
        for k1, t1 in A.items():
            for k2, t2 in B.items():
                if k1[0] + k2[0] > N:
                    continue
                if caps and any(
                    k1[i + 1] + k2[i + 1] > cap for i, (_, cap) in enumerate(caps)
                ):
                    continue
                for m1, c1 in t1:
                    for m2, c2 in t2:
                        m = tuple(a + b for a, b in zip(m1, m2))
                        c = c1 * c2
                        s = out.get(m)
                        s = c if s is None else s + c
                        if s.is_zero():
                            out.pop(m, None)
                        else:
                            out[m] = s
        return TruncSeries(self.vars, self.trunc, out)

    def __mul__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            return self.scale(other)
        return self.mul(other)

    __rmul__ = __mul__

    def pow(self, e, fam_caps=None):
        if e < 0:
            raise ValueError("negative power")
        out = TruncSeries.const(self.vars, self.trunc, 1)
        for _ in range(e):
            out = out.mul(self, fam_caps=fam_caps)
        return out

    # ---------- truncation management ----------

    def truncate_to(self, new_trunc):
        if new_trunc > self.trunc:
            raise ShapeError("cannot raise truncation %d -> %d" % (self.trunc, new_trunc))
        out = {m: c for m, c in self.terms.items() if sum(m) <= new_trunc}
        return TruncSeries(self.vars, new_trunc, out)

    def pad_trunc(self, new_trunc):
        """Re-declare a higher truncation without new information.

        Only sound when the padded degrees cannot influence the use site
        (e.g. the series is then multiplied by one of min-degree >= gap).
        """
        if new_trunc < self.trunc:
            raise ShapeError("use truncate_to to lower truncation")
        return TruncSeries(self.vars, new_trunc, dict(self.terms))

    def family_truncate(self, fam, cap):
        out = {
            m: c for m, c in self.terms.items() if self.vars.fam_degree(m, fam) <= cap
        }
        return TruncSeries(self.vars, self.trunc, out)

    # ---------- variable plumbing ----------

    def embed(self, new_vars, trunc=None):
        """Reinterpret in a superset VarSet (variables matched by name)."""
        trunc = self.trunc if trunc is None else trunc
        if trunc > self.trunc and not self.is_zero():
            raise ShapeError("cannot raise truncation in embed")
        mapping = [new_vars.index(nm) for nm in self.vars.names]
        width = len(new_vars)
        out = {}
        for m, c in self.terms.items():
            if sum(m) > trunc:
                continue
            mm = [0] * width
            for k, e in enumerate(m):
                if e:
                    mm[mapping[k]] = e
            out[tuple(mm)] = c
        return TruncSeries(new_vars, trunc, out)

    def rename_vars(self, new_vars, name_map):
        """Move to new_vars sending old variable nm to name_map.get(nm, nm)."""
        mapping = [new_vars.index(name_map.get(nm, nm)) for nm in self.vars.names]
        if len(set(mapping)) != len(mapping):
            raise ShapeError("rename collides: %r" % (name_map,))
        width = len(new_vars)
        out = {}
        for m, c in self.terms.items():
            mm = [0] * width
            for k, e in enumerate(m):
                if e:
                    mm[mapping[k]] = e
            out[tuple(mm)] = c
        return TruncSeries(new_vars, self.trunc, out)

    def without_vars(self, names):
        """Drop unused variables, shrinking the VarSet."""
        drop = {self.vars.index(nm) for nm in names}
        for m in self.terms:
            for k in drop:
                if m[k]:
                    raise ShapeError("variable %s is used" % self.vars.names[k])
        counts = list(self.vars.counts)
        for pos, fam in enumerate(FAMILIES):
            lo, hi = self.vars.fam_slice(fam)
            fam_drop = {k for k in drop if lo <= k < hi}
            if fam_drop != set(range(hi - len(fam_drop), hi)):
                raise ShapeError("can only drop a suffix of a family")
            counts[pos] -= len(fam_drop)
        keep = [k for k in range(len(self.vars)) if k not in drop]
        new_vars = VarSet(*counts)
        out = {tuple(m[k] for k in keep): c for m, c in self.terms.items()}
        return TruncSeries(new_vars, self.trunc, out)

    # ---------- substitution ----------

    def substitute(self, name, value):
        """Replace one variable by a series with zero constant term."""
        if isinstance(value, int) and value == 0:
            value = TruncSeries.zero(self.vars, self.trunc)
        self._check_shape(value)
        if not value.constant_term().is_zero():
            raise SubstitutionError(
                "replacement for %s has nonzero constant term" % name
            )
        idx = self.vars.index(name)
        groups = {}
        for m, c in self.terms.items():
            e = m[idx]
            mm = m[:idx] + (0,) + m[idx + 1 :]
            g = groups.setdefault(e, {})
            s = g.get(mm)
            s = c if s is None else s + c
            if s.is_zero():
                g.pop(mm, None)
            else:
                g[mm] = s
        out = TruncSeries.zero(self.vars, self.trunc)
        power = TruncSeries.const(self.vars, self.trunc, 1)
        cur = 0
        for e in sorted(groups):
            while cur < e:
                power = power * value
                cur += 1
            part = TruncSeries(self.vars, self.trunc, groups[e])
            out = out + (part * power if e else part)
        return out

    def substitute_many(self, subs):
        """Simultaneous substitution; replacements may not mention any
        substituted variable (checked), so sequential application agrees."""
        names = set(subs)
        for nm, val in subs.items():
            if isinstance(val, int):
                continue
            for other in names:
                if val.max_exponent(other):
                    raise SubstitutionError(
                        "replacement for %s mentions substituted %s" % (nm, other)
                    )
        out = self
        for nm, val in subs.items():
            out = out.substitute(nm, val)
        return out

    # ---------- inversion and exact division ----------

    def invert_unit(self):
        """Inverse of a series with constant term +1 or -1."""
        c0 = self.constant_term()
        if not c0.is_const() or c0.const_value() not in (1, -1):
            raise InversionError("constant term %r is not a unit" % c0)
        u = c0.const_value()
        N = self.trunc
        s_slices = {}
        for m, c in self.terms.items():
            d = sum(m)
            if d:
                s_slices.setdefault(d, {})[m] = c
        zero_mono = (0,) * len(self.vars)
        r_slices = {0: {zero_mono: CoeffPoly.const(u)}}
        for D in range(1, N + 1):
            acc = {}
            for k, sk in s_slices.items():
                if k > D:
                    continue
                rk = r_slices.get(D - k)
                if not rk:
                    continue
                for m1, c1 in sk.items():
                    for m2, c2 in rk.items():
                        m = tuple(a + b for a, b in zip(m1, m2))
                        c = c1 * c2
                        s = acc.get(m)
                        s = c if s is None else s + c
                        if s.is_zero():
                            acc.pop(m, None)
                        else:
                            acc[m] = s
            if acc:
                r_slices[D] = {m: c * (-u) for m, c in acc.items()}
        out = {}
        for sl in r_slices.values():
            out.update(sl)
        return TruncSeries(self.vars, N, out)

    def exact_div(self, d):
        """Exact division; result truncation drops by d's lowest-form degree.

        Performed homogeneous-degree-by-degree; within a degree, classical
        term division against d's graded-lex leading term.  A nonzero
        remainder raises DivisibilityError naming the first failing degree.
        """
        self._check_shape(d)
        if d.is_zero():
            raise DivisibilityError("division by the zero series")
        d_min = d.min_degree()
        N = self.trunc
        if d_min > N:
            raise DivisibilityError("divisor vanishes to the truncation degree")
        d0 = {m: c for m, c in d.terms.items() if sum(m) == d_min}
        lead_mono = max(d0, key=_grlex_key)
        lead_coeff = d0[lead_mono]
        residual = {}
        for m, c in self.terms.items():
            residual.setdefault(sum(m), {})[m] = c
        d_slices = {}
        for m, c in d.terms.items():
            d_slices.setdefault(sum(m), {})[m] = c
        q_terms = {}
        for D in range(0, N - d_min + 1):
            target = residual.pop(D + d_min, None)
            if not target:
                continue
            q_D = _div_homog(target, d0, lead_mono, lead_coeff, D + d_min)
            # subtract q_D * (d minus its lowest form) from higher residual
            for dd, dslice in d_slices.items():
                if dd == d_min:
                    continue
                for m1, c1 in q_D.items():
                    for m2, c2 in dslice.items():
                        tot = D + dd
                        if tot > N:
                            continue
                        m = tuple(a + b for a, b in zip(m1, m2))
                        sl = residual.setdefault(tot, {})
                        s = sl.get(m)
                        c = c1 * c2
                        s = -c if s is None else s - c
                        if s.is_zero():
                            sl.pop(m, None)
                        else:
                            sl[m] = s
            q_terms.update(q_D)
        for D in sorted(residual):
            if residual[D]:
                raise DivisibilityError("nonzero remainder at degree %d" % D)
        return TruncSeries(self.vars, N - d_min, q_terms)

    # ---------- symmetrization ----------

    def apply_x_permutation(self, perm):
        """Permute the first len(perm) x-variables: x_{k+1} -> x_{perm[k]+1}."""
        lo, hi = self.vars.fam_slice("x")
        n = len(perm)
        if n > hi - lo:
            raise ShapeError("permutation exceeds x-variable count")
        out = {}
        for m, c in self.terms.items():
            mm = list(m)
            for k in range(n):
                mm[lo + perm[k]] = m[lo + k]
            out[tuple(mm)] = c
        return TruncSeries(self.vars, self.trunc, out)

    def symmetrize(self, n, signed=False):
        """Sum of (sgn w) w(self) over permutations w of x_1..x_n."""
        lo, hi = self.vars.fam_slice("x")
        if n > hi - lo:
            raise ShapeError("n=%d exceeds x-variable count %d" % (n, hi - lo))
        out = {}
        for perm in permutations(range(n)):
            sgn = _perm_sign(perm) if signed else 1
            for m, c in self.terms.items():
                mm = list(m)
                for k in range(n):
                    mm[lo + perm[k]] = m[lo + k]
                key = tuple(mm)
                add = c if sgn == 1 else -c
                s = out.get(key)
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return TruncSeries(self.vars, self.trunc, out)

    def is_symmetric(self, n):
        lo, hi = self.vars.fam_slice("x")
        if n > hi - lo:
            raise ShapeError("n exceeds x-variable count")
        for k in range(n - 1):
            perm = list(range(n))
            perm[k], perm[k + 1] = perm[k + 1], perm[k]
            if self.apply_x_permutation(perm).terms != self.terms:
                return False
        return True

    # ---------- grading ----------

    def graded_degree(self):
        """The common value of (variable degree - coefficient weight);
        None for the zero series, error if inhomogeneous."""
        vals = set()
        for m, c in self.terms.items():
            vals.add(sum(m) - c.weight())
            if len(vals) > 1:
                raise ValueError("series is not graded-homogeneous")
        return vals.pop() if vals else None

    # ---------- serialization ----------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def to_json_obj(self):
        terms = []
        for m, c in self.sorted_terms():
            md = {}
            for k, e in enumerate(m):
                if e:
                    md[self.vars.names[k]] = e
            terms.append({"m": md, "coeff": c.to_json_obj()})
        return {
            "vars": list(self.vars.names),
            "trunc": self.trunc,
            "terms": terms,
        }

    @staticmethod
    def from_json_obj(obj):
        names = obj["vars"]
        counts = {f: 0 for f in FAMILIES}
        for nm in names:
            counts[nm[0]] += 1
        vars = VarSet(counts["x"], counts["b"], counts["y"], counts["t"])
        if list(vars.names) != list(names):
            raise ShapeError("non-canonical variable list %r" % (names,))
        terms = {}
        for entry in obj["terms"]:
            mono = [0] * len(vars)
            for nm, e in entry["m"].items():
                mono[vars.index(nm)] = e
            terms[tuple(mono)] = CoeffPoly.from_json_obj(entry["coeff"])
        return TruncSeries(vars, obj["trunc"], terms)

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def _div_homog(target, d0, lead_mono, lead_coeff, degree):
    """Divide the homogeneous slice `target` exactly by the homogeneous
    polynomial d0 (dict), given d0's graded-lex leading term."""
    work = dict(target)
    q = {}
    lc_is_const = lead_coeff.is_const()
    lc_int = lead_coeff.const_value() if lc_is_const else None
    if not lc_is_const and not lead_coeff.is_monomial_term():
        raise DivisibilityError(
            "divisor leading coefficient is not a single term: %r" % lead_coeff
        )
    while work:
        m = max(work, key=_grlex_key)
        c = work.pop(m)
        qm = tuple(a - b for a, b in zip(m, lead_mono))
        if any(e < 0 for e in qm):
            raise DivisibilityError(
                "leading monomial not divisible at degree %d" % degree
            )
        if lc_is_const:
            qc = _coeff_div_int(c, lc_int, degree)
        else:
            qc = _coeff_div_term(c, lead_coeff, degree)
        q[qm] = q.get(qm, CoeffPoly.zero()) + qc
        for m2, c2 in d0.items():
            mm = tuple(a + b for a, b in zip(qm, m2))
            s = work.get(mm, CoeffPoly.zero()) - qc * c2
            if s.is_zero():
                work.pop(mm, None)
            else:
                work[mm] = s
        work.pop(m, None)
    return {m: c for m, c in q.items() if not c.is_zero()}


def _coeff_div_int(c, k, degree):
    from .coeffring import exact_div_int

    try:
        return exact_div_int(c, k)
    except ValueError as exc:
        raise DivisibilityError("at degree %d: %s" % (degree, exc))


def _coeff_div_term(c, lead, degree):
    """Divide a CoeffPoly by a one-term CoeffPoly (int times a-monomial)."""
    ((lm, lk),) = lead.terms.items()
    ld = dict(lm)
    out = {}
    for mono, cc in c.terms.items():
        md = dict(mono)
        for g, e in ld.items():
            if md.get(g, 0) < e:
                raise DivisibilityError(
                    "a-monomial not divisible at degree %d" % degree
                )
            md[g] -= e
            if not md[g]:
                del md[g]
        qq, r = divmod(cc, lk)
        if r:
            raise DivisibilityError("coefficient not divisible at degree %d" % degree)
        out[tuple(sorted(md.items()))] = qq
    return CoeffPoly(out)
