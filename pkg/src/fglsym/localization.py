"""Evaluation of symmetric series at shifted parameter points, the
divisibility conditions such value families satisfy, and the greedy
expansion over an evaluated basis."""

from collections import namedtuple

from .combinat import (Root, as_partition, as_strict, euler,
                       partitions_in_box, strict_partitions_up_to)
from .duals import MembershipError
from .series import DivisibilityError, TruncSeries, VarSet
from .sympoly import Expansion
from .uschur import P_L, Q_L, USchurRequest, eval_at, s_L

KINDS = ("A", "C", "D")
BASIS_TAG = {"A": "sL", "C": "QL", "D": "PL"}


class WindowError(ValueError):
    """A requested reflection leaves the declared label window."""


def _label(mu, kind):
    if kind == "A":
        return tuple(as_partition(mu).parts)
    return tuple(as_strict(mu).parts)


def _nb(s):
    lo, hi = s.vars.fam_slice("b")
    return hi - lo


def _embed_nb(s, vs):
    return s if s.vars is vs or s.vars.names == vs.names else s.embed(vs, s.trunc)


def window_A(n, K):
    """Labels of the type A window: partitions inside an n x K box."""
    return [tuple(p) for p in partitions_in_box(n, K)]


def window_CD(K):
    """Labels of the C and D windows: strict partitions with parts <= K."""
    return [tuple(s.parts) for s in
            strict_partitions_up_to(K * (K + 1) // 2, max_part=K)]


def default_window(kind, n, K=4):
    """The stock window for a localization type, capped at n rows."""
    if kind == "A":
        return window_A(n, K)
    if kind in ("C", "D"):
        return [mu for mu in window_CD(K) if len(mu) <= n]
    raise ValueError("kind must be one of %r" % (KINDS,))


def phi(F, mu, n, kind, ctx):
    """Evaluate F at the parameter point attached to mu; a series in b.

    Type A sends x_i to the inverse of b at index mu_i + n - i + 1, type C
    to index mu_i (0 beyond the length), type D to index mu_i + 1 along the
    even-padded shifted shape.
    """
    mu = _label(mu, kind)
    if kind == "A":
        if len(mu) > n:
            raise ValueError("label %r longer than %d variables" % (mu, n))
        full = list(mu) + [0] * (n - len(mu))
        assignment = {i + 1: full[i] + n - i for i in range(n)}
    elif kind == "C":
        if len(mu) > n:
            raise ValueError("label %r longer than %d variables" % (mu, n))
        assignment = {i + 1: (mu[i] if i < len(mu) else 0) for i in range(n)}
    elif kind == "D":
        sh = as_strict(mu).shifted().parts
        if len(sh) > n:
            raise ValueError("shifted label %r needs %d variables, have %d"
                             % (mu, len(sh), n))
        assignment = {i + 1: (sh[i] if i < len(sh) else 0) for i in range(n)}
    else:
        raise ValueError("kind must be one of %r" % (KINDS,))
    return eval_at(F, assignment, ctx)


class LocalizedFamily:
    """Values of a localization map over a finite label window."""

    __slots__ = ("kind", "n", "points")

    def __init__(self, kind, n, points):
        if kind not in KINDS:
            raise ValueError("kind must be one of %r" % (KINDS,))
        self.kind = kind
        self.n = n
        self.points = {}
        trunc = None
        names = None
        for mu, v in dict(points).items():
            mu = tuple(mu)
            nx, nb, ny, nt = v.vars.counts
            if (nx, ny, nt) != (0, 0, 0):
                raise ValueError("value at %r is not a series in b alone" % (mu,))
            if trunc is None:
                trunc, names = v.trunc, v.vars.names
            elif v.trunc != trunc or v.vars.names != names:
                raise ValueError("value at %r disagrees in shape" % (mu,))
            self.points[mu] = v

    def labels(self):
        return list(self.points)

    def value(self, mu):
        return self.points[tuple(mu)]

    def with_value(self, mu, value):
        """Copy with one value replaced; used for perturbation controls."""
        mu = tuple(mu)
        if mu not in self.points:
            raise KeyError("label %r not in the window" % (mu,))
        pts = dict(self.points)
        pts[mu] = value
        return LocalizedFamily(self.kind, self.n, pts)

    def __eq__(self, other):
        return (isinstance(other, LocalizedFamily) and self.kind == other.kind
                and self.n == other.n and self.points == other.points)

    def __repr__(self):
        return "<LocalizedFamily %s n=%d over %d points>" % (
            self.kind, self.n, len(self.points))

    def to_json_obj(self):
        return {"type": self.kind, "n": self.n,
                "points": [{"mu": list(mu), "value": v.to_json_obj()}
                           for mu, v in self.points.items()]}

    @staticmethod
    def from_json_obj(obj):
        pts = {tuple(p["mu"]): TruncSeries.from_json_obj(p["value"])
               for p in obj["points"]}
        return LocalizedFamily(obj["type"], obj["n"], pts)


def localize_family(F, n, kind, window, ctx):
    """Evaluate F at every window label and bundle the values."""
    vals = []
    for mu in window:
        mu = _label(mu, kind)
        vals.append((mu, phi(F, mu, n, kind, ctx)))
    nb = max([0] + [_nb(v) for _, v in vals])
    vs = VarSet(0, nb, 0, 0)
    pts = {}
    for mu, v in vals:
        if mu in pts:
            raise ValueError("duplicate window label %r" % (mu,))
        pts[mu] = _embed_nb(v, vs)
    return LocalizedFamily(kind, n, pts)


def reflect(mu, root, kind, n=None):
    """Label of the reflection of a positive root applied to mu.

    Returns mu unchanged when the reflection fixes its coset.  Type A
    toggles membership of the two indices in the shifted index set
    {mu_i + n - i + 1}; types C and D toggle parts: t_b - t_a exchanges a
    part, t_a + t_b adds or removes the pair, 2 t_a (type C) one part.
    """
    if kind == "A":
        if n is None:
            raise ValueError("the type A reflection needs n")
        if root.kind != "minus":
            raise ValueError("type A has only roots t_j - t_i")
        mu = _label(mu, "A")
        if len(mu) > n:
            raise ValueError("label %r longer than %d rows" % (mu, n))
        full = list(mu) + [0] * (n - len(mu))
        S = {full[i] + n - i for i in range(n)}
        if (root.a in S) == (root.b in S):
            return mu
        S ^= {root.a, root.b}
        beta = sorted(S, reverse=True)
        out = [beta[i] - (n - i) for i in range(n)]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)
    if kind not in ("C", "D"):
        raise ValueError("kind must be one of %r" % (KINDS,))
    mu = _label(mu, kind)
    # type C reflections toggle parts; type D ones toggle the even-padded
    # shifted indices mu_i + 1, matching the points phi evaluates at
    S = set(as_strict(mu).shifted().parts) if kind == "D" else set(mu)
    if root.kind == "minus":
        move = (root.a in S) != (root.b in S)
        toggle = {root.a, root.b}
    elif root.kind == "plus":
        if root.a == root.b:
            raise ValueError("degenerate doubled root written as a plus root")
        move = (root.a in S) == (root.b in S)
        toggle = {root.a, root.b}
    else:
        if kind == "D":
            raise ValueError("type D has no doubled roots")
        move = True
        toggle = {root.a}
    if not move:
        return mu
    S ^= toggle
    if kind == "D":
        S = {v - 1 for v in S if v >= 2}
    return tuple(sorted(S, reverse=True))


def roots_for_window(kind, labels, n=None):
    """Positive roots whose indices can move one window label to another."""
    labels = [tuple(m) for m in labels]
    tops = [lab[0] for lab in labels if lab]
    if kind == "A":
        if n is None:
            raise ValueError("type A roots need n")
        top = max(tops, default=0) + n
        return [Root("minus", i, j)
                for j in range(2, top + 1) for i in range(1, j)]
    top = max(tops, default=0)
    if kind == "D":
        top += 1
    out = [Root("minus", i, j) for j in range(2, top + 1) for i in range(1, j)]
    out += [Root("plus", i, j) for j in range(2, top + 1) for i in range(1, j)]
    if kind == "C":
        out += [Root("double", i, i) for i in range(1, top + 1)]
    return out


GKMReport = namedtuple("GKMReport", "ok checked failures")


def gkm_check(fam, ctx, roots=None):
    """Divisibility of value differences along reflections in the window.

    With an explicit root list the window must be closed under every
    reflection that moves a label; the default root list is filtered to
    the reflections staying inside.  Each unordered label pair is checked
    once: the difference of values must be exactly divisible by the root's
    b-series euler factor.
    """
    window = set(fam.points)
    explicit = roots is not None
    if roots is None:
        roots = roots_for_window(fam.kind, fam.points, fam.n)
    checked = 0
    failures = []
    for mu in fam.points:
        for rt in roots:
            nu = reflect(mu, rt, fam.kind, fam.n)
            if nu == mu:
                continue
            if nu not in window:
                if explicit:
                    raise WindowError("window not closed: %r sends %r to %r"
                                      % (rt, mu, nu))
                continue
            if nu < mu:
                continue
            diff = fam.points[nu] - fam.points[mu]
            checked += 1
            if diff.is_zero():
                continue
            div = euler(rt, ctx, extra_vars=diff.vars)
            t = min(diff.trunc, div.trunc)
            try:
                diff.truncate_to(t).exact_div(div.truncate_to(t))
            except DivisibilityError:
                failures.append((mu, rt, nu))
    return GKMReport(not failures, checked, failures)


def basis_element(kind, nu, n, ctx):
    """The basis series the greedy expansion eliminates against."""
    if kind == "A":
        return s_L(nu, n, ctx)
    if kind in ("C", "D"):
        req = USchurRequest(as_strict(nu), n, ctx,
                            plus_variant=(kind == "D"))
        return Q_L(req) if kind == "C" else P_L(req)
    raise ValueError("kind must be one of %r" % (KINDS,))


def _contained(nu, mu):
    return len(nu) <= len(mu) and all(nu[i] <= mu[i] for i in range(len(nu)))


def expand_greedy(F, kind, n, ctx, window=None, K=4):
    """Expand F over the evaluated basis by minimal-support elimination.

    Repeatedly localizes, picks the lex-least containment-minimal support
    label, divides off its coefficient against the basis element's value
    there, and subtracts.  Raises MembershipError when a coefficient
    division is inexact or the support refuses to shrink, i.e. when F is
    not in the basis span over this window.
    """
    if window is None:
        window = default_window(kind, n, K)
    fam = localize_family(F, n, kind, window, ctx)
    vals = dict(fam.points)
    order = list(vals)
    entries = {}
    seen = set()
    while True:
        supp = [mu for mu in order if not vals[mu].is_zero()]
        if not supp:
            break
        minimal = [mu for mu in supp
                   if not any(nu != mu and _contained(nu, mu) for nu in supp)]
        piv = min(minimal)
        if piv in seen:
            raise MembershipError(
                "support at %r resists elimination; not in the basis span "
                "over this window" % (piv,))
        seen.add(piv)
        base = basis_element(kind, piv, n, ctx)
        basvals = {mu: phi(base, mu, n, kind, ctx) for mu in order}
        nb = max(_nb(v) for v in list(basvals.values()) + list(vals.values()))
        vs = VarSet(0, nb, 0, 0)
        for mu in order:
            vals[mu] = _embed_nb(vals[mu], vs)
            basvals[mu] = _embed_nb(basvals[mu], vs)
        diag = basvals[piv]
        try:
            c = vals[piv].exact_div(diag)
        except DivisibilityError as exc:
            raise MembershipError(
                "coefficient at %r is not exactly divisible: %s" % (piv, exc))
        d = diag.min_degree()
        for mu in order:
            mn = basvals[mu].min_degree()
            if mn is not None and mn < d:
                raise MembershipError(
                    "basis value at %r undercuts the pivot degree" % (mu,))
        c = c.pad_trunc(vals[piv].trunc)
        entries[piv] = c
        for mu in order:
            vals[mu] = vals[mu] - c * basvals[mu]
    return Expansion(BASIS_TAG[kind], entries)


def recombine(expansion, kind, n, ctx, trunc=None):
    """Sum of coefficient times basis element over the expansion entries."""
    terms = []
    for nu, c in expansion.sorted_items():
        if not isinstance(c, TruncSeries):
            c = TruncSeries.const(VarSet(0, 0, 0, 0),
                                  trunc if trunc is not None else ctx.trunc, c)
        terms.append((c, basis_element(kind, nu, n, ctx)))
    if trunc is None:
        trunc = terms[0][0].trunc if terms else ctx.trunc
    nb = max([0] + [_nb(c) for c, _ in terms] + [_nb(b) for _, b in terms])
    vs = VarSet(n, nb, 0, 0)
    out = TruncSeries.zero(vs, trunc)
    for c, base in terms:
        if c.trunc < trunc:
            raise ValueError("coefficient known only to order %d < %d"
                             % (c.trunc, trunc))
        cc = c.embed(vs, c.trunc).truncate_to(trunc)
        bb = base.embed(vs, base.trunc).truncate_to(trunc)
        out = out + cc * bb
    return out
