"""Partitions, Grassmannian (signed) permutations, and root combinatorics.

Dictionary between partition labels and minimum-length coset
representatives, their reduced words, inversion sets, and the
corresponding products of formal-group Euler classes.
"""

from .series import TruncSeries, VarSet


class Partition:
    """Weakly decreasing tuple of positive integers; trailing zeros dropped."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for k in range(len(ps) - 1):
            if ps[k] < ps[k + 1]:
                raise ValueError("parts must be weakly decreasing")
        if ps and ps[-1] < 0:
            raise ValueError("parts must be nonnegative")
        self.parts = tuple(ps)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __repr__(self):
        return "Partition%r" % (self.parts,)

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def part(self, i):
        """1-indexed part, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self):
        if not self.parts:
            return Partition(())
        cols = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p >= j)
                               for j in range(1, cols + 1)))

    def contains(self, other):
        other = as_partition(other)
        if len(other.parts) > len(self.parts):
            return False
        return all(self.parts[k] >= other.parts[k] for k in range(len(other.parts)))

    def boxes(self):
        """All (row, col) pairs, 1-indexed."""
        return [(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p)]


class StrictPartition(Partition):
    """Strictly decreasing positive parts."""

    __slots__ = ()

    def __init__(self, parts=()):
        super().__init__(parts)
        for k in range(len(self.parts) - 1):
            if self.parts[k] <= self.parts[k + 1]:
                raise ValueError("parts must be strictly decreasing")

    def __repr__(self):
        return "StrictPartition%r" % (self.parts,)

    def shifted_boxes(self):
        """Shifted diagram: row i occupies columns i .. lambda_i + i - 1."""
        return [(i + 1, j) for i, p in enumerate(self.parts)
                for j in range(i + 1, p + i + 1)]

    def shifted(self):
        """The plain partition (lambda_1 + 1, ..., lambda_r + 1), with an
        extra part 1 appended when the length is odd."""
        out = [p + 1 for p in self.parts]
        if len(out) % 2 == 1:
            out.append(1)
        return Partition(out)


def as_partition(lam):
    if isinstance(lam, Partition):
        return lam
    return Partition(tuple(lam))


def as_strict(lam):
    if isinstance(lam, StrictPartition):
        return lam
    return StrictPartition(tuple(lam))


def strict_partitions_up_to(max_size, max_part=None):
    """All strict partitions of size <= max_size, sorted by (size, revlex)."""
    out = [()]
    def rec(prefix, remaining, cap):
        for p in range(min(remaining, cap), 0, -1):
            out.append(prefix + (p,))
            rec(prefix + (p,), remaining - p, p - 1)
    rec((), max_size, max_size if max_part is None else max_part)
    out.sort(key=lambda t: (sum(t), tuple(-p for p in t)))
    return [StrictPartition(t) for t in out]


def partitions_in_box(rows, cols):
    """All partitions fitting in a rows x cols box, sorted by (size, revlex)."""
    out = []
    def rec(prefix, row, cap):
        out.append(tuple(prefix))
        if row == rows:
            return
        for p in range(cap, 0, -1):
            prefix.append(p)
            rec(prefix, row + 1, p)
            prefix.pop()
    rec([], 0, cols)
    out = sorted(set(out), key=lambda t: (sum(t), tuple(-p for p in t)))
    return [Partition(t) for t in out]


class GrassmannianPerm:
    """A (signed) permutation in one-line notation.

    kind "A": a permutation of 1..N with at most one descent.
    kind "C": a signed permutation; barred entries are negative ints.
    """

    __slots__ = ("kind", "word")

    def __init__(self, kind, word):
        if kind not in ("A", "C"):
            raise ValueError("kind must be 'A' or 'C'")
        self.kind = kind
        self.word = tuple(int(v) for v in word)
        if kind == "A":
            if sorted(self.word) != list(range(1, len(self.word) + 1)):
                raise ValueError("not a permutation of 1..N")
        else:
            if sorted(abs(v) for v in self.word) != list(range(1, len(self.word) + 1)):
                raise ValueError("not a signed permutation")

    def __eq__(self, other):
        return (isinstance(other, GrassmannianPerm)
                and self.kind == other.kind and self.word == other.word)

    def __hash__(self):
        return hash((self.kind, self.word))

    def __repr__(self):
        if self.kind == "A":
            body = " ".join(str(v) for v in self.word)
        else:
            body = " ".join(("%db" % -v) if v < 0 else str(v) for v in self.word)
        return "<%s: %s>" % (self.kind, body)

    def descents(self, n=None):
        """Positions k with w(k) > w(k+1); for kind C also 0 when w(1) < 0."""
        out = [k for k in range(1, len(self.word))
               if self.word[k - 1] > self.word[k]]
        if self.kind == "C" and self.word and self.word[0] < 0:
            out.insert(0, 0)
        return out


def lambda_to_w_A(lam, n, N):
    """Minimum-length representative for a partition in an n x (N-n) box."""
    lam = as_partition(lam)
    if len(lam) > n or (lam.parts and lam.parts[0] > N - n):
        raise ValueError("partition does not fit the n x (N-n) window")
    conj = lam.conjugate()
    first = [lam.part(n - k + 1) + k for k in range(1, n + 1)]
    rest = [n + k - conj.part(k) for k in range(1, N - n + 1)]
    return GrassmannianPerm("A", first + rest)


def w_to_lambda_A(w, n):
    word = w.word if isinstance(w, GrassmannianPerm) else tuple(w)
    lam = [word[n - i] - (n - i + 1) for i in range(1, n + 1)]
    if any(p < 0 for p in lam):
        raise ValueError("permutation is not Grassmannian at position n")
    return Partition(lam)


def lambda_to_w_C(lam, m):
    """Signed permutation with barred entries lambda_1, ..., lambda_r."""
    lam = as_strict(lam)
    if lam.parts and lam.parts[0] > m:
        raise ValueError("partition does not fit in the rank-m window")
    used = set(lam.parts)
    tail = [v for v in range(1, m + 1) if v not in used]
    return GrassmannianPerm("C", [-p for p in lam.parts] + tail)


def w_to_lambda_C(w):
    word = w.word if isinstance(w, GrassmannianPerm) else tuple(w)
    parts = []
    k = 0
    while k < len(word) and word[k] < 0:
        parts.append(-word[k])
        k += 1
    if any(v < 0 for v in word[k:]):
        raise ValueError("barred entries must form a prefix")
    if sorted(word[k:]) != list(word[k:]):
        raise ValueError("unbarred tail must increase")
    return StrictPartition(parts)


def reduced_word(lam, kind, n=None):
    """Reduced word read off the (shifted) diagram, bottom row first,
    right to left within each row.

    kind "A" uses box values n - i + j; kind "C" uses contents j - i,
    with 0 denoting the sign reflection.
    """
    if kind == "A":
        lam = as_partition(lam)
        if n is None:
            raise ValueError("kind 'A' needs n")
        rows = [[n - i + j for j in range(1, p + 1)] for i, p in
                enumerate(lam.parts, start=1)]
    elif kind == "C":
        lam = as_strict(lam)
        rows = [[j - i for j in range(i, p + i)] for i, p in
                enumerate(lam.parts, start=1)]
    else:
        raise ValueError("kind must be 'A' or 'C'")
    out = []
    for row in reversed(rows):
        out.extend(reversed(row))
    return out


def simple_action(lam, i, kind, n=None):
    """Action of the simple reflection s_i on a partition label.

    Adds the unique addable box of value/content i, else removes the
    unique removable one, else returns the label unchanged.
    """
    if kind == "A":
        lam = as_partition(lam)
        if n is None:
            raise ValueError("kind 'A' needs n")
        parts = list(lam.parts)
        for r in range(len(parts)):
            if n - (r + 1) + (parts[r] + 1) == i and (r == 0 or parts[r - 1] > parts[r]):
                parts[r] += 1
                return Partition(parts)
        if len(parts) < n and n - (len(parts) + 1) + 1 == i:
            return Partition(parts + [1])
        for r in range(len(parts)):
            if parts[r] and n - (r + 1) + parts[r] == i and \
                    (r == len(parts) - 1 or parts[r + 1] < parts[r]):
                parts[r] -= 1
                return Partition(parts)
        return lam
    if kind == "C":
        lam = as_strict(lam)
        parts = list(lam.parts)
        for r in range(len(parts)):
            if parts[r] == i and (r == 0 or parts[r] <= parts[r - 1] - 2):
                parts[r] += 1
                return StrictPartition(parts)
        if i == 0 and (not parts or parts[-1] >= 2):
            return StrictPartition(parts + [1])
        for r in range(len(parts)):
            if parts[r] - 1 == i and (r == len(parts) - 1 or parts[r + 1] <= parts[r] - 2):
                parts[r] -= 1
                return StrictPartition(parts)
        return lam
    raise ValueError("kind must be 'A' or 'C'")


class Root:
    """A root written in the torus characters t_a: one of t_b - t_a,
    t_a + t_b, or 2 t_a."""

    __slots__ = ("kind", "a", "b")

    def __init__(self, kind, a, b):
        if kind not in ("minus", "plus", "double"):
            raise ValueError("kind must be 'minus', 'plus' or 'double'")
        if kind == "double" and a != b:
            raise ValueError("doubled root needs a == b")
        if kind == "minus" and a == b:
            raise ValueError("zero root")
        self.kind = kind
        self.a = a
        self.b = b

    def __eq__(self, other):
        return (isinstance(other, Root) and self.kind == other.kind
                and self.a == other.a and self.b == other.b)

    def __hash__(self):
        return hash((self.kind, self.a, self.b))

    def __repr__(self):
        if self.kind == "minus":
            return "t%d - t%d" % (self.b, self.a)
        if self.kind == "plus":
            return "t%d + t%d" % (self.a, self.b)
        return "2 t%d" % self.a


def inversion_set(lam, n, kind):
    """Inversion roots of the minimum-length representative of lam."""
    if kind == "A":
        lam = as_partition(lam)
        conj = lam.conjugate()
        return [Root("minus", n + j - conj.part(j), lam.part(i) + n - i + 1)
                for (i, j) in lam.boxes()]
    if kind == "C":
        lam = as_strict(lam)
        parts = lam.parts
        r = len(parts)
        out = []
        for i in range(r):
            for j in range(i, r):
                if i == j:
                    out.append(Root("double", parts[i], parts[i]))
                else:
                    out.append(Root("plus", parts[j], parts[i]))
        lower = set(parts)
        for i in range(r):
            skip = {p for p in parts[i + 1:]}
            for j in range(1, parts[i]):
                if j not in skip:
                    out.append(Root("minus", j, parts[i]))
        return out
    raise ValueError("kind must be 'A' or 'C'")


def euler(root, ctx, nb=None, extra_vars=None):
    """Euler class e(-alpha) as a series in the deformation variables b."""
    if nb is None:
        nb = max(root.a, root.b)
    vs = extra_vars if extra_vars is not None else VarSet(0, nb, 0, 0)
    N = ctx.trunc
    ba = TruncSeries.variable(vs, N, "b%d" % root.a)
    if root.kind == "minus":
        bb = TruncSeries.variable(vs, N, "b%d" % root.b)
        return ctx.formal_sum(ba, ctx.formal_inverse(bb))
    if root.kind == "double":
        iba = ctx.formal_inverse(ba)
        return ctx.formal_sum(iba, iba)
    bb = TruncSeries.variable(vs, N, "b%d" % root.b)
    return ctx.formal_sum(ctx.formal_inverse(ba), ctx.formal_inverse(bb))


def euler_product(lam, n, kind, ctx):
    """Product of e(-alpha) over the inversion set of lam."""
    roots = inversion_set(lam, n, kind)
    if kind == "A":
        lam = as_partition(lam)
        nb = (lam.part(1) + n) if lam.parts else n
    else:
        lam = as_strict(lam)
        nb = lam.part(1) if lam.parts else 1
    vs = VarSet(0, nb, 0, 0)
    out = TruncSeries.const(vs, ctx.trunc, 1)
    for rt in roots:
        out = out * euler(rt, ctx, extra_vars=vs)
    return out
