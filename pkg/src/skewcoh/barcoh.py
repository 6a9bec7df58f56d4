"""Reduced bar complex with trivial coefficients.

``C^n = Hom((A_+)^{(x)n}, k)`` has a basis of n-tuples of positive normal
words; tuples are stored as tuples of indices into ``BarComplex.words``.
When the algebra is graded (homogeneous relations), the complex splits by
internal degree and every matrix is built one degree block at a time.

Sign convention: ``(df)(x_1..x_{n+1}) = sum_i (-1)^i f(.., x_i x_{i+1}, ..)``,
so ``d(f u g) = df u g + (-1)^|f| f u dg`` for the concatenation product.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import product as iproduct
from typing import Callable, Iterable, Mapping, Sequence

from .algebras import GroupAction, QuotientAlgebra
from .ffmat import FMatrix
from .freealg import Word, format_word

DEFAULT_BUDGET_MB = 16.0

Tup = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """Refusal to build a bar-complex block larger than the memory budget."""


class BarComplex:
    def __init__(self, alg: QuotientAlgebra, budget_mb: float = DEFAULT_BUDGET_MB):
        self.alg = alg
        self.p = alg.p
        self.budget_mb = budget_mb
        self.words: list[Word] = alg.positive_basis()
        self.widx = {w: i for i, w in enumerate(self.words)}
        self.deg = [alg.degree(w) for w in self.words]
        self.by_degree: dict[int, list[int]] = {}
        for i, d in enumerate(self.deg):
            self.by_degree.setdefault(d, []).append(i)
        self._prod: dict[tuple[int, int], list[tuple[int, int]]] = {}
        self._tuples: dict[tuple[int, int], list[Tup]] = {}
        self._tindex: dict[tuple[int, int], dict[Tup, int]] = {}
        self._mats: dict[tuple[int, int], FMatrix] = {}

    # bookkeeping ----------------------------------------------------------

    def product(self, i: int, j: int) -> list[tuple[int, int]]:
        key = (i, j)
        hit = self._prod.get(key)
        if hit is None:
            nf = self.alg.mul_words(self.words[i], self.words[j])
            if () in nf:
                raise ValueError("augmentation ideal is not closed under multiplication")
            hit = [(self.widx[w], c) for w, c in nf.items()]
            self._prod[key] = hit
        return hit

    def tuple_degree(self, t: Tup) -> int:
        return sum(self.deg[i] for i in t)

    @lru_cache(maxsize=None)
    def count(self, n: int, t: int) -> int:
        if n == 0:
            return 1 if t == 0 else 0
        return sum(len(ix) * self.count(n - 1, t - d) for d, ix in self.by_degree.items()
                   if t >= d)

    def degrees(self, n: int) -> list[int]:
        if n == 0:
            return [0]
        ds = sorted(self.by_degree)
        lo, hi = n * ds[0], n * ds[-1]
        return [t for t in range(lo, hi + 1) if self.count(n, t)]

    def tuples(self, n: int, t: int) -> list[Tup]:
        key = (n, t)
        hit = self._tuples.get(key)
        if hit is None:
            hit = []

            def rec(prefix: Tup, left: int, remaining: int):
                if left == 0:
                    if remaining == 0:
                        hit.append(prefix)
                    return
                for d in sorted(self.by_degree):
                    if self.count(left - 1, remaining - d):
                        for i in self.by_degree[d]:
                            rec(prefix + (i,), left - 1, remaining - d)

            rec((), n, t)
            hit.sort()
            self._tuples[key] = hit
            self._tindex[key] = {tp: k for k, tp in enumerate(hit)}
        return hit

    def tuple_index(self, n: int, t: int) -> dict[Tup, int]:
        self.tuples(n, t)
        return self._tindex[(n, t)]

    def block_bytes(self, n: int, t: int) -> int:
        """Dense-equivalent size of the block of ``d: C^n -> C^{n+1}`` in degree t."""
        return 8 * self.count(n, t) * self.count(n + 1, t)

    def check_budget(self, n: int, t: int) -> None:
        need = self.block_bytes(n, t) / 2**20
        if need > self.budget_mb:
            raise BudgetExceeded(
                f"d: C^{n} -> C^{n + 1} in internal degree {t} needs {need:.1f} MB "
                f"(budget {self.budget_mb} MB)")

    def matrix(self, n: int, t: int) -> FMatrix:
        """Block of ``d: C^n -> C^{n+1}``: rows (n+1)-tuples, columns n-tuples, degree t."""
        key = (n, t)
        hit = self._mats.get(key)
        if hit is not None:
            return hit
        self.check_budget(n, t)
        rows = self.tuples(n + 1, t)
        cols = self.tuple_index(n, t)
        p = self.p
        out = []
        for x in rows:
            r: dict[int, int] = {}
            for i in range(n):
                sign = -1 if i % 2 == 0 else 1
                head, tail = x[:i], x[i + 2:]
                for k, c in self.product(x[i], x[i + 1]):
                    col = cols[head + (k,) + tail]
                    r[col] = (r.get(col, 0) + sign * c) % p
            out.append(r)
        hit = FMatrix.from_rows(p, len(cols), out)
        self._mats[key] = hit
        return hit

    def fmt_tuple(self, t: Tup) -> str:
        return "|".join(format_word(self.words[i], self.alg.names) for i in t)


def bar_complex(alg: QuotientAlgebra, budget_mb: float | None = None) -> BarComplex:
    """Shared complex per algebra object (caches products and matrices)."""
    bar = getattr(alg, "_bar", None)
    if bar is None:
        bar = BarComplex(alg, DEFAULT_BUDGET_MB if budget_mb is None else budget_mb)
        alg._bar = bar
    elif budget_mb is not None:
        bar.budget_mb = budget_mb
    return bar


class Cochain:
    """Sparse n-cochain: ``{index tuple: value}`` over the complex's basis words."""

    __slots__ = ("bar", "degree", "values")

    def __init__(self, bar: BarComplex, degree: int, values: Mapping[Tup, int] | None = None):
        self.bar = bar
        self.degree = degree
        p = bar.p
        self.values: dict[Tup, int] = {}
        for k, v in (values or {}).items():
            if len(k) != degree:
                raise ValueError(f"tuple {k} has wrong length for degree {degree}")
            v %= p
            if v:
                self.values[tuple(k)] = v

    @classmethod
    def unit(cls, bar: BarComplex) -> "Cochain":
        return cls(bar, 0, {(): 1})

    @classmethod
    def from_function(cls, bar: BarComplex, n: int, fn: Callable[..., int],
                      degrees: Iterable[int] | None = None) -> "Cochain":
        """Tabulate ``fn(word_1, ..., word_n)`` on the listed internal degrees."""
        vals = {}
        for t in (bar.degrees(n) if degrees is None else degrees):
            for tp in bar.tuples(n, t):
                v = fn(*(bar.words[i] for i in tp)) % bar.p
                if v:
                    vals[tp] = v
        return cls(bar, n, vals)

    def __call__(self, *words: Word) -> int:
        try:
            return self.values.get(tuple(self.bar.widx[w] for w in words), 0)
        except KeyError:
            raise KeyError("arguments must be positive normal words") from None

    def _same(self, other: "Cochain") -> None:
        if other.bar is not self.bar or other.degree != self.degree:
            raise ValueError("cochains live in different complexes or degrees")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._same(other)
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, 0) + v
        return Cochain(self.bar, self.degree, out)

    def __neg__(self) -> "Cochain":
        return Cochain(self.bar, self.degree, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __rmul__(self, c: int) -> "Cochain":
        return Cochain(self.bar, self.degree, {k: c * v for k, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.bar is other.bar and self.degree == other.degree and self.values == other.values

    def __bool__(self) -> bool:
        return bool(self.values)

    def support_degrees(self) -> list[int]:
        return sorted({self.bar.tuple_degree(k) for k in self.values})

    def block(self, t: int) -> list[int]:
        idx = self.bar.tuple_index(self.degree, t)
        vec = [0] * len(idx)
        for k, v in self.values.items():
            j = idx.get(k)
            if j is not None:
                vec[j] = v
        return vec

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, {len(self.values)} nonzero values)"


def _from_blocks(bar: BarComplex, n: int, blocks: Mapping[int, Sequence[int]]) -> Cochain:
    vals = {}
    for t, vec in blocks.items():
        for tp, v in zip(bar.tuples(n, t), vec):
            if v:
                vals[tp] = v
    return Cochain(bar, n, vals)


def bar_differential(f: Cochain) -> Cochain:
    bar, n = f.bar, f.degree
    blocks = {}
    for t in f.support_degrees():
        blocks[t] = bar.matrix(n, t).apply(f.block(t))
    return _from_blocks(bar, n + 1, blocks)


def is_cocycle(f: Cochain) -> bool:
    return not bar_differential(f)


def is_coboundary(f: Cochain) -> Cochain | None:
    """A witness g with dg = f, or None if f is not a coboundary."""
    bar, n = f.bar, f.degree
    if n == 0:
        return Cochain(bar, 0) if not f else None
    blocks = {}
    for t in f.support_degrees():
        m = bar.matrix(n - 1, t)
        x = m.solve(f.block(t))
        if x is None:
            return None
        blocks[t] = x
    return _from_blocks(bar, n - 1, blocks)


def cup(f: Cochain, g: Cochain) -> Cochain:
    """Concatenation product ``(f u g)(x, y) = f(x) g(y)``."""
    if f.bar is not g.bar:
        raise ValueError("cochains live in different complexes")
    p = f.bar.p
    vals = {}
    for k1, v1 in f.values.items():
        for k2, v2 in g.values.items():
            vals[k1 + k2] = v1 * v2 % p
    return Cochain(f.bar, f.degree + g.degree, vals)


def ext_dim_oracle(alg: QuotientAlgebra, n: int, budget_mb: float | None = None) -> int:
    """dim H^n(A, k) from ranks of the bar differentials."""
    bar = bar_complex(alg, budget_mb)
    if n == 0:
        return 1
    total = 0
    for t in bar.degrees(n):
        bar.check_budget(n, t)
        bar.check_budget(n - 1, t)
    for t in bar.degrees(n):
        total += bar.count(n, t) - bar.matrix(n, t).rank() - bar.matrix(n - 1, t).rank()
    return total


# ---------------------------------------------------------------------------
# explicit classes


def eta_cochain(bar: BarComplex, name: str) -> Cochain:
    """Degree-1 cochain dual to a generator (value 1 on that word, 0 on other basis words)."""
    w = bar.alg.gen(name)
    return Cochain(bar, 1, {(bar.widx[w],): 1})


def xi_cochain(which: str, bar: BarComplex) -> Cochain:
    """Degree-2 cochain: coefficient of ``which^p`` in the product of lifts.

    Arguments are lifted along the normal-word basis to the cover algebra
    (B for A, and B # kG for A # kG) and multiplied there.  This equals the
    coboundary of minus the functional "coefficient of which^p in the h-free
    part", taken in the cover, and descends to a cocycle on the quotient.
    """
    alg = bar.alg
    cover = alg.cover
    if cover is None:
        raise ValueError(f"{alg.name} has no cover algebra to evaluate on")
    p = alg.p
    target = (cover.names.index(which),) * p
    move = [cover.names.index(n) for n in alg.names]
    lift_deg = p * cover.degree((target[0],))
    vals = {}
    for t in bar.degrees(2):
        if t != lift_deg:
            continue
        for tp in bar.tuples(2, t):
            r, s = (tuple(move[x] for x in bar.words[i]) for i in tp)
            c = cover.gb.normal_form_word(r + s).get(target, 0)
            if c:
                vals[tp] = c
    return Cochain(bar, 2, vals)


def g_action(f: Cochain, act: GroupAction) -> Cochain:
    """``(g.f)(x_1, ..., x_n) = f(g^{-1} x_1, ..., g^{-1} x_n)``."""
    bar = f.bar
    alg = bar.alg
    # rows[y] = [(x, c)] with c the coefficient of basis word y in g^{-1}(x)
    rows: list[list[tuple[int, int]]] = [[] for _ in bar.words]
    for x, w in enumerate(bar.words):
        for u, c in act.apply_word(alg, w, -1).items():
            if not u:
                raise ValueError("action does not preserve the augmentation ideal")
            rows[bar.widx[u]].append((x, c))
    p = bar.p
    cur = dict(f.values)
    for axis in range(f.degree):
        nxt: dict[Tup, int] = {}
        for k, v in cur.items():
            for x, c in rows[k[axis]]:
                key = k[:axis] + (x,) + k[axis + 1:]
                nxt[key] = (nxt.get(key, 0) + v * c) % p
        cur = nxt
    return Cochain(bar, f.degree, cur)


def restrict(f: Cochain, target: BarComplex) -> Cochain:
    """Pull back a cochain on ``A # kG`` along the inclusion of A."""
    src = f.bar
    move = [src.alg.names.index(n) for n in target.alg.names]
    emb = {}
    for i, w in enumerate(target.words):
        img = tuple(move[x] for x in w)
        if img not in src.widx:
            raise ValueError(f"{target.fmt_tuple((i,))} is not a normal word of {src.alg.name}")
        emb[src.widx[img]] = i
    vals = {}
    for k, v in f.values.items():
        if all(x in emb for x in k):
            vals[tuple(emb[x] for x in k)] = v
    return Cochain(target, f.degree, vals)


def random_cochain(bar: BarComplex, n: int, rng: random.Random, degrees: Iterable[int] | None = None,
                   density: float = 0.5) -> Cochain:
    vals = {}
    for t in (bar.degrees(n) if degrees is None else degrees):
        for tp in bar.tuples(n, t):
            if rng.random() < density:
                vals[tp] = rng.randrange(bar.p)
    return Cochain(bar, n, vals)


# ---------------------------------------------------------------------------
# cohomology bases and coordinates


def cohomology_basis(bar: BarComplex, n: int) -> list[Cochain]:
    """Cocycles whose classes form a basis of H^n, ordered by internal degree."""
    reps = []
    for t in bar.degrees(n):
        reps.extend(_block_basis(bar, n, t))
    return reps


def _coboundary_matrix(bar: BarComplex, n: int, t: int) -> FMatrix:
    if n == 0:
        return FMatrix.zeros(bar.p, bar.count(0, t), 0)
    return bar.matrix(n - 1, t)


def _columns(p: int, length: int, vectors: Sequence[Sequence[int]]) -> FMatrix:
    return FMatrix.from_rows(p, length, [{j: v for j, v in enumerate(vec) if v} for vec in vectors]).T


def _block_basis(bar: BarComplex, n: int, t: int) -> list[Cochain]:
    z = bar.matrix(n, t).kernel_basis()
    if not z:
        return []
    b = _coboundary_matrix(bar, n, t)
    zmat = _columns(bar.p, len(z[0]), z)
    piv, _ = b.hstack(zmat).rref()
    picks = [c - b.ncols for c in piv if c >= b.ncols]
    return [_from_blocks(bar, n, {t: z[k]}) for k in picks]


def class_coordinates(f: Cochain, reps: Sequence[Cochain]) -> list[int]:
    """Coordinates of the class of cocycle ``f`` in the basis given by ``reps``."""
    bar, n = f.bar, f.degree
    coords = [0] * len(reps)
    degs = sorted(set(f.support_degrees()) | {t for r in reps for t in r.support_degrees()})
    for t in degs:
        local = [i for i, r in enumerate(reps) if t in r.support_degrees()]
        b = _coboundary_matrix(bar, n, t)
        cols = [reps[i].block(t) for i in local]
        m = _columns(bar.p, b.nrows, cols).hstack(b) if cols else b
        x = m.solve(f.block(t))
        if x is None:
            raise ValueError("cochain is not in the span of the given classes")
        for pos, i in enumerate(local):
            coords[i] = x[pos]
    return coords


def action_matrix(reps: Sequence[Cochain], act: GroupAction) -> list[list[int]]:
    """Matrix of g on span of the classes; column j holds g.reps[j]."""
    cols = [class_coordinates(g_action(r, act), reps) for r in reps]
    k = len(reps)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def same_class(f: Cochain, g: Cochain) -> bool:
    return is_coboundary(f - g) is not None


def free_basis_hilbert_check(p: int, N: int) -> bool:
    """#{(i, j, l, m): 2(i + j) + l + m = n, l, m in {0, 1}} == n + 1 for all n <= N."""
    return all(free_basis_count(n) == n + 1 for n in range(N + 1))


def free_basis_count(n: int) -> int:
    count = 0
    for l, m in iproduct((0, 1), repeat=2):
        rest = n - l - m
        if rest >= 0 and rest % 2 == 0:
            count += rest // 2 + 1
    return count
