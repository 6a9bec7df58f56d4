"""Anick's free resolution of the trivial module for a presented algebra.

Left-module version: the free modules are ``A (x) kC_n`` and chains grow to
the left, so every n-chain is ``head + v`` for a unique (n-1)-chain ``v``
that is its suffix.  ``d_1`` is multiplication, ``d_2`` sends a tip to its
relation, and higher differentials come from the contracting homotopy that
peels the leading term off a cycle.

Elements of ``A (x) kC_n`` are dicts ``{(normal word, chain index): coeff}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import PresentedAlgebra, QuotientAlgebra, add_into
from .ffmat import FMatrix
from .freealg import GroebnerBasis, Word, format_word

ModElem = dict[tuple[Word, int], int]


@dataclass(frozen=True)
class Chain:
    word: Word
    suffix: int | None  # index of the (n-1)-chain ending this one
    head: Word  # letters prepended in the last extension step


@dataclass
class ChainSet:
    n: int
    chains: list[Chain]
    index: dict[Word, int] = field(default_factory=dict)

    def __post_init__(self):
        self.index = {c.word: i for i, c in enumerate(self.chains)}

    @property
    def words(self) -> list[Word]:
        return [c.word for c in self.chains]

    def __len__(self) -> int:
        return len(self.chains)

    def format(self, names) -> list[str]:
        return [format_word(w, names) for w in self.words]


def _extend(gb: GroebnerBasis, prev: ChainSet) -> ChainSet:
    out: list[Chain] = []
    seen: set[Word] = set()
    tips = gb.tips
    for idx, ch in enumerate(prev.chains):
        t = ch.head
        for tip in tips:
            for j in range(1, min(len(t), len(tip) - 1) + 1):
                if tip[-j:] != t[:j]:
                    continue
                u = tip[:-j]
                ut = u + t
                # the tip must be the only obstruction inside u + t
                other = gb.find_tip(ut, 1)
                if other is not None and other[0] < len(u):
                    continue
                w = u + ch.word
                if w in seen:
                    raise RuntimeError(f"chain {w} produced twice")
                seen.add(w)
                out.append(Chain(w, idx, u))
    out.sort(key=lambda c: gb.order.key(c.word))
    return ChainSet(prev.n + 1, out)


def chain_sets(gb: GroebnerBasis, n: int) -> list[ChainSet]:
    """C_0, ..., C_n."""
    sets = [ChainSet(0, [Chain((), None, ())])]
    if n >= 1:
        gens = [Chain((x,), 0, (x,)) for x in range(len(gb.names))]
        gens.sort(key=lambda c: gb.order.key(c.word))
        sets.append(ChainSet(1, gens))
    while len(sets) <= n:
        sets.append(_extend(gb, sets[-1]))
    return sets


def chains(gb: GroebnerBasis, n: int) -> ChainSet:
    return chain_sets(gb, n)[n]


def chain_degree_profile(cs: ChainSet, grading=None) -> list[int]:
    """Sorted total degrees of the chains (generators in degree 1 by default)."""
    if grading is None:
        return sorted(len(w) for w in cs.words)
    return sorted(sum(grading[x] for x in w) for w in cs.words)


class AnickResolution:
    """Anick resolution of k over ``alg`` through homological degree ``max_degree``."""

    def __init__(self, alg: PresentedAlgebra, max_degree: int):
        if not alg.gb.confirmed:
            raise ValueError("Anick resolution needs a confirmed Groebner basis")
        self.alg = alg
        self.gb = alg.gb
        self.p = alg.p
        self.max_degree = max_degree
        self.chains = chain_sets(self.gb, max_degree)
        self._by_suffix: list[dict[int, list[int]]] = []
        for cs in self.chains:
            m: dict[int, list[int]] = {}
            for i, c in enumerate(cs.chains):
                if c.suffix is not None:
                    m.setdefault(c.suffix, []).append(i)
            self._by_suffix.append(m)
        self.d: list[list[ModElem]] = [[]]
        for n in range(1, max_degree + 1):
            self.d.append([self._differential(n, i) for i in range(len(self.chains[n]))])

    # module arithmetic ----------------------------------------------------

    def _key(self, n: int, term: tuple[Word, int]):
        s, j = term
        return self.gb.order.key(s + self.chains[n].chains[j].word)

    def left_mul(self, s: Word, x: ModElem) -> ModElem:
        out: ModElem = {}
        p = self.p
        for (t, j), c in x.items():
            for u, e in self.gb.normal_form_word(s + t).items():
                k = (u, j)
                v = (out.get(k, 0) + c * e) % p
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def apply_d(self, n: int, x: ModElem) -> ModElem:
        """``d_n`` applied to an element of ``A (x) kC_n``."""
        out: ModElem = {}
        for (s, i), c in x.items():
            add_into(out, self.left_mul(s, self.d[n][i]), self.p, c)
        return out

    def homotopy(self, n: int, x: ModElem) -> ModElem:
        """Contracting homotopy ``A (x) kC_{n-1} -> A (x) kC_n`` on a cycle."""
        x = dict(x)
        res: ModElem = {}
        p = self.p
        chains_n = self.chains[n].chains
        while x:
            lead = max(x, key=lambda t: self._key(n - 1, t))
            s, j = lead
            c = x[lead]
            for i in self._by_suffix[n].get(j, ()):
                u = chains_n[i].head
                if len(u) <= len(s) and s[len(s) - len(u):] == u:
                    break
            else:
                raise RuntimeError(
                    f"leading term {format_word(s, self.alg.names)} (x) "
                    f"{format_word(self.chains[n - 1].chains[j].word, self.alg.names)} "
                    "is not the leading term of a cycle")
            s2 = s[:len(s) - len(u)]
            k = (s2, i)
            res[k] = (res.get(k, 0) + c) % p
            if not res[k]:
                del res[k]
            add_into(x, self.left_mul(s2, self.d[n][i]), p, -c)
            if lead in x:
                raise RuntimeError("homotopy step failed to cancel the leading term")
        return res

    def _differential(self, n: int, i: int) -> ModElem:
        ch = self.chains[n].chains[i]
        if n == 1:
            return {(ch.word, 0): 1}
        top = {(ch.head, ch.suffix): 1}
        lower = self.left_mul(ch.head, self.d[n - 1][ch.suffix])
        return add_into(top, self.homotopy(n - 1, lower), self.p, -1)

    # outputs ----------------------------------------------------------------

    def differential(self, n: int) -> list[ModElem]:
        return self.d[n]

    def format_differential(self, n: int, i: int) -> str:
        names = self.alg.names
        parts = []
        for (s, j), c in sorted(self.d[n][i].items(), key=lambda kv: self._key(n - 1, kv[0]),
                                reverse=True):
            coeff = "" if c == 1 else f"{c}*"
            parts.append(f"{coeff}{format_word(s, names)}(x)[{format_word(self.chains[n - 1].chains[j].word, names)}]")
        return " + ".join(parts) or "0"

    def epsilon_matrix(self, n: int) -> FMatrix:
        """Scalar parts of ``d_n``: rows C_{n-1}, columns C_n."""
        entries = []
        for i, x in enumerate(self.d[n]):
            for (s, j), c in x.items():
                if not s:
                    entries.append((j, i, c))
        return FMatrix.from_entries(self.p, len(self.chains[n - 1]), len(self.chains[n]), entries)

    def d_squared_zero(self, n: int) -> bool:
        if n < 2:
            # d_1 lands in the augmentation ideal
            return all(self.alg.epsilon({s: c for (s, _), c in x.items()}) == 0 for x in self.d[1])
        return all(not self.apply_d(n - 1, x) for x in self.d[n])

    def preserves_degree(self, n: int) -> bool:
        g = self.alg.grading
        if g is None:
            return False
        words = self.chains[n - 1].chains
        for i, x in enumerate(self.d[n]):
            target = self.alg.degree(self.chains[n].chains[i].word)
            for (s, j) in x:
                if self.alg.degree(s) + self.alg.degree(words[j].word) != target:
                    return False
        return True

    def scalar_matrix(self, n: int) -> FMatrix:
        """``d_n`` expanded over the basis of A: rows A (x) kC_{n-1}, columns A (x) kC_n."""
        alg = self.alg
        if not isinstance(alg, QuotientAlgebra):
            raise TypeError("scalar expansion needs a finite-dimensional algebra")
        dim = alg.dim
        entries = []
        for i in range(len(self.chains[n])):
            for si, s in enumerate(alg.basis):
                col = i * dim + si
                for (t, j), c in self.left_mul(s, self.d[n][i]).items():
                    entries.append((j * dim + alg.index[t], col, c))
        return FMatrix.from_entries(self.p, len(self.chains[n - 1]) * dim,
                                    len(self.chains[n]) * dim, entries)

    def homology_dims(self, upto: int) -> list[int]:
        """Homology of the augmented-free complex ``A (x) kC_*`` in degrees 0..upto."""
        alg = self.alg
        ranks = [0] + [self.scalar_matrix(n).rank() for n in range(1, upto + 2)]
        out = []
        for n in range(upto + 1):
            size = len(self.chains[n]) * alg.dim
            out.append(size - ranks[n] - ranks[n + 1])
        return out


@dataclass
class ExtDims:
    dims: list[int]
    minimal: list[bool]
    chain_counts: list[int]
    degree_disjoint: list[bool | None]


def ext_dims(res: AnickResolution, N: int) -> ExtDims:
    """dim Ext^n(k, k) for n <= N from the resolution (needs degree N+1)."""
    if res.max_degree < N + 1:
        raise ValueError(f"resolution built to degree {res.max_degree}, need {N + 1}")
    ranks = [0] + [res.epsilon_matrix(n).rank() for n in range(1, N + 2)]
    dims, minimal, disjoint = [], [], []
    g = res.alg.grading
    for n in range(N + 1):
        size = len(res.chains[n])
        dims.append(size - ranks[n] - ranks[n + 1])
        minimal.append(ranks[n] == 0 and ranks[n + 1] == 0)
        if g is None or n == 0:
            disjoint.append(None if g is None else True)
        else:
            here = set(chain_degree_profile(res.chains[n], g))
            below = set(chain_degree_profile(res.chains[n - 1], g))
            disjoint.append(not (here & below))
    return ExtDims(dims, minimal, [len(c) for c in res.chains[:N + 1]], disjoint)


# closed-form chain lists for A_p, used as an independent oracle
def closed_form_chains(p: int, n: int) -> set[str]:
    """The chain labels b^{kp}a^{...} etc. for A_p, as strings like ``b^3a^4``."""

    def lab(i: int, j: int) -> str:
        return format_word((1,) * i + (0,) * j, ("a", "b"))

    if n == 0:
        return {"1"}
    if n == 1:
        return {"a", "b"}
    out = set()
    if n % 2 == 1:
        m = (n + 1) // 2
        for k in range(m):
            out.add(lab(k * p, (m - 1 - k) * p + 1))
            out.add(lab(k * p + 1, (m - 1 - k) * p))
    else:
        m = n // 2
        out.add(lab(m * p, 0))
        for k in range(m):
            out.add(lab(k * p, (m - k) * p))
            out.add(lab(k * p + 1, (m - 1 - k) * p + 1))
    return out
