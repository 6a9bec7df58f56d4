"""Free associative algebras over F_p: words, admissible orders, two-sided
reduction and overlap completion of noncommutative Groebner bases.

Words are tuples of generator indices; the empty tuple is the unit monomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .ffmat import PrimeField

Word = tuple[int, ...]

CONFIRMED = "confirmed"
DEGREE_CAPPED = "degree-capped"


class MonomialOrder:
    """Weighted-lex order on words.

    Words are compared first by their weight vector (sum of generator weights,
    compared lexicographically), then by length, then letter by letter using
    the generator precedence.  ``kind="deglex"`` is the special case where
    every generator has weight ``(1,)``.

    ``precedence`` lists generator names from highest to lowest.
    """

    def __init__(self, names: Sequence[str], weights: Mapping[str, Sequence[int]] | None = None,
                 precedence: Sequence[str] | None = None, kind: str = "weighted-lex"):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        if kind not in ("weighted-lex", "deglex"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        if kind == "deglex" or weights is None:
            self.weights = tuple((1,) for _ in self.names)
        else:
            ws = [tuple(weights[n]) for n in self.names]
            if len({len(w) for w in ws}) != 1 or any(x < 0 for w in ws for x in w):
                raise ValueError("weights must be non-negative vectors of one common length")
            self.weights = tuple(ws)
        prec = list(precedence) if precedence is not None else list(reversed(self.names))
        if sorted(prec) != sorted(self.names):
            raise ValueError("precedence must list every generator exactly once")
        # rank: larger means higher precedence
        self.rank = tuple(len(prec) - 1 - prec.index(n) for n in self.names)
        self._keys: dict[Word, tuple] = {}

    def weight(self, w: Word) -> tuple[int, ...]:
        dim = len(self.weights[0]) if self.weights else 0
        acc = [0] * dim
        for x in w:
            for i, v in enumerate(self.weights[x]):
                acc[i] += v
        return tuple(acc)

    def key(self, w: Word) -> tuple:
        k = self._keys.get(w)
        if k is None:
            k = (self.weight(w), len(w), tuple(self.rank[x] for x in w))
            self._keys[w] = k
        return k

    def compare(self, u: Word, v: Word) -> int:
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "weights": {n: list(w) for n, w in zip(self.names, self.weights)},
            "precedence": [n for _, n in sorted(zip(self.rank, self.names), reverse=True)],
        }


def compare(order: MonomialOrder, u: Word, v: Word) -> int:
    """-1, 0 or 1 as ``u`` is below, equal to or above ``v``."""
    return order.compare(u, v)


def format_word(w: Word, names: Sequence[str]) -> str:
    """Compact power notation, e.g. ``b^3a^2``; the empty word prints as ``1``."""
    if not w:
        return "1"
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        n = j - i
        out.append(names[w[i]] if n == 1 else f"{names[w[i]]}^{n}")
        i = j
    return "".join(out)


def word_from_powers(names: Sequence[str], *parts: tuple[str, int]) -> Word:
    """``word_from_powers(names, ("b", 3), ("a", 1))`` is the word b^3 a."""
    out: list[int] = []
    for name, k in parts:
        out.extend([names.index(name)] * k)
    return tuple(out)


class FreeElement:
    """Finite F_p-linear combination of words; zero coefficients are never stored."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[Word, int] | None = None):
        self.p = p
        self.terms: dict[Word, int] = {}
        if terms:
            for w, c in terms.items():
                c %= p
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def word(cls, p: int, w: Word, c: int = 1) -> "FreeElement":
        return cls(p, {tuple(w): c})

    @classmethod
    def scalar(cls, p: int, c: int) -> "FreeElement":
        return cls(p, {(): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FreeElement):
            return self.p == other.p and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __add__(self, other: "FreeElement") -> "FreeElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreeElement(self.p, out)

    def __neg__(self) -> "FreeElement":
        return FreeElement(self.p, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def __rmul__(self, c: int) -> "FreeElement":
        return FreeElement(self.p, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out: dict[Word, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                out[w] = out.get(w, 0) + a * b
        return FreeElement(self.p, out)

    def __pow__(self, n: int) -> "FreeElement":
        out = FreeElement.scalar(self.p, 1)
        for _ in range(n):
            out = out * self
        return out

    def leading(self, order: MonomialOrder) -> tuple[Word, int]:
        if not self.terms:
            raise ValueError("zero element has no leading term")
        w = max(self.terms, key=order.key)
        return w, self.terms[w]

    def monic(self, order: MonomialOrder) -> "FreeElement":
        _, c = self.leading(order)
        return pow(c, -1, self.p) * self

    def substitute(self, images: Sequence["FreeElement"]) -> "FreeElement":
        """Image under the algebra map sending generator ``i`` to ``images[i]``."""
        out = FreeElement(self.p)
        for w, c in self.terms.items():
            term = FreeElement.scalar(self.p, c)
            for x in w:
                term = term * images[x]
            out = out + term
        return out

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def format(self, names: Sequence[str], order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        words = sorted(self.terms, key=order.key if order else None, reverse=True)
        parts = []
        for w in words:
            c = self.terms[w]
            mono = "*".join(names[x] for x in w) if w else ""
            mono = _compress_product(mono)
            if not w:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FreeElement(p={self.p}, {self.terms})"


def _compress_product(mono: str) -> str:
    if not mono:
        return mono
    letters = mono.split("*")
    out, i = [], 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        out.append(letters[i] if j - i == 1 else f"{letters[i]}^{j - i}")
        i = j
    return "*".join(out)


class _TipTrie:
    """Prefix trie over the tip set for leftmost-occurrence search."""

    def __init__(self, tips: Iterable[Word]):
        self.root: dict = {}
        for t in tips:
            node = self.root
            for x in t:
                node = node.setdefault(x, {})
            node[None] = t

    def find(self, w: Word, start: int = 0) -> tuple[int, Word] | None:
        for i in range(start, len(w)):
            node = self.root
            j = i
            while j < len(w):
                node = node.get(w[j])
                if node is None:
                    break
                j += 1
                if None in node:
                    return i, node[None]
        return None

    def suffix_tip(self, w: Word) -> bool:
        # does some tip end exactly at the end of w?
        for i in range(len(w) - 1, -1, -1):
            node = self.root
            for x in w[i:]:
                node = node.get(x)
                if node is None:
                    break
            else:
                if None in node:
                    return True
        return False


@dataclass
class GroebnerBasis:
    """A monic, inter-reduced relation set together with its tips."""

    order: MonomialOrder
    p: int
    relations: list[FreeElement]
    status: str = CONFIRMED
    unchecked_overlaps: int = 0
    _nf_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.rules: dict[Word, dict[Word, int]] = {}
        for f in self.relations:
            tip, c = f.leading(self.order)
            if c != 1:
                raise ValueError("relations must be monic")
            self.rules[tip] = {w: (-v) % self.p for w, v in f.terms.items() if w != tip}
        self._trie = _TipTrie(self.rules)

    @property
    def names(self) -> tuple[str, ...]:
        return self.order.names

    @cached_property
    def tips(self) -> list[Word]:
        return sorted(self.rules, key=self.order.key)

    @property
    def confirmed(self) -> bool:
        return self.status == CONFIRMED

    def find_tip(self, w: Word, start: int = 0) -> tuple[int, Word] | None:
        return self._trie.find(w, start)

    def is_normal(self, w: Word) -> bool:
        return self._trie.find(w) is None

    def ends_with_tip(self, w: Word) -> bool:
        return self._trie.suffix_tip(w)

    def normal_form_word(self, w: Word) -> dict[Word, int]:
        """Normal form of a single word as ``{normal word: coefficient}``."""
        cache = self._nf_cache
        hit = cache.get(w)
        if hit is not None:
            return hit
        occ = self._trie.find(w)
        if occ is None:
            res = {w: 1}
        else:
            i, tip = occ
            left, right = w[:i], w[i + len(tip):]
            res = {}
            p = self.p
            for m, c in self.rules[tip].items():
                for u, d in self.normal_form_word(left + m + right).items():
                    v = (res.get(u, 0) + c * d) % p
                    if v:
                        res[u] = v
                    else:
                        res.pop(u, None)
        cache[w] = res
        return res

    def reduce_terms(self, terms: Mapping[Word, int]) -> dict[Word, int]:
        out: dict[Word, int] = {}
        p = self.p
        for w, c in terms.items():
            for u, d in self.normal_form_word(w).items():
                v = (out.get(u, 0) + c * d) % p
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
        return out

    def normal_form(self, f: FreeElement) -> FreeElement:
        return FreeElement(self.p, self.reduce_terms(f.terms))

    def normal_form_with_certificate(self, f: FreeElement):
        """Reduce ``f`` step by step.

        Returns ``(nf, steps)`` where each step is ``(c, left, relation_index,
        right)`` and ``f - nf == sum(c * left * relations[i] * right)``.
        """
        index = {f.leading(self.order)[0]: i for i, f in enumerate(self.relations)}
        cur = dict(f.terms)
        steps = []
        while True:
            target = None
            for w in sorted(cur, key=self.order.key, reverse=True):
                occ = self._trie.find(w)
                if occ is not None:
                    target = (w, occ)
                    break
            if target is None:
                return FreeElement(self.p, cur), steps
            w, (i, tip) = target
            c = cur[w]
            left, right = w[:i], w[i + len(tip):]
            steps.append((c, left, index[tip], right))
            for u, v in self.relations[index[tip]].terms.items():
                word = left + u + right
                x = (cur.get(word, 0) - c * v) % self.p
                if x:
                    cur[word] = x
                else:
                    cur.pop(word, None)

    def overlaps(self) -> list[tuple[Word, int, int, int]]:
        """All proper overlaps ``(word, i, j, k)``: tip_i's last k letters start tip_j."""
        tips = [f.leading(self.order)[0] for f in self.relations]
        out = []
        for i, s in enumerate(tips):
            for j, t in enumerate(tips):
                for k in range(1, min(len(s), len(t))):
                    if s[-k:] == t[:k]:
                        out.append((s + t[k:], i, j, k))
        out.sort(key=lambda o: (len(o[0]), self.order.key(o[0]), o[1], o[2]))
        return out

    def s_element(self, i: int, j: int, k: int) -> FreeElement:
        fi, fj = self.relations[i], self.relations[j]
        ti = fi.leading(self.order)[0]
        tj = fj.leading(self.order)[0]
        u = FreeElement.word(self.p, tj[k:])
        v = FreeElement.word(self.p, ti[:len(ti) - k])
        return fi * u - v * fj

    def is_pbw(self) -> bool:
        """PBW-type check on the quadratic relations.

        For each relation whose tip has length 2, every other monomial of the
        same weight must be the swapped tip, and all remaining monomials must
        have strictly smaller weight vector.
        """
        return all(self.pbw_report().values())

    def pbw_report(self) -> dict[str, bool]:
        out = {}
        for f in self.relations:
            tip, _ = f.leading(self.order)
            if len(tip) != 2:
                continue
            wt = self.order.weight(tip)
            ok = True
            for w in f.terms:
                if w == tip:
                    continue
                if self.order.weight(w) == wt:
                    ok = ok and w == tip[::-1]
                else:
                    ok = ok and self.order.weight(w) < wt
            out[format_word(tip, self.names)] = ok
        return out

    def describe(self) -> dict:
        return {
            "status": self.status,
            "tips": [format_word(t, self.names) for t in self.tips],
            "relations": [f.format(self.names, self.order) for f in self.relations],
        }


def _interreduce(rels: list[FreeElement], order: MonomialOrder, p: int) -> list[FreeElement]:
    rels = [f.monic(order) for f in rels if f]
    while True:
        changed = False
        # drop relations whose tip contains another tip
        rels.sort(key=lambda f: order.key(f.leading(order)[0]))
        kept: list[FreeElement] = []
        for f in rels:
            gb = GroebnerBasis(order, p, kept) if kept else None
            g = gb.normal_form(f) if gb else f
            if g != f:
                changed = True
            if g:
                kept.append(g.monic(order))
        rels = kept
        # tail-reduce each relation against the others
        out = []
        for idx, f in enumerate(rels):
            others = rels[:idx] + rels[idx + 1:]
            tip, _ = f.leading(order)
            if others:
                gb = GroebnerBasis(order, p, others)
                tail = gb.normal_form(FreeElement(p, {w: c for w, c in f.terms.items() if w != tip}))
                g = FreeElement.word(p, tip) + tail
            else:
                g = f
            if g != f:
                changed = True
            out.append(g)
        rels = out
        if not changed:
            return rels


def complete(relations: Sequence[FreeElement], order: MonomialOrder, degree_cap: int | None = None,
             max_rounds: int = 50) -> GroebnerBasis:
    """Overlap completion of a relation set in the free algebra.

    Overlap words longer than ``degree_cap`` are not examined; if any remain
    unexamined, or new elements keep appearing after ``max_rounds`` rounds,
    the result is flagged ``degree-capped`` instead of ``confirmed``.
    """
    if not relations or any(not f for f in relations):
        raise ValueError("relations must be nonzero")
    p = relations[0].p
    PrimeField(p)
    if degree_cap is None:
        degree_cap = 4 * max(f.max_length() for f in relations)
    if degree_cap < max(f.max_length() for f in relations):
        raise ValueError("degree cap below the relation degree")
    rels = _interreduce(list(relations), order, p)
    for _ in range(max_rounds):
        gb = GroebnerBasis(order, p, rels)
        new = []
        skipped = 0
        for w, i, j, k in gb.overlaps():
            if len(w) > degree_cap:
                skipped += 1
                continue
            r = gb.normal_form(gb.s_element(i, j, k))
            if r:
                new.append(r)
                break  # restart with the enlarged basis (keeps the pair order deterministic)
        if not new:
            gb.status = CONFIRMED if skipped == 0 else DEGREE_CAPPED
            gb.unchecked_overlaps = skipped
            return gb
        rels = _interreduce(rels + new, order, p)
    gb = GroebnerBasis(order, p, rels, status=DEGREE_CAPPED)
    return gb


def enumerate_normal_words(gb: GroebnerBasis, up_to_degree: int | None = None,
                           limit: int = 10**6) -> list[Word]:
    """Tip-free words of length at most ``up_to_degree`` (all of them when
    ``None``, which requires a finite normal basis), sorted by the order."""
    ngens = len(gb.names)
    level: list[Word] = [()]
    out: list[Word] = [()]
    n = 0
    while level and (up_to_degree is None or n < up_to_degree):
        nxt = []
        for w in level:
            for x in range(ngens):
                u = w + (x,)
                if not gb.ends_with_tip(u):
                    nxt.append(u)
        out.extend(nxt)
        if len(out) > limit:
            raise ValueError(f"more than {limit} normal words; the quotient looks infinite")
        level = nxt
        n += 1
    return sorted(out, key=gb.order.key)
