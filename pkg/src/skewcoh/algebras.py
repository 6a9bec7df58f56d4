"""Augmented algebras given by presentations, the Nichols-algebra family of
the examples, cyclic group actions and smash products.

Elements of a presented algebra are plain ``{normal word: coefficient}``
dicts; every generator lies in the augmentation ideal, so the augmentation
of an element is its coefficient on the empty word.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ffmat import PrimeField
from .freealg import (
    FreeElement,
    GroebnerBasis,
    MonomialOrder,
    Word,
    complete,
    enumerate_normal_words,
    format_word,
)
from .presentation import Presentation, parse_element

Elem = dict[Word, int]

# Comultiplication of the bosonization, kept as documentation only.
COALGEBRA_NOTE = "Delta(g)=g(x)g, Delta(a)=a(x)1+g(x)a, Delta(b)=b(x)1+g(x)b"


class CompletionError(RuntimeError):
    pass


def add_into(acc: Elem, other: Mapping[Word, int], p: int, c: int = 1) -> Elem:
    for w, v in other.items():
        x = (acc.get(w, 0) + c * v) % p
        if x:
            acc[w] = x
        else:
            acc.pop(w, None)
    return acc


class PresentedAlgebra:
    """An algebra ``k<X>/I`` known through a confirmed Groebner basis.

    May be infinite dimensional; only normal-form arithmetic is offered.
    """

    def __init__(self, presentation: Presentation, gb: GroebnerBasis | None = None,
                 degree_cap: int | None = None, grading: Sequence[int] | None = None):
        self.presentation = presentation
        self.p = presentation.p
        self.field = PrimeField(self.p)
        self.name = presentation.name
        if gb is None:
            gb = complete(presentation.relations, presentation.order, degree_cap)
        if not gb.confirmed:
            raise CompletionError(
                f"completion for {self.name} stopped at the degree cap "
                f"({gb.unchecked_overlaps} overlaps unchecked)")
        self.gb = gb
        if grading is None:
            grading = (1,) * len(self.names)
        self.grading = tuple(grading) if self._homogeneous(grading) else None

    @property
    def names(self) -> tuple[str, ...]:
        return self.presentation.names

    @property
    def order(self) -> MonomialOrder:
        return self.presentation.order

    def _homogeneous(self, grading) -> bool:
        for f in self.gb.relations:
            if len({sum(grading[x] for x in w) for w in f.terms}) > 1:
                return False
        return True

    def degree(self, w: Word) -> int:
        if self.grading is None:
            return 0
        return sum(self.grading[x] for x in w)

    def gen(self, name: str) -> Word:
        return (self.names.index(name),)

    def word(self, text: str) -> Word:
        """Parse a monomial such as ``"b^3a"`` or ``"b*a"`` into a word."""
        f = parse_element(text, self.names, self.p)
        if len(f.terms) != 1:
            raise ValueError(f"{text!r} is not a monomial")
        return next(iter(f.terms))

    def element(self, text: str) -> Elem:
        return self.normal_form(parse_element(text, self.names, self.p))

    def normal_form(self, f: FreeElement | Mapping[Word, int]) -> Elem:
        terms = f.terms if isinstance(f, FreeElement) else f
        return self.gb.reduce_terms(terms)

    def mul_words(self, u: Word, v: Word) -> Elem:
        return self.gb.normal_form_word(u + v)

    def mul(self, x: Mapping[Word, int], y: Mapping[Word, int]) -> Elem:
        out: Elem = {}
        for u, a in x.items():
            for v, b in y.items():
                add_into(out, self.mul_words(u, v), self.p, a * b)
        return out

    def epsilon(self, x: Mapping[Word, int]) -> int:
        return x.get((), 0) % self.p

    def format(self, x: Mapping[Word, int]) -> str:
        return FreeElement(self.p, x).format(self.names, self.order)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} over F_{self.p}>"


class QuotientAlgebra(PresentedAlgebra):
    """Finite-dimensional augmented algebra with the normal-word basis."""

    def __init__(self, presentation: Presentation, gb: GroebnerBasis | None = None,
                 degree_cap: int | None = None, grading: Sequence[int] | None = None,
                 max_dim: int = 10**5, cover: PresentedAlgebra | None = None):
        super().__init__(presentation, gb, degree_cap, grading)
        try:
            self.basis: list[Word] = enumerate_normal_words(self.gb, None, limit=max_dim)
        except ValueError as exc:
            raise ValueError(f"{self.name} is not finite dimensional: {exc}") from None
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.cover = cover
        self._mult: dict[tuple[int, int], dict[int, int]] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def positive_basis(self) -> list[Word]:
        return [w for w in self.basis if w]

    def mult(self, i: int, j: int) -> dict[int, int]:
        """Structure constants of ``basis[i] * basis[j]`` (cached)."""
        key = (i, j)
        hit = self._mult.get(key)
        if hit is None:
            idx = self.index
            hit = {idx[w]: c for w, c in self.mul_words(self.basis[i], self.basis[j]).items()}
            self._mult.setdefault(key, hit)
        return hit

    def is_augmentation_multiplicative(self) -> bool:
        for u in self.basis:
            for v in self.basis:
                eu, ev = int(not u), int(not v)
                if self.epsilon(self.mul_words(u, v)) != eu * ev:
                    return False
        return True

    def associativity_check(self, samples: int = 200, seed: int = 0) -> bool:
        rng = random.Random(seed)
        for _ in range(samples):
            u, v, w = (rng.choice(self.basis) for _ in range(3))
            left = self.mul(self.mul_words(u, v), {w: 1})
            right = self.mul({u: 1}, self.mul_words(v, w))
            if left != right:
                return False
        return True


# ---------------------------------------------------------------------------
# group actions


@dataclass
class GroupAction:
    """Action of a cyclic group of order ``n`` through its generator ``g``.

    ``images`` maps generator names to expressions for ``g(x)``; generators
    not listed are fixed.
    """

    n: int
    images: dict[str, str] = field(default_factory=dict)

    def image_elements(self, alg: PresentedAlgebra) -> list[FreeElement]:
        return [parse_element(self.images.get(x, x), alg.names, alg.p) for x in alg.names]

    def apply(self, alg: PresentedAlgebra, x: Mapping[Word, int], power: int = 1) -> Elem:
        """``g^power`` applied to an algebra element (power may be negative)."""
        power %= self.n
        imgs = self.image_elements(alg)
        cur = dict(x)
        for _ in range(power):
            cur = alg.normal_form(FreeElement(alg.p, cur).substitute(imgs))
        return cur

    def apply_word(self, alg: PresentedAlgebra, w: Word, power: int = 1) -> Elem:
        return self.apply(alg, {w: 1}, power)

    def extended(self, **extra: str) -> "GroupAction":
        return GroupAction(self.n, {**self.images, **extra})


def validate_action(act: GroupAction, alg: PresentedAlgebra) -> dict[str, bool]:
    """Check that ``act`` defines an augmentation-preserving automorphism group."""
    imgs = act.image_elements(alg)
    respects = all(not alg.normal_form(f.substitute(imgs)) for f in alg.gb.relations)
    order_ok = True
    for i in range(len(alg.names)):
        w = (i,)
        if act.apply_word(alg, w, act.n) != {w: 1}:
            order_ok = False
    preserves = all(alg.epsilon(alg.normal_form(f)) == 0 for f in imgs)
    return {"respects_relations": respects, "order_n": order_ok, "preserves_augmentation": preserves}


def is_central(x: Mapping[Word, int] | FreeElement, alg: PresentedAlgebra) -> bool:
    x = alg.normal_form(x)
    for i in range(len(alg.names)):
        g = {(i,): 1}
        if add_into(alg.mul(x, g), alg.mul(g, x), alg.p, -1):
            return False
    return True


# ---------------------------------------------------------------------------
# the example family


def _ab_order(names=("a", "b")) -> MonomialOrder:
    # N^2-degrees deg(a) = (0,1), deg(b) = (1,0), compared lexicographically;
    # equal degrees are separated word-lexicographically with b above a.
    return MonomialOrder(names, {"a": (0, 1), "b": (1, 0)}, precedence=("b", "a"))


def _check_p(p: int) -> int:
    return PrimeField(p).p


def presentation_B(p: int) -> Presentation:
    _check_p(p)
    order = _ab_order()
    rel = parse_element("b*a - a*b - (1/2)*a^2", order.names, p)
    return Presentation("B", p, order, [rel])


def presentation_A(p: int) -> Presentation:
    pres = presentation_B(p)
    names = pres.names
    rels = pres.relations + [parse_element(f"a^{p}", names, p), parse_element(f"b^{p}", names, p)]
    return Presentation("A", p, pres.order, rels, notes={"coalgebra": COALGEBRA_NOTE})


def presentation_S(p: int) -> Presentation:
    """Associated graded algebra of A for the augmentation filtration."""
    _check_p(p)
    order = _ab_order()
    rels = [parse_element(s, order.names, p) for s in ("b*a - a*b", f"a^{p}", f"b^{p}")]
    return Presentation("S", p, order, rels)


def build_B(p: int) -> PresentedAlgebra:
    return PresentedAlgebra(presentation_B(p))


def build_A(p: int) -> QuotientAlgebra:
    return QuotientAlgebra(presentation_A(p), cover=build_B(p))


def build_S(p: int) -> QuotientAlgebra:
    return QuotientAlgebra(presentation_S(p))


def unipotent_action(p: int) -> GroupAction:
    """g(a) = a, g(b) = b - a, generating a cyclic group of order p."""
    return GroupAction(p, {"a": "a", "b": "b - a"})


def trivial_action(n: int) -> GroupAction:
    return GroupAction(n, {})


def smash_presentation(pres: Presentation, act: GroupAction, hname: str = "h") -> Presentation:
    """Presentation of ``A # kG`` on the generators of A plus ``h = g - 1``.

    Uses ``h^n = 0`` (valid when n equals the characteristic) and
    ``h x = (g(x) - x) + g(x) h`` for each generator x.
    """
    p = pres.p
    if act.n != p:
        raise ValueError("only cyclic groups of order equal to the characteristic are supported")
    names = pres.names + (hname,)
    order = MonomialOrder(names, precedence=(hname,) + tuple(pres.order.describe()["precedence"]),
                          kind="deglex")
    rels = [FreeElement(p, f.terms) for f in pres.relations]
    h = FreeElement.word(p, (len(names) - 1,))
    rels.append(h ** p)
    for x in pres.names:
        gx = parse_element(act.images.get(x, x), names, p)
        xe = parse_element(x, names, p)
        rels.append(h * xe - gx * h - (gx - xe))
    notes = {"group": f"cyclic of order {act.n}, {hname} = g - 1"}
    return Presentation(pres.name + "#kG", p, order, rels, notes=notes)


def build_smash(alg: QuotientAlgebra, act: GroupAction, hname: str = "h") -> QuotientAlgebra:
    report = validate_action(act, alg)
    if not all(report.values()):
        raise ValueError(f"action does not validate: {report}")
    pres = smash_presentation(alg.presentation, act, hname)
    grading = None if alg.grading is None else alg.grading + (0,)
    cover = None
    if alg.cover is not None:
        cover = PresentedAlgebra(smash_presentation(alg.cover.presentation, act, hname),
                                 grading=grading)
    try:
        out = QuotientAlgebra(pres, grading=grading, cover=cover)
    except CompletionError as exc:
        raise CompletionError(f"smash product presentation: {exc}") from None
    out.group_action = act
    out.base = alg
    return out


def build_smash_p(p: int) -> QuotientAlgebra:
    return build_smash(build_A(p), unipotent_action(p))


def inner_action(smash: QuotientAlgebra, hname: str = "h") -> GroupAction:
    """Conjugation by g on ``A # kG``: the action on A, fixing h."""
    return smash.group_action.extended(**{hname: hname})


def embedding_check(alg: QuotientAlgebra, smash: QuotientAlgebra) -> bool:
    """The words of A are normal in A # kG and multiply there exactly as in A."""
    remap = [smash.names.index(n) for n in alg.names]

    def move(w):
        return tuple(remap[x] for x in w)

    for u in alg.basis:
        if move(u) not in smash.index:
            return False
    for u in alg.basis:
        for v in alg.basis:
            lhs = {move(w): c for w, c in alg.mul_words(u, v).items()}
            if lhs != smash.mul_words(move(u), move(v)):
                return False
    return True


def named_algebra(name: str, p: int):
    """Builders exposed to the command line: ``A``, ``B``, ``S`` and ``smash``."""
    builders = {"A": build_A, "B": build_B, "S": build_S, "smash": build_smash_p}
    if name not in builders:
        raise KeyError(f"unknown algebra {name!r}; choose from {sorted(builders)}")
    return builders[name](p)


def describe_word(alg: PresentedAlgebra, w: Word) -> str:
    return format_word(w, alg.names)
