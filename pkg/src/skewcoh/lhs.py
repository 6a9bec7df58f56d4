"""Cohomology of Z/p with coefficients in a kG-module, and the E_2 page
``E_2^{s,q} = H^s(G, H^q(A, k))`` for the cyclic actions in this package.

Group cohomology uses the 2-periodic resolution of k over kG whose maps are
alternately ``g - 1`` and the norm ``N = 1 + g + ... + g^{p-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebras import build_A, build_smash_p, unipotent_action
from .barcoh import action_matrix, bar_complex, cohomology_basis, ext_dim_oracle
from .ffmat import FMatrix, PrimeField


@dataclass
class GModule:
    """A module over k[Z/n] given by the matrix of the generator."""

    p: int
    matrix: list[list[int]]
    order: int | None = None

    def __post_init__(self):
        PrimeField(self.p)
        self.matrix = [[v % self.p for v in row] for row in self.matrix]
        if any(len(row) != self.dim for row in self.matrix):
            raise ValueError("action matrix must be square")
        if self.order is None:
            self.order = self.p
        if self._power(self.order) != _identity(self.dim):
            raise ValueError(f"action matrix does not have order dividing {self.order}")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def _mat(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.dim, self.dim)

    def _power(self, k: int) -> list[list[int]]:
        out = np.eye(self.dim, dtype=np.int64)
        m = self._mat()
        for _ in range(k):
            out = out @ m % self.p
        return out.tolist()

    def g_minus_one(self) -> FMatrix:
        return FMatrix.from_dense(self.p, (self._mat() - np.eye(self.dim, dtype=np.int64)) % self.p)

    def norm(self) -> FMatrix:
        m = self._mat()
        acc = np.zeros((self.dim, self.dim), dtype=np.int64)
        cur = np.eye(self.dim, dtype=np.int64)
        for _ in range(self.order):
            acc = (acc + cur) % self.p
            cur = cur @ m % self.p
        return FMatrix.from_dense(self.p, acc)

    @classmethod
    def trivial(cls, p: int, dim: int = 1) -> "GModule":
        return cls(p, _identity(dim))

    @classmethod
    def regular(cls, p: int) -> "GModule":
        """kG itself, g acting by the cyclic shift."""
        return cls(p, [[1 if i == (j + 1) % p else 0 for j in range(p)] for i in range(p)])


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def cyclic_cohomology(M: GModule, n: int) -> int:
    """dim H^n(Z/p, M)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if M.dim == 0:
        return 0
    t = M.g_minus_one()
    if n == 0:
        return t.nullity()
    nm = M.norm()
    if n % 2 == 1:
        return nm.nullity() - t.rank()
    return t.nullity() - nm.rank()


def g_module_of_cohomology(alg, q: int, act=None, budget_mb: float | None = None) -> GModule:
    """The action of g on H^q(alg, k) in a basis of cocycle classes.

    Without ``act`` the action ``g(a) = a, g(b) = b - a`` is used.  Raises
    BudgetExceeded when the bar blocks are too large.
    """
    if act is None:
        act = unipotent_action(alg.p)
    bar = bar_complex(alg, budget_mb)
    for t in bar.degrees(q):
        bar.check_budget(q, t)
        if q:
            bar.check_budget(q - 1, t)
    if q == 0:
        return GModule(alg.p, [[1]], act.n)
    reps = cohomology_basis(bar, q)
    return GModule(alg.p, action_matrix(reps, act), act.n)


@dataclass
class E2Page:
    p: int
    S: int
    Q: int
    grid: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, sq: tuple[int, int]) -> int:
        return self.grid[sq]

    def total(self, n: int) -> int:
        return sum(v for (s, q), v in self.grid.items() if s + q == n)

    def rows(self) -> list[list[int]]:
        """Rows indexed by q, columns by s."""
        return [[self.grid[(s, q)] for s in range(self.S + 1)] for q in range(self.Q + 1)]

    def format(self) -> str:
        lines = ["q\\s " + " ".join(f"{s:>3}" for s in range(self.S + 1))]
        for q, row in enumerate(self.rows()):
            lines.append(f"{q:>3} " + " ".join(f"{v:>3}" for v in row))
        return "\n".join(lines)


def e2_page(p: int, S: int, Q: int, budget_mb: float | None = None) -> E2Page:
    alg = build_A(p)
    page = E2Page(p, S, Q)
    for q in range(Q + 1):
        M = g_module_of_cohomology(alg, q, budget_mb=budget_mb)
        for s in range(S + 1):
            page.grid[(s, q)] = cyclic_cohomology(M, s)
    return page


@dataclass
class ConvergenceReport:
    p: int
    n: int
    smash_dim: int
    e2_total: int
    terms: dict[tuple[int, int], int]

    @property
    def ok(self) -> bool:
        return self.smash_dim <= self.e2_total

    @property
    def equality(self) -> bool:
        return self.smash_dim == self.e2_total


class ConvergenceError(AssertionError):
    pass


def convergence_check(p: int, n: int, budget_mb: float | None = None) -> ConvergenceReport:
    """Compare dim H^n(A # kG, k) with the E_2 total in degree n.

    E_infinity is a subquotient of E_2, so the left side can never exceed
    the right; a violation raises ConvergenceError.
    """
    smash = build_smash_p(p)
    left = ext_dim_oracle(smash, n, budget_mb)
    page = e2_page(p, n, n, budget_mb)
    terms = {(s, n - s): page[(s, n - s)] for s in range(n + 1)}
    rep = ConvergenceReport(p, n, left, sum(terms.values()), terms)
    if not rep.ok:
        raise ConvergenceError(
            f"dim H^{n}(A#kG) = {left} exceeds the E_2 total {rep.e2_total} at p = {p}")
    return rep
