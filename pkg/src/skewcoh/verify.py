"""Verification suites behind ``skewcoh verify``.

Each suite returns a list of Check records.  A check carries the value it
expects, the value it computed and one provenance tag:

* PAPER   - value stated for these algebras in the literature
* TRIVIAL - follows immediately from definitions
* DERIVED - obtained here from an independent computation
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import __version__
from .algebras import (
    build_A, build_B, build_S, build_smash_p, embedding_check, inner_action, is_central,
    unipotent_action, presentation_A, presentation_B, validate_action,
)
from .anick import AnickResolution, chain_degree_profile, closed_form_chains, ext_dims
from .barcoh import (
    BudgetExceeded, DEFAULT_BUDGET_MB, action_matrix, bar_complex, bar_differential,
    class_coordinates, cohomology_basis, cup, eta_cochain, ext_dim_oracle, free_basis_count,
    g_action, is_coboundary, is_cocycle, random_cochain, restrict, xi_cochain,
)
from .ffmat import FMatrix, get_backend
from .freealg import complete, format_word
from .lhs import GModule, convergence_check, cyclic_cohomology, e2_page

PROVENANCE = ("PAPER", "TRIVIAL", "DERIVED")
SUITES = ("groebner", "anick", "bar", "classes", "action", "lhs")


@dataclass
class Check:
    suite: str
    name: str
    provenance: str
    expected: Any
    computed: Any = None
    status: str = "pass"
    detail: str = ""

    def __post_init__(self):
        if self.provenance not in PROVENANCE:
            raise ValueError(f"bad provenance tag {self.provenance!r}")


@dataclass
class Settings:
    p: int = 3
    max_degree: int = 8
    budget_mb: float = DEFAULT_BUDGET_MB
    seed: int = 20240611
    samples: int = 20


class _Suite:
    """Collects checks; budget refusals turn a check into ``skipped``."""

    def __init__(self, name: str):
        self.name = name
        self.checks: list[Check] = []

    def add(self, name: str, provenance: str, expected, fn: Callable[[], Any],
            accept: Callable[[Any], bool] | None = None) -> Any:
        chk = Check(self.name, name, provenance, expected)
        try:
            got = fn()
        except BudgetExceeded as exc:
            chk.status, chk.detail = "skipped", str(exc)
            self.checks.append(chk)
            return None
        chk.computed = got
        ok = accept(got) if accept else got == expected
        chk.status = "pass" if ok else "fail"
        self.checks.append(chk)
        return got


def _labels(words, names) -> list[str]:
    return sorted(format_word(w, names) for w in words)


def expected_profile(p: int, n: int) -> list[int]:
    """Chain degrees for A_p: (m-1)p+1 in odd degree 2m-1, mp and (m-1)p+2 in degree 2m."""
    if n == 0:
        return [0]
    if n % 2:
        m = (n + 1) // 2
        return [(m - 1) * p + 1] * (n + 1)
    m = n // 2
    return sorted([m * p] * (m + 1) + [(m - 1) * p + 2] * m)


# ---------------------------------------------------------------------------


def suite_groebner(st: Settings) -> list[Check]:
    p = st.p
    s = _Suite("groebner")
    pb = presentation_B(p)
    gb_b = complete(pb.relations, pb.order)
    s.add("B: completion confirms a one-element basis with tip ba", "PAPER",
          {"status": "confirmed", "tips": ["ba"]},
          lambda: {"status": gb_b.status, "tips": _labels(gb_b.tips, gb_b.names)})
    s.add("B: the tip ba has no self-overlap", "TRIVIAL", 0, lambda: len(gb_b.overlaps()))
    pa = presentation_A(p)
    gb_a = complete(pa.relations, pa.order)
    s.add("A_p: completion confirms tips {ba, a^p, b^p}", "PAPER",
          {"status": "confirmed", "tips": sorted(["ba", f"a^{p}", f"b^{p}"])},
          lambda: {"status": gb_a.status, "tips": _labels(gb_a.tips, gb_a.names)})
    s.add("PBW: deg(a^2) < deg(ab)", "PAPER", True,
          lambda: pb.order.weight((0, 0)) < pb.order.weight((0, 1)) and gb_b.is_pbw())
    s.add("A_p: dimension p^2", "TRIVIAL", p * p, lambda: build_A(p).dim)
    B = build_B(p)
    s.add("B: a^p is central", "PAPER", True, lambda: is_central(B.element(f"a^{p}"), B))
    s.add("B: b^p is central", "PAPER", True, lambda: is_central(B.element(f"b^{p}"), B))
    s.add("B: b is not central", "TRIVIAL", False, lambda: is_central(B.element("b"), B))
    return s.checks


def suite_anick(st: Settings) -> list[Check]:
    p, N = st.p, st.max_degree
    s = _Suite("anick")
    A = build_A(p)
    res = AnickResolution(A, N + 1)
    for n in range(N + 1):
        s.add(f"C_{n}: chains equal the closed-form list", "PAPER", sorted(closed_form_chains(p, n)),
              lambda n=n: sorted(res.chains[n].format(A.names)))
    s.add("|C_n| = n + 1", "PAPER", [n + 1 for n in range(N + 1)],
          lambda: [len(res.chains[n]) for n in range(N + 1)])
    s.add("chain degree profiles", "PAPER", [expected_profile(p, n) for n in range(N + 1)],
          lambda: [chain_degree_profile(res.chains[n]) for n in range(N + 1)])
    ed = ext_dims(res, N)
    s.add("resolution is minimal", "PAPER", [True] * (N + 1), lambda: ed.minimal)
    s.add("dim H^n(A_p, k)", "PAPER", [n + 1 for n in range(N + 1)], lambda: ed.dims)
    s.add("d o d = 0", "TRIVIAL", True,
          lambda: all(res.d_squared_zero(n) for n in range(1, N + 2)))
    S = build_S(p)
    res_s = AnickResolution(S, N + 1)
    s.add("dim H^n(gr A_p, k) equals dim H^n(A_p, k)", "PAPER", ed.dims,
          lambda: ext_dims(res_s, N).dims)
    return s.checks


def suite_bar(st: Settings) -> list[Check]:
    p = st.p
    s = _Suite("bar")
    A = build_A(p)
    bar = bar_complex(A, st.budget_mb)
    for n in range(4):
        s.add(f"bar oracle: dim H^{n}(A_p, k)", "DERIVED", n + 1,
              lambda n=n: ext_dim_oracle(A, n, st.budget_mb))
    rng = random.Random(st.seed)

    def dd(n):
        for _ in range(st.samples):
            f = random_cochain(bar, n, rng, density=0.3)
            if bar_differential(bar_differential(f)):
                return False
        return True

    for n in (0, 1, 2):
        s.add(f"d o d = 0 on random {n}-cochains", "TRIVIAL", True, lambda n=n: dd(n))
    return s.checks


def suite_classes(st: Settings) -> list[Check]:
    p = st.p
    s = _Suite("classes")
    A = build_A(p)
    bar = bar_complex(A, st.budget_mb)
    act = unipotent_action(p)
    xa, xb = xi_cochain("a", bar), xi_cochain("b", bar)
    ea, eb = eta_cochain(bar, "a"), eta_cochain(bar, "b")
    for nm, x in (("xi_a", xa), ("xi_b", xb)):
        s.add(f"{nm} is a cocycle", "PAPER", True, lambda x=x: is_cocycle(x))
        s.add(f"{nm} is not a coboundary", "PAPER", True, lambda x=x: is_coboundary(x) is None)
        s.add(f"g.{nm} - {nm} is a coboundary", "PAPER", True,
              lambda x=x: is_coboundary(g_action(x, act) - x) is not None)
    def independent():
        reps = cohomology_basis(bar, 2)
        coords = [class_coordinates(x, reps) for x in (xa, xb)]
        return FMatrix.from_dense(p, coords).rank()

    s.add("xi_a, xi_b are independent in H^2", "DERIVED", 2, independent)
    s.add("g.xi_b equals xi_b as a cochain", "DERIVED", True, lambda: g_action(xb, act) == xb)
    s.add("xi_a u xi_b - xi_b u xi_a is a coboundary", "PAPER", True,
          lambda: is_coboundary(cup(xa, xb) - cup(xb, xa)) is not None)
    half = pow(2, -1, p)
    rels = {
        "eta_a^2 - (1/2) eta_a eta_b": cup(ea, ea) - half * cup(ea, eb),
        "eta_b^2": cup(eb, eb),
        "eta_b eta_a + eta_a eta_b": cup(eb, ea) + cup(ea, eb),
    }
    for nm, f in rels.items():
        s.add(f"{nm} is a coboundary", "PAPER", True, lambda f=f: is_coboundary(f) is not None)
    s.add("free-basis Hilbert identity for n <= 50", "PAPER", [n + 1 for n in range(51)],
          lambda: [free_basis_count(n) for n in range(51)])
    return s.checks


def suite_action(st: Settings) -> list[Check]:
    p = st.p
    s = _Suite("action")
    A = build_A(p)
    bar = bar_complex(A, st.budget_mb)
    act = unipotent_action(p)
    ea, eb = eta_cochain(bar, "a"), eta_cochain(bar, "b")
    s.add("g on H^1(A_p, k) in basis (eta_a, eta_b)", "PAPER", [[1, 0], [1, 1]],
          lambda: action_matrix([ea, eb], act))
    eab = cup(ea, eb)
    s.add("g fixes the class of eta_a eta_b", "PAPER", True,
          lambda: is_coboundary(g_action(eab, act) - eab) is not None)
    s.add("action validates", "TRIVIAL",
          {"order_n": True, "preserves_augmentation": True, "respects_relations": True},
          lambda: dict(sorted(validate_action(act, A).items())))
    sm = build_smash_p(p)
    sbar = bar_complex(sm, st.budget_mb)
    s.add("dim A # kG = p^3", "TRIVIAL", p ** 3, lambda: sm.dim)
    s.add("A embeds in A # kG multiplicatively", "TRIVIAL", True, lambda: embedding_check(A, sm))
    s.add("A # kG is associative (sampled)", "TRIVIAL", True,
          lambda: sm.associativity_check(samples=100, seed=st.seed))
    s.add("bar oracle: dim H^1(A # kG, k)", "DERIVED", 2, lambda: ext_dim_oracle(sm, 1, st.budget_mb))
    s.add("xi_a on A # kG restricts to xi_a on A", "DERIVED", True,
          lambda: restrict(xi_cochain("a", sbar), bar) == xi_cochain("a", bar))
    return s.checks


def suite_lhs(st: Settings) -> list[Check]:
    p = st.p
    s = _Suite("lhs")
    s.add("H^n(Z/p, k) = 1 for n <= 5", "TRIVIAL", [1] * 6,
          lambda: [cyclic_cohomology(GModule.trivial(p), n) for n in range(6)])
    s.add("H^n(Z/p, kG) for n <= 5", "TRIVIAL", [1, 0, 0, 0, 0, 0],
          lambda: [cyclic_cohomology(GModule.regular(p), n) for n in range(6)])
    s.add("H^0(Z/p, H^1(A_p, k))", "DERIVED", 1,
          lambda: cyclic_cohomology(GModule(p, [[1, 0], [1, 1]]), 0))
    s.add("E_2 rows q <= 2, columns s <= 3", "DERIVED", None,
                 lambda: e2_page(p, 3, 2, st.budget_mb).rows(),
                 accept=lambda rows: rows[0] == [1, 1, 1, 1])
    for n in range(3):
        def conv(n=n):
            r = convergence_check(p, n, st.budget_mb)
            return {"smash": r.smash_dim, "e2_total": r.e2_total}
        s.add(f"dim H^{n}(A # kG) <= E_2 total", "DERIVED", None, conv,
              accept=lambda r, n=n: r["smash"] <= r["e2_total"] and
              (n != 1 or r["smash"] == r["e2_total"] == 2))
    sm = build_smash_p(p)
    sbar = bar_complex(sm, st.budget_mb)
    inner = inner_action(sm)

    def trivial_on(n):
        reps = cohomology_basis(sbar, n)
        k = len(reps)
        return action_matrix(reps, inner) == [[int(i == j) for j in range(k)] for i in range(k)]

    for n in (1, 2):
        s.add(f"G acts trivially on H^{n}(A # kG, k)", "TRIVIAL", True, lambda n=n: trivial_on(n))
    rng = random.Random(st.seed)

    def periodic():
        for _ in range(st.samples):
            M = _random_module(p, rng)
            for n in range(1, 5):
                if cyclic_cohomology(M, n) != cyclic_cohomology(M, n + 2):
                    return False
        return True

    s.add("H^n(Z/p, M) = H^{n+2}(Z/p, M) for random M", "TRIVIAL", True, periodic)
    return s.checks


def _random_module(p: int, rng: random.Random) -> GModule:
    """Direct sum of Jordan blocks of size <= p (unipotent, so g^p = 1)."""
    mat: list[list[int]] = []
    sizes = [rng.randint(1, p) for _ in range(rng.randint(1, 3))]
    dim = sum(sizes)
    off = 0
    for sz in sizes:
        for i in range(sz):
            row = [0] * dim
            row[off + i] = 1
            if i:
                row[off + i - 1] = 1
            mat.append(row)
        off += sz
    return GModule(p, mat)


SUITE_FUNCS = {
    "groebner": suite_groebner,
    "anick": suite_anick,
    "bar": suite_bar,
    "classes": suite_classes,
    "action": suite_action,
    "lhs": suite_lhs,
}


def run_suite(name: str, st: Settings) -> list[Check]:
    return SUITE_FUNCS[name](st)


@dataclass
class VerificationReport:
    metadata: dict
    sections: dict[str, list[Check]] = field(default_factory=dict)

    @property
    def checks(self) -> list[Check]:
        return [c for cs in self.sections.values() for c in cs]

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def ok(self, strict: bool = False) -> bool:
        n = self.counts()
        return n["fail"] == 0 and (not strict or n["skipped"] == 0)

    def to_dict(self) -> dict:
        return {
            "metadata": self.metadata,
            "summary": self.counts(),
            "sections": [
                {"suite": name, "checks": [
                    {k: v for k, v in asdict(c).items() if k != "suite"} for c in cs]}
                for name, cs in self.sections.items()
            ],
        }


def build_report(suites, st: Settings, jobs: int = 1) -> VerificationReport:
    import numpy

    meta = {
        "p": st.p,
        "suites": list(suites),
        "max_degree": st.max_degree,
        "budget_mb": st.budget_mb,
        "seeds": {"random": st.seed, "samples": st.samples},
        "versions": {"skewcoh": __version__, "numpy": numpy.__version__},
        "backend": get_backend(),
    }
    rep = VerificationReport(meta)
    if jobs > 1 and len(suites) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_suite, suites, [st] * len(suites)))
    else:
        results = [run_suite(name, st) for name in suites]
    for name, checks in zip(suites, results):
        rep.sections[name] = checks
    return rep
