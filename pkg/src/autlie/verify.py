"""Cross-check suites: every closed formula against an independent route.

Each check is a named identity; the report lists them in a fixed order so
that repeated runs serialize identically.
"""

from dataclasses import dataclass

from . import homotopylie as hl
from .autranks import aut_rank_closed, aut_rank_homology, verify_surjectivity_d0
from .errors import AutlieError
from .freelie import Caps, GeneratorSpec, left_normed_rank, same_span, witt_dim
from .homotopylie import (
    ManifoldModel,
    center_dims,
    epsilon_from_pbw,
    quotient_dims,
    random_unimodular,
    relation_element,
)
from .koszul import cohomology_algebra, froberg_check, quadratic_dual_lie
from .mtheta import GeneratorSpecMT, loopspace_generator_degrees, omega_mt_betti
from .stability import (
    block_quotient_pi_rank,
    charney_connectivity,
    diff_pi_rank,
    stable_range_max_k,
)


@dataclass(frozen=True)
class Level:
    nmax: int
    rmax: int
    # largest n^r handed to the brute-force tensor-algebra routes
    word_budget: int
    seeds: int


LEVELS = {
    "quick": Level(nmax=3, rmax=4, word_budget=81, seeds=1),
    "full": Level(nmax=6, rmax=8, word_budget=4096, seeds=3),
}

FAULTS = (None, "sign")


def sample_model(n, d):
    """A valid intersection form of rank n for the parity of d, or None."""
    if n % 2 == 0:
        return ManifoldModel.hyperbolic(n // 2, d)
    if d % 2 == 0:
        return ManifoldModel(d, [[int(i == j) for j in range(n)] for i in range(n)])
    # odd rank antisymmetric forms are singular
    return None


def _unsigned_epsilon(n, parity, r):
    # the closed formula with the graded sign dropped; used to test that
    # the harness notices a sign bug
    v = hl._epsilon_sum(n, parity, r, lambda *_: 1)
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral value {v}")
    return int(v)


def run(level="quick", fault=None, seed=0, caps=None):
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}")
    if fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    lv = LEVELS[level]
    caps = caps or Caps()
    closed = _unsigned_epsilon if fault == "sign" else hl.epsilon_closed
    checks = []

    def check(name, fn):
        try:
            ok, detail = fn()
        except (AutlieError, ArithmeticError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        checks.append({"name": name, "passed": bool(ok), "detail": detail})

    def fits(n, r):
        return n ** r <= lv.word_budget

    for d in (3, 4):
        for n in range(1, lv.nmax + 1):
            spec = GeneratorSpec.for_manifold(n, d)
            rs = [r for r in range(1, lv.rmax + 1) if fits(n, r)]

            def witt_vs_rank(spec=spec, rs=rs):
                a = [witt_dim(spec, r) for r in rs]
                b = [left_normed_rank(spec, r, caps) for r in rs]
                return a == b, {"witt": a, "oracle": b}
            check(f"witt_vs_left_normed_rank[n={n},d={d}]", witt_vs_rank)

    for parity in (1, 0):
        for n in range(2, lv.nmax + 1):
            def closed_vs_pbw(n=n, parity=parity):
                a = [closed(n, parity, r) for r in range(1, lv.rmax + 1)]
                pbw = epsilon_from_pbw(n, parity, lv.rmax)
                b = [pbw[r] for r in range(1, lv.rmax + 1)]
                return a == b, {"closed": a, "pbw": b}
            check(f"epsilon_closed_vs_pbw[n={n},parity={parity}]", closed_vs_pbw)

    for n in range(2, lv.nmax + 1):
        check(f"froberg[n={n}]", lambda n=n: (
            froberg_check(cohomology_algebra(sample_model(n, 4)), n, 12), None))

    for d in (3, 4):
        for n in range(2, lv.nmax + 1):
            m = sample_model(n, d)
            if m is None:
                continue
            rs = [r for r in range(1, lv.rmax + 1) if fits(n, r)]

            def closed_vs_quotient(m=m, rs=rs):
                a = [closed(m.n, m.parity, r) for r in rs]
                dims = quotient_dims(m, max(rs), caps)
                b = [dims[r] for r in rs]
                return a == b, {"closed": a, "quotient": b}
            check(f"epsilon_closed_vs_quotient[n={n},d={d}]", closed_vs_quotient)

            def koszul_dual(m=m):
                _, rels = quadratic_dual_lie(cohomology_algebra(m))
                return same_span(rels, [relation_element(m)]), None
            check(f"koszul_dual_relation[n={n},d={d}]", koszul_dual)

            rc = [r for r in range(1, lv.rmax) if fits(n, r + 1)]

            def center(m=m, rc=rc):
                z = center_dims(m, max(rc), caps) if rc else {}
                if m.n >= 3:
                    return all(v == 0 for v in z.values()), z
                want = {1: 2} if m.parity else {1: 0, 2: 2}
                return all(z.get(k) == v for k, v in want.items()), z
            check(f"center[n={n},d={d}]", center)

            if n < 3:
                continue
            ra = [r for r in (1, 2, 3) if fits(n, r + 2)]
            for variant in ("closed", "based", "rel_boundary"):
                def aut(m=m, ra=ra, variant=variant):
                    a = [aut_rank_homology(m, r, variant, caps) for r in ra]
                    if variant == "rel_boundary":
                        b = [aut_rank_closed(m.n, m.d, r, variant) for r in ra]
                    else:
                        b = [m.n * closed(m.n, m.parity, r + 1) - closed(m.n, m.parity, r + 2)
                             - (closed(m.n, m.parity, r) if variant == "closed" else 0)
                             for r in ra]
                    return a == b, {"homology": a, "closed": b}
                check(f"aut_rank_{variant}[n={n},d={d}]", aut)
            check(f"d0_surjective[n={n},d={d}]", lambda m=m, ra=ra: (
                all(verify_surjectivity_d0(m, r, caps) for r in ra), None))

            for s in range(lv.seeds):
                def base_change(m=m, rs=rs, s=s):
                    m2 = m.base_change(random_unimodular(m.n, seed * 1000 + s))
                    a = quotient_dims(m, max(rs), caps)
                    b = quotient_dims(m2, max(rs), caps)
                    return a == b, {"q": [list(r) for r in m2.q]}
                check(f"basis_independence[n={n},d={d},seed={seed * 1000 + s}]", base_change)

    def mt():
        d1 = loopspace_generator_degrees(GeneratorSpecMT(1, 12))
        d3 = loopspace_generator_degrees(GeneratorSpecMT(3, 12))
        want3 = {}
        for i in range(5):
            for j in range(4):
                for k in range(3):
                    deg = 4 * i + 6 * j + 8 * k
                    if 6 < deg <= 18:
                        want3[deg - 6] = want3.get(deg - 6, 0) + 1
        betti = omega_mt_betti(GeneratorSpecMT(1, 6)).integers()
        ok = (dict(d1) == {k: 1 for k in range(2, 13, 2)} and dict(d3) == want3
              and betti == [1, 0, 1, 0, 2, 0, 3])
        return ok, {"d1": sorted(d1.items()), "d3": sorted(d3.items())}
    check("mt_generator_degrees", mt)

    def ranges():
        ok = (stable_range_max_k(5, 10) == 2 and stable_range_max_k(5, 5) == -1
              and charney_connectivity(10, 2) == 2
              and all((block_quotient_pi_rank(d, 3, k) != 0) == ((k + d) % 4 == 0)
                      for d in range(3, 10) for k in range(1, 20))
              and diff_pi_rank(9, 2, 3) == 4 and diff_pi_rank(4, 1, 3) == "outside-range")
        return ok, None
    check("range_arithmetic", ranges)

    failures = [c["name"] for c in checks if not c["passed"]]
    return {
        "level": level,
        "fault": fault,
        "seed": seed,
        "passed": not failures,
        "first_failure": failures[0] if failures else None,
        "checks": checks,
    }
