"""Seeded property suites.  Every trial is a pure function of (suite, seed, index, dim, bound)."""

from __future__ import annotations

import random
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .basis_decomp import decompose, equivalent, reassemble
from .documents import emit_polytope
from .exact_geometry import Polytope, extreme_points
from .group import (
    FormalSum,
    element,
    eq,
    face_euler_characteristic,
    formal_sum_is_zero,
    from_z2,
    interval,
    involution,
    involution_z2,
    seminorm,
    to_z,
    to_z2,
)
from .norm_witness import in_plus_kernel, witness_antisymmetric, witness_same_norm
from .partitions import (
    check_cutting_euler_relation,
    check_cutting_relation,
    check_face_euler_partition_relation,
    check_partition_relation,
    partition_from_hyperplanes,
    shadow_partition,
    validate_partition,
)
from .polytope_ops import (
    Hyperplane,
    compress,
    cut,
    face_in_direction,
    gluing_identities,
    height,
    is_grounded,
    minkowski_sum,
    reflect,
    shadow,
    upper_height,
    upper_shadow,
    vertical_glue,
    vertical_stretch,
)

DEFAULT_DIM = 2
DEFAULT_BOUND = 5


@dataclass
class Instance:
    """What a trial looked at; emitted as the counterexample document on failure."""

    polytopes: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def add(self, name: str, P: Polytope) -> Polytope:
        self.polytopes[name] = emit_polytope(P)
        return P


@dataclass
class VerifyReport:
    suite: str
    trials: int
    passed: int
    seed: int
    dim: int
    coord_bound: int
    counterexample: Optional[dict] = None
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def to_json(self) -> dict:
        return asdict(self)


def trial_rng(suite: str, seed: int, index: int) -> random.Random:
    return random.Random((zlib.crc32(suite.encode()) << 40) ^ (seed * 1_000_003 + index))


def random_polytope(rng: random.Random, n: int, bound: int) -> Polytope:
    k = rng.randint(3, 8)
    return extreme_points(tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k))


def full_polytope(rng: random.Random, n: int, bound: int) -> Polytope:
    while True:
        P = random_polytope(rng, n, max(bound, 1))
        if P.dim == n:
            return P


def random_vector(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(lo, hi) for _ in range(n))
        if any(v):
            return v


def interior_plane(rng: random.Random, P: Polytope) -> Optional[Hyperplane]:
    """A hyperplane strictly between the extreme values of a random functional on P."""
    for _ in range(20):
        a = random_vector(rng, P.ambient_dim, -2, 2)
        vals = sorted({sum(x * y for x, y in zip(a, v)) for v in P.vertices})
        if len(vals) < 2:
            continue
        lo, hi = vals[0], vals[-1]
        num = rng.randint(1, 3)
        return Hyperplane.make(a, lo + Fraction(num, 4) * (hi - lo))
    return None


# ------------------------------------------------------------------ suites


def s_cancellation(rng, n, B, inst):
    P1, P2, Q = (inst.add(k, random_polytope(rng, n, B)) for k in ("P1", "P2", "Q"))
    same = minkowski_sum(P1, Q) == minkowski_sum(P2, Q)
    return same == (P1 == P2) and eq(element(minkowski_sum(P1, Q), minkowski_sum(P2, Q)), element(P1, P2))


def s_face_additivity(rng, n, B, inst):
    P, Q = inst.add("P", random_polytope(rng, n, B)), inst.add("Q", random_polytope(rng, n, B))
    S = minkowski_sum(P, Q)
    for _ in range(5):
        phi = random_vector(rng, n)
        inst.extra.setdefault("phi", []).append(list(phi))
        if face_in_direction(S, phi) != minkowski_sum(face_in_direction(P, phi), face_in_direction(Q, phi)):
            return False
    return True


def s_shadow(rng, n, B, inst):
    P, Q = inst.add("P", random_polytope(rng, n, B)), inst.add("Q", random_polytope(rng, n, B))
    R = reflect(P)
    return (
        shadow(minkowski_sum(P, Q)) == minkowski_sum(shadow(P), shadow(Q))
        and upper_height(R) == -height(P)
        and upper_shadow(R) == reflect(shadow(P))
    )


def s_cutting(rng, n, B, inst):
    P = inst.add("P", random_polytope(rng, n, B))
    H = interior_plane(rng, P)
    if H is None:  # a point: nothing to cut
        return True
    inst.extra["plane"] = [list(H.normal), str(H.offset)]
    return check_cutting_relation(P, H) and check_cutting_euler_relation(P, H)


def s_partition(rng, n, B, inst):
    P = inst.add("P", full_polytope(rng, n, B))
    planes = [H for H in (interior_plane(rng, P) for _ in range(rng.randint(1, 3))) if H]
    inst.extra["planes"] = [[list(H.normal), str(H.offset)] for H in planes]
    part = partition_from_hyperplanes(P, planes)
    if n <= 2:
        validate_partition(P, part.cells)
    return check_partition_relation(part) and check_face_euler_partition_relation(part)


def grounded_polytope(rng, n, B, inst) -> Polytope:
    P = inst.add("P", full_polytope(rng, n, B))
    h = rng.randint(height(P), upper_height(P))
    inst.extra["height"] = h
    Q = vertical_stretch(P, h).stretched
    return cut(Q, Hyperplane.flat(n, h)).upper


def s_shadow_partition(rng, n, B, inst):
    G = grounded_polytope(rng, n, B, inst)
    part = shadow_partition(G)
    validate_partition(G, part.cells)
    return all(c.is_integral for c in part.cells) and check_partition_relation(part)


def s_stretching(rng, n, B, inst):
    P = inst.add("P", full_polytope(rng, n, B))
    h = rng.randint(height(P) - 1, upper_height(P) + 1)
    inst.extra["height"] = h
    res = vertical_stretch(P, h)
    c = cut(res.stretched, Hyperplane.flat(n, h))
    return (
        c.section.is_integral
        and c.section == compress(res.stretched, h)
        and is_grounded(c.upper)
        and is_grounded(reflect(c.lower))
    )


def s_gluing(rng, n, B, inst):
    P = inst.add("P", random_polytope(rng, n, B))
    # the vertical mirror of P has the same compressions
    M = inst.add("mirror", extreme_points(v[:-1] + (-v[-1],) for v in P.vertices))
    k = max(abs(v[-1]) for v in P.vertices)
    Ps = vertical_stretch(P, 0).stretched
    Ms = vertical_stretch(M, 0).stretched
    H = Hyperplane.flat(n, 0)
    S = vertical_glue(Ps, Ms, H)
    halves = cut(S, H)
    return (
        gluing_identities(Ps)
        and halves.upper == cut(Ps, H).upper
        and halves.lower == cut(Ms, H).lower
        and S.is_integral
        and k == vertical_stretch(P, 0).k
    )


def s_euler(rng, n, B, inst):
    P = inst.add("P", random_polytope(rng, n, B))
    return eq(involution(element(P)), -face_euler_characteristic(P))


def s_euler_corollaries(rng, n, B, inst):
    P, Q = inst.add("P", random_polytope(rng, n, B)), inst.add("Q", random_polytope(rng, n, B))
    S = minkowski_sum(P, reflect(P))
    acc = FormalSum.of((f.polytope, (-1) ** f.dim) for f in S.faces if f.polytope != S)
    if S.dim % 2 == 0:
        acc.add(S, 2)
    symmetric_ok = formal_sum_is_zero(acc, n)
    add = FormalSum.of((f.polytope, (-1) ** f.dim) for f in minkowski_sum(P, Q).faces)
    for R in (P, Q):
        for f in R.faces:
            add.add(f.polytope, -((-1) ** f.dim))
    return symmetric_ok and formal_sum_is_zero(add, n)


def random_class(rng, n, B, inst) -> FormalSum:
    """A signed combination of 1-4 random polytopes."""
    terms = FormalSum()
    for i in range(rng.randint(1, 4)):
        terms.add(inst.add(f"P{i}", random_polytope(rng, n, B)), rng.choice((1, 1, -1)))
    return terms


def s_basis_roundtrip(rng, n, B, inst):
    terms = random_class(rng, n, B, inst)
    d = decompose(terms, n)
    if n <= 2:
        ok = eq(reassemble(d), terms.collapse(n, quotient=True))
    else:
        # collapsed sums in Z^3 run to thousands of vertices; compare support functions
        ok = equivalent(d, terms)
    if n <= 2:
        # additivity on a genuine Minkowski sum
        P, Q = inst.add("A", random_polytope(rng, n, B)), inst.add("B", random_polytope(rng, n, B))
        ok = ok and decompose(minkowski_sum(P, Q)) == decompose(P) + decompose(Q)
    return ok


def s_witness(rng, n, B, inst):
    y = inst.add("y", random_polytope(rng, n, B))
    x = element(y, reflect(y))
    T = witness_antisymmetric(x).witness
    if not eq(T - involution(T), x):
        return False
    # a constructed same-norm pair: P = A + *C + D, Q = *A + C + D (+ translation)
    A, C, D = (inst.add(k, random_polytope(rng, n, B)) for k in ("A", "C", "D"))
    P = minkowski_sum(minkowski_sum(A, reflect(C)), D)
    Q = minkowski_sum(minkowski_sum(reflect(A), C), D)
    R = witness_same_norm(P, Q)
    return minkowski_sum(P, reflect(R)) == minkowski_sum(Q, R)


def s_kernel(rng, n, B, inst):
    P, Q = inst.add("P", random_polytope(rng, n, B)), inst.add("Q", random_polytope(rng, n, B))
    probes = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    probes += [random_vector(rng, n) for _ in range(4)]
    ok = True
    for x in (element(P, Q), element(P, reflect(P)), element(minkowski_sum(P, Q), minkowski_sum(reflect(P), Q))):
        exact = in_plus_kernel(x)
        smoke = all(seminorm(x, phi) == 0 for phi in probes)
        ok &= (not exact) or smoke
    ok &= in_plus_kernel(element(P, reflect(P)))
    if n == 1:
        ok &= _model_checks(rng)
    return ok


def _model_checks(rng) -> bool:
    m = rng.randint(-5, 5)
    l = rng.randint(0, 5)
    x = element(interval(m, m + l))
    k, ll = to_z2(x)
    return (
        (k, ll) == (m, l)
        and eq(from_z2(k, ll), x)
        and to_z2(involution(x)) == involution_z2(k, ll)
        and to_z(involution(x.to_quotient())) == to_z(x.to_quotient()) == l
    )


SUITES: dict[str, Callable] = {
    "cancellation": s_cancellation,
    "face-additivity": s_face_additivity,
    "shadow": s_shadow,
    "cutting": s_cutting,
    "partition": s_partition,
    "shadow-partition": s_shadow_partition,
    "stretching": s_stretching,
    "gluing": s_gluing,
    "euler": s_euler,
    "euler-corollaries": s_euler_corollaries,
    "basis-roundtrip": s_basis_roundtrip,
    "witness": s_witness,
    "kernel": s_kernel,
}


def run_trial(suite: str, seed: int, index: int, n: int, bound: int) -> tuple[bool, dict]:
    inst = Instance()
    try:
        ok = bool(SUITES[suite](trial_rng(suite, seed, index), n, bound, inst))
        err = None
    except (AssertionError, ValueError) as exc:
        ok, err = False, f"{type(exc).__name__}: {exc}"
    doc = {"index": index, "polytopes": inst.polytopes, **inst.extra}
    if err:
        doc["error"] = err
    return ok, doc


def _star(args):
    return run_trial(*args)


def run_suite(
    suite: str,
    trials: int,
    seed: int,
    n: int = DEFAULT_DIM,
    bound: int = DEFAULT_BOUND,
    parallel: bool = False,
    first_index: int = 0,
) -> VerifyReport:
    if suite not in SUITES:
        raise KeyError(suite)
    start = time.perf_counter()
    jobs = [(suite, seed, i, n, bound) for i in range(first_index, first_index + trials)]
    if parallel and trials > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_star, jobs, chunksize=max(1, trials // 32)))
    else:
        results = [run_trial(*j) for j in jobs]
    passed = sum(ok for ok, _ in results)
    first = next((doc for ok, doc in results if not ok), None)
    if first is not None:
        first["replay"] = (
            f"polygroup verify --suite {suite} --trials 1 --seed {seed} "
            f"--dim {n} --coord-bound {bound} --index {first['index']}"
        )
    return VerifyReport(suite, trials, passed, seed, n, bound, first, time.perf_counter() - start)


__all__ = ["SUITES", "VerifyReport", "run_suite", "run_trial", "trial_rng"]
