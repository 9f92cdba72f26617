"""Seeded random series and sampled checks on the subgroup N = {degmin = 0}.

Every sample is drawn from its own SplitMix64 stream ``for_index(seed,
index)``, so a reported failure is reproducible from the seed and index
alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .errors import NotInImage
from .rng import SplitMix64
from .scalars import MPoly, RatFunc
from .series import SkewSeries, T, n_conjugate, series_inv
from .scalars import x as var

CONSTRAINTS = ("any", "degmin0", "in_K", "image_friendly")
POOLS = ("monomials", "fractions")
_SCALARS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(3))


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    support_size: int = 3
    exponent_range: Tuple[int, int] = (-2, 3)
    variable_range: Tuple[int, int] = (0, 3)
    coefficient_pool: str = "monomials"
    precision: int = 8
    image_threshold: int = 3

    def __post_init__(self):
        lo, hi = self.exponent_range
        vlo, vhi = self.variable_range
        if lo > hi or vlo > vhi or vlo < 0:
            raise ValueError("sampler ranges must be nonempty and variables nonnegative")
        if self.support_size < 1:
            raise ValueError("support_size must be positive")
        if self.precision <= hi - lo:
            raise ValueError("precision must exceed the exponent span")
        if self.coefficient_pool not in POOLS:
            raise ValueError(f"coefficient_pool must be one of {POOLS}")


def _coefficient(cfg: SamplerConfig, rng: SplitMix64, vlo: int) -> RatFunc:
    c = rng.choice(_SCALARS)
    v = rng.randint(vlo, max(vlo, cfg.variable_range[1]))
    if cfg.coefficient_pool == "monomials":
        e = rng.choice((-1, 1, 1, 2))
        return RatFunc(MPoly._raw({((v, e),) if e > 0 else (): c}), MPoly._raw({((v, -e),): Fraction(1)}) if e < 0 else None)
    w = rng.randint(vlo, max(vlo, cfg.variable_range[1]))
    return (var(v) + c) / var(w)


def _exponents(cfg: SamplerConfig, rng: SplitMix64, constraint: str) -> List[int]:
    lo, hi = cfg.exponent_range
    if constraint == "degmin0":
        lo = 0
        hi = max(hi, 0)
    pool = list(range(lo, hi + 1))
    if constraint == "in_K":
        pool = [e for e in pool if e % 2 == 0] or [0]
    first = 0 if constraint == "degmin0" else rng.choice(pool)
    chosen = {first}
    rest = [e for e in pool if e > first] if constraint == "degmin0" else pool
    want = min(cfg.support_size, len(set(rest) | chosen))
    while len(chosen) < want:
        chosen.add(rng.choice(rest))
    return sorted(chosen)


def sample_series(cfg: SamplerConfig, constraint: str = "any", index: int = 0) -> SkewSeries:
    """A random Laurent polynomial observed on a window of ``cfg.precision`` terms."""
    if constraint not in CONSTRAINTS:
        raise ValueError(f"constraint must be one of {CONSTRAINTS}")
    rng = SplitMix64.for_index(cfg.seed, index)
    exps = _exponents(cfg, rng, constraint)
    vlo = cfg.image_threshold if constraint == "image_friendly" else cfg.variable_range[0]
    coeffs = {e: _coefficient(cfg, rng, vlo) for e in exps}
    return SkewSeries(coeffs, exps[0] + cfg.precision)


def sample_rational(rng: SplitMix64, span: int = 5) -> Fraction:
    """A nonzero rational with numerator and denominator bounded by ``span``."""
    while True:
        num = rng.randint(-span, span)
        if num:
            return Fraction(num, rng.randint(1, span))


@dataclass
class Failure:
    check: str
    seed: int
    index: int
    inputs: dict

    def to_dict(self) -> dict:
        return {"check": self.check, "seed": self.seed, "index": self.index, "inputs": self.inputs}


@dataclass
class SampleReport:
    name: str
    seed: int
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: List[Failure] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def attempts(self) -> int:
        return self.passed + self.failed + self.skipped

    @property
    def skip_rate(self) -> float:
        return self.skipped / self.attempts if self.attempts else 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, good: bool, check: str, index: int, inputs: dict):
        if good:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(Failure(check, self.seed, index, inputs))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "skip_rate": round(self.skip_rate, 4),
            "failures": [f.to_dict() for f in self.failures],
            **self.notes,
        }


def _degmin0_on_window(s: SkewSeries) -> bool:
    return not s.is_zero_on_window() and s.degmin() == 0


def check_N_normality(cfg: SamplerConfig, count: int) -> SampleReport:
    """Sampled closure of N under products and inverses and conjugation by image-friendly elements."""
    rep = SampleReport("N_normality", cfg.seed)
    for idx in range(count):
        alpha = sample_series(cfg, "degmin0", 3 * idx)
        other = sample_series(cfg, "degmin0", 3 * idx + 1)
        beta = sample_series(cfg, "image_friendly", 3 * idx + 2)
        inputs = {"alpha": str(alpha), "other": str(other), "beta": str(beta)}
        rep.record(_degmin0_on_window(alpha * other), "product", idx, inputs)
        rep.record(_degmin0_on_window(series_inv(alpha)), "inverse", idx, inputs)
        try:
            conj = n_conjugate(alpha, beta)
        except NotInImage:
            rep.skipped += 1
            continue
        rep.record(_degmin0_on_window(conj), "conjugate", idx, inputs)
    return rep


def commutes(u: SkewSeries, v: SkewSeries) -> bool:
    return (u * v - v * u).is_zero_on_window()


PROBES = (var(0) + T, var(1) + T, 1 + var(0) * T)


def check_centralizer(cfg: SamplerConfig, count: int) -> SampleReport:
    """Central rationals commute with sampled N-elements; non-central samples meet a non-commuting N-element.

    Only the ground field Q is used as the known central subfield.
    """
    rep = SampleReport("centralizer", cfg.seed)
    witnesses = 0
    for idx in range(count):
        rng = SplitMix64.for_index(cfg.seed ^ 0x5EED, idx)
        c = sample_rational(rng)
        alpha = sample_series(cfg, "degmin0", 2 * idx)
        inputs = {"c": str(c), "alpha": str(alpha)}
        rep.record(commutes(SkewSeries.coerce(c), alpha), "central_scalar", idx, inputs)
        gamma = sample_series(cfg, "degmin0", 2 * idx + 1)
        if gamma.is_exact() and gamma.coeffs.keys() == {0} and gamma.coeffs[0].is_constant():
            continue
        candidates = list(PROBES) + [alpha]
        try:
            found = next((p for p in candidates if not commutes(gamma, p)), None)
        except NotInImage:
            rep.skipped += 1
            continue
        if found is not None:
            witnesses += 1
        rep.record(found is not None, "noncentral_witness", idx, {"gamma": str(gamma)})
    rep.notes["witnesses"] = witnesses
    return rep


def sample_gadget(cfg: SamplerConfig, index: int):
    """An admissible (a, b, alpha) for the inverse-span gadget.

    a = r t^k with r rational and 1 <= k <= 3, b a nonconstant element of F
    (so b lies in N and ba - ab = r (b - sigma^k(b)) t^k is nonzero), and
    alpha in {0, 1, 2}.  Richer a or b make d^-1 b (a + alpha) grow
    exponentially in coefficient size, well past desk-scale budgets.
    """
    rng = SplitMix64.for_index(cfg.seed, index)
    a = SkewSeries({rng.randint(1, 3): sample_rational(rng, 3)})
    b = SkewSeries.coerce(_coefficient(cfg, rng, cfg.variable_range[0]))
    return a, b, rng.randint(0, 2)


def check_thm23(cfg: SamplerConfig, count: int, window: int = 8) -> SampleReport:
    """Sign-corrected identity and inverse reconstruction on sampled gadgets."""
    from .algebraicity import inverse_span_check, thm23_identity

    rep = SampleReport("thm23_samples", cfg.seed)
    for idx in range(count):
        a, b, alpha = sample_gadget(cfg, idx)
        # d starts at t^k, so k extra terms keep the identity window at full length
        precision = window + 1 + a.degmin()
        inputs = {"a": str(a), "b": str(b), "alpha": alpha}
        try:
            ident = thm23_identity(a, b, alpha, precision)
            span = inverse_span_check(a, b, alpha, precision=precision)
        except NotInImage:
            rep.skipped += 1
            continue
        rep.record(ident.ok and ident.window >= window, "identity", idx, inputs)
        rep.record(span.ok and span.window >= window, "inverse_span", idx, inputs)
    return rep


def check_degmin_additivity(cfg: SamplerConfig, count: int) -> SampleReport:
    """degmin(alpha beta) = degmin(alpha) + degmin(beta) on sampled pairs."""
    rep = SampleReport("degmin_additivity", cfg.seed)
    lifted = 0
    for idx in range(count):
        alpha = sample_series(cfg, "any", 2 * idx)
        beta = sample_series(cfg, "any", 2 * idx + 1)
        # lifting by t^n is an injective ring map that keeps degmin
        n = max(0, -alpha.degmin())
        try:
            prod = alpha.lift(n) * beta.lift(n)
        except NotInImage:
            rep.skipped += 1
            continue
        lifted += n > 0
        good = not prod.is_zero_on_window() and prod.degmin() == alpha.degmin() + beta.degmin()
        rep.record(good, "additivity", idx, {"alpha": str(alpha), "beta": str(beta), "lift": n})
    rep.notes["lifted"] = lifted
    return rep


def check_inverse_law(cfg: SamplerConfig, count: int) -> SampleReport:
    """For degmin-0 samples: degmin(alpha^-1) = -degmin(alpha) and both products are 1 on the window."""
    rep = SampleReport("degmin_inverse", cfg.seed)
    one = SkewSeries.one()
    for idx in range(count):
        alpha = sample_series(cfg, "degmin0", idx)
        inv = series_inv(alpha)
        good = (
            inv.degmin() == -alpha.degmin()
            and (alpha * inv).agrees(one)
            and (inv * alpha).agrees(one)
        )
        rep.record(good, "inverse", idx, {"alpha": str(alpha)})
    return rep


def _random_quat(alg, rng: SplitMix64, span: int = 5):
    return alg(*(sample_rational(rng, span) if rng.randint(0, 3) else 0 for _ in range(4)))


def check_quaternion_laws(alg, cfg: SamplerConfig, count: int) -> SampleReport:
    """q is a root of its central minimal polynomial, and N(pq) = N(p) N(q)."""
    from .orepoly import right_eval
    from .quaternion import quat_minpoly_center

    rep = SampleReport("quaternion_laws", cfg.seed)
    for idx in range(count):
        rng = SplitMix64.for_index(cfg.seed, idx)
        p, q = _random_quat(alg, rng), _random_quat(alg, rng)
        inputs = {"p": str(p), "q": str(q)}
        rep.record(right_eval(quat_minpoly_center(q), q).is_zero(), "central_minpoly", idx, inputs)
        rep.record((p * q).norm() == p.norm() * q.norm(), "norm_multiplicative", idx, inputs)
    return rep


def check_derived_degrees(alg, cfg: SamplerConfig, count: int, levels=(1, 2, 3)) -> SampleReport:
    """Samples of the derived subgroups D^(n) are left algebraic over K of degree <= 2."""
    from .algebraicity import left_minpoly
    from .quaternion import sample_derived

    rep = SampleReport("derived_degrees", cfg.seed)
    for level in levels:
        for idx, q in enumerate(sample_derived(alg, level, count, cfg.seed)):
            res = left_minpoly(q, "K", 2)
            good = res.algebraic and res.degree <= 2
            rep.record(good, f"level{level}", idx, {"level": level, "q": str(q)})
    return rep


def check_operators(alg, cfg: SamplerConfig, count: int, span: int = 3) -> SampleReport:
    """Invariant-factor chain, degree sum and cyclic-vector rank on random 2x2 operators over K."""
    from .structure import cyclic_vector, invariant_factors, operator_from_matrix, operator_minpoly

    rep = SampleReport("operators", cfg.seed)
    for idx in range(count):
        rng = SplitMix64.for_index(cfg.seed, idx)
        matrix = [
            [alg.kelem(rng.randint(-span, span), rng.randint(-span, span)) for _ in range(2)]
            for _ in range(2)
        ]
        op = operator_from_matrix(alg, matrix)
        inv = invariant_factors(op)
        f = operator_minpoly(op)
        cyc = cyclic_vector(op, seed=cfg.seed)
        inputs = {"matrix": str(op)}
        rep.record(inv.chain_holds(), "chain", idx, inputs)
        rep.record(sum(inv.degrees) == op.dim, "degree_sum", idx, inputs)
        rep.record(bool(inv.factors) and inv.factors[-1] == f, "last_factor", idx, inputs)
        rep.record(cyc.rank == f.degree, "cyclic_rank", idx, inputs)
    return rep
