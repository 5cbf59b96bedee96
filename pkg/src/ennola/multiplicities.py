"""Tensor-product multiplicity polynomials for the finite general linear
and unitary groups.

The pipeline: build the Cauchy kernel Omega (transformed Hall-Littlewood
products weighted by inverse unipotent centralizer orders), take its
plethystic logarithm scaled by (q - 1) to get the master series Psi whose
Schur coefficients are the generic multiplicities, then form the
plethystic exponential of u * Psi whose Schur coefficients, divided by u,
are the two-variable interpolation polynomials.  Specializing u to 0, 1,
and -1 (the last with q -> -q and an explicit sign) recovers the generic,
general-linear unipotent, and unitary unipotent multiplicities.

Infinite products with orbit-count exponents give an independent
recomputation of the same polynomials and serve as cross-checks.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .coeffs import (
    ONE,
    Q,
    RAT_ZERO,
    U,
    PolyQU,
    RatQU,
    poly_from_json,
    poly_to_json,
)
from .characters import kronecker, schur_to_powersum
from .hall_littlewood import transformed_hl
from .partitions import (
    MultiPartition,
    Partition,
    a_poly,
    dual,
    enumerate_partitions,
    n_stat,
    parse_partition,
    partition_to_text,
    size,
)
from .symfunc import GradedSeries, SymFunc, mobius
from .types import (
    TypeEntries,
    from_partition,
    schur_of_type,
    type_size,
    type_stats,
    dual_type,
)

CACHE_VERSION = 1
MINUS_ONE = ONE.scale(-1)


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def _poly_div_int(p: PolyQU, d: int) -> PolyQU:
    """Coefficient-wise division by a positive integer, kept exact with
    Fraction coefficients where d does not divide."""
    out: dict = {}
    for mon, c in p.terms.items():
        x = Fraction(c, d)
        out[mon] = int(x) if x.denominator == 1 else x
    return PolyQU(out)


def phi(d: int) -> PolyQU:
    """Number of size-d Frobenius orbits on the multiplicative group,
    split form: (1/d) sum over r | d of mu(r) (q^{d/r} - 1).  Integer-valued
    at every integer q, but the coefficients themselves can be fractional
    (e.g. (q^2 - q)/2 at d = 2)."""
    if d < 1:
        raise ValueError("d must be positive")
    acc = PolyQU()
    for r in _divisors(d):
        m = mobius(r)
        if m:
            acc = acc + (Q ** (d // r) - ONE).scale(m)
    return _poly_div_int(acc, d)


def phi_prime(d: int) -> PolyQU:
    """Twisted-form orbit count: (1/d) sum of mu(r) (q^{d/r} - (-1)^{d/r})."""
    if d < 1:
        raise ValueError("d must be positive")
    acc = PolyQU()
    for r in _divisors(d):
        m = mobius(r)
        if m:
            e = d // r
            acc = acc + (Q ** e - PolyQU.const((-1) ** e)).scale(m)
    return _poly_div_int(acc, d)


def phi_u(d: int) -> PolyQU:
    """Common u-deformation: (1/d) sum of mu(r) u^{d/r} (q^{d/r} - 1);
    u = 1 gives phi, (u, q) = (-1, -q) gives phi_prime."""
    if d < 1:
        raise ValueError("d must be positive")
    acc = PolyQU()
    for r in _divisors(d):
        m = mobius(r)
        if m:
            e = d // r
            acc = acc + ((U ** e) * (Q ** e - ONE)).scale(m)
    return _poly_div_int(acc, d)


@dataclass(frozen=True)
class SignData:
    """Parity data attached to a multipartition: the even integer d and the
    signs entering the unitary specializations."""

    d_mu: int
    sign_uprime: int
    sign_vprime: int


def d_mu(mu: MultiPartition) -> SignData:
    k = len(mu)
    n = size(mu[0]) if mu else 0
    for comp in mu:
        if size(comp) != n:
            raise ValueError("components of different sizes")
    d = n * n * (k - 2) - sum(p * p for comp in mu for p in comp) + 2
    if d % 2:
        raise AssertionError(f"odd pairing degree {d} for {mu}")
    half = d // 2
    n_dual = sum(n_stat(dual(comp)) for comp in mu)
    vp = -1 if (k * (n + (n + 1) // 2) + n_dual + n + 1) % 2 else 1
    return SignData(d_mu=d, sign_uprime=-1 if half % 2 else 1, sign_vprime=vp)


def as_multitype(arg) -> tuple[TypeEntries, ...]:
    """Accept a multipartition or a multitype; return the multitype."""
    comps = []
    for comp in arg:
        if comp and isinstance(comp[0], tuple):
            comps.append(comp)
        else:
            comps.append(from_partition(comp))
    sizes = {type_size(c) for c in comps}
    if len(sizes) > 1:
        raise ValueError("components of different sizes")
    return tuple(comps)


class MasterContext:
    """Shared state for one (k, N): the kernel series, the master series,
    its u-exponential, and per-degree Schur coefficient tables.  All the
    heavy series are built lazily; a disk cache of the master series'
    Schur coefficients makes generic-multiplicity queries cheap."""

    def __init__(self, k: int, N: int, cache_dir: str | None = None):
        if k < 1 or N < 1:
            raise ValueError("k and N must be positive")
        self.k = k
        self.N = N
        self.cache_dir = cache_dir
        self._omega: GradedSeries | None = None
        self._psi: GradedSeries | None = None
        self._exp_u_psi: GradedSeries | None = None
        self._r_series: GradedSeries | None = None
        self._psi_schur: dict[int, dict[MultiPartition, PolyQU]] = {}
        self._tau_schur: dict[int, dict[MultiPartition, PolyQU]] = {}
        self.ignored_cache_files: list[str] = []

    @property
    def omega(self) -> GradedSeries:
        if self._omega is None:
            self._omega = _build_omega(self.k, self.N)
        return self._omega

    @property
    def psi(self) -> GradedSeries:
        if self._psi is None:
            cached = self._psi_from_cache()
            if cached is not None:
                self._psi = cached
            else:
                self._psi = self.omega.pleth_log().scale(RatQU.from_poly(Q - ONE))
        return self._psi

    @property
    def exp_u_psi(self) -> GradedSeries:
        if self._exp_u_psi is None:
            self._exp_u_psi = self.psi.scale(RatQU.from_poly(U)).pleth_exp()
        return self._exp_u_psi

    def r_series(self) -> GradedSeries:
        """Coefficients of the plain logarithm of the kernel series."""
        if self._r_series is None:
            self._r_series = self.omega.plain_log()
        return self._r_series

    # master-series Schur tables

    def psi_schur(self, n: int) -> dict[MultiPartition, PolyQU]:
        """Schur coefficients of the degree-n master series coefficient;
        values are integer polynomials in q."""
        if n in self._psi_schur:
            return self._psi_schur[n]
        if not 1 <= n <= self.N:
            raise ValueError(f"degree {n} outside 1..{self.N}")
        table = None
        if self.cache_dir:
            table = load_cache(self.cache_dir, self.k, n)
            path = cache_path(self.cache_dir, self.k, n)
            if table is None and os.path.exists(path):
                self.ignored_cache_files.append(path)
        if table is None:
            sf = self.psi.coeffs[n].to_schur()
            table = {}
            for key, c in sorted(sf.coeffs.items()):
                p = c.to_poly()
                if not p.is_zero():
                    table[key] = p
            if self.cache_dir:
                try:
                    save_cache(self.cache_dir, self.k, n, table)
                except OSError:
                    pass
        self._psi_schur[n] = table
        return table

    def _psi_from_cache(self) -> GradedSeries | None:
        """Rebuild the master series from fully cached Schur tables."""
        if not self.cache_dir:
            return None
        tables = []
        for n in range(1, self.N + 1):
            t = self._psi_schur.get(n) or load_cache(self.cache_dir, self.k, n)
            if t is None:
                return None
            tables.append(t)
        coeffs: list = [RAT_ZERO]
        for n, table in enumerate(tables, start=1):
            self._psi_schur[n] = table
            acc: dict[MultiPartition, RatQU] = {}
            for mu, p in table.items():
                base = RatQU.from_poly(p)
                for rho, c in _schur_p_tensor(mu):
                    term = base.scale_frac(c)
                    cur = acc.get(rho)
                    acc[rho] = term if cur is None else cur + term
            coeffs.append(SymFunc(self.k, n, "p", acc))
        return GradedSeries(self.k, self.N, coeffs)

    def tau_schur(self, n: int) -> dict[MultiPartition, PolyQU]:
        """Interpolation polynomials for all multipartitions of total size n."""
        if n in self._tau_schur:
            return self._tau_schur[n]
        if not 1 <= n <= self.N:
            raise ValueError(f"degree {n} outside 1..{self.N}")
        sf = self.exp_u_psi.coeffs[n].to_schur()
        table: dict[MultiPartition, PolyQU] = {}
        for key, c in sorted(sf.coeffs.items()):
            p = c.to_poly()
            if p.is_zero():
                continue
            table[key] = _div_u(p, key)
        self._tau_schur[n] = table
        return table


@lru_cache(maxsize=None)
def _schur_p_tensor(mu: MultiPartition) -> tuple[tuple[MultiPartition, Fraction], ...]:
    """Power-sum expansion of the tensor product of Schur functions."""
    comps = [schur_to_powersum(c) for c in mu]
    out: list[tuple[MultiPartition, Fraction]] = []

    def rec(i: int, key: tuple, c: Fraction) -> None:
        if i == len(comps):
            out.append((key, c))
            return
        for rho, v in comps[i].items():
            rec(i + 1, key + (rho,), c * v)

    rec(0, (), Fraction(1))
    return tuple(out)


def _div_u(p: PolyQU, key) -> PolyQU:
    """Exact division by u with degree sanity checks."""
    shifted = {}
    for (i, j), c in p.terms.items():
        if j < 1:
            raise AssertionError(f"coefficient of {key} not divisible by u: {p}")
        shifted[(i, j - 1)] = c
    out = PolyQU(shifted)
    n = sum(key[0]) if key else 0
    if out.udeg() > max(n - 1, 0):
        raise AssertionError(f"u-degree of {out} exceeds n-1 for {key}")
    return out


def _build_omega(k: int, N: int) -> GradedSeries:
    coeffs: list = [RatQU.from_int(1)]
    for n in range(1, N + 1):
        acc: dict[MultiPartition, RatQU] = {}
        for lam in enumerate_partitions(n):
            inv_a = RatQU(ONE, a_poly(lam))
            h = transformed_hl(lam, "p")
            items = list(h.coeffs.items())

            def rec(i: int, key: tuple, c: RatQU) -> None:
                if i == k:
                    cur = acc.get(key)
                    acc[key] = c if cur is None else cur + c
                    return
                for (rho,), v in items:
                    rec(i + 1, key + (rho,), c * v)

            rec(0, (), inv_a)
        coeffs.append(SymFunc(k, n, "p", acc))
    return GradedSeries(k, N, coeffs)


def build_context(k: int, N: int, cache_dir: str | None = None) -> MasterContext:
    return MasterContext(k, N, cache_dir)


# generic multiplicities


def H_omega(ctx: MasterContext, omega) -> PolyQU:
    """Hall pairing of the degree-n master coefficient with the Schur-type
    product attached to a multitype; an integer polynomial in q."""
    mt = as_multitype(omega)
    if len(mt) != ctx.k:
        raise ValueError(f"expected {ctx.k} components, got {len(mt)}")
    n = type_size(mt[0])
    if all(len(c) == 1 and c[0][0] == 1 and c[0][2] == 1 for c in mt):
        mu = tuple(c[0][1] for c in mt)
        return ctx.psi_schur(n).get(mu, PolyQU())
    comps = [schur_of_type(c, "p") for c in mt]
    acc: dict[MultiPartition, RatQU] = {}

    def rec(i: int, key: tuple, c: RatQU) -> None:
        if i == len(comps):
            cur = acc.get(key)
            acc[key] = c if cur is None else cur + c
            return
        for (rho,), v in comps[i].coeffs.items():
            rec(i + 1, key + (rho,), c * v)

    rec(0, (), RatQU.from_int(1))
    s_omega = SymFunc(ctx.k, n, "p", acc)
    val = ctx.psi.coeffs[n].pairing(s_omega)
    return val.to_poly()


def _multitype_stats(mt) -> tuple[int, int, int, int]:
    """(n, r, r_prime, n_dual) summed over components."""
    n = type_size(mt[0])
    r = rp = nd = 0
    for comp in mt:
        _, r_c, rp_c = type_stats(comp)
        r += r_c
        rp += rp_c
        nd += type_stats(dual_type(comp))[0]
    return n, r, rp, nd


def V_poly(ctx: MasterContext, omega) -> PolyQU:
    """Generic multiplicity for the split form: (-1)^{r} times the master
    coefficient pairing."""
    mt = as_multitype(omega)
    _, r, _, _ = _multitype_stats(mt)
    return H_omega(ctx, mt).scale((-1) ** r)


def Vprime_poly(ctx: MasterContext, omega) -> PolyQU:
    """Generic multiplicity for the twisted form, as the signed q -> -q
    substitution of the split-form value."""
    mt = as_multitype(omega)
    n, r, rp, nd = _multitype_stats(mt)
    sign = (-1) ** (rp + r + nd + n + 1)
    return V_poly(ctx, mt).subst(q=-Q).scale(sign)


# unipotent multiplicities and the interpolation


def T_poly(ctx: MasterContext, mu: MultiPartition) -> PolyQU:
    mu = tuple(tuple(c) for c in mu)
    if len(mu) != ctx.k:
        raise ValueError(f"expected {ctx.k} components, got {len(mu)}")
    n = size(mu[0])
    return ctx.tau_schur(n).get(mu, PolyQU())


def U_poly(ctx: MasterContext, mu: MultiPartition) -> PolyQU:
    return T_poly(ctx, mu).subst(u=ONE)


def Uprime_poly(ctx: MasterContext, mu: MultiPartition) -> PolyQU:
    sd = d_mu(tuple(tuple(c) for c in mu))
    val = T_poly(ctx, mu).subst(q=-Q, u=MINUS_ONE)
    return val.scale(sd.sign_uprime)


# infinite-product oracles


def _signed_neg_q(r: GradedSeries) -> GradedSeries:
    """Degree-m coefficient replaced by (-1)^m times its q -> -q image."""
    coeffs: list = [r.coeffs[0].subst(q=-Q)]
    for m in range(1, r.N + 1):
        f = r.coeffs[m].subst_coeffs(q=-Q)
        coeffs.append(f.scale((-1) ** m))
    return GradedSeries(r.k, r.N, coeffs)


def _extract_tables(ser: GradedSeries) -> dict[tuple[int, MultiPartition], PolyQU]:
    out: dict[tuple[int, MultiPartition], PolyQU] = {}
    for n in range(1, ser.N + 1):
        sf = ser.coeffs[n].to_schur()
        for key, c in sorted(sf.coeffs.items()):
            p = c.to_poly()
            if not p.is_zero():
                out[(n, key)] = p
    return out


def U_poly_product_oracle(
    k: int, N: int, ctx: MasterContext | None = None
) -> dict[tuple[int, MultiPartition], PolyQU]:
    """Split-form unipotent multiplicities recomputed from the infinite
    product with orbit-count exponents, truncated at degree N."""
    ctx = ctx or build_context(k, N)
    if ctx.N < N:
        raise ValueError(f"context truncation {ctx.N} is below requested {N}")
    r = ctx.r_series().truncate(N)
    log_sum = GradedSeries.zero(k, N)
    for d in range(1, N + 1):
        log_sum = log_sum.add(r.adams(d).scale(phi(d)))
    return _extract_tables(log_sum.plain_exp())


def Uprime_poly_product_oracle(
    k: int, N: int, ctx: MasterContext | None = None
) -> dict[tuple[int, MultiPartition], PolyQU]:
    """Twisted-form unipotent multiplicities from the three-part log form
    of the twisted infinite product, converted by the explicit sign."""
    ctx = ctx or build_context(k, N)
    if ctx.N < N:
        raise ValueError(f"context truncation {ctx.N} is below requested {N}")
    r = ctx.r_series().truncate(N)
    r_alt = _signed_neg_q(r)
    log_sum = GradedSeries.zero(k, N)
    for d in range(1, N + 1):
        log_sum = log_sum.add(r_alt.adams(d).scale(phi_prime(d)))
    for d in range(1, N // 2 + 1):
        corr = r.adams(2 * d).sub(r_alt.adams(2 * d))
        log_sum = log_sum.add(corr.scale(phi_prime(2 * d)))
    raw = _extract_tables(log_sum.plain_exp())
    out = {}
    for (n, key), p in raw.items():
        sd = d_mu(key)
        sign = sd.sign_uprime * (-1) ** (n + 1)
        out[(n, key)] = p.scale(sign)
    return out


def T_poly_product_oracle(
    k: int, N: int, ctx: MasterContext | None = None
) -> dict[tuple[int, MultiPartition], PolyQU]:
    """Two-variable interpolation polynomials recomputed from the
    u-deformed infinite product."""
    ctx = ctx or build_context(k, N)
    if ctx.N < N:
        raise ValueError(f"context truncation {ctx.N} is below requested {N}")
    r = ctx.r_series().truncate(N)
    log_sum = GradedSeries.zero(k, N)
    for d in range(1, N + 1):
        log_sum = log_sum.add(r.adams(d).scale(phi_u(d)))
    raw = _extract_tables(log_sum.plain_exp())
    return {key: _div_u(p, key[1]) for key, p in raw.items()}


# verification suite


@dataclass
class VerifyItem:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail: str) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail


@dataclass
class VerifyReport:
    items: list[VerifyItem] = field(default_factory=list)
    audits: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(item.failures == 0 for item in self.items)

    def summary_lines(self) -> list[str]:
        lines = []
        for item in self.items:
            status = "ok" if item.failures == 0 else "FAIL"
            line = f"{status:4} {item.name}: {item.cases} cases, {item.failures} failures"
            if item.first_failure:
                line += f" (first: {item.first_failure})"
            lines.append(line)
        for note in self.audits:
            lines.append(f"note {note}")
        total = sum(i.failures for i in self.items)
        lines.append(f"{len(self.items)} identity families, {total} failures")
        return lines

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "items": [
                {
                    "name": i.name,
                    "cases": i.cases,
                    "failures": i.failures,
                    "first_failure": i.first_failure,
                }
                for i in self.items
            ],
            "audits": list(self.audits),
        }


def _multipartitions(k: int, n: int):
    parts = enumerate_partitions(n)

    def rec(i: int, acc: tuple):
        if i == k:
            yield acc
            return
        for lam in parts:
            yield from rec(i + 1, acc + (lam,))

    yield from rec(0, ())


def _mu_text(mu: MultiPartition) -> str:
    return ",".join(partition_to_text(c) for c in mu)


def verify_suite(ctx: MasterContext, nmax: int | None = None) -> VerifyReport:
    """Check every interpolation identity for all multipartitions up to
    nmax; failures come back as data, never exceptions."""
    nmax = ctx.N if nmax is None else min(nmax, ctx.N)
    report = VerifyReport()
    at_zero = VerifyItem("tau-at-0-matches-generic")
    at_one = VerifyItem("tau-at-1-matches-split-unipotent")
    at_minus = VerifyItem("tau-at-minus-1-matches-twisted-unipotent")
    top_u = VerifyItem("top-u-coefficient-is-kronecker")
    nonneg = VerifyItem("tau-coefficients-nonnegative")
    sign_consistency = VerifyItem("twisted-generic-sign-consistency")
    oracle = VerifyItem("product-oracle-agreement")
    report.items = [at_zero, at_one, at_minus, top_u, nonneg, sign_consistency, oracle]

    u_oracle = U_poly_product_oracle(ctx.k, nmax, ctx)
    up_oracle = Uprime_poly_product_oracle(ctx.k, nmax, ctx)

    for n in range(1, nmax + 1):
        taus = ctx.tau_schur(n)
        for mu in _multipartitions(ctx.k, n):
            t = taus.get(mu, PolyQU())
            text = _mu_text(mu)

            v = V_poly(ctx, mu)
            at_zero.record(t.subst(u=PolyQU()) == v, f"{text}: tau(0,q) != V")

            u_val = U_poly(ctx, mu)
            at_one.record(t.subst(u=ONE) == u_val, f"{text}: tau(1,q) != U")

            sd = d_mu(mu)
            up_val = Uprime_poly(ctx, mu)
            expect = t.subst(q=-Q, u=MINUS_ONE).scale(sd.sign_uprime)
            at_minus.record(expect == up_val, f"{text}: signed tau(-1,-q) != U'")

            kron = kronecker(mu)
            top = t.coeff_of_u(n - 1).subst(u=ONE) if n >= 1 else t
            top_u.record(
                top == PolyQU.const(kron),
                f"{text}: [u^{n-1}] tau = {top}, kronecker = {kron}",
            )

            bad = [c for c in t.terms.values() if c < 0]
            nonneg.record(not bad, f"{text}: negative tau coefficient in {t}")

            vp_direct = v.subst(q=-Q).scale(sd.sign_vprime)
            vp_general = Vprime_poly(ctx, mu)
            sign_consistency.record(
                vp_direct == vp_general,
                f"{text}: multipartition and multitype twisted signs disagree",
            )

            o_u = u_oracle.get((n, mu), PolyQU())
            oracle.record(o_u == u_val, f"{text}: product oracle U mismatch")
            o_up = up_oracle.get((n, mu), PolyQU())
            oracle.record(o_up == up_val, f"{text}: product oracle U' mismatch")

            if not up_val.is_zero():
                _, lead = up_val.leading()
                if lead < 0:
                    report.audits.append(
                        f"negative leading coefficient in U' at {text}: {up_val}"
                    )
            if not vp_general.is_zero():
                _, lead = vp_general.leading()
                if lead < 0:
                    report.audits.append(
                        f"negative leading coefficient in V' at {text}: {vp_general}"
                    )
    return report


# disk cache


def cache_path(cache_dir: str, k: int, n: int) -> str:
    return os.path.join(cache_dir, f"psi_k{k}_n{n}.json")


def save_cache(cache_dir: str, k: int, n: int, table: dict[MultiPartition, PolyQU]) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    entries = []
    for mu in sorted(table):
        entries.append(
            {
                "mu": [partition_to_text(c) for c in mu],
                "poly": poly_to_json(table[mu]),
            }
        )
    payload = {"version": CACHE_VERSION, "k": k, "n": n, "entries": entries}
    path = cache_path(cache_dir, k, n)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, separators=(",", ":"), sort_keys=False)
        fh.write("\n")
    os.replace(tmp, path)
    return path


def load_cache(cache_dir: str, k: int, n: int) -> dict[MultiPartition, PolyQU] | None:
    path = cache_path(cache_dir, k, n)
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if (
        not isinstance(payload, dict)
        or payload.get("version") != CACHE_VERSION
        or payload.get("k") != k
        or payload.get("n") != n
    ):
        return None
    table: dict[MultiPartition, PolyQU] = {}
    try:
        for entry in payload["entries"]:
            mu = tuple(parse_partition(t) for t in entry["mu"])
            table[mu] = poly_from_json(entry["poly"])
    except (KeyError, TypeError, ValueError):
        return None
    return table


def clear_cache(cache_dir: str, k: int | None = None) -> list[str]:
    """Remove cache files, optionally only those for one alphabet count."""
    removed = []
    if not os.path.isdir(cache_dir):
        return removed
    prefix = "psi_" if k is None else f"psi_k{k}_"
    for name in sorted(os.listdir(cache_dir)):
        if name.startswith(prefix) and name.endswith(".json"):
            path = os.path.join(cache_dir, name)
            os.remove(path)
            removed.append(path)
    return removed
