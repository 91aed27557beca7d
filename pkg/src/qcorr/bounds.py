"""Mutually unbiased bases and limits on the total extractable record
information.

iValues[m] is the record mutual information when Alice measures her m-th
MUB against one fixed measurement on Bob; their sum obeys dimension- and
purity-dependent ceilings, which this module evaluates and checks.  The
two-basis ceiling applies to every pair of bases, so its flag compares the
worst pair sum (for two bases that is the total itself).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DensityMatrix,
    UnsupportedDimensionError,
    partial_trace,
    purity,
    shannon_entropy,
)
from .measures import Povm, ProjectiveBasis, classical_mutual_info, joint_distribution

BOUND_SLACK = 1e-9


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class MubFamily:
    """Pairwise mutually unbiased bases on d levels."""

    dim: int
    bases: tuple[ProjectiveBasis, ...]

    @property
    def count(self) -> int:
        return len(self.bases)


def mub_family(d: int, count: int) -> MubFamily:
    """Construct `count` pairwise unbiased bases on d levels.

    Supported: d = 2 (up to 3 bases, the Pauli eigenbases) and odd prime d
    (up to d + 1 bases: computational plus the quadratic-phase bases).
    Other dimensions raise UnsupportedDimensionError.
    """
    if d == 2:
        max_count = 3
    elif d > 2 and _is_prime(d):
        max_count = d + 1
    else:
        raise UnsupportedDimensionError(
            f"mub construction supports d = 2 or odd prime d, got {d}"
        )
    if not 1 <= count <= max_count:
        raise UnsupportedDimensionError(
            f"d = {d} supports between 1 and {max_count} bases, got {count}"
        )

    mats: list[np.ndarray] = [np.eye(d, dtype=np.complex128)]
    if d == 2:
        mats.append(np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2))
        mats.append(np.array([[1, 1], [1j, -1j]], dtype=np.complex128) / np.sqrt(2))
    else:
        omega = np.exp(2j * np.pi / d)
        k = np.arange(d)
        for m in range(d):
            # basis m, column j: entries omega^(m k^2 + j k) / sqrt(d)
            phase = (m * (k**2)[:, None] + k[:, None] * k[None, :]) % d
            mats.append(omega ** phase.astype(np.complex128) / np.sqrt(d))
    mats = mats[:count]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            overlap = np.abs(mats[i].conj().T @ mats[j]) ** 2
            if np.max(np.abs(overlap - 1 / d)) > 1e-12:
                raise RuntimeError(f"bases {i},{j} for d={d} are not unbiased")
    return MubFamily(dim=d, bases=tuple(ProjectiveBasis(m) for m in mats))


def two_mub_bound(dim_a: int) -> float:
    """Ceiling on the record mi extracted with two unbiased bases."""
    return float(np.log2(dim_a))


def mub_total_bound(dim_a: int, count: int) -> tuple[float, float, int]:
    """Ceilings on the total over `count` unbiased bases.

    Returns (refined, half, k): the floor-k refinement, the weaker
    count/2 * log2(d) form, and the integer k used by the refinement.  The
    refinement is the stronger of the two once count exceeds sqrt(d) + 1.
    """
    d, m = dim_a, count
    k = int(np.floor(m * d / (d + m - 1)))
    refined = m * np.log2(d / (k + 1)) + k * ((k + 1) * (d + m - 1) / d - m) * np.log2(
        1 + 1 / k
    )
    half = 0.5 * m * np.log2(d)
    return float(refined), float(half), k


def purity_total_bound(rho_a: DensityMatrix | np.ndarray, dim_a: int, count: int) -> float:
    """Purity-dependent ceiling on the total record mi over a full set of
    unbiased bases (count = 3 for d = 2, count = d + 1 for odd prime d)."""
    tr2 = purity(rho_a)
    if dim_a == 2 and count == 3:
        radius = np.sqrt(max(0.0, (2 * tr2 - 1) / 3))
        p = (1 + radius) / 2
        h = shannon_entropy(np.array([p, 1 - p]))
        return float(3 * h - 2)
    if _is_prime(dim_a) and dim_a % 2 == 1 and count == dim_a + 1:
        d = dim_a
        lead = -(d - 1) * (d * tr2 - 1) * np.log2(d - 1) / (d * (d - 2))
        return float(lead + (d + 1) * np.log2(2 * d / (d + 1)))
    raise UnsupportedDimensionError(
        f"purity bound needs (d=2, count=3) or (odd prime d, count=d+1); "
        f"got d={dim_a}, count={count}"
    )


def state_independent_bound(dim_a: int) -> tuple[float, float]:
    """State-independent ceiling for a full unbiased-basis set, plus the
    strict cap dim_a that the total can never reach."""
    d = dim_a
    if d == 2:
        value = d + 1 + (d / 2 + 1) * np.log2(d / (d + 2))
    elif _is_prime(d) and d % 2 == 1:
        value = (d + 1) * np.log2(2 * d / (d + 1))
    else:
        raise UnsupportedDimensionError(
            f"state-independent bound supports d = 2 or odd prime d, got {d}"
        )
    return float(value), float(d)


def entropic_sum_bound(dim_a: int, count: int) -> float:
    """Lower bound on the summed outcome entropies over `count` unbiased
    bases: the stronger of the floor-k form and (count/2) log2(d)."""
    d, m = dim_a, count
    k = int(np.floor(m * d / (d + m - 1)))
    strong = m * np.log2(k + 1) - k * ((k + 1) * (d + m - 1) / d - m) * np.log2(1 + 1 / k)
    return float(max(strong, 0.5 * m * np.log2(d)))


def entropic_sum(rho_a: DensityMatrix | np.ndarray, mubs: MubFamily) -> float:
    """Summed Shannon entropies of the outcome distributions of each basis
    on a single-system state; raises if the uncertainty floor is violated
    (which would indicate a numerical bug, not physics)."""
    m = rho_a.mat if isinstance(rho_a, DensityMatrix) else np.asarray(rho_a)
    total = 0.0
    for basis in mubs.bases:
        u = basis.vectors
        probs = np.einsum("ai,ab,bi->i", u.conj(), m, u).real
        total += shannon_entropy(np.clip(probs, 0.0, None))
    floor = entropic_sum_bound(mubs.dim, mubs.count)
    if total < floor - BOUND_SLACK:
        raise RuntimeError(
            f"entropy sum {total:.12f} below uncertainty floor {floor:.12f}"
        )
    return float(total)


@dataclass(frozen=True)
class BoundReport:
    """Total record information over a MUB family versus its ceilings.

    bounds/satisfied are keyed by: two_basis (checked against the worst
    pair sum), total_refined, total_half, purity (only for full sets),
    state_independent and strict_cap (checked against i_total).
    """

    dim_a: int
    count: int
    i_values: tuple[float, ...]
    i_total: float
    max_pair_sum: float
    bounds: dict
    satisfied: dict

    def rows(self) -> list[dict]:
        out = []
        for name, limit in self.bounds.items():
            observed = self.max_pair_sum if name == "two_basis" else self.i_total
            out.append(
                {
                    "bound": name,
                    "observed": observed,
                    "limit": limit,
                    "satisfied": self.satisfied[name],
                }
            )
        return out


def mub_information_report(
    rho: DensityMatrix, mubs: MubFamily, bob_povm: Povm
) -> BoundReport:
    """Measure each of Alice's unbiased bases against one fixed Bob
    measurement and compare the total against every applicable ceiling."""
    if mubs.dim != rho.dim_a:
        raise UnsupportedDimensionError(
            f"mub dimension {mubs.dim} does not match dim_a {rho.dim_a}"
        )
    i_values = []
    for basis in mubs.bases:
        jd = joint_distribution(rho, basis, bob_povm)
        i_values.append(classical_mutual_info(jd))
    i_values = tuple(i_values)
    i_total = float(sum(i_values))
    if mubs.count >= 2:
        pair = max(
            i_values[i] + i_values[j]
            for i in range(mubs.count)
            for j in range(i + 1, mubs.count)
        )
    else:
        pair = i_values[0]
    d = rho.dim_a
    refined, half, _ = mub_total_bound(d, mubs.count)
    bounds = {
        "two_basis": two_mub_bound(d),
        "total_refined": refined,
        "total_half": half,
    }
    full_set = (d == 2 and mubs.count == 3) or (d > 2 and mubs.count == d + 1)
    if full_set:
        rho_a = partial_trace(rho, "A")
        bounds["purity"] = purity_total_bound(rho_a, d, mubs.count)
        value, cap = state_independent_bound(d)
        bounds["state_independent"] = value
        bounds["strict_cap"] = cap
    satisfied = {}
    for name, limit in bounds.items():
        observed = pair if name == "two_basis" else i_total
        satisfied[name] = bool(observed <= limit + BOUND_SLACK)
    return BoundReport(
        dim_a=d,
        count=mubs.count,
        i_values=i_values,
        i_total=i_total,
        max_pair_sum=float(pair),
        bounds=bounds,
        satisfied=satisfied,
    )
