"""Partition-family predicates, the weight-preserving injections, and drivers.

Every map here transforms a partition of n into another partition of n.  The
forward maps are defined on frequency-congruence families of t-regular
partitions; inverse maps are defined on the image characterization only, so
the verification driver calls an inverse exclusively on values the forward
map just produced.

:func:`verify_injection` certifies, for one (map, t, n) cell, that the map is
well defined into its codomain, weight preserving, collision free, inverted
by its declared inverse, and that the relevant subset classifications
partition / stay disjoint.  Failures become report entries, never exceptions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .partitions import Partition, partitions_of, t_regular_partitions

MAP_IDS = ("phi1", "phi2", "phi3", "phi4", "phi", "gamma", "epsilon", "tau")

# smallest n at which each map is defined / verified; absent means 0
MAP_MIN_N = {"epsilon": 7, "tau": 4}


class ResidualClassError(ValueError):
    """Raised when the combined map is applied to the uncovered fifth class."""


@dataclass(frozen=True)
class SubsetLabel:
    """Classification of a partition inside one of the named families.

    ``index`` is the subset number where the family is subdivided (O: 1..5,
    R: 1..4, A and S: 1..3); ``None`` marks a family member outside the
    indexed subsets (possible for R and S, whose listed subsets do not cover
    the family).
    """

    family: str
    index: int | None


@dataclass(frozen=True)
class InjectionCase:
    """Which case of a multi-case map applies to a given input."""

    map_id: str
    case_tag: int | None


@dataclass(frozen=True)
class Violation:
    input: str
    kind: str
    detail: str


@dataclass
class VerificationReport:
    map_id: str
    t: int
    n: int
    domain_size: int
    image_size: int
    violations: list[Violation] = field(default_factory=list)
    passed: bool = False

    def to_dict(self) -> dict:
        return {
            "map": self.map_id,
            "t": self.t,
            "n": self.n,
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "passed": self.passed,
            "violations": [
                {"input": v.input, "kind": v.kind, "detail": v.detail}
                for v in self.violations
            ],
        }


# ---------------------------------------------------------------------------
# family membership predicates
# ---------------------------------------------------------------------------


def in_o(p: Partition, t: int) -> bool:
    """t-regular with an odd number of 1s."""
    return p.is_t_regular(t) and p.frequency(1) % 2 == 1


def in_r(p: Partition, t: int) -> bool:
    """No part is a multiple of t other than 2t, and the part 2t+1 appears."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return (
        all(v % t != 0 or v == 2 * t for v, _ in p.items())
        and p.frequency(2 * t + 1) >= 1
    )


def in_a(p: Partition, t: int) -> bool:
    """t-regular, no part 3, and the number of 1s is -2 mod 2t."""
    return (
        p.is_t_regular(t)
        and p.frequency(3) == 0
        and p.frequency(1) % (2 * t) == 2 * t - 2
    )


def in_s(p: Partition, t: int) -> bool:
    """t-regular with the number of 1s congruent to 2 or 4 mod 6."""
    return p.is_t_regular(t) and p.frequency(1) % 6 in (2, 4)


def in_b(p: Partition, t: int) -> bool:
    """t-regular with the number of 1s congruent to 2 or 5 mod 6."""
    return p.is_t_regular(t) and p.frequency(1) % 6 in (2, 5)


def in_c(p: Partition, t: int) -> bool:
    """t-regular with the number of 1s congruent to 3 mod 6."""
    return p.is_t_regular(t) and p.frequency(1) % 6 == 3


def in_d1(p: Partition) -> bool:
    """2-regular with the number of 1s congruent to 4 mod 12."""
    return p.is_t_regular(2) and p.frequency(1) % 12 == 4


def in_d2(p: Partition) -> bool:
    """2-regular with the number of 1s congruent to 6 mod 12."""
    return p.is_t_regular(2) and p.frequency(1) % 12 == 6


# ---------------------------------------------------------------------------
# subset classifications
# ---------------------------------------------------------------------------


def _one_mod_ks(p: Partition, t: int) -> list[int]:
    """All k >= 1 such that 2kt+1 appears as a part."""
    step = 2 * t
    return sorted((v - 1) // step for v, _ in p.items() if v > 1 and v % step == 1)


def o_subset_memberships(p: Partition, t: int) -> list[int]:
    """Indices of the five O-subsets whose defining condition p satisfies."""
    if not in_o(p, t):
        return []
    ks = _one_mod_ks(p, t)
    out = []
    if ks:
        out.append(1)
    clean = not ks
    big = p.largest() >= 8 * t * t + 1
    heavy = any(v >= 2 and m >= 6 * t + 1 for v, m in p.items())
    f1 = p.frequency(1)
    if clean and big:
        out.append(2)
    if clean and not big and heavy:
        out.append(3)
    if clean and not big and not heavy and f1 >= 12 * t + 3:
        out.append(4)
    if clean and not big and not heavy and f1 <= 12 * t + 2:
        out.append(5)
    return out


def classify_o(p: Partition, t: int) -> SubsetLabel | None:
    """Place p into exactly one of the five O-subsets, or None outside the family."""
    ms = o_subset_memberships(p, t)
    if not ms:
        return None
    return SubsetLabel("O", ms[0])


def r_subset_memberships(p: Partition, t: int) -> list[int]:
    """Indices of the four listed R-subsets that p belongs to (possibly none)."""
    if not in_r(p, t):
        return []
    f1 = p.frequency(1)
    out = []
    if f1 % 2 == 1:
        out.append(1)
        return out
    ks = set(_one_mod_ks(p, t))
    f = p.frequency
    if f(4 * t + 1) + f(2 * t + 1) >= 2 and ks <= {1, 2}:
        out.append(2)
    if f(6 * t + 1) > 0 and ks <= {1, 3}:
        out.append(3)
    if f(8 * t + 1) > 0 and ks <= {1, 4}:
        out.append(4)
    return out


def classify_r(p: Partition, t: int) -> SubsetLabel | None:
    """Label within the R family; index None for members outside the four subsets."""
    if not in_r(p, t):
        return None
    ms = r_subset_memberships(p, t)
    return SubsetLabel("R", ms[0] if ms else None)


def a_subset_index(p: Partition, t: int) -> int | None:
    if not in_a(p, t):
        return None
    return {2: 1, 4: 2, 0: 3}[p.frequency(1) % 6]


def classify_a(p: Partition, t: int) -> SubsetLabel | None:
    idx = a_subset_index(p, t)
    return SubsetLabel("A", idx) if idx is not None else None


def s_subset_memberships(p: Partition, t: int) -> list[int]:
    if not in_s(p, t):
        return []
    f1 = p.frequency(1)
    out = []
    if f1 % 6 == 2:
        out.append(1)
    if f1 % 6 == 4 and f1 % (2 * t) == (2 * t - 2):
        out.append(2)
    if f1 % 6 == 4 and f1 % (2 * t) == (-4) % (2 * t):
        out.append(3)
    return out


def classify_s(p: Partition, t: int) -> SubsetLabel | None:
    if not in_s(p, t):
        return None
    ms = s_subset_memberships(p, t)
    return SubsetLabel("S", ms[0] if ms else None)


# ---------------------------------------------------------------------------
# family enumerators
# ---------------------------------------------------------------------------


def o_members(n: int, t: int) -> Iterator[Partition]:
    return (p for p in t_regular_partitions(n, t) if p.frequency(1) % 2 == 1)


def r_members(n: int, t: int) -> Iterator[Partition]:
    if t < 2:
        raise ValueError("t must be at least 2")
    base = partitions_of(n, lambda v: v % t != 0 or v == 2 * t)
    return (p for p in base if p.frequency(2 * t + 1) >= 1)


def a_members(n: int, t: int) -> Iterator[Partition]:
    return (p for p in t_regular_partitions(n, t) if in_a(p, t))


def s_members(n: int, t: int) -> Iterator[Partition]:
    return (p for p in t_regular_partitions(n, t) if p.frequency(1) % 6 in (2, 4))


def b_members(n: int, t: int) -> Iterator[Partition]:
    return (p for p in t_regular_partitions(n, t) if p.frequency(1) % 6 in (2, 5))


def c_members(n: int, t: int) -> Iterator[Partition]:
    return (p for p in t_regular_partitions(n, t) if p.frequency(1) % 6 == 3)


def d1_members(n: int) -> Iterator[Partition]:
    return (p for p in t_regular_partitions(n, 2) if p.frequency(1) % 12 == 4)


def d2_members(n: int) -> Iterator[Partition]:
    return (p for p in t_regular_partitions(n, 2) if p.frequency(1) % 12 == 6)


# ---------------------------------------------------------------------------
# the maps
# ---------------------------------------------------------------------------


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def phi1(p: Partition, t: int, validate: bool = True) -> Partition:
    """Trade the smallest part of shape 2kt+1 for one 2t+1 and (k-1) parts 2t."""
    if validate:
        label = classify_o(p, t)
        _require(label is not None and label.index == 1, f"{p} is not a class-1 input")
    ks = _one_mod_ks(p, t)
    _require(bool(ks), f"{p} has no part of shape 2kt+1")
    k = ks[0]
    added = Partition.from_parts([2 * t + 1] + [2 * t] * (k - 1))
    return p.diff(Partition.of(2 * k * t + 1)).union(added)


def phi1_inv(p: Partition, t: int, validate: bool = True) -> Partition:
    """Inverse of phi1 on its image: k is recovered as 1 + (number of 2t parts)."""
    if validate:
        label = classify_r(p, t)
        _require(label is not None and label.index == 1, f"{p} is not a class-1 image")
    m = p.frequency(2 * t)
    k = 1 + m
    removed = Partition.from_parts([2 * t + 1] + [2 * t] * m)
    return p.diff(removed).union(Partition.of(2 * k * t + 1))


def _phi2_xy(lam1: int, t: int) -> tuple[int, int]:
    """Unique (x, y) with lam1 - 1 = x(2t+1) + y(4t+1), x >= 0, 0 <= y <= 2t.

    y is solved by modular inversion: 4t+1 is -1 modulo 2t+1, so
    y = (1 - lam1) mod (2t+1).  x >= 0 is guaranteed once lam1 > 8t^2.
    """
    y = (1 - lam1) % (2 * t + 1)
    rem = lam1 - 1 - y * (4 * t + 1)
    if rem < 0 or rem % (2 * t + 1):
        raise ArithmeticError(f"no valid split of {lam1 - 1} for t={t}")
    return rem // (2 * t + 1), y


def phi2(p: Partition, t: int, validate: bool = True) -> Partition:
    """Break the largest part into parts 4t+1 and 2t+1 (plus a fixed tail)."""
    if validate:
        label = classify_o(p, t)
        _require(label is not None and label.index == 2, f"{p} is not a class-2 input")
    lam1 = p.largest()
    x, y = _phi2_xy(lam1, t)
    if x:
        added = [4 * t + 1] * y + [2 * t + 1] * x + [1]
    else:
        added = [4 * t + 1] * (y - 1) + [2 * t + 1, 2 * t, 1]
    return p.diff(Partition.of(lam1)).union(Partition.from_parts(added))


def phi2_case(p: Partition, t: int) -> int:
    x, _ = _phi2_xy(p.largest(), t)
    return 1 if x else 2


def psi2(p: Partition, t: int, validate: bool = True) -> Partition:
    """Inverse of phi2 on its image: reassemble the removed largest part."""
    f = p.frequency
    if validate:
        label = classify_r(p, t)
        _require(label is not None and label.index == 2, f"{p} is not a class-2 image")
        _require(f(2 * t) <= 1, f"{p} carries more than one part 2t")
        _require(f(1) >= 1, f"{p} has no part 1")
    lam1 = 1 + 2 * t * f(2 * t) + (2 * t + 1) * f(2 * t + 1) + (4 * t + 1) * f(4 * t + 1)
    removed = Partition.from_parts(
        [4 * t + 1] * f(4 * t + 1) + [2 * t + 1] * f(2 * t + 1) + [2 * t] * f(2 * t) + [1]
    )
    return p.diff(removed).union(Partition.of(lam1))


def phi3(p: Partition, t: int, validate: bool = True) -> Partition:
    """Dissolve the smallest heavily repeated part value into a fixed pattern."""
    if validate:
        label = classify_o(p, t)
        _require(label is not None and label.index == 3, f"{p} is not a class-3 input")
    heavy = [v for v, m in p.items() if v >= 2 and m >= 6 * t + 1]
    _require(bool(heavy), f"{p} has no part repeated at least {6 * t + 1} times")
    l = min(heavy)
    removed = Partition.from_parts([l] * (6 * t + 1))
    added = Partition.from_parts(
        [6 * t + 1] * (l - 1) + [2 * t + 1] * 2 + [1] * (2 * t - 1)
    )
    return p.diff(removed).union(added)


def psi3(p: Partition, t: int, validate: bool = True) -> Partition:
    """Inverse of phi3 on its image: the repeated value is 1 + (count of 6t+1 parts)."""
    f = p.frequency
    if validate:
        label = classify_r(p, t)
        _require(label is not None and label.index == 3, f"{p} is not a class-3 image")
        _require(f(2 * t + 1) == 2, f"{p} must carry the part 2t+1 exactly twice")
        _require(f(1) >= 2 * t - 1, f"{p} needs at least {2 * t - 1} parts 1")
    m = f(6 * t + 1)
    removed = Partition.from_parts(
        [6 * t + 1] * m + [2 * t + 1] * 2 + [1] * (2 * t - 1)
    )
    return p.diff(removed).union(Partition.from_parts([m + 1] * (6 * t + 1)))


def phi4(p: Partition, t: int, validate: bool = True) -> Partition:
    """Convert 12t+3 ones into the parts 8t+1, 2t+1, 2t+1."""
    if validate:
        label = classify_o(p, t)
        _require(label is not None and label.index == 4, f"{p} is not a class-4 input")
    removed = Partition.from_parts([1] * (12 * t + 3))
    added = Partition.from_parts([8 * t + 1] + [2 * t + 1] * 2)
    return p.diff(removed).union(added)


def psi4(p: Partition, t: int, validate: bool = True) -> Partition:
    """Inverse of phi4 on its image."""
    if validate:
        label = classify_r(p, t)
        _require(label is not None and label.index == 4, f"{p} is not a class-4 image")
        _require(p.frequency(2 * t + 1) == 2, f"{p} must carry the part 2t+1 exactly twice")
        _require(p.frequency(8 * t + 1) == 1, f"{p} must carry the part 8t+1 exactly once")
    removed = Partition.from_parts([8 * t + 1] + [2 * t + 1] * 2)
    return p.diff(removed).union(Partition.from_parts([1] * (12 * t + 3)))


_PHI_FORWARD: dict[int, Callable[..., Partition]] = {1: phi1, 2: phi2, 3: phi3, 4: phi4}
_PHI_INVERSE: dict[int, Callable[..., Partition]] = {1: phi1_inv, 2: psi2, 3: psi3, 4: psi4}


def phi_total(p: Partition, t: int) -> Partition:
    """Dispatch to phi1..phi4 by O-subset; the fifth class is not covered."""
    label = classify_o(p, t)
    if label is None:
        raise ValueError(f"{p} is not t-regular with an odd number of 1s")
    if label.index == 5:
        raise ResidualClassError(
            f"{p} falls in the residual class the combined map does not cover"
        )
    return _PHI_FORWARD[label.index](p, t, validate=False)


def o5_weight_cap(t: int) -> int:
    """Exact largest weight a residual-class (index 5) partition can have.

    Parts are at most 8t^2, avoid multiples of t and values 1 mod 2t, carry
    multiplicity at most 6t, and at most 12t+1 ones (odd and <= 12t+2).
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    m = 8 * t * t
    sum_all = m * (m + 1) // 2 - 1
    sum_mult_t = t * (8 * t) * (8 * t + 1) // 2
    sum_one_mod = (4 * t - 1) * (4 * t * t + 1)
    return 6 * t * (sum_all - sum_mult_t - sum_one_mod) + 12 * t + 1


def o5_weight_bound(t: int) -> int:
    """Polynomial weight bound above which the residual class is empty.

    Returns 192t^5 - 192t^4 - 24t^3 + 24t^2 + 6t + 1 and checks that it
    dominates the exact cap from :func:`o5_weight_cap`, so emptiness beyond
    the polynomial is safe.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    bound = 192 * t**5 - 192 * t**4 - 24 * t**3 + 24 * t**2 + 6 * t + 1
    cap = o5_weight_cap(t)
    if bound < cap:
        raise RuntimeError(f"polynomial bound {bound} fails to dominate cap {cap}")
    return bound


def _gamma_apply(p: Partition, idx: int) -> Partition:
    if idx in (1, 2):
        return p
    return p.diff(Partition.of(1, 1)).union(Partition.of(2))


def gamma(p: Partition, t: int, validate: bool = True) -> Partition:
    """Identity on the first two A-subsets; trade two 1s for a 2 on the third.

    The image stays t-regular only for t >= 4; smaller t is accepted with a
    warning so the failure mode can be observed directly.
    """
    if t < 4:
        warnings.warn(
            f"gamma images need not stay {t}-regular for t < 4", RuntimeWarning
        )
    label = classify_a(p, t)
    if validate:
        _require(label is not None, f"{p} is not in the map's domain")
    return _gamma_apply(p, label.index if label else 3)


def delta3(p: Partition, t: int, validate: bool = True) -> Partition:
    """Inverse of the third gamma case: trade a 2 back for two 1s."""
    if validate:
        label = classify_s(p, t)
        _require(label is not None and label.index == 3, f"{p} is not a class-3 image")
        _require(p.frequency(2) >= 1, f"{p} has no part 2")
        _require(p.frequency(3) == 0, f"{p} must avoid the part 3")
    return p.diff(Partition.of(2)).union(Partition.of(1, 1))


def epsilon(p: Partition, validate: bool = True) -> Partition:
    """t=2 map: grow the largest part by 2 at the cost of two 1s.

    The all-ones column (largest part 1) maps to the two-equal-parts pattern
    instead; the two case images are disjoint since only the second produces
    equal top parts.
    """
    if validate:
        _require(in_d2(p), f"{p} is not 2-regular with 1-count 6 mod 12")
        _require(p.weight >= 7, "the map is built for n >= 7")
    lam1 = p.largest()
    if lam1 >= 3:
        return p.diff(Partition.of(lam1, 1, 1)).union(Partition.of(lam1 + 2))
    k = (p.weight - 6) // 12
    _require(k >= 1, f"{p} is below the smallest all-ones input")
    return Partition.from_parts([6 * k + 1] * 2 + [1] * 4)


def epsilon_case(p: Partition) -> int:
    return 1 if p.largest() >= 3 else 2


def _tau_case4_pattern(n: int, t: int) -> Partition:
    k = (n - 3) // 6
    _require(k >= 1, "the all-ones input must have at least nine parts")
    if t >= 5:
        return Partition.from_parts([3] + [2] * (3 * k - 1) + [1, 1])
    return Partition.from_parts([5] + [2] * (3 * k - 2) + [1, 1])


def tau_case(p: Partition, t: int) -> int:
    if p.frequency(2) >= 1:
        return 1
    lam1 = p.largest()
    if lam1 >= 2 and lam1 % t != t - 1:
        return 2
    if lam1 >= 2:
        return 3
    return 4


def tau(p: Partition, t: int, validate: bool = True) -> Partition:
    """Move the 1-count from 3 mod 6 to 2 or 5 mod 6 by a four-case rewrite."""
    if t < 3:
        raise ValueError("the map needs t >= 3 to keep images t-regular")
    if validate:
        _require(in_c(p, t), f"{p} is not t-regular with 1-count 3 mod 6")
    case = tau_case(p, t)
    lam1 = p.largest()
    if case == 1:
        return p.diff(Partition.of(2)).union(Partition.of(1, 1))
    if case == 2:
        return p.diff(Partition.of(lam1, 1)).union(Partition.of(lam1 + 1))
    if case == 3:
        return p.diff(Partition.of(lam1, 1)).union(Partition.of(lam1 - 1, 2))
    return _tau_case4_pattern(p.weight, t)


def _is_tau_case4_image(p: Partition, t: int) -> bool:
    items = p.items()
    if len(items) != 3 or items[1][0] != 2 or items[2] != (1, 2):
        return False
    top, m = items[0], items[1][1]
    if t >= 5:
        return top == (3, 1) and m >= 2 and m % 3 == 2
    return top == (5, 1) and m >= 1 and m % 3 == 1


def eta(p: Partition, t: int, validate: bool = True) -> Partition:
    """Inverse of tau on its image, dispatched by 1-count residue and 2-parts."""
    if t < 3:
        raise ValueError("the map needs t >= 3")
    f1 = p.frequency(1) % 6
    if validate:
        _require(in_b(p, t), f"{p} is not t-regular with 1-count 2 or 5 mod 6")
    if f1 == 5:
        return p.diff(Partition.of(1, 1)).union(Partition.of(2))
    _require(f1 == 2, f"{p} is outside the image residues")
    if p.frequency(2) == 0:
        lam1 = p.largest()
        _require(lam1 >= 2, f"{p} has no part to shrink")
        return p.diff(Partition.of(lam1)).union(Partition.of(lam1 - 1, 1))
    if _is_tau_case4_image(p, t):
        return Partition.from_parts([1] * p.weight)
    targets = [v for v, _ in p.items() if v % t == t - 2]
    _require(bool(targets), f"{p} has no part -2 mod t to restore")
    v = max(targets)
    return p.diff(Partition.of(v, 2)).union(Partition.of(v + 1, 1))


def case_of(map_id: str, p: Partition, t: int = 2) -> InjectionCase:
    """Case tag of a multi-case map at input p (the map's own dispatch)."""
    if map_id == "phi2":
        return InjectionCase(map_id, phi2_case(p, t))
    if map_id == "epsilon":
        return InjectionCase(map_id, epsilon_case(p))
    if map_id == "tau":
        return InjectionCase(map_id, tau_case(p, t))
    if map_id == "phi":
        label = classify_o(p, t)
        return InjectionCase(map_id, label.index if label else None)
    if map_id == "gamma":
        return InjectionCase(map_id, a_subset_index(p, t))
    raise ValueError(f"{map_id} has no case structure")


# ---------------------------------------------------------------------------
# verification driver
# ---------------------------------------------------------------------------


def verify_injection(map_id: str, t: int, n: int) -> VerificationReport:
    """Certify one (map, t, n) cell exhaustively; see the module docstring.

    Single-threaded; violations are sorted by canonical input text, so
    reports are deterministic.
    """
    if map_id not in MAP_IDS:
        raise ValueError(f"unknown map {map_id!r}")
    if n < MAP_MIN_N.get(map_id, 0):
        raise ValueError(f"{map_id} is verified for n >= {MAP_MIN_N[map_id]}")
    violations: list[Violation] = []

    def violate(p: Partition, kind: str, detail: str) -> None:
        violations.append(Violation(str(p), kind, detail))

    def scan(domain, forward, codomain_ok, inverse_for):
        images: dict[Partition, Partition] = {}
        size = 0
        for lam in domain:
            size += 1
            mu = forward(lam)
            if mu.weight != n:
                violate(lam, "NotInCodomain", f"weight changed to {mu.weight}")
            elif not codomain_ok(lam, mu):
                violate(lam, "NotInCodomain", f"image {mu} outside target subset")
            if mu in images:
                violate(lam, "Collision", f"image {mu} already produced by {images[mu]}")
            else:
                images[mu] = lam
            inverse = inverse_for(lam)
            if inverse is not None:
                back = inverse(mu)
                if back != lam:
                    violate(lam, "InverseMismatch", f"inverse returned {back}")
        return size, len(images)

    if map_id in ("phi1", "phi2", "phi3", "phi4", "phi"):
        wanted = {"phi1": (1,), "phi2": (2,), "phi3": (3,), "phi4": (4,)}.get(
            map_id, (1, 2, 3, 4)
        )
        classified: list[tuple[Partition, int]] = []
        for lam in o_members(n, t):
            ms = o_subset_memberships(lam, t)
            if map_id == "phi":
                if not ms:
                    violate(lam, "ClassificationGap", "no O-subset condition holds")
                    continue
                if len(ms) > 1:
                    violate(lam, "ClassificationOverlap", f"O-subsets {ms} all hold")
                    continue
            if ms and ms[0] in wanted:
                classified.append((lam, ms[0]))
        by_input = dict(classified)
        domain_size, image_size = scan(
            [lam for lam, _ in classified],
            lambda lam: _PHI_FORWARD[by_input[lam]](lam, t, validate=False),
            lambda lam, mu: (
                (label := classify_r(mu, t)) is not None
                and label.index == by_input[lam]
            ),
            lambda lam: (
                lambda mu: _PHI_INVERSE[by_input[lam]](mu, t, validate=False)
            ),
        )
        if map_id == "phi":
            for mu in r_members(n, t):
                ms = r_subset_memberships(mu, t)
                if len(ms) > 1:
                    violate(mu, "ClassificationOverlap", f"R-subsets {ms} all hold")

    elif map_id == "gamma":
        if t < 4:
            warnings.warn(
                f"gamma images need not stay {t}-regular for t < 4", RuntimeWarning
            )
        classified = []
        for lam in a_members(n, t):
            idx = a_subset_index(lam, t)
            if idx is None:
                violate(lam, "ClassificationGap", "no A-subset condition holds")
                continue
            classified.append((lam, idx))
        by_input = dict(classified)
        domain_size, image_size = scan(
            [lam for lam, _ in classified],
            lambda lam: _gamma_apply(lam, by_input[lam]),
            lambda lam, mu: (
                (label := classify_s(mu, t)) is not None
                and label.index == by_input[lam]
            ),
            lambda lam: (
                (lambda mu: delta3(mu, t, validate=False))
                if by_input[lam] == 3
                else (lambda mu: mu)
            ),
        )
        for mu in s_members(n, t):
            ms = s_subset_memberships(mu, t)
            if len(ms) > 1:
                violate(mu, "ClassificationOverlap", f"S-subsets {ms} all hold")

    elif map_id == "epsilon":
        if t != 2:
            raise ValueError("epsilon is a t=2 map")
        domain_size, image_size = scan(
            d2_members(n),
            lambda lam: epsilon(lam, validate=False),
            lambda lam, mu: in_d1(mu),
            lambda lam: None,
        )

    else:  # tau
        if t < 3:
            raise ValueError("tau needs t >= 3")
        domain_size, image_size = scan(
            c_members(n, t),
            lambda lam: tau(lam, t, validate=False),
            lambda lam, mu: in_b(mu, t),
            lambda lam: (lambda mu: eta(mu, t, validate=False)),
        )

    violations.sort(key=lambda v: (v.input, v.kind, v.detail))
    return VerificationReport(
        map_id=map_id,
        t=t,
        n=n,
        domain_size=domain_size,
        image_size=image_size,
        violations=violations,
        passed=not violations and image_size == domain_size,
    )


def verify_injection_range(map_id: str, t: int, n_max: int) -> list[VerificationReport]:
    """Reports for every n from the map's smallest verified n up to n_max."""
    start = MAP_MIN_N.get(map_id, 0)
    return [verify_injection(map_id, t, n) for n in range(start, n_max + 1)]
