"""Exact error distance, deep-hole families and exhaustive censuses.

Every distance here is computed by exhaustive maximum-likelihood decoding
against the full codebook (see :mod:`deephole.search`), so the results are
ground truth rather than decoder output.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Literal

import numpy as np

from . import search
from .dft import deep_hole_shape, idft_poly
from .errors import DegreeOutOfRange, HypothesisViolated, SearchSpaceTooLarge
from .gf import GF
from .poly import Poly, Word, eval_word, lagrange_interpolate
from .rscode import CyclicRSCode, RSCode

Code = RSCode | CyclicRSCode

# distance evaluations (words x codewords) allowed for an exhaustive census
EVALUATION_BUDGET = 10 ** 9


def _vector(code: Code, u: Word | Poly) -> np.ndarray:
    if isinstance(code, CyclicRSCode):
        if isinstance(u, Word):
            u = Poly(code.field, u.entries)
        entries = u.padded(code.n)
    else:
        if not isinstance(u, Word):
            raise TypeError("the evaluation code works on Words")
        entries = u.entries
    return np.array(entries, dtype=code.field.dtype)


def _unvector(code: Code, row) -> Word | Poly:
    if isinstance(code, CyclicRSCode):
        return Poly(code.field, [int(x) for x in row])
    return Word(code.field, [int(x) for x in row])


def _histogram(values) -> dict[str, int]:
    c = Counter(int(v) for v in values)
    return {str(d): c[d] for d in sorted(c)}


@dataclass(frozen=True)
class DistanceReport:
    distance: int
    nearest: Word | Poly
    message_index: int
    degree: int | float
    lower_bound: int
    upper_bound: int
    is_deep_hole: bool
    is_codeword: bool

    def to_dict(self) -> dict:
        return {
            "distance": self.distance,
            "nearest": str(self.nearest),
            "message_index": self.message_index,
            "degree": self.degree if self.degree != float("-inf") else None,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "is_deep_hole": self.is_deep_hole,
            "is_codeword": self.is_codeword,
        }


def error_distances(code: Code, words: np.ndarray, workers: int = 1,
                    force: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised exact distances for a (W, n) array of received words."""
    return search.nearest(code.field, code.basis, words, workers=workers, force=force)


def _eval_degree(code: Code, u: Word | Poly):
    """Degree of the interpolant of the evaluation-domain counterpart of u."""
    if isinstance(code, CyclicRSCode):
        if isinstance(u, Word):
            u = Poly(code.field, u.entries)
        return idft_poly(u).degree
    return lagrange_interpolate(u).degree


def error_distance_exact(code: Code, u: Word | Poly, workers: int = 1,
                         force: bool = False) -> DistanceReport:
    """Minimum distance from u to the code by exhaustive search.

    For the cyclic version u is a polynomial of degree <= q-2 compared
    coefficientwise; its degree bounds use the inverse transform of u.
    Ties go to the smallest message index.
    """
    vec = _vector(code, u)
    dist, idx = error_distances(code, vec[None, :], workers=workers, force=force)
    d, i = int(dist[0]), int(idx[0])
    deg = _eval_degree(code, u)
    upper = code.n - code.k
    lower = code.n - deg if code.k <= deg <= code.n - 1 else 0
    return DistanceReport(
        distance=d,
        nearest=code.codeword(i),
        message_index=i,
        degree=deg,
        lower_bound=lower,
        upper_bound=upper,
        is_deep_hole=d == upper,
        is_codeword=d == 0,
    )


def degree_bounds(code: RSCode, u: Word) -> tuple[int, int]:
    """(n - deg u, n - k); valid for k <= deg u <= n - 1."""
    deg = lagrange_interpolate(u).degree
    if deg < code.k:
        raise DegreeOutOfRange(f"deg u = {deg} < k = {code.k}: u is a codeword")
    return code.n - deg, code.n - code.k


Shape = Literal["MonomialHigh", "MonomialK", "CyclicG1", "CyclicG2"]


@dataclass(frozen=True)
class DeepHoleFamily:
    shape: Shape
    a: int
    tail: Poly

    def __post_init__(self):
        if self.a == 0:
            raise HypothesisViolated("the leading coefficient a must be nonzero")
        if self.shape not in ("MonomialHigh", "MonomialK", "CyclicG1", "CyclicG2"):
            raise ValueError(f"unknown shape {self.shape!r}")


def _check_family(code: Code, family: DeepHoleFamily, allowed):
    if code.q < 4:
        raise HypothesisViolated(f"q = {code.q} < 4")
    if family.shape not in allowed:
        raise ValueError(f"shape {family.shape} is not valid here; use one of {allowed}")
    if family.tail.degree > code.k - 1:
        raise HypothesisViolated(f"tail degree {family.tail.degree} > k - 1")


def deep_hole_interpolant(code: Code, family: DeepHoleFamily) -> Poly:
    e = code.q - 2 if family.shape == "MonomialHigh" else code.k
    return Poly.monomial(code.field, e, family.a) + family.tail


def construct_deep_hole(code: RSCode, family: DeepHoleFamily) -> Word:
    """Evaluation word of a x^(q-2) + f or a x^k + f."""
    _check_family(code, family, ("MonomialHigh", "MonomialK"))
    return eval_word(deep_hole_interpolant(code, family))


def construct_cyclic_deep_hole(code: CyclicRSCode, family: DeepHoleFamily) -> Poly:
    """a g1 + l g or a g2 + l g."""
    _check_family(code, family, ("CyclicG1", "CyclicG2"))
    center = code.g1 if family.shape == "CyclicG1" else code.g2
    return center.scale(family.a) + family.tail * code.g


def count_trivial_deep_holes(code: Code) -> int:
    return (code.q - 1) * code.q ** code.k


def count_family_deep_holes(code: Code) -> int:
    trivial = count_trivial_deep_holes(code)
    return trivial if code.k == code.q - 2 else 2 * trivial


def _shifted(field: GF, codewords: np.ndarray, center: np.ndarray, a: int) -> np.ndarray:
    """codewords + a * center, rowwise."""
    return field.add_table[codewords, field.mul_table[a, center][None, :]]


@dataclass
class VerificationSummary:
    code: dict
    mode: str
    seed: int | None
    families: dict
    checked: int
    failures: list
    histogram: dict
    elapsed: float = dc_field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def to_dict(self) -> dict:
        return {
            "kind": "verification",
            "parameters": {"code": self.code, "mode": self.mode, "seed": self.seed},
            "families": self.families,
            "checked": self.checked,
            "failures": self.failures,
            "histogram": self.histogram,
            "passed": self.passed,
            "timing": {"elapsed_seconds": round(self.elapsed, 6)},
        }


def _family_words(code: Code, centers: dict, mode: str, count: int | None, seed: int | None):
    """Yield (family, a, tail index, words array) batches for the given centers."""
    field = code.field
    q, k = code.q, code.k
    total = q ** k
    if mode == "exhaustive":
        for name, center in centers.items():
            for a in range(1, q):
                for start in range(0, total, search.CHUNK):
                    stop = min(start + search.CHUNK, total)
                    block = search.span_block(field, code.basis, start, stop)
                    yield name, np.full(stop - start, a), np.arange(start, stop), _shifted(field, block, center, a)
    elif mode == "sample":
        if count is None or seed is None:
            raise ValueError("sample mode needs both count and seed")
        rng = np.random.default_rng(seed)
        names = list(centers)
        fam = rng.integers(0, len(names), size=count)
        avals = rng.integers(1, q, size=count)
        tails = rng.integers(0, total, size=count)
        for j, name in enumerate(names):
            sel = np.flatnonzero(fam == j)
            if not len(sel):
                continue
            cw = np.concatenate([search.span_block(field, code.basis, int(t), int(t) + 1) for t in tails[sel]])
            center = centers[name]
            words = field.add_table[cw, field.mul_table[avals[sel][:, None], center[None, :]]]
            yield name, avals[sel], tails[sel], words
    else:
        raise ValueError(f"unknown mode {mode!r}")


def _verify_families(code: Code, centers: dict, mode: str, count, seed, workers, force,
                     budget: int) -> VerificationSummary:
    t0 = time.perf_counter()
    q, k = code.q, code.k
    search.check_cap(q, k, force)
    if mode == "exhaustive":
        evals = len(centers) * (q - 1) * q ** k * q ** k
        if evals > budget and not force:
            raise SearchSpaceTooLarge(f"{evals} distance evaluations exceed the budget {budget}")
    target = code.n - k
    families = {name: {"checked": 0, "failures": 0} for name in centers}
    failures = []
    hist: Counter = Counter()
    for name, avals, tails, words in _family_words(code, centers, mode, count, seed):
        dist, _ = error_distances(code, words, workers=workers, force=force)
        families[name]["checked"] += len(dist)
        hist.update(int(x) for x in dist)
        for j in np.flatnonzero(dist != target):
            families[name]["failures"] += 1
            failures.append({"family": name, "a": int(avals[j]), "tail_index": int(tails[j]),
                             "word": "(" + ",".join(str(int(x)) for x in words[j]) + ")",
                             "distance": int(dist[j])})
    return VerificationSummary(
        code=code.descriptor(), mode=mode, seed=seed if mode == "sample" else None,
        families=families, checked=sum(f["checked"] for f in families.values()),
        failures=failures, histogram={str(d): hist[d] for d in sorted(hist)},
        elapsed=time.perf_counter() - t0,
    )


def verify_monomial_families(code: RSCode, mode: str = "exhaustive", count: int | None = None,
                     seed: int | None = None, workers: int = 1, force: bool = False,
                     budget: int = EVALUATION_BUDGET) -> VerificationSummary:
    """Check that a x^(q-2) + f and a x^k + f all sit at distance n - k.

    Exhaustive mode covers every a != 0 and every tail f; the x^k family is
    skipped when k = q - 2 because it coincides with the other one.
    """
    if code.q < 4:
        raise HypothesisViolated(f"q = {code.q} < 4")
    field = code.field
    centers = {"MonomialHigh": np.array(eval_word(Poly.monomial(field, code.q - 2)).entries, dtype=field.dtype)}
    if code.k < code.q - 2:
        centers["MonomialK"] = np.array(eval_word(Poly.monomial(field, code.k)).entries, dtype=field.dtype)
    return _verify_families(code, centers, mode, count, seed, workers, force, budget)


def verify_cyclic_families(code: CyclicRSCode, which: tuple[str, ...] = ("CyclicG1", "CyclicG2"),
                           mode: str = "exhaustive", count: int | None = None,
                           seed: int | None = None, workers: int = 1, force: bool = False,
                           budget: int = EVALUATION_BUDGET) -> VerificationSummary:
    """Check that a g1 + l g and a g2 + l g all sit at distance n - k."""
    polys = {"CyclicG1": code.g1, "CyclicG2": code.g2}
    centers = {w: np.array(polys[w].padded(code.n), dtype=code.field.dtype) for w in which}
    return _verify_families(code, centers, mode, count, seed, workers, force, budget)


@dataclass
class CensusReport:
    code: dict
    characteristic: int
    mode: str
    seed: int | None
    patterns_total: int
    excluded_shape: int
    scanned: int
    histogram: dict
    deep_holes: list
    elapsed: float = dc_field(default=0.0, compare=False)

    @property
    def hypothesis_applies(self) -> bool:
        return self.characteristic % 2 == 1

    @property
    def counterexample_found(self) -> bool:
        return bool(self.deep_holes)

    def to_dict(self) -> dict:
        return {
            "kind": "census",
            "parameters": {"code": self.code, "mode": self.mode, "seed": self.seed},
            "characteristic": self.characteristic,
            "odd_characteristic": self.hypothesis_applies,
            "patterns_total": self.patterns_total,
            "excluded_shape": self.excluded_shape,
            "scanned": self.scanned,
            "histogram": self.histogram,
            "deep_holes_found": len(self.deep_holes),
            "deep_holes": self.deep_holes,
            "timing": {"elapsed_seconds": round(self.elapsed, 6)},
        }


def _pattern_is_shape(digits: np.ndarray) -> np.ndarray:
    """Rows (u_k, ..., u_{q-2}) matching a x^k or a x^(q-2)."""
    nz = digits != 0
    high = nz[:, -1] & ~nz[:, :-1].any(axis=1)
    low = nz[:, 0] & ~nz[:, 1:].any(axis=1)
    return high | low


def census_other_deep_holes(code: RSCode, mode: str = "exhaustive", count: int | None = None,
                        seed: int | None = None, workers: int = 1, force: bool = False,
                        budget: int = EVALUATION_BUDGET, verify_limit: int = 32) -> CensusReport:
    """Scan received words whose interpolants avoid both monomial families.

    Adding a codeword does not change the error distance, so one word per
    coset suffices: the interpolants sum_{i=k}^{q-2} u_i x^i.  Patterns of
    either family are excluded.  Any word found at distance n - k is
    re-checked with the independent pure-Python scan (first
    ``verify_limit`` of them) and reported.
    """
    t0 = time.perf_counter()
    field = code.field
    q, k, n = code.q, code.k, code.n
    L = n - k
    total = q ** L
    search.check_cap(q, k, force)
    if mode == "exhaustive":
        if total * q ** k > budget and not force:
            raise SearchSpaceTooLarge(f"{total} cosets x {q ** k} codewords exceed the budget {budget}")
        idx = np.arange(total, dtype=np.int64)
    elif mode == "sample":
        if count is None or seed is None:
            raise ValueError("sample mode needs both count and seed")
        idx = np.unique(np.random.default_rng(seed).integers(0, total, size=count))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    digits = np.stack([(idx // q ** j) % q for j in range(L)], axis=1)
    keep = ~_pattern_is_shape(digits)
    idx, digits = idx[keep], digits[keep]
    high_basis = np.array([eval_word(Poly.monomial(field, k + j)).entries for j in range(L)],
                          dtype=field.dtype)
    words = np.concatenate([search.span_block(field, high_basis, int(i), int(i) + 1) for i in idx]) \
        if mode == "sample" else search.span_block(field, high_basis, 0, total)[keep]
    if len(words):
        dist, _ = error_distances(code, words, workers=workers, force=force)
    else:
        dist = np.zeros(0, dtype=np.int64)

    found = []
    basis_rows = code.basis.tolist()
    for j in np.flatnonzero(dist == L):
        entry = {
            "interpolant": str(Poly(field, [0] * k + [int(x) for x in digits[j]])),
            "word": "(" + ",".join(str(int(x)) for x in words[j]) + ")",
            "distance": int(dist[j]),
            "verified": None,
        }
        if len(found) < verify_limit:
            ref, _ = search.nearest_reference(field, basis_rows, [int(x) for x in words[j]])
            entry["verified"] = ref == L
        found.append(entry)

    return CensusReport(
        code=code.descriptor(), characteristic=field.p, mode=mode,
        seed=seed if mode == "sample" else None,
        patterns_total=total if mode == "exhaustive" else len(keep),
        excluded_shape=int((~keep).sum()), scanned=int(keep.sum()),
        histogram=_histogram(dist), deep_holes=found,
        elapsed=time.perf_counter() - t0,
    )


def cross_version_distances(code: RSCode, words: list[Word], workers: int = 1,
                            force: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Evaluation-code distances of ``words`` and cyclic-code distances of their transforms."""
    from .dft import dft_poly

    field = code.field
    cyc = code.cyclic()
    ev = np.array([w.entries for w in words], dtype=field.dtype)
    images = np.array([dft_poly(lagrange_interpolate(w)).padded(code.n) for w in words],
                      dtype=field.dtype)
    d_eval, _ = error_distances(code, ev, workers=workers, force=force)
    d_cyc, _ = error_distances(cyc, images, workers=workers, force=force)
    return d_eval, d_cyc
