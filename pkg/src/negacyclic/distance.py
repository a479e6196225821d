"""Hamming weights over R, two exact minimum-distance oracles, and the
closed-form distance for codes of length p^l.

Weight counts R-symbols: position i contributes 1 when any of the four
F_p components at x^i is nonzero.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import comb, prod
from typing import Iterator

import numpy as np

from .codes import FpBasis, IdealCode, fp_basis, from_vector
from .errors import BudgetExceeded, HypothesisUnmet, NotApplicable, OutOfRange, ZeroCode
from .fieldpoly import FpPoly
from .linalg import batched_rank, inverse_table, left_kernel_vector, rank as fp_rank, rref
from .ring import RPoly

DEFAULT_SUPPORT_BUDGET = 10**6
DEFAULT_ENUM_BUDGET = 10**7

# dimension up to which the flat search runs alongside the support scan
FLAT_SEARCH_MAX_DIM = 10
_CHUNK = 2048


def hamming_weight(f: RPoly) -> int:
    n = f.modulus.n if f.modulus is not None else max(len(c) for c in f.parts)
    return sum(1 for i in range(n) if any(c[i] for c in f.parts))


def vector_weight(vec: np.ndarray, n: int) -> int:
    return int(np.asarray(vec).reshape(n, 4).any(axis=1).sum())


def symbols_to_rpoly(vec, field, modulus) -> RPoly:
    """Codeword given as n symbols (a, b, c, d) back to an element of R[x]."""
    layers = np.asarray(vec).reshape(modulus.n, 4).T.ravel()
    return from_vector(layers, field, modulus)


def _basis(code_or_basis) -> FpBasis:
    if isinstance(code_or_basis, FpBasis):
        return code_or_basis
    return fp_basis(code_or_basis)


@dataclass
class OracleResult:
    distance: int
    witness: np.ndarray
    tests: int
    method: str


def _support_scan(G: np.ndarray, n: int, p: int, counter: list[int]) -> Iterator:
    """Try supports S of size w = 1, 2, ... containing position 0.

    A nonzero codeword vanishing outside S exists iff the columns of G
    outside S have rank below dim. Every code here is closed under
    multiplication by x, which rotates supports, so any minimum-weight
    word has a rotation that is nonzero at position 0.
    """
    k = G.shape[0]
    blocks = G.reshape(k, n, 4)
    inv = inverse_table(p)
    for w in range(1, n + 1):
        others = range(1, n)
        combos = itertools.combinations(others, w - 1)
        while True:
            chunk = list(itertools.islice(combos, _CHUNK))
            if not chunk:
                break
            keep = np.ones((len(chunk), n), dtype=bool)
            keep[:, 0] = False
            rows = np.repeat(np.arange(len(chunk)), w - 1) if w > 1 else np.zeros(0, dtype=int)
            if w > 1:
                keep[rows, np.array(chunk).ravel()] = False
            outside = n - w
            if outside == 0:
                ranks = np.zeros(len(chunk), dtype=np.int64)
            else:
                idx = np.nonzero(keep)[1].reshape(len(chunk), outside)
                sub = blocks[:, idx, :]  # (k, B, outside, 4)
                sub = sub.transpose(1, 0, 2, 3).reshape(len(chunk), k, outside * 4)
                ranks = batched_rank(sub, p, inv)
            for b in range(len(chunk)):
                counter[0] += 1
                if ranks[b] < k:
                    support = (0,) + chunk[b]
                    return_value = (w, support)
                    yield return_value
                    return
                yield None


def _flat_search(G: np.ndarray, n: int, p: int, counter: list[int]) -> Iterator:
    """Largest set T of positions whose columns have rank below dim.

    The minimum distance is n - |T|. Only closed sets (flats) need to be
    visited: the closure of T adds every position whose columns already
    lie in the span of T's columns without raising the rank.
    """
    k = G.shape[0]
    blocks = G.reshape(k, n, 4)

    def closure(positions):
        cols = blocks[:, sorted(positions), :].reshape(k, -1) if positions else np.zeros((k, 0), dtype=np.int64)
        r = fp_rank(cols.T, p) if cols.shape[1] else 0
        if r == k:
            return None, r
        # annihilator of the column span: left kernel of cols
        if r == 0:
            ann = np.eye(k, dtype=np.int64)
        else:
            red, piv = rref(cols.T, p)
            free = [c for c in range(k) if c not in piv]
            ann = np.zeros((len(free), k), dtype=np.int64)
            for t, fcol in enumerate(free):
                ann[t, fcol] = 1
                for row, pc in zip(red, piv):
                    ann[t, pc] = (-row[fcol]) % p
        proj = np.einsum("ak,kin->ain", ann, blocks) % p
        inside = ~proj.any(axis=(0, 2))
        return frozenset(np.nonzero(inside)[0].tolist()), r

    start, r0 = closure(frozenset())
    counter[0] += 1
    yield None
    if start is None:
        return
    best = start
    seen = {start}
    stack = [start]
    while stack:
        flat = stack.pop()
        for j in range(n):
            if j in flat:
                continue
            counter[0] += 1
            nxt, r = closure(flat | {j})
            yield None
            if nxt is None or nxt in seen:
                continue
            seen.add(nxt)
            stack.append(nxt)
            if len(nxt) > len(best):
                best = nxt
    support = tuple(i for i in range(n) if i not in best)
    yield (n - len(best), support)


def _witness_for_support(G: np.ndarray, n: int, p: int, support) -> np.ndarray:
    k = G.shape[0]
    blocks = G.reshape(k, n, 4)
    outside = [i for i in range(n) if i not in set(support)]
    if not outside:
        y = np.zeros(k, dtype=np.int64)
        y[0] = 1
    else:
        y = left_kernel_vector(blocks[:, outside, :].reshape(k, -1), p)
    return y @ G % p


def min_distance_support(code, budget: int = DEFAULT_SUPPORT_BUDGET, *, with_witness: bool = False):
    """Minimum distance from rank tests on position subsets.

    Runs the support scan and, for small dimension, the flat search in
    lockstep; both are exact and whichever finishes first answers. The
    budget bounds the total number of rank tests.
    """
    basis = _basis(code)
    if basis.dim == 0:
        raise ZeroCode("the zero code has no minimum distance")
    G, n, p = basis.rows, basis.n, basis.p
    counter = [0]
    runners = [("support", _support_scan(G, n, p, counter))]
    if basis.dim <= FLAT_SEARCH_MAX_DIM:
        runners.append(("flats", _flat_search(G, n, p, counter)))
    result = None
    while result is None:
        for name, gen in list(runners):
            try:
                out = next(gen)
            except StopIteration:
                runners.remove((name, gen))
                continue
            if out is not None:
                result = (name, out)
                break
            if counter[0] > budget:
                raise BudgetExceeded(f"support oracle exceeded {budget} rank tests")
        if not runners and result is None:
            raise RuntimeError("support oracle finished without an answer")
    method, (d, support) = result
    if not with_witness:
        return d
    witness = _witness_for_support(G, n, p, support)
    return OracleResult(d, witness, counter[0], method)


def min_distance_enum(code, budget: int = DEFAULT_ENUM_BUDGET, *, with_witness: bool = False):
    """Minimum weight over all p^dim - 1 nonzero codewords."""
    basis = _basis(code)
    k, n, p = basis.dim, basis.n, basis.p
    if k == 0:
        raise ZeroCode("the zero code has no nonzero codewords")
    total = p**k
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed enumeration budget {budget}")
    G = basis.rows.astype(np.int16)
    # all combinations of the first m rows, then one pass per offset from the rest
    m = min(k, max(1, int(np.log(2**16) / np.log(p))))
    msgs = np.array(list(itertools.product(range(p), repeat=m)), dtype=np.int16)
    low = msgs @ G[:m] % p
    best, best_word = n + 1, None
    for high in itertools.product(range(p), repeat=k - m):
        offset = np.array(high, dtype=np.int16) @ G[m:] % p if k > m else np.zeros(G.shape[1], np.int16)
        words = (low + offset) % p
        weights = words.reshape(len(low), n, 4).any(axis=2).sum(axis=1)
        if not any(high):
            weights[0] = n + 1  # the zero word
        j = int(weights.argmin())
        if weights[j] < best:
            best, best_word = int(weights[j]), words[j].astype(np.int64)
    if with_witness:
        return OracleResult(best, best_word, total - 1, "enum")
    return best


class ExpansionKind(enum.Enum):
    ZERO = "zero"
    NONZERO = "non-zero"
    FULL = "full"


@dataclass(frozen=True)
class PAdicExpansion:
    """Base-p digits of t with l places and their leading-run classification.

    ``digits[i]`` is b_i, the coefficient of p^i. ``q`` is the length of the
    run of nonzero digits starting at b_(l-1).
    """

    t: int
    p: int
    l: int
    digits: tuple[int, ...]
    kind: ExpansionKind
    q: int

    def leading_product(self) -> int:
        return prod(self.digits[self.l - i] + 1 for i in range(1, self.q + 1))


def p_adic_classify(t: int, p: int, l: int) -> PAdicExpansion:
    if l < 1 or not 0 < t < p**l:
        raise OutOfRange(f"need 0 < t < p^l, got t={t}, p={p}, l={l}")
    digits = []
    m = t
    for _ in range(l):
        m, b = divmod(m, p)
        digits.append(b)
    q = 0
    while q < l and digits[l - 1 - q] != 0:
        q += 1
    if q == l:
        kind = ExpansionKind.FULL
    elif any(digits[: l - q - 1]):
        kind = ExpansionKind.NONZERO
    else:
        kind = ExpansionKind.ZERO
    return PAdicExpansion(t, p, l, tuple(digits), kind, q)


def prime_power_exponent(n: int, p: int) -> int | None:
    """l with n = p^l, or None."""
    l, m = 0, n
    while m % p == 0:
        m //= p
        l += 1
    return l if m == 1 and l >= 1 else None


def formula_from_t4(t4: int, p: int, l: int) -> int:
    """Closed-form d(C) for length p^l driven by the exponent t4 of g4 = (x+1)^t4."""
    if t4 <= p ** (l - 1):
        return 2
    exp = p_adic_classify(t4, p, l)
    base = exp.leading_product()
    return 2 * base if exp.kind is ExpansionKind.NONZERO else base


def _exponents(code: IdealCode, l: int) -> tuple[int, ...]:
    x1 = FpPoly((1, 1), code.field)
    for g in code.torsion:
        if g != x1 ** g.degree:
            raise NotApplicable(f"{g} is not a power of x+1")
    return code.degrees


def formula_hypothesis_met(code: IdealCode) -> bool:
    """t1 > t2 > t4 > 0 and t1 > t3 > t4 > 0, absent layers counted as t = n."""
    t1, t2, t3, t4 = code.degrees
    return t1 > t2 > t4 > 0 and t1 > t3 > t4 > 0


def distance_formula(code: IdealCode, strict: bool = False) -> int:
    """Closed-form distance for negacyclic codes of length p^l.

    Evaluated from t4 alone. With ``strict`` an unmet chain hypothesis
    raises HypothesisUnmet; otherwise the value is returned regardless and
    :func:`formula_hypothesis_met` tells whether it is covered.
    """
    if not code.is_negacyclic:
        raise NotApplicable("the closed form is stated for negacyclic codes")
    l = prime_power_exponent(code.n, code.p)
    if l is None:
        raise NotApplicable(f"n = {code.n} is not a power of p = {code.p}")
    if code.is_zero_code():
        raise ZeroCode("the zero code has no minimum distance")
    t4 = _exponents(code, l)[3]
    if strict and not formula_hypothesis_met(code):
        raise HypothesisUnmet(f"exponents {code.degrees} violate t1 > t2, t3 > t4 > 0")
    return formula_from_t4(t4, p=code.p, l=l)


def lucas_weight(m: int, p: int) -> int:
    """Weight of (x+1)^m over F_p: the product of (digit + 1) over base-p digits."""
    w = 1
    while m:
        m, b = divmod(m, p)
        w *= b + 1
    return w


def repeated_root_distance(t: int, p: int, l: int) -> int:
    """min over t <= m < p^l of wt((x+1)^m), the distance of <(x+1)^t> in length p^l."""
    if not 0 <= t < p**l:
        raise OutOfRange(f"need 0 <= t < p^l, got {t}")
    return min(lucas_weight(m, p) for m in range(t, p**l))


@dataclass
class DistanceReport:
    d_oracle: int | str
    d_formula: int | str
    method: str
    hypothesis_met: bool
    witness: list[int] | None = None

    @property
    def agreement(self) -> bool | None:
        if isinstance(self.d_oracle, int) and isinstance(self.d_formula, int):
            return self.d_oracle == self.d_formula
        return None

    def as_dict(self) -> dict:
        return {
            "d_oracle": self.d_oracle,
            "d_formula": self.d_formula,
            "method": self.method,
            "hypothesis_met": self.hypothesis_met,
            "agreement": self.agreement,
        }


def distance_report(code: IdealCode, support_budget: int = DEFAULT_SUPPORT_BUDGET,
                    enum_budget: int = DEFAULT_ENUM_BUDGET) -> DistanceReport:
    """Oracle distance (support scan, falling back to enumeration) beside the closed form."""
    if code.is_zero_code():
        return DistanceReport("undefined", "undefined", "none", False)
    try:
        d_formula: int | str = distance_formula(code)
        hyp = formula_hypothesis_met(code)
    except NotApplicable:
        d_formula, hyp = "not-applicable", False
    try:
        res = min_distance_support(code, support_budget, with_witness=True)
        method = "support"
    except BudgetExceeded:
        try:
            res = min_distance_enum(code, enum_budget, with_witness=True)
            method = "enum"
        except BudgetExceeded:
            return DistanceReport("skipped(budget)", d_formula, "formula", hyp)
    return DistanceReport(res.distance, d_formula, method, hyp, res.witness.tolist())


def count_supports(n: int, w: int) -> int:
    """Number of supports of size w containing position 0."""
    return comb(n - 1, w - 1)
