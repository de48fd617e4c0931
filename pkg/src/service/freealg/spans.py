"""
Multilinear components of T-ideals and of the proper subspace.

Spanning sets are produced as integer rows over the lexicographic basis of P_n (see
``word_index``). Every enumeration walks the permutations of ``1..n`` in lexicographic
order and, for each one, all ways of cutting the word into segments. Generators that only
differ by a swap of the first two commutator entries are produced once and duplicate rows
are dropped, so the order of the produced rows is fixed and ranks, pivots and normal
forms are reproducible.
"""
import logging
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import comb, factorial

from service.core.errors import DimensionMismatchError, SizeGuardError, UnsupportedError, VerificationError
from service.exactla import EchelonBasis, IntRow
from settings import get_settings

from .entity import InclusionReport
from .poly import MultilinearPoly, Word, long_commutator, word_index, words_of_degree, x

logger = logging.getLogger("service.freealg.spans")


def _guard(n: int, max_degree: int | None) -> None:
    limit = max_degree if max_degree is not None else get_settings().MAX_MULTILINEAR_DEGREE
    if n > limit:
        raise SizeGuardError(f"degree {n} exceeds the multilinear size guard {limit}")


def _compositions(total: int, parts: int, minimum: int = 1) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first, *rest)


def _cut(letters: Sequence[int], lengths: Iterable[int]) -> list[Word]:
    out = []
    position = 0
    for length in lengths:
        out.append(tuple(letters[position:position + length]))
        position += length
    return out


def _commutator_terms(blocks: Sequence[Word]) -> dict[Word, int]:
    """Integer expansion of the left-normed commutator of words."""
    terms: dict[Word, int] = {blocks[0]: 1}
    for w in blocks[1:]:
        expanded: dict[Word, int] = {}
        for a, c in terms.items():
            expanded[a + w] = expanded.get(a + w, 0) + c
            expanded[w + a] = expanded.get(w + a, 0) - c
        terms = {word: c for word, c in expanded.items() if c}
    return terms


def _product_terms(factors: Sequence[dict[Word, int]]) -> dict[Word, int]:
    terms: dict[Word, int] = {(): 1}
    for factor in factors:
        expanded: dict[Word, int] = {}
        for a, c in terms.items():
            for b, d in factor.items():
                expanded[a + b] = expanded.get(a + b, 0) + c * d
        terms = {word: c for word, c in expanded.items() if c}
    return terms


def _dedupe(rows: Iterable[IntRow]) -> Iterator[IntRow]:
    seen: set[tuple[tuple[int, int], ...]] = set()
    for row in rows:
        if not row:
            continue
        key = tuple(sorted(row.items()))
        if key[0][1] < 0:
            key = tuple((column, -value) for column, value in key)
        if key not in seen:
            seen.add(key)
            yield row


def _open_lengths(free: int, count: int) -> Iterator[tuple[int, ...]]:
    """Lengths of ``count`` possibly empty segments using at most ``free`` letters."""
    for used in range(free + 1):
        for lengths in _compositions(used + count, count):
            yield tuple(length - 1 for length in lengths)


def _ideal_rows(p: int, n: int) -> Iterator[IntRow]:
    index = word_index(n)

    def generate() -> Iterator[IntRow]:
        for letters in permutations(range(1, n + 1)):
            for u_len, v_len in _open_lengths(n - p, 2):
                middle = letters[u_len:n - v_len]
                u, v = letters[:u_len], letters[n - v_len:]
                for lengths in _compositions(len(middle), p):
                    blocks = _cut(middle, lengths)
                    if blocks[0] > blocks[1]:
                        continue
                    yield {index[u + w + v]: c for w, c in _commutator_terms(blocks).items()}

    return _dedupe(generate())


def _product_rows(p: int, q: int, n: int) -> Iterator[IntRow]:
    index = word_index(n)

    def generate() -> Iterator[IntRow]:
        for letters in permutations(range(1, n + 1)):
            for a_len, b_len, c_len in _open_lengths(n - p - q, 3):
                rest = n - a_len - b_len - c_len
                for lengths in _compositions(rest, p + q):
                    f_len = sum(lengths[:p])
                    a, f_part, b, g_part, c = _cut(letters, (a_len, f_len, b_len, rest - f_len, c_len))
                    f_blocks = _cut(f_part, lengths[:p])
                    g_blocks = _cut(g_part, lengths[p:])
                    if f_blocks[0] > f_blocks[1] or g_blocks[0] > g_blocks[1]:
                        continue
                    terms = _product_terms([{a: 1}, _commutator_terms(f_blocks), {b: 1}, _commutator_terms(g_blocks), {c: 1}])
                    yield {index[w]: value for w, value in terms.items()}

    return _dedupe(generate())


def _proper_rows(n: int) -> Iterator[IntRow]:
    if n == 0:
        yield {0: 1}
        return
    index = word_index(n)

    def generate() -> Iterator[IntRow]:
        for letters in permutations(range(1, n + 1)):
            for parts in range(1, n // 2 + 1):
                for lengths in _compositions(n, parts, minimum=2):
                    factors = _cut(letters, lengths)
                    if any(factor[0] > factor[1] for factor in factors):
                        continue
                    terms = _product_terms([_commutator_terms([(letter,) for letter in factor]) for factor in factors])
                    yield {index[w]: c for w, c in terms.items()}

    yield from _dedupe(generate())


def _to_polys(rows: Iterable[IntRow], n: int) -> list[MultilinearPoly]:
    return [MultilinearPoly.from_vector(row, n) for row in rows]


def ideal_multilinear_span(p: int, n: int, *, max_degree: int | None = None) -> list[MultilinearPoly]:
    """
    Spanning set of I_p ∩ P_n: every ``u [w_1, ..., w_p] v`` using each of x_1..x_n once.

    Args:
        p (int): Commutator length generating the T-ideal, at least 2.
        n (int): Multilinear degree.
        max_degree (int | None): Override of the degree guard.

    Returns:
        list[MultilinearPoly]: The generators; empty when ``p > n``.

    Raises:
        SizeGuardError: If n exceeds the degree guard.
        UnsupportedError: If p < 2.
    """
    if p < 2:
        raise UnsupportedError(f"T-ideals I_p start at p = 2, got {p}")
    _guard(n, max_degree)
    if p > n:
        return []
    return _to_polys(_ideal_rows(p, n), n)


def product_span(p: int, q: int, n: int, *, max_degree: int | None = None) -> list[MultilinearPoly]:
    """Spanning set of (I_p · I_q) ∩ P_n: products ``a f b g c`` with f, g commutators of words."""
    if p < 2 or q < 2:
        raise UnsupportedError("product spans need p, q >= 2")
    _guard(n, max_degree)
    if p + q > n:
        return []
    return _to_polys(_product_rows(p, q, n), n)


def proper_span(n: int, *, max_degree: int | None = None) -> list[MultilinearPoly]:
    """
    Spanning set of Γ_n: products of left-normed commutators of single variables, each of
    length at least 2. Γ_0 is spanned by the unit, Γ_1 is zero.
    """
    _guard(n, max_degree)
    return _to_polys(_proper_rows(n), n)


@cache
def _ideal_basis(p: int, n: int) -> EchelonBasis:
    basis = EchelonBasis()
    if p <= n:
        full = factorial(n)
        for row in _ideal_rows(p, n):
            basis.add(row)
            if basis.rank == full:
                break
    logger.debug(f"I_{p} ∩ P_{n} has rank {basis.rank}")
    return basis


def ideal_basis(p: int, n: int, *, max_degree: int | None = None) -> EchelonBasis:
    """Echelon basis of I_p ∩ P_n; a fresh copy the caller may extend."""
    _guard(n, max_degree)
    return _ideal_basis(p, n).copy()


@cache
def _proper_rank(n: int) -> int:
    basis = EchelonBasis()
    basis.extend(_proper_rows(n))
    return basis.rank


def derangements(n: int) -> int:
    """Inverse binomial transform of the factorials."""
    return sum((-1) ** (n - l) * comb(n, l) * factorial(l) for l in range(n + 1))


def proper_dimension(n: int, *, exact_max_degree: int | None = None) -> int:
    """
    dim Γ_n. Computed as a rank up to ``EXACT_RANK_MAX_DEGREE`` and through the inverse
    binomial transform of n! above it.
    """
    limit = exact_max_degree if exact_max_degree is not None else get_settings().EXACT_RANK_MAX_DEGREE
    if n <= 1:
        return 1 - n
    if n <= limit:
        return _proper_rank(n)
    return derangements(n)


def quotient_dims(n: int, p: int, *, max_degree: int | None = None) -> tuple[int, int]:
    """
    Dimensions of P_n and Γ_n modulo I_{p+1}, that is c_n(N_p) and γ_n(N_p).

    Returns:
        tuple[int, int]: ``(c, gamma)``.
    """
    if p < 2:
        raise UnsupportedError(f"N_p is defined for p >= 2, got {p}")
    _guard(n, max_degree)
    ideal = _ideal_basis(p + 1, n)
    joint = ideal.copy()
    joint.extend(_proper_rows(n))
    c = factorial(n) - ideal.rank
    gamma = joint.rank - ideal.rank
    logger.info(f"c_{n}(N_{p}) = {c}, gamma_{n}(N_{p}) = {gamma}")
    return c, gamma


def _act(sigma: Sequence[int], row: dict[int, Fraction] | IntRow, n: int) -> dict[int, Fraction | int]:
    index = word_index(n)
    words = words_of_degree(n)
    return {index[tuple(sigma[letter - 1] for letter in words[column])]: value for column, value in row.items()}


def module_span_dim(f: MultilinearPoly, p: int, *, max_degree: int | None = None) -> int:
    """
    Dimension of the S_n-module generated by f modulo I_{p+1} ∩ P_n.

    The orbit ``{σ·f}`` is added on top of the ideal basis; the rank increase is the answer.
    """
    n = f.degree
    _guard(n, max_degree)
    ideal = _ideal_basis(p + 1, n)
    joint = ideal.copy()
    vector = f.vector()
    for sigma in permutations(range(1, n + 1)):
        joint.add(_act(sigma, vector, n))
    return joint.rank - ideal.rank


def quotient_character(n: int, p: int, classes: Sequence[Sequence[int]], *, max_degree: int | None = None) -> list[int]:
    """
    Traces of permutations acting on Γ_n modulo I_{p+1} ∩ P_n.

    The quotient is represented by normal forms modulo the ideal basis; a reduced echelon
    basis ``b_i`` of these normal forms (pivot ``c_i``) makes the diagonal entry of σ equal to
    ``NF(σ·b_i)[c_i] / b_i[c_i]``.

    Args:
        n (int): Degree.
        p (int): Lie nilpotency index of N_p.
        classes (Sequence[Sequence[int]]): Permutations in one-line notation, typically one
            representative per conjugacy class.
        max_degree (int | None): Override of the degree guard.

    Returns:
        list[int]: One trace per permutation, in input order.

    Raises:
        VerificationError: If a trace is not an integer.
    """
    _guard(n, max_degree)
    ideal = _ideal_basis(p + 1, n)
    quotient = EchelonBasis()
    for row in _proper_rows(n):
        quotient.add(ideal.normal_form(row))
    rows = [(pivot, quotient.row(pivot)) for pivot in quotient.pivots]
    traces = []
    for sigma in classes:
        if sorted(sigma) != list(range(1, n + 1)):
            raise DimensionMismatchError(f"{tuple(sigma)} is not a permutation of 1..{n}")
        trace = Fraction(0)
        for pivot, row in rows:
            image = ideal.normal_form(_act(sigma, row, n))
            trace += Fraction(image.get(pivot, 0), row[pivot])
        if trace.denominator != 1:
            raise VerificationError(f"non-integral trace {trace} of {tuple(sigma)}")
        traces.append(int(trace))
    return traces


def check_product_inclusion(p: int, q: int, n: int, target: int | None = None, *, max_degree: int | None = None) -> InclusionReport:
    """
    Checks every generator of (I_p · I_q) ∩ P_n for membership in I_target.

    The default target is p + q − 1 when p or q is odd and p + q − 2 otherwise.
    """
    if target is None:
        target = p + q - 1 if (p % 2 or q % 2) else p + q - 2
    _guard(n, max_degree)
    ideal = _ideal_basis(target, n)
    checked = failures = 0
    for row in _product_rows(p, q, n) if p + q <= n else ():
        checked += 1
        if not ideal.contains(row):
            failures += 1
    logger.info(f"I_{p}·I_{q} ⊂ I_{target} at degree {n}: {checked} generators, {failures} outside")
    return InclusionReport(statement=f"I_{p}·I_{q} ⊂ I_{target}", degree=n, checked=checked, failures=failures)


def check_lemma_instances(m: int, n: int, target: int | None = None, *, max_degree: int | None = None) -> InclusionReport:
    """
    Checks ``[u, x_{n-1}, x_n] ∈ I_target`` for every generator u of I_m ∩ P_{n-2}.

    The default target is m + 2; target m + 1 is the weaker inclusion that survives in
    characteristic 3.
    """
    if target is None:
        target = m + 2
    if target < 2:
        raise UnsupportedError(f"I_{target} is not a commutator ideal")
    _guard(n, max_degree)
    ideal = _ideal_basis(target, n)
    index = word_index(n)
    checked = failures = 0
    for u in ideal_multilinear_span(m, n - 2, max_degree=max_degree):
        bracket = long_commutator([u.poly, x(n - 1), x(n)])
        checked += 1
        if not ideal.contains({index[w]: c for w, c in bracket.terms.items()}):
            failures += 1
    logger.info(f"[I_{m}, x, y] ⊂ I_{target} at degree {n}: {checked} generators, {failures} outside")
    return InclusionReport(statement=f"[I_{m}, x, y] ⊂ I_{target}", degree=n, checked=checked, failures=failures)
