"""
Named claims checked by ``verify-suite``.

Every claim is a module level function taking the corpus seed and returning a short evidence
string; a failed claim raises :class:`VerificationError`. Claims are looked up by name so that
worker processes only receive the name and the seed.
"""
import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import factorial
from typing import TypeAlias

import numpy as np

from service.algebras import AlgebraSpec, SlotSpec, make_nk, materialize, parse_algebra_spec, tensor
from service.codim import BoundSpec, QPoly, binom_transform, bound_poly, bound_spec, catalan, catalan_lead, closed_form, combined_bounds, m_il_dim, module_partition
from service.core.errors import UnsupportedError, VerificationError
from service.freealg import (
    NcPoly,
    check_lemma_instances,
    check_product_inclusion,
    commutator_of_variables,
    long_commutator,
    make_g,
    module_span_dim,
    multilinearize,
    parse_poly,
    proper_dimension,
    quotient_dims,
    standard_commutator_form,
    standard_poly,
    x,
)
from service.idcheck import brute_check, grassmann_chain, identity_gamma, lie_equal, min_index, parity_check, recognized_cap, run_recipe
from service.reptheory import Partition, decompose_quotient, did_gamma, did_gamma_finite, hook_dim, intro_partitions

logger = logging.getLogger("service.verification.claims")

ClaimCheck: TypeAlias = Callable[[int], str]


@dataclass(frozen=True)
class Claim:
    name: str
    check: ClaimCheck


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise VerificationError(message)


def _min_index(algebra: str, expected: int, seed: int) -> str:
    spec = parse_algebra_spec(algebra)
    index = min_index(spec, recognized_cap(spec))
    expect(index == expected, f"min_index({algebra}) = {index}, expected {expected}")
    return f"min_index({algebra}) = {index}"


def _odd_indices(seed: int) -> str:
    found = {}
    for algebra in ("E*E2", "E*E3", "E*E2*E2"):
        spec = parse_algebra_spec(algebra)
        found[algebra] = min_index(spec, recognized_cap(spec))
        expect(found[algebra] % 2 == 1, f"min_index({algebra}) = {found[algebra]} is even")
    return ", ".join(f"{algebra}: {index}" for algebra, index in found.items())


POLY_KINDS = ("commutator", "commutator-product", "words", "standard")


def _between(rng: np.random.Generator, low: int, high: int) -> int:
    return int(rng.integers(low, high, endpoint=True))


def _random_spec(rng: np.random.Generator, generators: int) -> AlgebraSpec:
    sizes: list[int] = []
    while generators - sum(sizes) >= 2 and len(sizes) < 3:
        sizes.append(_between(rng, 2, min(4, generators - sum(sizes))))
        if rng.random() < 0.4:
            break
    return AlgebraSpec(tuple(SlotSpec("E", size) for size in sizes))


def _random_poly(rng: np.random.Generator, n: int) -> NcPoly:
    variables = list(range(1, n + 1))
    rng.shuffle(variables)
    kind = POLY_KINDS[rng.integers(len(POLY_KINDS))]
    if kind == "commutator":
        return long_commutator([x(i) for i in variables])
    if kind == "commutator-product" and n >= 4:
        cut = _between(rng, 2, n - 2)
        return commutator_of_variables(*variables[:cut]) * commutator_of_variables(*variables[cut:])
    if kind == "standard":
        return standard_poly(n)
    terms: dict[tuple[int, ...], int] = {}
    for _ in range(_between(rng, 2, 3)):
        rng.shuffle(variables)
        terms[tuple(variables)] = int(rng.choice((-2, -1, 1, 2)))
    return NcPoly(terms)


def equivalence_corpus(seed: int, size: int = 300) -> Iterator[tuple[NcPoly, AlgebraSpec]]:
    """
    Pairs of multilinear polynomials of degree at most 5 and all-bounded Grassmann tensor products.

    Every fifth pair is [x_1, ..., x_n] on up to 7 generators; the others use at most 5
    generators so that exhaustive tuple evaluation stays small.
    """
    rng = np.random.default_rng(seed)
    for i in range(size):
        n = _between(rng, 2, 5)
        if i % 5 == 0:
            yield long_commutator([x(j) for j in range(1, n + 1)]), _random_spec(rng, _between(rng, 2, 7))
        else:
            yield _random_poly(rng, n), _random_spec(rng, _between(rng, 2, 5))


def _checker_equivalence(seed: int) -> str:
    identities = total = 0
    for f, spec in equivalence_corpus(seed):
        parity = parity_check(f, spec).is_identity
        brute = brute_check(f, materialize(spec, max_dim=1024)).is_identity
        expect(parity == brute, f"{f} on {spec}: parity says {parity}, brute force says {brute}")
        identities += parity
        total += 1
    return f"{total} pairs agree, {identities} identities"


def _witness_lie_equal(seed: int) -> str:
    values = []
    for k in (1, 2):
        instance = lie_equal(k)
        value = run_recipe(instance)
        expect(value == instance.expected, f"lie-equal k={k}: {value}")
        values.append(str(value))
    return "; ".join(values)


def _witness_grassmann_chain(seed: int) -> str:
    values = []
    for k in (1, 2):
        instance = grassmann_chain(k)
        value = run_recipe(instance)
        expect(value == instance.expected, f"grassmann-chain k={k}: {value}")
        values.append(str(value))
    return "; ".join(values)


def _inclusion(m: int, q: int, degree: int, target: int, seed: int) -> str:
    report = check_product_inclusion(m, q, degree, target)
    expect(report.checked > 0 and report.holds, f"{report.statement}: {report.failures} of {report.checked} outside")
    return f"{report.statement} at degree {degree}: {report.checked} generators"


def _lemma(m: int, degree: int, seed: int) -> str:
    report = check_lemma_instances(m, degree)
    expect(report.checked > 0 and report.holds, f"{report.statement}: {report.failures} of {report.checked} outside")
    return f"{report.statement} at degree {degree}: {report.checked} generators"


def _proper_dimensions(seed: int) -> str:
    expected = [1, 0, 1, 2, 9, 44, 265]
    found = [proper_dimension(n) for n in range(7)]
    expect(found == expected, f"proper dimensions {found}")
    expect(all(binom_transform(lambda l: found[l], n) == factorial(n) for n in range(7)), "binomial transform of D_n differs from n!")
    return f"dim Gamma_n = {found}"


def _full_codimensions(seed: int) -> str:
    for p in (3, 4, 5):
        for n in range(1, p + 1):
            c, _ = quotient_dims(n, p)
            expect(c == factorial(n), f"c_{n}(N_{p}) = {c}")
    c, _ = quotient_dims(3, 2)
    expect(c == 4, f"c_3(N_2) = {c}")
    return "c_n(N_p) = n! for n <= p, c_3(N_2) = 4"


def _did_finite(seed: int) -> str:
    spec = parse_algebra_spec("E2*E2")
    expected = {4: 3, 5: 0, 6: 0}
    for n, value in expected.items():
        by_modules = did_gamma_finite(n, 1, 1).dimension
        by_rank = identity_gamma(spec, n, "direct")
        expect(by_modules == by_rank == value, f"gamma_{n}(E2*E2): modules {by_modules}, rank {by_rank}, expected {value}")
    return "gamma_4, gamma_5, gamma_6 of E2*E2 = 3, 0, 0"


def _did_unbounded(seed: int) -> str:
    spec = parse_algebra_spec("E*E2")
    values = []
    for n in (3, 4, 5):
        by_modules = did_gamma(n, 1).dimension
        by_rank = identity_gamma(spec, n, "parity")
        expect(by_modules == by_rank, f"gamma_{n}(E*E2): modules {by_modules}, rank {by_rank}")
        values.append(by_rank)
    return f"gamma_3..5(E*E2) = {values}"


def _module_span(literal: str, p: int, expected: int, seed: int) -> str:
    dim = module_span_dim(multilinearize(parse_poly(literal)), p)
    expect(dim == expected, f"module of {literal} modulo I_{p + 1} has dimension {dim}, expected {expected}")
    return f"{literal}: {dim}"


def _g_family_spans(seed: int) -> str:
    found = [module_span_dim(multilinearize(make_g(i, 5)), 4) for i in (1, 2, 3)]
    expect(found == [6, 5, 4], f"g_i^(5) modules: {found}")
    return f"g_1..3^(5) modules: {found}"


def _decomposition_constraints(seed: int) -> str:
    checked = 0
    for p in (3, 4, 5):
        for n in range(2, 6):
            decomposition = decompose_quotient(n, p)
            _, gamma = quotient_dims(n, p)
            expect(decomposition.dimension == gamma, f"Gamma_{n}(N_{p}) = {decomposition} has dimension {decomposition.dimension}, expected {gamma}")
            for shape in decomposition.shapes():
                expect(shape[0] <= p - 1, f"{shape} in Gamma_{n}(N_{p}) has a row longer than {p - 1}")
            for shape in intro_partitions(n, p):
                expect(decomposition.multiplicity(shape) >= 1, f"{shape} missing from Gamma_{n}(N_{p}) = {decomposition}")
            checked += 1
    return f"{checked} decompositions"


def _module_formulas(seed: int) -> str:
    checked = 0
    for i in (1, 2, 3):
        for l in range(4):
            for n in range(9):
                for parity in ("odd", "even"):
                    try:
                        value = m_il_dim(i, l, n, parity)
                    except UnsupportedError:
                        continue
                    degree = 2 * n - 1 if parity == "odd" else 2 * n
                    shape = module_partition(i, l, degree)
                    expect(value == hook_dim(shape), f"M_{i},{l} in degree {degree}: {value} vs dim M{shape} = {hook_dim(shape)}")
                    checked += 1
    return f"{checked} module dimensions match the hook formula"


def _hook_sums(seed: int) -> str:
    for l in range(1, 5):
        total = sum(hook_dim(Partition.hook(2 * l - 1 - leg, leg)) for leg in range(2 * l))
        expect(total == 2 ** (2 * l - 1), f"hooks of size {2 * l} sum to {total}")
    return "hooks of size 2l sum to 2^(2l-1) for l <= 4"


def _standard_commutator_form(seed: int) -> str:
    for m in (2, 4):
        expect(standard_commutator_form(m) == standard_poly(m), f"s_{m} differs from its commutator form")
    return "s_2 and s_4 as alternating sums of commutator products"


def _nk_identities(seed: int) -> str:
    n3 = make_nk(3)
    for literal in ("[x1,x2,x3]", "[x1,x2]*[x3,x4]"):
        expect(brute_check(parse_poly(literal), n3).is_identity, f"{literal} is not an identity of N3")
    five = long_commutator([x(i) for i in range(1, 6)])
    expect(brute_check(five, tensor([n3, n3])).is_identity, "[x1,...,x5] fails on N3*N3")
    expect(brute_check(five, tensor([make_nk(4), n3])).is_identity, "[x1,...,x5] fails on N4*N3")
    return "N3 identity basis; [x1,...,x5] on N3*N3 and N4*N3"


def _bound_leads(seed: int) -> str:
    for k in range(2, 6):
        for parity in ("odd", "even"):
            poly = bound_poly(k, parity)
            expect(poly.degree == 2 * k - 2, f"{parity} bound for k={k} has degree {poly.degree}")
            expect(poly.lead == catalan_lead(k), f"{parity} bound for k={k} has lead {poly.lead}")
    return f"A_3 lead {bound_poly(3, 'odd').lead}"


def _closed_forms(seed: int) -> str:
    leads = []
    for k in (2, 3, 4):
        spec = bound_spec(k, "odd")
        form = closed_form(spec)
        expect(form.r.lead == Fraction(catalan(k), factorial(2 * k - 2)), f"k={k}: r lead {form.r.lead}")
        expect(form.r.degree == 2 * k - 2 and form.s.degree <= 2 * k - 1, f"k={k}: degrees {form.r.degree}, {form.s.degree}")
        expect(all(form(n) == spec.codimension(n) for n in range(31)), f"k={k}: closed form differs from the binomial transform")
        leads.append(str(form.r.lead))
    return f"r leads {leads}"


def _combined(seed: int) -> str:
    found = combined_bounds(4)
    expect(found == (Fraction(58, 45), Fraction(29, 1440)), f"combined_bounds(4) = {found}")
    return f"combined_bounds(4) = ({found[0]}, {found[1]})"


def _constant_gamma(seed: int) -> str:
    spec = BoundSpec(0, (), QPoly.of(1), label="constant")
    expect(all(binom_transform(spec.value, n) == 2**n for n in range(20)), "constant gamma does not give 2^n")
    form = closed_form(spec)
    expect(form.r == QPoly.of(1) and form.s.is_zero(), f"constant gamma has closed form {form}")
    return f"c_n = {form}"


CLAIMS: tuple[Claim, ...] = (
    *(
        Claim(f"min-index/{algebra}", partial(_min_index, algebra, expected))
        for algebra, expected in (
            ("E2*E2", 4),
            ("E2*E2*E2", 5),
            ("E2*E2*E2*E2", 6),
            ("E*E2", 5),
            ("E*E3", 5),
            ("E*E2*E2", 7),
            ("E4*E4", 6),
            ("E3*E4", 5),
        )
    ),
    Claim("min-index/odd", _odd_indices),
    Claim("checker-equivalence", _checker_equivalence),
    Claim("witness/lie-equal", _witness_lie_equal),
    Claim("witness/grassmann-chain", _witness_grassmann_chain),
    Claim("t-ideal/I3*I2", partial(_inclusion, 3, 2, 5, 4)),
    Claim("t-ideal/I3*I3", partial(_inclusion, 3, 3, 6, 4)),
    Claim("t-ideal/lemma-I2", partial(_lemma, 2, 5)),
    Claim("t-ideal/lemma-I3", partial(_lemma, 3, 6)),
    Claim("proper/derangements", _proper_dimensions),
    Claim("proper/full-codimensions", _full_codimensions),
    Claim("did/E2*E2", _did_finite),
    Claim("did/E*E2", _did_unbounded),
    Claim("module/[x2,x1,x1]", partial(_module_span, "[x2,x1,x1]", 3, 2)),
    Claim("module/[x1,x2]^2", partial(_module_span, "[x1,x2]^2", 3, 2)),
    Claim("module/[x1,x2]^3", partial(_module_span, "[x1,x2]^3", 4, 5)),
    Claim("module/g-family", _g_family_spans),
    Claim("decompose/constraints", _decomposition_constraints),
    Claim("formula/modules", _module_formulas),
    Claim("formula/hooks", _hook_sums),
    Claim("formula/standard", _standard_commutator_form),
    Claim("formula/Nk", _nk_identities),
    Claim("codim/bound-leads", _bound_leads),
    Claim("codim/closed-forms", _closed_forms),
    Claim("codim/combined", _combined),
    Claim("codim/constant", _constant_gamma),
)

CLAIMS_BY_NAME: dict[str, Claim] = {claim.name: claim for claim in CLAIMS}
