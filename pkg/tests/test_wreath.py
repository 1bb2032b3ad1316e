import itertools
import random
from fractions import Fraction
from math import factorial

import pytest

from bruteforce import newton_power_sums_from_poly
from wreathlitt.exactnum import Cyclotomic, zeta
from wreathlitt.symfunc import convert, omega, s_basis
from wreathlitt.wreath import (
    OrderMismatchError,
    WreathLabel,
    WreathSeries,
    centralizer_order,
    characteristic_polynomial,
    conjugacy_class_size,
    evaluation_kernel,
    evaluation_kernel_product_form,
    format_label,
    frobenius_characteristic,
    identity_label,
    irreducible_character,
    irreducible_dimension,
    parse_label,
    power_trace,
    schur_at_eigenvalues,
    wreath_class_labels,
    wreath_inner_product,
)


def lab(order, mapping):
    return WreathLabel.from_mapping(order, mapping)


def test_label_enumeration():
    assert len(wreath_class_labels(4, 1)) == 5
    two = wreath_class_labels(2, 2)
    assert two == [
        WreathLabel(2, ((2,), ())),
        WreathLabel(2, ((1, 1), ())),
        WreathLabel(2, ((1,), (1,))),
        WreathLabel(2, ((), (2,))),
        WreathLabel(2, ((), (1, 1))),
    ]
    assert len(wreath_class_labels(2, 3)) == 9


def test_centralizer_orders():
    assert centralizer_order(lab(1, {0: (1, 1, 1)})) == 6
    assert centralizer_order(lab(2, {0: (1,), 1: (1,)})) == 4
    assert centralizer_order(lab(2, {1: (2,)})) == 4


def _enumerate_class_sizes(order, n):
    # independent count: walk every group element, read off its class label
    sizes = {}
    for exponents in itertools.product(range(order), repeat=n):
        for perm in itertools.permutations(range(n)):
            slots = [[] for _ in range(order)]
            seen = [False] * n
            for start in range(n):
                if seen[start]:
                    continue
                total, length, cursor = 0, 0, start
                while not seen[cursor]:
                    seen[cursor] = True
                    total += exponents[cursor]
                    cursor = perm[cursor]
                    length += 1
                slots[total % order].append(length)
            key = tuple(tuple(sorted(s, reverse=True)) for s in slots)
            sizes[key] = sizes.get(key, 0) + 1
    return sizes


def test_class_sizes_against_enumeration():
    for order, n in [(1, 3), (2, 2), (2, 3), (3, 2)]:
        sizes = _enumerate_class_sizes(order, n)
        for rho in wreath_class_labels(n, order):
            assert conjugacy_class_size(rho) == sizes[rho.parts], rho
    assert conjugacy_class_size(lab(2, {0: (1,), 1: (1,)})) == 2
    assert conjugacy_class_size(lab(1, {0: (3,)})) == 2


def test_class_sizes_sum_to_group_order():
    for order in (1, 2, 3, 4):
        for n in (1, 2, 3, 4, 5):
            total = sum(conjugacy_class_size(r) for r in wreath_class_labels(n, order))
            assert total == order**n * factorial(n)


def test_characteristic_polynomial_examples():
    one = Cyclotomic.from_rational(1, 2)
    assert characteristic_polynomial(lab(2, {1: (2,)})) == (
        one,
        Cyclotomic.from_rational(0, 2),
        one,
    )  # 1 + t^2
    poly = characteristic_polynomial(lab(1, {0: (1, 1)}))
    assert [c.to_rational() for c in poly] == [1, -2, 1]  # (1-t)^2
    quartic = characteristic_polynomial(lab(4, {1: (1,), 2: (1,)}))
    # (1 - z4 t)(1 + t) = 1 + (1 - z4)t - z4 t^2
    assert quartic == (zeta(4, 0), 1 - zeta(4), -zeta(4))


def test_characteristic_polynomial_shape():
    for order in (1, 2, 3, 4):
        for n in range(6):
            for rho in wreath_class_labels(n, order):
                poly = characteristic_polynomial(rho)
                assert len(poly) == rho.size + 1
                assert poly[0] == 1
                assert poly[-1]  # leading coefficient nonzero


def test_newton_consistency_with_power_traces():
    for order in (1, 2, 3):
        for n in range(4):
            for rho in wreath_class_labels(n, order):
                poly = characteristic_polynomial(rho)
                sums = newton_power_sums_from_poly(list(poly), 2 * n)
                for r, value in enumerate(sums, start=1):
                    assert value == power_trace(rho, r), (rho, r)


def test_power_trace_examples():
    rho = lab(2, {1: (2,)})
    assert power_trace(rho, 1) == 0
    assert power_trace(rho, 2) == -2
    for n in (1, 2, 4):
        for r in (1, 2, 3):
            assert power_trace(identity_label(n, 1), r) == n
    assert power_trace(lab(3, {1: (1,)}), 3) == 1


def test_schur_at_eigenvalues():
    rho = lab(2, {1: (1,)})
    assert schur_at_eigenvalues((1,), rho) == power_trace(rho, 1)
    assert schur_at_eigenvalues((2, 1), lab(1, {0: (1, 1)})) == 2
    assert schur_at_eigenvalues((2,), lab(2, {1: (2,)})) == -1
    # more rows than eigenvalues: the zero specialization
    assert schur_at_eigenvalues((1, 1, 1), lab(2, {1: (2,)})) == 0


def test_evaluation_kernel():
    empty = WreathLabel(2, ((), ()))
    assert evaluation_kernel(empty, 3).terms == {(): Fraction(1)}
    assert evaluation_kernel(lab(1, {0: (1,)}), 3) == omega(3)
    signs = evaluation_kernel(lab(2, {1: (1,)}), 2)
    # product over (1 + x_i)^(-1): alternating homogeneous sum
    assert convert(signs, "h").terms == {(): 1, (1,): -1, (2,): 1}


def test_evaluation_kernel_dual_construction():
    for order in (1, 2, 3):
        for n in range(4):
            for rho in wreath_class_labels(n, order):
                a = evaluation_kernel(rho, 4)
                b = evaluation_kernel_product_form(rho, 4)
                assert a == b, rho


def test_frobenius_characteristic_examples():
    half = Fraction(1, 2)
    sign = frobenius_characteristic(lab(2, {1: (1,)}))
    assert sign.coefficient(lab(2, {0: (1,)})) == half
    assert sign.coefficient(lab(2, {1: (1,)})) == -half
    triv = frobenius_characteristic(lab(2, {0: (1,)}))
    assert triv.coefficient(lab(2, {0: (1,)})) == half
    assert triv.coefficient(lab(2, {1: (1,)})) == half
    # m=1 reduces to the classical Frobenius expansion of a Schur element
    classical = frobenius_characteristic(lab(1, {0: (2, 1)}))
    s_in_p = convert(s_basis((2, 1)), "p")
    for mu, coeff in s_in_p.terms.items():
        assert classical.coefficient(lab(1, {0: mu})) == coeff


def test_wreath_character_orthogonality():
    for order in (1, 2, 3):
        for n in range(4):
            labels = wreath_class_labels(n, order)
            chars = {
                rho: {s: irreducible_character(rho, s) for s in labels}
                for rho in labels
            }
            for a in labels:
                for b in labels:
                    total = Cyclotomic.from_rational(0, order)
                    for s in labels:
                        total = total + Fraction(1, centralizer_order(s)) * chars[a][
                            s
                        ] * chars[b][s].conjugate()
                    assert total == (1 if a == b else 0), (a, b)


def test_character_at_identity_is_dimension():
    for order in (1, 2, 3):
        for n in range(1, 5):
            ident = identity_label(n, order)
            for rho in wreath_class_labels(n, order):
                assert irreducible_character(rho, ident) == irreducible_dimension(rho)


def test_dimension_formula():
    assert irreducible_dimension(lab(2, {0: (1,), 1: (1,)})) == 2
    assert irreducible_dimension(lab(3, {0: (2, 1)})) == 2
    assert irreducible_dimension(lab(2, {0: (2,), 1: (1, 1)})) == 6


def test_wreath_inner_product():
    rng = random.Random(3)
    pool = [r for n in range(5) for r in wreath_class_labels(n, 3)]
    for rho in rng.sample(pool, 10):
        p = WreathSeries.p_element(rho)
        assert wreath_inner_product(p, p) == centralizer_order(rho)
    a, b = pool[3], pool[7]
    assert wreath_inner_product(WreathSeries.p_element(a), WreathSeries.p_element(b)) == 0
    with pytest.raises(OrderMismatchError):
        wreath_inner_product(WreathSeries.one(2), WreathSeries.one(3))


def test_schur_elements_are_orthonormal_under_bar_pairing():
    for order in (1, 2, 3):
        for n in range(4):
            labels = wreath_class_labels(n, order)
            chars = {r: frobenius_characteristic(r) for r in labels}
            for a in labels:
                for b in labels:
                    value = wreath_inner_product(chars[a], chars[b].conjugate())
                    assert value == (1 if a == b else 0)


def test_bar_involution():
    rho = lab(4, {1: (2, 1), 3: (1,)})
    p = WreathSeries.p_element(rho)
    assert p.conjugate() == p
    series = p * zeta(4)
    assert series.conjugate().coefficient(rho) == -zeta(4)
    rng = random.Random(8)
    terms = {
        r: zeta(4, rng.randrange(4)) * Fraction(rng.randint(1, 5), 3)
        for r in rng.sample(wreath_class_labels(3, 4), 5)
    }
    f = WreathSeries(4, terms)
    assert f.conjugate().conjugate() == f


def test_label_parse_format():
    rho = parse_label("0:2,1;1:1", 3)
    assert rho == lab(3, {0: (2, 1), 1: (1,)})
    assert format_label(rho) == "0:2,1;1:1"
    assert parse_label("", 2) == WreathLabel(2, ((), ()))
    # exponents are reduced mod the order
    assert parse_label("2:1", 2) == lab(2, {0: (1,)})
    with pytest.raises(ValueError):
        parse_label("0:1;2:1", 2)  # slot 0 assigned twice after reduction
    with pytest.raises(ValueError):
        parse_label("nonsense", 2)
