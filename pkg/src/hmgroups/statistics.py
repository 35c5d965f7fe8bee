"""Harmonic mean of element orders: exact statistics and closed forms.

For a finite group G, m(G) is the sum of reciprocals of element orders
and h_m(G) = |G| / m(G).  Cyclic and dihedral groups have closed forms
which evaluate without any enumeration, and products with pairwise
coprime factor orders multiply, so expressions like a 19.8M-element
direct product are evaluated symbolically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import catalog as catalog_mod
from . import families
from .exactmath import (Rational, divisors, euler_phi, factorize, format_rational,
                        is_integer, rational_decimal, smallest_prime_divisor)
from .groupkernel import CapExceeded, Group, OrderSpectrum, direct_product

EVAL_ENUM_CAP = 4096


# -- statistics of concrete groups -------------------------------------------


def m_of_spectrum(spectrum: OrderSpectrum) -> Rational:
    return sum((Fraction(n, d) for d, n in spectrum), Fraction(0))


def m_of(g: Group) -> Rational:
    """m(G) = sum over elements of 1/order, computed from the spectrum."""
    return m_of_spectrum(g.order_spectrum())


def h_m_of(g: Group) -> Rational:
    """h_m(G) = |G| / m(G), exact."""
    return Fraction(g.size) / m_of(g)


def m_cyclic_closed(n: int) -> Rational:
    """m(C_n) as the product over prime powers p^k || n of ((k+1)(p-1)+1)/p."""
    num = 1
    den = 1
    for p, k in factorize(n):
        num *= (k + 1) * (p - 1) + 1
        den *= p
    return Fraction(num, den)


def h_m_cyclic_closed(n: int) -> Rational:
    return Fraction(n) / m_cyclic_closed(n)


def h_m_dihedral_closed(n: int) -> Rational:
    """h_m of the dihedral group of order 2n: 2n / (m(C_n) + n/2)."""
    if n < 2:
        raise ValueError(f"dihedral closed form needs n >= 2, got {n}")
    return Fraction(2 * n) / (m_cyclic_closed(n) + Fraction(n, 2))


def h_m_pgroup_closed(p: int, n: int, c_count: int) -> Rational:
    """h_m of a p-group of order p^n with c_count cyclic subgroups:
    p^(n+1) / ((p-1) * c_count + 1)."""
    if p < 2 or n < 0 or c_count < 1:
        raise ValueError("need p >= 2, n >= 0, c_count >= 1")
    return Fraction(p ** (n + 1), (p - 1) * c_count + 1)


def lemma_bound(g: Group) -> Rational:
    """p|G| / ((p-1)|C(G)| + 1), p the smallest prime divisor of |G|.

    A claimed lower bound for h_m; for p-groups it equals h_m exactly.
    The verifier tests where it actually holds.
    """
    if g.size < 2:
        raise ValueError("bound undefined for the trivial group")
    p = smallest_prime_divisor(g.size)
    return Fraction(p * g.size, (p - 1) * g.cyclic_subgroup_count() + 1)


def weak_bound(order: int) -> Rational:
    """p|G| / ((p-1)|G| + 1): the bound with |C(G)| relaxed to |G|."""
    if order < 2:
        raise ValueError("bound undefined for the trivial group")
    p = smallest_prime_divisor(order)
    return Fraction(p * order, (p - 1) * order + 1)


# -- symbolic group expressions ----------------------------------------------


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    order: int  # 2n


@dataclass(frozen=True)
class GenQuaternion:
    order: int


@dataclass(frozen=True)
class SemiDihedral:
    order: int


@dataclass(frozen=True)
class ElemAbelian:
    p: int
    k: int


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class SL23:
    pass


@dataclass(frozen=True)
class Dicyclic:
    n: int


@dataclass(frozen=True)
class CatalogRef:
    order: int
    id: int


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        flat = []
        for f in self.factors:
            if isinstance(f, Product):
                flat.extend(f.factors)
            else:
                flat.append(f)
        object.__setattr__(self, "factors", tuple(flat))


GroupExpr = (Cyclic | Dihedral | GenQuaternion | SemiDihedral | ElemAbelian
             | Symmetric | SL23 | Dicyclic | CatalogRef | Product)


def expr_order(e: GroupExpr) -> int:
    """Group order of an expression, computed without enumeration."""
    match e:
        case Cyclic(n):
            return n
        case Dihedral(order) | GenQuaternion(order) | SemiDihedral(order):
            return order
        case ElemAbelian(p, k):
            return p ** k
        case Symmetric(n):
            return math.factorial(n)
        case SL23():
            return 24
        case Dicyclic(n):
            return 4 * n
        case CatalogRef(order, _):
            return order
        case Product(factors):
            result = 1
            for f in factors:
                result *= expr_order(f)
            return result
    raise TypeError(f"not a group expression: {e!r}")


def expr_text(e: GroupExpr) -> str:
    """Canonical expression text; parsing it reproduces the expression."""
    match e:
        case Cyclic(n):
            return f"C({n})"
        case Dihedral(order):
            return f"D({order})"
        case GenQuaternion(order):
            return f"Q({order})"
        case SemiDihedral(order):
            return f"SD({order})"
        case ElemAbelian(p, k):
            return f"E({p},{k})"
        case Symmetric(n):
            return f"S({n})"
        case SL23():
            return "SL23"
        case Dicyclic(n):
            return f"Dic({n})"
        case CatalogRef(order, gid):
            return f"Cat({order},{gid})"
        case Product(factors):
            return " x ".join(expr_text(f) for f in factors)
    raise TypeError(f"not a group expression: {e!r}")


def realize(e: GroupExpr, entries=None, cap: int = EVAL_ENUM_CAP) -> Group:
    """Concrete Group for an expression; enumeration-capped."""
    order = expr_order(e)
    if order > cap:
        raise CapExceeded(
            f"{expr_text(e)} has order {order}, above the enumeration cap {cap}; "
            f"raise the cap or use a coprime product / closed-form expression")
    match e:
        case Cyclic(n):
            return families.cyclic(n)
        case Dihedral(order):
            return families.dihedral(order)
        case GenQuaternion(order):
            return families.generalized_quaternion(order)
        case SemiDihedral(order):
            return families.semidihedral(order)
        case ElemAbelian(p, k):
            return families.elementary_abelian(p, k)
        case Symmetric(n):
            return families.symmetric(n)
        case SL23():
            return families.sl23()
        case Dicyclic(n):
            return families.dicyclic(n)
        case CatalogRef(order, gid):
            if entries is None:
                entries = catalog_mod.default_catalog()
            return catalog_mod.get(entries, order, gid)
        case Product(factors):
            g = realize(factors[0], entries, cap)
            for f in factors[1:]:
                g = direct_product(g, realize(f, entries, cap), cap=cap)
            return g
    raise TypeError(f"not a group expression: {e!r}")


# -- evaluation reports -------------------------------------------------------


@dataclass(frozen=True)
class StatReport:
    label: str
    order: int
    exponent: int
    spectrum: OrderSpectrum | None
    m: Rational
    h_m: Rational
    c_count: int | None
    integer: bool
    path: str  # "brute" | "closed_form" | "multiplicative"

    def to_dict(self, digits: int = 6) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "exponent": self.exponent,
            "spectrum": ([[d, n] for d, n in self.spectrum.entries]
                         if self.spectrum is not None else None),
            "m": format_rational(self.m),
            "m_approx": rational_decimal(self.m, digits),
            "h_m": format_rational(self.h_m),
            "h_m_approx": rational_decimal(self.h_m, digits),
            "c_count": self.c_count,
            "integer": self.integer,
            "path": self.path,
        }

    def to_json(self, digits: int = 6) -> str:
        return json.dumps(self.to_dict(digits), indent=2)


def report_of_group(g: Group, label: str | None = None,
                    path: str = "brute") -> StatReport:
    spectrum = g.order_spectrum()
    m = m_of_spectrum(spectrum)
    h = Fraction(g.size) / m
    return StatReport(
        label=label or g.label, order=g.size, exponent=spectrum.exponent(),
        spectrum=spectrum, m=m, h_m=h, c_count=spectrum.cyclic_count(),
        integer=is_integer(h), path=path)


def _cyclic_spectrum(n: int) -> OrderSpectrum:
    return OrderSpectrum(tuple((d, euler_phi(d)) for d in divisors(n)))


def _dihedral_spectrum(order: int) -> OrderSpectrum:
    n = order // 2
    counts = dict(_cyclic_spectrum(n).entries)
    counts[2] = counts.get(2, 0) + n
    return OrderSpectrum(tuple(sorted(counts.items())))


def _convolve_spectra(a: OrderSpectrum, b: OrderSpectrum) -> OrderSpectrum:
    counts: dict[int, int] = {}
    for d1, n1 in a.entries:
        for d2, n2 in b.entries:
            d = math.lcm(d1, d2)
            counts[d] = counts.get(d, 0) + n1 * n2
    return OrderSpectrum(tuple(sorted(counts.items())))


def eval_expr(e: GroupExpr, entries=None, cap: int = EVAL_ENUM_CAP) -> StatReport:
    """Evaluate an expression, preferring closed forms and the coprime
    multiplicative split before falling back to enumeration."""
    label = expr_text(e)
    match e:
        case Cyclic(n):
            spectrum = _cyclic_spectrum(n)
            m = m_cyclic_closed(n)
            h = Fraction(n) / m
            return StatReport(label=label, order=n, exponent=n, spectrum=spectrum,
                              m=m, h_m=h, c_count=len(divisors(n)),
                              integer=is_integer(h), path="closed_form")
        case Dihedral(order):
            n = order // 2
            spectrum = _dihedral_spectrum(order)
            m = m_cyclic_closed(n) + Fraction(n, 2)
            h = Fraction(order) / m
            return StatReport(label=label, order=order, exponent=math.lcm(n, 2),
                              spectrum=spectrum, m=m, h_m=h,
                              c_count=len(divisors(n)) + n,
                              integer=is_integer(h), path="closed_form")
        case Product(factors):
            orders = [expr_order(f) for f in factors]
            coprime = all(math.gcd(orders[i], orders[j]) == 1
                          for i in range(len(orders))
                          for j in range(i + 1, len(orders)))
            if coprime:
                parts = [eval_expr(f, entries, cap) for f in factors]
                order = math.prod(orders)
                m = math.prod((p.m for p in parts), start=Fraction(1))
                h = math.prod((p.h_m for p in parts), start=Fraction(1))
                exponent = math.lcm(*(p.exponent for p in parts))
                spectrum = None
                if all(p.spectrum is not None for p in parts):
                    spectrum = parts[0].spectrum
                    for p in parts[1:]:
                        spectrum = _convolve_spectra(spectrum, p.spectrum)
                c_count = None
                if all(p.c_count is not None for p in parts):
                    c_count = math.prod(p.c_count for p in parts)
                return StatReport(label=label, order=order, exponent=exponent,
                                  spectrum=spectrum, m=m, h_m=h, c_count=c_count,
                                  integer=is_integer(h), path="multiplicative")
            return report_of_group(realize(e, entries, cap), label=label)
        case _:
            return report_of_group(realize(e, entries, cap), label=label)
