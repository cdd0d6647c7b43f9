"""Independent verification oracle: exact polynomials and Groebner bases.

Sparse multivariate polynomials over the rationals (`fractions.Fraction`,
never floats), textbook Buchberger with the normal selection strategy and
the coprimality / chain criteria, and bounded radical membership used to
confirm that certificate polynomials generate an ideal up to radical.

This module is deliberately self-contained and shares no combinatorial
shortcuts with the rest of the package: membership answers come from
normal forms against a reduced basis, nothing else.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Protocol

from .ideals import Ideal, InvariantViolation, Monomial, mono_vars

Exponents = tuple[int, ...]


class BudgetExceededError(RuntimeError):
    """The Buchberger pair budget was exhausted before completion."""


def _grevlex_key(e: Exponents):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e: Exponents):
    return e


ORDER_KEYS: dict[str, Callable[[Exponents], object]] = {
    "degrevlex": _grevlex_key,
    "lex": _lex_key,
}


class Poly:
    """Exact sparse polynomial: exponent vector -> nonzero rational."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Exponents, Fraction] | None = None):
        self.n = n
        clean: dict[Exponents, Fraction] = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(e) != n:
                    raise ValueError("exponent vector length must equal n")
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> Poly:
        return cls(n, {tuple([0] * n): Fraction(c)})

    @classmethod
    def from_monomial(cls, m: Monomial, n: int, coeff=1, power: int = 1) -> Poly:
        e = [0] * n
        for v in mono_vars(m):
            if v > n:
                raise ValueError(f"variable x{v} out of range for n={n}")
            e[v - 1] = power
        return cls(n, {tuple(e): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = Poly.zero(self.n)
        p.terms = out
        return p

    def __neg__(self) -> Poly:
        p = Poly.zero(self.n)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = Fraction(other)
            p = Poly.zero(self.n)
            if c:
                p.terms = {e: c * v for e, v in self.terms.items()}
            return p
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = Poly.zero(self.n)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def leading(self, order: str = "degrevlex") -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = ORDER_KEYS[order]
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def monic(self, order: str = "degrevlex") -> Poly:
        _, c = self.leading(order)
        return self * (Fraction(1) / c)

    def __repr__(self) -> str:
        return f"Poly({poly_str(self)!r})"


def _exp_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exp_sub(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _term_str(e: Exponents, c: Fraction) -> str:
    factors = []
    for i, exp in enumerate(e, start=1):
        if exp == 1:
            factors.append(f"x{i}")
        elif exp > 1:
            factors.append(f"x{i}^{exp}")
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


def poly_str(p: Poly, order: str = "degrevlex") -> str:
    """Render in the grammar ``term (+ term)*``; zero prints as ``0``."""
    if p.is_zero():
        return "0"
    key = ORDER_KEYS[order]
    return "+".join(
        _term_str(e, p.terms[e]) for e in sorted(p.terms, key=key, reverse=True)
    )


_VAR_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_NUM_FACTOR = re.compile(r"^(\d+)(?:/(\d+))?$")


def parse_poly(text: str, n: int) -> Poly:
    """Parse ``term (+ term)*`` where a term is ``[-]coef? x<i>(^<e>)?*...``."""
    text = text.strip()
    if text == "0":
        return Poly.zero(n)
    terms: dict[Exponents, Fraction] = {}
    for raw in text.split("+"):
        part = raw.strip()
        if not part:
            raise ValueError("empty term")
        sign = Fraction(1)
        if part.startswith("-"):
            sign = Fraction(-1)
            part = part[1:].strip()
        coeff = sign
        e = [0] * n
        for factor in part.split("*"):
            factor = factor.strip()
            m = _VAR_FACTOR.match(factor)
            if m is not None:
                v = int(m.group(1))
                if not 1 <= v <= n:
                    raise ValueError(f"variable x{v} out of range for n={n}")
                e[v - 1] += int(m.group(2) or 1)
                continue
            m = _NUM_FACTOR.match(factor)
            if m is not None:
                coeff *= Fraction(int(m.group(1)), int(m.group(2) or 1))
                continue
            raise ValueError(f"malformed factor {factor!r}")
        key = tuple(e)
        s = terms.get(key, Fraction(0)) + coeff
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
    return Poly(n, terms)


def reduce(f: Poly, basis: Iterable[Poly], order: str = "degrevlex") -> Poly:
    """Normal form of f modulo the basis (full multivariate division)."""
    key = ORDER_KEYS[order]
    divisors = [
        (max(b.terms, key=key), b) for b in basis if b.terms
    ]
    work = dict(f.terms)
    remainder: dict[Exponents, Fraction] = {}
    while work:
        lt = max(work, key=key)
        lc = work[lt]
        for lm, b in divisors:
            if _exp_divides(lm, lt):
                shift = _exp_sub(lt, lm)
                factor = lc / b.terms[lm]
                for e, c in b.terms.items():
                    te = tuple(x + y for x, y in zip(e, shift))
                    s = work.get(te, Fraction(0)) - factor * c
                    if s:
                        work[te] = s
                    else:
                        work.pop(te, None)
                break
        else:
            remainder[lt] = lc
            del work[lt]
    out = Poly.zero(f.n)
    out.terms = remainder
    return out


def s_polynomial(f: Poly, g: Poly, order: str = "degrevlex") -> Poly:
    lf, cf = f.leading(order)
    lg, cg = g.leading(order)
    lcm = _exp_lcm(lf, lg)
    mf = Poly(f.n, {_exp_sub(lcm, lf): Fraction(1) / cf})
    mg = Poly(g.n, {_exp_sub(lcm, lg): Fraction(1) / cg})
    return mf * f - mg * g


def buchberger(
    gens: Iterable[Poly],
    order: str = "degrevlex",
    max_pairs: int = 20000,
    check: bool = True,
) -> tuple[Poly, ...]:
    """Reduced Groebner basis of the input polynomials.

    Pair selection is the normal (minimal lcm in the term order) strategy;
    coprime leading terms and the chain criterion prune pairs.  Processing
    more than ``max_pairs`` pairs raises :class:`BudgetExceededError`.
    With ``check`` the defining property (every S-polynomial of the output
    reduces to zero) is asserted before returning.
    """
    key = ORDER_KEYS[order]
    basis = [g.monic(order) for g in gens if g and g.terms]
    if not basis:
        raise ValueError("need at least one nonzero generator")
    lms = [b.leading(order)[0] for b in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed: set[tuple[int, int]] = set()
    handled = 0
    while pairs:
        i, j = min(pairs, key=lambda p: key(_exp_lcm(lms[p[0]], lms[p[1]])))
        pairs.remove((i, j))
        processed.add((i, j))
        handled += 1
        if handled > max_pairs:
            raise BudgetExceededError(f"pair budget {max_pairs} exceeded")
        lcm = _exp_lcm(lms[i], lms[j])
        if lcm == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue  # coprime leading terms
        chained = False
        for k in range(len(basis)):
            if k in (i, j) or not _exp_divides(lms[k], lcm):
                continue
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 in processed and p2 in processed:
                chained = True
                break
        if chained:
            continue
        h = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        if h:
            h = h.monic(order)
            basis.append(h)
            lms.append(h.leading(order)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    # Minimalize: drop members whose leading monomial another one divides.
    keep: list[int] = []
    for i in sorted(range(len(basis)), key=lambda i: key(lms[i])):
        if not any(_exp_divides(lms[k], lms[i]) for k in keep):
            keep.append(i)
    minimal = [basis[i] for i in keep]
    reduced = []
    for i, b in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        nf = reduce(b, others, order) if others else b
        reduced.append(nf.monic(order))
    reduced.sort(key=lambda b: key(b.leading(order)[0]), reverse=True)
    if check:
        for i in range(len(reduced)):
            for j in range(i + 1, len(reduced)):
                if reduce(s_polynomial(reduced[i], reduced[j], order), reduced, order):
                    raise InvariantViolation(
                        "S-polynomial of the output basis did not reduce to zero"
                    )
    return tuple(reduced)


def member(f: Poly, basis: Iterable[Poly], order: str = "degrevlex") -> bool:
    """Ideal membership against a Groebner basis via the normal form."""
    return reduce(f, basis, order).is_zero()


class _Certificate(Protocol):
    polys: tuple[Poly, ...]
    target: Ideal


@dataclass(frozen=True)
class RadicalCheck:
    """Outcome of bounded radical verification.

    ``powers`` records, per generator, the least N <= cap with u^N in the
    certificate ideal; ``failures`` lists generators not certified within
    the cap (inconclusive, never a disproof).
    """

    verified: bool
    powers: dict[Monomial, int]
    failures: tuple[Monomial, ...]
    cap: int


def verify_radical_cert(
    cert: _Certificate,
    cap: int = 8,
    order: str = "degrevlex",
    max_pairs: int = 20000,
) -> RadicalCheck:
    """Check that the certificate polynomials generate the target up to radical.

    Containment one way is structural: every term of every certificate
    polynomial must lie in the target (a polynomial lies in a monomial
    ideal iff each of its terms does).  The other containment is witnessed
    by finding, for every generator u, a power u^N (N <= cap) inside the
    ideal generated by the certificate polynomials.
    """
    target = cert.target
    n = target.n
    genset = target.gens
    for p in cert.polys:
        if not isinstance(p, Poly) or p.n != n:
            raise ValueError("certificate polynomials must live in the target ring")
        if p.is_zero():
            raise ValueError("certificate contains the zero polynomial")
        for e in p.terms:
            sup = sum(1 << (i) for i, exp in enumerate(e) if exp)
            if not any(g & sup == g for g in genset):
                raise ValueError(
                    f"certificate term {_term_str(e, p.terms[e])} lies outside the target ideal"
                )
    basis = buchberger(cert.polys, order=order, max_pairs=max_pairs)
    powers: dict[Monomial, int] = {}
    failures: list[Monomial] = []
    for g in genset:
        u = Poly.from_monomial(g, n)
        current = u
        found = None
        for power in range(1, cap + 1):
            nf = reduce(current, basis, order)
            if nf.is_zero():
                found = power
                break
            current = nf * u
        if found is None:
            failures.append(g)
        else:
            powers[g] = found
    return RadicalCheck(
        verified=not failures,
        powers=powers,
        failures=tuple(failures),
        cap=cap,
    )
