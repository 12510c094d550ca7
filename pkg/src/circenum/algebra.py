"""Exact cycle-index algebra.

The counting formulas all have the shape: take the cycle index of a cyclic
group,

    I_n = (1/n) * sum_{r | n} phi(r) * x_r^(n/r),

substitute a polynomial in z (or a constant) for each variable x_r, and divide
exactly by n.  This module supplies the three representations involved:

* UniPoly    -- univariate integer polynomials in z (the counting series);
* CycleIndex -- the divisor-indexed term list of I_n;
* SymPoly    -- sparse multivariate polynomials over Q in the formal variable
                families x_1, x_2, ... and y_1, y_2, ..., used to state and
                verify identities between cycle indices symbolically.

Substitutions may target x_r directly (Value) or its square (SquareValue,
meaning a value is prescribed for x_r^2); the latter is legal only where the
exponent on x_r is even, which is asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

from .errors import InexactDivisionError, ParityError
from .numtheory import divisors, euler_phi


class UniPoly:
    """Univariate polynomial in z with arbitrary-precision integer coefficients.

    Immutable; coefficient index = power of z; trailing zeros are trimmed so
    equality is structural.  The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "UniPoly":
        return cls([0] * power + [coeff])

    @classmethod
    def one_plus(cls, power: int, coeff: int = 1) -> "UniPoly":
        """1 + coeff * z^power."""
        if power == 0:
            return cls((1 + coeff,))
        return cls([1] + [0] * (power - 1) + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def coeff(self, r: int) -> int:
        return self.coeffs[r] if 0 <= r < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return UniPoly(out)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = UniPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> "UniPoly":
        return UniPoly(c * x for x in self.coeffs)

    def stretch(self, k: int) -> "UniPoly":
        """Substitute z -> z^k."""
        if k < 1:
            raise ValueError("stretch factor must be >= 1")
        out = [0] * (k * len(self.coeffs))
        for r, c in enumerate(self.coeffs):
            out[k * r] = c
        return UniPoly(out)

    def divide_exact(self, n: int) -> "UniPoly":
        """Divide every coefficient by n; remainder anywhere is an error."""
        out = []
        for r, c in enumerate(self.coeffs):
            q, rem = divmod(c, n)
            if rem:
                raise InexactDivisionError(
                    f"coefficient {c} of z^{r} is not divisible by {n}")
            out.append(q)
        return UniPoly(out)

    def divide_exact_poly(self, divisor: "UniPoly") -> "UniPoly":
        """Exact polynomial division (divisor must have leading coefficient 1)."""
        if divisor.is_zero() or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic and nonzero")
        if self.is_zero():
            return UniPoly()
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            quot[i - dd] = c
            for j, dc in enumerate(divisor.coeffs):
                rem[i - dd + j] -= c * dc
        if any(rem):
            raise InexactDivisionError("polynomial division left a remainder")
        return UniPoly(quot)

    def __call__(self, at: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * at + c
        return result

    def to_json(self) -> list[int]:
        """Coefficient array, index = power of z."""
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"


# Marker for evaluating an even-power series at a square root of -1.
GAUSSIAN_UNIT = object()


def eval_poly(p: UniPoly, at: Union[int, object]) -> int:
    """Evaluate p at a signed integer, or at GAUSSIAN_UNIT.

    The GAUSSIAN_UNIT evaluation sends z^2 -> -1, i.e. returns
    sum_{r even} (-1)^(r/2) * c_r, and requires every odd-power coefficient
    to vanish (otherwise the value would not be an integer).
    """
    if at is GAUSSIAN_UNIT:
        for r in range(1, len(p.coeffs), 2):
            if p.coeffs[r]:
                raise ValueError(
                    f"gaussian-unit evaluation needs even powers only; z^{r} present")
        return sum((-1) ** (r // 2) * c for r, c in enumerate(p.coeffs) if r % 2 == 0)
    return p(at)


@dataclass(frozen=True)
class CycleIndexTerm:
    var_index: int   # divisor r, the subscript of x_r
    weight: int      # phi(r)
    exponent: int    # n / r


@dataclass(frozen=True)
class CycleIndex:
    """The cycle index of the regular cyclic group of order n, term by divisor."""

    order: int
    terms: tuple[CycleIndexTerm, ...]


def cycle_index(n: int) -> CycleIndex:
    if n < 1:
        raise ValueError(f"cycle_index requires n >= 1, got {n}")
    terms = tuple(CycleIndexTerm(r, euler_phi(r), n // r) for r in divisors(n))
    return CycleIndex(order=n, terms=terms)


@dataclass(frozen=True)
class Value:
    """Assign poly to x_r."""

    poly: UniPoly


@dataclass(frozen=True)
class SquareValue:
    """Assign poly to x_r^2 (usable only where x_r carries an even exponent)."""

    poly: UniPoly


Assignment = Union[Value, SquareValue]
Selector = Union[str, tuple[int, ...]]  # "all" | "even" | "odd" | explicit indices


class SubstitutionRule:
    """Per-divisor assignment of polynomial values to x_r or x_r^2.

    Built from (selector, factory) clauses; the first matching clause wins.
    Selectors are "all", "even", "odd" or an explicit tuple of indices, and a
    factory maps the index r to a Value or SquareValue.
    """

    def __init__(self, clauses: list[tuple[Selector, Callable[[int], Assignment]]]):
        self._clauses = list(clauses)

    @classmethod
    def uniform(cls, factory: Callable[[int], Assignment]) -> "SubstitutionRule":
        return cls([("all", factory)])

    @classmethod
    def by_parity(cls, even: Callable[[int], Assignment],
                  odd: Callable[[int], Assignment]) -> "SubstitutionRule":
        return cls([("even", even), ("odd", odd)])

    def assignment(self, r: int) -> Assignment:
        for selector, factory in self._clauses:
            if selector == "all":
                return factory(r)
            if selector == "even" and r % 2 == 0:
                return factory(r)
            if selector == "odd" and r % 2 == 1:
                return factory(r)
            if isinstance(selector, tuple) and r in selector:
                return factory(r)
        raise ValueError(f"substitution rule does not cover index {r}")


def _term_value(assignment: Assignment, exponent: int, where: str) -> UniPoly:
    """Resolve one cycle-index term x_r^exponent under an assignment."""
    if isinstance(assignment, SquareValue):
        if exponent % 2:
            raise ParityError(
                f"square-value substitution at {where} needs an even exponent, "
                f"got {exponent}")
        return assignment.poly ** (exponent // 2)
    return assignment.poly ** exponent


def power_sum(ci: CycleIndex, rule: SubstitutionRule,
              exponent_factor: int = 1) -> UniPoly:
    """The undivided sum  sum_{r | n} phi(r) * v_r^((n/r) * exponent_factor).

    v_r is the value assigned to x_r; an exponent_factor of p+1 realizes the
    argument rewriting x_r -> x_r^(p+1) before substitution.
    """
    total = UniPoly()
    for term in ci.terms:
        a = rule.assignment(term.var_index)
        e = term.exponent * exponent_factor
        value = _term_value(a, e, f"x_{term.var_index} of I_{ci.order}")
        total = total + value.scale(term.weight)
    return total


def paired_power_sum(ci: CycleIndex, rule_x: SubstitutionRule,
                     rule_y: SubstitutionRule) -> UniPoly:
    """The undivided sum for the interleaved product x_r y_r:

        sum_{r | n} phi(r) * (v_r * w_r)^(n/r)

    Square-valued assignments must pair up: sqrt(A)*sqrt(B) = sqrt(A*B), so a
    SquareValue on both sides combines into one SquareValue on the product.
    """
    total = UniPoly()
    for term in ci.terms:
        ax = rule_x.assignment(term.var_index)
        ay = rule_y.assignment(term.var_index)
        if isinstance(ax, SquareValue) != isinstance(ay, SquareValue):
            raise ParityError(
                f"mixed plain/square assignment for x_{term.var_index} y_{term.var_index}")
        product = ax.poly * ay.poly
        paired: Assignment = (SquareValue(product) if isinstance(ax, SquareValue)
                              else Value(product))
        value = _term_value(paired, term.exponent,
                            f"x_{term.var_index}y_{term.var_index} of I_{ci.order}")
        total = total + value.scale(term.weight)
    return total


def substitute(ci: CycleIndex, rule: SubstitutionRule) -> UniPoly:
    """Apply the rule to the cycle index and divide exactly by the order."""
    return power_sum(ci, rule).divide_exact(ci.order)


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials over Q
# ---------------------------------------------------------------------------

# A monomial is a sorted tuple of ((family, index), exponent) with positive
# exponents; families are the single characters "x" and "y".
Monomial = tuple[tuple[tuple[str, int], int], ...]


class SymPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c:
                clean[mono] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("SymPoly is immutable")

    @classmethod
    def zero(cls) -> "SymPoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "SymPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def variable(cls, family: str, index: int, exponent: int = 1) -> "SymPoly":
        if family not in ("x", "y"):
            raise ValueError(f"unknown variable family {family!r}")
        if exponent < 1:
            raise ValueError("variable exponent must be positive")
        return cls({(((family, index), exponent),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return SymPoly(out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return SymPoly(out)

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps = dict(m1)
                for var, e in m2:
                    exps[var] = exps.get(var, 0) + e
                mono = tuple(sorted(exps.items()))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return SymPoly(out)

    def __pow__(self, exponent: int) -> "SymPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = SymPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "SymPoly":
        factor = Fraction(c)
        return SymPoly({m: factor * v for m, v in self.terms.items()})

    def to_json(self) -> list[dict]:
        records = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            records.append({
                "monomial": [[f"{fam}{idx}", e] for (fam, idx), e in mono],
                "num": c.numerator,
                "den": c.denominator,
            })
        return records

    def __repr__(self) -> str:
        if not self.terms:
            return "SymPoly(0)"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            vars_ = "*".join(f"{fam}{idx}^{e}" if e > 1 else f"{fam}{idx}"
                             for (fam, idx), e in mono)
            bits.append(f"{c}*{vars_}" if vars_ else f"{c}")
        return "SymPoly(" + " + ".join(bits) + ")"


def sym_arith(a: SymPoly, b, op: str) -> SymPoly:
    """Named arithmetic entry point: add | sub | mul | scale."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


ExponentMode = Union[None, str, Callable[[int], Union[None, str]]]


def to_sym(ci: CycleIndex, family: str = "x",
           index_transform: Callable[[int], int | None] | None = None,
           exponent_transform: ExponentMode = None) -> SymPoly:
    """Render a cycle index as a formal SymPoly, with argument rewriting.

    index_transform maps each divisor r to the target variable index; returning
    None substitutes 0 for that variable, dropping the term (the interleaved-
    zero argument lists).  exponent_transform is None (plain), "square"
    (x_r -> x_r^2), "sqrt" (x_r -> a square root, realized by halving the even
    exponent), or a callable choosing a mode per divisor.  A "sqrt" on an odd
    exponent raises ParityError rather than producing fractional exponents.
    """
    result = SymPoly.zero()
    for term in ci.terms:
        r = term.var_index
        target = index_transform(r) if index_transform else r
        if target is None:
            continue
        mode = exponent_transform(r) if callable(exponent_transform) else exponent_transform
        e = term.exponent
        if mode == "square":
            e = 2 * e
        elif mode == "sqrt":
            if e % 2:
                raise ParityError(
                    f"square root of x_{target} appears with odd exponent {e}")
            e //= 2
        elif mode is not None:
            raise ValueError(f"unknown exponent mode {mode!r}")
        mono = SymPoly.variable(family, target, e)
        result = result + mono.scale(Fraction(term.weight, ci.order))
    return result
