"""Closed-form circulant counts.

Six graph classes are counted, tagged d (directed), u (undirected),
o (oriented), sd / su (self-complementary directed / undirected) and
t (tournament).  Formulas exist for three order shapes:

* odd prime p        -- all six classes, by substitution into I_(p-1) or
                        I_((p-1)/2);
* twice an odd prime -- d, u, o only;
* odd prime squared  -- all six classes, via the bivariate combination

      (1/p) I_m(x^(p+1)) - (1/p) I_m(x y) + I_m(x) I_m(y)

  with m = p-1 (m = (p-1)/2 for the undirected pair), x_r carrying the
  order-p substitution and y_r its z -> z^p companion.

d, u, o admit generating polynomials by valency; sd, su, t are bare totals.
Every division is performed exactly over the integers, so any transcription
slip surfaces as an InexactDivisionError instead of a silently wrong count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import ConsistencyError, UnsupportedOrderError
from .algebra import (GAUSSIAN_UNIT, SquareValue, SubstitutionRule, UniPoly,
                      Value, cycle_index, eval_poly, paired_power_sum,
                      power_sum, substitute)
from .numtheory import is_prime

CLASSES = ("d", "u", "o", "sd", "su", "t")
VALENCY_CLASSES = ("d", "u", "o")


@dataclass(frozen=True)
class CountResult:
    """A circulant count: total, optional valency series, and its provenance."""

    order: int
    klass: str
    total: int
    by_valency: UniPoly | None = None
    provenance: str = "formula"

    def __post_init__(self):
        if self.by_valency is not None and self.by_valency(1) != self.total:
            raise ConsistencyError(
                f"valency series sums to {self.by_valency(1)}, total is {self.total}")

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "class": self.klass,
            "total": str(self.total),
            "by_valency": ([str(c) for c in self.by_valency.coeffs]
                           if self.by_valency is not None else None),
            "provenance": self.provenance,
        }


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def _require_class(klass: str, allowed=CLASSES) -> None:
    if klass not in allowed:
        raise UnsupportedOrderError(f"class {klass!r} not supported here "
                                    f"(expected one of {allowed})")


def _one_plus(power: int, coeff: int = 1) -> UniPoly:
    return UniPoly.one_plus(power, coeff)


# Substitution recipes per class.  `scale` stretches the z-grid: the order-p^2
# formulas reuse the same shapes with z^r replaced by z^(p*r) on the y side.

def _rule_directed(scale: int = 1) -> SubstitutionRule:
    return SubstitutionRule.uniform(lambda r: Value(_one_plus(scale * r)))


def _rule_undirected(scale: int = 1) -> SubstitutionRule:
    return SubstitutionRule.uniform(lambda r: Value(_one_plus(2 * scale * r)))


def _rule_oriented(scale: int = 1) -> SubstitutionRule:
    return SubstitutionRule.by_parity(
        even=lambda r: Value(UniPoly.constant(1)),
        odd=lambda r: SquareValue(_one_plus(scale * r, 2)))


def _rule_self_complementary() -> SubstitutionRule:
    return SubstitutionRule.by_parity(
        even=lambda r: Value(UniPoly.constant(2)),
        odd=lambda r: Value(UniPoly.zero()))


def _rule_tournament() -> SubstitutionRule:
    return SubstitutionRule.by_parity(
        even=lambda r: Value(UniPoly.zero()),
        odd=lambda r: SquareValue(UniPoly.constant(2)))


def prime_enumerator(p: int, klass: str) -> CountResult:
    """Count circulants of odd prime order p in the given class."""
    _require_odd_prime(p)
    _require_class(klass)
    if klass == "d":
        poly = substitute(cycle_index(p - 1), _rule_directed())
    elif klass == "u":
        poly = substitute(cycle_index((p - 1) // 2), _rule_undirected())
    elif klass == "o":
        poly = substitute(cycle_index(p - 1), _rule_oriented())
    elif klass == "sd":
        return CountResult(p, klass,
                           substitute(cycle_index(p - 1), _rule_self_complementary())(0))
    elif klass == "su":
        return CountResult(p, klass,
                           substitute(cycle_index((p - 1) // 2),
                                      _rule_self_complementary())(0))
    else:  # t
        return CountResult(p, klass,
                           substitute(cycle_index(p - 1), _rule_tournament())(0))
    return CountResult(p, klass, poly(1), poly)


def twice_prime_enumerator(p: int, klass: str) -> CountResult:
    """Count circulants of order 2p (p an odd prime); classes d, u, o only."""
    _require_odd_prime(p)
    _require_class(klass, VALENCY_CLASSES)
    one_plus_z = _one_plus(1)
    if klass == "d":
        base = substitute(cycle_index(p - 1),
                          SubstitutionRule.uniform(lambda r: Value(_one_plus(r) ** 2)))
        poly = base * one_plus_z
    elif klass == "u":
        base = substitute(cycle_index((p - 1) // 2),
                          SubstitutionRule.uniform(lambda r: Value(_one_plus(2 * r) ** 2)))
        poly = base * one_plus_z
    else:  # o: the odd-r substitution is plain here, not square-valued
        poly = substitute(cycle_index(p - 1), SubstitutionRule.by_parity(
            even=lambda r: Value(UniPoly.constant(1)),
            odd=lambda r: Value(_one_plus(r, 2))))
    return CountResult(2 * p, klass, poly(1), poly)


def _prime_squared_poly(p: int, klass: str) -> UniPoly:
    if klass in ("u", "su"):
        m = (p - 1) // 2
    else:
        m = p - 1
    rules = {
        "d": (_rule_directed(1), _rule_directed(p)),
        "u": (_rule_undirected(1), _rule_undirected(p)),
        "o": (_rule_oriented(1), _rule_oriented(p)),
        "sd": (_rule_self_complementary(), _rule_self_complementary()),
        "su": (_rule_self_complementary(), _rule_self_complementary()),
        "t": (_rule_tournament(), _rule_tournament()),
    }
    rule_x, rule_y = rules[klass]
    ci = cycle_index(m)
    lifted = power_sum(ci, rule_x, exponent_factor=p + 1)
    paired = paired_power_sum(ci, rule_x, rule_y)
    split = power_sum(ci, rule_x) * power_sum(ci, rule_y)
    # (1/p)I_m(x^(p+1)) - (1/p)I_m(xy) + I_m(x)I_m(y) over the common
    # denominator p*m^2; only the combination is integral, not the parts.
    numerator = lifted.scale(m) - paired.scale(m) + split.scale(p)
    return numerator.divide_exact(p * m * m)


def prime_squared_enumerator(p: int, klass: str) -> CountResult:
    """Count circulants of order p^2 (p an odd prime) in the given class."""
    _require_odd_prime(p)
    _require_class(klass)
    poly = _prime_squared_poly(p, klass)
    if klass in VALENCY_CLASSES:
        return CountResult(p * p, klass, poly(1), poly)
    return CountResult(p * p, klass, poly(0))


def formal_undirected(n: int) -> UniPoly:
    """The undirected prime-order series applied to any odd n >= 3.

    For prime n this equals prime_enumerator(n, "u").by_valency; for composite
    n it is a formal quantity only (not a graph count), but is exactly the
    series the twice-prime identities consume.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"formal_undirected requires odd n >= 3, got {n}")
    return substitute(cycle_index((n - 1) // 2), _rule_undirected())


def formal_undirected_count(n: int) -> CountResult:
    """formal_undirected wrapped with provenance: "formula" for prime n,
    "formal" otherwise (the value then counts nothing and table emitters must
    not present it as a graph count)."""
    poly = formal_undirected(n)
    provenance = "formula" if is_prime(n) else "formal"
    return CountResult(n, "u", poly(1), poly, provenance=provenance)


def formula_kind(order: int) -> tuple[str, int] | None:
    """Which closed form covers this order: ("prime"|"twice_prime"|"prime_squared", p)."""
    if order >= 3 and order % 2 == 1 and is_prime(order):
        return ("prime", order)
    if order % 2 == 0 and order // 2 >= 3 and is_prime(order // 2):
        return ("twice_prime", order // 2)
    root = isqrt(order)
    if root * root == order and root % 2 == 1 and root >= 3 and is_prime(root):
        return ("prime_squared", root)
    return None


def count_by_formula(order: int, klass: str) -> CountResult:
    """Dispatch to whichever closed form covers the order, else raise."""
    _require_class(klass)
    kind = formula_kind(order)
    if kind is None:
        raise UnsupportedOrderError(f"no counting formula for order {order}")
    shape, p = kind
    if shape == "prime":
        return prime_enumerator(p, klass)
    if shape == "twice_prime":
        if klass not in VALENCY_CLASSES:
            raise UnsupportedOrderError(
                f"no order-2p formula for class {klass!r}")
        return twice_prime_enumerator(p, klass)
    return prime_squared_enumerator(p, klass)


def alternating_sum(n: int, klass: str) -> int:
    """Evaluate the class's valency series at -1 (u: at a square root of -1)."""
    _require_class(klass, VALENCY_CLASSES)
    poly = count_by_formula(n, klass).by_valency
    if klass == "u":
        return eval_poly(poly, GAUSSIAN_UNIT)
    return eval_poly(poly, -1)


def oriented_alternating_expected(n: int) -> int:
    """The predicted value of the oriented alternating sum at order n.

    Odd n: 0 when some prime divisor of n is congruent to 3 mod 4, else 1.
    n = 2 * odd: 1.  Multiples of 4 up to 4 * squarefree: 0.
    """
    if n % 4 == 0:
        return 0
    if n % 2 == 0:
        return 1
    m = n
    p = 3
    while p * p <= m:
        if m % p == 0:
            if p % 4 == 3:
                return 0
            while m % p == 0:
                m //= p
        p += 2
    if m > 1 and m % 4 == 3:
        return 0
    return 1


def even_odd_split(n: int, klass: str) -> tuple[int, int]:
    """Totals by valency parity: d splits on r mod 2, u on r mod 4 in {0, 2}.

    The undirected split is only meaningful at odd orders, where every valency
    is even and the semi-valency parity distinguishes r = 0 and r = 2 mod 4.
    """
    _require_class(klass, ("d", "u"))
    if klass == "u" and n % 2 == 0:
        raise UnsupportedOrderError("undirected even/odd split needs odd order")
    poly = count_by_formula(n, klass).by_valency
    if klass == "d":
        even = sum(poly.coeffs[0::2])
        odd = sum(poly.coeffs[1::2])
    else:
        even = sum(c for r, c in enumerate(poly.coeffs) if r % 4 == 0)
        odd = sum(c for r, c in enumerate(poly.coeffs) if r % 4 == 2)
    return even, odd


def mixed_sd(p: int) -> int:
    """Self-complementary directed circulants of order p^2 that are neither
    undirected nor tournaments.

    Computed as C_sd(p^2) - C_su(p^2) - C_t(p^2) and cross-checked against the
    two equivalent forms 2*C_su(p)*C_t(p) and C_sd(p)^2 - C_su(p)^2 - C_t(p)^2.
    """
    _require_odd_prime(p)
    by_subtraction = (prime_squared_enumerator(p, "sd").total
                      - prime_squared_enumerator(p, "su").total
                      - prime_squared_enumerator(p, "t").total)
    by_product = 2 * prime_enumerator(p, "su").total * prime_enumerator(p, "t").total
    by_squares = (prime_enumerator(p, "sd").total ** 2
                  - prime_enumerator(p, "su").total ** 2
                  - prime_enumerator(p, "t").total ** 2)
    if not (by_subtraction == by_product == by_squares):
        raise ConsistencyError(
            f"mixed count disagreement at p={p}: "
            f"{by_subtraction} / {by_product} / {by_squares}")
    return by_subtraction


def non_ci_counts(p: int) -> tuple[int, int, int]:
    """Counts of non-CI classes of order p^2 for (sd, su, t): squares of the
    order-p totals."""
    _require_odd_prime(p)
    return (prime_enumerator(p, "sd").total ** 2,
            prime_enumerator(p, "su").total ** 2,
            prime_enumerator(p, "t").total ** 2)


def log_concavity_probe(order: int,
                        by_valency: UniPoly | None = None) -> list[tuple[int, int, int, int]]:
    """Violations of log-concavity in the undirected even-valency sequence.

    Writing a_r for the count at valency 2r, reports every r with
    a_r^2 < a_(r-1) * a_(r+1) over the interior range 1 < r < (n-1)/2 - 1
    (the first and last ratios are excluded: the constant-1 tail makes them
    degenerate for every order).  Empty report == log-concave there.
    by_valency overrides the formula path, e.g. with oracle counts.
    """
    if by_valency is None:
        by_valency = count_by_formula(order, "u").by_valency
    seq = [by_valency.coeff(2 * r) for r in range(by_valency.degree // 2 + 1)]
    upper = (order - 1) // 2 - 1  # exclusive
    violations = []
    for r in range(2, upper):
        if r + 1 >= len(seq):
            break
        if seq[r] ** 2 < seq[r - 1] * seq[r + 1]:
            violations.append((r, seq[r - 1], seq[r], seq[r + 1]))
    return violations
