"""Ground-truth enumeration of small circulants up to graph isomorphism.

Independent of every counting formula: connection sets are enumerated
exhaustively, grouped into multiplier orbits (S -> m*S for units m, an
explicit isomorphism x -> m*x, so members of an orbit are always isomorphic),
and one representative per orbit is canonically labeled.  Orbits sharing a
certificate form one isomorphism class.  Nothing here assumes the converse
(that isomorphic circulants are multiplier related), so the oracle is a
genuine cross-check for the formulas.

The canonical labeler is a self-contained individualization-refinement
search over vertex partitions: refine to the coarsest stable partition using
out/in neighbour counts per cell, branch on the smallest non-singleton cell,
and take the lexicographically least adjacency encoding over all leaves.
Automorphisms discovered at equal-encoding leaves (plus any known a priori,
e.g. the rotation of a circulant) prune branches that cannot change the
minimum.  Practical for graphs up to a few dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import UnsupportedOrderError
from .counting import CountResult
from .algebra import UniPoly

DESK_LIMIT = 16        # exhaustive over all 2^(n-1) connection sets
SLOW_LIMIT = 27        # undirected-only extension behind allow_slow


@dataclass(frozen=True)
class ConnectionSet:
    """A circulant's defining set: S subset of {1, .., n-1}; arc u -> u+s."""

    order: int
    members: frozenset[int]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        for s in self.members:
            if not 0 < s < self.order:
                raise ValueError(f"connection set element {s} outside 1..{self.order - 1}")

    @classmethod
    def from_mask(cls, order: int, mask: int) -> "ConnectionSet":
        return cls(order, frozenset(_mask_to_set(mask)))

    @property
    def mask(self) -> int:
        return sum(1 << s for s in self.members)

    @property
    def valency(self) -> int:
        return len(self.members)

    def complement(self) -> "ConnectionSet":
        """Complement within the loopless complete digraph."""
        return ConnectionSet(self.order,
                             frozenset(range(1, self.order)) - self.members)

    def is_undirected(self) -> bool:
        return all((self.order - s) % self.order in self.members for s in self.members)

    def is_oriented(self) -> bool:
        return all((self.order - s) % self.order not in self.members for s in self.members)

    def is_tournament(self) -> bool:
        return (self.order % 2 == 1 and self.is_oriented()
                and self.valency == (self.order - 1) // 2)


def _mask_to_set(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _set_sort_key(mask: int) -> tuple[int, ...]:
    """Lexicographic order on the ascending member tuple, not on the bitmask."""
    return tuple(_mask_to_set(mask))


def _units(n: int) -> list[int]:
    return [m for m in range(1, n) if gcd(m, n) == 1]


def _adjacency(n: int, members) -> tuple[list[int], list[int]]:
    out_adj = [0] * n
    for v in range(n):
        for s in members:
            out_adj[v] |= 1 << ((v + s) % n)
    in_adj = [0] * n
    for v in range(n):
        row = out_adj[v]
        while row:
            low = row & -row
            in_adj[low.bit_length() - 1] |= 1 << v
            row ^= low
    return out_adj, in_adj


def _refine(n: int, out_adj, in_adj, cells):
    """Coarsest stable refinement of an ordered partition.

    Cell order stays isomorphism-invariant: sub-cells replace their parent in
    the order of their (sorted) neighbour-count signatures.
    """
    cells = [list(c) for c in cells]
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        changed = False
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(((out_adj[v] & m).bit_count(), (in_adj[v] & m).bit_count())
                            for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    new_cells.append(buckets[sig])
        cells = new_cells
        if not changed:
            return cells


def digraph_certificate(out_adj: list[int], known_automorphisms=()) -> int:
    """Canonical form of a digraph on vertices 0..n-1 as a single integer.

    Equal certificates imply isomorphism by construction (the encoding is the
    adjacency matrix of a relabeling); within the search's reach the converse
    holds too because every choice made is isomorphism-invariant.
    known_automorphisms (vertex permutations as tuples) seed the pruning.
    """
    n = len(out_adj)
    in_adj = [0] * n
    for v in range(n):
        row = out_adj[v]
        while row:
            low = row & -row
            in_adj[low.bit_length() - 1] |= 1 << v
            row ^= low

    best_enc: list[int | None] = [None]
    best_lab: list[list[int] | None] = [None]
    autos: list[tuple[int, ...]] = [tuple(g) for g in known_automorphisms]

    def encode(cells):
        lab = [0] * n
        for pos, cell in enumerate(cells):
            lab[cell[0]] = pos
        enc = 0
        for u in range(n):
            row = out_adj[u]
            base = lab[u] * n
            while row:
                low = row & -row
                enc |= 1 << (base + lab[low.bit_length() - 1])
                row ^= low
        return enc, lab

    def search(cells, fixed):
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            enc, lab = encode(cells)
            if best_enc[0] is None or enc < best_enc[0]:
                best_enc[0] = enc
                best_lab[0] = lab
            elif enc == best_enc[0]:
                # two labelings with one encoding compose to an automorphism
                inverse = [0] * n
                for v in range(n):
                    inverse[best_lab[0][v]] = v
                autos.append(tuple(inverse[lab[v]] for v in range(n)))
            return
        cell = cells[target]
        explored: list[int] = []
        for v in sorted(cell):
            if explored and _in_orbit(v, explored, fixed, autos):
                continue
            rest = [w for w in cell if w != v]
            sub = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(n, out_adj, in_adj, sub), fixed + (v,))
            explored.append(v)

    def _in_orbit(v, explored, fixed, autos):
        # Is v reachable from an explored sibling under automorphisms that fix
        # the individualized prefix pointwise?  Such a branch repeats a subtree.
        qualifying = [g for g in autos if all(g[f] == f for f in fixed)]
        if not qualifying:
            return False
        reach = set(explored)
        frontier = list(explored)
        while frontier:
            u = frontier.pop()
            for g in qualifying:
                w = g[u]
                if w == v:
                    return True
                if w not in reach:
                    reach.add(w)
                    frontier.append(w)
        return False

    search(_refine(n, out_adj, in_adj, [list(range(n))]), ())
    return best_enc[0]


def canonical_form(cs: ConnectionSet) -> bytes:
    """Certificate of a circulant; equal bytes <=> isomorphic digraphs.

    The rotation v -> v+1 and every multiplier fixing the set are passed to
    the search as known automorphisms (they are isomorphisms by definition,
    independent of any theory about which circulants are multiplier related).
    """
    n = cs.order
    out_adj, _ = _adjacency(n, cs.members)
    autos = [tuple((v + 1) % n for v in range(n))]
    for m in _units(n):
        if m != 1 and {m * s % n for s in cs.members} == cs.members:
            autos.append(tuple(m * v % n for v in range(n)))
    enc = digraph_certificate(out_adj, autos)
    return bytes([n]) + enc.to_bytes((n * n + 7) // 8, "big")


# ---------------------------------------------------------------------------
# Exhaustive survey of one order
# ---------------------------------------------------------------------------

@dataclass
class _ClassInfo:
    rep_mask: int          # lex-least member of the lex-least orbit
    valency: int
    orbit_count: int       # multiplier orbits merged into this class
    set_count: int         # connection sets in the class
    undirected: bool
    oriented: bool
    tournament: bool
    self_complementary: bool


class _Survey:
    """All isomorphism classes of one order, with per-class predicates."""

    def __init__(self, n: int, undirected_only: bool = False):
        self.n = n
        self.undirected_only = undirected_only
        units = _units(n)
        masks = self._eligible_masks(n, undirected_only)
        # multiplier orbits; each keeps its lexicographically least member
        orbit_of: dict[int, int] = {}
        orbit_reps: list[int] = []
        orbit_sizes: list[int] = []
        for mask in masks:
            if mask in orbit_of:
                continue
            orbit = {mask}
            stack = [mask]
            while stack:
                cur = stack.pop()
                members = _mask_to_set(cur)
                for m in units:
                    new = 0
                    for s in members:
                        new |= 1 << (m * s % n)
                    if new not in orbit:
                        orbit.add(new)
                        stack.append(new)
            idx = len(orbit_reps)
            orbit_reps.append(min(orbit, key=_set_sort_key))
            orbit_sizes.append(len(orbit))
            for member in orbit:
                orbit_of[member] = idx
        self.orbit_of = orbit_of
        self.orbit_reps = orbit_reps
        certs = [canonical_form(ConnectionSet.from_mask(n, rep)) for rep in orbit_reps]
        self.cert_of_orbit = certs
        grouped: dict[bytes, list[int]] = {}
        for i, cert in enumerate(certs):
            grouped.setdefault(cert, []).append(i)
        full = (1 << n) - 2
        self.classes: list[_ClassInfo] = []
        self.class_of_orbit: dict[int, int] = {}
        for cert in sorted(grouped):
            orbit_ids = grouped[cert]
            rep = min((orbit_reps[i] for i in orbit_ids), key=_set_sort_key)
            cs = ConnectionSet.from_mask(n, rep)
            # complement preserves eligibility in both modes, so its orbit is known
            comp_mask = full & ~rep
            self_comp = certs[orbit_of[comp_mask]] == cert
            info = _ClassInfo(
                rep_mask=rep,
                valency=cs.valency,
                orbit_count=len(orbit_ids),
                set_count=sum(orbit_sizes[i] for i in orbit_ids),
                undirected=cs.is_undirected(),
                oriented=cs.is_oriented(),
                tournament=cs.is_tournament(),
                self_complementary=self_comp,
            )
            for i in orbit_ids:
                self.class_of_orbit[i] = len(self.classes)
            self.classes.append(info)

    @staticmethod
    def _eligible_masks(n: int, undirected_only: bool) -> list[int]:
        if not undirected_only:
            return list(range(0, 1 << n, 2))
        # negation-closed sets: free choice over the pairs {s, n-s}
        pairs = []
        for s in range(1, n // 2 + 1):
            mask = 1 << s
            if s != n - s:
                mask |= 1 << (n - s)
            pairs.append(mask)
        masks = []
        for pick in range(1 << len(pairs)):
            m = 0
            for i, pm in enumerate(pairs):
                if (pick >> i) & 1:
                    m |= pm
            masks.append(m)
        return sorted(masks)

    def select(self, klass: str):
        pred = _CLASS_PREDICATES[klass]
        return [c for c in self.classes if pred(c)]


_CLASS_PREDICATES = {
    "d": lambda c: True,
    "u": lambda c: c.undirected,
    "o": lambda c: c.oriented,
    "t": lambda c: c.tournament,
    "sd": lambda c: c.self_complementary,
    "su": lambda c: c.self_complementary and c.undirected,
}


@lru_cache(maxsize=None)
def _survey(n: int, undirected_only: bool) -> _Survey:
    return _Survey(n, undirected_only)


def _survey_for(n: int, klass: str, allow_slow: bool) -> _Survey:
    if n < 1:
        raise UnsupportedOrderError(f"order must be positive, got {n}")
    if n <= DESK_LIMIT:
        return _survey(n, False)
    if klass == "u" and n <= SLOW_LIMIT:
        if not allow_slow:
            raise UnsupportedOrderError(
                f"order {n} exceeds the desk-scale bound {DESK_LIMIT}; "
                f"undirected enumeration up to {SLOW_LIMIT} needs allow_slow")
        return _survey(n, True)
    raise UnsupportedOrderError(f"order {n} out of oracle range for class {klass!r}")


def enumerate_circulants(n: int, klass: str, allow_slow: bool = False) -> CountResult:
    """Count isomorphism classes of order-n circulants in the given class.

    Valency series included for d, u, o (valency is a class invariant: all
    connection sets of one class share their size).
    """
    if klass not in _CLASS_PREDICATES:
        raise UnsupportedOrderError(f"unknown class {klass!r}")
    survey = _survey_for(n, klass, allow_slow)
    chosen = survey.select(klass)
    if klass in ("d", "u", "o"):
        top = max((c.valency for c in chosen), default=0)
        coeffs = [0] * (top + 1)
        for c in chosen:
            coeffs[c.valency] += 1
        return CountResult(n, klass, len(chosen), UniPoly(coeffs), provenance="oracle")
    return CountResult(n, klass, len(chosen), provenance="oracle")


def cayley_classes(n: int, klass: str) -> int:
    """Orbits of class-eligible connection sets under S -> m*S, m a unit.

    d, u, o, t are counted by Burnside over the unit group (no isomorphism
    testing, so n may reach 40); sd and su need certificates and stay within
    the desk-scale bound.
    """
    if klass in ("sd", "su"):
        survey = _survey_for(n, klass, allow_slow=False)
        return sum(c.orbit_count for c in survey.select(klass))
    if not 1 <= n <= 40:
        raise UnsupportedOrderError(f"cayley_classes supports 1 <= n <= 40, got {n}")
    if klass not in ("d", "u", "o", "t"):
        raise UnsupportedOrderError(f"unknown class {klass!r}")
    units = _units(n) or [1]  # the unit group mod 1 is trivial
    total = 0
    for m in units:
        cycles = _multiplier_cycles(n, m)
        if klass == "d":
            total += 1 << len(cycles)
        elif klass == "u":
            # m and negation together must fix the set
            merged = _merge_with_negation(n, cycles)
            total += 1 << len(merged)
        else:
            pairs, self_negating = _negation_pairing(n, cycles)
            if klass == "o":
                total += 3 ** pairs
            else:  # t: pick exactly one of each negation pair
                total += 0 if self_negating or n % 2 == 0 else 2 ** pairs
    return total // len(units)


def _multiplier_cycles(n: int, m: int) -> list[frozenset[int]]:
    seen: set[int] = set()
    cycles = []
    for s in range(1, n):
        if s in seen:
            continue
        cyc = set()
        x = s
        while x not in cyc:
            cyc.add(x)
            x = x * m % n
        seen |= cyc
        cycles.append(frozenset(cyc))
    return cycles


def _merge_with_negation(n: int, cycles) -> list[frozenset[int]]:
    by_member = {}
    for i, cyc in enumerate(cycles):
        for s in cyc:
            by_member[s] = i
    merged = []
    done = set()
    for i, cyc in enumerate(cycles):
        if i in done:
            continue
        j = by_member[(n - next(iter(cyc))) % n]
        done.add(i)
        done.add(j)
        merged.append(cyc if i == j else cyc | cycles[j])
    return merged


def _negation_pairing(n: int, cycles) -> tuple[int, bool]:
    """(number of {C, -C} pairs with C != -C, any self-negating cycle present)."""
    by_member = {}
    for i, cyc in enumerate(cycles):
        for s in cyc:
            by_member[s] = i
    pairs = 0
    self_negating = False
    seen = set()
    for i, cyc in enumerate(cycles):
        if i in seen:
            continue
        j = by_member[(n - next(iter(cyc))) % n]
        seen.add(i)
        seen.add(j)
        if i == j:
            self_negating = True
        else:
            pairs += 1
    return pairs, self_negating


def non_ci_count(n: int, klass: str) -> tuple[int, int]:
    """(classes merging >= 2 multiplier orbits, orbits inside such classes)."""
    survey = _survey_for(n, klass, allow_slow=False)
    multi = [c for c in survey.select(klass) if c.orbit_count >= 2]
    return len(multi), sum(c.orbit_count for c in multi)


def classify_self_complementary(n: int) -> tuple[int, int, int]:
    """Partition of the self-complementary directed classes of odd order n
    into (undirected, tournament, mixed)."""
    if n % 2 == 0:
        raise UnsupportedOrderError("self-complementary classification needs odd order")
    survey = _survey_for(n, "sd", allow_slow=False)
    undirected = tournament = mixed = 0
    for c in survey.select("sd"):
        if c.undirected:
            undirected += 1
        elif c.tournament:
            tournament += 1
        else:
            mixed += 1
    return undirected, tournament, mixed


def class_representatives(n: int, klass: str, allow_slow: bool = False) -> list[str]:
    """One line per isomorphism class: 'n;valency;lex-min set;class size'."""
    survey = _survey_for(n, klass, allow_slow)
    lines = []
    for c in sorted(survey.select(klass), key=lambda c: (c.valency, c.rep_mask)):
        members = ",".join(str(s) for s in sorted(_mask_to_set(c.rep_mask)))
        lines.append(f"{n};{c.valency};{{{members}}};{c.set_count}")
    return lines
