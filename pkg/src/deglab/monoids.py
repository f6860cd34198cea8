"""Finite monoids as explicit Cayley tables, plus exhaustive enumeration.

Elements are dense integer indices and tables are row-major; the unit index
is explicit (element 0 is not assumed to be the unit).  Everything here is
immutable and pure, and serves as the oracle layer for the rest of the
package.
"""

import itertools
import os
from dataclasses import dataclass

from .report import InvalidStructureError, StructuralError, ValidationReport

DEFAULT_MAX_SIZE = 5
MAX_SIZE_ENV = "DEGLAB_MAX_SIZE"


def _as_table(rows) -> tuple:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _table_shape_errors(mul, size) -> list:
    errors = []
    if len(mul) != size:
        errors.append(f"table has {len(mul)} rows, expected {size}")
    for i, row in enumerate(mul):
        if len(row) != size:
            errors.append(f"row {i} has {len(row)} entries, expected {size}")
        else:
            for j, v in enumerate(row):
                if not (0 <= v < size):
                    errors.append(f"entry ({i},{j}) = {v} out of range")
    return errors


@dataclass(frozen=True)
class FiniteMonoid:
    """A multiplication table with a designated unit index.

    Construction checks shape only; the monoid axioms are checked by
    `check_monoid`, so axiom-violating tables can be represented and
    reported on.
    """

    size: int
    unit: int
    mul: tuple

    def __post_init__(self):
        object.__setattr__(self, "mul", _as_table(self.mul))
        if self.size <= 0:
            raise StructuralError("monoid size must be positive")
        if not (0 <= self.unit < self.size):
            raise StructuralError(f"unit index {self.unit} out of range")
        errs = _table_shape_errors(self.mul, self.size)
        if errs:
            raise StructuralError("; ".join(errs))

    @classmethod
    def from_rows(cls, rows, unit: int) -> "FiniteMonoid":
        rows = _as_table(rows)
        return cls(len(rows), unit, rows)

    def mult(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def elements(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class MonoidHom:
    """A map of element indices between two finite monoids."""

    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if len(self.map) != self.source.size:
            raise StructuralError(
                f"hom map has {len(self.map)} entries, expected {self.source.size}"
            )
        for x, v in enumerate(self.map):
            if not (0 <= v < self.target.size):
                raise StructuralError(f"hom image of {x} = {v} out of range")

    def __call__(self, x: int) -> int:
        return self.map[x]


@dataclass(frozen=True)
class CMonDIE:
    """A commutative monoid with a distinguished invertible element.

    `die_inv` is a stored witness; `check_cmon_die` verifies it rather than
    trusting it.
    """

    monoid: FiniteMonoid
    die: int
    die_inv: int

    def __post_init__(self):
        for name, v in (("die", self.die), ("die_inv", self.die_inv)):
            if not (0 <= v < self.monoid.size):
                raise StructuralError(f"{name} index {v} out of range")


def check_monoid(mul, unit) -> ValidationReport:
    """Report every violated associativity triple and unit law instance.

    Accepts a raw table (sequence of rows) or a FiniteMonoid.  Shape
    problems are reported as structural errors, distinct from axiom
    failures, and suppress the axiom scan.
    """
    if isinstance(mul, FiniteMonoid):
        mul, unit = mul.mul, mul.unit
    report = ValidationReport("monoid")
    rows = [list(r) for r in mul]
    n = len(rows)
    if n == 0:
        report.add_structural("shape", (), "empty table")
        return report
    for msg in _table_shape_errors(rows, n):
        report.add_structural("shape", (), msg)
    if not (0 <= unit < n):
        report.add_structural("shape", (), f"unit index {unit} out of range")
    if not report.well_formed:
        return report
    for x in range(n):
        if rows[unit][x] != x:
            report.add("unit", (x,), f"unit*{x} = {rows[unit][x]}")
        if rows[x][unit] != x:
            report.add("unit", (x,), f"{x}*unit = {rows[x][unit]}")
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            for z in range(n):
                lhs = rows[xy][z]
                rhs = rows[x][rows[y][z]]
                if lhs != rhs:
                    report.add(
                        "associativity", (x, y, z), f"({x}{y}){z} = {lhs} != {rhs} = {x}({y}{z})"
                    )
    return report


def check_commutative(m: FiniteMonoid) -> list:
    """All pairs (x, y) with x < y where the table is not symmetric."""
    bad = []
    for x in range(m.size):
        for y in range(x + 1, m.size):
            if m.mul[x][y] != m.mul[y][x]:
                bad.append((x, y))
    return bad


def invert(m: FiniteMonoid, x: int) -> int | None:
    """The two-sided inverse of x, or None."""
    for y in range(m.size):
        if m.mul[x][y] == m.unit and m.mul[y][x] == m.unit:
            return y
    return None


def units(m: FiniteMonoid) -> list:
    return [x for x in range(m.size) if invert(m, x) is not None]


def check_hom(h: MonoidHom) -> ValidationReport:
    """Unit preservation and multiplicativity, itemized per input."""
    report = ValidationReport("monoid_hom")
    if h.map[h.source.unit] != h.target.unit:
        report.add("unit-preservation", (h.source.unit,), f"unit maps to {h.map[h.source.unit]}")
    for x in range(h.source.size):
        for y in range(h.source.size):
            lhs = h.map[h.source.mul[x][y]]
            rhs = h.target.mul[h.map[x]][h.map[y]]
            if lhs != rhs:
                report.add("multiplicativity", (x, y), f"h({x}{y}) = {lhs} != {rhs}")
    return report


def check_cmon_die(s: CMonDIE) -> ValidationReport:
    """Monoid axioms, commutativity, and the inverse witness for the die."""
    report = ValidationReport("cmon_die")
    report.extend(check_monoid(s.monoid.mul, s.monoid.unit))
    for x, y in check_commutative(s.monoid):
        report.add("commutativity", (x, y), f"{x}*{y} != {y}*{x}")
    m = s.monoid
    if m.mul[s.die][s.die_inv] != m.unit or m.mul[s.die_inv][s.die] != m.unit:
        report.add("die-invertible", (s.die, s.die_inv), "stored inverse witness fails")
    return report


def identity_hom(m: FiniteMonoid) -> MonoidHom:
    return MonoidHom(m, m, tuple(range(m.size)))


def compose_homs(g: MonoidHom, f: MonoidHom) -> MonoidHom:
    if f.target != g.source:
        raise StructuralError("hom composition endpoint mismatch")
    return MonoidHom(f.source, g.target, tuple(g.map[v] for v in f.map))


def make_cmon_die(m: FiniteMonoid, die: int) -> CMonDIE:
    """Build a CMonDIE, validating the monoid and locating the inverse."""
    rep = check_monoid(m.mul, m.unit)
    if not rep.ok:
        raise InvalidStructureError("not a monoid: " + _summary(rep))
    if check_commutative(m):
        raise InvalidStructureError("monoid is not commutative")
    inv = invert(m, die)
    if inv is None:
        raise InvalidStructureError(f"element {die} is not invertible")
    return CMonDIE(m, die, inv)


def _summary(report: ValidationReport) -> str:
    first = (report.structural + report.violations)[:1]
    return first[0].message if first else "unknown"


# -- enumeration ------------------------------------------------------------


def max_enumeration_size() -> int:
    raw = os.environ.get(MAX_SIZE_ENV, "")
    try:
        return int(raw) if raw else DEFAULT_MAX_SIZE
    except ValueError:
        return DEFAULT_MAX_SIZE


def canonical_form(mul) -> tuple:
    """Lexicographically minimal flattened table over all relabelings."""
    n = len(mul)
    best = None
    for perm in itertools.permutations(range(n)):
        flat = tuple(perm[mul[x][y]] for x in _inv_order(perm) for y in _inv_order(perm))
        if best is None or flat < best:
            best = flat
    return best


def _inv_order(perm):
    # positions listed so row/column i of the relabeled table is perm^-1(i)
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def canonicalize(m: FiniteMonoid) -> FiniteMonoid:
    flat = canonical_form(m.mul)
    n = m.size
    table = tuple(flat[i * n : (i + 1) * n] for i in range(n))
    return FiniteMonoid(n, _find_unit(table), table)


def _find_unit(table) -> int:
    n = len(table)
    for u in range(n):
        if all(table[u][x] == x and table[x][u] == x for x in range(n)):
            return u
    raise InvalidStructureError("table has no unit element")


def enumerate_monoids(n: int, commutative_only: bool = False) -> list:
    """All monoids with n elements, one per isomorphism class.

    The unit is pinned to index 0 during the search (every class has such a
    representative) and results are deduplicated by canonical form, then
    returned sorted for determinism.  Refuses n beyond the configured bound.
    """
    bound = max_enumeration_size()
    if n > bound:
        raise StructuralError(
            f"enumeration size {n} exceeds bound {bound} (set {MAX_SIZE_ENV} to raise it)"
        )
    if n <= 0:
        return []
    if n == 1:
        return [FiniteMonoid(1, 0, ((0,),))]
    seen = {}
    for table in _unital_associative_tables(n, commutative_only):
        key = canonical_form(table)
        if key not in seen:
            seen[key] = True
    out = []
    for key in sorted(seen):
        table = tuple(key[i * n : (i + 1) * n] for i in range(n))
        out.append(FiniteMonoid(n, _find_unit(table), table))
    return out


def _unital_associative_tables(n: int, commutative_only: bool):
    """Backtracking over tables with unit 0, pruning on associativity.

    Only the (n-1)^2 inner cells vary; the unit row and column are forced.
    After each placement every associativity triple whose four lookups are
    all known is re-checked, which keeps the tree small enough for n = 5.
    """
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]
    if commutative_only:
        cells = [(x, y) for (x, y) in cells if x <= y]
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i

    def triple_ok(a, b, c):
        ab = table[a][b]
        if ab is None:
            return True
        bc = table[b][c]
        if bc is None:
            return True
        lhs = table[ab][c]
        rhs = table[a][bc]
        if lhs is None or rhs is None:
            return True
        return lhs == rhs

    def consistent_after(x, y):
        # triples whose lookups involve the cell (x, y), in any of the four roles
        for c in range(n):
            if not triple_ok(x, y, c):
                return False
        for a in range(n):
            if not triple_ok(a, x, y):
                return False
        for a in range(n):
            for b in range(n):
                if table[a][b] == x and not triple_ok(a, b, y):
                    return False
        for b in range(n):
            for c in range(n):
                if table[b][c] == y and not triple_ok(x, b, c):
                    return False
        return True

    def place(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        x, y = cells[k]
        for v in range(n):
            table[x][y] = v
            if commutative_only:
                table[y][x] = v
            if consistent_after(x, y) and (not commutative_only or consistent_after(y, x)):
                yield from place(k + 1)
        table[x][y] = None
        if commutative_only:
            table[y][x] = None

    yield from place(0)


def enumerate_homs(source: FiniteMonoid, target: FiniteMonoid) -> list:
    """All monoid homomorphisms source -> target, by backtracking.

    The unit image is forced and each placement propagates the constraint
    h(xy) = h(x)h(y) over already-decided pairs.
    """
    n = source.size
    homs = []
    image = [None] * n
    image[source.unit] = target.unit

    def extend(order_pos):
        if order_pos == n:
            homs.append(MonoidHom(source, target, tuple(image)))
            return
        if image[order_pos] is not None:
            extend(order_pos + 1)
            return
        for v in range(target.size):
            image[order_pos] = v
            if _partial_ok(source, target, image):
                extend(order_pos + 1)
        image[order_pos] = None

    extend(0)
    return homs


def _partial_ok(source, target, image):
    # every fully-decided pair must already satisfy h(ab) = h(a)h(b)
    for a in range(source.size):
        ia = image[a]
        if ia is None:
            continue
        for b in range(source.size):
            ib = image[b]
            if ib is None:
                continue
            ip = image[source.mul[a][b]]
            if ip is not None and target.mul[ia][ib] != ip:
                return False
    return True


def enumerate_dies(m: FiniteMonoid) -> list:
    """Every CMonDIE structure on a commutative monoid (one per unit element)."""
    if check_commutative(m):
        return []
    return [CMonDIE(m, d, invert(m, d)) for d in units(m)]


def cmon_die_universe(bound: int) -> list:
    """All (commutative monoid, die) pairs of size up to bound, up to iso."""
    out = []
    for n in range(1, bound + 1):
        for m in enumerate_monoids(n, commutative_only=True):
            out.extend(enumerate_dies(m))
    return out
