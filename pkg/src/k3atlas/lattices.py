"""Exact linear algebra for integral lattices.

Gram matrices are immutable tuples of Python integers, and every derived
quantity (determinant, Smith normal form, signature, discriminant group,
the rank / 2-rank / delta triple) is computed with arbitrary-precision
integers or exact rationals.  No floating point is involved anywhere, so
classification decisions cannot be corrupted by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateLattice, GramParseError, NotTwoElementary

Vector = Sequence[int | Fraction]


def _frozen_gram(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    gram = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(gram)
    for row in gram:
        if len(row) != n:
            raise ValueError("Gram matrix must be square")
    for i in range(n):
        for j in range(i):
            if gram[i][j] != gram[j][i]:
                raise ValueError("Gram matrix must be symmetric")
    return gram


@dataclass(frozen=True)
class IntegralLattice:
    """A finitely generated free abelian group with an integer pairing."""

    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "gram", _frozen_gram(self.gram))
        if self.basis_labels is not None:
            labels = tuple(str(s) for s in self.basis_labels)
            if len(labels) != len(self.gram):
                raise ValueError("one basis label per basis vector")
            object.__setattr__(self, "basis_labels", labels)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def det(self) -> int:
        return _integer_determinant(self.gram)

    def pairing(self, x: Vector, y: Vector) -> Fraction:
        """Bilinear form x.y extended to the rational span of the lattice."""
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError("vector length must equal the rank")
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return total


@dataclass(frozen=True)
class TwoElemInvariants:
    """The (r, a, delta) triple of an even 2-elementary lattice."""

    r: int
    a: int
    delta: int

    def __post_init__(self):
        if not 0 <= self.a <= self.r:
            raise ValueError("need 0 <= a <= r")
        if self.delta not in (0, 1):
            raise ValueError("delta is 0 or 1")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.r, self.a, self.delta)


@dataclass(frozen=True)
class DiscriminantGroup:
    """Dual lattice modulo the lattice, as a product of cyclic groups.

    ``generators[i]`` is a rational coordinate vector (in the basis of the
    lattice) spanning the i-th cyclic factor, of order ``cyclic_orders[i]``.
    """

    cyclic_orders: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for prev, cur in zip(self.cyclic_orders, self.cyclic_orders[1:]):
            if cur % prev:
                raise ValueError("cyclic orders must form a divisibility chain")
        if len(self.cyclic_orders) != len(self.generators):
            raise ValueError("one generator per cyclic factor")

    @property
    def order(self) -> int:
        total = 1
        for d in self.cyclic_orders:
            total *= d
        return total


def _integer_determinant(gram: Sequence[Sequence[int]]) -> int:
    # Fraction-free Bareiss elimination; every intermediate value is an integer.
    n = len(gram)
    if n == 0:
        return 1
    a = [list(row) for row in gram]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _nearest_quotient(a: int, b: int) -> int:
    # Quotient with |a - q*b| <= |b| / 2; balanced remainders keep the
    # intermediate entries small (Havas-Majewski pivoting).  Python's
    # divmod remainder carries the sign of b, so r - b is the balanced
    # remainder whenever |r| exceeds |b| / 2.
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def smith_normal_form(
    mat: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns ``(d, u, v)`` with ``u @ mat @ v == d``, the diagonal of ``d``
    nonnegative with each entry dividing the next, and ``det(u), det(v)``
    equal to +-1.  Total on rectangular integer matrices.

    Pivots are always chosen as a smallest-magnitude nonzero entry of the
    trailing block and reductions use nearest-integer quotients; without
    both, entry sizes explode on matrices as small as 20 x 20.
    """
    a = [[int(x) for x in row] for row in mat]
    n = len(a)
    m = len(a[0]) if n else 0
    if any(len(row) != m for row in a):
        raise ValueError("matrix rows must have equal length")
    u = _identity(n)
    v = _identity(m)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def add_row(i, j, c):
        # row i += c * row j
        ai, aj = a[i], a[j]
        for t in range(m):
            ai[t] += c * aj[t]
        ui, uj = u[i], u[j]
        for t in range(n):
            ui[t] += c * uj[t]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_col(i, j, c):
        # column i += c * column j
        for row in a:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    def move_smallest_pivot(t):
        pivot = None
        best = None
        for i in range(t, n):
            for j in range(t, m):
                value = abs(a[i][j])
                if value and (best is None or value < best):
                    pivot = (i, j)
                    best = value
        if pivot is None:
            return False
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])
        return True

    t = 0
    while t < min(n, m):
        if not move_smallest_pivot(t):
            break
        while True:
            # One balanced-remainder pass; then re-pick the smallest pivot.
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -_nearest_quotient(a[i][t], p))
                    dirty = dirty or bool(a[i][t])
            for j in range(t + 1, m):
                if a[t][j]:
                    add_col(j, t, -_nearest_quotient(a[t][j], p))
                    dirty = dirty or bool(a[t][j])
            if dirty:
                move_smallest_pivot(t)
                continue
            offender = next(
                (
                    i
                    for i in range(t + 1, n)
                    if any(a[i][j] % p for j in range(t + 1, m))
                ),
                None,
            )
            if offender is None:
                break
            # Pull the offending row up so the next pivot divides it too.
            add_row(t, offender, 1)
            move_smallest_pivot(t)
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    return a, u, v


def discriminant_group(l: IntegralLattice) -> DiscriminantGroup:
    """Dual modulo lattice, with generators as rational coordinate vectors."""
    n = l.rank
    if n and l.det() == 0:
        raise DegenerateLattice("discriminant group needs a nondegenerate pairing")
    d, _u, v = smith_normal_form(l.gram)
    orders = []
    generators = []
    for i in range(n):
        di = d[i][i]
        if di > 1:
            orders.append(di)
            generators.append(tuple(Fraction(v[r][i], di) for r in range(n)))
    return DiscriminantGroup(tuple(orders), tuple(generators))


def two_elementary_invariants(l: IntegralLattice) -> TwoElemInvariants:
    """The (r, a, delta) triple of an even lattice with 2-elementary dual quotient.

    delta is 0 exactly when x.x is an integer for every element x of the
    discriminant group; all 2^a classes are enumerated, not only generators.
    """
    if not l.is_even():
        raise NotTwoElementary("lattice is odd (some basis vector has odd square)")
    group = discriminant_group(l)
    bad = [o for o in group.cyclic_orders if o != 2]
    if bad:
        raise NotTwoElementary(f"discriminant group has cyclic factors {bad}")
    a = len(group.cyclic_orders)
    gens = group.generators
    # x_T.x_T for a subset T expands into single and pairwise products.
    prod = [[l.pairing(gens[i], gens[j]) for j in range(a)] for i in range(a)]
    delta = 0
    for mask in range(1, 1 << a):
        members = [i for i in range(a) if mask >> i & 1]
        norm = sum(prod[i][i] for i in members)
        norm += 2 * sum(
            prod[i][j] for idx, i in enumerate(members) for j in members[idx + 1 :]
        )
        if Fraction(norm).denominator != 1:
            delta = 1
            break
    return TwoElemInvariants(l.rank, a, delta)


def signature(l: IntegralLattice) -> tuple[int, int]:
    """Counts of positive and negative squares, by exact symmetric reduction.

    p + n can fall short of the rank only for a degenerate pairing.
    """
    n = l.rank
    m = [[Fraction(x) for x in row] for row in l.gram]
    remaining = list(range(n))
    pos = neg = 0
    while remaining:
        p = next((i for i in remaining if m[i][i]), None)
        if p is None:
            pair = next(
                (
                    (i, j)
                    for pos_i, i in enumerate(remaining)
                    for j in remaining[pos_i + 1 :]
                    if m[i][j]
                ),
                None,
            )
            if pair is None:
                break
            i, j = pair
            # Isotropic diagonal: e_i += e_j makes m[i][i] = 2 m[i][j] != 0.
            for k in remaining:
                m[i][k] += m[j][k]
            for k in remaining:
                m[k][i] += m[k][j]
            continue
        d = m[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        remaining.remove(p)
        column = {i: m[i][p] for i in remaining}
        for i in remaining:
            ci = column[i]
            if ci:
                for j in remaining:
                    m[i][j] -= ci * m[p][j] / d
    return pos, neg


def direct_sum(l1: IntegralLattice, l2: IntegralLattice) -> IntegralLattice:
    """Orthogonal direct sum; Gram matrices go block diagonal."""
    n1, n2 = l1.rank, l2.rank
    rows = []
    for i in range(n1):
        rows.append(tuple(l1.gram[i]) + (0,) * n2)
    for i in range(n2):
        rows.append((0,) * n1 + tuple(l2.gram[i]))
    labels = None
    if l1.basis_labels is not None and l2.basis_labels is not None:
        labels = l1.basis_labels + l2.basis_labels
    return IntegralLattice(tuple(rows), labels)


# ---------------------------------------------------------------------------
# Fixtures


def gram_U() -> IntegralLattice:
    """The even unimodular hyperbolic plane."""
    return IntegralLattice(((0, 1), (1, 0)), ("u1", "u2"))


def gram_minus2() -> IntegralLattice:
    """Rank-one lattice spanned by a (-2)-vector."""
    return IntegralLattice(((-2,),), ("v",))


def gram_S311() -> IntegralLattice:
    """Pairing of the classes E, F, A0 on the double-cover side."""
    return IntegralLattice(
        ((-2, 2, 1), (2, -2, 0), (1, 0, -2)),
        ("E", "F", "A0"),
    )


def gram_PicY() -> IntegralLattice:
    """Pairing of the classes e, f, A0 on the quotient surface."""
    return IntegralLattice(
        ((-1, 1, 1), (1, -1, 0), (1, 0, -4)),
        ("e", "f", "A0"),
    )


def gram_E8_minus() -> IntegralLattice:
    """Negative definite even unimodular lattice of rank 8."""
    cartan = (
        (2, 0, -1, 0, 0, 0, 0, 0),
        (0, 2, 0, -1, 0, 0, 0, 0),
        (-1, 0, 2, -1, 0, 0, 0, 0),
        (0, -1, -1, 2, -1, 0, 0, 0),
        (0, 0, 0, -1, 2, -1, 0, 0),
        (0, 0, 0, 0, -1, 2, -1, 0),
        (0, 0, 0, 0, 0, -1, 2, -1),
        (0, 0, 0, 0, 0, 0, -1, 2),
    )
    rows = tuple(tuple(-x for x in row) for row in cartan)
    return IntegralLattice(rows, tuple(f"e{i}" for i in range(1, 9)))


def gram_LK3() -> IntegralLattice:
    """Reference form of the K3 lattice: three hyperbolic planes plus two E8(-1)."""
    lattice = gram_U()
    for _ in range(2):
        lattice = direct_sum(lattice, gram_U())
    for _ in range(2):
        lattice = direct_sum(lattice, gram_E8_minus())
    return lattice


# ---------------------------------------------------------------------------
# Gram-matrix file format: line one holds n, then n rows of n integers.
# Lines whose first non-blank character is '#' are comments.  UTF-8, LF.


def parse_gram_text(text: str) -> IntegralLattice:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise GramParseError("empty Gram file")
    try:
        n = int(lines[0])
    except ValueError:
        raise GramParseError(f"first line must be the size, got {lines[0]!r}") from None
    if n < 0:
        raise GramParseError("size must be nonnegative")
    if len(lines) != n + 1:
        raise GramParseError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for k, line in enumerate(lines[1:], start=1):
        parts = line.split()
        if len(parts) != n:
            raise GramParseError(f"row {k} has {len(parts)} entries, expected {n}")
        try:
            rows.append(tuple(int(p) for p in parts))
        except ValueError:
            raise GramParseError(f"row {k} contains a non-integer entry") from None
    try:
        return IntegralLattice(tuple(rows))
    except ValueError as exc:
        raise GramParseError(str(exc)) from None


def load_gram_file(path) -> IntegralLattice:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise GramParseError(f"cannot read {path}: {exc}") from None
    return parse_gram_text(text)
