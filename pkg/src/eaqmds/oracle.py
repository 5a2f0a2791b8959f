"""Independent first-principles verification through explicit matrices
over F_{q^2}: generator and parity-check matrices of the cyclic code,
the exact rank of H * H^dagger (which must equal the ebit count computed
from the defining-set overlap), and exhaustive distance checks for toys.

Everything here is deliberately pedestrian - dense matrices, plain
Gaussian elimination with exact field inverses, first-nonzero pivots -
so that it shares no machinery with the set-algebra route it checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt

from .codes import check_polynomial, generator_polynomial
from .cosets import DefiningSet
from .exceptions import VerificationError
from .gf import Field, FieldElement, FieldTower

BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class MatrixGF:
    """Dense matrix over one Field; entries stored as canonical element
    indices (row-major tuples) for speed, with FieldElement accessors."""

    field: Field
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.data:
            width = len(self.data[0])
            assert all(len(r) == width for r in self.data)
            assert all(0 <= v < self.field.order for r in self.data for v in r)

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.data[i][j])

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, tuple(zip(*self.data)))

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.data for v in r)


def _ops(field: Field):
    """(mul, add, sub) closures, table-backed when the field is small."""
    exp, log = field.exp_log_tables()
    if exp is not None:
        if field.p == 2:
            return (
                lambda a, b: exp[log[a] + log[b]] if a and b else 0,
                lambda a, b: a ^ b,
                lambda a, b: a ^ b,
            )
        addtab = field.add_table()
        if addtab is not None:
            o = field.order
            neg = [field.neg(i) for i in range(o)]
            return (
                lambda a, b: exp[log[a] + log[b]] if a and b else 0,
                lambda a, b: addtab[a * o + b],
                lambda a, b: addtab[a * o + neg[b]],
            )
    return field.mul, field.add, field.sub


def matmul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field is not b.field:
        raise ValueError("matrices over different fields")
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    f = a.field
    bt = list(zip(*b.data))
    exp, log = f.exp_log_tables()
    out = []
    if exp is not None and f.p == 2:
        for row in a.data:
            orow = []
            for col in bt:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc ^= exp[log[x] + log[y]]
                orow.append(acc)
            out.append(tuple(orow))
    elif exp is not None and f.add_table() is not None:
        addtab = f.add_table()
        o = f.order
        for row in a.data:
            orow = []
            for col in bt:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc = addtab[acc * o + exp[log[x] + log[y]]]
                orow.append(acc)
            out.append(tuple(orow))
    else:
        mul, add = f.mul, f.add
        for row in a.data:
            orow = []
            for col in bt:
                acc = 0
                for x, y in zip(row, col):
                    if x and y:
                        acc = add(acc, mul(x, y))
                orow.append(acc)
            out.append(tuple(orow))
    return MatrixGF(f, tuple(out))


def conjugate_transpose(m: MatrixGF, q: int) -> MatrixGF:
    """Transpose with entry-wise q-th power (the field must have order q^2)."""
    f = m.field
    if f.order != q * q:
        raise ValueError(f"field order {f.order} is not {q}^2")
    powq = f.power_map(q)
    return MatrixGF(f, tuple(tuple(powq[v] for v in col) for col in zip(*m.data)))


def rank(m: MatrixGF) -> int:
    """Exact rank by Gaussian elimination, first-nonzero pivot rule."""
    f = m.field
    mul, _add, sub = _ops(f)
    rows = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][c])
        rowr = rows[r]
        if inv != 1:
            rowr[c:] = [mul(inv, v) if v else 0 for v in rowr[c:]]
        for i in range(r + 1, nrows):
            fac = rows[i][c]
            if fac:
                rowi = rows[i]
                for j in range(c, ncols):
                    v = rowr[j]
                    if v:
                        rowi[j] = sub(rowi[j], mul(fac, v))
        r += 1
        if r == nrows:
            break
    return r


def nullspace(m: MatrixGF) -> MatrixGF:
    """A basis (rows) of the right nullspace {v : M v = 0}."""
    f = m.field
    mul, _add, sub = _ops(f)
    rows = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][c])
        if inv != 1:
            rows[r] = [mul(inv, v) if v else 0 for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [sub(vi, mul(fac, vr)) if vr else vi for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = f.neg(rows[ri][fc])
        basis.append(tuple(v))
    return MatrixGF(f, tuple(basis))


# ---------------------------------------------------------------------------
# cyclic-code matrices
# ---------------------------------------------------------------------------


def build_generator_matrix(z: DefiningSet, tower: FieldTower) -> MatrixGF:
    """k x n matrix whose rows are the cyclic shifts of the generator
    polynomial's coefficients; rank k by construction."""
    n = z.ctx.n
    if len(z) >= n:
        raise ValueError("defining set covers everything; the code is {0}")
    g = generator_polynomial(z, tower)
    gc = g.coeffs
    k = n - len(z)
    rows = tuple(
        (0,) * i + gc + (0,) * (n - len(gc) - i) for i in range(k)
    )
    return MatrixGF(tower.fq2, rows)


def euclidean_parity_check(z: DefiningSet, tower: FieldTower) -> MatrixGF:
    """(n-k) x n parity check of the plain (Euclidean) dual: shifts of the
    reversed check polynomial (x^n - 1)/g."""
    n = z.ctx.n
    if z.is_empty():
        raise ValueError("empty defining set: the code is all of F^n, dual is 0")
    h = check_polynomial(z, tower)
    hc = tuple(reversed(h.coeffs))
    rows = tuple(
        (0,) * i + hc + (0,) * (n - len(hc) - i) for i in range(n - len(h.coeffs) + 1)
    )
    return MatrixGF(tower.fq2, rows)


def build_parity_check_matrix(z: DefiningSet, tower: FieldTower) -> MatrixGF:
    """(n-k) x n matrix whose rows are a basis of the Hermitian dual:
    the Euclidean parity check conjugated entry-wise by the q-th power.

    Row r then satisfies sum_j r_j^q * g_j = 0 against every generator row
    g, i.e. G * H^dagger = 0.
    """
    he = euclidean_parity_check(z, tower)
    powq = tower.fq2.power_map(tower.q)
    return MatrixGF(tower.fq2, tuple(tuple(powq[v] for v in row) for row in he.data))


def code_matrices(
    z: DefiningSet, tower: FieldTower, verify: bool = True
) -> tuple[MatrixGF, MatrixGF]:
    """(G, H) with H the Hermitian-dual basis; verify=True additionally
    asserts G H^dagger = 0, Hermitian row orthogonality and full ranks."""
    g = build_generator_matrix(z, tower)
    h = build_parity_check_matrix(z, tower)
    if verify:
        n = z.ctx.n
        if not matmul(g, conjugate_transpose(h, tower.q)).is_zero():
            raise VerificationError("G * H^dagger != 0")
        if rank(g) != g.rows or rank(h) != h.rows or g.rows + h.rows != n:
            raise VerificationError("generator/parity-check ranks are not complementary")
    return g, h


def hermitian_orthogonal(u: tuple[int, ...], v: tuple[int, ...], field: Field, q: int) -> bool:
    """Whether sum_j u_j^q * v_j vanishes."""
    powq = field.power_map(q)
    acc = 0
    for x, y in zip(u, v):
        acc = field.add(acc, field.mul(powq[x], y))
    return acc == 0


def rank_hh_dagger(h: MatrixGF) -> int:
    """Exact rank of H * H^dagger over the field of order q^2.

    This is the matrix route to the ebit count; it must equal the size of
    the defining-set overlap computed by the set-algebra route.
    """
    q = isqrt(h.field.order)
    if q * q != h.field.order:
        raise ValueError(f"field order {h.field.order} is not a square")
    return rank(matmul(h, conjugate_transpose(h, q)))


def rowspace_defining_set(m: MatrixGF, tower: FieldTower) -> set[int]:
    """Exponents z with row(root^z) = 0 for every row: the defining set of
    the cyclic code spanned by the rows (rows read as polynomials)."""
    f4 = tower.fq4
    out = set()
    embedded = [[tower.embed(v) for v in row] for row in m.data]
    for z in range(tower.n):
        x = tower.root_power(z)
        ok = True
        for row in embedded:
            acc = 0
            for c in reversed(row):
                acc = f4.add(f4.mul(acc, x), c)
            if acc != 0:
                ok = False
                break
        if ok:
            out.add(z)
    return out


# ---------------------------------------------------------------------------
# exhaustive minimum distance (toy scale)
# ---------------------------------------------------------------------------


def _min_weight_by_codewords(g: MatrixGF) -> int:
    """Enumerate every nonzero codeword m*G; exact and completely dumb."""
    f = g.field
    mul, add, _sub = _ops(f)
    n = g.cols
    best = n + 1
    for msg in itertools.product(range(f.order), repeat=g.rows):
        if not any(msg):
            continue
        w = 0
        for j in range(n):
            acc = 0
            for mi, row in zip(msg, g.data):
                if mi and row[j]:
                    acc = add(acc, mul(mi, row[j]))
            if acc:
                w += 1
        if w < best:
            best = w
    return best


def _min_weight_by_supports(g: MatrixGF, budget: int) -> int | str:
    """Smallest w such that some w columns of a parity check are linearly
    dependent, i.e. some nonzero codeword has support of size w."""
    h = nullspace(g)
    if h.rows == 0:
        # the rowspace is everything: weight-1 codewords exist
        return 1
    n = g.cols
    hcols = list(zip(*h.data))
    examined = 0
    for w in range(1, n + 1):
        for support in itertools.combinations(range(n), w):
            examined += 1
            if examined > budget:
                return BUDGET_EXCEEDED
            sub = MatrixGF(g.field, tuple(zip(*(hcols[j] for j in support))))
            if rank(sub) < w:
                return w
    raise VerificationError("no nonzero codeword found in a nonzero code")


def exhaustive_min_distance(g: MatrixGF, budget: int = 500_000) -> int | str:
    """True minimum Hamming weight of the rowspace of G, or the explicit
    "budget-exceeded" sentinel - never a guess.

    Small message spaces are enumerated outright; otherwise supports are
    scanned in increasing size, charging one unit of budget per support.
    """
    if g.rows == 0:
        raise ValueError("the zero code has no nonzero codeword")
    size = g.field.order**g.rows - 1
    if size <= budget:
        return _min_weight_by_codewords(g)
    return _min_weight_by_supports(g, budget)
