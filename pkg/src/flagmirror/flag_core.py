"""Exact matrices, pinned SL(n+1) generators, and flag-variety primitives.

Purpose
-------
Everything downstream (mirror graphs, symbolic identities, numeric solvers)
rests on one fixed pinning of SL(n+1): upper generators x_i(t) = I + t E_{i,i+1},
lower generators y_i(t) = I + t E_{i+1,i}, reflection representatives
s_i = y_i(-1) x_i(1) y_i(-1) (the 2x2 block [[0,1],[-1,0]] at rows i, i+1),
and the principal nilpotent f with ones on the subdiagonal.  This module keeps
those conventions in one place, together with field-agnostic linear algebra
that works uniformly over int, Fraction, Gaussian rationals, float and complex.

A flag is a coset g B- for the lower-triangular Borel B-; concretely it is the
chain of spans of trailing columns of g.  Two matrices represent the same flag
exactly when, for every depth, the maximal minors on the trailing columns agree
up to a common scale; `flag_points_equal` tests precisely that.  Bruhat data is
read off from pivot rows of trailing-column spans in reduced column echelon
form.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "DEFAULT_TOL",
    "GaussianRational",
    "Matrix",
    "apply_word",
    "block_longest_word",
    "bruhat_pivot_rows",
    "bruhat_position",
    "column_space_echelon",
    "determinant",
    "flag_points_equal",
    "identity_matrix",
    "interval_generator",
    "inverse_permutation",
    "is_exact_scalar",
    "is_totally_nonnegative",
    "lower_generator",
    "mat_inverse",
    "mat_mul",
    "mat_sub",
    "peterson_residual",
    "permutation_length",
    "principal_nilpotent",
    "simple_reflection_matrix",
    "standard_longest_word",
    "submatrix",
    "trailing_minors",
    "upper_generator",
    "weight_minor_ratio",
    "word_is_reduced",
    "word_matrix",
    "word_to_permutation",
]

DEFAULT_TOL = 1e-9

Matrix = list  # list[list[scalar]]; rows of equal length


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


class GaussianRational:
    """Exact complex number a + b*i with rational a, b.

    Supports mixed arithmetic with int and Fraction.  Used wherever a
    computation must distinguish exact zero from numerically small, e.g. the
    Peterson membership check for the two purely imaginary flag points of
    Gr2(C^4).
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def i() -> "GaussianRational":
        return GaussianRational(0, 1)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(x)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            o = GaussianRational.coerce(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


_EXACT = (int, Fraction, GaussianRational)


def is_exact_scalar(x) -> bool:
    return isinstance(x, _EXACT)


def _matrix_is_exact(a: Matrix) -> bool:
    return all(is_exact_scalar(x) for row in a for x in row)


def _numeric(x):
    """Best inexact stand-in: float when real, complex otherwise."""
    if isinstance(x, GaussianRational):
        return float(x.re) if x.im == 0 else complex(x)
    if isinstance(x, Fraction):
        return float(x)
    return x


def _exact_div(a, b):
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        return GaussianRational.coerce(a) / GaussianRational.coerce(b)
    return Fraction(a) / Fraction(b)


def scalar_is_zero(x, tol: float = 0.0, scale: float = 1.0) -> bool:
    """Zero test that is exact for exact scalars and relative otherwise."""
    if is_exact_scalar(x):
        return x == 0
    return abs(x) <= tol * max(scale, 1.0)


def max_abs(a: Matrix) -> float:
    best = 0.0
    for row in a:
        for x in row:
            best = max(best, abs(_numeric(x)))
    return best


# ---------------------------------------------------------------------------
# generic matrix algebra
# ---------------------------------------------------------------------------


def identity_matrix(size: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        arow = a[i]
        orow = []
        for j in range(cols):
            acc = arow[0] * b[0][j]
            for t in range(1, inner):
                acc = acc + arow[t] * b[t][j]
            orow.append(acc)
        out.append(orow)
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def determinant(a: Matrix, tol: float = DEFAULT_TOL):
    """Determinant by Gaussian elimination.

    Exact entries (int, Fraction, Gaussian rational) get fraction arithmetic
    with first-nonzero pivoting; inexact entries get partial pivoting with a
    relative zero threshold.
    """
    size = len(a)
    if size == 0:
        return 1
    exact = _matrix_is_exact(a)
    if exact:
        m = [list(row) for row in a]
    else:
        m = [[_numeric(x) for x in row] for row in a]
    scale = 0.0 if exact else max_abs(m)
    det = 1
    sign = 1
    for col in range(size):
        pivot_row = None
        if exact:
            for r in range(col, size):
                if m[r][col] != 0:
                    pivot_row = r
                    break
        else:
            best = -1.0
            for r in range(col, size):
                mag = abs(m[r][col])
                if mag > best:
                    best, pivot_row = mag, r
            if pivot_row is None or abs(m[pivot_row][col]) <= tol * max(scale, 1.0) * 1e-6:
                # keep tiny pivots: dropping them would misreport near-zero
                # determinants; only an exact zero column kills the product
                if best == 0.0:
                    return 0
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        piv = m[col][col]
        det = det * piv
        for r in range(col + 1, size):
            if exact:
                if m[r][col] == 0:
                    continue
                factor = _exact_div(m[r][col], piv)
            else:
                factor = m[r][col] / piv
            for c in range(col, size):
                m[r][c] = m[r][c] - factor * m[col][c]
    return sign * det if sign == 1 else -det


def mat_inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError on a singular matrix."""
    size = len(a)
    exact = _matrix_is_exact(a)
    if exact:
        m = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in a]
        aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(size)] for i, row in enumerate(m)]
    else:
        aug = [[_numeric(x) for x in row] + [1.0 if i == j else 0.0 for j in range(size)] for i, row in enumerate(a)]
    for col in range(size):
        pivot_row = None
        if exact:
            for r in range(col, size):
                if aug[r][col] != 0:
                    pivot_row = r
                    break
        else:
            best = -1.0
            for r in range(col, size):
                if abs(aug[r][col]) > best:
                    best, pivot_row = abs(aug[r][col]), r
            if best == 0.0:
                pivot_row = None
        if pivot_row is None:
            raise ZeroDivisionError("singular matrix")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        inv_row = []
        for c in range(2 * size):
            val = _exact_div(aug[col][c], piv) if exact else aug[col][c] / piv
            inv_row.append(val)
        aug[col] = inv_row
        for r in range(size):
            if r == col:
                continue
            factor = aug[r][col]
            if exact and factor == 0:
                continue
            for c in range(2 * size):
                aug[r][c] = aug[r][c] - factor * aug[col][c]
    return [row[size:] for row in aug]


# ---------------------------------------------------------------------------
# pinned generators
# ---------------------------------------------------------------------------


def upper_generator(n: int, i: int, t) -> Matrix:
    """x_i(t) = I + t E_{i,i+1} in SL(n+1), 1 <= i <= n."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    m = identity_matrix(n + 1)
    m[i - 1][i] = t
    return m


def lower_generator(n: int, i: int, t) -> Matrix:
    """y_i(t) = I + t E_{i+1,i} in SL(n+1), 1 <= i <= n."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    m = identity_matrix(n + 1)
    m[i][i - 1] = t
    return m


def interval_generator(n: int, i: int, iprime: int, t) -> Matrix:
    """I + t E_{i, iprime+1}: the one-parameter group for the root spanning
    rows i..iprime.  Coincides with x_i(t) when iprime == i."""
    if not 1 <= i <= iprime <= n:
        raise ValueError(f"interval ({i},{iprime}) out of range for n={n}")
    m = identity_matrix(n + 1)
    m[i - 1][iprime] = t
    return m


def simple_reflection_matrix(n: int, i: int, inverse: bool = False) -> Matrix:
    """Representative of s_i: the block [[0,1],[-1,0]] at rows/columns i, i+1.

    Sends e_i to -e_{i+1} and e_{i+1} to e_i; `inverse=True` gives its inverse
    (the transpose).
    """
    if not 1 <= i <= n:
        raise ValueError(f"reflection index {i} out of range 1..{n}")
    m = identity_matrix(n + 1)
    m[i - 1][i - 1] = 0
    m[i][i] = 0
    if inverse:
        m[i - 1][i] = -1
        m[i][i - 1] = 1
    else:
        m[i - 1][i] = 1
        m[i][i - 1] = -1
    return m


def word_matrix(n: int, word: Sequence[int], inverse: bool = False) -> Matrix:
    """Product of reflection representatives along `word` (left to right).

    With `inverse=True`, returns the inverse of that product.
    """
    m = identity_matrix(n + 1)
    letters = list(word)
    if inverse:
        for i in reversed(letters):
            m = mat_mul(m, simple_reflection_matrix(n, i, inverse=True))
        return m
    for i in letters:
        m = mat_mul(m, simple_reflection_matrix(n, i))
    return m


def principal_nilpotent(n: int) -> Matrix:
    """f: ones on the subdiagonal, zero elsewhere."""
    m = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        m[i][i - 1] = 1
    return m


# ---------------------------------------------------------------------------
# words and permutations
# ---------------------------------------------------------------------------


def word_to_permutation(n: int, word: Sequence[int]) -> tuple:
    """One-line permutation (w(1),...,w(n+1)) for the product of simple
    transpositions along `word`, leftmost letter applied last."""
    perm = list(range(1, n + 2))
    for i in word:
        # right multiplication by s_i swaps positions i, i+1
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def apply_word(n: int, word: Sequence[int], j: int) -> int:
    """Image of j under the permutation of `word`."""
    return word_to_permutation(n, word)[j - 1]


def permutation_length(perm: Sequence[int]) -> int:
    """Number of inversions."""
    count = 0
    for a, b in combinations(range(len(perm)), 2):
        if perm[a] > perm[b]:
            count += 1
    return count


def word_is_reduced(n: int, word: Sequence[int]) -> bool:
    return permutation_length(word_to_permutation(n, word)) == len(word)


def inverse_permutation(perm: Sequence[int]) -> tuple:
    out = [0] * len(perm)
    for pos, val in enumerate(perm, start=1):
        out[val - 1] = pos
    return tuple(out)


def standard_longest_word(n: int) -> tuple:
    """(s_n..s_1)(s_n..s_2)...(s_n): the pinned reduced word for the longest
    element of S_{n+1}, grouped in columns r = 1..n with letters n down to r."""
    word = []
    for r in range(1, n + 1):
        word.extend(range(n, r - 1, -1))
    return tuple(word)


def block_longest_word(generators: Iterable[int]) -> tuple:
    """Reduced word for the longest element of the parabolic subgroup generated
    by the given simple reflections: per maximal run a+1..b of consecutive
    indices, the word (s_b..s_{a+1})(s_b..s_{a+2})...(s_b)."""
    gens = sorted(set(generators))
    word: list[int] = []
    run_start = 0
    while run_start < len(gens):
        run_end = run_start
        while run_end + 1 < len(gens) and gens[run_end + 1] == gens[run_end] + 1:
            run_end += 1
        lo, hi = gens[run_start], gens[run_end]
        for t in range(lo, hi + 1):
            word.extend(range(hi, t - 1, -1))
        run_start = run_end + 1
    return tuple(word)


# ---------------------------------------------------------------------------
# flags
# ---------------------------------------------------------------------------


def trailing_minors(g: Matrix, depth: int, tol: float = DEFAULT_TOL) -> list:
    """All depth x depth minors on the trailing `depth` columns, ordered by the
    lexicographic row subset.  These are homogeneous coordinates of the
    depth-dimensional piece of the flag of g."""
    size = len(g)
    cols = list(range(size - depth, size))
    return [determinant(submatrix(g, rows, cols), tol) for rows in combinations(range(size), depth)]


def _vectors_proportional(a: list, b: list, tol: float) -> bool:
    exact = all(is_exact_scalar(x) for x in a + b)
    if exact:
        if all(x == 0 for x in a) or all(x == 0 for x in b):
            return False
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if a[i] * b[j] != a[j] * b[i]:
                    return False
        return True
    na = [_numeric(x) for x in a]
    nb = [_numeric(x) for x in b]
    sa = max(abs(x) for x in na)
    sb = max(abs(x) for x in nb)
    if sa == 0.0 or sb == 0.0:
        return False
    scale = sa * sb
    for i in range(len(na)):
        for j in range(i + 1, len(na)):
            if abs(na[i] * nb[j] - na[j] * nb[i]) > tol * scale:
                return False
    return True


def flag_points_equal(g: Matrix, h: Matrix, tol: float = DEFAULT_TOL) -> bool:
    """Whether g B- and h B- are the same flag: for every depth the trailing
    minor vectors must be proportional."""
    size = len(g)
    if len(h) != size:
        return False
    for depth in range(1, size):
        if not _vectors_proportional(trailing_minors(g, depth, tol), trailing_minors(h, depth, tol), tol):
            return False
    return True


def column_space_echelon(vectors: Sequence[Sequence], tol: float = DEFAULT_TOL):
    """Reduced echelon basis of the span of the given coordinate vectors.

    Returns (basis, pivots): `basis[t]` has entry 1 at coordinate `pivots[t]`,
    zeros at the other pivot coordinates, and pivots are strictly increasing.
    The basis is the canonical one for the subspace, so every coordinate of a
    basis vector is well defined; extraction of Deodhar parameters reads such
    coordinates directly.
    """
    if not vectors:
        return [], []
    dim = len(vectors[0])
    rows = [list(v) for v in vectors]
    exact = all(is_exact_scalar(x) for row in rows for x in row)
    scale = 1.0
    if not exact:
        rows = [[_numeric(x) for x in row] for row in rows]
        scale = max((abs(x) for row in rows for x in row), default=0.0)
    basis: list[list] = []
    pivots: list[int] = []
    rank = 0
    for coord in range(dim):
        pivot_row = None
        if exact:
            for r in range(rank, len(rows)):
                if rows[r][coord] != 0:
                    pivot_row = r
                    break
        else:
            best = 0.0
            for r in range(rank, len(rows)):
                if abs(rows[r][coord]) > best:
                    best, pivot_row = abs(rows[r][coord]), r
            if pivot_row is not None and abs(rows[pivot_row][coord]) <= tol * max(scale, 1.0):
                pivot_row = None
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][coord]
        if exact:
            rows[rank] = [_exact_div(x, piv) if x != 0 or not isinstance(x, int) else Fraction(0) for x in rows[rank]]
        else:
            rows[rank] = [x / piv for x in rows[rank]]
        for r in range(len(rows)):
            if r == rank:
                continue
            factor = rows[r][coord]
            if exact and factor == 0:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(coord)
        rank += 1
    return rows[:rank], pivots


def bruhat_pivot_rows(g: Matrix, depth: int, tol: float = DEFAULT_TOL) -> frozenset:
    """Top-pivot rows (1-indexed) of the span of the trailing `depth` columns."""
    size = len(g)
    vectors = [[g[i][j] for i in range(size)] for j in range(size - depth, size)]
    basis, pivots = column_space_echelon(vectors, tol)
    if len(pivots) != depth:
        raise ValueError("matrix does not have full column rank on trailing columns")
    return frozenset(p + 1 for p in pivots)


def bruhat_position(g: Matrix, tol: float = DEFAULT_TOL) -> tuple:
    """Permutation w with g in B- w B-: read off pivot-row sets at all depths."""
    size = len(g)
    w = [0] * size
    previous: frozenset = frozenset()
    for depth in range(1, size + 1):
        current = bruhat_pivot_rows(g, depth, tol)
        (new_row,) = current - previous
        w[size - depth] = new_row
        previous = current
    return tuple(w)


# ---------------------------------------------------------------------------
# Peterson membership, chamber minors, total positivity
# ---------------------------------------------------------------------------


def peterson_residual(g: Matrix) -> list:
    """Entries of g^{-1} f g strictly above the superdiagonal, row-major.

    The flag g B- lies on the Peterson variety exactly when every entry
    vanishes; the zero test is representative-independent because the
    condition is stable under right multiplication by B-.
    """
    size = len(g)
    conj = mat_mul(mat_inverse(g), mat_mul(principal_nilpotent(size - 1), g))
    return [conj[i][j] for i in range(size) for j in range(i + 2, size)]


def weight_minor_ratio(g: Matrix, word: Sequence[int], r: int, tol: float = DEFAULT_TOL):
    """Chamber minor ratio attached to a Weyl translate of a fundamental weight.

    Parameters
    ----------
    g : matrix representing the flag g B-.
    word : reduced word for the translating permutation w.
    r : fundamental-weight index, 1 <= r <= n.

    Returns the signed ratio of the maximal minor of g on (rows sorted
    w({r+1..n+1}), trailing columns) to the principal trailing minor (rows
    {r+1..n+1}).  The sign makes the numerator the coefficient of the
    w-translated wedge basis vector, so the ratio is independent of the
    chosen representative of the coset.
    """
    size = len(g)
    n = size - 1
    cols = list(range(r, size))
    perm = word_to_permutation(n, word)
    rows = sorted(perm[c] - 1 for c in range(r, size))
    wedge_sign = determinant(submatrix(word_matrix(n, word), rows, cols))
    if wedge_sign not in (1, -1):
        raise AssertionError("wedge coefficient of a Weyl representative must be +-1")
    num = determinant(submatrix(g, rows, cols), tol)
    den = determinant(submatrix(g, cols, cols), tol)
    if scalar_is_zero(den, tol, max_abs(g) ** len(cols)):
        raise ZeroDivisionError("principal trailing minor vanishes; ratio undefined")
    if is_exact_scalar(num) and is_exact_scalar(den):
        return wedge_sign * _exact_div(num, den)
    return wedge_sign * _numeric(num) / _numeric(den)


def is_totally_nonnegative(g: Matrix, tol: float = 0.0) -> bool:
    """All minors of all sizes >= -tol.  Guarded to matrices of size <= 8,
    which covers every rank this artifact solves at desk scale."""
    size = len(g)
    if size > 8:
        raise ValueError("total nonnegativity check limited to matrices of size <= 8")
    for s in range(1, size + 1):
        for rows in combinations(range(size), s):
            for cols in combinations(range(size), s):
                d = determinant(submatrix(g, rows, cols))
                if is_exact_scalar(d):
                    if d < 0:
                        return False
                elif _numeric(d).real < -tol or abs(_numeric(d).imag) > tol:
                    return False
    return True
