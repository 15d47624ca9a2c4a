"""Exact scalars and dense linear algebra over Q and GF(p).

Scalars are plain Python values: `fractions.Fraction` over the rationals,
int residues in [0, p) over a prime field.  There is no floating point
anywhere; every operation is exact and deterministic (identical inputs
give bit-identical outputs).

Rational matrices are numpy object arrays of Fractions (kept in canonical
reduced form with positive denominator by Fraction itself, so equality is
structural).  GF(p) matrices are int64 arrays; their hot kernels live in
hopfmonad._kernels and carry a numba fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels

MAX_PRIME = 1 << 20


class ExactError(Exception):
    """Base error for the exact-linalg layer."""


class FieldMismatch(ExactError):
    pass


class DimensionMismatch(ExactError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: the rationals, or GF(p) for a word-sized prime p."""

    kind: str  # "Q" | "Fp"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ExactError("rationals take no modulus")
        elif self.kind == "Fp":
            if self.p is None or not _is_prime(self.p):
                raise ExactError(f"modulus {self.p!r} is not prime")
            if self.p >= MAX_PRIME:
                raise ExactError(f"modulus {self.p} too large (max {MAX_PRIME - 1})")
        else:
            raise ExactError(f"unknown field kind {self.kind!r}")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("Q")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("Fp", p)

    @property
    def is_rationals(self) -> bool:
        return self.kind == "Q"

    # -- scalar helpers ------------------------------------------------

    def coerce(self, x) -> Fraction | int:
        if self.is_rationals:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise ExactError(f"cannot coerce {x!r} into Q")
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ExactError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        if isinstance(x, (int, np.integer)):
            return int(x) % self.p
        raise ExactError(f"cannot coerce {x!r} into GF({self.p})")

    def show(self, x) -> str:
        return str(x)

    def inv(self, x):
        if self.is_rationals:
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / x
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(x), self.p - 2, self.p)

    @property
    def zero(self):
        return Fraction(0) if self.is_rationals else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rationals else 1

    def describe(self) -> str:
        return "Q" if self.is_rationals else f"GF({self.p})"

    # -- array helpers ---------------------------------------------------

    def zeros(self, shape) -> np.ndarray:
        if self.is_rationals:
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros((n, n))
        one = self.one
        for i in range(n):
            a[i, i] = one
        return a

    def asarray(self, rows) -> np.ndarray:
        if self.is_rationals:
            arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
            for i, row in enumerate(rows):
                for j, v in enumerate(row):
                    arr[i, j] = self.coerce(v)
            return arr
        return np.array([[self.coerce(v) for v in row] for row in rows],
                        dtype=np.int64).reshape(len(rows), len(rows[0]) if rows else 0)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a if self.is_rationals else a % self.p

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if not self.is_rationals:
            return _kernels.matmul_mod(np.ascontiguousarray(a),
                                       np.ascontiguousarray(b), self.p)
        # structure-constant matrices are mostly zero: accumulate only the
        # nonzero entries of the smaller factor instead of dense np.dot
        rows, inner = a.shape
        cols = b.shape[1]
        if a.size == 0 or b.size == 0:
            return self.zeros((rows, cols))
        nz_a = np.nonzero(a)
        nz_b = np.nonzero(b)
        if len(nz_a[0]) * max(cols, 1) <= len(nz_b[0]) * max(rows, 1):
            out = self.zeros((rows, cols))
            for i, k in zip(*nz_a):
                out[i] = out[i] + a[i, k] * b[k]
            return out
        out = self.zeros((rows, cols))
        for k, j in zip(*nz_b):
            out[:, j] = out[:, j] + a[:, k] * b[k, j]
        return out

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.size == 0 or b.size == 0:
            return self.zeros((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]))
        return self.reduce(np.kron(a, b))

    def tensordot(self, a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
        ax_a, ax_b = axes
        ax_a = [ax_a] if isinstance(ax_a, int) else list(ax_a)
        ax_b = [ax_b] if isinstance(ax_b, int) else list(ax_b)
        ax_a = [x % a.ndim for x in ax_a]
        ax_b = [x % b.ndim for x in ax_b]
        free_a = [i for i in range(a.ndim) if i not in ax_a]
        free_b = [i for i in range(b.ndim) if i not in ax_b]
        con = int(np.prod([a.shape[i] for i in ax_a])) if ax_a else 1
        at = a.transpose(free_a + ax_a).reshape(-1, con)
        bt = b.transpose(ax_b + free_b).reshape(con, -1)
        out = self.matmul(at, bt)
        return out.reshape([a.shape[i] for i in free_a] + [b.shape[i] for i in free_b])

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form; deterministic first-nonzero pivoting."""
        if not self.is_rationals:
            return _kernels.rref_mod(a.copy(), self.p)
        m = a.copy()
        rows, cols = m.shape
        pivots: list[int] = []
        zero = Fraction(0)
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            sel = -1
            for i in range(r, rows):
                if m[i, c] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                m[[r, sel]] = m[[sel, r]]
            nz_cols = np.nonzero(m[r])[0]
            inv = Fraction(1) / m[r, c]
            m[r, nz_cols] = m[r, nz_cols] * inv
            piv_row = m[r, nz_cols]
            factors = m[:, c]
            for i in range(rows):
                if i != r and factors[i] != zero:
                    m[i, nz_cols] = m[i, nz_cols] - factors[i] * piv_row
            pivots.append(c)
            r += 1
        return m, pivots


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class Mat:
    """Dense exact matrix over a FieldSpec.

    Immutable by convention: operations return new matrices and never
    mutate `data` in place.
    """

    __slots__ = ("spec", "data")

    def __init__(self, spec: FieldSpec, data: np.ndarray):
        if data.ndim != 2:
            raise DimensionMismatch(f"matrix data must be 2-d, got shape {data.shape}")
        self.spec = spec
        self.data = data

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_rows(spec: FieldSpec, rows) -> "Mat":
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged rows")
        return Mat(spec, spec.asarray(rows))

    @staticmethod
    def zeros(spec: FieldSpec, rows: int, cols: int) -> "Mat":
        return Mat(spec, spec.zeros((rows, cols)))

    @staticmethod
    def identity(spec: FieldSpec, n: int) -> "Mat":
        return Mat(spec, spec.eye(n))

    # -- basic queries -----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def is_zero(self) -> bool:
        if self.data.size == 0:
            return True
        if self.spec.is_rationals:
            return bool(np.all(self.data == Fraction(0)))
        return bool(np.all(self.data == 0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.spec == other.spec
                and self.data.shape == other.data.shape
                and bool(np.all(self.data == other.data)))

    def __hash__(self):
        raise TypeError("Mat is unhashable")

    def __repr__(self):
        return f"Mat({self.spec.describe()}, {self.data.tolist()!r})"

    # -- arithmetic --------------------------------------------------------

    def _check_same_field(self, other: "Mat"):
        if self.spec != other.spec:
            raise FieldMismatch(f"{self.spec.describe()} vs {other.spec.describe()}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_field(other)
        if self.data.shape != other.data.shape:
            raise DimensionMismatch(f"{self.data.shape} + {other.data.shape}")
        return Mat(self.spec, self.spec.reduce(self.data + other.data))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_field(other)
        if self.data.shape != other.data.shape:
            raise DimensionMismatch(f"{self.data.shape} - {other.data.shape}")
        return Mat(self.spec, self.spec.reduce(self.data - other.data))

    def __neg__(self) -> "Mat":
        return Mat(self.spec, self.spec.reduce(-self.data))

    def scale(self, c) -> "Mat":
        c = self.spec.coerce(c)
        return Mat(self.spec, self.spec.reduce(self.data * c))

    def __matmul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)

    def transpose(self) -> "Mat":
        return Mat(self.spec, self.data.T.copy())

    def col(self, j: int) -> "Mat":
        return Mat(self.spec, self.data[:, j:j + 1].copy())

    def hstack(self, other: "Mat") -> "Mat":
        self._check_same_field(other)
        return Mat(self.spec, np.hstack([self.data, other.data]))

    def entry(self, i: int, j: int):
        return self.data[i, j]

    def to_strings(self) -> list[list[str]]:
        return [[self.spec.show(v) for v in row] for row in self.data.tolist()]


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Exact matrix product."""
    a._check_same_field(b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"({a.rows}x{a.cols}) @ ({b.rows}x{b.cols})")
    return Mat(a.spec, a.spec.matmul(a.data, b.data))


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product, row-major index convention (i_a * rows_b + i_b)."""
    a._check_same_field(b)
    return Mat(a.spec, a.spec.kron(a.data, b.data))


def rref(a: Mat) -> tuple[Mat, list[int]]:
    r, piv = a.spec.rref(a.data)
    return Mat(a.spec, r), piv


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def kernel(a: Mat) -> list[Mat]:
    """Exact basis of the null space, as n x 1 column vectors.

    Deterministic: computed from the reduced echelon form, one vector per
    free column, ordered by free-column index.
    """
    r, pivots = a.spec.rref(a.data)
    cols = a.cols
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = []
    for f in free:
        v = a.spec.zeros((cols, 1))
        v[f, 0] = a.spec.one
        for i, pc in enumerate(pivots):
            v[pc, 0] = a.spec.reduce(np.asarray(-r[i, f])).item() \
                if not a.spec.is_rationals else -r[i, f]
        basis.append(Mat(a.spec, v))
    return basis


def solve_affine(a: Mat, b: Mat) -> tuple[Mat, list[Mat]] | None:
    """Solve a @ x = b exactly.

    Returns (particular solution, nullspace basis) or None when the system
    is inconsistent.  b may have several columns; the particular solution
    then has the same number of columns.
    """
    a._check_same_field(b)
    if a.rows != b.rows:
        raise DimensionMismatch(f"lhs has {a.rows} rows, rhs has {b.rows}")
    aug = np.hstack([a.data, b.data])
    r, pivots = a.spec.rref(aug)
    if any(p >= a.cols for p in pivots):
        return None
    x = a.spec.zeros((a.cols, b.cols))
    for i, pc in enumerate(pivots):
        x[pc, :] = r[i, a.cols:]
    return Mat(a.spec, x), kernel(a)



def kernel_backend() -> str:
    """Active GF(p) kernel backend ("numba" or "numpy")."""
    return _kernels.backend_name()
