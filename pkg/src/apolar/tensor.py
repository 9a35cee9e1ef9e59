"""Dense exact tensors: flattenings, minors, and the 3x3x3 slice pencil.

Entries are stored row-major with the last index fastest.  A flattening
reinterprets the tensor as a matrix by splitting the modes into a left and
right group; multi-indices within each group are enumerated
lexicographically with the listed modes in ascending order, which pins the
matrix layout bit for bit.

For 3x3x3 tensors the antisymmetric 9x9 pencil built from the first-mode
slices has rank 2 on rank-one tensors and is additive, so its rank bounds
twice the tensor rank from above and its determinant (degree 9, and 9216
monomials when expanded generically) vanishes on every tensor of rank at
most 4.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .linalg import QMatrix, mat_det, mat_rank


class InvalidModeSet(ValueError):
    pass


class WrongShape(ValueError):
    pass


class DenseTensor:
    """Dense tensor over Fractions; shape is a tuple of positive extents."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape, entries):
        shape = tuple(int(d) for d in shape)
        if any(d < 1 for d in shape):
            raise WrongShape("extents must be positive")
        entries = [Fraction(e) for e in entries]
        if len(entries) != prod(shape):
            raise WrongShape("expected %d entries, got %d" % (prod(shape), len(entries)))
        self.shape = shape
        self.entries = entries

    @classmethod
    def zero(cls, shape):
        return cls(shape, [Fraction(0)] * prod(shape))

    @classmethod
    def rank_one(cls, factors, coeff=1):
        """coeff * v1 (x) v2 (x) ... (x) vt for the given factor vectors."""
        shape = tuple(len(v) for v in factors)
        entries = [Fraction(coeff)]
        for v in factors:
            entries = [e * Fraction(c) for e in entries for c in v]
        return cls(shape, entries)

    def flat_index(self, multi_index):
        if len(multi_index) != len(self.shape):
            raise WrongShape("index order mismatch")
        flat = 0
        for k, d in zip(multi_index, self.shape):
            if not 0 <= k < d:
                raise IndexError("index out of range")
            flat = flat * d + k
        return flat

    def at(self, multi_index):
        return self.entries[self.flat_index(multi_index)]

    def __add__(self, other):
        if self.shape != other.shape:
            raise WrongShape("shape mismatch")
        return DenseTensor(self.shape, [a + b for a, b in zip(self.entries, other.entries)])

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return DenseTensor(self.shape, [scalar * e for e in self.entries])

    def __eq__(self, other):
        return (isinstance(other, DenseTensor) and self.shape == other.shape
                and self.entries == other.entries)

    def __repr__(self):
        return "DenseTensor(shape=%r)" % (self.shape,)


def _group_indices(shape, modes):
    """Multi-indices of the listed modes (ascending), lexicographic order."""
    out = [()]
    for m in modes:
        out = [idx + (k,) for idx in out for k in range(shape[m])]
    return out


def flatten(tensor, left_modes):
    """Matrix of the tensor with the given modes (1-based) indexing rows."""
    order = len(tensor.shape)
    left = sorted(set(left_modes))
    if not left or any(m < 1 or m > order for m in left) or len(left) >= order:
        raise InvalidModeSet("left modes must be a nonempty proper subset of 1..%d" % order)
    left = [m - 1 for m in left]
    right = [m for m in range(order) if m not in left]
    row_idx = _group_indices(tensor.shape, left)
    col_idx = _group_indices(tensor.shape, right)
    rows = []
    for ri in row_idx:
        row = []
        for ci in col_idx:
            full = [0] * order
            for m, k in zip(left, ri):
                full[m] = k
            for m, k in zip(right, ci):
                full[m] = k
            row.append(tensor.at(tuple(full)))
        rows.append(row)
    return QMatrix.from_rows(rows)


def multilinear_rank(tensor):
    """Ranks of the single-mode flattenings, one per mode."""
    if len(tensor.shape) < 2:
        raise WrongShape("multilinear rank needs order at least 2")
    return tuple(mat_rank(flatten(tensor, [m])) for m in range(1, len(tensor.shape) + 1))


def gss_minor_test(tensor, r):
    """True iff every single-mode flattening has rank at most r.

    Equivalently all (r+1)-minors of the flattenings vanish; a necessary
    condition for the tensor to lie in the r-th secant of the rank-one
    locus.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    return all(rk <= r for rk in multilinear_rank(tensor))


def matmul_tensor(n):
    """The bilinear map (A, B) -> AB on n x n matrices, as an n^2 cube."""
    if n < 1:
        raise ValueError("n must be at least 1")
    t = DenseTensor.zero((n * n, n * n, n * n))
    for i in range(n):
        for j in range(n):
            for l in range(n):
                idx = (i * n + j, j * n + l, i * n + l)
                t.entries[t.flat_index(idx)] = Fraction(1)
    return t


@dataclass
class StrassenMatrix:
    tensor: DenseTensor
    matrix: QMatrix

    def rank(self):
        return mat_rank(self.matrix)

    def det(self):
        return mat_det(self.matrix)


# block pattern: (block row, block col) -> (sign, first-mode slice)
_BLOCKS = {
    (0, 1): (1, 0), (0, 2): (-1, 1),
    (1, 0): (-1, 0), (1, 2): (1, 2),
    (2, 0): (1, 1), (2, 1): (-1, 2),
}


def strassen_matrix(tensor):
    """The 9x9 antisymmetric block pencil of a 3x3x3 tensor's slices."""
    if tensor.shape != (3, 3, 3):
        raise WrongShape("3x3x3 tensor required, got %r" % (tensor.shape,))
    rows = []
    for r in range(9):
        row = []
        for c in range(9):
            cell = _BLOCKS.get((r // 3, c // 3))
            if cell is None:
                row.append(Fraction(0))
            else:
                sign, a = cell
                row.append(sign * tensor.at((a, r % 3, c % 3)))
        rows.append(row)
    return StrassenMatrix(tensor, QMatrix.from_rows(rows))


class SymbolicDet:
    """Expanded determinant of the generic slice pencil, 27 indeterminates.

    Terms map exponent tuples (indexed by flat tensor position 9a + 3b + c)
    to integer coefficients.
    """

    def __init__(self, terms):
        self.terms = terms
        self._compact = [(coeff, tuple((pos, e) for pos, e in enumerate(mono) if e))
                         for mono, coeff in terms.items()]

    @property
    def term_count(self):
        return len(self.terms)

    @property
    def total_degree(self):
        return max(sum(m) for m in self.terms)

    def evaluate(self, tensor):
        """Substitute a concrete 3x3x3 tensor for the indeterminates."""
        if tensor.shape != (3, 3, 3):
            raise WrongShape("3x3x3 tensor required")
        integral = all(e.denominator == 1 for e in tensor.entries)
        vals = [int(e) for e in tensor.entries] if integral else tensor.entries
        total = 0 if integral else Fraction(0)
        for coeff, support in self._compact:
            val = coeff
            for pos, e in support:
                val *= vals[pos] if e == 1 else vals[pos] ** e
            total += val
        return Fraction(total)


_SYMBOLIC_CACHE = None


def strassen_det_symbolic():
    """Expand the generic pencil determinant once; cached afterwards.

    Cofactor expansion row by row; minors are memoized on the surviving
    column set, and every block of structural zeros prunes the recursion.
    """
    global _SYMBOLIC_CACHE
    if _SYMBOLIC_CACHE is not None:
        return _SYMBOLIC_CACHE

    structure = []
    for r in range(9):
        row = []
        for c in range(9):
            cell = _BLOCKS.get((r // 3, c // 3))
            if cell is None:
                row.append(None)
            else:
                sign, a = cell
                row.append((sign, 9 * a + 3 * (r % 3) + (c % 3)))
        structure.append(row)

    memo = {}

    def minor(cols):
        if not cols:
            return {(0,) * 27: 1}
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = structure[9 - len(cols)]
        out = {}
        for pos, c in enumerate(cols):
            cell = row[c]
            if cell is None:
                continue
            sign, var = cell
            if pos % 2:
                sign = -sign
            for mono, coeff in minor(cols[:pos] + cols[pos + 1:]).items():
                key = list(mono)
                key[var] += 1
                key = tuple(key)
                prev = out.get(key, 0)
                total = prev + sign * coeff
                if total:
                    out[key] = total
                elif key in out:
                    del out[key]
        memo[cols] = out
        return out

    _SYMBOLIC_CACHE = SymbolicDet(minor(tuple(range(9))))
    return _SYMBOLIC_CACHE


def parse_rational(value):
    """Accept int, or 'p/q' / 'p' strings, as an exact Fraction."""
    if isinstance(value, bool):
        raise ValueError("boolean is not a tensor entry")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError("tensor entries must be integers or 'p/q' strings, got %r" % (value,))


def format_rational(value):
    """Integers stay JSON integers; everything else becomes 'p/q'."""
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return "%d/%d" % (value.numerator, value.denominator)


def tensor_from_json(obj):
    """Read a tensor from the dense or rank-one-sum JSON layouts."""
    if not isinstance(obj, dict):
        raise ValueError("tensor JSON must be an object")
    if "rank_one_sum" in obj:
        total = None
        for item in obj["rank_one_sum"]:
            factors = [[parse_rational(x) for x in v] for v in item["factors"]]
            coeff = parse_rational(item.get("coeff", 1))
            term = DenseTensor.rank_one(factors, coeff)
            total = term if total is None else total + term
        if total is None:
            raise ValueError("rank_one_sum must be nonempty")
        return total
    if "shape" in obj and "entries" in obj:
        return DenseTensor(obj["shape"], [parse_rational(e) for e in obj["entries"]])
    raise ValueError("tensor JSON needs 'shape'+'entries' or 'rank_one_sum'")


def tensor_to_json(tensor):
    return {"shape": list(tensor.shape),
            "entries": [format_rational(e) for e in tensor.entries]}
