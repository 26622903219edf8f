"""Exact scalar, polynomial, rational-function and matrix arithmetic.

Everything here is immutable after construction and uses
``fractions.Fraction`` coefficients throughout, so results are exact and
deterministic.  Polynomials are stored as dicts from exponent tuples to
coefficients with the variable list sorted by name; the canonical text form
(lexicographic term order over that variable order) is what golden files and
JSON reports serialize.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Q]


def _as_q(value) -> Q:
    if isinstance(value, Q):
        return value
    if isinstance(value, int):
        return Q(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


class MPoly:
    """Multivariate polynomial with exact rational coefficients.

    ``vars`` is a sorted tuple of variable names; ``terms`` maps exponent
    tuples (aligned with ``vars``) to nonzero Fractions.  Instances are
    canonical: no zero coefficients, and no variable appears with exponent 0
    in every term (unused variables are projected away), so ``==`` is
    structural.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Tuple[str, ...], terms: Dict[Exponents, Q], _canonical: bool = False):
        if _canonical:
            object.__setattr__(self, "vars", vars)
            object.__setattr__(self, "terms", terms)
            return
        cleaned = {e: c for e, c in terms.items() if c != 0}
        used = [i for i in range(len(vars)) if any(e[i] for e in cleaned)]
        if len(used) != len(vars):
            vars = tuple(vars[i] for i in used)
            cleaned = _merge_exps({tuple(e[i] for i in used): c for e, c in cleaned.items()})
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("MPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c) -> "MPoly":
        c = _as_q(c)
        if c == 0:
            return MPoly((), {}, _canonical=True)
        return MPoly((), {(): c}, _canonical=True)

    @staticmethod
    def var(name: str) -> "MPoly":
        return MPoly((name,), {(1,): Q(1)}, _canonical=True)

    @staticmethod
    def zero() -> "MPoly":
        return _ZERO

    @staticmethod
    def one() -> "MPoly":
        return _ONE

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.vars

    def const_value(self) -> Q:
        if self.vars:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Q(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def leading(self) -> Tuple[Exponents, Q]:
        """Leading term under lex order over the sorted variable tuple."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    # -- arithmetic ----------------------------------------------------

    def _aligned(self, other: "MPoly") -> Tuple[Tuple[str, ...], Dict[Exponents, Q], Dict[Exponents, Q]]:
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged = tuple(sorted(set(self.vars) | set(other.vars)))
        return merged, _remap(self, merged), _remap(other, merged)

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        vars_, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, Q(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly(vars_, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()}, _canonical=True)

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return _ZERO
        vars_, a, b = self._aligned(other)
        out: Dict[Exponents, Q] = {}
        if len(a) > len(b):
            a, b = b, a
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e)
                if s is None:
                    out[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s == 0:
                        del out[e]
                    else:
                        out[e] = s
        return MPoly(vars_, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        from_rfrac = RFrac(self)
        return from_rfrac / other

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- substitution / evaluation --------------------------------------

    def eval(self, assignment: Mapping[str, Scalar]) -> Q:
        """Exact evaluation; every variable must be assigned."""
        for v in self.vars:
            if v not in assignment:
                raise ValueError(f"missing assignment for variable '{v}'")
        total = Q(0)
        values = [_as_q(assignment[v]) for v in self.vars]
        for e, c in self.terms.items():
            term = c
            for val, exp in zip(values, e):
                if exp:
                    term *= val ** exp
            total += term
        return total

    def subs(self, assignment: Mapping[str, Union[Scalar, "MPoly"]]) -> "MPoly":
        """Substitute polynomials (or rationals) for some variables."""
        out: MPoly = _ZERO
        for e, c in self.terms.items():
            term: MPoly = MPoly.const(c)
            for name, exp in zip(self.vars, e):
                if not exp:
                    continue
                if name in assignment:
                    repl = assignment[name]
                    repl_p = repl if isinstance(repl, MPoly) else MPoly.const(repl)
                    term = term * repl_p ** exp
                else:
                    term = term * MPoly((name,), {(exp,): Q(1)}, _canonical=True)
            out = out + term
        return out

    def divexact(self, divisor: "MPoly") -> Optional["MPoly"]:
        """Return self/divisor if the division is exact, else None."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return _ZERO
        if divisor.is_const():
            inv = Q(1) / divisor.const_value()
            return MPoly(self.vars, {e: c * inv for e, c in self.terms.items()}, _canonical=True)
        vars_, rem_terms, div_terms = self._aligned(divisor)
        rem = dict(rem_terms)
        div_lead = max(div_terms)
        div_lc = div_terms[div_lead]
        quot: Dict[Exponents, Q] = {}
        while rem:
            lead = max(rem)
            qe = tuple(a - b for a, b in zip(lead, div_lead))
            if any(x < 0 for x in qe):
                return None
            qc = rem[lead] / div_lc
            quot[qe] = quot.get(qe, Q(0)) + qc
            for e, c in div_terms.items():
                t = tuple(a + b for a, b in zip(qe, e))
                s = rem.get(t, Q(0)) - qc * c
                if s == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = s
        return MPoly(vars_, quot)

    # -- serialization ---------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, e) if k
            )
            if mono:
                if c == 1:
                    body = mono
                elif c == -1:
                    body = f"-{mono}"
                else:
                    body = f"{c}*{mono}"
            else:
                body = str(c)
            pieces.append(body)
        out = pieces[0]
        for body in pieces[1:]:
            out += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"


def _merge_exps(terms: Dict[Exponents, Q]) -> Dict[Exponents, Q]:
    out: Dict[Exponents, Q] = {}
    for e, c in terms.items():
        s = out.get(e, Q(0)) + c
        if s == 0:
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _remap(p: MPoly, vars_: Tuple[str, ...]) -> Dict[Exponents, Q]:
    idx = {v: i for i, v in enumerate(vars_)}
    positions = [idx[v] for v in p.vars]
    out: Dict[Exponents, Q] = {}
    n = len(vars_)
    for e, c in p.terms.items():
        ne = [0] * n
        for pos, k in zip(positions, e):
            ne[pos] = k
        out[tuple(ne)] = c
    return out


def _coerce_poly(x):
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Q)):
        return MPoly.const(x)
    return NotImplemented


_ZERO = MPoly((), {}, _canonical=True)
_ONE = MPoly((), {(): Q(1)}, _canonical=True)


def poly_eval(f: MPoly, assignment: Mapping[str, Scalar]) -> Q:
    """Module-level alias for :meth:`MPoly.eval`."""
    return f.eval(assignment)


class RFrac:
    """Rational function num/den with light normalization.

    Normalization: zero numerator forces den = 1; the monomial gcd of all
    terms is cancelled; the denominator is made monic (lex leading
    coefficient 1); and exact polynomial division collapses den into num
    whenever possible.  Equality falls back to cross-multiplication, so the
    partial normal form is only a fast path.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        if num is NotImplemented:
            raise TypeError("cannot build RFrac from this numerator")
        if den is None:
            den = _ONE
        else:
            den = _coerce_poly(den)
            if den is NotImplemented:
                raise TypeError("cannot build RFrac from this denominator")
        if den.is_zero():
            raise ZeroDivisionError("RFrac denominator is zero")
        num, den = _normalize_frac(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RFrac is immutable")

    @staticmethod
    def const(c) -> "RFrac":
        return RFrac(MPoly.const(c))

    @staticmethod
    def var(name: str) -> "RFrac":
        return RFrac(MPoly.var(name))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Q:
        return self.num.const_value() / self.den.const_value()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RFrac(self.num + other.num, self.den)
        return RFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RFrac)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return RFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "RFrac":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RFrac(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            return self.inv() ** (-n)
        return RFrac(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num == other.num and self.den == other.den:
            return True
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # Equality is cross-multiplication, which the partial normal form
        # does not canonicalize, so only constants get fine-grained hashes.
        if self.is_const():
            return hash(self.const_value())
        return 0

    def eval(self, assignment: Mapping[str, Scalar]) -> Q:
        den = self.den.eval(assignment)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the assignment")
        return self.num.eval(assignment) / den

    def subs(self, assignment: Mapping[str, Union[Scalar, MPoly]]) -> "RFrac":
        return RFrac(self.num.subs(assignment), self.den.subs(assignment))

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RFrac({self})"


def _normalize_frac(num: MPoly, den: MPoly) -> Tuple[MPoly, MPoly]:
    if num.is_zero():
        return _ZERO, _ONE
    # Cancel the monomial gcd.
    vars_ = tuple(sorted(set(num.vars) | set(den.vars)))
    if vars_:
        nt = _remap(num, vars_)
        dt = _remap(den, vars_)
        mins = [min(min(e[i] for e in nt), min(e[i] for e in dt)) for i in range(len(vars_))]
        if any(mins):
            nt = {tuple(a - m for a, m in zip(e, mins)): c for e, c in nt.items()}
            dt = {tuple(a - m for a, m in zip(e, mins)): c for e, c in dt.items()}
            num = MPoly(vars_, nt)
            den = MPoly(vars_, dt)
    # Make the denominator monic.
    _, lc = den.leading()
    if lc != 1:
        inv = Q(1) / lc
        num = MPoly(num.vars, {e: c * inv for e, c in num.terms.items()}, _canonical=True)
        den = MPoly(den.vars, {e: c * inv for e, c in den.terms.items()}, _canonical=True)
    if den == _ONE:
        return num, den
    q = num.divexact(den)
    if q is not None:
        return q, _ONE
    return num, den


def _coerce_frac(x):
    if isinstance(x, RFrac):
        return x
    if isinstance(x, MPoly):
        return RFrac(x)
    if isinstance(x, (int, Q)):
        return RFrac.const(x)
    return NotImplemented


R_ZERO = RFrac.const(0)
R_ONE = RFrac.const(1)


class SymMatrix:
    """Dense matrix over RFrac.  All matrices in scope are small (≤ 21×21)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        data = tuple(tuple(_coerce_entry(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("SymMatrix is immutable")

    @staticmethod
    def identity(n: int) -> "SymMatrix":
        return SymMatrix([[R_ONE if i == j else R_ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "SymMatrix":
        return SymMatrix([[R_ZERO] * cols for _ in range(rows)])

    @staticmethod
    def diagonal(values: Sequence) -> "SymMatrix":
        vals = [_coerce_entry(v) for v in values]
        n = len(vals)
        return SymMatrix([[vals[i] if i == j else R_ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, key: Tuple[int, int]) -> RFrac:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[RFrac, ...]:
        return self.entries[i]

    def col(self, j: int) -> Tuple[RFrac, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __mul__(self, other):
        if isinstance(other, SymMatrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"dimension mismatch: ({self.rows}x{self.cols}) * ({other.rows}x{other.cols})"
                )
            out = []
            for i in range(self.rows):
                row = []
                for j in range(other.cols):
                    acc = R_ZERO
                    for k in range(self.cols):
                        a = self.entries[i][k]
                        if a.is_zero():
                            continue
                        b = other.entries[k][j]
                        if b.is_zero():
                            continue
                        acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return SymMatrix(out)
        scalar = _coerce_frac(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other):
        scalar = _coerce_frac(other)
        if scalar is NotImplemented:
            return NotImplemented
        return self.scale(scalar)

    def scale(self, scalar) -> "SymMatrix":
        scalar = _coerce_frac(scalar)
        return SymMatrix([[scalar * x for x in row] for row in self.entries])

    def __add__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix addition")
        return SymMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2)
        )

    def __hash__(self):
        return hash((self.rows, self.cols))

    def transpose(self) -> "SymMatrix":
        return SymMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def subs(self, assignment: Mapping[str, Union[Scalar, MPoly]]) -> "SymMatrix":
        return SymMatrix([[x.subs(assignment) for x in row] for row in self.entries])

    def eval(self, assignment: Mapping[str, Scalar]) -> "SymMatrix":
        return SymMatrix([[RFrac.const(x.eval(assignment)) for x in row] for row in self.entries])

    def det(self) -> RFrac:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if all(x.den == _ONE for row in self.entries for x in row):
            return RFrac(_bareiss_det([[x.num for x in row] for row in self.entries]))
        return _cofactor_det(self.entries)

    def rank(self) -> int:
        """Rank over the rational-function field (exact Gaussian elimination)."""
        m = [list(row) for row in self.entries]
        rank = 0
        row = 0
        for col in range(self.cols):
            pivot = None
            for r in range(row, self.rows):
                if not m[r][col].is_zero():
                    pivot = r
                    break
            if pivot is None:
                continue
            m[row], m[pivot] = m[pivot], m[row]
            inv = m[row][col].inv()
            for r in range(row + 1, self.rows):
                if m[r][col].is_zero():
                    continue
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
            rank += 1
            row += 1
            if row == self.rows:
                break
        return rank

    def inverse(self) -> "SymMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        m = [list(row) + [R_ONE if i == j else R_ZERO for j in range(n)] for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not m[r][col].is_zero():
                    pivot = r
                    break
            if pivot is None:
                raise ValueError("matrix is singular")
            m[col], m[pivot] = m[pivot], m[col]
            inv = m[col][col].inv()
            m[col] = [inv * x for x in m[col]]
            for r in range(n):
                if r == col or m[r][col].is_zero():
                    continue
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
        return SymMatrix([row[n:] for row in m])

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"SymMatrix({self})"


def _coerce_entry(x) -> RFrac:
    out = _coerce_frac(x)
    if out is NotImplemented:
        raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")
    return out


def _bareiss_det(m: List[List[MPoly]]) -> MPoly:
    """Fraction-free determinant; every division below is exact."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = None
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    swap = r
                    break
            if swap is None:
                return _ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = val.divexact(prev)
                if q is None:  # pragma: no cover - Bareiss guarantees exactness
                    raise ArithmeticError("fraction-free elimination division failed")
                m[i][j] = q
            m[i][k] = _ZERO
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _cofactor_det(entries) -> RFrac:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = R_ZERO
    for j in range(n):
        a = entries[0][j]
        if a.is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in entries[1:]]
        term = a * _cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def mat_mul(a: SymMatrix, b: SymMatrix) -> SymMatrix:
    return a * b


def mat_det(a: SymMatrix) -> RFrac:
    return a.det()


def mat_rank(a: SymMatrix) -> int:
    return a.rank()


class AffineExp:
    """Affine-linear expression in formal exponent symbols (e.g. k, s).

    Used for powers of p that depend on the weight k and the slope s, such as
    (3k−4)/2 or k−1+s.
    """

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs: Optional[Mapping[str, Scalar]] = None, const: Scalar = 0):
        cleaned = {}
        if coeffs:
            for k, v in coeffs.items():
                v = _as_q(v)
                if v != 0:
                    cleaned[k] = v
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "const", _as_q(const))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("AffineExp is immutable")

    @staticmethod
    def of(x: Union["AffineExp", Scalar]) -> "AffineExp":
        if isinstance(x, AffineExp):
            return x
        return AffineExp(const=x)

    @staticmethod
    def sym(name: str) -> "AffineExp":
        return AffineExp({name: 1})

    def __add__(self, other):
        other = AffineExp.of(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return AffineExp(
            {k: self.coeffs.get(k, Q(0)) + other.coeffs.get(k, Q(0)) for k in keys},
            self.const + other.const,
        )

    __radd__ = __add__

    def __neg__(self):
        return AffineExp({k: -v for k, v in self.coeffs.items()}, -self.const)

    def __sub__(self, other):
        return self + (-AffineExp.of(other))

    def __rsub__(self, other):
        return AffineExp.of(other) + (-self)

    def __mul__(self, scalar):
        scalar = _as_q(scalar)
        return AffineExp({k: v * scalar for k, v in self.coeffs.items()}, self.const * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Q(1) / _as_q(scalar))

    def __eq__(self, other):
        other = AffineExp.of(other)
        return self.coeffs == other.coeffs and self.const == other.const

    def __hash__(self):
        return hash((frozenset(self.coeffs.items()), self.const))

    def is_zero(self) -> bool:
        return not self.coeffs and self.const == 0

    def eval(self, assignment: Mapping[str, Scalar]) -> Q:
        total = self.const
        for k, v in self.coeffs.items():
            if k not in assignment:
                raise ValueError(f"missing assignment for exponent symbol '{k}'")
            total += v * _as_q(assignment[k])
        return total

    def __str__(self) -> str:
        parts: List[str] = []
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            if v == 1:
                parts.append(k)
            elif v == -1:
                parts.append(f"-{k}")
            else:
                parts.append(f"{v}*{k}")
        if self.const != 0 or not parts:
            parts.append(str(self.const))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"AffineExp({self})"


class ValuedScalar:
    """A monomial coeff · p^pexp · u^upow over a p-adically valued field.

    ``u`` is a formal unit-direction symbol (the Frobenius eigenvalue α̂)
    whose valuation is the formal slope symbol ``s``; ``pexp`` may depend
    affinely on formal symbols such as k.  Zero is represented by coeff = 0.
    """

    __slots__ = ("coeff", "upow", "pexp")

    def __init__(self, coeff: Scalar = 1, upow: int = 0, pexp: Union[AffineExp, Scalar] = 0):
        coeff = _as_q(coeff)
        pexp = AffineExp.of(pexp)
        if coeff == 0:
            upow = 0
            pexp = AffineExp()
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "upow", int(upow))
        object.__setattr__(self, "pexp", pexp)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("ValuedScalar is immutable")

    @staticmethod
    def one() -> "ValuedScalar":
        return ValuedScalar(1)

    @staticmethod
    def zero() -> "ValuedScalar":
        return ValuedScalar(0)

    @staticmethod
    def p_power(e: Union[AffineExp, Scalar]) -> "ValuedScalar":
        return ValuedScalar(1, 0, e)

    @staticmethod
    def unit(power: int = 1) -> "ValuedScalar":
        return ValuedScalar(1, power, 0)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other):
        if isinstance(other, (int, Q)):
            return ValuedScalar(self.coeff * _as_q(other), self.upow, self.pexp)
        if not isinstance(other, ValuedScalar):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ValuedScalar(0)
        return ValuedScalar(self.coeff * other.coeff, self.upow + other.upow, self.pexp + other.pexp)

    __rmul__ = __mul__

    def inv(self) -> "ValuedScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return ValuedScalar(Q(1) / self.coeff, -self.upow, -self.pexp)

    def __truediv__(self, other):
        if isinstance(other, (int, Q)):
            return ValuedScalar(self.coeff / _as_q(other), self.upow, self.pexp)
        if not isinstance(other, ValuedScalar):
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n: int):
        if self.is_zero():
            if n <= 0:
                raise ZeroDivisionError("0 to a nonpositive power")
            return ValuedScalar(0)
        return ValuedScalar(self.coeff ** n, self.upow * n, self.pexp * n)

    def __eq__(self, other):
        if isinstance(other, (int, Q)):
            other = ValuedScalar(other)
        if not isinstance(other, ValuedScalar):
            return NotImplemented
        return (
            self.coeff == other.coeff
            and self.upow == other.upow
            and self.pexp == other.pexp
        )

    def __hash__(self):
        return hash((self.coeff, self.upow, self.pexp))

    def valuation(self, slope_symbol: str = "s") -> AffineExp:
        """p-adic valuation as an affine expression; v(u) = s."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        return self.pexp + AffineExp.sym(slope_symbol) * self.upow

    def valuation_at(self, assignment: Mapping[str, Scalar], slope: Scalar) -> Q:
        if self.is_zero():
            raise ValueError("valuation of zero")
        full = dict(assignment)
        full.setdefault("s", slope)
        return self.valuation("s").eval(full)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        if self.coeff != 1 or (self.upow == 0 and self.pexp.is_zero()):
            parts.append(str(self.coeff))
        if not self.pexp.is_zero():
            e = str(self.pexp)
            parts.append(f"p^({e})" if (self.pexp.coeffs or "/" in e or "-" in e) else f"p^{e}")
        if self.upow:
            parts.append("ahat" if self.upow == 1 else f"ahat^{self.upow}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"ValuedScalar({self})"


class Cyc3:
    """Element u + v·ζ of the quadratic extension with ζ² + ζ + 1 = 0.

    Components may be rationals or RFrac; used only for the small
    centralizer witness checks over the cube-root-of-unity extension.
    """

    __slots__ = ("re", "ze")

    def __init__(self, re=0, ze=0):
        object.__setattr__(self, "re", _coerce_entry(re))
        object.__setattr__(self, "ze", _coerce_entry(ze))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Cyc3 is immutable")

    @staticmethod
    def zeta() -> "Cyc3":
        return Cyc3(0, 1)

    def __add__(self, other):
        other = _coerce_cyc(other)
        return Cyc3(self.re + other.re, self.ze + other.ze)

    __radd__ = __add__

    def __neg__(self):
        return Cyc3(-self.re, -self.ze)

    def __sub__(self, other):
        other = _coerce_cyc(other)
        return self + (-other)

    def __mul__(self, other):
        other = _coerce_cyc(other)
        # (a + bζ)(c + dζ) = ac + (ad+bc)ζ + bdζ²,  ζ² = −1 − ζ.
        a, b, c, d = self.re, self.ze, other.re, other.ze
        bd = b * d
        return Cyc3(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce_cyc(other)
        return self.re == other.re and self.ze == other.ze

    def __hash__(self):
        return 1

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.ze.is_zero()

    def inv(self) -> "Cyc3":
        # Norm(a + bζ) = a² − ab + b².
        a, b = self.re, self.ze
        norm = a * a - a * b + b * b
        if norm.is_zero():
            raise ZeroDivisionError("inverse of zero in the cyclotomic extension")
        ninv = norm.inv()
        # Conjugate of a + bζ is (a − b) − bζ.
        return Cyc3((a - b) * ninv, -b * ninv)

    def __str__(self) -> str:
        return f"({self.re}) + ({self.ze})*zeta"


def _coerce_cyc(x) -> Cyc3:
    if isinstance(x, Cyc3):
        return x
    return Cyc3(x)


def cyc_mat_mul(a: List[List[Cyc3]], b: List[List[Cyc3]]) -> List[List[Cyc3]]:
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), Cyc3(0, 0)) for j in range(m)]
        for i in range(n)
    ]


def sym_matrix_to_cyc(m: SymMatrix) -> List[List[Cyc3]]:
    return [[Cyc3(x) for x in row] for row in m.entries]
