"""Exact arithmetic on integer lattice functions and shift operators.

Everything here is big-integer arithmetic; nothing is ever evaluated in
floating point.  The two evaluation targets are

* ``product_formula(k)``: the polynomial
  prod_{1<=i<j<=n} (k_j - k_i + j - i) / (j - i), always an integer,
* ``binomial_determinant(k)``: det[ binom(k_j + j - 1, i - 1) ] with the
  binomial extended polynomially to negative tops.

``OperatorExpression`` models Z-linear combinations of commuting coordinate
shifts E_{x_i}: f(..., x_i, ...) -> f(..., x_i + 1, ...).  Difference
operators are built on top:

    Delta_x = E_x - id        (written D in the mini-language)
    delta_x = id - E_x^{-1}   (written d)

``LatticeFunction`` wraps an integer-valued function on Z^arity with a memo
table so operator evaluation does not recompute points.
"""

import re
from itertools import product as _cartesian


def product_formula(k):
    """prod_{i<j} (k_j - k_i + j - i)/(j - i), evaluated exactly."""
    k = tuple(k)
    n = len(k)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= k[j] - k[i] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("product formula did not divide evenly for %r" % (k,))
    return q


def falling_binomial(m, r):
    """binom(m, r) as a polynomial in m: m(m-1)...(m-r+1)/r!.

    Defined for any integer m and r >= 0; negative m gives the usual
    (-1)^r binom(r - m - 1, r).
    """
    if r < 0:
        return 0
    num = 1
    for t in range(r):
        num *= m - t
    for t in range(2, r + 1):
        num //= t
    return num


def binomial_matrix(k):
    k = tuple(k)
    n = len(k)
    return [[falling_binomial(k[j] + j, i) for j in range(n)] for i in range(n)]


def integer_determinant(mat):
    """Fraction-free Bareiss elimination; exact for integer matrices."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(c + 1, n):
            for s in range(c + 1, n):
                a[r][s] = (a[r][s] * a[c][c] - a[r][c] * a[c][s]) // prev
            a[r][c] = 0
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def binomial_determinant(k):
    """det[ binom(k_j + j - 1, i - 1) ]_{i,j=1..n}, exact."""
    return integer_determinant(binomial_matrix(k))


def extended_sum(f, a, b):
    """Sum f(i) for i = a..b under the extended summation convention.

    Empty for b = a - 1, and sum_{a}^{b} = -sum_{b+1}^{a-1} when b + 1 <= a - 1.
    """
    if b >= a:
        return sum(f(i) for i in range(a, b + 1))
    if b == a - 1:
        return 0
    return -sum(f(i) for i in range(b + 1, a))


class OperatorExpression:
    """A Z-linear combination of commuting coordinate shifts.

    ``terms`` maps shift vectors (tuples of ints, one slot per coordinate)
    to nonzero integer coefficients.  Normalization is just dict merging, so
    two expressions are equal iff they act identically on every function.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = arity
        clean = {}
        for shift, coeff in (terms or {}).items():
            shift = tuple(shift)
            if len(shift) != arity:
                raise ValueError("shift %r does not match arity %d" % (shift, arity))
            if coeff:
                clean[shift] = clean.get(shift, 0) + coeff
                if not clean[shift]:
                    del clean[shift]
        self.terms = clean

    def __eq__(self, other):
        return (isinstance(other, OperatorExpression)
                and self.arity == other.arity and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        items = sorted(self.terms.items())
        return "OperatorExpression(%d, %r)" % (self.arity, dict(items))

    def __add__(self, other):
        self._check(other)
        merged = dict(self.terms)
        for shift, coeff in other.terms.items():
            merged[shift] = merged.get(shift, 0) + coeff
        return OperatorExpression(self.arity, merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return OperatorExpression(self.arity, {s: -c for s, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return OperatorExpression(self.arity, {s: c * other for s, c in self.terms.items()})
        self._check(other)
        out = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                s = tuple(x + y for x, y in zip(s1, s2))
                out[s] = out.get(s, 0) + c1 * c2
        return OperatorExpression(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative operator powers are not defined here")
        result = identity(self.arity)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _check(self, other):
        if not isinstance(other, OperatorExpression) or other.arity != self.arity:
            raise ValueError("operator arity mismatch")

    def apply(self, f, point):
        return apply_operator(self, f, point)


def identity(arity):
    return OperatorExpression(arity, {(0,) * arity: 1})


def zero(arity):
    return OperatorExpression(arity, {})


def shift(arity, coord, power=1):
    """E_{x_coord}^power (coord is 0-based)."""
    s = [0] * arity
    s[coord] = power
    return OperatorExpression(arity, {tuple(s): 1})


def delta(arity, coord):
    """Forward difference Delta = E - id on the given coordinate."""
    return shift(arity, coord, 1) - identity(arity)


def small_delta(arity, coord):
    """Backward difference delta = id - E^{-1} on the given coordinate."""
    return identity(arity) - shift(arity, coord, -1)


def elementary_symmetric(r, ops):
    """e_r(X_1, ..., X_m) for commuting operator expressions X_i."""
    if not ops:
        raise ValueError("need at least one operator")
    arity = ops[0].arity
    if r < 0 or r > len(ops):
        return zero(arity)
    # running coefficients of prod (1 + t X_i), degree capped at r
    es = [identity(arity)] + [zero(arity)] * r
    for x in ops:
        for j in range(r, 0, -1):
            es[j] = es[j] + es[j - 1] * x
    return es[r]


def v_operator(arity, x, y):
    """V_{x,y} = E_x^{-1} + E_y - E_x^{-1} E_y = id + delta_x Delta_y."""
    return identity(arity) + small_delta(arity, x) * delta(arity, y)


def v_inverse(arity, x, y, truncation=None):
    """Truncated inverse of V_{x,y}: sum_{t=0..truncation} (-1)^t delta_x^t Delta_y^t.

    The series terminates on any function that is a polynomial of degree
    < truncation in either coordinate; the default truncation is the arity.
    """
    if truncation is None:
        truncation = arity
    total = zero(arity)
    dx = small_delta(arity, x)
    dy = delta(arity, y)
    term = identity(arity)
    sign = 1
    for t in range(truncation + 1):
        total = total + sign * term
        term = term * dx * dy
        sign = -sign
    return total


class LatticeFunction:
    """Memoizing wrapper around an integer-valued function on Z^arity."""

    def __init__(self, arity, func, memo_cap=None):
        self.arity = arity
        self.func = func
        self.memo = {}
        self.memo_cap = memo_cap

    def __call__(self, point):
        point = tuple(point)
        if len(point) != self.arity:
            raise ValueError("point %r does not match arity %d" % (point, self.arity))
        try:
            return self.memo[point]
        except KeyError:
            value = self.func(point)
        if self.memo_cap is None or len(self.memo) < self.memo_cap:
            self.memo[point] = value
        return value

    def swap(self, i, j):
        """The function with coordinates i and j interchanged (0-based)."""
        def swapped(point):
            p = list(point)
            p[i], p[j] = p[j], p[i]
            return self(p)
        return LatticeFunction(self.arity, swapped)


def lattice_function(arity, func, memo_cap=None):
    return LatticeFunction(arity, func, memo_cap=memo_cap)


def apply_operator(op, f, point):
    """(op f)(point), evaluated exactly."""
    point = tuple(point)
    total = 0
    for sh, coeff in op.terms.items():
        moved = tuple(p + s for p, s in zip(point, sh))
        total += coeff * f(moved)
    return total


# --- operator mini-language -------------------------------------------------
#
# Grammar (whitespace separates juxtaposed factors, juxtaposition composes):
#
#   expr    := factor (factor)*
#   factor  := 'id'
#            | ('E' | 'D' | 'd') ('^' INT)? VAR
#            | 'V(' VAR ',' VAR ')'
#            | 'Vinv(' VAR ',' VAR (';' 'trunc=' INT)? ')'
#            | 'e(' INT ';' expr (',' expr)* ')'
#   VAR     := 'k' DIGITS          (1-based coordinate)
#
# Examples: "D^3 k2", "e(2; D k1, D k2, D k3)", "V(k1,k2)",
#           "Vinv(k2,k1; trunc=4) V(k2,k1)".

_TOKEN = re.compile(r"""
    \s*(?:
        (?P<id>id)
      | (?P<op>[EDd])(?:\^(?P<pow>-?\d+))?\s*k(?P<var>\d+)
      | (?P<vinv>Vinv)\(\s*k(?P<vx>\d+)\s*,\s*k(?P<vy>\d+)\s*(?:;\s*trunc=(?P<trunc>\d+)\s*)?\)
      | (?P<v>V)\(\s*k(?P<wx>\d+)\s*,\s*k(?P<wy>\d+)\s*\)
      | (?P<e>e)\(\s*(?P<er>\d+)\s*;
      | (?P<close>\))
      | (?P<comma>,)
    )""", re.VERBOSE)


class OperatorParseError(ValueError):
    pass


def parse_operator(text, arity):
    """Parse the operator mini-language into an OperatorExpression."""
    expr, pos = _parse_product(text, 0, arity, top=True)
    if text[pos:].strip():
        raise OperatorParseError("trailing input %r" % text[pos:])
    return expr


def _coord(num, arity):
    c = int(num) - 1
    if not 0 <= c < arity:
        raise OperatorParseError("coordinate k%s out of range for arity %d" % (num, arity))
    return c


def _parse_product(text, pos, arity, top=False):
    result = None
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group("close") or m.group("comma"):
            break
        pos = m.end()
        if m.group("id"):
            factor = identity(arity)
        elif m.group("op"):
            c = _coord(m.group("var"), arity)
            p = int(m.group("pow")) if m.group("pow") else 1
            kind = m.group("op")
            if kind == "E":
                factor = shift(arity, c, p)
            else:
                if p < 0:
                    raise OperatorParseError("difference operators take nonnegative powers")
                base = delta(arity, c) if kind == "D" else small_delta(arity, c)
                factor = base ** p
        elif m.group("v"):
            factor = v_operator(arity, _coord(m.group("wx"), arity), _coord(m.group("wy"), arity))
        elif m.group("vinv"):
            trunc = int(m.group("trunc")) if m.group("trunc") else None
            factor = v_inverse(arity, _coord(m.group("vx"), arity),
                               _coord(m.group("vy"), arity), truncation=trunc)
        elif m.group("e"):
            r = int(m.group("er"))
            args = []
            while True:
                sub, pos = _parse_product(text, pos, arity)
                args.append(sub)
                mm = _TOKEN.match(text, pos)
                if mm and mm.group("comma"):
                    pos = mm.end()
                    continue
                if mm and mm.group("close"):
                    pos = mm.end()
                    break
                raise OperatorParseError("expected ',' or ')' in e(...) at %d" % pos)
            factor = elementary_symmetric(r, args)
        else:  # pragma: no cover
            raise OperatorParseError("unrecognized token at %d" % pos)
        result = factor if result is None else result * factor
    if result is None:
        raise OperatorParseError("empty operator expression")
    return result, pos
