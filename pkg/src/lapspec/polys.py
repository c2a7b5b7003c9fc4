"""Exact polynomial arithmetic over the integers.

Sparse multivariate polynomials (integer or exact-rational coefficients),
integer-root extraction with multiplicities, Sturm-sequence root counting
over half-open rational intervals, and bisection refinement of isolating
intervals. No floating point is used anywhere in a decision path; decimal
output elsewhere in the library is display-only rounding of the rational
intervals produced here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

LAMBDA = "λ"

#: Default width for isolating intervals attached to reports.
DEFAULT_PRECISION = Fraction(1, 10**6)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _normalize_coeff(c):
    c = _as_fraction(c) if not isinstance(c, int) else c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MPoly:
    """Sparse polynomial: map from exponent vectors to exact coefficients.

    Variables are an ordered tuple of names; term keys are exponent tuples
    of the same length. Zero coefficients are never stored, so equality is
    plain dict equality after variable alignment.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms):
        self.vars = tuple(variables)
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != len(self.vars):
                raise ValueError("exponent vector length does not match variables")
            c = _normalize_coeff(c)
            if c:
                clean[exps] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables=()):
        return cls(variables, {})

    @classmethod
    def const(cls, value, variables=()):
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def var(cls, name, variables=None):
        variables = (name,) if variables is None else tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    @classmethod
    def from_univariate(cls, coeffs, name=LAMBDA):
        """Build from ascending coefficient list (index = exponent)."""
        return cls((name,), {(i,): c for i, c in enumerate(coeffs) if c})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self, name=None) -> int:
        """Total degree, or degree in one variable; zero polynomial -> -1."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def univariate_coeffs(self, name=LAMBDA):
        """Ascending coefficient list; requires all other variables absent."""
        i = self.vars.index(name) if name in self.vars else None
        if i is None:
            if not self.is_constant():
                raise ValueError(f"polynomial is not univariate in {name!r}")
            return [self.constant_value()] if self.terms else []
        coeffs = [0] * (self.degree(name) + 1)
        for exps, c in self.terms.items():
            if any(e and j != i for j, e in enumerate(exps)):
                raise ValueError(f"polynomial is not univariate in {name!r}")
            coeffs[exps[i]] = c
        return coeffs

    def coefficient_in(self, name, k) -> "MPoly":
        """Coefficient of name**k, as a polynomial in the other variables."""
        i = self.vars.index(name)
        rest = tuple(v for j, v in enumerate(self.vars) if j != i)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                key = tuple(e for j, e in enumerate(exps) if j != i)
                out[key] = out.get(key, 0) + c
        return MPoly(rest, out)

    # -- variable alignment -------------------------------------------

    def _aligned(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.vars)
        if self.vars == other.vars:
            return self, other
        merged = list(self.vars) + [v for v in other.vars if v not in self.vars]
        return self.with_vars(merged), other.with_vars(merged)

    def with_vars(self, variables) -> "MPoly":
        variables = tuple(variables)
        idx = []
        for v in self.vars:
            if v not in variables:
                if self.degree(v) > 0:
                    raise ValueError(f"cannot drop live variable {v!r}")
                idx.append(None)
            else:
                idx.append(variables.index(v))
        out = {}
        for exps, c in self.terms.items():
            key = [0] * len(variables)
            for j, e in enumerate(exps):
                if e:
                    key[idx[j]] = e
            key = tuple(key)
            out[key] = out.get(key, 0) + c
        return MPoly(variables, out)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        a, b = self._aligned(other)
        out = dict(a.terms)
        for exps, c in b.terms.items():
            out[exps] = out.get(exps, 0) + c
        return MPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        return self + (-other if isinstance(other, MPoly) else MPoly.const(-other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MPoly(a.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        # Project out dead variables so hashing agrees with equality.
        live_idx = [i for i, v in enumerate(self.vars) if self.degree(v) > 0]
        live = tuple(self.vars[i] for i in live_idx)
        terms = frozenset(
            (tuple(e[i] for i in live_idx), c) for e, c in self.terms.items()
        )
        return hash((live, terms))

    # -- evaluation ---------------------------------------------------

    def substitute(self, assignment) -> "MPoly":
        """Substitute exact values for a subset of the variables."""
        keep = tuple(v for v in self.vars if v not in assignment)
        out = {}
        for exps, c in self.terms.items():
            val = c
            key = []
            for v, e in zip(self.vars, exps):
                if v in assignment:
                    val = val * _as_fraction(assignment[v]) ** e
                else:
                    key.append(e)
            key = tuple(key)
            out[key] = out.get(key, 0) + val
        return MPoly(keep, out)

    def eval_at(self, assignment):
        """Evaluate fully at exact rational values; returns int or Fraction."""
        missing = [v for v in self.vars if self.degree(v) > 0 and v not in assignment]
        if missing:
            raise ValueError(f"missing values for {missing}")
        return _normalize_coeff(self.substitute(assignment).constant_value())

    # -- canonical text form --------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self._sorted_terms():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(c)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"


# -- polynomial text parser ---------------------------------------------


def parse_poly(text: str, variables=None) -> MPoly:
    """Parse '+ - * ^ ( )' expressions with integer literals and names.

    Multiplication must be explicit ('40*s*t'); exponentiation binds the
    factor to its left, so '15^2' is the integer 225.
    """
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        tok = peek()
        pos[0] += 1
        return tok

    def parse_expr():
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term():
        node = parse_factor()
        while peek() == "*":
            take()
            node = node * parse_factor()
        return node

    def parse_factor():
        negate = False
        while peek() in ("+", "-"):
            if take() == "-":
                negate = not negate
        node = parse_primary()
        if peek() == "^":
            take()
            exp = take()
            if not isinstance(exp, int):
                raise ValueError("exponent must be an integer literal")
            node = node**exp
        return -node if negate else node

    def parse_primary():
        tok = take()
        if tok == "(":
            node = parse_expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return node
        if isinstance(tok, int):
            return MPoly.const(tok)
        if isinstance(tok, str) and tok.isidentifier():
            if variables is not None and tok not in variables:
                raise ValueError(f"unknown variable {tok!r}")
            return MPoly.var(tok)
        raise ValueError(f"unexpected token {tok!r}")

    node = parse_expr()
    if pos[0] != len(tokens):
        raise ValueError(f"trailing input at token {tokens[pos[0]]!r}")
    if variables is not None:
        node = node.with_vars(tuple(variables))
    return node


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_" or ord(ch) > 127:
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_" or ord(text[j]) > 127):
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch in "+-*^()":
            tokens.append(ch)
            i += 1
        else:
            raise ValueError(f"bad character {ch!r} in polynomial text")
    return tokens


# -- univariate kernels (ascending integer coefficient lists) ------------


def _trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _derivative(c):
    return [i * a for i, a in enumerate(c)][1:]


def _content(c) -> int:
    g = 0
    for a in c:
        g = gcd(g, abs(int(a)))
    return g or 1


def _primitive(c):
    g = _content(c)
    out = [a // g for a in c]
    return out


def _sign_at(c, q: Fraction) -> int:
    """Exact sign of the polynomial at a rational point.

    Evaluates the homogenized form sum(c_i * p^i * r^(d-i)) for q = p/r;
    the positive factor r^d leaves the sign unchanged.
    """
    if not c:
        return 0
    p, r = q.numerator, q.denominator
    acc = c[-1]
    rp = 1
    for i in range(len(c) - 2, -1, -1):
        rp *= r
        acc = acc * p + c[i] * rp
    return (acc > 0) - (acc < 0)


def _prem_pos(f, g):
    """Pseudo-remainder of f by g scaled by a positive constant."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    df = len(r) - 1
    if df < dg:
        return r
    steps = df - dg + 1
    done = 0
    while len(r) - 1 >= dg and any(r):
        d = len(r) - 1
        c = r[-1]
        r = [lg * a for a in r]
        for i, b in enumerate(g):
            r[i + d - dg] -= c * b
        _trim(r)
        done += 1
    rem_mult = steps - done
    if rem_mult > 0:
        m = lg**rem_mult
        r = [m * a for a in r]
    if lg < 0 and steps % 2 == 1:
        r = [-a for a in r]
    return r


def _sturm_chain(c):
    """Sturm chain of a square-free integer polynomial (primitive parts)."""
    chain = [_primitive(list(c))]
    d = _trim(_derivative(c))
    if d:
        chain.append(_primitive(d))
    while len(chain[-1]) > 1:
        nxt = [-a for a in _prem_pos(chain[-2], chain[-1])]
        _trim(nxt)
        if not nxt:
            raise ValueError("polynomial is not square-free")
        chain.append(_primitive(nxt))
    return chain

def _variations(chain, x: Fraction) -> int:
    signs = [s for s in (_sign_at(c, x) for c in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _count_halfopen(chain, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b] of the chain's square-free polynomial."""
    return _variations(chain, a) - _variations(chain, b)


def _root_bound(c) -> int:
    """Cauchy bound: every real root has absolute value below the result."""
    lead = abs(c[-1])
    m = max(abs(a) for a in c[:-1]) if len(c) > 1 else 0
    return 1 + (m + lead - 1) // lead if m else 1


def _divmod_q(a, b):
    """Exact division with remainder over the rationals."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = a
    while r and len(r) >= len(b):
        shift = len(r) - len(b)
        f = r[-1] / b[-1]
        q[shift] = f
        for i, bc in enumerate(b):
            r[i + shift] -= f * bc
        _trim(r)
    return q, r


def _gcd_int(a, b):
    """Primitive gcd of integer polynomials with positive leading coefficient."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    _trim(fa), _trim(fb)
    while fb:
        _, r = _divmod_q(fa, fb)
        fa, fb = fb, r
    if not fa:
        return []
    den = 1
    for x in fa:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fa]
    ints = _primitive(ints)
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _square_free_part(c):
    c = _trim(list(c))
    if len(c) <= 1:
        return list(c)
    g = _gcd_int(c, _derivative(c))
    if len(g) == 1:
        out = list(c)
    else:
        q, r = _divmod_q(c, g)
        assert not r
        den = 1
        for x in q:
            den = den * x.denominator // gcd(den, x.denominator)
        out = [int(x * den) for x in q]
        out = _primitive(out)
    if out[-1] < 0:
        out = [-x for x in out]
    return out


def _squarefree_decomposition(c):
    """Yun decomposition: list of (primitive square-free factor, multiplicity)."""
    c = _trim(list(c))
    if len(c) <= 1:
        return []
    out = []
    g = _gcd_int(c, _derivative(c))
    w, r = _divmod_q(c, g)
    assert not r
    w = _fractions_to_primitive(w)
    mult = 1
    rest = g
    while len(w) > 1:
        g2 = _gcd_int(w, rest)
        factor, r = _divmod_q(w, g2)
        assert not r
        factor = _fractions_to_primitive(factor)
        if len(factor) > 1:
            out.append((factor, mult))
        w = g2
        rest, r = _divmod_q(rest, g2)
        assert not r
        rest = _fractions_to_primitive(rest)
        mult += 1
    return out


def _fractions_to_primitive(q):
    den = 1
    for x in q:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in q]
    ints = _primitive(_trim(ints))
    if ints and ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            large.append(n // d)
    if small and small[-1] == large[-1]:
        large.pop()
    return small + large[::-1]


def _integer_roots_uni(c):
    """All integer roots with multiplicity, plus the integer-root-free rest."""
    c = _trim(list(c))
    if not c:
        raise ValueError("zero polynomial")
    roots = {}
    k = 0
    while not c[0]:
        c = c[1:]
        k += 1
    if k:
        roots[0] = k
    bound = _root_bound(c)
    candidates = [d for d in _divisors(c[0]) if d <= bound] if len(c) > 1 else []
    for d in sorted(candidates):
        for r in (d, -d):
            while len(c) > 1 and _poly_eval_int(c, r) == 0:
                c = _synthetic_div(c, r)
                roots[r] = roots.get(r, 0) + 1
    return roots, c


def _poly_eval_int(c, x: int) -> int:
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def _synthetic_div(c, r: int):
    """Divide by (x - r) assuming r is a root; integer coefficients preserved."""
    d = len(c) - 1
    out = [0] * d
    carry = c[d]
    for i in range(d - 1, 0, -1):
        out[i] = carry
        carry = c[i] + r * carry
    out[0] = carry
    assert c[0] + r * carry == 0, "not a root"
    return out


def _rational_roots(c):
    """Rational roots (as Fractions) with multiplicity, plus the rest over Z."""
    c = _trim(list(c))
    roots = {}
    k = 0
    while c and not c[0]:
        c = c[1:]
        k += 1
    if k:
        roots[Fraction(0)] = k
    if len(c) <= 1:
        return roots, c
    bound = Fraction(_root_bound(c))
    nums = _divisors(c[0])
    dens = _divisors(c[-1])
    cands = sorted({Fraction(p, q) for p in nums for q in dens if Fraction(p, q) <= bound})
    for cand in cands:
        for r in (cand, -cand):
            while len(c) > 1 and _sign_at(c, r) == 0:
                down, rem = _divmod_q(c, [-r, 1])
                assert not rem
                c = _fractions_to_primitive(down)
                roots[r] = roots.get(r, 0) + 1
    return roots, c


def _isolate_squarefree(c, precision: Fraction):
    """Disjoint rational intervals, one per real root of a square-free poly.

    Rational roots come back as degenerate point intervals; the remaining
    roots get half-open (lo, hi] intervals bisected down to the requested
    width.
    """
    c = _trim(list(c))
    if len(c) <= 1:
        return []
    rational, rest = _rational_roots(c)
    points = sorted(rational)
    intervals = [(r, r) for r in points]
    if len(rest) > 1:
        chain = _sturm_chain(rest)
        bound = Fraction(_root_bound(rest))
        work = [(-bound, bound, _count_halfopen(chain, -bound, bound))]
        found = []
        while work:
            lo, hi, count = work.pop()
            if count == 0:
                continue
            if count == 1:
                while hi - lo > precision:
                    mid = (lo + hi) / 2
                    if _count_halfopen(chain, lo, mid) == 1:
                        hi = mid
                    else:
                        lo = mid
                found.append((lo, hi))
            else:
                mid = (lo + hi) / 2
                left = _count_halfopen(chain, lo, mid)
                work.append((lo, mid, left))
                work.append((mid, hi, count - left))
        intervals.extend(found)
    intervals.sort(key=lambda iv: (iv[0] + iv[1]) / 2)
    return intervals


# -- public operations ----------------------------------------------------


@dataclass(frozen=True)
class RootReport:
    """Exact factorization data for a univariate integer polynomial.

    integer_roots lists (root, multiplicity) in descending root order;
    residual is the integer-root-free cofactor; isolating_intervals hold
    exactly one real residual root each (residual taken square-free).
    """

    poly: MPoly
    var: str
    integer_roots: tuple
    residual: MPoly
    isolating_intervals: tuple

    def reconstructs(self) -> bool:
        """Check product of linear factors times residual equals the input."""
        prod = self.residual
        lam = MPoly.var(self.var)
        for root, mult in self.integer_roots:
            prod = prod * (lam - root) ** mult
        return prod == self.poly

    def root_multiplicity_total(self) -> int:
        return sum(m for _, m in self.integer_roots)


def integer_roots(p: MPoly, var: str = None, precision: Fraction = DEFAULT_PRECISION) -> RootReport:
    """Find every integer root with multiplicity by trial division.

    Candidates are divisors of the trailing coefficient (after factoring
    out the power of the variable) capped by the Cauchy root bound.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    var = var or _only_var(p)
    coeffs = p.univariate_coeffs(var)
    coeffs = _clear_denominators(coeffs)
    roots, residual = _integer_roots_uni(coeffs)
    res_poly = MPoly.from_univariate(residual, var)
    intervals = tuple(_isolate_squarefree(_square_free_part(residual), precision))
    ordered = tuple(sorted(roots.items(), key=lambda kv: -kv[0]))
    return RootReport(
        poly=p,
        var=var,
        integer_roots=ordered,
        residual=res_poly,
        isolating_intervals=intervals,
    )


def sturm_count(p: MPoly, a, b, var: str = None) -> int:
    """Exact number of distinct real roots in the half-open interval (a, b].

    The square-free part is taken internally, so repeated roots count once.
    """
    a, b = _as_fraction(a), _as_fraction(b)
    if a >= b:
        raise ValueError("empty interval: require a < b")
    if p.is_zero():
        raise ValueError("zero polynomial")
    var = var or _only_var(p)
    coeffs = _clear_denominators(p.univariate_coeffs(var))
    sf = _square_free_part(coeffs)
    if len(sf) <= 1:
        return 0
    chain = _sturm_chain(sf)
    return _count_halfopen(chain, a, b)


def count_real_roots(p: MPoly, var: str = None) -> int:
    """Distinct real roots over the whole line."""
    var = var or _only_var(p)
    coeffs = _clear_denominators(p.univariate_coeffs(var))
    sf = _square_free_part(coeffs)
    if len(sf) <= 1:
        return 0
    bound = Fraction(_root_bound(sf))
    chain = _sturm_chain(sf)
    return _count_halfopen(chain, -bound, bound)


def isolate_roots(p: MPoly, precision: Fraction = DEFAULT_PRECISION, var: str = None):
    """Isolating rational intervals for all distinct real roots of p.

    Rational roots are returned as exact point intervals [r, r]; all other
    intervals are refined by bisection until their width is at most the
    requested precision.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    precision = _as_fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    var = var or _only_var(p)
    coeffs = _clear_denominators(p.univariate_coeffs(var))
    return _isolate_squarefree(_square_free_part(coeffs), precision)


def divides(p: MPoly, q: MPoly, var: str = None):
    """Exact divisibility over the rationals; returns (flag, quotient)."""
    if p.is_zero():
        raise ValueError("division by the zero polynomial")
    var = var or _only_var(p, q)
    a = q.univariate_coeffs(var)
    b = p.univariate_coeffs(var)
    quo, rem = _divmod_q(a, b)
    if rem:
        return False, None
    return True, MPoly((var,), {(i,): c for i, c in enumerate(quo) if c})


def sign_at(p: MPoly, point) -> int:
    """Exact sign (-1, 0, 1) of a univariate polynomial at a rational point."""
    var = _only_var(p)
    coeffs = _clear_denominators(p.univariate_coeffs(var))
    if not coeffs:
        return 0
    return _sign_at(coeffs, _as_fraction(point))


def _only_var(*polys) -> str:
    live = []
    for p in polys:
        live.extend(v for v in p.vars if p.degree(v) > 0)
    names = sorted(set(live))
    if len(names) > 1:
        raise ValueError(f"expected a univariate polynomial, variables: {names}")
    return names[0] if names else LAMBDA


def _clear_denominators(coeffs):
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in coeffs]
