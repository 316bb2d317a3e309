"""Exact Laurent-polynomial arithmetic in a formal root of q.

All scalars appearing in this package are Laurent polynomials in a formal
variable t with q = t^N, where N is the ``root order`` of the value.  This
makes fractional powers such as q^(2/(n+1)) exact (set N = n+1, then
q^(2/(n+1)) = t^2).  Coefficients are exact rationals; there is no floating
point anywhere.

Values with root order 1 (honest polynomials in q) embed into any root
order N by scaling exponents, so mixed arithmetic with plain q-polynomials
works transparently.
"""

from __future__ import annotations

from fractions import Fraction


class QScalar:
    """Immutable Laurent polynomial in t, where q = t^root_order.

    Invariant: ``terms`` maps t-exponents to nonzero Fraction coefficients.
    """

    __slots__ = ("root_order", "terms")

    def __init__(self, root_order: int, terms: dict[int, Fraction] | None = None):
        if root_order < 1:
            raise ValueError(f"root order must be a positive integer, got {root_order}")
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[int(exp)] = coeff
        object.__setattr__(self, "root_order", root_order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QScalar is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, root_order: int = 1) -> "QScalar":
        return cls(root_order, {})

    @classmethod
    def one(cls, root_order: int = 1) -> "QScalar":
        return cls(root_order, {0: Fraction(1)})

    @classmethod
    def from_fraction(cls, value, root_order: int = 1) -> "QScalar":
        return cls(root_order, {0: Fraction(value)})

    @classmethod
    def t_monomial(cls, t_exp: int, root_order: int, coeff=1) -> "QScalar":
        return cls(root_order, {t_exp: Fraction(coeff)})

    @classmethod
    def q_power(cls, q_exp: int, root_order: int = 1) -> "QScalar":
        """q^q_exp, i.e. t^(q_exp * root_order)."""
        return cls(root_order, {q_exp * root_order: Fraction(1)})

    # -- coercion ----------------------------------------------------------

    def with_root_order(self, root_order: int) -> "QScalar":
        """Embed into a finer root order (only legal from N = 1)."""
        if root_order == self.root_order:
            return self
        if self.root_order != 1:
            raise ValueError(
                f"cannot rescale root order {self.root_order} to {root_order}"
            )
        return QScalar(root_order, {e * root_order: c for e, c in self.terms.items()})

    def _align(self, other: "QScalar") -> tuple["QScalar", "QScalar"]:
        if self.root_order == other.root_order:
            return self, other
        if self.root_order == 1:
            return self.with_root_order(other.root_order), other
        if other.root_order == 1:
            return self, other.with_root_order(self.root_order)
        raise ValueError(
            f"incompatible root orders {self.root_order} and {other.root_order}"
        )

    def _coerce(self, other) -> "QScalar":
        if isinstance(other, QScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return QScalar.from_fraction(other, self.root_order)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a.terms)
        for exp, coeff in b.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coeff
        return QScalar(a.root_order, terms)

    __radd__ = __add__

    def __neg__(self):
        return QScalar(self.root_order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        terms: dict[int, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = e1 + e2
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return QScalar(a.root_order, terms)

    __rmul__ = __mul__

    def exact_div(self, other: "QScalar") -> "QScalar":
        """Exact Laurent division; a nonzero remainder raises ValueError."""
        other = self._coerce(other)
        a, b = self._align(other)
        if b.is_zero():
            raise ZeroDivisionError("division of QScalar by zero")
        if a.is_zero():
            return QScalar(a.root_order, {})
        # Shift both to ordinary polynomials and long-divide.
        shift_a = min(a.terms)
        shift_b = min(b.terms)
        rem = {e - shift_a: c for e, c in a.terms.items()}
        den = {e - shift_b: c for e, c in b.terms.items()}
        den_deg = max(den)
        den_lead = den[den_deg]
        quo: dict[int, Fraction] = {}
        while rem:
            deg = max(rem)
            if deg < den_deg:
                raise ValueError(f"nonzero remainder in exact division: {a} / {b}")
            factor = rem[deg] / den_lead
            qexp = deg - den_deg
            quo[qexp] = factor
            for e, c in den.items():
                new = rem.get(e + qexp, Fraction(0)) - factor * c
                if new == 0:
                    rem.pop(e + qexp, None)
                else:
                    rem[e + qexp] = new
        offset = shift_a - shift_b
        return QScalar(a.root_order, {e + offset: c for e, c in quo.items()})

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def at_q_one(self) -> Fraction:
        """Specialize q = 1 (equivalently t = 1)."""
        return sum(self.terms.values(), Fraction(0))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        try:
            a, b = self._align(other)
        except ValueError:
            return False
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.root_order, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return not self.is_zero()

    # -- rendering -------------------------------------------------------------

    def __str__(self):
        return self.render()

    def render(self) -> str:
        """Canonical string: terms in ascending exponent, in q when N = 1
        and in t otherwise (caller declares q = t^N)."""
        if not self.terms:
            return "0"
        var = "q" if self.root_order == 1 else "t"
        pieces = []
        for exp in sorted(self.terms):
            coeff = self.terms[exp]
            if exp == 0:
                body = str(coeff)
            else:
                power = var if exp == 1 else f"{var}^{exp}"
                if coeff == 1:
                    body = power
                elif coeff == -1:
                    body = f"-{power}"
                else:
                    body = f"{coeff}*{power}"
            pieces.append(body)
        out = pieces[0]
        for body in pieces[1:]:
            if body.startswith("-"):
                out += " - " + body[1:]
            else:
                out += " + " + body
        return out

    def __repr__(self):
        return f"QScalar(N={self.root_order}, {self.render()})"


# -- quantum integers ------------------------------------------------------------


def qint_bracket(m: int, root_order: int = 1) -> QScalar:
    """Balanced quantum integer [m]_q = q^(-m+1) + q^(-m+3) + ... + q^(m-1).

    For m < 0 we use [-m]_q = -[m]_q, the extension by oddness forced by
    the closed form (q^m - q^-m)/(q - q^-1).
    """
    if m == 0:
        return QScalar.zero(root_order)
    sign = 1 if m > 0 else -1
    m = abs(m)
    terms = {e * root_order: Fraction(sign) for e in range(-m + 1, m, 2)}
    return QScalar(root_order, terms)


def qint_paren_base(m: int, base_t_exp: int, root_order: int = 1) -> QScalar:
    """(m) in base t^base_t_exp: the geometric sum 1 + b + ... + b^(m-1).

    For m < 0 the closed form (1 - b^m)/(1 - b) expands to the Laurent
    polynomial -(b^m + b^(m+1) + ... + b^-1), which is what we return.
    """
    if m == 0:
        return QScalar.zero(root_order)
    if m > 0:
        terms = {j * base_t_exp: Fraction(1) for j in range(m)}
    else:
        terms = {j * base_t_exp: Fraction(-1) for j in range(m, 0)}
    return QScalar(root_order, terms)


def qint_paren(m: int, root_order: int = 1) -> QScalar:
    """Quantum integer (m)_q = 1 + q + ... + q^(m-1), extended to m < 0
    by the geometric-series closed form (1 - q^m)/(1 - q)."""
    return qint_paren_base(m, root_order, root_order)


def _bracket_factorial(n: int) -> QScalar:
    out = QScalar.one()
    for m in range(2, n + 1):
        out = out * qint_bracket(m)
    return out


def q_binomial(n: int, r: int) -> QScalar:
    """Balanced q-binomial [n r]_q = [n]_q! / ([r]_q! [n-r]_q!).

    The quotient is always a Laurent polynomial; the exact division
    asserts this, so a nonzero remainder aborts loudly.
    """
    if not 0 <= r <= n:
        raise ValueError(f"require 0 <= r <= n, got n={n}, r={r}")
    num = _bracket_factorial(n)
    den = _bracket_factorial(r) * _bracket_factorial(n - r)
    return num.exact_div(den)


def bracket_paren_identity(m: int) -> bool:
    """Check [m]_q == q^(1-m) * (m)_{q^2} as Laurent polynomials."""
    lhs = qint_bracket(m)
    rhs = QScalar.q_power(1 - m) * qint_paren_base(m, 2)
    return lhs == rhs
