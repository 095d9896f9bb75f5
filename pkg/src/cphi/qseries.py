"""Exact truncated formal power series in q.

A QSeries stores exact coefficients for q**valuation .. q**trunc and makes no
claim beyond trunc.  Every operation propagates the guaranteed range
pessimistically: a returned coefficient is either exact or absent, never
approximate.  Coefficients are Python ints where integral and Fraction
otherwise; the two mix transparently.
"""

from __future__ import annotations

from fractions import Fraction


def _as_exact(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"coefficient must be int or Fraction, got {type(x).__name__}")


def _convolve(a: list, b: list, out_len: int) -> list:
    """Schoolbook product of coefficient lists, truncated to out_len entries."""
    out = [0] * out_len
    # run the sparser operand on the outside
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    lb = len(b)
    for i, ai in enumerate(a):
        if not ai or i >= out_len:
            continue
        jmax = min(lb, out_len - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


class QSeries:
    """Truncated power series: coeffs[j] is the coefficient of q**(valuation+j)."""

    __slots__ = ("valuation", "coeffs", "trunc")

    def __init__(self, valuation: int, coeffs, trunc: int):
        if valuation < 0:
            raise ValueError("negative valuation (Laurent series unsupported)")
        if trunc < 0:
            raise ValueError("negative truncation")
        cs = tuple(_as_exact(c) for c in coeffs)
        if cs and not any(cs):
            cs = ()
        if not cs:
            valuation = 0
        else:
            if trunc < valuation:
                raise ValueError("trunc below valuation for a nonzero series")
            if len(cs) != trunc - valuation + 1:
                raise ValueError(
                    f"need {trunc - valuation + 1} coefficients, got {len(cs)}"
                )
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, *args):
        raise AttributeError("QSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls(0, (), trunc)

    @classmethod
    def constant(cls, c, trunc: int) -> "QSeries":
        return cls(0, [c] + [0] * trunc, trunc)

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls.constant(1, trunc)

    @classmethod
    def monomial(cls, c, power: int, trunc: int) -> "QSeries":
        if power > trunc:
            return cls.zero(trunc)
        return cls(power, [c] + [0] * (trunc - power), trunc)

    @classmethod
    def from_coefficients(cls, seq, trunc: int | None = None, valuation: int = 0):
        seq = list(seq)
        if trunc is None:
            trunc = valuation + len(seq) - 1 if seq else 0
        need = trunc - valuation + 1
        if len(seq) > need:
            raise ValueError("more coefficients than the truncation admits")
        return cls(valuation, seq + [0] * (need - len(seq)), trunc)

    # -- accessors ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int):
        """Exact coefficient of q**n; raises beyond the guaranteed range."""
        if n > self.trunc:
            raise ValueError(f"coefficient of q^{n} beyond truncation {self.trunc}")
        if n < self.valuation or not self.coeffs:
            return 0
        return self.coeffs[n - self.valuation]

    def coefficients(self) -> list:
        """All coefficients as an absolute list for q**0 .. q**trunc."""
        out = [0] * (self.trunc + 1)
        for j, c in enumerate(self.coeffs):
            out[self.valuation + j] = c
        return out

    def order(self) -> int | None:
        """Smallest power with nonzero coefficient, or None for the zero series."""
        for j, c in enumerate(self.coeffs):
            if c:
                return self.valuation + j
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash((self.trunc, tuple(self.coefficients())))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if len(self.coeffs) > 6 else ""
        return f"QSeries(q^{self.valuation}*[{head}{more}], trunc={self.trunc})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.trunc, other.trunc)
        v = min(self.valuation, other.valuation)
        v = min(v, t)
        out = [0] * (t - v + 1)
        for src in (self, other):
            for j, c in enumerate(src.coeffs):
                n = src.valuation + j
                if n <= t:
                    out[n - v] += c
        return QSeries(v, out, t)

    def __neg__(self) -> "QSeries":
        return QSeries(self.valuation, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, c) -> "QSeries":
        if c == 0:
            return QSeries.zero(self.trunc)
        return QSeries(self.valuation, [c * x for x in self.coeffs], self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc + other.valuation, other.trunc + self.valuation)
        if self.is_zero() or other.is_zero():
            return QSeries.zero(trunc)
        val = self.valuation + other.valuation
        out = _convolve(list(self.coeffs), list(other.coeffs), trunc - val + 1)
        return QSeries(val, out, trunc)

    __rmul__ = __mul__

    def pow(self, k: int) -> "QSeries":
        """k-th power by repeated squaring, k >= 0."""
        if k < 0:
            raise ValueError("negative power")
        result = QSeries.one(self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    __pow__ = pow

    def inverse(self, trunc: int | None = None) -> "QSeries":
        """Multiplicative inverse up to trunc via b_n = -(1/a_0) sum a_j b_{n-j}."""
        if trunc is None:
            trunc = self.trunc
        if trunc > self.trunc:
            raise ValueError("cannot invert beyond the guaranteed truncation")
        if self.valuation != 0 or not self.coeffs or self.coeffs[0] == 0:
            raise ValueError(
                "inverse requires a nonzero constant term; shift the series first"
            )
        a = self.coefficients()[: trunc + 1]
        a0 = a[0]
        inv0 = _as_exact(Fraction(1) / Fraction(a0))
        nonzero = [(j, aj) for j, aj in enumerate(a) if j and aj]
        b = [inv0]
        for n in range(1, trunc + 1):
            acc = 0
            for j, aj in nonzero:
                if j > n:
                    break
                acc += aj * b[n - j]
            bn = -acc * inv0 if acc else 0
            b.append(_as_exact(bn) if isinstance(bn, Fraction) else bn)
        return QSeries(0, b, trunc)

    # -- coefficient-extraction and substitution operators ------------------

    def u_operator(self, m: int) -> "QSeries":
        """U(m): coefficient n of the result is coefficient n*m of self."""
        if m < 1:
            raise ValueError("U(m) requires m >= 1")
        t = self.trunc // m
        return QSeries(0, [self.coefficient(n * m) for n in range(t + 1)], t)

    def rescale(self, m: int) -> "QSeries":
        """Substitute q -> q**m."""
        if m < 1:
            raise ValueError("rescale requires m >= 1")
        if self.is_zero():
            return QSeries.zero((self.trunc + 1) * m - 1)
        out = [0] * (len(self.coeffs) * m - (m - 1))
        for j, c in enumerate(self.coeffs):
            out[j * m] = c
        trunc = (self.trunc + 1) * m - 1
        val = self.valuation * m
        return QSeries(val, out + [0] * (trunc - val + 1 - len(out)), trunc)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q**k."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return QSeries.zero(self.trunc + k)
        return QSeries(self.valuation + k, self.coeffs, self.trunc + k)

    def crop(self, trunc: int) -> "QSeries":
        """Weaken the guarantee to a smaller truncation."""
        if trunc > self.trunc:
            raise ValueError("crop cannot extend the guaranteed range")
        if trunc == self.trunc:
            return self
        if self.is_zero() or trunc < self.valuation:
            return QSeries.zero(trunc)
        return QSeries(
            self.valuation, self.coeffs[: trunc - self.valuation + 1], trunc
        )

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        coeffs = [
            [str(Fraction(c).numerator), str(Fraction(c).denominator)]
            for c in self.coeffs
        ]
        return {"valuation": self.valuation, "trunc": self.trunc, "coeffs": coeffs}

    @classmethod
    def from_json_dict(cls, d: dict) -> "QSeries":
        coeffs = [Fraction(int(num), int(den)) for num, den in d["coeffs"]]
        return cls(d["valuation"], coeffs, d["trunc"])


# -- the Euler product and friends ------------------------------------------

_euler_cache: dict[int, tuple] = {}


def _alloc_trunc(trunc: int) -> int:
    """Bucket large truncations to powers of two so one expansion is reused."""
    if trunc <= 256:
        return trunc
    return 1 << (trunc - 1).bit_length()


def euler_coefficients(trunc: int) -> tuple:
    """Coefficients 0..trunc of prod_{n=1}^{trunc} (1 - q**n).

    Factors beyond trunc cannot change the retained coefficients, so this is
    the exact expansion of (q;q)_infinity through q**trunc.
    """
    for t in sorted(_euler_cache):
        if t >= trunc:
            return _euler_cache[t][: trunc + 1]
    alloc = _alloc_trunc(trunc)
    c = [0] * (alloc + 1)
    c[0] = 1
    for n in range(1, alloc + 1):
        for k in range(alloc, n - 1, -1):
            d = c[k - n]
            if d:
                c[k] -= d
    out = tuple(c)
    _euler_cache[alloc] = out
    return out[: trunc + 1]


def euler_product(trunc: int) -> QSeries:
    """(q;q)_infinity as a QSeries exact through q**trunc."""
    if trunc < 0:
        raise ValueError("negative truncation")
    return QSeries(0, list(euler_coefficients(trunc)), trunc)
