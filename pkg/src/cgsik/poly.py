"""Sparse multivariate polynomials over Q(sqrt2) with configurable term orders.

Monomials are plain exponent tuples indexed by a fixed ambient variable
list.  The ambient list carries a designated parameter suffix: the first
``nmain`` names are the main (solved-for) variables, the rest are
parameters.  Term orders compare full monomials; the block view
(main variables over parameters) is what leading-coefficient analysis
in the parametric Groebner machinery uses.

The canonical text form writes sqrt(2) as the reserved symbol ``r2``,
e.g. ``44*r2*c1 - 16*c1*c4 + x``.  ``parse_poly`` and ``format_poly``
round-trip exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .qsqrt2 import QSqrt2

Monomial = tuple  # exponent tuple, len == len(ambient)

SQRT2_NAME = "r2"


class AmbientError(ValueError):
    """Mixing polynomials from different ambient variable lists."""


class PolyParseError(ValueError):
    pass


class Ambient:
    """An ordered variable list with a parameter suffix."""

    __slots__ = ("names", "nparams", "_index")

    def __init__(self, names: Sequence[str], nparams: int = 0) -> None:
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        if SQRT2_NAME in names:
            raise ValueError(f"{SQRT2_NAME!r} is reserved for sqrt(2)")
        if not 0 <= nparams <= len(names):
            raise ValueError("parameter count out of range")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "nparams", nparams)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("Ambient is immutable")

    @property
    def nmain(self) -> int:
        return len(self.names) - self.nparams

    @property
    def main_names(self) -> tuple[str, ...]:
        return self.names[: self.nmain]

    @property
    def param_names(self) -> tuple[str, ...]:
        return self.names[self.nmain:]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AmbientError(f"unknown variable {name!r} in {self}") from None

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def var_monomial(self, name: str) -> Monomial:
        i = self.index(name)
        return tuple(1 if j == i else 0 for j in range(len(self.names)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ambient)
            and self.names == other.names
            and self.nparams == other.nparams
        )

    def __hash__(self) -> int:
        return hash((self.names, self.nparams))

    def __repr__(self) -> str:
        main = ",".join(self.main_names)
        if self.nparams:
            return f"Ambient({main} | {','.join(self.param_names)})"
        return f"Ambient({main})"


# -- monomial helpers (exponent tuples) -------------------------------------

def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m, n))

def mono_divides(m: Monomial, n: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, n))

def mono_div(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(m, n))

def mono_lcm(m: Monomial, n: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m, n))

def mono_degree(m: Monomial) -> int:
    return sum(m)


class TermOrder:
    """Admissible monomial order: lex, grevlex, or a two-block order.

    ``key(m)`` maps a monomial to a tuple that compares the way the
    order does (larger key = larger monomial).  For a block order the
    split index separates main variables from parameters and each block
    carries its own sub-order.
    """

    __slots__ = ("kind", "split", "main_kind", "param_kind", "_cache")

    def __init__(self, kind: str, split: Optional[int] = None,
                 main_kind: str = "lex", param_kind: str = "lex") -> None:
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "block" and split is None:
            raise ValueError("block order needs a split index")
        for sub in (main_kind, param_kind):
            if sub not in ("lex", "grevlex"):
                raise ValueError(f"unknown block sub-order {sub!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "split", split)
        object.__setattr__(self, "main_kind", main_kind)
        object.__setattr__(self, "param_kind", param_kind)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("TermOrder is immutable")

    @classmethod
    def lex(cls) -> TermOrder:
        return cls("lex")

    @classmethod
    def grevlex(cls) -> TermOrder:
        return cls("grevlex")

    @classmethod
    def block(cls, split: int, main_kind: str = "lex",
              param_kind: str = "lex") -> TermOrder:
        return cls("block", split, main_kind, param_kind)

    def key(self, m: Monomial):
        cache = self._cache
        k = cache.get(m)
        if k is None:
            k = self._key(m)
            cache[m] = k
        return k

    def _key(self, m: Monomial):
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return _grevlex_key(m)
        sub = _lex_key if self.main_kind == "lex" else _grevlex_key
        psub = _lex_key if self.param_kind == "lex" else _grevlex_key
        return (sub(m[: self.split]), psub(m[self.split:]))

    def key_main(self, m_main: Monomial):
        """Key for comparing main-block monomials only."""
        kind = self.main_kind if self.kind == "block" else self.kind
        return m_main if kind == "lex" else _grevlex_key(m_main)

    def sort_desc(self, monomials: Iterable[Monomial]) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=True)

    def spec(self) -> str:
        if self.kind == "block":
            return f"block({self.split},{self.main_kind},{self.param_kind})"
        return self.kind

    @classmethod
    def from_spec(cls, text: str) -> TermOrder:
        text = text.strip()
        if text in ("lex", "grevlex"):
            return cls(text)
        if text.startswith("block(") and text.endswith(")"):
            split_s, main_kind, param_kind = text[6:-1].split(",")
            return cls.block(int(split_s), main_kind.strip(), param_kind.strip())
        raise ValueError(f"bad term order spec {text!r}")

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrder) and self.spec() == other.spec()

    def __hash__(self) -> int:
        return hash(self.spec())

    def __repr__(self) -> str:
        return f"TermOrder({self.spec()})"


def _lex_key(m: Monomial):
    return m

def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


class Poly:
    """Sparse polynomial: {exponent tuple -> nonzero coefficient}.

    Coefficients are QSqrt2 by default; any field-like class with
    ``+ - * inverse() __bool__`` works (the parametric machinery reuses
    this with rational functions as coefficients).
    """

    __slots__ = ("ambient", "terms", "field")

    def __init__(self, ambient: Ambient, terms: Mapping[Monomial, object],
                 field: type = QSqrt2, _clean: bool = True) -> None:
        if _clean:
            terms = {m: c for m, c in terms.items() if c}
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ambient: Ambient, field: type = QSqrt2) -> Poly:
        return cls(ambient, {}, field, _clean=False)

    @classmethod
    def const(cls, ambient: Ambient, c, field: type = QSqrt2) -> Poly:
        c = _coerce_coeff(c, field)
        if not c:
            return cls.zero(ambient, field)
        return cls(ambient, {ambient.unit_monomial(): c}, field, _clean=False)

    @classmethod
    def variable(cls, ambient: Ambient, name: str, field: type = QSqrt2) -> Poly:
        return cls(ambient, {ambient.var_monomial(name): field.one()},
                   field, _clean=False)

    @classmethod
    def one(cls, ambient: Ambient, field: type = QSqrt2) -> Poly:
        return cls.const(ambient, field.one(), field)

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, object]]:
        return iter(self.terms.items())

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        (m, c), = self.terms.items()
        return not any(m) and c == self.field.one()

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and not any(next(iter(self.terms))))

    def constant_value(self):
        """The coefficient of the unit monomial (zero if absent)."""
        return self.terms.get(self.ambient.unit_monomial(), self.field.zero())

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def variables(self) -> tuple[str, ...]:
        """Names actually occurring, in ambient order."""
        seen = [False] * len(self.ambient.names)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen[i] = True
        return tuple(v for v, s in zip(self.ambient.names, seen) if s)

    def degree_in(self, name: str) -> int:
        i = self.ambient.index(name)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def is_param_only(self) -> bool:
        nmain = self.ambient.nmain
        return all(not any(m[:nmain]) for m in self.terms)

    def is_main_only(self) -> bool:
        nmain = self.ambient.nmain
        return all(not any(m[nmain:]) for m in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: Poly) -> None:
        if self.ambient != other.ambient:
            raise AmbientError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.const(self.ambient, other, self.field)
        self._check(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            if s is None:
                res[m] = c
            else:
                s = s + c
                if s:
                    res[m] = s
                else:
                    del res[m]
        return Poly(self.ambient, res, self.field, _clean=False)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.ambient, {m: -c for m, c in self.terms.items()},
                    self.field, _clean=False)

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.const(self.ambient, other, self.field)
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = res.get(m)
                if s is None:
                    res[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        res[m] = s
                    else:
                        del res[m]
        return Poly(self.ambient, res, self.field, _clean=False)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        c = _coerce_coeff(c, self.field)
        if not c:
            return Poly.zero(self.ambient, self.field)
        return Poly(self.ambient, {m: k * c for m, k in self.terms.items()},
                    self.field, _clean=False)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.ambient, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.terms.items())))

    # -- substitution ------------------------------------------------------

    def eval_partial(self, assignment: Mapping[str, object]) -> Poly:
        """Substitute exact values for some variables.

        Values may be int, Fraction, QSqrt2 or field elements; the result
        lives in the remaining variables of the same ambient.
        """
        if not assignment:
            return self
        idx = {self.ambient.index(v): _coerce_coeff(val, self.field)
               for v, val in assignment.items()}
        acc: dict = {}
        for m, c in self.terms.items():
            factor = c
            rest = list(m)
            for i, val in idx.items():
                e = m[i]
                if e:
                    factor = factor * val ** e
                    rest[i] = 0
            if not factor:
                continue
            key = tuple(rest)
            s = acc.get(key)
            if s is None:
                acc[key] = factor
            else:
                s = s + factor
                if s:
                    acc[key] = s
                else:
                    del acc[key]
        return Poly(self.ambient, acc, self.field, _clean=False)

    def eval_all(self, assignment: Mapping[str, object]):
        """Full evaluation to a field element (every occurring var assigned)."""
        p = self.eval_partial(assignment)
        if not p.is_constant():
            missing = [v for v in p.variables()]
            raise ValueError(f"unassigned variables {missing}")
        return p.constant_value()

    # -- leading data ------------------------------------------------------

    def leading_term(self, order: TermOrder) -> tuple[Monomial, object]:
        """Max (monomial, coeff) under the full order.  Poly must be nonzero."""
        if not self.terms:
            raise ZeroPolynomialError("leading term of zero polynomial")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_data(self, order: TermOrder) -> tuple[Monomial, Poly]:
        """Block view: (LM over main variables, LC as a parameter polynomial).

        The leading monomial LM is the largest main-variable monomial
        occurring in the polynomial; the leading coefficient collects all
        terms with that main part, as a polynomial in the parameters.
        """
        if not self.terms:
            raise ZeroPolynomialError("leading data of zero polynomial")
        nmain = self.ambient.nmain
        lm_main = max((m[:nmain] for m in self.terms), key=order.key_main)
        pad = (0,) * nmain
        lc_terms = {pad + m[nmain:]: c for m, c in self.terms.items()
                    if m[:nmain] == lm_main}
        lc = Poly(self.ambient, lc_terms, self.field, _clean=False)
        return lm_main + (0,) * self.ambient.nparams, lc

    # -- univariate view ---------------------------------------------------

    def univariate_view(self) -> Optional[list]:
        """Dense coefficient list if exactly one variable occurs, else None."""
        vs = self.variables()
        if len(vs) != 1:
            return None
        i = self.ambient.index(vs[0])
        deg = max(m[i] for m in self.terms)
        coeffs = [self.field.zero()] * (deg + 1)
        for m, c in self.terms.items():
            coeffs[m[i]] = c
        return coeffs

    # -- normalization -----------------------------------------------------

    def content_normalized(self) -> Poly:
        """Divide out the rational content (QSqrt2 coefficients only).

        Keeps coefficients integral and small during long eliminations;
        the sign is fixed so the largest monomial (plain lex) has positive
        leading part.
        """
        if not self.terms or self.field is not QSqrt2:
            return self
        from math import gcd
        num_g = 0
        den_l = 1
        for c in self.terms.values():
            for q in (c.a, c.b):
                if q:
                    num_g = gcd(num_g, abs(q.numerator))
                    den_l = den_l // gcd(den_l, q.denominator) * q.denominator
        if num_g == 0:
            return self
        factor = Fraction(den_l, num_g)
        lead = self.terms[max(self.terms)]
        if lead.sign() < 0:
            factor = -factor
        if factor == 1:
            return self
        return Poly(self.ambient, {m: c * factor for m, c in self.terms.items()},
                    self.field, _clean=False)

    def monic(self, order: TermOrder) -> Poly:
        _, lc = self.leading_term(order)
        if lc == self.field.one():
            return self
        inv = lc.inverse()
        return Poly(self.ambient, {m: c * inv for m, c in self.terms.items()},
                    self.field, _clean=False)

    # -- float / repr ------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)


class ZeroPolynomialError(ValueError):
    pass


def _coerce_coeff(c, field: type):
    if isinstance(c, field):
        return c
    if isinstance(c, (int, Fraction)):
        return field.from_rational(c)
    if field is not QSqrt2 and isinstance(c, QSqrt2):
        return field.from_qsqrt2(c)
    raise TypeError(f"cannot coerce {c!r} into {field.__name__}")


# -- canonical text form -----------------------------------------------------

def format_coeff(c: QSqrt2) -> str:
    """Human form of a QSqrt2 scalar, e.g. '3', '-1/2*r2', '3+2*r2'."""
    if not c:
        return "0"
    parts = []
    if c.a:
        parts.append(str(c.a))
    if c.b:
        if c.b == 1:
            s = SQRT2_NAME
        elif c.b == -1:
            s = f"-{SQRT2_NAME}"
        else:
            s = f"{c.b}*{SQRT2_NAME}"
        if parts and c.b > 0:
            parts.append(f"+{s}")
        else:
            parts.append(s)
    return "".join(parts)


def _format_term(q: Fraction, r2: bool, m: Monomial, names: Sequence[str]) -> str:
    factors = []
    if r2:
        factors.append(SQRT2_NAME)
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    mag = abs(q)
    if not factors:
        return str(mag)
    if mag != 1:
        factors.insert(0, str(mag))
    return "*".join(factors)


def format_poly(p: Poly) -> str:
    """Canonical text form; terms in descending plain-lex monomial order.

    Each QSqrt2 coefficient contributes a rational term and an ``r2``
    term, so every printed term has a plain rational coefficient.
    """
    if p.field is not QSqrt2:
        raise TypeError("canonical text form is for QSqrt2 coefficients")
    if not p.terms:
        return "0"
    out = []
    for m in sorted(p.terms, reverse=True):
        c = p.terms[m]
        for q, r2 in ((c.a, False), (c.b, True)):
            if not q:
                continue
            body = _format_term(q, r2, m, p.ambient.names)
            if not out:
                out.append(f"-{body}" if q < 0 else body)
            else:
                out.append(f"- {body}" if q < 0 else f"+ {body}")
    return " ".join(out)


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.toks: list[tuple[str, object, int]] = []
        self._scan()
        self.i = 0

    def _scan(self) -> None:
        text, n = self.text, len(self.text)
        pos = 0
        while pos < n:
            ch = text[pos]
            if ch.isspace():
                pos += 1
                continue
            if ch.isdigit():
                start = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                self.toks.append(("num", int(text[start:pos]), start))
                continue
            if ch.isalpha() or ch == "_":
                start = pos
                while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                    pos += 1
                self.toks.append(("name", text[start:pos], start))
                continue
            if ch in "+-*/^()":
                self.toks.append((ch, ch, pos))
                pos += 1
                continue
            raise PolyParseError(f"unexpected character {ch!r} at column {pos}")

    def peek(self) -> Optional[str]:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def next(self) -> tuple[str, object, int]:
        if self.i >= len(self.toks):
            raise PolyParseError("unexpected end of input")
        t = self.toks[self.i]
        self.i += 1
        return t


def parse_poly(text: str, ambient: Ambient) -> Poly:
    """Parse the canonical text form back into a Poly (inverse of format_poly)."""
    toks = _Tokens(text)
    p = _parse_expr(toks, ambient)
    if toks.peek() is not None:
        kind, val, pos = toks.next()
        raise PolyParseError(f"trailing input {val!r} at column {pos}")
    return p


def _parse_expr(toks: _Tokens, ambient: Ambient) -> Poly:
    p = _parse_product(toks, ambient)
    while toks.peek() in ("+", "-"):
        op, _, _ = toks.next()
        q = _parse_product(toks, ambient)
        p = p + q if op == "+" else p - q
    return p


def _parse_product(toks: _Tokens, ambient: Ambient) -> Poly:
    p = _parse_power(toks, ambient)
    while toks.peek() == "*":
        toks.next()
        p = p * _parse_power(toks, ambient)
    return p


def _parse_power(toks: _Tokens, ambient: Ambient) -> Poly:
    p = _parse_atom(toks, ambient)
    if toks.peek() == "^":
        toks.next()
        kind, val, pos = toks.next()
        if kind != "num":
            raise PolyParseError(f"exponent must be an integer at column {pos}")
        p = p ** val
    return p


def _parse_atom(toks: _Tokens, ambient: Ambient) -> Poly:
    kind, val, pos = toks.next()
    if kind == "-":
        return -_parse_power(toks, ambient)
    if kind == "+":
        return _parse_power(toks, ambient)
    if kind == "num":
        value = Fraction(val)
        if toks.peek() == "/":
            toks.next()
            k2, v2, p2 = toks.next()
            if k2 != "num":
                raise PolyParseError(f"denominator must be an integer at column {p2}")
            value = Fraction(val, v2)
        return Poly.const(ambient, value)
    if kind == "name":
        if val == SQRT2_NAME:
            return Poly.const(ambient, QSqrt2.sqrt2())
        try:
            return Poly.variable(ambient, val)
        except AmbientError:
            raise PolyParseError(
                f"unknown variable {val!r} at column {pos}") from None
    if kind == "(":
        p = _parse_expr(toks, ambient)
        k2, _, p2 = toks.next()
        if k2 != ")":
            raise PolyParseError(f"expected ')' at column {p2}")
        return p
    raise PolyParseError(f"unexpected token {val!r} at column {pos}")
