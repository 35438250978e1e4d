"""Sparse multivariate polynomial arithmetic over exact rationals.

A polynomial is an immutable map from exponent vectors (tuples of
nonnegative ints, one entry per variable) to nonzero ``Fraction``
coefficients.  Everything downstream of this module (quotient dimensions,
Milnor and Tjurina numbers, index formulas) is integer valued, so no
floating point appears anywhere: exactness is the whole point.

Monomial orders come in one global flavour (degrevlex, constant monomial
smallest) and two local flavours (anti-graded revlex and its weighted
variant, constant monomial largest).  Local orders are what make quotient
dimensions in the local ring at the origin computable; orders are passed
explicitly, never kept as ambient state, because the same polynomial is
routinely used under both kinds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import PolyParseError

Exponent = tuple[int, ...]
Rational = Fraction | int

_ZERO = Fraction(0)


def default_variable_names(nvars: int) -> tuple[str, ...]:
    """x, y, z for up to three variables, z1..zn beyond that."""
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"z{i + 1}" for i in range(nvars))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions; the zero polynomial
    has an empty term map.  Instances hash and compare by value.  The term
    dict is exposed for read access only and must never be mutated.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Rational] | None = None):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = Fraction(coeff)
                if c:
                    clean[exp] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    # Internal fast path: caller guarantees canonical (zero-free, consistent) terms.
    @classmethod
    def _make(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "Polynomial":
        p = object.__new__(cls)
        object.__setattr__(p, "nvars", nvars)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._make(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Rational) -> "Polynomial":
        c = Fraction(value)
        return cls._make(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = 1
        return cls._make(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Rational = 1) -> "Polynomial":
        return cls(len(exponent), {tuple(exponent): coeff})

    # basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def total_degree(self) -> int:
        """Degree of the zero polynomial is conventionally -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def max_degrees(self) -> tuple[int, ...]:
        """Per-variable maximum exponent (all zero for the zero polynomial)."""
        out = [0] * self.nvars
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    # arithmetic ---------------------------------------------------------

    def _check_arity(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_arity(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, _ZERO) + c
            if v:
                out[exp] = v
            elif exp in out:
                del out[exp]
        return Polynomial._make(self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_arity(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, _ZERO) - c
            if v:
                out[exp] = v
            elif exp in out:
                del out[exp]
        return Polynomial._make(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._make(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._make(self.nvars, {e: a * c for e, a in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_arity(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(exp, _ZERO) + c1 * c2
                if v:
                    out[exp] = v
                elif exp in out:
                    del out[exp]
        return Polynomial._make(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self, default_variable_names(self.nvars))!r})"

    # calculus and substitution ------------------------------------------

    def partial_derivative(self, index: int) -> "Polynomial":
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range for {self.nvars} variables")
        out: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            e = exp[index]
            if e == 0:
                continue
            new = list(exp)
            new[index] = e - 1
            out[tuple(new)] = c * e
        return Polynomial._make(self.nvars, out)

    def evaluate(self, point: Sequence[Rational]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        vals = [Fraction(v) for v in point]
        total = _ZERO
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def shift_origin(self, offsets: Sequence[Rational]) -> "Polynomial":
        """Return f(z + c): the germ of f seen from the point c."""
        if len(offsets) != self.nvars:
            raise ValueError("offset arity mismatch")
        offs = [Fraction(v) for v in offsets]
        shifted_power: dict[tuple[int, int], Polynomial] = {}

        def var_power(i: int, e: int) -> Polynomial:
            key = (i, e)
            cached = shifted_power.get(key)
            if cached is None:
                base = Polynomial.variable(self.nvars, i) + Polynomial.constant(self.nvars, offs[i])
                cached = base**e
                shifted_power[key] = cached
            return cached

        total = Polynomial.zero(self.nvars)
        for exp, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * var_power(i, e)
            total = total + term
        return total

    def specialize(self, index: int, value: Rational) -> "Polynomial":
        """Substitute a constant for one variable, dropping it from the ring."""
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range")
        if self.nvars == 1:
            raise ValueError("cannot drop the last variable")
        val = Fraction(value)
        out: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            coeff = c * val ** exp[index] if exp[index] else c
            if not coeff:
                continue
            new = exp[:index] + exp[index + 1 :]
            v = out.get(new, _ZERO) + coeff
            if v:
                out[new] = v
            elif new in out:
                del out[new]
        return Polynomial._make(self.nvars - 1, out)


def gradient(p: Polynomial) -> tuple[Polynomial, ...]:
    return tuple(p.partial_derivative(i) for i in range(p.nvars))


def evaluate_at_origin(p: Polynomial) -> Fraction:
    """Constant term of p, i.e. p(0)."""
    return p.constant_term()


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Total order on exponent vectors, compatible with multiplication.

    Three kinds are supported:

    * ``global-degrevlex``: degree first, reverse lexicographic tie break;
      the constant monomial is the minimum.
    * ``local-antigraded-revlex``: lower total degree means larger monomial;
      same tie break; the constant monomial is the maximum.
    * ``local-weighted-revlex``: like the anti-graded order but with a
      positive integer weight per variable.

    ``sort_key`` returns a tuple that sorts ascending with the order, so
    ``max(exps, key=order.sort_key)`` is the leading exponent.
    """

    GLOBAL_DEGREVLEX = "global-degrevlex"
    LOCAL_ANTIGRADED = "local-antigraded-revlex"
    LOCAL_WEIGHTED = "local-weighted-revlex"

    __slots__ = ("kind", "weights", "_keys")

    def __init__(self, kind: str, weights: Sequence[int] | None = None):
        if kind not in (self.GLOBAL_DEGREVLEX, self.LOCAL_ANTIGRADED, self.LOCAL_WEIGHTED):
            raise ValueError(f"unknown monomial order kind {kind!r}")
        if kind == self.LOCAL_WEIGHTED:
            if not weights:
                raise ValueError("weighted order needs a weight vector")
            weights = tuple(int(w) for w in weights)
            if any(w <= 0 for w in weights):
                raise ValueError("weights must be positive integers")
        elif weights is not None:
            raise ValueError(f"order kind {kind!r} takes no weights")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_keys", {})

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    @property
    def is_local(self) -> bool:
        return self.kind != self.GLOBAL_DEGREVLEX

    def degree(self, exp: Exponent) -> int:
        """Degree used by the order (weighted for the weighted kind)."""
        if self.kind == self.LOCAL_WEIGHTED:
            return sum(w * e for w, e in zip(self.weights, exp))
        return sum(exp)

    def sort_key(self, exp: Exponent) -> tuple[int, ...]:
        key = self._keys.get(exp)
        if key is None:
            if self.kind == self.GLOBAL_DEGREVLEX:
                head = sum(exp)
            elif self.kind == self.LOCAL_ANTIGRADED:
                head = -sum(exp)
            else:
                head = -sum(w * e for w, e in zip(self.weights, exp))
            key = (head, *(-e for e in reversed(exp)))
            self._keys[exp] = key
        return key

    def compare(self, a: Exponent, b: Exponent) -> int:
        """-1, 0 or 1 as a is smaller, equal or larger than b."""
        if len(a) != len(b):
            raise ValueError(f"exponent length mismatch: {len(a)} vs {len(b)}")
        ka, kb = self.sort_key(tuple(a)), self.sort_key(tuple(b))
        return (ka > kb) - (ka < kb)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return self.kind == other.kind and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.kind, self.weights))

    def __repr__(self) -> str:
        if self.weights is not None:
            return f"MonomialOrder({self.kind!r}, weights={self.weights})"
        return f"MonomialOrder({self.kind!r})"


DEGREVLEX = MonomialOrder(MonomialOrder.GLOBAL_DEGREVLEX)
ANTIGRADED = MonomialOrder(MonomialOrder.LOCAL_ANTIGRADED)


def weighted_order(weights: Sequence[int]) -> MonomialOrder:
    return MonomialOrder(MonomialOrder.LOCAL_WEIGHTED, weights)


def monomial_compare(order: MonomialOrder, a: Exponent, b: Exponent) -> int:
    """-1 (less), 0 (equal) or 1 (greater) under the given order."""
    return order.compare(a, b)


def leading_exponent(p: Polynomial, order: MonomialOrder) -> Exponent:
    if not p.terms:
        raise ValueError("the zero polynomial has no leading exponent")
    return max(p.terms, key=order.sort_key)


# ---------------------------------------------------------------------------
# parsing

_OPS = set("+-*^()/,")


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind: str, value, pos: int):
        self.kind = kind
        self.value = value
        self.pos = pos


def _valid_name(name: str) -> bool:
    return bool(name) and (name[0].isalpha() or name[0] == "_") and all(
        ch.isalnum() or ch == "_" for ch in name
    )


def _tokenize(text: str, names: Sequence[str]) -> list[_Token]:
    by_length = sorted(names, key=len, reverse=True)
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            for name in by_length:
                if text.startswith(name, i):
                    tokens.append(_Token("var", name, i))
                    i += len(name)
                    break
            else:
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                raise PolyParseError(f"unknown variable {text[i:j]!r}", i)
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    """Recursive descent over `+ - * ^ ( )` with implicit multiplication.

    Rational coefficients are written `p/q`; `/` is only valid directly
    after an integer literal, never as a general operator.
    """

    def __init__(self, tokens: list[_Token], names: Sequence[str], nvars: int):
        self.tokens = tokens
        self.pos = 0
        self.index = {name: i for i, name in enumerate(names)}
        self.nvars = nvars

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        result = self.expression()
        tok = self.peek()
        if tok.kind != "end":
            raise PolyParseError(f"unexpected {tok.kind!r}", tok.pos)
        return result

    def expression(self) -> Polynomial:
        total = Polynomial.zero(self.nvars)
        sign = 1
        tok = self.peek()
        if tok.kind in "+-":
            self.advance()
            sign = -1 if tok.kind == "-" else 1
        while True:
            term = self.term()
            total = total + term if sign > 0 else total - term
            tok = self.peek()
            if tok.kind in "+-":
                self.advance()
                sign = -1 if tok.kind == "-" else 1
                continue
            return total

    def term(self) -> Polynomial:
        product = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                product = product * self.factor()
            elif tok.kind in ("num", "var", "("):
                product = product * self.factor()
            else:
                return product

    def factor(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok.kind == "-":
                raise PolyParseError("negative exponent", exp_tok.pos)
            if exp_tok.kind != "num":
                raise PolyParseError("exponent must be a nonnegative integer", exp_tok.pos)
            self.advance()
            return base ** exp_tok.value
        return base

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok.kind == "num":
            value = Fraction(tok.value)
            if self.peek().kind == "/":
                slash = self.advance()
                den = self.peek()
                if den.kind != "num":
                    raise PolyParseError("expected integer denominator", den.pos)
                if den.value == 0:
                    raise PolyParseError("zero denominator", den.pos)
                self.advance()
                value = Fraction(tok.value, den.value)
                del slash
            return Polynomial.constant(self.nvars, value)
        if tok.kind == "var":
            return Polynomial.variable(self.nvars, self.index[tok.value])
        if tok.kind == "(":
            inner = self.expression()
            closing = self.advance()
            if closing.kind != ")":
                raise PolyParseError("expected ')'", closing.pos)
            return inner
        raise PolyParseError(f"unexpected {tok.kind!r}", tok.pos)


def parse_poly(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse an expression over the declared variables into canonical form.

    Grammar: sums of terms, a term is a product of factors (with `*`
    optional between adjacent factors, e.g. ``xy^5``), a factor is an atom
    optionally raised to a nonnegative integer power, and an atom is an
    integer or rational literal ``p/q``, a declared variable, or a
    parenthesized expression.  ``-`` binds to the following term.
    Variable matching is maximal munch against the declared names.
    """
    names = list(variables)
    if not names:
        raise ValueError("at least one variable name is required")
    seen = set()
    for name in names:
        if not _valid_name(name):
            raise ValueError(f"invalid variable name {name!r}")
        if name in seen:
            raise ValueError(f"duplicate variable name {name!r}")
        seen.add(name)
    tokens = _tokenize(text, names)
    if tokens[0].kind == "end":
        raise PolyParseError("empty expression", 0)
    return _Parser(tokens, names, len(names)).parse()


# ---------------------------------------------------------------------------
# printing


def format_poly(
    p: Polynomial,
    variables: Sequence[str] | None = None,
    order: MonomialOrder = DEGREVLEX,
) -> str:
    """Canonical text form; ``parse_poly(format_poly(p, v), v) == p``.

    Terms are listed in descending order (largest monomial first, degrevlex
    by default), factors joined with explicit ``*``.
    """
    names = list(variables) if variables is not None else list(default_variable_names(p.nvars))
    if len(names) != p.nvars:
        raise ValueError(f"{p.nvars} variables but {len(names)} names supplied")
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for exp in sorted(p.terms, key=order.sort_key, reverse=True):
        coeff = p.terms[exp]
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append((" + " if coeff > 0 else " - ") + body)
    return "".join(pieces)


def poly_from_terms(nvars: int, terms: Iterable[tuple[Exponent, Rational]]) -> Polynomial:
    acc: dict[Exponent, Fraction] = {}
    for exp, coeff in terms:
        exp = tuple(exp)
        v = acc.get(exp, _ZERO) + Fraction(coeff)
        if v:
            acc[exp] = v
        elif exp in acc:
            del acc[exp]
    return Polynomial(nvars, acc)
