"""Standard bases in the local ring at the origin via Mora normal form.

Global Groebner division is unsound in the local ring (the constant
monomial is the largest one, so naive division need not terminate).  Mora's
tangent-cone normal form fixes this: reducers with smaller ecart are
preferred and the intermediate remainder itself may be recorded as a
reducer, which multiplies the input by a unit.  The result is a weak normal
form

    u * p = sum_i q_i * g_i + r,   u(0) != 0,

with the leading monomial of r divisible by no leading monomial of G.
Standard bases are completed Buchberger style with the product and chain
criteria (Gebauer-Moeller pair update), and quotient dimensions are read
off the staircase of the leading ideal by exact lattice enumeration.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Sequence

from .poly import ANTIGRADED, Exponent, MonomialOrder, Polynomial

INFINITE = float("inf")

_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal, zero generators removed.

    An empty generator tuple denotes the zero ideal.
    """

    generators: tuple[Polynomial, ...]
    nvars: int


def ideal(generators: Iterable[Polynomial], nvars: int | None = None) -> Ideal:
    gens = tuple(g for g in generators if not g.is_zero())
    if gens:
        nv = gens[0].nvars
        if any(g.nvars != nv for g in gens):
            raise ValueError("generators live in different polynomial rings")
        if nvars is not None and nvars != nv:
            raise ValueError("declared nvars disagrees with the generators")
        nvars = nv
    elif nvars is None:
        raise ValueError("the zero ideal needs an explicit variable count")
    return Ideal(gens, nvars)


# ---------------------------------------------------------------------------
# exponent helpers (tuples of ints)


def _e_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _e_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _e_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _e_divides(a: Exponent, b: Exponent) -> bool:
    """a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _e_coprime(a: Exponent, b: Exponent) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


# ---------------------------------------------------------------------------
# engine: reducers and the Mora loop work on plain {exponent: Fraction} dicts


class _Reducer:
    __slots__ = ("terms", "lm", "lc", "ecart", "neg_lm_key", "gen_index", "u", "q")

    def __init__(self, terms, lm, lc, ecart, neg_lm_key, gen_index, u=None, q=None):
        self.terms = terms
        self.lm = lm
        self.lc = lc
        self.ecart = ecart
        self.neg_lm_key = neg_lm_key
        self.gen_index = gen_index
        self.u = u  # unit snapshot for intermediate reducers
        self.q = q  # quotient snapshots for intermediate reducers


def _dict_degree(terms: dict, order: MonomialOrder) -> int:
    return max(order.degree(e) for e in terms)


def _lead(terms: dict, order: MonomialOrder) -> Exponent:
    return max(terms, key=order.sort_key)


def _make_reducer(terms: dict, order: MonomialOrder, gen_index: int, u=None, q=None) -> _Reducer:
    lm = _lead(terms, order)
    key = order.sort_key(lm)
    ecart = _dict_degree(terms, order) - order.degree(lm)
    return _Reducer(terms, lm, terms[lm], ecart, tuple(-k for k in key), gen_index, u, q)


def _submul(
    target: dict,
    source: dict,
    coeff: Fraction,
    shift: Exponent,
    heap=None,
    order=None,
    cut_key=None,
):
    """target -= coeff * x^shift * source, pushing newly created exponents.

    Terms strictly below ``cut_key`` (the highest-corner bound) are dropped;
    such monomials are already known to lie in the ideal.
    """
    shifted = any(shift)
    for e, a in source.items():
        ne = _e_add(e, shift) if shifted else e
        v = target.get(ne)
        if v is None:
            if cut_key is not None and order.sort_key(ne) < cut_key:
                continue
            target[ne] = -coeff * a
            if heap is not None:
                heapq.heappush(heap, (tuple(-k for k in order.sort_key(ne)), ne))
        else:
            v = v - coeff * a
            if v:
                target[ne] = v
            else:
                del target[ne]


def _scale_primitive(terms: dict) -> dict:
    """Rescale by a rational unit so coefficients are coprime integers."""
    if not terms:
        return terms
    den = 1
    for c in terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in terms.values():
        num = gcd(num, c.numerator * (den // c.denominator))
    if num == 0:
        return terms
    scale = Fraction(den, num)
    if scale == 1:
        return terms
    return {e: c * scale for e, c in terms.items()}


def _weak_nf(
    h: dict,
    reducers: list[_Reducer],
    order: MonomialOrder,
    *,
    track: bool,
    ngens: int,
    allow_scaling: bool = False,
    cut_key=None,
):
    """Mora weak normal form of h against the reducer list.

    Returns (h, u, q) with u * p = sum q_i * g_i + h when track is set
    (u, q are None otherwise).  The reducer list is mutated: intermediate
    remainders may be appended, per Mora's ecart rule.  The leading monomial
    of the returned h is divisible by no reducer leading monomial.
    ``cut_key`` enables highest-corner truncation (untracked use only).
    """
    if cut_key is not None:
        h = {e: c for e, c in h.items() if order.sort_key(e) >= cut_key}
    nvars = None
    u = None
    q = None
    if track:
        for r in reducers:
            nvars = len(r.lm)
            break
        if nvars is None and h:
            nvars = len(next(iter(h)))
        u = {(0,) * nvars: _ONE} if nvars is not None else {}
        q = [{} for _ in range(ngens)]
    heap = [(tuple(-k for k in order.sort_key(e)), e) for e in h]
    heapq.heapify(heap)
    steps = 0
    while True:
        lead = None
        while heap:
            _, e = heap[0]
            if e in h:
                lead = e
                break
            heapq.heappop(heap)
        if lead is None:
            break  # h is zero
        best = None
        for idx, red in enumerate(reducers):
            if _e_divides(red.lm, lead):
                rank = (red.ecart, red.neg_lm_key, idx)
                if best is None or rank < best[0]:
                    best = (rank, red)
        if best is None:
            break  # leading monomial irreducible
        red = best[1]
        h_ecart = _dict_degree(h, order) - order.degree(lead)
        if red.ecart > h_ecart:
            # record the current remainder as a reducer (this is what makes
            # the division terminate and introduces the unit)
            snapshot_u = dict(u) if track else None
            snapshot_q = [dict(qi) for qi in q] if track else None
            reducers.append(_make_reducer(dict(h), order, -1, snapshot_u, snapshot_q))
        coeff = h[lead] / red.lc
        shift = _e_sub(lead, red.lm)
        _submul(h, red.terms, coeff, shift, heap, order, cut_key)
        if track:
            if red.gen_index >= 0:
                qi = q[red.gen_index]
                v = qi.get(shift)
                v = coeff if v is None else v + coeff
                if v:
                    qi[shift] = v
                elif shift in qi:
                    del qi[shift]
            else:
                _submul(u, red.u, coeff, shift)
                for j in range(ngens):
                    if red.q[j]:
                        _submul(q[j], red.q[j], coeff, shift)
        steps += 1
        if allow_scaling and steps % 32 == 0:
            h = _scale_primitive(h)
    return h, u, q


def _mul_dict(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = _e_add(e1, e2)
            v = out.get(e)
            v = c1 * c2 if v is None else v + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def _add_dict(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        v = c if v is None else v + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


# ---------------------------------------------------------------------------
# public division interface


@dataclass(frozen=True)
class MoraResult:
    """Weak normal form u * p = sum quotients_i * g_i + remainder."""

    remainder: Polynomial
    unit: Polynomial
    quotients: tuple[Polynomial, ...]


def mora_division(
    p: Polynomial,
    generators: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    *,
    tail_reduce: bool = True,
    max_tail_rounds: int = 64,
) -> MoraResult:
    """Divide p by the generator list with full quotient tracking.

    The identity ``unit * p == sum(q_i * g_i) + remainder`` holds exactly
    and ``unit(0) == 1``.  The leading monomial of the remainder is never
    divisible by a generator leading monomial; with ``tail_reduce`` the
    lower monomials are cleaned as well, which always succeeds when the
    staircase of the generator leads is finite (the zero-dimensional case).
    For non-finite staircases full tail reduction can be unattainable over
    polynomials, in which case the weak normal form is returned after a
    bounded number of improvement rounds.
    """
    order = order or ANTIGRADED
    nvars = p.nvars
    gens = list(generators)
    for g in gens:
        if g.nvars != nvars:
            raise ValueError("generators live in a different ring than p")
    ngens = len(gens)
    live = [(i, dict(g.terms)) for i, g in enumerate(gens) if g.terms]

    def fresh_reducers():
        return [_make_reducer(dict(t), order, i) for i, t in live]

    h, u, q = _weak_nf(dict(p.terms), fresh_reducers(), order, track=True, ngens=ngens)

    if tail_reduce and h and live:
        lead_exps = [r.lm for r in fresh_reducers()]
        seen: set[frozenset] = set()
        for _ in range(max_tail_rounds):
            reducible = {e: c for e, c in h.items() if any(_e_divides(lm, e) for lm in lead_exps)}
            if not reducible:
                break
            state = frozenset(h.items())
            if state in seen:
                break  # no further progress possible over polynomials
            seen.add(state)
            irreducible = {e: c for e, c in h.items() if e not in reducible}
            h2, u2, q2 = _weak_nf(reducible, fresh_reducers(), order, track=True, ngens=ngens)
            # multiply the running identity by the new unit u2
            u = _mul_dict(u2, u)
            q = [_add_dict(_mul_dict(u2, q[j]), q2[j]) for j in range(ngens)]
            h = _add_dict(_mul_dict(u2, irreducible), h2)

    return MoraResult(
        remainder=Polynomial._make(nvars, h),
        unit=Polynomial._make(nvars, u),
        quotients=tuple(Polynomial._make(nvars, qj) for qj in q),
    )


def local_normal_form(
    p: Polynomial,
    generators: Sequence[Polynomial],
    order: MonomialOrder | None = None,
) -> tuple[Polynomial, Polynomial]:
    """Normal form of p against G in the local ring.

    Returns ``(remainder, unit)`` with ``unit * p - remainder`` in the ideal
    generated by G and ``unit(0) != 0``.
    """
    result = mora_division(p, generators, order)
    return result.remainder, result.unit


# ---------------------------------------------------------------------------
# standard bases


@dataclass(frozen=True)
class StandardBasis:
    basis: tuple[Polynomial, ...]
    order: MonomialOrder
    lead_exponents: tuple[Exponent, ...]


def _spoly(f: _Reducer, g: _Reducer) -> dict:
    """Integer-scaled S-polynomial lc(g) x^(L-lm f) f - lc(f) x^(L-lm g) g."""
    lcm = _e_lcm(f.lm, g.lm)
    out: dict = {}
    sf = _e_sub(lcm, f.lm)
    sg = _e_sub(lcm, g.lm)
    cf = g.lc
    cg = f.lc
    for e, a in f.terms.items():
        ne = _e_add(e, sf)
        out[ne] = a * cf
    for e, a in g.terms.items():
        ne = _e_add(e, sg)
        v = out.get(ne)
        v = -a * cg if v is None else v - a * cg
        if v:
            out[ne] = v
        elif ne in out:
            del out[ne]
    return out


def _gm_update(G: list[_Reducer], pairs: list, new_index: int, order: MonomialOrder):
    """Gebauer-Moeller pair update: apply the chain and product criteria."""
    new = G[new_index]
    fresh = []
    for i in range(new_index):
        fresh.append((i, _e_lcm(G[i].lm, new.lm), _e_coprime(G[i].lm, new.lm)))
    kept: list[tuple[int, Exponent, bool]] = []
    for pos, (i, l, cop) in enumerate(fresh):
        if not cop:
            dominated = any(
                _e_divides(l2, l) and l2 != l for (_, l2, _) in fresh[pos + 1 :]
            ) or any(_e_divides(l2, l) for (_, l2, _) in kept)
            if dominated:
                continue
        kept.append((i, l, cop))
    surviving = []
    for (i, j, l) in pairs:
        if (
            _e_divides(new.lm, l)
            and _e_lcm(G[i].lm, new.lm) != l
            and _e_lcm(G[j].lm, new.lm) != l
        ):
            continue  # chain criterion: the new element covers this pair
        surviving.append((i, j, l))
    pairs[:] = surviving
    for (i, l, cop) in kept:
        if not cop:  # product criterion drops coprime pairs outright
            pairs.append((i, new_index, l))


def _highest_corner_key(leads: Sequence[Exponent], nvars: int, order: MonomialOrder):
    """Sort key of the smallest staircase monomial, or None if the staircase
    is infinite.  Every monomial strictly below it lies in the ideal of any
    generating set with these leading monomials, so reductions may discard
    such terms (the classical highest-corner truncation for local orders).
    """
    if not order.is_local or not leads:
        return None
    mins = _minimal_exponents(leads)
    if any(not any(e) for e in mins):
        return order.sort_key((0,) * nvars)  # unit ideal: everything below 1 drops
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in mins if e[i] > 0 and sum(e) == e[i]]
        if not pure:
            return None
        bounds.append(min(pure))
    best = None
    point = [0] * nvars

    def walk(i: int, cands: list[Exponent]):
        nonlocal best
        if not cands:
            # the whole remaining box is standard; its minimum-key point has
            # the maximal exponents
            probe = tuple(point[:i]) + tuple(b - 1 for b in bounds[i:])
            key = order.sort_key(probe)
            if best is None or key < best:
                best = key
            return
        if i == nvars:
            return  # dominated by some lead
        for a in range(bounds[i]):
            point[i] = a
            walk(i + 1, [e for e in cands if e[i] <= a])
        point[i] = 0

    walk(0, mins)
    return best


# The completion itself runs on homogenized data (Lazard's method): local
# generators gain a slot-0 homogenizing variable t so that every term has
# the same order-degree, and the global order "degree first, then the local
# order on the x part" makes ordinary Buchberger division terminate without
# Mora's ecart bookkeeping.  New elements are saturated (powers of t
# stripped, then re-reduced); dehomogenizing the finished Groebner basis at
# t = 1 yields a standard basis of the local ideal.


class _HomEngine:
    def __init__(self, order: MonomialOrder, nvars: int):
        self.order = order
        self.nvars = nvars
        self.local = order.is_local
        self._keys: dict[Exponent, tuple] = {}

    def key(self, e: Exponent) -> tuple:
        k = self._keys.get(e)
        if k is None:
            if self.local:
                x = e[1:]
                k = (e[0] + self.order.degree(x), *self.order.sort_key(x), -e[0])
            else:
                k = self.order.sort_key(e)
            self._keys[e] = k
        return k

    def homogenize(self, p: Polynomial) -> dict:
        if not self.local:
            return dict(p.terms)
        deg = self.order.degree
        top = max(deg(e) for e in p.terms)
        return {(top - deg(e), *e): c for e, c in p.terms.items()}

    def dehomogenize(self, terms: dict) -> dict:
        if not self.local:
            return dict(terms)
        return {e[1:]: c for e, c in terms.items()}

    def strip_t(self, terms: dict) -> dict:
        if not self.local:
            return terms
        k = min(e[0] for e in terms)
        if not k:
            return terms
        return {(e[0] - k, *e[1:]): c for e, c in terms.items()}

    def truncate(self, terms: dict, cut_key) -> dict:
        if cut_key is None:
            return terms
        srt = self.order.sort_key
        if self.local:
            return {e: c for e, c in terms.items() if srt(e[1:]) >= cut_key}
        return terms

    def lead(self, terms: dict) -> Exponent:
        return max(terms, key=self.key)


class _HomElement:
    __slots__ = ("terms", "lm", "lc", "xlm")

    def __init__(self, terms: dict, lm: Exponent, local: bool):
        self.terms = terms
        self.lm = lm
        self.lc = terms[lm]
        self.xlm = lm[1:] if local else lm


def _ordinary_nf(h: dict, basis: list[_HomElement], eng: _HomEngine, cut_key) -> dict:
    """Ordinary division, leads strictly decreasing in a well order."""
    key = eng.key
    srt = eng.order.sort_key if eng.local else None
    heap = [(tuple(-k for k in key(e)), e) for e in h]
    heapq.heapify(heap)
    steps = 0
    while True:
        lead = None
        while heap:
            _, e = heap[0]
            if e in h:
                lead = e
                break
            heapq.heappop(heap)
        if lead is None:
            return h
        red = None
        for cand in basis:
            if _e_divides(cand.lm, lead):
                red = cand
                break
        if red is None:
            return h
        coeff = h[lead] / red.lc
        shift = _e_sub(lead, red.lm)
        shifted = any(shift)
        for e, a in red.terms.items():
            ne = _e_add(e, shift) if shifted else e
            v = h.get(ne)
            if v is None:
                if cut_key is not None and srt(ne[1:]) < cut_key:
                    continue
                h[ne] = -coeff * a
                heapq.heappush(heap, (tuple(-k for k in key(ne)), ne))
            else:
                v = v - coeff * a
                if v:
                    h[ne] = v
                else:
                    del h[ne]
        steps += 1
        if steps % 64 == 0:
            h = _scale_primitive(h)
            heap = [entry for entry in heap if entry[1] in h]
            heapq.heapify(heap)


def _standard_basis_engine(gens: Sequence[Polynomial], order: MonomialOrder) -> list[dict]:
    nvars = gens[0].nvars
    eng = _HomEngine(order, nvars)
    G: list[_HomElement] = []
    pairs: list = []
    cut_key = None

    def refresh_cut():
        nonlocal cut_key
        ck = _highest_corner_key([g.xlm for g in G], nvars, order)
        if ck is not None and (cut_key is None or ck > cut_key):
            cut_key = ck

    def complete(h: dict):
        """Reduce, strip t powers, repeat; return a finished element or None."""
        while True:
            h = _ordinary_nf(h, G, eng, cut_key)
            if not h:
                return None
            if eng.local:
                stripped = eng.strip_t(h)
                if stripped is not h:
                    h = eng.truncate(stripped, cut_key)
                    continue
            return _scale_primitive(h)

    def insert(terms: dict) -> None:
        G.append(_HomElement(terms, eng.lead(terms), eng.local))
        _gm_update(G, pairs, len(G) - 1, eng)
        refresh_cut()

    for g in gens:
        h = complete(eng.truncate(eng.homogenize(g), cut_key))
        if h:
            insert(h)
    while pairs:
        best_pos = 0
        best_key = None
        for pos, (i, j, l) in enumerate(pairs):
            k = (eng.key(l), i, j)
            if best_key is None or k < best_key:
                best_key = k
                best_pos = pos
        i, j, _ = pairs.pop(best_pos)
        s = _spoly(G[i], G[j])
        s = eng.truncate(s, cut_key)
        if not s:
            continue
        h = complete(s)
        if h:
            insert(h)
    # dehomogenize and minimalize: drop leads divisible by another kept lead
    by_lead: dict[Exponent, dict] = {}
    for g in G:
        x = g.xlm
        if x not in by_lead:
            by_lead[x] = eng.dehomogenize(g.terms)
    kept: list[Exponent] = []
    for x in sorted(by_lead, key=order.sort_key, reverse=True):
        if any(_e_divides(m, x) for m in kept):
            continue
        kept.append(x)
    return [by_lead[x] for x in kept]


@lru_cache(maxsize=512)
def _standard_basis_cached(I: Ideal, order: MonomialOrder) -> StandardBasis:
    if not I.generators:
        return StandardBasis((), order, ())
    raw = _standard_basis_engine(I.generators, order)
    polys = []
    for terms in raw:
        lc = terms[_lead(terms, order)]
        if lc < 0:
            terms = {e: -c for e, c in terms.items()}
        polys.append(Polynomial._make(I.nvars, terms))
    polys.sort(key=lambda p: order.sort_key(_lead(p.terms, order)), reverse=True)
    leads = tuple(_lead(p.terms, order) for p in polys)
    return StandardBasis(tuple(polys), order, leads)


def standard_basis(I: Ideal, order: MonomialOrder | None = None) -> StandardBasis:
    """Standard basis of I under a local order (Groebner basis if global).

    The leading monomials of the result generate the leading ideal of I, so
    ``local_normal_form(p, basis) == 0`` is a sound and complete membership
    test.  Results are cached per (ideal, order).
    """
    return _standard_basis_cached(I, order or ANTIGRADED)


def clear_caches() -> None:
    _standard_basis_cached.cache_clear()


# ---------------------------------------------------------------------------
# staircase counting


def _minimal_exponents(exps: Sequence[Exponent]) -> list[Exponent]:
    out: list[Exponent] = []
    for e in sorted(set(exps), key=sum):
        if not any(_e_divides(m, e) for m in out):
            out.append(e)
    return out


def staircase_count(lead_exponents: Sequence[Exponent], nvars: int):
    """Number of monomials outside the staircase of the given leads.

    Returns INFINITE when some variable has no pure power among the leads.
    """
    if not lead_exponents:
        return INFINITE
    leads = _minimal_exponents(lead_exponents)
    if any(not any(e) for e in leads):
        return 0  # the constant monomial leads: unit ideal
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in leads if e[i] > 0 and sum(e) == e[i]]
        if not pure:
            return INFINITE
        bounds.append(min(pure))

    def count(i: int, cands: list[Exponent]) -> int:
        if not cands:
            return prod(bounds[i:])
        if i == nvars:
            return 0  # some lead divides this point
        total = 0
        for a in range(bounds[i]):
            total += count(i + 1, [e for e in cands if e[i] <= a])
        return total

    return count(0, leads)


def staircase_count_bruteforce(lead_exponents: Sequence[Exponent], nvars: int):
    """Independent staircase count by direct enumeration of the whole box."""
    if not lead_exponents:
        return INFINITE
    leads = _minimal_exponents(lead_exponents)
    if any(not any(e) for e in leads):
        return 0
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in leads if e[i] > 0 and sum(e) == e[i]]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    from itertools import product as iproduct

    total = 0
    for point in iproduct(*(range(b) for b in bounds)):
        if not any(_e_divides(e, point) for e in leads):
            total += 1
    return total


def quotient_dimension(I: Ideal, order: MonomialOrder | None = None):
    """dim_C of the local ring modulo I: the staircase count of a standard
    basis, INFINITE exactly when some variable direction is unbounded."""
    order = order or ANTIGRADED
    if not I.generators:
        return INFINITE
    if order.is_local and any(g.constant_term() for g in I.generators):
        return 0  # a unit among the generators
    sb = standard_basis(I, order)
    return staircase_count(sb.lead_exponents, I.nvars)


def ideal_membership(p: Polynomial, I: Ideal, order: MonomialOrder | None = None) -> bool:
    """Exact membership of p in I inside the local ring."""
    if p.is_zero():
        return True
    if not I.generators:
        return False
    order = order or ANTIGRADED
    sb = standard_basis(I, order)
    h, _, _ = _weak_nf(
        dict(p.terms),
        [_make_reducer(dict(g.terms), order, i) for i, g in enumerate(sb.basis)],
        order,
        track=False,
        ngens=0,
        allow_scaling=True,
    )
    return not h
