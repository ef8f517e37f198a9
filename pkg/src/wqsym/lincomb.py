"""Sparse linear combinations over Q with arbitrary basis keys.

Every algebra element in this package is a finite linear combination of
basis keys with nonzero exact rational coefficients.  Basis keys are
tuples: signed words/permutations are tuples of nonzero ints, regularized
compositions are tuples of ints and the ``EPS`` marker, and tensors use
pairs of keys.  Coefficients stay plain ``int`` while they can and become
``fractions.Fraction`` as soon as a non-integer scalar enters; the two mix
freely and compare equal where they should.

No stored coefficient is ever zero, so equality of combinations is plain
equality of the underlying term dicts.
"""
from __future__ import annotations

from fractions import Fraction


def elem_key(x):
    """Sort value of a single key entry: integers as themselves, the
    epsilon part strictly between 0 and 1 (the monoid order 0 < e < 1)."""
    return x if isinstance(x, int) else Fraction(1, 2)


def basis_sort_key(key):
    """Canonical total order on basis keys: length first, then entrywise.

    Pairs of tuples (tensor keys) are ordered lexicographically by the
    orders of their legs.
    """
    if isinstance(key, tuple):
        if key and isinstance(key[0], tuple):
            return tuple(basis_sort_key(k) for k in key)
        return (len(key), tuple(elem_key(x) for x in key))
    return key


class LinComb:
    """A finite map basis key -> nonzero rational, behaving as a vector.

    Instances are treated as immutable: no operation mutates ``terms`` of
    an existing combination, so sharing (e.g. from caches) is safe.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for key, coeff in items:
            acc[key] = acc.get(key, 0) + coeff
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def wrap(cls, clean_terms):
        """Adopt a dict that is already free of zero coefficients."""
        obj = object.__new__(cls)
        obj.terms = clean_terms
        return obj

    @classmethod
    def zero(cls):
        return cls.wrap({})

    @classmethod
    def single(cls, key, coeff=1):
        return cls.wrap({key: coeff}) if coeff else cls.wrap({})

    def items(self):
        """Terms in the canonical key order."""
        return sorted(self.terms.items(), key=lambda kv: basis_sort_key(kv[0]))

    def coeff(self, key):
        return self.terms.get(key, 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            c = out.get(key, 0) + coeff
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        return LinComb.wrap(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            c = out.get(key, 0) - coeff
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        return LinComb.wrap(out)

    def __neg__(self):
        return LinComb.wrap({k: -c for k, c in self.terms.items()})

    def scale(self, scalar):
        if not scalar:
            return LinComb.wrap({})
        return LinComb.wrap({k: c * scalar for k, c in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def map_basis(self, f):
        """Linear extension of a basis map f: key -> LinComb."""
        out = {}
        for key, coeff in self.terms.items():
            for k2, c2 in f(key).terms.items():
                c = out.get(k2, 0) + coeff * c2
                if c:
                    out[k2] = c
                elif k2 in out:
                    del out[k2]
        return LinComb.wrap(out)

    def __repr__(self):
        if not self.terms:
            return "LinComb(0)"
        bits = " + ".join(f"{c}*{k}" for k, c in self.items())
        return f"LinComb({bits})"


def lc_mul(a, b, mult):
    """Bilinear extension of a basis product mult: (key, key) -> LinComb."""
    out = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            scalar = ca * cb
            for k, c in mult(ka, kb).terms.items():
                cc = out.get(k, 0) + scalar * c
                if cc:
                    out[k] = cc
                elif k in out:
                    del out[k]
    return LinComb.wrap(out)


def tensor(a, b):
    """Outer product of two combinations: keys become pairs."""
    out = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            out[(ka, kb)] = ca * cb
    return LinComb.wrap(out)


def tensor_bilinear(a, b, mult):
    """Componentwise product of tensors: (x@y)(u@v) = (xu)@(yv)."""
    out = {}
    for (xa, ya), ca in a.terms.items():
        for (xb, yb), cb in b.terms.items():
            scalar = ca * cb
            left = mult(xa, xb)
            right = mult(ya, yb)
            for kl, cl in left.terms.items():
                for kr, cr in right.terms.items():
                    key = (kl, kr)
                    c = out.get(key, 0) + scalar * cl * cr
                    if c:
                        out[key] = c
                    elif key in out:
                        del out[key]
    return LinComb.wrap(out)


def tensor_bimap(t, f, g):
    """Apply basis maps to both tensor legs: sum c * f(a) @ g(b)."""
    out = LinComb.zero()
    for (ka, kb), c in t.terms.items():
        out = out + tensor(f(ka), g(kb)).scale(c)
    return out


def format_coeff(c):
    """Rational to text, '1/1' collapsing to '1'."""
    return str(Fraction(c))


def parse_coeff(text):
    return Fraction(text)


def lincomb_to_json(lc, encode_key):
    """JSON form {"terms": [{"coeff": ..., "key": ...}, ...]}, keys in
    canonical order."""
    return {
        "terms": [
            {"coeff": format_coeff(c), "key": encode_key(k)} for k, c in lc.items()
        ]
    }


def lincomb_from_json(obj, decode_key):
    return LinComb(
        (decode_key(t["key"]), parse_coeff(t["coeff"])) for t in obj["terms"]
    )


def lincomb_to_text(lc, render_key):
    """Human form like '2*F[1,e,1,e] - 1*F[2,e]'."""
    if not lc.terms:
        return "0"
    parts = []
    for k, c in lc.items():
        mag = format_coeff(abs(c))
        term = f"{mag}*{render_key(k)}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)
