"""Signed labeled posets, signed P-partitions, and generating functions.

A signed labeled poset carries distinct nonzero integer labels with
distinct absolute values.  A signed P-partition is a map f from the
labels to {1..k} that weakly increases along the order and strictly
increases across a relation i < j in the poset whenever the integer label
i exceeds max(0, j); it suffices to impose both conditions on covering
pairs.

The generating function Gamma(P) sums, over all P-partitions, the
monomial with exponent 1 on x_{f(i)} for positive labels i and exponent
epsilon for negative ones.  Generating functions live in a polynomial
ring truncated to k variables whose exponents add in the monoid
{0, e, 1, 2, ...}; truncation at k at least the combined total weight of
the identities under test keeps them faithful.
"""
from __future__ import annotations

import itertools
import random

from .lincomb import elem_key, format_coeff, parse_coeff
from .compositions import EPS, descent_set, eps_runs, ntilde_add, wcomp
from .hopf import LawReport
from .words import (
    perm_to_text,
    shifted_quasi_shuffle,
    signed_permutations,
    standardize,
)


class Poset:
    """Finite poset on signed integer labels, given by covering pairs.

    ``covers`` holds pairs (a, b) meaning a < b is a covering relation.
    Labels must be nonzero with pairwise distinct absolute values; the
    cover graph must be acyclic.  Extra non-covering edges are harmless
    for partitions and extensions, so inputs need not be Hasse-reduced.
    """

    __slots__ = ("labels", "covers", "_above", "_below")

    def __init__(self, labels, covers=()):
        labels = tuple(sorted(labels, key=abs))
        covers = tuple(sorted(covers))
        seen = set()
        for a in labels:
            if a == 0:
                raise ValueError("labels must be nonzero")
            if abs(a) in seen:
                raise ValueError(f"duplicate absolute label {abs(a)}")
            seen.add(abs(a))
        label_set = set(labels)
        for a, b in covers:
            if a not in label_set or b not in label_set:
                raise ValueError(f"cover ({a}, {b}) uses unknown labels")
        self.labels = labels
        self.covers = covers
        above = {a: [] for a in labels}
        below = {a: [] for a in labels}
        for a, b in covers:
            above[a].append(b)
            below[b].append(a)
        self._above = above
        self._below = below
        self._check_acyclic()

    def _check_acyclic(self):
        state = {a: 0 for a in self.labels}

        def visit(a):
            state[a] = 1
            for b in self._above[a]:
                if state[b] == 1:
                    raise ValueError("cover relation contains a cycle")
                if state[b] == 0:
                    visit(b)
            state[a] = 2

        for a in self.labels:
            if state[a] == 0:
                visit(a)

    def __len__(self):
        return len(self.labels)

    def standardize(self):
        """The isomorphic poset on standard labels, and the relabeling."""
        word = standardize(self.labels)
        relabel = dict(zip(self.labels, word))
        poset = Poset(word, [(relabel[a], relabel[b]) for a, b in self.covers])
        return poset, relabel

    def linear_extensions(self):
        """All linear extensions of the standardized poset, as signed
        permutations read from smallest to largest."""
        st, _ = self.standardize()
        order = []
        out = []
        indeg = {a: len(st._below[a]) for a in st.labels}

        def rec():
            ready = sorted((a for a in st.labels if indeg[a] == 0 and a not in placed),
                           key=abs)
            if not ready:
                if len(order) == len(st.labels):
                    out.append(tuple(order))
                return
            for a in ready:
                placed.add(a)
                order.append(a)
                for b in st._above[a]:
                    indeg[b] -= 1
                rec()
                for b in st._above[a]:
                    indeg[b] += 1
                order.pop()
                placed.discard(a)

        placed = set()
        rec()
        return out

    def disjoint_union(self, other):
        labels = self.labels + other.labels
        return Poset(labels, self.covers + other.covers)

    def __repr__(self):
        return f"Poset({self.labels}, covers={self.covers})"


def chain_poset(word):
    """The total order a_1 < a_2 < ... < a_n read off a signed word."""
    return Poset(word, [(word[i], word[i + 1]) for i in range(len(word) - 1)])


def parse_poset(text):
    """Poset file format: one 'a < b' cover per line, lone labels on
    their own line; blank lines and '#' comments ignored."""
    labels = set()
    covers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "<" in line:
            bits = line.split("<")
            if len(bits) != 2:
                raise ValueError(f"line {lineno}: expected 'a < b'")
            try:
                a, b = int(bits[0]), int(bits[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad labels in {line!r}") from None
            labels.add(a)
            labels.add(b)
            covers.append((a, b))
        else:
            try:
                labels.add(int(line))
            except ValueError:
                raise ValueError(f"line {lineno}: bad label {line!r}") from None
    return Poset(sorted(labels, key=abs), covers)


def enumerate_ppartitions(poset, k):
    """All maps labels -> [k] weakly increasing along covers, strict when
    the lower label exceeds max(0, upper label)."""
    if k < 1:
        raise ValueError("need at least one value")
    # topological order: repeatedly take minimal elements
    order = []
    indeg = {a: len(poset._below[a]) for a in poset.labels}
    ready = sorted((a for a in poset.labels if indeg[a] == 0), key=abs)
    while ready:
        a = ready.pop(0)
        order.append(a)
        for b in poset._above[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
        ready.sort(key=abs)
    out = []
    assign = {}

    def rec(pos):
        if pos == len(order):
            out.append(dict(assign))
            return
        el = order[pos]
        lo = 1
        for a in poset._below[el]:
            bound = assign[a]
            if a > max(0, el):
                bound += 1
            if bound > lo:
                lo = bound
        for value in range(lo, k + 1):
            assign[el] = value
            rec(pos + 1)
        assign.pop(el, None)

    rec(0)
    return out


class Series:
    """Polynomial in x_1..x_k with exponents in {0, e, 1, 2, ...}.

    Terms map exponent tuples (length k) to rational coefficients;
    multiplication adds exponents in the monoid, so x^e * x^e = x^e and
    x^e * x^n = x^n.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=()):
        self.k = k
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for exps, coeff in items:
            acc[exps] = acc.get(exps, 0) + coeff
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def zero(cls, k):
        return cls(k)

    @classmethod
    def one(cls, k):
        return cls(k, {(0,) * k: 1})

    @classmethod
    def monomial(cls, k, assignment):
        """Product of x_{value}^{1 or e} over (sign, value) pairs: value
        in [k], exponent e when the carried label is negative."""
        exps = [0] * k
        for label, value in assignment:
            exp = 1 if label > 0 else EPS
            exps[value - 1] = ntilde_add(exps[value - 1], exp)
        return cls(k, {tuple(exps): 1})

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        assert self.k == other.k
        out = dict(self.terms)
        for e, c in other.terms.items():
            cc = out.get(e, 0) + c
            if cc:
                out[e] = cc
            elif e in out:
                del out[e]
        return Series(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        if not scalar:
            return Series(self.k)
        return Series(self.k, {e: c * scalar for e, c in self.terms.items()})

    __rmul__ = scale

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        assert self.k == other.k
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                merged = tuple(ntilde_add(a, b) for a, b in zip(e1, e2))
                cc = out.get(merged, 0) + c1 * c2
                if cc:
                    out[merged] = cc
                elif merged in out:
                    del out[merged]
        return Series(self.k, out)

    def restrict(self, k2):
        """Drop every term that uses a variable above x_{k2}."""
        assert k2 <= self.k
        out = {}
        for e, c in self.terms.items():
            if all(x == 0 for x in e[k2:]):
                out[e[:k2]] = c
        return Series(k2, out)

    def items(self):
        return sorted(
            self.terms.items(), key=lambda ec: tuple(elem_key(x) for x in ec[0])
        )

    def to_json(self):
        return {
            "k": self.k,
            "terms": [
                {
                    "coeff": format_coeff(c),
                    "exps": ["e" if x is EPS else str(x) for x in e],
                }
                for e, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        terms = []
        for t in obj["terms"]:
            exps = tuple(EPS if s == "e" else int(s) for s in t["exps"])
            terms.append((exps, parse_coeff(t["coeff"])))
        return cls(obj["k"], terms)

    def to_text(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.items():
            factors = [
                f"x{i + 1}" if x == 1 else f"x{i + 1}^{x!r}" if x is EPS else f"x{i + 1}^{x}"
                for i, x in enumerate(e)
                if x != 0
            ]
            mono = "*".join(factors) if factors else "1"
            bits.append(f"{format_coeff(c)}*{mono}")
        return " + ".join(bits)

    def __repr__(self):
        return f"Series(k={self.k}, {self.to_text()})"


def gamma(poset, k):
    """Generating function of signed P-partitions, truncated to k
    variables."""
    out = Series.zero(k)
    for f in enumerate_ppartitions(poset, k):
        out = out + Series.monomial(k, f.items())
    return out


def gamma_word(word, k):
    return gamma(chain_poset(word), k)


def gamma_combo(lc, k):
    """Linear extension of gamma to combinations of signed permutations."""
    out = Series.zero(k)
    for word, coeff in lc.terms.items():
        out = out + gamma_word(word, k).scale(coeff)
    return out


def expand_m(alpha, k):
    """Monomial weak quasi-symmetric function truncated to k variables:
    sum over strictly increasing variable tuples."""
    ell = len(alpha)
    out = {}
    for vars_ in itertools.combinations(range(k), ell):
        exps = [0] * k
        for v, part in zip(vars_, alpha):
            exps[v] = part
        key = tuple(exps)
        out[key] = out.get(key, 0) + 1
    return Series(k, out)


def expand_f(alpha, k):
    """Fundamental weak quasi-symmetric function truncated to k
    variables.

    Sums over weakly increasing tuples j_1 <= ... <= j_n, n the total
    weight, with strict steps exactly at the descent set; position t
    contributes exponent e inside an epsilon run and 1 inside a positive
    part.
    """
    runs, parts = eps_runs(alpha)
    pattern = []
    for q, s in enumerate(parts):
        pattern.extend([EPS] * runs[q])
        pattern.extend([1] * s)
    pattern.extend([EPS] * runs[-1])
    n = len(pattern)
    strict = descent_set(alpha)
    out = {}
    exps = [0] * k

    def rec(t, j):
        if t == n:
            key = tuple(exps)
            out[key] = out.get(key, 0) + 1
            return
        lo = j + 1 if (t > 0 and t in strict) else max(j, 1)
        for value in range(lo, k + 1):
            old = exps[value - 1]
            exps[value - 1] = ntilde_add(old, pattern[t])
            rec(t + 1, value)
            exps[value - 1] = old

    rec(0, 0)
    return Series(k, out)


# ---------------------------------------------------------------------------
# randomized posets and the generating-function verification suite


def _shard_iter(items, shard):
    idx, count = shard
    for i, item in enumerate(items):
        if i % count == idx:
            yield item


def random_poset(rng, max_size, label_pool=9):
    """Random signed labeled poset: distinct absolute labels with random
    signs, covers drawn forward along a shuffled order."""
    n = rng.randint(0, max_size)
    absolutes = rng.sample(range(1, label_pool + 1), n)
    labels = [a if rng.random() < 0.5 else -a for a in absolutes]
    order = labels[:]
    rng.shuffle(order)
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                covers.append((order[i], order[j]))
    return Poset(labels, covers)


def _assignments_as_set(partitions):
    return {frozenset(f.items()) for f in partitions}


def verify_gamma_identities(max_len=3, k=6, pair_len=4, pair_k=8,
                            random_cases=50, random_k=4, seed=20240601,
                            shard=(0, 1)):
    """The generating-function identities, checked as truncated series.

    * Gamma(pi) equals the fundamental function of wcomp(pi) for every
      signed permutation of length <= max_len, at k variables;
    * Gamma is multiplicative for the weight -1 product on pairs of
      combined length <= pair_len, at pair_k variables;
    * Gamma of a disjoint union factors, on random poset pairs;
    * the partitions of a poset are the union of the partitions of its
      linear extensions, on random posets.
    """
    law_fund = LawReport("Gamma(pi) = F_{wcomp(pi)}")
    law_prod = LawReport("Gamma(sigma) Gamma(tau) = Gamma(sigma * tau)")
    law_union = LawReport("Gamma(P u Q) = Gamma(P) Gamma(Q)")
    law_extensions = LawReport("A(P) = union of A(pi) over linear extensions")

    perms = [pi for n in range(max_len + 1) for pi in signed_permutations(n)]
    for pi in _shard_iter(perms, shard):
        lhs = gamma_word(pi, k)
        rhs = expand_f(wcomp(pi), k)
        law_fund.record(lhs == rhs, [perm_to_text(pi)])

    pairs = [
        (s, t)
        for m in range(pair_len + 1)
        for n_ in range(pair_len + 1 - m)
        for s in signed_permutations(m)
        for t in signed_permutations(n_)
    ]
    for s, t in _shard_iter(pairs, shard):
        lhs = gamma_word(s, pair_k) * gamma_word(t, pair_k)
        rhs = gamma_combo(shifted_quasi_shuffle(s, t, -1), pair_k)
        law_prod.record(lhs == rhs, [perm_to_text(s), perm_to_text(t)])

    rng = random.Random(seed)
    union_cases = []
    for _ in range(random_cases):
        p = random_poset(rng, 3, label_pool=4)
        nq = rng.randint(0, 3)
        absolutes = rng.sample(range(5, 9), nq)
        q_labels = [a if rng.random() < 0.5 else -a for a in absolutes]
        order = q_labels[:]
        rng.shuffle(order)
        q_covers = [
            (order[i], order[j])
            for i in range(nq)
            for j in range(i + 1, nq)
            if rng.random() < 0.4
        ]
        union_cases.append((p, Poset(q_labels, q_covers)))
    for p, q in _shard_iter(union_cases, shard):
        lhs = gamma(p.disjoint_union(q), random_k)
        rhs = gamma(p, random_k) * gamma(q, random_k)
        law_union.record(lhs == rhs, [repr(p), repr(q)])

    extension_cases = [random_poset(rng, 4) for _ in range(random_cases)]
    for p in _shard_iter(extension_cases, shard):
        st, _ = p.standardize()
        direct = _assignments_as_set(enumerate_ppartitions(st, random_k))
        union = set()
        for pi in st.linear_extensions():
            union |= _assignments_as_set(
                enumerate_ppartitions(chain_poset(pi), random_k)
            )
        law_extensions.record(direct == union, [repr(p)])

    return [law_fund, law_prod, law_union, law_extensions]
