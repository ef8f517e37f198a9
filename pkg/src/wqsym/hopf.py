"""The Hopf algebras of signed permutations and of (weak) quasi-symmetric
functions, plus a generic axiom checker.

Each algebra is packaged as a ``HopfContext``: basis-level product,
coproduct, counit, degree, antipode, and an exhaustive basis enumerator
per degree.  Degrees are word length on the permutation side and total
weight on the composition side, so every stratum is finite and the
checker can sweep it.

Antipodes come in two flavours.  Closed form for the composition side:

    S(M_a) = (-1)^{len(a)} sum_{J |= len(a)} M_{J[a^r]}.

Generic recursion for the permutation side, valid in any connected
cograded bialgebra: S(unit) = unit and, for x of positive degree,
S(x) = - sum c * S(a) * b over the coproduct terms c * (a @ b) of x with
deg(a) < deg(x).
"""
from __future__ import annotations

from fractions import Fraction

from .lincomb import LinComb, lc_mul, lincomb_to_json, tensor_bilinear
from .compositions import (
    EPS,
    comp_to_text,
    compositions_of,
    j_apply,
    refinement_terms,
    regularized_compositions,
    reversal,
    star_product,
    total_weight,
)
from .words import (
    perm_to_text,
    positive_permutations,
    shifted_quasi_shuffle,
    shifted_shuffle,
    signed_permutations,
    standardize,
)


def hsym_coproduct(sigma):
    """Deconcatenate at every split point and standardize both halves."""
    out = {}
    for p in range(len(sigma) + 1):
        key = (standardize(sigma[:p]), standardize(sigma[p:]))
        out[key] = out.get(key, 0) + 1
    return LinComb.wrap(out)


def hsym_counit(sigma):
    return 1 if sigma == () else 0


def rqsym_product_m(alpha, beta):
    return star_product(alpha, beta)


def rqsym_coproduct_m(alpha):
    out = {}
    for p in range(len(alpha) + 1):
        key = (alpha[:p], alpha[p:])
        out[key] = out.get(key, 0) + 1
    return LinComb.wrap(out)


def rqsym_counit(alpha):
    return 1 if alpha == () else 0


def rqsym_antipode_m(alpha):
    """Closed-form antipode on the monomial basis."""
    ell = len(alpha)
    if ell == 0:
        return LinComb.single(())
    rev = reversal(alpha)
    sign = (-1) ** ell
    out = {}
    for J in compositions_of(ell):
        key = j_apply(J, rev)
        out[key] = out.get(key, 0) + sign
    return LinComb.wrap({k: c for k, c in out.items() if c})


def f_to_m(alpha):
    """Expansion of a fundamental basis key into monomial keys."""
    return LinComb(refinement_terms(alpha))


def m_to_f(alpha):
    """Inverse basis change, with alternating signs by length difference."""
    ell = len(alpha)
    return LinComb(
        (beta, c if (len(beta) - ell) % 2 == 0 else -c)
        for beta, c in refinement_terms(alpha)
    )


_F_TO_M_CACHE = {}
_M_TO_F_CACHE = {}


def f_to_m_cached(alpha):
    lc = _F_TO_M_CACHE.get(alpha)
    if lc is None:
        lc = f_to_m(alpha)
        _F_TO_M_CACHE[alpha] = lc
    return lc


def m_to_f_cached(alpha):
    lc = _M_TO_F_CACHE.get(alpha)
    if lc is None:
        lc = m_to_f(alpha)
        _M_TO_F_CACHE[alpha] = lc
    return lc


def rqsym_product_f(alpha, beta):
    """Product on fundamental keys, computed through the monomial basis."""
    m = lc_mul(f_to_m_cached(alpha), f_to_m_cached(beta), rqsym_product_m)
    return m.map_basis(m_to_f_cached)


def rqsym_coproduct_f(alpha):
    """Deconcatenation splits plus near-concatenation splits (cutting a
    positive part s into s' + s'')."""
    out = {}
    for p in range(len(alpha) + 1):
        key = (alpha[:p], alpha[p:])
        out[key] = out.get(key, 0) + 1
    for p, part in enumerate(alpha):
        if part is EPS:
            continue
        for left in range(1, part):
            key = (alpha[:p] + (left,), (part - left,) + alpha[p + 1 :])
            out[key] = out.get(key, 0) + 1
    return LinComb.wrap(out)


def rqsym_antipode_f(alpha):
    s = f_to_m_cached(alpha).map_basis(rqsym_antipode_m)
    return s.map_basis(m_to_f_cached)


class HopfContext:
    """A Hopf algebra presented on a basis, with finite degree strata."""

    def __init__(self, name, product, coproduct, counit, unit, degree, basis,
                 key_text, antipode=None):
        self.name = name
        self.product = product
        self.coproduct = coproduct
        self.counit = counit
        self.unit = unit
        self.degree = degree
        self.basis = basis
        self.key_text = key_text
        self._closed_antipode = antipode
        self._antipode_memo = {}

    def antipode(self, key):
        if self._closed_antipode is not None:
            return self._closed_antipode(key)
        return self._graded_antipode(key)

    def _graded_antipode(self, key):
        deg = self.degree(key)
        if deg == 0:
            return LinComb.single(key)
        memo = self._antipode_memo
        if key in memo:
            return memo[key]
        out = LinComb.zero()
        for (a, b), c in self.coproduct(key).terms.items():
            da = self.degree(a)
            if da < deg:
                for ka, ca in self._graded_antipode(a).terms.items():
                    out = out + self.product(ka, b).scale(c * ca)
            else:
                # connectedness: the only non-reduced term is key @ unit
                assert a == key and b == self.unit and c == 1, (key, a, b, c)
        out = -out
        memo[key] = out
        return out


def hsym_context(lam):
    lam = Fraction(lam) if not isinstance(lam, int) else lam
    return HopfContext(
        name="hsym",
        product=lambda a, b: shifted_quasi_shuffle(a, b, lam),
        coproduct=hsym_coproduct,
        counit=hsym_counit,
        unit=(),
        degree=len,
        basis=lambda n: list(signed_permutations(n)),
        key_text=perm_to_text,
    )


def ssym_context():
    return HopfContext(
        name="ssym",
        product=shifted_shuffle,
        coproduct=hsym_coproduct,
        counit=hsym_counit,
        unit=(),
        degree=len,
        basis=lambda n: list(positive_permutations(n)),
        key_text=perm_to_text,
    )


def rqsym_m_context():
    return HopfContext(
        name="rqsym-m",
        product=rqsym_product_m,
        coproduct=rqsym_coproduct_m,
        counit=rqsym_counit,
        unit=(),
        degree=total_weight,
        basis=regularized_compositions,
        key_text=comp_to_text,
        antipode=rqsym_antipode_m,
    )


def qsym_m_context():
    return HopfContext(
        name="qsym-m",
        product=rqsym_product_m,
        coproduct=rqsym_coproduct_m,
        counit=rqsym_counit,
        unit=(),
        degree=total_weight,
        basis=compositions_of,
        key_text=comp_to_text,
        antipode=rqsym_antipode_m,
    )


def rqsym_f_context():
    return HopfContext(
        name="rqsym-f",
        product=rqsym_product_f,
        coproduct=rqsym_coproduct_f,
        counit=rqsym_counit,
        unit=(),
        degree=total_weight,
        basis=regularized_compositions,
        key_text=comp_to_text,
        antipode=rqsym_antipode_f,
    )


def context_by_name(name, lam=-1):
    table = {
        "hsym": lambda: hsym_context(lam),
        "ssym": ssym_context,
        "rqsym-m": rqsym_m_context,
        "rqsym-f": rqsym_f_context,
        "qsym": qsym_m_context,
    }
    if name not in table:
        raise ValueError(f"unknown algebra {name!r}")
    return table[name]()


# ---------------------------------------------------------------------------
# axiom verification


class LawReport:
    """Pass/fail tally for one law, keeping serialized counterexamples."""

    __slots__ = ("law", "checked", "failures", "max_failures")

    def __init__(self, law, max_failures=20):
        self.law = law
        self.checked = 0
        self.failures = []
        self.max_failures = max_failures

    def record(self, ok, inputs, lhs=None, rhs=None):
        self.checked += 1
        if not ok and len(self.failures) < self.max_failures:
            self.failures.append({"inputs": inputs, "lhs": lhs, "rhs": rhs})

    @property
    def failed(self):
        return len(self.failures)

    def to_json(self):
        entry = {
            "law": self.law,
            "checked": self.checked,
            "status": "pass" if not self.failures else "fail",
        }
        if self.failures:
            entry["failures"] = self.failures
        return entry


def merge_reports(reports):
    """Combine per-shard law reports into one report dict."""
    by_law = {}
    order = []
    for rep in reports:
        for law in rep:
            if law.law not in by_law:
                by_law[law.law] = LawReport(law.law)
                order.append(law.law)
            tgt = by_law[law.law]
            tgt.checked += law.checked
            room = max(0, tgt.max_failures - len(tgt.failures))
            tgt.failures.extend(law.failures[:room])
    return [by_law[name] for name in order]


def report_to_json(laws, **meta):
    checks = [law.to_json() for law in laws]
    total = sum(law.checked for law in laws)
    failed = sum(law.failed for law in laws)
    summary = dict(meta)
    summary.update(
        {"total": total, "failed": failed, "status": "pass" if failed == 0 else "fail"}
    )
    return {"checks": checks, "summary": summary}


def _shard_iter(items, shard):
    idx, count = shard
    for i, item in enumerate(items):
        if i % count == idx:
            yield item


def verify_hopf(ctx, max_degree, shard=(0, 1)):
    """Exhaustively check the Hopf axioms on all basis strata.

    Singles run to degree ``max_degree``; pairs and triples run to summed
    degree ``max_degree + 1``.  Returns a list of LawReport.
    """
    strata = {d: ctx.basis(d) for d in range(max_degree + 2)}
    singles = [x for d in range(max_degree + 1) for x in strata[d]]
    unit = ctx.unit
    unit_lc = LinComb.single(unit)
    serialize = lambda lc: lincomb_to_json(lc, ctx.key_text)

    law_unit = LawReport("unit laws")
    law_coassoc = LawReport("coassociativity")
    law_counit = LawReport("counit laws")
    law_cograded = LawReport("cograded coproduct")
    law_antipode_l = LawReport("antipode convolution (left)")
    law_antipode_r = LawReport("antipode convolution (right)")
    law_assoc = LawReport("product associativity")
    law_compat = LawReport("coproduct multiplicativity")
    law_counit_mult = LawReport("counit multiplicativity")

    for x in _shard_iter(singles, shard):
        xl = LinComb.single(x)
        law_unit.record(
            ctx.product(unit, x) == xl and ctx.product(x, unit) == xl,
            [ctx.key_text(x)],
        )
        dx = ctx.coproduct(x)

        left = {}
        right = {}
        for (a, b), c in dx.terms.items():
            for (p, q), c2 in ctx.coproduct(a).terms.items():
                key = (p, q, b)
                left[key] = left.get(key, 0) + c * c2
            for (p, q), c2 in ctx.coproduct(b).terms.items():
                key = (a, p, q)
                right[key] = right.get(key, 0) + c * c2
        law_coassoc.record(
            {k: v for k, v in left.items() if v} == {k: v for k, v in right.items() if v},
            [ctx.key_text(x)],
        )

        lcounit = LinComb((b, c * ctx.counit(a)) for (a, b), c in dx.terms.items())
        rcounit = LinComb((a, c * ctx.counit(b)) for (a, b), c in dx.terms.items())
        law_counit.record(lcounit == xl and rcounit == xl, [ctx.key_text(x)])

        degx = ctx.degree(x)
        law_cograded.record(
            all(ctx.degree(a) + ctx.degree(b) == degx for (a, b) in dx.terms),
            [ctx.key_text(x)],
        )

        target = unit_lc.scale(ctx.counit(x))
        conv_l = LinComb.zero()
        conv_r = LinComb.zero()
        for (a, b), c in dx.terms.items():
            for ka, ca in ctx.antipode(a).terms.items():
                conv_l = conv_l + ctx.product(ka, b).scale(c * ca)
            for kb, cb in ctx.antipode(b).terms.items():
                conv_r = conv_r + ctx.product(a, kb).scale(c * cb)
        law_antipode_l.record(
            conv_l == target, [ctx.key_text(x)], serialize(conv_l), serialize(target)
        )
        law_antipode_r.record(
            conv_r == target, [ctx.key_text(x)], serialize(conv_r), serialize(target)
        )

    pair_budget = max_degree + 1
    pairs = [
        (x, y)
        for dx in range(pair_budget + 1)
        for dy in range(pair_budget + 1 - dx)
        for x in strata[dx]
        for y in strata[dy]
    ]
    for x, y in _shard_iter(pairs, shard):
        prod = ctx.product(x, y)
        lhs = prod.map_basis(ctx.coproduct)
        rhs = tensor_bilinear(ctx.coproduct(x), ctx.coproduct(y), ctx.product)
        law_compat.record(
            lhs == rhs,
            [ctx.key_text(x), ctx.key_text(y)],
            serialize(lhs),
            serialize(rhs),
        )
        eps_prod = sum(c * ctx.counit(k) for k, c in prod.terms.items())
        law_counit_mult.record(
            eps_prod == ctx.counit(x) * ctx.counit(y),
            [ctx.key_text(x), ctx.key_text(y)],
        )

    triples = [
        (x, y, z)
        for dx in range(pair_budget + 1)
        for dy in range(pair_budget + 1 - dx)
        for dz in range(pair_budget + 1 - dx - dy)
        for x in strata[dx]
        for y in strata[dy]
        for z in strata[dz]
    ]
    for x, y, z in _shard_iter(triples, shard):
        lhs = ctx.product(x, y).map_basis(lambda k: ctx.product(k, z))
        rhs = ctx.product(y, z)
        rhs = LinComb(
            (k2, c * c2)
            for k, c in rhs.terms.items()
            for k2, c2 in ctx.product(x, k).terms.items()
        )
        law_assoc.record(
            lhs == rhs,
            [ctx.key_text(x), ctx.key_text(y), ctx.key_text(z)],
            serialize(lhs),
            serialize(rhs),
        )

    return [
        law_unit,
        law_assoc,
        law_coassoc,
        law_counit,
        law_counit_mult,
        law_compat,
        law_cograded,
        law_antipode_l,
        law_antipode_r,
    ]
