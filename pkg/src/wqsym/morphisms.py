"""The four surjections between the algebras and their law verifiers.

    d1:   permutations              -> quasi-symmetric functions (F basis)
    d2:   signed permutations       -> weak quasi-symmetric functions (F)
    phi1: weak quasi-symmetric fns  -> quasi-symmetric functions
    phi2: signed permutations       -> permutations

All four are basis maps extended linearly.  The identities relating them (the
commuting square d1 phi2 = phi1 d2, the homomorphism laws at weight -1,
and the vanishing laws for phi2) are implemented as exhaustive
checks over degree-bounded strata, never assumed.

Equality on the quasi-symmetric side is always decided in the monomial
basis after converting, which is multiplicity free.
"""
from __future__ import annotations

from .lincomb import LinComb, lc_mul, lincomb_to_json, tensor_bimap
from .compositions import (
    EPS,
    comp_of_descents,
    comp_to_text,
    regularized_compositions,
    wcomp,
    wcomp_preimage,
)
from .hopf import (
    LawReport,
    f_to_m_cached,
    hsym_coproduct,
    m_to_f_cached,
    rqsym_coproduct_f,
    rqsym_coproduct_m,
    rqsym_product_f,
    star_product,
)
from .words import (
    perm_to_text,
    positive_permutations,
    quasi_shuffle,
    shift,
    shifted_quasi_shuffle,
    shifted_shuffle,
    signed_permutations,
    standardize,
    weak_descent_set,
)


def d1(pi):
    """F indexed by the descent composition of a permutation."""
    if any(a < 0 for a in pi):
        raise ValueError(f"d1 needs an ordinary permutation, got {pi}")
    if not pi:
        return LinComb.single(())
    return LinComb.single(comp_of_descents(weak_descent_set(pi), len(pi)))


def d2(pi):
    """F indexed by the regularized composition of a signed permutation."""
    return LinComb.single(wcomp(pi))


def phi1_m(alpha):
    """On monomials: (-1)^{#eps parts} M with the eps parts dropped when
    the first part is positive; the empty composition maps to 1; zero
    otherwise."""
    if not alpha:
        return LinComb.single(())
    if alpha[0] is EPS:
        return LinComb.zero()
    sign = (-1) ** sum(1 for p in alpha if p is EPS)
    return LinComb.single(tuple(p for p in alpha if p is not EPS), sign)


def phi1_f(alpha):
    """On fundamentals: (-1)^j F of the positive middle when alpha is
    (e^i, bar, e^j) with j <= 1 and bar nonempty; 1 on the empty
    composition; zero otherwise."""
    if not alpha:
        return LinComb.single(())
    positive = [p for p, part in enumerate(alpha) if part is not EPS]
    if not positive:
        return LinComb.zero()
    first, last = positive[0], positive[-1]
    if any(alpha[p] is EPS for p in range(first, last + 1)):
        return LinComb.zero()
    j = len(alpha) - 1 - last
    if j > 1:
        return LinComb.zero()
    return LinComb.single(alpha[first : last + 1], (-1) ** j)


def phi2(word):
    """Extract the permutation: (-1)^j st of the positive letters when
    they form one block followed by at most one negative letter; 1 on the
    empty word; zero otherwise.

    Accepts any signed word, not just signed permutations; the value only
    depends on the standardization.
    """
    if not word:
        return LinComb.single(())
    positive = [p for p, a in enumerate(word) if a > 0]
    if not positive:
        return LinComb.zero()
    first, last = positive[0], positive[-1]
    if len(positive) != last - first + 1:
        return LinComb.zero()
    j = len(word) - 1 - last
    if j > 1:
        return LinComb.zero()
    return LinComb.single(standardize(word[first : last + 1]), (-1) ** j)


def _to_monomials(f_combo):
    """F-basis combination to the multiplicity-free monomial basis."""
    return f_combo.map_basis(f_to_m_cached)


def _serialize(lc):
    return lincomb_to_json(lc, comp_to_text)


def _shard_iter(items, shard):
    idx, count = shard
    for i, item in enumerate(items):
        if i % count == idx:
            yield item


def verify_square(max_len, shard=(0, 1)):
    """d1 phi2 = phi1 d2 on every signed permutation of length <= max_len."""
    law = LawReport("commuting square d1.phi2 = phi1.d2")
    perms = [pi for n in range(max_len + 1) for pi in signed_permutations(n)]
    for pi in _shard_iter(perms, shard):
        lhs = _to_monomials(phi2(pi).map_basis(d1))
        rhs = _to_monomials(phi1_f(wcomp(pi)))
        law.record(lhs == rhs, [perm_to_text(pi)], _serialize(lhs), _serialize(rhs))
    return [law]


def verify_morphism_laws(budget=4, shard=(0, 1)):
    """Homomorphism laws for phi2, d2, d1 and phi1 at weight -1.

    Product laws run over pairs with combined degree <= budget + 1;
    coproduct laws run over single elements of degree <= budget + 1.
    Degree is length on the permutation side and total weight on the
    composition side.
    """
    reach = budget + 1
    signed = {n: list(signed_permutations(n)) for n in range(reach + 1)}
    plain = {n: list(positive_permutations(n)) for n in range(reach + 1)}
    comps = {w: regularized_compositions(w) for w in range(reach + 1)}

    signed_singles = [pi for n in range(reach + 1) for pi in signed[n]]
    signed_pairs = [
        (s, t)
        for m in range(reach + 1)
        for n in range(reach + 1 - m)
        for s in signed[m]
        for t in signed[n]
    ]
    plain_pairs = [
        (s, t)
        for m in range(reach + 1)
        for n in range(reach + 1 - m)
        for s in plain[m]
        for t in plain[n]
    ]
    comp_singles = [a for w in range(reach + 1) for a in comps[w]]
    comp_pairs = [
        (a, b)
        for wa in range(reach + 1)
        for wb in range(reach + 1 - wa)
        for a in comps[wa]
        for b in comps[wb]
    ]

    law_phi2_prod = LawReport("phi2 is multiplicative")
    law_phi2_coprod = LawReport("phi2 is comultiplicative")
    law_d2_prod = LawReport("d2 is multiplicative")
    law_d2_coprod = LawReport("d2 is comultiplicative")
    law_d1_prod = LawReport("d1 is multiplicative")
    law_d1_coprod = LawReport("d1 is comultiplicative")
    law_phi1_prod = LawReport("phi1 is multiplicative")
    law_phi1_coprod = LawReport("phi1 is comultiplicative")
    law_phi1_bases = LawReport("phi1_F matches conjugated phi1_M")

    for s, t in _shard_iter(signed_pairs, shard):
        prod = shifted_quasi_shuffle(s, t, -1)
        lhs = prod.map_basis(phi2)
        rhs = lc_mul(phi2(s), phi2(t), shifted_shuffle)
        law_phi2_prod.record(
            lhs == rhs,
            [perm_to_text(s), perm_to_text(t)],
            lincomb_to_json(lhs, perm_to_text),
            lincomb_to_json(rhs, perm_to_text),
        )
        lhs2 = _to_monomials(prod.map_basis(d2))
        rhs2 = _to_monomials(lc_mul(d2(s), d2(t), rqsym_product_f))
        law_d2_prod.record(
            lhs2 == rhs2,
            [perm_to_text(s), perm_to_text(t)],
            _serialize(lhs2),
            _serialize(rhs2),
        )

    for pi in _shard_iter(signed_singles, shard):
        dx = hsym_coproduct(pi)
        lhs = tensor_bimap(dx, phi2, phi2)
        rhs = phi2(pi).map_basis(hsym_coproduct)
        law_phi2_coprod.record(lhs == rhs, [perm_to_text(pi)])
        d2m = lambda k: _to_monomials(d2(k))
        lhs2 = tensor_bimap(dx, d2m, d2m)
        rhs2 = tensor_bimap(
            d2(pi).map_basis(rqsym_coproduct_f), f_to_m_cached, f_to_m_cached
        )
        law_d2_coprod.record(lhs2 == rhs2, [perm_to_text(pi)])

    for s, t in _shard_iter(plain_pairs, shard):
        prod = shifted_shuffle(s, t)
        lhs = _to_monomials(prod.map_basis(d1))
        rhs = _to_monomials(lc_mul(d1(s), d1(t), rqsym_product_f))
        law_d1_prod.record(
            lhs == rhs,
            [perm_to_text(s), perm_to_text(t)],
            _serialize(lhs),
            _serialize(rhs),
        )

    d1m = lambda k: _to_monomials(d1(k))
    for pi in _shard_iter([p for n in range(reach + 1) for p in plain[n]], shard):
        lhs = tensor_bimap(hsym_coproduct(pi), d1m, d1m)
        rhs = tensor_bimap(
            d1(pi).map_basis(rqsym_coproduct_f), f_to_m_cached, f_to_m_cached
        )
        law_d1_coprod.record(lhs == rhs, [perm_to_text(pi)])

    for a, b in _shard_iter(comp_pairs, shard):
        lhs = star_product(a, b).map_basis(phi1_m)
        rhs = lc_mul(phi1_m(a), phi1_m(b), star_product)
        law_phi1_prod.record(
            lhs == rhs, [comp_to_text(a), comp_to_text(b)], _serialize(lhs), _serialize(rhs)
        )

    for a in _shard_iter(comp_singles, shard):
        lhs = tensor_bimap(rqsym_coproduct_m(a), phi1_m, phi1_m)
        rhs = phi1_m(a).map_basis(rqsym_coproduct_m)
        law_phi1_coprod.record(lhs == rhs, [comp_to_text(a)])
        conjugated = f_to_m_cached(a).map_basis(phi1_m).map_basis(m_to_f_cached)
        law_phi1_bases.record(
            phi1_f(a) == conjugated,
            [comp_to_text(a)],
            _serialize(phi1_f(a)),
            _serialize(conjugated),
        )

    return [
        law_phi2_prod,
        law_phi2_coprod,
        law_d2_prod,
        law_d2_coprod,
        law_d1_prod,
        law_d1_coprod,
        law_phi1_prod,
        law_phi1_coprod,
        law_phi1_bases,
    ]


def _phi2_of_product(s, t):
    """phi2 of the weight -1 product, evaluated on raw shuffle words.

    phi2 only depends on standardization, so the termwise st inside the
    shifted product can be skipped.
    """
    raw = quasi_shuffle(s, shift(t, len(s)), -1)
    return raw.map_basis(phi2)


def _single_block_trailing(word):
    """For words of shape (negs, positives, negs) return the trailing
    negative run length (the whole length for all-negative words); None
    when the positives are not a single block."""
    positive = [p for p, a in enumerate(word) if a > 0]
    if not positive:
        return len(word)
    first, last = positive[0], positive[-1]
    if len(positive) != last - first + 1:
        return None
    return len(word) - 1 - last


def verify_annihilation(max_len=4, shard=(0, 1)):
    """The three vanishing laws for phi2 at weight -1.

    * a positive-negative-positive pattern in either factor kills the
      product;
    * single-block factors with a trailing negative run of length >= 2
      (for all-negative factors: length >= 2) kill the product;
    * multiplying by the one-letter negative permutation kills the
      product on both sides.
    """
    law_pnp = LawReport("phi2 kills +-+ patterns")
    law_trail = LawReport("phi2 kills trailing negative runs")
    law_single_neg = LawReport("phi2 kills products with the negative letter")

    perms = {n: list(signed_permutations(n)) for n in range(max_len + 1)}
    every = [pi for n in range(max_len + 1) for pi in perms[n]]

    def has_pnp(word):
        seen_pos = seen_pos_neg = False
        for a in word:
            if a > 0:
                if seen_pos_neg:
                    return True
                seen_pos = True
            elif seen_pos:
                seen_pos_neg = True
        return False

    pnp = [pi for pi in every if has_pnp(pi)]
    zero = LinComb.zero()
    for s in _shard_iter(pnp, shard):
        for t in every:
            law_pnp.record(
                _phi2_of_product(s, t) == zero and _phi2_of_product(t, s) == zero,
                [perm_to_text(s), perm_to_text(t)],
            )

    blocky = [
        (pi, _single_block_trailing(pi))
        for pi in every
        if _single_block_trailing(pi) is not None
    ]
    qualifying = [
        (s, t)
        for s, js in blocky
        for t, jt in blocky
        if js >= 2 or jt >= 2
    ]
    for s, t in _shard_iter(qualifying, shard):
        law_trail.record(
            _phi2_of_product(s, t) == zero, [perm_to_text(s), perm_to_text(t)]
        )

    neg = (-1,)
    for s in _shard_iter(every, shard):
        law_single_neg.record(
            _phi2_of_product(s, neg) == zero and _phi2_of_product(neg, s) == zero,
            [perm_to_text(s)],
        )

    return [law_pnp, law_trail, law_single_neg]


def verify_surjectivity(max_len=4):
    """phi2 hits every permutation (it fixes them) and d2 hits every
    fundamental basis key, via an explicit preimage."""
    law_phi2 = LawReport("phi2 hits every permutation")
    law_d2 = LawReport("d2 hits every fundamental key")
    for n in range(max_len + 1):
        for pi in positive_permutations(n):
            law_phi2.record(phi2(pi) == LinComb.single(pi), [perm_to_text(pi)])
    for w in range(max_len + 1):
        for alpha in regularized_compositions(w):
            pi = wcomp_preimage(alpha)
            law_d2.record(
                wcomp(pi) == alpha and d2(pi) == LinComb.single(alpha),
                [comp_to_text(alpha), perm_to_text(pi)],
            )
    return [law_phi2, law_d2]
