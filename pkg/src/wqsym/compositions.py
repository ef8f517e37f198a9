"""Weak and regularized compositions over the monoid N + {e}.

The monoid adjoins to the nonnegative integers an element epsilon with

    0 + e = e + 0 = e + e = e,    n + e = e + n = n  (n >= 1),

ordered by 0 < e < 1.  A regularized composition is a tuple of parts that
are positive integers or ``EPS``; it is the regularization of the weak
composition obtained by reading every ``EPS`` as 0.  The empty tuple is
the empty composition.

Every regularized composition has a unique finest block form

    (e^{i_1}, s_1, e^{i_2}, s_2, ..., e^{i_k}, s_k, e^{i_{k+1}})

with single positive parts s_q; ``eps_runs`` returns the run lengths and
the positive parts, and the statistics, refinement order and basis-change
enumeration below all work through it.
"""
from __future__ import annotations

from collections import namedtuple
from math import comb

from .lincomb import LinComb
from .words import standardize, weak_descent_set


class _Eps:
    __slots__ = ()

    def __repr__(self):
        return "e"

    def __reduce__(self):
        # pickle by reference so identity checks survive worker processes
        return "EPS"


EPS = _Eps()


def is_eps(part):
    return part is EPS


def ntilde_add(a, b):
    """Monoid addition on {0, e, 1, 2, ...}."""
    if a is EPS:
        return b if (b is not EPS and b != 0) else EPS
    if b is EPS:
        return a if a != 0 else EPS
    return a + b


def regularize(weak):
    """The bijection from weak compositions: zero parts become e."""
    out = []
    for part in weak:
        if part < 0:
            raise ValueError(f"negative part {part} in weak composition")
        out.append(EPS if part == 0 else part)
    return tuple(out)


def unregularize(alpha):
    return tuple(0 if p is EPS else p for p in alpha)


def eps_runs(alpha):
    """Finest block form: (run lengths i_1..i_{k+1}, positive parts s_1..s_k)."""
    runs = [0]
    parts = []
    for part in alpha:
        if part is EPS:
            runs[-1] += 1
        else:
            parts.append(part)
            runs.append(0)
    return runs, parts


def weight(alpha):
    """|alpha| in the monoid: 0 for empty, e for all-epsilon, else the
    sum of the positive parts."""
    runs, parts = eps_runs(alpha)
    if parts:
        return sum(parts)
    return EPS if runs[0] else 0


def eps_length(alpha):
    return sum(1 for p in alpha if p is EPS)


def total_weight(alpha):
    return sum(1 if p is EPS else p for p in alpha)


def descent_set(alpha):
    """{b_q = sum_{j<=q} (i_j + s_j)} over the finest block form."""
    runs, parts = eps_runs(alpha)
    out = set()
    b = 0
    for i, s in zip(runs, parts):
        b += i + s
        out.add(b)
    return out


Stats = namedtuple("Stats", "weight total_weight eps_length descent_set")


def stats(alpha):
    return Stats(weight(alpha), total_weight(alpha), eps_length(alpha), descent_set(alpha))


def comp_of_descents(S, n):
    """Composition of n with descent set S; n itself must be in S."""
    S = set(S)
    if n < 1:
        raise ValueError("n must be positive")
    if not S <= set(range(1, n + 1)):
        raise ValueError(f"descent set {sorted(S)} not inside [{n}]")
    if n not in S:
        raise ValueError(f"descent set must contain the total weight {n}")
    points = sorted(S)
    prev = 0
    out = []
    for a in points:
        out.append(a - prev)
        prev = a
    return tuple(out)


def compositions_of(n):
    """All 2^(n-1) compositions of n >= 0 (the empty one for n = 0)."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return out


def refines(beta, alpha):
    """True when beta is a refinement of alpha.

    A coarsening merges adjacent positive parts and lengthens epsilon
    runs; the trailing run must be empty in both or nonempty in both.
    """
    runs_a, parts_a = eps_runs(alpha)
    runs_b, parts_b = eps_runs(beta)
    t = 0
    for q, target in enumerate(parts_a):
        if t >= len(parts_b) or runs_b[t] > runs_a[q]:
            return False
        acc = parts_b[t]
        t += 1
        while acc < target:
            if t >= len(parts_b) or runs_b[t] != 0:
                return False
            acc += parts_b[t]
            t += 1
        if acc != target:
            return False
    if t != len(parts_b):
        return False
    ja, jb = runs_a[-1], runs_b[-1]
    return (ja == 0 and jb == 0) or (1 <= jb <= ja)


def refinement_terms(alpha):
    """All (beta, c) with beta a refinement of alpha and c the
    basis-change coefficient.

    Each epsilon run of length i contributes a kept length j <= i with
    weight C(i, j), except the trailing run which keeps 1 <= j <= i with
    weight C(i-1, j-1) (both zero allowed when i = 0, with coefficient
    1); each positive part contributes a composition of itself.
    """
    runs, parts = eps_runs(alpha)
    k = len(parts)
    run_choices = []
    for q in range(k):
        i = runs[q]
        run_choices.append([(j, comb(i, j)) for j in range(i + 1)])
    last = runs[k]
    if last == 0:
        run_choices.append([(0, 1)])
    else:
        run_choices.append([(j, comb(last - 1, j - 1)) for j in range(1, last + 1)])
    part_choices = [compositions_of(s) for s in parts]

    out = []

    def build(q, prefix, coeff):
        if q == k:
            for j, cj in run_choices[k]:
                out.append((tuple(prefix + [EPS] * j), coeff * cj))
            return
        for j, cj in run_choices[q]:
            for gamma in part_choices[q]:
                build(q + 1, prefix + [EPS] * j + list(gamma), coeff * cj)

    build(0, [], 1)
    return out


def enumerate_refinements(alpha):
    return [beta for beta, _ in refinement_terms(alpha)]


def reversal(alpha):
    return tuple(reversed(alpha))


def concat(alpha, beta):
    return tuple(alpha) + tuple(beta)


def near_concat(alpha, beta):
    """(a_1, ..., a_k + b_1, ..., b_l); defined only for positive
    boundary parts."""
    if not alpha or not beta:
        raise ValueError("near concatenation needs nonempty compositions")
    if alpha[-1] is EPS:
        raise ValueError(
            f"near concatenation undefined: left part at position {len(alpha)} is e"
        )
    if beta[0] is EPS:
        raise ValueError("near concatenation undefined: right part at position 1 is e")
    return tuple(alpha[:-1]) + (alpha[-1] + beta[0],) + tuple(beta[1:])


def j_apply(J, alpha):
    """Group the parts of alpha by the composition J of len(alpha) and add
    each group in the monoid."""
    if any(p is EPS or p < 1 for p in J) or sum(J) != len(alpha):
        raise ValueError(f"{J} is not a composition of {len(alpha)}")
    out = []
    pos = 0
    for size in J:
        acc = alpha[pos]
        for p in alpha[pos + 1 : pos + size]:
            acc = ntilde_add(acc, p)
        out.append(acc)
        pos += size
    return tuple(out)


def star_product(alpha, beta):
    """Quasi-shuffle of regularized compositions:

        a * b = (a_1, a' * b) + (b_1, a * b') + (a_1 + b_1, a' * b')

    with monoid addition in the merge term and the empty composition as
    unit."""
    out = {}
    prefix = []
    push = prefix.append
    pop = prefix.pop
    na, nb = len(alpha), len(beta)

    def rec(i, j):
        if i == na:
            w = tuple(prefix) + beta[j:]
            out[w] = out.get(w, 0) + 1
            return
        if j == nb:
            w = tuple(prefix) + alpha[i:]
            out[w] = out.get(w, 0) + 1
            return
        push(alpha[i])
        rec(i + 1, j)
        pop()
        push(beta[j])
        rec(i, j + 1)
        pop()
        push(ntilde_add(alpha[i], beta[j]))
        rec(i + 1, j + 1)
        pop()

    rec(0, 0)
    return LinComb.wrap(out)


def wcomp(pi):
    """Regularized composition of a signed permutation: an e per negative
    letter, and the descent composition of each standardized maximal
    positive block."""
    out = []
    n = len(pi)
    i = 0
    while i < n:
        if pi[i] < 0:
            out.append(EPS)
            i += 1
        else:
            j = i
            while j < n and pi[j] > 0:
                j += 1
            block = standardize(pi[i:j])
            out.extend(comp_of_descents(weak_descent_set(block), len(block)))
            i = j
    return tuple(out)


def wcomp_preimage(alpha):
    """A signed permutation pi with wcomp(pi) = alpha.

    Each maximal run of positive parts becomes a positive block whose
    descent composition is that run; epsilons become negative letters.
    Inside a block, increasing runs of the required lengths take value
    ranges that decrease across run boundaries, forcing descents exactly
    at the interior partial sums.
    """
    runs, parts = eps_runs(alpha)
    blocks = []
    for q in range(len(parts)):
        if q > 0 and runs[q] == 0:
            blocks[-1].append(parts[q])
        else:
            blocks.append([parts[q]])
    words = []
    for block in blocks:
        word = []
        tail = sum(block)
        for size in block:
            word.extend(range(tail - size + 1, tail + 1))
            tail -= size
        words.append(word)
    total = total_weight(alpha)
    out = []
    pos_base = 0
    neg_val = total
    bi = 0
    idx = 0
    while idx < len(alpha):
        if alpha[idx] is EPS:
            out.append(-neg_val)
            neg_val -= 1
            idx += 1
        else:
            word = words[bi]
            out.extend(pos_base + v for v in word)
            pos_base += len(word)
            idx += len(blocks[bi])
            bi += 1
    return tuple(out)


def regularized_compositions(w):
    """All regularized compositions of total weight w (e counts 1)."""
    if w == 0:
        return [()]
    out = []
    for first in range(1, w + 1):
        heads = (1, EPS) if first == 1 else (first,)
        for head in heads:
            for rest in regularized_compositions(w - first):
                out.append((head,) + rest)
    return out


def comp_to_text(alpha):
    if not alpha:
        return "empty"
    return ",".join("e" if p is EPS else str(p) for p in alpha)


def text_to_comp(text):
    """Parse '1,e,2' with 'e' for epsilon; 'empty' is the empty
    composition."""
    text = text.strip()
    if text == "empty" or text == "":
        return ()
    out = []
    for pos, bit in enumerate(text.split(","), start=1):
        bit = bit.strip()
        if bit == "e":
            out.append(EPS)
            continue
        try:
            p = int(bit)
        except ValueError:
            raise ValueError(f"bad part {bit!r} at position {pos}") from None
        if p < 1:
            raise ValueError(f"nonpositive part {p} at position {pos}")
        out.append(p)
    return tuple(out)
