"""Slow reference implementations used only by the tests."""
import random
from collections import Counter
from itertools import permutations, product
from math import factorial

import numpy as np

from chowpow.combinatorics import compositions, m_partitions
from chowpow.plethysm import _perm_sign
from chowpow.tableau import enumerate_ssyt, tableau_from_permutation


def _positions(t):
    """Tensor slot of every box: label-i boxes fill block i in column order."""
    used = {}
    pos = {}
    for c, col in enumerate(t.columns):
        for r, x in enumerate(col):
            j = used.get(x, 0)
            used[x] = j + 1
            pos[r, c] = (x - 1) * t.n + j
    return pos


def tableau_vector(t, m):
    """Sparse tensor v_T: one antisymmetrized e_1 ^ ... ^ e_h per column."""
    pos = _positions(t)
    size = t.d * t.n
    out = {}
    per_col = []
    for c, col in enumerate(t.columns):
        h = len(col)
        per_col.append([(tuple(pos[r, c] for r in range(h)), perm, _perm_sign(perm))
                        for perm in permutations(range(h))])
    for choice in product(*per_col):
        idx = [0] * size
        sign = 1
        for slots, perm, sg in choice:
            for s, v in zip(slots, perm):
                idx[s] = v
            sign *= sg
        out[tuple(idx)] = out.get(tuple(idx), 0) + sign
    assert all(max(k) < m for k in out)
    return out


def chow_tensor_block(forms, p):
    """Dense symmetric tensor sum_sigma l_sigma(1) x ... x l_sigma(n) mod p."""
    n = len(forms)
    m = len(forms[0])
    block = np.zeros((m,) * n, dtype=object)
    for sigma in permutations(range(n)):
        term = np.array(1, dtype=object)
        for s in sigma:
            term = np.multiply.outer(term, np.array(forms[s], dtype=object))
        block = block + term
    return block % p


def pow_tensor_block(forms, n, p):
    m = len(forms[0])
    block = np.zeros((m,) * n, dtype=object)
    for f in forms:
        term = np.array(1, dtype=object)
        for _ in range(n):
            term = np.multiply.outer(term, np.array(f, dtype=object))
        block = block + term
    return block % p


def contract(t, block, p):
    """<block^(x d), v_T> mod p by full expansion of the dn-fold tensor."""
    vec = tableau_vector(t, block.shape[0])
    n = t.n
    total = 0
    for idx, coeff in vec.items():
        val = coeff
        for i in range(t.d):
            val = val * int(block[idx[i * n:(i + 1) * n]]) % p
        total += val
    return total % p


def oracle_chow(t, pt):
    return contract(t, chow_tensor_block(pt.forms, pt.p), pt.p)


def oracle_pow(t, pt):
    return contract(t, pow_tensor_block(pt.forms, t.n, pt.p), pt.p)


def _z(rho):
    out = 1
    for k, mult in Counter(rho).items():
        out *= k**mult * factorial(mult)
    return out


def plethysm_powersum(lam, d, n, nvars=None):
    """a_lam(d[n]) from h_d[h_n] = sum_rho p_rho[h_n] / z_rho and the bialternant.

    Shares no code path with the Jacobi-Trudi route beyond enumerating
    compositions and partitions.
    """
    lam = tuple(lam)
    nv = nvars or len(lam)
    lam = lam + (0,) * (nv - len(lam))
    bound = lam[0] + nv + 1
    shape = (bound,) * nv
    total = np.zeros(shape, dtype=object)
    for rho in m_partitions(d, d):
        acc = np.zeros(shape, dtype=object)
        acc[(0,) * nv] = 1
        for k in rho:
            new = np.zeros(shape, dtype=object)
            for a in compositions(n, nv):
                e = tuple(k * x for x in a)
                if any(x >= bound for x in e):
                    continue
                src = tuple(slice(0, bound - x) for x in e)
                dst = tuple(slice(x, bound) for x in e)
                new[dst] += acc[src]
            acc = new
        total += acc * (factorial(d) // _z(rho))
    delta = list(range(nv - 1, -1, -1))
    res = 0
    for w in permutations(range(nv)):
        idx = tuple(lam[i] + delta[i] - delta[w[i]] for i in range(nv))
        if min(idx) < 0:
            continue
        res += _perm_sign(w) * total[idx]
    assert res % factorial(d) == 0
    return res // factorial(d)


def small_instances(max_size=6, max_m=3, extra=2, seed=1):
    """Every semistandard tableau with dn <= max_size and m <= max_m, plus
    `extra` random fillings per shape."""
    rnd = random.Random(seed)
    for d in range(1, max_size + 1):
        for n in range(1, max_size // d + 1):
            for m in range(1, max_m + 1):
                for lam in m_partitions(d * n, m):
                    ts = enumerate_ssyt(lam, d, n)
                    for _ in range(extra):
                        ts.append(tableau_from_permutation(lam, rnd.sample(range(1, d * n + 1), d * n), n))
                    for t in ts:
                        yield t, m
