"""Arbitrary-precision integer linear algebra.

Matrices are plain lists of lists of Python ints and nothing here ever
rounds: determinants use fraction-free (Bareiss) elimination, whose
intermediate divisions are exact by construction, and characteristic
polynomials come from the Faddeev-LeVerrier recurrence, whose division
by the step index is exact for integer matrices.

This is the machinery that turns spectral product formulas into exact
integers: for a symmetric matrix A with eigenvalues t_1..t_n and an
integer polynomial p, det(p(A)) = prod_j p(t_j), so the irrational
eigenvalues never need to be computed.
"""

from __future__ import annotations

import math

from .errors import NotAPerfectSquareError, PreconditionError
from .graphs import Graph, Tree, validate_tree
from .orientation import OrientedGraph, skew_adjacency

IntMatrix = list[list[int]]

#: Integer polynomial, constant coefficient first.
IntPolynomial = list[int]


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    bt = list(zip(*b))  # column access by row of the transpose
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def adjacency_matrix(g: Graph) -> IntMatrix:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] = 1
        a[v][u] = 1
    return a


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination.

    Entries stay integral throughout: after eliminating column k, every
    entry is a (k+1)x(k+1) minor of the original matrix, and the division
    by the previous pivot is exact.  Row swaps flip the sign.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * row_k[k] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi:
            for j, qj in enumerate(q):
                out[i + j] += pi * qj
    return out


def _poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    out = list(p) + [0] * (len(q) - len(p))
    for j, qj in enumerate(q):
        out[j] -= qj
    return out


def char_poly_tree(t: Graph) -> IntPolynomial:
    """det(xI - A) for a tree, by the leaf-deletion recurrence.

    Rooted form: with children polynomials p_c (subtree) and q_c (subtree
    minus its root), a vertex v satisfies

        p_v = x * prod_c p_c  -  sum_c q_c * prod_{c' != c} p_{c'}
        q_v = prod_c p_c

    which is the repeated application of  phi(T) = x*phi(T-v) - phi(T-v-u)
    for a leaf v with neighbor u.  Coefficients are returned constant
    first and alternate in sign: x^n - a1 x^(n-2) + a2 x^(n-4) - ...
    """
    tree: Tree = validate_tree(t)
    children = tree.children()
    p: list[IntPolynomial] = [[] for _ in range(tree.n)]
    q: list[IntPolynomial] = [[] for _ in range(tree.n)]
    for v in _postorder(tree):
        kids = children[v]
        prefix = [[1]]
        for c in kids:
            prefix.append(_poly_mul(prefix[-1], p[c]))
        suffix = [[1]] * (len(kids) + 1)
        for idx in range(len(kids) - 1, -1, -1):
            suffix[idx] = _poly_mul(p[kids[idx]], suffix[idx + 1])
        prod = prefix[-1]
        pv = _poly_mul([0, 1], prod)  # x * prod
        for idx, c in enumerate(kids):
            pv = _poly_sub(pv, _poly_mul(q[c], _poly_mul(prefix[idx], suffix[idx + 1])))
        p[v] = pv
        q[v] = prod
    return p[tree.root]


def _postorder(tree: Tree) -> list[int]:
    children = tree.children()
    order: list[int] = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(children[v])
    order.reverse()  # children now precede parents
    return order


def _char_poly_leverrier(a: IntMatrix) -> IntPolynomial:
    """det(xI - A) by Faddeev-LeVerrier; exact for integer matrices."""
    n = len(a)
    mat = identity_matrix(n)
    coeffs_high = [1]  # x^n downwards
    for k in range(1, n + 1):
        am = mat_mul(a, mat)
        trace = sum(am[i][i] for i in range(n))
        c, rem = divmod(-trace, k)
        if rem:  # cannot happen for integer input; guards against misuse
            raise ValueError("Faddeev-LeVerrier division was inexact; non-integer input?")
        coeffs_high.append(c)
        for i in range(n):
            am[i][i] += c
        mat = am
    return list(reversed(coeffs_high))


def skew_char_poly(d: OrientedGraph) -> IntPolynomial:
    """det(xI - A(T^e)) for an oriented tree, computed from the matrix itself.

    Independent of char_poly_tree on purpose: the two are compared in
    tests (the skew coefficients equal the absolute values of the tree's
    characteristic-polynomial coefficients, for any orientation).
    """
    validate_tree(d.base)
    return _char_poly_leverrier(skew_adjacency(d))


def eval_matrix_poly(a: IntMatrix, coeffs: list[int]) -> IntMatrix:
    """Horner evaluation of sum coeffs[k] * a^k, with a^0 the identity."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix polynomial evaluation needs a square matrix")
    result = [[0] * n for _ in range(n)]
    for c in reversed(coeffs):
        result = mat_mul(result, a)
        for i in range(n):
            result[i][i] += c
    return result


def integer_sqrt_exact(v: int) -> int:
    """The integer k with k*k == v, or an error; never rounds."""
    if v < 0:
        raise PreconditionError(f"square root of negative value {v}")
    k = math.isqrt(v)
    if k * k != v:
        raise NotAPerfectSquareError(f"{v} is not a perfect square")
    return k
