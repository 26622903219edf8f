"""Seven-dimensional standard representation, Levi block embeddings, the
Weyl dimension formula, Kostant-decomposition bookkeeping and the
cohomological-degree case analysis for the long-root parabolic.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import List, NamedTuple, Sequence, Tuple, Union

from .algebra import MPoly, RFrac, SymMatrix
from .roots import (
    ALPHA,
    BETA,
    BOREL,
    P_LONG,
    P_SHORT,
    POSITIVE_ROOTS,
    RHO,
    ParabolicId,
    Weight,
    WeylElement,
    dot_act,
    element,
    minimal_coset_reps,
)

# Weights of the 7-dimensional representation, listed in two orders:
# R7_WEIGHTS_ASC is ascending (lowest weight first); R7_WEIGHTS_MODEL is the
# order used by the explicit 7x7 matrix model (highest weight first).
R7_WEIGHTS_ASC: Tuple[Weight, ...] = (
    Weight(-1, -2),
    Weight(-1, -1),
    Weight(0, -1),
    Weight(0, 0),
    Weight(0, 1),
    Weight(1, 1),
    Weight(1, 2),
)
R7_WEIGHTS_MODEL: Tuple[Weight, ...] = tuple(reversed(R7_WEIGHTS_ASC))


def weyl_dim(lam: Weight) -> int:
    """Dimension of the irreducible representation of highest weight lam."""
    for simple in (ALPHA, BETA):
        p = lam.pair_coroot(simple)
        if p < 0 or p != int(p):
            raise ValueError(f"weight {lam} is not dominant integral")
    num = Q(1)
    den = Q(1)
    for root in POSITIVE_ROOTS:
        num *= (lam + RHO).pair_coroot(root)
        den *= RHO.pair_coroot(root)
    dim = num / den
    assert dim.denominator == 1
    return int(dim)


def _dual2(a: SymMatrix) -> SymMatrix:
    """Contragredient of a 2x2 matrix written in the reversed basis.

    For A = [[a11,a12],[a21,a22]] this is (1/det) [[a11,-a12],[-a21,a22]].
    """
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    inv = det.inv()
    return SymMatrix(
        [
            [inv * a[0, 0], -(inv * a[0, 1])],
            [-(inv * a[1, 0]), inv * a[1, 1]],
        ]
    )


def sym2_twist(a: SymMatrix) -> SymMatrix:
    """Symmetric square twisted by det^{-1}, in the signed basis
    (u^2, 2uv, -v^2)."""
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    inv = det.inv()
    a11, a12, a21, a22 = a[0, 0], a[0, 1], a[1, 0], a[1, 1]
    rows = [
        [a11 * a11, 2 * (a11 * a12), -(a12 * a12)],
        [a11 * a21, a11 * a22 + a12 * a21, -(a12 * a22)],
        [-(a21 * a21), -(2 * (a21 * a22)), a22 * a22],
    ]
    return SymMatrix([[inv * x for x in row] for row in rows])


def _antidiag_conj(a: SymMatrix) -> SymMatrix:
    return SymMatrix([[a[1, 1], a[1, 0]], [a[0, 1], a[0, 0]]])


def levi_embed(which: str, a: SymMatrix) -> SymMatrix:
    """Embed a 2x2 matrix as a Levi factor of the 7-dimensional model.

    Basis order is the matrix-model order (highest weight first).  For the
    short-root Levi the blocks are (dual, Sym^2 (x) det^{-1}, standard); for
    the long-root Levi they are (det, standard reversed, 1, dual, det^{-1}).
    """
    if a.rows != 2 or a.cols != 2:
        raise ValueError("levi_embed expects a 2x2 matrix")
    zero = RFrac.const(0)
    out = [[zero] * 7 for _ in range(7)]
    if which == "short":
        blocks = [(_dual2(a), 0), (sym2_twist(a), 2), (a, 5)]
        for block, offset in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    out[offset + i][offset + j] = block[i, j]
    elif which == "long":
        det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        out[0][0] = det
        rev = _antidiag_conj(a)
        dual = _dual2(a)
        for i in range(2):
            for j in range(2):
                out[1 + i][1 + j] = rev[i, j]
                out[4 + i][4 + j] = dual[i, j]
        out[3][3] = RFrac.const(1)
        out[6][6] = det.inv()
    else:
        raise ValueError("which must be 'long' or 'short'")
    return SymMatrix(out)


class KostantPiece(NamedTuple):
    w: WeylElement
    degree: int
    levi_highest_weight: Weight  # w(Lam + rho) - rho
    neg_shifted: Weight          # -w(Lam + rho), the sign convention used in
    # the degree case analysis


def kostant_pieces(parabolic: ParabolicId, lam: Weight) -> List[KostantPiece]:
    pieces = []
    for w in minimal_coset_reps(parabolic):
        shifted = dot_act(w, lam)
        pieces.append(KostantPiece(w, w.length, shifted, -(w.act(lam + RHO))))
    return pieces


def levi_piece_dim(parabolic: ParabolicId, weight: Weight) -> int:
    """Dimension of the Levi irreducible with the given highest weight."""
    if not parabolic.levi_simple:
        return 1
    (gamma,) = parabolic.levi_simple
    d = weight.pair_coroot(gamma) + 1
    assert d == int(d) and d > 0, "piece weight is not Levi-dominant integral"
    return int(d)


def euler_characteristic(parabolic: ParabolicId, lam: Weight) -> int:
    """Alternating sum of Levi piece dimensions (always zero: the virtual
    nilpotent-cohomology Euler characteristic of a nonzero nilradical)."""
    total = 0
    for piece in kostant_pieces(parabolic, lam):
        total += (-1) ** piece.degree * levi_piece_dim(parabolic, piece.levi_highest_weight)
    return total


class DegreeCase(NamedTuple):
    degree: int
    k: Union[Q, MPoly]
    s: Union[Q, RFrac]
    w: WeylElement
    neg_shifted: Weight


_CASE_WORDS = ("bab", "baba", "babab")


def degree_cases_alpha(c1, c2) -> Tuple[DegreeCase, DegreeCase, DegreeCase]:
    """The three (degree, k, s) records attached to the long-root parabolic
    for the dominant weight c1*(2a+3b) + c2*(a+2b).

    The eigenform weight k and evaluation point s are read off -w(Lam+rho)
    in the basis (alpha/2, (alpha+2*beta)/2): k = 1 - x and s = y/10.
    Accepts integers or polynomial generics for c1, c2.
    """
    lam = Weight(2 * c1 + c2, 3 * c1 + 2 * c2)
    out = []
    for word in _CASE_WORDS:
        w = element(word)
        neg = -(w.act(lam + RHO))
        x, y = neg.in_basis_half_alpha()
        k = 1 - x
        s = y / 10
        out.append(DegreeCase(w.length + 1, k, s, w, neg))
    return tuple(out)


def lift_weights(c1, c2) -> Tuple:
    """Cohomological weight septuple of the rank-7 lift."""
    return (
        2 * c1 + c2,
        c1 + c2,
        c1 + 0 * c2,
        0 * c1,
        -c1 + 0 * c2,
        -c1 - c2,
        -2 * c1 - c2,
    )


def hodge_tate_weights(c1, c2) -> Tuple:
    """Hodge--Tate septuple: the lift weights shifted by (3,2,1,0,-1,-2,-3)."""
    shifts = (3, 2, 1, 0, -1, -2, -3)
    return tuple(w + s for w, s in zip(lift_weights(c1, c2), shifts))


def coweight_pairings(cov_a, cov_b) -> Tuple:
    """Pair the coweight cov_a * alpha_cov + cov_b * beta_cov against the
    seven weights of the standard representation (model order)."""
    out = []
    for mu in R7_WEIGHTS_MODEL:
        out.append(cov_a * mu.pair_coroot(ALPHA) + cov_b * mu.pair_coroot(BETA))
    return tuple(out)
