"""Exact spectral facts: minimal polynomial degree and SRG eigenvalues.

No floating point here. Matrix powers use int64 only while the row-sum
bound guarantees no overflow, and Python integers beyond that.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np
import sympy

from .errors import InfeasibleParameters
from .graph_core import Graph
from .verifiers import ArParams

_INT64_SAFE = 2**62


def _normalize(vec: np.ndarray, combo: list[int]) -> tuple[np.ndarray, list[int]]:
    g = reduce(gcd, (int(t) for t in vec if t), 0)
    g = reduce(gcd, combo, g)
    if g > 1:
        vec = vec // g
        combo = [c // g for c in combo]
    return vec, combo


def minimal_polynomial(a) -> list[Fraction]:
    """Monic minimal polynomial of an integer matrix, coefficients low to high.

    Finds the least d with I, A, ..., A^d linearly dependent, by fraction-free
    elimination on the flattened powers.
    """
    a = np.asarray(a)
    n = a.shape[0]
    rho = int(np.abs(a).sum(axis=1).max()) if n else 0
    power = np.eye(n, dtype=np.int64)
    bound = 1
    basis: list[tuple[int, np.ndarray, list[int]]] = []  # (pivot, vector, combination)
    for d in range(n + 1):
        vec = power.reshape(-1).astype(object)
        combo = [0] * d + [1]
        for piv, bvec, bcombo in basis:
            t = vec[piv]
            if t:
                s = bvec[piv]
                vec = s * vec - t * bvec
                combo = [s * c for c in combo]
                for i, c in enumerate(bcombo):
                    combo[i] -= t * c
        nz = np.flatnonzero(vec != 0)
        if nz.size == 0:
            lead = combo[d]
            return [Fraction(c, lead) for c in combo]
        vec, combo = _normalize(vec, combo)
        basis = [(piv, bv, bc + [0]) for piv, bv, bc in basis]
        basis.append((int(nz[0]), vec, combo))
        bound *= max(rho, 1)
        if power.dtype != object and bound * max(rho, 1) >= _INT64_SAFE:
            power = power.astype(object)
            a = a.astype(object)
        power = power @ a
    raise AssertionError("Cayley-Hamilton bound exceeded")  # pragma: no cover


def evaluate_polynomial(coeffs: list[Fraction], a) -> np.ndarray:
    """coeffs applied to the matrix a, exactly (object array of Fractions)."""
    a = np.asarray(a).astype(object)
    n = a.shape[0]
    result = np.zeros((n, n), dtype=object)
    power = np.eye(n, dtype=np.int64).astype(object)
    for c in coeffs:
        result = result + c * power
        power = power @ a
    return result


def distinct_eigenvalue_count(g: Graph) -> int:
    """Number of distinct adjacency eigenvalues (= minimal polynomial degree)."""
    return len(minimal_polynomial(g.adjacency.astype(np.int64))) - 1


@dataclass(frozen=True)
class SrgEigenvalues:
    theta1: sympy.Expr
    theta2: sympy.Expr


def srg_eigenvalues(p: ArParams) -> SrgEigenvalues:
    """Roots of x^2 - (lambda - mu) x - (k - mu), largest first."""
    v, k, lam, mu = p.as_tuple()
    if k * (k - lam - 1) != (v - k - 1) * mu:
        raise InfeasibleParameters(f"k(k-lambda-1) != (v-k-1)mu for {p}")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc < 0:
        raise InfeasibleParameters(f"negative discriminant {disc}")
    root = sympy.sqrt(sympy.Integer(disc))
    half = sympy.Rational(1, 2)
    return SrgEigenvalues(half * (lam - mu + root), half * (lam - mu - root))
