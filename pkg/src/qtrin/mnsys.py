"""Enumeration of (m,n)-systems m + n = (I.m + N e_i)/2 over a Dynkin diagram.

Strategy: depth-first search over candidate n vectors with positive-matrix
pruning, recovering m = C^{-1}(N e_i - 2n) and keeping solutions where m is a
nonnegative integer vector.  All entries of the inverse Cartan matrix are
positive, which gives exact per-coordinate bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .liealg import LieAlgebra


@dataclass(frozen=True)
class MNSolution:
    m: tuple[int, ...]
    n: tuple[int, ...]

    def check(self, g: LieAlgebra, N: int, i: int) -> bool:
        """Verify m + n = (I.m + N e_i)/2 exactly."""
        im = g.incidence_apply(self.m)
        for j in range(g.rank):
            rhs = im[j] + (N if j == i - 1 else 0)
            if rhs % 2 or self.m[j] + self.n[j] != rhs // 2:
                return False
        return True

    def basis_str(self) -> str:
        """Unit-vector notation, e.g. `m=5e1+4e2+e7 n=e5`."""
        def vec(v: tuple[int, ...]) -> str:
            parts = []
            for j, c in enumerate(v, start=1):
                if c == 0:
                    continue
                parts.append(f"e{j}" if c == 1 else f"{c}e{j}")
            return "+".join(parts) if parts else "0"
        return f"m={vec(self.m)} n={vec(self.n)}"


def solve_mn(g: LieAlgebra, N: int, i: int) -> list[MNSolution]:
    """All solutions with m, n componentwise nonnegative, ordered lexicographically in n.

    ``i`` is the 1-based vertex index of the source term N e_i.
    """
    return list(_solve_mn_cached(g, N, i))


@lru_cache(maxsize=None)
def _solve_mn_cached(g: LieAlgebra, N: int, i: int) -> tuple[MNSolution, ...]:
    if N < 0:
        raise ValueError("N must be nonnegative")
    if not 1 <= i <= g.rank:
        raise ValueError(f"vertex index {i} out of range for rank {g.rank}")
    r = g.rank
    inv = g.inverse_cartan
    # m_j = N*inv[j][i-1] - 2*(inv . n)_j must stay >= 0
    target = [N * inv[j][i - 1] for j in range(r)]
    solutions: list[MNSolution] = []
    n = [0] * r
    partial = [Fraction(0)] * r  # (inv . n)_j over coordinates fixed so far

    def dfs(k: int) -> None:
        if k == r:
            m = []
            for j in range(r):
                mj = target[j] - 2 * partial[j]
                if mj < 0 or mj.denominator != 1:
                    return
                m.append(int(mj))
            solutions.append(MNSolution(tuple(m), tuple(n)))
            return
        v = 0
        while True:
            n[k] = v
            ok = True
            if v:
                for j in range(r):
                    partial[j] += inv[j][k]
                    if 2 * partial[j] > target[j]:
                        ok = False
            if not ok:
                # undo and stop increasing this coordinate
                n[k] = 0
                while v > 0:
                    for j in range(r):
                        partial[j] -= inv[j][k]
                    v -= 1
                return
            dfs(k + 1)
            v += 1

    dfs(0)
    solutions.sort(key=lambda s: s.n)
    return tuple(solutions)


Predicate = Callable[[Sequence[int]], bool]


def parity_filter(indices: Sequence[int], sigma: int = 0) -> Predicate:
    """n -> (sum of the 1-based components) + sigma is even."""
    def pred(n: Sequence[int]) -> bool:
        return (sum(n[j - 1] for j in indices) + sigma) % 2 == 0
    return pred


def mod3_filter() -> Predicate:
    """The A5/E6 constraint n1 + n4 == n2 + n5 (mod 3)."""
    def pred(n: Sequence[int]) -> bool:
        return (n[0] + n[3] - n[1] - n[4]) % 3 == 0
    return pred


def solve_mn_filtered(
    g: LieAlgebra, N: int, i: int, *predicates: Predicate
) -> list[MNSolution]:
    """solve_mn restricted to solutions whose n satisfies every predicate."""
    return [
        s for s in solve_mn(g, N, i)
        if all(pred(s.n) for pred in predicates)
    ]


def solve_mn_bruteforce(g: LieAlgebra, N: int, i: int, box: int) -> list[MNSolution]:
    """Reference enumeration over the full box 0 <= n_j <= box (test oracle)."""
    r = g.rank
    out = []

    def rec(k: int, n: list[int]) -> None:
        if k == r:
            v = [N * g.inverse_cartan[j][i - 1]
                 - 2 * sum(g.inverse_cartan[j][l] * n[l] for l in range(r))
                 for j in range(r)]
            if all(x >= 0 and Fraction(x).denominator == 1 for x in v):
                out.append(MNSolution(tuple(int(x) for x in v), tuple(n)))
            return
        for val in range(box + 1):
            rec(k + 1, n + [val])

    rec(0, [])
    out.sort(key=lambda s: s.n)
    return out
