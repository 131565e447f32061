"""Lattice tables of the simple elements and arithmetic on greedy normal forms.

Simple elements are numbered ``0 .. n-1``. An element of the monoid is a
tuple of simple indices in left greedy normal form: no identity factor and
every adjacent pair ``(s, t)`` left-weighted, i.e. ``s = (s t) ^ delta``.
"""
from functools import cached_property

import numpy as np


class SimpleLattice:
    """Divisibility lattice of the simples, derived from the partial product table.

    Args:
        product: ``product[i, j]`` is the index of the simple ``s_i s_j``, or -1
            when that product is not simple.
        identity: index of the identity.
        delta: index of the Garside element.
    """
    def __init__(self, product: np.ndarray, identity: int, delta: int):
        self.product = np.asarray(product, dtype=np.int64)
        self.identity = identity
        self.delta = delta
        self.size = self.product.shape[0]

    def mirror(self) -> 'SimpleLattice':
        """Lattice of the opposite monoid; its left divisibility is our right divisibility."""
        return SimpleLattice(self.product.T.copy(), self.identity, self.delta)

    @cached_property
    def quotient(self) -> np.ndarray:
        """``quotient[i, j] = k`` with ``s_i s_k = s_j``, or -1."""
        quotient = np.full_like(self.product, -1)
        rows, cols = np.nonzero(self.product >= 0)
        quotient[rows, self.product[rows, cols]] = cols
        return quotient

    @cached_property
    def divides(self) -> np.ndarray:
        return self.quotient >= 0

    @cached_property
    def meet(self) -> np.ndarray:
        divides = self.divides
        meet = np.full_like(self.product, -1)
        for i in range(self.size):
            for j in range(i, self.size):
                common = np.flatnonzero(divides[:, i] & divides[:, j])
                for c in common:
                    if divides[common, c].all():
                        meet[i, j] = meet[j, i] = c
                        break
        assert (meet >= 0).all()
        return meet

    @cached_property
    def join(self) -> np.ndarray:
        divides = self.divides
        join = np.full_like(self.product, -1)
        for i in range(self.size):
            for j in range(i, self.size):
                common = np.flatnonzero(divides[i, :] & divides[j, :])
                for c in common:
                    if divides[c, common].all():
                        join[i, j] = join[j, i] = c
                        break
        assert (join >= 0).all()
        return join

    @cached_property
    def complement(self) -> np.ndarray:
        """``complement[i, j] = s_i \\ s_j``, the k with ``s_i s_k = s_i v s_j``."""
        rows = np.arange(self.size)[:, None]
        return self.quotient[rows, self.join]

    @cached_property
    def to_delta(self) -> np.ndarray:
        """Right complement of each simple in delta."""
        return self.quotient[:, self.delta]

    def normalize(self, factors) -> tuple:
        """Left greedy normal form of a product of simples."""
        seq = [int(s) for s in factors if s != self.identity]
        changed = True
        while changed:
            changed = False
            for i in range(len(seq) - 2, -1, -1):
                s, t = seq[i], seq[i + 1]
                v = self.meet[t, self.to_delta[s]]
                if v != self.identity:
                    seq[i] = int(self.product[s, v])
                    seq[i + 1] = int(self.quotient[v, t])
                    changed = True
            if changed:
                seq = [s for s in seq if s != self.identity]
        return tuple(seq)

    def multiply(self, a: tuple, b: tuple) -> tuple:
        return self.normalize(a + b)

    def power(self, a: tuple, k: int) -> tuple:
        return self.normalize(a * k)

    def divide_simple(self, s: int, a: tuple) -> tuple:
        """``s^-1 a`` for a simple ``s`` left-dividing ``a``."""
        if s == self.identity:
            return a
        assert a and self.divides[s, a[0]]
        return self.normalize((int(self.quotient[s, a[0]]),) + a[1:])

    def meet_elements(self, a: tuple, b: tuple) -> tuple:
        gcd = []
        while a and b:
            s = int(self.meet[a[0], b[0]])
            if s == self.identity:
                break
            gcd.append(s)
            a = self.divide_simple(s, a)
            b = self.divide_simple(s, b)
        return self.normalize(gcd)

    def divides_element(self, a: tuple, b: tuple) -> bool:
        return self.meet_elements(a, b) == a

    def left_quotient(self, a: tuple, b: tuple) -> tuple:
        """``a^-1 b`` for ``a`` left-dividing ``b``."""
        for s in a:
            b = self.divide_simple(s, b)
        return b

    def _complement_simple(self, s: int, b) -> tuple[list, int]:
        # s \ (t1 t2 ...) = (s\t1)((t1\s)\t2)...
        out = []
        current = s
        for t in b:
            out.append(int(self.complement[current, t]))
            current = int(self.complement[t, current])
        return out, current

    def complement_elements(self, a: tuple, b: tuple) -> tuple[tuple, tuple]:
        """``(a\\b, b\\a)`` with ``a (a\\b) = b (b\\a) = a v b``."""
        a_over_b = list(b)
        b_over_a = []
        for s in a:
            a_over_b, b_over_s = self._complement_simple(s, a_over_b)
            b_over_a.append(b_over_s)
        return self.normalize(a_over_b), self.normalize(b_over_a)

    def join_elements(self, a: tuple, b: tuple) -> tuple:
        return self.multiply(a, self.complement_elements(a, b)[0])
