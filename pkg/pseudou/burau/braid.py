from typing import List
from typing import Sequence

import numpy as np

from ..exceptions import DomainError


class BraidWord:
    """
    Word in the Artin generators of B_k: letter i stands for σ_i, −i for σ_i⁻¹,
    1 ≤ i ≤ k − 1.
    """

    __slots__ = ("_strands", "_letters")

    def __init__(self, strands: int, letters: Sequence[int] = ()):
        if strands < 2:
            raise DomainError(f"braids need at least 2 strands, got {strands}")
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x == 0 or abs(x) >= strands:
                raise DomainError(f"generator index {x} out of range for {strands} strands")
        self._strands = int(strands)
        self._letters = letters

    @classmethod
    def pure_generator(cls, strands: int, i: int, j: int) -> "BraidWord":
        """A_ij = σ_{j−1}···σ_{i+1} σ_i² σ_{i+1}⁻¹···σ_{j−1}⁻¹, 1 ≤ i < j ≤ k."""
        if not 1 <= i < j <= strands:
            raise DomainError(f"need 1 ≤ i < j ≤ {strands}, got ({i}, {j})")
        up = list(range(j - 1, i, -1))
        return cls(strands, up + [i, i] + [-x for x in reversed(up)])

    @classmethod
    def random(cls, strands: int, length: int, rng: np.random.Generator, pure: bool = False) -> "BraidWord":
        """`length` random letters, or `length` random pure generators and inverses."""
        if not pure:
            indices = rng.integers(1, strands, size=length)
            signs = rng.choice([-1, 1], size=length)
            return cls(strands, [int(i * s) for i, s in zip(indices, signs)])
        word = cls(strands)
        for _ in range(length):
            i, j = sorted(rng.choice(np.arange(1, strands + 1), size=2, replace=False))
            generator = cls.pure_generator(strands, int(i), int(j))
            word = word * (generator if rng.random() < 0.5 else generator.inverse())
        return word

    @property
    def strands(self) -> int:
        return self._strands

    @property
    def letters(self) -> List[int]:
        return list(self._letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self._strands, [-x for x in reversed(self._letters)])

    def permutation(self) -> List[int]:
        """Image of each strand position, 0-based."""
        perm = list(range(self._strands))
        for x in self._letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def is_pure(self) -> bool:
        return self.permutation() == list(range(self._strands))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self._strands:
            raise DomainError("cannot concatenate braids on different strand counts")
        return BraidWord(self._strands, self._letters + tuple(other.letters))

    def __len__(self):
        return len(self._letters)

    def __eq__(self, other):
        return isinstance(other, BraidWord) and (self._strands, self._letters) == (
            other.strands,
            tuple(other.letters),
        )

    def __hash__(self):
        return hash((self._strands, self._letters))

    def __repr__(self):
        return f"BraidWord({self._strands}, {list(self._letters)})"

    def to_json(self):
        return {"strands": self._strands, "letters": list(self._letters)}
