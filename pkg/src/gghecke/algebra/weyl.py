"""Signed permutations: the finite Weyl groups S_n and W(C_n).

A signed permutation is stored in window notation ``images = (w(1), ..., w(n))``
with ``w(j) = +-k`` meaning ``e_j -> +-e_k``. Simple reflections:

* ``s_i`` (1 <= i < n) swaps positions i and i+1;
* ``s_n`` negates position n.

Products compose as functions, ``(uv)(j) = u(v(j))``.
"""

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, List, Tuple

from ..errors import ParameterError


class SignedPermutation:
    """Element of the hyperoctahedral group W(C_n) (or of S_n when unsigned)."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Tuple[int, ...]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if sorted(abs(x) for x in images) != list(range(1, n + 1)):
            raise ParameterError(f"{images} is not a signed permutation of 1..{n}")
        self.images = images
        self._hash = hash(images)

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(1 if x > 0 else -1 for x in self.images)

    @property
    def is_signed(self) -> bool:
        return any(x < 0 for x in self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "SignedPermutation":
        """The simple reflection s_i, 1 <= i <= n."""
        images = list(range(1, n + 1))
        if 1 <= i < n:
            images[i - 1], images[i] = images[i], images[i - 1]
        elif i == n and n >= 1:
            images[n - 1] = -n
        else:
            raise ParameterError(f"s_{i} is not a simple reflection of W(C_{n})")
        return cls(tuple(images))

    @classmethod
    def from_word(cls, n: int, word: Tuple[int, ...]) -> "SignedPermutation":
        result = cls.identity(n)
        for i in word:
            result = result * cls.simple(n, i)
        return result

    @classmethod
    def all_elements(cls, n: int, signed: bool = True) -> List["SignedPermutation"]:
        """All of W(C_n) (or S_n), ordered by (length, reduced word)."""
        elements = []
        sign_choices = product((1, -1), repeat=n) if signed else [(1,) * n]
        sign_choices = list(sign_choices)
        for perm in permutations(range(1, n + 1)):
            for signs in sign_choices:
                elements.append(cls(tuple(s * p for s, p in zip(signs, perm))))
        return sorted(elements, key=lambda w: w.sort_key())

    # ----- group structure -----

    def __call__(self, j: int) -> int:
        """Image of the signed letter j."""
        image = self.images[abs(j) - 1]
        return image if j > 0 else -image

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        if other.n != self.n:
            raise ParameterError(f"cannot compose elements of rank {self.n} and {other.n}")
        return SignedPermutation(tuple(self(x) for x in other.images))

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.n
        for j, image in enumerate(self.images, start=1):
            images[abs(image) - 1] = j if image > 0 else -j
        return SignedPermutation(tuple(images))

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def length(self) -> int:
        return _length(self.images)

    def reduced_word(self) -> Tuple[int, ...]:
        """Reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}."""
        return _reduced_word(self.images)

    def act_on_exponents(self, exponents: Tuple[int, ...]) -> Tuple[int, ...]:
        """Image of an exponent vector under the linear action e_j -> w(e_j)."""
        result = [0] * self.n
        for j, a in enumerate(exponents, start=1):
            image = self.images[j - 1]
            result[abs(image) - 1] = a if image > 0 else -a
        return tuple(result)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.length(), self.reduced_word()

    def to_text(self) -> str:
        word = self.reduced_word()
        if not word:
            return "1"
        return "*".join(f"T{i}" for i in word)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedPermutation({self.images})"


def _to_type_b_window(images: Tuple[int, ...]) -> Tuple[int, ...]:
    """Conjugate by the reversal j -> n+1-j.

    Moves the sign-changing generator from position n to position 1, where the
    standard inversion formula for type B applies.
    """
    n = len(images)

    def flip(x: int) -> int:
        return (n + 1 - x) if x > 0 else -(n + 1 + x)

    return tuple(flip(images[n - j]) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def _length(images: Tuple[int, ...]) -> int:
    window = _to_type_b_window(images)
    n = len(window)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if window[i] > window[j])
    negative_sums = sum(1 for i in range(n) for j in range(i, n) if window[i] + window[j] < 0)
    return inversions + negative_sums


@lru_cache(maxsize=None)
def _reduced_word(images: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(images)
    word: List[int] = []
    current = SignedPermutation(images)
    length = current.length()
    while length:
        for i in range(1, n + 1):
            candidate = SignedPermutation.simple(n, i) * current
            if candidate.length() < length:
                word.append(i)
                current = candidate
                length -= 1
                break
        else:  # pragma: no cover - a nonidentity element always has a left descent
            raise RuntimeError(f"no descent found for {images}")
    return tuple(word)


def iter_simple_reflections(n: int, signed: bool = True) -> Iterator[int]:
    """Indices of the simple reflections of S_n (1..n-1) or W(C_n) (1..n)."""
    return iter(range(1, n + 1 if signed else n))


__all__ = [
    "SignedPermutation",
    "iter_simple_reflections",
]
