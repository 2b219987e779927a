# superhc/utils/products_dir/enumerate_shuffles.py
# In[1]: Imports
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

SHUFFLE = "shuffle"
CYCLIC_SHUFFLE = "cyclic_shuffle"


# In[2]: Shuffle permutations
@dataclass(frozen=True)
class ShufflePermutation:
    """
    A (p, q)-shuffle given by its arrangement: the labels 1..p+q in slot order.

    Labels 1..p belong to the first block and p+1..p+q to the second. ``sign`` is the
    ungraded signature.
    """

    p: int
    q: int
    arrangement: Tuple[int, ...]
    kind: str
    sign: int

    @property
    def permutation(self) -> Tuple[int, ...]:
        """One-line notation σ(1..p+q): the slot (1-based) of each label."""
        slots = [0] * (self.p + self.q)
        for slot, label in enumerate(self.arrangement, start=1):
            slots[label - 1] = slot
        return tuple(slots)


def _interleavings(a: Sequence[int], b: Sequence[int]) -> Iterator[List[int]]:
    if not a:
        yield list(b)
    elif not b:
        yield list(a)
    else:
        for rest in _interleavings(a[1:], b):
            yield [a[0]] + rest
        for rest in _interleavings(a, b[1:]):
            yield [b[0]] + rest


def _signature(arrangement: Sequence[int]) -> int:
    inversions = sum(
        1
        for i in range(len(arrangement))
        for j in range(i + 1, len(arrangement))
        if arrangement[i] > arrangement[j]
    )
    return -1 if inversions % 2 else 1


def _rotations(block: List[int]) -> List[List[int]]:
    if not block:
        return [[]]
    return [block[r:] + block[:r] for r in range(len(block))]


# In[3]: Enumeration
def enumerate_shuffles(p: int, q: int, kind: str = SHUFFLE) -> List[ShufflePermutation]:
    """
    All (p, q)-shuffles, or all cyclic (p, q)-shuffles.

    Cyclic shuffles rotate each block, shuffle the rotated blocks, and keep the
    arrangements where label 1 comes before label p+1.

    Args:
        p: Size of the first block
        q: Size of the second block
        kind: "shuffle" or "cyclic_shuffle"

    Returns:
        list: Duplicate-free ShufflePermutations in generation order

    Raises:
        ValueError: On negative sizes or an unknown kind
    """
    if p < 0 or q < 0:
        raise ValueError(f"Shuffle sizes must be non-negative, got ({p}, {q})")
    first = list(range(1, p + 1))
    second = list(range(p + 1, p + q + 1))

    if kind == SHUFFLE:
        arrangements = list(_interleavings(first, second))
    elif kind == CYCLIC_SHUFFLE:
        arrangements = []
        for a in _rotations(first):
            for b in _rotations(second):
                for arr in _interleavings(a, b):
                    if p and q and arr.index(1) > arr.index(p + 1):
                        continue
                    arrangements.append(arr)
    else:
        raise ValueError(f"Unknown shuffle kind: {kind}")

    return [ShufflePermutation(p, q, tuple(arr), kind, _signature(arr)) for arr in arrangements]
