# superhc/utils/products_dir/graded_sign.py
# In[1]: Imports
from typing import Sequence

from .enumerate_shuffles import ShufflePermutation


# In[2]: Koszul sign of a shuffle
def graded_sign(sigma: ShufflePermutation, parities: Sequence[int]) -> int:
    """
    Signature of sigma times (−1) for every inverted pair of odd elements.

    Args:
        sigma: Shuffle permutation
        parities: parities[label - 1] is the parity of the element with that label

    Raises:
        ValueError: If the parity list does not match p + q
    """
    if len(parities) != sigma.p + sigma.q:
        raise ValueError(f"Expected {sigma.p + sigma.q} parities, got {len(parities)}")
    sign = sigma.sign
    arr = sigma.arrangement
    for i in range(len(arr)):
        if not parities[arr[i] - 1]:
            continue
        for j in range(i + 1, len(arr)):
            if arr[i] > arr[j] and parities[arr[j] - 1]:
                sign = -sign
    return sign
