"""Exact counting of subset, multisubset and partition sums in finite abelian groups."""

from ._core import (
    Group,
    __version__,
    brute_multiset_count,
    brute_subset_count,
    multiset_count,
    multiset_count_coprime,
    multiset_count_peeled,
    multiset_count_prime_power,
    multiset_table,
    partition_count,
    subset_count,
    subset_table,
)

__all__ = [
    "Group",
    "__version__",
    "brute_multiset_count",
    "brute_subset_count",
    "multiset_count",
    "multiset_count_coprime",
    "multiset_count_peeled",
    "multiset_count_prime_power",
    "multiset_table",
    "partition_count",
    "subset_count",
    "subset_table",
]
