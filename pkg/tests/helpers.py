from hypothesis import strategies as st

from schubsing.perm import Permutation

# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: dict = {}


def perms(min_n: int = 1, max_n: int = 6):
    """Hypothesis strategy for permutations of size min_n..max_n."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Permutation))


def perm_pairs(n_values=(3, 4, 5)):
    """Strategy for two permutations of a common size."""
    return st.sampled_from(n_values).flatmap(
        lambda n: st.tuples(st.permutations(range(1, n + 1)).map(Permutation),
                            st.permutations(range(1, n + 1)).map(Permutation)))
