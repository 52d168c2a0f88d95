"""
Privileged words and the counting law
=====================================

A word is privileged when it is empty, a single letter, or a complete first
return to a shorter privileged word.  Every word has exactly one more
distinct privileged factor than its length.
"""

from privwords import privileged_factors, privileged_prefix_table, introduced_privileged_factor
from privwords.oracle import naive_is_privileged

w = "0120"

# The factors themselves, shortest first.  ``0120`` has five of them.
print(list(privileged_factors(w)))

# Each position introduces exactly one new privileged factor: the longest
# privileged suffix of the prefix ending there.
for i in range(1, len(w) + 1):
    print(i, w[:i], "->", introduced_privileged_factor(w, i))

# The prefix table gives the decision for every prefix in one linear pass.
table = privileged_prefix_table("abaababaab")
print(table.is_priv)

# The fast decider agrees with the literal recursive definition.
for u in ("aba", "abaa", "aabaa", "abcab"):
    print(u, naive_is_privileged(u))

# A quick sweep of the counting law over random words.
import random

rng = random.Random(1)
for _ in range(5):
    u = "".join(rng.choice("ab") for _ in range(rng.randint(5, 40)))
    print(len(u), len(privileged_factors(u)))
