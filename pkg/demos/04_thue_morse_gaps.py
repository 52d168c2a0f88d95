"""
Privileged complexity of the Thue-Morse word
============================================

The Thue-Morse word has no privileged factors of odd length from 5 on, and
its even counts drop to zero over longer and longer stretches.
"""

import numpy as np

from privwords import parse_source, profile_source
from privwords.cli import zero_runs

tm = parse_source("tm")
prof = profile_source(tm, 260)
print("exact up to", prof.valid_to)

counts = np.array(prof.counts)
even = counts[2:71:2].reshape(7, 5).T
print("even n = 2..70, one column per block of ten:")
print(even)

print("odd nonzero from 5 on:", [n for n in range(5, 261, 2) if counts[n]])

# Maximal runs of zeros past 80.  The long one ends at 257.
for a, b in zero_runs(prof, 80, 260):
    if b > a:
        print(f"{a}..{b}")
print("A_188 =", prof[188], " A_258 =", prof[258])
