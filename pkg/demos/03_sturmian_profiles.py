"""
Sturmian and episturmian profiles
=================================

Privileged complexity alternates 1, 2, 1, 2, ... exactly on Sturmian words.
Episturmian words over a larger alphabet alternate between 1 and the
alphabet size, but that profile alone does not pin them down.
"""

import numpy as np

from privwords import parse_source, profile_source, jsp_check, property_flags
from privwords.qcomplexity import right_special_factors

for name in ("fibonacci", "standard:2,(1)", "standard:(3,1)"):
    prof = profile_source(parse_source(name), 40)
    print(f"{name:16s}", prof.counts[:12], "alternating:", jsp_check(prof))

# Factor complexity n + 1 comes with the profile.
fib = parse_source("fibonacci")
fc = np.array(profile_source(fib, 30, None).counts)
print("C_n - n:", np.unique(fc - np.arange(31)))

# The four properties that make up the characterisation, at length 8.
print(property_flags(fib.prefix(5000), 8))

# Tribonacci and the fixed point of a -> c, b -> ca, c -> caba share the
# 1, 3, 1, 3, ... profile, yet the latter has two right special letters.
for name in ("tribonacci", "alpha"):
    src = parse_source(name)
    print(name, profile_source(src, 20).counts, right_special_factors(src.prefix(5000), 1))

# A periodic word cannot alternate: (0001)^omega.
print(profile_source(parse_source("periodic:0001"), 12).counts)
