"""
Rich words and C-poor words
===========================

Rich words have as many palindromic factors as possible.  They are exactly
the words whose privileged and palindromic factors coincide.  C-poor words
sit at the other end: they have as few closed factors as possible.
"""

from privwords import (
    binary_c_poor_via_conjugate,
    c_poor_via_xy,
    complete_return_factors,
    richness_report,
)

# ``0110`` is rich; ``0120`` is not, and the report names a factor that
# separates the two factor sets.
for w in ("0110", "0120", "abcab"):
    print(richness_report(w))

# The closed factors of 1^k 0 1^k 0, empty word included.
for k in range(1, 5):
    w = "1" * k + "0" + "1" * k + "0"
    rep = complete_return_factors(w)
    print(k, w, rep.count, list(rep.closed_factors))

# Three ways to recognise a C-poor word.  For binary words it amounts to a
# conjugate of the form a^i b^j.
for w in ("0001111", "0110", "0101", "00111000"):
    rep = complete_return_factors(w)
    print(w, rep.is_c_poor, c_poor_via_xy(w), binary_c_poor_via_conjugate(w))
