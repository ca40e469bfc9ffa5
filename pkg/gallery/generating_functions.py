"""
Bernoulli numbers behind the coefficients
=========================================

The per-family coefficient differences come out of recurrences, yet
they are all rescaled Bernoulli numbers. Truncated power series make
the check exact.
"""
from math import factorial

from coxflag.exact import bernoulli, genocchi
from coxflag.reduction import coefficients as C
from coxflag.reduction.identities import (beta_series, beta_series_closed,
                                          verify_generating_functions)

print(" n   B_n        G_n   beta_n (recurrence)   B_n/n! (1 - 2^(1-n))")
for n in range(2, 11):
    print(f"{n:2d}   {str(bernoulli(n)):9s} {str(genocchi(n)):6s} {str(C.beta(n)):20s}  {C.beta_closed(n)}")

order = 12
print("\nrecurrence series:", beta_series(order))
print("closed form      :", beta_series_closed(order))

rep = verify_generating_functions(order=24, max_n=12)
print("\nall generating-function checks pass:", rep.ok)
