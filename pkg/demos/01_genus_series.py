"""The two genus power series and their exact coefficient families.

Everything downstream is built from (t/2)/sinh(t/2) and t/tanh(t).  Their
coefficients are rational multiples of Bernoulli numbers, and the pair is
locked together by an exact 2-power relation.
"""

from fractions import Fraction

from kreckstolz import ahat_coeff, bernoulli_unsigned, l_coeff, mixing_constant

print("classical unsigned Bernoulli numbers:")
for j in range(1, 8):
    print(f"  B_{j} = {bernoulli_unsigned(j)}")

print("\ncoefficients of (t/2)/sinh(t/2) and t/tanh(t):")
for j in range(1, 6):
    print(f"  t^{2*j}:  ahat = {ahat_coeff(j)!s:>20}   b = {l_coeff(j)}")

print("\nthe exact relation ahat_2j = (1 - 2^(2j-1))/2^(4j-1) * b_2j:")
for j in range(1, 6):
    factor = Fraction(1 - 2 ** (2 * j - 1), 2 ** (4 * j - 1))
    assert ahat_coeff(j) == factor * l_coeff(j)
    print(f"  j={j}: factor {factor}")

print("\nmixing constants a_m = 1/(2^(2m+1)(2^(2m-1)-1)):")
for m in range(1, 5):
    print(f"  a_{m} = {mixing_constant(m)}")
