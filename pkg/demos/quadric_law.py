"""The quadric z0^2 + ... + zn^2: mu = 1 in every dimension.

Its link is the unit tangent bundle of S^n, and the contact bundle on it
is trivial exactly when n = 2 or n is odd.
"""
from milnorkit import Ring, GermDefinition, milnor_number, decide_contact_triviality
from milnorkit.milnor import brieskorn_polynomial

for n in range(2, 13):
    ring = Ring([f"z{i}" for i in range(n + 1)])
    f = brieskorn_polynomial(ring, [2] * (n + 1))
    mu = milnor_number(GermDefinition(ring, [f])).mu  # always 1
    v = decide_contact_triviality(n, mu)
    # residue of mu - (-1)^(n-1) modulo (n-1)!
    print(f"n={n:2d}  mu={mu}  (n-1)!={v.modulus:>9}  residue={v.residue:>9}  trivial={v.trivial}")
