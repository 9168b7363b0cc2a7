# Milnor numbers three ways: Jacobian colength, Brieskorn, weighted-homogeneous
from milnorkit import Ring, parse_expression
from milnorkit.milnor import (milnor_number_hypersurface, brieskorn_milnor,
                              is_weighted_homogeneous, weighted_homogeneous_milnor)

ring = Ring(["x", "y", "z"])

f = parse_expression("x^2 + y^3 + z^5", ring)   # a Brieskorn polynomial
print(milnor_number_hypersurface(f).mu, brieskorn_milnor([2, 3, 5]))  # 8 8

# E7 = x^3 + x*y^3 + z^2, weighted homogeneous of degree 18 for weights (6, 4, 9)
e7 = parse_expression("x^3 + x*y^3 + z^2", ring)
d = is_weighted_homogeneous(e7, (6, 4, 9))
print(d, weighted_homogeneous_milnor((6, 4, 9), d), milnor_number_hypersurface(e7).mu)  # 18 7 7

# a nonisolated germ has infinite colength
from milnorkit.milnor import NonIsolatedError
try:
    milnor_number_hypersurface(parse_expression("x^2*y", ring))
except NonIsolatedError as exc:
    print("x^2*y:", exc)
