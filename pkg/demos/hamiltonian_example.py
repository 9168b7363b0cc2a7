"""Hamiltonian fields on C^4 are tangent to every fibre of f, so their GSV index is 0."""
from milnorkit import Ring, GermDefinition, parse_expression, format_polynomial
from milnorkit.index import hamiltonian_field, directional_derivative, gsv_index
from milnorkit.obstruction import decide_foliation_normal_triviality

ring = Ring(["z1", "z2", "z3", "z4"])
f = parse_expression("z1^2 + z2^2 + z3^2 + z4^2 + z1*z2^3", ring)

v = hamiltonian_field(f)
print("v     =", [format_polynomial(c) for c in v.components])
print("df(v) =", format_polynomial(directional_derivative(v, f)))  # exactly 0

germ = GermDefinition(ring, [f], vector_field=v.components)
g = gsv_index(germ)
print("gsv   =", g.value, f"({g.kind})")

# X is three-dimensional, so the even-index test applies to the foliation by v
print("normal bundle trivial:", decide_foliation_normal_triviality(g.value).trivial)
