# pi_k U(n) around the edge of the stable range
from milnorkit.obstruction import homotopy_group_u

print(" n  pi_{2n-1}U(n)  pi_{2n-2}U(n-1)  pi_{2n-2}U(n)")
for n in range(2, 9):
    print(f"{n:2d}  {str(homotopy_group_u(2*n - 1, n)):>13}  "
          f"{str(homotopy_group_u(2*n - 2, n - 1)):>15}  {str(homotopy_group_u(2*n - 2, n)):>13}")

# the boundary map Z -> Z/(n-1)! is reduction, so the obstruction of degree d
# vanishes iff (n-1)! divides d
from milnorkit.obstruction import obstruction_class
print([obstruction_class(d, 4) for d in range(0, 13)])
