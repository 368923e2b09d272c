"""A complete orthogonal basis of AME states: M(a)|Psi>."""
import itertools

from amecodes import ame_basis_element, build_ame, get_field, inner_product, mds_generator

state = build_ame(mds_generator(4, get_field(3)))
basis = [ame_basis_element(state, a) for a in itertools.product(range(3), repeat=4)]

# inner products are exact combinations of cube roots of unity
print(inner_product(basis[0], basis[0]))
print(inner_product(basis[0], basis[5]), "->", inner_product(basis[0], basis[5]).is_zero())

zero = sum(inner_product(b, c).is_zero() for b, c in itertools.combinations(basis, 2))
print(zero, "of", 81 * 80 // 2, "pairs orthogonal")
