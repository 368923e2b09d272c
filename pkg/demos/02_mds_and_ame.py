"""From a Singleton array to a minimal-support AME state."""
from amecodes import build_ame, closed_form, get_field, mds_generator, singleton_array, verify_ame
from amecodes.codes import latex_matrix, min_distance

f5 = get_field(5)
arr = singleton_array(f5)
for row in arr.rows:
    print(*row)

code = mds_generator(6, f5)
print(code.generator)
print(code.parity_check())
print("d =", min_distance(code))

state = build_ame(code)
print(closed_form(code))
print(len(state), "terms; AME:", verify_ame(state))

# GF(4): the extended array admits n = 6 with q = 4
code4 = mds_generator(6, get_field(4))
print(latex_matrix(code4))
print(closed_form(code4))
print(verify_ame(build_ame(code4)))
