"""Stabilizers, minimal class weights and [[n,1,d]]_q codes."""
from amecodes import (PauliString, build_code, certify_distance, min_class_weight,
                      search_incompressible, stabilizers_for)
from amecodes.qecc import code_stabilizer_generators

stab = stabilizers_for(6, 5, paper_compat=False)
for s in stab.generators:
    print(s)

m = PauliString.parse("I.I.X.Z.I.Z", 5)
w, real = min_class_weight(m, stab)
print(m, "-> weight", w, "realized by", real)

code = build_code(stab, m)
print(code.label, "certified d =", certify_distance(code))
for g in code_stabilizer_generators(code):
    print("  ", g)

# at q = 7 the same string compresses; search for one that does not
stab7 = stabilizers_for(6, 7, paper_compat=False)
print(min_class_weight(PauliString.parse("I.I.X.Z.I.Z", 7), stab7).weight)
hit = search_incompressible(6, 7, 3, first=True, paper_compat=False)[0]
print(hit, certify_distance(build_code(stab7, hit)))

# the largest case: [[8,1,4]]_7
stab8 = stabilizers_for(8, 7, paper_compat=False)
code8 = build_code(stab8, PauliString.parse("I.I.I.Z.I.Z.Z.X", 7))
print(code8.label, certify_distance(code8))
