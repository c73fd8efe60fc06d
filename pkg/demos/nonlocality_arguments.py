"""Hardy's and Cabello's nonlocality-without-inequality arguments.

For a two-qubit pure state cos(b)|00> + sin(b)e^{ig}|11>, local realism
forces q4 <= q1 + q2 + q3 for the four joint probabilities built from
observables F, D / G, E.  Hardy zeroes q1, q2, q3 and banks on q4 > 0;
Cabello relaxes q1 (and then also q2) giving larger success gaps for
most states.  The script finds each optimum over states and settings.
"""

import numpy as np

from spinsim import (
    SchmidtState,
    cabello3_max,
    cabello_max,
    cabello_probs,
    hardy_max,
)
from spinsim.nonlocality import optimize_over_states, solved_angles

print("=== success probabilities over all states ===")
hardy = optimize_over_states("hardy")
print(f"Hardy   q4 | q1=q2=q3=0 : max {hardy.value:.4f} "
      f"at Schmidt ratio {1 / np.tan(hardy.argmax[0]):.3f}"
      f"  (the golden-ratio value (5 sqrt(5) - 11)/2 = {(5 * np.sqrt(5) - 11) / 2:.4f})")
cab = optimize_over_states("cabello")
print(f"Cabello q4 - q1 | q2=q3=0: max {cab.value:.4f} "
      f"at cos(beta) = {np.cos(cab.argmax[0]):.3f}, theta_D = theta_E = {cab.argmax[1]:.3f}")
cab3 = optimize_over_states("cabello3")
print(f"Cabello q4 - q1 - q2 | q3=0: max {cab3.value:.4f} "
      f"at beta = {cab3.argmax[0]:.3f} rad, thetas = "
      f"({cab3.argmax[1]:.3f}, {cab3.argmax[2]:.3f}, {cab3.argmax[3]:.3f})\n")

print("=== the arguments at particular states ===")
for cos_beta in (0.94, 0.7071, 0.485, 0.2):
    state = SchmidtState(float(np.arccos(cos_beta)))
    h = hardy_max(state).value
    c2 = cabello_max(state).value
    c3 = cabello3_max(state).value
    note = "  <- maximally entangled" if abs(cos_beta - 0.7071) < 1e-3 else ""
    print(f"cos(beta) = {cos_beta:<6} hardy {h:.4f}  cabello {c2:.4f}  "
          f"cabello-3 {c3:.4f}{note}")
print("(Hardy and the two-probability argument die at maximal entanglement;")
print(" the three-probability relaxation still yields a gap of 1/8 there)\n")

print("=== anatomy of one optimal configuration ===")
state = SchmidtState(float(np.arccos(0.485)))
best = cabello_max(state)
angles = solved_angles(state, best.argmax[0], best.argmax[1])
q1, q2, q3, q4 = cabello_probs(state, angles)
print(f"cos(beta) = 0.485, theta_D = theta_E = {best.argmax[0]:.4f}:")
print(f"  q1 = {q1:.5f} (F=+1, G=+1)")
print(f"  q2 = {q2:.2e} (D=+1, G=-1, forced to zero)")
print(f"  q3 = {q3:.2e} (F=-1, E=+1, forced to zero)")
print(f"  q4 = {q4:.5f} (D=+1, E=+1)")
print(f"  gap q4 - q1 = {q4 - q1:.5f}: locally impossible, quantum fact")
