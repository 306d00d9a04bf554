"""Tree-versus-triangle Ramsey numbers follow the linear formula 2(n-1)+1.

The pruned decider proves both directions: K_{2n-1} arrows (T, K_3), and the
search hands back an explicit free coloring of K_{2n-2}.
"""

from ramseylab import arrows, clique, coloring_is_free, ramsey_number
from ramseylab.enumeration import trees_up_to_vertices

K3 = clique(3)

for t in trees_up_to_vertices(5):
    r = ramsey_number(t, K3, cap=12)
    print(f"tree on {t.n} vertices {t.edges}: R = {r} (formula {2 * (t.n - 1) + 1})")
    assert r == 2 * (t.n - 1) + 1
    if r > 1:
        verdict = arrows(clique(r - 1), t, K3)
        assert not verdict.arrows
        reds = len(verdict.witness.red)
        print(f"  K_{r - 1} witness: {reds} red / {verdict.witness.host.m - reds} blue edges, "
              f"free: {coloring_is_free(clique(r - 1), verdict.witness, t, K3)}")
