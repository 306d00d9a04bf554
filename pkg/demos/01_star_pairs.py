"""Star pairs: arrowing on regular hosts is a factor-decomposition question.

An (a+b-2)-regular graph arrows (K_{1,a}, K_{1,b}) exactly when its edges do
not split into an (a-1)-regular and a (b-1)-regular spanning subgraph, so the
whole decision collapses to one k-factor query.  Odd cycles separate star
pairs of the same total size, and the three-stage extremal construction
separates the rest.
"""

from ramseylab import (
    arrows,
    belck_check,
    cycle,
    factor_extremal_graph,
    has_k_factor,
    star,
    star_pair_regular_arrows,
)

print("== odd cycles ==")
for n in (5, 6, 7, 8):
    c = cycle(n)
    by_factor = star_pair_regular_arrows(c, 2, 2)
    by_search = arrows(c, star(2), star(2)).arrows
    print(f"C_{n} -> (K_1,2, K_1,2): factor route {by_factor}, search route {by_search}")
    assert by_factor == by_search

print()
print("== the 3-regular extremal graph F(3,3) ==")
f, trace, cert = factor_extremal_graph(p=1, q=3, r=3)
print(f"F has {f.n} vertices, {f.m} edges; every degree is 3")
print(f"3-factor found: {has_k_factor(f, 3) is not None}")
print(f"1-factor found: {has_k_factor(f, 1) is not None}")
print(f"hub D = {list(trace.hub)} leaves {cert.odd_component_count} odd components,")
print(f"so p|D| = {1 * len(cert.D)} < {cert.odd_component_count} certifies no 1-factor")
assert belck_check(f, trace.hub, 1) is not None

# F is 3-regular, so it decides star pairs with a+b-2 = 3: having a 3-factor
# but no 1-factor, it arrows (K_1,2, K_1,3) yet misses (K_1,4, K_1,1).
print()
print("F -> (K_1,2, K_1,3):", star_pair_regular_arrows(f, 2, 3))
print("F -> (K_1,4, K_1,1):", star_pair_regular_arrows(f, 4, 1))
