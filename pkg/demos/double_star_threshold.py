"""
Coloring a host at the double-star threshold
============================================

S_{n,m} is the tree with adjacent centers of degrees n+1 and m+1.  Below
(n+1)(m+1)/2 + (m+1)^2/2 edges a two-coloring with no monochromatic
S_{n,m} always exists, and the construction is explicit: order vertices
by degree, split high against low.
"""

import math

from sizeramsey import certify, make_double_star, strategy_bound
from sizeramsey.graphs import Graph
import random

n, m = 3, 2
target = make_double_star(n, m)
bound = strategy_bound("double_star_2col", target, 2)
print(f"target S_{{{n},{m}}} on {target.vertex_count} vertices")
print(f"edge threshold: {bound} = (n+1)(m+1)/2 + (m+1)^2/2")

# any host strictly under the threshold will do; take a dense random one
e_host = math.ceil(bound) - 1
rng = random.Random(7)
nv = 8
while nv * (nv - 1) // 2 < e_host:
    nv += 1
pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
host = Graph(nv, rng.sample(pairs, e_host))
print(f"host: {nv} vertices, {e_host} edges")

cert = certify("double_star_2col", host, target, 2)
print(f"verdict: {cert.verdict}")
parts = {name: len(vs) for name, vs in cert.plan.parts.items()}
print(f"vertex split: {parts}")
print("color classes:", {c: len(es) for c, es in cert.coloring.classes().items()})
