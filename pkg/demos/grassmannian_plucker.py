"""Weights on the resolution of the Grassmannian of planes in 5-space.

The homogeneous coordinate ring of Gr(2,5) in its Pluecker embedding is cut
out by five quadratic relations among the ten coordinates p_ij.  The diagonal
torus of GL_5 acts with weight e_i + e_j on p_ij.  Here the weights are fed
in at the TOP of the resolution (the last free module, a one-dimensional
piece of weight (2,2,2,2,2)) and pushed forward through dual maps down to
the ground ring.  As a bonus, the degree-2 component of the coordinate ring
is identified by listing its fifty weights.
"""

from collections import Counter

from torusweights import (
    FreeModuleSpec,
    ModuleTermOrder,
    PolyMatrix,
    RingSpec,
    parse_polynomial,
    propagate_graded_components,
    propagate_resolution,
)

names = ["p_12", "p_13", "p_23", "p_14", "p_24", "p_34", "p_15", "p_25", "p_35", "p_45"]
pairs = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
weights = []
for i, j in pairs:
    w = [0] * 5
    w[i - 1] = 1
    w[j - 1] = 1
    weights.append(w)

ring = RingSpec(names, [[1]] * 10, weights)


def poly(text):
    return parse_polynomial(ring, text)


relations = {
    "f_1234": "p_23*p_14-p_13*p_24+p_12*p_34",
    "f_1235": "p_23*p_15-p_13*p_25+p_12*p_35",
    "f_1245": "p_24*p_15-p_14*p_25+p_12*p_45",
    "f_1345": "p_34*p_15-p_14*p_35+p_13*p_45",
    "f_2345": "p_34*p_25-p_24*p_35+p_23*p_45",
}

F0 = FreeModuleSpec(ring, [[0]])
F1 = FreeModuleSpec(ring, [[2]] * 5)
F2 = FreeModuleSpec(ring, [[3]] * 5)
F3 = FreeModuleSpec(ring, [[5]])

d1 = PolyMatrix(F0, F1, [[poly(t) for t in relations.values()]])
d2 = PolyMatrix(
    F1,
    F2,
    [
        [poly("-p_15"), poly("p_25"), poly("p_35"), poly("p_45"), poly("0")],
        [poly("p_14"), poly("-p_24"), poly("-p_34"), poly("0"), poly("-p_45")],
        [poly("-p_13"), poly("p_23"), poly("0"), poly("-p_34"), poly("p_35")],
        [poly("p_12"), poly("0"), poly("p_23"), poly("p_24"), poly("-p_25")],
        [poly("0"), poly("-p_12"), poly("-p_13"), poly("-p_14"), poly("p_15")],
    ],
)
d3 = PolyMatrix(
    F2,
    F3,
    [
        [poly("-(" + relations["f_2345"] + ")")],
        [poly("-(" + relations["f_1345"] + ")")],
        [poly(relations["f_1245"])],
        [poly("-(" + relations["f_1235"] + ")")],
        [poly("-(" + relations["f_1234"] + ")")],
    ],
)

print(__doc__)
order = ModuleTermOrder("top-up")
result = propagate_resolution([d1, d2, d3], 3, [(2, 2, 2, 2, 2)], order)
labels = [
    "trivial",
    "wedge^4 C^5 (degree 2)",
    "mixed shape (2,1,1,1,1) (degree 3)",
    "square of the determinant (degree 5)",
]
for i, ws in enumerate(result.per_module):
    print("F%d weights: %s" % (i, list(ws)))
    print("    -> %s" % labels[i])

print("\nDegree-2 component of the coordinate ring:")
component = propagate_graded_components((2,), d1, [(0, 0, 0, 0, 0)], order)
print("  %d weights; highest one (sorted) is %s" % (len(component), max(component)))
tally = Counter(component)
print("  sample multiplicities: (2,2,0,0,0) -> %d, (1,1,1,1,0) -> %d" % (
    tally[(2, 2, 0, 0, 0)], tally[(1, 1, 1, 1, 0)]))
print("  this is the weight multiset of the shape-(2,2) representation of GL_5.")
