"""Walk the weights of a torus along the Koszul resolution of three linear forms.

The ideal (x1, x1+x2, x1+x3) cuts out the origin of affine 3-space; its
generators are a regular sequence, so the Koszul complex resolves the
quotient.  The diagonal torus scales each variable separately, and the
resolution inherits the action.  Starting from the trivial weight on the
ground ring we recover, module by module, the weights of the exterior powers
of the 3-dimensional standard representation.
"""

from torusweights import (
    FreeModuleSpec,
    ModuleTermOrder,
    PolyMatrix,
    RingSpec,
    parse_polynomial,
    polynomial_to_string,
    propagate_resolution,
)

ring = RingSpec(
    var_names=["x1", "x2", "x3"],
    var_degrees=[[1], [1], [1]],
    var_weights=[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    term_order="grevlex",
)


def poly(text):
    return parse_polynomial(ring, text)


def show_matrix(label, matrix):
    print("%s =" % label)
    for row in matrix.entries:
        print("   [", "  ".join(polynomial_to_string(ring, p) for p in row), "]")


F0 = FreeModuleSpec(ring, [[0]])
F1 = FreeModuleSpec(ring, [[1]] * 3)
F2 = FreeModuleSpec(ring, [[2]] * 3)
F3 = FreeModuleSpec(ring, [[3]])

d1 = PolyMatrix(F0, F1, [[poly("x1"), poly("x1+x2"), poly("x1+x3")]])
d2 = PolyMatrix(
    F1,
    F2,
    [
        [poly("-x1-x2"), poly("-x1-x3"), poly("0")],
        [poly("x1"), poly("0"), poly("-x1-x3")],
        [poly("0"), poly("x1"), poly("x1+x2")],
    ],
)
d3 = PolyMatrix(F2, F3, [[poly("x1+x3")], [poly("-x1-x2")], [poly("x1")]])

print(__doc__)
show_matrix("d1", d1)
show_matrix("d2", d2)
show_matrix("d3", d3)

order = ModuleTermOrder("top-up")
result = propagate_resolution([d1, d2, d3], 0, [(0, 0, 0)], order)

print("\nPropagating the weight (0,0,0) of the ground ring up the resolution:")
names = ["trivial", "standard C^3", "wedge^2 C^3", "wedge^3 C^3"]
for i, weights in enumerate(result.per_module):
    print("  F%d carries weights %s  -> %s" % (i, list(weights), names[i]))

print("\nEach step replaced the columns by a sorted Groebner basis of the image;")
print("the change of basis used for the middle map was")
step = result.steps[2]
for row in step.result.change_of_basis.rows:
    print("   [", "  ".join(str(x) for x in row), "]")
show_matrix("\nsorted basis matrix of the middle step", step.result.sorted_matrix)
