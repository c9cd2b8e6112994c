"""Problem description files: a JSON document naming a ring, free modules,
matrices, and weight lists.

Schema (see docs/problem-file-schema.json for the machine-readable version):

    {
      "ring": {"vars": [...], "degrees": [[...], ...], "weights": [[...], ...],
               "order": "grevlex" | "lex"},
      "modules": {NAME: {"degrees": [[...], ...]}, ...},
      "matrices": {NAME: {"rows": MODULE, "cols": MODULE,
                          "entries": [[POLY, ...], ...]}, ...},
      "weightlists": {NAME: [[...], ...], ...},
      "resolution": [MATRIX, ...],            # optional, ordered d_1 ... d_m
      "module_order": "top-up" | "pot-up" | "top-down" | "pot-down"  # optional
    }

Matrix entries are polynomial strings in the expression grammar; "rows" names
the codomain module, "cols" the domain module.  Matrices are checked for
homogeneity while loading.
"""

import json
from dataclasses import dataclass

from .errors import ProblemFileError
from .modules import FreeModuleSpec, ModuleTermOrder, PolyMatrix
from .parsing import parse_polynomial, polynomial_to_string
from .rings import RingSpec


@dataclass
class Problem:
    ring: RingSpec
    modules: dict
    matrices: dict
    weightlists: dict
    resolution: list
    module_order: ModuleTermOrder


def _require(data, key, kind, where):
    if key not in data:
        raise ProblemFileError("missing %r in %s" % (key, where))
    value = data[key]
    if not isinstance(value, kind):
        raise ProblemFileError("%r in %s has the wrong type" % (key, where))
    return value


def problem_from_dict(data):
    """Build a Problem from parsed JSON, resolving all references."""
    if not isinstance(data, dict):
        raise ProblemFileError("problem document must be a JSON object")
    ring_data = _require(data, "ring", dict, "problem document")
    ring = RingSpec(
        _require(ring_data, "vars", list, "ring"),
        _require(ring_data, "degrees", list, "ring"),
        _require(ring_data, "weights", list, "ring"),
        ring_data.get("order", "grevlex"),
    )

    modules = {}
    for name, spec in data.get("modules", {}).items():
        modules[name] = FreeModuleSpec(ring, _require(spec, "degrees", list, "module %r" % name))

    matrices = {}
    for name, spec in data.get("matrices", {}).items():
        where = "matrix %r" % name
        rows_name = _require(spec, "rows", str, where)
        cols_name = _require(spec, "cols", str, where)
        if rows_name not in modules:
            raise ProblemFileError("matrix %r references unknown module %r" % (name, rows_name))
        if cols_name not in modules:
            raise ProblemFileError("matrix %r references unknown module %r" % (name, cols_name))
        codomain, domain = modules[rows_name], modules[cols_name]
        entry_rows = _require(spec, "entries", list, where)
        if len(entry_rows) != codomain.rank or any(len(r) != domain.rank for r in entry_rows):
            raise ProblemFileError("matrix %r entries do not match the module ranks" % name)
        entries = [[parse_polynomial(ring, text) for text in row] for row in entry_rows]
        matrices[name] = PolyMatrix(codomain, domain, entries)

    weightlists = {}
    for name, rows in data.get("weightlists", {}).items():
        if not isinstance(rows, list):
            raise ProblemFileError("weight list %r must be a list" % name)
        weightlists[name] = tuple(tuple(int(x) for x in w) for w in rows)

    resolution = data.get("resolution")
    if resolution is not None:
        for name in resolution:
            if name not in matrices:
                raise ProblemFileError("resolution references unknown matrix %r" % name)

    module_order = ModuleTermOrder(data.get("module_order", "top-up"))
    return Problem(ring, modules, matrices, weightlists, resolution, module_order)


def load_problem(path):
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return problem_from_dict(data)


def matrix_to_rows(matrix):
    """Matrix entries as canonical polynomial strings (rows of strings)."""
    ring = matrix.domain.ring
    return [
        [polynomial_to_string(ring, matrix.entries[i][j]) for j in range(matrix.num_cols)]
        for i in range(matrix.num_rows)
    ]


def scalar_matrix_to_rows(matrix):
    """Scalar matrix entries as exact strings ("3", "-1/2")."""
    return [[str(x) for x in row] for row in matrix.rows]


def problem_to_dict(problem):
    """Serialize a Problem back to its canonical JSON-compatible dict."""
    module_names = {}
    modules = {}
    for name, spec in problem.modules.items():
        module_names[spec.basis_degrees] = name
        modules[name] = {"degrees": [list(d) for d in spec.basis_degrees]}

    def module_ref(spec):
        name = module_names.get(spec.basis_degrees)
        if name is None:
            raise ProblemFileError("matrix uses a module that is not in the module table")
        return name

    data = {
        "ring": {
            "vars": list(problem.ring.var_names),
            "degrees": [list(d) for d in problem.ring.var_degrees],
            "weights": [list(w) for w in problem.ring.var_weights],
            "order": problem.ring.term_order,
        },
        "modules": modules,
        "matrices": {
            name: {
                "rows": module_ref(m.codomain),
                "cols": module_ref(m.domain),
                "entries": matrix_to_rows(m),
            }
            for name, m in problem.matrices.items()
        },
        "weightlists": {name: [list(w) for w in ws] for name, ws in problem.weightlists.items()},
        "module_order": problem.module_order.kind,
    }
    if problem.resolution is not None:
        data["resolution"] = list(problem.resolution)
    return data
