"""Formal constraint composites and their evaluation.

The pentagon and triangle are written once as term trees over abstract
object variables and then evaluated against a concrete structure.  This is
deliberately a separate route from the inline equations in the checkers:
the two are compared in tests, so a slip in either one shows up as a
disagreement instead of silently shipping a wrong axiom.

Object terms:  ("unit",) | ("var", i) | ("tensor", s, t)
Morphism terms:
    ("id", obj) | ("assoc"| "assoc_inv", A, B, C)
    | ("lunit" | "lunit_inv" | "runit" | "runit_inv", A)
    | ("tensor", f, g) | ("compose", g, f)        # g after f

lunit is the constraint absorbing the unit on the left of the tensor,
runit on the right.
"""

from .report import StructuralError

UNIT = ("unit",)


def var(i):
    return ("var", i)


def tens(s, t):
    return ("tensor", s, t)


def pentagon_terms():
    """Both legs of the pentagon at object variables 0..3, fixed grouping."""
    a, b, c, d = var(0), var(1), var(2), var(3)
    lhs = (
        "compose",
        ("assoc", a, b, tens(c, d)),
        ("assoc", tens(a, b), c, d),
    )
    rhs = (
        "compose",
        ("tensor", ("id", a), ("assoc", b, c, d)),
        ("compose", ("assoc", a, tens(b, c), d), ("tensor", ("assoc", a, b, c), ("id", d))),
    )
    return lhs, rhs


def triangle_terms():
    """Both legs of the triangle at object variables 0..1."""
    a, b = var(0), var(1)
    lhs = ("compose", ("tensor", ("id", a), ("lunit", b)), ("assoc", a, UNIT, b))
    rhs = ("tensor", ("runit", a), ("id", b))
    return lhs, rhs


# -- evaluation against a finite monoidal category ---------------------------


def eval_object(m, term, assignment):
    kind = term[0]
    if kind == "unit":
        return m.unit_obj
    if kind == "var":
        return assignment[term[1]]
    if kind == "tensor":
        return m.tensor_obj[eval_object(m, term[1], assignment)][
            eval_object(m, term[2], assignment)
        ]
    raise StructuralError(f"unknown object term {kind}")


def eval_morphism(m, term, assignment):
    """Evaluate a morphism term; raises if a composite is not defined."""
    kind = term[0]
    if kind == "id":
        return m.base.identities[eval_object(m, term[1], assignment)]
    if kind in ("assoc", "assoc_inv"):
        obj_a = eval_object(m, term[1], assignment)
        obj_b = eval_object(m, term[2], assignment)
        obj_c = eval_object(m, term[3], assignment)
        table = m.assoc if kind == "assoc" else m.assoc_inv
        return table[obj_a][obj_b][obj_c]
    if kind in ("lunit", "lunit_inv"):
        obj = eval_object(m, term[1], assignment)
        return (m.lunit if kind == "lunit" else m.lunit_inv)[obj]
    if kind in ("runit", "runit_inv"):
        obj = eval_object(m, term[1], assignment)
        return (m.runit if kind == "runit" else m.runit_inv)[obj]
    if kind == "tensor":
        f = eval_morphism(m, term[1], assignment)
        g = eval_morphism(m, term[2], assignment)
        return m.tensor_mor[f][g]
    if kind == "compose":
        g = eval_morphism(m, term[1], assignment)
        f = eval_morphism(m, term[2], assignment)
        h = m.base.comp[g][f]
        if h is None:
            raise StructuralError(f"non-composable pair in term evaluation: {g} after {f}")
        return h
    raise StructuralError(f"unknown morphism term {kind}")


# -- evaluation inside a doubly degenerate bicategory ------------------------


def eval_cell(b, term):
    """Evaluate a morphism term against the 2-cells of a one-1-cell bicategory.

    Every object term collapses to the unique 1-cell.  A unit absorbed on
    the left of the horizontal composite is governed by the stored runit
    constraint and vice versa (that is the naturality pairing enforced by
    the axiom checker), so the lunit/runit term names cross over to the
    runit/lunit fields here.
    """
    kind = term[0]
    if kind == "id":
        return b.id2
    if kind == "assoc":
        return b.assoc
    if kind == "assoc_inv":
        return b.assoc_inv
    if kind == "lunit":
        return b.runit
    if kind == "lunit_inv":
        return b.runit_inv
    if kind == "runit":
        return b.lunit
    if kind == "runit_inv":
        return b.lunit_inv
    if kind == "tensor":
        return b.hcomp[eval_cell(b, term[1])][eval_cell(b, term[2])]
    if kind == "compose":
        return b.vcomp[eval_cell(b, term[1])][eval_cell(b, term[2])]
    raise StructuralError(f"unknown morphism term {kind}")


def pentagon_holds_by_terms(structure, assignment=None) -> bool:
    lhs, rhs = pentagon_terms()
    if assignment is None:
        return eval_cell(structure, lhs) == eval_cell(structure, rhs)
    return eval_morphism(structure, lhs, assignment) == eval_morphism(
        structure, rhs, assignment
    )


def triangle_holds_by_terms(structure, assignment=None) -> bool:
    lhs, rhs = triangle_terms()
    if assignment is None:
        return eval_cell(structure, lhs) == eval_cell(structure, rhs)
    return eval_morphism(structure, lhs, assignment) == eval_morphism(
        structure, rhs, assignment
    )
