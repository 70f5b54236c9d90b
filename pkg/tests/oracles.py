"""
Independent re-encodings used to check the library.

Nothing here imports the code paths under test beyond plain data classes:
the I-bundle boundaries are rebuilt from the quotient construction, the side
constraints are restated one predicate at a time, and the case formulas are
transcribed term by term.
"""
from fractions import Fraction as F

from gutsbound.ibundles import BundleType
from gutsbound.splitting import FillKind

# -- I-bundle quotient construction --------------------------------------------
#
# A base F is described by its cone points, which of them the involution
# swaps, whether F is a disk, and whether the involution is a reflection
# (otherwise it is the identity and the bundle is a product).


def base_of(type_id, params):
    """(cone points, swapped index pairs, is_disk, reflection) for each bundle type."""
    t = BundleType(type_id)
    if t is BundleType.I:
        a, b = params
        return [a, a, b, b], [(0, 1), (2, 3)], False, True
    if t is BundleType.II:
        a, b, c = params
        return [a, a, b, c], [(0, 1)], False, True
    if t is BundleType.III:
        return list(params), [], False, True
    if t is BundleType.IV:
        (a,) = params
        return [a, a], [(0, 1)], True, True
    if t is BundleType.V:
        a, b = params
        return [a, b], [], True, True
    a, b = params
    return [a, b], [], True, False


def quotient_boundary(points, swapped, is_disk, reflection):
    """
    Cone points on the boundary of (F x [-1,1]) / ((x,y) ~ (phi x, -y)).

    The two ends F x {+-1} are identified by phi, leaving one copy of F,
    unless phi is the identity, where both copies survive. The side annulus
    (dF) x I is folded by (x,y) -> (phi x, -y); a reflection fixes two points
    of the circle and each becomes an order-2 cone point.
    """
    for i, j in swapped:
        assert points[i] == points[j], "an involution only swaps equal cone orders"
    if not reflection:
        out = points + points
    else:
        out = list(points)
        if is_disk:
            out += [2, 2]
    return tuple(sorted(out))


def bundle_boundary(spec):
    return quotient_boundary(*base_of(spec.type_id, spec.params))


# -- side constraints -----------------------------------------------------------

def _fill_ok(fill, required):
    if fill.kind is not FillKind.IBUNDLE:
        return True
    return bundle_boundary(fill.spec) == tuple(sorted(required))


def annulus_ok(labels, ab, cd, core, fill):
    A = tuple(sorted(labels[i] for i in ab))
    C = tuple(sorted(labels[i] for i in cd))
    no_torus = A != (2, 2) and C != (2, 2)
    core_ok = core >= 2
    not_solid = fill.kind is not FillKind.SOLID_TORUS
    return no_torus and core_ok and not_solid and _fill_ok(fill, labels)


def _two_two_oriented(A, C, n, upper, lower):
    if C == (2, 2):
        return False
    if n < 1:
        return False
    if A == (2, 2):
        if n != 1 or upper.kind is not FillKind.SOLID_TORUS:
            return False
    elif upper.kind is FillKind.SOLID_TORUS:
        return False
    if lower.kind is FillKind.SOLID_TORUS:
        return False
    return _fill_ok(upper, A + (2, 2)) and _fill_ok(lower, C + (2, 2))


def two_two_ok(labels, ab, cd, n, upper, lower):
    A = tuple(sorted(labels[i] for i in ab))
    C = tuple(sorted(labels[i] for i in cd))
    return _two_two_oriented(A, C, n, upper, lower) or _two_two_oriented(C, A, n, lower, upper)


# -- case formulas ----------------------------------------------------------------

def minus_chi(labels):
    return 2 - sum(F(1, n) for n in labels)


def case_formula(case, surface, pair_labels=()):
    """Right-hand side of the case's bound divided by V8."""
    if case == 1:
        return minus_chi(surface)
    if case == 2:
        a, b = pair_labels
        return F(1, 2) * (minus_chi(surface) + 1 - F(1, a) - F(1, b))
    if case == 3:
        return F(1, 2) * minus_chi(surface)
    if case == 4:
        a, b, c, d = pair_labels
        return F(1, 2) * (2 - F(1, a) - F(1, b) - F(1, c) - F(1, d))
    if case == 5:
        a, b = pair_labels
        return F(1, 2) * (1 - F(1, a) - F(1, b))
    raise ValueError(case)
