"""Concrete threefolds in Q6: parametrized built-ins and Weil divisors on Q4.

Q4 = {x7 = x8 = 0, x3x6 = x4x5} is a rank 4 quadric cone with vertex line
L = {x3 = ... = x8 = 0}. A divisor is encoded by binary forms in (x4, x6):

    f = g_p(x4,x6) + x1 g1 + x2 g2 + x3 g3 + x5 g5,   deg g_p = p, deg g_i = p - 1,

and the threefold is div(f) - (p-1) D1 where D1 = {x4 = x6 = 0} on Q4.
Q4 \\ L is swept by the 3-planes P(a,b) = {(u1, u2, a u3, a u4, b u3, b u4, 0, 0)},
and f restricted to P(a,b) is u4^(p-1) * lam(u), lam linear in u.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import linalg
from .algebra.fields import QQ, format_scalar, parse_scalar
from .algebra.forms import BinaryForm, gcd_forms, gcd_many
from .algebra.poly import MultiPoly
from .expr import parse_poly
from .quadspace import LinearSubspace, ProjPoint, qform, restrict_rank, unit

X_VARS = tuple(f"x{i}" for i in range(1, 9))
U_VARS = ("u1", "u2", "u3", "u4")
AB = ("a", "b")
FORM_VARS = ("x4", "x6")


class VarietyError(ValueError):
    pass


# parameter spaces

_SPACES = {
    "P1": ((("s0", "s1"),), None),
    "P2": ((("u0", "u1", "u2"),), None),
    "P3": ((("u0", "u1", "u2", "u3"),), None),
    "WP1112": ((("u0", "u1", "u2", "u3"),), (1, 1, 1, 2)),
    "P1xP2": ((("s0", "s1"), ("v0", "v1", "v2")), None),
    "P1xP1": ((("s0", "s1"), ("t0", "t1")), None),
}


@dataclass(frozen=True)
class ParamSpace:
    kind: str
    groups: tuple
    weights: tuple

    @classmethod
    def make(cls, kind: str, variables: Sequence[str] | None = None) -> ParamSpace:
        if kind not in _SPACES:
            raise VarietyError(f"unknown parameter space {kind!r}; expected one of {', '.join(_SPACES)}")
        groups, weights = _SPACES[kind]
        if variables is not None:
            variables = list(variables)
            if len(variables) != sum(len(g) for g in groups):
                raise VarietyError(f"{kind} needs {sum(len(g) for g in groups)} variable names")
            out, k = [], 0
            for g in groups:
                out.append(tuple(variables[k:k + len(g)]))
                k += len(g)
            groups = tuple(out)
        n = sum(len(g) for g in groups)
        return cls(kind, groups, tuple(weights or (1,) * n))

    @property
    def variables(self) -> tuple:
        return tuple(v for g in self.groups for v in g)

    @property
    def dim(self) -> int:
        return sum(len(g) - 1 for g in self.groups)

    def split(self, params: Sequence) -> list[list]:
        params = list(params)
        if len(params) != len(self.variables):
            raise VarietyError(f"{self.kind} takes {len(self.variables)} coordinates, got {len(params)}")
        out, k = [], 0
        for g in self.groups:
            out.append(params[k:k + len(g)])
            k += len(g)
        return out

    def validate(self, params: Sequence) -> None:
        for g in self.split(params):
            if all(x == 0 for x in g):
                raise VarietyError("parameter tuple has an all-zero projective factor")

    def random_params(self, rng: random.Random, field=QQ, bound: int = 20) -> list:
        while True:
            params = [field.random(rng, bound) for _ in self.variables]
            if all(any(x != 0 for x in g) for g in self.split(params)):
                return params

    def multidegree(self, poly: MultiPoly) -> tuple | None:
        """Degree in each factor (weighted for WP1112); None if not multihomogeneous."""
        idx = []
        k = 0
        for g in self.groups:
            idx.append(range(k, k + len(g)))
            k += len(g)
        degs = None
        for e in poly.terms:
            d = tuple(sum(e[i] * self.weights[i] for i in r) for r in idx)
            if degs is None:
                degs = d
            elif d != degs:
                return None
        return degs


class ParamVariety:
    """Image of a parameter space under 8 multihomogeneous coordinate polynomials."""

    def __init__(self, name: str, space: ParamSpace, coords: Sequence[MultiPoly],
                 ambient: LinearSubspace | None = None, check: bool = True):
        coords = [c.embed(space.variables) if c.vars != space.variables else c for c in coords]
        if len(coords) != 8:
            raise VarietyError("a parametrization needs exactly 8 coordinates")
        self.name = name
        self.space = space
        self.coords = tuple(coords)
        self.ambient = ambient
        if check:
            self._check()

    def _check(self):
        degs = {self.space.multidegree(c) for c in self.coords if not c.is_zero()}
        if not degs or None in degs or len(degs) != 1:
            raise VarietyError(f"{self.name}: coordinates are not homogeneous of a common degree")
        self.degree_vector = degs.pop()
        c = self.coords
        pull = c[0] * c[7] - c[1] * c[6] + c[2] * c[5] - c[3] * c[4]
        if not pull.is_zero():
            raise VarietyError(f"{self.name}: image does not lie on Q6")
        if self.ambient is not None:
            for eq in self.ambient.equations():
                if not sum((e * x for e, x in zip(eq, c)), MultiPoly.zero(self.space.variables)).is_zero():
                    raise VarietyError(f"{self.name}: image leaves its declared ambient space")

    @property
    def dim(self) -> int:
        return self.space.dim

    def eval_affine(self, params: Sequence) -> list:
        return [c.evaluate(params) for c in self.coords]

    def eval(self, params: Sequence) -> ProjPoint:
        self.space.validate(params)
        v = self.eval_affine(params)
        if all(x == 0 for x in v):
            raise VarietyError(f"{self.name}: parameter point lies in the base locus")
        return ProjPoint(v)

    def jacobian(self, params: Sequence) -> list[list]:
        """8 x (#params) matrix of partial derivatives of the affine cone map."""
        return [[c.diff(v).evaluate(params) for v in self.space.variables] for c in self.coords]

    def jacobian_rank_at(self, params: Sequence) -> int:
        self.space.validate(params)
        return linalg.rank(self.jacobian(params))

    def random_point(self, rng: random.Random, field=QQ, bound: int = 20) -> list:
        while True:
            v = self.eval_affine(self.space.random_params(rng, field, bound))
            if any(x != 0 for x in v):
                return v

    def to_json(self) -> dict:
        out = {"space": self.space.kind, "vars": list(self.space.variables),
               "coords": [c.to_str() for c in self.coords], "name": self.name}
        if self.ambient is not None:
            out["ambient"] = self.ambient.to_json()
        return out

    @classmethod
    def from_json(cls, payload: dict) -> ParamVariety:
        try:
            space = ParamSpace.make(payload["space"], payload.get("vars"))
            exprs = payload["coords"]
        except KeyError as exc:
            raise VarietyError(f"parametrized variety JSON is missing {exc.args[0]!r}") from None
        if not isinstance(exprs, list) or len(exprs) != 8:
            raise VarietyError("'coords' must be a list of 8 expressions")
        coords = [parse_poly(e, space.variables) for e in exprs]
        ambient = LinearSubspace.from_json(payload["ambient"]) if "ambient" in payload else None
        return cls(payload.get("name", "custom"), space, coords, ambient)

    def __repr__(self):
        return f"ParamVariety({self.name!r}, {self.space.kind})"


def _coords(space: ParamSpace, exprs: Sequence[str]) -> list[MultiPoly]:
    return [parse_poly(e, space.variables) for e in exprs]


def _builtin(name: str) -> ParamVariety:
    if name == "horizontal3":
        sp = ParamSpace.make("P3")
        return ParamVariety(name, sp, _coords(sp, ["u0", "u1", "u2", "0", "u3", "0", "0", "0"]))
    if name == "vertical3":
        sp = ParamSpace.make("P3")
        return ParamVariety(name, sp, _coords(sp, ["u0", "u1", "u2", "u3", "0", "0", "0", "0"]))
    if name == "quadric5":
        # Q6 cut by x8 = x1, x7 = x2, x5 = x4: x1^2 - x2^2 + x3x6 - x4^2, rank 5 on a P^4.
        # Parametrized by projecting from the point e3 of the quadric.
        sp = ParamSpace.make("P3", ["w1", "w2", "w4", "w6"])
        ambient = LinearSubspace.from_equations(
            [[1, 0, 0, 0, 0, 0, 0, -1], [0, 1, 0, 0, 0, 0, -1, 0], [0, 0, 0, 1, -1, 0, 0, 0]], field=QQ
        )
        if restrict_rank(ambient) != 5:
            raise VarietyError("quadric5 model has the wrong rank")
        exprs = ["w1*w6", "w2*w6", "-(w1^2 - w2^2 - w4^2)", "w4*w6", "w4*w6", "w6^2", "w2*w6", "w1*w6"]
        return ParamVariety(name, sp, _coords(sp, exprs), ambient)
    if name == "segre":
        sp = ParamSpace.make("P1xP2")
        return ParamVariety(name, sp, _coords(sp, ["s0*v0", "s1*v0", "s0*v1", "s0*v2", "s1*v1", "s1*v2", "0", "0"]))
    if name == "veronese_surface":
        sp = ParamSpace.make("P2")
        return ParamVariety(name, sp, _coords(sp, ["0"] + VERONESE + ["0"]))
    if name == "veronese_cone":
        sp = ParamSpace.make("WP1112")
        return ParamVariety(name, sp, _coords(sp, ["u3"] + VERONESE + ["0"]))
    if name == "cubic_secant":
        # secant lines of the twisted cubic; (s : t) = (s1/s0, t1/t0) affinely
        sp = ParamSpace.make("P1xP1")
        exprs = [
            "s0^2*t0^2",
            "s0*t0*(s1*t0 + s0*t1)",
            "s0*s1*t0*t1",
            "s1^2*t0^2 + s0*s1*t0*t1 + s0^2*t1^2",
            "s1*t1*(s1*t0 + s0*t1)",
            "s1^2*t1^2",
        ]
        return ParamVariety(name, sp, _coords(sp, ["0"] + exprs + ["0"]))
    raise VarietyError(f"unknown builtin {name!r}; expected one of {', '.join(BUILTINS)}")


VERONESE = ["u0^2", "u0*u1", "u0*u2", "u1^2 - u0*u2", "u1*u2", "u2^2"]
BUILTINS = ("horizontal3", "vertical3", "quadric5", "segre", "veronese_surface", "veronese_cone", "cubic_secant")
_CACHE: dict[str, ParamVariety] = {}


def builtin(name: str) -> ParamVariety:
    if name not in _CACHE:
        _CACHE[name] = _builtin(name)
    return _CACHE[name]


def eval_param(V: ParamVariety, params: Sequence) -> ProjPoint:
    return V.eval(params)


def jacobian_rank_at(V: ParamVariety, params: Sequence) -> int:
    return V.jacobian_rank_at(params)


# Pluecker coordinates of secant lines

PLUCKER_ORDER = ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))  # 12 13 23 14 24 34


def plucker_relation(p: Sequence):
    """p12 p34 - p13 p24 + p23 p14."""
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]


def wedge_plucker(s, t) -> tuple:
    """Pluecker coordinates of the line through (1:t:t^2:t^3) and (1:s:s^2:s^3), divided by s - t."""
    if s == t:
        raise VarietyError("s = t gives a tangent line, not a secant")
    a = [t ** k for k in range(4)]
    b = [s ** k for k in range(4)]
    d = s - t
    if isinstance(d, int):
        d = Fraction(d)
    return tuple((a[i] * b[j] - a[j] * b[i]) / d for i, j in PLUCKER_ORDER)


def wedge_plucker_poly() -> list[MultiPoly]:
    """wedge_plucker as exact polynomials in (s, t)."""
    s, t = MultiPoly.gens(("s", "t"))
    one = MultiPoly.const(Fraction(1), ("s", "t"))
    a = [one, t, t * t, t * t * t]
    b = [one, s, s * s, s * s * s]
    return [(a[i] * b[j] - a[j] * b[i]).exact_div(s - t) for i, j in PLUCKER_ORDER]


# Weil divisors on Q4


def _form(v, degree: int, label: str) -> BinaryForm:
    if isinstance(v, BinaryForm):
        coeffs = v.coeffs
    else:
        coeffs = tuple(v)
    coeffs = tuple(Fraction(c) if not isinstance(c, str) else parse_scalar(c) for c in coeffs)
    if len(coeffs) != degree + 1:
        raise VarietyError(f"{label} must have degree {degree} ({degree + 1} coefficients), got {len(coeffs)}")
    return BinaryForm(coeffs, FORM_VARS)


def _times(var_first: bool, g: BinaryForm) -> BinaryForm:
    """Multiply a form by its first variable (True) or its second (False)."""
    return BinaryForm(g.coeffs + (0,), g.names) if var_first else BinaryForm((0,) + g.coeffs, g.names)


@dataclass(frozen=True)
class PlaneFamily:
    a: object
    b: object
    lam: tuple
    whole: bool
    plane: LinearSubspace  # Q(a,b), or P(a,b) itself when whole

    def to_json(self) -> dict:
        return {
            "ab": [format_scalar(self.a), format_scalar(self.b)],
            "lambda": [format_scalar(c) for c in self.lam],
            "whole_plane": self.whole,
            "plane": self.plane.to_json(),
        }


def pencil_vectors(a, b) -> list[list]:
    """Images of u1..u4 in P(a,b)."""
    z = 0
    return [
        [1, z, z, z, z, z, z, z],
        [z, 1, z, z, z, z, z, z],
        [z, z, a, z, b, z, z, z],
        [z, z, z, a, z, b, z, z],
    ]


def pencil_embed(u: Sequence, a, b) -> list:
    u1, u2, u3, u4 = u
    return [u1, u2, u3 * a, u4 * a, u3 * b, u4 * b, 0 * u1, 0 * u1]


def pencil_plane(a, b) -> LinearSubspace:
    if a == 0 and b == 0:
        raise VarietyError("(a, b) = (0, 0) is not a point of P^1")
    return LinearSubspace(pencil_vectors(a, b))


def on_q4(z: Sequence) -> bool:
    return z[6] == 0 and z[7] == 0 and z[2] * z[5] == z[3] * z[4]


def on_line_l(z: Sequence) -> bool:
    return all(x == 0 for x in z[2:])


def pencil_coordinates(z: Sequence) -> tuple[tuple, tuple]:
    """For z in Q4 off L: ((a, b), (u1, u2, u3, u4)) with z = pencil_embed(u, a, b)."""
    if on_line_l(z):
        raise VarietyError("points of L lie on every P(a,b)")
    if z[3] != 0 or z[5] != 0:
        a, b = z[3], z[5]
    else:
        a, b = z[2], z[4]
    if a != 0:
        ia = 1 / Fraction(a) if isinstance(a, int) else 1 / a
        u = (z[0], z[1], z[2] * ia, z[3] * ia)
    else:
        ib = 1 / Fraction(b) if isinstance(b, int) else 1 / b
        u = (z[0], z[1], z[4] * ib, z[5] * ib)
    return (a, b), u


class Q4Divisor:
    """div(f) - (p-1) D1 on Q4, for f = g_p + x1 g1 + x2 g2 + x3 g3 + x5 g5."""

    def __init__(self, p: int, gp, g1, g2, g3, g5, label: str | None = None):
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise VarietyError("p must be an integer >= 1")
        self.p = p
        self.gp = _form(gp, p, "gp")
        self.g1 = _form(g1, p - 1, "g1")
        self.g2 = _form(g2, p - 1, "g2")
        self.g3 = _form(g3, p - 1, "g3")
        self.g5 = _form(g5, p - 1, "g5")
        if all(g.is_zero for g in self.forms):
            raise VarietyError("all defining forms vanish")
        self.label = label

    @property
    def forms(self) -> tuple:
        return (self.gp, self.g1, self.g2, self.g3, self.g5)

    def __eq__(self, other):
        return isinstance(other, Q4Divisor) and self.p == other.p and self.forms == other.forms

    def __hash__(self):
        return hash((self.p, self.forms))

    def __repr__(self):
        return f"Q4Divisor(p={self.p}, f={self.f.to_str()})"

    # the polynomial f
    @property
    def f(self) -> MultiPoly:
        x = MultiPoly.gens(X_VARS)
        out = self.gp.to_multipoly(FORM_VARS).embed(X_VARS)
        for i, g in ((0, self.g1), (1, self.g2), (2, self.g3), (4, self.g5)):
            out = out + x[i] * g.to_multipoly(FORM_VARS).embed(X_VARS)
        return out

    @classmethod
    def from_poly(cls, f: MultiPoly, p: int | None = None, label: str | None = None) -> Q4Divisor:
        """Read the forms off a polynomial already in normal form."""
        f = f.embed(X_VARS) if f.vars != X_VARS else f
        if f.is_zero():
            raise VarietyError("f is zero")
        if p is None:
            p = f.total_degree()
        if not f.is_homogeneous() or f.total_degree() != p:
            raise VarietyError(f"f must be homogeneous of degree p = {p}")
        data = {k: [Fraction(0)] * (p + 1 if k == "gp" else p) for k in ("gp", "g1", "g2", "g3", "g5")}
        slot = {0: "g1", 1: "g2", 2: "g3", 4: "g5"}
        for e, c in f.terms.items():
            if e[6] or e[7]:
                raise VarietyError("f may not involve x7 or x8")
            lin = [i for i in (0, 1, 2, 4) if e[i]]
            if not lin:
                data["gp"][e[5]] = Fraction(c)
                continue
            if len(lin) > 1 or e[lin[0]] > 1:
                raise VarietyError("f must be linear in x1, x2, x3, x5 with no products among them")
            data[slot[lin[0]]][e[5]] = Fraction(c)
        return cls(p, data["gp"], data["g1"], data["g2"], data["g3"], data["g5"], label)

    @classmethod
    def from_expr(cls, text: str, p: int | None = None, label: str | None = None) -> Q4Divisor:
        return cls.from_poly(parse_poly(text, X_VARS), p, label or text)

    def to_json(self) -> dict:
        out = {"p": self.p, "gp": self.gp.to_json(), "g1": self.g1.to_json(), "g2": self.g2.to_json(),
               "g3": self.g3.to_json(), "g5": self.g5.to_json(), "f": self.f.to_str()}
        return out

    @classmethod
    def from_json(cls, payload: dict) -> Q4Divisor:
        if "gp" not in payload and "f" in payload:
            return cls.from_expr(payload["f"], payload.get("p"))
        try:
            p = payload["p"]
            forms = [[parse_scalar(c) for c in payload[k]] for k in ("gp", "g1", "g2", "g3", "g5")]
        except KeyError as exc:
            raise VarietyError(f"divisor JSON is missing {exc.args[0]!r}") from None
        except ValueError as exc:
            raise VarietyError(str(exc)) from None
        return cls(p, *forms)

    # pencil data
    def lam_forms(self) -> tuple[BinaryForm, BinaryForm, BinaryForm, BinaryForm]:
        """Coefficients of lam as binary forms in (a, b): degrees (p-1, p-1, p, p)."""
        c3 = _times(True, self.g3) + _times(False, self.g5)
        return tuple(g.rename(AB) for g in (self.g1, self.g2, c3, self.gp))

    def lam(self, a, b) -> tuple:
        if a == 0 and b == 0:
            raise VarietyError("(a, b) = (0, 0) is not a point of P^1")
        return tuple(g(a, b) for g in self.lam_forms())

    def restrict_to_pencil(self, a, b) -> MultiPoly:
        """f composed with the P(a,b) parametrization; asserted equal to u4^(p-1) * lam."""
        if a == 0 and b == 0:
            raise VarietyError("(a, b) = (0, 0) is not a point of P^1")
        u = MultiPoly.gens(U_VARS)
        zero = MultiPoly.zero(U_VARS)
        images = [u[0], u[1], u[2] * a, u[3] * a, u[2] * b, u[3] * b, zero, zero]
        out = self.f.compose(images, U_VARS)
        lam = sum((c * ui for c, ui in zip(self.lam(a, b), u)), zero)
        expected = u[3] ** (self.p - 1) * lam
        if out != expected:
            raise AssertionError("pencil restriction identity failed")
        return out

    def q_plane(self, a, b) -> PlaneFamily:
        lam = self.lam(a, b)
        whole = all(c == 0 for c in lam)
        if whole:
            plane = pencil_plane(a, b)
        else:
            vecs = pencil_vectors(a, b)
            ker = linalg.kernel_basis([list(lam)], 4)
            plane = LinearSubspace([[sum((k[i] * vecs[i][j] for i in range(4)), 0) for j in range(8)] for k in ker])
        return PlaneFamily(a, b, lam, whole, plane)

    def psi(self, a, b) -> ProjPoint:
        if self.g1.is_zero and self.g2.is_zero:
            raise VarietyError("g1 and g2 both vanish: psi is undefined (double cone case)")
        v1, v2 = self.g1(a, b), self.g2(a, b)
        if v1 == 0 and v2 == 0:
            raise VarietyError(f"(a:b) = ({format_scalar(a)}:{format_scalar(b)}) is a common root of g1 and g2")
        return ProjPoint([-v2, v1, 0, 0, 0, 0, 0, 0])

    def psi_forms(self) -> tuple[BinaryForm, BinaryForm]:
        """(-g2, g1) with their common factor removed."""
        if self.g1.is_zero and self.g2.is_zero:
            raise VarietyError("g1 and g2 both vanish: psi is undefined (double cone case)")
        h = gcd_forms(self.g1, self.g2)
        return (-self.g2).exact_div(h).rename(AB), self.g1.exact_div(h).rename(AB)

    def psi_degree(self) -> int:
        if self.g1.is_zero and self.g2.is_zero:
            raise VarietyError("g1 and g2 both vanish: psi is undefined (double cone case)")
        return self.p - 1 - gcd_forms(self.g1, self.g2).degree

    def common_factor(self) -> BinaryForm:
        """gcd of the coefficient forms of lam; nonconstant iff some P(a,b) lies in the divisor."""
        return gcd_many([g for g in self.lam_forms() if not g.is_zero])

    def contains(self, z: Sequence) -> bool:
        z = list(z)
        if not on_q4(z):
            raise VarietyError("point is not on Q4")
        if on_line_l(z):
            # every point of L lies on some Q(a,b) once psi has positive degree
            if self.p >= 2:
                return True
            return self.g1(1, 0) * z[0] + self.g2(1, 0) * z[1] == 0
        (a, b), u = pencil_coordinates(z)
        lam = self.lam(a, b)
        if all(c == 0 for c in lam):
            return True
        return sum((c * x for c, x in zip(lam, u)), 0) == 0

    def random_point(self, rng: random.Random, field=QQ, bound: int = 20) -> list:
        """A random point of the divisor off L (on some Q(a,b))."""
        while True:
            a, b = field.random(rng, bound), field.random(rng, bound)
            if a == 0 and b == 0:
                continue
            fam = self.q_plane(a, b)
            v = fam.plane.random_vector(rng, bound)
            if not on_line_l(v):
                return v

    def reduce_mod(self, q: int):
        """The forms reduced mod q (rational coefficients with denominators prime to q)."""
        return [g.reduce_mod(q) for g in self.forms]


def random_divisor(p: int, seed: int = 0, bound: int = 3, coprime: bool = True) -> Q4Divisor:
    """Seeded divisor with integer coefficients, irreducible and (if asked) with gcd(g1, g2) = 1."""
    if p < 1:
        raise VarietyError("p must be at least 1")
    rng = random.Random(seed)
    while True:
        def form(d):
            return [rng.randint(-bound, bound) for _ in range(d + 1)]

        D = Q4Divisor(p, form(p), form(p - 1), form(p - 1), form(p - 1), form(p - 1), label=f"random(p={p},seed={seed})")
        if D.common_factor().degree > 0:
            continue
        if coprime and (D.g1.is_zero or D.g2.is_zero or gcd_forms(D.g1, D.g2).degree > 0):
            continue
        return D


def divisor_contains(D: Q4Divisor, z: Sequence) -> bool:
    return D.contains(z)


def segre_divisor() -> Q4Divisor:
    """f = x1x6 - x2x4."""
    return Q4Divisor(2, [0, 0, 0], [0, 1], [-1, 0], [0, 0], [0, 0], label="x1*x6 - x2*x4")



__all__ = [
    "AB",
    "BUILTINS",
    "FORM_VARS",
    "ParamSpace",
    "ParamVariety",
    "PlaneFamily",
    "Q4Divisor",
    "U_VARS",
    "VarietyError",
    "X_VARS",
    "builtin",
    "divisor_contains",
    "random_divisor",
    "eval_param",
    "jacobian_rank_at",
    "on_line_l",
    "on_q4",
    "pencil_coordinates",
    "pencil_embed",
    "pencil_plane",
    "pencil_vectors",
    "plucker_relation",
    "qform",
    "segre_divisor",
    "unit",
    "wedge_plucker",
    "wedge_plucker_poly",
]
