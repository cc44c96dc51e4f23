# src/forms/exterior.py
"""
Formes différentielles et champs de vecteurs à coefficients polynomiaux.

Une k-forme est une table (indices strictement croissants) -> MPoly ; les
composantes nulles ne sont jamais stockées.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.polynomial import MPoly, PolyRing
from src.algebra.rational import to_rat
from src.errors import ArityMismatch, GradeOverflow, RingMismatch

Key = Tuple[int, ...]


def _sort_sign(indices: Sequence[int]) -> Tuple[int, Key]:
    """Signe de la permutation qui trie indices (0 si un indice est répété)."""
    if len(set(indices)) != len(indices):
        return 0, ()
    inversions = sum(
        1 for a in range(len(indices)) for b in range(a + 1, len(indices)) if indices[a] > indices[b]
    )
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


class PolyForm:
    __slots__ = ("ring", "grade", "components")

    def __init__(self, ring: PolyRing, grade: int, components: Optional[Dict[Key, MPoly]] = None):
        if not 0 <= grade <= ring.nvars:
            raise GradeOverflow(f"Degré de forme {grade} impossible avec {ring.nvars} variables.")
        clean: Dict[Key, MPoly] = {}
        for key, coeff in (components or {}).items():
            key = tuple(key)
            if len(key) != grade or list(key) != sorted(set(key)):
                raise ValueError(f"Clé de composante invalide {key} pour une {grade}-forme.")
            if any(not 0 <= i < ring.nvars for i in key):
                raise RingMismatch(f"Indice de différentielle hors de l'anneau : {key}")
            if coeff.ring != ring:
                raise RingMismatch(f"Coefficient {coeff} hors de l'anneau {ring}.")
            if not coeff.is_zero():
                clean[key] = coeff
        self.ring = ring
        self.grade = grade
        self.components = clean

    # --- Constructeurs ---
    @classmethod
    def zero(cls, ring: PolyRing, grade: int) -> "PolyForm":
        return cls(ring, grade, {})

    @classmethod
    def function(cls, f: MPoly) -> "PolyForm":
        return cls(f.ring, 0, {(): f})

    @classmethod
    def one_form(cls, coefficients: Sequence[MPoly]) -> "PolyForm":
        coefficients = list(coefficients)
        ring = coefficients[0].ring
        if len(coefficients) != ring.nvars:
            raise ArityMismatch(f"{len(coefficients)} coefficients pour {ring.nvars} variables.")
        return cls(ring, 1, {(i,): a for i, a in enumerate(coefficients)})

    @classmethod
    def differential(cls, ring: PolyRing, i: int) -> "PolyForm":
        return cls(ring, 1, {(i,): ring.one()})

    @classmethod
    def volume(cls, ring: PolyRing) -> "PolyForm":
        return cls(ring, ring.nvars, {tuple(range(ring.nvars)): ring.one()})

    # --- Accès ---
    def coefficient(self, key: Sequence[int]) -> MPoly:
        return self.components.get(tuple(key), self.ring.zero())

    def coefficients(self) -> List[MPoly]:
        """Coefficients d'une 1-forme, un par variable."""
        if self.grade != 1:
            raise ValueError("coefficients() est réservé aux 1-formes.")
        return [self.coefficient((i,)) for i in range(self.ring.nvars)]

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other):
        return (
            isinstance(other, PolyForm)
            and self.ring == other.ring
            and self.grade == other.grade
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.ring, self.grade, frozenset(self.components.items())))

    def degree(self):
        """Degré maximal des coefficients."""
        return max((c.degree() for c in self.components.values()), default=self.ring.zero().degree())

    # --- Arithmétique ---
    def _check(self, other: "PolyForm"):
        if other.ring != self.ring:
            raise RingMismatch(f"Formes d'anneaux différents : {self.ring} et {other.ring}.")
        if other.grade != self.grade:
            raise ValueError(f"Formes de degrés différents : {self.grade} et {other.grade}.")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        comps = dict(self.components)
        for key, c in other.components.items():
            comps[key] = comps.get(key, self.ring.zero()) + c
        return PolyForm(self.ring, self.grade, comps)

    def __neg__(self) -> "PolyForm":
        return PolyForm(self.ring, self.grade, {k: -c for k, c in self.components.items()})

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return self + (-other)

    def scale(self, f) -> "PolyForm":
        """Produit par une fonction (MPoly) ou un scalaire."""
        if not isinstance(f, MPoly):
            f = self.ring.const(to_rat(f))
        return PolyForm(self.ring, self.grade, {k: c * f for k, c in self.components.items()})

    def truncate(self, cap: int) -> "PolyForm":
        return PolyForm(self.ring, self.grade, {k: c.truncate(cap) for k, c in self.components.items()})

    def low_degree(self):
        return min((c.low_degree() for c in self.components.values()), default=self.ring.zero().low_degree())

    def evaluate(self, point: Sequence) -> Dict[Key, object]:
        return {k: c.evaluate(point) for k, c in self.components.items()}

    def translate(self, point: Sequence) -> "PolyForm":
        """Translation x -> x + p des coefficients (les différentielles sont inchangées)."""
        return PolyForm(self.ring, self.grade, {k: c.translate(point) for k, c in self.components.items()})

    def render(self) -> str:
        if not self.components:
            return "0"
        parts = []
        for key in sorted(self.components):
            coeff = self.components[key].render()
            if self.grade == 0:
                parts.append(coeff)
                continue
            diff = "^".join("d" + self.ring.names[i] for i in key)
            parts.append(f"({coeff})*{diff}")
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PolyForm[{self.grade}]({self.render()!r})"


class PolyVectorField:
    __slots__ = ("ring", "components")

    def __init__(self, components: Sequence[MPoly], ring: Optional[PolyRing] = None):
        components = tuple(components)
        ring = ring or components[0].ring
        if len(components) != ring.nvars:
            raise ArityMismatch(f"{len(components)} composantes pour {ring.nvars} variables.")
        for c in components:
            if c.ring != ring:
                raise RingMismatch(f"Composante {c} hors de l'anneau {ring}.")
        self.ring = ring
        self.components = components

    @classmethod
    def radial(cls, ring: PolyRing) -> "PolyVectorField":
        return cls(ring.gens(), ring)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        return isinstance(other, PolyVectorField) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def scale(self, f) -> "PolyVectorField":
        return PolyVectorField([c * f for c in self.components], self.ring)

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        return PolyVectorField([a + b for a, b in zip(self.components, other.components)], self.ring)

    def linear_part(self) -> List[List]:
        """Matrice jacobienne en 0 : entrée (i, j) = coefficient de x_j dans X_i."""
        n = self.ring.nvars
        rows = []
        for c in self.components:
            row = []
            for j in range(n):
                m = tuple(1 if k == j else 0 for k in range(n))
                row.append(c.coefficient(m))
            rows.append(row)
        return rows

    def render(self) -> str:
        return "(" + ", ".join(c.render() for c in self.components) + ")"

    def __repr__(self):
        return f"PolyVectorField{self.render()}"


# --- Opérations ---
def wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    if a.ring != b.ring:
        raise RingMismatch(f"Produit extérieur d'anneaux différents : {a.ring} et {b.ring}.")
    grade = a.grade + b.grade
    if grade > a.ring.nvars:
        raise GradeOverflow(
            f"Produit extérieur de degré {grade} > {a.ring.nvars} (nombre de variables)."
        )
    comps: Dict[Key, MPoly] = {}
    for ka, ca in a.components.items():
        for kb, cb in b.components.items():
            sign, key = _sort_sign(ka + kb)
            if not sign:
                continue
            term = ca * cb
            if sign < 0:
                term = -term
            comps[key] = comps.get(key, a.ring.zero()) + term
    return PolyForm(a.ring, grade, comps)


def ext_d(a: PolyForm) -> PolyForm:
    if a.grade >= a.ring.nvars:
        raise GradeOverflow(f"d d'une {a.grade}-forme en {a.ring.nvars} variables.")
    comps: Dict[Key, MPoly] = {}
    for key, c in a.components.items():
        for i in range(a.ring.nvars):
            if i in key:
                continue
            dc = c.diff(i)
            if dc.is_zero():
                continue
            sign, new_key = _sort_sign((i,) + key)
            term = dc if sign > 0 else -dc
            comps[new_key] = comps.get(new_key, a.ring.zero()) + term
    return PolyForm(a.ring, a.grade + 1, comps)


def contract(X: PolyVectorField, a: PolyForm) -> PolyForm:
    """Produit intérieur i_X a."""
    if X.ring != a.ring:
        raise RingMismatch("Contraction d'un champ et d'une forme d'anneaux différents.")
    if a.grade < 1:
        raise ValueError("La contraction exige une forme de degré >= 1.")
    comps: Dict[Key, MPoly] = {}
    for key, c in a.components.items():
        for r, i in enumerate(key):
            if X.components[i].is_zero():
                continue
            rest = key[:r] + key[r + 1:]
            term = c * X.components[i]
            if r % 2:
                term = -term
            comps[rest] = comps.get(rest, a.ring.zero()) + term
    return PolyForm(a.ring, a.grade - 1, comps)


def apply_one_form(a: PolyForm, X: PolyVectorField) -> MPoly:
    """ω(X) pour une 1-forme."""
    return contract(X, a).coefficient(())


def rot(a: PolyForm) -> PolyVectorField:
    """Le champ X tel que i_X dx∧dy∧dz = dω (3 variables)."""
    if a.ring.nvars != 3 or a.grade != 1:
        raise ValueError("rot exige une 1-forme en exactement 3 variables.")
    return two_form_to_field(ext_d(a))


def two_form_to_field(b: PolyForm) -> PolyVectorField:
    """S tel que i_S dx∧dy∧dz = b (3 variables)."""
    if b.ring.nvars != 3 or b.grade != 2:
        raise ValueError("Conversion réservée aux 2-formes en 3 variables.")
    return PolyVectorField(
        [b.coefficient((1, 2)), -b.coefficient((0, 2)), b.coefficient((0, 1))], b.ring
    )


def pullback(a: PolyForm, images: Sequence[MPoly]) -> PolyForm:
    """φ*a pour φ donné par les images des variables (dans un anneau cible commun)."""
    images = list(images)
    if len(images) != a.ring.nvars:
        raise ArityMismatch(f"{len(images)} images pour {a.ring.nvars} variables.")
    target = images[0].ring
    differentials = [ext_d(PolyForm.function(img)) for img in images]
    result = PolyForm.zero(target, a.grade)
    for key, c in a.components.items():
        term = PolyForm.function(c.substitute(images))
        for i in key:
            term = wedge(term, differentials[i])
        result = result + term
    return result


def one_form_from_gradient(f: MPoly) -> PolyForm:
    return ext_d(PolyForm.function(f))


def integrability_defect(a: PolyForm) -> PolyForm:
    """ω∧dω (nul ssi ω est intégrable)."""
    return wedge(a, ext_d(a))

