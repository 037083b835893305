"""Sullivan minimal models: free graded-commutative algebras with a decomposable
degree +1 differential, over the rationals.

A model is determined by its generators and the differential images of the
generators; the differential extends as a graded derivation.  Models are
treated as immutable once constructed.  ``validate`` performs the mathematical
checks (image degrees, minimality, d^2 = 0) and caches its report.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .algebra import (
    Element,
    Generator,
    Monomial,
    enumerate_basis,
    make_generators,
)
from .errors import (
    DegreeMismatch,
    DifferentialNotSquareZero,
    GeneratorMismatch,
    InvalidModel,
    NotClosedUnderDifferential,
    NotDifferentialIdeal,
    NotElliptic,
    NotMinimal,
    NotPure,
    UnknownGenerator,
    VerificationFailed,
)

GenKey = Union[Generator, str]


@dataclass(frozen=True)
class DifferentialLength:
    """Word lengths occurring among the nonzero differential images.

    ``kind`` is "constant" (single length, ``value`` set), "mixed"
    (``values`` set), or "zero" (no nonzero image at all; the length is
    undetermined and callers needing one must decide how to treat it).
    """

    kind: str
    value: int | None = None
    values: tuple[int, ...] = ()

    @staticmethod
    def constant(l: int) -> "DifferentialLength":
        return DifferentialLength("constant", value=l)

    @staticmethod
    def mixed(ls: Iterable[int]) -> "DifferentialLength":
        return DifferentialLength("mixed", values=tuple(sorted(set(ls))))

    @staticmethod
    def all_zero() -> "DifferentialLength":
        return DifferentialLength("zero")

    @property
    def is_constant(self) -> bool:
        return self.kind == "constant"

    def render(self) -> str:
        if self.kind == "constant":
            return f"constant({self.value})"
        if self.kind == "mixed":
            return "mixed{%s}" % ",".join(str(v) for v in self.values)
        return "zero"

    def to_dict(self) -> dict:
        if self.kind == "constant":
            return {"kind": "constant", "value": self.value}
        if self.kind == "mixed":
            return {"kind": "mixed", "values": list(self.values)}
        return {"kind": "zero"}


@dataclass
class ModelReport:
    """Outcome of validating (and optionally analyzing) a model."""

    name: str
    pure: bool
    minimal: bool
    length: DifferentialLength
    chi_pi: int
    n_even: int
    n_odd: int
    elliptic: bool | None = None
    formal_dimension: int | None = None
    exponents: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "model": self.name,
            "pure": self.pure,
            "minimal": self.minimal,
            "length": self.length.to_dict(),
            "chi_pi": self.chi_pi,
            "generators": {"even": self.n_even, "odd": self.n_odd},
        }
        if self.elliptic is not None:
            out["elliptic"] = self.elliptic
        if self.formal_dimension is not None:
            out["formal_dimension"] = self.formal_dimension
        if self.exponents:
            out["exponents"] = dict(sorted(self.exponents.items()))
        return out


class SullivanModel:
    """A finitely generated Sullivan model (Lambda V, d)."""

    def __init__(self, generators: Sequence[Generator],
                 differential: Mapping[GenKey, Element] | None = None,
                 name: str = "model"):
        gens = sorted(generators, key=lambda g: g.index)
        if len({g.index for g in gens}) != len(gens):
            raise InvalidModel("generator positions must be distinct")
        if len({g.name for g in gens}) != len(gens):
            raise InvalidModel("generator names must be unique within a model")
        self.name = name
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._by_name = {g.name: g for g in self.generators}
        self._gen_set = set(self.generators)
        d: dict[Generator, Element] = {}
        if differential:
            for key, img in differential.items():
                g = self.generator(key)
                if not isinstance(img, Element):
                    raise InvalidModel(f"differential image of {g.name} is not an Element")
                foreign = img.generators_used() - self._gen_set
                if foreign:
                    raise GeneratorMismatch(
                        f"image of {g.name} uses foreign generators: "
                        + ", ".join(sorted(x.name for x in foreign)))
                if img:
                    d[g] = img
        self.differential: dict[Generator, Element] = d
        self._report: ModelReport | None = None
        self._dy_basis = None  # lazy Groebner cache, see ellipticity module

    # -- lookups --------------------------------------------------------

    def generator(self, key: GenKey) -> Generator:
        if isinstance(key, Generator):
            if key not in self._gen_set:
                raise UnknownGenerator(f"generator {key!r} does not belong to model {self.name!r}")
            return key
        g = self._by_name.get(key)
        if g is None:
            raise UnknownGenerator(f"unknown generator {key!r} in model {self.name!r}")
        return g

    def element(self, name: str) -> Element:
        return Element.from_generator(self.generator(name))

    def elements(self) -> dict[str, Element]:
        """Name -> generator element map, handy for building expressions."""
        return {g.name: Element.from_generator(g) for g in self.generators}

    @property
    def even_generators(self) -> list[Generator]:
        return [g for g in self.generators if g.is_even]

    @property
    def odd_generators(self) -> list[Generator]:
        return [g for g in self.generators if not g.is_even]

    def dim_v(self) -> int:
        return len(self.generators)

    # -- differential ----------------------------------------------------

    def d_generator(self, g: GenKey) -> Element:
        return self.differential.get(self.generator(g), Element.zero())

    def d(self, e: Element | Generator) -> Element:
        """Extend the differential to any element as a degree +1 derivation."""
        if isinstance(e, Generator):
            return self.d_generator(e)
        foreign = e.generators_used() - self._gen_set
        if foreign:
            raise GeneratorMismatch(
                "element uses foreign generators: " + ", ".join(sorted(x.name for x in foreign)))
        total = Element.zero()
        for mon, coeff in e._t.items():
            factors = list(mon.factors())
            prefix_degree = 0
            for i, (g, exp) in enumerate(factors):
                dg = self.differential.get(g)
                if dg is not None:
                    sign = -1 if prefix_degree % 2 else 1
                    pre = Element._from_dict({Monomial.make(
                        [(h, x) for h, x in factors[:i] if h.is_even],
                        [h for h, _ in factors[:i] if not h.is_even]): Fraction(1)})
                    rest = factors[i + 1:]
                    mid = [(g, exp - 1)] if g.is_even and exp > 1 else []
                    post = Element._from_dict({Monomial.make(
                        mid + [(h, x) for h, x in rest if h.is_even],
                        [h for h, _ in rest if not h.is_even]): Fraction(1)})
                    mult = exp if g.is_even else 1
                    total = total + pre * dg * post * (coeff * sign * mult)
                prefix_degree += g.degree * exp
        return total

    # -- structural predicates --------------------------------------------

    def is_pure(self) -> bool:
        """No differential on even generators; odd images in the even subalgebra."""
        for g, img in self.differential.items():
            if g.is_even and img:
                return False
            if not img.is_even_polynomial():
                return False
        return True

    def differential_length(self) -> DifferentialLength:
        lengths: set[int] = set()
        for img in self.differential.values():
            lengths.update(img.word_lengths())
        if not lengths:
            return DifferentialLength.all_zero()
        if len(lengths) == 1:
            return DifferentialLength.constant(lengths.pop())
        return DifferentialLength.mixed(lengths)

    def chi_pi(self) -> int:
        """Homotopy characteristic: dim V^even - dim V^odd."""
        return len(self.even_generators) - len(self.odd_generators)

    # -- validation --------------------------------------------------------

    def validate(self) -> ModelReport:
        """Check degrees, minimality and d^2 = 0; raises on the first failure."""
        if self._report is not None:
            return self._report
        for g in self.generators:
            img = self.differential.get(g)
            if img is None or not img:
                continue
            deg = img.degree()
            if not isinstance(deg, int) or deg != g.degree + 1:
                raise DegreeMismatch(
                    g.name,
                    f"d({g.name}) must be homogeneous of degree {g.degree + 1}, got degree {deg}")
            if min(img.word_lengths()) < 2:
                raise NotMinimal(
                    g.name, f"d({g.name}) has a linear part; minimal models need word length >= 2")
        for g in self.generators:
            img = self.differential.get(g)
            if img is None:
                continue
            if self.d(img):
                raise DifferentialNotSquareZero(
                    g.name, f"d^2({g.name}) = {self.d(img).render()} is nonzero")
        self._report = ModelReport(
            name=self.name,
            pure=self.is_pure(),
            minimal=True,
            length=self.differential_length(),
            chi_pi=self.chi_pi(),
            n_even=len(self.even_generators),
            n_odd=len(self.odd_generators),
        )
        return self._report

    # -- invariants of elliptic models --------------------------------------

    def formal_dimension(self) -> int:
        """Top nonzero cohomology degree of a pure elliptic model.

        Computed as the sum of odd generator degrees minus sum of (even
        degree - 1).  Requires ellipticity; validated here.
        """
        self.validate()
        if not self.is_pure():
            raise NotPure(f"model {self.name!r} is not pure")
        from .ellipticity import is_elliptic_pure
        if not is_elliptic_pure(self):
            raise NotElliptic(f"model {self.name!r} is not elliptic")
        odd = sum(g.degree for g in self.odd_generators)
        even = sum(g.degree - 1 for g in self.even_generators)
        return odd - even

    # -- derived models ------------------------------------------------------

    def _resolve_set(self, keys: Iterable[GenKey]) -> set[Generator]:
        return {self.generator(k) for k in keys}

    def quotient_model(self, kill: Iterable[GenKey], name: str | None = None) -> "SullivanModel":
        """Quotient by the ideal generated by the killed generators.

        Requires that ideal to be closed under d: every killed generator's
        image must die once killed generators are set to zero.  Surviving
        generators keep their positions; their images are the original ones
        with killed generators substituted by zero.
        """
        killed = self._resolve_set(kill)
        for g in sorted(killed, key=lambda g: g.index):
            img = self.differential.get(g)
            if img is not None and img.substitute_zero(killed):
                raise NotDifferentialIdeal(
                    f"cannot kill {g.name}: d({g.name}) = {img.render()} "
                    "does not lie in the ideal generated by the killed set")
        survivors = [g for g in self.generators if g not in killed]
        diff = {}
        for g in survivors:
            img = self.differential.get(g)
            if img is not None:
                new = img.substitute_zero(killed)
                if new:
                    diff[g] = new
        out = SullivanModel(survivors, diff,
                            name=name or f"{self.name}/({','.join(sorted(g.name for g in killed))})")
        try:
            out.validate()
        except Exception as exc:  # closure implies d^2 = 0; anything else is a bug
            raise VerificationFailed(f"quotient model failed validation: {exc}") from exc
        return out

    def sub_model(self, keep: Iterable[GenKey], name: str | None = None) -> "SullivanModel":
        """Sub-model on a d-closed subset of generators."""
        kept = self._resolve_set(keep)
        for g in sorted(kept, key=lambda g: g.index):
            img = self.differential.get(g)
            if img is None:
                continue
            outside = img.generators_used() - kept
            if outside:
                raise NotClosedUnderDifferential(
                    f"d({g.name}) = {img.render()} uses generators outside the subset: "
                    + ", ".join(sorted(x.name for x in outside)))
        survivors = [g for g in self.generators if g in kept]
        diff = {g: self.differential[g] for g in survivors if g in self.differential}
        return SullivanModel(survivors, diff,
                             name=name or f"{self.name}|({','.join(sorted(g.name for g in kept))})")

    # -- bases ---------------------------------------------------------------

    def basis_of_degree(self, degree: int) -> list[Monomial]:
        return enumerate_basis(self.generators, degree)

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"SullivanModel({self.name!r}; {gens})"


def apply_differential(model: SullivanModel, e: Element) -> Element:
    """Functional spelling of ``model.d(e)``: the degree +1 derivation
    extending the generator assignments with the graded Leibniz rule."""
    return model.d(e)


def build_model(pairs: Sequence[tuple[str, int]],
                diffs: Mapping[str, object] | None = None,
                name: str = "model") -> SullivanModel:
    """Convenience constructor.

    ``pairs`` lists (name, degree); ``diffs`` maps odd generator names to
    differential images given either as Elements over the created generators
    or as callables receiving the name -> Element environment.
    """
    gens = make_generators(pairs)
    env = {g.name: Element.from_generator(g) for g in gens}
    d: dict[str, Element] = {}
    if diffs:
        for nm, img in diffs.items():
            if img is None:
                continue
            d[nm] = img(env) if callable(img) else img
    return SullivanModel(gens, d, name=name)
