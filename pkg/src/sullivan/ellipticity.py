"""Ellipticity tests, nilpotency exponents, and exactness certificates.

For a pure model the criterion is algebraic: the even subalgebra modulo the
ideal generated by the odd generators' differentials must be a
finite-dimensional vector space.  Non-pure models are handled through their
pure projection (drop every term of an odd generator's differential that
contains an odd factor); that projection is elliptic exactly when the
original model is.

Ellipticity makes every even generator nilpotent in the quotient, and the
smallest exponent landing a power inside the differential ideal comes with a
checkable certificate: an element whose differential is exactly that power.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, Generator, enumerate_basis
from .errors import (
    NotElliptic,
    NotExact,
    NotPure,
    OddGeneratorPresent,
    VerificationFailed,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    member,
    quotient_dimension,
    quotient_is_finite_dimensional,
)
from .model import SullivanModel


def pure_projection_images(model: SullivanModel) -> list[Element]:
    """Even-part projections of the odd generators' differentials, in order.

    For a pure model this is just the list of differentials.  Zero images are
    kept so positions line up with ``model.odd_generators``.
    """
    out = []
    for g in model.odd_generators:
        img = model.differential.get(g, Element.zero())
        even_terms = {m: c for m, c in img.items() if not m.odd}
        out.append(Element(even_terms))
    return out


def differential_ideal_basis(model: SullivanModel) -> GroebnerBasis:
    """Groebner basis of the pure-projection differential ideal, cached."""
    if model._dy_basis is None:
        model.validate()
        model._dy_basis = buchberger(pure_projection_images(model),
                                     model.even_generators)
    return model._dy_basis


def is_elliptic(model: SullivanModel) -> bool:
    """Whether the model has finite-dimensional cohomology.

    Decided on the pure projection: the quotient of the even subalgebra by
    the projected differentials must be finite-dimensional.
    """
    model.validate()
    gb = differential_ideal_basis(model)
    result = quotient_is_finite_dimensional(gb)
    if model._report is not None:
        model._report.elliptic = result
    return result


def is_elliptic_pure(model: SullivanModel) -> bool:
    """Ellipticity test restricted to pure models; raises NotPure otherwise."""
    model.validate()
    if not model.is_pure():
        raise NotPure(f"model {model.name!r} is not pure")
    return is_elliptic(model)


def nilpotency_exponent(model: SullivanModel, generator) -> int:
    """Least N with the generator's N-th power inside the differential ideal.

    Defined for even generators of pure elliptic models.  Bounded by the
    dimension of the quotient ring, so the search always terminates.
    """
    g = model.generator(generator)
    if not g.is_even:
        raise OddGeneratorPresent(f"generator {g.name} has odd degree")
    model.validate()
    if not model.is_pure():
        raise NotPure(f"model {model.name!r} is not pure")
    gb = differential_ideal_basis(model)
    if not quotient_is_finite_dimensional(gb):
        raise NotElliptic(f"model {model.name!r} is not elliptic")
    cap = quotient_dimension(gb) + 1
    x = Element.from_generator(g)
    for n in range(1, cap + 1):
        if member(x**n, gb):
            return n
    raise VerificationFailed(
        f"no power of {g.name} up to {cap} lies in the differential ideal")


@dataclass
class ExactnessCertificate:
    """Witness that a generator power is a coboundary.

    ``d(witness) = power`` where ``power`` is the generator raised to
    ``exponent``; checkable by anyone with the model.
    """

    generator: Generator
    exponent: int
    witness: Element
    power: Element

    def verify(self, model: SullivanModel) -> bool:
        return model.d(self.witness) == self.power

    def to_dict(self) -> dict:
        return {
            "generator": self.generator.name,
            "exponent": self.exponent,
            "witness": self.witness.render(),
            "boundary": self.power.render(),
        }


def exactness_certificate(model: SullivanModel, generator,
                          exponent: int | None = None) -> ExactnessCertificate:
    """Certificate that the least nilpotent power of a generator is exact.

    Membership cofactors over the differential images are turned into an
    element whose differential is the power; the identity is re-verified
    before returning.
    """
    g = model.generator(generator)
    n = nilpotency_exponent(model, g) if exponent is None else exponent
    gb = differential_ideal_basis(model)
    x = Element.from_generator(g)
    power = x**n
    ok, cofs = member(power, gb, cofactors=True)
    if not ok:
        raise NotExact(
            f"{g.name}^{n} does not lie in the differential ideal")
    witness = Element.zero()
    for c, y in zip(cofs, model.odd_generators):
        witness = witness + c * Element.from_generator(y)
    cert = ExactnessCertificate(g, n, witness, power)
    if not cert.verify(model):
        raise VerificationFailed(
            f"certificate for {g.name}^{n} failed the differential check")
    return cert


def all_nilpotency_exponents(model: SullivanModel) -> dict[str, int]:
    out = {}
    for g in model.even_generators:
        out[g.name] = nilpotency_exponent(model, g)
    if model._report is not None:
        model._report.exponents = dict(out)
    return out


# -- cohomology ranks (exact, degreewise) -------------------------------------

def _rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank of a sparse matrix given as rows of column->value maps."""
    pivots: list[tuple[int, dict[int, Fraction]]] = []
    rank = 0
    for row in rows:
        r = dict(row)
        for col, prow in pivots:
            c = r.get(col)
            if not c:
                continue
            for k, v in prow.items():
                nv = r.get(k, Fraction(0)) - c * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            continue
        col = min(r)
        inv = Fraction(1) / r[col]
        r = {k: v * inv for k, v in r.items()}
        pivots.append((col, r))
        rank += 1
    return rank


def cohomology_dims(model: SullivanModel, up_to: int) -> list[int]:
    """Dimensions of the cohomology in degrees 0 through up_to, as a list.

    Works for any valid model (pure or not): ranks of the differential on
    degreewise monomial bases, over exact rationals.
    """
    if up_to < 0:
        return []
    model.validate()
    gens = model.generators
    bases = [enumerate_basis(gens, k) for k in range(up_to + 2)]
    index = [
        {m: i for i, m in enumerate(b)}
        for b in bases
    ]
    ranks = []
    for k in range(up_to + 1):
        rows = []
        col_of = index[k + 1]
        for m in bases[k]:
            img = model.d(Element({m: Fraction(1)}))
            if not img:
                continue
            rows.append({col_of[mm]: c for mm, c in img.items()})
        ranks.append(_rank(rows))
    out = []
    for k in range(up_to + 1):
        n_k = len(bases[k])
        rank_prev = ranks[k - 1] if k > 0 else 0
        out.append(n_k - ranks[k] - rank_prev)
    return out
