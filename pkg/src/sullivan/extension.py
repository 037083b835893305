"""Construction and verification of F0-basis extensions.

An F0-model is a pure elliptic model whose homotopy characteristic vanishes;
equivalently the odd generators' differentials form a regular sequence in the
even subalgebra.  For a pure elliptic model with constant differential length
this module constructs an F0-basis extension: a sub-dga on all even
generators plus a new odd basis (rational combinations of the original odd
generators) whose differentials are a regular sequence.

The construction recurses stage by stage.  Each stage isolates the even
generators of minimal degree together with the odd generators small enough to
hit them, picks a regular set of odd combinations there, kills the stage, and
continues on the quotient.  Chosen combinations lift to the original model
verbatim: differentials of odd generators live in the even subalgebra, so
they are unaffected by killing odd generators, and killing the lower even
generators only shortens them.

Every output is certified after the fact: the full differential sequence is
re-checked for regularity over all even generators, and each even generator
gets an exactness certificate in the extension model.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .algebra import Element, Generator, enumerate_basis
from .ellipticity import (
    ExactnessCertificate,
    differential_ideal_basis,
    exactness_certificate,
    is_elliptic_pure,
)
from .errors import (
    ApplicabilityError,
    InvalidInput,
    NotElliptic,
    NotPure,
    NonConstantLength,
    SearchExhausted,
    SearchSpaceTooLarge,
    VerificationFailed,
)
from .groebner import (
    buchberger,
    quotient_dimension,
    quotient_is_finite_dimensional,
    regular_sequence_failure,
)
from .model import SullivanModel


# -- small exact linear algebra helpers ---------------------------------------

def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    lead = 0
    ncols = len(m[0]) if m else 0
    for r in range(len(m)):
        while lead < ncols:
            pr = next((i for i in range(r, len(m)) if m[i][lead] != 0), None)
            if pr is None:
                lead += 1
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = Fraction(1) / m[r][lead]
            m[r] = [v * inv for v in m[r]]
            for i in range(len(m)):
                if i != r and m[i][lead] != 0:
                    c = m[i][lead]
                    m[i] = [a - c * b for a, b in zip(m[i], m[r])]
            pivots.append(lead)
            lead += 1
            break
    m = [row for row in m if any(row)]
    return m, pivots


def _coefficient_rows(elements: Sequence[Element],
                      odd_gens: Sequence[Generator]) -> list[list[Fraction]]:
    cols = {g: i for i, g in enumerate(odd_gens)}
    rows = []
    for e in elements:
        lin = e.odd_linear_part()
        if lin is None:
            raise InvalidInput(
                f"element {e.render()} is not a linear combination of odd generators")
        row = [Fraction(0)] * len(odd_gens)
        for g, c in lin.items():
            if g not in cols:
                raise InvalidInput(
                    f"element {e.render()} uses {g.name}, not an odd generator here")
            row[cols[g]] = c
        rows.append(row)
    return rows


def _subspace_signature(rows: list[list[Fraction]]):
    red, _ = _rref(rows)
    return tuple(tuple(r) for r in red)


# -- first stage ---------------------------------------------------------------

@dataclass
class FirstStage:
    """The bottom slice of a pure elliptic constant-length model.

    ``evens`` are the even generators of minimal degree; ``bounded_odds`` the
    odd generators of degree at most length*|min even| - 1, split into
    ``active`` (nonzero differential, necessarily of that exact top degree)
    and ``inert`` (zero differential).  ``stage_model`` is the sub-model they
    span, itself pure and elliptic.
    """

    model: SullivanModel
    length: int
    evens: tuple[Generator, ...]
    bounded_odds: tuple[Generator, ...]
    active: tuple[Generator, ...]
    inert: tuple[Generator, ...]
    stage_model: SullivanModel

    def active_images(self) -> list[Element]:
        return [self.model.differential[g] for g in self.active]

    def to_dict(self) -> dict:
        return {
            "evens": [g.name for g in self.evens],
            "bounded_odds": [g.name for g in self.bounded_odds],
            "active": [g.name for g in self.active],
            "inert": [g.name for g in self.inert],
            "length": self.length,
        }


def first_stage(model: SullivanModel) -> FirstStage:
    """Split off the minimal-degree slice of a pure elliptic constant-length model.

    The slice consists of the minimal-degree even generators together with
    every odd generator of degree at most length*|minimal even degree| - 1.
    Degree bookkeeping forces each such odd generator with nonzero
    differential to sit in the top degree of that range, with its image a
    polynomial in the slice's even generators; both facts are re-checked.
    """
    model.validate()
    if not model.is_pure():
        raise NotPure(f"model {model.name!r} is not pure")
    if not model.even_generators:
        raise InvalidInput(
            f"model {model.name!r} has no even generators; no first stage exists")
    if not is_elliptic_pure(model):
        raise NotElliptic(f"model {model.name!r} is not elliptic")
    length = model.differential_length()
    if not length.is_constant:
        raise NonConstantLength(
            f"model {model.name!r} has differential length {length.render()}")
    l = length.value
    evens = model.even_generators
    base_degree = evens[0].degree
    stage_evens = tuple(g for g in evens if g.degree == base_degree)
    bound = l * base_degree - 1
    bounded = tuple(g for g in model.odd_generators if g.degree <= bound)
    active = tuple(g for g in bounded if model.differential.get(g))
    inert = tuple(g for g in bounded if not model.differential.get(g))
    even_set = set(stage_evens)
    for g in active:
        img = model.differential[g]
        if g.degree != bound:
            raise VerificationFailed(
                f"{g.name} has degree {g.degree}, expected {bound} for a nonzero "
                "differential in the first stage")
        if not img.generators_used() <= even_set:
            raise VerificationFailed(
                f"d({g.name}) leaves the minimal-degree even subalgebra")
    sub = model.sub_model(stage_evens + bounded, name=f"{model.name}/stage")
    if not is_elliptic_pure(sub):
        raise VerificationFailed(
            f"first stage of {model.name!r} is not elliptic; this contradicts "
            "ellipticity of the whole model")
    return FirstStage(model, l, stage_evens, bounded, active, inert, sub)


# -- regular subsequence search -------------------------------------------------

@dataclass
class RegularChoice:
    """A successful pick of stage combinations with regular differentials."""

    elements: list[Element]
    images: list[Element]
    subset: tuple[str, ...] | None  # generator names when the pick is a plain subset
    height: int
    tried: int


def _primitive_vectors(n: int, height: int) -> list[tuple[int, ...]]:
    """Primitive integer vectors with max |entry| == height, first nonzero > 0."""
    out = []
    for v in itertools.product(range(-height, height + 1), repeat=n):
        if max(abs(a) for a in v) != height:
            continue
        nz = next((a for a in v if a), None)
        if nz is None or nz < 0:
            continue
        g = 0
        for a in v:
            g = gcd(g, abs(a))
        if g == 1:
            out.append(v)
    return out


def _vector_pool(n: int, up_to_height: int) -> list[tuple[int, ...]]:
    pool: list[tuple[int, ...]] = []
    for h in range(1, up_to_height + 1):
        pool.extend(_primitive_vectors(n, h))
    return pool


def _combine(vec: Sequence[int], gens: Sequence[Generator]) -> Element:
    acc = Element.zero()
    for c, g in zip(vec, gens):
        if c:
            acc = acc + Fraction(c) * Element.from_generator(g)
    return acc


def find_homogeneous_regular_subset(stage: FirstStage, seed: int = 0,
                                    max_candidates: int = 50000) -> RegularChoice:
    """Pick |evens| odd combinations of the stage with regular differentials.

    Search order: plain subsets of the active odd generators in declaration
    order, then tuples of primitive integer combinations with coefficients
    bounded by 2, then widening bound.  Each candidate subspace is tested
    once (reduced-echelon signatures deduplicate) via finite-dimensionality
    of the quotient by the candidate differentials, which for |evens| many
    elements is equivalent to regularity.  Deterministic for a fixed seed;
    the seed only reorders candidates within one coefficient-bound batch.

    Existence is guaranteed for stages of elliptic models, so exhausting the
    candidate budget raises SearchExhausted as a defensive error.
    """
    p = len(stage.evens)
    active = stage.active
    images = {g: stage.model.differential[g] for g in active}
    tried = 0
    if p == 0:
        return RegularChoice([], [], (), 0, 0)

    # rank of the image span decides feasibility up front
    img_rank = _image_rank(stage)
    if img_rank < p:
        raise SearchExhausted(
            f"differential images of the first stage span only {img_rank} "
            f"dimensions, fewer than the {p} required")

    def test(candidate_images: list[Element]) -> bool:
        gb = buchberger(candidate_images, stage.evens)
        return quotient_is_finite_dimensional(gb)

    # plain subsets, declaration order
    for combo in itertools.combinations(range(len(active)), p):
        tried += 1
        if tried > max_candidates:
            raise SearchExhausted(
                f"no regular pick within {max_candidates} candidates")
        imgs = [images[active[i]] for i in combo]
        if test(imgs):
            els = [Element.from_generator(active[i]) for i in combo]
            return RegularChoice(els, imgs, tuple(active[i].name for i in combo),
                                 0, tried)

    seen: set = set()
    for combo in itertools.combinations(range(len(active)), p):
        vecs = []
        for i in combo:
            row = [Fraction(0)] * len(active)
            row[i] = Fraction(1)
            vecs.append(row)
        seen.add(_subspace_signature(vecs))

    # combination candidates never exist with a single active generator per slot
    if len(active) == p:
        raise SearchExhausted(
            "the only candidate subset fails the regularity test and the span "
            "admits no other subspaces")

    rng = random.Random(seed)
    work = 0
    work_budget = 50 * max_candidates
    height = 2  # initial coefficient bound per the widening schedule
    while True:
        batch: list[list[tuple[int, ...]]] = []
        pool = _vector_pool(len(active), height)
        budget = max_candidates - tried
        for rows_idx in itertools.product(range(len(pool)), repeat=p):
            work += 1
            if work > work_budget:
                raise SearchExhausted(
                    f"candidate enumeration stalled after {work} steps")
            vectors = [pool[i] for i in rows_idx]
            if max(abs(c) for v in vectors for c in v) != height:
                continue  # covered by a smaller bound
            frac_rows = [[Fraction(c) for c in v] for v in vectors]
            sig = _subspace_signature(frac_rows)
            if len(sig) < p or sig in seen:
                continue
            seen.add(sig)
            batch.append(vectors)
            if len(batch) > budget:
                break
        rng.shuffle(batch)
        for vectors in batch:
            tried += 1
            if tried > max_candidates:
                raise SearchExhausted(
                    f"no regular pick within {max_candidates} candidates")
            imgs = [_image_combination(v, active, images) for v in vectors]
            if test(imgs):
                els = [_combine(v, active) for v in vectors]
                return RegularChoice(els, imgs, None, height, tried)
        height += 1


def _image_combination(vec: Sequence[int], odds: Sequence[Generator],
                       images: dict[Generator, Element]) -> Element:
    acc = Element.zero()
    for c, g in zip(vec, odds):
        if c:
            acc = acc + Fraction(c) * images[g]
    return acc


def _image_rank(stage: FirstStage) -> int:
    """Rank of the span of the active differentials, over the monomial basis."""
    if not stage.active:
        return 0
    degree = stage.active[0].degree + 1
    basis = enumerate_basis(stage.evens, degree)
    cols = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in stage.active:
        row = [Fraction(0)] * len(basis)
        for mon, c in stage.model.differential[g].items():
            row[cols[mon]] = c
        rows.append(row)
    red, pivots = _rref(rows)
    return len(pivots)


# -- extension construction ------------------------------------------------------

@dataclass
class StageRecord:
    """One level of the recursion, for the trace log."""

    level: int
    evens: tuple[str, ...]
    active: tuple[str, ...]
    inert: tuple[str, ...]
    chosen: tuple[str, ...]  # rendered combinations
    killed_odd: tuple[str, ...]
    survivors: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "evens": list(self.evens),
            "active": list(self.active),
            "inert": list(self.inert),
            "chosen": list(self.chosen),
            "killed_odd": list(self.killed_odd),
            "survivors": list(self.survivors),
        }


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class VerificationReport:
    """Outcome of the F0-extension checks, in check order."""

    passed: bool
    checks: list[CheckResult]
    first_failure: str | None = None
    failing_index: int | None = None
    witness: Element | None = None
    regular: bool | None = None
    finite_dimensional: bool | None = None
    quotient_dim: int | None = None

    def to_dict(self) -> dict:
        out = {
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "first_failure": self.first_failure,
        }
        if self.failing_index is not None:
            out["failing_index"] = self.failing_index
        if self.witness is not None:
            out["witness"] = self.witness.render()
        if self.regular is not None:
            out["regular"] = self.regular
        if self.finite_dimensional is not None:
            out["finite_dimensional"] = self.finite_dimensional
        if self.quotient_dim is not None:
            out["quotient_dimension"] = self.quotient_dim
        return out


@dataclass
class ExtensionResult:
    """A verified F0-basis extension of a pure elliptic constant-length model."""

    model: SullivanModel
    odd_basis: list[Element]
    odd_degrees: list[int]
    extension: SullivanModel
    certificates: list[ExactnessCertificate]
    trace: list[StageRecord]
    verification: VerificationReport

    def to_dict(self) -> dict:
        return {
            "model": self.model.name,
            "z_odd": [
                {"element": e.render(), "degree": d}
                for e, d in zip(self.odd_basis, self.odd_degrees)
            ],
            "certificates": [c.to_dict() for c in self.certificates],
            "trace": [s.to_dict() for s in self.trace],
            "verification": self.verification.to_dict(),
        }


def extension_model(model: SullivanModel, odd_basis: Sequence[Element],
                    name: str | None = None) -> SullivanModel:
    """The sub-model on all even generators plus the given odd combinations.

    Each combination becomes a fresh odd generator whose differential is the
    combination's original differential, a polynomial in the original even
    generators.
    """
    evens = model.even_generators
    taken = {g.name for g in evens}
    new_gens: list[Generator] = list(evens)
    diffs: dict[Generator, Element] = {}
    next_index = max((g.index for g in evens), default=-1) + 1
    for k, u in enumerate(odd_basis):
        lin = u.odd_linear_part()
        if lin is None or not lin:
            raise InvalidInput(
                f"odd basis entry {u.render()} is not a combination of odd generators")
        deg = u.degree()
        zname = f"z{k + 1}"
        while zname in taken:
            zname += "_"
        taken.add(zname)
        z = Generator(zname, deg, next_index)
        next_index += 1
        new_gens.append(z)
        diffs[z] = model.d(u)
    return SullivanModel(new_gens, diffs,
                         name=name or f"{model.name}/extension")


def verify_f0_extension(model: SullivanModel, odd_basis: Sequence[Element]) -> VerificationReport:
    """Check a purported F0 odd basis; failures are report outcomes.

    Checks run in order: homogeneity of every element, count against the
    even generators, closure of the differentials inside the even
    subalgebra, then the regular-sequence property.  Regularity is decided
    twice, by sequential zero-divisor tests (which produce a failing index
    and witness) and by finite-dimensionality of the quotient; when the count
    is right the two must agree.
    """
    model.validate()
    checks: list[CheckResult] = []
    evens = model.even_generators
    even_set = set(evens)

    homogeneous = True
    detail = ""
    for e in odd_basis:
        lin = e.odd_linear_part()
        if lin is None or not e:
            raise InvalidInput(
                f"{e.render()} is not a nonzero combination of odd generators")
        if not isinstance(e.degree(), int):
            degs = sorted({g.degree for g in lin})
            homogeneous = False
            detail = f"{e.render()} mixes degrees {degs}"
            break
    checks.append(CheckResult("homogeneous", homogeneous, detail))

    count_ok = len(odd_basis) == len(evens)
    checks.append(CheckResult(
        "count", count_ok,
        f"{len(odd_basis)} elements for {len(evens)} even generators"))

    images = [model.d(e) for e in odd_basis]
    closure_ok = all(img.generators_used() <= even_set for img in images)
    checks.append(CheckResult(
        "closure", closure_ok,
        "" if closure_ok else "some differential leaves the even subalgebra"))

    report = VerificationReport(passed=False, checks=checks)

    if closure_ok:
        failure = regular_sequence_failure(images, evens)
        report.regular = failure is None
        if failure is not None:
            report.failing_index, report.witness = failure
            checks.append(CheckResult(
                "regular_sequence", False,
                f"element {failure[0]} is a zero divisor; witness {failure[1].render()}"))
        else:
            checks.append(CheckResult("regular_sequence", True, ""))
        gb = buchberger(images, evens)
        report.finite_dimensional = quotient_is_finite_dimensional(gb)
        if report.finite_dimensional:
            report.quotient_dim = quotient_dimension(gb)
        checks.append(CheckResult(
            "finite_dimensional", bool(report.finite_dimensional),
            f"quotient dimension {report.quotient_dim}"
            if report.finite_dimensional else ""))
        if count_ok and report.regular != report.finite_dimensional:
            raise VerificationFailed(
                "regular-sequence and finite-dimensionality tests disagree "
                "on a full-length candidate")

    report.passed = all(c.ok for c in checks)
    if not report.passed:
        report.first_failure = next(c.name for c in checks if not c.ok)
    return report


def f0_extend(model: SullivanModel, seed: int = 0,
              max_candidates: int = 50000) -> ExtensionResult:
    """Construct a verified F0-basis extension of a pure elliptic model.

    Recursion on the even generators: take the first stage, pick a regular
    set of odd combinations there, kill the stage's even generators together
    with pivot odd generators of the chosen span, and continue on the
    quotient.  Choices made in a quotient lift verbatim: the lifted elements
    keep their original differentials.

    The assembled odd basis is re-verified from scratch and each even
    generator receives an exactness certificate in the extension model.
    """
    model.validate()
    if not model.is_pure():
        raise NotPure(f"model {model.name!r} is not pure")
    if not is_elliptic_pure(model):
        raise NotElliptic(f"model {model.name!r} is not elliptic")
    length = model.differential_length()
    if length.kind == "mixed":
        raise NonConstantLength(
            f"model {model.name!r} has differential length {length.render()}")

    current = model
    chosen: list[Element] = []
    trace: list[StageRecord] = []
    level = 0
    while current.even_generators:
        level += 1
        try:
            stage = first_stage(current)
        except ApplicabilityError as ex:
            if level > 1:
                raise VerificationFailed(
                    f"stage {level} lost a structural property: {ex}") from ex
            raise
        choice = find_homogeneous_regular_subset(stage, seed=seed,
                                                 max_candidates=max_candidates)
        chosen.extend(choice.elements)
        rows = _coefficient_rows(choice.elements, current.odd_generators)
        _, pivot_cols = _rref(rows)
        pivot_gens = [current.odd_generators[i] for i in pivot_cols]
        survivors = [g for g in current.generators
                     if g not in set(stage.evens) and g not in set(pivot_gens)]
        trace.append(StageRecord(
            level=level,
            evens=tuple(g.name for g in stage.evens),
            active=tuple(g.name for g in stage.active),
            inert=tuple(g.name for g in stage.inert),
            chosen=tuple(e.render() for e in choice.elements),
            killed_odd=tuple(g.name for g in pivot_gens),
            survivors=tuple(g.name for g in survivors),
        ))
        current = current.quotient_model(
            list(stage.evens) + pivot_gens, name=f"{model.name}/level{level}")

    report = verify_f0_extension(model, chosen)
    if not report.passed:
        raise VerificationFailed(
            f"constructed odd basis failed the {report.first_failure} check")
    ext = extension_model(model, chosen)
    ext.validate()
    if ext.chi_pi() != 0:
        raise VerificationFailed("extension model has nonzero homotopy characteristic")
    if not is_elliptic_pure(ext):
        raise VerificationFailed("extension model is not elliptic")
    certificates = [exactness_certificate(ext, g) for g in model.even_generators]
    degrees = [e.degree() for e in chosen]
    return ExtensionResult(model, chosen, degrees, ext, certificates, trace, report)


# -- exhaustive homogeneous search ------------------------------------------------

@dataclass
class RejectionRecord:
    candidate: tuple[str, ...]
    reason: str
    witness: str | None = None
    failing_index: int | None = None

    def to_dict(self) -> dict:
        out = {"candidate": list(self.candidate), "reason": self.reason}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.failing_index is not None:
            out["failing_index"] = self.failing_index
        return out


@dataclass
class SearchOutcome:
    """Result of the exhaustive search for a homogeneous F0 odd basis."""

    found: list[Element] | None
    tried: int
    subset_complete: bool
    fully_exhaustive: bool
    rejected: list[RejectionRecord] = field(default_factory=list)
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "found": None if self.found is None
            else [e.render() for e in self.found],
            "tried": self.tried,
            "subset_complete": self.subset_complete,
            "fully_exhaustive": self.fully_exhaustive,
            "rejected": [r.to_dict() for r in self.rejected],
            "seed": self.seed,
        }


MAX_REJECTIONS_KEPT = 100


def exhaustive_homogeneous_search(model: SullivanModel, seed: int = 0,
                                  max_candidates: int = 20000) -> SearchOutcome:
    """Search every graded odd subspace of the right dimension for an F0 basis.

    Candidates are built degree by degree (homogeneity is free): first plain
    subsets of the odd generators in declaration order, then bases mixing
    integer combinations within single degrees, with coefficient bound
    widening.  The first candidate passing verify_f0_extension wins.  When
    every odd degree is one-dimensional the space is finite and exhausting it
    proves no homogeneous F0 basis exists; otherwise running past the budget
    raises SearchSpaceTooLarge.
    """
    model.validate()
    if not model.is_pure():
        raise NotPure(f"model {model.name!r} is not pure")
    if not is_elliptic_pure(model):
        raise NotElliptic(f"model {model.name!r} is not elliptic")
    p = len(model.even_generators)
    odds = model.odd_generators
    outcome = SearchOutcome(None, 0, False, False, seed=seed)

    def reject(names: tuple[str, ...], report: VerificationReport) -> None:
        if len(outcome.rejected) >= MAX_REJECTIONS_KEPT:
            return
        outcome.rejected.append(RejectionRecord(
            candidate=names,
            reason=report.first_failure or "unknown",
            witness=report.witness.render() if report.witness is not None else None,
            failing_index=report.failing_index,
        ))

    if p > len(odds):
        outcome.subset_complete = True
        outcome.fully_exhaustive = True
        return outcome
    if p == 0:
        outcome.found = []
        outcome.subset_complete = True
        return outcome

    by_degree: dict[int, list[Generator]] = {}
    for g in odds:
        by_degree.setdefault(g.degree, []).append(g)
    degrees = sorted(by_degree)
    sizes = [len(by_degree[d]) for d in degrees]
    seen: set = set()

    def graded_signature(parts: list[tuple[int, list[list[Fraction]]]]):
        return tuple((d, _subspace_signature(rows)) for d, rows in parts)

    for combo in itertools.combinations(odds, p):
        outcome.tried += 1
        if outcome.tried > max_candidates:
            raise SearchSpaceTooLarge(
                f"search budget of {max_candidates} candidates exceeded")
        candidate = [Element.from_generator(g) for g in combo]
        parts = []
        for d in degrees:
            group = by_degree[d]
            members = [g for g in combo if g.degree == d]
            if not members:
                continue
            rows = []
            for g in members:
                row = [Fraction(0)] * len(group)
                row[group.index(g)] = Fraction(1)
                rows.append(row)
            parts.append((d, rows))
        seen.add(graded_signature(parts))
        report = verify_f0_extension(model, candidate)
        if report.passed:
            outcome.found = candidate
            return outcome
        reject(tuple(g.name for g in combo), report)
    outcome.subset_complete = True

    # beyond subsets the space is nonempty only when some odd degree carries
    # two or more generators
    if all(s == 1 for s in sizes):
        outcome.fully_exhaustive = True
        return outcome

    assignments = [a for a in itertools.product(*(range(min(s, p) + 1) for s in sizes))
                   if sum(a) == p]
    assignments.sort(reverse=True)
    rng = random.Random(seed)
    work = 0
    work_budget = 50 * max_candidates
    height = 1
    while True:
        batch: list[list[Element]] = []
        budget = max_candidates - outcome.tried
        for a in assignments:
            pools = []
            for k_d, d in zip(a, degrees):
                if k_d == 0:
                    pools.append([()])
                    continue
                vecs = _vector_pool(sizes[degrees.index(d)], height)
                pools.append(list(itertools.product(range(len(vecs)), repeat=k_d)))
            for pick in itertools.product(*pools):
                work += 1
                if work > work_budget:
                    raise SearchSpaceTooLarge(
                        f"candidate enumeration stalled after {work} steps")
                elements: list[Element] = []
                parts = []
                rank_ok = True
                for k_d, d, rows_idx in zip(a, degrees, pick):
                    if k_d == 0:
                        continue
                    group = by_degree[d]
                    vecs = _vector_pool(len(group), height)
                    vectors = [vecs[i] for i in rows_idx]
                    frac_rows = [[Fraction(c) for c in v] for v in vectors]
                    if len(_subspace_signature(frac_rows)) < k_d:
                        rank_ok = False
                        break
                    parts.append((d, frac_rows))
                    for v in vectors:
                        elements.append(_combine(v, group))
                if not rank_ok:
                    continue
                sig = graded_signature(parts)
                if sig in seen:
                    continue
                seen.add(sig)
                batch.append(elements)
                if len(batch) > budget:
                    break
            if len(batch) > budget:
                break
        rng.shuffle(batch)
        for elements in batch:
            outcome.tried += 1
            if outcome.tried > max_candidates:
                raise SearchSpaceTooLarge(
                    f"search budget of {max_candidates} candidates exceeded")
            report = verify_f0_extension(model, elements)
            if report.passed:
                outcome.found = elements
                return outcome
            reject(tuple(e.render() for e in elements), report)
        height += 1
